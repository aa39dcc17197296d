//! Hitting set with subsets of size at most two, reduced to simultaneous
//! strong metric dimension of a tree family.
//!
//! For ground set `S = {v_1..v_n}` take a copy `S' = {w_1..w_n}` and one more
//! vertex `u`. Each subset `C_r` gives the tree `T_r`: a path `P_r`, with `u`
//! joined to its first vertex and the subset-related vertices joined to its
//! last one.
//!
//! * `C_r = {v_i}`: `P_r` runs through `(S - v_i) ∪ (S' - w_i)`; `v_i` and `w_i`
//!   hang off its end.
//! * `C_r = {v_i, v_j}`: `P_r` runs through `(S - {v_i, v_j}) ∪ S'`; `v_i` and
//!   `v_j` hang off its end.
//!
//! A hitting set of size `p` exists iff the family has a simultaneous strong
//! metric generator of size `p + 1`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::subsets_of_size;
use crate::dimension::{brute_force_simdim, simultaneous_strong_dimension};
use crate::graph::{GraphFamily, LabeledGraph, SubsetRole, Vertex, VertexSubset};
use crate::{Error, Result};

pub const HITTING_SET_LIMIT: usize = 20;

/// Ground set labels, subsets as ground indices, and a budget `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hsp2Instance {
    ground: Vec<String>,
    subsets: Vec<Vec<usize>>,
    budget: usize,
}

impl Hsp2Instance {
    pub fn new(ground: Vec<String>, subsets: Vec<Vec<usize>>, budget: usize) -> Result<Self> {
        let n = ground.len();
        if n == 0 {
            return Err(Error::InvalidParameter("empty ground set".into()));
        }
        LabeledGraph::edgeless(ground.iter().cloned())?;
        if subsets.is_empty() {
            return Err(Error::InvalidParameter("no subsets".into()));
        }
        let mut subsets = subsets;
        for c in &mut subsets {
            c.sort_unstable();
            c.dedup();
            if c.is_empty() || c.len() > 2 {
                return Err(Error::InvalidParameter(format!("subset sizes must be 1 or 2, got {}", c.len())));
            }
            if let Some(&v) = c.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if budget == 0 || budget > n {
            return Err(Error::InvalidParameter(format!("budget {budget} outside 1..={n}")));
        }
        Ok(Hsp2Instance { ground, subsets, budget })
    }

    /// Same as [`new`](Self::new) with subsets given by label.
    pub fn from_labels<S: AsRef<str>>(
        ground: Vec<String>,
        subsets: &[Vec<S>],
        budget: usize,
    ) -> Result<Self> {
        let index = |l: &str| ground.iter().position(|g| g == l).ok_or_else(|| Error::UnknownLabel(l.into()));
        let subsets = subsets
            .iter()
            .map(|c| c.iter().map(|l| index(l.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, subsets, budget)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn with_budget(self, budget: usize) -> Result<Self> {
        Self::new(self.ground, self.subsets, budget)
    }

    pub fn is_hitting_set(&self, set: &[usize]) -> bool {
        self.subsets.iter().all(|c| c.iter().any(|v| set.contains(v)))
    }
}

/// Ground set `v1..v4` with subsets `{v1, v2}`, `{v3}`, `{v2, v4}` and budget 2.
pub fn fig6_instance() -> Hsp2Instance {
    let ground = (1..=4).map(|i| format!("v{i}")).collect();
    Hsp2Instance::new(ground, alloc::vec![alloc::vec![0, 1], alloc::vec![2], alloc::vec![1, 3]], 2)
        .expect("valid instance")
}

/// `k` random subsets of size one or two over `v1..vn`. The budget is the
/// minimum hitting set size when that is cheap to find, else `n`.
pub fn random_hsp2_instance(n: usize, k: usize, seed: u64) -> Result<Hsp2Instance> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!("need n >= 1 and k >= 1, got n={n}, k={k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subsets = (0..k)
        .map(|_| {
            let size = if n == 1 { 1 } else { rng.gen_range(1..=2) };
            sample(&mut rng, n, size).into_vec()
        })
        .collect();
    let ground = (1..=n).map(|i| format!("v{i}")).collect();
    let inst = Hsp2Instance::new(ground, subsets, n)?;
    match brute_force_min_hitting_set(&inst) {
        Ok(h) => inst.with_budget(h.len()),
        Err(_) => Ok(inst),
    }
}

/// Order of the interior vertices of each path `P_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathOrder {
    /// Vertex index order: remaining `v`'s, then remaining `w`'s.
    #[default]
    Ascending,
    Reversed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub source: Hsp2Instance,
    /// Trees `T1..Tk` on `v_1..v_n, w_1..w_n, u` (in that index order).
    pub family: GraphFamily,
    pub ssd_budget: usize,
    /// `label_map[i] = (v_i, w_i)` as vertex indices.
    pub label_map: Vec<(Vertex, Vertex)>,
    pub u: Vertex,
}

pub fn reduce_hsp2(inst: &Hsp2Instance) -> Result<ReductionInstance> {
    reduce_hsp2_with(inst, PathOrder::Ascending)
}

fn fresh_label(taken: &[String], base: &str) -> String {
    let mut l = String::from(base);
    while taken.contains(&l) {
        l.push('\'');
    }
    l
}

pub fn reduce_hsp2_with(inst: &Hsp2Instance, order: PathOrder) -> Result<ReductionInstance> {
    let n = inst.ground.len();
    if n < 2 {
        return Err(Error::InvalidParameter("reduction needs a ground set of at least 2".into()));
    }
    let mut labels = inst.ground.clone();
    for i in 0..n {
        let w = fresh_label(&labels, &format!("{}'", inst.ground[i]));
        labels.push(w);
    }
    labels.push(fresh_label(&labels, "u"));
    let u = 2 * n;

    let members = inst
        .subsets
        .iter()
        .enumerate()
        .map(|(r, c)| {
            let (attached, skip): (Vec<Vertex>, Vec<Vertex>) = match c[..] {
                [i] => (alloc::vec![i, n + i], alloc::vec![i, n + i]),
                [i, j] => (alloc::vec![i, j], alloc::vec![i, j]),
                _ => unreachable!("validated subset size"),
            };
            let mut path: Vec<Vertex> = (0..2 * n).filter(|v| !skip.contains(v)).collect();
            if order == PathOrder::Reversed {
                path.reverse();
            }
            let mut edges: Vec<_> = path.windows(2).map(|w| (w[0], w[1])).collect();
            edges.push((u, path[0]));
            let last = path[path.len() - 1];
            edges.extend(attached.iter().map(|&a| (last, a)));
            LabeledGraph::from_index_edges(labels.iter().cloned(), &edges).map(|g| (format!("T{}", r + 1), g))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ReductionInstance {
        source: inst.clone(),
        family: GraphFamily::new(members)?,
        ssd_budget: inst.budget + 1,
        label_map: (0..n).map(|i| (i, n + i)).collect(),
        u,
    })
}

/// Minimum hitting set by enumeration in increasing size.
pub fn brute_force_min_hitting_set(inst: &Hsp2Instance) -> Result<VertexSubset> {
    let n = inst.ground.len();
    if n > HITTING_SET_LIMIT {
        return Err(Error::TooLarge { n, limit: HITTING_SET_LIMIT });
    }
    let masks: Vec<u64> = inst.subsets.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
    for k in 0..=n {
        if let Some(hit) = subsets_of_size(n, k).find(|&s| masks.iter().all(|&c| c & s != 0)) {
            let members = (0..n).filter(|&v| hit >> v & 1 == 1).collect();
            return Ok(VertexSubset::new(members, SubsetRole::HittingSet));
        }
    }
    unreachable!("the whole ground set hits every non-empty subset")
}

/// Outcome of the decision problems at one budget `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetCheck {
    pub p: usize,
    pub hitting_set_at_most_p: bool,
    pub sd_s_at_most_p_plus_1: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCheck {
    pub reduction: ReductionInstance,
    pub min_hitting_set: VertexSubset,
    pub sd_s: usize,
    pub sd_s_witness: VertexSubset,
    /// Whether the simultaneous dimension was cross-checked by enumeration.
    pub brute_forced: bool,
    pub per_budget: Vec<BudgetCheck>,
    /// `Sd_s = h* + 1`, and the iff holds at every budget.
    pub holds: bool,
}

pub fn verify_reduction(inst: &Hsp2Instance) -> Result<ReductionCheck> {
    verify_reduction_with(inst, PathOrder::Ascending, crate::dimension::DEFAULT_SIMDIM_ORACLE_LIMIT + 1)
}

/// Runs the reduction and both oracles. The family's dimension is always
/// computed by vertex cover, and also by enumeration when the family has at
/// most `oracle_limit` vertices.
pub fn verify_reduction_with(
    inst: &Hsp2Instance,
    order: PathOrder,
    oracle_limit: usize,
) -> Result<ReductionCheck> {
    let reduction = reduce_hsp2_with(inst, order)?;
    for (name, t) in reduction.family.iter() {
        if t.edge_count() + 1 != t.n() || !t.is_connected() {
            return Err(Error::InvariantViolation(format!("{name} is not a tree")));
        }
    }
    let hs = brute_force_min_hitting_set(inst)?;
    let exact = simultaneous_strong_dimension(&reduction.family)?;
    let brute_forced = reduction.family.n() <= oracle_limit;
    if brute_forced {
        let oracle = brute_force_simdim(&reduction.family, oracle_limit)?;
        if oracle.value != exact.value {
            return Err(Error::InvariantViolation(format!(
                "vertex cover gives {} but enumeration gives {}",
                exact.value, oracle.value
            )));
        }
    }
    let h = hs.len();
    let sd = exact.value;
    let per_budget: Vec<BudgetCheck> = (1..=inst.ground.len())
        .map(|p| BudgetCheck { p, hitting_set_at_most_p: h <= p, sd_s_at_most_p_plus_1: sd <= p + 1 })
        .collect();
    let holds = sd == h + 1 && per_budget.iter().all(|b| b.hitting_set_at_most_p == b.sd_s_at_most_p_plus_1);
    Ok(ReductionCheck {
        reduction,
        min_hitting_set: hs,
        sd_s: sd,
        sd_s_witness: exact.witness.subset,
        brute_forced,
        per_budget,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ground(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("v{i}")).collect()
    }

    fn fig6() -> Hsp2Instance {
        let i = Hsp2Instance::from_labels(ground(4), &[vec!["v1", "v2"], vec!["v3"], vec!["v2", "v4"]], 2)
            .unwrap();
        assert_eq!(i, fig6_instance());
        i
    }

    #[test]
    fn fig6_shape() {
        let r = reduce_hsp2(&fig6()).unwrap();
        assert_eq!(r.family.len(), 3);
        assert_eq!(r.family.n(), 9);
        assert_eq!(r.ssd_budget, 3);
        assert_eq!(r.family.labels()[4], "v1'");
        assert_eq!(r.family.labels()[8], "u");
        for t in r.family.members() {
            assert_eq!(t.edge_count(), 8);
            assert!(t.is_connected());
            let leaves: Vec<_> = (0..9).filter(|&v| t.degree(v) == 1).collect();
            assert_eq!(leaves.len(), 3);
            assert!(leaves.contains(&8));
        }
        // T2 for {v3}: path v1 v2 v4 w1 w2 w4, v3 and w3 at the far end.
        let t2 = &r.family.members()[1];
        assert!(t2.has_edge(8, 0));
        assert!(t2.has_edge(7, 2) && t2.has_edge(7, 6));
    }

    #[test]
    fn fig6_verifies() {
        let c = verify_reduction(&fig6()).unwrap();
        assert_eq!(c.min_hitting_set.len(), 2);
        assert_eq!(c.sd_s, 3);
        assert!(c.brute_forced);
        assert!(c.holds);
        let rev = verify_reduction_with(&fig6(), PathOrder::Reversed, 13).unwrap();
        assert!(rev.holds);
    }

    #[test]
    fn hitting_set_oracle() {
        let one = Hsp2Instance::new(ground(2), vec![vec![0]], 1).unwrap();
        assert_eq!(brute_force_min_hitting_set(&one).unwrap().members(), &[0]);
        let c = verify_reduction(&one).unwrap();
        assert_eq!((c.min_hitting_set.len(), c.sd_s), (1, 2));
        let disjoint = Hsp2Instance::new(ground(4), vec![vec![0], vec![1], vec![3]], 3).unwrap();
        assert_eq!(brute_force_min_hitting_set(&disjoint).unwrap().len(), 3);
    }

    #[test]
    fn random_instances() {
        for seed in 0..30 {
            let i = random_hsp2_instance(5, 4, seed).unwrap();
            assert_eq!(i, random_hsp2_instance(5, 4, seed).unwrap());
            assert_eq!(i.subsets().len(), 4);
            assert_eq!(brute_force_min_hitting_set(&i).unwrap().len(), i.budget());
            assert!(verify_reduction(&i).unwrap().holds);
        }
    }

    #[test]
    fn invalid_instances() {
        assert!(Hsp2Instance::new(ground(3), vec![vec![0, 1, 2]], 1).is_err());
        assert!(Hsp2Instance::new(ground(3), vec![vec![]], 1).is_err());
        assert!(Hsp2Instance::new(ground(3), vec![vec![5]], 1).is_err());
        assert!(Hsp2Instance::new(ground(3), vec![vec![0]], 4).is_err());
        let tiny = Hsp2Instance::new(vec!["x".to_string()], vec![vec![0]], 1).unwrap();
        assert!(matches!(reduce_hsp2(&tiny), Err(Error::InvalidParameter(_))));
    }
}
