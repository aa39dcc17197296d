mod support;

use proptest::prelude::*;
use simdim_core::bounds::*;
use simdim_core::dimension::simultaneous_strong_dimension;
use simdim_core::families::{
    make_complete, make_cycle, make_hypercube, make_random_connected_graph, make_shared_leaf_paths,
    make_star_clique_paths, petersen,
};
use simdim_core::{GraphFamily, LabeledGraph};

use support::*;

/// `W` induces a path in `g` with `leaf` at one end, from the definition.
fn induced_path_from(g: &LabeledGraph, w: &[usize], leaf: usize) -> bool {
    let inside = |v: usize| w.iter().filter(|&&x| g.has_edge(v, x)).count();
    let edges: usize = w.iter().map(|&v| inside(v)).sum::<usize>() / 2;
    let sub = g.induced_subgraph(w).unwrap();
    edges + 1 == w.len() && sub.is_connected() && w.iter().all(|&v| inside(v) <= 2) && inside(leaf) <= 1
}

/// Largest `|W| - 1` over sets inducing a shortest path from a common leaf.
fn oracle_rho(f: &GraphFamily) -> usize {
    let n = f.n();
    let dists: Vec<Dist> = f.members().iter().map(bfs_distances).collect();
    let mut best = 0;
    for mask in masks_by_size(n).into_iter().rev() {
        let w: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if w.len() <= best + 1 {
            break;
        }
        let ok = w.iter().any(|&leaf| {
            f.members().iter().zip(&dists).all(|(g, d)| {
                induced_path_from(g, &w, leaf)
                    && w.iter().map(|&x| d[leaf][x].unwrap()).max() == Some(w.len() - 1)
            })
        });
        if ok {
            best = w.len() - 1;
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_families_satisfy_every_bound(n in 3usize..=10, k in 1usize..=3, seed in any::<u64>()) {
        let f = random_family(n, k, seed);
        let r = verify_all_bounds(&f, DEFAULT_RHO_LIMIT).unwrap();
        prop_assert!(r.violations.is_empty(), "{:?}", r.violations);
        prop_assert!(r.rho.exact);
        prop_assert_eq!(r.rho.value, oracle_rho(&f));
        prop_assert!(rho_witness_valid(&f, &r.rho, RhoVariant::Geodesic).unwrap());
        let lb = rho_lower_bound(&f).unwrap();
        prop_assert!(lb.value <= r.rho.value);
        prop_assert!(rho_witness_valid(&f, &lb, RhoVariant::Geodesic).unwrap());
    }

    #[test]
    fn diameter_two_families_meet_the_clique_bound(n in 4usize..=10, k in 1usize..=3, seed in any::<u64>()) {
        let graphs: Vec<_> = (0..)
            .map(|i| make_random_connected_graph(n, 0.55, seed.wrapping_add(i)).unwrap())
            .filter(|g| g.distances().diameter() == 2)
            .take(k)
            .collect();
        let f = GraphFamily::from_graphs(graphs).unwrap();
        let r = verify_all_bounds(&f, DEFAULT_RHO_LIMIT).unwrap();
        prop_assert!(r.all_diameter_two);
        prop_assert_eq!(r.sd_s.value, n - r.twin_free_clique);
        prop_assert!(r.violations.is_empty(), "{:?}", r.violations);
    }
}

#[test]
fn twin_free_clique_matches_enumeration() {
    for seed in 0..60 {
        let f = random_family(8, 1 + seed as usize % 3, seed);
        let n = f.n();
        let expected = masks_by_size(n)
            .into_iter()
            .rev()
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
            .find(|x| {
                x.iter().all(|&a| {
                    x.iter().all(|&b| {
                        a == b
                            || f.members().iter().all(|g| {
                                g.has_edge(a, b) && g.closed_neighborhood(a) != g.closed_neighborhood(b)
                            })
                    })
                })
            })
            .unwrap()
            .len();
        assert_eq!(simultaneous_twin_free_clique_number(&f).unwrap().size, expected);
    }
}

#[test]
fn rho_sharp_examples() {
    let f = make_shared_leaf_paths(9, 4, 3).unwrap();
    let r = verify_all_bounds(&f, DEFAULT_RHO_LIMIT).unwrap();
    assert_eq!(r.rho.value, 8);
    assert_eq!(r.rho_bound, 1);
    assert_eq!(r.sd_s.value, 1);

    for (rr, m, k) in [(2, 3, 1), (3, 4, 2), (4, 3, 2)] {
        let f = make_star_clique_paths(rr, m, k, 5).unwrap();
        let r = verify_all_bounds(&f, DEFAULT_RHO_LIMIT).unwrap();
        assert_eq!(r.rho.value, m, "r={rr}, |V''|={m}");
        assert_eq!(r.sd_s.value, rr);
        assert_eq!(r.rho_bound, rr);
        assert!(r.violations.is_empty());
    }
}

#[test]
fn induced_reading_of_rho_is_not_a_bound() {
    let f = GraphFamily::singleton(make_cycle(5).unwrap());
    let induced = rho_with(&f, 16, RhoVariant::InducedPath).unwrap();
    let sd = simultaneous_strong_dimension(&f).unwrap().value;
    assert!(sd > f.n() - induced.value);
    assert!(sd <= f.n() - rho(&f, 16).unwrap().value);
}

#[test]
fn diameter_two_examples() {
    let f = GraphFamily::singleton(petersen());
    let r = verify_all_bounds(&f, DEFAULT_RHO_LIMIT).unwrap();
    assert_eq!(r.sd_s.value, 10 - r.twin_free_clique);
    assert!(r.violations.is_empty());
    let f = GraphFamily::singleton(make_complete(5).unwrap());
    assert_eq!(verify_all_bounds(&f, 16).unwrap().twin_free_clique, 1);
}

#[test]
fn heuristic_beyond_the_exact_limit() {
    let f = GraphFamily::singleton(make_hypercube(5).unwrap());
    let r = verify_all_bounds(&f, DEFAULT_RHO_LIMIT).unwrap();
    assert!(!r.rho.exact);
    assert_eq!(r.rho.value, 5);
    assert!(r.violations.is_empty());
}

#[test]
fn interior_of_trees_drops_leaves() {
    for seed in 0..40 {
        let t = simdim_core::families::make_random_tree(10, seed).unwrap();
        let r = interior_report(&t).unwrap();
        let kept: Vec<usize> = (0..10).filter(|&v| t.degree(v) > 1).collect();
        assert_eq!(r.interior_vertices, kept);
        let inner = t.induced_subgraph(&kept).unwrap();
        assert_eq!(r.beta_ring, oracle_cover(inner.n(), &inner.edges()));
    }
}
