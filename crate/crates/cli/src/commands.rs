use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use simdim_core::bounds::{interior_report, verify_all_bounds, DEFAULT_RHO_LIMIT};
use simdim_core::cover::min_vertex_cover;
use simdim_core::dimension::{
    brute_force_simdim, complement_pair_dimension, simultaneous_strong_dimension,
    strong_resolving_cover_number, vertex_cover_number, Method, DEFAULT_SIMDIM_ORACLE_LIMIT,
};
use simdim_core::families::{self as fam, Figure, FigureItem, PathOrder, TreeCase};
use simdim_core::strong::{boundary, simplicial_vertices, strong_resolving_graph, union_sr_graph};
use simdim_core::{Error, GraphFamily, LabeledGraph, Vertex};

use crate::files::{load_family, load_hsp2, write_family, write_hsp2, write_text};
use crate::report::{Fields, Format, Report};
use crate::{Cli, CliError, CliResult, Command, GenKind, Order, Outcome};

/// A family of `2n + 1` vertices stays within enumeration range for `|S| <= 6`.
const REDUCTION_ORACLE_LIMIT: usize = 13;

fn labels(f: &GraphFamily, vs: &[Vertex]) -> Value {
    json!(vs.iter().map(|&v| f.labels()[v].as_str()).collect::<Vec<_>>())
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::SrCover => "sr-cover",
        Method::BruteForce => "enumeration",
        Method::ResolvingCover => "resolving-cover",
    }
}

fn finish(report: Report, format: Format, failure: Option<String>) -> Outcome {
    let stdout = report.render(format);
    match failure {
        None => Outcome { stdout, stderr: String::new(), code: 0 },
        Some(msg) => Outcome { stdout, stderr: format!("error: {msg}\n"), code: 3 },
    }
}

pub fn execute(cli: &Cli) -> CliResult<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Dims { file, oracle } => dims(file, *oracle, cli.exact_limit, fmt),
        Command::Srgraph { file, graph } => srgraph(file, graph.as_deref(), fmt),
        Command::ComplementPair { file, graph } => complement_pair(file, graph.as_deref(), fmt),
        Command::Bounds { file } => bounds(file, cli.exact_limit, fmt),
        Command::Gen { kind, params, seed, out, with_complement } => {
            gen(*kind, params, *seed, out.as_deref(), *with_complement, fmt)
        }
        Command::VerifyReduction { file, order } => verify_reduction(file, *order, cli.exact_limit, fmt),
    }
}

fn dims(file: &Path, oracle: bool, limit: Option<usize>, fmt: Format) -> CliResult<Outcome> {
    let f = load_family(file)?;
    let metrics = f.metrics()?;
    let r = simultaneous_strong_dimension(&f)?;
    let mut rows = Vec::new();
    for (((name, g), m), dim) in f.iter().zip(&metrics).zip(&r.per_member) {
        rows.push(vec![
            json!(name),
            json!(g.n()),
            json!(g.edge_count()),
            json!(m.diameter()),
            json!(boundary(g)?.len()),
            json!(simplicial_vertices(g).len()),
            json!(dim),
        ]);
    }
    let mut family = Fields::new()
        .add("members", f.len())
        .add("n", f.n())
        .add("sd_s", r.value)
        .add("witness", labels(&f, r.witness.subset.members()))
        .add("method", method_name(r.method));
    let mut failure = None;
    if oracle {
        let o = brute_force_simdim(&f, limit.unwrap_or(DEFAULT_SIMDIM_ORACLE_LIMIT))?;
        let agree = o.value == r.value && o.per_member == r.per_member;
        family.push("oracle_sd_s", o.value);
        family.push("oracle_witness", labels(&f, o.witness.subset.members()));
        family.push("verdict", if agree { "AGREE" } else { "DISAGREE" });
        if !agree {
            failure = Some(format!("vertex cover gives {} but enumeration gives {}", r.value, o.value));
        }
    }
    let report = Report::new("dims")
        .rows("members", &["name", "n", "m", "diameter", "boundary", "simplicial", "dim_s"], rows)
        .fields("family", family);
    Ok(finish(report, fmt, failure))
}

fn pick<'a>(f: &'a GraphFamily, name: Option<&str>) -> CliResult<(&'a str, &'a LabeledGraph)> {
    match name {
        Some(n) => {
            f.iter().find(|(m, _)| *m == n).ok_or_else(|| CliError::Usage(format!("no graph named `{n}`")))
        }
        None if f.len() == 1 => Ok(f.iter().next().unwrap()),
        None => Err(CliError::Usage(format!("the file has {} graphs; choose one with --graph", f.len()))),
    }
}

fn srgraph(file: &Path, graph: Option<&str>, fmt: Format) -> CliResult<Outcome> {
    let f = load_family(file)?;
    let (name, sr) = match graph {
        None if f.len() > 1 => ("union", union_sr_graph(&f)?),
        _ => {
            let (name, g) = pick(&f, graph)?;
            (name, strong_resolving_graph(g).map_err(|_| Error::Disconnected(name.into()))?)
        }
    };
    let edges = sr.edges();
    let cover = min_vertex_cover(f.n(), &edges);
    let rows = edges.iter().map(|&(u, v)| vec![json!(f.labels()[u]), json!(f.labels()[v])]).collect();
    let report = Report::new("srgraph")
        .fields(
            "graph",
            Fields::new()
                .add("graph", name)
                .add("n", f.n())
                .add("sr_edges", edges.len())
                .add("isolated", labels(&f, &sr.isolated_vertices()))
                .add("cover", cover.size)
                .add("witness", labels(&f, cover.witness.members())),
        )
        .rows("edges", &["u", "v"], rows);
    Ok(finish(report, fmt, None))
}

fn tree_case_name(c: TreeCase) -> String {
    match c {
        TreeCase::DiameterThree => "diameter 3".into(),
        TreeCase::DiameterFour { centre_is_support } => {
            format!("diameter 4, centre is support: {centre_is_support}")
        }
        TreeCase::DiameterFive { centre_is_support, centre_with_one_leaf } => format!(
            "diameter 5, centre is support: {centre_is_support}, centre with one leaf: {centre_with_one_leaf}"
        ),
        TreeCase::PathLike => "every T'_u is a path".into(),
        TreeCase::Bounded => "interval only".into(),
    }
}

fn complement_pair(file: &Path, graph: Option<&str>, fmt: Format) -> CliResult<Outcome> {
    let f = load_family(file)?;
    let (name, g) = pick(&f, graph)?;
    let m = g.metric().map_err(|_| Error::Disconnected(name.into()))?;
    let c = g.complement();
    let r = complement_pair_dimension(g)?;
    let dc = c.metric()?.diameter();
    let beta = vertex_cover_number(g).size;
    let ring = interior_report(g)?.beta_ring;
    let (dim, dim_c) = (r.per_member[0], r.per_member[1]);
    let mut fields = Fields::new()
        .add("graph", name)
        .add("n", g.n())
        .add("diameter", m.diameter())
        .add("diameter_complement", dc)
        .add("dim_s", dim)
        .add("dim_s_complement", dim_c)
        .add("beta", beta)
        .add("beta_s", strong_resolving_cover_number(g)?.value)
        .add("beta_s_complement", strong_resolving_cover_number(&c)?.value)
        .add("beta_ring", ring)
        .add("sd_s_pair", r.value)
        .add("witness", labels(&f, r.witness.subset.members()))
        .add("method", method_name(r.method));
    if dc == 2 {
        fields.push("lower_bound", (dim + ring).max(beta));
    }
    let mut report = Report::new("complement-pair").fields("pair", fields);
    if let Ok(p) = fam::tree_complement_pair_formula(g) {
        report = report.fields(
            "tree",
            Fields::new()
                .add("leaves", p.leaves)
                .add("case", tree_case_name(p.case))
                .add("closed_form", p.closed_form)
                .add("refined", p.refined)
                .add("lower", p.lower)
                .add("upper", p.upper),
        );
    }
    Ok(finish(report, fmt, None))
}

fn bounds(file: &Path, limit: Option<usize>, fmt: Format) -> CliResult<Outcome> {
    let f = load_family(file)?;
    let r = verify_all_bounds(&f, limit.unwrap_or(DEFAULT_RHO_LIMIT))?;
    let sd = r.sd_s.value;
    let row = |bound: &str, value: usize, kind: &str, holds: bool| {
        vec![json!(bound), json!(value), json!(kind), json!(holds)]
    };
    let rho_kind = if r.rho.exact { "upper" } else { "upper (rho heuristic lower bound)" };
    let mut rows = vec![
        row("max dim_s(G_i)", r.max_lower, "lower", r.max_lower <= sd),
        row("sum dim_s(G_i)", r.sum_bound, "upper", sd <= r.sum_bound),
        row("|boundary| - 1", r.boundary_bound, "upper", sd <= r.boundary_bound),
        row("n - Sw", r.twin_free_clique_bound, "upper", sd <= r.twin_free_clique_bound),
        row("|V| - rho", r.rho_bound, rho_kind, sd <= r.rho_bound),
    ];
    if r.all_diameter_two {
        rows.push(row("n - Sw", r.twin_free_clique_bound, "equality", sd == r.twin_free_clique_bound));
    }
    let family = Fields::new()
        .add("members", f.len())
        .add("n", r.n)
        .add("sd_s", sd)
        .add("witness", labels(&f, r.sd_s.witness.subset.members()))
        .add("twin_free_clique", r.twin_free_clique)
        .add("rho", r.rho.value)
        .add("rho_exact", r.rho.exact)
        .add("rho_set", labels(&f, &r.rho.set))
        .add("rho_leaf", f.labels()[r.rho.leaf].as_str())
        .add("boundary", r.boundary_size)
        .add("all_diameter_two", r.all_diameter_two)
        .add("union_sr_complete", r.union_sr_complete);
    let failure = (!r.violations.is_empty()).then(|| format!("{} bound(s) violated", r.violations.len()));
    let violations = r.violations.iter().map(|v| vec![json!(v)]).collect();
    let report = Report::new("bounds")
        .fields("family", family)
        .rows("bounds", &["bound", "value", "kind", "holds"], rows)
        .rows("violations", &["violation"], violations);
    Ok(finish(report, fmt, failure))
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> CliResult<T> {
    let raw = params.get(i).ok_or_else(|| CliError::Usage(format!("missing parameter <{what}>")))?;
    raw.parse().map_err(|_| CliError::Usage(format!("invalid <{what}> `{raw}`")))
}

fn arity(params: &[String], n: usize, usage: &str) -> CliResult<()> {
    if params.len() == n {
        Ok(())
    } else {
        Err(CliError::Usage(format!("expected: gen {usage}")))
    }
}

struct Generated {
    family: GraphFamily,
    header: Vec<String>,
    instance: Option<fam::Hsp2Instance>,
    ssd_budget: Option<usize>,
}

fn generate(kind: GenKind, p: &[String], seed: u64, with_complement: bool) -> CliResult<Generated> {
    let single = |g: LabeledGraph| {
        if with_complement {
            GraphFamily::with_complement(g)
        } else {
            GraphFamily::singleton(g)
        }
    };
    let family_only = |f: GraphFamily| {
        if with_complement {
            Err(CliError::Usage("--with-complement applies to single graphs only".into()))
        } else {
            Ok(f)
        }
    };
    let plain = |family| Ok(Generated { family, header: Vec::new(), instance: None, ssd_budget: None });
    match kind {
        GenKind::Path => {
            arity(p, 1, "path N")?;
            plain(single(fam::make_path(param(p, 0, "N")?)?))
        }
        GenKind::Cycle => {
            arity(p, 1, "cycle N")?;
            plain(single(fam::make_cycle(param(p, 0, "N")?)?))
        }
        GenKind::Complete => {
            arity(p, 1, "complete N")?;
            plain(single(fam::make_complete(param(p, 0, "N")?)?))
        }
        GenKind::Bipartite => {
            arity(p, 2, "bipartite R S")?;
            plain(single(fam::make_complete_bipartite(param(p, 0, "R")?, param(p, 1, "S")?)?))
        }
        GenKind::Star => {
            arity(p, 1, "star R")?;
            plain(single(fam::make_star(param(p, 0, "R")?)?))
        }
        GenKind::Hypercube => {
            arity(p, 1, "hypercube R")?;
            plain(single(fam::make_hypercube(param(p, 0, "R")?)?))
        }
        GenKind::Stars => {
            arity(p, 1, "stars R")?;
            plain(family_only(fam::make_star_family(param(p, 0, "R")?)?)?)
        }
        GenKind::SharedPaths => {
            arity(p, 2, "shared-paths N K")?;
            let f = fam::make_shared_leaf_paths(param(p, 0, "N")?, param(p, 1, "K")?, seed)?;
            plain(family_only(f)?)
        }
        GenKind::StarClique => {
            arity(p, 3, "star-clique R M K")?;
            let f =
                fam::make_star_clique_paths(param(p, 0, "R")?, param(p, 1, "M")?, param(p, 2, "K")?, seed)?;
            plain(family_only(f)?)
        }
        GenKind::RandomTree => {
            arity(p, 1, "random-tree N")?;
            plain(single(fam::make_random_tree(param(p, 0, "N")?, seed)?))
        }
        GenKind::RandomGraph => {
            arity(p, 2, "random-graph N P")?;
            plain(single(fam::make_random_connected_graph(param(p, 0, "N")?, param(p, 1, "P")?, seed)?))
        }
        GenKind::Caterpillar => {
            let legs = (0..p.len()).map(|i| param(p, i, "legs")).collect::<CliResult<Vec<usize>>>()?;
            plain(single(fam::make_caterpillar(&legs)?))
        }
        GenKind::Figure => {
            arity(p, 1, "figure SELECTOR")?;
            match fam::make_figure(p[0].parse::<Figure>()?)? {
                FigureItem::Graph(g) => plain(single(g)),
                FigureItem::Family(f) => plain(family_only(f)?),
            }
        }
        GenKind::Hsp2 => {
            let inst = match (p.first().map(String::as_str), p.len()) {
                (Some("fig6"), 1) => fam::fig6_instance(),
                (Some("file"), 2) => load_hsp2(Path::new(&p[1]))?,
                (_, 2) => fam::random_hsp2_instance(param(p, 0, "N")?, param(p, 1, "K")?, seed)?,
                _ => return Err(CliError::Usage("expected: gen hsp2 fig6 | N K | file PATH".into())),
            };
            let red = fam::reduce_hsp2(&inst)?;
            let mut header = vec!["reduction of the hitting set instance".to_string()];
            header.extend(write_hsp2(&inst).lines().map(|l| format!("  {l}")));
            header.push(format!("ssdBudget {}", red.ssd_budget));
            Ok(Generated {
                family: family_only(red.family)?,
                header,
                instance: Some(inst),
                ssd_budget: Some(red.ssd_budget),
            })
        }
    }
}

fn family_json(f: &GraphFamily) -> Vec<Vec<Value>> {
    f.iter()
        .map(|(name, g)| {
            let edges: Vec<Value> = g.edges().iter().map(|&(u, v)| json!([g.label(u), g.label(v)])).collect();
            vec![json!(name), json!(g.edge_count()), Value::Array(edges)]
        })
        .collect()
}

fn gen(
    kind: GenKind,
    params: &[String],
    seed: u64,
    out: Option<&Path>,
    with_complement: bool,
    fmt: Format,
) -> CliResult<Outcome> {
    let g = generate(kind, params, seed, with_complement)?;
    let text = write_family(&g.family, &g.header);
    let mut summary = Fields::new()
        .add("members", g.family.len())
        .add("n", g.family.n())
        .add("labels", json!(g.family.labels()))
        .add("ssd_budget", g.ssd_budget)
        .add("seed", seed);
    match out {
        None if fmt == Format::Table => {
            return Ok(Outcome { stdout: text, stderr: String::new(), code: 0 });
        }
        None => {}
        Some(path) => {
            write_text(path, &text)?;
            summary.push("out", path.display().to_string());
            if let Some(inst) = &g.instance {
                let ipath: PathBuf = path.with_extension("hsp2");
                write_text(&ipath, &write_hsp2(inst))?;
                summary.push("instance", ipath.display().to_string());
            }
        }
    }
    let report = Report::new("gen").fields("family", summary).rows(
        "members",
        &["name", "m", "edges"],
        family_json(&g.family),
    );
    Ok(finish(report, fmt, None))
}

fn verify_reduction(file: &Path, order: Order, limit: Option<usize>, fmt: Format) -> CliResult<Outcome> {
    let inst = load_hsp2(file)?;
    let order = match order {
        Order::Ascending => PathOrder::Ascending,
        Order::Reversed => PathOrder::Reversed,
    };
    let c = fam::verify_reduction_with(&inst, order, limit.unwrap_or(REDUCTION_ORACLE_LIMIT))?;
    let f = &c.reduction.family;
    let hs: Vec<&str> = c.min_hitting_set.members().iter().map(|&i| inst.ground()[i].as_str()).collect();
    let fields = Fields::new()
        .add("ground", inst.ground().len())
        .add("subsets", inst.subsets().len())
        .add("budget", inst.budget())
        .add("ssd_budget", c.reduction.ssd_budget)
        .add("vertices", f.n())
        .add("trees", f.len())
        .add("h_star", c.min_hitting_set.len())
        .add("hitting_set", json!(hs))
        .add("sd_s", c.sd_s)
        .add("witness", labels(f, c.sd_s_witness.members()))
        .add("brute_forced", c.brute_forced)
        .add("verdict", if c.holds { "PASS" } else { "FAIL" });
    let rows = c
        .per_budget
        .iter()
        .map(|b| {
            vec![
                json!(b.p),
                json!(b.hitting_set_at_most_p),
                json!(b.sd_s_at_most_p_plus_1),
                json!(b.hitting_set_at_most_p == b.sd_s_at_most_p_plus_1),
            ]
        })
        .collect();
    let failure =
        (!c.holds).then(|| format!("Sd_s = {} but h* + 1 = {}", c.sd_s, c.min_hitting_set.len() + 1));
    let report = Report::new("verify-reduction").fields("reduction", fields).rows(
        "budgets",
        &["p", "h* <= p", "Sd_s <= p + 1", "agree"],
        rows,
    );
    Ok(finish(report, fmt, failure))
}
