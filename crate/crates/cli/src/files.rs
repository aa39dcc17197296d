//! Text formats.
//!
//! Family file:
//!
//! ```text
//! # comment
//! n 4
//! labels a b c d        (optional; default 0 1 .. n-1)
//! graph G1
//! a b
//! b c
//! end
//! graph G2
//! ...
//! end
//! ```
//!
//! Hitting-set instance file: `ground <labels>`, one `set <l1> [l2]` line per
//! subset, optional `budget <p>` (default: the ground set size).

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use simdim_core::families::Hsp2Instance;
use simdim_core::{GraphFamily, LabeledGraph};

use crate::error::{CliError, CliResult};

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Non-blank, non-comment lines with 1-based line numbers, split on
/// whitespace.
fn directives(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

struct Cursor {
    path: PathBuf,
}

impl Cursor {
    fn err<T>(&self, line: usize, msg: impl Into<String>) -> CliResult<T> {
        Err(CliError::Parse { path: self.path.clone(), line, msg: msg.into() })
    }
}

pub fn parse_family(text: &str, path: &Path) -> CliResult<GraphFamily> {
    let cur = Cursor { path: path.to_owned() };
    let mut lines = directives(text).peekable();

    let Some((line, toks)) = lines.next() else {
        return cur.err(1, "empty family file");
    };
    let n = match toks[..] {
        ["n", count] => match count.parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => return cur.err(line, format!("invalid vertex count `{count}`")),
        },
        _ => return cur.err(line, "expected `n <count>`"),
    };

    let mut labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    if let Some((line, toks)) = lines.next_if(|(_, t)| t[0] == "labels") {
        if toks.len() != n + 1 {
            return cur.err(line, format!("expected {n} labels, got {}", toks.len() - 1));
        }
        labels = toks[1..].iter().map(|s| s.to_string()).collect();
        if let Some(dup) = labels.iter().enumerate().find(|(i, l)| labels[..*i].contains(l)) {
            return cur.err(line, format!("duplicate label `{}`", dup.1));
        }
    }
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();

    let mut members: Vec<(String, LabeledGraph)> = Vec::new();
    let mut last_line = line;
    while let Some((line, toks)) = lines.next() {
        let name = match toks[..] {
            ["graph", name] => name.to_string(),
            ["labels", ..] => return cur.err(line, "`labels` must come right after `n`"),
            _ => return cur.err(line, "expected `graph <name>`"),
        };
        if members.iter().any(|(m, _)| *m == name) {
            return cur.err(line, format!("duplicate graph name `{name}`"));
        }
        let mut edges = Vec::new();
        let mut closed = false;
        last_line = line;
        for (line, toks) in lines.by_ref() {
            last_line = line;
            match toks[..] {
                ["end"] => {
                    closed = true;
                    break;
                }
                [a, b] => {
                    let (Some(&u), Some(&v)) = (index.get(a), index.get(b)) else {
                        let bad = if index.contains_key(a) { b } else { a };
                        return cur.err(line, format!("unknown label `{bad}`"));
                    };
                    if u == v {
                        return cur.err(line, format!("self-loop on `{a}`"));
                    }
                    edges.push((u, v));
                }
                _ => return cur.err(line, "expected `<label> <label>` or `end`"),
            }
        }
        if !closed {
            return cur.err(last_line, format!("graph `{name}` is missing `end`"));
        }
        let g = LabeledGraph::from_index_edges(labels.iter().cloned(), &edges)?;
        members.push((name, g));
    }
    if members.is_empty() {
        return cur.err(last_line, "no `graph` block");
    }
    Ok(GraphFamily::new(members)?)
}

pub fn load_family(path: &Path) -> CliResult<GraphFamily> {
    parse_family(&read_text(path)?, path)
}

/// Serializes a family; `header` lines are written as comments first.
pub fn write_family(f: &GraphFamily, header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        writeln!(out, "# {h}").unwrap();
    }
    writeln!(out, "n {}", f.n()).unwrap();
    writeln!(out, "labels {}", f.labels().join(" ")).unwrap();
    for (name, g) in f.iter() {
        writeln!(out, "graph {name}").unwrap();
        for (u, v) in g.edges() {
            writeln!(out, "{} {}", g.label(u), g.label(v)).unwrap();
        }
        writeln!(out, "end").unwrap();
    }
    out
}

pub fn parse_hsp2(text: &str, path: &Path) -> CliResult<Hsp2Instance> {
    let cur = Cursor { path: path.to_owned() };
    let mut ground: Option<Vec<String>> = None;
    let mut sets: Vec<Vec<String>> = Vec::new();
    let mut budget = None;
    let mut last = 1;
    for (line, toks) in directives(text) {
        last = line;
        match (toks[0], &toks[1..]) {
            ("ground", labels) if ground.is_none() && !labels.is_empty() => {
                ground = Some(labels.iter().map(|s| s.to_string()).collect());
            }
            ("ground", _) => return cur.err(line, "`ground` must appear once, with labels"),
            ("set", members) if (1..=2).contains(&members.len()) => {
                let Some(g) = &ground else {
                    return cur.err(line, "`set` before `ground`");
                };
                if let Some(bad) = members.iter().find(|m| !g.iter().any(|l| l == *m)) {
                    return cur.err(line, format!("unknown label `{bad}`"));
                }
                sets.push(members.iter().map(|s| s.to_string()).collect());
            }
            ("set", _) => return cur.err(line, "a set has one or two elements"),
            ("budget", [p]) if budget.is_none() => match p.parse::<usize>() {
                Ok(p) => budget = Some(p),
                Err(_) => return cur.err(line, format!("invalid budget `{p}`")),
            },
            _ => return cur.err(line, format!("unexpected `{}`", toks.join(" "))),
        }
    }
    let Some(ground) = ground else {
        return cur.err(last, "missing `ground`");
    };
    if sets.is_empty() {
        return cur.err(last, "no `set` lines");
    }
    let budget = budget.unwrap_or(ground.len());
    Ok(Hsp2Instance::from_labels(ground, &sets, budget)?)
}

pub fn load_hsp2(path: &Path) -> CliResult<Hsp2Instance> {
    parse_hsp2(&read_text(path)?, path)
}

pub fn write_hsp2(inst: &Hsp2Instance) -> String {
    let mut out = String::new();
    writeln!(out, "ground {}", inst.ground().join(" ")).unwrap();
    for c in inst.subsets() {
        let labels: Vec<&str> = c.iter().map(|&i| inst.ground()[i].as_str()).collect();
        writeln!(out, "set {}", labels.join(" ")).unwrap();
    }
    writeln!(out, "budget {}", inst.budget()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> CliResult<GraphFamily> {
        parse_family(text, Path::new("t"))
    }

    fn line_of(e: CliError) -> usize {
        match e {
            CliError::Parse { line, .. } => line,
            other => panic!("not a parse error: {other}"),
        }
    }

    #[test]
    fn parses_and_round_trips() {
        let text = "# two paths\nn 3\nlabels a b c\ngraph A\na b\nb c\nend\n\ngraph B\nb a\na c\nend\n";
        let f = parse(text).unwrap();
        assert_eq!(f.names(), ["A", "B"]);
        assert_eq!(f.labels(), ["a", "b", "c"]);
        assert_eq!(parse(&write_family(&f, &["x".into()])).unwrap(), f);
    }

    #[test]
    fn default_labels() {
        let f = parse("n 2\ngraph G\n0 1\nend\n").unwrap();
        assert_eq!(f.labels(), ["0", "1"]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of(parse("n 2\ngraph G\n0 5\nend\n").unwrap_err()), 3);
        assert_eq!(line_of(parse("n 2\ngraph G\n0 1\n").unwrap_err()), 3);
        assert_eq!(line_of(parse("n 2\ngraph G\nend\ngraph G\nend\n").unwrap_err()), 4);
        assert_eq!(line_of(parse("n 2\nlabels a\ngraph G\nend\n").unwrap_err()), 2);
        assert_eq!(line_of(parse("# c\nm 2\n").unwrap_err()), 2);
        assert_eq!(line_of(parse("n 2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse("n 2\ngraph G\n1 1\nend\n").unwrap_err()), 3);
        assert_eq!(line_of(parse("n 2\nlabels a a\ngraph G\nend\n").unwrap_err()), 2);
    }

    #[test]
    fn hsp2_round_trip() {
        let text = "ground v1 v2 v3\nset v1 v2\nset v3\nbudget 2\n";
        let inst = parse_hsp2(text, Path::new("h")).unwrap();
        assert_eq!(inst.subsets(), [vec![0, 1], vec![2]]);
        assert_eq!(write_hsp2(&inst), text);
        let no_budget = parse_hsp2("ground a b\nset a\n", Path::new("h")).unwrap();
        assert_eq!(no_budget.budget(), 2);
        assert!(parse_hsp2("ground a b\n", Path::new("h")).is_err());
        assert!(parse_hsp2("ground a b\nset a b a\n", Path::new("h")).is_err());
        assert!(parse_hsp2("ground a b\nset c\n", Path::new("h")).is_err());
    }
}
