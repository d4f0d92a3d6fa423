//! Text formats: the edge-list graph format, certificate parsers matching
//! the `Display` output of each certificate type, and DOT export.
//!
//! Edge lists start with a header line `n m` followed by `m` lines `u v`
//! with `0 <= u < v < n`. Certificates are line oriented; blank lines and
//! lines starting with `#` are ignored by every certificate parser, so a
//! CLI report can be fed back in as is.

use std::fmt::Write as _;

use crate::connectivity::Fan;
use crate::error::{GraphError, Result};
use crate::graph::{complete, complete_bipartite, EditStep, Graph, Vertex};
use crate::minor::BranchSets;
use crate::planarity::{KuratowskiKind, KuratowskiWitness};
use crate::topo::SubdivisionEmbedding;

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| parse_err(line, format!("expected a non-negative integer, found {t:?}")))
        })
        .collect()
}

/// Parses the edge-list format. Loops, duplicate edges, labels out of range
/// and edges written as `v u` with `v > u` are rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header \"n m\""))?;
    let head = numbers(hl, header)?;
    let [n, m] = head[..] else {
        return Err(parse_err(hl, "header must be \"n m\""));
    };
    if n == 0 {
        return Err(parse_err(hl, "a graph needs at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (ln, line) in lines {
        let nums = numbers(ln, line)?;
        let [u, v] = nums[..] else {
            return Err(parse_err(ln, "edge lines must be \"u v\""));
        };
        if u == v {
            return Err(parse_err(ln, format!("loop at vertex {u}")));
        }
        if v >= n || u >= n {
            return Err(parse_err(ln, format!("vertex {} is out of range for n = {n}", u.max(v))));
        }
        if u > v {
            return Err(parse_err(ln, format!("edge {u} {v} must be written with the smaller label first")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

/// Serialises `g` in the edge-list format (LF terminated).
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Certificate lines with their 1-based line numbers, comments dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Splits `"<keyword> <ids>: <values>"`.
fn labelled(ln: usize, line: &str, keyword: &str) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let Some(rest) = line.strip_prefix(keyword).filter(|r| r.starts_with(' ')) else {
        return Ok(None);
    };
    let (ids, values) = rest.split_once(':').ok_or_else(|| parse_err(ln, format!("missing ':' after {keyword}")))?;
    Ok(Some((numbers(ln, ids)?, numbers(ln, values)?)))
}

/// Parses `set i: v ...` lines into branch sets of `pattern` in `host`.
/// The sets are not verified; call [`BranchSets::verify`].
pub fn parse_branch_sets(text: &str, host: &Graph, pattern: &Graph) -> Result<BranchSets> {
    let mut sets = Vec::new();
    for (ln, line) in content_lines(text) {
        let (ids, vs) = labelled(ln, line, "set")?.ok_or_else(|| parse_err(ln, "expected \"set i: ...\""))?;
        if ids != [sets.len()] {
            return Err(parse_err(ln, format!("expected set {}", sets.len())));
        }
        sets.push(vs);
    }
    Ok(BranchSets::new(host, pattern, sets))
}

/// Parses `branch i: x` and `path i j: ...` lines. Paths must follow the
/// order of `pattern.edges()`.
pub fn parse_subdivision(text: &str, host: &Graph, pattern: &Graph) -> Result<SubdivisionEmbedding> {
    let (mut branch, mut paths) = (Vec::new(), Vec::new());
    let expected: Vec<(Vertex, Vertex)> = pattern.edges().collect();
    for (ln, line) in content_lines(text) {
        if let Some((ids, vs)) = labelled(ln, line, "branch")? {
            if ids != [branch.len()] || vs.len() != 1 || !paths.is_empty() {
                return Err(parse_err(ln, format!("expected \"branch {}: x\"", branch.len())));
            }
            branch.push(vs[0]);
        } else if let Some((ids, vs)) = labelled(ln, line, "path")? {
            match expected.get(paths.len()) {
                Some(&(i, j)) if ids == [i, j] => paths.push(vs),
                Some(&(i, j)) => return Err(parse_err(ln, format!("expected path {i} {j}"))),
                None => return Err(parse_err(ln, "more paths than pattern edges")),
            }
        } else if !line.starts_with("kind:") {
            return Err(parse_err(ln, "expected a branch or path line"));
        }
    }
    if paths.len() != expected.len() {
        return Err(parse_err(text.lines().count().max(1), "fewer paths than pattern edges"));
    }
    Ok(SubdivisionEmbedding { host: host.clone(), pattern: pattern.clone(), branch, paths })
}

/// Parses a `kind: K5|K33` line followed by a subdivision.
pub fn parse_kuratowski(text: &str, host: &Graph) -> Result<KuratowskiWitness> {
    let (ln, kind_line) = content_lines(text).next().ok_or_else(|| parse_err(1, "empty witness"))?;
    let (kind, pattern) = match kind_line {
        "kind: K5" => (KuratowskiKind::K5, complete(5)?),
        "kind: K33" => (KuratowskiKind::K33, complete_bipartite(3, 3)?),
        other => return Err(parse_err(ln, format!("expected \"kind: K5\" or \"kind: K33\", found {other:?}"))),
    };
    Ok(KuratowskiWitness { kind, embedding: parse_subdivision(text, host, &pattern)? })
}

/// Parses `delete-vertex v`, `delete-edge u v` and `contract u v` lines.
pub fn parse_edit_steps(text: &str) -> Result<Vec<EditStep>> {
    content_lines(text)
        .map(|(ln, line)| {
            let (verb, rest) = line.split_once(' ').ok_or_else(|| parse_err(ln, "expected an edit step"))?;
            let nums = numbers(ln, rest)?;
            match (verb, &nums[..]) {
                ("delete-vertex", &[v]) => Ok(EditStep::DeleteVertex(v)),
                ("delete-edge", &[u, v]) => Ok(EditStep::DeleteEdge(u, v)),
                ("contract", &[u, v]) => Ok(EditStep::ContractEdge(u, v)),
                _ => Err(parse_err(ln, format!("unknown edit step {line:?}"))),
            }
        })
        .collect()
}

/// Parses `path i: x ... u` fan lines for the given centre and targets.
pub fn parse_fan(text: &str, center: Vertex, targets: &[Vertex]) -> Result<Fan> {
    let mut paths = Vec::new();
    for (ln, line) in content_lines(text) {
        let (ids, vs) = labelled(ln, line, "path")?.ok_or_else(|| parse_err(ln, "expected \"path i: ...\""))?;
        if ids != [paths.len()] {
            return Err(parse_err(ln, format!("expected path {}", paths.len())));
        }
        paths.push(vs);
    }
    let mut targets = targets.to_vec();
    targets.sort_unstable();
    targets.dedup();
    Ok(Fan { center, targets, paths })
}

/// What [`emit_dot`] should draw on top of the graph.
#[derive(Clone, Copy, Debug)]
pub enum Highlight<'a> {
    Model(&'a BranchSets),
    Subdivision(&'a SubdivisionEmbedding),
}

const PALETTE: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];

/// DOT rendering of `g`. Branch sets become coloured clusters; subdivision
/// paths become bold edges with branch vertices drawn as double circles.
/// A highlight must belong to `g` and verify.
pub fn emit_dot(g: &Graph, highlight: Option<Highlight<'_>>) -> Result<String> {
    let mut out = String::from("graph G {\n");
    let mut bold = std::collections::HashSet::new();
    let mut placed = vec![false; g.vertex_count()];
    match highlight {
        Some(Highlight::Model(m)) => {
            if &m.host != g || !m.verify()? {
                return Err(GraphError::InvalidCertificate("branch sets do not verify against the graph".into()));
            }
            for (i, s) in m.sets.iter().enumerate() {
                let colour = PALETTE[i % PALETTE.len()];
                writeln!(out, "  subgraph cluster_{i} {{").unwrap();
                writeln!(out, "    label=\"V{i}\";").unwrap();
                writeln!(out, "    color={colour};").unwrap();
                for &v in s {
                    writeln!(out, "    {v} [color={colour}];").unwrap();
                    placed[v] = true;
                }
                writeln!(out, "  }}").unwrap();
            }
        }
        Some(Highlight::Subdivision(e)) => {
            if &e.host != g || !e.verify()? {
                return Err(GraphError::InvalidCertificate("subdivision does not verify against the graph".into()));
            }
            for &x in &e.branch {
                writeln!(out, "  {x} [shape=doublecircle];").unwrap();
                placed[x] = true;
            }
            for p in &e.paths {
                for w in p.windows(2) {
                    bold.insert((w[0].min(w[1]), w[0].max(w[1])));
                }
            }
        }
        None => {}
    }
    for v in g.vertices().filter(|&v| !placed[v]) {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        if bold.contains(&(u, v)) {
            writeln!(out, "  {u} -- {v} [style=bold, penwidth=3];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, petersen};
    use crate::topo::find_subdivision;

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_graph("3 2\n0 1\n1 2").unwrap(), path(3).unwrap());
        assert_eq!(parse_graph("1 0").unwrap(), Graph::empty(1).unwrap());
        assert!(matches!(parse_graph("2 1\n0 0"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 2"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n0 1"), Err(GraphError::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3 x"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(GraphError::Parse { line: 1, .. })));
        let p = petersen();
        assert_eq!(parse_graph(&write_graph(&p)).unwrap(), p);
    }

    #[test]
    fn certificates_round_trip() {
        let p = petersen();
        let k5 = complete(5).unwrap();
        let m = BranchSets::new(&p, &k5, (0..5).map(|i| vec![i, 5 + i]).collect());
        let back = parse_branch_sets(&format!("# model\n{m}"), &p, &k5).unwrap();
        assert_eq!(back, m);
        assert!(back.verify().unwrap());

        let k33 = complete_bipartite(3, 3).unwrap();
        let e = find_subdivision(&p, &k33).unwrap().unwrap();
        assert_eq!(parse_subdivision(&e.to_string(), &p, &k33).unwrap(), e);

        let steps = vec![EditStep::DeleteVertex(3), EditStep::DeleteEdge(0, 1), EditStep::ContractEdge(1, 2)];
        let text: String = steps.iter().map(|s| format!("{s}\n")).collect();
        assert_eq!(parse_edit_steps(&text).unwrap(), steps);
        assert!(parse_branch_sets("set 1: 0", &p, &k5).is_err());
    }

    #[test]
    fn dot_examples() {
        let k3 = complete(3).unwrap();
        let dot = emit_dot(&k3, None).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot, "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");

        let p = petersen();
        let k5 = complete(5).unwrap();
        let m = BranchSets::new(&p, &k5, (0..5).map(|i| vec![i, 5 + i]).collect());
        let dot = emit_dot(&p, Some(Highlight::Model(&m))).unwrap();
        assert_eq!(dot.matches("subgraph cluster_").count(), 5);

        let bad = BranchSets::new(&p, &k5, (0..5).map(|i| vec![i]).collect());
        assert!(emit_dot(&p, Some(Highlight::Model(&bad))).is_err());
        let other = BranchSets::new(&k5, &k5, (0..5).map(|i| vec![i]).collect());
        assert!(emit_dot(&p, Some(Highlight::Model(&other))).is_err());
    }
}
