//! Exact colouring and constructive clique minors from colouring bounds.
//!
//! Three extractions are provided: a triangle minor from any odd cycle, a
//! `K4` minor from any 4-chromatic graph (by recursion on separators), and
//! a `K_k` minor from any graph with `χ >= 2^k`, built by repeatedly
//! descending into the most colourful breadth-first layer.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{bit, iter_bits, BitGraph, Mask};
use crate::connectivity::{fan, vertex_connectivity};
use crate::error::{GraphError, Result};
use crate::graph::{complete, Graph, LayerDecomposition, Vertex};
use crate::minor::{find_minor_model, BranchSets};

const MAX_COLOURING_VERTICES: usize = 16;

/// A proper colouring with colours `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    /// Every vertex coloured from `1..=k` and no edge monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|&c| (1..=self.k).contains(&c))
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

fn guard(g: &Graph) -> Result<BitGraph> {
    let n = g.vertex_count();
    if n > MAX_COLOURING_VERTICES {
        return Err(GraphError::TooLarge { what: "exact colouring", actual: n, limit: MAX_COLOURING_VERTICES });
    }
    BitGraph::new(g, "exact colouring")
}

fn max_clique(bg: &BitGraph) -> usize {
    fn grow(bg: &BitGraph, size: usize, cand: Mask, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        grow(bg, size + 1, cand & bg.adj[v], best);
        grow(bg, size, cand & !bit(v), best);
    }
    let mut best = 0;
    grow(bg, 0, bg.all(), &mut best);
    best
}

/// DSATUR-ordered backtracking for a `k`-colouring.
fn try_colour(bg: &BitGraph, k: usize) -> Option<Vec<usize>> {
    fn rec(bg: &BitGraph, k: usize, colours: &mut Vec<usize>, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let used = |v: Vertex, colours: &[usize]| -> u32 {
            iter_bits(bg.adj[v]).filter(|&w| colours[w] > 0).fold(0, |m, w| m | 1 << colours[w])
        };
        let v = (0..bg.n)
            .filter(|&v| colours[v] == 0)
            .max_by_key(|&v| (used(v, colours).count_ones(), bg.adj[v].count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        let forbidden = used(v, colours);
        // A colour beyond the highest in use is interchangeable with any
        // other unused colour, so only the first one is tried.
        let highest = colours.iter().copied().max().unwrap_or(0);
        for c in 1..=k.min(highest + 1) {
            if forbidden & (1 << c) == 0 {
                colours[v] = c;
                if rec(bg, k, colours, left - 1) {
                    return true;
                }
            }
        }
        colours[v] = 0;
        false
    }
    let mut colours = vec![0; bg.n];
    rec(bg, k, &mut colours, bg.n).then_some(colours)
}

/// Exact chromatic number with a witness colouring (at most 16 vertices).
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    let bg = guard(g)?;
    let mut k = max_clique(&bg).max(1);
    loop {
        if let Some(colors) = try_colour(&bg, k) {
            return Ok((k, Coloring { colors, k }));
        }
        k += 1;
    }
}

/// Either an odd cycle or a proper 2-colouring; never both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parity {
    /// Cycle `c_0 c_1 ... c_{L-1}` of odd length, starting at its smallest
    /// vertex and continuing towards the smaller of its two neighbours.
    OddCycle(Vec<Vertex>),
    TwoColoring(Coloring),
}

/// Breadth-first parity check. An edge joining two vertices of the same
/// depth closes an odd cycle through their lowest common ancestor.
pub fn odd_cycle_or_bipartition(g: &Graph) -> Parity {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for comp in g.components() {
        let root = comp[0];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }
    let Some((u, v)) = g.edges().find(|&(u, v)| depth[u] == depth[v]) else {
        let colors = depth.iter().map(|d| 1 + d % 2).collect();
        return Parity::TwoColoring(Coloring { colors, k: 2 });
    };
    let (mut a, mut b) = (vec![u], vec![v]);
    while a.last() != b.last() {
        a.push(parent[*a.last().unwrap()]);
        b.push(parent[*b.last().unwrap()]);
    }
    b.pop();
    b.reverse();
    a.extend(b);
    Parity::OddCycle(normalise_cycle(a))
}

fn normalise_cycle(mut c: Vec<Vertex>) -> Vec<Vertex> {
    let start = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(start);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

fn known_low(required: usize, actual: usize) -> GraphError {
    GraphError::ChromaticTooLow { required, actual }
}

/// A triangle minor: the odd cycle `c_0 ... c_{L-1}` is contracted onto
/// `{c_0..c_{a-1}}`, `{c_a..c_{L-2}}`, `{c_{L-1}}` with `a = (L-1)/2`.
pub fn extract_k3(g: &Graph) -> Result<BranchSets> {
    let c = match odd_cycle_or_bipartition(g) {
        Parity::OddCycle(c) => c,
        Parity::TwoColoring(_) => return Err(known_low(3, if g.edge_count() > 0 { 2 } else { 1 })),
    };
    let l = c.len();
    let a = (l - 1) / 2;
    let sets = vec![c[..a].to_vec(), c[a..l - 1].to_vec(), vec![c[l - 1]]];
    Ok(BranchSets::new(g, &complete(3)?, sets))
}

fn lift(sets: Vec<Vec<Vertex>>, labels: &[Vertex]) -> Vec<Vec<Vertex>> {
    sets.into_iter().map(|s| s.into_iter().map(|v| labels[v]).collect()).collect()
}

/// The component of largest chromatic number (lowest label on ties), with
/// its labels and `χ`.
fn colourful_component(g: &Graph) -> Result<(Graph, Vec<Vertex>, usize)> {
    let mut best: Option<(Graph, Vec<Vertex>, usize)> = None;
    for comp in g.components() {
        let (h, labels) = g.induced_subgraph(&comp)?;
        let (chi, _) = chromatic_number(&h)?;
        if best.as_ref().is_none_or(|b| chi > b.2) {
            best = Some((h, labels, chi));
        }
    }
    Ok(best.expect("graphs have at least one vertex"))
}

/// A `K4` minor in a graph with `χ >= 4`, by recursion on the number of
/// vertices: cut vertices and 2-separators split the graph into smaller
/// pieces one of which is still 4-chromatic, and a 3-connected graph gives
/// a wheel-like model from a cycle and a 3-fan.
pub fn extract_k4(g: &Graph) -> Result<BranchSets> {
    let (chi, _) = chromatic_number(g)?;
    if chi < 4 {
        return Err(known_low(4, chi));
    }
    let sets = k4_sets(g)?;
    Ok(BranchSets::new(g, &complete(4)?, sets))
}

fn k4_sets(g: &Graph) -> Result<Vec<Vec<Vertex>>> {
    if !g.is_connected() {
        let (h, labels, _) = colourful_component(g)?;
        return Ok(lift(k4_sets(&h)?, &labels));
    }
    let n = g.vertex_count();
    if n == 4 {
        return Ok((0..4).map(|v| vec![v]).collect());
    }
    match vertex_connectivity(g) {
        1 => {
            let (c, pieces) = (0..n)
                .find_map(|c| {
                    let rest = g.without_vertex(c).ok()?;
                    let comps = rest.graph.components();
                    // Map component labels of G - c back to G.
                    let back: Vec<Vertex> = (0..n).filter(|&v| v != c).collect();
                    (comps.len() > 1).then(|| {
                        (
                            c,
                            comps
                                .into_iter()
                                .map(|p| p.into_iter().map(|v| back[v]).collect::<Vec<_>>())
                                .collect::<Vec<_>>(),
                        )
                    })
                })
                .expect("connectivity one means a cut vertex");
            for mut piece in pieces {
                piece.push(c);
                piece.sort_unstable();
                let (h, labels) = g.induced_subgraph(&piece)?;
                if chromatic_number(&h)?.0 >= 4 {
                    return Ok(lift(k4_sets(&h)?, &labels));
                }
            }
            unreachable!("a block of a 4-chromatic graph is 4-chromatic")
        }
        2 => {
            let (x, y, side_one, side_two) = least_separating_pair(g)?;
            for (side, other) in [(&side_one, &side_two), (&side_two, &side_one)] {
                let mut piece = side.clone();
                piece.extend([x, y]);
                piece.sort_unstable();
                let (h, labels) = g.induced_subgraph(&piece)?;
                let (hx, hy) = (labels.binary_search(&x).unwrap(), labels.binary_search(&y).unwrap());
                let h = if h.has_edge(hx, hy) { h } else { h.with_edge(hx, hy)? };
                if chromatic_number(&h)?.0 < 4 {
                    continue;
                }
                let mut sets = lift(k4_sets(&h)?, &labels);
                if !g.has_edge(x, y) {
                    // A path through the other side stands in for the edge xy.
                    let route = g
                        .shortest_path_within(x, y, |v| other.binary_search(&v).is_ok())
                        .expect("every side of a minimal separator touches both ends");
                    let interior = &route[1..route.len() - 1];
                    let holder =
                        sets.iter().position(|s| s.contains(&x)).or_else(|| sets.iter().position(|s| s.contains(&y)));
                    if let Some(i) = holder {
                        sets[i].extend_from_slice(interior);
                    }
                }
                return Ok(sets);
            }
            unreachable!("one side of a 2-separation of a 4-chromatic graph is 4-chromatic")
        }
        _ => wheel_sets(g),
    }
}

/// Lexicographically least `{x, y}` whose removal disconnects `g`, with the
/// first remaining component and the union of the others.
fn least_separating_pair(g: &Graph) -> Result<(Vertex, Vertex, Vec<Vertex>, Vec<Vertex>)> {
    let n = g.vertex_count();
    for x in 0..n {
        for y in x + 1..n {
            let keep: Vec<Vertex> = (0..n).filter(|&v| v != x && v != y).collect();
            let (rest, labels) = g.induced_subgraph(&keep)?;
            let comps = rest.components();
            if comps.len() > 1 {
                let mut first: Vec<Vertex> = comps[0].iter().map(|&v| labels[v]).collect();
                first.sort_unstable();
                let mut others: Vec<Vertex> = comps[1..].iter().flatten().map(|&v| labels[v]).collect();
                others.sort_unstable();
                return Ok((x, y, first, others));
            }
        }
    }
    Err(GraphError::InvalidParameter("graph has no separating pair".into()))
}

/// `K4` model in a 3-connected graph: a cycle in `G - v`, three fan paths
/// from `v` onto it, and the cycle cut into three arcs at the fan ends.
fn wheel_sets(g: &Graph) -> Result<Vec<Vec<Vertex>>> {
    let v = 0;
    let rest = g.without_vertex(v)?;
    let back: Vec<Vertex> = g.vertices().filter(|&u| u != v).collect();
    let cycle: Vec<Vertex> =
        any_cycle(&rest.graph).expect("G - v is 2-connected").into_iter().map(|u| back[u]).collect();
    let f = fan(g, v, &cycle)?;
    let paths = &f.paths[..3];
    let ends: Vec<usize> = {
        let mut e: Vec<usize> =
            paths.iter().map(|p| cycle.iter().position(|u| u == p.last().unwrap()).unwrap()).collect();
        e.sort_unstable();
        e
    };
    let mut hub = vec![v];
    for p in paths {
        hub.extend_from_slice(&p[1..p.len() - 1]);
    }
    let l = cycle.len();
    let mut sets = vec![hub];
    for i in 0..3 {
        let (from, to) = (ends[i], if i == 2 { ends[0] + l } else { ends[i + 1] });
        sets.push((from..to).map(|k| cycle[k % l]).collect());
    }
    Ok(sets)
}

/// Some cycle, found by breadth-first search: the first non-tree edge
/// closes a cycle through the lowest common ancestor.
fn any_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] && parent[w] != u {
                    let (mut a, mut b) = (vec![u], vec![w]);
                    while a.last() != b.last() {
                        if depth[*a.last().unwrap()] >= depth[*b.last().unwrap()] {
                            a.push(parent[*a.last().unwrap()]);
                        } else {
                            b.push(parent[*b.last().unwrap()]);
                        }
                    }
                    b.pop();
                    b.reverse();
                    a.extend(b);
                    return Some(a);
                }
            }
        }
    }
    None
}

/// The most colourful breadth-first layer around a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerChoice {
    pub d: usize,
    pub layers: LayerDecomposition,
    /// Colouring of `G[S_d(x)]`, indexed by position in `layers.layers[d]`.
    pub coloring: Coloring,
}

impl LayerChoice {
    pub fn chi(&self) -> usize {
        self.coloring.k
    }
}

/// The layer `S_d(x)` of largest chromatic number (smallest `d` on ties).
/// Colouring layer `d` with palette `d mod 2` shows `χ(G) <= 2 max_d χ(S_d)`,
/// so the chosen layer has `χ >= ⌈χ(G)/2⌉`.
pub fn max_chromatic_layer(g: &Graph, x: Vertex) -> Result<LayerChoice> {
    let layers = g.bfs_layers(x)?;
    let mut best: Option<(usize, Coloring)> = None;
    for (d, layer) in layers.layers.iter().enumerate() {
        let (h, _) = g.induced_subgraph(layer)?;
        let (chi, coloring) = chromatic_number(&h)?;
        if best.as_ref().is_none_or(|b| chi > b.1.k) {
            best = Some((d, coloring));
        }
    }
    let (d, coloring) = best.expect("at least the root layer");
    Ok(LayerChoice { d, layers, coloring })
}

/// One descent step of [`extract_clique_minor`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceLevel {
    /// Size of the clique minor sought at this level.
    pub k: usize,
    /// Root in the labels of the input graph.
    pub root: Vertex,
    pub layer: usize,
    /// `χ` of the component being searched.
    pub graph_chi: usize,
    /// `χ` of the chosen layer.
    pub layer_chi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractionTrace {
    pub levels: Vec<TraceLevel>,
    pub model: BranchSets,
}

impl fmt::Display for ExtractionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.levels {
            writeln!(f, "level {}: root={} layer={} chi={}", l.k, l.root, l.layer, l.layer_chi)?;
        }
        write!(f, "{}", self.model)
    }
}

/// A `K_k` minor in a graph with `χ >= 2^k`. Inside the most colourful
/// component, rooted at its lowest vertex, the most colourful layer `S_d`
/// still has `χ >= 2^(k-1)` and holds a `K_(k-1)` minor by induction; the
/// ball of radius `d - 1` is connected and sees every one of those branch
/// sets, so it serves as the last one.
pub fn extract_clique_minor(g: &Graph, k: usize) -> Result<ExtractionTrace> {
    if k < 2 {
        return Err(GraphError::InvalidParameter(format!("clique size must be at least 2, got {k}")));
    }
    if k >= usize::BITS as usize - 1 {
        return Err(GraphError::InvalidParameter(format!("clique size {k} is out of range")));
    }
    let (chi, _) = chromatic_number(g)?;
    if chi < 1 << k {
        return Err(known_low(1 << k, chi));
    }
    let mut levels = Vec::new();
    let all: Vec<Vertex> = g.vertices().collect();
    let sets = clique_sets(g, &all, k, &mut levels)?;
    Ok(ExtractionTrace { levels, model: BranchSets::new(g, &complete(k)?, sets) })
}

fn clique_sets(g: &Graph, labels: &[Vertex], k: usize, levels: &mut Vec<TraceLevel>) -> Result<Vec<Vec<Vertex>>> {
    if k == 2 {
        let (u, v) = g.edges().next().expect("χ >= 4 means edges exist");
        return Ok(vec![vec![labels[u]], vec![labels[v]]]);
    }
    let (h, local, graph_chi) = colourful_component(g)?;
    let labels: Vec<Vertex> = local.iter().map(|&v| labels[v]).collect();
    let choice = max_chromatic_layer(&h, 0)?;
    levels.push(TraceLevel { k, root: labels[0], layer: choice.d, graph_chi, layer_chi: choice.chi() });
    let layer = &choice.layers.layers[choice.d];
    let (inner, inner_local) = h.induced_subgraph(layer)?;
    let inner_labels: Vec<Vertex> = inner_local.iter().map(|&v| labels[v]).collect();
    let mut sets = clique_sets(&inner, &inner_labels, k - 1, levels)?;
    sets.push(choice.layers.inner_ball(choice.d).into_iter().map(|v| labels[v]).collect());
    Ok(sets)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Every labeled graph on `1..=n_max` vertices (`n_max <= 6`).
    Exhaustive,
    /// `samples` random graphs per order, each edge present with
    /// probability one half.
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HadwigerReport {
    pub graphs: usize,
    /// Number of `(g, k)` pairs with `χ(g) >= k` that were checked.
    pub checks: usize,
    pub counterexamples: Vec<(Graph, usize)>,
}

impl HadwigerReport {
    fn merge(mut self, other: HadwigerReport) -> HadwigerReport {
        self.graphs += other.graphs;
        self.checks += other.checks;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

impl fmt::Display for HadwigerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs: {}", self.graphs)?;
        writeln!(f, "checks: {}", self.checks)?;
        writeln!(f, "counterexamples: {}", self.counterexamples.len())?;
        for (g, k) in &self.counterexamples {
            writeln!(f, "counterexample k={k}: {g:?}")?;
        }
        Ok(())
    }
}

const EXHAUSTIVE_MAX_VERTICES: usize = 6;

fn hadwiger_check(g: &Graph, k_max: usize) -> Result<HadwigerReport> {
    let (chi, _) = chromatic_number(g)?;
    let mut report = HadwigerReport { graphs: 1, ..Default::default() };
    for k in 2..=k_max.min(chi) {
        report.checks += 1;
        if find_minor_model(g, &complete(k)?)?.is_none() {
            report.counterexamples.push((g.clone(), k));
        }
    }
    Ok(report)
}

/// Checks that `χ(g) >= k` forces a `K_k` minor for `2 <= k <= k_max` on
/// every scanned graph.
pub fn hadwiger_scan(n_max: usize, k_max: usize, mode: ScanMode) -> Result<HadwigerReport> {
    let mut report = HadwigerReport::default();
    match mode {
        ScanMode::Exhaustive => {
            if n_max > EXHAUSTIVE_MAX_VERTICES {
                return Err(GraphError::TooLarge {
                    what: "exhaustive scan order",
                    actual: n_max,
                    limit: EXHAUSTIVE_MAX_VERTICES,
                });
            }
            for n in 1..=n_max {
                let masks = 1u64 << (n * (n - 1) / 2);
                let part = (0..masks)
                    .into_par_iter()
                    .map(|m| hadwiger_check(&Graph::from_edge_mask(n, m)?, k_max))
                    .try_reduce(HadwigerReport::default, |a, b| Ok(a.merge(b)))?;
                report = report.merge(part);
            }
        }
        ScanMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for n in 1..=n_max {
                for _ in 0..samples {
                    let edges: Vec<(Vertex, Vertex)> =
                        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
                    report = report.merge(hadwiger_check(&Graph::from_edges(n, edges)?, k_max)?);
                }
            }
        }
    }
    report.counterexamples.sort_by_key(|(g, k)| (g.vertex_count(), *k, g.edges().collect::<Vec<_>>()));
    Ok(report)
}
