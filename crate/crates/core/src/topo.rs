//! Topological minors: subdivisions of a pattern inside a host.

use std::collections::HashSet;
use std::fmt;

use crate::bits::{bit, BitGraph, Mask};
use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex};
use crate::minor::{earlier_twins, minimize_minor_witness, pattern_order, BranchSets, MinimalWitness};

/// A subdivision of `pattern` inside `host`: pattern vertex `i` sits on host
/// vertex `branch[i]`, and the `e`-th pattern edge `(i, j)` (in
/// `pattern.edges()` order, `i < j`) is realised by `paths[e]`, which runs
/// from `branch[i]` to `branch[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionEmbedding {
    pub host: Graph,
    pub pattern: Graph,
    pub branch: Vec<Vertex>,
    pub paths: Vec<Vec<Vertex>>,
}

impl SubdivisionEmbedding {
    /// The path realising pattern edge `{i, j}`, oriented from `branch[i]`.
    pub fn path(&self, i: Vertex, j: Vertex) -> Option<Vec<Vertex>> {
        let (a, b) = (i.min(j), i.max(j));
        let idx = self.pattern.edges().position(|e| e == (a, b))?;
        let mut p = self.paths.get(idx)?.clone();
        if i > j {
            p.reverse();
        }
        Some(p)
    }

    pub fn verify(&self) -> Result<bool> {
        for &v in self.branch.iter().chain(self.paths.iter().flatten()) {
            self.host.check_vertex(v)?;
        }
        let edges: Vec<(Vertex, Vertex)> = self.pattern.edges().collect();
        if self.branch.len() != self.pattern.vertex_count() || self.paths.len() != edges.len() {
            return Ok(false);
        }
        let n = self.host.vertex_count();
        let mut used = vec![false; n];
        for &x in &self.branch {
            if used[x] {
                return Ok(false);
            }
            used[x] = true;
        }
        for (&(i, j), p) in edges.iter().zip(&self.paths) {
            if p.len() < 2 {
                return Ok(false);
            }
            let ends = (p[0], p[p.len() - 1]);
            if ends != (self.branch[i], self.branch[j]) && ends != (self.branch[j], self.branch[i]) {
                return Ok(false);
            }
            if p.windows(2).any(|w| !self.host.has_edge(w[0], w[1])) {
                return Ok(false);
            }
            for &v in &p[1..p.len() - 1] {
                if used[v] {
                    return Ok(false);
                }
                used[v] = true;
            }
        }
        Ok(true)
    }

    /// Host vertices that are internal to some path.
    pub fn internal_vertices(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.paths.iter().flat_map(|p| p[1..p.len() - 1].iter().copied()).collect();
        out.sort_unstable();
        out
    }
}

pub fn verify_subdivision(e: &SubdivisionEmbedding) -> Result<bool> {
    e.verify()
}

impl fmt::Display for SubdivisionEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.branch.iter().enumerate() {
            writeln!(f, "branch {i}: {x}")?;
        }
        for ((i, j), p) in self.pattern.edges().zip(&self.paths) {
            write!(f, "path {i} {j}:")?;
            for v in p {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct TopoSearch<'a> {
    host: &'a BitGraph,
    pattern: &'a Graph,
    order: Vec<Vertex>,
    twins: Vec<Vec<Vertex>>,
    edge_index: Vec<Vec<Option<usize>>>,
    branch: Vec<Option<Vertex>>,
    paths: Vec<Vec<Vertex>>,
    dead: HashSet<(Vec<Option<Vertex>>, Mask)>,
}

impl TopoSearch<'_> {
    fn place(&mut self, idx: usize, used: Mask) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        let need = self.pattern.degree(v);
        let min_label = self.twins[v].iter().map(|&t| self.branch[t].unwrap() + 1).max().unwrap_or(0);
        let to_route: Vec<Vertex> =
            self.pattern.neighbors(v).iter().copied().filter(|&t| self.branch[t].is_some()).collect();
        for x in min_label..self.host.n {
            if used & bit(x) != 0 || (self.host.adj[x].count_ones() as usize) < need {
                continue;
            }
            self.branch[v] = Some(x);
            if self.route(idx, &to_route, 0, used | bit(x)) {
                return true;
            }
            self.branch[v] = None;
        }
        false
    }

    /// Routes the edges from `order[idx]` to its already placed neighbours,
    /// one at a time, then continues with the next pattern vertex.
    fn route(&mut self, idx: usize, targets: &[Vertex], pos: usize, used: Mask) -> bool {
        if !self.capacity_ok(used) {
            return false;
        }
        if pos == targets.len() {
            let key = (self.branch.clone(), used);
            if self.dead.contains(&key) {
                return false;
            }
            if self.place(idx + 1, used) {
                return true;
            }
            self.dead.insert(key);
            return false;
        }
        let v = self.order[idx];
        let t = targets[pos];
        let (s, goal) = (self.branch[t].unwrap(), self.branch[v].unwrap());
        let e = self.edge_index[v][t].unwrap();
        let mut walk = vec![s];
        self.extend_path(idx, targets, pos, e, goal, &mut walk, used)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_path(
        &mut self,
        idx: usize,
        targets: &[Vertex],
        pos: usize,
        e: usize,
        goal: Vertex,
        walk: &mut Vec<Vertex>,
        used: Mask,
    ) -> bool {
        let last = *walk.last().unwrap();
        let mut nbrs = self.host.adj[last];
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if w == goal {
                walk.push(w);
                let (a, b) = (walk[0], goal);
                // Paths are stored from the lower pattern vertex.
                let (i, _) = self.pattern.edges().nth(e).unwrap();
                let mut p = walk.clone();
                if self.branch[i] != Some(a) {
                    debug_assert_eq!(self.branch[i], Some(b));
                    p.reverse();
                }
                self.paths[e] = p;
                walk.pop();
                if self.route(idx, targets, pos + 1, used) {
                    return true;
                }
                continue;
            }
            if used & bit(w) != 0 {
                continue;
            }
            walk.push(w);
            if self.extend_path(idx, targets, pos, e, goal, walk, used | bit(w)) {
                return true;
            }
            walk.pop();
        }
        false
    }

    /// Each placed branch vertex needs a distinct free (or future branch)
    /// neighbour for every incident pattern edge not yet routed.
    fn capacity_ok(&self, used: Mask) -> bool {
        for (p, b) in self.branch.iter().enumerate() {
            let Some(x) = *b else { continue };
            let pending = self.pattern.neighbors(p).iter().filter(|&&t| self.branch[t].is_none()).count();
            if pending > 0 && ((self.host.adj[x] & !used).count_ones() as usize) < pending {
                return false;
            }
        }
        true
    }
}

/// Finds a subdivision of `h` in `g`, or `None` if `h` is not a topological
/// minor of `g`. Hosts are limited to 64 vertices.
pub fn find_subdivision(g: &Graph, h: &Graph) -> Result<Option<SubdivisionEmbedding>> {
    let host = BitGraph::new(g, "subdivision search host")?;
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let mut hd = h.degree_sequence();
    let gd = g.degree_sequence();
    hd.truncate(gd.len());
    if hd.iter().zip(&gd).any(|(a, b)| a > b) {
        return Ok(None);
    }
    let order = pattern_order(h, false);
    let twins = earlier_twins(h, &order);
    let mut edge_index = vec![vec![None; h.vertex_count()]; h.vertex_count()];
    for (e, (i, j)) in h.edges().enumerate() {
        edge_index[i][j] = Some(e);
        edge_index[j][i] = Some(e);
    }
    let mut search = TopoSearch {
        host: &host,
        pattern: h,
        order,
        twins,
        edge_index,
        branch: vec![None; h.vertex_count()],
        paths: vec![Vec::new(); h.edge_count()],
        dead: HashSet::new(),
    };
    if !search.place(0, 0) {
        return Ok(None);
    }
    Ok(Some(SubdivisionEmbedding {
        host: g.clone(),
        pattern: h.clone(),
        branch: search.branch.into_iter().map(Option::unwrap).collect(),
        paths: search.paths,
    }))
}

/// Turns a subdivision into a minor model: every branch vertex gets its own
/// set, and the internal vertices of each path join the set of the path's
/// lower-numbered end, so the path's last edge is the cross edge.
pub fn subdivision_to_model(e: &SubdivisionEmbedding) -> Result<BranchSets> {
    if !e.verify()? {
        return Err(GraphError::InvalidCertificate("subdivision does not verify".into()));
    }
    let mut sets: Vec<Vec<Vertex>> = e.branch.iter().map(|&x| vec![x]).collect();
    for ((i, j), _) in e.pattern.edges().zip(&e.paths) {
        let p = e.path(i, j).expect("edge has a path");
        sets[i].extend_from_slice(&p[1..p.len() - 1]);
    }
    Ok(BranchSets::new(&e.host, &e.pattern, sets))
}

/// Path between `a` and `b` inside the tree spanned by `set`.
pub(crate) fn tree_path(g: &Graph, set: &[Vertex], a: Vertex, b: Vertex) -> Vec<Vertex> {
    g.shortest_path_within(a, b, |v| set.binary_search(&v).is_ok()).expect("branch set is connected")
}

/// Builds a subdivision from a minimal witness of a pattern with maximum
/// degree at most 3. Inside each branch tree a centre `x_i` is chosen with
/// paths to the attachment vertices that meet only at `x_i`; the path for
/// pattern edge `ij` runs from `x_i` through the unique cross edge to `x_j`.
pub fn subdivision_from_witness(w: &MinimalWitness) -> Result<SubdivisionEmbedding> {
    let h = &w.model.pattern;
    if h.max_degree() > 3 {
        return Err(GraphError::PatternDegreeTooHigh { max_degree: h.max_degree() });
    }
    let g = &w.subgraph;
    let sets = &w.model.sets;
    let attach = attachments(w)?;
    let mut centre = Vec::with_capacity(h.vertex_count());
    for i in h.vertices() {
        let points: Vec<Vertex> = h.neighbors(i).iter().map(|&j| attach[i][j].unwrap().0).collect();
        let mut distinct = points.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let shared = points.iter().find(|&&p| points.iter().filter(|&&q| q == p).count() > 1);
        let x = match (shared, distinct.len()) {
            (_, 0) => sets[i][0],
            (Some(&p), _) => p,
            (None, 1 | 2) => points[0],
            (None, _) => {
                let p1 = tree_path(g, &sets[i], points[0], points[2]);
                let p2 = tree_path(g, &sets[i], points[1], points[2]);
                *p1.iter().find(|v| p2.contains(v)).expect("paths share their end")
            }
        };
        centre.push(x);
    }
    assemble(w, &attach, &centre)
}

pub(crate) type Attachments = Vec<Vec<Option<(Vertex, Vertex)>>>;

/// `attach[i][j] = (w_ij, w_ji)`: the unique edge of the witness between
/// branch sets `i` and `j`, for every pattern edge `ij`.
pub(crate) fn attachments(w: &MinimalWitness) -> Result<Attachments> {
    let h = &w.model.pattern;
    let owner = w.model.owner();
    let mut attach = vec![vec![None; h.vertex_count()]; h.vertex_count()];
    for (a, b) in w.subgraph.edges() {
        let (Some(i), Some(j)) = (owner[a], owner[b]) else { continue };
        if i != j {
            if attach[i][j].is_some() {
                return Err(GraphError::InvalidCertificate(format!("branch sets {i} and {j} share several edges")));
            }
            attach[i][j] = Some((a, b));
            attach[j][i] = Some((b, a));
        }
    }
    if let Some((i, j)) = h.edges().find(|&(i, j)| attach[i][j].is_none()) {
        return Err(GraphError::InvalidCertificate(format!("no edge between branch sets {i} and {j}")));
    }
    Ok(attach)
}

/// Joins the centres `centre[i]` (subgraph labels) along
/// `x_i ~ w_ij - w_ji ~ x_j` and checks the result against the host.
pub(crate) fn assemble(
    w: &MinimalWitness,
    attach: &[Vec<Option<(Vertex, Vertex)>>],
    centre: &[Vertex],
) -> Result<SubdivisionEmbedding> {
    let h = &w.model.pattern;
    let g = &w.subgraph;
    let sets = &w.model.sets;
    let mut paths = Vec::with_capacity(h.edge_count());
    for (i, j) in h.edges() {
        let (wij, wji) = attach[i][j].expect("pattern edge has an attachment");
        let mut p = tree_path(g, &sets[i], centre[i], wij);
        p.extend(tree_path(g, &sets[j], wji, centre[j]));
        paths.push(p.into_iter().map(|v| w.labels[v]).collect());
    }
    let e = SubdivisionEmbedding {
        host: w.host.clone(),
        pattern: h.clone(),
        branch: centre.iter().map(|&v| w.labels[v]).collect(),
        paths,
    };
    if !e.verify()? {
        return Err(GraphError::InvalidCertificate("constructed subdivision does not verify".into()));
    }
    Ok(e)
}

/// For a pattern of maximum degree at most 3, turns a minor of `h` in `g`
/// into a subdivision of `h` in `g` by way of a minimal witness. Returns
/// `None` when `h` is not a minor of `g`.
pub fn minor_to_subdivision(g: &Graph, h: &Graph) -> Result<Option<SubdivisionEmbedding>> {
    if h.max_degree() > 3 {
        return Err(GraphError::PatternDegreeTooHigh { max_degree: h.max_degree() });
    }
    let Some(witness) = minimize_minor_witness(g, h)? else {
        return Ok(None);
    };
    subdivision_from_witness(&witness).map(Some)
}
