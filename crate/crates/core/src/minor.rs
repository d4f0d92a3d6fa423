//! Minor containment through branch-set models.
//!
//! `H` is a minor of `G` exactly when there are disjoint nonempty vertex sets
//! `V_1..V_h` of `G`, each inducing a connected subgraph, with an edge between
//! `V_i` and `V_j` for every pattern edge `v_i v_j`. Models found here can be
//! turned into explicit deletion/contraction sequences and shrunk to minimal
//! witnesses.

use std::fmt;

use crate::bits::{bit, from_slice, iter_bits, to_vec, BitGraph, Mask};
use crate::error::{GraphError, Result};
use crate::graph::{EditStep, Graph, Vertex};

/// A minor model: one branch set of host vertices per pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSets {
    pub host: Graph,
    pub pattern: Graph,
    pub sets: Vec<Vec<Vertex>>,
}

impl BranchSets {
    pub fn new(host: &Graph, pattern: &Graph, mut sets: Vec<Vec<Vertex>>) -> BranchSets {
        for s in &mut sets {
            s.sort_unstable();
        }
        BranchSets { host: host.clone(), pattern: pattern.clone(), sets }
    }

    /// Branch set index owning each host vertex.
    pub fn owner(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; self.host.vertex_count()];
        for (i, s) in self.sets.iter().enumerate() {
            for &v in s {
                if v < owner.len() {
                    owner[v] = Some(i);
                }
            }
        }
        owner
    }

    /// Number of host edges between branch sets `i` and `j`.
    pub fn cross_edges(&self, i: usize, j: usize) -> usize {
        let owner = self.owner();
        self.sets[i].iter().flat_map(|&v| self.host.neighbors(v)).filter(|&&w| owner[w] == Some(j)).count()
    }

    /// Checks every model invariant. Out-of-range vertices are an error, any
    /// other violation yields `Ok(false)`.
    pub fn verify(&self) -> Result<bool> {
        for &v in self.sets.iter().flatten() {
            self.host.check_vertex(v)?;
        }
        if self.sets.len() != self.pattern.vertex_count() {
            return Ok(false);
        }
        let mut owner = vec![None; self.host.vertex_count()];
        for (i, s) in self.sets.iter().enumerate() {
            if s.is_empty() {
                return Ok(false);
            }
            for &v in s {
                if owner[v].is_some() {
                    return Ok(false);
                }
                owner[v] = Some(i);
            }
            if !self.host.induces_connected(s) {
                return Ok(false);
            }
        }
        let h = self.sets.len();
        let mut touching = vec![vec![false; h]; h];
        for (a, b) in self.host.edges() {
            if let (Some(i), Some(j)) = (owner[a], owner[b]) {
                touching[i][j] = true;
                touching[j][i] = true;
            }
        }
        Ok(self.pattern.edges().all(|(i, j)| touching[i][j]))
    }
}

pub fn verify_model(m: &BranchSets) -> Result<bool> {
    m.verify()
}

impl fmt::Display for BranchSets {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sets.iter().enumerate() {
            write!(f, "set {i}:")?;
            for v in s {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Pattern vertices `u`, `v` are twins when `N(u) - v == N(v) - u`; swapping
/// them is an automorphism. Returns, for each vertex, the earlier twins.
pub(crate) fn earlier_twins(pattern: &Graph, order: &[Vertex]) -> Vec<Vec<Vertex>> {
    let masks: Vec<Mask> = pattern.vertices().map(|v| from_slice(pattern.neighbors(v))).collect();
    let mut out = vec![Vec::new(); pattern.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        for &u in &order[..i] {
            if masks[u] & !bit(v) == masks[v] & !bit(u) {
                out[v].push(u);
            }
        }
    }
    out
}

/// Search order over pattern vertices: start at a maximum-degree vertex, then
/// repeatedly take the vertex with most already-ordered neighbours (ties:
/// higher degree, then lower label).
pub(crate) fn pattern_order(pattern: &Graph, skip_isolated: bool) -> Vec<Vertex> {
    let n = pattern.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let eligible = |v: Vertex| !skip_isolated || pattern.degree(v) > 0;
    loop {
        let best = pattern.vertices().filter(|&v| !placed[v] && eligible(v)).max_by_key(|&v| {
            let linked = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
            (linked, pattern.degree(v), std::cmp::Reverse(v))
        });
        match best {
            Some(v) => {
                placed[v] = true;
                order.push(v);
            }
            None => return order,
        }
    }
}

struct MinorSearch<'a> {
    host: &'a BitGraph,
    pat_adj: Vec<Mask>,
    order: Vec<Vertex>,
    placed: Vec<bool>,
    twins: Vec<Vec<Vertex>>,
    isolated: Vec<Vertex>,
    sets: Vec<Mask>,
}

struct Slot {
    idx: usize,
    u: Vertex,
    free: Mask,
    allowed: Mask,
    required: Vec<Mask>,
    future_neighbors: usize,
    max_size: u32,
}

impl MinorSearch<'_> {
    fn remaining_after(&self, idx: usize) -> usize {
        self.order.len() - idx - 1 + self.isolated.len()
    }

    fn place(&mut self, idx: usize, free: Mask) -> bool {
        if idx == self.order.len() {
            if (free.count_ones() as usize) < self.isolated.len() {
                return false;
            }
            let mut rest = free;
            for &v in &self.isolated {
                let r = rest & rest.wrapping_neg();
                self.sets[v] = r;
                rest &= !r;
            }
            return true;
        }
        let u = self.order[idx];
        let remaining = self.remaining_after(idx);
        let Some(max_size) = (free.count_ones() as usize).checked_sub(remaining) else {
            return false;
        };
        if max_size == 0 {
            return false;
        }
        let required: Vec<Mask> =
            iter_bits(self.pat_adj[u]).filter(|&w| self.placed[w]).map(|w| self.sets[w]).collect();
        let future_neighbors = iter_bits(self.pat_adj[u]).filter(|&w| !self.placed[w]).count();
        let min_root = self.twins[u].iter().map(|&t| self.sets[t].trailing_zeros() as usize + 1).max().unwrap_or(0);
        for r in iter_bits(free) {
            if r < min_root {
                continue;
            }
            let allowed = free & !(bit(r) - 1);
            let slot =
                Slot { idx, u, free, allowed, required: required.clone(), future_neighbors, max_size: max_size as u32 };
            self.placed[u] = true;
            let cand = self.host.adj[r] & allowed & !bit(r);
            if self.grow(&slot, bit(r), cand, 0) {
                return true;
            }
            self.placed[u] = false;
            self.sets[u] = 0;
        }
        false
    }

    fn grow(&mut self, slot: &Slot, set: Mask, cand: Mask, excluded: Mask) -> bool {
        let nbhd = self.host.neighborhood(set);
        let touches_all = slot.required.iter().all(|&m| nbhd & m != 0);
        if touches_all {
            let free_after = slot.free & !set;
            if (nbhd & free_after).count_ones() as usize >= slot.future_neighbors {
                self.sets[slot.u] = set;
                if self.feasible(slot.idx + 1, free_after) && self.place(slot.idx + 1, free_after) {
                    return true;
                }
            }
            // Supersets of a satisfying set are never needed when no
            // neighbour of `u` is still waiting for a branch set.
            if slot.future_neighbors == 0 {
                return false;
            }
        }
        if set.count_ones() >= slot.max_size {
            return false;
        }
        let mut rest = cand;
        let mut excl = excluded;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !bit(v);
            let next = set | bit(v);
            let next_cand = (rest | self.host.adj[v]) & slot.allowed & !next & !excl;
            if self.grow(slot, next, next_cand, excl) {
                return true;
            }
            excl |= bit(v);
        }
        false
    }

    /// Every unplaced pattern vertex still needs a free component touching
    /// all of its placed neighbours' branch sets.
    fn feasible(&self, idx: usize, free: Mask) -> bool {
        if idx >= self.order.len() {
            return true;
        }
        let mut comps: Vec<(Mask, Mask)> = Vec::new();
        let mut rest = free;
        while rest != 0 {
            let c = self.host.reach(rest & rest.wrapping_neg(), free);
            comps.push((c, self.host.neighborhood(c)));
            rest &= !c;
        }
        self.order[idx..].iter().all(|&w| {
            let required: Vec<Mask> =
                iter_bits(self.pat_adj[w]).filter(|&x| self.placed[x]).map(|x| self.sets[x]).collect();
            comps.iter().any(|&(_, nb)| required.iter().all(|&m| nb & m != 0))
        })
    }
}

/// Finds a branch-set model of `h` in `g`, or `None` when `h` is not a
/// minor of `g`. Deterministic: search follows a fixed pattern order and
/// lowest host labels first. Hosts are limited to 64 vertices.
pub fn find_minor_model(g: &Graph, h: &Graph) -> Result<Option<BranchSets>> {
    let host = BitGraph::new(g, "minor search host")?;
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let order = pattern_order(h, true);
    let isolated: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) == 0).collect();
    let twins = earlier_twins(h, &order);
    let mut search = MinorSearch {
        host: &host,
        pat_adj: h.vertices().map(|v| from_slice(h.neighbors(v))).collect(),
        order,
        placed: vec![false; h.vertex_count()],
        twins,
        isolated,
        sets: vec![0; h.vertex_count()],
    };
    if !search.place(0, host.all()) {
        return Ok(None);
    }
    let sets = search.sets.iter().map(|&m| to_vec(m)).collect();
    Ok(Some(BranchSets::new(g, h, sets)))
}

/// Exhaustive minor test used as an independent oracle. Host vertices are
/// distributed, in label order, into at most `h` unlabeled blocks or
/// discarded; once every block is connected, the quotient graph is checked
/// for a copy of the pattern by trying every bijection from pattern vertices
/// to blocks. A partial distribution is abandoned as soon as some block is
/// split into pieces that can no longer be joined. Hosts are limited to 10
/// vertices.
pub fn has_minor_oracle(g: &Graph, h: &Graph) -> Result<bool> {
    const LIMIT: usize = 10;
    const DISCARD: usize = usize::MAX;
    let n = g.vertex_count();
    if n > LIMIT {
        return Err(GraphError::TooLarge { what: "minor oracle host", actual: n, limit: LIMIT });
    }
    let k = h.vertex_count();
    if k > n {
        return Ok(false);
    }

    struct Oracle {
        adj: Vec<Vec<bool>>,
        pattern_edges: Vec<(usize, usize)>,
        k: usize,
        block: Vec<usize>,
        used: usize,
    }

    impl Oracle {
        // Pieces of a block among the first `upto` vertices, each flagged
        // with whether it still has an unassigned neighbour.
        fn pieces(&self, b: usize, upto: usize) -> Vec<bool> {
            let n = self.block.len();
            let members: Vec<usize> = (0..upto).filter(|&v| self.block[v] == b).collect();
            let mut seen = vec![false; n];
            let mut out = Vec::new();
            for &s in &members {
                if seen[s] {
                    continue;
                }
                seen[s] = true;
                let mut piece = vec![s];
                let mut i = 0;
                while i < piece.len() {
                    let a = piece[i];
                    i += 1;
                    for &c in &members {
                        if !seen[c] && self.adj[a][c] {
                            seen[c] = true;
                            piece.push(c);
                        }
                    }
                }
                out.push(piece.iter().any(|&a| (upto..n).any(|c| self.adj[a][c])));
            }
            out
        }

        fn alive(&self, upto: usize) -> bool {
            (0..self.used).all(|b| {
                let pieces = self.pieces(b, upto);
                pieces.len() <= 1 || pieces.iter().all(|&open| open)
            })
        }

        fn quotient_contains_pattern(&self) -> bool {
            let n = self.block.len();
            let mut q = vec![vec![false; self.k]; self.k];
            for a in 0..n {
                for c in 0..n {
                    let (x, y) = (self.block[a], self.block[c]);
                    if self.adj[a][c] && x != DISCARD && y != DISCARD && x != y {
                        q[x][y] = true;
                    }
                }
            }
            fn assign(
                p: usize,
                image: &mut Vec<usize>,
                taken: &mut [bool],
                q: &[Vec<bool>],
                edges: &[(usize, usize)],
            ) -> bool {
                let k = taken.len();
                if p == k {
                    return edges.iter().all(|&(a, b)| q[image[a]][image[b]]);
                }
                for t in 0..k {
                    if taken[t] {
                        continue;
                    }
                    // Only pattern edges between already-mapped vertices can be checked.
                    if edges
                        .iter()
                        .any(|&(a, b)| (a == p && b < p && !q[t][image[b]]) || (b == p && a < p && !q[image[a]][t]))
                    {
                        continue;
                    }
                    taken[t] = true;
                    image.push(t);
                    if assign(p + 1, image, taken, q, edges) {
                        return true;
                    }
                    image.pop();
                    taken[t] = false;
                }
                false
            }
            assign(0, &mut Vec::new(), &mut vec![false; self.k], &q, &self.pattern_edges)
        }

        fn rec(&mut self, v: usize) -> bool {
            let n = self.block.len();
            if self.k - self.used > n - v {
                return false;
            }
            if !self.alive(v) {
                return false;
            }
            if v == n {
                return (0..self.k).all(|b| self.pieces(b, n).len() == 1) && self.quotient_contains_pattern();
            }
            let fresh = (self.used < self.k).then_some(self.used);
            for b in (0..self.used).chain(fresh).chain([DISCARD]) {
                self.block[v] = b;
                let opened = Some(b) == fresh;
                if opened {
                    self.used += 1;
                }
                let ok = self.rec(v + 1);
                if opened {
                    self.used -= 1;
                }
                if ok {
                    return true;
                }
            }
            self.block[v] = DISCARD;
            false
        }
    }

    let mut oracle = Oracle {
        adj: g.vertices().map(|u| g.vertices().map(|v| g.has_edge(u, v)).collect()).collect(),
        pattern_edges: h.edges().collect(),
        k,
        block: vec![DISCARD; n],
        used: 0,
    };
    Ok(oracle.rec(0))
}

/// Spanning tree of `set` inside `g` (BFS from its smallest vertex).
pub(crate) fn spanning_tree_edges(g: &Graph, set: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let Some(&root) = set.iter().min() else {
        return Vec::new();
    };
    let mut seen = vec![false; g.vertex_count()];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                edges.push((u, w));
                queue.push_back(w);
            }
        }
    }
    edges
}

/// Converts a model into deletion and contraction steps that turn the host
/// into a copy of the pattern: delete uncovered vertices (highest label
/// first), contract a spanning tree of every branch set, then delete the
/// edges between branch sets that the pattern does not have. Labels in each
/// step refer to the graph the step is applied to.
pub fn model_to_edit_sequence(m: &BranchSets) -> Result<Vec<EditStep>> {
    if !m.verify()? {
        return Err(GraphError::InvalidCertificate("model does not verify".into()));
    }
    let owner = m.owner();
    let mut current = m.host.clone();
    let mut label: Vec<Option<Vertex>> = (0..current.vertex_count()).map(Some).collect();
    let mut steps = Vec::new();

    let mut apply = |step: EditStep, current: &mut Graph, label: &mut Vec<Option<Vertex>>| -> Result<()> {
        let edited = current.apply_edit(step)?;
        for l in label.iter_mut() {
            *l = l.and_then(|c| edited.relabel[c]);
        }
        *current = edited.graph;
        steps.push(step);
        Ok(())
    };

    for v in (0..m.host.vertex_count()).rev() {
        if owner[v].is_none() {
            apply(EditStep::DeleteVertex(v), &mut current, &mut label)?;
        }
    }
    for set in &m.sets {
        for (a, b) in spanning_tree_edges(&m.host, set) {
            let (ca, cb) = (label[a].unwrap(), label[b].unwrap());
            apply(EditStep::ContractEdge(ca, cb), &mut current, &mut label)?;
        }
    }
    let pattern_of: Vec<usize> = {
        let mut p = vec![0; current.vertex_count()];
        for (i, s) in m.sets.iter().enumerate() {
            p[label[s[0]].unwrap()] = i;
        }
        p
    };
    let surplus: Vec<(Vertex, Vertex)> =
        current.edges().filter(|&(a, b)| !m.pattern.has_edge(pattern_of[a], pattern_of[b])).collect();
    for (a, b) in surplus {
        apply(EditStep::DeleteEdge(a, b), &mut current, &mut label)?;
    }
    Ok(steps)
}

/// Applies `steps` in order.
pub fn apply_edits(g: &Graph, steps: &[EditStep]) -> Result<Graph> {
    steps.iter().try_fold(g.clone(), |cur, &s| Ok(cur.apply_edit(s)?.graph))
}

/// A subgraph of the host containing the pattern as a minor such that no
/// proper subgraph does, together with a model over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalWitness {
    /// The original host.
    pub host: Graph,
    /// The subgraph, relabeled compactly.
    pub subgraph: Graph,
    /// Host label of each subgraph vertex (increasing).
    pub labels: Vec<Vertex>,
    /// Model over `subgraph`.
    pub model: BranchSets,
}

/// Outcome of checking the six structural properties of a model over a
/// minimal subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessStructure {
    pub branch_sets_are_trees: bool,
    pub one_edge_per_pattern_edge: bool,
    pub no_edge_for_non_edges: bool,
    pub leaves_reach_other_sets: bool,
    pub leaves_bounded_by_degree: bool,
    pub sets_cover_subgraph: bool,
}

impl WitnessStructure {
    pub fn all(&self) -> bool {
        self.branch_sets_are_trees
            && self.one_edge_per_pattern_edge
            && self.no_edge_for_non_edges
            && self.leaves_reach_other_sets
            && self.leaves_bounded_by_degree
            && self.sets_cover_subgraph
    }
}

impl MinimalWitness {
    /// Branch sets in host labels.
    pub fn host_sets(&self) -> Vec<Vec<Vertex>> {
        self.model.sets.iter().map(|s| s.iter().map(|&v| self.labels[v]).collect()).collect()
    }

    /// Subgraph edges in host labels.
    pub fn host_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.subgraph.edges().map(|(a, b)| (self.labels[a], self.labels[b])).collect()
    }

    pub fn structure(&self) -> WitnessStructure {
        let g = &self.subgraph;
        let m = &self.model;
        let h = &m.pattern;
        let owner = m.owner();
        let trees: Vec<(Graph, Vec<Vertex>)> =
            m.sets.iter().map(|s| g.induced_subgraph(s).expect("nonempty set")).collect();
        let branch_sets_are_trees = trees.iter().all(|(t, _)| t.is_tree());
        let mut one_edge = true;
        let mut no_edge = true;
        for i in h.vertices() {
            for j in h.vertices().filter(|&j| j > i) {
                let e = m.cross_edges(i, j);
                if h.has_edge(i, j) {
                    one_edge &= e == 1;
                } else {
                    no_edge &= e == 0;
                }
            }
        }
        let mut leaves_reach = true;
        let mut leaves_bounded = true;
        for (i, (t, labels)) in trees.iter().enumerate() {
            if t.vertex_count() <= 1 {
                continue;
            }
            let leaves = t.leaves();
            leaves_bounded &= leaves.len() <= h.degree(i);
            for l in leaves {
                let w = labels[l];
                leaves_reach &= g.neighbors(w).iter().any(|&x| matches!(owner[x], Some(j) if j != i));
            }
        }
        WitnessStructure {
            branch_sets_are_trees,
            one_edge_per_pattern_edge: one_edge,
            no_edge_for_non_edges: no_edge,
            leaves_reach_other_sets: leaves_reach,
            leaves_bounded_by_degree: leaves_bounded,
            sets_cover_subgraph: owner.iter().all(Option::is_some),
        }
    }
}

/// Working subgraph for minimization: host vertices kept plus kept edges.
#[derive(Clone)]
struct Sub {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Sub {
    fn compact(&self, host_n: usize) -> (Graph, Vec<Vertex>) {
        let mut new_of = vec![usize::MAX; host_n];
        for (i, &v) in self.vertices.iter().enumerate() {
            new_of[v] = i;
        }
        let g = Graph::from_edges(self.vertices.len(), self.edges.iter().map(|&(a, b)| (new_of[a], new_of[b])))
            .expect("subgraph of a simple graph");
        (g, self.vertices.clone())
    }
}

/// Shrinks the host to a minimal subgraph that still has `h` as a minor.
/// Edge deletions are tried before vertex deletions, lowest label first.
pub fn minimize_minor_witness(g: &Graph, h: &Graph) -> Result<Option<MinimalWitness>> {
    match find_minor_model(g, h)? {
        Some(model) => minimize_from_model(&model).map(Some),
        None => Ok(None),
    }
}

/// Minimization seeded with a known model: start from the subgraph spanned
/// by a spanning tree of each branch set and one edge per pattern edge.
pub fn minimize_from_model(model: &BranchSets) -> Result<MinimalWitness> {
    if !model.verify()? {
        return Err(GraphError::InvalidCertificate("model does not verify".into()));
    }
    let g = &model.host;
    let h = &model.pattern;
    let owner = model.owner();
    let mut vertices: Vec<Vertex> = model.sets.iter().flatten().copied().collect();
    vertices.sort_unstable();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for set in &model.sets {
        edges.extend(spanning_tree_edges(g, set).into_iter().map(|(a, b)| (a.min(b), a.max(b))));
    }
    for (i, j) in h.edges() {
        let e = g
            .edges()
            .find(|&(a, b)| {
                (owner[a] == Some(i) && owner[b] == Some(j)) || (owner[a] == Some(j) && owner[b] == Some(i))
            })
            .expect("verified model has a cross edge");
        edges.push(e);
    }
    edges.sort_unstable();
    let mut sub = Sub { vertices, edges };
    let n = g.vertex_count();

    let keeps_minor = |s: &Sub| -> Result<bool> {
        let (sg, _) = s.compact(n);
        Ok(find_minor_model(&sg, h)?.is_some())
    };

    'shrink: loop {
        for i in 0..sub.edges.len() {
            let mut trial = sub.clone();
            trial.edges.remove(i);
            if keeps_minor(&trial)? {
                sub = trial;
                continue 'shrink;
            }
        }
        if sub.vertices.len() > 1 {
            for i in 0..sub.vertices.len() {
                let v = sub.vertices[i];
                let mut trial = sub.clone();
                trial.vertices.remove(i);
                trial.edges.retain(|&(a, b)| a != v && b != v);
                if keeps_minor(&trial)? {
                    sub = trial;
                    continue 'shrink;
                }
            }
        }
        break;
    }
    let (subgraph, labels) = sub.compact(n);
    let model = find_minor_model(&subgraph, h)?.expect("minor preserved throughout minimization");
    Ok(MinimalWitness { host: g.clone(), subgraph, labels, model })
}
