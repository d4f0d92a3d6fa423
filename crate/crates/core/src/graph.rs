//! Finite simple undirected graphs on the dense label set `0..n`.
//!
//! A [`Graph`] is immutable once built. Every edit (vertex deletion, edge
//! deletion, edge contraction, subdivision) returns a fresh graph, and the
//! edits that drop a label also return the relabeling so that certificates
//! expressed in the old labels can be carried across.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{GraphError, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges().collect::<Vec<_>>())
    }
}

/// One step of a minor edit sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EditStep {
    DeleteVertex(Vertex),
    DeleteEdge(Vertex, Vertex),
    ContractEdge(Vertex, Vertex),
}

impl fmt::Display for EditStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EditStep::DeleteVertex(v) => write!(f, "delete-vertex {v}"),
            EditStep::DeleteEdge(u, v) => write!(f, "delete-edge {u} {v}"),
            EditStep::ContractEdge(u, v) => write!(f, "contract {u} {v}"),
        }
    }
}

/// Result of an edit: the new graph plus, for every old label, its new
/// label (`None` when the vertex was deleted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edited {
    pub graph: Graph,
    pub relabel: Vec<Option<Vertex>>,
}

/// Breadth-first shells `S_0(x), S_1(x), ...` of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub root: Vertex,
    pub layers: Vec<Vec<Vertex>>,
    distance: Vec<usize>,
}

impl LayerDecomposition {
    /// Largest distance from the root.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_of(&self, v: Vertex) -> usize {
        self.distance[v]
    }

    /// Union of the layers strictly inside `d`.
    pub fn inner_ball(&self, d: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.layers[..d].iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph { adj: vec![Vec::new(); n], edge_count: 0 })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edge_count += 1;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// The labeled graph on `n` vertices whose edge set is selected by
    /// `mask`: bit `i` stands for the `i`-th pair `(u, v)`, `u < v`, in
    /// lexicographic order. Ranging `mask` over `0..2^(n(n-1)/2)` yields
    /// every labeled graph on `n` vertices exactly once.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
        let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        if pairs.len() < 64 && mask >> pairs.len() != 0 {
            return Err(GraphError::InvalidParameter(format!(
                "edge mask {mask:#x} has bits beyond {} pairs",
                pairs.len()
            )));
        }
        Graph::from_edges(
            n,
            pairs.into_iter().enumerate().filter(|&(i, _)| i < 64 && mask >> i & 1 == 1).map(|(_, e)| e),
        )
    }

    // Internal builder: silently merges duplicates and drops loops.
    fn from_edge_soup<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Graph { adj, edge_count: edge_count / 2 }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.adj.len() })
        }
    }

    fn check_edge(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(GraphError::MissingEdge { u, v })
        }
    }

    /// Distances from `x`; `None` for unreachable vertices.
    pub fn distances_from(&self, x: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[x] = Some(0);
        queue.push_back(x);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest label.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count + 1 == self.vertex_count()
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Whether the vertex set `set` induces a connected subgraph. The empty
    /// set is not connected.
    pub fn induces_connected(&self, set: &[Vertex]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.vertex_count()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        let distinct = {
            let mut s = set.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        reached == distinct
    }

    /// Subgraph induced by `set`. Vertex `i` of the result is the `i`-th
    /// smallest element of `set`; the returned vector maps new labels to old.
    pub fn induced_subgraph(&self, set: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        if set.is_empty() {
            return Err(GraphError::Empty);
        }
        for &v in set {
            self.check_vertex(v)?;
        }
        let mut labels = set.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in labels.iter().enumerate() {
            new_of[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| new_of[u] != usize::MAX && new_of[v] != usize::MAX)
            .map(|(u, v)| (new_of[u], new_of[v]));
        Ok((Graph::from_edge_soup(labels.len(), edges), labels))
    }

    /// Spanning subgraph with exactly the given edges (all must exist here).
    pub fn spanning_subgraph<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut kept = Vec::new();
        for (u, v) in edges {
            self.check_edge(u, v)?;
            kept.push((u, v));
        }
        Ok(Graph::from_edge_soup(self.vertex_count(), kept))
    }

    /// Same graph plus the edge `uv` (a no-op when present).
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(Graph::from_edge_soup(self.vertex_count(), self.edges().chain([(u, v)])))
    }

    /// Disjoint union with `other`, whose labels are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edge_soup(off + other.vertex_count(), edges)
    }

    pub fn without_vertex(&self, v: Vertex) -> Result<Edited> {
        self.apply_edit(EditStep::DeleteVertex(v))
    }

    pub fn apply_edit(&self, step: EditStep) -> Result<Edited> {
        let n = self.vertex_count();
        match step {
            EditStep::DeleteVertex(x) => {
                self.check_vertex(x)?;
                if n == 1 {
                    return Err(GraphError::Empty);
                }
                let relabel: Vec<Option<Vertex>> = (0..n)
                    .map(|v| match v.cmp(&x) {
                        std::cmp::Ordering::Less => Some(v),
                        std::cmp::Ordering::Equal => None,
                        std::cmp::Ordering::Greater => Some(v - 1),
                    })
                    .collect();
                let edges = self.edges().filter_map(|(u, v)| Some((relabel[u]?, relabel[v]?)));
                Ok(Edited { graph: Graph::from_edge_soup(n - 1, edges), relabel })
            }
            EditStep::DeleteEdge(u, v) => {
                self.check_edge(u, v)?;
                let edges = self.edges().filter(|&e| e != (u.min(v), u.max(v)));
                Ok(Edited { graph: Graph::from_edge_soup(n, edges), relabel: (0..n).map(Some).collect() })
            }
            EditStep::ContractEdge(u, v) => {
                self.check_edge(u, v)?;
                let (keep, gone) = (u.min(v), u.max(v));
                let relabel: Vec<Option<Vertex>> = (0..n)
                    .map(|w| {
                        let w = if w == gone { keep } else { w };
                        Some(if w > gone { w - 1 } else { w })
                    })
                    .collect();
                let edges = self.edges().map(|(a, b)| (relabel[a].unwrap(), relabel[b].unwrap()));
                Ok(Edited { graph: Graph::from_edge_soup(n - 1, edges), relabel })
            }
        }
    }

    /// Replace edge `uv` by a path `u - w - v` through the new vertex `w = n`.
    pub fn subdivide_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_edge(u, v)?;
        let w = self.vertex_count();
        let key = (u.min(v), u.max(v));
        let edges = self.edges().filter(|&e| e != key).chain([(u, w), (v, w)]);
        Ok(Graph::from_edge_soup(w + 1, edges))
    }

    pub fn bfs_layers(&self, x: Vertex) -> Result<LayerDecomposition> {
        self.check_vertex(x)?;
        let dist = self.distances_from(x);
        if dist.iter().any(Option::is_none) {
            return Err(GraphError::Disconnected);
        }
        let distance: Vec<usize> = dist.into_iter().map(Option::unwrap).collect();
        let depth = distance.iter().copied().max().unwrap_or(0);
        let mut layers = vec![Vec::new(); depth + 1];
        for (v, &d) in distance.iter().enumerate() {
            layers[d].push(v);
        }
        Ok(LayerDecomposition { root: x, layers, distance })
    }

    /// A shortest path from `x` to `y` using only vertices allowed by
    /// `allowed` (endpoints are always allowed). Lowest labels are explored
    /// first.
    pub fn shortest_path_within<F>(&self, x: Vertex, y: Vertex, allowed: F) -> Option<Vec<Vertex>>
    where
        F: Fn(Vertex) -> bool,
    {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[x] = x;
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            if u == y {
                break;
            }
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX && (w == y || allowed(w)) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[y] == usize::MAX {
            return None;
        }
        let mut path = vec![y];
        while *path.last().unwrap() != x {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        Some(path)
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(GraphError::InvalidParameter(format!("K_{{{a},{b}}} needs two nonempty parts")));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Wheel: a cycle on `0..rim` plus the hub `rim` joined to every rim vertex.
pub fn wheel(rim: usize) -> Result<Graph> {
    let c = cycle(rim)?;
    Graph::from_edges(rim + 1, c.edges().chain((0..rim).map(|i| (i, rim))))
}

/// Petersen graph with `u_i -> i` and `v_i -> 5 + i`, edges `u_i u_{i+1}`,
/// `u_i v_i` and `v_i v_{i+2}` (indices mod 5).
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5 + i), (5 + i, 5 + (i + 2) % 5)]);
    Graph::from_edges(10, edges).expect("petersen edges are valid")
}

/// Brute-force isomorphism test for small graphs (at most 10 vertices).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    const LIMIT: usize = 10;
    if a.vertex_count() > LIMIT {
        return Err(GraphError::TooLarge { what: "isomorphism test", actual: a.vertex_count(), limit: LIMIT });
    }
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == a.vertex_count() {
            return true;
        }
        for w in b.vertices() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                used[w] = true;
                map.push(w);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    let mut used = vec![false; b.vertex_count()];
    Ok(extend(a, b, &mut Vec::new(), &mut used))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contracting_k5_gives_k4() {
        let k5 = complete(5).unwrap();
        for (u, v) in k5.edges() {
            let e = k5.apply_edit(EditStep::ContractEdge(u, v)).unwrap();
            assert_eq!(e.graph, complete(4).unwrap());
        }
    }

    #[test]
    fn contracting_cycle_shortens_it() {
        for n in 4..9 {
            let c = cycle(n).unwrap();
            for (u, v) in c.edges() {
                let e = c.apply_edit(EditStep::ContractEdge(u, v)).unwrap();
                assert!(is_isomorphic(&e.graph, &cycle(n - 1).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn contraction_relabels_towards_min() {
        let p = path(4).unwrap();
        let e = p.apply_edit(EditStep::ContractEdge(2, 1)).unwrap();
        assert_eq!(e.relabel, vec![Some(0), Some(1), Some(1), Some(2)]);
        assert_eq!(e.graph, path(3).unwrap());
    }

    #[test]
    fn deletions() {
        let k2 = complete(2).unwrap();
        let e = k2.apply_edit(EditStep::DeleteEdge(0, 1)).unwrap();
        assert_eq!(e.graph, Graph::empty(2).unwrap());
        assert_eq!(Graph::empty(1).unwrap().apply_edit(EditStep::DeleteVertex(0)), Err(GraphError::Empty));
        assert!(matches!(e.graph.apply_edit(EditStep::DeleteEdge(0, 1)), Err(GraphError::MissingEdge { .. })));
        assert!(matches!(k2.apply_edit(EditStep::DeleteVertex(2)), Err(GraphError::VertexOutOfRange { .. })));
        let d = path(3).unwrap().apply_edit(EditStep::DeleteVertex(1)).unwrap();
        assert_eq!(d.relabel, vec![Some(0), None, Some(1)]);
        assert_eq!(d.graph.edge_count(), 0);
    }

    #[test]
    fn subdivision_examples() {
        let p3 = complete(2).unwrap().subdivide_edge(0, 1).unwrap();
        assert!(is_isomorphic(&p3, &path(3).unwrap()).unwrap());
        let c3 = cycle(3).unwrap();
        for (u, v) in c3.edges() {
            let s = c3.subdivide_edge(u, v).unwrap();
            assert!(is_isomorphic(&s, &cycle(4).unwrap()).unwrap());
        }
        let p = petersen();
        let s = p.subdivide_edge(0, 1).unwrap();
        assert_eq!(s.max_degree(), 3);
        assert_eq!(s.degree(10), 2);
        assert!(matches!(p.subdivide_edge(0, 2), Err(GraphError::MissingEdge { .. })));
    }

    #[test]
    fn layer_examples() {
        let k1 = Graph::empty(1).unwrap();
        let l = k1.bfs_layers(0).unwrap();
        assert_eq!(l.layers, vec![vec![0]]);
        assert_eq!(l.depth(), 0);
        let l = path(3).unwrap().bfs_layers(0).unwrap();
        assert_eq!(l.layers, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(Graph::empty(2).unwrap().bfs_layers(0), Err(GraphError::Disconnected));
    }

    #[test]
    fn petersen_layers_match_all_pairs_distances() {
        // Floyd-Warshall as an independent distance oracle.
        let p = petersen();
        let n = p.vertex_count();
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for (v, row) in d.iter_mut().enumerate() {
            row[v] = 0;
        }
        for (u, v) in p.edges() {
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        let l = p.bfs_layers(0).unwrap();
        assert_eq!(l.layers[0], vec![0]);
        assert_eq!(l.layers[1], vec![1, 4, 5]);
        assert_eq!(l.layers[2], vec![2, 3, 6, 7, 8, 9]);
        for (v, &dist) in d[0].iter().enumerate() {
            assert_eq!(l.layer_of(v), dist);
        }
    }

    #[test]
    fn constructors() {
        let p = petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert_eq!(p.max_degree(), 3);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert!(cycle(2).is_err());
        assert_eq!(complete(0), Err(GraphError::Empty));
        assert!(complete_bipartite(0, 3).is_err());
        assert_eq!(complete_bipartite(3, 3).unwrap().edge_count(), 9);
        let w = wheel(5).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (6, 10));
    }

    #[test]
    fn queries() {
        let p5 = path(5).unwrap();
        assert!(p5.is_tree());
        assert_eq!(p5.leaves(), vec![0, 4]);
        assert!(!cycle(5).unwrap().is_tree());
        let (k3, labels) = complete(5).unwrap().induced_subgraph(&[4, 1, 2]).unwrap();
        assert_eq!(k3, complete(3).unwrap());
        assert_eq!(labels, vec![1, 2, 4]);
        assert_eq!(complete(5).unwrap().induced_subgraph(&[]), Err(GraphError::Empty));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!two.is_connected());
        assert!(two.induces_connected(&[0, 1]));
        assert!(!two.induces_connected(&[0, 2]));
        assert!(!two.induces_connected(&[]));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(Graph::from_edges(2, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge { u: 0, v: 1 }));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
    }
}
