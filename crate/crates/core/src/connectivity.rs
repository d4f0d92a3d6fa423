//! Vertex connectivity, internally disjoint paths and fans.
//!
//! Everything here reduces to unit-capacity max flow on the split graph:
//! each vertex `v` becomes `in(v) -> out(v)` with capacity one, and every
//! edge `ab` becomes the arcs `out(a) -> in(b)` and `out(b) -> in(a)`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex};

struct Arc {
    to: usize,
    cap: usize,
    rev: usize,
}

struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    fn new(nodes: usize) -> Network {
        Network { arcs: (0..nodes).map(|_| Vec::new()).collect() }
    }

    fn add(&mut self, from: usize, to: usize, cap: usize) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rev_from });
        self.arcs[to].push(Arc { to: from, cap: 0, rev: rev_to });
    }

    /// One BFS augmentation; returns false when the sink is unreachable.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for (i, a) in self.arcs[u].iter().enumerate() {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    parent[a.to] = Some((u, i));
                    queue.push_back(a.to);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while let Some((u, i)) = parent[v] {
            self.arcs[u][i].cap -= 1;
            let rev = self.arcs[u][i].rev;
            self.arcs[v][rev].cap += 1;
            v = u;
        }
        true
    }
}

fn vin(v: Vertex) -> usize {
    2 * v
}

fn vout(v: Vertex) -> usize {
    2 * v + 1
}

/// Up to `limit` internally disjoint `x`-`y` paths, as many as exist.
fn max_disjoint_paths(g: &Graph, x: Vertex, y: Vertex, limit: usize) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut net = Network::new(2 * n);
    for v in g.vertices() {
        let cap = if v == x || v == y { limit } else { 1 };
        net.add(vin(v), vout(v), cap);
    }
    for (a, b) in g.edges() {
        for (p, q) in [(a, b), (b, a)] {
            // Nothing re-enters x or leaves y, so flow paths stay simple.
            if q != x && p != y {
                net.add(vout(p), vin(q), 1);
            }
        }
    }
    let mut flow = 0;
    while flow < limit && net.augment(vout(x), vin(y)) {
        flow += 1;
    }
    // Flow on an original arc shows up as spare capacity on its reverse.
    let mut used: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for (u, arcs) in net.arcs.iter().enumerate() {
        if u % 2 == 1 {
            for a in arcs {
                if a.to % 2 == 0 && a.to / 2 != u / 2 && net.arcs[a.to][a.rev].cap > 0 && a.cap == 0 {
                    used[u].push(a.to);
                }
            }
        }
    }
    let mut paths = Vec::with_capacity(flow);
    for _ in 0..flow {
        let mut p = vec![x];
        let mut cur = x;
        while cur != y {
            let next_in = used[vout(cur)].remove(0);
            cur = next_in / 2;
            p.push(cur);
        }
        paths.push(p);
    }
    paths.sort();
    paths
}

/// `k` pairwise internally disjoint paths from `x` to `y`, if they exist.
pub fn disjoint_paths(g: &Graph, x: Vertex, y: Vertex, k: usize) -> Result<Option<Vec<Vec<Vertex>>>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(GraphError::InvalidParameter("path endpoints must differ".into()));
    }
    if k == 0 {
        return Err(GraphError::InvalidParameter("need at least one path".into()));
    }
    let paths = max_disjoint_paths(g, x, y, k);
    Ok((paths.len() == k).then_some(paths))
}

/// Maximum number of internally disjoint `x`-`y` paths (for adjacent `x`,
/// `y` the edge itself counts as one).
pub fn local_connectivity(g: &Graph, x: Vertex, y: Vertex) -> Result<usize> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(GraphError::InvalidParameter("path endpoints must differ".into()));
    }
    Ok(max_disjoint_paths(g, x, y, g.vertex_count()).len())
}

/// Vertex connectivity, with `κ(K_n) = n - 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = n.saturating_sub(1);
    for x in g.vertices() {
        for y in x + 1..n {
            if !g.has_edge(x, y) {
                best = best.min(max_disjoint_paths(g, x, y, best).len());
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// Paths from `center` into `targets`, pairwise disjoint except at `center`,
/// each meeting `targets` only at its last vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub center: Vertex,
    pub targets: Vec<Vertex>,
    pub paths: Vec<Vec<Vertex>>,
}

impl Fan {
    pub fn size(&self) -> usize {
        self.paths.len()
    }

    pub fn ends(&self) -> Vec<Vertex> {
        self.paths.iter().map(|p| *p.last().unwrap()).collect()
    }

    /// Checks the fan invariants against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.center >= n || self.targets.iter().any(|&u| u >= n || u == self.center) {
            return false;
        }
        let mut seen = vec![false; n];
        for p in &self.paths {
            if p.len() < 2 || p[0] != self.center {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for (i, &v) in p.iter().enumerate().skip(1) {
                let is_target = self.targets.contains(&v);
                if is_target != (i == p.len() - 1) || seen[v] || v == self.center {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.paths.iter().enumerate() {
            write!(f, "path {i}:")?;
            for v in p {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Largest `center`,`targets`-fan: join a new vertex to every target, pack
/// disjoint paths from `center` to it, then cut each path at its first
/// target. In a `k`-connected graph with at least `k` targets the fan has
/// size at least `k`.
pub fn fan(g: &Graph, center: Vertex, targets: &[Vertex]) -> Result<Fan> {
    g.check_vertex(center)?;
    let mut targets = targets.to_vec();
    targets.sort_unstable();
    targets.dedup();
    for &u in &targets {
        g.check_vertex(u)?;
    }
    if targets.is_empty() {
        return Err(GraphError::InvalidParameter("fan needs at least one target".into()));
    }
    if targets.contains(&center) {
        return Err(GraphError::InvalidParameter(format!("fan centre {center} is one of its targets")));
    }
    let aux = g.vertex_count();
    let extended = g.disjoint_union(&Graph::empty(1)?);
    let extended = targets.iter().try_fold(extended, |acc, &u| acc.with_edge(u, aux))?;
    let mut is_target = vec![false; g.vertex_count()];
    for &u in &targets {
        is_target[u] = true;
    }
    let paths = max_disjoint_paths(&extended, center, aux, targets.len())
        .into_iter()
        .map(|p| {
            let cut = p.iter().position(|&v| v != aux && is_target[v]).expect("paths reach aux through a target");
            p[..=cut].to_vec()
        })
        .collect();
    Ok(Fan { center, targets, paths })
}
