//! Brute-force oracles and generators shared by the integration tests.
//! Nothing here calls into the search code it is used to check.

#![allow(dead_code)]

use graph_minors::graph::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn all_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Uniform graph with exactly `m` edges.
pub fn random_graph_m(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Graph {
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edges(n, pairs).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn connected_within(g: &Graph, set: &[Vertex]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut seen = vec![set[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        i += 1;
        for &w in set {
            if !seen.contains(&w) && g.has_edge(u, w) {
                seen.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// Is `h` isomorphic to a (not necessarily induced) subgraph of `g`?
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    fn place(g: &[Vec<bool>], h: &[Vec<bool>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == h.len() {
            return true;
        }
        for w in 0..g.len() {
            if used[w] || (0..v).any(|u| h[u][v] && !g[map[u]][w]) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if place(g, h, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    if h.vertex_count() > g.vertex_count() {
        return false;
    }
    let (ga, ha) = (adjacency(g), adjacency(h));
    place(&ga, &ha, &mut Vec::new(), &mut vec![false; g.vertex_count()])
}

/// Chromatic number by plain backtracking in label order.
pub fn chromatic_oracle(g: &Graph) -> usize {
    fn colour(a: &[Vec<bool>], k: usize, c: &mut Vec<usize>) -> bool {
        let v = c.len();
        if v == a.len() {
            return true;
        }
        let limit = c.iter().copied().max().map_or(0, |m| m + 1).min(k - 1);
        for x in 0..=limit {
            if (0..v).all(|u| !a[u][v] || c[u] != x) {
                c.push(x);
                if colour(a, k, c) {
                    return true;
                }
                c.pop();
            }
        }
        false
    }
    let a = adjacency(g);
    (1..=g.vertex_count()).find(|&k| colour(&a, k, &mut Vec::new())).unwrap()
}

/// Smallest vertex cut by trying every subset (complete graphs give n - 1).
pub fn connectivity_oracle(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = n.saturating_sub(1);
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let keep: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        if !connected_within(g, &keep) {
            best = size;
        }
    }
    best
}

/// Fan invariants checked from scratch.
pub fn fan_is_valid(g: &Graph, center: Vertex, targets: &[Vertex], paths: &[Vec<Vertex>]) -> bool {
    let mut used = vec![false; g.vertex_count()];
    for p in paths {
        if p.len() < 2 || p[0] != center || p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return false;
        }
        for (i, &v) in p.iter().enumerate().skip(1) {
            if used[v] || v == center || targets.contains(&v) != (i + 1 == p.len()) {
                return false;
            }
            used[v] = true;
        }
    }
    true
}

/// Branch-set model checked from scratch: disjoint, nonempty, connected,
/// and a host edge between the sets of every pattern edge.
pub fn model_is_valid(g: &Graph, h: &Graph, sets: &[Vec<Vertex>]) -> bool {
    if sets.len() != h.vertex_count() {
        return false;
    }
    let mut owner = vec![None; g.vertex_count()];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            if v >= g.vertex_count() || owner[v].is_some() {
                return false;
            }
            owner[v] = Some(i);
        }
        if !connected_within(g, s) {
            return false;
        }
    }
    h.edges().all(|(i, j)| sets[i].iter().any(|&a| sets[j].iter().any(|&b| g.has_edge(a, b))))
}

/// Subdivision checked from scratch: injective branch vertices, one path
/// per pattern edge between the right branch vertices, interiors avoiding
/// branch vertices and each other.
pub fn subdivision_is_valid(g: &Graph, h: &Graph, branch: &[Vertex], paths: &[Vec<Vertex>]) -> bool {
    let n = g.vertex_count();
    if branch.len() != h.vertex_count() || paths.len() != h.edge_count() {
        return false;
    }
    let mut used = vec![false; n];
    for &x in branch {
        if x >= n || used[x] {
            return false;
        }
        used[x] = true;
    }
    for ((i, j), p) in h.edges().zip(paths) {
        if p.len() < 2 || p[0] != branch[i] || *p.last().unwrap() != branch[j] {
            return false;
        }
        if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return false;
        }
        for &v in &p[1..p.len() - 1] {
            if used[v] {
                return false;
            }
            used[v] = true;
        }
    }
    true
}

/// Every graph on `n` vertices up to isomorphism, by brute-force canonical
/// form (lexicographically largest adjacency string over all relabelings).
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let pairs = all_pairs(n);
    let ps = perms(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let a: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let canon = ps
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = a.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                e.sort_unstable();
                e
            })
            .max()
            .unwrap();
        if seen.insert(canon) {
            out.push(Graph::from_edges(n, a).unwrap());
        }
    }
    out
}

/// `G(n, p)` with `p` drawn uniformly from `lo..hi`.
pub fn random_graph_between(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Graph {
    let p = rng.gen_range(lo..hi);
    random_graph(rng, n, p)
}
