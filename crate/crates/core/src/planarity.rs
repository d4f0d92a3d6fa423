//! Planarity by forbidden minors, with Kuratowski subdivisions as
//! certificates of non-planarity, plus an independent embedding oracle.

use std::fmt;

use crate::error::{GraphError, Result};
use crate::graph::{complete, complete_bipartite, Graph, Vertex};
use crate::minor::{find_minor_model, minimize_from_model, BranchSets, MinimalWitness};
use crate::topo::{assemble, attachments, subdivision_from_witness, tree_path, SubdivisionEmbedding};

fn k5() -> Graph {
    complete(5).expect("K5")
}

fn k33() -> Graph {
    complete_bipartite(3, 3).expect("K33")
}

/// Planar iff neither `K5` nor `K3,3` is a minor.
pub fn is_planar(g: &Graph) -> Result<bool> {
    Ok(find_minor_model(g, &k5())?.is_none() && find_minor_model(g, &k33())?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

impl fmt::Display for KuratowskiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KuratowskiKind::K5 => "K5",
            KuratowskiKind::K33 => "K33",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub embedding: SubdivisionEmbedding,
}

impl KuratowskiWitness {
    pub fn verify(&self) -> Result<bool> {
        let expected = match self.kind {
            KuratowskiKind::K5 => k5(),
            KuratowskiKind::K33 => k33(),
        };
        Ok(self.embedding.pattern == expected && self.embedding.verify()?)
    }
}

impl fmt::Display for KuratowskiWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind: {}", self.kind)?;
        write!(f, "{}", self.embedding)
    }
}

/// Shape of the tree `T_i` formed by a branch tree of a minimal `K5`
/// witness together with its four outgoing edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    /// One vertex of degree 4 (a subdivided `K1,4`).
    Star { center: Vertex },
    /// Two vertices of degree 3.
    DoubleBranch { y1: Vertex, y2: Vertex },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeClassification {
    pub leaves: usize,
    /// Number of vertices of degree 2, 3 and 4.
    pub r2: usize,
    pub r3: usize,
    pub r4: usize,
    /// Special vertices are given in subgraph labels of the witness.
    pub kind: TreeKind,
}

/// Classifies the five trees of a minimal `K5` witness.
pub fn classify_k5_trees(w: &MinimalWitness) -> Result<Vec<TreeClassification>> {
    if w.model.pattern != k5() {
        return Err(GraphError::InvalidParameter("witness is not for K5".into()));
    }
    let attach = attachments(w)?;
    let g = &w.subgraph;
    let owner = w.model.owner();
    let mut out = Vec::with_capacity(5);
    for (i, set) in w.model.sets.iter().enumerate() {
        // Degrees inside T_i: tree degree plus outgoing edges; the four far
        // endpoints are leaves.
        let degree = |v: Vertex| g.neighbors(v).len();
        let (mut r, mut leaves) = ([0usize; 5], 4usize);
        let mut by_degree: [Vec<Vertex>; 5] = Default::default();
        for &v in set {
            let d = degree(v);
            if d > 4 {
                return Err(GraphError::InvalidCertificate(format!("vertex {v} has degree {d} in its tree")));
            }
            debug_assert!(g.neighbors(v).iter().all(|&x| owner[x].is_some()));
            r[d] += 1;
            by_degree[d].push(v);
            if d == 1 {
                leaves += 1;
            }
        }
        debug_assert_eq!(attach[i].iter().flatten().count(), 4);
        let kind = match (r[3], r[4]) {
            (0, 1) => TreeKind::Star { center: by_degree[4][0] },
            (2, 0) => TreeKind::DoubleBranch { y1: by_degree[3][0], y2: by_degree[3][1] },
            _ => return Err(GraphError::InvalidCertificate(format!("tree {i} has r3 = {} and r4 = {}", r[3], r[4]))),
        };
        out.push(TreeClassification { leaves, r2: r[2], r3: r[3], r4: r[4], kind });
    }
    Ok(out)
}

/// Turns a minimal `K5` witness into a Kuratowski subdivision. If every
/// tree is a star the centres span a `K5` subdivision; otherwise one
/// double-branch tree is cut between its two degree-3 vertices, which
/// together with the other four branch sets gives a `K3,3` minor, and that
/// minor is converted into a subdivision.
pub fn kuratowski_from_k5_witness(w: &MinimalWitness) -> Result<KuratowskiWitness> {
    let trees = classify_k5_trees(w)?;
    let double = trees.iter().enumerate().find_map(|(i, t)| match t.kind {
        TreeKind::DoubleBranch { y1, y2 } => Some((i, y1, y2)),
        TreeKind::Star { .. } => None,
    });
    let Some((i, y1, y2)) = double else {
        let centres: Vec<Vertex> = trees
            .iter()
            .map(|t| match t.kind {
                TreeKind::Star { center } => center,
                TreeKind::DoubleBranch { .. } => unreachable!(),
            })
            .collect();
        let embedding = assemble(w, &attachments(w)?, &centres)?;
        return Ok(KuratowskiWitness { kind: KuratowskiKind::K5, embedding });
    };

    let g = &w.subgraph;
    let set = &w.model.sets[i];
    let spine = tree_path(g, set, y1, y2);
    let (cut_a, cut_b) = (spine[0], spine[1]);
    let side_a = {
        let mut seen = vec![y1];
        let mut k = 0;
        while k < seen.len() {
            let u = seen[k];
            k += 1;
            for &x in g.neighbors(u) {
                if set.binary_search(&x).is_ok() && !seen.contains(&x) && !(u == cut_a && x == cut_b) {
                    seen.push(x);
                }
            }
        }
        seen.sort_unstable();
        seen
    };
    let side_b: Vec<Vertex> = set.iter().copied().filter(|v| side_a.binary_search(v).is_err()).collect();
    let mut blocks: Vec<Vec<Vertex>> = vec![side_a, side_b];
    blocks.extend(w.model.sets.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, s)| s.clone()));

    let touching = |a: &[Vertex], b: &[Vertex]| a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)));
    let quotient: Vec<Vec<bool>> =
        (0..6).map(|p| (0..6).map(|q| p != q && touching(&blocks[p], &blocks[q])).collect()).collect();
    // Left sides of the ten 3+3 splits, always containing block 0.
    let side = (0u32..64)
        .filter(|m| m.count_ones() == 3 && m & 1 == 1)
        .find(|&m| {
            let on_left = |p: usize| (m >> p) & 1 == 1;
            (0..6).all(|p| (0..6).all(|q| !(on_left(p) && !on_left(q)) || quotient[p][q]))
        })
        .ok_or_else(|| GraphError::InvalidCertificate("contracted witness has no K3,3".into()))?;
    let left: Vec<usize> = (0..6).filter(|&p| (side >> p) & 1 == 1).collect();
    let right: Vec<usize> = (0..6).filter(|&p| (side >> p) & 1 == 0).collect();
    let sets: Vec<Vec<Vertex>> =
        left.iter().chain(&right).map(|&p| blocks[p].iter().map(|&v| w.labels[v]).collect()).collect();
    let model = BranchSets::new(&w.host, &k33(), sets);
    let minimal = minimize_from_model(&model)?;
    let embedding = subdivision_from_witness(&minimal)?;
    Ok(KuratowskiWitness { kind: KuratowskiKind::K33, embedding })
}

/// A Kuratowski subdivision in `g`, or `None` when `g` is planar. A `K3,3`
/// minor is looked for first; failing that, a `K5` minor is minimised and
/// its branch trees classified.
pub fn kuratowski_witness(g: &Graph) -> Result<Option<KuratowskiWitness>> {
    if let Some(model) = find_minor_model(g, &k33())? {
        let minimal = minimize_from_model(&model)?;
        let embedding = subdivision_from_witness(&minimal)?;
        return Ok(Some(KuratowskiWitness { kind: KuratowskiKind::K33, embedding }));
    }
    match find_minor_model(g, &k5())? {
        Some(model) => {
            let minimal = minimize_from_model(&model)?;
            kuratowski_from_k5_witness(&minimal).map(Some)
        }
        None => Ok(None),
    }
}

const ORACLE_MAX_VERTICES: usize = 8;
const ORACLE_MAX_EDGES: usize = 16;

/// Planarity by exhaustive search over rotation systems.
///
/// A rotation system fixes a cyclic order of the neighbours around every
/// vertex. Faces are traced on darts: after traversing `u -> v`, the next
/// dart is `v -> w` where `w` follows `u` in the rotation at `v`. A
/// connected component with `v` vertices, `e` edges and `f` traced faces is
/// planar iff some rotation system gives `v - e + f = 2` (an isolated vertex
/// counts as one face). The graph is planar iff every component is, which
/// matches `v - e + f = 1 + c` with the outer faces merged. Limited to 8
/// vertices and 16 edges.
pub fn planarity_oracle(g: &Graph) -> Result<bool> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n > ORACLE_MAX_VERTICES {
        return Err(GraphError::TooLarge { what: "planarity oracle vertices", actual: n, limit: ORACLE_MAX_VERTICES });
    }
    if m > ORACLE_MAX_EDGES {
        return Err(GraphError::TooLarge { what: "planarity oracle edges", actual: m, limit: ORACLE_MAX_EDGES });
    }
    if n >= 3 && m > 3 * n - 6 {
        return Ok(false);
    }
    for comp in g.components() {
        let (c, _) = g.induced_subgraph(&comp)?;
        if !component_has_planar_rotation(&c) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn component_has_planar_rotation(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return true;
    }
    // Dart (u, i) goes from u to its i-th neighbour. back[u][i] is the index
    // of u in that neighbour's list.
    let back: Vec<Vec<usize>> = g
        .vertices()
        .map(|u| g.neighbors(u).iter().map(|&v| g.neighbors(v).binary_search(&u).unwrap()).collect())
        .collect();
    let offset: Vec<usize> = g
        .vertices()
        .scan(0, |acc, v| {
            let o = *acc;
            *acc += g.degree(v);
            Some(o)
        })
        .collect();
    // For every vertex, the candidate successor tables: successor[i] is the
    // neighbour index following neighbour i. The first neighbour is fixed.
    let mut mirrored_done = false;
    let choices: Vec<Vec<Vec<usize>>> = g
        .vertices()
        .map(|v| {
            let d = g.degree(v);
            if d == 0 {
                return vec![Vec::new()];
            }
            let rest: Vec<usize> = (1..d).collect();
            let mut perms = permutations(&rest);
            // Reversing every rotation mirrors the embedding without changing
            // the face count, so one vertex keeps only one orientation.
            if d >= 3 && !mirrored_done {
                mirrored_done = true;
                perms.retain(|p| p[0] < p[p.len() - 1]);
            }
            perms
                .into_iter()
                .map(|p| {
                    let mut cyc = vec![0];
                    cyc.extend(p);
                    let mut succ = vec![0; d];
                    for k in 0..d {
                        succ[cyc[k]] = cyc[(k + 1) % d];
                    }
                    succ
                })
                .collect()
        })
        .collect();
    let target_faces = 2 + m - n;
    let darts = 2 * m;
    let mut pick = vec![0usize; n];
    let mut seen = vec![false; darts];
    loop {
        seen.iter_mut().for_each(|s| *s = false);
        let mut faces = 0;
        for u in 0..n {
            for i in 0..g.degree(u) {
                if seen[offset[u] + i] {
                    continue;
                }
                faces += 1;
                let (mut a, mut k) = (u, i);
                while !seen[offset[a] + k] {
                    seen[offset[a] + k] = true;
                    let b = g.neighbors(a)[k];
                    let arrive = back[a][k];
                    k = choices[b][pick[b]][arrive];
                    a = b;
                }
            }
        }
        if faces == target_faces {
            return true;
        }
        // Odometer over the per-vertex choices.
        let mut v = 0;
        loop {
            if v == n {
                return false;
            }
            pick[v] += 1;
            if pick[v] < choices[v].len() {
                break;
            }
            pick[v] = 0;
            v += 1;
        }
    }
}
