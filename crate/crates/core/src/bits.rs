//! `u64` vertex-set helpers used by the exhaustive searches.

use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex};

pub(crate) type Mask = u64;

pub(crate) const MAX_SEARCH_VERTICES: usize = 64;

pub(crate) fn bit(v: Vertex) -> Mask {
    1u64 << v
}

pub(crate) fn iter_bits(mut m: Mask) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub(crate) fn to_vec(m: Mask) -> Vec<Vertex> {
    iter_bits(m).collect()
}

pub(crate) fn from_slice(vs: &[Vertex]) -> Mask {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

#[derive(Clone, Debug)]
pub(crate) struct BitGraph {
    pub n: usize,
    pub adj: Vec<Mask>,
}

impl BitGraph {
    pub fn new(g: &Graph, what: &'static str) -> Result<BitGraph> {
        let n = g.vertex_count();
        if n > MAX_SEARCH_VERTICES {
            return Err(GraphError::TooLarge { what, actual: n, limit: MAX_SEARCH_VERTICES });
        }
        let adj = g.vertices().map(|v| from_slice(g.neighbors(v))).collect();
        Ok(BitGraph { n, adj })
    }

    pub fn all(&self) -> Mask {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn neighborhood(&self, set: Mask) -> Mask {
        iter_bits(set).fold(0, |m, v| m | self.adj[v]) & !set
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reach(&self, start: Mask, within: Mask) -> Mask {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.neighborhood_raw(frontier) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn neighborhood_raw(&self, set: Mask) -> Mask {
        iter_bits(set).fold(0, |m, v| m | self.adj[v])
    }
}
