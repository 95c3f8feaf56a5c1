//! Hypergraphs on a small labeled vertex set.
//!
//! Vertices are `0..n` and hyperedges are stored as vertex bitmasks, each
//! of cardinality at least two and pairwise distinct.  Every edge carries
//! an exact rational weight (for cardinality-dependent models the weight
//! is `w(|A|)`).

use num_traits::One;

use crate::counts::WeightSpec;
use crate::error::{Error, Result};
use crate::exact::Rat;

/// Set of vertices as a bitmask; vertex `i` is bit `i`.
pub type VertexSet = u64;

#[derive(Debug, Clone, PartialEq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    weights: Vec<Rat>,
}

impl Hypergraph {
    /// Builds a hypergraph with unit edge weights.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        let weights = vec![Rat::one(); edges.len()];
        Self::with_weights(n, edges, weights)
    }

    pub fn with_weights(n: usize, edges: Vec<VertexSet>, weights: Vec<Rat>) -> Result<Self> {
        if n > 63 {
            return Err(Error::InvalidHypergraph(format!(
                "{n} vertices exceed bitmask capacity"
            )));
        }
        if weights.len() != edges.len() {
            return Err(Error::InvalidHypergraph(format!(
                "{} edges but {} weights",
                edges.len(),
                weights.len()
            )));
        }
        let full: VertexSet = if n == 0 { 0 } else { (1u64 << n) - 1 };
        let mut seen = std::collections::BTreeSet::new();
        for &e in &edges {
            if e & !full != 0 {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:#b} leaves the vertex set"
                )));
            }
            if e.count_ones() < 2 {
                return Err(Error::InvalidHypergraph(
                    "hyperedges need cardinality >= 2".into(),
                ));
            }
            if !seen.insert(e) {
                return Err(Error::InvalidHypergraph("repeated hyperedge".into()));
            }
        }
        Ok(Hypergraph { n, edges, weights })
    }

    /// Builds from explicit vertex lists (0-based labels).
    pub fn from_vertex_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut edges = Vec::with_capacity(lists.len());
        for list in lists {
            let mut mask: VertexSet = 0;
            for &v in list {
                if v >= n {
                    return Err(Error::InvalidHypergraph(format!(
                        "vertex {v} out of range for n={n}"
                    )));
                }
                if mask & (1 << v) != 0 {
                    return Err(Error::InvalidHypergraph(format!(
                        "repeated vertex {v} in edge"
                    )));
                }
                mask |= 1 << v;
            }
            edges.push(mask);
        }
        Self::new(n, edges)
    }

    /// Complete hypergraph: every vertex subset of size `2..=n`.
    pub fn complete(n: usize) -> Self {
        Self::complete_for_weights(n, &WeightSpec::AllOnes)
    }

    /// `k`-uniform complete hypergraph: every `k`-subset of the vertices.
    pub fn complete_uniform(n: usize, k: usize) -> Self {
        Self::complete_for_weights(n, &WeightSpec::Uniform(k))
    }

    /// Complete hypergraph restricted to the cardinalities the weight
    /// spec supports, with `w(|A|)` on every edge.  Equivalent for all
    /// counting purposes to the full complete hypergraph under `w`.
    pub fn complete_for_weights(n: usize, w: &WeightSpec) -> Self {
        assert!(n <= 63, "vertex bitmask capacity is 63");
        let mut pairs = Vec::new();
        for k in w.support(n) {
            let wk = w.w(k);
            for mask in k_subsets(n, k) {
                pairs.push((mask, wk.clone()));
            }
        }
        pairs.sort_unstable_by_key(|&(mask, _)| mask);
        let (edges, weights) = pairs.into_iter().unzip();
        Hypergraph { n, edges, weights }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, edge_index: usize) -> &Rat {
        &self.weights[edge_index]
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// Reorders edges (used by determinism tests); weights follow.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.edges.len() {
            return Err(Error::InvalidHypergraph(
                "permutation length mismatch".into(),
            ));
        }
        let edges = order.iter().map(|&i| self.edges[i]).collect();
        let weights = order.iter().map(|&i| self.weights[i].clone()).collect();
        Self::with_weights(self.n, edges, weights)
    }
}

/// All `k`-subsets of `0..n` as bitmasks, ascending (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= 63);
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut next = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            let low = current & current.wrapping_neg();
            let ripple = current + low;
            let candidate = ripple | (((current ^ ripple) >> 2) / low);
            (candidate <= full && candidate > current).then_some(candidate)
        };
        Some(current)
    })
}

/// Vertices of a bitmask in increasing order.
pub fn vertices_of(mask: VertexSet) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_sizes() {
        assert_eq!(Hypergraph::complete(3).edge_count(), 4); // 3 pairs + 1 triple
        assert_eq!(Hypergraph::complete(4).edge_count(), 11); // 2^4 - 4 - 1
        assert_eq!(Hypergraph::complete_uniform(5, 3).edge_count(), 10);
        assert_eq!(Hypergraph::complete_uniform(6, 2).edge_count(), 15);
    }

    #[test]
    fn restricted_complete_matches_support() {
        let w: WeightSpec = "map:2=1,4=1/3".parse().unwrap();
        let g = Hypergraph::complete_for_weights(4, &w);
        assert_eq!(g.edge_count(), 6 + 1);
        for (i, &e) in g.edges().iter().enumerate() {
            assert_eq!(g.weight(i), &w.w(e.count_ones() as usize));
        }
    }

    #[test]
    fn validation_rejects_bad_edges() {
        assert!(Hypergraph::new(3, vec![0b011, 0b011]).is_err()); // repeat
        assert!(Hypergraph::new(3, vec![0b001]).is_err()); // cardinality 1
        assert!(Hypergraph::new(2, vec![0b111]).is_err()); // out of range
        assert!(Hypergraph::from_vertex_lists(3, &[vec![0, 1, 1]]).is_err());
        let g = Hypergraph::from_vertex_lists(3, &[vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(g.edges(), &[0b011, 0b111]);
    }

    #[test]
    fn vertex_listing() {
        assert_eq!(vertices_of(0b10110), vec![1, 2, 4]);
        assert_eq!(vertices_of(0), Vec::<usize>::new());
    }

    #[test]
    fn k_subset_enumeration() {
        assert_eq!(
            k_subsets(4, 2).collect::<Vec<_>>(),
            vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
        );
        assert_eq!(k_subsets(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(6, 6).collect::<Vec<_>>(), vec![0b111111]);
        // large n stays lazy and cheap
        assert_eq!(k_subsets(60, 2).count(), 60 * 59 / 2);
    }
}
