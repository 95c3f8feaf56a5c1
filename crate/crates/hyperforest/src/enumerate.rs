//! Brute-force ground truth: enumerate the spanning hyperforests of a
//! small hypergraph and tabulate their weights by component count.
//!
//! A hyperedge subset `S` spans a hyperforest exactly when the Euler-style
//! identity `Σ_{A∈S}(|A|-1) - |V| + c(V,S) = 0` holds, with `c` the number
//! of connected components; testing this global equality (instead of
//! incremental acyclicity) makes the check independent of edge order.

use crate::counts::{RootedTable, UnrootedTable};
use crate::error::{Error, Result};
use crate::exact::{rat_int, Rat, UniPoly, Var};
use crate::hypergraph::{vertices_of, Hypergraph, VertexSet};

/// Subset enumeration is `O(2^|E|)`; refuse anything past this.
pub const EDGE_CAP: usize = 25;

/// Disjoint-set forest over the vertices with union by rank.
struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
            components: n,
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return;
        }
        self.components -= 1;
        if self.rank[rx] < self.rank[ry] {
            self.parent[rx] = ry;
        } else if self.rank[rx] > self.rank[ry] {
            self.parent[ry] = rx;
        } else {
            self.parent[ry] = rx;
            self.rank[rx] += 1;
        }
    }
}

/// A spanning hyperforest: the chosen edge subset plus the vertex sets of
/// its connected components (isolated vertices included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    pub edge_mask: u64,
    pub components: Vec<VertexSet>,
}

impl Forest {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

fn components_of(g: &Hypergraph, edge_mask: u64) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    let mut m = edge_mask;
    while m != 0 {
        let e = m.trailing_zeros() as usize;
        m &= m - 1;
        let vs = vertices_of(g.edges()[e]);
        for pair in vs.windows(2) {
            uf.union(pair[0], pair[1]);
        }
    }
    let mut sets = vec![0u64; n];
    for v in 0..n {
        let r = uf.find(v);
        sets[r] |= 1 << v;
    }
    sets.into_iter().filter(|&s| s != 0).collect()
}

fn edge_excess(g: &Hypergraph, edge_mask: u64) -> usize {
    let mut total = 0usize;
    let mut m = edge_mask;
    while m != 0 {
        let e = m.trailing_zeros() as usize;
        m &= m - 1;
        total += g.edges()[e].count_ones() as usize - 1;
    }
    total
}

/// Hyperforest test for the edge subset given as a bitmask over
/// `g.edges()` indices.
pub fn is_hyperforest(g: &Hypergraph, edge_mask: u64) -> bool {
    let excess = edge_excess(g, edge_mask);
    let c = components_of(g, edge_mask).len();
    excess + c == g.vertex_count()
}

/// Every spanning hyperforest of `g`, each exactly once.
///
/// Subsets are explored depth-first over the edge list; a branch whose
/// running `Σ(|A|-1)` already exceeds `|V| - 1` cannot reach equality (the
/// quantity only grows and `c >= 1`), so it is pruned with all its
/// supersets.
pub fn enumerate_forests(g: &Hypergraph) -> Result<Vec<Forest>> {
    enumerate_forests_with_cap(g, EDGE_CAP)
}

/// Same as [`enumerate_forests`] with an explicit edge cap.
pub fn enumerate_forests_with_cap(g: &Hypergraph, cap: usize) -> Result<Vec<Forest>> {
    let m = g.edge_count();
    if m > cap {
        return Err(Error::EdgeCapExceeded { edges: m, cap });
    }
    let n = g.vertex_count();
    let budget = n.saturating_sub(1);
    let sizes: Vec<usize> = g
        .edges()
        .iter()
        .map(|e| e.count_ones() as usize - 1)
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, u64, usize)> = vec![(0, 0, 0)]; // (next edge, mask, excess)
    while let Some((i, mask, excess)) = stack.pop() {
        if i == m {
            let comps = components_of(g, mask);
            if excess + comps.len() == n {
                debug_assert!(is_hyperforest(g, mask));
                out.push(Forest {
                    edge_mask: mask,
                    components: comps,
                });
            }
            continue;
        }
        stack.push((i + 1, mask, excess));
        if excess + sizes[i] <= budget {
            stack.push((i + 1, mask | (1 << i), excess + sizes[i]));
        }
    }
    Ok(out)
}

fn forest_weight(g: &Hypergraph, edge_mask: u64) -> Rat {
    let mut w = rat_int(1);
    let mut m = edge_mask;
    while m != 0 {
        let e = m.trailing_zeros() as usize;
        m &= m - 1;
        w *= g.weight(e);
    }
    w
}

/// Rooted and unrooted tables by exhaustive enumeration:
/// `u_{n,p} = Σ_{k(F)=p} Π_A w_A` and
/// `t_{n,r} = Σ_{k(F)=r} Π_A w_A · Π_α |V(F_α)|` (one root choice per
/// component).
pub fn oracle_tables(g: &Hypergraph) -> Result<(RootedTable, UnrootedTable)> {
    let n = g.vertex_count();
    let mut rooted = vec![rat_int(0); n + 1];
    let mut unrooted = rooted.clone();
    for forest in enumerate_forests(g)? {
        let p = forest.component_count();
        let w = forest_weight(g, forest.edge_mask);
        unrooted[p] += &w;
        let mut root_choices = rat_int(1);
        for &comp in &forest.components {
            root_choices *= Rat::from_integer(u64::from(comp.count_ones()).into());
        }
        rooted[p] += w * root_choices;
    }
    Ok((
        RootedTable { n, counts: rooted },
        UnrootedTable {
            n,
            counts: unrooted,
        },
    ))
}

/// `Σ_F (Π_A w_A) λ^{k(F)}` over spanning hyperforests, as a polynomial
/// in `λ`: the unrooted generating function the Grassmann engine must
/// reproduce.
pub fn unrooted_gen_from_enumeration(g: &Hypergraph) -> Result<UniPoly> {
    let (_, u) = oracle_tables(g)?;
    Ok(u.gen_poly())
}

/// `Σ_F (Π_A w_A) Π_α (t |V(F_α)|)` as a polynomial in `t`: the rooted
/// generating function with uniform per-vertex root weight `t`.
pub fn rooted_gen_from_enumeration(g: &Hypergraph) -> Result<UniPoly> {
    let (t, _) = oracle_tables(g)?;
    Ok(UniPoly::from_coeffs(Var::T, t.counts))
}

/// Total weight of spanning hyperforests in which every component holds
/// exactly one of the given roots (the correlator the Grassmann engine
/// computes with root insertions).
pub fn rooted_correlator_oracle(g: &Hypergraph, roots: &[usize]) -> Result<Rat> {
    let mut root_mask: VertexSet = 0;
    for &r in roots {
        if r >= g.vertex_count() {
            return Err(Error::InvalidHypergraph(format!("root {r} out of range")));
        }
        root_mask |= 1 << r;
    }
    if (root_mask.count_ones() as usize) < roots.len() {
        // repeated roots never match any forest bijectively
        return Ok(rat_int(0));
    }
    let mut acc = rat_int(0);
    for forest in enumerate_forests(g)? {
        if forest.component_count() != roots.len() {
            continue;
        }
        if forest
            .components
            .iter()
            .all(|&c| (c & root_mask).count_ones() == 1)
        {
            acc += forest_weight(g, forest.edge_mask);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn hyperforest_test_examples() {
        let g = Hypergraph::complete(3);
        // empty subset
        assert!(is_hyperforest(&g, 0));
        // the triangle: all three 2-edges
        let pairs: u64 = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.count_ones() == 2)
            .map(|(i, _)| 1u64 << i)
            .sum();
        assert!(!is_hyperforest(&g, pairs));
        // a 2-cycle: the 3-edge plus one 2-edge
        let g2 = Hypergraph::from_vertex_lists(3, &[vec![0, 1, 2], vec![0, 1]]).unwrap();
        assert!(!is_hyperforest(&g2, 0b11));
        assert!(is_hyperforest(&g2, 0b01));
        assert!(is_hyperforest(&g2, 0b10));
    }

    #[test]
    fn forest_counts_small() {
        assert_eq!(
            enumerate_forests(&Hypergraph::complete_uniform(3, 2))
                .unwrap()
                .len(),
            7
        );
        assert_eq!(
            enumerate_forests(&Hypergraph::complete(3)).unwrap().len(),
            8
        );
        let trees_5_3 = enumerate_forests(&Hypergraph::complete_uniform(5, 3))
            .unwrap()
            .into_iter()
            .filter(|f| f.component_count() == 1)
            .count();
        assert_eq!(trees_5_3, 15);
    }

    #[test]
    fn euler_identity_per_forest() {
        for g in [Hypergraph::complete(4), Hypergraph::complete_uniform(5, 3)] {
            for f in enumerate_forests(&g).unwrap() {
                let excess = edge_excess(&g, f.edge_mask);
                assert_eq!(excess + f.component_count(), g.vertex_count());
            }
        }
    }

    #[test]
    fn oracle_tables_k4_graph() {
        let g = Hypergraph::complete_uniform(4, 2);
        let (rooted, unrooted) = oracle_tables(&g).unwrap();
        assert_eq!(
            unrooted.counts,
            vec![rat_int(0), rat_int(16), rat_int(15), rat_int(6), rat_int(1)]
        );
        // t_{n,r} = C(n-1,r-1) n^{n-r} for the complete graph
        assert_eq!(
            rooted.counts,
            vec![
                rat_int(0),
                rat_int(64),
                rat_int(48),
                rat_int(12),
                rat_int(1)
            ]
        );
    }

    #[test]
    fn oracle_tables_complete_3() {
        let (rooted, unrooted) = oracle_tables(&Hypergraph::complete(3)).unwrap();
        assert_eq!(
            rooted.counts,
            vec![rat_int(0), rat_int(12), rat_int(6), rat_int(1)]
        );
        assert_eq!(
            unrooted.counts,
            vec![rat_int(0), rat_int(4), rat_int(3), rat_int(1)]
        );
    }

    #[test]
    fn oracle_tables_single_vertex() {
        let g = Hypergraph::new(1, vec![]).unwrap();
        let (rooted, unrooted) = oracle_tables(&g).unwrap();
        assert_eq!(rooted.counts, vec![rat_int(0), rat_int(1)]);
        assert_eq!(unrooted.counts, vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn enumeration_is_order_independent() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = Hypergraph::complete(4);
        let reference = oracle_tables(&g).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let mut order: Vec<usize> = (0..g.edge_count()).collect();
            order.shuffle(&mut rng);
            let h = g.permuted(&order).unwrap();
            assert_eq!(oracle_tables(&h).unwrap(), reference);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Hypergraph::complete(5); // 26 edges
        assert_eq!(
            enumerate_forests(&g).unwrap_err(),
            Error::EdgeCapExceeded {
                edges: 26,
                cap: EDGE_CAP
            }
        );
    }

    #[test]
    #[ignore = "walks ~1.7M pruned edge subsets; run in release"]
    fn forest_totals_extend_a001858() {
        for (n, expected) in [(7usize, 36961usize), (8, 561948)] {
            let g = Hypergraph::complete_uniform(n, 2);
            let forests = enumerate_forests_with_cap(&g, g.edge_count()).unwrap();
            assert_eq!(forests.len(), expected);
        }
    }

    #[test]
    fn correlator_oracle_examples() {
        let k3 = Hypergraph::complete_uniform(3, 2);
        assert_eq!(rooted_correlator_oracle(&k3, &[0]).unwrap(), rat_int(3));
        assert_eq!(
            rooted_correlator_oracle(&k3, &[0, 1, 2]).unwrap(),
            rat_int(1)
        );
        assert_eq!(rooted_correlator_oracle(&k3, &[]).unwrap(), rat_int(0));
        assert_eq!(rooted_correlator_oracle(&k3, &[1, 1]).unwrap(), rat_int(0));
    }
}
