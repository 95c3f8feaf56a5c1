//! Exact Berezin integration over `2n` anticommuting generators.
//!
//! Each vertex `i` carries a generator pair `ψ̄_i, ψ_i`.  Monomials are
//! stored against a canonical interleaved order `ψ̄_0 < ψ_0 < ψ̄_1 < ψ_1
//! < ...` as bitmasks (bit `2i` is `ψ̄_i`, bit `2i+1` is `ψ_i`);
//! multiplication sorts concatenated monomials into that order, counting
//! transpositions for the sign, and kills repeated generators.
//!
//! The Berezin integral over all `n` pairs reads off the coefficient of
//! the full monomial.  With the interleaved canonical order the
//! calibration constant is `+1`, pinned by the test that
//! `∫ D_n (ψ̄,ψ)^s / s! = δ_{s,n}`; the engine's partition functions then
//! reproduce the rooted and unrooted spanning-hyperforest generating
//! functions evaluated by the enumerator.

use std::collections::BTreeMap;

use crate::counts::WeightSpec;
use crate::error::{Error, Result};
use crate::exact::{factorial, rat_int, Rat, Ring, UniPoly};
use crate::hypergraph::{vertices_of, Hypergraph, VertexSet};

/// Grassmann-algebra element over the `2n` generators of `n` vertex
/// pairs, with coefficients in an exact commutative ring (rationals, or
/// polynomials in `λ` or `t`).
#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannElement<R: Ring> {
    n: usize,
    terms: BTreeMap<u64, R>,
}

const PSI_BAR: u64 = 0; // slot offset of ψ̄ within a vertex pair
const PSI: u64 = 1; // slot offset of ψ

fn slot(vertex: usize, which: u64) -> u64 {
    2 * vertex as u64 + which
}

/// Sign of sorting the concatenation of two strictly increasing generator
/// sequences: parity of the pairs `(i ∈ a, j ∈ b)` with `i > j`.
fn merge_sign(a: u64, b: u64) -> bool {
    debug_assert_eq!(a & b, 0);
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    swaps % 2 == 1
}

impl<R: Ring> GrassmannElement<R> {
    pub fn zero(n: usize) -> Self {
        GrassmannElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut el = Self::zero(n);
        el.insert(0, c);
        el
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    fn monomial(n: usize, key: u64, c: R) -> Self {
        let mut el = Self::zero(n);
        el.insert(key, c);
        el
    }

    /// `ψ_i`.
    pub fn psi(n: usize, i: usize) -> Self {
        Self::monomial(n, 1 << slot(i, PSI), R::one())
    }

    /// `ψ̄_i`.
    pub fn psi_bar(n: usize, i: usize) -> Self {
        Self::monomial(n, 1 << slot(i, PSI_BAR), R::one())
    }

    /// `ψ̄_i ψ_i` (already canonically ordered).
    pub fn pair(n: usize, i: usize) -> Self {
        Self::monomial(n, (1 << slot(i, PSI_BAR)) | (1 << slot(i, PSI)), R::one())
    }

    /// Canonically ordered product of the generators selected by the raw
    /// slot mask (bit `2i` is `ψ̄_i`, bit `2i+1` is `ψ_i`), coefficient
    /// one.
    pub fn mask_monomial(n: usize, mask: u64) -> Self {
        assert!(mask < (1 << (2 * n)), "mask outside the generator space");
        Self::monomial(n, mask, R::one())
    }

    /// `τ_A = Π_{i∈A} ψ̄_i ψ_i`; canonical with positive sign.
    pub fn tau(n: usize, vertex_set: VertexSet) -> Self {
        let mut key = 0u64;
        for v in vertices_of(vertex_set) {
            key |= (1 << slot(v, PSI_BAR)) | (1 << slot(v, PSI));
        }
        Self::monomial(n, key, R::one())
    }

    /// Scalar product `(ψ̄, ψ) = Σ_i ψ̄_i ψ_i`.
    pub fn scalar_product(n: usize) -> Self {
        let mut el = Self::zero(n);
        for i in 0..n {
            el.insert((1 << slot(i, PSI_BAR)) | (1 << slot(i, PSI)), R::one());
        }
        el
    }

    /// `(ψ̄, J ψ) = Σ_{i,j} ψ̄_i ψ_j` with `J` the all-ones matrix.
    pub fn j_product(n: usize) -> Self {
        let mut el = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                el = el.add(&Self::psi_bar(n, i).mul(&Self::psi(n, j)));
            }
        }
        el
    }

    fn insert(&mut self, key: u64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "mixed generator spaces");
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        GrassmannElement {
            n: self.n,
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if Ring::is_zero(c) {
            return Self::zero(self.n);
        }
        GrassmannElement {
            n: self.n,
            terms: self.terms.iter().map(|(&k, v)| (k, v.scale(c))).collect(),
        }
    }

    pub fn scale_ring(&self, c: &R) -> Self {
        let mut out = Self::zero(self.n);
        for (&k, v) in &self.terms {
            out.insert(k, v.mul(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "mixed generator spaces");
        let mut out = Self::zero(self.n);
        for (&ka, va) in &self.terms {
            for (&kb, vb) in &rhs.terms {
                if ka & kb != 0 {
                    continue; // repeated generator squares to zero
                }
                let c = va.mul(vb);
                let c = if merge_sign(ka, kb) { c.neg() } else { c };
                out.insert(ka | kb, c);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `exp` of a nilpotent element (no scalar term) as the finite power
    /// series `Σ_j self^j / j!`.
    pub fn exp(&self) -> Result<Self> {
        if self.terms.contains_key(&0) {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = Self::one(self.n);
        let mut power = Self::one(self.n);
        let mut j_factorial = rat_int(1);
        for j in 1..=(2 * self.n + 1) {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            j_factorial *= rat_int(j as i64);
            acc = acc.add(&power.scale(&(rat_int(1) / &j_factorial)));
        }
        Ok(acc)
    }

    /// Berezin integral over all `n` generator pairs: the coefficient of
    /// the full monomial in canonical order (calibration `+1`).
    pub fn berezin(&self) -> R {
        let full: u64 = if self.n == 0 {
            0
        } else {
            (1u64 << (2 * self.n)) - 1
        };
        self.terms.get(&full).cloned().unwrap_or_else(R::zero)
    }

    /// `p(arg)` for a rational-coefficient polynomial `p` by Horner.
    pub fn apply_polynomial(p: &UniPoly, arg: &Self) -> Self {
        let mut acc = Self::zero(arg.n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(arg);
            acc = acc.add(&Self::scalar(arg.n, R::from_rat(c)));
        }
        acc
    }
}

/// The hyperedge element
/// `f_A^{(λ)} = λ(1-|A|) τ_A + Σ_{i∈A} τ_{A∖i}
///             - Σ_{i≠j∈A} ψ̄_i ψ_j τ_{A∖{i,j}}`.
pub fn edge_element<R: Ring>(n: usize, edge: VertexSet, lam: &R) -> GrassmannElement<R> {
    let vs = vertices_of(edge);
    let card = vs.len();
    assert!(card >= 2, "hyperedges need cardinality >= 2");
    let lam_coeff = lam.scale(&rat_int(1 - card as i64));
    let mut el = GrassmannElement::tau(n, edge).scale_ring(&lam_coeff);
    for &i in &vs {
        el = el.add(&GrassmannElement::tau(n, edge & !(1 << i)));
    }
    for &i in &vs {
        for &j in &vs {
            if i == j {
                continue;
            }
            let rest = edge & !(1 << i) & !(1 << j);
            let cross = GrassmannElement::psi_bar(n, i)
                .mul(&GrassmannElement::psi(n, j))
                .mul(&GrassmannElement::tau(n, rest));
            el = el.sub(&cross);
        }
    }
    el
}

/// Berezin-integration engine with a hard vertex cap (the monomial state
/// space is `4^n`).
#[derive(Debug, Clone)]
pub struct BerezinEngine {
    max_vertices: usize,
}

pub const DEFAULT_VERTEX_CAP: usize = 6;

impl Default for BerezinEngine {
    fn default() -> Self {
        BerezinEngine {
            max_vertices: DEFAULT_VERTEX_CAP,
        }
    }
}

impl BerezinEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(max_vertices: usize) -> Self {
        BerezinEngine { max_vertices }
    }

    pub fn cap(&self) -> usize {
        self.max_vertices
    }

    fn check(&self, vertices: usize) -> Result<()> {
        if vertices > self.max_vertices {
            return Err(Error::VertexCapExceeded {
                vertices,
                cap: self.max_vertices,
            });
        }
        Ok(())
    }

    /// Sum `Σ_A w_A f_A^{(λ)}` over the edges of `g`, lifted to `R`.
    fn interaction<R: Ring>(&self, g: &Hypergraph, lam: &R) -> GrassmannElement<R> {
        let n = g.vertex_count();
        let mut sum = GrassmannElement::zero(n);
        for (idx, &edge) in g.edges().iter().enumerate() {
            sum = sum.add(&edge_element(n, edge, lam).scale(g.weight(idx)));
        }
        sum
    }

    /// `∫ D_{V,t} exp[t (ψ̄,ψ) + Σ_A w_A f_A^{(λ)}]`.
    ///
    /// With `t = λ` this is the unrooted generating function
    /// `Σ_F (Π_A w_A) λ^{k(F)}`; with `λ = 0` and symbolic `t` it is the
    /// rooted one, `Σ_F (Π_A w_A) Π_α t |V(F_α)|`.
    pub fn partition_function<R: Ring>(&self, g: &Hypergraph, lam: &R, t: &R) -> Result<R> {
        self.check(g.vertex_count())?;
        let n = g.vertex_count();
        let measure = GrassmannElement::scalar_product(n).scale_ring(t);
        let exponent = self.interaction(g, lam).add(&measure);
        Ok(exponent.exp()?.berezin())
    }

    /// `∫ D_V (ψ̄ψ)_{r_1} ... (ψ̄ψ)_{r_m} exp[Σ_A w_A f_A^{(0)}]`: the
    /// weight of spanning hyperforests rooted exactly at the given
    /// vertices.  A repeated root vanishes by nilpotency.
    pub fn rooted_correlator(&self, g: &Hypergraph, roots: &[usize]) -> Result<Rat> {
        self.check(g.vertex_count())?;
        let n = g.vertex_count();
        let zero = rat_int(0);
        let mut integrand = self.interaction::<Rat>(g, &zero).exp()?;
        for &r in roots {
            if r >= n {
                return Err(Error::InvalidHypergraph(format!("root {r} out of range")));
            }
            integrand = integrand.mul(&GrassmannElement::pair(n, r));
        }
        Ok(integrand.berezin())
    }

    /// Verifies the diagonal reduction of the complete-hypergraph
    /// interaction: for every insertion `(ψ̄,ψ)^r/r!`, integrating
    /// `exp[Σ_A w_{|A|} f_A^{(0)}]` equals integrating the scalar form
    /// `[1 - Σ_k w_k (ψ̄,ψ)^(k-1)/(k-2)!] exp[n Σ_k w_k (ψ̄,ψ)^(k-1)/(k-1)!]`.
    pub fn diagonal_reduction_check(&self, n: usize, w: &WeightSpec) -> Result<bool> {
        self.check(n)?;
        let g = Hypergraph::complete_for_weights(n, w);
        let zero = rat_int(0);
        let lhs_exp = self.interaction::<Rat>(&g, &zero).exp()?;

        let sigma = GrassmannElement::<Rat>::scalar_product(n);
        let mut sigma_pows = Vec::with_capacity(n + 1);
        sigma_pows.push(GrassmannElement::<Rat>::one(n));
        for j in 1..=n {
            let prev: &GrassmannElement<Rat> = &sigma_pows[j - 1];
            sigma_pows.push(prev.mul(&sigma));
        }

        let mut scalar_exponent = GrassmannElement::<Rat>::zero(n);
        let mut prefactor = GrassmannElement::<Rat>::one(n);
        for k in w.support(n) {
            let wk = w.w(k);
            scalar_exponent = scalar_exponent.add(
                &sigma_pows[k - 1]
                    .scale(&(&wk * rat_int(n as i64) / Rat::from_integer(factorial(k - 1)))),
            );
            prefactor = prefactor
                .sub(&sigma_pows[k - 1].scale(&(&wk / Rat::from_integer(factorial(k - 2)))));
        }
        let rhs_exp = prefactor.mul(&scalar_exponent.exp()?);

        for (r, sigma_r) in sigma_pows.iter().enumerate() {
            let insertion = sigma_r.scale(&(rat_int(1) / Rat::from_integer(factorial(r))));
            let lhs = insertion.mul(&lhs_exp).berezin();
            let rhs = insertion.mul(&rhs_exp).berezin();
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
