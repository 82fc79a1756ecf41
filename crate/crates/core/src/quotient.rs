//! Multilinear quotient rings `C[L_1..L_n]` / (L_j^2 = alpha L_j + beta).
//!
//! One normal-form engine covers the four rings in play, distinguished only
//! by coefficient ring and quadratic rule:
//!
//! | ring | coefficients | alpha  | beta |
//! |------|--------------|--------|------|
//! | K_T  | `Z[b, b^-1]`   | b+b^-1 | -1   |
//! | K_G  | `Z[v]`         | v      | -1   |
//! | H_T  | `Q[bb]`        | 0      | bb^2 |
//! | H_G  | `Q[t]`         | 0      | t    |
//! | ext  | Z            | 0      | 0    |
//!
//! Normal form keeps every generator exponent at 0 or 1, so a monomial is a
//! subset of generators, encoded as a bitmask (n <= 62). All generators live
//! in even cohomological degree, so they commute and the square-zero case
//! needs no Koszul signs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, RngCore};

use crate::coefficients::{LaurentElt, RepGElt};
use crate::poly::{render_poly, RatPoly};
use crate::series::{rat_int, TruncSeries};
use crate::Error;

/// A commutative ring of coefficients. Implementors are lightweight ring
/// *objects* (tags plus whatever context the elements need, e.g. a series
/// cutoff); elements are a separate associated type.
pub trait CoeffRing: Clone + Eq + fmt::Debug {
    type Elt: Clone + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elt;
    fn one(&self) -> Self::Elt;
    fn embed_int(&self, n: i64) -> Self::Elt;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn neg(&self, a: &Self::Elt) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn is_zero(&self, a: &Self::Elt) -> bool;
    fn render(&self, a: &Self::Elt) -> String;
    /// Small pseudorandom element for property checks.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elt;

    fn sub(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elt, k: usize) -> Self::Elt {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// Marker for the two polynomial/series variables used on the cohomology
/// side: `bb` generates H*_T(pt), `t = bb^2` generates H*_G(pt).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CohomVar {
    BBar,
    TBar,
}

impl CohomVar {
    pub fn name(self) -> &'static str {
        match self {
            CohomVar::BBar => "bb",
            CohomVar::TBar => "t",
        }
    }
}

/// R(T) = `Z[b, b^-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaurentRing;

impl CoeffRing for LaurentRing {
    type Elt = LaurentElt;

    fn zero(&self) -> LaurentElt {
        LaurentElt::zero()
    }
    fn one(&self) -> LaurentElt {
        LaurentElt::one()
    }
    fn embed_int(&self, n: i64) -> LaurentElt {
        LaurentElt::from_int(n)
    }
    fn add(&self, a: &LaurentElt, b: &LaurentElt) -> LaurentElt {
        a + b
    }
    fn neg(&self, a: &LaurentElt) -> LaurentElt {
        -a
    }
    fn mul(&self, a: &LaurentElt, b: &LaurentElt) -> LaurentElt {
        a * b
    }
    fn is_zero(&self, a: &LaurentElt) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &LaurentElt) -> String {
        a.to_string()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> LaurentElt {
        let mut out = LaurentElt::zero();
        for _ in 0..rng.random_range(1..=2usize) {
            let k = rng.random_range(-2i64..=2);
            let c = rng.random_range(-3i64..=3);
            out = &out + &LaurentElt::monomial(k, BigInt::from(c));
        }
        out
    }
}

/// R(G) = `Z[v]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepGRing;

impl CoeffRing for RepGRing {
    type Elt = RepGElt;

    fn zero(&self) -> RepGElt {
        RepGElt::zero()
    }
    fn one(&self) -> RepGElt {
        RepGElt::one()
    }
    fn embed_int(&self, n: i64) -> RepGElt {
        RepGElt::from_int(n)
    }
    fn add(&self, a: &RepGElt, b: &RepGElt) -> RepGElt {
        a + b
    }
    fn neg(&self, a: &RepGElt) -> RepGElt {
        -a
    }
    fn mul(&self, a: &RepGElt, b: &RepGElt) -> RepGElt {
        a * b
    }
    fn is_zero(&self, a: &RepGElt) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &RepGElt) -> String {
        a.to_string()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> RepGElt {
        let deg = rng.random_range(0..=2usize);
        RepGElt::from_coeffs(
            (0..=deg)
                .map(|_| BigInt::from(rng.random_range(-3i64..=3)))
                .collect(),
        )
    }
}

/// Plain integers Z (coefficients of the square-zero ring).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRing;

impl CoeffRing for IntRing {
    type Elt = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::from(1)
    }
    fn embed_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> BigInt {
        BigInt::from(rng.random_range(-9i64..=9))
    }
}

/// `Q[bb]` or `Q[t]`, depending on the variable tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QPolyRing {
    pub var: CohomVar,
}

impl CoeffRing for QPolyRing {
    type Elt = RatPoly;

    fn zero(&self) -> RatPoly {
        RatPoly::zero()
    }
    fn one(&self) -> RatPoly {
        RatPoly::one()
    }
    fn embed_int(&self, n: i64) -> RatPoly {
        RatPoly::from_int(n)
    }
    fn add(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        a + b
    }
    fn neg(&self, a: &RatPoly) -> RatPoly {
        -a
    }
    fn mul(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        a * b
    }
    fn is_zero(&self, a: &RatPoly) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &RatPoly) -> String {
        render_poly(a, self.var.name())
    }
    fn sample(&self, rng: &mut dyn RngCore) -> RatPoly {
        let deg = rng.random_range(0..=2usize);
        RatPoly::from_coeffs(
            (0..=deg)
                .map(|_| rat_int(rng.random_range(-3i64..=3)))
                .collect(),
        )
    }
}

/// Truncated series in one cohomology variable; the ring object carries the
/// cutoff so all elements agree on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesRing {
    pub var: CohomVar,
    pub cutoff: usize,
}

impl CoeffRing for SeriesRing {
    type Elt = TruncSeries;

    fn zero(&self) -> TruncSeries {
        TruncSeries::zero(self.cutoff)
    }
    fn one(&self) -> TruncSeries {
        TruncSeries::one(self.cutoff)
    }
    fn embed_int(&self, n: i64) -> TruncSeries {
        TruncSeries::from_int(self.cutoff, n)
    }
    fn add(&self, a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        a.add(b)
    }
    fn neg(&self, a: &TruncSeries) -> TruncSeries {
        a.neg()
    }
    fn mul(&self, a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        a.mul(b)
    }
    fn is_zero(&self, a: &TruncSeries) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &TruncSeries) -> String {
        a.to_string().replace('t', self.var.name())
    }
    fn sample(&self, rng: &mut dyn RngCore) -> TruncSeries {
        let deg = self.cutoff.min(3);
        TruncSeries::from_coeffs(
            self.cutoff,
            (0..=deg)
                .map(|_| rat_int(rng.random_range(-3i64..=3)))
                .collect(),
        )
    }
}

/// A quotient ring instance: generator count plus the quadratic rule
/// L_j^2 = alpha L_j + beta over the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDescriptor<R: CoeffRing> {
    pub coeff: R,
    pub n: usize,
    pub alpha: R::Elt,
    pub beta: R::Elt,
}

impl<R: CoeffRing> RingDescriptor<R> {
    pub fn new(coeff: R, n: usize, alpha: R::Elt, beta: R::Elt) -> Self {
        assert!(n <= 62, "bitmask monomials support at most 62 generators");
        RingDescriptor {
            coeff,
            n,
            alpha,
            beta,
        }
    }
}

/// K_T((P^1)^n): L_j^2 = (b + b^-1) L_j - 1 over `Z[b, b^-1]`.
pub fn kt(n: usize) -> RingDescriptor<LaurentRing> {
    RingDescriptor::new(
        LaurentRing,
        n,
        LaurentElt::v_restricted(),
        LaurentElt::from_int(-1),
    )
}

/// K_G((P^1)^n): L_j^2 = v L_j - 1 over `Z[v]`.
pub fn kg(n: usize) -> RingDescriptor<RepGRing> {
    RingDescriptor::new(RepGRing, n, RepGElt::v(), RepGElt::from_int(-1))
}

/// H_T((P^1)^n; Q): L_j^2 = bb^2 over `Q[bb]`.
pub fn ht(n: usize) -> RingDescriptor<QPolyRing> {
    let ring = QPolyRing {
        var: CohomVar::BBar,
    };
    let bb = RatPoly::variable();
    RingDescriptor::new(ring, n, RatPoly::zero(), &bb * &bb)
}

/// H_G((P^1)^n; Q): L_j^2 = t over `Q[t]`.
pub fn hg(n: usize) -> RingDescriptor<QPolyRing> {
    let ring = QPolyRing {
        var: CohomVar::TBar,
    };
    RingDescriptor::new(ring, n, RatPoly::zero(), RatPoly::variable())
}

/// The square-zero ring `Z[x_1..x_n]`/(x_j^2), the even-degree model of the
/// exterior algebra.
pub fn ext(n: usize) -> RingDescriptor<IntRing> {
    RingDescriptor::new(IntRing, n, BigInt::zero(), BigInt::zero())
}

/// An element in normal form: a finite map from generator subsets (bitmask,
/// bit j-1 for generator L_j) to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiElt<R: CoeffRing> {
    ring: RingDescriptor<R>,
    terms: BTreeMap<u64, R::Elt>,
}

impl<R: CoeffRing> MultiElt<R> {
    pub fn zero(ring: &RingDescriptor<R>) -> Self {
        MultiElt {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &RingDescriptor<R>) -> Self {
        Self::constant(ring, ring.coeff.one())
    }

    pub fn constant(ring: &RingDescriptor<R>, c: R::Elt) -> Self {
        let mut out = Self::zero(ring);
        out.insert_add(0, c);
        out
    }

    /// The generator L_j, 1-indexed.
    pub fn generator(ring: &RingDescriptor<R>, j: usize) -> Result<Self, Error> {
        if j == 0 || j > ring.n {
            return Err(Error::IndexOutOfRange {
                index: j,
                n: ring.n,
            });
        }
        let mut out = Self::zero(ring);
        out.insert_add(1 << (j - 1), ring.coeff.one());
        Ok(out)
    }

    pub fn from_terms(
        ring: &RingDescriptor<R>,
        terms: impl IntoIterator<Item = (u64, R::Elt)>,
    ) -> Self {
        let mut out = Self::zero(ring);
        for (mask, c) in terms {
            debug_assert!(mask < (1u64 << ring.n));
            out.insert_add(mask, c);
        }
        out
    }

    pub fn ring(&self) -> &RingDescriptor<R> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u64) -> R::Elt {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| self.ring.coeff.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &R::Elt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    fn insert_add(&mut self, mask: u64, c: R::Elt) {
        if self.ring.coeff.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(existing) => {
                let sum = self.ring.coeff.add(existing, &c);
                if self.ring.coeff.is_zero(&sum) {
                    self.terms.remove(&mask);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (mask, c) in &other.terms {
            out.insert_add(*mask, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, Error> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, self.ring.coeff.neg(c)))
            .collect();
        MultiElt {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &R::Elt) -> Self {
        let mut out = Self::zero(&self.ring);
        for (mask, a) in &self.terms {
            out.insert_add(*mask, self.ring.coeff.mul(a, c));
        }
        out
    }

    /// Product in normal form. Monomials multiply by splitting into the
    /// shared part S = m1 & m2 and the symmetric difference: every L_j^2
    /// with j in S is rewritten via the quadratic rule, which expands over
    /// submasks W of S with coefficient alpha^|W| beta^(|S|-|W|).
    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_ring(other)?;
        let ring = &self.ring;
        let max_common = ring.n;
        let alpha_pows: Vec<R::Elt> = std::iter::successors(Some(ring.coeff.one()), |prev| {
            Some(ring.coeff.mul(prev, &ring.alpha))
        })
        .take(max_common + 1)
        .collect();
        let beta_pows: Vec<R::Elt> = std::iter::successors(Some(ring.coeff.one()), |prev| {
            Some(ring.coeff.mul(prev, &ring.beta))
        })
        .take(max_common + 1)
        .collect();

        let mut out = Self::zero(ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = ring.coeff.mul(c1, c2);
                let common = m1 & m2;
                let sym = m1 ^ m2;
                if common == 0 {
                    out.insert_add(sym, c);
                    continue;
                }
                let size = common.count_ones() as usize;
                // All submasks of `common`, largest first.
                let mut w = common;
                loop {
                    let k = w.count_ones() as usize;
                    let factor = ring.coeff.mul(&alpha_pows[k], &beta_pows[size - k]);
                    out.insert_add(sym | w, ring.coeff.mul(&c, &factor));
                    if w == 0 {
                        break;
                    }
                    w = (w - 1) & common;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The adjacent transposition of generators i and i+1 (1-indexed).
    pub fn apply_transposition(&self, i: usize) -> Self {
        assert!(
            i >= 1 && i < self.ring.n,
            "transposition index out of range"
        );
        let lo = 1u64 << (i - 1);
        let hi = 1u64 << i;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let swapped = if (m & lo != 0) != (m & hi != 0) {
                    m ^ (lo | hi)
                } else {
                    *m
                };
                (swapped, c.clone())
            })
            .collect();
        MultiElt {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// True iff the element is fixed by every adjacent transposition of
    /// generator indices (these generate the full symmetric group).
    pub fn is_symmetric(&self) -> bool {
        (1..self.ring.n).all(|i| self.apply_transposition(i) == *self)
    }

    /// Coefficient-wise ring map into another quotient ring with the same
    /// generator count. Zero images are dropped, keeping normal form.
    pub fn map_coeffs<S: CoeffRing>(
        &self,
        ring: &RingDescriptor<S>,
        f: impl Fn(&R::Elt) -> S::Elt,
    ) -> MultiElt<S> {
        assert_eq!(self.ring.n, ring.n, "generator counts must agree");
        let mut out = MultiElt::zero(ring);
        for (mask, c) in &self.terms {
            out.insert_add(*mask, f(c));
        }
        out
    }
}

impl<R: CoeffRing> std::ops::Add for &MultiElt<R> {
    type Output = MultiElt<R>;
    fn add(self, rhs: &MultiElt<R>) -> MultiElt<R> {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl<R: CoeffRing> std::ops::Sub for &MultiElt<R> {
    type Output = MultiElt<R>;
    fn sub(self, rhs: &MultiElt<R>) -> MultiElt<R> {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl<R: CoeffRing> std::ops::Mul for &MultiElt<R> {
    type Output = MultiElt<R>;
    fn mul(self, rhs: &MultiElt<R>) -> MultiElt<R> {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl<R: CoeffRing> fmt::Display for MultiElt<R> {
    /// Canonical rendering: terms in lexicographic subset order (constant
    /// term last), multi-term coefficients parenthesized:
    /// `(v - 2)*L1*L3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut entries: Vec<(Vec<u32>, &R::Elt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let elems: Vec<u32> = (0..self.ring.n as u32)
                    .filter(|j| m & (1 << j) != 0)
                    .collect();
                (elems, c)
            })
            .collect();
        entries.sort_by(|a, b| (a.0.is_empty(), &a.0).cmp(&(b.0.is_empty(), &b.0)));

        let mut first = true;
        for (elems, c) in entries {
            let rendered = self.ring.coeff.render(c);
            let compound = rendered.contains(" + ") || rendered.contains(" - ");
            let (negative, coeff_body) = if compound {
                (false, format!("({})", rendered))
            } else if let Some(stripped) = rendered.strip_prefix('-') {
                (true, stripped.to_string())
            } else {
                (false, rendered)
            };
            let gens = elems
                .iter()
                .map(|j| format!("L{}", j + 1))
                .collect::<Vec<_>>()
                .join("*");
            let body = if elems.is_empty() {
                coeff_body
            } else if coeff_body == "1" {
                gens
            } else {
                format!("{}*{}", coeff_body, gens)
            };
            crate::coefficients::write_signed_term(f, &mut first, negative, &body)?;
        }
        Ok(())
    }
}

/// Iterates over all bitmasks with exactly `size` bits among the low `n`
/// (Gosper's hack for the next same-popcount mask).
pub fn masks_of_size(n: usize, size: usize) -> Vec<u64> {
    if size > n {
        return Vec::new();
    }
    if size == 0 {
        return vec![0];
    }
    let limit = 1u64 << n;
    let mut out = Vec::new();
    let mut m = (1u64 << size) - 1;
    while m < limit {
        out.push(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        if r >= limit && r != 0 {
            break;
        }
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// The j-th elementary symmetric element s_j = sum of all size-j square-free
/// monomials; s_0 = 1.
pub fn elementary_symmetric<R: CoeffRing>(
    ring: &RingDescriptor<R>,
    j: usize,
) -> Result<MultiElt<R>, Error> {
    if j > ring.n {
        return Err(Error::IndexOutOfRange {
            index: j,
            n: ring.n,
        });
    }
    Ok(MultiElt::from_terms(
        ring,
        masks_of_size(ring.n, j)
            .into_iter()
            .map(|m| (m, ring.coeff.one())),
    ))
}

/// A symmetric element stored on the elementary-symmetric basis:
/// coefficients c_0..c_n meaning sum c_j s_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymVec<R: CoeffRing> {
    ring: RingDescriptor<R>,
    coeffs: Vec<R::Elt>,
}

impl<R: CoeffRing> SymVec<R> {
    pub fn new(ring: &RingDescriptor<R>, mut coeffs: Vec<R::Elt>) -> Self {
        assert!(coeffs.len() <= ring.n + 1, "too many s-basis coefficients");
        coeffs.resize(ring.n + 1, ring.coeff.zero());
        SymVec {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &RingDescriptor<R>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &RingDescriptor<R>) -> Self {
        Self::basis(ring, 0)
    }

    /// The basis vector s_j.
    pub fn basis(ring: &RingDescriptor<R>, j: usize) -> Self {
        assert!(j <= ring.n);
        let mut coeffs = vec![ring.coeff.zero(); ring.n + 1];
        coeffs[j] = ring.coeff.one();
        SymVec {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn ring(&self) -> &RingDescriptor<R> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &R::Elt {
        &self.coeffs[j]
    }

    pub fn set_coeff(&mut self, j: usize, c: R::Elt) {
        self.coeffs[j] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.coeff.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch in SymVec::add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.coeff.add(a, b))
            .collect();
        SymVec {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SymVec {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.coeff.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: &R::Elt) -> Self {
        SymVec {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|a| self.ring.coeff.mul(a, c))
                .collect(),
        }
    }

    /// Expansion into the quotient ring: sum c_j s_j.
    pub fn expand(&self) -> MultiElt<R> {
        let mut out = MultiElt::zero(&self.ring);
        for (j, c) in self.coeffs.iter().enumerate() {
            if self.ring.coeff.is_zero(c) {
                continue;
            }
            for mask in masks_of_size(self.ring.n, j) {
                out.insert_add(mask, c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<S: CoeffRing>(
        &self,
        ring: &RingDescriptor<S>,
        f: impl Fn(&R::Elt) -> S::Elt,
    ) -> SymVec<S> {
        assert_eq!(self.ring.n, ring.n, "generator counts must agree");
        SymVec::new(ring, self.coeffs.iter().map(f).collect())
    }

    pub fn render(&self) -> String {
        format!("({})", self.coeff_strings().join(", "))
    }

    /// Coefficients rendered in the coefficient grammar, in s-basis order;
    /// the payload of the JSON tower serialization.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| self.ring.coeff.render(c))
            .collect()
    }
}

/// Reads a symmetric element off the s-basis. In normal form symmetry forces
/// equal coefficients on all subsets of one size, and sizes separate the
/// s_j, so c_j is just the coefficient of the representative L_1...L_j.
pub fn symmetric_reduce<R: CoeffRing>(u: &MultiElt<R>) -> Result<SymVec<R>, Error> {
    if !u.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let ring = u.ring().clone();
    let coeffs = (0..=ring.n).map(|j| u.coeff((1u64 << j) - 1)).collect();
    Ok(SymVec { ring, coeffs })
}

/// The signature of an exponent vector over the pre-quotient polynomial
/// ring: the number of odd exponents. The ideal generators L_j^2 - t are
/// concentrated in signature 0, so the quotient inherits the grading.
pub fn signature(exponents: &[u64]) -> usize {
    exponents.iter().filter(|&&e| e % 2 == 1).count()
}

/// Freeness of the s-basis: random coefficient vectors expand to zero only
/// when they are zero. Structural for the normal form, checked anyway.
pub fn s_basis_free_check<R: CoeffRing>(
    ring: &RingDescriptor<R>,
    trials: usize,
    rng: &mut dyn RngCore,
) -> bool {
    for _ in 0..trials {
        let coeffs: Vec<R::Elt> = (0..=ring.n).map(|_| ring.coeff.sample(rng)).collect();
        let vec = SymVec::new(ring, coeffs);
        if vec.is_zero() != vec.expand().is_zero() {
            return false;
        }
    }
    // The two degenerate cases from the contract.
    let zero = SymVec::<R>::zero(ring);
    let unit = SymVec::<R>::unit(ring);
    zero.expand().is_zero() && !unit.expand().is_zero()
}

/// Pseudorandom sparse element for property checks.
pub fn sample_elt<R: CoeffRing>(
    ring: &RingDescriptor<R>,
    max_terms: usize,
    rng: &mut dyn RngCore,
) -> MultiElt<R> {
    let mut out = MultiElt::zero(ring);
    let limit = 1u64 << ring.n;
    for _ in 0..rng.random_range(1..=max_terms) {
        let mask = rng.random_range(0..limit);
        out.insert_add(mask, ring.coeff.sample(rng));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn repg(coeffs: &[i64]) -> RepGElt {
        RepGElt::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Test-only oracle: multiplication in the ambient polynomial ring with
    /// explicit exponent vectors, rewriting squares one at a time until none
    /// remain. Independent of the bitmask engine.
    fn naive_mul<R: CoeffRing>(
        ring: &RingDescriptor<R>,
        u: &MultiElt<R>,
        w: &MultiElt<R>,
    ) -> MultiElt<R> {
        type Expo = Vec<u32>;
        let mut work: Vec<(Expo, R::Elt)> = Vec::new();
        for (m1, c1) in u.terms() {
            for (m2, c2) in w.terms() {
                let exps: Expo = (0..ring.n as u32)
                    .map(|j| ((m1 >> j) & 1) as u32 + ((m2 >> j) & 1) as u32)
                    .collect();
                work.push((exps, ring.coeff.mul(c1, c2)));
            }
        }
        let mut done: Vec<(u64, R::Elt)> = Vec::new();
        while let Some((exps, c)) = work.pop() {
            if let Some(j) = exps.iter().position(|&e| e >= 2) {
                // L_j^2 -> alpha L_j + beta
                let mut e1 = exps.clone();
                e1[j] -= 1;
                work.push((e1, ring.coeff.mul(&c, &ring.alpha)));
                let mut e2 = exps.clone();
                e2[j] -= 2;
                work.push((e2, ring.coeff.mul(&c, &ring.beta)));
            } else {
                let mask = exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e == 1)
                    .fold(0u64, |m, (j, _)| m | (1 << j));
                done.push((mask, c));
            }
        }
        MultiElt::from_terms(ring, done)
    }

    #[test]
    fn quadratic_rewrite_examples() {
        // K: L1 * L1 = v L1 - 1
        let ring = kg(2);
        let l1 = MultiElt::generator(&ring, 1).unwrap();
        let prod = &l1 * &l1;
        let expect = MultiElt::from_terms(&ring, [(1u64, RepGElt::v()), (0u64, repg(&[-1]))]);
        assert_eq!(prod, expect);

        // H: Lb1 * Lb1 = t
        let ring = hg(2);
        let l1 = MultiElt::generator(&ring, 1).unwrap();
        let expect = MultiElt::constant(&ring, RatPoly::variable());
        assert_eq!(&l1 * &l1, expect);

        // square-zero: x1 * x1 = 0
        let ring = ext(2);
        let x1 = MultiElt::generator(&ring, 1).unwrap();
        assert!((&x1 * &x1).is_zero());
    }

    #[test]
    fn elementary_symmetric_examples() {
        let ring = kg(2);
        assert_eq!(
            elementary_symmetric(&ring, 0).unwrap(),
            MultiElt::one(&ring)
        );
        let s1 = elementary_symmetric(&ring, 1).unwrap();
        let l1 = MultiElt::generator(&ring, 1).unwrap();
        let l2 = MultiElt::generator(&ring, 2).unwrap();
        assert_eq!(s1, &l1 + &l2);
        let s2 = elementary_symmetric(&ring, 2).unwrap();
        assert_eq!(s2, &l1 * &l2);
        assert!(matches!(
            elementary_symmetric(&ring, 3),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        ));
    }

    #[test]
    fn symmetry_tests() {
        let ring = kg(4);
        assert!(elementary_symmetric(&ring, 2).unwrap().is_symmetric());
        let ring2 = kg(2);
        assert!(!MultiElt::generator(&ring2, 1).unwrap().is_symmetric());
        // v*L1L2 + L1 + L2 is symmetric
        let s1 = elementary_symmetric(&ring2, 1).unwrap();
        let s2 = elementary_symmetric(&ring2, 2).unwrap();
        let u = &s1 + &s2.scale(&RepGElt::v());
        assert!(u.is_symmetric());
    }

    #[test]
    fn symmetric_reduce_examples() {
        let ring = kg(2);
        let s1 = elementary_symmetric(&ring, 1).unwrap();
        assert_eq!(
            symmetric_reduce(&s1).unwrap().coeffs(),
            &[repg(&[0]), repg(&[1]), repg(&[0])]
        );
        // s1^2 = -2 s0 + v s1 + 2 s2 in K_G, n = 2
        let sq = &s1 * &s1;
        let reduced = symmetric_reduce(&sq).unwrap();
        assert_eq!(reduced.coeffs(), &[repg(&[-2]), repg(&[0, 1]), repg(&[2])]);
        // oracle agreement
        assert_eq!(sq, naive_mul(&ring, &s1, &s1));

        // H case: sb1^2 = 2t s0 + 0 s1 + 2 s2
        let ring = hg(2);
        let s1 = elementary_symmetric(&ring, 1).unwrap();
        let sq = &s1 * &s1;
        let reduced = symmetric_reduce(&sq).unwrap();
        let t = RatPoly::variable();
        assert_eq!(
            reduced.coeffs(),
            &[
                &RatPoly::from_int(2) * &t,
                RatPoly::zero(),
                RatPoly::from_int(2)
            ]
        );

        let l1 = MultiElt::generator(&kg(2), 1).unwrap();
        assert_eq!(symmetric_reduce(&l1), Err(Error::NotSymmetric));
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&[0, 0, 0, 0]), 0);
        assert_eq!(signature(&[1, 1, 0, 0]), 2);
        assert_eq!(signature(&[2, 3, 1]), 2);
        // each monomial of the ideal generators L_j^2 - t has signature 0
        assert_eq!(signature(&[2, 0]), 0);
        assert_eq!(signature(&[0, 0]), 0);
    }

    #[test]
    fn signature_preserved_by_even_multipliers() {
        // multiplying by an all-even monomial (like any monomial of the
        // ideal generators) preserves the signature grading
        let m = [1u64, 2, 3, 0];
        let even = [2u64, 0, 4, 2];
        let product: Vec<u64> = m.iter().zip(even.iter()).map(|(a, b)| a + b).collect();
        assert_eq!(signature(&product), signature(&m));
    }

    #[test]
    fn lequation_n1() {
        // (L1 - b)(L1 - b^-1) = 0 in K_T with n = 1
        let ring = kt(1);
        let l1 = MultiElt::generator(&ring, 1).unwrap();
        let b = MultiElt::constant(&ring, LaurentElt::b(1));
        let binv = MultiElt::constant(&ring, LaurentElt::b(-1));
        let prod = &(&l1 - &b) * &(&l1 - &binv);
        assert!(prod.is_zero());
    }

    #[test]
    fn free_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        assert!(s_basis_free_check(&kt(6), 200, &mut rng));
        assert!(s_basis_free_check(&kg(4), 50, &mut rng));
        assert!(s_basis_free_check(&hg(4), 50, &mut rng));
        assert!(s_basis_free_check(&ext(4), 50, &mut rng));
    }

    #[test]
    fn ring_axioms_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        fn check_ring<R: CoeffRing>(ring: &RingDescriptor<R>, rng: &mut ChaCha8Rng) {
            for _ in 0..100 {
                let a = sample_elt(ring, 3, rng);
                let b = sample_elt(ring, 3, rng);
                let c = sample_elt(ring, 3, rng);
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c), "associativity");
                assert_eq!(&a * &b, &b * &a, "commutativity");
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c), "distributivity");
            }
        }
        check_ring(&kt(4), &mut rng);
        check_ring(&kg(4), &mut rng);
        check_ring(&ht(3), &mut rng);
        check_ring(&hg(4), &mut rng);
        check_ring(&ext(4), &mut rng);
    }

    #[test]
    fn mul_matches_naive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let ring = kg(4);
        for _ in 0..50 {
            let a = sample_elt(&ring, 4, &mut rng);
            let b = sample_elt(&ring, 4, &mut rng);
            assert_eq!(&a * &b, naive_mul(&ring, &a, &b));
        }
        let ring = ht(3);
        for _ in 0..25 {
            let a = sample_elt(&ring, 3, &mut rng);
            let b = sample_elt(&ring, 3, &mut rng);
            assert_eq!(&a * &b, naive_mul(&ring, &a, &b));
        }
    }

    #[test]
    fn reduce_inverts_expand() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let ring = kg(5);
        for _ in 0..50 {
            let coeffs: Vec<RepGElt> = (0..=5).map(|_| ring.coeff.sample(&mut rng)).collect();
            let vec = SymVec::new(&ring, coeffs);
            assert_eq!(symmetric_reduce(&vec.expand()).unwrap(), vec);
        }
    }

    #[test]
    fn transpositions_commute_with_mul() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let ring = kg(4);
        for _ in 0..50 {
            let a = sample_elt(&ring, 3, &mut rng);
            let b = sample_elt(&ring, 3, &mut rng);
            for i in 1..4 {
                assert_eq!(
                    (&a * &b).apply_transposition(i),
                    &a.apply_transposition(i) * &b.apply_transposition(i)
                );
            }
        }
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = MultiElt::one(&kg(2));
        let b = MultiElt::one(&kg(3));
        assert!(matches!(a.try_mul(&b), Err(Error::RingMismatch(_))));
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn degenerate_n0() {
        let ring = kg(0);
        let one = MultiElt::one(&ring);
        assert_eq!(&one * &one, one);
        assert_eq!(symmetric_reduce(&one).unwrap().coeffs().len(), 1);
        assert!(MultiElt::generator(&ring, 1).is_err());
    }

    #[test]
    fn rendering() {
        let ring = kg(3);
        let s2_like = MultiElt::from_terms(
            &ring,
            [
                (0b101u64, repg(&[-2, 1])), // (v - 2) * L1 * L3
                (0u64, repg(&[1])),
            ],
        );
        assert_eq!(s2_like.to_string(), "(v - 2)*L1*L3 + 1");
        let neg = MultiElt::from_terms(&ring, [(0b1u64, repg(&[-1]))]);
        assert_eq!(neg.to_string(), "-L1");
        assert_eq!(MultiElt::<RepGRing>::zero(&ring).to_string(), "0");
    }

    #[test]
    fn masks_of_size_is_complete() {
        for n in 0..=8usize {
            for j in 0..=n {
                let got = masks_of_size(n, j);
                let brute: Vec<u64> = (0..1u64 << n)
                    .filter(|m| m.count_ones() as usize == j)
                    .collect();
                assert_eq!(got, brute, "n = {n}, j = {j}");
            }
        }
    }
}
