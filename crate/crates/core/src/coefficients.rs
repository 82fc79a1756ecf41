//! The representation rings R(T) = `Z[b, b^-1]` and R(G) = `Z[v]`.
//!
//! `b` is the weight-1 character of the maximal torus T, the Weyl involution
//! sends b to b^-1, and v restricts to b + b^-1. All coefficients are
//! arbitrary-precision integers: powers of v expand to binomial-sized Laurent
//! coefficients, and a fixed-width overflow would silently corrupt the exact
//! identity checks downstream.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An element of R(T) = `Z[b, b^-1]`: a finite map from exponents to nonzero
/// integer coefficients. Zero coefficients are never stored, so structural
/// equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentElt {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentElt {
    pub fn zero() -> Self {
        LaurentElt::default()
    }

    pub fn one() -> Self {
        LaurentElt::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::monomial(0, n)
    }

    /// The monomial c * b^k.
    pub fn monomial(k: i64, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentElt { coeffs }
    }

    /// The generator b^k.
    pub fn b(k: i64) -> Self {
        Self::monomial(k, BigInt::one())
    }

    /// b + b^-1, the restriction of v to T.
    pub fn v_restricted() -> Self {
        &Self::b(1) + &Self::b(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    fn insert_add(coeffs: &mut BTreeMap<i64, BigInt>, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = coeffs.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            coeffs.remove(&k);
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The Weyl involution b^k -> b^-k.
    pub fn weyl(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect();
        LaurentElt { coeffs }
    }

    pub fn is_weyl_invariant(&self) -> bool {
        self.weyl() == *self
    }

    /// The augmentation b -> 1 (sum of all coefficients), the
    /// non-equivariant specialization used by the divided-power bridge.
    pub fn augment(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Rewrites a Weyl-invariant element as a polynomial in v = b + b^-1 by
    /// greedy elimination from the highest exponent down: b^k + b^-k is
    /// v^k minus already-eliminated lower terms, so each pass strictly
    /// decreases the top exponent.
    pub fn invariants_to_g(&self) -> Result<RepGElt, Error> {
        if !self.is_weyl_invariant() {
            return Err(Error::NotInvariant);
        }
        let mut rem = self.clone();
        let mut out: Vec<BigInt> = Vec::new();
        loop {
            let top = match rem.coeffs.keys().next_back() {
                None => break,
                Some(&k) => k,
            };
            if top <= 0 {
                // Invariance leaves only the constant term at this point.
                Self::set_coeff(&mut out, 0, rem.coeff(0));
                break;
            }
            let c = rem.coeff(top);
            Self::set_coeff(&mut out, top as usize, c.clone());
            let vk = Self::v_restricted().pow(top as usize);
            rem = &rem - &(&vk * &Self::from_bigint(c));
        }
        Ok(RepGElt::from_coeffs(out))
    }

    fn set_coeff(out: &mut Vec<BigInt>, k: usize, c: BigInt) {
        if out.len() <= k {
            out.resize(k + 1, BigInt::zero());
        }
        out[k] += c;
    }
}

impl std::ops::Add for &LaurentElt {
    type Output = LaurentElt;
    fn add(self, rhs: &LaurentElt) -> LaurentElt {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            LaurentElt::insert_add(&mut coeffs, *k, c.clone());
        }
        LaurentElt { coeffs }
    }
}

impl std::ops::Sub for &LaurentElt {
    type Output = LaurentElt;
    fn sub(self, rhs: &LaurentElt) -> LaurentElt {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &LaurentElt {
    type Output = LaurentElt;
    fn neg(self) -> LaurentElt {
        let coeffs = self.coeffs.iter().map(|(k, c)| (*k, -c)).collect();
        LaurentElt { coeffs }
    }
}

impl std::ops::Mul for &LaurentElt {
    type Output = LaurentElt;
    fn mul(self, rhs: &LaurentElt) -> LaurentElt {
        let mut coeffs = BTreeMap::new();
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &rhs.coeffs {
                LaurentElt::insert_add(&mut coeffs, k1 + k2, c1 * c2);
            }
        }
        LaurentElt { coeffs }
    }
}

impl fmt::Display for LaurentElt {
    /// Renders as `3*b^2 - b + 4*b^-2`, highest exponent first; round-trips
    /// with the CLI element grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let body = match k {
                0 => c.abs().to_string(),
                1 => {
                    if c.abs().is_one() {
                        "b".to_string()
                    } else {
                        format!("{}*b", c.abs())
                    }
                }
                _ => {
                    if c.abs().is_one() {
                        format!("b^{}", k)
                    } else {
                        format!("{}*b^{}", c.abs(), k)
                    }
                }
            };
            write_signed_term(f, &mut first, c.is_negative(), &body)?;
        }
        Ok(())
    }
}

/// An element of R(G) = `Z[v]`: integer coefficients of powers of v, trailing
/// zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RepGElt {
    coeffs: Vec<BigInt>,
}

impl RepGElt {
    pub fn zero() -> Self {
        RepGElt::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(n)])
    }

    /// The generator v.
    pub fn v() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// c * v^k.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RepGElt { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The restriction homomorphism R(G) -> R(T), v -> b + b^-1. Injective:
    /// distinct polynomials in v restrict to distinct Laurent elements.
    pub fn restrict(&self) -> LaurentElt {
        let v = LaurentElt::v_restricted();
        let mut acc = LaurentElt::zero();
        // Horner evaluation at b + b^-1.
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &v) + &LaurentElt::from_bigint(c.clone());
        }
        acc
    }
}

impl std::ops::Add for &RepGElt {
    type Output = RepGElt;
    fn add(self, rhs: &RepGElt) -> RepGElt {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RepGElt::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &RepGElt {
    type Output = RepGElt;
    fn sub(self, rhs: &RepGElt) -> RepGElt {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &RepGElt {
    type Output = RepGElt;
    fn neg(self) -> RepGElt {
        RepGElt {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &RepGElt {
    type Output = RepGElt;
    fn mul(self, rhs: &RepGElt) -> RepGElt {
        if self.is_zero() || rhs.is_zero() {
            return RepGElt::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RepGElt::from_coeffs(coeffs)
    }
}

impl fmt::Display for RepGElt {
    /// Renders as `v^2 - 2`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => c.abs().to_string(),
                1 => {
                    if c.abs().is_one() {
                        "v".to_string()
                    } else {
                        format!("{}*v", c.abs())
                    }
                }
                _ => {
                    if c.abs().is_one() {
                        format!("v^{}", k)
                    } else {
                        format!("{}*v^{}", c.abs(), k)
                    }
                }
            };
            write_signed_term(f, &mut first, c.is_negative(), &body)?;
        }
        Ok(())
    }
}

/// Shared term joiner: first term gets a bare `-` prefix when negative,
/// later terms are joined with ` + ` / ` - `.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    negative: bool,
    body: &str,
) -> fmt::Result {
    if *first {
        *first = false;
        if negative {
            write!(f, "-{}", body)
        } else {
            write!(f, "{}", body)
        }
    } else if negative {
        write!(f, " - {}", body)
    } else {
        write!(f, " + {}", body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn laurent(pairs: &[(i64, i64)]) -> LaurentElt {
        pairs.iter().fold(LaurentElt::zero(), |acc, &(k, c)| {
            &acc + &LaurentElt::monomial(k, BigInt::from(c))
        })
    }

    fn repg(coeffs: &[i64]) -> RepGElt {
        RepGElt::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(LaurentElt::b(1).weyl(), LaurentElt::b(-1));
        assert_eq!(
            laurent(&[(0, 3), (2, 1)]).weyl(),
            laurent(&[(0, 3), (-2, 1)])
        );
        let inv = LaurentElt::v_restricted();
        assert_eq!(inv.weyl(), inv);
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(RepGElt::v().restrict(), LaurentElt::v_restricted());
        // v^2 = b^2 + 2 + b^-2
        assert_eq!(
            repg(&[0, 0, 1]).restrict(),
            laurent(&[(2, 1), (0, 2), (-2, 1)])
        );
        assert_eq!(RepGElt::one().restrict(), LaurentElt::one());
    }

    #[test]
    fn invariants_to_g_examples() {
        assert_eq!(
            LaurentElt::v_restricted().invariants_to_g().unwrap(),
            RepGElt::v()
        );
        // b^2 + b^-2 = v^2 - 2
        assert_eq!(
            laurent(&[(2, 1), (-2, 1)]).invariants_to_g().unwrap(),
            repg(&[-2, 0, 1])
        );
        assert_eq!(LaurentElt::b(1).invariants_to_g(), Err(Error::NotInvariant));
    }

    #[test]
    fn augment_examples() {
        assert_eq!(LaurentElt::v_restricted().augment(), BigInt::from(2));
        assert_eq!(LaurentElt::one().augment(), BigInt::from(1));
        // 3b^2 - b -> 2
        assert_eq!(laurent(&[(2, 3), (1, -1)]).augment(), BigInt::from(2));
    }

    #[test]
    fn display_round_shapes() {
        assert_eq!(
            laurent(&[(2, 3), (1, -1), (-2, 4)]).to_string(),
            "3*b^2 - b + 4*b^-2"
        );
        assert_eq!(repg(&[-2, 0, 1]).to_string(), "v^2 - 2");
        assert_eq!(LaurentElt::zero().to_string(), "0");
        assert_eq!(repg(&[0, -1]).to_string(), "-v");
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentElt> {
        prop::collection::btree_map(-4i64..=4, -9i64..=9, 0..5).prop_map(|m| {
            m.into_iter().fold(LaurentElt::zero(), |acc, (k, c)| {
                &acc + &LaurentElt::monomial(k, BigInt::from(c))
            })
        })
    }

    fn arb_repg() -> impl Strategy<Value = RepGElt> {
        prop::collection::vec(-9i64..=9, 0..=8).prop_map(|v| repg(&v))
    }

    proptest! {
        #[test]
        fn weyl_is_ring_involution(x in arb_laurent(), y in arb_laurent()) {
            prop_assert_eq!(x.weyl().weyl(), x.clone());
            prop_assert_eq!((&x * &y).weyl(), &x.weyl() * &y.weyl());
            prop_assert_eq!((&x + &y).weyl(), &x.weyl() + &y.weyl());
        }

        #[test]
        fn restrict_round_trip(p in arb_repg()) {
            let a = p.restrict();
            prop_assert!(a.is_weyl_invariant());
            prop_assert_eq!(a.invariants_to_g().unwrap(), p);
        }

        #[test]
        fn augment_is_eval_at_two(p in arb_repg()) {
            let direct: BigInt = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c * BigInt::from(2).pow(k as u32))
                .sum();
            prop_assert_eq!(p.restrict().augment(), direct);
        }
    }

    #[test]
    fn restrict_injective_on_sampled_elements() {
        // Injectivity via the round trip on 200 pseudorandom elements of
        // degree <= 8.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let deg = rng.random_range(0..=8usize);
            let coeffs: Vec<BigInt> = (0..=deg)
                .map(|_| BigInt::from(rng.random_range(-9i64..=9)))
                .collect();
            let p = RepGElt::from_coeffs(coeffs);
            assert_eq!(p.restrict().invariants_to_g().unwrap(), p);
        }
    }
}
