//! Truncated formal power series over exact rationals.
//!
//! A series carries an explicit cutoff degree D and exactly D+1 rational
//! coefficients; every operation truncates at D. Identities between full
//! series are therefore checked as exact equalities of coefficient vectors
//! through D.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational coefficient type; always reduced, positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A power series truncated at degree `cutoff`; `coeffs[k]` is the
/// coefficient of the k-th power of the variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    cutoff: usize,
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(cutoff: usize) -> Self {
        TruncSeries {
            cutoff,
            coeffs: vec![Rational::zero(); cutoff + 1],
        }
    }

    pub fn one(cutoff: usize) -> Self {
        Self::constant(cutoff, Rational::one())
    }

    pub fn constant(cutoff: usize, c: Rational) -> Self {
        let mut s = Self::zero(cutoff);
        s.coeffs[0] = c;
        s
    }

    pub fn from_int(cutoff: usize, n: i64) -> Self {
        Self::constant(cutoff, rat_int(n))
    }

    /// c * x^k (zero if k exceeds the cutoff).
    pub fn monomial(cutoff: usize, k: usize, c: Rational) -> Self {
        let mut s = Self::zero(cutoff);
        if k <= cutoff {
            s.coeffs[k] = c;
        }
        s
    }

    /// The variable x itself.
    pub fn variable(cutoff: usize) -> Self {
        Self::monomial(cutoff, 1, Rational::one())
    }

    pub fn from_coeffs(cutoff: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(cutoff + 1, Rational::zero());
        TruncSeries { cutoff, coeffs }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the two series agree coefficient-wise through degree d.
    pub fn agrees_through(&self, other: &Self, d: usize) -> bool {
        (0..=d).all(|k| self.coeff(k) == other.coeff(k))
    }

    /// Re-truncates (or zero-extends) to a new cutoff.
    pub fn with_cutoff(&self, cutoff: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(cutoff + 1, Rational::zero());
        coeffs.truncate(cutoff + 1);
        TruncSeries { cutoff, coeffs }
    }

    fn join(&self, other: &Self) -> usize {
        self.cutoff.min(other.cutoff)
    }

    pub fn add(&self, other: &Self) -> Self {
        let cutoff = self.join(other);
        let coeffs = (0..=cutoff)
            .map(|k| self.coeff(k) + other.coeff(k))
            .collect();
        TruncSeries { cutoff, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cutoff = self.join(other);
        let mut coeffs = vec![Rational::zero(); cutoff + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(cutoff + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cutoff + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncSeries { cutoff, coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.cutoff);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self, Error> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut coeffs = vec![Rational::zero(); self.cutoff + 1];
        coeffs[0] = a0.recip();
        for n in 1..=self.cutoff {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += self.coeff(k) * &coeffs[n - k];
            }
            coeffs[n] = -acc / &a0;
        }
        Ok(TruncSeries {
            cutoff: self.cutoff,
            coeffs,
        })
    }

    /// Substitutes `inner` (which must have zero constant term) into self.
    pub fn compose(&self, inner: &Self) -> Result<Self, Error> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let cutoff = self.join(inner);
        // Horner from the top coefficient down.
        let mut acc = TruncSeries::zero(cutoff);
        for k in (0..=cutoff).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += self.coeff(k);
        }
        Ok(acc)
    }

    /// exp of a series with zero constant term, via the recurrence
    /// n c_n = sum_{k=1..n} k a_k c_{n-k} coming from (e^a)' = a' e^a.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut coeffs = vec![Rational::zero(); self.cutoff + 1];
        coeffs[0] = Rational::one();
        for n in 1..=self.cutoff {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += self.coeff(k) * rat_int(k as i64) * &coeffs[n - k];
            }
            coeffs[n] = acc / rat_int(n as i64);
        }
        Ok(TruncSeries {
            cutoff: self.cutoff,
            coeffs,
        })
    }

    /// The substitution x -> c x, scaling the k-th coefficient by c^k.
    pub fn scale_argument(&self, c: i64) -> Self {
        let c = rat_int(c);
        let mut factor = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &factor;
                factor *= &c;
                out
            })
            .collect();
        TruncSeries {
            cutoff: self.cutoff,
            coeffs,
        }
    }

    /// The substitution x -> x^2 (doubling the cutoff so no information is
    /// lost): sends coefficient k to position 2k.
    pub fn square_argument(&self) -> Self {
        let cutoff = 2 * self.cutoff + 1;
        let mut coeffs = vec![Rational::zero(); cutoff + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = a.clone();
        }
        TruncSeries { cutoff, coeffs }
    }
}

impl fmt::Display for TruncSeries {
    /// Renders as `1 + 1/6*t + 1/120*t^2 + O(t^3)` in the generic variable t.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let body = match k {
                0 => format!("{}", abs),
                1 => {
                    if abs.is_one() {
                        "t".to_string()
                    } else {
                        format!("{}*t", abs)
                    }
                }
                _ => {
                    if abs.is_one() {
                        format!("t^{}", k)
                    } else {
                        format!("{}*t^{}", abs, k)
                    }
                }
            };
            crate::coefficients::write_signed_term(f, &mut first, c.is_negative(), &body)?;
        }
        if first {
            write!(f, "0")?;
            first = false;
        }
        let _ = first;
        write!(f, " + O(t^{})", self.cutoff + 1)
    }
}

/// 1, 1!, 2!, ..., up_to! as exact integers.
pub fn factorial_table(up_to: usize) -> Vec<BigInt> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(BigInt::one());
    for k in 1..=up_to {
        let next = table.last().unwrap() * BigInt::from(k as u64);
        table.push(next);
    }
    table
}

/// p(t) = sinh(sqrt t)/sqrt t: coefficient of t^k is 1/(2k+1)!.
pub fn series_p(cutoff: usize) -> TruncSeries {
    let fact = factorial_table(2 * cutoff + 1);
    let coeffs = (0..=cutoff)
        .map(|k| Rational::new(BigInt::one(), fact[2 * k + 1].clone()))
        .collect();
    TruncSeries::from_coeffs(cutoff, coeffs)
}

/// q(t) = cosh(sqrt t): coefficient of t^k is 1/(2k)!.
pub fn series_q(cutoff: usize) -> TruncSeries {
    let fact = factorial_table(2 * cutoff);
    let coeffs = (0..=cutoff)
        .map(|k| Rational::new(BigInt::one(), fact[2 * k].clone()))
        .collect();
    TruncSeries::from_coeffs(cutoff, coeffs)
}

/// G(y) = ((e^y - 1)/y)^(2r-1), the generating series whose even/odd split
/// yields g_1 and g_2.
pub fn series_big_g(r: usize, cutoff: usize) -> TruncSeries {
    let fact = factorial_table(cutoff + 1);
    let base = TruncSeries::from_coeffs(
        cutoff,
        (0..=cutoff)
            .map(|k| Rational::new(BigInt::one(), fact[k + 1].clone()))
            .collect(),
    );
    base.pow(2 * r - 1)
}

/// The split G(y) = g_1(y^2) + y g_2(y^2): `g1` holds the even coefficients
/// of G and `g2` the odd ones, each truncated at degree `cutoff` in its own
/// variable. Computing the split this way avoids sqrt-bookkeeping in the
/// closed hyperbolic forms, which are recovered by the identity
/// g_1(4t)^2 - 4t g_2(4t)^2 = p(t)^(2(2r-1)).
pub fn series_g(r: usize, cutoff: usize) -> (TruncSeries, TruncSeries) {
    assert!(r >= 1, "series_g requires r >= 1");
    let big = series_big_g(r, 2 * cutoff + 1);
    let g1 = TruncSeries::from_coeffs(cutoff, (0..=cutoff).map(|k| big.coeff(2 * k)).collect());
    let g2 = TruncSeries::from_coeffs(cutoff, (0..=cutoff).map(|k| big.coeff(2 * k + 1)).collect());
    (g1, g2)
}

/// Todd series y/(1 - e^{-y}), computed by inverting the unit-constant
/// series (1 - e^{-y})/y.
pub fn series_todd(cutoff: usize) -> TruncSeries {
    let fact = factorial_table(cutoff + 1);
    let coeffs = (0..=cutoff)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Rational::new(BigInt::from(sign), fact[k + 1].clone())
        })
        .collect();
    TruncSeries::from_coeffs(cutoff, coeffs)
        .invert()
        .expect("constant term is 1")
}

/// e^y as a truncated series.
pub fn series_exp_var(cutoff: usize) -> TruncSeries {
    TruncSeries::variable(cutoff)
        .exp()
        .expect("zero constant term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn p_q_coefficients() {
        let p = series_p(4);
        assert_eq!(p.coeff(0), rat_int(1));
        assert_eq!(p.coeff(1), rat(1, 6));
        assert_eq!(p.coeff(2), rat(1, 120));
        let q = series_q(4);
        assert_eq!(q.coeff(0), rat_int(1));
        assert_eq!(q.coeff(1), rat(1, 2));
        assert_eq!(q.coeff(2), rat(1, 24));
    }

    #[test]
    fn todd_coefficients() {
        let todd = series_todd(6);
        assert_eq!(todd.coeff(0), rat_int(1));
        assert_eq!(todd.coeff(1), rat(1, 2));
        assert_eq!(todd.coeff(2), rat(1, 12));
        // Independent oracle: solve (1 - e^{-y})/y * todd = 1 degree by
        // degree with fresh unknowns.
        let fact = factorial_table(8);
        let base: Vec<Rational> = (0..=6)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                Rational::new(BigInt::from(sign), fact[k + 1].clone())
            })
            .collect();
        let mut expect = vec![Rational::zero(); 7];
        expect[0] = Rational::one();
        for n in 1..=6usize {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &base[k] * &expect[n - k];
            }
            expect[n] = -acc;
        }
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(&todd.coeff(k), e, "todd coefficient {k}");
        }
    }

    #[test]
    fn g_split_r1_matches_p() {
        let (g1, g2) = series_g(1, 6);
        let p = series_p(6);
        assert_eq!(g1, p);
        // odd part of (e^y - 1)/y: 1/(2k+2)!.
        assert_eq!(g2.coeff(0), rat(1, 2));
        assert_eq!(g2.coeff(1), rat(1, 24));
    }

    #[test]
    fn g_values_at_zero() {
        for r in 1..=4 {
            let (g1, g2) = series_g(r, 4);
            assert_eq!(g1.coeff(0), rat_int(1));
            assert_eq!(g2.coeff(0), rat(2 * r as i64 - 1, 2));
        }
    }

    #[test]
    fn arithmetic_examples() {
        // invert(1 - t) = geometric series
        let one_minus_t = TruncSeries::one(5).sub(&TruncSeries::variable(5));
        let geo = one_minus_t.invert().unwrap();
        for k in 0..=5 {
            assert_eq!(geo.coeff(k), rat_int(1));
        }
        // exp(t)
        let e = series_exp_var(3);
        assert_eq!(e.coeff(0), rat_int(1));
        assert_eq!(e.coeff(1), rat_int(1));
        assert_eq!(e.coeff(2), rat(1, 2));
        assert_eq!(e.coeff(3), rat(1, 6));
        // scale_argument(4) on p: t-coefficient 4/6 = 2/3
        let p4 = series_p(4).scale_argument(4);
        assert_eq!(p4.coeff(1), rat(2, 3));
    }

    #[test]
    fn invert_errors_on_zero_constant() {
        assert_eq!(
            TruncSeries::variable(3).invert(),
            Err(Error::NonUnitConstantTerm)
        );
        assert_eq!(
            TruncSeries::one(3).compose(&TruncSeries::one(3)),
            Err(Error::NonzeroConstantTerm)
        );
        assert_eq!(TruncSeries::one(3).exp(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn hyperbolic_pythagoras() {
        let d = 16;
        let p = series_p(d);
        let q = series_q(d);
        let lhs = q.mul(&q).sub(&TruncSeries::variable(d).mul(&p.mul(&p)));
        assert_eq!(lhs, TruncSeries::one(d));
    }

    #[test]
    fn split_identity() {
        let d = 12;
        for r in 1..=4 {
            let (g1, g2) = series_g(r, d);
            let g1_4 = g1.scale_argument(4);
            let g2_4 = g2.scale_argument(4);
            let four_t = TruncSeries::monomial(d, 1, rat_int(4));
            let lhs = g1_4.mul(&g1_4).sub(&four_t.mul(&g2_4.mul(&g2_4)));
            let rhs = series_p(d).pow(2 * (2 * r - 1));
            assert_eq!(lhs, rhs, "split identity at r = {r}");
        }
    }

    #[test]
    fn reconstruction() {
        for r in 1..=3 {
            let deg = 25;
            let big = series_big_g(r, deg);
            let (g1, g2) = series_g(r, 12);
            let rebuilt = g1
                .square_argument()
                .with_cutoff(deg)
                .add(&TruncSeries::variable(deg).mul(&g2.square_argument().with_cutoff(deg)));
            assert!(
                rebuilt.agrees_through(&big, deg),
                "reconstruction at r = {r}"
            );
        }
    }

    fn arb_series(cutoff: usize) -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((-20i64..=20, 1i64..=6), cutoff + 1).prop_map(move |v| {
            TruncSeries::from_coeffs(cutoff, v.into_iter().map(|(n, d)| rat(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn invert_round_trip(s in arb_series(8)) {
            let mut unit = s.clone();
            if unit.coeff(0).is_zero() {
                unit = unit.add(&TruncSeries::one(8));
            }
            if unit.coeff(0).is_zero() {
                return Ok(());
            }
            let inv = unit.invert().unwrap();
            prop_assert_eq!(unit.mul(&inv), TruncSeries::one(8));
        }

        #[test]
        fn compose_respects_multiplication(s in arb_series(6)) {
            // (f*f)(g) = f(g)*f(g)
            let mut g = s.clone();
            g.coeffs[0] = Rational::zero();
            let f = TruncSeries::variable(6).add(&TruncSeries::monomial(6, 2, rat(1, 3)));
            let ff = f.mul(&f);
            let lhs = ff.compose(&g).unwrap();
            let rhs = f.compose(&g).unwrap().mul(&f.compose(&g).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn compose_round_trip(s in arb_series(8)) {
            // t/(1-t) and t/(1+t) are compositional inverses; conjugating a
            // random series by the pair is the identity through the cutoff.
            let d = 8;
            let geo = TruncSeries::variable(d)
                .mul(&TruncSeries::one(d).sub(&TruncSeries::variable(d)).invert().unwrap());
            let geo_inv = TruncSeries::variable(d)
                .mul(&TruncSeries::one(d).add(&TruncSeries::variable(d)).invert().unwrap());
            prop_assert_eq!(geo.compose(&geo_inv).unwrap(), TruncSeries::variable(d));
            let round = s.compose(&geo).unwrap().compose(&geo_inv).unwrap();
            prop_assert_eq!(round, s);
        }
    }
}
