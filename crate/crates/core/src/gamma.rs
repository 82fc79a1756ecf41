//! The divided polynomial algebra `Gamma[x]` and the non-equivariant bridge
//! from K-theory towers.
//!
//! `Gamma[x]` has Z-basis g_0, g_1, ... with g_i g_j = C(i+j, i) g_{i+j}.
//! Truncating away g_j for j > k identifies the quotient with the symmetric
//! subalgebra of the square-zero ring on x_1..x_k via g_j -> e_j. The
//! K-theory tower specializes onto this picture at b = 1 (so v = 2): writing
//! L_j = 1 + x_j turns the quadratic rule into x_j^2 = 0 and
//! s_j(L) = sum_m C(2r-m, j-m) e_m(x), which is the change of basis used by
//! [`specialize_tower`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::quotient::{ext, IntRing, SymVec};
use crate::tower::TowerElt;
use crate::Error;

/// An element sum n_k g_k of `Gamma[x]`; zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GammaElt {
    coeffs: BTreeMap<usize, BigInt>,
}

impl GammaElt {
    pub fn zero() -> Self {
        GammaElt::default()
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// The basis element g_k.
    pub fn basis(k: usize) -> Self {
        Self::monomial(k, BigInt::one())
    }

    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        GammaElt { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    fn insert_add(&mut self, k: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GammaElt {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// The divided-power product: bilinear extension of
    /// g_i g_j = C(i+j, i) g_{i+j}.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GammaElt::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let binom = binomial(BigInt::from(i + j), BigInt::from(*i));
                out.insert_add(i + j, a * b * binom);
            }
        }
        out
    }

    /// Truncation g_j -> 0 for j > cutoff.
    pub fn truncate(&self, cutoff: usize) -> TruncGamma {
        let mut coeffs = vec![BigInt::zero(); cutoff + 1];
        for (k, c) in &self.coeffs {
            if *k <= cutoff {
                coeffs[*k] = c.clone();
            }
        }
        TruncGamma { cutoff, coeffs }
    }
}

impl fmt::Display for GammaElt {
    /// Renders as `3*g2 + g0`, highest index first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let body = if c.abs().is_one() {
                format!("g{}", k)
            } else {
                format!("{}*g{}", c.abs(), k)
            };
            crate::coefficients::write_signed_term(f, &mut first, c.is_negative(), &body)?;
        }
        Ok(())
    }
}

/// The image of a GammaElt in `Gamma[x]`/(g_j : j > cutoff): coefficients on
/// g_0..g_cutoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncGamma {
    cutoff: usize,
    coeffs: Vec<BigInt>,
}

impl TruncGamma {
    pub fn new(cutoff: usize, mut coeffs: Vec<BigInt>) -> Self {
        assert!(coeffs.len() <= cutoff + 1);
        coeffs.resize(cutoff + 1, BigInt::zero());
        TruncGamma { cutoff, coeffs }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Re-truncation to a smaller cutoff.
    pub fn restrict_to(&self, cutoff: usize) -> TruncGamma {
        TruncGamma {
            cutoff,
            coeffs: self.coeffs.iter().take(cutoff + 1).cloned().collect(),
        }
    }
}

impl fmt::Display for TruncGamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = if c.abs().is_one() {
                format!("g{}", k)
            } else {
                format!("{}*g{}", c.abs(), k)
            };
            crate::coefficients::write_signed_term(f, &mut first, c.is_negative(), &body)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The truncation isomorphism onto the symmetric subalgebra of the
/// square-zero ring on x_1..x_k: g_j -> e_j (elementary symmetric).
pub fn gamma_to_symmetric(u: &TruncGamma, k: usize) -> SymVec<IntRing> {
    let ring = ext(k);
    let coeffs = (0..=k).map(|j| u.coeff(j)).collect();
    SymVec::new(&ring, coeffs)
}

/// Specializes a compatible K-theory tower at b = 1 (so v = 2) and rewrites
/// each level on the divided-power basis. Augmentation turns the s-basis
/// coefficients into integers; the substitution x_j = L_j - 1 then gives
/// g_m-coordinates sum_j n_j C(2r-m, j-m), and the specialized system map
/// becomes the plain truncation of `Gamma[x]`.
pub fn specialize_tower(tower: &TowerElt) -> Result<Vec<TruncGamma>, Error> {
    if !tower.check() {
        return Err(Error::IncompatibleTower(
            "specialize_tower needs i*-compatible input".into(),
        ));
    }
    let mut out = Vec::with_capacity(tower.r_max() + 1);
    for r in 0..=tower.r_max() {
        let n = 2 * r;
        let s_coords: Vec<BigInt> = tower
            .level(r)
            .coeffs()
            .iter()
            .map(|c| c.restrict().augment())
            .collect();
        let coeffs = (0..=n)
            .map(|m| {
                let mut acc = BigInt::zero();
                for (j, nj) in s_coords.iter().enumerate() {
                    if j >= m {
                        acc += nj * binomial(BigInt::from(n - m), BigInt::from(j - m));
                    }
                }
                acc
            })
            .collect();
        out.push(TruncGamma::new(n, coeffs));
    }
    Ok(out)
}

/// Compatibility of a specialized sequence with the `Gamma[x]` inverse system:
/// each level truncates onto the previous one.
pub fn gamma_tower_compatible(seq: &[TruncGamma]) -> bool {
    seq.windows(2)
        .all(|w| w[1].restrict_to(w[0].cutoff()) == w[0])
}
