//! The inverse system linking the symmetric subrings at successive levels.
//!
//! Level r is the quotient ring on n = 2r generators; the restriction map
//! i* sends the last two generators to the two roots of the quadratic rule
//! (b^-1 and b in K-theory, bb and -bb in cohomology) and the rest to the
//! corresponding primed generators. On the s-basis this is a banded
//! (2r-1) x (2r+1) matrix with rows (1, alpha, -beta): in K-theory the band
//! is (1, v, 1), in cohomology (1, 0, -t).
//!
//! The symmetric kernel of i* is free of rank 2. Only the leading terms
//! (s_{2r-1} and -s_{2r}) are intrinsic; the canonical basis here
//! additionally zeroes the cross coefficients so that downstream matrices
//! (N, ch(Q)) are reproducible.

use rand::RngCore;

use crate::coefficients::LaurentElt;
use crate::poly::RatPoly;
use crate::quotient::{
    elementary_symmetric, kg, kt, symmetric_reduce, CoeffRing, CohomVar, LaurentRing, MultiElt,
    QPolyRing, RepGRing, RingDescriptor, SymVec,
};
use crate::series::Rational;
use crate::Error;

/// The matrix of i* on the s-basis at level r: rows indexed by s'_0..s'_{2r-2},
/// columns by s_0..s_{2r}; column j holds the s'-expansion of i*(s_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IStarMatrix<R: CoeffRing> {
    r: usize,
    coeff: R,
    entries: Vec<Vec<R::Elt>>,
}

impl<R: CoeffRing> IStarMatrix<R> {
    pub fn level(&self) -> usize {
        self.r
    }

    pub fn rows(&self) -> usize {
        2 * self.r - 1
    }

    pub fn cols(&self) -> usize {
        2 * self.r + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &R::Elt {
        &self.entries[i][j]
    }

    /// Column j as a coefficient vector on s'_0..s'_{2r-2}.
    pub fn column(&self, j: usize) -> Vec<R::Elt> {
        (0..self.rows())
            .map(|i| self.entries[i][j].clone())
            .collect()
    }

    /// Matrix-vector product: the s'-coefficients of i*(sum c_j s_j).
    pub fn apply(&self, coeffs: &[R::Elt]) -> Vec<R::Elt> {
        assert_eq!(coeffs.len(), self.cols());
        (0..self.rows())
            .map(|i| {
                coeffs
                    .iter()
                    .enumerate()
                    .fold(self.coeff.zero(), |acc, (j, c)| {
                        self.coeff
                            .add(&acc, &self.coeff.mul(&self.entries[i][j], c))
                    })
            })
            .collect()
    }

    /// Entry-wise image under a coefficient map (used to specialize v or t).
    pub fn map_entries<S: CoeffRing>(
        &self,
        coeff: &S,
        f: impl Fn(&R::Elt) -> S::Elt,
    ) -> IStarMatrix<S> {
        IStarMatrix {
            r: self.r,
            coeff: coeff.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Row-major rendering with entries in the coefficient grammar.
    pub fn render(&self) -> String {
        self.entries
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|e| self.coeff.render(e)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The banded i*-matrix of a level-r quotient ring (n = 2r): the two dropped
/// generators are the roots of L^2 - alpha L - beta, so by Vieta the band in
/// each row is (1, alpha, -beta).
pub fn istar_matrix_for<R: CoeffRing>(ring: &RingDescriptor<R>) -> IStarMatrix<R> {
    assert!(
        ring.n >= 2 && ring.n.is_multiple_of(2),
        "level ring needs n = 2r >= 2"
    );
    let r = ring.n / 2;
    let coeff = ring.coeff.clone();
    let band = [coeff.one(), ring.alpha.clone(), coeff.neg(&ring.beta)];
    let entries = (0..2 * r - 1)
        .map(|i| {
            (0..2 * r + 1)
                .map(|j| {
                    if j >= i && j - i <= 2 {
                        band[j - i].clone()
                    } else {
                        coeff.zero()
                    }
                })
                .collect()
        })
        .collect();
    IStarMatrix { r, coeff, entries }
}

/// i* on generators in K_T: L_j -> L'_j for j <= 2r-2, L_{2r-1} -> b^-1,
/// L_{2r} -> b.
pub fn istar_generators_kt(u: &MultiElt<LaurentRing>) -> Result<MultiElt<LaurentRing>, Error> {
    let n = u.ring().n;
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::LevelTooLow);
    }
    let target = kt(n - 2);
    let lo_mask = (1u64 << (n - 2)) - 1;
    let mut out = MultiElt::zero(&target);
    for (mask, c) in u.terms() {
        let mut c = c.clone();
        if mask & (1 << (n - 2)) != 0 {
            c = &c * &LaurentElt::b(-1);
        }
        if mask & (1 << (n - 1)) != 0 {
            c = &c * &LaurentElt::b(1);
        }
        out = out.try_add(&MultiElt::from_terms(&target, [(mask & lo_mask, c)]))?;
    }
    Ok(out)
}

/// i* on generators in H_T: Lb_j -> Lb'_j for j <= 2r-2, Lb_{2r-1} -> -bb,
/// Lb_{2r} -> bb (the Chern classes of b^-1 and b).
pub fn istar_generators_ht(u: &MultiElt<QPolyRing>) -> Result<MultiElt<QPolyRing>, Error> {
    let n = u.ring().n;
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::LevelTooLow);
    }
    let target = crate::quotient::ht(n - 2);
    let bb = RatPoly::variable();
    let lo_mask = (1u64 << (n - 2)) - 1;
    let mut out = MultiElt::zero(&target);
    for (mask, c) in u.terms() {
        let mut c = c.clone();
        if mask & (1 << (n - 2)) != 0 {
            c = &c * &(-&bb);
        }
        if mask & (1 << (n - 1)) != 0 {
            c = &c * &bb;
        }
        out = out.try_add(&MultiElt::from_terms(&target, [(mask & lo_mask, c)]))?;
    }
    Ok(out)
}

/// Converts an even polynomial in bb into a polynomial in t = bb^2.
/// Returns None when an odd-degree coefficient is present.
pub fn bb_poly_to_t(p: &RatPoly) -> Option<RatPoly> {
    let coeffs = p.coeffs();
    let mut out = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if !k.is_multiple_of(2) {
            if !num_traits::Zero::is_zero(c) {
                return None;
            }
        } else {
            out.push(c.clone());
        }
    }
    Some(RatPoly::from_coeffs(out))
}

/// The K-theory i*-matrix over R(G). Level 1 is computed by direct
/// generator substitution (the displayed case split degenerates there);
/// higher levels use the banded closed form.
pub fn istar_matrix_k(r: usize) -> IStarMatrix<RepGRing> {
    assert!(r >= 1);
    if r == 1 {
        return istar_matrix_k_by_substitution(1);
    }
    istar_matrix_for(&kg(2 * r))
}

/// The cohomology i*-matrix over `Q[t]`; same level-1 convention.
pub fn istar_matrix_h(r: usize) -> IStarMatrix<QPolyRing> {
    assert!(r >= 1);
    if r == 1 {
        return istar_matrix_h_by_substitution(1);
    }
    istar_matrix_for(&crate::quotient::hg(2 * r))
}

fn matrix_from_columns<R: CoeffRing>(
    r: usize,
    coeff: R,
    columns: Vec<Vec<R::Elt>>,
) -> IStarMatrix<R> {
    let entries = (0..2 * r - 1)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect();
    IStarMatrix { r, coeff, entries }
}

/// Column-by-column construction of the K-matrix by generator substitution
/// in K_T followed by symmetric reduction and descent to R(G).
pub fn istar_matrix_k_by_substitution(r: usize) -> IStarMatrix<RepGRing> {
    assert!(r >= 1);
    let ring = kt(2 * r);
    let columns = (0..=2 * r)
        .map(|j| {
            let sj = elementary_symmetric(&ring, j).expect("j in range");
            let image = istar_generators_kt(&sj).expect("r >= 1");
            let reduced = symmetric_reduce(&image).expect("i* preserves symmetry");
            reduced
                .coeffs()
                .iter()
                .map(|c| {
                    c.invariants_to_g()
                        .expect("matrix entries are Weyl-invariant")
                })
                .collect()
        })
        .collect();
    matrix_from_columns(r, RepGRing, columns)
}

/// Column-by-column construction of the H-matrix by substitution in H_T.
pub fn istar_matrix_h_by_substitution(r: usize) -> IStarMatrix<QPolyRing> {
    assert!(r >= 1);
    let ring = crate::quotient::ht(2 * r);
    let columns = (0..=2 * r)
        .map(|j| {
            let sj = elementary_symmetric(&ring, j).expect("j in range");
            let image = istar_generators_ht(&sj).expect("r >= 1");
            let reduced = symmetric_reduce(&image).expect("i* preserves symmetry");
            reduced
                .coeffs()
                .iter()
                .map(|c| bb_poly_to_t(c).expect("matrix entries are even in bb"))
                .collect()
        })
        .collect();
    matrix_from_columns(
        r,
        QPolyRing {
            var: CohomVar::TBar,
        },
        columns,
    )
}

/// The canonical rank-2 kernel basis of i* at level r.
///
/// k1 = s_{2r-1} + lower-order terms (coefficient of s_{2r} is 0) and
/// k2 = -s_{2r} + lower-order terms (coefficient of s_{2r-1} is 0); the rest
/// is forced by back-substitution down the unitriangular band.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis<R: CoeffRing> {
    pub r: usize,
    pub k1: SymVec<R>,
    pub k2: SymVec<R>,
}

/// Solves the banded system for the two canonical kernel vectors of the
/// level ring (n = 2r). Row i reads c_i + alpha c_{i+1} - beta c_{i+2} = 0,
/// so c_i = -alpha c_{i+1} + beta c_{i+2}.
pub fn kernel_basis_for<R: CoeffRing>(ring: &RingDescriptor<R>) -> KernelBasis<R> {
    assert!(
        ring.n >= 2 && ring.n.is_multiple_of(2),
        "level ring needs n = 2r >= 2"
    );
    let r = ring.n / 2;
    let coeff = ring.coeff.clone();
    let solve = |top1: R::Elt, top2: R::Elt| -> SymVec<R> {
        let mut c = vec![coeff.zero(); 2 * r + 1];
        c[2 * r - 1] = top1;
        c[2 * r] = top2;
        for i in (0..=2 * r - 2).rev() {
            let a = coeff.neg(&coeff.mul(&ring.alpha, &c[i + 1]));
            let b = coeff.mul(&ring.beta, &c[i + 2]);
            c[i] = coeff.add(&a, &b);
        }
        SymVec::new(ring, c)
    };
    let k1 = solve(coeff.one(), coeff.zero());
    let k2 = solve(coeff.zero(), coeff.neg(&coeff.one()));
    // Defining property, checked by multiplication against the band.
    let matrix = istar_matrix_for(ring);
    for k in [&k1, &k2] {
        assert!(
            matrix.apply(k.coeffs()).iter().all(|e| coeff.is_zero(e)),
            "back-substitution left the kernel"
        );
    }
    KernelBasis { r, k1, k2 }
}

pub fn kernel_basis_k(r: usize) -> KernelBasis<RepGRing> {
    assert!(r >= 1);
    kernel_basis_for(&kg(2 * r))
}

pub fn kernel_basis_h(r: usize) -> KernelBasis<QPolyRing> {
    assert!(r >= 1);
    kernel_basis_for(&crate::quotient::hg(2 * r))
}

/// A canonical right inverse of i*: forward substitution on the
/// unitriangular band. The lift of s'_0 is s_0; the lift of s'_j is
/// s_j - alpha lift(s'_{j-1}) + beta lift(s'_{j-2}).
pub fn section_lift_for<R: CoeffRing>(level_ring: &RingDescriptor<R>, u: &SymVec<R>) -> SymVec<R> {
    assert!(level_ring.n >= 2 && level_ring.n.is_multiple_of(2));
    let r = level_ring.n / 2;
    assert_eq!(u.ring().n, 2 * r - 2, "input must live one level down");
    let mut lifts: Vec<SymVec<R>> = Vec::with_capacity(2 * r - 1);
    for j in 0..=2 * r - 2 {
        let mut lift = SymVec::basis(level_ring, j);
        if j >= 1 {
            lift = lift.sub(&lifts[j - 1].scale(&level_ring.alpha));
        }
        if j >= 2 {
            lift = lift.add(&lifts[j - 2].scale(&level_ring.beta));
        }
        lifts.push(lift);
    }
    let mut out = SymVec::zero(level_ring);
    for (j, c) in u.coeffs().iter().enumerate() {
        out = out.add(&lifts[j].scale(c));
    }
    out
}

/// Section lift in the K-theory tower over R(G).
pub fn section_lift_k(r: usize, u: &SymVec<RepGRing>) -> SymVec<RepGRing> {
    assert!(r >= 1);
    section_lift_for(&kg(2 * r), u)
}

/// A truncated element of the inverse limit: one SymVec per level 0..=r_max
/// over R(G), compatible under i*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerElt {
    levels: Vec<SymVec<RepGRing>>,
}

impl TowerElt {
    /// Wraps explicit level data after validating the shape (compatibility
    /// is checked separately by [`TowerElt::check`]).
    pub fn new(levels: Vec<SymVec<RepGRing>>) -> Result<Self, Error> {
        if levels.is_empty() {
            return Err(Error::IncompatibleTower("a tower needs level 0".into()));
        }
        for (r, level) in levels.iter().enumerate() {
            if level.ring() != &kg(2 * r) {
                return Err(Error::IncompatibleTower(format!(
                    "level {r} must live in the K_G ring on {} generators",
                    2 * r
                )));
            }
        }
        Ok(TowerElt { levels })
    }

    pub fn r_max(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, r: usize) -> &SymVec<RepGRing> {
        &self.levels[r]
    }

    pub fn levels(&self) -> &[SymVec<RepGRing>] {
        &self.levels
    }

    /// The multiplicative unit: sigma_r = s_0 at every level.
    pub fn unit(r_max: usize) -> Self {
        TowerElt {
            levels: (0..=r_max).map(|r| SymVec::unit(&kg(2 * r))).collect(),
        }
    }

    pub fn zero(r_max: usize) -> Self {
        TowerElt {
            levels: (0..=r_max).map(|r| SymVec::zero(&kg(2 * r))).collect(),
        }
    }

    /// Builds a compatible tower from its top level by pushing down with i*.
    pub fn from_top(top: SymVec<RepGRing>) -> Self {
        let r_max = top.ring().n / 2;
        let mut levels = vec![top];
        for r in (1..=r_max).rev() {
            let matrix = istar_matrix_k(r);
            let image = matrix.apply(levels.last().unwrap().coeffs());
            levels.push(SymVec::new(&kg(2 * r - 2), image));
        }
        levels.reverse();
        TowerElt { levels }
    }

    /// The compatibility condition i*(sigma_r) = sigma_{r-1} at every level.
    pub fn check(&self) -> bool {
        (1..=self.r_max()).all(|r| {
            let matrix = istar_matrix_k(r);
            let image = matrix.apply(self.levels[r].coeffs());
            image == self.levels[r - 1].coeffs()
        })
    }

    /// A pseudorandom compatible tower (random top level pushed down).
    pub fn sample(r_max: usize, rng: &mut dyn RngCore) -> Self {
        let ring = kg(2 * r_max);
        let coeffs = (0..=2 * r_max).map(|_| ring.coeff.sample(rng)).collect();
        Self::from_top(SymVec::new(&ring, coeffs))
    }
}

/// Structure constants of the s-basis at each level: `table[r][i][j]` is the
/// s-expansion of s_i s_j. Computing these once makes repeated tower
/// products a matter of vector arithmetic.
pub struct SBasisTables {
    per_level: Vec<Vec<Vec<SymVec<RepGRing>>>>,
}

impl SBasisTables {
    pub fn new(r_max: usize) -> Self {
        let per_level = (0..=r_max)
            .map(|r| {
                let ring = kg(2 * r);
                let basis: Vec<MultiElt<RepGRing>> = (0..=2 * r)
                    .map(|j| elementary_symmetric(&ring, j).expect("j in range"))
                    .collect();
                (0..=2 * r)
                    .map(|i| {
                        (0..=2 * r)
                            .map(|j| {
                                let prod = basis[i].try_mul(&basis[j]).expect("same ring");
                                symmetric_reduce(&prod).expect("product of symmetric elements")
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SBasisTables { per_level }
    }

    fn product(&self, r: usize, a: &SymVec<RepGRing>, b: &SymVec<RepGRing>) -> SymVec<RepGRing> {
        let ring = kg(2 * r);
        let mut out = SymVec::zero(&ring);
        for (i, ai) in a.coeffs().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs().iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                out = out.add(&self.per_level[r][i][j].scale(&(ai * bj)));
            }
        }
        out
    }
}

/// Levelwise product of two compatible towers. i* is a ring map, so the
/// result is again compatible; this is re-verified and a failure is an
/// error rather than a silent wrong answer.
pub fn tower_mul(a: &TowerElt, b: &TowerElt) -> Result<TowerElt, Error> {
    let tables = SBasisTables::new(a.r_max().min(b.r_max()));
    tower_mul_with(&tables, a, b)
}

/// As [`tower_mul`], reusing precomputed structure constants.
pub fn tower_mul_with(
    tables: &SBasisTables,
    a: &TowerElt,
    b: &TowerElt,
) -> Result<TowerElt, Error> {
    if a.r_max() != b.r_max() {
        return Err(Error::IncompatibleTower(format!(
            "r_max {} vs {}",
            a.r_max(),
            b.r_max()
        )));
    }
    if !a.check() || !b.check() {
        return Err(Error::IncompatibleTower(
            "input tower violates i* compatibility".into(),
        ));
    }
    let levels = (0..=a.r_max())
        .map(|r| tables.product(r, a.level(r), b.level(r)))
        .collect();
    let out = TowerElt { levels };
    if !out.check() {
        return Err(Error::IncompatibleTower(
            "product tower violates i* compatibility".into(),
        ));
    }
    Ok(out)
}

/// Cohomological degree of a homogeneous H-kernel vector with the grading
/// deg s_j = 2j, deg t = 4. Returns None when some nonzero coefficient is
/// not a t-monomial or the degrees disagree.
pub fn h_homogeneous_degree(v: &SymVec<QPolyRing>) -> Option<usize> {
    let mut degree = None;
    for (j, c) in v.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (k, _): (usize, Rational) = c.as_monomial()?;
        let d = 4 * k + 2 * j;
        match degree {
            None => degree = Some(d),
            Some(existing) if existing == d => {}
            Some(_) => return None,
        }
    }
    degree
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RepGElt;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn repg(coeffs: &[i64]) -> RepGElt {
        RepGElt::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn repg_vec(ring: &RingDescriptor<RepGRing>, rows: &[&[i64]]) -> SymVec<RepGRing> {
        SymVec::new(ring, rows.iter().map(|r| repg(r)).collect())
    }

    #[test]
    fn istar_generator_examples() {
        // L_{2r-1} L_{2r} -> b^-1 b = 1 (r = 2)
        let ring = kt(4);
        let l3 = MultiElt::generator(&ring, 3).unwrap();
        let l4 = MultiElt::generator(&ring, 4).unwrap();
        let img = istar_generators_kt(&(&l3 * &l4)).unwrap();
        assert_eq!(img, MultiElt::one(&kt(2)));
        // L_1 -> L'_1
        let l1 = MultiElt::generator(&ring, 1).unwrap();
        assert_eq!(
            istar_generators_kt(&l1).unwrap(),
            MultiElt::generator(&kt(2), 1).unwrap()
        );
        // r = 1: s_1 -> b^-1 + b
        let ring1 = kt(2);
        let s1 = elementary_symmetric(&ring1, 1).unwrap();
        assert_eq!(
            istar_generators_kt(&s1).unwrap(),
            MultiElt::constant(&kt(0), LaurentElt::v_restricted())
        );
        // r = 0 is too low
        let ring0 = kt(0);
        assert_eq!(
            istar_generators_kt(&MultiElt::one(&ring0)),
            Err(Error::LevelTooLow)
        );
    }

    #[test]
    fn istar_matrix_k_r2_columns() {
        let m = istar_matrix_k(2);
        // i*(s_0) = s'_0, i*(s_1) = s'_1 + v s'_0, i*(s_2) = s'_2 + v s'_1 + s'_0,
        // i*(s_3) = v s'_2 + s'_1, i*(s_4) = s'_2.
        let v = repg(&[0, 1]);
        let one = repg(&[1]);
        let zero = repg(&[]);
        assert_eq!(m.column(0), vec![one.clone(), zero.clone(), zero.clone()]);
        assert_eq!(m.column(1), vec![v.clone(), one.clone(), zero.clone()]);
        assert_eq!(m.column(2), vec![one.clone(), v.clone(), one.clone()]);
        assert_eq!(m.column(3), vec![zero.clone(), one.clone(), v.clone()]);
        assert_eq!(m.column(4), vec![zero.clone(), zero.clone(), one.clone()]);
    }

    #[test]
    fn istar_matrix_k_r1_row() {
        let m = istar_matrix_k(1);
        assert_eq!(m.rows(), 1);
        assert_eq!(m.entry(0, 0), &repg(&[1]));
        assert_eq!(m.entry(0, 1), &repg(&[0, 1]));
        assert_eq!(m.entry(0, 2), &repg(&[1]));
    }

    #[test]
    fn istar_matrix_h_r2() {
        let m = istar_matrix_h(2);
        let t = RatPoly::variable();
        // i*(sb_4) = -t sb'_2
        assert_eq!(m.column(4), vec![RatPoly::zero(), RatPoly::zero(), -&t]);
        // i*(sb_2) = sb'_2 - t sb'_0
        assert_eq!(m.column(2), vec![-&t, RatPoly::zero(), RatPoly::one()]);
    }

    #[test]
    fn matrix_matches_substitution() {
        for r in 1..=3 {
            assert_eq!(
                istar_matrix_k(r),
                istar_matrix_k_by_substitution(r),
                "K, r = {r}"
            );
            assert_eq!(
                istar_matrix_h(r),
                istar_matrix_h_by_substitution(r),
                "H, r = {r}"
            );
        }
    }

    #[test]
    fn kernel_r1_examples() {
        let kb = kernel_basis_k(1);
        let ring = kg(2);
        // K1 = s_1 - v s_0, K2 = -s_2 + s_0
        assert_eq!(kb.k1, repg_vec(&ring, &[&[0, -1], &[1], &[]]));
        assert_eq!(kb.k2, repg_vec(&ring, &[&[1], &[], &[-1]]));

        let kb = kernel_basis_h(1);
        let t = RatPoly::variable();
        assert_eq!(
            kb.k1.coeffs(),
            &[RatPoly::zero(), RatPoly::one(), RatPoly::zero()]
        );
        assert_eq!(kb.k2.coeffs(), &[-&t, RatPoly::zero(), -&RatPoly::one()]);
    }

    #[test]
    fn kernel_is_killed_by_istar() {
        for r in 1..=4 {
            let m = istar_matrix_k(r);
            let kb = kernel_basis_k(r);
            assert!(m.apply(kb.k1.coeffs()).iter().all(RepGElt::is_zero));
            assert!(m.apply(kb.k2.coeffs()).iter().all(RepGElt::is_zero));
            let m = istar_matrix_h(r);
            let kb = kernel_basis_h(r);
            assert!(m.apply(kb.k1.coeffs()).iter().all(RatPoly::is_zero));
            assert!(m.apply(kb.k2.coeffs()).iter().all(RatPoly::is_zero));
        }
    }

    #[test]
    fn kernel_normalization() {
        for r in 1..=4 {
            let kb = kernel_basis_k(r);
            assert_eq!(kb.k1.coeff(2 * r - 1), &repg(&[1]));
            assert_eq!(kb.k1.coeff(2 * r), &repg(&[]));
            assert_eq!(kb.k2.coeff(2 * r), &repg(&[-1]));
            assert_eq!(kb.k2.coeff(2 * r - 1), &repg(&[]));
        }
    }

    #[test]
    fn h_kernel_homogeneity() {
        for r in 1..=4 {
            let kb = kernel_basis_h(r);
            assert_eq!(h_homogeneous_degree(&kb.k1), Some(2 * (2 * r - 1)));
            assert_eq!(h_homogeneous_degree(&kb.k2), Some(4 * r));
        }
    }

    #[test]
    fn section_examples() {
        // lift(s'_0) = s_0
        let ring1 = kg(2);
        let u = SymVec::unit(&kg(0));
        assert_eq!(section_lift_k(1, &u), repg_vec(&ring1, &[&[1], &[], &[]]));
        // lift(s'_1) = s_1 - v s_0 (r = 2)
        let ring2 = kg(4);
        let u = SymVec::basis(&kg(2), 1);
        assert_eq!(
            section_lift_k(2, &u),
            repg_vec(&ring2, &[&[0, -1], &[1], &[], &[], &[]])
        );
    }

    #[test]
    fn section_is_right_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for r in 1..=5 {
            let low = kg(2 * r - 2);
            let m = istar_matrix_k(r);
            for _ in 0..20 {
                let coeffs = (0..=2 * r - 2)
                    .map(|_| low.coeff.sample(&mut rng))
                    .collect();
                let u = SymVec::new(&low, coeffs);
                let lifted = section_lift_k(r, &u);
                assert_eq!(m.apply(lifted.coeffs()), u.coeffs());
            }
        }
    }

    #[test]
    fn tower_check_examples() {
        assert!(TowerElt::unit(4).check());
        assert!(TowerElt::zero(4).check());
        // sigma_r = s_1 at every level fails: i*(s_1) = s'_1 + v s'_0 != s'_1
        let levels = (0..=2)
            .map(|r| {
                if r == 0 {
                    SymVec::zero(&kg(0))
                } else {
                    SymVec::basis(&kg(2 * r), 1)
                }
            })
            .collect();
        let t = TowerElt::new(levels).unwrap();
        assert!(!t.check());
    }

    #[test]
    fn tower_mul_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let t = TowerElt::sample(3, &mut rng);
        let unit = TowerElt::unit(3);
        assert_eq!(tower_mul(&unit, &t).unwrap(), t);
        let zero = TowerElt::zero(3);
        assert_eq!(tower_mul(&zero, &t).unwrap(), zero);

        // the section-lift chain of s'_1, squared at level 1:
        // (s_1 - v s_0)^2 = (v^2 - 2) s_0 - v s_1 + 2 s_2
        let k1 = kernel_basis_k(1).k1; // = s_1 - v s_0
        let chain = TowerElt::from_top(k1);
        let sq = tower_mul(&chain, &chain).unwrap();
        assert_eq!(
            sq.level(1),
            &repg_vec(&kg(2), &[&[-2, 0, 1], &[0, -1], &[2]])
        );
    }

    #[test]
    fn tower_mul_rejects_mismatched() {
        let a = TowerElt::unit(2);
        let b = TowerElt::unit(3);
        assert!(matches!(
            tower_mul(&a, &b),
            Err(Error::IncompatibleTower(_))
        ));
        // incompatible levels
        let mut levels: Vec<SymVec<RepGRing>> = TowerElt::unit(2).levels().to_vec();
        levels[2] = SymVec::basis(&kg(4), 1);
        let bad = TowerElt::new(levels).unwrap();
        assert!(!bad.check());
        assert!(matches!(
            tower_mul(&bad, &TowerElt::unit(2)),
            Err(Error::IncompatibleTower(_))
        ));
    }

    #[test]
    fn tower_mul_preserves_compatibility() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let tables = SBasisTables::new(3);
        for _ in 0..10 {
            let a = TowerElt::sample(3, &mut rng);
            let b = TowerElt::sample(3, &mut rng);
            let prod = tower_mul_with(&tables, &a, &b).unwrap();
            assert!(prod.check());
        }
    }

    #[test]
    fn random_kernel_elements_decompose_in_basis() {
        // Project random symmetric vectors onto the kernel with the section,
        // then solve against the canonical basis using the leading terms.
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for r in 1..=3 {
            let ring = kg(2 * r);
            let m = istar_matrix_k(r);
            let kb = kernel_basis_k(r);
            for _ in 0..20 {
                let coeffs = (0..=2 * r).map(|_| ring.coeff.sample(&mut rng)).collect();
                let u = SymVec::new(&ring, coeffs);
                let down = SymVec::new(&kg(2 * r - 2), m.apply(u.coeffs()));
                let w = u.sub(&section_lift_k(r, &down));
                assert!(m.apply(w.coeffs()).iter().all(RepGElt::is_zero));
                let a = w.coeff(2 * r - 1).clone();
                let b = -w.coeff(2 * r);
                let recomposed = kb.k1.scale(&a).add(&kb.k2.scale(&b));
                assert_eq!(w, recomposed);
            }
        }
    }
}
