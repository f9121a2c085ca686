//! Braid group representations.
//!
//! [`burau`] and [`lkb`] are the reduced Burau representation over
//! `Z[t^{±1}]` and the Lawrence-Krammer-Bigelow representation over
//! `Z[t^{±1}, q^{±1}]`. The first graded quotient of the congruence
//! filtration at `t = α` (resp. `(t, q) = (α, β)`) is a copy of `sl_d`, and
//! the induced action of a generator matrix `M` is conjugation by `M(α)`.
//! [`rho_symbolic`]/[`rho_at`] and [`mu_symbolic`]/[`mu_at`] build these
//! adjoint representations, symbolically in `Z[a^{±1}(, b^{±1})]` or at
//! rational points.
//!
//! Matrices act on column vectors; the column of a generator for basis
//! element `b` holds the coordinates of its image.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::ring::{IdealSpec, LaurentPoly};
use crate::scalar::Ring;
use crate::{IntMatrix, LaurentMatrix, Matrix, Rational};

/// Reduced Burau matrix of `σ_r` on `n` strands, `(n-1) x (n-1)`.
///
/// Row `r` is `(.., t, -t, 1, ..)` with `-t` on the diagonal; the entries
/// that would fall outside the matrix for `r = 1` and `r = n-1` are dropped.
pub fn burau_gen(n: usize, r: usize) -> Result<LaurentMatrix> {
    check_generator(n, r)?;
    let d = n - 1;
    let t = LaurentPoly::var(0, 1);
    let mut m = Matrix::identity(d);
    let row = r - 1;
    if row > 0 {
        m[(row, row - 1)] = t.clone();
    }
    m[(row, row)] = -t;
    if row + 1 < d {
        m[(row, row + 1)] = LaurentPoly::one();
    }
    Ok(m)
}

/// Index of `x_ij` (`1 <= i < j <= n`) in the order `x_12, x_13, ..., x_{n-1,n}`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // pairs with first index below i, then offset within row i
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

/// All pairs `(i, j)`, `i < j`, in basis order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j))).collect()
}

/// Lawrence-Krammer-Bigelow matrix of `σ_k` on the basis `x_ij`.
pub fn lkb_gen(n: usize, k: usize) -> Result<LaurentMatrix> {
    check_generator(n, k)?;
    let m = n * (n - 1) / 2;
    let one = LaurentPoly::constant(1, 2);
    let q = LaurentPoly::var(1, 2);
    let q_minus_1 = &q - &one;
    let one_minus_q = &one - &q;
    let tq_pow = |e: usize| LaurentPoly::monomial(1, &[1, e as i32]);
    let kk = pair_index(n, k, k + 1);

    let mut out = Matrix::<LaurentPoly>::zeros(m, m);
    for (i, j) in pairs(n) {
        let col = pair_index(n, i, j);
        let mut put = |a: usize, b: usize, v: LaurentPoly| {
            out[(pair_index(n, a, b), col)] += &v;
        };
        if (i, j) == (k, k + 1) {
            put(k, k + 1, tq_pow(2));
        } else if j == k {
            put(i, k, one_minus_q.clone());
            put(i, k + 1, q.clone());
        } else if j == k + 1 && i < k {
            put(i, k, one.clone());
            put(k, k + 1, &tq_pow(k - i + 1) * &q_minus_1);
        } else if i == k {
            put(k, k + 1, &tq_pow(1) * &q_minus_1);
            put(k + 1, j, q.clone());
        } else if i == k + 1 {
            put(k, j, one.clone());
            put(k + 1, j, one_minus_q.clone());
        } else if i < k && j > k + 1 {
            put(i, j, one.clone());
            put(k, k + 1, &tq_pow(k - i) * &(&q_minus_1 * &q_minus_1));
        } else {
            put(i, j, one.clone());
        }
    }
    debug_assert!(!out[(kk, kk)].is_zero());
    Ok(out)
}

fn check_generator(n: usize, k: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::IndexOutOfRange {
            what: "strand count",
            index: n as i64,
            bound: 2,
        });
    }
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange {
            what: "generator",
            index: k as i64,
            bound: n as i64 - 1,
        });
    }
    Ok(())
}

/// Ordered basis of `sl_d`: every `e_ij` with `i != j` in row-major order,
/// then `e_ii - e_{i+1,i+1}` for `i = 1..d-1`. Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlBasis {
    d: usize,
    labels: Vec<(usize, usize)>,
}

impl SlBasis {
    pub fn new(d: usize) -> Self {
        let mut labels: Vec<(usize, usize)> = (1..=d)
            .flat_map(|i| (1..=d).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        labels.extend((1..d).map(|i| (i, i)));
        SlBasis { d, labels }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == (i, j))
    }

    /// Positions of the diagonal labels `(i, i)`.
    pub fn diagonal_range(&self) -> std::ops::Range<usize> {
        self.d * (self.d - 1)..self.labels.len()
    }

    pub fn element<S: Ring>(&self, idx: usize) -> Matrix<S> {
        let (i, j) = self.labels[idx];
        let mut m = Matrix::zeros(self.d, self.d);
        if i != j {
            m[(i - 1, j - 1)] = S::one();
        } else {
            m[(i - 1, i - 1)] = S::one();
            m[(i, i)] = -S::one();
        }
        m
    }

    /// Coordinates of a traceless matrix.
    pub fn coordinates<S: Ring>(&self, x: &Matrix<S>) -> Result<Vec<S>> {
        let d = self.d;
        if x.rows() != d || x.cols() != d {
            return Err(Error::ShapeMismatch {
                left_rows: x.rows(),
                left_cols: x.cols(),
                right_rows: d,
                right_cols: d,
            });
        }
        let mut out = Vec::with_capacity(self.len());
        for &(i, j) in &self.labels[..d * (d - 1)] {
            out.push(x[(i - 1, j - 1)].clone());
        }
        // e_ii - e_{i+1,i+1} coefficients are partial sums of the diagonal
        let mut partial = S::zero();
        for i in 0..d.saturating_sub(1) {
            partial += &x[(i, i)];
            out.push(partial.clone());
        }
        let mut trace = partial;
        if d > 0 {
            trace += &x[(d - 1, d - 1)];
        }
        if !trace.is_zero() {
            return Err(Error::NotTraceless {
                trace: trace.to_string(),
            });
        }
        Ok(out)
    }
}

/// Matrix of `X -> M X M^{-1}` on `sl_d` in the given basis.
pub fn sl_adjoint<S: Ring>(m: &Matrix<S>, minv: &Matrix<S>, basis: &SlBasis) -> Result<Matrix<S>> {
    let d = basis.d();
    for x in [m, minv] {
        if x.rows() != d || x.cols() != d {
            return Err(Error::ShapeMismatch {
                left_rows: x.rows(),
                left_cols: x.cols(),
                right_rows: d,
                right_cols: d,
            });
        }
    }
    // M e_ij M^{-1} is the outer product of column i of M and row j of M^{-1}
    let outer = |i: usize, j: usize| -> Matrix<S> {
        Matrix::from_fn(d, d, |r, c| m[(r, i)].mul_ref(&minv[(j, c)]))
    };
    let dim = basis.len();
    let mut out = Matrix::zeros(dim, dim);
    for (col, &(i, j)) in basis.labels().iter().enumerate() {
        let image = if i != j {
            outer(i - 1, j - 1)
        } else {
            outer(i - 1, i - 1).sub(&outer(i, i))?
        };
        for (row, v) in basis.coordinates(&image)?.into_iter().enumerate() {
            out[(row, col)] = v;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generator<S> {
    pub matrix: Matrix<S>,
    pub inverse: Matrix<S>,
}

/// Generator table of a representation of `B_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<S> {
    n: usize,
    dim: usize,
    varcount: usize,
    gens: Vec<Generator<S>>,
}

impl<S: Ring> Representation<S> {
    pub fn new(n: usize, varcount: usize, gens: Vec<Generator<S>>) -> Result<Self> {
        if gens.len() + 1 != n {
            return Err(Error::InvalidArgument(format!(
                "{} generators given for {n} strands",
                gens.len()
            )));
        }
        let dim = gens.first().map_or(0, |g| g.matrix.rows());
        for g in &gens {
            for m in [&g.matrix, &g.inverse] {
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::ShapeMismatch {
                        left_rows: m.rows(),
                        left_cols: m.cols(),
                        right_rows: dim,
                        right_cols: dim,
                    });
                }
            }
        }
        Ok(Representation { n, dim, varcount, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn varcount(&self) -> usize {
        self.varcount
    }

    pub fn generators(&self) -> &[Generator<S>] {
        &self.gens
    }

    /// Matrix of `σ_k`, 1-based.
    pub fn generator(&self, k: usize) -> &Matrix<S> {
        &self.gens[k - 1].matrix
    }

    pub fn generators_mut(&mut self) -> &mut [Generator<S>] {
        &mut self.gens
    }

    pub fn eval_word(&self, w: &BraidWord) -> Result<Matrix<S>> {
        if w.n() != self.n {
            return Err(Error::StrandMismatch {
                left: w.n(),
                right: self.n,
            });
        }
        let mut acc = Matrix::identity(self.dim);
        for l in w.letters() {
            let g = &self.gens[l.index - 1];
            acc = acc.mul(if l.inverse { &g.inverse } else { &g.matrix })?;
        }
        Ok(acc)
    }

    /// Exact check of the braid relations and of the stored inverses.
    pub fn verify_relations(&self) -> bool {
        let g = |k: usize| &self.gens[k].matrix;
        let prod = |ms: &[&Matrix<S>]| -> Matrix<S> {
            ms.iter()
                .skip(1)
                .fold(ms[0].clone(), |acc, m| acc.mul(m).expect("square generators"))
        };
        let inverses_ok = self
            .gens
            .iter()
            .all(|gen| gen.matrix.mul(&gen.inverse).map(|p| p.is_identity()).unwrap_or(false));
        if !inverses_ok {
            return false;
        }
        let k = self.gens.len();
        let braid_ok = (0..k.saturating_sub(1))
            .all(|i| prod(&[g(i), g(i + 1), g(i)]) == prod(&[g(i + 1), g(i), g(i + 1)]));
        let far_ok = (0..k).all(|i| ((i + 2)..k).all(|j| prod(&[g(i), g(j)]) == prod(&[g(j), g(i)])));
        braid_ok && far_ok
    }

    /// The representation `σ -> Ad(M(σ))` on `sl_dim`.
    pub fn adjoint(&self) -> Result<Representation<S>> {
        let basis = SlBasis::new(self.dim);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Ok(Generator {
                    matrix: sl_adjoint(&g.matrix, &g.inverse, &basis)?,
                    inverse: sl_adjoint(&g.inverse, &g.matrix, &basis)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.n, self.varcount, gens)
    }
}

impl Representation<LaurentPoly> {
    /// Specialises every generator and inverse at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Representation<Rational>> {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Ok(Generator {
                    matrix: g.matrix.evaluate(point)?,
                    inverse: g.inverse.evaluate(point)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.n, 0, gens)
    }
}

fn from_generators(n: usize, varcount: usize, make: impl Fn(usize) -> Result<LaurentMatrix>) -> Result<Representation<LaurentPoly>> {
    let gens = (1..n)
        .map(|k| {
            let matrix = make(k)?;
            let inverse = matrix.inverse_unit()?;
            Ok(Generator { matrix, inverse })
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(n, varcount, gens)
}

/// Reduced Burau representation `β_n` over `Z[t^{±1}]`.
pub fn burau(n: usize) -> Result<Representation<LaurentPoly>> {
    check_generator(n, 1)?;
    from_generators(n, 1, |k| burau_gen(n, k))
}

/// Lawrence-Krammer-Bigelow representation `κ_n` over `Z[t^{±1}, q^{±1}]`.
pub fn lkb(n: usize) -> Result<Representation<LaurentPoly>> {
    check_generator(n, 1)?;
    from_generators(n, 2, |k| lkb_gen(n, k))
}

fn require_rho_strands(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            what: "strand count",
            index: n as i64,
            bound: 3,
        });
    }
    Ok(())
}

/// `ρ_n(α)` with `α` kept symbolic (the Burau variable read as `a`).
pub fn rho_symbolic(n: usize) -> Result<Representation<LaurentPoly>> {
    require_rho_strands(n)?;
    burau(n)?.adjoint()
}

/// `ρ_n(α)` at a nonzero rational `α`.
pub fn rho_at(n: usize, alpha: &Rational) -> Result<Representation<Rational>> {
    require_rho_strands(n)?;
    burau(n)?.evaluate(std::slice::from_ref(alpha))?.adjoint()
}

/// `μ_n(α, β)` with `(α, β)` symbolic as `(a, b)`.
pub fn mu_symbolic(n: usize) -> Result<Representation<LaurentPoly>> {
    lkb(n)?.adjoint()
}

/// `μ_n(α, β)` at nonzero rationals.
pub fn mu_at(n: usize, alpha: &Rational, beta: &Rational) -> Result<Representation<Rational>> {
    lkb(n)?.evaluate(&[alpha.clone(), beta.clone()])?.adjoint()
}

/// `τ_k`: the action of the transposition `(k k+1)` on the pairs `x_ij`,
/// as a permutation of pair indices.
pub fn tau(n: usize, k: usize) -> Result<Permutation> {
    check_generator(n, k)?;
    let swap = |x: usize| {
        if x == k {
            k + 1
        } else if x == k + 1 {
            k
        } else {
            x
        }
    };
    let images: Vec<usize> = pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let (a, b) = (swap(i), swap(j));
            pair_index(n, a.min(b), a.max(b)) + 1
        })
        .collect();
    Permutation::from_images(&images)
}

/// `μ_n(1,1)(σ_k)` written down from `τ_k`: off-diagonal labels are
/// permuted, and `A_ii` goes to the signed telescoping sum of diagonal
/// labels between `τ_k(i)` and `τ_k(i+1)`.
pub fn mu_one_one(n: usize, k: usize) -> Result<IntMatrix> {
    let tau = tau(n, k)?;
    let m = n * (n - 1) / 2;
    let basis = SlBasis::new(m);
    let dim = basis.len();
    let mut out = Matrix::<BigInt>::zeros(dim, dim);
    let diag_start = basis.diagonal_range().start;
    for (col, &(i, j)) in basis.labels().iter().enumerate() {
        let ti = tau.apply(i - 1) + 1;
        if i != j {
            let tj = tau.apply(j - 1) + 1;
            let row = basis.index_of(ti, tj).expect("off-diagonal label");
            out[(row, col)] = BigInt::one();
        } else {
            let ti1 = tau.apply(i) + 1;
            let (lo, hi, sign) = if ti < ti1 { (ti, ti1, 1) } else { (ti1, ti, -1) };
            for l in lo..hi {
                out[(diag_start + l - 1, col)] = BigInt::from(sign);
            }
        }
    }
    Ok(out)
}

/// Depth of congruence to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub level: u32,
    pub ideal: IdealSpec,
    pub matrix_size: usize,
}

/// Default cap for [`congruence_level`].
pub const DEFAULT_CAP: u32 = 8;

/// Largest `i <= cap` with `M ≡ I` modulo `ideal^i`.
pub fn congruence_level(m: &LaurentMatrix, ideal: &IdealSpec, cap: u32) -> Result<CongruenceReport> {
    let diff = m.minus_identity()?;
    let level = diff
        .entries()
        .iter()
        .map(|e| e.shift_valuation(ideal, cap))
        .min()
        .unwrap_or(cap);
    Ok(CongruenceReport {
        level,
        ideal: ideal.clone(),
        matrix_size: m.rows(),
    })
}

/// `P^{-1} M P`: `M` rewritten in the basis given by the columns of `P`.
pub fn change_basis<S: Ring>(m: &Matrix<S>, p: &Matrix<S>, pinv: &Matrix<S>) -> Result<Matrix<S>> {
    pinv.mul(m)?.mul(p)
}

/// Named bases of the 3-dimensional `ρ_3`, as columns in the standard
/// coordinates `(A_12, A_21, A_11)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rho3Basis {
    Standard,
    /// `(-A_12, A_11, -α A_21)`
    TubaWenzl,
    /// `(A_12, A_21, A_11 - A_12 + A_21)`, used at `α = 1`
    Permutation,
    /// `(-A_12, A_11, A_21)`, used for the mod-2 graded images at `α = -1`
    Graded,
}

impl Rho3Basis {
    /// Base-change matrix with entries built from `alpha`.
    pub fn matrix<S: Ring>(self, alpha: &S) -> Matrix<S> {
        let z = S::zero;
        let o = S::one;
        let rows = match self {
            Rho3Basis::Standard => vec![vec![o(), z(), z()], vec![z(), o(), z()], vec![z(), z(), o()]],
            Rho3Basis::TubaWenzl => vec![vec![-o(), z(), z()], vec![z(), z(), -alpha.clone()], vec![z(), o(), z()]],
            Rho3Basis::Permutation => vec![vec![o(), z(), -o()], vec![z(), o(), o()], vec![z(), z(), o()]],
            Rho3Basis::Graded => vec![vec![-o(), z(), z()], vec![z(), z(), o()], vec![z(), o(), z()]],
        };
        Matrix::from_rows(rows).expect("3x3")
    }

    /// Rewrites a `ρ_3` matrix (standard basis) in this basis.
    pub fn apply<S: Ring>(self, m: &Matrix<S>, alpha: &S) -> Result<Matrix<S>> {
        let p = self.matrix(alpha);
        let pinv = p.inverse_unit()?;
        change_basis(m, &p, &pinv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{full_twist, pure_gen};

    fn t() -> LaurentPoly {
        LaurentPoly::var(0, 1)
    }

    fn lp(c: i64, e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(c, e)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn burau_examples() {
        let one = LaurentPoly::one;
        let zero = LaurentPoly::zero;
        assert_eq!(
            burau_gen(3, 1).unwrap(),
            Matrix::from_rows(vec![vec![-t(), one()], vec![zero(), one()]]).unwrap()
        );
        assert_eq!(
            burau_gen(4, 2).unwrap(),
            Matrix::from_rows(vec![
                vec![one(), zero(), zero()],
                vec![t(), -t(), one()],
                vec![zero(), zero(), one()],
            ])
            .unwrap()
        );
        assert_eq!(
            burau_gen(3, 2).unwrap(),
            Matrix::from_rows(vec![vec![one(), zero()], vec![t(), -t()]]).unwrap()
        );
        assert!(burau_gen(3, 3).is_err());
        assert!(burau_gen(3, 0).is_err());
    }

    #[test]
    fn lkb_examples() {
        assert_eq!(lkb_gen(2, 1).unwrap().entries(), &[lp(1, &[1, 2])]);
        let m = lkb_gen(3, 1).unwrap();
        // order x_12, x_13, x_23; x_13 -> tq(q-1) x_12 + q x_23
        assert_eq!(m[(0, 1)], &lp(1, &[1, 2]) - &lp(1, &[1, 1]));
        assert_eq!(m[(1, 1)], LaurentPoly::zero());
        assert_eq!(m[(2, 1)], lp(1, &[0, 1]));
        // x_23 -> x_13 + (1 - q) x_23
        assert_eq!(m[(1, 2)], lp(1, &[0, 0]));
        assert_eq!(m[(2, 2)], &lp(1, &[0, 0]) - &lp(1, &[0, 1]));
    }

    #[test]
    fn lkb_at_one_is_tau() {
        for n in 2..=5 {
            for k in 1..n {
                let m = lkb_gen(n, k).unwrap().evaluate(&[q(1), q(1)]).unwrap();
                let tau = tau(n, k).unwrap();
                let p = Matrix::from_fn(m.rows(), m.cols(), |r, c| {
                    if tau.apply(c) == r {
                        q(1)
                    } else {
                        q(0)
                    }
                });
                assert_eq!(m, p, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pair_indexing() {
        for n in 2..=7 {
            for (idx, (i, j)) in pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), idx);
            }
        }
    }

    #[test]
    fn generator_determinants_are_units() {
        for n in 2..=5 {
            for k in 1..n {
                assert!(burau_gen(n, k).unwrap().det().unwrap().is_unit().is_some());
                assert!(lkb_gen(n, k).unwrap().det().unwrap().is_unit().is_some());
            }
        }
    }

    #[test]
    fn adjoint_examples() {
        let basis = SlBasis::new(2);
        assert_eq!(basis.labels(), &[(1, 2), (2, 1), (1, 1)]);
        let id = Matrix::<Rational>::identity(2);
        assert!(sl_adjoint(&id, &id, &basis).unwrap().is_identity());
        let half = Rational::new(1.into(), 2.into());
        let m = Matrix::diagonal(vec![q(2), q(1)]);
        let minv = Matrix::diagonal(vec![half.clone(), q(1)]);
        // conjugating each basis element directly
        let expected = Matrix::diagonal(vec![q(2), half, q(1)]);
        assert_eq!(sl_adjoint(&m, &minv, &basis).unwrap(), expected);
    }

    #[test]
    fn adjoint_rejects_non_inverse_pairs() {
        let basis = SlBasis::new(2);
        let m = Matrix::diagonal(vec![q(2), q(1)]);
        let wrong = Matrix::diagonal(vec![q(1), q(1)]);
        // M e_11 - e_22 stays traceless, but e_12 -> 2 e_12 is fine too; a
        // non-inverse pair only breaks tracelessness on the diagonal labels
        assert!(sl_adjoint(&m, &wrong, &basis).is_err());
    }

    #[test]
    fn scalar_matrices_act_trivially() {
        let basis = SlBasis::new(3);
        let c = lp(-1, &[2, -1]);
        let cinv = c.try_inverse().unwrap();
        let m = Matrix::<LaurentPoly>::identity(3).scale(&c);
        let minv = Matrix::<LaurentPoly>::identity(3).scale(&cinv);
        assert!(sl_adjoint(&m, &minv, &basis).unwrap().is_identity());
    }

    #[test]
    fn tuba_wenzl_matrices() {
        let rho = rho_symbolic(3).unwrap();
        let a = t();
        let ainv = lp(1, &[-1]);
        let s1 = Rho3Basis::TubaWenzl.apply(rho.generator(1), &a).unwrap();
        let s2 = Rho3Basis::TubaWenzl.apply(rho.generator(2), &a).unwrap();
        let c = |v: i64| LaurentPoly::constant(v, 1);
        let expected1 = Matrix::from_rows(vec![
            vec![-a.clone(), c(2), c(1)],
            vec![c(0), c(1), c(1)],
            vec![c(0), c(0), -ainv.clone()],
        ])
        .unwrap();
        let expected2 = Matrix::from_rows(vec![
            vec![-ainv, c(0), c(0)],
            vec![c(-1), c(1), c(0)],
            vec![c(1), c(-2), -a],
        ])
        .unwrap();
        assert_eq!(s1, expected1);
        assert_eq!(s2, expected2);
    }

    #[test]
    fn rho3_at_one_in_permutation_basis() {
        let rho = rho_at(3, &q(1)).unwrap();
        let s1 = Rho3Basis::Permutation.apply(rho.generator(1), &q(1)).unwrap();
        let s2 = Rho3Basis::Permutation.apply(rho.generator(2), &q(1)).unwrap();
        let m = |rows: Vec<Vec<i64>>| Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()).unwrap();
        assert_eq!(s1, m(vec![vec![-1, 0, 0], vec![0, 0, -1], vec![0, -1, 0]]));
        assert_eq!(s2, m(vec![vec![0, 0, 1], vec![0, -1, 0], vec![1, 0, 0]]));
    }

    #[test]
    fn rho3_at_minus_one_graded_basis() {
        let rho = rho_at(3, &q(-1)).unwrap();
        let s1 = Rho3Basis::Graded.apply(rho.generator(1), &q(-1)).unwrap();
        let s2 = Rho3Basis::Graded.apply(rho.generator(2), &q(-1)).unwrap();
        let m = |rows: Vec<Vec<i64>>| Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()).unwrap();
        assert_eq!(s1, m(vec![vec![1, 2, 1], vec![0, 1, 1], vec![0, 0, 1]]));
        assert_eq!(s2, m(vec![vec![1, 0, 0], vec![-1, 1, 0], vec![1, -2, 1]]));
    }

    #[test]
    fn rational_mode_rejects_zero() {
        assert_eq!(rho_at(3, &q(0)).unwrap_err(), Error::ZeroCoordinate { index: 0 });
        assert!(mu_at(3, &q(1), &q(0)).is_err());
        assert!(rho_symbolic(2).is_err());
    }

    #[test]
    fn empty_word_is_identity() {
        let rho = rho_symbolic(4).unwrap();
        assert!(rho.eval_word(&BraidWord::identity(4)).unwrap().is_identity());
        assert!(rho.eval_word(&BraidWord::identity(3)).is_err());
    }

    #[test]
    fn relations_hold_symbolically() {
        for n in 2..=5 {
            assert!(burau(n).unwrap().verify_relations(), "burau {n}");
        }
        assert!(rho_symbolic(4).unwrap().verify_relations());
        assert!(mu_symbolic(3).unwrap().verify_relations());
    }

    #[test]
    fn corrupted_generator_fails_relations() {
        let mut rho = rho_symbolic(3).unwrap();
        let g = &mut rho.generators_mut()[0];
        g.matrix[(0, 1)] += &LaurentPoly::one();
        assert!(!rho.verify_relations());

        // consistent inverse but broken braid relation
        let mut rho = rho_at(4, &q(2)).unwrap();
        let g = rho.generators()[0].clone();
        rho.generators_mut()[0] = Generator {
            matrix: g.matrix.mul(&g.matrix).unwrap(),
            inverse: g.inverse.mul(&g.inverse).unwrap(),
        };
        assert!(!rho.verify_relations());
    }

    #[test]
    fn full_twist_is_central_and_trivial() {
        let rho = rho_symbolic(3).unwrap();
        assert!(rho.eval_word(&full_twist(3).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn symbolic_and_numeric_paths_agree() {
        let point = Rational::new(5.into(), 3.into());
        let sym = rho_symbolic(4).unwrap();
        let num = rho_at(4, &point).unwrap();
        for k in 1..4 {
            assert_eq!(sym.generator(k).evaluate(std::slice::from_ref(&point)).unwrap(), *num.generator(k));
        }
        let (a, b) = (q(-2), Rational::new(1.into(), 3.into()));
        let sym = mu_symbolic(3).unwrap();
        let num = mu_at(3, &a, &b).unwrap();
        for k in 1..3 {
            assert_eq!(sym.generator(k).evaluate(&[a.clone(), b.clone()]).unwrap(), *num.generator(k));
        }
    }

    #[test]
    fn mu_one_one_matches_adjoint_for_three_strands() {
        let rep = mu_at(3, &q(1), &q(1)).unwrap();
        for k in 1..3 {
            let oracle = mu_one_one(3, k).unwrap().map(|x| Rational::from_integer(x.clone()));
            assert_eq!(&oracle, rep.generator(k));
        }
        assert!(mu_one_one(3, 3).is_err());
    }

    #[test]
    fn mu_one_one_diagonal_telescopes() {
        // n = 4, k = 2: τ_2 swaps x_12 <-> x_13 and x_24 <-> x_34; pairs
        // 3 = x_14 and 4 = x_23 are fixed and τ(3) < τ(4)
        let m = mu_one_one(4, 2).unwrap();
        let basis = SlBasis::new(6);
        let col = basis.index_of(3, 3).unwrap();
        let diag = basis.diagonal_range();
        let nonzero: Vec<_> = diag.clone().filter(|&r| !m[(r, col)].is_zero()).collect();
        assert_eq!(nonzero, vec![basis.index_of(3, 3).unwrap()]);
        // A_11 -> A_22 - ... : τ(1) = 2, τ(2) = 1 so A_11 -> -A_11
        let col = basis.index_of(1, 1).unwrap();
        assert_eq!(m[(basis.index_of(1, 1).unwrap(), col)], BigInt::from(-1));
        // off-diagonal columns are unit columns
        for c in 0..diag.start {
            let ones = (0..m.rows()).filter(|&r| !m[(r, c)].is_zero()).count();
            assert_eq!(ones, 1);
        }
    }

    #[test]
    fn congruence_examples() {
        let ideal = IdealSpec::principal(0, q(1));
        let rho = rho_symbolic(4).unwrap();
        let sq = rho.eval_word(&pure_gen(1, 2, 4).unwrap()).unwrap();
        assert!(congruence_level(&sq, &ideal, DEFAULT_CAP).unwrap().level >= 1);
        let s1 = rho.generator(1);
        assert_eq!(congruence_level(s1, &ideal, DEFAULT_CAP).unwrap().level, 0);

        let rho3 = rho_symbolic(3).unwrap();
        let comm = BraidWord::commutator(&pure_gen(1, 2, 3).unwrap(), &pure_gen(2, 3, 3).unwrap()).unwrap();
        let m = rho3.eval_word(&comm).unwrap();
        assert!(congruence_level(&m, &ideal, DEFAULT_CAP).unwrap().level >= 2);

        let mu = mu_symbolic(3).unwrap();
        let sq = mu.eval_word(&BraidWord::from_signed(3, &[1, 1]).unwrap()).unwrap();
        let pair = IdealSpec::pair(q(1), q(1));
        assert!(congruence_level(&sq, &pair, DEFAULT_CAP).unwrap().level >= 1);
    }
}
