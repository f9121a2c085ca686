//! Exact ping-pong certificates for pairs of rational matrices.
//!
//! For an invertible `M` whose characteristic polynomial splits over `Q`,
//! `f1` is the product of `(x - r)` over the roots of maximal modulus and
//! `f2 = char_poly / f1`. The attracting space is `A(M) = ker f1(M)` and the
//! repelling space is `A'(M) = ker f2(M)`. A pair `(X, Y)` is certified when
//! all four attracting spaces are points, `A(X^{±1})` misses `A'(Y^{±1})`,
//! and `A(Y^{±1})` misses `A'(X^{±1})`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::linalg::{CharPoly, ExactScalar};
use crate::reps::rho_at;
use crate::{Matrix, Rational, RationalMatrix};

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// Divides by `(x - r)`, assuming `r` is a root.
fn deflate(coeffs: &[Rational], r: &Rational) -> Vec<Rational> {
    let deg = coeffs.len() - 1;
    let mut out = vec![Rational::zero(); deg];
    let mut carry = Rational::zero();
    for i in (1..=deg).rev() {
        carry = &coeffs[i] + &carry * r;
        out[i - 1] = carry.clone();
    }
    out
}

/// Rational roots with multiplicity, in increasing order. Fails unless the
/// polynomial splits completely over `Q`.
pub fn rational_roots(cp: &CharPoly<Rational>) -> Result<Vec<(Rational, usize)>> {
    let mut coeffs = cp.coeffs.clone();
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push((Rational::zero(), zeros));
        coeffs.drain(..zeros);
    }
    if coeffs.len() > 1 {
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let ps = divisors(&ints[0]);
        let qs = divisors(ints.last().expect("nonconstant"));
        let mut candidates: Vec<Rational> = ps
            .iter()
            .flat_map(|p| qs.iter().flat_map(move |q| [Rational::new(p.clone(), q.clone()), Rational::new(-p.clone(), q.clone())]))
            .collect();
        candidates.sort();
        candidates.dedup();
        let eval = |coeffs: &[Rational], x: &Rational| {
            coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
        };
        for r in candidates {
            let mut mult = 0;
            while coeffs.len() > 1 && eval(&coeffs, &r).is_zero() {
                coeffs = deflate(&coeffs, &r);
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
            if coeffs.len() == 1 {
                break;
            }
        }
    }
    if coeffs.len() > 1 {
        return Err(Error::UnsupportedSpectrum(coeffs.len() - 1));
    }
    roots.sort();
    Ok(roots)
}

/// Factorisation of a characteristic polynomial by modulus of its roots.
#[derive(Clone, Debug, PartialEq)]
pub struct DominantSplit {
    pub f1: CharPoly<Rational>,
    pub f2: CharPoly<Rational>,
    pub omega: Vec<(Rational, usize)>,
}

fn poly_from_roots(roots: &[(Rational, usize)]) -> CharPoly<Rational> {
    let flat: Vec<Rational> = roots
        .iter()
        .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
        .collect();
    CharPoly::from_roots(flat.iter())
}

pub fn dominant_split(cp: &CharPoly<Rational>) -> Result<DominantSplit> {
    let roots = rational_roots(cp)?;
    let max = roots.iter().map(|(r, _)| r.abs()).max().unwrap_or_else(Rational::zero);
    let (omega, rest): (Vec<_>, Vec<_>) = roots.into_iter().partition(|(r, _)| r.abs() == max);
    Ok(DominantSplit {
        f1: poly_from_roots(&omega),
        f2: poly_from_roots(&rest),
        omega,
    })
}

/// A linear subspace of `Q^ambient`, read projectively.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveSubspace {
    pub ambient: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl ProjectiveSubspace {
    pub fn new(ambient: usize, basis: Vec<Vec<Rational>>) -> Self {
        ProjectiveSubspace { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_point(&self) -> bool {
        self.basis.len() == 1
    }

    fn rank_with(&self, extra: &[Vec<Rational>]) -> usize {
        let rows: Vec<Vec<Rational>> = self.basis.iter().chain(extra).cloned().collect();
        if rows.is_empty() {
            return 0;
        }
        Matrix::from_rows(rows).expect("equal lengths").rank()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.rank_with(&[v.to_vec()]) == self.dim()
    }

    /// Trivial intersection, tested by rank.
    pub fn meets_trivially(&self, other: &ProjectiveSubspace) -> bool {
        self.rank_with(&other.basis) == self.dim() + other.dim()
    }

    pub fn same_span(&self, other: &ProjectiveSubspace) -> bool {
        let r = self.rank_with(&other.basis);
        r == self.dim() && r == other.dim()
    }

    /// The basis vector scaled so its first nonzero coordinate is 1.
    pub fn normalized_point(&self) -> Option<Vec<Rational>> {
        if !self.is_point() {
            return None;
        }
        let v = &self.basis[0];
        let lead = v.iter().find(|c| !c.is_zero())?.clone();
        Some(v.iter().map(|c| c / &lead).collect())
    }

    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = self
            .basis
            .iter()
            .map(|v| Value::Array(v.iter().map(|c| c.to_json()).collect()))
            .collect();
        json!({ "ambient": self.ambient, "dim": self.dim(), "basis": basis })
    }
}

pub fn attract_repel(m: &RationalMatrix, split: &DominantSplit) -> Result<(ProjectiveSubspace, ProjectiveSubspace)> {
    let a = split.f1.eval_matrix(m)?.kernel_basis();
    let ap = split.f2.eval_matrix(m)?.kernel_basis();
    Ok((ProjectiveSubspace::new(m.rows(), a), ProjectiveSubspace::new(m.rows(), ap)))
}

fn spaces(m: &RationalMatrix) -> Result<(ProjectiveSubspace, ProjectiveSubspace)> {
    let split = dominant_split(&m.char_poly()?)?;
    attract_repel(m, &split)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witnesses {
    pub a_x: ProjectiveSubspace,
    pub a_x_inv: ProjectiveSubspace,
    pub a_y: ProjectiveSubspace,
    pub a_y_inv: ProjectiveSubspace,
    pub ap_x: ProjectiveSubspace,
    pub ap_x_inv: ProjectiveSubspace,
    pub ap_y: ProjectiveSubspace,
    pub ap_y_inv: ProjectiveSubspace,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PingPongReport {
    pub points_ok: bool,
    pub cond2_ok: bool,
    pub cond3_ok: bool,
    pub witnesses: Witnesses,
}

impl PingPongReport {
    pub fn certified(&self) -> bool {
        self.points_ok && self.cond2_ok && self.cond3_ok
    }

    pub fn to_json(&self) -> Value {
        let w = &self.witnesses;
        json!({
            "certified": self.certified(),
            "points_ok": self.points_ok,
            "cond2_ok": self.cond2_ok,
            "cond3_ok": self.cond3_ok,
            "witnesses": {
                "A(X)": w.a_x.to_json(),
                "A(X^-1)": w.a_x_inv.to_json(),
                "A(Y)": w.a_y.to_json(),
                "A(Y^-1)": w.a_y_inv.to_json(),
                "A'(X)": w.ap_x.to_json(),
                "A'(X^-1)": w.ap_x_inv.to_json(),
                "A'(Y)": w.ap_y.to_json(),
                "A'(Y^-1)": w.ap_y_inv.to_json(),
            }
        })
    }
}

pub fn certify(x: &RationalMatrix, y: &RationalMatrix) -> Result<PingPongReport> {
    if x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::ShapeMismatch {
            left_rows: x.rows(),
            left_cols: x.cols(),
            right_rows: y.rows(),
            right_cols: y.cols(),
        });
    }
    let mats = [x.clone(), x.inverse()?, y.clone(), y.inverse()?];
    let mut sp = mats.par_iter().map(spaces).collect::<Result<Vec<_>>>()?.into_iter();
    let mut next = || sp.next().expect("four matrices");
    let ((a_x, ap_x), (a_x_inv, ap_x_inv), (a_y, ap_y), (a_y_inv, ap_y_inv)) = (next(), next(), next(), next());

    let points_ok = [&a_x, &a_x_inv, &a_y, &a_y_inv].iter().all(|s| s.is_point());
    let misses = |ps: [&ProjectiveSubspace; 2], ss: [&ProjectiveSubspace; 2]| {
        ps.iter().all(|p| ss.iter().all(|s| s.meets_trivially(p)))
    };
    let cond2_ok = misses([&a_x, &a_x_inv], [&ap_y, &ap_y_inv]);
    let cond3_ok = misses([&a_y, &a_y_inv], [&ap_x, &ap_x_inv]);
    Ok(PingPongReport {
        points_ok,
        cond2_ok,
        cond3_ok,
        witnesses: Witnesses {
            a_x,
            a_x_inv,
            a_y,
            a_y_inv,
            ap_x,
            ap_x_inv,
            ap_y,
            ap_y_inv,
        },
    })
}

/// Default words for the pair `X = σ_3 σ_1^{-1}`, `Y = σ_2 σ_3 σ_1^{-1} σ_2^{-1}` on four strands.
pub const DEFAULT_WORD_X: &str = "3 -1";
pub const DEFAULT_WORD_Y: &str = "2 3 -1 -2";

/// `(ρ_n(α)(w_x), ρ_n(α)(w_y))`.
pub fn pair_from_words(n: usize, alpha: &Rational, wx: &BraidWord, wy: &BraidWord) -> Result<(RationalMatrix, RationalMatrix)> {
    let rho = rho_at(n, alpha)?;
    Ok((rho.eval_word(wx)?, rho.eval_word(wy)?))
}

/// `(X(α), Y(α))` in `ρ_4(α)`.
pub fn ping_pong_pair(alpha: &Rational) -> Result<(RationalMatrix, RationalMatrix)> {
    let wx = BraidWord::parse(4, DEFAULT_WORD_X)?;
    let wy = BraidWord::parse(4, DEFAULT_WORD_Y)?;
    pair_from_words(4, alpha, &wx, &wy)
}

/// `r + c·sqrt(m)` with `m >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub rational: Rational,
    pub coeff: Rational,
    pub radicand: Rational,
}

impl QuadraticSurd {
    fn sign(a: &Rational, c: &Rational, m: &Rational) -> Ordering {
        let zero = Rational::zero();
        if c.is_zero() || m.is_zero() {
            return a.cmp(&zero);
        }
        match (a.cmp(&zero), c.cmp(&zero)) {
            (Ordering::Less | Ordering::Equal, Ordering::Less) => Ordering::Less,
            (Ordering::Greater | Ordering::Equal, Ordering::Greater) => Ordering::Greater,
            (Ordering::Greater, Ordering::Less) => (a * a).cmp(&(c * c * m)),
            _ => (c * c * m).cmp(&(a * a)),
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, t: &Rational) -> Ordering {
        Self::sign(&(&self.rational - t), &self.coeff, &self.radicand)
    }

    /// Decimal truncation to `digits` places, computed with integer square
    /// roots; exact up to the last digit.
    pub fn approx(&self, digits: u32) -> String {
        let scale = BigInt::from(10).pow(digits + 4);
        let (p, q) = (self.radicand.numer(), self.radicand.denom());
        // sqrt(p/q) = sqrt(p q) / q
        let root = (p * q * &scale * &scale).sqrt();
        let sqrt_m = Rational::new(root, q * &scale);
        decimal(&(&self.rational + &self.coeff * sqrt_m), digits)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*sqrt({})", self.rational, self.coeff, self.radicand)
    }
}

fn decimal(x: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = (x.abs() * Rational::from_integer(scale.clone())).to_integer();
    let (int, frac) = scaled.div_rem(&scale);
    let sign = if x.is_negative() { "-" } else { "" };
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits as usize)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn attracting_vector(m: &RationalMatrix, which: &'static str) -> Result<Vec<Rational>> {
    let (a, _) = spaces(m)?;
    if !a.is_point() {
        return Err(Error::NotAPoint { which, dim: a.dim() });
    }
    let mut v = a.basis.into_iter().next().expect("point");
    if v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        v.iter_mut().for_each(|c| *c = -c.clone());
    }
    Ok(v)
}

/// `‖Y v1 - v2‖²` and `‖Y² v1 - v2‖²`, where `v1`, `v2` span `A(X)`, `A(Y)`,
/// have positive leading coordinate and unit Euclidean length.
pub fn remark_distance(x: &RationalMatrix, y: &RationalMatrix) -> Result<(QuadraticSurd, QuadraticSurd)> {
    let w = attracting_vector(x, "A(X)")?;
    let u = attracting_vector(y, "A(Y)")?;
    let (ww, uu) = (dot(&w, &w), dot(&u, &u));
    let radicand = Rational::one() / (&ww * &uu);
    let distance = |yk: &RationalMatrix| -> Result<QuadraticSurd> {
        let v = yk.mul_vec(&w)?;
        Ok(QuadraticSurd {
            rational: dot(&v, &v) / &ww + Rational::one(),
            coeff: Rational::from_integer(BigInt::from(-2)) * dot(&v, &u),
            radicand: radicand.clone(),
        })
    };
    Ok((distance(y)?, distance(&y.mul(y)?)?))
}
