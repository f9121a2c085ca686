//! Laurent polynomials with integer coefficients in one or two variables.
//!
//! Variables are positional. The generic matrices of the Burau and
//! Lawrence-Krammer-Bigelow representations use them as `(t, q)`; the
//! symbolic specialisations reuse the same slots under the names `(a, b)`,
//! so specialising `t -> a` is a change of label only.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::Rational;

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 2;

/// Degrees in the shifted variables, then the remaining Laurent exponents.
type Split = ([u32; MAX_VARS], [i32; MAX_VARS]);

/// Exponents of one monomial; slots past the ring's variable count are zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVec(pub [i32; MAX_VARS]);

impl ExponentVec {
    pub fn new(exps: &[i32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        ExponentVec(e)
    }

    fn add(self, other: ExponentVec) -> ExponentVec {
        ExponentVec([self.0[0] + other.0[0], self.0[1] + other.0[1]])
    }

    fn neg(self) -> ExponentVec {
        ExponentVec([-self.0[0], -self.0[1]])
    }

    /// Number of leading slots actually used.
    fn support_len(&self) -> usize {
        if self.0[1] != 0 {
            2
        } else if self.0[0] != 0 {
            1
        } else {
            0
        }
    }
}

/// Exact element of `Z[x^{±1}]` or `Z[x^{±1}, y^{±1}]`.
///
/// Terms are kept sorted by exponent vector with no zero coefficients, so
/// structural equality is ring equality. The declared variable count only
/// affects serialisation and the strict [`poly_arith`] entry point; the
/// operator impls treat `Z[x^{±1}]` as a subring of `Z[x^{±1}, y^{±1}]`.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: Vec<(ExponentVec, BigInt)>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero_in(nvars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars));
        LaurentPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: impl Into<BigInt>, nvars: usize) -> Self {
        Self::monomial(c, &vec![0; nvars])
    }

    /// `coeff * x_0^{e_0} * x_1^{e_1}`; the variable count is `exps.len()`.
    pub fn monomial(coeff: impl Into<BigInt>, exps: &[i32]) -> Self {
        let nvars = exps.len().max(1);
        let coeff = coeff.into();
        let mut p = Self::zero_in(nvars);
        if !coeff.is_zero() {
            p.terms.push((ExponentVec::new(exps), coeff));
        }
        p
    }

    /// The variable with index `idx` in a ring of `nvars` variables.
    pub fn var(idx: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Self::monomial(1, &e)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExponentVec, BigInt)>) -> Self {
        let mut acc: BTreeMap<ExponentVec, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            debug_assert!(e.support_len() <= nvars);
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        let mut p = Self::zero_in(nvars);
        p.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same polynomial with a larger declared variable count.
    pub fn with_nvars(mut self, nvars: usize) -> Self {
        assert!(nvars >= self.terms.iter().map(|(e, _)| e.support_len()).max().unwrap_or(0));
        self.nvars = nvars;
        self
    }

    pub fn terms(&self) -> &[(ExponentVec, BigInt)] {
        &self.terms
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| *e == ExponentVec::default())
    }

    /// Returns the sign and exponents when `self` is `±` a monomial.
    pub fn is_unit(&self) -> Option<(i32, ExponentVec)> {
        match self.terms.as_slice() {
            [(e, c)] if c.abs().is_one() => Some((if c.is_positive() { 1 } else { -1 }, *e)),
            _ => None,
        }
    }

    /// Substitutes rational values for the variables.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() < self.nvars {
            return Err(Error::PointArity {
                expected: self.nvars,
                got: point.len(),
            });
        }
        if let Some(index) = point.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroCoordinate { index });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut v = Rational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e.0.iter()) {
                v *= pow_rational(x, k);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Largest `i <= cap` with `self` in `ideal^i`.
    ///
    /// Each ideal generator `x_k - c` is handled by substituting
    /// `x_k = c + s_k`; the valuation is the minimal total degree in the
    /// shift variables `s_k`. Negative powers of `x_k` are first cleared by a
    /// monomial, which is a unit at any nonzero center.
    pub fn shift_valuation(&self, ideal: &IdealSpec, cap: u32) -> u32 {
        if self.is_zero() {
            return cap;
        }
        if ideal.generators.iter().any(|(_, c)| c.is_zero()) {
            // x_k is a unit in the Laurent ring, so the ideal is everything.
            return cap;
        }
        let mut shift = [0i32; MAX_VARS];
        for &(var, _) in &ideal.generators {
            shift[var] = -self.terms.iter().map(|(e, _)| e.0[var]).min().unwrap_or(0);
        }
        let shift = ExponentVec(shift);

        // (shift-variable degrees, remaining Laurent exponents) -> coefficient
        let mut expanded: BTreeMap<Split, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let e = e.add(shift);
            let mut parts: Vec<(Split, Rational)> =
                vec![(([0; MAX_VARS], e.0), Rational::from_integer(c.clone()))];
            for (var, center) in &ideal.generators {
                let deg = e.0[*var];
                let mut next = Vec::with_capacity(parts.len() * (deg as usize + 1));
                for ((sdeg, rest), coeff) in &parts {
                    for k in 0..=deg {
                        let mut sdeg = *sdeg;
                        let mut rest = *rest;
                        sdeg[*var] = k as u32;
                        rest[*var] = 0;
                        let binom = Rational::from_integer(binomial(BigInt::from(deg), BigInt::from(k)));
                        next.push(((sdeg, rest), coeff * binom * pow_rational(center, deg - k)));
                    }
                }
                parts = next;
            }
            for (key, v) in parts {
                *expanded.entry(key).or_insert_with(Rational::zero) += v;
            }
        }
        expanded
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((sdeg, _), _)| sdeg.iter().sum::<u32>())
            .min()
            .map_or(cap, |v| v.min(cap))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!({ "coeff": c.to_string(), "exp": e.0[..self.nvars].to_vec() }))
                .collect(),
        )
    }

    /// Parses the term-array encoding; an empty array is the zero of `default_nvars` variables.
    pub fn from_json(value: &Value, default_nvars: usize) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial must be an array of terms".into()))?;
        let mut nvars = None;
        let mut terms = Vec::with_capacity(arr.len());
        for term in arr {
            let coeff: BigInt = term
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term without string \"coeff\"".into()))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad coefficient: {e}")))?;
            let exp = term
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term without \"exp\" array".into()))?;
            if exp.is_empty() || exp.len() > MAX_VARS {
                return Err(Error::Parse(format!("exponent vector of length {}", exp.len())));
            }
            match nvars {
                None => nvars = Some(exp.len()),
                Some(n) if n != exp.len() => {
                    return Err(Error::VarCountMismatch {
                        left: n,
                        right: exp.len(),
                    })
                }
                _ => {}
            }
            let exps = exp
                .iter()
                .map(|x| {
                    x.as_i64()
                        .and_then(|v| i32::try_from(v).ok())
                        .ok_or_else(|| Error::Parse(format!("bad exponent {x}")))
                })
                .collect::<Result<Vec<_>>>()?;
            terms.push((ExponentVec::new(&exps), coeff));
        }
        Ok(Self::from_terms(nvars.unwrap_or(default_nvars), terms))
    }

    /// Human-readable form using the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        self.format(names, false)
    }

    pub fn to_latex(&self, names: &[&str]) -> String {
        self.format(names, true)
    }

    fn format(&self, names: &[&str], latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            for (v, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = names.get(v).copied().unwrap_or("x");
                factors.push(match (k, latex) {
                    (1, _) => name.to_string(),
                    (k, true) => format!("{name}^{{{k}}}"),
                    (k, false) => format!("{name}^{k}"),
                });
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    if !latex {
                        out.push('*');
                    }
                }
                out.push_str(&factors.join(if latex { "" } else { "*" }));
            }
        }
        out
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let signed = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push((b[j].0, signed(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        terms.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(a[i..].iter().cloned());
        terms.extend(b[j..].iter().map(|(e, c)| (*e, signed(c))));
        LaurentPoly {
            nvars: self.nvars.max(other.nvars),
            terms,
        }
    }

    fn product(&self, other: &Self) -> Self {
        let nvars = self.nvars.max(other.nvars);
        if self.terms.is_empty() || other.terms.is_empty() {
            return Self::zero_in(nvars);
        }
        let mut acc: BTreeMap<ExponentVec, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let c = c1 * c2;
                match acc.entry(e1.add(*e2)) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                    }
                }
            }
        }
        LaurentPoly {
            nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// `x^k` for a nonzero rational `x` and any integer `k`.
pub fn pow_rational(x: &Rational, k: i32) -> Rational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

/// Strict arithmetic entry point: operands must declare the same variable count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    Neg,
}

pub fn poly_arith(op: PolyOp, p: &LaurentPoly, r: &LaurentPoly) -> Result<LaurentPoly> {
    if p.nvars != r.nvars {
        return Err(Error::VarCountMismatch {
            left: p.nvars,
            right: r.nvars,
        });
    }
    Ok(match op {
        PolyOp::Add => p + r,
        PolyOp::Mul => p.product(r),
        PolyOp::Neg => -p.clone(),
    })
}

/// Ideal `(x_k - c_k, ...)` generated by one or two shifted variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub generators: Vec<(usize, Rational)>,
}

impl IdealSpec {
    /// `(x_var - center)`.
    pub fn principal(var: usize, center: Rational) -> Self {
        IdealSpec {
            generators: vec![(var, center)],
        }
    }

    /// `(x_0 - c0, x_1 - c1)`.
    pub fn pair(c0: Rational, c1: Rational) -> Self {
        IdealSpec {
            generators: vec![(0, c0), (1, c1)],
        }
    }

    pub fn describe(&self, names: &[&str]) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|(v, c)| format!("{} - {}", names.get(*v).copied().unwrap_or("x"), c))
            .collect();
        format!("({})", gens.join(", "))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&["t", "q"]))
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::zero_in(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(1, 1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.product(rhs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self.merge(&rhs, false)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self.merge(&rhs, true)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.product(&rhs)
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        if rhs.terms.is_empty() {
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        if rhs.terms.is_empty() {
            return;
        }
        *self = self.merge(rhs, true);
    }
}

impl Ring for LaurentPoly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }

    fn try_inverse(&self) -> Option<Self> {
        let (sign, e) = self.is_unit()?;
        Some(LaurentPoly {
            nvars: self.nvars,
            terms: vec![(e.neg(), BigInt::from(sign))],
        })
    }

    fn from_i64(v: i64) -> Self {
        Self::constant(v, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> LaurentPoly {
        LaurentPoly::var(0, 1)
    }

    fn q2() -> LaurentPoly {
        LaurentPoly::var(1, 2)
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn unit_pair_multiplies_to_one() {
        let tinv = LaurentPoly::monomial(1, &[-1]);
        assert_eq!(poly_arith(PolyOp::Mul, &t(), &tinv).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn difference_of_squares() {
        let one = LaurentPoly::one();
        let lhs = poly_arith(PolyOp::Mul, &(&t() - &one), &(&t() + &one)).unwrap();
        assert_eq!(lhs, &(&t() * &t()) - &one);
    }

    #[test]
    fn additive_inverse_is_empty() {
        let tq2 = LaurentPoly::monomial(1, &[1, 2]);
        let sum = poly_arith(PolyOp::Add, &tq2, &-tq2.clone()).unwrap();
        assert!(sum.terms().is_empty());
    }

    #[test]
    fn strict_arith_rejects_varcount_mismatch() {
        let err = poly_arith(PolyOp::Add, &t(), &q2()).unwrap_err();
        assert_eq!(err, Error::VarCountMismatch { left: 1, right: 2 });
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!((-t()).evaluate(&[r(-1)]).unwrap(), r(1));
        let tq2 = LaurentPoly::monomial(1, &[1, 2]);
        assert_eq!(tq2.evaluate(&[r(1), r(1)]).unwrap(), r(1));
        // t - a with a renamed onto the same slot and evaluated at 2
        let gen = &t() - &LaurentPoly::constant(2, 1);
        assert_eq!(gen.evaluate(&[r(2)]).unwrap(), r(0));
        assert_eq!(t().evaluate(&[r(0)]), Err(Error::ZeroCoordinate { index: 0 }));
        let inv = LaurentPoly::monomial(3, &[-2]);
        assert_eq!(inv.evaluate(&[r(2)]).unwrap(), Rational::new(3.into(), 4.into()));
    }

    #[test]
    fn unit_detection() {
        assert_eq!((-t()).is_unit(), Some((-1, ExponentVec::new(&[1]))));
        assert_eq!(LaurentPoly::monomial(1, &[1, 2]).is_unit(), Some((1, ExponentVec::new(&[1, 2]))));
        assert_eq!((&t() + &LaurentPoly::one()).is_unit(), None);
        assert_eq!(LaurentPoly::monomial(2, &[1]).is_unit(), None);
        let inv = LaurentPoly::monomial(-1, &[3, -1]).try_inverse().unwrap();
        assert_eq!(inv, LaurentPoly::monomial(-1, &[-3, 1]));
    }

    #[test]
    fn shift_valuation_examples() {
        let one = LaurentPoly::one();
        let am1 = &t() - &one;
        let ideal = IdealSpec::principal(0, r(1));
        assert_eq!((&am1 * &am1).shift_valuation(&ideal, 5), 2);
        assert_eq!((&t() * &t()).shift_valuation(&ideal, 5), 0);
        assert_eq!(LaurentPoly::zero().shift_valuation(&ideal, 5), 5);

        // (a-1)(b-1) + (a-1)^3 in shifts s = a-1, u = b-1 is su + s^3
        let a = LaurentPoly::var(0, 2);
        let b = LaurentPoly::var(1, 2);
        let one2 = LaurentPoly::constant(1, 2);
        let s = &a - &one2;
        let u = &b - &one2;
        let p = &(&s * &u) + &(&(&s * &s) * &s);
        assert_eq!(p.shift_valuation(&IdealSpec::pair(r(1), r(1)), 5), 2);
    }

    #[test]
    fn shift_valuation_handles_negative_powers() {
        // 1 - a^{-1} = a^{-1}(a - 1)
        let p = &LaurentPoly::one() - &LaurentPoly::monomial(1, &[-1]);
        assert_eq!(p.shift_valuation(&IdealSpec::principal(0, r(1)), 8), 1);
        // (1 - a^{-1})^3 at center 1, capped at 2
        let p3 = &(&p * &p) * &p;
        assert_eq!(p3.shift_valuation(&IdealSpec::principal(0, r(1)), 2), 2);
        // a + 1 vanishes at -1 once
        let p = &t() + &LaurentPoly::one();
        assert_eq!(p.shift_valuation(&IdealSpec::principal(0, r(-1)), 8), 1);
    }

    #[test]
    fn json_encoding_is_canonical() {
        let p = &LaurentPoly::monomial(-3, &[1, -2]) + &LaurentPoly::monomial(5, &[0, 1]);
        let v = p.to_json();
        assert_eq!(
            v,
            json!([{"coeff": "5", "exp": [0, 1]}, {"coeff": "-3", "exp": [1, -2]}])
        );
        assert_eq!(LaurentPoly::from_json(&v, 2).unwrap(), p);
    }

    #[test]
    fn display_uses_given_names() {
        let p = &LaurentPoly::monomial(-1, &[1, 2]) + &LaurentPoly::monomial(2, &[-1, 0]);
        assert_eq!(p.display_with(&["a", "b"]), "-a*b^2 + 2*a^-1");
        assert_eq!(p.to_latex(&["a", "b"]), "-ab^{2} + 2a^{-1}");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-3i32..=3, -3i32..=3), -5i64..=5), 0..5).prop_map(|ts| {
            LaurentPoly::from_terms(2, ts.into_iter().map(|((x, y), c)| (ExponentVec::new(&[x, y]), BigInt::from(c))))
        })
    }

    fn arb_point() -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec(
            (prop_oneof![-4i64..=-1, 1i64..=4], 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into())),
            2,
        )
    }

    proptest! {
        #[test]
        fn add_neg_is_zero(p in arb_poly()) {
            prop_assert!((&p + &-p.clone()).terms().is_empty());
        }

        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
            prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) - &q, p);
        }

        #[test]
        fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly(), x in arb_point()) {
            let lhs = (&p * &q).evaluate(&x).unwrap();
            prop_assert_eq!(lhs, p.evaluate(&x).unwrap() * q.evaluate(&x).unwrap());
            let lhs = (&p + &q).evaluate(&x).unwrap();
            prop_assert_eq!(lhs, p.evaluate(&x).unwrap() + q.evaluate(&x).unwrap());
        }

        #[test]
        fn valuation_is_superadditive(p in arb_poly(), q in arb_poly()) {
            let ideal = IdealSpec::pair(Rational::one(), Rational::one());
            let cap = 6;
            let vp = p.shift_valuation(&ideal, cap);
            let vq = q.shift_valuation(&ideal, cap);
            prop_assert!((&p * &q).shift_valuation(&ideal, cap) >= (vp + vq).min(cap));
        }
    }
}
