//! Conjugacy classes and characters of the symmetric group `Σ_n`.
//!
//! Classes are ordered by the number of nontrivial cycles and then by the
//! partition, so for `n = 4` the order is `1+1+1+1, 2+1+1, 3+1, 4, 2+2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::braid::{lift_cycle_type, pure_gen};
use crate::error::{Error, Result};
use crate::reps::{mu_one_one, Representation, SlBasis};
use crate::{IntMatrix, Matrix, Rational};

/// Partitions of `n` as weakly decreasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cycle type of a permutation, as a weakly decreasing partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>, n: usize) -> Result<Self> {
        if parts.contains(&0) || parts.iter().sum::<usize>() != n {
            return Err(Error::InvalidPartition { parts, n });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `i_k`, the number of `k`-cycles.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn fixed_points(&self) -> usize {
        self.multiplicity(1)
    }

    pub fn nontrivial_cycles(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 1).count()
    }

    pub fn sign(&self) -> i64 {
        let odd = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `n! / ∏ k^{i_k} i_k!`
    pub fn class_size(&self) -> BigInt {
        let n = self.n();
        let mut denom = BigInt::one();
        for k in 1..=n {
            let i = self.multiplicity(k);
            denom *= BigInt::from(k).pow(i as u32) * factorial(i);
        }
        factorial(n) / denom
    }

    /// Cycle type of `g²`: odd cycles stay, even `k`-cycles split in two.
    pub fn squared(&self) -> CycleType {
        let mut parts = Vec::new();
        for &p in &self.parts {
            if p % 2 == 0 {
                parts.extend([p / 2, p / 2]);
            } else {
                parts.push(p);
            }
        }
        let n = self.n();
        CycleType::new(parts, n).expect("squaring preserves n")
    }

    /// `"2+2+1"`
    pub fn label(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")
    }

    fn sort_key(&self) -> (usize, &[usize]) {
        (self.nontrivial_cycles(), &self.parts)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// All cycle types of `Σ_n` in class order.
pub fn classes(n: usize) -> Vec<CycleType> {
    let mut out: Vec<CycleType> = partitions(n).into_iter().map(|parts| CycleType { parts }).collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Integer class function on `Σ_n`, one value per class in [`classes`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    n: usize,
    values: Vec<(CycleType, i64)>,
}

impl CharacterVector {
    pub fn from_fn(n: usize, f: impl Fn(&CycleType) -> i64) -> Self {
        let values = classes(n).into_iter().map(|c| {
            let v = f(&c);
            (c, v)
        });
        CharacterVector { n, values: values.collect() }
    }

    /// Values given in class order.
    pub fn from_values(n: usize, values: &[i64]) -> Result<Self> {
        let cls = classes(n);
        if cls.len() != values.len() {
            return Err(Error::InvalidArgument(format!(
                "{} values for {} classes",
                values.len(),
                cls.len()
            )));
        }
        Ok(CharacterVector {
            n,
            values: cls.into_iter().zip(values.iter().copied()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> Vec<i64> {
        self.values.iter().map(|(_, v)| *v).collect()
    }

    pub fn entries(&self) -> &[(CycleType, i64)] {
        &self.values
    }

    pub fn get(&self, c: &CycleType) -> Option<i64> {
        self.values.iter().find(|(k, _)| k == c).map(|(_, v)| *v)
    }

    /// Value at the identity class.
    pub fn degree(&self) -> i64 {
        self.values[0].1
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|(_, v)| *v == 0)
    }

    /// `(1/n!) Σ_C |C| χ(C) ψ(C)`
    pub fn inner_product(&self, other: &CharacterVector) -> Rational {
        let total: BigInt = self
            .values
            .iter()
            .zip(&other.values)
            .map(|((c, a), (_, b))| c.class_size() * (a * b))
            .sum();
        Rational::new(total, factorial(self.n))
    }

    fn sub_scaled(&mut self, other: &CharacterVector, k: i64) {
        for ((_, a), (_, b)) in self.values.iter_mut().zip(&other.values) {
            *a -= k * b;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .values
            .iter()
            .map(|(c, v)| (c.label(), serde_json::Value::from(*v)))
            .collect::<serde_json::Map<_, _>>();
        serde_json::Value::Object(map)
    }
}

/// The irreducible constituents that occur in `ρ_n(1)` and `μ_n(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Irrep {
    Triv,
    Alt,
    V,
    Wedge2V,
    W,
    VAlt,
    WAlt,
}

impl Irrep {
    pub const ALL: [Irrep; 7] = [
        Irrep::Triv,
        Irrep::Alt,
        Irrep::V,
        Irrep::Wedge2V,
        Irrep::W,
        Irrep::VAlt,
        Irrep::WAlt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Irrep::Triv => "triv",
            Irrep::Alt => "alt",
            Irrep::V => "V",
            Irrep::Wedge2V => "wedge2V",
            Irrep::W => "W",
            Irrep::VAlt => "V_alt",
            Irrep::WAlt => "W_alt",
        }
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Irrep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Irrep::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownCharacter(s.to_string()))
    }
}

fn chi_v(c: &CycleType) -> i64 {
    c.fixed_points() as i64 - 1
}

fn chi_w(c: &CycleType) -> i64 {
    let i1 = c.fixed_points() as u64;
    binomial(i1, 2) as i64 + c.multiplicity(2) as i64 - i1 as i64
}

fn chi_wedge2(c: &CycleType) -> i64 {
    let v = chi_v(c);
    (v * v - chi_v(&c.squared())) / 2
}

/// Character of a named irreducible.
pub fn irr_char(irrep: Irrep, n: usize) -> Result<CharacterVector> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            what: "symmetric group degree",
            index: n as i64,
            bound: 3,
        });
    }
    let f: fn(&CycleType) -> i64 = match irrep {
        Irrep::Triv => |_| 1,
        Irrep::Alt => |c| c.sign(),
        Irrep::V => chi_v,
        Irrep::Wedge2V => chi_wedge2,
        Irrep::W => chi_w,
        Irrep::VAlt => |c| c.sign() * chi_v(c),
        Irrep::WAlt => |c| c.sign() * chi_w(c),
    };
    Ok(CharacterVector::from_fn(n, f))
}

/// Characters of `names` with zero and repeated characters removed; the
/// first name giving a character wins.
pub fn distinct_basis(names: &[Irrep], n: usize) -> Result<Vec<(Irrep, CharacterVector)>> {
    let mut out: Vec<(Irrep, CharacterVector)> = Vec::new();
    for &name in names {
        let chi = irr_char(name, n)?;
        if !chi.is_zero() && out.iter().all(|(_, c)| *c != chi) {
            out.push((name, chi));
        }
    }
    Ok(out)
}

/// Preference order used for `ρ_n(1)`.
pub const RHO_ORDER: [Irrep; 7] = [
    Irrep::V,
    Irrep::Wedge2V,
    Irrep::W,
    Irrep::Triv,
    Irrep::Alt,
    Irrep::VAlt,
    Irrep::WAlt,
];

/// Preference order used for `μ_n(1,1)`.
pub const MU_ORDER: [Irrep; 7] = Irrep::ALL;

/// Multiplicities of a decomposition, nonzero terms only, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub terms: Vec<(Irrep, i64)>,
}

impl Decomposition {
    pub fn multiplicity(&self, irrep: Irrep) -> i64 {
        self.terms.iter().find(|(i, _)| *i == irrep).map_or(0, |(_, m)| *m)
    }

    /// Terms sorted by increasing multiplicity (stable).
    pub fn by_multiplicity(&self) -> Vec<(Irrep, i64)> {
        let mut t = self.terms.clone();
        t.sort_by_key(|(_, m)| *m);
        t
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.terms
                .iter()
                .map(|(i, m)| (i.name().to_string(), serde_json::Value::from(*m)))
                .collect(),
        )
    }
}

/// Decomposes `chi` over `basis` by inner products and checks that nothing
/// is left over.
pub fn decompose(chi: &CharacterVector, basis: &[(Irrep, CharacterVector)]) -> Result<Decomposition> {
    let mut residual = chi.clone();
    let mut terms = Vec::new();
    for (name, psi) in basis {
        let m = chi.inner_product(psi);
        if !m.is_integer() {
            return Err(Error::NonIntegerMultiplicity {
                name: name.name().to_string(),
                value: m.to_string(),
            });
        }
        let m = m.to_integer().to_i64().expect("small multiplicity");
        if m != 0 {
            residual.sub_scaled(psi, m);
            terms.push((*name, m));
        }
    }
    if !residual.is_zero() {
        return Err(Error::NonzeroResidual(format!("{:?}", residual.values())));
    }
    Ok(Decomposition { terms })
}

fn integer_trace(m: &Matrix<Rational>) -> Result<i64> {
    let tr = m.trace()?;
    if !tr.is_integer() {
        return Err(Error::NonIntegerTrace(tr.to_string()));
    }
    tr.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonIntegerTrace(tr.to_string()))
}

/// Character of a representation that factors through `Σ_n`, from the
/// traces of class lifts. The class of a transposition is also evaluated on
/// a second lift differing by a pure braid; the two must agree.
pub fn rep_character(rep: &Representation<Rational>) -> Result<CharacterVector> {
    let n = rep.n();
    let cls = classes(n);
    let values = cls
        .par_iter()
        .map(|c| {
            let w = lift_cycle_type(c.parts(), n)?;
            integer_trace(&rep.eval_word(&w)?)
        })
        .collect::<Result<Vec<_>>>()?;

    if let Some(idx) = cls.iter().position(|c| c.nontrivial_cycles() == 1 && c.multiplicity(2) == 1) {
        let c = &cls[idx];
        let w = lift_cycle_type(c.parts(), n)?;
        let other = w.concat(&pure_gen(n - 1, n, n)?)?;
        let second = integer_trace(&rep.eval_word(&other)?)?;
        if second != values[idx] {
            return Err(Error::LiftDisagreement {
                class: c.label(),
                first: values[idx].to_string(),
                second: second.to_string(),
            });
        }
    }
    Ok(CharacterVector {
        n,
        values: cls.into_iter().zip(values).collect(),
    })
}

/// Block of `μ_n(1,1)(σ_k)` on the span of the diagonal labels `A_ii`.
pub fn diag_block(n: usize, k: usize) -> Result<IntMatrix> {
    let full = mu_one_one(n, k)?;
    let range = SlBasis::new(n * (n - 1) / 2).diagonal_range();
    let start = range.start;
    let size = range.len();
    Ok(Matrix::from_fn(size, size, |r, c| full[(start + r, start + c)].clone()))
}

/// Whether the diagonal-label span is invariant under every `μ_n(1,1)(σ_k)`.
pub fn diag_span_invariant(n: usize) -> Result<bool> {
    let range = SlBasis::new(n * (n - 1) / 2).diagonal_range();
    for k in 1..n {
        let full = mu_one_one(n, k)?;
        for c in range.clone() {
            if (0..range.start).any(|r| !full[(r, c)].is_zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Character of `μ_n(1,1)` restricted to the span of the `A_ii`.
pub fn diag_submodule_character(n: usize) -> Result<CharacterVector> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            what: "strand count",
            index: n as i64,
            bound: 3,
        });
    }
    // σ_k acts by an involution at (1,1), so inverse letters reuse the block
    let blocks = (1..n).map(|k| diag_block(n, k)).collect::<Result<Vec<_>>>()?;
    let size = blocks[0].rows();
    let values = classes(n)
        .into_iter()
        .map(|c| {
            let w = lift_cycle_type(c.parts(), n)?;
            let mut acc = IntMatrix::identity(size);
            for l in w.letters() {
                acc = acc.mul(&blocks[l.index - 1])?;
            }
            let tr = acc.trace()?;
            let v = tr.to_i64().filter(|_| tr.abs() < BigInt::from(i64::MAX));
            Ok((c, v.ok_or_else(|| Error::NonIntegerTrace(tr.to_string()))?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterVector { n, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{mu_at, rho_at};
    use proptest::prelude::*;

    fn one() -> Rational {
        Rational::one()
    }

    #[test]
    fn class_order() {
        let labels: Vec<String> = classes(5).iter().map(|c| c.label()).collect();
        assert_eq!(labels, ["1+1+1+1+1", "2+1+1+1", "3+1+1", "4+1", "5", "2+2+1", "3+2"]);
        let labels: Vec<String> = classes(4).iter().map(|c| c.label()).collect();
        assert_eq!(labels, ["1+1+1+1", "2+1+1", "3+1", "4", "2+2"]);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=7 {
            let total: BigInt = classes(n).iter().map(|c| c.class_size()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn irreducibles_are_orthonormal() {
        for n in 5..=7 {
            let chars: Vec<_> = Irrep::ALL.iter().map(|&i| irr_char(i, n).unwrap()).collect();
            for (a, x) in chars.iter().enumerate() {
                for (b, y) in chars.iter().enumerate() {
                    let expected = if a == b { one() } else { Rational::zero() };
                    assert_eq!(x.inner_product(y), expected, "n={n} {a} {b}");
                }
            }
        }
        for n in 3..=4 {
            for (_, x) in distinct_basis(&Irrep::ALL, n).unwrap() {
                assert_eq!(x.inner_product(&x), one());
            }
        }
    }

    #[test]
    fn named_values() {
        let w = irr_char(Irrep::W, 4).unwrap();
        let c22 = CycleType::new(vec![2, 2], 4).unwrap();
        assert_eq!(w.get(&c22), Some(2));
        assert!(irr_char(Irrep::Triv, 5).unwrap().values().iter().all(|&v| v == 1));
        assert_eq!("bogus".parse::<Irrep>().unwrap_err(), Error::UnknownCharacter("bogus".into()));
        for n in 3..=7 {
            let v = irr_char(Irrep::V, n).unwrap();
            let e = irr_char(Irrep::Wedge2V, n).unwrap();
            let w = irr_char(Irrep::W, n).unwrap();
            for (c, x) in v.entries() {
                let i1 = c.fixed_points() as i64;
                assert_eq!(x + e.get(c).unwrap() + w.get(c).unwrap(), i1 * (i1 - 2));
            }
        }
    }

    #[test]
    fn rho_characters() {
        let chi = |n| rep_character(&rho_at(n, &one()).unwrap()).unwrap().values();
        assert_eq!(chi(3), vec![3, -1, 0]);
        assert_eq!(chi(4), vec![8, 0, -1, 0, 0]);
        assert_eq!(chi(5), vec![15, 3, 0, -1, 0, -1, 0]);
    }

    #[test]
    fn mu_characters() {
        let chi = |n| rep_character(&mu_at(n, &one(), &one()).unwrap()).unwrap().values();
        assert_eq!(chi(3), vec![8, 0, -1]);
        assert_eq!(chi(4), vec![35, 3, -1, -1, 3]);
        assert_eq!(chi(5), vec![99, 15, 0, -1, -1, 3, 0]);
    }

    #[test]
    fn mu_character_is_fixed_pairs_squared_minus_one() {
        // μ_n(1,1) is the adjoint of the permutation action on pairs
        for n in 3..=5 {
            let chi = rep_character(&mu_at(n, &one(), &one()).unwrap()).unwrap();
            for (c, v) in chi.entries() {
                let fixed_pairs = binomial(c.fixed_points() as i64, 2) + c.multiplicity(2) as i64;
                assert_eq!(*v, fixed_pairs * fixed_pairs - 1, "n={n} class {c}");
            }
        }
    }

    #[test]
    fn decompositions() {
        let rho4 = rep_character(&rho_at(4, &one()).unwrap()).unwrap();
        let d = decompose(&rho4, &distinct_basis(&RHO_ORDER, 4).unwrap()).unwrap();
        assert_eq!(d.terms, vec![(Irrep::V, 1), (Irrep::Wedge2V, 1), (Irrep::W, 1)]);

        let rho3 = rep_character(&rho_at(3, &one()).unwrap()).unwrap();
        let d = decompose(&rho3, &distinct_basis(&RHO_ORDER, 3).unwrap()).unwrap();
        assert_eq!(d.terms, vec![(Irrep::V, 1), (Irrep::Wedge2V, 1)]);

        let mu4 = rep_character(&mu_at(4, &one(), &one()).unwrap()).unwrap();
        let d = decompose(&mu4, &distinct_basis(&MU_ORDER, 4).unwrap()).unwrap();
        assert_eq!(
            d.by_multiplicity(),
            vec![(Irrep::Alt, 1), (Irrep::Triv, 2), (Irrep::Wedge2V, 3), (Irrep::W, 4), (Irrep::V, 5)]
        );

        let triv = irr_char(Irrep::Triv, 5).unwrap();
        let d = decompose(&triv, &[(Irrep::Triv, triv.clone())]).unwrap();
        assert_eq!(d.terms, vec![(Irrep::Triv, 1)]);
    }

    #[test]
    fn decompose_reports_leftovers() {
        let v = irr_char(Irrep::V, 5).unwrap();
        let triv = irr_char(Irrep::Triv, 5).unwrap();
        assert!(matches!(decompose(&v, &[(Irrep::Triv, triv)]), Err(Error::NonzeroResidual(_))));
        let half = CharacterVector::from_values(3, &[1, 1, 1]).unwrap();
        let alt = irr_char(Irrep::Alt, 3).unwrap();
        let odd = CharacterVector::from_values(3, &[2, 0, 2]).unwrap();
        assert!(decompose(&odd, &[(Irrep::Alt, alt)]).is_err());
        assert!(decompose(&half, &[]).is_err());
    }

    #[test]
    fn diag_submodule() {
        for n in 4..=5 {
            assert!(diag_span_invariant(n).unwrap());
            let chi = diag_submodule_character(n).unwrap();
            assert_eq!(chi.degree() as usize, n * (n - 1) / 2 - 1);
            let d = decompose(&chi, &distinct_basis(&MU_ORDER, n).unwrap()).unwrap();
            assert_eq!(d.terms, vec![(Irrep::V, 1), (Irrep::W, 1)]);
        }
        let chi = diag_submodule_character(5).unwrap();
        let c = CycleType::new(vec![2, 1, 1, 1], 5).unwrap();
        let expected = irr_char(Irrep::V, 5).unwrap().get(&c).unwrap() + irr_char(Irrep::W, 5).unwrap().get(&c).unwrap();
        // (n - 3) + (n - 3)(n - 4)/2 at n = 5
        assert_eq!(chi.get(&c), Some(expected));
        assert_eq!(expected, 3);
    }

    proptest! {
        #[test]
        fn cycle_types_match_lifts(n in 2usize..=7, pick in 0usize..15) {
            let cls = classes(n);
            let c = &cls[pick % cls.len()];
            let perm = lift_cycle_type(c.parts(), n).unwrap().underlying_perm();
            prop_assert_eq!(perm.cycle_type(), c.parts().to_vec());
        }
    }
}
