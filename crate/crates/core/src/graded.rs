//! Mod-`2^i` congruence levels of `ρ_n(-1)` and the graded pieces
//! `Γ^i / Γ^{i+1} ≅ sl_N(F_2)`.
//!
//! The pure braid group has lower-central-series quotients of rank
//! `φ_i(n)` ([`kohno_ranks`]); since `sl_N(F_2)` is finite, the graded map
//! cannot be injective once `φ_i(n)` exceeds `N² - 1`. [`kernel_search`]
//! enumerates iterated commutators of pure generators looking for elements
//! whose graded image vanishes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::braid::{pure_gens, BraidWord};
use crate::error::{Error, Result};
use crate::reps::{burau, rho_at, DEFAULT_CAP};
use crate::{Gf2, Gf2Matrix, IntMatrix, Matrix, Rational, RationalMatrix};

fn two_adic_valuation(x: &BigInt, cap: u32) -> u32 {
    if x.is_zero() {
        return cap;
    }
    let tz = x.trailing_zeros().unwrap_or(0);
    tz.min(cap as u64) as u32
}

/// Largest `i <= cap` with `M ≡ I (mod 2^i)`.
pub fn two_adic_level(m: &IntMatrix, cap: u32) -> Result<u32> {
    let diff = m.minus_identity()?;
    Ok(diff.entries().iter().map(|e| two_adic_valuation(e, cap)).min().unwrap_or(cap))
}

/// Rational matrix with integer entries, as an integer matrix.
pub fn to_int_matrix(m: &RationalMatrix) -> Result<IntMatrix> {
    m.try_map(|x| {
        if x.is_integer() {
            Ok(x.to_integer())
        } else {
            Err(Error::NotInteger(x.to_string()))
        }
    })
}

/// Image of a matrix in `Γ^i / Γ^{i+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedImage {
    pub level: u32,
    pub matrix: Gf2Matrix,
}

impl GradedImage {
    pub fn is_zero(&self) -> bool {
        self.matrix.entries().iter().all(|x| x.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<u8> = self.matrix.entries().iter().map(|x| x.0 as u8).collect();
        json!({
            "level": self.level,
            "rows": self.matrix.rows(),
            "cols": self.matrix.cols(),
            "entries": entries,
        })
    }
}

/// `((M - I) / 2^i) mod 2`.
pub fn gr_image(m: &IntMatrix, i: u32) -> Result<GradedImage> {
    let level = two_adic_level(m, i)?;
    if level < i {
        return Err(Error::LevelTooLow { level, wanted: i });
    }
    let scale = BigInt::one() << i;
    let diff = m.minus_identity()?;
    let matrix = diff.map(|x| Gf2((x / &scale).is_odd()));
    let trace = matrix.trace()?;
    if !trace.is_zero() {
        return Err(Error::NotTraceless { trace: trace.to_string() });
    }
    Ok(GradedImage { level: i, matrix })
}

/// Ranks `φ_1(n), ..., φ_depth(n)` of the lower-central-series quotients of
/// `P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KohnoRanks {
    pub n: usize,
    pub ranks: Vec<BigInt>,
}

impl KohnoRanks {
    /// `φ_i`, 1-based.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.ranks[i - 1]
    }

    /// First `i` with `φ_i > bound`.
    pub fn first_exceeding(&self, bound: &BigInt) -> Option<usize> {
        self.ranks.iter().position(|r| r > bound).map(|p| p + 1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "ranks": self.ranks.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Solves `∏_i (1 - t^i)^{φ_i} = ∏_{j<n} (1 - j t)` degree by degree.
///
/// Taking `-t d/dt log` of both sides and matching the coefficient of
/// `t^m` gives `Σ_{i | m} i φ_i = Σ_{j=1}^{n-1} j^m`.
pub fn kohno_ranks(n: usize, depth: usize) -> Result<KohnoRanks> {
    if n < 2 || depth < 1 {
        return Err(Error::InvalidArgument(format!("kohno ranks need n >= 2 and depth >= 1, got n={n}, depth={depth}")));
    }
    let mut ranks: Vec<BigInt> = Vec::with_capacity(depth);
    for m in 1..=depth {
        let power_sum: BigInt = (1..n).map(|j| BigInt::from(j).pow(m as u32)).sum();
        let lower: BigInt = (1..m)
            .filter(|i| m % i == 0)
            .map(|i| BigInt::from(i) * &ranks[i - 1])
            .sum();
        let (phi, rem) = (power_sum - lower).div_rem(&BigInt::from(m));
        debug_assert!(rem.is_zero());
        ranks.push(phi);
    }
    Ok(KohnoRanks { n, ranks })
}

/// One enumerated iterated commutator.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    /// Bracket expression over the pure generators, e.g. `[[B12,B13],B23]`.
    pub expr: String,
    pub word: BraidWord,
    pub formal_depth: u32,
    pub level: u32,
    pub gr_vanishing: bool,
    pub burau_trivial: bool,
}

impl Candidate {
    pub fn to_json(&self) -> Value {
        json!({
            "expr": self.expr,
            "word": self.word.to_json(),
            "length": self.word.len(),
            "formal_depth": self.formal_depth,
            "level": self.level,
            "gr_vanishing": self.gr_vanishing,
            "burau_trivial": self.burau_trivial,
        })
    }
}

struct Node {
    expr: String,
    word: BraidWord,
    depth: u32,
}

/// Iterated commutators of pure generators up to formal depth `depth`, at
/// most `budget` of them.
///
/// Depth 1 is the pure generators in lexicographic order. A commutator
/// `[u, v] = u v u^{-1} v^{-1}` of depth `d` pairs earlier nodes with
/// `depth(u) + depth(v) = d` and `depth(u) >= depth(v)`, with `u` before `v`
/// when the depths agree; pairs are taken in lexicographic order of their
/// positions in the enumeration.
pub fn enumerate_commutators(n: usize, depth: u32, budget: usize) -> Result<Vec<(String, BraidWord, u32)>> {
    let mut nodes: Vec<Node> = Vec::new();
    for ((i, j), w) in pure_gens(n) {
        if nodes.len() >= budget {
            break;
        }
        nodes.push(Node {
            expr: format!("B{i}{j}"),
            word: w,
            depth: 1,
        });
    }
    for d in 2..=depth {
        let existing = nodes.len();
        'outer: for a in 0..existing {
            for b in 0..existing {
                let (u, v) = (&nodes[a], &nodes[b]);
                if u.depth + v.depth != d || u.depth < v.depth || (u.depth == v.depth && a >= b) {
                    continue;
                }
                if nodes.len() >= budget {
                    break 'outer;
                }
                let node = Node {
                    expr: format!("[{},{}]", u.expr, v.expr),
                    word: BraidWord::commutator(&u.word, &v.word)?,
                    depth: d,
                };
                nodes.push(node);
            }
        }
    }
    Ok(nodes.into_iter().map(|n| (n.expr, n.word, n.depth)).collect())
}

/// Evaluates every enumerated commutator under `ρ_n(-1)` and `β_n`.
pub fn kernel_search(n: usize, depth: u32, budget: usize) -> Result<Vec<Candidate>> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            what: "strand count",
            index: n as i64,
            bound: 3,
        });
    }
    let rho = rho_at(n, &-Rational::one())?;
    let beta = burau(n)?;
    let cap = DEFAULT_CAP.max(depth + 2);
    enumerate_commutators(n, depth, budget)?
        .into_par_iter()
        .map(|(expr, word, formal_depth)| {
            let m = to_int_matrix(&rho.eval_word(&word)?)?;
            let level = two_adic_level(&m, cap)?;
            let burau_trivial = beta.eval_word(&word)?.is_identity();
            Ok(Candidate {
                expr,
                word,
                formal_depth,
                level,
                gr_vanishing: level > formal_depth,
                burau_trivial,
            })
        })
        .collect()
}

/// Matrix over `F_2` with a single 1 at `(i, j)` (1-based), for comparisons.
pub fn unit(size: usize, i: usize, j: usize) -> Gf2Matrix {
    let mut m = Matrix::zeros(size, size);
    m[(i - 1, j - 1)] = Gf2(true);
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::pure_gen;
    use crate::reps::Rho3Basis;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn graded_rho3(word: &BraidWord) -> IntMatrix {
        let rho = rho_at(3, &q(-1)).unwrap();
        let m = Rho3Basis::Graded.apply(&rho.eval_word(word).unwrap(), &q(-1)).unwrap();
        to_int_matrix(&m).unwrap()
    }

    #[test]
    fn levels() {
        assert_eq!(two_adic_level(&IntMatrix::identity(3), 8).unwrap(), 8);
        let b12 = graded_rho3(&pure_gen(1, 2, 3).unwrap());
        assert_eq!(two_adic_level(&b12, 8).unwrap(), 1);
        let c = BraidWord::commutator(&pure_gen(1, 2, 3).unwrap(), &pure_gen(2, 3, 3).unwrap()).unwrap();
        assert!(two_adic_level(&graded_rho3(&c), 8).unwrap() >= 3);
    }

    #[test]
    fn level_ignores_unimodular_base_change() {
        let rho = rho_at(3, &q(-1)).unwrap();
        for (_, w) in pure_gens(3) {
            let m = rho.eval_word(&w).unwrap();
            let changed = Rho3Basis::Graded.apply(&m, &q(-1)).unwrap();
            assert_eq!(
                two_adic_level(&to_int_matrix(&m).unwrap(), 8).unwrap(),
                two_adic_level(&to_int_matrix(&changed).unwrap(), 8).unwrap()
            );
        }
    }

    #[test]
    fn first_graded_images() {
        let img = |i, j| gr_image(&graded_rho3(&pure_gen(i, j, 3).unwrap()), 1).unwrap().matrix;
        assert_eq!(img(1, 2), unit(3, 2, 3));
        assert_eq!(img(1, 3), unit(3, 2, 1).add(&unit(3, 2, 3)).unwrap());
        assert_eq!(img(2, 3), unit(3, 2, 1));
        assert!(gr_image(&IntMatrix::identity(3), 4).unwrap().is_zero());
        let s1 = graded_rho3(&BraidWord::generator(3, 1).unwrap());
        assert!(matches!(gr_image(&s1, 1), Err(Error::LevelTooLow { level: 0, wanted: 1 })));
    }

    #[test]
    fn kohno_examples() {
        let k2 = kohno_ranks(2, 6).unwrap();
        assert_eq!(k2.ranks, [1, 0, 0, 0, 0, 0].map(BigInt::from).to_vec());
        assert_eq!(kohno_ranks(3, 2).unwrap().get(2), &BigInt::from(1));
        for n in 2..=7 {
            assert_eq!(kohno_ranks(n, 1).unwrap().get(1), &BigInt::from(n * (n - 1) / 2));
        }
        let k4 = kohno_ranks(4, 20).unwrap();
        assert_eq!(k4.first_exceeding(&BigInt::from(63)), Some(6));
        assert!(kohno_ranks(1, 3).is_err());
    }

    /// Coefficients of `∏ (1 - t^i)^{φ_i}` truncated at `t^depth`.
    fn product_series(ranks: &[BigInt], depth: usize) -> Vec<BigInt> {
        let mut series = vec![BigInt::zero(); depth + 1];
        series[0] = BigInt::one();
        for (idx, phi) in ranks.iter().enumerate() {
            let i = idx + 1;
            let e = phi.to_u32().unwrap();
            for _ in 0..e {
                for k in (i..=depth).rev() {
                    let sub = series[k - i].clone();
                    series[k] -= sub;
                }
            }
        }
        series
    }

    #[test]
    fn kohno_matches_product_expansion() {
        for n in 2..=5 {
            let depth = 8;
            let ranks = kohno_ranks(n, depth).unwrap();
            let lhs = product_series(&ranks.ranks, depth);
            let mut rhs = vec![BigInt::zero(); depth + 1];
            rhs[0] = BigInt::one();
            for j in 1..n {
                for k in (1..=depth).rev() {
                    let sub = &rhs[k - 1] * BigInt::from(j);
                    rhs[k] -= sub;
                }
            }
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn enumeration_counts() {
        let all = enumerate_commutators(3, 4, usize::MAX).unwrap();
        let count = |d| all.iter().filter(|(_, _, x)| *x == d).count();
        assert_eq!([count(1), count(2), count(3), count(4)], [3, 3, 9, 30]);
        assert_eq!(all[3].0, "[B12,B13]");
        assert_eq!(enumerate_commutators(3, 4, 10).unwrap().len(), 10);
    }

    #[test]
    fn search_on_three_strands() {
        let found = kernel_search(3, 2, 100).unwrap();
        assert!(!found[0].gr_vanishing);
        assert_eq!(found[0].level, 1);
        let c = found.iter().find(|c| c.expr == "[B12,B13]").unwrap();
        assert!(c.gr_vanishing);
        assert!(c.level >= 3);
        assert!(!c.burau_trivial);
    }

    #[test]
    fn some_depth_two_image_on_four_strands_is_nonzero() {
        let found = kernel_search(4, 2, 100).unwrap();
        assert!(found.iter().any(|c| c.formal_depth == 2 && !c.gr_vanishing));
    }

    proptest! {
        #[test]
        fn gr_is_additive(a in 0usize..3, b in 0usize..3) {
            let gens = pure_gens(3);
            let rho = rho_at(3, &q(-1)).unwrap();
            let m = to_int_matrix(&rho.eval_word(&gens[a].1).unwrap()).unwrap();
            let n = to_int_matrix(&rho.eval_word(&gens[b].1).unwrap()).unwrap();
            let sum = gr_image(&m, 1).unwrap().matrix.add(&gr_image(&n, 1).unwrap().matrix).unwrap();
            prop_assert_eq!(gr_image(&m.mul(&n).unwrap(), 1).unwrap().matrix, sum);
        }
    }
}
