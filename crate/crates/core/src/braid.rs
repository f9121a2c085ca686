//! Braid words on `n` strands and their images in the symmetric group.
//!
//! Words are plain sequences of signed Artin generators. Nothing here
//! applies braid relations; [`BraidWord::free_reduce`] only cancels
//! adjacent inverse pairs.

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

/// `σ_index^{±1}` with `index` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(index: usize, inverse: bool) -> Self {
        Letter { index, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    pub fn signed(self) -> i64 {
        if self.inverse {
            -(self.index as i64)
        } else {
            self.index as i64
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n < 2 {
            return Err(Error::IndexOutOfRange {
                what: "strand count",
                index: n as i64,
                bound: 2,
            });
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= n) {
            return Err(Error::IndexOutOfRange {
                what: "generator",
                index: bad.index as i64,
                bound: n as i64 - 1,
            });
        }
        Ok(BraidWord { n, letters })
    }

    /// From signed generator indices: `[3, -1]` is `σ_3 σ_1^{-1}`.
    pub fn from_signed(n: usize, letters: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 {
                return Err(Error::IndexOutOfRange {
                    what: "generator",
                    index: 0,
                    bound: n as i64 - 1,
                });
            }
            out.push(Letter::new(l.unsigned_abs() as usize, l < 0));
        }
        Self::new(n, out)
    }

    /// Whitespace-separated signed integers, e.g. `"3 -1"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| Error::Parse(format!("bad braid letter {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_signed(n, &letters)
    }

    pub fn generator(n: usize, index: usize) -> Result<Self> {
        Self::new(n, vec![Letter::new(index, false)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    pub fn power(&self, k: usize) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.repeat(k),
        }
    }

    /// `u v u^{-1} v^{-1}`, freely reduced.
    pub fn commutator(u: &BraidWord, v: &BraidWord) -> Result<BraidWord> {
        Ok(u.concat(v)?.concat(&u.invert())?.concat(&v.invert())?.free_reduce())
    }

    /// Image under `σ_i -> (i i+1)`.
    pub fn underlying_perm(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        // composing right to left: the rightmost letter acts first
        for l in self.letters.iter().rev() {
            for img in images.iter_mut() {
                if *img == l.index - 1 {
                    *img = l.index;
                } else if *img == l.index {
                    *img = l.index - 1;
                }
            }
        }
        Permutation { images }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.letters
                .iter()
                .map(|l| serde_json::json!([l.index, if l.inverse { -1 } else { 1 }]))
                .collect(),
        )
    }

    /// Parses `[[index, ±1], ...]`.
    pub fn from_json(n: usize, value: &Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("braid word must be an array".into()))?;
        let letters = arr
            .iter()
            .map(|pair| {
                let p = pair.as_array().filter(|p| p.len() == 2);
                let idx = p.and_then(|p| p[0].as_u64());
                let exp = p.and_then(|p| p[1].as_i64());
                match (idx, exp) {
                    (Some(i), Some(1)) => Ok(Letter::new(i as usize, false)),
                    (Some(i), Some(-1)) => Ok(Letter::new(i as usize, true)),
                    _ => Err(Error::Parse(format!("bad braid letter {pair}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.signed().to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `(σ_{j-1} ... σ_{i+1}) σ_i^2 (σ_{j-1} ... σ_{i+1})^{-1}`, the pure braid
/// `B_ij` twisting strands `i` and `j`.
pub fn pure_gen(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange {
            what: "pure braid strand",
            index: if i < 1 || i >= j { i as i64 } else { j as i64 },
            bound: n as i64,
        });
    }
    let prefix = BraidWord::new(n, ((i + 1)..j).rev().map(|k| Letter::new(k, false)).collect())?;
    let square = BraidWord::new(n, vec![Letter::new(i, false); 2])?;
    prefix.concat(&square)?.concat(&prefix.invert())
}

/// All `B_ij` in lexicographic `(i, j)` order.
pub fn pure_gens(n: usize) -> Vec<((usize, usize), BraidWord)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in (i + 1)..=n {
            out.push(((i, j), pure_gen(i, j, n).expect("indices in range")));
        }
    }
    out
}

/// `(σ_1 σ_2 ... σ_{n-1})^n`, which generates the center.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    let cycle = BraidWord::new(n, (1..n).map(|k| Letter::new(k, false)).collect())?;
    Ok(cycle.power(n))
}

/// A positive braid whose permutation has the given cycle type; each part
/// `k` occupies the next `k` consecutive strands.
pub fn lift_cycle_type(parts: &[usize], n: usize) -> Result<BraidWord> {
    if parts.contains(&0) || parts.iter().sum::<usize>() != n {
        return Err(Error::InvalidPartition {
            parts: parts.to_vec(),
            n,
        });
    }
    let mut letters = Vec::new();
    let mut start = 1;
    for &k in parts {
        letters.extend((start..start + k - 1).map(|i| Letter::new(i, false)));
        start += k;
    }
    BraidWord::new(n, letters)
}

/// Permutation of `{0, ..., n-1}`; printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|v| v - 1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycle lengths, weakly decreasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, v)| i == *v).count()
    }
}
