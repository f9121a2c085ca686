//! Hand transcription of the two 8x8 matrices of `μ_3(a, b)` on the
//! generators, with fractions cleared into Laurent form.

#![allow(dead_code)]

use braidrep::{LaurentMatrix, LaurentPoly, Matrix};

pub struct Mu3Reference {
    bm: LaurentPoly,
}

impl Mu3Reference {
    pub fn new() -> Self {
        Mu3Reference {
            bm: LaurentPoly::var(1, 2) - LaurentPoly::constant(1, 2),
        }
    }

    /// `c a^i b^j (b-1)^k`
    fn t(&self, c: i64, i: i32, j: i32, k: u32) -> LaurentPoly {
        let mut x = LaurentPoly::monomial(c, &[i, j]);
        for _ in 0..k {
            x = x * self.bm.clone();
        }
        x
    }

    fn z(&self) -> LaurentPoly {
        LaurentPoly::zero_in(2)
    }

    fn c(&self, v: i64) -> LaurentPoly {
        LaurentPoly::constant(v, 2)
    }

    fn one_minus_binv(&self) -> LaurentPoly {
        self.c(1) - self.t(1, 0, -1, 0)
    }

    pub fn sigma1(&self) -> LaurentMatrix {
        let (t, z) = (|c, i, j, k| self.t(c, i, j, k), || self.z());
        let omb = || self.one_minus_binv();
        Matrix::from_rows(vec![
            vec![t(1, 1, 1, 1), t(1, 1, 2, 0), t(-1, 1, -1, 3), t(1, 1, 1, 1), z(), z(), t(-2, 1, 0, 2), t(1, 1, 0, 2)],
            vec![t(1, 1, 1, 0), z(), t(-1, 1, -1, 2), z(), z(), z(), t(-2, 1, 0, 1), t(1, 1, 0, 1)],
            vec![z(), z(), z(), z(), t(1, 1, -2, 0), z(), z(), z()],
            vec![z(), z(), z(), z(), t(-1, 0, -1, 1), t(1, 0, -1, 0), z(), z()],
            vec![z(), z(), t(1, -1, -1, 0), z(), t(-1, -1, -2, 1), z(), z(), z()],
            vec![z(), z(), t(-1, 0, -1, 2), t(1, 0, 1, 0), t(1, 0, -2, 3), t(-1, 0, -1, 2), t(-1, 0, 0, 1), t(2, 0, 0, 1)],
            vec![z(), z(), omb(), z(), z(), z(), self.c(1), z()],
            vec![z(), z(), omb(), z(), t(-1, 0, -2, 2), omb(), self.c(1), self.c(-1)],
        ])
        .expect("8x8")
    }

    pub fn sigma2(&self) -> LaurentMatrix {
        let (t, z) = (|c, i, j, k| self.t(c, i, j, k), || self.z());
        Matrix::from_rows(vec![
            vec![t(-1, 0, -1, 2), t(1, 0, -1, 3), t(1, 0, -1, 0), t(-1, 0, -1, 2), z(), z(), t(-2, 0, -1, 1), t(1, 0, -1, 1)],
            vec![z(), t(-1, -1, -2, 1), z(), t(1, -1, -2, 0), z(), z(), z(), z()],
            vec![t(1, 0, 1, 0), t(-1, 0, 1, 1), z(), z(), z(), z(), z(), z()],
            vec![z(), t(1, -1, -1, 0), z(), z(), z(), z(), z(), z()],
            vec![z(), z(), z(), t(-1, 1, 2, 2), z(), t(1, 1, 2, 0), t(-1, 1, 2, 1), t(2, 1, 2, 1)],
            vec![z(), z(), t(1, 1, 1, 1), t(-1, 1, 1, 3), t(1, 1, 1, 0), t(1, 1, 1, 1), t(-1, 1, 1, 2), t(2, 1, 1, 2)],
            vec![t(-1, 0, 0, 1), t(1, 0, 0, 2), z(), t(-1, 0, 0, 1), z(), z(), self.c(-1), self.c(1)],
            vec![z(), z(), z(), t(-1, 0, 0, 1), z(), z(), z(), self.c(1)],
        ])
        .expect("8x8")
    }
}

