//! The hand-transcribed `μ_3` matrices against the computed ones.
//!
//! The transcribed `σ_2` agrees with the adjoint construction everywhere.
//! The transcribed `σ_1` differs in two entries of column 5, and cannot be
//! the matrix of any adjoint action: its determinant is `a²` and it fails
//! the braid relation together with `σ_2`.

mod common;

use braidrep::reps::mu_symbolic;
use braidrep::LaurentPoly;
use common::Mu3Reference;

#[test]
fn transcribed_sigma2_matches() {
    let mu = mu_symbolic(3).unwrap();
    assert_eq!(*mu.generator(2), Mu3Reference::new().sigma2());
}

#[test]
fn transcribed_sigma1_differs_only_in_column_five() {
    let mu = mu_symbolic(3).unwrap();
    let got = mu.generator(1);
    let reference = Mu3Reference::new().sigma1();
    let mut diffs = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            if got[(i, j)] != reference[(i, j)] {
                diffs.push((i + 1, j + 1));
            }
        }
    }
    assert_eq!(diffs, vec![(3, 5), (4, 5)]);
    // a^{-1} b^{-2} and -(b - 1)/b^2
    assert_eq!(got[(2, 4)], LaurentPoly::monomial(1, &[-1, -2]));
    assert_eq!(
        got[(3, 4)],
        LaurentPoly::monomial(-1, &[0, -1]) + LaurentPoly::monomial(1, &[0, -2])
    );
}

#[test]
fn transcribed_sigma1_is_not_an_adjoint_matrix() {
    let reference = Mu3Reference::new();
    let s1 = reference.sigma1();
    let s2 = reference.sigma2();
    // conjugation actions have determinant 1
    assert_eq!(s1.det().unwrap(), LaurentPoly::monomial(1, &[2, 0]));
    assert_eq!(s2.det().unwrap(), LaurentPoly::constant(1, 2));
    let lhs = s1.mul(&s2).unwrap().mul(&s1).unwrap();
    let rhs = s2.mul(&s1).unwrap().mul(&s2).unwrap();
    assert_ne!(lhs, rhs);

    let mu = mu_symbolic(3).unwrap();
    assert_eq!(mu.generator(1).det().unwrap(), LaurentPoly::constant(1, 2));
}
