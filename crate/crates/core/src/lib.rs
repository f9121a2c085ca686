//! Exact braid-group representations obtained from conjugation actions on
//! congruence quotients of the reduced Burau and Lawrence-Krammer-Bigelow
//! representations, together with the symmetric-group character theory,
//! mod-2^i graded images and ping-pong certificates used to study them.
//!
//! The linear algebra is generic over [`Ring`]; the concrete matrix types
//! used throughout are the aliases below.

pub mod braid;
pub mod error;
pub mod freegrp;
pub mod graded;
pub mod linalg;
pub mod reps;
pub mod ring;
pub mod scalar;
pub mod symchar;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use linalg::{CharPoly, ExactScalar, Matrix};
pub use ring::{IdealSpec, LaurentPoly};
pub use scalar::{Field, Gf2, Ring};

pub type Rational = BigRational;

/// Matrix over `Z[x^{±1}]` or `Z[x^{±1}, y^{±1}]`.
pub type LaurentMatrix = Matrix<LaurentPoly>;
pub type RationalMatrix = Matrix<Rational>;
pub type IntMatrix = Matrix<BigInt>;
pub type Gf2Matrix = Matrix<Gf2>;

/// Parses `"P/Q"` or `"P"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            if q == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(s.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?),
    };
    Ok(parsed)
}
