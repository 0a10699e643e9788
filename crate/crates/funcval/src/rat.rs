//! Exact rational scalars and conversion helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, the scalar type of all exact geometry.
pub type Rat = BigRational;

/// Shorthand for `p/q` as a `Rat`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integer `Rat`.
pub fn int(p: i64) -> Rat {
    Rat::from(BigInt::from(p))
}

/// Lossy conversion to `f64` (numerator/denominator division).
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact conversion from a finite `f64` (every finite double is rational).
pub fn from_f64(x: f64) -> Option<Rat> {
    Rat::from_f64(x)
}

/// Parses either an integer literal or a `"p/q"` fraction.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rat::from(p))
    }
}

/// Canonical `"p/q"` (or `"p"` for integers) rendering.
pub fn format_rat(x: &Rat) -> String {
    if x.denom() == &BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Absolute value.
pub fn abs(x: &Rat) -> Rat {
    x.abs()
}
