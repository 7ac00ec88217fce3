//! Exact rational scalars.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The ground field ℚ: arbitrary-precision rationals kept in lowest terms
/// with a positive denominator.
pub type Scalar = num_rational::BigRational;

/// The scalar `v`.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// The scalar one.
pub fn one() -> Scalar {
    Scalar::one()
}

/// The scalar zero.
pub fn zero() -> Scalar {
    Scalar::zero()
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `"p"` or `"p/q"` (optionally signed); the result is reduced.
pub fn parse(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidInput(alloc::format!("bad rational numerator in {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::InvalidInput(alloc::format!("bad rational denominator in {text:?}")))?;
    if den.is_zero() {
        return Err(Error::InvalidInput(alloc::format!("zero denominator in {text:?}")));
    }
    Ok(Scalar::new(num, den))
}
