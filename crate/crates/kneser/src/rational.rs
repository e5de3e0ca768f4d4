use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate. No floating point enters
/// any decision path.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d from machine integers. `d` must be nonzero.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q" or a bare integer "p". Arbitrary precision, optional leading
/// sign on the numerator, zero denominators rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let body = s.trim();
    let (num_s, den_s) = match body.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (body, None),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {body:?}")))?;
    let den: BigInt = match den_s {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational {body:?}")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {body:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with
/// q > 0.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Signum as a machine integer: -1, 0, or 1.
pub fn sign_of(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
