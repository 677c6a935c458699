//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// `n^-k` as an exact rational.
pub fn inverse_power(n: u32, k: u32) -> Scalar {
    Scalar::new(BigInt::one(), num_traits::pow(BigInt::from(n), k as usize))
}

/// Formats as `p/q` in lowest terms, always with an explicit denominator.
pub fn format_scalar(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Parses `p`, `p/q`, `-p/q` or `+p/q`. Unreduced fractions are accepted.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = |m: &str| Error::format("coeff", format!("{m}: {text:?}"));
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (t, None),
    };
    let digits_ok = |s: &str, signed: bool| {
        let body = if signed {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits_ok(num, true) {
        return Err(bad("malformed numerator"));
    }
    let p: BigInt = num
        .trim_start_matches('+')
        .parse()
        .map_err(|_| bad("malformed numerator"))?;
    let q: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if !digits_ok(d, false) {
                return Err(bad("malformed denominator"));
            }
            d.parse().map_err(|_| bad("malformed denominator"))?
        }
    };
    if q.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Scalar::new(p, q))
}

/// Least common multiple of the denominators, used to clear fractions.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
