//! The scalar type of the crate: exact arbitrary-precision rationals.
//!
//! `Rational` is always stored reduced with a positive denominator, so
//! equality, ordering and hashing are exact. Files render a rational as the
//! string `"p"` or `"p/q"` with `q > 0` and `gcd(|p|, q) = 1`; readers accept
//! non-canonical strings (`"2/4"`, `"3/-6"`) and canonicalize.

use num::bigint::Sign;
use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn int(v: i64) -> Rational {
    Rational::from(BigInt::from(v))
}

/// Rational `p/q`. Panics if `q == 0`; callers pass structurally nonzero
/// denominators.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p"` or `"p/q"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Parse a rational given either as `"p/q"` or as a plain decimal like
/// `"1.25"` (converted exactly to 125/100 and reduced).
pub fn parse_rational_or_decimal(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("invalid decimal {s:?}")));
        }
        let digits = format!("{whole}{frac}");
        let numer: BigInt = digits
            .parse()
            .map_err(|_| Error::Parse(format!("invalid decimal {s:?}")))?;
        let denom = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(Rational::new(numer, denom));
    }
    parse_rational(t)
}

/// Canonical string form: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Round half up on the exact rational: `floor(r + 1/2)`.
pub fn round_half_up(r: &Rational) -> BigInt {
    (r + ratio(1, 2)).floor().to_integer()
}

/// Display helper: 6 significant digits, for the CLI's `--decimal` flag.
/// Display only; never feeds back into computation.
pub fn decimal_approx(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.numer().sign() == Sign::Minus {
        "-"
    } else {
        ""
    };
    let abs = r.abs();
    // Scale into [10^5, 10^6) to capture 6 significant digits, then place
    // the decimal point according to the scaling exponent.
    let mut exp10: i32 = 0;
    let mut scaled = abs.clone();
    let hi = int(1_000_000);
    let lo = int(100_000);
    while scaled >= hi {
        scaled /= int(10);
        exp10 += 1;
    }
    while scaled < lo {
        scaled *= int(10);
        exp10 -= 1;
    }
    let digits = round_half_up(&scaled).to_string();
    // Rounding can push 999999.5 over to 1000000.
    let (digits, exp10) = if digits.len() == 7 {
        (digits[..6].to_string(), exp10 + 1)
    } else {
        (digits, exp10)
    };
    let point = 6 + exp10; // digits before the decimal point
    let rendered = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if (point as usize) < digits.len() {
        format!(
            "{}.{}",
            &digits[..point as usize],
            &digits[point as usize..]
        )
    } else {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    };
    let rendered = if rendered.contains('.') {
        rendered
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        rendered
    };
    format!("{sign}{rendered}")
}

/// serde adapter: rationals serialize as canonical strings.
pub mod serde_str {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }
}

/// serde adapter for `Option<Rational>`.
pub mod serde_str_opt {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(
        r: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(v) => s.serialize_some(&format_rational(v)),
            None => s.serialize_none(),
        }
    }
}

/// serde adapter for `BTreeMap<u64, Rational>` (values as canonical strings).
pub mod serde_str_map {
    use super::{format_rational, Rational};
    use serde::ser::SerializeMap;
    use serde::Serializer;
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<u64, Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(&k.to_string(), &format_rational(v))?;
        }
        map.end()
    }
}

/// `f64` view of a rational, for display fallbacks. Never used in core math.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
