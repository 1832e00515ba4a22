//! Exact rational scalars used for symmetry components, ages, and bidegrees.
//!
//! All group denominators are bounded by the group-order cap (default 10^6),
//! so a reduced `i64` ratio never overflows; arbitrary precision is only
//! needed inside the Jacobi-ring elimination, which uses `BigInt` separately.

use num_rational::Ratio;
use num_traits::Zero;

/// Exact rational scalar.
pub type Rat = Ratio<i64>;

/// Rational zero.
pub fn rat0() -> Rat {
    Rat::zero()
}

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: Rat) -> Rat {
    r - r.floor()
}

/// True when `r` is an integer.
pub fn is_integer(r: Rat) -> bool {
    r.is_integer()
}

/// True when `r` is in `1/2 + Z`.
pub fn is_half_integer(r: Rat) -> bool {
    (r - ratio(1, 2)).is_integer()
}

/// Renders a reduced rational as `"p/q"`, or `"p"` when integral.
pub fn rat_str(r: Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<i64, String> {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid rational component `{t}`"))
    };
    match s.split_once('/') {
        None => Ok(rat(parse_int(s)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d == 0 {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(ratio(parse_int(n)?, d))
        }
    }
}

/// Least common multiple of two positive integers.
pub fn lcm(a: i64, b: i64) -> i64 {
    num_integer::lcm(a.abs(), b.abs())
}
