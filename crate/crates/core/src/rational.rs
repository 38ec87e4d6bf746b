//! Exact rationals: parsing, printing and generalized binomial coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"n"`, `"-n"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Formats as `"p/q"`, or `"n"` when integral.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `C(n, k)` extended to all integers `n`.
///
/// Zero for `k < 0`. For `n ≥ 0` it is zero when `k > n`; for negative `n`
/// the falling-factorial polynomial `n(n−1)…(n−k+1)/k!` is used.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || (n >= 0 && k > n) {
        return Rational::zero();
    }
    binomial_rational(&rat(n), k as u64)
}

/// `C(a, k) = a(a−1)…(a−k+1)/k!` for a rational top argument.
pub fn binomial_rational(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (a - rat(i as i64)) / rat(i as i64 + 1);
    }
    acc
}

pub fn sign(exp: i64) -> Rational {
    if exp.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn is_nonnegative_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), rat(-7));
        assert_eq!(parse_rational("4/-2").unwrap(), rat(-2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
        assert_eq!(format_rational(&frac(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(12)), "12");
    }

    #[test]
    fn binomial_extension() {
        assert_eq!(binomial(5, 2), rat(10));
        assert_eq!(binomial(5, 0), rat(1));
        assert_eq!(binomial(3, 5), rat(0));
        assert_eq!(binomial(3, -1), rat(0));
        assert_eq!(binomial(-1, 0), rat(1));
        // (-1)(-2)/2
        assert_eq!(binomial(-1, 2), rat(1));
        assert_eq!(binomial(-2, 3), rat(-4));
        assert_eq!(binomial(0, 0), rat(1));
    }

    #[test]
    fn generalized_binomial_at_half() {
        // C(1/2, 2) = (1/2)(-1/2)/2
        assert_eq!(binomial_rational(&frac(1, 2), 2), frac(-1, 8));
    }
}
