use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactError;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (guaranteed by the `Ratio` constructors).
pub type Rational = BigRational;

/// Shorthand for small rational constants.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the textual forms `a/b` and `a`.
///
/// Unlike `BigRational::from_str` this never panics: a zero denominator is
/// reported as an error, which matters because these strings arrive from
/// CLI arguments and untrusted JSON.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::ParseRational(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let (numer, denom) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n, d),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = denom.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// `a/b`, or just `a` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_both_forms() {
        assert_eq!(parse_rational("2/3").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "/", "1/", "/2", "1/0", "a/b", "1.5", "1/2/3", "--3"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn format_round_trip() {
        assert_eq!(format_rational(&rat(-3, 4)), "-3/4");
        assert_eq!(format_rational(&rat(5, 1)), "5");
        assert_eq!(format_rational(&rat(0, 9)), "0");
    }
}
