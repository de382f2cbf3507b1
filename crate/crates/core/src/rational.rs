//! Rational scalars and their string encoding.
//!
//! Every rational that crosses a file boundary is a string `"p/q"` or `"p"`,
//! never a float.

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {literal:?}")]
pub struct ParseRationalError {
    pub literal: String,
}

/// Parses `"p/q"` or `"p"` into a reduced rational with positive denominator.
pub fn parse(s: &str) -> Result<Q, ParseRationalError> {
    let err = || ParseRationalError { literal: s.to_string() };
    let trimmed = s.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

pub fn format(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn parse_all(items: &[String]) -> Result<Vec<Q>, ParseRationalError> {
    items.iter().map(|s| parse(s)).collect()
}

pub fn format_all(items: &[Q]) -> Vec<String> {
    items.iter().map(format).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert_eq!(parse("3/-6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(format(&parse("3/-6").unwrap()), "-1/2");
        assert_eq!(format(&int(0)), "0");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("0.5").is_err());
        assert!(parse("").is_err());
        assert!(parse("a/b").is_err());
    }
}
