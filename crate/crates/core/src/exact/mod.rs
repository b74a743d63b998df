//! Exact rational arithmetic: multivariate polynomials, binary forms,
//! dense linear algebra over the rationals and degreewise Hilbert functions.

pub mod binary;
pub mod hilbert;
pub mod linalg;
pub mod poly;

pub use binary::BinaryForm;
pub use poly::QPoly;

use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// Arbitrary-precision rational. Always in lowest terms with positive
/// denominator, courtesy of `num-rational`.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Parses a decimal-integer-ratio string, "p" or "p/q".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    s.parse::<Rat>()
        .map_err(|_| Error::InvalidInput(format!("bad rational '{s}'")))
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert_eq!(fmt_rat(&rat(-3, 2)), "-3/2");
        assert_eq!(fmt_rat(&rat_int(5)), "5");
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn lowest_terms_invariant() {
        let r = rat(4, -6);
        assert_eq!(r.numer().to_string(), "-2");
        assert_eq!(r.denom().to_string(), "3");
    }
}
