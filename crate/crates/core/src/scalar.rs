//! Scalar abstraction for the linear algebra and algebra tables.
//!
//! Everything downstream is generic over [`Scalar`]; the concrete type used
//! by the file format, the builtins and the CLI is [`Q`], arbitrary-precision
//! rationals, so every identity is checked exactly. Floating-point scalars
//! satisfy the same bounds and can be used for quick numeric experiments,
//! but none of the shipped tooling does.

use num_traits::{FromPrimitive, Num, Signed};
use std::fmt::{Debug, Display};

/// Field-like scalar: exact ring/field ops, signs, order, display.
pub trait Scalar:
    Num + Signed + Clone + PartialEq + PartialOrd + Debug + Display + FromPrimitive + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("scalar from i64")
    }
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + PartialEq + PartialOrd + Debug + Display + FromPrimitive + 'static
{
}

/// The exact rational scalar used throughout the shipped tooling.
pub type Q = num_rational::BigRational;

/// Parse a rational from the canonical text form `p` or `p/q` (q > 0).
pub fn parse_q(text: &str) -> Result<Q, String> {
    let s = text.trim();
    let r: Q = s
        .parse()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))?;
    Ok(r)
}

/// Canonical text form of a rational: `p` when the denominator is 1,
/// otherwise `p/q` with q > 0 and the fraction reduced.
pub fn format_q(x: &Q) -> String {
    if x.denom() == &num_bigint::BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3", "2/3", "-7/2"] {
            let q = parse_q(s).unwrap();
            assert_eq!(format_q(&q), s);
        }
        // non-canonical inputs normalize
        assert_eq!(format_q(&parse_q("4/2").unwrap()), "2");
        assert_eq!(format_q(&parse_q("-2/4").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_q("a/b").is_err());
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn generic_over_f64_compiles() {
        fn double<S: Scalar>(x: S) -> S {
            x.clone() + x
        }
        assert_eq!(double(2.5f64), 5.0);
        assert_eq!(double(Q::from_int(3)), Q::from_int(6));
    }
}
