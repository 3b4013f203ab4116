use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number extended with `-inf` and `+inf`.
///
/// The derived order places `NegInf` below every finite value and `PosInf`
/// above every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRat {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl ExtRat {
    pub fn int(n: i64) -> Self {
        ExtRat::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExtRat::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, ExtRat::NegInf)
    }

    pub fn is_pos_inf(&self) -> bool {
        matches!(self, ExtRat::PosInf)
    }

    pub fn max(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }

    pub fn min(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }

    /// Total order comparison, spelled out for call sites that read better
    /// with a method.
    pub fn leq(&self, other: &Self) -> bool {
        self <= other
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::NegInf => write!(f, "-inf"),
            ExtRat::PosInf => write!(f, "inf"),
            ExtRat::Finite(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl FromStr for ExtRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "inf" | "+inf" | "∞" | "+∞" => return Ok(ExtRat::PosInf),
            "-inf" | "-∞" => return Ok(ExtRat::NegInf),
            _ => {}
        }
        let bad = || Error::InvalidValue(format!("cannot read `{t}` as an extended rational"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::InvalidValue(format!("zero denominator in `{t}`")));
        }
        let r = BigRational::new(num, den);
        debug_assert!(r.denom().is_positive());
        Ok(ExtRat::Finite(r))
    }
}

impl From<i64> for ExtRat {
    fn from(n: i64) -> Self {
        ExtRat::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_places_infinities_at_the_ends() {
        let mut v = vec![ExtRat::PosInf, ExtRat::int(3), ExtRat::NegInf, ExtRat::frac(7, 2)];
        v.sort();
        assert_eq!(v, vec![ExtRat::NegInf, ExtRat::int(3), ExtRat::frac(7, 2), ExtRat::PosInf]);
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3", "7/2", "-4", "inf", "-inf", "-1/3"] {
            let v: ExtRat = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("6/4".parse::<ExtRat>().unwrap(), ExtRat::frac(3, 2));
        assert_eq!("∞".parse::<ExtRat>().unwrap(), ExtRat::PosInf);
        assert!("1/0".parse::<ExtRat>().is_err());
        assert!("abc".parse::<ExtRat>().is_err());
    }
}
