use std::fmt;
use std::str::FromStr;

use super::extrat::ExtRat;
use super::seq::WeightSeq;
use crate::error::{Error, Result};

/// A totally ordered ω-valuation monoid: `plus` is the maximum, `times` is
/// the minimum, `zero` is the bottom and `one` is the top of the order.
pub trait OmegaMonoid {
    type Value: Clone + Ord + fmt::Debug + fmt::Display;

    fn name(&self) -> &'static str;
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn val_omega(&self, seq: &WeightSeq<Self::Value>) -> Self::Value;

    fn plus(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        std::cmp::max(a, b).clone()
    }

    fn times(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        std::cmp::min(a, b).clone()
    }

    fn is_special(&self, v: &Self::Value) -> bool {
        *v == self.zero() || *v == self.one()
    }
}

/// `zero` if any entry is `zero`, `one` if every entry is `one`, otherwise
/// `None`.
fn special_case<V: Ord + Clone>(seq: &WeightSeq<V>, zero: &V, one: &V) -> Option<V> {
    if seq.values().any(|v| v == zero) {
        Some(zero.clone())
    } else if seq.values().all(|v| v == one) {
        Some(one.clone())
    } else {
        None
    }
}

/// Limit-style valuation. When the cycle has entries other than `one` the
/// result is `pick` over those (the values seen infinitely often), otherwise
/// `pick` over the non-`one` entries of the prefix.
fn limit<V: Ord + Clone>(
    seq: &WeightSeq<V>,
    zero: &V,
    one: &V,
    pick: fn(std::vec::IntoIter<V>) -> Option<V>,
) -> V {
    if let Some(v) = special_case(seq, zero, one) {
        return v;
    }
    let non_one = |xs: &[V]| xs.iter().filter(|v| *v != one).cloned().collect::<Vec<_>>();
    let inf = non_one(&seq.cycle);
    let pool = if inf.is_empty() { non_one(&seq.prefix) } else { inf };
    pick(pool.into_iter()).expect("non-empty by the special case test")
}

pub fn liminf_val<V: Ord + Clone>(seq: &WeightSeq<V>, zero: &V, one: &V) -> V {
    limit(seq, zero, one, Iterator::min)
}

pub fn limsup_val<V: Ord + Clone>(seq: &WeightSeq<V>, zero: &V, one: &V) -> V {
    limit(seq, zero, one, Iterator::max)
}

pub fn sup_val<V: Ord + Clone>(seq: &WeightSeq<V>, zero: &V, one: &V) -> V {
    if let Some(v) = special_case(seq, zero, one) {
        return v;
    }
    seq.values().filter(|v| *v != one).max().cloned().expect("non-empty")
}

/// Identifies one of the shipped monoids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonoidId {
    K1,
    K2,
    K3,
    PairLex,
}

impl FromStr for MonoidId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "k1" | "liminf" => Ok(MonoidId::K1),
            "k2" | "limsup" => Ok(MonoidId::K2),
            "k3" | "sup" => Ok(MonoidId::K3),
            "pairlex" | "pair-lex" | "pairs" => Ok(MonoidId::PairLex),
            other => Err(Error::InvalidValue(format!("unknown monoid `{other}`"))),
        }
    }
}

impl fmt::Display for MonoidId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonoidId::K1 => "k1",
            MonoidId::K2 => "k2",
            MonoidId::K3 => "k3",
            MonoidId::PairLex => "pairlex",
        })
    }
}

/// The three monoids over extended rationals. They share `max`/`min` with
/// zero `-inf` and one `+inf` and differ only in the ω-valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Monoid {
    /// `liminf`
    K1,
    /// `limsup`
    K2,
    /// supremum of the entries other than `+inf`
    K3,
}

impl Monoid {
    pub fn id(self) -> MonoidId {
        match self {
            Monoid::K1 => MonoidId::K1,
            Monoid::K2 => MonoidId::K2,
            Monoid::K3 => MonoidId::K3,
        }
    }

    pub fn from_id(id: MonoidId) -> Result<Self> {
        match id {
            MonoidId::K1 => Ok(Monoid::K1),
            MonoidId::K2 => Ok(Monoid::K2),
            MonoidId::K3 => Ok(Monoid::K3),
            MonoidId::PairLex => Err(Error::Unsupported(
                "the pair monoid has no formula or automaton pipeline".into(),
            )),
        }
    }

    pub fn all() -> [Monoid; 3] {
        [Monoid::K1, Monoid::K2, Monoid::K3]
    }
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.id().fmt(f)
    }
}

impl FromStr for Monoid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Monoid::from_id(s.parse()?)
    }
}

impl OmegaMonoid for Monoid {
    type Value = ExtRat;

    fn name(&self) -> &'static str {
        match self {
            Monoid::K1 => "k1",
            Monoid::K2 => "k2",
            Monoid::K3 => "k3",
        }
    }

    fn zero(&self) -> ExtRat {
        ExtRat::NegInf
    }

    fn one(&self) -> ExtRat {
        ExtRat::PosInf
    }

    fn val_omega(&self, seq: &WeightSeq<ExtRat>) -> ExtRat {
        let (z, o) = (ExtRat::NegInf, ExtRat::PosInf);
        match self {
            Monoid::K1 => liminf_val(seq, &z, &o),
            Monoid::K2 => limsup_val(seq, &z, &o),
            Monoid::K3 => sup_val(seq, &z, &o),
        }
    }
}

/// A natural number or `+inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NatInf {
    Fin(u64),
    Inf,
}

impl fmt::Display for NatInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatInf::Fin(n) => write!(f, "{n}"),
            NatInf::Inf => write!(f, "inf"),
        }
    }
}

/// Pairs ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairValue(pub NatInf, pub NatInf);

impl fmt::Display for PairValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl FromStr for PairValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidValue(format!("cannot read `{s}` as a pair"));
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let comp = |t: &str| -> Result<NatInf> {
            match t.trim() {
                "inf" | "∞" => Ok(NatInf::Inf),
                n => n.parse::<u64>().map(NatInf::Fin).map_err(|_| bad()),
            }
        };
        Ok(PairValue(comp(a)?, comp(b)?))
    }
}

/// Lexicographically ordered pairs over `N ∪ {inf}` with a limsup-style
/// valuation. Zero is `(0,0)` and one is `(inf,inf)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PairLex;

impl OmegaMonoid for PairLex {
    type Value = PairValue;

    fn name(&self) -> &'static str {
        "pairlex"
    }

    fn zero(&self) -> PairValue {
        PairValue(NatInf::Fin(0), NatInf::Fin(0))
    }

    fn one(&self) -> PairValue {
        PairValue(NatInf::Inf, NatInf::Inf)
    }

    fn val_omega(&self, seq: &WeightSeq<PairValue>) -> PairValue {
        limsup_val(seq, &self.zero(), &self.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(p: &[&str], c: &[&str]) -> WeightSeq<ExtRat> {
        let f = |xs: &[&str]| xs.iter().map(|s| s.parse().unwrap()).collect();
        WeightSeq::new(f(p), f(c))
    }

    #[test]
    fn liminf_cases() {
        let k = Monoid::K1;
        assert_eq!(k.val_omega(&seq(&["3"], &["-inf"])), ExtRat::NegInf);
        assert_eq!(k.val_omega(&seq(&[], &["inf"])), ExtRat::PosInf);
        assert_eq!(k.val_omega(&seq(&["1"], &["4", "inf", "2"])), ExtRat::int(2));
        assert_eq!(k.val_omega(&seq(&["5", "2", "inf"], &["inf"])), ExtRat::int(2));
    }

    #[test]
    fn limsup_cases() {
        let k = Monoid::K2;
        assert_eq!(k.val_omega(&seq(&["9"], &["4", "inf", "2"])), ExtRat::int(4));
        assert_eq!(k.val_omega(&seq(&["5", "2"], &["inf"])), ExtRat::int(5));
        assert_eq!(k.val_omega(&seq(&["5"], &["2", "-inf"])), ExtRat::NegInf);
    }

    #[test]
    fn sup_ignores_top() {
        let k = Monoid::K3;
        assert_eq!(k.val_omega(&seq(&["9"], &["4", "inf"])), ExtRat::int(9));
        assert_eq!(k.val_omega(&seq(&[], &["inf", "inf"])), ExtRat::PosInf);
    }

    #[test]
    fn pairs_parse_and_compare() {
        let a: PairValue = "(1,inf)".parse().unwrap();
        let b: PairValue = "(2,0)".parse().unwrap();
        assert!(a < b);
        assert_eq!(a.to_string(), "(1,inf)");
        let s = WeightSeq::new(vec![b], vec![a, PairLex.one()]);
        assert_eq!(PairLex.val_omega(&s), a);
    }

    #[test]
    fn monoid_names_parse() {
        assert_eq!("limsup".parse::<Monoid>().unwrap(), Monoid::K2);
        assert!("pairlex".parse::<Monoid>().is_err());
        assert_eq!("pairlex".parse::<MonoidId>().unwrap(), MonoidId::PairLex);
    }
}
