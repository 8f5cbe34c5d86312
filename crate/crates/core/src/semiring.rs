//! The supertropical scalar semiring `R = T ∪ G ∪ {-inf}` over exact rationals.
//!
//! Addition takes the maximum, but a maximum that is attained twice becomes a
//! *ghost*: `a + a = a^ν`. Multiplication adds values and is absorbed by
//! `-inf`; a ghost factor makes the product a ghost.
//!
//! ```
//! use supertrop::Element;
//!
//! let three: Element = "3".parse().unwrap();
//! assert_eq!(three + three, "3g".parse().unwrap());
//! assert_eq!(three * "2g".parse::<Element>().unwrap(), Element::ghost(5));
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact values of the underlying ordered group `(ℚ, +)`.
pub type Rational = Ratio<i64>;

/// One supertropical scalar.
///
/// Rationals are always kept reduced, so derived equality is semantic equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    /// `0_R`, the additive identity and multiplicative zero.
    NegInfinity,
    Tangible(Rational),
    Ghost(Rational),
}

/// The three layers an [`Element`] can live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    NegInfinity,
    Tangible,
    Ghost,
}

impl Element {
    /// `0_R = -inf`.
    pub const ZERO: Element = Element::NegInfinity;
    /// `1_R`, the tangible `0`.
    pub const ONE: Element = Element::Tangible(Ratio::new_raw(0, 1));

    pub fn tangible(v: i64) -> Element {
        Element::Tangible(Rational::from_integer(v))
    }

    pub fn ghost(v: i64) -> Element {
        Element::Ghost(Rational::from_integer(v))
    }

    pub fn kind(&self) -> Kind {
        match self {
            Element::NegInfinity => Kind::NegInfinity,
            Element::Tangible(_) => Kind::Tangible,
            Element::Ghost(_) => Kind::Ghost,
        }
    }

    /// The rational carried by a tangible or ghost element.
    pub fn value(&self) -> Option<Rational> {
        match *self {
            Element::NegInfinity => None,
            Element::Tangible(v) | Element::Ghost(v) => Some(v),
        }
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, Element::NegInfinity)
    }

    pub fn is_tangible(&self) -> bool {
        matches!(self, Element::Tangible(_))
    }

    pub fn is_ghost(&self) -> bool {
        matches!(self, Element::Ghost(_))
    }

    /// True for ghosts and `-inf`, i.e. exactly the elements that ghost-surpass `0_R`.
    pub fn is_ghost_or_neg_inf(&self) -> bool {
        !self.is_tangible()
    }

    /// Compares the ν-projections: `-inf` is below everything, ghost and
    /// tangible copies of the same rational compare equal.
    pub fn cmp_nu(&self, other: &Element) -> Ordering {
        match (self.value(), other.value()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(&b),
        }
    }

    /// Ghostification `a ↦ a^ν`; fixes `-inf`.
    pub fn nu(self) -> Element {
        match self {
            Element::Tangible(v) => Element::Ghost(v),
            other => other,
        }
    }

    /// Tangible lift `a ↦ â`; fixes `-inf`.
    pub fn hat(self) -> Element {
        match self {
            Element::Ghost(v) => Element::Tangible(v),
            other => other,
        }
    }

    pub fn nu_equiv(&self, other: &Element) -> bool {
        self.cmp_nu(other) == Ordering::Equal
    }

    /// `self ⊨ other`: `self = other + ghost`, i.e. equal, or a ghost whose
    /// ν-value is at least that of `other`. Every ghost surpasses `-inf`.
    pub fn ghost_surpasses(&self, other: &Element) -> bool {
        self == other || (self.is_ghost() && self.cmp_nu(other) != Ordering::Less)
    }

    /// Multiplicative inverse; only tangible elements have one.
    pub fn invert(self) -> Result<Element> {
        match self {
            Element::Tangible(v) => Ok(Element::Tangible(-v)),
            other => Err(Error::NotInvertible(other.to_string())),
        }
    }

    /// `self^k` (the rational multiple `k·value`). `a^0 = 1_R` for every `a`.
    pub fn pow(self, k: u32) -> Element {
        if k == 0 {
            return Element::ONE;
        }
        let k = Rational::from_integer(i64::from(k));
        match self {
            Element::NegInfinity => Element::NegInfinity,
            Element::Tangible(v) => Element::Tangible(v * k),
            Element::Ghost(v) => Element::Ghost(v * k),
        }
    }

    /// The unique `b` of the same kind with `b^k = self`.
    ///
    /// # Panics
    ///
    /// If `k == 0`.
    pub fn kth_root(self, k: u32) -> Element {
        assert!(k >= 1, "kth_root needs k >= 1");
        let k = Rational::from_integer(i64::from(k));
        match self {
            Element::NegInfinity => Element::NegInfinity,
            Element::Tangible(v) => Element::Tangible(v / k),
            Element::Ghost(v) => Element::Ghost(v / k),
        }
    }
}

impl Default for Element {
    fn default() -> Self {
        Element::ZERO
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, rhs: Element) -> Element {
        match self.cmp_nu(&rhs) {
            Ordering::Greater => self,
            Ordering::Less => rhs,
            Ordering::Equal => self.nu(),
        }
    }
}

impl Mul for Element {
    type Output = Element;

    fn mul(self, rhs: Element) -> Element {
        match (self, rhs) {
            (Element::NegInfinity, _) | (_, Element::NegInfinity) => Element::NegInfinity,
            (Element::Tangible(a), Element::Tangible(b)) => Element::Tangible(a + b),
            (
                Element::Tangible(a) | Element::Ghost(a),
                Element::Tangible(b) | Element::Ghost(b),
            ) => Element::Ghost(a + b),
        }
    }
}

impl Sum for Element {
    fn sum<I: Iterator<Item = Element>>(iter: I) -> Element {
        iter.fold(Element::ZERO, Add::add)
    }
}

impl Product for Element {
    fn product<I: Iterator<Item = Element>>(iter: I) -> Element {
        iter.fold(Element::ONE, Mul::mul)
    }
}

impl From<Rational> for Element {
    fn from(v: Rational) -> Self {
        Element::Tangible(v)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::NegInfinity => f.write_str("-inf"),
            Element::Tangible(v) => write!(f, "{v}"),
            Element::Ghost(v) => write!(f, "{v}g"),
        }
    }
}

fn parse_digits(s: &str, whole: &str) -> Result<i64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed scalar {whole:?}")));
    }
    s.parse().map_err(|_| Error::Parse(format!("scalar {whole:?} is out of range")))
}

/// Parses `-inf`, `RATIONAL` or `RATIONAL g`, with `RATIONAL = [-]digits[/digits]`.
impl FromStr for Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Element> {
        let t = s.trim();
        if t == "-inf" {
            return Ok(Element::NegInfinity);
        }
        let (body, ghost) = match t.strip_suffix('g') {
            Some(b) => (b, true),
            None => (t, false),
        };
        let (negative, unsigned) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body),
        };
        let (num, den) = match unsigned.split_once('/') {
            Some((n, d)) => (parse_digits(n, s)?, parse_digits(d, s)?),
            None => (parse_digits(unsigned, s)?, 1),
        };
        if den == 0 {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        let v = Rational::new(if negative { -num } else { num }, den);
        Ok(if ghost { Element::Ghost(v) } else { Element::Tangible(v) })
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
