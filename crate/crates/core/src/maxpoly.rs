//! Supertropical polynomials in one variable.
//!
//! A polynomial is stored densely, index = exponent. As a function of a
//! tangible `x` it takes the value of its dominant monomial, ghostified when
//! the maximum is attained twice or by a ghost coefficient.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semiring::{Element, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Element>,
}

/// A root where two essential tangible monomials cross.
///
/// `value` is tangible, except for a root at `-inf` which is reported when the
/// lowest essential monomial `a_k x^k` (`k > 0`) is tangible; its multiplicity
/// is then `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerRoot {
    pub value: Element,
    pub multiplicity: usize,
}

/// One end of a closed root interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Value(Rational),
    PosInfinity,
}

/// A maximal closed interval on which an essential ghost monomial dominates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSet {
    /// Strictly increasing in value.
    pub corner: Vec<CornerRoot>,
    /// Disjoint and sorted.
    pub noncorner: Vec<RootInterval>,
}

impl Endpoint {
    fn le_element(&self, x: &Element) -> bool {
        match (self, x.value()) {
            (Endpoint::NegInfinity, _) => true,
            (Endpoint::PosInfinity, _) => false,
            (Endpoint::Value(_), None) => false,
            (Endpoint::Value(v), Some(x)) => *v <= x,
        }
    }

    fn ge_element(&self, x: &Element) -> bool {
        match (self, x.value()) {
            (Endpoint::PosInfinity, _) => true,
            (Endpoint::NegInfinity, None) => true,
            (Endpoint::NegInfinity, Some(_)) => false,
            (Endpoint::Value(_), None) => true,
            (Endpoint::Value(v), Some(x)) => *v >= x,
        }
    }
}

impl RootInterval {
    /// Whether the ν-value of `x` lies in the interval.
    pub fn contains(&self, x: &Element) -> bool {
        self.lo.le_element(x) && self.hi.ge_element(x)
    }
}

impl RootSet {
    /// Whether `x` is one of the reported roots (corner value or inside an interval).
    pub fn contains(&self, x: &Element) -> bool {
        self.corner.iter().any(|c| c.value.nu_equiv(x))
            || self.noncorner.iter().any(|i| i.contains(x))
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInfinity => f.write_str("-inf"),
            Endpoint::Value(v) => write!(f, "{v}"),
            Endpoint::PosInfinity => f.write_str("+inf"),
        }
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("corner:")?;
        for (i, c) in self.corner.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{} (x{})", c.value, c.multiplicity)?;
        }
        f.write_str("\nnoncorner:")?;
        for (i, r) in self.noncorner.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}[{}, {}]", r.lo, r.hi)?;
        }
        Ok(())
    }
}

/// A point `(exponent, coefficient)` of the Newton diagram.
#[derive(Clone, Copy)]
struct Term {
    exp: usize,
    coeff: Element,
}

impl Term {
    fn height(&self) -> Rational {
        self.coeff.value().expect("hull terms are finite")
    }
}

/// Crossing point of two monomials `a_i x^i`, `a_j x^j` with `i < j`.
fn crossing(lo: Term, hi: Term) -> Rational {
    let gap = Rational::from_integer((hi.exp - lo.exp) as i64);
    (lo.height() - hi.height()) / gap
}

impl Polynomial {
    /// Builds a polynomial from coefficients listed from exponent 0 upward.
    /// Trailing `-inf` coefficients are dropped.
    pub fn new(mut coeffs: Vec<Element>) -> Polynomial {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Element::is_neg_inf) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Element::ZERO);
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: Element) -> Polynomial {
        Polynomial::new(vec![c])
    }

    /// `c · x^degree`.
    pub fn monomial(c: Element, degree: usize) -> Polynomial {
        let mut coeffs = vec![Element::ZERO; degree + 1];
        coeffs[degree] = c;
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (`-inf` beyond the degree).
    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).copied().unwrap_or(Element::ZERO)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_neg_inf(&self) -> bool {
        self.coeffs.iter().all(Element::is_neg_inf)
    }

    /// True when no coefficient is a ghost.
    pub fn is_tangible(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_ghost())
    }

    pub fn eval(&self, x: Element) -> Element {
        self.coeffs.iter().enumerate().map(|(i, &a)| a * x.pow(i as u32)).sum()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = vec![Element::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Polynomial::new(out)
    }

    /// `self^m`; `self^0 = 1_R`.
    pub fn pow(&self, m: u32) -> Polynomial {
        (0..m).fold(Polynomial::constant(Element::ONE), |acc, _| acc.mul(self))
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: Element) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&a| c * a).collect())
    }

    /// `f(x^m)`: coefficient `a_i` moves to exponent `i·m`.
    pub fn inflate(&self, m: usize) -> Polynomial {
        assert!(m >= 1, "inflate needs m >= 1");
        let mut out = vec![Element::ZERO; self.degree() * m + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            out[i * m] = a;
        }
        Polynomial::new(out)
    }

    /// Coefficients in reverse order: `x^n f(x^{-1})` for `n = degree`.
    pub fn reversed(&self) -> Polynomial {
        let mut c = self.coeffs.clone();
        c.reverse();
        Polynomial::new(c)
    }

    /// Coefficient-wise `⊨`; the shorter polynomial is padded with `-inf`.
    pub fn ghost_surpasses(&self, other: &Polynomial) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|i| self.coeff(i).ghost_surpasses(&other.coeff(i)))
    }

    /// Vertices of the upper hull of the Newton diagram, left to right.
    /// Points lying on a hull edge (not strict vertices) are dropped.
    fn hull(&self) -> Vec<Term> {
        let mut hull: Vec<Term> = Vec::new();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_neg_inf())
            .map(|(exp, &coeff)| Term { exp, coeff });
        for p in terms {
            while hull.len() >= 2 {
                let o = hull[hull.len() - 2];
                let a = hull[hull.len() - 1];
                let ax = Rational::from_integer((a.exp - o.exp) as i64);
                let bx = Rational::from_integer((p.exp - o.exp) as i64);
                let cross = ax * (p.height() - o.height()) - (a.height() - o.height()) * bx;
                // Keep `a` only for a strict clockwise turn.
                if cross < Rational::from_integer(0) {
                    break;
                }
                hull.pop();
            }
            hull.push(p);
        }
        hull
    }

    /// The essential polynomial: every monomial that is not strictly dominant
    /// on some open interval of tangible inputs is replaced by `-inf`.
    ///
    /// A monomial that only reaches the maximum at isolated points always ties
    /// there with at least two others, so removing it changes neither the
    /// value nor its ghost status; the result agrees with `self` as a function.
    pub fn essential(&self) -> Polynomial {
        let mut out = vec![Element::ZERO; self.coeffs.len()];
        for t in self.hull() {
            out[t.exp] = t.coeff;
        }
        Polynomial::new(out)
    }

    /// Corner and non-corner roots.
    pub fn roots(&self) -> Result<RootSet> {
        if self.is_neg_inf() {
            return Err(Error::DegeneratePolynomial);
        }
        let hull = self.hull();
        let breaks: Vec<Rational> = hull.windows(2).map(|w| crossing(w[0], w[1])).collect();
        let mut set = RootSet::default();

        let first = hull[0];
        if first.exp > 0 && first.coeff.is_tangible() {
            set.corner.push(CornerRoot { value: Element::NegInfinity, multiplicity: first.exp });
        }
        for (k, w) in hull.windows(2).enumerate() {
            if w[0].coeff.is_tangible() && w[1].coeff.is_tangible() {
                set.corner.push(CornerRoot {
                    value: Element::Tangible(breaks[k]),
                    multiplicity: w[1].exp - w[0].exp,
                });
            }
        }
        for (k, t) in hull.iter().enumerate() {
            if !t.coeff.is_ghost() {
                continue;
            }
            let lo = if k == 0 { Endpoint::NegInfinity } else { Endpoint::Value(breaks[k - 1]) };
            let hi = if k + 1 == hull.len() {
                Endpoint::PosInfinity
            } else {
                Endpoint::Value(breaks[k])
            };
            match set.noncorner.last_mut() {
                // Consecutive ghost vertices share a breakpoint.
                Some(prev) if prev.hi == lo => prev.hi = hi,
                _ => set.noncorner.push(RootInterval { lo, hi }),
            }
        }
        Ok(set)
    }

    /// Tangible sample points that exercise every linear piece of `self` and
    /// `others`: all pairwise crossings, the midpoints between them and one
    /// point beyond each end, plus `-inf`.
    pub fn probe_points(polys: &[&Polynomial]) -> Vec<Element> {
        let mut terms: Vec<Term> = Vec::new();
        for p in polys {
            for (exp, &coeff) in p.coeffs.iter().enumerate() {
                if !coeff.is_neg_inf() {
                    terms.push(Term { exp, coeff });
                }
            }
        }
        let mut xs: Vec<Rational> = Vec::new();
        for (i, a) in terms.iter().enumerate() {
            for b in &terms[i + 1..] {
                match a.exp.cmp(&b.exp) {
                    Ordering::Less => xs.push(crossing(*a, *b)),
                    Ordering::Greater => xs.push(crossing(*b, *a)),
                    Ordering::Equal => {}
                }
            }
        }
        xs.sort();
        xs.dedup();
        let one = Rational::from_integer(1);
        let two = Rational::from_integer(2);
        let mut points = vec![Element::NegInfinity];
        match (xs.first(), xs.last()) {
            (Some(&lo), Some(&hi)) => {
                points.push(Element::Tangible(lo - one));
                for w in xs.windows(2) {
                    points.push(Element::Tangible(w[0]));
                    points.push(Element::Tangible((w[0] + w[1]) / two));
                }
                points.push(Element::Tangible(hi));
                points.push(Element::Tangible(hi + one));
            }
            _ => points.push(Element::ONE),
        }
        points
    }

    /// `self ⊨ other` as functions: `self(x) ⊨ other(x)` for every tangible
    /// `x` and for `x = -inf`. Checked exactly on [`Polynomial::probe_points`],
    /// which covers every linear piece of both functions.
    pub fn surpasses_as_function(&self, other: &Polynomial) -> bool {
        Polynomial::probe_points(&[self, other])
            .into_iter()
            .all(|x| self.eval(x).ghost_surpasses(&other.eval(x)))
    }

    /// Equality as functions on tangible inputs and `-inf`.
    pub fn equals_as_function(&self, other: &Polynomial) -> bool {
        Polynomial::probe_points(&[self, other]).into_iter().all(|x| self.eval(x) == other.eval(x))
    }
}

/// Comma-separated coefficients from exponent 0 upward, e.g. `2, 2, 0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        let coeffs = s.split(',').map(str::parse).collect::<Result<Vec<Element>>>()?;
        Ok(Polynomial::new(coeffs))
    }
}
