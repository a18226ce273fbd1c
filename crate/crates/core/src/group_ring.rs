//! The rational group ring `Q[G]` of the group `G = {1, τ}` of order 2.
//!
//! An element is `c_one + c_tau·τ`. Under the two characters of `G` it maps to
//! the pair `(c_one + c_tau, c_one − c_tau)`, which identifies `Q[G]` with
//! `Q × Q` and makes multiplication componentwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Int = i128;
pub type Rational = Ratio<Int>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    c_one: Rational,
    c_tau: Rational,
}

/// Character values of a group-ring element: `plus` under the trivial
/// character, `minus` under the sign character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentPair {
    pub plus: Rational,
    pub minus: Rational,
}

impl ComponentPair {
    pub fn new(plus: Rational, minus: Rational) -> Self {
        ComponentPair { plus, minus }
    }

    pub fn from_ints(plus: Int, minus: Int) -> Self {
        ComponentPair::new(plus.into(), minus.into())
    }
}

impl fmt::Display for ComponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.plus, self.minus)
    }
}

impl GroupRingElement {
    pub fn new(c_one: Rational, c_tau: Rational) -> Self {
        GroupRingElement { c_one, c_tau }
    }

    pub fn from_ints(c_one: Int, c_tau: Int) -> Self {
        GroupRingElement::new(c_one.into(), c_tau.into())
    }

    pub fn zero() -> Self {
        GroupRingElement::from_ints(0, 0)
    }

    pub fn one() -> Self {
        GroupRingElement::from_ints(1, 0)
    }

    pub fn tau() -> Self {
        GroupRingElement::from_ints(0, 1)
    }

    pub fn scalar(r: Rational) -> Self {
        GroupRingElement::new(r, Rational::zero())
    }

    /// The idempotent `e⁺ = (1 + τ)/2`.
    pub fn e_plus() -> Self {
        let half = Rational::new(1, 2);
        GroupRingElement::new(half, half)
    }

    /// The idempotent `e⁻ = (1 − τ)/2`.
    pub fn e_minus() -> Self {
        let half = Rational::new(1, 2);
        GroupRingElement::new(half, -half)
    }

    pub fn c_one(&self) -> Rational {
        self.c_one
    }

    pub fn c_tau(&self) -> Rational {
        self.c_tau
    }

    pub fn plus(&self) -> Rational {
        self.c_one + self.c_tau
    }

    pub fn minus(&self) -> Rational {
        self.c_one - self.c_tau
    }

    pub fn is_zero(&self) -> bool {
        self.c_one.is_zero() && self.c_tau.is_zero()
    }

    pub fn to_components(&self) -> ComponentPair {
        ComponentPair::new(self.plus(), self.minus())
    }

    pub fn from_components(p: ComponentPair) -> Self {
        let half = Rational::new(1, 2);
        GroupRingElement::new((p.plus + p.minus) * half, (p.plus - p.minus) * half)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        // (a + bτ)(c + dτ) = (ac + bd) + (ad + bc)τ
        GroupRingElement::new(
            self.c_one * other.c_one + self.c_tau * other.c_tau,
            self.c_one * other.c_tau + self.c_tau * other.c_one,
        )
    }

    pub fn scale(&self, r: Rational) -> Self {
        GroupRingElement::new(self.c_one * r, self.c_tau * r)
    }

    /// Multiplication by `τ`: swaps the two coefficients.
    pub fn times_tau(&self) -> Self {
        GroupRingElement::new(self.c_tau, self.c_one)
    }

    /// The ring involution `τ ↦ −τ`; exchanges the plus and minus components.
    pub fn involution(&self) -> Self {
        GroupRingElement::new(self.c_one, -self.c_tau)
    }

    pub fn is_integral(&self) -> bool {
        self.c_one.is_integer() && self.c_tau.is_integer()
    }

    /// Lowest common denominator of the two coefficients.
    pub fn denominator(&self) -> Int {
        self.c_one.denom().lcm(self.c_tau.denom())
    }

    /// Whether the element is a unit of `Z_(2)[G]`, i.e. both character values
    /// are 2-adic units. Elements with an even denominator lie outside
    /// `Z_(2)[G]` and are rejected.
    pub fn is_unit_at_2(&self) -> Result<bool> {
        if self.denominator() % 2 == 0 {
            return Err(Error::EvenDenominator);
        }
        let odd = |r: Rational| r.numer() % 2 != 0;
        Ok(odd(self.plus()) && odd(self.minus()))
    }
}

impl Add for GroupRingElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GroupRingElement::new(self.c_one + rhs.c_one, self.c_tau + rhs.c_tau)
    }
}

impl Sub for GroupRingElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GroupRingElement::new(self.c_one - rhs.c_one, self.c_tau - rhs.c_tau)
    }
}

impl Neg for GroupRingElement {
    type Output = Self;
    fn neg(self) -> Self {
        GroupRingElement::new(-self.c_one, -self.c_tau)
    }
}

impl Mul for GroupRingElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs)
    }
}

impl From<Int> for GroupRingElement {
    fn from(n: Int) -> Self {
        GroupRingElement::from_ints(n, 0)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c_tau.is_zero() {
            return write!(f, "{}", self.c_one);
        }
        if self.c_one.is_zero() {
            return write!(f, "{}τ", self.c_tau);
        }
        if self.c_tau < Rational::zero() {
            write!(f, "{} - {}τ", self.c_one, -self.c_tau)
        } else {
            write!(f, "{} + {}τ", self.c_one, self.c_tau)
        }
    }
}

/// Parses a rational written as `n` or `n/d`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse("rational", s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().map_err(|_| bad())?;
            let d: Int = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for GroupRingElement {
    type Err = Error;

    /// Accepts sums of signed terms such as `-1/30 + 11/30τ`, `2τ`, `3 - t`.
    fn from_str(s: &str) -> Result<Self> {
        let src = s.trim();
        if src.is_empty() {
            return Err(Error::parse("group ring element", "empty input"));
        }
        let mut c_one = Rational::zero();
        let mut c_tau = Rational::zero();
        let mut term = String::new();
        let mut sign = 1;
        let mut terms: Vec<(i32, String)> = Vec::new();
        for ch in src.chars() {
            match ch {
                '+' | '-' if !term.trim().is_empty() => {
                    terms.push((sign, std::mem::take(&mut term)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '+' => {}
                '-' => sign = -sign,
                c if c.is_whitespace() => {}
                c => term.push(c),
            }
        }
        if term.trim().is_empty() {
            return Err(Error::parse("group ring element", src.to_string()));
        }
        terms.push((sign, term));
        for (sign, body) in terms {
            let (coeff, is_tau) = match body.strip_suffix('τ').or_else(|| body.strip_suffix('t')) {
                Some(rest) => (rest.trim_end_matches('*'), true),
                None => (body.as_str(), false),
            };
            let value = if coeff.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff)
                    .map_err(|_| Error::parse("group ring element", src.to_string()))?
            };
            let value = if sign < 0 { -value } else { value };
            if is_tau {
                c_tau += value;
            } else {
                c_one += value;
            }
        }
        Ok(GroupRingElement::new(c_one, c_tau))
    }
}
