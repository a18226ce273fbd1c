//! Ideals of `R = Z[G]` and fractional ideals in `Q[G]`, stored as τ-stable
//! rank-2 lattices in canonical Hermite normal form.
//!
//! A nonzero ideal is `(1/d)·L` where `L ⊆ Z²` has basis rows `(a, b)` and
//! `(0, c)` with respect to `(1, τ)`, `a > 0`, `c > 0`, `0 ≤ b < c`, and the
//! content of `L` coprime to `d`. Equal ideals have equal fields.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::arith::{self, ext_gcd, gcd, lcm, odd_part, rational_gcd};
use crate::error::{Error, Result};
use crate::group_ring::{ComponentPair, GroupRingElement, Int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupRingIdeal {
    zero: bool,
    denominator: Int,
    a: Int,
    b: Int,
    c: Int,
}

/// Shape of an ideal after localization at 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalIdealData2 {
    pub v_plus: u32,
    pub v_minus: u32,
    pub principal: bool,
}

/// Incremental Hermite reduction of integer vectors in `Z²`.
#[derive(Default)]
struct HermiteAccumulator {
    top: Option<(Int, Int)>,
    c: Int,
}

impl HermiteAccumulator {
    fn push(&mut self, x: Int, y: Int) {
        if x == 0 {
            self.c = gcd(self.c, y);
            return;
        }
        match self.top {
            None => self.top = Some(if x < 0 { (-x, -y) } else { (x, y) }),
            Some((a, b)) => {
                let (g, s, t) = ext_gcd(a, x);
                let new_top = (g, s * b + t * y);
                // (x/g)·(a,b) − (a/g)·(x,y) has zero first coordinate
                let residual = (x / g) * b - (a / g) * y;
                self.top = Some(new_top);
                self.c = gcd(self.c, residual);
            }
        }
        if let Some((a, b)) = self.top {
            if self.c != 0 {
                self.top = Some((a, b.mod_floor(&self.c)));
            }
        }
    }

    fn rank(&self) -> usize {
        self.top.is_some() as usize + (self.c != 0) as usize
    }
}

impl GroupRingIdeal {
    pub fn zero() -> Self {
        GroupRingIdeal {
            zero: true,
            denominator: 1,
            a: 0,
            b: 0,
            c: 0,
        }
    }

    pub fn unit() -> Self {
        GroupRingIdeal {
            zero: false,
            denominator: 1,
            a: 1,
            b: 0,
            c: 1,
        }
    }

    /// Builds an ideal from HNF data, checking canonical form and τ-stability.
    pub fn from_hnf(a: Int, b: Int, c: Int, denominator: Int) -> Result<Self> {
        let bad = |msg: &str| Error::parse("ideal", msg.to_string());
        if a <= 0 || c <= 0 || denominator <= 0 {
            return Err(bad("diagonal entries and denominator must be positive"));
        }
        if b < 0 || b >= c {
            return Err(bad("off-diagonal entry must satisfy 0 <= b < c"));
        }
        // τ·(a + bτ) = b + aτ and τ·cτ = c must lie in the lattice
        if b % a != 0 || c % a != 0 || (a - (b / a) * b) % c != 0 || ((c / a) * b) % c != 0 {
            return Err(bad("lattice is not stable under τ"));
        }
        let content = gcd(gcd(a, b), c);
        if gcd(content, denominator) != 1 {
            return Err(bad(
                "content of the lattice shares a factor with the denominator",
            ));
        }
        Ok(GroupRingIdeal {
            zero: false,
            denominator,
            a,
            b,
            c,
        })
    }

    /// The smallest τ-stable lattice containing every generator, i.e. the
    /// `Z[G]`-submodule of `Q[G]` they generate. An empty or all-zero list
    /// gives the zero ideal; generators spanning only a rank-one lattice
    /// (multiples of `1 ± τ`) are rejected.
    pub fn from_generators(gens: &[GroupRingElement]) -> Result<Self> {
        let nonzero: Vec<_> = gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Ok(GroupRingIdeal::zero());
        }
        let d = nonzero.iter().fold(1, |acc, g| lcm(acc, g.denominator()));
        let mut acc = HermiteAccumulator::default();
        for g in &nonzero {
            let x = (g.c_one() * Rational::from(d)).to_integer();
            let y = (g.c_tau() * Rational::from(d)).to_integer();
            acc.push(x, y);
            acc.push(y, x);
        }
        if acc.rank() < 2 {
            return Err(Error::DegenerateLattice(acc.rank()));
        }
        let (a, b) = acc.top.expect("rank two");
        Ok(Self::normalized(a, b, acc.c, d))
    }

    /// Integral lattice spanned by `vectors` (coordinates over `(1, τ)`),
    /// without τ-closure. Fails unless the span is a finite-index ideal.
    pub fn from_lattice(vectors: &[(Int, Int)]) -> Result<Self> {
        let mut acc = HermiteAccumulator::default();
        for &(x, y) in vectors {
            acc.push(x, y);
        }
        if acc.rank() < 2 {
            return Err(Error::DegenerateLattice(acc.rank()));
        }
        let (a, b) = acc.top.expect("rank two");
        Self::from_hnf(a, b.mod_floor(&acc.c), acc.c, 1)
    }

    fn normalized(a: Int, b: Int, c: Int, d: Int) -> Self {
        let g = gcd(gcd(gcd(a, b), c), d);
        let (a, b, c, d) = (a / g, b / g, c / g, d / g);
        GroupRingIdeal {
            zero: false,
            denominator: d,
            a,
            b: b.mod_floor(&c),
            c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn denominator(&self) -> Int {
        self.denominator
    }

    /// HNF rows `[[a, b], [0, c]]` of the scaled integral lattice.
    pub fn hnf(&self) -> [[Int; 2]; 2] {
        [[self.a, self.b], [0, self.c]]
    }

    pub fn is_integral(&self) -> bool {
        self.zero || self.denominator == 1
    }

    /// Z-basis of the ideal as group-ring elements.
    pub fn basis(&self) -> Vec<GroupRingElement> {
        if self.zero {
            return Vec::new();
        }
        let d = Rational::new(1, self.denominator);
        vec![
            GroupRingElement::from_ints(self.a, self.b).scale(d),
            GroupRingElement::from_ints(0, self.c).scale(d),
        ]
    }

    pub fn contains(&self, x: &GroupRingElement) -> bool {
        if x.is_zero() {
            return true;
        }
        if self.zero {
            return false;
        }
        let scaled = x.scale(Rational::from(self.denominator));
        if !scaled.is_integral() {
            return false;
        }
        let (u, v) = (scaled.c_one().to_integer(), scaled.c_tau().to_integer());
        if u % self.a != 0 {
            return false;
        }
        (v - (u / self.a) * self.b) % self.c == 0
    }

    pub fn equals(&self, other: &Self) -> bool {
        self == other
    }

    /// `x·I`.
    pub fn scale_by_element(&self, x: &GroupRingElement) -> Result<Self> {
        let gens: Vec<_> = self.basis().iter().map(|g| g.multiply(x)).collect();
        Self::from_generators(&gens)
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.zero {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    /// `[R : I]` for a nonzero integral ideal.
    pub fn index_in_r(&self) -> Result<Int> {
        self.require_nonzero()?;
        if self.denominator != 1 {
            return Err(Error::FractionalIdeal(self.denominator));
        }
        Ok(self.a * self.c)
    }

    /// Generators `(g⁺, g⁻)` of the two component ideals of `I·S`, where
    /// `S = Z·e⁺ ⊕ Z·e⁻` is the maximal order.
    pub fn extend_to_maximal_order(&self) -> Result<ComponentPair> {
        self.require_nonzero()?;
        let comps: Vec<_> = self.basis().iter().map(|g| g.to_components()).collect();
        Ok(ComponentPair::new(
            rational_gcd(comps.iter().map(|p| &p.plus)),
            rational_gcd(comps.iter().map(|p| &p.minus)),
        ))
    }

    /// Valuations `(v_p(g⁺), v_p(g⁻))` at an odd prime, which determine
    /// `I·Z_(p)[G]` since that ring is already maximal.
    pub fn localize_odd(&self, p: Int) -> Result<(i32, i32)> {
        if p == 2 || !arith::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        let g = self.extend_to_maximal_order()?;
        Ok((
            arith::rational_valuation(&g.plus, p),
            arith::rational_valuation(&g.minus, p),
        ))
    }

    /// Localization data at 2: component valuations and whether `I_(2)` is
    /// principal, decided by comparing `v₂([R : I])` with `v⁺ + v⁻`.
    pub fn localize_2(&self) -> Result<LocalIdealData2> {
        self.require_nonzero()?;
        if self.denominator % 2 == 0 {
            return Err(Error::EvenDenominator);
        }
        let g = self.extend_to_maximal_order()?;
        // clearing an odd denominator changes neither valuation
        let v_plus = arith::rational_valuation(&g.plus, 2) as u32;
        let v_minus = arith::rational_valuation(&g.minus, 2) as u32;
        let v_index = arith::valuation(self.a * self.c, 2);
        Ok(LocalIdealData2 {
            v_plus,
            v_minus,
            principal: v_index == v_plus + v_minus,
        })
    }

    /// The generator `2^{v⁺}·e⁺ + 2^{v⁻}·e⁻` of `I·S_(2)`; it lies in `I_(2)`.
    pub fn principal_generator_at_2(&self) -> Result<GroupRingElement> {
        self.index_in_r()?;
        let local = self.localize_2()?;
        Ok(GroupRingElement::from_components(ComponentPair::from_ints(
            1 << local.v_plus,
            1 << local.v_minus,
        )))
    }

    /// Smallest odd `t` dividing `[R : I]` with `t·x ∈ I`, i.e. a witness that
    /// `x` lies in `I_(2)`. Only integral ideals and elements are meaningful.
    pub fn odd_multiple_in(&self, x: &GroupRingElement) -> Result<Option<Int>> {
        let index = self.index_in_r()?;
        Ok(arith::divisors(odd_part(index))
            .into_iter()
            .find(|&t| self.contains(&x.scale(Rational::from(t)))))
    }

    /// Whether `x` lies in `I·Z_(2)[G]`.
    pub fn contains_at_2(&self, x: &GroupRingElement) -> Result<bool> {
        Ok(self.odd_multiple_in(x)?.is_some())
    }
}

impl fmt::Display for GroupRingIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return write!(f, "0");
        }
        write!(
            f,
            "[[{}, {}], [0, {}]] / {}",
            self.a, self.b, self.c, self.denominator
        )
    }
}

impl FromStr for GroupRingIdeal {
    type Err = Error;

    /// Parses `[[a, b], [0, c]] / d` (the `/ d` part is optional) or `0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(GroupRingIdeal::zero());
        }
        let bad = || Error::parse("ideal", s.to_string());
        let (matrix, den) = match s.rsplit_once('/') {
            Some((m, d)) => (m, d.trim().parse::<Int>().map_err(|_| bad())?),
            None => (s, 1),
        };
        let nums: Vec<Int> = matrix
            .split(['[', ']', ','])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Int>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match nums.as_slice() {
            &[a, b, 0, c] => GroupRingIdeal::from_hnf(a, b, c, den),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for LocalIdealData2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v+ = {}, v- = {}, {}",
            self.v_plus,
            self.v_minus,
            if self.principal {
                "principal"
            } else {
                "non-principal"
            }
        )
    }
}
