//! Number-theoretic inputs for a real quadratic field `E = Q(√D)` over `Q`.
//!
//! Everything here feeds the equivariant value `θ^S(−1)` and the tame-kernel
//! orders that the Birch–Tate formula attaches to `E` and its base.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{self, crt, gcd, is_prime, kronecker, prime_part, valuation};
use crate::error::{Error, Result};
use crate::group_ring::{ComponentPair, GroupRingElement, Int, Rational};

/// `ζ_Q(−1)`.
pub fn zeta_q_minus1() -> Rational {
    Rational::new(-1, 12)
}

/// `w₂(Q)`.
pub const W2_RATIONALS: Int = 24;

/// A fundamental discriminant `D > 1`, i.e. the field `Q(√D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct QuadraticField {
    disc: Int,
}

pub fn is_fundamental_discriminant(d: Int) -> bool {
    if d <= 1 {
        return false;
    }
    match d.mod_floor(&4) {
        1 => arith::is_squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.mod_floor(&4), 2 | 3) && arith::is_squarefree(m)
        }
        _ => false,
    }
}

impl QuadraticField {
    pub fn new(disc: Int) -> Result<Self> {
        if is_fundamental_discriminant(disc) {
            Ok(QuadraticField { disc })
        } else {
            Err(Error::NotFundamental(disc))
        }
    }

    pub fn discriminant(&self) -> Int {
        self.disc
    }

    pub fn ramified_primes(&self) -> Vec<Int> {
        arith::prime_divisors(self.disc)
    }

    /// Whether `E = Q(√2)`, the first layer of the cyclotomic Z₂-extension of Q.
    pub fn is_first_layer(&self) -> bool {
        self.disc == 8
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(√{})", self.disc)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplittingType {
    Split,
    Inert,
    Ramified,
}

impl SplittingType {
    /// The Frobenius `σ_p` as a group-ring element (`1` split, `τ` inert).
    pub fn frobenius(&self) -> Option<GroupRingElement> {
        match self {
            SplittingType::Split => Some(GroupRingElement::one()),
            SplittingType::Inert => Some(GroupRingElement::tau()),
            SplittingType::Ramified => None,
        }
    }
}

pub fn splitting_type(field: &QuadraticField, p: Int) -> Result<SplittingType> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(match kronecker(field.disc, p) {
        0 => SplittingType::Ramified,
        1 => SplittingType::Split,
        _ => SplittingType::Inert,
    })
}

/// Finite primes of `S`; the archimedean place is always implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    finite_primes: Vec<Int>,
}

impl PrimeSet {
    /// Sorted, deduplicated; must contain every prime ramified in `field`.
    pub fn new(field: &QuadraticField, primes: &[Int]) -> Result<Self> {
        let mut finite_primes = primes.to_vec();
        finite_primes.sort_unstable();
        finite_primes.dedup();
        if let Some(&p) = finite_primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidPrimeSet(format!("{p} is not prime")));
        }
        for p in field.ramified_primes() {
            if !finite_primes.contains(&p) {
                return Err(Error::InvalidPrimeSet(format!(
                    "ramified prime {p} of {field} is missing"
                )));
            }
        }
        Ok(PrimeSet { finite_primes })
    }

    /// The ramified primes together with the given unramified extras.
    pub fn with_extras(field: &QuadraticField, extras: &[Int]) -> Result<Self> {
        let ramified = field.ramified_primes();
        let mut seen = Vec::new();
        for &p in extras {
            if !is_prime(p) {
                return Err(Error::InvalidPrimeSet(format!("{p} is not prime")));
            }
            if ramified.contains(&p) {
                return Err(Error::InvalidPrimeSet(format!(
                    "extra prime {p} is already ramified in {field}"
                )));
            }
            if seen.contains(&p) {
                return Err(Error::InvalidPrimeSet(format!("extra prime {p} repeated")));
            }
            seen.push(p);
        }
        let all: Vec<Int> = ramified.into_iter().chain(extras.iter().copied()).collect();
        Self::new(field, &all)
    }

    pub fn minimal(field: &QuadraticField) -> Self {
        PrimeSet {
            finite_primes: field.ramified_primes(),
        }
    }

    pub fn finite_primes(&self) -> &[Int] {
        &self.finite_primes
    }
}

/// `ζ_{Q(√D)}(−1) = (1/60)·Σ σ₁((D − b²)/4)` over integers `b` with `b² < D`
/// and `b ≡ D (mod 2)`.
pub fn siegel_zeta_minus1(field: &QuadraticField) -> Rational {
    let d = field.disc;
    let mut total: Int = 0;
    let mut b: Int = 0;
    while b * b < d {
        if (d - b * b) % 4 == 0 {
            let term = arith::sigma1((d - b * b) / 4);
            total += if b == 0 { term } else { 2 * term };
        }
        b += 1;
    }
    Rational::new(total, 60)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseField {
    Rationals,
    Quadratic(QuadraticField),
}

/// Prime powers searched when computing `w₂`.
const W2_TWO_POWER_BOUND: Int = 64;
const W2_ODD_PRIME_POWERS: [Int; 5] = [3, 9, 5, 25, 7];

/// Whether `Gal(L(μ_q)/L)` has exponent dividing 2, where that group is all
/// of `(Z/q)^×` unless `Q(√D) ⊆ Q(μ_q)` (i.e. `D | q`), in which case it is
/// the kernel of the quadratic character of `Q(√D)`.
fn galois_exponent_two(field: BaseField, q: Int) -> bool {
    let restrict = match field {
        BaseField::Quadratic(f) if q % f.disc == 0 => Some(f.disc),
        _ => None,
    };
    (1..q)
        .filter(|&a| gcd(a, q) == 1)
        .filter(|&a| restrict.is_none_or(|d| kronecker(d, a) == 1))
        .all(|a| (a * a) % q == 1)
}

/// `w₂(L)`: the largest `w` with `Gal(L(μ_q)/L)` of exponent ≤ 2 for every
/// prime power `q ∥ w`.
pub fn w2_field(field: BaseField) -> Int {
    let mut w: Int = 1;
    let mut q = 2;
    let mut two_part = 1;
    while q <= W2_TWO_POWER_BOUND && galois_exponent_two(field, q) {
        two_part = q;
        q *= 2;
    }
    w *= two_part;
    for ell in [3, 5, 7] {
        let best = W2_ODD_PRIME_POWERS
            .iter()
            .filter(|&&q| q % ell == 0)
            .filter(|&&q| galois_exponent_two(field, q))
            .max()
            .copied()
            .unwrap_or(1);
        w *= best;
    }
    w
}

pub fn w2_quadratic(field: &QuadraticField) -> Int {
    w2_field(BaseField::Quadratic(*field))
}

/// The unit `u mod w_E` by which `τ` acts on the cyclic group `W₂(E)`:
/// `u² ≡ 1`, `gcd(u − 1, w_E) = w_F`, built prime by prime with the CRT.
pub fn tau_unit(w_f: Int, w_e: Int, first_layer: bool) -> Result<Int> {
    let bad = |msg: String| Err(Error::InconsistentW2(msg));
    if w_f <= 0 || w_e % w_f != 0 {
        return bad(format!("w_F = {w_f} does not divide w_E = {w_e}"));
    }
    if w_f % 8 != 0 {
        return bad(format!("w_F = {w_f} is not divisible by 8"));
    }
    let mut residues = Vec::new();
    for (ell, e_exp) in arith::factorize(w_e) {
        let modulus = ell.pow(e_exp);
        let f_exp = valuation(w_f, ell);
        if ell == 2 {
            match (first_layer, e_exp - f_exp) {
                (false, 0) => residues.push((1, modulus)),
                (true, 1) => residues.push((1 + (1 << f_exp), modulus)),
                _ => {
                    return bad(format!(
                    "2-parts of ({w_f}, {w_e}) are inconsistent with first_layer = {first_layer}"
                ))
                }
            }
        } else if f_exp == e_exp {
            residues.push((1, modulus));
        } else if f_exp == 0 {
            residues.push((modulus - 1, modulus));
        } else {
            return bad(format!(
                "{ell} divides w_E = {w_e} to higher order than w_F = {w_f}"
            ));
        }
    }
    let u = crt(&residues).mod_floor(&w_e);
    debug_assert_eq!((u * u - 1).mod_floor(&w_e), 0);
    debug_assert_eq!(gcd(u - 1, w_e), w_f);
    Ok(u)
}

/// `θ^S_{E/Q}(−1)`: starts from the value for `S` = ramified primes, with
/// components `ζ_Q(−1)·∏(1 − p)` and `ζ_E(−1)·∏(1 − p)` divided by the
/// former, then multiplies by `1 − p·σ_p` for each extra prime of `S`.
pub fn theta_minus1(field: &QuadraticField, s: &PrimeSet) -> Result<GroupRingElement> {
    let ramified = field.ramified_primes();
    let euler: Rational = ramified.iter().map(|&p| Rational::from(1 - p)).product();
    let plus = zeta_q_minus1() * euler;
    let minus = siegel_zeta_minus1(field) * euler / plus;
    let mut theta = GroupRingElement::from_components(ComponentPair::new(plus, minus));
    for &p in s.finite_primes() {
        let kind = splitting_type(field, p)?;
        let Some(sigma) = kind.frobenius() else {
            continue;
        };
        let factor = GroupRingElement::one() - sigma.scale(Rational::from(p));
        theta = theta * factor;
    }
    for p in ramified {
        if !s.finite_primes().contains(&p) {
            return Err(Error::InvalidPrimeSet(format!(
                "ramified prime {p} is missing"
            )));
        }
    }
    Ok(theta)
}

/// `(ζ_Q^S(−1), ζ_E^S(−1), |S|, |S_E|)` with archimedean places counted.
pub fn s_modified_zetas(
    field: &QuadraticField,
    s: &PrimeSet,
) -> Result<(Rational, Rational, u32, u32)> {
    let mut zeta_f = zeta_q_minus1();
    let mut zeta_e = siegel_zeta_minus1(field);
    let mut size_s = 1;
    let mut size_se = 2;
    for &p in s.finite_primes() {
        let pr = Rational::from(p);
        zeta_f *= Rational::one() - pr;
        size_s += 1;
        match splitting_type(field, p)? {
            SplittingType::Ramified => {
                zeta_e *= Rational::one() - pr;
                size_se += 1;
            }
            SplittingType::Inert => {
                zeta_e *= Rational::one() - pr * pr;
                size_se += 1;
            }
            SplittingType::Split => {
                zeta_e *= (Rational::one() - pr) * (Rational::one() - pr);
                size_se += 2;
            }
        }
    }
    Ok((zeta_f, zeta_e, size_s, size_se))
}

/// The numeric fingerprint of a relative quadratic extension `E/F` with its
/// set `S`, including the tame-kernel orders predicted by Birch–Tate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtensionInvariants {
    pub w_f: Int,
    pub w_e: Int,
    pub u: Int,
    pub w_plus: Int,
    pub w_minus: Int,
    pub zeta_f_s: Rational,
    pub zeta_e_s: Rational,
    pub size_s: u32,
    pub size_se: u32,
    pub first_layer: bool,
    pub k_plus: Int,
    pub k_e: Int,
    pub k_minus: Int,
}

fn sign(exp: u32) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn positive_integer(x: Rational, what: &str) -> Result<Int> {
    if !x.is_integer() || !x.is_positive() {
        return Err(Error::BirchTate(format!(
            "{what} = {x} is not a positive integer"
        )));
    }
    Ok(x.to_integer())
}

impl ExtensionInvariants {
    /// Derives `u`, `w±`, and the orders `k⁺ = |K₂(O_F^S)|`,
    /// `k_E = |K₂(O_E^S)|`, `k⁻ = |K₂(O_E^S)⁻|` from the Birch–Tate formula
    /// `ζ^S(−1) = (−1)^{|S|}·|K₂|/w₂`, with `|H¹| = 1` over the first layer
    /// and `2` otherwise.
    pub fn assemble(
        w_f: Int,
        w_e: Int,
        zeta_f_s: Rational,
        zeta_e_s: Rational,
        size_s: u32,
        size_se: u32,
        first_layer: bool,
    ) -> Result<Self> {
        let u = tau_unit(w_f, w_e, first_layer)?;
        if zeta_f_s.is_zero() || zeta_e_s.is_zero() {
            return Err(Error::BirchTate("S-modified zeta value vanishes".into()));
        }
        let k_plus = positive_integer(sign(size_s) * zeta_f_s * Rational::from(w_f), "k⁺")?;
        let k_e = positive_integer(sign(size_se) * zeta_e_s * Rational::from(w_e), "k_E")?;
        let h = if first_layer { 1 } else { 2 };
        let k_minus = positive_integer(Rational::new(k_e * h, k_plus), "k⁻")?;
        Ok(ExtensionInvariants {
            w_f,
            w_e,
            u,
            w_plus: gcd(u - 1, w_e),
            w_minus: gcd(u + 1, w_e),
            zeta_f_s,
            zeta_e_s,
            size_s,
            size_se,
            first_layer,
            k_plus,
            k_e,
            k_minus,
        })
    }

    /// `θ = ζ_F^S(−1)·e⁺ + (ζ_E^S(−1)/ζ_F^S(−1))·e⁻`.
    pub fn theta(&self) -> GroupRingElement {
        GroupRingElement::from_components(ComponentPair::new(
            self.zeta_f_s,
            self.zeta_e_s / self.zeta_f_s,
        ))
    }
}

/// Invariants of `Q(√D)/Q` with the given `S`.
pub fn birch_tate_invariants(field: &QuadraticField, s: &PrimeSet) -> Result<ExtensionInvariants> {
    let (zeta_f, zeta_e, size_s, size_se) = s_modified_zetas(field, s)?;
    ExtensionInvariants::assemble(
        W2_RATIONALS,
        w2_quadratic(field),
        zeta_f,
        zeta_e,
        size_s,
        size_se,
        field.is_first_layer(),
    )
}

/// Odd part of `w` times its 2-part; small helper for reports.
pub fn two_part(w: Int) -> Int {
    prime_part(w, 2)
}
