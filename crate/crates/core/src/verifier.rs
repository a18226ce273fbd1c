//! Per-case verification: builds `I^Sti = Ann(W₂(E))·θ^S(−1)` and the ideal
//! predicted from the tame-kernel orders, then compares the two globally and
//! prime by prime.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_traits::Signed;

use crate::arith;
use crate::arithmetic::{
    birch_tate_invariants, theta_minus1, ExtensionInvariants, PrimeSet, QuadraticField,
};
use crate::error::{Error, Result};
use crate::group_ring::{ComponentPair, GroupRingElement, Int, Rational};
use crate::ideal::{GroupRingIdeal, LocalIdealData2};
use crate::modules::prop41_generators;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    Discriminant(Int),
    Manual(String),
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseLabel::Discriminant(d) => write!(f, "D={d}"),
            CaseLabel::Manual(label) => write!(f, "{label}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Checks {
    pub integral: bool,
    pub ideals_equal: bool,
    pub maximal_order_match: bool,
    pub lemma72_plus: bool,
    pub lemma72_minus: bool,
    pub local2_principal_iff_first_layer: bool,
    pub odd_local_match: bool,
}

impl Checks {
    pub fn named(&self) -> [(&'static str, bool); 7] {
        [
            ("integral", self.integral),
            ("ideals_equal", self.ideals_equal),
            ("maximal_order_match", self.maximal_order_match),
            ("lemma72_plus", self.lemma72_plus),
            ("lemma72_minus", self.lemma72_minus),
            (
                "local2_principal_iff_first_layer",
                self.local2_principal_iff_first_layer,
            ),
            ("odd_local_match", self.odd_local_match),
        ]
    }

    pub fn all_passed(&self) -> bool {
        self.named().iter().all(|&(_, ok)| ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub label: CaseLabel,
    /// Finite primes of `S`; empty for manual records.
    pub s: Vec<Int>,
    pub invariants: ExtensionInvariants,
    pub theta: GroupRingElement,
    pub sticke_ideal: GroupRingIdeal,
    pub predicted_ideal: GroupRingIdeal,
    /// `None` when `I^Sti` has an even denominator and cannot be localized.
    pub local2: Option<LocalIdealData2>,
    pub checks: Checks,
    pub elapsed: Duration,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.all_passed()
    }
}

/// The ideal generated by `g·θ` for the annihilator generators `g` of `W₂(E)`.
pub fn build_stickelberger_ideal(
    inv: &ExtensionInvariants,
    theta: &GroupRingElement,
) -> Result<GroupRingIdeal> {
    let gens: Vec<_> = prop41_generators(inv.w_f, inv.w_e, inv.u, inv.first_layer)?
        .iter()
        .map(|g| g.multiply(theta))
        .collect();
    GroupRingIdeal::from_generators(&gens)
}

/// `(k⁺e⁺, k⁻e⁻)` away from the first layer, `(k⁺e⁺ + k⁻e⁻)` on it.
pub fn predicted_fitting_ideal(inv: &ExtensionInvariants) -> Result<GroupRingIdeal> {
    let (kp, km) = (Rational::from(inv.k_plus), Rational::from(inv.k_minus));
    let gens = if inv.first_layer {
        vec![GroupRingElement::from_components(ComponentPair::new(
            kp, km,
        ))]
    } else {
        vec![
            GroupRingElement::e_plus().scale(kp),
            GroupRingElement::e_minus().scale(km),
        ]
    };
    if let Some(g) = gens.iter().find(|g| !g.is_integral()) {
        return Err(Error::BirchTate(format!(
            "predicted generator {g} is not integral"
        )));
    }
    GroupRingIdeal::from_generators(&gens)
}

/// Odd primes at which either ideal can differ from the unit ideal.
fn odd_support(ideals: &[&GroupRingIdeal]) -> BTreeSet<Int> {
    let mut primes = BTreeSet::new();
    for ideal in ideals {
        let [[a, _], [_, c]] = ideal.hnf();
        for n in [a * c, ideal.denominator()] {
            primes.extend(arith::prime_divisors(n).into_iter().filter(|&p| p != 2));
        }
    }
    primes
}

fn run_checks(
    inv: &ExtensionInvariants,
    theta: &GroupRingElement,
    sticke: &GroupRingIdeal,
    predicted: &GroupRingIdeal,
) -> (Checks, Option<LocalIdealData2>) {
    let integral = sticke.is_integral();
    let ideals_equal = sticke.equals(predicted);
    let maximal_order_match = sticke
        .extend_to_maximal_order()
        .map(|g| g.plus.abs() == inv.k_plus.into() && g.minus.abs() == inv.k_minus.into())
        .unwrap_or(false);
    let lemma72_plus = (Rational::from(inv.w_plus) * theta.plus()).abs() == inv.k_plus.into();
    let lemma72_minus = (Rational::from(inv.w_minus) * theta.minus()).abs() == inv.k_minus.into();

    let local2 = sticke.localize_2().ok();
    // the 2-local generator 2^{v⁺}e⁺ + 2^{v⁻}e⁻ must itself lie in I^Sti_(2)
    let generator_inside = integral
        && sticke
            .principal_generator_at_2()
            .and_then(|alpha| sticke.contains_at_2(&alpha))
            .unwrap_or(false);
    let local2_principal_iff_first_layer =
        generator_inside && local2.is_some_and(|l| l.principal == inv.first_layer);

    let odd_local_match = odd_support(&[sticke, predicted]).into_iter().all(|p| {
        match (sticke.localize_odd(p), predicted.localize_odd(p)) {
            (Ok(x), Ok(y)) => x == y,
            _ => false,
        }
    });

    let checks = Checks {
        integral,
        ideals_equal,
        maximal_order_match,
        lemma72_plus,
        lemma72_minus,
        local2_principal_iff_first_layer,
        odd_local_match,
    };
    (checks, local2)
}

fn assemble_report(
    label: CaseLabel,
    s: Vec<Int>,
    inv: ExtensionInvariants,
    theta: GroupRingElement,
    started: Instant,
) -> Result<CaseReport> {
    let sticke_ideal = build_stickelberger_ideal(&inv, &theta)?;
    let predicted_ideal = predicted_fitting_ideal(&inv)?;
    let (checks, local2) = run_checks(&inv, &theta, &sticke_ideal, &predicted_ideal);
    Ok(CaseReport {
        label,
        s,
        invariants: inv,
        theta,
        sticke_ideal,
        predicted_ideal,
        local2,
        checks,
        elapsed: started.elapsed(),
    })
}

/// Full pipeline for `E = Q(√D)` over `Q` with `S` = ramified primes plus
/// `extra_primes`. Input problems are errors; failed identities are recorded
/// in the report's checks. A Birch–Tate integrality failure is returned as
/// [`Error::BirchTate`].
pub fn verify_case(disc: Int, extra_primes: &[Int]) -> Result<CaseReport> {
    let started = Instant::now();
    let field = QuadraticField::new(disc)?;
    let s = PrimeSet::with_extras(&field, extra_primes)?;
    let inv = birch_tate_invariants(&field, &s)?;
    let theta = theta_minus1(&field, &s)?;
    assemble_report(
        CaseLabel::Discriminant(disc),
        s.finite_primes().to_vec(),
        inv,
        theta,
        started,
    )
}

/// Externally supplied invariants of a relative quadratic extension `E/F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManualRecord {
    pub label: Option<String>,
    pub w_f: Int,
    pub w_e: Int,
    pub zeta_f_s: Rational,
    pub zeta_e_s: Rational,
    pub size_s: u32,
    pub size_se: u32,
    pub first_layer: bool,
}

impl ManualRecord {
    pub fn invariants(&self) -> Result<ExtensionInvariants> {
        ExtensionInvariants::assemble(
            self.w_f,
            self.w_e,
            self.zeta_f_s,
            self.zeta_e_s,
            self.size_s,
            self.size_se,
            self.first_layer,
        )
    }

    pub fn display_label(&self) -> String {
        self.label.clone().unwrap_or_else(|| "manual".to_string())
    }
}

/// Same checklist as [`verify_case`], with `θ` assembled from the supplied
/// zeta values. Every error here, including Birch–Tate non-integrality, is a
/// validation failure of the record.
pub fn manual_case(record: &ManualRecord) -> Result<CaseReport> {
    let started = Instant::now();
    let inv = record.invariants()?;
    let theta = inv.theta();
    assemble_report(
        CaseLabel::Manual(record.display_label()),
        Vec::new(),
        inv,
        theta,
        started,
    )
}
