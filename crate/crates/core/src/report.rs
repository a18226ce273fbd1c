//! Renderings of case reports. Rationals are always
//! written as `num/den` strings so that no value passes through floating
//! point, and ideals as HNF rows plus denominator.

use std::str::FromStr;

use serde::Serialize;

use crate::arithmetic::{siegel_zeta_minus1, QuadraticField};
use crate::error::{Error, Result};
use crate::group_ring::{GroupRingElement, Int, Rational};
use crate::ideal::{GroupRingIdeal, LocalIdealData2};
use crate::verifier::{CaseLabel, CaseReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::parse("format", other.to_string())),
        }
    }
}

/// Whether wall-clock timings are included; without them output is
/// byte-for-byte reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RenderOptions {
    pub timings: bool,
}

pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Serialize)]
struct ElementView {
    c_one: String,
    c_tau: String,
    plus: String,
    minus: String,
}

impl From<&GroupRingElement> for ElementView {
    fn from(x: &GroupRingElement) -> Self {
        ElementView {
            c_one: rational_string(&x.c_one()),
            c_tau: rational_string(&x.c_tau()),
            plus: rational_string(&x.plus()),
            minus: rational_string(&x.minus()),
        }
    }
}

#[derive(Serialize)]
struct IdealView {
    hnf: Option<[[Int; 2]; 2]>,
    denominator: Int,
    /// Generators of the two components after extension to the maximal order.
    components: Option<[String; 2]>,
}

impl From<&GroupRingIdeal> for IdealView {
    fn from(ideal: &GroupRingIdeal) -> Self {
        if ideal.is_zero() {
            return IdealView {
                hnf: None,
                denominator: 1,
                components: None,
            };
        }
        IdealView {
            hnf: Some(ideal.hnf()),
            denominator: ideal.denominator(),
            components: ideal
                .extend_to_maximal_order()
                .ok()
                .map(|g| [rational_string(&g.plus), rational_string(&g.minus)]),
        }
    }
}

#[derive(Serialize)]
struct InvariantsView {
    #[serde(rename = "w_F")]
    w_f: Int,
    #[serde(rename = "w_E")]
    w_e: Int,
    u: Int,
    w_plus: Int,
    w_minus: Int,
    #[serde(rename = "zeta_F_S")]
    zeta_f_s: String,
    #[serde(rename = "zeta_E_S")]
    zeta_e_s: String,
    #[serde(rename = "size_S")]
    size_s: u32,
    #[serde(rename = "size_SE")]
    size_se: u32,
    first_layer: bool,
    k_plus: Int,
    #[serde(rename = "k_E")]
    k_e: Int,
    k_minus: Int,
}

#[derive(Serialize)]
struct Local2View {
    v_plus: u32,
    v_minus: u32,
    principal: bool,
}

impl From<&LocalIdealData2> for Local2View {
    fn from(l: &LocalIdealData2) -> Self {
        Local2View {
            v_plus: l.v_plus,
            v_minus: l.v_minus,
            principal: l.principal,
        }
    }
}

#[derive(Serialize)]
struct ReportView {
    label: String,
    #[serde(rename = "D")]
    disc: Option<Int>,
    #[serde(rename = "S")]
    s: Vec<Int>,
    invariants: InvariantsView,
    theta: ElementView,
    sticke_ideal: IdealView,
    predicted_ideal: IdealView,
    local2: Option<Local2View>,
    checks: serde_json::Map<String, serde_json::Value>,
    passed: bool,
    elapsed: Option<f64>,
}

fn view(report: &CaseReport, opts: RenderOptions) -> ReportView {
    let inv = &report.invariants;
    let disc = match report.label {
        CaseLabel::Discriminant(d) => Some(d),
        CaseLabel::Manual(_) => None,
    };
    ReportView {
        label: report.label.to_string(),
        disc,
        s: report.s.clone(),
        invariants: InvariantsView {
            w_f: inv.w_f,
            w_e: inv.w_e,
            u: inv.u,
            w_plus: inv.w_plus,
            w_minus: inv.w_minus,
            zeta_f_s: rational_string(&inv.zeta_f_s),
            zeta_e_s: rational_string(&inv.zeta_e_s),
            size_s: inv.size_s,
            size_se: inv.size_se,
            first_layer: inv.first_layer,
            k_plus: inv.k_plus,
            k_e: inv.k_e,
            k_minus: inv.k_minus,
        },
        theta: (&report.theta).into(),
        sticke_ideal: (&report.sticke_ideal).into(),
        predicted_ideal: (&report.predicted_ideal).into(),
        local2: report.local2.as_ref().map(Into::into),
        checks: report
            .checks
            .named()
            .iter()
            .map(|&(k, v)| (k.to_string(), serde_json::Value::Bool(v)))
            .collect(),
        passed: report.passed(),
        elapsed: opts.timings.then_some(report.elapsed.as_secs_f64()),
    }
}

pub fn to_json(reports: &[CaseReport], opts: RenderOptions) -> String {
    let views: Vec<_> = reports.iter().map(|r| view(r, opts)).collect();
    let mut out = serde_json::to_string_pretty(&views).expect("report views serialize");
    out.push('\n');
    out
}

fn hnf_string(ideal: &GroupRingIdeal) -> String {
    ideal.to_string()
}

pub fn to_text(reports: &[CaseReport], opts: RenderOptions) -> String {
    let mut out = String::new();
    for r in reports {
        let inv = &r.invariants;
        let s = if r.s.is_empty() {
            "-".to_string()
        } else {
            r.s.iter().map(Int::to_string).collect::<Vec<_>>().join(",")
        };
        out.push_str(&format!("case {}  S = {{∞; {}}}\n", r.label, s));
        out.push_str(&format!(
            "  w_F = {}  w_E = {}  u = {}  first_layer = {}\n",
            inv.w_f, inv.w_e, inv.u, inv.first_layer
        ));
        out.push_str(&format!(
            "  ζ_F^S(-1) = {}  ζ_E^S(-1) = {}  |S| = {}  |S_E| = {}\n",
            inv.zeta_f_s, inv.zeta_e_s, inv.size_s, inv.size_se
        ));
        out.push_str(&format!(
            "  k+ = {}  k_E = {}  k- = {}\n",
            inv.k_plus, inv.k_e, inv.k_minus
        ));
        out.push_str(&format!("  θ = {}\n", r.theta));
        out.push_str(&format!("  I_Sti = {}\n", hnf_string(&r.sticke_ideal)));
        out.push_str(&format!("  I_Fit = {}\n", hnf_string(&r.predicted_ideal)));
        if let Some(l) = r.local2 {
            out.push_str(&format!("  at 2: {l}\n"));
        }
        for (name, ok) in r.checks.named() {
            out.push_str(&format!(
                "  [{}] {}\n",
                if ok { "ok" } else { "FAIL" },
                name
            ));
        }
        if opts.timings {
            out.push_str(&format!("  elapsed = {:.6}s\n", r.elapsed.as_secs_f64()));
        }
        out.push_str(&format!(
            "  verdict: {}\n",
            if r.passed() { "PASS" } else { "FAIL" }
        ));
    }
    out
}

pub fn to_csv(reports: &[CaseReport], opts: RenderOptions) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "label",
        "D",
        "S",
        "w_F",
        "w_E",
        "u",
        "zeta_F_S",
        "zeta_E_S",
        "k_plus",
        "k_E",
        "k_minus",
        "theta",
        "sticke_ideal",
        "predicted_ideal",
    ];
    let names = crate::verifier::Checks::default().named().map(|(n, _)| n);
    header.extend(names.iter());
    header.push("pass");
    if opts.timings {
        header.push("elapsed");
    }
    w.write_record(&header).map_err(csv_error)?;
    for r in reports {
        let inv = &r.invariants;
        let disc = match r.label {
            CaseLabel::Discriminant(d) => d.to_string(),
            CaseLabel::Manual(_) => String::new(),
        };
        let mut row = vec![
            r.label.to_string(),
            disc,
            r.s.iter().map(Int::to_string).collect::<Vec<_>>().join(" "),
            inv.w_f.to_string(),
            inv.w_e.to_string(),
            inv.u.to_string(),
            rational_string(&inv.zeta_f_s),
            rational_string(&inv.zeta_e_s),
            inv.k_plus.to_string(),
            inv.k_e.to_string(),
            inv.k_minus.to_string(),
            r.theta.to_string(),
            r.sticke_ideal.to_string(),
            r.predicted_ideal.to_string(),
        ];
        row.extend(r.checks.named().iter().map(|&(_, ok)| ok.to_string()));
        row.push(r.passed().to_string());
        if opts.timings {
            row.push(format!("{:.6}", r.elapsed.as_secs_f64()));
        }
        w.write_record(&row).map_err(csv_error)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidRecord(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_error(e: csv::Error) -> Error {
    Error::InvalidRecord(e.to_string())
}

pub fn render(reports: &[CaseReport], format: Format, opts: RenderOptions) -> Result<String> {
    match format {
        Format::Text => Ok(to_text(reports, opts)),
        Format::Json => Ok(to_json(reports, opts)),
        Format::Csv => to_csv(reports, opts),
    }
}

/// The archival table: one row per verified discriminant.
pub fn table_csv(reports: &[CaseReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "D", "w_E", "zeta_E", "zeta_F_S", "zeta_E_S", "k_plus", "k_E", "k_minus", "pass",
    ])
    .map_err(csv_error)?;
    for r in reports {
        let CaseLabel::Discriminant(d) = r.label else {
            continue;
        };
        let zeta_e = siegel_zeta_minus1(&QuadraticField::new(d)?);
        let inv = &r.invariants;
        w.write_record([
            d.to_string(),
            inv.w_e.to_string(),
            rational_string(&zeta_e),
            rational_string(&inv.zeta_f_s),
            rational_string(&inv.zeta_e_s),
            inv.k_plus.to_string(),
            inv.k_e.to_string(),
            inv.k_minus.to_string(),
            r.passed().to_string(),
        ])
        .map_err(csv_error)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidRecord(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
