//! Job files and batch execution.
//!
//! A job file holds one case per line, `D` or `D:p1,p2,...` for extra primes
//! in `S`, and manual records written as `key = value` lines. A manual record
//! starts at a `manual` line (or at its first key). It ends at a blank line
//! or an `end` line, and also where the next case begins. `#` starts a comment.
//!
//! ```text
//! 5
//! 13:3,7
//! manual
//! label = Q(sqrt2,sqrt5)/Q(sqrt5)
//! w_F = 120
//! w_E = 240
//! zeta_F_S = -1/10
//! zeta_E_S = -7/5
//! size_S = 3
//! size_SE = 5
//! first_layer = true
//! end
//! ```

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group_ring::{parse_rational, Int};
use crate::verifier::{manual_case, verify_case, CaseReport, ManualRecord};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JobCase {
    Auto { disc: Int, extra_primes: Vec<Int> },
    Manual(ManualRecord),
}

impl JobCase {
    fn sort_key(&self) -> (u8, Int, Vec<Int>, String) {
        match self {
            JobCase::Auto { disc, extra_primes } => (0, *disc, extra_primes.clone(), String::new()),
            JobCase::Manual(r) => (1, 0, Vec::new(), r.display_label()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            JobCase::Auto { disc, extra_primes } if extra_primes.is_empty() => format!("D={disc}"),
            JobCase::Auto { disc, extra_primes } => {
                let ps: Vec<_> = extra_primes.iter().map(Int::to_string).collect();
                format!("D={disc}:{}", ps.join(","))
            }
            JobCase::Manual(r) => r.display_label(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct JobSpec {
    pub cases: Vec<JobCase>,
}

#[derive(Debug, Clone)]
pub struct JobOutcome {
    pub exit_code: i32,
    pub reports: Vec<CaseReport>,
    /// Cases that produced no report, with the reason.
    pub errors: Vec<(String, Error)>,
}

fn parse_int(s: &str, what: &'static str) -> Result<Int> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(what, s.trim().to_string()))
}

fn parse_auto_case(line: &str) -> Result<JobCase> {
    let (d, extras) = match line.split_once(':') {
        Some((d, rest)) => (d, Some(rest)),
        None => (line, None),
    };
    let disc = parse_int(d, "discriminant")?;
    let extra_primes = match extras {
        Some(rest) if !rest.trim().is_empty() => rest
            .split(',')
            .map(|p| parse_int(p, "prime"))
            .collect::<Result<Vec<_>>>()?,
        _ => Vec::new(),
    };
    Ok(JobCase::Auto { disc, extra_primes })
}

const MANUAL_KEYS: [&str; 8] = [
    "label",
    "w_F",
    "w_E",
    "zeta_F_S",
    "zeta_E_S",
    "size_S",
    "size_SE",
    "first_layer",
];

fn parse_bool(s: &str) -> Result<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(Error::parse("boolean", other.to_string())),
    }
}

fn parse_size(s: &str, what: &'static str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(what, s.trim().to_string()))
}

fn build_manual(fields: &BTreeMap<String, String>, line: usize) -> Result<ManualRecord> {
    let get = |key: &str| {
        fields.get(key).map(String::as_str).ok_or_else(|| {
            Error::InvalidRecord(format!(
                "manual record ending at line {line}: missing {key}"
            ))
        })
    };
    Ok(ManualRecord {
        label: fields.get("label").cloned(),
        w_f: parse_int(get("w_F")?, "w_F")?,
        w_e: parse_int(get("w_E")?, "w_E")?,
        zeta_f_s: parse_rational(get("zeta_F_S")?)?,
        zeta_e_s: parse_rational(get("zeta_E_S")?)?,
        size_s: parse_size(get("size_S")?, "size_S")?,
        size_se: parse_size(get("size_SE")?, "size_SE")?,
        first_layer: parse_bool(get("first_layer")?)?,
    })
}

pub fn parse_job(text: &str) -> Result<JobSpec> {
    let mut cases = Vec::new();
    let mut block: Option<BTreeMap<String, String>> = None;
    let close = |block: &mut Option<BTreeMap<String, String>>,
                 cases: &mut Vec<JobCase>,
                 line: usize|
     -> Result<()> {
        if let Some(fields) = block.take() {
            cases.push(JobCase::Manual(build_manual(&fields, line)?));
        }
        Ok(())
    };
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() || line.eq_ignore_ascii_case("end") {
            close(&mut block, &mut cases, lineno)?;
        } else if line.eq_ignore_ascii_case("manual") {
            close(&mut block, &mut cases, lineno)?;
            block = Some(BTreeMap::new());
        } else if let Some((key, value)) = line.split_once('=') {
            let key = key.trim();
            if !MANUAL_KEYS.contains(&key) {
                return Err(Error::InvalidRecord(format!(
                    "line {lineno}: unknown manual key {key:?}"
                )));
            }
            let fields = block.get_or_insert_with(BTreeMap::new);
            if fields
                .insert(key.to_string(), value.trim().to_string())
                .is_some()
            {
                return Err(Error::InvalidRecord(format!(
                    "line {lineno}: duplicate manual key {key:?}"
                )));
            }
        } else {
            close(&mut block, &mut cases, lineno)?;
            cases.push(
                parse_auto_case(line)
                    .map_err(|e| Error::InvalidRecord(format!("line {lineno}: {e}")))?,
            );
        }
    }
    close(&mut block, &mut cases, text.lines().count())?;
    Ok(JobSpec { cases })
}

/// Auto mode jobs for every fundamental discriminant `D ≤ dmax`, minimal `S`.
pub fn discriminant_range(dmax: Int) -> JobSpec {
    JobSpec {
        cases: (2..=dmax)
            .filter(|&d| crate::arithmetic::is_fundamental_discriminant(d))
            .map(|disc| JobCase::Auto {
                disc,
                extra_primes: Vec::new(),
            })
            .collect(),
    }
}

/// Evaluates all cases in parallel and orders reports by `D`, then extra
/// primes, then manual label. Exit status: 2 if any case had invalid input,
/// otherwise 1 if any check failed or a Birch–Tate alarm was raised in auto
/// mode, otherwise 0.
pub fn run_job(spec: &JobSpec) -> JobOutcome {
    let mut cases = spec.cases.clone();
    cases.sort_by_key(JobCase::sort_key);
    let results: Vec<(JobCase, Result<CaseReport>)> = cases
        .into_par_iter()
        .map(|case| {
            let res = match &case {
                JobCase::Auto { disc, extra_primes } => verify_case(*disc, extra_primes),
                JobCase::Manual(r) => manual_case(r),
            };
            (case, res)
        })
        .collect();

    let mut reports = Vec::new();
    let mut errors = Vec::new();
    let mut input_error = false;
    let mut math_failure = false;
    for (case, res) in results {
        match res {
            Ok(report) => {
                math_failure |= !report.passed();
                reports.push(report);
            }
            Err(e) => {
                match (&case, e.is_mathematical_alarm()) {
                    (JobCase::Auto { .. }, true) => math_failure = true,
                    _ => input_error = true,
                }
                errors.push((case.describe(), e));
            }
        }
    }
    let exit_code = if input_error {
        EXIT_INPUT_ERROR
    } else if math_failure {
        EXIT_CHECK_FAILED
    } else {
        EXIT_PASS
    };
    JobOutcome {
        exit_code,
        reports,
        errors,
    }
}
