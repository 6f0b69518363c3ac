//! Machine-readable reports and their text rendering.
//!
//! Reports are deterministic: struct fields serialize in a fixed order,
//! maps are sorted by key, sets are sorted arrays, and every rational is a
//! reduced string. Identical inputs therefore produce byte-identical JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use antinef::classify::{self, ClassificationReport, SpreadClass};
use antinef::cycles::{FundamentalCycle, GProvenance, GSource};
use antinef::zariski::{oracle_decompose, ZariskiDecomposition};
use antinef::{QDivisor, ValidatedConfig};

use crate::error::CliError;
use crate::schema::{divisor_integers, divisor_strings, format_rational};

pub const CAVEAT_SPREAD: &str = "spread ZeroOrOne: whether the analytic spread is 0 or 1 is not \
     determined by the intersection data; it can depend on torsion of line-bundle classes, which \
     the dual graph does not record.";

pub const CAVEAT_G: &str = "alpha was computed with G = fundamental cycle; this is exact when \
     the singularity is rational and may underestimate G (and alpha) otherwise.";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateBlock {
    /// Leading principal minors of the intersection matrix, order 1..=r.
    pub minors: Vec<String>,
    /// Their signs; alternates "-", "+", … on a valid configuration.
    pub minor_signs: Vec<String>,
    pub antinef_ok: bool,
    pub support_orthogonality_ok: bool,
    /// Present only when the enumeration oracle was run alongside.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionBlock {
    pub delta: BTreeMap<String, String>,
    pub b: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBlock {
    pub alpha: String,
    /// The bounded remainder of the Hilbert function is not computable from
    /// intersection data; the field records that explicitly.
    pub sigma: String,
}

/// Output of `decompose` (and the fragment embedded in classify reports).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub divisor: BTreeMap<String, String>,
    pub decomposition: DecompositionBlock,
    pub certificate: CertificateBlock,
}

/// Output of `fundcycle`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundCycleReport {
    pub z: BTreeMap<String, i64>,
    pub laufer_steps: u64,
}

/// Output of `check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub rank: usize,
    pub minors: Vec<String>,
    pub minor_signs: Vec<String>,
}

/// The full classification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub divisor: BTreeMap<String, String>,
    pub decomposition: DecompositionBlock,
    pub certificate: CertificateBlock,
    pub spread: String,
    pub mr_associated_eventually: bool,
    pub redundant_exceptional: Vec<String>,
    pub negative_wall: Vec<String>,
    pub persistent_fixed_candidates: Vec<String>,
    /// Present iff the spread class is ZeroOrOne.
    pub symbolic_form: Option<Vec<(String, String)>>,
    pub hilbert: HilbertBlock,
    pub g: BTreeMap<String, i64>,
    pub g_provenance: String,
    /// Reserved for a future certificate distinguishing spread 0 from 1;
    /// never populated.
    pub spread_certificate: Option<String>,
    pub caveats: Vec<String>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}

pub fn check_report(cfg: &ValidatedConfig) -> CheckReport {
    CheckReport {
        rank: cfg.rank(),
        minors: cfg.form().minors().iter().map(|m| m.to_string()).collect(),
        minor_signs: cfg
            .form()
            .minor_signs()
            .iter()
            .map(|&s| if s < 0 { "-".into() } else { "+".into() })
            .collect(),
    }
}

fn certificate_block(
    cfg: &ValidatedConfig,
    dec: &ZariskiDecomposition,
    oracle_agreement: Option<bool>,
) -> CertificateBlock {
    let check = check_report(cfg);
    CertificateBlock {
        minors: check.minors,
        minor_signs: check.minor_signs,
        antinef_ok: dec.certificate.antinef_ok,
        support_orthogonality_ok: dec.certificate.support_orthogonality_ok,
        oracle_agreement,
    }
}

fn decomposition_block(cfg: &ValidatedConfig, dec: &ZariskiDecomposition) -> DecompositionBlock {
    DecompositionBlock {
        delta: divisor_strings(cfg, &dec.delta),
        b: divisor_strings(cfg, &dec.b),
    }
}

/// Run the oracle and compare when requested. A disagreement is an internal
/// certificate failure, never expected on a validated configuration.
pub fn oracle_agreement(
    cfg: &ValidatedConfig,
    d: &QDivisor,
    dec: &ZariskiDecomposition,
    run_oracle: bool,
) -> Result<Option<bool>, CliError> {
    if !run_oracle {
        return Ok(None);
    }
    let reference = oracle_decompose(cfg, d)?;
    if &reference != dec {
        return Err(CliError::Internal(
            "oracle disagreement: enumeration produced a different decomposition".into(),
        ));
    }
    Ok(Some(true))
}

pub fn decompose_report(
    cfg: &ValidatedConfig,
    d: &QDivisor,
    dec: &ZariskiDecomposition,
    oracle_agreement: Option<bool>,
) -> DecomposeReport {
    DecomposeReport {
        divisor: divisor_strings(cfg, d),
        decomposition: decomposition_block(cfg, dec),
        certificate: certificate_block(cfg, dec, oracle_agreement),
    }
}

pub fn fundcycle_report(
    cfg: &ValidatedConfig,
    fc: &FundamentalCycle,
) -> Result<FundCycleReport, CliError> {
    Ok(FundCycleReport {
        z: divisor_integers(cfg, &fc.z)?,
        laufer_steps: fc.laufer_steps,
    })
}

/// Assemble the full classification report for a divisor.
pub fn classification_report(
    cfg: &ValidatedConfig,
    d: &QDivisor,
    g_source: &GSource,
    oracle_agreement: Option<bool>,
) -> Result<ReportFile, CliError> {
    let report: ClassificationReport = classify::classification_report(cfg, d, g_source)?;
    let (g, provenance) = antinef::resolve_g(cfg, g_source)?;

    let spread = match report.spread {
        SpreadClass::Two => "Two",
        SpreadClass::ZeroOrOne => "ZeroOrOne",
    };
    let mut caveats = Vec::new();
    if report.spread == SpreadClass::ZeroOrOne {
        caveats.push(CAVEAT_SPREAD.to_string());
    }
    if provenance == GProvenance::FundamentalCycle {
        caveats.push(CAVEAT_G.to_string());
    }

    Ok(ReportFile {
        divisor: divisor_strings(cfg, d),
        decomposition: decomposition_block(cfg, &report.decomposition),
        certificate: certificate_block(cfg, &report.decomposition, oracle_agreement),
        spread: spread.to_string(),
        mr_associated_eventually: report.mr_associated_eventually,
        redundant_exceptional: report.redundant_exceptional.into_iter().collect(),
        negative_wall: report.negative_wall.into_iter().collect(),
        persistent_fixed_candidates: report.persistent_fixed_candidates.into_iter().collect(),
        symbolic_form: report.symbolic_form.map(|items| {
            items
                .into_iter()
                .map(|(label, c)| (label, format_rational(&c)))
                .collect()
        }),
        hilbert: HilbertBlock {
            alpha: format_rational(&report.hilbert.alpha),
            sigma: "bounded, not computed".to_string(),
        },
        g: divisor_integers(cfg, &g)?,
        g_provenance: match provenance {
            GProvenance::FundamentalCycle => "fundamental_cycle".to_string(),
            GProvenance::User => "user".to_string(),
        },
        spread_certificate: None,
        caveats,
    })
}

/// Render a divisor as `2·E1 + (1/2)·F`, or `0`.
pub fn render_divisor(coeffs: &BTreeMap<String, String>) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    coeffs
        .iter()
        .map(|(label, c)| match c.as_str() {
            "1" => label.clone(),
            c if c.contains('/') || c.starts_with('-') => format!("({c})·{label}"),
            c => format!("{c}·{label}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn render_check(report: &CheckReport) -> String {
    format!(
        "ok: negative definite\nrank: {}\nminors: [{}]\nsigns: [{}]\n",
        report.rank,
        report.minors.join(", "),
        report.minor_signs.join(", "),
    )
}

pub fn render_decompose(report: &DecomposeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("D = {}\n", render_divisor(&report.divisor)));
    out.push_str(&format!(
        "Δ = {}\nB = {}\n",
        render_divisor(&report.decomposition.delta),
        render_divisor(&report.decomposition.b),
    ));
    out.push_str(&format!(
        "certificate: anti-nef {}; (Δ·E) = 0 on supp(B) {}\n",
        if report.certificate.antinef_ok { "ok" } else { "FAILED" },
        if report.certificate.support_orthogonality_ok { "ok" } else { "FAILED" },
    ));
    if let Some(agreement) = report.certificate.oracle_agreement {
        out.push_str(&format!(
            "oracle agreement: {}\n",
            if agreement { "yes" } else { "NO" }
        ));
    }
    out
}

pub fn render_fundcycle(report: &FundCycleReport) -> String {
    let rendered = report
        .z
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect();
    format!(
        "Z = {}\nsteps: {}\n",
        render_divisor(&rendered),
        report.laufer_steps
    )
}

pub fn render_classification(report: &ReportFile) -> String {
    let mut out = String::new();
    out.push_str(&format!("D = {}\n", render_divisor(&report.divisor)));
    out.push_str(&format!(
        "Δ = {}\nB = {}\n",
        render_divisor(&report.decomposition.delta),
        render_divisor(&report.decomposition.b),
    ));
    out.push_str(&format!("spread: {}\n", report.spread));
    out.push_str(&format!(
        "m_R eventually an associated prime: {}\n",
        if report.mr_associated_eventually { "yes" } else { "no" }
    ));
    out.push_str(&format!(
        "negative wall: {{{}}}\n",
        report.negative_wall.join(", ")
    ));
    out.push_str(&format!(
        "redundant exceptional valuations: {{{}}}\n",
        report.redundant_exceptional.join(", ")
    ));
    out.push_str(&format!(
        "persistent fixed-component candidates: {{{}}}\n",
        report.persistent_fixed_candidates.join(", ")
    ));
    match &report.symbolic_form {
        Some(parts) if parts.is_empty() => {
            out.push_str("symbolic form: I(nD) = R for all n (zero divisor)\n");
        }
        Some(parts) => {
            let inner = parts
                .iter()
                .map(|(label, c)| format!("Q_{label}^(⌈n·{c}⌉)"))
                .collect::<Vec<_>>()
                .join(" ∩ ");
            out.push_str(&format!("symbolic form: I(nD) = {inner}\n"));
        }
        None => out.push_str("symbolic form: none (spread is Two)\n"),
    }
    out.push_str(&format!(
        "hilbert slope: alpha = {} (G from {}; sigma {})\n",
        report.hilbert.alpha, report.g_provenance, report.hilbert.sigma
    ));
    for caveat in &report.caveats {
        out.push_str(&format!("caveat: {caveat}\n"));
    }
    out
}
