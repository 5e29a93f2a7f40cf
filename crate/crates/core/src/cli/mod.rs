//! Command-line plumbing shared by the `bicyc` binary and its tests.

mod export;
mod parse;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::{verify_certificate, CycleCertificate, EdgeCounts};
use crate::construct::plan_pipeline;
use crate::dispatch::theorem13_applicable;
use crate::params::{BicirculantParams, Vertex};
use crate::structure::{decompose, prime_power_factor_count};

pub use export::{edge_set, export_graph, ExportError, ExportFormat};
pub use parse::{parse_params, render_params, ParseError};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const REJECTED: i32 = 3;
    pub const BUDGET: i32 = 4;
}

/// On-disk form of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub params: String,
    pub cycle: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<EdgeCounts>,
}

impl CertificateFile {
    pub fn new(p: &BicirculantParams, cert: &CycleCertificate) -> Self {
        CertificateFile {
            params: render_params(p),
            cycle: cert.vertices().to_vec(),
            counts: Some(cert.counts()),
        }
    }
}

/// Machine-readable result of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<EdgeCounts>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl VerifyReport {
    fn reject(exit_code: i32, reason: &str, detail: impl Into<String>) -> Self {
        VerifyReport {
            valid: false,
            reason: Some(reason.to_string()),
            detail: Some(detail.into()),
            counts: None,
            exit_code,
        }
    }
}

/// Checks the certificate JSON `certificate` against `params_text`.
pub fn verify_cmd(params_text: &str, certificate: &str) -> VerifyReport {
    let p = match parse_params(params_text) {
        Ok(p) => p,
        Err(e) => return VerifyReport::reject(exit::INPUT, "BadParams", e.to_string()),
    };
    let file: CertificateFile = match serde_json::from_str(certificate) {
        Ok(f) => f,
        Err(e) => return VerifyReport::reject(exit::INPUT, "Schema", e.to_string()),
    };
    match parse_params(&file.params) {
        Ok(q) if q == p => {}
        Ok(q) => {
            return VerifyReport::reject(
                exit::INPUT,
                "ParamsMismatch",
                format!("certificate is for {q}, not {p}"),
            )
        }
        Err(e) => return VerifyReport::reject(exit::INPUT, "Schema", format!("params field: {e}")),
    }
    match verify_certificate(&p, &file.cycle) {
        Ok(cert) => {
            if file.counts.is_some_and(|c| c != cert.counts()) {
                return VerifyReport::reject(
                    exit::REJECTED,
                    "CountsMismatch",
                    "stated edge counts are wrong",
                );
            }
            VerifyReport {
                valid: true,
                reason: None,
                detail: None,
                counts: Some(cert.counts()),
                exit_code: exit::OK,
            }
        }
        Err(e) => VerifyReport::reject(exit::REJECTED, e.code(), e.to_string()),
    }
}

/// Structural summary printed by `info`.
pub fn info_json(p: &BicirculantParams) -> serde_json::Value {
    let d = decompose(p);
    let plan = plan_pipeline(p).ok();
    json!({
        "params": render_params(p),
        "m": p.m(),
        "order": p.order(),
        "degree": p.degree(),
        "spokes": p.spokes().len(),
        "components": d.delta,
        "quotient": render_params(&d.quotient),
        "spoke_gcd": p.spoke_gcd(),
        "prime_power_factors": prime_power_factor_count(p.m()),
        "spanning_witness": theorem13_applicable(p),
        "pipeline_plan": plan,
    })
}
