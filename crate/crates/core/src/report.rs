//! JSON report of a verification sweep.
//!
//! Serialization goes through `serde_json::Value`, whose maps are sorted, so
//! identical sweeps produce identical bytes. Timing is omitted unless set.

use serde::Serialize;

use crate::bijection::VerificationReport;
use crate::partitions::BarPartition;
use crate::signs::{Sign, SpinContext};

pub const SCHEMA: &str = "spin-weights/verify/1";

#[derive(Debug, Clone, Serialize)]
pub struct Params {
    pub n: usize,
    pub p: u64,
    pub eta: Sign,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counts {
    #[serde(rename = "self")]
    pub self_associated: usize,
    pub nonself: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightCounts {
    pub sym_plus: usize,
    pub sym_minus: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MuRow {
    pub lambda: BarPartition,
    pub mu: Sign,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockRecord {
    pub kappa: BarPartition,
    pub w: usize,
    pub ibr: Counts,
    pub weights: WeightCounts,
    pub mu_table: Vec<MuRow>,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub params: Params,
    pub blocks: Vec<BlockRecord>,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

impl ReportDocument {
    pub fn new(n: usize, ctx: SpinContext, reports: &[VerificationReport]) -> Self {
        let blocks = reports
            .iter()
            .map(|r| BlockRecord {
                kappa: r.block.kappa.clone(),
                w: r.w,
                ibr: Counts {
                    self_associated: r.ibr_self,
                    nonself: r.ibr_nonself,
                },
                weights: WeightCounts {
                    sym_plus: r.weights_sym_plus,
                    sym_minus: r.weights_sym_minus,
                },
                mu_table: r
                    .mu_table
                    .iter()
                    .map(|m| MuRow {
                        lambda: m.lambda.clone(),
                        mu: m.mu_lambda,
                    })
                    .collect(),
                verdict: verdict(r.passed()),
                failure: r.failure.clone(),
                note: r.note.clone(),
            })
            .collect();
        ReportDocument {
            schema: SCHEMA,
            params: Params {
                n,
                p: ctx.p.get(),
                eta: ctx.eta,
            },
            blocks,
            verdict: verdict(reports.iter().all(VerificationReport::passed)),
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "PASS"
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
        text.push('\n');
        text
    }
}
