//! Serialized report shapes. Everything a run can claim lands in one of
//! these documents; runtime fields are informational and excluded from
//! determinism comparisons.

use hartogs_core::{AuditOutcome, ContinuationReport, CurveSearchResult};
use num_complex::Complex64;
use serde::Serialize;

use crate::config::{Cx, RunConfig};

pub fn cx_out(c: Complex64) -> Cx {
    [c.re, c.im]
}

#[derive(Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl ToolInfo {
    pub fn current() -> Self {
        ToolInfo {
            name: "hartogs",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Serialize)]
pub struct AuditRecord {
    pub name: &'static str,
    pub pass: bool,
    pub margin: f64,
    pub worst: String,
    pub runtime_seconds: f64,
}

impl From<AuditOutcome> for AuditRecord {
    fn from(o: AuditOutcome) -> Self {
        AuditRecord {
            name: o.name,
            pass: o.pass,
            margin: o.margin,
            worst: o.worst,
            runtime_seconds: o.runtime_seconds,
        }
    }
}

#[derive(Serialize)]
pub struct AuditReport {
    pub tool: ToolInfo,
    pub config: RunConfig,
    pub audits: Vec<AuditRecord>,
    pub all_pass: bool,
}

#[derive(Serialize)]
pub struct CurveRecord {
    pub spec: String,
    pub degree: u32,
    /// Best scale-free magnitude of the curve polynomial over the disc.
    pub minimum: f64,
    pub chart: &'static str,
    pub location: [f64; 2],
    pub evaluations: usize,
    /// Independent coarse-grid minimum, as a cross-check on the search.
    pub grid_minimum: f64,
    pub pass: bool,
}

impl CurveRecord {
    pub fn new(
        spec: String,
        degree: u32,
        search: &CurveSearchResult,
        grid_minimum: f64,
        threshold: f64,
    ) -> Self {
        CurveRecord {
            spec,
            degree,
            minimum: search.minimum,
            chart: search.location.chart.as_str(),
            location: [search.location.x, search.location.y],
            evaluations: search.evaluations,
            grid_minimum,
            pass: search.minimum.min(grid_minimum) < threshold,
        }
    }
}

#[derive(Serialize)]
pub struct IntersectReport {
    pub tool: ToolInfo,
    pub seed: u64,
    pub threshold: f64,
    pub curves: Vec<CurveRecord>,
    pub all_pass: bool,
    /// What these minima do and do not establish.
    pub scope_note: &'static str,
}

pub const INTERSECT_SCOPE_NOTE: &str =
    "Minima are numerical witnesses for finitely many curves; a minimum above \
     the threshold reports where the search and the confirming grid both \
     stayed away from zero, not a non-intersection proof.";

#[derive(Serialize)]
pub struct SweepRecord {
    pub t: f64,
    pub nodes: usize,
    pub boundary_den_min: f64,
    pub boundary_max: f64,
    pub interior_max: f64,
    pub mismatch: f64,
    pub coherence: Option<f64>,
    pub winding_num: Option<i64>,
    pub winding_den: Option<i64>,
    pub flagged: bool,
}

#[derive(Serialize)]
pub struct SweepReport {
    pub element: String,
    pub t_star: Option<f64>,
    pub winding_at_flag: Option<i64>,
    pub origin_value: Option<Cx>,
    pub records: Vec<SweepRecord>,
    pub scope_note: &'static str,
}

impl From<ContinuationReport> for SweepReport {
    fn from(r: ContinuationReport) -> Self {
        SweepReport {
            element: r.element,
            t_star: r.t_star,
            winding_at_flag: r.winding_at_flag,
            origin_value: r.origin_value.map(cx_out),
            records: r
                .records
                .into_iter()
                .map(|rec| SweepRecord {
                    t: rec.t,
                    nodes: rec.nodes,
                    boundary_den_min: rec.boundary_den_min,
                    boundary_max: rec.boundary_max,
                    interior_max: rec.interior_max,
                    mismatch: rec.mismatch,
                    coherence: rec.coherence,
                    winding_num: rec.winding_num,
                    winding_den: rec.winding_den,
                    flagged: rec.flagged,
                })
                .collect(),
            scope_note: r.scope_note,
        }
    }
}

#[derive(Serialize)]
pub struct ContinueReport {
    pub tool: ToolInfo,
    pub sweeps: Vec<SweepReport>,
}
