//! Analytic disc families in the complex projective plane.
//!
//! The crate builds, audits and explores a one-parameter family of analytic
//! discs sitting on a smooth quadric surface, the thin Hartogs figure the
//! family traces out, and the smoothed disc obtained by capping the family
//! with a shrinking radius schedule. On top of the geometry it provides the
//! verification instruments the construction is for: Cauchy-transform
//! continuation of rational function elements along the family, and multistart
//! searches for intersections with algebraic curves.

pub mod audit;
pub mod continuation;
pub mod curve_search;
pub mod discs;
pub mod error;
pub mod figure;
pub mod poly_spec;
pub mod projective;
pub mod quadric;
pub mod tolerances;

pub use audit::{
    all_pass, run_manifest, run_manifest_for, AuditDensities, AuditOutcome, AUDIT_NAMES,
};
pub use continuation::{
    cauchy_reconstruct, continuation_sweep, figure_neighborhood_margin, uniform_grid,
    winding_number, winding_on_boundary, ContinuationRecord, ContinuationReport, FunctionElement,
};
pub use curve_search::{
    curve_min_on_disc, grid_min, grid_points, random_curve, ChartPoint, CurveSearchResult,
    SearchChart,
};
pub use discs::{
    holomorphy_residual_map, AnalyticDisc, DiscFamilyConfig, FamilyParams, LineCrossing, Submersion,
};
pub use error::{Error, Result};
pub use figure::{
    blowup_eval, injectivity_audit, radius_schedule, Chart, DiscRegion, FigurePoint, FigureSample,
    HartogsFigure, InjectivityReport, SmoothedDisc,
};
pub use poly_spec::{parse_element, parse_polynomial};
pub use projective::{project, C3Vector, HomogeneousPolynomial, ProjectivePoint};
pub use quadric::{
    bezout_intersection, lines_through_origin, transversality_certificate, BezoutIntersection,
    OriginLine, Quadric, TransversalityReport,
};
pub use tolerances::Tolerances;
