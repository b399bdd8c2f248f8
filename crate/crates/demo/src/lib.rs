//! Browser demo bindings: point clouds for the figure and the smoothed disc,
//! a single-disc slice for the t-slider, one-element continuation sweeps, and
//! curve minimization. The `wasm_bindgen` exports compile to plain functions
//! off wasm, so the same crate carries native unit tests.

use hartogs_core::{
    continuation_sweep, curve_min_on_disc, grid_min, grid_points, parse_element, parse_polynomial,
    radius_schedule, uniform_grid, C3Vector, DiscFamilyConfig, FunctionElement, SmoothedDisc,
};
use num_complex::Complex64;
use serde_json::json;
use std::f64::consts::TAU;
use wasm_bindgen::prelude::*;

/// Chart codes in cloud rows: base 0, cylinder 1, cap 2, collar 3, slice 4.
/// Each row is 7 floats: [chart, z1_re, z1_im, z2_re, z2_im, z3_re, z3_im].
pub const ROW_LEN: usize = 7;

fn standard() -> Result<DiscFamilyConfig, String> {
    DiscFamilyConfig::standard().map_err(|e| e.to_string())
}

fn push_row(out: &mut Vec<f64>, chart: f64, z: &C3Vector) {
    out.push(chart);
    for c in &z.coords {
        out.push(c.re);
        out.push(c.im);
    }
}

/// Vogel spiral covering |w| ≤ radius; even area density without grid bias.
fn spiral(n: usize, radius: f64) -> impl Iterator<Item = Complex64> {
    let golden = TAU * (1.0 - 1.0 / ((5.0f64).sqrt() * 0.5 + 0.5));
    (0..n).map(move |k| {
        let r = radius * (((k as f64) + 0.5) / n as f64).sqrt();
        Complex64::from_polar(r, golden * k as f64)
    })
}

/// Affine point cloud for `shape` ("figure" or "disc"); `density` scales all
/// strata together. Rows as in [`ROW_LEN`].
pub fn cloud(shape: &str, density: usize) -> Result<Vec<f64>, String> {
    let cfg = standard()?;
    let d = density.clamp(4, 64);
    let mut out = Vec::new();
    let eval = |t: f64, w: Complex64| cfg.disc_eval(t, w).map_err(|e| e.to_string());
    match shape {
        "figure" => {
            for w in spiral(4 * d * d, 1.0) {
                push_row(&mut out, 0.0, &eval(0.0, w)?);
            }
            for level in 0..d {
                let t = level as f64 / (d - 1) as f64;
                for ia in 0..4 * d {
                    let w = Complex64::from_polar(1.0, TAU * ia as f64 / (4 * d) as f64);
                    push_row(&mut out, 1.0, &eval(t, w)?);
                }
            }
        }
        "disc" => {
            let v = cfg.params().v_radius;
            push_row(&mut out, 2.0, &eval(1.0, Complex64::new(0.0, 0.0))?);
            for w in spiral(d * d, v) {
                push_row(&mut out, 2.0, &eval(1.0, w)?);
            }
            let t_max = 1.0 - cfg.params().t_clamp_delta;
            for level in 0..d {
                let t = t_max * level as f64 / (d - 1) as f64;
                let r = radius_schedule(t).map_err(|e| e.to_string())?;
                for ia in 0..4 * d {
                    let w = Complex64::from_polar(r, TAU * ia as f64 / (4 * d) as f64);
                    push_row(&mut out, 3.0, &eval(t, w)?);
                }
            }
        }
        other => return Err(format!("unknown shape '{other}' (figure | disc)")),
    }
    Ok(out)
}

/// One analytic disc A_t sampled on concentric circles, for the t-slider.
pub fn slice(t: f64, density: usize) -> Result<Vec<f64>, String> {
    if !(0.0..=1.0).contains(&t) {
        return Err(format!("t = {t} outside [0, 1]"));
    }
    let cfg = standard()?;
    let d = density.clamp(4, 64);
    let mut out = Vec::new();
    push_row(
        &mut out,
        4.0,
        &cfg.disc_eval(t, Complex64::new(0.0, 0.0))
            .map_err(|e| e.to_string())?,
    );
    for ring in 1..=d {
        let r = ring as f64 / d as f64;
        for ia in 0..6 * d {
            let w = Complex64::from_polar(r, TAU * ia as f64 / (6 * d) as f64);
            push_row(
                &mut out,
                4.0,
                &cfg.disc_eval(t, w).map_err(|e| e.to_string())?,
            );
        }
    }
    Ok(out)
}

fn element_from(spec: &str) -> Result<FunctionElement, String> {
    match spec.trim() {
        "clean" => Ok(FunctionElement::clean_default()),
        "pole" => Ok(FunctionElement::pole_crossing_default()),
        s => parse_element(s).map_err(|e| e.to_string()),
    }
}

/// Continuation sweep as JSON: per-level reconstruction mismatch, the flagged
/// onset t*, winding there, and the continued value at the origin.
pub fn continuation(element: &str, levels: usize, nodes: usize) -> Result<String, String> {
    let cfg = standard()?;
    let el = element_from(element)?;
    let grid = uniform_grid(levels.clamp(5, 101));
    let report =
        continuation_sweep(&el, &cfg, &grid, nodes.clamp(64, 4096)).map_err(|e| e.to_string())?;
    let records: Vec<_> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "t": r.t,
                "mismatch": r.mismatch,
                "flagged": r.flagged,
                "winding": r.winding_num,
            })
        })
        .collect();
    Ok(json!({
        "element": report.element,
        "t_star": report.t_star,
        "winding_at_flag": report.winding_at_flag,
        "origin": report.origin_value.map(|v| [v.re, v.im]),
        "records": records,
    })
    .to_string())
}

/// Minimum of a homogeneous curve over the smoothed disc as JSON: multistart
/// search refined against a coarse grid oracle.
pub fn curve_minimum(
    curve: &str,
    multistart: usize,
    grid_n: usize,
    seed: u64,
) -> Result<String, String> {
    let cfg = standard()?;
    let threshold = cfg.tolerances().curve_min;
    let q = parse_polynomial(curve).map_err(|e| e.to_string())?;
    if q.is_zero() {
        return Err("the zero polynomial defines no curve".into());
    }
    let disc = SmoothedDisc::new(cfg).map_err(|e| e.to_string())?;
    let search =
        curve_min_on_disc(&disc, &q, multistart.clamp(1, 64), seed).map_err(|e| e.to_string())?;
    let points = grid_points(&disc, grid_n.clamp(16, 256)).map_err(|e| e.to_string())?;
    let (gm, _) = grid_min(&points, &q);
    let best = search.minimum.min(gm);
    Ok(json!({
        "curve": curve.trim(),
        "minimum": search.minimum,
        "grid_minimum": gm,
        "best": best,
        "hits_disc": best < threshold,
        "chart": search.location.chart.as_str(),
        "location": [search.location.x, search.location.y],
        "evaluations": search.evaluations,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn figure_cloud(shape: &str, density: usize) -> Result<Vec<f64>, JsError> {
    cloud(shape, density).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn disc_slice(t: f64, density: usize) -> Result<Vec<f64>, JsError> {
    slice(t, density).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn continuation_json(element: &str, levels: usize, nodes: usize) -> Result<String, JsError> {
    continuation(element, levels, nodes).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn curve_min_json(
    curve: &str,
    multistart: usize,
    grid_n: usize,
    seed: u64,
) -> Result<String, JsError> {
    curve_minimum(curve, multistart, grid_n, seed).map_err(|m| JsError::new(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hartogs_core::Quadric;

    #[test]
    fn cloud_rows_lie_on_the_surface() {
        let q = Quadric::standard();
        for shape in ["figure", "disc"] {
            let rows = cloud(shape, 8).unwrap();
            assert_eq!(rows.len() % ROW_LEN, 0);
            assert!(rows.len() / ROW_LEN > 100);
            for row in rows.chunks(ROW_LEN) {
                let z = C3Vector {
                    coords: [
                        Complex64::new(row[1], row[2]),
                        Complex64::new(row[3], row[4]),
                        Complex64::new(row[5], row[6]),
                    ],
                };
                assert!(q.eval(&z).norm() < 1e-10, "off-surface row in {shape}");
            }
        }
    }

    #[test]
    fn cloud_charts_match_the_shape() {
        let charts = |rows: &[f64]| {
            let mut seen: Vec<f64> = rows.chunks(ROW_LEN).map(|r| r[0]).collect();
            seen.dedup();
            seen.sort_by(f64::total_cmp);
            seen.dedup();
            seen
        };
        assert_eq!(charts(&cloud("figure", 6).unwrap()), [0.0, 1.0]);
        assert_eq!(charts(&cloud("disc", 6).unwrap()), [2.0, 3.0]);
        assert!(cloud("sphere", 6).is_err());
    }

    #[test]
    fn slice_tracks_the_level() {
        let cfg = DiscFamilyConfig::standard().unwrap();
        let rows = slice(0.4, 6).unwrap();
        let c = cfg.phi(0.4).unwrap();
        for row in rows.chunks(ROW_LEN) {
            assert_eq!(row[0], 4.0);
            let f = Complex64::new(row[1], row[2])
                + Complex64::new(row[3], row[4])
                + Complex64::new(row[5], row[6]);
            assert!((f - c).norm() < 1e-10, "slice row off the level set");
        }
        assert!(slice(1.5, 6).is_err());
    }

    #[test]
    fn continuation_reports_the_pole_onset() {
        let v: serde_json::Value =
            serde_json::from_str(&continuation("pole", 21, 512).unwrap()).unwrap();
        let t_star = v["t_star"].as_f64().unwrap();
        assert!((t_star - 0.7).abs() < 1.5e-3);
        assert!(v["winding_at_flag"].as_i64().unwrap() >= 1);
        let clean: serde_json::Value =
            serde_json::from_str(&continuation("clean", 11, 256).unwrap()).unwrap();
        assert!(clean["t_star"].is_null());
        assert!(continuation("z1 +", 11, 256).is_err());
    }

    #[test]
    fn curve_minimum_finds_the_cap_center_class() {
        let v: serde_json::Value =
            serde_json::from_str(&curve_minimum("z3", 16, 64, 1).unwrap()).unwrap();
        assert!(v["best"].as_f64().unwrap() < 1e-6);
        assert!(v["hits_disc"].as_bool().unwrap());
        assert!(curve_minimum("0", 16, 64, 1).is_err());
    }
}
