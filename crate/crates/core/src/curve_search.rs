//! Minimizing algebraic curves over the smoothed disc.
//!
//! The instrument takes a homogeneous polynomial Q and hunts the minimum of
//! its scale-free magnitude over the smoothed disc — near-zero minima witness
//! an intersection with the curve {Q = 0}. The search is a multistart
//! Nelder–Mead over the disc's two parameter charts (cap: (Re w, Im w),
//! collar: (t, θ)), derivative-free because the objective is a modulus with
//! cone-shaped zeros and the chart seam is only C^∞, not analytic. A brute
//! polar grid provides the independent oracle the search is audited against.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::figure::{DiscRegion, SmoothedDisc};
use crate::projective::{HomogeneousPolynomial, ProjectivePoint};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Quadratic penalty weight for leaving a chart's domain; objective values
/// are ≤ 1, so this dominates quickly without destroying smoothness.
const PENALTY: f64 = 10.0;

/// Nelder–Mead iteration cap per start.
const MAX_ITERS: usize = 200;

/// Chart of the smoothed disc a search point lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchChart {
    Cap,
    Collar,
}

impl SearchChart {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchChart::Cap => "cap",
            SearchChart::Collar => "collar",
        }
    }
}

/// A location on the smoothed disc in chart coordinates: cap (Re w, Im w),
/// collar (t, θ).
#[derive(Debug, Clone, Copy)]
pub struct ChartPoint {
    pub chart: SearchChart,
    pub x: f64,
    pub y: f64,
}

impl ChartPoint {
    pub fn region(&self, disc: &SmoothedDisc) -> DiscRegion {
        clamp_to_domain(disc, self.chart, self.x, self.y).0
    }
}

/// Outcome of a multistart minimization.
#[derive(Debug, Clone)]
pub struct CurveSearchResult {
    /// Best scale-free magnitude found.
    pub minimum: f64,
    pub location: ChartPoint,
    /// Objective evaluations across all starts.
    pub evaluations: usize,
    pub starts: usize,
}

/// Clamp chart coordinates into the chart's domain; returns the evaluable
/// region and the squared distance clamped away.
fn clamp_to_domain(disc: &SmoothedDisc, chart: SearchChart, x: f64, y: f64) -> (DiscRegion, f64) {
    match chart {
        SearchChart::Cap => {
            let v = disc.config().params().v_radius;
            let w = Complex64::new(x, y);
            let r = w.norm();
            if r <= v {
                (DiscRegion::Cap { w }, 0.0)
            } else {
                let clamped = w * (v / r);
                (DiscRegion::Cap { w: clamped }, (r - v) * (r - v))
            }
        }
        SearchChart::Collar => {
            let t = x.clamp(0.0, 1.0);
            let excess = (x - t) * (x - t);
            (DiscRegion::Collar { t, theta: y }, excess)
        }
    }
}

/// Objective: scale-free magnitude of Q at the chart point, plus a quadratic
/// penalty for coordinates clamped back into the domain. Never fails — the
/// clamped region is always evaluable.
fn objective(
    disc: &SmoothedDisc,
    q: &HomogeneousPolynomial,
    chart: SearchChart,
    x: f64,
    y: f64,
) -> f64 {
    let (region, excess) = clamp_to_domain(disc, chart, x, y);
    let p = disc.eval(region).expect("clamped region is evaluable");
    q.normalized_magnitude(&p) + PENALTY * excess
}

/// Hand-rolled 2-variable Nelder–Mead with the standard coefficients
/// (reflect 1, expand 2, contract 1/2, shrink 1/2). Returns the best vertex,
/// its value, and the evaluation count.
fn nelder_mead<F: FnMut(f64, f64) -> f64>(
    mut f: F,
    start: (f64, f64),
    scale: f64,
    max_iters: usize,
) -> ((f64, f64), f64, usize) {
    let mut evals = 0usize;
    let mut eval = |p: (f64, f64), evals: &mut usize| {
        *evals += 1;
        f(p.0, p.1)
    };

    let mut simplex = [
        (start, 0.0),
        ((start.0 + scale, start.1), 0.0),
        ((start.0, start.1 + scale), 0.0),
    ];
    for v in simplex.iter_mut() {
        v.1 = eval(v.0, &mut evals);
    }

    for _ in 0..max_iters {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (best, worst) = (simplex[0], simplex[2]);

        let diam = ((simplex[1].0 .0 - best.0 .0).abs())
            .max((simplex[1].0 .1 - best.0 .1).abs())
            .max((worst.0 .0 - best.0 .0).abs())
            .max((worst.0 .1 - best.0 .1).abs());
        if diam < 1e-14 && (worst.1 - best.1).abs() < 1e-16 {
            break;
        }

        let centroid = (
            0.5 * (simplex[0].0 .0 + simplex[1].0 .0),
            0.5 * (simplex[0].0 .1 + simplex[1].0 .1),
        );
        let dir = (centroid.0 - worst.0 .0, centroid.1 - worst.0 .1);

        let reflected = (centroid.0 + dir.0, centroid.1 + dir.1);
        let fr = eval(reflected, &mut evals);

        if fr < best.1 {
            let expanded = (centroid.0 + 2.0 * dir.0, centroid.1 + 2.0 * dir.1);
            let fe = eval(expanded, &mut evals);
            simplex[2] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < simplex[1].1 {
            simplex[2] = (reflected, fr);
        } else {
            let contracted = if fr < worst.1 {
                (centroid.0 + 0.5 * dir.0, centroid.1 + 0.5 * dir.1)
            } else {
                (centroid.0 - 0.5 * dir.0, centroid.1 - 0.5 * dir.1)
            };
            let fc = eval(contracted, &mut evals);
            if fc < worst.1.min(fr) {
                simplex[2] = (contracted, fc);
            } else {
                // Shrink toward the best vertex.
                for v in simplex.iter_mut().skip(1) {
                    let p = (
                        best.0 .0 + 0.5 * (v.0 .0 - best.0 .0),
                        best.0 .1 + 0.5 * (v.0 .1 - best.0 .1),
                    );
                    *v = (p, eval(p, &mut evals));
                }
            }
        }
    }

    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    (simplex[0].0, simplex[0].1, evals)
}

/// Multistart minimization of Q's scale-free magnitude over the smoothed
/// disc. Starts alternate between the cap and collar charts, drawn uniformly;
/// deterministic for a given seed.
pub fn curve_min_on_disc(
    disc: &SmoothedDisc,
    q: &HomogeneousPolynomial,
    multistart: usize,
    seed: u64,
) -> Result<CurveSearchResult> {
    if q.is_zero() {
        return Err(Error::invalid("cannot search for the zero polynomial"));
    }
    if multistart == 0 {
        return Err(Error::domain("need at least one start"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = disc.config().params().v_radius;

    let mut best: Option<CurveSearchResult> = None;
    let mut total_evals = 0usize;

    for i in 0..multistart {
        let chart = if i % 2 == 0 {
            SearchChart::Cap
        } else {
            SearchChart::Collar
        };
        let (start, scale) = match chart {
            SearchChart::Cap => {
                let r = v * rng.random_range(0.0f64..1.0).sqrt();
                let a = rng.random_range(0.0..TAU);
                ((r * a.cos(), r * a.sin()), 0.3 * v)
            }
            SearchChart::Collar => (
                (rng.random_range(0.0f64..1.0), rng.random_range(0.0..TAU)),
                0.3,
            ),
        };
        let (p, value, evals) = nelder_mead(
            |x, y| objective(disc, q, chart, x, y),
            start,
            scale,
            MAX_ITERS,
        );
        total_evals += evals;
        let better = best.as_ref().is_none_or(|b| value < b.minimum);
        if better {
            best = Some(CurveSearchResult {
                minimum: value,
                location: ChartPoint {
                    chart,
                    x: p.0,
                    y: p.1,
                },
                evaluations: total_evals,
                starts: multistart,
            });
        }
    }

    let mut result = best.expect("at least one start ran");
    result.evaluations = total_evals;
    Ok(result)
}

/// Precomputed evaluation grid over both charts: an n×n polar grid on the cap
/// (plus the exact center, where the blow-up class lives) and an n×n (t, θ)
/// grid on the collar. Shared across curves so a batch audit pays the
/// geometry cost once.
pub fn grid_points(disc: &SmoothedDisc, n: usize) -> Result<Vec<(ChartPoint, ProjectivePoint)>> {
    if n < 2 {
        return Err(Error::domain("grid needs n >= 2"));
    }
    let v = disc.config().params().v_radius;
    let mut out = Vec::with_capacity(2 * n * n + 1);
    let center = DiscRegion::Cap {
        w: Complex64::new(0.0, 0.0),
    };
    out.push((
        ChartPoint {
            chart: SearchChart::Cap,
            x: 0.0,
            y: 0.0,
        },
        disc.eval(center)?,
    ));
    for i in 0..n {
        let r = v * (i + 1) as f64 / n as f64;
        for j in 0..n {
            let theta = TAU * j as f64 / n as f64;
            let w = Complex64::from_polar(r, theta);
            out.push((
                ChartPoint {
                    chart: SearchChart::Cap,
                    x: w.re,
                    y: w.im,
                },
                disc.eval(DiscRegion::Cap { w })?,
            ));
        }
    }
    for i in 0..n {
        let t = i as f64 / (n - 1) as f64;
        for j in 0..n {
            let theta = TAU * j as f64 / n as f64;
            out.push((
                ChartPoint {
                    chart: SearchChart::Collar,
                    x: t,
                    y: theta,
                },
                disc.eval(DiscRegion::Collar { t, theta })?,
            ));
        }
    }
    Ok(out)
}

/// Brute-force oracle: minimum of Q's scale-free magnitude over a
/// precomputed grid.
pub fn grid_min(
    points: &[(ChartPoint, ProjectivePoint)],
    q: &HomogeneousPolynomial,
) -> (f64, ChartPoint) {
    let mut min = f64::INFINITY;
    let mut arg = points[0].0;
    for (cp, p) in points {
        let m = q.normalized_magnitude(p);
        if m < min {
            min = m;
            arg = *cp;
        }
    }
    (min, arg)
}

/// Random homogeneous polynomial of the given degree: every monomial present,
/// coefficients uniform on the complex unit square. Deterministic per rng
/// state; never zero (the sup is redrawn above 0.1).
pub fn random_curve<R: Rng>(degree: u32, rng: &mut R) -> HomogeneousPolynomial {
    loop {
        let mut terms = Vec::new();
        for i in 0..=degree {
            for j in 0..=(degree - i) {
                let k = degree - i - j;
                let c = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                terms.push(([i, j, k], c));
            }
        }
        let q = HomogeneousPolynomial::from_terms(degree, &terms).expect("exponents sum to degree");
        if q.coeff_sup() > 0.1 {
            return q;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discs::DiscFamilyConfig;
    use crate::projective::ONE;

    fn disc() -> SmoothedDisc {
        SmoothedDisc::new(DiscFamilyConfig::standard().unwrap()).unwrap()
    }

    fn line(c1: f64, c2: f64, c3: f64) -> HomogeneousPolynomial {
        HomogeneousPolynomial::from_terms(
            1,
            &[
                ([1, 0, 0], Complex64::new(c1, 0.0)),
                ([0, 1, 0], Complex64::new(c2, 0.0)),
                ([0, 0, 1], Complex64::new(c3, 0.0)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn nelder_mead_minimizes_a_cone() {
        // |x - 0.3| + |y + 0.2| has its kink minimum at (0.3, -0.2); the
        // derivative-free simplex must land on it.
        let (p, v, _) = nelder_mead(
            |x, y| (x - 0.3).abs() + (y + 0.2).abs(),
            (0.0, 0.0),
            0.5,
            200,
        );
        assert!(v < 1e-9, "value {v}");
        assert!((p.0 - 0.3).abs() < 1e-9 && (p.1 + 0.2).abs() < 1e-9);
    }

    #[test]
    fn z3_minimum_sits_at_the_cap_center() {
        // The blow-up class [1:−1:0] has vanishing third coordinate, so the
        // minimum is exactly 0 at the cap center; the grid contains it.
        let d = disc();
        let q = line(0.0, 0.0, 1.0);
        let pts = grid_points(&d, 64).unwrap();
        let (gmin, garg) = grid_min(&pts, &q);
        // The class is extracted by Cauchy quadrature, so "exactly zero"
        // means quadrature roundoff.
        assert!(gmin < 1e-12, "grid min {gmin}");
        assert_eq!(garg.chart, SearchChart::Cap);
        assert!(garg.x == 0.0 && garg.y == 0.0);

        let r = curve_min_on_disc(&d, &q, 32, 7).unwrap();
        assert!(r.minimum < 1e-6, "search min {}", r.minimum);
    }

    #[test]
    fn pole_line_crosses_the_collar() {
        // 3z1+4z2 = 0 meets the collar on the real-root branch: the smaller
        // root (1 − sqrt(1 − 48c))/6 equals the shrunken radius 0.2·r(t) at
        // t ≈ 0.8209, θ = 0; the complex-pair branch (t < 0.79) stays outside.
        let d = disc();
        let q = line(3.0, 4.0, 0.0);
        let r = curve_min_on_disc(&d, &q, 64, 11).unwrap();
        assert!(r.minimum < 1e-6, "search min {}", r.minimum);
        assert_eq!(r.location.chart, SearchChart::Collar);
        assert!((r.location.x - 0.8209).abs() < 5e-3, "t = {}", r.location.x);
        let theta = r.location.y.rem_euclid(TAU);
        assert!(theta.min(TAU - theta) < 1e-3, "theta = {theta}");
    }

    #[test]
    fn coordinate_lines_miss_the_smoothed_disc() {
        // {z2 = 0} stays clear: on the collar |z1| = 0.2·r(t) > 0.1(1−t) = c
        // strictly, and the cap's z2 is bounded away from zero. Likewise
        // {z1 = 0}. The disc is NOT unavoidable — curves can exit through the
        // open bottom the base disc used to close.
        let d = disc();
        let pts = grid_points(&d, 128).unwrap();
        for (q, floor) in [(line(0.0, 1.0, 0.0), 0.2), (line(1.0, 0.0, 0.0), 0.3)] {
            let (gmin, _) = grid_min(&pts, &q);
            let r = curve_min_on_disc(&d, &q, 48, 3).unwrap();
            assert!(gmin > floor, "grid min {gmin}");
            assert!(r.minimum > floor, "search min {}", r.minimum);
            // The search may only beat the grid, never lose to it by more
            // than the grid resolution.
            assert!(r.minimum <= gmin + 1e-12);
        }
    }

    #[test]
    fn search_never_loses_to_the_grid() {
        let d = disc();
        let pts = grid_points(&d, 96).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..4 {
            let q = random_curve(1, &mut rng);
            let (gmin, _) = grid_min(&pts, &q);
            let r = curve_min_on_disc(&d, &q, 64, 19).unwrap();
            assert!(
                r.minimum <= gmin + 1e-10,
                "search {} vs grid {gmin} for {q}",
                r.minimum
            );
        }
    }

    #[test]
    fn random_curves_are_deterministic_per_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        let qa = random_curve(2, &mut a);
        let qb = random_curve(2, &mut b);
        assert_eq!(qa.degree(), 2);
        assert_eq!(format!("{qa}"), format!("{qb}"));
        let mut c = ChaCha8Rng::seed_from_u64(6);
        let qc = random_curve(2, &mut c);
        assert_ne!(format!("{qa}"), format!("{qc}"));
    }

    #[test]
    fn result_location_is_evaluable() {
        let d = disc();
        let q = line(1.0, 2.0, -0.5);
        let r = curve_min_on_disc(&d, &q, 16, 23).unwrap();
        let p = d.eval(r.location.region(&d)).unwrap();
        let m = q.normalized_magnitude(&p);
        assert!((m - r.minimum).abs() < 1e-9 + r.minimum * 1e-6);
    }

    #[test]
    fn zero_polynomial_is_refused() {
        let q = HomogeneousPolynomial::from_terms(1, &[([1, 0, 0], ONE * 0.0)]).unwrap();
        assert!(curve_min_on_disc(&disc(), &q, 8, 1).is_err());
    }
}
