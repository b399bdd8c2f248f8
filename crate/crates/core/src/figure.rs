//! The thin Hartogs figure traced by the disc family, and the smoothed disc
//! that caps it.
//!
//! In the (w, t) parameter cylinder the figure is
//!
//! `W = Δ̄ × {0}  ∪  S¹ × [0, 1]`
//!
//! mapped to the projective plane by (w, t) ↦ Φ(A_t(w)): the full disc at
//! t = 0 plus the tube of boundary circles. The smoothed disc replaces the
//! tube by circles of shrinking radius
//!
//! `r(t) = 1/2 + 2^{1/(t−1)}`,   r(0) = 1,   r → 1/2 flatly as t → 1,
//!
//! glued to the cap A₁(Δ̄(1/2)). The cap passes through the origin of C³,
//! where projectivization alone is undefined; the blow-up limit — the class of
//! the leading Taylor coefficient of A₁ at w = 0 — extends it continuously.

use num_complex::Complex64;

use crate::discs::DiscFamilyConfig;
use crate::error::{Error, Result};
use crate::projective::{project, re, C3Vector, ProjectivePoint, ZERO};
use crate::tolerances::Tolerances;

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Gluing radius r(t) = 1/2 + 2^{1/(t−1)} on [0, 1].
///
/// r(0) = 1 and r(0.5) = 0.75 exactly. Every one-sided derivative of the
/// exponential term vanishes at t = 1; in double precision the term underflows
/// below the 0.5 ulp already near t ≈ 0.98, so the computed schedule reaches
/// the plateau r = 0.5 exactly before the endpoint (where the flat limit is
/// returned directly).
pub fn radius_schedule(t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::domain(format!("t = {t} outside [0, 1]")));
    }
    if t == 1.0 {
        return Ok(0.5);
    }
    Ok(0.5 + (1.0 / (t - 1.0)).exp2())
}

/// One-sided derivative estimates of the exponential term g(t) = r(t) − 1/2
/// at the flat end t = 1, from the node t = 1 − offset: since g(1) = 0 and
/// all derivatives vanish there, the k-th estimate is k!·|g(1 − offset)| /
/// offset^k. For a function with a nonzero k-th jet these would be O(1).
pub fn schedule_flatness_estimates(offset: f64) -> Result<[f64; 3]> {
    if !(offset > 0.0 && offset < 1.0) {
        return Err(Error::domain(format!("offset = {offset} outside (0, 1)")));
    }
    let g = radius_schedule(1.0 - offset)? - 0.5;
    let mut out = [0.0; 3];
    let mut fact = 1.0;
    for (k, slot) in out.iter_mut().enumerate() {
        fact *= (k + 1) as f64;
        *slot = fact * g.abs() / offset.powi(k as i32 + 1);
    }
    Ok(out)
}

/// Deterministic well-spread sample of a closed disc: golden-angle spiral
/// ("sunflower") of n points.
pub fn sunflower(n: usize, radius: f64) -> Vec<Complex64> {
    let golden_angle = TAU * (1.0 - 1.0 / ((1.0 + 5.0f64.sqrt()) / 2.0));
    (0..n)
        .map(|k| {
            let r = radius * (((k as f64) + 0.5) / n as f64).sqrt();
            Complex64::from_polar(r, golden_angle * k as f64)
        })
        .collect()
}

/// Which two-parameter chart a sample came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// Figure base disc at t = 0; params (Re w, Im w).
    Base,
    /// Figure boundary tube; params (theta, t).
    Cylinder,
    /// Smoothed-disc cap at t = 1; params (Re w, Im w).
    Cap,
    /// Smoothed-disc collar; params (t, theta).
    Collar,
    /// A full disc of the family (audit sampling); params (Re w, Im w).
    Disc,
}

impl Chart {
    pub fn as_str(&self) -> &'static str {
        match self {
            Chart::Base => "base",
            Chart::Cylinder => "cylinder",
            Chart::Cap => "cap",
            Chart::Collar => "collar",
            Chart::Disc => "disc",
        }
    }
}

/// One projectivized sample with its chart coordinates and the disc of the
/// family it came from (same `disc_id` ⇒ same disc).
#[derive(Debug, Clone)]
pub struct FigureSample {
    pub chart: Chart,
    pub p1: f64,
    pub p2: f64,
    pub disc_id: usize,
    pub point: ProjectivePoint,
}

/// A point of the figure in its two charts.
#[derive(Debug, Clone, Copy)]
pub enum FigurePoint {
    Base { w: Complex64 },
    Cylinder { theta: f64, t: f64 },
}

/// The projectivized thin Hartogs figure.
#[derive(Debug, Clone)]
pub struct HartogsFigure {
    cfg: DiscFamilyConfig,
}

impl HartogsFigure {
    /// Requires both line crossings of the base disc to be interior (they are
    /// what the figure is built to surround).
    pub fn new(cfg: DiscFamilyConfig) -> Result<Self> {
        cfg.line_crossings(0.0)?;
        Ok(HartogsFigure { cfg })
    }

    pub fn config(&self) -> &DiscFamilyConfig {
        &self.cfg
    }

    pub fn eval(&self, p: FigurePoint) -> Result<ProjectivePoint> {
        let z = match p {
            FigurePoint::Base { w } => self.cfg.disc_eval(0.0, w)?,
            FigurePoint::Cylinder { theta, t } => {
                self.cfg.disc_eval(t, Complex64::from_polar(1.0, theta))?
            }
        };
        project(&z, self.cfg.tolerances())
    }

    /// Sample the figure: a sunflower over the base disc plus uniform circles
    /// at `levels` parameter values (level 0 is the base disc's own boundary,
    /// so it shares `disc_id = 0` with the base samples).
    pub fn sample(
        &self,
        base_n: usize,
        levels: usize,
        per_circle: usize,
    ) -> Result<Vec<FigureSample>> {
        if levels < 2 {
            return Err(Error::domain("need at least 2 cylinder levels"));
        }
        let mut out = Vec::with_capacity(base_n + levels * per_circle);
        for w in sunflower(base_n, 1.0) {
            out.push(FigureSample {
                chart: Chart::Base,
                p1: w.re,
                p2: w.im,
                disc_id: 0,
                point: self.eval(FigurePoint::Base { w })?,
            });
        }
        for level in 0..levels {
            let t = level as f64 / (levels - 1) as f64;
            for ia in 0..per_circle {
                let theta = TAU * ia as f64 / per_circle as f64;
                out.push(FigureSample {
                    chart: Chart::Cylinder,
                    p1: theta,
                    p2: t,
                    disc_id: level,
                    point: self.eval(FigurePoint::Cylinder { theta, t })?,
                });
            }
        }
        Ok(out)
    }

    /// Minimum projective distance from the boundary tube to the two origin
    /// line classes. The tube stays away from the lines — that margin is what
    /// lets function elements with poles along the lines be continued across
    /// the figure.
    pub fn min_line_distance_on_tube(&self, levels: usize, per_circle: usize) -> Result<f64> {
        let l1 = self.cfg.lines().0.class();
        let l2 = self.cfg.lines().1.class();
        let mut min = f64::INFINITY;
        for level in 0..levels {
            let t = level as f64 / (levels - 1) as f64;
            for ia in 0..per_circle {
                let theta = TAU * ia as f64 / per_circle as f64;
                let p = self.eval(FigurePoint::Cylinder { theta, t })?;
                min = min.min(p.distance(l1)).min(p.distance(l2));
            }
        }
        Ok(min)
    }
}

/// A point of the smoothed disc in its two charts.
#[derive(Debug, Clone, Copy)]
pub enum DiscRegion {
    /// |w| ≤ v_radius on the final disc A₁.
    Cap { w: Complex64 },
    /// Collar circle at parameter t (clamped to 1 − t_clamp_delta), angle theta.
    Collar { t: f64, theta: f64 },
}

/// The smoothed disc: cap of the final disc glued to the collar of shrinking
/// boundary circles.
#[derive(Debug, Clone)]
pub struct SmoothedDisc {
    cfg: DiscFamilyConfig,
}

impl SmoothedDisc {
    pub fn new(cfg: DiscFamilyConfig) -> Result<Self> {
        cfg.line_crossings(0.0)?;
        Ok(SmoothedDisc { cfg })
    }

    pub fn config(&self) -> &DiscFamilyConfig {
        &self.cfg
    }

    pub fn eval(&self, p: DiscRegion) -> Result<ProjectivePoint> {
        match p {
            DiscRegion::Cap { w } => {
                let v = self.cfg.params().v_radius;
                if w.norm() > v + 1e-12 {
                    return Err(Error::domain(format!(
                        "|w| = {} outside the cap radius {v}",
                        w.norm()
                    )));
                }
                blowup_eval(&self.cfg, w)
            }
            DiscRegion::Collar { t, theta } => {
                if !(0.0..=1.0).contains(&t) {
                    return Err(Error::domain(format!("collar t = {t} outside [0, 1]")));
                }
                let tc = t.min(1.0 - self.cfg.params().t_clamp_delta);
                let r = radius_schedule(tc)?;
                let z = self.cfg.disc_eval(tc, Complex64::from_polar(r, theta))?;
                project(&z, self.cfg.tolerances())
            }
        }
    }

    /// Sample cap (sunflower, plus the exact center where the blow-up acts)
    /// and collar (uniform circles, t stratified up to the clamp).
    pub fn sample(
        &self,
        cap_n: usize,
        levels: usize,
        per_circle: usize,
    ) -> Result<Vec<FigureSample>> {
        if levels < 2 {
            return Err(Error::domain("need at least 2 collar levels"));
        }
        let v = self.cfg.params().v_radius;
        let mut out = Vec::with_capacity(cap_n + levels * per_circle);
        let cap_id = levels;
        out.push(FigureSample {
            chart: Chart::Cap,
            p1: 0.0,
            p2: 0.0,
            disc_id: cap_id,
            point: self.eval(DiscRegion::Cap { w: ZERO })?,
        });
        for w in sunflower(cap_n.saturating_sub(1), v) {
            out.push(FigureSample {
                chart: Chart::Cap,
                p1: w.re,
                p2: w.im,
                disc_id: cap_id,
                point: self.eval(DiscRegion::Cap { w })?,
            });
        }
        let t_max = 1.0 - self.cfg.params().t_clamp_delta;
        for level in 0..levels {
            let t = t_max * level as f64 / (levels - 1) as f64;
            for ia in 0..per_circle {
                let theta = TAU * ia as f64 / per_circle as f64;
                out.push(FigureSample {
                    chart: Chart::Collar,
                    p1: t,
                    p2: theta,
                    disc_id: level,
                    point: self.eval(DiscRegion::Collar { t, theta })?,
                });
            }
        }
        Ok(out)
    }
}

/// Number of leading Taylor orders inspected by the blow-up extraction.
const BLOWUP_MAX_ORDER: usize = 4;
/// Radius of the Cauchy circle used for coefficient extraction.
const BLOWUP_CIRCLE_RADIUS: f64 = 0.1;
/// Nodes on the Cauchy circle.
const BLOWUP_NODES: usize = 64;

/// Evaluate Φ ∘ A₁ through the origin: ordinary projectivization away from
/// w = 0, and at the origin the blow-up limit — the projective class of the
/// first nonvanishing Taylor coefficient of A₁, extracted by Cauchy
/// integration on a small circle.
pub fn blowup_eval(cfg: &DiscFamilyConfig, w: Complex64) -> Result<ProjectivePoint> {
    let tol = cfg.tolerances();
    let z = cfg.disc_eval(1.0, w)?;
    if z.norm() >= tol.zero_vector {
        return project(&z, tol);
    }
    let class = leading_taylor_class(cfg, tol)?;
    Ok(class.1)
}

/// (order, class) of the first nonvanishing Taylor coefficient of A₁ at 0.
pub fn leading_taylor_class(
    cfg: &DiscFamilyConfig,
    tol: &Tolerances,
) -> Result<(usize, ProjectivePoint)> {
    let n = BLOWUP_NODES;
    let r = BLOWUP_CIRCLE_RADIUS;
    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        let th = TAU * k as f64 / n as f64;
        values.push(cfg.disc_eval(1.0, Complex64::from_polar(r, th))?);
    }
    for m in 1..=BLOWUP_MAX_ORDER {
        let mut coeff = [ZERO; 3];
        for (k, z) in values.iter().enumerate() {
            let th = TAU * k as f64 / n as f64;
            let twist = Complex64::from_polar(1.0, -(m as f64) * th);
            for (c, zc) in coeff.iter_mut().zip(&z.coords) {
                *c += zc * twist;
            }
        }
        let scale = re(1.0 / (n as f64 * r.powi(m as i32)));
        let a = C3Vector::raw(coeff[0] * scale, coeff[1] * scale, coeff[2] * scale);
        if a.norm() >= tol.taylor_coefficient {
            return Ok((m, project(&a, tol)?));
        }
    }
    Err(Error::AllCoefficientsZero {
        checked: BLOWUP_MAX_ORDER,
        threshold: tol.taylor_coefficient,
    })
}

/// Kinds of pair proximity found by the injectivity audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollisionKind {
    /// Two distinct parameters of the same disc mapped too close.
    SameDisc,
    /// Samples of different discs collided away from the marked line classes.
    CrossDisc,
}

/// A too-close pair, reported by sample indices.
#[derive(Debug, Clone)]
pub struct CollisionPair {
    pub a: usize,
    pub b: usize,
    pub distance: f64,
    pub kind: CollisionKind,
}

/// Outcome of the pairwise injectivity scan.
#[derive(Debug, Clone)]
pub struct InjectivityReport {
    pub samples: usize,
    pub pairs_checked: u64,
    /// Minimum distance among distinct same-disc pairs.
    pub same_disc_min: f64,
    /// Minimum distance among cross-disc pairs, including expected ones.
    pub cross_disc_min: f64,
    /// Cross-disc collisions within the exclusion radius of a line class:
    /// expected (the discs genuinely meet along the lines), counted not flagged.
    pub near_line_collisions: usize,
    /// Genuine violations: same-disc pairs below the separation floor, or
    /// cross-disc collisions away from both line classes.
    pub violations: Vec<CollisionPair>,
}

impl InjectivityReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Pairwise scan of projectivized samples. Same-disc pairs must stay
/// `same_disc_separation` apart; cross-disc pairs closer than `collision` must
/// sit within `exclusion_radius` of one of the marked line classes.
pub fn injectivity_audit(
    samples: &[FigureSample],
    line_classes: (&ProjectivePoint, &ProjectivePoint),
    tol: &Tolerances,
) -> InjectivityReport {
    let mut report = InjectivityReport {
        samples: samples.len(),
        pairs_checked: 0,
        same_disc_min: f64::INFINITY,
        cross_disc_min: f64::INFINITY,
        near_line_collisions: 0,
        violations: Vec::new(),
    };
    for i in 0..samples.len() {
        for j in (i + 1)..samples.len() {
            let (si, sj) = (&samples[i], &samples[j]);
            let same_disc = si.disc_id == sj.disc_id;
            if same_disc && si.p1 == sj.p1 && si.p2 == sj.p2 && si.chart == sj.chart {
                continue;
            }
            report.pairs_checked += 1;
            let d = si.point.distance(&sj.point);
            if same_disc {
                report.same_disc_min = report.same_disc_min.min(d);
                if d < tol.same_disc_separation {
                    report.violations.push(CollisionPair {
                        a: i,
                        b: j,
                        distance: d,
                        kind: CollisionKind::SameDisc,
                    });
                }
            } else {
                report.cross_disc_min = report.cross_disc_min.min(d);
                if d < tol.collision {
                    let near_line = si.point.distance(line_classes.0) < tol.exclusion_radius
                        || si.point.distance(line_classes.1) < tol.exclusion_radius;
                    if near_line {
                        report.near_line_collisions += 1;
                    } else {
                        report.violations.push(CollisionPair {
                            a: i,
                            b: j,
                            distance: d,
                            kind: CollisionKind::CrossDisc,
                        });
                    }
                }
            }
        }
    }
    report
}

/// Full-disc sampling of the family at the given parameters (sunflower per
/// disc plus the two line-crossing parameters), for audits that exercise the
/// interior where discs genuinely meet. The crossings are included on purpose:
/// they are the loci where different discs intersect, and an audit that never
/// samples them would vacuously report "no collisions anywhere".
pub fn disc_family_samples(
    cfg: &DiscFamilyConfig,
    ts: &[f64],
    per_disc: usize,
) -> Result<Vec<FigureSample>> {
    let mut out = Vec::with_capacity(ts.len() * (per_disc + 2));
    for (id, &t) in ts.iter().enumerate() {
        let mut params: Vec<Complex64> = sunflower(per_disc, 1.0);
        for crossing in cfg.line_crossings(t)? {
            if crossing.point.norm() >= cfg.tolerances().zero_vector {
                params.push(crossing.w);
            }
        }
        for w in params {
            let z = cfg.disc_eval(t, w)?;
            out.push(FigureSample {
                chart: Chart::Disc,
                p1: w.re,
                p2: w.im,
                disc_id: id,
                point: project(&z, cfg.tolerances())?,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{cplx, ONE};

    fn standard() -> DiscFamilyConfig {
        DiscFamilyConfig::standard().unwrap()
    }

    fn class(z1: Complex64, z2: Complex64, z3: Complex64) -> ProjectivePoint {
        project(&C3Vector::new(z1, z2, z3).unwrap(), &Tolerances::default()).unwrap()
    }

    #[test]
    fn radius_schedule_exact_values() {
        assert_eq!(radius_schedule(0.0).unwrap(), 1.0);
        assert_eq!(radius_schedule(0.5).unwrap(), 0.75);
        assert!((radius_schedule(0.9).unwrap() - 0.5009765625).abs() < 1e-15);
        // Deep in the flat end the exponential term underflows below the 0.5
        // ulp: the computed schedule is exactly 1/2.
        assert_eq!(radius_schedule(1.0 - 1e-3).unwrap(), 0.5);
        assert_eq!(radius_schedule(1.0).unwrap(), 0.5);
        assert!(radius_schedule(-0.1).is_err());
        assert!(radius_schedule(1.1).is_err());
    }

    #[test]
    fn radius_schedule_decreases_until_plateau() {
        let mut prev = radius_schedule(0.0).unwrap();
        for k in 1..=1000 {
            let t = k as f64 / 1000.0;
            let r = radius_schedule(t).unwrap();
            if prev > 0.5 {
                assert!(r < prev, "not strictly decreasing at t = {t}");
            } else {
                assert_eq!(r, 0.5, "left the plateau at t = {t}");
            }
            prev = r;
        }
    }

    #[test]
    fn schedule_flatness_estimates_vanish_at_the_gluing_point() {
        let est = schedule_flatness_estimates(1e-2).unwrap();
        for (k, e) in est.iter().enumerate() {
            assert!(*e < 1e-20, "order {} estimate {e}", k + 1);
        }
        // Superpolynomial decay away from the plateau: halving the offset
        // crushes the estimates by many orders of magnitude.
        let far = schedule_flatness_estimates(0.04).unwrap();
        let near = schedule_flatness_estimates(0.02).unwrap();
        for k in 0..3 {
            assert!(near[k] < 1e-4 * far[k], "order {} decays too slowly", k + 1);
        }
    }

    #[test]
    fn figure_eval_matches_disc_family() {
        let fig = HartogsFigure::new(standard()).unwrap();
        let cfg = standard();
        let w = cplx(0.3, -0.4);
        let direct = project(&cfg.disc_eval(0.0, w).unwrap(), cfg.tolerances()).unwrap();
        let via_figure = fig.eval(FigurePoint::Base { w }).unwrap();
        assert!(direct.approx_eq(&via_figure, 0.0));

        let p = fig
            .eval(FigurePoint::Cylinder { theta: 1.0, t: 0.7 })
            .unwrap();
        let z = cfg.disc_eval(0.7, Complex64::from_polar(1.0, 1.0)).unwrap();
        assert!(p.approx_eq(&project(&z, cfg.tolerances()).unwrap(), 0.0));
    }

    #[test]
    fn collar_at_zero_is_the_figure_boundary_circle() {
        // Gluing consistency: r(0) = 1, so the collar start coincides with the
        // base disc's boundary.
        let cfg = standard();
        let fig = HartogsFigure::new(cfg.clone()).unwrap();
        let disc = SmoothedDisc::new(cfg).unwrap();
        for ia in 0..8 {
            let theta = TAU * ia as f64 / 8.0;
            let a = fig.eval(FigurePoint::Cylinder { theta, t: 0.0 }).unwrap();
            let b = disc.eval(DiscRegion::Collar { t: 0.0, theta }).unwrap();
            assert!(a.approx_eq(&b, 1e-12));
        }
    }

    #[test]
    fn blowup_limit_is_the_antidiagonal_class() {
        // A₁(w) = (ρw, −ρw/(1+ρw), ...): leading coefficient (ρ, −ρ, 0),
        // class [1 : −1 : 0].
        let cfg = standard();
        let p = blowup_eval(&cfg, ZERO).unwrap();
        let want = class(ONE, -ONE, ZERO);
        assert!(p.distance(&want) < 1e-10, "got {p}");
        let (order, _) = leading_taylor_class(&cfg, cfg.tolerances()).unwrap();
        assert_eq!(order, 1);
    }

    #[test]
    fn blowup_eval_is_continuous_at_the_origin() {
        let cfg = standard();
        let limit = blowup_eval(&cfg, ZERO).unwrap();
        let mut prev = f64::INFINITY;
        for &s in &[1e-2, 1e-3, 1e-4] {
            let p = blowup_eval(&cfg, re(s)).unwrap();
            let d = p.distance(&limit);
            assert!(d < prev, "distance did not shrink at |w| = {s}");
            prev = d;
        }
        assert!(prev < 1e-3);
    }

    #[test]
    fn cap_rejects_parameters_beyond_v_radius() {
        let disc = SmoothedDisc::new(standard()).unwrap();
        assert!(disc.eval(DiscRegion::Cap { w: re(0.6) }).is_err());
        assert!(disc.eval(DiscRegion::Cap { w: re(0.5) }).is_ok());
    }

    #[test]
    fn collar_clamps_the_degenerate_end() {
        let disc = SmoothedDisc::new(standard()).unwrap();
        let at_one = disc
            .eval(DiscRegion::Collar { t: 1.0, theta: 0.3 })
            .unwrap();
        let clamped = disc
            .eval(DiscRegion::Collar {
                t: 1.0 - 1e-6,
                theta: 0.3,
            })
            .unwrap();
        assert!(at_one.approx_eq(&clamped, 0.0));
        assert!(disc
            .eval(DiscRegion::Collar { t: 1.2, theta: 0.0 })
            .is_err());
    }

    #[test]
    fn figure_samples_are_injective() {
        let fig = HartogsFigure::new(standard()).unwrap();
        let samples = fig.sample(200, 6, 40).unwrap();
        assert_eq!(samples.len(), 200 + 6 * 40);
        let cfg = standard();
        let report = injectivity_audit(
            &samples,
            (cfg.lines().0.class(), cfg.lines().1.class()),
            cfg.tolerances(),
        );
        assert!(report.passes(), "violations: {:?}", report.violations);
        assert!(report.same_disc_min > 1e-6);
    }

    #[test]
    fn full_disc_collisions_cluster_on_the_lines() {
        // Whole discs at two parameters genuinely intersect along the origin
        // lines; the audit must classify those collisions as expected and
        // report no violations elsewhere.
        let cfg = standard();
        let samples = disc_family_samples(&cfg, &[0.0, 0.5], 600).unwrap();
        let report = injectivity_audit(
            &samples,
            (cfg.lines().0.class(), cfg.lines().1.class()),
            cfg.tolerances(),
        );
        assert!(report.passes(), "violations: {:?}", report.violations);
        assert!(
            report.near_line_collisions > 0,
            "expected the discs to meet near the line classes"
        );
        assert!(report.cross_disc_min < 1e-4);
    }

    #[test]
    fn smoothed_disc_samples_cover_both_charts() {
        let disc = SmoothedDisc::new(standard()).unwrap();
        let samples = disc.sample(50, 5, 24).unwrap();
        assert_eq!(samples.len(), 50 + 5 * 24);
        assert!(samples.iter().any(|s| s.chart == Chart::Cap));
        assert!(samples.iter().any(|s| s.chart == Chart::Collar));
        // The cap contains the exact center, where the blow-up acts.
        assert!(samples
            .iter()
            .any(|s| s.chart == Chart::Cap && s.p1 == 0.0 && s.p2 == 0.0));
    }

    #[test]
    fn tube_keeps_distance_from_the_lines() {
        let fig = HartogsFigure::new(standard()).unwrap();
        let margin = fig.min_line_distance_on_tube(9, 32).unwrap();
        let p = fig.config().params();
        assert!(margin > 0.1 * p.c0.norm() / p.rho, "margin {margin}");
    }

    #[test]
    fn sunflower_is_deterministic_and_bounded() {
        let a = sunflower(100, 0.5);
        let b = sunflower(100, 0.5);
        assert_eq!(a, b);
        assert!(a.iter().all(|w| w.norm() <= 0.5));
        // Well-spread: no duplicate points.
        for i in 0..a.len() {
            for j in (i + 1)..a.len() {
                assert!((a[i] - a[j]).norm() > 1e-3);
            }
        }
    }
}
