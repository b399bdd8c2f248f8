//! The one-parameter family of analytic discs on the quadric.
//!
//! Fix a quadric surface H = {P = 0} and a linear submersion F(z) = f·z that
//! is transversal to H's origin geometry. For a level value c, the slice
//! S_c = H ∩ {F = c} is a curve; near the origin it is a graph
//! z1 ↦ (z1, z2(c, z1), z3(c, z1)) over the first coordinate. The disc family
//! is
//!
//! `A_t(w) = graph point at (c, z1) = (φ(t), ρ·w)`,  `φ(t) = c0·(1 − t)`,
//!
//! for t ∈ [0, 1] and w in the closed unit disc. As t → 1 the level shrinks
//! to 0, the slice degenerates to the two origin lines, and the disc collapses
//! onto the origin: A₁(0) = 0 while the boundary circles stay away from it.
//!
//! For the standard surface z3 = z1z2 with F = z1 + z2 + z3 the graph is
//! closed form: z2 = (c − z1)/(1 + z1), z3 = z1z2. Any other transversal pair
//! is handled by a Newton path continuation in (z2, z3) that follows the graph
//! branch from the origin, so the same family exists for perturbed surfaces.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::projective::{re, C3Vector, ONE, ZERO};
use crate::quadric::{lines_through_origin, transversality_certificate, OriginLine, Quadric};
use crate::tolerances::Tolerances;

/// A linear submersion F(z) = coeffs·z, the slicing function of the family.
#[derive(Debug, Clone, PartialEq)]
pub struct Submersion {
    coeffs: C3Vector,
}

impl Submersion {
    pub fn new(coeffs: C3Vector) -> Result<Self> {
        if coeffs.norm() == 0.0 {
            return Err(Error::invalid("submersion has zero differential"));
        }
        Ok(Submersion { coeffs })
    }

    /// F = z1 + z2 + z3.
    pub fn standard() -> Self {
        Submersion {
            coeffs: C3Vector::raw(ONE, ONE, ONE),
        }
    }

    pub fn coeffs(&self) -> &C3Vector {
        &self.coeffs
    }

    pub fn eval(&self, z: &C3Vector) -> Complex64 {
        self.coeffs.dot(z)
    }
}

/// Scalar shape parameters of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    /// Base level value; φ(t) = c0·(1 − t). Must be nonzero or the level path
    /// is constant and the family degenerates.
    pub c0: Complex64,
    /// Chart radius: the disc parametrizes z1 = ρ·w, |w| ≤ 1.
    pub rho: f64,
    /// The family must stay inside the ball of this radius (this is the
    /// neighborhood the construction is allowed to use).
    pub epsilon: f64,
    /// Radius of the shrunk disc used by the smoothed-disc cap.
    pub v_radius: f64,
    /// Collar parameter keeps t ≤ 1 − t_clamp_delta away from the degenerate end.
    pub t_clamp_delta: f64,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            c0: Complex64::new(0.1, 0.0),
            rho: 0.2,
            epsilon: 1.0,
            v_radius: 0.5,
            t_clamp_delta: 1e-6,
        }
    }
}

const NEWTON_MAX_ITER: usize = 50;
/// Homotopy step bound for the path continuation.
const PATH_STEP: f64 = 0.02;
/// Domain slack: parameters may overshoot their closed domains by this much
/// before being refused (keeps boundary sampling robust to rounding).
const DOMAIN_SLACK: f64 = 1e-12;

/// A validated disc family: quadric + submersion + shape parameters, with the
/// origin lines extracted and transversality certified at construction.
#[derive(Debug, Clone)]
pub struct DiscFamilyConfig {
    quadric: Quadric,
    submersion: Submersion,
    params: FamilyParams,
    lines: (OriginLine, OriginLine),
    tol: Tolerances,
    closed_form: bool,
}

impl DiscFamilyConfig {
    pub fn new(
        quadric: Quadric,
        submersion: Submersion,
        params: FamilyParams,
        tol: Tolerances,
    ) -> Result<Self> {
        if !(params.c0.re.is_finite() && params.c0.im.is_finite()) || params.c0.norm() == 0.0 {
            return Err(Error::invalid("c0 must be finite and nonzero"));
        }
        if !(params.rho > 0.0 && params.rho.is_finite()) {
            return Err(Error::invalid("rho must be positive"));
        }
        if !(params.epsilon > 0.0 && params.epsilon.is_finite()) {
            return Err(Error::invalid("epsilon must be positive"));
        }
        if !(params.v_radius > 0.0 && params.v_radius < 1.0) {
            return Err(Error::invalid("v_radius must lie in (0, 1)"));
        }
        if !(params.t_clamp_delta > 0.0 && params.t_clamp_delta < 0.1) {
            return Err(Error::invalid("t_clamp_delta must lie in (0, 0.1)"));
        }

        let lines = lines_through_origin(&quadric, &tol)?;
        let cert = transversality_certificate(&quadric, submersion.coeffs(), &lines, &tol);
        if !cert.passes() {
            return Err(Error::invalid(format!(
                "transversality certificate failed: line margins ({:.3e}, {:.3e}), \
                 surface margin {:.3e}, threshold {:.1e}",
                cert.line_margins[0], cert.line_margins[1], cert.surface_margin, cert.threshold
            )));
        }

        let closed_form =
            quadric == Quadric::standard() && *submersion.coeffs() == C3Vector::raw(ONE, ONE, ONE);

        let cfg = DiscFamilyConfig {
            quadric,
            submersion,
            params,
            lines,
            tol,
            closed_form,
        };

        // The graph chart must be regular at the seed of the continuation.
        let grad0 = cfg.quadric.gradient(&C3Vector::zero());
        let f = cfg.submersion.coeffs();
        let det0 = grad0.coords[1] * f.coords[2] - grad0.coords[2] * f.coords[1];
        if det0.norm() < 1e-10 * (grad0.norm() * f.norm()).max(f64::MIN_POSITIVE) {
            return Err(Error::ChartSingular {
                z1: ZERO,
                det: det0.norm(),
            });
        }

        // A₁(0) must be the origin: the whole construction hinges on the
        // family collapsing there.
        let origin = cfg.curve_point(ZERO, ZERO)?;
        if origin.norm() > 1e-12 {
            return Err(Error::invalid(format!(
                "A_1(0) = {origin} is not the origin"
            )));
        }

        // Containment sweep: the closed family must stay inside the epsilon
        // ball it is allowed to use.
        let sup = cfg.containment_sup(17, 8, 16)?;
        if sup >= cfg.params.epsilon {
            return Err(Error::invalid(format!(
                "family leaves the epsilon ball: sup ‖A_t(w)‖ = {sup:.6} ≥ {}",
                cfg.params.epsilon
            )));
        }

        Ok(cfg)
    }

    /// The standard family: z3 = z1z2, F = z1 + z2 + z3, default parameters.
    pub fn standard() -> Result<Self> {
        DiscFamilyConfig::new(
            Quadric::standard(),
            Submersion::standard(),
            FamilyParams::default(),
            Tolerances::default(),
        )
    }

    pub fn quadric(&self) -> &Quadric {
        &self.quadric
    }

    pub fn submersion(&self) -> &Submersion {
        &self.submersion
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    /// Origin lines in deterministic order (see [`lines_through_origin`]).
    pub fn lines(&self) -> &(OriginLine, OriginLine) {
        &self.lines
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn uses_closed_form(&self) -> bool {
        self.closed_form
    }

    /// Level path φ(t) = c0·(1 − t) on t ∈ [0, 1]; φ(1) = 0 exactly.
    pub fn phi(&self, t: f64) -> Result<Complex64> {
        if !((-DOMAIN_SLACK..=1.0 + DOMAIN_SLACK).contains(&t)) {
            return Err(Error::domain(format!("t = {t} outside [0, 1]")));
        }
        Ok(self.params.c0 * re(1.0 - t.clamp(0.0, 1.0)))
    }

    /// The point of H ∩ {F = c} with first coordinate z1, on the graph branch
    /// through the origin.
    pub fn curve_point(&self, c: Complex64, z1: Complex64) -> Result<C3Vector> {
        if self.closed_form {
            let denom = ONE + z1;
            if denom.norm() < 1e-9 {
                return Err(Error::ChartSingular {
                    z1,
                    det: denom.norm(),
                });
            }
            let z2 = (c - z1) / denom;
            let z3 = z1 * z2;
            Ok(C3Vector::raw(z1, z2, z3))
        } else {
            self.curve_point_newton(c, z1)
        }
    }

    /// Iterative graph solve, independent of the closed form: Newton in
    /// (z2, z3) on (P, F − c), path-continued from the origin so the branch
    /// through 0 is the one found.
    pub fn curve_point_newton(&self, c: Complex64, z1: Complex64) -> Result<C3Vector> {
        let span = c.norm().max(z1.norm());
        let steps = ((span / PATH_STEP).ceil() as usize).clamp(1, 64);
        let mut z2 = ZERO;
        let mut z3 = ZERO;
        for k in 1..=steps {
            let s = re(k as f64 / steps as f64);
            (z2, z3) = self.newton_step_2x2(c * s, z1 * s, z2, z3)?;
        }
        Ok(C3Vector::raw(z1, z2, z3))
    }

    fn newton_step_2x2(
        &self,
        c: Complex64,
        z1: Complex64,
        mut z2: Complex64,
        mut z3: Complex64,
    ) -> Result<(Complex64, Complex64)> {
        let f = self.submersion.coeffs();
        let scale = 1.0 + c.norm() + z1.norm();
        let target = self.tol.newton * scale;
        let mut residual = f64::INFINITY;
        for _ in 0..NEWTON_MAX_ITER {
            let z = C3Vector::raw(z1, z2, z3);
            let g1 = self.quadric.eval(&z);
            let g2 = self.submersion.eval(&z) - c;
            residual = g1.norm().max(g2.norm());
            if residual <= target {
                return Ok((z2, z3));
            }
            let grad = self.quadric.gradient(&z);
            let (j11, j12) = (grad.coords[1], grad.coords[2]);
            let (j21, j22) = (f.coords[1], f.coords[2]);
            let det = j11 * j22 - j12 * j21;
            let det_scale = (j11.norm() + j12.norm()) * (j21.norm() + j22.norm());
            if det.norm() < 1e-14 * det_scale.max(f64::MIN_POSITIVE) {
                return Err(Error::ChartSingular {
                    z1,
                    det: det.norm(),
                });
            }
            z2 -= (g1 * j22 - g2 * j12) / det;
            z3 -= (j11 * g2 - j21 * g1) / det;
        }
        Err(Error::NoConvergence {
            iterations: NEWTON_MAX_ITER,
            residual,
        })
    }

    /// A_t(w): the disc at parameter t evaluated at w in the closed unit disc.
    pub fn disc_eval(&self, t: f64, w: Complex64) -> Result<C3Vector> {
        let r = w.norm();
        if r > 1.0 + DOMAIN_SLACK {
            return Err(Error::domain(format!(
                "|w| = {r} outside the closed unit disc"
            )));
        }
        let c = self.phi(t)?;
        self.curve_point(c, w * re(self.params.rho))
    }

    pub fn disc(&self, t: f64) -> Result<AnalyticDisc<'_>> {
        self.phi(t)?;
        Ok(AnalyticDisc { cfg: self, t })
    }

    /// Crossings of the disc A_t with each origin line, in line order.
    pub fn line_crossings(&self, t: f64) -> Result<[LineCrossing; 2]> {
        let lines = [&self.lines.0, &self.lines.1];
        let mut out = Vec::with_capacity(2);
        for (index, line) in lines.into_iter().enumerate() {
            out.push(self.crossing_for_line(t, index, line)?);
        }
        Ok([out[0].clone(), out[1].clone()])
    }

    /// Find the parameter w where A_t(w) lies on the given line, by seeding a
    /// Newton iteration at the best point of a coarse polar grid.
    ///
    /// Membership of z on the line span(v) is expressed by the two
    /// cross-product components g_j(w) = z_j v_m − z_m v_j (j ≠ m, m the
    /// pivot coordinate of v); both must vanish and the crossing is simple
    /// when the w-derivatives don't.
    fn crossing_for_line(&self, t: f64, index: usize, line: &OriginLine) -> Result<LineCrossing> {
        let v = line.unit_direction();
        let mods = [v.coords[0].norm(), v.coords[1].norm(), v.coords[2].norm()];
        let m = (0..3)
            .max_by(|&a, &b| mods[a].total_cmp(&mods[b]))
            .expect("nonempty");
        let others: Vec<usize> = (0..3).filter(|&j| j != m).collect();

        // Evaluate through curve_point directly: the graph continues past
        // |w| = 1, and a crossing just outside the disc should be reported as
        // such rather than masked by the domain check.
        let c = self.phi(t)?;
        let residual_pair = |w: Complex64| -> Result<[Complex64; 2]> {
            let z = self.curve_point(c, w * re(self.params.rho))?;
            let g = |j: usize| z.coords[j] * v.coords[m] - z.coords[m] * v.coords[j];
            Ok([g(others[0]), g(others[1])])
        };

        // Coarse polar seed over the closed disc.
        let mut seed = ZERO;
        let mut best = f64::INFINITY;
        let mut probe = |w: Complex64| -> Result<()> {
            let g = residual_pair(w)?;
            let m2 = g[0].norm_sqr() + g[1].norm_sqr();
            if m2 < best {
                best = m2;
                seed = w;
            }
            Ok(())
        };
        probe(ZERO)?;
        for ir in 1..=12 {
            let r = ir as f64 / 12.0;
            for ia in 0..24 {
                let th = 2.0 * std::f64::consts::PI * ia as f64 / 24.0;
                probe(Complex64::from_polar(r, th))?;
            }
        }

        // Newton on the component with the stronger derivative at the seed.
        let fd = |w: Complex64, k: usize| -> Result<Complex64> {
            let h = 1e-6;
            let gp = residual_pair(w + re(h))?;
            let gm = residual_pair(w - re(h))?;
            Ok((gp[k] - gm[k]) / re(2.0 * h))
        };
        let k = if fd(seed, 0)?.norm() >= fd(seed, 1)?.norm() {
            0
        } else {
            1
        };

        let mut w = seed;
        let mut converged = false;
        for _ in 0..60 {
            let g = residual_pair(w)?[k];
            if g.norm() < 1e-14 {
                converged = true;
                break;
            }
            let d = fd(w, k)?;
            if d.norm() < 1e-14 {
                break;
            }
            let step = g / d;
            // Cap runaway iterates; crossings of interest sit near the disc.
            let mut next = w - step;
            if next.norm() > 3.0 {
                next *= re(3.0 / next.norm());
            }
            if (next - w).norm() < 1e-15 {
                w = next;
                converged = true;
                break;
            }
            w = next;
        }
        let g_final = residual_pair(w)?;
        let res = g_final[0].norm().max(g_final[1].norm());
        let point = self.curve_point(c, w * re(self.params.rho))?;
        let scale = 1.0 + point.norm();
        if !converged && res > self.tol.on_variety * scale {
            return Err(Error::NoConvergence {
                iterations: 60,
                residual: res,
            });
        }
        if w.norm() > 1.0 + 1e-9 {
            return Err(Error::CrossingOutsideDisc { modulus: w.norm() });
        }
        if res > self.tol.on_variety * scale {
            return Err(Error::HypothesisViolated {
                reason: format!("crossing candidate at w = {w} leaves line residual {res:.3e}"),
            });
        }
        let margin = (fd(w, 0)?.norm_sqr() + fd(w, 1)?.norm_sqr()).sqrt();
        if margin <= self.tol.crossing_margin {
            return Err(Error::HypothesisViolated {
                reason: format!("crossing at w = {w} is not simple: margin {margin:.3e}"),
            });
        }
        Ok(LineCrossing {
            line_index: index,
            w,
            point,
            margin,
        })
    }

    /// sup ‖A_t(w)‖ over a (t, radius, angle) grid including both boundaries.
    pub fn containment_sup(&self, nt: usize, nr: usize, na: usize) -> Result<f64> {
        let mut sup: f64 = 0.0;
        for it in 0..nt {
            let t = it as f64 / (nt - 1) as f64;
            sup = sup.max(self.disc_eval(t, ZERO)?.norm());
            for ir in 1..=nr {
                let r = ir as f64 / nr as f64;
                for ia in 0..na {
                    let th = 2.0 * std::f64::consts::PI * ia as f64 / na as f64;
                    sup = sup.max(self.disc_eval(t, Complex64::from_polar(r, th))?.norm());
                }
            }
        }
        Ok(sup)
    }
}

/// One disc of the family, A_t : closed unit disc → C³.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticDisc<'a> {
    cfg: &'a DiscFamilyConfig,
    t: f64,
}

impl AnalyticDisc<'_> {
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn eval(&self, w: Complex64) -> Result<C3Vector> {
        self.cfg.disc_eval(self.t, w)
    }

    /// Holomorphy defect of the disc map on the circle |w − center| = radius
    /// (which must stay inside the parameter disc).
    pub fn holomorphy_residual(&self, center: Complex64, radius: f64, n: usize) -> Result<f64> {
        if center.norm() + radius > 1.0 + DOMAIN_SLACK {
            return Err(Error::domain(format!(
                "test circle |w − {center}| = {radius} leaves the unit disc"
            )));
        }
        holomorphy_residual_map(|w| self.eval(w), center, radius, n)
    }
}

/// Crossing of a disc with an origin line.
#[derive(Debug, Clone)]
pub struct LineCrossing {
    /// 0 for the first line of the configuration, 1 for the second.
    pub line_index: usize,
    /// Disc parameter of the crossing.
    pub w: Complex64,
    /// The crossing point A_t(w) in C³.
    pub point: C3Vector,
    /// Norm of the w-derivatives of the line equations; simple crossings have
    /// this bounded away from zero.
    pub margin: f64,
}

/// Holomorphy defect of an arbitrary C³-valued map on a circle, from n
/// uniformly spaced samples: the larger of the mean-value defect
/// |(1/n)Σf(ζ_k) − f(center)| and the lowest anti-holomorphic Fourier
/// magnitude |(1/n)Σ f(ζ_k) e^{+iθ_k}|, maximized over coordinates.
///
/// The mean-value defect alone is blind to anti-holomorphic contamination —
/// conj(w) is harmonic, and its circle mean is exact — so the Fourier term is
/// what gives the audit teeth: for f holomorphic both terms decay spectrally
/// in n, while a conj(w) component of size η shows up as η·radius.
pub fn holomorphy_residual_map<F>(f: F, center: Complex64, radius: f64, n: usize) -> Result<f64>
where
    F: Fn(Complex64) -> Result<C3Vector>,
{
    if n < 4 {
        return Err(Error::domain(format!(
            "need at least 4 circle nodes, got {n}"
        )));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::domain(format!(
            "circle radius must be positive, got {radius}"
        )));
    }
    let fc = f(center)?;
    let mut mean = [ZERO; 3];
    let mut anti = [ZERO; 3];
    for k in 0..n {
        let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        let dir = Complex64::from_polar(1.0, th);
        let val = f(center + dir * re(radius))?;
        for j in 0..3 {
            mean[j] += val.coords[j];
            anti[j] += val.coords[j] * dir;
        }
    }
    let inv = re(1.0 / n as f64);
    let mut worst: f64 = 0.0;
    for j in 0..3 {
        let defect = (mean[j] * inv - fc.coords[j]).norm();
        let anti_mag = (anti[j] * inv).norm();
        worst = worst.max(defect).max(anti_mag);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{cplx, project};

    fn standard() -> DiscFamilyConfig {
        DiscFamilyConfig::standard().unwrap()
    }

    #[test]
    fn curve_point_closed_form_oracle() {
        // c = 0.1, z1 = 0.05: z2 = (0.1 − 0.05)/1.05, z3 = z1·z2.
        let cfg = standard();
        let p = cfg.curve_point(re(0.1), re(0.05)).unwrap();
        assert!((p.z2() - re(0.05 / 1.05)).norm() < 1e-16);
        assert!((p.z3() - re(0.05 * 0.05 / 1.05)).norm() < 1e-16);
        assert!(cfg.quadric().eval(&p).norm() < 1e-16);
        assert!((cfg.submersion().eval(&p) - re(0.1)).norm() < 1e-16);
    }

    #[test]
    fn newton_matches_closed_form_on_standard_config() {
        let cfg = standard();
        for (c, z1) in [
            (re(0.1), re(0.05)),
            (cplx(0.02, -0.07), cplx(-0.1, 0.15)),
            (re(0.0), cplx(0.2, 0.0)),
            (cplx(0.0, 0.1), cplx(0.0, -0.2)),
        ] {
            let a = cfg.curve_point(c, z1).unwrap();
            let b = cfg.curve_point_newton(c, z1).unwrap();
            assert!((a - b).norm() < 1e-12, "mismatch at c={c} z1={z1}");
        }
    }

    #[test]
    fn newton_handles_perturbed_quadric() {
        // z3 = z1z2 − 0.05 z2²: no closed form is wired for this surface.
        let q = Quadric::from_monomials(
            C3Vector::new(ZERO, ZERO, ONE).unwrap(),
            [ZERO, -ONE, ZERO, re(0.05), ZERO, ZERO],
        )
        .unwrap();
        let cfg = DiscFamilyConfig::new(
            q,
            Submersion::standard(),
            FamilyParams::default(),
            Tolerances::default(),
        )
        .unwrap();
        assert!(!cfg.uses_closed_form());
        let c = cplx(0.05, 0.02);
        let z1 = cplx(-0.12, 0.08);
        let p = cfg.curve_point(c, z1).unwrap();
        assert!(cfg.quadric().eval(&p).norm() < 1e-12);
        assert!((cfg.submersion().eval(&p) - c).norm() < 1e-12);
        // The branch through the origin: shrinking the data shrinks the point.
        let tiny = cfg.curve_point(c * re(1e-8), z1 * re(1e-8)).unwrap();
        assert!(tiny.norm() < 1e-7);
    }

    #[test]
    fn disc_centers_ride_the_level_path() {
        // A_t(0) = (0, φ(t), 0) and A_1(0) = 0 exactly.
        let cfg = standard();
        for t in [0.0, 0.3, 0.77, 1.0] {
            let p = cfg.disc_eval(t, ZERO).unwrap();
            let c = cfg.phi(t).unwrap();
            assert_eq!(p.z1(), ZERO);
            assert!((p.z2() - c).norm() < 1e-17);
            assert_eq!(p.z3(), ZERO);
        }
        assert_eq!(cfg.disc_eval(1.0, ZERO).unwrap().norm(), 0.0);
    }

    #[test]
    fn phi_endpoints_are_exact() {
        let cfg = standard();
        assert_eq!(cfg.phi(0.0).unwrap(), re(0.1));
        assert_eq!(cfg.phi(1.0).unwrap(), ZERO);
        assert!(cfg.phi(-0.01).is_err());
        assert!(cfg.phi(1.01).is_err());
    }

    #[test]
    fn disc_eval_rejects_parameters_outside_domain() {
        let cfg = standard();
        assert!(matches!(
            cfg.disc_eval(0.5, cplx(1.2, 0.0)),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            cfg.disc_eval(1.5, ZERO),
            Err(Error::Domain { .. })
        ));
        // The closed boundary itself is fine.
        assert!(cfg.disc_eval(0.5, cplx(0.0, 1.0)).is_ok());
    }

    #[test]
    fn on_variety_residuals_vanish() {
        let cfg = standard();
        for it in 0..6 {
            let t = it as f64 / 5.0;
            let c = cfg.phi(t).unwrap();
            for ia in 0..8 {
                let w = Complex64::from_polar(0.9, 2.0 * std::f64::consts::PI * ia as f64 / 8.0);
                let p = cfg.disc_eval(t, w).unwrap();
                assert!(cfg.quadric().eval(&p).norm() < 1e-15);
                assert!((cfg.submersion().eval(&p) - c).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn zero_c0_is_refused() {
        let err = DiscFamilyConfig::new(
            Quadric::standard(),
            Submersion::standard(),
            FamilyParams {
                c0: ZERO,
                ..FamilyParams::default()
            },
            Tolerances::default(),
        );
        assert!(matches!(err, Err(Error::ConfigInvalid { .. })));
    }

    #[test]
    fn non_transversal_submersion_is_refused() {
        // F = z3 vanishes on both origin lines.
        let err = DiscFamilyConfig::new(
            Quadric::standard(),
            Submersion::new(C3Vector::new(ZERO, ZERO, ONE).unwrap()).unwrap(),
            FamilyParams::default(),
            Tolerances::default(),
        );
        match err {
            Err(Error::ConfigInvalid { reason }) => {
                assert!(reason.contains("transversality"), "reason: {reason}");
            }
            other => panic!("expected ConfigInvalid, got {other:?}"),
        }
    }

    #[test]
    fn containment_violation_is_refused() {
        // The standard family reaches norm ≈ 0.43; an epsilon of 0.3 is too
        // small a working ball.
        let err = DiscFamilyConfig::new(
            Quadric::standard(),
            Submersion::standard(),
            FamilyParams {
                epsilon: 0.3,
                ..FamilyParams::default()
            },
            Tolerances::default(),
        );
        match err {
            Err(Error::ConfigInvalid { reason }) => {
                assert!(reason.contains("epsilon ball"), "reason: {reason}");
            }
            other => panic!("expected ConfigInvalid, got {other:?}"),
        }
    }

    #[test]
    fn holomorphy_residual_is_spectral_for_the_disc() {
        let cfg = standard();
        let disc = cfg.disc(0.4).unwrap();
        let r = disc.holomorphy_residual(cplx(0.2, -0.1), 0.5, 64).unwrap();
        assert!(r < 1e-12, "residual {r}");
    }

    #[test]
    fn holomorphy_residual_flags_conjugate_contamination() {
        // Perturb the first coordinate by 0.01·conj(w): the anti-holomorphic
        // Fourier magnitude must surface as 0.01·radius.
        let cfg = standard();
        let center = re(0.1);
        let radius = 0.5;
        let f = |w: Complex64| -> Result<C3Vector> {
            let mut z = cfg.disc_eval(0.4, w)?;
            z.coords[0] += w.conj() * re(0.01);
            Ok(z)
        };
        let r = holomorphy_residual_map(f, center, radius, 64).unwrap();
        assert!((r - 0.01 * radius).abs() < 1e-10, "residual {r}");
        assert!(r > 1e-3);
    }

    #[test]
    fn holomorphy_residual_constant_map_is_silent() {
        let f = |_w: Complex64| C3Vector::new(re(1.0), re(2.0), cplx(0.0, 3.0));
        let r = holomorphy_residual_map(f, ZERO, 0.7, 32).unwrap();
        assert!(r < 1e-14);
    }

    #[test]
    fn holomorphy_residual_rejects_escaping_circles() {
        let cfg = standard();
        let disc = cfg.disc(0.0).unwrap();
        assert!(disc.holomorphy_residual(re(0.8), 0.5, 32).is_err());
    }

    #[test]
    fn line_crossings_standard_oracle() {
        // At t: the first line (z-axis of z1) is hit at w = φ(t)/ρ giving the
        // point (φ(t), 0, 0); the second at w = 0 giving (0, φ(t), 0).
        let cfg = standard();
        for t in [0.0, 0.5, 0.9] {
            let c = cfg.phi(t).unwrap();
            let [x1, x2] = cfg.line_crossings(t).unwrap();
            assert_eq!(x1.line_index, 0);
            assert!((x1.w - c / re(0.2)).norm() < 1e-10, "t={t} w={}", x1.w);
            assert!((x1.point - C3Vector::raw(c, ZERO, ZERO)).norm() < 1e-10);
            assert!((x2.w).norm() < 1e-10);
            assert!((x2.point - C3Vector::raw(ZERO, c, ZERO)).norm() < 1e-10);
            assert!(x1.margin > 1e-2 && x2.margin > 1e-2);
        }
    }

    #[test]
    fn line_crossings_collapse_to_origin_at_t_one() {
        let cfg = standard();
        let [x1, x2] = cfg.line_crossings(1.0).unwrap();
        assert!(x1.w.norm() < 1e-10 && x2.w.norm() < 1e-10);
        assert!(x1.point.norm() < 1e-10 && x2.point.norm() < 1e-10);
    }

    #[test]
    fn crossings_move_outside_for_large_levels() {
        // With c0/ρ > 1 the first-line crossing w = c0/ρ exits the disc.
        let err = DiscFamilyConfig::new(
            Quadric::standard(),
            Submersion::standard(),
            FamilyParams {
                c0: re(0.25),
                ..FamilyParams::default()
            },
            Tolerances::default(),
        )
        .unwrap()
        .line_crossings(0.0);
        assert!(matches!(err, Err(Error::CrossingOutsideDisc { .. })));
    }

    #[test]
    fn containment_sup_matches_boundary_magnitude() {
        // The sup is attained on the t = 0 boundary circle; sanity-check the
        // order of magnitude so regressions in disc_eval show up.
        let cfg = standard();
        let sup = cfg.containment_sup(9, 6, 12).unwrap();
        assert!(sup > 0.3 && sup < 0.5, "sup = {sup}");
    }

    #[test]
    fn lines_are_the_coordinate_axes() {
        let cfg = standard();
        let tol = Tolerances::default();
        let e1 = project(&C3Vector::new(ONE, ZERO, ZERO).unwrap(), &tol).unwrap();
        let e2 = project(&C3Vector::new(ZERO, ONE, ZERO).unwrap(), &tol).unwrap();
        assert!(cfg.lines().0.class().distance(&e1) < 1e-14);
        assert!(cfg.lines().1.class().distance(&e2) < 1e-14);
    }
}
