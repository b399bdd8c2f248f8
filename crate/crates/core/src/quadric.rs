//! A smooth quadric surface through the origin of C³ and the two complex
//! lines it contains there.
//!
//! The surface is the zero set of `P(z) = l·z + zᵀQz` with `l ≠ 0` and `Q`
//! symmetric. A line through the origin, `s ↦ s·v`, lies in the surface iff
//! `l·v = 0` and `vᵀQv = 0`: restricting the quadratic form to the kernel
//! plane of `l` leaves a binary quadratic `As² + 2Bsu + Cu²` whose two roots
//! in P¹ are the line directions. A double root (`B² − AC ≈ 0`) means the
//! surface is degenerate for our purposes and extraction refuses it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::projective::{project, re, C3Vector, ProjectivePoint, ONE, ZERO};
use crate::tolerances::Tolerances;

/// `P(z) = linear·z + zᵀ quad z`, `quad` symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadric {
    linear: C3Vector,
    quad: [[Complex64; 3]; 3],
}

/// Monomial coefficient order used for the six-entry quadratic encoding:
/// z1², z1z2, z1z3, z2², z2z3, z3².
pub const QUAD_MONOMIALS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

impl Quadric {
    /// Build from the linear part and a symmetric quadratic matrix. Matrices
    /// are symmetrized; a zero linear part is refused (the origin would be a
    /// singular point of the surface).
    pub fn new(linear: C3Vector, quad: [[Complex64; 3]; 3]) -> Result<Self> {
        if linear.norm() == 0.0 {
            return Err(Error::invalid(
                "quadric has zero linear part; the surface is singular at the origin",
            ));
        }
        let mut sym = [[ZERO; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                sym[i][j] = (quad[i][j] + quad[j][i]) * re(0.5);
            }
        }
        for row in &sym {
            for c in row {
                if !(c.re.is_finite() && c.im.is_finite()) {
                    return Err(Error::invalid("non-finite quadratic coefficient"));
                }
            }
        }
        Ok(Quadric { linear, quad: sym })
    }

    /// Build from monomial coefficients `[z1², z1z2, z1z3, z2², z2z3, z3²]`.
    pub fn from_monomials(linear: C3Vector, monomials: [Complex64; 6]) -> Result<Self> {
        let mut quad = [[ZERO; 3]; 3];
        for (c, (i, j)) in monomials.into_iter().zip(QUAD_MONOMIALS) {
            if i == j {
                quad[i][j] = c;
            } else {
                quad[i][j] = c * re(0.5);
                quad[j][i] = quad[i][j];
            }
        }
        Quadric::new(linear, quad)
    }

    /// The default surface `z3 − z1·z2 = 0`.
    pub fn standard() -> Self {
        let mut quad = [[ZERO; 3]; 3];
        quad[0][1] = re(-0.5);
        quad[1][0] = re(-0.5);
        Quadric {
            linear: C3Vector::raw(ZERO, ZERO, ONE),
            quad,
        }
    }

    pub fn linear(&self) -> &C3Vector {
        &self.linear
    }

    pub fn quad(&self) -> &[[Complex64; 3]; 3] {
        &self.quad
    }

    /// Monomial coefficients in the [`QUAD_MONOMIALS`] order.
    pub fn monomials(&self) -> [Complex64; 6] {
        let mut out = [ZERO; 6];
        for (slot, (i, j)) in out.iter_mut().zip(QUAD_MONOMIALS) {
            *slot = if i == j {
                self.quad[i][j]
            } else {
                self.quad[i][j] * re(2.0)
            };
        }
        out
    }

    fn quad_apply(&self, z: &C3Vector) -> C3Vector {
        let mut out = [ZERO; 3];
        for (o, row) in out.iter_mut().zip(&self.quad) {
            for (q, zc) in row.iter().zip(&z.coords) {
                *o += q * zc;
            }
        }
        C3Vector { coords: out }
    }

    pub fn eval(&self, z: &C3Vector) -> Complex64 {
        self.linear.dot(z) + z.dot(&self.quad_apply(z))
    }

    /// ∇P(z) = l + 2Qz.
    pub fn gradient(&self, z: &C3Vector) -> C3Vector {
        self.linear + self.quad_apply(z).scale(re(2.0))
    }

    /// Largest quadratic coefficient modulus; scale reference for residuals.
    pub fn quad_sup(&self) -> f64 {
        self.quad
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

/// A complex line through the origin contained in a quadric, held by the
/// projective class of its direction vector.
#[derive(Debug, Clone, PartialEq)]
pub struct OriginLine {
    direction: ProjectivePoint,
}

impl OriginLine {
    pub fn class(&self) -> &ProjectivePoint {
        &self.direction
    }

    /// Direction vector of Euclidean norm 1.
    pub fn unit_direction(&self) -> C3Vector {
        C3Vector {
            coords: self.direction.unit_rep(),
        }
    }

    /// Residual of the defining equations on the unit direction:
    /// max(|l·v̂|, |v̂ᵀQv̂|).
    pub fn residual(&self, q: &Quadric) -> f64 {
        let v = self.unit_direction();
        let lin = q.linear.dot(&v).norm() / q.linear.norm();
        let quad = v.dot(&q.quad_apply(&v)).norm();
        lin.max(quad)
    }
}

fn total_key(p: &ProjectivePoint) -> [f64; 7] {
    let r = p.rep();
    [
        p.norm_index() as f64,
        r[0].re,
        r[0].im,
        r[1].re,
        r[1].im,
        r[2].re,
        r[2].im,
    ]
}

fn order_pair(a: OriginLine, b: OriginLine) -> (OriginLine, OriginLine) {
    let (ka, kb) = (total_key(a.class()), total_key(b.class()));
    for (x, y) in ka.iter().zip(kb.iter()) {
        match x.total_cmp(y) {
            std::cmp::Ordering::Less => return (a, b),
            std::cmp::Ordering::Greater => return (b, a),
            std::cmp::Ordering::Equal => {}
        }
    }
    (a, b)
}

/// Extract the two origin lines of the quadric.
///
/// Returns them deterministically ordered (pivot index first, then
/// lexicographic on the canonical representative), so callers can speak of
/// "the first line" stably across runs.
pub fn lines_through_origin(q: &Quadric, tol: &Tolerances) -> Result<(OriginLine, OriginLine)> {
    let l = &q.linear;
    // Pivot on the largest |l_m|; the kernel basis then has entries ≤ 1.
    let mods = [l.coords[0].norm(), l.coords[1].norm(), l.coords[2].norm()];
    let m = (0..3)
        .max_by(|&a, &b| mods[a].total_cmp(&mods[b]))
        .expect("nonempty");
    let others: Vec<usize> = (0..3).filter(|&j| j != m).collect();
    let (i1, i2) = (others[0], others[1]);

    let mut basis = [C3Vector::zero(), C3Vector::zero()];
    for (slot, idx) in basis.iter_mut().zip([i1, i2]) {
        let mut v = [ZERO; 3];
        v[idx] = ONE;
        v[m] = -(l.coords[idx] / l.coords[m]);
        *slot = C3Vector { coords: v };
    }
    let [b1, b2] = basis;

    // Restricted binary quadratic As² + 2Bsu + Cu² on the kernel plane.
    let a = b1.dot(&q.quad_apply(&b1));
    let b = b1.dot(&q.quad_apply(&b2));
    let c = b2.dot(&q.quad_apply(&b2));

    let sup = a.norm().max(b.norm()).max(c.norm());
    let basis_scale = b1.norm_sqr().max(b2.norm_sqr());
    if sup <= tol.degeneracy * q.quad_sup() * basis_scale {
        // The quadratic form vanishes on the whole kernel plane: a plane of
        // lines, not two.
        return Err(Error::DegenerateQuadric {
            discriminant: 0.0,
            relative: 0.0,
        });
    }

    let disc = b * b - a * c;
    if disc.norm() <= tol.degeneracy * sup * sup {
        return Err(Error::DegenerateQuadric {
            discriminant: 4.0 * disc.norm(),
            relative: disc.norm() / (sup * sup),
        });
    }

    let tiny = 1e-14 * sup;
    let (v1, v2) = if a.norm() <= tiny && c.norm() <= tiny {
        // 2Bsu = 0: the basis directions themselves (exact for the standard
        // surface).
        (b1, b2)
    } else {
        let sqrt_d = disc.sqrt();
        // Citardauq pairing: divide by the larger of B ± √D to keep both
        // roots well conditioned.
        let (plus, minus) = (b + sqrt_d, b - sqrt_d);
        let qq = if plus.norm() >= minus.norm() {
            -plus
        } else {
            -minus
        };
        if a.norm() >= c.norm() {
            let s1 = qq / a;
            let s2 = c / qq;
            (b1.scale(s1) + b2, b1.scale(s2) + b2)
        } else {
            let u1 = qq / c;
            let u2 = a / qq;
            (b1 + b2.scale(u1), b1 + b2.scale(u2))
        }
    };

    let mut lines = Vec::with_capacity(2);
    for v in [v1, v2] {
        let line = OriginLine {
            direction: project(&v, tol)?,
        };
        let res = line.residual(q);
        if res > tol.line_residual {
            return Err(Error::HypothesisViolated {
                reason: format!(
                    "extracted direction {} fails the line residual: {res:.3e}",
                    line.class()
                ),
            });
        }
        lines.push(line);
    }
    let l2 = lines.pop().expect("two lines");
    let l1 = lines.pop().expect("two lines");
    Ok(order_pair(l1, l2))
}

/// How a parametrized line `t ↦ t·z` meets the quadric.
#[derive(Debug, Clone, PartialEq)]
pub enum BezoutIntersection {
    /// Parameter values of the intersection points. `P(tz) = (l·z)t + (zᵀQz)t²`
    /// always has the root 0; the second root −(l·z)/(zᵀQz) is listed when the
    /// quadratic coefficient survives.
    Roots(Vec<Complex64>),
    /// Both coefficients vanish: the whole line lies inside the surface.
    ContainedLine,
}

pub fn bezout_intersection(
    q: &Quadric,
    z: &C3Vector,
    tol: &Tolerances,
) -> Result<BezoutIntersection> {
    let zn = z.norm();
    if zn < tol.zero_vector {
        return Err(Error::ZeroVector {
            norm: zn,
            threshold: tol.zero_vector,
        });
    }
    let a = q.linear.dot(z);
    let b = z.dot(&q.quad_apply(z));
    let a_scale = q.linear.norm() * zn;
    let b_scale = (q.quad_sup() * zn * zn).max(f64::MIN_POSITIVE);
    let a_zero = a.norm() <= tol.bezout * a_scale;
    let b_zero = b.norm() <= tol.bezout * b_scale;
    match (a_zero, b_zero) {
        (true, true) => Ok(BezoutIntersection::ContainedLine),
        (false, true) => Ok(BezoutIntersection::Roots(vec![ZERO])),
        _ => Ok(BezoutIntersection::Roots(vec![ZERO, -(a / b)])),
    }
}

/// Quantitative transversality of a linear submersion against the quadric's
/// origin geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct TransversalityReport {
    /// |dF(v̂)| on the unit direction of each origin line.
    pub line_margins: [f64; 2],
    /// Smallest singular value of the 2×3 matrix with rows ∇P(0) and dF.
    pub surface_margin: f64,
    /// Margins at or below this fail the certificate.
    pub threshold: f64,
}

impl TransversalityReport {
    pub fn passes(&self) -> bool {
        self.line_margins[0] > self.threshold
            && self.line_margins[1] > self.threshold
            && self.surface_margin > self.threshold
    }

    pub fn worst_margin(&self) -> f64 {
        self.line_margins[0]
            .min(self.line_margins[1])
            .min(self.surface_margin)
    }
}

/// Smallest singular value of the 2×3 complex matrix with the given rows,
/// from the closed-form eigenvalues of the 2×2 Hermitian Gram matrix.
pub fn min_singular_value_2x3(row_a: &C3Vector, row_b: &C3Vector) -> f64 {
    let g11 = row_a.norm_sqr();
    let g22 = row_b.norm_sqr();
    let g12 = row_a.herm_dot(row_b);
    let tr = g11 + g22;
    let det = (g11 * g22 - g12.norm_sqr()).max(0.0);
    let gap = ((tr * tr - 4.0 * det).max(0.0)).sqrt();
    (0.5 * (tr - gap)).max(0.0).sqrt()
}

/// Certify that the level sets of `F(z) = f·z` cut the quadric's origin
/// geometry transversally: F restricted to each origin line must be a
/// bijection (nonzero derivative), and {∇P(0), dF} must have rank 2.
pub fn transversality_certificate(
    q: &Quadric,
    f: &C3Vector,
    lines: &(OriginLine, OriginLine),
    tol: &Tolerances,
) -> TransversalityReport {
    let m1 = f.dot(&lines.0.unit_direction()).norm();
    let m2 = f.dot(&lines.1.unit_direction()).norm();
    let grad0 = q.gradient(&C3Vector::zero());
    TransversalityReport {
        line_margins: [m1, m2],
        surface_margin: min_singular_value_2x3(&grad0, f),
        threshold: tol.transversality,
    }
}
