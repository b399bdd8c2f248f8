//! Points of the complex projective plane and homogeneous polynomials on it.
//!
//! A point is stored by a canonical affine representative: the coordinates are
//! divided by the one of largest modulus, so that coordinate becomes exactly
//! `1 + 0i`. Distances use the chordal Fubini–Study formula
//! `d([p],[q]) = sqrt(1 − |⟨p̂, q̂⟩|²)` on unit representatives, which is a
//! genuine metric with values in [0, 1].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerances::Tolerances;

pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn cplx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// A vector in C³, the homogeneous coordinate space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C3Vector {
    pub coords: [Complex64; 3],
}

impl C3Vector {
    /// Components must be finite; infinities and NaNs poison every downstream
    /// residual silently, so they are refused at the door.
    pub fn new(z1: Complex64, z2: Complex64, z3: Complex64) -> Result<Self> {
        let v = C3Vector {
            coords: [z1, z2, z3],
        };
        if !v.is_finite() {
            return Err(Error::NonFinite { z1, z2, z3 });
        }
        Ok(v)
    }

    /// Infallible constructor for values produced by internal arithmetic.
    pub(crate) fn raw(z1: Complex64, z2: Complex64, z3: Complex64) -> Self {
        C3Vector {
            coords: [z1, z2, z3],
        }
    }

    pub fn zero() -> Self {
        C3Vector { coords: [ZERO; 3] }
    }

    pub fn z1(&self) -> Complex64 {
        self.coords[0]
    }

    pub fn z2(&self) -> Complex64 {
        self.coords[1]
    }

    pub fn z3(&self) -> Complex64 {
        self.coords[2]
    }

    pub fn is_finite(&self) -> bool {
        self.coords
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Complex-bilinear pairing Σ aᵢbᵢ (no conjugation); this is the pairing a
    /// differential applies to a tangent vector.
    pub fn dot(&self, other: &C3Vector) -> Complex64 {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Hermitian inner product Σ aᵢ conj(bᵢ).
    pub fn herm_dot(&self, other: &C3Vector) -> Complex64 {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    pub fn scale(&self, s: Complex64) -> C3Vector {
        C3Vector {
            coords: [self.coords[0] * s, self.coords[1] * s, self.coords[2] * s],
        }
    }
}

impl Add for C3Vector {
    type Output = C3Vector;
    fn add(self, rhs: C3Vector) -> C3Vector {
        C3Vector {
            coords: [
                self.coords[0] + rhs.coords[0],
                self.coords[1] + rhs.coords[1],
                self.coords[2] + rhs.coords[2],
            ],
        }
    }
}

impl Sub for C3Vector {
    type Output = C3Vector;
    fn sub(self, rhs: C3Vector) -> C3Vector {
        C3Vector {
            coords: [
                self.coords[0] - rhs.coords[0],
                self.coords[1] - rhs.coords[1],
                self.coords[2] - rhs.coords[2],
            ],
        }
    }
}

impl Neg for C3Vector {
    type Output = C3Vector;
    fn neg(self) -> C3Vector {
        self.scale(re(-1.0))
    }
}

impl Mul<Complex64> for C3Vector {
    type Output = C3Vector;
    fn mul(self, s: Complex64) -> C3Vector {
        self.scale(s)
    }
}

impl fmt::Display for C3Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// Index of the canonical pivot: the first coordinate whose modulus is within
/// a relative `1e-9` of the maximum.
///
/// The slack makes the choice stable under the rounding a canonical division
/// introduces (each modulus ratio moves by at most a few ulp), which is what
/// makes canonicalization idempotent bit for bit.
fn pivot_index(coords: &[Complex64; 3]) -> usize {
    let mods = [coords[0].norm(), coords[1].norm(), coords[2].norm()];
    let max = mods[0].max(mods[1]).max(mods[2]);
    let cut = max * (1.0 - 1e-9);
    mods.iter().position(|&m| m >= cut).expect("max exists")
}

/// A point of P²(C), held by its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint {
    rep: [Complex64; 3],
    norm_index: usize,
}

/// Projectivize a nonzero vector.
pub fn project(z: &C3Vector, tol: &Tolerances) -> Result<ProjectivePoint> {
    let norm = z.norm();
    if !norm.is_finite() {
        return Err(Error::NonFinite {
            z1: z.z1(),
            z2: z.z2(),
            z3: z.z3(),
        });
    }
    if norm < tol.zero_vector {
        return Err(Error::ZeroVector {
            norm,
            threshold: tol.zero_vector,
        });
    }
    let k = pivot_index(&z.coords);
    // Dividing a complex number by itself yields exactly 1 + 0i in IEEE
    // arithmetic, but skip even that when the input is already canonical so
    // re-projection returns the identical bits.
    if z.coords[k] == ONE {
        return Ok(ProjectivePoint {
            rep: z.coords,
            norm_index: k,
        });
    }
    let d = z.coords[k];
    let rep = [z.coords[0] / d, z.coords[1] / d, z.coords[2] / d];
    Ok(ProjectivePoint { rep, norm_index: k })
}

impl ProjectivePoint {
    /// Canonical affine representative; `rep[norm_index] == 1 + 0i` exactly.
    pub fn rep(&self) -> &[Complex64; 3] {
        &self.rep
    }

    pub fn norm_index(&self) -> usize {
        self.norm_index
    }

    pub fn as_vector(&self) -> C3Vector {
        C3Vector { coords: self.rep }
    }

    /// Representative of Euclidean norm 1 (same phase convention as `rep`).
    pub fn unit_rep(&self) -> [Complex64; 3] {
        let n = self.as_vector().norm();
        [self.rep[0] / n, self.rep[1] / n, self.rep[2] / n]
    }

    /// Chordal Fubini–Study distance, `sqrt(1 − |⟨p̂, q̂⟩|²)` on unit
    /// representatives. Zero exactly on equal classes, 1 on orthogonal ones.
    ///
    /// Evaluated through the Lagrange identity as the norm of the wedge
    /// `Σ_{i<j} |p̂ᵢq̂ⱼ − p̂ⱼq̂ᵢ|²`; the textbook form cancels catastrophically
    /// near coincident classes and cannot resolve distances below ~1e−8.
    pub fn distance(&self, other: &ProjectivePoint) -> f64 {
        let p = self.unit_rep();
        let q = other.unit_rep();
        let mut wedge = 0.0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                wedge += (p[i] * q[j] - p[j] * q[i]).norm_sqr();
            }
        }
        wedge.sqrt().min(1.0)
    }

    /// Componentwise agreement of canonical representatives.
    pub fn approx_eq(&self, other: &ProjectivePoint, tol: f64) -> bool {
        self.norm_index == other.norm_index
            && self
                .rep
                .iter()
                .zip(other.rep.iter())
                .all(|(a, b)| (a - b).norm() <= tol)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.rep[0], self.rep[1], self.rep[2])
    }
}

/// A homogeneous polynomial in z1, z2, z3, stored sparsely by exponent triple.
///
/// The exponent map is ordered, so iteration (and therefore evaluation and
/// printing) is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPolynomial {
    degree: u32,
    coeffs: BTreeMap<[u32; 3], Complex64>,
}

impl HomogeneousPolynomial {
    /// Build from `(i, j, k, coefficient)` terms; every exponent triple must
    /// sum to `degree`. Zero coefficients are dropped.
    pub fn from_terms(degree: u32, terms: &[([u32; 3], Complex64)]) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for &(expo, c) in terms {
            let d: u32 = expo.iter().sum();
            if d != degree {
                return Err(Error::Parse(format!(
                    "monomial z1^{}*z2^{}*z3^{} has degree {}, expected {}",
                    expo[0], expo[1], expo[2], d, degree
                )));
            }
            if c != ZERO {
                let entry = coeffs.entry(expo).or_insert(ZERO);
                *entry += c;
                if *entry == ZERO {
                    coeffs.remove(&expo);
                }
            }
        }
        Ok(HomogeneousPolynomial { degree, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Complex64)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest coefficient modulus; the natural scale of the polynomial.
    pub fn coeff_sup(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: &C3Vector) -> Complex64 {
        let mut acc = ZERO;
        for (expo, c) in &self.coeffs {
            let mut term = *c;
            for (axis, &e) in expo.iter().enumerate() {
                if e > 0 {
                    term *= z.coords[axis].powu(e);
                }
            }
            acc += term;
        }
        acc
    }

    /// Formal partial derivative along one axis (0, 1 or 2).
    pub fn partial(&self, axis: usize) -> HomogeneousPolynomial {
        assert!(axis < 3);
        let mut coeffs = BTreeMap::new();
        for (expo, c) in &self.coeffs {
            let e = expo[axis];
            if e == 0 {
                continue;
            }
            let mut down = *expo;
            down[axis] = e - 1;
            let entry = coeffs.entry(down).or_insert(ZERO);
            *entry += c * re(e as f64);
            if *entry == ZERO {
                coeffs.remove(&down);
            }
        }
        HomogeneousPolynomial {
            degree: self.degree.saturating_sub(1),
            coeffs,
        }
    }

    /// |Σ zⱼ ∂Q/∂zⱼ (z) − deg·Q(z)|: the Euler identity defect, which is pure
    /// rounding noise for a genuinely homogeneous polynomial.
    pub fn euler_residual(&self, z: &C3Vector) -> f64 {
        let mut graded = ZERO;
        for axis in 0..3 {
            graded += z.coords[axis] * self.partial(axis).eval(z);
        }
        (graded - re(self.degree as f64) * self.eval(z)).norm()
    }

    /// Scale-free magnitude of Q at a projective point: |Q(p̂)| on the unit
    /// representative, divided by the largest coefficient modulus. Vanishes
    /// exactly when the point lies on the curve, independent of the scaling of
    /// either the point or the polynomial.
    pub fn normalized_magnitude(&self, p: &ProjectivePoint) -> f64 {
        let sup = self.coeff_sup();
        if sup == 0.0 {
            return 0.0;
        }
        let u = p.unit_rep();
        self.eval(&C3Vector { coords: u }).norm() / sup
    }
}

fn fmt_complex_coeff(c: Complex64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.im == 0.0 {
        write!(f, "{}", c.re)
    } else if c.re == 0.0 {
        write!(f, "{}i", c.im)
    } else if c.im < 0.0 {
        write!(f, "({}{}i)", c.re, c.im)
    } else {
        write!(f, "({}+{}i)", c.re, c.im)
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (expo, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            fmt_complex_coeff(*c, f)?;
            for (axis, &e) in expo.iter().enumerate() {
                if e == 1 {
                    write!(f, "*z{}", axis + 1)?;
                } else if e > 1 {
                    write!(f, "*z{}^{}", axis + 1, e)?;
                }
            }
        }
        Ok(())
    }
}
