use crate::error::{Error, Result};

/// Central numeric thresholds shared by constructions and audits.
///
/// Every comparison against "small" in this crate routes through one of these
/// fields, so a single override (`--tolerance name=value` on the command line)
/// reaches every consumer consistently.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    /// ‖z‖ below this cannot be projectivized.
    pub zero_vector: f64,
    /// Residual of the defining equations P(v) = 0, l·v = 0 on a unit line direction.
    pub line_residual: f64,
    /// Relative discriminant size below which the restricted quadratic has a
    /// double root and line extraction is refused.
    pub degeneracy: f64,
    /// Accuracy of the Bezout parameter roots.
    pub bezout: f64,
    /// Transversality margins below this fail the certificate.
    pub transversality: f64,
    /// |P| and |F − c| allowed on points claimed to lie on a level curve.
    pub on_variety: f64,
    /// Newton residual for graph-chart solves.
    pub newton: f64,
    /// Mean-value / Fourier residual allowed for a holomorphic disc.
    pub holomorphy: f64,
    /// Derivative margin required at a line crossing for it to count as simple.
    pub crossing_margin: f64,
    /// Projective distance under which two samples from different discs count
    /// as a collision.
    pub collision: f64,
    /// Collisions within this distance of a marked line class are expected and
    /// excluded from violation counts.
    pub exclusion_radius: f64,
    /// Minimal projective separation demanded of distinct samples on one disc.
    pub same_disc_separation: f64,
    /// Taylor coefficients below this are treated as zero in blow-up extraction.
    pub taylor_coefficient: f64,
    /// Minimal denominator modulus on a boundary circle before Cauchy data is trusted.
    pub boundary_pole: f64,
    /// Reconstruction mismatch on interior targets allowed for a clean parameter.
    pub reconstruction: f64,
    /// Interior/boundary magnitude ratio that flags a blow-up.
    pub blowup_factor: f64,
    /// Bound the located curve minimum must beat for an intersection to be declared.
    pub curve_min: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            zero_vector: 1e-14,
            line_residual: 1e-10,
            degeneracy: 1e-10,
            bezout: 1e-8,
            transversality: 1e-6,
            on_variety: 1e-10,
            newton: 1e-13,
            holomorphy: 1e-8,
            crossing_margin: 1e-8,
            collision: 1e-4,
            exclusion_radius: 1e-2,
            same_disc_separation: 1e-6,
            taylor_coefficient: 1e-12,
            boundary_pole: 1e-8,
            reconstruction: 1e-8,
            blowup_factor: 1e3,
            curve_min: 1e-6,
        }
    }
}

macro_rules! tolerance_names {
    ($($field:ident),* $(,)?) => {
        /// Names accepted by [`Tolerances::set`], in declaration order.
        pub const NAMES: &'static [&'static str] = &[$(stringify!($field)),*];

        /// Override one threshold by name.
        pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::invalid(format!(
                    "tolerance `{name}` must be finite and positive, got {value}"
                )));
            }
            match name {
                $(stringify!($field) => { self.$field = value; Ok(()) })*
                _ => Err(Error::UnknownTolerance(name.to_string())),
            }
        }

        pub fn get(&self, name: &str) -> Result<f64> {
            match name {
                $(stringify!($field) => Ok(self.$field),)*
                _ => Err(Error::UnknownTolerance(name.to_string())),
            }
        }
    };
}

impl Tolerances {
    tolerance_names!(
        zero_vector,
        line_residual,
        degeneracy,
        bezout,
        transversality,
        on_variety,
        newton,
        holomorphy,
        crossing_margin,
        collision,
        exclusion_radius,
        same_disc_separation,
        taylor_coefficient,
        boundary_pole,
        reconstruction,
        blowup_factor,
        curve_min,
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_and_get_round_trip() {
        let mut tol = Tolerances::default();
        for &name in Tolerances::NAMES {
            tol.set(name, 0.125).unwrap();
            assert_eq!(tol.get(name).unwrap(), 0.125);
        }
    }

    #[test]
    fn unknown_name_is_rejected() {
        let mut tol = Tolerances::default();
        assert!(matches!(
            tol.set("no_such_knob", 1.0),
            Err(Error::UnknownTolerance(_))
        ));
    }

    #[test]
    fn non_positive_values_are_rejected() {
        let mut tol = Tolerances::default();
        assert!(tol.set("bezout", 0.0).is_err());
        assert!(tol.set("bezout", -1e-8).is_err());
        assert!(tol.set("bezout", f64::NAN).is_err());
    }
}
