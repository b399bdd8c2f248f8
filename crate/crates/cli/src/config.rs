//! Run configuration: a JSON document holding the surface, the slicing
//! function, the family shape parameters, named tolerance and density
//! overrides, and the seed. Complex numbers are two-element arrays [re, im].

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use hartogs_core::discs::{FamilyParams, Submersion};
use hartogs_core::projective::C3Vector;
use hartogs_core::{DiscFamilyConfig, Quadric, Tolerances};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub type Cx = [f64; 2];

pub fn cx(c: Cx) -> Complex64 {
    Complex64::new(c[0], c[1])
}

/// Quadratic coefficients use the monomial order
/// [z1², z1z2, z1z3, z2², z2z3, z3²].
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct QuadricConfig {
    pub linear: [Cx; 3],
    pub quadratic: [Cx; 6],
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub quadric: QuadricConfig,
    pub submersion: [Cx; 3],
    pub c0: Cx,
    pub rho: f64,
    pub epsilon: f64,
    pub v_radius: f64,
    pub t_clamp_delta: f64,
    pub seed: u64,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    pub densities: BTreeMap<String, u64>,
}

/// Density names accepted in the `densities` map, with their defaults.
pub const DENSITY_DEFAULTS: [(&str, u64); 10] = [
    ("bezout_points", 1000),
    ("variety_grid", 32),
    ("holomorphy_circles", 200),
    ("injectivity_levels", 25),
    ("injectivity_per_disc", 200),
    ("construct", 100),
    ("continuation_levels", 21),
    // 512 keeps the trapezoid tail below the mismatch tolerance while poles
    // approach the boundary circle; 256 false-flags one level early.
    ("continuation_nodes", 512),
    ("search_multistart", 24),
    ("confirm_grid", 96),
];

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
        let cfg: RunConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
        cfg.validate_names()?;
        Ok(cfg)
    }

    fn validate_names(&self) -> Result<(), CliError> {
        for name in self.tolerances.keys() {
            if !Tolerances::NAMES.contains(&name.as_str()) {
                return Err(CliError::config(format!(
                    "unknown tolerance `{name}`; known names: {}",
                    Tolerances::NAMES.join(", ")
                )));
            }
        }
        for name in self.densities.keys() {
            if !DENSITY_DEFAULTS.iter().any(|(n, _)| n == name) {
                let known: Vec<&str> = DENSITY_DEFAULTS.iter().map(|(n, _)| *n).collect();
                return Err(CliError::config(format!(
                    "unknown density `{name}`; known names: {}",
                    known.join(", ")
                )));
            }
        }
        Ok(())
    }

    pub fn density(&self, name: &str) -> usize {
        let default = DENSITY_DEFAULTS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
            .unwrap_or_else(|| panic!("unlisted density `{name}`"));
        self.densities.get(name).copied().unwrap_or(default) as usize
    }

    /// Tolerances with the config's named overrides applied, then any
    /// command-line `NAME=VALUE` overrides on top.
    pub fn tolerances(&self, overrides: &[(String, f64)]) -> Result<Tolerances, CliError> {
        let mut tol = Tolerances::default();
        for (name, value) in &self.tolerances {
            tol.set(name, *value).map_err(CliError::from_core_config)?;
        }
        for (name, value) in overrides {
            tol.set(name, *value).map_err(CliError::from_core_config)?;
        }
        Ok(tol)
    }

    pub fn quadric(&self) -> Result<Quadric, CliError> {
        let l = self.quadric.linear;
        let linear =
            C3Vector::new(cx(l[0]), cx(l[1]), cx(l[2])).map_err(CliError::from_core_config)?;
        let monomials = self.quadric.quadratic.map(cx);
        Quadric::from_monomials(linear, monomials).map_err(CliError::from_core_config)
    }

    pub fn submersion(&self) -> Result<Submersion, CliError> {
        let f = self.submersion;
        let coeffs =
            C3Vector::new(cx(f[0]), cx(f[1]), cx(f[2])).map_err(CliError::from_core_config)?;
        Submersion::new(coeffs).map_err(CliError::from_core_config)
    }

    pub fn params(&self) -> FamilyParams {
        FamilyParams {
            c0: cx(self.c0),
            rho: self.rho,
            epsilon: self.epsilon,
            v_radius: self.v_radius,
            t_clamp_delta: self.t_clamp_delta,
        }
    }

    /// Assemble and fully re-validate the disc family.
    pub fn family(&self, overrides: &[(String, f64)]) -> Result<DiscFamilyConfig, CliError> {
        DiscFamilyConfig::new(
            self.quadric()?,
            self.submersion()?,
            self.params(),
            self.tolerances(overrides)?,
        )
        .map_err(CliError::from_core_config)
    }
}
