//! The four subcommands. Each returns the process exit code: 0 all audits
//! pass, 1 an audit or minimum failed, 2 never reaches here (config and IO
//! problems are `CliError`).

use std::path::{Path, PathBuf};

use hartogs_core::{
    all_pass, continuation_sweep, curve_min_on_disc, grid_min, grid_points, parse_element,
    parse_polynomial, random_curve, run_manifest, uniform_grid, AuditDensities, FunctionElement,
    HartogsFigure, HomogeneousPolynomial, SmoothedDisc,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::csv_out;
use crate::report::{
    AuditReport, ContinueReport, CurveRecord, IntersectReport, SweepReport, ToolInfo,
    INTERSECT_SCOPE_NOTE,
};
use crate::CliError;

pub struct Effective {
    pub config: RunConfig,
    pub seed: u64,
    pub overrides: Vec<(String, f64)>,
    pub output: Option<PathBuf>,
}

impl Effective {
    /// The configuration as it ran: seed and tolerance overrides folded in,
    /// so the report echo is self-contained.
    fn echo(&self) -> RunConfig {
        let mut echo = self.config.clone();
        echo.seed = self.seed;
        for (name, value) in &self.overrides {
            echo.tolerances.insert(name.clone(), *value);
        }
        echo
    }

    fn emit(&self, document: &str) -> Result<(), CliError> {
        let mut with_newline = String::with_capacity(document.len() + 1);
        with_newline.push_str(document);
        with_newline.push('\n');
        // A closed pipe downstream is not our error.
        use std::io::Write;
        let _ = std::io::stdout().write_all(with_newline.as_bytes());
        if let Some(path) = &self.output {
            csv_out::write_atomic(path, &with_newline)?;
        }
        Ok(())
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map_err(|e| CliError::config(format!("report serialization failed: {e}")))
}

pub fn cmd_construct(eff: &Effective, density: Option<usize>) -> Result<i32, CliError> {
    let output = eff
        .output
        .as_deref()
        .ok_or_else(|| CliError::config("construct requires --output PATH"))?;
    let density = density.unwrap_or_else(|| eff.config.density("construct"));
    if density < 2 {
        return Err(CliError::config(format!(
            "density must be at least 2, got {density}"
        )));
    }
    let family = eff.config.family(&eff.overrides)?;
    let figure = HartogsFigure::new(family.clone()).map_err(CliError::from_core_config)?;
    let disc = SmoothedDisc::new(family).map_err(CliError::from_core_config)?;

    let mut samples = figure
        .sample(density, density, density)
        .map_err(CliError::from_core_config)?;
    samples.extend(
        disc.sample(density, density, density)
            .map_err(CliError::from_core_config)?,
    );

    let body = csv_out::render(&samples);
    csv_out::write_atomic(output, &body)?;
    println!("wrote {} samples to {}", samples.len(), output.display());
    Ok(0)
}

pub fn cmd_verify(eff: &Effective) -> Result<i32, CliError> {
    let quadric = eff.config.quadric()?;
    let submersion = eff.config.submersion()?;
    let tol = eff.config.tolerances(&eff.overrides)?;
    let densities = AuditDensities {
        bezout_points: eff.config.density("bezout_points"),
        variety_grid: eff.config.density("variety_grid"),
        holomorphy_circles: eff.config.density("holomorphy_circles"),
        injectivity_levels: eff.config.density("injectivity_levels"),
        injectivity_per_disc: eff.config.density("injectivity_per_disc"),
    };
    let outcomes = run_manifest(
        &quadric,
        &submersion,
        eff.config.params(),
        &tol,
        eff.seed,
        &densities,
    );
    let pass = all_pass(&outcomes);
    let report = AuditReport {
        tool: ToolInfo::current(),
        config: eff.echo(),
        audits: outcomes.into_iter().map(Into::into).collect(),
        all_pass: pass,
    };
    eff.emit(&to_json(&report)?)?;
    Ok(if pass { 0 } else { 1 })
}

fn parse_curve(spec: &str) -> Result<HomogeneousPolynomial, CliError> {
    let q = parse_polynomial(spec).map_err(CliError::from_core_config)?;
    if q.is_zero() {
        return Err(CliError::config(
            "the zero polynomial defines no curve; give a nonzero spec",
        ));
    }
    Ok(q)
}

pub fn cmd_intersect(
    eff: &Effective,
    curve: Option<&str>,
    random: Option<usize>,
    max_degree: u32,
) -> Result<i32, CliError> {
    let family = eff.config.family(&eff.overrides)?;
    let tol = family.tolerances().clone();
    let disc = SmoothedDisc::new(family).map_err(CliError::from_core_config)?;

    let curves: Vec<HomogeneousPolynomial> = match (curve, random) {
        (Some(spec), None) => vec![parse_curve(spec)?],
        (None, Some(n)) => {
            if n == 0 {
                return Err(CliError::config("--random needs a positive count"));
            }
            if max_degree == 0 {
                return Err(CliError::config("--max-degree must be at least 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(eff.seed);
            (0..n)
                .map(|i| random_curve((i as u32 % max_degree) + 1, &mut rng))
                .collect()
        }
        (None, None) => {
            return Err(CliError::config(
                "provide either --curve SPEC or --random N",
            ))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::config(
                "--curve and --random are mutually exclusive",
            ))
        }
    };

    let grid = grid_points(&disc, eff.config.density("confirm_grid"))
        .map_err(CliError::from_core_config)?;
    let multistart = eff.config.density("search_multistart");
    let mut records = Vec::with_capacity(curves.len());
    for (i, q) in curves.iter().enumerate() {
        let search = curve_min_on_disc(&disc, q, multistart, eff.seed.wrapping_add(i as u64))
            .map_err(CliError::from_core_config)?;
        let (grid_minimum, _) = grid_min(&grid, q);
        records.push(CurveRecord::new(
            q.to_string(),
            q.degree(),
            &search,
            grid_minimum,
            tol.curve_min,
        ));
    }
    let pass = records.iter().all(|r| r.pass);
    let report = IntersectReport {
        tool: ToolInfo::current(),
        seed: eff.seed,
        threshold: tol.curve_min,
        curves: records,
        all_pass: pass,
        scope_note: INTERSECT_SCOPE_NOTE,
    };
    eff.emit(&to_json(&report)?)?;
    Ok(if pass { 0 } else { 1 })
}

pub fn cmd_continue(eff: &Effective, function: Option<&str>) -> Result<i32, CliError> {
    let family = eff.config.family(&eff.overrides)?;
    let elements: Vec<FunctionElement> = match function {
        Some(spec) => vec![parse_element(spec).map_err(CliError::from_core_config)?],
        None => vec![
            FunctionElement::clean_default(),
            FunctionElement::pole_crossing_default(),
        ],
    };
    let t_grid = uniform_grid(eff.config.density("continuation_levels"));
    let nodes = eff.config.density("continuation_nodes");
    let mut sweeps: Vec<SweepReport> = Vec::with_capacity(elements.len());
    for element in &elements {
        let sweep = continuation_sweep(element, &family, &t_grid, nodes)
            .map_err(CliError::from_core_config)?;
        sweeps.push(sweep.into());
    }
    let report = ContinueReport {
        tool: ToolInfo::current(),
        sweeps,
    };
    eff.emit(&to_json(&report)?)?;
    Ok(0)
}

pub fn load_effective(
    config_path: &Path,
    output: Option<PathBuf>,
    seed: Option<u64>,
    tolerance_flags: &[String],
) -> Result<Effective, CliError> {
    let config = RunConfig::load(config_path)?;
    let mut overrides = Vec::with_capacity(tolerance_flags.len());
    for flag in tolerance_flags {
        let (name, value) = flag.split_once('=').ok_or_else(|| {
            CliError::config(format!("--tolerance needs NAME=VALUE, got `{flag}`"))
        })?;
        let value: f64 = value
            .parse()
            .map_err(|e| CliError::config(format!("--tolerance {name}: bad value: {e}")))?;
        overrides.push((name.to_string(), value));
    }
    let seed = seed.unwrap_or(config.seed);
    Ok(Effective {
        config,
        seed,
        overrides,
        output,
    })
}
