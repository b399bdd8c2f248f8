//! Point-cloud CSV: `chart,param1,param2` plus the six real coordinates of
//! the canonical representative. UTF-8, LF, header mandatory, written
//! atomically (temp file + rename).

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use hartogs_core::figure::FigureSample;

use crate::CliError;

pub const CSV_HEADER: &str = "chart,param1,param2,z1_re,z1_im,z2_re,z2_im,z3_re,z3_im";

pub fn render(samples: &[FigureSample]) -> String {
    let mut out = String::with_capacity(64 * (samples.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for s in samples {
        let r = s.point.rep();
        // `{}` on f64 is the shortest round-trip form, so identical inputs
        // reproduce identical bytes.
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            s.chart.as_str(),
            s.p1,
            s.p2,
            r[0].re,
            r[0].im,
            r[1].re,
            r[1].im,
            r[2].re,
            r[2].im,
        );
    }
    out
}

/// Write atomically: stage into `<path>.tmp` in the destination directory,
/// then rename over the target.
pub fn write_atomic(path: &Path, content: &str) -> Result<(), CliError> {
    let tmp = path.with_extension("tmp");
    let fail =
        |e: std::io::Error| CliError::config(format!("cannot write {}: {e}", path.display()));
    let mut file = fs::File::create(&tmp).map_err(fail)?;
    file.write_all(content.as_bytes()).map_err(fail)?;
    file.sync_all().map_err(fail)?;
    drop(file);
    fs::rename(&tmp, path).map_err(fail)?;
    Ok(())
}
