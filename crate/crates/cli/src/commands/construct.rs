use std::io::Write;

use circdom_core::{run_method, Dom2Constants, Method, MethodOptions};

use super::load_spec;
use crate::args::ConstructArgs;
use crate::schema::ReportJson;
use crate::{output, CliError, EXIT_OK, EXIT_UNVERIFIED};

pub fn run(a: &ConstructArgs) -> Result<i32, CliError> {
    let (spec, source) = load_spec(&a.chords)?;
    let method: Method = a.method.into();
    let opts = MethodOptions {
        constants: Dom2Constants {
            c: a.constants.c,
            big_c: a.constants.big_c,
            c0: a.constants.c0,
        },
        psi: a.constants.psi,
        seed: a.chords.seed.unwrap_or(0),
        k_threshold: a.k_threshold,
        radius: a.r,
    };
    let report = run_method(&spec, method, &opts)?;
    let json = ReportJson::new(&report, source, a.constants.psi, !a.no_timing);
    let mut out = output::open(a.out.as_deref())?;
    serde_json::to_writer_pretty(&mut out, &json).map_err(anyhow::Error::from)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(if report.verified { EXIT_OK } else { EXIT_UNVERIFIED })
}
