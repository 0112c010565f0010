use std::io::Write;

use circdom_core::verify::{closed_lower_bound, gamma_lower_bound};
use circdom_core::exact_gamma;

use super::load_spec;
use crate::args::GammaArgs;
use crate::schema::GammaJson;
use crate::{output, CliError, EXIT_OK};

pub fn run(a: &GammaArgs) -> Result<i32, CliError> {
    let (spec, _) = load_spec(&a.chords)?;
    let gamma = exact_gamma(&spec)?;
    let lower_bound = gamma_lower_bound(spec.n(), spec.k());
    let lower_bound_closed = closed_lower_bound(spec.n(), spec.k());
    let json = GammaJson {
        n: spec.n(),
        k: spec.k(),
        chords: spec.chords().chords().to_vec(),
        gamma,
        lower_bound,
        lower_bound_closed,
        meets_lower_bound: gamma as f64 >= lower_bound,
        meets_closed_bound: gamma as f64 >= lower_bound_closed,
    };
    let mut out = output::open(a.out.as_deref())?;
    serde_json::to_writer_pretty(&mut out, &json).map_err(anyhow::Error::from)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(EXIT_OK)
}
