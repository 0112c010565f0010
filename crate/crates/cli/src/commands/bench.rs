use anyhow::anyhow;
use circdom_core::bounds::dominating_envelope;
use circdom_core::graph::random_chords;
use circdom_core::rng::chord_rng;
use circdom_core::{run_method, CirculantSpec, Dom2Constants, Method, MethodOptions};
use rayon::prelude::*;

use crate::args::BenchArgs;
use crate::schema::{wall_ms, BenchRow};
use crate::{output, CliError, EXIT_OK};

/// One grid point: chords drawn from `(seed, trial 0)`, method run, row filled.
/// Construction errors land in the `error` column.
pub fn bench_row(n: u64, k: usize, method: Method, seed: u64, opts: &MethodOptions, timing: bool) -> BenchRow {
    let mut row = BenchRow {
        n,
        k,
        method: method.as_str().to_string(),
        seed,
        ..Default::default()
    };
    let result = random_chords(n, k, &mut chord_rng(seed, 0))
        .and_then(CirculantSpec::new)
        .and_then(|spec| run_method(&spec, method, &MethodOptions { seed, ..*opts }));
    match result {
        Ok(report) => {
            row.size = Some(report.size());
            row.wall_ms = timing.then(|| wall_ms(report.wall_time));
            row.verified = Some(report.verified);
            if let Some(p) = &report.params {
                row.l = Some(p.l);
                row.w_size = Some(p.w_size);
                row.u_size = p.u_size;
            }
            row.ratio_vs_envelope = Some(report.size() as f64 / dominating_envelope(n, k));
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

pub fn run(a: &BenchArgs) -> Result<i32, CliError> {
    let opts = MethodOptions {
        constants: Dom2Constants {
            c: a.constants.c,
            big_c: a.constants.big_c,
            c0: a.constants.c0,
        },
        psi: a.constants.psi,
        ..Default::default()
    };
    let grid: Vec<(u64, usize, Method, u64)> = a
        .n_list
        .iter()
        .flat_map(|&n| {
            a.k_list.iter().flat_map(move |&k| {
                a.methods
                    .iter()
                    .flat_map(move |&m| a.seeds.iter().map(move |&s| (n, k, Method::from(m), s)))
            })
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| anyhow!(e))?;
    let rows: Vec<BenchRow> = pool.install(|| {
        grid.par_iter()
            .map(|&(n, k, m, s)| bench_row(n, k, m, s, &opts, !a.no_timing))
            .collect()
    });

    let (out, existing) = output::open_append(a.out.as_deref())?;
    let mut writer = csv::WriterBuilder::new().has_headers(!existing).from_writer(out);
    for row in &rows {
        writer.serialize(row).map_err(|e| anyhow!(e))?;
    }
    writer.flush()?;
    Ok(EXIT_OK)
}
