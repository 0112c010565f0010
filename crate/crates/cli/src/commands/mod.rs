pub mod audit;
pub mod bench;
pub mod construct;
pub mod gamma;

use anyhow::anyhow;
use circdom_core::graph::{random_chords, random_symmetric_chords, read_chord_file};
use circdom_core::rng::chord_rng;
use circdom_core::CirculantSpec;

use crate::args::ChordArgs;
use crate::schema::ChordSourceJson;
use crate::CliError;

/// Reads or draws the chord set named on the command line.
pub fn load_spec(a: &ChordArgs) -> Result<(CirculantSpec, ChordSourceJson), CliError> {
    let (chords, source) = match (&a.chords_file, a.random_chords) {
        (Some(path), None) => (
            read_chord_file(path, a.n)?,
            ChordSourceJson {
                kind: "file",
                path: Some(path.display().to_string()),
                seed: None,
                symmetric: false,
            },
        ),
        (None, Some(k)) => {
            let seed = a.seed.ok_or_else(|| anyhow!("--random-chords requires --seed"))?;
            let mut rng = chord_rng(seed, 0);
            let chords = if a.symmetric {
                random_symmetric_chords(a.n, k, &mut rng)?
            } else {
                random_chords(a.n, k, &mut rng)?
            };
            (
                chords,
                ChordSourceJson {
                    kind: "random",
                    path: None,
                    seed: Some(seed),
                    symmetric: a.symmetric,
                },
            )
        }
        _ => return Err(anyhow!("exactly one of --chords-file and --random-chords is required").into()),
    };
    let mut source = source;
    source.symmetric = chords.is_symmetric();
    Ok((CirculantSpec::new(chords)?, source))
}

pub(crate) fn write_json_line<W: std::io::Write + ?Sized, T: serde::Serialize>(out: &mut W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(|e| anyhow!(e))?;
    out.write_all(b"\n")?;
    Ok(())
}
