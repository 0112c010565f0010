use std::fs::{File, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;

/// Relative output paths resolve against this directory when it is set.
pub const OUT_DIR_ENV: &str = "CIRCDOM_OUT_DIR";

pub fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Truncating writer for `path`, or stdout.
pub fn open(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            let p = resolve(p);
            Box::new(File::create(&p).with_context(|| format!("cannot create {}", p.display()))?)
        }
        None => Box::new(io::stdout().lock()),
    })
}

/// Appending writer and whether the target already had content.
pub fn open_append(path: Option<&Path>) -> anyhow::Result<(Box<dyn Write>, bool)> {
    Ok(match path {
        Some(p) => {
            let p = resolve(p);
            let existing = p.metadata().map(|m| m.len() > 0).unwrap_or(false);
            let f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&p)
                .with_context(|| format!("cannot open {}", p.display()))?;
            (Box::new(f), existing)
        }
        None => (Box::new(io::stdout().lock()), false),
    })
}
