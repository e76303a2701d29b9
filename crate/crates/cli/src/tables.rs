//! Producing triangles from a [`RunConfig`], with an optional on-disk cache.

use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use pap_core::triangles::{bc_from_ad, eulerian_recurrence, r_recurrence, signed_recurrence};
use pap_core::{enumerate_pap_triangles, enumerate_triangles, Kind, Triangle, TriangleSet};

use crate::config::{RunConfig, Source};

/// Bumped whenever the meaning of a cached triangle could change.
const CACHE_VERSION: &str = concat!("v", env!("CARGO_PKG_VERSION"));

pub fn build(kind: Kind, cfg: &RunConfig) -> Result<Triangle> {
    let source = cfg.source_for(kind)?;
    let Some(dir) = &cfg.cache_dir else {
        return compute(kind, source, cfg);
    };
    let path = cache_path(dir, kind, cfg);
    if let Some(t) = load(&path)? {
        return Ok(t);
    }
    let triangle = compute(kind, source, cfg)?;
    store(dir, &path, &triangle)?;
    Ok(triangle)
}

/// Like [`build`] for several kinds that come out of one computation:
/// the cache is used only if it holds every requested kind.
pub fn build_set(
    kinds: &[Kind],
    cfg: &RunConfig,
    compute_set: impl FnOnce() -> Result<TriangleSet>,
) -> Result<TriangleSet> {
    let Some(dir) = &cfg.cache_dir else {
        return compute_set();
    };
    let mut cached = TriangleSet::new();
    for &kind in kinds {
        match load(&cache_path(dir, kind, cfg))? {
            Some(t) => {
                cached.insert(t);
            }
            None => break,
        }
    }
    if cached.kinds().count() == kinds.len() {
        return Ok(cached);
    }
    let set = compute_set()?;
    for &kind in kinds {
        store(dir, &cache_path(dir, kind, cfg), set.require(kind)?)?;
    }
    Ok(set)
}

fn load(path: &Path) -> Result<Option<Triangle>> {
    match fs::read_to_string(path) {
        Ok(text) => serde_json::from_str(&text)
            .map(Some)
            .with_context(|| format!("corrupt cache entry {}", path.display())),
        Err(e) if e.kind() == ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e).with_context(|| format!("reading {}", path.display())),
    }
}

fn store(dir: &Path, path: &Path, t: &Triangle) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    // write then rename so a concurrent reader never sees half a file
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string(t)?)
        .with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn cache_path(dir: &Path, kind: Kind, cfg: &RunConfig) -> PathBuf {
    dir.join(format!(
        "{kind}-n{}-{}-{CACHE_VERSION}.json",
        cfg.n_max, cfg.method
    ))
}

fn compute(kind: Kind, source: Source, cfg: &RunConfig) -> Result<Triangle> {
    let n = cfg.n_max;
    let t = match source {
        Source::Recurrence => match kind {
            Kind::A => eulerian_recurrence(n)?,
            Kind::D => signed_recurrence(n)?,
            Kind::R => r_recurrence(n)?,
            Kind::B | Kind::C => {
                let (b, c) = bc_from_ad(&eulerian_recurrence(n)?, &signed_recurrence(n)?)?;
                if kind == Kind::B {
                    b
                } else {
                    c
                }
            }
            Kind::S | Kind::P | Kind::Q => unreachable!("rejected by source_for"),
        },
        Source::FullScan => take(enumerate_triangles(n, cfg.chunks)?, kind)?,
        Source::PapScan => take(enumerate_pap_triangles(n)?, kind)?,
    };
    Ok(t)
}

fn take(set: TriangleSet, kind: Kind) -> Result<Triangle> {
    Ok(set.require(kind)?.clone())
}
