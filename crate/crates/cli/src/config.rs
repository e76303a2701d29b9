use std::fmt;
use std::path::PathBuf;

use clap::ValueEnum;
use pap_core::{Kind, FULL_SCAN_CAP, PAP_SCAN_CAP};

use crate::ConfigError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Enumerate,
    Auto,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Recurrence => "recurrence",
            Method::Enumerate => "enumerate",
            Method::Auto => "auto",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Json,
    Csv,
}

/// How one triangle is actually produced once `auto` has been resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Recurrence,
    /// every permutation of `[n]`
    FullScan,
    /// PAPs only; enough for `S`, `P`, `Q`, `R`
    PapScan,
}

impl Source {
    pub fn cap(self) -> Option<usize> {
        match self {
            Source::Recurrence => None,
            Source::FullScan => Some(FULL_SCAN_CAP),
            Source::PapScan => Some(PAP_SCAN_CAP),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n_max: usize,
    pub method: Method,
    pub chunks: usize,
    pub cache_dir: Option<PathBuf>,
    pub output_format: OutputFormat,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.chunks == 0 {
            return Err(ConfigError("--chunks must be at least 1".into()));
        }
        if self.n_max == 0 {
            return Err(ConfigError("--n must be at least 1".into()));
        }
        Ok(())
    }

    /// The source used for `kind` under this configuration, checked
    /// against the size cap of that source.
    pub fn source_for(&self, kind: Kind) -> Result<Source, ConfigError> {
        let scan = if kind.is_pap_statistic() {
            Source::PapScan
        } else {
            Source::FullScan
        };
        let source = match self.method {
            Method::Enumerate => scan,
            Method::Recurrence => {
                if matches!(kind, Kind::S | Kind::P | Kind::Q) {
                    return Err(ConfigError(format!(
                        "{kind} has no recurrence for odd rows; use --method enumerate"
                    )));
                }
                Source::Recurrence
            }
            Method::Auto => match kind {
                Kind::A | Kind::D | Kind::R => Source::Recurrence,
                _ => scan,
            },
        };
        if let Some(cap) = source.cap() {
            if self.n_max > cap {
                return Err(ConfigError(format!(
                    "n = {} is above the enumeration cap {cap} for {kind}",
                    self.n_max
                )));
            }
        }
        Ok(source)
    }
}
