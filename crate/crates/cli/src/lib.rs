//! Library half of the `isac-rates` tool: sweep specifications, the sweep
//! runner and its CSV/manifest output, oracle verification reports and
//! per-subfigure plot data.

pub mod plot;
pub mod report;
pub mod spec;
pub mod sweep;
pub mod verify;

use thiserror::Error;

/// Environment variable capping the worker pool size.
pub const THREADS_ENV: &str = "ISAC_RATES_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed invocation or spec (exit 64).
    #[error("{0}")]
    Usage(String),
    /// Parameters outside the model, e.g. a non-degraded channel (exit 2).
    #[error("{0}")]
    Domain(String),
    /// A numerical routine failed to converge (exit 3).
    #[error("{0}")]
    Numerical(String),
    /// Verification checks failed (exit 1).
    #[error("{0}")]
    Failed(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Domain(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Failed(_) | CliError::Io { .. } => 1,
        }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }
}

impl From<isac_rates::rates::RateError> for CliError {
    fn from(e: isac_rates::rates::RateError) -> Self {
        if e.is_domain() {
            CliError::Domain(e.to_string())
        } else {
            CliError::Numerical(e.to_string())
        }
    }
}

/// Worker pool of `requested` threads (default: all cores), capped by
/// `ISAC_RATES_THREADS` when set.
pub fn thread_pool(requested: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let cap = match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Some(n),
            _ => {
                return Err(CliError::Usage(format!(
                    "{THREADS_ENV} must be a positive integer, got {v:?}"
                )))
            }
        },
        Err(_) => None,
    };
    let wanted = requested
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1);
    let n = cap.map_or(wanted, |c| wanted.min(c)).max(1);
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {n} worker threads: {e}")))
}

/// Parses a positive count, accepting forms like `1e7` and `200000`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("not a number: {s}"))?;
    if !(v >= 1.0 && v.fract() == 0.0 && v <= u64::MAX as f64) {
        return Err(format!("expected a positive whole number, got {s}"));
    }
    Ok(v as u64)
}
