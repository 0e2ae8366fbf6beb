use thiserror::Error;

/// Errors raised by the toolkit.
///
/// The CLI maps these onto exit codes: usage and parse problems exit 1,
/// exceeded resource caps exit 4.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("resource cap exceeded: {cap} (limit {limit}){context}")]
    Cap {
        cap: &'static str,
        limit: usize,
        context: String,
    },

    #[error("ideal is not proper (1 lies in the ideal)")]
    NotProper,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub fn cap(cap: &'static str, limit: usize) -> Self {
        Error::Cap {
            cap,
            limit,
            context: String::new(),
        }
    }

    /// Attaches extra context to a cap error; other variants pass through.
    pub fn with_cap_context(self, ctx: impl Into<String>) -> Self {
        match self {
            Error::Cap { cap, limit, .. } => Error::Cap {
                cap,
                limit,
                context: format!(" ({})", ctx.into()),
            },
            other => other,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::Cap { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
