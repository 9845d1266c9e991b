use thiserror::Error;

use crate::report::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{what} is not invertible")]
    NotInvertible { what: String },

    #[error("not a Latin square: {0}")]
    NotLatinSquare(String),

    #[error("identity fails: element {identity} is not a two-sided unit (witness x = {witness})")]
    IdentityFails { identity: usize, witness: usize },

    #[error("no inverse property: {0}")]
    NoInverseProperty(String),

    #[error("unknown builtin loop `{0}` (expected cyclic(n), s3 or octonion16)")]
    UnknownLoop(String),

    #[error("not a loop automorphism: {0}")]
    NotLoopAutomorphism(String),

    #[error("`{identity}` fails{}", fmt_witness(.witness))]
    AxiomFailed {
        identity: String,
        witness: Option<Witness>,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("objects live over different ambient Hopf quasigroups")]
    AmbientMismatch,

    #[error("resource guard: {0}")]
    ResourceLimit(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn fmt_witness(w: &Option<Witness>) -> String {
    match w {
        Some(w) => format!(" at {w}"),
        None => String::new(),
    }
}

impl Error {
    /// Whether the error reports a violated precondition rather than bad input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotInvertible { .. }
                | Error::NoInverseProperty(_)
                | Error::NotLoopAutomorphism(_)
                | Error::AxiomFailed { .. }
                | Error::Precondition(_)
                | Error::AmbientMismatch
                | Error::ResourceLimit(_)
        )
    }
}
