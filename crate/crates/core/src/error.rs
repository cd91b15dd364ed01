use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{source_id}:{line}: {message}")]
    Parse {
        source_id: String,
        line: usize,
        message: String,
    },

    #[error("lexicon `{source_id}` has {found} valid entries, at least {required} are required")]
    LexiconTooSmall {
        source_id: String,
        found: usize,
        required: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("document `{0}` has no scorable sentences")]
    EmptyDocument(String),

    #[error("degenerate t-test: {0}")]
    DegenerateTest(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("metric undefined: {0}")]
    UndefinedMetric(String),

    #[error("classifier `{0}` is a known method but is not implemented in this toolkit")]
    NotImplemented(String),

    #[error("no label for document `{0}`")]
    MissingLabel(String),

    #[error("duplicate id `{0}`")]
    DuplicateId(String),

    #[error("path `{}` escapes the corpus root", .0.display())]
    PathTraversal(PathBuf),

    #[error("referenced file `{}` does not exist", .0.display())]
    MissingFile(PathBuf),

    #[error("every document in the corpus was skipped")]
    EmptyRun,

    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit code for the command-line front end.
    ///
    /// 2 is input or validation failure, 3 a degenerate statistic, 4 an
    /// unimplemented feature.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DegenerateTest(_) | Error::Numerical(_) | Error::UndefinedMetric(_) => 3,
            Error::NotImplemented(_) => 4,
            _ => 2,
        }
    }
}
