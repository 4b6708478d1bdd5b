use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty sentence")]
    EmptySentence,

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("label `{0}` contains the reserved unary separator `+`")]
    LabelSeparator(String),

    #[error("dependency tree contains a cycle through word {0}")]
    Cyclic(usize),

    #[error("length mismatch: predicted {pred}, gold {gold}")]
    LengthMismatch { pred: usize, gold: usize },

    #[error("sentence length {n} exceeds the enumeration bound {max}")]
    TooLong { n: usize, max: usize },

    #[error("{0} label set is empty")]
    EmptyLabelSet(&'static str),

    #[error("span ({start}, {end}): {message}")]
    Inconsistent {
        start: usize,
        end: usize,
        message: String,
    },

    #[error("chart line {line}: {message}")]
    Chart { line: usize, message: String },

    #[error("{message} at offset {offset}")]
    Ptb { offset: usize, message: String },

    #[error("CoNLL line {line}: {message}")]
    Conll { line: usize, message: String },

    #[error("head rules line {line}: {message}")]
    HeadRules { line: usize, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn chart(line: usize, message: impl Into<String>) -> Self {
        Error::Chart {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn conll(line: usize, message: impl Into<String>) -> Self {
        Error::Conll {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn ptb(offset: usize, message: impl Into<String>) -> Self {
        Error::Ptb {
            offset,
            message: message.into(),
        }
    }

    /// Attach a file path to an error.
    pub fn in_file(self, path: impl Into<String>) -> Self {
        Error::File {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
