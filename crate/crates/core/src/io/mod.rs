//! Treebank file formats.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub mod conll;
pub mod ptb;

pub use conll::{read_conll, write_conll};
pub use ptb::{read_ptb, write_ptb};

/// Reads a UTF-8 file and parses it, tagging errors with the path.
pub fn read_file<T>(path: impl AsRef<Path>, parse: impl FnOnce(&str) -> Result<T>) -> Result<T> {
    let path = path.as_ref();
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| Error::from(e).in_file(name.clone()))?;
    parse(&text).map_err(|e| e.in_file(name))
}
