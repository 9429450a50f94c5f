//! File formats, reference experiments and the `subdiv` command line built on
//! [`subdiv_core`].

pub mod cli;
pub mod experiments;
pub mod io;
pub mod report;

use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] subdiv_core::Error),
    #[error(transparent)]
    Parse(#[from] io::ParseError),
    #[error(transparent)]
    Svg(#[from] io::SvgError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        Error::Io { path: path.to_path_buf(), source }
    }
}
