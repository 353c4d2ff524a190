//! File formats, the transitive-group database and table reproduction for
//! the `permstar` command.

pub mod db;
pub mod error;
pub mod format;
pub mod lemmas;
pub mod maximal;
pub mod table;

pub use error::{CliError, Result};
