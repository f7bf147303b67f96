//! Census ingestion, bundled data, acceptance checks and the command-line
//! front end for `skein-core`.

pub mod census;
pub mod checks;
pub mod expected;
pub mod oracles;
