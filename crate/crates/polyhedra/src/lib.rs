//! Verification campaigns, caches, reports and file formats built on
//! `polyhedra-core`.

pub mod campaign;
pub mod cert;
pub mod generate;
pub mod record;
pub mod report;
pub mod survey;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
