//! Catalog ingestion, the shipped verification catalog, check orchestration,
//! brute-force oracle mode, and report emission.

pub mod catalog;
pub mod oracle;
pub mod record;
pub mod runner;

pub use catalog::builtin_catalog;
pub use record::{
    emit_catalog, ingest, matrix_record, parse_catalog, perm_record, BuiltGroup, CatalogEntry,
    FieldDesc, GroupRecord, IngestError,
};
pub use runner::{proven_failures, run_checks, ReportRow, ALL_CHECKS};
