//! Verification driver for `jordan-core`: named check suites, deterministic reports and
//! JSON export of the representation matrices.

pub mod export;
pub mod report;
pub mod suites;

pub use report::{emit_report, CheckRecord, Format, Params, Status, SuiteReport};
pub use suites::{run_suite, FamilyArg, Options, Suite, ZValue};
