//! Library behind the `qtrsk` binary: text formats for partitions, tableaux,
//! matrices, and rationals; the named exact verification suites; and the
//! report type with deterministic JSON rendering.

pub mod report;
pub mod suites;
pub mod text;
