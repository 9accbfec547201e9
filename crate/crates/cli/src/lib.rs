//! Library half of the `malcheck` binary: the on-disk algebra format and the
//! JSON report shapes. Kept as a library so the format contract is testable
//! in-process; all command handling lives in the binary.

pub mod format;
