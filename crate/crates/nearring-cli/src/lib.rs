//! IO companion to `nearring-core`: JSON document formats, verdict
//! reports, the exhaustive scheme sweep, and the worked-example runner
//! behind the `nearring` binary.

pub mod docs;
pub mod examples;
pub mod report;
pub mod sweep;

use nearring_core::Error;

/// Process exit code convention: 0 success/agree, 1 input error,
/// 2 theorem mismatch, 3 resource limit.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::TheoremMismatch(_) => 2,
        Error::ResourceLimit(_) => 3,
        _ => 1,
    }
}
