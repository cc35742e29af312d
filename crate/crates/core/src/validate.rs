//! Whole-resource validation.
//!
//! Runs every structural, referential, and etymological check over an
//! assembled resource and returns the findings as a sorted report.  The
//! same checks run during [`assemble`](crate::model::assemble); this entry
//! point re-runs them on demand, for resources built or modified through
//! the API.

use crate::diag::ValidationReport;
use crate::model::{run_checks, LexicalResource};

/// Validate `resource` against every registered invariant.
///
/// Diagnostics carry no file labels (the resource does not remember which
/// document a node came from); positions are reported where nodes carry
/// them.
pub fn validate_resource(resource: &LexicalResource) -> ValidationReport {
    let labels = crate::model::Labels::none_for(resource);
    ValidationReport::new(run_checks(resource, &labels))
}
