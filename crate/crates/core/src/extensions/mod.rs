//! Costly dissemination, limited commitment and multiple issues.

pub mod commitment;
pub mod dissemination;
pub mod multi_issue;

pub use commitment::{
    commitment_boundary, commitment_value, with_commitment, CommitmentBoundary, CommitmentCase,
};
pub use dissemination::{dissemination_filter, passes_dissemination};
pub use multi_issue::{
    augmented_utility, check_single_crossing, issue_grid, multi_issue_reduce, tangency_point,
    AugmentedAudit, Frontier, MultiIssueReduction, TwoIssueUtility,
};
