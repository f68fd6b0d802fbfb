//! Vote aggregation, winning matrices, incentive compatibility, equilibrium
//! enumeration and attention sets.

mod attention_set;
mod enumerate;
mod ic;
mod matrix;
mod strategy;
mod winning;

pub use attention_set::{
    attention_membership_at, attention_set_pairs, refine_frontier, scan_frontier,
    truncation_statistic, two_policy_triple, FrontierPoint, TruncationStatistic,
};
pub(crate) use attention_set::membership_for_side;
pub use enumerate::{
    assignment_count, enumerate_equilibria, enumerate_equilibria_with, enumerate_ic,
    EnumerationOptions, EquilibriumRecord, GroupAttention, DEFAULT_ENUMERATION_CAP,
};
pub use ic::{check_ic, downsian_table, ic_report_with, IcReport, TypeGap, WinSource};
pub use matrix::{downsian_matrix, MatrixTriple};
pub use strategy::StrategyAssignment;
pub use winning::{
    aggregate_and_rationalize, downsian_winner, off_path_winner, share_to_win, Rationalized,
};
