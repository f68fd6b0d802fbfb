use serde::Serialize;

use crate::election::matrix::MatrixTriple;
use crate::election::strategy::StrategyAssignment;
use crate::error::Result;
use crate::model::{Profile, Scenario, UtilitySpec};
use crate::ri::{solve_attention, AttentionSolution};
use crate::scalar::Scalar;

/// β's winning probability when both policies are observed without error:
/// the candidate the median voter prefers wins, ties split.
pub fn downsian_winner<T: Scalar>(spec: &UtilitySpec<T>, a_alpha: T, a_beta: T) -> Result<T> {
    let diff = spec.voter_utility(a_beta, T::zero())? - spec.voter_utility(a_alpha, T::zero())?;
    Ok(if diff > T::fine_tol() {
        T::one()
    } else if diff < -T::fine_tol() {
        T::zero()
    } else {
        T::half()
    })
}

/// Maps a vote share for β to a winning probability.
pub fn share_to_win<T: Scalar>(share: T) -> T {
    let d = share - T::half();
    if d > T::threshold_tol() {
        T::one()
    } else if d < -T::threshold_tol() {
        T::zero()
    } else {
        T::half()
    }
}

/// Off-path rule: every voter observes the profile and votes β iff
/// `v(a, t) > 0`; the resulting share decides the winner. Indifferent voters
/// side with α, so symmetric profiles need not split. Deviation pricing uses
/// the Downsian rule instead.
pub fn off_path_winner<T: Scalar>(scenario: &Scenario<T>, profile: Profile<T>) -> Result<T> {
    let mut share = T::zero();
    for g in scenario.electorate.groups() {
        if scenario.utility.differential_utility(profile, g.t)? > T::zero() {
            share += g.weight;
        }
    }
    Ok(share_to_win(share))
}

/// Winning matrix recovered from the voters' optimal attention strategies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rationalized<T> {
    /// Triple carrying the rationalized winning matrix.
    pub triple: MatrixTriple<T>,
    /// β's vote share in each cell.
    pub shares: Vec<Vec<T>>,
    /// One attention solution per voter group, cells row-major.
    pub solutions: Vec<AttentionSolution<T>>,
}

impl<T: Scalar> Rationalized<T> {
    /// Whether the recovered matrix equals the Downsian one entrywise.
    pub fn matches_downsian(&self) -> bool {
        self.triple.w == crate::election::matrix::downsian_matrix::<T>(self.triple.n())
    }
}

/// Solves every voter group's attention problem under the assignment and
/// aggregates the on-path votes into a winning matrix.
pub fn aggregate_and_rationalize<T: Scalar>(
    scenario: &Scenario<T>,
    assignment: &StrategyAssignment,
) -> Result<Rationalized<T>> {
    scenario.require_symmetric()?;
    let mut triple = assignment.triple(scenario)?;
    let n = triple.n();
    let mut shares = vec![vec![T::zero(); n]; n];
    let mut solutions = Vec::with_capacity(scenario.electorate.groups().len());
    for g in scenario.electorate.groups() {
        let belief = triple.belief(scenario, g.t)?;
        let sol = solve_attention(&belief, scenario.mu)?;
        for (k, (i, j)) in triple.cells().enumerate() {
            shares[i][j] += g.weight * sol.m[k];
        }
        solutions.push(sol);
    }
    triple.w = shares
        .iter()
        .map(|row| row.iter().map(|&s| share_to_win(s)).collect())
        .collect();
    Ok(Rationalized {
        triple,
        shares,
        solutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::VoterFamily;

    #[test]
    fn downsian_examples() {
        let s = UtilitySpec::voter_only(VoterFamily::AbsoluteLoss);
        assert_eq!(downsian_winner(&s, -0.4, 0.01).unwrap(), 1.0);
        assert_eq!(downsian_winner(&s, -0.3, 0.3).unwrap(), 0.5);
        assert_eq!(downsian_winner(&s, -0.01, 0.4).unwrap(), 0.0);
    }

    #[test]
    fn share_classification() {
        assert_eq!(share_to_win(0.5 + 1e-12), 0.5);
        assert_eq!(share_to_win(0.51), 1.0);
        assert_eq!(share_to_win(0.2), 0.0);
    }
}
