use serde::Serialize;

use crate::election::strategy::StrategyAssignment;
use crate::election::winning::{aggregate_and_rationalize, downsian_winner};
use crate::error::Result;
use crate::model::Scenario;
use crate::scalar::Scalar;

/// Which winning probabilities price the candidates' choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WinSource {
    /// On-path cells from the voters' aggregated attention strategies,
    /// deviations from the Downsian rule.
    Rationalized,
    /// Downsian rule everywhere.
    Downsian,
}

/// Deviation slack of one candidate type.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TypeGap<T> {
    pub t: T,
    pub assigned: T,
    /// Most profitable alternative policy, if the grid has one.
    pub best_alternative: Option<T>,
    /// Payoff of the assigned policy minus that of the best alternative.
    pub gap: T,
}

/// Outcome of an incentive-compatibility check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IcReport<T> {
    pub ok: bool,
    pub min_gap: T,
    pub gaps: Vec<TypeGap<T>>,
}

/// `table[x][y]`: β's winning probability when α plays `-grid[x]` and β
/// plays `grid[y]`, over β's whole grid.
pub fn downsian_table<T: Scalar>(scenario: &Scenario<T>) -> Result<Vec<Vec<T>>> {
    let grid = scenario.beta.values();
    grid.iter()
        .map(|&x| {
            grid.iter()
                .map(|&y| downsian_winner(&scenario.utility, -x, y))
                .collect()
        })
        .collect()
}

/// β-side IC check against a precomputed winning table (α is covered by
/// symmetry). `win(l, y)` is β's winning probability against α's type `l`
/// when β plays grid point `y`.
pub fn ic_report_with<T: Scalar>(
    scenario: &Scenario<T>,
    assignment: &StrategyAssignment,
    win: impl Fn(usize, usize) -> T,
) -> IcReport<T> {
    let grid = scenario.beta.values();
    let types = scenario.beta_types.type_values();
    let probs = scenario.beta_types.probs();
    let choice = assignment.choice();

    let payoff = |k: usize, y: usize| -> T {
        let mut total = T::zero();
        for (l, &p) in probs.iter().enumerate() {
            let w = win(l, y);
            let opp = grid[choice[l]];
            let won = scenario.win_value(grid[y], types[k]);
            let lost = scenario.lose_value(-opp, -types[l], types[k]);
            total += p * (w * won + (T::one() - w) * lost);
        }
        total
    };

    let mut gaps = Vec::with_capacity(types.len());
    let mut min_gap = T::infinity();
    for (k, &t) in types.iter().enumerate() {
        let own = payoff(k, choice[k]);
        let mut best: Option<(usize, T)> = None;
        for y in (0..grid.len()).filter(|&y| y != choice[k]) {
            let alt = payoff(k, y);
            if best.map_or(true, |(_, b)| alt > b) {
                best = Some((y, alt));
            }
        }
        let gap = best.map_or(T::infinity(), |(_, b)| own - b);
        min_gap = min_gap.min(gap);
        gaps.push(TypeGap {
            t,
            assigned: grid[choice[k]],
            best_alternative: best.map(|(y, _)| grid[y]),
            gap,
        });
    }
    IcReport {
        ok: min_gap >= -T::threshold_tol(),
        min_gap,
        gaps,
    }
}

/// Checks whether no candidate type gains by deviating to another grid policy.
pub fn check_ic<T: Scalar>(
    scenario: &Scenario<T>,
    assignment: &StrategyAssignment,
    source: WinSource,
) -> Result<IcReport<T>> {
    scenario.require_symmetric()?;
    let table = downsian_table(scenario)?;
    let choice = assignment.choice();
    match source {
        WinSource::Downsian => Ok(ic_report_with(scenario, assignment, |l, y| {
            table[choice[l]][y]
        })),
        WinSource::Rationalized => {
            let rat = aggregate_and_rationalize(scenario, assignment)?;
            let pos = assignment.triple_index();
            Ok(ic_report_with(scenario, assignment, |l, y| {
                match choice.iter().position(|c| *c == y) {
                    Some(k) => rat.triple.w[pos[l]][pos[k]],
                    None => table[choice[l]][y],
                }
            }))
        }
    }
}
