use rayon::prelude::*;

use crate::election::{
    enumerate_ic, membership_for_side, share_to_win, EnumerationOptions, EquilibriumRecord,
    GroupAttention, MatrixTriple, StrategyAssignment,
};
use crate::error::{Error, Result};
use crate::model::Scenario;
use crate::news::posterior::{noisy_belief_from, SignalJoint};
use crate::news::technology::{check_log_supermodularity, NewsTechnology};
use crate::ri::{attention_threshold_delta, solve_attention};
use crate::scalar::Scalar;

/// Downsian rule on signals: β wins when its signal `ω_n` is closer to the
/// centre than α's `-ω_m`.
fn signal_winner<T: Scalar>(m: usize, n: usize) -> T {
    match n.cmp(&m) {
        std::cmp::Ordering::Less => T::one(),
        std::cmp::Ordering::Equal => T::half(),
        std::cmp::Ordering::Greater => T::zero(),
    }
}

/// β's expected winning probability when α plays `-policies[i]` and β plays
/// `policies[j]`: `Σ_mn ŵ_mn P(ω_mn | a)`.
pub fn news_win_probability<T: Scalar>(f: &NewsTechnology<T>, i: usize, j: usize) -> T {
    let k = f.k();
    let pmf = f.joint_pmf(i, j);
    let mut acc = T::zero();
    for m in 0..k {
        for n in 0..k {
            acc += signal_winner::<T>(m, n) * pmf[m * k + n];
        }
    }
    acc
}

/// `table[i][j]` over the whole grid.
pub fn news_win_table<T: Scalar>(f: &NewsTechnology<T>) -> Vec<Vec<T>> {
    let n = f.policies().len();
    (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|j| news_win_probability(f, i, j)).collect())
        .collect()
}

/// The scenario's technology after the symmetry and log-supermodularity
/// audits; the fully revealing technology is exempt from the latter.
pub fn audited_news<T: Scalar>(scenario: &Scenario<T>) -> Result<&NewsTechnology<T>> {
    let f = scenario
        .news
        .as_ref()
        .ok_or_else(|| Error::Validation("scenario has no news technology".into()))?;
    scenario.require_symmetric()?;
    if !f.is_symmetric() {
        return Err(Error::Assumption("news technology treats the candidates asymmetrically".into()));
    }
    if f.is_revealing() {
        return Ok(f);
    }
    let report = check_log_supermodularity(f)?;
    if !report.holds {
        return Err(Error::Assumption(format!(
            "news technology is not strictly log-supermodular (indeterminate: {}): {:?}",
            report.indeterminate, report.violation
        )));
    }
    Ok(f)
}

/// Pure symmetric equilibria when voters observe news instead of policies.
pub fn enumerate_equilibria_noisy_with<T: Scalar>(
    scenario: &Scenario<T>,
    options: &EnumerationOptions,
) -> Result<Vec<EquilibriumRecord<T>>> {
    let f = audited_news(scenario)?;
    let mut options = *options;
    if !scenario.full_commitment() {
        options.strictly_increasing = true;
    }
    let table = news_win_table(f);
    let found = enumerate_ic(scenario, &options, &table)?;
    found
        .into_iter()
        .map(|(assignment, report)| noisy_record(scenario, f, &table, assignment, report.min_gap))
        .collect()
}

pub fn enumerate_equilibria_noisy<T: Scalar>(scenario: &Scenario<T>) -> Result<Vec<EquilibriumRecord<T>>> {
    enumerate_equilibria_noisy_with(scenario, &EnumerationOptions::default())
}

fn noisy_record<T: Scalar>(
    scenario: &Scenario<T>,
    f: &NewsTechnology<T>,
    table: &[Vec<T>],
    assignment: StrategyAssignment,
    min_gap: T,
) -> Result<EquilibriumRecord<T>> {
    let triple = assignment.triple(scenario)?;
    let rows: Vec<usize> = triple
        .a
        .iter()
        .map(|&a| f.row_index_or_err(a))
        .collect::<Result<_>>()?;
    let news_win: Vec<Vec<T>> = rows
        .iter()
        .map(|&i| rows.iter().map(|&j| table[i][j]).collect())
        .collect();

    let joint = SignalJoint::new(f, &triple)?;
    let k = f.k();
    let mut shares = vec![T::zero(); k * k];
    let mut attention = Vec::new();
    let mut support: Vec<usize> = Vec::new();
    for g in scenario.electorate.groups() {
        let nb = noisy_belief_from(&joint, &triple.values(scenario, g.t)?)?;
        let sol = solve_attention(&nb.belief, scenario.mu)?;
        support = nb.cells.iter().map(|(m, n)| m * k + n).collect();
        for (c, &m) in support.iter().zip(&sol.m) {
            shares[*c] += g.weight * m;
        }
        attention.push(GroupAttention::new(g.t, g.weight, sol));
    }
    // Winning probability per signal cell from the aggregated votes.
    let mut cell_win = vec![T::zero(); k * k];
    let mut matches = true;
    for &c in &support {
        cell_win[c] = share_to_win(shares[c]);
        matches &= cell_win[c] == signal_winner::<T>(c / k, c % k);
    }
    let n = triple.n();
    let mut rationalized_w = vec![vec![T::zero(); n]; n];
    for (cell, (i, j)) in triple.cells().enumerate() {
        let pmf = joint.pmf(cell);
        rationalized_w[i][j] = support.iter().map(|&c| pmf[c] * cell_win[c]).sum();
    }
    Ok(EquilibriumRecord {
        policies: assignment.policies(scenario),
        assignment,
        triple,
        rationalized_w,
        rationalized_matches: matches,
        news_win: Some(news_win),
        attention,
        min_gap,
    })
}

/// Whether voter `t` pays attention to news under `triple`.
pub fn noisy_membership<T: Scalar>(
    f: &NewsTechnology<T>,
    scenario: &Scenario<T>,
    triple: &MatrixTriple<T>,
    t: T,
    mu: T,
) -> Result<bool> {
    let joint = SignalJoint::new(f, triple)?;
    let nb = noisy_belief_from(&joint, &triple.values(scenario, t)?)?;
    membership_for_side(&nb.belief, t, mu)
}

/// Two-policy pairs `(a_1 < a_2)` on `grid` in voter `t`'s attention set
/// under technology `f`.
pub fn attention_set_noisy<T: Scalar>(
    f: &NewsTechnology<T>,
    scenario: &Scenario<T>,
    grid: &[T],
    t: T,
    mu: T,
) -> Result<Vec<(T, T)>> {
    let rows: Vec<Result<Vec<(T, T)>>> = (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            for &a2 in &grid[i + 1..] {
                let triple = crate::election::two_policy_triple(scenario, grid[i], a2)?;
                if noisy_membership(f, scenario, &triple, t, mu)? {
                    row.push((grid[i], a2));
                }
            }
            Ok(row)
        })
        .collect();
    let mut out = Vec::new();
    for r in rows {
        out.extend(r?);
    }
    Ok(out)
}

/// `ν(ω_K1, 0)`: the median voter's value when α's news is most extreme
/// and β's most central.
pub fn median_extreme_value<T: Scalar>(
    f: &NewsTechnology<T>,
    scenario: &Scenario<T>,
    triple: &MatrixTriple<T>,
) -> Result<T> {
    let k = f.k();
    crate::news::posterior::posterior_value(f, scenario, triple, (k - 1, 0), T::zero())
}

/// Necessary policy differential for attention with `K` signals:
/// `μ γ⁻¹(2 (K e^{κ|t|/μ} - 1) / (K - 1))`.
pub fn necessary_news_bound<T: Scalar>(mu: T, t: T, kappa: T, k: usize) -> Result<T> {
    if k < 2 {
        return Err(Error::Domain("necessary bound needs at least two signals".into()));
    }
    attention_threshold_delta(mu, t, kappa, T::one() / T::from_usize(k).unwrap())
}
