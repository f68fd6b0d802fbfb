use rayon::prelude::*;
use serde::Serialize;

use crate::election::enumerate::EquilibriumRecord;
use crate::election::matrix::MatrixTriple;
use crate::error::{Error, Result};
use crate::model::Scenario;
use crate::ri::{attention_membership, BeliefOverProfiles};
use crate::scalar::Scalar;

/// Whether voter `t` pays attention under `triple` at cost `mu`.
///
/// For `t <= 0` this is `E[exp(v/μ)] >= 1`; positive types use the mirrored
/// condition `E[exp(-v/μ)] >= 1`.
pub fn attention_membership_at<T: Scalar>(
    scenario: &Scenario<T>,
    triple: &MatrixTriple<T>,
    t: T,
    mu: T,
) -> Result<bool> {
    let belief = triple.belief(scenario, t)?;
    membership_for_side(&belief, t, mu)
}

pub(crate) fn membership_for_side<T: Scalar>(
    belief: &BeliefOverProfiles<T>,
    t: T,
    mu: T,
) -> Result<bool> {
    if t <= T::zero() {
        attention_membership(belief, mu)
    } else {
        let flipped = BeliefOverProfiles::new(
            belief.probs().to_vec(),
            belief.values().iter().map(|&v| -v).collect(),
        )?;
        attention_membership(&flipped, mu)
    }
}

/// Two equiprobable policies per candidate; partial-commitment scenarios
/// attach β's two types in order.
pub fn two_policy_triple<T: Scalar>(scenario: &Scenario<T>, a1: T, a2: T) -> Result<MatrixTriple<T>> {
    let triple = MatrixTriple::two_policy(a1, a2)?;
    if scenario.full_commitment() {
        return Ok(triple);
    }
    let types = scenario.beta_types.type_values();
    if types.len() != 2 {
        return Err(Error::Validation(
            "two-policy attention sets need exactly two candidate types".into(),
        ));
    }
    triple.with_types(types)
}

/// Member pairs `(a_1, a_2)`, `a_1 < a_2` from `grid`, of voter `t`'s attention set.
pub fn attention_set_pairs<T: Scalar>(
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
                let triple = two_policy_triple(scenario, grid[i], a2)?;
                if attention_membership_at(scenario, &triple, t, mu)? {
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

/// Lowest grid `a_2 > a_1` at which voter `t` pays attention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrontierPoint<T> {
    pub a1: T,
    pub a2: Option<T>,
}

/// Scans the attention frontier over two-policy matrices on `grid`.
pub fn scan_frontier<T: Scalar>(
    scenario: &Scenario<T>,
    grid: &[T],
    t: T,
    mu: T,
) -> Result<Vec<FrontierPoint<T>>> {
    (0..grid.len())
        .into_par_iter()
        .map(|i| {
            for &a2 in &grid[i + 1..] {
                let triple = two_policy_triple(scenario, grid[i], a2)?;
                if attention_membership_at(scenario, &triple, t, mu)? {
                    return Ok(FrontierPoint { a1: grid[i], a2: Some(a2) });
                }
            }
            Ok(FrontierPoint { a1: grid[i], a2: None })
        })
        .collect()
}

/// Continuous boundary `a_2` in `(a_1, hi]` by bisection; `None` when even
/// `hi` fails to attract attention.
pub fn refine_frontier<T: Scalar>(scenario: &Scenario<T>, a1: T, hi: T, t: T, mu: T) -> Result<Option<T>> {
    let member = |a2: T| -> Result<bool> {
        let triple = two_policy_triple(scenario, a1, a2)?;
        attention_membership_at(scenario, &triple, t, mu)
    };
    if !member(hi)? {
        return Ok(None);
    }
    let mut lo = a1;
    let mut hi = hi;
    for _ in 0..200 {
        let mid = (lo + hi) * T::half();
        if mid <= lo || mid >= hi {
            break;
        }
        if member(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

/// Equilibria that keep voter `t` attentive and the smallest median
/// policy differential among them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruncationStatistic<T> {
    /// Indices into the equilibrium list.
    pub ea: Vec<usize>,
    /// `min u(a_1, 0) - u(a_N, 0)` over `ea`; `None` when `ea` is empty.
    pub min_differential: Option<T>,
}

pub fn truncation_statistic<T: Scalar>(
    scenario: &Scenario<T>,
    equilibria: &[EquilibriumRecord<T>],
    t: T,
    mu: T,
) -> Result<TruncationStatistic<T>> {
    let mut ea = Vec::new();
    let mut min_differential: Option<T> = None;
    for (k, rec) in equilibria.iter().enumerate() {
        if attention_membership_at(scenario, &rec.triple, t, mu)? {
            ea.push(k);
            let d = rec.triple.median_differential(scenario)?;
            min_differential = Some(min_differential.map_or(d, |m| m.min(d)));
        }
    }
    Ok(TruncationStatistic { ea, min_differential })
}
