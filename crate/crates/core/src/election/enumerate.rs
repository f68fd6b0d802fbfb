use rayon::prelude::*;
use serde::Serialize;

use crate::election::ic::{downsian_table, ic_report_with, IcReport};
use crate::election::matrix::MatrixTriple;
use crate::election::strategy::StrategyAssignment;
use crate::election::winning::aggregate_and_rationalize;
use crate::error::{Error, Result};
use crate::model::Scenario;
use crate::ri::{AttentionSolution, Regime};
use crate::scalar::Scalar;

/// Default ceiling on the number of assignments examined.
pub const DEFAULT_ENUMERATION_CAP: u128 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnumerationOptions {
    pub cap: u128,
    /// Only type → policy maps that are strictly increasing in type.
    pub strictly_increasing: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            strictly_increasing: false,
        }
    }
}

/// One voter group's attention under an equilibrium.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupAttention<T> {
    pub t: T,
    pub weight: T,
    pub attentive: bool,
    pub solution: AttentionSolution<T>,
}

impl<T: Scalar> GroupAttention<T> {
    pub fn new(t: T, weight: T, solution: AttentionSolution<T>) -> Self {
        GroupAttention {
            t,
            weight,
            attentive: solution.regime == Regime::Interior,
            solution,
        }
    }
}

/// A symmetric equilibrium with its matrices, attention and diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquilibriumRecord<T> {
    pub assignment: StrategyAssignment,
    /// Policy of each β type, in type order.
    pub policies: Vec<T>,
    /// Matrices with the Downsian winning matrix.
    pub triple: MatrixTriple<T>,
    /// On-path winning matrix recovered from attention strategies.
    pub rationalized_w: Vec<Vec<T>>,
    /// Whether `rationalized_w` equals the Downsian matrix.
    pub rationalized_matches: bool,
    /// Expected winning probabilities under noisy news, on-path cells.
    pub news_win: Option<Vec<Vec<T>>>,
    pub attention: Vec<GroupAttention<T>>,
    /// Smallest deviation slack over candidate types.
    pub min_gap: T,
}

impl<T: Scalar> EquilibriumRecord<T> {
    /// `Σ_g w_g I_g`: total information acquired by the electorate.
    pub fn total_information(&self) -> T {
        self.attention
            .iter()
            .map(|g| g.weight * g.solution.info)
            .sum()
    }

    pub fn attention_of(&self, t: T) -> Option<&GroupAttention<T>> {
        self.attention.iter().find(|g| g.t == t)
    }

    pub fn all_attentive(&self) -> bool {
        self.attention.iter().all(|g| g.attentive)
    }
}

/// Number of pure assignments, `N^n`, refusing counts above `cap`.
pub fn assignment_count<T: Scalar>(scenario: &Scenario<T>, cap: u128) -> Result<u128> {
    let base = scenario.beta.len() as u128;
    let mut count: u128 = 1;
    for _ in 0..scenario.beta_types.len() {
        count = count.saturating_mul(base);
        if count > cap {
            return Err(Error::TooLarge { count, cap });
        }
    }
    Ok(count)
}

fn decode(mut index: u128, base: usize, len: usize) -> Vec<usize> {
    let mut digits = vec![0usize; len];
    for d in digits.iter_mut().rev() {
        *d = (index % base as u128) as usize;
        index /= base as u128;
    }
    digits
}

/// All assignments passing the IC check against `table[x][y]`, in
/// lexicographic order of the policy index vector.
pub fn enumerate_ic<T: Scalar>(
    scenario: &Scenario<T>,
    options: &EnumerationOptions,
    table: &[Vec<T>],
) -> Result<Vec<(StrategyAssignment, IcReport<T>)>> {
    scenario.require_symmetric()?;
    let count = assignment_count(scenario, options.cap)?;
    let base = scenario.beta.len();
    let len = scenario.beta_types.len();
    let found: Vec<Option<(StrategyAssignment, IcReport<T>)>> = (0..count as u64)
        .into_par_iter()
        .map(|idx| {
            let choice = decode(idx as u128, base, len);
            let assignment = StrategyAssignment::new(scenario, choice).ok()?;
            if options.strictly_increasing && !assignment.is_strictly_increasing() {
                return None;
            }
            let choice = assignment.choice();
            let report = ic_report_with(scenario, &assignment, |l, y| table[choice[l]][y]);
            report.ok.then_some((assignment, report))
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

fn record<T: Scalar>(
    scenario: &Scenario<T>,
    assignment: StrategyAssignment,
    report: IcReport<T>,
) -> Result<EquilibriumRecord<T>> {
    let rat = aggregate_and_rationalize(scenario, &assignment)?;
    let rationalized_matches = rat.matches_downsian();
    let triple = assignment.triple(scenario)?;
    let attention = scenario
        .electorate
        .groups()
        .iter()
        .zip(rat.solutions)
        .map(|(g, sol)| GroupAttention::new(g.t, g.weight, sol))
        .collect();
    Ok(EquilibriumRecord {
        policies: assignment.policies(scenario),
        assignment,
        triple,
        rationalized_w: rat.triple.w,
        rationalized_matches,
        news_win: None,
        attention,
        min_gap: report.min_gap,
    })
}

/// Pure symmetric equilibria under the Downsian winning rule, with each
/// voter group's attention at the scenario's `μ`.
pub fn enumerate_equilibria_with<T: Scalar>(
    scenario: &Scenario<T>,
    options: &EnumerationOptions,
) -> Result<Vec<EquilibriumRecord<T>>> {
    let mut options = *options;
    if !scenario.full_commitment() {
        options.strictly_increasing = true;
    }
    let table = downsian_table(scenario)?;
    enumerate_ic(scenario, &options, &table)?
        .into_iter()
        .map(|(a, r)| record(scenario, a, r))
        .collect()
}

pub fn enumerate_equilibria<T: Scalar>(scenario: &Scenario<T>) -> Result<Vec<EquilibriumRecord<T>>> {
    enumerate_equilibria_with(scenario, &EnumerationOptions::default())
}
