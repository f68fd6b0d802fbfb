//! Ready-made scenarios for the benchmark configurations.

use crate::election::StrategyAssignment;
use crate::error::Result;
use crate::extensions::multi_issue::{Frontier, TwoIssueUtility};
use crate::model::{
    CandidateSpec, Electorate, IssuesSpec, PolicyAxis, Scenario, Side, UtilitySpec, VoterFamily,
    VoterGroup,
};
use crate::news::NewsTechnology;
use crate::scalar::Scalar;

/// Partisan voter offset used by the two-candidate-type benchmarks.
pub const PARTISAN_TAU: f64 = 0.001;

fn lit<T: Scalar>(x: f64) -> T {
    T::lit(x)
}

/// Three equally weighted groups `-τ, 0, τ`.
pub fn three_group_electorate<T: Scalar>(tau: T) -> Result<Electorate<T>> {
    let third = T::one() / T::lit(3.0);
    Electorate::new(vec![
        VoterGroup { t: -tau, weight: third },
        VoterGroup { t: T::zero(), weight: T::one() - third - third },
        VoterGroup { t: tau, weight: third },
    ])
}

/// Policies `±.01, ±.4` chosen by two equiprobable types, voters at
/// `-.2, -.05, 0, .05, .2`, absolute loss.
pub fn table1<T: Scalar>(mu: T) -> Result<Scenario<T>> {
    let beta = PolicyAxis::new(Side::Beta, vec![lit(0.01), lit(0.4)])?;
    let groups = [-0.2, -0.05, 0.0, 0.05, 0.2]
        .iter()
        .map(|&t| VoterGroup { t: lit(t), weight: lit(0.2) })
        .collect();
    Scenario::symmetric(
        "table1",
        beta,
        UtilitySpec::voter_only(VoterFamily::AbsoluteLoss),
        CandidateSpec::uniform(&[lit(0.3), lit(0.8)])?,
        Electorate::new(groups)?,
        mu,
    )
}

/// The separating assignment behind the table: centrist type at `.01`,
/// extreme type at `.4`.
pub fn table1_assignment<T: Scalar>(scenario: &Scenario<T>) -> Result<StrategyAssignment> {
    StrategyAssignment::new(scenario, vec![0, 1])
}

/// Three positions `.01, .2, .4`; types `.3, .8`; `R = 8`, `δ₊ = 12`, `δ₋ = 1`.
pub fn figure2<T: Scalar>(mu: T) -> Result<Scenario<T>> {
    two_type_game("figure2", &[0.01, 0.2, 0.4], (0.3, 0.8), (8.0, 12.0, 1.0), mu)
}

/// `A_β`: the 50 midpoints `(k + ½)/50` of `[0, 1]`.
pub fn fifty_point_grid<T: Scalar>() -> Result<PolicyAxis<T>> {
    PolicyAxis::beta_midpoints(50)
}

/// Types `1/4, 3/4`, `R = 8`, `δ₊ = 3`, `δ₋ = 1`, 50-point grid, `μ = 1`,
/// slanted news with parameter `xi`.
pub fn figure3<T: Scalar>(xi: T) -> Result<Scenario<T>> {
    let grid = fifty_point_grid::<T>()?;
    let mut s = Scenario::symmetric(
        "figure3",
        grid.clone(),
        UtilitySpec::new(VoterFamily::AbsoluteLoss, lit(8.0), lit(3.0), lit(1.0)),
        CandidateSpec::uniform(&[lit(0.25), lit(0.75)])?,
        three_group_electorate(lit(PARTISAN_TAU))?,
        T::one(),
    )?;
    s.news = Some(NewsTechnology::slant(grid.values().to_vec(), xi, [lit(0.25), lit(0.75)])?);
    s.validate()?;
    Ok(s)
}

/// Figure-3 economy without news and with commitment level `eta`.
pub fn example3<T: Scalar>(eta: T, mu: T) -> Result<Scenario<T>> {
    let mut s = figure3::<T>(T::half())?;
    s.name = "example3".into();
    s.news = None;
    s.mu = mu;
    s.eta = eta;
    s.validate()?;
    Ok(s)
}

/// Quarter-circle frontier with the weighted-exponential two-issue utility.
pub fn multi_issue<T: Scalar>() -> Result<IssuesSpec<T>> {
    Ok(IssuesSpec {
        frontier: Frontier::QuarterCircle,
        utility2: TwoIssueUtility::weighted_exponential(T::one())?,
        grid_points: 200,
    })
}

fn two_type_game<T: Scalar>(
    name: &str,
    grid: &[f64],
    types: (f64, f64),
    payoffs: (f64, f64, f64),
    mu: T,
) -> Result<Scenario<T>> {
    let beta = PolicyAxis::new(Side::Beta, grid.iter().map(|&x| lit(x)).collect())?;
    Scenario::symmetric(
        name,
        beta,
        UtilitySpec::new(VoterFamily::AbsoluteLoss, lit(payoffs.0), lit(payoffs.1), lit(payoffs.2)),
        CandidateSpec::uniform(&[lit(types.0), lit(types.1)])?,
        three_group_electorate(lit(PARTISAN_TAU))?,
        mu,
    )
}
