use serde::Serialize;

use crate::election::MatrixTriple;
use crate::error::{Error, Result};
use crate::model::Scenario;
use crate::news::technology::NewsTechnology;
use crate::ri::{solve_attention, AttentionSolution, BeliefOverProfiles};
use crate::scalar::Scalar;

/// Signal-cell distribution of every policy cell of a triple.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalJoint<T> {
    k: usize,
    /// `σ_ij` per policy cell, row-major.
    sigma: Vec<T>,
    /// `f(ω | a_ij)` per policy cell, over signal cells `m * K + n`.
    pmf: Vec<Vec<T>>,
    /// `P(ω)` per signal cell.
    marginal: Vec<T>,
}

impl<T: Scalar> SignalJoint<T> {
    pub fn new(f: &NewsTechnology<T>, triple: &MatrixTriple<T>) -> Result<Self> {
        let rows = triple
            .a
            .iter()
            .map(|&a| f.row_index_or_err(a))
            .collect::<Result<Vec<_>>>()?;
        let k = f.k();
        let mut sigma = Vec::new();
        let mut pmf = Vec::new();
        for (i, j) in triple.cells() {
            sigma.push(triple.sigma[i][j]);
            pmf.push(f.joint_pmf(rows[i], rows[j]));
        }
        let mut marginal = vec![T::zero(); k * k];
        for (s, p) in sigma.iter().zip(&pmf) {
            for (c, &pc) in p.iter().enumerate() {
                marginal[c] += *s * pc;
            }
        }
        Ok(SignalJoint { k, sigma, pmf, marginal })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `P(ω_mn)`.
    pub fn marginal(&self) -> &[T] {
        &self.marginal
    }

    /// `f(ω | a_ij)` for policy cell `cell` (row-major).
    pub fn pmf(&self, cell: usize) -> &[T] {
        &self.pmf[cell]
    }

    /// Posterior over policy cells given signal cell `c`.
    pub fn posterior(&self, c: usize) -> Result<Vec<T>> {
        let p = self.marginal[c];
        if !(p > T::zero()) {
            return Err(Error::UndefinedPosterior { m: c / self.k, n: c % self.k });
        }
        Ok(self
            .sigma
            .iter()
            .zip(&self.pmf)
            .map(|(&s, f)| s * f[c] / p)
            .collect())
    }

    /// `ν(ω, t) = E[v | ω]` given per-policy-cell values.
    pub fn posterior_value(&self, c: usize, values: &[T]) -> Result<T> {
        let w = self.posterior(c)?;
        let mut acc = T::zero();
        for (&wi, &v) in w.iter().zip(values) {
            acc += wi * v;
        }
        Ok(acc)
    }
}

/// Voter belief over the signal cells with positive probability.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NoisyBelief<T> {
    /// Signal cells `(m, n)` kept in the support.
    pub cells: Vec<(usize, usize)>,
    pub belief: BeliefOverProfiles<T>,
    /// Number of zero-probability cells left out.
    pub excluded: usize,
}

/// Builds voter `t`'s belief over news profiles; zero-probability cells are
/// dropped (their posterior is undefined).
pub fn noisy_belief<T: Scalar>(
    f: &NewsTechnology<T>,
    scenario: &Scenario<T>,
    triple: &MatrixTriple<T>,
    t: T,
) -> Result<NoisyBelief<T>> {
    let joint = SignalJoint::new(f, triple)?;
    noisy_belief_from(&joint, &triple.values(scenario, t)?)
}

pub fn noisy_belief_from<T: Scalar>(joint: &SignalJoint<T>, values: &[T]) -> Result<NoisyBelief<T>> {
    let k = joint.k();
    let mut cells = Vec::new();
    let mut probs = Vec::new();
    let mut nus = Vec::new();
    let mut excluded = 0;
    for (c, &p) in joint.marginal().iter().enumerate() {
        if !(p > T::zero()) {
            excluded += 1;
            continue;
        }
        cells.push((c / k, c % k));
        probs.push(p);
        nus.push(joint.posterior_value(c, values)?);
    }
    if excluded > 0 && excluded < k * k {
        log::debug!("{excluded} news profiles have zero probability and are left out");
    }
    if cells.is_empty() {
        return Err(Error::Numeric("every news profile has zero probability".into()));
    }
    Ok(NoisyBelief {
        cells,
        belief: BeliefOverProfiles::new(probs, nus)?,
        excluded,
    })
}

/// `ν(ω_mn, t)` for one signal cell.
pub fn posterior_value<T: Scalar>(
    f: &NewsTechnology<T>,
    scenario: &Scenario<T>,
    triple: &MatrixTriple<T>,
    cell: (usize, usize),
    t: T,
) -> Result<T> {
    let k = f.k();
    if cell.0 >= k || cell.1 >= k {
        return Err(Error::Validation(format!("signal cell {cell:?} outside a {k}-signal grid")));
    }
    let joint = SignalJoint::new(f, triple)?;
    let p = joint.marginal()[cell.0 * k + cell.1];
    if !(p > T::zero()) {
        return Err(Error::UndefinedPosterior { m: cell.0, n: cell.1 });
    }
    joint.posterior_value(cell.0 * k + cell.1, &triple.values(scenario, t)?)
}

/// Optimal attention of voter `t` when only news is observed.
pub fn solve_attention_noisy<T: Scalar>(
    f: &NewsTechnology<T>,
    scenario: &Scenario<T>,
    triple: &MatrixTriple<T>,
    t: T,
    mu: T,
) -> Result<(NoisyBelief<T>, AttentionSolution<T>)> {
    let nb = noisy_belief(f, scenario, triple, t)?;
    let sol = solve_attention(&nb.belief, mu)?;
    Ok((nb, sol))
}
