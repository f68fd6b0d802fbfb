use serde::Serialize;

use crate::election::matrix::MatrixTriple;
use crate::error::{Error, Result};
use crate::model::Scenario;
use crate::scalar::Scalar;

/// Pure symmetric strategy: β's type `k` (in increasing type order) plays
/// `beta_grid[choice[k]]`, and α's mirrored type plays the negation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StrategyAssignment {
    choice: Vec<usize>,
}

impl StrategyAssignment {
    pub fn new<T: Scalar>(scenario: &Scenario<T>, choice: Vec<usize>) -> Result<Self> {
        if choice.len() != scenario.beta_types.len() {
            return Err(Error::Validation(format!(
                "assignment has {} entries for {} candidate types",
                choice.len(),
                scenario.beta_types.len()
            )));
        }
        if let Some(&bad) = choice.iter().find(|&&c| c >= scenario.beta.len()) {
            return Err(Error::Validation(format!("policy index {bad} outside the grid")));
        }
        Ok(StrategyAssignment { choice })
    }

    /// Builds an assignment from policy values, which must lie on β's grid.
    pub fn from_policies<T: Scalar>(scenario: &Scenario<T>, policies: &[T]) -> Result<Self> {
        let choice = policies
            .iter()
            .map(|&p| {
                scenario.beta.index_of(p).ok_or_else(|| {
                    Error::Validation(format!("policy {p} is not on candidate beta's grid"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(scenario, choice)
    }

    pub fn choice(&self) -> &[usize] {
        &self.choice
    }

    pub fn policies<T: Scalar>(&self, scenario: &Scenario<T>) -> Vec<T> {
        self.choice.iter().map(|&c| scenario.beta.values()[c]).collect()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.choice.windows(2).all(|w| w[0] < w[1])
    }

    /// At least two distinct policies.
    pub fn is_nondegenerate(&self) -> bool {
        self.choice.iter().any(|c| *c != self.choice[0])
    }

    /// Induced matrix triple with the Downsian winning matrix.
    pub fn triple<T: Scalar>(&self, scenario: &Scenario<T>) -> Result<MatrixTriple<T>> {
        let mut distinct: Vec<usize> = self.choice.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let probs = scenario.beta_types.probs();
        let q: Vec<T> = distinct
            .iter()
            .map(|&d| {
                self.choice
                    .iter()
                    .zip(&probs)
                    .filter(|(c, _)| **c == d)
                    .map(|(_, p)| *p)
                    .sum()
            })
            .collect();
        let a = distinct.iter().map(|&d| scenario.beta.values()[d]).collect();
        let triple = MatrixTriple::from_marginal(a, &q)?;
        if distinct.len() == self.choice.len() {
            let types = scenario.beta_types.type_values();
            let ordered = distinct
                .iter()
                .map(|&d| types[self.choice.iter().position(|c| *c == d).unwrap()])
                .collect();
            triple.with_types(ordered)
        } else {
            Ok(triple)
        }
    }

    /// Index of each type's policy within the triple's distinct policies.
    pub fn triple_index(&self) -> Vec<usize> {
        let mut distinct: Vec<usize> = self.choice.clone();
        distinct.sort_unstable();
        distinct.dedup();
        self.choice
            .iter()
            .map(|c| distinct.binary_search(c).unwrap())
            .collect()
    }
}
