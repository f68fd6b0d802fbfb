use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One candidate type and its prior probability.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TypeMass<T> {
    #[serde(rename = "type")]
    pub t: T,
    pub prob: T,
}

/// A candidate's finite type distribution, sorted by type.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSpec<T> {
    types: Vec<TypeMass<T>>,
}

impl<T: Scalar> CandidateSpec<T> {
    pub fn new(mut types: Vec<TypeMass<T>>) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::Validation("candidate has no types".into()));
        }
        if types.iter().any(|m| !(m.prob > T::zero()) || !m.t.is_finite()) {
            return Err(Error::Validation(
                "candidate type probabilities must be positive".into(),
            ));
        }
        types.sort_by(|a, b| a.t.partial_cmp(&b.t).unwrap());
        if types.windows(2).any(|w| w[0].t == w[1].t) {
            return Err(Error::Validation("duplicate candidate type".into()));
        }
        let total: T = types.iter().map(|m| m.prob).sum();
        if (total - T::one()).abs() > T::fine_tol() * T::lit(10.0) {
            return Err(Error::Validation(format!(
                "candidate type probabilities sum to {total}, not 1"
            )));
        }
        Ok(CandidateSpec { types })
    }

    /// Equiprobable types.
    pub fn uniform(types: &[T]) -> Result<Self> {
        let p = T::one() / T::from_usize(types.len().max(1)).unwrap();
        Self::new(types.iter().map(|&t| TypeMass { t, prob: p }).collect())
    }

    pub fn types(&self) -> &[TypeMass<T>] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn probs(&self) -> Vec<T> {
        self.types.iter().map(|m| m.prob).collect()
    }

    pub fn type_values(&self) -> Vec<T> {
        self.types.iter().map(|m| m.t).collect()
    }

    /// All types lie on the given side: `sign > 0` means `(0, 1]`.
    pub fn check_side(&self, positive: bool) -> Result<()> {
        for m in &self.types {
            let ok = if positive {
                m.t > T::zero() && m.t <= T::one()
            } else {
                m.t < T::zero() && m.t >= -T::one()
            };
            if !ok {
                return Err(Error::Validation(format!(
                    "candidate type {} outside its half-interval",
                    m.t
                )));
            }
        }
        Ok(())
    }

    /// The negated distribution `P_α(t) = P_β(-t)`.
    pub fn mirror(&self) -> Self {
        let mut types: Vec<_> = self
            .types
            .iter()
            .map(|m| TypeMass { t: -m.t, prob: m.prob })
            .collect();
        types.reverse();
        CandidateSpec { types }
    }

    pub fn is_mirror_of(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .types
                .iter()
                .zip(other.types.iter().rev())
                .all(|(a, b)| a.t == -b.t && a.prob == b.prob)
    }
}

/// One voter group: a type and its population weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VoterGroup<T> {
    #[serde(rename = "type")]
    pub t: T,
    pub weight: T,
}

/// Finite weighted electorate, sorted by type.
#[derive(Debug, Clone, PartialEq)]
pub struct Electorate<T> {
    groups: Vec<VoterGroup<T>>,
}

impl<T: Scalar> Electorate<T> {
    pub fn new(mut groups: Vec<VoterGroup<T>>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::Validation("electorate has no groups".into()));
        }
        for g in &groups {
            if !(g.weight > T::zero()) {
                return Err(Error::Validation("voter group weights must be positive".into()));
            }
            if !(g.t >= -T::one() && g.t <= T::one()) {
                return Err(Error::Validation(format!("voter type {} outside [-1, 1]", g.t)));
            }
        }
        groups.sort_by(|a, b| a.t.partial_cmp(&b.t).unwrap());
        if groups.windows(2).any(|w| w[0].t == w[1].t) {
            return Err(Error::Validation("duplicate voter type".into()));
        }
        let total: T = groups.iter().map(|g| g.weight).sum();
        if (total - T::one()).abs() > T::fine_tol() * T::lit(10.0) {
            return Err(Error::Validation(format!(
                "voter group weights sum to {total}, not 1"
            )));
        }
        Ok(Electorate { groups })
    }

    /// Three groups `-τ, 0, τ` with weights `(1-w0)/2, w0, (1-w0)/2`.
    pub fn three_groups(tau: T, median_weight: T) -> Result<Self> {
        let side = (T::one() - median_weight) / T::two();
        Self::new(vec![
            VoterGroup { t: -tau, weight: side },
            VoterGroup { t: T::zero(), weight: median_weight },
            VoterGroup { t: tau, weight: side },
        ])
    }

    pub fn groups(&self) -> &[VoterGroup<T>] {
        &self.groups
    }

    pub fn types(&self) -> Vec<T> {
        self.groups.iter().map(|g| g.t).collect()
    }

    /// Every `(t, w)` has a matching `(-t, w)`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.groups.len();
        (0..n).all(|i| {
            let (a, b) = (self.groups[i], self.groups[n - 1 - i]);
            a.t == -b.t && a.weight == b.weight
        })
    }
}
