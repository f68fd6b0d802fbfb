//! Limited commitment: the winner honours the proposal with probability `η`
//! and otherwise implements his own type.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::Scenario;
use crate::ri::two_policy_threshold;
use crate::scalar::Scalar;

/// `η v_policy + (1 - η) v_type`.
pub fn commitment_value<T: Scalar>(eta: T, v_policy: T, v_type: T) -> Result<T> {
    if !(eta >= T::zero() && eta <= T::one()) {
        return Err(Error::Domain(format!("eta must lie in [0, 1], got {eta}")));
    }
    Ok(eta * v_policy + (T::one() - eta) * v_type)
}

/// The scenario with commitment level `eta`; the §3 routines then use the
/// mixed voter and candidate values.
pub fn with_commitment<T: Scalar>(scenario: &Scenario<T>, eta: T) -> Result<Scenario<T>> {
    for t in scenario.beta_types.type_values() {
        if !(t > T::zero() && t <= T::one()) {
            return Err(Error::Domain(format!("candidate type {t} cannot serve as a policy")));
        }
    }
    scenario.with_eta(eta)
}

/// Which side of the inference-versus-hurdle split a parameter point is on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CommitmentCase {
    /// The type gap alone clears the hurdle.
    InferenceDominates,
    /// The hurdle exceeds the type gap.
    HurdleDominates,
}

/// Closed-form attention boundary for two equiprobable types with abs-loss
/// voters: `η(a_2 - a_1) + (1 - η)(t_e - t_c)` against `μ γ⁻¹(4e^{2τ/μ} - 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CommitmentBoundary<T> {
    pub lhs: T,
    pub hurdle: T,
    pub attentive: bool,
    pub case: CommitmentCase,
}

pub fn commitment_boundary<T: Scalar>(
    eta: T,
    a: (T, T),
    types: (T, T),
    mu: T,
    tau: T,
) -> Result<CommitmentBoundary<T>> {
    let hurdle = two_policy_threshold(mu, tau)?;
    let gap = types.1 - types.0;
    let lhs = commitment_value(eta, a.1 - a.0, gap)?;
    Ok(CommitmentBoundary {
        lhs,
        hurdle,
        attentive: lhs >= hurdle,
        case: if hurdle <= gap {
            CommitmentCase::InferenceDominates
        } else {
            CommitmentCase::HurdleDominates
        },
    })
}
