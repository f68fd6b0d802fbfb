//! Costly dissemination: an equilibrium survives only if the information
//! the electorate acquires covers the provider's fixed cost.

use crate::election::EquilibriumRecord;
use crate::ri::entropy;
use crate::scalar::Scalar;

/// `Σ_g w_g I_g >= cost`.
pub fn passes_dissemination<T: Scalar>(record: &EquilibriumRecord<T>, cost: T) -> bool {
    record.total_information() >= cost
}

/// Keeps the equilibria whose total acquired information covers `cost`.
/// Costs outside `(0, H(Σ))` are accepted with a warning.
pub fn dissemination_filter<T: Scalar>(
    equilibria: &[EquilibriumRecord<T>],
    cost: T,
) -> Vec<EquilibriumRecord<T>> {
    for rec in equilibria {
        let probs: Vec<T> = rec.triple.sigma.iter().flatten().copied().collect();
        let h = entropy(&probs).unwrap_or(T::zero());
        if !(cost > T::zero() && cost < h) {
            log::warn!("dissemination cost {cost} outside (0, H(sigma) = {h})");
            break;
        }
    }
    equilibria
        .iter()
        .filter(|r| passes_dissemination(r, cost))
        .cloned()
        .collect()
}
