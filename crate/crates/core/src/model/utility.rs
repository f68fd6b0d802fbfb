use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A policy profile `(a_α, a_β)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Profile<T> {
    pub alpha: T,
    pub beta: T,
}

impl<T: Scalar> Profile<T> {
    pub fn new(alpha: T, beta: T) -> Self {
        Profile { alpha, beta }
    }

    /// The symmetric counterpart `(-a_β, -a_α)`.
    pub fn reflect(self) -> Self {
        Profile {
            alpha: -self.beta,
            beta: -self.alpha,
        }
    }
}

/// Sign applied to the loser's policy term `δ₋|t - a'|`.
///
/// `Penalty` (−1) is the reading under which the Calvert and two-equilibrium
/// benchmarks come out right; `Reward` (+1) takes the formula's sign literally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LoserSign {
    Reward,
    #[default]
    Penalty,
}

impl LoserSign {
    pub fn value<T: Scalar>(self) -> T {
        match self {
            LoserSign::Reward => T::one(),
            LoserSign::Penalty => -T::one(),
        }
    }

    pub fn from_i8(s: i8) -> Result<Self> {
        match s {
            1 => Ok(LoserSign::Reward),
            -1 => Ok(LoserSign::Penalty),
            other => Err(Error::Validation(format!(
                "loser_sign must be +1 or -1, got {other}"
            ))),
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            LoserSign::Reward => 1,
            LoserSign::Penalty => -1,
        }
    }
}

/// Tabulated voter utility `u(a, t)` on a finite `(a, t)` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityTable<T> {
    actions: Vec<T>,
    types: Vec<T>,
    /// `values[i][k] = u(actions[i], types[k])`.
    values: Vec<Vec<T>>,
}

impl<T: Scalar> UtilityTable<T> {
    pub fn new(actions: Vec<T>, types: Vec<T>, values: Vec<Vec<T>>) -> Result<Self> {
        for (name, axis) in [("actions", &actions), ("types", &types)] {
            if axis.is_empty() {
                return Err(Error::Validation(format!("utility table {name} empty")));
            }
            if axis.windows(2).any(|w| w[1] <= w[0]) {
                return Err(Error::Validation(format!(
                    "utility table {name} must be strictly increasing"
                )));
            }
        }
        if values.len() != actions.len() || values.iter().any(|r| r.len() != types.len()) {
            return Err(Error::Validation(format!(
                "utility table values must be {} x {}",
                actions.len(),
                types.len()
            )));
        }
        if values.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Validation("utility table has non-finite entries".into()));
        }
        Ok(UtilityTable {
            actions,
            types,
            values,
        })
    }

    /// Builds a table by evaluating `f` on every grid pair.
    pub fn tabulate(actions: Vec<T>, types: Vec<T>, f: impl Fn(T, T) -> T) -> Result<Self> {
        let values = actions
            .iter()
            .map(|&a| types.iter().map(|&t| f(a, t)).collect())
            .collect();
        Self::new(actions, types, values)
    }

    pub fn actions(&self) -> &[T] {
        &self.actions
    }

    pub fn types(&self) -> &[T] {
        &self.types
    }

    pub fn values(&self) -> &[Vec<T>] {
        &self.values
    }

    fn locate(axis: &[T], x: T) -> Option<usize> {
        let tol = T::fine_tol();
        let idx = axis.partition_point(|v| *v < x - tol);
        (idx < axis.len() && (axis[idx] - x).abs() <= tol).then_some(idx)
    }

    pub fn get(&self, a: T, t: T) -> Result<T> {
        match (Self::locate(&self.actions, a), Self::locate(&self.types, t)) {
            (Some(i), Some(k)) => Ok(self.values[i][k]),
            _ => Err(Error::Lookup {
                a: a.as_f64(),
                t: t.as_f64(),
            }),
        }
    }
}

/// Voter utility family.
#[derive(Debug, Clone, PartialEq)]
pub enum VoterFamily<T> {
    /// `u(a, t) = -|t - a|`.
    AbsoluteLoss,
    /// `u(a, t) = -(t - a)^2`.
    Quadratic,
    /// Tabulated values; must have weakly increasing differences.
    Table(UtilityTable<T>),
}

/// Voter and candidate payoffs.
///
/// Candidates earn `R - δ₊|t - a|` when they win with policy `a` and
/// `sign · δ₋|t - a'|` when they lose to policy `a'`.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilitySpec<T> {
    pub voter: VoterFamily<T>,
    pub office_rent: T,
    pub winner_weight: T,
    pub loser_weight: T,
    pub loser_sign: LoserSign,
    /// Explicit `κ`; derived from the grids when absent.
    pub kappa: Option<T>,
}

impl<T: Scalar> UtilitySpec<T> {
    pub fn new(voter: VoterFamily<T>, office_rent: T, winner_weight: T, loser_weight: T) -> Self {
        UtilitySpec {
            voter,
            office_rent,
            winner_weight,
            loser_weight,
            loser_sign: LoserSign::default(),
            kappa: None,
        }
    }

    pub fn with_loser_sign(mut self, sign: LoserSign) -> Self {
        self.loser_sign = sign;
        self
    }

    /// Voter-only specification (candidate payoffs zeroed).
    pub fn voter_only(voter: VoterFamily<T>) -> Self {
        Self::new(voter, T::zero(), T::zero(), T::zero())
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("office_rent", self.office_rent),
            ("winner_weight", self.winner_weight),
            ("loser_weight", self.loser_weight),
        ] {
            if !(v >= T::zero()) || !v.is_finite() {
                return Err(Error::Validation(format!("{name} must be finite and >= 0")));
            }
        }
        if let Some(k) = self.kappa {
            if !(k > T::zero()) {
                return Err(Error::Validation("kappa must be positive".into()));
            }
        }
        if let VoterFamily::Table(table) = &self.voter {
            if let Some((a0, a1, t0, t1)) = single_crossing_violation(table) {
                return Err(Error::Assumption(format!(
                    "utility table fails increasing differences at a = ({a0}, {a1}), t = ({t0}, {t1})"
                )));
            }
        }
        Ok(())
    }

    /// `u(a, t)`.
    pub fn voter_utility(&self, a: T, t: T) -> Result<T> {
        match &self.voter {
            VoterFamily::AbsoluteLoss => Ok(-(t - a).abs()),
            VoterFamily::Quadratic => {
                let d = t - a;
                Ok(-(d * d))
            }
            VoterFamily::Table(table) => table.get(a, t),
        }
    }

    /// `v(a, t) = u(a_β, t) - u(a_α, t)`.
    pub fn differential_utility(&self, profile: Profile<T>, t: T) -> Result<T> {
        Ok(self.voter_utility(profile.beta, t)? - self.voter_utility(profile.alpha, t)?)
    }

    /// `R - δ₊|t - a|`.
    pub fn win_value(&self, a: T, t: T) -> T {
        self.office_rent - self.winner_weight * (t - a).abs()
    }

    /// `sign · δ₋|t - a'|` where `a'` is the winning opponent's policy.
    pub fn lose_value(&self, winner_policy: T, t: T) -> T {
        self.loser_sign.value::<T>() * self.loser_weight * (t - winner_policy).abs()
    }

    /// `(win_value, lose_value)` for a candidate of type `t`.
    pub fn candidate_stage_payoffs(&self, own: T, opponent: T, t: T) -> (T, T) {
        (self.win_value(own, t), self.lose_value(opponent, t))
    }

    /// `κ` for the configured grids: explicit value, the closed form of the
    /// built-in families (`2 min A_β`, `4 min A_β`), or a brute-force
    /// minimum over the table's positive types.
    pub fn kappa(&self, alpha: &[T], beta: &[T]) -> Result<T> {
        if let Some(k) = self.kappa {
            return Ok(k);
        }
        let min_beta = beta.iter().copied().fold(T::infinity(), T::min);
        match &self.voter {
            VoterFamily::AbsoluteLoss => Ok(T::two() * min_beta),
            VoterFamily::Quadratic => Ok(T::lit(4.0) * min_beta),
            VoterFamily::Table(table) => {
                let mut best = T::infinity();
                for &t in table.types().iter().filter(|t| **t > T::zero()) {
                    best = best.min(self.kappa_for_voter(t, alpha, beta)?);
                }
                if best.is_finite() {
                    Ok(best)
                } else {
                    Err(Error::Validation(
                        "utility table has no positive types to derive kappa from".into(),
                    ))
                }
            }
        }
    }

    /// Largest `κ` with `v(a, |t|) - v(a, 0) >= κ|t|` over all grid profiles.
    pub fn kappa_for_voter(&self, t: T, alpha: &[T], beta: &[T]) -> Result<T> {
        let t = t.abs();
        if t == T::zero() {
            return Err(Error::Domain("kappa_for_voter needs t != 0".into()));
        }
        let mut best = T::infinity();
        for &aa in alpha {
            for &ab in beta {
                let p = Profile::new(aa, ab);
                let d = self.differential_utility(p, t)? - self.differential_utility(p, T::zero())?;
                best = best.min(d / t);
            }
        }
        Ok(best)
    }

    /// Numerical audit of the structural assumptions on the given grids.
    pub fn audit(&self, alpha: &[T], beta: &[T], voter_types: &[T]) -> Result<UtilityAudit<T>> {
        let mut audit = UtilityAudit::default();
        let mut actions: Vec<T> = alpha.iter().chain(beta).copied().collect();
        actions.sort_by(|a, b| a.partial_cmp(b).unwrap());
        actions.dedup();

        'sym: for &a in &actions {
            for &t in voter_types {
                let lhs = self.voter_utility(a, t)?;
                let rhs = self.voter_utility(-a, -t);
                match rhs {
                    Ok(rhs) if lhs == rhs => {}
                    _ => {
                        audit.symmetry = Some(format!("u({a}, {t}) != u({}, {})", -a, -t));
                        break 'sym;
                    }
                }
                if self.win_value(a, t) != self.win_value(-a, -t)
                    || self.lose_value(a, t) != self.lose_value(-a, -t)
                {
                    audit.symmetry = Some(format!("candidate payoffs asymmetric at ({a}, {t})"));
                    break 'sym;
                }
            }
        }

        let mut types: Vec<T> = voter_types.to_vec();
        types.sort_by(|a, b| a.partial_cmp(b).unwrap());
        types.dedup();
        'inc: for (i, &a0) in actions.iter().enumerate() {
            for &a1 in &actions[i + 1..] {
                for (k, &t0) in types.iter().enumerate() {
                    for &t1 in &types[k + 1..] {
                        let hi = self.voter_utility(a1, t1)? - self.voter_utility(a0, t1)?;
                        let lo = self.voter_utility(a1, t0)? - self.voter_utility(a0, t0)?;
                        if !(hi > lo) {
                            audit.increasing_differences =
                                Some(format!("a = ({a0}, {a1}), t = ({t0}, {t1})"));
                            break 'inc;
                        }
                    }
                }
            }
        }

        'cav: for &t in &types {
            for w in actions.windows(3) {
                // Discrete concavity on an uneven grid: the middle point lies
                // weakly above the chord.
                let (x0, x1, x2) = (w[0], w[1], w[2]);
                let lam = (x2 - x1) / (x2 - x0);
                let chord = lam * self.voter_utility(x0, t)?
                    + (T::one() - lam) * self.voter_utility(x2, t)?;
                if self.voter_utility(x1, t)? < chord - T::fine_tol() {
                    audit.concavity = Some(format!("u(., {t}) convex around {x1}"));
                    break 'cav;
                }
            }
        }

        let kappa = self.kappa(alpha, beta)?;
        audit.kappa = kappa;
        'kap: for &t in types.iter().filter(|t| **t > T::zero()) {
            for &aa in alpha {
                for &ab in beta {
                    let p = Profile::new(aa, ab);
                    let d = self.differential_utility(p, t)? - self.differential_utility(p, T::zero())?;
                    if d < kappa * t - T::fine_tol() {
                        audit.kappa_condition = Some(format!(
                            "v(a, {t}) - v(a, 0) = {d} < kappa * t at a = ({aa}, {ab})"
                        ));
                        break 'kap;
                    }
                }
            }
        }
        Ok(audit)
    }
}

/// First violations found by [`UtilitySpec::audit`]; `None` means the
/// property holds on the audited grid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct UtilityAudit<T> {
    pub symmetry: Option<String>,
    pub increasing_differences: Option<String>,
    pub concavity: Option<String>,
    pub kappa_condition: Option<String>,
    pub kappa: T,
}

impl<T> UtilityAudit<T> {
    pub fn passed(&self) -> bool {
        self.symmetry.is_none()
            && self.increasing_differences.is_none()
            && self.concavity.is_none()
            && self.kappa_condition.is_none()
    }
}

fn single_crossing_violation<T: Scalar>(table: &UtilityTable<T>) -> Option<(T, T, T, T)> {
    let (acts, types, vals) = (table.actions(), table.types(), table.values());
    for i in 0..acts.len() {
        for j in i + 1..acts.len() {
            for k in 0..types.len() {
                for l in k + 1..types.len() {
                    let hi = vals[j][l] - vals[i][l];
                    let lo = vals[j][k] - vals[i][k];
                    if hi < lo - T::fine_tol() {
                        return Some((acts[i], acts[j], types[k], types[l]));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abs_spec() -> UtilitySpec<f64> {
        UtilitySpec::voter_only(VoterFamily::AbsoluteLoss)
    }

    #[test]
    fn voter_utility_examples() {
        let s = abs_spec();
        assert!((s.voter_utility(0.01, -0.05).unwrap() + 0.06).abs() < 1e-15);
        assert_eq!(s.voter_utility(0.3, 0.3).unwrap(), 0.0);
        let q = UtilitySpec::<f64>::voter_only(VoterFamily::Quadratic);
        assert!((q.voter_utility(0.4, 0.0).unwrap() + 0.16).abs() < 1e-15);
    }

    #[test]
    fn differential_utility_examples() {
        let s = abs_spec();
        let v = s.differential_utility(Profile::new(-0.4, 0.01), -0.05).unwrap();
        assert!((v - 0.29).abs() < 1e-12);
        assert_eq!(s.differential_utility(Profile::new(-0.3, 0.3), 0.0).unwrap(), 0.0);
        let v = s.differential_utility(Profile::new(-0.01, 0.4), -0.2).unwrap();
        assert!((v + 0.41).abs() < 1e-12);
    }

    #[test]
    fn candidate_payoff_examples() {
        let s = UtilitySpec::<f64>::new(VoterFamily::AbsoluteLoss, 8.0, 12.0, 1.0);
        let (win, _) = s.candidate_stage_payoffs(0.2, -0.2, 0.3);
        assert!((win - 6.8).abs() < 1e-12);

        let downs = UtilitySpec::new(VoterFamily::AbsoluteLoss, 8.0, 0.0, 0.0);
        for opp in [-0.9, -0.2, -0.01] {
            assert_eq!(downs.candidate_stage_payoffs(0.2, opp, 0.3).1, 0.0);
        }

        let reward = UtilitySpec::<f64>::new(VoterFamily::AbsoluteLoss, 0.0, 0.0, 1.0)
            .with_loser_sign(LoserSign::Reward);
        assert!((reward.candidate_stage_payoffs(0.1, -0.2, 0.8).1 - 1.0).abs() < 1e-12);
        let penalty = reward.clone().with_loser_sign(LoserSign::Penalty);
        assert!((penalty.candidate_stage_payoffs(0.1, -0.2, 0.8).1 + 1.0).abs() < 1e-12);
    }

    #[test]
    fn table_lookup_and_missing_entry() {
        let t = UtilityTable::<f64>::tabulate(vec![-0.5, 0.5], vec![-0.1, 0.1], |a, t| -(t - a).abs())
            .unwrap();
        let s = UtilitySpec::voter_only(VoterFamily::Table(t));
        assert!((s.voter_utility(0.5, 0.1).unwrap() + 0.4).abs() < 1e-15);
        assert!(matches!(s.voter_utility(0.3, 0.1), Err(Error::Lookup { .. })));
    }

    #[test]
    fn table_must_be_single_crossing() {
        // u(a, t) = +|t - a| has decreasing differences.
        let t = UtilityTable::<f64>::tabulate(vec![-0.5, 0.5], vec![-0.1, 0.1], |a, t| (t - a).abs())
            .unwrap();
        let s = UtilitySpec::voter_only(VoterFamily::Table(t));
        assert!(matches!(s.validate(), Err(Error::Assumption(_))));
    }

    #[test]
    fn builtin_kappa_closed_forms() {
        let alpha = [-0.4, -0.01];
        let beta = [0.01, 0.4];
        assert!((abs_spec().kappa(&alpha, &beta).unwrap() - 0.02).abs() < 1e-15);
        let q = UtilitySpec::voter_only(VoterFamily::Quadratic);
        assert!((q.kappa(&alpha, &beta).unwrap() - 0.04).abs() < 1e-15);
        // Brute-force kappa for a voter closer to the centre than every policy.
        let k = abs_spec().kappa_for_voter(-0.005, &alpha, &beta).unwrap();
        assert!((k - 2.0).abs() < 1e-9);
    }

    #[test]
    fn builtin_families_pass_audit() {
        let alpha = [-0.4, -0.2, -0.01];
        let beta = [0.01, 0.2, 0.4];
        let types = [-0.8, -0.3, 0.0, 0.3, 0.8];
        for fam in [VoterFamily::AbsoluteLoss, VoterFamily::Quadratic] {
            let audit = UtilitySpec::voter_only(fam).audit(&alpha, &beta, &types).unwrap();
            assert!(audit.symmetry.is_none(), "{audit:?}");
            assert!(audit.concavity.is_none(), "{audit:?}");
            assert!(audit.kappa_condition.is_none(), "{audit:?}");
        }
        // Strict increasing differences holds for the quadratic family on any grid.
        let q = UtilitySpec::voter_only(VoterFamily::Quadratic)
            .audit(&alpha, &beta, &types)
            .unwrap();
        assert!(q.increasing_differences.is_none());
    }
}
