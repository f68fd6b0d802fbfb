use crate::error::{Error, Result};
use crate::extensions::multi_issue::{Frontier, TwoIssueUtility};
use crate::model::policy::{PolicyAxis, Side};
use crate::model::population::{CandidateSpec, Electorate};
use crate::model::utility::{Profile, UtilitySpec, VoterFamily};
use crate::news::NewsTechnology;
use crate::scalar::Scalar;

/// Two-issue section of a scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct IssuesSpec<T> {
    pub frontier: Frontier<T>,
    pub utility2: TwoIssueUtility<T>,
    /// Number of evenly spaced interior points used when tabulating `û`.
    pub grid_points: usize,
}

/// A complete game description.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario<T> {
    pub name: String,
    pub alpha: PolicyAxis<T>,
    pub beta: PolicyAxis<T>,
    pub utility: UtilitySpec<T>,
    pub alpha_types: CandidateSpec<T>,
    pub beta_types: CandidateSpec<T>,
    pub electorate: Electorate<T>,
    /// Marginal attention cost.
    pub mu: T,
    pub news: Option<NewsTechnology<T>>,
    /// Probability that the winner honours the proposal.
    pub eta: T,
    pub dissemination_cost: Option<T>,
    pub issues: Option<IssuesSpec<T>>,
}

impl<T: Scalar> Scenario<T> {
    /// Symmetric scenario: α's grid and types mirror β's.
    pub fn symmetric(
        name: impl Into<String>,
        beta: PolicyAxis<T>,
        utility: UtilitySpec<T>,
        beta_types: CandidateSpec<T>,
        electorate: Electorate<T>,
        mu: T,
    ) -> Result<Self> {
        let s = Scenario {
            name: name.into(),
            alpha: beta.mirror(),
            beta,
            utility,
            alpha_types: beta_types.mirror(),
            beta_types,
            electorate,
            mu,
            news: None,
            eta: T::one(),
            dissemination_cost: None,
            issues: None,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu > T::zero()) || !self.mu.is_finite() {
            return Err(Error::Validation(format!("mu must be positive, got {}", self.mu)));
        }
        if !(self.eta >= T::zero() && self.eta <= T::one()) {
            return Err(Error::Validation(format!("eta must lie in [0, 1], got {}", self.eta)));
        }
        if self.alpha.side() != Side::Alpha || self.beta.side() != Side::Beta {
            return Err(Error::Validation("policy axes attached to the wrong candidates".into()));
        }
        self.alpha_types.check_side(false)?;
        self.beta_types.check_side(true)?;
        self.utility.validate()?;
        if let Some(c) = self.dissemination_cost {
            if !(c >= T::zero()) {
                return Err(Error::Validation("dissemination cost must be >= 0".into()));
            }
        }
        if let Some(news) = &self.news {
            if news.policies().len() != self.beta.len()
                || news.policies().iter().zip(self.beta.values()).any(|(a, b)| a != b)
            {
                return Err(Error::Validation(
                    "news technology rows must match candidate beta's policy grid".into(),
                ));
            }
        }
        Ok(())
    }

    /// Refuses scenarios that break the symmetry the equilibrium routines rely on.
    pub fn require_symmetric(&self) -> Result<()> {
        if !self.alpha.is_mirror_of(&self.beta) {
            return Err(Error::Asymmetric("policy grids are not mirror images".into()));
        }
        if !self.alpha_types.is_mirror_of(&self.beta_types) {
            return Err(Error::Asymmetric("candidate type distributions are not mirrored".into()));
        }
        if !self.electorate.is_symmetric() {
            return Err(Error::Asymmetric("electorate is not symmetric around 0".into()));
        }
        if let VoterFamily::Table(_) = self.utility.voter {
            for &a in self.beta.values() {
                for t in self.electorate.types() {
                    if self.utility.voter_utility(a, t)? != self.utility.voter_utility(-a, -t)? {
                        return Err(Error::Asymmetric(format!(
                            "utility table not symmetric at ({a}, {t})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_mu(&self, mu: T) -> Result<Self> {
        let mut s = self.clone();
        s.mu = mu;
        s.validate()?;
        Ok(s)
    }

    pub fn with_news(&self, news: Option<NewsTechnology<T>>) -> Result<Self> {
        let mut s = self.clone();
        s.news = news;
        s.validate()?;
        Ok(s)
    }

    pub fn with_eta(&self, eta: T) -> Result<Self> {
        let mut s = self.clone();
        s.eta = eta;
        s.validate()?;
        Ok(s)
    }

    pub fn full_commitment(&self) -> bool {
        self.eta == T::one()
    }

    /// Voter `t`'s differential utility when candidates of types
    /// `(t_α, t_β)` propose `profile`; mixes in the reneging outcome when
    /// commitment is partial.
    pub fn voter_value(&self, profile: Profile<T>, types: Profile<T>, t: T) -> Result<T> {
        let v = self.utility.differential_utility(profile, t)?;
        if self.full_commitment() {
            return Ok(v);
        }
        let reneged = self.utility.differential_utility(types, t)?;
        Ok(self.eta * v + (T::one() - self.eta) * reneged)
    }

    /// Payoff of a winning candidate of type `own_type` with proposal `policy`.
    pub fn win_value(&self, policy: T, own_type: T) -> T {
        let w = self.utility.win_value(policy, own_type);
        if self.full_commitment() {
            return w;
        }
        self.eta * w + (T::one() - self.eta) * self.utility.win_value(own_type, own_type)
    }

    /// Payoff of a losing candidate of type `own_type` when the opponent of
    /// type `winner_type` wins with proposal `winner_policy`.
    pub fn lose_value(&self, winner_policy: T, winner_type: T, own_type: T) -> T {
        let l = self.utility.lose_value(winner_policy, own_type);
        if self.full_commitment() {
            return l;
        }
        self.eta * l + (T::one() - self.eta) * self.utility.lose_value(winner_type, own_type)
    }

    /// `κ` for this scenario's grids.
    pub fn kappa(&self) -> Result<T> {
        self.utility.kappa(self.alpha.values(), self.beta.values())
    }
}
