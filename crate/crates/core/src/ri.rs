//! Single-voter rational-inattention problem with mutual-information cost.
//!
//! A voter faces a finite distribution over payoff-relevant states (policy
//! profiles or news profiles), each carrying the differential utility of
//! choosing β over α. The optimal stochastic choice has the shifted-logit
//! form `m(x) = Λ e^{v/μ} / (Λ e^{v/μ} + 1)` with `Λ = m̄ / (1 - m̄)`, unless
//! one of the two corner conditions holds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{log_mean_exp, logistic, Scalar};

/// Upper limit of bisection steps for the interior fixed point.
pub const MAX_BISECTION_STEPS: usize = 200;

/// Shannon entropy in nats; `0 log 0 = 0`.
pub fn entropy<T: Scalar>(probs: &[T]) -> Result<T> {
    let mut h = T::zero();
    for &p in probs {
        if p < T::zero() || !p.is_finite() {
            return Err(Error::Domain(format!("probability {p} is not a valid mass")));
        }
        if p > T::zero() {
            h -= p * p.ln();
        }
    }
    Ok(h)
}

/// Entropy of a Bernoulli(p) variable in nats.
pub fn binary_entropy<T: Scalar>(p: T) -> T {
    let q = T::one() - p;
    let mut h = T::zero();
    if p > T::zero() {
        h -= p * p.ln();
    }
    if q > T::zero() {
        h -= q * q.ln();
    }
    h
}

/// Mutual information between the state and a binary vote:
/// `H_b(m̄) - Σ p_k H_b(m_k)` with `m̄ = Σ p_k m_k`. Clamped at zero.
pub fn mutual_information<T: Scalar>(m: &[T], probs: &[T]) -> T {
    debug_assert_eq!(m.len(), probs.len());
    let mbar: T = m.iter().zip(probs).map(|(&mk, &p)| p * mk).sum();
    let cond: T = m
        .iter()
        .zip(probs)
        .map(|(&mk, &p)| p * binary_entropy(mk))
        .sum();
    (binary_entropy(mbar.max(T::zero()).min(T::one())) - cond).max(T::zero())
}

/// A voter's belief: probabilities over states and the differential utility
/// attached to each state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BeliefOverProfiles<T> {
    probs: Vec<T>,
    values: Vec<T>,
}

impl<T: Scalar> BeliefOverProfiles<T> {
    pub fn new(probs: Vec<T>, values: Vec<T>) -> Result<Self> {
        if probs.is_empty() || probs.len() != values.len() {
            return Err(Error::Validation(format!(
                "belief needs matching non-empty probs and values ({} vs {})",
                probs.len(),
                values.len()
            )));
        }
        if probs.iter().any(|p| !(*p > T::zero()) || !p.is_finite()) {
            return Err(Error::Validation("belief probabilities must be positive".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numeric("belief has non-finite values".into()));
        }
        let total: T = probs.iter().copied().sum();
        let slack = T::fine_tol() * T::from_usize(probs.len().max(10)).unwrap();
        if (total - T::one()).abs() > slack {
            return Err(Error::Validation(format!("belief probabilities sum to {total}")));
        }
        Ok(BeliefOverProfiles { probs, values })
    }

    /// Equiprobable states.
    pub fn uniform(values: Vec<T>) -> Result<Self> {
        let p = T::one() / T::from_usize(values.len().max(1)).unwrap();
        Self::new(vec![p; values.len()], values)
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// `E[v]`.
    pub fn mean_value(&self) -> T {
        self.probs.iter().zip(&self.values).map(|(&p, &v)| p * v).sum()
    }

    /// `log E[exp(s · v)]`, max-shifted.
    pub fn log_expected_exp(&self, scale: T) -> T {
        let xs: Vec<T> = self.values.iter().map(|&v| v * scale).collect();
        log_mean_exp(&self.probs, &xs)
    }
}

/// Which branch of the optimal attention strategy applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// Always vote α, pay no attention.
    CornerZero,
    /// Always vote β, pay no attention.
    CornerOne,
    /// Stochastic logit vote.
    Interior,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::CornerZero => "corner_zero",
            Regime::CornerOne => "corner_one",
            Regime::Interior => "interior",
        }
    }
}

/// Optimal attention strategy of one voter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttentionSolution<T> {
    pub regime: Regime,
    /// Unconditional probability of voting β.
    pub mbar: T,
    /// `m̄ / (1 - m̄)`; `+∞` in the `CornerOne` regime.
    pub lambda: T,
    /// Probability of voting β in each state of the belief.
    pub m: Vec<T>,
    /// Mutual information in nats.
    pub info: T,
    /// Magnitude of the consistency residual at the returned `m̄`.
    pub residual: T,
}

impl<T: Scalar> AttentionSolution<T> {
    fn corner(regime: Regime, n: usize) -> Self {
        let (mbar, lambda) = match regime {
            Regime::CornerOne => (T::one(), T::infinity()),
            _ => (T::zero(), T::zero()),
        };
        AttentionSolution {
            regime,
            mbar,
            lambda,
            m: vec![mbar; n],
            info: T::zero(),
            residual: T::zero(),
        }
    }

    /// Whether the voter acquires information (interior regime).
    pub fn attentive(&self) -> bool {
        self.regime == Regime::Interior
    }

    /// Expected differential utility `Σ p m v`.
    pub fn value(&self, belief: &BeliefOverProfiles<T>) -> T {
        belief
            .probs()
            .iter()
            .zip(belief.values())
            .zip(&self.m)
            .map(|((&p, &v), &m)| p * m * v)
            .sum()
    }

    /// The voter's objective `V - μ I`.
    pub fn objective(&self, belief: &BeliefOverProfiles<T>, mu: T) -> T {
        self.value(belief) - mu * self.info
    }
}

/// Objective `V - μ I` of an arbitrary strategy `m`.
pub fn attention_objective<T: Scalar>(belief: &BeliefOverProfiles<T>, m: &[T], mu: T) -> T {
    let v: T = belief
        .probs()
        .iter()
        .zip(belief.values())
        .zip(m)
        .map(|((&p, &v), &mk)| p * mk * v)
        .sum();
    v - mu * mutual_information(m, belief.probs())
}

fn check_mu<T: Scalar>(mu: T) -> Result<()> {
    if mu > T::zero() && mu.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("attention cost must be positive, got {mu}")))
    }
}

/// `ln(1 - tol)`: the log-domain boundary of the membership inequality.
fn log_boundary<T: Scalar>() -> T {
    (-T::fine_tol()).ln_1p()
}

/// Definition of paying attention: `E[exp(v/μ)] >= 1` (with tolerance).
pub fn attention_membership<T: Scalar>(belief: &BeliefOverProfiles<T>, mu: T) -> Result<bool> {
    check_mu(mu)?;
    let l = belief.log_expected_exp(T::one() / mu);
    if l.is_nan() {
        return Err(Error::Numeric("E[exp(v/mu)] is not a number".into()));
    }
    Ok(l >= log_boundary())
}

/// `(e^x - 1) / (m e^x + 1 - m)`, evaluated without overflow.
fn consistency_term<T: Scalar>(x: T, m: T) -> T {
    if x > T::zero() {
        let e = (-x).exp();
        -(-x).exp_m1() / (m + (T::one() - m) * e)
    } else {
        let e = x.exp();
        x.exp_m1() / (T::one() - m + m * e)
    }
}

fn consistency<T: Scalar>(probs: &[T], xs: &[T], m: T) -> T {
    probs
        .iter()
        .zip(xs)
        .map(|(&p, &x)| p * consistency_term(x, m))
        .sum()
}

/// Solves the voter's problem for the given belief and attention cost.
///
/// Corners are detected from `E[exp(±v/μ)] < 1`. Otherwise the average
/// choice probability solves `E[(e^{v/μ} - 1) / (m̄ e^{v/μ} + 1 - m̄)] = 0`,
/// whose left side is strictly decreasing in `m̄`; the root is bracketed in
/// log-odds on `[1e-12, 1 - 1e-12]` and found by bisection.
pub fn solve_attention<T: Scalar>(
    belief: &BeliefOverProfiles<T>,
    mu: T,
) -> Result<AttentionSolution<T>> {
    check_mu(mu)?;
    let n = belief.len();
    let xs: Vec<T> = belief.values().iter().map(|&v| v / mu).collect();
    if xs.iter().any(|x| !x.is_finite()) {
        return Err(Error::Numeric(format!("v/mu not finite at mu = {mu}")));
    }
    let probs = belief.probs();
    let neg: Vec<T> = xs.iter().map(|&x| -x).collect();
    let up = log_mean_exp(probs, &xs);
    let down = log_mean_exp(probs, &neg);
    if !up.is_finite() || !down.is_finite() {
        return Err(Error::Numeric("log E[exp(v/mu)] not finite".into()));
    }
    let boundary = log_boundary::<T>();
    if up < boundary {
        return Ok(AttentionSolution::corner(Regime::CornerZero, n));
    }
    if down < boundary {
        return Ok(AttentionSolution::corner(Regime::CornerOne, n));
    }

    let edge = T::lit(1e-12);
    let mut lo = (edge / (T::one() - edge)).ln();
    let mut hi = -lo;
    let mut root = None;
    for _ in 0..MAX_BISECTION_STEPS {
        let mid = (lo + hi) * T::half();
        if mid <= lo || mid >= hi {
            break;
        }
        let k = consistency(probs, &xs, logistic(mid));
        if k > T::zero() {
            lo = mid;
        } else if k < T::zero() {
            hi = mid;
        } else {
            root = Some(mid);
            break;
        }
    }
    let log_odds = root.unwrap_or((lo + hi) * T::half());
    let mbar = logistic(log_odds);
    let residual = consistency(probs, &xs, mbar).abs();
    let m: Vec<T> = xs.iter().map(|&x| logistic(x + log_odds)).collect();
    let info = mutual_information(&m, probs);
    Ok(AttentionSolution {
        regime: Regime::Interior,
        mbar,
        lambda: log_odds.exp(),
        m,
        info,
        residual,
    })
}

/// `γ(x) = e^x + e^{-x}`.
pub fn gamma<T: Scalar>(x: T) -> T {
    x.exp() + (-x).exp()
}

/// Positive root of `γ(x) = y`, i.e. `ln(b + √(b² - 1))` with `b = y/2`.
pub fn gamma_inverse<T: Scalar>(y: T) -> Result<T> {
    if !(y >= T::two()) {
        return Err(Error::Domain(format!("gamma_inverse needs y >= 2, got {y}")));
    }
    if y == T::infinity() {
        return Ok(T::infinity());
    }
    let b = y * T::half();
    let d = b - T::one();
    Ok((d + (d * (b + T::one())).sqrt()).ln_1p())
}

/// `γ⁻¹(2b)` given `ln b`, stable when `b` overflows.
fn gamma_inverse_from_log_half<T: Scalar>(log_b: T) -> Result<T> {
    if log_b > T::lit(20.0) {
        let r = (-(T::two() * log_b)).exp();
        Ok(log_b + (T::one() - r).sqrt().ln_1p())
    } else {
        gamma_inverse(T::two() * log_b.exp())
    }
}

/// Sufficient policy gap for attention: `μ γ⁻¹(2b)` with
/// `b = (exp(κ|t|/μ) - D) / (1 - D)`, `D` the diagonal probability mass.
pub fn attention_threshold_delta<T: Scalar>(mu: T, t: T, kappa: T, diag_mass: T) -> Result<T> {
    check_mu(mu)?;
    if !(kappa > T::zero()) {
        return Err(Error::Domain(format!("kappa must be positive, got {kappa}")));
    }
    if t == T::zero() {
        return Err(Error::Domain("threshold undefined for the median voter".into()));
    }
    if !(diag_mass >= T::zero() && diag_mass < T::one()) {
        return Err(Error::Domain(format!(
            "diagonal mass must lie in [0, 1), got {diag_mass}"
        )));
    }
    let x = kappa * t.abs() / mu;
    // ln b = x + ln(1 - D e^{-x}) - ln(1 - D)
    let log_b = x + (-(diag_mass * (-x).exp())).ln_1p() - (-diag_mass).ln_1p();
    Ok(mu * gamma_inverse_from_log_half(log_b)?)
}

/// The two-policy, equiprobable-type specialization:
/// `μ γ⁻¹(4 exp(2τ/μ) - 2)`.
pub fn two_policy_threshold<T: Scalar>(mu: T, tau: T) -> Result<T> {
    attention_threshold_delta(mu, tau, T::two(), T::half())
}
