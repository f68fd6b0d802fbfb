use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How a technology was specified; kept for serialization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum NewsFamily<T> {
    /// Two signals, `f(ω₂|a) = a + ξ(1 - a)`.
    Slant { xi: T },
    /// Explicit rows.
    Matrix,
    /// One signal per policy, identity rows.
    Revealing,
}

/// Conditional signal distribution for each policy on β's grid.
///
/// α's technology follows by symmetry, `f_α(-ω | -a) = f_β(ω | a)`, and
/// signals about the two candidates are independent unless a joint
/// garbling kernel has been applied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NewsTechnology<T> {
    family: NewsFamily<T>,
    policies: Vec<T>,
    signals: Vec<T>,
    rows: Vec<Vec<T>>,
    /// Row-stochastic kernel over signal pairs applied after the product.
    joint: Option<Vec<Vec<T>>>,
}

fn check_stochastic<T: Scalar>(rows: &[Vec<T>], width: usize, what: &str) -> Result<()> {
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(Error::Validation(format!("{what} row {i} has {} entries, expected {width}", r.len())));
        }
        if r.iter().any(|x| !(*x >= T::zero()) || !x.is_finite()) {
            return Err(Error::Validation(format!("{what} row {i} has a negative entry")));
        }
        let s: T = r.iter().copied().sum();
        if (s - T::one()).abs() > T::fine_tol() * T::lit(10.0) {
            return Err(Error::Validation(format!("{what} row {i} sums to {s}")));
        }
    }
    Ok(())
}

impl<T: Scalar> NewsTechnology<T> {
    pub fn from_rows(policies: Vec<T>, signals: Vec<T>, rows: Vec<Vec<T>>) -> Result<Self> {
        Self::build(NewsFamily::Matrix, policies, signals, rows)
    }

    fn build(family: NewsFamily<T>, policies: Vec<T>, signals: Vec<T>, rows: Vec<Vec<T>>) -> Result<Self> {
        if policies.is_empty() || policies.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Validation("news policies must be non-empty and increasing".into()));
        }
        if signals.is_empty()
            || signals.windows(2).any(|w| w[1] <= w[0])
            || signals.iter().any(|s| !(*s > T::zero()))
        {
            return Err(Error::Validation(
                "signal grid must be positive and strictly increasing".into(),
            ));
        }
        if rows.len() != policies.len() {
            return Err(Error::Validation(format!(
                "news technology has {} rows for {} policies",
                rows.len(),
                policies.len()
            )));
        }
        check_stochastic(&rows, signals.len(), "news technology")?;
        let f = NewsTechnology {
            family,
            policies,
            signals,
            rows,
            joint: None,
        };
        let zeros = f.zero_entries();
        if zeros > 0 {
            log::warn!("news technology has {zeros} zero entries; posteriors may be undefined");
        }
        Ok(f)
    }

    /// Slanted two-signal family: `f(ω₁|a) = (1-a)(1-ξ)`, `f(ω₂|a) = a + ξ(1-a)`.
    pub fn slant(policies: Vec<T>, xi: T, signals: [T; 2]) -> Result<Self> {
        if !(xi >= T::zero() && xi <= T::one()) {
            return Err(Error::Validation(format!("slant parameter must lie in [0, 1], got {xi}")));
        }
        if policies.iter().any(|a| !(*a >= T::zero() && *a <= T::one())) {
            return Err(Error::Validation("slant technology needs policies in [0, 1]".into()));
        }
        let rows = policies
            .iter()
            .map(|&a| {
                let hi = a + xi * (T::one() - a);
                vec![T::one() - hi, hi]
            })
            .collect();
        Self::build(NewsFamily::Slant { xi }, policies, signals.to_vec(), rows)
    }

    /// Signals reveal the policy: `Ω_β` equals the grid, rows are identity.
    pub fn revealing(policies: Vec<T>) -> Result<Self> {
        let n = policies.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|k| if i == k { T::one() } else { T::zero() }).collect())
            .collect();
        let f = NewsTechnology {
            family: NewsFamily::Revealing,
            signals: policies.clone(),
            policies,
            rows,
            joint: None,
        };
        check_stochastic(&f.rows, n, "news technology")?;
        Ok(f)
    }

    pub fn family(&self) -> &NewsFamily<T> {
        &self.family
    }

    pub fn policies(&self) -> &[T] {
        &self.policies
    }

    pub fn signals(&self) -> &[T] {
        &self.signals
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn joint_kernel(&self) -> Option<&[Vec<T>]> {
        self.joint.as_deref()
    }

    /// `K = |Ω_β|`.
    pub fn k(&self) -> usize {
        self.signals.len()
    }

    pub fn is_product(&self) -> bool {
        self.joint.is_none()
    }

    pub fn is_revealing(&self) -> bool {
        matches!(self.family, NewsFamily::Revealing) && self.joint.is_none()
    }

    pub fn zero_entries(&self) -> usize {
        self.rows.iter().flatten().filter(|x| **x == T::zero()).count()
    }

    pub fn row_index(&self, a: T) -> Option<usize> {
        let tol = T::fine_tol();
        self.policies.iter().position(|p| (*p - a).abs() <= tol)
    }

    pub fn row_index_or_err(&self, a: T) -> Result<usize> {
        self.row_index(a)
            .ok_or_else(|| Error::Validation(format!("policy {a} has no news technology row")))
    }

    /// Joint pmf over signal cells when α plays `-policies[i]` and β plays
    /// `policies[j]`. Cell `m * K + n` means α's signal is `-ω_m` and β's is `ω_n`.
    pub fn joint_pmf(&self, i: usize, j: usize) -> Vec<T> {
        let k = self.k();
        let (ra, rb) = (&self.rows[i], &self.rows[j]);
        let mut p = Vec::with_capacity(k * k);
        for &x in ra {
            for &y in rb {
                p.push(x * y);
            }
        }
        match &self.joint {
            None => p,
            Some(kernel) => {
                let mut out = vec![T::zero(); k * k];
                for (c, &pc) in p.iter().enumerate() {
                    if pc == T::zero() {
                        continue;
                    }
                    for (d, &r) in kernel[c].iter().enumerate() {
                        out[d] += pc * r;
                    }
                }
                out
            }
        }
    }

    /// Symmetry between the candidates' news: `P(mn | ij) = P(nm | ji)`.
    pub fn is_symmetric(&self) -> bool {
        if self.joint.is_none() {
            return true;
        }
        let (n, k) = (self.policies.len(), self.k());
        for i in 0..n {
            for j in 0..n {
                let p = self.joint_pmf(i, j);
                let q = self.joint_pmf(j, i);
                for m in 0..k {
                    for l in 0..k {
                        if (p[m * k + l] - q[l * k + m]).abs() > T::fine_tol() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Blackwell garbling `f'(ω'|a) = Σ_ω f(ω|a) ρ(ω'|ω)`.
    pub fn garble(&self, kernel: &MarkovKernel<T>) -> Result<Self> {
        let k = self.k();
        kernel.validate(k)?;
        let mut out = self.clone();
        out.family = NewsFamily::Matrix;
        match kernel {
            MarkovKernel::Factorized(rho) if self.joint.is_none() => {
                out.rows = self
                    .rows
                    .iter()
                    .map(|r| (0..k).map(|d| (0..k).map(|c| r[c] * rho[c][d]).sum()).collect())
                    .collect();
            }
            _ => {
                let rho = kernel.as_joint(k);
                out.joint = Some(match &self.joint {
                    None => rho,
                    Some(prev) => compose(prev, &rho),
                });
            }
        }
        Ok(out)
    }
}

fn compose<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = b.len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|d| row.iter().zip(b).map(|(&x, br)| x * br[d]).sum())
                .collect()
        })
        .collect()
}

/// Row-stochastic garbling kernel.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum MarkovKernel<T> {
    /// `K × K`, applied to each candidate's signal independently.
    Factorized(Vec<Vec<T>>),
    /// `K² × K²` over signal cells `m * K + n`.
    Joint(Vec<Vec<T>>),
}

impl<T: Scalar> MarkovKernel<T> {
    pub fn identity(k: usize) -> Self {
        MarkovKernel::Factorized(
            (0..k)
                .map(|i| (0..k).map(|j| if i == j { T::one() } else { T::zero() }).collect())
                .collect(),
        )
    }

    /// Every signal is replaced by a draw from `dist`.
    pub fn constant(dist: Vec<T>) -> Self {
        MarkovKernel::Factorized(vec![dist.clone(); dist.len()])
    }

    /// Two-signal kernel moving mass `λ` from `ω₁` to `ω₂`.
    pub fn slant_shift(lambda: T) -> Self {
        MarkovKernel::Factorized(vec![
            vec![T::one() - lambda, lambda],
            vec![T::zero(), T::one()],
        ])
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        match self {
            MarkovKernel::Factorized(r) => {
                if r.len() != k {
                    return Err(Error::Validation(format!("kernel has {} rows, expected {k}", r.len())));
                }
                check_stochastic(r, k, "kernel")
            }
            MarkovKernel::Joint(r) => {
                if r.len() != k * k {
                    return Err(Error::Validation(format!(
                        "joint kernel has {} rows, expected {}",
                        r.len(),
                        k * k
                    )));
                }
                check_stochastic(r, k * k, "kernel")
            }
        }
    }

    /// Joint form; a factorized kernel becomes its Kronecker square.
    pub fn as_joint(&self, k: usize) -> Vec<Vec<T>> {
        match self {
            MarkovKernel::Joint(r) => r.clone(),
            MarkovKernel::Factorized(r) => {
                let mut out = vec![vec![T::zero(); k * k]; k * k];
                for m in 0..k {
                    for n in 0..k {
                        for m2 in 0..k {
                            for n2 in 0..k {
                                out[m * k + n][m2 * k + n2] = r[m][m2] * r[n][n2];
                            }
                        }
                    }
                }
                out
            }
        }
    }
}

/// First pair of policies and signals breaking strict log-supermodularity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LsmViolation<T> {
    pub a_low: T,
    pub a_high: T,
    pub omega_low: T,
    pub omega_high: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LsmReport<T> {
    pub holds: bool,
    /// A compared cell had zero probability.
    pub indeterminate: bool,
    pub violation: Option<LsmViolation<T>>,
}

/// Strict log-supermodularity of β's rows:
/// `ln f(ω'|a') + ln f(ω|a) - ln f(ω'|a) - ln f(ω|a') > 1e-12` for `a < a'`, `ω < ω'`.
pub fn check_log_supermodularity<T: Scalar>(f: &NewsTechnology<T>) -> Result<LsmReport<T>> {
    if !f.is_product() {
        return Err(Error::Validation(
            "log-supermodularity is audited on per-candidate rows; joint garbling has none".into(),
        ));
    }
    let (p, s, rows) = (f.policies(), f.signals(), f.rows());
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            for m in 0..s.len() {
                for n in m + 1..s.len() {
                    let cells = [rows[j][n], rows[i][m], rows[i][n], rows[j][m]];
                    let violation = Some(LsmViolation {
                        a_low: p[i],
                        a_high: p[j],
                        omega_low: s[m],
                        omega_high: s[n],
                    });
                    if cells.iter().any(|c| *c == T::zero()) {
                        return Ok(LsmReport { holds: false, indeterminate: true, violation });
                    }
                    let minor = cells[0].ln() + cells[1].ln() - cells[2].ln() - cells[3].ln();
                    if !(minor > T::fine_tol()) {
                        return Ok(LsmReport { holds: false, indeterminate: false, violation });
                    }
                }
            }
        }
    }
    Ok(LsmReport { holds: true, indeterminate: false, violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Vec<f64> {
        (0..50).map(|k| (k as f64 + 0.5) / 50.0).collect()
    }

    #[test]
    fn slant_rows_are_stochastic_and_lsm() {
        for xi in [0.1, 0.5, 0.9] {
            let f = NewsTechnology::slant(grid(), xi, [0.25, 0.75]).unwrap();
            let r = check_log_supermodularity(&f).unwrap();
            assert!(r.holds, "{xi}: {r:?}");
        }
    }

    #[test]
    fn identical_rows_are_not_strict() {
        let f = NewsTechnology::from_rows(vec![0.2, 0.6], vec![0.3, 0.7], vec![vec![0.4, 0.6]; 2]).unwrap();
        let r = check_log_supermodularity(&f).unwrap();
        assert!(!r.holds && !r.indeterminate);
    }

    #[test]
    fn swapped_entries_report_the_quadruple() {
        let f = NewsTechnology::from_rows(
            vec![0.2, 0.6],
            vec![0.3, 0.7],
            vec![vec![0.3, 0.7], vec![0.7, 0.3]],
        )
        .unwrap();
        let v = check_log_supermodularity(&f).unwrap().violation.unwrap();
        assert_eq!((v.a_low, v.a_high, v.omega_low, v.omega_high), (0.2, 0.6, 0.3, 0.7));
    }

    #[test]
    fn garbling_basics() {
        let f = NewsTechnology::slant(grid(), 0.3, [0.25, 0.75]).unwrap();
        let same = f.garble(&MarkovKernel::identity(2)).unwrap();
        assert_eq!(same.rows(), f.rows());
        let flat = f.garble(&MarkovKernel::constant(vec![0.4, 0.6])).unwrap();
        assert!(flat.rows().iter().all(|r| (r[0] - 0.4).abs() < 1e-15));
    }

    #[test]
    fn slant_family_is_closed_under_shift() {
        let (xi, xi2) = (0.57, 0.65);
        let f = NewsTechnology::slant(grid(), xi, [0.25, 0.75]).unwrap();
        let g = f.garble(&MarkovKernel::slant_shift((xi2 - xi) / (1.0 - xi))).unwrap();
        let target = NewsTechnology::slant(grid(), xi2, [0.25, 0.75]).unwrap();
        for (r, t) in g.rows().iter().zip(target.rows()) {
            for (x, y) in r.iter().zip(t) {
                assert!((x - y).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn joint_kernel_matches_factorized() {
        let f = NewsTechnology::<f64>::slant(vec![0.2, 0.6], 0.4, [0.25, 0.75]).unwrap();
        let rho = vec![vec![0.8, 0.2], vec![0.1, 0.9]];
        let fact = f.garble(&MarkovKernel::Factorized(rho.clone())).unwrap();
        let joint = f
            .garble(&MarkovKernel::Joint(MarkovKernel::Factorized(rho).as_joint(2)))
            .unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for (x, y) in fact.joint_pmf(i, j).iter().zip(joint.joint_pmf(i, j)) {
                    assert!((x - y).abs() < 1e-15);
                }
            }
        }
        assert!(joint.is_symmetric());
        assert!(MarkovKernel::<f64>::Factorized(vec![vec![0.5, 0.6], vec![0.0, 1.0]])
            .validate(2)
            .is_err());
    }
}
