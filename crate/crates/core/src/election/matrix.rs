use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Profile, Scenario};
use crate::ri::BeliefOverProfiles;
use crate::scalar::Scalar;

/// Policy, probability and winning matrices of a symmetric strategy profile.
///
/// Row `i` indexes α's policy `-a_i`, column `j` indexes β's policy `a_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixTriple<T> {
    /// Distinct on-path policies `0 < a_1 < ... < a_N`.
    pub a: Vec<T>,
    /// Candidate type behind each policy, when the type → policy map is injective.
    pub types: Option<Vec<T>>,
    pub sigma: Vec<Vec<T>>,
    pub w: Vec<Vec<T>>,
}

/// Downsian winning matrix: β wins when strictly closer to the centre.
pub fn downsian_matrix<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => T::one(),
                    std::cmp::Ordering::Equal => T::half(),
                    std::cmp::Ordering::Greater => T::zero(),
                })
                .collect()
        })
        .collect()
}

impl<T: Scalar> MatrixTriple<T> {
    pub fn new(a: Vec<T>, sigma: Vec<Vec<T>>, w: Vec<Vec<T>>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::Validation("policy matrix is empty".into()));
        }
        if a.iter().any(|x| !(*x > T::zero() && *x <= T::one())) {
            return Err(Error::Validation("policies must lie in (0, 1]".into()));
        }
        if a.windows(2).any(|p| p[1] <= p[0]) {
            return Err(Error::Validation("policies must be strictly increasing".into()));
        }
        if sigma.len() != n || sigma.iter().any(|r| r.len() != n) {
            return Err(Error::Validation("probability matrix has the wrong shape".into()));
        }
        if w.len() != n || w.iter().any(|r| r.len() != n) {
            return Err(Error::Validation("winning matrix has the wrong shape".into()));
        }
        let mut total = T::zero();
        for i in 0..n {
            for j in 0..n {
                let s = sigma[i][j];
                if !(s > T::zero()) {
                    return Err(Error::Validation("probability matrix entries must be positive".into()));
                }
                if (s - sigma[j][i]).abs() > T::fine_tol() {
                    return Err(Error::Validation("probability matrix must be symmetric".into()));
                }
                let wij = w[i][j];
                if wij != T::zero() && wij != T::half() && wij != T::one() {
                    return Err(Error::Validation("winning matrix entries must be 0, 1/2 or 1".into()));
                }
                total += s;
            }
        }
        if (total - T::one()).abs() > T::fine_tol() * T::lit(10.0) {
            return Err(Error::Validation(format!("probability matrix sums to {total}")));
        }
        Ok(MatrixTriple {
            a,
            types: None,
            sigma,
            w,
        })
    }

    /// Independent policies with marginal `q` on each side and the
    /// Downsian winning matrix.
    pub fn from_marginal(a: Vec<T>, q: &[T]) -> Result<Self> {
        let sigma = q
            .iter()
            .map(|&qi| q.iter().map(|&qj| qi * qj).collect())
            .collect();
        let n = a.len();
        Self::new(a, sigma, downsian_matrix(n))
    }

    /// Two equiprobable policies `a_1 < a_2`: `Σ = J/4`.
    pub fn two_policy(a1: T, a2: T) -> Result<Self> {
        let q = T::half();
        Self::from_marginal(vec![a1, a2], &[q, q])
    }

    pub fn with_types(mut self, types: Vec<T>) -> Result<Self> {
        if types.len() != self.a.len() {
            return Err(Error::Validation("one type per policy required".into()));
        }
        self.types = Some(types);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// `(-a_i, a_j)`.
    pub fn profile(&self, i: usize, j: usize) -> Profile<T> {
        Profile::new(-self.a[i], self.a[j])
    }

    /// `(-t_i, t_j)`, falling back to the policy profile.
    pub fn type_profile(&self, i: usize, j: usize) -> Profile<T> {
        match &self.types {
            Some(t) => Profile::new(-t[i], t[j]),
            None => self.profile(i, j),
        }
    }

    /// `Σ_i σ_ii`.
    pub fn diag_mass(&self) -> T {
        (0..self.n()).map(|i| self.sigma[i][i]).sum()
    }

    /// Row-major cells `(i, j)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
    }

    /// Voter `t`'s differential utility in every cell, row-major.
    pub fn values(&self, scenario: &Scenario<T>, t: T) -> Result<Vec<T>> {
        if !scenario.full_commitment() && self.types.is_none() {
            return Err(Error::Validation(
                "partial commitment needs an injective type-to-policy map".into(),
            ));
        }
        self.cells()
            .map(|(i, j)| scenario.voter_value(self.profile(i, j), self.type_profile(i, j), t))
            .collect()
    }

    /// Voter `t`'s belief over policy profiles, row-major.
    pub fn belief(&self, scenario: &Scenario<T>, t: T) -> Result<BeliefOverProfiles<T>> {
        let probs = self.cells().map(|(i, j)| self.sigma[i][j]).collect();
        BeliefOverProfiles::new(probs, self.values(scenario, t)?)
    }

    /// `u(a_1, 0) - u(a_N, 0)`.
    pub fn median_differential(&self, scenario: &Scenario<T>) -> Result<T> {
        let u = &scenario.utility;
        Ok(u.voter_utility(self.a[0], T::zero())?
            - u.voter_utility(self.a[self.n() - 1], T::zero())?)
    }

    /// Checks the median voter's value structure: `v_ij = -v_ji`,
    /// `v_ij > 0` below the diagonal and the `(N, 1)` corner is maximal.
    pub fn check_median_structure(&self, scenario: &Scenario<T>) -> Result<()> {
        let n = self.n();
        let v: Vec<Vec<T>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| scenario.voter_value(self.profile(i, j), self.type_profile(i, j), T::zero()))
                    .collect::<Result<Vec<T>>>()
            })
            .collect::<Result<_>>()?;
        let tol = T::fine_tol();
        let corner = v[n - 1][0];
        for i in 0..n {
            for j in 0..n {
                if (v[i][j] + v[j][i]).abs() > tol {
                    return Err(Error::Assumption(format!("median values not antisymmetric at ({i}, {j})")));
                }
                if i > j && !(v[i][j] > T::zero()) {
                    return Err(Error::Assumption(format!("median value not positive at ({i}, {j})")));
                }
                if v[i][j] > corner + tol {
                    return Err(Error::Assumption(format!("cell ({i}, {j}) exceeds the (N, 1) corner")));
                }
            }
        }
        Ok(())
    }
}
