//! Two-issue policies on a Pareto frontier, reduced to one augmented issue.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::UtilityTable;
use crate::scalar::Scalar;

/// Pareto frontier `b = B(a)` on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Frontier<T> {
    /// `B(a) = -1 + √(4 - (a + 1)²)`: `B'(-1) = 0`, `B'(1) = -∞`.
    QuarterCircle,
    /// Piecewise-linear interpolation of decreasing, concave samples.
    Tabulated { a: Vec<T>, b: Vec<T> },
}

impl<T: Scalar> Frontier<T> {
    pub fn tabulated(a: Vec<T>, b: Vec<T>) -> Result<Self> {
        if a.len() < 3 || a.len() != b.len() {
            return Err(Error::Validation("tabulated frontier needs >= 3 matching samples".into()));
        }
        if a.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Validation("frontier abscissae must be increasing".into()));
        }
        if b.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::Assumption("frontier samples must be strictly decreasing".into()));
        }
        let slopes: Vec<T> = (1..a.len()).map(|k| (b[k] - b[k - 1]) / (a[k] - a[k - 1])).collect();
        if slopes.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::Assumption("frontier samples must be strictly concave".into()));
        }
        Ok(Frontier::Tabulated { a, b })
    }

    pub fn value(&self, x: T) -> T {
        match self {
            Frontier::QuarterCircle => {
                let s = x + T::one();
                -T::one() + (T::lit(4.0) - s * s).max(T::zero()).sqrt()
            }
            Frontier::Tabulated { a, b } => {
                let k = segment(a, x);
                let w = (x - a[k]) / (a[k + 1] - a[k]);
                b[k] + w * (b[k + 1] - b[k])
            }
        }
    }

    pub fn derivative(&self, x: T) -> T {
        match self {
            Frontier::QuarterCircle => {
                let s = x + T::one();
                let r = T::lit(4.0) - s * s;
                if r <= T::zero() {
                    T::neg_infinity()
                } else {
                    -s / r.sqrt()
                }
            }
            Frontier::Tabulated { a, b } => {
                let k = segment(a, x);
                (b[k + 1] - b[k]) / (a[k + 1] - a[k])
            }
        }
    }

    /// Strictly decreasing and strictly concave on `grid`.
    pub fn audit(&self, grid: &[T]) -> Result<()> {
        let vals: Vec<T> = grid.iter().map(|&x| self.value(x)).collect();
        if let Some(k) = (1..vals.len()).find(|&k| vals[k] >= vals[k - 1]) {
            return Err(Error::Assumption(format!("frontier not decreasing at {}", grid[k])));
        }
        if let Frontier::QuarterCircle = self {
            for k in 1..grid.len().saturating_sub(1) {
                let left = (vals[k] - vals[k - 1]) / (grid[k] - grid[k - 1]);
                let right = (vals[k + 1] - vals[k]) / (grid[k + 1] - grid[k]);
                if right >= left {
                    return Err(Error::Assumption(format!("frontier not concave at {}", grid[k])));
                }
            }
        }
        Ok(())
    }
}

fn segment<T: Scalar>(a: &[T], x: T) -> usize {
    let k = a.partition_point(|v| *v <= x);
    k.saturating_sub(1).min(a.len() - 2)
}

/// Two-issue voter utility.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum TwoIssueUtility<T> {
    /// `((1 - t)/2) φ(a) + ((1 + t)/2) φ(b)` with `φ(x) = (1 - e^{-c x}) / c`;
    /// type `t` is the weight on issue `b`.
    WeightedExponential { curvature: T },
}

impl<T: Scalar> TwoIssueUtility<T> {
    pub fn weighted_exponential(curvature: T) -> Result<Self> {
        if !(curvature > T::zero()) {
            return Err(Error::Validation("curvature must be positive".into()));
        }
        Ok(TwoIssueUtility::WeightedExponential { curvature })
    }

    fn weights(t: T) -> (T, T) {
        ((T::one() - t) * T::half(), (T::one() + t) * T::half())
    }

    pub fn value(&self, a: T, b: T, t: T) -> T {
        let TwoIssueUtility::WeightedExponential { curvature: c } = *self;
        let phi = |x: T| -(-(c * x)).exp_m1() / c;
        let (wa, wb) = Self::weights(t);
        wa * phi(a) + wb * phi(b)
    }

    /// `(u_a, u_b)`.
    pub fn gradient(&self, a: T, b: T, t: T) -> (T, T) {
        let TwoIssueUtility::WeightedExponential { curvature: c } = *self;
        let (wa, wb) = Self::weights(t);
        (wa * (-(c * a)).exp(), wb * (-(c * b)).exp())
    }

    /// `(u_at, u_bt)`.
    pub fn cross_partials(&self, a: T, b: T, _t: T) -> (T, T) {
        let TwoIssueUtility::WeightedExponential { curvature: c } = *self;
        (-T::half() * (-(c * a)).exp(), T::half() * (-(c * b)).exp())
    }
}

/// Augmented single-issue utility `û(a, t) = u(a, B(a), t)`.
pub fn augmented_utility<T: Scalar>(u2: &TwoIssueUtility<T>, frontier: &Frontier<T>, a: T, t: T) -> T {
    u2.value(a, frontier.value(a), t)
}

/// Tangency point `a°(t)`: golden-section maximization of `û(·, t)` on
/// `[-1, 1]` to `1e-10`.
pub fn tangency_point<T: Scalar>(u2: &TwoIssueUtility<T>, frontier: &Frontier<T>, t: T) -> T {
    let f = |a: T| augmented_utility(u2, frontier, a, t);
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) * T::half();
    let (mut lo, mut hi) = (-T::one(), T::one());
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    let tol = T::lit(1e-10);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    (lo + hi) * T::half()
}

/// Finite-difference audit of the augmented utility's shape.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AugmentedAudit<T> {
    /// `(t, a°(t))` per audited type.
    pub tangency: Vec<(T, T)>,
    pub tangency_decreasing: bool,
    /// Increasing below `a°(t)`, decreasing above, for every type.
    pub single_peaked: bool,
    /// Negative second differences everywhere.
    pub concave: bool,
    /// Strict increasing differences, only evaluated when the sign
    /// conditions `u_at >= 0`, `u_bt <= 0` (one strict) hold on the grid.
    pub increasing_differences: Option<bool>,
    /// First failure description, if any.
    pub first_failure: Option<String>,
}

impl<T> AugmentedAudit<T> {
    pub fn passed(&self) -> bool {
        self.tangency_decreasing && self.single_peaked && self.concave && self.increasing_differences != Some(false)
    }
}

/// Result of reducing a two-issue economy to a single augmented issue.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiIssueReduction<T> {
    pub table: UtilityTable<T>,
    pub audit: AugmentedAudit<T>,
}

/// `-u_a/u_b` must be strictly increasing in `t` at every sampled frontier point.
pub fn check_single_crossing<T: Scalar>(
    u2: &TwoIssueUtility<T>,
    frontier: &Frontier<T>,
    grid: &[T],
    types: &[T],
) -> Result<()> {
    for &a in grid {
        let b = frontier.value(a);
        let mut prev: Option<(T, T)> = None;
        for &t in types {
            let (ua, ub) = u2.gradient(a, b, t);
            if !(ua > T::zero() && ub > T::zero()) {
                return Err(Error::Assumption(format!(
                    "two-issue utility not strictly increasing at a = {a}, t = {t}"
                )));
            }
            let mrs = -ua / ub;
            if let Some((pt, pm)) = prev {
                if !(mrs > pm) {
                    return Err(Error::Assumption(format!(
                        "single crossing fails at a = {a} between t = {pt} and t = {t}"
                    )));
                }
            }
            prev = Some((t, mrs));
        }
    }
    Ok(())
}

/// Evenly spaced interior grid of `n` cell midpoints on `[-1, 1]`.
pub fn issue_grid<T: Scalar>(n: usize) -> Vec<T> {
    let nn = T::from_usize(n).unwrap();
    (0..n)
        .map(|k| -T::one() + T::two() * (T::from_usize(k).unwrap() + T::half()) / nn)
        .collect()
}

/// Tabulates `û` on `grid × types` and audits its shape.
pub fn multi_issue_reduce<T: Scalar>(
    u2: &TwoIssueUtility<T>,
    frontier: &Frontier<T>,
    grid: &[T],
    types: &[T],
) -> Result<MultiIssueReduction<T>> {
    if grid.len() < 3 {
        return Err(Error::Validation("multi-issue grid needs at least three points".into()));
    }
    let mut types = types.to_vec();
    types.sort_by(|a, b| a.partial_cmp(b).unwrap());
    types.dedup();
    if types.iter().any(|t| !(t.abs() < T::one())) {
        return Err(Error::Validation("two-issue types must lie in (-1, 1)".into()));
    }
    frontier.audit(grid)?;
    check_single_crossing(u2, frontier, grid, &types)?;

    let table = UtilityTable::tabulate(grid.to_vec(), types.clone(), |a, t| {
        augmented_utility(u2, frontier, a, t)
    })?;

    let mut failure: Option<String> = None;
    let mut note = |msg: String| {
        if failure.is_none() {
            failure = Some(msg);
        }
    };
    let tangency: Vec<(T, T)> = types.iter().map(|&t| (t, tangency_point(u2, frontier, t))).collect();
    let tangency_decreasing = tangency.windows(2).all(|w| w[1].1 < w[0].1);
    if !tangency_decreasing {
        note("tangency point not strictly decreasing in t".into());
    }

    let vals = table.values();
    let mut single_peaked = true;
    let mut concave = true;
    for (k, &(t, peak)) in tangency.iter().enumerate() {
        for i in 1..grid.len() {
            let (a0, a1) = (grid[i - 1], grid[i]);
            let (u0, u1) = (vals[i - 1][k], vals[i][k]);
            if (a1 <= peak && !(u1 > u0)) || (a0 >= peak && !(u1 < u0)) {
                single_peaked = false;
                note(format!("augmented utility not single-peaked at a = {a1}, t = {t}"));
            }
        }
        for i in 1..grid.len() - 1 {
            let left = (vals[i][k] - vals[i - 1][k]) / (grid[i] - grid[i - 1]);
            let right = (vals[i + 1][k] - vals[i][k]) / (grid[i + 1] - grid[i]);
            if !(right < left) {
                concave = false;
                note(format!("augmented utility not concave at a = {}, t = {t}", grid[i]));
            }
        }
    }

    let precondition = grid.iter().all(|&a| {
        let b = frontier.value(a);
        types.iter().all(|&t| {
            let (uat, ubt) = u2.cross_partials(a, b, t);
            uat >= T::zero() && ubt <= T::zero() && (uat > T::zero() || ubt < T::zero())
        })
    });
    let increasing_differences = precondition.then(|| {
        let mut ok = true;
        for i in 1..grid.len() {
            for k in 1..types.len() {
                let hi = vals[i][k] - vals[i - 1][k];
                let lo = vals[i][k - 1] - vals[i - 1][k - 1];
                ok &= hi > lo;
            }
        }
        ok
    });
    if increasing_differences == Some(false) {
        note("augmented utility lacks increasing differences".into());
    }

    Ok(MultiIssueReduction {
        table,
        audit: AugmentedAudit {
            tangency,
            tangency_decreasing,
            single_peaked,
            concave,
            increasing_differences,
            first_failure: failure,
        },
    })
}
