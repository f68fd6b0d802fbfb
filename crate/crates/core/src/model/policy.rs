use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which half of the policy line a grid lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Candidate α: policies in `[-1, 0)`.
    Alpha,
    /// Candidate β: policies in `(0, 1]`.
    Beta,
}

/// Finite, strictly increasing policy grid of one candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct PolicyAxis<T> {
    side: Side,
    values: Vec<T>,
    mirrored: bool,
}

impl<T: Scalar> PolicyAxis<T> {
    pub fn new(side: Side, values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Validation(format!("{side:?} policy grid is empty")));
        }
        for w in values.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::Validation(format!(
                    "{side:?} policy grid not strictly increasing at {} >= {}",
                    w[0], w[1]
                )));
            }
        }
        for &v in &values {
            let ok = match side {
                Side::Alpha => v >= -T::one() && v < T::zero(),
                Side::Beta => v > T::zero() && v <= T::one(),
            };
            if !ok {
                return Err(Error::Validation(format!(
                    "policy {v} outside the {side:?} half-interval"
                )));
            }
        }
        Ok(PolicyAxis {
            side,
            values,
            mirrored: false,
        })
    }

    /// `n` evenly spaced cell midpoints of `(0, 1]`: `(k - 1/2) / n`.
    pub fn beta_midpoints(n: usize) -> Result<Self> {
        let nf = T::from_usize(n).expect("grid size");
        let values = (0..n)
            .map(|k| (T::from_usize(k).unwrap() + T::half()) / nf)
            .collect();
        Self::new(Side::Beta, values)
    }

    /// The exact element-by-element negation, on the opposite side.
    pub fn mirror(&self) -> Self {
        let side = match self.side {
            Side::Alpha => Side::Beta,
            Side::Beta => Side::Alpha,
        };
        PolicyAxis {
            side,
            values: self.values.iter().rev().map(|v| -*v).collect(),
            mirrored: true,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    /// Index of `value` on the grid (exact match).
    pub fn index_of(&self, value: T) -> Option<usize> {
        self.values.iter().position(|v| *v == value)
    }

    /// `true` when `other` is the exact negation of this grid.
    pub fn is_mirror_of(&self, other: &Self) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(other.values.iter().rev())
                .all(|(a, b)| *a == -*b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_is_exact_negation() {
        let beta = PolicyAxis::new(Side::Beta, vec![0.01, 0.2, 0.4]).unwrap();
        let alpha = beta.mirror();
        assert_eq!(alpha.values(), &[-0.4, -0.2, -0.01]);
        assert_eq!(alpha.side(), Side::Alpha);
        assert!(alpha.is_mirror_of(&beta));
    }

    #[test]
    fn rejects_out_of_range_and_unsorted() {
        assert!(PolicyAxis::new(Side::Beta, vec![0.0, 0.5]).is_err());
        assert!(PolicyAxis::new(Side::Beta, vec![0.5, 0.2]).is_err());
        assert!(PolicyAxis::new(Side::Alpha, vec![-0.5, 0.1]).is_err());
        assert!(PolicyAxis::<f64>::new(Side::Beta, vec![]).is_err());
    }

    #[test]
    fn midpoints_stay_inside_the_half_interval() {
        let g = PolicyAxis::<f64>::beta_midpoints(50).unwrap();
        assert_eq!(g.len(), 50);
        assert!((g.values()[0] - 0.01).abs() < 1e-15);
        assert!((g.values()[49] - 0.99).abs() < 1e-15);
    }
}
