//! Electoral competition with rationally inattentive voters.
//!
//! Voters pay a mutual-information cost to learn about candidates' policies
//! ([`ri`]); candidates of privately known types choose policies from finite
//! grids ([`election`]); voters may only see policies through noisy news
//! ([`news`]); [`extensions`] adds costly dissemination, limited commitment
//! and two-issue policies.
//!
//! Everything is generic over the floating point type (see [`Scalar`]); the
//! aliases at the crate root fix it to `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod election;
pub mod error;
pub mod extensions;
pub mod model;
pub mod news;
pub mod presets;
pub mod ri;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Scenario = model::Scenario<f64>;
pub type UtilitySpec = model::UtilitySpec<f64>;
pub type Profile = model::Profile<f64>;
pub type PolicyAxis = model::PolicyAxis<f64>;
pub type CandidateSpec = model::CandidateSpec<f64>;
pub type Electorate = model::Electorate<f64>;
pub type BeliefOverProfiles = ri::BeliefOverProfiles<f64>;
pub type AttentionSolution = ri::AttentionSolution<f64>;
pub type MatrixTriple = election::MatrixTriple<f64>;
pub type EquilibriumRecord = election::EquilibriumRecord<f64>;
pub type NewsTechnology = news::NewsTechnology<f64>;
pub type MarkovKernel = news::MarkovKernel<f64>;
pub type Frontier = extensions::Frontier<f64>;
