//! JSON scenario files.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "name": "figure2",
//!   "policies": { "beta": [0.01, 0.2, 0.4] },
//!   "utility": {
//!     "voter": { "family": "absolute" },
//!     "office_rent": 8, "winner_weight": 12, "loser_weight": 1, "loser_sign": -1
//!   },
//!   "candidates": { "beta": [{ "type": 0.3, "prob": 0.5 }, { "type": 0.8, "prob": 0.5 }] },
//!   "electorate": { "groups": [{ "type": -0.001, "weight": 0.25 }, ...] },
//!   "attention": { "mu": 10 }
//! }
//! ```
//!
//! `policies.alpha` and `candidates.alpha` default to mirror images of β's.
//! Optional sections: `news`, `commitment`, `dissemination`, `issues`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extensions::multi_issue::{Frontier, TwoIssueUtility};
use crate::model::policy::{PolicyAxis, Side};
use crate::model::population::{CandidateSpec, Electorate, TypeMass, VoterGroup};
use crate::model::scenario::{IssuesSpec, Scenario};
use crate::model::utility::{LoserSign, UtilitySpec, UtilityTable, VoterFamily};
use crate::news::{NewsFamily, NewsTechnology};
use crate::scalar::Scalar;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub schema_version: u32,
    #[serde(default)]
    pub name: String,
    pub policies: PoliciesSection,
    pub utility: UtilitySection,
    pub candidates: CandidatesSection,
    pub electorate: ElectorateSection,
    pub attention: AttentionSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub news: Option<NewsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commitment: Option<CommitmentSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dissemination: Option<DisseminationSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub issues: Option<IssuesSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoliciesSection {
    pub beta: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum VoterSection {
    Absolute,
    Quadratic,
    Table {
        actions: Vec<f64>,
        types: Vec<f64>,
        values: Vec<Vec<f64>>,
    },
}

fn default_loser_sign() -> i8 {
    -1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UtilitySection {
    pub voter: VoterSection,
    #[serde(default)]
    pub office_rent: f64,
    #[serde(default)]
    pub winner_weight: f64,
    #[serde(default)]
    pub loser_weight: f64,
    #[serde(default = "default_loser_sign")]
    pub loser_sign: i8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidatesSection {
    pub beta: Vec<TypeMass<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<TypeMass<f64>>>,
    #[serde(default)]
    pub symmetric: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElectorateSection {
    pub groups: Vec<VoterGroup<f64>>,
    #[serde(default)]
    pub symmetric: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttentionSection {
    pub mu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum NewsSection {
    Slant {
        xi: f64,
        #[serde(default = "default_slant_signals")]
        signals: [f64; 2],
    },
    Matrix {
        signals: Vec<f64>,
        rows: Vec<Vec<f64>>,
    },
    Revealing,
}

fn default_slant_signals() -> [f64; 2] {
    [0.25, 0.75]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommitmentSection {
    pub eta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DisseminationSection {
    pub cost: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum FrontierSection {
    QuarterCircle,
    Tabulated { a: Vec<f64>, b: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum Utility2Section {
    WeightedExponential { curvature: f64 },
}

fn default_grid_points() -> usize {
    200
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IssuesSection {
    pub frontier: FrontierSection,
    pub utility2: Utility2Section,
    #[serde(default = "default_grid_points")]
    pub grid_points: usize,
}

fn lit<T: Scalar>(x: f64) -> Result<T> {
    T::from_f64(x).ok_or_else(|| Error::Validation(format!("value {x} not representable")))
}

fn lits<T: Scalar>(xs: &[f64]) -> Result<Vec<T>> {
    xs.iter().map(|&x| lit(x)).collect()
}

fn masses<T: Scalar>(xs: &[TypeMass<f64>]) -> Result<Vec<TypeMass<T>>> {
    xs.iter()
        .map(|m| Ok(TypeMass { t: lit(m.t)?, prob: lit(m.prob)? }))
        .collect()
}

impl ScenarioFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ScenarioFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(Error::Validation(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                file.schema_version
            )));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario file serializes")
    }

    pub fn build<T: Scalar>(&self) -> Result<Scenario<T>> {
        let beta = PolicyAxis::new(Side::Beta, lits(&self.policies.beta)?)?;
        let alpha = match &self.policies.alpha {
            Some(a) => PolicyAxis::new(Side::Alpha, lits(a)?)?,
            None => beta.mirror(),
        };

        let u = &self.utility;
        let voter = match &u.voter {
            VoterSection::Absolute => VoterFamily::AbsoluteLoss,
            VoterSection::Quadratic => VoterFamily::Quadratic,
            VoterSection::Table { actions, types, values } => VoterFamily::Table(UtilityTable::new(
                lits(actions)?,
                lits(types)?,
                values.iter().map(|r| lits(r)).collect::<Result<_>>()?,
            )?),
        };
        let mut utility = UtilitySpec::new(voter, lit(u.office_rent)?, lit(u.winner_weight)?, lit(u.loser_weight)?)
            .with_loser_sign(LoserSign::from_i8(u.loser_sign)?);
        utility.kappa = u.kappa.map(lit).transpose()?;

        let beta_types = CandidateSpec::new(masses(&self.candidates.beta)?)?;
        let alpha_types = match &self.candidates.alpha {
            Some(a) => CandidateSpec::new(masses(a)?)?,
            None => beta_types.mirror(),
        };
        if self.candidates.symmetric == Some(true) && !alpha_types.is_mirror_of(&beta_types) {
            return Err(Error::Validation(
                "candidates.symmetric is set but the type distributions are not mirrored".into(),
            ));
        }

        let electorate = Electorate::new(
            self.electorate
                .groups
                .iter()
                .map(|g| Ok(VoterGroup { t: lit(g.t)?, weight: lit(g.weight)? }))
                .collect::<Result<_>>()?,
        )?;
        if self.electorate.symmetric == Some(true) && !electorate.is_symmetric() {
            return Err(Error::Validation(
                "electorate.symmetric is set but the groups are not symmetric".into(),
            ));
        }

        let news = match &self.news {
            None => None,
            Some(NewsSection::Slant { xi, signals }) => Some(NewsTechnology::slant(
                beta.values().to_vec(),
                lit(*xi)?,
                [lit(signals[0])?, lit(signals[1])?],
            )?),
            Some(NewsSection::Matrix { signals, rows }) => Some(NewsTechnology::from_rows(
                beta.values().to_vec(),
                lits(signals)?,
                rows.iter().map(|r| lits(r)).collect::<Result<_>>()?,
            )?),
            Some(NewsSection::Revealing) => Some(NewsTechnology::revealing(beta.values().to_vec())?),
        };

        let issues = match &self.issues {
            None => None,
            Some(s) => Some(IssuesSpec {
                frontier: match &s.frontier {
                    FrontierSection::QuarterCircle => Frontier::QuarterCircle,
                    FrontierSection::Tabulated { a, b } => Frontier::tabulated(lits(a)?, lits(b)?)?,
                },
                utility2: match &s.utility2 {
                    Utility2Section::WeightedExponential { curvature } => {
                        TwoIssueUtility::weighted_exponential(lit(*curvature)?)?
                    }
                },
                grid_points: s.grid_points,
            }),
        };

        let scenario = Scenario {
            name: self.name.clone(),
            alpha,
            beta,
            utility,
            alpha_types,
            beta_types,
            electorate,
            mu: lit(self.attention.mu)?,
            news,
            eta: match &self.commitment {
                Some(c) => lit(c.eta)?,
                None => T::one(),
            },
            dissemination_cost: self.dissemination.as_ref().map(|d| lit(d.cost)).transpose()?,
            issues,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn from_scenario<T: Scalar>(s: &Scenario<T>) -> Result<Self> {
        let f = |x: T| x.as_f64();
        let fs = |xs: &[T]| xs.iter().map(|&x| x.as_f64()).collect::<Vec<_>>();
        let voter = match &s.utility.voter {
            VoterFamily::AbsoluteLoss => VoterSection::Absolute,
            VoterFamily::Quadratic => VoterSection::Quadratic,
            VoterFamily::Table(t) => VoterSection::Table {
                actions: fs(t.actions()),
                types: fs(t.types()),
                values: t.values().iter().map(|r| fs(r)).collect(),
            },
        };
        let to_masses = |c: &CandidateSpec<T>| {
            c.types()
                .iter()
                .map(|m| TypeMass { t: f(m.t), prob: f(m.prob) })
                .collect::<Vec<_>>()
        };
        let mirrored = s.alpha_types.is_mirror_of(&s.beta_types);
        let news = match &s.news {
            None => None,
            Some(n) if n.joint_kernel().is_some() => {
                return Err(Error::Validation(
                    "jointly garbled technologies have no scenario-file form".into(),
                ))
            }
            Some(n) => Some(match n.family() {
                NewsFamily::Slant { xi } => NewsSection::Slant {
                    xi: f(*xi),
                    signals: [f(n.signals()[0]), f(n.signals()[1])],
                },
                NewsFamily::Revealing => NewsSection::Revealing,
                NewsFamily::Matrix => NewsSection::Matrix {
                    signals: fs(n.signals()),
                    rows: n.rows().iter().map(|r| fs(r)).collect(),
                },
            }),
        };
        Ok(ScenarioFile {
            schema_version: SCHEMA_VERSION,
            name: s.name.clone(),
            policies: PoliciesSection {
                beta: fs(s.beta.values()),
                alpha: (!s.alpha.is_mirror_of(&s.beta)).then(|| fs(s.alpha.values())),
            },
            utility: UtilitySection {
                voter,
                office_rent: f(s.utility.office_rent),
                winner_weight: f(s.utility.winner_weight),
                loser_weight: f(s.utility.loser_weight),
                loser_sign: s.utility.loser_sign.as_i8(),
                kappa: s.utility.kappa.map(f),
            },
            candidates: CandidatesSection {
                beta: to_masses(&s.beta_types),
                alpha: (!mirrored).then(|| to_masses(&s.alpha_types)),
                symmetric: Some(mirrored),
            },
            electorate: ElectorateSection {
                groups: s
                    .electorate
                    .groups()
                    .iter()
                    .map(|g| VoterGroup { t: f(g.t), weight: f(g.weight) })
                    .collect(),
                symmetric: Some(s.electorate.is_symmetric()),
            },
            attention: AttentionSection { mu: f(s.mu) },
            news,
            commitment: (!s.full_commitment()).then(|| CommitmentSection { eta: f(s.eta) }),
            dissemination: s.dissemination_cost.map(|c| DisseminationSection { cost: f(c) }),
            issues: s.issues.as_ref().map(|i| IssuesSection {
                frontier: match &i.frontier {
                    Frontier::QuarterCircle => FrontierSection::QuarterCircle,
                    Frontier::Tabulated { a, b } => FrontierSection::Tabulated { a: fs(a), b: fs(b) },
                },
                utility2: match &i.utility2 {
                    TwoIssueUtility::WeightedExponential { curvature } => {
                        Utility2Section::WeightedExponential { curvature: f(*curvature) }
                    }
                },
                grid_points: i.grid_points,
            }),
        })
    }
}

/// Parses and validates a scenario document.
pub fn parse_scenario<T: Scalar>(text: &str) -> Result<Scenario<T>> {
    ScenarioFile::from_json(text)?.build()
}

/// Serializes a scenario back to its JSON document.
pub fn scenario_to_json<T: Scalar>(scenario: &Scenario<T>) -> Result<String> {
    Ok(ScenarioFile::from_scenario(scenario)?.to_json())
}
