//! Game primitives: policy grids, utility families, candidate and voter
//! populations, and the scenario that bundles them.

mod file;
mod policy;
mod population;
mod scenario;
mod utility;

pub use file::{parse_scenario, scenario_to_json, ScenarioFile, SCHEMA_VERSION};
pub use policy::{PolicyAxis, Side};
pub use population::{CandidateSpec, Electorate, TypeMass, VoterGroup};
pub use scenario::{IssuesSpec, Scenario};
pub use utility::{
    LoserSign, Profile, UtilityAudit, UtilitySpec, UtilityTable, VoterFamily,
};
