//! Command-line runner: scenario checks, solver runs, sweeps and
//! reproduction of reference results, all written as CSV.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod manifest;
pub mod output;
pub mod reproduce;

use std::path::Path;

use args::{Cli, Command, Common, SweepArgs};
use commands::Loaded;
use error::{CliError, Result};
use manifest::{RunManifest, Sweeps, Values};
use output::{Provenance, Sink};

fn scenario_arg(common: &Common) -> Result<&Path> {
    common
        .scenario
        .as_deref()
        .ok_or_else(|| CliError::Validation("--scenario is required".into()))
}

fn prov(command: &str, sha: &str, seed: u64) -> Provenance {
    Provenance { command: command.to_string(), scenario_sha256: sha.to_string(), seed }
}

fn manifest_from_flags(common: &Common, args: &SweepArgs) -> Result<RunManifest> {
    let parse = |v: &Option<String>| v.as_deref().map(Values::parse).transpose();
    let m = RunManifest {
        scenario: scenario_arg(common)?.to_path_buf(),
        command: "sweep".into(),
        sweeps: Sweeps {
            mu: parse(&args.mu)?,
            xi: parse(&args.xi)?,
            eta: parse(&args.eta)?,
            cost: parse(&args.cost)?,
            grid: None,
        },
        out: common.out.clone(),
        seed: common.seed,
        pair: args.pair.as_ref().map(|p| (p[0], p[1])),
    };
    m.validate()?;
    Ok(m)
}

fn sweep(common: &Common, args: &SweepArgs) -> Result<()> {
    let m = match &args.manifest {
        Some(path) => RunManifest::load(path)?,
        None => manifest_from_flags(common, args)?,
    };
    let Loaded { scenario, sha256 } = commands::load_scenario(&m.scenario)?;
    let table = commands::sweep(&scenario, &m)?;
    let sink = Sink::new(m.out.as_deref().or(common.out.as_deref()))?;
    sink.write("sweep", &prov("sweep", &sha256, m.seed), &table)
}

pub fn run(cli: &Cli) -> Result<()> {
    let common = &cli.common;
    if let Some(n) = common.threads {
        // A second call in the same process keeps the first pool.
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::debug!("thread pool already set: {e}");
        }
    }
    if !(common.tolerance >= 0.0) {
        return Err(CliError::Validation("--tolerance must be non-negative".into()));
    }
    match &cli.command {
        Command::Sweep(args) => return sweep(common, args),
        Command::Reproduce { target } => {
            let sink = Sink::new(common.out.as_deref())?;
            let r = reproduce::reproduce(*target, common.tolerance)?;
            let command = format!("reproduce {}", target.name());
            sink.write(target.name(), &prov(&command, &r.scenario_sha256, common.seed), &r.table)?;
            if !r.failures.is_empty() {
                return Err(CliError::Mismatch(r.failures.join("; ")));
            }
            return Ok(());
        }
        _ => {}
    }
    let sink = Sink::new(common.out.as_deref())?;
    let Loaded { scenario: s, sha256 } = commands::load_scenario(scenario_arg(common)?)?;
    let (name, table) = match &cli.command {
        Command::Validate => ("validate", commands::validate(&s)?),
        Command::SolveAttention { policies, t } => ("solve-attention", commands::solve(&s, policies, *t)?),
        Command::Enumerate => ("enumerate", commands::enumerate(&s)?),
        Command::AttentionSet { t } => ("attention-set", commands::attention_set_table(&s, *t)?),
        Command::Garble { kernel, shift, t } => {
            let k = match (kernel, shift) {
                (Some(path), _) => commands::load_kernel(path)?,
                (None, Some(l)) => inattentive::MarkovKernel::slant_shift(*l),
                (None, None) => {
                    let f = s.news.as_ref().ok_or_else(|| {
                        CliError::Validation("garble needs a scenario with a news section".into())
                    })?;
                    commands::random_kernel(f.k(), common.seed)
                }
            };
            ("garble", commands::garble(&s, &k, *t)?)
        }
        Command::Sweep(_) | Command::Reproduce { .. } => unreachable!(),
    };
    sink.write(name, &prov(name, &sha256, common.seed), &table)
}
