use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;

use inattentive::election::{
    attention_membership_at, attention_set_pairs, enumerate_equilibria, truncation_statistic,
    StrategyAssignment,
};
use inattentive::extensions::{commitment_boundary, passes_dissemination};
use inattentive::model::{parse_scenario, PolicyAxis, Side};
use inattentive::news::{
    attention_set_noisy, enumerate_equilibria_noisy, noisy_membership, solve_attention_noisy,
    NewsFamily,
};
use inattentive::ri::solve_attention;
use inattentive::{EquilibriumRecord, MarkovKernel, MatrixTriple, NewsTechnology, Scenario};

use crate::error::{CliError, Result};
use crate::manifest::{GridSweep, RunManifest};
use crate::output::{num, opt, sha256_hex, Table};

/// A parsed scenario and the digest of its file.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub scenario: Scenario,
    pub sha256: String,
}

pub fn load_scenario(path: &Path) -> Result<Loaded> {
    let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    let scenario = parse_scenario::<f64>(text).map_err(|e| match e {
        inattentive::Error::Parse { line, column, message } => {
            CliError::Validation(format!("{}:{line}:{column}: {message}", path.display()))
        }
        other => match CliError::from(other) {
            CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
            c => c,
        },
    })?;
    Ok(Loaded { scenario, sha256: sha256_hex(&bytes) })
}

/// The left partisan group nearest the median.
pub fn partisan_type(s: &Scenario) -> Result<f64> {
    s.electorate
        .types()
        .into_iter()
        .filter(|&t| t < 0.0)
        .fold(None, |m: Option<f64>, t| Some(m.map_or(t, |m| m.max(t))))
        .ok_or_else(|| CliError::Validation("electorate has no negative type; pass --t".into()))
}

pub fn equilibria(s: &Scenario) -> Result<Vec<EquilibriumRecord>> {
    Ok(match s.news {
        Some(_) => enumerate_equilibria_noisy(s)?,
        None => enumerate_equilibria(s)?,
    })
}

fn membership(s: &Scenario, triple: &MatrixTriple, t: f64) -> Result<bool> {
    Ok(match &s.news {
        Some(f) => noisy_membership(f, s, triple, t, s.mu)?,
        None => attention_membership_at(s, triple, t, s.mu)?,
    })
}

pub fn attention_set(s: &Scenario, t: f64) -> Result<Vec<(f64, f64)>> {
    Ok(match &s.news {
        Some(f) => attention_set_noisy(f, s, s.beta.values(), t, s.mu)?,
        None => attention_set_pairs(s, s.beta.values(), t, s.mu)?,
    })
}

fn flag(b: bool) -> String {
    b.to_string()
}

pub fn validate(s: &Scenario) -> Result<Table> {
    s.require_symmetric()?;
    let mut t = Table::new(&["field", "value"]);
    let news = match &s.news {
        None => "none".to_string(),
        Some(f) => match f.family() {
            NewsFamily::Slant { xi } => format!("slant xi={xi}"),
            NewsFamily::Matrix => format!("matrix K={}", f.k()),
            NewsFamily::Revealing => "revealing".to_string(),
        },
    };
    let kappa = s.kappa().map(num).unwrap_or_else(|_| "n/a".into());
    for (k, v) in [
        ("name", s.name.clone()),
        ("policies", s.beta.len().to_string()),
        ("candidate_types", s.beta_types.len().to_string()),
        ("voter_groups", s.electorate.groups().len().to_string()),
        ("mu", num(s.mu)),
        ("eta", num(s.eta)),
        ("news", news),
        ("dissemination_cost", opt(s.dissemination_cost)),
        ("kappa", kappa),
    ] {
        t.push(vec![k.to_string(), v]);
    }
    Ok(t)
}

pub fn solve(s: &Scenario, policies: &[f64], only: Option<f64>) -> Result<Table> {
    let assignment = StrategyAssignment::from_policies(s, policies)?;
    let triple = assignment.triple(s)?;
    let mut out = Table::new(&[
        "t", "weight", "regime", "mbar", "info", "observed", "alpha", "beta", "prob", "value", "m",
    ]);
    let groups: Vec<_> = s.electorate.groups().iter().filter(|g| only.map_or(true, |t| g.t == t)).collect();
    if groups.is_empty() {
        return Err(CliError::Validation(format!("no voter group has type {}", opt(only))));
    }
    for g in groups {
        let (states, belief, sol) = match &s.news {
            Some(f) => {
                let (nb, sol) = solve_attention_noisy(f, s, &triple, g.t, s.mu)?;
                let sig = f.signals();
                let states: Vec<(&str, f64, f64)> =
                    nb.cells.iter().map(|&(m, n)| ("signal", -sig[m], sig[n])).collect();
                (states, nb.belief, sol)
            }
            None => {
                let belief = triple.belief(s, g.t)?;
                let sol = solve_attention(&belief, s.mu)?;
                let states = triple
                    .cells()
                    .map(|(i, j)| {
                        let p = triple.profile(i, j);
                        ("policy", p.alpha, p.beta)
                    })
                    .collect();
                (states, belief, sol)
            }
        };
        for (k, (kind, a, b)) in states.into_iter().enumerate() {
            out.push(vec![
                num(g.t),
                num(g.weight),
                sol.regime.as_str().to_string(),
                num(sol.mbar),
                num(sol.info),
                kind.to_string(),
                num(a),
                num(b),
                num(belief.probs()[k]),
                num(belief.values()[k]),
                num(sol.m[k]),
            ]);
        }
    }
    Ok(out)
}

pub fn enumerate(s: &Scenario) -> Result<Table> {
    let eqs = equilibria(s)?;
    let n = s.beta_types.len();
    let mut cols: Vec<String> = vec!["index".into()];
    cols.extend((1..=n).map(|k| format!("policy_{k}")));
    cols.extend(
        ["min_gap", "total_information", "all_attentive", "rationalized_matches", "disseminated"]
            .map(String::from),
    );
    let mut out = Table { columns: cols, rows: Vec::new() };
    for (k, r) in eqs.iter().enumerate() {
        let mut row = vec![k.to_string()];
        row.extend(r.policies.iter().map(|&a| num(a)));
        row.push(num(r.min_gap));
        row.push(num(r.total_information()));
        row.push(flag(r.all_attentive()));
        row.push(flag(r.rationalized_matches));
        row.push(s.dissemination_cost.map(|c| flag(passes_dissemination(r, c))).unwrap_or_default());
        out.push(row);
    }
    log::info!("{} equilibria", eqs.len());
    Ok(out)
}

pub fn attention_set_table(s: &Scenario, t: Option<f64>) -> Result<Table> {
    let t = match t {
        Some(t) => t,
        None => partisan_type(s)?,
    };
    let mut out = Table::new(&["t", "a1", "a2"]);
    for (a1, a2) in attention_set(s, t)? {
        out.push(vec![num(t), num(a1), num(a2)]);
    }
    Ok(out)
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum KernelFile {
    Factorized(Vec<Vec<f64>>),
    Joint(Vec<Vec<f64>>),
}

pub fn load_kernel(path: &Path) -> Result<MarkovKernel> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let k: KernelFile = serde_json::from_str(&text).map_err(|e| {
        CliError::Validation(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))
    })?;
    Ok(match k {
        KernelFile::Factorized(r) => MarkovKernel::Factorized(r),
        KernelFile::Joint(r) => MarkovKernel::Joint(r),
    })
}

/// Factorized kernel with rows drawn from the seeded generator.
pub fn random_kernel(k: usize, seed: u64) -> MarkovKernel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..k)
        .map(|_| {
            let raw: Vec<f64> = (0..k).map(|_| rng.gen::<f64>() + 0.05).collect();
            let z: f64 = raw.iter().sum();
            raw.into_iter().map(|x| x / z).collect()
        })
        .collect();
    MarkovKernel::Factorized(rows)
}

pub fn garble(s: &Scenario, kernel: &MarkovKernel, t: Option<f64>) -> Result<Table> {
    let f = s
        .news
        .as_ref()
        .ok_or_else(|| CliError::Validation("garble needs a scenario with a news section".into()))?;
    let g = f.garble(kernel)?;
    let t = match t {
        Some(t) => t,
        None => partisan_type(s)?,
    };
    let grid = s.beta.values();
    let before = attention_set_noisy(f, s, grid, t, s.mu)?;
    let after = attention_set_noisy(&g, s, grid, t, s.mu)?;
    let mut out = Table::new(&["t", "a1", "a2", "original", "garbled"]);
    for (i, &a1) in grid.iter().enumerate() {
        for &a2 in &grid[i + 1..] {
            let x = before.contains(&(a1, a2));
            let y = after.contains(&(a1, a2));
            if x || y {
                out.push(vec![num(t), num(a1), num(a2), flag(x), flag(y)]);
            }
        }
    }
    if after.iter().any(|p| !before.contains(p)) {
        log::warn!("garbling enlarged the attention set");
    }
    log::info!("attention set {} -> {} pairs", before.len(), after.len());
    Ok(out)
}

/// One parameter point of a sweep; `None` keeps the scenario's value.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub mu: Option<f64>,
    pub xi: Option<f64>,
    pub eta: Option<f64>,
    pub cost: Option<f64>,
    pub grid: Option<usize>,
}

pub fn sweep_points(m: &RunManifest) -> Result<Vec<Point>> {
    let axis = |v: &Option<crate::manifest::Values>| -> Result<Vec<Option<f64>>> {
        Ok(match v {
            Some(v) => v.expand()?.into_iter().map(Some).collect(),
            None => vec![None],
        })
    };
    let grids: Vec<Option<usize>> = match &m.sweeps.grid {
        Some(g) => g.points.iter().map(|&n| Some(n)).collect(),
        None => vec![None],
    };
    let mut out = Vec::new();
    for &grid in &grids {
        for mu in axis(&m.sweeps.mu)? {
            for xi in axis(&m.sweeps.xi)? {
                for eta in axis(&m.sweeps.eta)? {
                    for cost in axis(&m.sweeps.cost)? {
                        out.push(Point { mu, xi, eta, cost, grid });
                    }
                }
            }
        }
    }
    Ok(out)
}

fn rebuild_news(f: &NewsTechnology, grid: &[f64], xi: Option<f64>) -> Result<NewsTechnology> {
    let policies = grid.to_vec();
    Ok(match (f.family(), xi) {
        (NewsFamily::Slant { .. }, Some(xi)) => {
            NewsTechnology::slant(policies, xi, [f.signals()[0], f.signals()[1]])?
        }
        (NewsFamily::Slant { xi }, None) => {
            NewsTechnology::slant(policies, *xi, [f.signals()[0], f.signals()[1]])?
        }
        (NewsFamily::Revealing, None) => NewsTechnology::revealing(policies)?,
        _ => {
            return Err(CliError::Validation(
                "only slant news can be rebuilt for a swept grid or slant".into(),
            ))
        }
    })
}

pub fn variant(base: &Scenario, p: &Point, grid: Option<&GridSweep>) -> Result<Scenario> {
    let mut s = base.clone();
    if let (Some(n), Some(g)) = (p.grid, grid) {
        let beta = PolicyAxis::new(Side::Beta, g.grid(n)?)?;
        s.alpha = beta.mirror();
        s.beta = beta;
    }
    let grid_changed = p.grid.is_some();
    match (&base.news, p.xi) {
        (Some(f), xi) if xi.is_some() || grid_changed => {
            s.news = Some(rebuild_news(f, s.beta.values(), xi)?);
        }
        (None, Some(xi)) => {
            s.news = Some(NewsTechnology::slant(s.beta.values().to_vec(), xi, [0.25, 0.75])?);
        }
        _ => {}
    }
    if let Some(mu) = p.mu {
        s = s.with_mu(mu)?;
    }
    if let Some(eta) = p.eta {
        s = s.with_eta(eta)?;
    }
    if let Some(c) = p.cost {
        s.dissemination_cost = Some(c);
    }
    s.validate()?;
    Ok(s)
}

fn point_rows(s: &Scenario, pair: Option<(f64, f64)>) -> Result<Vec<(String, String, String)>> {
    let mut rows = Vec::new();
    let mut put = |stat: &str, index: Option<usize>, value: String| {
        rows.push((stat.to_string(), index.map(|i| i.to_string()).unwrap_or_default(), value));
    };
    let eqs = equilibria(s)?;
    put("equilibria", None, eqs.len().to_string());
    for (k, r) in eqs.iter().enumerate() {
        for (i, &a) in r.policies.iter().enumerate() {
            put(&format!("policy_{}", i + 1), Some(k), num(a));
        }
        put("total_information", Some(k), num(r.total_information()));
        put("min_gap", Some(k), num(r.min_gap));
        if let Some(c) = s.dissemination_cost {
            put("disseminated", Some(k), flag(passes_dissemination(r, c)));
        }
    }
    let t = partisan_type(s)?;
    let (ea, min_diff) = if s.news.is_some() {
        let mut ea = 0;
        let mut d: Option<f64> = None;
        for r in &eqs {
            if membership(s, &r.triple, t)? {
                ea += 1;
                let x = r.triple.median_differential(s)?;
                d = Some(d.map_or(x, |d| d.min(x)));
            }
        }
        (ea, d)
    } else {
        let st = truncation_statistic(s, &eqs, t, s.mu)?;
        (st.ea.len(), st.min_differential)
    };
    put("ea_size", None, ea.to_string());
    put("min_differential", None, opt(min_diff));
    put("attention_set_size", None, attention_set(s, t)?.len().to_string());
    let types = s.beta_types.type_values();
    if types.len() == 2 {
        let grid = s.beta.values();
        let (a1, a2) = pair.unwrap_or((grid[0], grid[grid.len() - 1]));
        let b = commitment_boundary(s.eta, (a1, a2), (types[0], types[1]), s.mu, -t)?;
        put("commitment_lhs", None, num(b.lhs));
        put("commitment_hurdle", None, num(b.hurdle));
        put("commitment_attentive", None, flag(b.attentive));
        put("commitment_case", None, format!("{:?}", b.case));
    }
    Ok(rows)
}

/// Long-format table: one row per parameter point and statistic.
pub fn sweep(base: &Scenario, m: &RunManifest) -> Result<Table> {
    let points = sweep_points(m)?;
    log::info!("sweeping {} points", points.len());
    let results: Vec<Result<Vec<Vec<String>>>> = points
        .par_iter()
        .map(|p| {
            let s = variant(base, p, m.sweeps.grid.as_ref())?;
            let xi = match s.news.as_ref().map(|f| f.family()) {
                Some(NewsFamily::Slant { xi }) => num(*xi),
                _ => String::new(),
            };
            let lead = [num(s.mu), xi, num(s.eta), opt(s.dissemination_cost), s.beta.len().to_string()];
            Ok(point_rows(&s, m.pair)?
                .into_iter()
                .map(|(stat, index, value)| {
                    let mut row = lead.to_vec();
                    row.extend([stat, index, value]);
                    row
                })
                .collect())
        })
        .collect();
    let mut out = Table::new(&[
        "mu", "xi", "eta", "cost", "grid_points", "statistic", "index", "value",
    ]);
    for r in results {
        for row in r? {
            out.push(row);
        }
    }
    Ok(out)
}
