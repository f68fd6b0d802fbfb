//! Run manifests: which scenario, which parameters to sweep, where to write.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// A swept parameter: an explicit list or an evenly spaced span.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Values {
    List(Vec<f64>),
    Span {
        from: f64,
        to: f64,
        steps: usize,
        #[serde(default)]
        log: bool,
    },
}

impl Values {
    /// Parses `0.1,0.5,1`, `from:to:steps` or `from:to:steps:log`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |why: &str| CliError::Validation(format!("bad value list {text:?}: {why}"));
        let number = |s: &str| s.trim().parse::<f64>().map_err(|e| bad(&e.to_string()));
        if text.contains(':') {
            let parts: Vec<&str> = text.split(':').collect();
            let log = match parts.len() {
                3 => false,
                4 if parts[3] == "log" => true,
                _ => return Err(bad("expected from:to:steps[:log]")),
            };
            let steps = parts[2].trim().parse::<usize>().map_err(|e| bad(&e.to_string()))?;
            Ok(Values::Span { from: number(parts[0])?, to: number(parts[1])?, steps, log })
        } else {
            Ok(Values::List(text.split(',').map(number).collect::<Result<_>>()?))
        }
    }

    pub fn expand(&self) -> Result<Vec<f64>> {
        let out = match *self {
            Values::List(ref v) => v.clone(),
            Values::Span { from, to, steps, log } => {
                if steps == 0 {
                    return Err(CliError::Validation("span needs at least one step".into()));
                }
                if log && !(from > 0.0 && to > 0.0) {
                    return Err(CliError::Validation("log span needs positive endpoints".into()));
                }
                if steps == 1 {
                    vec![from]
                } else {
                    let last = (steps - 1) as f64;
                    (0..steps)
                        .map(|k| {
                            if k + 1 == steps {
                                return to;
                            }
                            let s = k as f64 / last;
                            if log {
                                (from.ln() + s * (to.ln() - from.ln())).exp()
                            } else {
                                from + s * (to - from)
                            }
                        })
                        .collect()
                }
            }
        };
        if out.is_empty() {
            return Err(CliError::Validation("sweep list is empty".into()));
        }
        if let Some(x) = out.iter().find(|x| !x.is_finite()) {
            return Err(CliError::Validation(format!("sweep value {x} is not finite")));
        }
        Ok(out)
    }
}

/// β's grid replaced by `points` evenly spaced values on `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSweep {
    pub lo: f64,
    pub hi: f64,
    pub points: Vec<usize>,
}

impl GridSweep {
    pub fn grid(&self, n: usize) -> Result<Vec<f64>> {
        if n == 0 || !(self.lo > 0.0 && self.hi <= 1.0 && self.lo <= self.hi) {
            return Err(CliError::Validation(format!(
                "grid sweep needs 0 < lo <= hi <= 1 and points > 0, got [{}, {}] with {n}",
                self.lo, self.hi
            )));
        }
        if n == 1 {
            return Ok(vec![self.lo]);
        }
        Ok((0..n).map(|k| self.lo + (self.hi - self.lo) * k as f64 / (n - 1) as f64).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweeps {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Values>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Values>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Values>,
    /// Dissemination cost.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cost: Option<Values>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSweep>,
}

impl Sweeps {
    pub fn is_empty(&self) -> bool {
        self.mu.is_none()
            && self.xi.is_none()
            && self.eta.is_none()
            && self.cost.is_none()
            && self.grid.is_none()
    }
}

fn default_command() -> String {
    "sweep".into()
}

/// Everything needed to rerun an experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    pub scenario: PathBuf,
    #[serde(default = "default_command")]
    pub command: String,
    #[serde(default)]
    pub sweeps: Sweeps,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
    /// Proposal pair used for the commitment boundary; defaults to the grid's ends.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<(f64, f64)>,
}

impl RunManifest {
    /// Reads a manifest; relative paths are taken from the manifest's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut m: RunManifest = serde_json::from_str(&text).map_err(|e| {
            CliError::Validation(format!(
                "{}:{}:{}: {e}",
                path.display(),
                e.line(),
                e.column()
            ))
        })?;
        if let Some(dir) = path.parent() {
            if m.scenario.is_relative() {
                m.scenario = dir.join(&m.scenario);
            }
            if let Some(out) = m.out.as_mut().filter(|o| o.is_relative()) {
                *out = dir.join(&*out);
            }
        }
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.command != "sweep" {
            return Err(CliError::Validation(format!(
                "manifest command {:?} is not supported (only \"sweep\")",
                self.command
            )));
        }
        if self.sweeps.is_empty() {
            return Err(CliError::Validation("manifest sweeps nothing".into()));
        }
        for v in [&self.sweeps.mu, &self.sweeps.xi, &self.sweeps.eta, &self.sweeps.cost]
            .into_iter()
            .flatten()
        {
            v.expand()?;
        }
        if let Some(g) = &self.sweeps.grid {
            if g.points.is_empty() {
                return Err(CliError::Validation("grid sweep lists no sizes".into()));
            }
            for &n in &g.points {
                g.grid(n)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_spans() {
        assert_eq!(Values::parse("0.1,1,10").unwrap().expand().unwrap(), vec![0.1, 1.0, 10.0]);
        let lin = Values::parse("0:1:5").unwrap().expand().unwrap();
        assert_eq!(lin, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let log = Values::parse("0.1:10:3:log").unwrap().expand().unwrap();
        assert!((log[1] - 1.0).abs() < 1e-12);
        assert!(Values::parse("1:2").is_err());
        assert!(Values::parse("a,b").is_err());
        assert!(Values::parse("-1:1:3:log").unwrap().expand().is_err());
    }

    #[test]
    fn manifest_round_trip() {
        let m: RunManifest = serde_json::from_str(
            r#"{"scenario": "s.json", "sweeps": {"mu": [0.5, 1], "eta": {"from": 0, "to": 1, "steps": 3}}}"#,
        )
        .unwrap();
        assert_eq!(m.command, "sweep");
        m.validate().unwrap();
        let back: RunManifest = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
        let empty: RunManifest = serde_json::from_str(r#"{"scenario": "s.json"}"#).unwrap();
        assert!(empty.validate().is_err());
    }
}
