//! Check outcomes and run reports, with a flat `key=value` serialization.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::io::{format_kv, parse_kv};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Measured and reported, not asserted.
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "PASS" => Ok(Status::Pass),
            "FAIL" => Ok(Status::Fail),
            "INFO" => Ok(Status::Info),
            _ => Err(Error::InvalidArgument(format!("unknown status {s:?}"))),
        }
    }
}

/// One check with its verdict and measured values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub values: Vec<(String, String)>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, status: Status) -> Self {
        Self {
            name: name.into(),
            status,
            values: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.values.push((key.to_string(), value.to_string()));
        self
    }

    pub fn value(&self, key: &str) -> Option<&str> {
        self.values.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub generator: String,
    pub seed: Option<u64>,
    pub n: usize,
    pub checks: Vec<CheckOutcome>,
    pub wall_time: Duration,
}

impl RunReport {
    /// True iff no asserted check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_kv(&self) -> String {
        let mut pairs: Vec<(&str, String)> = vec![
            ("generator", self.generator.clone()),
            ("seed", self.seed.map_or_else(|| "-".to_string(), |s| s.to_string())),
            ("n", self.n.to_string()),
        ];
        let mut owned: Vec<(String, String)> = Vec::new();
        for c in &self.checks {
            owned.push((format!("check.{}.status", c.name), c.status.to_string()));
            for (k, v) in &c.values {
                owned.push((format!("check.{}.{k}", c.name), v.clone()));
            }
        }
        pairs.extend(owned.iter().map(|(k, v)| (k.as_str(), v.clone())));
        pairs.push(("wall_time_ms", self.wall_time.as_millis().to_string()));
        pairs.push(("status", Status::from_bool(self.passed()).to_string()));
        format_kv(pairs)
    }

    pub fn from_kv(text: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidArgument(m);
        let mut generator = None;
        let mut seed = None;
        let mut n = None;
        let mut wall_time = Duration::ZERO;
        let mut checks: Vec<CheckOutcome> = Vec::new();
        for (k, v) in parse_kv(text)? {
            match k.as_str() {
                "generator" => generator = Some(v),
                "seed" => {
                    seed = if v == "-" {
                        None
                    } else {
                        Some(v.parse().map_err(|_| bad(format!("bad seed {v:?}")))?)
                    }
                }
                "n" => n = Some(v.parse().map_err(|_| bad(format!("bad n {v:?}")))?),
                "wall_time_ms" => {
                    wall_time = Duration::from_millis(v.parse().map_err(|_| bad(format!("bad wall time {v:?}")))?)
                }
                "status" => {}
                _ => {
                    let rest = k
                        .strip_prefix("check.")
                        .ok_or_else(|| bad(format!("unknown key {k:?}")))?;
                    let (name, field) = rest
                        .split_once('.')
                        .ok_or_else(|| bad(format!("malformed check key {k:?}")))?;
                    if field == "status" {
                        checks.push(CheckOutcome::new(name, v.parse()?));
                    } else {
                        let c = checks
                            .last_mut()
                            .filter(|c| c.name == name)
                            .ok_or_else(|| bad(format!("value before status for {name:?}")))?;
                        c.values.push((field.to_string(), v));
                    }
                }
            }
        }
        Ok(Self {
            generator: generator.ok_or_else(|| bad("missing generator".into()))?,
            seed,
            n: n.ok_or_else(|| bad("missing n".into()))?,
            checks,
            wall_time,
        })
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seed = self.seed.map_or_else(|| "-".to_string(), |s| s.to_string());
        writeln!(f, "instance: {} seed={} n={}", self.generator, seed, self.n)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            write!(f, "  {:width$}  {}", c.name, c.status)?;
            for (k, v) in &c.values {
                write!(f, " {k}={v}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "{} in {:.3}s",
            Status::from_bool(self.passed()),
            self.wall_time.as_secs_f64()
        )
    }
}
