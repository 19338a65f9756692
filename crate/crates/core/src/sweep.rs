//! Deterministic random corpora, parallel sweeps and the Θ6 perfect
//! matching search.
//!
//! Instance `i` of a corpus depends only on `(seed, i)`, so sweeps can run
//! on any number of threads and still merge into the same ordered result.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construct::{build_down, build_up, union_graph};
use crate::error::{Error, Result};
use crate::generators::random_general_position;
use crate::geometry::PointSet;
use crate::io::serialize_points;
use crate::matching::{down_graph_matching_bound, half_floor, max_matching};

pub const DEFAULT_RESOLUTION: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub count: usize,
    pub n: RangeInclusive<usize>,
    pub seed: u64,
    pub resolution: u64,
}

impl CorpusSpec {
    pub fn new(count: usize, n: RangeInclusive<usize>, seed: u64) -> Self {
        Self {
            count,
            n,
            seed,
            resolution: DEFAULT_RESOLUTION,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n.is_empty() || *self.n.start() == 0 {
            return Err(Error::InvalidArgument(format!(
                "point count range {}..={} must be nonempty and start at 1 or more",
                self.n.start(),
                self.n.end()
            )));
        }
        Ok(())
    }

    /// Size and generator seed of instance `index`.
    pub fn instance_params(&self, index: usize) -> (usize, u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        (rng.random_range(self.n.clone()), rng.random())
    }

    pub fn instance(&self, index: usize) -> Result<Instance> {
        self.validate()?;
        let (n, seed) = self.instance_params(index);
        Ok(Instance {
            index,
            seed,
            points: Arc::new(random_general_position(n, seed, self.resolution)?),
        })
    }

    /// All instances, generated in parallel, in index order.
    pub fn generate(&self) -> Result<Vec<Instance>> {
        self.validate()?;
        (0..self.count).into_par_iter().map(|i| self.instance(i)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub index: usize,
    /// Seed passed to [`random_general_position`].
    pub seed: u64,
    pub points: Arc<PointSet>,
}

/// Applies `f` to every instance in parallel; results keep instance order.
pub fn sweep<T, F>(instances: &[Instance], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Instance) -> T + Sync + Send,
{
    instances.par_iter().map(f).collect()
}

/// One instance whose Θ6 graph has no matching of size `⌊n/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub matching: usize,
    /// Points file contents reproducing the instance.
    pub points_file: String,
}

impl Counterexample {
    pub fn file_name(&self) -> String {
        format!("counterexample-{}-n{}-seed{}.pts", self.index, self.n, self.seed)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConjectureReport {
    pub trials: usize,
    /// Instances with `n` even and a perfect matching.
    pub perfect: usize,
    /// Instances with `n` odd and a matching missing one vertex.
    pub near_perfect: usize,
    pub counterexamples: Vec<Counterexample>,
    /// `⌊n/2⌋ − |M(Θ6)|` → number of instances.
    pub deficit_histogram: BTreeMap<usize, usize>,
    /// Smallest, mean and largest `|M(Θ6)| − ⌈(n−2)/3⌉`, the margin over
    /// the guaranteed down-graph bound.
    pub bound_slack: Option<(usize, f64, usize)>,
    /// Smallest and mean `|M(G▽)| − ⌈(n−2)/3⌉`.
    pub down_slack: Option<(usize, f64)>,
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials={}", self.trials)?;
        writeln!(f, "perfect={}", self.perfect)?;
        writeln!(f, "near_perfect={}", self.near_perfect)?;
        writeln!(f, "counterexamples={}", self.counterexamples.len())?;
        let hist: Vec<String> = self.deficit_histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        writeln!(f, "deficit_histogram={}", hist.join(","))?;
        match self.bound_slack {
            Some((lo, mean, hi)) => {
                writeln!(f, "theta6_slack_min={lo}")?;
                writeln!(f, "theta6_slack_mean={mean:.3}")?;
                writeln!(f, "theta6_slack_max={hi}")?;
            }
            None => writeln!(f, "theta6_slack=-")?,
        }
        match self.down_slack {
            Some((lo, mean)) => {
                writeln!(f, "down_slack_min={lo}")?;
                write!(f, "down_slack_mean={mean:.3}")
            }
            None => write!(f, "down_slack=-"),
        }
    }
}

struct Trial {
    n: usize,
    theta6: usize,
    down: usize,
    counterexample: Option<Counterexample>,
}

fn run_trial(inst: &Instance) -> Result<Trial> {
    let ps = &inst.points;
    let down = build_down(ps)?;
    let up = build_up(ps)?;
    let theta6 = max_matching(union_graph(&down, &up)?.graph()).size();
    let n = ps.len();
    let counterexample = if theta6 < half_floor(n) {
        Some(Counterexample {
            index: inst.index,
            seed: inst.seed,
            n,
            matching: theta6,
            points_file: serialize_points(ps)?,
        })
    } else {
        None
    };
    Ok(Trial {
        n,
        theta6,
        down: max_matching(down.graph()).size(),
        counterexample,
    })
}

/// Searches `spec.count` random instances for a Θ6 graph without a
/// matching of size `⌊n/2⌋`. Finding one is reported, not an error.
pub fn conjecture_search(spec: &CorpusSpec) -> Result<ConjectureReport> {
    spec.validate()?;
    let trials: Vec<Trial> = (0..spec.count)
        .into_par_iter()
        .map(|i| run_trial(&spec.instance(i)?))
        .collect::<Result<_>>()?;
    let mut report = ConjectureReport {
        trials: trials.len(),
        ..Default::default()
    };
    let (mut lo, mut hi, mut sum) = (usize::MAX, 0, 0usize);
    let (mut dlo, mut dsum) = (usize::MAX, 0usize);
    for t in trials {
        let half = half_floor(t.n);
        let bound = down_graph_matching_bound(t.n);
        *report.deficit_histogram.entry(half - t.theta6).or_default() += 1;
        if t.theta6 == half {
            if t.n % 2 == 0 {
                report.perfect += 1;
            } else {
                report.near_perfect += 1;
            }
        }
        let slack = t.theta6 - bound;
        lo = lo.min(slack);
        hi = hi.max(slack);
        sum += slack;
        let ds = t.down - bound;
        dlo = dlo.min(ds);
        dsum += ds;
        report.counterexamples.extend(t.counterexample);
    }
    if report.trials > 0 {
        let k = report.trials as f64;
        report.bound_slack = Some((lo, sum as f64 / k, hi));
        report.down_slack = Some((dlo, dsum as f64 / k));
    }
    Ok(report)
}
