//! Keyed verification of the geometry over sampled configurations: a
//! registry of checks, a reproducible sampler and report aggregation.

mod checks;
pub mod sampler;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::constructions::{CevianConfig, Hypothesis};
use crate::error::{GeometryError, Result};
use crate::frame::format_rat;
use crate::projective::{ProjLine, ProjPoint};
pub use checks::registry;
pub use sampler::{ConfigSampler, Draw, DEFAULT_BOUND, MAX_REJECTIONS};

/// Upper limit on `count` accepted by `run_suite`.
pub const MAX_COUNT: usize = 100_000;

/// Every `MEDIAN_STRIDE`-th sampled configuration has `P` on a median, so
/// the median-excluding statements also exercise their guard path.
pub const MEDIAN_STRIDE: usize = 10;

/// Hypotheses every sampled configuration satisfies.
pub const BASE: [Hypothesis; 2] = [Hypothesis::OFF_SIDES, Hypothesis::OFF_ANTICOMPLEMENTARY];

/// Why a check did not pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Fail(String),
    Skip(String),
}

impl From<GeometryError> for Verdict {
    fn from(e: GeometryError) -> Self {
        Verdict::Fail(format!("construction error: {e}"))
    }
}

pub type Outcome = std::result::Result<(), Verdict>;

/// Per-check scratch: deterministic random draws plus objects recorded for
/// the witness.
pub struct Probe {
    draw: Draw,
    objects: Vec<(String, String)>,
}

impl Probe {
    fn new(cfg: &CevianConfig, id: &str, bound: i64) -> Self {
        let key = format!("{}|{id}", describe(cfg));
        Self { draw: Draw::new(sampler::fnv1a(key.as_bytes()), bound), objects: Vec::new() }
    }

    pub fn record(&mut self, name: impl Into<String>, value: impl fmt::Debug) {
        self.objects.push((name.into(), format!("{value:?}")));
    }

    pub fn draw(&mut self) -> &mut Draw {
        &mut self.draw
    }

    pub fn point(&mut self) -> ProjPoint {
        self.draw.generic_point()
    }

    pub fn infinite_point(&mut self) -> ProjPoint {
        self.draw.infinite_point()
    }

    /// A line through no vertex: all three coefficients nonzero.
    pub fn line_avoiding_vertices(&mut self) -> ProjLine {
        let d = &mut self.draw;
        ProjLine::new(d.nonzero(), d.nonzero(), d.nonzero()).expect("nonzero")
    }
}

/// Exact equality, recording both sides on failure.
pub fn eq<T: PartialEq + fmt::Debug>(probe: &mut Probe, lname: &str, l: &T, rname: &str, r: &T) -> Outcome {
    if l == r {
        return Ok(());
    }
    probe.record(lname, l);
    probe.record(rname, r);
    Err(Verdict::Fail(format!("{lname} = {rname}")))
}

pub fn holds(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Verdict::Fail(what.into()))
    }
}

pub struct TheoremCheck {
    pub id: &'static str,
    /// Plain statement of the verified claim.
    pub statement: &'static str,
    pub hypotheses: &'static [Hypothesis],
    verify: fn(&CevianConfig, &mut Probe) -> Outcome,
}

impl fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).field("hypotheses", &self.hypotheses).finish()
    }
}

/// Failure evidence: the configuration, the violated equality and the
/// objects on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub config: String,
    pub violated: String,
    pub objects: Vec<(String, String)>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "violated {} at {}", self.violated, self.config)?;
        for (k, v) in &self.objects {
            write!(f, "; {k} = {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Witness),
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail(_) => "fail",
            Status::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub status: Status,
}

/// `A=(x,y) B=(x,y) C=(x,y) P=(p:q:r)` with exact rationals.
pub fn describe(cfg: &CevianConfig) -> String {
    let v = cfg.frame().vertices();
    let c = |i: usize| format!("({},{})", format_rat(&v[i][0]), format_rat(&v[i][1]));
    let mut s = format!("A={} B={} C={} P={}", c(0), c(1), c(2), cfg.p());
    if cfg.is_perturbed() {
        s.push_str(" [H perturbed]");
    }
    s
}

pub fn run_check(check: &TheoremCheck, cfg: &CevianConfig) -> CheckResult {
    run_check_bounded(check, cfg, DEFAULT_BOUND)
}

fn run_check_bounded(check: &TheoremCheck, cfg: &CevianConfig, bound: i64) -> CheckResult {
    if let Some(h) = cfg.guards().first_violation(check.hypotheses) {
        return CheckResult { id: check.id, status: Status::Skipped(h.name()) };
    }
    let mut probe = Probe::new(cfg, check.id, bound);
    let status = match (check.verify)(cfg, &mut probe) {
        Ok(()) => Status::Pass,
        Err(Verdict::Skip(reason)) => Status::Skipped(reason),
        Err(Verdict::Fail(violated)) => {
            Status::Fail(Witness { config: describe(cfg), violated, objects: probe.objects })
        }
    };
    CheckResult { id: check.id, status }
}

/// Comma-separated glob patterns over check ids; empty means all.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    patterns: Vec<String>,
}

impl Filter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let patterns: Vec<String> =
            text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_owned).collect();
        for p in &patterns {
            glob::Pattern::new(p).map_err(|e| GeometryError::InvalidArgument(format!("bad pattern {p:?}: {e}")))?;
        }
        Ok(Self { patterns })
    }

    pub fn patterns(&self) -> &[String] {
        &self.patterns
    }

    pub fn matches(&self, id: &str) -> bool {
        self.patterns.is_empty()
            || self.patterns.iter().any(|p| glob::Pattern::new(p).map(|g| g.matches(id)).unwrap_or(false))
    }

    /// Selected checks, sorted by id.
    pub fn select(&self) -> Result<Vec<&'static TheoremCheck>> {
        let mut out: Vec<_> = registry().iter().filter(|c| self.matches(c.id)).collect();
        if out.is_empty() {
            return Err(GeometryError::InvalidArgument(format!("no check matches {:?}", self.patterns.join(","))));
        }
        out.sort_by_key(|c| c.id);
        Ok(out)
    }
}

/// Runs the selected checks on one configuration, results sorted by id.
pub fn run_checks(cfg: &CevianConfig, filter: &Filter) -> Result<Vec<CheckResult>> {
    Ok(filter.select()?.into_iter().map(|c| run_check(c, cfg)).collect())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    fn add(&mut self, s: &Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail(_) => self.fail += 1,
            Status::Skipped(_) => self.skipped += 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConfigRun {
    pub index: usize,
    pub config: CevianConfig,
    pub results: Vec<CheckResult>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub seed: u64,
    pub count: usize,
    pub bound: i64,
    pub filter: Filter,
    pub runs: Vec<ConfigRun>,
    pub summary: BTreeMap<&'static str, Tally>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = (usize, &CheckResult)> {
        self.runs
            .iter()
            .flat_map(|r| r.results.iter().map(move |c| (r.index, c)))
            .filter(|(_, c)| matches!(c.status, Status::Fail(_)))
    }

    pub fn total(&self) -> Tally {
        let mut t = Tally::default();
        for v in self.summary.values() {
            t.pass += v.pass;
            t.fail += v.fail;
            t.skipped += v.skipped;
        }
        t
    }
}

/// Samples `count` configurations and runs the filtered checks on each.
/// Configurations are drawn sequentially, checks run in parallel, and the
/// report is ordered by (configuration index, check id).
pub fn run_suite(seed: u64, count: usize, bound: i64, filter: &Filter) -> Result<SuiteReport> {
    if count == 0 || count > MAX_COUNT {
        return Err(GeometryError::InvalidArgument(format!("count must be in 1..={MAX_COUNT}, got {count}")));
    }
    let checks = filter.select()?;
    let mut sampler = ConfigSampler::new(seed, bound)?;
    let configs: Vec<CevianConfig> = (0..count)
        .map(|i| {
            if i % MEDIAN_STRIDE == MEDIAN_STRIDE - 1 {
                sampler.sample_median_config(&BASE)
            } else {
                sampler.sample_config(&BASE)
            }
        })
        .collect::<Result<_>>()?;
    let runs: Vec<ConfigRun> = configs
        .into_par_iter()
        .enumerate()
        .map(|(index, config)| {
            let results = checks.iter().map(|c| run_check_bounded(c, &config, bound)).collect();
            ConfigRun { index, config, results }
        })
        .collect();
    let mut summary: BTreeMap<&'static str, Tally> = checks.iter().map(|c| (c.id, Tally::default())).collect();
    for r in &runs {
        for c in &r.results {
            summary.get_mut(c.id).expect("registered").add(&c.status);
        }
    }
    Ok(SuiteReport { seed, count, bound, filter: filter.clone(), runs, summary })
}
