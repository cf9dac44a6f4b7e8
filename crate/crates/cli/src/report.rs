//! Versioned JSON reports. Every coordinate is an exact string; maps are
//! `BTreeMap`s so serialization order is fixed.

use std::collections::BTreeMap;

use cevian::frame::format_rat;
use cevian::linalg::Mat3;
use cevian::suite::{CheckResult, Status, SuiteReport, Tally, Witness};
use cevian::{CevianConfig, Conic, Guard, ProjMap, ProjPoint, Result as GeoResult};
use serde::{Deserialize, Serialize};

use crate::config::ConfigFile;

pub const REPORT_SCHEMA: &str = "cevian-report/1";
pub const FUZZ_SCHEMA: &str = "cevian-fuzz/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bary: Option<[String; 3]>,
    /// Absent for points at infinity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartesian: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// A symmetric conic matrix or a collineation matrix, row by row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<[[String; 3]; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub config: String,
    pub violated: String,
    pub objects: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub config: ConfigFile,
    pub guards: BTreeMap<String, bool>,
    pub points: BTreeMap<String, PointEntry>,
    pub conics: BTreeMap<String, MatrixEntry>,
    pub maps: BTreeMap<String, MatrixEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckEntry>>,
}

fn strings<const N: usize>(v: &[cevian::Rat; N]) -> [String; N] {
    std::array::from_fn(|i| format_rat(&v[i]))
}

fn matrix(m: &Mat3) -> [[String; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[i][j].to_string()))
}

pub fn point_entry(cfg: &CevianConfig, p: &GeoResult<ProjPoint>) -> PointEntry {
    match p {
        Ok(p) => PointEntry {
            bary: Some(std::array::from_fn(|i| p.coords()[i].to_string())),
            cartesian: cfg.frame().to_cartesian(p).map(|c| strings(&c)),
            error: None,
        },
        Err(e) => PointEntry { bary: None, cartesian: None, error: Some(e.to_string()) },
    }
}

fn conic_entry(c: &GeoResult<Conic>) -> MatrixEntry {
    match c {
        Ok(c) => MatrixEntry { matrix: Some(matrix(c.matrix())), error: None },
        Err(e) => MatrixEntry { matrix: None, error: Some(e.to_string()) },
    }
}

fn map_entry(m: GeoResult<&ProjMap>) -> MatrixEntry {
    match m {
        Ok(m) => MatrixEntry { matrix: Some(matrix(m.matrix())), error: None },
        Err(e) => MatrixEntry { matrix: None, error: Some(e.to_string()) },
    }
}

pub fn guard_flags(cfg: &CevianConfig) -> BTreeMap<String, bool> {
    Guard::ALL.iter().map(|&g| (g.name().to_owned(), cfg.guards().get(g))).collect()
}

fn witness_entry(w: &Witness) -> WitnessEntry {
    WitnessEntry {
        config: w.config.clone(),
        violated: w.violated.clone(),
        objects: w.objects.iter().cloned().collect(),
    }
}

pub fn check_entry(r: &CheckResult) -> CheckEntry {
    let (reason, witness) = match &r.status {
        Status::Pass => (None, None),
        Status::Skipped(why) => (Some(why.clone()), None),
        Status::Fail(w) => (None, Some(witness_entry(w))),
    };
    CheckEntry { id: r.id.to_owned(), status: r.status.label().to_owned(), reason, witness }
}

impl Report {
    pub fn build(input: &ConfigFile, cfg: &CevianConfig, checks: Option<&[CheckResult]>) -> Self {
        let points = cfg.named_points().into_iter().map(|(k, p)| (k.to_owned(), point_entry(cfg, &p))).collect();
        let conics = cfg.named_conics().into_iter().map(|(k, c)| (k.to_owned(), conic_entry(&c))).collect();
        let maps = [("T_P", cfg.t_p()), ("T_P'", cfg.t_p_prime()), ("M", cfg.m_map())]
            .into_iter()
            .map(|(k, m)| (k.to_owned(), map_entry(m)))
            .collect();
        Report {
            schema: REPORT_SCHEMA.to_owned(),
            config: input.clone(),
            guards: guard_flags(cfg),
            points,
            conics,
            maps,
            checks: checks.map(|rs| rs.iter().map(check_entry).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TallyEntry {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl From<Tally> for TallyEntry {
    fn from(t: Tally) -> Self {
        TallyEntry { pass: t.pass, fail: t.fail, skipped: t.skipped }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfigEntry {
    pub index: usize,
    pub p: [String; 3],
    /// Guards that trip for this configuration.
    pub guards: Vec<String>,
    /// Check id to `pass`, `fail` or `skipped: <reason>`.
    pub results: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<CheckEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub schema: String,
    pub seed: u64,
    pub count: usize,
    pub bound: i64,
    pub filter: Vec<String>,
    pub triangle: [[String; 2]; 3],
    pub total: TallyEntry,
    pub summary: BTreeMap<String, TallyEntry>,
    pub configs: Vec<FuzzConfigEntry>,
}

impl FuzzReport {
    pub fn build(r: &SuiteReport) -> Self {
        let triangle = r.runs.first().map(|run| {
            let v = run.config.frame().vertices();
            std::array::from_fn(|i| strings(&v[i]))
        });
        let configs = r
            .runs
            .iter()
            .map(|run| {
                let g = run.config.guards();
                FuzzConfigEntry {
                    index: run.index,
                    p: std::array::from_fn(|i| run.config.p().coords()[i].to_string()),
                    guards: Guard::ALL.iter().filter(|&&x| g.get(x)).map(|x| x.name().to_owned()).collect(),
                    results: run
                        .results
                        .iter()
                        .map(|c| {
                            let v = match &c.status {
                                Status::Skipped(why) => format!("skipped: {why}"),
                                s => s.label().to_owned(),
                            };
                            (c.id.to_owned(), v)
                        })
                        .collect(),
                    failures: run
                        .results
                        .iter()
                        .filter(|c| matches!(c.status, Status::Fail(_)))
                        .map(check_entry)
                        .collect(),
                }
            })
            .collect();
        FuzzReport {
            schema: FUZZ_SCHEMA.to_owned(),
            seed: r.seed,
            count: r.count,
            bound: r.bound,
            filter: r.filter.patterns().to_vec(),
            triangle: triangle.unwrap_or_default(),
            total: r.total().into(),
            summary: r.summary.iter().map(|(k, t)| ((*k).to_owned(), (*t).into())).collect(),
            configs,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::PointMode;
    use cevian::suite::{run_checks, Filter};

    fn input(p: &[&str]) -> ConfigFile {
        let t = |x: &str, y: &str| [x.to_owned(), y.to_owned()];
        ConfigFile {
            triangle: [t("0", "0"), t("4", "0"), t("0", "3")],
            p: p.iter().map(|s| s.to_string()).collect(),
            p_mode: PointMode::Cartesian,
            perturb_h: None,
        }
    }

    #[test]
    fn report_round_trips() {
        let f = input(&["1", "1/2"]);
        let cfg = f.build().unwrap();
        let checks = run_checks(&cfg, &Filter::parse("prop_*").unwrap()).unwrap();
        let r = Report::build(&f, &cfg, Some(&checks));
        let back: Report = serde_json::from_str(&to_json(&r)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn gergonne_report_has_incenter_and_vertex_h() {
        let f = input(&["8/11", "9/11"]);
        let cfg = f.build().unwrap();
        let r = Report::build(&f, &cfg, None);
        assert_eq!(r.points["Q"].cartesian, Some(["1".to_owned(), "1".to_owned()]));
        assert_eq!(r.points["H"].bary, Some(["1".to_owned(), "0".to_owned(), "0".to_owned()]));
        assert!(r.guards["H_is_vertex"]);
        assert!(r.conics["circumconic_O"].error.is_none());
        assert!(r.checks.is_none());
    }

    #[test]
    fn no_floats_in_output() {
        let f = input(&["3/2", "2/3"]);
        let cfg = f.build().unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&Report::build(&f, &cfg, None))).unwrap();
        fn walk(v: &serde_json::Value) {
            match v {
                serde_json::Value::Number(_) => panic!("number in report: {v}"),
                serde_json::Value::Array(a) => a.iter().for_each(walk),
                serde_json::Value::Object(o) => o.values().for_each(walk),
                _ => {}
            }
        }
        walk(&v);
    }
}
