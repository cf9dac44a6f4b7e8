use cevian::frame::{parse_rat, Cartesian};
use cevian::{CevianConfig, Frame, GeometryError, ProjPoint, Rat};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointMode {
    #[default]
    Cartesian,
    Barycentric,
}

/// Input file: a Cartesian triangle and a point `P`, all coordinates as
/// exact rational strings such as `"3"`, `"-8/11"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub triangle: [[String; 2]; 3],
    pub p: Vec<String>,
    #[serde(default)]
    pub p_mode: PointMode,
    /// Cartesian offset added to `H` (negative-control fixtures only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perturb_h: Option<[String; 2]>,
}

fn rat(field: &str, s: &str) -> Result<Rat, CliError> {
    parse_rat(s).map_err(|e| CliError::Input(format!("{field}: {e}")))
}

fn cart(field: &str, v: &[String; 2]) -> Result<Cartesian, CliError> {
    Ok([rat(field, &v[0])?, rat(field, &v[1])?])
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("config: {e}")))
    }

    /// Parses every rational and builds the configuration. A point on a
    /// side line or an anticomplementary side line is refused here, naming
    /// the guard.
    pub fn build(&self) -> Result<CevianConfig, CliError> {
        let names = ["triangle.A", "triangle.B", "triangle.C"];
        let [a, b, c] = [0, 1, 2].map(|i| cart(names[i], &self.triangle[i]));
        let frame = Frame::new(a?, b?, c?).map_err(|e| CliError::Input(format!("triangle: {e}")))?;
        let p = match (self.p_mode, self.p.as_slice()) {
            (PointMode::Cartesian, [x, y]) => frame.to_bary(&[rat("p", x)?, rat("p", y)?]),
            (PointMode::Barycentric, [x, y, z]) => ProjPoint::from_rats(&[rat("p", x)?, rat("p", y)?, rat("p", z)?])
                .map_err(|e| CliError::Input(format!("p: {e}")))?,
            (mode, v) => {
                let want = if mode == PointMode::Cartesian { 2 } else { 3 };
                return Err(CliError::Input(format!("p: expected {want} coordinates, got {}", v.len())));
            }
        };
        let cfg = CevianConfig::derive(frame, p).map_err(|e| CliError::Input(format!("p: {e}")))?;
        // the skeleton carries the guard that blocked it
        if let Err(e @ GeometryError::GuardViolation(_)) = cfg.q() {
            return Err(CliError::Guard(e));
        }
        match &self.perturb_h {
            None => Ok(cfg),
            Some(off) => cfg.with_perturbed_h(&cart("perturb_h", off)?).map_err(CliError::Guard),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(p: &[&str], mode: PointMode) -> ConfigFile {
        let t = |x: &str, y: &str| [x.to_owned(), y.to_owned()];
        ConfigFile {
            triangle: [t("0", "0"), t("4", "0"), t("0", "3")],
            p: p.iter().map(|s| s.to_string()).collect(),
            p_mode: mode,
            perturb_h: None,
        }
    }

    #[test]
    fn gergonne_cartesian() {
        let cfg = file(&["8/11", "9/11"], PointMode::Cartesian).build().unwrap();
        // a = 5, b = 3, c = 4, s = 6: Gergonne = (1/(s-a) : 1/(s-b) : 1/(s-c))
        assert_eq!(cfg.p(), &ProjPoint::new(6, 2, 3).unwrap());
        assert!(cfg.guards().h_is_vertex);
    }

    #[test]
    fn barycentric_mode_and_arity() {
        let cfg = file(&["1", "1", "1"], PointMode::Barycentric).build().unwrap();
        assert_eq!(cfg.p(), &ProjPoint::centroid());
        let e = file(&["1", "1"], PointMode::Barycentric).build().unwrap_err();
        assert!(e.to_string().contains("expected 3"));
    }

    #[test]
    fn zero_denominator_is_refused() {
        let e = file(&["3/0", "1"], PointMode::Cartesian).build().unwrap_err();
        assert!(matches!(e, CliError::Input(_)));
        assert!(e.to_string().contains("3/0"));
    }

    #[test]
    fn side_point_names_the_guard() {
        let e = file(&["2", "0"], PointMode::Cartesian).build().unwrap_err();
        assert!(e.to_string().contains("on_side"), "{e}");
        let e = file(&["1", "1", "-1"], PointMode::Barycentric).build().unwrap_err();
        assert!(e.to_string().contains("on_anticomplementary_side"), "{e}");
    }

    #[test]
    fn unknown_field_rejected() {
        let e = ConfigFile::from_json(r#"{"triangle":[["0","0"],["1","0"],["0","1"]],"p":["1","1","1"],"q":1}"#);
        assert!(e.is_err());
    }
}
