//! JSON configuration for the command line: polygon rank, the rigid arcs
//! `R`, the complementary triangulation arcs `S`, and the exponential map
//! as monomial strings per arc.
//!
//! ```json
//! {
//!   "n": 5,
//!   "R": [[2, 5], [2, 7]],
//!   "S": [[1, 7], [2, 4], [5, 7]],
//!   "epsilon": { "1,7": "u", "2,4": "v", "5,7": "z", "2,5": "1", "2,7": "1" }
//! }
//! ```
//!
//! Arcs are two-element arrays of 1-based vertex labels. Giving the
//! triangulation as `R` plus `S` makes `R ⊆ T` structural.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::engine::CCContext;
use crate::error::{Error, Result};
use crate::laurent::{EpsilonAssignment, Monomial};
use crate::polygon::{Arc, Dissection, Triangulation};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigFile {
    pub n: usize,
    #[serde(rename = "R")]
    pub r: Vec<[i64; 2]>,
    #[serde(rename = "S")]
    pub s: Vec<[i64; 2]>,
    pub epsilon: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn from_path(path: &Path) -> Result<ConfigFile> {
        let text = std::fs::read_to_string(path)?;
        ConfigFile::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<ConfigFile> {
        Ok(serde_json::from_str(text)?)
    }

    fn parse_arc(&self, pair: [i64; 2], role: &str) -> Result<Arc> {
        let size = (self.n + 3) as i64;
        let [i, j] = pair;
        if !(1..=size).contains(&i) || !(1..=size).contains(&j) {
            return Err(Error::InvalidConfig(format!(
                "{role} arc [{i},{j}] has labels outside 1..={size}"
            )));
        }
        if i == j {
            return Err(Error::InvalidConfig(format!("{role} arc [{i},{j}] is degenerate")));
        }
        Ok(Arc::new(size as u16, i, j))
    }

    /// Validate the configuration and build an evaluation context.
    pub fn context(&self) -> Result<CCContext> {
        if self.n < 1 {
            return Err(Error::InvalidConfig("n must be at least 1".into()));
        }
        let size = (self.n + 3) as u16;
        let r_arcs: Vec<Arc> = self.r.iter().map(|&p| self.parse_arc(p, "R")).collect::<Result<_>>()?;
        let s_arcs: Vec<Arc> = self.s.iter().map(|&p| self.parse_arc(p, "S")).collect::<Result<_>>()?;

        let rigid = Dissection::new(size, r_arcs.iter().copied())
            .map_err(|e| Error::InvalidConfig(format!("R not a dissection: {e}")))?;
        for s in &s_arcs {
            if rigid.contains(s) {
                return Err(Error::InvalidConfig(format!("arc {s} appears in both R and S")));
            }
        }
        let tri = Triangulation::from_arcs(size, r_arcs.iter().chain(&s_arcs).copied())
            .map_err(|e| Error::InvalidConfig(format!("R ∪ S is not a triangulation: {e}")))?;

        let mut assignment = Vec::new();
        let mut keys_seen = std::collections::BTreeSet::new();
        for (key, value) in &self.epsilon {
            let arc = parse_arc_key(size, key)?;
            if !tri.contains(&arc) {
                return Err(Error::InvalidConfig(format!(
                    "epsilon assigns to {arc}, which is not an arc of R ∪ S"
                )));
            }
            keys_seen.insert(arc);
            assignment.push((arc, Monomial::parse(value)?));
        }
        for t in tri.arcs() {
            if !keys_seen.contains(t) {
                return Err(Error::InvalidConfig(format!("epsilon is missing an entry for {t}")));
            }
        }
        CCContext::new(tri, rigid, EpsilonAssignment::new(assignment))
    }
}

/// Parse an epsilon key of the form `"2,5"`.
fn parse_arc_key(size: u16, key: &str) -> Result<Arc> {
    let bad = || Error::InvalidConfig(format!("epsilon key {key:?} is not of the form \"i,j\""));
    let (i, j) = key.split_once(',').ok_or_else(bad)?;
    let i: i64 = i.trim().parse().map_err(|_| bad())?;
    let j: i64 = j.trim().parse().map_err(|_| bad())?;
    if !(1..=i64::from(size)).contains(&i) || !(1..=i64::from(size)).contains(&j) || i == j {
        return Err(bad());
    }
    Ok(Arc::new(size, i, j))
}

/// Parse a `--arc i,j` command-line value against a context.
pub fn parse_arc_flag(ctx: &CCContext, value: &str) -> Result<Arc> {
    let size = ctx.polygon_size();
    let arc = parse_arc_key(size, value)
        .map_err(|_| Error::InvalidConfig(format!("--arc expects \"i,j\" with labels in 1..={size}")))?;
    Ok(arc)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const OCTAGON: &str = r#"{
  "n": 5,
  "R": [[2, 5], [2, 7]],
  "S": [[1, 7], [2, 4], [5, 7]],
  "epsilon": { "1,7": "u", "2,4": "v", "5,7": "z", "2,5": "1", "2,7": "1" }
}"#;

    #[test]
    fn octagon_config_builds() {
        let cfg = ConfigFile::from_json(OCTAGON).unwrap();
        let ctx = cfg.context().unwrap();
        assert_eq!(ctx.n(), 5);
        assert_eq!(ctx.rigid().len(), 2);
        assert_eq!(ctx.s_arcs().len(), 3);
    }

    #[test]
    fn crossing_r_is_rejected() {
        let cfg = ConfigFile {
            n: 5,
            r: vec![[2, 5], [3, 6]],
            s: vec![],
            epsilon: BTreeMap::new(),
        };
        let err = cfg.context().unwrap_err();
        assert!(err.to_string().contains("R not a dissection"), "{err}");
    }

    #[test]
    fn incomplete_triangulations_and_epsilons_are_rejected() {
        let mut cfg = ConfigFile::from_json(OCTAGON).unwrap();
        cfg.s.pop();
        assert!(cfg.context().unwrap_err().to_string().contains("not a triangulation"));

        let mut cfg = ConfigFile::from_json(OCTAGON).unwrap();
        cfg.epsilon.remove("2,5");
        assert!(cfg.context().unwrap_err().to_string().contains("missing an entry"));

        // an epsilon that does not kill N is caught by validation
        let mut cfg = ConfigFile::from_json(OCTAGON).unwrap();
        cfg.epsilon.insert("2,5".into(), "u".into());
        assert!(matches!(cfg.context().unwrap_err(), Error::EpsilonNotWellDefined { .. }));
    }
}
