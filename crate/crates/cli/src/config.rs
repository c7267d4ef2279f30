//! JSON configuration files for fat-point schemes.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "label": "b3",
//!   "ambient_dim": 2,
//!   "field": "rational",
//!   "points": [{ "coords": ["1", "0", "0"], "mult": 1 }]
//! }
//! ```
//!
//! Coordinates are strings in the field-element grammar of
//! `fatpoint_core::exact` (`"3/4"`, `"-1-w"`). `mult` defaults to 1.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use fatpoint_core::exact::parse_coords;
use fatpoint_core::{FatPoint, FatPointConfig, Field};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldName {
    Rational,
    Eisenstein,
}

impl From<FieldName> for Field {
    fn from(f: FieldName) -> Self {
        match f {
            FieldName::Rational => Field::Rational,
            FieldName::Eisenstein => Field::Eisenstein,
        }
    }
}

impl From<Field> for FieldName {
    fn from(f: Field) -> Self {
        match f {
            Field::Rational => FieldName::Rational,
            Field::Eisenstein => FieldName::Eisenstein,
        }
    }
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointEntry {
    pub coords: Vec<String>,
    #[serde(default = "one")]
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub schema: u32,
    #[serde(default)]
    pub label: String,
    pub ambient_dim: usize,
    pub field: FieldName,
    pub points: Vec<PointEntry>,
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ConfigFile = serde_json::from_str(text).context("malformed configuration")?;
        if file.schema != SCHEMA_VERSION {
            bail!("unsupported schema {} (expected {SCHEMA_VERSION})", file.schema);
        }
        Ok(file)
    }

    pub fn validate(&self) -> Result<FatPointConfig> {
        let field = Field::from(self.field);
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let coords = parse_coords(&p.coords, field).with_context(|| format!("point {i}"))?;
                Ok(FatPoint::new(coords, p.mult))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FatPointConfig::new(self.ambient_dim, field, points, self.label.clone())?)
    }

    pub fn from_config(z: &FatPointConfig) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            label: z.label().to_owned(),
            ambient_dim: z.ambient_dim(),
            field: z.field().into(),
            points: z
                .points()
                .iter()
                .map(|p| PointEntry {
                    coords: p.coords.iter().map(ToString::to_string).collect(),
                    mult: p.mult,
                })
                .collect(),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("config serializes");
        s.push('\n');
        s
    }
}

pub fn parse_config(text: &str) -> Result<FatPointConfig> {
    ConfigFile::from_json(text)?.validate()
}

pub fn load_config(path: &Path) -> Result<FatPointConfig> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_config(&text).with_context(|| format!("invalid configuration {}", path.display()))
}

pub fn export_config(z: &FatPointConfig) -> String {
    ConfigFile::from_config(z).to_json()
}

/// Configurations built into the library, by file stem.
pub const BUILTINS: [&str; 4] = ["b3", "fermat_w", "coord4plus", "empty"];

pub fn builtin(name: &str) -> Option<FatPointConfig> {
    use fatpoint_core::witness;
    match name {
        "b3" => Some(witness::b3_config()),
        "fermat_w" => Some(witness::fermat_w_config()),
        "coord4plus" => Some(witness::coord4plus_config()),
        "empty" => Some(FatPointConfig::empty(2, Field::Rational, "empty")),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_round_trip() {
        for name in BUILTINS {
            let z = builtin(name).unwrap();
            let text = export_config(&z);
            let back = parse_config(&text).unwrap();
            assert_eq!(back, z);
            assert_eq!(export_config(&back), text);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let dup = r#"{"schema":1,"ambient_dim":2,"field":"rational",
            "points":[{"coords":["1","2","3"]},{"coords":["2","4","6"]}]}"#;
        assert!(format!("{:#}", parse_config(dup).unwrap_err()).contains("coincide"));
        let schema = r#"{"schema":2,"ambient_dim":2,"field":"rational","points":[]}"#;
        assert!(parse_config(schema).is_err());
        let extra = r#"{"schema":1,"ambient_dim":2,"field":"rational","points":[],"x":1}"#;
        assert!(parse_config(extra).is_err());
        let field = r#"{"schema":1,"ambient_dim":1,"field":"rational","points":[{"coords":["w","1"]}]}"#;
        assert!(parse_config(field).is_err());
        let arity = r#"{"schema":1,"ambient_dim":2,"field":"rational","points":[{"coords":["1","1"]}]}"#;
        assert!(parse_config(arity).is_err());
    }

    #[test]
    fn defaults() {
        let z = parse_config(r#"{"schema":1,"ambient_dim":1,"field":"eisenstein","points":[{"coords":["1","-1-w"]}]}"#)
            .unwrap();
        assert_eq!(z.points()[0].mult, 1);
        assert_eq!(z.label(), "");
        assert_eq!(z.field(), Field::Eisenstein);
    }
}
