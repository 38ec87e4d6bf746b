//! Surface and bundle catalogs.
//!
//! The catalog is one JSON document. Every rational is a string `"p/q"` or
//! `"n"`:
//!
//! ```json
//! {
//!   "surfaces": [
//!     { "name": "p2", "divisors": ["H"], "pairing": [["1"]],
//!       "omega_c1": ["-3"], "omega_c2_int": "3", "chi_top": "3" }
//!   ],
//!   "bundles": [
//!     { "name": "p2/O(1)", "surface": "p2", "rank": 1, "c1": ["1"], "c2_int": "0" }
//!   ]
//! }
//! ```
//!
//! An empty file, or `{}`, is an empty catalog.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::bundle::BundleData;
use crate::chow::SurfaceModel;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG: &str = include_str!("../data/default_catalog.json");

/// Environment variable naming a catalog file to use instead of the default.
pub const CATALOG_ENV: &str = "QUOT_CATALOG";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedBundle {
    pub name: String,
    pub surface: String,
    pub bundle: BundleData,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    pub surfaces: Vec<SurfaceModel>,
    pub bundles: Vec<NamedBundle>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    #[serde(default)]
    surfaces: Vec<RawSurface>,
    #[serde(default)]
    bundles: Vec<RawBundle>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSurface {
    name: String,
    divisors: Vec<String>,
    pairing: Vec<Vec<String>>,
    omega_c1: Vec<String>,
    omega_c2_int: String,
    chi_top: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBundle {
    name: String,
    surface: String,
    rank: u32,
    c1: Vec<String>,
    c2_int: String,
}

fn catalog_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Catalog {
        path: path.into(),
        message: message.into(),
    }
}

fn field(path: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|_| catalog_error(path, format!("malformed rational {s:?}")))
}

fn vector(path: &str, xs: &[String]) -> Result<Vec<Rational>> {
    xs.iter()
        .enumerate()
        .map(|(i, s)| field(&format!("{path}[{i}]"), s))
        .collect()
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog> {
        if text.trim().is_empty() {
            return Ok(Catalog::default());
        }
        let raw: RawCatalog =
            serde_json::from_str(text).map_err(|e| catalog_error("$", e.to_string()))?;
        let mut catalog = Catalog::default();
        let mut names = HashSet::new();
        for (i, s) in raw.surfaces.iter().enumerate() {
            let path = format!("surfaces[{i}]");
            if !names.insert(s.name.clone()) {
                return Err(catalog_error(
                    format!("{path}.name"),
                    format!("duplicate surface {:?}", s.name),
                ));
            }
            let pairing = s
                .pairing
                .iter()
                .enumerate()
                .map(|(j, row)| vector(&format!("{path}.pairing[{j}]"), row))
                .collect::<Result<Vec<_>>>()?;
            let surface = SurfaceModel::new(
                s.name.clone(),
                s.divisors.clone(),
                pairing,
                vector(&format!("{path}.omega_c1"), &s.omega_c1)?,
                field(&format!("{path}.omega_c2_int"), &s.omega_c2_int)?,
                field(&format!("{path}.chi_top"), &s.chi_top)?,
            )
            .map_err(|e| catalog_error(&path, e.to_string()))?;
            catalog.surfaces.push(surface);
        }
        let mut bundle_names = HashSet::new();
        for (i, b) in raw.bundles.iter().enumerate() {
            let path = format!("bundles[{i}]");
            if !bundle_names.insert(b.name.clone()) {
                return Err(catalog_error(
                    format!("{path}.name"),
                    format!("duplicate bundle {:?}", b.name),
                ));
            }
            let surface = catalog.surface(&b.surface).map_err(|_| {
                catalog_error(
                    format!("{path}.surface"),
                    format!("bundle {:?} references unknown surface {:?}", b.name, b.surface),
                )
            })?;
            let bundle = BundleData {
                rank: b.rank,
                c1: vector(&format!("{path}.c1"), &b.c1)?,
                c2int: field(&format!("{path}.c2_int"), &b.c2_int)?,
            };
            bundle
                .validate_on(surface)
                .map_err(|e| catalog_error(&path, e.to_string()))?;
            catalog.bundles.push(NamedBundle {
                name: b.name.clone(),
                surface: b.surface.clone(),
                bundle,
            });
        }
        Ok(catalog)
    }

    /// Reads and validates a catalog file.
    pub fn load(path: impl AsRef<Path>) -> Result<Catalog> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .map_err(|e| catalog_error(path.display().to_string(), e.to_string()))?;
        Catalog::parse(&text)
    }

    pub fn builtin() -> Catalog {
        Catalog::parse(DEFAULT_CATALOG).expect("shipped catalog is valid")
    }

    /// The catalog named by `QUOT_CATALOG`, else the shipped one.
    pub fn from_env() -> Result<Catalog> {
        match std::env::var_os(CATALOG_ENV) {
            Some(p) => Catalog::load(p),
            None => Ok(Catalog::builtin()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.surfaces.is_empty() && self.bundles.is_empty()
    }

    pub fn surface(&self, name: &str) -> Result<&SurfaceModel> {
        self.surfaces
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::Unknown {
                kind: "surface",
                name: name.to_string(),
            })
    }

    /// Looks up a bundle by name on a given surface. Names are matched
    /// either exactly or as the part after `"<surface>/"`.
    pub fn bundle(&self, surface: &str, name: &str) -> Result<&BundleData> {
        self.bundles
            .iter()
            .find(|b| {
                b.surface == surface
                    && (b.name == name || b.name.strip_prefix(&format!("{surface}/")) == Some(name))
            })
            .map(|b| &b.bundle)
            .ok_or_else(|| Error::Unknown {
                kind: "bundle",
                name: format!("{surface}/{name}"),
            })
    }

    pub fn bundles_on<'a>(&'a self, surface: &'a str) -> impl Iterator<Item = &'a NamedBundle> + 'a {
        self.bundles.iter().filter(move |b| b.surface == surface)
    }

    pub fn line_bundles_on<'a>(&'a self, surface: &'a str) -> impl Iterator<Item = &'a NamedBundle> + 'a {
        self.bundles_on(surface).filter(|b| b.bundle.is_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn empty_catalogs() {
        assert!(Catalog::parse("").unwrap().is_empty());
        assert!(Catalog::parse("  \n").unwrap().is_empty());
        assert!(Catalog::parse("{}").unwrap().is_empty());
    }

    #[test]
    fn builtin_catalog_loads() {
        let c = Catalog::builtin();
        assert!(c.surfaces.len() >= 4);
        let p2 = c.surface("p2").unwrap();
        assert_eq!(p2.omega_c1, vec![rat(-3)]);
        for s in &c.surfaces {
            assert_eq!(s.chi_top, s.omega_c2_int, "{}", s.name);
            assert!(c.line_bundles_on(&s.name).count() >= 1, "{}", s.name);
        }
        assert!(c.bundle("zero", "any").unwrap().is_line());
    }

    #[test]
    fn missing_surface_named() {
        let text = r#"{"bundles": [{"name": "E", "surface": "nowhere", "rank": 2,
                       "c1": ["1"], "c2_int": "0"}]}"#;
        let err = Catalog::parse(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bundles[0].surface"), "{msg}");
        assert!(msg.contains("\"E\""), "{msg}");
    }

    #[test]
    fn malformed_rational_has_path() {
        let text = r#"{"surfaces": [{"name": "s", "divisors": ["H"], "pairing": [["1/0"]],
                        "omega_c1": ["0"], "omega_c2_int": "0", "chi_top": "0"}]}"#;
        let msg = Catalog::parse(text).unwrap_err().to_string();
        assert!(msg.contains("surfaces[0].pairing[0][0]"), "{msg}");
    }

    #[test]
    fn gauss_bonnet_violation_rejected() {
        let text = r#"{"surfaces": [{"name": "s", "divisors": ["H"], "pairing": [["1"]],
                        "omega_c1": ["0"], "omega_c2_int": "3", "chi_top": "4"}]}"#;
        let msg = Catalog::parse(text).unwrap_err().to_string();
        assert!(msg.contains("surfaces[0]"), "{msg}");
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let text = r#"{"surfaces": [{"name": "s", "divisors": ["H"], "pairing": [["1"]],
                        "omega_c1": ["0"], "omega_c2_int": "0", "chi_top": "0"}],
                       "bundles": [{"name": "L", "surface": "s", "rank": 1,
                        "c1": ["1", "2"], "c2_int": "0"}]}"#;
        assert!(Catalog::parse(text).is_err());
    }

    #[test]
    fn syntax_error_reported() {
        assert!(matches!(Catalog::parse("{"), Err(Error::Catalog { .. })));
    }

    #[test]
    fn bundle_lookup_by_short_name() {
        let c = Catalog::builtin();
        assert_eq!(c.bundle("p2", "O(1)").unwrap(), c.bundle("p2", "p2/O(1)").unwrap());
        assert!(c.bundle("p2", "nope").is_err());
    }
}
