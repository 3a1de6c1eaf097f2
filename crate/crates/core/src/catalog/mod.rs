//! JSON Lines link catalogs, built-in examples and the positivity table.
//!
//! Each non-blank line holds one entry, schema `"v1"`:
//!
//! | field | type | meaning |
//! |---|---|---|
//! | `schema` | string | always `"v1"` |
//! | `name` | string | unique, e.g. `L6a1{1}` |
//! | `orientation` | string | orientation variant label |
//! | `components` | int | number of components |
//! | `braid` | string | braid word, e.g. `B2: 1 1` |
//! | `pd` | string | PD text (see `diagram`) |
//! | `linking_matrix` | int matrix | in PD component order |
//! | `signature`, `chi4`, `unlinking`, `wsp`, `ssp` | int | scalar invariants |
//! | `component_unknotting` | int list | u(K_i) per component |
//! | `component_types` | string list | knot type per component, e.g. `3_1` |
//! | `twist_summands` | int list | twist-knot prime summands per component |
//! | `sl_max_upper` | map | `"1,2"` (1-based components) to an upper bound on sl_max |
//! | `positive_expected`, `braid_positive_expected` | bool | reference classification |
//! | `completely_split`, `fibred` | bool | flags |
//! | `source_annotations` | string list | fallback marks supplied by the source (`sigma`, `c`, `f`) |
//! | `provenance` | map | field name to source note |
//!
//! At least one of `braid` and `pd` is required. Unknown fields are kept.

mod examples;
mod table;

pub use examples::{builtin_example, builtin_names, twelve_crossing_stats, Example};
pub use table::{analyze_entry, render_table, table_rows, EntryAnalysis, TableFormat, TableRow};

use crate::braid::BraidWord;
use crate::diagram::{diagram_profile, LinkDiagram};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

pub const SCHEMA: &str = "v1";

/// The bundled catalog of the 44 prime links with fewer than eight crossings.
pub const BUNDLED_CATALOG: &str = include_str!("../../data/small_links.jsonl");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub schema: String,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<String>,
    pub components: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linking_matrix: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi4: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unlinking: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component_unknotting: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component_types: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist_summands: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sl_max_upper: Option<BTreeMap<String, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wsp: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ssp: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive_expected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid_positive_expected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completely_split: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibred: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub source_annotations: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub provenance: BTreeMap<String, String>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl CatalogEntry {
    pub fn parsed_braid(&self) -> Result<Option<BraidWord>> {
        self.braid.as_deref().map(str::parse).transpose()
    }

    pub fn parsed_pd(&self) -> Result<Option<LinkDiagram>> {
        self.pd.as_deref().map(str::parse).transpose()
    }

    /// The diagram used for analysis: the PD if present, else the braid closure.
    pub fn diagram(&self) -> Result<LinkDiagram> {
        match (self.parsed_pd()?, self.parsed_braid()?) {
            (Some(d), _) => Ok(d),
            (None, Some(b)) => Ok(crate::diagram::braid_closure(&b)),
            (None, None) => Err(Error::MissingInput(format!("{}: neither braid nor PD", self.name))),
        }
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.schema != SCHEMA {
            return Err(format!("unsupported schema {:?}", self.schema));
        }
        if self.braid.is_none() && self.pd.is_none() {
            return Err("entry needs a braid or a PD".into());
        }
        let n = self.components;
        if let Some(b) = self.parsed_braid().map_err(|e| e.to_string())? {
            let c = b.component_cycles().len();
            if c != n {
                return Err(format!("braid closes to {} components, expected {}", c, n));
            }
        }
        if let Some(d) = self.parsed_pd().map_err(|e| e.to_string())? {
            if d.num_components() != n {
                return Err(format!("PD has {} components, expected {}", d.num_components(), n));
            }
            if let Some(lk) = &self.linking_matrix {
                if diagram_profile(&d).linking_matrix.rows() != lk.as_slice() {
                    return Err("linking_matrix disagrees with the PD".into());
                }
            }
        }
        let lens = [
            ("linking_matrix", self.linking_matrix.as_ref().map(Vec::len)),
            ("component_unknotting", self.component_unknotting.as_ref().map(Vec::len)),
            ("component_types", self.component_types.as_ref().map(Vec::len)),
            ("twist_summands", self.twist_summands.as_ref().map(Vec::len)),
        ];
        for (field, len) in lens {
            if let Some(len) = len {
                if len != n {
                    return Err(format!("{} has {} entries, expected {}", field, len, n));
                }
            }
        }
        if let Some(lk) = &self.linking_matrix {
            crate::linking::LinkingMatrix::from_rows(lk.clone()).map_err(|e| e.to_string())?;
        }
        if let Some(m) = &self.sl_max_upper {
            for key in m.keys() {
                parse_component_set(n, key)?;
            }
        }
        Ok(())
    }
}

/// Parses a 1-based component list such as `"1,3"` into sorted 0-based indices.
pub fn parse_component_set(n: usize, key: &str) -> std::result::Result<Vec<usize>, String> {
    let mut set = BTreeSet::new();
    for t in key.split(',').map(str::trim) {
        let c: usize = t.parse().map_err(|_| format!("bad component label {:?}", t))?;
        if c == 0 || c > n {
            return Err(format!("component {} out of range", c));
        }
        set.insert(c - 1);
    }
    Ok(set.into_iter().collect())
}

/// Parses catalog text; blank lines are skipped, line numbers are 1-based.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    let mut names = BTreeSet::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let schema = |msg: String| Error::Schema { line: i + 1, msg };
        let entry: CatalogEntry = serde_json::from_str(line).map_err(|e| schema(e.to_string()))?;
        entry.validate().map_err(|m| schema(format!("{}: {}", entry.name, m)))?;
        if !names.insert(entry.name.clone()) {
            return Err(Error::DuplicateName(entry.name));
        }
        entries.push(entry);
    }
    Ok(entries)
}

pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
    parse_catalog(&text)
}

pub fn serialize_catalog(entries: &[CatalogEntry]) -> String {
    entries.iter().map(|e| serde_json::to_string(e).expect("catalog entries serialize") + "\n").collect()
}

/// The bundled catalog.
pub fn bundled_catalog() -> Vec<CatalogEntry> {
    parse_catalog(BUNDLED_CATALOG).expect("bundled catalog is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_catalog_loads() {
        let entries = bundled_catalog();
        assert_eq!(entries.len(), 44);
        let again = parse_catalog(&serialize_catalog(&entries)).unwrap();
        assert_eq!(again, entries);
    }

    #[test]
    fn empty_and_invalid() {
        assert!(parse_catalog("").unwrap().is_empty());
        let err = parse_catalog("\n{\"schema\":\"v1\",\"name\":\"x\",\"components\":1}").unwrap_err();
        assert!(matches!(err, Error::Schema { line: 2, .. }), "{}", err);
        let dup = "{\"schema\":\"v1\",\"name\":\"x\",\"components\":1,\"braid\":\"B1:\"}\n".repeat(2);
        assert_eq!(parse_catalog(&dup).unwrap_err(), Error::DuplicateName("x".into()));
        let wrong = "{\"schema\":\"v1\",\"name\":\"x\",\"components\":2,\"braid\":\"B2: 1\"}";
        assert!(matches!(parse_catalog(wrong), Err(Error::Schema { line: 1, .. })));
    }

    #[test]
    fn unknown_fields_survive() {
        let line = "{\"schema\":\"v1\",\"name\":\"x\",\"components\":1,\"braid\":\"B1:\",\"note\":{\"a\":1}}";
        let entries = parse_catalog(line).unwrap();
        assert_eq!(entries[0].extra["note"]["a"], 1);
        assert_eq!(serialize_catalog(&entries).trim_end(), line);
    }
}
