use super::{parse_component_set, CatalogEntry};
use crate::diagram::{diagram_profile, seifert_analysis, DiagramProfile};
use crate::error::{Error, Result};
use crate::linking::ComponentPartition;
use crate::obstruct::{
    check_concordance_qp, check_positive, check_positive_braid, check_qp, LinkData, ObstructionReport, Partitions,
};
use serde::Serialize;
use std::fmt;

// Prime knots with unknotting number one that are twist knots.
const TWIST_KNOTS: &[&str] = &["3_1", "4_1", "5_2", "6_1", "7_2", "8_1"];

fn twist_summands(types: &[String]) -> Option<Vec<u32>> {
    types
        .iter()
        .map(|t| {
            let base = t.trim_end_matches(['+', '-', '*']);
            if base == "0_1" {
                Some(0)
            } else {
                base.split('#').all(|s| TWIST_KNOTS.contains(&s.trim())).then(|| base.split('#').count() as u32)
            }
        })
        .collect()
}

impl CatalogEntry {
    fn source(&self, field: &str) -> String {
        self.provenance.get(field).cloned().unwrap_or_else(|| format!("catalog entry {}", self.name))
    }

    /// Diagram-computed data merged with the entry's scalars.
    pub fn link_data(&self) -> Result<LinkData> {
        let mut data = match (self.pd.is_some(), self.parsed_braid()?) {
            (false, Some(b)) => LinkData::from_braid(&b)?,
            _ => LinkData::from_diagram(&self.diagram()?)?,
        };
        if let Some(v) = self.chi4 {
            data = data.with_chi4(v, &self.source("chi4"));
        }
        if let Some(v) = self.signature {
            data = data.with_signature(v, &self.source("signature"));
        }
        if let Some(v) = self.unlinking {
            data = data.with_unlinking(v, &self.source("unlinking"));
        }
        if let Some(v) = &self.component_unknotting {
            data = data.with_component_unknotting(v.clone(), &self.source("component_unknotting"))?;
        }
        if let Some(v) = &self.twist_summands {
            data = data.with_twist_summands(v.clone(), &self.source("twist_summands"))?;
        } else if let Some(v) = self.component_types.as_deref().and_then(twist_summands) {
            data = data.with_twist_summands(v, "derived from component_types")?;
        }
        data = data.with_splitting(self.wsp, None, &self.source("wsp"));
        data = data.with_splitting(None, self.ssp, &self.source("ssp"));
        if let Some(v) = self.completely_split {
            data = data.with_completely_split(v, &self.source("completely_split"));
        }
        for (key, v) in self.sl_max_upper.iter().flatten() {
            let set = parse_component_set(self.components, key).map_err(Error::BadParameter)?;
            data = data.with_sl_max_upper(set, *v, &self.source("sl_max_upper"));
        }
        Ok(data)
    }
}

/// Fallback criteria noted next to a ✗ in the P or BP column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Annotation {
    /// Signature sign and linking matrix.
    #[serde(rename = "sigma")]
    Sigma,
    /// Component positivity and linking matrix.
    #[serde(rename = "c")]
    Components,
    /// Not fibred.
    #[serde(rename = "f")]
    Fibred,
}

impl Annotation {
    fn symbol(self) -> &'static str {
        match self {
            Annotation::Sigma => "σ",
            Annotation::Components => "c",
            Annotation::Fibred => "f",
        }
    }
}

/// Whether an obstruction test fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mark {
    NotApplicable,
    Fired,
    NotFired,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mark::NotApplicable => f.write_str("—"),
            Mark::Fired => f.write_str("✓"),
            Mark::NotFired => f.write_str("✗"),
        }
    }
}

fn flag(b: Option<bool>, notes: &[Annotation]) -> String {
    let base = match b {
        Some(true) => "✓",
        Some(false) => "✗",
        None => "—",
    };
    match notes {
        [] => base.to_string(),
        [one] => format!("{}^{}", base, one.symbol()),
        many => format!("{}^{{{}}}", base, many.iter().map(|x| x.symbol()).collect::<Vec<_>>().join(",")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub positive: Option<bool>,
    /// Fallback criteria behind a ✗ in the P column when the positivity test did not fire.
    pub positive_notes: Vec<Annotation>,
    pub positive_obstructed: Mark,
    pub braid_positive: Option<bool>,
    pub braid_positive_notes: Vec<Annotation>,
    pub braid_positive_obstructed: Mark,
}

impl TableRow {
    pub fn cells(&self) -> [String; 5] {
        [
            self.name.clone(),
            flag(self.positive, &self.positive_notes),
            self.positive_obstructed.to_string(),
            flag(self.braid_positive, &self.braid_positive_notes),
            self.braid_positive_obstructed.to_string(),
        ]
    }
}

#[derive(Debug, Clone)]
pub struct EntryAnalysis {
    pub name: String,
    pub profile: DiagramProfile,
    /// Labelled reports in a fixed order.
    pub reports: Vec<(String, ObstructionReport)>,
    pub row: TableRow,
}

impl EntryAnalysis {
    pub fn report(&self, label: &str) -> Option<&ObstructionReport> {
        self.reports.iter().find(|(l, _)| l == label).map(|(_, r)| r)
    }
}

fn skip_missing(r: Result<ObstructionReport>) -> Result<Option<ObstructionReport>> {
    match r {
        Ok(r) => Ok(Some(r)),
        Err(Error::MissingInput(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// A linking number or a component's nu is certified negative.
fn component_fallback(data: &LinkData) -> bool {
    data.linking.min_entry().is_some_and(|m| m < 0)
        || (0..data.components).any(|i| data.nu_of(&[i]).and_then(|n| n.certified_upper2()).is_some_and(|u| u < 0))
}

/// Runs every applicable test on the entry and its mirror image.
pub fn analyze_entry(e: &CatalogEntry) -> Result<EntryAnalysis> {
    let data = e.link_data()?;
    let mirror = data.mirrored()?;
    let d = data.diagram.clone().expect("catalog data carries a diagram");
    let profile = diagram_profile(&d);
    let mut reports = Vec::new();
    if data.components <= 10 {
        reports.push(("concordance-qp".to_string(), check_concordance_qp(&data, &Partitions::All)?));
    }
    if data.components > 1 {
        reports.push(("qp".to_string(), check_qp(&data, &ComponentPartition::singletons(data.components))?));
    }
    let pos = skip_missing(check_positive(&data))?;
    let pos_mirror = skip_missing(check_positive(&mirror))?;
    if let Some(r) = &pos {
        reports.push(("positive".to_string(), r.clone()));
    }
    if let Some(r) = &pos_mirror {
        reports.push(("positive-mirror".to_string(), r.clone()));
    }
    let positive_side = if d.is_positive() {
        Some(("positive-braid", &data))
    } else if d.is_negative() {
        Some(("positive-braid-mirror", &mirror))
    } else {
        None
    };
    let mut not_fibred = false;
    if let Some((label, side)) = positive_side {
        reports.push((label.to_string(), check_positive_braid(side)?));
        not_fibred = !seifert_analysis(side.diagram.as_ref().expect("diagram present")).reduced_is_tree;
    }

    let source_note = |tag: &str| e.source_annotations.iter().any(|a| a == tag);
    let mut positive_notes = Vec::new();
    let positive_obstructed = if e.positive_expected == Some(true) {
        Mark::NotApplicable
    } else if pos.as_ref().is_some_and(|r| r.is_violated()) && pos_mirror.as_ref().is_some_and(|r| r.is_violated()) {
        Mark::Fired
    } else {
        if source_note("sigma") {
            positive_notes.push(Annotation::Sigma);
        }
        if source_note("c") || (component_fallback(&data) && component_fallback(&mirror)) {
            positive_notes.push(Annotation::Components);
        }
        Mark::NotFired
    };
    let mut braid_positive_notes = Vec::new();
    let braid_positive_obstructed = if e.positive_expected == Some(true) && e.braid_positive_expected == Some(false) {
        if reports.iter().any(|(l, r)| l.starts_with("positive-braid") && r.is_violated()) {
            Mark::Fired
        } else {
            if not_fibred || source_note("f") {
                braid_positive_notes.push(Annotation::Fibred);
            }
            Mark::NotFired
        }
    } else {
        Mark::NotApplicable
    };
    let row = TableRow {
        name: e.name.clone(),
        positive: e.positive_expected,
        positive_notes,
        positive_obstructed,
        braid_positive: e.braid_positive_expected,
        braid_positive_notes,
        braid_positive_obstructed,
    };
    Ok(EntryAnalysis { name: e.name.clone(), profile, reports, row })
}

pub fn table_rows(entries: &[CatalogEntry]) -> Result<Vec<EntryAnalysis>> {
    entries.iter().map(analyze_entry).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
}

pub const HEADERS: [&str; 5] = ["Name", "P", "P-obstructed", "BP", "BP-obstructed"];

/// Renders rows in the given order.
pub fn render_table(rows: &[TableRow], format: TableFormat) -> String {
    let cells: Vec<[String; 5]> = rows.iter().map(TableRow::cells).collect();
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str(&HEADERS.join(","));
            out.push('\n');
            for c in &cells {
                out.push_str(&c.join(","));
                out.push('\n');
            }
        }
        TableFormat::Text => {
            let mut width = HEADERS.map(|h| h.chars().count());
            for c in &cells {
                for (w, s) in width.iter_mut().zip(c) {
                    *w = (*w).max(s.chars().count());
                }
            }
            let line = |row: [&str; 5]| {
                let padded: Vec<String> =
                    row.iter().zip(width).map(|(s, w)| format!("{}{}", s, " ".repeat(w - s.chars().count()))).collect();
                padded.join(" | ").trim_end().to_string() + "\n"
            };
            out.push_str(&line(HEADERS));
            let rule: Vec<String> = width.iter().map(|w| "-".repeat(*w)).collect();
            out.push_str(&(rule.join("-+-") + "\n"));
            for c in &cells {
                out.push_str(&line([&c[0], &c[1], &c[2], &c[3], &c[4]]));
            }
        }
    }
    out
}
