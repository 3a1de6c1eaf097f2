//! PD text format.
//!
//! ```text
//! X[4,2,3,1] X[2,4,1,3]; components: [4,3] [2,1]; signs: + +
//! ```
//!
//! Clauses are separated by `;` or newlines. The crossing list may be wrapped in
//! `PD[...]`. `components:` lists each component's arcs in order of travel and is
//! required. `signs:` is optional and gives one `+`/`-` per crossing, in order.

use super::{Arc, LinkDiagram};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedPd(msg.into())
}

/// Parses `[1,2,3] [4,5]`-style bracket groups.
fn bracket_groups(text: &str) -> Result<Vec<Vec<Arc>>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest.strip_prefix('[').ok_or_else(|| malformed(format!("expected `[` at {:?}", rest)))?;
        let close = inner.find(']').ok_or_else(|| malformed("unclosed `[`"))?;
        let group = inner[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Arc>().map_err(|_| malformed(format!("bad arc label {:?}", t))))
            .collect::<Result<Vec<_>>>()?;
        out.push(group);
        rest = inner[close + 1..].trim_start_matches(|c: char| c == ',' || c.is_whitespace());
    }
    Ok(out)
}

fn parse_crossings(text: &str, out: &mut Vec<[Arc; 4]>) -> Result<()> {
    let mut t = text.trim();
    if let Some(inner) = t.strip_prefix("PD[") {
        t = inner.strip_suffix(']').ok_or_else(|| malformed("unclosed `PD[`"))?;
    }
    let mut rest = t.trim();
    while !rest.is_empty() {
        let after = rest.strip_prefix('X').ok_or_else(|| malformed(format!("expected `X[` at {:?}", rest)))?;
        let groups_end = after.find(']').ok_or_else(|| malformed("unclosed `X[`"))?;
        let group = bracket_groups(&after[..=groups_end])?;
        let arcs: [Arc; 4] = group
            .into_iter()
            .next()
            .and_then(|g| g.try_into().ok())
            .ok_or_else(|| malformed("a crossing needs exactly four arcs"))?;
        out.push(arcs);
        rest = after[groups_end + 1..].trim_start_matches(|c: char| c == ',' || c.is_whitespace());
    }
    Ok(())
}

fn parse_signs(text: &str) -> Result<Vec<i8>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            _ => Err(malformed(format!("bad sign {:?}", t))),
        })
        .collect()
}

impl FromStr for LinkDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut pd = Vec::new();
        let mut components = None;
        let mut signs = None;
        for clause in text.split([';', '\n']).map(str::trim).filter(|c| !c.is_empty()) {
            if let Some(rest) = clause.strip_prefix("components:") {
                if components.replace(bracket_groups(rest)?).is_some() {
                    return Err(malformed("repeated components clause"));
                }
            } else if let Some(rest) = clause.strip_prefix("signs:") {
                if signs.replace(parse_signs(rest)?).is_some() {
                    return Err(malformed("repeated signs clause"));
                }
            } else {
                parse_crossings(clause, &mut pd)?;
            }
        }
        let components = components.ok_or_else(|| malformed("missing `components:` clause"))?;
        LinkDiagram::resolve(pd, components, signs)
    }
}

impl fmt::Display for LinkDiagram {
    /// Crossings sorted lexicographically; signs always emitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut xs = self.crossings.clone();
        xs.sort();
        let mut clauses = Vec::new();
        if !xs.is_empty() {
            clauses.push(
                xs.iter()
                    .map(|x| format!("X[{},{},{},{}]", x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3]))
                    .collect::<Vec<_>>()
                    .join(" "),
            );
        }
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| format!("[{}]", c.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        clauses.push(format!("components: {}", comps.join(" ")));
        if !xs.is_empty() {
            let signs: Vec<&str> = xs.iter().map(|x| if x.sign > 0 { "+" } else { "-" }).collect();
            clauses.push(format!("signs: {}", signs.join(" ")));
        }
        write!(f, "{}", clauses.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]; components: [1,2,3,4,5,6]; signs: - - -";
        let d: LinkDiagram = text.parse().unwrap();
        assert_eq!(d.to_string(), text);
        let again: LinkDiagram = d.to_string().parse().unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn accepts_pd_wrapper_and_newlines() {
        let d: LinkDiagram = "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]\ncomponents: [1,2,3,4,5,6]".parse().unwrap();
        assert_eq!(d.crossings().len(), 3);
        assert_eq!(d.writhe(), -3);
    }

    #[test]
    fn crossingless_unlink() {
        let d: LinkDiagram = "components: [1] [2]".parse().unwrap();
        assert_eq!(d.num_components(), 2);
        assert_eq!(d.to_string(), "components: [1] [2]");
    }

    #[test]
    fn syntax_errors() {
        for bad in [
            "X[1,2,3]; components: [1,2,3]",
            "X[1,2,3,4",
            "Y[1,2,3,4]; components: [1]",
            "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
            "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]; components: [1,2,3,4,5,6]; signs: + +",
            "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]; components: [1,2,3,4,5,6]; signs: + + x",
            "components: [1,2]",
        ] {
            assert!(bad.parse::<LinkDiagram>().is_err(), "{}", bad);
        }
    }
}
