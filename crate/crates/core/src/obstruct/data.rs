use crate::braid::{braid_profile, sub_braid, BraidWord};
use crate::diagram::{braid_closure, diagram_profile, LinkDiagram};
use crate::error::{Error, Result};
use crate::invariants::{nu_bounds_lenient, slc_pure, NuInterval};
use crate::linking::LinkingMatrix;
use std::collections::BTreeMap;

/// Sub-links get their own bounds only up to this many components.
const MAX_SUBLINK_COMPONENTS: usize = 10;

/// Inputs for the obstruction tests: what can be computed from a diagram or
/// braid, plus externally supplied scalars. Components are 0-based.
#[derive(Debug, Clone, Default)]
pub struct LinkData {
    pub components: usize,
    pub diagram: Option<LinkDiagram>,
    pub braid: Option<BraidWord>,
    pub linking: LinkingMatrix,
    /// Bounds on 2*nu keyed by sorted component subsets.
    pub nu: BTreeMap<Vec<usize>, NuInterval>,
    /// Upper bounds on sl_max keyed by sorted component subsets.
    pub sl_max_upper: BTreeMap<Vec<usize>, i64>,
    pub slc_upper: Option<i64>,
    pub chi4: Option<i64>,
    pub signature: Option<i64>,
    pub unlinking: Option<i64>,
    pub component_unknotting: Option<Vec<i64>>,
    /// Number of twist-knot prime summands per component (0 for an unknot).
    pub twist_summands: Option<Vec<u32>>,
    pub wsp: Option<i64>,
    pub ssp: Option<i64>,
    pub completely_split: Option<bool>,
    /// Components whose own sub-diagram has fewer than three crossings.
    pub unknotted: Vec<bool>,
    /// Where each input came from, keyed by field name.
    pub provenance: BTreeMap<String, String>,
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    if n > MAX_SUBLINK_COMPONENTS {
        let mut v: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        v.push((0..n).collect());
        return v;
    }
    (1u32..1 << n).map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect()).collect()
}

impl LinkData {
    pub fn new(linking: LinkingMatrix) -> Self {
        LinkData { components: linking.size(), unknotted: vec![false; linking.size()], linking, ..Default::default() }
    }

    pub fn from_diagram(d: &LinkDiagram) -> Result<Self> {
        let p = diagram_profile(d);
        let mut data = LinkData::new(p.linking_matrix);
        for set in subsets(d.num_components()) {
            let sub = if set.len() == d.num_components() { d.clone() } else { d.delete_components(&set)? };
            if set.len() == 1 {
                data.unknotted[set[0]] = sub.crossings().len() < 3;
            }
            data.nu.insert(set, nu_bounds_lenient(&sub));
        }
        data.diagram = Some(d.clone());
        data.provenance.insert("linking".into(), "computed from diagram".into());
        data.provenance.insert("nu".into(), "diagram bounds".into());
        Ok(data)
    }

    /// Data for the closure of `b`; braid self-linking numbers sharpen the lower bounds.
    pub fn from_braid(b: &BraidWord) -> Result<Self> {
        let mut data = LinkData::from_diagram(&braid_closure(b))?;
        for (set, nu) in data.nu.iter_mut() {
            if nu.exact {
                continue;
            }
            let sub = sub_braid(b, set)?;
            let lower2 = sub.self_linking() + set.len() as i64;
            if lower2 > nu.lower2 {
                nu.lower2 = lower2;
                nu.provenance.push(format!("braid bound sl = {}", sub.self_linking()));
                if nu.lower2 > nu.upper2 {
                    nu.upper_certified = false;
                }
            }
        }
        if braid_profile(b).is_pure {
            data.slc_upper = Some(slc_pure(b)?.value);
            data.provenance.insert("slc_upper".into(), "pure braid closure: sl_c = 2 lk - l".into());
        }
        data.braid = Some(b.clone());
        data.provenance.insert("nu".into(), "diagram bounds and braid self-linking".into());
        Ok(data)
    }

    fn note(&mut self, field: &str, source: &str) {
        self.provenance.insert(field.to_string(), source.to_string());
    }

    fn check_len(&self, len: usize, what: &str) -> Result<()> {
        if len != self.components {
            return Err(Error::BadParameter(format!(
                "{} has {} entries for {} components",
                what, len, self.components
            )));
        }
        Ok(())
    }

    pub fn with_chi4(mut self, v: i64, source: &str) -> Self {
        self.chi4 = Some(v);
        self.note("chi4", source);
        self
    }

    pub fn with_signature(mut self, v: i64, source: &str) -> Self {
        self.signature = Some(v);
        self.note("signature", source);
        self
    }

    pub fn with_unlinking(mut self, v: i64, source: &str) -> Self {
        self.unlinking = Some(v);
        self.note("unlinking", source);
        self
    }

    pub fn with_component_unknotting(mut self, v: Vec<i64>, source: &str) -> Result<Self> {
        self.check_len(v.len(), "component_unknotting")?;
        self.component_unknotting = Some(v);
        self.note("component_unknotting", source);
        Ok(self)
    }

    pub fn with_twist_summands(mut self, v: Vec<u32>, source: &str) -> Result<Self> {
        self.check_len(v.len(), "twist_summands")?;
        self.twist_summands = Some(v);
        self.note("twist_summands", source);
        Ok(self)
    }

    pub fn with_splitting(mut self, wsp: Option<i64>, ssp: Option<i64>, source: &str) -> Self {
        if wsp.is_some() {
            self.wsp = wsp;
            self.note("wsp", source);
        }
        if ssp.is_some() {
            self.ssp = ssp;
            self.note("ssp", source);
        }
        self
    }

    pub fn with_completely_split(mut self, v: bool, source: &str) -> Self {
        self.completely_split = Some(v);
        self.note("completely_split", source);
        self
    }

    pub fn with_sl_max_upper(mut self, set: Vec<usize>, v: i64, source: &str) -> Self {
        self.note(&format!("sl_max{:?}", set), source);
        self.sl_max_upper.insert(set, v);
        self
    }

    pub fn with_slc_upper(mut self, v: i64, source: &str) -> Self {
        self.slc_upper = Some(v);
        self.note("slc_upper", source);
        self
    }

    pub fn with_nu(mut self, set: Vec<usize>, nu: NuInterval) -> Self {
        self.nu.insert(set, nu);
        self
    }

    pub fn nu_of(&self, set: &[usize]) -> Option<&NuInterval> {
        self.nu.get(set)
    }

    pub fn whole(&self) -> Vec<usize> {
        (0..self.components).collect()
    }

    /// Unknotting number of component `i`, if known.
    pub fn component_u(&self, i: usize) -> Option<i64> {
        if let Some(u) = &self.component_unknotting {
            return Some(u[i]);
        }
        if let Some(t) = &self.twist_summands {
            // a twist knot has u = 1, and a sum of two has u = 2 since twist knots are prime
            if t[i] <= 2 {
                return Some(t[i] as i64);
            }
        }
        self.unknotted.get(i).copied().unwrap_or(false).then_some(0)
    }

    pub fn is_unknotted(&self, i: usize) -> bool {
        self.component_u(i) == Some(0)
    }

    /// Upper bound on sl_c: supplied, or 2 lk - l when every component is unknotted.
    pub fn slc_bound(&self) -> Option<(i64, String)> {
        if let Some(v) = self.slc_upper {
            let src = self.provenance.get("slc_upper").cloned().unwrap_or_default();
            return Some((v, src));
        }
        if self.components > 0 && (0..self.components).all(|i| self.is_unknotted(i)) {
            return Some((2 * self.linking.total() - self.components as i64, "unknotted components: 2 lk - l".into()));
        }
        None
    }

    /// Upper bound on sl_max of a sub-link: supplied, or -1 for an unknotted component.
    pub fn sl_max_bound(&self, set: &[usize]) -> Option<i64> {
        self.sl_max_upper.get(set).copied().or_else(|| (set.len() == 1 && self.is_unknotted(set[0])).then_some(-1))
    }

    /// Data for the mirror image. Scalars that change under mirroring are negated
    /// or dropped; bounds on nu are recomputed when a diagram is present.
    pub fn mirrored(&self) -> Result<Self> {
        let mut m = match &self.diagram {
            Some(d) => LinkData::from_diagram(&d.mirror())?,
            None => LinkData::new(self.linking.negated()),
        };
        m.unknotted = self.unknotted.clone();
        m.chi4 = self.chi4;
        m.signature = self.signature.map(|s| -s);
        m.unlinking = self.unlinking;
        m.component_unknotting = self.component_unknotting.clone();
        m.twist_summands = self.twist_summands.clone();
        m.wsp = self.wsp;
        m.ssp = self.ssp;
        m.completely_split = self.completely_split;
        for (k, v) in &self.provenance {
            m.provenance.entry(k.clone()).or_insert_with(|| v.clone());
        }
        m.provenance.remove("slc_upper");
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn borromean_from_braid() {
        let data = LinkData::from_braid(&"B3: 1 -2 1 -2 1 -2".parse().unwrap()).unwrap();
        assert_eq!(data.nu.len(), 7);
        assert_eq!(data.slc_upper, Some(-3));
        assert!(data.unknotted.iter().all(|&u| u));
        assert_eq!(data.nu_of(&[0, 1, 2]).unwrap().value2(), Some(2));
        let pair = data.nu_of(&[0, 1]).unwrap();
        assert_eq!((pair.lower2, pair.exact, pair.upper_certified), (0, false, false));
    }

    #[test]
    fn mirror_negates_linking() {
        let data = LinkData::from_braid(&"B2: 1 1 1 1".parse().unwrap()).unwrap().with_signature(-3, "test");
        let m = data.mirrored().unwrap();
        assert_eq!(m.linking.total(), -2);
        assert_eq!(m.signature, Some(3));
        assert_eq!(m.nu_of(&[0, 1]).unwrap().value2(), Some(-2));
    }

    #[test]
    fn component_u_sources() {
        let d = LinkData::new(LinkingMatrix::zeros(2)).with_twist_summands(vec![1, 2], "test").unwrap();
        assert_eq!((d.component_u(0), d.component_u(1)), (Some(1), Some(2)));
        assert!(LinkData::new(LinkingMatrix::zeros(2)).with_component_unknotting(vec![0], "test").is_err());
    }
}
