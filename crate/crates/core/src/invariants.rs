//! Slice-torus bounds (stored doubled, as integers), the Bennequin chain,
//! concordance self-linking bounds and unlinking numbers of positive diagrams.

use crate::braid::{braid_linking_matrix, braid_profile, BraidWord};
use crate::diagram::{diagram_profile, DiagramProfile, LinkDiagram, SeifertGraph};
use crate::error::{Error, Result};
use serde::Serialize;

/// Integer bounds on 2*nu.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NuInterval {
    pub lower2: i64,
    pub upper2: i64,
    pub exact: bool,
    /// Whether `upper2` may be used as a certified bound. The diagram upper
    /// formula is only trusted when it agrees with its mirror image, which
    /// happens when l = l_s; see `nu_bounds`.
    pub upper_certified: bool,
    /// The upper formula evaluated as printed, kept even when superseded.
    pub verbatim_upper2: i64,
    pub provenance: Vec<String>,
}

impl NuInterval {
    pub fn exact(value2: i64, source: impl Into<String>) -> Self {
        NuInterval {
            lower2: value2,
            upper2: value2,
            exact: true,
            upper_certified: true,
            verbatim_upper2: value2,
            provenance: vec![source.into()],
        }
    }

    /// Exact 2*nu, if known.
    pub fn value2(&self) -> Option<i64> {
        self.exact.then_some(self.lower2)
    }

    /// Certified upper bound on 2*nu, if any.
    pub fn certified_upper2(&self) -> Option<i64> {
        self.upper_certified.then_some(self.upper2)
    }

    /// True when the printed upper formula falls below the certified lower bound.
    pub fn verbatim_conflict(&self) -> bool {
        self.verbatim_upper2 < self.lower2
    }
}

fn bounds_from_profile(p: &DiagramProfile) -> (i64, i64) {
    let (w, o, sp, sm) = (p.writhe, p.seifert_circles as i64, p.s_plus as i64, p.s_minus as i64);
    let (l, ls) = (p.components as i64, p.split_components as i64);
    (w - o + 2 * sp + l - 2 * ls, w + o - 2 * sm - l + 2 * ls)
}

/// Diagram bounds on 2*nu:
/// lower2 = w - o + 2 s+ + l - 2 l_s, upper2 = w + o - 2 s- - l + 2 l_s.
/// Homogeneous diagrams give the exact value lower2. On a non-homogeneous
/// diagram an upper bound below the lower bound is reported as an error.
pub fn nu_bounds(d: &LinkDiagram) -> Result<NuInterval> {
    let p = diagram_profile(d);
    let (lower2, verbatim_upper2) = bounds_from_profile(&p);
    if SeifertGraph::of(d).is_homogeneous() {
        return Ok(NuInterval {
            lower2,
            upper2: lower2,
            exact: true,
            upper_certified: true,
            verbatim_upper2,
            provenance: vec![format!("homogeneous diagram, {} crossings", p.crossings)],
        });
    }
    if verbatim_upper2 < lower2 {
        return Err(Error::FormulaInconsistency { lower2, upper2: verbatim_upper2 });
    }
    Ok(NuInterval {
        lower2,
        upper2: verbatim_upper2,
        exact: false,
        upper_certified: p.components == p.split_components,
        verbatim_upper2,
        provenance: vec![format!("non-homogeneous diagram, {} crossings", p.crossings)],
    })
}

/// Like `nu_bounds`, but an inconsistent upper bound is kept, marked uncertified.
pub fn nu_bounds_lenient(d: &LinkDiagram) -> NuInterval {
    match nu_bounds(d) {
        Ok(n) => n,
        Err(_) => {
            let p = diagram_profile(d);
            let (lower2, verbatim_upper2) = bounds_from_profile(&p);
            NuInterval {
                lower2,
                upper2: verbatim_upper2,
                exact: false,
                upper_certified: false,
                verbatim_upper2,
                provenance: vec![format!(
                    "non-homogeneous diagram, {} crossings; upper bound inconsistent",
                    p.crossings
                )],
            }
        }
    }
}

/// Braid lower bound: 2*nu - l >= sl(b).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidBound {
    pub self_linking: i64,
    pub components: usize,
}

impl BraidBound {
    pub fn lower2(&self) -> i64 {
        self.self_linking + self.components as i64
    }
}

pub fn nu_lower_from_braid(b: &BraidWord) -> BraidBound {
    BraidBound { self_linking: b.self_linking(), components: b.component_cycles().len() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub self_linking: i64,
    /// Bounds on 2*nu - l.
    pub nu_term_lower: i64,
    pub nu_term_upper: Option<i64>,
    pub minus_chi4: Option<i64>,
    /// Slack of sl <= 2nu - l (exact nu only).
    pub slack_braid: Option<i64>,
    /// Slack of 2nu - l <= -chi4 (exact nu and chi4 only).
    pub slack_chi4: Option<i64>,
}

/// Checks sl(b) <= 2nu - l <= -chi4 against the interval for the closure of `b`.
/// `chi4` is the slice Euler characteristic itself.
pub fn bennequin_chain(b: &BraidWord, nu: &NuInterval, chi4: Option<i64>) -> Result<ChainReport> {
    let l = b.component_cycles().len() as i64;
    let sl = b.self_linking();
    let lo = nu.lower2 - l;
    let hi = nu.certified_upper2().map(|u| u - l);
    if let Some(hi) = hi {
        if sl > hi {
            return Err(Error::ChainViolation(format!("sl = {} exceeds 2nu - l <= {}", sl, hi)));
        }
    }
    let minus_chi4 = chi4.map(|c| -c);
    if let Some(m) = minus_chi4 {
        if lo > m {
            return Err(Error::ChainViolation(format!("2nu - l >= {} exceeds -chi4 = {}", lo, m)));
        }
    }
    Ok(ChainReport {
        self_linking: sl,
        nu_term_lower: lo,
        nu_term_upper: hi,
        minus_chi4,
        slack_braid: nu.exact.then_some(lo - sl),
        slack_chi4: match (nu.exact, minus_chi4) {
            (true, Some(m)) => Some(m - lo),
            _ => None,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlcRecord {
    pub value: i64,
    pub linking_total: i64,
    pub components: usize,
}

/// Concordance self-linking number of a pure braid closure: 2 lk - l.
pub fn slc_pure(b: &BraidWord) -> Result<SlcRecord> {
    if !braid_profile(b).is_pure {
        return Err(Error::NotPure);
    }
    let lk = braid_linking_matrix(b)?.total();
    let l = b.strands();
    let value = 2 * lk - l as i64;
    assert_eq!(value, b.self_linking(), "pure braid: sl must equal 2 lk - l");
    Ok(SlcRecord { value, linking_total: lk, components: l })
}

/// Upper bound on sl_c for one block of a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SlcPart {
    pub upper: i64,
    pub components: usize,
}

impl SlcPart {
    /// An unknot: sl_c = -1.
    pub fn unknot() -> Self {
        SlcPart { upper: -1, components: 1 }
    }
}

/// sl_c(L) <= sum of block bounds + 2 * (linking between blocks).
pub fn slc_upper(parts: &[SlcPart], lk_between: i64) -> i64 {
    parts.iter().map(|p| p.upper).sum::<i64>() + 2 * lk_between
}

/// Summary numbers of a positive diagram, either computed or transcribed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositiveDiagramStats {
    pub crossings: i64,
    pub seifert_circles: i64,
    /// Sum over components of the Seifert circles of the one-component sub-diagrams.
    pub component_circles: i64,
    pub components: i64,
    pub linking_total: i64,
    pub source: String,
}

impl PositiveDiagramStats {
    pub fn from_diagram(d: &LinkDiagram) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::NotPositiveDiagram);
        }
        let p = diagram_profile(d);
        let mut component_circles = 0;
        for i in 0..d.num_components() {
            component_circles += diagram_profile(&d.delete_components(&[i])?).seifert_circles as i64;
        }
        Ok(PositiveDiagramStats {
            crossings: p.crossings as i64,
            seifert_circles: p.seifert_circles as i64,
            component_circles,
            components: p.components as i64,
            linking_total: p.linking_matrix.total(),
            source: "computed from diagram".into(),
        })
    }

    /// Exact 2*nu of the link: x - o + l.
    pub fn nu2(&self) -> i64 {
        self.crossings - self.seifert_circles + self.components
    }

    /// Sum of exact 2*nu over the components: self-crossings - sum o_i + l.
    pub fn component_nu2(&self) -> i64 {
        self.crossings - 2 * self.linking_total - self.component_circles + self.components
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UnlinkingMode {
    /// u = (x - o + l)/2, for positive-braid links.
    Whole,
    /// u = (x - sum o_i + l)/2, for positive links with positive-braid components.
    PerComponent,
}

fn halve(num: i64) -> Result<i64> {
    if num % 2 != 0 {
        return Err(Error::Parity(num));
    }
    Ok(num / 2)
}

pub fn positive_unlinking_stats(s: &PositiveDiagramStats, mode: UnlinkingMode) -> Result<i64> {
    match mode {
        UnlinkingMode::Whole => halve(s.crossings - s.seifert_circles + s.components),
        UnlinkingMode::PerComponent => halve(s.crossings - s.component_circles + s.components),
    }
}

pub fn positive_unlinking(d: &LinkDiagram, mode: UnlinkingMode) -> Result<i64> {
    positive_unlinking_stats(&PositiveDiagramStats::from_diagram(d)?, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    fn closure(s: &str) -> LinkDiagram {
        braid_closure(&s.parse().unwrap())
    }

    #[test]
    fn trefoil_exact() {
        let n = nu_bounds(&closure("B2: 1 1 1")).unwrap();
        assert!(n.exact);
        assert_eq!((n.lower2, n.upper2, n.verbatim_upper2), (2, 2, 2));
    }

    #[test]
    fn hopf_exact_with_logged_upper_conflict() {
        let n = nu_bounds(&closure("B2: 1 1")).unwrap();
        assert_eq!(n.value2(), Some(2));
        assert_eq!(n.verbatim_upper2, 0);
        assert!(n.verbatim_conflict());
    }

    #[test]
    fn figure_eight_is_zero() {
        let d: LinkDiagram =
            "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]; components: [1,2,3,4,5,6,7,8]".parse().unwrap();
        assert_eq!(d.writhe(), 0);
        assert_eq!(nu_bounds(&d).unwrap().value2(), Some(0));
    }

    #[test]
    fn braid_lower_bounds() {
        assert_eq!(nu_lower_from_braid(&"B2: 1 1 1".parse().unwrap()).self_linking, 1);
        let b = nu_lower_from_braid(&"B3: 1 -2 1 -2 1 -2".parse().unwrap());
        assert_eq!((b.self_linking, b.components), (-3, 3));
        let u = nu_lower_from_braid(&"B1:".parse().unwrap());
        assert_eq!((u.self_linking, u.lower2()), (-1, 0));
    }

    #[test]
    fn chains() {
        let b: BraidWord = "B2: 1 1 1".parse().unwrap();
        let n = nu_bounds(&braid_closure(&b)).unwrap();
        let r = bennequin_chain(&b, &n, Some(-1)).unwrap();
        assert_eq!((r.slack_braid, r.slack_chi4), (Some(0), Some(0)));

        let neg: BraidWord = "B2: -1 -1".parse().unwrap();
        let n = nu_bounds(&braid_closure(&neg)).unwrap();
        assert_eq!(n.value2(), Some(0));
        let r = bennequin_chain(&neg, &n, None).unwrap();
        assert_eq!((r.self_linking, r.nu_term_lower, r.slack_braid), (-4, -2, Some(2)));

        let unknot: BraidWord = "B1:".parse().unwrap();
        let r = bennequin_chain(&unknot, &NuInterval::exact(0, "unknot"), Some(1)).unwrap();
        assert_eq!((r.self_linking, r.nu_term_lower, r.minus_chi4), (-1, -1, Some(-1)));

        assert!(matches!(bennequin_chain(&b, &NuInterval::exact(2, "test"), Some(1)), Err(Error::ChainViolation(_))));
    }

    #[test]
    fn pure_braid_slc() {
        assert_eq!(slc_pure(&"B3: 1 -2 1 -2 1 -2".parse().unwrap()).unwrap().value, -3);
        assert_eq!(slc_pure(&"B2: 1 1 1 1".parse().unwrap()).unwrap().value, 2);
        assert_eq!(slc_pure(&"B2: 1".parse().unwrap()), Err(Error::NotPure));
    }

    #[test]
    fn slc_upper_bounds() {
        assert_eq!(slc_upper(&[SlcPart::unknot(), SlcPart::unknot()], 0), -2);
        assert_eq!(slc_upper(&[SlcPart::unknot(); 3], 0), -3);
        assert_eq!(slc_upper(&[SlcPart { upper: 5, components: 2 }], 0), 5);
    }

    #[test]
    fn unlinking_numbers() {
        assert_eq!(positive_unlinking(&closure("B2: 1 1 1 1"), UnlinkingMode::Whole).unwrap(), 2);
        assert_eq!(positive_unlinking(&closure("B2: 1 1"), UnlinkingMode::Whole).unwrap(), 1);
        assert_eq!(positive_unlinking(&closure("B2: -1 -1"), UnlinkingMode::Whole), Err(Error::NotPositiveDiagram));
        let twelve = PositiveDiagramStats {
            crossings: 12,
            seifert_circles: 6,
            component_circles: 4,
            components: 2,
            linking_total: 4,
            source: "test".into(),
        };
        assert_eq!(positive_unlinking_stats(&twelve, UnlinkingMode::PerComponent).unwrap(), 5);
        assert_eq!((twelve.nu2(), twelve.component_nu2()), (8, 2));
    }
}
