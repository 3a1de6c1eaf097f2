//! Oriented link diagrams in planar-diagram (PD) form.
//!
//! A crossing `X[a,b,c,d]` lists arc labels counterclockwise starting from the
//! incoming under-arc `a`; `c` is the outgoing under-arc and `b`, `d` lie on the
//! over-strand. The crossing is positive when the over-strand runs from `d` to `b`.

mod builder;
mod pd;
mod seifert;

pub use builder::{braid_closure, build_diagram, Closure, Column, Direction};
pub use seifert::{
    diagram_profile, seifert_analysis, DiagramProfile, FibredVerdict, PairCount, SeifertAnalysis, SeifertGraph,
};

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

pub type Arc = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Crossing {
    pub arcs: [Arc; 4],
    /// +1 or -1.
    pub sign: i8,
}

impl Crossing {
    /// Slot at which the over-strand enters.
    pub fn over_in(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn over_out(&self) -> usize {
        if self.sign > 0 {
            1
        } else {
            3
        }
    }

    /// Whether the arc in `slot` ends (enters the crossing) there.
    pub fn is_head_slot(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in()
    }
}

/// Where an arc starts (tail) and ends (head): crossing index and slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcEnds {
    pub tail: (usize, usize),
    pub head: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<Arc>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Strand {
    Under,
    /// over-strand entering at slot 1 (negative crossing)
    OverFrom1,
    /// over-strand entering at slot 3 (positive crossing)
    OverFrom3,
}

impl LinkDiagram {
    /// Validates a diagram whose crossing signs are already known.
    pub fn new(crossings: Vec<Crossing>, components: Vec<Vec<Arc>>) -> Result<Self> {
        let pd: Vec<[Arc; 4]> = crossings.iter().map(|c| c.arcs).collect();
        let signs: Vec<i8> = crossings.iter().map(|c| c.sign).collect();
        Self::resolve(pd, components, Some(signs))
    }

    /// Builds a diagram from PD crossings and oriented arc cycles, deriving crossing
    /// signs. Optional `signs` disambiguate components whose direction along an
    /// over-strand cannot be read off the PD alone.
    pub fn resolve(pd: Vec<[Arc; 4]>, components: Vec<Vec<Arc>>, signs: Option<Vec<i8>>) -> Result<Self> {
        if let Some(s) = &signs {
            if s.len() != pd.len() {
                return Err(Error::MalformedPd(format!("{} signs for {} crossings", s.len(), pd.len())));
            }
            if s.iter().any(|&v| v != 1 && v != -1) {
                return Err(Error::MalformedPd("signs must be +1 or -1".into()));
            }
        }
        let mut degree: BTreeMap<Arc, usize> = BTreeMap::new();
        for x in &pd {
            for &a in x {
                *degree.entry(a).or_insert(0) += 1;
            }
        }
        if let Some((&arc, &count)) = degree.iter().find(|(_, &c)| c != 2) {
            return Err(Error::ArcDegree { arc, count });
        }
        let mut listed: BTreeMap<Arc, usize> = BTreeMap::new();
        for (ci, comp) in components.iter().enumerate() {
            if comp.is_empty() {
                return Err(Error::MalformedPd("empty component".into()));
            }
            for &a in comp {
                if listed.insert(a, ci).is_some() {
                    return Err(Error::MalformedPd(format!("arc {} listed twice in components", a)));
                }
                if !degree.contains_key(&a) && comp.len() != 1 {
                    return Err(Error::ArcDegree { arc: a, count: 0 });
                }
            }
        }
        if let Some(&a) = degree.keys().find(|a| !listed.contains_key(a)) {
            return Err(Error::MalformedPd(format!("arc {} missing from components clause", a)));
        }

        // One passage per consecutive arc pair; each must use a distinct crossing strand.
        let mut passages: Vec<Vec<(usize, Strand)>> = Vec::new();
        for comp in &components {
            if comp.len() == 1 && !degree.contains_key(&comp[0]) {
                continue;
            }
            for j in 0..comp.len() {
                let (a, b) = (comp[j], comp[(j + 1) % comp.len()]);
                let mut cands = Vec::new();
                for (c, x) in pd.iter().enumerate() {
                    let sign = signs.as_ref().map(|s| s[c]);
                    if x[0] == a && x[2] == b {
                        cands.push((c, Strand::Under));
                    }
                    if x[1] == a && x[3] == b && sign != Some(1) {
                        cands.push((c, Strand::OverFrom1));
                    }
                    if x[3] == a && x[1] == b && sign != Some(-1) {
                        cands.push((c, Strand::OverFrom3));
                    }
                }
                if cands.is_empty() {
                    return Err(Error::OrientationInconsistent(format!(
                        "no crossing carries arc {} into arc {}",
                        a, b
                    )));
                }
                passages.push(cands);
            }
        }
        let assignment = assign_passages(&passages, pd.len())?;
        let mut derived = vec![0i8; pd.len()];
        for &(c, s) in &assignment {
            match s {
                Strand::OverFrom1 => derived[c] = -1,
                Strand::OverFrom3 => derived[c] = 1,
                Strand::Under => {}
            }
        }
        let crossings = pd.into_iter().zip(derived).map(|(arcs, sign)| Crossing { arcs, sign }).collect();
        Ok(LinkDiagram { crossings, components })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<Arc>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.crossings.iter().all(|c| c.sign > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.crossings.iter().all(|c| c.sign < 0)
    }

    /// Component index of every arc.
    pub fn arc_components(&self) -> BTreeMap<Arc, usize> {
        let mut m = BTreeMap::new();
        for (i, comp) in self.components.iter().enumerate() {
            for &a in comp {
                m.insert(a, i);
            }
        }
        m
    }

    /// Tail and head of every arc that touches a crossing.
    pub fn arc_ends(&self) -> BTreeMap<Arc, ArcEnds> {
        let mut tails = BTreeMap::new();
        let mut heads = BTreeMap::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            for (s, &a) in x.arcs.iter().enumerate() {
                if x.is_head_slot(s) {
                    heads.insert(a, (ci, s));
                } else {
                    tails.insert(a, (ci, s));
                }
            }
        }
        tails.into_iter().map(|(a, tail)| (a, ArcEnds { tail, head: heads[&a] })).collect()
    }

    /// Components of the under- and over-strand at each crossing.
    pub fn crossing_components(&self) -> Vec<(usize, usize)> {
        let comp = self.arc_components();
        self.crossings.iter().map(|x| (comp[&x.arcs[0]], comp[&x.arcs[1]])).collect()
    }

    /// Mirror image: every crossing changed, signs negated.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.arcs;
                if x.sign > 0 {
                    Crossing { arcs: [d, a, b, c], sign: -1 }
                } else {
                    Crossing { arcs: [b, c, d, a], sign: 1 }
                }
            })
            .collect();
        LinkDiagram { crossings, components: self.components.clone() }
    }

    /// Reverses the orientation of the listed components (0-based).
    pub fn reverse(&self, set: &[usize]) -> Result<LinkDiagram> {
        let n = self.components.len();
        let mut rev = vec![false; n];
        for &i in set {
            if i >= n {
                return Err(Error::UnknownComponent(i));
            }
            rev[i] = true;
        }
        let comp = self.arc_components();
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let under = rev[comp[&x.arcs[0]]];
                let over = rev[comp[&x.arcs[1]]];
                let [a, b, c, d] = x.arcs;
                let arcs = if under { [c, d, a, b] } else { [a, b, c, d] };
                let sign = if under != over { -x.sign } else { x.sign };
                Crossing { arcs, sign }
            })
            .collect();
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if rev[i] {
                    // keep the first arc first so labels stay recognisable
                    let mut r: Vec<Arc> = c.iter().rev().copied().collect();
                    r.rotate_right(1);
                    r
                } else {
                    c.clone()
                }
            })
            .collect();
        LinkDiagram::new(crossings, components)
    }

    /// Mirror and/or reverse components in one call.
    pub fn transform(&self, mirror: bool, reverse: &[usize]) -> Result<LinkDiagram> {
        let d = self.reverse(reverse)?;
        Ok(if mirror { d.mirror() } else { d })
    }

    /// Keeps only the listed components (0-based, output in ascending order);
    /// arcs are spliced through dropped crossings and relabelled consecutively.
    pub fn delete_components(&self, keep: &[usize]) -> Result<LinkDiagram> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        let n = self.components.len();
        let mut kept = vec![false; n];
        for &i in keep {
            if i >= n {
                return Err(Error::UnknownComponent(i));
            }
            kept[i] = true;
        }
        let comp = self.arc_components();
        let keep_crossing: Vec<bool> =
            self.crossings.iter().map(|x| kept[comp[&x.arcs[0]]] && kept[comp[&x.arcs[1]]]).collect();
        let ends = self.arc_ends();
        let mut relabel: BTreeMap<Arc, Arc> = BTreeMap::new();
        let mut components = Vec::new();
        let mut next: Arc = 1;
        for (ci, c) in self.components.iter().enumerate() {
            if !kept[ci] {
                continue;
            }
            // passage after arc a survives iff its crossing survives
            let survives = |a: &Arc| ends.get(a).is_some_and(|e| keep_crossing[e.head.0]);
            let m = c.len();
            let Some(start) = (0..m).find(|&j| survives(&c[(j + m - 1) % m])) else {
                for &a in c {
                    relabel.insert(a, next);
                }
                components.push(vec![next]);
                next += 1;
                continue;
            };
            let mut arcs = vec![next];
            for k in 0..m {
                let a = c[(start + k) % m];
                relabel.insert(a, *arcs.last().unwrap());
                if k + 1 < m && survives(&a) {
                    next += 1;
                    arcs.push(next);
                }
            }
            next += 1;
            components.push(arcs);
        }
        let crossings = self
            .crossings
            .iter()
            .zip(&keep_crossing)
            .filter(|(_, &k)| k)
            .map(|(x, _)| Crossing { arcs: x.arcs.map(|a| relabel[&a]), sign: x.sign })
            .collect();
        LinkDiagram::new(crossings, components)
    }

    /// Relabels arcs 1, 2, ... along the components in order.
    pub fn canonical(&self) -> LinkDiagram {
        let mut relabel = BTreeMap::new();
        let mut next: Arc = 1;
        let components = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&a| {
                        relabel.insert(a, next);
                        next += 1;
                        next - 1
                    })
                    .collect()
            })
            .collect();
        let crossings =
            self.crossings.iter().map(|x| Crossing { arcs: x.arcs.map(|a| relabel[&a]), sign: x.sign }).collect();
        LinkDiagram { crossings, components }
    }

    /// Whether over and under passages alternate along every component.
    pub fn is_alternating(&self) -> bool {
        let ends = self.arc_ends();
        self.components.iter().all(|c| {
            let passes: Vec<bool> = c
                .iter()
                .filter_map(|a| ends.get(a))
                .map(|e| e.head.1 != 0) // true = over
                .collect();
            passes.is_empty() || (0..passes.len()).all(|j| passes[j] != passes[(j + 1) % passes.len()])
        })
    }
}

/// Assigns every passage a distinct crossing strand, requiring a unique solution.
fn assign_passages(passages: &[Vec<(usize, Strand)>], ncross: usize) -> Result<Vec<(usize, Strand)>> {
    fn key(c: usize, s: Strand) -> usize {
        2 * c + usize::from(s != Strand::Under)
    }
    fn search(
        passages: &[Vec<(usize, Strand)>],
        chosen: &mut Vec<Option<(usize, Strand)>>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<(usize, Strand)>>,
    ) {
        if found.len() >= 2 {
            return;
        }
        // most constrained open passage first
        let mut best: Option<(usize, Vec<(usize, Strand)>)> = None;
        for (p, cands) in passages.iter().enumerate() {
            if chosen[p].is_some() {
                continue;
            }
            let free: Vec<_> = cands.iter().copied().filter(|&(c, s)| !used[key(c, s)]).collect();
            if best.as_ref().is_none_or(|(_, b)| free.len() < b.len()) {
                let empty = free.is_empty();
                best = Some((p, free));
                if empty {
                    break;
                }
            }
        }
        let Some((p, free)) = best else {
            found.push(chosen.iter().map(|c| c.unwrap()).collect());
            return;
        };
        for (c, s) in free {
            used[key(c, s)] = true;
            chosen[p] = Some((c, s));
            search(passages, chosen, used, found);
            chosen[p] = None;
            used[key(c, s)] = false;
        }
    }
    let mut chosen = vec![None; passages.len()];
    let mut used = vec![false; 2 * ncross];
    let mut found = Vec::new();
    search(passages, &mut chosen, &mut used, &mut found);
    match found.len() {
        0 => Err(Error::OrientationInconsistent("components clause does not match the crossings".into())),
        1 => Ok(found.pop().unwrap()),
        _ => Err(Error::OrientationInconsistent("over-strand direction is ambiguous; add a `signs:` clause".into())),
    }
}
