//! Diagrams from horizontal crossing sequences: braid closures and plat closures.
//!
//! Positions are numbered 1..p from top to bottom. Each column crosses positions
//! `i` and `i+1`; a positive column has its over-strand running from the upper
//! left to the lower right (a positive crossing when both strands run rightwards).

use super::{Arc, Crossing, LinkDiagram};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Column {
    pub position: usize,
    pub positive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// Each right end joins the left end at the same position.
    Braid,
    /// Caps join positions (1,2), (3,4), ... at both ends.
    Plat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Right,
    Left,
}

// Ports of a column, listed counterclockwise.
const RU: usize = 0;
const LU: usize = 1;
const LL: usize = 2;
const RL: usize = 3;

fn through(port: usize) -> usize {
    match port {
        LU => RL,
        RL => LU,
        LL => RU,
        _ => LL,
    }
}

struct Event {
    column: usize,
    entry: usize,
    exit: usize,
}

/// Builds the diagram, starting one component at the left end of each given
/// position. For plat closures a start may also be `Direction::Left` at the right end.
pub fn build_diagram(
    positions: usize,
    columns: &[Column],
    closure: Closure,
    starts: &[(usize, Direction)],
) -> Result<LinkDiagram> {
    if positions == 0 {
        return Err(Error::BadParameter("at least one position required".into()));
    }
    if closure == Closure::Plat && !positions.is_multiple_of(2) {
        return Err(Error::BadParameter("plat closure needs an even number of positions".into()));
    }
    for c in columns {
        if c.position == 0 || c.position >= positions {
            return Err(Error::BadParameter(format!("column at position {} out of range", c.position)));
        }
    }
    let m = columns.len();
    let partner = |p: usize| if p % 2 == 1 { p + 1 } else { p - 1 };
    let touches = |j: usize, p: usize| columns[j].position == p || columns[j].position + 1 == p;
    // a walk state is (position, gap index 0..=m, direction)
    let mut visited = std::collections::HashSet::new();
    let mut seen_left = vec![false; positions + 1];
    let mut components: Vec<Vec<Event>> = Vec::new();
    for &(p0, d0) in starts {
        if p0 == 0 || p0 > positions {
            return Err(Error::BadParameter(format!("start position {} out of range", p0)));
        }
        let start = match d0 {
            Direction::Right => (p0, 0usize, Direction::Right),
            Direction::Left => (p0, m, Direction::Left),
        };
        if visited.contains(&start) {
            return Err(Error::BadParameter(format!("start at position {} lies on an earlier component", p0)));
        }
        let mut state = start;
        let mut events = Vec::new();
        loop {
            if visited.len() > 4 * (m + positions + 1) {
                return Err(Error::BadParameter("traversal does not close up".into()));
            }
            visited.insert(state);
            let (p, t, dir) = state;
            if t == 0 {
                seen_left[p] = true;
            }
            state = match dir {
                Direction::Right => match (t..m).find(|&j| touches(j, p)) {
                    Some(j) => {
                        let entry = if columns[j].position == p { LU } else { LL };
                        let exit = through(entry);
                        events.push(Event { column: j, entry, exit });
                        let q = if exit == RU { columns[j].position } else { columns[j].position + 1 };
                        (q, j + 1, Direction::Right)
                    }
                    None => match closure {
                        Closure::Braid => (p, 0, Direction::Right),
                        Closure::Plat => (partner(p), m, Direction::Left),
                    },
                },
                Direction::Left => match (0..t).rev().find(|&j| touches(j, p)) {
                    Some(j) => {
                        let entry = if columns[j].position == p { RU } else { RL };
                        let exit = through(entry);
                        events.push(Event { column: j, entry, exit });
                        let q = if exit == LU { columns[j].position } else { columns[j].position + 1 };
                        (q, j, Direction::Left)
                    }
                    None => match closure {
                        Closure::Braid => return Err(Error::BadParameter("braid strands run rightwards".into())),
                        Closure::Plat => (partner(p), 0, Direction::Right),
                    },
                },
            };
            if state == start {
                break;
            }
        }
        components.push(events);
    }
    if !(1..=positions).all(|p| seen_left[p]) {
        return Err(Error::BadParameter("start points do not cover every component".into()));
    }
    assemble(columns, components)
}

fn assemble(columns: &[Column], components: Vec<Vec<Event>>) -> Result<LinkDiagram> {
    let mut port_arc = vec![[0 as Arc; 4]; columns.len()];
    let mut under_entry = vec![None; columns.len()];
    let mut over_entry = vec![None; columns.len()];
    let mut comps = Vec::new();
    let mut next: Arc = 1;
    for events in &components {
        if events.is_empty() {
            comps.push(vec![next]);
            next += 1;
            continue;
        }
        let base = next;
        let k = events.len() as Arc;
        for (q, e) in events.iter().enumerate() {
            let q = q as Arc;
            port_arc[e.column][e.entry] = base + q;
            port_arc[e.column][e.exit] = base + (q + 1) % k;
            let over_ports = if columns[e.column].positive { [LU, RL] } else { [LL, RU] };
            let slot = if over_ports.contains(&e.entry) { &mut over_entry } else { &mut under_entry };
            if slot[e.column].replace(e.entry).is_some() {
                return Err(Error::BadParameter("strand visited twice".into()));
            }
        }
        comps.push((base..base + k).collect());
        next += k;
    }
    let mut crossings = Vec::with_capacity(columns.len());
    for j in 0..columns.len() {
        let (Some(a), Some(o)) = (under_entry[j], over_entry[j]) else {
            return Err(Error::BadParameter(format!("column {} not reached by any component", j + 1)));
        };
        let ports = [a, (a + 1) % 4, (a + 2) % 4, (a + 3) % 4];
        let arcs = ports.map(|p| port_arc[j][p]);
        let sign = if o == ports[3] { 1 } else { -1 };
        crossings.push(Crossing { arcs, sign });
    }
    LinkDiagram::new(crossings, comps)
}

/// Standard closure of a braid, one component per permutation cycle (ordered by minimal strand).
pub fn braid_closure(b: &BraidWord) -> LinkDiagram {
    let columns: Vec<Column> =
        b.letters().iter().map(|&l| Column { position: l.unsigned_abs() as usize, positive: l > 0 }).collect();
    let starts: Vec<(usize, Direction)> = b.component_cycles().iter().map(|c| (c[0], Direction::Right)).collect();
    build_diagram(b.strands(), &columns, Closure::Braid, &starts).expect("braid closures are always valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::diagram_profile;

    #[test]
    fn hopf_closure() {
        let d = braid_closure(&"B2: 1 1".parse().unwrap());
        assert_eq!(d.num_components(), 2);
        assert!(d.is_positive());
        let p = diagram_profile(&d);
        assert_eq!((p.crossings, p.seifert_circles, p.linking_matrix.total()), (2, 2, 1));
    }

    #[test]
    fn unknot_closure() {
        let d = braid_closure(&"B1:".parse().unwrap());
        assert!(d.crossings().is_empty());
        assert_eq!(d.components(), &[vec![1]]);
    }

    #[test]
    fn trefoil_closure_signs() {
        let d = braid_closure(&"B2: -1 -1 -1".parse().unwrap());
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.num_components(), 1);
        assert!(d.is_alternating());
    }

    #[test]
    fn plat_unknot() {
        let d = build_diagram(2, &[], Closure::Plat, &[(1, Direction::Right)]).unwrap();
        assert_eq!(d.num_components(), 1);
        assert!(d.crossings().is_empty());
    }

    #[test]
    fn plat_hopf() {
        // sigma_2^2 on four positions with caps gives a Hopf link
        let cols = [Column { position: 2, positive: true }; 2];
        let d = build_diagram(4, &cols, Closure::Plat, &[(1, Direction::Right), (4, Direction::Right)]).unwrap();
        assert_eq!(d.num_components(), 2);
        assert_eq!(diagram_profile(&d).linking_matrix.total().abs(), 1);
    }

    #[test]
    fn missing_start_is_rejected() {
        let cols = [Column { position: 2, positive: true }; 2];
        assert!(build_diagram(4, &cols, Closure::Plat, &[(1, Direction::Right)]).is_err());
    }
}
