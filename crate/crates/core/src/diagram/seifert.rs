//! Oriented resolution statistics and the Seifert graph.

use super::{Arc, LinkDiagram};
use crate::linking::LinkingMatrix;
use petgraph::unionfind::UnionFind;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub i: usize,
    pub j: usize,
    pub positive: usize,
    pub negative: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramProfile {
    /// Number of components (l).
    pub components: usize,
    /// Number of crossings (x).
    pub crossings: usize,
    pub writhe: i64,
    /// Seifert circles (o).
    pub seifert_circles: usize,
    pub s_plus: usize,
    pub s_minus: usize,
    /// Connected pieces after flattening every crossing (l_s).
    pub split_components: usize,
    pub mixed: Vec<PairCount>,
    pub linking_matrix: LinkingMatrix,
    pub is_positive: bool,
    pub is_alternating: bool,
    pub is_simply_linked: bool,
    pub is_connected: bool,
}

/// Seifert circles (as union-find over arc indices) plus the circle pair joined at each crossing.
pub struct SeifertGraph {
    pub vertices: usize,
    /// (circle, circle, sign) per crossing.
    pub edges: Vec<(usize, usize, i8)>,
}

impl SeifertGraph {
    pub fn of(d: &LinkDiagram) -> SeifertGraph {
        let index: BTreeMap<Arc, usize> = d.components().iter().flatten().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut uf = UnionFind::new(index.len());
        for x in d.crossings() {
            uf.union(index[&x.arcs[0]], index[&x.arcs[x.over_out()]]);
            uf.union(index[&x.arcs[x.over_in()]], index[&x.arcs[2]]);
        }
        let mut circle = BTreeMap::new();
        let labels = uf.into_labeling();
        for &l in &labels {
            let next = circle.len();
            circle.entry(l).or_insert(next);
        }
        let edges = d
            .crossings()
            .iter()
            .map(|x| (circle[&labels[index[&x.arcs[0]]]], circle[&labels[index[&x.arcs[2]]]], x.sign))
            .collect();
        SeifertGraph { vertices: circle.len(), edges }
    }

    /// Components after merging the two circles at every crossing accepted by `flatten`.
    pub fn pieces(&self, flatten: impl Fn(i8) -> bool) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        let mut count = self.vertices;
        for &(u, v, s) in &self.edges {
            if flatten(s) && uf.union(u, v) {
                count -= 1;
            }
        }
        count
    }

    /// Edge indices of each 2-connected block (parallel edges share a block).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.vertices;
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v, _)) in self.edges.iter().enumerate() {
            if u == v {
                continue;
            }
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut stack: Vec<usize> = Vec::new();
        let mut blocks = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // frames: (vertex, edge used to enter, next adjacency index)
            let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (u, in_edge, ref mut k)) = frames.last_mut() {
                if *k < adj[u].len() {
                    let (v, e) = adj[u][*k];
                    *k += 1;
                    if e == in_edge {
                        continue;
                    }
                    if disc[v] == usize::MAX {
                        stack.push(e);
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        frames.push((v, e, 0));
                    } else if disc[v] < disc[u] {
                        stack.push(e);
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(p, _, _)) = frames.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            let mut block = Vec::new();
                            while let Some(e) = stack.pop() {
                                block.push(e);
                                if e == in_edge {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        for (e, &(u, v, _)) in self.edges.iter().enumerate() {
            if u == v {
                blocks.push(vec![e]);
            }
        }
        blocks
    }

    pub fn is_homogeneous(&self) -> bool {
        self.blocks().iter().all(|b| {
            let first = self.edges[b[0]].2;
            b.iter().all(|&e| self.edges[e].2 == first)
        })
    }

    /// Whether the graph with parallel edges merged is a tree.
    pub fn reduced_is_tree(&self) -> bool {
        let reduced: BTreeSet<(usize, usize)> = self.edges.iter().map(|&(u, v, _)| (u.min(v), u.max(v))).collect();
        if reduced.iter().any(|&(u, v)| u == v) {
            return false;
        }
        reduced.len() + 1 == self.vertices && self.pieces(|_| true) == 1
    }
}

pub fn diagram_profile(d: &LinkDiagram) -> DiagramProfile {
    let g = SeifertGraph::of(d);
    let n = d.num_components();
    let mut pos = vec![vec![0usize; n]; n];
    let mut neg = vec![vec![0usize; n]; n];
    for (x, (cu, co)) in d.crossings().iter().zip(d.crossing_components()) {
        if cu != co {
            let (i, j) = (cu.min(co), cu.max(co));
            if x.sign > 0 {
                pos[i][j] += 1;
            } else {
                neg[i][j] += 1;
            }
        }
    }
    let mut counts = vec![vec![0i64; n]; n];
    let mut mixed = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let signed = pos[i][j] as i64 - neg[i][j] as i64;
            counts[i][j] = signed;
            counts[j][i] = signed;
            mixed.push(PairCount { i, j, positive: pos[i][j], negative: neg[i][j] });
        }
    }
    let linking_matrix =
        LinkingMatrix::from_mixed_counts(&counts).expect("mixed crossings pair up in a closed diagram");
    let split_components = g.pieces(|_| true);
    DiagramProfile {
        components: n,
        crossings: d.crossings().len(),
        writhe: d.writhe(),
        seifert_circles: g.vertices,
        s_plus: g.pieces(|s| s > 0),
        s_minus: g.pieces(|s| s < 0),
        split_components,
        is_simply_linked: mixed.iter().all(|p| p.positive == 0 || p.negative == 0),
        mixed,
        linking_matrix,
        is_positive: d.is_positive(),
        is_alternating: d.is_alternating(),
        is_connected: split_components == 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FibredVerdict {
    Fibred,
    NotFibred,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertAnalysis {
    pub is_homogeneous: bool,
    pub reduced_is_tree: bool,
    /// Only decided for positive diagrams: fibred iff the reduced Seifert graph is a tree.
    pub fibred: FibredVerdict,
}

pub fn seifert_analysis(d: &LinkDiagram) -> SeifertAnalysis {
    let g = SeifertGraph::of(d);
    let reduced_is_tree = g.reduced_is_tree();
    let fibred = if !d.is_positive() {
        FibredVerdict::NotApplicable
    } else if reduced_is_tree {
        FibredVerdict::Fibred
    } else {
        FibredVerdict::NotFibred
    };
    SeifertAnalysis { is_homogeneous: g.is_homogeneous(), reduced_is_tree, fibred }
}
