//! Linking matrices and partitions of a link's components.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Symmetric matrix of pairwise linking numbers with zero diagonal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinkingMatrix {
    rows: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn zeros(n: usize) -> Self {
        LinkingMatrix { rows: vec![vec![0; n]; n] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::BadParameter(format!("linking matrix row {} has length {}", i, r.len())));
            }
            if r[i] != 0 {
                return Err(Error::BadParameter(format!("nonzero diagonal entry at {}", i)));
            }
            for j in 0..n {
                if rows[j].len() == n && rows[j][i] != r[j] {
                    return Err(Error::BadParameter(format!("linking matrix not symmetric at ({}, {})", i, j)));
                }
            }
        }
        Ok(LinkingMatrix { rows })
    }

    /// Builds a matrix from signed mixed-crossing counts (each pair counted twice in a diagram).
    pub fn from_mixed_counts(counts: &[Vec<i64>]) -> Result<Self> {
        let n = counts.len();
        let mut m = Self::zeros(n);
        for (i, row) in counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate().filter(|&(j, _)| j != i) {
                if c % 2 != 0 {
                    return Err(Error::OddMixedCount(i, j));
                }
                m.rows[i][j] = c / 2;
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Total linking number: sum over unordered pairs.
    pub fn total(&self) -> i64 {
        self.pairs().map(|(i, j)| self.rows[i][j]).sum()
    }

    /// Sum of absolute values over unordered pairs.
    pub fn absolute(&self) -> i64 {
        self.pairs().map(|(i, j)| self.rows[i][j].abs()).sum()
    }

    /// Sum of linking numbers between components in different blocks.
    pub fn between_blocks(&self, p: &ComponentPartition) -> i64 {
        let block = p.block_of();
        self.pairs().filter(|&(i, j)| block[i] != block[j]).map(|(i, j)| self.rows[i][j]).sum()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.pairs().map(|(i, j)| self.rows[i][j]).min()
    }

    pub fn negated(&self) -> Self {
        LinkingMatrix { rows: self.rows.iter().map(|r| r.iter().map(|v| -v).collect()).collect() }
    }

    /// Restriction to the given components, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        LinkingMatrix { rows: keep.iter().map(|&i| keep.iter().map(|&j| self.rows[i][j]).collect()).collect() }
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.rows.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }
}

/// Disjoint nonempty blocks of component indices (0-based) covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentPartition {
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    /// Validates and normalizes: blocks sorted internally and by minimal element.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &c in b.iter() {
                if c >= n {
                    return Err(Error::InvalidPartition(format!("component {} out of range", c + 1)));
                }
                if seen[c] {
                    return Err(Error::InvalidPartition(format!("component {} repeated", c + 1)));
                }
                seen[c] = true;
            }
        }
        if let Some(c) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("component {} not covered", c + 1)));
        }
        blocks.sort();
        Ok(ComponentPartition { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        ComponentPartition { blocks: (0..n).map(|i| vec![i]).collect() }
    }

    pub fn whole(n: usize) -> Self {
        ComponentPartition { blocks: vec![(0..n).collect()] }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn components(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index of every component.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.components()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &c in block {
                out[c] = b;
            }
        }
        out
    }

    /// Every partition of `0..n`, via restricted growth strings.
    pub fn all(n: usize) -> Vec<ComponentPartition> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut rgs = vec![0usize; n];
        loop {
            let k = rgs.iter().max().unwrap() + 1;
            let mut blocks = vec![Vec::new(); k];
            for (c, &b) in rgs.iter().enumerate() {
                blocks[b].push(c);
            }
            out.push(ComponentPartition { blocks });
            // next restricted growth string
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return out;
                }
                let prefix_max = *rgs[..i].iter().max().unwrap();
                if rgs[i] <= prefix_max {
                    rgs[i] += 1;
                    for r in rgs.iter_mut().skip(i + 1) {
                        *r = 0;
                    }
                    break;
                }
                i -= 1;
            }
        }
    }

    /// Parses `1,2|3` (1-based component labels, blocks separated by `|`).
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in text.split('|') {
            let mut block = Vec::new();
            for tok in part.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                let v: usize =
                    tok.parse().map_err(|_| Error::InvalidPartition(format!("bad component label {:?}", tok)))?;
                if v == 0 {
                    return Err(Error::InvalidPartition("component labels start at 1".into()));
                }
                block.push(v - 1);
            }
            blocks.push(block);
        }
        Self::new(n, blocks)
    }
}

impl std::fmt::Display for ComponentPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(|c| (c + 1).to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", parts.join("|"))
    }
}
