//! Braid words in Artin generators: parsing, permutations, sub-braids,
//! linking numbers and the one-component quasi-positive embedding.

use crate::error::{Error, Result};
use crate::linking::{ComponentPartition, LinkingMatrix};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// A word in Artin generators on `strands` strands. Letter `+i` is sigma_i, `-i` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::MalformedBraid("strand count must be positive".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum()
    }

    pub fn self_linking(&self) -> i64 {
        self.writhe() - self.strands as i64
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn permutation(&self) -> Permutation {
        // pos[p] = strand currently at position p
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        let mut images = vec![0; self.strands];
        for (p, &s) in pos.iter().enumerate() {
            images[s] = p;
        }
        Permutation { images }
    }

    /// Orbits of the permutation as sorted 1-based strand sets, ordered by minimal strand.
    pub fn component_cycles(&self) -> Vec<Vec<usize>> {
        self.permutation().cycles()
    }

    /// For each letter, the pair of strands (0-based starting positions) it crosses.
    pub fn crossing_strands(&self) -> Vec<(usize, usize)> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            out.push((pos[i], pos[i + 1]));
            pos.swap(i, i + 1);
        }
        out
    }

    /// Component index (position in `component_cycles`) of every strand.
    pub fn strand_components(&self) -> Vec<usize> {
        let mut comp = vec![0; self.strands];
        for (c, cycle) in self.component_cycles().iter().enumerate() {
            for &s in cycle {
                comp[s - 1] = c;
            }
        }
        comp
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let rest = text
            .strip_prefix('B')
            .ok_or_else(|| Error::MalformedBraid(format!("expected `B<n>: ...`, got {:?}", text)))?;
        let (n, word) =
            rest.split_once(':').ok_or_else(|| Error::MalformedBraid("missing `:` after strand count".into()))?;
        let strands: usize =
            n.trim().parse().map_err(|_| Error::MalformedBraid(format!("bad strand count {:?}", n.trim())))?;
        let letters = word
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| Error::MalformedBraid(format!("bad letter {:?}", t))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

/// A bijection of strand positions; `images[s]` is where the strand starting at `s` ends (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Cycles as sorted 1-based sets, ordered by minimal element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                cycle.push(t + 1);
                t = self.images[t];
            }
            cycle.sort_unstable();
            out.push(cycle);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidProfile {
    pub strands: usize,
    pub length: usize,
    pub writhe: i64,
    pub self_linking: i64,
    pub permutation: Permutation,
    pub component_cycles: Vec<Vec<usize>>,
    pub is_positive: bool,
    pub is_pure: bool,
    pub is_alternating: bool,
    pub is_nonsplit_alternating: bool,
}

/// Sign with which each generator appears: `Some(+1)`, `Some(-1)`, `Some(0)` for mixed, `None` if absent.
fn generator_signs(b: &BraidWord) -> Vec<Option<i32>> {
    let mut signs: Vec<Option<i32>> = vec![None; b.strands.saturating_sub(1)];
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        let s = l.signum();
        signs[i] = match signs[i] {
            None => Some(s),
            Some(t) if t == s => Some(s),
            _ => Some(0),
        };
    }
    signs
}

pub fn braid_profile(b: &BraidWord) -> BraidProfile {
    let permutation = b.permutation();
    let signs = generator_signs(b);
    let fixed_sign = signs.iter().all(|s| *s != Some(0));
    let opposite_neighbours = signs.windows(2).all(|w| match (w[0], w[1]) {
        (Some(x), Some(y)) => x * y < 0,
        _ => true,
    });
    let is_alternating = fixed_sign && opposite_neighbours;
    let all_present = signs.iter().all(Option::is_some);
    BraidProfile {
        strands: b.strands,
        length: b.letters.len(),
        writhe: b.writhe(),
        self_linking: b.self_linking(),
        component_cycles: permutation.cycles(),
        is_pure: permutation.is_identity(),
        permutation,
        is_positive: b.is_positive(),
        is_alternating,
        is_nonsplit_alternating: is_alternating && all_present,
    }
}

/// Braid on the strands of the selected component cycles; other strands and their letters are dropped.
pub fn sub_braid(b: &BraidWord, keep: &[usize]) -> Result<BraidWord> {
    if keep.is_empty() {
        return Err(Error::EmptySelection);
    }
    let cycles = b.component_cycles();
    let mut kept = vec![false; b.strands];
    for &c in keep {
        let cycle = cycles.get(c).ok_or(Error::UnknownComponent(c))?;
        for &s in cycle {
            kept[s - 1] = true;
        }
    }
    let mut pos: Vec<usize> = (0..b.strands).collect();
    let mut letters = Vec::new();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        if kept[pos[i]] && kept[pos[i + 1]] {
            let below = pos[..i].iter().filter(|&&s| kept[s]).count() as i32;
            letters.push(l.signum() * (below + 1));
        }
        pos.swap(i, i + 1);
    }
    let strands = kept.iter().filter(|&&k| k).count();
    BraidWord::new(strands, letters)
}

/// Half the signed count of letters crossing strands of different components.
pub fn braid_linking_matrix(b: &BraidWord) -> Result<LinkingMatrix> {
    let comp = b.strand_components();
    let n = comp.iter().max().map_or(0, |m| m + 1);
    let mut counts = vec![vec![0i64; n]; n];
    for (&l, (s, t)) in b.letters.iter().zip(b.crossing_strands()) {
        let (p, q) = (comp[s], comp[t]);
        if p != q {
            let sign = l.signum() as i64;
            counts[p][q] += sign;
            counts[q][p] += sign;
        }
    }
    LinkingMatrix::from_mixed_counts(&counts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyLemmaRecord {
    pub self_linking: i64,
    pub block_self_linking: Vec<i64>,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// sl(b) minus the sub-braid self-linking numbers, against twice the linking between blocks.
pub fn key_lemma_identity(b: &BraidWord, partition: &ComponentPartition) -> Result<KeyLemmaRecord> {
    let ncomp = b.component_cycles().len();
    if partition.components() != ncomp {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} components, braid has {}",
            partition.components(),
            ncomp
        )));
    }
    let block_self_linking = partition
        .blocks()
        .iter()
        .map(|block| sub_braid(b, block).map(|s| s.self_linking()))
        .collect::<Result<Vec<_>>>()?;
    let lhs = b.self_linking() - block_self_linking.iter().sum::<i64>();
    let rhs = 2 * braid_linking_matrix(b)?.between_blocks(partition);
    Ok(KeyLemmaRecord { self_linking: b.self_linking(), block_self_linking, lhs, rhs, holds: lhs == rhs })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InsertionRecord {
    /// Index of the negative letter in the input word.
    pub letter_index: usize,
    pub generator: usize,
    pub word: Vec<i32>,
}

/// A conjugate `c * sigma_g * c^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conjugate {
    pub conjugator: Vec<i32>,
    pub generator: i32,
}

impl Conjugate {
    pub fn letters(&self) -> Vec<i32> {
        let mut out = self.conjugator.clone();
        out.push(self.generator);
        out.extend(self.conjugator.iter().rev().map(|l| -l));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Factor {
    Positive(i32),
    /// `conjugator * core * conjugator^-1` with a positive core; the witness lists
    /// generator conjugates whose product freely reduces to the same element.
    Conjugated {
        conjugator: Vec<i32>,
        core: Vec<i32>,
        witness: Vec<Conjugate>,
    },
}

impl Factor {
    pub fn letters(&self) -> Vec<i32> {
        match self {
            Factor::Positive(g) => vec![*g],
            Factor::Conjugated { conjugator, core, .. } => {
                let mut out = conjugator.clone();
                out.extend_from_slice(core);
                out.extend(conjugator.iter().rev().map(|l| -l));
                out
            }
        }
    }

    /// True when the factor is a product of generator conjugates up to free reduction.
    pub fn witness_holds(&self) -> bool {
        match self {
            Factor::Positive(g) => *g > 0,
            Factor::Conjugated { core, witness, .. } => {
                let product: Vec<i32> = witness.iter().flat_map(Conjugate::letters).collect();
                core.iter().all(|&g| g > 0)
                    && witness.iter().all(|c| c.generator > 0)
                    && free_reduce(&product) == free_reduce(&self.letters())
            }
        }
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasipositiveEmbedding {
    pub input: BraidWord,
    pub output: BraidWord,
    pub insertions: Vec<InsertionRecord>,
    pub decomposition: Vec<Factor>,
}

impl QuasipositiveEmbedding {
    /// Linking number between the added strand and the rest: sum of (n - i + 1) over negative letters.
    pub fn expected_linking(&self) -> i64 {
        let n = self.input.strands as i64;
        self.insertions.iter().map(|r| n - r.generator as i64 + 1).sum()
    }
}

/// Adds one unknotted strand so that the result is quasi-positive: after each
/// negative letter `-i` insert `n, n-1, ..., i, i, ..., n-1, n`.
pub fn embed_quasipositive(b: &BraidWord) -> QuasipositiveEmbedding {
    let n = b.strands as i32;
    let mut output = Vec::new();
    let mut insertions = Vec::new();
    let mut decomposition = Vec::new();
    for (idx, &l) in b.letters.iter().enumerate() {
        output.push(l);
        if l > 0 {
            decomposition.push(Factor::Positive(l));
            continue;
        }
        let i = -l;
        let word: Vec<i32> = (i..=n).rev().chain(i..=n).collect();
        output.extend_from_slice(&word);
        insertions.push(InsertionRecord { letter_index: idx, generator: i as usize, word });
        let core: Vec<i32> = (i + 1..=n).rev().collect();
        let witness = core.iter().map(|&g| Conjugate { conjugator: vec![l], generator: g }).collect();
        decomposition.push(Factor::Conjugated { conjugator: vec![l], core, witness });
        decomposition.extend((i..=n).map(Factor::Positive));
    }
    QuasipositiveEmbedding {
        input: b.clone(),
        output: BraidWord { strands: b.strands + 1, letters: output },
        insertions,
        decomposition,
    }
}
