use knotpos_core::BraidWord;

/// Position-tracking oracle: components (cycles by minimal strand) and, for each
/// letter, the two strands it crosses.
pub struct Oracle {
    pub component_of: Vec<usize>,
    pub components: usize,
    pub crossings: Vec<(usize, usize, i64)>,
}

pub fn oracle(b: &BraidWord) -> Oracle {
    let n = b.strands();
    let mut at: Vec<usize> = (0..n).collect();
    let mut crossings = Vec::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        crossings.push((at[i - 1], at[i], l.signum() as i64));
        at.swap(i - 1, i);
    }
    let mut image = vec![0; n];
    for (pos, &s) in at.iter().enumerate() {
        image[s] = pos;
    }
    let mut component_of = vec![usize::MAX; n];
    let mut components = 0;
    for s in 0..n {
        if component_of[s] != usize::MAX {
            continue;
        }
        let mut t = s;
        while component_of[t] == usize::MAX {
            component_of[t] = components;
            t = image[t];
        }
        components += 1;
    }
    Oracle { component_of, components, crossings }
}

impl Oracle {
    /// Signed count of crossings whose strands lie in different blocks of `block_of_component`.
    pub fn mixed_between(&self, block_of_component: &[usize]) -> i64 {
        self.crossings
            .iter()
            .filter(|(s, t, _)| block_of_component[self.component_of[*s]] != block_of_component[self.component_of[*t]])
            .map(|(_, _, sign)| sign)
            .sum()
    }
}

/// Deletes strand `s` by position tracking.
pub fn delete_strand(b: &BraidWord, s: usize) -> BraidWord {
    let mut at: Vec<usize> = (0..b.strands()).collect();
    let mut out = Vec::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let pos = at.iter().position(|&t| t == s).unwrap();
        if at[i - 1] != s && at[i] != s {
            let g = if i > pos { i - 1 } else { i } as i32;
            out.push(g * l.signum());
        }
        at.swap(i - 1, i);
    }
    BraidWord::new(b.strands() - 1, out).unwrap()
}
