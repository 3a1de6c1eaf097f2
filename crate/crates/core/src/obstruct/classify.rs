use super::LinkData;
use crate::braid::{braid_profile, BraidWord};
use crate::error::{Error, Result};
use petgraph::unionfind::UnionFind;
use serde::Serialize;

/// A 2-strand piece of an alternating pure braid: the (2, crossings) torus link.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusFactor {
    /// 1-based strands.
    pub strands: [usize; 2],
    pub crossings: usize,
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AltPureVerdict {
    pub qp_concordant: bool,
    pub factors: Vec<TorusFactor>,
    /// 1-based strands that form split unknots.
    pub unknots: Vec<usize>,
    /// Pieces with three or more strands.
    pub large_pieces: Vec<Vec<usize>>,
}

/// An alternating pure braid closure is concordant to a quasi-positive link
/// iff it is a split union of unknots and positive (2, 2m) torus links.
pub fn classify_alt_pure(b: &BraidWord) -> Result<AltPureVerdict> {
    let p = braid_profile(b);
    if !p.is_pure {
        return Err(Error::NotPure);
    }
    if !p.is_alternating {
        return Err(Error::NotAlternating);
    }
    let n = b.strands();
    let mut uf = UnionFind::<usize>::new(n);
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        uf.union(i - 1, i);
    }
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        match pieces.iter_mut().find(|piece| uf.equiv(piece[0] - 1, s)) {
            Some(piece) => piece.push(s + 1),
            None => pieces.push(vec![s + 1]),
        }
    }
    let mut verdict =
        AltPureVerdict { qp_concordant: true, factors: Vec::new(), unknots: Vec::new(), large_pieces: Vec::new() };
    for piece in pieces {
        match piece.len() {
            1 => verdict.unknots.push(piece[0]),
            2 => {
                let letters: Vec<i32> =
                    b.letters().iter().copied().filter(|l| l.unsigned_abs() as usize == piece[0]).collect();
                let positive = letters[0] > 0;
                verdict.qp_concordant &= positive;
                verdict.factors.push(TorusFactor { strands: [piece[0], piece[1]], crossings: letters.len(), positive });
            }
            _ => {
                verdict.qp_concordant = false;
                verdict.large_pieces.push(piece);
            }
        }
    }
    Ok(verdict)
}

/// Positive links with unlinking number at most two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum UnlinkingFamily {
    Unlink,
    /// Positive Hopf link, split union an unlink.
    HopfSplitUnlink,
    /// Non-trivial twist knot, split union an unlink.
    TwistKnotSplitUnlink,
    /// (a) total linking number 2 and unknotted components.
    LinkingTwo,
    /// (b) Hopf link connected sum a twist knot.
    HopfSumTwist,
    /// (c) Hopf link split union a twist knot.
    HopfSplitTwist,
    /// (d) two non-trivial twist knots.
    TwoTwistKnots,
    /// (e) a knot with unknotting number 2.
    KnotUnknottingTwo,
    Contradiction(String),
    NotClassified {
        unlinking: i64,
    },
}

impl UnlinkingFamily {
    pub fn label(&self) -> &'static str {
        match self {
            UnlinkingFamily::Unlink => "UNLINK",
            UnlinkingFamily::HopfSplitUnlink => "HOPF_SPLIT_UNLINK",
            UnlinkingFamily::TwistKnotSplitUnlink => "TWIST_KNOT_SPLIT_UNLINK",
            UnlinkingFamily::LinkingTwo => "U2_A_LINKING_TWO",
            UnlinkingFamily::HopfSumTwist => "U2_B_HOPF_SUM_TWIST",
            UnlinkingFamily::HopfSplitTwist => "U2_C_HOPF_SPLIT_TWIST",
            UnlinkingFamily::TwoTwistKnots => "U2_D_TWO_TWIST_KNOTS",
            UnlinkingFamily::KnotUnknottingTwo => "U2_E_KNOT_U2",
            UnlinkingFamily::Contradiction(_) => "CONTRADICTION",
            UnlinkingFamily::NotClassified { .. } => "NOT_CLASSIFIED",
        }
    }
}

/// Classifies a positive link (caller-asserted) with u = lk + sum u(K_i) <= 2.
/// Every family includes split unions with an unlink.
pub fn classify_small_unlinking(data: &LinkData) -> Result<UnlinkingFamily> {
    if let Some(min) = data.linking.min_entry() {
        if min < 0 {
            return Err(Error::NotPositive(format!("linking number {} is negative", min)));
        }
    }
    let us: Vec<i64> = (0..data.components)
        .map(|i| {
            data.component_u(i).ok_or_else(|| Error::MissingInput(format!("unknotting number of component {}", i + 1)))
        })
        .collect::<Result<_>>()?;
    let lk = data.linking.total();
    let u = lk + us.iter().sum::<i64>();
    if let Some(given) = data.unlinking {
        if given != u {
            return Ok(UnlinkingFamily::Contradiction(format!(
                "u = {} but a positive link has u = lk + sum u(K_i) = {}",
                given, u
            )));
        }
    }
    let knotted: Vec<usize> = (0..us.len()).filter(|&i| us[i] > 0).collect();
    Ok(match (u, lk) {
        (0, _) => UnlinkingFamily::Unlink,
        (1, 1) => UnlinkingFamily::HopfSplitUnlink,
        (1, _) => UnlinkingFamily::TwistKnotSplitUnlink,
        (2, 2) => UnlinkingFamily::LinkingTwo,
        (2, 1) => {
            let k = knotted[0];
            if (0..data.components).any(|j| data.linking.get(k, j) != 0) {
                UnlinkingFamily::HopfSumTwist
            } else {
                UnlinkingFamily::HopfSplitTwist
            }
        }
        (2, _) if knotted.len() == 2 => UnlinkingFamily::TwoTwistKnots,
        (2, _) => UnlinkingFamily::KnotUnknottingTwo,
        (u, _) => UnlinkingFamily::NotClassified { unlinking: u },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linking::LinkingMatrix;

    #[test]
    fn alternating_pure_braids() {
        let bor = classify_alt_pure(&"B3: 1 -2 1 -2 1 -2".parse().unwrap()).unwrap();
        assert!(!bor.qp_concordant);
        assert_eq!(bor.large_pieces, vec![vec![1, 2, 3]]);

        let t = classify_alt_pure(&"B2: 1 1 1 1".parse().unwrap()).unwrap();
        assert!(t.qp_concordant);
        assert_eq!(t.factors, vec![TorusFactor { strands: [1, 2], crossings: 4, positive: true }]);

        let mixed = classify_alt_pure(&"B5: 1 1 -3 -3".parse().unwrap()).unwrap();
        assert!(!mixed.qp_concordant);
        assert_eq!(mixed.unknots, vec![5]);
        assert!(!mixed.factors[1].positive);

        assert_eq!(classify_alt_pure(&"B2: 1".parse().unwrap()), Err(Error::NotPure));
        assert_eq!(classify_alt_pure(&"B2: 1 -1".parse().unwrap()), Err(Error::NotAlternating));
    }

    fn matrix(rows: Vec<Vec<i64>>) -> LinkingMatrix {
        LinkingMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn unlinking_one_and_two() {
        let hopf_u = LinkData::new(matrix(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]))
            .with_component_unknotting(vec![0, 0, 0], "test")
            .unwrap();
        assert_eq!(classify_small_unlinking(&hopf_u).unwrap(), UnlinkingFamily::HopfSplitUnlink);

        let t24 =
            LinkData::new(matrix(vec![vec![0, 2], vec![2, 0]])).with_component_unknotting(vec![0, 0], "test").unwrap();
        assert_eq!(classify_small_unlinking(&t24).unwrap(), UnlinkingFamily::LinkingTwo);

        let sum =
            LinkData::new(matrix(vec![vec![0, 1], vec![1, 0]])).with_component_unknotting(vec![1, 0], "test").unwrap();
        assert_eq!(classify_small_unlinking(&sum).unwrap(), UnlinkingFamily::HopfSumTwist);

        let split = LinkData::new(matrix(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]))
            .with_component_unknotting(vec![0, 0, 1], "test")
            .unwrap();
        assert_eq!(classify_small_unlinking(&split).unwrap(), UnlinkingFamily::HopfSplitTwist);

        let knot = LinkData::new(LinkingMatrix::zeros(1)).with_twist_summands(vec![2], "test").unwrap();
        assert_eq!(classify_small_unlinking(&knot).unwrap(), UnlinkingFamily::KnotUnknottingTwo);

        let bad = LinkData::new(matrix(vec![vec![0, 1], vec![1, 0]]))
            .with_component_unknotting(vec![1, 0], "test")
            .unwrap()
            .with_unlinking(1, "test");
        assert_eq!(classify_small_unlinking(&bad).unwrap().label(), "CONTRADICTION");

        let big =
            LinkData::new(matrix(vec![vec![0, 3], vec![3, 0]])).with_component_unknotting(vec![0, 0], "test").unwrap();
        assert_eq!(classify_small_unlinking(&big).unwrap(), UnlinkingFamily::NotClassified { unlinking: 3 });

        let neg = LinkData::new(matrix(vec![vec![0, -1], vec![-1, 0]]));
        assert!(matches!(classify_small_unlinking(&neg), Err(Error::NotPositive(_))));
    }
}
