use crate::braid::BraidWord;
use crate::diagram::{build_diagram, Closure, Column, Direction, LinkDiagram};
use crate::error::{Error, Result};
use crate::invariants::PositiveDiagramStats;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Example {
    Braid(BraidWord),
    Diagram(LinkDiagram),
}

impl Example {
    pub fn diagram(&self) -> LinkDiagram {
        match self {
            Example::Braid(b) => crate::diagram::braid_closure(b),
            Example::Diagram(d) => d.clone(),
        }
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &["Dk", "fig3", "borromean", "torus2n", "hopf"]
}

const MAX_K: usize = 50;

fn check_k(name: &str, k: usize) -> Result<()> {
    if k == 0 || k > MAX_K {
        return Err(Error::BadParameter(format!("{} needs 1 <= k <= {}, got {}", name, MAX_K, k)));
    }
    Ok(())
}

/// Two-bridge link with k positive full twists in each box and a clasp, as a
/// 4-plat: sigma_2^{2k} sigma_3^{-1} sigma_2^{2k}. Two unknotted components, lk = 0.
fn twisted_clasp(k: usize) -> Result<LinkDiagram> {
    let box_ = vec![Column { position: 2, positive: true }; 2 * k];
    let mut cols = box_.clone();
    cols.push(Column { position: 3, positive: false });
    cols.extend(box_);
    build_diagram(4, &cols, Closure::Plat, &[(1, Direction::Right), (4, Direction::Right)])
}

/// `k` is used by `Dk` and `torus2n` and ignored otherwise.
pub fn builtin_example(name: &str, k: usize) -> Result<Example> {
    let braid = |s: &str| Ok(Example::Braid(s.parse()?));
    match name {
        "Dk" => {
            check_k(name, k)?;
            Ok(Example::Diagram(twisted_clasp(k)?))
        }
        "fig3" => braid("B4: 2 2 2 1 3 2 1 3"),
        "borromean" => braid("B3: 1 -2 1 -2 1 -2"),
        "torus2n" => {
            check_k(name, k)?;
            Ok(Example::Braid(BraidWord::new(2, vec![1; 2 * k])?))
        }
        "hopf" => braid("B2: 1 1"),
        _ => Err(Error::UnknownExample(name.to_string())),
    }
}

/// Statistics of the 12-crossing positive diagram of a 2-component link whose
/// components are positive-braid knots but which is not a positive-braid link.
pub fn twelve_crossing_stats() -> PositiveDiagramStats {
    PositiveDiagramStats {
        crossings: 12,
        seifert_circles: 6,
        component_circles: 4,
        components: 2,
        linking_total: 4,
        source: "transcribed 12-crossing positive diagram".into(),
    }
}
