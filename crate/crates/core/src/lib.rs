pub mod braid;
pub mod catalog;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod linking;
pub mod obstruct;

pub use braid::{BraidWord, Permutation};
pub use diagram::LinkDiagram;
pub use error::{Error, ErrorKind, Result};
pub use invariants::NuInterval;
pub use linking::{ComponentPartition, LinkingMatrix};
