//! Exact toolkit for 2-edge-colored graphs and signed graphs (switching
//! classes): re-signing and switching equivalence, identifiability and
//! vertex merging, clique recognition, exhaustive chromatic/achromatic
//! solvers at desk scale, and NP-hardness gadget construction.

pub mod bitset;
pub mod cliques;
pub mod format;
pub mod graph;
pub mod guard;
pub mod morphism;
pub mod reduction;
pub mod sign;
pub mod solvers;
pub mod switching;
pub mod twins;
pub mod walk;

pub use graph::{Graph2EC, GraphError};
pub use guard::{GuardError, Limits};
pub use morphism::{Coloring, MergePlan, MergeStep};
pub use reduction::{PartitionSolution, ReductionParams, ThreePartitionInstance};
pub use sign::Sign;
pub use switching::{SignedClass, SwitchingSet};
