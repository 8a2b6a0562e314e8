//! Bound quiver algebras over prime fields: path bases, Tits forms,
//! representations, support τ-tilting enumeration and classification rules
//! for staircase-type algebras.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod families;
pub mod field;
pub mod partition;
pub mod poly;
pub mod quiver;
pub mod rep;
pub mod tau;
pub mod textfmt;
pub mod tits;

pub use algebra::{build_algebra, BoundQuiverAlgebra};
pub use error::{Error, Result};
pub use families::{named_family, shifted_staircase, staircase, Family};
pub use field::{Fp, Mat};
pub use partition::{Partition, ShiftedPartition};
pub use quiver::{Arrow, Path, Quiver, Relation};
pub use rep::{hom_basis, ModuleMap, RepContext, Representation};
pub use tau::{enumerate_hasse, CountsTable, HasseDiagram, SupportTauTiltingPair};
pub use tits::{tits_form, PositivityStatus, PositivityVerdict, TitsForm};
