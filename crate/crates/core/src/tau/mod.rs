//! Support τ-tilting pairs, left mutation and enumeration of the Hasse quiver.

mod counts;
mod hasse;
mod pair;

pub use counts::{
    closed_form, p1_summand_property, verify_recurrences, ClosedForm, CountsCache, CountsTable, IdentityCheck,
    RecurrenceReport, Series,
};
pub use hasse::{
    counts_by_components, enumerate_hasse, enumerate_pairs, strictly_descending, summand_dimension_multiset,
    EnumOptions, Enumeration, HasseDiagram, HasseEdge, HasseNode, DEFAULT_NODE_CAP, DEFAULT_PRIME,
};
pub use pair::{ModuleRegistry, PairKey, SupportTauTiltingPair, TauRigidModule};
