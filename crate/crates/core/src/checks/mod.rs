//! Theorem-level checkers built on the module layer.

pub mod acyclicity;
pub mod bounds;
pub mod extension;
pub mod regular;

pub use acyclicity::{base_change, be_acyclicity_check, AcyclicityReport, AcyclicitySpot};
pub use bounds::{depth_and_cm_check, syzygy_bound_check, BoundCheck, BoundKind, DepthReport, SyzygyBoundReport};
pub use extension::{
    as_module, replay_split, split_check, trace_splitting, ExtensionModule, FiniteExtension, SplitReport, SplitVerdict,
};
pub use regular::{
    colon_witness, nakayama_check, quotient_presentation, regular_sequence_check, witness_identity_holds, ColonWitness,
    RegularSequenceReport,
};
