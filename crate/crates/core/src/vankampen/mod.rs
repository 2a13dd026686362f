//! Gluing fundamental categories along a two-piece cover.
//!
//! [`pushout`] builds the presented pushout of the span of piece
//! presentations, [`mediating`] constructs the functor a compatible pair of
//! functors induces out of the whole space, and the remaining modules check
//! that construction on samples, compare hom-set sizes, glue maps of spaces
//! and test the monoid pushout condition.

pub mod bubenik;
pub mod check;
pub mod glue;
pub mod mediating;
pub mod pushout;
pub mod verify;

pub use bubenik::{monoid_pushout_condition, BubenikReport};
pub use check::{van_kampen_check, HomComparison, VanKampenReport};
pub use glue::{glue_directed_maps, GlueReport};
pub use mediating::{
    mediating_functor, mediating_morphism_map, mediating_morphism_map_at, mediating_object_map, CommutationWitness,
    MediatingInput,
};
pub use pushout::{
    comparison_functor, pushout, pushout_with_depth, tagged, PushoutResult, PushoutSpan, PushoutSummary,
};
pub use verify::{
    canonical_input, mediating_trials, random_target, verify_mediating_well_defined, verify_pushout_universal,
    SampleConfig, SamplePool, Samples, TrialConfig, TrialReport, UniversalReport, WellDefinedReport, DEFAULT_SEED,
};
