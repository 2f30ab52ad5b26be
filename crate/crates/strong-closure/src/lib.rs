//! Finite permutation group computations centered on strong closure.
//!
//! The crate has three layers:
//!
//! * an exact group engine — permutations, stabilizer chains, subgroups,
//!   normalizers/centralizers, quotients, Sylow subgroups, full subgroup
//!   enumeration at desk scale ([`perm`], [`group`], [`subgroup`], [`ops`],
//!   [`sylow`], [`lattice`], [`shape`]);
//! * structural predicates — p-nilpotence, p-cores, Fitting structure,
//!   chief series, supersolvability ([`structure`]) and the strong-closure
//!   predicates with hypothesis assemblies ([`closure`]);
//! * a verification harness — a catalog of constructible groups and
//!   coprime-action instances, per-group theorem/lemma verdicts, and
//!   campaign reports ([`catalog`], [`semidirect`], [`checks`],
//!   [`campaign`], [`groupfile`]).
//!
//! Start with the runnable examples (`cargo run --example sl2_17_battery`)
//! or the `strong-closure` CLI (`analyze`, `check`, `lemmas`, `campaign`).

pub mod arith;
pub mod campaign;
pub mod catalog;
pub mod checks;
pub mod closure;
pub mod error;
pub mod group;
pub mod groupfile;
pub mod lattice;
pub mod ops;
pub mod perm;
pub mod semidirect;
pub mod shape;
pub mod structure;
pub mod subgroup;
pub mod sylow;

pub use campaign::{run_campaign, write_report, CampaignConfig, CampaignReport};
pub use catalog::{builtin, builtin_catalog, construct, CatalogEntry};
pub use checks::{
    check_theorem, run_group_check, run_instance_check, CheckContext, CheckId, Verdict, Witness,
};
pub use closure::{
    is_h_subgroup, is_strongly_closed, is_strongly_closed_in_group, ClosureReading,
    HypothesisSpec, TheoremId,
};
pub use error::{Error, Result};
pub use group::Group;
pub use lattice::{all_subgroups, frattini_subgroup, maximal_subgroups, subgroups_of_order};
pub use ops::{
    center, centralizer, is_maximal_subgroup, is_normal, is_subnormal, normal_closure, normalizer,
    quotient_group,
};
pub use perm::Perm;
pub use semidirect::{semidirect_product, CoprimeActionInstance};
pub use shape::{shape, Shape};
pub use structure::{
    chief_series, fitting_data, hall_2prime_complement, has_supersolvable_sylow_tower,
    is_p_nilpotent, is_supersolvable, p_core, p_prime_core, small_orders_central,
};
pub use subgroup::Subgroup;
pub use sylow::sylow_subgroup;
