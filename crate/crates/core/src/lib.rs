//! Finite Steiner triple systems, Steiner quasigroups and Steiner loops.
//!
//! The crate covers Cayley-table representations and the conversions
//! between the three structures, a small term language with a brute-force
//! identity checker, Pasch and Fano configurations, deciders for whether a
//! loop satisfies Moufang's theorem, concrete constructions with exhaustive
//! enumeration of small systems, and a search for separating identities.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod configurations;
pub mod constructions;
pub mod convert;
pub mod enumerate;
pub mod error;
pub mod explorer;
pub mod identity;
pub mod iso;
pub mod moufang;
pub mod system;
pub mod table;
pub mod term;

pub use configurations::{
    associating_triples, every_pasch_generates_fano, find_pasch_configs, find_pasch_configs_by_quadruples,
    is_anti_pasch, subsystem_generated, triple_closes_fano, PaschConfig,
};
pub use constructions::{
    affine_ag23, bose, cyclic_sts13, elementary_abelian_loop, fano, projective, steiner_loop_10,
};
pub use convert::{
    loop_to_quasigroup, loop_to_sts, quasigroup_to_loop, quasigroup_to_sts, sts_to_loop, sts_to_quasigroup,
};
pub use enumerate::{enumerate_sts, enumerate_sts_with_progress};
pub use error::{Error, Result};
pub use explorer::{enumerate_terms, find_identities, steiner_normalize, ExploreOptions, FoundIdentity};
pub use identity::{check_identity, eval_term, Assignment, Builtin, CheckReport};
pub use iso::{are_isomorphic, canonical_form};
pub use moufang::{
    is_group_on, is_moufang, satisfies_mt_definition, satisfies_mt_fano, satisfies_mt_prop1,
    subloop_generated, MTReport, MtMethod,
};
pub use system::{validate_sts, TripleSystem, ValidationReport};
pub use table::{is_steiner_loop, is_steiner_quasigroup, CayleyTable, LoopTable, QuasigroupTable};
pub use term::{parse_identity, parse_term, print_term, Identity, ParseError, Term};
