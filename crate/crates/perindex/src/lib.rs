//! Period and representation-index invariants of 2-cocycle classes on
//! finite groups.
//!
//! The library computes, for a finite group G and a normalized 2-cocycle
//! with values in Z/N (exponents of an N-th root of unity):
//!
//! * the period of the cocycle class, by a closed form over abelian groups
//!   (the order of the antisymmetrized pairing) and by an independent
//!   brute-force route (coboundary membership decided over Z/(N*|G|) via
//!   integer matrix diagonalization);
//! * the radical subgroup and the count of regular conjugacy classes;
//! * the multiset of irreducible projective-representation degrees, from a
//!   numerical block decomposition of the twisted group algebra that is
//!   certified by exact integer identities;
//! * the representation index: the gcd of the irreducible degrees.
//!
//! It also constructs certified instances realizing any admissible
//! (period, index) pair (m dividing n with equal prime support), including
//! explicit clock/shift representations witnessing the index.

pub mod arith;
pub mod cocycle;
pub mod construct;
pub mod error;
pub mod group;
pub mod io;
pub mod snf;
pub mod twisted;

pub use cocycle::{coboundary, BilinearForm, ClassInvariants, Cocycle, BRUTEFORCE_CAP};
pub use construct::{
    admissible_components, certify, heisenberg_rep, instance_rep, period_index_instance,
    symplectic_cocycle, Certificate, Check, PeriodIndexInstance, PrimeComponent,
    RestrictionWitness,
};
pub use error::{Error, Result};
pub use group::{
    is_subgroup, subgroup_generated, FiniteAbelianGroup, FiniteGroup, GroupRef, Subgroup,
    DEFAULT_GROUP_CAP,
};
pub use io::{
    analyze, build_instance, parse_instance, AnalysisReport, InstanceFile, ParsedInstance,
    TOOL_VERSION,
};
pub use twisted::{
    rep_index, DegreeProfile, ProjectiveRep, TwistedAlgebra, TOL_EIG, TOL_REP,
};
