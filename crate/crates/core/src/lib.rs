//! Scalar linear index codes over GF(2) for multiple-unicast problems with
//! symmetric side information, and the lifting construction that turns a
//! `K`-message problem and code into `mK`-message ones of the same length.
//!
//! The crate is organized bottom-up:
//!
//! * [`gf2`]: bit-packed vectors and matrices, rank and span membership.
//! * [`problem`]: problems, codes, their JSON forms and DOT export.
//! * [`family`] and [`construct`]: the named families, their antidote
//!   patterns and optimal codes; [`capacity`] for neighboring antidotes.
//! * [`lift`]: lifting of problems and codes, the `K - a_max` length bound.
//! * [`verify`], [`minrank`], [`classify`]: decodability, exact minrank for
//!   small instances, family recognition and closure under lifting.

pub mod capacity;
pub mod classify;
pub mod construct;
pub mod error;
pub mod family;
pub mod gf2;
pub mod lift;
pub mod minrank;
pub mod problem;
pub mod verify;

pub use capacity::{capacity, CapacityQuery, RationalCapacity};
pub use classify::{check_closure, classify, ClosureResult};
pub use construct::{construct, construct_problem_only};
pub use error::{Error, Result};
pub use family::{instances_with_k, ClassDescriptor, Derived, Family};
pub use gf2::{GF2Matrix, GF2Vector, RowBasis};
pub use lift::{
    length_lower_bound, lift_code, lift_problem, optimality_certificate, LiftSpec,
    OptimalityCertificate, OptimalityStatus,
};
pub use minrank::{
    minrank, minrank_with, MinrankOptions, MinrankResult, MinrankStatus, DEFAULT_MAX_FREE_BITS,
};
pub use problem::{
    cyclic_index, format_symbol, CodeDoc, IndexCodingProblem, LinearIndexCode, ProblemDoc,
};
pub use verify::{verify, VerificationReport};
