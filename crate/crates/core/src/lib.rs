//! Exact computation in linearized two-dimensional cobordism categories.
//!
//! Cobordisms between unions of circles are recorded as genus-weighted set
//! partitions of their boundary circles together with a multiset of closed
//! components. On top of that free diagram algebra the crate provides:
//!
//! * evaluation of closed surfaces by a sequence `α` whose generating
//!   function is rational ([`ratfun`], [`skein`]),
//! * reduction to the finite skein normal form and the genus-forgetting
//!   functor to the partition category ([`skein`]),
//! * Gram matrices of the gluing pairing with exact, certified ranks, giving
//!   state-space dimensions and hom dimensions of the negligible quotient
//!   ([`statespace`], [`linalg`]),
//! * a canonical JSON format for morphisms ([`io`]).
//!
//! All arithmetic is over arbitrary-precision rationals.

pub mod cli;
pub mod diagram;
pub mod error;
pub mod io;
pub mod linalg;
pub mod partition;
pub mod ratfun;
pub mod skein;
pub mod statespace;

pub use diagram::{component_genus, ClosedComponents, Morphism, SurfaceDiagram};
pub use error::{Error, Result};
pub use linalg::{rank_kernel, ExactMatrix, RankKernel};
pub use partition::{
    enumerate_set_partitions, enumerate_weighted_partitions, stack_partitions, BoundaryLabel, MergeClass,
    MergeReport, SetPartition, Side, SizeLimit, WeightedPartition,
};
pub use ratfun::{EvaluationSequence, RationalSeries, SkeinData};
pub use skein::{
    evaluate_closed, evaluate_morphism, evaluate_scalar, functor_f, partition_compose, skein_reduce,
    trace_partition, PartitionMorphism, Theory,
};
pub use statespace::{
    equal_in_quotient, gram_matrix, is_negligible, pairing, quotient_hom_dim, statespace_dim, trace_morphism,
    GramResult,
};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
