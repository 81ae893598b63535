//! Exact-arithmetic toolkit for split 3-Lie-Rinehart color algebras given by
//! structure constants: validation of every defining identity, split
//! extraction (roots and weights over a declared Cartan), connection
//! relations and their classes, class-ideal decompositions, annihilators,
//! tightness, pairing, and simplicity probes.
//!
//! The core is generic over the scalar type via [`scalar::Scalar`]; the
//! shipped tooling instantiates everything at exact rationals ([`Q`]).

pub mod algebra;
pub mod axioms;
pub mod builtins;
pub mod connect;
pub mod decompose;
pub mod format;
pub mod grading;
pub mod report;
pub mod scalar;
pub mod split;
pub mod subspace;

pub use scalar::{Q, Scalar};

/// Concrete exact-rational aliases used by the file format, builtins and CLI.
pub type Vector = subspace::Vector<Q>;
pub type Subspace = subspace::Subspace<Q>;
pub type Pair = algebra::RinehartPair<Q>;
pub type Split = split::SplitDatum<Q>;
pub type Functional = split::Functional<Q>;
