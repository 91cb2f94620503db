//! Exact computations in the combinatorial Hopf algebras WQSym, WQSym*,
//! QSym, Sym, FQSym and WSym over the field of rational functions in `t`,
//! together with Dyck graphs, chromatic quasi-symmetric functions,
//! unicellular LLT polynomials, their noncommutative lifts, and the
//! alphabet transforms connecting them.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every identity
//! implemented here can be checked at small degree with the [`verify`]
//! module or the `chromatic-hopf` command-line tool.

pub mod algebra;
pub mod chromatic;
pub mod graphs;
pub mod json;
pub mod partitions;
pub mod ratfun;
pub mod transforms;
pub mod verify;
pub mod words;

pub use algebra::{AlgebraError, Basis, Element, Key, TensorElement};
pub use graphs::{DyckGraph, GraphError, LabeledGraph};
pub use partitions::{PartitionError, SetPartition, StaircaseDiagram};
pub use ratfun::{q_factorial, q_integer, ArithError, Poly, QRat, RationalFunction};
pub use transforms::VirtualAlphabet;
pub use words::{Composition, PackedWord, Permutation, WordError};
