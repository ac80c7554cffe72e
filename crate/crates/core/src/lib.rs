//! Hopf monoids in graphical species with two-parameter braidings.
//!
//! Every catalog monoid assigns to a finite simple graph `G` the free
//! `ℤ[q,t]`-module on a family of combinatorial structures (linear orders,
//! acyclic orientations, set compositions, partitions, flats, matchings).
//! This crate provides the structure maps, three independent antipode
//! computations, the morphisms between monoids, and an exhaustive verifier.

pub mod antipode;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod hopf;
pub mod key;
pub mod module;
pub mod monoid;
pub mod morphism;
pub mod poly;
pub mod verify;
pub mod vset;

pub use antipode::Method;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, OrderedBipartition, VertexPartition};
pub use key::{BasisKey, KeyJson, KeyKind};
pub use module::{Element, ElementJson, LinComb, TensorElement};
pub use monoid::{Braiding, MonoidId};
pub use morphism::MorphismId;
pub use poly::{Monomial, QtPoly};
pub use vset::VertexSet;
