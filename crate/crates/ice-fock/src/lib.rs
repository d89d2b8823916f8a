//! Exact symbolic engine for the quantum Fock space, metaplectic ice lattice
//! models and half-vertex operators, with machine verification of the
//! identities tying them together.

pub mod error;
pub mod fock;
pub mod hecke;
pub mod heisenberg;
pub mod lattice;
pub mod partition;
pub mod ring;
pub mod symm;

pub use error::{IceError, Result};
pub use fock::{BraVector, FockVector, WedgeWord};
pub use lattice::{DecoratedSpin, FiniteSystem, Flavor, VertexConfig};
pub use partition::{MayaWord, Partition, RibbonStrip, StripKind, SuperRibbonTableau};
pub use ring::{GSpec, GaussMono, Mono, Rat, RingCtx, RingElem};
