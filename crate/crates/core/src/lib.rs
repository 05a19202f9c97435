//! Exact combinatorics of triangulations of locally discrete cyclically
//! ordered sets.
//!
//! Two kinds of cyclic orders are supported: finite polygons
//! ([`CyclicOrder::FiniteGon`]) and infinity-gons glued from finitely many
//! copies of ℤ ([`CyclicOrder::ThreadGon`]). On top of those the crate
//! provides
//!
//! - arcs, crossing, adjacency and rotation ([`arc`]),
//! - an exact solver for unit two-variable integer constraint systems
//!   ([`octagon`]),
//! - finitely presented, possibly infinite, arc sets and exact deciders for
//!   noncrossing, connectedness, maximality, triangulations and local
//!   finiteness ([`arcset`], [`props`]),
//! - flips and greedy flip sequences ([`flip`]),
//! - the dictionary between arcs and indecomposable objects of the type A
//!   cluster category ([`dictionary`]),
//! - Laurent polynomials, seeds and the exchange recurrence ([`laurent`],
//!   [`cluster`]),
//! - canonical constructions such as fans, the greedy locally finite
//!   triangulation and the classical examples ([`constructions`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod affine;
pub mod arc;
pub mod arcset;
pub mod cluster;
pub mod constructions;
pub mod cyclic;
pub mod dictionary;
mod error;
mod finite;
pub mod flip;
pub mod laurent;
pub mod octagon;
pub mod props;

pub use affine::AffinePointMap;
pub use arc::{Arc, NotArcReason};
pub use arcset::{ArcFamily, CrossingArcs, SymbolicArcSet};
pub use cyclic::{CyclicOrder, Point};
pub use error::{Error, Result};
pub use octagon::{FeasibilitySystem, Interval};
pub use props::{Deficiency, Triangle};
