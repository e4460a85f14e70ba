//! Finite posets, finite lattices, and the lattices of order ideals that
//! connect them.
//!
//! The crate is organized around the classical correspondence for
//! distributive lattices: every finite distributive lattice is isomorphic to
//! the lattice of order ideals of its poset of join-irreducible elements,
//! and the same construction relates locally finite distributive lattices
//! with a bottom element to the *finite* order ideals of an infinite base
//! poset (the Young lattice being the archetype).
//!
//! - [`poset`]: explicit finite partial orders, ideals, chains, antichains.
//! - [`lattice`]: finite lattices with meet/join tables, distributivity
//!   checks, join-irreducibles, join decomposition.
//! - [`birkhoff`]: the two representation maps between lattice elements and
//!   ideals of the irreducible poset, and round-trip verification.
//! - [`lazy`]: implicitly defined (possibly infinite, locally finite) base
//!   posets and size-bounded enumeration of their finite ideals.
//! - [`ideals`]: the ideal-lattice value type shared by [`birkhoff`] and
//!   [`lazy`].
//! - [`laws`]: finite-scale chain-condition probes (bottom detection,
//!   interval finiteness, prefix-join chains over antichains).
//! - [`families`]: standard test families (chains, antichains, Boolean and
//!   divisor lattices, grids, random posets).
//!
//! The crate is `no_std` (it allocates, but performs no IO); all types are
//! immutable after construction and every operation is a pure function of
//! its inputs.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod birkhoff;
pub mod families;
pub mod ideals;
pub mod lattice;
pub mod laws;
pub mod lazy;
pub mod poset;

pub use birkhoff::{eta, reconstruct, theta, verify_representation, RepresentationReport};
pub use ideals::{FiniteIdeal, IdealLattice};
pub use lattice::{FiniteLattice, LatticeError};
pub use laws::{check_bottom, longest_chain, partial_join_chain, ChainReport};
pub use lazy::{
    enumerate_finite_ideals, ideal_additions, join_ideals, meet_ideals, LazyPoset, Limits,
};
pub use poset::{FinitePoset, OrderIdeal, PosetError};
