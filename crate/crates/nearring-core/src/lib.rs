//! Finite group arithmetic, sandwich schemes and sandwich centralizer
//! near-rings, with primitivity decided both by theorem-side conditions
//! and by direct brute-force enumeration.
//!
//! Everything here is table driven and sized for desk-scale experiments:
//! groups up to order 64, near-rings up to a few thousand elements. All
//! values are immutable after construction and all operations are pure.
#![no_std]

extern crate alloc;

pub mod autos;
pub mod error;
pub mod group;
pub mod ngroup;
pub mod nearring;
pub mod primitivity;
pub mod sandwich;

pub use autos::{AutomorphismSet, GroupMap};
pub use error::Error;
pub use group::{ElementSet, FiniteGroup};
pub use ngroup::{NGroupAction, TypeVerdict};
pub use nearring::{NearRing, NearRingKind, NrElement};
pub use primitivity::{PrimitivityVerdict, PropertyPReport};
pub use sandwich::{PhiRecipe, SandwichScheme};

pub type Result<T> = core::result::Result<T, Error>;
