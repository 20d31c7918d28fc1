//! Executable categorical dynamics on finite closed symmetric monoidal
//! categories.
//!
//! Dynamical systems are monoid actions `Φ: T⊗Ω → Ω` of a time object `T`
//! on a state object `Ω`. The crate builds the derived systems (shift on the
//! path space `[T,Ω]`, transfer and Koopman operators, subshifts cut out by
//! equalizers, stationary states) with the categorical constructions
//! themselves, and checks every law by comparing tabulated composites.
//!
//! Two backends are provided: finite sets ([`finset`]) and finite
//! dimensional GF(2) vector spaces ([`gf2`]).

pub mod category;
pub mod derived;
pub mod dynamics;
pub mod enumerate;
mod error;
pub mod finset;
pub mod gf2;
pub mod states;
pub mod subshift;
pub mod time;

pub use error::{Error, Result};
