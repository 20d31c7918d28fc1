use std::fmt;
use std::sync::Arc;

use crate::category::backend::{backend_of, size};
use crate::category::object::ObjectRef;
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;

/// Backend representation of a morphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Payload {
    /// Total tabulation: entry `i` is the codomain index of domain element `i`.
    Table(Arc<[usize]>),
    /// `cod_dim × dom_dim` matrix over GF(2).
    Matrix(Arc<Gf2Matrix>),
}

/// A typed morphism `dom → cod`.
///
/// Payloads are canonical, so the derived equality is extensional equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    dom: ObjectRef,
    cod: ObjectRef,
    payload: Payload,
}

impl Morphism {
    /// Checks the payload against both endpoints before constructing.
    pub fn new(dom: ObjectRef, cod: ObjectRef, payload: Payload) -> Result<Self> {
        if dom.backend() != cod.backend() {
            return Err(Error::BackendMismatch { left: dom.backend(), right: cod.backend() });
        }
        let backend = backend_of(dom.backend());
        backend.check_payload(&payload, size(&dom)?, size(&cod)?)?;
        Ok(Self { dom, cod, payload })
    }

    /// Skips payload validation; callers guarantee the shape.
    pub(crate) fn from_parts(dom: ObjectRef, cod: ObjectRef, payload: Payload) -> Self {
        debug_assert_eq!(dom.backend(), cod.backend());
        Self { dom, cod, payload }
    }

    /// Builds a finite-set morphism from a function on canonical indices.
    pub fn tabulate(dom: ObjectRef, cod: ObjectRef, f: impl Fn(usize) -> usize) -> Result<Self> {
        let n = size(&dom)?;
        let table: Arc<[usize]> = (0..n).map(f).collect();
        Self::new(dom, cod, Payload::Table(table))
    }

    pub fn dom(&self) -> &ObjectRef {
        &self.dom
    }

    pub fn cod(&self) -> &ObjectRef {
        &self.cod
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    /// The tabulation, if this is a finite-set morphism.
    pub fn table(&self) -> Option<&[usize]> {
        match &self.payload {
            Payload::Table(t) => Some(t),
            Payload::Matrix(_) => None,
        }
    }

    pub fn matrix(&self) -> Option<&Gf2Matrix> {
        match &self.payload {
            Payload::Matrix(m) => Some(m),
            Payload::Table(_) => None,
        }
    }

    /// Image of a domain index under a tabulated morphism.
    ///
    /// Panics on matrix payloads or an out-of-range index.
    pub fn apply(&self, index: usize) -> usize {
        match &self.payload {
            Payload::Table(t) => t[index],
            Payload::Matrix(_) => panic!("apply on a linear morphism"),
        }
    }

    /// Same morphism with the endpoints renamed to isomorphic-by-index
    /// descriptors (used for unitors and associators, whose payloads are
    /// identities on canonical indices).
    pub(crate) fn retyped(&self, dom: ObjectRef, cod: ObjectRef) -> Self {
        Self { dom, cod, payload: self.payload.clone() }
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({} → {}, {:?})", self.dom, self.cod, self.payload)
    }
}
