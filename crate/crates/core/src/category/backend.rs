//! The backend-neutral interface every concrete category implements.
//!
//! Backends work on canonical indices only. An object of size `n` has its
//! elements (or basis vectors) numbered `0..n`; tensor elements `(a, b)` are
//! numbered `a * |B| + b`, and elements of `[Y,Z]` are numbered by reading
//! their tabulation (or flattened matrix) as a big-endian word. With that
//! numbering, unitors and associators are identities on indices and only the
//! descriptors change.

use crate::category::morphism::Payload;
use crate::category::object::{BackendId, BaseObject, Descriptor, ObjectRef};
use crate::category::value::Value;
use crate::error::{Error, Result};
use crate::finset::FinSetBackend;
use crate::gf2::Gf2Backend;

/// Largest domain a morphism payload may have.
pub const MAX_TABULATION: usize = 1 << 26;

pub trait Backend: Send + Sync {
    fn id(&self) -> BackendId;

    /// Carrier size (or dimension) of a generating object.
    fn base_size(&self, base: &BaseObject) -> Option<usize>;

    /// Size of `[Y,Z]` given the sizes of `Y` and `Z`; `None` on overflow.
    fn hom_size(&self, y: usize, z: usize) -> Option<usize>;

    fn has_terminal_unit(&self) -> bool;

    fn check_payload(&self, payload: &Payload, dom: usize, cod: usize) -> Result<()>;

    fn identity(&self, n: usize) -> Payload;

    /// `g ∘ f` for `f: dom → mid`, `g: mid → cod`.
    fn compose(&self, g: &Payload, f: &Payload, dom: usize, mid: usize, cod: usize) -> Payload;

    /// `f ⊗ g` where `f: a → b`, `g: c → d`.
    fn tensor(&self, f: &Payload, g: &Payload, a: usize, b: usize, c: usize, d: usize) -> Payload;

    /// `swap: A⊗B → B⊗A`.
    fn swap(&self, a: usize, b: usize) -> Payload;

    /// `f: Y⊗X → Z` to `X → [Y,Z]`.
    fn curry(&self, f: &Payload, y: usize, x: usize, z: usize) -> Payload;

    /// `g: X → [Y,Z]` to `Y⊗X → Z`.
    fn uncurry(&self, g: &Payload, y: usize, x: usize, z: usize) -> Payload;

    /// `eval: Y⊗[Y,Z] → Z`.
    fn eval(&self, y: usize, z: usize) -> Payload;

    /// First domain index (element or basis vector) where `f` and `g` differ.
    fn first_difference(&self, f: &Payload, g: &Payload) -> Option<usize>;

    /// The morphism `1 → A` picking element (basis vector) `index`.
    fn point(&self, n: usize, index: usize) -> Payload;

    /// The unique morphism `A → 1`, when the unit is terminal.
    fn to_unit(&self, n: usize) -> Option<Payload>;

    /// Human-readable element (basis vector) of an object.
    fn decode(&self, object: &ObjectRef, index: usize) -> Value;
}

static FINSET: FinSetBackend = FinSetBackend;
static GF2: Gf2Backend = Gf2Backend;

/// Resolves a backend id to its implementation.
pub fn backend_of(id: BackendId) -> &'static dyn Backend {
    match id {
        BackendId::FinSet => &FINSET,
        BackendId::Gf2Vect => &GF2,
    }
}

/// Carrier size (finite sets) or dimension (linear spaces) of an object.
pub fn size(object: &ObjectRef) -> Result<usize> {
    let backend = backend_of(object.backend());
    let n = match object.descriptor() {
        Descriptor::Base(base) => backend.base_size(base),
        Descriptor::Unit => Some(1),
        Descriptor::Tensor(l, r) => size(l)?.checked_mul(size(r)?),
        Descriptor::Hom(y, z) => backend.hom_size(size(y)?, size(z)?),
    };
    n.ok_or_else(|| match object.descriptor() {
        Descriptor::Base(_) => Error::UnknownObject(object.clone()),
        _ => Error::TooLarge(object.clone()),
    })
}

/// Like [`size`], but also bounded by [`MAX_TABULATION`].
pub(crate) fn tabulable_size(object: &ObjectRef) -> Result<usize> {
    let n = size(object)?;
    if n > MAX_TABULATION {
        return Err(Error::TooLarge(object.clone()));
    }
    Ok(n)
}

/// Checks that every base object inside a descriptor belongs to the backend.
pub fn validate_object(object: &ObjectRef) -> Result<()> {
    match object.descriptor() {
        Descriptor::Base(base) => backend_of(object.backend())
            .base_size(base)
            .map(|_| ())
            .ok_or_else(|| Error::UnknownObject(object.clone())),
        Descriptor::Unit => Ok(()),
        Descriptor::Tensor(a, b) | Descriptor::Hom(a, b) => {
            same_backend(object, a)?;
            same_backend(object, b)?;
            validate_object(a)?;
            validate_object(b)
        }
    }
}

pub(crate) fn same_backend(a: &ObjectRef, b: &ObjectRef) -> Result<()> {
    if a.backend() == b.backend() {
        Ok(())
    } else {
        Err(Error::BackendMismatch { left: a.backend(), right: b.backend() })
    }
}

/// Whether the unit object is terminal in the backend.
pub fn is_terminal_unit(backend: BackendId) -> bool {
    backend_of(backend).has_terminal_unit()
}
