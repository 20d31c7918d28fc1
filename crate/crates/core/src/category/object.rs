use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// Which concrete category an object or morphism lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BackendId {
    /// Finite sets and total functions, tensor = Cartesian product.
    FinSet,
    /// Finite-dimensional GF(2) vector spaces, tensor = Kronecker product.
    Gf2Vect,
}

/// A generating object of a backend.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseObject {
    /// A finite set given by its ordered, distinct labels.
    Set(Arc<[String]>),
    /// A GF(2) vector space of the given dimension.
    Space(usize),
}

/// Canonical structural term for an object.
///
/// Structurally equal descriptors denote the same object. The monoidal
/// structure is not strict: `(A⊗B)⊗C` and `A⊗(B⊗C)` are different
/// descriptors related by the associator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Base(BaseObject),
    Unit,
    Tensor(ObjectRef, ObjectRef),
    Hom(ObjectRef, ObjectRef),
}

#[derive(Debug, Clone, Eq, Hash)]
pub struct ObjectRef {
    backend: BackendId,
    descriptor: Arc<Descriptor>,
}

impl PartialEq for ObjectRef {
    fn eq(&self, other: &Self) -> bool {
        // shared descriptors are the common case and skip the label walk
        self.backend == other.backend
            && (Arc::ptr_eq(&self.descriptor, &other.descriptor) || self.descriptor == other.descriptor)
    }
}

impl ObjectRef {
    pub(crate) fn new(backend: BackendId, descriptor: Descriptor) -> Self {
        Self { backend, descriptor: Arc::new(descriptor) }
    }

    /// The monoidal unit of a backend.
    pub fn unit(backend: BackendId) -> Self {
        Self::new(backend, Descriptor::Unit)
    }

    pub fn backend(&self) -> BackendId {
        self.backend
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn is_unit(&self) -> bool {
        matches!(*self.descriptor, Descriptor::Unit)
    }

    /// The factors `(Y, X)` if this object is `Y⊗X`.
    pub fn as_tensor(&self) -> Option<(&ObjectRef, &ObjectRef)> {
        match &*self.descriptor {
            Descriptor::Tensor(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// The pair `(Y, Z)` if this object is `[Y,Z]`.
    pub fn as_hom(&self) -> Option<(&ObjectRef, &ObjectRef)> {
        match &*self.descriptor {
            Descriptor::Hom(y, z) => Some((y, z)),
            _ => None,
        }
    }
}

impl fmt::Display for ObjectRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.descriptor {
            Descriptor::Base(BaseObject::Set(labels)) => write!(f, "{{{}}}", labels.join(",")),
            Descriptor::Base(BaseObject::Space(d)) => write!(f, "GF2^{d}"),
            Descriptor::Unit => write!(f, "1"),
            Descriptor::Tensor(l, r) => write!(f, "({l}⊗{r})"),
            Descriptor::Hom(y, z) => write!(f, "[{y},{z}]"),
        }
    }
}
