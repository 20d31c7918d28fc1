//! Closed symmetric monoidal categories with finite, tabulated morphisms,
//! and the extensional diagram checker.

pub(crate) mod backend;
mod diagram;
mod morphism;
mod object;
mod ops;
mod value;

pub use backend::{backend_of, is_terminal_unit, size, validate_object, Backend, MAX_TABULATION};
pub use diagram::{all_hold, check_counit_law, check_diagram, check_equal, DiagramPath, LawReport};
pub use morphism::{Morphism, Payload};
pub use object::{BackendId, BaseObject, Descriptor, ObjectRef};
pub use ops::{
    associator, associator_inv, compose, compose_all, curry_left, eval_morphism, hom_map, hom_obj,
    identity, internal_compose, lunitor, lunitor_inv, morphisms_equal, name_of, point, runitor,
    runitor_inv, swap, tensor_mor, tensor_obj, tensor_objs, to_unit, uncurry_left, unname,
};
pub use value::Value;

#[cfg(test)]
mod tests;
