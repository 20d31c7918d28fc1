//! Backend-neutral operations of a closed symmetric monoidal category.
//!
//! Currying is on the left factor: `Hom(Y⊗X, Z) ≅ Hom(X, [Y,Z])`, with
//! `eval_{Y,Z}: Y⊗[Y,Z] → Z` as the counit.

use crate::category::backend::{backend_of, same_backend, size, tabulable_size, validate_object};
use crate::category::morphism::Morphism;
use crate::category::object::{Descriptor, ObjectRef};
use crate::error::{Error, Result};

pub fn tensor_obj(a: &ObjectRef, b: &ObjectRef) -> Result<ObjectRef> {
    same_backend(a, b)?;
    Ok(ObjectRef::new(a.backend(), Descriptor::Tensor(a.clone(), b.clone())))
}

/// The internal hom `[Y,Z]`.
pub fn hom_obj(y: &ObjectRef, z: &ObjectRef) -> Result<ObjectRef> {
    same_backend(y, z)?;
    Ok(ObjectRef::new(y.backend(), Descriptor::Hom(y.clone(), z.clone())))
}

/// Left-nested tensor of several objects: `((A⊗B)⊗C)...`.
pub fn tensor_objs(objects: &[&ObjectRef]) -> Result<ObjectRef> {
    let (first, rest) = objects.split_first().ok_or(Error::EmptyPath)?;
    rest.iter().try_fold((*first).clone(), |acc, o| tensor_obj(&acc, o))
}

pub fn identity(a: &ObjectRef) -> Result<Morphism> {
    validate_object(a)?;
    let n = tabulable_size(a)?;
    Ok(Morphism::from_parts(a.clone(), a.clone(), backend_of(a.backend()).identity(n)))
}

/// `g ∘ f`.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    same_backend(f.cod(), g.dom())?;
    if f.cod() != g.dom() {
        return Err(Error::TypeMismatch { expected: g.dom().clone(), found: f.cod().clone() });
    }
    let payload = backend_of(f.dom().backend()).compose(
        g.payload(),
        f.payload(),
        size(f.dom())?,
        size(f.cod())?,
        size(g.cod())?,
    );
    Ok(Morphism::from_parts(f.dom().clone(), g.cod().clone(), payload))
}

/// Composite of a chain, applying `steps[0]` first.
pub fn compose_all(steps: &[Morphism]) -> Result<Morphism> {
    let (first, rest) = steps.split_first().ok_or(Error::EmptyPath)?;
    rest.iter().try_fold(first.clone(), |acc, g| compose(g, &acc))
}

/// `f ⊗ g`.
pub fn tensor_mor(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    same_backend(f.dom(), g.dom())?;
    let dom = tensor_obj(f.dom(), g.dom())?;
    let cod = tensor_obj(f.cod(), g.cod())?;
    tabulable_size(&dom)?;
    let payload = backend_of(dom.backend()).tensor(
        f.payload(),
        g.payload(),
        size(f.dom())?,
        size(f.cod())?,
        size(g.dom())?,
        size(g.cod())?,
    );
    Ok(Morphism::from_parts(dom, cod, payload))
}

/// `swap_{A,B}: A⊗B → B⊗A`.
pub fn swap(a: &ObjectRef, b: &ObjectRef) -> Result<Morphism> {
    let dom = tensor_obj(a, b)?;
    validate_object(&dom)?;
    tabulable_size(&dom)?;
    let payload = backend_of(a.backend()).swap(size(a)?, size(b)?);
    Ok(Morphism::from_parts(dom, tensor_obj(b, a)?, payload))
}

/// `λ_A: 1⊗A → A`.
pub fn lunitor(a: &ObjectRef) -> Result<Morphism> {
    let unit = ObjectRef::unit(a.backend());
    Ok(identity(a)?.retyped(tensor_obj(&unit, a)?, a.clone()))
}

pub fn lunitor_inv(a: &ObjectRef) -> Result<Morphism> {
    let unit = ObjectRef::unit(a.backend());
    Ok(identity(a)?.retyped(a.clone(), tensor_obj(&unit, a)?))
}

/// `ρ_A: A⊗1 → A`.
pub fn runitor(a: &ObjectRef) -> Result<Morphism> {
    let unit = ObjectRef::unit(a.backend());
    Ok(identity(a)?.retyped(tensor_obj(a, &unit)?, a.clone()))
}

pub fn runitor_inv(a: &ObjectRef) -> Result<Morphism> {
    let unit = ObjectRef::unit(a.backend());
    Ok(identity(a)?.retyped(a.clone(), tensor_obj(a, &unit)?))
}

/// `α_{A,B,C}: (A⊗B)⊗C → A⊗(B⊗C)`.
pub fn associator(a: &ObjectRef, b: &ObjectRef, c: &ObjectRef) -> Result<Morphism> {
    let left = tensor_obj(&tensor_obj(a, b)?, c)?;
    let right = tensor_obj(a, &tensor_obj(b, c)?)?;
    Ok(identity(&left)?.retyped(left, right))
}

/// `α⁻¹_{A,B,C}: A⊗(B⊗C) → (A⊗B)⊗C`.
pub fn associator_inv(a: &ObjectRef, b: &ObjectRef, c: &ObjectRef) -> Result<Morphism> {
    let left = tensor_obj(&tensor_obj(a, b)?, c)?;
    let right = tensor_obj(a, &tensor_obj(b, c)?)?;
    Ok(identity(&right)?.retyped(right, left))
}

/// `f: Y⊗X → Z` to its right adjoint `X → [Y,Z]`.
pub fn curry_left(f: &Morphism) -> Result<Morphism> {
    let (y, x) = f.dom().as_tensor().ok_or_else(|| Error::NotATensor(f.dom().clone()))?;
    let z = f.cod();
    let cod = hom_obj(y, z)?;
    size(&cod)?;
    let payload = backend_of(z.backend()).curry(f.payload(), size(y)?, size(x)?, size(z)?);
    Ok(Morphism::from_parts(x.clone(), cod, payload))
}

/// `g: X → [Y,Z]` to its left adjoint `Y⊗X → Z`.
pub fn uncurry_left(g: &Morphism) -> Result<Morphism> {
    let (y, z) = g.cod().as_hom().ok_or_else(|| Error::NotAHom(g.cod().clone()))?;
    let x = g.dom();
    let dom = tensor_obj(y, x)?;
    tabulable_size(&dom)?;
    let payload = backend_of(x.backend()).uncurry(g.payload(), size(y)?, size(x)?, size(z)?);
    Ok(Morphism::from_parts(dom, z.clone(), payload))
}

/// `eval_{Y,Z}: Y⊗[Y,Z] → Z`.
pub fn eval_morphism(y: &ObjectRef, z: &ObjectRef) -> Result<Morphism> {
    let hom = hom_obj(y, z)?;
    let dom = tensor_obj(y, &hom)?;
    validate_object(&dom)?;
    tabulable_size(&dom)?;
    let payload = backend_of(y.backend()).eval(size(y)?, size(z)?);
    Ok(Morphism::from_parts(dom, z.clone(), payload))
}

/// Internal composition `∘: [B,C]⊗[A,B] → [A,C]`, the curry of
/// `A⊗([B,C]⊗[A,B]) → [B,C]⊗(A⊗[A,B]) → [B,C]⊗B → B⊗[B,C] → C`.
pub fn internal_compose(a: &ObjectRef, b: &ObjectRef, c: &ObjectRef) -> Result<Morphism> {
    let bc = hom_obj(b, c)?;
    let ab = hom_obj(a, b)?;
    let steps = [
        associator_inv(a, &bc, &ab)?,
        tensor_mor(&swap(a, &bc)?, &identity(&ab)?)?,
        associator(&bc, a, &ab)?,
        tensor_mor(&identity(&bc)?, &eval_morphism(a, b)?)?,
        swap(&bc, b)?,
        eval_morphism(b, c)?,
    ];
    curry_left(&compose_all(&steps)?)
}

/// The point `1 → A` naming element (basis vector) `index`.
pub fn point(a: &ObjectRef, index: usize) -> Result<Morphism> {
    validate_object(a)?;
    let n = size(a)?;
    if index >= n {
        return Err(Error::OutOfRange { index, object: a.clone() });
    }
    let payload = backend_of(a.backend()).point(n, index);
    Ok(Morphism::from_parts(ObjectRef::unit(a.backend()), a.clone(), payload))
}

/// The unique `!: A → 1`; fails when the unit is not terminal.
pub fn to_unit(a: &ObjectRef) -> Result<Morphism> {
    let backend = backend_of(a.backend());
    let payload = backend
        .to_unit(tabulable_size(a)?)
        .ok_or(Error::UnitNotTerminal(a.backend()))?;
    Ok(Morphism::from_parts(a.clone(), ObjectRef::unit(a.backend()), payload))
}

/// The name `h#: 1 → [A,B]` of `h: A → B`, i.e. `curry_left(h ∘ ρ_A)`.
pub fn name_of(h: &Morphism) -> Result<Morphism> {
    curry_left(&compose(h, &runitor(h.dom())?)?)
}

/// The morphism `A → B` named by `p: 1 → [A,B]`.
pub fn unname(p: &Morphism) -> Result<Morphism> {
    let (a, _) = p.cod().as_hom().ok_or_else(|| Error::NotAHom(p.cod().clone()))?;
    compose(&uncurry_left(p)?, &runitor_inv(a)?)
}

/// Post-composition `[Y,f]: [Y,A] → [Y,B]`, the curry of `f ∘ eval_{Y,A}`.
pub fn hom_map(y: &ObjectRef, f: &Morphism) -> Result<Morphism> {
    curry_left(&compose(f, &eval_morphism(y, f.dom())?)?)
}

/// Extensional equality; errors when `f` and `g` are not parallel.
pub fn morphisms_equal(f: &Morphism, g: &Morphism) -> Result<bool> {
    parallel(f, g)?;
    Ok(f.payload() == g.payload())
}

pub(crate) fn parallel(f: &Morphism, g: &Morphism) -> Result<()> {
    same_backend(f.dom(), g.dom())?;
    if f.dom() != g.dom() {
        return Err(Error::TypeMismatch { expected: f.dom().clone(), found: g.dom().clone() });
    }
    if f.cod() != g.cod() {
        return Err(Error::TypeMismatch { expected: f.cod().clone(), found: g.cod().clone() });
    }
    Ok(())
}
