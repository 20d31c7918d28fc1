//! Systems derived from a flow: the shift on the path space `[T,Ω]`, the
//! transfer operator on patterns `[X,Ω]`, the Koopman pre-flow on
//! observables `[Ω,X]`, flat adjoints, orbits and evaluation at an instant.
//!
//! Every operator is the curry of an explicit composite of structure maps.

use crate::category::{
    associator, associator_inv, check_diagram, check_equal, compose, compose_all, curry_left,
    eval_morphism, hom_map, hom_obj, identity, lunitor_inv, size, swap, tensor_mor,
    DiagramPath, LawReport, Morphism, ObjectRef,
};
use crate::dynamics::{Flow, PreFlow, Semiconjugacy};
use crate::error::{Error, Result};
use crate::states::State;
use crate::time::TimeObject;

/// The path space `[T,Ω]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathSpace {
    time: TimeObject,
    omega: ObjectRef,
    object: ObjectRef,
}

impl PathSpace {
    pub fn new(time: &TimeObject, omega: &ObjectRef) -> Result<Self> {
        let object = hom_obj(time.object(), omega)?;
        size(&object)?;
        Ok(Self { time: time.clone(), omega: omega.clone(), object })
    }

    pub fn time(&self) -> &TimeObject {
        &self.time
    }

    pub fn omega(&self) -> &ObjectRef {
        &self.omega
    }

    pub fn object(&self) -> &ObjectRef {
        &self.object
    }

    /// `|Ω|^|T|` in finite sets, `dim T · dim Ω` in GF(2).
    pub fn size(&self) -> usize {
        size(&self.object).expect("checked on construction")
    }
}

/// The adjoint of `T⊗(T⊗P) → (T⊗T)⊗P → T⊗P → Ω`, i.e. the shift before
/// currying. Sends `(s, (t, p))` to `p(add(s, t))`.
fn shift_uncurried(time: &TimeObject, omega: &ObjectRef) -> Result<Morphism> {
    let t = time.object();
    let p = hom_obj(t, omega)?;
    compose_all(&[
        associator_inv(t, t, &p)?,
        tensor_mor(time.add(), &identity(&p)?)?,
        eval_morphism(t, omega)?,
    ])
}

/// `σ: T⊗[T,Ω] → [T,Ω]`, `σ(t, p)(s) = p(add(s, t))`.
pub fn shift_flow(time: &TimeObject, omega: &ObjectRef) -> Result<Flow> {
    let sigma = curry_left(&shift_uncurried(time, omega)?)?;
    let p = hom_obj(time.object(), omega)?;
    Flow::new(PreFlow::new(time.clone(), p, sigma)?)
}

/// `T̂Φ: T⊗[X,Ω] → [X,Ω]`, `T̂Φ(t, p)(x) = Φ(t, p(x))`, the curry of
/// `X⊗(T⊗H) → (X⊗T)⊗H → (T⊗X)⊗H → T⊗(X⊗H) → T⊗Ω → Ω`.
pub fn transfer_on_patterns(f: &Flow, x: &ObjectRef) -> Result<Flow> {
    let t = f.time().object();
    let om = f.omega();
    let h = hom_obj(x, om)?;
    let id_h = identity(&h)?;
    let composite = compose_all(&[
        associator_inv(x, t, &h)?,
        tensor_mor(&swap(x, t)?, &id_h)?,
        associator(t, x, &h)?,
        tensor_mor(&identity(t)?, &eval_morphism(x, om)?)?,
        f.phi().clone(),
    ])?;
    Flow::new(PreFlow::new(f.time().clone(), h, curry_left(&composite)?)?)
}

/// The transfer operator on paths: [`transfer_on_patterns`] with `X = T`.
pub fn transfer_flow(f: &Flow) -> Result<Flow> {
    transfer_on_patterns(f, f.time().object())
}

/// `U: T⊗[Ω,X] → [Ω,X]`, `U(t, g) = g ∘ Φᵗ`, the curry of
/// `Ω⊗(T⊗G) → (Ω⊗T)⊗G → (T⊗Ω)⊗G → Ω⊗G → X`.
///
/// Returned unvalidated: it is an action only up to the order of time.
pub fn koopman_preflow(f: &Flow, x: &ObjectRef) -> Result<PreFlow> {
    let t = f.time().object();
    let om = f.omega();
    let g = hom_obj(om, x)?;
    let id_g = identity(&g)?;
    let composite = compose_all(&[
        associator_inv(om, t, &g)?,
        tensor_mor(&swap(om, t)?, &id_g)?,
        tensor_mor(f.phi(), &id_g)?,
        eval_morphism(om, x)?,
    ])?;
    PreFlow::new(f.time().clone(), g, curry_left(&composite)?)
}

/// `Φ♭ = curry_left(Φ): Ω → [T,Ω]`, sending a state to its path.
pub fn flat_adjoint(f: &Flow) -> Result<Morphism> {
    curry_left(f.phi())
}

/// A path traced out by a state: a point `1 → [T,Ω]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orbit {
    path: Morphism,
}

impl Orbit {
    pub fn path(&self) -> &Morphism {
        &self.path
    }

    /// Canonical index of the path in `[T,Ω]`; finite sets only.
    pub fn index(&self) -> usize {
        self.path.apply(0)
    }
}

/// `curry_left(Φ ∘ (T⊗ω)): 1 → [T,Ω]`.
pub fn orbit(f: &Flow, state: &State) -> Result<Orbit> {
    if state.omega() != f.omega() {
        return Err(Error::TypeMismatch {
            expected: f.omega().clone(),
            found: state.omega().clone(),
        });
    }
    let t = f.time().object();
    let path = curry_left(&compose(f.phi(), &tensor_mor(&identity(t)?, state.morphism())?)?)?;
    Ok(Orbit { path })
}

/// `eval_0 = eval ∘ (start⊗P) ∘ λ⁻¹: [T,Ω] → Ω`.
pub fn eval_at_zero(time: &TimeObject, omega: &ObjectRef) -> Result<Morphism> {
    let p = hom_obj(time.object(), omega)?;
    compose_all(&[
        lunitor_inv(&p)?,
        tensor_mor(time.start(), &identity(&p)?)?,
        eval_morphism(time.object(), omega)?,
    ])
}

/// `eval_t = eval_0 ∘ σ ∘ (t⊗P) ∘ λ⁻¹: [T,Ω] → Ω`.
pub fn eval_at(time: &TimeObject, omega: &ObjectRef, t: usize) -> Result<Morphism> {
    let p = hom_obj(time.object(), omega)?;
    let instant = time.instant(t)?;
    compose_all(&[
        lunitor_inv(&p)?,
        tensor_mor(&instant, &identity(&p)?)?,
        shift_flow(time, omega)?.phi().clone(),
        eval_at_zero(time, omega)?,
    ])
}

/// `[T,f]: σ_Ω → σ_Ω'`, post-composition of paths with `f`.
pub fn shift_on_morphism(time: &TimeObject, f: &Morphism) -> Result<Semiconjugacy> {
    let post = hom_map(time.object(), f)?;
    Semiconjugacy::new(post, shift_flow(time, f.dom())?, shift_flow(time, f.cod())?)
}

/// `eval ∘ (T⊗σ) = eval ∘ (add⊗P) ∘ α⁻¹` on `T⊗(T⊗P)`.
pub fn check_shift_evaluation(time: &TimeObject, omega: &ObjectRef) -> Result<LawReport> {
    let t = time.object();
    let sigma = shift_flow(time, omega)?;
    let lhs = DiagramPath::new(vec![
        tensor_mor(&identity(t)?, sigma.phi())?,
        eval_morphism(t, omega)?,
    ])?;
    let rhs = DiagramPath::single(shift_uncurried(time, omega)?);
    check_diagram("shift evaluation identity", &lhs, &rhs)
}

/// `eval ∘ (T⊗T̂Φ) = Φ ∘ (T⊗eval) ∘ α ∘ (swap⊗P) ∘ α⁻¹` on `T⊗(T⊗P)`.
pub fn check_transfer_evaluation(f: &Flow) -> Result<LawReport> {
    let t = f.time().object();
    let om = f.omega();
    let p = hom_obj(t, om)?;
    let transfer = transfer_flow(f)?;
    let lhs = DiagramPath::new(vec![
        tensor_mor(&identity(t)?, transfer.phi())?,
        eval_morphism(t, om)?,
    ])?;
    let rhs = DiagramPath::new(vec![
        associator_inv(t, t, &p)?,
        tensor_mor(&swap(t, t)?, &identity(&p)?)?,
        associator(t, t, &p)?,
        tensor_mor(&identity(t)?, &eval_morphism(t, om)?)?,
        f.phi().clone(),
    ])?;
    check_diagram("transfer evaluation identity", &lhs, &rhs)
}

/// `eval_0 ∘ Φ♭ = id_Ω`.
pub fn check_flat_left_inverse(f: &Flow) -> Result<LawReport> {
    let lhs = compose(&eval_at_zero(f.time(), f.omega())?, &flat_adjoint(f)?)?;
    check_equal("time-zero evaluation inverts the flat adjoint", &lhs, &identity(f.omega())?)
}
