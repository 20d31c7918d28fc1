//! States `ω: 1 → Ω` and stationary states.
//!
//! Everything here except the [`State`] type needs a terminal unit, since
//! stationarity compares against `ω ∘ !`.

use crate::category::{
    check_diagram, compose_all, eval_morphism, hom_obj, internal_compose, is_terminal_unit,
    lunitor_inv, point, runitor, runitor_inv, size, tensor_mor, tensor_obj, to_unit, DiagramPath,
    LawReport, Morphism, ObjectRef, MAX_TABULATION,
};
use crate::dynamics::{sharp_of_preflow, Flow};
use crate::error::{Error, Result};

/// A morphism `1 → Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State {
    morphism: Morphism,
}

impl State {
    pub fn new(morphism: Morphism) -> Result<Self> {
        if !morphism.dom().is_unit() {
            return Err(Error::TypeMismatch {
                expected: ObjectRef::unit(morphism.dom().backend()),
                found: morphism.dom().clone(),
            });
        }
        Ok(Self { morphism })
    }

    /// The state picking element (basis vector) `index`.
    pub fn of_index(omega: &ObjectRef, index: usize) -> Result<Self> {
        Self::new(point(omega, index)?)
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn omega(&self) -> &ObjectRef {
        self.morphism.cod()
    }

    /// The element picked out; finite sets only.
    pub fn index(&self) -> usize {
        self.morphism.apply(0)
    }
}

/// A candidate `ω*: 1 → [1,Ω]` for an enriched stationary state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnrichedStationaryWitness {
    omega_star: Morphism,
}

impl EnrichedStationaryWitness {
    pub fn new(omega_star: Morphism) -> Result<Self> {
        let unit = ObjectRef::unit(omega_star.dom().backend());
        if omega_star.dom() != &unit {
            return Err(Error::TypeMismatch { expected: unit, found: omega_star.dom().clone() });
        }
        match omega_star.cod().as_hom() {
            Some((src, _)) if src.is_unit() => Ok(Self { omega_star }),
            _ => Err(Error::NotAHom(omega_star.cod().clone())),
        }
    }

    /// Every point of `[1,Ω]`, in carrier order.
    pub fn all(omega: &ObjectRef) -> Result<Vec<Self>> {
        require_terminal_unit(omega)?;
        let obj = hom_obj(&ObjectRef::unit(omega.backend()), omega)?;
        (0..size(&obj)?).map(|i| Self::new(point(&obj, i)?)).collect()
    }

    pub fn omega_star(&self) -> &Morphism {
        &self.omega_star
    }

    pub fn omega(&self) -> &ObjectRef {
        self.omega_star.cod().as_hom().expect("checked on construction").1
    }
}

fn require_terminal_unit(omega: &ObjectRef) -> Result<()> {
    if is_terminal_unit(omega.backend()) {
        Ok(())
    } else {
        Err(Error::UnitNotTerminal(omega.backend()))
    }
}

fn check_omega(f: &Flow, omega: &ObjectRef) -> Result<()> {
    if f.omega() != omega {
        return Err(Error::TypeMismatch { expected: f.omega().clone(), found: omega.clone() });
    }
    require_terminal_unit(omega)
}

/// One state per element of `Ω`, in carrier order.
pub fn all_states(omega: &ObjectRef) -> Result<Vec<State>> {
    require_terminal_unit(omega)?;
    (0..size(omega)?).map(|i| State::of_index(omega, i)).collect()
}

/// The square `Φ ∘ (T⊗ω) = ω ∘ !` on `T⊗1`.
pub fn is_stationary(f: &Flow, state: &State) -> Result<LawReport> {
    check_omega(f, state.omega())?;
    let t = f.time().object();
    let t1 = tensor_obj(t, &ObjectRef::unit(t.backend()))?;
    let lhs = DiagramPath::new(vec![
        tensor_mor(&crate::category::identity(t)?, state.morphism())?,
        f.phi().clone(),
    ])?;
    let rhs = DiagramPath::new(vec![to_unit(&t1)?, state.morphism().clone()])?;
    check_diagram("stationary state square", &lhs, &rhs)
}

/// The common upper path `∘ ∘ (Φ#⊗ω*) ∘ ρ⁻¹: T → [1,Ω]` of both cones.
fn cone_upper(f: &Flow, w: &EnrichedStationaryWitness) -> Result<DiagramPath> {
    let t = f.time().object();
    let om = f.omega();
    let unit = ObjectRef::unit(om.backend());
    DiagramPath::new(vec![
        runitor_inv(t)?,
        tensor_mor(&sharp_of_preflow(f.as_preflow())?, w.omega_star())?,
        internal_compose(&unit, om, om)?,
    ])
}

/// The cone with the lower path `ω* ∘ !`.
pub fn check_stationary_cone(f: &Flow, w: &EnrichedStationaryWitness) -> Result<LawReport> {
    check_omega(f, w.omega())?;
    let lower = DiagramPath::new(vec![to_unit(f.time().object())?, w.omega_star().clone()])?;
    check_diagram("enriched stationary cone", &cone_upper(f, w)?, &lower)
}

/// The cone with the lower path `ρ ∘ (ω*⊗!) ∘ λ⁻¹`, the enriched
/// naturality form against the constant functor.
pub fn check_stationary_naturality(f: &Flow, w: &EnrichedStationaryWitness) -> Result<LawReport> {
    check_omega(f, w.omega())?;
    let t = f.time().object();
    let lower = DiagramPath::new(vec![
        lunitor_inv(t)?,
        tensor_mor(w.omega_star(), &to_unit(t)?)?,
        runitor(w.omega_star().cod())?,
    ])?;
    check_diagram("enriched stationary naturality", &cone_upper(f, w)?, &lower)
}

/// Both enriched forms; the first is the cone with `ω* ∘ !`. A disagreement
/// between them is reported as an invariant error.
pub fn is_enriched_stationary(
    f: &Flow,
    w: &EnrichedStationaryWitness,
) -> Result<(LawReport, LawReport)> {
    let cone = check_stationary_cone(f, w)?;
    let naturality = check_stationary_naturality(f, w)?;
    if cone.holds() != naturality.holds() {
        return Err(Error::Invariant(format!(
            "enriched stationarity forms disagree: {cone}; {naturality}"
        )));
    }
    Ok((cone, naturality))
}

/// The ordinary state `eval ∘ (1⊗ω*) ∘ λ⁻¹_1` induced by a witness.
pub fn induced_state(w: &EnrichedStationaryWitness) -> Result<State> {
    let om = w.omega();
    let unit = ObjectRef::unit(om.backend());
    let m = compose_all(&[
        lunitor_inv(&unit)?,
        tensor_mor(&crate::category::identity(&unit)?, w.omega_star())?,
        eval_morphism(&unit, om)?,
    ])?;
    State::new(m)
}

/// The states passing [`is_stationary`], in carrier order.
///
/// Also checks that every enriched stationary witness induces one of them,
/// provided `[Ω,Ω]⊗[1,Ω]` is small enough to tabulate.
pub fn stationary_states(f: &Flow) -> Result<Vec<State>> {
    let mut out = Vec::new();
    for s in all_states(f.omega())? {
        if is_stationary(f, &s)?.holds() {
            out.push(s);
        }
    }
    let om = f.omega();
    let unit = ObjectRef::unit(om.backend());
    let cone_source = tensor_obj(&hom_obj(om, om)?, &hom_obj(&unit, om)?)?;
    if !size(&cone_source).is_ok_and(|n| n <= MAX_TABULATION) {
        return Ok(out);
    }
    for w in EnrichedStationaryWitness::all(f.omega())? {
        if is_enriched_stationary(f, &w)?.0.holds() {
            let s = induced_state(&w)?;
            if !out.contains(&s) {
                return Err(Error::Invariant(format!(
                    "enriched stationary witness induces a non-stationary state {}",
                    s.index()
                )));
            }
        }
    }
    Ok(out)
}
