//! Flows, parametric forms and semiconjugacies.
//!
//! A flow is a left action `Φ: T⊗Ω → Ω`. Its parametric form is the sharp
//! adjoint `Φ# = curry_left(Φ ∘ swap(Ω,T)): T → [Ω,Ω]`, a monoid morphism
//! into the endomorphism object. Both forms are checked by the same
//! extensional diagram machinery.

use crate::category::{
    associator, check_diagram, check_equal, compose, compose_all, curry_left, identity,
    internal_compose, lunitor, lunitor_inv, name_of, runitor_inv, swap, tensor_mor, tensor_obj,
    uncurry_left, DiagramPath, LawReport, Morphism, ObjectRef,
};
use crate::error::{Error, Result};
use crate::time::TimeObject;

/// A morphism `T⊗Ω → Ω` with no laws imposed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreFlow {
    time: TimeObject,
    omega: ObjectRef,
    phi: Morphism,
}

impl PreFlow {
    /// Checks typing only.
    pub fn new(time: TimeObject, omega: ObjectRef, phi: Morphism) -> Result<Self> {
        let dom = tensor_obj(time.object(), &omega)?;
        if phi.dom() != &dom {
            return Err(Error::TypeMismatch { expected: dom, found: phi.dom().clone() });
        }
        if phi.cod() != &omega {
            return Err(Error::TypeMismatch { expected: omega, found: phi.cod().clone() });
        }
        Ok(Self { time, omega, phi })
    }

    /// A finite-set pre-flow from `(t, x) ↦ x'` on indices.
    pub fn from_fn(
        time: TimeObject,
        omega: ObjectRef,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = crate::category::size(&omega)?;
        let dom = tensor_obj(time.object(), &omega)?;
        let phi = if n == 0 {
            Morphism::tabulate(dom, omega.clone(), |_| 0)?
        } else {
            Morphism::tabulate(dom, omega.clone(), |k| f(k / n, k % n))?
        };
        Self::new(time, omega, phi)
    }

    pub fn time(&self) -> &TimeObject {
        &self.time
    }

    pub fn omega(&self) -> &ObjectRef {
        &self.omega
    }

    pub fn phi(&self) -> &Morphism {
        &self.phi
    }

    /// Same as [`validate_flow`].
    pub fn validate(&self) -> Result<Vec<LawReport>> {
        validate_flow(self)
    }
}

/// A pre-flow known to satisfy both action laws.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flow {
    pre: PreFlow,
}

impl Flow {
    /// Validates the action laws; the first failing law becomes the error.
    pub fn new(pre: PreFlow) -> Result<Self> {
        for report in validate_flow(&pre)? {
            report.into_result()?;
        }
        Ok(Self { pre })
    }

    /// `Φ(t, x) = x`, i.e. `λ ∘ (ε⊗Ω)` with `ε` the augmentation of `T`.
    pub fn identity(time: &TimeObject, omega: &ObjectRef) -> Result<Self> {
        let phi = compose(
            &lunitor(omega)?,
            &tensor_mor(&time.augmentation()?, &identity(omega)?)?,
        )?;
        Self::new(PreFlow::new(time.clone(), omega.clone(), phi)?)
    }

    /// A monoid acting on itself by left multiplication.
    pub fn regular(time: &TimeObject) -> Result<Self> {
        Self::new(PreFlow::new(time.clone(), time.object().clone(), time.add().clone())?)
    }

    pub fn time(&self) -> &TimeObject {
        &self.pre.time
    }

    pub fn omega(&self) -> &ObjectRef {
        &self.pre.omega
    }

    pub fn phi(&self) -> &Morphism {
        &self.pre.phi
    }

    pub fn as_preflow(&self) -> &PreFlow {
        &self.pre
    }

    pub fn into_preflow(self) -> PreFlow {
        self.pre
    }

    /// `Φ(t, x)` on canonical indices; finite-set flows only.
    pub fn apply(&self, t: usize, x: usize) -> usize {
        let n = crate::category::size(self.omega()).expect("validated object");
        self.phi().apply(t * n + x)
    }
}

/// Checks the unit and composition laws of a left action.
///
/// Counterexamples are `(•, x)` for the unit law and `((s, t), x)` for the
/// composition law `Φ(add(s,t), x) = Φ(s, Φ(t, x))`.
pub fn validate_flow(p: &PreFlow) -> Result<Vec<LawReport>> {
    let t = p.time.object();
    let om = &p.omega;
    let id_t = identity(t)?;
    let id_om = identity(om)?;
    let unit = check_diagram(
        "flow unit law",
        &DiagramPath::new(vec![tensor_mor(p.time.start(), &id_om)?, p.phi.clone()])?,
        &DiagramPath::single(lunitor(om)?),
    )?;
    let composition = check_diagram(
        "flow composition law",
        &DiagramPath::new(vec![tensor_mor(p.time.add(), &id_om)?, p.phi.clone()])?,
        &DiagramPath::new(vec![
            associator(t, t, om)?,
            tensor_mor(&id_t, &p.phi)?,
            p.phi.clone(),
        ])?,
    )?;
    Ok(vec![unit, composition])
}

/// A morphism `Φ#: T → [Ω,Ω]` satisfying the unit triangle and the
/// composition square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParametricDynamics {
    time: TimeObject,
    omega: ObjectRef,
    phi_sharp: Morphism,
}

impl ParametricDynamics {
    /// Validates both laws.
    pub fn new(time: TimeObject, omega: ObjectRef, phi_sharp: Morphism) -> Result<Self> {
        for report in validate_parametric(&time, &omega, &phi_sharp)? {
            report.into_result()?;
        }
        Ok(Self { time, omega, phi_sharp })
    }

    pub fn time(&self) -> &TimeObject {
        &self.time
    }

    pub fn omega(&self) -> &ObjectRef {
        &self.omega
    }

    pub fn phi_sharp(&self) -> &Morphism {
        &self.phi_sharp
    }
}

/// `Φ#∘start = id_Ω#` and `Φ#∘add = ∘∘(Φ#⊗Φ#)`.
pub fn validate_parametric(
    time: &TimeObject,
    omega: &ObjectRef,
    phi_sharp: &Morphism,
) -> Result<Vec<LawReport>> {
    let endo = crate::category::hom_obj(omega, omega)?;
    if phi_sharp.dom() != time.object() {
        return Err(Error::TypeMismatch {
            expected: time.object().clone(),
            found: phi_sharp.dom().clone(),
        });
    }
    if phi_sharp.cod() != &endo {
        return Err(Error::TypeMismatch { expected: endo, found: phi_sharp.cod().clone() });
    }
    let unit = check_diagram(
        "parametric unit law",
        &DiagramPath::new(vec![time.start().clone(), phi_sharp.clone()])?,
        &DiagramPath::single(name_of(&identity(omega)?)?),
    )?;
    let composition = check_diagram(
        "parametric composition law",
        &DiagramPath::new(vec![time.add().clone(), phi_sharp.clone()])?,
        &DiagramPath::new(vec![
            tensor_mor(phi_sharp, phi_sharp)?,
            internal_compose(omega, omega, omega)?,
        ])?,
    )?;
    Ok(vec![unit, composition])
}

/// `curry_left(Φ ∘ swap(Ω,T))` for any pre-flow.
pub fn sharp_of_preflow(p: &PreFlow) -> Result<Morphism> {
    curry_left(&compose(&p.phi, &swap(&p.omega, p.time.object())?)?)
}

/// `uncurry_left(Φ#) ∘ swap(T,Ω)`.
pub fn flow_of_sharp(time: &TimeObject, omega: &ObjectRef, phi_sharp: &Morphism) -> Result<Morphism> {
    compose(&uncurry_left(phi_sharp)?, &swap(time.object(), omega)?)
}

pub fn flow_to_parametric(f: &Flow) -> Result<ParametricDynamics> {
    let sharp = sharp_of_preflow(f.as_preflow())?;
    ParametricDynamics::new(f.time().clone(), f.omega().clone(), sharp)
}

pub fn parametric_to_flow(p: &ParametricDynamics) -> Result<Flow> {
    let phi = flow_of_sharp(&p.time, &p.omega, &p.phi_sharp)?;
    Flow::new(PreFlow::new(p.time.clone(), p.omega.clone(), phi)?)
}

/// A morphism of flows `h: Φ → Ψ` over the same time object.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semiconjugacy {
    source: Flow,
    target: Flow,
    h: Morphism,
}

impl Semiconjugacy {
    /// Validates the square `Ψ∘(T⊗h) = h∘Φ`.
    pub fn new(h: Morphism, source: Flow, target: Flow) -> Result<Self> {
        is_semiconjugacy(&h, &source, &target)?.into_result()?;
        Ok(Self { source, target, h })
    }

    /// The identity semiconjugacy on a flow.
    pub fn identity(flow: &Flow) -> Result<Self> {
        Self::new(identity(flow.omega())?, flow.clone(), flow.clone())
    }

    pub fn source(&self) -> &Flow {
        &self.source
    }

    pub fn target(&self) -> &Flow {
        &self.target
    }

    pub fn h(&self) -> &Morphism {
        &self.h
    }
}

fn check_endpoints(h: &Morphism, src: &Flow, tgt: &Flow) -> Result<()> {
    if src.time() != tgt.time() {
        return Err(Error::TimeMismatch);
    }
    if h.dom() != src.omega() {
        return Err(Error::TypeMismatch { expected: src.omega().clone(), found: h.dom().clone() });
    }
    if h.cod() != tgt.omega() {
        return Err(Error::TypeMismatch { expected: tgt.omega().clone(), found: h.cod().clone() });
    }
    Ok(())
}

/// The square `h∘Φ = Ψ∘(T⊗h)` on `T⊗Ω`; counterexamples are `(t, x)`.
pub fn is_semiconjugacy(h: &Morphism, src: &Flow, tgt: &Flow) -> Result<LawReport> {
    check_endpoints(h, src, tgt)?;
    check_diagram(
        "semiconjugacy square",
        &DiagramPath::new(vec![src.phi().clone(), h.clone()])?,
        &DiagramPath::new(vec![tensor_mor(&identity(src.time().object())?, h)?, tgt.phi().clone()])?,
    )
}

/// The name `h#: 1 → [Ω,Ω']`.
pub fn sharp_of_morphism(h: &Morphism) -> Result<Morphism> {
    name_of(h)
}

/// The enriched naturality hexagon for a fixed pair of state objects, with
/// both internal compositions built once.
#[derive(Debug, Clone)]
pub struct EnrichedHexagon {
    time: ObjectRef,
    post: Morphism,
    pre: Morphism,
    rho_inv: Morphism,
    lambda_inv: Morphism,
}

impl EnrichedHexagon {
    pub fn new(time: &TimeObject, omega: &ObjectRef, omega2: &ObjectRef) -> Result<Self> {
        let t = time.object();
        Ok(Self {
            time: t.clone(),
            post: internal_compose(omega, omega2, omega2)?,
            pre: internal_compose(omega, omega, omega2)?,
            rho_inv: runitor_inv(t)?,
            lambda_inv: lunitor_inv(t)?,
        })
    }

    /// `∘∘(Ψ#⊗h#)∘ρ⁻¹` against `∘∘(h#⊗Φ#)∘λ⁻¹`; counterexamples are instants.
    pub fn check(&self, h_sharp: &Morphism, src_sharp: &Morphism, tgt_sharp: &Morphism) -> Result<LawReport> {
        if src_sharp.dom() != &self.time || tgt_sharp.dom() != &self.time {
            return Err(Error::TimeMismatch);
        }
        let lhs = DiagramPath::new(vec![
            self.rho_inv.clone(),
            tensor_mor(tgt_sharp, h_sharp)?,
            self.post.clone(),
        ])?;
        let rhs = DiagramPath::new(vec![
            self.lambda_inv.clone(),
            tensor_mor(h_sharp, src_sharp)?,
            self.pre.clone(),
        ])?;
        check_diagram("enriched naturality hexagon", &lhs, &rhs)
    }
}

/// Checks the enriched naturality hexagon for `h#` between the parametric
/// forms of `src` and `tgt`.
pub fn enriched_morphism_check(h_sharp: &Morphism, src: &Flow, tgt: &Flow) -> Result<LawReport> {
    if src.time() != tgt.time() {
        return Err(Error::TimeMismatch);
    }
    let hom = crate::category::hom_obj(src.omega(), tgt.omega())?;
    if h_sharp.cod() != &hom || !h_sharp.dom().is_unit() {
        return Err(Error::TypeMismatch { expected: hom, found: h_sharp.cod().clone() });
    }
    EnrichedHexagon::new(src.time(), src.omega(), tgt.omega())?.check(
        h_sharp,
        &sharp_of_preflow(src.as_preflow())?,
        &sharp_of_preflow(tgt.as_preflow())?,
    )
}

/// `(h'∘h)# = ∘∘(h'#⊗h#)∘λ⁻¹_1`.
pub fn sharp_composite(h2_sharp: &Morphism, h1_sharp: &Morphism) -> Result<Morphism> {
    let (a, b) = h1_sharp.cod().as_hom().ok_or_else(|| Error::NotAHom(h1_sharp.cod().clone()))?;
    let (b2, c) = h2_sharp.cod().as_hom().ok_or_else(|| Error::NotAHom(h2_sharp.cod().clone()))?;
    if b != b2 {
        return Err(Error::TypeMismatch { expected: b.clone(), found: b2.clone() });
    }
    let unit = ObjectRef::unit(a.backend());
    compose_all(&[
        lunitor_inv(&unit)?,
        tensor_mor(h2_sharp, h1_sharp)?,
        internal_compose(a, b, c)?,
    ])
}

/// `h2 ∘ h1`, also checking that the sharp of the composite is the
/// internal composite of the sharps.
pub fn compose_semiconjugacy(h2: &Semiconjugacy, h1: &Semiconjugacy) -> Result<Semiconjugacy> {
    if h1.target != h2.source {
        return Err(Error::EndpointMismatch);
    }
    let h = compose(&h2.h, &h1.h)?;
    let via_sharps = sharp_composite(&name_of(&h2.h)?, &name_of(&h1.h)?)?;
    check_equal("sharp of composite", &name_of(&h)?, &via_sharps)?.into_result()?;
    Ok(Semiconjugacy { source: h1.source.clone(), target: h2.target.clone(), h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{self, FiniteMonoid};
    use crate::gf2;

    fn z3() -> TimeObject {
        FiniteMonoid::cyclic(3).as_time_object()
    }

    fn abc() -> ObjectRef {
        finset::object(&["a", "b", "c"]).unwrap()
    }

    fn rotation() -> Flow {
        Flow::new(PreFlow::from_fn(z3(), abc(), |t, x| (t + x) % 3).unwrap()).unwrap()
    }

    fn rot(k: usize) -> Morphism {
        let om = abc();
        Morphism::tabulate(om.clone(), om, |x| (x + k) % 3).unwrap()
    }

    #[test]
    fn rotation_and_identity_are_flows() {
        let r = rotation();
        assert!(validate_flow(r.as_preflow()).unwrap().iter().all(LawReport::holds));
        for m in [FiniteMonoid::cyclic(3), FiniteMonoid::max_chain(3), FiniteMonoid::trivial()] {
            let f = Flow::identity(&m.as_time_object(), &abc()).unwrap();
            assert_eq!(f.apply(m.len() - 1, 2), 2);
        }
    }

    #[test]
    fn squared_time_is_not_a_flow() {
        let pre = PreFlow::from_fn(z3(), abc(), |t, x| (t * t + x) % 3).unwrap();
        let reports = validate_flow(&pre).unwrap();
        assert!(reports[0].holds());
        let comp = &reports[1];
        assert!(!comp.holds());
        // first failing input in canonical order: s = 0 is fine, s = 1, t = 1
        assert_eq!(comp.counterexample().unwrap().to_string(), "((1,1),a)");
        assert!(matches!(Flow::new(pre), Err(Error::LawViolation(_))));
    }

    #[test]
    fn preflow_typing_is_checked() {
        let phi = rot(1);
        assert!(matches!(PreFlow::new(z3(), abc(), phi), Err(Error::TypeMismatch { .. })));
    }

    #[test]
    fn parametric_form_of_rotation() {
        let p = flow_to_parametric(&rotation()).unwrap();
        let sharp = p.phi_sharp();
        assert_eq!(sharp.apply(0), name_of(&rot(0)).unwrap().apply(0));
        assert_eq!(sharp.apply(1), name_of(&rot(1)).unwrap().apply(0));
        assert_eq!(parametric_to_flow(&p).unwrap(), rotation());
    }

    #[test]
    fn parametric_form_of_identity_and_trivial_flows() {
        let id = Flow::identity(&z3(), &abc()).unwrap();
        let p = flow_to_parametric(&id).unwrap();
        let id_name = name_of(&identity(&abc()).unwrap()).unwrap().apply(0);
        assert!(p.phi_sharp().table().unwrap().iter().all(|&w| w == id_name));
        let triv = Flow::identity(&FiniteMonoid::trivial().as_time_object(), &abc()).unwrap();
        assert_eq!(flow_to_parametric(&triv).unwrap().phi_sharp().table(), Some(&[id_name][..]));
    }

    #[test]
    fn gf2_regular_representation() {
        let t = gf2::group_algebra_monoid(&FiniteMonoid::cyclic(2));
        let f = Flow::regular(&t).unwrap();
        let p = flow_to_parametric(&f).unwrap();
        assert_eq!(parametric_to_flow(&p).unwrap(), f);
        let id = Flow::identity(&t, &gf2::space(2)).unwrap();
        assert!(validate_flow(id.as_preflow()).unwrap().iter().all(LawReport::holds));
    }

    #[test]
    fn semiconjugacies_of_rotation() {
        let r = rotation();
        assert!(is_semiconjugacy(&identity(&abc()).unwrap(), &r, &r).unwrap().holds());
        assert!(is_semiconjugacy(&rot(1), &r, &r).unwrap().holds());
        let point = finset::object(&["*"]).unwrap();
        let triv = Flow::identity(&z3(), &point).unwrap();
        let collapse = finset::map(&abc(), &point, &["*", "*", "*"]).unwrap();
        assert!(is_semiconjugacy(&collapse, &r, &triv).unwrap().holds());
        let other_time = Flow::identity(&FiniteMonoid::cyclic(2).as_time_object(), &abc()).unwrap();
        assert_eq!(is_semiconjugacy(&rot(1), &r, &other_time), Err(Error::TimeMismatch));
    }

    #[test]
    fn hexagon_agrees_with_square() {
        let r = rotation();
        for h in [identity(&abc()).unwrap(), rot(1)] {
            let sharp = sharp_of_morphism(&h).unwrap();
            assert!(enriched_morphism_check(&sharp, &r, &r).unwrap().holds());
        }
        // a corrupted map fails both checks at the same instant
        let bad = finset::map(&abc(), &abc(), &["b", "c", "c"]).unwrap();
        let square = is_semiconjugacy(&bad, &r, &r).unwrap();
        let hex = enriched_morphism_check(&sharp_of_morphism(&bad).unwrap(), &r, &r).unwrap();
        assert!(!square.holds() && !hex.holds());
        let t_square = square.counterexample().unwrap().leaves()[0].clone();
        assert_eq!(hex.counterexample().unwrap(), &t_square);
    }

    #[test]
    fn composing_semiconjugacies() {
        let r = rotation();
        let h1 = Semiconjugacy::new(rot(1), r.clone(), r.clone()).unwrap();
        let h2 = compose_semiconjugacy(&h1, &h1).unwrap();
        assert_eq!(h2.h(), &rot(2));
        let id = Semiconjugacy::identity(&r).unwrap();
        assert_eq!(compose_semiconjugacy(&id, &h1).unwrap(), h1);

        let point = finset::object(&["*"]).unwrap();
        let triv = Flow::identity(&z3(), &point).unwrap();
        let collapse = finset::map(&abc(), &point, &["*", "*", "*"]).unwrap();
        let q = Semiconjugacy::new(collapse, r.clone(), triv).unwrap();
        assert_eq!(compose_semiconjugacy(&h1, &q), Err(Error::EndpointMismatch));
    }
}
