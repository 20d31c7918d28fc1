//! Equalizers in finite sets and the subshift of a flow.
//!
//! The subshift `E_Φ ⊆ [T,Ω]` is the equalizer of the flat adjoints of the
//! shift `σ` and the transfer operator `T̂Φ`: the paths `p` with
//! `p(add(s,t)) = Φ(t, p(s))` for all `s, t`.

use std::collections::HashSet;

use crate::category::{
    check_equal, compose, size, tensor_mor, BackendId, LawReport, Morphism, ObjectRef, Payload,
};
use crate::derived::{eval_at_zero, flat_adjoint, shift_flow, transfer_flow};
use crate::dynamics::{Flow, PreFlow, Semiconjugacy};
use crate::error::{Error, Result};
use crate::finset;

/// A subobject `q: E → X` on which a parallel pair agrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equalizer {
    object: ObjectRef,
    inclusion: Morphism,
}

impl Equalizer {
    pub fn object(&self) -> &ObjectRef {
        &self.object
    }

    pub fn inclusion(&self) -> &Morphism {
        &self.inclusion
    }

    /// Indices in `X` of the members of `E`, ascending.
    pub fn members(&self) -> &[usize] {
        self.inclusion.table().expect("finite-set equalizer")
    }

    pub fn len(&self) -> usize {
        self.members().len()
    }

    pub fn is_empty(&self) -> bool {
        self.members().is_empty()
    }

    /// The unique `u: A → E` with `q ∘ u = α`, if `α: A → X` lands in `E`.
    pub fn factor(&self, alpha: &Morphism) -> Result<Morphism> {
        let x = self.inclusion.cod();
        if alpha.cod() != x {
            return Err(Error::TypeMismatch { expected: x.clone(), found: alpha.cod().clone() });
        }
        let table = alpha.table().ok_or(Error::Unsupported(BackendId::Gf2Vect))?;
        let mut position = vec![None; size(x)?];
        for (i, &m) in self.members().iter().enumerate() {
            position[m] = Some(i);
        }
        let factored = table
            .iter()
            .map(|&v| position[v].ok_or(Error::NotEqualizing))
            .collect::<Result<_>>()?;
        Morphism::new(alpha.dom().clone(), self.object.clone(), Payload::Table(factored))
    }
}

/// The equalizer of a parallel pair of finite-set morphisms. Members keep
/// the order of the domain and are labelled by their rendered values.
pub fn equalizer(f: &Morphism, g: &Morphism) -> Result<Equalizer> {
    if f.dom() != g.dom() {
        return Err(Error::TypeMismatch { expected: f.dom().clone(), found: g.dom().clone() });
    }
    if f.cod() != g.cod() {
        return Err(Error::TypeMismatch { expected: f.cod().clone(), found: g.cod().clone() });
    }
    let (ft, gt) = match (f.table(), g.table()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Unsupported(f.dom().backend())),
    };
    let members: Vec<usize> = (0..ft.len()).filter(|&i| ft[i] == gt[i]).collect();
    let mut labels: Vec<String> =
        members.iter().map(|&i| finset::element(f.dom(), i).to_string()).collect();
    let distinct: HashSet<&String> = labels.iter().collect();
    if distinct.len() != labels.len() {
        labels = members.iter().map(|i| format!("#{i}")).collect();
    }
    let object = finset::object(&labels)?;
    let inclusion = Morphism::new(object.clone(), f.dom().clone(), Payload::Table(members.into()))?;
    Ok(Equalizer { object, inclusion })
}

/// Two flows on `X` restricted to the states where their paths agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlowEqualizer {
    left: Flow,
    right: Flow,
    equalizer: Equalizer,
    flow: Flow,
}

impl FlowEqualizer {
    pub fn left(&self) -> &Flow {
        &self.left
    }

    pub fn right(&self) -> &Flow {
        &self.right
    }

    pub fn equalizer(&self) -> &Equalizer {
        &self.equalizer
    }

    /// `F∩G: T⊗E → E`.
    pub fn flow(&self) -> &Flow {
        &self.flow
    }

    /// `q ∘ (F∩G) = F ∘ (T⊗q)` and `q ∘ (F∩G) = G ∘ (T⊗q)`.
    pub fn check_squares(&self) -> Result<Vec<LawReport>> {
        let q = self.equalizer.inclusion();
        let tq = tensor_mor(&crate::category::identity(self.flow.time().object())?, q)?;
        let restricted = compose(q, self.flow.phi())?;
        Ok(vec![
            check_equal("restriction square (left flow)", &restricted, &compose(self.left.phi(), &tq)?)?,
            check_equal("restriction square (right flow)", &restricted, &compose(self.right.phi(), &tq)?)?,
        ])
    }
}

/// The equalizer `E` of `F♭, G♭` with the flow `F∩G` obtained by factoring
/// `F ∘ (T⊗q)` through `q`.
pub fn flow_equalizer(f: &Flow, g: &Flow) -> Result<FlowEqualizer> {
    if f.time() != g.time() {
        return Err(Error::TimeMismatch);
    }
    if f.omega() != g.omega() {
        return Err(Error::TypeMismatch { expected: f.omega().clone(), found: g.omega().clone() });
    }
    let eq = equalizer(&flat_adjoint(f)?, &flat_adjoint(g)?)?;
    let q = eq.inclusion();
    let tq = tensor_mor(&crate::category::identity(f.time().object())?, q)?;
    let phi = eq.factor(&compose(f.phi(), &tq)?)?;
    let flow = Flow::new(PreFlow::new(f.time().clone(), eq.object().clone(), phi)?)?;
    Ok(FlowEqualizer { left: f.clone(), right: g.clone(), equalizer: eq, flow })
}

/// `E_Φ` with its shift `σ_Φ`, as the flow equalizer of `σ` and `T̂Φ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubshiftSystem {
    source: Flow,
    inner: FlowEqualizer,
}

impl SubshiftSystem {
    pub fn source(&self) -> &Flow {
        &self.source
    }

    pub fn equalizer(&self) -> &Equalizer {
        self.inner.equalizer()
    }

    /// `σ_Φ: T⊗E_Φ → E_Φ`.
    pub fn flow(&self) -> &Flow {
        self.inner.flow()
    }

    pub fn shift(&self) -> &Flow {
        self.inner.left()
    }

    pub fn transfer(&self) -> &Flow {
        self.inner.right()
    }

    /// `q∘σ_Φ = σ∘(T⊗q)` and `q∘σ_Φ = T̂Φ∘(T⊗q)`.
    pub fn check_squares(&self) -> Result<Vec<LawReport>> {
        self.inner.check_squares()
    }
}

pub fn subshift(f: &Flow) -> Result<SubshiftSystem> {
    let sigma = shift_flow(f.time(), f.omega())?;
    let transfer = transfer_flow(f)?;
    Ok(SubshiftSystem { source: f.clone(), inner: flow_equalizer(&sigma, &transfer)? })
}

/// `E(h): σ_Φ → σ_Ψ`, the factorization of `[T,h] ∘ q` through `q'`.
pub fn subshift_map_between(
    h: &Semiconjugacy,
    src: &SubshiftSystem,
    tgt: &SubshiftSystem,
) -> Result<Semiconjugacy> {
    if src.source() != h.source() || tgt.source() != h.target() {
        return Err(Error::EndpointMismatch);
    }
    let post = crate::category::hom_map(h.source().time().object(), h.h())?;
    let along = compose(&post, src.equalizer().inclusion())?;
    let e = tgt.equalizer().factor(&along)?;
    Semiconjugacy::new(e, src.flow().clone(), tgt.flow().clone())
}

pub fn subshift_map(h: &Semiconjugacy) -> Result<Semiconjugacy> {
    subshift_map_between(h, &subshift(h.source())?, &subshift(h.target())?)
}

/// The isomorphism `Ω ≅ E_Φ` for a flow over commutative time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubshiftIso {
    subshift: SubshiftSystem,
    iso: Morphism,
    reports: Vec<LawReport>,
}

impl SubshiftIso {
    pub fn subshift(&self) -> &SubshiftSystem {
        &self.subshift
    }

    /// `Ω → E_Φ`, the factorization of `Φ♭` through `q`.
    pub fn iso(&self) -> &Morphism {
        &self.iso
    }

    pub fn reports(&self) -> &[LawReport] {
        &self.reports
    }
}

/// Requires commutative time. Checks that `Φ♭` equalizes `σ♭, T̂Φ♭`,
/// factors it through `q`, and checks that the factorization is bijective
/// with `eval_0 ∘ q ∘ iso = id`.
pub fn subshift_iso(f: &Flow) -> Result<SubshiftIso> {
    if !f.time().monoid().is_commutative() {
        return Err(Error::NotCommutative);
    }
    let sub = subshift(f)?;
    let flat = flat_adjoint(f)?;
    let sigma_flat = flat_adjoint(sub.shift())?;
    let transfer_flat = flat_adjoint(sub.transfer())?;
    let equalizes = check_equal(
        "flat adjoint equalizes shift and transfer",
        &compose(&sigma_flat, &flat)?,
        &compose(&transfer_flat, &flat)?,
    )?
    .into_result()?;
    let iso = sub.equalizer().factor(&flat)?;
    let table = iso.table().expect("finite sets");
    let image: HashSet<usize> = table.iter().copied().collect();
    let bijective = if image.len() == table.len() && table.len() == sub.equalizer().len() {
        LawReport::pass("factorization is bijective")
    } else {
        let witness = (0..table.len())
            .find(|&i| table[..i].contains(&table[i]))
            .map(|i| finset::element(f.omega(), i))
            .unwrap_or(crate::category::Value::Star);
        LawReport::fail("factorization is bijective", witness)
    };
    let back = compose(&eval_at_zero(f.time(), f.omega())?, &compose(sub.equalizer().inclusion(), &iso)?)?;
    let inverse = check_equal(
        "time-zero evaluation inverts the iso",
        &back,
        &crate::category::identity(f.omega())?,
    )?;
    Ok(SubshiftIso { subshift: sub, iso, reports: vec![equalizes, bijective, inverse] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::identity;
    use crate::finset::FiniteMonoid;
    use crate::time::TimeObject;

    fn z3() -> TimeObject {
        FiniteMonoid::cyclic(3).as_time_object()
    }

    fn abc() -> ObjectRef {
        finset::object(&["a", "b", "c"]).unwrap()
    }

    fn rotation() -> Flow {
        Flow::new(PreFlow::from_fn(z3(), abc(), |t, x| (t + x) % 3).unwrap()).unwrap()
    }

    fn idempotent() -> Flow {
        let t = FiniteMonoid::max_chain(3).as_time_object();
        let om = finset::object(&["0", "1", "2"]).unwrap();
        let f = [0, 0, 2];
        Flow::new(PreFlow::from_fn(t, om, |t, x| if t == 0 { x } else { f[x] }).unwrap()).unwrap()
    }

    fn labels(e: &Equalizer) -> Vec<String> {
        finset::labels(e.object()).unwrap().to_vec()
    }

    #[test]
    fn equalizers_of_endomaps() {
        let om = abc();
        let id = identity(&om).unwrap();
        let e = equalizer(&id, &id).unwrap();
        assert_eq!(e.members(), [0, 1, 2]);
        let rot1 = finset::map(&om, &om, &["b", "c", "a"]).unwrap();
        assert!(equalizer(&id, &rot1).unwrap().is_empty());
        let n = finset::object(&["0", "1", "2"]).unwrap();
        let idem = finset::map(&n, &n, &["0", "0", "2"]).unwrap();
        let e = equalizer(&identity(&n).unwrap(), &idem).unwrap();
        assert_eq!(labels(&e), ["0", "2"]);
        assert!(equalizer(&id, &identity(&n).unwrap()).is_err());
    }

    #[test]
    fn factorization_through_an_equalizer() {
        let n = finset::object(&["0", "1", "2"]).unwrap();
        let idem = finset::map(&n, &n, &["0", "0", "2"]).unwrap();
        let e = equalizer(&identity(&n).unwrap(), &idem).unwrap();
        let two = finset::object(&["x", "y"]).unwrap();
        let alpha = finset::map(&two, &n, &["2", "0"]).unwrap();
        let u = e.factor(&alpha).unwrap();
        assert_eq!(u.table(), Some(&[1, 0][..]));
        assert_eq!(compose(e.inclusion(), &u).unwrap(), alpha);
        let beta = finset::map(&two, &n, &["1", "0"]).unwrap();
        assert_eq!(e.factor(&beta), Err(Error::NotEqualizing));
    }

    #[test]
    fn flow_equalizer_examples() {
        let r = rotation();
        let same = flow_equalizer(&r, &r).unwrap();
        assert_eq!(same.equalizer().len(), 3);
        assert_eq!(same.flow().phi().table(), r.phi().table());
        let id = Flow::identity(&z3(), &abc()).unwrap();
        let none = flow_equalizer(&r, &id).unwrap();
        assert!(none.equalizer().is_empty());
        assert!(none.check_squares().unwrap().iter().all(LawReport::holds));
        let f = idempotent();
        let fixed = flow_equalizer(&f, &Flow::identity(f.time(), f.omega()).unwrap()).unwrap();
        assert_eq!(labels(fixed.equalizer()), ["0", "2"]);
        assert_eq!(fixed.flow().phi().table(), Some(&[0, 1, 0, 1, 0, 1][..]));
    }

    #[test]
    fn subshift_of_rotation_is_the_orbit_paths() {
        let sub = subshift(&rotation()).unwrap();
        assert_eq!(
            labels(sub.equalizer()),
            ["[0→a,1→b,2→c]", "[0→b,1→c,2→a]", "[0→c,1→a,2→b]"]
        );
        assert!(sub.check_squares().unwrap().iter().all(LawReport::holds));
        // σ_Φ(1, ·) cycles the three orbit paths
        assert_eq!(sub.flow().apply(1, 0), 1);
        assert_eq!(sub.flow().apply(1, 2), 0);
    }

    #[test]
    fn subshift_of_identity_flow_is_constant_paths() {
        let sub = subshift(&Flow::identity(&z3(), &abc()).unwrap()).unwrap();
        assert_eq!(
            labels(sub.equalizer()),
            ["[0→a,1→a,2→a]", "[0→b,1→b,2→b]", "[0→c,1→c,2→c]"]
        );
        let triv = Flow::identity(&FiniteMonoid::trivial().as_time_object(), &abc()).unwrap();
        assert_eq!(subshift(&triv).unwrap().equalizer().len(), 3);
    }

    #[test]
    fn subshift_maps() {
        let r = rotation();
        let id = Semiconjugacy::identity(&r).unwrap();
        let e = subshift_map(&id).unwrap();
        assert_eq!(e.h(), &identity(e.h().dom()).unwrap());

        let point = finset::object(&["*"]).unwrap();
        let triv = Flow::identity(&z3(), &point).unwrap();
        let collapse = finset::map(&abc(), &point, &["*", "*", "*"]).unwrap();
        let q = Semiconjugacy::new(collapse, r.clone(), triv).unwrap();
        let eq = subshift_map(&q).unwrap();
        assert_eq!(eq.h().table(), Some(&[0, 0, 0][..]));
        assert_eq!(finset::labels(eq.h().cod()).unwrap(), ["[0→*,1→*,2→*]"]);
    }

    #[test]
    fn iso_onto_the_subshift() {
        let iso = subshift_iso(&rotation()).unwrap();
        assert!(iso.reports().iter().all(LawReport::holds));
        assert_eq!(iso.iso().table(), Some(&[0, 1, 2][..]));
        let id = subshift_iso(&Flow::identity(&z3(), &abc()).unwrap()).unwrap();
        assert!(id.reports().iter().all(LawReport::holds));

        let lz = finset::make_monoid(
            &["e", "a", "b"],
            &[vec!["e", "a", "b"], vec!["a", "a", "a"], vec!["b", "b", "b"]],
            "e",
        )
        .unwrap();
        let f = Flow::identity(&lz.as_time_object(), &abc()).unwrap();
        assert_eq!(subshift_iso(&f), Err(Error::NotCommutative));
    }

    #[test]
    fn gf2_equalizers_are_unsupported() {
        let v = crate::gf2::space(2);
        let id = identity(&v).unwrap();
        assert_eq!(equalizer(&id, &id), Err(Error::Unsupported(BackendId::Gf2Vect)));
    }
}
