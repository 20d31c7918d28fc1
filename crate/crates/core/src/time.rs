//! Monoid objects used as time.

use crate::category::{
    associator, check_diagram, identity, lunitor, point, runitor, tensor_mor, tensor_obj, to_unit,
    BackendId, DiagramPath, LawReport, Morphism, ObjectRef,
};
use crate::gf2::{self, Gf2Matrix};
use crate::error::Result;
use crate::finset::{self, FiniteMonoid};

/// A finite monoid realized as an object `T` with `add: T⊗T → T` and
/// `start: 1 → T`.
///
/// Two time objects are equal only when the underlying monoids are literally
/// equal and they live in the same backend.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TimeObject {
    monoid: FiniteMonoid,
    object: ObjectRef,
    add: Morphism,
    start: Morphism,
}

impl TimeObject {
    pub(crate) fn from_parts(
        monoid: FiniteMonoid,
        object: ObjectRef,
        add: Morphism,
        start: Morphism,
    ) -> Self {
        Self { monoid, object, add, start }
    }

    /// The monoid as a finite-set time object.
    pub fn finset(monoid: &FiniteMonoid) -> Self {
        let object = finset::object(monoid.elements()).expect("monoid labels are distinct");
        let tt = tensor_obj(&object, &object).expect("same backend");
        let add = Morphism::tabulate(tt, object.clone(), |k| {
            monoid.add(k / monoid.len(), k % monoid.len())
        })
        .expect("monoid table is total");
        let start = point(&object, monoid.unit()).expect("unit is an element");
        Self { monoid: monoid.clone(), object, add, start }
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn object(&self) -> &ObjectRef {
        &self.object
    }

    pub fn backend(&self) -> BackendId {
        self.object.backend()
    }

    pub fn add(&self) -> &Morphism {
        &self.add
    }

    pub fn start(&self) -> &Morphism {
        &self.start
    }

    /// The augmentation `ε: T → 1`, sending every instant to the unit.
    ///
    /// In finite sets this is `!`; in the group algebra it is the all-ones
    /// functional. Either way it is a monoid morphism.
    pub fn augmentation(&self) -> Result<Morphism> {
        match self.backend() {
            BackendId::FinSet => to_unit(&self.object),
            BackendId::Gf2Vect => {
                let n = self.monoid.len();
                let mut m = Gf2Matrix::zeros(1, n);
                (0..n).for_each(|c| m.set(0, c, true));
                gf2::linear(&self.object, &ObjectRef::unit(BackendId::Gf2Vect), m)
            }
        }
    }

    /// The point `1 → T` for the monoid element with index `t`.
    pub fn instant(&self, t: usize) -> Result<Morphism> {
        point(&self.object, t)
    }

    /// Associativity square and both unit triangles, checked extensionally.
    pub fn check_laws(&self) -> Result<Vec<LawReport>> {
        let t = &self.object;
        let id = identity(t)?;
        // ((T⊗T)⊗T): add∘(add⊗T) vs add∘(T⊗add)∘α
        let assoc = check_diagram(
            "time associativity",
            &DiagramPath::new(vec![tensor_mor(&self.add, &id)?, self.add.clone()])?,
            &DiagramPath::new(vec![
                associator(t, t, t)?,
                tensor_mor(&id, &self.add)?,
                self.add.clone(),
            ])?,
        )?;
        let left = check_diagram(
            "time left unit",
            &DiagramPath::new(vec![tensor_mor(&self.start, &id)?, self.add.clone()])?,
            &DiagramPath::new(vec![lunitor(t)?])?,
        )?;
        let right = check_diagram(
            "time right unit",
            &DiagramPath::new(vec![tensor_mor(&id, &self.start)?, self.add.clone()])?,
            &DiagramPath::new(vec![runitor(t)?])?,
        )?;
        Ok(vec![assoc, left, right])
    }
}

impl FiniteMonoid {
    /// `(T, add, start)` in the finite-set backend.
    pub fn as_time_object(&self) -> TimeObject {
        TimeObject::finset(self)
    }
}
