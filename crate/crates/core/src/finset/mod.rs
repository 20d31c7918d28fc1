//! The Cartesian closed category of finite sets.
//!
//! Tensor is the Cartesian product, the unit is the singleton `{•}`, and
//! `[Y,Z]` is the set of all `|Z|^|Y|` functions, enumerated in
//! lexicographic order of their tabulations (first domain element most
//! significant).

mod monoid;

pub use monoid::{make_monoid, FiniteMonoid};

use std::collections::HashSet;
use std::sync::Arc;

use crate::category::backend::{size, Backend};
use crate::category::{
    hom_obj, tensor_obj, BackendId, BaseObject, Descriptor, Morphism, ObjectRef, Payload, Value,
};
use crate::error::{Error, Result};

pub struct FinSetBackend;

fn table(p: &Payload) -> &[usize] {
    match p {
        Payload::Table(t) => t,
        Payload::Matrix(_) => panic!("matrix payload in the finite-set backend"),
    }
}

fn collect(it: impl Iterator<Item = usize>) -> Payload {
    Payload::Table(it.collect())
}

/// `z^k` for `k in 0..y`, most significant first: `pows[i] = z^(y-1-i)`.
fn place_values(y: usize, z: usize) -> Vec<usize> {
    let mut pows = vec![1usize; y];
    for i in (0..y.saturating_sub(1)).rev() {
        pows[i] = pows[i + 1] * z;
    }
    pows
}

impl Backend for FinSetBackend {
    fn id(&self) -> BackendId {
        BackendId::FinSet
    }

    fn base_size(&self, base: &BaseObject) -> Option<usize> {
        match base {
            BaseObject::Set(labels) => Some(labels.len()),
            BaseObject::Space(_) => None,
        }
    }

    fn hom_size(&self, y: usize, z: usize) -> Option<usize> {
        let exp = u32::try_from(y).ok()?;
        z.checked_pow(exp)
    }

    fn has_terminal_unit(&self) -> bool {
        true
    }

    fn check_payload(&self, payload: &Payload, dom: usize, cod: usize) -> Result<()> {
        let Payload::Table(t) = payload else {
            return Err(Error::MalformedPayload("expected a table".into()));
        };
        if t.len() != dom {
            return Err(Error::MalformedPayload(format!(
                "table has {} entries, domain has {dom} elements",
                t.len()
            )));
        }
        if let Some(bad) = t.iter().find(|&&v| v >= cod) {
            return Err(Error::MalformedPayload(format!(
                "image {bad} outside a codomain of size {cod}"
            )));
        }
        Ok(())
    }

    fn identity(&self, n: usize) -> Payload {
        collect(0..n)
    }

    fn compose(&self, g: &Payload, f: &Payload, _: usize, _: usize, _: usize) -> Payload {
        let g = table(g);
        collect(table(f).iter().map(|&i| g[i]))
    }

    fn tensor(&self, f: &Payload, g: &Payload, a: usize, _b: usize, c: usize, d: usize) -> Payload {
        let (f, g) = (table(f), table(g));
        collect((0..a * c).map(|k| f[k / c] * d + g[k % c]))
    }

    fn swap(&self, a: usize, b: usize) -> Payload {
        collect((0..a * b).map(|k| (k % b) * a + k / b))
    }

    fn curry(&self, f: &Payload, y: usize, x: usize, z: usize) -> Payload {
        let f = table(f);
        let pows = place_values(y, z);
        collect((0..x).map(|xi| (0..y).map(|yi| f[yi * x + xi] * pows[yi]).sum()))
    }

    fn uncurry(&self, g: &Payload, y: usize, x: usize, z: usize) -> Payload {
        let g = table(g);
        let pows = place_values(y, z);
        collect((0..y * x).map(|k| (g[k % x] / pows[k / x]) % z))
    }

    fn eval(&self, y: usize, z: usize) -> Payload {
        let pows = place_values(y, z);
        let hom = self.hom_size(y, z).expect("eval on an untabulable hom");
        collect((0..y * hom).map(|k| (k % hom / pows[k / hom]) % z))
    }

    fn first_difference(&self, f: &Payload, g: &Payload) -> Option<usize> {
        table(f).iter().zip(table(g)).position(|(a, b)| a != b)
    }

    fn point(&self, _n: usize, index: usize) -> Payload {
        collect(std::iter::once(index))
    }

    fn to_unit(&self, n: usize) -> Option<Payload> {
        Some(collect(std::iter::repeat(0).take(n)))
    }

    fn decode(&self, object: &ObjectRef, index: usize) -> Value {
        decode(object, index)
    }
}

fn decode(object: &ObjectRef, index: usize) -> Value {
    match object.descriptor() {
        Descriptor::Base(BaseObject::Set(labels)) => Value::Atom(labels[index].clone()),
        Descriptor::Base(BaseObject::Space(_)) => unreachable!("space in finite-set backend"),
        Descriptor::Unit => Value::Star,
        Descriptor::Tensor(l, r) => {
            let nr = size(r).expect("tensor factor size");
            Value::pair(decode(l, index / nr), decode(r, index % nr))
        }
        Descriptor::Hom(y, z) => {
            let (ny, nz) = (size(y).expect("hom size"), size(z).expect("hom size"));
            let pows = place_values(ny, nz);
            Value::Func(
                (0..ny)
                    .map(|yi| (decode(y, yi), decode(z, (index / pows[yi]) % nz)))
                    .collect(),
            )
        }
    }
}

/// A finite set with the given ordered labels.
pub fn object<S: AsRef<str>>(labels: &[S]) -> Result<ObjectRef> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_ref()) {
            return Err(Error::DuplicateLabel(l.as_ref().to_string()));
        }
    }
    let labels: Arc<[String]> = labels.iter().map(|l| l.as_ref().to_string()).collect();
    Ok(ObjectRef::new(BackendId::FinSet, Descriptor::Base(BaseObject::Set(labels))))
}

/// The labels of a base finite set.
pub fn labels(object: &ObjectRef) -> Option<&[String]> {
    match object.descriptor() {
        Descriptor::Base(BaseObject::Set(labels)) => Some(labels),
        _ => None,
    }
}

/// Cartesian product carrier: ordered pairs, first factor major.
pub fn product(a: &ObjectRef, b: &ObjectRef) -> Result<ObjectRef> {
    tensor_obj(a, b)
}

/// Exponential carrier: all tabulations `Y → Z` in canonical order.
pub fn exponential(y: &ObjectRef, z: &ObjectRef) -> Result<ObjectRef> {
    hom_obj(y, z)
}

/// Decodes the element with canonical index `index`.
pub fn element(object: &ObjectRef, index: usize) -> Value {
    decode(object, index)
}

/// All elements in canonical order.
pub fn elements(object: &ObjectRef) -> Result<Vec<Value>> {
    let n = crate::category::backend::tabulable_size(object)?;
    Ok((0..n).map(|i| decode(object, i)).collect())
}

/// Canonical index of an element.
pub fn encode(object: &ObjectRef, value: &Value) -> Result<usize> {
    let unknown = || Error::UnknownLabel { label: value.to_string(), context: object.to_string() };
    match (object.descriptor(), value) {
        (Descriptor::Base(BaseObject::Set(labels)), Value::Atom(l)) => {
            labels.iter().position(|x| x == l).ok_or_else(unknown)
        }
        (Descriptor::Unit, Value::Star) => Ok(0),
        (Descriptor::Tensor(l, r), Value::Pair(a, b)) => {
            Ok(encode(l, a)? * size(r)? + encode(r, b)?)
        }
        (Descriptor::Hom(y, z), Value::Func(graph)) => {
            let ny = size(y)?;
            if graph.len() != ny {
                return Err(unknown());
            }
            let nz = size(z)?;
            let mut word = 0usize;
            for (yi, (arg, out)) in graph.iter().enumerate() {
                if encode(y, arg)? != yi {
                    return Err(unknown());
                }
                word = word * nz + encode(z, out)?;
            }
            Ok(word)
        }
        _ => Err(unknown()),
    }
}

/// Index of a label in a base finite set.
pub fn index_of(object: &ObjectRef, label: &str) -> Result<usize> {
    encode(object, &Value::atom(label))
}

/// A morphism between base sets, given as the image label of each domain
/// label in domain order.
pub fn map<S: AsRef<str>>(dom: &ObjectRef, cod: &ObjectRef, images: &[S]) -> Result<Morphism> {
    let n = size(dom)?;
    if images.len() != n {
        return Err(Error::MalformedPayload(format!(
            "{} images for a domain of {n} elements",
            images.len()
        )));
    }
    let table: Arc<[usize]> =
        images.iter().map(|l| index_of(cod, l.as_ref())).collect::<Result<_>>()?;
    Morphism::new(dom.clone(), cod.clone(), Payload::Table(table))
}

/// Every morphism `1 → A`, one per element, in carrier order.
pub fn points(object: &ObjectRef) -> Result<Vec<Morphism>> {
    let n = crate::category::backend::tabulable_size(object)?;
    let unit = ObjectRef::unit(BackendId::FinSet);
    (0..n)
        .map(|i| Morphism::new(unit.clone(), object.clone(), Payload::Table(Arc::from([i]))))
        .collect()
}

/// Every morphism `A → B`, in lexicographic order of tabulations.
pub fn all_morphisms(dom: &ObjectRef, cod: &ObjectRef) -> Result<Vec<Morphism>> {
    let hom = hom_obj(dom, cod)?;
    let count = crate::category::backend::tabulable_size(&hom)?;
    let (n, m) = (size(dom)?, size(cod)?);
    let pows = place_values(n, m);
    Ok((0..count)
        .map(|w| {
            let table: Arc<[usize]> = (0..n).map(|i| (w / pows[i]) % m).collect();
            Morphism::from_parts(dom.clone(), cod.clone(), Payload::Table(table))
        })
        .collect())
}
