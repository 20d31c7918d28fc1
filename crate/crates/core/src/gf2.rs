//! Finite-dimensional vector spaces over GF(2).
//!
//! A closed symmetric monoidal category that is not Cartesian: the unit is
//! the one-dimensional space, which is not terminal. Objects carry only a
//! dimension. The basis of `Y⊗X` is `e_i⊗e_j ↦ i * dim X + j`, and `[Y,Z]`
//! has the `dim Z × dim Y` matrices as its vectors, flattened row-major, so
//! the basis vector `E[r,c]` (sending `e_c` to `e_r`) has index
//! `r * dim Y + c`.

use std::fmt;
use std::sync::Arc;

use crate::category::backend::{size, Backend};
use crate::category::{BackendId, BaseObject, Descriptor, Morphism, ObjectRef, Payload, Value};
use crate::error::{Error, Result};
use crate::finset::FiniteMonoid;
use crate::time::TimeObject;

/// Dense GF(2) matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, bits: vec![false; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// From rows of 0/1 entries.
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::MalformedPayload("ragged matrix".into()));
        }
        let mut bits = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            for &b in *row {
                match b {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    other => {
                        return Err(Error::MalformedPayload(format!("{other} is not a GF(2) scalar")))
                    }
                }
            }
        }
        Ok(Self { rows: rows.len(), cols, bits })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.bits[r * self.cols + c] = v;
    }

    /// Product mod 2.
    pub fn mul(&self, rhs: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for j in 0..rhs.cols {
                        if rhs.get(k, j) {
                            let v = out.get(i, j);
                            out.set(i, j, !v);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn kron(&self, rhs: &Gf2Matrix) -> Gf2Matrix {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j) {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        if rhs.get(k, l) {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, true);
                        }
                    }
                }
            }
        }
        out
    }

    /// Image of a vector given by its set coordinates.
    pub fn apply(&self, v: &[bool]) -> Vec<bool> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).filter(|&c| v[c] && self.get(r, c)).count() % 2 == 1)
            .collect()
    }

    fn column(&self, c: usize) -> impl Iterator<Item = bool> + '_ {
        (0..self.rows).map(move |r| self.get(r, c))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(";")?;
            }
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
        }
        f.write_str("]")
    }
}

pub struct Gf2Backend;

fn matrix(p: &Payload) -> &Gf2Matrix {
    match p {
        Payload::Matrix(m) => m,
        Payload::Table(_) => panic!("table payload in the GF(2) backend"),
    }
}

fn wrap(m: Gf2Matrix) -> Payload {
    Payload::Matrix(Arc::new(m))
}

impl Backend for Gf2Backend {
    fn id(&self) -> BackendId {
        BackendId::Gf2Vect
    }

    fn base_size(&self, base: &BaseObject) -> Option<usize> {
        match base {
            BaseObject::Space(d) => Some(*d),
            BaseObject::Set(_) => None,
        }
    }

    fn hom_size(&self, y: usize, z: usize) -> Option<usize> {
        y.checked_mul(z)
    }

    fn has_terminal_unit(&self) -> bool {
        false
    }

    fn check_payload(&self, payload: &Payload, dom: usize, cod: usize) -> Result<()> {
        let Payload::Matrix(m) = payload else {
            return Err(Error::MalformedPayload("expected a matrix".into()));
        };
        if m.rows != cod || m.cols != dom {
            return Err(Error::MalformedPayload(format!(
                "matrix is {}×{}, expected {cod}×{dom}",
                m.rows, m.cols
            )));
        }
        Ok(())
    }

    fn identity(&self, n: usize) -> Payload {
        wrap(Gf2Matrix::identity(n))
    }

    fn compose(&self, g: &Payload, f: &Payload, _: usize, _: usize, _: usize) -> Payload {
        wrap(matrix(g).mul(matrix(f)))
    }

    fn tensor(&self, f: &Payload, g: &Payload, _: usize, _: usize, _: usize, _: usize) -> Payload {
        wrap(matrix(f).kron(matrix(g)))
    }

    fn swap(&self, a: usize, b: usize) -> Payload {
        let mut m = Gf2Matrix::zeros(a * b, a * b);
        for i in 0..a {
            for j in 0..b {
                m.set(j * a + i, i * b + j, true);
            }
        }
        wrap(m)
    }

    fn curry(&self, f: &Payload, y: usize, x: usize, z: usize) -> Payload {
        let f = matrix(f);
        let mut out = Gf2Matrix::zeros(z * y, x);
        for r in 0..z {
            for c in 0..y {
                for j in 0..x {
                    out.set(r * y + c, j, f.get(r, c * x + j));
                }
            }
        }
        wrap(out)
    }

    fn uncurry(&self, g: &Payload, y: usize, x: usize, z: usize) -> Payload {
        let g = matrix(g);
        let mut out = Gf2Matrix::zeros(z, y * x);
        for r in 0..z {
            for c in 0..y {
                for j in 0..x {
                    out.set(r, c * x + j, g.get(r * y + c, j));
                }
            }
        }
        wrap(out)
    }

    fn eval(&self, y: usize, z: usize) -> Payload {
        let hom = y * z;
        let mut out = Gf2Matrix::zeros(z, y * hom);
        for r in 0..z {
            for c in 0..y {
                out.set(r, c * hom + r * y + c, true);
            }
        }
        wrap(out)
    }

    fn first_difference(&self, f: &Payload, g: &Payload) -> Option<usize> {
        let (f, g) = (matrix(f), matrix(g));
        (0..f.cols).find(|&c| !f.column(c).eq(g.column(c)))
    }

    fn point(&self, n: usize, index: usize) -> Payload {
        let mut m = Gf2Matrix::zeros(n, 1);
        m.set(index, 0, true);
        wrap(m)
    }

    fn to_unit(&self, _n: usize) -> Option<Payload> {
        None
    }

    fn decode(&self, object: &ObjectRef, index: usize) -> Value {
        decode(object, index)
    }
}

fn decode(object: &ObjectRef, index: usize) -> Value {
    match object.descriptor() {
        Descriptor::Base(_) => Value::Atom(format!("e{index}")),
        Descriptor::Unit => Value::Star,
        Descriptor::Tensor(l, r) => {
            let nr = size(r).expect("tensor factor size");
            Value::pair(decode(l, index / nr), decode(r, index % nr))
        }
        Descriptor::Hom(y, z) => {
            let ny = size(y).expect("hom size");
            let _ = z;
            Value::Func(vec![(decode(y, index % ny), decode(z, index / ny))])
        }
    }
}

/// The space `GF(2)^dim`.
pub fn space(dim: usize) -> ObjectRef {
    ObjectRef::new(BackendId::Gf2Vect, Descriptor::Base(BaseObject::Space(dim)))
}

/// A linear map with the given matrix (`cod_dim × dom_dim`).
pub fn linear(dom: &ObjectRef, cod: &ObjectRef, m: Gf2Matrix) -> Result<Morphism> {
    Morphism::new(dom.clone(), cod.clone(), Payload::Matrix(Arc::new(m)))
}

/// The monoid algebra `GF(2)[m]` as a monoid object: basis `e_s`,
/// `add(e_s⊗e_t) = e_{st}`, `start(1) = e_unit`.
///
/// The trivial monoid yields the unit object itself.
pub fn group_algebra_monoid(m: &FiniteMonoid) -> TimeObject {
    let n = m.len();
    let object = if n == 1 { ObjectRef::unit(BackendId::Gf2Vect) } else { space(n) };
    let tt = crate::category::tensor_obj(&object, &object).expect("same backend");
    let mut add = Gf2Matrix::zeros(n, n * n);
    for s in 0..n {
        for t in 0..n {
            add.set(m.add(s, t), s * n + t, true);
        }
    }
    let mut start = Gf2Matrix::zeros(n, 1);
    start.set(m.unit(), 0, true);
    let unit = ObjectRef::unit(BackendId::Gf2Vect);
    TimeObject::from_parts(
        m.clone(),
        object.clone(),
        Morphism::from_parts(tt, object.clone(), wrap(add)),
        Morphism::from_parts(unit, object, wrap(start)),
    )
}
