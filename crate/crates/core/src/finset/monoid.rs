use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite monoid given by its multiplication table.
///
/// Equality is literal: same labels, same table, same unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    elements: Arc<[String]>,
    table: Arc<[usize]>,
    unit: usize,
}

/// Validates an `add` table given by labels: `add_table[s][t] = add(s, t)`.
pub fn make_monoid<S: AsRef<str>>(
    elements: &[S],
    add_table: &[Vec<S>],
    unit: &str,
) -> Result<FiniteMonoid> {
    let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
    let mut seen = HashSet::new();
    for l in &labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    let lookup = |l: &str, context: &str| {
        labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel {
            label: l.to_string(),
            context: context.to_string(),
        })
    };
    let n = labels.len();
    if add_table.len() != n || add_table.iter().any(|row| row.len() != n) {
        return Err(Error::MalformedPayload(format!("monoid table must be {n}×{n}")));
    }
    let mut table = Vec::with_capacity(n * n);
    for row in add_table {
        for entry in row {
            table.push(lookup(entry.as_ref(), "monoid table")?);
        }
    }
    let unit = lookup(unit, "monoid unit")?;
    FiniteMonoid::from_indices(labels, table, unit)
}

impl FiniteMonoid {
    /// Validates a row-major table of element indices.
    pub fn from_indices(elements: Vec<String>, table: Vec<usize>, unit: usize) -> Result<Self> {
        let n = elements.len();
        if table.len() != n * n || table.iter().any(|&v| v >= n) || unit >= n {
            return Err(Error::MalformedPayload(format!("monoid table must be total on {n} elements")));
        }
        let m = Self { elements: elements.into(), table: table.into(), unit };
        m.check_laws()?;
        Ok(m)
    }

    fn check_laws(&self) -> Result<()> {
        let n = self.len();
        for t in 0..n {
            if self.add(self.unit, t) != t || self.add(t, self.unit) != t {
                return Err(Error::UnitLawFails(self.elements[t].clone()));
            }
        }
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    if self.add(self.add(s, t), u) != self.add(s, self.add(t, u)) {
                        let l = |i: usize| self.elements[i].clone();
                        return Err(Error::NotAssociative(l(s), l(t), l(u)));
                    }
                }
            }
        }
        Ok(())
    }

    /// `(Z_n, + mod n, 0)` with labels `"0".."n-1"`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self::from_indices(labels, table, 0).expect("cyclic group is a monoid")
    }

    /// `({0..n-1}, max, 0)`: the idempotent chain monoid.
    pub fn max_chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n * n).map(|k| (k / n).max(k % n)).collect();
        Self::from_indices(labels, table, 0).expect("max is a monoid")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn add(&self, s: usize, t: usize) -> usize {
        self.table[s * self.len() + t]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|x| x == label)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|s| (0..n).all(|t| self.add(s, t) == self.add(t, s)))
    }

    /// A generating set chosen greedily in carrier order: an element is kept
    /// when it is not in the submonoid generated by the elements kept so far.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.len();
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[self.unit] = true;
        for t in 0..n {
            if reached[t] {
                continue;
            }
            gens.push(t);
            reached[t] = true;
            let mut grew = true;
            while grew {
                grew = false;
                for a in 0..n {
                    for b in 0..n {
                        let c = self.add(a, b);
                        if reached[a] && reached[b] && !reached[c] {
                            reached[c] = true;
                            grew = true;
                        }
                    }
                }
            }
        }
        gens
    }
}
