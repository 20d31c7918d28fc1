use std::fmt;

use serde::Serialize;

use crate::category::backend::backend_of;
use crate::category::morphism::Morphism;
use crate::category::ops::{compose_all, parallel};
use crate::category::value::Value;
use crate::error::{Error, Result};

/// One side of a commuting diagram: morphisms applied left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramPath {
    steps: Vec<Morphism>,
}

impl DiagramPath {
    /// Fails on an empty path or a break in the chain.
    pub fn new(steps: Vec<Morphism>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyPath);
        }
        for w in steps.windows(2) {
            if w[0].cod() != w[1].dom() {
                return Err(Error::TypeMismatch {
                    expected: w[1].dom().clone(),
                    found: w[0].cod().clone(),
                });
            }
        }
        Ok(Self { steps })
    }

    pub fn single(f: Morphism) -> Self {
        Self { steps: vec![f] }
    }

    pub fn steps(&self) -> &[Morphism] {
        &self.steps
    }

    pub fn composite(&self) -> Result<Morphism> {
        compose_all(&self.steps)
    }
}

/// Outcome of checking one law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    law: String,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Value>,
}

impl LawReport {
    pub fn pass(law: impl Into<String>) -> Self {
        Self { law: law.into(), holds: true, counterexample: None }
    }

    pub fn fail(law: impl Into<String>, counterexample: Value) -> Self {
        Self { law: law.into(), holds: false, counterexample: Some(counterexample) }
    }

    pub fn law(&self) -> &str {
        &self.law
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn counterexample(&self) -> Option<&Value> {
        self.counterexample.as_ref()
    }

    /// `Ok(self)` if the law holds, otherwise a `LawViolation` error.
    pub fn into_result(self) -> Result<Self> {
        if self.holds {
            Ok(self)
        } else {
            Err(Error::LawViolation(self))
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: holds", self.law),
            Some(c) => write!(f, "{}: fails at {c}", self.law),
        }
    }
}

/// Compares two parallel morphisms and reports the first disagreeing input.
pub fn check_equal(law: &str, lhs: &Morphism, rhs: &Morphism) -> Result<LawReport> {
    parallel(lhs, rhs)?;
    let backend = backend_of(lhs.dom().backend());
    Ok(match backend.first_difference(lhs.payload(), rhs.payload()) {
        None => LawReport::pass(law),
        Some(i) => LawReport::fail(law, backend.decode(lhs.dom(), i)),
    })
}

/// Checks that two paths with shared endpoints have equal composites.
pub fn check_diagram(law: &str, p1: &DiagramPath, p2: &DiagramPath) -> Result<LawReport> {
    check_equal(law, &p1.composite()?, &p2.composite()?)
}

/// Every report holds.
pub fn all_hold(reports: &[LawReport]) -> bool {
    reports.iter().all(LawReport::holds)
}

/// The counit law `eval ∘ (Y⊗curry_left(φ)) = φ` for `φ: Y⊗X → Z`.
pub fn check_counit_law(phi: &Morphism) -> Result<LawReport> {
    use crate::category::ops::{curry_left, eval_morphism, identity, tensor_mor};
    let (y, _) = phi.dom().as_tensor().ok_or_else(|| Error::NotATensor(phi.dom().clone()))?;
    let lhs = DiagramPath::new(vec![
        tensor_mor(&identity(y)?, &curry_left(phi)?)?,
        eval_morphism(y, phi.cod())?,
    ])?;
    check_diagram("evaluation counit law", &lhs, &DiagramPath::single(phi.clone()))
}
