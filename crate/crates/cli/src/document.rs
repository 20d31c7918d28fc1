use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use catdyn_core::category::{LawReport, Morphism, ObjectRef, Value};
use catdyn_core::dynamics::PreFlow;
use catdyn_core::finset::{self, make_monoid};
use catdyn_core::time::TimeObject;
use catdyn_core::Error as CoreError;
use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

pub const SCHEMA: &str = include_str!("../schema/system.schema.json");

/// A monoid acting on a finite set, as read from and written to JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub monoid: MonoidDocument,
    pub omega: CarrierDocument,
    /// `flow[t][x]`.
    pub flow: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDocument {
    pub elements: Vec<String>,
    /// `table[s][t] = add(s, t)`.
    pub table: Vec<Vec<String>>,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarrierDocument {
    pub elements: Vec<String>,
}

/// Anything wrong with the input itself. Always exit code 2.
#[derive(Debug)]
pub enum InputError {
    Io(String),
    Parse(String),
    Schema(Vec<String>),
    Invalid(String),
    TooLarge(String),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(m) => write!(f, "cannot read input: {m}"),
            InputError::Parse(m) => write!(f, "malformed JSON: {m}"),
            InputError::Schema(errs) => write!(f, "schema violation: {}", errs.join("; ")),
            InputError::Invalid(m) => write!(f, "invalid system: {m}"),
            InputError::TooLarge(m) => write!(f, "refusing: {m}"),
        }
    }
}

impl From<CoreError> for InputError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::TooLarge(_) => InputError::TooLarge(e.to_string()),
            other => InputError::Invalid(other.to_string()),
        }
    }
}

pub fn load(path: &Path) -> Result<SystemDocument, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<SystemDocument, InputError> {
    let json: Json = serde_json::from_str(text).map_err(|e| InputError::Parse(e.to_string()))?;
    let schema: Json = serde_json::from_str(SCHEMA).expect("shipped schema is JSON");
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("shipped schema compiles");
    if let Err(errors) = compiled.validate(&json) {
        let mut messages: Vec<String> =
            errors.map(|e| format!("{} at '{}'", e, e.instance_path)).collect();
        messages.sort();
        return Err(InputError::Schema(messages));
    }
    serde_json::from_value(json).map_err(|e| InputError::Schema(vec![e.to_string()]))
}

/// A document turned into core objects.
#[derive(Debug, Clone)]
pub struct System {
    pub document: SystemDocument,
    pub time: TimeObject,
    pub preflow: PreFlow,
    pub morphisms: Vec<(String, Morphism)>,
}

/// Either a usable system or the monoid law that rules it out.
#[derive(Debug)]
pub enum Built {
    System(Box<System>),
    BadMonoid(LawReport),
}

pub fn build(doc: &SystemDocument) -> Result<Built, InputError> {
    let m = &doc.monoid;
    let monoid = match make_monoid(&m.elements, &m.table, &m.unit) {
        Ok(monoid) => monoid,
        Err(CoreError::NotAssociative(s, t, u)) => {
            let witness = Value::pair(Value::pair(Value::atom(s), Value::atom(t)), Value::atom(u));
            return Ok(Built::BadMonoid(LawReport::fail("time associativity", witness)));
        }
        Err(CoreError::UnitLawFails(t)) => {
            return Ok(Built::BadMonoid(LawReport::fail("time unit laws", Value::atom(t))));
        }
        Err(e) => return Err(e.into()),
    };
    let time = monoid.as_time_object();
    let omega = finset::object(&doc.omega.elements)?;
    let n = doc.omega.elements.len();
    if doc.flow.len() != monoid.len() || doc.flow.iter().any(|row| row.len() != n) {
        return Err(InputError::Invalid(format!(
            "flow table must have {} rows of {n} entries",
            monoid.len()
        )));
    }
    let mut table = Vec::with_capacity(monoid.len() * n);
    for row in &doc.flow {
        for label in row {
            table.push(lookup(&omega, label, "flow table")?);
        }
    }
    let preflow = PreFlow::from_fn(time.clone(), omega.clone(), |t, x| table[t * n + x])?;
    let mut morphisms = Vec::new();
    for (name, images) in &doc.morphisms {
        if images.len() != n {
            return Err(InputError::Invalid(format!("morphism {name:?} must list {n} images")));
        }
        for label in images {
            lookup(&omega, label, &format!("morphism {name:?}"))?;
        }
        morphisms.push((name.clone(), finset::map(&omega, &omega, images)?));
    }
    Ok(Built::System(Box::new(System { document: doc.clone(), time, preflow, morphisms })))
}

fn lookup(omega: &ObjectRef, label: &str, context: &str) -> Result<usize, InputError> {
    finset::index_of(omega, label)
        .map_err(|_| InputError::Invalid(format!("unknown state {label:?} in {context}")))
}
