use std::fmt;

use serde::{Serialize, Serializer};

/// A decoded element of a carrier (or, in linear backends, a basis vector).
///
/// Used for counterexamples and human-facing output; the engine itself works
/// on canonical indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Atom(String),
    /// The single element of the unit.
    Star,
    Pair(Box<Value>, Box<Value>),
    /// A tabulated function, as its graph in domain order.
    Func(Vec<(Value, Value)>),
}

impl Value {
    pub fn atom(label: impl Into<String>) -> Self {
        Value::Atom(label.into())
    }

    pub fn pair(a: Value, b: Value) -> Self {
        Value::Pair(Box::new(a), Box::new(b))
    }

    /// Flattens right-nested pairs `(a,(b,c))` and left-nested `((a,b),c)`
    /// into their leaves in order.
    pub fn leaves(&self) -> Vec<&Value> {
        match self {
            Value::Pair(a, b) => {
                let mut out = a.leaves();
                out.extend(b.leaves());
                out
            }
            other => vec![other],
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(s) => f.write_str(s),
            Value::Star => f.write_str("•"),
            Value::Pair(a, b) => write!(f, "({a},{b})"),
            Value::Func(graph) => {
                f.write_str("[")?;
                for (i, (x, y)) in graph.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}→{y}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
