use std::fmt::Write as _;

use catdyn_core::category::LawReport;
use serde::Serialize;

use crate::document::SystemDocument;

/// One checked law. Counterexamples are rendered from input labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawEntry {
    pub law: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl From<&LawReport> for LawEntry {
    fn from(r: &LawReport) -> Self {
        Self {
            law: r.law().to_string(),
            holds: r.holds(),
            counterexample: r.counterexample().map(ToString::to_string),
        }
    }
}

pub fn entries(reports: &[LawReport]) -> Vec<LawEntry> {
    reports.iter().map(LawEntry::from).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSummary {
    pub time: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutative: Option<bool>,
    pub omega: Vec<String>,
}

/// Everything a command emits. Field order is the serialization order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input: InputSummary,
    pub laws: Vec<LawEntry>,
    pub all_hold: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<Derived>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subshift: Option<Subshift>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stationary: Option<Stationary>,
}

impl Report {
    pub fn new(command: &str, input: InputSummary, laws: Vec<LawEntry>) -> Self {
        let all_hold = laws.iter().all(|l| l.holds);
        Self {
            command: command.to_string(),
            input,
            laws,
            all_hold,
            derived: None,
            subshift: None,
            orbits: None,
            stationary: None,
        }
    }

    /// Whether the input laws and every non-informational derived check hold.
    pub fn succeeded(&self) -> bool {
        self.all_hold
            && self.derived.as_ref().map_or(true, |d| d.informational || all(&d.laws))
            && self.subshift.as_ref().map_or(true, |s| {
                all(&s.squares) && s.iso.as_ref().map_or(true, |i| all(&i.checks))
            })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "time: {{{}}}", self.input.time.join(","));
        if let Some(c) = self.input.commutative {
            let _ = writeln!(out, "commutative: {c}");
        }
        let _ = writeln!(out, "states: {{{}}}", self.input.omega.join(","));
        write_laws(&mut out, "", &self.laws);
        if let Some(d) = &self.derived {
            let _ = writeln!(out, "derived {} on {} elements", d.operator, d.carrier_size);
            write_table(&mut out, &self.input.time, &d.system.omega.elements, &d.system.flow);
            if d.informational {
                let _ = writeln!(out, "  (laws below are informational)");
            }
            write_laws(&mut out, "  ", &d.laws);
        }
        if let Some(s) = &self.subshift {
            let _ = writeln!(out, "subshift: {} of {} paths", s.size, s.path_space_size);
            write_table(&mut out, &self.input.time, &s.members, &s.flow);
            write_laws(&mut out, "  ", &s.squares);
            match &s.iso {
                Some(iso) => {
                    for (x, p) in &iso.map {
                        let _ = writeln!(out, "  iso {x} ↦ {p}");
                    }
                    write_laws(&mut out, "  ", &iso.checks);
                }
                None => {
                    let _ = writeln!(out, "  no iso: time is not commutative");
                }
            }
        }
        if let Some(orbits) = &self.orbits {
            for o in orbits {
                let _ = writeln!(out, "orbit {}: ({})", o.state, o.values.join(","));
            }
        }
        if let Some(s) = &self.stationary {
            let _ = writeln!(out, "stationary: {{{}}}", s.states.join(","));
            let _ = writeln!(out, "enriched stationary: {{{}}}", s.enriched.join(","));
        }
        out
    }
}

fn all(laws: &[LawEntry]) -> bool {
    laws.iter().all(|l| l.holds)
}

fn write_laws(out: &mut String, indent: &str, laws: &[LawEntry]) {
    for l in laws {
        let _ = match (&l.counterexample, l.holds) {
            (_, true) => writeln!(out, "{indent}holds: {}", l.law),
            (Some(c), false) => writeln!(out, "{indent}FAILS: {} at {c}", l.law),
            (None, false) => writeln!(out, "{indent}FAILS: {}", l.law),
        };
    }
}

fn write_table(out: &mut String, time: &[String], states: &[String], flow: &[Vec<String>]) {
    for (t, row) in time.iter().zip(flow) {
        for (x, y) in states.iter().zip(row) {
            let _ = writeln!(out, "  {t}·{x} = {y}");
        }
    }
}

/// A derived system, also emitted as a re-ingestible document.
#[derive(Debug, Clone, Serialize)]
pub struct Derived {
    pub operator: String,
    pub carrier_size: usize,
    /// The laws of a pre-flow that need not be an action are reported but
    /// do not affect the exit code.
    pub informational: bool,
    pub laws: Vec<LawEntry>,
    pub system: SystemDocument,
}

#[derive(Debug, Clone, Serialize)]
pub struct Subshift {
    pub path_space_size: usize,
    pub size: usize,
    pub members: Vec<String>,
    /// `flow[t][p]` for `σ_Φ`.
    pub flow: Vec<Vec<String>>,
    pub squares: Vec<LawEntry>,
    pub iso: Option<Iso>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Iso {
    /// State label to path label, in state order.
    pub map: Vec<(String, String)>,
    pub checks: Vec<LawEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitEntry {
    pub state: String,
    pub path: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Stationary {
    pub states: Vec<String>,
    /// States induced by the enriched witnesses that pass the cone check.
    pub enriched: Vec<String>,
}
