use catdyn_core::category::{size, LawReport, ObjectRef};
use catdyn_core::derived::{koopman_preflow, orbit, shift_flow, transfer_flow};
use catdyn_core::dynamics::{is_semiconjugacy, validate_flow, Flow, PreFlow};
use catdyn_core::finset;
use catdyn_core::states::{
    all_states, induced_state, is_enriched_stationary, stationary_states, EnrichedStationaryWitness,
};
use catdyn_core::subshift::{subshift, subshift_iso};

use crate::document::{build, Built, CarrierDocument, InputError, System, SystemDocument};
use crate::report::{entries, Derived, InputSummary, Iso, LawEntry, OrbitEntry, Report, Stationary};
use crate::report::Subshift as SubshiftReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Operator {
    Shift,
    Transfer,
    Koopman,
}

impl Operator {
    fn name(self) -> &'static str {
        match self {
            Operator::Shift => "shift",
            Operator::Transfer => "transfer",
            Operator::Koopman => "koopman",
        }
    }
}

/// The input system checked against its laws. `flow` is present only when
/// every law holds.
struct Checked {
    summary: InputSummary,
    laws: Vec<LawEntry>,
    system: Option<(Box<System>, Flow)>,
}

fn check(doc: &SystemDocument) -> Result<Checked, InputError> {
    let built = build(doc)?;
    let system = match built {
        Built::BadMonoid(report) => {
            let summary = InputSummary {
                time: doc.monoid.elements.clone(),
                commutative: None,
                omega: doc.omega.elements.clone(),
            };
            return Ok(Checked { summary, laws: entries(&[report]), system: None });
        }
        Built::System(system) => system,
    };
    let summary = InputSummary {
        time: doc.monoid.elements.clone(),
        commutative: Some(system.time.monoid().is_commutative()),
        omega: doc.omega.elements.clone(),
    };
    let mut reports = system.time.check_laws()?;
    let flow_reports = validate_flow(&system.preflow)?;
    let valid = flow_reports.iter().all(LawReport::holds);
    reports.extend(flow_reports);
    let mut laws = entries(&reports);
    if !valid {
        return Ok(Checked { summary, laws, system: None });
    }
    let flow = Flow::new(system.preflow.clone())?;
    for (name, h) in &system.morphisms {
        let mut entry = LawEntry::from(&is_semiconjugacy(h, &flow, &flow)?);
        entry.law = format!("{} ({name})", entry.law);
        laws.push(entry);
    }
    Ok(Checked { summary, laws, system: Some((system, flow)) })
}

pub fn validate(doc: &SystemDocument) -> Result<Report, InputError> {
    let c = check(doc)?;
    Ok(Report::new("validate", c.summary, c.laws))
}

/// Runs `body` on a valid system, or reports the failing input laws.
fn with_flow(
    command: &str,
    doc: &SystemDocument,
    body: impl FnOnce(&System, &Flow, &mut Report) -> Result<(), InputError>,
) -> Result<Report, InputError> {
    let c = check(doc)?;
    let mut report = Report::new(command, c.summary, c.laws);
    if let (true, Some((system, flow))) = (report.all_hold, c.system) {
        body(&system, &flow, &mut report)?;
    }
    Ok(report)
}

fn checked_power(base: usize, exp: usize, what: &str, cap: usize) -> Result<usize, InputError> {
    match u32::try_from(exp).ok().and_then(|e| base.checked_pow(e)) {
        Some(n) if n <= cap => Ok(n),
        Some(n) => Err(InputError::TooLarge(format!(
            "the {what} has {n} elements, above the cap of {cap}"
        ))),
        None => Err(InputError::TooLarge(format!(
            "the {what} has {base}^{exp} elements, above the cap of {cap}"
        ))),
    }
}

fn path_space_size(system: &System, cap: usize) -> Result<usize, InputError> {
    checked_power(system.omega_len(), system.time.monoid().len(), "path space", cap)
}

impl System {
    fn omega_len(&self) -> usize {
        self.document.omega.elements.len()
    }
}

/// `p[t0→x,…]` for paths, `g[x→y,…]` for observables.
fn element_labels(object: &ObjectRef, prefix: &str) -> Result<Vec<String>, InputError> {
    let n = size(object)?;
    Ok((0..n).map(|i| format!("{prefix}{}", finset::element(object, i))).collect())
}

fn flow_table(p: &PreFlow, labels: &[String]) -> Vec<Vec<String>> {
    let n = labels.len();
    (0..p.time().monoid().len())
        .map(|t| (0..n).map(|x| labels[p.phi().apply(t * n + x)].clone()).collect())
        .collect()
}

pub fn derive(
    doc: &SystemDocument,
    which: Operator,
    observable_codomain: usize,
    cap: usize,
) -> Result<Report, InputError> {
    with_flow("derive", doc, |system, flow, report| {
        let (pre, prefix) = match which {
            Operator::Shift => {
                path_space_size(system, cap)?;
                (shift_flow(flow.time(), flow.omega())?.into_preflow(), "p")
            }
            Operator::Transfer => {
                path_space_size(system, cap)?;
                (transfer_flow(flow)?.into_preflow(), "p")
            }
            Operator::Koopman => {
                checked_power(observable_codomain, system.omega_len(), "observable space", cap)?;
                let labels: Vec<String> = (0..observable_codomain).map(|i| i.to_string()).collect();
                let x = finset::object(&labels)?;
                (koopman_preflow(flow, &x)?, "g")
            }
        };
        let labels = element_labels(pre.omega(), prefix)?;
        let laws = entries(&validate_flow(&pre)?);
        let system_doc = SystemDocument {
            monoid: system.document.monoid.clone(),
            omega: CarrierDocument { elements: labels.clone() },
            flow: flow_table(&pre, &labels),
            morphisms: Default::default(),
        };
        report.derived = Some(Derived {
            operator: which.name().to_string(),
            carrier_size: labels.len(),
            informational: which == Operator::Koopman,
            laws,
            system: system_doc,
        });
        Ok(())
    })
}

pub fn subshift_report(doc: &SystemDocument, cap: usize) -> Result<Report, InputError> {
    with_flow("subshift", doc, |system, flow, report| {
        let path_space = path_space_size(system, cap)?;
        let sub = subshift(flow)?;
        let all_paths = element_labels(sub.shift().omega(), "p")?;
        let members: Vec<String> =
            sub.equalizer().members().iter().map(|&i| all_paths[i].clone()).collect();
        let iso = if flow.time().monoid().is_commutative() {
            let iso = subshift_iso(flow)?;
            let map = system
                .document
                .omega
                .elements
                .iter()
                .enumerate()
                .map(|(x, label)| (label.clone(), members[iso.iso().apply(x)].clone()))
                .collect();
            Some(Iso { map, checks: entries(iso.reports()) })
        } else {
            None
        };
        report.subshift = Some(SubshiftReport {
            path_space_size: path_space,
            size: members.len(),
            flow: flow_table(sub.flow().as_preflow(), &members),
            members,
            squares: entries(&sub.check_squares()?),
            iso,
        });
        Ok(())
    })
}

pub fn orbits(doc: &SystemDocument, cap: usize) -> Result<Report, InputError> {
    with_flow("orbits", doc, |system, flow, report| {
        path_space_size(system, cap)?;
        let labels = &system.document.omega.elements;
        let mut out = Vec::new();
        for (state, label) in all_states(flow.omega())?.iter().zip(labels) {
            let o = orbit(flow, state)?;
            let values = (0..flow.time().monoid().len())
                .map(|t| labels[flow.apply(t, state.index())].clone())
                .collect();
            let p = o.path().cod();
            out.push(OrbitEntry {
                state: label.clone(),
                path: format!("p{}", finset::element(p, o.index())),
                values,
            });
        }
        report.orbits = Some(out);
        Ok(())
    })
}

pub fn stationary(doc: &SystemDocument) -> Result<Report, InputError> {
    with_flow("stationary", doc, |system, flow, report| {
        let labels = &system.document.omega.elements;
        let states = stationary_states(flow)?.iter().map(|s| labels[s.index()].clone()).collect();
        let mut enriched = Vec::new();
        for w in EnrichedStationaryWitness::all(flow.omega())? {
            if is_enriched_stationary(flow, &w)?.0.holds() {
                enriched.push(labels[induced_state(&w)?.index()].clone());
            }
        }
        report.stationary = Some(Stationary { states, enriched });
        Ok(())
    })
}

/// One edge `x → Φ(g, x)` per generator `g`, labelled by `g`.
pub fn export_dot(doc: &SystemDocument) -> Result<(Report, Option<String>), InputError> {
    let mut dot = None;
    let report = with_flow("export-dot", doc, |system, flow, _| {
        let labels = &system.document.omega.elements;
        let times = &system.document.monoid.elements;
        let mut out = String::from("digraph flow {\n");
        for x in labels {
            out.push_str(&format!("  {};\n", quote(x)));
        }
        for g in flow.time().monoid().generators() {
            for (x, from) in labels.iter().enumerate() {
                let to = &labels[flow.apply(g, x)];
                out.push_str(&format!("  {} -> {} [label={}];\n", quote(from), quote(to), quote(&times[g])));
            }
        }
        out.push_str("}\n");
        dot = Some(out);
        Ok(())
    })?;
    Ok((report, dot))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
