//! Named tasks over a workspace and their reports.

use crate::action::{cgkmm_split_sequence, smash_product, verify_action_axioms, verify_split_extension, SplitExtension};
use crate::center::{center, centralizer, hz_compare, CentralizerResult};
use crate::classifier::{build_classifier, hopf_automorphisms, universal_morphism};
use crate::endo::hopf_derivations;
use crate::error::{Error, Result};
use crate::hopf::{functor_q, hopf_kernel, quotient_by_normal, verify_hopf_axioms, AxiomReport, CgkmmHopf, HopfSubalgebra};
use crate::workspace::Workspace;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use std::collections::BTreeMap;
use std::time::Instant;

pub const TASKS: [&str; 14] = [
    "check-hopf",
    "check-action",
    "smash",
    "split-sequence",
    "derivations",
    "automorphisms",
    "classifier",
    "universal",
    "kernel",
    "quotient",
    "centralizer",
    "center",
    "hz-compare",
    "functor-q",
];

/// Required arguments of each task.
fn required(task: &str) -> Option<&'static [&'static str]> {
    Some(match task {
        "check-hopf" | "split-sequence" | "derivations" | "automorphisms" | "classifier" | "center" | "hz-compare"
        | "functor-q" => &["algebra"],
        "check-action" | "smash" | "universal" => &["action"],
        "kernel" => &["morphism"],
        "quotient" | "centralizer" => &["algebra", "sub"],
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskSpec {
    pub name: String,
    pub args: BTreeMap<String, String>,
}

/// Parses `NAME --key value ...`.
pub fn parse_task(words: &[String]) -> Result<TaskSpec> {
    let (name, rest) = words
        .split_first()
        .ok_or_else(|| Error::TaskArguments("missing task name".into()))?;
    let mut args = BTreeMap::new();
    let mut it = rest.iter();
    while let Some(key) = it.next() {
        let key = key
            .strip_prefix("--")
            .ok_or_else(|| Error::TaskArguments(format!("expected `--key`, found `{key}`")))?;
        let value = it
            .next()
            .ok_or_else(|| Error::TaskArguments(format!("missing value for `--{key}`")))?;
        args.insert(key.to_string(), value.clone());
    }
    Ok(TaskSpec { name: name.clone(), args })
}

/// Splits everything after the global flags into task specs at each `--task`.
pub fn parse_tasks(words: &[String]) -> Result<Vec<TaskSpec>> {
    let mut groups: Vec<Vec<String>> = Vec::new();
    for w in words {
        if w == "--task" {
            groups.push(Vec::new());
        } else if let Some(g) = groups.last_mut() {
            g.push(w.clone());
        } else {
            return Err(Error::TaskArguments(format!("unexpected argument `{w}`")));
        }
    }
    groups.iter().map(|g| parse_task(g)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub task: String,
    pub arguments: BTreeMap<String, String>,
    pub status: Status,
    pub summary: Vec<String>,
    /// The serialized library result, or `{"error": …}`.
    pub payload: Box<RawValue>,
    pub timing_us: u64,
}

impl PartialEq for Report {
    fn eq(&self, other: &Self) -> bool {
        self.task == other.task
            && self.arguments == other.arguments
            && self.status == other.status
            && self.summary == other.summary
            && self.payload.get() == other.payload.get()
            && self.timing_us == other.timing_us
    }
}

struct Outcome {
    passed: bool,
    summary: Vec<String>,
    payload: Box<RawValue>,
}

fn raw<T: Serialize>(x: &T) -> Box<RawValue> {
    serde_json::value::to_raw_value(x).expect("serializable")
}

fn outcome<T: Serialize>(passed: bool, summary: Vec<String>, x: &T) -> Outcome {
    Outcome {
        passed,
        summary,
        payload: raw(x),
    }
}

fn axiom_lines(r: &AxiomReport) -> Vec<String> {
    r.checks
        .iter()
        .map(|c| match &c.witness {
            None if c.passed => format!("ok    {} ({} cases)", c.axiom, c.cases),
            None => format!("FAIL  {}", c.axiom),
            Some(w) => format!("FAIL  {}: {w}", c.axiom),
        })
        .collect()
}

fn describe_sub(s: &HopfSubalgebra) -> String {
    if s.is_trivial() {
        return "trivial".into();
    }
    let a = s.ambient();
    let group: Vec<&str> = s.subgroup().iter().map(|&g| a.group().name(g)).collect();
    let lie: Vec<String> = s.lie().basis().iter().map(|v| a.lie().render(v)).collect();
    format!("group {{{}}}, lie span{{{}}}", group.join(", "), lie.join(", "))
}

fn describe_hopf(h: &CgkmmHopf) -> String {
    format!("dim L = {}, |G| = {}", h.lie_dim(), h.group().order())
}

fn extension_outcome(ext: &SplitExtension, d: u32) -> Outcome {
    let total = verify_hopf_axioms(ext.total(), d);
    let split = verify_split_extension(ext, d);
    let mut summary = vec![
        format!("kernel: {}", describe_hopf(ext.kernel())),
        format!("total: {}", describe_hopf(ext.total())),
        format!("quotient: {}", describe_hopf(ext.quotient())),
    ];
    summary.extend(axiom_lines(&total));
    summary.extend(axiom_lines(&split));
    outcome(total.passed && split.passed, summary, ext)
}

fn centralizer_outcome(c: &CentralizerResult) -> Outcome {
    let mut summary = vec![format!("centralizer: {}", describe_sub(&c.subalgebra))];
    summary.extend(axiom_lines(&c.certification));
    outcome(c.certification.passed, summary, c)
}

fn sub_of<'a>(ws: &'a Workspace, algebra: &str, sub: &str) -> Result<(&'a CgkmmHopf, &'a HopfSubalgebra)> {
    let decl = ws.sub_decl(sub)?;
    if decl.hopf != algebra {
        return Err(Error::TaskArguments(format!("`{sub}` is a subalgebra of `{}`, not `{algebra}`", decl.hopf)));
    }
    Ok((ws.hopf(algebra)?, &decl.sub))
}

fn dispatch(ws: &Workspace, spec: &TaskSpec, d: u32) -> Result<Outcome> {
    let needed = required(&spec.name).ok_or_else(|| Error::UnknownTask(spec.name.clone()))?;
    for key in spec.args.keys() {
        if !needed.contains(&key.as_str()) {
            return Err(Error::TaskArguments(format!("`{}` takes no `--{key}`", spec.name)));
        }
    }
    let arg = |key: &str| -> Result<&str> {
        spec.args
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::TaskArguments(format!("`{}` needs `--{key}`", spec.name)))
    };
    Ok(match spec.name.as_str() {
        "check-hopf" => {
            let r = verify_hopf_axioms(ws.hopf(arg("algebra")?)?, d);
            outcome(r.passed, axiom_lines(&r), &r)
        }
        "check-action" => {
            let r = verify_action_axioms(ws.action(arg("action")?)?, d);
            outcome(r.passed, axiom_lines(&r), &r)
        }
        "smash" => {
            let (_, ext) = smash_product(ws.action(arg("action")?)?)?;
            extension_outcome(&ext, d)
        }
        "split-sequence" => extension_outcome(&cgkmm_split_sequence(ws.hopf(arg("algebra")?)?, d)?, d),
        "derivations" => {
            let h = ws.hopf(arg("algebra")?)?;
            let basis = hopf_derivations(h, d)?;
            let mut summary = vec![format!("derivation dimension {}", basis.len())];
            summary.extend(basis.iter().enumerate().map(|(i, psi)| format!("ψ{} = {}", i + 1, psi.render(h))));
            let views: Vec<_> = basis.iter().map(|psi| psi.serializable(h)).collect();
            outcome(true, summary, &views)
        }
        "automorphisms" => {
            let aut = hopf_automorphisms(ws.hopf(arg("algebra")?)?);
            let summary = match aut.elements() {
                Some(els) => vec![format!("automorphism group order {}", els.len())],
                None => vec!["automorphism group not enumerated".into()],
            };
            outcome(true, summary, &aut)
        }
        "classifier" => {
            let cls = build_classifier(ws.hopf(arg("algebra")?)?, d)?;
            let mut summary = vec![format!("derivation dimension {}", cls.der_basis().len())];
            summary.push(match cls.aut_group().elements() {
                Some(els) => format!("automorphism group order {}", els.len()),
                None => "automorphism group not enumerated".into(),
            });
            if let Some(m) = cls.materialized() {
                summary.push(format!("classifier: {}", describe_hopf(&m.hopf)));
            }
            outcome(true, summary, &cls)
        }
        "universal" => {
            let (_, ext) = smash_product(ws.action(arg("action")?)?)?;
            let u = universal_morphism(&ext, d)?;
            let chi = &u.chi;
            let mut summary: Vec<String> = chi
                .source()
                .group()
                .generators()
                .iter()
                .map(|&g| format!("χ({}) = {}", chi.source().group().name(g), chi.target().group().name(chi.beta()[g])))
                .collect();
            summary.extend(axiom_lines(&u.certification));
            outcome(u.certification.passed, summary, &u)
        }
        "kernel" => {
            let k = hopf_kernel(ws.morphism(arg("morphism")?)?, d)?;
            outcome(true, vec![format!("kernel: {}", describe_sub(&k))], &k)
        }
        "quotient" => {
            let (a, h) = sub_of(ws, arg("algebra")?, arg("sub")?)?;
            let q = quotient_by_normal(a, h, d)?;
            outcome(true, vec![format!("quotient: {}", describe_hopf(&q.0))], &q)
        }
        "centralizer" => {
            let (a, h) = sub_of(ws, arg("algebra")?, arg("sub")?)?;
            centralizer_outcome(&centralizer(a, h, d)?)
        }
        "center" => centralizer_outcome(&center(ws.hopf(arg("algebra")?)?, d)?),
        "hz-compare" => {
            let r = hz_compare(ws.hopf(arg("algebra")?)?, d)?;
            let summary = vec![
                format!("Z_alg graded dimensions {:?}", r.z_alg),
                format!("HZ graded dimensions {:?}", r.hz),
                format!("Z graded dimensions {:?}", r.center),
                format!("HZ = Z: {}", r.equal),
            ];
            outcome(r.equal, summary, &r)
        }
        "functor-q" => {
            let q = functor_q(ws.hopf(arg("algebra")?)?);
            let summary = vec![format!(
                "Q = {} (dimension {})",
                if q.quotient.dim() == 0 { "0".to_string() } else { q.quotient.names().join(", ") },
                q.quotient.dim()
            )];
            outcome(true, summary, &q)
        }
        _ => unreachable!("checked by `required`"),
    })
}

/// Runs one task at verification degree `d`; library failures become `fail`, bad input becomes `error`.
pub fn run_task(ws: &Workspace, spec: &TaskSpec, d: u32) -> Report {
    let start = Instant::now();
    let (status, summary, payload) = match dispatch(ws, spec, d) {
        Ok(o) => (if o.passed { Status::Pass } else { Status::Fail }, o.summary, o.payload),
        Err(e) => {
            let status = if e.is_input_error() { Status::Error } else { Status::Fail };
            (status, vec![e.to_string()], raw(&serde_json::json!({ "error": e.to_string() })))
        }
    };
    Report {
        task: spec.name.clone(),
        arguments: spec.args.clone(),
        status,
        summary,
        payload,
        timing_us: start.elapsed().as_micros() as u64,
    }
}

/// Runs tasks concurrently; reports come back in input order.
pub fn run_tasks(ws: &Workspace, specs: &[TaskSpec], d: u32) -> Vec<Report> {
    specs.par_iter().map(|s| run_task(ws, s, d)).collect()
}

/// 2 if any report is an input error, 1 if any failed, else 0.
pub fn exit_code(reports: &[Report]) -> u8 {
    if reports.iter().any(|r| r.status == Status::Error) {
        2
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let args: Vec<String> = r.arguments.iter().map(|(k, v)| format!("--{k} {v}")).collect();
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        };
        out.push_str(&format!(
            "{} {}: {status} ({:.1} ms)\n",
            r.task,
            args.join(" "),
            r.timing_us as f64 / 1000.0
        ));
        for line in &r.summary {
            out.push_str(&format!("  {line}\n"));
        }
    }
    out
}

pub fn render_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workspace::parse_workspace;

    fn tutorial() -> Workspace {
        parse_workspace(include_str!("../fixtures/tutorial.hopf")).unwrap()
    }

    fn task(words: &str) -> TaskSpec {
        parse_task(&words.split_whitespace().map(String::from).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn center_of_s3_is_trivial() {
        let r = run_task(&tutorial(), &task("center --algebra KS3"), 3);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.summary[0], "centralizer: trivial");
    }

    #[test]
    fn classifier_of_c3() {
        let r = run_task(&tutorial(), &task("classifier --algebra KC3"), 3);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.summary[..2], ["derivation dimension 0", "automorphism group order 2"]);
    }

    #[test]
    fn unknown_names_are_input_errors() {
        let ws = tutorial();
        let r = run_task(&ws, &task("center --algebra NOPE"), 3);
        assert_eq!(r.status, Status::Error);
        assert!(r.summary[0].contains("unknown object"));
        assert_eq!(run_task(&ws, &task("frobnicate --algebra KS3"), 3).status, Status::Error);
        assert_eq!(run_task(&ws, &task("center"), 3).status, Status::Error);
        assert_eq!(run_task(&ws, &task("quotient --algebra KS3 --sub Z"), 3).status, Status::Error);
        assert_eq!(exit_code(&[r]), 2);
    }

    #[test]
    fn mathematical_failure_is_not_an_input_error() {
        let r = run_task(&tutorial(), &task("quotient --algebra KS3 --sub T"), 3);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(exit_code(&[r]), 1);
    }

    #[test]
    fn reports_round_trip_through_json() {
        let ws = tutorial();
        let specs = parse_tasks(
            &"--task center --algebra Uh3 --task automorphisms --algebra KS3"
                .split_whitespace()
                .map(String::from)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let reports = run_tasks(&ws, &specs, 3);
        assert_eq!(reports[0].task, "center");
        let back: Vec<Report> = serde_json::from_str(&render_json(&reports)).unwrap();
        assert_eq!(back, reports);
    }
}
