//! Task execution, machine records and human tables.

use std::fmt::Write as _;

use levelcert::complex::{hom_complex, koszul_complex, ChainComplex};
use levelcert::invariants::{frank_conormal, invariant_report, lech_independent, InvariantReport};
use levelcert::level::{koszul_level, level_interval, verify_factorization_example, FactorizationCheck, LevelReport};
use levelcert::module::QuotientRing;
use levelcert::{AlgebraError, Poly};
use serde::Serialize;

use crate::session::{ComplexSpec, Session, Task};
use crate::suite::{example_suite, SuiteSummary};

/// Version tag carried by every machine record.
pub const SCHEMA: &str = "levelcert.task/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    CheckFailed,
    Error,
    Internal,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed | Status::Error => 1,
            Status::Internal => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LechResult {
    pub sequence: Vec<String>,
    pub lech_independent: bool,
    pub frank_conormal: usize,
    pub level: LevelReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantsResult {
    pub sequence: Vec<String>,
    #[serde(flatten)]
    pub report: InvariantReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum TaskOutput {
    Invariants(InvariantsResult),
    Level(LevelReport),
    Lech(LechResult),
    Factorization(FactorizationCheck),
    Suite(SuiteSummary),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TaskRecord {
    pub schema: &'static str,
    pub index: usize,
    pub kind: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<TaskOutput>,
}

impl TaskRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn strings(seq: &[Poly]) -> Vec<String> {
    seq.iter().map(ToString::to_string).collect()
}

fn build_complex(spec: &ComplexSpec, ring: &QuotientRing) -> levelcert::Result<ChainComplex> {
    match spec {
        ComplexSpec::Koszul { seq, .. } => koszul_complex(seq, ring),
        ComplexSpec::Hom(a, b) => hom_complex(&build_complex(a, ring)?, &build_complex(b, ring)?),
    }
}

fn execute(task: &Task, ring: &QuotientRing) -> levelcert::Result<(Status, TaskOutput)> {
    Ok(match task {
        Task::Invariants { seq, .. } => {
            let report = invariant_report(seq, ring)?;
            (Status::Ok, TaskOutput::Invariants(InvariantsResult { sequence: strings(seq), report }))
        }
        Task::KoszulLevel { seq, ideal, .. } => {
            (Status::Ok, TaskOutput::Level(koszul_level(seq, ring, ideal.as_ref().map(|(_, i)| i))?))
        }
        Task::Level { complex, ideal } => {
            let c = build_complex(complex, ring)?;
            let label = complex.to_string();
            (Status::Ok, TaskOutput::Level(level_interval(&label, &c, ideal.as_ref().map(|(_, i)| i))?))
        }
        Task::Lech { seq, .. } => {
            let independent = lech_independent(seq, ring)?;
            let level = koszul_level(seq, ring, None)?;
            let frank = frank_conormal(seq, ring)?;
            let expected = seq.len() + 1;
            let status =
                if independent && !(level.exact && level.lower == expected) { Status::CheckFailed } else { Status::Ok };
            let result =
                LechResult { sequence: strings(seq), lech_independent: independent, frank_conormal: frank, level };
            (status, TaskOutput::Lech(result))
        }
        Task::FactorizationExample { n } => {
            let check = verify_factorization_example(*n, ring.ambient().characteristic(), true)?;
            let status = if check.passed() { Status::Ok } else { Status::CheckFailed };
            (status, TaskOutput::Factorization(check))
        }
        Task::ExampleSuite { n, p } => {
            let summary = example_suite(*n, *p)?;
            let status = if summary.passed { Status::Ok } else { Status::CheckFailed };
            (status, TaskOutput::Suite(summary))
        }
    })
}

pub fn run_task(index: usize, task: &Task, ring: &QuotientRing) -> TaskRecord {
    let (status, message, result) = match execute(task, ring) {
        Ok((status, out)) => (status, None, Some(out)),
        Err(e @ AlgebraError::Internal(_)) => (Status::Internal, Some(e.to_string()), None),
        Err(e) => (Status::Error, Some(e.to_string()), None),
    };
    TaskRecord { schema: SCHEMA, index, kind: task.kind().name(), status, message, result }
}

fn render_level(out: &mut String, rep: &LevelReport) {
    let exact = if rep.exact { "exact" } else { "" };
    let _ = writeln!(out, "  {:<14}{}", "complex", rep.label);
    let _ = writeln!(out, "  {:<14}[{}, {}] {}", "level", rep.lower, rep.upper, exact);
    let _ = writeln!(out, "  {:<14}{:<6}{:<14}{:>5}  evidence", "certificates", "side", "kind", "value");
    for c in &rep.certificates {
        let side = if c.kind.is_upper() { "upper" } else { "lower" };
        let detail = c.to_string();
        let evidence = detail.split_once(" (").map_or("", |(_, e)| e.trim_end_matches(')'));
        let _ = writeln!(out, "  {:<14}{:<6}{:<14}{:>5}  {}", "", side, c.kind.name(), c.value, evidence);
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

/// Human-readable table for one record.
pub fn render(record: &TaskRecord) -> String {
    let mut out = String::new();
    let status = match record.status {
        Status::Ok => "ok",
        Status::CheckFailed => "FAILED",
        Status::Error => "ERROR",
        Status::Internal => "INTERNAL",
    };
    let _ = writeln!(out, "task {} [{}] {}", record.index, record.kind, status);
    if let Some(m) = &record.message {
        let _ = writeln!(out, "  {m}");
    }
    match &record.result {
        None => {}
        Some(TaskOutput::Level(rep)) => render_level(&mut out, rep),
        Some(TaskOutput::Invariants(inv)) => {
            let r = &inv.report;
            let rows: [(&str, String); 11] = [
                ("sequence", inv.sequence.join(", ")),
                ("dim R", r.dim_r.to_string()),
                ("dim R/I", r.dim_r_mod_i.to_string()),
                ("depth R", r.depth_r.to_string()),
                ("depth I", r.depth_i.to_string()),
                ("edim R", r.edim.to_string()),
                ("height I", opt(&r.height)),
                ("bigheight I", opt(&r.bigheight)),
                ("lech-indep", r.lech_independent.to_string()),
                ("frank I/I^2", r.frank_conormal.to_string()),
                ("part of sop", r.is_psop.to_string()),
            ];
            for (k, v) in rows {
                let _ = writeln!(out, "  {k:<14}{v}");
            }
        }
        Some(TaskOutput::Lech(l)) => {
            let _ = writeln!(out, "  {:<14}{}", "sequence", l.sequence.join(", "));
            let _ = writeln!(out, "  {:<14}{}", "lech-indep", l.lech_independent);
            let _ = writeln!(out, "  {:<14}{}", "frank I/I^2", l.frank_conormal);
            render_level(&mut out, &l.level);
        }
        Some(TaskOutput::Factorization(f)) => {
            let rows = [
                ("alpha chain map", f.alpha_is_chain_map),
                ("beta chain map", f.beta_is_chain_map),
                ("composite = x1", f.composite_is_multiplication),
                ("torsion homology", f.homology_is_torsion),
            ];
            let _ = writeln!(out, "  {:<18}{}", "n", f.n);
            for (k, v) in rows {
                let _ = writeln!(out, "  {k:<18}{v}");
            }
        }
        Some(TaskOutput::Suite(s)) => render_suite_into(&mut out, s),
    }
    out
}

fn render_suite_into(out: &mut String, s: &SuiteSummary) {
    let _ = writeln!(out, "  suite n = {}, p = {}", s.n, s.p);
    for c in &s.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        let _ = writeln!(out, "  {mark}  {}: expected {}, got {}", c.name, c.expected, c.actual);
    }
}

pub fn render_suite(s: &SuiteSummary) -> String {
    let mut out = String::new();
    render_suite_into(&mut out, s);
    out
}

/// Outcome of a whole session.
#[derive(Clone, Debug)]
pub struct SessionRun {
    pub records: Vec<TaskRecord>,
}

impl SessionRun {
    pub fn exit_code(&self) -> i32 {
        self.records.iter().map(|r| r.status).max().map_or(0, Status::exit_code)
    }

    pub fn human(&self) -> String {
        self.records.iter().map(render).collect::<Vec<_>>().join("\n")
    }

    /// One JSON record per line.
    pub fn machine(&self) -> String {
        self.records.iter().map(|r| r.to_json() + "\n").collect()
    }
}

/// Runs every task in declaration order. With `parallel`, tasks run on
/// separate threads and their records are collected in order.
pub fn run_session(session: &Session, parallel: bool) -> SessionRun {
    let ring = &session.ring;
    let records = if parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> =
                session.tasks.iter().enumerate().map(|(i, t)| scope.spawn(move || run_task(i + 1, t, ring))).collect();
            handles.into_iter().map(|h| h.join().expect("task thread panicked")).collect()
        })
    } else {
        session.tasks.iter().enumerate().map(|(i, t)| run_task(i + 1, t, ring)).collect()
    };
    SessionRun { records }
}
