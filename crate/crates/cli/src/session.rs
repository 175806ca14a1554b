//! Session files: a line-oriented description of a ring, named ideals and
//! sequences, and a list of tasks.
//!
//! ```text
//! [ring]
//! p = 101
//! vars = 3
//! quotient = meet((x1), (x2, x3))
//!
//! [ideal I]
//! gens = x2, x3
//!
//! [seq s]
//! elems = x2, x3
//!
//! [task koszul-level]
//! seq = s
//! ideal = I
//! ```
//!
//! Ideal expressions are a name, `meet(A, B)`, or a parenthesized list of
//! polynomials. Lines starting with `#` are comments.

use std::collections::BTreeMap;
use std::fmt;

use levelcert::module::QuotientRing;
use levelcert::poly::{is_prime, DEFAULT_CHARACTERISTIC};
use levelcert::{AlgebraError, IdealData, Poly, PolyRing};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorCode {
    Syntax,
    UnknownName,
    NonHomogeneous,
    NonPrime,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Syntax => "E01-syntax",
            ErrorCode::UnknownName => "E02-unknown-name",
            ErrorCode::NonHomogeneous => "E03-non-homogeneous",
            ErrorCode::NonPrime => "E04-non-prime",
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("error[{code}] at line {line}, column {column}: {message}")]
pub struct SessionError {
    pub code: ErrorCode,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

type Result<T> = std::result::Result<T, SessionError>;

fn error(code: ErrorCode, line: usize, column: usize, message: impl Into<String>) -> SessionError {
    SessionError { code, line, column, message: message.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaskKind {
    Invariants,
    KoszulLevel,
    Level,
    Lech,
    FactorizationExample,
    ExampleSuite,
}

impl TaskKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "invariants" => TaskKind::Invariants,
            "koszul-level" => TaskKind::KoszulLevel,
            "level" => TaskKind::Level,
            "lech" => TaskKind::Lech,
            "factorization-example" => TaskKind::FactorizationExample,
            "paper-suite" | "example-suite" => TaskKind::ExampleSuite,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            TaskKind::Invariants => "invariants",
            TaskKind::KoszulLevel => "koszul-level",
            TaskKind::Level => "level",
            TaskKind::Lech => "lech",
            TaskKind::FactorizationExample => "factorization-example",
            TaskKind::ExampleSuite => "paper-suite",
        }
    }

    fn allowed_keys(self) -> &'static [&'static str] {
        match self {
            TaskKind::Invariants => &["seq", "ideal"],
            TaskKind::KoszulLevel => &["seq", "ideal"],
            TaskKind::Level => &["complex", "ideal"],
            TaskKind::Lech => &["seq"],
            TaskKind::FactorizationExample => &["n"],
            TaskKind::ExampleSuite => &["n", "p"],
        }
    }
}

/// A complex described in a `level` task.
#[derive(Clone, Debug, PartialEq)]
pub enum ComplexSpec {
    Koszul { name: String, seq: Vec<Poly> },
    Hom(Box<ComplexSpec>, Box<ComplexSpec>),
}

impl fmt::Display for ComplexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexSpec::Koszul { name, .. } => write!(f, "koszul({name})"),
            ComplexSpec::Hom(a, b) => write!(f, "hom({a}, {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Task {
    Invariants { seq_name: String, seq: Vec<Poly> },
    KoszulLevel { seq_name: String, seq: Vec<Poly>, ideal: Option<(String, IdealData)> },
    Level { complex: ComplexSpec, ideal: Option<(String, IdealData)> },
    Lech { seq_name: String, seq: Vec<Poly> },
    FactorizationExample { n: usize },
    ExampleSuite { n: usize, p: u32 },
}

impl Task {
    pub fn kind(&self) -> TaskKind {
        match self {
            Task::Invariants { .. } => TaskKind::Invariants,
            Task::KoszulLevel { .. } => TaskKind::KoszulLevel,
            Task::Level { .. } => TaskKind::Level,
            Task::Lech { .. } => TaskKind::Lech,
            Task::FactorizationExample { .. } => TaskKind::FactorizationExample,
            Task::ExampleSuite { .. } => TaskKind::ExampleSuite,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Session {
    pub ring: QuotientRing,
    pub ideals: BTreeMap<String, IdealData>,
    pub seqs: BTreeMap<String, Vec<Poly>>,
    pub tasks: Vec<Task>,
}

impl Session {
    pub fn characteristic(&self) -> u32 {
        self.ring.ambient().characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }
}

#[derive(Clone, Debug)]
struct Entry {
    key: String,
    value: String,
    line: usize,
    value_column: usize,
}

#[derive(Clone, Debug)]
struct Section {
    kind: String,
    name: Option<String>,
    line: usize,
    column: usize,
    entries: Vec<Entry>,
}

impl Section {
    fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn split_sections(text: &str) -> Result<Vec<Section>> {
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.len() - raw.trim_start().len();
        if trimmed.starts_with('[') {
            if !trimmed.ends_with(']') {
                return Err(error(ErrorCode::Syntax, line, indent + trimmed.len() + 1, "expected ']'"));
            }
            let inner = trimmed[1..trimmed.len() - 1].trim();
            let mut parts = inner.split_whitespace();
            let kind = parts.next().unwrap_or("").to_string();
            let name = parts.next().map(str::to_string);
            if parts.next().is_some() {
                return Err(error(ErrorCode::Syntax, line, indent + 1, "section header has too many words"));
            }
            sections.push(Section { kind, name, line, column: indent + 1, entries: Vec::new() });
            continue;
        }
        let Some(eq) = raw.find('=') else {
            return Err(error(ErrorCode::Syntax, line, indent + 1, "expected 'key = value'"));
        };
        let key = raw[..eq].trim().to_string();
        if !is_name(&key) {
            return Err(error(ErrorCode::Syntax, line, indent + 1, format!("invalid key '{key}'")));
        }
        let after = &raw[eq + 1..];
        let lead = after.len() - after.trim_start().len();
        let value = after.trim().to_string();
        let value_column = eq + 2 + lead;
        let Some(section) = sections.last_mut() else {
            return Err(error(ErrorCode::Syntax, line, indent + 1, "entry outside of any section"));
        };
        if section.get(&key).is_some() {
            return Err(error(ErrorCode::Syntax, line, indent + 1, format!("duplicate key '{key}'")));
        }
        section.entries.push(Entry { key, value, line, value_column });
    }
    Ok(sections)
}

/// Maps engine errors raised while reading a value to session diagnostics.
fn algebra_error(e: AlgebraError, line: usize, column: usize) -> SessionError {
    match e {
        AlgebraError::Parse { column: c, message } => error(ErrorCode::Syntax, line, column + c - 1, message),
        AlgebraError::NonHomogeneous(m) => {
            error(ErrorCode::NonHomogeneous, line, column, format!("not homogeneous: {m}"))
        }
        AlgebraError::NonPrime(p) => {
            error(ErrorCode::NonPrime, line, column, format!("characteristic {p} is not prime"))
        }
        other => error(ErrorCode::Syntax, line, column, other.to_string()),
    }
}

/// Splits on top-level commas, returning each piece with its byte offset.
fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

/// Parses a comma-separated list of homogeneous polynomials; `column` is
/// the column of the first character of `text`.
fn parse_poly_list(ring: PolyRing, text: &str, line: usize, column: usize) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for (offset, piece) in split_top_level(text) {
        let lead = piece.len() - piece.trim_start().len();
        let col = column + offset + lead;
        let body = piece.trim();
        if body.is_empty() {
            return Err(error(ErrorCode::Syntax, line, col, "empty polynomial in list"));
        }
        let f = ring.parse(body).map_err(|e| algebra_error(e, line, col))?;
        if !f.is_homogeneous() {
            return Err(error(ErrorCode::NonHomogeneous, line, col, format!("{body} is not homogeneous")));
        }
        out.push(f);
    }
    Ok(out)
}

/// Parses `NAME`, `meet(e, e)` or `(f1, f2, ...)`. Names resolve through `lookup`.
pub fn parse_ideal_expr(
    ring: PolyRing,
    text: &str,
    line: usize,
    column: usize,
    lookup: &dyn Fn(&str) -> Option<IdealData>,
) -> std::result::Result<IdealData, SessionError> {
    let body = text.trim();
    let lead = text.len() - text.trim_start().len();
    let column = column + lead;
    if body.is_empty() {
        return Err(error(ErrorCode::Syntax, line, column, "empty ideal expression"));
    }
    if let Some(rest) = body.strip_prefix("meet") {
        let rest_trim = rest.trim_start();
        if rest_trim.starts_with('(') {
            let open = body.len() - rest_trim.len();
            if !body.ends_with(')') {
                return Err(error(ErrorCode::Syntax, line, column + body.len(), "expected ')'"));
            }
            let inner = &body[open + 1..body.len() - 1];
            let parts = split_top_level(inner);
            if parts.len() != 2 {
                return Err(error(ErrorCode::Syntax, line, column + open, "meet takes exactly two ideals"));
            }
            let a = parse_ideal_expr(ring, parts[0].1, line, column + open + 1 + parts[0].0, lookup)?;
            let b = parse_ideal_expr(ring, parts[1].1, line, column + open + 1 + parts[1].0, lookup)?;
            return Ok(a.intersection(&b));
        }
    }
    if body.starts_with('(') {
        if !body.ends_with(')') {
            return Err(error(ErrorCode::Syntax, line, column + body.len(), "expected ')'"));
        }
        let gens = parse_poly_list(ring, &body[1..body.len() - 1], line, column + 1)?;
        return IdealData::new(ring, gens).map_err(|e| algebra_error(e, line, column));
    }
    if is_name(body) {
        return lookup(body)
            .ok_or_else(|| error(ErrorCode::UnknownName, line, column, format!("unknown ideal '{body}'")));
    }
    Err(error(ErrorCode::Syntax, line, column, format!("cannot read ideal expression '{body}'")))
}

fn parse_usize(entry: &Entry) -> Result<usize> {
    entry.value.parse().map_err(|_| {
        error(
            ErrorCode::Syntax,
            entry.line,
            entry.value_column,
            format!("expected an integer, found '{}'", entry.value),
        )
    })
}

fn parse_characteristic(entry: &Entry) -> Result<u32> {
    let p: u32 = entry.value.parse().map_err(|_| {
        error(
            ErrorCode::Syntax,
            entry.line,
            entry.value_column,
            format!("expected an integer, found '{}'", entry.value),
        )
    })?;
    if !is_prime(p) {
        return Err(error(
            ErrorCode::NonPrime,
            entry.line,
            entry.value_column,
            format!("characteristic {p} is not prime"),
        ));
    }
    Ok(p)
}

fn check_keys(section: &Section, allowed: &[&str]) -> Result<()> {
    for e in &section.entries {
        if !allowed.contains(&e.key.as_str()) {
            return Err(error(
                ErrorCode::Syntax,
                e.line,
                1,
                format!("unexpected key '{}' in [{}]", e.key, section.kind),
            ));
        }
    }
    Ok(())
}

fn required<'a>(section: &'a Section, key: &str) -> Result<&'a Entry> {
    section.get(key).ok_or_else(|| {
        error(ErrorCode::Syntax, section.line, section.column, format!("[{}] needs '{key}'", section.kind))
    })
}

struct Resolver {
    ring: PolyRing,
    ideals: BTreeMap<String, IdealData>,
    seqs: BTreeMap<String, Vec<Poly>>,
}

impl Resolver {
    fn ideal(&self, entry: &Entry) -> Result<(String, IdealData)> {
        let ideals = &self.ideals;
        let id =
            parse_ideal_expr(self.ring, &entry.value, entry.line, entry.value_column, &|n| ideals.get(n).cloned())?;
        Ok((entry.value.clone(), id))
    }

    fn seq(&self, entry: &Entry) -> Result<(String, Vec<Poly>)> {
        let name = entry.value.trim();
        self.seqs.get(name).map(|s| (name.to_string(), s.clone())).ok_or_else(|| {
            error(ErrorCode::UnknownName, entry.line, entry.value_column, format!("unknown sequence '{name}'"))
        })
    }

    fn complex(&self, text: &str, line: usize, column: usize) -> Result<ComplexSpec> {
        let body = text.trim();
        let column = column + (text.len() - text.trim_start().len());
        let call = |prefix: &str| -> Option<&str> {
            let rest = body.strip_prefix(prefix)?.trim_start();
            let rest = rest.strip_prefix('(')?;
            rest.strip_suffix(')')
        };
        if let Some(inner) = call("koszul") {
            let open = body.find('(').unwrap();
            let name = inner.trim();
            let seq = self.seqs.get(name).cloned().ok_or_else(|| {
                error(ErrorCode::UnknownName, line, column + open + 1, format!("unknown sequence '{name}'"))
            })?;
            return Ok(ComplexSpec::Koszul { name: name.to_string(), seq });
        }
        if let Some(inner) = call("hom") {
            let open = body.find('(').unwrap();
            let parts = split_top_level(inner);
            if parts.len() != 2 {
                return Err(error(ErrorCode::Syntax, line, column + open, "hom takes exactly two complexes"));
            }
            let a = self.complex(parts[0].1, line, column + open + 1 + parts[0].0)?;
            let b = self.complex(parts[1].1, line, column + open + 1 + parts[1].0)?;
            return Ok(ComplexSpec::Hom(Box::new(a), Box::new(b)));
        }
        Err(error(ErrorCode::Syntax, line, column, format!("expected koszul(SEQ) or hom(A, B), found '{body}'")))
    }
}

pub fn parse_session(text: &str) -> Result<Session> {
    let sections = split_sections(text)?;
    let Some(ring_section) = sections.iter().find(|s| s.kind == "ring") else {
        return Err(error(ErrorCode::Syntax, 1, 1, "missing [ring] section"));
    };
    if sections.iter().filter(|s| s.kind == "ring").count() > 1 {
        let second = sections.iter().filter(|s| s.kind == "ring").nth(1).unwrap();
        return Err(error(ErrorCode::Syntax, second.line, second.column, "duplicate [ring] section"));
    }
    check_keys(ring_section, &["p", "vars", "quotient"])?;
    let p = match ring_section.get("p") {
        Some(e) => parse_characteristic(e)?,
        None => DEFAULT_CHARACTERISTIC,
    };
    let vars_entry = required(ring_section, "vars")?;
    let nvars = parse_usize(vars_entry)?;
    if nvars == 0 || nvars > 16 {
        return Err(error(
            ErrorCode::Syntax,
            vars_entry.line,
            vars_entry.value_column,
            "vars must be between 1 and 16",
        ));
    }
    let poly_ring = PolyRing::new(nvars, p).map_err(|e| algebra_error(e, vars_entry.line, vars_entry.value_column))?;
    let mut resolver = Resolver { ring: poly_ring, ideals: BTreeMap::new(), seqs: BTreeMap::new() };
    let mut tasks = Vec::new();
    let mut pending_tasks = Vec::new();
    for section in &sections {
        match section.kind.as_str() {
            "ring" => {}
            "ideal" | "seq" => {
                let Some(name) = section.name.clone().filter(|n| is_name(n)) else {
                    return Err(error(
                        ErrorCode::Syntax,
                        section.line,
                        section.column,
                        format!("[{}] needs a name", section.kind),
                    ));
                };
                if resolver.ideals.contains_key(&name) || resolver.seqs.contains_key(&name) {
                    return Err(error(
                        ErrorCode::Syntax,
                        section.line,
                        section.column,
                        format!("'{name}' is already defined"),
                    ));
                }
                if section.kind == "ideal" {
                    check_keys(section, &["gens", "expr"])?;
                    let ideal = match (section.get("gens"), section.get("expr")) {
                        (Some(g), None) => {
                            let gens = parse_poly_list(poly_ring, &g.value, g.line, g.value_column)?;
                            IdealData::new(poly_ring, gens).map_err(|e| algebra_error(e, g.line, g.value_column))?
                        }
                        (None, Some(e)) => resolver.ideal(e)?.1,
                        _ => {
                            return Err(error(
                                ErrorCode::Syntax,
                                section.line,
                                section.column,
                                "[ideal] needs exactly one of 'gens' or 'expr'",
                            ))
                        }
                    };
                    resolver.ideals.insert(name, ideal);
                } else {
                    check_keys(section, &["elems"])?;
                    let e = required(section, "elems")?;
                    let elems = parse_poly_list(poly_ring, &e.value, e.line, e.value_column)?;
                    resolver.seqs.insert(name, elems);
                }
            }
            "task" => pending_tasks.push(section),
            other => {
                return Err(error(
                    ErrorCode::Syntax,
                    section.line,
                    section.column,
                    format!("unknown section '[{other}]'"),
                ));
            }
        }
    }
    let quotient = match ring_section.get("quotient") {
        Some(e) => resolver.ideal(e)?.1,
        None => IdealData::zero(poly_ring),
    };
    let ring = if quotient.is_zero() {
        QuotientRing::polynomial(poly_ring)
    } else {
        let e = ring_section.get("quotient").unwrap();
        QuotientRing::new(quotient).map_err(|err| algebra_error(err, e.line, e.value_column))?
    };
    for section in pending_tasks {
        let Some(kind) = section.name.as_deref().and_then(TaskKind::parse) else {
            return Err(error(
                ErrorCode::Syntax,
                section.line,
                section.column,
                format!("unknown task '{}'", section.name.clone().unwrap_or_default()),
            ));
        };
        check_keys(section, kind.allowed_keys())?;
        let optional_ideal = |key: &str| section.get(key).map(|e| resolver.ideal(e)).transpose();
        let task = match kind {
            TaskKind::Invariants => {
                let (seq_name, seq) = match (section.get("seq"), section.get("ideal")) {
                    (Some(e), None) => resolver.seq(e)?,
                    (None, Some(e)) => {
                        let (name, ideal) = resolver.ideal(e)?;
                        (name, ideal.generators().to_vec())
                    }
                    _ => {
                        return Err(error(
                            ErrorCode::Syntax,
                            section.line,
                            section.column,
                            "[task invariants] needs 'seq' or 'ideal'",
                        ))
                    }
                };
                Task::Invariants { seq_name, seq }
            }
            TaskKind::KoszulLevel => {
                let (seq_name, seq) = resolver.seq(required(section, "seq")?)?;
                Task::KoszulLevel { seq_name, seq, ideal: optional_ideal("ideal")? }
            }
            TaskKind::Level => {
                let e = required(section, "complex")?;
                let complex = resolver.complex(&e.value, e.line, e.value_column)?;
                Task::Level { complex, ideal: optional_ideal("ideal")? }
            }
            TaskKind::Lech => {
                let (seq_name, seq) = resolver.seq(required(section, "seq")?)?;
                Task::Lech { seq_name, seq }
            }
            TaskKind::FactorizationExample => Task::FactorizationExample { n: parse_usize(required(section, "n")?)? },
            TaskKind::ExampleSuite => {
                let n = parse_usize(required(section, "n")?)?;
                let p = match section.get("p") {
                    Some(e) => parse_characteristic(e)?,
                    None => p,
                };
                Task::ExampleSuite { n, p }
            }
        };
        tasks.push(task);
    }
    Ok(Session { ring, ideals: resolver.ideals, seqs: resolver.seqs, tasks })
}

/// Polynomial list given on the command line; positions refer to the flag value.
pub fn parse_flag_polys(ring: PolyRing, text: &str) -> Result<Vec<Poly>> {
    parse_poly_list(ring, text, 1, 1)
}

/// Ideal expression given on the command line; names are not available.
pub fn parse_flag_ideal(ring: PolyRing, text: &str) -> Result<IdealData> {
    parse_ideal_expr(ring, text, 1, 1, &|_| None)
}

/// Builds a single-task session from command-line values.
pub fn flag_session(
    nvars: usize,
    p: u32,
    quotient: Option<&str>,
    task: impl FnOnce(PolyRing) -> Result<Task>,
) -> Result<Session> {
    if !is_prime(p) {
        return Err(error(ErrorCode::NonPrime, 1, 1, format!("characteristic {p} is not prime")));
    }
    if nvars == 0 || nvars > 16 {
        return Err(error(ErrorCode::Syntax, 1, 1, "vars must be between 1 and 16"));
    }
    let poly_ring = PolyRing::new(nvars, p).map_err(|e| algebra_error(e, 1, 1))?;
    let ring = match quotient {
        Some(text) => {
            let j = parse_flag_ideal(poly_ring, text)?;
            if j.is_zero() {
                QuotientRing::polynomial(poly_ring)
            } else {
                QuotientRing::new(j).map_err(|e| algebra_error(e, 1, 1))?
            }
        }
        None => QuotientRing::polynomial(poly_ring),
    };
    let task = task(poly_ring)?;
    Ok(Session { ring, ideals: BTreeMap::new(), seqs: BTreeMap::new(), tasks: vec![task] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_session() {
        let s = parse_session("[ring]\nvars = 2\n[seq s]\nelems = x1, x2\n[task koszul-level]\nseq = s\n").unwrap();
        assert_eq!(s.characteristic(), 101);
        assert_eq!(s.tasks.len(), 1);
    }

    #[test]
    fn diagnostics_have_codes_and_positions() {
        let e = parse_session("[ring]\nvars = 2\n[task koszul-level]\nseq = t\n").unwrap_err();
        assert_eq!((e.code, e.line, e.column), (ErrorCode::UnknownName, 4, 7));
        let e = parse_session("[ring]\np = 10\nvars = 2\n").unwrap_err();
        assert_eq!((e.code, e.line), (ErrorCode::NonPrime, 2));
        let e = parse_session("[ring]\nvars = 2\n[seq s]\nelems = x1, x2 + x1^2\n").unwrap_err();
        assert_eq!((e.code, e.line, e.column), (ErrorCode::NonHomogeneous, 4, 13));
        let e = parse_session("[ring]\nvars = 2\n[seq s]\nelems = x1, x3\n").unwrap_err();
        assert_eq!((e.code, e.line, e.column), (ErrorCode::Syntax, 4, 13));
        let e = parse_session("[ring]\nvars 2\n").unwrap_err();
        assert_eq!(e.code, ErrorCode::Syntax);
    }

    #[test]
    fn ideal_expressions() {
        let r = PolyRing::new(3, 101).unwrap();
        let none = |_: &str| None;
        let i = parse_ideal_expr(r, "meet((x1), (x2, x3))", 1, 1, &none).unwrap();
        assert_eq!(i, IdealData::new(r, vec![r.parse("x1*x2").unwrap(), r.parse("x1*x3").unwrap()]).unwrap());
        let e = parse_ideal_expr(r, "meet(A, (x1))", 1, 1, &none).unwrap_err();
        assert_eq!((e.code, e.column), (ErrorCode::UnknownName, 6));
    }

    #[test]
    fn level_task_with_hom() {
        let text = "[ring]\nvars = 3\nquotient = meet((x1), (x2, x3))\n[seq a]\nelems = x1\n[task level]\ncomplex = hom(koszul(a), koszul(a))\n";
        let s = parse_session(text).unwrap();
        match &s.tasks[0] {
            Task::Level { complex, ideal } => {
                assert_eq!(complex.to_string(), "hom(koszul(a), koszul(a))");
                assert!(ideal.is_none());
            }
            other => panic!("{other:?}"),
        }
    }
}
