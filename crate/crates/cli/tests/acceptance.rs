//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

use levelcert::complex::{hom_complex, koszul_complex, ChainComplex};
use levelcert::invariants::{depth_of_sequence, depth_ring, dims, Depth};
use levelcert::level::{check_torsion_bound, level_interval, verify_factorization_example, BoundKind, LevelReport};
use levelcert::module::QuotientRing;
use levelcert::monomial_ideal::bigheight_monomial;
use levelcert::{IdealData, Poly, PolyRing};
use levelcert_cli::run::{run_session, Status, TaskOutput};
use levelcert_cli::session::parse_session;
use levelcert_oracle::corpus::random_complexes;
use levelcert_oracle::{depth_by_regular_forms, homology_dimension, DegreewiseRing};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

static REPORTS: Mutex<Vec<(String, usize, usize)>> = Mutex::new(Vec::new());

fn keep(rep: &LevelReport) {
    REPORTS.lock().unwrap().push((rep.label.clone(), rep.lower, rep.upper));
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ring(n: usize) -> PolyRing {
    PolyRing::new(n, 101).unwrap()
}

fn meet(p: PolyRing) -> IdealData {
    let x1 = p.var(0);
    IdealData::new(p, (1..p.nvars()).map(|j| x1.mul(&p.var(j))).collect()).unwrap()
}

fn quotient(p: PolyRing, gens: &[&str]) -> QuotientRing {
    QuotientRing::new(IdealData::new(p, gens.iter().map(|g| p.parse(g).unwrap()).collect()).unwrap()).unwrap()
}

fn var_list(m: usize) -> String {
    (1..=m).map(|i| format!("x{i}")).collect::<Vec<_>>().join(", ")
}

fn parameters_are_exact() -> Outcome {
    for n in 1..=4 {
        for m in 1..=n {
            let text = format!(
                "[ring]\np = 101\nvars = {n}\n[seq s]\nelems = {}\n[task koszul-level]\nseq = s\n",
                var_list(m)
            );
            let run = run_session(&parse_session(&text).map_err(|e| e.to_string())?, false);
            let record = &run.records[0];
            let Some(TaskOutput::Level(rep)) = &record.result else {
                return Err(format!("n = {n}, m = {m}: task status {:?}", record.status));
            };
            keep(rep);
            ensure(rep.exact && rep.lower == m + 1, || format!("n = {n}, m = {m}: [{}, {}]", rep.lower, rep.upper))?;
        }
    }
    Ok(())
}

fn lech_sequences_are_exact() -> Outcome {
    let p2 = ring(2);
    let p3 = ring(3);
    let cases = vec![
        (quotient(p2, &["x1^2", "x1*x2", "x2^3"]), vec!["x1", "x2"]),
        (quotient(p2, &["x1^2", "x1*x2", "x2^2"]), vec!["x1", "x2"]),
        (quotient(p3, &["x1^2", "x1*x2", "x2^3", "x3^2"]), vec!["x1", "x2", "x3"]),
        (QuotientRing::polynomial(p2), vec!["x1^2", "x2^2"]),
    ];
    for (q, seq) in cases {
        let text_seq = seq.join(", ");
        let seq: Vec<Poly> = seq.iter().map(|s| q.ambient().parse(s).unwrap()).collect();
        let rep = levelcert::level::koszul_level(&seq, &q, None).map_err(|e| e.to_string())?;
        keep(&rep);
        let n = seq.len();
        let frank = rep.certificates.iter().any(|c| c.kind == BoundKind::Frank && c.value == n + 1);
        ensure(rep.exact && rep.lower == n + 1 && frank, || {
            format!("({text_seq}): [{}, {}], frank certificate {frank}", rep.lower, rep.upper)
        })?;
    }
    Ok(())
}

fn torsion_certificate_on_koszul() -> Outcome {
    for n in 3..=5 {
        let p = ring(n);
        let q = QuotientRing::polynomial(p);
        let i = meet(p);
        let (dim_r, dim_q) = dims(&i, &q).map_err(|e| e.to_string())?;
        let k = koszul_complex(i.generators(), &q).map_err(|e| e.to_string())?.minimalize();
        let check = check_torsion_bound(&k, &i).map_err(|e| e.to_string())?;
        let value = check.certificate.as_ref().map(|c| c.value);
        let expected = (dim_r - dim_q + 1) as usize;
        ensure(expected == 2 && value == Some(expected) && check.hypotheses_hold(), || {
            format!("n = {n}: value {value:?}, expected {expected}, hypotheses {}", check.hypotheses_hold())
        })?;
        let rep = level_interval("K(meet)", &k, Some(&i)).map_err(|e| e.to_string())?;
        keep(&rep);
    }
    Ok(())
}

fn family_a() -> Outcome {
    for n in 3..=5 {
        let p = ring(n);
        let q = QuotientRing::polynomial(p);
        let i = meet(p);
        let (a, b) = dims(&i, &q).map_err(|e| e.to_string())?;
        let bh = bigheight_monomial(&i, q.defining()).map_err(|e| e.to_string())?;
        ensure(a - b == 1 && bh == n - 1, || format!("n = {n}: difference {}, bigheight {bh}", a - b))?;
    }
    Ok(())
}

fn family_b() -> Outcome {
    for n in 3..=5 {
        let p = ring(n);
        let q = QuotientRing::new(meet(p)).unwrap();
        let i = IdealData::new(p, (1..n).map(|j| p.var(j)).collect()).unwrap();
        let (a, b) = dims(&i, &q).map_err(|e| e.to_string())?;
        let bh = bigheight_monomial(&i, q.defining()).map_err(|e| e.to_string())?;
        ensure(a - b == n as i64 - 2 && bh == 0, || format!("n = {n}: difference {}, bigheight {bh}", a - b))?;
    }
    Ok(())
}

fn bigheight_is_not_the_level() -> Outcome {
    for n in 3..=5 {
        let p = ring(n);
        let q = QuotientRing::polynomial(p);
        let i = meet(p);
        let bh = bigheight_monomial(&i, q.defining()).map_err(|e| e.to_string())?;
        let k = koszul_complex(&[p.var(0)], &q).map_err(|e| e.to_string())?;
        let rep = level_interval("K(x1)", &k, Some(&i)).map_err(|e| e.to_string())?;
        keep(&rep);
        ensure(rep.exact && rep.lower == 2 && bh + 1 == n && !rep.has_certificate_of_value(n), || {
            format!("n = {n}: [{}, {}], bigheight {bh}", rep.lower, rep.upper)
        })?;
    }
    Ok(())
}

fn factorization_through_torsion() -> Outcome {
    for n in 3..=5 {
        let check = verify_factorization_example(n, 101, true).map_err(|e| e.to_string())?;
        ensure(check.passed(), || format!("n = {n}: {check:?}"))?;
        let p = ring(n);
        let q = QuotientRing::new(meet(p)).unwrap();
        let k = koszul_complex(&[p.var(0)], &q).map_err(|e| e.to_string())?;
        let h = hom_complex(&k, &k).map_err(|e| e.to_string())?;
        let rep = level_interval("Hom(K(x1), K(x1))", &h, None).map_err(|e| e.to_string())?;
        keep(&rep);
        ensure(rep.exact && rep.lower == 2, || format!("n = {n}: Hom interval [{}, {}]", rep.lower, rep.upper))?;
    }
    Ok(())
}

fn depth_matches_oracle() -> Outcome {
    let p = ring(2);
    let rings = [(QuotientRing::polynomial(p), 2), (quotient(p, &["x1*x2"]), 1), (quotient(p, &["x1^2", "x1*x2"]), 0)];
    for (q, expected) in rings {
        let by_koszul = depth_of_sequence(&p.variables(), &q).map_err(|e| e.to_string())?;
        let oracle = depth_by_regular_forms(&q, 6);
        ensure(by_koszul == Depth::Finite(expected) && depth_ring(&q) == expected && oracle == expected, || {
            format!("{q:?}: Koszul {by_koszul}, oracle {oracle}, expected {expected}")
        })?;
    }
    Ok(())
}

fn lowest_twist(c: &ChainComplex) -> i32 {
    c.modules().iter().flat_map(|m| m.twists().iter().copied()).min().unwrap_or(0).min(0)
}

fn homology_matches_oracle() -> Outcome {
    let corpus = random_complexes(2024, 24);
    ensure(corpus.len() >= 20, || "corpus too small".into())?;
    for (label, c) in &corpus {
        let mut model = DegreewiseRing::new(c.ring());
        for i in 0..=c.top() {
            let h = c.homology(i).map_err(|e| e.to_string())?;
            for d in lowest_twist(c)..=6 {
                let gb = h.underlying.hilbert_function(d);
                let oracle = homology_dimension(&mut model, c, i, d);
                ensure(gb == oracle, || format!("{label}: H_{i} in degree {d}: {gb} vs {oracle}"))?;
            }
        }
    }
    Ok(())
}

fn bounds_never_cross() -> Outcome {
    for seed in [7, 2024] {
        for (label, c) in random_complexes(seed, 24) {
            let rep = level_interval(&label, &c, None).map_err(|e| format!("{label}: {e}"))?;
            keep(&rep);
            if let levelcert::complex::Origin::Koszul(seq) = c.origin() {
                let ideal = IdealData::new(c.ring().ambient(), seq.clone()).unwrap();
                let rep = level_interval(&label, &c, Some(&ideal)).map_err(|e| format!("{label}: {e}"))?;
                keep(&rep);
            }
        }
    }
    let session = "[ring]\nvars = 3\nquotient = meet((x1), (x2, x3))\n[seq a]\nelems = x1\n[seq t]\nelems = x2, x3\n\
                   [task koszul-level]\nseq = t\n[task level]\ncomplex = hom(koszul(a), koszul(t))\n[task lech]\nseq = t\n";
    let run = run_session(&parse_session(session).map_err(|e| e.to_string())?, false);
    ensure(run.records.iter().all(|r| r.status != Status::Internal) && run.exit_code() != 3, || {
        "a session task reported an internal inconsistency".into()
    })?;
    let reports = REPORTS.lock().unwrap();
    for (label, lower, upper) in reports.iter() {
        ensure(lower <= upper, || format!("{label}: [{lower}, {upper}]"))?;
    }
    ensure(reports.len() >= 40, || format!("only {} reports checked", reports.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("partial parameter sequences give exact interval m + 1", parameters_are_exact),
        ("Lech-independent sequences are exact via the frank bound", lech_sequences_are_exact),
        ("torsion certificate on Koszul complexes of (x1) meet (x2..xn)", torsion_certificate_on_koszul),
        ("family A: dimension drop 1, bigheight n - 1", family_a),
        ("family B: dimension drop n - 2, bigheight 0", family_b),
        ("K(x1) has level 2 while bigheight + 1 = n", bigheight_is_not_the_level),
        ("factorization through torsion and Hom(K(x1), K(x1)) = [2, 2]", factorization_through_torsion),
        ("Koszul depth matches the regular-element oracle", depth_matches_oracle),
        ("homology Hilbert functions match the degreewise oracle", homology_matches_oracle),
        ("no report has lower > upper", bounds_never_cross),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} pass  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.2}s",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
