//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one `criterion N ... PASS|FAIL` line; the process
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use token_spectra::bounds::{self, pqrs, qs_bound_factor, BoundReport, CheckRecord, Status};
use token_spectra::fixtures::standard_fixtures;
use token_spectra::graph::{write_edge_list, Family};
use token_spectra::verify::{verify_fixtures, Report, VerifyOptions};

// Tolerances pinned by the criteria.
const SPECTRAL: f64 = 1e-7;
const LIFT_THRESHOLD: f64 = 1e-6;
const BOUND: f64 = 1e-6;
const IDENTITY: f64 = 1e-9;
const RANDOM_VECTORS: usize = 1_000;
const WALL_CLOCK: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
    dump: Option<String>,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { pass: true, detail: detail.into(), dump: None }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { pass: false, detail: detail.into(), dump: None }
}

fn options() -> VerifyOptions {
    let mut o = VerifyOptions { random_vectors: RANDOM_VECTORS, ..VerifyOptions::default() };
    o.tolerances.matching = SPECTRAL;
    o.tolerances.equality = SPECTRAL;
    o.tolerances.lift_residual = SPECTRAL;
    o.tolerances.embedding = SPECTRAL;
    o.tolerances.lift_threshold = LIFT_THRESHOLD;
    o.tolerances.bound = BOUND;
    o.tolerances.identity = IDENTITY;
    o
}

fn named<'a>(report: &'a Report, checks: &[&str]) -> Vec<(&'a BoundReport, &'a CheckRecord)> {
    report.records().filter(|(_, r)| checks.contains(&r.check)).collect()
}

/// All named records pass or are vacuous, and at least `min_evaluated` were
/// not vacuous.
fn all_hold(report: &Report, checks: &[&str], min_evaluated: usize) -> Outcome {
    let recs = named(report, checks);
    let evaluated = recs.iter().filter(|(_, r)| r.status == Status::Pass).count();
    let failures: Vec<String> = recs
        .iter()
        .filter(|(_, r)| r.failed())
        .map(|(i, r)| format!("{} k={} {} margin={:?}", i.graph, i.k, r.check, r.margin))
        .collect();
    let worst = recs.iter().filter_map(|(_, r)| r.margin).fold(f64::INFINITY, f64::min);
    let detail =
        format!("{evaluated} evaluated, {} vacuous, worst margin {worst:.3e}", recs.len() - evaluated - failures.len());
    if !failures.is_empty() {
        return fail(format!("{detail}; failures: {}", failures.join("; ")));
    }
    if evaluated < min_evaluated {
        return fail(format!("{detail}; expected at least {min_evaluated} evaluated records"));
    }
    ok(detail)
}

fn find<'a>(report: &'a Report, graph: &str, k: usize, check: &str) -> Option<&'a CheckRecord> {
    report.instances.iter().find(|i| i.graph == graph && i.k == k).and_then(|i| i.record(check))
}

fn structural(report: &Report) -> Outcome {
    all_hold(report, &[bounds::STRUCTURE_VERTICES, bounds::STRUCTURE_EDGES], 2 * (report.instances.len() - 3))
}

fn degree_formula(report: &Report) -> Outcome {
    all_hold(report, &[bounds::DEGREE_FORMULA], report.instances.len() - 3)
}

fn spectral_inclusion(report: &Report) -> Outcome {
    let mut out = all_hold(report, &[bounds::SPECTRAL_INCLUSION], 1);
    if !out.pass {
        out.dump = Some("spectral inclusion is a theorem; any failure points at the eigensolver or the matcher".into());
    }
    out
}

fn eigenvector_lift(report: &Report) -> Outcome {
    all_hold(report, &[bounds::EIGENVECTOR_LIFT], report.instances.len() - 3)
}

fn embedding_restriction(report: &Report) -> Outcome {
    all_hold(report, &[bounds::EMBEDDING_RESTRICTION, bounds::EMBEDDING_SINGLE], 1)
}

fn oracle(report: &Report) -> Outcome {
    let out = all_hold(report, &[bounds::ALPHA_ORACLE], 1);
    if !out.pass {
        return out;
    }
    let Some(tight) = find(report, "complete:4", 2, bounds::NEW_EIGENVALUE_BOUND) else {
        return fail("no K_4, k=2 instance");
    };
    let m = tight.margin.unwrap_or(f64::NAN);
    if m.abs() > SPECTRAL || tight.lhs.map(|l| (l - 6.0).abs() > SPECTRAL).unwrap_or(true) {
        return fail(format!("K_4, k=2: new eigenvalue {:?}, margin {m:e}, expected 6 with margin 0", tight.lhs));
    }
    ok(format!("{}; K_4 k=2 tight: λ=6 vs 6, margin {m:.1e}", out.detail))
}

fn reproducer(report: &Report, failures: &[(&BoundReport, &CheckRecord)]) -> String {
    let fixtures = standard_fixtures();
    let mut dump = String::from("REPRODUCER: eigenvalues of F_k(G) absent from spec(G) below k[α(G) − k + 1]\n");
    for (inst, rec) in failures {
        dump.push_str(&format!(
            "  graph {} k={} α(G)={:?} smallest new λ={:?} bound={:?} margin={:?}\n  all new eigenvalues: {:?}\n",
            inst.graph, inst.k, inst.alpha_g, rec.lhs, rec.rhs, rec.margin, inst.new_eigenvalues
        ));
        if let Some(f) = fixtures.iter().find(|f| f.id == inst.graph) {
            dump.push_str("  edge list:\n");
            for line in write_edge_list(&f.graph).lines() {
                dump.push_str(&format!("    {line}\n"));
            }
        }
        let source = if inst.graph.parse::<Family>().is_ok() {
            format!("--family {}", inst.graph)
        } else {
            "--edge-list <the edge list above>".to_string()
        };
        dump.push_str(&format!("  rerun: token-spectra verify {source} --k {} --format text\n", inst.k));
        // the same eigenvalue against F_{k−1} instead of G
        if let Some(ind) = find(report, &inst.graph, inst.k, bounds::INDUCTION_BOUND) {
            dump.push_str(&format!(
                "  eigenvalues absent from spec(F_{}) only: status {} smallest {:?} vs {:?}\n",
                inst.k - 1,
                ind.status.as_str(),
                ind.lhs,
                ind.rhs
            ));
        }
    }
    dump
}

fn new_eigenvalue_bound(report: &Report) -> Outcome {
    let recs = named(report, &[bounds::NEW_EIGENVALUE_BOUND]);
    let failures: Vec<_> = recs.iter().copied().filter(|(_, r)| r.failed()).collect();
    let evaluated = recs.iter().filter(|(_, r)| r.margin.is_some()).count();
    let (min_margin, at) = recs
        .iter()
        .filter_map(|(i, r)| r.margin.map(|m| (m, format!("{} k={}", i.graph, i.k))))
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .unwrap_or((f64::NAN, String::new()));
    let passing_min = recs
        .iter()
        .filter(|(_, r)| r.status == Status::Pass)
        .filter_map(|(i, r)| r.margin.map(|m| (m, format!("{} k={}", i.graph, i.k))))
        .min_by(|a, b| a.0.total_cmp(&b.0));
    let detail = format!(
        "{evaluated} evaluated, min margin {min_margin:.3e} at {at}; min passing margin {:?}",
        passing_min.map(|(m, w)| format!("{m:.3e} at {w}"))
    );
    if failures.is_empty() {
        return ok(detail);
    }
    Outcome {
        pass: false,
        detail: format!("{} violation(s); {detail}", failures.len()),
        dump: Some(reproducer(report, &failures)),
    }
}

fn pqrs_identities(report: &Report) -> Outcome {
    all_hold(
        report,
        &[
            bounds::PQRS_IDENTITY,
            bounds::RECURSION_P,
            bounds::RECURSION_Q,
            bounds::RECURSION_R,
            bounds::RECURSION_S,
            bounds::RAYLEIGH_SPLIT,
        ],
        1,
    )
}

fn qs_bound(report: &Report) -> Outcome {
    let out = all_hold(report, &[bounds::QS_BOUND], 1);
    if !out.pass {
        return out;
    }
    let g = Family::Complete(4).build().unwrap();
    let x = pqrs(&g, 2, &[1.0; 6]).unwrap();
    let gap = (x.q - qs_bound_factor(&g, 2) * x.s).abs();
    if gap > IDENTITY {
        return fail(format!("K_4, k=2, v=1: Q={} vs factor·S={}", x.q, qs_bound_factor(&g, 2) * x.s));
    }
    ok(format!("{}; K_4 k=2 v=1: Q = 2S exactly (gap {gap:e})", out.detail))
}

fn fiedler(report: &Report) -> Outcome {
    let out = all_hold(report, &[bounds::FIEDLER_DELETION, bounds::CARTESIAN_ALPHA], 3);
    let products = named(report, &[bounds::CARTESIAN_ALPHA]).len();
    if out.pass && products != 3 {
        return fail(format!("expected 3 product records, found {products}"));
    }
    out
}

fn corollaries(report: &Report) -> Outcome {
    let out = all_hold(report, &[bounds::COROLLARY_ALPHA_GEQ_K, bounds::MIN_DEGREE_CONDITION], 1);
    if !out.pass {
        return out;
    }
    let mut expected = vec![
        ("complete:5", 2, bounds::COROLLARY_ALPHA_GEQ_K),
        ("complete:6", 2, bounds::COROLLARY_ALPHA_GEQ_K),
        ("complete:6", 2, bounds::MIN_DEGREE_CONDITION),
    ];
    for h in 1..=3 {
        expected.push(("hamming:2,3", h, bounds::COROLLARY_ALPHA_GEQ_K));
    }
    for (g, k, check) in expected {
        match find(report, g, k, check) {
            Some(r) if r.status == Status::Pass => {}
            other => return fail(format!("{g} k={k} {check}: expected pass, got {:?}", other.map(|r| r.status))),
        }
    }
    // hypotheses that fail must show as vacuous, never as pass
    for (g, k) in [("cycle:7", 2), ("path:6", 2)] {
        match find(report, g, k, bounds::COROLLARY_ALPHA_GEQ_K) {
            Some(r) if r.status == Status::Vacuous && r.margin.is_none() => {}
            other => return fail(format!("{g} k={k}: expected vacuous, got {:?}", other.map(|r| r.status))),
        }
    }
    let vacuous =
        named(report, &[bounds::CONDITIONAL_ALPHA]).iter().filter(|(_, r)| r.status == Status::Vacuous).count();
    ok(format!("{}; chain hypothesis vacuous on {vacuous} instances", out.detail))
}

fn determinism(first: &Report, elapsed: Duration) -> Outcome {
    let again = verify_fixtures(&options()).expect("second run");
    if first.to_json() != again.to_json() || first.to_csv().unwrap() != again.to_csv().unwrap() {
        return fail("library reports differ between runs");
    }
    let dir = tempfile::tempdir().expect("tempdir");
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("report-{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_token-spectra"))
            .args(["verify", "--fixtures", "--out"])
            .arg(&path)
            .env_remove("TOKEN_SPECTRA_CAP")
            .status()
            .expect("run token-spectra");
        if !matches!(status.code(), Some(0 | 1)) {
            return fail(format!("verify --fixtures exited with {status}"));
        }
        outputs.push(std::fs::read(&path).expect("report written"));
    }
    if outputs[0] != outputs[1] {
        return fail("`verify --fixtures` reports differ between runs");
    }
    if elapsed > WALL_CLOCK {
        return fail(format!("full battery took {elapsed:.1?}, target {WALL_CLOCK:?}"));
    }
    ok(format!("{} byte-identical JSON reports; battery {elapsed:.1?}", outputs[0].len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = verify_fixtures(&options()).expect("fixture battery runs");
    let elapsed = start.elapsed();
    let graphs: BTreeSet<&str> = report.instances.iter().map(|i| i.graph.as_str()).collect();
    println!(
        "acceptance: {} graphs, {} instances, {} records in {elapsed:.1?}",
        graphs.len(),
        report.instances.len(),
        report.records().count()
    );

    let criteria: [(&str, &dyn Fn() -> Outcome); 12] = [
        ("structure: |V| = C(n,k), |E| = C(n-2,k-1)|E(G)|", &|| structural(&report)),
        ("degree formula matches adjacency", &|| degree_formula(&report)),
        ("spectral inclusion spec(F_{k-1}) in spec(F_k)", &|| spectral_inclusion(&report)),
        ("eigenvector lift residual", &|| eigenvector_lift(&report)),
        ("embedding restriction on S_U", &|| embedding_restriction(&report)),
        ("algebraic connectivity oracle α(F_k) = α(G)", &|| oracle(&report)),
        ("new eigenvalues ≥ k[α(G) − k + 1]", &|| new_eigenvalue_bound(&report)),
        ("P/Q/R/S identity and recursions", &|| pqrs_identities(&report)),
        ("Q ≤ k·min(k−1, Δ)·S", &|| qs_bound(&report)),
        ("vertex deletion and Cartesian product", &|| fiedler(&report)),
        ("equality corollaries where hypotheses hold", &|| corollaries(&report)),
        ("determinism and wall clock", &|| determinism(&report, elapsed)),
    ];

    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("criterion {:>2} {:<50} {}  {}", n + 1, name, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if let Some(dump) = o.dump {
            println!("{dump}");
        }
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
