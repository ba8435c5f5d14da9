//! Runs every check over the standard fixture set and prints a summary,
//! plus any failing record.
//!
//! cargo run --release --example verify_fixtures

use std::time::Instant;

use token_spectra::bounds::{Status, NEW_EIGENVALUE_BOUND};
use token_spectra::verify::{verify_fixtures, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Instant::now();
    let report = verify_fixtures(&VerifyOptions::default())?;
    let count = |s: Status| report.records().filter(|(_, r)| r.status == s).count();
    println!(
        "{} instances, {} records: {} pass, {} vacuous, {} FAIL in {:.1?}",
        report.instances.len(),
        report.records().count(),
        count(Status::Pass),
        count(Status::Vacuous),
        count(Status::Fail),
        start.elapsed()
    );

    let tightest = report
        .records()
        .filter(|(_, r)| r.check == NEW_EIGENVALUE_BOUND)
        .filter_map(|(i, r)| r.margin.map(|m| (m, &i.graph, i.k)))
        .min_by(|a, b| a.0.total_cmp(&b.0));
    if let Some((m, g, k)) = tightest {
        println!("tightest new-eigenvalue margin: {m:.3e} on {g}, k = {k}");
    }

    for (i, r) in report.failures() {
        println!("FAIL {} k={} {} lhs={:?} rhs={:?} {:?}", i.graph, i.k, r.check, r.lhs, r.rhs, r.note);
    }
    Ok(())
}
