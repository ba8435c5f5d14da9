//! Runs the full check battery and assembles reports.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, BoundReport, BoundsError, CheckRecord, Ladder, Tolerances};
use crate::fixtures::{product_fixtures, standard_fixtures, Fixture};
use crate::graph::Graph;
use crate::spectra::DEFAULT_DENSE_CAP;
use crate::token::binomial;

/// Bumped whenever the report layout changes.
pub const REPORT_SCHEMA: u32 = 1;
pub const DEFAULT_RANDOM_VECTORS: usize = 1_000;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("k range {lo}..{hi} is outside [1, {n}]")]
    KRange { lo: usize, hi: usize, n: usize },
    #[error("F_{k} of {graph} has C({n},{k}) = {vertices} vertices, above the dense cap {cap}")]
    TooLarge { graph: String, n: usize, k: usize, vertices: usize, cap: usize },
    #[error("{graph}: {source}")]
    Bounds {
        graph: String,
        #[source]
        source: BoundsError,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub tolerances: Tolerances,
    /// Largest token graph that is solved densely.
    pub cap: usize,
    pub random_vectors: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tolerances: Tolerances::default(),
            cap: DEFAULT_DENSE_CAP,
            random_vectors: DEFAULT_RANDOM_VECTORS,
            seed: DEFAULT_SEED,
        }
    }
}

/// FNV-1a, used to derive a per-instance seed from the graph id.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn instance_seed(graph: &str, k: usize, seed: u64) -> u64 {
    fnv1a(graph) ^ k as u64 ^ seed.rotate_left(32)
}

/// Every check on `g` for each k in `ks`. Records inside an instance are
/// sorted by check name. Graph-wide checks ride on the first instance.
pub fn verify_graph(
    id: &str,
    g: &Graph,
    ks: RangeInclusive<usize>,
    opts: &VerifyOptions,
) -> Result<Vec<BoundReport>, VerifyError> {
    let n = g.order();
    let (lo, hi) = (*ks.start(), *ks.end());
    if lo == 0 || hi > n || lo > hi {
        return Err(VerifyError::KRange { lo, hi, n });
    }
    if let Some(k) = (1..=hi).find(|&k| binomial(n, k) > opts.cap) {
        return Err(VerifyError::TooLarge { graph: id.to_string(), n, k, vertices: binomial(n, k), cap: opts.cap });
    }
    let wrap = |source: BoundsError| VerifyError::Bounds { graph: id.to_string(), source };
    let tol = &opts.tolerances;
    let ladder = Ladder::new(g, hi, opts.cap, tol.matching).map_err(wrap)?;

    let mut out = Vec::new();
    for k in ks {
        let mut records = instance_records(&ladder, k, id, opts).map_err(wrap)?;
        if k == lo {
            records.push(bounds::check_fiedler_deletion(g, tol).map_err(wrap)?);
        }
        records.sort_by(|a, b| a.check.cmp(b.check));
        let new_eigenvalues = match &ladder.level(k).map_err(wrap)?.vs_base {
            Ok(c) => c.new_values(),
            Err(_) => Vec::new(),
        };
        out.push(BoundReport {
            graph: id.to_string(),
            k,
            alpha_g: ladder.alpha(),
            alpha_fk: ladder.alpha_of(k).map_err(wrap)?,
            new_eigenvalues,
            records,
        });
    }
    Ok(out)
}

fn instance_records(
    ladder: &Ladder,
    k: usize,
    id: &str,
    opts: &VerifyOptions,
) -> Result<Vec<CheckRecord>, BoundsError> {
    let tol = &opts.tolerances;
    let mut r = vec![
        bounds::check_vertex_count(ladder, k)?,
        bounds::check_edge_count(ladder, k)?,
        bounds::check_degree_formula(ladder, k)?,
        bounds::check_spectral_inclusion(ladder, k, tol)?,
        bounds::check_spectral_complement(ladder, k, tol)?,
        bounds::check_eigenvector_lift(ladder, k, tol)?,
        bounds::check_embedding_restriction(ladder, k, tol)?,
        bounds::check_embedding_single(ladder, k, tol)?,
        bounds::check_alpha_equality_oracle(ladder, k, tol)?,
        bounds::check_new_eigenvalue_bound(ladder, k, tol)?,
        bounds::check_conditional_alpha_bound(ladder, k, tol)?,
        bounds::check_corollary_alpha_geq_k(ladder, k, tol)?,
        bounds::check_min_degree_condition(ladder, k, tol)?,
        bounds::check_arnau_bound(ladder, k, tol)?,
        bounds::check_arnau_bound_new(ladder, k, tol)?,
        bounds::check_induction_bound(ladder, k, tol)?,
    ];
    r.extend(bounds::check_log_delta_bound(ladder, k, tol)?);
    let random = bounds::check_random_vectors(ladder, k, opts.random_vectors, instance_seed(id, k, opts.seed), tol)?;
    r.push(random.identity);
    r.extend(random.recursion);
    r.push(random.qs_bound);
    Ok(r)
}

/// α(G1 × G2) = min for one factor pair, as a single-record instance.
pub fn verify_product(a: &Fixture, b: &Fixture, opts: &VerifyOptions) -> Result<BoundReport, VerifyError> {
    let id = format!("{}*{}", a.id, b.id);
    let record = bounds::check_cartesian_alpha(&a.graph, &b.graph, &opts.tolerances)
        .map_err(|source| VerifyError::Bounds { graph: id.clone(), source })?;
    Ok(BoundReport {
        graph: id,
        k: 1,
        alpha_g: record.lhs,
        alpha_fk: record.lhs,
        new_eigenvalues: Vec::new(),
        records: vec![record],
    })
}

/// The whole battery over [`standard_fixtures`] and the product pairs.
/// Graphs run in parallel; the result order is the fixture order.
pub fn verify_fixtures(opts: &VerifyOptions) -> Result<Report, VerifyError> {
    let fixtures = standard_fixtures();
    let per_graph: Vec<Vec<BoundReport>> = fixtures
        .par_iter()
        .map(|f| verify_graph(&f.id, &f.graph, f.k_range(opts.cap), opts))
        .collect::<Result<_, _>>()?;
    let mut instances: Vec<BoundReport> = per_graph.into_iter().flatten().collect();
    for (a, b) in product_fixtures() {
        instances.push(verify_product(&a, &b, opts)?);
    }
    Ok(Report { instances })
}

/// Ordered collection of instance reports.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub instances: Vec<BoundReport>,
}

#[derive(Serialize)]
struct FlatRecord<'a> {
    graph: &'a str,
    k: usize,
    check: &'a str,
    status: &'a str,
    lhs: Option<f64>,
    rhs: Option<f64>,
    margin: Option<f64>,
    tol: f64,
    note: &'a str,
}

#[derive(Serialize)]
struct InstanceSummary<'a> {
    graph: &'a str,
    k: usize,
    alpha_g: Option<f64>,
    alpha_fk: Option<f64>,
    new_eigenvalues: &'a [f64],
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: u32,
    records: Vec<FlatRecord<'a>>,
    instances: Vec<InstanceSummary<'a>>,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.instances.iter().any(BoundReport::has_failures)
    }

    pub fn records(&self) -> impl Iterator<Item = (&BoundReport, &CheckRecord)> {
        self.instances.iter().flat_map(|i| i.records.iter().map(move |r| (i, r)))
    }

    pub fn failures(&self) -> impl Iterator<Item = (&BoundReport, &CheckRecord)> {
        self.records().filter(|(_, r)| r.failed())
    }

    fn flat(&self) -> Vec<FlatRecord<'_>> {
        self.records()
            .map(|(i, r)| FlatRecord {
                graph: &i.graph,
                k: i.k,
                check: r.check,
                status: r.status.as_str(),
                lhs: r.lhs,
                rhs: r.rhs,
                margin: r.margin,
                tol: r.tol,
                note: r.note.as_deref().unwrap_or(""),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let doc = JsonReport {
            schema: REPORT_SCHEMA,
            records: self.flat(),
            instances: self
                .instances
                .iter()
                .map(|i| InstanceSummary {
                    graph: &i.graph,
                    k: i.k,
                    alpha_g: i.alpha_g,
                    alpha_fk: i.alpha_fk,
                    new_eigenvalues: &i.new_eigenvalues,
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> Result<String, VerifyError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for rec in self.flat() {
            w.serialize(rec)?;
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.records() {
            let margin = r.margin.map_or("-".to_string(), |m| format!("{m:+.3e}"));
            let _ = write!(out, "{:<24} k={:<2} {:<30} {:<8} {margin}", i.graph, i.k, r.check, r.status.as_str());
            if let Some(note) = &r.note {
                let _ = write!(out, "  ({note})");
            }
            out.push('\n');
        }
        let count = |s: bounds::Status| self.records().filter(|(_, r)| r.status == s).count();
        let _ = writeln!(
            out,
            "{} records: {} pass, {} vacuous, {} FAIL",
            self.records().count(),
            count(bounds::Status::Pass),
            count(bounds::Status::Vacuous),
            count(bounds::Status::Fail)
        );
        out
    }
}
