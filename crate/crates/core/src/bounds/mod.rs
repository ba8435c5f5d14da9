//! Executable eigenvalue bounds for token graphs.
//!
//! Every check produces a [`CheckRecord`] with one of three outcomes: the
//! inequality held, its hypothesis did not apply ([`Status::Vacuous`]), or
//! it was violated. Vacuous is never reported as a pass.
//!
//! The checks read from a [`Ladder`]: the token graphs F_1(G), ..., F_K(G)
//! with their spectra and eigenvalue classifications, computed once.

mod checks;
mod ladder;
mod pqrs;

pub use checks::*;
pub use ladder::{Ladder, Level};
pub use pqrs::{pqrs, qs_bound_factor, vz_star, Pqrs, PqrsEvaluator, RecursionResiduals};

use serde::Serialize;
use thiserror::Error;

use crate::graph::GraphError;
use crate::lift::LiftError;
use crate::spectra::EigenError;
use crate::token::TokenError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("k = {k} is not available (ladder built up to {max})")]
    MissingLevel { k: usize, max: usize },
    #[error("recursion identities need k >= 2, got {0}")]
    NeedsTwoTokens(usize),
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("P/Q/R/S of the zero vector")]
    ZeroVector,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Token(#[from] TokenError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

/// Tolerances used by the check battery.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Pairing eigenvalues across levels.
    pub matching: f64,
    /// Equalities between computed algebraic connectivities.
    pub equality: f64,
    /// Margins of lower bounds.
    pub bound: f64,
    /// Relative residual of the P/Q/R/S identities.
    pub identity: f64,
    /// ‖L(G)Bᵀv − λBᵀv‖_∞ for lifted eigenvectors.
    pub lift_residual: f64,
    /// Lifts with ‖Bᵀv‖₂ at or below this are treated as zero.
    pub lift_threshold: f64,
    /// |Σ w_U| / ‖v‖ for restricted embeddings.
    pub embedding: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            matching: 1e-7,
            equality: 1e-7,
            bound: 1e-6,
            identity: 1e-9,
            lift_residual: 1e-7,
            lift_threshold: 1e-6,
            embedding: 1e-7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "vacuous")]
    Vacuous,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Vacuous => "vacuous",
            Status::Fail => "FAIL",
        }
    }
}

/// One evaluated claim. For inequalities `lhs ≥ rhs` the margin is
/// `lhs − rhs`; for equalities and residuals it is minus the discrepancy.
/// Either way the claim passes iff `margin ≥ −tol`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: &'static str,
    pub status: Status,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    /// `lhs ≥ rhs` up to `tol`.
    pub fn at_least(check: &'static str, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::from_margin(check, lhs, rhs, lhs - rhs, tol)
    }

    /// `|lhs − rhs| ≤ tol`.
    pub fn close(check: &'static str, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::from_margin(check, lhs, rhs, -(lhs - rhs).abs(), tol)
    }

    /// A residual that should vanish: reported as `lhs = residual, rhs = 0`.
    pub fn residual(check: &'static str, residual: f64, tol: f64) -> Self {
        Self::from_margin(check, residual, 0.0, -residual.abs(), tol)
    }

    fn from_margin(check: &'static str, lhs: f64, rhs: f64, margin: f64, tol: f64) -> Self {
        // adding 0.0 turns a -0.0 margin into 0.0
        let margin = margin + 0.0;
        let status = if margin >= -tol { Status::Pass } else { Status::Fail };
        CheckRecord { check, status, lhs: Some(lhs), rhs: Some(rhs), margin: Some(margin), tol, note: None }
    }

    pub fn vacuous(check: &'static str, tol: f64, why: impl Into<String>) -> Self {
        CheckRecord { check, status: Status::Vacuous, lhs: None, rhs: None, margin: None, tol, note: Some(why.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Quantities and check outcomes for one `(G, k)` instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub k: usize,
    pub alpha_g: Option<f64>,
    pub alpha_fk: Option<f64>,
    pub new_eigenvalues: Vec<f64>,
    pub records: Vec<CheckRecord>,
}

impl BoundReport {
    pub fn has_failures(&self) -> bool {
        self.records.iter().any(CheckRecord::failed)
    }

    pub fn record(&self, check: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check == check)
    }
}
