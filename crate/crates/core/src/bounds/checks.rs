use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::lift::{spectral_inclusion_check, BinomialMatrix, NewEigenvalue};
use crate::spectra::{algebraic_connectivity, laplacian, norm};
use crate::token::{binomial, elements_of, token_degree_mask, KSubsetIndex};

use super::pqrs::{qs_bound_factor, PqrsEvaluator, RecursionResiduals};
use super::{BoundsError, CheckRecord, Ladder, Tolerances};

pub const STRUCTURE_VERTICES: &str = "structure_vertices";
pub const STRUCTURE_EDGES: &str = "structure_edges";
pub const DEGREE_FORMULA: &str = "degree_formula";
pub const SPECTRAL_INCLUSION: &str = "spectral_inclusion";
pub const SPECTRAL_COMPLEMENT: &str = "spectral_complement";
pub const EIGENVECTOR_LIFT: &str = "eigenvector_lift";
pub const EMBEDDING_RESTRICTION: &str = "embedding_restriction";
pub const EMBEDDING_SINGLE: &str = "embedding_restriction_single";
pub const ALPHA_ORACLE: &str = "alpha_equality_oracle";
pub const NEW_EIGENVALUE_BOUND: &str = "new_eigenvalue_bound";
pub const CONDITIONAL_ALPHA: &str = "conditional_alpha_bound";
pub const COROLLARY_ALPHA_GEQ_K: &str = "corollary_alpha_geq_k";
pub const MIN_DEGREE_CONDITION: &str = "min_degree_condition";
pub const PQRS_IDENTITY: &str = "pqrs_identity";
pub const RECURSION_P: &str = "pqrs_recursion_p";
pub const RECURSION_Q: &str = "pqrs_recursion_q";
pub const RECURSION_R: &str = "pqrs_recursion_r";
pub const RECURSION_S: &str = "pqrs_recursion_s";
pub const RAYLEIGH_SPLIT: &str = "rayleigh_split";
pub const QS_BOUND: &str = "qs_bound";
pub const ARNAU_BOUND: &str = "arnau_bound";
pub const ARNAU_NEW: &str = "arnau_bound_new_eigenvalues";
pub const INDUCTION_BOUND: &str = "induction_bound";
pub const LOG_DELTA_HARMONIC: &str = "log_delta_bound_harmonic";
pub const LOG_DELTA_LOG: &str = "log_delta_bound_log";
pub const FIEDLER_DELETION: &str = "fiedler_vertex_deletion";
pub const CARTESIAN_ALPHA: &str = "cartesian_alpha_min";

/// |V(F_k)| = C(n,k).
pub fn check_vertex_count(ladder: &Ladder, k: usize) -> Result<CheckRecord, BoundsError> {
    let n = ladder.graph().order();
    let got = ladder.level(k)?.token.graph().order();
    Ok(CheckRecord::close(STRUCTURE_VERTICES, got as f64, binomial(n, k) as f64, 0.0))
}

/// |E(F_k)| = C(n−2, k−1)·|E(G)|.
pub fn check_edge_count(ladder: &Ladder, k: usize) -> Result<CheckRecord, BoundsError> {
    let g = ladder.graph();
    let got = ladder.level(k)?.token.graph().size();
    let want = if g.order() >= 2 { binomial(g.order() - 2, k - 1) * g.size() } else { 0 };
    Ok(CheckRecord::close(STRUCTURE_EDGES, got as f64, want as f64, 0.0))
}

/// d_X from the subset formula against the constructed adjacency, every X.
pub fn check_degree_formula(ladder: &Ladder, k: usize) -> Result<CheckRecord, BoundsError> {
    let level = ladder.level(k)?;
    let worst = level
        .token
        .index()
        .masks()
        .iter()
        .enumerate()
        .map(|(rank, &mask)| {
            let formula = token_degree_mask(ladder.graph(), mask) as f64;
            (formula - level.token.graph().degree(rank) as f64).abs()
        })
        .fold(0.0, f64::max);
    Ok(CheckRecord::residual(DEGREE_FORMULA, worst, 0.0))
}

/// spec(F_{k−1}) ⊆ spec(F_k) as multisets, for 2 ≤ k ≤ ⌊n/2⌋.
pub fn check_spectral_inclusion(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let n = ladder.graph().order();
    if k < 2 {
        return Ok(CheckRecord::vacuous(SPECTRAL_INCLUSION, tol.matching, "needs k >= 2"));
    }
    if k > n / 2 {
        return Ok(CheckRecord::vacuous(SPECTRAL_INCLUSION, tol.matching, "k > n/2: chain not asserted"));
    }
    let small = ladder.level(k - 1)?.spectrum.values();
    let large = ladder.level(k)?.spectrum.values();
    let m = spectral_inclusion_check(small, large, tol.matching)?;
    Ok(match m.failed_at {
        None => CheckRecord::residual(SPECTRAL_INCLUSION, m.max_gap, tol.matching),
        Some((i, value)) => CheckRecord::residual(SPECTRAL_INCLUSION, f64::INFINITY, tol.matching)
            .with_note(format!("eigenvalue {value} (index {i}) of F_{} unmatched", k - 1)),
    })
}

/// For k > n/2: spec(F_k) = spec(F_{n−k}), via complementation of subsets.
pub fn check_spectral_complement(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let n = ladder.graph().order();
    if 2 * k <= n || k >= n {
        return Ok(CheckRecord::vacuous(SPECTRAL_COMPLEMENT, tol.matching, "needs n/2 < k < n"));
    }
    let mirror = ladder.level(n - k)?.spectrum.values();
    let here = ladder.level(k)?.spectrum.values();
    let worst = mirror
        .iter()
        .zip(here)
        .map(|(a, b)| (a - b).abs())
        .fold(if mirror.len() == here.len() { 0.0 } else { f64::INFINITY }, f64::max);
    Ok(CheckRecord::residual(SPECTRAL_COMPLEMENT, worst, tol.matching))
}

/// Every eigenpair (λ, v) of F_k with ‖Bᵀv‖ above threshold lifts to a
/// λ-eigenvector of G.
pub fn check_eigenvector_lift(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let g = ladder.graph();
    let level = ladder.level(k)?;
    let b = BinomialMatrix::new(g.order(), k)?;
    let lg = laplacian(g);
    let mut worst: f64 = 0.0;
    let mut lifted = 0;
    for (i, &lambda) in level.spectrum.values().iter().enumerate() {
        let p = b.project(level.spectrum.vector(i))?;
        if norm(&p) <= tol.lift_threshold {
            continue;
        }
        lifted += 1;
        let lp = lg.mul_vec(&p);
        for (a, x) in lp.iter().zip(&p) {
            worst = worst.max((a - lambda * x).abs());
        }
    }
    Ok(CheckRecord::residual(EIGENVECTOR_LIFT, worst, tol.lift_residual)
        .with_note(format!("{lifted} of {} eigenpairs lift", level.spectrum.len())))
}

/// Largest |Σ_{X ⊇ U} v(X)| / ‖v‖ over the given representatives and all
/// fixed sets with |U| ≤ max_fixed, enumerating S_U explicitly.
fn worst_restricted_sum(
    ladder: &Ladder,
    k: usize,
    reps: &[NewEigenvalue],
    max_fixed: usize,
) -> Result<f64, BoundsError> {
    let level = ladder.level(k)?;
    let n = ladder.graph().order();
    let masks = level.token.index().masks();
    let mut worst: f64 = 0.0;
    for j in 0..=max_fixed {
        let fixed = KSubsetIndex::new(n, j)?;
        for &u in fixed.masks() {
            let ranks = level.token.subsets_containing(&elements_of(u))?;
            debug_assert!(ranks.iter().all(|&r| masks[r] & u == u));
            for rep in reps {
                let w = crate::lift::restrict(&rep.vector, &ranks);
                let sum: f64 = w.iter().sum();
                worst = worst.max(sum.abs() / norm(&rep.vector));
            }
        }
    }
    Ok(worst)
}

/// Eigenvectors of F_k orthogonal to everything lifted from F_{k−1}
/// restrict to embeddings of H_U for every |U| ≤ k − 1.
pub fn check_embedding_restriction(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let level = ladder.level(k)?;
    let reps = match &level.vs_previous {
        Some(Ok(c)) if !c.new.is_empty() => &c.new,
        Some(Ok(_)) => {
            return Ok(CheckRecord::vacuous(EMBEDDING_RESTRICTION, tol.embedding, "no eigenvalues new at this level"))
        }
        Some(Err(e)) => {
            return Ok(CheckRecord::vacuous(
                EMBEDDING_RESTRICTION,
                tol.embedding,
                format!("no classification against F_{}: {e}", k - 1),
            ))
        }
        None => return Ok(CheckRecord::vacuous(EMBEDDING_RESTRICTION, tol.embedding, "needs k >= 2")),
    };
    let worst = worst_restricted_sum(ladder, k, reps, k - 1)?;
    Ok(CheckRecord::residual(EMBEDDING_RESTRICTION, worst, tol.embedding).with_note(format!(
        "{} representatives, |U| <= {}",
        reps.len(),
        k - 1
    )))
}

/// Eigenvectors with Bᵀv = 0 (new against G) restrict to embeddings on
/// every S_x. Larger fixed sets need novelty against F_{|U|}, see
/// [`check_embedding_restriction`].
pub fn check_embedding_single(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let level = ladder.level(k)?;
    let reps = match &level.vs_base {
        Ok(c) if !c.new.is_empty() && k >= 2 => &c.new,
        Ok(_) => return Ok(CheckRecord::vacuous(EMBEDDING_SINGLE, tol.embedding, "no eigenvalues new against G")),
        Err(e) => {
            return Ok(CheckRecord::vacuous(
                EMBEDDING_SINGLE,
                tol.embedding,
                format!("no classification against G: {e}"),
            ))
        }
    };
    let worst = worst_restricted_sum(ladder, k, reps, 1)?;
    Ok(CheckRecord::residual(EMBEDDING_SINGLE, worst, tol.embedding)
        .with_note(format!("{} representatives, |U| <= 1", reps.len())))
}

/// α(F_k(G)) = α(G) on connected G.
pub fn check_alpha_equality_oracle(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    if !ladder.graph().is_connected() {
        return Ok(CheckRecord::vacuous(ALPHA_ORACLE, tol.equality, "G is disconnected"));
    }
    match (ladder.alpha_of(k)?, ladder.alpha()) {
        (Some(fk), Some(g)) => Ok(CheckRecord::close(ALPHA_ORACLE, fk, g, tol.equality)),
        _ => Ok(CheckRecord::vacuous(ALPHA_ORACLE, tol.equality, "F_k(G) has a single vertex")),
    }
}

fn min_value(eigs: &[NewEigenvalue]) -> Option<f64> {
    eigs.iter().map(|e| e.value).min_by(f64::total_cmp)
}

/// Every eigenvalue of F_k(G) not in spec(G) is at least k[α(G) − k + 1].
pub fn check_new_eigenvalue_bound(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let level = ladder.level(k)?;
    let Some(alpha) = ladder.alpha() else {
        return Ok(CheckRecord::vacuous(NEW_EIGENVALUE_BOUND, tol.bound, "G has a single vertex"));
    };
    let new = match &level.vs_base {
        Ok(c) => &c.new,
        Err(e) => {
            return Ok(CheckRecord::vacuous(
                NEW_EIGENVALUE_BOUND,
                tol.bound,
                format!("no classification against G: {e}"),
            ))
        }
    };
    let Some(lowest) = min_value(new) else {
        return Ok(CheckRecord::vacuous(NEW_EIGENVALUE_BOUND, tol.bound, "no new eigenvalues"));
    };
    let kf = k as f64;
    Ok(CheckRecord::at_least(NEW_EIGENVALUE_BOUND, lowest, kf * (alpha - kf + 1.0), tol.bound))
}

/// The conditional bound as a predicate over a sequence
/// `alphas = [α(G), α(F_2), ..., α(F_k)]`: if the sequence strictly
/// decreases (gaps above `strict`), then α(F_k) ≥ k[α(G) − k + 1].
pub fn conditional_alpha_bound(alphas: &[f64], strict: f64, tol: f64) -> CheckRecord {
    let k = alphas.len();
    if k < 2 {
        return CheckRecord::vacuous(CONDITIONAL_ALPHA, tol, "needs k >= 2");
    }
    if let Some(h) = alphas.windows(2).position(|w| w[0] - w[1] <= strict) {
        return CheckRecord::vacuous(
            CONDITIONAL_ALPHA,
            tol,
            format!("chain not strict: α(F_{}) ≤ α(F_{}) + {strict:e}", h + 2, h + 1),
        );
    }
    let kf = k as f64;
    CheckRecord::at_least(CONDITIONAL_ALPHA, alphas[k - 1], kf * (alphas[0] - kf + 1.0), tol)
}

pub fn check_conditional_alpha_bound(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let mut alphas = Vec::with_capacity(k);
    for h in 1..=k {
        match ladder.alpha_of(h)? {
            Some(a) => alphas.push(a),
            None => {
                return Ok(CheckRecord::vacuous(CONDITIONAL_ALPHA, tol.bound, format!("F_{h}(G) has a single vertex")))
            }
        }
    }
    Ok(conditional_alpha_bound(&alphas, tol.matching, tol.bound))
}

/// max_{h ≤ k} |α(F_h) − α(G)|, over levels with at least two vertices.
fn worst_alpha_gap(ladder: &Ladder, k: usize) -> Result<f64, BoundsError> {
    let alpha = ladder.alpha().unwrap_or(0.0);
    let mut worst: f64 = 0.0;
    for h in 1..=k {
        if let Some(a) = ladder.alpha_of(h)? {
            worst = worst.max((a - alpha).abs());
        }
    }
    Ok(worst)
}

/// α(G) ≥ k ⇒ α(F_h(G)) = α(G) for all h ≤ k.
pub fn check_corollary_alpha_geq_k(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let alpha = ladder.alpha().unwrap_or(0.0);
    if alpha < k as f64 - tol.equality {
        return Ok(CheckRecord::vacuous(COROLLARY_ALPHA_GEQ_K, tol.equality, format!("α(G) = {alpha:.6} < k")));
    }
    let worst = worst_alpha_gap(ladder, k)?;
    Ok(CheckRecord::residual(COROLLARY_ALPHA_GEQ_K, worst, tol.equality)
        .with_note(format!("α(G) = {alpha:.6} >= {k}; all h <= {k}")))
}

/// δ(G) ≥ k(n+k−3)/(2k−1) with k ≤ ⌊n/2⌋ ⇒ α(F_h(G)) = α(G) for h ≤ k.
/// The hypothesis is decided in integers.
pub fn check_min_degree_condition(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let g = ladder.graph();
    let n = g.order();
    if k == 0 || k > n / 2 {
        return Ok(CheckRecord::vacuous(MIN_DEGREE_CONDITION, tol.equality, "needs 1 <= k <= n/2"));
    }
    let delta = g.min_degree();
    if delta * (2 * k - 1) < k * (n + k - 3) {
        return Ok(CheckRecord::vacuous(
            MIN_DEGREE_CONDITION,
            tol.equality,
            format!("δ = {delta} < {k}({n}+{k}-3)/{}", 2 * k - 1),
        ));
    }
    let worst = worst_alpha_gap(ladder, k)?;
    Ok(CheckRecord::residual(MIN_DEGREE_CONDITION, worst, tol.equality))
}

/// Seeded uniform vectors in [−1, 1)^len.
pub fn random_vectors(seed: u64, len: usize, count: usize) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect()
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Results of the random-vector checks on one `(G, k)`.
#[derive(Debug, Clone)]
pub struct RandomVectorChecks {
    pub identity: CheckRecord,
    pub recursion: Vec<CheckRecord>,
    pub qs_bound: CheckRecord,
}

/// The identity (P−Q−R)/S = vᵀL_kv/vᵀv, the recursion identities and the
/// Q ≤ k·min{k−1,Δ}·S bound, over `count` seeded random vectors plus the
/// constant vector.
pub fn check_random_vectors(
    ladder: &Ladder,
    k: usize,
    count: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<RandomVectorChecks, BoundsError> {
    let g = ladder.graph();
    let level = ladder.level(k)?;
    let lk = laplacian(level.token.graph());
    let upper = PqrsEvaluator::new(g, k)?;
    let lower = if k >= 2 { Some(PqrsEvaluator::new(g, k - 1)?) } else { None };

    let mut vectors = random_vectors(seed, upper.len(), count);
    vectors.push(vec![1.0; upper.len()]);

    let mut identity: f64 = 0.0;
    let mut rec = [0.0f64; 5];
    let factor = qs_bound_factor(g, k);
    let mut worst_ratio = f64::NEG_INFINITY;
    for v in &vectors {
        let x = upper.eval(v)?;
        let direct = lk.quadratic_form(v) / x.s;
        identity = identity.max((x.rayleigh() - direct).abs() / direct.abs().max(1.0));
        worst_ratio = worst_ratio.max(x.q / x.s);
        if let Some(lower) = &lower {
            let r = RecursionResiduals::compute(&upper, lower, v)?;
            rec[0] = rec[0].max(relative(r.p.0, r.p.1));
            if let Some(q) = r.q {
                rec[1] = rec[1].max(relative(q.0, q.1));
            }
            rec[2] = rec[2].max(relative(r.r.0, r.r.1));
            rec[3] = rec[3].max(relative(r.s.0, r.s.1));
            rec[4] = rec[4].max(relative(r.split.0, r.split.1));
        }
    }

    let n_vec = vectors.len();
    let identity = CheckRecord::residual(PQRS_IDENTITY, identity, tol.identity).with_note(format!("{n_vec} vectors"));
    let recursion = if lower.is_some() {
        let q = if k > 2 {
            CheckRecord::residual(RECURSION_Q, rec[1], tol.identity)
        } else {
            CheckRecord::vacuous(RECURSION_Q, tol.identity, "Q recursion needs k > 2")
        };
        vec![
            CheckRecord::residual(RECURSION_P, rec[0], tol.identity),
            q,
            CheckRecord::residual(RECURSION_R, rec[2], tol.identity),
            CheckRecord::residual(RECURSION_S, rec[3], tol.identity),
            CheckRecord::residual(RAYLEIGH_SPLIT, rec[4], tol.identity),
        ]
    } else {
        [RECURSION_P, RECURSION_Q, RECURSION_R, RECURSION_S, RAYLEIGH_SPLIT]
            .into_iter()
            .map(|c| CheckRecord::vacuous(c, tol.identity, "recursion needs k >= 2"))
            .collect()
    };
    // Q/S ≤ factor, as factor − max Q/S ≥ 0
    let qs_bound = CheckRecord::at_least(QS_BOUND, factor, worst_ratio, tol.identity * factor.max(1.0));
    Ok(RandomVectorChecks { identity, recursion, qs_bound })
}

/// Right-hand side of the level-to-level bound:
/// `k/(k−1)·α(F_{k−1}) − k/(k−2)·min{k−2, Δ}` for k > 2, `2α(G) − 2` for k = 2.
pub fn arnau_rhs(k: usize, alpha_prev: f64, alpha_g: f64, max_degree: usize) -> f64 {
    let kf = k as f64;
    if k == 2 {
        2.0 * alpha_g - 2.0
    } else {
        kf / (kf - 1.0) * alpha_prev - kf / (kf - 2.0) * (k - 2).min(max_degree) as f64
    }
}

fn previous_classification<'a>(
    ladder: &'a Ladder,
    k: usize,
    check: &'static str,
    tol: f64,
) -> Result<Result<&'a [NewEigenvalue], CheckRecord>, BoundsError> {
    let level = ladder.level(k)?;
    Ok(match &level.vs_previous {
        None => Err(CheckRecord::vacuous(check, tol, "needs k >= 2")),
        Some(Err(e)) => Err(CheckRecord::vacuous(check, tol, format!("no classification against F_{}: {e}", k - 1))),
        Some(Ok(c)) => Ok(&c.new),
    })
}

/// If α(F_k) is not an eigenvalue of F_{k−1}, then α(F_k) ≥ [`arnau_rhs`].
pub fn check_arnau_bound(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    if k < 2 {
        return Ok(CheckRecord::vacuous(ARNAU_BOUND, tol.bound, "needs k >= 2"));
    }
    let (Some(alpha_k), Some(alpha_prev), Some(alpha_g)) =
        (ladder.alpha_of(k)?, ladder.alpha_of(k - 1)?, ladder.alpha())
    else {
        return Ok(CheckRecord::vacuous(ARNAU_BOUND, tol.bound, "a level has a single vertex"));
    };
    let prev = ladder.level(k - 1)?.spectrum.values();
    if prev.iter().any(|&mu| (mu - alpha_k).abs() <= tol.matching) {
        return Ok(CheckRecord::vacuous(ARNAU_BOUND, tol.bound, format!("α(F_{k}) is an eigenvalue of F_{}", k - 1)));
    }
    let rhs = arnau_rhs(k, alpha_prev, alpha_g, ladder.graph().max_degree());
    Ok(CheckRecord::at_least(ARNAU_BOUND, alpha_k, rhs, tol.bound))
}

/// Same bound for each eigenvalue of F_k absent from F_{k−1}.
pub fn check_arnau_bound_new(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let new = match previous_classification(ladder, k, ARNAU_NEW, tol.bound)? {
        Ok(new) => new,
        Err(vacuous) => return Ok(vacuous),
    };
    let (Some(alpha_prev), Some(alpha_g)) = (ladder.alpha_of(k - 1)?, ladder.alpha()) else {
        return Ok(CheckRecord::vacuous(ARNAU_NEW, tol.bound, "a level has a single vertex"));
    };
    let Some(lowest) = min_value(new) else {
        return Ok(CheckRecord::vacuous(ARNAU_NEW, tol.bound, "no eigenvalues new at this level"));
    };
    let rhs = arnau_rhs(k, alpha_prev, alpha_g, ladder.graph().max_degree());
    Ok(CheckRecord::at_least(ARNAU_NEW, lowest, rhs, tol.bound))
}

/// Each eigenvalue of F_k absent from F_{k−1} is at least kα(G) − k(k−1).
pub fn check_induction_bound(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let new = match previous_classification(ladder, k, INDUCTION_BOUND, tol.bound)? {
        Ok(new) => new,
        Err(vacuous) => return Ok(vacuous),
    };
    let Some(lowest) = min_value(new) else {
        return Ok(CheckRecord::vacuous(INDUCTION_BOUND, tol.bound, "no eigenvalues new at this level"));
    };
    let kf = k as f64;
    let alpha = ladder.alpha().unwrap_or(0.0);
    Ok(CheckRecord::at_least(INDUCTION_BOUND, lowest, kf * alpha - kf * (kf - 1.0), tol.bound))
}

/// `kα − kΔ(1 + Σ_{r=Δ}^{k−2} 1/r)`; `None` unless k > 2 and 1 ≤ Δ ≤ k − 2.
pub fn log_delta_harmonic_rhs(k: usize, alpha: f64, max_degree: usize) -> Option<f64> {
    if k <= 2 || max_degree == 0 || max_degree > k - 2 {
        return None;
    }
    let (kf, d) = (k as f64, max_degree as f64);
    let harmonic: f64 = (max_degree..=k - 2).map(|r| 1.0 / r as f64).sum();
    Some(kf * alpha - kf * d * (1.0 + harmonic))
}

/// `kα − kΔ(1 + ln((k−1)/Δ))`, same applicability as the harmonic form.
///
/// Since Σ_{r=Δ}^{k−2} 1/r ≥ ln((k−1)/Δ), this is never below the harmonic
/// right-hand side.
pub fn log_delta_log_rhs(k: usize, alpha: f64, max_degree: usize) -> Option<f64> {
    log_delta_harmonic_rhs(k, alpha, max_degree)?;
    let (kf, d) = (k as f64, max_degree as f64);
    Some(kf * alpha - kf * d * (1.0 + ((kf - 1.0) / d).ln()))
}

/// Both forms of the max-degree bound, against every eigenvalue of F_k absent
/// from F_{k−1} and against α(F_k).
pub fn check_log_delta_bound(ladder: &Ladder, k: usize, tol: &Tolerances) -> Result<[CheckRecord; 2], BoundsError> {
    let delta = ladder.graph().max_degree();
    let alpha = ladder.alpha().unwrap_or(0.0);
    let (Some(harmonic), Some(log)) = (log_delta_harmonic_rhs(k, alpha, delta), log_delta_log_rhs(k, alpha, delta))
    else {
        let why = format!("needs k > 2 and 1 <= Δ <= k - 2 (Δ = {delta}, k = {k})");
        return Ok([
            CheckRecord::vacuous(LOG_DELTA_HARMONIC, tol.bound, why.clone()),
            CheckRecord::vacuous(LOG_DELTA_LOG, tol.bound, why),
        ]);
    };
    let mut candidates: Vec<f64> = match previous_classification(ladder, k, LOG_DELTA_HARMONIC, tol.bound)? {
        Ok(new) => new.iter().map(|e| e.value).collect(),
        Err(_) => Vec::new(),
    };
    candidates.extend(ladder.alpha_of(k)?);
    let Some(lowest) = candidates.into_iter().min_by(f64::total_cmp) else {
        let why = "nothing to bound";
        return Ok([
            CheckRecord::vacuous(LOG_DELTA_HARMONIC, tol.bound, why),
            CheckRecord::vacuous(LOG_DELTA_LOG, tol.bound, why),
        ]);
    };
    Ok([
        CheckRecord::at_least(LOG_DELTA_HARMONIC, lowest, harmonic, tol.bound),
        CheckRecord::at_least(LOG_DELTA_LOG, lowest, log, tol.bound),
    ])
}

/// α(G − x) ≥ α(G) − 1 for every vertex x.
pub fn check_fiedler_deletion(g: &Graph, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    if g.order() < 3 {
        return Ok(CheckRecord::vacuous(FIEDLER_DELETION, tol.equality, "needs n >= 3"));
    }
    let alpha = algebraic_connectivity(g)?;
    let mut lowest = f64::INFINITY;
    for x in 1..=g.order() {
        let rest = g.delete_vertices(&[x])?;
        lowest = lowest.min(algebraic_connectivity(&rest.graph)?);
    }
    Ok(CheckRecord::at_least(FIEDLER_DELETION, lowest, alpha - 1.0, tol.equality))
}

/// α(G1 × G2) = min{α(G1), α(G2)}.
pub fn check_cartesian_alpha(g1: &Graph, g2: &Graph, tol: &Tolerances) -> Result<CheckRecord, BoundsError> {
    let product = algebraic_connectivity(&g1.cartesian_product(g2))?;
    let expected = algebraic_connectivity(g1)?.min(algebraic_connectivity(g2)?);
    Ok(CheckRecord::close(CARTESIAN_ALPHA, product, expected, tol.equality))
}
