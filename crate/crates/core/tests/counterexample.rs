//! F_3(K_6): eigenvalues absent from spec(K_6) that sit below
//! k[α(G) − k + 1], checked against the closed-form Johnson spectrum.

use token_spectra::bounds::{self, Ladder, Status, Tolerances};
use token_spectra::graph::Family;
use token_spectra::lift::{restrict, BinomialMatrix};
use token_spectra::spectra::norm;
use token_spectra::token::{binomial, elements_of, KSubsetIndex};

/// Laplacian spectrum of J(n,k) = F_k(K_n): i(n+1−i) with multiplicity
/// C(n,i) − C(n,i−1), i = 0..=min(k, n−k).
fn johnson_spectrum(n: usize, k: usize) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 0..=k.min(n - k) {
        let mult = binomial(n, i) - if i > 0 { binomial(n, i - 1) } else { 0 };
        out.extend(std::iter::repeat_n((i * (n + 1 - i)) as f64, mult));
    }
    out
}

fn ladder(n: usize, k: usize) -> Ladder {
    Ladder::new(&Family::Complete(n).build().unwrap(), k, 3_000, 1e-7).unwrap()
}

#[test]
fn jacobi_matches_johnson_closed_form() {
    for (n, k) in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 4)] {
        let l = ladder(n, k);
        let got = l.level(k).unwrap().spectrum.values();
        let want = johnson_spectrum(n, k);
        assert_eq!(got.len(), want.len());
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() < 1e-9, "J({n},{k}): {a} vs {b}");
        }
    }
}

#[test]
fn new_eigenvalue_bound_fails_on_johnson_graphs() {
    // new eigenvalue 2(n−1) against bound k(n−k+1); the gap is (k−2)(n−k−1)
    let t = Tolerances::default();
    for (n, k) in [(6, 3), (7, 3), (8, 4)] {
        let l = ladder(n, k);
        let r = bounds::check_new_eigenvalue_bound(&l, k, &t).unwrap();
        assert_eq!(r.status, Status::Fail, "J({n},{k})");
        assert!((r.lhs.unwrap() - 2.0 * (n as f64 - 1.0)).abs() < 1e-9);
        assert!((r.rhs.unwrap() - (k * (n - k + 1)) as f64).abs() < 1e-12);
        assert!((r.margin.unwrap() + ((k - 2) * (n - k - 1)) as f64).abs() < 1e-9);
    }
    // k = 2 is tight instead
    let l = ladder(6, 2);
    let r = bounds::check_new_eigenvalue_bound(&l, 2, &t).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.margin.unwrap().abs() < 1e-9);
}

#[test]
fn bound_holds_against_previous_level() {
    let t = Tolerances::default();
    for (n, k) in [(6, 3), (7, 3), (8, 4)] {
        let l = ladder(n, k);
        let r = bounds::check_induction_bound(&l, k, &t).unwrap();
        assert_eq!(r.status, Status::Pass, "J({n},{k})");
        // only the top Johnson eigenvalue k(n+1−k) is new against F_{k−1}
        assert!((r.lhs.unwrap() - (k * (n + 1 - k)) as f64).abs() < 1e-9);
    }
}

#[test]
fn g_new_vectors_are_not_embeddings_on_pairs() {
    let (n, k) = (6, 3);
    let l = ladder(n, k);
    let level = l.level(k).unwrap();
    let new = &level.vs_base.as_ref().unwrap().new;
    let tens: Vec<_> = new.iter().filter(|e| (e.value - 10.0).abs() < 1e-7).collect();
    assert_eq!(tens.len(), 9);

    let b = BinomialMatrix::new(n, k).unwrap();
    let pairs = KSubsetIndex::new(n, 2).unwrap();
    let mut worst_single: f64 = 0.0;
    let mut worst_pair: f64 = 0.0;
    for e in &tens {
        assert!(norm(&b.project(&e.vector).unwrap()) < 1e-9);
        for x in 1..=n {
            let ranks = level.token.subsets_containing(&[x]).unwrap();
            worst_single = worst_single.max(restrict(&e.vector, &ranks).iter().sum::<f64>().abs());
        }
        for &u in pairs.masks() {
            let ranks = level.token.subsets_containing(&elements_of(u)).unwrap();
            worst_pair = worst_pair.max(restrict(&e.vector, &ranks).iter().sum::<f64>().abs());
        }
    }
    assert!(worst_single < 1e-9, "{worst_single}");
    assert!(worst_pair > 1e-2, "{worst_pair}");

    // the representatives that are new against F_2 restrict to embeddings
    let r = bounds::check_embedding_restriction(&l, k, &Tolerances::default()).unwrap();
    assert_eq!(r.status, Status::Pass);
}
