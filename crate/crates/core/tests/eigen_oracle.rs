//! Jacobi against nalgebra's symmetric eigensolver and against closed forms.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};

use token_spectra::fixtures::standard_fixtures;
use token_spectra::graph::{Family, Graph};
use token_spectra::spectra::{laplacian, laplacian_spectrum, Spectrum};
use token_spectra::token::TokenGraph;

fn nalgebra_values(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let l = laplacian(g);
    let m = DMatrix::from_fn(n, n, |i, j| l.get(i, j));
    let mut v: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

fn assert_eigenpairs(g: &Graph, s: &Spectrum) {
    let l = laplacian(g);
    let n = s.len();
    for i in 0..n {
        let v = s.vector(i);
        let lv = l.mul_vec(v);
        for (a, x) in lv.iter().zip(v) {
            assert!((a - s.values()[i] * x).abs() < 1e-9);
        }
        for j in i..n {
            let dot: f64 = v.iter().zip(s.vector(j)).map(|(a, b)| a * b).sum();
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((dot - want).abs() < 1e-9, "<v{i}, v{j}> = {dot}");
        }
    }
}

#[test]
fn token_graph_spectra_agree_with_nalgebra() {
    for f in standard_fixtures().iter().step_by(3) {
        for k in [1, 2] {
            if 2 * k > f.graph.order() {
                continue;
            }
            let t = TokenGraph::new(&f.graph, k).unwrap();
            let s = laplacian_spectrum(t.graph()).unwrap();
            let oracle = nalgebra_values(t.graph());
            for (a, b) in s.values().iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-9, "{} k={k}: {a} vs {b}", f.id);
            }
            assert_eigenpairs(t.graph(), &s);
        }
    }
}

#[test]
fn larger_token_graphs_agree_with_nalgebra() {
    let g = Family::Petersen.build().unwrap();
    let t = TokenGraph::new(&g, 4).unwrap();
    let s = laplacian_spectrum(t.graph()).unwrap();
    for (a, b) in s.values().iter().zip(nalgebra_values(t.graph())) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn closed_forms() {
    // paths: 2 − 2cos(πj/n); cycles: 2 − 2cos(2πj/n)
    for n in 2..10 {
        let s = laplacian_spectrum(&Family::Path(n).build().unwrap()).unwrap();
        let mut want: Vec<f64> = (0..n).map(|j| 2.0 - 2.0 * (PI * j as f64 / n as f64).cos()).collect();
        want.sort_by(f64::total_cmp);
        for (a, b) in s.values().iter().zip(&want) {
            assert!((a - b).abs() < 1e-10);
        }
    }
    for n in 3..10 {
        let s = laplacian_spectrum(&Family::Cycle(n).build().unwrap()).unwrap();
        let mut want: Vec<f64> = (0..n).map(|j| 2.0 - 2.0 * (2.0 * PI * j as f64 / n as f64).cos()).collect();
        want.sort_by(f64::total_cmp);
        for (a, b) in s.values().iter().zip(&want) {
            assert!((a - b).abs() < 1e-10);
        }
    }
    // Petersen: 0, 2^5, 5^4; H(2,3): 0, 3^4, 6^4
    let s = laplacian_spectrum(&Family::Petersen.build().unwrap()).unwrap();
    let want = [0.0, 2.0, 2.0, 2.0, 2.0, 2.0, 5.0, 5.0, 5.0, 5.0];
    assert!(s.values().iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-10));
    let s = laplacian_spectrum(&Family::Hamming { d: 2, q: 3 }.build().unwrap()).unwrap();
    let want = [0.0, 3.0, 3.0, 3.0, 3.0, 6.0, 6.0, 6.0, 6.0];
    assert!(s.values().iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-10));
}
