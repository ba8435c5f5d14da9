//! Lower bounds on the eigenvalues of F_k(G) that G does not have.
//! K_4 at k = 2 meets k[α − k + 1] exactly; K_6 at k = 3 falls below it,
//! while the same right-hand side holds for eigenvalues absent from F_{k−1}.
//!
//! cargo run --example new_eigenvalue_bounds

use token_spectra::bounds::{self, CheckRecord, Ladder, Tolerances};
use token_spectra::graph::Family;

fn show(r: &CheckRecord) {
    println!(
        "  {:<28} {:<8} lhs {:>10} rhs {:>10} margin {:>10}",
        r.check,
        r.status.as_str(),
        fmt(r.lhs),
        fmt(r.rhs),
        fmt(r.margin)
    );
}

fn fmt(x: Option<f64>) -> String {
    x.map_or("-".into(), |v| format!("{v:.6}"))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Tolerances::default();
    for (family, k) in [(Family::Complete(4), 2), (Family::Cycle(8), 3), (Family::Complete(6), 3)] {
        let ladder = Ladder::new(&family.build()?, k, 3_000, t.matching)?;
        println!("{family}, k = {k}, α(G) = {:.6}", ladder.alpha().unwrap_or(0.0));
        show(&bounds::check_new_eigenvalue_bound(&ladder, k, &t)?);
        show(&bounds::check_induction_bound(&ladder, k, &t)?);
        show(&bounds::check_arnau_bound_new(&ladder, k, &t)?);
        show(&bounds::check_conditional_alpha_bound(&ladder, k, &t)?);
    }
    Ok(())
}
