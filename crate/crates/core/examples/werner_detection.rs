// Sweeps the two-qubit Werner family with identity unitaries and compares
// the inequality against the partial-transpose test.

use std::error::Error;

use ggm_entangle::search::evaluate_identity;
use ggm_entangle::states::werner;
use ggm_entangle::witness::{ppt_check, DEFAULT_TOL};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>5} {:>10} {:>22} {:>10}",
        "a", "f", "inequality", "ppt min"
    );
    for i in 0..=10 {
        let a = i as f64 / 10.0;
        let rho = werner(a)?;
        let report = evaluate_identity(&rho, None, DEFAULT_TOL)?;
        let ppt = ppt_check(&rho)?;
        println!(
            "{a:>5.2} {:>10.6} {:>22} {:>10.6}",
            report.best_f,
            report.inequality_verdict.to_string(),
            ppt.min_eigenvalue
        );
        let closed = (1.0 + a) * (3.0 * a - 1.0) / 4.0;
        assert!((report.best_f - closed).abs() < 1e-12);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
