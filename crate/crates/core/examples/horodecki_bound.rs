// The 3x3 Horodecki family: PPT below alpha = 4, and the rotated
// inequality fires exactly above it.

use std::error::Error;
use std::f64::consts::PI;

use ggm_entangle::search::{linspace, scan_1d, StateFamily};
use ggm_entangle::states::horodecki33;
use ggm_entangle::witness::ppt_check;
use ggm_entangle::LevelPair;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alphas = linspace(3.0, 5.0, 9)?;
    let p = linspace(0.0, PI, 181)?;
    let rows = scan_1d(
        StateFamily::Horodecki33,
        &alphas,
        &p,
        LevelPair { j: 1, k: 2 },
    )?;
    println!(
        "{:>6} {:>12} {:>8} {:>13}",
        "alpha", "max_p f", "at p", "ppt min"
    );
    for (i, &alpha) in alphas.iter().enumerate() {
        let best = rows[i * p.len()..(i + 1) * p.len()]
            .iter()
            .max_by(|x, y| x.f.total_cmp(&y.f))
            .expect("non-empty grid");
        let ppt = ppt_check(&horodecki33(alpha)?)?;
        println!(
            "{alpha:>6.2} {:>12.3e} {:>8.4} {:>13.3e}",
            best.f, best.p, ppt.min_eigenvalue
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
