// Partial-transpose spectra of random, separable and pure states.

use std::error::Error;

use ggm_entangle::linalg::{partial_transpose_b, BipartiteShape};
use ggm_entangle::states::{random_density, random_separable, schmidt_pure, spectrum};
use ggm_entangle::witness::ppt_check;
use ggm_entangle::DensityMatrix;

fn show(name: &str, rho: &DensityMatrix) -> Result<(), Box<dyn Error>> {
    let ppt = ppt_check(rho)?;
    let pt = DensityMatrix::new(rho.shape(), partial_transpose_b(rho.matrix(), rho.shape())?);
    println!(
        "{name:<18} {} min(PT) = {:>10.3e}  {}  (PT is {}a state)",
        rho.shape(),
        ppt.min_eigenvalue,
        ppt.verdict,
        if pt.is_ok() { "" } else { "not " }
    );
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s23 = BipartiteShape::new(2, 3)?;
    let s33 = BipartiteShape::new(3, 3)?;
    show("random 2x3", &random_density(s23, 1)?)?;
    show("separable 2x3", &random_separable(s23, 6, 1)?.0)?;
    show("separable 3x3", &random_separable(s33, 6, 2)?.0)?;
    show("schmidt 0.3", &schmidt_pure(0.3, s23)?)?;
    let eig = spectrum(&random_density(s33, 9)?)?;
    println!("random 3x3 spectrum sum = {:.12}", eig.iter().sum::<f64>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
