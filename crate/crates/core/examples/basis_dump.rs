// Builds the generator basis for a qutrit, checks orthogonality and
// expands a ket-bra, then dumps the basis in the text format.

use std::error::Error;

use ggm_entangle::io::{parse_basis, write_basis};
use ggm_entangle::linalg::ComplexMatrix;
use ggm_entangle::GellMannBasis;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let basis = GellMannBasis::new(3)?;
    println!("{} generators for n = {}", basis.len(), basis.dim());

    let mut worst: f64 = 0.0;
    for (ka, a) in basis.iter() {
        for (kb, b) in basis.iter() {
            let want = if ka == kb { 2.0 } else { 0.0 };
            worst = worst.max((a.matmul(b).trace().re - want).abs());
        }
    }
    println!("max Gram deviation: {worst:e}");

    let e23 = basis.ketbra(2, 3)?;
    let err = e23.max_abs_diff(&ComplexMatrix::unit(3, 1, 2));
    println!("|2><3| rebuilt from generators, error {err:e}");
    assert!(err < 1e-12);

    let mut buf = Vec::new();
    write_basis(&mut buf, &basis)?;
    let text = String::from_utf8(buf)?;
    let back = parse_basis(&text)?;
    assert_eq!(back.len(), basis.len());
    for line in text.lines().take(6) {
        println!("  {line}");
    }
    println!("  ... ({} lines)", text.lines().count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
