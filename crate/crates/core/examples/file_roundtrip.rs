// Writes a density matrix in the text format, reads it back and runs the
// same detection the CLI does.

use std::error::Error;

use ggm_entangle::cli::format_report;
use ggm_entangle::io::{density_to_string, parse_density, read_density_file, write_density};
use ggm_entangle::search::evaluate_identity;
use ggm_entangle::states::werner;
use ggm_entangle::witness::DEFAULT_TOL;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rho = werner(0.8)?;
    let text = density_to_string(&rho);
    print!("{text}");
    assert_eq!(density_to_string(&parse_density(&text)?), text);

    let path = std::env::temp_dir().join(format!("ggm-roundtrip-{}.dm", std::process::id()));
    write_density(&mut std::fs::File::create(&path)?, &rho)?;
    let back = read_density_file(&path)?;
    std::fs::remove_file(&path)?;
    assert_eq!(back.matrix().max_abs_diff(rho.matrix()), 0.0);

    let report = evaluate_identity(&back, None, DEFAULT_TOL)?;
    print!("{}", format_report(&report));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
