// Scans the 2x3 isotropic family over the rotation angle on the first
// party and writes the grid as CSV to stdout (or a path given as argument).

use std::error::Error;
use std::f64::consts::PI;

use ggm_entangle::io::write_scan_csv;
use ggm_entangle::search::{linspace, scan_1d, StateFamily};
use ggm_entangle::LevelPair;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = linspace(0.0, 1.0, 5)?;
    let p = linspace(0.0, PI, 9)?;
    let rows = scan_1d(StateFamily::Iso23, &a, &p, LevelPair { j: 1, k: 2 })?;

    // Smallest a on the grid violated at some p.
    let first = rows
        .iter()
        .filter(|r| r.f > 1e-9)
        .map(|r| r.param)
        .fold(f64::INFINITY, f64::min);
    println!("first violated a on the grid: {first}");

    match std::env::args().nth(1) {
        Some(path) => {
            let mut file = std::fs::File::create(&path)?;
            write_scan_csv(&mut file, &rows)?;
            println!("wrote {} rows to {path}", rows.len());
        }
        None => {
            let mut buf = Vec::new();
            write_scan_csv(&mut buf, &rows)?;
            print!("{}", String::from_utf8(buf)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
