//! Text formats: density-matrix files, generator dumps and scan CSVs.
//!
//! A density-matrix file looks like
//!
//! ```text
//! dm v1
//! dims 2 2
//! 0.25,0 0,0 0,0 0,0
//! ...
//! ```
//!
//! with one line per matrix row, entries written as `re,im` and rows in the
//! A-major product basis. Numbers use Rust's shortest round-trip decimal
//! form, so writing a parsed file reproduces the same values.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ggm::{GellMannBasis, GeneratorKind};
use crate::linalg::{BipartiteShape, ComplexMatrix};
use crate::search::ScanRow;
use crate::states::DensityMatrix;

pub const DM_HEADER: &str = "dm v1";
pub const BASIS_HEADER: &str = "ggm v1";
pub const SCAN_HEADER: &str = "param,p,f";

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn format_entry(z: Complex64) -> String {
    format!("{},{}", z.re, z.im)
}

fn parse_entry(tok: &str, line: usize, column: usize) -> Result<Complex64> {
    let (re, im) = tok
        .split_once(',')
        .ok_or_else(|| parse_err(line, column, format!("expected `re,im`, got `{tok}`")))?;
    let re: f64 = re
        .parse()
        .map_err(|_| parse_err(line, column, format!("bad real part `{re}`")))?;
    let im: f64 = im
        .parse()
        .map_err(|_| parse_err(line, column, format!("bad imaginary part `{im}`")))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(parse_err(line, column, "non-finite entry"));
    }
    Ok(Complex64::new(re, im))
}

pub fn write_matrix_rows<W: Write + ?Sized>(out: &mut W, m: &ComplexMatrix) -> Result<()> {
    for r in 0..m.rows() {
        let line: Vec<String> = m.row(r).iter().map(|&z| format_entry(z)).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// Line-numbered reader over non-empty lines.
struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
        }
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            let t = l.trim();
            if !t.is_empty() {
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect_line(&mut self, what: &str, last_line: usize) -> Result<(usize, &'a str)> {
        self.next_line().ok_or_else(|| {
            parse_err(
                last_line + 1,
                1,
                format!("unexpected end of input, expected {what}"),
            )
        })
    }
}

fn read_rows(lines: &mut Lines<'_>, n: usize, mut last: usize) -> Result<ComplexMatrix> {
    let mut data = Vec::with_capacity(n * n);
    for r in 0..n {
        let (ln, text) = lines.expect_line(&format!("matrix row {}", r + 1), last)?;
        last = ln;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != n {
            return Err(parse_err(
                ln,
                toks.len().min(n) + 1,
                format!("expected {n} entries, found {}", toks.len()),
            ));
        }
        for (c, tok) in toks.iter().enumerate() {
            data.push(parse_entry(tok, ln, c + 1)?);
        }
    }
    ComplexMatrix::from_vec(n, n, data)
}

/// Parses a density-matrix file and validates the result.
///
/// Column numbers in parse errors count whitespace-separated fields from 1.
pub fn parse_density(text: &str) -> Result<DensityMatrix> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.expect_line("header", 0)?;
    if header != DM_HEADER {
        return Err(parse_err(
            ln,
            1,
            format!("expected `{DM_HEADER}`, got `{header}`"),
        ));
    }
    let (ln, dims) = lines.expect_line("dims line", ln)?;
    let toks: Vec<&str> = dims.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "dims" {
        return Err(parse_err(
            ln,
            1,
            format!("expected `dims M N`, got `{dims}`"),
        ));
    }
    let dim = |i: usize| -> Result<usize> {
        toks[i]
            .parse::<usize>()
            .map_err(|_| parse_err(ln, i + 1, format!("bad dimension `{}`", toks[i])))
    };
    let (m, n) = (dim(1)?, dim(2)?);
    let shape = BipartiteShape::new(m, n).map_err(|e| parse_err(ln, 2, e.to_string()))?;
    let mat = read_rows(&mut lines, shape.total(), ln)?;
    if let Some((extra, _)) = lines.next_line() {
        return Err(parse_err(extra, 1, "trailing content after matrix"));
    }
    DensityMatrix::new(shape, mat)
}

pub fn write_density<W: Write + ?Sized>(out: &mut W, rho: &DensityMatrix) -> Result<()> {
    writeln!(out, "{DM_HEADER}")?;
    writeln!(out, "dims {} {}", rho.shape().dim_a(), rho.shape().dim_b())?;
    write_matrix_rows(out, rho.matrix())
}

pub fn density_to_string(rho: &DensityMatrix) -> String {
    let mut buf = Vec::new();
    write_density(&mut buf, rho).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ASCII output")
}

pub fn read_density_file(path: &std::path::Path) -> Result<DensityMatrix> {
    parse_density(&std::fs::read_to_string(path)?)
}

/// Writes every generator as a labeled block (`s:j,k`, `a:j,k`, `d:l`)
/// followed by its rows in density-file entry syntax.
pub fn write_basis<W: Write + ?Sized>(out: &mut W, basis: &GellMannBasis) -> Result<()> {
    writeln!(out, "{BASIS_HEADER}")?;
    writeln!(out, "dim {}", basis.dim())?;
    for (kind, g) in basis.iter() {
        writeln!(out, "{kind}")?;
        write_matrix_rows(out, g)?;
    }
    Ok(())
}

/// Inverse of [`write_basis`]; no validation beyond shape.
pub fn parse_basis(text: &str) -> Result<Vec<(GeneratorKind, ComplexMatrix)>> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.expect_line("header", 0)?;
    if header != BASIS_HEADER {
        return Err(parse_err(
            ln,
            1,
            format!("expected `{BASIS_HEADER}`, got `{header}`"),
        ));
    }
    let (ln, dim_line) = lines.expect_line("dim line", ln)?;
    let n: usize = dim_line
        .strip_prefix("dim ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| parse_err(ln, 1, format!("expected `dim n`, got `{dim_line}`")))?;
    let mut out = Vec::new();
    while let Some((ln, label)) = lines.next_line() {
        let kind: GeneratorKind = label.parse().map_err(|e: String| parse_err(ln, 1, e))?;
        out.push((kind, read_rows(&mut lines, n, ln)?));
    }
    Ok(out)
}

fn format_csv_value(x: f64) -> String {
    // 17 significant digits round-trip every f64.
    format!("{x:.16e}")
}

pub fn write_scan_csv<W: Write + ?Sized>(out: &mut W, rows: &[ScanRow]) -> Result<()> {
    writeln!(out, "{SCAN_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{}",
            format_csv_value(r.param),
            format_csv_value(r.p),
            format_csv_value(r.f)
        )?;
    }
    Ok(())
}

pub fn parse_scan_csv<R: BufRead>(input: R) -> Result<Vec<ScanRow>> {
    let mut rows = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let ln = i + 1;
        if ln == 1 {
            if line.trim() != SCAN_HEADER {
                return Err(parse_err(ln, 1, format!("expected `{SCAN_HEADER}`")));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let vals: Vec<&str> = line.split(',').collect();
        if vals.len() != 3 {
            return Err(parse_err(ln, 1, "expected three fields"));
        }
        let mut parsed = [0.0; 3];
        for (c, (v, slot)) in vals.iter().zip(parsed.iter_mut()).enumerate() {
            *slot = v
                .trim()
                .parse()
                .map_err(|_| parse_err(ln, c + 1, format!("bad number `{v}`")))?;
        }
        rows.push(ScanRow {
            param: parsed[0],
            p: parsed[1],
            f: parsed[2],
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{horodecki33, random_density, werner};
    use proptest::prelude::*;

    #[test]
    fn werner_file_round_trip() {
        let rho = werner(0.5).unwrap();
        let text = density_to_string(&rho);
        assert!(text.starts_with("dm v1\ndims 2 2\n"));
        let back = parse_density(&text).unwrap();
        assert_eq!(back, rho);
        assert!((back.matrix().trace().re - 1.0).abs() < 1e-12);
        assert_eq!(density_to_string(&back), text);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let bad_header = "dm v2\ndims 2 2\n";
        assert!(matches!(
            parse_density(bad_header),
            Err(Error::Parse { line: 1, .. })
        ));

        let bad_entry = "dm v1\ndims 2 2\n0.25,0 0,0 0,0 0,0\n0,0 0.25;0 0,0 0,0\n";
        match parse_density(bad_entry) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 2)),
            other => panic!("unexpected {other:?}"),
        }

        let short_row = "dm v1\ndims 2 2\n0.25,0 0,0 0,0\n";
        assert!(matches!(
            parse_density(short_row),
            Err(Error::Parse { line: 3, .. })
        ));

        let truncated = "dm v1\ndims 2 2\n0.25,0 0,0 0,0 0,0\n";
        assert!(matches!(
            parse_density(truncated),
            Err(Error::Parse { line: 4, .. })
        ));

        let bad_dims = "dm v1\ndims 1 2\n";
        assert!(matches!(
            parse_density(bad_dims),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn invalid_density_rejected_after_parse() {
        let text =
            "dm v1\ndims 2 2\n1,0 0,0 0,0 0,0\n0,0 1,0 0,0 0,0\n0,0 0,0 1,0 0,0\n0,0 0,0 0,0 1,0\n";
        assert!(matches!(parse_density(text), Err(Error::InvalidDensity(_))));
    }

    #[test]
    fn basis_dump_round_trip() {
        let b = GellMannBasis::new(3).unwrap();
        let mut buf = Vec::new();
        write_basis(&mut buf, &b).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let blocks = parse_basis(&text).unwrap();
        assert_eq!(blocks.len(), 8);
        for ((kind, m), (k2, g)) in blocks.iter().zip(b.iter()) {
            assert_eq!(*kind, k2);
            assert_eq!(m, g);
        }
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let rows = vec![
            ScanRow {
                param: 0.1,
                p: std::f64::consts::PI,
                f: -1.0 / 3.0,
            },
            ScanRow {
                param: 1e-300,
                p: 0.0,
                f: 16.0 / 441.0,
            },
        ];
        let mut buf = Vec::new();
        write_scan_csv(&mut buf, &rows).unwrap();
        let back = parse_scan_csv(buf.as_slice()).unwrap();
        assert_eq!(back, rows);
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("param,p,f\n"));
        assert!(text.contains("3.1415926535897931e0"));
    }

    #[test]
    fn horodecki_file_round_trip() {
        let rho = horodecki33(3.5).unwrap();
        let back = parse_density(&density_to_string(&rho)).unwrap();
        assert_eq!(back, rho);
    }

    proptest! {
        #[test]
        fn random_density_files_round_trip(seed in any::<u64>(), m in 2usize..4, n in 2usize..4) {
            let rho = random_density(BipartiteShape::new(m, n).unwrap(), seed).unwrap();
            let text = density_to_string(&rho);
            let back = parse_density(&text).unwrap();
            prop_assert_eq!(&back, &rho);
            prop_assert_eq!(density_to_string(&back), text);
        }
    }
}
