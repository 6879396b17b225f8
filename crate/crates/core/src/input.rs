//! Plain-text problem files.
//!
//! ```text
//! ideal 3          lattice 5
//! 2 1 0            kernel
//! 1 0 1            0 1 2 3 4
//! 0 2 0            4 3 2 1 0
//! 0 1 2
//! ```
//!
//! A lattice is given either by the rows of an integer matrix whose kernel
//! it is (`kernel`) or by a basis (`basis`). Blank lines and text after `#`
//! are ignored.

use std::path::Path;

use crate::error::{Error, Result};
use crate::lattice::LatticeData;
use crate::monomial::{ExponentVector, GeneratorSet};

#[derive(Clone, Debug)]
pub enum Payload {
    Ideal(GeneratorSet),
    Lattice(LatticeData),
}

#[derive(Clone, Debug)]
pub struct ProblemInput {
    pub ambient_dim: usize,
    pub payload: Payload,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_row(line: usize, text: &str, n: usize) -> Result<Vec<i64>> {
    let row = text
        .split_whitespace()
        .map(|w| w.parse::<i64>().map_err(|_| parse_err(line, format!("not an integer: {w:?}"))))
        .collect::<Result<Vec<i64>>>()?;
    if row.len() != n {
        return Err(parse_err(line, format!("expected {n} entries, found {}", row.len())));
    }
    Ok(row)
}

pub fn parse_input(text: &str) -> Result<ProblemInput> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or("");
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| parse_err(hline, "header must be `ideal N` or `lattice N` with N > 0"))?;
    if words.next().is_some() {
        return Err(parse_err(hline, "trailing text after header"));
    }
    match kind {
        "ideal" => {
            let mut gens = Vec::new();
            for (ln, l) in lines {
                let row = parse_row(ln, l, n)?;
                if row.iter().any(|&e| e < 0) {
                    return Err(parse_err(ln, "negative exponent"));
                }
                gens.push(ExponentVector::new(row));
            }
            Ok(ProblemInput { ambient_dim: n, payload: Payload::Ideal(GeneratorSet::new(n, gens)?) })
        }
        "lattice" => {
            let (mline, mode) = lines.next().ok_or_else(|| parse_err(hline + 1, "expected `kernel` or `basis`"))?;
            let rows = lines.map(|(ln, l)| parse_row(ln, l, n)).collect::<Result<Vec<_>>>()?;
            let lattice = match mode {
                "kernel" => LatticeData::from_kernel(&rows, n)?,
                "basis" => LatticeData::from_basis(n, rows.into_iter().map(ExponentVector::new).collect())?,
                other => return Err(parse_err(mline, format!("expected `kernel` or `basis`, found {other:?}"))),
            };
            Ok(ProblemInput { ambient_dim: n, payload: Payload::Lattice(lattice) })
        }
        other => Err(parse_err(hline, format!("unknown input kind {other:?}"))),
    }
}

pub fn read_input(path: &Path) -> Result<ProblemInput> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    parse_input(&text)
}
