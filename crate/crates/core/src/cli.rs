//! Command-line front end. Output is plain sorted text; exit code 0 on
//! success, 1 on input errors, 2 when a verification fails.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::complex::LabeledCellComplex;
use crate::error::{Error, Result};
use crate::input::{read_input, Payload};
use crate::lattice::{graver_basis, local_hull, orbit_representatives, quotient_resolution, LatticeData};
use crate::linalg::Field;
use crate::monomial::{ExponentVector, GeneratorSet};
use crate::resolution::{
    betti_hochster_table, betti_numbers, betti_taylor_oracle, is_minimal, verify_resolution, BettiTable, Verdict,
};

#[derive(Parser, Debug)]
#[command(name = "cellres", version, about = "Cellular resolutions of monomial and lattice ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Problem file (`ideal N` or `lattice N`).
    pub input: PathBuf,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    /// Override the deformation parameter t of the hull.
    #[arg(long)]
    pub t: Option<BigInt>,
    /// Initial window radius for lattice hulls.
    #[arg(long = "box", default_value_t = 3)]
    pub radius: i64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hull complex: f-vector and cell list.
    Hull {
        #[command(flatten)]
        common: Common,
        /// Report the largest cell's vertex count against n!.
        #[arg(long)]
        probe_conjecture: bool,
    },
    /// Scarf complex.
    Scarf {
        #[command(flatten)]
        common: Common,
    },
    /// Taylor simplex.
    Taylor {
        #[command(flatten)]
        common: Common,
    },
    /// Multigraded Betti numbers from the hull resolution.
    Betti {
        #[command(flatten)]
        common: Common,
        /// Cross-check against the Taylor and Hochster computations.
        #[arg(long)]
        oracle: bool,
    },
    /// Check whether a complex supports a resolution.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Cell file to test instead of the hull complex.
        #[arg(long)]
        complex: Option<PathBuf>,
    },
    /// Whether the supported resolution is minimal.
    Minimal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        complex: Option<PathBuf>,
    },
    /// Primitive vectors of a lattice.
    Graver {
        #[command(flatten)]
        common: Common,
    },
    /// Orbits of hull faces of a lattice module.
    LatticeHull {
        #[command(flatten)]
        common: Common,
    },
    /// Hull resolution of a lattice ideal and its Betti numbers.
    LatticeBetti {
        #[command(flatten)]
        common: Common,
    },
}

/// Rendered output and exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn ideal(common: &Common) -> Result<GeneratorSet> {
    match read_input(&common.input)?.payload {
        Payload::Ideal(g) => Ok(g.minimalize()),
        Payload::Lattice(_) => Err(Error::Invalid("this command needs an `ideal` input".into())),
    }
}

fn lattice(common: &Common) -> Result<LatticeData> {
    match read_input(&common.input)?.payload {
        Payload::Lattice(l) => Ok(l),
        Payload::Ideal(_) => Err(Error::Invalid("this command needs a `lattice` input".into())),
    }
}

fn complex_for(common: &Common, gens: &GeneratorSet, file: Option<&PathBuf>) -> Result<LabeledCellComplex> {
    match file {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
            LabeledCellComplex::from_text(&text)
        }
        None => LabeledCellComplex::hull_at(gens, common.t.as_ref()),
    }
}

fn complex_report(x: &LabeledCellComplex) -> String {
    format!("f-vector: {}\n{}", join(&x.f_vector()), x.to_text())
}

fn betti_report(t: &BettiTable) -> String {
    format!("totals: {}\n{t}", join(&t.totals()))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `x1*x4^2`-style rendering of a monomial.
pub fn monomial_string(a: &ExponentVector) -> String {
    let parts: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The binomial `x^{u+} - x^{u-}` of a lattice vector, oriented so that the
/// first nonzero coordinate of `u` is negative.
pub fn binomial_string(u: &ExponentVector) -> String {
    let u = if u.iter().find(|&&e| e != 0).is_some_and(|&e| e > 0) { -u } else { u.clone() };
    format!("{} - {}", monomial_string(&u.positive_part()), monomial_string(&u.negative_part()))
}

fn field(common: &Common) -> Result<Field> {
    Field::from_characteristic(common.characteristic)
}

/// Executes a parsed command.
pub fn run(cli: &Cli) -> Result<Report> {
    let mut out = String::new();
    match &cli.command {
        Command::Hull { common, probe_conjecture } => {
            let gens = ideal(common)?;
            let x = LabeledCellComplex::hull_at(&gens, common.t.as_ref())?;
            out += &complex_report(&x);
            if *probe_conjecture {
                let n = gens.ambient_dim();
                let _ = writeln!(out, "max cell vertices: {} (n! = {})", x.max_cell_size(), factorial(n));
            }
        }
        Command::Scarf { common } => out += &complex_report(&LabeledCellComplex::scarf(&ideal(common)?)?),
        Command::Taylor { common } => out += &complex_report(&LabeledCellComplex::taylor(&ideal(common)?)?),
        Command::Betti { common, oracle } => {
            let gens = ideal(common)?;
            let f = field(common)?;
            let x = LabeledCellComplex::hull_at(&gens, common.t.as_ref())?;
            let table = betti_numbers(&x, &gens, f)?;
            out += &betti_report(&table);
            if *oracle {
                let agree = betti_taylor_oracle(&gens, f)? == table && betti_hochster_table(&gens, f)? == table;
                let _ = writeln!(out, "oracle: {}", if agree { "agree" } else { "disagree" });
                if !agree {
                    return Ok(Report { text: out, code: 2 });
                }
            }
        }
        Command::Verify { common, complex } => {
            let gens = ideal(common)?;
            let x = complex_for(common, &gens, complex.as_ref())?;
            match verify_resolution(&x, &gens, field(common)?)? {
                Verdict::Resolution => out += "resolution: yes\n",
                Verdict::Fails { witness } => {
                    let _ = writeln!(out, "resolution: no\nwitness: {witness}");
                    return Ok(Report { text: out, code: 2 });
                }
            }
        }
        Command::Minimal { common, complex } => {
            let gens = ideal(common)?;
            let x = complex_for(common, &gens, complex.as_ref())?;
            let _ = writeln!(out, "minimal: {}", if is_minimal(&x) { "yes" } else { "no" });
        }
        Command::Graver { common } => {
            let g = graver_basis(&lattice(common)?);
            let _ = writeln!(out, "count: {}", g.len());
            for v in &g {
                let _ = writeln!(out, "{v}");
            }
        }
        Command::LatticeHull { common } => {
            let l = lattice(common)?;
            let h = local_hull(&l, common.radius)?;
            let reps = orbit_representatives(&h);
            let mut ranks = vec![0usize; h.f_vector().len()];
            for r in &reps {
                ranks[r.dim] += 1;
            }
            let _ = writeln!(out, "radius: {}", h.radius);
            let _ = writeln!(out, "faces at 0: {}", join(&h.f_vector()));
            let _ = writeln!(out, "ranks: {}", join(&ranks[1..]));
            for r in reps.iter().filter(|r| r.dim == 1) {
                let u = r.vertices.iter().find(|v| !v.is_zero()).unwrap();
                let _ = writeln!(out, "edge: {}", binomial_string(u));
            }
        }
        Command::LatticeBetti { common } => {
            let l = lattice(common)?;
            let f = field(common)?;
            let h = local_hull(&l, common.radius)?;
            let (_, q) = quotient_resolution(&h, &l, f)?;
            let _ = writeln!(out, "ranks: {}", join(&q.ranks()));
            let _ = writeln!(out, "minimal: {}", if q.is_minimal() { "yes" } else { "no" });
            out += &betti_report(&q.betti(&l, f));
        }
    }
    Ok(Report::ok(out))
}

/// Parses arguments, runs, and maps errors to exit codes.
pub fn main_with_args<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return Report { text: e.to_string(), code };
        }
    };
    match run(&cli) {
        Ok(r) => r,
        Err(e @ (Error::NotExact(_) | Error::NotAResolution(_))) => Report { text: format!("error: {e}\n"), code: 2 },
        Err(e) => Report { text: format!("error: {e}\n"), code: 1 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial_string(&ExponentVector::from([1, 0, -1, -2, 2])), "x3*x4^2 - x1*x5^2");
        assert_eq!(binomial_string(&ExponentVector::from([-2, 2, 1, 0, -1])), "x2^2*x3 - x1^2*x5");
    }

    #[test]
    fn bad_arguments_exit_one() {
        assert_eq!(main_with_args(["cellres", "frobnicate"]).code, 1);
        assert_eq!(main_with_args(["cellres", "hull", "/nonexistent/file"]).code, 1);
    }
}
