//! `ssideals`: enumerate and analyse saturated strongly stable monomial ideals.

mod input;
mod record;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use stable_ideals::oracle::{
    brute_force_is_almost_lex, naive_enumerate_almost_lex, naive_enumerate_by_hp,
    naive_enumerate_by_series, verify_ideal,
};
use stable_ideals::{
    count_upper_bound, enumerate_almost_lex, enumerate_by_hp_with, enumerate_by_series,
    is_almost_lex, lex_ideal, max_betti_filter, numerator_to_polynomial, series_numerator_of,
    stability_threshold, EnumerateOptions, Error, HilbertPolynomial, SeriesNumerator,
    StronglyStableIdeal,
};

use record::{numerator_json, OutputRecord, PolynomialRecord};

const POLY_HELP: &str = "\
Polynomial grammar: terms [c][*]z[^k] or c joined by + and -, where c is an
integer or a fraction a/b; whitespace is ignored. Examples: \"3/2*z^2+5/2*z\",
\"2z^2 + z + 1\", \"8z-16\", \"31\".

Series numerators are over (1-t)^(number of variables).

Exit codes: 0 success, 1 verification failure, 2 bad polynomial or numerator,
3 ring too small, 4 invalid ideal input.";

#[derive(Parser)]
#[command(name = "ssideals", version, about, after_long_help = POLY_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct PolyInput {
    /// Hilbert polynomial in z, e.g. "3/2*z^2+5/2*z"
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Coefficients c_0,c_1,... of z^0, z^1, ...
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Gotzmann chain b_0,b_1,...,b_d
    #[arg(long)]
    gotzmann: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct Output {
    /// text, or json (one record per line plus a summary object)
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Clone)]
struct EnumerationFlags {
    /// Re-check every ideal with the brute-force oracles
    #[arg(long)]
    verify: bool,
    /// Also run the naive hash-dedup enumeration and compare
    #[arg(long)]
    oracle: bool,
    /// Keep only ideals with componentwise maximal Betti numbers
    #[arg(long)]
    max_betti: bool,
    /// Print only the number of ideals
    #[arg(long)]
    count_only: bool,
    /// Emit ideals in search order (enumerate-hp only)
    #[arg(long)]
    unsorted: bool,
    /// Worker threads for enumerate-hp; 0 uses all cores
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Preset {
    /// The rows checked by the acceptance suite
    Spot,
    /// Every reference row: constants 4 to 24, linear and quadratic polynomials
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// All saturated strongly stable ideals with a given Hilbert polynomial
    EnumerateHp {
        /// Number of variables n+1 of K[x_0..x_n]
        #[arg(long)]
        vars: usize,
        #[command(flatten)]
        poly: PolyInput,
        /// Keep only almost lexsegment ideals
        #[arg(long)]
        almost_lex_only: bool,
        #[command(flatten)]
        flags: EnumerationFlags,
        #[command(flatten)]
        output: Output,
    },
    /// All almost lexsegment ideals with a given Hilbert polynomial
    EnumerateAlmostLex {
        #[arg(long)]
        vars: usize,
        #[command(flatten)]
        poly: PolyInput,
        #[command(flatten)]
        flags: EnumerationFlags,
        #[command(flatten)]
        output: Output,
    },
    /// All saturated strongly stable ideals with a given Hilbert series numerator
    EnumerateSeries {
        #[arg(long)]
        vars: usize,
        /// Numerator coefficients g_0,g_1,... of t^0, t^1, ...
        #[arg(long, allow_hyphen_values = true)]
        numerator: String,
        #[command(flatten)]
        flags: EnumerationFlags,
        #[command(flatten)]
        output: Output,
    },
    /// Invariants of one ideal, given as text or as a JSON file
    Analyze {
        /// JSON file {"vars": N, "gens": [[...], ...]} or an output record; "-" reads stdin
        file: Option<PathBuf>,
        /// Text form such as "(x0^2, x0*x1)"; needs --vars
        #[arg(long, conflicts_with = "file")]
        ideal: Option<String>,
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// The lexicographic ideal of a Hilbert polynomial
    LexIdeal {
        #[arg(long)]
        vars: usize,
        #[command(flatten)]
        poly: PolyInput,
        #[command(flatten)]
        output: Output,
    },
    /// Counts for several polynomials and ring sizes, with wall-clock times
    Table {
        /// Row polynomial (repeatable)
        #[arg(long = "poly", allow_hyphen_values = true)]
        polys: Vec<String>,
        /// Built-in rows instead of --poly
        #[arg(long, value_enum, conflicts_with = "polys")]
        preset: Option<Preset>,
        /// Column values of n (the ring has n+1 variables)
        #[arg(long = "n", value_delimiter = ',', default_values_t = [3, 6, 9])]
        columns: Vec<usize>,
        /// Add counts at n = b_0+d-1 and n = b_0+d
        #[arg(long)]
        stability: bool,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Gotzmann chain, a-vector, regularity bound, stability threshold and count bound
    Bounds {
        #[arg(long)]
        vars: usize,
        #[command(flatten)]
        poly: PolyInput,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug)]
enum Failure {
    Verification(String),
    BadPolynomial(String),
    RingTooSmall(String),
    InvalidIdeal(String),
    Io(io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) | Failure::Io(_) => 1,
            Failure::BadPolynomial(_) => 2,
            Failure::RingTooSmall(_) => 3,
            Failure::InvalidIdeal(_) => 4,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let text = e.to_string();
        match e {
            Error::NotHilbertPolynomial(_) | Error::InvalidNumerator(_) => {
                Failure::BadPolynomial(text)
            }
            Error::RingTooSmall { .. }
            | Error::DimensionExceedsRing { .. }
            | Error::InvalidRing(_) => Failure::RingTooSmall(text),
            Error::NotStronglyStable(_) | Error::Parse(_) | Error::RingMismatch { .. } => {
                Failure::InvalidIdeal(text)
            }
            _ => Failure::Verification(text),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_poly(input: &PolyInput) -> Result<HilbertPolynomial, Failure> {
    let parsed = if let Some(text) = &input.poly {
        input::parse_polynomial(text)
            .and_then(|p| HilbertPolynomial::from_poly(&p).map_err(|e| e.to_string()))
    } else if let Some(text) = &input.coeffs {
        input::parse_coefficients(text)
            .and_then(|p| HilbertPolynomial::from_poly(&p).map_err(|e| e.to_string()))
    } else {
        input::parse_gotzmann(input.gotzmann.as_deref().unwrap_or_default())
    };
    parsed.map_err(Failure::BadPolynomial)
}

fn check_vars(vars: usize) -> Result<(), Failure> {
    if vars < 2 {
        return Err(Failure::RingTooSmall(format!(
            "{vars} variables; at least 2 are needed"
        )));
    }
    Ok(())
}

/// What an enumeration was asked for, echoed in the summary.
struct Request<'a> {
    command: &'a str,
    vars: usize,
    input: serde_json::Value,
}

fn emit(
    out: &mut impl Write,
    request: &Request,
    ideals: &[StronglyStableIdeal],
    flags: &EnumerationFlags,
    format: Format,
) -> Outcome {
    if flags.count_only {
        match format {
            Format::Text => writeln!(out, "{}", ideals.len())?,
            Format::Json => writeln!(out, "{}", json!({ "count": ideals.len() }))?,
        }
        return Ok(());
    }
    match format {
        Format::Text => {
            for ideal in ideals {
                writeln!(out, "{ideal}")?;
            }
            writeln!(out, "count={}", ideals.len())?;
        }
        Format::Json => {
            let records: Vec<String> = ideals
                .par_iter()
                .map(|i| OutputRecord::new(i).to_json_line())
                .collect();
            for line in records {
                writeln!(out, "{line}")?;
            }
            let summary = json!({ "summary": {
                "command": request.command,
                "vars": request.vars,
                "input": request.input,
                "count": ideals.len(),
            }});
            writeln!(out, "{summary}")?;
        }
    }
    Ok(())
}

fn verify_all(ideals: &[StronglyStableIdeal], p: &HilbertPolynomial, almost_lex: bool) -> Outcome {
    let failures: Vec<String> = ideals
        .par_iter()
        .filter_map(|ideal| {
            if let Err(e) = verify_ideal(ideal, p) {
                return Some(e);
            }
            if almost_lex && !brute_force_is_almost_lex(ideal) {
                return Some(format!("{ideal} is not almost lexsegment"));
            }
            None
        })
        .collect();
    match failures.first() {
        None => Ok(()),
        Some(first) => Err(Failure::Verification(format!(
            "{} of {} ideals failed verification; first: {first}",
            failures.len(),
            ideals.len()
        ))),
    }
}

fn compare_with_oracle(ideals: &[StronglyStableIdeal], naive: Vec<StronglyStableIdeal>) -> Outcome {
    let mut ours = ideals.to_vec();
    ours.sort();
    if ours == naive {
        return Ok(());
    }
    let missing = naive
        .iter()
        .filter(|i| ours.binary_search(i).is_err())
        .count();
    let extra = ours
        .iter()
        .filter(|i| naive.binary_search(i).is_err())
        .count();
    Err(Failure::Verification(format!(
        "naive enumeration disagrees: {} vs {} ideals, {missing} missing, {extra} extra",
        ours.len(),
        naive.len()
    )))
}

fn poly_echo(p: &HilbertPolynomial) -> serde_json::Value {
    serde_json::to_value(PolynomialRecord::new(p)).expect("serializable")
}

fn finish(
    out: &mut impl Write,
    request: Request,
    mut ideals: Vec<StronglyStableIdeal>,
    flags: &EnumerationFlags,
    format: Format,
    checks: impl FnOnce(&[StronglyStableIdeal]) -> Outcome,
) -> Outcome {
    if flags.max_betti {
        ideals = max_betti_filter(&ideals);
    }
    emit(out, &request, &ideals, flags, format)?;
    out.flush()?;
    checks(&ideals)
}

fn enumerate_hp(
    out: &mut impl Write,
    vars: usize,
    poly: &PolyInput,
    almost_lex_only: bool,
    flags: &EnumerationFlags,
    format: Format,
) -> Outcome {
    check_vars(vars)?;
    let p = read_poly(poly)?;
    let options = EnumerateOptions {
        workers: flags.workers,
        sorted: !flags.unsorted,
    };
    let mut ideals = enumerate_by_hp_with(&p, vars, options)?.ideals;
    if almost_lex_only {
        ideals.retain(is_almost_lex);
    }
    let request = Request {
        command: "enumerate-hp",
        vars,
        input: poly_echo(&p),
    };
    // oracle comparison sees the list before the Betti filter
    let before_filter = ideals.clone();
    finish(out, request, ideals, flags, format, |shown| {
        if flags.verify {
            verify_all(shown, &p, almost_lex_only)?;
        }
        if flags.oracle {
            let naive = if almost_lex_only {
                naive_enumerate_almost_lex(&p, vars)?
            } else {
                naive_enumerate_by_hp(&p, vars)?
            };
            compare_with_oracle(&before_filter, naive)?;
        }
        Ok(())
    })
}

fn enumerate_almost_lex_cmd(
    out: &mut impl Write,
    vars: usize,
    poly: &PolyInput,
    flags: &EnumerationFlags,
    format: Format,
) -> Outcome {
    check_vars(vars)?;
    let p = read_poly(poly)?;
    let ideals = enumerate_almost_lex(&p, vars)?;
    let before_filter = ideals.clone();
    let request = Request {
        command: "enumerate-almost-lex",
        vars,
        input: poly_echo(&p),
    };
    finish(out, request, ideals, flags, format, |shown| {
        if flags.verify {
            verify_all(shown, &p, true)?;
        }
        if flags.oracle {
            compare_with_oracle(&before_filter, naive_enumerate_almost_lex(&p, vars)?)?;
        }
        Ok(())
    })
}

fn enumerate_series_cmd(
    out: &mut impl Write,
    vars: usize,
    numerator: &str,
    flags: &EnumerationFlags,
    format: Format,
) -> Outcome {
    check_vars(vars)?;
    let g: SeriesNumerator = input::parse_numerator(numerator).map_err(Failure::BadPolynomial)?;
    let ideals = enumerate_by_series(&g, vars)?;
    let implied = numerator_to_polynomial(&g, vars);
    if let Err(e) = &implied {
        eprintln!("note: no saturated ideal has this series ({e})");
    }
    let before_filter = ideals.clone();
    let request = Request {
        command: "enumerate-series",
        vars,
        input: json!(numerator_json(&g)),
    };
    finish(out, request, ideals, flags, format, |shown| {
        if flags.verify {
            if let Some(bad) = shown.iter().find(|i| series_numerator_of(i) != g) {
                return Err(Failure::Verification(format!(
                    "{bad} has a different numerator"
                )));
            }
            if let Ok(p) = &implied {
                let proper: Vec<_> = shown.iter().filter(|i| !i.is_zero()).cloned().collect();
                verify_all(&proper, p, false)?;
            }
        }
        if flags.oracle && !g.one_minus().is_zero() {
            compare_with_oracle(&before_filter, naive_enumerate_by_series(&g, vars)?)?;
        }
        Ok(())
    })
}

fn analyze(
    out: &mut impl Write,
    file: Option<&PathBuf>,
    text: Option<&str>,
    vars: Option<usize>,
    format: Format,
) -> Outcome {
    let ideal = match (file, text) {
        (Some(path), _) => {
            let data = if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(path)?
            };
            // a bare ideal, or a record printed by --format json
            let ideal: StronglyStableIdeal = serde_json::from_str::<serde_json::Value>(&data)
                .and_then(|mut v| match v.get_mut("ideal") {
                    Some(inner) => serde_json::from_value(inner.take()),
                    None => serde_json::from_value(v),
                })
                .map_err(|e| Failure::InvalidIdeal(format!("{}: {e}", path.display())))?;
            if vars.is_some_and(|v| v != ideal.num_vars()) {
                return Err(Failure::InvalidIdeal(format!(
                    "file has {} variables, --vars says {}",
                    ideal.num_vars(),
                    vars.unwrap_or_default()
                )));
            }
            ideal
        }
        (None, Some(text)) => {
            let vars = vars.ok_or_else(|| Failure::InvalidIdeal("--ideal needs --vars".into()))?;
            check_vars(vars)?;
            StronglyStableIdeal::parse(text, vars)?
        }
        (None, None) => {
            return Err(Failure::InvalidIdeal("give a JSON file or --ideal".into()));
        }
    };
    if !ideal.is_saturated() {
        return Err(Failure::InvalidIdeal(format!(
            "{ideal} is not saturated: a generator involves x{}",
            ideal.n()
        )));
    }
    let record = OutputRecord::new(&ideal);
    match format {
        Format::Text => writeln!(out, "{}", record.describe())?,
        Format::Json => writeln!(out, "{}", record.to_json_line())?,
    }
    Ok(())
}

fn lex_ideal_cmd(out: &mut impl Write, vars: usize, poly: &PolyInput, format: Format) -> Outcome {
    check_vars(vars)?;
    let p = read_poly(poly)?;
    let ideal = lex_ideal(&p, vars)?;
    match format {
        Format::Text => writeln!(out, "{ideal}")?,
        Format::Json => writeln!(out, "{}", OutputRecord::new(&ideal).to_json_line())?,
    }
    Ok(())
}

fn bounds(out: &mut impl Write, vars: usize, poly: &PolyInput, format: Format) -> Outcome {
    check_vars(vars)?;
    let p = read_poly(poly)?;
    let bound = count_upper_bound(&p, vars);
    match format {
        Format::Text => {
            let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            writeln!(out, "polynomial: {p}")?;
            writeln!(out, "gotzmann: {}", join(p.gotzmann()))?;
            writeln!(out, "a-vector: {}", join(&p.a_vector()))?;
            writeln!(out, "regularity bound: {}", p.gotzmann_number())?;
            writeln!(out, "stability threshold: n >= {}", stability_threshold(&p))?;
            writeln!(out, "count upper bound: {bound}")?;
        }
        Format::Json => {
            let value = json!({
                "hilbert_polynomial": poly_echo(&p),
                "vars": vars,
                "regularity_bound": p.gotzmann_number(),
                "stability_threshold": stability_threshold(&p),
                "count_upper_bound": bound.to_string(),
            });
            writeln!(out, "{value}")?;
        }
    }
    Ok(())
}

/// `(label, a_0, a_1, a_2)` for the full reference table.
const FULL_ROWS: &[(&str, [u64; 3])] = &[
    ("4", [4, 0, 0]),
    ("8", [8, 0, 0]),
    ("12", [12, 0, 0]),
    ("16", [16, 0, 0]),
    ("20", [20, 0, 0]),
    ("24", [24, 0, 0]),
    ("4z+2", [4, 4, 0]),
    ("4z+6", [8, 4, 0]),
    ("4z+10", [12, 4, 0]),
    ("4z+14", [16, 4, 0]),
    ("8z-16", [4, 8, 0]),
    ("8z-12", [8, 8, 0]),
    ("8z-8", [12, 8, 0]),
    ("8z-4", [16, 8, 0]),
    ("2z^2+6", [4, 0, 4]),
    ("2z^2+10", [8, 0, 4]),
    ("2z^2+14", [12, 0, 4]),
    ("2z^2+18", [16, 0, 4]),
    ("2z^2+4z-12", [4, 4, 4]),
    ("2z^2+4z-8", [8, 4, 4]),
    ("2z^2+4z-4", [12, 4, 4]),
    ("2z^2+8z-46", [4, 8, 4]),
    ("2z^2+8z-42", [8, 8, 4]),
    ("2z^2+8z-38", [12, 8, 4]),
    ("4z^2-16z+40", [4, 0, 8]),
    ("4z^2-16z+44", [8, 0, 8]),
    ("4z^2-16z+48", [12, 0, 8]),
    ("4z^2-12z+6", [4, 4, 8]),
    ("4z^2-12z+10", [8, 4, 8]),
    ("4z^2-12z+14", [12, 4, 8]),
    ("4z^2-8z-44", [4, 8, 8]),
    ("4z^2-8z-40", [8, 8, 8]),
    ("4z^2-8z-36", [12, 8, 8]),
];

const SPOT_ROWS: &[&str] = &["4", "8", "12", "4z+2", "2z^2+6", "8z-16"];

fn table_rows(
    polys: &[String],
    preset: Option<Preset>,
) -> Result<Vec<(String, HilbertPolynomial)>, Failure> {
    let from_expr = |label: &str| -> Result<(String, HilbertPolynomial), Failure> {
        let poly = PolyInput {
            poly: Some(label.to_string()),
            coeffs: None,
            gotzmann: None,
        };
        Ok((label.to_string(), read_poly(&poly)?))
    };
    match preset {
        Some(Preset::Spot) => SPOT_ROWS.iter().map(|s| from_expr(s)).collect(),
        Some(Preset::Full) => FULL_ROWS
            .iter()
            .map(|(label, a)| {
                let mut b = vec![a[0] + a[1] + a[2], a[1] + a[2], a[2]];
                while b.last() == Some(&0) {
                    b.pop();
                }
                let p = HilbertPolynomial::from_gotzmann(b)?;
                Ok((label.to_string(), p))
            })
            .collect(),
        None if polys.is_empty() => Err(Failure::BadPolynomial("give --poly or --preset".into())),
        None => polys.iter().map(|s| from_expr(s)).collect(),
    }
}

fn count_cell(p: &HilbertPolynomial, vars: usize, workers: usize) -> (Option<usize>, f64) {
    let start = Instant::now();
    let count = enumerate_by_hp_with(
        p,
        vars,
        EnumerateOptions {
            workers,
            sorted: false,
        },
    )
    .ok()
    .map(|e| e.ideals.len());
    (count, start.elapsed().as_secs_f64())
}

fn table(
    out: &mut impl Write,
    polys: &[String],
    preset: Option<Preset>,
    columns: &[usize],
    stability: bool,
    workers: usize,
    format: Format,
) -> Outcome {
    let rows = table_rows(polys, preset)?;
    let mut header = vec!["p(z)".to_string(), "a".to_string()];
    header.extend(columns.iter().map(|n| format!("n = {n}")));
    if stability {
        header.push("n = b0+d-1".into());
        header.push("n = b0+d".into());
    }
    let mut lines: Vec<Vec<String>> = vec![header];
    for (label, p) in rows {
        let a = p
            .a_vector()
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let mut ns: Vec<usize> = columns.to_vec();
        if stability {
            let t = stability_threshold(&p) as usize;
            ns.extend([t, t + 1]);
        }
        let cells: Vec<(usize, Option<usize>, f64)> = ns
            .iter()
            .map(|&n| {
                let (count, secs) = count_cell(&p, n + 1, workers);
                (n, count, secs)
            })
            .collect();
        match format {
            Format::Json => {
                let cells: Vec<_> = cells
                    .iter()
                    .map(|(n, c, s)| json!({ "n": n, "count": c, "seconds": s }))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "p": label, "gotzmann": p.gotzmann(), "cells": cells })
                )?;
            }
            Format::Text => {
                let mut line = vec![label, a];
                line.extend(cells.iter().map(|(_, c, s)| match c {
                    Some(c) => format!("{c} ({s:.2}s)"),
                    None => "-".to_string(),
                }));
                lines.push(line);
            }
        }
    }
    if format == Format::Text {
        let widths: Vec<usize> = (0..lines[0].len())
            .map(|i| lines.iter().map(|l| l[i].len()).max().unwrap_or(0))
            .collect();
        for line in &lines {
            let padded: Vec<String> = line
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (cell, &w))| {
                    if i < 2 {
                        format!("{cell:<w$}")
                    } else {
                        format!("{cell:>w$}")
                    }
                })
                .collect();
            writeln!(out, "{}", padded.join("  ").trim_end())?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::EnumerateHp {
            vars,
            poly,
            almost_lex_only,
            flags,
            output,
        } => enumerate_hp(
            &mut out,
            *vars,
            poly,
            *almost_lex_only,
            flags,
            output.format,
        ),
        Command::EnumerateAlmostLex {
            vars,
            poly,
            flags,
            output,
        } => enumerate_almost_lex_cmd(&mut out, *vars, poly, flags, output.format),
        Command::EnumerateSeries {
            vars,
            numerator,
            flags,
            output,
        } => enumerate_series_cmd(&mut out, *vars, numerator, flags, output.format),
        Command::Analyze {
            file,
            ideal,
            vars,
            output,
        } => analyze(
            &mut out,
            file.as_ref(),
            ideal.as_deref(),
            *vars,
            output.format,
        ),
        Command::LexIdeal { vars, poly, output } => {
            lex_ideal_cmd(&mut out, *vars, poly, output.format)
        }
        Command::Table {
            polys,
            preset,
            columns,
            stability,
            workers,
            output,
        } => table(
            &mut out,
            polys,
            *preset,
            columns,
            *stability,
            *workers,
            output.format,
        ),
        Command::Bounds { vars, poly, output } => bounds(&mut out, *vars, poly, output.format),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(failure) => {
            let message = match &failure {
                Failure::Verification(m)
                | Failure::BadPolynomial(m)
                | Failure::RingTooSmall(m)
                | Failure::InvalidIdeal(m) => m.clone(),
                Failure::Io(e) => e.to_string(),
            };
            eprintln!("error: {message}");
            ExitCode::from(failure.code())
        }
    }
}
