//! The `polyomino` command line. [`run`] parses arguments, executes one subcommand and
//! returns the process exit code; nothing else in the crate prints.

use crate::algebra::text::format_generators;
use crate::algebra::{
    groebner_basis, saturate_all, Field, GbOptions, MonomialOrder, Poly, PrimeField, Rationals, Ring,
};
use crate::enumerate::{enumerate_polyominoes_up_to, run_campaign, CampaignOptions, Check};
use crate::error::{Error, Result};
use crate::grid::{format_cells, parse_cells, CellCollection};
use crate::ideals::{
    adjacent_minor_ideal, closed_path_p1, inner_minor_ideal, is_prime, radical_via_admissible, toric_ideal,
    vertex_ring, zigzag_binomial, Direction, PrimeOptions, PrimeStatus, ToricModelKind, DEFAULT_ADMISSIBLE_BUDGET,
};
use crate::invariants::{
    cm_type_via_socle, fuss_catalan, gorenstein_probe, hilbert_data, is_pseudo_gorenstein, level_probe_for_paths,
    regularity_proxy,
};
use crate::rook::{format_t_poly, rook_number, rook_polynomial, switching_rook_polynomial};
use crate::shape::{
    classify_path, convexity_degree, find_zigzag_walks, is_thin, stair_analysis, DEFAULT_ZIGZAG_BUDGET,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
/// The input does not satisfy the command's precondition.
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "polyomino",
    version,
    about = "Polyomino ideals: generators, primality, Hilbert series, rook polynomials"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Degrevlex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldArg {
    Prime(u32),
    Rationals,
}

fn parse_field(s: &str) -> std::result::Result<FieldArg, String> {
    let l = s.to_ascii_lowercase();
    if l == "q" || l == "qq" {
        return Ok(FieldArg::Rationals);
    }
    let p: u32 =
        l.strip_prefix("gf").and_then(|d| d.parse().ok()).ok_or_else(|| format!("expected gf<p> or q, got {s:?}"))?;
    if p < (1 << 31) && crate::algebra::field::is_prime(p) {
        Ok(FieldArg::Prime(p))
    } else {
        Err(format!("{p} is not a prime below 2^31"))
    }
}

fn parse_direction(s: &str) -> std::result::Result<Direction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args, Debug)]
pub struct Global {
    /// Monomial order.
    #[arg(long, global = true, value_enum, default_value = "degrevlex")]
    pub order: OrderArg,
    /// Reading of the vertex grid that fixes the variable order.
    #[arg(long, global = true, default_value = "EN", value_parser = parse_direction)]
    pub direction: Direction,
    /// Coefficient field: gf<p> or q.
    #[arg(long, global = true, default_value = "gf32003", value_parser = parse_field)]
    pub field: FieldArg,
    /// Gröbner basis budget in S-pair reductions.
    #[arg(long, global = true, default_value_t = crate::algebra::DEFAULT_PAIR_BUDGET)]
    pub budget_pairs: u64,
    /// Zig-zag search budget in search nodes.
    #[arg(long, global = true, default_value_t = DEFAULT_ZIGZAG_BUDGET)]
    pub budget_zigzag: u64,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output to a file.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Cells as `{{i,j},...}` (lower-left corners) or a JSON array of pairs.
    #[arg(long, conflicts_with = "file")]
    pub cells: Option<String>,
    /// File holding the cells in either encoding.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structure, path type, thinness and convexity.
    Describe(Input),
    /// The inner 2-minors.
    Ideal(Input),
    /// The 2-minors of the single cells.
    AdjacentIdeal(Input),
    /// Saturation of I_P by all variables.
    LatticeIdeal(Input),
    /// Kernel of a toric map.
    Toric {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "graph", value_parser = |s: &str| s.parse::<ToricModelKind>().map_err(|e| e.to_string()))]
        model: ToricModelKind,
    },
    /// Reduced Gröbner basis of I_P.
    Groebner(Input),
    /// h-polynomial, Krull dimension and regularity proxy.
    Hilbert(Input),
    Rook(Input),
    SwitchingRook(Input),
    /// Zig-zag walks and their binomials.
    Zigzag {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        max_walks: usize,
    },
    Prime {
        #[command(flatten)]
        input: Input,
        /// Skip the shape theorems.
        #[arg(long)]
        no_shortcuts: bool,
    },
    RadicalAdmissible {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_ADMISSIBLE_BUDGET)]
        budget_subsets: u64,
    },
    ClosedPathP1(Input),
    Gorenstein(Input),
    PseudoGorenstein(Input),
    Level(Input),
    /// Cohen-Macaulay type from a random Artinian reduction over GF(p).
    CmType(Input),
    FussCatalan {
        p: u64,
        n: u64,
    },
    /// Polyominoes of rank n.
    Enumerate {
        n: usize,
        #[arg(long)]
        mod_symmetry: bool,
        /// Only print the count.
        #[arg(long)]
        count: bool,
    },
    /// Identity checks over all polyominoes up to a rank; JSONL to --output or stdout.
    Campaign {
        #[arg(long)]
        max_rank: usize,
        /// Comma-separated check names; all by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Enumerate fixed polyominoes instead of one per symmetry class.
        #[arg(long)]
        fixed: bool,
    },
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, code: EXIT_OK }
    }
}

fn read_input(input: &Input) -> Result<CellCollection> {
    match (&input.cells, &input.file) {
        (Some(s), _) => parse_cells(s),
        (None, Some(path)) => {
            let s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            parse_cells(&s)
        }
        (None, None) => Err(Error::Parse("pass --cells or --file".into())),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        e if e.is_budget() => EXIT_BUDGET,
        _ => EXIT_DOMAIN,
    }
}

fn gb_options(g: &Global) -> GbOptions {
    GbOptions::with_budget(g.budget_pairs)
}

fn polys_output<F: Field>(ring: &Ring<F>, key: &str, polys: &[Poly<F::Elem>]) -> Output {
    let lines = format_generators(ring, polys);
    Output::new(lines.join("\n"), json!({ key: lines }))
}

fn make_ring<F: Field>(field: F, p: &CellCollection, g: &Global) -> Ring<F> {
    let order = match g.order {
        OrderArg::Lex => MonomialOrder::Lex,
        OrderArg::Degrevlex => MonomialOrder::DegRevLex,
    };
    vertex_ring(p, field, order, g.direction)
}

// commands that build polynomials in the chosen field
fn algebra<F: Field>(field: F, cmd: &Command, g: &Global) -> Result<Output> {
    let opts = gb_options(g);
    match cmd {
        Command::Ideal(i) => {
            let p = read_input(i)?;
            let r = make_ring(field, &p, g);
            Ok(polys_output(&r, "generators", &inner_minor_ideal(&r, &p)?))
        }
        Command::AdjacentIdeal(i) => {
            let p = read_input(i)?;
            let r = make_ring(field, &p, g);
            Ok(polys_output(&r, "generators", &adjacent_minor_ideal(&r, &p)?))
        }
        Command::LatticeIdeal(i) => {
            let p = read_input(i)?;
            let r = make_ring(field, &p, g);
            Ok(polys_output(&r, "generators", &saturate_all(&r, &inner_minor_ideal(&r, &p)?, &opts)?))
        }
        Command::Toric { input, model } => {
            let p = read_input(input)?;
            let r = make_ring(field, &p, g);
            Ok(polys_output(&r, "generators", &toric_ideal(&r, &p, *model, &opts)?))
        }
        Command::Groebner(i) => {
            let p = read_input(i)?;
            let r = make_ring(field, &p, g);
            let gb = groebner_basis(&r, &inner_minor_ideal(&r, &p)?, &opts)?;
            Ok(polys_output(&r, "groebnerBasis", gb.gens()))
        }
        Command::Hilbert(i) => {
            let p = read_input(i)?;
            let r = make_ring(field, &p, g);
            let d = hilbert_data(&r, &p, &opts)?;
            let reg = regularity_proxy(&p, &opts)?;
            let text = format!(
                "h(t) = {}\ndim = {}\nmultiplicity = {}\ndeg h = {}{}",
                format_t_poly(&d.h),
                d.dim,
                d.multiplicity,
                reg.deg_h,
                if reg.cm_known { " (= regularity, Cohen-Macaulay)" } else { "" }
            );
            let json = json!({
                "h": d.h, "krullDimension": d.dim, "numerator": d.numerator,
                "multiplicity": d.multiplicity, "regularityProxy": reg,
            });
            Ok(Output::new(text, json))
        }
        Command::Zigzag { input, max_walks } => {
            let p = read_input(input)?;
            let r = make_ring(field, &p, g);
            let walks = find_zigzag_walks(&p, *max_walks, g.budget_zigzag)?;
            if walks.is_empty() {
                return Ok(Output::new("no zig-zag walk", json!({ "walks": [] })));
            }
            let mut text = Vec::new();
            let mut js = Vec::new();
            for w in &walks {
                let f = crate::algebra::format_poly(&r, &zigzag_binomial(&r, &p, w)?);
                let ivs: Vec<String> = w.intervals().iter().map(|iv| iv.to_string()).collect();
                text.push(format!("walk {}\nf_W = {f}", ivs.join(" ")));
                js.push(json!({ "walk": w, "binomial": f }));
            }
            Ok(Output::new(text.join("\n"), json!({ "walks": js })))
        }
        Command::RadicalAdmissible { input, budget_subsets } => {
            let p = read_input(input)?;
            let r = make_ring(field, &p, g);
            let rep = radical_via_admissible(&r, &p, *budget_subsets, &opts)?;
            let lines = format_generators(&r, &rep.radical);
            let gb = groebner_basis(&r, &inner_minor_ideal(&r, &p)?, &opts)?;
            let equal = gb.gens() == rep.radical.as_slice();
            let text = format!(
                "admissible sets: {}\ncomponents: {}\nradical equals I_P: {equal}\n{}",
                rep.admissible_sets,
                rep.components.len(),
                lines.join("\n")
            );
            let json = json!({
                "admissibleSets": rep.admissible_sets, "components": rep.components,
                "radicalEqualsIdeal": equal, "generators": lines,
            });
            Ok(Output::new(text, json))
        }
        Command::ClosedPathP1(i) => {
            let p = read_input(i)?;
            let r = make_ring(field, &p, g);
            let rep = closed_path_p1(&r, &p, g.budget_zigzag, &opts)?;
            let lines = format_generators(&r, &rep.generators);
            let text =
                format!("walks: {}\np1: {}\nheight: {}\n{}", rep.walks, rep.verdict, rep.height, lines.join("\n"));
            Ok(Output::new(text, json!({ "report": rep, "generators": lines })))
        }
        _ => unreachable!("not an algebra command"),
    }
}

fn poly_json(c: &[u64]) -> (String, Value) {
    let v: Vec<i64> = c.iter().map(|&x| x as i64).collect();
    (format_t_poly(&v), json!(c))
}

fn execute(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    let opts = gb_options(g);
    let prime_opts = PrimeOptions { gb: opts, zigzag_budget: g.budget_zigzag, shortcuts: true };
    match &cli.command {
        Command::Ideal(_)
        | Command::AdjacentIdeal(_)
        | Command::LatticeIdeal(_)
        | Command::Toric { .. }
        | Command::Groebner(_)
        | Command::Hilbert(_)
        | Command::Zigzag { .. }
        | Command::RadicalAdmissible { .. }
        | Command::ClosedPathP1(_) => match g.field {
            FieldArg::Prime(q) => algebra(PrimeField::new(q), &cli.command, g),
            FieldArg::Rationals => algebra(Rationals, &cli.command, g),
        },
        Command::Describe(i) => {
            let p = read_input(i)?;
            let s = p.structure();
            let path = if s.is_polyomino && !p.is_empty() { Some(classify_path(&p)?) } else { None };
            let kind = path.as_ref().map(|d| d.kind);
            let convexity = convexity_degree(&p).ok();
            let text = format!(
                "cells: {}\nrank: {}\npolyomino: {}\nsimple: {}\nholes: {}\nconvex: {}\nthin: {}\npath: {}\nblock ranks: {:?}",
                format_cells(&p),
                s.rank,
                s.is_polyomino,
                s.is_simple,
                s.holes,
                s.is_convex,
                is_thin(&p),
                kind.map_or("n/a".to_string(), |k| serde_json::to_value(k).unwrap().as_str().unwrap().to_string()),
                path.as_ref().map(|d| d.block_ranks()).unwrap_or_default(),
            );
            let json = json!({
                "cells": format_cells(&p), "structure": s, "thin": is_thin(&p),
                "path": path, "convexityDegree": convexity,
            });
            Ok(Output::new(text, json))
        }
        Command::Rook(i) => {
            let p = read_input(i)?;
            let (t, j) = poly_json(&rook_polynomial(&p)?);
            Ok(Output::new(t, json!({ "rookPolynomial": j, "rookNumber": rook_number(&p)? })))
        }
        Command::SwitchingRook(i) => {
            let p = read_input(i)?;
            let (t, j) = poly_json(&switching_rook_polynomial(&p)?);
            Ok(Output::new(t, json!({ "switchingRookPolynomial": j })))
        }
        Command::Prime { input, no_shortcuts } => {
            let p = read_input(input)?;
            let v = is_prime(&p, &PrimeOptions { shortcuts: !no_shortcuts, ..prime_opts })?;
            let mut out = Output::new(v.to_string(), serde_json::to_value(&v).expect("verdict serializes"));
            if v.status == PrimeStatus::Indeterminate {
                out.code = EXIT_BUDGET;
            }
            Ok(out)
        }
        Command::Gorenstein(i) => {
            let p = read_input(i)?;
            let probe = gorenstein_probe(&p, &prime_opts)?;
            let verdict = serde_json::to_value(probe.verdict).expect("serializes");
            let text = format!("{}\n{}", verdict.as_str().unwrap_or_default(), probe.reasons.join("\n"));
            Ok(Output::new(text, serde_json::to_value(&probe).expect("serializes")))
        }
        Command::PseudoGorenstein(i) => {
            let p = read_input(i)?;
            let b = is_pseudo_gorenstein(&p, &opts)?;
            Ok(Output::new(b.to_string(), json!({ "pseudoGorenstein": b })))
        }
        Command::Level(i) => {
            let p = read_input(i)?;
            let b = level_probe_for_paths(&p)?;
            let stairs = stair_analysis(&p)?;
            Ok(Output::new(b.to_string(), json!({ "level": b, "stairs": stairs })))
        }
        Command::CmType(i) => {
            let p = read_input(i)?;
            let q = match g.field {
                FieldArg::Prime(q) => q,
                FieldArg::Rationals => {
                    return Err(Error::InvalidArgument("cm-type needs a prime field".into()));
                }
            };
            let s = cm_type_via_socle(&p, q, g.seed, &opts)?;
            Ok(Output::new(s.cm_type.to_string(), serde_json::to_value(&s).expect("serializes")))
        }
        Command::FussCatalan { p, n } => {
            let c = fuss_catalan(*p, *n)?;
            Ok(Output::new(c.to_string(), json!({ "p": p, "n": n, "value": c.to_string() })))
        }
        Command::Enumerate { n, mod_symmetry, count } => {
            let all = enumerate_polyominoes_up_to(*n, *mod_symmetry, (*n).max(1))?;
            if *count {
                return Ok(Output::new(all.len().to_string(), json!({ "n": n, "count": all.len() })));
            }
            let lines: Vec<String> = all.iter().map(format_cells).collect();
            Ok(Output::new(lines.join("\n"), json!({ "n": n, "polyominoes": lines })))
        }
        Command::Campaign { max_rank, checks, fixed } => {
            let set: BTreeSet<Check> = if checks.is_empty() {
                Check::ALL.into_iter().collect()
            } else {
                checks.iter().map(|c| c.parse()).collect::<Result<_>>()?
            };
            let copts = CampaignOptions { mod_symmetry: !fixed, gb: opts, zigzag_budget: g.budget_zigzag };
            let rep = run_campaign(*max_rank, &set, &copts)?;
            // JSONL body; the summary goes to stderr so the body stays machine readable
            let mut out = Output::new(rep.to_jsonl().trim_end().to_string(), Value::Null);
            out.json = Value::Null;
            eprintln!("{}", rep.summary_json());
            if !rep.is_success() {
                out.code = EXIT_FAILURE;
            }
            Ok(out)
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing to `stdout` and `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    let out = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let body = if cli.global.json && !out.json.is_null() {
        serde_json::to_string_pretty(&out.json).expect("json serializes")
    } else {
        out.text
    };
    let written = match &cli.global.output {
        Some(path) => std::fs::write(path, body + "\n").map_err(|e| e.to_string()),
        None => match writeln!(stdout, "{body}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            w => w.map_err(|e| e.to_string()),
        },
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_FAILURE;
    }
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("polyomino").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn field_names() {
        assert_eq!(parse_field("gf32003").unwrap(), FieldArg::Prime(32003));
        assert_eq!(parse_field("Q").unwrap(), FieldArg::Rationals);
        assert!(parse_field("gf12").is_err());
        assert!(parse_field("r").is_err());
    }

    #[test]
    fn parse_errors_exit_2() {
        assert_eq!(run_str(&["ideal", "--cells", "{{1,1}"]).0, EXIT_PARSE);
        assert_eq!(run_str(&["nonsense"]).0, EXIT_PARSE);
        assert_eq!(run_str(&["ideal"]).0, EXIT_PARSE);
    }

    #[test]
    fn domain_errors_exit_4() {
        let (code, _, err) = run_str(&["level", "--cells", "{{1,1},{1,2},{2,1},{2,2}}"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("not a path"));
    }

    #[test]
    fn budget_exits_3() {
        let (code, _, _) = run_str(&["groebner", "--cells", "{{1,1},{2,1},{2,2},{3,2}}", "--budget-pairs", "1"]);
        assert_eq!(code, EXIT_BUDGET);
    }
}
