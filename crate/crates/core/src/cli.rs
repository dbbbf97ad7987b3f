//! Command-line front end. [`run`] takes arguments and streams so it can be
//! driven in-process as well as from `main`.
//!
//! Exit codes: 0 when the command delivered its answer, 1 when a checked
//! identity failed, 2 for usage, parse and guard errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::colouring::{
    poly_bruteforce, poly_reduction, ReductionOptions, DEFAULT_MAX_BRUTE, DEFAULT_MAX_REDUCE,
};
use crate::error::{Error, Result};
use crate::graph::format::{parse_inline, to_inline};
use crate::graph::generate::{
    gen_complete, gen_complete_mixed, gen_cycle, gen_dn, gen_path, gen_random_mixed, gen_star,
    gen_tk2, gen_tournament, gen_transitive_tournament,
};
use crate::graph::{parse, serialize, Format, MixedGraph};
use crate::invariance::{
    chrom_invar, ochrom_equiv, ochrom_invar, InvarianceVerdict, DEFAULT_EQUIV_SEARCH,
};
use crate::poly::IntPolynomial;
use crate::roots::{
    dn_closed_form, format_rational, isolate_in, isolate_real_roots, parse_rational, root_bound,
    verify_negative_root, RootInterval, DEFAULT_PRECISION,
};
use crate::structure::{check_coefficients, predict_coefficients};
use crate::suites::{run_suite, scan_roots, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ochrom",
    version,
    about = "Exact oriented chromatic polynomials of oriented and mixed graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: GlobalConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalConfig {
    /// Input encoding; guessed from the text when omitted.
    #[arg(long, global = true, value_parser = parse_format)]
    pub format: Option<Format>,
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub out: OutputMode,
    /// Seed for randomized corpora and generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BRUTE, value_parser = parse_positive)]
    pub max_brute: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_REDUCE, value_parser = parse_positive)]
    pub max_reduce: usize,
    /// Root isolation width, in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION, value_parser = clap::value_parser!(u32).range(1..))]
    pub precision: u32,
    /// Rational bound such as `-2`, `-23/10` or `-2.302`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub threshold: Option<String>,
}

fn parse_positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Reduction,
    Bruteforce,
    Both,
}

/// Exactly one of a path (`-` for stdin) or an inline graph.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// File holding the graph, or `-` for stdin.
    pub path: Option<String>,
    /// The graph itself, e.g. `n=3;a 0 1;e 1 2` or `Bw`.
    #[arg(short, long)]
    pub graph: Option<String>,
    /// A generated family member: dn:N, star:I,O, tk2:T, tournament:N,
    /// transitive:N, complete:N, cycle:N, path:N, complete-mixed:N,
    /// random:N,PA,PE.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Oriented chromatic polynomial.
    Poly {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Reduction)]
        method: Method,
    },
    /// 2-dipath pairs, obstructions, triangles and predicted coefficients.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Is the oriented input chromatically invariant?
    Invar {
        #[command(flatten)]
        input: Input,
    },
    /// Does the simple input have a chromatically invariant orientation?
    Orient {
        #[command(flatten)]
        input: Input,
    },
    /// Is there a simple graph with the same polynomial?
    Equiv {
        #[command(flatten)]
        input: Input,
        /// Largest order for the exhaustive fallback search.
        #[arg(long, default_value_t = DEFAULT_EQUIV_SEARCH)]
        search_limit: usize,
    },
    /// Real roots of the polynomial, or a certified root below --threshold.
    Roots {
        #[command(flatten)]
        input: Input,
    },
    /// Print a generated graph in the chosen --format (mixed by default).
    Generate {
        /// Family spec as accepted by --family.
        spec: String,
    },
    /// Run a named identity suite over its corpus.
    Verify {
        /// oracle, leading, second, closure-c2, closure, equivalence, classify, star, dn,
        /// negroots, tk2, contrast or all.
        suite: String,
    },
    /// List small oriented graphs with real roots in an open window.
    Scan {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lo: String,
        #[arg(long, default_value = "32/27", allow_hyphen_values = true)]
        hi: String,
        /// Keep only graphs whose roots other than 0 and 1 all lie in the
        /// window.
        #[arg(long)]
        only_window: bool,
    },
}

/// Parses arguments and executes; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Guesses the encoding: `n=` marks mixed-text, a leading `&` digraph6,
/// anything else graph6.
pub fn detect_format(text: &str) -> Format {
    let t = text.trim_start();
    let t = t.strip_prefix(">>digraph6<<").map(|_| "&").unwrap_or(t);
    if t.starts_with('&') {
        Format::Digraph6
    } else if t.contains("n=") || t.starts_with('#') {
        Format::MixedText
    } else {
        Format::Graph6
    }
}

pub fn parse_graph(text: &str, format: Option<Format>) -> Result<MixedGraph> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::MixedText => parse_inline(text),
        f => parse(text.trim(), f),
    }
}

fn split_numbers<T: std::str::FromStr>(spec: &str, args: &str, count: usize) -> Result<Vec<T>> {
    let bad = || Error::InvalidParameter(format!("bad family spec {spec:?}"));
    let parts: Vec<T> = args
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    if parts.len() != count {
        return Err(bad());
    }
    Ok(parts)
}

/// Builds a family member from `name:args`.
pub fn family_graph(spec: &str, seed: u64) -> Result<MixedGraph> {
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameter(format!("family spec {spec:?} lacks ':'")))?;
    let one = || split_numbers::<usize>(spec, args, 1).map(|v| v[0]);
    match name {
        "dn" => gen_dn(one()?),
        "star" => {
            let v = split_numbers::<usize>(spec, args, 2)?;
            gen_star(v[0], v[1])
        }
        "tk2" => gen_tk2(one()?),
        "tournament" => gen_tournament(one()?, seed),
        "transitive" => Ok(gen_transitive_tournament(one()?)),
        "complete" => Ok(gen_complete(one()?)),
        "cycle" => gen_cycle(one()?),
        "path" => gen_path(one()?),
        "complete-mixed" => gen_complete_mixed(one()?, seed),
        "random" => {
            let v = split_numbers::<f64>(spec, args, 3)?;
            if v[0].fract() != 0.0 || v[0] < 0.0 {
                return Err(Error::InvalidParameter(format!("bad family spec {spec:?}")));
            }
            gen_random_mixed(v[0] as usize, v[1], v[2], seed)
        }
        _ => Err(Error::Unknown {
            what: "family",
            name: name.to_string(),
        }),
    }
}

fn read_input(input: &Input, cfg: &GlobalConfig, stdin: &mut dyn Read) -> Result<MixedGraph> {
    if let Some(spec) = &input.family {
        return family_graph(spec, cfg.seed);
    }
    let text = match (&input.path, &input.graph) {
        (_, Some(inline)) => inline.clone(),
        (Some(p), None) if p == "-" => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidParameter(format!("reading stdin: {e}")))?;
            s
        }
        (Some(p), None) => std::fs::read_to_string(Path::new(p))
            .map_err(|e| Error::InvalidParameter(format!("reading {p}: {e}")))?,
        (None, None) => unreachable!("clap enforces one input"),
    };
    parse_graph(&text, cfg.format)
}

fn emit(out: &mut dyn Write, mode: OutputMode, value: &Value, text: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidParameter(format!("writing output: {e}"));
    match mode {
        OutputMode::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        )
        .map_err(io),
        OutputMode::Text => write!(out, "{text}").map_err(io),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn poly_json(p: &IntPolynomial) -> Value {
    json!({ "coefficients": p.to_decimal_strings(), "text": p.to_string() })
}

fn interval_text(iv: &RootInterval) -> String {
    if iv.is_exact() {
        format!("{}\n", format_rational(&iv.lo))
    } else {
        format!(
            "({}, {})  ~ {:.12}\n",
            format_rational(&iv.lo),
            format_rational(&iv.hi),
            iv.approx()
        )
    }
}

fn verdict_text(v: &InvarianceVerdict) -> String {
    let cert = v
        .certificate
        .as_ref()
        .map(|c| serde_json::to_string(c).expect("serializable"))
        .unwrap_or_else(|| "none".into());
    format!(
        "{}\ncertificate: {cert}\n",
        to_value(&v.verdict).as_str().unwrap_or_default()
    )
}

fn suite_config(cfg: &GlobalConfig) -> SuiteConfig {
    SuiteConfig {
        seed: cfg.seed,
        max_brute: cfg.max_brute,
        max_reduce: cfg.max_reduce,
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    let cfg = &cli.config;
    let reduce_opts = ReductionOptions {
        max_vertices: cfg.max_reduce,
        ..ReductionOptions::default()
    };
    match &cli.command {
        Command::Poly { input, method } => {
            let g = read_input(input, cfg, stdin)?;
            let mut value = json!({ "graph": to_inline(&g), "vertices": g.n() });
            let text;
            let reduction = match method {
                Method::Bruteforce => None,
                _ => Some(poly_reduction(&g, reduce_opts)?),
            };
            let brute = match method {
                Method::Reduction => None,
                _ => Some(poly_bruteforce(&g, cfg.max_brute)?),
            };
            if let Some((p, stats)) = &reduction {
                value["reduction"] = poly_json(p);
                value["stats"] = to_value(stats);
            }
            if let Some(p) = &brute {
                value["bruteforce"] = poly_json(p);
            }
            let mut code = EXIT_OK;
            match (&reduction, &brute) {
                (Some((r, _)), Some(b)) => {
                    let agree = r == b;
                    value["agree"] = json!(agree);
                    text = format!(
                        "reduction:  {r}\nbruteforce: {b}\n{}\n",
                        if agree { "agree" } else { "MISMATCH" }
                    );
                    if !agree {
                        code = EXIT_MISMATCH;
                    }
                }
                (Some((r, _)), None) => text = format!("{r}\n"),
                (None, Some(b)) => text = format!("{b}\n"),
                (None, None) => unreachable!(),
            }
            emit(out, cfg.out, &value, &text)?;
            Ok(code)
        }
        Command::Analyze { input } => {
            let g = read_input(input, cfg, stdin)?;
            let report = predict_coefficients(&g);
            let (p, _) = poly_reduction(&g, reduce_opts)?;
            let check = check_coefficients(&report, &p);
            let value = json!({
                "graph": to_inline(&g),
                "structure": to_value(&report),
                "polynomial": poly_json(&p),
                "check": to_value(&check),
                "agrees": check.agrees(),
                "closure_agrees": check.closure_agrees(),
            });
            let text = format!(
                "vertices: {}\narcs: {}\nedges: {}\ndipath pairs: {:?}\nobstructing pairs: {:?}\ntriangles: {}\n\
                 polynomial: {p}\nc1 predicted {} actual {}\nc2 predicted {} actual {}\nc2 via closure {} ({} triangles in U(G*))\n{}\n",
                report.vertex_count,
                report.arc_count,
                report.edge_count,
                report.dipath_pairs,
                report.obstructing_pairs,
                report.triangle_count,
                check.predicted_c1,
                check.actual_c1,
                check.predicted_c2,
                check.actual_c2,
                check.closure_c2,
                report.closure_triangle_count,
                if check.agrees() { "agree" } else { "MISMATCH" },
            );
            emit(out, cfg.out, &value, &text)?;
            Ok(if check.agrees() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Invar { input } | Command::Orient { input } | Command::Equiv { input, .. } => {
            let g = read_input(input, cfg, stdin)?;
            let v = match &cli.command {
                Command::Invar { .. } => ochrom_invar(&g)?,
                Command::Orient { .. } => chrom_invar(&g)?,
                Command::Equiv { search_limit, .. } => ochrom_equiv(&g, *search_limit)?,
                _ => unreachable!(),
            };
            emit(out, cfg.out, &to_value(&v), &verdict_text(&v))?;
            Ok(EXIT_OK)
        }
        Command::Roots { input } => {
            let threshold = cfg.threshold.as_deref().map(parse_rational).transpose()?;
            if let (Some(t), Some(spec)) = (&threshold, &input.family) {
                if let Some(n) = spec
                    .strip_prefix("dn:")
                    .and_then(|s| s.trim().parse::<usize>().ok())
                {
                    if n >= 6 && n % 2 == 0 {
                        let report = verify_negative_root(n, t)?;
                        let text = match &report.witness {
                            Some(w) => {
                                format!("root below {}: {}", format_rational(t), interval_text(w))
                            }
                            None => format!("no root below {}\n", format_rational(t)),
                        };
                        let text = format!("f(-{n}) > 0: {}\n{text}", report.positive_at_minus_n);
                        emit(out, cfg.out, &to_value(&report), &text)?;
                        return Ok(EXIT_OK);
                    }
                }
            }
            let p = match &input.family {
                Some(spec) if spec.starts_with("dn:") && threshold.is_none() => {
                    let n = split_numbers::<usize>(spec, &spec[3..], 1)?[0];
                    dn_closed_form(n)?
                }
                _ => poly_reduction(&read_input(input, cfg, stdin)?, reduce_opts)?.0,
            };
            let roots = match &threshold {
                Some(t) if p.degree().unwrap_or(0) > 0 => {
                    let b = -root_bound(&p);
                    if *t > b {
                        isolate_in(&p, &b, t, cfg.precision)
                    } else {
                        Vec::new()
                    }
                }
                Some(_) => Vec::new(),
                None => isolate_real_roots(&p, cfg.precision),
            };
            let value = json!({
                "polynomial": poly_json(&p),
                "precision": cfg.precision,
                "threshold": threshold.as_ref().map(format_rational),
                "roots": to_value(&roots),
            });
            let mut text = format!("polynomial: {p}\n");
            for iv in &roots {
                text.push_str(&interval_text(iv));
            }
            emit(out, cfg.out, &value, &text)?;
            Ok(EXIT_OK)
        }
        Command::Generate { spec } => {
            let g = family_graph(spec, cfg.seed)?;
            let s = serialize(&g, cfg.format.unwrap_or(Format::MixedText))?;
            let s = if s.ends_with('\n') {
                s
            } else {
                format!("{s}\n")
            };
            emit(out, cfg.out, &json!({ "graph": s.trim_end() }), &s)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite } => {
            let reports = run_suite(suite, &suite_config(cfg))?;
            let ok = reports.iter().all(|r| r.ok());
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!("{r}\n"));
                for f in &r.failures {
                    text.push_str(&format!("  FAIL {f}\n"));
                }
            }
            emit(out, cfg.out, &to_value(&reports), &text)?;
            Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Scan {
            max_n,
            lo,
            hi,
            only_window,
        } => {
            let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
            if lo >= hi {
                return Err(Error::InvalidParameter("scan window is empty".into()));
            }
            let hits = scan_roots(*max_n, &lo, &hi, *only_window, &suite_config(cfg))?;
            let mut text = format!(
                "{} graph(s) with roots in ({}, {})\n",
                hits.len(),
                format_rational(&lo),
                format_rational(&hi)
            );
            for h in &hits {
                text.push_str(&format!(
                    "{}  {}  ({} of {} roots)\n",
                    h.graph, h.polynomial, h.roots_in_window, h.roots_total
                ));
            }
            emit(out, cfg.out, &to_value(&hits), &text)?;
            Ok(EXIT_OK)
        }
    }
}
