//! Command-line front end: spectral queries, generators, recognition, the
//! oracle cross-check, and the scaling benchmark. JSON output by default,
//! `--pretty` for a human-readable rendering.

use crate::cotree::{
    build_balanced, build_family_kab, build_family_pk2, from_graph, parse_expression,
    random_cotree, to_dot, BalancedSpec, Cotree, Graph, RandomShape,
};
use crate::diagonalize::{count_in_interval, eigen_counts, eigen_counts_float, multiplicity};
use crate::rational::{format_rational, parse_rational, rational_from_pair, Rational};
use crate::spectra::{energy, full_spectrum, is_borderenergetic, Location, SpectrumReport};
use crate::verify::{run_verify, VerifyConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "cograph-spectra",
    version,
    about = "Eigenvalue locations, multiplicities, spectra and energy of cographs, computed on the cotree"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

/// Mutually exclusive graph sources shared by the query subcommands.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Cograph expression, e.g. "3*2(1*1)"
    #[arg(long)]
    expr: Option<String>,
    /// Balanced cotree spec, e.g. "T(3,2,0|0,0,2)@J"
    #[arg(long)]
    balanced: Option<String>,
    /// Family selector: "kab:a,b" or "pk2:p"
    #[arg(long)]
    family: Option<String>,
    /// Edge-list file ("n m" header, then "u v" lines)
    #[arg(long)]
    graph_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Full spectrum: exact entries plus inertia-certified brackets
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        /// Bracket width for irrational eigenvalues
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "1/1048576")]
        epsilon: Rational,
        #[arg(long)]
        pretty: bool,
    },
    /// Multiplicity of one eigenvalue
    Mult {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long)]
        pretty: bool,
    },
    /// Eigenvalue counts above / at / below a point
    Counts {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        at: Rational,
        #[arg(long)]
        pretty: bool,
    },
    /// Number of eigenvalues in an interval
    Interval {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        lo: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        hi: Rational,
        /// Exclude the lower endpoint
        #[arg(long)]
        open_lo: bool,
        /// Exclude the upper endpoint
        #[arg(long)]
        open_hi: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Graph energy (sum of absolute eigenvalues)
    Energy {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "1/1048576")]
        epsilon: Rational,
        #[arg(long)]
        pretty: bool,
    },
    /// Check whether the energy equals that of the complete graph
    Borderenergetic {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        pretty: bool,
    },
    /// Emit a generated cograph as an expression, edge list, or DOT
    Gen {
        /// Family selector: "kab:a,b" or "pk2:p"
        #[arg(long, group = "source", required_unless_present = "balanced")]
        family: Option<String>,
        /// Balanced cotree spec
        #[arg(long, group = "source")]
        balanced: Option<String>,
        #[arg(long, value_enum, default_value_t = EmitFormat::Expr)]
        emit: EmitFormat,
    },
    /// Build the cotree of a graph or report an induced P4
    Recognize {
        #[arg(long)]
        graph_file: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Cross-check the cotree algorithm against the dense oracle
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
        #[arg(long, default_value_t = 32)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        rational_shifts: usize,
        #[arg(long)]
        pretty: bool,
    },
    /// Time eigenvalue counting across sizes; emits CSV
    Bench {
        /// Comma-separated ascending vertex counts
        #[arg(long, required = true)]
        sizes: String,
        #[arg(long, value_enum, default_value_t = Backend::Exact)]
        backend: Backend,
        /// "pk2", "kab", or "random"
        #[arg(long, default_value = "pk2")]
        shape: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Refuse the exact backend above this size
        #[arg(long, default_value_t = 100_000)]
        exact_ceiling: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitFormat {
    Expr,
    Edges,
    Dot,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Backend {
    Exact,
    Float,
}

/// Parses argv and runs one subcommand. Exit codes: 0 success, 1 domain
/// error, 2 usage error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(CmdError::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
    }
}

enum CmdError {
    Domain(String),
    Usage(String),
}

fn domain<E: std::fmt::Display>(e: E) -> CmdError {
    CmdError::Domain(e.to_string())
}

fn parse_family(selector: &str) -> Result<Cotree, CmdError> {
    if let Some(rest) = selector.strip_prefix("kab:") {
        let parts: Vec<&str> = rest.split(',').collect();
        let [a, b] = parts.as_slice() else {
            return Err(CmdError::Usage(format!(
                "--family kab needs `kab:a,b`, got `{selector}`"
            )));
        };
        let a: u64 = a.trim().parse().map_err(|_| {
            CmdError::Usage(format!("--family kab: bad integer in `{selector}`"))
        })?;
        let b: u64 = b.trim().parse().map_err(|_| {
            CmdError::Usage(format!("--family kab: bad integer in `{selector}`"))
        })?;
        build_family_kab(a, b).map_err(domain)
    } else if let Some(rest) = selector.strip_prefix("pk2:") {
        let p: u64 = rest.trim().parse().map_err(|_| {
            CmdError::Usage(format!("--family pk2 needs `pk2:p`, got `{selector}`"))
        })?;
        build_family_pk2(p).map_err(domain)
    } else {
        Err(CmdError::Usage(format!(
            "--family must be `kab:a,b` or `pk2:p`, got `{selector}`"
        )))
    }
}

fn load_input(input: &InputArgs) -> Result<Cotree, CmdError> {
    if let Some(expr) = &input.expr {
        parse_expression(expr).map_err(domain)
    } else if let Some(spec) = &input.balanced {
        let spec = BalancedSpec::parse(spec).map_err(domain)?;
        build_balanced(&spec).map_err(domain)
    } else if let Some(family) = &input.family {
        parse_family(family)
    } else if let Some(path) = &input.graph_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CmdError::Usage(format!("--graph-file {}: {e}", path.display())))?;
        let graph = Graph::parse_edge_list(&text).map_err(domain)?;
        from_graph(&graph).map_err(domain)
    } else {
        Err(CmdError::Usage("no input source given".into()))
    }
}

fn print_spectrum(report: &SpectrumReport, pretty: bool) {
    if pretty {
        println!("n = {}", report.n);
        for e in &report.entries {
            match &e.location {
                Location::Exact(v) => {
                    println!("  {:>12}  x{}", format_rational(v), e.mult)
                }
                Location::Interval { lo, hi } => println!(
                    "  ({}, {})  x{}",
                    format_rational(lo),
                    format_rational(hi),
                    e.mult
                ),
            }
        }
        println!("residual width = {}", format_rational(&report.residual_width));
    } else {
        println!("{}", report.to_json());
    }
}

fn dispatch(command: Command) -> Result<(), CmdError> {
    match command {
        Command::Spectrum {
            input,
            epsilon,
            pretty,
        } => {
            let tree = load_input(&input)?;
            let report = full_spectrum(&tree, &epsilon).map_err(domain)?;
            print_spectrum(&report, pretty);
            Ok(())
        }
        Command::Mult {
            input,
            lambda,
            pretty,
        } => {
            let tree = load_input(&input)?;
            let m = multiplicity(&tree, &lambda);
            if pretty {
                println!("m({}) = {m}", format_rational(&lambda));
            } else {
                println!(
                    "{}",
                    json!({"lambda": format_rational(&lambda), "multiplicity": m})
                );
            }
            Ok(())
        }
        Command::Counts { input, at, pretty } => {
            let tree = load_input(&input)?;
            let c = eigen_counts(&tree, &at);
            if pretty {
                println!(
                    "at {}: {} above, {} equal, {} below",
                    format_rational(&at),
                    c.greater,
                    c.equal,
                    c.less
                );
            } else {
                println!(
                    "{}",
                    json!({
                        "at": format_rational(&at),
                        "greater": c.greater,
                        "equal": c.equal,
                        "less": c.less,
                    })
                );
            }
            Ok(())
        }
        Command::Interval {
            input,
            lo,
            hi,
            open_lo,
            open_hi,
            pretty,
        } => {
            let tree = load_input(&input)?;
            let count =
                count_in_interval(&tree, &lo, &hi, !open_lo, !open_hi).map_err(domain)?;
            if pretty {
                let lb = if open_lo { '(' } else { '[' };
                let rb = if open_hi { ')' } else { ']' };
                println!(
                    "{lb}{}, {}{rb}: {count} eigenvalues",
                    format_rational(&lo),
                    format_rational(&hi)
                );
            } else {
                println!(
                    "{}",
                    json!({
                        "lo": format_rational(&lo),
                        "hi": format_rational(&hi),
                        "include_lo": !open_lo,
                        "include_hi": !open_hi,
                        "count": count,
                    })
                );
            }
            Ok(())
        }
        Command::Energy {
            input,
            epsilon,
            pretty,
        } => {
            let tree = load_input(&input)?;
            let result = energy(&tree, &epsilon).map_err(domain)?;
            if pretty {
                match &result.exact {
                    Some(e) => println!("energy = {}", format_rational(e)),
                    None => println!(
                        "energy in [{}, {}]",
                        format_rational(&result.lower),
                        format_rational(&result.upper)
                    ),
                }
            } else {
                println!("{}", result.to_json());
            }
            Ok(())
        }
        Command::Borderenergetic { input, pretty } => {
            let tree = load_input(&input)?;
            let (verdict, result, cospectral) = is_borderenergetic(&tree).map_err(domain)?;
            if pretty {
                println!(
                    "borderenergetic: {verdict} (cospectral to complete: {cospectral})"
                );
            } else {
                println!(
                    "{}",
                    json!({
                        "verdict": verdict,
                        "energy": result.to_json(),
                        "cospectral_to_complete": cospectral,
                    })
                );
            }
            Ok(())
        }
        Command::Gen {
            family,
            balanced,
            emit,
        } => {
            let tree = if let Some(selector) = &family {
                parse_family(selector)?
            } else if let Some(spec) = &balanced {
                let spec = BalancedSpec::parse(spec).map_err(domain)?;
                build_balanced(&spec).map_err(domain)?
            } else {
                return Err(CmdError::Usage("gen needs --family or --balanced".into()));
            };
            match emit {
                EmitFormat::Expr => println!("{}", tree.to_expression()),
                EmitFormat::Edges => print!("{}", tree.to_graph().to_edge_list()),
                EmitFormat::Dot => print!("{}", to_dot(&tree)),
            }
            Ok(())
        }
        Command::Recognize { graph_file, pretty } => {
            let text = std::fs::read_to_string(&graph_file).map_err(|e| {
                CmdError::Usage(format!("--graph-file {}: {e}", graph_file.display()))
            })?;
            let graph = Graph::parse_edge_list(&text).map_err(domain)?;
            match from_graph(&graph) {
                Ok(tree) => {
                    if pretty {
                        println!("cograph: {}", tree.to_expression());
                    } else {
                        println!(
                            "{}",
                            json!({
                                "cograph": true,
                                "expression": tree.to_expression(),
                                "canonical": tree.canonical_form(),
                            })
                        );
                    }
                    Ok(())
                }
                Err(not_cograph) => {
                    if pretty {
                        println!(
                            "not a cograph: induced P4 on {:?}",
                            not_cograph.witness
                        );
                    } else {
                        println!(
                            "{}",
                            json!({"cograph": false, "witness": not_cograph.witness})
                        );
                    }
                    Err(CmdError::Domain("graph contains an induced P4".into()))
                }
            }
        }
        Command::Verify {
            seed,
            cases,
            max_n,
            rational_shifts,
            pretty,
        } => {
            let report = run_verify(&VerifyConfig {
                seed,
                cases,
                max_n,
                rational_shifts,
            });
            if pretty {
                println!(
                    "{} cases, {} checks, {} mismatches",
                    report.cases,
                    report.checks,
                    report.mismatches.len()
                );
            } else {
                println!("{}", report.to_json());
            }
            if report.passed() {
                Ok(())
            } else {
                Err(CmdError::Domain(format!(
                    "{} oracle mismatches",
                    report.mismatches.len()
                )))
            }
        }
        Command::Bench {
            sizes,
            backend,
            shape,
            seed,
            exact_ceiling,
        } => run_bench(&sizes, backend, &shape, seed, exact_ceiling),
    }
}

fn bench_tree(shape: &str, size: usize, seed: u64) -> Result<Cotree, CmdError> {
    match shape {
        "pk2" => {
            let p = ((size.saturating_sub(4)) / 4).max(1) as u64;
            build_family_pk2(p).map_err(domain)
        }
        "kab" => {
            // a = b grows as sqrt-ish of n = a + b(a-1)(b-1)
            let mut a = 2u64;
            while {
                let next = a + 1;
                next + next * (next - 1) * (next - 1) <= size as u64
            } {
                a += 1;
            }
            build_family_kab(a, a).map_err(domain)
        }
        "random" => Ok(random_cotree(size, seed, &RandomShape::default())),
        other => Err(CmdError::Usage(format!(
            "--shape must be pk2, kab, or random, got `{other}`"
        ))),
    }
}

fn run_bench(
    sizes: &str,
    backend: Backend,
    shape: &str,
    seed: u64,
    exact_ceiling: usize,
) -> Result<(), CmdError> {
    let sizes: Vec<usize> = sizes
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CmdError::Usage(format!("--sizes: bad integer `{s}`")))
        })
        .collect::<Result<_, _>>()?;
    if sizes.is_empty() {
        return Err(CmdError::Usage("--sizes must not be empty".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CmdError::Usage("--sizes must be strictly ascending".into()));
    }
    if backend == Backend::Exact {
        if let Some(&over) = sizes.iter().find(|&&s| s > exact_ceiling) {
            return Err(CmdError::Domain(format!(
                "exact backend refused for size {over} above ceiling {exact_ceiling}"
            )));
        }
    }
    let shifts_exact = [
        rational_from_pair(-1, 1),
        rational_from_pair(0, 1),
        rational_from_pair(2, 1),
    ];
    let shifts_float = [-1.0f64, 0.0, 2.0];
    println!("n,backend,total_seconds,per_leaf_ns");
    for &size in &sizes {
        let tree = bench_tree(shape, size, seed)?;
        let n = tree.n_leaves();
        let start = Instant::now();
        match backend {
            Backend::Exact => {
                for x in &shifts_exact {
                    let c = eigen_counts(&tree, x);
                    assert_eq!(c.greater + c.equal + c.less, n);
                }
            }
            Backend::Float => {
                for &x in &shifts_float {
                    let (g, e, l) = eigen_counts_float(&tree, x);
                    assert_eq!(g + e + l, n);
                }
            }
        }
        let elapsed = start.elapsed();
        let backend_name = match backend {
            Backend::Exact => "exact",
            Backend::Float => "float",
        };
        println!(
            "{n},{backend_name},{:.6},{:.1}",
            elapsed.as_secs_f64(),
            elapsed.as_nanos() as f64 / n as f64
        );
    }
    Ok(())
}
