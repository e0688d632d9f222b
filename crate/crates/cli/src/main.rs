use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use unimodal::chains::{aigner_scd, gk_scd, recursive_scd, ChainDecomposition};
use unimodal::injections::{gk_successor, prefix_swap_successor};
use unimodal::operators::FieldSpec;
use unimodal::subset::Subset;
use unimodal_cli::runners::{self, Bounds};
use unimodal_cli::{export_dot, render_json, render_lines};

/// Exact verification of Boolean-lattice combinatorics: binomials, subset
/// injections, symmetric chain decompositions, Sperner bounds, symmetric
/// unimodal polynomials, raising/lowering operators, and Chebyshev's prime
/// bounds.
#[derive(Parser)]
#[command(name = "unimodal", version)]
struct Cli {
    /// Emit one JSON document instead of line-delimited records.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Binomial coefficient checks: dual definitions and monotonicity.
    Binomial {
        #[command(subcommand)]
        cmd: VerifyBinomial,
    },
    /// Apply a successor rule to one subset.
    Inject(InjectArgs),
    /// Symmetric chain decompositions: build, export, compare.
    Chains {
        #[command(subcommand)]
        cmd: ChainsCmd,
    },
    /// Antichain bounds: LYM sums, chain bound, exhaustive maxima.
    Sperner {
        #[command(subcommand)]
        cmd: VerifySperner,
    },
    /// Symmetric unimodal polynomial algebra.
    Zpoly {
        #[command(subcommand)]
        cmd: VerifyZpoly,
    },
    /// Raising/lowering operator identities and ranks.
    Operators {
        #[command(subcommand)]
        cmd: VerifyOperators,
    },
    /// Prime bounds from the central binomial coefficient.
    Chebyshev {
        #[command(subcommand)]
        cmd: VerifyChebyshev,
    },
    /// Run every suite at the named profile's bounds.
    All {
        #[arg(long, default_value = "desk")]
        profile: String,
        /// Seed for the randomized batches.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyBinomial {
    Verify {
        #[arg(long, default_value_t = 60)]
        n_max: u32,
    },
}

#[derive(Args)]
struct InjectArgs {
    #[arg(long)]
    n: u8,
    /// Comma-separated 1-based elements, e.g. 1,2,4,11. Omit for the empty set.
    #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
    set: Vec<String>,
    #[arg(long, value_enum)]
    rule: Rule,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    PrefixSwap,
    Gk,
}

#[derive(Subcommand)]
enum ChainsCmd {
    /// Build one decomposition and print its chains.
    Build {
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum)]
        method: Method,
        /// Also write a DOT rendering to this file.
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
    },
    /// Check the cross-construction equivalences at one n.
    Compare {
        #[arg(long)]
        n: u8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursive,
    Aigner,
    Gk,
}

#[derive(Subcommand)]
enum VerifySperner {
    Verify {
        #[arg(long)]
        n: u8,
        /// Run the exhaustive antichain enumeration (n <= 6).
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyZpoly {
    Verify {
        /// Largest dice power to check.
        #[arg(long, default_value_t = 50)]
        dice: u32,
        /// One extra mixed product to check, as "m,n,k".
        #[arg(long, value_parser = parse_mixed)]
        mixed: Option<(u32, u32, u32)>,
    },
}

#[derive(Subcommand)]
enum VerifyOperators {
    Verify {
        #[arg(long)]
        n: u8,
        /// "rational" or "gfp:P" for a prime P > 2n.
        #[arg(long, default_value = "rational", value_parser = parse_field)]
        field: FieldSpec,
    },
}

#[derive(Subcommand)]
enum VerifyChebyshev {
    Verify {
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
    },
}

fn parse_mixed(value: &str) -> Result<(u32, u32, u32), String> {
    let parts: Vec<&str> = value.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected \"m,n,k\", got {value:?}"));
    }
    let parse = |s: &str| s.trim().parse::<u32>().map_err(|_| format!("bad count {s:?}"));
    Ok((parse(parts[0])?, parse(parts[1])?, parse(parts[2])?))
}

fn parse_field(value: &str) -> Result<FieldSpec, String> {
    if value == "rational" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(p) = value.strip_prefix("gfp:") {
        let p: u64 = p.parse().map_err(|_| format!("bad prime in {value:?}"))?;
        return Ok(FieldSpec::GfP(p));
    }
    Err(format!("expected \"rational\" or \"gfp:P\", got {value:?}"))
}

fn parse_set(n: u8, parts: &[String]) -> Result<Subset, String> {
    let mut elements = Vec::new();
    for part in parts.iter().filter(|p| !p.is_empty()) {
        let e: u32 = part.parse().map_err(|_| format!("bad element {part:?}"))?;
        elements.push(e);
    }
    Subset::from_elements(n, &elements).map_err(|e| e.to_string())
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn emit(suites: Vec<unimodal::report::SuiteReport>, json: bool) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    let code = if json {
        render_json(suites, &mut stdout)
    } else {
        render_lines(&suites, &mut stdout)
    };
    match code {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn build_decomposition(n: u8, method: Method) -> Result<ChainDecomposition, String> {
    let built = match method {
        Method::Recursive => recursive_scd(n),
        Method::Aigner => aigner_scd(n),
        Method::Gk => gk_scd(n),
    };
    built.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match cli.command {
        Command::Binomial { cmd: VerifyBinomial::Verify { n_max } } => {
            emit(vec![runners::binomial_suite(n_max)], json)
        }
        Command::Inject(args) => {
            let set = match parse_set(args.n, &args.set) {
                Ok(set) => set,
                Err(message) => return usage_error(&message),
            };
            match args.rule {
                Rule::PrefixSwap => match prefix_swap_successor(&set) {
                    Ok(out) => {
                        if json {
                            println!(
                                "{}",
                                json!({ "rule": "prefix-swap", "input": set.to_string(),
                                        "image": out.image.to_string(), "r": out.r })
                            );
                        } else {
                            println!("{}", out.image);
                            println!("r={}", out.r);
                        }
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage_error(&e.to_string()),
                },
                Rule::Gk => {
                    let successor = gk_successor(&set);
                    if json {
                        println!(
                            "{}",
                            json!({ "rule": "gk", "input": set.to_string(),
                                    "successor": successor.map(|s| s.to_string()) })
                        );
                    } else {
                        match successor {
                            Some(s) => println!("{s}"),
                            None => println!("none (chain ends)"),
                        }
                    }
                    ExitCode::SUCCESS
                }
            }
        }
        Command::Chains { cmd: ChainsCmd::Build { n, method, dot } } => {
            let dec = match build_decomposition(n, method) {
                Ok(dec) => dec,
                Err(message) => return usage_error(&message),
            };
            if let Some(path) = dot {
                if let Err(e) = std::fs::File::create(&path)
                    .and_then(|mut f| f.write_all(export_dot(&dec).as_bytes()))
                {
                    return usage_error(&format!("writing {}: {e}", path.display()));
                }
            }
            if json {
                let chains: Vec<Vec<String>> = dec
                    .chains()
                    .iter()
                    .map(|c| c.subsets().iter().map(|s| s.to_string()).collect())
                    .collect();
                println!("{}", json!({ "n": n, "chains": chains }));
            } else {
                for chain in dec.chains() {
                    println!("{chain}");
                }
            }
            ExitCode::SUCCESS
        }
        Command::Chains { cmd: ChainsCmd::Compare { n } } => {
            if n == 0 || n > 16 {
                return usage_error("chains compare supports 1 <= n <= 16");
            }
            emit(vec![runners::chains_compare_suite(n)], json)
        }
        Command::Sperner { cmd: VerifySperner::Verify { n, exhaustive, samples, seed } } => {
            if n == 0 || n > 14 {
                return usage_error("sperner verify supports 1 <= n <= 14");
            }
            if exhaustive && n > 6 {
                return usage_error("exhaustive enumeration is capped at n = 6");
            }
            emit(vec![runners::sperner_suite_single(n, exhaustive, samples, seed)], json)
        }
        Command::Zpoly { cmd: VerifyZpoly::Verify { dice, mixed } } => {
            let mut bounds = Bounds::desk();
            bounds.zpoly_dice_max = dice;
            emit(vec![runners::zpoly_suite(&bounds, mixed)], json)
        }
        Command::Operators { cmd: VerifyOperators::Verify { n, field } } => {
            if n == 0 || n > 12 {
                return usage_error("operators verify supports 1 <= n <= 12");
            }
            if let FieldSpec::GfP(p) = field {
                if !unimodal::operators::is_prime(p) || p <= 2 * u64::from(n) {
                    return usage_error(&format!("gfp:{p} needs a prime p > 2n = {}", 2 * n));
                }
            }
            emit(vec![runners::operators_suite_single(field, n)], json)
        }
        Command::Chebyshev { cmd: VerifyChebyshev::Verify { limit } } => {
            if limit < 3 {
                return usage_error("chebyshev verify needs --limit >= 3");
            }
            let central = 2000.min(limit);
            emit(vec![runners::chebyshev_suite(limit, central)], json)
        }
        Command::All { profile, seed } => {
            if profile != "desk" {
                return usage_error(&format!("unknown profile {profile:?}; only \"desk\" exists"));
            }
            let mut bounds = Bounds::desk();
            bounds.seed = seed;
            emit(runners::all_desk(&bounds), json)
        }
    }
}
