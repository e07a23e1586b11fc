use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use altchain_core::chainfile::{read_chain, write_chain};
use altchain_core::method1;
use altchain_core::method2::verify_chain_identities;
use altchain_core::method3;
use altchain_core::nathanson::valid_params;
use altchain_core::report::reference_table;
use altchain_core::{
    analyze_modulus, build_base, generate_chain_m1, generate_chain_m2, generate_chain_m3,
    growth_table, parse_set_literal, profile, render_table, search_moduli, validate_chain, Chain,
    IntSet, MethodTag, TableFormat, ValidationReport,
};
use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "altchain",
    version,
    about = "Alternating MSTD/MDTS chains without filling in"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class with |A+A| and |A-A|.
    Classify {
        #[arg(long, value_parser = parse_set)]
        set: IntSet,
    },
    /// Print cardinalities, diameter, density and class.
    Profile {
        #[arg(long, value_parser = parse_set)]
        set: IntSet,
    },
    /// Generate a chain and print it (or write it with --out).
    Chain {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        method: u8,
        /// Method 1 base set.
        #[arg(long, value_parser = parse_set)]
        set: Option<IntSet>,
        /// Method 1 modulus; defaults to the smallest valid one.
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, default_value_t = 4)]
        m: i64,
        #[arg(long, default_value_t = 1)]
        d: i64,
        #[arg(long, default_value_t = 3)]
        k: i64,
        /// Number of sets.
        #[arg(long, default_value_t = 7)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ChainFormat::Chain)]
        format: ChainFormat,
    },
    /// Print every valid Method 1 modulus in (max A, 2 max A].
    SearchModulus {
        #[arg(long, value_parser = parse_set)]
        set: IntSet,
    },
    /// Validate a chain file; exits 1 on any violation.
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
    /// Regenerate a reference table (4 is the growth summary).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        paper: u8,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Generate and verify a chain for every valid parameter triple.
    ScanParams {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=2))]
        method: u8,
        #[arg(long, default_value_t = 16)]
        max_m: i64,
        #[arg(long, default_value_t = 6)]
        max_k: i64,
        #[arg(long, default_value_t = 25)]
        steps: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Markdown,
    Csv,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Markdown => TableFormat::Markdown,
            Format::Csv => TableFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChainFormat {
    Chain,
    Markdown,
    Csv,
}

fn parse_set(s: &str) -> Result<IntSet, String> {
    parse_set_literal(s).map_err(|e| e.to_string())
}

/// Input that could not be read or parsed; mapped to exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

/// `Ok(false)` means a verification ran and found violations.
fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Classify { set } => {
            let p = profile(&set)?;
            println!("{} {} {}", p.class(), p.sum_card, p.diff_card);
        }
        Command::Profile { set } => {
            let p = profile(&set)?;
            println!("class: {}", p.class());
            println!("cardinality: {}", p.card);
            println!("sumcard: {}", p.sum_card);
            println!("diffcard: {}", p.diff_card);
            println!("diameter: {}", p.diameter);
            println!("density: {}", p.density);
        }
        Command::Chain {
            method,
            set,
            n,
            m,
            d,
            k,
            steps,
            out,
            format,
        } => {
            let chain = match method {
                1 => {
                    let Some(base) = set else {
                        return Err(Usage("--method 1 needs --set".into()).into());
                    };
                    let n = match n {
                        Some(n) => n,
                        None => *search_moduli(&base)?
                            .first()
                            .context("no valid modulus in (max A, 2 max A]")?,
                    };
                    generate_chain_m1(&base, n, steps)?
                }
                2 => generate_chain_m2(&build_base(m, d, k)?, steps)?,
                _ => generate_chain_m3(steps)?,
            };
            let text = match format {
                ChainFormat::Chain => write_chain(&chain),
                ChainFormat::Markdown => {
                    render_table(&growth_table(&chain), TableFormat::Markdown)?
                }
                ChainFormat::Csv => render_table(&growth_table(&chain), TableFormat::Csv)?,
            };
            match out {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => print!("{text}"),
            }
        }
        Command::SearchModulus { set } => {
            let moduli: Vec<String> = search_moduli(&set)?.iter().map(i64::to_string).collect();
            println!("{}", moduli.join(" "));
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Usage(format!("reading {}: {e}", file.display())))?;
            let chain = read_chain(&text).map_err(|e| Usage(format!("{}: {e}", file.display())))?;
            let report = verify(&chain)?;
            print!("{report}");
            if report.ok() {
                println!("ok: {} sets", chain.len());
            } else {
                println!("FAILED: {} violation(s)", report.failures.len());
            }
            return Ok(report.ok());
        }
        Command::Table { paper, format } => print!("{}", reference_table(paper, format.into())?),
        Command::ScanParams {
            method: _,
            max_m,
            max_k,
            steps,
        } => {
            if steps == 0 {
                bail!(Usage("--steps must be positive".into()));
            }
            let mut all_ok = true;
            let mut count = 0;
            for (m, d, k) in valid_params(max_m, max_k) {
                let params = build_base(m, d, k)?;
                if params.method2_quarter().is_err() {
                    continue;
                }
                let chain = generate_chain_m2(&params, steps)?;
                let mut report = verify_chain_identities(&params, &chain);
                report.merge(validate_chain(&chain));
                let status = if report.ok() { "ok" } else { "FAIL" };
                println!("m={m} d={d} k={k} steps={steps} {status}");
                if !report.ok() {
                    eprint!("{report}");
                    all_ok = false;
                }
                count += 1;
            }
            println!("{count} parameter sets scanned");
            return Ok(all_ok);
        }
    }
    Ok(true)
}

/// Generic chain checks, plus the method identities where the file carries
/// enough to recompute them.
fn verify(chain: &Chain) -> anyhow::Result<ValidationReport> {
    let mut report = validate_chain(chain);
    match (chain.method(), chain.modulus()) {
        (MethodTag::Method1, Some(n)) => {
            let params = analyze_modulus(chain.set(1), n)?;
            report.merge(method1::verify_identities(&params, chain));
        }
        (MethodTag::Method3, _) => report.merge(method3::verify_identities(chain)),
        _ => {}
    }
    Ok(report)
}
