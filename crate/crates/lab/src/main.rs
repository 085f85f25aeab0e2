use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use shephard_core::complexes::CosetComplex;
use shephard_core::group::{lookup, normalize_key, Family, ReflectionGroup, DEFAULT_ELEMENT_CAP};
use shephard_lab::catalog_file::{catalog, write_catalog};
use shephard_lab::checks::{select, verify, RunOptions, CHECKS};
use shephard_lab::export::export_complex;

#[derive(Parser)]
#[command(
    name = "shephard-lab",
    version,
    about = "Exact verification runs for finite complex reflection groups"
)]
struct Cli {
    /// Read the group catalog from this directory of TOML files instead of the built-in one.
    #[arg(long, global = true, value_name = "DIR")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries.
    List {
        /// Only groups of this family (wreath, coxeter, shephard-exceptional).
        #[arg(long)]
        family: Option<Family>,
        /// Substring of a name, alias or symbol.
        filter: Option<String>,
    },
    /// Run verification checks on one group.
    Verify {
        /// Group name, alias or Shephard symbol.
        #[arg(required_unless_present = "list_checks")]
        key: Option<String>,
        /// Check id, comma-separated ids, or "all". Repeatable.
        #[arg(long = "check", value_name = "ID")]
        checks: Vec<String>,
        /// Allow stretch groups (complex checks only).
        #[arg(long)]
        stretch: bool,
        /// Tie-break seed for the Solomon–Tits orders. Repeatable; default 0..8.
        #[arg(long = "seed", value_name = "N")]
        seeds: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Report 0 ms for every check so reports are byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        /// Maximum group order to enumerate.
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
        /// Print the available check ids and exit.
        #[arg(long)]
        list_checks: bool,
    },
    /// Write the coset complex of a group in the line-oriented text format.
    ExportComplex {
        key: String,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
    /// Write the catalog as one TOML file per group.
    DumpCatalog {
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let specs = catalog(cli.catalog.as_deref())?;
    match cli.command {
        Command::List { family, filter } => {
            let filter = filter.map(|f| normalize_key(&f));
            for s in &specs {
                if family.is_some_and(|f| f != s.family) {
                    continue;
                }
                if let Some(f) = &filter {
                    let hit = std::iter::once(&s.name)
                        .chain(&s.aliases)
                        .map(|k| normalize_key(k))
                        .chain([s.symbol.to_string()])
                        .any(|k| k.contains(f.as_str()));
                    if !hit {
                        continue;
                    }
                }
                let degrees: Vec<String> = s.degrees.iter().map(u32::to_string).collect();
                println!(
                    "{}  order {}  degrees {}  symbol {}  family {}{}",
                    s.name,
                    s.expected_order(),
                    degrees.join(","),
                    s.symbol,
                    s.family,
                    if s.stretch { "  stretch" } else { "" }
                );
            }
            Ok(true)
        }
        Command::Verify {
            key,
            checks,
            stretch,
            seeds,
            format,
            out,
            no_timing,
            element_cap,
            list_checks,
        } => {
            if list_checks {
                for c in CHECKS {
                    let tag = if c.default { "" } else { "  (opt-in)" };
                    println!("{:<20} {}{tag}", c.id, c.summary);
                }
                return Ok(true);
            }
            let key = key.expect("clap enforces a key");
            let spec = lookup(&specs, &key)?;
            let selected = select(&checks)?;
            let mut opts = RunOptions {
                stretch,
                timing: !no_timing,
                element_cap,
                ..RunOptions::default()
            };
            if !seeds.is_empty() {
                opts.seeds = seeds;
            }
            let report = verify(spec, &selected, &opts)?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            match out {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => print!("{text}"),
            }
            Ok(report.passed())
        }
        Command::ExportComplex { key, out } => {
            let spec = lookup(&specs, &key)?;
            let group = ReflectionGroup::generate(spec)?;
            let cc = CosetComplex::build(&group);
            fs::write(&out, export_complex(&group, &cc))
                .with_context(|| format!("writing {}", out.display()))?;
            Ok(true)
        }
        Command::DumpCatalog { out } => {
            for p in write_catalog(&specs, &out)? {
                println!("{}", p.display());
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
