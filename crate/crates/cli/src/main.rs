//! `commgraph`: build commutativity graphs, check certificates, probe balls.
//!
//! Exit codes: 0 when every asserted expectation holds, 1 when one fails,
//! 2 for usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use commgraph::catalog::{catalog, elementary_set, heisenberg_set, nielsen_set, CaseStudy};
use commgraph::certify::{
    check_main_theorem, check_thompson_variant, thompson_generators, verify_certificate_json, Certificate,
};
use commgraph::commgraph::{CommGraph, GeneratorSet, DEFAULT_POWER_BOUND};
use commgraph::emit;
use commgraph::probe::{ends_probe, CAP_ENV, DEFAULT_ELEMENT_CAP};

#[derive(Parser)]
#[command(name = "commgraph", version, about = "Commutativity graphs and hypothesis certificates")]
struct Cli {
    /// Print only errors and failing facts.
    #[arg(short, long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List or run built-in case studies.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the commutativity-graph theorems for a generating set.
    Check {
        #[command(flatten)]
        family: Family,
        #[arg(long, default_value_t = DEFAULT_POWER_BOUND, value_parser = clap::value_parser!(u32).range(1..))]
        power_bound: u32,
        #[command(flatten)]
        out: Outputs,
    },
    /// Certificate for Thompson's group F via S'_m.
    ThompsonVariant {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(4..))]
        m: u32,
        #[command(flatten)]
        out: Outputs,
    },
    /// Count components of an annulus in a Cayley ball (evidence only).
    Probe {
        #[command(flatten)]
        family: Family,
        #[arg(long)]
        inner: u32,
        #[arg(long)]
        outer: u32,
        /// Abort once the ball holds more than this many elements.
        #[arg(long, env = CAP_ENV, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Re-verify a certificate from its serialized keys.
    Verify { certificate: PathBuf },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Run {
        name: String,
        #[command(flatten)]
        out: Outputs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineFamily {
    Heisenberg,
    Autfree,
    Sl,
    Thompson,
}

#[derive(Args)]
struct Family {
    #[arg(long, value_enum)]
    engine: EngineFamily,
    /// Rank for autfree, dimension for sl.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..))]
    n: u32,
    /// Truncation for thompson.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(4..))]
    m: u32,
}

impl Family {
    fn generators(&self, power_bound: u32) -> commgraph::Result<GeneratorSet> {
        match self.engine {
            EngineFamily::Heisenberg => heisenberg_set(power_bound),
            EngineFamily::Autfree => nielsen_set(self.n as usize, power_bound),
            EngineFamily::Sl => elementary_set(self.n as usize, power_bound),
            EngineFamily::Thompson => thompson_generators(self.m, power_bound),
        }
    }
}

#[derive(Args)]
struct Outputs {
    /// Write the certificate JSON here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the commutativity graph in Graphviz format here.
    #[arg(long)]
    dot: Option<PathBuf>,
}

impl Outputs {
    fn write(&self, cert: &Certificate, graph: &CommGraph) -> Result<()> {
        if let Some(p) = &self.json {
            write_atomic(p, &emit::to_json(cert)?)?;
        }
        if let Some(p) = &self.dot {
            write_atomic(p, &emit::to_dot(graph))?;
        }
        Ok(())
    }
}

/// Writes to a sibling temporary file, then renames over `path`.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().with_context(|| format!("{} is not a file path", path.display()))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let result = (|| -> Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)?;
        Ok(())
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.with_context(|| format!("writing {}", path.display()))
}

enum Failure {
    Expectation(String),
    Usage(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

impl From<commgraph::Error> for Failure {
    fn from(e: commgraph::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn report_certificate(cert: &Certificate, quiet: bool) -> Result<(), Failure> {
    for h in &cert.hypotheses {
        if !quiet || !h.holds {
            println!("{} {}: {}", if h.holds { "ok  " } else { "FAIL" }, h.id, h.detail);
        }
    }
    for c in &cert.caveats {
        if !quiet {
            println!("caveat {}: {}", c.code, c.text);
        }
    }
    if cert.has_conclusions() {
        if !quiet {
            let names: Vec<String> = cert.conclusions.iter().map(|c| c.to_string()).collect();
            println!("conclusions: {}", names.join(", "));
        }
        Ok(())
    } else {
        let failed: Vec<String> = cert.failed_hypotheses().iter().map(|h| h.id.to_string()).collect();
        Err(Failure::Expectation(format!("no conclusions; failed hypotheses: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let quiet = cli.quiet;
    match cli.command {
        Command::Catalog { action: CatalogAction::List } => {
            for case in catalog() {
                println!("{:<12} {}", case.name, case.description);
            }
            Ok(())
        }
        Command::Catalog { action: CatalogAction::Run { name, out } } => {
            let case: CaseStudy = name.parse()?;
            let run = case.run()?;
            out.write(&run.certificate, &run.graph)?;
            for f in &run.facts {
                let status = match (f.holds, f.asserted) {
                    (true, true) => "ok  ",
                    (false, true) => "FAIL",
                    (_, false) => "info",
                };
                if !quiet || (f.asserted && !f.holds) {
                    println!("{status} {}: {}", f.name, f.detail);
                }
            }
            match run.failures().first() {
                None => Ok(()),
                Some(f) => Err(Failure::Expectation(format!("{}: {} failed", case.name, f.name))),
            }
        }
        Command::Check { family, power_bound, out } => {
            let gens = family.generators(power_bound)?;
            let graph = CommGraph::build(&gens);
            let cert = check_main_theorem(&gens);
            out.write(&cert, &graph)?;
            report_certificate(&cert, quiet)
        }
        Command::ThompsonVariant { m, out } => {
            let gens = thompson_generators(m, DEFAULT_POWER_BOUND)?;
            let graph = CommGraph::build(&gens);
            let cert = check_thompson_variant(m)?;
            out.write(&cert, &graph)?;
            report_certificate(&cert, quiet)
        }
        Command::Probe { family, inner, outer, cap, json } => {
            let gens = family.generators(DEFAULT_POWER_BOUND)?;
            let report = ends_probe(&gens, inner, outer, cap)?;
            let text = emit::to_json(&report).map_err(anyhow::Error::from)?;
            match json {
                Some(p) => write_atomic(&p, &text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Verify { certificate } => {
            let text =
                fs::read_to_string(&certificate).with_context(|| format!("reading {}", certificate.display()))?;
            let report = verify_certificate_json(&text);
            if report.ok {
                if !quiet {
                    println!("certificate verifies");
                }
                Ok(())
            } else {
                for d in &report.discrepancies {
                    println!("discrepancy: {d}");
                }
                Err(Failure::Expectation(format!("{} discrepancies", report.discrepancies.len())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Expectation(msg)) => {
            eprintln!("expectation failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
