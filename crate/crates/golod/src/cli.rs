//! Argument parsing and subcommand execution.
//!
//! [`run`] does all the work and hands back the report together with the
//! human-readable text and the exit code, so tests can drive it without a
//! subprocess.

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use golod_core::betti::bigraded_betti;
use golod_core::chain::chain_terms;
use golod_core::golod::{
    check_golod_field_with, check_golod_integral_2dim_with, check_golod_ring_with,
    product_scan_with, verify_witness, GolodReport, Scope, Witness,
};
use golod_core::homology::{cohomology, homology, HomologyResult};
use golod_core::{corpus, Coefficient};
use serde_json::{json, Value};

use crate::format::{self, ComplexFile};
use crate::parallel::Parallel;
use crate::report::{millis, CommandEcho, InputInfo, Report, Timings};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "golod",
    version,
    about = "Golodness, homology and Betti numbers of simplicial complexes"
)]
pub struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for subset scans (default: all cores).
    #[arg(long, global = true, env = "GOLOD_JOBS")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced homology in one degree.
    Homology(HomologyArgs),
    /// Reduced cohomology in one degree.
    Cohomology(HomologyArgs),
    /// Decide Golodness; exits 1 on a negative verdict.
    Golod {
        file: PathBuf,
        /// integral, field:rat, field:<p> or ring:<n>.
        #[arg(long, default_value = "integral", value_parser = parse_scope)]
        scope: Scope,
    },
    /// Bigraded Betti numbers via Hochster's formula.
    Betti {
        file: PathBuf,
        /// rat or a prime p.
        #[arg(long, default_value = "rat", value_parser = parse_field)]
        field: Coefficient,
        /// Also list every nonzero β_{i,I}.
        #[arg(long)]
        full: bool,
    },
    /// Search for a nonzero product map over a field; exits 1 if one exists.
    Products {
        file: PathBuf,
        #[arg(long, default_value = "rat", value_parser = parse_field)]
        field: Coefficient,
    },
    /// Built-in example complexes.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Re-check the witness in a JSON report against a complex; exits 1 if
    /// it does not hold.
    VerifyWitness {
        file: PathBuf,
        /// A report written with --json, or a bare witness object.
        witness: PathBuf,
    },
}

#[derive(Debug, clap::Args)]
pub struct HomologyArgs {
    pub file: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    pub degree: isize,
    /// int, rat, f:<p> or mod:<n>.
    #[arg(long, default_value = "int", value_parser = parse_coeff)]
    pub coeff: Coefficient,
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    /// Names and descriptions of the built-in complexes.
    List,
    /// Print one complex as a facet-list file.
    Emit {
        name: String,
        #[arg(long, value_enum, default_value_t = FileFormat::Text)]
        format: FileFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Text,
    Json,
}

pub fn parse_coeff(s: &str) -> Result<Coefficient, String> {
    s.parse().map_err(|e: golod_core::Error| e.to_string())
}

/// `rat`, a bare prime, or any field spelling accepted by [`parse_coeff`].
pub fn parse_field(s: &str) -> Result<Coefficient, String> {
    let c = match s.parse::<u64>() {
        Ok(p) => Coefficient::prime_field(p).map_err(|e| e.to_string())?,
        Err(_) => parse_coeff(s)?,
    };
    if !c.is_field() {
        return Err(format!("{s} is not a field"));
    }
    Ok(c)
}

pub fn parse_scope(s: &str) -> Result<Scope, String> {
    if s == "integral" {
        return Ok(Scope::Integral);
    }
    if let Some(f) = s.strip_prefix("field:") {
        return parse_field(f).map(Scope::Field);
    }
    if let Some(n) = s.strip_prefix("ring:") {
        let n: u64 = n.parse().map_err(|_| format!("invalid ring size {n:?}"))?;
        Coefficient::cyclic(n).map_err(|e| e.to_string())?;
        return Ok(Scope::Ring(n));
    }
    Err(format!(
        "unknown scope {s:?}; expected integral, field:rat, field:<p> or ring:<n>"
    ))
}

pub fn scope_label(scope: &Scope) -> String {
    match scope {
        Scope::Integral => "integral".into(),
        Scope::Field(c) => format!("field {c}"),
        Scope::Ring(n) => format!("ring Z/{n}"),
        Scope::Products(c) => format!("products over {c}"),
    }
}

/// Everything a run produces.
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub code: u8,
}

impl Outcome {
    /// What `main` prints for the chosen output mode.
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = self.report.to_json();
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

struct Loaded {
    file: ComplexFile,
    info: InputInfo,
    parse_ms: f64,
}

fn read_input(path: &Path) -> anyhow::Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        return Ok(buf);
    }
    std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> anyhow::Result<Loaded> {
    let start = Instant::now();
    let bytes = read_input(path)?;
    let text =
        std::str::from_utf8(&bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let file = format::parse(text).with_context(|| format!("{}", path.display()))?;
    let info = InputInfo::new(&bytes, &file);
    Ok(Loaded {
        file,
        info,
        parse_ms: millis(start.elapsed()),
    })
}

fn echo(subcommand: &str, input: Option<&Path>, options: Value) -> CommandEcho {
    CommandEcho {
        subcommand: subcommand.into(),
        input: input.map(|p| p.display().to_string()),
        options,
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Homology(a) => run_homology(a, false),
        Command::Cohomology(a) => run_homology(a, true),
        Command::Golod { file, scope } => run_golod(cli, file, *scope),
        Command::Betti { file, field, full } => run_betti(file, *field, *full),
        Command::Products { file, field } => run_golod(cli, file, Scope::Products(*field)),
        Command::Corpus { action } => run_corpus(action),
        Command::VerifyWitness { file, witness } => run_verify(file, witness),
    }
}

fn run_homology(a: &HomologyArgs, co: bool) -> anyhow::Result<Outcome> {
    let input = load(&a.file)?;
    let start = Instant::now();
    let k = &input.file.complex;
    let h = if co {
        cohomology(k, a.degree, a.coeff)?
    } else {
        homology(k, a.degree, a.coeff)?
    };
    let compute_ms = millis(start.elapsed());
    let name = if co { "cohomology" } else { "homology" };
    Ok(Outcome {
        text: format!("{}\n", h.group),
        report: Report {
            command: echo(
                name,
                Some(&a.file),
                json!({ "degree": a.degree, "coeff": a.coeff }),
            ),
            input: Some(input.info),
            result: homology_json(&h),
            timings: Timings {
                parse_ms: input.parse_ms,
                compute_ms,
            },
        },
        code: EXIT_OK,
    })
}

fn homology_json(h: &HomologyResult) -> Value {
    let reduced = h.reduced_cycle_basis();
    let generators: Vec<Value> = h
        .cycle_basis
        .iter()
        .zip(&reduced)
        .zip(&h.orders)
        .map(|((z, r), order)| {
            let mut g = json!({
                "order": order.to_string(),
                "chain": chain_terms(&h.basis, z),
            });
            if h.coefficient.modulus() > 0 {
                g["reduced_chain"] = json!(chain_terms(&h.basis, r));
            }
            g
        })
        .collect();
    json!({
        "degree": h.degree,
        "coefficient": h.coefficient,
        "cohomology": h.cohomology,
        "group": h.group.to_string(),
        "dimension": h.dimension(),
        "generators": generators,
    })
}

fn run_golod(cli: &Cli, path: &Path, scope: Scope) -> anyhow::Result<Outcome> {
    let input = load(path)?;
    let exec = Parallel::new(cli.jobs)?;
    let start = Instant::now();
    let k = &input.file.complex;
    let r = match scope {
        Scope::Integral => check_golod_integral_2dim_with(k, &exec)?,
        Scope::Field(f) => check_golod_field_with(k, f, &exec)?,
        Scope::Ring(n) => check_golod_ring_with(k, n, &exec)?,
        Scope::Products(f) => product_scan_with(k, f, &exec)?,
    };
    let compute_ms = millis(start.elapsed());
    let (subcommand, options) = match scope {
        Scope::Products(f) => ("products", json!({ "field": f })),
        s => ("golod", json!({ "scope": s })),
    };
    let mut result = serde_json::to_value(&r)?;
    result["summary"] = json!(summary(&input.file, &r));
    Ok(Outcome {
        text: format!("{}\n", summary(&input.file, &r)),
        code: if r.is_golod() { EXIT_OK } else { EXIT_NEGATIVE },
        report: Report {
            command: echo(subcommand, Some(path), options),
            input: Some(input.info),
            result,
            timings: Timings {
                parse_ms: input.parse_ms,
                compute_ms,
            },
        },
    })
}

/// Verdict line plus a description of the witness.
pub fn summary(file: &ComplexFile, r: &GolodReport) -> String {
    let verdict = format!("{:?} ({})", r.verdict, scope_label(&r.scope));
    let Some(w) = &r.witness else {
        return match r.scope {
            Scope::Ring(_) => format!("{verdict}: no obstruction found"),
            _ => verdict,
        };
    };
    let detail = match w {
        Witness::NonChordalCycle { cycle } => {
            format!("1-skeleton has the induced cycle {}", file.set(cycle))
        }
        Witness::BreakableNotNeighborly {
            subset,
            missing_pair: (v, w),
            degree,
            breakability,
        } => format!(
            "the full subcomplex on {} misses the edge {} and its H_{degree} is vertex-breakable over {} (cokernel {})",
            file.set(subset),
            file.set(&[*v, *w]),
            breakability
                .witness_coefficient
                .map_or_else(|| "?".into(), |c| c.to_string()),
            breakability.cokernel,
        ),
        Witness::NonvanishingProduct(p) => format!(
            "the product map for {} and {} is nonzero in degree {} over {}",
            file.set(&p.first),
            file.set(&p.second),
            p.degree,
            p.coefficient,
        ),
    };
    format!("{verdict}\nwitness: {detail}")
}

fn run_betti(path: &Path, field: Coefficient, full: bool) -> anyhow::Result<Outcome> {
    let input = load(path)?;
    let start = Instant::now();
    let table = bigraded_betti(&input.file.complex, field)?;
    let compute_ms = millis(start.elapsed());
    let aggregated = table.aggregated();
    let mut text = format!("Betti numbers over {field}\n");
    for ((i, j), b) in &aggregated {
        text.push_str(&format!("({i}, {j})  {b}\n"));
    }
    if full {
        text.push('\n');
        for e in &table.entries {
            text.push_str(&format!(
                "({}, {})  {}\n",
                e.i,
                input.file.set(&e.subset),
                e.rank
            ));
        }
    }
    let mut result = json!({
        "field": field,
        "aggregated": aggregated
            .iter()
            .map(|((i, j), b)| json!({ "i": i, "size": j, "rank": b }))
            .collect::<Vec<_>>(),
    });
    if full {
        result["entries"] = serde_json::to_value(&table.entries)?;
    }
    Ok(Outcome {
        text,
        code: EXIT_OK,
        report: Report {
            command: echo("betti", Some(path), json!({ "field": field, "full": full })),
            input: Some(input.info),
            result,
            timings: Timings {
                parse_ms: input.parse_ms,
                compute_ms,
            },
        },
    })
}

/// A corpus entry as an input file.
pub fn corpus_file(name: &str) -> Option<(ComplexFile, &'static str)> {
    let nc = corpus::by_name(name)?;
    let names = nc.vertex_names.as_ref().map(|_| {
        nc.complex
            .vertices()
            .iter()
            .map(|&v| {
                nc.vertex_name(v)
                    .map_or_else(|| v.to_string(), String::from)
            })
            .collect()
    });
    Some((
        ComplexFile {
            complex: nc.complex,
            names,
        },
        nc.description,
    ))
}

fn run_corpus(action: &CorpusAction) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    let (text, options, result) = match action {
        CorpusAction::List => {
            let mut text = String::new();
            let mut entries = Vec::new();
            for nc in corpus::all() {
                text.push_str(&format!("{:<12} {}\n", nc.name, nc.description));
                entries.push(json!({
                    "name": nc.name,
                    "description": nc.description,
                    "vertices": nc.complex.num_vertices(),
                    "facets": nc.complex.facets().len(),
                }));
            }
            (
                text,
                json!({ "action": "list" }),
                json!({ "complexes": entries }),
            )
        }
        CorpusAction::Emit { name, format } => {
            let (file, description) =
                corpus_file(name).ok_or_else(|| anyhow!("no corpus complex named {name:?}"))?;
            let text = match format {
                FileFormat::Text => {
                    format::emit_text(&file, Some(&format!("{name}: {description}")))
                }
                FileFormat::Json => format::emit_json(&file) + "\n",
            };
            let complex: Value = serde_json::from_str(&format::emit_json(&file))?;
            (
                text,
                json!({ "action": "emit", "name": name }),
                json!({ "name": name, "description": description, "complex": complex }),
            )
        }
    };
    Ok(Outcome {
        text,
        code: EXIT_OK,
        report: Report {
            command: echo("corpus", None, options),
            input: None,
            result,
            timings: Timings {
                parse_ms: 0.0,
                compute_ms: millis(start.elapsed()),
            },
        },
    })
}

/// Pulls the witness out of a report, a `GolodReport`, or a bare witness.
pub fn extract_witness(v: &Value) -> anyhow::Result<Witness> {
    let w = if let Some(r) = v.get("result") {
        r.get("witness").unwrap_or(&Value::Null)
    } else if let Some(w) = v.get("witness") {
        w
    } else {
        v
    };
    if w.is_null() {
        bail!("the report carries no witness");
    }
    serde_json::from_value(w.clone()).context("malformed witness")
}

fn run_verify(path: &Path, witness: &Path) -> anyhow::Result<Outcome> {
    let input = load(path)?;
    let raw = read_input(witness)?;
    let v: Value = serde_json::from_slice(&raw)
        .with_context(|| format!("{} is not JSON", witness.display()))?;
    let w = extract_witness(&v)?;
    let start = Instant::now();
    let valid = verify_witness(&input.file.complex, &w)?;
    let compute_ms = millis(start.elapsed());
    Ok(Outcome {
        text: if valid {
            "witness verified\n".into()
        } else {
            "witness rejected\n".into()
        },
        code: if valid { EXIT_OK } else { EXIT_NEGATIVE },
        report: Report {
            command: echo(
                "verify-witness",
                Some(path),
                json!({ "witness": witness.display().to_string() }),
            ),
            input: Some(input.info),
            result: json!({ "valid": valid, "witness": w }),
            timings: Timings {
                parse_ms: input.parse_ms,
                compute_ms,
            },
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scopes_parse() {
        assert_eq!(parse_scope("integral"), Ok(Scope::Integral));
        assert_eq!(
            parse_scope("field:rat"),
            Ok(Scope::Field(Coefficient::Rationals))
        );
        assert_eq!(
            parse_scope("field:3"),
            Ok(Scope::Field(Coefficient::PrimeField(3)))
        );
        assert_eq!(parse_scope("ring:4"), Ok(Scope::Ring(4)));
        assert!(parse_scope("field:4").is_err());
        assert!(parse_scope("ring:1").is_err());
        assert!(parse_scope("ring").is_err());
    }

    #[test]
    fn fields_parse() {
        assert_eq!(parse_field("rat"), Ok(Coefficient::Rationals));
        assert_eq!(parse_field("5"), Ok(Coefficient::PrimeField(5)));
        assert_eq!(parse_field("f:2"), Ok(Coefficient::PrimeField(2)));
        assert!(parse_field("int").is_err());
        assert!(parse_field("mod:4").is_err());
    }

    #[test]
    fn witness_extraction() {
        let w = json!({ "kind": "non_chordal_cycle", "cycle": [1, 2, 3, 4] });
        let expect = Witness::NonChordalCycle {
            cycle: vec![1, 2, 3, 4],
        };
        assert_eq!(extract_witness(&w).unwrap(), expect);
        assert_eq!(extract_witness(&json!({ "witness": w })).unwrap(), expect);
        assert_eq!(
            extract_witness(&json!({ "result": { "witness": w } })).unwrap(),
            expect
        );
        assert!(extract_witness(&json!({ "result": { "witness": null } })).is_err());
    }
}
