//! The `fockcanon` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad arguments,
//! 3 the engine reported a convention fault or inconsistency, 4 i/o or
//! document errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use fockcanon_core::canonical::{
    block_decomposition, decomposition_at_one, full_verification, Report,
};
use fockcanon_core::crystal::{crystal_path, enumerate_kleshchev, mullineux};
use fockcanon_core::roots::defect;
use fockcanon_core::{
    canonical_basis, Characteristic, Charge, DecompositionMatrix, FockContext, Multipartition,
};
use serde::Serialize;
use serde_json::Number;

use crate::cache::{write_atomic, Cache};
use crate::error::CliError;
use crate::format::{grid, matrix_csv, matrix_doc, matrix_table, to_csv, to_json, EField, Format};

#[derive(Debug, Parser)]
#[command(
    name = "fockcanon",
    version,
    about = "Graded decomposition matrices from canonical bases of higher-level Fock spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub job: JobArgs,
}

#[derive(Debug, Args)]
pub struct JobArgs {
    /// Quantum characteristic: an integer at least 2, or `inf`.
    #[arg(long = "e", global = true, value_parser = parse_e)]
    pub e: Option<Characteristic>,
    /// Multicharge, comma separated (its length is the level).
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_charge)]
    pub charge: Option<Charge>,
    /// Size of the multipartitions.
    #[arg(long = "n", global = true)]
    pub n: Option<u32>,
    /// Output format: table, json or csv.
    #[arg(long, global = true, default_value = "table")]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Cache directory for matrices; overrides FOCKCANON_CACHE.
    #[arg(long = "cache-dir", global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the graded decomposition matrix.
    Canon,
    /// Run every check for all sizes up to n; exit 1 if any fails.
    Verify,
    /// List the Kleshchev multipartitions of n.
    Kleshchev,
    /// Apply the Mullineux map.
    Mullineux {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Print the defect of a multipartition.
    Defect {
        #[arg(long = "la", allow_hyphen_values = true)]
        la: String,
    },
    /// Group the multipartitions of n into blocks.
    Blocks,
    /// Dimensions of the simple modules, from the matrix at q = 1.
    Dims,
}

fn parse_e(s: &str) -> Result<Characteristic, String> {
    Characteristic::from_str(s).map_err(|e| e.to_string())
}

fn parse_charge(s: &str) -> Result<Charge, String> {
    let kappas = s
        .split(',')
        .map(|k| {
            k.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad charge entry {k:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Charge::new(kappas).map_err(|e| e.to_string())
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code. Errors are reported on stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("fockcanon: {err}");
            err.exit_code()
        }
    }
}

/// Runs a parsed command, writing its output to `--out` or stdout.
pub fn execute(cli: &Cli) -> Result<(), CliError> {
    let (text, verdict) = render(cli)?;
    match &cli.job.out {
        Some(path) => write_atomic(path, text.as_bytes())?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    verdict
}

impl JobArgs {
    fn ctx(&self) -> Result<FockContext, CliError> {
        let e = self
            .e
            .ok_or_else(|| CliError::Usage("--e is required".into()))?;
        let charge = self
            .charge
            .clone()
            .ok_or_else(|| CliError::Usage("--charge is required".into()))?;
        Ok(FockContext::new(e, charge))
    }

    fn n(&self) -> Result<u32, CliError> {
        self.n
            .ok_or_else(|| CliError::Usage("--n is required".into()))
    }

    fn matrix(&self, ctx: &FockContext, n: u32) -> Result<DecompositionMatrix, CliError> {
        let compute = || canonical_basis(n, ctx).map_err(CliError::from);
        match Cache::locate(self.cache_dir.as_deref()) {
            Some(cache) => cache.get_or_compute(ctx, n, compute),
            None => compute(),
        }
    }
}

fn number(v: impl ToString) -> Number {
    Number::from_str(&v.to_string()).expect("integers are valid JSON numbers")
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

#[derive(Serialize)]
struct Header {
    e: EField,
    charge: Vec<i64>,
}

impl Header {
    fn of(ctx: &FockContext) -> Self {
        Header {
            e: ctx.e().into(),
            charge: ctx.charge().kappas().to_vec(),
        }
    }
}

/// Output text, plus the verdict to return once it has been written.
type Rendered = (String, Result<(), CliError>);

fn render(cli: &Cli) -> Result<Rendered, CliError> {
    let job = &cli.job;
    let ctx = job.ctx()?;
    let text = match &cli.command {
        Command::Canon => {
            let d = job.matrix(&ctx, job.n()?)?;
            match job.format {
                Format::Json => to_json(&matrix_doc(&d))?,
                Format::Csv => matrix_csv(&d)?,
                Format::Table => matrix_table(&d),
            }
        }
        Command::Verify => return render_verify(job, &ctx),
        Command::Kleshchev => render_kleshchev(job, &ctx)?,
        Command::Mullineux { mu } => render_mullineux(job, &ctx, mu)?,
        Command::Defect { la } => render_defect(job, &ctx, la)?,
        Command::Blocks => render_blocks(job, &ctx)?,
        Command::Dims => render_dims(job, &ctx)?,
    };
    Ok((text, Ok(())))
}

fn render_kleshchev(job: &JobArgs, ctx: &FockContext) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Doc {
        #[serde(flatten)]
        header: Header,
        n: u32,
        kleshchev: Vec<String>,
    }
    let n = job.n()?;
    let labels: Vec<String> = enumerate_kleshchev(n, ctx)
        .iter()
        .rev()
        .map(ToString::to_string)
        .collect();
    Ok(match job.format {
        Format::Json => to_json(&Doc {
            header: Header::of(ctx),
            n,
            kleshchev: labels,
        })?,
        Format::Csv => to_csv(labels.into_iter().map(|l| [l]))?,
        Format::Table => lines(labels),
    })
}

fn render_mullineux(job: &JobArgs, ctx: &FockContext, mu: &str) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Doc {
        #[serde(flatten)]
        header: Header,
        mu: String,
        path: Vec<i64>,
        twisted_charge: Vec<i64>,
        image: String,
    }
    let mu: Multipartition = mu.parse()?;
    let image = mullineux(&mu, ctx)?;
    Ok(match job.format {
        Format::Json => to_json(&Doc {
            header: Header::of(ctx),
            mu: mu.to_string(),
            path: crystal_path(&mu, ctx)?.into_iter().map(|r| r.0).collect(),
            twisted_charge: ctx.twisted().charge().kappas().to_vec(),
            image: image.to_string(),
        })?,
        Format::Csv => to_csv([[mu.to_string(), image.to_string()]])?,
        Format::Table => lines([image.to_string()]),
    })
}

fn render_defect(job: &JobArgs, ctx: &FockContext, la: &str) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Doc {
        #[serde(flatten)]
        header: Header,
        lambda: String,
        defect: u32,
    }
    let la: Multipartition = la.parse()?;
    let value = defect(&la, ctx.e(), ctx.charge())?;
    Ok(match job.format {
        Format::Json => to_json(&Doc {
            header: Header::of(ctx),
            lambda: la.to_string(),
            defect: value,
        })?,
        Format::Csv => to_csv([[la.to_string(), value.to_string()]])?,
        Format::Table => lines([value.to_string()]),
    })
}

fn render_blocks(job: &JobArgs, ctx: &FockContext) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct BlockDoc {
        beta: Vec<[i64; 2]>,
        defect: u32,
        members: Vec<String>,
    }
    #[derive(Serialize)]
    struct Doc {
        #[serde(flatten)]
        header: Header,
        n: u32,
        blocks: Vec<BlockDoc>,
    }
    let n = job.n()?;
    let blocks = block_decomposition(n, ctx)?;
    let members = |b: &fockcanon_core::canonical::Block| -> Vec<String> {
        b.members.iter().map(ToString::to_string).collect()
    };
    Ok(match job.format {
        Format::Json => to_json(&Doc {
            header: Header::of(ctx),
            n,
            blocks: blocks
                .iter()
                .map(|b| BlockDoc {
                    beta: b.beta.iter().map(|(i, m)| [i.0, i64::from(m)]).collect(),
                    defect: b.defect,
                    members: members(b),
                })
                .collect(),
        })?,
        Format::Csv => to_csv(blocks.iter().map(|b| {
            [
                b.beta.to_string(),
                b.defect.to_string(),
                members(b).join(" "),
            ]
        }))?,
        Format::Table => {
            let mut cells = vec![vec!["beta".to_string(), "defect".into(), "members".into()]];
            cells.extend(blocks.iter().map(|b| {
                vec![
                    b.beta.to_string(),
                    b.defect.to_string(),
                    members(b).join(" "),
                ]
            }));
            grid(&cells)
        }
    })
}

fn render_dims(job: &JobArgs, ctx: &FockContext) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct DimDoc {
        mu: String,
        dim: Number,
    }
    #[derive(Serialize)]
    struct Doc {
        #[serde(flatten)]
        header: Header,
        n: u32,
        dims: Vec<DimDoc>,
    }
    let n = job.n()?;
    let d = job.matrix(ctx, n)?;
    let at_one = decomposition_at_one(&d)?;
    let rows: Vec<(String, String)> = d
        .cols()
        .iter()
        .map(|mu| (mu.to_string(), at_one.dims[mu].to_string()))
        .collect();
    Ok(match job.format {
        Format::Json => to_json(&Doc {
            header: Header::of(ctx),
            n,
            dims: rows
                .into_iter()
                .map(|(mu, dim)| DimDoc {
                    mu,
                    dim: number(dim),
                })
                .collect(),
        })?,
        Format::Csv => to_csv(rows.into_iter().map(|(mu, dim)| [mu, dim]))?,
        Format::Table => {
            let mut cells = vec![vec!["mu".to_string(), "dim".into()]];
            cells.extend(rows.into_iter().map(|(mu, dim)| vec![mu, dim]));
            grid(&cells)
        }
    })
}

fn render_verify(job: &JobArgs, ctx: &FockContext) -> Result<Rendered, CliError> {
    #[derive(Serialize)]
    struct CheckDoc<'a> {
        name: &'a str,
        passed: bool,
        detail: &'a str,
    }
    #[derive(Serialize)]
    struct SizeDoc<'a> {
        n: u32,
        checks: usize,
        failed: usize,
        failures: Vec<CheckDoc<'a>>,
    }
    #[derive(Serialize)]
    struct Doc<'a> {
        #[serde(flatten)]
        header: Header,
        n: u32,
        passed: bool,
        sizes: Vec<SizeDoc<'a>>,
    }
    let n = job.n()?;
    let reports: Vec<(u32, Report)> = (0..=n)
        .map(|k| full_verification(k, ctx).map(|r| (k, r)))
        .collect::<Result<_, _>>()?;
    let failed: usize = reports.iter().map(|(_, r)| r.failures().count()).sum();
    let text = match job.format {
        Format::Json => to_json(&Doc {
            header: Header::of(ctx),
            n,
            passed: failed == 0,
            sizes: reports
                .iter()
                .map(|(k, r)| SizeDoc {
                    n: *k,
                    checks: r.len(),
                    failed: r.failures().count(),
                    failures: r
                        .failures()
                        .map(|c| CheckDoc {
                            name: &c.name,
                            passed: c.passed,
                            detail: &c.detail,
                        })
                        .collect(),
                })
                .collect(),
        })?,
        Format::Csv => to_csv(reports.iter().flat_map(|(k, r)| {
            r.checks.iter().map(move |c| {
                [
                    k.to_string(),
                    c.name.clone(),
                    if c.passed { "pass" } else { "FAIL" }.into(),
                    c.detail.clone(),
                ]
            })
        }))?,
        Format::Table => {
            let mut out = String::new();
            for (k, r) in &reports {
                out.push_str(&format!(
                    "n={k}: {} checks, {} failed\n",
                    r.len(),
                    r.failures().count()
                ));
                for c in r.failures() {
                    out.push_str(&format!("  FAIL {}: {}\n", c.name, c.detail));
                }
            }
            out.push_str(if failed == 0 {
                "all checks passed\n"
            } else {
                "verification FAILED\n"
            });
            out
        }
    };
    let verdict = if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Verification(failed))
    };
    Ok((text, verdict))
}
