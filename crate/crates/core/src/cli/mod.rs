//! The `valley-delta` command-line harness.

mod expr;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::exactalg::QTRational;
use crate::identities::{run as run_identity, IdentityReport, Selectors, Summary, Verifier, IDENTITY_IDS};
use crate::paths::{contains, for_each, qt_enumerator, DecoratedPath, Family, Params};
use crate::symfun::{Basis, Lambda, DEFAULT_DEGREE_BOUND};

pub use expr::{evaluate, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "valley-delta", version, about = "Exact checks of valley Delta identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep one identity (or `all`) and report every instance.
    Verify(VerifyArgs),
    /// List or count the elements of a path family.
    Enumerate(EnumerateArgs),
    /// Evaluate a symmetric-function expression.
    Symfunc(SymfuncArgs),
    /// Print the registered identity ids.
    List,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Identity id, or `all`.
    pub id: String,
    #[arg(long, default_value_t = 4)]
    pub n_max: u32,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
    pub degree_bound: u32,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report stream here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Record wall-clock time per report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, clap::Args)]
pub struct EnumerateArgs {
    /// LD, LSQ, LSQ', D or SQ'.
    pub family: String,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub d: usize,
    /// Print the enumerator refined by the touch count `r`.
    #[arg(long)]
    pub refine: bool,
    /// Only print the enumerator.
    #[arg(long)]
    pub quiet: bool,
    /// Test membership of a path record given as JSON.
    #[arg(long)]
    pub contains: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct SymfuncArgs {
    pub expr: String,
    /// Basis of the printed result.
    #[arg(long, default_value = "s")]
    pub basis: String,
    #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
    pub degree_bound: u32,
}

/// Parses `args` and runs the command; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => verify(a, out, err),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Symfunc(a) => symfunc(a, out),
        Command::List => IDENTITY_IDS.iter().try_for_each(|id| writeln!(out, "{id}")).map(|_| 0).map_err(io_err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::InvalidArgument(format!("i/o: {e}"))
}

fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    if a.n_max > a.degree_bound {
        return Err(Error::DegreeBound { degree: a.n_max as usize, bound: a.degree_bound as usize });
    }
    let ids: Vec<&str> = if a.id == "all" {
        IDENTITY_IDS.to_vec()
    } else if IDENTITY_IDS.contains(&a.id.as_str()) {
        vec![a.id.as_str()]
    } else {
        return Err(Error::UnknownIdentity(a.id.clone()));
    };
    let selectors = Selectors {
        k: a.k.map(i64::from),
        d: a.d.map(i64::from),
        m: a.m.map(i64::from),
        r: a.r.map(i64::from),
        timing: a.timing,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let verifier = Verifier::new(a.degree_bound);
    let mut reports: Vec<IdentityReport> = Vec::new();
    for id in ids {
        reports.extend(pool.install(|| run_identity(&verifier, id, a.n_max as i64, &selectors))?);
    }
    let summary = Summary::of(&reports);

    let mut file;
    let sink: &mut dyn Write = match &a.out {
        Some(path) => {
            file = BufWriter::new(File::create(path).map_err(io_err)?);
            &mut file
        }
        None => out,
    };
    for r in &reports {
        let line = match a.format {
            Format::Json => r.to_json_line(),
            Format::Text => r.to_text_line(),
        };
        writeln!(sink, "{line}").map_err(io_err)?;
    }
    let summary_line = match a.format {
        Format::Json => json!({ "summary": summary }).to_string(),
        Format::Text => format!(
            "summary: checked {} equal {} unequal {} conditional-unmet {} theorem failures {}",
            summary.checked, summary.equal, summary.unequal, summary.conditional_unmet, summary.theorem_failures
        ),
    };
    writeln!(sink, "{summary_line}").map_err(io_err)?;
    sink.flush().map_err(io_err)?;
    if summary.theorem_failures > 0 {
        let _ = writeln!(err, "{} theorem-category check(s) failed", summary.theorem_failures);
        return Ok(1);
    }
    Ok(0)
}

fn enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let family: Family = a.family.parse()?;
    let params = Params::new(a.m, a.n, a.k, a.d);
    if let Some(src) = &a.contains {
        let (x, _) = DecoratedPath::from_json(src)?;
        let member = contains(family, params, &x);
        let (area, dinv) = (x.area(), x.dinv());
        match a.format {
            Format::Json => {
                let v = json!({ "member": member, "area": area, "dinv": dinv, "reading_word": reading(&x) });
                writeln!(out, "{v}").map_err(io_err)?;
            }
            Format::Text => {
                writeln!(out, "member: {member}\narea: {area}\ndinv: {dinv}\nreading word: {}", reading(&x)).map_err(io_err)?;
            }
        }
        return Ok(if member { 0 } else { 1 });
    }
    if !a.quiet {
        let mut failure = None;
        for_each(family, params, a.n as u32, |x| {
            if failure.is_some() {
                return;
            }
            let line = match a.format {
                Format::Json => x.to_json(Some(family.name())),
                Format::Text => format!("{}  labels {:?}  dv {:?}  dinv {}  area {}", x.path(), x.labels(), x.dv(), x.dinv(), x.area()),
            };
            if let Err(e) = writeln!(out, "{line}") {
                failure = Some(e);
            }
        })?;
        if let Some(e) = failure {
            return Err(io_err(e));
        }
    }
    let e = qt_enumerator(family, params)?;
    let total = QTRational::from_mpoly(&e.total);
    match a.format {
        Format::Json => {
            let mut v = json!({ "count": e.count, "enumerator": total.to_canonical_string() });
            if a.refine {
                let refined: serde_json::Map<String, serde_json::Value> = e
                    .refined
                    .iter()
                    .map(|(r, p)| (r.to_string(), QTRational::from_mpoly(p).to_canonical_string().into()))
                    .collect();
                v["refined"] = refined.into();
            }
            writeln!(out, "{v}").map_err(io_err)?;
        }
        Format::Text => {
            writeln!(out, "count: {}\nenumerator: {}", e.count, total.to_canonical_string()).map_err(io_err)?;
            if a.refine {
                for (r, p) in &e.refined {
                    writeln!(out, "r = {r}: {}", QTRational::from_mpoly(p).to_canonical_string()).map_err(io_err)?;
                }
            }
        }
    }
    Ok(0)
}

fn reading(x: &DecoratedPath) -> String {
    x.reading_word().iter().map(|w| w.to_string()).collect()
}

fn symfunc(a: &SymfuncArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let basis: Basis = a.basis.parse()?;
    let lambda = Lambda::new(a.degree_bound);
    let text = match evaluate(&lambda, &a.expr)? {
        Value::Scalar(c) => c.to_canonical_string(),
        Value::Func(f) => lambda.convert(&f, basis)?.to_string(),
    };
    writeln!(out, "{text}").map_err(io_err)?;
    Ok(0)
}
