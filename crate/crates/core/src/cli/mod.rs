//! The `stabclass` command-line front end.
//!
//! Exit codes: 0 success, 1 a checked property fails, 2 bad input,
//! 3 a resource limit was hit.

pub mod builtins;
pub mod formats;
mod report;

use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::PathBuf;

pub use report::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "stabclass", version, about = "Invariants of translation-invariant Pauli stabilizer codes")]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// JSON file with resource limits.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub max_spairs: Option<usize>,
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    #[arg(long, global = true)]
    pub max_torus_doublings: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check isotropy, the Lagrangian property and unimodularity of the form.
    Verify { file: String },
    /// Charge modules, their dimensions and the mobility verdict.
    Charges {
        file: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The classifying group and, in two dimensions, the braiding data.
    Classify { file: String },
    /// Coarse-grain by diagonal factors and print the new code file.
    Coarsen {
        file: String,
        #[arg(long, value_delimiter = ',', required = true)]
        factors: Vec<usize>,
    },
    /// Witt class and Arf invariant of a quadratic form file.
    Witt { file: String },
    /// L-class of a Poincaré complex file.
    Surgery { file: String },
    /// Clifford QCA operations.
    Qca {
        #[command(subcommand)]
        action: QcaCommand,
    },
    /// Print a builtin example, or list them.
    Examples { name: Option<String> },
}

#[derive(Debug, Subcommand)]
pub enum QcaCommand {
    /// Check that the matrix is symplectic and whether it is separated.
    Verify { file: String },
    /// Print the inverse QCA file.
    Inverse { file: String },
    /// Print the QCA whose matrix is the product `first · second`.
    Compose { first: String, second: String },
    /// Print the stabilizer code the QCA creates from the trivial code.
    Create { file: String },
}

/// Resource limits. Missing fields take their defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    pub max_spairs: usize,
    pub max_degree: u32,
    pub max_torus_doublings: u32,
}

impl Default for Config {
    fn default() -> Self {
        let gb = GbConfig::default();
        Self {
            max_spairs: gb.max_spairs,
            max_degree: gb.max_degree,
            max_torus_doublings: 3,
        }
    }
}

impl Config {
    pub fn groebner(&self) -> GbConfig {
        GbConfig {
            max_spairs: self.max_spairs,
            max_degree: self.max_degree,
        }
    }
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, success: bool) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: if success { 0 } else { 1 },
        }
    }

    fn error(e: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        }
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Ctx<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            if self.stdin_used {
                return Err(Error::Invalid("standard input can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Invalid(format!("reading standard input: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("reading {path}: {e}")))
        }
    }
}

fn load_config(cli: &Cli, ctx: &mut Ctx) -> Result<Config> {
    let mut cfg = match &cli.config {
        Some(path) => formats::parse_json(&ctx.read(&path.to_string_lossy())?)?,
        None => Config::default(),
    };
    if let Some(v) = cli.max_spairs {
        cfg.max_spairs = v;
    }
    if let Some(v) = cli.max_degree {
        cfg.max_degree = v;
    }
    if let Some(v) = cli.max_torus_doublings {
        cfg.max_torus_doublings = v;
    }
    Ok(cfg)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text, true)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let mut ctx = Ctx {
        stdin,
        stdin_used: false,
    };
    match execute(&cli, &mut ctx) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn render<R: Render>(r: &R, format: Format) -> String {
    match format {
        Format::Json => formats::to_json(r) + "\n",
        Format::Text => r.text(),
    }
}

fn execute(cli: &Cli, ctx: &mut Ctx) -> Result<Outcome> {
    let cfg = load_config(cli, ctx)?;
    let fmt = cli.format;
    match &cli.command {
        Command::Verify { file } => {
            let cf: formats::CodeFile = formats::parse_json(&ctx.read(file)?)?;
            let r = verify(&cf, &cfg)?;
            Ok(Outcome::ok(render(&r, fmt), r.passed()))
        }
        Command::Charges { file, degree } => {
            let code = read_code(ctx, file)?;
            let r = charges(&code, *degree, &cfg)?;
            Ok(Outcome::ok(render(&r, fmt), true))
        }
        Command::Classify { file } => {
            let code = read_code(ctx, file)?;
            let r = classify(&code, &cfg)?;
            Ok(Outcome::ok(render(&r, fmt), true))
        }
        Command::Coarsen { file, factors } => {
            let code = read_code(ctx, file)?;
            let out = crate::homology::coarse_grain(&code, factors)?;
            Ok(Outcome::ok(formats::to_json(&formats::CodeFile::from_code(&out)) + "\n", true))
        }
        Command::Witt { file } => {
            let ff: formats::FormFile = formats::parse_json(&ctx.read(file)?)?;
            let r = witt(&ff.to_space()?)?;
            Ok(Outcome::ok(render(&r, fmt), true))
        }
        Command::Surgery { file } => {
            let cf: formats::ComplexFile = formats::parse_json(&ctx.read(file)?)?;
            let r = surgery(&cf.to_complex()?)?;
            Ok(Outcome::ok(render(&r, fmt), true))
        }
        Command::Qca { action } => qca(action, ctx, fmt),
        Command::Examples { name } => examples(name.as_deref(), fmt),
    }
}

fn read_code(ctx: &mut Ctx, file: &str) -> Result<crate::code::PauliCode> {
    let cf: formats::CodeFile = formats::parse_json(&ctx.read(file)?)?;
    cf.to_code()
}

fn read_qca(ctx: &mut Ctx, file: &str) -> Result<crate::qca::CliffordQca> {
    let qf: formats::QcaFile = formats::parse_json(&ctx.read(file)?)?;
    qf.to_qca()
}

fn qca(action: &QcaCommand, ctx: &mut Ctx, fmt: Format) -> Result<Outcome> {
    let qca_json = |u: &crate::qca::CliffordQca| formats::to_json(&formats::QcaFile::from_qca(u)) + "\n";
    match action {
        QcaCommand::Verify { file } => {
            let u = read_qca(ctx, file)?;
            let r = qca_verify(&u)?;
            Ok(Outcome::ok(render(&r, fmt), r.symplectic))
        }
        QcaCommand::Inverse { file } => Ok(Outcome::ok(qca_json(&read_qca(ctx, file)?.inverse()?), true)),
        QcaCommand::Compose { first, second } => {
            let a = read_qca(ctx, first)?;
            let b = read_qca(ctx, second)?;
            Ok(Outcome::ok(qca_json(&a.compose(&b)?), true))
        }
        QcaCommand::Create { file } => {
            let code = read_qca(ctx, file)?.create_stabilizer()?;
            Ok(Outcome::ok(formats::to_json(&formats::CodeFile::from_code(&code)) + "\n", true))
        }
    }
}

fn examples(name: Option<&str>, fmt: Format) -> Result<Outcome> {
    let Some(name) = name else {
        let list = ExampleList {
            examples: builtins::BUILTINS
                .iter()
                .map(|(n, d)| ExampleEntry {
                    name: n.to_string(),
                    description: d.to_string(),
                })
                .collect(),
        };
        return Ok(Outcome::ok(render(&list, fmt), true));
    };
    let out = match builtins::lookup(name)? {
        builtins::Builtin::Code(c) => formats::to_json(&formats::CodeFile::from_code(&c)),
        builtins::Builtin::Qca(u) => formats::to_json(&formats::QcaFile::from_qca(&u)),
    };
    Ok(Outcome::ok(out + "\n", true))
}
