//! `z2index`: twisted cohomology, obstructions and the Z2-index of a free
//! involution, from an `eqcx-v1` file or a catalog entry.
//!
//! Exit codes: 0 success or exact verdict, 1 indeterminate verdict, 2 invalid input.

mod commands;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use z2index::borel::DEFAULT_TRUNCATION;
use z2index::complexes::Coeff;
use z2index::{catalog, format, EquivariantComplex};

use report::{InputInfo, Report};

#[derive(Parser, Debug)]
#[command(name = "z2index", version, about = "Z2-index of free involutions on 4-complexes")]
struct Cli {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// An eqcx-v1 JSON file, or `-` for stdin.
    #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
    file: Option<PathBuf>,
    /// Use a built-in catalog entry instead of a file.
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the chain-complex and involution conditions.
    Validate(Input),
    /// Cohomology of the orbit space (or of the cover, for Lambda).
    Cohomology {
        #[command(flatten)]
        input: Input,
        /// One of Z, Z-, Z2, Lambda.
        #[arg(long, default_value = "Z")]
        coeff: Coeff,
        /// A single degree; all degrees when omitted.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The classifying class, its Bockstein and powers, the primary
    /// obstruction and the d3 table.
    Obstructions {
        #[command(flatten)]
        input: Input,
        #[arg(long, env = "Z2INDEX_TRUNCATION", default_value_t = DEFAULT_TRUNCATION)]
        trunc: usize,
    },
    /// One page of the twisted Borel spectral sequence.
    Ss {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        page: usize,
        /// Sphere truncation of the Borel construction.
        #[arg(long, env = "Z2INDEX_TRUNCATION", default_value_t = DEFAULT_TRUNCATION)]
        trunc: usize,
        /// One of Z-, Z2, Z.
        #[arg(long, default_value = "Z-")]
        coeff: Coeff,
    },
    /// Decide the Z2-index.
    Index {
        #[command(flatten)]
        input: Input,
        /// Sup-norm bound of the witness search.
        #[arg(long, default_value_t = 8)]
        radius: u32,
        #[arg(long, env = "Z2INDEX_TRUNCATION", default_value_t = DEFAULT_TRUNCATION)]
        trunc: usize,
    },
    /// Built-in complexes.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List entries with their expected indices.
    List,
    /// Write an entry as an eqcx-v1 document.
    Export {
        name: String,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
pub struct InputError {
    pub kind: &'static str,
    pub message: String,
    pub pointer: Option<String>,
}

impl InputError {
    pub fn new(kind: &'static str, message: impl ToString) -> Self {
        InputError {
            kind,
            message: message.to_string(),
            pointer: None,
        }
    }
}

fn load_input(input: &Input) -> Result<(EquivariantComplex, InputInfo), InputError> {
    if let Some(name) = &input.catalog {
        let entry = catalog::get(name).map_err(|e| InputError::new("unknown_entry", e))?;
        // same bytes as `catalog export`, so the digests agree
        let text = format::export(&entry.complex) + "\n";
        return Ok((entry.complex, InputInfo::new(name, format!("catalog:{name}"), text.as_bytes())));
    }
    let path = input.file.as_ref().expect("clap requires a file or --catalog");
    let mut bytes = Vec::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(path).map(|b| bytes = b)
    };
    read.map_err(|e| InputError::new("io", format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| InputError::new("parse_error", e))?;
    let c = format::load(&text).map_err(|e| match e {
        format::FormatError::Parse { pointer, message } => InputError {
            kind: "parse_error",
            message,
            pointer: Some(pointer),
        },
        other => InputError::new("invalid_input", other),
    })?;
    let info = InputInfo::new(c.name.clone(), path.display().to_string(), &bytes);
    Ok((c, info))
}

/// Loads and validates; an invalid complex is an input error for every
/// command except `validate`, which reports it.
fn load_valid(input: &Input) -> Result<(EquivariantComplex, InputInfo), InputError> {
    let (c, info) = load_input(input)?;
    let report = c.validate();
    if !report.is_valid() {
        return Err(InputError::new("invalid_complex", report));
    }
    Ok((c, info))
}

fn run(cli: &Cli) -> Result<(Report, u8), InputError> {
    match &cli.command {
        Command::Validate(input) => {
            let (c, info) = load_input(input)?;
            let report = commands::validate(&c, info);
            let code = if report.payload["valid"] == json!(true) { 0 } else { 2 };
            Ok((report, code))
        }
        Command::Cohomology { input, coeff, degree } => {
            let (c, info) = load_valid(input)?;
            Ok((commands::cohomology(&c, info, *coeff, *degree)?, 0))
        }
        Command::Obstructions { input, trunc } => {
            let (c, info) = load_valid(input)?;
            Ok((commands::obstructions(&c, info, *trunc)?, 0))
        }
        Command::Ss { input, page, trunc, coeff } => {
            let (c, info) = load_valid(input)?;
            Ok((commands::spectral_sequence(&c, info, *coeff, *page, *trunc)?, 0))
        }
        Command::Index { input, radius, trunc } => {
            let (c, info) = load_valid(input)?;
            commands::index(&c, info, *radius, *trunc)
        }
        Command::Catalog(CatalogCommand::List) => Ok((commands::catalog_list(), 0)),
        Command::Catalog(CatalogCommand::Export { .. }) => unreachable!("handled before reports"),
    }
}

fn export(name: &str, output: Option<&PathBuf>) -> Result<(), InputError> {
    let entry = catalog::get(name).map_err(|e| InputError::new("unknown_entry", e))?;
    let text = format::export(&entry.complex) + "\n";
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| InputError::new("io", format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(json: bool, e: InputError) -> ExitCode {
    if json {
        let body = json!({ "error": { "kind": e.kind, "message": e.message, "pointer": e.pointer } });
        println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
    } else {
        match &e.pointer {
            Some(p) => eprintln!("error [{}] at {p}: {}", e.kind, e.message),
            None => eprintln!("error [{}]: {}", e.kind, e.message),
        }
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Catalog(CatalogCommand::Export { name, output }) = &cli.command {
        return match export(name, output.as_ref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(cli.json, e),
        };
    }
    match run(&cli) {
        Ok((report, code)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(code)
        }
        Err(e) => fail(cli.json, e),
    }
}
