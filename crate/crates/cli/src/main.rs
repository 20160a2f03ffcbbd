//! `hypack`: optimal hyperball packing densities of the 5-dimensional
//! hyperbolic prism tilings `[5,3,3,3,3]` and `[5,3,3,3,4]`.
//!
//! Exit status: 0 on success, 2 on usage or parse errors, 3 on numerical
//! failure.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hypack::coxeter::invert;
use hypack::hyperball::height_between;
use hypack::volume::vol5_truncated;
use hypack::{
    density, lobachevsky, optimal_height, parse_symbol, schlafli_matrix, vol4_base, Angle,
    CoxeterSymbol, PackingReport64, QuadratureSettings64,
};
use serde_json::{Map, Value};

use render::{fixed, json_fixed, json_string, render_records, text_table, Cell, OutputFormat, Record};

const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

/// The two tilings of the packing table, in column order.
const TABLE_SYMBOLS: [&str; 2] = ["[5,3,3,3,3]", "[5,3,3,3,4]"];

/// Optimal hyperball packing densities of 5-dimensional hyperbolic prism
/// tilings.
#[derive(Debug, Parser)]
#[command(name = "hypack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    config: CliConfig,
}

#[derive(Debug, Args)]
struct CliConfig {
    /// Decimals shown for every fixed-point value.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u8).range(1..=15))]
    digits: u8,

    /// Absolute tolerance of the volume quadrature.
    #[arg(long, global = true, default_value_t = 1e-11, value_parser = parse_tol)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vol5, height, hyperball piece volume and density for one symbol.
    Density { symbol: String },
    /// Volume of the truncated 5-orthoscheme and its components.
    Volume { symbol: String },
    /// Optimal hyperball height and the Gram-inverse entries it comes from.
    Height { symbol: String },
    /// The full packing table for [5,3,3,3,3] and [5,3,3,3,4].
    Table,
    /// Lobachevsky function L(omega).
    Lobachevsky {
        #[arg(allow_negative_numbers = true)]
        omega: f64,
    },
    /// Known maximal densities of the lower-dimensional analogues.
    ReferenceConstants,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("tolerance must be positive and finite, got {s}"))
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<hypack::Error> for Failure {
    fn from(e: hypack::Error) -> Self {
        Failure {
            code: if e.is_usage() { EXIT_USAGE } else { EXIT_NUMERIC },
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("hypack: error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let cfg = &cli.config;
    let digits = usize::from(cfg.digits);
    let settings = QuadratureSettings64::default().with_abs_tol(cfg.tol)?;
    match &cli.command {
        Command::Density { symbol } => {
            let report = density(&parse_symbol(symbol)?, &settings)?;
            Ok(render_records(&[report_record(&report)], cfg.format, digits))
        }
        Command::Volume { symbol } => {
            let symbol = parse_symbol(symbol)?;
            let v = vol5_truncated(&symbol.resolved(), &settings)?;
            let rec = Record {
                fields: vec![
                    ("symbol", Cell::Text(symbol.to_string())),
                    ("vol5", Cell::Fixed(v.value)),
                    ("integral_part", Cell::Fixed(v.integral_part)),
                    ("constant_part", Cell::Fixed(v.constant_part)),
                    ("estimated_error", Cell::Sci(v.estimated_error)),
                    ("base_vol4", Cell::Fixed(vol4_base())),
                ],
            };
            Ok(render_records(&[rec], cfg.format, digits))
        }
        Command::Height { symbol } => {
            let symbol = parse_symbol(symbol)?;
            symbol.prism_scheme()?;
            let gram = invert(&schlafli_matrix::<f64>(&symbol.resolved()))?;
            let h = optimal_height(&gram)?;
            debug_assert_eq!(Some(h), height_between(&gram, 4, 5).ok());
            let rec = Record {
                fields: vec![
                    ("symbol", Cell::Text(symbol.to_string())),
                    ("height", Cell::Fixed(h)),
                    ("h44", Cell::Fixed(gram.h(4, 4))),
                    ("h55", Cell::Fixed(gram.h(5, 5))),
                    ("h45", Cell::Fixed(gram.h(4, 5))),
                ],
            };
            Ok(render_records(&[rec], cfg.format, digits))
        }
        Command::Table => table(&settings, cfg.format, digits),
        Command::Lobachevsky { omega } => {
            let value = lobachevsky(Angle::new(*omega)?);
            Ok(match cfg.format {
                OutputFormat::Text => format!("{}\n", fixed(value, digits)),
                _ => render_records(
                    &[Record {
                        fields: vec![("omega", Cell::Sci(*omega)), ("lobachevsky", Cell::Fixed(value))],
                    }],
                    cfg.format,
                    digits,
                ),
            })
        }
        Command::ReferenceConstants => reference_constants(&settings, cfg.format, digits),
    }
}

fn report_record(r: &PackingReport64) -> Record {
    Record {
        fields: vec![
            ("symbol", Cell::Text(r.symbol.to_string())),
            ("vol5", Cell::Fixed(r.vol5)),
            ("height", Cell::Fixed(r.height)),
            ("piece_volume", Cell::Fixed(r.piece_volume)),
            ("density", Cell::Fixed(r.density)),
        ],
    }
}

fn table(settings: &QuadratureSettings64, format: OutputFormat, digits: usize) -> Result<String, Failure> {
    let reports = TABLE_SYMBOLS
        .iter()
        .map(|s| Ok(density(&parse_symbol(s)?, settings)?))
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(match format {
        OutputFormat::Text => {
            let header: Vec<String> = reports.iter().map(|r| r.symbol.to_string()).collect();
            let row = |label: &str, get: fn(&PackingReport64) -> f64| {
                (label.to_string(), reports.iter().map(|r| fixed(get(r), digits)).collect())
            };
            text_table(
                &header,
                &[
                    row("Vol5(S_i)", |r| r.vol5),
                    row("h_i", |r| r.height),
                    row("Vol(H_opt)", |r| r.piece_volume),
                    row("delta_opt", |r| r.density),
                ],
            )
        }
        OutputFormat::Json => {
            let map: Map<String, Value> = reports
                .iter()
                .map(|r| {
                    let mut rec = report_record(r).to_json(digits);
                    if let Value::Object(m) = &mut rec {
                        m.shift_remove("symbol");
                    }
                    (r.symbol.to_string(), rec)
                })
                .collect();
            json_string(&Value::Object(map))
        }
        OutputFormat::Csv => {
            let records: Vec<Record> = reports.iter().map(report_record).collect();
            render_records(&records, format, digits)
        }
    })
}

/// Densities of the lower-dimensional analogues are literature values whose
/// volume formulas are not implemented here; they are printed verbatim. The
/// 5-dimensional entry is computed.
fn reference_constants(
    settings: &QuadratureSettings64,
    format: OutputFormat,
    digits: usize,
) -> Result<String, Failure> {
    const CITED: [(u32, &str, f64); 2] = [(3, "[7,3,3]", 0.822_513_67), (4, "[3,5,3,3]", 0.576_803_22)];
    let five: CoxeterSymbol = parse_symbol(TABLE_SYMBOLS[0])?;
    let computed = density(&five, settings)?.density;

    let rows: Vec<(u32, String, f64, &str)> = CITED
        .iter()
        .map(|&(n, s, d)| (n, s.to_string(), d, "cited literal, not computed"))
        .chain(std::iter::once((5, five.to_string(), computed, "computed")))
        .collect();

    Ok(match format {
        OutputFormat::Text => {
            let body: Vec<(String, Vec<String>)> = rows
                .iter()
                .map(|(n, s, d, note)| (n.to_string(), vec![s.clone(), fixed(*d, digits), (*note).to_string()]))
                .collect();
            text_table(&["symbol".into(), "delta_max".into(), "source".into()], &body)
        }
        OutputFormat::Json => {
            let arr = rows
                .iter()
                .map(|(n, s, d, note)| {
                    let mut m = Map::new();
                    m.insert("n".into(), Value::from(*n));
                    m.insert("symbol".into(), Value::String(s.clone()));
                    m.insert("density".into(), json_fixed(*d, digits));
                    m.insert("source".into(), Value::String((*note).to_string()));
                    Value::Object(m)
                })
                .collect();
            json_string(&Value::Array(arr))
        }
        OutputFormat::Csv => {
            let records: Vec<Record> = rows
                .iter()
                .map(|(n, s, d, note)| Record {
                    fields: vec![
                        ("n", Cell::Text(n.to_string())),
                        ("symbol", Cell::Text(s.clone())),
                        ("density", Cell::Fixed(*d)),
                        ("source", Cell::Text((*note).to_string())),
                    ],
                })
                .collect();
            render_records(&records, format, digits)
        }
    })
}
