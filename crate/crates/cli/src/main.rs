//! Command-line front end for the exact boson-fermion correspondence:
//! space-to-space conversion, inner products, character tables and the
//! chain isometry verifier.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use fockbridge_cli::{doc, parser, spaces};

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fockbridge::boson::boson_inner;
use fockbridge::bridge::verify_isometry;
use fockbridge::combinatorics::partitions_of;
use fockbridge::fermion::fock_inner;
use fockbridge::symm::{apply_i, character_table, hall_inner};

use doc::{from_document, to_document, Document};
use parser::Family;
use spaces::{Space, Value};

#[derive(Parser)]
#[command(
    name = "fockbridge",
    about = "Exact boson-fermion correspondence: conversions, inner products, character tables",
    version
)]
struct Cli {
    /// Degree cap for expressions, tables and verification sweeps
    #[arg(long, global = true, default_value_t = 8)]
    max_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputSpace {
    Boson,
    Symm,
    Fermion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Expression in the source space's grammar (z- or p-variables)
    #[arg(long, conflicts_with = "json")]
    expr: Option<String>,
    /// Machine-readable vector document ('-' reads standard input)
    #[arg(long)]
    json: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a vector between the representations of the chain
    Convert {
        #[arg(long, value_enum)]
        from: InputSpace,
        #[arg(long, value_enum)]
        to: Space,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
    },
    /// Inner product of two vectors in one space
    Inner {
        #[arg(long, value_enum)]
        space: InputSpace,
        /// First vector: an expression, or a JSON document path for fermion
        f: String,
        /// Second vector: an expression, or a JSON document path for fermion
        g: String,
    },
    /// Character table of the symmetric group on n letters
    Chartable {
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
    },
    /// Check the full-chain isometry on all monomial pairs up to a degree
    Verify {
        #[arg(long, default_value_t = 8)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
    },
    /// Expand a symmetric function in the Schur basis
    /// (alias of `convert --from symm --to symm-s`)
    SchurExpand {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let cap = cli.max_degree;
    match cli.command {
        Command::Convert {
            from,
            to,
            input,
            output,
        } => {
            let value = read_input(from, &input, cap)?;
            emit(&value.convert_to(to), output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::SchurExpand { input, output } => {
            let value = read_input(InputSpace::Symm, &input, cap)?;
            emit(&value.convert_to(Space::SymmS), output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Inner { space, f, g } => {
            let result = match space {
                InputSpace::Boson => {
                    let (a, b) = (parse_expr(&f, Family::Z, cap)?, parse_expr(&g, Family::Z, cap)?);
                    boson_inner(&a, &b)
                }
                InputSpace::Symm => {
                    let (a, b) = (parse_expr(&f, Family::P, cap)?, parse_expr(&g, Family::P, cap)?);
                    hall_inner(&apply_i(&a), &apply_i(&b))
                }
                InputSpace::Fermion => {
                    let a = read_fermion_doc(&f)?;
                    let b = read_fermion_doc(&g)?;
                    fock_inner(&a, &b)
                }
            };
            println!("{result}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Chartable { n, output } => {
            if n == 0 {
                return Err("n must be a positive integer".into());
            }
            if n > cap {
                return Err(format!(
                    "n = {n} exceeds the cap {cap} (raise with --max-degree)"
                ));
            }
            print_chartable(n, output);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { degree, output } => {
            if degree > cap {
                return Err(format!(
                    "degree {degree} exceeds the cap {cap} (raise with --max-degree)"
                ));
            }
            let report = verify_isometry(degree);
            match output {
                OutputFormat::Text => println!("{report}"),
                OutputFormat::Json => {
                    let degrees: Vec<serde_json::Value> = report
                        .degrees
                        .iter()
                        .map(|d| {
                            serde_json::json!({
                                "degree": d.degree,
                                "pairs": d.pairs,
                                "passed": d.passed(),
                            })
                        })
                        .collect();
                    let out = serde_json::json!({
                        "degree_bound": report.degree_bound,
                        "degrees": degrees,
                        "passed": report.passed(),
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_expr(
    text: &str,
    family: Family,
    cap: u32,
) -> Result<fockbridge::boson::BosonPolynomial, String> {
    let parsed = parser::parse(text, family).map_err(|e| e.to_string())?;
    parser::eval(&parsed.expr, cap).map_err(|e| e.to_string())
}

fn read_input(from: InputSpace, input: &InputArgs, cap: u32) -> Result<Value, String> {
    match (&input.expr, &input.json) {
        (Some(text), None) => match from {
            InputSpace::Boson => Ok(Value::Boson(parse_expr(text, Family::Z, cap)?)),
            InputSpace::Symm => Ok(Value::SymmP(apply_i(&parse_expr(text, Family::P, cap)?))),
            InputSpace::Fermion => {
                Err("fermion input is machine-readable only; use --json".into())
            }
        },
        (None, Some(path)) => {
            let value = read_document(path)?;
            let compatible = matches!(
                (from, value.space()),
                (InputSpace::Boson, Space::Boson)
                    | (InputSpace::Symm, Space::SymmP)
                    | (InputSpace::Symm, Space::SymmS)
                    | (InputSpace::Fermion, Space::Fermion)
            );
            if !compatible {
                return Err(format!(
                    "document space '{}' does not match --from",
                    value.space().tag()
                ));
            }
            Ok(value)
        }
        _ => Err("provide exactly one of --expr or --json".into()),
    }
}

fn read_document(path: &str) -> Result<Value, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    let doc: Document = serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
    from_document(&doc).map_err(|e| e.to_string())
}

fn read_fermion_doc(path: &str) -> Result<fockbridge::fermion::FockVector, String> {
    match read_document(path)? {
        Value::Fermion(f) => Ok(f),
        other => Err(format!(
            "expected a fermion document, found space '{}'",
            other.space().tag()
        )),
    }
}

fn emit(value: &Value, output: OutputFormat) -> Result<(), String> {
    match output {
        OutputFormat::Text => println!("{}", value.render()),
        OutputFormat::Json => {
            let doc = to_document(value);
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?
            );
        }
    }
    Ok(())
}

fn print_chartable(n: u32, output: OutputFormat) {
    let table = character_table(n);
    let lambdas = partitions_of(n);
    let mus: Vec<_> = partitions_of(n).into_iter().rev().collect();
    match output {
        OutputFormat::Text => {
            let row_labels: Vec<String> = lambdas.iter().map(|l| l.to_string()).collect();
            let col_labels: Vec<String> = mus.iter().map(|m| m.to_string()).collect();
            let label_width = row_labels.iter().map(String::len).max().unwrap_or(0);
            let col_widths: Vec<usize> = col_labels
                .iter()
                .enumerate()
                .map(|(c, label)| {
                    table
                        .iter()
                        .map(|row| row[c].to_string().len())
                        .chain([label.len()])
                        .max()
                        .unwrap()
                })
                .collect();
            let mut header = format!("{:<label_width$}", "");
            for (label, w) in col_labels.iter().zip(&col_widths) {
                header.push_str(&format!("  {label:>w$}"));
            }
            println!("{header}");
            for (r, row) in table.iter().enumerate() {
                let mut line = format!("{:<label_width$}", row_labels[r]);
                for (value, w) in row.iter().zip(&col_widths) {
                    line.push_str(&format!("  {value:>w$}"));
                }
                println!("{line}");
            }
        }
        OutputFormat::Json => {
            let out = serde_json::json!({
                "n": n,
                "row_partitions": lambdas.iter().map(|l| l.parts().to_vec()).collect::<Vec<_>>(),
                "col_partitions": mus.iter().map(|m| m.parts().to_vec()).collect::<Vec<_>>(),
                "rows": table,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
}
