use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use dualbraid::congruence::{cube_check, Congruence, DEFAULT_STEP_BOUND};
use dualbraid::coxeter::CoxeterDatum;
use dualbraid::embedding::{verify_classical_from_dual, verify_dual_relations_in_group};
use dualbraid::garside::{group_normal_form, halfturn_fixed_check};
use dualbraid::interval::{enumerate_interval, GarsideData, Structure};
use dualbraid::presentation::{
    classical_presentation, complete_dual, completed_dual_presentation, dual_presentation,
    garside_word, normalize_word_text, parse_signed_word, Presentation,
};
use dualbraid::table::{count_simples, table1, Engine, TableOptions};
use dualbraid::{CoxeterType, Error};

#[derive(Parser, Debug)]
#[command(name = "dualbraid", version, about = "Dual braid monoids of finite Coxeter types")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a presentation.
    Present {
        /// Type token: A, B, D, I2:<m>, H3, H4, F4, E6, E7, E8.
        ty: String,
        rank: Option<u32>,
        #[arg(long, value_enum, default_value = "dual")]
        flavor: FlavorArg,
    },
    /// Count simple elements.
    Simples {
        #[command(subcommand)]
        action: SimplesAction,
    },
    /// Run a structural verification.
    Verify {
        #[arg(value_enum)]
        check: Check,
        ty: String,
        rank: Option<u32>,
        /// Use the uncompleted dual presentation (cube check).
        #[arg(long)]
        base: bool,
    },
    /// Normal form of a group word.
    Nf {
        ty: String,
        /// Optional rank followed by the word.
        #[arg(required = true, num_args = 1..)]
        rest: Vec<String>,
        /// Use the classical Garside structure.
        #[arg(long)]
        classical: bool,
    },
    /// Decide equality of two group words.
    Eq {
        ty: String,
        /// Optional rank followed by two words.
        #[arg(required = true, num_args = 2..)]
        rest: Vec<String>,
        #[arg(long)]
        classical: bool,
    },
    /// Both rows of the simple-element table, computed against expected.
    Table1 {
        #[arg(long)]
        max_rank: Option<u32>,
        /// Comma-separated type families to skip, e.g. E7,E8.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<String>,
        /// Include E7 and E8.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SimplesAction {
    Count {
        ty: String,
        rank: Option<u32>,
        #[arg(long, value_enum, default_value = "interval")]
        engine: EngineArg,
        #[arg(long, value_enum, default_value = "dual")]
        structure: StructureArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FlavorArg {
    Classical,
    Dual,
    Completed,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EngineArg {
    Interval,
    Rewriting,
    Formula,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StructureArg {
    Dual,
    Classical,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Check {
    Cube,
    Lattice,
    Embedding,
    ClassicalFromDual,
    Completion,
    GarsideElement,
    Halfturn,
}

/// Outcome of a subcommand: text, JSON and whether the checks passed.
struct Outcome {
    text: String,
    json: Value,
    pass: bool,
}

impl Outcome {
    fn report<T: Serialize>(report: &T, pass: bool) -> Result<Self, Error> {
        let json = serde_json::to_value(report).map_err(|e| Error::Structure(e.to_string()))?;
        let text = serde_json::to_string_pretty(&json).map_err(|e| Error::Structure(e.to_string()))?;
        Ok(Outcome { text, json, pass })
    }
}

fn parse_type(token: &str, rank: Option<u32>) -> Result<CoxeterType, Error> {
    CoxeterType::from_parts(token, rank)
}

/// Splits `[rank] words...` after a type token.
fn split_rank(token: &str, rest: &[String]) -> Result<(CoxeterType, Vec<String>), Error> {
    match rest.first().and_then(|r| r.parse::<u32>().ok()) {
        Some(rank) => Ok((parse_type(token, Some(rank))?, rest[1..].to_vec())),
        None => Ok((parse_type(token, None)?, rest.to_vec())),
    }
}

fn presentation_for(ty: CoxeterType, classical: bool) -> Result<Presentation, Error> {
    if classical {
        classical_presentation(ty)
    } else {
        completed_dual_presentation(ty)
    }
}

fn garside_data(ty: CoxeterType, classical: bool) -> Result<GarsideData, Error> {
    if classical {
        GarsideData::classical(ty)
    } else {
        GarsideData::dual(ty)
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Present { ty, rank, flavor } => {
            let ty = parse_type(ty, *rank)?;
            let p = match flavor {
                FlavorArg::Classical => classical_presentation(ty)?,
                FlavorArg::Dual => dual_presentation(ty)?,
                FlavorArg::Completed => completed_dual_presentation(ty)?,
            };
            let json = serde_json::to_value(p.to_json()).map_err(|e| Error::Structure(e.to_string()))?;
            Ok(Outcome {
                text: p.to_string(),
                json,
                pass: true,
            })
        }
        Command::Simples {
            action: SimplesAction::Count { ty, rank, engine, structure },
        } => {
            let ty = parse_type(ty, *rank)?;
            let engine = match engine {
                EngineArg::Interval => Engine::Interval,
                EngineArg::Rewriting => Engine::Rewriting,
                EngineArg::Formula => Engine::Formula,
            };
            let structure = match structure {
                StructureArg::Dual => Structure::Dual,
                StructureArg::Classical => Structure::Classical,
            };
            let r = count_simples(ty, structure, engine)?;
            let mut out = Outcome::report(&r, r.agree)?;
            out.text = if r.agree {
                r.count.to_string()
            } else {
                format!("{} (engines disagree: {:?})", r.count, r.engines)
            };
            Ok(out)
        }
        Command::Verify { check, ty, rank, base } => verify(*check, ty, *rank, *base),
        Command::Nf { ty, rest, classical } => {
            let (ty, words) = split_rank(ty, rest)?;
            let p = presentation_for(ty, *classical)?;
            let data = garside_data(ty, *classical)?;
            let w = parse_signed_word(&normalize_word_text(&words.join(" ")), &p)?;
            let nf = group_normal_form(&data, &w)?.to_json(&data);
            let mut out = Outcome::report(&nf, true)?;
            let factors: Vec<String> = nf.factors.iter().map(|f| format!("({f})")).collect();
            out.text = format!("Δ^{} {}", nf.delta_power, factors.join(" ")).trim_end().to_string();
            Ok(out)
        }
        Command::Eq { ty, rest, classical } => {
            let (ty, words) = split_rank(ty, rest)?;
            if words.len() != 2 {
                return Err(Error::Syntax {
                    position: 0,
                    message: format!("expected two quoted words, got {}", words.len()),
                });
            }
            let p = presentation_for(ty, *classical)?;
            let data = garside_data(ty, *classical)?;
            let u = parse_signed_word(&words[0], &p)?;
            let v = parse_signed_word(&words[1], &p)?;
            let (nu, nv) = (group_normal_form(&data, &u)?, group_normal_form(&data, &v)?);
            let equal = nu == nv;
            let json = serde_json::json!({
                "check": "eq",
                "type": ty.family(),
                "rank": ty.parameter(),
                "equal": equal,
                "normal_forms": [nu.to_json(&data), nv.to_json(&data)],
            });
            // Answering the question is the check; inequality is not a failure.
            Ok(Outcome {
                text: equal.to_string(),
                json,
                pass: true,
            })
        }
        Command::Table1 { max_rank, skip, full } => {
            let table = table1(&TableOptions {
                max_rank: *max_rank,
                skip: skip.clone(),
                full: *full,
            });
            let mut out = Outcome::report(&table, table.pass)?;
            out.text = table.render().trim_end().to_string();
            Ok(out)
        }
    }
}

fn verify(check: Check, token: &str, rank: Option<u32>, base: bool) -> Result<Outcome, Error> {
    if let Check::Halfturn = check {
        // `verify halfturn 2` or `verify halfturn B 2`
        let n = match (token.parse::<u32>(), rank) {
            (Ok(n), None) => n,
            _ => match parse_type(token, rank)? {
                CoxeterType::B(n) => n,
                other => {
                    return Err(Error::Unsupported(format!("the halfturn check takes B(n), not {other}")))
                }
            },
        };
        let r = halfturn_fixed_check(n as u16)?;
        return Outcome::report(&r, r.pass);
    }
    let ty = parse_type(token, rank)?;
    match check {
        Check::Cube => {
            let p = if base { dual_presentation(ty)? } else { completed_dual_presentation(ty)? };
            let r = cube_check(&p, DEFAULT_STEP_BOUND)?;
            Outcome::report(&r, r.pass)
        }
        Check::Lattice => {
            let r = enumerate_interval(&CoxeterDatum::new(ty)?)?.verify_lattice();
            Outcome::report(&r, r.pass)
        }
        Check::Embedding => {
            let r = verify_dual_relations_in_group(ty)?;
            Outcome::report(&r, r.pass)
        }
        Check::ClassicalFromDual => {
            let r = verify_classical_from_dual(ty)?;
            Outcome::report(&r, r.pass)
        }
        Check::Completion => {
            let r = complete_dual(ty)?.report;
            Outcome::report(&r, r.pass)
        }
        Check::GarsideElement => {
            let delta = garside_word(ty)?;
            let r = Congruence::new(&completed_dual_presentation(ty)?).is_garside_element(&delta)?;
            let datum = CoxeterDatum::new(ty)?;
            let image_ok = &datum.word_image(&delta)? == datum.coxeter_element();
            let mut out = Outcome::report(&r, r.pass && image_ok)?;
            if let Value::Object(map) = &mut out.json {
                map.insert("image_is_coxeter_element".into(), Value::Bool(image_ok));
                map.insert("pass".into(), Value::Bool(out.pass));
            }
            out.text = serde_json::to_string_pretty(&out.json).unwrap_or_default();
            Ok(out)
        }
        Check::Halfturn => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).unwrap_or_default()
            } else {
                out.text
            };
            // A closed pipe is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{text}");
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(std::io::stdout(), "{}", serde_json::json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            match e {
                Error::ClassCap(_) | Error::ResourceGuard { .. } | Error::Structure(_) | Error::NotSimple(_) => {
                    ExitCode::from(1)
                }
                _ => ExitCode::from(2),
            }
        }
    }
}
