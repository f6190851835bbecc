//! Command line front end for the tiling engine: enumeration, validation,
//! aggregation, Condorcet super-domain checks, the two maximal-CSD
//! constructions, and DOT export.
//!
//! Exit codes: 0 = property holds / construction succeeded, 1 = property
//! fails (a witness is emitted), 2 = usage or format error.

use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use zonotil_core::aggregation::{aggregate_with_system, simple_majority};
use zonotil_core::csd::{closedness_witness, csd_witness, maximality, CsdWitness, Maximality};
use zonotil_core::cubillage::{cubillage_csd, precedence_digraph, validate_admissible};
use zonotil_core::io;
use zonotil_core::snakes::{condorcet_cycle_witness, sigma};
use zonotil_core::symmetric::{boolean_csd, symmetric_partition, SplitSequence};
use zonotil_core::tiling::{flip_graph, median3, ziegler_witness};
use zonotil_core::{enumerate_all, InversionSet, Tiling};

#[derive(Parser)]
#[command(
    name = "zonotil",
    version,
    about = "Rhombus tilings of Z(n;2) as inversion sets: enumeration, majority aggregation, and Condorcet super-domains",
    after_help = "Exit codes: 0 = holds/success, 1 = property fails (witness emitted), 2 = usage or format error.\n\
                  The color-count cap (default 12) can be lowered with the ZONOTIL_MAX_N environment variable."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Bitstrings of width C(n,3)
    #[default]
    Bits,
    /// Comma-separated triple lists
    Triples,
    /// One JSON object with verb, n, verdict, witness, data
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// List all tilings of Z(n;2) in canonical order
    Enumerate {
        #[arg(long)]
        n: u8,
        /// Print only the number of tilings
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check each pseudo-tiling in a file against the stick criterion
    Validate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Aggregate a profile of tilings by simple majority or a majority system
    Aggregate {
        /// Profile file: header `n=<k>`, one tiling per voter line
        #[arg(long)]
        input: PathBuf,
        /// Majority system file: one big coalition per line as a voter bitmask
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Pointwise majority of exactly three pseudo-tilings
    Median {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the linear orders compatible with a tiling
    Snakes {
        /// File with header `n=<k>` and a single tiling line
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check that a set of linear orders never cycles under simple majority
    CdCheck {
        /// One comma-separated order per line, e.g. 3,4,2,1,5
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the Condorcet super-domain property of a set of tilings
    CsdCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check that every member-triple median stays inside the domain
    CsdClosed {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check that no tiling can be added while keeping the CSD property
    CsdMaximal {
        #[arg(long)]
        input: PathBuf,
        /// Give up after this many seconds and report "unknown"
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the super-domain of a stick orientation assignment
    BuildCubillage {
        #[arg(long)]
        n: u8,
        /// Orientation file: one ijkl:D or ijkl:R line per stick
        #[arg(long)]
        orient: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the maximal chain of an admissible linear order on the triples
    BuildChain {
        #[arg(long)]
        n: u8,
        /// File with the comma-separated triple sequence, e.g. 123,124,134,234
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the Boolean super-domain of a split sequence on [2..n-1]
    BuildSymmetric {
        #[arg(long)]
        n: u8,
        /// Comma-separated split sequence, e.g. 3,2
        #[arg(long)]
        seq: String,
        /// Print the partition parts instead of the domain
        #[arg(long)]
        partition: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Emit the flip graph (or a precedence digraph) in DOT form
    ExportGraph {
        #[arg(long)]
        n: u8,
        /// With an orientation file: the precedence digraph instead
        #[arg(long)]
        orient: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))
}

fn format_set(s: &InversionSet, format: Format) -> String {
    match format {
        Format::Triples => io::format_triples(s),
        _ => io::format_bits(s),
    }
}

fn emit_domain(verb: &str, n: u8, sets: Vec<InversionSet>, format: Format) -> i32 {
    match format {
        Format::Json => {
            let data: Vec<String> = sets.iter().map(|s| s.to_bitstring()).collect();
            print_json(json!({ "verb": verb, "n": n, "verdict": "ok", "data": data }));
        }
        _ => {
            print!("{}", io::format_domain_file(n, sets, format == Format::Triples));
        }
    }
    0
}

fn print_json(v: Value) {
    println!("{v}");
}

fn csd_witness_json(w: &CsdWitness) -> Value {
    json!({
        "members": w.members.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "median": w.median.to_bitstring(),
        "stick": w.stick.to_string(),
    })
}

/// Uniform emission for the check verbs: exit 0 on holds, 1 otherwise.
fn emit_verdict(
    verb: &str,
    n: u8,
    verdict: Value,
    witness: Option<(String, Value)>,
    format: Format,
) -> i32 {
    let holds = verdict == json!(true);
    match format {
        Format::Json => {
            let mut obj = json!({ "verb": verb, "n": n, "verdict": verdict });
            if let Some((_, w)) = &witness {
                obj["witness"] = w.clone();
            }
            print_json(obj);
        }
        _ => {
            let text = match &verdict {
                Value::Bool(true) => "holds".into(),
                Value::Bool(false) => "fails".into(),
                other => other.as_str().unwrap_or("?").to_string(),
            };
            println!("verdict: {text}");
            if let Some((line, _)) = &witness {
                println!("witness: {line}");
            }
        }
    }
    if holds {
        0
    } else {
        1
    }
}

fn run(cmd: Cmd) -> anyhow::Result<i32> {
    match cmd {
        Cmd::Enumerate { n, count, format } => {
            let all = enumerate_all(n)?;
            if count {
                match format {
                    Format::Json => print_json(
                        json!({ "verb": "enumerate", "n": n, "verdict": "ok", "data": all.len() }),
                    ),
                    _ => println!("{}", all.len()),
                }
                return Ok(0);
            }
            Ok(emit_domain(
                "enumerate",
                n,
                all.iter().map(|t| *t.inv()).collect(),
                format,
            ))
        }

        Cmd::Validate { input, format } => {
            let (n, sets) = io::parse_domain_file(&read(&input)?)?;
            let verdicts: Vec<Option<String>> = sets
                .iter()
                .map(|s| ziegler_witness(s).map(|stick| stick.to_string()))
                .collect();
            let first_failure = verdicts
                .iter()
                .enumerate()
                .find_map(|(i, w)| w.as_ref().map(|stick| (i, sets[i], stick.clone())));
            match format {
                Format::Json => {
                    let data: Vec<Value> = sets
                        .iter()
                        .zip(&verdicts)
                        .map(|(s, w)| {
                            json!({
                                "input": s.to_bitstring(),
                                "tiling": w.is_none(),
                                "stick": w,
                            })
                        })
                        .collect();
                    let mut obj = json!({
                        "verb": "validate",
                        "n": n,
                        "verdict": first_failure.is_none(),
                        "data": data,
                    });
                    if let Some((i, s, stick)) = &first_failure {
                        obj["witness"] = json!({
                            "line": i,
                            "input": s.to_bitstring(),
                            "stick": stick,
                        });
                    }
                    print_json(obj);
                }
                _ => {
                    for (s, w) in sets.iter().zip(&verdicts) {
                        match w {
                            None => println!("{}: tiling", format_set(s, format)),
                            Some(stick) => {
                                println!("{}: not a tiling (stick {stick})", format_set(s, format))
                            }
                        }
                    }
                }
            }
            Ok(if first_failure.is_none() { 0 } else { 1 })
        }

        Cmd::Aggregate { input, system, format } => {
            let profile = io::parse_profile_file(&read(&input)?)?;
            let agg = match system {
                Some(path) => {
                    let f = io::parse_majority_file(&read(&path)?)?;
                    aggregate_with_system(&profile, &f)?
                }
                None => simple_majority(&profile)?,
            };
            let witness = ziegler_witness(&agg);
            let n = profile.n();
            match format {
                Format::Json => {
                    let mut obj = json!({
                        "verb": "aggregate",
                        "n": n,
                        "verdict": witness.is_none(),
                        "data": agg.to_bitstring(),
                    });
                    if let Some(stick) = &witness {
                        obj["witness"] = json!({
                            "aggregate": agg.to_bitstring(),
                            "stick": stick.to_string(),
                        });
                    }
                    print_json(obj);
                }
                _ => {
                    println!("{}", format_set(&agg, format));
                    match &witness {
                        None => println!("verdict: tiling"),
                        Some(stick) => println!("verdict: not a tiling (stick {stick})"),
                    }
                }
            }
            Ok(if witness.is_none() { 0 } else { 1 })
        }

        Cmd::Median { input, format } => {
            let (n, sets) = io::parse_domain_file(&read(&input)?)?;
            if sets.len() != 3 {
                anyhow::bail!("median needs exactly 3 pseudo-tilings, got {}", sets.len());
            }
            let m = median3(&sets[0], &sets[1], &sets[2])?;
            let witness = ziegler_witness(&m);
            match format {
                Format::Json => {
                    let mut obj = json!({
                        "verb": "median",
                        "n": n,
                        "verdict": witness.is_none(),
                        "data": m.to_bitstring(),
                    });
                    if let Some(stick) = &witness {
                        obj["witness"] =
                            json!({ "median": m.to_bitstring(), "stick": stick.to_string() });
                    }
                    print_json(obj);
                }
                _ => {
                    println!("{}", format_set(&m, format));
                    match &witness {
                        None => println!("verdict: tiling"),
                        Some(stick) => println!("verdict: not a tiling (stick {stick})"),
                    }
                }
            }
            Ok(if witness.is_none() { 0 } else { 1 })
        }

        Cmd::Snakes { input, format } => {
            let (n, sets) = io::parse_domain_file(&read(&input)?)?;
            if sets.len() != 1 {
                anyhow::bail!("snakes needs exactly 1 tiling, got {}", sets.len());
            }
            let t = Tiling::new(sets[0])?;
            let orders = sigma(&t)?;
            match format {
                Format::Json => {
                    let data: Vec<String> = orders.iter().map(|o| o.to_string()).collect();
                    print_json(json!({ "verb": "snakes", "n": n, "verdict": "ok", "data": data }));
                }
                _ => {
                    for o in &orders {
                        println!("{o}");
                    }
                }
            }
            Ok(0)
        }

        Cmd::CdCheck { input, format } => {
            let orders = io::parse_orders_file(&read(&input)?)?;
            let n = orders.first().map_or(0, |o| o.n());
            let witness = condorcet_cycle_witness(&orders);
            let w = witness.as_ref().map(|c| {
                let orders: Vec<String> = c.orders.iter().map(|o| o.to_string()).collect();
                (
                    format!(
                        "orders ({}) cycle on candidates {},{},{}",
                        orders.join(" | "),
                        c.candidates[0],
                        c.candidates[1],
                        c.candidates[2]
                    ),
                    json!({ "orders": orders, "candidates": c.candidates }),
                )
            });
            Ok(emit_verdict("cd-check", n, json!(witness.is_none()), w, format))
        }

        Cmd::CsdCheck { input, format } => {
            let d = io::parse_super_domain_file(&read(&input)?)?;
            let witness = csd_witness(&d);
            let w = witness.as_ref().map(|c| {
                (
                    format!(
                        "median {} of ({}, {}, {}) fails on stick {}",
                        c.median, c.members[0], c.members[1], c.members[2], c.stick
                    ),
                    csd_witness_json(c),
                )
            });
            Ok(emit_verdict("csd-check", d.n(), json!(witness.is_none()), w, format))
        }

        Cmd::CsdClosed { input, format } => {
            let d = io::parse_super_domain_file(&read(&input)?)?;
            let witness = closedness_witness(&d);
            let w = witness.as_ref().map(|c| {
                (
                    format!(
                        "median {} of ({}, {}, {}) is outside the domain",
                        c.median, c.members[0], c.members[1], c.members[2]
                    ),
                    json!({
                        "members": c.members.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                        "median": c.median.to_bitstring(),
                    }),
                )
            });
            Ok(emit_verdict("csd-closed", d.n(), json!(witness.is_none()), w, format))
        }

        Cmd::CsdMaximal { input, budget, format } => {
            let d = io::parse_super_domain_file(&read(&input)?)?;
            let verdict = maximality(&d, budget.map(Duration::from_secs))?;
            let (value, witness) = match &verdict {
                Maximality::Maximal => (json!(true), None),
                Maximality::Extendable(t) => (
                    json!(false),
                    Some((
                        format!("extendable by {t}"),
                        json!({ "extendable_by": t.to_string() }),
                    )),
                ),
                Maximality::NotCsd(c) => (
                    json!(false),
                    Some((
                        format!(
                            "not a CSD: median {} of ({}, {}, {}) fails on stick {}",
                            c.median, c.members[0], c.members[1], c.members[2], c.stick
                        ),
                        csd_witness_json(c),
                    )),
                ),
                Maximality::Unknown => (json!("unknown"), None),
            };
            Ok(emit_verdict("csd-maximal", d.n(), value, witness, format))
        }

        Cmd::BuildCubillage { n, orient, format } => {
            let o = io::parse_orientation_file(&read(&orient)?, n)?;
            match cubillage_csd(&o) {
                Ok(d) => Ok(emit_domain(
                    "build-cubillage",
                    n,
                    d.members().iter().map(|t| *t.inv()).collect(),
                    format,
                )),
                Err(zonotil_core::Error::CyclicOrientations(cycle)) => {
                    let cycle_str: Vec<String> = cycle.iter().map(|t| t.to_string()).collect();
                    Ok(emit_verdict(
                        "build-cubillage",
                        n,
                        json!(false),
                        Some((
                            format!("orientations cycle: {}", cycle_str.join(" -> ")),
                            json!({ "cycle": cycle_str }),
                        )),
                        format,
                    ))
                }
                Err(e) => Err(e.into()),
            }
        }

        Cmd::BuildChain { n, input, format } => {
            let seq = io::parse_triple_seq(&read(&input)?)?;
            match validate_admissible(&seq, n) {
                Ok(order) => {
                    let chain = zonotil_core::cubillage::chain_from_linear(&order);
                    Ok(emit_domain(
                        "build-chain",
                        n,
                        chain.iter().map(|t| *t.inv()).collect(),
                        format,
                    ))
                }
                Err(zonotil_core::Error::Inadmissible(stick)) => Ok(emit_verdict(
                    "build-chain",
                    n,
                    json!(false),
                    Some((
                        format!("stick {stick} is ordered neither way"),
                        json!({ "stick": stick.to_string() }),
                    )),
                    format,
                )),
                Err(e) => Err(e.into()),
            }
        }

        Cmd::BuildSymmetric { n, seq, partition, format } => {
            let s = SplitSequence::new(n, io::parse_color_seq(&seq)?)?;
            let p = symmetric_partition(&s);
            if partition {
                match format {
                    Format::Json => {
                        let data: Vec<Value> = p
                            .parts()
                            .iter()
                            .map(|(j, t)| json!({ "j": j, "part": io::format_triples(t.inv()) }))
                            .collect();
                        print_json(json!({
                            "verb": "build-symmetric",
                            "n": n,
                            "verdict": "ok",
                            "data": data,
                        }));
                    }
                    _ => {
                        for (j, t) in p.parts() {
                            println!("{j}: {}", io::format_triples(t.inv()));
                        }
                    }
                }
                return Ok(0);
            }
            let d = boolean_csd(&p);
            Ok(emit_domain(
                "build-symmetric",
                n,
                d.members().iter().map(|t| *t.inv()).collect(),
                format,
            ))
        }

        Cmd::ExportGraph { n, orient } => {
            match orient {
                Some(path) => {
                    let o = io::parse_orientation_file(&read(&path)?, n)?;
                    match precedence_digraph(&o) {
                        Ok(d) => print!("{}", d.to_dot()),
                        Err(zonotil_core::Error::CyclicOrientations(cycle)) => {
                            let cycle_str: Vec<String> =
                                cycle.iter().map(|t| t.to_string()).collect();
                            println!("verdict: fails");
                            println!("witness: orientations cycle: {}", cycle_str.join(" -> "));
                            return Ok(1);
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                None => print!("{}", flip_graph(n)?.to_dot()),
            }
            Ok(0)
        }
    }
}
