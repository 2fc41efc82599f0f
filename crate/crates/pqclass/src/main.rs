use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pqclass::suites::{run_suite, Suite, SuiteOptions};
use pqclass::text::{format_class, parse_class, parse_permutation, parse_point_sequence};
use pqclass::Parallel;
use pqclass_core::{
    all_outputs, basis_of_ca_with, build_poset, family_2431, in_ac, in_ca,
    is_allowable_forbidden, is_allowable_poset, is_allowable_sim, verify_family_member,
    PatternClass, Permutation, PermutationPair,
};
use serde_json::json;

/// Priority-queue transduction of permutation pattern classes.
#[derive(Parser)]
#[command(name = "pqclass", version)]
struct Cli {
    /// Emit JSON instead of line-oriented text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for searches (default: machine parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Length bound for basis searches and verification suites.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on single permutations.
    #[command(subcommand)]
    Perm(PermCommand),
    /// Print the constraints of P(tau), one "x < y" per line.
    Poset {
        tau: String,
        /// Print the transitive closure instead of the generating constraints.
        #[arg(long)]
        closed: bool,
    },
    /// Decide whether a priority queue can turn sigma into tau.
    Allowable {
        sigma: String,
        tau: String,
        #[arg(long, value_enum, default_value_t = Method::Sim)]
        method: Method,
    },
    /// Every output the queue can produce from sigma.
    Outputs { sigma: String },
    /// Every input from which the queue can produce tau.
    Inputs { tau: String },
    /// Decide whether tau lies in C·A.
    Member {
        #[command(flatten)]
        class: ClassArg,
        tau: String,
    },
    /// Search the basis of C·A up to --max-len (default 7).
    Basis {
        #[command(flatten)]
        class: ClassArg,
    },
    /// Decide whether sigma lies in A·C.
    DualMember {
        #[command(flatten)]
        class: ClassArg,
        sigma: String,
    },
    /// Print (and optionally verify) a basis element of Av(2431)·A.
    Family {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Run a reproduction suite.
    Verify {
        /// pairs-equivalence, theorem6, singles, table1, triples, family,
        /// weak-descending, dual, properties, or all
        suite: String,
    },
}

#[derive(Subcommand)]
enum PermCommand {
    /// The permutation order-isomorphic to a sequence of distinct integers.
    Pattern {
        #[arg(required = true, allow_negative_numbers = true)]
        entries: Vec<String>,
    },
    /// Decide whether the first permutation contains the second.
    Contains { haystack: String, needle: String },
    /// Upper covers in the weak order.
    Covers { perm: String },
}

#[derive(Args)]
struct ClassArg {
    /// Comma-separated basis, e.g. 3142,4132.
    #[arg(long = "class")]
    basis: String,
}

impl ClassArg {
    fn parse(&self) -> Result<PatternClass> {
        Ok(parse_class(&self.basis)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Sim,
    Pairs,
    Poset,
}

/// Outcome of a command: a decision maps onto exit codes 0 and 1.
enum Outcome {
    Done,
    Decision(bool),
}

fn perm(text: &str) -> Result<Permutation> {
    Ok(parse_permutation(text)?)
}

fn print_perms<'a>(json: bool, perms: impl IntoIterator<Item = &'a Permutation>) {
    let lines: Vec<String> = perms.into_iter().map(ToString::to_string).collect();
    if json {
        println!("{}", json!(lines));
    } else {
        for l in lines {
            println!("{l}");
        }
    }
}

fn decision(json: bool, key: &str, value: bool) -> Outcome {
    if json {
        println!("{}", json!({ key: value }));
    } else {
        println!("{value}");
    }
    Outcome::Decision(value)
}

fn run(cli: Cli) -> Result<Outcome> {
    let json = cli.json;
    match cli.command {
        Command::Perm(PermCommand::Pattern { entries }) => {
            let seq = parse_point_sequence(&entries.join(" "))?;
            let p = seq.pattern()?;
            if json {
                println!("{}", json!({ "pattern": p.to_string() }));
            } else {
                println!("{p}");
            }
            Ok(Outcome::Done)
        }
        Command::Perm(PermCommand::Contains { haystack, needle }) => {
            Ok(decision(json, "contains", perm(&haystack)?.contains(&perm(&needle)?)))
        }
        Command::Perm(PermCommand::Covers { perm: p }) => {
            print_perms(json, &perm(&p)?.weak_covers_up());
            Ok(Outcome::Done)
        }
        Command::Poset { tau, closed } => {
            let poset = build_poset(&perm(&tau)?);
            let pairs = if closed { poset.closed_constraints() } else { poset.constraints() };
            if json {
                println!("{}", json!(pairs));
            } else {
                for (x, y) in pairs {
                    println!("{x} < {y}");
                }
            }
            Ok(Outcome::Done)
        }
        Command::Allowable { sigma, tau, method } => {
            let pair = PermutationPair::new(perm(&sigma)?, perm(&tau)?)?;
            let ok = match method {
                Method::Sim => is_allowable_sim(&pair),
                Method::Pairs => is_allowable_forbidden(&pair),
                Method::Poset => is_allowable_poset(&pair),
            };
            Ok(decision(json, "allowable", ok))
        }
        Command::Outputs { sigma } => {
            print_perms(json, &all_outputs(&perm(&sigma)?));
            Ok(Outcome::Done)
        }
        Command::Inputs { tau } => {
            let poset = build_poset(&perm(&tau)?);
            print_perms(json, &poset.linear_extensions().collect::<Vec<_>>());
            Ok(Outcome::Done)
        }
        Command::Member { class, tau } => {
            Ok(decision(json, "member", in_ca(&perm(&tau)?, &class.parse()?)))
        }
        Command::DualMember { class, sigma } => {
            Ok(decision(json, "member", in_ac(&perm(&sigma)?, &class.parse()?)?))
        }
        Command::Basis { class } => {
            let c = class.parse()?;
            let max_len = cli.max_len.unwrap_or(7);
            let par = Parallel::new(cli.jobs)?;
            let report = basis_of_ca_with(&c, max_len, &par);
            let basis: Vec<String> = report.class_basis_found.iter().map(ToString::to_string).collect();
            if json {
                println!(
                    "{}",
                    json!({
                        "basis": basis,
                        "complete_up_to": report.complete_up_to,
                        "examined": report.search_stats.examined,
                    })
                );
            } else {
                println!("class: {}", format_class(&c));
                println!("basis: {}", basis.join(","));
                println!("complete_up_to: {}", report.complete_up_to);
                println!("examined: {}", report.search_stats.examined);
            }
            Ok(Outcome::Done)
        }
        Command::Family { m, verify } => {
            if !verify {
                let p = family_2431(m)?;
                if json {
                    println!("{}", json!({ "m": m, "member": p.to_string() }));
                } else {
                    println!("{p}");
                }
                return Ok(Outcome::Done);
            }
            let r = verify_family_member(m)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "m": m,
                        "member": r.member.to_string(),
                        "excluded": r.excluded,
                        "failing_deletions": r.failing_deletions,
                        "passed": r.passed(),
                    })
                );
            } else {
                println!("{}", r.member);
                println!("excluded: {}", r.excluded);
                println!("failing deletions: {:?}", r.failing_deletions);
            }
            Ok(Outcome::Decision(r.passed()))
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let opts = SuiteOptions { max_len: cli.max_len, jobs: cli.jobs, ..SuiteOptions::default() };
            let mut all_passed = true;
            let mut results = Vec::new();
            for s in suites {
                let r = run_suite(s, &opts).with_context(|| format!("running suite {s}"))?;
                all_passed &= r.passed();
                if !json {
                    println!("{r}");
                }
                results.push(r);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&results)?);
            }
            Ok(Outcome::Decision(all_passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Done) | Ok(Outcome::Decision(true)) => ExitCode::SUCCESS,
        Ok(Outcome::Decision(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

