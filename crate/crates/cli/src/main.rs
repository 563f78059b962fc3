//! Command-line surface for the Hessenberg variety counting library.
//!
//! Every verb is a thin adapter over one library call; no arithmetic
//! lives here. Exit codes: 0 success, 2 parse failure, 3 domain error,
//! 4 budget exceeded.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use hessencount_core::algebra::Partition;
use hessencount_core::counting::{self, verify, CountReport};
use hessencount_core::error::Error;
use hessencount_core::gfq::{
    self, count_hessenberg_bruteforce, factor_prime_power, operator_from_type, FieldCtx,
    SimilarityClassType,
};
use hessencount_core::hessenberg::{csqf, modular_triples, HessFn};
use hessencount_core::symfunc::Basis;
use hessencount_core::tableaux::{hall_littlewood, kostka_foulkes};

#[derive(Parser)]
#[command(
    name = "hessencount",
    about = "Exact point counts and Poincaré polynomials of Hessenberg varieties",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct HessArg {
    /// Hessenberg function as a tuple "2,3,3" or a Dyck path "NNENEE".
    #[arg(long)]
    hess: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count points via the Hall-product formula, optionally checked
    /// against brute-force flag enumeration.
    Count {
        #[command(flatten)]
        hess: HessArg,
        /// Similarity class type, e.g. `(1,[2,1]);(2,[1])`.
        #[arg(long = "type")]
        type_str: String,
        /// Prime power field size.
        #[arg(long)]
        q: u64,
        /// Also run the brute-force oracle and report agreement.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Poincaré polynomial of a complex Hessenberg variety.
    Poincare {
        #[command(flatten)]
        hess: HessArg,
        /// Jordan type as semicolon-separated partitions, e.g. "2,1;1".
        #[arg(long)]
        jordan: String,
    },
    /// Chromatic quasisymmetric function of the indifference graph.
    Csf {
        #[command(flatten)]
        hess: HessArg,
        /// Output basis: e or m.
        #[arg(long, default_value = "e")]
        basis: String,
        #[arg(long)]
        json: bool,
    },
    /// Modified Hall-Littlewood polynomial in the Schur basis.
    Hl {
        /// Partition, e.g. "2,1".
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// Modified Kostka-Foulkes polynomial of a shape and content.
    Kostka {
        /// Shape partition.
        #[arg(long)]
        mu: String,
        /// Content partition.
        #[arg(long)]
        lambda: String,
    },
    /// Invariant flag generating function of a similarity class type.
    Ftau {
        /// Similarity class type, e.g. `(1,[2,1]);(2,[1])`.
        #[arg(long = "type")]
        type_str: String,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force point count for the canonical operator of a type.
    Bruteforce {
        #[command(flatten)]
        hess: HessArg,
        #[arg(long = "type")]
        type_str: String,
        #[arg(long)]
        q: u64,
    },
    /// List the modular-law triples on `[n]`.
    Triples {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the cross-verification suite.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated prime powers, e.g. "2,3".
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    // Die quietly on a closed pipe instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_parse() {
        2
    } else if e.is_budget() {
        4
    } else {
        3
    }
}

fn budget() -> u64 {
    std::env::var("HESSENCOUNT_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(gfq::DEFAULT_BUDGET)
}

fn parse_jordan(s: &str) -> Result<Vec<Partition>, Error> {
    s.split(';')
        .map(|p| Partition::parse(p.trim()))
        .collect::<Result<Vec<_>, _>>()
}

fn field_meta(q: u64) -> Result<Option<(u64, u32, String)>, Error> {
    let (p, e) = factor_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if e == 1 {
        return Ok(None);
    }
    let ctx = FieldCtx::new(q)?;
    Ok(Some((p, e, ctx.modulus_string())))
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Count {
            hess,
            type_str,
            q,
            bruteforce,
        } => {
            let m = HessFn::parse(&hess.hess)?;
            let tau = SimilarityClassType::parse(&type_str)?;
            let formula = counting::count_points(&m, &tau, q)?;
            let (bf, agree, field) = if bruteforce {
                let ctx = FieldCtx::new(q)?;
                let op = operator_from_type(&tau, &ctx)?;
                let count = count_hessenberg_bruteforce(&m, &op, budget())?;
                (
                    Some(count),
                    Some(BigInt::from(count) == formula),
                    field_meta(q)?,
                )
            } else {
                (None, None, None)
            };
            let report = CountReport {
                m,
                tau,
                q,
                formula,
                bruteforce: bf,
                agree,
                field,
            };
            println!("{}", report.to_json());
        }
        Cmd::Poincare { hess, jordan } => {
            let m = HessFn::parse(&hess.hess)?;
            let jordan = parse_jordan(&jordan)?;
            let report = counting::poincare(&m, &jordan)?;
            println!("{}", report.to_json());
        }
        Cmd::Csf { hess, basis, json } => {
            let m = HessFn::parse(&hess.hess)?;
            let basis = Basis::parse(&basis)?;
            if !matches!(basis, Basis::Elementary | Basis::Monomial) {
                return Err(Error::Parse(format!(
                    "csf supports bases e and m, got {basis}"
                )));
            }
            let x = csqf(&m)?.in_basis(basis)?;
            if json {
                println!("{}", x.to_json());
            } else {
                println!("{x}");
            }
        }
        Cmd::Hl { lambda, json } => {
            let lam = Partition::parse(&lambda)?;
            let hl = hall_littlewood(&lam)?;
            if json {
                println!("{}", hl.to_json());
            } else {
                println!("{hl}");
            }
        }
        Cmd::Kostka { mu, lambda } => {
            let mu = Partition::parse(&mu)?;
            let lam = Partition::parse(&lambda)?;
            let kf = kostka_foulkes(&mu, &lam)?;
            println!("{kf}");
        }
        Cmd::Ftau { type_str, json } => {
            let tau = SimilarityClassType::parse(&type_str)?;
            let f = gfq::f_tau(&tau)?;
            if json {
                println!("{}", f.to_json());
            } else {
                println!("{f}");
            }
        }
        Cmd::Bruteforce { hess, type_str, q } => {
            let m = HessFn::parse(&hess.hess)?;
            let tau = SimilarityClassType::parse(&type_str)?;
            let ctx = FieldCtx::new(q)?;
            let op = operator_from_type(&tau, &ctx)?;
            let count = count_hessenberg_bruteforce(&m, &op, budget())?;
            let mut v = serde_json::json!({
                "m": m.values(),
                "type": tau.to_string(),
                "q": q,
                "bruteforce": count,
            });
            if let Some((p, e, modulus)) = field_meta(q)? {
                v.as_object_mut().unwrap().insert(
                    "field".into(),
                    serde_json::json!({"p": p, "e": e, "modulus": modulus}),
                );
            }
            println!("{v}");
        }
        Cmd::Triples { n, json } => {
            let triples = modular_triples(n);
            if json {
                let items: Vec<serde_json::Value> = triples
                    .iter()
                    .map(|t| {
                        serde_json::json!({
                            "m0": t.m0.values(),
                            "m1": t.m1.values(),
                            "m2": t.m2.values(),
                            "condition": t.condition,
                            "index": t.index,
                        })
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(items));
            } else {
                for t in &triples {
                    println!(
                        "condition {} at i={}: ({}) ({}) ({})",
                        t.condition, t.index, t.m0, t.m1, t.m2
                    );
                }
            }
        }
        Cmd::Verify { n, q, json } => {
            let q_list: Vec<u64> = if q.trim().is_empty() {
                Vec::new()
            } else {
                q.split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad field size {s:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            let config = verify::SuiteConfig {
                n_max: n,
                q_list,
                budget: budget(),
            };
            let report = verify::verify_suite(&config)?;
            if json {
                println!("{}", report.to_json());
            } else {
                if let Some(note) = &report.note {
                    println!("note: {note}");
                }
                for check in &report.checks {
                    let status = if check.pass { "PASS" } else { "FAIL" };
                    println!("{status} [{} cells] {}", check.cells, check.name);
                    for f in &check.failures {
                        println!("      counterexample: {f}");
                    }
                }
                println!(
                    "{}",
                    if report.all_pass {
                        "all checks passed"
                    } else {
                        "FAILURES PRESENT"
                    }
                );
            }
            if !report.all_pass {
                std::process::exit(1);
            }
        }
    }
    Ok(())
}
