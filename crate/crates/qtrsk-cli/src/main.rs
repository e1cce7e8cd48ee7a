//! `qtrsk` — exact verification suites and the randomized dual-RSK engine on
//! the command line.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qtrsk_cli::suites::{self, distribution_rows, value_mode, Bounds};
use qtrsk_cli::text::{parse_matrix, parse_rational, parse_tableau, render_tableau};

use qtrsk_core::growth::{
    backward_distribution, forward_distribution, growth_insert, sample_forward, InsertRule,
    SplitMix64, ValueMode,
};
use qtrsk_core::weights::TableauFlavor;
use qtrsk_core::Rat;

#[derive(Parser)]
#[command(
    name = "qtrsk",
    about = "Exact (q,t)-randomized dual RSK: verification suites, outcome distributions, insertion, and sampling",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a named verification suite and report failures.
    Verify {
        /// Suite name (see `--help` output of a failing run for the list).
        suite: String,
        /// Bound on the total cell count of the swept shapes.
        #[arg(long = "max-cells")]
        max_cells: Option<u32>,
        /// Bound on matrix row count.
        #[arg(long)]
        rows: Option<usize>,
        /// Bound on matrix column count.
        #[arg(long)]
        cols: Option<usize>,
        /// Seed for randomized parameter sets.
        #[arg(long)]
        seed: Option<u64>,
        /// Extra evaluation point: two rationals `q0 t0`.
        #[arg(long, num_args = 2, value_names = ["Q0", "T0"])]
        eval: Option<Vec<String>>,
        /// Machine-readable output (deterministic, byte-identical).
        #[arg(long)]
        json: bool,
    },
    /// Print the exact outcome distribution of a 0/1-matrix.
    Forward {
        /// Source matrix, e.g. `110;001`.
        #[arg(long)]
        matrix: String,
        /// Report α-limits instead of (q,t)-rationals.
        #[arg(long)]
        jack: bool,
        /// Evaluate at a rational point: `q0 t0`.
        #[arg(long, num_args = 2, value_names = ["Q0", "T0"])]
        eval: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// Print the exact distribution over source matrices of a boundary pair.
    Backward {
        /// Insertion tableau (weakly increasing rows), e.g. `1,1;2`.
        #[arg(long)]
        p: String,
        /// Recording tableau (strictly increasing rows), e.g. `1,2;3`.
        #[arg(long)]
        q: String,
        #[arg(long)]
        jack: bool,
        #[arg(long, num_args = 2, value_names = ["Q0", "T0"])]
        eval: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// Print the outcome distribution of inserting values into a tableau.
    Insert {
        /// Starting tableau, e.g. `1,2;3`.
        #[arg(long)]
        tableau: String,
        /// Distinct values to insert, e.g. `2,3`.
        #[arg(long)]
        values: String,
        /// Insertion rule: `row`, `col`, or `qt`.
        #[arg(long)]
        rule: String,
        #[arg(long)]
        jack: bool,
        #[arg(long, num_args = 2, value_names = ["Q0", "T0"])]
        eval: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// Draw seeded samples from the forward distribution and report
    /// empirical frequencies next to the exact probabilities.
    Sample {
        #[arg(long)]
        matrix: String,
        /// Rational parameter q, e.g. `1/3`.
        #[arg(long)]
        q: String,
        /// Rational parameter t, e.g. `1/4`.
        #[arg(long)]
        t: String,
        #[arg(long)]
        seed: u64,
        /// Number of samples.
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
}

fn parse_eval(eval: &Option<Vec<String>>) -> Result<Option<(Rat, Rat)>, String> {
    match eval {
        None => Ok(None),
        Some(xs) => {
            let q0 = parse_rational(&xs[0])?;
            let t0 = parse_rational(&xs[1])?;
            Ok(Some((q0, t0)))
        }
    }
}

fn print_distribution(rows: Vec<(String, String)>, json: bool) {
    if json {
        let outcomes: Vec<serde_json::Value> = rows
            .iter()
            .map(|(k, v)| serde_json::json!({ "outcome": k, "value": v }))
            .collect();
        println!(
            "{}",
            serde_json::to_string(&serde_json::json!({ "outcomes": outcomes }))
                .expect("serializable")
        );
    } else {
        for (k, v) in rows {
            println!("{k}\t{v}");
        }
    }
}

fn run() -> Result<ExitCode, String> {
    if let Ok(threads) = std::env::var("QTRSK_THREADS") {
        let n: usize = threads
            .parse()
            .map_err(|_| format!("invalid QTRSK_THREADS value `{threads}`"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| format!("thread pool: {e}"))?;
    }
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify {
            suite,
            max_cells,
            rows,
            cols,
            seed,
            eval,
            json,
        } => {
            let bounds = Bounds {
                max_cells,
                rows,
                cols,
                seed,
                eval: parse_eval(&eval)?,
            };
            let report = suites::run(&suite, &bounds)?;
            if json {
                println!("{}", serde_json::to_string(&report.to_json()).expect("serializable"));
            } else {
                println!("{}", report.render_human());
            }
            Ok(if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Cmd::Forward {
            matrix,
            jack,
            eval,
            json,
        } => {
            let a = parse_matrix(&matrix)?;
            let mode = value_mode(jack, &parse_eval(&eval)?)?;
            let dist = forward_distribution(&a, &mode).map_err(|e| format!("{e:?}"))?;
            let rows = distribution_rows(&dist, |(p, q)| {
                format!("P={} Q={}", render_tableau(p), render_tableau(q))
            });
            print_distribution(rows, json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Backward { p, q, jack, eval, json } => {
            let pt = parse_tableau(&p, TableauFlavor::Ssyt)?;
            let qt = parse_tableau(&q, TableauFlavor::DualSsyt)?;
            let mode = value_mode(jack, &parse_eval(&eval)?)?;
            let dist = backward_distribution(&pt, &qt, &mode).map_err(|e| format!("{e:?}"))?;
            let rows = distribution_rows(&dist, |a| format!("A={a}"));
            print_distribution(rows, json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Insert {
            tableau,
            values,
            rule,
            jack,
            eval,
            json,
        } => {
            let t = parse_tableau(&tableau, TableauFlavor::Ssyt)?;
            let vals: Vec<u32> = values
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| format!("invalid value `{s}`"))
                })
                .collect::<Result<_, _>>()?;
            let rule = match rule.as_str() {
                "row" => InsertRule::FRow,
                "col" => InsertRule::FCol,
                "qt" => InsertRule::Qt,
                other => return Err(format!("unknown rule `{other}`; expected row, col, or qt")),
            };
            let mode = value_mode(jack, &parse_eval(&eval)?)?;
            let dist = growth_insert(&t, &vals, rule, &mode).map_err(|e| format!("{e:?}"))?;
            let rows = distribution_rows(&dist, |u| format!("P={}", render_tableau(u)));
            print_distribution(rows, json);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Sample {
            matrix,
            q,
            t,
            seed,
            n,
            json,
        } => {
            let a = parse_matrix(&matrix)?;
            let q0 = parse_rational(&q)?;
            let t0 = parse_rational(&t)?;
            let mut rng = SplitMix64::new(seed);
            let mut counts: BTreeMap<(String, String), u64> = BTreeMap::new();
            for _ in 0..n {
                let (pt, qt) = sample_forward(&a, &q0, &t0, rng.next_u64())
                    .map_err(|e| format!("{e:?}"))?;
                *counts
                    .entry((render_tableau(&pt), render_tableau(&qt)))
                    .or_insert(0) += 1;
            }
            let exact = forward_distribution(
                &a,
                &ValueMode::Numeric {
                    q0: q0.clone(),
                    t0: t0.clone(),
                },
            )
            .map_err(|e| format!("{e:?}"))?;
            let exact_rows: BTreeMap<(String, String), String> = exact
                .support()
                .iter()
                .map(|((p, qq), v)| {
                    (
                        (render_tableau(p), render_tableau(qq)),
                        qtrsk_cli::text::render_value(v),
                    )
                })
                .collect();
            if json {
                let outcomes: Vec<serde_json::Value> = exact_rows
                    .iter()
                    .map(|((p, qq), ex)| {
                        let c = counts.get(&(p.clone(), qq.clone())).copied().unwrap_or(0);
                        serde_json::json!({
                            "p": p, "q": qq, "count": c, "samples": n, "exact": ex,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string(&serde_json::json!({
                        "matrix": format!("{a}"), "seed": seed, "outcomes": outcomes,
                    }))
                    .expect("serializable")
                );
            } else {
                println!("matrix {a} at q={q0} t={t0}, {n} samples, seed {seed}");
                for ((p, qq), ex) in &exact_rows {
                    let c = counts.get(&(p.clone(), qq.clone())).copied().unwrap_or(0);
                    let freq = c as f64 / n as f64;
                    println!("P={p} Q={qq}\tcount={c}\tfreq={freq:.4}\texact={ex}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
