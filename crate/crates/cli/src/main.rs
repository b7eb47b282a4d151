//! Command-line front end: counting, enumeration, single-object mapping,
//! verification sweeps, q-series expansion, and static rendering.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use schmidt_partitions::diamonds::{diamond_to_tuple, tuple_to_diamond, Diamond};
use schmidt_partitions::enumerate::{
    count, enumerate, Family, FamilySpec, Report, TheoremId,
};
use schmidt_partitions::overlays::{
    over_durfee_compose, over_durfee_decompose, over_strict_tuple_to_schmidt,
    over_unrestricted_tuple_to_schmidt, schmidt_over_to_strict_tuple,
    schmidt_over_to_unrestricted_tuple,
};
use schmidt_partitions::qseries::eval_expression;
use schmidt_partitions::render::{diamond_to_dot, overpartition_ferrers};
use schmidt_partitions::schmidt::SchmidtSequence;
use schmidt_partitions::types::{Overpartition, Partition, StrictOverpartition, TupleMember};
use schmidt_partitions::{
    durfee_compose, durfee_decompose, schmidt_to_strict_tuple, schmidt_to_unrestricted_tuple,
    staircase_backward, staircase_forward, strict_tuple_to_schmidt, unrestricted_tuple_to_schmidt,
};

#[derive(Parser)]
#[command(name = "schmidt", version, about = "Schmidt-weighted partition bijections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyFlags {
    /// Family name, e.g. Q, P, F, G, H, D, PBAR, QBAR, FBAR, GBAR,
    /// PARTITIONS, STRICT, OVERPARTITIONS, KTUPLE, SCHMIDT_ANY,
    /// UNRESTRICTED_SCHMIDT_ANY, DIAMOND_ANY
    #[arg(long)]
    family: String,
    /// Weight (Schmidt weight for sequence families)
    #[arg(long)]
    n: i64,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Number of overlined parts (overpartition families)
    #[arg(long)]
    s: Option<usize>,
}

impl FamilyFlags {
    fn spec(&self) -> Result<FamilySpec, schmidt_partitions::Error> {
        let family = Family::parse(&self.family)?;
        let mut spec = FamilySpec::new(family, self.n);
        spec.k = self.k;
        spec.t = self.t;
        spec.r = self.r;
        spec.s = self.s;
        Ok(spec)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of objects in a family cell
    Count(FamilyFlags),
    /// Print every object in a family cell, one JSON value per line
    Enumerate {
        #[command(flatten)]
        flags: FamilyFlags,
        /// Emit a single JSON array instead of one object per line
        #[arg(long)]
        json: bool,
    },
    /// Apply one bijection to a single JSON object
    Map {
        /// One of: p=q, f=g, h=d, pbar=qbar, fbar=gbar, durfee,
        /// over-durfee, staircase
        #[arg(long)]
        theorem: String,
        /// forward or backward
        #[arg(long)]
        direction: String,
        /// Path to a JSON file holding the input object
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Sweep a theorem over all cells with n <= n-max and report each cell
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long = "n-max")]
        n_max: i64,
        #[arg(long)]
        k: Option<usize>,
        /// Emit the full report as JSON
        #[arg(long)]
        json: bool,
        /// Test hook: corrupt one cell to exercise the failure path
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Expand a Pochhammer product expression to a truncated q-series
    Series {
        /// e.g. "POCH(2,2)^1 / POCH(1,1)^4"
        #[arg(long)]
        expr: String,
        /// Truncation order: coefficients of q^0 .. q^terms are printed
        #[arg(long)]
        terms: usize,
    },
    /// Render a diamond (DOT) or an overpartition (text Ferrers graph)
    Render {
        /// Path to a diamond JSON file {"k": .., "entries": [..]}
        #[arg(long, conflicts_with = "overpartition")]
        diamond: Option<String>,
        /// Path to an overpartition JSON file [{"part": .., "over": ..}, ..]
        #[arg(long)]
        overpartition: Option<String>,
        /// dot (diamonds) or text (overpartitions)
        #[arg(long)]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Count(flags) => {
            println!("{}", count(&flags.spec()?)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { flags, json } => {
            let objects = enumerate(&flags.spec()?)?;
            if json {
                println!("{}", serde_json::to_string(&objects)?);
            } else {
                for obj in objects {
                    println!("{}", serde_json::to_string(&obj)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Map {
            theorem,
            direction,
            input,
            k,
        } => {
            let theorem = TheoremId::parse(&theorem)?;
            let forward = match direction.as_str() {
                "forward" => true,
                "backward" => false,
                other => anyhow::bail!("direction must be forward or backward, got {other:?}"),
            };
            let value: Value = serde_json::from_str(&fs::read_to_string(&input)?)?;
            let out = apply_map(theorem, forward, &value, k)?;
            println!("{}", serde_json::to_string(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            n_max,
            k,
            json,
            corrupt,
        } => {
            let theorem = TheoremId::parse(&theorem)?;
            let k = k.unwrap_or(2);
            let mut report = schmidt_partitions::enumerate::verify_bijection(theorem, n_max, k);
            if corrupt {
                corrupt_report(&mut report);
            }
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                print!("{}", report.render_text());
            }
            if report.all_ok() {
                Ok(ExitCode::SUCCESS)
            } else {
                if !json {
                    for cell in report.failures() {
                        if let Some(w) = &cell.witness {
                            eprintln!("witness: {}", w);
                        }
                    }
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Series { expr, terms } => {
            let series = eval_expression(&expr, terms)?;
            let rendered: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            println!("{}", rendered.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            diamond,
            overpartition,
            format,
        } => {
            match (diamond, overpartition, format.as_str()) {
                (Some(path), None, "dot") => {
                    let d: Diamond = serde_json::from_str(&fs::read_to_string(&path)?)?;
                    print!("{}", diamond_to_dot(&d));
                }
                (None, Some(path), "text") => {
                    let p: Overpartition = serde_json::from_str(&fs::read_to_string(&path)?)?;
                    print!("{}", overpartition_ferrers(&p));
                }
                _ => anyhow::bail!(
                    "render needs --diamond with --format dot or --overpartition with --format text"
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Forces a failure into the first cell so tests can exercise exit code 1.
fn corrupt_report(report: &mut Report) {
    if let Some(cell) = report.cells.first_mut() {
        cell.ok = false;
        cell.lhs += 1;
        cell.witness = Some(json!({
            "problem": "corrupted mapping (test hook)",
            "cell": cell.cell.clone(),
        }));
    }
}

fn need_k(k: Option<usize>) -> anyhow::Result<usize> {
    k.ok_or_else(|| anyhow::anyhow!("this theorem requires --k"))
}

/// Largest member length t and the 1-based index r of the last member
/// attaining it.
fn shape_of<T>(members: &[T], len: impl Fn(&T) -> usize) -> anyhow::Result<(usize, usize)> {
    let t = members.iter().map(&len).max().unwrap_or(0);
    if t == 0 {
        anyhow::bail!("all members are empty");
    }
    let r = members.iter().rposition(|m| len(m) == t).unwrap() + 1;
    Ok((t, r))
}

fn apply_map(
    theorem: TheoremId,
    forward: bool,
    value: &Value,
    k: Option<usize>,
) -> anyhow::Result<Value> {
    Ok(match (theorem, forward) {
        (TheoremId::PQ, true) => {
            let members: Vec<Partition> = serde_json::from_value(value.clone())?;
            let k = k.unwrap_or(members.len());
            let (t, r) = shape_of(&members, |m| m.len())?;
            let s = strict_tuple_to_schmidt(&members, k, t, r)?;
            json!(s.entries())
        }
        (TheoremId::PQ, false) => {
            let entries: Vec<i64> = serde_json::from_value(value.clone())?;
            let s = SchmidtSequence::new_strict(entries, need_k(k)?)?;
            let (members, _, _) = schmidt_to_strict_tuple(&s)?;
            json!(members)
        }
        (TheoremId::FG, true) => {
            let members: Vec<Partition> = serde_json::from_value(value.clone())?;
            let k = k.unwrap_or(members.len());
            let (s, _, _) = unrestricted_tuple_to_schmidt(&members, k)?;
            json!(s.entries())
        }
        (TheoremId::FG, false) => {
            let entries: Vec<i64> = serde_json::from_value(value.clone())?;
            let s = SchmidtSequence::new_unrestricted(entries, need_k(k)?)?;
            json!(schmidt_to_unrestricted_tuple(&s)?)
        }
        (TheoremId::HD, true) => {
            let members: Vec<TupleMember> = serde_json::from_value(value.clone())?;
            let k = match k {
                Some(k) => k,
                None => {
                    if members.len() % 2 == 0 {
                        anyhow::bail!("a diamond tuple has 2k+1 members");
                    }
                    members.len() / 2
                }
            };
            json!(tuple_to_diamond(&members, k)?)
        }
        (TheoremId::HD, false) => {
            let d: Diamond = serde_json::from_value(value.clone())?;
            json!(diamond_to_tuple(&d)?)
        }
        (TheoremId::PbarQbar, true) => {
            let members: Vec<StrictOverpartition> = serde_json::from_value(value.clone())?;
            let k = k.unwrap_or(members.len());
            let (t, r) = shape_of(&members, |m| m.len())?;
            json!(over_strict_tuple_to_schmidt(&members, k, t, r)?)
        }
        (TheoremId::PbarQbar, false) => {
            let s: StrictOverpartition = serde_json::from_value(value.clone())?;
            let (members, _, _) = schmidt_over_to_strict_tuple(&s, need_k(k)?)?;
            json!(members)
        }
        (TheoremId::FbarGbar, true) => {
            let members: Vec<Overpartition> = serde_json::from_value(value.clone())?;
            let k = k.unwrap_or(members.len());
            let (s, _, _) = over_unrestricted_tuple_to_schmidt(&members, k)?;
            json!(s)
        }
        (TheoremId::FbarGbar, false) => {
            let s: Overpartition = serde_json::from_value(value.clone())?;
            json!(schmidt_over_to_unrestricted_tuple(&s, need_k(k)?)?)
        }
        (TheoremId::Durfee, true) => {
            let p: Partition = serde_json::from_value(value.clone())?;
            let (alpha, beta) = durfee_decompose(&p)?;
            json!({"alpha": alpha, "beta": beta})
        }
        (TheoremId::Durfee, false) => {
            let alpha: Partition = serde_json::from_value(value["alpha"].clone())?;
            let beta: Partition = serde_json::from_value(value["beta"].clone())?;
            json!(durfee_compose(&alpha, &beta)?)
        }
        (TheoremId::OverDurfee, true) => {
            let p: Overpartition = serde_json::from_value(value.clone())?;
            let (alpha, beta) = over_durfee_decompose(&p)?;
            json!({"alpha": alpha, "beta": beta})
        }
        (TheoremId::OverDurfee, false) => {
            let alpha: StrictOverpartition = serde_json::from_value(value["alpha"].clone())?;
            let beta: StrictOverpartition = serde_json::from_value(value["beta"].clone())?;
            json!(over_durfee_compose(&alpha, &beta)?)
        }
        (TheoremId::Staircase, true) => {
            let alpha: Partition = serde_json::from_value(value["alpha"].clone())?;
            let beta: Partition = serde_json::from_value(value["beta"].clone())?;
            let gamma: Partition = serde_json::from_value(value["gamma"].clone())?;
            let t = alpha.len();
            let (mu, nu, omega) = staircase_forward(&alpha, &beta, &gamma, t)?;
            json!({"mu": mu, "nu": nu, "omega": omega})
        }
        (TheoremId::Staircase, false) => {
            let mu: Partition = serde_json::from_value(value["mu"].clone())?;
            let nu: Partition = serde_json::from_value(value["nu"].clone())?;
            let omega: Partition = serde_json::from_value(value["omega"].clone())?;
            let t = mu.len();
            let (alpha, beta, gamma) = staircase_backward(&mu, &nu, &omega, t)?;
            json!({"alpha": alpha, "beta": beta, "gamma": gamma})
        }
    })
}
