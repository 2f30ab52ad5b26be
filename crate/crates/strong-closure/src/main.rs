//! Thin CLI over the library: `analyze`, `check`, `lemmas`, `campaign`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use strong_closure::arith::primes_dividing;
use strong_closure::campaign::{run_campaign, write_report, CampaignConfig};
use strong_closure::catalog::{self, CatalogEntry};
use strong_closure::checks::{
    run_group_check, run_instance_check, CheckContext, CheckId, Verdict, GROUP_CHECKS,
    INSTANCE_CHECKS,
};
use strong_closure::closure::{HypothesisSpec, TheoremId};
use strong_closure::groupfile::parse_group_file;
use strong_closure::{checks, ops, shape, structure, sylow, Result};

#[derive(Parser)]
#[command(name = "strong-closure")]
#[command(about = "Finite-group strong-closure predicates and theorem-check campaigns")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, Sylow shapes, center, p-nilpotence and supersolvability
    Analyze {
        /// Built-in id (e.g. S4, SL2_17, CA_F56) or a group file path
        group: String,
    },
    /// Run one theorem check (T1–T4 or P31) on a group
    Check {
        /// Theorem to check: 1, 2, 3, 4 or p31
        #[arg(long)]
        theorem: String,

        /// Target subgroup order |D|; omit to scan all valid orders
        #[arg(long)]
        order: Option<u64>,

        /// Disable the "(and 4 if |D| = 2)" clause (necessity experiment)
        #[arg(long)]
        no_order4_clause: bool,

        /// Strong-closure reading: normalizer (default) or ambient-sylow
        #[arg(long, default_value = "normalizer")]
        reading: String,

        group: String,
    },
    /// Run lemma checks (L21..L28, EQV on groups; L29..L211 on instances)
    Lemmas {
        /// Comma-separated check ids, or "all"
        #[arg(long, default_value = "all")]
        ids: String,

        group: String,
    },
    /// Run every enabled check over the built-in catalog and write a report
    Campaign {
        /// Drop family entries with order above this
        #[arg(long, default_value_t = 400)]
        max_order: u64,

        /// Comma-separated check ids, or "all"
        #[arg(long, default_value = "all")]
        checks: String,

        /// Also run T1 at |D| = 2 with the order-4 clause disabled
        #[arg(long)]
        weakened: bool,

        /// Report output path (JSON)
        #[arg(long)]
        out: PathBuf,

        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,

        /// Drop the distinguished large entries (SL2_17, PSL2_17)
        #[arg(long)]
        no_distinguished: bool,

        /// Strong-closure reading: normalizer (default) or ambient-sylow
        #[arg(long, default_value = "normalizer")]
        reading: String,

        /// Group ids whose weakened-mode inconsistency is expected; may be
        /// given multiple times or comma-separated
        #[arg(long, value_delimiter = ',')]
        expect_counterexample: Vec<String>,
    },
}

fn resolve(group: &str) -> Result<CatalogEntry> {
    match catalog::builtin(group) {
        Ok(entry) => Ok(entry),
        Err(_) if Path::new(group).exists() => parse_group_file(Path::new(group)),
        Err(e) => Err(e),
    }
}

fn print_verdict(v: &Verdict) {
    let state = if v.skipped {
        "skipped".to_string()
    } else if v.is_inconsistent() {
        "INCONSISTENT".to_string()
    } else {
        "consistent".to_string()
    };
    let flag = |b: Option<bool>| match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "-",
    };
    let params = if v.params.is_empty() {
        String::new()
    } else {
        format!("({})", v.params)
    };
    println!(
        "[{}] {}{}: hypothesis={} conclusion={} -> {} ({} ms)",
        v.group_id,
        v.check_id,
        params,
        flag(v.hypothesis_holds),
        flag(v.conclusion_holds),
        state,
        v.runtime_ms
    );
    for w in &v.witnesses {
        match serde_json::to_string(w) {
            Ok(json) => println!("    witness: {json}"),
            Err(_) => println!("    witness: <unserializable>"),
        }
    }
}

fn analyze(group_arg: &str) -> Result<()> {
    let entry = resolve(group_arg)?;
    let g = entry.group()?;
    println!("group: {} ({})", entry.id, entry.construction);
    println!("order: {}", g.order());
    println!("degree: {}", g.degree());
    let primes = primes_dividing(g.order());
    for &p in &primes {
        let s = sylow::sylow_subgroup(g, p)?;
        println!(
            "sylow p={p}: order {} shape {}",
            s.order(),
            shape::shape(s.group())?
        );
    }
    if g.order() <= 10_000 {
        let z = ops::center(g)?;
        println!("center: order {}", z.order());
        for &p in &primes {
            let (ok, witness) = structure::is_p_nilpotent(g, p)?;
            match witness {
                Some(k) if ok => {
                    println!("p-nilpotent p={p}: yes (complement order {})", k.order())
                }
                _ => println!("p-nilpotent p={p}: {}", if ok { "yes" } else { "no" }),
            }
        }
        println!(
            "solvable: {}",
            if structure::is_solvable(g)? { "yes" } else { "no" }
        );
        println!(
            "nilpotent: {}",
            if structure::is_nilpotent(g)? { "yes" } else { "no" }
        );
        println!(
            "supersolvable: {}",
            if structure::is_supersolvable(g)? { "yes" } else { "no" }
        );
    }
    Ok(())
}

fn run_check_cmd(
    theorem: &str,
    order: Option<u64>,
    no_order4_clause: bool,
    reading: &str,
    group_arg: &str,
) -> Result<Vec<Verdict>> {
    let theorem = match theorem.to_ascii_lowercase().as_str() {
        "1" | "t1" => TheoremId::T1,
        "2" | "t2" => TheoremId::T2,
        "3" | "t3" => TheoremId::T3,
        "4" | "t4" => TheoremId::T4,
        "p31" | "31" => TheoremId::P31,
        other => {
            return Err(strong_closure::Error::UnknownCheck(format!(
                "theorem {other:?}"
            )))
        }
    };
    let entry = resolve(group_arg)?;
    let g = entry.group()?;
    let mut ctx = CheckContext::default();
    ctx.reading = parse_reading(reading)?;
    ctx.include_order4_clause = !no_order4_clause;

    match (theorem, order) {
        (TheoremId::T1 | TheoremId::T2 | TheoremId::P31, Some(d)) => {
            let mut spec = HypothesisSpec::new(theorem).with_target_order(d);
            spec.include_order4_clause = !no_order4_clause;
            Ok(vec![checks::check_theorem(&entry.id, g, &spec, &ctx)?])
        }
        _ => {
            let check = match theorem {
                TheoremId::T1 => CheckId::T1,
                TheoremId::T2 => CheckId::T2,
                TheoremId::T3 => CheckId::T3,
                TheoremId::T4 => CheckId::T4,
                TheoremId::P31 => CheckId::P31,
            };
            run_group_check(&entry.id, g, check, &ctx)
        }
    }
}

fn parse_reading(reading: &str) -> Result<strong_closure::ClosureReading> {
    match reading {
        "normalizer" => Ok(strong_closure::ClosureReading::Normalizer),
        "ambient-sylow" => Ok(strong_closure::ClosureReading::AmbientSylow),
        other => Err(strong_closure::Error::Construction(format!(
            "unknown reading {other:?}"
        ))),
    }
}

fn run_lemmas(ids: &str, group_arg: &str) -> Result<Vec<Verdict>> {
    let requested: Vec<CheckId> = if ids.eq_ignore_ascii_case("all") {
        GROUP_CHECKS
            .iter()
            .chain(INSTANCE_CHECKS)
            .copied()
            .filter(|c| c.as_str().starts_with('L') || *c == CheckId::Eqv)
            .collect()
    } else {
        ids.split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_>>()?
    };
    let ctx = CheckContext::default();
    let mut verdicts = Vec::new();
    // coprime-action instance ids get the instance checks; plain groups the rest
    if let Ok(inst) = catalog::instance(group_arg) {
        for check in &requested {
            if check.is_instance_check() {
                verdicts.extend(run_instance_check(&inst, *check)?);
            }
        }
        return Ok(verdicts);
    }
    let entry = resolve(group_arg)?;
    let g = entry.group()?;
    for check in &requested {
        if !check.is_instance_check() {
            verdicts.extend(run_group_check(&entry.id, g, *check, &ctx)?);
        }
    }
    Ok(verdicts)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze { group } => analyze(&group).map(|()| true),
        Command::Check {
            theorem,
            order,
            no_order4_clause,
            reading,
            group,
        } => run_check_cmd(&theorem, order, no_order4_clause, &reading, &group).map(|verdicts| {
            let ok = verdicts.iter().all(|v| !v.is_inconsistent());
            for v in &verdicts {
                print_verdict(v);
            }
            ok
        }),
        Command::Lemmas { ids, group } => run_lemmas(&ids, &group).map(|verdicts| {
            let ok = verdicts.iter().all(|v| !v.is_inconsistent());
            for v in &verdicts {
                print_verdict(v);
            }
            ok
        }),
        Command::Campaign {
            max_order,
            checks,
            weakened,
            out,
            jobs,
            no_distinguished,
            reading,
            expect_counterexample,
        } => (|| -> Result<bool> {
            let config = CampaignConfig {
                max_order,
                include_distinguished: !no_distinguished,
                checks: checks.split(',').map(|s| s.trim().to_string()).collect(),
                weakened,
                reading: reading.clone(),
                ..CampaignConfig::default()
            };
            let report = run_campaign(&config, jobs)?;
            write_report(&report, &out)?;
            println!(
                "campaign: {} verdicts ({} consistent, {} inconsistent, {} skipped) -> {}",
                report.summary.checked,
                report.summary.consistent,
                report.summary.inconsistent,
                report.summary.skipped,
                out.display()
            );
            let offenders = report.inconsistent_group_ids();
            for v in report.verdicts.iter().filter(|v| v.is_inconsistent()) {
                print_verdict(v);
            }
            let unexpected: Vec<&String> = offenders
                .iter()
                .filter(|id| !expect_counterexample.contains(id))
                .collect();
            if !unexpected.is_empty() {
                eprintln!("unexpected inconsistencies: {unexpected:?}");
            }
            Ok(unexpected.is_empty())
        })(),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
