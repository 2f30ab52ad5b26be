//! Theorem verdicts: hypothesis and conclusion evaluated independently on
//! concrete groups, one verdict per valid parameterization.
//!
//! ```bash
//! cargo run --example theorem_checks
//! ```

use strong_closure::catalog::construct;
use strong_closure::checks::{run_group_check, CheckContext, CheckId};
use strong_closure::Result;

fn main() -> Result<()> {
    let ctx = CheckContext::default();
    for (name, expr) in [
        ("C12", "cyclic(12)"),
        ("S4", "symmetric(4)"),
        ("Q8xC3", "direct_product(generalized_quaternion(8), cyclic(3))"),
        ("A4", "alternating(4)"),
        ("F20", "semidirect_product(cyclic(5), cyclic(4), [g1^2])"),
    ] {
        let g = construct(expr)?;
        for check in [CheckId::T1, CheckId::T2, CheckId::T3, CheckId::T4] {
            for v in run_group_check(name, &g, check, &ctx)? {
                let flag = |b: Option<bool>| match b {
                    Some(true) => "T",
                    Some(false) => "F",
                    None => "-",
                };
                println!(
                    "{name:>6} {:<4} {:<28} hyp={} concl={} {}",
                    v.check_id,
                    v.params,
                    flag(v.hypothesis_holds),
                    flag(v.conclusion_holds),
                    if v.is_inconsistent() { "INCONSISTENT" } else { "ok" }
                );
            }
        }
        println!();
    }
    Ok(())
}
