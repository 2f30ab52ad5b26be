//! Why the order-4 clause is there: running the T1 check on SL₂(17) at
//! |D| = 2 with and without the "(and 4 if |D| = 2)" clause.
//!
//! Without the clause, the unique order-2 subgroup of the Sylow 2-subgroup
//! (the center) is strongly closed, so the weakened hypothesis holds — but
//! the group is not 2-nilpotent. Restoring the clause drags the order-4
//! subgroups into the hypothesis, where strong closure fails, and the
//! implication is consistent again.
//!
//! ```bash
//! cargo run --release --example necessity_experiment
//! ```

use strong_closure::catalog::construct;
use strong_closure::checks::{check_theorem, CheckContext};
use strong_closure::closure::{HypothesisSpec, TheoremId};
use strong_closure::Result;

fn main() -> Result<()> {
    let g = construct("special_linear_2(17)")?;
    let ctx = CheckContext::default();

    let weakened = HypothesisSpec::new(TheoremId::T1)
        .with_target_order(2)
        .without_order4_clause();
    let v = check_theorem("SL2_17", &g, &weakened, &ctx)?;
    println!(
        "clause OFF: hypothesis={:?} conclusion={:?} -> {}",
        v.hypothesis_holds,
        v.conclusion_holds,
        if v.is_inconsistent() { "INCONSISTENT (the designed witness)" } else { "consistent" }
    );

    let full = HypothesisSpec::new(TheoremId::T1).with_target_order(2);
    let v = check_theorem("SL2_17", &g, &full, &ctx)?;
    println!(
        "clause ON:  hypothesis={:?} conclusion={:?} -> {}",
        v.hypothesis_holds,
        v.conclusion_holds,
        if v.is_inconsistent() { "INCONSISTENT" } else { "consistent" }
    );
    for w in &v.witnesses {
        println!("  witness: {}", serde_json::to_string(w).unwrap_or_default());
        break; // the first witness pins the failing order-4 subgroup
    }
    Ok(())
}
