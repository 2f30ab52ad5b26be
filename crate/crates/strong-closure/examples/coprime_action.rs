//! Odd-order groups acting on 2-groups: building semidirect products from
//! explicit generator images and running the coprime-action lemma checks.
//!
//! ```bash
//! cargo run --example coprime_action
//! ```

use strong_closure::catalog::{all_instances, instance};
use strong_closure::checks::{run_instance_check, CheckId};
use strong_closure::Result;

fn main() -> Result<()> {
    // the Frobenius group of order 56: C7 permutes the seven involutions of C2³
    let f56 = instance("CA_F56")?;
    println!(
        "CA_F56: |G| = {}, normal part {}, action image order {}",
        f56.group().order(),
        f56.normal_part().order(),
        f56.semidirect.action_image_order
    );
    println!("  action trivial: {}", f56.action_is_trivial());

    // Q8 ⋊ C3: the three cyclic subgroups of order 4 are permuted
    let q8c3 = instance("CA_Q8_C3")?;
    println!(
        "CA_Q8_C3: |G| = {} (this is SL2(3) in disguise)",
        q8c3.group().order()
    );
    for v in run_instance_check(&q8c3, CheckId::L211)? {
        println!(
            "  L211({}): hypothesis={:?} -> {}",
            v.params,
            v.hypothesis_holds,
            if v.is_inconsistent() { "INCONSISTENT" } else { "consistent" }
        );
    }

    // the whole built-in instance list stays consistent on L29..L211
    let mut verdicts = 0;
    let mut inconsistent = 0;
    for inst in all_instances()? {
        for check in [CheckId::L29, CheckId::L210, CheckId::L211] {
            for v in run_instance_check(&inst, check)? {
                verdicts += 1;
                if v.is_inconsistent() {
                    inconsistent += 1;
                }
            }
        }
    }
    println!("instance sweep: {verdicts} verdicts, {inconsistent} inconsistent");
    Ok(())
}
