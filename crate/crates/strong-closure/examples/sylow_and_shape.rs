//! Sylow subgroups and shape recognition across a spread of groups.
//!
//! ```bash
//! cargo run --example sylow_and_shape
//! ```

use strong_closure::arith::primes_dividing;
use strong_closure::catalog::construct;
use strong_closure::{shape, sylow_subgroup, Result};

fn main() -> Result<()> {
    let specimens = [
        ("S4", "symmetric(4)"),
        ("C6", "cyclic(6)"),
        ("Q32", "generalized_quaternion(32)"),
        ("A5", "alternating(5)"),
        ("SL2_3", "special_linear_2(3)"),
        ("F56", "semidirect_product(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))), cyclic(7), [g2, g3, g1*g2])"),
    ];
    for (name, expr) in specimens {
        let g = construct(expr)?;
        print!("{name} (order {:>4}):", g.order());
        for p in primes_dividing(g.order()) {
            let s = sylow_subgroup(&g, p)?;
            print!("  Syl_{p} = {} ({})", s.order(), shape(s.group())?);
        }
        println!();
    }
    Ok(())
}
