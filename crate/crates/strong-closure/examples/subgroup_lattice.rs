//! Exhaustive subgroup enumeration: the full lattice of S4 grouped into
//! conjugacy classes, plus maximal subgroups and the Frattini subgroup of a
//! 2-group.
//!
//! ```bash
//! cargo run --example subgroup_lattice
//! ```

use strong_closure::catalog::construct;
use strong_closure::{all_subgroups, frattini_subgroup, maximal_subgroups, ops, Result};

fn main() -> Result<()> {
    let s4 = construct("symmetric(4)")?;
    let classes = all_subgroups(&s4)?;
    let total: usize = classes.iter().map(|c| c.class_size()).sum();
    println!("S4 has {total} subgroups in {} conjugacy classes:", classes.len());
    println!("{:>6} {:>6} {:>7}", "order", "count", "normal");
    for class in &classes {
        let rep = &class.representative;
        println!(
            "{:>6} {:>6} {:>7}",
            rep.order(),
            class.class_size(),
            if ops::is_normal(&s4, rep)? { "yes" } else { "no" }
        );
    }

    let d8 = construct("dihedral(8)")?;
    println!("\nmaximal subgroups of D8 (all of index 2):");
    for m in maximal_subgroups(&d8)? {
        let gens: Vec<String> = m.group().generators().iter().map(|g| g.to_string()).collect();
        println!("  order {}: ⟨{}⟩", m.order(), gens.join(", "));
    }
    let phi = frattini_subgroup(&d8)?;
    println!("Φ(D8) has order {} and equals the center: {}",
        phi.order(),
        phi == ops::center(&d8)?
    );
    Ok(())
}
