//! The SL₂(17) battery: the boundary case that separates the order-2 clause
//! from the order-4 clause.
//!
//! SL₂(17) acts on the 288 nonzero vectors of F₁₇². Its Sylow 2-subgroup is
//! the generalized quaternion group of order 32 and is self-normalizing and
//! maximal; the center is the unique subgroup of order 2 of that Sylow
//! subgroup and is strongly closed; and yet the group is not 2-nilpotent.
//!
//! ```bash
//! cargo run --release --example sl2_17_battery
//! ```

use std::time::Instant;

use strong_closure::catalog::construct;
use strong_closure::lattice::subgroups_of_order;
use strong_closure::{
    is_strongly_closed_in_group, ops, shape, structure, sylow_subgroup, Result,
};

fn main() -> Result<()> {
    let started = Instant::now();
    let g = construct("special_linear_2(17)")?;
    println!("order:                  {} (degree {})", g.order(), g.degree());

    let p = sylow_subgroup(&g, 2)?;
    println!("Sylow 2-subgroup:       order {}, shape {}", p.order(), shape(p.group())?);
    println!("P maximal in G:         {}", ops::is_maximal_subgroup(&g, &p)?);

    let n = ops::normalizer(&g, &p)?;
    println!("N_G(P) = P:             {} (order {})", n == p, n.order());

    let z = ops::center(&g)?;
    println!("|Z(G)|:                 {}", z.order());
    let order_2 = subgroups_of_order(p.group(), 2)?;
    println!(
        "order-2 subgroups of P: {} (equals Z(G): {})",
        order_2.len(),
        order_2[0].canonical_key()? == z.canonical_key()?
    );
    println!("Z(G) strongly closed:   {}", is_strongly_closed_in_group(&z, &g)?);

    let (two_nilpotent, _) = structure::is_p_nilpotent(&g, 2)?;
    println!("G 2-nilpotent:          {two_nilpotent}");

    println!("battery completed in {:?}", started.elapsed());
    Ok(())
}
