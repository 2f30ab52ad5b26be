//! Structural predicates: p-nilpotence with witnesses, p-cores, Fitting
//! structure, chief series, supersolvability, Sylow towers, and the
//! Hall 2′-complement under a normal Sylow 2-subgroup.
//!
//! ```bash
//! cargo run --example structure_invariants
//! ```

use strong_closure::catalog::construct;
use strong_closure::{
    fitting_data, hall_2prime_complement, has_supersolvable_sylow_tower, is_p_nilpotent,
    is_supersolvable, p_core, p_prime_core, structure, Result,
};

fn main() -> Result<()> {
    let s3 = construct("symmetric(3)")?;
    let (nilp, witness) = is_p_nilpotent(&s3, 2)?;
    println!(
        "S3 2-nilpotent: {nilp}, complement order {}",
        witness.map(|k| k.order()).unwrap_or(0)
    );

    let s4 = construct("symmetric(4)")?;
    println!("S4 2-nilpotent: {}", is_p_nilpotent(&s4, 2)?.0);
    println!("O_2(S4) order: {}", p_core(&s4, 2)?.order());
    println!("O_2'(S4) order: {}", p_prime_core(&s4, 2)?.order());

    let data = fitting_data(&s4)?;
    println!(
        "S4 Fitting structure: |F| = {}, components = {}, |F*| = {}",
        data.fitting.order(),
        data.components.len(),
        data.generalized_fitting.order()
    );
    let s5 = construct("symmetric(5)")?;
    let data = fitting_data(&s5)?;
    println!(
        "S5 Fitting structure: |F| = {}, component orders = {:?}, |F*| = {}",
        data.fitting.order(),
        data.components.iter().map(|c| c.order()).collect::<Vec<_>>(),
        data.generalized_fitting.order()
    );

    for (name, expr) in [("S3", "symmetric(3)"), ("A4", "alternating(4)"), ("D12", "dihedral(12)")] {
        let g = construct(expr)?;
        let series = structure::chief_series(&g)?;
        println!(
            "{name}: chief factors {:?}, supersolvable {}, sylow tower {}",
            series.factor_orders,
            is_supersolvable(&g)?,
            has_supersolvable_sylow_tower(&g)?
        );
    }

    let d8c3 = construct("direct_product(dihedral(8), cyclic(3))")?;
    println!(
        "Hall 2'-complement of D8 × C3: order {}",
        hall_2prime_complement(&d8c3)?.order()
    );
    let d14 = construct("dihedral(14)")?;
    println!(
        "Hall 2'-complement of D14: {:?}",
        hall_2prime_complement(&d14).err().map(|e| e.to_string())
    );
    Ok(())
}
