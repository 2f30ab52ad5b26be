//! The central predicates: strong closure in K with respect to G, strong
//! closure in G (normalizer form), and the equivalent H-subgroup condition,
//! with element-level witnesses when closure fails.
//!
//! ```bash
//! cargo run --example strong_closure_predicates
//! ```

use strong_closure::catalog::construct;
use strong_closure::closure::{h_subgroup_breach, strong_closure_breach};
use strong_closure::{
    is_h_subgroup, is_strongly_closed_in_group, ops, Perm, Result, Subgroup,
};

fn main() -> Result<()> {
    let s4 = construct("symmetric(4)")?;

    // a normal subgroup is strongly closed wherever it sits
    let v4 = Subgroup::generated(&s4, vec![Perm::parse(4, "(1 2)(3 4)")?, Perm::parse(4, "(1 3)(2 4)")?])?;
    println!("V4 strongly closed in S4: {}", is_strongly_closed_in_group(&v4, &s4)?);

    // a single double transposition is not: its conjugates land in D8
    let h = Subgroup::generated(&s4, vec![Perm::parse(4, "(1 2)(3 4)")?])?;
    let d8 = Subgroup::generated(&s4, vec![Perm::parse(4, "(1 2 3 4)")?, Perm::parse(4, "(1 3)")?])?;
    match strong_closure_breach(&h, &d8, &s4)? {
        Some(b) => println!(
            "⟨(1 2)(3 4)⟩ is not strongly closed in D8 wrt S4: {}^{} = {} lands in D8 ∖ H",
            b.element, b.conjugator, b.image
        ),
        None => println!("unexpectedly closed"),
    }

    // the H-subgroup condition is the same predicate through another route
    println!("⟨(1 2)(3 4)⟩ as an H-subgroup of S4: {}", is_h_subgroup(&h, &s4)?);
    if let Some(b) = h_subgroup_breach(&h, &s4)? {
        println!(
            "  H^g ∩ N(H) ⊄ H with g = {}: {} conjugates to {}",
            b.conjugator, b.element, b.image
        );
    }

    // both routes agree on every subgroup of S4
    let mut agreements = 0;
    for sub in strong_closure::lattice::all_subgroups_flat(&s4)? {
        assert_eq!(is_h_subgroup(&sub, &s4)?, is_strongly_closed_in_group(&sub, &s4)?);
        agreements += 1;
    }
    println!("both definitions agree on all {agreements} subgroups of S4");

    // in S3 a transposition is strongly closed: its normalizer is itself
    let s3 = construct("symmetric(3)")?;
    let t = Subgroup::generated(&s3, vec![Perm::parse(3, "(1 2)")?])?;
    println!(
        "⟨(1 2)⟩ in S3: N_G(H) order {}, strongly closed {}",
        ops::normalizer(&s3, &t)?.order(),
        is_strongly_closed_in_group(&t, &s3)?
    );
    Ok(())
}
