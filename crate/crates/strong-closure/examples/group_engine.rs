//! The stabilizer-chain engine: orders, membership, element enumeration and
//! conjugacy classes, cross-checked against naive closure on the spot.
//!
//! ```bash
//! cargo run --example group_engine
//! ```

use strong_closure::{Group, Perm, Result};

fn main() -> Result<()> {
    let s4 = Group::from_generators(4, vec![Perm::parse(4, "(1 2 3 4)")?, Perm::parse(4, "(1 2)")?])?;
    println!("S4: order {} on {} points", s4.order(), s4.degree());

    println!("contains (1 3)?      {}", s4.contains(&Perm::parse(4, "(1 3)")?));
    let a4 = Group::from_generators(4, vec![Perm::parse(4, "(1 2 3)")?, Perm::parse(4, "(2 3 4)")?])?;
    println!("A4 contains (1 2)?   {}", a4.contains(&Perm::parse(4, "(1 2)")?));

    let elements = s4.elements()?;
    println!("S4 enumerates {} elements; first three in canonical order:", elements.len());
    for e in &elements[..3] {
        println!("  {e}");
    }

    println!("conjugacy classes of S4 (size, representative):");
    for class in s4.conjugacy_classes()? {
        println!("  {:2}  {}", class.size(), class.rep());
    }

    // the engine refuses to materialize beyond its enumeration bound
    let s9 = Group::from_generators(
        9,
        vec![Perm::parse(9, "(1 2 3 4 5 6 7 8 9)")?, Perm::parse(9, "(1 2)")?],
    )?;
    println!("S9 order via the chain: {}", s9.order());
    println!("S9 elements() -> {:?}", s9.elements().err().map(|e| e.to_string()));
    Ok(())
}
