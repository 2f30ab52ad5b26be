//! Permutation arithmetic: parsing, composition, inverses, conjugation.
//!
//! ```bash
//! cargo run --example permutation_basics
//! ```

use strong_closure::{Perm, Result};

fn main() -> Result<()> {
    let a = Perm::parse(5, "(1 2 3)(4 5)")?;
    let b = Perm::parse(5, "(2 4)")?;

    println!("a        = {a}");
    println!("b        = {b}");
    println!("a·b      = {}", a.compose(&b));
    println!("a⁻¹      = {}", a.inverse());
    println!("aᵇ       = {}", a.conjugate(&b));
    println!("[a, b]   = {}", a.commutator(&b));
    println!("|a|      = {}", a.order());

    // conjugation is relabelling: (1 2) conjugated by (1 3) swaps the labels
    let t = Perm::parse(3, "(1 2)")?;
    let g = Perm::parse(3, "(1 3)")?;
    println!("(1 2)^(1 3) = {}", t.conjugate(&g));

    // identities behave
    let id = Perm::identity(5);
    assert_eq!(a.conjugate(&id), a);
    assert!(a.compose(&a.inverse()).is_identity());
    println!("identity checks hold");
    Ok(())
}
