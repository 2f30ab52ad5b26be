//! The line-oriented group file format: write a group out, read it back,
//! and see what a position-annotated parse error looks like.
//!
//! ```bash
//! cargo run --example group_files
//! ```

use strong_closure::catalog::construct;
use strong_closure::groupfile::{group_to_string, parse_group_file, parse_group_str, write_group_file};
use strong_closure::Result;

fn main() -> Result<()> {
    let d10 = construct("dihedral(10)")?;
    println!("--- serialized D10 ---");
    print!("{}", group_to_string(&d10));

    let path = std::env::temp_dir().join("d10.group");
    write_group_file(&d10, &path)?;
    let entry = parse_group_file(&path)?;
    println!(
        "--- round trip: id {:?}, order {}, equal as a permutation group: {}",
        entry.id,
        entry.order()?,
        entry.group()?.elements()? == d10.elements()?
    );

    println!("--- a malformed file ---");
    let broken = "degree: 3\ngen: (1 2\n";
    match parse_group_str(broken, "broken.group") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly parsed"),
    }
    std::fs::remove_file(path).ok();
    Ok(())
}
