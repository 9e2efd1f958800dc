//! A4 acting on End(W) over Q(ζ3): subspace checks on the U[a:b] family, and
//! a finite fragment of the hyperproduct that fails associativity.

use focal::condensation::{check_associative, check_reproducible};
use focal::reptools::a4::{a4_checks, a4_structure_checks, fragment_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for v in a4_checks()?.iter().chain(&a4_structure_checks()?) {
        println!(
            "[{}] ({}) {}: {}",
            if v.pass { "pass" } else { "FAIL" },
            v.label,
            v.claim,
            v.detail
        );
    }
    let t = fragment_table()?;
    if let Some((a, b, c)) = check_associative(&t)? {
        println!(
            "({}∘{})∘{} differs from {}∘({}∘{})",
            t.name(a),
            t.name(b),
            t.name(c),
            t.name(a),
            t.name(b),
            t.name(c)
        );
    }
    println!("fragment reproducible: {}", check_reproducible(&t));
    Ok(())
}
