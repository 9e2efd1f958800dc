//! Character projections for A4 acting by conjugation on End(W).

use focal::reptools::a4::A4Setup;
use focal::reptools::{fixed_space, fixed_space_of, isotypic_components, trivial_multiplicity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let setup = A4Setup::new()?;
    let dec = isotypic_components(&setup.action, &setup.characters)?;
    for (name, s) in &dec.components {
        println!("isotypic component {name}: dim {}", s.dim());
    }
    println!("components span End(W): {}", dec.complete);
    println!("trivial multiplicity: {}", trivial_multiplicity(&setup.action)?);
    println!("A4 fixed space dim: {}", fixed_space(&setup.action)?.dim());
    let klein: Vec<_> = setup
        .klein_four()
        .iter()
        .map(|&g| setup.action.matrices()[g].clone())
        .collect();
    println!("Klein four fixed space dim: {}", fixed_space_of(9, &klein)?.dim());
    Ok(())
}
