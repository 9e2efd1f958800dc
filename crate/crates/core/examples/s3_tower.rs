//! End of the standard S3 representation split into isotypic atoms C, σ, V
//! by character projection, then condensed level by level.

use focal::reptools::corpus::{s3_characters, s3_standard_action};
use focal::reptools::{multiplicity_free_atoms, one_sided_ideal_check, trivial_multiplicity};
use focal::semiring::{Atom, AtomSystem};
use focal::tower::focal_tower;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let action = s3_standard_action()?;
    let chars = s3_characters(action.group())?;
    let atoms = multiplicity_free_atoms(&action, &chars)?;
    for (name, s) in &atoms {
        println!("atom {name} has dim {}", s.dim());
    }
    let atoms = atoms.into_iter().map(|(n, s)| Atom::new(n, s)).collect();
    let sys = AtomSystem::new(action.algebra().clone(), atoms, None)?;
    println!("trivial multiplicity: {}", trivial_multiplicity(&action)?);
    println!("one-sided ideal witness: {:?}", one_sided_ideal_check(&sys)?);

    let tower = focal_tower(&sys, 8)?;
    for level in &tower.levels {
        println!(
            "level {}: atoms {:?}, |Q| = {}, focus {:?}, dim F = {}",
            level.level,
            level.atom_names,
            level.monoid.size(),
            level.focus_names(),
            level.focal_dim()
        );
    }
    println!("stabilized: {}", tower.stabilized);
    Ok(())
}
