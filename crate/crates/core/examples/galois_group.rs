//! Q(√2, √3) with the four coordinate lines as atoms: the condensation
//! group recovers the Galois group Z2 × Z2.

use focal::condensation::condense;
use focal::linalg::Subspace;
use focal::reptools::corpus::galois_biquadratic_algebra;
use focal::semiring::{Atom, AtomSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = galois_biquadratic_algebra()?;
    let atoms = ["1", "sqrt2", "sqrt3", "sqrt6"]
        .iter()
        .enumerate()
        .map(|(i, n)| Atom::new(*n, Subspace::line(alg.basis_vector(i))))
        .collect();
    let sys = AtomSystem::new(alg, atoms, None)?;
    let table = sys.verify()?;
    let sq = table.index_of("sqrt2").unwrap();
    let s3 = table.index_of("sqrt3").unwrap();
    println!("sqrt2∘sqrt3 = {:?}", table.names_of(table.entry(sq, s3)));
    let r = condense(&table)?;
    let m = &r.monoid;
    println!(
        "|Q| = {}, group = {}, exponent = {:?}",
        m.size(),
        m.is_group(),
        m.exponent()
    );
    println!("multiplication table: {:?}", m.table());
    Ok(())
}
