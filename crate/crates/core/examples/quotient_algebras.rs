//! Two-dimensional quotients k[t]/(f) with atoms k and X = k·t: the square
//! of X is 0, a scalar, or X itself depending on f. Over k[t]/(t³ − 1) the
//! atom X = span{t, t²} squares to A = k + X.

use focal::algebra::Algebra;
use focal::condensation::{condense, Flags};
use focal::field::{FieldDescriptor, FieldElement};
use focal::linalg::Subspace;
use focal::semiring::{Atom, AtomSystem};

fn fe(xs: &[i64]) -> Vec<FieldElement> {
    xs.iter().map(|&x| FieldElement::from(x)).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (label, coeffs) in [("t^2", [0, 0, 1]), ("t^2 - 1", [-1, 0, 1]), ("t^2 - t", [0, -1, 1])] {
        let alg = Algebra::poly_quotient(FieldDescriptor::Rational, &fe(&coeffs))?;
        let atoms = vec![
            Atom::new("k", Subspace::line(fe(&[1, 0]))),
            Atom::new("X", Subspace::line(fe(&[0, 1]))),
        ];
        let sys = AtomSystem::new(alg, atoms, None)?;
        let table = sys.verify()?;
        let flags = Flags::compute(&table);
        print!(
            "k[t]/({label}): X∘X = {:?}, entire = {}",
            table.names_of(table.entry(1, 1)),
            flags.entire
        );
        match condense(&table) {
            Ok(r) => println!(", |Q| = {}", r.monoid.size()),
            Err(e) => println!(", no condensation: {e}"),
        }
    }

    let alg = Algebra::poly_quotient(FieldDescriptor::Rational, &fe(&[-1, 0, 0, 1]))?;
    let x = Subspace::canonicalize(&[fe(&[0, 1, 0]), fe(&[0, 0, 1])], 3)?;
    let sys = AtomSystem::new(
        alg,
        vec![Atom::new("k", Subspace::line(fe(&[1, 0, 0]))), Atom::new("X", x)],
        None,
    )?;
    let table = sys.verify()?;
    println!("k[t]/(t^3 - 1): X∘X = {:?}", table.names_of(table.entry(1, 1)));
    Ok(())
}
