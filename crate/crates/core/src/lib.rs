//! Condensation monoids, foci and focal subalgebras of atomistic
//! subsemirings of the subspace lattice of a finite-dimensional algebra.
//!
//! The pipeline runs bottom-up: exact scalars ([`field`]) and canonical
//! subspaces ([`linalg`]) support an [`algebra::Algebra`]; a family of
//! independent atoms in it is verified into a [`semiring::HyperTable`];
//! [`condensation`] quotients that table by ζ*; [`tower`] restricts to the
//! focus and repeats. [`reptools`] builds atoms from group actions and holds
//! the worked-example corpus, and [`document`] / [`cli`] are the JSON and
//! command-line front ends.
//!
//! ```
//! use focal::algebra::Algebra;
//! use focal::condensation::condense;
//! use focal::field::{FieldDescriptor, FieldElement};
//! use focal::linalg::Subspace;
//! use focal::semiring::{Atom, AtomSystem};
//! use focal::tower::focal_tower;
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let fe = |xs: &[i64]| xs.iter().map(|&x| FieldElement::from(x)).collect::<Vec<_>>();
//! // k[t]/(t² − 1) with atoms k·1 and k·t
//! let alg = Algebra::poly_quotient(FieldDescriptor::Rational, &fe(&[-1, 0, 1]))?;
//! let atoms = vec![
//!     Atom::new("k", Subspace::line(fe(&[1, 0]))),
//!     Atom::new("X", Subspace::line(fe(&[0, 1]))),
//! ];
//! let sys = AtomSystem::new(alg, atoms, None)?;
//! let table = sys.verify()?;
//! let report = condense(&table)?;
//! assert_eq!(report.monoid.size(), 2);
//! assert!(report.monoid.is_group());
//! let tower = focal_tower(&sys, 16)?;
//! assert_eq!(tower.levels.len(), 2);
//! # Ok(())
//! # }
//! ```

pub mod algebra;
pub mod cli;
pub mod condensation;
pub mod document;
pub mod field;
pub mod linalg;
pub mod reptools;
pub mod semiring;
pub mod tower;
