//! Finite atomistic subsemirings given by a linearly independent family of atoms.
//!
//! Independence makes the generated lattice a Boolean lattice on the atoms:
//! every element is a unique sum of atoms, and an atom lies in a sum of atoms
//! only if it is one of the summands. The only thing left to verify is that
//! each product of two atoms is again a sum of atoms.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::linalg::{LinalgError, Subspace};

/// A set of atom indices.
pub type AtomSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiringError {
    #[error("atom {0:?} is the zero subspace")]
    ZeroAtom(String),
    #[error("duplicate atom name {0:?}")]
    DuplicateName(String),
    #[error("atoms are not linearly independent; dependent sub-collection: {0:?}")]
    NotIndependent(Vec<String>),
    #[error("no atom equals the line spanned by the identity")]
    IdentityMissing,
    #[error("atom {0:?} was declared as the identity but is not the line spanned by 1")]
    IdentityMismatch(String),
    #[error("product {left}·{right} is not a sum of atoms; uncovered part has dimension {}", defect.dim())]
    NotClosed {
        left: String,
        right: String,
        defect: Subspace,
    },
    #[error("atom index {index} out of range for {len} atoms")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("atom {0:?} is not a scalar identity of the table")]
    IdentityLaw(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Atom {
    pub name: String,
    pub subspace: Subspace,
}

impl Atom {
    pub fn new(name: impl Into<String>, subspace: Subspace) -> Self {
        Atom {
            name: name.into(),
            subspace,
        }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.name, self.subspace)
    }
}

/// The atoms of a finite atomistic subsemiring of S(A).
#[derive(Clone)]
pub struct AtomSystem {
    algebra: Arc<Algebra>,
    atoms: Vec<Atom>,
    identity: usize,
}

impl AtomSystem {
    /// Checks that atoms are nonzero subspaces of `A`, that their sum is
    /// direct, and that one of them is `k·1_A`. When `identity` is `None` the
    /// identity atom is detected.
    pub fn new(
        algebra: impl Into<Arc<Algebra>>,
        atoms: Vec<Atom>,
        identity: Option<usize>,
    ) -> Result<Self, SemiringError> {
        let algebra = algebra.into();
        let mut seen = BTreeSet::new();
        for atom in &atoms {
            if atom.subspace.ambient_dim() != algebra.dim() {
                return Err(LinalgError::DimensionMismatch {
                    expected: algebra.dim(),
                    found: atom.subspace.ambient_dim(),
                }
                .into());
            }
            if atom.subspace.is_zero() {
                return Err(SemiringError::ZeroAtom(atom.name.clone()));
            }
            if !seen.insert(atom.name.as_str()) {
                return Err(SemiringError::DuplicateName(atom.name.clone()));
            }
        }
        if let Some(dependent) = dependent_subcollection(&atoms)? {
            return Err(SemiringError::NotIndependent(
                dependent.into_iter().map(|i| atoms[i].name.clone()).collect(),
            ));
        }
        let unit = algebra.unit_line();
        let identity = match identity {
            Some(i) => {
                let atom = atoms.get(i).ok_or(SemiringError::IndexOutOfRange {
                    index: i,
                    len: atoms.len(),
                })?;
                if atom.subspace != unit {
                    return Err(SemiringError::IdentityMismatch(atom.name.clone()));
                }
                i
            }
            None => atoms
                .iter()
                .position(|a| a.subspace == unit)
                .ok_or(SemiringError::IdentityMissing)?,
        };
        Ok(AtomSystem {
            algebra,
            atoms,
            identity,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> Vec<String> {
        self.atoms.iter().map(|a| a.name.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a.name == name)
    }

    fn check_index(&self, i: usize) -> Result<(), SemiringError> {
        if i >= self.atoms.len() {
            return Err(SemiringError::IndexOutOfRange {
                index: i,
                len: self.atoms.len(),
            });
        }
        Ok(())
    }

    /// Sum of the selected atoms; the empty selection gives the zero subspace.
    pub fn subspace_of<'a>(&self, subset: impl IntoIterator<Item = &'a usize>) -> Result<Subspace, SemiringError> {
        let mut acc = Subspace::zero(self.algebra.dim());
        for &i in subset {
            self.check_index(i)?;
            acc = acc.sum(&self.atoms[i].subspace)?;
        }
        Ok(acc)
    }

    /// The maximum element of the semiring: the sum of all atoms.
    pub fn top(&self) -> Subspace {
        let all: Vec<usize> = (0..self.len()).collect();
        self.subspace_of(&all).expect("indices in range")
    }

    /// Atoms contained in `s`.
    pub fn atoms_in(&self, s: &Subspace) -> Result<AtomSet, SemiringError> {
        let mut out = AtomSet::new();
        for (i, atom) in self.atoms.iter().enumerate() {
            if s.contains(&atom.subspace)? {
                out.insert(i);
            }
        }
        Ok(out)
    }

    fn entry(&self, i: usize, j: usize) -> Result<AtomSet, SemiringError> {
        let product = self
            .algebra
            .product_span(&self.atoms[i].subspace, &self.atoms[j].subspace)?;
        let contained = self.atoms_in(&product)?;
        let covered = self.subspace_of(&contained)?;
        if covered != product {
            return Err(SemiringError::NotClosed {
                left: self.atoms[i].name.clone(),
                right: self.atoms[j].name.clone(),
                defect: product.residual(&covered)?,
            });
        }
        Ok(contained)
    }

    /// Verifies that every product of two atoms is a sum of atoms and returns
    /// the hyperproduct table `X∘Y = {Z : Z ⊆ XY}`. Empty entries are kept.
    pub fn verify(&self) -> Result<HyperTable, SemiringError> {
        self.verify_with_threads(1)
    }

    /// As [`AtomSystem::verify`], splitting the rows of the table over `threads` workers.
    pub fn verify_with_threads(&self, threads: usize) -> Result<HyperTable, SemiringError> {
        let n = self.len();
        let rows: Vec<Result<Vec<AtomSet>, SemiringError>> = if threads <= 1 || n < 2 {
            (0..n).map(|i| (0..n).map(|j| self.entry(i, j)).collect()).collect()
        } else {
            let chunk = n.div_ceil(threads);
            std::thread::scope(|scope| {
                let handles: Vec<_> = (0..n)
                    .step_by(chunk)
                    .map(|start| {
                        scope.spawn(move || {
                            (start..(start + chunk).min(n))
                                .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
                                .collect::<Vec<_>>()
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("table worker panicked"))
                    .collect()
            })
        };
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            entries.extend(row?);
        }
        Ok(HyperTable {
            atom_names: self.names(),
            identity: Some(self.identity),
            entries,
            source: TableSource::Semiring,
        })
    }

    /// The subsystem on the selected atoms. The selection must contain the
    /// identity atom.
    pub fn restrict(&self, subset: &AtomSet) -> Result<AtomSystem, SemiringError> {
        for &i in subset {
            self.check_index(i)?;
        }
        let atoms: Vec<Atom> = subset.iter().map(|&i| self.atoms[i].clone()).collect();
        let identity = subset.iter().position(|&i| i == self.identity);
        if identity.is_none() {
            return Err(SemiringError::IdentityMissing);
        }
        AtomSystem::new(self.algebra.clone(), atoms, identity)
    }
}

impl fmt::Debug for AtomSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AtomSystem")
            .field("algebra", &self.algebra)
            .field("atoms", &self.names())
            .field("identity", &self.atoms[self.identity].name)
            .finish()
    }
}

/// A minimal linearly dependent sub-collection, if the atom sum is not direct.
fn dependent_subcollection(atoms: &[Atom]) -> Result<Option<Vec<usize>>, LinalgError> {
    let is_dependent = |idx: &[usize]| -> Result<bool, LinalgError> {
        let Some(&first) = idx.first() else {
            return Ok(false);
        };
        let mut acc = Subspace::zero(atoms[first].subspace.ambient_dim());
        let mut total = 0;
        for &i in idx {
            acc = acc.sum(&atoms[i].subspace)?;
            total += atoms[i].subspace.dim();
        }
        Ok(acc.dim() < total)
    };
    let mut prefix = Vec::new();
    for i in 0..atoms.len() {
        prefix.push(i);
        if is_dependent(&prefix)? {
            let mut minimal = prefix.clone();
            for j in prefix {
                let without: Vec<usize> = minimal.iter().copied().filter(|&x| x != j).collect();
                if is_dependent(&without)? {
                    minimal = without;
                }
            }
            return Ok(Some(minimal));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSource {
    Semiring,
    Abstract,
}

/// The hyperproduct `X∘Y` on a finite set of atoms, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperTable {
    atom_names: Vec<String>,
    identity: Option<usize>,
    entries: Vec<AtomSet>,
    source: TableSource,
}

impl HyperTable {
    /// A table given combinatorially. `entries[i][j]` is `i∘j`; when an
    /// identity is named it must act as a scalar identity.
    pub fn from_abstract(
        atom_names: Vec<String>,
        identity: Option<usize>,
        entries: Vec<Vec<AtomSet>>,
    ) -> Result<Self, SemiringError> {
        let n = atom_names.len();
        let mut seen = BTreeSet::new();
        for name in &atom_names {
            if !seen.insert(name.as_str()) {
                return Err(SemiringError::DuplicateName(name.clone()));
            }
        }
        if entries.len() != n {
            return Err(SemiringError::TableShape {
                expected: n * n,
                found: entries.iter().map(Vec::len).sum(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in entries {
            if row.len() != n {
                return Err(SemiringError::TableShape {
                    expected: n,
                    found: row.len(),
                });
            }
            for set in row {
                if let Some(&bad) = set.iter().find(|&&z| z >= n) {
                    return Err(SemiringError::IndexOutOfRange { index: bad, len: n });
                }
                flat.push(set);
            }
        }
        if let Some(e) = identity {
            if e >= n {
                return Err(SemiringError::IndexOutOfRange { index: e, len: n });
            }
            for j in 0..n {
                let single = AtomSet::from([j]);
                if flat[e * n + j] != single || flat[j * n + e] != single {
                    return Err(SemiringError::IdentityLaw(atom_names[e].clone()));
                }
            }
        }
        Ok(HyperTable {
            atom_names,
            identity,
            entries: flat,
            source: TableSource::Abstract,
        })
    }

    pub fn len(&self) -> usize {
        self.atom_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atom_names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.atom_names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.atom_names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atom_names.iter().position(|n| n == name)
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn source(&self) -> TableSource {
        self.source
    }

    /// `i∘j` without bounds reporting; panics on bad indices.
    pub fn entry(&self, i: usize, j: usize) -> &AtomSet {
        &self.entries[i * self.len() + j]
    }

    /// `i∘j`.
    pub fn hyperproduct(&self, i: usize, j: usize) -> Result<&AtomSet, SemiringError> {
        let n = self.len();
        for idx in [i, j] {
            if idx >= n {
                return Err(SemiringError::IndexOutOfRange { index: idx, len: n });
            }
        }
        Ok(self.entry(i, j))
    }

    /// Names of the atoms in a set, in index order.
    pub fn names_of(&self, set: &AtomSet) -> Vec<String> {
        set.iter().map(|&i| self.atom_names[i].clone()).collect()
    }

    /// The table restricted to `subset` (re-indexed in increasing order).
    /// Entries are intersected with the subset.
    pub fn restrict(&self, subset: &AtomSet) -> HyperTable {
        let idx: Vec<usize> = subset.iter().copied().collect();
        let pos = |z: usize| idx.iter().position(|&x| x == z);
        let mut entries = Vec::with_capacity(idx.len() * idx.len());
        for &i in &idx {
            for &j in &idx {
                entries.push(self.entry(i, j).iter().filter_map(|&z| pos(z)).collect());
            }
        }
        HyperTable {
            atom_names: idx.iter().map(|&i| self.atom_names[i].clone()).collect(),
            identity: self.identity.and_then(pos),
            entries,
            source: self.source,
        }
    }
}
