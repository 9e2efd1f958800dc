//! Combinatorics on a hyperproduct table: structural checks, the relations
//! ζ* and β, κ-closure, `M(Z)`, and the condensation monoid.

mod family;
mod monoid;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::semiring::{AtomSet, HyperTable};

pub use family::{beta_classes, zeta_classes, Generation, ProductFamily};
pub use monoid::{condensation_monoid, MonoidTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CondensationError {
    #[error("table is not entire: {left}∘{right} is empty")]
    TableNotEntire { left: usize, right: usize },
    #[error("class product is not well defined: {first:?} and {second:?} land in different classes")]
    NotWellDefined {
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("quotient product is not associative on classes ({0}, {1}, {2})")]
    QuotientNotAssociative(usize, usize, usize),
    #[error("class of the identity atom is not an identity of the quotient")]
    IdentityLaw,
    #[error("seed set is empty")]
    EmptySeed,
    #[error("atom index {index} out of range for {len} atoms")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("κ iteration did not stabilize within {0} steps")]
    KappaDidNotStabilize(usize),
}

/// `S ⊙ T = ⋃ entry(x, y)` over `x ∈ S`, `y ∈ T`.
pub fn set_product(table: &HyperTable, s: &AtomSet, t: &AtomSet) -> AtomSet {
    let mut out = AtomSet::new();
    for &x in s {
        for &y in t {
            out.extend(table.entry(x, y));
        }
    }
    out
}

fn first_empty_entry(table: &HyperTable) -> Option<(usize, usize)> {
    let n = table.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| table.entry(i, j).is_empty())
}

fn require_entire(table: &HyperTable) -> Result<(), CondensationError> {
    match first_empty_entry(table) {
        Some((left, right)) => Err(CondensationError::TableNotEntire { left, right }),
        None => Ok(()),
    }
}

/// True iff no hyperproduct is empty.
pub fn check_entire(table: &HyperTable) -> bool {
    first_empty_entry(table).is_none()
}

/// For each atom `X`, a pair `(Y, Z)` with `k ∈ X∘Y` and `k ∈ Z∘X`, when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakReproducibility {
    pub holds: bool,
    pub witnesses: Vec<Option<(usize, usize)>>,
}

/// Weak reproducibility. Tables without an identity atom, or with an empty
/// entry, never qualify.
pub fn check_weak_reproducible(table: &HyperTable) -> WeakReproducibility {
    let n = table.len();
    let Some(k) = table.identity().filter(|_| check_entire(table)) else {
        return WeakReproducibility {
            holds: false,
            witnesses: vec![None; n],
        };
    };
    let witnesses: Vec<Option<(usize, usize)>> = (0..n)
        .map(|x| {
            let y = (0..n).find(|&y| table.entry(x, y).contains(&k))?;
            let z = (0..n).find(|&z| table.entry(z, x).contains(&k))?;
            Some((y, z))
        })
        .collect();
    WeakReproducibility {
        holds: witnesses.iter().all(Option::is_some),
        witnesses,
    }
}

/// True iff `Q∘X = Q = X∘Q` for every atom `X`, with `Q` the full atom set.
pub fn check_reproducible(table: &HyperTable) -> bool {
    let n = table.len();
    let all: AtomSet = (0..n).collect();
    (0..n).all(|x| {
        let single = AtomSet::from([x]);
        set_product(table, &all, &single) == all && set_product(table, &single, &all) == all
    })
}

fn triple_fails(table: &HyperTable, x: usize, y: usize, z: usize) -> bool {
    let (sx, sy, sz) = (AtomSet::from([x]), AtomSet::from([y]), AtomSet::from([z]));
    let left = set_product(table, &set_product(table, &sx, &sy), &sz);
    let right = set_product(table, &sx, &set_product(table, &sy, &sz));
    left != right
}

/// Every triple `(X, Y, Z)` with `(X∘Y)∘Z ≠ X∘(Y∘Z)`, in lexicographic order.
pub fn associativity_failures(table: &HyperTable) -> Result<Vec<(usize, usize, usize)>, CondensationError> {
    require_entire(table)?;
    let n = table.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if triple_fails(table, x, y, z) {
                    out.push((x, y, z));
                }
            }
        }
    }
    Ok(out)
}

/// Exhaustive associativity check; the witness is the first failing triple.
pub fn check_associative(table: &HyperTable) -> Result<Option<(usize, usize, usize)>, CondensationError> {
    require_entire(table)?;
    let n = table.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if triple_fails(table, x, y, z) {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

/// A partition of the atom indices. Classes are ordered by their least
/// element, and `class_of[i]` is the position of the class containing `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<AtomSet>,
}

impl Partition {
    /// Normalizes arbitrary class labels into canonical order.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let mut classes: Vec<AtomSet> = Vec::new();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for (i, &label) in labels.iter().enumerate() {
            let id = match seen.iter().find(|(l, _)| *l == label) {
                Some(&(_, id)) => id,
                None => {
                    seen.push((label, classes.len()));
                    classes.push(AtomSet::new());
                    classes.len() - 1
                }
            };
            classes[id].insert(i);
            class_of.push(id);
        }
        Partition { class_of, classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, atom: usize) -> usize {
        self.class_of[atom]
    }

    pub fn classes(&self) -> &[AtomSet] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &AtomSet {
        &self.classes[id]
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().map(|&i| coarser.class_of(i)).collect::<BTreeSet<_>>().len() <= 1)
    }
}

/// Strong regularity, checked exhaustively: for `X ζ* X'` and any `W`, the
/// union `X∘W ∪ X'∘W` (and its mirror) lies in one class. Returns a violating
/// `(X, X', W)` if there is one.
pub fn check_strong_regularity(table: &HyperTable, partition: &Partition) -> Option<(usize, usize, usize)> {
    let n = table.len();
    for class in partition.classes() {
        for &x in class {
            for &x2 in class {
                for w in 0..n {
                    for merged in [
                        table.entry(x, w).union(table.entry(x2, w)),
                        table.entry(w, x).union(table.entry(w, x2)),
                    ] {
                        let ids: BTreeSet<usize> = merged.map(|&z| partition.class_of(z)).collect();
                        if ids.len() > 1 {
                            return Some((x, x2, w));
                        }
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
    pub entire: bool,
    /// `None` when the table is not entire.
    pub associative: Option<bool>,
    pub weakly_reproducible: bool,
    pub reproducible: bool,
}

impl Flags {
    pub fn compute(table: &HyperTable) -> Flags {
        Flags {
            entire: check_entire(table),
            associative: check_associative(table).ok().map(|w| w.is_none()),
            weakly_reproducible: check_weak_reproducible(table).holds,
            reproducible: check_reproducible(table),
        }
    }
}

/// Everything the condensation step computes for one table.
#[derive(Debug, Clone)]
pub struct CondensationReport {
    pub flags: Flags,
    pub family: ProductFamily,
    pub partition: Partition,
    pub monoid: MonoidTable,
    /// The ζ* class of the identity atom; absent for tables without identity.
    pub focus: Option<AtomSet>,
}

/// Runs the whole condensation step on an entire table.
pub fn condense(table: &HyperTable) -> Result<CondensationReport, CondensationError> {
    require_entire(table)?;
    let flags = Flags::compute(table);
    let family = ProductFamily::new(table);
    let partition = zeta_classes(&family, table.len());
    let monoid = condensation_monoid(&partition, table)?;
    let focus = table.identity().map(|k| partition.class(partition.class_of(k)).clone());
    Ok(CondensationReport {
        flags,
        family,
        partition,
        monoid,
        focus,
    })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::semiring::{AtomSet, HyperTable};

    fn build(names: &[&str], identity: Option<usize>, rows: &[&[&[usize]]]) -> HyperTable {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|e| e.iter().copied().collect::<AtomSet>()).collect())
            .collect();
        HyperTable::from_abstract(names.iter().map(|s| s.to_string()).collect(), identity, entries).unwrap()
    }

    /// Atoms C, σ, V of End of the standard S3 representation.
    pub fn s3() -> HyperTable {
        build(
            &["C", "sigma", "V"],
            Some(0),
            &[&[&[0], &[1], &[2]], &[&[1], &[0], &[2]], &[&[2], &[2], &[0, 1]]],
        )
    }

    pub fn trivial() -> HyperTable {
        build(&["k"], Some(0), &[&[&[0]]])
    }

    pub fn idempotent() -> HyperTable {
        build(&["k", "X"], Some(0), &[&[&[0], &[1]], &[&[1], &[1]]])
    }

    pub fn nilpotent() -> HyperTable {
        build(&["k", "X"], Some(0), &[&[&[0], &[1]], &[&[1], &[]]])
    }

    pub fn z2() -> HyperTable {
        build(&["e", "x"], Some(0), &[&[&[0], &[1]], &[&[1], &[0]]])
    }

    /// A non-associative table: x∘x = {e, x}, x∘y = {y}, y∘x = {y}, y∘y = {x}.
    pub fn skew() -> HyperTable {
        build(
            &["e", "x", "y"],
            Some(0),
            &[&[&[0], &[1], &[2]], &[&[1], &[0, 1], &[2]], &[&[2], &[2], &[1]]],
        )
    }
}
