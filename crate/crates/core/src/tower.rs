//! Focal subalgebras and the focal tower.

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::condensation::{condense, CondensationError, CondensationReport, MonoidTable, ProductFamily};
use crate::linalg::{LinalgError, Subspace};
use crate::semiring::{AtomSet, AtomSystem, HyperTable, SemiringError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("focal subspace is not a unital subalgebra: {0}")]
    NotSubalgebra(&'static str),
    #[error("table has no identity atom, so there is no focus")]
    NoFocus,
    #[error(transparent)]
    Semiring(#[from] SemiringError),
    #[error(transparent)]
    Condensation(#[from] CondensationError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn focus_of(report: &CondensationReport) -> Result<&AtomSet, TowerError> {
    report.focus.as_ref().ok_or(TowerError::NoFocus)
}

/// `F = Σ focus atoms`, checked to satisfy `F·F ⊆ F` and `1 ∈ F`, together
/// with the atom system restricted to the focus.
pub fn focal_subalgebra(sys: &AtomSystem, report: &CondensationReport) -> Result<(Subspace, AtomSystem), TowerError> {
    let focus = focus_of(report)?;
    let f = sys.subspace_of(focus)?;
    if !f.contains(&sys.algebra().product_span(&f, &f)?)? {
        return Err(TowerError::NotSubalgebra("F·F is not contained in F"));
    }
    if !f.contains_vector(sys.algebra().one())? {
        return Err(TowerError::NotSubalgebra("1 is not in F"));
    }
    Ok((f, sys.restrict(focus)?))
}

/// One level `n` of the tower: the condensation of the `n`-th atom system.
#[derive(Debug, Clone)]
pub struct TowerLevel {
    pub level: usize,
    pub atom_names: Vec<String>,
    pub table: HyperTable,
    /// Indices into `atom_names`.
    pub focus_atoms: AtomSet,
    pub focal_subspace: Subspace,
    pub monoid: MonoidTable,
}

impl TowerLevel {
    pub fn focal_dim(&self) -> usize {
        self.focal_subspace.dim()
    }

    pub fn focus_names(&self) -> Vec<String> {
        self.focus_atoms.iter().map(|&i| self.atom_names[i].clone()).collect()
    }
}

#[derive(Debug, Clone)]
pub struct FocalTower {
    pub levels: Vec<TowerLevel>,
    /// The last level's focus is its whole atom set, so all later levels repeat it.
    pub stabilized: bool,
}

pub fn focal_tower(sys: &AtomSystem, max_depth: usize) -> Result<FocalTower, TowerError> {
    focal_tower_with_threads(sys, max_depth, 1)
}

/// Condenses, restricts to the focus, and repeats until the focus is the
/// whole atom set or `max_depth` levels have been computed.
pub fn focal_tower_with_threads(sys: &AtomSystem, max_depth: usize, threads: usize) -> Result<FocalTower, TowerError> {
    let mut levels = Vec::new();
    let mut current = sys.clone();
    for level in 1..=max_depth {
        let table = current.verify_with_threads(threads)?;
        let report = condense(&table)?;
        let (focal_subspace, restricted) = focal_subalgebra(&current, &report)?;
        let focus_atoms = focus_of(&report)?.clone();
        let stable = focus_atoms.len() == current.len();
        levels.push(TowerLevel {
            level,
            atom_names: current.names(),
            table,
            focus_atoms,
            focal_subspace,
            monoid: report.monoid,
        });
        if stable {
            return Ok(FocalTower {
                levels,
                stabilized: true,
            });
        }
        current = restricted;
    }
    Ok(FocalTower {
        levels,
        stabilized: false,
    })
}

/// The generating product of the family member equal to the focus, if any.
/// Members are generated shortest-first, so the witness is a shortest one.
pub fn witness_product(report: &CondensationReport, family: &ProductFamily) -> Option<Vec<usize>> {
    let focus = report.focus.as_ref()?;
    family.position(focus).map(|m| family.witness(m))
}

/// `Q(R) = 1` exactly when `F(R)` is the top element.
pub fn check_corollary_max(report: &CondensationReport, sys: &AtomSystem) -> Result<bool, TowerError> {
    let f = sys.subspace_of(focus_of(report)?)?;
    Ok((report.monoid.size() == 1) == (f == sys.top()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::{FieldDescriptor, FieldElement};
    use crate::semiring::Atom;

    fn fe(xs: &[i64]) -> Vec<FieldElement> {
        xs.iter().map(|&x| FieldElement::from(x)).collect()
    }

    /// The group algebra of Z2 with atoms k·e and k·x.
    fn z2_system() -> AtomSystem {
        let a = Algebra::poly_quotient(FieldDescriptor::Rational, &fe(&[-1, 0, 1])).unwrap();
        let atoms = vec![
            Atom::new("e", a.unit_line()),
            Atom::new("x", Subspace::line(a.basis_vector(1))),
        ];
        AtomSystem::new(a, atoms, None).unwrap()
    }

    fn trivial_system() -> AtomSystem {
        let a = Algebra::matrix_algebra(1);
        let k = Atom::new("k", a.unit_line());
        AtomSystem::new(a, vec![k], None).unwrap()
    }

    #[test]
    fn z2_tower() {
        let sys = z2_system();
        let report = condense(&sys.verify().unwrap()).unwrap();
        let (f, restricted) = focal_subalgebra(&sys, &report).unwrap();
        assert_eq!(f.dim(), 1);
        assert_eq!(restricted.len(), 1);
        assert_eq!(witness_product(&report, &report.family), Some(vec![0]));
        assert!(check_corollary_max(&report, &sys).unwrap());

        let tower = focal_tower(&sys, 10).unwrap();
        assert!(tower.stabilized);
        assert_eq!(tower.levels.len(), 2);
        assert_eq!(tower.levels[0].monoid.size(), 2);
        assert_eq!(tower.levels[1].monoid.size(), 1);
    }

    #[test]
    fn trivial_tower() {
        let sys = trivial_system();
        let tower = focal_tower(&sys, 10).unwrap();
        assert!(tower.stabilized);
        assert_eq!(tower.levels.len(), 1);
        assert_eq!(tower.levels[0].focal_dim(), 1);
        assert_eq!(tower.levels[0].focus_names(), vec!["k".to_string()]);
        let report = condense(&sys.verify().unwrap()).unwrap();
        assert_eq!(witness_product(&report, &report.family), Some(vec![0]));
        assert!(check_corollary_max(&report, &sys).unwrap());
    }

    #[test]
    fn depth_cap() {
        let tower = focal_tower(&z2_system(), 1).unwrap();
        assert!(!tower.stabilized);
        assert_eq!(tower.levels.len(), 1);
    }
}
