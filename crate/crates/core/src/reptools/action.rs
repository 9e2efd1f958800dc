use num_traits::{One, ToPrimitive};

use crate::algebra::Algebra;
use crate::field::FieldElement;
use crate::linalg::{Matrix, Subspace};
use crate::semiring::AtomSystem;

use super::{FiniteGroup, ReptoolsError};

/// A group acting on an algebra by unital algebra automorphisms. Matrices act
/// on coordinate column vectors.
#[derive(Debug, Clone)]
pub struct ActionOnAlgebra {
    group: FiniteGroup,
    algebra: Algebra,
    matrices: Vec<Matrix>,
}

impl ActionOnAlgebra {
    /// Checks the group law, `g·1 = 1`, and `g·(ab) = (g·a)(g·b)` on basis pairs.
    pub fn new(group: FiniteGroup, algebra: Algebra, matrices: Vec<Matrix>) -> Result<Self, ReptoolsError> {
        let d = algebra.dim();
        if matrices.len() != group.order() {
            return Err(ReptoolsError::NotAnAction(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        for (g, m) in matrices.iter().enumerate() {
            if m.rows() != d || m.cols() != d {
                return Err(ReptoolsError::NotAnAction(format!("matrix {g} is not {d}x{d}")));
            }
            if let Some(bad) = m.row_vectors().flatten().find(|x| !algebra.field().contains(x)) {
                return Err(ReptoolsError::FieldTooSmall(format!("entry {bad} of matrix {g}")));
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if matrices[g].mul(&matrices[h])? != matrices[group.mul(g, h)] {
                    return Err(ReptoolsError::NotAnAction(format!("group law fails for ({g}, {h})")));
                }
            }
        }
        let one = algebra.one().to_vec();
        let images: Vec<Vec<Vec<FieldElement>>> =
            matrices.iter().map(|m| (0..d).map(|i| m.column(i)).collect()).collect();
        for (g, m) in matrices.iter().enumerate() {
            if m.apply(&one)? != one {
                return Err(ReptoolsError::NotAnAction(format!("element {g} moves the identity")));
            }
            for i in 0..d {
                for j in 0..d {
                    let lhs = m.apply(&algebra.basis_product(i, j))?;
                    let rhs = algebra.mul(&images[g][i], &images[g][j]);
                    if lhs != rhs {
                        return Err(ReptoolsError::NotAnAction(format!(
                            "element {g} is not multiplicative on (e{i}, e{j})"
                        )));
                    }
                }
            }
        }
        Ok(ActionOnAlgebra {
            group,
            algebra,
            matrices,
        })
    }

    /// The trivial group acting trivially.
    pub fn trivial(algebra: Algebra) -> ActionOnAlgebra {
        let d = algebra.dim();
        ActionOnAlgebra {
            group: FiniteGroup::trivial(),
            algebra,
            matrices: vec![Matrix::identity(d)],
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Whether every group element maps `s` into itself.
    pub fn is_stable(&self, s: &Subspace) -> Result<bool, ReptoolsError> {
        for m in &self.matrices {
            if !s.contains(&s.image(m)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Conjugation `a ↦ ρ(g) a ρ(g)⁻¹` on the matrix algebra `End(V)`, indexed
/// as in [`Algebra::matrix_algebra_over`]. The matrices `ρ(g)` only need to
/// respect the group law up to scalars; the induced action is validated.
pub fn conjugation_action(
    group: FiniteGroup,
    algebra: Algebra,
    rep: &[Matrix],
) -> Result<ActionOnAlgebra, ReptoolsError> {
    let n = rep.first().map_or(1, Matrix::rows);
    if algebra.dim() != n * n {
        return Err(ReptoolsError::NotAnAction(format!(
            "algebra of dimension {} is not End of a {n}-dimensional space",
            algebra.dim()
        )));
    }
    let mut matrices = Vec::with_capacity(rep.len());
    for g in rep {
        let inv = g.inverse()?;
        let mut m = Matrix::zeros(n * n, n * n);
        // (g E_ij g⁻¹)_ab = g_ai (g⁻¹)_jb
        for i in 0..n {
            for j in 0..n {
                for a in 0..n {
                    if g[(a, i)].is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        m[(a * n + b, i * n + j)] = &g[(a, i)] * &inv[(j, b)];
                    }
                }
            }
        }
        matrices.push(m);
    }
    ActionOnAlgebra::new(group, algebra, matrices)
}

/// A class function given by its value on every group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterRow {
    pub name: String,
    pub degree: usize,
    pub values_by_element: Vec<FieldElement>,
}

impl CharacterRow {
    pub fn new(name: impl Into<String>, values_by_element: Vec<FieldElement>) -> Result<Self, ReptoolsError> {
        let name = name.into();
        let degree = values_by_element
            .first()
            .and_then(FieldElement::as_rational)
            .filter(|r| r.denominator().is_one() && !r.is_negative() && !r.is_zero())
            .and_then(|r| r.numerator().to_usize())
            .ok_or_else(|| ReptoolsError::NotAnAction(format!("character {name} has no positive integer degree")))?;
        Ok(CharacterRow {
            name,
            degree,
            values_by_element,
        })
    }
}

/// Isotypic components for a list of characters.
#[derive(Debug, Clone)]
pub struct IsotypicDecomposition {
    pub components: Vec<(String, Subspace)>,
    /// The components sum to the whole algebra.
    pub complete: bool,
}

/// Image of `(deg χ / |G|) Σ χ(g⁻¹) ρ(g)` for each character.
pub fn isotypic_components(
    action: &ActionOnAlgebra,
    characters: &[CharacterRow],
) -> Result<IsotypicDecomposition, ReptoolsError> {
    let group = action.group();
    let field = action.algebra().field();
    let d = action.algebra().dim();
    let order = FieldElement::from(group.order() as i64);
    let mut components = Vec::with_capacity(characters.len());
    let mut total = Subspace::zero(d);
    for chi in characters {
        if chi.values_by_element.len() != group.order() {
            return Err(ReptoolsError::CharacterLength {
                expected: group.order(),
                found: chi.values_by_element.len(),
            });
        }
        if let Some(bad) = chi.values_by_element.iter().find(|v| !field.contains(v)) {
            return Err(ReptoolsError::FieldTooSmall(format!(
                "value {bad} of character {}",
                chi.name
            )));
        }
        let mut proj = Matrix::zeros(d, d);
        for (g, m) in action.matrices().iter().enumerate() {
            let c = &chi.values_by_element[group.inverse(g)];
            if !c.is_zero() {
                proj = proj.add(&m.scale(c))?;
            }
        }
        let scale = FieldElement::from(chi.degree as i64).checked_div(&order)?;
        let image = Subspace::from_matrix(&proj.scale(&scale).transpose());
        total = total.sum(&image)?;
        components.push((chi.name.clone(), image));
    }
    Ok(IsotypicDecomposition {
        complete: total.is_full(),
        components,
    })
}

/// Isotypic components that are themselves irreducible, i.e. whose
/// dimension equals the character degree. Fails on the first component
/// where the irreducible occurs more than once.
pub fn multiplicity_free_atoms(
    action: &ActionOnAlgebra,
    characters: &[CharacterRow],
) -> Result<Vec<(String, Subspace)>, ReptoolsError> {
    let decomposition = isotypic_components(action, characters)?;
    let mut out = Vec::new();
    for ((name, s), chi) in decomposition.components.into_iter().zip(characters) {
        if s.is_zero() {
            continue;
        }
        if s.dim() != chi.degree {
            return Err(ReptoolsError::NotMultiplicityFree {
                name,
                dim: s.dim(),
                degree: chi.degree,
            });
        }
        out.push((name, s));
    }
    Ok(out)
}

/// The subspace fixed by every group element.
pub fn fixed_space(action: &ActionOnAlgebra) -> Result<Subspace, ReptoolsError> {
    fixed_space_of(action.algebra().dim(), action.matrices())
}

/// The subspace fixed by each of `matrices`.
pub fn fixed_space_of(d: usize, matrices: &[Matrix]) -> Result<Subspace, ReptoolsError> {
    let id = Matrix::identity(d);
    let mut rows = Vec::new();
    for m in matrices {
        let diff = m.sub(&id)?;
        rows.extend(diff.row_vectors().map(<[FieldElement]>::to_vec));
    }
    let stacked = Matrix::from_rows(rows, d)?;
    Ok(Subspace::from_matrix(&stacked.kernel()))
}

/// Multiplicity of the trivial representation: the dimension of the fixed space.
pub fn trivial_multiplicity(action: &ActionOnAlgebra) -> Result<usize, ReptoolsError> {
    Ok(fixed_space(action)?.dim())
}

/// `top·X = top = X·top` for every atom. Returns the first atom that fails.
pub fn one_sided_ideal_check(sys: &AtomSystem) -> Result<Option<usize>, ReptoolsError> {
    let top = sys.top();
    for (i, atom) in sys.atoms().iter().enumerate() {
        let left = sys.algebra().product_span(&top, &atom.subspace)?;
        let right = sys.algebra().product_span(&atom.subspace, &top)?;
        if left != top || right != top {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
