use std::fmt;

use crate::field::FieldElement;

use super::{LinalgError, Matrix};

/// A subspace of k^d stored as the reduced row echelon form of a basis.
///
/// RREF with zero rows removed is unique, so two subspaces are equal exactly
/// when their basis matrices are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of `vectors` in canonical form.
    pub fn canonicalize(vectors: &[Vec<FieldElement>], ambient_dim: usize) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(vectors.to_vec(), ambient_dim)?;
        Ok(Subspace::from_matrix(&m))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Subspace {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The line through a single vector.
    pub fn line(v: Vec<FieldElement>) -> Self {
        let d = v.len();
        Subspace::canonicalize(&[v], d).expect("single vector has consistent length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.basis.row_vectors()
    }

    fn check_dim(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_dim(other)?;
        let rows: Vec<Vec<FieldElement>> = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(<[FieldElement]>::to_vec)
            .collect();
        Subspace::canonicalize(&rows, self.ambient_dim)
    }

    /// Intersection by the Zassenhaus algorithm: row reduce
    /// `[[U, U], [V, 0]]`; rows whose left half vanishes span `U ∩ V`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_dim(other)?;
        let d = self.ambient_dim;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in self.basis_vectors() {
            rows.push(u.iter().chain(u.iter()).cloned().collect());
        }
        for v in other.basis_vectors() {
            rows.push(
                v.iter()
                    .cloned()
                    .chain(std::iter::repeat_n(FieldElement::zero(), d))
                    .collect(),
            );
        }
        let (r, pivots) = Matrix::from_rows(rows, 2 * d)?.rref();
        let meet: Vec<Vec<FieldElement>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= d)
            .map(|(i, _)| r.row(i)[d..].to_vec())
            .collect();
        Subspace::canonicalize(&meet, d)
    }

    /// Residue of `v` after clearing every pivot column of this subspace; zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (slot, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *slot = &*slot - &(&c * b);
                }
            }
        }
        Ok(out)
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(FieldElement::is_zero))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_dim(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        for v in other.basis_vectors() {
            if !self.contains_vector(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical complement representative of `covered` inside `self`: the
    /// span of the residues of this basis modulo `covered`. Zero exactly when
    /// `self ⊆ covered`.
    pub fn residual(&self, covered: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_dim(covered)?;
        let rows = self
            .basis_vectors()
            .map(|v| covered.reduce(v))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::canonicalize(&rows, self.ambient_dim)
    }

    /// Image of this subspace under the linear map `v ↦ m v`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        let rows = self
            .basis_vectors()
            .map(|v| m.apply(v))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::canonicalize(&rows, m.rows())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: ", self.dim(), self.ambient_dim)?;
        let rows: Vec<String> = self
            .basis_vectors()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "{})", rows.join(" "))
    }
}
