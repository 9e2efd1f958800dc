//! Finite-dimensional associative unital algebras given by structure constants.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldDescriptor, FieldElement, FieldError};
use crate::linalg::{LinalgError, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure tensor shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("declared identity fails on basis vector e{0}")]
    UnitFails(usize),
    #[error("polynomial is not monic of positive degree")]
    NotMonic,
    #[error("not a monoid: {0}")]
    NotAMonoid(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// An associative algebra with identity over Q or Q(ζ_n).
///
/// Structure constants are stored sparsely: `products[i * dim + j]` lists the
/// nonzero coordinates of `e_i e_j`.
#[derive(Clone)]
pub struct Algebra {
    field: FieldDescriptor,
    dim: usize,
    products: Vec<Vec<(usize, FieldElement)>>,
    one: Vec<FieldElement>,
}

impl Algebra {
    /// Validates shape, field membership, associativity on all basis triples
    /// and the two-sided unit law on all basis vectors.
    pub fn from_structure_constants(
        field: FieldDescriptor,
        dim: usize,
        structure: Vec<Vec<Vec<FieldElement>>>,
        one: Vec<FieldElement>,
    ) -> Result<Algebra, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ShapeMismatch("dimension must be positive".into()));
        }
        if structure.len() != dim {
            return Err(AlgebraError::ShapeMismatch(format!(
                "expected {dim} slices, found {}",
                structure.len()
            )));
        }
        if one.len() != dim {
            return Err(AlgebraError::ShapeMismatch(format!(
                "identity has length {}, expected {dim}",
                one.len()
            )));
        }
        let mut products = Vec::with_capacity(dim * dim);
        for (i, slice) in structure.into_iter().enumerate() {
            if slice.len() != dim {
                return Err(AlgebraError::ShapeMismatch(format!(
                    "slice {i} has {} rows, expected {dim}",
                    slice.len()
                )));
            }
            for (j, row) in slice.into_iter().enumerate() {
                if row.len() != dim {
                    return Err(AlgebraError::ShapeMismatch(format!(
                        "entry ({i},{j}) has length {}, expected {dim}",
                        row.len()
                    )));
                }
                let mut sparse = Vec::new();
                for (l, c) in row.into_iter().enumerate() {
                    let c = field.embed(&c)?;
                    if !c.is_zero() {
                        sparse.push((l, c));
                    }
                }
                products.push(sparse);
            }
        }
        let one = one.iter().map(|c| field.embed(c)).collect::<Result<Vec<_>, _>>()?;
        let alg = Algebra {
            field,
            dim,
            products,
            one,
        };
        alg.check_associative()?;
        alg.check_unit()?;
        Ok(alg)
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for l in 0..self.dim {
                    let left = self.mul_basis_right(&ij, l);
                    let jl = self.basis_product(j, l);
                    let right = self.mul_basis_left(i, &jl);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, l));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.mul(&self.one, &e) != e || self.mul(&e, &self.one) != e {
                return Err(AlgebraError::UnitFails(i));
            }
        }
        Ok(())
    }

    /// The n×n matrix algebra over Q in the matrix-unit basis, `E_ij` at index `i*n + j`.
    pub fn matrix_algebra(n: usize) -> Algebra {
        Algebra::matrix_algebra_over(FieldDescriptor::Rational, n)
    }

    pub fn matrix_algebra_over(field: FieldDescriptor, n: usize) -> Algebra {
        assert!(n >= 1, "matrix algebra needs n >= 1");
        let dim = n * n;
        let mut products = vec![Vec::new(); dim * dim];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // E_ij E_jl = E_il
                    products[(i * n + j) * dim + (j * n + l)] = vec![(i * n + l, FieldElement::one())];
                }
            }
        }
        let mut one = vec![FieldElement::zero(); dim];
        for i in 0..n {
            one[i * n + i] = FieldElement::one();
        }
        Algebra {
            field,
            dim,
            products,
            one,
        }
    }

    /// `k[t]/(f)` in the basis `1, t, …, t^{deg f - 1}`; `coeffs` lists the
    /// coefficients of `f` from the constant term up, ending with the leading 1.
    pub fn poly_quotient(field: FieldDescriptor, coeffs: &[FieldElement]) -> Result<Algebra, AlgebraError> {
        if coeffs.len() < 2 || !coeffs.last().is_some_and(FieldElement::is_one) {
            return Err(AlgebraError::NotMonic);
        }
        let coeffs = coeffs.iter().map(|c| field.embed(c)).collect::<Result<Vec<_>, _>>()?;
        let deg = coeffs.len() - 1;
        // t^k reduced mod f for k < 2 deg - 1.
        let mut powers: Vec<Vec<FieldElement>> = Vec::with_capacity(2 * deg);
        for k in 0..(2 * deg - 1) {
            let v = if k < deg {
                let mut v = vec![FieldElement::zero(); deg];
                v[k] = FieldElement::one();
                v
            } else {
                // t * t^{k-1}: shift up and replace t^deg by -(c_0 + … + c_{deg-1} t^{deg-1}).
                let prev = &powers[k - 1];
                let top = prev[deg - 1].clone();
                let mut v = vec![FieldElement::zero(); deg];
                v[1..deg].clone_from_slice(&prev[..deg - 1]);
                for (m, slot) in v.iter_mut().enumerate() {
                    *slot = &*slot - &(&top * &coeffs[m]);
                }
                v
            };
            powers.push(v);
        }
        let structure = (0..deg)
            .map(|i| (0..deg).map(|j| powers[i + j].clone()).collect())
            .collect();
        let mut one = vec![FieldElement::zero(); deg];
        one[0] = FieldElement::one();
        Algebra::from_structure_constants(field, deg, structure, one)
    }

    /// The monoid algebra `kM` with `e_x e_y = e_{xy}`.
    pub fn monoid_algebra(table: &[Vec<usize>]) -> Result<Algebra, AlgebraError> {
        let identity = validate_monoid_table(table).map_err(AlgebraError::NotAMonoid)?;
        let m = table.len();
        let mut products = Vec::with_capacity(m * m);
        for row in table {
            for &xy in row {
                products.push(vec![(xy, FieldElement::one())]);
            }
        }
        let mut one = vec![FieldElement::zero(); m];
        one[identity] = FieldElement::one();
        Ok(Algebra {
            field: FieldDescriptor::Rational,
            dim: m,
            products,
            one,
        })
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &[FieldElement] {
        &self.one
    }

    pub fn basis_vector(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::zero(); self.dim];
        v[i] = FieldElement::one();
        v
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::zero(); self.dim];
        for (l, c) in &self.products[i * self.dim + j] {
            v[*l] = c.clone();
        }
        v
    }

    /// Dense structure tensor `c[i][j][l]`.
    pub fn structure(&self) -> Vec<Vec<Vec<FieldElement>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j)).collect())
            .collect()
    }

    fn mul_basis_right(&self, a: &[FieldElement], l: usize) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (m, c) in &self.products[i * self.dim + l] {
                out[*m] = &out[*m] + &(ai * c);
            }
        }
        out
    }

    fn mul_basis_left(&self, i: usize, b: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::zero(); self.dim];
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for (m, c) in &self.products[i * self.dim + j] {
                out[*m] = &out[*m] + &(bj * c);
            }
        }
        out
    }

    /// Product of two elements given in coordinates.
    pub fn mul(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let coeff = ai * bj;
                for (l, c) in &self.products[i * self.dim + j] {
                    out[*l] = &out[*l] + &(&coeff * c);
                }
            }
        }
        out
    }

    /// `k·1_A`.
    pub fn unit_line(&self) -> Subspace {
        Subspace::line(self.one.clone())
    }

    fn check_subspace(&self, u: &Subspace) -> Result<(), AlgebraError> {
        if u.ambient_dim() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                found: u.ambient_dim(),
            }
            .into());
        }
        Ok(())
    }

    /// `UV = span{uv : u ∈ U, v ∈ V}`; by bilinearity the products of basis
    /// vectors suffice.
    pub fn product_span(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, AlgebraError> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let rows: Vec<Vec<FieldElement>> = u
            .basis_vectors()
            .flat_map(|a| v.basis_vectors().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(a, b))
            .collect();
        Ok(Subspace::canonicalize(&rows, self.dim)?)
    }
}

/// Checks that `table` is a total associative operation on `0..m` with a
/// two-sided identity, returning the identity. Errors describe a witness.
pub fn validate_monoid_table(table: &[Vec<usize>]) -> Result<usize, String> {
    let m = table.len();
    if m == 0 {
        return Err("empty table".into());
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != m {
            return Err(format!("row {x} has length {}, expected {m}", row.len()));
        }
        if let Some(&bad) = row.iter().find(|&&y| y >= m) {
            return Err(format!("row {x} contains out-of-range element {bad}"));
        }
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(format!("associativity fails at ({x}, {y}, {z})"));
                }
            }
        }
    }
    (0..m)
        .find(|&e| (0..m).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| "no two-sided identity".to_string())
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.products == other.products && self.one == other.one
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {})", self.dim, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(xs: &[i64]) -> Vec<FieldElement> {
        xs.iter().map(|&x| FieldElement::from(x)).collect()
    }

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    #[test]
    fn one_dimensional_field() {
        let a = Algebra::from_structure_constants(q(), 1, vec![vec![fe(&[1])]], fe(&[1])).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(Algebra::matrix_algebra(1), a);
    }

    #[test]
    fn wrong_unit_is_rejected() {
        // Z2 group algebra (e1 e1 = e0) with e1 declared as the identity.
        let s = vec![vec![fe(&[1, 0]), fe(&[0, 1])], vec![fe(&[0, 1]), fe(&[1, 0])]];
        let err = Algebra::from_structure_constants(q(), 2, s, fe(&[0, 1])).unwrap_err();
        assert_eq!(err, AlgebraError::UnitFails(0));
    }

    #[test]
    fn non_associative_witness() {
        // e0 unit; e1 e1 = e2, e1 e2 = e1, everything else with e1, e2 zero.
        // (e1 e1) e1 = e2 e1 = 0 but e1 (e1 e1) = e1 e2 = e1.
        let mut s = vec![vec![fe(&[0, 0, 0]); 3]; 3];
        let e = |i: usize| (0..3).map(|l| FieldElement::from((l == i) as i64)).collect::<Vec<_>>();
        s[0] = (0..3).map(e).collect();
        for (i, row) in s.iter_mut().enumerate() {
            row[0] = e(i);
        }
        s[1][1] = fe(&[0, 0, 1]);
        s[1][2] = fe(&[0, 1, 0]);
        let err = Algebra::from_structure_constants(q(), 3, s, fe(&[1, 0, 0])).unwrap_err();
        assert_eq!(err, AlgebraError::NotAssociative(1, 1, 1));
    }

    #[test]
    fn shape_mismatch() {
        let err = Algebra::from_structure_constants(q(), 2, vec![vec![fe(&[1, 0])]], fe(&[1, 0])).unwrap_err();
        assert!(matches!(err, AlgebraError::ShapeMismatch(_)));
        let err = Algebra::from_structure_constants(q(), 1, vec![vec![fe(&[1])]], fe(&[1, 0])).unwrap_err();
        assert!(matches!(err, AlgebraError::ShapeMismatch(_)));
    }

    #[test]
    fn matrix_units() {
        let m2 = Algebra::matrix_algebra(2);
        // E12 = index 1, E21 = index 2, E11 = index 0
        assert_eq!(m2.basis_product(1, 2), m2.basis_vector(0));
        let m3 = Algebra::matrix_algebra(3);
        // E12 (index 1) times E31 (index 6) is zero
        assert_eq!(m3.basis_product(1, 6), fe(&[0; 9]));
    }

    #[test]
    fn poly_quotients() {
        let t_sq = |c0: i64, c1: i64| Algebra::poly_quotient(q(), &fe(&[c0, c1, 1])).unwrap();
        assert_eq!(t_sq(0, 0).basis_product(1, 1), fe(&[0, 0]));
        assert_eq!(t_sq(-1, 0).basis_product(1, 1), fe(&[1, 0]));
        assert_eq!(t_sq(0, -1).basis_product(1, 1), fe(&[0, 1]));
        let cubic = Algebra::poly_quotient(q(), &fe(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(cubic.basis_product(2, 2), fe(&[0, 1, 0]));
        assert_eq!(Algebra::poly_quotient(q(), &fe(&[3, 1])).unwrap().dim(), 1);
        assert_eq!(
            Algebra::poly_quotient(q(), &fe(&[1, 2, 3])).unwrap_err(),
            AlgebraError::NotMonic
        );
        assert_eq!(
            Algebra::poly_quotient(q(), &fe(&[1])).unwrap_err(),
            AlgebraError::NotMonic
        );
    }

    #[test]
    fn monoid_algebras() {
        let z2 = Algebra::monoid_algebra(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.basis_product(1, 1), z2.basis_vector(0));
        let semilattice = Algebra::monoid_algebra(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(semilattice.basis_product(1, 1), semilattice.basis_vector(1));
        let left_zero = Algebra::monoid_algebra(&[vec![0, 0], vec![1, 1]]);
        assert!(matches!(left_zero, Err(AlgebraError::NotAMonoid(_))));
    }

    #[test]
    fn product_span_examples() {
        let m2 = Algebra::matrix_algebra(2);
        let e = |i: usize| Subspace::line(m2.basis_vector(i));
        assert_eq!(m2.product_span(&e(1), &e(2)).unwrap(), e(0));
        // trace-zero matrices: E12, E21, E11 - E22
        let x = Subspace::canonicalize(&[fe(&[0, 1, 0, 0]), fe(&[0, 0, 1, 0]), fe(&[1, 0, 0, -1])], 4).unwrap();
        assert_eq!(m2.product_span(&x, &x).unwrap(), Subspace::full(4));
        assert_eq!(m2.product_span(&m2.unit_line(), &x).unwrap(), x);
        assert!(m2.product_span(&x, &Subspace::zero(3)).is_err());
    }

    fn subspace_m2() -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 0..=3)
            .prop_map(|rows| Subspace::canonicalize(&rows.iter().map(|r| fe(r)).collect::<Vec<_>>(), 4).unwrap())
    }

    proptest! {
        #[test]
        fn product_span_laws(u in subspace_m2(), v in subspace_m2(), w in subspace_m2()) {
            let a = Algebra::matrix_algebra(2);
            let uv = a.product_span(&u, &v).unwrap();
            prop_assert_eq!(
                a.product_span(&uv, &w).unwrap(),
                a.product_span(&u, &a.product_span(&v, &w).unwrap()).unwrap()
            );
            let u_plus_v = u.sum(&v).unwrap();
            prop_assert_eq!(
                a.product_span(&u_plus_v, &w).unwrap(),
                a.product_span(&u, &w).unwrap().sum(&a.product_span(&v, &w).unwrap()).unwrap()
            );
            prop_assert!(a.product_span(&u_plus_v, &w).unwrap().contains(&a.product_span(&u, &w).unwrap()).unwrap());
            prop_assert_eq!(a.product_span(&a.unit_line(), &u).unwrap(), u.clone());
            prop_assert_eq!(a.product_span(&u, &a.unit_line()).unwrap(), u);
        }
    }
}
