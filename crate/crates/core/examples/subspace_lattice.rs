//! Canonical subspaces: spans, sums, intersections and containment.

use focal::field::FieldElement;
use focal::linalg::Subspace;

fn v(xs: &[i64]) -> Vec<FieldElement> {
    xs.iter().map(|&x| FieldElement::from(x)).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u = Subspace::canonicalize(&[v(&[1, 1, 0]), v(&[2, 2, 0])], 3)?;
    let w = Subspace::canonicalize(&[v(&[0, 1, 1])], 3)?;
    println!(
        "U = span{{(1,1,0), (2,2,0)}} has dim {} and basis {:?}",
        u.dim(),
        u.basis_vectors().collect::<Vec<_>>()
    );
    let s = u.sum(&w)?;
    println!("U + W has dim {}", s.dim());
    let plane = Subspace::canonicalize(&[v(&[1, 0, 0]), v(&[0, 1, 1])], 3)?;
    let meet = s.intersect(&plane)?;
    println!(
        "(U + W) ∩ P has dim {} and basis {:?}",
        meet.dim(),
        meet.basis_vectors().collect::<Vec<_>>()
    );
    println!("W ⊆ P: {}, U ⊆ P: {}", plane.contains(&w)?, plane.contains(&u)?);
    // Equal subspaces have identical canonical bases, whatever the spanning set.
    let again = Subspace::canonicalize(&[v(&[3, 3, 0])], 3)?;
    println!("span(3,3,0) == U: {}", again == u);
    Ok(())
}
