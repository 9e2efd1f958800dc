use std::collections::HashMap;

use crate::linalg::Matrix;

use super::ReptoolsError;

/// Default bound on the number of elements generated by [`group_from_permutations`].
pub const DEFAULT_SIZE_CAP: usize = 10_000;

/// A finite permutation group with its multiplication table.
///
/// Elements are permutations of `0..degree`, composed right to left:
/// `(g h)(x) = g(h(x))`. Element 0 is the identity. Every element records a
/// word in the generators whose product, read left to right, equals it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Vec<usize>>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    words: Vec<Vec<usize>>,
}

fn compose(g: &[usize], h: &[usize]) -> Vec<usize> {
    h.iter().map(|&x| g[x]).collect()
}

fn check_permutation(p: &[usize], degree: usize) -> Result<(), ReptoolsError> {
    let mut seen = vec![false; degree];
    if p.len() != degree {
        return Err(ReptoolsError::InvalidPermutation(format!(
            "{p:?} has length {}, expected {degree}",
            p.len()
        )));
    }
    for &x in p {
        if x >= degree || std::mem::replace(&mut seen[x], true) {
            return Err(ReptoolsError::InvalidPermutation(format!("{p:?} is not a bijection")));
        }
    }
    Ok(())
}

/// Breadth-first closure of the generators, capped at `cap` elements.
pub fn group_from_permutations_capped(generators: &[Vec<usize>], cap: usize) -> Result<FiniteGroup, ReptoolsError> {
    let degree = generators.first().map_or(0, Vec::len);
    for g in generators {
        check_permutation(g, degree)?;
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        for (s, gen) in generators.iter().enumerate() {
            let p = compose(gen, &elements[head]);
            if index.contains_key(&p) {
                continue;
            }
            if elements.len() == cap {
                return Err(ReptoolsError::SizeCapExceeded(cap));
            }
            let mut word = vec![s];
            word.extend(&words[head]);
            index.insert(p.clone(), elements.len());
            elements.push(p);
            words.push(word);
        }
        head += 1;
    }
    let mult: Vec<Vec<usize>> = elements
        .iter()
        .map(|g| elements.iter().map(|h| index[&compose(g, h)]).collect())
        .collect();
    let inverse = (0..elements.len())
        .map(|g| {
            mult[g]
                .iter()
                .position(|&p| p == 0)
                .expect("finite permutation groups have inverses")
        })
        .collect();
    let generator_indices = generators.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup {
        degree,
        elements,
        mult,
        inverse,
        generators: generator_indices,
        words,
    })
}

/// Breadth-first closure of the generators, capped at [`DEFAULT_SIZE_CAP`].
pub fn group_from_permutations(generators: &[Vec<usize>]) -> Result<FiniteGroup, ReptoolsError> {
    group_from_permutations_capped(generators, DEFAULT_SIZE_CAP)
}

impl FiniteGroup {
    /// The group with one element.
    pub fn trivial() -> FiniteGroup {
        group_from_permutations(&[]).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn word(&self, g: usize) -> &[usize] {
        &self.words[g]
    }

    pub fn index_of(&self, permutation: &[usize]) -> Option<usize> {
        self.elements.iter().position(|p| p == permutation)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 0 {
            x = self.mult[x][g];
            n += 1;
        }
        n
    }

    /// Extends generator images multiplicatively along the recorded words.
    /// The result is a homomorphism only if the images satisfy the group's
    /// relations, which callers verify.
    pub fn represent(&self, generator_images: &[Matrix]) -> Result<Vec<Matrix>, ReptoolsError> {
        if generator_images.len() != self.generators.len() {
            return Err(ReptoolsError::NotAnAction(format!(
                "{} generator images for {} generators",
                generator_images.len(),
                self.generators.len()
            )));
        }
        let n = generator_images.first().map_or(1, Matrix::rows);
        self.words
            .iter()
            .map(|word| {
                word.iter()
                    .try_fold(Matrix::identity(n), |acc, &s| acc.mul(&generator_images[s]))
                    .map_err(ReptoolsError::from)
            })
            .collect()
    }
}

/// The matrix of a permutation of coordinates on the span of `basis`,
/// which must be a permutation-stable subspace of k^m. Columns hold the
/// coordinates of `g·b_j`.
pub fn permutation_on_basis(permutation: &[usize], basis: &[Vec<i64>]) -> Result<Matrix, ReptoolsError> {
    let b = Matrix::from_i64_rows(&basis.iter().map(Vec::as_slice).collect::<Vec<_>>()).transpose();
    let moved: Vec<Vec<i64>> = basis
        .iter()
        .map(|v| {
            let mut w = vec![0; v.len()];
            for (x, &c) in v.iter().enumerate() {
                w[permutation[x]] = c;
            }
            w
        })
        .collect();
    let moved = Matrix::from_i64_rows(&moved.iter().map(Vec::as_slice).collect::<Vec<_>>()).transpose();
    // Coordinates c with B c = w, via the normal equations (BᵀB) c = Bᵀ w.
    let bt = b.transpose();
    let gram_inv = bt.mul(&b)?.inverse()?;
    let coords = gram_inv.mul(&bt)?.mul(&moved)?;
    if b.mul(&coords)? != moved {
        return Err(ReptoolsError::NotAnAction(
            "basis does not span a permutation-stable subspace".into(),
        ));
    }
    Ok(coords)
}
