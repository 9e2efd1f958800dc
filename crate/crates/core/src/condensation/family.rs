use std::collections::HashMap;

use crate::semiring::{AtomSet, HyperTable};

use super::{set_product, CondensationError, Partition};

/// How a family member was first produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generation {
    Atom(usize),
    /// `members[left] ⊙ members[right]`.
    Product(usize, usize),
}

/// The least family of atom sets containing the singletons and closed under
/// `⊙`. Members are discovered in order of the number of atoms in their
/// generating product, so every recorded witness is as short as possible.
#[derive(Debug, Clone)]
pub struct ProductFamily {
    atom_count: usize,
    members: Vec<AtomSet>,
    generation: Vec<Generation>,
    length: Vec<usize>,
}

impl ProductFamily {
    pub fn new(table: &HyperTable) -> ProductFamily {
        let n = table.len();
        let mut members: Vec<AtomSet> = (0..n).map(|i| AtomSet::from([i])).collect();
        let mut index: HashMap<AtomSet, usize> = members.iter().cloned().zip(0..).collect();
        let mut generation: Vec<Generation> = (0..n).map(Generation::Atom).collect();
        let mut length = vec![1; n];
        let mut by_length: Vec<Vec<usize>> = vec![Vec::new(), (0..n).collect()];
        let mut longest = 1;
        let mut len = 2;
        // A new member of length L splits as p + (L - p) with both parts at
        // most `longest`, so nothing new can appear beyond 2 * longest.
        while len <= 2 * longest {
            let mut found = Vec::new();
            for p in 1..len {
                let q = len - p;
                if p > longest || q > longest {
                    continue;
                }
                for &a in &by_length[p] {
                    for &b in &by_length[q] {
                        let s = set_product(table, &members[a], &members[b]);
                        if s.is_empty() || index.contains_key(&s) {
                            continue;
                        }
                        index.insert(s.clone(), members.len());
                        found.push(members.len());
                        members.push(s);
                        generation.push(Generation::Product(a, b));
                        length.push(len);
                    }
                }
            }
            if !found.is_empty() {
                longest = len;
            }
            by_length.push(found);
            len += 1;
        }
        ProductFamily {
            atom_count: n,
            members,
            generation,
            length,
        }
    }

    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    pub fn members(&self) -> &[AtomSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, set: &AtomSet) -> Option<usize> {
        self.members.iter().position(|m| m == set)
    }

    pub fn generation(&self, member: usize) -> Generation {
        self.generation[member]
    }

    /// Atoms of the generating product of a member, read left to right.
    pub fn witness(&self, member: usize) -> Vec<usize> {
        match self.generation[member] {
            Generation::Atom(i) => vec![i],
            Generation::Product(a, b) => {
                let mut out = self.witness(a);
                out.extend(self.witness(b));
                out
            }
        }
    }

    /// The generating product with explicit brackets, e.g. `((V V) V)`.
    pub fn bracketed(&self, member: usize, names: &[String]) -> String {
        match self.generation[member] {
            Generation::Atom(i) => names[i].clone(),
            Generation::Product(a, b) => format!("({} {})", self.bracketed(a, names), self.bracketed(b, names)),
        }
    }

    /// Number of atoms in the generating product of a member.
    pub fn witness_len(&self, member: usize) -> usize {
        self.length[member]
    }

    /// Union of all members containing `z`.
    pub fn m_of(&self, z: usize) -> Result<AtomSet, CondensationError> {
        self.check_index(z)?;
        Ok(self
            .members
            .iter()
            .filter(|m| m.contains(&z))
            .flat_map(|m| m.iter().copied())
            .collect())
    }

    fn check_index(&self, i: usize) -> Result<(), CondensationError> {
        if i >= self.atom_count {
            return Err(CondensationError::IndexOutOfRange {
                index: i,
                len: self.atom_count,
            });
        }
        Ok(())
    }

    /// Iterates `κ₁ = E`, `κₙ₊₁ = atoms sharing a member with κₙ`. Returns the
    /// fixpoint and the least `n` with `κₙ = κₙ₊₁`.
    pub fn kappa_closure(&self, seed: &AtomSet) -> Result<(AtomSet, usize), CondensationError> {
        if seed.is_empty() {
            return Err(CondensationError::EmptySeed);
        }
        for &i in seed {
            self.check_index(i)?;
        }
        let mut current = seed.clone();
        for step in 1..=self.atom_count {
            let next: AtomSet = self
                .members
                .iter()
                .filter(|m| !m.is_disjoint(&current))
                .flat_map(|m| m.iter().copied())
                .collect();
            if next == current {
                return Ok((current, step));
            }
            current = next;
        }
        Err(CondensationError::KappaDidNotStabilize(self.atom_count))
    }
}

/// ζ*: union-find over co-membership in family members.
pub fn zeta_classes(family: &ProductFamily, atom_count: usize) -> Partition {
    let mut parent: Vec<usize> = (0..atom_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for member in family.members() {
        let mut it = member.iter();
        let Some(&first) = it.next() else { continue };
        for &other in it {
            let (a, b) = (find(&mut parent, first), find(&mut parent, other));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let labels: Vec<usize> = (0..atom_count).map(|i| find(&mut parent, i)).collect();
    Partition::from_labels(&labels)
}

/// β: result sets of all bracketed products, closed by naive saturation
/// from both sides, followed by the transitive closure of co-membership.
/// Computed independently of [`ProductFamily`].
pub fn beta_classes(table: &HyperTable) -> Result<Partition, CondensationError> {
    super::require_entire(table)?;
    let n = table.len();
    let mut sets: Vec<AtomSet> = (0..n).map(|i| AtomSet::from([i])).collect();
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = sets.clone();
        for a in &snapshot {
            for b in &snapshot {
                for s in [set_product(table, a, b), set_product(table, b, a)] {
                    if !sets.contains(&s) {
                        sets.push(s);
                        changed = true;
                    }
                }
            }
        }
    }
    let mut related = vec![vec![false; n]; n];
    for s in &sets {
        for &x in s {
            for &y in s {
                related[x][y] = true;
            }
        }
    }
    // Warshall closure.
    for k in 0..n {
        for i in 0..n {
            if related[i][k] {
                let row_k = related[k].clone();
                for (cell, via) in related[i].iter_mut().zip(row_k) {
                    *cell |= via;
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| related[i][j]).unwrap_or(i)).collect();
    Ok(Partition::from_labels(&labels))
}
