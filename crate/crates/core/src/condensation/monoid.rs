use std::collections::BTreeSet;

use crate::semiring::HyperTable;

use super::{require_entire, CondensationError, Partition};

/// A finite monoid (or semigroup) on `0..size` given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidTable {
    size: usize,
    identity: Option<usize>,
    table: Vec<Vec<usize>>,
    inverses: Option<Vec<usize>>,
}

impl MonoidTable {
    /// Validates associativity and, when given, the identity; searches for
    /// two-sided inverses.
    pub fn new(table: Vec<Vec<usize>>, identity: Option<usize>) -> Result<MonoidTable, CondensationError> {
        let size = table.len();
        for row in &table {
            if row.len() != size {
                return Err(CondensationError::IndexOutOfRange {
                    index: row.len(),
                    len: size,
                });
            }
            if let Some(&bad) = row.iter().find(|&&c| c >= size) {
                return Err(CondensationError::IndexOutOfRange { index: bad, len: size });
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(CondensationError::QuotientNotAssociative(a, b, c));
                    }
                }
            }
        }
        if let Some(e) = identity {
            if e >= size || (0..size).any(|a| table[e][a] != a || table[a][e] != a) {
                return Err(CondensationError::IdentityLaw);
            }
        }
        let inverses = identity.and_then(|e| {
            (0..size)
                .map(|a| (0..size).find(|&b| table[a][b] == e && table[b][a] == e))
                .collect::<Option<Vec<usize>>>()
        });
        Ok(MonoidTable {
            size,
            identity,
            table,
            inverses,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_group(&self) -> bool {
        self.inverses.is_some()
    }

    pub fn inverses(&self) -> Option<&[usize]> {
        self.inverses.as_deref()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (0..a).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Order of `a` in a group; `None` for non-groups.
    pub fn element_order(&self, a: usize) -> Option<usize> {
        let e = self.identity?;
        self.inverses.as_ref()?;
        let mut x = a;
        let mut n = 1;
        while x != e {
            x = self.table[x][a];
            n += 1;
        }
        Some(n)
    }

    /// Least common multiple of element orders; `None` for non-groups.
    pub fn exponent(&self) -> Option<usize> {
        (0..self.size).try_fold(1, |acc, a| {
            let o = self.element_order(a)?;
            Some(num_integer::lcm(acc, o))
        })
    }

    /// Whether some bijection carries this table onto `other`'s.
    pub fn is_isomorphic(&self, other: &MonoidTable) -> bool {
        if self.size != other.size || self.identity.is_some() != other.identity.is_some() {
            return false;
        }
        let mut map = vec![usize::MAX; self.size];
        let mut used = vec![false; self.size];
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, other: &MonoidTable, next: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if next == self.size {
            return true;
        }
        for image in 0..self.size {
            if used[image] {
                continue;
            }
            if let (Some(e), Some(f)) = (self.identity, other.identity) {
                if (next == e) != (image == f) {
                    continue;
                }
            }
            map[next] = image;
            used[image] = true;
            let consistent = (0..=next).all(|a| {
                (0..=next).all(|b| {
                    let p = self.table[a][b];
                    p > next || other.table[map[a]][map[b]] == map[p]
                })
            });
            if consistent && self.extend_iso(other, next + 1, map, used) {
                return true;
            }
            used[image] = false;
        }
        map[next] = usize::MAX;
        false
    }
}

/// The product induced on ζ* classes. Well-definedness is checked over every
/// pair of representatives and every element of their product.
pub fn condensation_monoid(partition: &Partition, table: &HyperTable) -> Result<MonoidTable, CondensationError> {
    require_entire(table)?;
    let m = partition.len();
    let mut out = vec![vec![0; m]; m];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            let mut seen: Option<(usize, (usize, usize))> = None;
            for &x in partition.class(a) {
                for &y in partition.class(b) {
                    let ids: BTreeSet<usize> = table.entry(x, y).iter().map(|&z| partition.class_of(z)).collect();
                    if ids.len() > 1 {
                        return Err(CondensationError::NotWellDefined {
                            first: (x, y),
                            second: (x, y),
                        });
                    }
                    let id = *ids.iter().next().expect("entire table");
                    match seen {
                        None => seen = Some((id, (x, y))),
                        Some((prev, pair)) if prev != id => {
                            return Err(CondensationError::NotWellDefined {
                                first: pair,
                                second: (x, y),
                            })
                        }
                        Some(_) => {}
                    }
                }
            }
            *slot = seen.expect("classes are nonempty").0;
        }
    }
    MonoidTable::new(out, table.identity().map(|k| partition.class_of(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monoid(rows: &[&[usize]], identity: Option<usize>) -> MonoidTable {
        MonoidTable::new(rows.iter().map(|r| r.to_vec()).collect(), identity).unwrap()
    }

    #[test]
    fn groups_and_monoids() {
        let z2 = monoid(&[&[0, 1], &[1, 0]], Some(0));
        assert!(z2.is_group());
        assert_eq!(z2.exponent(), Some(2));
        let idem = monoid(&[&[0, 1], &[1, 1]], Some(0));
        assert!(!idem.is_group());
        assert_eq!(idem.exponent(), None);
        assert!(!z2.is_isomorphic(&idem));
        let idem_swapped = monoid(&[&[0, 0], &[0, 1]], Some(1));
        assert!(idem.is_isomorphic(&idem_swapped));
        let semigroup = monoid(&[&[0, 0], &[0, 0]], None);
        assert!(!semigroup.is_group());
    }

    #[test]
    fn rejects_bad_tables() {
        let bad = vec![vec![1, 0], vec![0, 0]];
        assert!(matches!(
            MonoidTable::new(bad, None),
            Err(CondensationError::QuotientNotAssociative(..))
        ));
        assert_eq!(
            MonoidTable::new(vec![vec![0, 0], vec![0, 0]], Some(0)),
            Err(CondensationError::IdentityLaw)
        );
    }

    #[test]
    fn klein_four_vs_cyclic() {
        let v4 = monoid(&[&[0, 1, 2, 3], &[1, 0, 3, 2], &[2, 3, 0, 1], &[3, 2, 1, 0]], Some(0));
        let z4 = monoid(&[&[0, 1, 2, 3], &[1, 2, 3, 0], &[2, 3, 0, 1], &[3, 0, 1, 2]], Some(0));
        assert_eq!(v4.exponent(), Some(2));
        assert_eq!(z4.exponent(), Some(4));
        assert!(!v4.is_isomorphic(&z4));
        assert!(v4.is_commutative());
    }
}
