//! Randomized invariants of the semiring, condensation, tower and
//! representation layers.
//!
//! Systems come from the group algebra of Z_n with atoms either the lines
//! k·g or the blocks span{g, g⁻¹}; products of such blocks are again unions
//! of blocks, so every draw is a valid atomistic system. Spanning vectors are
//! scaled randomly so canonicalization is exercised.

use std::collections::BTreeSet;

use focal::algebra::Algebra;
use focal::condensation::{
    beta_classes, check_strong_regularity, check_weak_reproducible, condense, zeta_classes, Flags, Partition,
    ProductFamily,
};
use focal::field::{FieldElement, Rational};
use focal::linalg::{Matrix, Subspace};
use focal::reptools::{conjugation_action, group_from_permutations, trivial_multiplicity};
use focal::semiring::{Atom, AtomSet, AtomSystem, HyperTable};
use focal::tower::{focal_subalgebra, focal_tower};
use proptest::prelude::*;

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn scaled_unit(n: usize, i: usize, c: i64) -> Vec<FieldElement> {
    (0..n).map(|j| FieldElement::from(if i == j { c } else { 0 })).collect()
}

/// `pair_up` merges g with g⁻¹; `scales` rescales the spanning vectors.
fn cyclic_system(n: usize, pair_up: bool, scales: &[i64]) -> AtomSystem {
    let alg = Algebra::monoid_algebra(&cyclic(n)).unwrap();
    let mut atoms = Vec::new();
    let mut seen = BTreeSet::new();
    for g in 0..n {
        if seen.contains(&g) {
            continue;
        }
        let inv = (n - g) % n;
        let block: Vec<usize> = if pair_up && inv != g { vec![g, inv] } else { vec![g] };
        let vectors: Vec<_> = block
            .iter()
            .enumerate()
            .map(|(k, &x)| scaled_unit(n, x, scales[(g + k) % scales.len()]))
            .collect();
        seen.extend(block.iter().copied());
        let name = block.iter().map(|x| format!("g{x}")).collect::<Vec<_>>().join("_");
        atoms.push(Atom::new(name, Subspace::canonicalize(&vectors, n).unwrap()));
    }
    AtomSystem::new(alg, atoms, None).unwrap()
}

fn system_strategy() -> impl Strategy<Value = AtomSystem> {
    (
        1usize..=7,
        any::<bool>(),
        prop::collection::vec((1i64..5).prop_flat_map(|m| prop_oneof![Just(m), Just(-m)]), 3),
    )
        .prop_map(|(n, pair, scales)| cyclic_system(n, pair, &scales))
}

/// Tables on up to 4 atoms with identity 0 and random nonempty entries
/// elsewhere.
fn table_strategy() -> impl Strategy<Value = HyperTable> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), n * n).prop_map(move |cells| {
            let entries: Vec<Vec<AtomSet>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| match (i, j) {
                            (0, j) => [j].into(),
                            (i, 0) => [i].into(),
                            _ => cells[i * n + j].clone(),
                        })
                        .collect()
                })
                .collect();
            let names = (0..n).map(|i| format!("a{i}")).collect();
            HyperTable::from_abstract(names, Some(0), entries).unwrap()
        })
    })
}

fn kappa_matches_zeta(table: &HyperTable) -> bool {
    let family = ProductFamily::new(table);
    let zeta = zeta_classes(&family, table.len());
    (0..table.len()).all(|x| {
        let (closure, _) = family.kappa_closure(&[x].into()).unwrap();
        &closure == zeta.class(zeta.class_of(x))
    })
}

fn union_over(table: &HyperTable, x: usize, focus: &AtomSet, left: bool) -> AtomSet {
    focus
        .iter()
        .flat_map(|&u| if left { table.entry(x, u) } else { table.entry(u, x) }.iter().copied())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn table_matches_subspace_products(sys in system_strategy()) {
        let t = sys.verify().unwrap();
        for i in 0..sys.len() {
            for j in 0..sys.len() {
                let direct = sys.algebra().product_span(&sys.atoms()[i].subspace, &sys.atoms()[j].subspace).unwrap();
                prop_assert_eq!(direct, sys.subspace_of(t.entry(i, j)).unwrap());
            }
        }
        let k = sys.identity();
        for j in 0..sys.len() {
            prop_assert_eq!(t.entry(k, j), &AtomSet::from([j]));
            prop_assert_eq!(t.entry(j, k), &AtomSet::from([j]));
        }
    }

    #[test]
    fn atom_in_sum_only_as_summand(sys in system_strategy(), mask in any::<u16>()) {
        let subset: AtomSet = (0..sys.len()).filter(|i| mask >> i & 1 == 1).collect();
        let s = sys.subspace_of(&subset).unwrap();
        for (i, a) in sys.atoms().iter().enumerate() {
            prop_assert_eq!(s.contains(&a.subspace).unwrap(), subset.contains(&i));
        }
        prop_assert_eq!(sys.atoms_in(&s).unwrap(), subset);
    }

    #[test]
    fn condensation_invariants_on_systems(sys in system_strategy()) {
        let t = sys.verify().unwrap();
        let family = ProductFamily::new(&t);
        let zeta = zeta_classes(&family, t.len());
        prop_assert_eq!(&beta_classes(&t).unwrap(), &zeta);
        prop_assert!(kappa_matches_zeta(&t));
        prop_assert_eq!(check_strong_regularity(&t, &zeta), None);
        let r = condense(&t).unwrap();
        let k = sys.identity();
        prop_assert_eq!(r.monoid.identity(), Some(zeta.class_of(k)));
        let focus = r.focus.clone().unwrap();
        if r.flags.weakly_reproducible {
            prop_assert!(r.monoid.is_group());
            prop_assert_eq!(family.m_of(k).unwrap(), focus.clone());
            for &x in &focus {
                prop_assert!(family.members().iter().any(|m| m.contains(&x) && m.contains(&k)));
            }
        }
        if r.flags.reproducible {
            for x in 0..t.len() {
                let class = zeta.class(zeta.class_of(x));
                prop_assert_eq!(&union_over(&t, x, &focus, true), class);
                prop_assert_eq!(&union_over(&t, x, &focus, false), class);
            }
        }
    }

    #[test]
    fn tower_invariants(sys in system_strategy()) {
        let tower = focal_tower(&sys, sys.len() + 1).unwrap();
        prop_assert!(tower.stabilized);
        prop_assert!(tower.levels.len() <= sys.len().max(1));
        for w in tower.levels.windows(2) {
            prop_assert!(w[1].atom_names.len() <= w[0].atom_names.len());
        }
        let t = sys.verify().unwrap();
        let r = condense(&t).unwrap();
        if r.flags.weakly_reproducible {
            let (f, restricted) = focal_subalgebra(&sys, &r).unwrap();
            prop_assert!(f.contains(&sys.algebra().product_span(&f, &f).unwrap()).unwrap());
            prop_assert!(f.contains_vector(sys.algebra().one()).unwrap());
            let rt = restricted.verify().unwrap();
            prop_assert_eq!(rt.len(), r.focus.as_ref().unwrap().len());
            prop_assert!(check_weak_reproducible(&rt).holds);
        }
    }

    #[test]
    fn abstract_table_relations(t in table_strategy()) {
        let family = ProductFamily::new(&t);
        let zeta = zeta_classes(&family, t.len());
        let beta = beta_classes(&t).unwrap();
        prop_assert!(beta.refines(&zeta));
        prop_assert!(kappa_matches_zeta(&t));
        prop_assert_eq!(check_strong_regularity(&t, &zeta), None);
        let flags = Flags::compute(&t);
        prop_assert!(flags.entire);
        if !flags.weakly_reproducible {
            prop_assert!(!flags.reproducible);
        }
        if let Ok(r) = condense(&t) {
            prop_assert_eq!(r.partition.len(), r.monoid.size());
            if flags.weakly_reproducible {
                prop_assert!(r.monoid.is_group());
            }
        }
    }

    #[test]
    fn conjugation_fixes_the_unit(entries in prop::collection::vec(-3i64..=3, 9)) {
        let g = Matrix::from_i64_rows(&[&entries[0..3], &entries[3..6], &entries[6..9]]);
        prop_assume!(g.inverse().is_ok());
        let s3 = group_from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let perm = |p: &[usize]| {
            let rows: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| i64::from(p[j] == i)).collect()).collect();
            Matrix::from_i64_rows(&rows.iter().map(Vec::as_slice).collect::<Vec<_>>())
        };
        let ginv = g.inverse().unwrap();
        let conj = |m: Matrix| g.mul(&m).unwrap().mul(&ginv).unwrap();
        let rep = s3.represent(&[conj(perm(&[1, 0, 2])), conj(perm(&[1, 2, 0]))]).unwrap();
        let action = conjugation_action(s3, Algebra::matrix_algebra(3), &rep).unwrap();
        // Permutation module = trivial + standard, so End has two invariants.
        prop_assert_eq!(trivial_multiplicity(&action).unwrap(), 2);
    }
}

#[test]
fn partitions_from_labels_are_canonical() {
    let p = Partition::from_labels(&[5, 3, 5, 3, 9]);
    let q = Partition::from_labels(&[0, 1, 0, 1, 2]);
    assert_eq!(p, q);
    assert_eq!(p.classes()[0], AtomSet::from([0, 2]));
}

#[test]
fn rational_scalars_round_trip_through_strings() {
    for s in ["0", "-7", "3/4", "-22/7"] {
        let r: Rational = s.parse().unwrap();
        assert_eq!(r.to_string(), s);
    }
}
