//! Acceptance suite: thirteen criteria, one PASS/FAIL line each, each under
//! its own time budget. Runs without the libtest harness so the lines are
//! always printed; the process fails if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use focal::algebra::{validate_monoid_table, Algebra};
use focal::condensation::{
    check_associative, check_strong_regularity, check_weak_reproducible, condense, set_product, zeta_classes,
    MonoidTable, Partition, ProductFamily,
};
use focal::field::{FieldDescriptor, FieldElement};
use focal::linalg::Subspace;
use focal::reptools::a4::{a4_checks, fragment_table};
use focal::reptools::corpus::{self, CorpusItem};
use focal::reptools::{one_sided_ideal_check, trivial_multiplicity};
use focal::semiring::{Atom, AtomSet, AtomSystem, HyperTable};
use focal::tower::{check_corollary_max, focal_subalgebra, focal_tower, witness_product};

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn fe(xs: &[i64]) -> Vec<FieldElement> {
    xs.iter().map(|&x| FieldElement::from(x)).collect()
}

fn corpus_items() -> Result<Vec<CorpusItem>, String> {
    corpus::resolve("all").map_err(err)
}

fn corpus_tables() -> Result<Vec<(String, HyperTable)>, String> {
    let mut out = Vec::new();
    for item in corpus_items()? {
        if let Some(t) = item.table().map_err(err)? {
            out.push((item.name.clone(), t));
        }
    }
    Ok(out)
}

fn corpus_systems() -> Result<Vec<CorpusItem>, String> {
    Ok(corpus_items()?.into_iter().filter(|i| i.system().is_some()).collect())
}

fn names(t: &HyperTable, s: &AtomSet) -> String {
    format!("{{{}}}", t.names_of(s).join(", "))
}

/// Criterion 1.
fn s3_tower() -> Check {
    let item = corpus::s3_standard().map_err(err)?;
    let tower = focal_tower(item.system().unwrap(), 16).map_err(err)?;
    let sizes: Vec<usize> = tower.levels.iter().map(|l| l.monoid.size()).collect();
    let dims: Vec<usize> = tower.levels.iter().map(|l| l.focal_dim()).collect();
    ensure(sizes == [2, 2, 1], || format!("|Q^n| = {sizes:?}"))?;
    ensure(dims == [2, 1, 1], || format!("dim F^n = {dims:?}"))?;
    ensure(tower.levels.iter().all(|l| l.monoid.is_group()), || {
        "a level is not a group".into()
    })?;
    ensure(tower.stabilized, || "not stabilized".into())?;
    Ok(format!("|Q^n| = {sizes:?}, dim F^n = {dims:?}, stabilized"))
}

/// Criterion 2, built here from the polynomial rather than taken from the corpus.
fn quotient_quartet() -> Check {
    let mut seen = Vec::new();
    let cases: [(&[i64], &[&str]); 4] = [
        (&[0, 0, 1], &[]),
        (&[-1, 0, 1], &["k"]),
        (&[0, -1, 1], &["X"]),
        (&[-1, 0, 0, 1], &["k", "X"]),
    ];
    for (coeffs, expected) in cases {
        let d = coeffs.len() - 1;
        let alg = Algebra::poly_quotient(FieldDescriptor::Rational, &fe(coeffs)).map_err(err)?;
        let unit = |i: usize| {
            (0..d)
                .map(|j| FieldElement::from(i64::from(i == j)))
                .collect::<Vec<_>>()
        };
        let x = Subspace::canonicalize(&(1..d).map(unit).collect::<Vec<_>>(), d).map_err(err)?;
        let sys = AtomSystem::new(
            alg,
            vec![Atom::new("k", Subspace::line(unit(0))), Atom::new("X", x)],
            None,
        )
        .map_err(err)?;
        let t = sys.verify().map_err(err)?;
        let got = t.names_of(t.entry(1, 1));
        ensure(got == expected, || {
            format!("deg {d} coefficients {coeffs:?}: X∘X = {got:?}")
        })?;
        seen.push(names(&t, t.entry(1, 1)));
    }
    Ok(format!("X∘X = {}", seen.join(" / ")))
}

/// Criterion 3.
fn trace_zero() -> Check {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let alg = Algebra::matrix_algebra(n);
        let d = n * n;
        let e = |i: usize, j: usize| {
            (0..d)
                .map(|k| FieldElement::from(i64::from(k == i * n + j)))
                .collect::<Vec<_>>()
        };
        let mut xs: Vec<Vec<FieldElement>> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    xs.push(e(i, j));
                }
            }
        }
        for i in 1..n {
            let diff: Vec<FieldElement> = e(0, 0).iter().zip(e(i, i)).map(|(a, b)| a - &b).collect();
            xs.push(diff);
        }
        let x = Subspace::canonicalize(&xs, d).map_err(err)?;
        let k = Subspace::line(alg.one().to_vec());
        let sys = AtomSystem::new(alg, vec![Atom::new("k", k), Atom::new("X", x)], None).map_err(err)?;
        let t = sys.verify().map_err(err)?;
        ensure(t.names_of(t.entry(1, 1)) == ["k", "X"], || {
            format!("n = {n}: X∘X = {}", names(&t, t.entry(1, 1)))
        })?;
        out.push(format!("n={n}: X∘X = {}", names(&t, t.entry(1, 1))));
    }
    Ok(out.join(", "))
}

/// Criterion 4.
fn galois() -> Check {
    let item = corpus::galois_biquadratic().map_err(err)?;
    let t = item.system().unwrap().verify().map_err(err)?;
    let r = condense(&t).map_err(err)?;
    let m = &r.monoid;
    ensure(m.size() == 4 && m.is_group() && m.exponent() == Some(2), || {
        format!(
            "|Q| = {}, group {}, exponent {:?}",
            m.size(),
            m.is_group(),
            m.exponent()
        )
    })?;
    let klein = MonoidTable::new(
        vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]],
        Some(0),
    )
    .map_err(err)?;
    ensure(m.is_isomorphic(&klein), || "not isomorphic to Z2 × Z2".into())?;
    Ok("|Q| = 4, exponent 2, ≅ Z2 × Z2".into())
}

/// Criterion 5. The systems are rebuilt from the monoid tables and the map
/// x ↦ class(k e_x) is checked entry by entry.
fn monoid_realization() -> Check {
    let list = corpus::monoid_list();
    let non_groups = list.iter().filter(|m| !m.is_group).count();
    ensure(list.len() >= 10 && non_groups > 0, || {
        format!("{} monoids, {non_groups} non-groups", list.len())
    })?;
    for m in &list {
        let n = m.table.len();
        ensure(n <= 5, || format!("{} has {n} elements", m.name))?;
        let unit = validate_monoid_table(&m.table)?;
        let alg = Algebra::monoid_algebra(&m.table).map_err(err)?;
        let atoms = (0..n)
            .map(|x| Atom::new(m.elements[x].clone(), Subspace::line(alg.basis_vector(x))))
            .collect();
        let sys = AtomSystem::new(alg, atoms, Some(unit)).map_err(err)?;
        let r = condense(&sys.verify().map_err(err)?).map_err(err)?;
        let class: Vec<usize> = (0..n).map(|x| r.partition.class_of(x)).collect();
        let bijective = class.iter().collect::<BTreeSet<_>>().len() == n && r.monoid.size() == n;
        let preserves = (0..n).all(|x| (0..n).all(|y| class[m.table[x][y]] == r.monoid.mul(class[x], class[y])));
        ensure(bijective && preserves, || {
            format!("{}: bijective {bijective}, homomorphic {preserves}", m.name)
        })?;
    }
    Ok(format!("{} monoids ({non_groups} non-groups) realized", list.len()))
}

/// Criterion 6.
fn a4() -> Check {
    let verdicts = a4_checks().map_err(err)?;
    let labels: Vec<&str> = verdicts.iter().map(|v| v.label.as_str()).collect();
    ensure(labels == ["a", "b", "c", "d", "e", "f", "g"], || {
        format!("labels {labels:?}")
    })?;
    if let Some(v) = verdicts.iter().find(|v| !v.pass) {
        return Err(format!("({}) {}: {}", v.label, v.claim, v.detail));
    }
    let t = fragment_table().map_err(err)?;
    let w = check_associative(&t).map_err(err)?;
    let idx = |n: &str| t.index_of(n).unwrap();
    ensure(w == Some((idx("P"), idx("P2"), idx("X"))), || {
        format!("associativity witness {w:?}")
    })?;
    Ok("(a)-(g) pass; fragment fails associativity at (P, P2, X)".into())
}

/// Criterion 7.
fn kappa() -> Check {
    let tables = corpus_tables()?;
    let mut atoms = 0;
    for (name, t) in &tables {
        let family = ProductFamily::new(t);
        let zeta = zeta_classes(&family, t.len());
        for x in 0..t.len() {
            let (closure, _) = family.kappa_closure(&[x].into()).map_err(err)?;
            let class = zeta.class(zeta.class_of(x));
            ensure(&closure == class, || {
                format!(
                    "{name}: κ({}) = {} but ζ* class is {}",
                    t.name(x),
                    names(t, &closure),
                    names(t, class)
                )
            })?;
            atoms += 1;
        }
    }
    Ok(format!("{} tables, {atoms} atoms", tables.len()))
}

/// Criterion 8.
fn strong_regularity() -> Check {
    let tables = corpus_tables()?;
    for (name, t) in &tables {
        let zeta = zeta_classes(&ProductFamily::new(t), t.len());
        if let Some((x, x2, w)) = check_strong_regularity(t, &zeta) {
            return Err(format!("{name}: {} ~ {} split by {}", t.name(x), t.name(x2), t.name(w)));
        }
    }
    Ok(format!("{} tables", tables.len()))
}

fn fold(t: &HyperTable, word: &[usize]) -> AtomSet {
    let mut acc: AtomSet = [word[0]].into();
    for &x in &word[1..] {
        acc = set_product(t, &acc, &[x].into());
    }
    acc
}

/// Criterion 9.
fn witness() -> Check {
    let mut checked = 0;
    for item in corpus_systems()? {
        let sys = item.system().unwrap();
        let t = sys.verify().map_err(err)?;
        if !check_weak_reproducible(&t).holds {
            continue;
        }
        let r = condense(&t).map_err(err)?;
        let focus = r.focus.clone().unwrap();
        let k = sys.identity();
        for &x in &focus {
            ensure(
                r.family.members().iter().any(|m| m.contains(&x) && m.contains(&k)),
                || format!("{}: {} never shares a product with k", item.name, t.name(x)),
            )?;
        }
        let word = witness_product(&r, &r.family).ok_or_else(|| format!("{}: no witness product", item.name))?;
        ensure(fold(&t, &word) == focus, || {
            format!("{}: witness {word:?} does not multiply to the focus", item.name)
        })?;
        // The same product over subspaces must give the focal subalgebra.
        let mut s = sys.atoms()[word[0]].subspace.clone();
        for &x in &word[1..] {
            s = sys.algebra().product_span(&s, &sys.atoms()[x].subspace).map_err(err)?;
        }
        ensure(s == sys.subspace_of(&focus).map_err(err)?, || {
            format!("{}: subspace product differs", item.name)
        })?;
        checked += 1;
    }
    ensure(checked > 0, || "no weakly reproducible systems".into())?;
    Ok(format!("{checked} weakly reproducible systems"))
}

/// Criterion 10.
fn replaw() -> Check {
    let mut checked = 0;
    for (name, t) in corpus_tables()? {
        let Ok(r) = condense(&t) else { continue };
        if !r.flags.reproducible {
            continue;
        }
        let focus = r.focus.clone().unwrap();
        for x in 0..t.len() {
            let (c, _) = r.family.kappa_closure(&[x].into()).map_err(err)?;
            let left = set_product(&t, &focus, &[x].into());
            let right = set_product(&t, &[x].into(), &focus);
            ensure(c == left && c == right, || {
                format!(
                    "{name}: C({}) = {}, ϖ∘X = {}, X∘ϖ = {}",
                    t.name(x),
                    names(&t, &c),
                    names(&t, &left),
                    names(&t, &right)
                )
            })?;
        }
        checked += 1;
    }
    ensure(checked > 0, || "no reproducible tables".into())?;
    Ok(format!("{checked} reproducible tables"))
}

/// Criterion 11.
fn trivone() -> Check {
    let mut checked = Vec::new();
    for item in corpus_systems()? {
        let Some(action) = item.action() else { continue };
        if trivial_multiplicity(action).map_err(err)? != 1 {
            continue;
        }
        let sys = item.system().unwrap();
        let no_ideal = one_sided_ideal_check(sys).map_err(err)?.is_none();
        let weak = check_weak_reproducible(&sys.verify().map_err(err)?).holds;
        ensure(no_ideal == weak, || {
            format!("{}: ideal check {no_ideal}, weak reproducibility {weak}", item.name)
        })?;
        checked.push(item.name.clone());
    }
    ensure(!checked.is_empty(), || "no systems with trivial multiplicity 1".into())?;
    Ok(format!("{} systems: {}", checked.len(), checked.join(", ")))
}

/// Criterion 12.
fn focal_subalgebra_laws() -> Check {
    let mut levels = 0;
    for item in corpus_systems()? {
        let mut sys = item.system().unwrap().clone();
        for _ in 0..=sys.len() {
            let t = sys.verify().map_err(err)?;
            let Ok(r) = condense(&t) else { break };
            ensure(check_corollary_max(&r, &sys).map_err(err)?, || {
                format!("{}: |Q| = 1 does not match F = top", item.name)
            })?;
            levels += 1;
            if !r.flags.weakly_reproducible {
                break;
            }
            let focus = r.focus.clone().unwrap();
            let (f, restricted) = focal_subalgebra(&sys, &r).map_err(err)?;
            let alg = sys.algebra();
            ensure(
                f.contains(&alg.product_span(&f, &f).map_err(err)?).map_err(err)?,
                || "F·F ⊄ F".into(),
            )?;
            ensure(f.contains_vector(alg.one()).map_err(err)?, || "1 ∉ F".into())?;
            let rt = restricted.verify().map_err(err)?;
            let focus_names: Vec<String> = t.names_of(&focus);
            ensure(rt.names() == focus_names.as_slice(), || {
                format!("{}: restricted atoms differ from focus", item.name)
            })?;
            ensure(check_weak_reproducible(&rt).holds, || {
                format!("{}: restriction not weakly reproducible", item.name)
            })?;
            if focus.len() == sys.len() {
                break;
            }
            sys = restricted;
        }
    }
    Ok(format!("{levels} tower levels"))
}

/// Criterion 13. Left-associated subspace products of all atom words up to
/// length 6, deduplicated by prefix subspace.
fn zeta_realization() -> Check {
    const MAX_LEN: usize = 6;
    let mut total = 0;
    for item in corpus_systems()? {
        let sys = item.system().unwrap();
        let t = sys.verify().map_err(err)?;
        let family = ProductFamily::new(&t);
        let members: BTreeSet<&AtomSet> = family.members().iter().collect();
        let mut reached: BTreeMap<AtomSet, Subspace> = BTreeMap::new();
        let mut frontier: Vec<Subspace> = sys.atoms().iter().map(|a| a.subspace.clone()).collect();
        let mut seen: BTreeSet<Vec<String>> = BTreeSet::new();
        for len in 1..=MAX_LEN {
            let mut next = Vec::new();
            for s in &frontier {
                let set = sys.atoms_in(s).map_err(err)?;
                if sys.subspace_of(&set).map_err(err)? != *s {
                    return Err(format!("{}: a product is not a sum of atoms", item.name));
                }
                reached.entry(set).or_insert_with(|| s.clone());
                if len == MAX_LEN || s.is_zero() {
                    continue;
                }
                for a in sys.atoms() {
                    let p = sys.algebra().product_span(s, &a.subspace).map_err(err)?;
                    let key = p.basis_vectors().map(|v| format!("{v:?}")).collect();
                    if seen.insert(key) {
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        let nonempty: Vec<&AtomSet> = reached.keys().filter(|s| !s.is_empty()).collect();
        for s in &nonempty {
            ensure(members.contains(s), || {
                format!("{}: product {} missing from the family", item.name, names(&t, s))
            })?;
        }
        let mut labels: Vec<usize> = (0..t.len()).collect();
        fn find(l: &mut [usize], x: usize) -> usize {
            if l[x] != x {
                let r = find(l, l[x]);
                l[x] = r;
            }
            l[x]
        }
        for s in &nonempty {
            let first = *s.iter().next().unwrap();
            for &y in s.iter() {
                let (a, b) = (find(&mut labels, first), find(&mut labels, y));
                labels[a] = b;
            }
        }
        let roots: Vec<usize> = (0..t.len()).map(|x| find(&mut labels, x)).collect();
        let induced = Partition::from_labels(&roots);
        let zeta = zeta_classes(&family, t.len());
        ensure(induced == zeta, || {
            format!(
                "{}: induced {:?} vs ζ* {:?}",
                item.name,
                induced.classes(),
                zeta.classes()
            )
        })?;
        total += nonempty.len();
    }
    Ok(format!(
        "{total} distinct products, all in the family, partitions agree"
    ))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("S3 focal tower", 1, s3_tower),
        ("quotient-algebra quartet", 1, quotient_quartet),
        ("trace-zero squares", 1, trace_zero),
        ("Galois biquadratic group", 1, galois),
        ("monoid realization", 5, monoid_realization),
        ("A4 scripted checks", 2, a4),
        ("κ closure equals ζ* class", 5, kappa),
        ("ζ* strongly regular", 5, strong_regularity),
        ("focus witness product", 5, witness),
        ("reproductive-law closure", 5, replaw),
        ("invariant ideals vs weak reproducibility", 5, trivone),
        ("focal subalgebra laws, |Q| = 1 iff F is top", 5, focal_subalgebra_laws),
        ("ζ realized by subspace products", 10, zeta_realization),
    ];
    let suite = Instant::now();
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {budget}s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {:>2} {status} {name} ({:.3}s): {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    let total = suite.elapsed();
    println!(
        "acceptance: {} of 13 passed in {:.2}s",
        13 - failures,
        total.as_secs_f64()
    );
    if failures > 0 || total > Duration::from_secs(60) {
        std::process::exit(1);
    }
}
