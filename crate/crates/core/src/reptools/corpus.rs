//! Named worked examples, each with the results it is expected to produce.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::condensation::{associativity_failures, condense, CondensationReport, Flags};
use crate::field::{FieldDescriptor, FieldElement};
use crate::linalg::{Matrix, Subspace};
use crate::semiring::{Atom, AtomSystem, HyperTable};
use crate::tower::{focal_tower, witness_product, FocalTower};

use super::a4::{self, a4_checks, a4_structure_checks};
use super::{
    conjugation_action, group_from_permutations, multiplicity_free_atoms, permutation_on_basis, trivial_multiplicity,
    ActionOnAlgebra, CharacterRow, FiniteGroup, ReptoolsError,
};

/// Tower depth used when evaluating corpus expectations.
pub const CORPUS_MAX_DEPTH: usize = 16;

#[derive(Debug, Clone)]
pub enum CorpusInput {
    /// A verified-on-demand atom system, optionally with a group action.
    System {
        system: AtomSystem,
        action: Option<ActionOnAlgebra>,
    },
    /// A hyperproduct table with no underlying independent atom system.
    Abstract(HyperTable),
    /// Scripted subspace checks with no table of their own.
    Scripted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expectation {
    Entry {
        left: String,
        right: String,
        atoms: Vec<String>,
    },
    Entire(bool),
    Associative(bool),
    WeaklyReproducible(bool),
    Reproducible(bool),
    Classes(Vec<Vec<String>>),
    Focus(Vec<String>),
    QuotientSize(usize),
    IsGroup(bool),
    GroupExponent(usize),
    /// `x ↦ class(k e_x)` is a bijective homomorphism from this monoid table.
    RealizesMonoid(Vec<Vec<usize>>),
    AssociativityFailure(String, String, String),
    TowerSizes(Vec<usize>),
    TowerFocalDims(Vec<usize>),
    TowerStabilized(bool),
    TrivialMultiplicity(usize),
    WitnessProduct(Vec<String>),
}

impl Expectation {
    pub fn describe(&self) -> String {
        match self {
            Expectation::Entry { left, right, .. } => format!("entry({left}, {right})"),
            Expectation::Entire(_) => "entire".into(),
            Expectation::Associative(_) => "associative".into(),
            Expectation::WeaklyReproducible(_) => "weakly reproducible".into(),
            Expectation::Reproducible(_) => "reproducible".into(),
            Expectation::Classes(_) => "zeta* classes".into(),
            Expectation::Focus(_) => "focus".into(),
            Expectation::QuotientSize(_) => "quotient size".into(),
            Expectation::IsGroup(_) => "quotient is a group".into(),
            Expectation::GroupExponent(_) => "group exponent".into(),
            Expectation::RealizesMonoid(_) => "quotient realizes the monoid".into(),
            Expectation::AssociativityFailure(x, y, z) => format!("associativity fails at ({x}, {y}, {z})"),
            Expectation::TowerSizes(_) => "tower quotient sizes".into(),
            Expectation::TowerFocalDims(_) => "tower focal dimensions".into(),
            Expectation::TowerStabilized(_) => "tower stabilized".into(),
            Expectation::TrivialMultiplicity(_) => "trivial multiplicity".into(),
            Expectation::WitnessProduct(_) => "witness product".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub name: String,
    pub description: String,
    pub input: CorpusInput,
    pub expectations: Vec<Expectation>,
}

impl CorpusItem {
    pub fn system(&self) -> Option<&AtomSystem> {
        match &self.input {
            CorpusInput::System { system, .. } => Some(system),
            _ => None,
        }
    }

    pub fn action(&self) -> Option<&ActionOnAlgebra> {
        match &self.input {
            CorpusInput::System { action, .. } => action.as_ref(),
            _ => None,
        }
    }

    /// The hyperproduct table, verifying the atom system if there is one.
    pub fn table(&self) -> Result<Option<HyperTable>, ReptoolsError> {
        Ok(match &self.input {
            CorpusInput::System { system, .. } => Some(system.verify()?),
            CorpusInput::Abstract(t) => Some(t.clone()),
            CorpusInput::Scripted => None,
        })
    }
}

/// One checked expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn fe(xs: &[i64]) -> Vec<FieldElement> {
    xs.iter().map(|&x| FieldElement::from(x)).collect()
}

fn entry(left: &str, right: &str, atoms: &[&str]) -> Expectation {
    Expectation::Entry {
        left: left.into(),
        right: right.into(),
        atoms: names(atoms),
    }
}

fn line(a: &Algebra, i: usize) -> Subspace {
    Subspace::line(a.basis_vector(i))
}

/// The group of order 2 acting on a 2-dimensional algebra by `e1 ↦ -e1`.
fn sign_action_z2(algebra: Algebra) -> Result<ActionOnAlgebra, ReptoolsError> {
    let g = group_from_permutations(&[vec![1, 0]])?;
    let m = g.represent(&[Matrix::from_i64_rows(&[&[1, 0], &[0, -1]])])?;
    ActionOnAlgebra::new(g, algebra, m)
}

/// Z2 × Z2 acting on a 4-dimensional algebra indexed by bit pairs, the
/// generators negating coordinates whose first (second) bit is set.
fn sign_action_klein(algebra: Algebra) -> Result<ActionOnAlgebra, ReptoolsError> {
    let g = group_from_permutations(&[vec![1, 0, 2, 3], vec![0, 1, 3, 2]])?;
    let diag = |bit: usize| {
        let rows: Vec<Vec<i64>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i != j {
                            0
                        } else if (i >> bit) & 1 == 1 {
                            -1
                        } else {
                            1
                        }
                    })
                    .collect()
            })
            .collect();
        Matrix::from_i64_rows(&rows.iter().map(Vec::as_slice).collect::<Vec<_>>())
    };
    let m = g.represent(&[diag(0), diag(1)])?;
    ActionOnAlgebra::new(g, algebra, m)
}

/// S3 as permutations of three points: `(0 1)` and `(0 1 2)`.
pub fn s3_group() -> Result<FiniteGroup, ReptoolsError> {
    group_from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]])
}

/// The standard representation on the plane `x + y + z = 0`, in the basis
/// `(1, -1, 0), (0, 1, -1)`.
pub fn s3_standard_rep(group: &FiniteGroup) -> Result<Vec<Matrix>, ReptoolsError> {
    let plane = [vec![1, -1, 0], vec![0, 1, -1]];
    group
        .elements()
        .iter()
        .map(|p| permutation_on_basis(p, &plane))
        .collect()
}

/// Trivial, sign and standard characters, by element.
pub fn s3_characters(group: &FiniteGroup) -> Result<Vec<CharacterRow>, ReptoolsError> {
    let fixed = |p: &Vec<usize>| p.iter().enumerate().filter(|(i, &x)| *i == x).count() as i64;
    let row = |name: &str, f: &dyn Fn(&Vec<usize>) -> i64| {
        CharacterRow::new(
            name,
            group.elements().iter().map(|p| FieldElement::from(f(p))).collect(),
        )
    };
    Ok(vec![
        row("C", &|_| 1)?,
        row("sigma", &|p| if fixed(p) == 1 { -1 } else { 1 })?,
        row("V", &|p| fixed(p) - 1)?,
    ])
}

pub fn s3_standard_action() -> Result<ActionOnAlgebra, ReptoolsError> {
    let g = s3_group()?;
    let rep = s3_standard_rep(&g)?;
    conjugation_action(g, Algebra::matrix_algebra(2), &rep)
}

/// A4 acting on `M3(Q)` by conjugation through the rational form of `W`.
fn a4_rational_action() -> Result<ActionOnAlgebra, ReptoolsError> {
    let g = group_from_permutations(&a4::a4_generators())?;
    let rep = g
        .elements()
        .iter()
        .map(|p| permutation_on_basis(p, &a4::w_basis()))
        .collect::<Result<Vec<_>, _>>()?;
    conjugation_action(g, Algebra::matrix_algebra(3), &rep)
}

fn system(algebra: Algebra, atoms: Vec<(&str, Subspace)>) -> Result<AtomSystem, ReptoolsError> {
    let atoms = atoms.into_iter().map(|(n, s)| Atom::new(n, s)).collect();
    Ok(AtomSystem::new(algebra, atoms, None)?)
}

fn quotient(
    name: &str,
    coeffs: &[i64],
    action: bool,
    mut expectations: Vec<Expectation>,
) -> Result<CorpusItem, ReptoolsError> {
    let a = Algebra::poly_quotient(FieldDescriptor::Rational, &fe(coeffs))?;
    let x = line(&a, 1);
    let sys = system(a.clone(), vec![("k", a.unit_line()), ("X", x)])?;
    let action = if action { Some(sign_action_z2(a)?) } else { None };
    if action.is_some() {
        expectations.push(Expectation::TrivialMultiplicity(1));
    }
    Ok(CorpusItem {
        name: name.into(),
        description: format!("k[t]/(f) with f coefficients {coeffs:?} (constant term first), atoms k and k·t"),
        input: CorpusInput::System { system: sys, action },
        expectations,
    })
}

pub fn trivial() -> Result<CorpusItem, ReptoolsError> {
    let a = Algebra::matrix_algebra(1);
    let sys = system(a.clone(), vec![("k", a.unit_line())])?;
    Ok(CorpusItem {
        name: "trivial".into(),
        description: "the one-dimensional algebra k with its single atom".into(),
        input: CorpusInput::System {
            system: sys,
            action: Some(ActionOnAlgebra::trivial(a)),
        },
        expectations: vec![
            Expectation::Entire(true),
            Expectation::Associative(true),
            Expectation::WeaklyReproducible(true),
            Expectation::Reproducible(true),
            Expectation::Classes(vec![names(&["k"])]),
            Expectation::Focus(names(&["k"])),
            Expectation::QuotientSize(1),
            Expectation::IsGroup(true),
            Expectation::TowerSizes(vec![1]),
            Expectation::TowerFocalDims(vec![1]),
            Expectation::TowerStabilized(true),
            Expectation::TrivialMultiplicity(1),
            Expectation::WitnessProduct(names(&["k"])),
        ],
    })
}

pub fn quotient_t2() -> Result<CorpusItem, ReptoolsError> {
    quotient(
        "quotient_t2",
        &[0, 0, 1],
        true,
        vec![
            entry("X", "X", &[]),
            Expectation::Entire(false),
            Expectation::WeaklyReproducible(false),
        ],
    )
}

pub fn quotient_t2_minus_1() -> Result<CorpusItem, ReptoolsError> {
    quotient(
        "quotient_t2_minus_1",
        &[-1, 0, 1],
        true,
        vec![
            entry("X", "X", &["k"]),
            Expectation::Entire(true),
            Expectation::WeaklyReproducible(true),
            Expectation::Reproducible(true),
            Expectation::Focus(names(&["k"])),
            Expectation::QuotientSize(2),
            Expectation::IsGroup(true),
            Expectation::GroupExponent(2),
            Expectation::TowerSizes(vec![2, 1]),
            Expectation::TowerFocalDims(vec![1, 1]),
            Expectation::TowerStabilized(true),
        ],
    )
}

pub fn quotient_t2_minus_t() -> Result<CorpusItem, ReptoolsError> {
    quotient(
        "quotient_t2_minus_t",
        &[0, -1, 1],
        false,
        vec![
            entry("X", "X", &["X"]),
            Expectation::Entire(true),
            Expectation::WeaklyReproducible(false),
            Expectation::Reproducible(false),
            Expectation::Focus(names(&["k"])),
            Expectation::QuotientSize(2),
            Expectation::IsGroup(false),
            Expectation::RealizesMonoid(vec![vec![0, 1], vec![1, 1]]),
        ],
    )
}

pub fn t3_minus_1() -> Result<CorpusItem, ReptoolsError> {
    let a = Algebra::poly_quotient(FieldDescriptor::Rational, &fe(&[-1, 0, 0, 1]))?;
    let x = line(&a, 1).sum(&line(&a, 2))?;
    let sys = system(a.clone(), vec![("k", a.unit_line()), ("X", x)])?;
    Ok(CorpusItem {
        name: "t3_minus_1".into(),
        description: "k[t]/(t^3 - 1) with atoms k and X = span{t, t^2}".into(),
        input: CorpusInput::System {
            system: sys,
            action: None,
        },
        expectations: vec![
            entry("X", "X", &["k", "X"]),
            Expectation::WeaklyReproducible(true),
            Expectation::Classes(vec![names(&["k", "X"])]),
            Expectation::QuotientSize(1),
            Expectation::TowerSizes(vec![1]),
            Expectation::TowerFocalDims(vec![3]),
            Expectation::TowerStabilized(true),
        ],
    })
}

/// `M_n(Q)` with atoms `k` and the trace-zero matrices.
pub fn trace_zero(n: usize) -> Result<CorpusItem, ReptoolsError> {
    if n < 2 {
        return Err(ReptoolsError::UnknownName(format!("trace_zero({n})")));
    }
    let a = Algebra::matrix_algebra(n);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                rows.push(a.basis_vector(i * n + j));
            } else if i + 1 < n {
                let mut v = a.basis_vector(i * n + i);
                v[(n - 1) * n + (n - 1)] = FieldElement::from(-1);
                rows.push(v);
            }
        }
    }
    let x = Subspace::canonicalize(&rows, n * n)?;
    let sys = system(a.clone(), vec![("k", a.unit_line()), ("X", x)])?;
    let action = match n {
        2 => Some(s3_standard_action()?),
        3 => Some(a4_rational_action()?),
        _ => None,
    };
    let mut expectations = vec![
        entry("X", "X", &["k", "X"]),
        Expectation::WeaklyReproducible(true),
        Expectation::QuotientSize(1),
        Expectation::Focus(names(&["k", "X"])),
    ];
    if action.is_some() {
        expectations.push(Expectation::TrivialMultiplicity(1));
    }
    Ok(CorpusItem {
        name: format!("trace_zero({n})"),
        description: format!("M{n}(Q) with atoms k and the trace-zero matrices"),
        input: CorpusInput::System { system: sys, action },
        expectations,
    })
}

pub fn s3_standard() -> Result<CorpusItem, ReptoolsError> {
    let action = s3_standard_action()?;
    let chars = s3_characters(action.group())?;
    let atoms = multiplicity_free_atoms(&action, &chars)?;
    let sys = AtomSystem::new(
        action.algebra().clone(),
        atoms.into_iter().map(|(n, s)| Atom::new(n, s)).collect(),
        None,
    )?;
    Ok(CorpusItem {
        name: "s3_standard".into(),
        description: "End(V) for the standard representation V of S3 over Q, atoms the isotypic components C, sigma, V"
            .into(),
        input: CorpusInput::System {
            system: sys,
            action: Some(action),
        },
        expectations: vec![
            entry("sigma", "sigma", &["C"]),
            entry("sigma", "V", &["V"]),
            entry("V", "sigma", &["V"]),
            entry("V", "V", &["C", "sigma"]),
            Expectation::Entire(true),
            Expectation::Associative(true),
            Expectation::WeaklyReproducible(true),
            Expectation::Reproducible(true),
            Expectation::Classes(vec![names(&["C", "sigma"]), names(&["V"])]),
            Expectation::Focus(names(&["C", "sigma"])),
            Expectation::QuotientSize(2),
            Expectation::IsGroup(true),
            Expectation::TowerSizes(vec![2, 2, 1]),
            Expectation::TowerFocalDims(vec![2, 1, 1]),
            Expectation::TowerStabilized(true),
            Expectation::TrivialMultiplicity(1),
            Expectation::WitnessProduct(names(&["V", "V"])),
        ],
    })
}

/// `Q(√2, √3)` in the basis `1, √2, √3, √6`: index `i` has bits `(a, b)` for
/// `√2^a √3^b`, and `e_i e_j = 2^(a∧a') 3^(b∧b') e_(i xor j)`.
pub fn galois_biquadratic_algebra() -> Result<Algebra, ReptoolsError> {
    let mut structure = vec![vec![vec![FieldElement::zero(); 4]; 4]; 4];
    for (i, slice) in structure.iter_mut().enumerate() {
        for (j, v) in slice.iter_mut().enumerate() {
            let two = if i & j & 1 == 1 { 2 } else { 1 };
            let three = if (i >> 1) & (j >> 1) & 1 == 1 { 3 } else { 1 };
            v[i ^ j] = FieldElement::from(two * three);
        }
    }
    Ok(Algebra::from_structure_constants(
        FieldDescriptor::Rational,
        4,
        structure,
        fe(&[1, 0, 0, 0]),
    )?)
}

pub fn galois_biquadratic() -> Result<CorpusItem, ReptoolsError> {
    let a = galois_biquadratic_algebra()?;
    let atoms = ["1", "sqrt2", "sqrt3", "sqrt6"]
        .iter()
        .enumerate()
        .map(|(i, n)| (*n, line(&a, i)))
        .collect();
    let sys = system(a.clone(), atoms)?;
    Ok(CorpusItem {
        name: "galois_biquadratic".into(),
        description: "Q(sqrt2, sqrt3) with its Galois group Z2 x Z2, atoms the lines through 1, sqrt2, sqrt3, sqrt6"
            .into(),
        input: CorpusInput::System {
            system: sys,
            action: Some(sign_action_klein(a)?),
        },
        expectations: vec![
            entry("sqrt2", "sqrt3", &["sqrt6"]),
            Expectation::Classes(vec![
                names(&["1"]),
                names(&["sqrt2"]),
                names(&["sqrt3"]),
                names(&["sqrt6"]),
            ]),
            Expectation::Focus(names(&["1"])),
            Expectation::QuotientSize(4),
            Expectation::IsGroup(true),
            Expectation::GroupExponent(2),
            Expectation::TowerSizes(vec![4, 1]),
            Expectation::TowerFocalDims(vec![1, 1]),
            Expectation::TowerStabilized(true),
            Expectation::TrivialMultiplicity(1),
        ],
    })
}

/// A named finite monoid: element names and Cayley table.
#[derive(Debug, Clone)]
pub struct NamedMonoid {
    pub name: &'static str,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub is_group: bool,
}

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn transformation_monoid_t2() -> Vec<Vec<usize>> {
    // Maps {0,1} → {0,1} as image pairs; the product f·g is f ∘ g.
    let maps: [[usize; 2]; 4] = [[0, 1], [1, 0], [0, 0], [1, 1]];
    maps.iter()
        .map(|f| {
            maps.iter()
                .map(|g| {
                    let fg = [f[g[0]], f[g[1]]];
                    maps.iter().position(|m| *m == fg).expect("closed")
                })
                .collect()
        })
        .collect()
}

/// The monoids whose monoid algebras form part of the corpus.
pub fn monoid_list() -> Vec<NamedMonoid> {
    let m = |name, elements: &[&str], table: Vec<Vec<usize>>, is_group| NamedMonoid {
        name,
        elements: names(elements),
        table,
        is_group,
    };
    vec![
        m("trivial", &["1"], cyclic(1), true),
        m("z2", &["1", "g"], cyclic(2), true),
        m("z3", &["1", "g", "g2"], cyclic(3), true),
        m("z4", &["1", "g", "g2", "g3"], cyclic(4), true),
        m("z5", &["1", "g", "g2", "g3", "g4"], cyclic(5), true),
        m(
            "z2xz2",
            &["1", "a", "b", "ab"],
            (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect(),
            true,
        ),
        m("idempotent", &["1", "z"], vec![vec![0, 1], vec![1, 1]], false),
        m(
            "zero_square",
            &["1", "a", "0"],
            vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
            false,
        ),
        m(
            "left_zero",
            &["1", "a", "b"],
            vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]],
            false,
        ),
        m(
            "right_zero",
            &["1", "a", "b"],
            vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]],
            false,
        ),
        m(
            "z2_with_one",
            &["1", "a", "a2"],
            vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 2]],
            false,
        ),
        m(
            "z2_with_zero",
            &["1", "g", "0"],
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]],
            false,
        ),
        m(
            "nil_cube",
            &["1", "a", "a2", "0"],
            vec![vec![0, 1, 2, 3], vec![1, 2, 3, 3], vec![2, 3, 3, 3], vec![3, 3, 3, 3]],
            false,
        ),
        m("t2", &["id", "swap", "c0", "c1"], transformation_monoid_t2(), false),
        m(
            "chain5",
            &["m0", "m1", "m2", "m3", "1"],
            (0..5).map(|i| (0..5).map(|j| i.min(j)).collect()).collect(),
            false,
        ),
    ]
}

pub fn monoid_algebra(monoid: &NamedMonoid) -> Result<CorpusItem, ReptoolsError> {
    let a = Algebra::monoid_algebra(&monoid.table)?;
    let atoms = monoid
        .elements
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), line(&a, i)))
        .collect();
    let sys = system(a.clone(), atoms)?;
    let action = match monoid.name {
        "z2" => Some(sign_action_z2(a)?),
        "z2xz2" => Some(sign_action_klein(a)?),
        _ => None,
    };
    let mut expectations = vec![
        Expectation::Entire(true),
        Expectation::Associative(true),
        Expectation::QuotientSize(monoid.table.len()),
        Expectation::IsGroup(monoid.is_group),
        Expectation::RealizesMonoid(monoid.table.clone()),
        Expectation::WeaklyReproducible(monoid.is_group),
    ];
    if action.is_some() {
        expectations.push(Expectation::TrivialMultiplicity(1));
    }
    Ok(CorpusItem {
        name: format!("monoid_algebra({})", monoid.name),
        description: format!("the monoid algebra kM of {} with atoms the lines k·e_x", monoid.name),
        input: CorpusInput::System { system: sys, action },
        expectations,
    })
}

pub fn a4_example() -> CorpusItem {
    CorpusItem {
        name: "a4_example".into(),
        description: "End(W) for the 3-dimensional representation W of A4 over Q(zeta3): scripted subspace checks"
            .into(),
        input: CorpusInput::Scripted,
        expectations: Vec::new(),
    }
}

pub fn a4_fragment() -> Result<CorpusItem, ReptoolsError> {
    Ok(CorpusItem {
        name: "a4_fragment".into(),
        description: "hyperproduct on eight atoms of End(W) for A4, computed from subspaces".into(),
        input: CorpusInput::Abstract(a4::fragment_table()?),
        expectations: vec![
            entry("P", "P", &["P2"]),
            entry("P", "P2", &["C", "Z", "Z'"]),
            entry("P2", "X", &["C", "Z", "Z'", "P"]),
            Expectation::Entire(true),
            Expectation::Associative(false),
            Expectation::Reproducible(false),
            Expectation::AssociativityFailure("P".into(), "P2".into(), "X".into()),
        ],
    })
}

/// Every concrete item name, in a fixed order.
pub fn names_all() -> Vec<String> {
    let mut out = names(&[
        "trivial",
        "quotient_t2",
        "quotient_t2_minus_1",
        "quotient_t2_minus_t",
        "t3_minus_1",
        "trace_zero(2)",
        "trace_zero(3)",
        "s3_standard",
        "galois_biquadratic",
    ]);
    out.extend(monoid_list().iter().map(|m| format!("monoid_algebra({})", m.name)));
    out.extend(names(&["a4_example", "a4_fragment"]));
    out
}

/// Resolves a name to its items. `two_dim_quotients` and `monoid_algebra`
/// expand to groups; `all` gives the whole corpus. Underscore forms such as
/// `trace_zero_3` are accepted for parenthesized names.
pub fn resolve(name: &str) -> Result<Vec<CorpusItem>, ReptoolsError> {
    let unknown = || ReptoolsError::UnknownName(name.to_string());
    let normalized = if let Some(rest) = name.strip_prefix("trace_zero_") {
        format!("trace_zero({rest})")
    } else if let Some(rest) = name.strip_prefix("monoid_algebra_") {
        format!("monoid_algebra({rest})")
    } else {
        name.to_string()
    };
    match normalized.as_str() {
        "all" => names_all()
            .iter()
            .map(|n| resolve(n).map(|mut v| v.remove(0)))
            .collect(),
        "two_dim_quotients" => Ok(vec![quotient_t2()?, quotient_t2_minus_1()?, quotient_t2_minus_t()?]),
        "monoid_algebra" => monoid_list().iter().map(monoid_algebra).collect(),
        "trivial" => Ok(vec![trivial()?]),
        "quotient_t2" => Ok(vec![quotient_t2()?]),
        "quotient_t2_minus_1" => Ok(vec![quotient_t2_minus_1()?]),
        "quotient_t2_minus_t" => Ok(vec![quotient_t2_minus_t()?]),
        "t3_minus_1" => Ok(vec![t3_minus_1()?]),
        "s3_standard" => Ok(vec![s3_standard()?]),
        "galois_biquadratic" => Ok(vec![galois_biquadratic()?]),
        "a4_example" => Ok(vec![a4_example()]),
        "a4_fragment" => Ok(vec![a4_fragment()?]),
        other => {
            let inner = |prefix: &str| {
                other
                    .strip_prefix(prefix)
                    .and_then(|r| r.strip_prefix('('))
                    .and_then(|r| r.strip_suffix(')'))
            };
            if let Some(n) = inner("trace_zero") {
                let n: usize = n.trim().parse().map_err(|_| unknown())?;
                if n > 6 {
                    return Err(unknown());
                }
                return Ok(vec![trace_zero(n).map_err(|_| unknown())?]);
            }
            if let Some(m) = inner("monoid_algebra") {
                let monoid = monoid_list().into_iter().find(|x| x.name == m).ok_or_else(unknown)?;
                return Ok(vec![monoid_algebra(&monoid)?]);
            }
            Err(unknown())
        }
    }
}

/// Results computed once per item and shared by all expectations.
struct Evaluation<'a> {
    table: &'a HyperTable,
    flags: Flags,
    report: Result<CondensationReport, String>,
    tower: Option<Result<FocalTower, String>>,
    trivial_multiplicity: Option<Result<usize, String>>,
}

fn set_string(table: &HyperTable, atoms: impl IntoIterator<Item = usize>) -> String {
    let set: BTreeSet<usize> = atoms.into_iter().collect();
    format!("{{{}}}", table.names_of(&set).join(", "))
}

fn names_to_set_string(table: &HyperTable, names: &[String]) -> String {
    let idx: Vec<usize> = names.iter().map(|n| table.index_of(n).unwrap_or(usize::MAX)).collect();
    if idx.contains(&usize::MAX) {
        return format!("unknown atoms {names:?}");
    }
    set_string(table, idx)
}

fn list_string<T: std::fmt::Display>(xs: &[T]) -> String {
    format!("[{}]", xs.iter().map(T::to_string).collect::<Vec<_>>().join(", "))
}

impl Evaluation<'_> {
    fn with_report(&self, f: impl FnOnce(&CondensationReport) -> String) -> String {
        match &self.report {
            Ok(r) => f(r),
            Err(e) => format!("error: {e}"),
        }
    }

    fn with_tower(&self, f: impl FnOnce(&FocalTower) -> String) -> String {
        match &self.tower {
            Some(Ok(t)) => f(t),
            Some(Err(e)) => format!("error: {e}"),
            None => "no tower for abstract tables".into(),
        }
    }

    fn check(&self, e: &Expectation) -> (String, String) {
        let t = self.table;
        let b = |x: bool| x.to_string();
        match e {
            Expectation::Entry { left, right, atoms } => {
                let actual = match (t.index_of(left), t.index_of(right)) {
                    (Some(i), Some(j)) => set_string(t, t.entry(i, j).iter().copied()),
                    _ => "unknown atom".into(),
                };
                (names_to_set_string(t, atoms), actual)
            }
            Expectation::Entire(x) => (b(*x), b(self.flags.entire)),
            Expectation::Associative(x) => (b(*x), self.flags.associative.map_or("undefined (not entire)".into(), b)),
            Expectation::WeaklyReproducible(x) => (b(*x), b(self.flags.weakly_reproducible)),
            Expectation::Reproducible(x) => (b(*x), b(self.flags.reproducible)),
            Expectation::Classes(classes) => {
                let mut expected: Vec<String> = classes.iter().map(|c| names_to_set_string(t, c)).collect();
                expected.sort();
                let actual = self.with_report(|r| {
                    let mut got: Vec<String> = r
                        .partition
                        .classes()
                        .iter()
                        .map(|c| set_string(t, c.iter().copied()))
                        .collect();
                    got.sort();
                    got.join(" ")
                });
                (expected.join(" "), actual)
            }
            Expectation::Focus(f) => (
                names_to_set_string(t, f),
                self.with_report(|r| {
                    r.focus
                        .as_ref()
                        .map_or("none".into(), |f| set_string(t, f.iter().copied()))
                }),
            ),
            Expectation::QuotientSize(n) => (n.to_string(), self.with_report(|r| r.monoid.size().to_string())),
            Expectation::IsGroup(x) => (b(*x), self.with_report(|r| b(r.monoid.is_group()))),
            Expectation::GroupExponent(n) => (
                n.to_string(),
                self.with_report(|r| r.monoid.exponent().map_or("not a group".into(), |e| e.to_string())),
            ),
            Expectation::RealizesMonoid(m) => ("true".into(), self.with_report(|r| b(realizes(r, m)))),
            Expectation::AssociativityFailure(x, y, z) => {
                let triple = (t.index_of(x), t.index_of(y), t.index_of(z));
                let actual = match (triple, associativity_failures(t)) {
                    ((Some(i), Some(j), Some(k)), Ok(fails)) => b(fails.contains(&(i, j, k))),
                    (_, Err(e)) => format!("error: {e}"),
                    _ => "unknown atom".into(),
                };
                ("true".into(), actual)
            }
            Expectation::TowerSizes(sizes) => (
                list_string(sizes),
                self.with_tower(|tw| list_string(&tw.levels.iter().map(|l| l.monoid.size()).collect::<Vec<_>>())),
            ),
            Expectation::TowerFocalDims(dims) => (
                list_string(dims),
                self.with_tower(|tw| list_string(&tw.levels.iter().map(|l| l.focal_dim()).collect::<Vec<_>>())),
            ),
            Expectation::TowerStabilized(x) => (b(*x), self.with_tower(|tw| b(tw.stabilized))),
            Expectation::TrivialMultiplicity(n) => (
                n.to_string(),
                match &self.trivial_multiplicity {
                    Some(Ok(m)) => m.to_string(),
                    Some(Err(e)) => format!("error: {e}"),
                    None => "no action".into(),
                },
            ),
            Expectation::WitnessProduct(w) => (
                list_string(w),
                self.with_report(|r| match witness_product(r, &r.family) {
                    Some(seq) => list_string(&seq.iter().map(|&i| t.name(i)).collect::<Vec<_>>()),
                    None => "none".into(),
                }),
            ),
        }
    }
}

/// Whether `x ↦ class(x)` is a bijective homomorphism from the monoid
/// `table` onto the condensation quotient. Atom `x` is the line through `e_x`.
pub fn realizes(report: &CondensationReport, table: &[Vec<usize>]) -> bool {
    let p = &report.partition;
    let m = &report.monoid;
    if p.len() != table.len() || m.size() != table.len() || p.classes().iter().any(|c| c.len() != 1) {
        return false;
    }
    (0..table.len()).all(|x| (0..table.len()).all(|y| p.class_of(table[x][y]) == m.mul(p.class_of(x), p.class_of(y))))
}

/// Checks every expectation of an item. Computation errors are reported as
/// failed outcomes; only errors in building the inputs are returned.
pub fn evaluate(item: &CorpusItem) -> Result<Vec<Outcome>, ReptoolsError> {
    if let CorpusInput::Scripted = item.input {
        let mut verdicts = a4_checks()?;
        verdicts.extend(a4_structure_checks()?);
        return Ok(verdicts
            .into_iter()
            .map(|v| Outcome {
                check: format!("({}) {}", v.label, v.claim),
                expected: "pass".into(),
                actual: if v.pass {
                    "pass".into()
                } else {
                    format!("fail: {}", v.detail)
                },
                pass: v.pass,
            })
            .collect());
    }
    let table = item.table()?.expect("non-scripted items have tables");
    let report = condense(&table).map_err(|e| e.to_string());
    let tower = item
        .system()
        .map(|s| focal_tower(s, CORPUS_MAX_DEPTH).map_err(|e| e.to_string()));
    let trivial_multiplicity = item
        .action()
        .map(|a| trivial_multiplicity(a).map_err(|e| e.to_string()));
    let ev = Evaluation {
        table: &table,
        flags: Flags::compute(&table),
        report,
        tower,
        trivial_multiplicity,
    };
    Ok(item
        .expectations
        .iter()
        .map(|e| {
            let (expected, actual) = ev.check(e);
            Outcome {
                check: e.describe(),
                pass: expected == actual,
                expected,
                actual,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_pass(name: &str) {
        for item in resolve(name).unwrap() {
            for o in evaluate(&item).unwrap() {
                assert!(
                    o.pass,
                    "{}: {} expected {} got {}",
                    item.name, o.check, o.expected, o.actual
                );
            }
        }
    }

    #[test]
    fn quotients() {
        assert_all_pass("two_dim_quotients");
        assert_all_pass("t3_minus_1");
        assert_all_pass("trivial");
    }

    #[test]
    fn trace_zero_items() {
        assert_all_pass("trace_zero(2)");
        assert_all_pass("trace_zero_3");
    }

    #[test]
    fn s3_and_galois() {
        assert_all_pass("s3_standard");
        assert_all_pass("galois_biquadratic");
    }

    #[test]
    fn monoids() {
        assert!(monoid_list().len() >= 10);
        assert!(monoid_list().iter().all(|m| m.table.len() <= 5));
        assert_all_pass("monoid_algebra");
    }

    #[test]
    fn a4_items() {
        assert_all_pass("a4_example");
        assert_all_pass("a4_fragment");
    }

    #[test]
    fn names_resolve() {
        for n in names_all() {
            let items = resolve(&n).unwrap();
            assert_eq!(items.len(), 1);
            assert_eq!(items[0].name, n);
        }
        assert!(matches!(resolve("nope"), Err(ReptoolsError::UnknownName(_))));
        assert!(resolve("trace_zero(1)").is_err());
        assert!(resolve("monoid_algebra(q8)").is_err());
    }

    #[test]
    fn failed_expectation_is_reported() {
        let mut item = quotient_t2_minus_t().unwrap();
        item.expectations = vec![Expectation::IsGroup(true)];
        let out = evaluate(&item).unwrap();
        assert!(!out[0].pass);
        assert_eq!(out[0].actual, "false");
    }
}
