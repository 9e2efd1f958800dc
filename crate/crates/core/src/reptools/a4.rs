//! The three-dimensional representation `W` of `A4` and subspaces of
//! `End(W) = M3(Q(ζ3))`, checked by raw subspace arithmetic.
//!
//! `W` is the sum-zero part of the permutation representation on four points,
//! with basis `v1 = e0+e1-e2-e3`, `v2 = e0-e1+e2-e3`, `v3 = e0-e1-e2+e3`, so the
//! Klein four-subgroup acts by diagonal sign matrices.

use crate::algebra::Algebra;
use crate::field::{FieldDescriptor, FieldElement};
use crate::linalg::{Matrix, Subspace};
use crate::semiring::{AtomSet, HyperTable};

use super::{
    conjugation_action, fixed_space_of, group_from_permutations, permutation_on_basis, ActionOnAlgebra, CharacterRow,
    FiniteGroup, ReptoolsError,
};

/// `(0 1 2)` and `(0 1)(2 3)`.
pub fn a4_generators() -> Vec<Vec<usize>> {
    vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]]
}

const W_BASIS: [[i64; 4]; 3] = [[1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];

/// Integer coordinates of `v1, v2, v3` in the permutation representation.
pub fn w_basis() -> Vec<Vec<i64>> {
    W_BASIS.iter().map(|v| v.to_vec()).collect()
}

pub fn field() -> FieldDescriptor {
    FieldDescriptor::cyclotomic(3).expect("order 3 is valid")
}

fn omega(k: i64) -> FieldElement {
    field().zeta_pow(k)
}

/// Everything the scripted checks need.
#[derive(Debug, Clone)]
pub struct A4Setup {
    pub group: FiniteGroup,
    pub rep: Vec<Matrix>,
    pub action: ActionOnAlgebra,
    pub characters: Vec<CharacterRow>,
}

impl A4Setup {
    pub fn new() -> Result<A4Setup, ReptoolsError> {
        let group = group_from_permutations(&a4_generators())?;
        let rep = group
            .elements()
            .iter()
            .map(|p| permutation_on_basis(p, &w_basis()))
            .collect::<Result<Vec<_>, _>>()?;
        let algebra = Algebra::matrix_algebra_over(field(), 3);
        let action = conjugation_action(group.clone(), algebra, &rep)?;
        let characters = characters(&group)?;
        Ok(A4Setup {
            group,
            rep,
            action,
            characters,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        self.action.algebra()
    }

    /// Elements of order at most 2.
    pub fn klein_four(&self) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| self.group.element_order(g) <= 2)
            .collect()
    }
}

/// Trivial, `Z`, `Z'` and `W`, by element. `Z(g) = ω^k` where `g` lies in the
/// coset `(0 1 2)^k V4`.
pub fn characters(group: &FiniteGroup) -> Result<Vec<CharacterRow>, ReptoolsError> {
    let a = group.index_of(&a4_generators()[0]).expect("generator is an element");
    let in_v4 = |g: usize| group.element_order(g) <= 2;
    let coset = |g: usize| -> i64 {
        let a_inv = group.inverse(a);
        let mut x = g;
        for k in 0..3 {
            if in_v4(x) {
                return k;
            }
            x = group.mul(x, a_inv);
        }
        unreachable!("A4 / V4 has order 3")
    };
    let n = group.order();
    let by = |f: &dyn Fn(usize) -> FieldElement| (0..n).map(f).collect::<Vec<_>>();
    Ok(vec![
        CharacterRow::new("C", by(&|_| FieldElement::one()))?,
        CharacterRow::new("Z", by(&|g| omega(coset(g))))?,
        CharacterRow::new("Z'", by(&|g| omega(2 * coset(g))))?,
        CharacterRow::new(
            "W",
            by(&|g| match group.element_order(g) {
                1 => FieldElement::from(3),
                2 => FieldElement::from(-1),
                _ => FieldElement::zero(),
            }),
        )?,
    ])
}

fn unit(i: usize, j: usize) -> usize {
    i * 3 + j
}

fn span(vectors: Vec<Vec<FieldElement>>) -> Subspace {
    Subspace::canonicalize(&vectors, 9).expect("vectors live in M3")
}

fn matrix_vector(entries: &[((usize, usize), FieldElement)]) -> Vec<FieldElement> {
    let mut v = vec![FieldElement::zero(); 9];
    for ((i, j), c) in entries {
        v[unit(*i, *j)] = c.clone();
    }
    v
}

/// `U[a:b] = span{(a+b)E23 + (a-b)E32, (a-b)E13 + (a+b)E31, (a+b)E12 + (a-b)E21}`
/// (matrix units indexed from 1).
pub fn u(a: &FieldElement, b: &FieldElement) -> Subspace {
    let p = a + b;
    let m = a - b;
    span(vec![
        matrix_vector(&[((1, 2), p.clone()), ((2, 1), m.clone())]),
        matrix_vector(&[((0, 2), m.clone()), ((2, 0), p.clone())]),
        matrix_vector(&[((0, 1), p), ((1, 0), m)]),
    ])
}

pub fn u_int(a: i64, b: i64) -> Subspace {
    u(&FieldElement::from(a), &FieldElement::from(b))
}

fn diagonal(d: [FieldElement; 3]) -> Subspace {
    let [x, y, z] = d;
    span(vec![matrix_vector(&[((0, 0), x), ((1, 1), y), ((2, 2), z)])])
}

/// The named subspaces used by the checks.
#[derive(Debug, Clone)]
pub struct A4Subspaces {
    pub c: Subspace,
    pub z: Subspace,
    pub z_prime: Subspace,
    pub t: Subspace,
    pub x: Subspace,
    pub y: Subspace,
    pub p: Subspace,
    pub p2: Subspace,
    /// `U[2:1]`, a generic parameter.
    pub generic: Subspace,
}

impl A4Subspaces {
    pub fn new() -> A4Subspaces {
        let one = FieldElement::one;
        let c = diagonal([one(), one(), one()]);
        let z = diagonal([one(), omega(1), omega(2)]);
        let z_prime = diagonal([one(), omega(2), omega(1)]);
        let t = c.sum(&z).and_then(|s| s.sum(&z_prime)).expect("same ambient space");
        A4Subspaces {
            c,
            z,
            z_prime,
            t,
            x: u_int(1, 0),
            y: u_int(0, 1),
            p: u_int(1, 1),
            p2: u_int(1, -1),
            generic: u_int(2, 1),
        }
    }

    /// The atoms used for hyperproducts in checks (e) and (f).
    pub fn listed(&self) -> Vec<(&'static str, &Subspace)> {
        vec![
            ("C", &self.c),
            ("Z", &self.z),
            ("Z'", &self.z_prime),
            ("X", &self.x),
            ("Y", &self.y),
            ("P", &self.p),
            ("P2", &self.p2),
            ("U[2:1]", &self.generic),
        ]
    }
}

impl Default for A4Subspaces {
    fn default() -> Self {
        A4Subspaces::new()
    }
}

/// One scripted verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub label: String,
    pub claim: String,
    pub pass: bool,
    pub detail: String,
}

struct Checker<'a> {
    algebra: &'a Algebra,
    s: &'a A4Subspaces,
}

impl Checker<'_> {
    fn mul(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, ReptoolsError> {
        Ok(self.algebra.product_span(u, v)?)
    }

    /// Listed atoms contained in `s`.
    fn atoms_in(&self, s: &Subspace) -> Result<Vec<&'static str>, ReptoolsError> {
        let mut out = Vec::new();
        for (name, atom) in self.s.listed() {
            if s.contains(atom)? {
                out.push(name);
            }
        }
        Ok(out)
    }

    fn atom(&self, name: &str) -> &Subspace {
        self.s
            .listed()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| s)
            .expect("listed atom")
    }

    fn sum_of(&self, names: &[&str]) -> Result<Subspace, ReptoolsError> {
        let mut acc = Subspace::zero(9);
        for n in names {
            acc = acc.sum(self.atom(n))?;
        }
        Ok(acc)
    }

    /// `A∘S` for a set `S` of listed atoms.
    fn hyper_left(&self, a: &Subspace, set: &[&str]) -> Result<Vec<&'static str>, ReptoolsError> {
        let mut out: Vec<&'static str> = Vec::new();
        for n in set {
            for m in self.atoms_in(&self.mul(a, self.atom(n))?)? {
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }
}

fn verdict(label: &str, claim: &str, pass: bool, detail: String) -> Verdict {
    Verdict {
        label: label.into(),
        claim: claim.into(),
        pass,
        detail,
    }
}

/// Checks (a) to (g) on the explicit subspaces of `M3(Q(ζ3))`.
pub fn a4_checks() -> Result<Vec<Verdict>, ReptoolsError> {
    let algebra = Algebra::matrix_algebra_over(field(), 3);
    let s = A4Subspaces::new();
    let ck = Checker {
        algebra: &algebra,
        s: &s,
    };
    let t_plus = |extra: &Subspace| s.t.sum(extra);
    let mut out = Vec::new();

    let pp = ck.mul(&s.p, &s.p)?;
    out.push(verdict(
        "a",
        "P·P = U[1:-1]",
        pp == s.p2,
        format!("dim P·P = {}", pp.dim()),
    ));

    let pp2 = ck.mul(&s.p, &s.p2)?;
    out.push(verdict(
        "b",
        "P·U[1:-1] = T",
        pp2 == s.t,
        format!("dim = {}", pp2.dim()),
    ));

    let pc = [&s.c, &s.z, &s.z_prime]
        .iter()
        .map(|d| ck.mul(&s.p, d))
        .collect::<Result<Vec<_>, _>>()?;
    out.push(verdict(
        "c",
        "P·C = P·Z = P·Z' = P",
        pc.iter().all(|x| *x == s.p),
        format!("dims {:?}", pc.iter().map(Subspace::dim).collect::<Vec<_>>()),
    ));

    let pg = ck.mul(&s.p, &s.generic)?;
    out.push(verdict(
        "d",
        "P·U[2:1] = T + P2",
        pg == t_plus(&s.p2)?,
        format!("dim = {}", pg.dim()),
    ));

    let left = ck.mul(&pp2, &s.x)?;
    let p2x_atoms = ck.atoms_in(&ck.mul(&s.p2, &s.x)?)?;
    let outer = ck.hyper_left(&s.p, &p2x_atoms)?;
    // X does lie in the subspace P + P2 = X + Y; the failure is one of atom membership.
    let outer_sum = ck.sum_of(&outer)?;
    out.push(verdict(
        "e",
        "X ⊆ (P·P2)·X but X is not in P∘(P2∘X)",
        left.contains(&s.x)? && !outer.contains(&"X"),
        format!(
            "P2∘X = {{{}}}, P∘(P2∘X) = {{{}}}, sum has dim {}",
            p2x_atoms.join(", "),
            outer.join(", "),
            outer_sum.dim()
        ),
    ));

    let mut producing = Vec::new();
    for (name, v) in s.listed() {
        if ck.mul(&s.p, v)?.contains(&s.generic)? {
            producing.push(name);
        }
    }
    out.push(verdict(
        "f",
        "no listed V has U[2:1] ∈ P∘V",
        producing.is_empty(),
        format!("V with U[2:1] ∈ P∘V: {{{}}}", producing.join(", ")),
    ));

    let px = ck.mul(&s.p, &s.x)?;
    let p2x = ck.mul(&s.p2, &s.x)?;
    out.push(verdict(
        "g",
        "P·X = T + P2 and P2·X = T + P",
        px == t_plus(&s.p2)? && p2x == t_plus(&s.p)?,
        format!("dims {} and {}", px.dim(), p2x.dim()),
    ));
    Ok(out)
}

/// Representation-theoretic facts behind the explicit subspaces.
pub fn a4_structure_checks() -> Result<Vec<Verdict>, ReptoolsError> {
    let setup = A4Setup::new()?;
    let s = A4Subspaces::new();
    let mut out = Vec::new();

    let fixed = super::trivial_multiplicity(&setup.action)?;
    out.push(verdict(
        "trivial",
        "trivial multiplicity is 1",
        fixed == 1,
        format!("{fixed}"),
    ));

    let v4: Vec<Matrix> = setup
        .klein_four()
        .iter()
        .map(|&g| setup.action.matrices()[g].clone())
        .collect();
    let t_fixed = fixed_space_of(9, &v4)?;
    out.push(verdict(
        "klein",
        "fixed space of the Klein four-subgroup is the diagonal T",
        t_fixed == s.t,
        format!("dim {}", t_fixed.dim()),
    ));

    let dec = super::isotypic_components(&setup.action, &setup.characters)?;
    let dims: Vec<usize> = dec.components.iter().map(|(_, c)| c.dim()).collect();
    out.push(verdict(
        "isotypic",
        "isotypic dimensions are 1, 1, 1, 6",
        dims == [1, 1, 1, 6] && dec.complete,
        format!("{dims:?}"),
    ));
    let comp = |name: &str| &dec.components.iter().find(|(n, _)| n == name).expect("named").1;
    let lines_match =
        (comp("Z") == &s.z && comp("Z'") == &s.z_prime) || (comp("Z") == &s.z_prime && comp("Z'") == &s.z);
    out.push(verdict(
        "characters",
        "the nontrivial linear characters cut out diag(1,ω,ω²) and diag(1,ω²,ω)",
        comp("C") == &s.c && lines_match,
        String::new(),
    ));
    out.push(verdict(
        "split",
        "the W-isotypic component is X + Y",
        comp("W") == &s.x.sum(&s.y)?,
        String::new(),
    ));
    let mut stable = true;
    for sub in [&s.x, &s.y, &s.p, &s.p2, &s.generic, &s.t] {
        stable &= setup.action.is_stable(sub)?;
    }
    out.push(verdict(
        "stable",
        "X, Y, P, P2, U[2:1] and T are invariant",
        stable,
        String::new(),
    ));
    Ok(out)
}

/// Names of the atoms in the abstract fragment, in index order. `ZX` and
/// `Z'X` are the products `Z·X` and `Z'·X`, two further members of the
/// `U[a:b]` family.
pub const FRAGMENT_ATOMS: [&str; 8] = ["C", "Z", "Z'", "P", "P2", "X", "ZX", "Z'X"];

/// Subspaces of the fragment atoms, in [`FRAGMENT_ATOMS`] order.
pub fn fragment_subspaces() -> Result<Vec<Subspace>, ReptoolsError> {
    let algebra = Algebra::matrix_algebra_over(field(), 3);
    let s = A4Subspaces::new();
    let zx = algebra.product_span(&s.z, &s.x)?;
    let z2x = algebra.product_span(&s.z_prime, &s.x)?;
    Ok(vec![s.c, s.z, s.z_prime, s.p, s.p2, s.x, zx, z2x])
}

/// The hyperproduct on the fragment: `entry(A, B)` lists the fragment atoms
/// contained in `AB`. The atoms are linearly dependent, so this is an
/// abstract table rather than a verified atom system.
pub fn fragment_table() -> Result<HyperTable, ReptoolsError> {
    let algebra = Algebra::matrix_algebra_over(field(), 3);
    let atoms = fragment_subspaces()?;
    let mut entries = Vec::with_capacity(atoms.len());
    for a in &atoms {
        let mut row = Vec::with_capacity(atoms.len());
        for b in &atoms {
            let prod = algebra.product_span(a, b)?;
            let mut set = AtomSet::new();
            for (k, c) in atoms.iter().enumerate() {
                if prod.contains(c)? {
                    set.insert(k);
                }
            }
            row.push(set);
        }
        entries.push(row);
    }
    Ok(HyperTable::from_abstract(
        FRAGMENT_ATOMS.iter().map(|s| s.to_string()).collect(),
        Some(0),
        entries,
    )?)
}
