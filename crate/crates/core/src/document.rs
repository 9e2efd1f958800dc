//! JSON problem documents: a field, an algebra, and either explicit atoms or
//! an abstract hyperproduct table.
//!
//! Scalars are strings `"p/q"` (integers may also be given as JSON numbers);
//! over `Q(zeta_n)` a scalar may instead be an array of power-basis
//! coordinates. Parse errors carry a JSON pointer to the offending value.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::field::{FieldDescriptor, FieldElement, Rational};
use crate::linalg::Subspace;
use crate::semiring::{Atom, AtomSet, AtomSystem, HyperTable};

/// Why a document was rejected, and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "invalid document at {at}: {}", self.message)
    }
}

impl std::error::Error for DocumentError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSpec {
    Matrix {
        n: usize,
    },
    /// Ascending coefficients ending in 1.
    PolyQuotient {
        coefficients: Vec<FieldElement>,
    },
    MonoidAlgebra {
        table: Vec<Vec<usize>>,
    },
    /// Dense `structure[i][j][l]`: coefficient of `e_l` in `e_i e_j`.
    Explicit {
        dim: usize,
        structure: Vec<Vec<Vec<FieldElement>>>,
        one: Vec<FieldElement>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSpec {
    pub name: String,
    pub basis: Vec<Vec<FieldElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractSpec {
    pub atoms: Vec<String>,
    pub identity: Option<String>,
    /// Keyed by `(left, right)` atom names.
    pub table: BTreeMap<(String, String), Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemBody {
    Atoms {
        algebra: AlgebraSpec,
        atoms: Vec<AtomSpec>,
        identity: Option<String>,
    },
    Abstract(AbstractSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemDocument {
    pub field: FieldDescriptor,
    pub body: ProblemBody,
    pub commands: Vec<String>,
}

/// A built problem, ready for the pipeline.
#[derive(Debug, Clone)]
pub enum Problem {
    System(AtomSystem),
    Abstract(HyperTable),
}

fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

#[derive(Clone, Copy)]
struct Cursor<'a> {
    value: &'a Value,
    path: &'a str,
}

struct Owned<'a> {
    value: &'a Value,
    path: String,
}

impl<'a> Owned<'a> {
    fn cursor(&self) -> Cursor<'_> {
        Cursor {
            value: self.value,
            path: &self.path,
        }
    }
}

fn err<T>(path: &str, message: impl Into<String>) -> Result<T, DocumentError> {
    Err(DocumentError {
        pointer: path.to_string(),
        message: message.into(),
    })
}

impl<'a> Cursor<'a> {
    fn object(&self) -> Result<&'a Map<String, Value>, DocumentError> {
        self.value
            .as_object()
            .map_or_else(|| err(self.path, "expected an object"), Ok)
    }

    fn get(&self, key: &str) -> Result<Owned<'a>, DocumentError> {
        match self.opt(key)? {
            Some(c) => Ok(c),
            None => err(self.path, format!("missing key {key:?}")),
        }
    }

    fn opt(&self, key: &str) -> Result<Option<Owned<'a>>, DocumentError> {
        Ok(self.object()?.get(key).map(|value| Owned {
            value,
            path: format!("{}/{}", self.path, escape(key)),
        }))
    }

    fn array(&self) -> Result<Vec<Owned<'a>>, DocumentError> {
        let items = self
            .value
            .as_array()
            .map_or_else(|| err(self.path, "expected an array"), Ok)?;
        Ok(items
            .iter()
            .enumerate()
            .map(|(i, value)| Owned {
                value,
                path: format!("{}/{i}", self.path),
            })
            .collect())
    }

    fn string(&self) -> Result<&'a str, DocumentError> {
        self.value
            .as_str()
            .map_or_else(|| err(self.path, "expected a string"), Ok)
    }

    fn usize(&self) -> Result<usize, DocumentError> {
        self.value
            .as_u64()
            .and_then(|n| usize::try_from(n).ok())
            .map_or_else(|| err(self.path, "expected a non-negative integer"), Ok)
    }

    fn rational(&self) -> Result<Rational, DocumentError> {
        let text = match self.value {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            _ => return err(self.path, "expected a rational scalar string such as \"-3/4\""),
        };
        text.parse()
            .or_else(|_| err(self.path, format!("cannot parse scalar {text:?}")))
    }

    fn scalar(&self, field: &FieldDescriptor) -> Result<FieldElement, DocumentError> {
        if self.value.is_array() {
            let coords = self
                .array()?
                .iter()
                .map(|c| c.cursor().rational())
                .collect::<Result<Vec<_>, _>>()?;
            return field.from_coords(coords).or_else(|e| err(self.path, e.to_string()));
        }
        Ok(FieldElement::Rational(self.rational()?))
    }

    fn vector(&self, field: &FieldDescriptor, len: Option<usize>) -> Result<Vec<FieldElement>, DocumentError> {
        let items = self.array()?;
        if let Some(n) = len {
            if items.len() != n {
                return err(self.path, format!("expected {n} entries, found {}", items.len()));
            }
        }
        items.iter().map(|c| c.cursor().scalar(field)).collect()
    }
}

fn parse_field(c: Cursor<'_>) -> Result<FieldDescriptor, DocumentError> {
    let order = match c.value {
        Value::String(s) => {
            let s = s.trim();
            if s == "Q" {
                1
            } else {
                let inner = s
                    .strip_prefix("Q(zeta")
                    .and_then(|r| r.strip_suffix(')'))
                    .map(|r| r.trim_start_matches('_'));
                match inner.and_then(|r| r.parse::<u32>().ok()) {
                    Some(n) => n,
                    None => return err(c.path, format!("unknown field {s:?}; use \"Q\" or \"Q(zeta_n)\"")),
                }
            }
        }
        Value::Object(_) => {
            let n = c.get("cyclotomic")?;
            let order = n.cursor().usize()?;
            u32::try_from(order).or_else(|_| err(&n.path, "order too large"))?
        }
        _ => return err(c.path, "expected \"Q\", \"Q(zeta_n)\" or {\"cyclotomic\": n}"),
    };
    FieldDescriptor::cyclotomic(order).or_else(|e| err(c.path, e.to_string()))
}

fn parse_table(c: Cursor<'_>) -> Result<Vec<Vec<usize>>, DocumentError> {
    c.array()?
        .iter()
        .map(|row| row.cursor().array()?.iter().map(|x| x.cursor().usize()).collect())
        .collect()
}

fn parse_algebra(c: Cursor<'_>, field: &FieldDescriptor) -> Result<AlgebraSpec, DocumentError> {
    if let Some(preset) = c.opt("preset")? {
        return match preset.cursor().string()? {
            "matrix" => {
                let n = c.get("n")?;
                let value = n.cursor().usize()?;
                if value == 0 {
                    return err(&n.path, "matrix size must be positive");
                }
                Ok(AlgebraSpec::Matrix { n: value })
            }
            "poly_quotient" => Ok(AlgebraSpec::PolyQuotient {
                coefficients: c.get("coefficients")?.cursor().vector(field, None)?,
            }),
            "monoid_algebra" => Ok(AlgebraSpec::MonoidAlgebra {
                table: parse_table(c.get("table")?.cursor())?,
            }),
            other => err(&preset.path, format!("unknown preset {other:?}")),
        };
    }
    let dim_c = c.get("dim")?;
    let dim = dim_c.cursor().usize()?;
    if dim == 0 {
        return err(&dim_c.path, "dimension must be positive");
    }
    let s = c.get("structure")?;
    let slices = s.cursor().array()?;
    if slices.len() != dim {
        return err(&s.path, format!("expected {dim} slices, found {}", slices.len()));
    }
    let mut structure = Vec::with_capacity(dim);
    for slice in &slices {
        let rows = slice.cursor().array()?;
        if rows.len() != dim {
            return err(&slice.path, format!("expected {dim} rows, found {}", rows.len()));
        }
        structure.push(
            rows.iter()
                .map(|r| r.cursor().vector(field, Some(dim)))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let one = c.get("one")?.cursor().vector(field, Some(dim))?;
    Ok(AlgebraSpec::Explicit { dim, structure, one })
}

fn algebra_dim(spec: &AlgebraSpec) -> Option<usize> {
    match spec {
        AlgebraSpec::Matrix { n } => Some(n * n),
        AlgebraSpec::PolyQuotient { coefficients } => coefficients.len().checked_sub(1),
        AlgebraSpec::MonoidAlgebra { table } => Some(table.len()),
        AlgebraSpec::Explicit { dim, .. } => Some(*dim),
    }
}

fn check_name(path: &str, name: &str) -> Result<(), DocumentError> {
    if name.is_empty() || name.contains(',') {
        return err(
            path,
            format!("atom name {name:?} must be nonempty and contain no comma"),
        );
    }
    Ok(())
}

fn parse_abstract(c: Cursor<'_>) -> Result<AbstractSpec, DocumentError> {
    let atoms_c = c.get("atoms")?;
    let mut atoms = Vec::new();
    for a in atoms_c.cursor().array()? {
        let name = a.cursor().string()?.to_string();
        check_name(&a.path, &name)?;
        if atoms.contains(&name) {
            return err(&a.path, format!("duplicate atom {name:?}"));
        }
        atoms.push(name);
    }
    let known = |path: &str, n: &str| -> Result<String, DocumentError> {
        if atoms.iter().any(|a| a == n) {
            Ok(n.to_string())
        } else {
            err(path, format!("unknown atom {n:?}"))
        }
    };
    let identity = match c.opt("identity")? {
        Some(i) if !i.value.is_null() => Some(known(&i.path, i.cursor().string()?)?),
        _ => None,
    };
    let table_c = c.get("table")?;
    let mut table = BTreeMap::new();
    for (key, value) in table_c.cursor().object()? {
        let path = format!("{}/{}", table_c.path, escape(key));
        let Some((l, r)) = key.split_once(',') else {
            return err(&path, format!("key {key:?} is not of the form \"left,right\""));
        };
        let (l, r) = (known(&path, l.trim())?, known(&path, r.trim())?);
        let cell = Cursor { value, path: &path };
        let mut out: Vec<String> = Vec::new();
        for z in cell.array()? {
            let name = known(&z.path, z.cursor().string()?)?;
            if !out.contains(&name) {
                out.push(name);
            }
        }
        if table.insert((l.clone(), r.clone()), out).is_some() {
            return err(&path, format!("duplicate entry for {l},{r}"));
        }
    }
    for l in &atoms {
        for r in &atoms {
            if !table.contains_key(&(l.clone(), r.clone())) {
                return err(
                    &table_c.path,
                    format!("missing entry \"{l},{r}\"; the table must be total"),
                );
            }
        }
    }
    Ok(AbstractSpec { atoms, identity, table })
}

impl ProblemDocument {
    pub fn parse_str(text: &str) -> Result<ProblemDocument, DocumentError> {
        let value: Value = serde_json::from_str(text).or_else(|e| err("", format!("malformed JSON: {e}")))?;
        ProblemDocument::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<ProblemDocument, DocumentError> {
        let root = Cursor { value, path: "" };
        let field = match root.opt("field")? {
            Some(f) => parse_field(f.cursor())?,
            None => FieldDescriptor::Rational,
        };
        let commands = match root.opt("commands")? {
            Some(c) => c
                .cursor()
                .array()?
                .iter()
                .map(|x| x.cursor().string().map(str::to_string))
                .collect::<Result<_, _>>()?,
            None => Vec::new(),
        };
        let atoms = root.opt("atoms")?;
        let abs = root.opt("abstract")?;
        let body = match (atoms, abs) {
            (Some(_), Some(_)) => return err("", "give either \"atoms\" or \"abstract\", not both"),
            (None, None) => return err("", "missing \"atoms\" or \"abstract\" block"),
            (None, Some(a)) => ProblemBody::Abstract(parse_abstract(a.cursor())?),
            (Some(a), None) => {
                let alg = root.get("algebra")?;
                let algebra = parse_algebra(alg.cursor(), &field)?;
                let dim = algebra_dim(&algebra);
                let mut specs: Vec<AtomSpec> = Vec::new();
                for (i, item) in a.cursor().array()?.iter().enumerate() {
                    let c = item.cursor();
                    let name = match c.opt("name")? {
                        Some(n) => n.cursor().string()?.to_string(),
                        None => format!("atom_{i}"),
                    };
                    check_name(&item.path, &name)?;
                    if specs.iter().any(|s| s.name == name) {
                        return err(&item.path, format!("duplicate atom name {name:?}"));
                    }
                    let basis_c = c.get("basis")?;
                    let basis = basis_c
                        .cursor()
                        .array()?
                        .iter()
                        .map(|v| v.cursor().vector(&field, dim))
                        .collect::<Result<Vec<_>, _>>()?;
                    specs.push(AtomSpec { name, basis });
                }
                let identity = match root.opt("identity")? {
                    Some(i) => {
                        let n = i.cursor().string()?;
                        if !specs.iter().any(|s| s.name == n) {
                            return err(&i.path, format!("unknown atom {n:?}"));
                        }
                        Some(n.to_string())
                    }
                    None => None,
                };
                ProblemBody::Atoms {
                    algebra,
                    atoms: specs,
                    identity,
                }
            }
        };
        Ok(ProblemDocument { field, body, commands })
    }

    /// Canonical JSON: scalars as strings (or coordinate arrays when not
    /// rational), keys sorted.
    pub fn to_value(&self) -> Value {
        let scalar = |x: &FieldElement| -> Value {
            match x.as_rational() {
                Some(r) => Value::String(r.to_string()),
                None => Value::Array(
                    self.field
                        .coords(x)
                        .expect("document scalars lie in the document field")
                        .iter()
                        .map(|r| Value::String(r.to_string()))
                        .collect(),
                ),
            }
        };
        let vector = |v: &[FieldElement]| Value::Array(v.iter().map(scalar).collect());
        let mut root = Map::new();
        root.insert("field".into(), Value::String(self.field.to_string()));
        if !self.commands.is_empty() {
            root.insert("commands".into(), json!(self.commands));
        }
        match &self.body {
            ProblemBody::Atoms {
                algebra,
                atoms,
                identity,
            } => {
                let alg = match algebra {
                    AlgebraSpec::Matrix { n } => json!({"preset": "matrix", "n": n}),
                    AlgebraSpec::PolyQuotient { coefficients } => {
                        json!({"preset": "poly_quotient", "coefficients": vector(coefficients)})
                    }
                    AlgebraSpec::MonoidAlgebra { table } => json!({"preset": "monoid_algebra", "table": table}),
                    AlgebraSpec::Explicit { dim, structure, one } => json!({
                        "dim": dim,
                        "structure": structure
                            .iter()
                            .map(|slice| Value::Array(slice.iter().map(|r| vector(r)).collect()))
                            .collect::<Vec<_>>(),
                        "one": vector(one),
                    }),
                };
                root.insert("algebra".into(), alg);
                root.insert(
                    "atoms".into(),
                    Value::Array(
                        atoms
                            .iter()
                            .map(|a| {
                                json!({
                                    "name": a.name,
                                    "basis": a.basis.iter().map(|v| vector(v)).collect::<Vec<_>>(),
                                })
                            })
                            .collect(),
                    ),
                );
                if let Some(i) = identity {
                    root.insert("identity".into(), Value::String(i.clone()));
                }
            }
            ProblemBody::Abstract(a) => {
                let table: Map<String, Value> = a
                    .table
                    .iter()
                    .map(|((l, r), v)| (format!("{l},{r}"), json!(v)))
                    .collect();
                let mut abs = Map::new();
                abs.insert("atoms".into(), json!(a.atoms));
                if let Some(i) = &a.identity {
                    abs.insert("identity".into(), Value::String(i.clone()));
                }
                abs.insert("table".into(), Value::Object(table));
                root.insert("abstract".into(), Value::Object(abs));
            }
        }
        Value::Object(root)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("values serialize")
    }

    /// Builds the algebra and atom system, or the abstract table. Algebraic
    /// failures (non-associative structure, dependent atoms, ...) are reported
    /// as [`BuildError`] so callers can tell them apart from malformed input.
    pub fn build(&self) -> Result<Problem, BuildError> {
        match &self.body {
            ProblemBody::Abstract(a) => {
                let idx = |n: &str| a.atoms.iter().position(|x| x == n).expect("names were validated");
                let entries = a
                    .atoms
                    .iter()
                    .map(|l| {
                        a.atoms
                            .iter()
                            .map(|r| {
                                a.table[&(l.clone(), r.clone())]
                                    .iter()
                                    .map(|z| idx(z))
                                    .collect::<AtomSet>()
                            })
                            .collect()
                    })
                    .collect();
                let table = HyperTable::from_abstract(a.atoms.clone(), a.identity.as_deref().map(idx), entries)
                    .map_err(|e| {
                        BuildError::Invalid(DocumentError {
                            pointer: "/abstract".into(),
                            message: e.to_string(),
                        })
                    })?;
                Ok(Problem::Abstract(table))
            }
            ProblemBody::Atoms {
                algebra,
                atoms,
                identity,
            } => {
                let alg = match algebra {
                    AlgebraSpec::Matrix { n } => Algebra::matrix_algebra_over(self.field.clone(), *n),
                    AlgebraSpec::PolyQuotient { coefficients } => {
                        Algebra::poly_quotient(self.field.clone(), coefficients).map_err(BuildError::algebra)?
                    }
                    AlgebraSpec::MonoidAlgebra { table } => {
                        Algebra::monoid_algebra(table).map_err(BuildError::algebra)?
                    }
                    AlgebraSpec::Explicit { dim, structure, one } => {
                        Algebra::from_structure_constants(self.field.clone(), *dim, structure.clone(), one.clone())
                            .map_err(BuildError::algebra)?
                    }
                };
                if let Some(bad) = atoms
                    .iter()
                    .flat_map(|a| a.basis.iter().flatten())
                    .find(|x| !alg.field().contains(x))
                {
                    return Err(BuildError::Invalid(DocumentError {
                        pointer: "/atoms".into(),
                        message: format!("scalar {bad} is not in {}", alg.field()),
                    }));
                }
                let mut built = Vec::with_capacity(atoms.len());
                for (i, a) in atoms.iter().enumerate() {
                    let s = Subspace::canonicalize(&a.basis, alg.dim()).map_err(|e| {
                        BuildError::Invalid(DocumentError {
                            pointer: format!("/atoms/{i}/basis"),
                            message: e.to_string(),
                        })
                    })?;
                    built.push(Atom::new(a.name.clone(), s));
                }
                let identity = identity
                    .as_ref()
                    .map(|n| atoms.iter().position(|a| &a.name == n).expect("validated"));
                let sys = AtomSystem::new(alg, built, identity).map_err(BuildError::Semiring)?;
                Ok(Problem::System(sys))
            }
        }
    }

    /// An explicit document describing an atom system.
    pub fn from_system(sys: &AtomSystem) -> ProblemDocument {
        let alg = sys.algebra();
        let structure = alg.structure();
        ProblemDocument {
            field: alg.field().clone(),
            body: ProblemBody::Atoms {
                algebra: AlgebraSpec::Explicit {
                    dim: alg.dim(),
                    structure,
                    one: alg.one().to_vec(),
                },
                atoms: sys
                    .atoms()
                    .iter()
                    .map(|a| AtomSpec {
                        name: a.name.clone(),
                        basis: a.subspace.basis_vectors().map(<[FieldElement]>::to_vec).collect(),
                    })
                    .collect(),
                identity: Some(sys.atoms()[sys.identity()].name.clone()),
            },
            commands: Vec::new(),
        }
    }

    /// An abstract document describing a table.
    pub fn from_table(table: &HyperTable) -> ProblemDocument {
        let n = table.len();
        let mut map = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                map.insert(
                    (table.name(i).to_string(), table.name(j).to_string()),
                    table.names_of(table.entry(i, j)),
                );
            }
        }
        ProblemDocument {
            field: FieldDescriptor::Rational,
            body: ProblemBody::Abstract(AbstractSpec {
                atoms: table.names().to_vec(),
                identity: table.identity().map(|i| table.name(i).to_string()),
                table: map,
            }),
            commands: Vec::new(),
        }
    }
}

/// A well-formed document whose mathematical content is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    /// Malformed in a way only detectable after parsing; treated as invalid input.
    Invalid(DocumentError),
    /// The structure constants do not define an associative unital algebra.
    Algebra(String),
    /// The atoms violate independence, identity or nonzero requirements.
    Semiring(crate::semiring::SemiringError),
}

impl BuildError {
    fn algebra(e: crate::algebra::AlgebraError) -> BuildError {
        BuildError::Algebra(e.to_string())
    }
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Invalid(e) => write!(f, "{e}"),
            BuildError::Algebra(e) => write!(f, "algebra rejected: {e}"),
            BuildError::Semiring(e) => write!(f, "atom system rejected: {e}"),
        }
    }
}

impl std::error::Error for BuildError {}

#[cfg(test)]
mod tests {
    use super::*;

    const QUOTIENT: &str = r#"{
        "field": "Q",
        "algebra": {"preset": "poly_quotient", "coefficients": ["-1", 0, "1"]},
        "atoms": [
            {"name": "k", "basis": [["1", "0"]]},
            {"name": "X", "basis": [["0", "2/3"]]}
        ]
    }"#;

    #[test]
    fn parses_and_builds_quotient() {
        let doc = ProblemDocument::parse_str(QUOTIENT).unwrap();
        let Problem::System(sys) = doc.build().unwrap() else {
            panic!("expected a system")
        };
        let t = sys.verify().unwrap();
        assert_eq!(t.names_of(t.entry(1, 1)), vec!["k"]);
    }

    #[test]
    fn round_trip() {
        let doc = ProblemDocument::parse_str(QUOTIENT).unwrap();
        let again = ProblemDocument::parse_str(&doc.to_json_string()).unwrap();
        assert_eq!(doc, again);
        let abs = r#"{"abstract": {"atoms": ["e", "x"], "identity": "e",
            "table": {"e,e": ["e"], "e,x": ["x"], "x,e": ["x"], "x,x": ["e", "x"]}}}"#;
        let doc = ProblemDocument::parse_str(abs).unwrap();
        assert_eq!(ProblemDocument::parse_str(&doc.to_json_string()).unwrap(), doc);
    }

    #[test]
    fn cyclotomic_scalars() {
        let text = r#"{
            "field": "Q(zeta_3)",
            "algebra": {"preset": "matrix", "n": 1},
            "atoms": [{"name": "k", "basis": [[["0", "1"]]]}]
        }"#;
        let doc = ProblemDocument::parse_str(text).unwrap();
        let Problem::System(sys) = doc.build().unwrap() else {
            panic!()
        };
        assert_eq!(sys.len(), 1);
        assert_eq!(ProblemDocument::parse_str(&doc.to_json_string()).unwrap(), doc);
    }

    #[test]
    fn error_pointers() {
        let e = ProblemDocument::parse_str(r#"{"atoms": [], "abstract": {}}"#).unwrap_err();
        assert_eq!(e.pointer, "");
        let bad_scalar = QUOTIENT.replace("\"2/3\"", "\"two\"");
        let e = ProblemDocument::parse_str(&bad_scalar).unwrap_err();
        assert_eq!(e.pointer, "/atoms/1/basis/0/1");
        let short = QUOTIENT.replace("[\"0\", \"2/3\"]", "[\"0\"]");
        assert_eq!(
            ProblemDocument::parse_str(&short).unwrap_err().pointer,
            "/atoms/1/basis/0"
        );
        let missing = r#"{"abstract": {"atoms": ["e", "x"], "table": {"e,e": ["e"]}}}"#;
        let e = ProblemDocument::parse_str(missing).unwrap_err();
        assert_eq!(e.pointer, "/abstract/table");
        let unknown = r#"{"abstract": {"atoms": ["e"], "table": {"e,e": ["q"]}}}"#;
        assert_eq!(
            ProblemDocument::parse_str(unknown).unwrap_err().pointer,
            "/abstract/table/e,e/0"
        );
        assert_eq!(ProblemDocument::parse_str("{").unwrap_err().pointer, "");
        let field = r#"{"field": "R", "abstract": {"atoms": [], "table": {}}}"#;
        assert_eq!(ProblemDocument::parse_str(field).unwrap_err().pointer, "/field");
    }

    #[test]
    fn dependent_atoms_fail_at_build() {
        let dup = QUOTIENT.replace(
            "\"2/3\"]]}",
            "\"2/3\"]]}, {\"name\": \"Y\", \"basis\": [[\"0\", \"1\"]]}",
        );
        let doc = ProblemDocument::parse_str(&dup).unwrap();
        assert!(matches!(
            doc.build(),
            Err(BuildError::Semiring(crate::semiring::SemiringError::NotIndependent(_)))
        ));
    }

    #[test]
    fn system_echo_round_trips() {
        let doc = ProblemDocument::parse_str(QUOTIENT).unwrap();
        let Problem::System(sys) = doc.build().unwrap() else {
            panic!()
        };
        let echo = ProblemDocument::from_system(&sys);
        let Problem::System(again) = ProblemDocument::parse_str(&echo.to_json_string())
            .unwrap()
            .build()
            .unwrap()
        else {
            panic!()
        };
        assert_eq!(again.verify().unwrap(), sys.verify().unwrap());
    }
}
