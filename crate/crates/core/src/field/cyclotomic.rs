//! Arithmetic in the cyclotomic fields Q(ζ_n).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` and kept fully
//! reduced modulo the n-th cyclotomic polynomial Φ_n, so equal elements have
//! identical coordinate vectors.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use super::{FieldError, Rational};

type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Poly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Quotient and remainder; `b` must be nonzero.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    let lead_inv = b.last().expect("nonzero divisor").inv().expect("nonzero lead");
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] = &rem[shift + i] - &(&c * bi);
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn cyclotomic_polynomial(n: u32, cache: &mut HashMap<u32, Poly>) -> Poly {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    // x^n - 1 = prod_{d | n} Φ_d
    let mut num = vec![Rational::zero(); n as usize + 1];
    num[0] = -Rational::one();
    num[n as usize] = Rational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d, cache);
            let (q, r) = poly_divmod(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    cache.insert(n, num.clone());
    num
}

struct CycloData {
    order: u32,
    degree: usize,
    /// Monic Φ_n, ascending coefficients.
    modulus: Poly,
    /// `x^k mod Φ_n` for `k < 2 * degree - 1`, each of length `degree`.
    reductions: Vec<Poly>,
}

impl CycloData {
    fn build(order: u32) -> Self {
        let modulus = {
            let mut cache = HashMap::new();
            cyclotomic_polynomial(order, &mut cache)
        };
        let degree = modulus.len() - 1;
        let mut reductions = Vec::with_capacity(2 * degree);
        for k in 0..(2 * degree).max(1) {
            let mut mono = vec![Rational::zero(); k + 1];
            mono[k] = Rational::one();
            let (_, r) = poly_divmod(&mono, &modulus);
            reductions.push(pad(r, degree));
        }
        CycloData {
            order,
            degree,
            modulus,
            reductions,
        }
    }
}

fn pad(mut p: Poly, len: usize) -> Poly {
    p.resize(len, Rational::zero());
    p
}

fn registry() -> &'static Mutex<HashMap<u32, Arc<CycloData>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<u32, Arc<CycloData>>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The field Q(ζ_n). Cheap to clone; two handles of the same order are equal.
#[derive(Clone)]
pub struct CyclotomicField(Arc<CycloData>);

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Self, FieldError> {
        if order == 0 {
            return Err(FieldError::InvalidOrder(order));
        }
        let mut reg = registry().lock().expect("cyclotomic registry poisoned");
        let data = reg
            .entry(order)
            .or_insert_with(|| Arc::new(CycloData::build(order)))
            .clone();
        Ok(CyclotomicField(data))
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// φ(n), the dimension of Q(ζ_n) over Q.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Φ_n with ascending coefficients.
    pub fn modulus(&self) -> &[Rational] {
        &self.0.modulus
    }

    pub fn zero(&self) -> CycloElement {
        CycloElement {
            field: self.clone(),
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CycloElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> CycloElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = r;
        CycloElement {
            field: self.clone(),
            coords,
        }
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CycloElement {
        let n = i64::from(self.order());
        let e = k.rem_euclid(n) as usize;
        let mut mono = vec![Rational::zero(); e + 1];
        mono[e] = Rational::one();
        self.reduce(mono)
    }

    pub fn zeta(&self) -> CycloElement {
        self.zeta_pow(1)
    }

    /// Builds an element from power-basis coordinates; the input may be any
    /// polynomial in ζ and is reduced.
    pub fn element(&self, poly: Vec<Rational>) -> CycloElement {
        self.reduce(poly)
    }

    /// Exact coordinates of length φ(n); anything else is rejected.
    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<CycloElement, FieldError> {
        if coords.len() != self.degree() {
            return Err(FieldError::CoordinateLength {
                expected: self.degree(),
                found: coords.len(),
            });
        }
        Ok(CycloElement {
            field: self.clone(),
            coords,
        })
    }

    fn reduce(&self, poly: Vec<Rational>) -> CycloElement {
        let deg = self.degree();
        if poly.len() <= deg {
            return CycloElement {
                field: self.clone(),
                coords: pad(poly, deg),
            };
        }
        if poly.len() <= self.0.reductions.len() {
            let mut coords = vec![Rational::zero(); deg];
            for (k, c) in poly.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (slot, r) in coords.iter_mut().zip(&self.0.reductions[k]) {
                    if !r.is_zero() {
                        *slot = &*slot + &(c * r);
                    }
                }
            }
            return CycloElement {
                field: self.clone(),
                coords,
            };
        }
        let (_, r) = poly_divmod(&poly, &self.0.modulus);
        CycloElement {
            field: self.clone(),
            coords: pad(r, deg),
        }
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}

impl Eq for CyclotomicField {}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order())
    }
}

/// An element of Q(ζ_n) in the reduced power basis.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElement {
    field: CyclotomicField,
    coords: Vec<Rational>,
}

impl CycloElement {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// The rational value, if every non-constant coordinate vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn check_order(&self, other: &CycloElement) -> Result<(), FieldError> {
        if self.order() != other.order() {
            return Err(FieldError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycloElement) -> Result<CycloElement, FieldError> {
        self.check_order(other)?;
        Ok(CycloElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &CycloElement) -> Result<CycloElement, FieldError> {
        self.check_order(other)?;
        Ok(CycloElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &CycloElement) -> Result<CycloElement, FieldError> {
        self.check_order(other)?;
        Ok(self.field.reduce(poly_mul(&self.coords, &other.coords)))
    }

    pub fn scale(&self, r: &Rational) -> CycloElement {
        CycloElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Φ_n.
    pub fn inverse(&self) -> Result<CycloElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let modulus = self.field.modulus().to_vec();
        let (mut r0, mut r1) = (modulus, trim(self.coords.clone()));
        let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_n is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].inv()?;
        let scaled: Poly = s0.iter().map(|x| x * &c).collect();
        Ok(self.field.reduce(scaled))
    }
}

impl Hash for CycloElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coords.hash(state);
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match k {
                0 => c.to_string(),
                _ => {
                    let z = if k == 1 {
                        format!("z{}", self.order())
                    } else {
                        format!("z{}^{}", self.order(), k)
                    };
                    if c.is_one() {
                        z
                    } else if *c == -Rational::one() {
                        format!("-{z}")
                    } else {
                        format!("{c}*{z}")
                    }
                }
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! cyclo_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live in different cyclotomic fields; use the
        /// `checked_*` methods when that is not guaranteed.
        impl $trait<&CycloElement> for &CycloElement {
            type Output = CycloElement;
            fn $method(self, rhs: &CycloElement) -> CycloElement {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
    };
}

cyclo_binop!(Add, add, checked_add);
cyclo_binop!(Sub, sub, checked_sub);
cyclo_binop!(Mul, mul, checked_mul);

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |n: u32| -> Vec<String> {
            CyclotomicField::new(n)
                .unwrap()
                .modulus()
                .iter()
                .map(|c| c.to_string())
                .collect()
        };
        assert_eq!(ints(1), ["-1", "1"]);
        assert_eq!(ints(2), ["1", "1"]);
        assert_eq!(ints(3), ["1", "1", "1"]);
        assert_eq!(ints(4), ["1", "0", "1"]);
        assert_eq!(ints(6), ["1", "-1", "1"]);
        assert_eq!(ints(12), ["1", "0", "-1", "0", "1"]);
        assert_eq!(CyclotomicField::new(15).unwrap().degree(), 8);
    }

    #[test]
    fn zeta_products() {
        let f4 = CyclotomicField::new(4).unwrap();
        assert_eq!(&f4.zeta() * &f4.zeta(), f4.from_rational(q(-1)));
        let f3 = CyclotomicField::new(3).unwrap();
        let z = f3.zeta();
        assert_eq!(&z * &z, f3.element(vec![q(-1), q(-1)]));
        let one_plus_z = f3.element(vec![q(1), q(1)]);
        assert_eq!(&one_plus_z + &(-&z), f3.one());
        assert_eq!(f3.zeta_pow(3), f3.one());
        assert_eq!(f3.zeta_pow(-1), &z * &z);
    }

    #[test]
    fn inverses() {
        let f4 = CyclotomicField::new(4).unwrap();
        assert_eq!(f4.zeta().inverse().unwrap(), -&f4.zeta());
        let f3 = CyclotomicField::new(3).unwrap();
        let one_plus_z = f3.element(vec![q(1), q(1)]);
        let inv = one_plus_z.inverse().unwrap();
        // 1 + ζ3 = -ζ3^2, so its inverse is -ζ3.
        assert_eq!(inv, -&f3.zeta());
        assert_eq!(&inv * &one_plus_z, f3.one());
        assert_eq!(f3.one().inverse().unwrap(), f3.one());
        assert_eq!(f3.zero().inverse(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn order_mismatch() {
        let a = CyclotomicField::new(3).unwrap().zeta();
        let b = CyclotomicField::new(4).unwrap().zeta();
        assert_eq!(a.checked_mul(&b), Err(FieldError::OrderMismatch { left: 3, right: 4 }));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn display() {
        let f3 = CyclotomicField::new(3).unwrap();
        assert_eq!(f3.element(vec![q(1), q(-2)]).to_string(), "1 - 2*z3");
        assert_eq!(f3.zero().to_string(), "0");
    }
}
