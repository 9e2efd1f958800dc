//! Exact scalars: rationals and cyclotomic numbers.
//!
//! [`FieldElement`] is the scalar every other module computes with. Rational
//! values may be mixed freely with cyclotomic ones (they embed into every
//! Q(ζ_n)); mixing two different cyclotomic fields is a programming error and
//! panics in the operator impls.

mod cyclotomic;
mod rational;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

pub use cyclotomic::{CycloElement, CyclotomicField};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("invalid cyclotomic order {0}")]
    InvalidOrder(u32),
    #[error("expected {expected} power-basis coordinates, found {found}")]
    CoordinateLength { expected: usize, found: usize },
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("value in Q(zeta_{value_order}) does not embed in {target}")]
    FieldTooSmall { value_order: u32, target: FieldDescriptor },
}

/// Which base field a document or algebra lives over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDescriptor {
    Rational,
    Cyclotomic(CyclotomicField),
}

impl FieldDescriptor {
    /// Q(ζ_n); orders 1 and 2 collapse to the rationals.
    pub fn cyclotomic(order: u32) -> Result<Self, FieldError> {
        match order {
            0 => Err(FieldError::InvalidOrder(0)),
            1 | 2 => Ok(FieldDescriptor::Rational),
            n => Ok(FieldDescriptor::Cyclotomic(CyclotomicField::new(n)?)),
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            FieldDescriptor::Rational => 1,
            FieldDescriptor::Cyclotomic(f) => f.order(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            FieldDescriptor::Rational => 1,
            FieldDescriptor::Cyclotomic(f) => f.degree(),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero()
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::one()
    }

    /// A primitive n-th root of unity raised to `k`.
    pub fn zeta_pow(&self, k: i64) -> FieldElement {
        match self {
            FieldDescriptor::Rational => FieldElement::one(),
            FieldDescriptor::Cyclotomic(f) => FieldElement::Cyclo(f.zeta_pow(k)).normalized(),
        }
    }

    /// Whether `value` can be represented in this field.
    pub fn contains(&self, value: &FieldElement) -> bool {
        match value {
            FieldElement::Rational(_) => true,
            FieldElement::Cyclo(c) => c.as_rational().is_some() || c.order() == self.order(),
        }
    }

    /// Re-express `value` in this field, or fail with [`FieldError::FieldTooSmall`].
    pub fn embed(&self, value: &FieldElement) -> Result<FieldElement, FieldError> {
        if self.contains(value) {
            Ok(value.clone().normalized())
        } else {
            Err(FieldError::FieldTooSmall {
                value_order: value.order(),
                target: self.clone(),
            })
        }
    }

    /// Power-basis coordinates of `value` (length φ(n)).
    pub fn coords(&self, value: &FieldElement) -> Result<Vec<Rational>, FieldError> {
        match (self, value) {
            (FieldDescriptor::Rational, FieldElement::Rational(r)) => Ok(vec![r.clone()]),
            (FieldDescriptor::Cyclotomic(f), FieldElement::Rational(r)) => {
                Ok(f.from_rational(r.clone()).coords().to_vec())
            }
            (FieldDescriptor::Cyclotomic(f), FieldElement::Cyclo(c)) if c.order() == f.order() => {
                Ok(c.coords().to_vec())
            }
            _ => Err(FieldError::FieldTooSmall {
                value_order: value.order(),
                target: self.clone(),
            }),
        }
    }

    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<FieldElement, FieldError> {
        match self {
            FieldDescriptor::Rational => {
                if coords.len() != 1 {
                    return Err(FieldError::CoordinateLength {
                        expected: 1,
                        found: coords.len(),
                    });
                }
                Ok(FieldElement::Rational(coords.into_iter().next().unwrap()))
            }
            FieldDescriptor::Cyclotomic(f) => Ok(FieldElement::Cyclo(f.from_coords(coords)?).normalized()),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::Cyclotomic(c) => write!(f, "Q(zeta_{})", c.order()),
        }
    }
}

/// Exact scalar: a rational number or an element of some Q(ζ_n).
///
/// Cyclotomic values that happen to be rational are stored as
/// [`FieldElement::Rational`], so each value has exactly one representation.
#[derive(Clone)]
pub enum FieldElement {
    Rational(Rational),
    Cyclo(CycloElement),
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        FieldElement::Rational(Rational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        FieldElement::Rational(Rational::from(n))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Cyclo(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, FieldElement::Rational(r) if r.is_one())
    }

    /// Cyclotomic order of the smallest field this value was built in (1 for rationals).
    pub fn order(&self) -> u32 {
        match self {
            FieldElement::Rational(_) => 1,
            FieldElement::Cyclo(c) => c.order(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Cyclo(_) => None,
        }
    }

    fn normalized(self) -> Self {
        match self {
            FieldElement::Cyclo(c) => match c.as_rational() {
                Some(r) => FieldElement::Rational(r.clone()),
                None => FieldElement::Cyclo(c),
            },
            r => r,
        }
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        match self {
            FieldElement::Rational(r) => Ok(FieldElement::Rational(r.inv()?)),
            FieldElement::Cyclo(c) => Ok(FieldElement::Cyclo(c.inverse()?).normalized()),
        }
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self * &other.inv()?)
    }

    fn combine(
        &self,
        other: &FieldElement,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        cyc: impl Fn(&CycloElement, &CycloElement) -> CycloElement,
    ) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(rat(a, b)),
            (FieldElement::Cyclo(a), FieldElement::Cyclo(b)) => FieldElement::Cyclo(cyc(a, b)).normalized(),
            (FieldElement::Rational(a), FieldElement::Cyclo(b)) => {
                FieldElement::Cyclo(cyc(&b.field().from_rational(a.clone()), b)).normalized()
            }
            (FieldElement::Cyclo(a), FieldElement::Rational(b)) => {
                FieldElement::Cyclo(cyc(a, &a.field().from_rational(b.clone()))).normalized()
            }
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a == b,
            (FieldElement::Cyclo(a), FieldElement::Cyclo(b)) => a == b,
            (FieldElement::Rational(a), FieldElement::Cyclo(b))
            | (FieldElement::Cyclo(b), FieldElement::Rational(a)) => b.as_rational() == Some(a),
        }
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            FieldElement::Rational(r) => {
                0u8.hash(state);
                r.hash(state);
            }
            FieldElement::Cyclo(c) => match c.as_rational() {
                Some(r) => {
                    0u8.hash(state);
                    r.hash(state);
                }
                None => {
                    1u8.hash(state);
                    c.hash(state);
                }
            },
        }
    }
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> Self {
        FieldElement::Rational(r)
    }
}

impl From<CycloElement> for FieldElement {
    fn from(c: CycloElement) -> Self {
        FieldElement::Cyclo(c).normalized()
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_i64(n)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => fmt::Display::fmt(r, f),
            FieldElement::Cyclo(c) => fmt::Display::fmt(c, f),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! element_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.combine(rhs, |a, b| a.$method(b), |a, b| a.$method(b))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

element_binop!(Add, add);
element_binop!(Sub, sub);
element_binop!(Mul, mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Cyclo(c) => FieldElement::Cyclo(-c),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
