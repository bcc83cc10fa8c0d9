//! Global-field descriptors, places, local Euler factors and the adelic
//! covolume.
//!
//! Number fields are limited to `Q` and quadratic fields; function fields
//! are `F_q(T)` and curves over `F_q` described by their L-polynomial.

mod finite;
mod lpoly;
mod places;
mod spec;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{domain, Result};
use crate::kernel::{is_squarefree, KroneckerCharacter};

pub use finite::{is_prime, prime_power, FiniteField};
pub use lpoly::{lpoly_from_point_counts, LPolynomial, LPolynomialFromCounts, WeilBoundWarning};
pub use places::{
    enumerate_places, local_euler_factor, prime_euler_factor, splitting_type,
    truncated_euler_product, Place, PlaceKind, SplittingType,
};
pub use spec::{parse_field_spec, ParsedField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberFieldKind {
    Rationals,
    /// `Q(sqrt(d))` with `d` squarefree, `d != 0, 1`.
    Quadratic {
        d: i64,
    },
}

/// `Q` or a quadratic field, with its discriminant and signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NumberFieldDescriptor {
    pub kind: NumberFieldKind,
    pub discriminant: i64,
    /// Number of real places.
    pub r1: u32,
    /// Number of complex places.
    pub r2: u32,
}

impl NumberFieldDescriptor {
    pub fn degree(&self) -> u32 {
        self.r1 + 2 * self.r2
    }

    /// `chi_D`; the trivial character for `Q`.
    pub fn character(&self) -> KroneckerCharacter {
        match self.kind {
            NumberFieldKind::Rationals => KroneckerCharacter::trivial(),
            NumberFieldKind::Quadratic { .. } => KroneckerCharacter::new(self.discriminant)
                .expect("quadratic discriminants are fundamental"),
        }
    }
}

/// A function field over `F_q` given by `q` and its L-polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionFieldDescriptor {
    q: u64,
    genus: usize,
    lpoly: LPolynomial,
}

impl FunctionFieldDescriptor {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn lpoly(&self) -> &LPolynomial {
        &self.lpoly
    }

    /// Genus zero. Every genus-0 function field over a finite field is
    /// rational, so this is `F_q(T)`.
    pub fn is_rational(&self) -> bool {
        self.genus == 0
    }

    /// Skips the prime-power and symmetry checks. Only meant for tests that
    /// need a descriptor the constructors would refuse.
    #[doc(hidden)]
    pub fn from_parts_unchecked(q: u64, lpoly: LPolynomial) -> Self {
        Self {
            q,
            genus: lpoly.genus(),
            lpoly,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Number(NumberFieldDescriptor),
    Function(FunctionFieldDescriptor),
}

impl FieldDescriptor {
    /// `(r1, r2)`; `(0, 0)` for function fields.
    pub fn signature(&self) -> (u32, u32) {
        match self {
            FieldDescriptor::Number(nf) => (nf.r1, nf.r2),
            FieldDescriptor::Function(_) => (0, 0),
        }
    }
}

impl From<NumberFieldDescriptor> for FieldDescriptor {
    fn from(nf: NumberFieldDescriptor) -> Self {
        FieldDescriptor::Number(nf)
    }
}

impl From<FunctionFieldDescriptor> for FieldDescriptor {
    fn from(ff: FunctionFieldDescriptor) -> Self {
        FieldDescriptor::Function(ff)
    }
}

impl fmt::Display for FieldDescriptor {
    /// The canonical field-spec string, accepted back by [`parse_field_spec`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Number(nf) => match nf.kind {
                NumberFieldKind::Rationals => f.write_str("Q"),
                NumberFieldKind::Quadratic { d } => write!(f, "Q(sqrt={d})"),
            },
            FieldDescriptor::Function(ff) if ff.is_rational() => write!(f, "Fq(T)?q={}", ff.q),
            FieldDescriptor::Function(ff) => write!(f, "curve?q={}&L={}", ff.q, ff.lpoly),
        }
    }
}

impl std::str::FromStr for FieldDescriptor {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_field_spec(s).map(|parsed| parsed.field)
    }
}

pub fn make_rationals() -> NumberFieldDescriptor {
    NumberFieldDescriptor {
        kind: NumberFieldKind::Rationals,
        discriminant: 1,
        r1: 1,
        r2: 0,
    }
}

/// `Q(sqrt(d))`: discriminant `d` if `d = 1 mod 4`, else `4d`.
pub fn make_quadratic(d: i64) -> Result<NumberFieldDescriptor> {
    if d == 0 || d == 1 {
        return Err(domain(format!("Q(sqrt({d})) is not a quadratic field")));
    }
    if !is_squarefree(d) {
        return Err(domain(format!("{d} is not squarefree")));
    }
    let discriminant = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    let (r1, r2) = if d > 0 { (2, 0) } else { (0, 1) };
    Ok(NumberFieldDescriptor {
        kind: NumberFieldKind::Quadratic { d },
        discriminant,
        r1,
        r2,
    })
}

pub fn make_rational_function_field(q: u64) -> Result<FunctionFieldDescriptor> {
    check_prime_power(q)?;
    Ok(FunctionFieldDescriptor {
        q,
        genus: 0,
        lpoly: LPolynomial::one(),
    })
}

/// Rejects L-polynomials that are not symmetric for `q` with
/// [`Error::Symmetry`](crate::Error::Symmetry).
pub fn make_curve_function_field(q: u64, lpoly: LPolynomial) -> Result<FunctionFieldDescriptor> {
    check_prime_power(q)?;
    lpoly.check_symmetry(q)?;
    Ok(FunctionFieldDescriptor {
        q,
        genus: lpoly.genus(),
        lpoly,
    })
}

fn check_prime_power(q: u64) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(domain(format!("q = {q} is not a prime power")));
    }
    Ok(())
}

/// `beta(A/k)`: `sqrt|D|` for number fields, `q^(g-1)` for function fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Covolume {
    SqrtDiscriminant { abs_discriminant: u64 },
    ConstantFieldPower { q: u64, exponent: i64 },
}

impl Covolume {
    pub fn value(&self) -> f64 {
        match *self {
            Covolume::SqrtDiscriminant { abs_discriminant } => (abs_discriminant as f64).sqrt(),
            Covolume::ConstantFieldPower { q, exponent } => (q as f64).powi(exponent as i32),
        }
    }

    /// Natural logarithm, from the exact data rather than from [`Self::value`].
    pub fn ln(&self) -> f64 {
        match *self {
            Covolume::SqrtDiscriminant { abs_discriminant } => 0.5 * (abs_discriminant as f64).ln(),
            Covolume::ConstantFieldPower { q, exponent } => exponent as f64 * (q as f64).ln(),
        }
    }

    /// The exact rational value, when there is one.
    pub fn exact(&self) -> Option<BigRational> {
        match *self {
            Covolume::SqrtDiscriminant { abs_discriminant } => {
                let root = abs_discriminant.sqrt();
                (root * root == abs_discriminant)
                    .then(|| BigRational::from_integer(BigInt::from(root)))
            }
            Covolume::ConstantFieldPower { q, exponent } => {
                let base = BigRational::from_integer(BigInt::from(q));
                Some(if exponent >= 0 {
                    num_traits::pow(base, exponent as usize)
                } else {
                    BigRational::one() / num_traits::pow(base, exponent.unsigned_abs() as usize)
                })
            }
        }
    }
}

impl fmt::Display for Covolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.exact(), self) {
            (Some(r), _) => write!(f, "{r}"),
            (None, Covolume::SqrtDiscriminant { abs_discriminant }) => {
                write!(f, "sqrt({abs_discriminant})")
            }
            (None, Covolume::ConstantFieldPower { .. }) => unreachable!(),
        }
    }
}

pub fn covolume(field: &FieldDescriptor) -> Covolume {
    match field {
        FieldDescriptor::Number(nf) => Covolume::SqrtDiscriminant {
            abs_discriminant: nf.discriminant.unsigned_abs(),
        },
        FieldDescriptor::Function(ff) => Covolume::ConstantFieldPower {
            q: ff.q,
            exponent: ff.genus as i64 - 1,
        },
    }
}
