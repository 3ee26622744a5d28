//! Ground scalars for the three coefficient domains: finite fields, rational
//! quaternions, and rational functions over Q.

pub mod ffield;
pub mod qpoly;
pub mod quat;
pub mod ratfunc;

pub use ffield::{fixed_field_basis, FiniteField, FqElem};
pub use qpoly::QPoly;
pub use quat::Quat;
pub use ratfunc::RatFunc;

/// Exact rational numbers; reduced, positive denominator.
pub type Rational = num::BigRational;

use std::fmt;

/// A coefficient in one of the supported skew polynomial rings.
///
/// Scalars are self-describing (a finite field element knows its field), so
/// arithmetic needs no extra context; mixing scalars from different domains is
/// a programming error and panics.
#[derive(Clone, PartialEq)]
pub enum Scalar {
    Fq(FqElem),
    Quat(Quat),
    RatFunc(RatFunc),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fq(x) => x.is_zero(),
            Scalar::Quat(x) => x.is_zero(),
            Scalar::RatFunc(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fq(x) => x.is_one(),
            Scalar::Quat(x) => x.is_one(),
            Scalar::RatFunc(x) => x.is_one(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fq(a), Scalar::Fq(b)) => Scalar::Fq(a.add(b)),
            (Scalar::Quat(a), Scalar::Quat(b)) => Scalar::Quat(a.add(b)),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Scalar::RatFunc(a.add(b)),
            _ => panic!("scalar domain mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Fq(a) => Scalar::Fq(a.neg()),
            Scalar::Quat(a) => Scalar::Quat(a.neg()),
            Scalar::RatFunc(a) => Scalar::RatFunc(a.neg()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fq(a), Scalar::Fq(b)) => Scalar::Fq(a.mul(b)),
            (Scalar::Quat(a), Scalar::Quat(b)) => Scalar::Quat(a.mul(b)),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Scalar::RatFunc(a.mul(b)),
            _ => panic!("scalar domain mismatch"),
        }
    }

    /// Multiplicative inverse; every nonzero scalar in these domains has one.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Fq(a) => Scalar::Fq(a.inv()),
            Scalar::Quat(a) => Scalar::Quat(a.inv()),
            Scalar::RatFunc(a) => Scalar::RatFunc(a.inv()),
        }
    }

    pub fn as_fq(&self) -> &FqElem {
        match self {
            Scalar::Fq(x) => x,
            _ => panic!("expected finite field scalar"),
        }
    }

    pub fn as_quat(&self) -> &Quat {
        match self {
            Scalar::Quat(x) => x,
            _ => panic!("expected quaternion scalar"),
        }
    }

    pub fn as_ratfunc(&self) -> &RatFunc {
        match self {
            Scalar::RatFunc(x) => x,
            _ => panic!("expected rational function scalar"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fq(x) => x.fmt(f),
            Scalar::Quat(x) => x.fmt(f),
            Scalar::RatFunc(x) => x.fmt(f),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
