//! Ring descriptors for the three supported skew polynomial rings.

use crate::error::{Error, Result};
use crate::scalars::{FiniteField, FqElem, Quat, RatFunc, Scalar};
use std::fmt;
use std::sync::Arc;

/// One of the three concrete skew polynomial rings.
///
/// * `Ff { field, s }` — F_q[t; σ] with σ = Frobenius^s, so t·c = c^(p^s)·t.
/// * `Hq` — H_Q[t], ordinary polynomials with rational quaternion
///   coefficients (identity twist; the coefficients themselves do not
///   commute).
/// * `QxShift` — Q(x)[t; σ] with σ(f(x)) = f(x+1), so t·f(x) = f(x+1)·t.
///
/// The descriptor is cheap to clone (the finite field is shared) and two
/// descriptors compare equal exactly when they present the same ring.
#[derive(Clone, PartialEq)]
pub enum SkewRing {
    Ff { field: Arc<FiniteField>, s: usize },
    Hq,
    QxShift,
}

impl SkewRing {
    /// F_q[t; Frobenius^s]. Fails if `q` is not a prime power.
    pub fn ff(q: u64, s: usize) -> Result<SkewRing> {
        let field = FiniteField::with_order(q)?;
        Ok(SkewRing::Ff { field, s })
    }

    pub fn hq() -> SkewRing {
        SkewRing::Hq
    }

    pub fn qx_shift() -> SkewRing {
        SkewRing::QxShift
    }

    /// The multiplicative order of the twist σ, or `None` when it is
    /// infinite (the shift on Q(x)).
    pub fn sigma_order(&self) -> Option<usize> {
        match self {
            SkewRing::Ff { field, s } => {
                let m = field.ext_degree();
                Some(m / gcd(m, s % m.max(1)))
            }
            SkewRing::Hq => Some(1),
            SkewRing::QxShift => None,
        }
    }

    /// Whether the twist is the identity *and* coefficients commute, i.e.
    /// the ring is an ordinary commutative polynomial ring.
    pub fn is_commutative(&self) -> bool {
        match self {
            SkewRing::Ff { .. } => self.sigma_order() == Some(1),
            SkewRing::Hq | SkewRing::QxShift => false,
        }
    }

    /// Whether every nonzero element of the ring is bounded (generates a
    /// left ideal containing a nonzero two-sided ideal). True for the two
    /// finite-dimensional-over-center rings, false for the shift ring.
    pub fn fully_bounded(&self) -> bool {
        !matches!(self, SkewRing::QxShift)
    }

    pub fn field(&self) -> Option<&Arc<FiniteField>> {
        match self {
            SkewRing::Ff { field, .. } => Some(field),
            _ => None,
        }
    }

    /// Apply σ^k to a scalar. `k` may be negative; every supported twist is
    /// an automorphism, so negative powers are well defined.
    pub fn apply_sigma(&self, c: &Scalar, k: i64) -> Scalar {
        match self {
            SkewRing::Ff { field, s } => {
                let m = field.ext_degree() as i64;
                let e = ((*s as i64) * k).rem_euclid(m) as usize;
                Scalar::Fq(c.as_fq().frobenius(e))
            }
            SkewRing::Hq => c.clone(),
            SkewRing::QxShift => Scalar::RatFunc(c.as_ratfunc().shift_arg(k)),
        }
    }

    pub fn zero_scalar(&self) -> Scalar {
        match self {
            SkewRing::Ff { field, .. } => Scalar::Fq(FqElem::zero(field)),
            SkewRing::Hq => Scalar::Quat(Quat::zero()),
            SkewRing::QxShift => Scalar::RatFunc(RatFunc::zero()),
        }
    }

    pub fn one_scalar(&self) -> Scalar {
        match self {
            SkewRing::Ff { field, .. } => Scalar::Fq(FqElem::one(field)),
            SkewRing::Hq => Scalar::Quat(Quat::one()),
            SkewRing::QxShift => Scalar::RatFunc(RatFunc::one()),
        }
    }

    /// The image of the integer `n` in the coefficient domain.
    pub fn int_scalar(&self, n: i64) -> Scalar {
        match self {
            SkewRing::Ff { field, .. } => {
                let p = field.p() as i64;
                Scalar::Fq(FqElem::from_u64(field, n.rem_euclid(p) as u64))
            }
            SkewRing::Hq => Scalar::Quat(Quat::from_ints(n, 0, 0, 0)),
            SkewRing::QxShift => Scalar::RatFunc(RatFunc::from_int(n)),
        }
    }

    /// Coefficient-domain generators used when testing two-sidedness of an
    /// ideal: a left ideal Ra is invariant iff a·t ∈ Ra and a·g ∈ Ra for each
    /// generator g listed here.
    pub fn coefficient_generators(&self) -> Vec<Scalar> {
        match self {
            SkewRing::Ff { field, .. } => {
                // The class of x generates GF(q) as an algebra over GF(p);
                // prime fields are generated by 1 alone.
                if field.ext_degree() == 1 {
                    vec![Scalar::Fq(FqElem::one(field))]
                } else {
                    vec![Scalar::Fq(FqElem::generator(field))]
                }
            }
            SkewRing::Hq => vec![Scalar::Quat(Quat::i()), Scalar::Quat(Quat::j())],
            SkewRing::QxShift => vec![Scalar::RatFunc(RatFunc::x())],
        }
    }

    /// Err unless the two descriptors present the same ring.
    pub fn expect_same(&self, other: &SkewRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for SkewRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkewRing::Ff { field, s } => {
                if *s == 1 {
                    write!(f, "GF({})[t;frob]", field.order())
                } else {
                    write!(f, "GF({})[t;frob^{}]", field.order(), s)
                }
            }
            SkewRing::Hq => write!(f, "HQ[t]"),
            SkewRing::QxShift => write!(f, "QX[t;shift]"),
        }
    }
}

impl fmt::Debug for SkewRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewRing({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_orders() {
        assert_eq!(SkewRing::ff(4, 1).unwrap().sigma_order(), Some(2));
        assert_eq!(SkewRing::ff(4, 2).unwrap().sigma_order(), Some(1));
        assert_eq!(SkewRing::ff(8, 1).unwrap().sigma_order(), Some(3));
        assert_eq!(SkewRing::ff(9, 1).unwrap().sigma_order(), Some(2));
        assert_eq!(SkewRing::ff(5, 1).unwrap().sigma_order(), Some(1));
        assert_eq!(SkewRing::hq().sigma_order(), Some(1));
        assert_eq!(SkewRing::qx_shift().sigma_order(), None);
    }

    #[test]
    fn commutativity_and_boundedness() {
        assert!(SkewRing::ff(5, 1).unwrap().is_commutative());
        assert!(SkewRing::ff(4, 2).unwrap().is_commutative());
        assert!(!SkewRing::ff(4, 1).unwrap().is_commutative());
        assert!(!SkewRing::hq().is_commutative());
        assert!(SkewRing::ff(4, 1).unwrap().fully_bounded());
        assert!(SkewRing::hq().fully_bounded());
        assert!(!SkewRing::qx_shift().fully_bounded());
    }

    #[test]
    fn sigma_action() {
        let r = SkewRing::ff(4, 1).unwrap();
        let field = r.field().unwrap().clone();
        let a = Scalar::Fq(FqElem::generator(&field));
        let a2 = r.apply_sigma(&a, 1);
        // Frobenius squares, and has order 2 on F_4.
        assert_eq!(a2, a.mul(&a));
        assert_eq!(r.apply_sigma(&a, 2), a);
        assert_eq!(r.apply_sigma(&a2, -1), a);

        let q = SkewRing::qx_shift();
        let x = Scalar::RatFunc(RatFunc::x());
        let shifted = q.apply_sigma(&x, 3);
        let expected = x.add(&q.int_scalar(3));
        assert_eq!(shifted, expected);
        assert_eq!(q.apply_sigma(&shifted, -3), x);
    }

    #[test]
    fn display_round_trip_tags() {
        assert_eq!(SkewRing::ff(4, 1).unwrap().to_string(), "GF(4)[t;frob]");
        assert_eq!(SkewRing::ff(9, 2).unwrap().to_string(), "GF(9)[t;frob^2]");
        assert_eq!(SkewRing::hq().to_string(), "HQ[t]");
        assert_eq!(SkewRing::qx_shift().to_string(), "QX[t;shift]");
    }

    #[test]
    fn rejects_non_prime_power() {
        assert!(SkewRing::ff(6, 1).is_err());
        assert!(SkewRing::ff(12, 1).is_err());
    }
}
