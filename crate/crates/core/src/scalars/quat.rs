//! Rational quaternions `w + x*i + y*j + z*k` with exact arithmetic.

use num::{One, Signed, Zero};
use std::fmt;

use crate::scalars::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quat {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quat {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quat { w, x, y, z }
    }

    pub fn from_rational(w: Rational) -> Self {
        Quat { w, x: Rational::zero(), y: Rational::zero(), z: Rational::zero() }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let q = |n: i64| Rational::from_integer(n.into());
        Quat::new(q(w), q(x), q(y), q(z))
    }

    pub fn zero() -> Self {
        Quat::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Quat::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Rational multiples of 1 are exactly the central quaternions.
    pub fn is_central(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Quat::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn neg(&self) -> Self {
        Quat::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Hamilton product: `i^2 = j^2 = k^2 = -1`, `i*j = k`.
    pub fn mul(&self, o: &Self) -> Self {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&o.w, &o.x, &o.y, &o.z);
        Quat::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }

    pub fn conj(&self) -> Self {
        Quat::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Reduced norm `w^2 + x^2 + y^2 + z^2 = q * conj(q)`.
    pub fn norm(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// Reduced trace `q + conj(q) = 2w`.
    pub fn trace(&self) -> Rational {
        &self.w + &self.w
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero quaternion");
        let n = self.norm();
        let c = self.conj();
        Quat::new(&c.w / &n, &c.x / &n, &c.y / &n, &c.z / &n)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Quat::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (coef, unit) in [
            (&self.w, ""),
            (&self.x, "i"),
            (&self.y, "j"),
            (&self.z, "k"),
        ] {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let abs = if neg { -coef } else { coef.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if unit.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(unit);
            } else {
                out.push_str(&format!("{abs}*{unit}"));
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&i), Quat::one().neg());
    }

    #[test]
    fn conjugation_by_unit_rotates_axes() {
        // (i+j) * i * (i+j)^-1 = j
        let u = Quat::i().add(&Quat::j());
        let lhs = u.mul(&Quat::i()).mul(&u.inv());
        assert_eq!(lhs, Quat::j());
    }

    #[test]
    fn norm_is_multiplicative() {
        let a = Quat::from_ints(1, 2, -1, 3);
        let b = Quat::from_ints(0, 1, 1, -2);
        assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn inverse_against_norm_and_conjugate() {
        let a = Quat::from_ints(2, -1, 1, 0);
        assert!(a.mul(&a.inv()).is_one());
        assert!(a.inv().mul(&a).is_one());
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(Quat::from_ints(1, -1, 0, 2).to_string(), "1 - i + 2*k");
        assert_eq!(
            Quat::new(
                Rational::new(3.into(), 2.into()),
                Rational::zero(),
                Rational::one(),
                Rational::zero()
            )
            .to_string(),
            "3/2 + j"
        );
    }
}
