//! Rational functions over Q, kept reduced with a monic denominator.

use std::fmt;

use crate::scalars::qpoly::QPoly;
use crate::scalars::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    /// Build `num/den`, reducing and renormalizing; panics when `den = 0`.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num: QPoly::zero(), den: QPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        // Push the denominator's leading coefficient into the numerator.
        let lc = den.lead();
        RatFunc { num: num.scale(&lc.recip()), den: den.monic() }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::one() }
    }

    pub fn from_rational(r: Rational) -> Self {
        RatFunc::from_poly(QPoly::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: QPoly::one(), den: QPoly::one() }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        RatFunc::from_poly(QPoly::x())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `x -> x + k`.
    pub fn shift_arg(&self, k: i64) -> Self {
        let c = Rational::from_integer(k.into());
        RatFunc {
            num: self.num.shift_arg(&c),
            den: self.den.shift_arg(&c), // stays monic: shifting fixes the lead
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return f.write_str(&self.num.to_string_var("x"));
        }
        // Parenthesize only compound parts: "1/x" but "(x^2 + 1)/(x + 2)".
        let wrap = |s: String| if s.contains(' ') { format!("({s})") } else { s };
        let num = wrap(self.num.to_string_var("x"));
        let den = wrap(self.den.to_string_var("x"));
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(QPoly::from_int_coeffs(num), QPoly::from_int_coeffs(den))
    }

    #[test]
    fn reduction_and_monic_denominator() {
        // (2x^2 - 2) / (4x + 4) reduces to (x - 1)/2.
        let r = frac(&[-2, 0, 2], &[4, 4]);
        assert_eq!(r, frac(&[-1, 1], &[2]));
        assert!(r.den().is_one());
    }

    #[test]
    fn field_identities() {
        let r = frac(&[1, 2], &[0, 0, 1]);
        assert!(r.mul(&r.inv()).is_one());
        assert!(r.sub(&r).is_zero());
        let s = frac(&[5], &[1, 1]);
        assert_eq!(r.add(&s).sub(&s), r);
    }

    #[test]
    fn shift_acts_on_both_sides() {
        // 1/x shifted by 2 is 1/(x+2).
        let r = frac(&[1], &[0, 1]);
        assert_eq!(r.shift_arg(2), frac(&[1], &[2, 1]));
        assert_eq!(r.shift_arg(2).shift_arg(-2), r);
    }

    #[test]
    fn display_forms() {
        assert_eq!(frac(&[1, 0, 1], &[2, 1]).to_string(), "(x^2 + 1)/(x + 2)");
        assert_eq!(frac(&[3, 1], &[1]).to_string(), "x + 3");
    }
}
