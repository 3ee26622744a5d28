//! Skew polynomials and the one-sided Euclidean toolkit.
//!
//! Elements are stored lowest-degree-first over their ring descriptor. The
//! twisted product follows t·c = σ(c)·t, and both one-sided divisions are
//! available because every supported twist is an automorphism. On top of
//! division sit the greatest common right/left divisors, the extended right
//! Euclidean algorithm, and least common left multiples — everything later
//! layers need to manipulate principal left ideals exactly.

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::skewpoly::ring::SkewRing;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct SkewPoly {
    ring: SkewRing,
    /// Coefficient of t^k at index k; no trailing zeros.
    coeffs: Vec<Scalar>,
}

impl SkewPoly {
    pub fn new(ring: SkewRing, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { ring, coeffs }
    }

    pub fn zero(ring: &SkewRing) -> Self {
        SkewPoly::new(ring.clone(), Vec::new())
    }

    pub fn one(ring: &SkewRing) -> Self {
        SkewPoly::constant(ring, ring.one_scalar())
    }

    pub fn constant(ring: &SkewRing, c: Scalar) -> Self {
        SkewPoly::new(ring.clone(), vec![c])
    }

    pub fn t(ring: &SkewRing) -> Self {
        SkewPoly::monomial(ring, ring.one_scalar(), 1)
    }

    /// c·t^k.
    pub fn monomial(ring: &SkewRing, c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![ring.zero_scalar(); k];
        coeffs.push(c);
        SkewPoly::new(ring.clone(), coeffs)
    }

    pub fn from_scalars(ring: &SkewRing, coeffs: Vec<Scalar>) -> Self {
        SkewPoly::new(ring.clone(), coeffs)
    }

    /// Lowest-first integer coefficients mapped into the coefficient domain.
    pub fn from_int_coeffs(ring: &SkewRing, cs: &[i64]) -> Self {
        let coeffs = cs.iter().map(|&n| ring.int_scalar(n)).collect();
        SkewPoly::new(ring.clone(), coeffs)
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.ring.zero_scalar())
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .expect("lead coefficient of zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Units are exactly the nonzero scalars.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&other.coeff(k)));
        }
        SkewPoly::new(self.ring.clone(), out)
    }

    pub fn neg(&self) -> Self {
        let out = self.coeffs.iter().map(|c| c.neg()).collect();
        SkewPoly::new(self.ring.clone(), out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Twisted product: (a t^i)(b t^j) = a·σ^i(b) t^(i+j).
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero(&self.ring);
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![self.ring.zero_scalar(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = a.mul(&self.ring.apply_sigma(b, i as i64));
                out[i + j] = out[i + j].add(&term);
            }
        }
        SkewPoly::new(self.ring.clone(), out)
    }

    /// c·f (scalar on the left; no twist).
    pub fn scale_left(&self, c: &Scalar) -> Self {
        let out = self.coeffs.iter().map(|a| c.mul(a)).collect();
        SkewPoly::new(self.ring.clone(), out)
    }

    /// f·c (scalar on the right; coefficient k picks up σ^k).
    pub fn scale_right(&self, c: &Scalar) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a.mul(&self.ring.apply_sigma(c, k as i64)))
            .collect();
        SkewPoly::new(self.ring.clone(), out)
    }

    /// Apply σ^k to every coefficient (t is fixed). For the conjugation
    /// identity t^k·f = σ^k(f)·t^k.
    pub fn twist_coeffs(&self, k: i64) -> Self {
        let out = self
            .coeffs
            .iter()
            .map(|c| self.ring.apply_sigma(c, k))
            .collect();
        SkewPoly::new(self.ring.clone(), out)
    }

    /// The monic generator of the same left ideal: lead(a)^(-1)·a.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale_left(&self.lead().inv())
    }

    /// Split off the leading unit: returns (u, m) with m monic and self = u·m.
    pub fn monic_with_unit(&self) -> (Scalar, Self) {
        let u = self.lead();
        (u.clone(), self.scale_left(&u.inv()))
    }

    /// Right division: self = q·g + r with deg r < deg g.
    pub fn div_right(&self, g: &Self) -> Result<(Self, Self)> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dg = g.deg().unwrap();
        let glead_inv = g.lead().inv();
        let mut q = SkewPoly::zero(&self.ring);
        let mut r = self.clone();
        while let Some(dr) = r.deg() {
            if dr < dg {
                break;
            }
            let d = dr - dg;
            // (c t^d)(lead(g) t^dg) has leading coefficient c·σ^d(lead(g)).
            let c = r
                .lead()
                .mul(&self.ring.apply_sigma(&glead_inv, d as i64));
            let term = SkewPoly::monomial(&self.ring, c, d);
            r = r.sub(&term.mul(g));
            q = q.add(&term);
        }
        Ok((q, r))
    }

    /// Left division: self = g·q + r with deg r < deg g.
    pub fn div_left(&self, g: &Self) -> Result<(Self, Self)> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dg = g.deg().unwrap();
        let glead_inv = g.lead().inv();
        let mut q = SkewPoly::zero(&self.ring);
        let mut r = self.clone();
        while let Some(dr) = r.deg() {
            if dr < dg {
                break;
            }
            let d = dr - dg;
            // (lead(g) t^dg)(c t^d) has leading coefficient lead(g)·σ^dg(c).
            let c = self
                .ring
                .apply_sigma(&glead_inv.mul(&r.lead()), -(dg as i64));
            let term = SkewPoly::monomial(&self.ring, c, d);
            r = r.sub(&g.mul(&term));
            q = q.add(&term);
        }
        Ok((q, r))
    }

    /// Whether self divides f on the right, i.e. f ∈ R·self.
    pub fn right_divides(&self, f: &Self) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.div_right(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Whether self divides f on the left, i.e. f ∈ self·R.
    pub fn left_divides(&self, f: &Self) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.div_left(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Greatest common right divisor, monic. Generates Rf + Rg.
    pub fn gcrd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_right(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended right Euclid: returns (d, u, v) with u·f + v·g = d = gcrd(f, g).
    pub fn xgcrd(&self, other: &Self) -> (Self, Self, Self) {
        let ring = &self.ring;
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = SkewPoly::one(ring);
        let mut u1 = SkewPoly::zero(ring);
        let mut v0 = SkewPoly::zero(ring);
        let mut v1 = SkewPoly::one(ring);
        while !r1.is_zero() {
            let (q, r2) = r0.div_right(&r1).expect("nonzero divisor");
            let u2 = u0.sub(&q.mul(&u1));
            let v2 = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r2;
            u0 = u1;
            u1 = u2;
            v0 = v1;
            v1 = v2;
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let (lead, d) = r0.monic_with_unit();
        let inv = Scalar::inv(&lead);
        (d, u0.scale_left(&inv), v0.scale_left(&inv))
    }

    /// Greatest common left divisor, monic (via left division).
    pub fn gcld(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_left(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // Normalize to a monic generator of the same *right* ideal: divide by
        // the lead on the right, i.e. a·u with u = σ^(-deg)(lead^(-1)).
        let d = a.deg().unwrap() as i64;
        let u = a.ring.apply_sigma(&a.lead().inv(), -d);
        a.scale_right(&u)
    }

    /// Least common left multiple, monic: generator of Rf ∩ Rg.
    /// Zero when either input is zero.
    pub fn lclm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero(&self.ring);
        }
        // Run right Euclid keeping the f-cofactor row; when the remainder
        // hits zero, u·f is (up to a unit) the lclm.
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = SkewPoly::one(&self.ring);
        let mut u1 = SkewPoly::zero(&self.ring);
        while !r1.is_zero() {
            let (q, r2) = r0.div_right(&r1).expect("nonzero divisor");
            let u2 = u0.sub(&q.mul(&u1));
            r0 = r1;
            r1 = r2;
            u0 = u1;
            u1 = u2;
        }
        u1.mul(self).monic()
    }

    pub fn to_string_descending(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (negative, body) = render_term(c, k);
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if negative { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        out
    }
}

/// Render one term c·t^k as (is_negative, printable body without sign).
fn render_term(c: &Scalar, k: usize) -> (bool, String) {
    let tpart = match k {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{k}"),
    };
    let mut s = c.to_string();
    // Compound coefficient strings (anything printed with internal spaces)
    // get parenthesized so the result re-parses with ordinary precedence.
    let compound = s.contains(' ');
    let mut negative = false;
    if !compound && s.starts_with('-') {
        negative = true;
        s.remove(0);
    }
    if k == 0 {
        let body = if compound { format!("({s})") } else { s };
        return (negative, body);
    }
    if !compound && s == "1" {
        return (negative, tpart);
    }
    let coeff = if compound { format!("({s})") } else { s };
    (negative, format!("{coeff}*{tpart}"))
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_descending())
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[{} over {}]", self, self.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{FqElem, Quat, RatFunc};

    fn f4() -> (SkewRing, Scalar) {
        let ring = SkewRing::ff(4, 1).unwrap();
        let a = Scalar::Fq(FqElem::generator(ring.field().unwrap()));
        (ring, a)
    }

    #[test]
    fn twisted_multiplication_ff() {
        let (ring, a) = f4();
        let t = SkewPoly::t(&ring);
        let ca = SkewPoly::constant(&ring, a.clone());
        // t·a = a²·t since the twist is the Frobenius.
        let ta = t.mul(&ca);
        let a2 = a.mul(&a);
        assert_eq!(ta, SkewPoly::monomial(&ring, a2.clone(), 1));
        // a·t on the other side stays a·t.
        assert_eq!(ca.mul(&t), SkewPoly::monomial(&ring, a.clone(), 1));
        // t·(a·t) = a²·t².
        let at = SkewPoly::monomial(&ring, a, 1);
        assert_eq!(t.mul(&at), SkewPoly::monomial(&ring, a2, 2));
    }

    #[test]
    fn division_right_and_left_ff() {
        let (ring, a) = f4();
        let a2 = a.mul(&a);
        let t2 = SkewPoly::monomial(&ring, ring.one_scalar(), 2);
        let g = SkewPoly::from_scalars(&ring, vec![a.clone(), ring.one_scalar()]); // t + a
        let (q, r) = t2.div_right(&g).unwrap();
        // t² = (t + a²)(t + a) + 1.
        assert_eq!(
            q,
            SkewPoly::from_scalars(&ring, vec![a2.clone(), ring.one_scalar()])
        );
        assert_eq!(r, SkewPoly::one(&ring));
        assert_eq!(q.mul(&g).add(&r), t2);

        let (ql, rl) = t2.div_left(&g).unwrap();
        assert_eq!(g.mul(&ql).add(&rl), t2);
        assert!(rl.deg() < g.deg());
    }

    #[test]
    fn quaternion_lclm_and_gcrd() {
        let ring = SkewRing::hq();
        let one = ring.one_scalar();
        let i = Scalar::Quat(Quat::i());
        let j = Scalar::Quat(Quat::j());
        let f = SkewPoly::from_scalars(&ring, vec![i.neg(), one.clone()]); // t - i
        let g = SkewPoly::from_scalars(&ring, vec![j.neg(), one.clone()]); // t - j
        assert!(f.gcrd(&g).is_one());
        let lclm = f.lclm(&g);
        // lclm(t - i, t - j) = t² + 1.
        let t2p1 = SkewPoly::from_int_coeffs(&ring, &[1, 0, 1]);
        assert_eq!(lclm, t2p1);
        // Degree additivity: deg lclm + deg gcrd = deg f + deg g.
        assert_eq!(lclm.deg(), Some(2));
        assert!(f.right_divides(&lclm));
        assert!(g.right_divides(&lclm));
    }

    #[test]
    fn xgcrd_bezout_identity() {
        let ring = SkewRing::hq();
        let one = ring.one_scalar();
        let i = Scalar::Quat(Quat::i());
        let j = Scalar::Quat(Quat::j());
        let f = SkewPoly::from_scalars(&ring, vec![i.neg(), one.clone()]);
        let g = SkewPoly::from_scalars(&ring, vec![j.neg(), one.clone()]);
        let (d, u, v) = f.xgcrd(&g);
        assert!(d.is_one());
        assert_eq!(u.mul(&f).add(&v.mul(&g)), d);

        // And a nontrivial gcrd: both share the right factor t - i.
        let h = SkewPoly::from_scalars(&ring, vec![j.neg(), one.clone()]).mul(&f); // (t-j)(t-i)
        let k = SkewPoly::from_scalars(&ring, vec![j.clone(), one.clone()]).mul(&f); // (t+j)(t-i)
        let (d2, u2, v2) = h.xgcrd(&k);
        assert_eq!(d2, f.monic());
        assert_eq!(u2.mul(&h).add(&v2.mul(&k)), d2);
    }

    #[test]
    fn shift_ring_relations() {
        let ring = SkewRing::qx_shift();
        let x = Scalar::RatFunc(RatFunc::x());
        let t = SkewPoly::t(&ring);
        let cx = SkewPoly::constant(&ring, x.clone());
        // t·x = (x+1)·t.
        let xp1 = x.add(&ring.one_scalar());
        assert_eq!(t.mul(&cx), SkewPoly::monomial(&ring, xp1, 1));
        // x·t·t = x·t².
        let xt = SkewPoly::monomial(&ring, x.clone(), 1);
        assert_eq!(xt.mul(&t), SkewPoly::monomial(&ring, x.clone(), 2));
        // Division by t is exact on x·t² and leaves x·t as quotient... on the
        // right: x·t² = (x·t)·t + 0.
        let (q, r) = SkewPoly::monomial(&ring, x, 2).div_right(&t).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, xt);
    }

    #[test]
    fn gcld_via_common_left_factor() {
        let ring = SkewRing::hq();
        let one = ring.one_scalar();
        let i = Scalar::Quat(Quat::i());
        let j = Scalar::Quat(Quat::j());
        let a = SkewPoly::from_scalars(&ring, vec![i.neg(), one.clone()]); // t - i
        let b = SkewPoly::from_scalars(&ring, vec![j.neg(), one.clone()]); // t - j
        let c = SkewPoly::from_scalars(&ring, vec![j.clone(), one.clone()]); // t + j
        let ab = a.mul(&b);
        let ac = a.mul(&c);
        let d = ab.gcld(&ac);
        assert_eq!(d, a); // already monic
        assert!(d.left_divides(&ab));
        assert!(d.left_divides(&ac));
        // b and c share no left factor.
        assert!(b.gcld(&c).is_one());
    }

    #[test]
    fn display_round_trippable_shapes() {
        let (ring, a) = f4();
        let p = SkewPoly::from_scalars(
            &ring,
            vec![ring.one_scalar(), a.clone(), a.mul(&a)],
        );
        assert_eq!(p.to_string(), "(a + 1)*t^2 + a*t + 1");

        let hq = SkewRing::hq();
        let q = SkewPoly::from_scalars(
            &hq,
            vec![Scalar::Quat(Quat::k()).neg(), Scalar::Quat(Quat::i()), hq.one_scalar()],
        );
        assert_eq!(q.to_string(), "t^2 + i*t - k");

        let qx = SkewRing::qx_shift();
        let r = SkewPoly::from_scalars(
            &qx,
            vec![Scalar::RatFunc(RatFunc::x()).inv(), Scalar::RatFunc(RatFunc::x())],
        );
        assert_eq!(r.to_string(), "x*t + 1/x");
        assert_eq!(SkewPoly::zero(&qx).to_string(), "0");
    }

    #[test]
    fn monic_preserves_left_ideal() {
        let ring = SkewRing::hq();
        let two_i = Scalar::Quat(Quat::from_ints(0, 2, 0, 0));
        let f = SkewPoly::from_scalars(&ring, vec![Scalar::Quat(Quat::j()), two_i]);
        let m = f.monic();
        assert!(m.is_monic());
        let (u, m2) = f.monic_with_unit();
        assert_eq!(m2, m);
        assert_eq!(SkewPoly::constant(&ring, u).mul(&m), f);
        // Same left ideal: each right-divides a unit multiple of the other.
        assert!(m.right_divides(&f));
    }
}
