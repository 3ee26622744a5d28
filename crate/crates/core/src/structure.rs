//! Two-sided structure of principal left ideals: invariance, closures,
//! bounds, and maximality of two-sided ideals.
//!
//! The two-sided ideals of each supported ring are generated by *invariant*
//! elements (a·R ⊆ Ra). Over F_q[t;σ] with σ of order r the monic invariant
//! elements are exactly t^ℓ·c(t^r) with c over the fixed field of σ; over
//! H_Q[t] they are the monic polynomials with rational (central)
//! coefficients; over Q(x)[t;shift] they are the powers of t. Those shapes
//! drive every routine here.

use crate::error::{Error, Result};
use crate::factorization::comm_factor_q;
use crate::linalg::{self, PrimeField, QField};
use crate::scalars::{fixed_field_basis, FqElem, QPoly, Rational, Scalar};
use crate::skewpoly::{LeftIdeal, SkewPoly, SkewRing};

/// The monic generator of the left ideal quotient (Ra : b) = {x : x·b ∈ Ra}.
pub fn left_quotient(a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
    let ring = a.ring();
    if b.is_zero() {
        return SkewPoly::one(ring);
    }
    if a.is_zero() {
        return SkewPoly::zero(ring);
    }
    // x·b ∈ Ra forces x·b ∈ Ra ∩ Rb = R·lclm(a,b); writing lclm = y·b and
    // cancelling b on the right gives (Ra : b) = Ry.
    let l = a.lclm(b);
    let (y, r) = l.div_right(b).expect("b nonzero");
    debug_assert!(r.is_zero());
    y.monic()
}

/// Whether Ra is a two-sided ideal, i.e. a is invariant.
///
/// Checked on generators: Ra is two-sided iff a·t ∈ Ra and a·g ∈ Ra for the
/// coefficient-domain generators g ({α}, {i, j}, or {x}); the set of scalars
/// c with a·c ∈ Ra is automatically a subfield/subalgebra.
pub fn is_invariant(a: &SkewPoly) -> bool {
    if a.is_zero() || a.is_unit() {
        return true;
    }
    let ideal = LeftIdeal::new(a);
    let t = SkewPoly::t(a.ring());
    if !ideal.contains(&a.mul(&t)) {
        return false;
    }
    a.ring()
        .coefficient_generators()
        .iter()
        .all(|g| ideal.contains(&a.scale_right(g)))
}

/// The two-sided closure RaR: the smallest two-sided ideal containing Ra.
///
/// Computed as a gcrd fixpoint: enlarge Rc by the right translates c·t and
/// c·g until stable. Degrees strictly decrease, so this terminates within
/// deg a steps in every ring (including the unbounded shift ring).
pub fn two_sided_closure(a: &SkewPoly) -> LeftIdeal {
    let ring = a.ring();
    if a.is_zero() {
        return LeftIdeal::zero(ring);
    }
    let t = SkewPoly::t(ring);
    let gens = ring.coefficient_generators();
    let mut c = a.monic();
    loop {
        let mut next = c.gcrd(&c.mul(&t));
        for g in &gens {
            next = next.gcrd(&c.scale_right(g));
        }
        if next == c {
            return LeftIdeal::new(&c);
        }
        c = next;
    }
}

/// If a is a single term u·t^m, the exponent m.
pub(crate) fn single_term_exponent(a: &SkewPoly) -> Option<usize> {
    let d = a.deg()?;
    for k in 0..d {
        if !a.coeff(k).is_zero() {
            return None;
        }
    }
    Some(d)
}

/// The bound of a: the monic generator of the largest two-sided ideal
/// contained in Ra, equivalently the minimal-degree monic invariant element
/// of Ra.
///
/// Returns `Ok(None)` when that ideal is zero, which happens exactly for
/// unbounded elements of the shift ring (anything other than u·t^m). Over
/// F_q[t;σ] and H_Q[t] every nonzero element is bounded and the solve is
/// exact and complete, so the answer is always `Some`.
pub fn bound(a: &SkewPoly) -> Result<Option<SkewPoly>> {
    let ring = a.ring();
    if a.is_zero() {
        return Err(Error::ZeroInput("bound of the zero polynomial"));
    }
    if a.is_unit() {
        return Ok(Some(SkewPoly::one(ring)));
    }
    match ring {
        SkewRing::Ff { .. } => Ok(Some(ff_bound(a)?)),
        SkewRing::Hq => Ok(Some(hq_bound(a)?)),
        SkewRing::QxShift => Ok(single_term_exponent(a)
            .map(|m| SkewPoly::monomial(ring, ring.one_scalar(), m))),
    }
}

/// Remainders of t^j modulo monic a, for j = 0..=jmax.
fn monomial_remainders(a: &SkewPoly, jmax: usize) -> Vec<SkewPoly> {
    let ring = a.ring();
    (0..=jmax)
        .map(|j| {
            SkewPoly::monomial(ring, ring.one_scalar(), j)
                .div_right(a)
                .expect("a nonzero")
                .1
        })
        .collect()
}

/// Bound over F_q[t;σ]: the minimal monic invariant t^ℓ·c(t^r) ∈ Ra, found
/// degree by degree via an F_p-linear membership system over the fixed field.
fn ff_bound(a: &SkewPoly) -> Result<SkewPoly> {
    let ring = a.ring().clone();
    let (field, s) = match &ring {
        SkewRing::Ff { field, s } => (field.clone(), *s),
        _ => unreachable!(),
    };
    let r = ring.sigma_order().unwrap();
    let a = a.monic();
    if r == 1 {
        // Commutative ring: every ideal is two-sided.
        return Ok(a);
    }
    let da = a.deg().unwrap();
    let p = field.p();
    let m = field.ext_degree();
    let fp = PrimeField::new(p);
    let fix = fixed_field_basis(&field, s);
    let rho = monomial_remainders(&a, r * da);

    // Coordinates of a residue (deg < da) as a vector over F_p.
    let coords = |f: &SkewPoly| -> Vec<u64> {
        let mut v = Vec::with_capacity(da * m);
        for k in 0..da {
            let c = f.coeff(k);
            v.extend_from_slice(c.as_fq().coords());
        }
        v
    };

    for d in da..=r * da {
        let l0 = d % r;
        let k_top = (d - l0) / r;
        let rhs: Vec<u64> = coords(&rho[d]).iter().map(|&x| (p - x % p) % p).collect();
        if k_top == 0 {
            if rho[d].is_zero() {
                return Ok(SkewPoly::monomial(&ring, ring.one_scalar(), d));
            }
            continue;
        }
        // Unknowns: c_k = Σ_i u_{k,i}·fix[i] for k < k_top; columns are the
        // coordinates of fix[i]·ρ_{ℓ0 + rk}.
        let mut cols: Vec<Vec<u64>> = Vec::new();
        for k in 0..k_top {
            for b in &fix {
                cols.push(coords(&rho[l0 + r * k].scale_left(&Scalar::Fq(b.clone()))));
            }
        }
        let rows = da * m;
        let mat: Vec<Vec<u64>> = (0..rows)
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect();
        if let Some(sol) = linalg::solve(&fp, &mat, &rhs) {
            let mut b = SkewPoly::monomial(&ring, ring.one_scalar(), d);
            for k in 0..k_top {
                let mut ck = FqElem::zero(&field);
                for (i, basis) in fix.iter().enumerate() {
                    let u = sol[k * fix.len() + i];
                    ck = ck.add(&FqElem::from_u64(&field, u).mul(basis));
                }
                if !ck.is_zero() {
                    b = b.add(&SkewPoly::monomial(&ring, Scalar::Fq(ck), l0 + r * k));
                }
            }
            debug_assert!(is_invariant(&b) && LeftIdeal::new(&a).contains(&b));
            return Ok(b);
        }
    }
    Err(Error::InvariantViolation(format!(
        "no invariant element of degree <= {} found in R({})",
        r * da,
        a
    )))
}

/// Bound over H_Q[t]: the minimal monic central (rational-coefficient)
/// polynomial in Ra, found degree by degree via an exact Q-linear system.
/// Existence within degree 2·deg a is witnessed by conj(a)·a.
fn hq_bound(a: &SkewPoly) -> Result<SkewPoly> {
    let ring = a.ring().clone();
    let a = a.monic();
    if a.coeffs().iter().all(|c| c.as_quat().is_central()) {
        return Ok(a);
    }
    let da = a.deg().unwrap();
    let qf = QField;
    let rho = monomial_remainders(&a, 2 * da);

    let coords = |f: &SkewPoly| -> Vec<Rational> {
        let mut v = Vec::with_capacity(4 * da);
        for k in 0..da {
            let c = f.coeff(k);
            let q = c.as_quat();
            v.extend_from_slice(&[q.w.clone(), q.x.clone(), q.y.clone(), q.z.clone()]);
        }
        v
    };

    for d in da + 1..=2 * da {
        let rhs: Vec<Rational> = coords(&rho[d]).iter().map(|x| -x).collect();
        let cols: Vec<Vec<Rational>> = (0..d).map(|k| coords(&rho[k])).collect();
        let rows = 4 * da;
        let mat: Vec<Vec<Rational>> = (0..rows)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        if let Some(sol) = linalg::solve(&qf, &mat, &rhs) {
            let mut coeffs: Vec<Scalar> = sol
                .iter()
                .map(|f| Scalar::Quat(crate::scalars::Quat::from_rational(f.clone())))
                .collect();
            coeffs.push(ring.one_scalar());
            let b = SkewPoly::from_scalars(&ring, coeffs);
            debug_assert!(is_invariant(&b) && LeftIdeal::new(&a).contains(&b));
            return Ok(b);
        }
    }
    Err(Error::InvariantViolation(format!(
        "no central element of degree <= {} found in R({})",
        2 * da,
        a
    )))
}

/// Decompose a monic invariant element of F_q[t;σ] as t^ℓ·c(t^r) with c over
/// the fixed field of σ and c(0) ≠ 0. Returns (ℓ, coefficients of c).
fn ff_invariant_parts(b: &SkewPoly) -> Result<(usize, Vec<FqElem>)> {
    let ring = b.ring();
    let r = ring.sigma_order().unwrap();
    let d = b.deg().unwrap();
    let l = (0..=d)
        .find(|&k| !b.coeff(k).is_zero())
        .expect("nonzero polynomial");
    if (d - l) % r != 0 {
        return Err(Error::NotInvariant(b.to_string()));
    }
    let deg_c = (d - l) / r;
    let mut c = Vec::with_capacity(deg_c + 1);
    for k in 0..=deg_c {
        c.push(b.coeff(l + r * k).as_fq().clone());
    }
    // Every other coefficient must vanish and every c_k must be σ-fixed.
    for k in 0..=d {
        let in_support = k >= l && (k - l) % r == 0;
        if !in_support && !b.coeff(k).is_zero() {
            return Err(Error::NotInvariant(b.to_string()));
        }
    }
    for ck in &c {
        if ring.apply_sigma(&Scalar::Fq(ck.clone()), 1) != Scalar::Fq(ck.clone()) {
            return Err(Error::NotInvariant(b.to_string()));
        }
    }
    Ok((l, c))
}

/// Whether the two-sided ideal Rb (b invariant) is maximal among proper
/// two-sided ideals — an atom of the invariant-element monoid.
///
/// `Ok(None)` only over H_Q[t] when the rational factorization engine cannot
/// certify irreducibility of a large-degree bound.
pub fn is_inv_atom(b: &SkewPoly) -> Result<Option<bool>> {
    if b.is_zero() || b.is_unit() {
        return Ok(Some(false));
    }
    if !is_invariant(b) {
        return Err(Error::NotInvariant(b.to_string()));
    }
    let b = b.monic();
    match b.ring() {
        SkewRing::Ff { field, s } => {
            let (l, c) = ff_invariant_parts(&b)?;
            let deg_c = c.len() - 1;
            let atom = match l {
                0 => {
                    let g = gcd_usize(field.ext_degree(), s % field.ext_degree().max(1));
                    let fix_order = field.p().pow(g.max(1) as u32);
                    fq_poly_irreducible(&c, fix_order)
                }
                1 => deg_c == 0,
                _ => false,
            };
            Ok(Some(atom))
        }
        SkewRing::Hq => {
            let q = QPoly::new(
                b.coeffs()
                    .iter()
                    .map(|c| c.as_quat().w.clone())
                    .collect(),
            );
            let f = comm_factor_q(&q);
            if f.factors.len() > 1 {
                Ok(Some(false))
            } else if f.complete {
                Ok(Some(true))
            } else {
                Ok(None)
            }
        }
        SkewRing::QxShift => {
            let m = single_term_exponent(&b).ok_or_else(|| Error::NotInvariant(b.to_string()))?;
            Ok(Some(m == 1))
        }
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a.max(1)
    } else {
        gcd_usize(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// Commutative polynomial arithmetic over a finite field, for irreducibility
// of the fixed-field part of an invariant element (Rabin's test — exact, no
// caps, since the fields involved are tiny).

fn fqp_trim(mut v: Vec<FqElem>) -> Vec<FqElem> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn fqp_deg(v: &[FqElem]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn fqp_mul(a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let field = a[0].field().clone();
    let mut out = vec![FqElem::zero(&field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    fqp_trim(out)
}

fn fqp_rem(a: &[FqElem], m: &[FqElem]) -> Vec<FqElem> {
    let dm = fqp_deg(m).expect("nonzero modulus");
    let lead_inv = m.last().unwrap().inv();
    let mut r = a.to_vec();
    while fqp_deg(&r).map_or(false, |dr| dr >= dm) {
        let dr = fqp_deg(&r).unwrap();
        let c = r.last().unwrap().mul(&lead_inv);
        let shift = dr - dm;
        for k in 0..=dm {
            r[k + shift] = r[k + shift].sub(&c.mul(&m[k]));
        }
        r = fqp_trim(r);
    }
    r
}

fn fqp_gcd(a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
    let mut x = fqp_trim(a.to_vec());
    let mut y = fqp_trim(b.to_vec());
    while !y.is_empty() {
        let r = fqp_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// h^e mod m by square-and-multiply.
fn fqp_powmod(h: &[FqElem], e: u64, m: &[FqElem]) -> Vec<FqElem> {
    let field = m[0].field().clone();
    let mut base = fqp_rem(h, m);
    let mut acc = vec![FqElem::one(&field)];
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = fqp_rem(&fqp_mul(&acc, &base), m);
        }
        base = fqp_rem(&fqp_mul(&base, &base), m);
        e >>= 1;
    }
    acc
}

/// Rabin irreducibility over the field with `q0` elements: c (monic, with
/// coefficients in that subfield) is irreducible iff y^(q0^n) ≡ y mod c and
/// for every prime divisor ℓ of n, gcd(y^(q0^(n/ℓ)) − y, c) = 1.
fn fq_poly_irreducible(c: &[FqElem], q0: u64) -> bool {
    let n = match fqp_deg(c) {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let field = c[0].field().clone();
    let y = vec![FqElem::zero(&field), FqElem::one(&field)];
    // y^(q0^e) mod c by e-fold repeated q0-powering (avoids huge exponents).
    let iterate = |e: usize| -> Vec<FqElem> {
        let mut h = fqp_rem(&y, c);
        for _ in 0..e {
            h = fqp_powmod(&h, q0, c);
        }
        h
    };
    for l in prime_divisors(n) {
        let h = iterate(n / l);
        // gcd(h − y, c) must be trivial.
        let mut diff = vec![FqElem::zero(&field); h.len().max(2)];
        for (k, v) in h.iter().enumerate() {
            diff[k] = v.clone();
        }
        diff[1] = diff[1].sub(&FqElem::one(&field));
        let g = fqp_gcd(&fqp_trim(diff), c);
        if fqp_deg(&g) != Some(0) {
            return false;
        }
    }
    let h = iterate(n);
    fqp_trim(
        h.iter()
            .enumerate()
            .map(|(k, v)| {
                if k == 1 {
                    v.sub(&FqElem::one(&field))
                } else {
                    v.clone()
                }
            })
            .collect(),
    )
    .is_empty()
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
