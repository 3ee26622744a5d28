//! Factorization: commutative factorization over Q, atom tests, and
//! factorizations into atoms in the skew rings.

use num::integer::Roots;
use num::{BigInt, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalars::{QPoly, Quat, Rational, Scalar};
use crate::similarity::is_similar;
use crate::skewpoly::{SkewPoly, SkewRing};
use crate::structure::bound;
use crate::verdict::{Verdict, VerdictValue, Witness};

/// Cap on the degree of a piece we are willing to prove irreducible over Q
/// by exhaustive interpolation; larger pieces are returned unverified.
const KRONECKER_DEG_CAP: usize = 8;
/// Cap on the number of interpolation candidates per degree.
const KRONECKER_TUPLE_CAP: u64 = 500_000;

/// A factorization over Q: `unit · Π factors = input`, factors monic in
/// ascending (degree, display) order. When `complete` is true every factor is
/// provably irreducible over Q; otherwise the oversized pieces are returned
/// as-is and the caller must treat irreducibility questions as inconclusive.
#[derive(Clone, Debug, PartialEq)]
pub struct CommFactors {
    pub unit: Rational,
    pub factors: Vec<QPoly>,
    pub complete: bool,
}

impl CommFactors {
    pub fn product(&self) -> QPoly {
        let mut p = QPoly::constant(self.unit.clone());
        for f in &self.factors {
            p = p.mul(f);
        }
        p
    }
}

/// Factor a rational polynomial into monic irreducible factors over Q.
///
/// Exact and complete for any polynomial whose square-free parts have degree
/// at most 8 (Kronecker interpolation proves irreducibility exhaustively);
/// beyond the cap the result carries `complete: false`.
pub fn comm_factor_q(p: &QPoly) -> CommFactors {
    if p.is_zero() {
        return CommFactors {
            unit: Rational::zero(),
            factors: Vec::new(),
            complete: true,
        };
    }
    let unit = p.lead();
    let monic = p.monic();
    let mut factors = Vec::new();
    let mut complete = true;
    factor_monic(&monic, &mut factors, &mut complete);
    factors.sort_by_key(|f| (f.deg().unwrap_or(0), f.to_string_var("x")));
    CommFactors {
        unit,
        factors,
        complete,
    }
}

fn factor_monic(p: &QPoly, out: &mut Vec<QPoly>, complete: &mut bool) {
    let n = match p.deg() {
        None | Some(0) => return,
        Some(n) => n,
    };
    if n == 1 {
        out.push(p.clone());
        return;
    }

    // Split off repeated factors: gcd(p, p') is a proper divisor whenever p
    // is not square-free (characteristic zero).
    let g = p.gcd(&p.derivative());
    if let Some(dg) = g.deg() {
        if dg > 0 {
            let (q, r) = p.divrem(&g);
            debug_assert!(r.is_zero());
            factor_monic(&g, out, complete);
            factor_monic(&q, out, complete);
            return;
        }
    }

    // Rational roots give linear factors directly.
    if let Some(root) = rational_root(p) {
        let lin = QPoly::new(vec![-root, num::one()]);
        let (q, r) = p.divrem(&lin);
        debug_assert!(r.is_zero());
        out.push(lin);
        factor_monic(&q, out, complete);
        return;
    }

    // Square-free, no rational root: degree 2 or 3 is now irreducible.
    if n <= 3 {
        out.push(p.clone());
        return;
    }
    if n > KRONECKER_DEG_CAP {
        out.push(p.clone());
        *complete = false;
        return;
    }

    match kronecker_split(p) {
        KroneckerOutcome::Factor(f) => {
            let (q, r) = p.divrem(&f);
            debug_assert!(r.is_zero());
            factor_monic(&f, out, complete);
            factor_monic(&q, out, complete);
        }
        KroneckerOutcome::Irreducible => out.push(p.clone()),
        KroneckerOutcome::CapExceeded => {
            out.push(p.clone());
            *complete = false;
        }
    }
}

/// One rational root of p, if any (rational root theorem on the primitive
/// integer form).
fn rational_root(p: &QPoly) -> Option<Rational> {
    let (ints, _) = p.primitive_int();
    let a0 = &ints[0];
    if a0.is_zero() {
        return Some(Rational::zero());
    }
    let an = ints.last().unwrap();
    let nums = divisors_of(a0)?;
    let dens = divisors_of(an)?;
    for u in &nums {
        for v in &dens {
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(*u as i64 * sign), BigInt::from(*v));
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Positive divisors of |n|; None if |n| is too large to enumerate.
fn divisors_of(n: &BigInt) -> Option<Vec<u64>> {
    let v = n.abs().to_u64()?;
    if v == 0 {
        return Some(vec![]);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= v {
        if v % d == 0 {
            small.push(d);
            if d != v / d {
                large.push(v / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

enum KroneckerOutcome {
    Factor(QPoly),
    Irreducible,
    CapExceeded,
}

/// Search for a monic factor of degree 2..=n/2 by Kronecker interpolation.
/// The input must be square-free with no rational root.
fn kronecker_split(p: &QPoly) -> KroneckerOutcome {
    let n = p.deg().unwrap();
    let (ints, _) = p.primitive_int();
    let ip = QPoly::new(ints.iter().map(|c| Rational::from(c.clone())).collect());

    let max_d = n / 2;
    // Sample points 0, 1, -1, 2, -2, ...
    let points: Vec<i64> = (0..)
        .flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
        .take(max_d + 1)
        .collect();
    let mut value_divisors: Vec<Vec<i64>> = Vec::new();
    for &x in &points {
        let v = ip.eval(&Rational::from(BigInt::from(x)));
        let d = match divisors_of(v.numer()) {
            Some(d) => d,
            None => return KroneckerOutcome::CapExceeded,
        };
        // Signed divisors; the first point's sign is fixed below (±g divide
        // alike), halving the search.
        let signed: Vec<i64> = d
            .iter()
            .flat_map(|&u| [u as i64, -(u as i64)])
            .collect();
        value_divisors.push(signed);
    }

    for d in 2..=max_d {
        let pts = &points[..=d];
        let mut count: u64 = 1;
        for vd in &value_divisors[..=d] {
            count = count.saturating_mul(vd.len() as u64);
        }
        if count / 2 > KRONECKER_TUPLE_CAP {
            return KroneckerOutcome::CapExceeded;
        }
        // Odometer over divisor tuples; first coordinate only positive.
        let firsts: Vec<i64> = value_divisors[0]
            .iter()
            .copied()
            .filter(|&v| v > 0)
            .collect();
        let mut idx = vec![0usize; d + 1];
        loop {
            let mut values = Vec::with_capacity(d + 1);
            values.push(firsts[idx[0]]);
            for k in 1..=d {
                values.push(value_divisors[k][idx[k]]);
            }
            if let Some(g) = interpolate(pts, &values) {
                if g.deg().map_or(false, |dg| dg >= 2) {
                    let gm = g.monic();
                    if gm.divides(&ip) {
                        return KroneckerOutcome::Factor(gm);
                    }
                }
            }
            // Advance odometer.
            let mut k = 0;
            loop {
                idx[k] += 1;
                let limit = if k == 0 {
                    firsts.len()
                } else {
                    value_divisors[k].len()
                };
                if idx[k] < limit {
                    break;
                }
                idx[k] = 0;
                k += 1;
                if k > d {
                    break;
                }
            }
            if k > d {
                break;
            }
        }
    }
    KroneckerOutcome::Irreducible
}

/// Lagrange interpolation through (points[i], values[i]); None when the
/// unique interpolant is constant.
fn interpolate(points: &[i64], values: &[i64]) -> Option<QPoly> {
    let mut acc = QPoly::zero();
    for (i, (&xi, &vi)) in points.iter().zip(values.iter()).enumerate() {
        let mut basis = QPoly::one();
        let mut denom = Rational::from(BigInt::from(1));
        for (j, &xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&QPoly::new(vec![
                Rational::from(BigInt::from(-xj)),
                num::one(),
            ]));
            denom *= Rational::from(BigInt::from(xi - xj));
        }
        let w = Rational::from(BigInt::from(vi)) / denom;
        acc = acc.add(&basis.scale(&w));
    }
    if acc.deg().map_or(true, |d| d == 0) {
        None
    } else {
        Some(acc)
    }
}

// ---------------------------------------------------------------------------
// Quaternion conjugacy classes.

/// Cap on candidates in a single monic right/left-factor sweep over F_q.
const FF_SWEEP_CAP: u64 = 4096;
/// Cap on the integer searched for a three-squares witness.
const THREE_SQUARES_CAP: u64 = 1_000_000;

/// Right roots of a quaternion polynomial inside the conjugacy class cut out
/// by a central g = t² − τt + ν (or t − r): the class is
/// {c ∈ H_Q : trace(c) = τ, norm(c) = ν}, which may be empty.
#[derive(Clone, Debug, PartialEq)]
pub enum RightRoots {
    /// No element of the class is a right root of f.
    None,
    /// Exactly one right root in the class.
    Unique(Quat),
    /// f is a multiple of g, so every class element is a right root. The
    /// payload is `Some(representative)` (a canonical witness) when the
    /// class is nonempty, `None` when it is provably empty.
    WholeClass(Option<Quat>),
}

/// Right roots of f ∈ H_Q[t] in the class of a monic central g of degree ≤ 2.
///
/// Reduce f mod g to r = αt + β (left and right remainders agree because g
/// is central). If r = 0 the whole class consists of right roots; if α ≠ 0
/// the unique candidate is −α⁻¹β, accepted iff its trace and norm match g;
/// otherwise there are none. Every returned root is re-verified by division.
pub fn right_roots_in_class(f: &SkewPoly, g: &SkewPoly) -> Result<RightRoots> {
    let hq = SkewRing::hq();
    f.ring().expect_same(&hq)?;
    g.ring().expect_same(&hq)?;
    if f.is_zero() {
        return Err(Error::ZeroInput("rightRootsInClass"));
    }
    if !g.is_monic() || g.coeffs().iter().any(|c| !c.as_quat().is_central()) {
        return Err(Error::InvalidArgument {
            op: "rightRootsInClass",
            msg: "g must be monic with central (rational) coefficients".into(),
        });
    }
    let dg = g.deg().unwrap();
    let rem = f.div_right(g)?.1;
    match dg {
        1 => {
            // g = t − r: the class is the single central element r.
            let r = g.coeff(0).as_quat().w.clone();
            let root = Quat::from_rational(-r);
            if rem.is_zero() {
                Ok(RightRoots::WholeClass(Some(root)))
            } else {
                Ok(RightRoots::None)
            }
        }
        2 => {
            let tau = -g.coeff(1).as_quat().w.clone();
            let nu = g.coeff(0).as_quat().w.clone();
            if rem.is_zero() {
                return Ok(RightRoots::WholeClass(class_representative(&tau, &nu)?));
            }
            let alpha = rem.coeff(1).as_quat().clone();
            let beta = rem.coeff(0).as_quat().clone();
            if alpha.is_zero() {
                return Ok(RightRoots::None);
            }
            let c = alpha.inv().mul(&beta).neg();
            if c.trace() == tau && c.norm() == nu {
                let lin = hq_linear(f.ring(), &c);
                if !lin.right_divides(f) {
                    return Err(Error::InvariantViolation(
                        "class root candidate failed right-division check".into(),
                    ));
                }
                Ok(RightRoots::Unique(c))
            } else {
                Ok(RightRoots::None)
            }
        }
        _ => Err(Error::InvalidArgument {
            op: "rightRootsInClass",
            msg: format!("g must have degree 1 or 2, got {dg}"),
        }),
    }
}

/// t − c in H_Q[t].
fn hq_linear(ring: &SkewRing, c: &Quat) -> SkewPoly {
    SkewPoly::from_scalars(
        ring,
        vec![Scalar::Quat(c.neg()), Scalar::Quat(Quat::one())],
    )
}

/// A canonical element of {c ∈ H_Q : trace(c) = τ, norm(c) = ν}, or `None`
/// when the class is provably empty.
///
/// Writing c = τ/2 + v with v pure, membership reads v·v̄ = s := ν − τ²/4,
/// i.e. x² + y² + z² = s over Q. For s < 0 the class is empty (the norm on
/// pure quaternions is positive definite); for s = 0 it is {τ/2}; for
/// s = u/w > 0 in lowest terms it is nonempty iff u·w is a sum of three
/// integer squares, i.e. not of the form 4^a(8b+7). The witness is the
/// first decomposition found scanning x downward from ⌊√(uw)⌋ (then y
/// downward), scaled back by 1/w; this fixed order is what makes root picks,
/// and hence factorizations, deterministic.
pub fn class_representative(tau: &Rational, nu: &Rational) -> Result<Option<Quat>> {
    let four = Rational::from(BigInt::from(4));
    let s = nu.clone() - tau.clone() * tau.clone() / four;
    let half_tau = tau.clone() / Rational::from(BigInt::from(2));
    if s.is_zero() {
        return Ok(Some(Quat::from_rational(half_tau)));
    }
    if s < Rational::zero() {
        return Ok(None);
    }
    let n_big = s.numer() * s.denom();
    if is_4a_8b7(&n_big) {
        return Ok(None);
    }
    let n = n_big
        .to_u64()
        .filter(|&v| v <= THREE_SQUARES_CAP)
        .ok_or(Error::CapExceeded {
            what: "three-squares witness search".into(),
            cap: THREE_SQUARES_CAP,
        })?;
    let (x, y, z) = three_squares(n).ok_or_else(|| {
        Error::InvariantViolation(format!(
            "{n} passed the three-squares criterion but no decomposition was found"
        ))
    })?;
    let w = Rational::from(s.denom().clone());
    let coord = |v: u64| Rational::from(BigInt::from(v)) / w.clone();
    Ok(Some(Quat::new(half_tau, coord(x), coord(y), coord(z))))
}

/// Whether n = 4^a(8b+7), i.e. n is NOT a sum of three integer squares.
fn is_4a_8b7(n: &BigInt) -> bool {
    let four = BigInt::from(4);
    let eight = BigInt::from(8);
    let mut m = n.clone();
    while (&m % &four).is_zero() {
        m /= &four;
    }
    &m % &eight == BigInt::from(7)
}

/// First (x, y, z) with x² + y² + z² = n, scanning x then y downward.
fn three_squares(n: u64) -> Option<(u64, u64, u64)> {
    for x in (0..=n.sqrt()).rev() {
        let rem = n - x * x;
        for y in (0..=rem.sqrt()).rev() {
            let rem2 = rem - y * y;
            let z = rem2.sqrt();
            if z * z == rem2 {
                return Some((x, y, z));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Atom tests.

/// Decide whether a is an atom (irreducible: no factorization into two
/// non-units).
pub fn is_atom(a: &SkewPoly) -> Result<Verdict> {
    if a.is_zero() {
        return Err(Error::ZeroInput("isAtom"));
    }
    if a.is_unit() {
        return Err(Error::UnitInput("isAtom"));
    }
    let m = a.monic();
    if m.deg() == Some(1) {
        return Ok(Verdict::yes("degree-one"));
    }
    match m.ring() {
        SkewRing::Ff { .. } => ff_is_atom(&m),
        SkewRing::Hq => hq_is_atom(&m),
        SkewRing::QxShift => qx_is_atom(&m),
    }
}

/// Enumerate all monic polynomials of degree d over F_q, cap-checked.
pub(crate) fn ff_enumerate_monic(ring: &SkewRing, d: usize) -> Result<Vec<SkewPoly>> {
    let field = ring.field().expect("finite-field ring");
    let q = field.order();
    let count = q.checked_pow(d as u32).filter(|&c| c <= FF_SWEEP_CAP);
    let Some(count) = count else {
        return Err(Error::CapExceeded {
            what: format!("monic sweep of degree {d} over GF({q})"),
            cap: FF_SWEEP_CAP,
        });
    };
    let mut out = Vec::with_capacity(count as usize);
    let mut idx = vec![0u64; d];
    loop {
        let mut coeffs: Vec<Scalar> = idx
            .iter()
            .map(|&i| Scalar::Fq(crate::scalars::FqElem::from_index(field, i)))
            .collect();
        coeffs.push(ring.one_scalar());
        out.push(SkewPoly::from_scalars(ring, coeffs));
        let mut k = 0;
        loop {
            if k == d {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < q {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Smallest-degree proper monic right factor of monic m, or None if m is an
/// atom. Errors with CapExceeded when a needed sweep is too large.
fn ff_min_right_factor(m: &SkewPoly) -> Result<Option<SkewPoly>> {
    let n = m.deg().unwrap();
    for d in 1..n {
        for g in ff_enumerate_monic(m.ring(), d)? {
            if g.right_divides(m) {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

fn ff_is_atom(m: &SkewPoly) -> Result<Verdict> {
    match ff_min_right_factor(m) {
        Ok(None) => Ok(Verdict::yes("right-factor-sweep-exhausted")),
        Ok(Some(g)) => {
            let h = m.div_right(&g)?.0;
            if h.mul(&g) != *m {
                return Err(Error::InvariantViolation(
                    "right-factor witness does not multiply back".into(),
                ));
            }
            Ok(Verdict::no("proper-right-factor")
                .with_witness(Witness::Factorization { factors: vec![h, g] }))
        }
        Err(Error::CapExceeded { what, cap }) => Ok(Verdict::inconclusive(format!(
            "{what} exceeds the cap of {cap} candidates"
        ))),
        Err(e) => Err(e),
    }
}

/// The bound of a quaternion polynomial as a rational polynomial (monic
/// bounds over H_Q[t] are central, i.e. lie in Q[t]).
fn central_qpoly(b: &SkewPoly) -> Result<QPoly> {
    let mut coeffs = Vec::with_capacity(b.coeffs().len());
    for c in b.coeffs() {
        let q = c.as_quat();
        if !q.is_central() {
            return Err(Error::InvariantViolation(
                "monic bound over the quaternions must be central".into(),
            ));
        }
        coeffs.push(q.w.clone());
    }
    Ok(QPoly::new(coeffs))
}

/// Embed a rational polynomial into H_Q[t] (central coefficients).
fn qpoly_to_hq(ring: &SkewRing, p: &QPoly) -> SkewPoly {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| Scalar::Quat(Quat::from_rational(c.clone())))
        .collect();
    SkewPoly::from_scalars(ring, coeffs)
}

/// Atom test over H_Q[t], by the structure of R/R·bound:
/// a reducible bound rules an atom out; for an irreducible bound p the only
/// possible atom degrees are deg p (a = p, iff the class of p is empty, i.e.
/// H ⊗ Q[t]/(p) is a division ring) and deg p / 2 (always an atom).
fn hq_is_atom(m: &SkewPoly) -> Result<Verdict> {
    let b = bound(m)?.expect("every quaternion polynomial is bounded");
    let bq = central_qpoly(&b)?;
    let fact = comm_factor_q(&bq);
    if !fact.complete {
        return Ok(Verdict::inconclusive(
            "bound factorization over Q exceeded its degree cap",
        ));
    }
    if fact.factors.len() > 1 {
        return Ok(Verdict::no("bound-reducible").with_witness(Witness::BoundWitness(b)));
    }
    let p = &fact.factors[0];
    let dp = p.deg().unwrap();
    let n = m.deg().unwrap();
    if 2 * n == dp {
        return Ok(Verdict::yes("half-bound-degree"));
    }
    if n == dp {
        if dp % 2 == 1 {
            return Ok(Verdict::yes("odd-bound-degree"));
        }
        if dp == 2 {
            let tau = -p.coeff(1);
            let nu = p.coeff(0);
            return match class_representative(&tau, &nu)? {
                None => Ok(Verdict::yes("empty-quaternion-class")),
                Some(c) => {
                    let cbar = Quat::from_rational(tau).sub(&c);
                    let left = hq_linear(m.ring(), &cbar);
                    let right = hq_linear(m.ring(), &c);
                    if left.mul(&right) != *m {
                        return Err(Error::InvariantViolation(
                            "class-root factorization does not multiply back".into(),
                        ));
                    }
                    Ok(Verdict::no("class-root").with_witness(Witness::Factorization {
                        factors: vec![left, right],
                    }))
                }
            };
        }
        return Ok(Verdict::inconclusive(
            "quaternion splitting over an even-degree field of degree ≥ 4 is out of scope",
        ));
    }
    // Composition-length arithmetic permits no other degree combination.
    Ok(Verdict::inconclusive("unexpected bound-degree relation"))
}

fn qx_is_atom(m: &SkewPoly) -> Result<Verdict> {
    let n = m.deg().unwrap(); // ≥ 2 here
    if (0..n).all(|k| m.coeff(k).is_zero()) {
        // m = t^n with n ≥ 2.
        let ring = m.ring();
        let t = SkewPoly::t(ring);
        let rest = SkewPoly::monomial(ring, ring.one_scalar(), n - 1);
        return Ok(Verdict::no("power-of-t")
            .with_witness(Witness::Factorization { factors: vec![t, rest] }));
    }
    Ok(Verdict::inconclusive(
        "no general atom test over the shift ring beyond degree 1",
    ))
}

// ---------------------------------------------------------------------------
// Factorization into atoms.

#[derive(Clone, Debug, PartialEq)]
pub enum FactorStatus {
    /// Every piece is a certified atom.
    Complete,
    /// A residual remains (multiplying on the right of the listed atoms).
    Partial { residual: SkewPoly, reason: String },
}

/// A factorization `unit · atoms[0] ⋯ atoms[k-1] (· residual) = input`.
/// Every listed atom passes `isAtom = Yes`; the residual (if any) is the
/// part the engine could not certify further.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationResult {
    pub unit: Scalar,
    pub atoms: Vec<SkewPoly>,
    pub status: FactorStatus,
}

impl FactorizationResult {
    /// Multiply everything back (for verification).
    pub fn product(&self) -> SkewPoly {
        let ring = self
            .atoms
            .first()
            .map(|a| a.ring())
            .or(match &self.status {
                FactorStatus::Partial { residual, .. } => Some(residual.ring()),
                FactorStatus::Complete => None,
            })
            .expect("factorization of a non-unit has at least one piece");
        let mut acc = SkewPoly::constant(ring, self.unit.clone());
        for a in &self.atoms {
            acc = acc.mul(a);
        }
        if let FactorStatus::Partial { residual, .. } = &self.status {
            acc = acc.mul(residual);
        }
        acc
    }

    pub fn is_complete(&self) -> bool {
        matches!(self.status, FactorStatus::Complete)
    }
}

/// Factor a into atoms (as far as the per-ring engines can certify).
///
/// F_q[t;σ]: peels minimal-degree right factors; always complete, but a
/// too-large sweep surfaces as a CapExceeded error. H_Q[t]: peels degree-1
/// left roots drawn from the classes of the central factors of the bound
/// (and whole central atoms when their class is empty); a resisting residual
/// is returned as Partial with the blocking reason. Q(x)[t;shift]: extracts
/// the maximal left power of t; the unbounded cofactor beyond degree 1 stays
/// as a Partial residual.
pub fn factor_atoms(a: &SkewPoly) -> Result<FactorizationResult> {
    if a.is_zero() {
        return Err(Error::ZeroInput("factorAtoms"));
    }
    if a.is_unit() {
        return Err(Error::UnitInput("factorAtoms"));
    }
    let (unit, m) = a.monic_with_unit();
    let (atoms, status) = match m.ring() {
        SkewRing::Ff { .. } => ff_factor_atoms(m)?,
        SkewRing::Hq => hq_factor_atoms(m)?,
        SkewRing::QxShift => qx_factor_atoms(m)?,
    };
    let result = FactorizationResult { unit, atoms, status };
    if result.product() != *a {
        return Err(Error::InvariantViolation(
            "factorization does not multiply back to the input".into(),
        ));
    }
    Ok(result)
}

/// Right-peeling: repeatedly split off the minimal-degree monic right
/// factor (necessarily an atom).
fn ff_factor_atoms(mut m: SkewPoly) -> Result<(Vec<SkewPoly>, FactorStatus)> {
    let mut collected = Vec::new();
    loop {
        let n = m.deg().unwrap();
        if n == 0 {
            break;
        }
        if n == 1 {
            collected.push(m.clone());
            break;
        }
        match ff_min_right_factor(&m)? {
            None => {
                collected.push(m.clone());
                break;
            }
            Some(g) => {
                m = m.div_right(&g)?.0;
                collected.push(g);
            }
        }
    }
    collected.reverse();
    Ok((collected, FactorStatus::Complete))
}

enum PeelOutcome {
    Peeled(SkewPoly, SkewPoly),
    Stuck(String),
}

/// One left peel over H_Q[t]: a degree-1 left factor t − c with c drawn from
/// the class of a central irreducible factor of the bound, or a whole
/// central quadratic atom when its class is empty.
fn hq_peel_left(m: &SkewPoly) -> Result<PeelOutcome> {
    let ring = m.ring();
    let b = bound(m)?.expect("every quaternion polynomial is bounded");
    let bq = central_qpoly(&b)?;
    let fact = comm_factor_q(&bq);
    if !fact.complete {
        return Ok(PeelOutcome::Stuck(
            "bound factorization over Q exceeded its degree cap".into(),
        ));
    }
    let mut last: Option<&QPoly> = None;
    for p in &fact.factors {
        if last == Some(p) {
            continue;
        }
        last = Some(p);
        match p.deg().unwrap() {
            1 => {
                let root = Quat::from_rational(-p.coeff(0));
                let cand = hq_linear(ring, &root);
                if cand.left_divides(m) {
                    let rest = m.div_left(&cand)?.0;
                    return Ok(PeelOutcome::Peeled(cand, rest));
                }
            }
            2 => {
                let tau = -p.coeff(1);
                let nu = p.coeff(0);
                let pc = qpoly_to_hq(ring, p);
                let rem = m.div_right(&pc)?.1;
                if rem.is_zero() {
                    match class_representative(&tau, &nu)? {
                        None => {
                            // p itself is an atom (division cofactor ring).
                            let rest = m.div_left(&pc)?.0;
                            return Ok(PeelOutcome::Peeled(pc, rest));
                        }
                        Some(c) => {
                            let cand = hq_linear(ring, &c);
                            let (rest, r) = m.div_left(&cand)?;
                            if !r.is_zero() {
                                return Err(Error::InvariantViolation(
                                    "class representative is not a left root".into(),
                                ));
                            }
                            return Ok(PeelOutcome::Peeled(cand, rest));
                        }
                    }
                }
                let alpha = rem.coeff(1).as_quat().clone();
                let beta = rem.coeff(0).as_quat().clone();
                if !alpha.is_zero() {
                    // Left-root candidate of the remainder: c = −βα⁻¹.
                    let c = beta.mul(&alpha.inv()).neg();
                    let cand = hq_linear(ring, &c);
                    if cand.left_divides(m) {
                        let rest = m.div_left(&cand)?.0;
                        return Ok(PeelOutcome::Peeled(cand, rest));
                    }
                }
            }
            _ => {}
        }
    }
    Ok(PeelOutcome::Stuck(
        "no further left factor extractable from degree ≤ 2 bound classes".into(),
    ))
}

fn hq_factor_atoms(mut m: SkewPoly) -> Result<(Vec<SkewPoly>, FactorStatus)> {
    let mut atoms = Vec::new();
    loop {
        let n = m.deg().unwrap();
        if n == 0 {
            return Ok((atoms, FactorStatus::Complete));
        }
        if n == 1 {
            atoms.push(m);
            return Ok((atoms, FactorStatus::Complete));
        }
        match hq_peel_left(&m)? {
            PeelOutcome::Peeled(atom, rest) => {
                atoms.push(atom);
                m = rest;
            }
            PeelOutcome::Stuck(reason) => {
                return match is_atom(&m)? {
                    v if v.is_yes() => {
                        atoms.push(m);
                        Ok((atoms, FactorStatus::Complete))
                    }
                    v if v.is_no() => Ok((
                        atoms,
                        FactorStatus::Partial {
                            residual: m,
                            reason: format!("residual is reducible but resists extraction: {reason}"),
                        },
                    )),
                    v => Ok((
                        atoms,
                        FactorStatus::Partial {
                            residual: m,
                            reason: v.reason,
                        },
                    )),
                };
            }
        }
    }
}

/// Extract the maximal power of t on the left: m = t^k · c with
/// c = σ^{-k}(coefficients shifted down by k), c(0) ≠ 0.
fn qx_factor_atoms(m: SkewPoly) -> Result<(Vec<SkewPoly>, FactorStatus)> {
    let ring = m.ring().clone();
    let n = m.deg().unwrap();
    let k = (0..=n).find(|&i| !m.coeff(i).is_zero()).unwrap();
    let mut atoms = vec![SkewPoly::t(&ring); k];
    let cofactor = SkewPoly::from_scalars(
        &ring,
        (k..=n).map(|i| m.coeff(i)).collect(),
    )
    .twist_coeffs(-(k as i64));
    match cofactor.deg().unwrap() {
        0 => Ok((atoms, FactorStatus::Complete)),
        1 => {
            atoms.push(cofactor);
            Ok((atoms, FactorStatus::Complete))
        }
        _ => Ok((
            atoms,
            FactorStatus::Partial {
                residual: cofactor,
                reason: "no general atom factorization over the shift ring beyond degree 1"
                    .into(),
            },
        )),
    }
}

// ---------------------------------------------------------------------------
// c-irreducibility.

/// Decide c-irreducibility: a is c-reducible when a = b·b′ = c′·c for
/// non-units with b similar to c, i.e. some proper left factor is similar
/// to some proper right factor.
pub fn is_c_irreducible(a: &SkewPoly) -> Result<Verdict> {
    if a.is_zero() {
        return Err(Error::ZeroInput("isCIrreducible"));
    }
    if a.is_unit() {
        return Err(Error::UnitInput("isCIrreducible"));
    }
    let m = a.monic();
    if m.deg() == Some(1) {
        return Ok(Verdict::yes("degree-one"));
    }
    match m.ring() {
        SkewRing::Ff { .. } => ff_c_irreducible(&m),
        SkewRing::Hq => {
            // H_Q[t] is a bounded PID: c-irreducible iff irreducible.
            let v = is_atom(&m)?;
            Ok(Verdict {
                value: v.value,
                reason: format!("bounded-atom-equivalence: {}", v.reason),
                witness: v.witness,
            })
        }
        SkewRing::QxShift => {
            let n = m.deg().unwrap();
            if m.coeff(0).is_zero() && n >= 2 {
                // t is both a proper left and a proper right factor.
                let t = SkewPoly::t(m.ring());
                return Ok(Verdict::no("two-sided-factor-t").with_witness(
                    Witness::CReduction {
                        left: t.clone(),
                        right: t,
                    },
                ));
            }
            Ok(Verdict::inconclusive(
                "no general similarity test over the shift ring beyond degree 1",
            ))
        }
    }
}

/// Definitional scan over F_q[t;σ]: enumerate proper monic left and right
/// factors and test all pairs for similarity.
fn ff_c_irreducible(m: &SkewPoly) -> Result<Verdict> {
    let n = m.deg().unwrap();
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for d in 1..n {
        let candidates = match ff_enumerate_monic(m.ring(), d) {
            Ok(c) => c,
            Err(Error::CapExceeded { what, cap }) => {
                return Ok(Verdict::inconclusive(format!(
                    "{what} exceeds the cap of {cap} candidates"
                )));
            }
            Err(e) => return Err(e),
        };
        for g in candidates {
            if g.left_divides(m) {
                lefts.push(g.clone());
            }
            if g.right_divides(m) {
                rights.push(g);
            }
        }
    }
    let mut undecided = false;
    for b in &lefts {
        for c in &rights {
            let v = is_similar(b, c)?;
            match v.value {
                VerdictValue::Yes => {
                    return Ok(Verdict::no("similar-factor-pair").with_witness(
                        Witness::CReduction {
                            left: b.clone(),
                            right: c.clone(),
                        },
                    ));
                }
                VerdictValue::No => {}
                VerdictValue::Inconclusive => undecided = true,
            }
        }
    }
    if undecided {
        Ok(Verdict::inconclusive(
            "similarity undecided for at least one factor pair",
        ))
    } else {
        Ok(Verdict::yes("no-similar-factor-pair"))
    }
}
