//! Finite fields `F_q`, `q = p^m`, as quotients `F_p[x]/(modulus)`.
//!
//! The fields in play are tiny (`F_2` through `F_9` in practice), so elements
//! are coordinate vectors of `u64` residues relative to a fixed irreducible
//! modulus.  The standard moduli for q = 4, 8, 9 are built in; anything else
//! is found by exhaustive search at construction time.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{self, FieldOps, PrimeField};

#[derive(Debug)]
pub struct FiniteField {
    p: u64,
    m: usize,
    /// Monic irreducible modulus, lowest power first, length `m + 1`.
    modulus: Vec<u64>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

impl FiniteField {
    /// The field with `q` elements; fails unless `q` is a prime power.
    pub fn with_order(q: u64) -> Result<Arc<FiniteField>> {
        let (p, m) = prime_power(q).ok_or_else(|| {
            Error::Parse { pos: 0, msg: format!("{q} is not a prime power") }
        })?;
        Ok(Self::new(p, m))
    }

    pub fn new(p: u64, m: usize) -> Arc<FiniteField> {
        assert!(m >= 1 && p >= 2);
        let modulus = match (p, m) {
            (_, 1) => vec![0, 1], // x itself: the quotient is F_p
            (2, 2) => vec![1, 1, 1],
            (2, 3) => vec![1, 1, 0, 1],
            (3, 2) => vec![1, 0, 1],
            _ => search_irreducible(p, m),
        };
        Arc::new(FiniteField { p, m, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ext_degree(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.m as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn prime_field(&self) -> PrimeField {
        PrimeField::new(self.p)
    }
}

fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut rest = q;
    let mut m = 0;
    while rest > 1 {
        if rest % p != 0 {
            return None;
        }
        rest /= p;
        m += 1;
    }
    Some((p, m))
}

/// Exhaustive search for a monic irreducible of degree `m` over `F_p`.
fn search_irreducible(p: u64, m: usize) -> Vec<u64> {
    let count = p.pow(m as u32);
    'cand: for idx in 0..count {
        let mut poly = Vec::with_capacity(m + 1);
        let mut rest = idx;
        for _ in 0..m {
            poly.push(rest % p);
            rest /= p;
        }
        poly.push(1);
        // Trial-divide by every monic polynomial of degree 1..=m/2.
        for d in 1..=m / 2 {
            let dcount = p.pow(d as u32);
            for didx in 0..dcount {
                let mut div = Vec::with_capacity(d + 1);
                let mut r = didx;
                for _ in 0..d {
                    div.push(r % p);
                    r /= p;
                }
                div.push(1);
                if fp_poly_rem_is_zero(p, &poly, &div) {
                    continue 'cand;
                }
            }
        }
        if m == 1 || poly[0] != 0 {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn fp_poly_rem_is_zero(p: u64, num: &[u64], den: &[u64]) -> bool {
    let mut rem: Vec<u64> = num.iter().map(|c| c % p).collect();
    while rem.len() >= den.len() {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - den.len();
            for (i, &c) in den.iter().enumerate() {
                let sub = lead * c % p;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        debug_assert_eq!(*rem.last().unwrap(), 0);
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// An element of a finite field: `m` residues mod `p`.
#[derive(Clone)]
pub struct FqElem {
    field: Arc<FiniteField>,
    c: Vec<u64>,
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.c == other.c
    }
}
impl Eq for FqElem {}

impl FqElem {
    pub fn zero(field: &Arc<FiniteField>) -> Self {
        FqElem { field: field.clone(), c: vec![0; field.m] }
    }

    pub fn one(field: &Arc<FiniteField>) -> Self {
        Self::from_u64(field, 1)
    }

    /// Embed an integer residue into the prime subfield.
    pub fn from_u64(field: &Arc<FiniteField>, v: u64) -> Self {
        let mut c = vec![0; field.m];
        c[0] = v % field.p;
        FqElem { field: field.clone(), c }
    }

    /// The extension generator `a` (the class of `x`); needs `m >= 2`.
    pub fn generator(field: &Arc<FiniteField>) -> Self {
        assert!(field.m >= 2, "prime fields have no extension generator");
        let mut c = vec![0; field.m];
        c[1] = 1;
        FqElem { field: field.clone(), c }
    }

    /// Enumerate all q elements: index in `0..field.order()`, mixed radix.
    pub fn from_index(field: &Arc<FiniteField>, idx: u64) -> Self {
        let mut c = vec![0; field.m];
        let mut rest = idx;
        for slot in c.iter_mut() {
            *slot = rest % field.p;
            rest /= field.p;
        }
        FqElem { field: field.clone(), c }
    }

    pub fn index(&self) -> u64 {
        let mut idx = 0;
        for &c in self.c.iter().rev() {
            idx = idx * self.field.p + c;
        }
        idx
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coords(&self) -> &[u64] {
        &self.c
    }

    pub fn from_coords(field: &Arc<FiniteField>, coords: &[u64]) -> Self {
        assert_eq!(coords.len(), field.m);
        FqElem { field: field.clone(), c: coords.iter().map(|&v| v % field.p).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&x| x == 0)
    }

    fn check_same_field(&self, other: &Self) {
        assert!(
            *self.field == *other.field,
            "finite field mismatch: F_{} vs F_{}",
            self.field.order(),
            other.field.order()
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let p = self.field.p;
        let c = self.c.iter().zip(&other.c).map(|(a, b)| (a + b) % p).collect();
        FqElem { field: self.field.clone(), c }
    }

    pub fn neg(&self) -> Self {
        let p = self.field.p;
        FqElem {
            field: self.field.clone(),
            c: self.c.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let p = self.field.p;
        let m = self.field.m;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        // Reduce modulo the defining polynomial.
        for k in (m..prod.len()).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &c) in self.field.modulus[..m].iter().enumerate() {
                let idx = k - m + i;
                prod[idx] = (prod[idx] + p - lead * c % p) % p;
            }
        }
        prod.truncate(m);
        FqElem { field: self.field.clone(), c: prod }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = FqElem::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in F_q");
        self.pow(self.field.order() - 2)
    }

    /// `x -> x^(p^k)`, the Frobenius automorphism iterated `k` times.
    pub fn frobenius(&self, k: usize) -> Self {
        let k = k % self.field.m;
        let mut out = self.clone();
        for _ in 0..k {
            out = out.pow(self.field.p);
        }
        out
    }
}

/// An `F_p`-basis of the fixed field of `Frobenius^s` inside `F_q`.
pub fn fixed_field_basis(field: &Arc<FiniteField>, s: usize) -> Vec<FqElem> {
    let fp = field.prime_field();
    let m = field.m;
    // Rows of (Frob^s - id) acting on coordinates; basis vectors go in columns.
    let mut mat = vec![vec![0u64; m]; m];
    for j in 0..m {
        let mut e = vec![0u64; m];
        e[j] = 1;
        let img = FqElem::from_coords(field, &e).frobenius(s);
        for i in 0..m {
            mat[i][j] = fp.sub(&img.c[i], &e[i]);
        }
    }
    linalg::nullspace(&fp, &mat)
        .into_iter()
        .map(|v| FqElem::from_coords(field, &v))
        .collect()
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (k, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            };
            let part = if k == 0 {
                format!("{c}")
            } else if c == 1 {
                var
            } else {
                format!("{c}*{var}")
            };
            parts.push(part);
        }
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqElem[F_{}]({})", self.field.order(), self)
    }
}
