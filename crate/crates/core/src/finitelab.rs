//! Brute-force laboratory for primeness notions on small finite algebras.
//!
//! Everything here evaluates the *definitions* literally — quantifiers over
//! all elements or all left ideals of a finite algebra over a prime field —
//! with no shortcuts borrowed from the fast classifiers. The lab serves as
//! an independent referee: the named example rings reproduce the known
//! primeness patterns, every listed characterization is checked for
//! equivalence on every ideal, and quotients of skew polynomial rings by
//! invariant elements bridge the lab verdicts to the PID classifiers.

use crate::error::{Error, Result};
use crate::linalg::{self, FieldOps, Matrix, PrimeField};
use crate::scalars::{FiniteField, FqElem, Scalar};
use crate::skewpoly::{SkewPoly, SkewRing};
use crate::structure::is_invariant;
use std::fmt;

/// Cap on the element count p^dim of a lab algebra.
pub const ELEMENT_CAP: u64 = 1 << 16;
/// Cap on the number of echelon-form subspace candidates swept while
/// enumerating left ideals.
pub const SUBSPACE_CANDIDATE_CAP: u64 = 1 << 20;

/// An element of a [`FiniteAlgebra`]: coordinates over the basis, reduced
/// mod p.
pub type Elt = Vec<u64>;

/// A finite-dimensional associative unital algebra over a prime field F_p,
/// given by structure constants. Associativity and the unit laws are
/// verified on construction.
#[derive(Clone)]
pub struct FiniteAlgebra {
    name: String,
    prime: PrimeField,
    dim: usize,
    labels: Vec<String>,
    /// `table[i][j]` = coordinates of basis_i · basis_j.
    table: Vec<Vec<Elt>>,
    one: Elt,
}

impl FiniteAlgebra {
    pub fn new(
        name: String,
        p: u64,
        labels: Vec<String>,
        table: Vec<Vec<Elt>>,
        one: Elt,
    ) -> Result<FiniteAlgebra> {
        let dim = labels.len();
        let alg = FiniteAlgebra {
            name,
            prime: PrimeField::new(p),
            dim,
            labels,
            table,
            one,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        if n == 0 || self.table.len() != n || self.one.len() != n {
            return Err(Error::InvariantViolation(format!(
                "malformed structure constants for algebra {}",
                self.name
            )));
        }
        for row in &self.table {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(Error::InvariantViolation(format!(
                    "malformed structure constants for algebra {}",
                    self.name
                )));
            }
        }
        for i in 0..n {
            let bi = self.basis_elt(i);
            if self.mul(&self.one, &bi) != bi || self.mul(&bi, &self.one) != bi {
                return Err(Error::InvariantViolation(format!(
                    "unit law fails on basis element {} of {}",
                    self.labels[i], self.name
                )));
            }
            for j in 0..n {
                let bj = self.basis_elt(j);
                for k in 0..n {
                    let bk = self.basis_elt(k);
                    let left = self.mul(&self.mul(&bi, &bj), &bk);
                    let right = self.mul(&bi, &self.mul(&bj, &bk));
                    if left != right {
                        return Err(Error::InvariantViolation(format!(
                            "associativity fails on ({}, {}, {}) in {}",
                            self.labels[i], self.labels[j], self.labels[k], self.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn p(&self) -> u64 {
        self.prime.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero_elt(&self) -> Elt {
        vec![0; self.dim]
    }

    pub fn one_elt(&self) -> Elt {
        self.one.clone()
    }

    pub fn basis_elt(&self, i: usize) -> Elt {
        let mut v = self.zero_elt();
        v[i] = 1;
        v
    }

    pub fn is_zero_elt(&self, x: &Elt) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &Elt, y: &Elt) -> Elt {
        x.iter()
            .zip(y)
            .map(|(a, b)| self.prime.add(a, b))
            .collect()
    }

    pub fn sub(&self, x: &Elt, y: &Elt) -> Elt {
        x.iter()
            .zip(y)
            .map(|(a, b)| self.prime.sub(a, b))
            .collect()
    }

    pub fn scale(&self, c: u64, x: &Elt) -> Elt {
        x.iter().map(|a| self.prime.mul(&c, a)).collect()
    }

    pub fn mul(&self, x: &Elt, y: &Elt) -> Elt {
        let p = self.prime.p;
        let mut out = vec![0u64; self.dim];
        for i in 0..self.dim {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.dim {
                if y[j] == 0 {
                    continue;
                }
                let c = x[i] * y[j] % p;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = (*o + c * *t) % p;
                }
            }
        }
        out
    }

    /// p^dim, guarded by [`ELEMENT_CAP`].
    pub fn element_count(&self) -> Result<u64> {
        let mut count: u64 = 1;
        for _ in 0..self.dim {
            count = count.saturating_mul(self.p());
            if count > ELEMENT_CAP {
                return Err(Error::CapExceeded {
                    what: format!("element sweep of {} (p^dim too large)", self.name),
                    cap: ELEMENT_CAP,
                });
            }
        }
        Ok(count)
    }

    /// Every element of the algebra, in odometer order.
    pub fn elements(&self) -> Result<Vec<Elt>> {
        let count = self.element_count()?;
        let p = self.p();
        let mut out = Vec::with_capacity(count as usize);
        let mut cur = self.zero_elt();
        loop {
            out.push(cur.clone());
            let mut k = 0;
            loop {
                if k == self.dim {
                    return Ok(out);
                }
                cur[k] += 1;
                if cur[k] < p {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    /// Pretty-print an element as a combination of basis labels.
    pub fn describe(&self, x: &Elt) -> String {
        let mut parts = Vec::new();
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c == 1 {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("{c}·{}", self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} over F_{})", self.name, self.dim, self.p())
    }
}

/// A subspace of a [`FiniteAlgebra`] in canonical reduced row-echelon form.
///
/// Used for left ideals, two-sided ideals, and auxiliary subspaces such as
/// quotient ideals (𝔭:b). Canonical form makes equality structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteIdeal {
    basis: Matrix<u64>,
}

impl FiniteIdeal {
    pub fn zero() -> FiniteIdeal {
        FiniteIdeal { basis: Vec::new() }
    }

    /// The span of the given vectors, canonicalized. The result is a
    /// subspace; use [`FiniteIdeal::is_left_ideal`] to check closure.
    pub fn span(alg: &FiniteAlgebra, vecs: &[Elt]) -> FiniteIdeal {
        let mut mat: Matrix<u64> = vecs.to_vec();
        linalg::rref(&alg.prime, &mut mat);
        mat.retain(|row| row.iter().any(|&c| c != 0));
        FiniteIdeal { basis: mat }
    }

    /// The left ideal generated by the given elements: the span of
    /// basis_i · g over all algebra basis elements and generators (the
    /// algebra is unital, so each g lies in that span).
    pub fn generated_by(alg: &FiniteAlgebra, gens: &[Elt]) -> FiniteIdeal {
        let mut rows = Vec::new();
        for g in gens {
            for i in 0..alg.dim() {
                rows.push(alg.mul(&alg.basis_elt(i), g));
            }
        }
        FiniteIdeal::span(alg, &rows)
    }

    pub fn improper(alg: &FiniteAlgebra) -> FiniteIdeal {
        let rows: Vec<Elt> = (0..alg.dim()).map(|i| alg.basis_elt(i)).collect();
        FiniteIdeal::span(alg, &rows)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &Matrix<u64> {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_improper(&self, alg: &FiniteAlgebra) -> bool {
        self.rank() == alg.dim()
    }

    pub fn is_proper(&self, alg: &FiniteAlgebra) -> bool {
        !self.is_improper(alg)
    }

    pub fn contains(&self, alg: &FiniteAlgebra, x: &Elt) -> bool {
        linalg::in_row_space(&alg.prime, &self.basis, x)
    }

    pub fn subset_of(&self, alg: &FiniteAlgebra, other: &FiniteIdeal) -> bool {
        self.basis.iter().all(|row| other.contains(alg, row))
    }

    pub fn is_left_ideal(&self, alg: &FiniteAlgebra) -> bool {
        (0..alg.dim()).all(|k| {
            let e = alg.basis_elt(k);
            self.basis
                .iter()
                .all(|row| self.contains(alg, &alg.mul(&e, row)))
        })
    }

    pub fn is_two_sided(&self, alg: &FiniteAlgebra) -> bool {
        self.is_left_ideal(alg)
            && (0..alg.dim()).all(|k| {
                let e = alg.basis_elt(k);
                self.basis
                    .iter()
                    .all(|row| self.contains(alg, &alg.mul(row, &e)))
            })
    }

    /// All p^rank elements of the subspace.
    pub fn elements(&self, alg: &FiniteAlgebra) -> Vec<Elt> {
        let p = alg.p();
        let r = self.rank();
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; r];
        loop {
            let mut v = alg.zero_elt();
            for (c, row) in coeffs.iter().zip(&self.basis) {
                if *c != 0 {
                    v = alg.add(&v, &alg.scale(*c, row));
                }
            }
            out.push(v);
            let mut k = 0;
            loop {
                if k == r {
                    return out;
                }
                coeffs[k] += 1;
                if coeffs[k] < p {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
        }
    }

    pub fn sum(&self, alg: &FiniteAlgebra, other: &FiniteIdeal) -> FiniteIdeal {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        FiniteIdeal::span(alg, &rows)
    }

    /// The product ideal: the additive span of {xy : x ∈ self, y ∈ other},
    /// which is spanned by the pairwise products of basis vectors.
    pub fn product(&self, alg: &FiniteAlgebra, other: &FiniteIdeal) -> FiniteIdeal {
        let mut rows = Vec::new();
        for x in &self.basis {
            for y in &other.basis {
                rows.push(alg.mul(x, y));
            }
        }
        FiniteIdeal::span(alg, &rows)
    }

    pub fn intersect(&self, alg: &FiniteAlgebra, other: &FiniteIdeal) -> FiniteIdeal {
        let common: Vec<Elt> = self
            .elements(alg)
            .into_iter()
            .filter(|x| other.contains(alg, x))
            .collect();
        FiniteIdeal::span(alg, &common)
    }

    /// Right-multiplication image: the span of {x·b : x ∈ self}.
    pub fn mul_elt(&self, alg: &FiniteAlgebra, b: &Elt) -> FiniteIdeal {
        let rows: Vec<Elt> = self.basis.iter().map(|x| alg.mul(x, b)).collect();
        FiniteIdeal::span(alg, &rows)
    }

    pub fn describe(&self, alg: &FiniteAlgebra) -> String {
        if self.is_zero() {
            return "{0}".to_string();
        }
        let parts: Vec<String> = self.basis.iter().map(|row| alg.describe(row)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}

/// The left quotient ideal (𝔭:b) = {x ∈ R : xb ∈ 𝔭}.
pub fn quotient_by(alg: &FiniteAlgebra, p: &FiniteIdeal, b: &Elt) -> FiniteIdeal {
    // x ↦ xb is linear; xb ∈ 𝔭 ⇔ xb ⊥ nullspace(basis(𝔭)), which is a
    // linear condition on the coordinates of x.
    let f = &alg.prime;
    let n = alg.dim();
    // Rows of the right-multiplication matrix: e_i · b.
    let rmul: Matrix<u64> = (0..n).map(|i| alg.mul(&alg.basis_elt(i), b)).collect();
    let perp: Matrix<u64> = if p.basis.is_empty() {
        // Zero ideal: the orthogonal complement is the whole space.
        (0..n).map(|i| alg.basis_elt(i)).collect()
    } else {
        linalg::nullspace(f, &p.basis)
    };
    if perp.is_empty() {
        // 𝔭 is the whole space; every x qualifies.
        return FiniteIdeal::improper(alg);
    }
    // Condition matrix: for each w ∈ perp, Σ_i x_i (e_i·b)·w = 0.
    let cond: Matrix<u64> = perp
        .iter()
        .map(|w| {
            (0..n)
                .map(|i| {
                    let mut acc = 0u64;
                    for j in 0..n {
                        acc = (acc + rmul[i][j] * w[j]) % f.p;
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let sols = linalg::nullspace(f, &cond);
    FiniteIdeal::span(alg, &sols)
}

/// The largest two-sided ideal id(I) contained in the left ideal I:
/// {x ∈ I : xR ⊆ I}. For a left ideal I this set is itself two-sided and
/// contains every two-sided ideal inside I.
pub fn id_of(alg: &FiniteAlgebra, ideal: &FiniteIdeal) -> FiniteIdeal {
    let core: Vec<Elt> = ideal
        .elements(alg)
        .into_iter()
        .filter(|x| (0..alg.dim()).all(|k| ideal.contains(alg, &alg.mul(x, &alg.basis_elt(k)))))
        .collect();
    let result = FiniteIdeal::span(alg, &core);
    debug_assert!(result.is_two_sided(alg));
    result
}

/// Enumerates every left ideal of the algebra by an echelon-form subspace
/// sweep with a left-closure filter, in canonical order. Includes {0} and
/// the improper ideal A.
pub fn enumerate_left_ideals(alg: &FiniteAlgebra) -> Result<Vec<FiniteIdeal>> {
    alg.element_count()?;
    let candidates = subspace_candidate_count(alg.p(), alg.dim());
    if candidates > SUBSPACE_CANDIDATE_CAP {
        return Err(Error::CapExceeded {
            what: format!("subspace sweep of {} ({candidates} candidates)", alg.name),
            cap: SUBSPACE_CANDIDATE_CAP,
        });
    }
    let mut out = Vec::new();
    sweep_subspaces(alg.p(), alg.dim(), &mut |basis| {
        let candidate = FiniteIdeal {
            basis: basis.clone(),
        };
        if candidate.is_left_ideal(alg) {
            out.push(candidate);
        }
    });
    Ok(out)
}

/// The Galois number: how many subspaces F_p^n has, i.e. how many echelon
/// candidates the sweep will visit.
fn subspace_candidate_count(p: u64, n: usize) -> u64 {
    // Sum of Gaussian binomial coefficients [n choose k]_p. The factors are
    // paired so every prefix product is itself a Gaussian binomial, keeping
    // the integer divisions exact.
    let mut total: u64 = 0;
    for k in 0..=n {
        let mut value: u64 = 1;
        for i in 0..k {
            let top = p.saturating_pow((n - k + i + 1) as u32).saturating_sub(1);
            let bot = p.saturating_pow((i + 1) as u32) - 1;
            value = value.saturating_mul(top) / bot;
        }
        total = total.saturating_add(value);
    }
    total
}

/// Visits the canonical reduced-row-echelon basis of every subspace of
/// F_p^n exactly once.
fn sweep_subspaces(p: u64, n: usize, visit: &mut dyn FnMut(&Matrix<u64>)) {
    let empty: Matrix<u64> = Vec::new();
    visit(&empty);
    let mut pivots: Vec<usize> = Vec::new();
    sweep_pivot_sets(p, n, 0, &mut pivots, visit);
}

fn sweep_pivot_sets(
    p: u64,
    n: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    visit: &mut dyn FnMut(&Matrix<u64>),
) {
    for c in start..n {
        pivots.push(c);
        emit_echelon_forms(p, n, pivots, visit);
        sweep_pivot_sets(p, n, c + 1, pivots, visit);
        pivots.pop();
    }
}

fn emit_echelon_forms(
    p: u64,
    n: usize,
    pivots: &[usize],
    visit: &mut dyn FnMut(&Matrix<u64>),
) {
    let r = pivots.len();
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (i, &pc) in pivots.iter().enumerate() {
        for j in pc + 1..n {
            if !pivots.contains(&j) {
                free.push((i, j));
            }
        }
    }
    let mut mat = vec![vec![0u64; n]; r];
    for (i, &pc) in pivots.iter().enumerate() {
        mat[i][pc] = 1;
    }
    loop {
        visit(&mat);
        // Odometer over the free positions.
        let mut k = 0;
        loop {
            if k == free.len() {
                return;
            }
            let (i, j) = free[k];
            mat[i][j] += 1;
            if mat[i][j] < p {
                break;
            }
            mat[i][j] = 0;
            k += 1;
        }
    }
}

/// The four primeness verdicts of a definitional classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePattern {
    pub extremely: bool,
    pub completely: bool,
    pub structurally: bool,
    pub weakly: bool,
}

impl PrimePattern {
    pub fn as_array(&self) -> [bool; 4] {
        [self.extremely, self.completely, self.structurally, self.weakly]
    }

    /// The implication lattice valid in every ring: extremely implies both
    /// completely and structurally, and each of those implies weakly.
    /// (Completely implies structurally only over the polynomial PIDs, not
    /// in general — the right-column ideal of T2 separates them.)
    pub fn lattice_ok(&self) -> bool {
        (!self.extremely || (self.completely && self.structurally))
            && (!self.completely || self.weakly)
            && (!self.structurally || self.weakly)
    }
}

impl fmt::Display for PrimePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{extremely: {}, completely: {}, structurally: {}, weakly: {}}}",
            self.extremely, self.completely, self.structurally, self.weakly
        )
    }
}

/// Classifies a proper left ideal by evaluating the four definitions
/// literally: element quantifiers for extremely/completely, left-ideal
/// quantifiers for structurally/weakly.
pub fn def_classify(alg: &FiniteAlgebra, p: &FiniteIdeal) -> Result<PrimePattern> {
    let ideals = enumerate_left_ideals(alg)?;
    def_classify_with(alg, p, &ideals)
}

/// [`def_classify`] against a precomputed left-ideal list.
pub fn def_classify_with(
    alg: &FiniteAlgebra,
    p: &FiniteIdeal,
    ideals: &[FiniteIdeal],
) -> Result<PrimePattern> {
    if p.is_improper(alg) {
        return Err(Error::ImproperIdeal(
            "definitional classification requires a proper left ideal".into(),
        ));
    }
    let elements = alg.elements()?;

    // Extremely: ab ∈ 𝔭 implies a ∈ 𝔭 or b ∈ 𝔭.
    let mut extremely = true;
    'ext: for a in &elements {
        if p.contains(alg, a) {
            continue;
        }
        for b in &elements {
            if p.contains(alg, b) {
                continue;
            }
            if p.contains(alg, &alg.mul(a, b)) {
                extremely = false;
                break 'ext;
            }
        }
    }

    // Completely: ab ∈ 𝔭 and 𝔭b ⊆ 𝔭 imply a ∈ 𝔭 or b ∈ 𝔭.
    let mut completely = true;
    'comp: for b in &elements {
        if p.contains(alg, b) {
            continue;
        }
        if !p.mul_elt(alg, b).subset_of(alg, p) {
            continue;
        }
        for a in &elements {
            if !p.contains(alg, a) && p.contains(alg, &alg.mul(a, b)) {
                completely = false;
                break 'comp;
            }
        }
    }

    // Structurally: 𝔄𝔅 ⊆ 𝔭 implies 𝔄 ⊆ 𝔭 or 𝔅 ⊆ 𝔭, over left ideals.
    let mut structurally = true;
    'str_: for a in ideals {
        if a.subset_of(alg, p) {
            continue;
        }
        for b in ideals {
            if b.subset_of(alg, p) {
                continue;
            }
            if a.product(alg, b).subset_of(alg, p) {
                structurally = false;
                break 'str_;
            }
        }
    }

    // Weakly: 𝔄𝔅 ⊆ 𝔭 and 𝔭𝔅 ⊆ 𝔭 imply 𝔄 ⊆ 𝔭 or 𝔅 ⊆ 𝔭.
    let mut weakly = true;
    'weak: for b in ideals {
        if b.subset_of(alg, p) {
            continue;
        }
        if !p.product(alg, b).subset_of(alg, p) {
            continue;
        }
        for a in ideals {
            if !a.subset_of(alg, p) && a.product(alg, b).subset_of(alg, p) {
                weakly = false;
                break 'weak;
            }
        }
    }

    Ok(PrimePattern {
        extremely,
        completely,
        structurally,
        weakly,
    })
}

/// Outcome of a lab-wide verification sweep: the number of checks run and
/// any discrepancies found (a clean report has none).
#[derive(Clone, Debug)]
pub struct LabReport {
    pub algebra: String,
    pub ideals: usize,
    pub checks: usize,
    pub discrepancies: Vec<String>,
}

impl LabReport {
    fn new(alg: &FiniteAlgebra) -> LabReport {
        LabReport {
            algebra: alg.name().to_string(),
            ideals: 0,
            checks: 0,
            discrepancies: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl fmt::Display for LabReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ideal(s), {} check(s)",
            self.algebra, self.ideals, self.checks
        )?;
        if self.is_clean() {
            write!(f, "all checks passed")
        } else {
            for d in &self.discrepancies {
                writeln!(f, "DISCREPANCY: {d}")?;
            }
            write!(f, "{} discrepancy(ies)", self.discrepancies.len())
        }
    }
}

/// Verifies, on every proper left ideal, that each listed equivalent
/// condition for structurally/weakly prime — and the quotient-ideal
/// characterizations of all four notions — agrees with the definitional
/// verdict. A clean report certifies the equivalences exhaustively.
pub fn check_characterizations(alg: &FiniteAlgebra) -> Result<LabReport> {
    let ideals = enumerate_left_ideals(alg)?;
    let elements = alg.elements()?;
    let two_sided: Vec<&FiniteIdeal> = ideals
        .iter()
        .filter(|i| i.is_two_sided(alg))
        .collect();
    // Cyclic left ideals Ra, indexed like `elements`.
    let cyclic: Vec<FiniteIdeal> = elements
        .iter()
        .map(|a| FiniteIdeal::generated_by(alg, std::slice::from_ref(a)))
        .collect();
    let mut report = LabReport::new(alg);
    report.ideals = ideals.len();

    for p in ideals.iter().filter(|p| p.is_proper(alg)) {
        let base = def_classify_with(alg, p, &ideals)?;
        let pdesc = p.describe(alg);
        let prows: Vec<Elt> = p.basis().clone();

        if !base.lattice_ok() {
            report.discrepancies.push(format!(
                "{}: implication lattice violated by definitional verdicts {base}",
                pdesc
            ));
        }
        report.checks += 1;

        let expect = |name: &str, got: bool, want: bool, report: &mut LabReport| {
            report.checks += 1;
            if got != want {
                report.discrepancies.push(format!(
                    "{pdesc}: {name} evaluated to {got}, definition says {want}"
                ));
            }
        };

        // aRb ⊆ 𝔭 as a reusable predicate, then cached relation tables so
        // the quantifier sweeps below stay quadratic in the element count.
        let a_r_b = |a: &Elt, b: &Elt| -> bool {
            (0..alg.dim()).all(|k| {
                p.contains(alg, &alg.mul(&alg.mul(a, &alg.basis_elt(k)), b))
            })
        };
        let in_p: Vec<bool> = elements.iter().map(|x| p.contains(alg, x)).collect();
        // arb[ia][ib] ⇔ elements[ia]·R·elements[ib] ⊆ 𝔭.
        let arb: Vec<Vec<bool>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| a_r_b(a, b)).collect())
            .collect();
        // arp[ia] ⇔ a R 𝔭 ⊆ 𝔭; prb[ib] ⇔ 𝔭 R b ⊆ 𝔭; prp ⇔ 𝔭 R 𝔭 ⊆ 𝔭.
        let arp: Vec<bool> = elements
            .iter()
            .map(|a| prows.iter().all(|q| a_r_b(a, q)))
            .collect();
        let prb: Vec<bool> = elements
            .iter()
            .map(|b| prows.iter().all(|q| a_r_b(q, b)))
            .collect();
        let prp = prows.iter().all(|q| prows.iter().all(|r| a_r_b(q, r)));

        // Structurally prime, items (2)-(5).
        let s2 = elements.iter().enumerate().all(|(ia, a)| {
            p.contains(alg, a)
                || elements.iter().enumerate().all(|(ib, b)| {
                    p.contains(alg, b)
                        || !cyclic[ia].product(alg, &cyclic[ib]).subset_of(alg, p)
                })
        });
        expect("structurally (2) RaRb", s2, base.structurally, &mut report);

        let s3 = (0..elements.len()).all(|ia| {
            in_p[ia] || (0..elements.len()).all(|ib| in_p[ib] || !arb[ia][ib])
        });
        expect("structurally (3) aRb", s3, base.structurally, &mut report);

        let s4 = two_sided.iter().all(|a| {
            a.subset_of(alg, p)
                || ideals.iter().all(|b| {
                    b.subset_of(alg, p) || !a.product(alg, b).subset_of(alg, p)
                })
        });
        expect("structurally (4) two-sided × left", s4, base.structurally, &mut report);

        let s5 = two_sided.iter().all(|a| {
            a.subset_of(alg, p)
                || elements.iter().all(|b| {
                    p.contains(alg, b) || !a.mul_elt(alg, b).subset_of(alg, p)
                })
        });
        expect("structurally (5) two-sided × element", s5, base.structurally, &mut report);

        // Weakly prime, items (2)-(8).
        let w2 = ideals.iter().all(|a| {
            !p.subset_of(alg, a)
                || a == p
                || ideals.iter().all(|b| {
                    !p.subset_of(alg, b) || b == p || !a.product(alg, b).subset_of(alg, p)
                })
        });
        expect("weakly (2) over-ideal pairs", w2, base.weakly, &mut report);

        let w3 = ideals.iter().all(|a| {
            a.subset_of(alg, p)
                || ideals.iter().all(|b| {
                    b.subset_of(alg, p)
                        || !a
                            .sum(alg, p)
                            .product(alg, &b.sum(alg, p))
                            .subset_of(alg, p)
                })
        });
        expect("weakly (3) (A+p)(B+p)", w3, base.weakly, &mut report);

        let w4 = ideals.iter().all(|a| {
            !p.subset_of(alg, a)
                || a == p
                || ideals.iter().all(|b| {
                    b.subset_of(alg, p) || !a.product(alg, b).subset_of(alg, p)
                })
        });
        expect("weakly (4) AB with p ⊆ A", w4, base.weakly, &mut report);

        let w5 = ideals.iter().all(|a| {
            a.subset_of(alg, p)
                || ideals.iter().all(|b| {
                    b.subset_of(alg, p)
                        || !a.sum(alg, p).product(alg, b).subset_of(alg, p)
                })
        });
        expect("weakly (5) (A+p)B", w5, base.weakly, &mut report);

        // (a+𝔭)R(b+𝔭) ⊆ 𝔭 decomposes by multilinearity over the slots
        // {a} ∪ basis(𝔭) on the left and {b} ∪ basis(𝔭) on the right.
        let w6 = (0..elements.len()).all(|ia| {
            in_p[ia]
                || (0..elements.len()).all(|ib| {
                    in_p[ib] || !(arb[ia][ib] && arp[ia] && prb[ib] && prp)
                })
        });
        expect("weakly (6) (a+p)R(b+p)", w6, base.weakly, &mut report);

        let w7 = two_sided.iter().all(|a| {
            a.subset_of(alg, p)
                || ideals.iter().all(|b| {
                    b.subset_of(alg, p)
                        || !(a.product(alg, b).subset_of(alg, p)
                            && p.product(alg, b).subset_of(alg, p))
                })
        });
        expect("weakly (7) two-sided × left with pB", w7, base.weakly, &mut report);

        let w8 = (0..elements.len()).all(|ia| {
            in_p[ia]
                || (0..elements.len())
                    .all(|ib| in_p[ib] || !(arb[ia][ib] && prb[ib]))
        });
        expect("weakly (8) aRb and pRb", w8, base.weakly, &mut report);

        // Not-two-sided characterizations; two-sided collapse otherwise.
        if p.is_two_sided(alg) {
            expect(
                "two-sided: weakly coincides with structurally",
                base.weakly,
                base.structurally,
                &mut report,
            );
        } else {
            let n2 = ideals.iter().all(|a| {
                !p.product(alg, a).subset_of(alg, p) || a.subset_of(alg, p)
            });
            expect("not-two-sided (2) pA ⊆ p", n2, base.weakly, &mut report);

            let n3 = (0..elements.len()).all(|ib| !prb[ib] || in_p[ib]);
            expect("not-two-sided (3) pRb ⊆ p", n3, base.weakly, &mut report);
        }

        // Quotient-ideal characterizations of all four notions.
        let q1 = elements.iter().all(|b| {
            p.contains(alg, b) || quotient_by(alg, p, b).subset_of(alg, p)
        });
        expect("quotient (1) extremely", q1, base.extremely, &mut report);

        let q2 = elements.iter().all(|b| {
            if p.contains(alg, b) {
                return true;
            }
            let q = quotient_by(alg, p, b);
            !p.subset_of(alg, &q) || q == *p
        });
        expect("quotient (2) completely", q2, base.completely, &mut report);

        let q3 = elements.iter().all(|b| {
            p.contains(alg, b) || id_of(alg, &quotient_by(alg, p, b)).subset_of(alg, p)
        });
        expect("quotient (3) structurally", q3, base.structurally, &mut report);

        let q4 = elements.iter().enumerate().all(|(ib, b)| {
            // 𝔭R ⊆ (𝔭:b) means 𝔭Rb ⊆ 𝔭.
            if in_p[ib] || !prb[ib] {
                return true;
            }
            id_of(alg, &quotient_by(alg, p, b)).subset_of(alg, p)
        });
        expect("quotient (4) weakly", q4, base.weakly, &mut report);
    }
    Ok(report)
}

/// Verifies on every two-sided ideal 𝔄: 𝔄 is reduced (aⁿ ∈ 𝔄 implies
/// a ∈ 𝔄) iff 𝔄 equals the intersection of the completely prime two-sided
/// ideals containing it (the empty intersection being the whole algebra).
pub fn check_reduced_intersection(alg: &FiniteAlgebra) -> Result<LabReport> {
    let ideals = enumerate_left_ideals(alg)?;
    let elements = alg.elements()?;
    let two_sided: Vec<&FiniteIdeal> = ideals
        .iter()
        .filter(|i| i.is_two_sided(alg))
        .collect();
    let mut report = LabReport::new(alg);
    report.ideals = two_sided.len();

    // Completely prime two-sided ideals: proper, with ab ∈ 𝔭 ⇒ a ∈ 𝔭 or
    // b ∈ 𝔭 (for two-sided ideals this is the classical notion).
    let completely_prime: Vec<&FiniteIdeal> = two_sided
        .iter()
        .filter(|t| {
            t.is_proper(alg)
                && elements.iter().all(|a| {
                    t.contains(alg, a)
                        || elements.iter().all(|b| {
                            t.contains(alg, b) || !t.contains(alg, &alg.mul(a, b))
                        })
                })
        })
        .copied()
        .collect();

    for a_ideal in &two_sided {
        // Reduced: aⁿ ∈ 𝔄 for some n ≥ 1 implies a ∈ 𝔄.
        let reduced = elements.iter().all(|x| {
            if a_ideal.contains(alg, x) {
                return true;
            }
            let mut seen: Vec<Elt> = Vec::new();
            let mut power = x.clone();
            loop {
                if a_ideal.contains(alg, &power) {
                    return false;
                }
                if seen.contains(&power) {
                    return true;
                }
                seen.push(power.clone());
                power = alg.mul(&power, x);
            }
        });

        // Intersection of the completely prime two-sided ideals ⊇ 𝔄.
        let mut meet = FiniteIdeal::improper(alg);
        for cp in &completely_prime {
            if a_ideal.subset_of(alg, cp) {
                meet = meet.intersect(alg, cp);
            }
        }
        let agrees = (meet == **a_ideal) == reduced;
        report.checks += 1;
        if !agrees {
            report.discrepancies.push(format!(
                "{}: reduced = {}, but intersection of completely primes is {}",
                a_ideal.describe(alg),
                reduced,
                meet.describe(alg)
            ));
        }
    }
    Ok(report)
}

/// Verifies the global structure theorems on a finite algebra: R is simple
/// iff every proper left ideal is structurally prime, iff every proper left
/// ideal is weakly prime; and R is a division ring iff every proper left
/// ideal is completely prime.
pub fn check_simplicity_props(alg: &FiniteAlgebra) -> Result<LabReport> {
    let ideals = enumerate_left_ideals(alg)?;
    let mut report = LabReport::new(alg);
    report.ideals = ideals.len();

    let simple = ideals
        .iter()
        .filter(|i| i.is_two_sided(alg) && !i.is_zero() && i.is_proper(alg))
        .count()
        == 0;
    // A division ring has no left ideals beyond {0} and R.
    let division = ideals.len() == 2;

    let mut all_structurally = true;
    let mut all_weakly = true;
    let mut all_completely = true;
    for p in ideals.iter().filter(|p| p.is_proper(alg)) {
        let pat = def_classify_with(alg, p, &ideals)?;
        all_structurally &= pat.structurally;
        all_weakly &= pat.weakly;
        all_completely &= pat.completely;
    }

    for (name, lhs, rhs) in [
        ("simple iff all left ideals structurally prime", simple, all_structurally),
        ("simple iff all left ideals weakly prime", simple, all_weakly),
        ("division ring iff all left ideals completely prime", division, all_completely),
    ] {
        report.checks += 1;
        if lhs != rhs {
            report
                .discrepancies
                .push(format!("{}: {} vs {}", name, lhs, rhs));
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Built-in algebra families
// ---------------------------------------------------------------------------

/// `1, a, a^2, ..., a^(m-1)` — the coordinate basis of GF(q) over GF(p).
fn coeff_powers(field: &std::sync::Arc<FiniteField>) -> Vec<FqElem> {
    let m = field.ext_degree();
    let mut out = Vec::with_capacity(m);
    let mut cur = FqElem::one(field);
    for u in 0..m {
        out.push(cur.clone());
        if u + 1 < m {
            cur = cur.mul(&FqElem::generator(field));
        }
    }
    out
}

fn coeff_label(u: usize, inner: &str) -> String {
    match u {
        0 => inner.to_string(),
        1 => {
            if inner == "1" {
                "a".to_string()
            } else {
                format!("a·{inner}")
            }
        }
        _ => {
            if inner == "1" {
                format!("a^{u}")
            } else {
                format!("a^{u}·{inner}")
            }
        }
    }
}

/// The field `GF(q)` viewed as an algebra over its prime subfield.
pub fn gf(q: u64) -> Result<FiniteAlgebra> {
    let field = FiniteField::with_order(q)?;
    let p = field.p();
    let m = field.ext_degree();
    let mut labels = Vec::with_capacity(m);
    for u in 0..m {
        labels.push(coeff_label(u, "1"));
    }
    // Basis element u is a^u (powers of the fixed generator of GF(q) over GF(p)).
    let basis = coeff_powers(&field);
    let mut table = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            table[i][j] = basis[i].mul(&basis[j]).coords().to_vec();
        }
    }
    let one = FqElem::one(&field).coords().to_vec();
    FiniteAlgebra::new(format!("GF({q})"), p, labels, table, one)
}

/// Matrix-unit positions for the full and upper/lower structured families.
/// A structural basis element is `E_rc · a^u`; multiplication follows
/// `(E_rc a^u)(E_dk a^w) = δ_{c,d} E_rk a^{u+w}` since the entries are central.
fn matrix_units_algebra(name: String, q: u64, positions: &[(usize, usize)]) -> Result<FiniteAlgebra> {
    let field = FiniteField::with_order(q)?;
    let p = field.p();
    let m = field.ext_degree();
    let powers = coeff_powers(&field);
    let n = positions.len() * m;
    let mut labels = Vec::with_capacity(n);
    for &(r, c) in positions {
        for u in 0..m {
            labels.push(coeff_label(u, &format!("E{}{}", r + 1, c + 1)));
        }
    }
    let pos_index = |r: usize, c: usize| positions.iter().position(|&pc| pc == (r, c));
    let mut table = vec![vec![vec![0u64; n]; n]; n];
    for (pi, &(r, c)) in positions.iter().enumerate() {
        for u in 0..m {
            let i = pi * m + u;
            for (pj, &(d, k)) in positions.iter().enumerate() {
                for w in 0..m {
                    let j = pj * m + w;
                    if c != d {
                        continue; // product of matrix units vanishes
                    }
                    let target = pos_index(r, k).unwrap_or_else(|| {
                        unreachable!("position set must be closed under multiplication")
                    });
                    let entry = powers[u].mul(&powers[w]);
                    for (v, &coord) in entry.coords().iter().enumerate() {
                        table[i][j][target * m + v] = coord;
                    }
                }
            }
        }
    }
    let mut one = vec![0u64; n];
    for (pi, &(r, c)) in positions.iter().enumerate() {
        if r == c {
            one[pi * m] = 1; // identity has coefficient a^0 = 1 at each diagonal unit
        }
    }
    FiniteAlgebra::new(name, p, labels, table, one)
}

/// The full matrix algebra `M2(GF(q))`.
pub fn m2(q: u64) -> Result<FiniteAlgebra> {
    matrix_units_algebra(
        format!("M2(GF({q}))"),
        q,
        &[(0, 0), (0, 1), (1, 0), (1, 1)],
    )
}

/// The lower-triangular algebra `T2(GF(q))` with basis `E11, E21, E22`.
pub fn t2(q: u64) -> Result<FiniteAlgebra> {
    matrix_units_algebra(format!("T2(GF({q}))"), q, &[(0, 0), (1, 0), (1, 1)])
}

// ---------------------------------------------------------------------------
// Quotients of skew polynomial rings by invariant elements
// ---------------------------------------------------------------------------

/// The finite algebra `R/Rg` for a finite-field skew ring `R` and an invariant
/// nonconstant `g`, together with the maps between the quotient and `R`.
///
/// The basis is `a^u t^v` for `0 <= u < m` and `0 <= v < deg g`, flattened as
/// `v*m + u`, so ideal arithmetic in the quotient runs over the prime field.
pub struct QuotientAlgebra {
    algebra: FiniteAlgebra,
    ring: SkewRing,
    modulus: SkewPoly,
}

impl QuotientAlgebra {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn modulus(&self) -> &SkewPoly {
        &self.modulus
    }

    /// Coordinates of `f + Rg` in the quotient basis.
    pub fn project(&self, f: &SkewPoly) -> Elt {
        let field = self.ring.field().expect("quotient ring is over a finite field");
        let m = field.ext_degree();
        let d = self.modulus.deg().expect("modulus is nonzero");
        let rem = f.div_right(&self.modulus).expect("modulus is monic").1;
        let mut out = vec![0u64; d * m];
        for v in 0..d {
            if let Scalar::Fq(c) = rem.coeff(v) {
                for (u, &coord) in c.coords().iter().enumerate() {
                    out[v * m + u] = coord;
                }
            }
        }
        out
    }

    /// The canonical representative in `R` of a quotient element.
    pub fn lift(&self, x: &Elt) -> SkewPoly {
        let field = self.ring.field().expect("quotient ring is over a finite field");
        let m = field.ext_degree();
        let d = self.modulus.deg().expect("modulus is nonzero");
        let mut coeffs = Vec::with_capacity(d);
        for v in 0..d {
            let coords: Vec<u64> = (0..m).map(|u| x[v * m + u]).collect();
            coeffs.push(Scalar::Fq(FqElem::from_coords(field, &coords)));
        }
        SkewPoly::from_scalars(&self.ring, coeffs)
    }

    /// The monic generator of the preimage in `R` of a left ideal of the
    /// quotient: the gcrd of the lifted basis vectors and the modulus.
    pub fn preimage_generator(&self, ideal: &FiniteIdeal) -> Result<SkewPoly> {
        let mut gen = self.modulus.clone();
        for row in ideal.basis() {
            gen = gen.gcrd(&self.lift(row));
        }
        Ok(gen)
    }
}

/// Build the quotient algebra `R/Rg` for an invariant nonconstant `g` over a
/// finite-field skew ring.
pub fn quotient(g: &SkewPoly) -> Result<QuotientAlgebra> {
    let ring = g.ring().clone();
    let field = match &ring {
        SkewRing::Ff { field, .. } => field.clone(),
        _ => {
            return Err(Error::Unsupported {
                op: "quotientAlgebra",
                ring: ring.to_string(),
            })
        }
    };
    if g.is_zero() {
        return Err(Error::ZeroInput("quotientAlgebra"));
    }
    if g.is_unit() {
        return Err(Error::UnitInput("quotientAlgebra"));
    }
    if !is_invariant(g) {
        return Err(Error::NotInvariant(format!("{g}")));
    }
    let g = g.monic();
    let m = field.ext_degree();
    let d = g.deg().expect("nonzero modulus");
    let n = d * m;
    let mut basis_polys = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let powers = coeff_powers(&field);
    for v in 0..d {
        for u in 0..m {
            basis_polys.push(SkewPoly::monomial(&ring, Scalar::Fq(powers[u].clone()), v));
            let inner = match v {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{v}"),
            };
            labels.push(coeff_label(u, &inner));
        }
    }
    // Note the flattening: basis_polys[v*m + u] = a^u t^v.
    let mut proto = QuotientAlgebra {
        algebra: FiniteAlgebra::new(
            "proto".to_string(),
            field.p(),
            vec!["1".to_string()],
            vec![vec![vec![1]]],
            vec![1],
        )?,
        ring: ring.clone(),
        modulus: g.clone(),
    };
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = proto.project(&basis_polys[i].mul(&basis_polys[j]));
        }
    }
    let one = proto.project(&SkewPoly::one(&ring));
    let name = format!("{ring}/({g})");
    proto.algebra = FiniteAlgebra::new(name, field.p(), labels, table, one)?;
    Ok(proto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primeness;
    use crate::skewpoly::LeftIdeal;
    use crate::verdict::VerdictValue;

    fn pattern_of(report: &primeness::ClassificationReport) -> [bool; 4] {
        let mut out = [false; 4];
        for (k, (name, v)) in report.verdicts.named().iter().enumerate() {
            out[k] = match v.value {
                VerdictValue::Yes => true,
                VerdictValue::No => false,
                VerdictValue::Inconclusive => panic!("inconclusive verdict for {name}"),
            };
        }
        out
    }

    #[test]
    fn gf4_is_a_division_lab() {
        let alg = gf(4).unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(alg.element_count().unwrap(), 4);
        let ideals = enumerate_left_ideals(&alg).unwrap();
        assert_eq!(ideals.len(), 2);
        assert_eq!(
            def_classify(&alg, &FiniteIdeal::zero()).unwrap().as_array(),
            [true; 4]
        );
        let rep = check_simplicity_props(&alg).unwrap();
        assert!(rep.is_clean(), "{rep}");
    }

    #[test]
    fn m2_f2_census_and_patterns() {
        let alg = m2(2).unwrap();
        let ideals = enumerate_left_ideals(&alg).unwrap();
        // zero, one minimal left ideal per line of F_2^2 (three), improper
        assert_eq!(ideals.len(), 5);
        let mut ranks: Vec<usize> = ideals.iter().map(|i| i.rank()).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, vec![0, 2, 2, 2, 4]);
        // a simple algebra has no other two-sided ideals
        assert_eq!(ideals.iter().filter(|i| i.is_two_sided(&alg)).count(), 2);
        assert_eq!(
            def_classify(&alg, &FiniteIdeal::zero()).unwrap().as_array(),
            [false, false, true, true]
        );
        let mut extremely = 0;
        for i in ideals.iter().filter(|i| i.is_proper(&alg)) {
            let pat = def_classify_with(&alg, i, &ideals).unwrap();
            assert!(pat.lattice_ok(), "{pat} on {}", i.describe(&alg));
            if pat.extremely {
                extremely += 1;
            }
            if i.rank() == 2 {
                assert_eq!(pat.as_array(), [false, true, true, true]);
                assert!(id_of(&alg, i).is_zero());
            }
        }
        assert_eq!(extremely, 0);
    }

    #[test]
    fn m2_f3_has_no_extremely_prime_left_ideal() {
        let alg = m2(3).unwrap();
        let ideals = enumerate_left_ideals(&alg).unwrap();
        // zero, one minimal left ideal per line of F_3^2 (four), improper
        assert_eq!(ideals.len(), 6);
        for i in ideals.iter().filter(|i| i.is_proper(&alg)) {
            assert!(!def_classify_with(&alg, i, &ideals).unwrap().extremely);
        }
    }

    #[test]
    fn t2_f2_pattern_and_two_sided_part() {
        let alg = t2(2).unwrap();
        assert_eq!(alg.dim(), 3);
        let ideals = enumerate_left_ideals(&alg).unwrap();
        assert_eq!(ideals.len(), 7);
        // 𝔭 = R·E22, the right column
        let p = FiniteIdeal::generated_by(&alg, &[alg.basis_elt(2)]);
        assert_eq!(p.rank(), 1);
        assert!(ideals.contains(&p));
        assert!(!p.is_two_sided(&alg));
        assert_eq!(
            def_classify(&alg, &p).unwrap().as_array(),
            [false, true, false, true]
        );
        assert!(id_of(&alg, &p).is_zero());
        // the left column span{E21, E22} is two-sided and id fixes it
        let col = FiniteIdeal::span(&alg, &[alg.basis_elt(1), alg.basis_elt(2)]);
        assert!(col.is_left_ideal(&alg));
        assert!(col.is_two_sided(&alg));
        assert_eq!(id_of(&alg, &col), col);
        let improper = FiniteIdeal::improper(&alg);
        assert_eq!(id_of(&alg, &improper), improper);
        assert!(id_of(&alg, &FiniteIdeal::zero()).is_zero());
    }

    #[test]
    fn commutative_quotients_collapse() {
        let r = SkewRing::ff(2, 1).unwrap();
        let q2 = quotient(&SkewPoly::from_int_coeffs(&r, &[0, 0, 1])).unwrap();
        assert_eq!(enumerate_left_ideals(q2.algebra()).unwrap().len(), 3);

        let q3 = quotient(&SkewPoly::from_int_coeffs(&r, &[0, 0, 0, 1])).unwrap();
        let alg = q3.algebra();
        let ideals = enumerate_left_ideals(alg).unwrap();
        assert_eq!(ideals.len(), 4);
        for i in ideals.iter().filter(|i| i.is_proper(alg)) {
            let pat = def_classify_with(alg, i, &ideals).unwrap();
            let all = pat.as_array();
            assert!(
                all.iter().all(|&b| b == all[0]),
                "commutative collapse fails on {}",
                i.describe(alg)
            );
            // only the maximal ideal (x) is prime; 0 and (x^2) are not
            assert_eq!(all[0], i.rank() == 2);
        }
    }

    #[test]
    fn characterization_reports_are_clean() {
        for alg in [m2(2).unwrap(), t2(2).unwrap()] {
            let rep = check_characterizations(&alg).unwrap();
            assert!(rep.is_clean(), "{rep}");
            assert!(rep.checks > 0);
        }
        let r = SkewRing::ff(2, 1).unwrap();
        let q3 = quotient(&SkewPoly::from_int_coeffs(&r, &[0, 0, 0, 1])).unwrap();
        let rep = check_characterizations(q3.algebra()).unwrap();
        assert!(rep.is_clean(), "{rep}");
    }

    #[test]
    fn characterizations_hold_in_skew_quotient() {
        let r = SkewRing::ff(4, 1).unwrap();
        let q = quotient(&SkewPoly::from_int_coeffs(&r, &[1, 0, 1])).unwrap();
        let rep = check_characterizations(q.algebra()).unwrap();
        assert!(rep.is_clean(), "{rep}");
    }

    #[test]
    fn reduced_intersection_reports_are_clean() {
        let r2 = SkewRing::ff(2, 1).unwrap();
        let r3 = SkewRing::ff(3, 1).unwrap();
        let algs = [
            quotient(&SkewPoly::from_int_coeffs(&r2, &[0, 0, 1]))
                .unwrap()
                .algebra()
                .clone(),
            quotient(&SkewPoly::from_int_coeffs(&r3, &[0, 2, 1]))
                .unwrap()
                .algebra()
                .clone(),
            m2(2).unwrap(),
        ];
        for alg in algs {
            let rep = check_reduced_intersection(&alg).unwrap();
            assert!(rep.is_clean(), "{rep}");
            assert!(rep.checks > 0);
        }
    }

    #[test]
    fn simplicity_reports_are_clean() {
        for alg in [m2(2).unwrap(), t2(2).unwrap(), gf(4).unwrap()] {
            let rep = check_simplicity_props(&alg).unwrap();
            assert!(rep.is_clean(), "{rep}");
        }
    }

    #[test]
    fn quotient_bridge_matches_pid_classifier() {
        let r = SkewRing::ff(4, 1).unwrap();
        let g = SkewPoly::from_int_coeffs(&r, &[1, 0, 1]);
        let qa = quotient(&g).unwrap();
        let alg = qa.algebra();
        assert_eq!(alg.dim(), 4);
        let ideals = enumerate_left_ideals(alg).unwrap();
        // the quotient is isomorphic to the 2x2 matrix algebra over F_2
        assert_eq!(ideals.len(), 5);
        for j in ideals.iter().filter(|j| j.is_proper(alg)) {
            let lab = def_classify_with(alg, j, &ideals).unwrap();
            let gen = qa.preimage_generator(j).unwrap();
            let report = primeness::classify(&LeftIdeal::new(&gen)).unwrap();
            assert_eq!(
                pattern_of(&report),
                lab.as_array(),
                "bridge mismatch at preimage {gen}"
            );
        }
    }

    #[test]
    fn quotient_projection_roundtrip() {
        let r = SkewRing::ff(4, 1).unwrap();
        let g = SkewPoly::from_int_coeffs(&r, &[1, 0, 1]);
        let qa = quotient(&g).unwrap();
        assert!(qa.algebra().is_zero_elt(&qa.project(&g)));
        assert_eq!(qa.project(&SkewPoly::one(&r)), qa.algebra().one_elt());
        let t3 = SkewPoly::from_int_coeffs(&r, &[0, 0, 0, 1]);
        let lifted = qa.lift(&qa.project(&t3));
        assert_eq!(lifted, t3.div_right(&g).unwrap().1);
        let unit = qa
            .preimage_generator(&FiniteIdeal::improper(qa.algebra()))
            .unwrap();
        assert!(unit.is_unit());
        let back = qa.preimage_generator(&FiniteIdeal::zero()).unwrap();
        assert_eq!(back, g.monic());
    }

    #[test]
    fn quotient_guards() {
        let r = SkewRing::ff(4, 1).unwrap();
        let field = r.field().unwrap();
        let a = FqElem::generator(field);
        let f = SkewPoly::from_scalars(
            &r,
            vec![Scalar::Fq(a), Scalar::Fq(FqElem::one(field))],
        );
        assert!(matches!(quotient(&f), Err(Error::NotInvariant(_))));
        assert!(matches!(
            quotient(&SkewPoly::zero(&r)),
            Err(Error::ZeroInput(_))
        ));
        assert!(matches!(
            quotient(&SkewPoly::one(&r)),
            Err(Error::UnitInput(_))
        ));
        assert!(matches!(
            quotient(&SkewPoly::from_int_coeffs(&SkewRing::hq(), &[1, 0, 1])),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn element_cap_is_enforced() {
        let r = SkewRing::ff(2, 1).unwrap();
        let mut coeffs = vec![0i64; 18];
        coeffs[17] = 1;
        let q = quotient(&SkewPoly::from_int_coeffs(&r, &coeffs)).unwrap();
        assert!(matches!(
            enumerate_left_ideals(q.algebra()),
            Err(Error::CapExceeded { .. })
        ));
    }
}
