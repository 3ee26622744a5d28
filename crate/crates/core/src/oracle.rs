//! Definitional oracles for the fast classifiers over finite coefficient
//! fields.
//!
//! Each oracle evaluates a definition by sweeping its quantifiers literally
//! over residues mod Ra, borrowing none of the shortcut criteria it is meant
//! to referee. The only reductions applied — a quantifier over R can be
//! restricted to residues mod Ra, 𝔭b ⊆ 𝔭 collapses to ab ∈ Ra, and
//! 𝔭Rb ⊆ 𝔭 collapses to g·b ∈ Ra for the two-sided closure generator g —
//! are themselves unit-tested against the unreduced statements at micro
//! scale before the sweeps trust them.

use std::fmt;

use crate::error::{Error, Result};
use crate::factorization::{self, ff_enumerate_monic};
use crate::finitelab::PrimePattern;
use crate::primeness;
use crate::scalars::{FqElem, Scalar};
use crate::similarity;
use crate::skewpoly::{LeftIdeal, SkewPoly, SkewRing};
use crate::structure;
use crate::verdict::{Verdict, VerdictValue};

/// Cap on q^deg candidates per quantifier sweep.
pub const ORACLE_CAP: u64 = 4096;

fn require_ff(ring: &SkewRing, op: &'static str) -> Result<u64> {
    match ring {
        SkewRing::Ff { field, .. } => Ok(field.order()),
        _ => Err(Error::Unsupported {
            op,
            ring: ring.to_string(),
        }),
    }
}

fn sweep_size(q: u64, d: usize, what: &str) -> Result<u64> {
    q.checked_pow(d as u32)
        .filter(|&c| c <= ORACLE_CAP)
        .ok_or_else(|| Error::CapExceeded {
            what: format!("{what}: q^{d} candidates over GF({q})"),
            cap: ORACLE_CAP,
        })
}

/// All polynomials of degree < d over F_q (the residues mod a monic of
/// degree d), zero included, in a fixed odometer order.
fn ff_residues(ring: &SkewRing, d: usize, what: &str) -> Result<Vec<SkewPoly>> {
    let field = ring.field().expect("finite-field ring");
    let q = field.order();
    let count = sweep_size(q, d, what)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut idx = vec![0u64; d];
    loop {
        let coeffs: Vec<Scalar> = idx
            .iter()
            .map(|&i| Scalar::Fq(FqElem::from_index(field, i)))
            .collect();
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

/// Classify the proper nonzero left ideal Ra by sweeping the definitional
/// quantifiers over all nonzero residues b mod Ra:
///
/// - extremely: the quotient ideal (Ra:b) lies in Ra for every b ∉ Ra;
/// - completely: (Ra:b) = Ra for every b ∉ Ra with ab ∈ Ra;
/// - structurally: the largest two-sided ideal inside (Ra:b) — generated by
///   the bound of the quotient generator — lies in Ra for every b ∉ Ra;
/// - weakly: same, restricted to b with g·b ∈ Ra where Rg = RaR.
pub fn oracle_classify_pid(a: &SkewPoly) -> Result<PrimePattern> {
    require_ff(a.ring(), "oracleClassifyPID")?;
    if a.is_zero() {
        return Err(Error::ZeroInput("oracleClassifyPID"));
    }
    if a.is_unit() {
        return Err(Error::ImproperIdeal("oracleClassifyPID".to_string()));
    }
    let a = a.monic();
    let d = a.deg().expect("nonzero");
    let ideal = LeftIdeal::new(&a);
    let closure_gen = structure::two_sided_closure(&a).generator().clone();
    let mut pat = PrimePattern {
        extremely: true,
        completely: true,
        structurally: true,
        weakly: true,
    };
    for b in ff_residues(a.ring(), d, "oracle residue sweep")? {
        if b.is_zero() {
            continue; // b ∈ Ra
        }
        let u = structure::left_quotient(&a, &b);
        let bound_u = structure::bound(&u)?
            .expect("nonzero polynomials over a finite field are bounded");
        if !ideal.contains(&u) {
            pat.extremely = false;
        }
        if ideal.contains(&a.mul(&b)) && u != a {
            pat.completely = false;
        }
        if !ideal.contains(&bound_u) {
            pat.structurally = false;
            if ideal.contains(&closure_gen.mul(&b)) {
                pat.weakly = false;
            }
        }
    }
    Ok(pat)
}

/// Decide similarity by sweeping the comaximal construction: a ~ b iff some
/// x with deg x < deg b satisfies Rx + Rb = R and (Rb:x) = Ra.
pub fn oracle_similar(a: &SkewPoly, b: &SkewPoly) -> Result<bool> {
    a.ring().expect_same(b.ring())?;
    require_ff(a.ring(), "oracleSimilar")?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput("oracleSimilar"));
    }
    if a.is_unit() || b.is_unit() {
        return Ok(a.is_unit() && b.is_unit());
    }
    let am = a.monic();
    let bm = b.monic();
    let d = bm.deg().expect("nonzero");
    for x in ff_residues(a.ring(), d, "oracle similarity sweep")? {
        if x.is_zero() {
            continue;
        }
        if !x.gcrd(&bm).is_unit() {
            continue;
        }
        if structure::left_quotient(&bm, &x) == am {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All proper monic right factors of the monic m, by exhaustive sweep.
fn proper_monic_right_factors(m: &SkewPoly) -> Result<Vec<SkewPoly>> {
    let n = m.deg().expect("nonzero");
    let mut out = Vec::new();
    for d in 1..n {
        for g in ff_enumerate_monic(m.ring(), d)? {
            if g.right_divides(m) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// Atom test by definition: no factorization into two non-units, i.e. no
/// proper monic right factor.
pub fn oracle_atom(a: &SkewPoly) -> Result<bool> {
    require_ff(a.ring(), "oracleAtom")?;
    if a.is_zero() {
        return Err(Error::ZeroInput("oracleAtom"));
    }
    if a.is_unit() {
        return Err(Error::UnitInput("oracleAtom"));
    }
    Ok(proper_monic_right_factors(&a.monic())?.is_empty())
}

/// c-irreducibility by definition: a is c-reducible when a = b·b′ = c′·c
/// with all four factors non-units and b similar to c; sweep every pair of
/// a proper left factor and a proper right factor.
pub fn oracle_c_irreducible(a: &SkewPoly) -> Result<bool> {
    require_ff(a.ring(), "oracleCIrreducible")?;
    if a.is_zero() {
        return Err(Error::ZeroInput("oracleCIrreducible"));
    }
    if a.is_unit() {
        return Err(Error::UnitInput("oracleCIrreducible"));
    }
    let m = a.monic();
    let right_factors = proper_monic_right_factors(&m)?;
    for r in &right_factors {
        // left cofactor b in m = b·r; proper since deg r < deg m
        let b = m.div_right(r)?.0;
        for c in &right_factors {
            if oracle_similar(&b, c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Tally of fast-vs-oracle agreement for one notion.
#[derive(Debug, Clone)]
pub struct NotionTally {
    pub name: &'static str,
    pub agree_yes: u64,
    pub agree_no: u64,
    pub mismatches: u64,
}

/// Outcome of a cross-validation sweep; release-grade runs must be clean.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub ring: String,
    pub degree_cap: usize,
    pub generators: u64,
    pub similarity_pairs: u64,
    pub tallies: Vec<NotionTally>,
    pub mismatches: Vec<String>,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "oracle cross-validation of {} up to degree {}: {} generator(s), {} similarity pair(s)",
            self.ring, self.degree_cap, self.generators, self.similarity_pairs
        )?;
        for t in &self.tallies {
            writeln!(
                f,
                "  {:>14}: {} yes / {} no agree, {} mismatch(es)",
                t.name, t.agree_yes, t.agree_no, t.mismatches
            )?;
        }
        for m in &self.mismatches {
            writeln!(f, "  MISMATCH: {m}")?;
        }
        if self.is_clean() {
            writeln!(f, "  clean: every fast verdict equals its oracle")?;
        }
        Ok(())
    }
}

const TALLY_NAMES: [&str; 7] = [
    "extremely",
    "completely",
    "structurally",
    "weakly",
    "atom",
    "c-irreducible",
    "similar",
];

fn verdict_bool(v: &Verdict) -> Option<bool> {
    match v.value {
        VerdictValue::Yes => Some(true),
        VerdictValue::No => Some(false),
        VerdictValue::Inconclusive => None,
    }
}

/// Sweep every monic generator of degree 1..=degree_cap over an FF ring and
/// compare all fast classifiers against the definitional oracles; similarity
/// is cross-checked on every ordered pair of monics of equal degree.
pub fn cross_validate(ring: &SkewRing, degree_cap: usize) -> Result<OracleReport> {
    require_ff(ring, "crossValidate")?;
    let mut report = OracleReport {
        ring: ring.to_string(),
        degree_cap,
        generators: 0,
        similarity_pairs: 0,
        tallies: TALLY_NAMES
            .iter()
            .map(|name| NotionTally {
                name,
                agree_yes: 0,
                agree_no: 0,
                mismatches: 0,
            })
            .collect(),
        mismatches: Vec::new(),
    };

    fn record(
        report: &mut OracleReport,
        tally: usize,
        subject: &str,
        fast: Option<bool>,
        oracle: bool,
    ) {
        let name = report.tallies[tally].name;
        match fast {
            Some(f) if f == oracle => {
                if oracle {
                    report.tallies[tally].agree_yes += 1;
                } else {
                    report.tallies[tally].agree_no += 1;
                }
            }
            Some(f) => {
                report.tallies[tally].mismatches += 1;
                report
                    .mismatches
                    .push(format!("{subject}: {name} fast={f} oracle={oracle}"));
            }
            None => {
                report.tallies[tally].mismatches += 1;
                report.mismatches.push(format!(
                    "{subject}: {name} fast=inconclusive oracle={oracle}"
                ));
            }
        }
    }

    for d in 1..=degree_cap {
        let monics = ff_enumerate_monic(ring, d)?;
        for a in &monics {
            report.generators += 1;
            let subject = format!("{a}");
            let fast = primeness::classify(&LeftIdeal::new(a))?;
            let oracle = oracle_classify_pid(a)?;
            let fast_bools = [
                verdict_bool(&fast.verdicts.extremely),
                verdict_bool(&fast.verdicts.completely),
                verdict_bool(&fast.verdicts.structurally),
                verdict_bool(&fast.verdicts.weakly),
            ];
            for (k, (fb, ob)) in fast_bools
                .iter()
                .zip(oracle.as_array())
                .enumerate()
            {
                record(&mut report, k, &subject, *fb, ob);
            }
            record(
                &mut report,
                4,
                &subject,
                verdict_bool(&factorization::is_atom(a)?),
                oracle_atom(a)?,
            );
            record(
                &mut report,
                5,
                &subject,
                verdict_bool(&factorization::is_c_irreducible(a)?),
                oracle_c_irreducible(a)?,
            );
        }
        for a in &monics {
            for b in &monics {
                report.similarity_pairs += 1;
                let subject = format!("{a} ~ {b}");
                let fast = verdict_bool(&similarity::is_similar(a, b)?);
                let oracle = oracle_similar(a, b)?;
                record(&mut report, 6, &subject, fast, oracle);
            }
        }
    }
    Ok(report)
}
