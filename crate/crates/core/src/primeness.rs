//! Primeness classification for principal left ideals.
//!
//! Decides the four one-sided primeness notions — extremely, completely,
//! structurally, weakly prime — for a left ideal Ra of the supported
//! principal ideal domains, through the constructive characterizations:
//!
//! * **extremely**: Ra = 0, or a is invariant and an atom;
//! * **completely**: Ra = 0, or a is c-irreducible;
//! * **structurally**: Ra = 0, or the bound of a generates a maximal
//!   two-sided ideal (over the shift ring: nonzero constant term, or a an
//!   associate of t);
//! * **weakly**: equal to structurally when Ra is two-sided, otherwise
//!   RaR = R.
//!
//! [`classify`] runs all four, records the bound and invariance of the
//! generator, and enforces the implication lattice
//! extremely ⇒ completely ∧ structurally, completely ⇒ structurally,
//! completely ∨ structurally ⇒ weakly. A lattice violation is a library
//! bug and surfaces as [`Error::InvariantViolation`].

use crate::error::{Error, Result};
use crate::factorization::{is_atom, is_c_irreducible};
use crate::skewpoly::{LeftIdeal, SkewPoly, SkewRing};
use crate::structure::{bound, is_inv_atom, is_invariant, two_sided_closure};
use crate::verdict::{Verdict, Witness};
use std::fmt;

/// Rejects the improper ideal R; returns the monic generator, or `None` for
/// the zero ideal.
fn proper_generator<'a>(ideal: &'a LeftIdeal, op: &str) -> Result<Option<&'a SkewPoly>> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal(format!(
            "{op} is defined only for proper left ideals"
        )));
    }
    if ideal.is_zero() {
        Ok(None)
    } else {
        Ok(Some(ideal.generator()))
    }
}

/// Whether Ra is extremely prime: rb ∈ Ra forces r ∈ Ra or b ∈ Ra.
///
/// Characterization: the zero ideal is extremely prime, and a nonzero Ra is
/// extremely prime iff a is invariant and an atom.
pub fn is_extremely_prime(ideal: &LeftIdeal) -> Result<Verdict> {
    let a = match proper_generator(ideal, "isExtremelyPrime")? {
        None => return Ok(Verdict::yes("zero-ideal")),
        Some(a) => a,
    };
    if !is_invariant(a) {
        let closure = two_sided_closure(a);
        return Ok(Verdict::no("not-invariant")
            .with_witness(Witness::ClosureGenerator(closure.generator().clone())));
    }
    let atom = is_atom(a)?;
    Ok(match atom.value {
        crate::verdict::VerdictValue::Yes => {
            Verdict::yes(format!("invariant-atom: {}", atom.reason))
        }
        crate::verdict::VerdictValue::No => {
            let mut v = Verdict::no(format!("invariant-but-not-atom: {}", atom.reason));
            v.witness = atom.witness;
            v
        }
        crate::verdict::VerdictValue::Inconclusive => {
            Verdict::inconclusive(format!("atom-status-undecided: {}", atom.reason))
        }
    })
}

/// Whether Ra is completely prime: ab ∈ Ra and 𝔭b ⊆ 𝔭 force a ∈ 𝔭 or b ∈ 𝔭.
///
/// Characterization: the zero ideal is completely prime (these rings are
/// domains), and a nonzero Ra is completely prime iff a is c-irreducible.
pub fn is_completely_prime(ideal: &LeftIdeal) -> Result<Verdict> {
    let a = match proper_generator(ideal, "isCompletelyPrime")? {
        None => return Ok(Verdict::yes("zero-ideal")),
        Some(a) => a,
    };
    let inner = is_c_irreducible(a)?;
    Ok(match inner.value {
        crate::verdict::VerdictValue::Yes => {
            Verdict::yes(format!("c-irreducible: {}", inner.reason))
        }
        crate::verdict::VerdictValue::No => {
            let mut v = Verdict::no(format!("c-reducible: {}", inner.reason));
            v.witness = inner.witness;
            v
        }
        crate::verdict::VerdictValue::Inconclusive => {
            Verdict::inconclusive(format!("c-irreducibility-undecided: {}", inner.reason))
        }
    })
}

/// Whether Ra is structurally prime: for left ideals 𝔄, 𝔅 ⊇ 𝔭 with
/// 𝔄𝔅 ⊆ 𝔭, one of 𝔄, 𝔅 equals 𝔭.
///
/// Characterization: the zero ideal is structurally prime (a domain is a
/// prime ring). Over the fully bounded rings a nonzero Ra is structurally
/// prime iff bound(a) generates a maximal two-sided ideal. Over the shift
/// ring: iff a has nonzero constant term (totally unbounded) or a is an
/// associate of t.
pub fn is_structurally_prime(ideal: &LeftIdeal) -> Result<Verdict> {
    let a = match proper_generator(ideal, "isStructurallyPrime")? {
        None => return Ok(Verdict::yes("zero-ideal")),
        Some(a) => a,
    };
    if let SkewRing::QxShift = a.ring() {
        if !a.coeff(0).is_zero() {
            return Ok(Verdict::yes("totally-unbounded"));
        }
        return Ok(if a.deg() == Some(1) {
            Verdict::yes("associate-of-t")
                .with_witness(Witness::BoundWitness(SkewPoly::t(a.ring())))
        } else {
            // a = q·t with q a non-unit: the bounded factor t obstructs.
            Verdict::no("proper-factor-t")
        });
    }
    let b = bound(a)?.expect("nonzero elements of the bounded rings have a bound");
    match is_inv_atom(&b)? {
        Some(true) => Ok(Verdict::yes("bound-inv-atom").with_witness(Witness::BoundWitness(b))),
        Some(false) => {
            Ok(Verdict::no("bound-not-inv-atom").with_witness(Witness::BoundWitness(b)))
        }
        None => Ok(Verdict::inconclusive(
            "bound-atomicity-undecided: rational factorization incomplete",
        )),
    }
}

/// Whether Ra is weakly prime: for left ideals 𝔄, 𝔅 ⊇ 𝔭 with 𝔄𝔅 ⊆ 𝔭 and
/// 𝔭𝔅 ⊆ 𝔭, one of 𝔄, 𝔅 equals 𝔭.
///
/// For two-sided Ra this coincides with structurally prime; otherwise Ra is
/// weakly prime iff its two-sided closure is all of R (equivalently, a has
/// no non-unit invariant factor).
pub fn is_weakly_prime(ideal: &LeftIdeal) -> Result<Verdict> {
    let a = match proper_generator(ideal, "isWeaklyPrime")? {
        None => return Ok(Verdict::yes("zero-ideal")),
        Some(a) => a,
    };
    if is_invariant(a) {
        let mut v = is_structurally_prime(ideal)?;
        v.reason = format!("two-sided-reduces-to-structural: {}", v.reason);
        return Ok(v);
    }
    let closure = two_sided_closure(a);
    if closure.is_unit() {
        Ok(Verdict::yes("trivial-two-sided-closure"))
    } else {
        Ok(Verdict::no("proper-two-sided-closure")
            .with_witness(Witness::ClosureGenerator(closure.generator().clone())))
    }
}

/// The four verdicts of a classification, in lattice order.
#[derive(Clone, Debug)]
pub struct ClassificationVerdicts {
    pub extremely: Verdict,
    pub completely: Verdict,
    pub structurally: Verdict,
    pub weakly: Verdict,
}

impl ClassificationVerdicts {
    /// Named access in a fixed order, for reports and serialization.
    pub fn named(&self) -> [(&'static str, &Verdict); 4] {
        [
            ("extremely", &self.extremely),
            ("completely", &self.completely),
            ("structurally", &self.structurally),
            ("weakly", &self.weakly),
        ]
    }
}

/// Outcome of one implication check in the lattice audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImplicationStatus {
    /// Hypothesis Yes, conclusion Yes.
    Verified,
    /// Hypothesis not Yes; nothing to check.
    Vacuous,
    /// Hypothesis Yes, conclusion Inconclusive — allowed, never a violation.
    Undetermined,
}

/// One audited implication of the primeness lattice.
#[derive(Clone, Debug)]
pub struct ImplicationCheck {
    /// e.g. `"extremely => completely"`.
    pub implication: &'static str,
    pub status: ImplicationStatus,
}

/// The full lattice audit attached to a classification report.
///
/// A report is only ever returned when every implication holds, so this
/// records *how* each one held (verified, vacuous, or undetermined).
#[derive(Clone, Debug)]
pub struct LatticeAudit {
    pub checks: Vec<ImplicationCheck>,
}

impl LatticeAudit {
    pub fn verified_count(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == ImplicationStatus::Verified)
            .count()
    }
}

/// Aggregate classification of one left ideal.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub ideal: LeftIdeal,
    /// Whether Ra is a two-sided ideal.
    pub invariant: bool,
    /// bound(a); `None` for the zero ideal and for unbounded shift-ring
    /// generators.
    pub bound: Option<SkewPoly>,
    pub verdicts: ClassificationVerdicts,
    pub consistency: LatticeAudit,
}

/// The five Yes-level implications of the primeness lattice.
const IMPLICATIONS: [(&str, fn(&ClassificationVerdicts) -> (&Verdict, &Verdict)); 5] = [
    ("extremely => completely", |v| (&v.extremely, &v.completely)),
    ("extremely => structurally", |v| {
        (&v.extremely, &v.structurally)
    }),
    ("completely => structurally", |v| {
        (&v.completely, &v.structurally)
    }),
    ("completely => weakly", |v| (&v.completely, &v.weakly)),
    ("structurally => weakly", |v| (&v.structurally, &v.weakly)),
];

fn audit_lattice(verdicts: &ClassificationVerdicts, ideal: &LeftIdeal) -> Result<LatticeAudit> {
    let mut checks = Vec::with_capacity(IMPLICATIONS.len());
    for (name, project) in IMPLICATIONS {
        let (hyp, concl) = project(verdicts);
        let status = if !hyp.is_yes() {
            ImplicationStatus::Vacuous
        } else if concl.is_yes() {
            ImplicationStatus::Verified
        } else if concl.is_inconclusive() {
            ImplicationStatus::Undetermined
        } else {
            return Err(Error::InvariantViolation(format!(
                "primeness implication '{name}' violated on {ideal}: \
                 hypothesis Yes ({}) but conclusion No ({})",
                hyp.reason, concl.reason
            )));
        };
        checks.push(ImplicationCheck {
            implication: name,
            status,
        });
    }
    Ok(LatticeAudit { checks })
}

/// Classifies Ra under all four primeness notions and audits the
/// implication lattice.
///
/// Returns [`Error::ImproperIdeal`] for R itself and
/// [`Error::InvariantViolation`] if the verdicts ever contradict the
/// lattice (a library bug, surfaced loudly rather than reported).
pub fn classify(ideal: &LeftIdeal) -> Result<ClassificationReport> {
    let generator = proper_generator(ideal, "classify")?;
    let invariant = match generator {
        None => true,
        Some(a) => is_invariant(a),
    };
    let bound_poly = match generator {
        None => None,
        Some(a) => bound(a)?,
    };
    let verdicts = ClassificationVerdicts {
        extremely: is_extremely_prime(ideal)?,
        completely: is_completely_prime(ideal)?,
        structurally: is_structurally_prime(ideal)?,
        weakly: is_weakly_prime(ideal)?,
    };
    let consistency = audit_lattice(&verdicts, ideal)?;
    Ok(ClassificationReport {
        ideal: ideal.clone(),
        invariant,
        bound: bound_poly,
        verdicts,
        consistency,
    })
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ideal: {}", self.ideal)?;
        writeln!(f, "two-sided: {}", if self.invariant { "yes" } else { "no" })?;
        match &self.bound {
            Some(b) => writeln!(f, "bound: {b}")?,
            None => writeln!(
                f,
                "bound: {}",
                if self.ideal.is_zero() {
                    "none (zero ideal)"
                } else {
                    "none (unbounded)"
                }
            )?,
        }
        for (name, verdict) in self.verdicts.named() {
            writeln!(f, "{name:>12} prime: {verdict}")?;
        }
        write!(
            f,
            "lattice: consistent ({} implication(s) verified)",
            self.consistency.verified_count()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{FqElem, Quat, RatFunc, Scalar};

    fn f4_ring() -> SkewRing {
        SkewRing::ff(4, 1).unwrap()
    }

    fn f4(ring: &SkewRing, indices: &[u64]) -> SkewPoly {
        let field = ring.field().unwrap();
        SkewPoly::from_scalars(
            ring,
            indices
                .iter()
                .map(|&ix| Scalar::Fq(FqElem::from_index(field, ix)))
                .collect(),
        )
    }

    /// t − c over H_Q[t].
    fn hq_lin(c: Quat) -> SkewPoly {
        let ring = SkewRing::hq();
        SkewPoly::from_scalars(&ring, vec![Scalar::Quat(c.neg()), ring.one_scalar()])
    }

    fn pattern(report: &ClassificationReport) -> [&'static str; 4] {
        let v = &report.verdicts;
        [
            v.extremely.value.as_str(),
            v.completely.value.as_str(),
            v.structurally.value.as_str(),
            v.weakly.value.as_str(),
        ]
    }

    #[test]
    fn zero_ideal_is_prime_in_every_sense() {
        for ring in [f4_ring(), SkewRing::hq(), SkewRing::qx_shift()] {
            let zero = LeftIdeal::zero(&ring);
            let report = classify(&zero).unwrap();
            assert_eq!(pattern(&report), ["Yes"; 4]);
            assert!(report.invariant);
            assert!(report.bound.is_none());
        }
    }

    #[test]
    fn improper_ideal_is_rejected() {
        let ring = SkewRing::hq();
        let unit = LeftIdeal::unit(&ring);
        for res in [
            is_extremely_prime(&unit),
            is_completely_prime(&unit),
            is_structurally_prime(&unit),
            is_weakly_prime(&unit),
        ] {
            assert!(matches!(res, Err(Error::ImproperIdeal(_))));
        }
        assert!(matches!(classify(&unit), Err(Error::ImproperIdeal(_))));
    }

    #[test]
    fn quaternion_central_quadratic_with_roots() {
        // t² + 1 factors as (t−i)(t+i): invariant but reducible, and its
        // bound t²+1 generates a maximal two-sided ideal.
        let ring = SkewRing::hq();
        let a = SkewPoly::from_int_coeffs(&ring, &[1, 0, 1]);
        let report = classify(&LeftIdeal::new(&a)).unwrap();
        assert_eq!(pattern(&report), ["No", "No", "Yes", "Yes"]);
        assert!(report.invariant);
        assert_eq!(report.bound.as_ref().unwrap(), &a);
        assert!(report
            .verdicts
            .weakly
            .reason
            .starts_with("two-sided-reduces-to-structural"));
    }

    #[test]
    fn quaternion_product_of_similar_atoms() {
        // (t−j)(t−i) is weakly prime but not structurally prime; its bound
        // is (t²+1)².
        let ring = SkewRing::hq();
        let a = hq_lin(Quat::j()).mul(&hq_lin(Quat::i()));
        let report = classify(&LeftIdeal::new(&a)).unwrap();
        assert_eq!(pattern(&report), ["No", "No", "No", "Yes"]);
        assert!(!report.invariant);
        let tsq1 = SkewPoly::from_int_coeffs(&ring, &[1, 0, 1]);
        assert_eq!(report.bound.as_ref().unwrap(), &tsq1.mul(&tsq1));
        assert_eq!(report.verdicts.weakly.reason, "trivial-two-sided-closure");
    }

    #[test]
    fn quaternion_linear_atom() {
        // t−i: a non-invariant atom — completely, structurally, weakly, but
        // not extremely prime.
        let ring = SkewRing::hq();
        let a = hq_lin(Quat::i());
        let report = classify(&LeftIdeal::new(&a)).unwrap();
        assert_eq!(pattern(&report), ["No", "Yes", "Yes", "Yes"]);
        let tsq1 = SkewPoly::from_int_coeffs(&ring, &[1, 0, 1]);
        assert_eq!(report.bound.as_ref().unwrap(), &tsq1);
    }

    #[test]
    fn quaternion_empty_class_central_atom_is_extremely_prime() {
        // t²−2 has empty quaternion class, hence is an invariant atom.
        let ring = SkewRing::hq();
        let a = SkewPoly::from_int_coeffs(&ring, &[-2, 0, 1]);
        let report = classify(&LeftIdeal::new(&a)).unwrap();
        assert_eq!(pattern(&report), ["Yes"; 4]);
        assert!(report.invariant);
        assert_eq!(report.consistency.verified_count(), 5);
    }

    #[test]
    fn quaternion_invariant_factor_blocks_weak_primeness() {
        // (t²+1)(t−i) is not invariant and its two-sided closure is
        // R(t²+1): not weakly prime, with the closure generator as witness.
        let ring = SkewRing::hq();
        let tsq1 = SkewPoly::from_int_coeffs(&ring, &[1, 0, 1]);
        let a = tsq1.mul(&hq_lin(Quat::i()));
        let ideal = LeftIdeal::new(&a);
        assert!(!is_invariant(&a));
        let weakly = is_weakly_prime(&ideal).unwrap();
        assert!(weakly.is_no());
        assert_eq!(weakly.reason, "proper-two-sided-closure");
        match weakly.witness {
            Some(Witness::ClosureGenerator(g)) => assert_eq!(g, tsq1),
            other => panic!("expected closure generator witness, got {other:?}"),
        }
        let report = classify(&ideal).unwrap();
        assert_eq!(pattern(&report), ["No", "No", "No", "No"]);
    }

    #[test]
    fn finite_field_invariant_atom_t() {
        // R·t in F_4[t;Frob] is extremely prime (invariant atom).
        let ring = f4_ring();
        let t = SkewPoly::t(&ring);
        let report = classify(&LeftIdeal::new(&t)).unwrap();
        assert_eq!(pattern(&report), ["Yes"; 4]);
        assert!(report.invariant);
    }

    #[test]
    fn finite_field_non_invariant_atom() {
        // t²+α over F_4 is an atom but not invariant: {No, Yes, Yes, Yes}.
        let ring = f4_ring();
        let a = f4(&ring, &[2, 0, 1]);
        assert!(!is_invariant(&a));
        let report = classify(&LeftIdeal::new(&a)).unwrap();
        assert_eq!(pattern(&report), ["No", "Yes", "Yes", "Yes"]);
    }

    #[test]
    fn finite_field_square_of_linear() {
        // t²+1 = (t+1)² over F_4 is reducible, yet R(t²+1) is a maximal
        // two-sided ideal (the quotient is the simple ring M₂(F₂)):
        // structurally and weakly prime, but not completely or extremely.
        let ring = f4_ring();
        let a = f4(&ring, &[1, 0, 1]);
        let report = classify(&LeftIdeal::new(&a)).unwrap();
        assert_eq!(pattern(&report), ["No", "No", "Yes", "Yes"]);
        assert!(report.invariant);
    }

    #[test]
    fn shift_ring_cases() {
        let ring = SkewRing::qx_shift();
        // t itself: invariant atom, extremely prime.
        let t = SkewPoly::t(&ring);
        let report = classify(&LeftIdeal::new(&t)).unwrap();
        assert_eq!(pattern(&report), ["Yes"; 4]);
        assert_eq!(report.verdicts.structurally.reason, "associate-of-t");

        // t−x: totally unbounded non-invariant atom.
        let tmx = SkewPoly::from_scalars(
            &ring,
            vec![Scalar::RatFunc(RatFunc::x().neg()), ring.one_scalar()],
        );
        let report = classify(&LeftIdeal::new(&tmx)).unwrap();
        assert_eq!(pattern(&report), ["No", "Yes", "Yes", "Yes"]);
        assert!(report.bound.is_none());
        assert_eq!(report.verdicts.structurally.reason, "totally-unbounded");

        // t²: invariant, bound t² not an Inv-atom.
        let tsq = t.mul(&t);
        let report = classify(&LeftIdeal::new(&tsq)).unwrap();
        assert_eq!(pattern(&report), ["No", "No", "No", "No"]);

        // t²+xt = (t+x+1)·t: bounded factor t obstructs everything.
        let a = SkewPoly::from_scalars(
            &ring,
            vec![
                ring.zero_scalar(),
                Scalar::RatFunc(RatFunc::x()),
                ring.one_scalar(),
            ],
        );
        let ideal = LeftIdeal::new(&a);
        assert!(!is_invariant(&a));
        let report = classify(&ideal).unwrap();
        assert_eq!(pattern(&report), ["No", "No", "No", "No"]);
        assert_eq!(report.verdicts.structurally.reason, "proper-factor-t");
        match &report.verdicts.weakly.witness {
            Some(Witness::ClosureGenerator(g)) => assert_eq!(g, &t),
            other => panic!("expected closure generator t, got {other:?}"),
        }
    }

    #[test]
    fn lattice_holds_on_all_small_f4_ideals() {
        // Every monic polynomial of degree ≤ 2 over F_4 classifies without
        // a lattice violation, and every atom is completely prime.
        let ring = f4_ring();
        for deg in 1..=2usize {
            for code in 0..4u64.pow(deg as u32) {
                let mut ixs: Vec<u64> = Vec::new();
                let mut c = code;
                for _ in 0..deg {
                    ixs.push(c % 4);
                    c /= 4;
                }
                ixs.push(1);
                let a = f4(&ring, &ixs);
                let report = classify(&LeftIdeal::new(&a)).unwrap();
                if is_atom(&a).unwrap().is_yes() {
                    assert!(
                        report.verdicts.completely.is_yes(),
                        "atom {a} must generate a completely prime (maximal) ideal"
                    );
                }
            }
        }
    }

    #[test]
    fn report_display_is_informative() {
        let ring = SkewRing::hq();
        let a = SkewPoly::from_int_coeffs(&ring, &[1, 0, 1]);
        let text = classify(&LeftIdeal::new(&a)).unwrap().to_string();
        assert!(text.contains("structurally prime: Yes"));
        assert!(text.contains("completely prime: No"));
        assert!(text.contains("lattice: consistent"));
    }
}
