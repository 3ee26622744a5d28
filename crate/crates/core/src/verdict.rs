//! Tri-state verdicts with attached evidence.
//!
//! Decision procedures in this crate never guess: a `Yes` or `No` is exact,
//! and anything the configured caps cannot settle comes back `Inconclusive`
//! with the blocking step named in `reason`. Where a verdict admits a cheap
//! independent certificate (a factorization, a closure generator, a
//! comaximal pair), it is attached as a [`Witness`] so callers and tests can
//! re-verify the claim through ordinary library calls.

use crate::scalars::Quat;
use crate::skewpoly::SkewPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictValue {
    Yes,
    No,
    Inconclusive,
}

impl VerdictValue {
    pub fn is_yes(self) -> bool {
        self == VerdictValue::Yes
    }

    pub fn is_no(self) -> bool {
        self == VerdictValue::No
    }

    pub fn is_inconclusive(self) -> bool {
        self == VerdictValue::Inconclusive
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VerdictValue::Yes => "Yes",
            VerdictValue::No => "No",
            VerdictValue::Inconclusive => "Inconclusive",
        }
    }
}

impl std::fmt::Display for VerdictValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Structured evidence backing a verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// x, y with a·x = y·b, gcrd(x,b) = 1, gcld(a,y) = 1.
    Comaximal { x: SkewPoly, y: SkewPoly },
    /// Nontrivial factors whose product is the (monic) input.
    Factorization { factors: Vec<SkewPoly> },
    /// A proper left factor and a proper right factor that are similar,
    /// exhibiting c-reducibility.
    CReduction { left: SkewPoly, right: SkewPoly },
    /// Generator of the two-sided closure RaR (≠ R for a No on weakly).
    ClosureGenerator(SkewPoly),
    /// A non-unit invariant element whose ideal contains the input ideal.
    InvariantFactor(SkewPoly),
    /// The bound of the generator (evidence for structural verdicts).
    BoundWitness(SkewPoly),
    /// A right root extracted from a quaternion class.
    QuaternionRoot(Quat),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub value: VerdictValue,
    /// Short machine-readable code naming the deciding criterion.
    pub reason: String,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes(reason: impl Into<String>) -> Self {
        Verdict {
            value: VerdictValue::Yes,
            reason: reason.into(),
            witness: None,
        }
    }

    pub fn no(reason: impl Into<String>) -> Self {
        Verdict {
            value: VerdictValue::No,
            reason: reason.into(),
            witness: None,
        }
    }

    pub fn inconclusive(reason: impl Into<String>) -> Self {
        Verdict {
            value: VerdictValue::Inconclusive,
            reason: reason.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_yes(&self) -> bool {
        self.value.is_yes()
    }

    pub fn is_no(&self) -> bool {
        self.value.is_no()
    }

    pub fn is_inconclusive(&self) -> bool {
        self.value.is_inconclusive()
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.value, self.reason)
    }
}
