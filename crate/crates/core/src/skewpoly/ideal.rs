//! Principal left ideals, normalized by their monic generator.

use crate::skewpoly::poly::SkewPoly;
use crate::skewpoly::ring::SkewRing;
use std::fmt;

/// A left ideal Ra, stored via the unique monic generator (or zero).
///
/// Every left ideal of these rings is principal, so this type is the whole
/// ideal lattice. Equality of ideals is equality of monic generators.
#[derive(Clone, PartialEq)]
pub struct LeftIdeal {
    gen: SkewPoly,
}

impl LeftIdeal {
    pub fn new(generator: &SkewPoly) -> Self {
        LeftIdeal {
            gen: generator.monic(),
        }
    }

    pub fn zero(ring: &SkewRing) -> Self {
        LeftIdeal {
            gen: SkewPoly::zero(ring),
        }
    }

    pub fn unit(ring: &SkewRing) -> Self {
        LeftIdeal {
            gen: SkewPoly::one(ring),
        }
    }

    pub fn generator(&self) -> &SkewPoly {
        &self.gen
    }

    pub fn ring(&self) -> &SkewRing {
        self.gen.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.gen.is_zero()
    }

    /// The improper ideal R itself.
    pub fn is_unit(&self) -> bool {
        self.gen.is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Membership: f ∈ Ra iff a right-divides f.
    pub fn contains(&self, f: &SkewPoly) -> bool {
        self.gen.right_divides(f)
    }

    /// Ra ⊆ Rb iff b right-divides a.
    pub fn subset_of(&self, other: &LeftIdeal) -> bool {
        other.contains(&self.gen)
    }

    /// Ra + Rb = R·gcrd(a, b).
    pub fn sum(&self, other: &LeftIdeal) -> LeftIdeal {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        LeftIdeal::new(&self.gen.gcrd(&other.gen))
    }

    /// Ra ∩ Rb = R·lclm(a, b).
    pub fn intersect(&self, other: &LeftIdeal) -> LeftIdeal {
        LeftIdeal::new(&self.gen.lclm(&other.gen))
    }
}

impl fmt::Display for LeftIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({})", self.gen)
    }
}

impl fmt::Debug for LeftIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeftIdeal[{} over {}]", self.gen, self.ring())
    }
}
