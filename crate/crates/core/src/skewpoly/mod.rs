//! Skew polynomial rings F_q[t;Frob^s], H_Q[t], and Q(x)[t;shift], with the
//! one-sided Euclidean toolkit and principal left ideals.

pub mod ideal;
pub mod poly;
pub mod ring;

pub use ideal::LeftIdeal;
pub use poly::SkewPoly;
pub use ring::SkewRing;
