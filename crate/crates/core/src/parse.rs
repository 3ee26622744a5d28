//! Text grammars for ring descriptors and skew polynomials.
//!
//! Ring descriptors:
//!
//! ```text
//! GF(q)[t;frob]      GF(q)[t;frob^s]      HQ[t]      QX[t;shift]
//! ```
//!
//! and, for the finite laboratory, `GF(q)`, `M2(GF(q))`, `T2(GF(q))`.
//!
//! Polynomials use the grammar
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := ['-'] primary ['^' uint]
//! primary:= uint | var | '(' expr ')'
//! var    := 't' | 'a' | 'i' | 'j' | 'k' | 'x'     (as the ring allows)
//! ```
//!
//! Products evaluate left to right through the ring's twisted
//! multiplication — the parser never reorders factors — and `/` requires an
//! invertible scalar divisor (a nonzero degree-0 polynomial); `f/s` means
//! `f·s⁻¹`. The printed form of every polynomial re-parses to itself.

use crate::error::{Error, Result};
use crate::finitelab::{self, FiniteAlgebra};
use crate::scalars::{FqElem, Quat, RatFunc, Scalar};
use crate::skewpoly::{SkewPoly, SkewRing};

/// Parse a PID ring descriptor: `GF(q)[t;frob]`, `GF(q)[t;frob^s]`,
/// `HQ[t]`, or `QX[t;shift]`. Whitespace is ignored.
pub fn parse_ring(text: &str) -> Result<SkewRing> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "HQ[t]" {
        return Ok(SkewRing::hq());
    }
    if compact == "QX[t;shift]" {
        return Ok(SkewRing::qx_shift());
    }
    if let Some(rest) = compact.strip_prefix("GF(") {
        if let Some((q_str, tail)) = rest.split_once(')') {
            let q: u64 = q_str.parse().map_err(|_| Error::Parse {
                pos: 3,
                msg: format!("invalid field order {q_str:?}"),
            })?;
            let s = match tail {
                "[t;frob]" => 1,
                _ => match tail
                    .strip_prefix("[t;frob^")
                    .and_then(|t| t.strip_suffix(']'))
                {
                    Some(s_str) => s_str.parse().map_err(|_| Error::Parse {
                        pos: compact.len(),
                        msg: format!("invalid twist power {s_str:?}"),
                    })?,
                    None => {
                        return Err(Error::Parse {
                            pos: 0,
                            msg: format!(
                                "unrecognized ring {text:?}; expected GF(q)[t;frob], \
                                 GF(q)[t;frob^s], HQ[t], or QX[t;shift]"
                            ),
                        })
                    }
                },
            };
            return SkewRing::ff(q, s);
        }
    }
    Err(Error::Parse {
        pos: 0,
        msg: format!(
            "unrecognized ring {text:?}; expected GF(q)[t;frob], GF(q)[t;frob^s], \
             HQ[t], or QX[t;shift]"
        ),
    })
}

/// Parse a laboratory algebra descriptor: `GF(q)`, `M2(GF(q))`, or
/// `T2(GF(q))`. Whitespace is ignored.
pub fn parse_lab_ring(text: &str) -> Result<FiniteAlgebra> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let field_order = |inner: &str| -> Result<u64> {
        inner
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|q| q.parse().ok())
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unrecognized field {inner:?}; expected GF(q)"),
            })
    };
    if let Some(inner) = compact.strip_prefix("M2(").and_then(|r| r.strip_suffix(')')) {
        return finitelab::m2(field_order(inner)?);
    }
    if let Some(inner) = compact.strip_prefix("T2(").and_then(|r| r.strip_suffix(')')) {
        return finitelab::t2(field_order(inner)?);
    }
    if compact.starts_with("GF(") {
        return finitelab::gf(field_order(&compact)?);
    }
    Err(Error::Parse {
        pos: 0,
        msg: format!(
            "unrecognized laboratory ring {text:?}; expected GF(q), M2(GF(q)), or T2(GF(q))"
        ),
    })
}

/// Parse a polynomial over the given ring.
pub fn parse_poly(ring: &SkewRing, text: &str) -> Result<SkewPoly> {
    let mut p = PolyParser {
        ring,
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(value)
}

struct PolyParser<'a> {
    ring: &'a SkewRing,
    src: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SkewPoly> {
        self.skip_ws();
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SkewPoly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(b'/') {
                let at = self.pos;
                let divisor = self.factor()?;
                if divisor.is_zero() {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "division by zero".to_string(),
                    });
                }
                if !divisor.is_unit() {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "division requires an invertible scalar divisor".to_string(),
                    });
                }
                let inv = divisor.coeff(0).inv();
                acc = acc.mul(&SkewPoly::constant(self.ring, inv));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<SkewPoly> {
        self.skip_ws();
        if self.eat(b'-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let e = self.uint()?;
            if e > 4096 {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("exponent {e} too large"),
                });
            }
            let mut out = SkewPoly::one(self.ring);
            for _ in 0..e {
                out = out.mul(&base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<SkewPoly> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                if n > i64::MAX as u64 {
                    return Err(self.err("integer literal too large"));
                }
                Ok(SkewPoly::constant(
                    self.ring,
                    self.ring.int_scalar(n as i64),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => self.variable(),
            _ => Err(self.err("expected a number, variable, or '('")),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer literal too large".to_string(),
            })
    }

    fn variable(&mut self) -> Result<SkewPoly> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let unknown = |parser: &Self| Error::Parse {
            pos: start,
            msg: format!("variable {name:?} is not valid in {}", parser.ring),
        };
        match (name, self.ring) {
            ("t", _) => Ok(SkewPoly::t(self.ring)),
            ("a", SkewRing::Ff { field, .. }) => {
                if field.ext_degree() < 2 {
                    Err(Error::Parse {
                        pos: start,
                        msg: format!("{} is a prime field with no generator 'a'", self.ring),
                    })
                } else {
                    Ok(SkewPoly::constant(
                        self.ring,
                        Scalar::Fq(FqElem::generator(field)),
                    ))
                }
            }
            ("i", SkewRing::Hq) => Ok(SkewPoly::constant(self.ring, Scalar::Quat(Quat::i()))),
            ("j", SkewRing::Hq) => Ok(SkewPoly::constant(self.ring, Scalar::Quat(Quat::j()))),
            ("k", SkewRing::Hq) => Ok(SkewPoly::constant(self.ring, Scalar::Quat(Quat::k()))),
            ("x", SkewRing::QxShift) => {
                Ok(SkewPoly::constant(self.ring, Scalar::RatFunc(RatFunc::x())))
            }
            _ => Err(unknown(self)),
        }
    }
}
