//! Text form of polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly := ['+'|'-'] term (('+'|'-') term)*
//! term := [rat '*'] (var ['^' int] '*')* [basis]
//! var  := 'x' int
//! rat  := int | int '/' int
//! ```
//!
//! The basis name, when present, is the last factor.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Polynomial};
use crate::algebra::{AlgebraSpec, HypercomplexBasis};
use crate::rational::{format_abs, parse_unsigned, Rational};

/// Writes `x0^2*x1`; returns whether anything was written.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, exps: &[u32], mut star: bool) -> Result<bool, fmt::Error> {
    let mut wrote = false;
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if star {
            f.write_str("*")?;
        }
        if e == 1 {
            write!(f, "x{i}")?;
        } else {
            write!(f, "x{i}^{e}")?;
        }
        star = true;
        wrote = true;
    }
    Ok(wrote)
}

/// Writes one printed term per nonzero coordinate of `coords`.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    spec: &AlgebraSpec,
    exps: &[u32],
    coords: &[Rational],
    first: &mut bool,
) -> fmt::Result {
    let has_vars = exps.iter().any(|&e| e > 0);
    for (p, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        match (*first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        *first = false;
        let show_number = !c.abs().is_one() || (!has_vars && p == 0);
        if show_number {
            f.write_str(&format_abs(c))?;
        }
        let star = write_monomial(f, exps, show_number)? || show_number;
        if p != 0 {
            if star {
                f.write_str("*")?;
            }
            f.write_str(spec.basis_name(p))?;
        }
    }
    Ok(())
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(ch) = self.src[self.pos..].chars().next() {
            if ch.is_whitespace() {
                self.pos += ch.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&self.src[start..start + len])
    }

    fn identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        if !rest.bytes().next().is_some_and(|b| b.is_ascii_alphabetic()) {
            return None;
        }
        let len = rest.bytes().take_while(u8::is_ascii_alphanumeric).count();
        self.pos += len;
        Some(&self.src[start..start + len])
    }

    fn rational(&mut self) -> Result<Option<Rational>, PolyError> {
        let start = self.pos;
        let Some(num) = self.digits() else { return Ok(None) };
        let text = if self.eat('/') {
            let den = self.digits().ok_or_else(|| self.error("expected denominator"))?;
            format!("{num}/{den}")
        } else {
            num.to_string()
        };
        parse_unsigned(&text).map(Some).ok_or(PolyError::Parse {
            position: start,
            message: format!("invalid number `{text}`"),
        })
    }
}

pub(crate) fn parse(basis: &Arc<HypercomplexBasis>, input: &str) -> Result<Polynomial, PolyError> {
    let spec = basis.spec();
    let vars = basis.n() + 1;
    let mut parser = Parser { src: input, pos: 0 };
    let mut out = Polynomial::zero(basis);
    let mut first = true;
    loop {
        let negative = if parser.eat('-') {
            true
        } else if parser.eat('+') || first {
            false
        } else if parser.peek().is_none() {
            break;
        } else {
            return Err(parser.error("expected `+` or `-`"));
        };
        first = false;
        if parser.peek().is_none() {
            return Err(parser.error("expected a term"));
        }

        let mut coeff = Rational::one();
        let mut factors = 0usize;
        if let Some(r) = parser.rational()? {
            coeff = r;
            factors += 1;
        }
        let mut exps = vec![0u32; vars];
        let mut basis_index = 0usize;
        loop {
            if factors > 0 && !parser.eat('*') {
                break;
            }
            let at = parser.pos;
            let ident = parser.identifier().ok_or_else(|| parser.error("expected a factor"))?;
            factors += 1;
            let is_var = ident.len() > 1 && ident.starts_with('x') && ident[1..].bytes().all(|b| b.is_ascii_digit());
            if !is_var {
                basis_index = spec.basis_index(ident).ok_or(PolyError::Parse {
                    position: at,
                    message: format!("unknown basis element `{ident}`"),
                })?;
                if parser.peek() == Some('*') {
                    return Err(parser.error("basis element must be the last factor"));
                }
                break;
            }
            let i: usize = ident[1..].parse().map_err(|_| PolyError::Parse {
                position: at,
                message: format!("bad variable `{ident}`"),
            })?;
            if i >= vars {
                return Err(PolyError::Parse {
                    position: at,
                    message: format!("variable `{ident}` out of range (x0..x{})", vars - 1),
                });
            }
            let mut e = 1u32;
            if parser.eat('^') {
                let d = parser.digits().ok_or_else(|| parser.error("expected exponent"))?;
                e = d.parse().map_err(|_| parser.error("exponent too large"))?;
            }
            exps[i] += e;
        }
        if negative {
            coeff = -coeff;
        }
        let mut coords = vec![Rational::zero(); spec.dim()];
        coords[basis_index] = coeff;
        out.add_term(Monomial::from_exponents(exps), coords);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;

    fn c3() -> Arc<HypercomplexBasis> {
        HypercomplexBasis::standard(&AlgebraSpec::clifford(3).unwrap())
    }

    #[test]
    fn prints_canonical_order() {
        let b = c3();
        let p = Polynomial::parse(&b, "x1 + 3/2*x0^2*x1*e12 - 2 + x0^3").unwrap();
        assert_eq!(p.to_string(), "x0^3 + 3/2*x0^2*x1*e12 + x1 - 2");
    }

    #[test]
    fn parses_signs_and_spacing() {
        let b = c3();
        let p = Polynomial::parse(&b, " - x1 *  e1+ 2 * x2^2 ").unwrap();
        assert_eq!(p.to_string(), "-x1*e1 + 2*x2^2");
        assert_eq!(Polynomial::parse(&b, "0").unwrap().to_string(), "0");
        assert_eq!(Polynomial::parse(&b, "e1 - e1").unwrap(), Polynomial::zero(&b));
        assert_eq!(Polynomial::parse(&b, "-1/3*e123").unwrap().to_string(), "-1/3*e123");
        assert_eq!(Polynomial::parse(&b, "x1*x1").unwrap().to_string(), "x1^2");
    }

    #[test]
    fn rejects_malformed_input() {
        let b = c3();
        for bad in ["", "x1 +", "e1*x1", "x9", "3/", "x1 x2", "q7", "2**x1", "x1^"] {
            assert!(Polynomial::parse(&b, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn octonion_names() {
        let o = HypercomplexBasis::standard(&AlgebraSpec::octonion());
        let p = Polynomial::parse(&o, "x4*l + 2*x5*li - k").unwrap();
        assert_eq!(p.to_string(), "x4*l + 2*x5*li - k");
    }
}
