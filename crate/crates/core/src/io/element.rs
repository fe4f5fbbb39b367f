//! Text syntax for ring elements.
//!
//! Grammar, with implicit multiplication between adjacent factors:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := signed (('*' | '/')? signed)*
//! signed := ('+' | '-') signed | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | '(' expr ')'
//! ```
//!
//! Everything is evaluated in `Q[x]` and then mapped into the target ring:
//! `Z` and `Z/m` accept only integer constants, `/` only divides by nonzero
//! constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{QPoly, RingElement, RingSpec};

const MAX_DEPTH: usize = 64;
const MAX_DEGREE: usize = 512;
const MAX_COEFF_BITS: u64 = 1 << 16;
const MAX_INPUT: usize = 1 << 16;

pub fn parse_element(text: &str, ring: RingSpec) -> Result<RingElement> {
    let fail = |message: String| Error::Element {
        text: text.chars().take(80).collect(),
        message,
    };
    if text.len() > MAX_INPUT {
        return Err(fail("input too long".into()));
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let value = p.expr().map_err(&fail)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(fail(format!(
            "unexpected `{}` at offset {}",
            p.src[p.pos] as char, p.pos
        )));
    }
    into_ring(value, ring).map_err(fail)
}

fn into_ring(p: QPoly, ring: RingSpec) -> std::result::Result<RingElement, String> {
    if ring == RingSpec::PolyRational {
        return Ok(RingElement::Poly(p));
    }
    let c = match p.degree() {
        None => BigRational::zero(),
        Some(0) => p.coeffs()[0].clone(),
        Some(_) => return Err(format!("`x` is not an element of {ring}")),
    };
    if !c.is_integer() {
        return Err(format!("{c} is not an element of {ring}"));
    }
    Ok(RingElement::from_bigint(ring, &c.to_integer()))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

type PResult<T> = std::result::Result<T, String>;

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
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

    fn expr(&mut self) -> PResult<QPoly> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err("nesting too deep".into());
        }
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                break;
            }
            check_size(&acc)?;
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> PResult<QPoly> {
        let mut acc = self.signed()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = mul_checked(&acc, &self.signed()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.signed()?;
                    if d.degree() != Some(0) {
                        return Err("can only divide by a nonzero constant".into());
                    }
                    let inv = d.coeffs()[0].recip();
                    acc = acc.scale(&inv);
                }
                Some(c) if c == b'(' || c == b'x' || c.is_ascii_digit() => {
                    acc = mul_checked(&acc, &self.power()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn signed(&mut self) -> PResult<QPoly> {
        let mut negate = false;
        let mut count = 0;
        loop {
            if self.eat(b'-') {
                negate = !negate;
            } else if !self.eat(b'+') {
                break;
            }
            count += 1;
            if count > MAX_DEPTH {
                return Err("too many signs".into());
            }
        }
        let v = self.power()?;
        Ok(if negate { -&v } else { v })
    }

    fn power(&mut self) -> PResult<QPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let e = self.integer()?;
        let e: usize = e
            .try_into()
            .ok()
            .filter(|&e: &usize| e <= MAX_DEGREE)
            .ok_or("exponent too large")?;
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = mul_checked(&acc, &base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> PResult<QPoly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(QPoly::monomial(BigRational::one(), 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err("missing `)`".into());
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QPoly::constant(BigRational::from_integer(n)))
            }
            Some(c) => Err(format!("unexpected `{}` at offset {}", c as char, self.pos)),
            None => Err("unexpected end of input".into()),
        }
    }

    fn integer(&mut self) -> PResult<BigInt> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(format!("expected digits at offset {start}"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| "bad integer".into())
    }
}

fn check_size(p: &QPoly) -> PResult<()> {
    if p.degree().unwrap_or(0) > MAX_DEGREE {
        return Err("degree too large".into());
    }
    let bits = p
        .coeffs()
        .iter()
        .map(|c| c.numer().bits() + c.denom().bits())
        .max()
        .unwrap_or(0);
    if bits > MAX_COEFF_BITS {
        return Err("coefficients too large".into());
    }
    Ok(())
}

fn mul_checked(a: &QPoly, b: &QPoly) -> PResult<QPoly> {
    let da = a.degree().unwrap_or(0);
    let db = b.degree().unwrap_or(0);
    if da + db > MAX_DEGREE {
        return Err("degree too large".into());
    }
    let p = a * b;
    check_size(&p)?;
    Ok(p)
}

/// Canonical text for an element; [`parse_element`] reads it back unchanged.
pub fn format_element(x: &RingElement) -> String {
    x.to_string()
}
