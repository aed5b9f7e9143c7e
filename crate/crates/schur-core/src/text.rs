//! Plain-text syntax for algebra elements.
//!
//! ```text
//! element := ['-'] term { ('+'|'-') term }
//! term    := [coeff '*'] 'xi(' intlist ';' intlist ')' | coeff
//! coeff   := int ['/' posint]
//! intlist := int { ',' int }
//! ```
//!
//! Whitespace may appear between tokens.  A bare coefficient denotes that
//! multiple of the identity element.  Symbol pairs are canonicalized on
//! input, so `xi(2,1;5,0)` and `xi(1,2;0,5)` parse to the same element.
//! Each tuple must have exactly `r` entries; arity violations are reported
//! as syntax errors with a byte position.
//!
//! Formatting inverts parsing: terms appear in canonical symbol order,
//! coefficient `1` is omitted, signs are folded into ` + ` / ` - ` joins,
//! and the zero element prints as `0`.

use crate::context::AlgebraContext;
use crate::element::{one, AlgebraElement};
use crate::field::CoeffField;
use crate::symbol::{canonicalize_pair, BasisSymbol};
use crate::SchurError;
use num_bigint::{BigInt, BigUint};
use std::fmt;
use weyl_core::IntTuple;

/// Renders a symbol as `xi(top;bottom)` with comma-separated entries.
pub fn format_symbol(sym: &BasisSymbol) -> String {
    let join = |t: &[i64]| {
        t.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("xi({};{})", join(sym.top()), join(sym.bottom()))
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbol(self))
    }
}

/// Renders an element in the grammar above; inverse of [`parse_element`]
/// up to canonical term order.
pub fn format_element<F: CoeffField>(e: &AlgebraElement<F>) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (sym, coeff)) in e.terms().enumerate() {
        let s = coeff.coeff_string();
        let (negative, magnitude) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if magnitude != "1" {
            out.push_str(&magnitude);
            out.push('*');
        }
        out.push_str(&format_symbol(sym));
    }
    out
}

impl<F: CoeffField> fmt::Display for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SchurError> {
        Err(SchurError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SchurError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Result<&'a str, SchurError> {
        let start = self.pos;
        while self
            .peek()
            .map(|b| b.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    /// A signed machine integer, used for tuple entries.
    fn int_i64(&mut self) -> Result<i64, SchurError> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.eat(b'-');
        let digits = self.digits()?;
        let text = if negative {
            format!("-{digits}")
        } else {
            digits.to_string()
        };
        text.parse::<i64>().map_err(|_| SchurError::Syntax {
            pos: start,
            msg: format!("integer '{text}' does not fit in 64 bits"),
        })
    }

    /// A signed big integer, used for coefficient numerators.
    fn int_big(&mut self) -> Result<BigInt, SchurError> {
        self.skip_ws();
        let negative = self.eat(b'-');
        let digits = self.digits()?;
        let mag: BigUint = digits.parse().expect("ascii digits form a number");
        let mut value = BigInt::from(mag);
        if negative {
            value = -value;
        }
        Ok(value)
    }

    fn coeff(&mut self) -> Result<(BigInt, BigUint), SchurError> {
        let numerator = self.int_big()?;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits()?;
            let denominator: BigUint = digits.parse().expect("ascii digits form a number");
            if denominator == BigUint::from(0u32) {
                return Err(SchurError::Syntax {
                    pos: start,
                    msg: "zero denominator".to_string(),
                });
            }
            Ok((numerator, denominator))
        } else {
            Ok((numerator, BigUint::from(1u32)))
        }
    }

    fn intlist(&mut self, r: usize) -> Result<IntTuple, SchurError> {
        let mut out = Vec::with_capacity(r);
        out.push(self.int_i64()?);
        loop {
            self.skip_ws();
            if self.eat(b',') {
                out.push(self.int_i64()?);
            } else {
                break;
            }
        }
        if out.len() != r {
            return self.err(format!("expected {} entries, found {}", r, out.len()));
        }
        Ok(out)
    }

    fn at_symbol(&self) -> bool {
        self.bytes[self.pos..].starts_with(b"xi(")
    }

    fn symbol(&mut self, r: usize) -> Result<(IntTuple, IntTuple), SchurError> {
        // Caller has checked the "xi(" prefix.
        self.pos += 3;
        let top = self.intlist(r)?;
        self.skip_ws();
        self.expect(b';')?;
        let bottom = self.intlist(r)?;
        self.skip_ws();
        self.expect(b')')?;
        Ok((top, bottom))
    }

    /// One term, already stripped of its joining sign.
    fn term<F: CoeffField>(
        &mut self,
        acc: &mut AlgebraElement<F>,
        negate: bool,
        ctx: &AlgebraContext<F>,
    ) -> Result<(), SchurError> {
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("expected a term");
        }
        let (mut numerator, denominator) = if self.at_symbol() {
            (BigInt::from(1), BigUint::from(1u32))
        } else {
            let (mut numerator, denominator) = self.coeff()?;
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
                if !self.at_symbol() {
                    return self.err("expected 'xi(' after '*'");
                }
            } else {
                // A bare coefficient: that multiple of the identity.
                if negate {
                    numerator = -numerator;
                }
                let coeff = F::from_fraction(ctx.field(), &numerator, &denominator)?;
                for (sym, unit) in one(ctx).terms() {
                    acc.add_term(sym.clone(), coeff.mul(unit, ctx.field()));
                }
                return Ok(());
            }
            (numerator, denominator)
        };
        if negate {
            numerator = -numerator;
        }
        let coeff = F::from_fraction(ctx.field(), &numerator, &denominator)?;
        let (top, bottom) = self.symbol(ctx.r())?;
        let (sym, _) = canonicalize_pair(&top, &bottom, ctx.n())?;
        acc.add_term(sym, coeff);
        Ok(())
    }
}

/// Parses the grammar at the top of this module into an element of `ctx`.
pub fn parse_element<F: CoeffField>(
    input: &str,
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    let mut p = Parser::new(input);
    let mut acc = AlgebraElement::zero(ctx);
    p.skip_ws();
    let negate = p.eat(b'-');
    p.term(&mut acc, negate, ctx)?;
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                p.term(&mut acc, false, ctx)?;
            }
            Some(b'-') => {
                p.pos += 1;
                p.term(&mut acc, true, ctx)?;
            }
            Some(c) => {
                return p.err(format!("unexpected character '{}'", c as char));
            }
        }
    }
    Ok(acc)
}
