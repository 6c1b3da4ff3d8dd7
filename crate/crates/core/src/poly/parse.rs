//! Reader for the textual polynomial grammar:
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := gen ('^' uint)? | '0' | '1'
//! gen    := 't' | 'u' uint | 'w' uint | 'v' uint | 'x' uint | 'y' uint
//! ```
//!
//! Whitespace is ignored everywhere.

use super::{Monomial, Poly, PolyError, RingRef};

struct Cursor {
    bytes: Vec<(usize, u8)>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        let bytes = src.bytes().enumerate().filter(|(_, b)| !b.is_ascii_whitespace()).collect();
        Cursor { bytes, pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).map(|&(_, b)| b)
    }

    fn offset(&self) -> usize {
        self.bytes.get(self.pos).map(|&(i, _)| i).unwrap_or_else(|| self.bytes.last().map_or(0, |&(i, _)| i + 1))
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Syntax { pos: self.offset(), msg: msg.into() }
    }

    fn uint(&mut self) -> Result<Option<u32>, PolyError> {
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(b) = self.peek().filter(u8::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u32::from(b - b'0')))
                .ok_or(PolyError::ExponentOverflow)?;
            self.pos += 1;
        }
        Ok((self.pos > start).then_some(value))
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_poly(ring: &RingRef, text: &str) -> Result<Poly, PolyError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let mut terms: Vec<Monomial> = Vec::new();
    loop {
        if let Some(m) = term(ring, &mut cur)? {
            terms.push(m);
        }
        match cur.peek() {
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(c) => return Err(cur.err(format!("unexpected `{}`", c as char))),
        }
    }
    Ok(Poly::from_monomials(ring, terms))
}

/// `None` means the term contains a literal zero factor.
fn term(ring: &RingRef, cur: &mut Cursor) -> Result<Option<Monomial>, PolyError> {
    let mut acc = Some(ring.unit_monomial());
    loop {
        let f = factor(ring, cur)?;
        acc = match (acc, f) {
            (Some(a), Some(b)) => Some(a.mul(&b)?),
            _ => None,
        };
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
        } else {
            return Ok(acc);
        }
    }
}

fn factor(ring: &RingRef, cur: &mut Cursor) -> Result<Option<Monomial>, PolyError> {
    match cur.peek() {
        Some(b'0') => {
            cur.pos += 1;
            Ok(None)
        }
        Some(b'1') => {
            cur.pos += 1;
            Ok(Some(ring.unit_monomial()))
        }
        Some(c @ (b't' | b'u' | b'w' | b'v' | b'x' | b'y')) => {
            cur.pos += 1;
            let name = if c == b't' {
                "t".to_string()
            } else {
                let idx = cur.uint()?.ok_or_else(|| cur.err("expected generator index"))?;
                format!("{}{idx}", c as char)
            };
            let pos = ring.position(&name).ok_or(PolyError::UnknownGenerator(name))?;
            let e = if cur.peek() == Some(b'^') {
                cur.pos += 1;
                cur.uint()?.ok_or_else(|| cur.err("expected exponent"))?
            } else {
                1
            };
            Ok(Some(ring.generator_monomial(pos, e)))
        }
        Some(c) => Err(cur.err(format!("unexpected `{}`", c as char))),
        None => Err(cur.err("unexpected end of input")),
    }
}
