//! Text formats: ordinal expressions, sequence descriptors and certificates.
//!
//! Expression grammar (ASCII, whitespace ignored):
//!
//! ```text
//! expr := sum
//! sum  := prod (('+' | '#') prod)*      left-associative, '#' is ⊞
//! prod := pow ('*' NAT)*
//! pow  := atom ('^' atom)?              base must evaluate to w
//! atom := 'w' | NAT | '(' expr ')'
//! ```

use num_bigint::BigUint;

use crate::error::ParseError;
use crate::mixed::{Block, Certificate};
use crate::ordinal::{Ordinal, DEFAULT_DEPTH_LIMIT};
use crate::sequence::{OmegaSequence, Tail};

/// Parses and evaluates an ordinal expression.
pub fn parse_ordinal(text: &str) -> Result<Ordinal, ParseError> {
    parse_ordinal_with_limit(text, DEFAULT_DEPTH_LIMIT)
}

pub fn parse_ordinal_with_limit(text: &str, depth_limit: usize) -> Result<Ordinal, ParseError> {
    let mut p = ExprParser {
        src: text.as_bytes(),
        pos: 0,
        depth_limit,
    };
    let value = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(value)
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
    depth_limit: usize,
}

impl ExprParser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError::new(self.pos, message)
    }

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

    fn sum(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.prod()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.prod()?);
            } else if self.eat(b'#') {
                acc = acc.nat_sum(&self.prod()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn prod(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.pow()?;
        while self.eat(b'*') {
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error("expected a natural number after '*'"));
            }
            acc = acc.mul_natural(&self.natural()?);
        }
        Ok(acc)
    }

    fn pow(&mut self) -> Result<Ordinal, ParseError> {
        let start = self.pos;
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        if base != Ordinal::omega() {
            return Err(ParseError::new(start, "only w can be raised to a power"));
        }
        let at = self.pos;
        let exponent = self.atom()?;
        Ordinal::omega_pow_with_limit(&exponent, self.depth_limit)
            .map_err(|e| ParseError::new(at, e.to_string()))
    }

    fn atom(&mut self) -> Result<Ordinal, ParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::natural(self.natural()?)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(_) => Err(self.error("expected 'w', a number or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn natural(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|digits| digits.parse().ok())
            .ok_or_else(|| ParseError::new(start, "expected a natural number"))
    }
}

/// Parses a comma-separated list of expressions. Blank input is the empty
/// list.
pub fn parse_ordinal_list(text: &str) -> Result<Vec<Ordinal>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut offset = 0;
    let mut items = Vec::new();
    for piece in text.split(',') {
        items.push(
            parse_ordinal(piece).map_err(|e| ParseError::new(offset + e.position, e.message))?,
        );
        offset += piece.len() + 1;
    }
    Ok(items)
}

/// Parses a sequence descriptor:
///
/// ```text
/// head: <expr>, <expr>, ...          (optional)
/// tail: zero | periodic <expr>, ... | ramp <expr>
/// ```
///
/// Blank lines are ignored. Error positions are byte offsets into the
/// whole input.
pub fn parse_sequence(text: &str) -> Result<OmegaSequence, ParseError> {
    let mut head: Option<Vec<Ordinal>> = None;
    let mut tail: Option<Tail> = None;
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let offset = line_start;
        line_start += line.len();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = offset + (line.len() - line.trim_start().len());
        let relocate = |e: ParseError, base: usize| ParseError::new(base + e.position, e.message);
        if tail.is_some() {
            return Err(ParseError::new(lead, "nothing may follow the tail line"));
        }
        if let Some(rest) = trimmed.strip_prefix("head:") {
            if head.is_some() {
                return Err(ParseError::new(lead, "duplicate head line"));
            }
            let base = lead + "head:".len();
            head = Some(parse_ordinal_list(rest).map_err(|e| relocate(e, base))?);
        } else if let Some(rest) = trimmed.strip_prefix("tail:") {
            let base = lead + "tail:".len();
            let body = rest.trim_start();
            let base = base + (rest.len() - body.len());
            tail = Some(if body == "zero" {
                Tail::Zero
            } else if let Some(list) = body.strip_prefix("periodic") {
                let period = parse_ordinal_list(list).map_err(|e| relocate(e, base + 8))?;
                if period.is_empty() {
                    return Err(ParseError::new(
                        base,
                        "a periodic tail needs a nonempty period",
                    ));
                }
                Tail::Periodic(period)
            } else if let Some(expr) = body.strip_prefix("ramp") {
                Tail::DegreeRamp(parse_ordinal(expr).map_err(|e| relocate(e, base + 4))?)
            } else {
                return Err(ParseError::new(
                    base,
                    "expected 'zero', 'periodic' or 'ramp'",
                ));
            });
        } else {
            return Err(ParseError::new(lead, "expected 'head:' or 'tail:'"));
        }
    }
    let tail = tail.ok_or_else(|| ParseError::new(text.len(), "missing tail line"))?;
    OmegaSequence::new(head.unwrap_or_default(), tail)
        .map_err(|e| ParseError::new(text.len(), e.to_string()))
}

/// Parses the certificate listing produced by `Certificate`'s `Display`.
pub fn parse_certificate(text: &str) -> Result<Certificate, ParseError> {
    let mut head_blocks = Vec::new();
    let mut tail_from = None;
    let mut value = None;
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let offset = line_start + (line.len() - line.trim_start().len());
        line_start += line.len();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if value.is_some() {
            return Err(ParseError::new(offset, "nothing may follow the value line"));
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if tail_from.is_some() {
                return Err(ParseError::new(offset, "blocks must precede the tail rule"));
            }
            let (index, length) = rest
                .split_once(':')
                .ok_or_else(|| ParseError::new(offset, "expected '#<index> : <length>'"))?;
            let summand = index
                .trim()
                .parse()
                .map_err(|_| ParseError::new(offset + 1, "bad summand index"))?;
            let at = offset + 2 + index.len();
            let length =
                parse_ordinal(length).map_err(|e| ParseError::new(at + e.position, e.message))?;
            head_blocks.push(Block { summand, length });
        } else if let Some(rest) = trimmed.strip_prefix("tail from") {
            if tail_from.is_some() {
                return Err(ParseError::new(offset, "duplicate tail rule"));
            }
            tail_from = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| ParseError::new(offset + 9, "bad tail index"))?,
            );
        } else if let Some(rest) = trimmed.strip_prefix("value:") {
            let at = offset + 6;
            value =
                Some(parse_ordinal(rest).map_err(|e| ParseError::new(at + e.position, e.message))?);
        } else {
            return Err(ParseError::new(
                offset,
                "expected a block, 'tail from' or 'value:'",
            ));
        }
    }
    Ok(Certificate {
        head_blocks,
        tail_from,
        value: value.ok_or_else(|| ParseError::new(text.len(), "missing value line"))?,
    })
}
