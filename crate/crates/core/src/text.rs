//! The textual grammar and serialization: parse and render diagrams,
//! morphisms and generator words as text or JSON, plus a best-effort ASCII
//! picture. Rendering then parsing is the identity in both formats.
//!
//! Diagram text looks like `7 -> 5 ; {1,3,1'},{2,4},{5,3',5'},{7,2'},{6},{4'}`
//! with primes marking top-row vertices. Morphism text is a sum of
//! `scalar * (diagram)` terms; word text is `domain : atoms ; atoms ; ...`.

use serde_json::{json, Value};

use crate::diagram::{Diagram, Vertex};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::scalar::Scalar;
use crate::word::{Atom, Slice, Word};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

impl std::fmt::Display for Diagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {} ;", self.bottom(), self.top())?;
        for (i, block) in self.blocks().iter().enumerate() {
            f.write_str(if i == 0 { " {" } else { ",{" })?;
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (diagram, scalar)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if scalar.is_monomial() {
                write!(f, "{scalar} * ({diagram})")?;
            } else {
                write!(f, "({scalar}) * ({diagram})")?;
            }
        }
        Ok(())
    }
}

pub fn diagram_to_json(d: &Diagram) -> Value {
    json!({
        "bottom": d.bottom(),
        "top": d.top(),
        "blocks": d
            .blocks()
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn scalar_to_json(s: &Scalar) -> Value {
    Value::Array(
        s.terms()
            .map(|(e, c)| json!([e, c]))
            .collect(),
    )
}

pub fn morphism_to_json(m: &Morphism) -> Value {
    json!({
        "source": m.source(),
        "target": m.target(),
        "terms": m
            .terms()
            .map(|(d, s)| json!({ "coeff": scalar_to_json(s), "diagram": diagram_to_json(d) }))
            .collect::<Vec<_>>(),
    })
}

pub fn word_to_json(w: &Word) -> Value {
    json!({
        "domain": w.domain(),
        "slices": w
            .slices()
            .iter()
            .map(|s| s.0.iter().map(|a| a.token().to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

/// A best-effort two-row picture: vertex labels with the index of the block
/// each vertex belongs to as a connector hint. Not a stable format.
pub fn ascii_diagram(d: &Diagram) -> String {
    let width = 4;
    let pad = |s: &str| format!("{s:>width$}");
    let block_id = |v: Vertex| -> String {
        let id = d
            .blocks()
            .iter()
            .position(|b| b.contains(&v))
            .map(|i| i + 1)
            .unwrap_or(0);
        if d.is_singleton(v) {
            ".".to_string()
        } else {
            format!("{id}")
        }
    };
    let mut lines = Vec::new();
    lines.push(
        (1..=d.top())
            .map(|j| pad(&format!("{j}'")))
            .collect::<String>(),
    );
    lines.push((1..=d.top()).map(|_| pad("o")).collect::<String>());
    lines.push(
        (1..=d.top())
            .map(|j| pad(&block_id(Vertex::top(j))))
            .collect::<String>(),
    );
    lines.push(
        (1..=d.bottom())
            .map(|i| pad(&block_id(Vertex::bottom(i))))
            .collect::<String>(),
    );
    lines.push((1..=d.bottom()).map(|_| pad("o")).collect::<String>());
    lines.push(
        (1..=d.bottom())
            .map(|i| pad(&format!("{i}")))
            .collect::<String>(),
    );
    lines.join("\n")
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error(&self, expected: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            expected: expected.to_string(),
        }
    }

    fn eat(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(&format!("`{token}`")))
        }
    }

    fn try_eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.error("an integer"));
        }
        self.pos += digits.len();
        digits
            .parse()
            .map_err(|_| self.error("an integer in range"))
    }

    fn identifier(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let len = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphabetic())
            .count();
        if len == 0 {
            return Err(self.error("an identifier"));
        }
        let word = &self.rest()[..len];
        self.pos += len;
        Ok(word)
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

fn parse_vertex(cur: &mut Cursor) -> Result<Vertex> {
    let index = cur.integer()?;
    if cur.try_eat("'") {
        Ok(Vertex::top(index))
    } else {
        Ok(Vertex::bottom(index))
    }
}

fn parse_diagram_body(cur: &mut Cursor) -> Result<Diagram> {
    let bottom = cur.integer()?;
    cur.eat("->")?;
    let top = cur.integer()?;
    cur.eat(";")?;
    let mut blocks = Vec::new();
    if cur.peek() == Some('{') {
        loop {
            cur.eat("{")?;
            let mut block = vec![parse_vertex(cur)?];
            while cur.try_eat(",") {
                block.push(parse_vertex(cur)?);
            }
            cur.eat("}")?;
            blocks.push(block);
            if !cur.try_eat(",") {
                break;
            }
        }
    }
    Diagram::new(bottom, top, blocks)
}

/// Parses diagram text like `2 -> 2 ; {1,1'},{2,2'}`.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut cur = Cursor::new(text);
    let d = parse_diagram_body(&mut cur)?;
    cur.end()?;
    Ok(d)
}

/// One monomial: `3t^2`, `t`, `-t^4`, `7`. The leading sign is optional.
fn parse_monomial(cur: &mut Cursor) -> Result<Scalar> {
    let negative = cur.try_eat("-");
    cur.skip_ws();
    let coefficient = if cur.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
        cur.integer()? as i64
    } else {
        1
    };
    let exponent = if cur.try_eat("t") {
        if cur.try_eat("^") {
            cur.integer()?
        } else {
            1
        }
    } else {
        0
    };
    let signed = if negative { -coefficient } else { coefficient };
    Ok(Scalar::monomial(signed, exponent))
}

fn parse_polynomial(cur: &mut Cursor) -> Result<Scalar> {
    let mut sum = parse_monomial(cur)?;
    // A following `-` starts the next (negative) monomial itself.
    while cur.try_eat("+") || cur.peek() == Some('-') {
        sum = &sum + &parse_monomial(cur)?;
    }
    Ok(sum)
}

/// Parses scalar text like `2t^2+1` or `-t`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let mut cur = Cursor::new(text);
    let s = parse_polynomial(&mut cur)?;
    cur.end()?;
    Ok(s)
}

fn parse_morphism_term(cur: &mut Cursor) -> Result<(Scalar, Diagram)> {
    let scalar = if cur.peek() == Some('(') {
        cur.eat("(")?;
        let s = parse_polynomial(cur)?;
        cur.eat(")")?;
        s
    } else {
        parse_monomial(cur)?
    };
    cur.eat("*")?;
    cur.eat("(")?;
    let diagram = parse_diagram_body(cur)?;
    cur.eat(")")?;
    Ok((scalar, diagram))
}

/// Parses morphism text like `t^2 * (2 -> 2 ; {1,1'},{2,2'}) + 3 * (...)`.
/// The zero morphism is written `0`, optionally typed as `0 : k -> l`.
pub fn parse_morphism(text: &str) -> Result<Morphism> {
    let mut cur = Cursor::new(text);
    if cur.try_eat("0") {
        let (source, target) = if cur.try_eat(":") {
            let s = cur.integer()?;
            cur.eat("->")?;
            (s, cur.integer()?)
        } else {
            (0, 0)
        };
        cur.end()?;
        return Ok(Morphism::zero(source, target));
    }
    let (scalar, diagram) = parse_morphism_term(&mut cur)?;
    let mut m = Morphism::with_coeff(scalar, diagram);
    while cur.try_eat("+") {
        let (scalar, diagram) = parse_morphism_term(&mut cur)?;
        m = m.add(&Morphism::with_coeff(scalar, diagram)).map_err(|_| {
            cur.error("a diagram of the same type")
        })?;
    }
    cur.end()?;
    Ok(m)
}

/// Parses word text like `2 : | eta | ; mu |`. The `domain :` prefix is
/// optional when the word has at least one slice.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut cur = Cursor::new(text);
    let declared_domain = if cur.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
        let d = cur.integer()?;
        cur.eat(":")?;
        Some(d)
    } else {
        None
    };
    cur.skip_ws();
    let mut slices: Vec<Slice> = Vec::new();
    if !cur.rest().is_empty() {
        for segment in cur.rest().split(';') {
            let mut atoms = Vec::new();
            let mut seg = Cursor::new(segment);
            loop {
                seg.skip_ws();
                match seg.peek() {
                    None => break,
                    Some('|') => {
                        seg.eat("|")?;
                        atoms.push(Atom::Id);
                    }
                    Some(c) if c.is_ascii_alphabetic() => {
                        let offset = cur.pos + seg.pos;
                        let name = seg.identifier()?;
                        if name == "nil" {
                            continue; // explicit empty slice marker
                        }
                        let atom = Atom::from_token(name).ok_or(Error::Syntax {
                            offset,
                            expected: "an atom (|, mu, delta, s, eta, eps, d, c)".into(),
                        })?;
                        atoms.push(atom);
                    }
                    Some(_) => {
                        return Err(Error::Syntax {
                            offset: cur.pos + seg.pos,
                            expected: "an atom (|, mu, delta, s, eta, eps, d, c)".into(),
                        })
                    }
                }
            }
            slices.push(Slice(atoms));
        }
    }
    let domain = match declared_domain {
        Some(d) => d,
        None => match slices.first() {
            Some(s) => s.domain(),
            None => {
                return Err(Error::Syntax {
                    offset: 0,
                    expected: "a `domain :` prefix for the empty word".into(),
                })
            }
        },
    };
    Word::new(domain, slices)
}

// ---------------------------------------------------------------------------
// JSON parsing
// ---------------------------------------------------------------------------

fn json_error(expected: &str) -> Error {
    Error::Syntax {
        offset: 0,
        expected: expected.to_string(),
    }
}

fn vertex_from_str(s: &str) -> Result<Vertex> {
    let mut cur = Cursor::new(s);
    let v = parse_vertex(&mut cur)?;
    cur.end()?;
    Ok(v)
}

pub fn diagram_from_json(v: &Value) -> Result<Diagram> {
    let bottom = v["bottom"].as_u64().ok_or_else(|| json_error("bottom"))? as usize;
    let top = v["top"].as_u64().ok_or_else(|| json_error("top"))? as usize;
    let blocks = v["blocks"]
        .as_array()
        .ok_or_else(|| json_error("blocks array"))?
        .iter()
        .map(|b| {
            b.as_array()
                .ok_or_else(|| json_error("block array"))?
                .iter()
                .map(|s| vertex_from_str(s.as_str().ok_or_else(|| json_error("vertex string"))?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Diagram::new(bottom, top, blocks)
}

fn scalar_from_json(v: &Value) -> Result<Scalar> {
    let mut s = Scalar::zero();
    for pair in v.as_array().ok_or_else(|| json_error("coeff array"))? {
        let e = pair[0].as_u64().ok_or_else(|| json_error("exponent"))? as usize;
        let c = pair[1].as_i64().ok_or_else(|| json_error("coefficient"))?;
        s = &s + &Scalar::monomial(c, e);
    }
    Ok(s)
}

pub fn morphism_from_json(v: &Value) -> Result<Morphism> {
    let source = v["source"].as_u64().ok_or_else(|| json_error("source"))? as usize;
    let target = v["target"].as_u64().ok_or_else(|| json_error("target"))? as usize;
    let mut m = Morphism::zero(source, target);
    for term in v["terms"].as_array().ok_or_else(|| json_error("terms"))? {
        let coeff = scalar_from_json(&term["coeff"])?;
        let diagram = diagram_from_json(&term["diagram"])?;
        m = m
            .add(&Morphism::with_coeff(coeff, diagram))
            .map_err(|_| json_error("terms of one type"))?;
    }
    Ok(m)
}

pub fn word_from_json(v: &Value) -> Result<Word> {
    let domain = v["domain"].as_u64().ok_or_else(|| json_error("domain"))? as usize;
    let slices = v["slices"]
        .as_array()
        .ok_or_else(|| json_error("slices"))?
        .iter()
        .map(|s| {
            Ok(Slice(
                s.as_array()
                    .ok_or_else(|| json_error("slice array"))?
                    .iter()
                    .map(|a| {
                        let tok = a.as_str().ok_or_else(|| json_error("atom string"))?;
                        Atom::from_token(tok).ok_or_else(|| json_error("a known atom token"))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Word::new(domain, slices)
}
