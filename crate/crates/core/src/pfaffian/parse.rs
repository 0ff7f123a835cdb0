//! Polynomial expressions and the matrix/ideal file format.
//!
//! Expressions use integers, names, `+ - * ^` and parentheses, e.g.
//! `y*z*(y - z) + u` or `-3*x^2*v`.
//!
//! A format file is line based; `#` starts a comment:
//!
//! ```text
//! var x 1                 # variable name and positive weight
//! poly A = u*x + v^2      # named polynomial, usable in later lines
//! matrix = [ z, y, A, D ; x, B, E ; C, F ; s ]
//! ideal = u, v, w, s
//! ```
//!
//! `matrix` lists the strict upper triangle row by row (4, 3, 2 and 1 entries)
//! and may span several lines until the closing bracket.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use super::{PfaffianError, Ring, SkewMatrix5, SparsePoly, TriangularIdeal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Int(text.parse().map_err(|_| format!("bad integer `{text}`"))?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Name(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    at: usize,
    ring: &'a Arc<Ring>,
    names: &'a BTreeMap<String, SparsePoly>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SparsePoly, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly, String> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SparsePoly, String> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Int(n)) => {
                    self.at += 1;
                    let n: u32 = n.try_into().map_err(|_| "exponent too large".to_string())?;
                    Ok(base.pow(n))
                }
                _ => Err("expected an integer exponent after `^`".into()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SparsePoly, String> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.at += 1;
                Ok(SparsePoly::constant(self.ring, n))
            }
            Some(Token::Name(name)) => {
                self.at += 1;
                if let Some(p) = self.names.get(&name) {
                    Ok(p.clone())
                } else {
                    SparsePoly::var(self.ring, &name).map_err(|e| e.to_string())
                }
            }
            Some(Token::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.eat(')') {
                    Ok(inner)
                } else {
                    Err("missing `)`".into())
                }
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }
}

/// Parses an expression over `ring`; `names` supplies previously defined polynomials.
pub fn parse_expression(
    text: &str,
    ring: &Arc<Ring>,
    names: &BTreeMap<String, SparsePoly>,
) -> Result<SparsePoly, String> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err("empty expression".into());
    }
    let mut p = Parser { tokens, at: 0, ring, names };
    let out = p.expr()?;
    if p.at != p.tokens.len() {
        return Err(format!("trailing input after position {}", p.at));
    }
    Ok(out)
}

/// Contents of a format file.
#[derive(Clone, Debug)]
pub struct FormatFile {
    pub ring: Arc<Ring>,
    pub polys: BTreeMap<String, SparsePoly>,
    pub matrix: Option<SkewMatrix5>,
    pub ideal_generators: Vec<SparsePoly>,
}

impl FormatFile {
    /// The declared ideal as a triangular ideal.
    pub fn ideal(&self) -> Result<TriangularIdeal, PfaffianError> {
        TriangularIdeal::new(&self.ideal_generators)
    }
}

/// Splits at `sep` outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Parses a format file.
pub fn parse_format_file(text: &str) -> Result<FormatFile, ParseError> {
    // Join bracketed continuations into logical lines, keeping the first line number.
    let mut logical: Vec<(usize, String)> = Vec::new();
    let mut pending: Option<(usize, String)> = None;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        match pending.as_mut() {
            Some((_, buf)) => {
                buf.push(' ');
                buf.push_str(line);
            }
            None if line.is_empty() => continue,
            None => pending = Some((no + 1, line.to_string())),
        }
        let (_, buf) = pending.as_ref().expect("set above");
        if buf.matches('[').count() <= buf.matches(']').count() {
            logical.push(pending.take().expect("set above"));
        }
    }
    if let Some((line, _)) = pending {
        return Err(ParseError { line, message: "unterminated `[`".into() });
    }

    let mut vars = Vec::new();
    for (line, text) in &logical {
        if let Some(rest) = text.strip_prefix("var ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let err = |m: &str| ParseError { line: *line, message: m.to_string() };
            match parts.as_slice() {
                [name, weight] => {
                    let w: u32 = weight.parse().map_err(|_| err("weight must be a positive integer"))?;
                    vars.push((name.to_string(), w));
                }
                _ => return Err(err("expected `var NAME WEIGHT`")),
            }
        }
    }
    let ring = Ring::new(vars).map_err(|e| ParseError { line: 0, message: e.to_string() })?;
    let mut polys = BTreeMap::new();
    let mut matrix = None;
    let mut ideal_generators = Vec::new();
    for (line, text) in &logical {
        let err = |m: String| ParseError { line: *line, message: m };
        if text.starts_with("var ") {
            continue;
        }
        let (head, body) = text.split_once('=').ok_or_else(|| err("expected `=`".into()))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        match head.as_slice() {
            ["poly", name] => {
                if ring.index_of(name).is_some() {
                    return Err(err(format!("`{name}` is already a variable")));
                }
                let p = parse_expression(body, &ring, &polys).map_err(err)?;
                polys.insert(name.to_string(), p);
            }
            ["matrix"] => {
                let inner = body
                    .trim()
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| err("matrix must be enclosed in `[ ]`".into()))?;
                let rows = split_top(inner, ';');
                if rows.len() != 4 {
                    return Err(err(format!("matrix needs 4 rows separated by `;`, found {}", rows.len())));
                }
                let mut entries = Vec::new();
                for (i, row) in rows.iter().enumerate() {
                    let cells = split_top(row, ',');
                    if cells.len() != 4 - i {
                        return Err(err(format!(
                            "matrix row {} needs {} entries, found {}",
                            i + 1,
                            4 - i,
                            cells.len()
                        )));
                    }
                    for cell in cells {
                        entries.push(parse_expression(cell, &ring, &polys).map_err(err)?);
                    }
                }
                matrix = Some(SkewMatrix5::from_upper(entries).map_err(|e| err(e.to_string()))?);
            }
            ["ideal"] => {
                for g in split_top(body, ',') {
                    ideal_generators.push(parse_expression(g, &ring, &polys).map_err(err)?);
                }
            }
            _ => return Err(err(format!("unknown declaration `{}`", head.join(" ")))),
        }
    }
    Ok(FormatFile { ring, polys, matrix, ideal_generators })
}
