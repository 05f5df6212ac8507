//! Text formats for rings, ideals and graphs.
//!
//! An ideal document is an optional `ring x y z` line followed by one or
//! more ideals separated by `;`. Generators are separated by commas or
//! newlines, and a generator is a `*`-separated product of `var` or
//! `var^exp` factors (`1` is the unit monomial, a lone `0` the zero ideal).
//! `#` starts a comment. Without a ring line the variables are taken in
//! order of first appearance.

use vfun_core::ring::is_valid_name;
use vfun_core::{minimalize, AmbientRing, Graph, Monomial, MonomialIdeal, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown variable `{name}`")]
    UnknownVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{line}:{column}: exponent overflow")]
    Overflow { line: usize, column: usize },
    #[error(transparent)]
    Algebra(#[from] vfun_core::Error),
}

pub type Result<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn syntax(self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(String),
    Star,
    Caret,
    Comma,
    Newline,
    Semi,
}

fn lex(text: &str, first_line: usize) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    for (offset, line) in text.lines().enumerate() {
        let line_no = first_line + offset;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos {
                line: line_no,
                column: i + 1,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                ',' => Some(Tok::Comma),
                ';' => Some(Tok::Semi),
                _ => None,
            };
            if let Some(t) = single {
                out.push((t, pos));
                i += 1;
                continue;
            }
            let start = i;
            if c.is_ascii_digit() {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(chars[start..i].iter().collect()), pos));
            } else if c.is_alphabetic() || c == '_' {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Name(chars[start..i].iter().collect()), pos));
            } else {
                return Err(pos.syntax(format!("unexpected character `{c}`")));
            }
        }
        out.push((
            Tok::Newline,
            Pos {
                line: line_no,
                column: chars.len() + 1,
            },
        ));
    }
    Ok(out)
}

type Factor = (String, u32, Pos);

/// A generator before names are resolved; `None` marks the literal `0`.
type RawGen = Option<Vec<Factor>>;

fn parse_exponent(digits: &str, pos: Pos) -> Result<u32> {
    digits.parse::<u32>().map_err(|_| ParseError::Overflow {
        line: pos.line,
        column: pos.column,
    })
}

/// Splits the token stream into ideals of raw generators.
fn parse_blocks(toks: &[(Tok, Pos)]) -> Result<Vec<(Vec<RawGen>, Pos)>> {
    let mut blocks = Vec::new();
    let mut gens: Vec<RawGen> = Vec::new();
    let mut block_pos: Option<Pos> = None;
    let mut i = 0;
    // true right after a comma: a generator must follow
    let mut pending_comma: Option<Pos> = None;
    while i < toks.len() {
        let (tok, pos) = &toks[i];
        match tok {
            Tok::Newline => {
                i += 1;
            }
            Tok::Semi => {
                if let Some(p) = pending_comma {
                    return Err(p.syntax("expected a generator after `,`"));
                }
                if let Some(bp) = block_pos.take() {
                    blocks.push((std::mem::take(&mut gens), bp));
                }
                i += 1;
            }
            Tok::Comma => {
                if pending_comma.is_some() || block_pos.is_none() {
                    return Err(pos.syntax("expected a generator before `,`"));
                }
                pending_comma = Some(*pos);
                i += 1;
            }
            _ => {
                if !gens.is_empty() && pending_comma.is_none() {
                    // generators on one line need a comma between them
                    let prev_line = toks[i - 1].1.line;
                    if !matches!(toks[i - 1].0, Tok::Newline) && prev_line == pos.line {
                        return Err(pos.syntax("expected `,` or `*`"));
                    }
                }
                block_pos.get_or_insert(*pos);
                pending_comma = None;
                let (g, next) = parse_generator(toks, i)?;
                gens.push(g);
                i = next;
            }
        }
    }
    if let Some(p) = pending_comma {
        return Err(p.syntax("expected a generator after `,`"));
    }
    if let Some(bp) = block_pos {
        blocks.push((gens, bp));
    }
    Ok(blocks)
}

fn parse_generator(toks: &[(Tok, Pos)], mut i: usize) -> Result<(RawGen, usize)> {
    let mut factors = Vec::new();
    if let (Tok::Int(d), _) = &toks[i] {
        if d == "0" && !matches!(toks.get(i + 1), Some((Tok::Star | Tok::Caret, _))) {
            return Ok((None, i + 1));
        }
    }
    loop {
        let (tok, pos) = &toks[i];
        match tok {
            Tok::Name(name) => {
                i += 1;
                let mut exp = 1;
                if let Some((Tok::Caret, cpos)) = toks.get(i) {
                    match toks.get(i + 1) {
                        Some((Tok::Int(d), dpos)) => {
                            exp = parse_exponent(d, *dpos)?;
                            i += 2;
                        }
                        _ => return Err(cpos.syntax("expected an exponent after `^`")),
                    }
                }
                factors.push((name.clone(), exp, *pos));
            }
            Tok::Int(d) if d == "1" => {
                i += 1;
            }
            Tok::Int(d) => return Err(pos.syntax(format!("unexpected number `{d}`"))),
            _ => return Err(pos.syntax("expected a variable")),
        }
        match toks.get(i) {
            Some((Tok::Star, _)) => i += 1,
            Some((Tok::Caret, p)) => return Err(p.syntax("unexpected `^`")),
            _ => break,
        }
    }
    Ok((Some(factors), i))
}

fn build_ideal(ring: &Ring, gens: &[RawGen]) -> Result<MonomialIdeal> {
    let n = ring.len();
    let mut monos = Vec::with_capacity(gens.len());
    for g in gens.iter().flatten() {
        let mut e = vec![0u32; n];
        for (name, exp, pos) in g {
            let Some(v) = ring.index_of(name) else {
                return Err(ParseError::UnknownVariable {
                    line: pos.line,
                    column: pos.column,
                    name: name.clone(),
                });
            };
            e[v] = e[v].checked_add(*exp).ok_or(ParseError::Overflow {
                line: pos.line,
                column: pos.column,
            })?;
        }
        monos.push(Monomial::new(e));
    }
    Ok(minimalize(ring, monos)?)
}

type RingLine = Option<Vec<(String, Pos)>>;

/// Splits off a leading `ring ...` declaration; returns the names with
/// their positions and the line number where the body starts.
fn split_ring_line(text: &str) -> Result<(RingLine, usize, &str)> {
    let mut consumed = 0;
    for (offset, line) in text.split_inclusive('\n').enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        if trimmed.is_empty() {
            consumed += line.len();
            continue;
        }
        let lead = body.len() - trimmed.len();
        let is_decl = trimmed
            .strip_prefix("ring")
            .is_some_and(|r| r.is_empty() || r.starts_with(char::is_whitespace));
        if !is_decl {
            return Ok((None, offset + 1, &text[consumed..]));
        }
        let line_no = offset + 1;
        let mut names = Vec::new();
        let mut col = lead + "ring".len();
        let rest = &body[col..];
        let mut cursor = 0;
        for word in rest.split_whitespace() {
            let at = rest[cursor..].find(word).expect("word comes from rest") + cursor;
            cursor = at + word.len();
            let pos = Pos {
                line: line_no,
                column: col + at + 1,
            };
            if !is_valid_name(word) {
                return Err(pos.syntax(format!("invalid variable name `{word}`")));
            }
            if names.iter().any(|(n, _): &(String, Pos)| n == word) {
                return Err(pos.syntax(format!("duplicate variable `{word}`")));
            }
            names.push((word.to_string(), pos));
        }
        col += rest.len();
        if names.is_empty() {
            return Err(Pos {
                line: line_no,
                column: col + 1,
            }
            .syntax("ring needs at least one variable"));
        }
        consumed += line.len();
        return Ok((Some(names), line_no + 1, &text[consumed..]));
    }
    Ok((None, 1, ""))
}

/// `ring x y z` (the keyword may be omitted).
pub fn parse_ring(text: &str) -> Result<Ring> {
    let (decl, body_line, body) = split_ring_line(text)?;
    let names = match decl {
        Some(names) => {
            if let Some((_, pos)) = lex(body, body_line)?
                .iter()
                .find(|(t, _)| *t != Tok::Newline)
            {
                return Err(pos.syntax("unexpected input after the ring declaration"));
            }
            names.into_iter().map(|(n, _)| n).collect::<Vec<_>>()
        }
        None => {
            let mut names: Vec<String> = Vec::new();
            for (tok, pos) in lex(body, body_line)? {
                match tok {
                    Tok::Name(n) if names.contains(&n) => {
                        return Err(pos.syntax(format!("duplicate variable `{n}`")))
                    }
                    Tok::Name(n) => names.push(n),
                    Tok::Newline => {}
                    _ => return Err(pos.syntax("expected a variable name")),
                }
            }
            names
        }
    };
    if names.is_empty() {
        return Err(Pos { line: 1, column: 1 }.syntax("ring needs at least one variable"));
    }
    Ok(AmbientRing::new(names)?)
}

/// One ideal over a known ring.
pub fn parse_ideal(text: &str, ring: &Ring) -> Result<MonomialIdeal> {
    let toks = lex(text, 1)?;
    let blocks = parse_blocks(&toks)?;
    match blocks.as_slice() {
        [] => Err(Pos { line: 1, column: 1 }.syntax("expected an ideal")),
        [(gens, _)] => build_ideal(ring, gens),
        [_, (_, pos), ..] => Err(pos.syntax("expected a single ideal")),
    }
}

/// Ideals read from one input, all in one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDocument {
    pub ring: Ring,
    pub ideals: Vec<MonomialIdeal>,
    /// No `ring` line was given; variables are in order of first appearance.
    pub ring_inferred: bool,
}

pub fn parse_document(text: &str) -> Result<IdealDocument> {
    let (decl, body_line, body) = split_ring_line(text)?;
    let toks = lex(body, body_line)?;
    let blocks = parse_blocks(&toks)?;
    if blocks.is_empty() {
        let end = Pos {
            line: text.lines().count().max(1),
            column: 1,
        };
        return Err(end.syntax("expected an ideal"));
    }
    let ring_inferred = decl.is_none();
    let ring = match decl {
        Some(names) => AmbientRing::new(names.into_iter().map(|(n, _)| n))?,
        None => {
            let mut names: Vec<String> = Vec::new();
            for (gens, _) in &blocks {
                for (name, _, _) in gens.iter().flatten().flatten() {
                    if !names.contains(name) {
                        names.push(name.clone());
                    }
                }
            }
            if names.is_empty() {
                return Err(blocks[0].1.syntax("cannot infer a ring without variables"));
            }
            AmbientRing::new(names)?
        }
    };
    let ideals = blocks
        .iter()
        .map(|(gens, _)| build_ideal(&ring, gens))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealDocument {
        ring,
        ideals,
        ring_inferred,
    })
}

/// Renders a document so that [`parse_document`] reads it back unchanged.
pub fn render_document(ring: &Ring, ideals: &[MonomialIdeal]) -> String {
    let mut out = format!("{ring}\n");
    for (i, ideal) in ideals.iter().enumerate() {
        if i > 0 {
            out.push_str(";\n");
        }
        out.push_str(&ideal.to_string());
        out.push('\n');
    }
    out
}

/// One edge per line as two vertex names; a single name adds an isolated
/// vertex.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new(Vec::<String>::new());
    for (offset, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let mut words = Vec::new();
        let mut cursor = 0;
        for word in body.split_whitespace() {
            let at = body[cursor..].find(word).expect("word comes from body") + cursor;
            cursor = at + word.len();
            let pos = Pos {
                line: offset + 1,
                column: at + 1,
            };
            if !is_valid_name(word) {
                return Err(pos.syntax(format!("invalid vertex name `{word}`")));
            }
            words.push((word, pos));
        }
        match words.as_slice() {
            [] => {}
            [(a, _)] => {
                g.add_vertex(*a);
            }
            [(a, _), (b, pos)] => {
                if a == b {
                    return Err(pos.syntax(format!("loop at `{a}`")));
                }
                g.add_vertex(*a);
                g.add_vertex(*b);
                g.add_edge(a, b)?;
            }
            [_, _, (_, pos), ..] => {
                return Err(pos.syntax("expected at most two vertices per line"))
            }
        }
    }
    if g.edges().is_empty() && g.vertices().is_empty() {
        return Err(Pos { line: 1, column: 1 }.syntax("empty graph"));
    }
    Ok(g)
}

/// Edge list rendering accepted by [`parse_graph`].
pub fn render_graph(g: &Graph) -> String {
    let mut out = String::new();
    let mut touched = vec![false; g.vertices().len()];
    for &(a, b) in g.edges() {
        touched[a] = true;
        touched[b] = true;
    }
    for (v, name) in g.vertices().iter().enumerate() {
        if !touched[v] {
            out.push_str(name);
            out.push('\n');
        }
    }
    for &(a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", g.vertices()[a], g.vertices()[b]));
    }
    out
}
