//! The line-oriented text format for arc sets.
//!
//! ```text
//! # the fountain at 0
//! order threads 1
//! family {(0, n), (0, 0)} for n in [2, +inf)
//! family {(0, n), (0, 0)} for n in (-inf, -2]
//! ```
//!
//! Finite polygons use bare integers as points (`arc 0 2`); infinity-gons
//! use `(thread, offset)`. In a family, offsets are `INT`, `n`, `-n`, or
//! `±n ± INT`. Infinite range bounds may be written with either bracket.

use std::fmt::Write;

use cyclotri::octagon::Interval;
use cyclotri::{AffinePointMap, Arc, ArcFamily, CyclicOrder, Point, SymbolicArcSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {message} in `{statement}`")]
    Semantic {
        line: usize,
        statement: String,
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Word(String),
    Sym(char),
}

struct Lexer<'a> {
    line: usize,
    text: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(line: usize, text: &'a str) -> Result<Self, ParseError> {
        let mut toks = Vec::new();
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (at, c) = chars[i];
            let column = text[..at].chars().count() + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let end = chars.get(i).map_or(text.len(), |t| t.0);
                let digits = &text[chars[start].0..end];
                let value = digits.parse::<i64>().map_err(|_| ParseError::Syntax {
                    line,
                    column,
                    message: format!("number {digits} is too large"),
                })?;
                toks.push((Tok::Int(value), column));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let end = chars.get(i).map_or(text.len(), |t| t.0);
                toks.push((Tok::Word(text[chars[start].0..end].to_string()), column));
            } else if "(){}[],+-".contains(c) {
                toks.push((Tok::Sym(c), column));
                i += 1;
            } else {
                return Err(ParseError::Syntax {
                    line,
                    column,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        Ok(Lexer {
            line,
            text,
            toks,
            pos: 0,
        })
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.text.chars().count() + 1, |t| t.1)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            line: self.line,
            column: self.column(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.peek().cloned();
        self.pos += 1;
        t
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of line".into(),
            Some(Tok::Int(i)) => format!("`{i}`"),
            Some(Tok::Word(w)) => format!("`{w}`"),
            Some(Tok::Sym(c)) => format!("`{c}`"),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            return Ok(());
        }
        self.error(format!("expected `{c}`, found {}", self.found()))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        let hit = self.peek() == Some(&Tok::Sym(c));
        self.pos += hit as usize;
        hit
    }

    fn word(&mut self, w: &str) -> Result<(), ParseError> {
        if matches!(self.peek(), Some(Tok::Word(x)) if x == w) {
            self.pos += 1;
            return Ok(());
        }
        self.error(format!("expected `{w}`, found {}", self.found()))
    }

    fn uint(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some(&Tok::Int(i)) => {
                self.pos += 1;
                Ok(i)
            }
            _ => self.error(format!("expected a number, found {}", self.found())),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat_sym('-');
        let value = self.uint()?;
        Ok(if negative { -value } else { value })
    }

    fn end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.error(format!("unexpected {}", self.found())),
        }
    }
}

/// A point expression before validation: `(thread, slope·n + offset)`.
#[derive(Debug, Clone, Copy)]
struct RawPoint {
    thread: u32,
    slope: i64,
    offset: i64,
}

fn thread_number(lx: &mut Lexer) -> Result<u32, ParseError> {
    let t = lx.uint()?;
    u32::try_from(t).or_else(|_| lx.error(format!("thread {t} is too large")))
}

/// `INT | [-][INT]n [(+|-) INT]`
fn offset_expr(lx: &mut Lexer, allow_n: bool) -> Result<(i64, i64), ParseError> {
    let negative = lx.eat_sym('-');
    let sign = if negative { -1 } else { 1 };
    let coeff = match lx.peek() {
        Some(&Tok::Int(i)) => {
            lx.pos += 1;
            Some(i)
        }
        _ => None,
    };
    let has_n = matches!(lx.peek(), Some(Tok::Word(w)) if w == "n");
    if !has_n {
        return match coeff {
            Some(c) => Ok((0, sign * c)),
            None => lx.error(format!("expected an offset, found {}", lx.found())),
        };
    }
    if !allow_n {
        return lx.error("the parameter `n` is only allowed in families");
    }
    lx.pos += 1;
    let slope = sign * coeff.unwrap_or(1);
    let offset = if lx.eat_sym('+') {
        lx.uint()?
    } else if lx.eat_sym('-') {
        -lx.uint()?
    } else {
        0
    };
    Ok((slope, offset))
}

fn raw_point(lx: &mut Lexer, order: CyclicOrder, allow_n: bool) -> Result<RawPoint, ParseError> {
    if order.is_finite() {
        let e = lx.int()?;
        return Ok(RawPoint {
            thread: 0,
            slope: 0,
            offset: e,
        });
    }
    lx.sym('(')?;
    let thread = thread_number(lx)?;
    lx.sym(',')?;
    let (slope, offset) = offset_expr(lx, allow_n)?;
    lx.sym(')')?;
    Ok(RawPoint { thread, slope, offset })
}

fn bound(lx: &mut Lexer, sign: char) -> Result<Option<i64>, ParseError> {
    let negative = lx.eat_sym('-');
    if !negative {
        lx.eat_sym('+');
    }
    if matches!(lx.peek(), Some(Tok::Word(w)) if w == "inf") {
        if (sign == '-' && !negative) || (sign == '+' && negative) {
            return lx.error(format!("expected `{sign}inf`"));
        }
        lx.pos += 1;
        return Ok(None);
    }
    let value = lx.uint()?;
    Ok(Some(if negative { -value } else { value }))
}

fn range(lx: &mut Lexer) -> Result<Interval, ParseError> {
    let open = match lx.next() {
        Some(Tok::Sym(c @ ('[' | '('))) => c,
        _ => {
            lx.pos -= 1;
            return lx.error(format!("expected `[` or `(`, found {}", lx.found()));
        }
    };
    let lo_col = lx.column();
    let lo = bound(lx, '-')?;
    if open == '(' && lo.is_some() {
        return Err(ParseError::Syntax {
            line: lx.line,
            column: lo_col,
            message: "finite bounds need `[`".into(),
        });
    }
    lx.sym(',')?;
    let hi_col = lx.column();
    let hi = bound(lx, '+')?;
    let close = match lx.next() {
        Some(Tok::Sym(c @ (']' | ')'))) => c,
        _ => {
            lx.pos -= 1;
            return lx.error(format!("expected `]` or `)`, found {}", lx.found()));
        }
    };
    if close == ')' && hi.is_some() {
        return Err(ParseError::Syntax {
            line: lx.line,
            column: hi_col,
            message: "finite bounds need `]`".into(),
        });
    }
    Ok(Interval::new(lo, hi))
}

fn exclusions(lx: &mut Lexer) -> Result<Vec<i64>, ParseError> {
    lx.sym('{')?;
    let mut out = Vec::new();
    if lx.eat_sym('}') {
        return Ok(out);
    }
    loop {
        out.push(lx.int()?);
        if lx.eat_sym('}') {
            return Ok(out);
        }
        lx.sym(',')?;
    }
}

fn affine(p: RawPoint) -> Result<AffinePointMap, String> {
    let slope = i8::try_from(p.slope)
        .ok()
        .filter(|s| (-1..=1).contains(s))
        .ok_or_else(|| format!("slope {} is not -1, 0 or 1", p.slope))?;
    AffinePointMap::new(p.thread, slope, p.offset).map_err(|e| e.to_string())
}

enum Statement {
    Arc(Arc),
    Family(ArcFamily),
}

fn statement(lx: &mut Lexer, order: CyclicOrder) -> Result<Result<Statement, String>, ParseError> {
    match lx.peek() {
        Some(Tok::Word(w)) if w == "arc" => {
            lx.pos += 1;
            let a = raw_point(lx, order, false)?;
            let b = raw_point(lx, order, false)?;
            lx.end()?;
            let (a, b) = (Point::threaded(a.thread, a.offset), Point::threaded(b.thread, b.offset));
            Ok(Arc::new(&order, a, b).map(Statement::Arc).map_err(|e| e.to_string()))
        }
        Some(Tok::Word(w)) if w == "family" => {
            lx.pos += 1;
            if order.is_finite() {
                return Ok(Err("families need an infinity-gon".into()));
            }
            lx.sym('{')?;
            let a = raw_point(lx, order, true)?;
            lx.sym(',')?;
            let b = raw_point(lx, order, true)?;
            lx.sym('}')?;
            lx.word("for")?;
            lx.word("n")?;
            lx.word("in")?;
            let range = range(lx)?;
            let excluded = if matches!(lx.peek(), Some(Tok::Word(w)) if w == "exclude") {
                lx.pos += 1;
                exclusions(lx)?
            } else {
                Vec::new()
            };
            lx.end()?;
            let family = affine(a).and_then(|a| Ok(ArcFamily::new(a, affine(b)?, range, excluded)));
            Ok(family.and_then(|f| {
                SymbolicArcSet::new(order, [], [f.clone()])
                    .map(|_| Statement::Family(f))
                    .map_err(|e| e.to_string())
            }))
        }
        _ => lx.error(format!("expected `arc` or `family`, found {}", lx.found())),
    }
}

fn header(lx: &mut Lexer) -> Result<Result<CyclicOrder, String>, ParseError> {
    lx.word("order")?;
    let kind = match lx.next() {
        Some(Tok::Word(w)) if w == "finite" || w == "threads" => w,
        _ => {
            lx.pos -= 1;
            return lx.error(format!("expected `finite` or `threads`, found {}", lx.found()));
        }
    };
    let size = lx.uint()?;
    lx.end()?;
    let Ok(size) = u32::try_from(size) else {
        return Ok(Err(format!("order size {size} is too large")));
    };
    Ok(match (kind.as_str(), size) {
        ("finite", 0) => Err("a polygon needs at least one point".into()),
        ("finite", n) => Ok(CyclicOrder::FiniteGon(n)),
        (_, 0) => Err("an infinity-gon needs at least one thread".into()),
        (_, k) => Ok(CyclicOrder::ThreadGon(k)),
    })
}

/// Parses a document into a validated arc set.
pub fn parse(text: &str) -> Result<SymbolicArcSet, ParseError> {
    let mut order = None;
    let mut arcs = Vec::new();
    let mut families = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let semantic = |message: String| ParseError::Semantic {
            line,
            statement: content.trim().to_string(),
            message,
        };
        let mut lx = Lexer::new(line, content)?;
        match order {
            None => order = Some(header(&mut lx)?.map_err(semantic)?),
            Some(o) => {
                if matches!(lx.peek(), Some(Tok::Word(w)) if w == "order") {
                    return Err(semantic("the order is already declared".into()));
                }
                match statement(&mut lx, o)?.map_err(semantic)? {
                    Statement::Arc(p) => arcs.push(p),
                    Statement::Family(f) => families.push(f),
                }
            }
        }
    }
    let Some(order) = order else {
        return Err(ParseError::Syntax {
            line: last_line.max(1),
            column: 1,
            message: "missing `order` header".into(),
        });
    };
    SymbolicArcSet::new(order, arcs, families).map_err(|e| ParseError::Semantic {
        line: last_line,
        statement: "document".into(),
        message: e.to_string(),
    })
}

/// Parses an arc given as two points, such as `0 2` or `(0, 1) (1, -3)`.
pub fn parse_arc(order: CyclicOrder, text: &str) -> Result<Arc, ParseError> {
    let mut lx = Lexer::new(1, text)?;
    let a = raw_point(&mut lx, order, false)?;
    let b = raw_point(&mut lx, order, false)?;
    lx.end()?;
    let (a, b) = (Point::threaded(a.thread, a.offset), Point::threaded(b.thread, b.offset));
    Arc::new(&order, a, b).map_err(|e| ParseError::Semantic {
        line: 1,
        statement: text.trim().into(),
        message: e.to_string(),
    })
}

pub fn point(order: CyclicOrder, p: Point) -> String {
    if order.is_finite() {
        p.offset.to_string()
    } else {
        p.to_string()
    }
}

pub fn arc(order: CyclicOrder, p: &Arc) -> String {
    format!("{} {}", point(order, p.lo()), point(order, p.hi()))
}

/// The canonical document of `set`.
pub fn print(set: &SymbolicArcSet) -> String {
    let order = set.order();
    let mut out = format!("order {order}\n");
    for p in set.explicit() {
        let _ = writeln!(out, "arc {}", arc(order, p));
    }
    for f in set.families() {
        let _ = write!(out, "family {{{}, {}}} for n in {}", f.first(), f.second(), f.range());
        if !f.excluded().is_empty() {
            let list: Vec<String> = f.excluded().iter().map(i64::to_string).collect();
            let _ = write!(out, " exclude {{{}}}", list.join(", "));
        }
        out.push('\n');
    }
    out
}
