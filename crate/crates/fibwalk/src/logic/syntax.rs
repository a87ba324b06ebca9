use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use crate::automata::NumSys;

use super::LogicError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

/// Sum of integer multiples of variables plus a constant.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearTerm {
    pub coeffs: BTreeMap<String, i64>,
    pub constant: i64,
}

impl LinearTerm {
    pub fn constant(c: i64) -> Self {
        LinearTerm {
            coeffs: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn var(name: &str, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(name.to_string(), coeff);
        }
        LinearTerm {
            coeffs,
            constant: 0,
        }
    }

    /// The single variable name if the term is exactly `1 * x`.
    pub fn as_plain_var(&self) -> Option<&str> {
        if self.constant == 0 && self.coeffs.len() == 1 {
            let (name, &c) = self.coeffs.iter().next().unwrap();
            if c == 1 {
                return Some(name);
            }
        }
        None
    }

    fn merge(mut self, other: &LinearTerm, sign: i64) -> Self {
        for (v, &c) in &other.coeffs {
            let e = self.coeffs.entry(v.clone()).or_insert(0);
            *e += sign * c;
            if *e == 0 {
                self.coeffs.remove(v);
            }
        }
        self.constant += sign * other.constant;
        self
    }
}

impl Add<&LinearTerm> for LinearTerm {
    type Output = LinearTerm;
    fn add(self, rhs: &LinearTerm) -> LinearTerm {
        self.merge(rhs, 1)
    }
}

impl Sub<&LinearTerm> for LinearTerm {
    type Output = LinearTerm;
    fn sub(self, rhs: &LinearTerm) -> LinearTerm {
        self.merge(rhs, -1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Compare(LinearTerm, CmpOp, LinearTerm),
    Call(String, Vec<LinearTerm>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Exists(Vec<String>, Box<Formula>),
    Forall(Vec<String>, Box<Formula>),
}

/// Parse result: the tree plus the numeration-system annotations gathered
/// from `?lsd_fib` / `?lsd_cg` tags.
#[derive(Debug, Clone)]
pub struct ParsedFormula {
    pub ast: Formula,
    /// System for variables without an inline tag. A tag at the very start
    /// of the formula overrides the global default (Zeckendorf).
    pub default_sys: NumSys,
    /// Inline tags, one entry per tagged variable occurrence.
    pub tags: Vec<(String, NumSys)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Name(String),
    Int(i64),
    Tag(NumSys),
    Exists,
    Forall,
    Cmp(CmpOp),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Amp,
    Pipe,
    Tilde,
    Implies,
    Iff,
}

fn err(pos: usize, msg: impl Into<String>) -> LogicError {
    LogicError::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, LogicError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b',' => {
                i += 1;
                Tok::Comma
            }
            b'+' => {
                i += 1;
                Tok::Plus
            }
            b'-' => {
                i += 1;
                Tok::Minus
            }
            b'*' => {
                i += 1;
                Tok::Star
            }
            b'&' => {
                i += 1;
                Tok::Amp
            }
            b'|' => {
                i += 1;
                Tok::Pipe
            }
            b'~' => {
                i += 1;
                Tok::Tilde
            }
            b'E' => {
                i += 1;
                Tok::Exists
            }
            b'A' => {
                i += 1;
                Tok::Forall
            }
            b'<' if b.get(i + 1) == Some(&b'=') && b.get(i + 2) == Some(&b'>') => {
                i += 3;
                Tok::Iff
            }
            b'<' if b.get(i + 1) == Some(&b'=') => {
                i += 2;
                Tok::Cmp(CmpOp::Le)
            }
            b'<' => {
                i += 1;
                Tok::Cmp(CmpOp::Lt)
            }
            b'>' if b.get(i + 1) == Some(&b'=') => {
                i += 2;
                Tok::Cmp(CmpOp::Ge)
            }
            b'>' => {
                i += 1;
                Tok::Cmp(CmpOp::Gt)
            }
            b'=' if b.get(i + 1) == Some(&b'>') => {
                i += 2;
                Tok::Implies
            }
            b'=' => {
                i += 1;
                Tok::Cmp(CmpOp::Eq)
            }
            b'!' if b.get(i + 1) == Some(&b'=') => {
                i += 2;
                Tok::Cmp(CmpOp::Ne)
            }
            b'$' => {
                i += 1;
                let name = take_word(b, &mut i);
                if name.is_empty() {
                    return Err(err(start, "expected a relation name after '$'"));
                }
                Tok::Name(name)
            }
            b'?' => {
                i += 1;
                let name = take_word(b, &mut i);
                match name.as_str() {
                    "lsd_fib" => Tok::Tag(NumSys::Zeck),
                    "lsd_cg" => Tok::Tag(NumSys::Cg),
                    other => return Err(err(start, format!("unknown tag '?{other}'"))),
                }
            }
            b'0'..=b'9' => {
                let word = take_digits(b, &mut i);
                let n: i64 = word
                    .parse()
                    .map_err(|_| err(start, "integer literal out of range"))?;
                Tok::Int(n)
            }
            b'a'..=b'z' | b'_' => Tok::Ident(take_word(b, &mut i)),
            other => {
                return Err(err(start, format!("unexpected character '{}'", other as char)))
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

fn take_word(b: &[u8], i: &mut usize) -> String {
    let start = *i;
    while *i < b.len() && (b[*i].is_ascii_lowercase() || b[*i].is_ascii_digit() || b[*i] == b'_') {
        *i += 1;
    }
    String::from_utf8_lossy(&b[start..*i]).into_owned()
}

fn take_digits(b: &[u8], i: &mut usize) -> String {
    let start = *i;
    while *i < b.len() && b[*i].is_ascii_digit() {
        *i += 1;
    }
    String::from_utf8_lossy(&b[start..*i]).into_owned()
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    tags: Vec<(String, NumSys)>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<(), LogicError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(err(self.here(), format!("expected {what}")))
        }
    }

    // quantifiers take maximal scope: their body runs to the end of the
    // enclosing parenthesized formula
    fn formula(&mut self) -> Result<Formula, LogicError> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula, LogicError> {
        let mut node = self.implication()?;
        while self.peek() == Some(&Tok::Iff) {
            self.pos += 1;
            let rhs = self.implication()?;
            node = Formula::Iff(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn implication(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Tok::Implies) {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, LogicError> {
        let mut node = self.conjunction()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.pos += 1;
            let rhs = self.conjunction()?;
            node = Formula::Or(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn conjunction(&mut self) -> Result<Formula, LogicError> {
        let mut node = self.unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.pos += 1;
            let rhs = self.unary()?;
            node = Formula::And(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Some(Tok::Exists) => {
                self.pos += 1;
                let vars = self.var_list()?;
                let body = self.formula()?;
                Ok(Formula::Exists(vars, Box::new(body)))
            }
            Some(Tok::Forall) => {
                self.pos += 1;
                let vars = self.var_list()?;
                let body = self.formula()?;
                Ok(Formula::Forall(vars, Box::new(body)))
            }
            _ => self.atom(),
        }
    }

    fn var_list(&mut self) -> Result<Vec<String>, LogicError> {
        let mut vars = vec![self.var_ref()?];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            vars.push(self.var_ref()?);
        }
        Ok(vars)
    }

    fn var_ref(&mut self) -> Result<String, LogicError> {
        let mut tag = None;
        if let Some(Tok::Tag(sys)) = self.peek() {
            tag = Some(*sys);
            self.pos += 1;
        }
        match self.bump() {
            Some(Tok::Ident(name)) => {
                if let Some(sys) = tag {
                    self.tags.push((name.clone(), sys));
                }
                Ok(name)
            }
            _ => Err(err(self.here(), "expected a variable name")),
        }
    }

    fn atom(&mut self) -> Result<Formula, LogicError> {
        if let Some(Tok::Name(_)) = self.peek() {
            return self.call();
        }
        // a '(' may open either a formula or a parenthesized term of a
        // comparison, so try the comparison reading first
        let save = (self.pos, self.tags.len());
        match self.comparison() {
            Ok(f) => Ok(f),
            Err(cmp_err) => {
                (self.pos, _) = save;
                self.tags.truncate(save.1);
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let f = self.formula()?;
                    self.expect(&Tok::RParen, "')'")?;
                    Ok(f)
                } else {
                    Err(cmp_err)
                }
            }
        }
    }

    fn comparison(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.term()?;
        let op = match self.bump() {
            Some(Tok::Cmp(op)) => op,
            _ => return Err(err(self.here(), "expected a comparison operator")),
        };
        let rhs = self.term()?;
        Ok(Formula::Compare(lhs, op, rhs))
    }

    fn term(&mut self) -> Result<LinearTerm, LogicError> {
        let mut t = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    t = t + &f;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    t = t - &f;
                }
                _ => return Ok(t),
            }
        }
    }

    fn factor(&mut self) -> Result<LinearTerm, LogicError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Star) {
                    self.pos += 1;
                    let v = self.var_ref()?;
                    Ok(LinearTerm::var(&v, n))
                } else {
                    Ok(LinearTerm::constant(n))
                }
            }
            Some(Tok::Ident(_) | Tok::Tag(_)) => {
                let v = self.var_ref()?;
                Ok(LinearTerm::var(&v, 1))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(t)
            }
            _ => Err(err(self.here(), "expected a term")),
        }
    }

    fn call(&mut self) -> Result<Formula, LogicError> {
        let name = match self.bump() {
            Some(Tok::Name(n)) => n,
            _ => unreachable!(),
        };
        self.expect(&Tok::LParen, "'(' after relation name")?;
        let mut args = vec![self.term()?];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            args.push(self.term()?);
        }
        self.expect(&Tok::RParen, "')'")?;
        Ok(Formula::Call(name, args))
    }
}

pub fn parse_formula(src: &str) -> Result<ParsedFormula, LogicError> {
    let toks = lex(src)?;
    let mut default_sys = NumSys::Zeck;
    let mut start = 0;
    if let Some((_, Tok::Tag(sys))) = toks.first() {
        default_sys = *sys;
        start = 1;
    }
    let end = src.len();
    let mut parser = Parser {
        toks: toks[start..].to_vec(),
        pos: 0,
        end,
        tags: Vec::new(),
    };
    let ast = parser.formula()?;
    if parser.pos < parser.toks.len() {
        return Err(err(parser.here(), "unexpected trailing input"));
    }
    Ok(ParsedFormula {
        ast,
        default_sys,
        tags: parser.tags,
    })
}
