use super::{Alphabet, AutomataError, Dfa, Nfa};

/// Regular-expression AST over flattened tuple symbols.
///
/// Concatenation binds tighter than alternation; `*` binds tightest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegexAst {
    Epsilon,
    Symbol(usize),
    Alt(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    alphabet: &'a Alphabet,
}

fn err(pos: usize, msg: impl Into<String>) -> AutomataError {
    AutomataError::RegexSyntax {
        pos,
        msg: msg.into(),
    }
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while let Some(&c) = self.input.get(self.pos) {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                return Some(c);
            }
        }
        None
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn alternation(&mut self) -> Result<RegexAst, AutomataError> {
        let mut node = self.concatenation()?;
        while self.peek() == Some(b'|') {
            self.bump();
            let rhs = self.concatenation()?;
            node = RegexAst::Alt(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn concatenation(&mut self) -> Result<RegexAst, AutomataError> {
        let mut node: Option<RegexAst> = None;
        while let Some(c) = self.peek() {
            if c == b'|' || c == b')' {
                break;
            }
            let atom = self.repetition()?;
            node = Some(match node {
                None => atom,
                Some(prev) => RegexAst::Concat(Box::new(prev), Box::new(atom)),
            });
        }
        Ok(node.unwrap_or(RegexAst::Epsilon))
    }

    fn repetition(&mut self) -> Result<RegexAst, AutomataError> {
        let mut node = self.primary()?;
        while self.peek() == Some(b'*') {
            self.bump();
            node = RegexAst::Star(Box::new(node));
        }
        Ok(node)
    }

    fn primary(&mut self) -> Result<RegexAst, AutomataError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let node = self.alternation()?;
                if self.bump() != Some(b')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                Ok(node)
            }
            Some(b'[') => self.bracket(),
            Some(c) if c.is_ascii_digit() => {
                let pos = self.pos;
                self.bump();
                if self.alphabet.tracks() != 1 {
                    return Err(err(
                        pos,
                        "bare digit in a multi-track pattern; use a [d,...,d] tuple",
                    ));
                }
                Ok(RegexAst::Symbol(self.symbol(pos, &[c - b'0'])?))
            }
            Some(c) => Err(err(self.pos, format!("unexpected character '{}'", c as char))),
            None => Err(err(self.pos, "unexpected end of pattern")),
        }
    }

    /// `[d,...,d]` is one tuple symbol; `[d|...|d]` is an alternation of
    /// single-track symbols.
    fn bracket(&mut self) -> Result<RegexAst, AutomataError> {
        let open = self.pos;
        self.bump(); // '['
        let mut digits = Vec::new();
        let mut separator = None;
        loop {
            match self.bump() {
                Some(c) if c.is_ascii_digit() => digits.push(c - b'0'),
                Some(c) => return Err(err(self.pos - 1, format!("expected digit, got '{}'", c as char))),
                None => return Err(err(self.pos, "unterminated '['")),
            }
            match self.bump() {
                Some(b']') => break,
                Some(c @ (b',' | b'|')) => match separator {
                    None => separator = Some(c),
                    Some(s) if s == c => {}
                    Some(_) => return Err(err(self.pos - 1, "mixed ',' and '|' inside brackets")),
                },
                Some(c) => return Err(err(self.pos - 1, format!("expected ',', '|' or ']', got '{}'", c as char))),
                None => return Err(err(self.pos, "unterminated '['")),
            }
        }
        match separator {
            Some(b'|') | None if self.alphabet.tracks() == 1 => {
                let mut node: Option<RegexAst> = None;
                for d in digits {
                    let sym = RegexAst::Symbol(self.symbol(open, &[d])?);
                    node = Some(match node {
                        None => sym,
                        Some(prev) => RegexAst::Alt(Box::new(prev), Box::new(sym)),
                    });
                }
                Ok(node.unwrap())
            }
            Some(b'|') => Err(err(open, "digit class brackets need a single-track alphabet")),
            _ => Ok(RegexAst::Symbol(self.symbol(open, &digits)?)),
        }
    }

    fn symbol(&self, pos: usize, digits: &[u8]) -> Result<usize, AutomataError> {
        if digits.len() != self.alphabet.tracks() {
            return Err(err(
                pos,
                format!(
                    "tuple arity {} does not match {} track(s)",
                    digits.len(),
                    self.alphabet.tracks()
                ),
            ));
        }
        for (t, &d) in digits.iter().enumerate() {
            if d > self.alphabet.max_digit(t) {
                return Err(err(pos, format!("digit {d} exceeds track {t} bound")));
            }
        }
        Ok(self.alphabet.pack(digits))
    }
}

pub fn regex_parse(pattern: &str, alphabet: &Alphabet) -> Result<RegexAst, AutomataError> {
    let mut parser = Parser {
        input: pattern.as_bytes(),
        pos: 0,
        alphabet,
    };
    let ast = parser.alternation()?;
    if let Some(c) = parser.peek() {
        return Err(err(parser.pos, format!("unexpected character '{}'", c as char)));
    }
    Ok(ast)
}

/// Thompson construction, subset construction, then minimization.
pub fn regex_to_dfa(ast: &RegexAst, alphabet: &Alphabet) -> Result<Dfa, AutomataError> {
    let mut nfa = Nfa::new(alphabet.clone(), 2, 0);
    let accept = 1;
    build(ast, &mut nfa, 0, accept);
    nfa.accepting[accept] = true;
    Ok(nfa.determinize()?.minimize())
}

fn fresh(nfa: &mut Nfa) -> usize {
    nfa.states += 1;
    nfa.accepting.push(false);
    nfa.transitions.push(Default::default());
    nfa.epsilon.push(Vec::new());
    nfa.states - 1
}

fn build(ast: &RegexAst, nfa: &mut Nfa, from: usize, to: usize) {
    match ast {
        RegexAst::Epsilon => nfa.add_epsilon(from, to),
        RegexAst::Symbol(sym) => nfa.add_edge(from, *sym, to),
        RegexAst::Alt(a, b) => {
            build(a, nfa, from, to);
            build(b, nfa, from, to);
        }
        RegexAst::Concat(a, b) => {
            let mid = fresh(nfa);
            build(a, nfa, from, mid);
            build(b, nfa, mid, to);
        }
        RegexAst::Star(a) => {
            let hub = fresh(nfa);
            nfa.add_epsilon(from, hub);
            nfa.add_epsilon(hub, to);
            build(a, nfa, hub, hub);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeck_alphabet() -> Alphabet {
        Alphabet::new(vec![1])
    }

    #[test]
    fn parses_fibeven_pattern() {
        let a = zeck_alphabet();
        let ast = regex_parse("(00)*1(0|1)*", &a).unwrap();
        let expected = RegexAst::Concat(
            Box::new(RegexAst::Concat(
                Box::new(RegexAst::Star(Box::new(RegexAst::Concat(
                    Box::new(RegexAst::Symbol(0)),
                    Box::new(RegexAst::Symbol(0)),
                )))),
                Box::new(RegexAst::Symbol(1)),
            )),
            Box::new(RegexAst::Star(Box::new(RegexAst::Alt(
                Box::new(RegexAst::Symbol(0)),
                Box::new(RegexAst::Symbol(1)),
            )))),
        );
        assert_eq!(ast, expected);
    }

    #[test]
    fn empty_pattern_is_epsilon() {
        let a = zeck_alphabet();
        assert_eq!(regex_parse("", &a).unwrap(), RegexAst::Epsilon);
        let dfa = regex_to_dfa(&RegexAst::Epsilon, &a).unwrap();
        assert!(dfa.accepts_symbols(&[]));
        assert!(!dfa.accepts_symbols(&[0]));
    }

    #[test]
    fn tuple_symbols() {
        let a = Alphabet::new(vec![1, 1]);
        let ast = regex_parse("[1,0][0,1]", &a).unwrap();
        let dfa = regex_to_dfa(&ast, &a).unwrap();
        assert!(dfa.accepts_tuples(&[vec![1, 0], vec![0, 1]]));
        assert!(!dfa.accepts_tuples(&[vec![1, 0], vec![1, 0]]));
    }

    #[test]
    fn digit_class_brackets() {
        let a = Alphabet::new(vec![2]);
        let ast = regex_parse("[1|2][0|1|2]*", &a).unwrap();
        let dfa = regex_to_dfa(&ast, &a).unwrap();
        assert!(dfa.accepts_symbols(&[2, 0, 1]));
        assert!(!dfa.accepts_symbols(&[0, 1]));
    }

    #[test]
    fn fibeven_dfa_accepts_even_least_index() {
        let a = zeck_alphabet();
        let ast = regex_parse("(00)*1(0|1)*", &a).unwrap();
        let dfa = regex_to_dfa(&ast, &a).unwrap();
        assert!(dfa.accepts_symbols(&[0, 0, 1])); // 3 = F_4
        assert!(!dfa.accepts_symbols(&[0, 1])); // 2 = F_3
    }

    #[test]
    fn error_positions() {
        let a = zeck_alphabet();
        assert!(matches!(
            regex_parse("(0|1", &a),
            Err(AutomataError::RegexSyntax { .. })
        ));
        let b = Alphabet::new(vec![1, 1]);
        assert!(matches!(
            regex_parse("[1,0,1]", &b),
            Err(AutomataError::RegexSyntax { .. })
        ));
        assert!(matches!(
            regex_parse("2", &a),
            Err(AutomataError::RegexSyntax { .. })
        ));
    }
}
