use std::sync::Arc;

use crate::automata::{regex_parse, regex_to_dfa, Alphabet, NumSys};
use crate::relations::NamedAutomaton;

use super::{compile_formula, eval_closed, Compiled, Environment, LogicError};

/// Outcome of one session line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineOutcome {
    /// Blank line or comment.
    Nothing,
    /// `def name "formula"` stored a relation.
    Defined(String),
    /// `reg name system... "pattern"` stored a regex-built relation.
    Registered(String),
    /// `eval name "sentence"` produced a truth value.
    Evaluated { name: String, truth: bool },
}

/// Line-oriented driver: `def` and `reg` extend the environment, `eval`
/// decides sentences. `#` starts a comment; a trailing `:` or `;` on a
/// line is ignored.
pub struct Session {
    env: Environment,
}

impl Session {
    pub fn new(env: Environment) -> Self {
        Session { env }
    }

    pub fn env(&self) -> &Environment {
        &self.env
    }

    pub fn run_line(&mut self, line: &str) -> Result<LineOutcome, LogicError> {
        let line = line.split('#').next().unwrap_or("").trim();
        let line = line
            .strip_suffix(':')
            .or_else(|| line.strip_suffix(';'))
            .unwrap_or(line)
            .trim();
        if line.is_empty() {
            return Ok(LineOutcome::Nothing);
        }
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| LogicError::BadLine(line.to_string()))?;
        match keyword {
            "def" => {
                let (name, body) = split_name(rest)?;
                match compile_formula(&body, &self.env)? {
                    Compiled::Rel(rel) => {
                        self.env.define(
                            &name,
                            Arc::new(NamedAutomaton {
                                dfa: rel.dfa,
                                systems: rel.systems,
                            }),
                        );
                        Ok(LineOutcome::Defined(name))
                    }
                    Compiled::Truth(_) => Err(LogicError::NotRelation),
                }
            }
            "reg" => {
                let (name, body) = split_name(rest)?;
                let (systems, pattern) = split_systems(&body)?;
                let alphabet = Alphabet::new(systems.iter().map(|s| s.max_digit()).collect());
                let ast = regex_parse(&pattern, &alphabet)?;
                let dfa = regex_to_dfa(&ast, &alphabet)?.pad_close().minimize();
                self.env
                    .define(&name, Arc::new(NamedAutomaton { dfa, systems }));
                Ok(LineOutcome::Registered(name))
            }
            "eval" => {
                let (name, body) = split_name(rest)?;
                let truth = eval_closed(&body, &self.env)?;
                Ok(LineOutcome::Evaluated { name, truth })
            }
            other => Err(LogicError::BadLine(format!("unknown command '{other}'"))),
        }
    }

    /// Run a whole script, collecting the `eval` verdicts in order.
    pub fn run_script(&mut self, script: &str) -> Result<Vec<(String, bool)>, LogicError> {
        let mut out = Vec::new();
        for line in script.lines() {
            if let LineOutcome::Evaluated { name, truth } = self.run_line(line)? {
                out.push((name, truth));
            }
        }
        Ok(out)
    }
}

/// Split `name rest-of-line`, unquoting the remainder if it is quoted.
fn split_name(rest: &str) -> Result<(String, String), LogicError> {
    let rest = rest.trim();
    let (name, body) = rest
        .split_once(char::is_whitespace)
        .ok_or_else(|| LogicError::BadLine(rest.to_string()))?;
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(LogicError::BadLine(format!("bad name '{name}'")));
    }
    Ok((name.to_string(), unquote(body)))
}

fn unquote(s: &str) -> String {
    let s = s.trim();
    s.strip_prefix('"')
        .and_then(|t| t.strip_suffix('"'))
        .unwrap_or(s)
        .to_string()
}

/// Leading `lsd_fib` / `lsd_cg` tokens name the track systems; the rest of
/// the line is the pattern.
fn split_systems(body: &str) -> Result<(Vec<NumSys>, String), LogicError> {
    let mut systems = Vec::new();
    let mut rest = body.trim();
    loop {
        let (word, tail) = match rest.split_once(char::is_whitespace) {
            Some(pair) => pair,
            None => (rest, ""),
        };
        match word {
            "lsd_fib" => systems.push(NumSys::Zeck),
            "lsd_cg" => systems.push(NumSys::Cg),
            _ => break,
        }
        rest = tail.trim();
    }
    if systems.is_empty() {
        return Err(LogicError::BadLine(
            "reg needs at least one system (lsd_fib or lsd_cg)".to_string(),
        ));
    }
    if rest.is_empty() {
        return Err(LogicError::BadLine("reg needs a pattern".to_string()));
    }
    Ok((systems, rest.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::builtin_env;

    #[test]
    fn define_then_eval() {
        let mut s = Session::new(builtin_env().unwrap());
        assert_eq!(
            s.run_line("def double \"y = 2*x\"").unwrap(),
            LineOutcome::Defined("double".to_string())
        );
        assert_eq!(
            s.run_line("eval check \"Ax Ey $double(x, y)\":").unwrap(),
            LineOutcome::Evaluated {
                name: "check".to_string(),
                truth: true
            }
        );
        assert_eq!(
            s.run_line("eval bad \"Ax Ex2 $double(x2, x)\"").unwrap(),
            LineOutcome::Evaluated {
                name: "bad".to_string(),
                truth: false
            }
        );
    }

    #[test]
    fn reg_builds_from_patterns() {
        let mut s = Session::new(Environment::new());
        s.run_line("reg ones lsd_fib 1(0|1)*").unwrap();
        let auto = s.env().get("ones").unwrap();
        assert!(auto.dfa.member_int(&[1], &auto.systems));
        assert!(!auto.dfa.member_int(&[2], &auto.systems));
    }

    #[test]
    fn comments_and_blanks() {
        let mut s = Session::new(Environment::new());
        assert_eq!(s.run_line("  # nothing here").unwrap(), LineOutcome::Nothing);
        assert_eq!(s.run_line("").unwrap(), LineOutcome::Nothing);
    }

    #[test]
    fn script_collects_verdicts() {
        let mut s = Session::new(builtin_env().unwrap());
        let script = "\
# parity of the least Fibonacci index
def shifted \"Ey $fibshift(x, y) & $fibodd(y)\"
eval a \"Ax x >= 1 => ($fibeven(x) <=> $shifted(x))\"
eval b \"Ex $fibeven(x) & $shifted(x) & x < 1\"
";
        let out = s.run_script(script).unwrap();
        assert_eq!(
            out,
            vec![("a".to_string(), true), ("b".to_string(), false)]
        );
    }

    #[test]
    fn bad_lines() {
        let mut s = Session::new(Environment::new());
        assert!(matches!(s.run_line("frobnicate x"), Err(LogicError::BadLine(_))));
        assert!(matches!(s.run_line("def onlyname"), Err(LogicError::BadLine(_))));
        assert!(matches!(
            s.run_line("reg p nosystem 1*"),
            Err(LogicError::BadLine(_))
        ));
    }
}
