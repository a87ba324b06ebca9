use std::collections::{HashMap, HashSet};

use crate::automata::{Alphabet, BoolOp, Dfa, NumSys};
use crate::relations::{linear_eq, validity, LinearRelation};

use super::syntax::{parse_formula, CmpOp, Formula, LinearTerm};
use super::{Environment, LogicError};

/// Automaton for a formula with free variables. Tracks are the free
/// variables in ascending name order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaAutomaton {
    pub dfa: Dfa,
    pub vars: Vec<String>,
    pub systems: Vec<NumSys>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Compiled {
    Rel(FormulaAutomaton),
    Truth(bool),
}

/// Compile a formula against an environment of named relations.
pub fn compile_formula(src: &str, env: &Environment) -> Result<Compiled, LogicError> {
    let parsed = parse_formula(src)?;
    check_bindings(&parsed.ast, &mut HashSet::new())?;
    let systems = assign_systems(&parsed.ast, env, &parsed.tags, parsed.default_sys)?;
    let mut ctx = Ctx {
        env,
        systems,
        fresh: 0,
    };
    match ctx.compile(&parsed.ast)? {
        Inner::Auto(rel) => Ok(Compiled::Rel(rel)),
        Inner::Truth(b) => Ok(Compiled::Truth(b)),
    }
}

/// Compile a sentence; formulas with free variables are rejected.
pub fn eval_closed(src: &str, env: &Environment) -> Result<bool, LogicError> {
    match compile_formula(src, env)? {
        Compiled::Truth(b) => Ok(b),
        Compiled::Rel(rel) => Err(LogicError::NotClosed(rel.vars.join(", "))),
    }
}

/// A variable name may be bound by at most one quantifier.
fn check_bindings(f: &Formula, bound: &mut HashSet<String>) -> Result<(), LogicError> {
    match f {
        Formula::Compare(..) | Formula::Call(..) => Ok(()),
        Formula::Not(a) => check_bindings(a, bound),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            check_bindings(a, bound)?;
            check_bindings(b, bound)
        }
        Formula::Exists(vars, body) | Formula::Forall(vars, body) => {
            for v in vars {
                if !bound.insert(v.clone()) {
                    return Err(LogicError::Rebound(v.clone()));
                }
            }
            check_bindings(body, bound)
        }
    }
}

/// Settle every variable's numeration system: inline tags win, plain
/// variables passed to a named relation adopt that track's system, and
/// everything else uses the default.
fn assign_systems(
    f: &Formula,
    env: &Environment,
    tags: &[(String, NumSys)],
    default: NumSys,
) -> Result<HashMap<String, NumSys>, LogicError> {
    let mut fixed: HashMap<String, NumSys> = HashMap::new();
    for (name, sys) in tags {
        match fixed.insert(name.clone(), *sys) {
            Some(prev) if prev != *sys => return Err(LogicError::SystemClash(name.clone())),
            _ => {}
        }
    }
    let mut all: HashSet<String> = HashSet::new();
    let mut from_calls: Vec<(String, NumSys)> = Vec::new();
    collect(f, env, &mut all, &mut from_calls)?;
    for (name, sys) in from_calls {
        match fixed.get(&name) {
            Some(&prev) if prev != sys => return Err(LogicError::SystemClash(name)),
            Some(_) => {}
            None => {
                fixed.insert(name, sys);
            }
        }
    }
    for name in all {
        fixed.entry(name).or_insert(default);
    }
    Ok(fixed)
}

fn collect(
    f: &Formula,
    env: &Environment,
    all: &mut HashSet<String>,
    from_calls: &mut Vec<(String, NumSys)>,
) -> Result<(), LogicError> {
    match f {
        Formula::Compare(a, _, b) => {
            all.extend(a.coeffs.keys().cloned());
            all.extend(b.coeffs.keys().cloned());
            Ok(())
        }
        Formula::Call(name, args) => {
            let named = env
                .get(name)
                .ok_or_else(|| LogicError::UnknownAutomaton(name.clone()))?;
            if args.len() != named.systems.len() {
                return Err(LogicError::Arity {
                    name: name.clone(),
                    expected: named.systems.len(),
                    got: args.len(),
                });
            }
            for (arg, &sys) in args.iter().zip(&named.systems) {
                all.extend(arg.coeffs.keys().cloned());
                if let Some(v) = arg.as_plain_var() {
                    from_calls.push((v.to_string(), sys));
                }
            }
            Ok(())
        }
        Formula::Not(a) => collect(a, env, all, from_calls),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            collect(a, env, all, from_calls)?;
            collect(b, env, all, from_calls)
        }
        Formula::Exists(vars, body) | Formula::Forall(vars, body) => {
            all.extend(vars.iter().cloned());
            collect(body, env, all, from_calls)
        }
    }
}

#[derive(Debug, Clone)]
enum Inner {
    Auto(FormulaAutomaton),
    Truth(bool),
}

struct Ctx<'a> {
    env: &'a Environment,
    systems: HashMap<String, NumSys>,
    fresh: usize,
}

impl Ctx<'_> {
    fn sys_of(&self, var: &str) -> NumSys {
        self.systems.get(var).copied().unwrap_or(NumSys::Zeck)
    }

    fn fresh_var(&mut self, sys: NumSys) -> String {
        let name = format!("{}#{}", "tmp", self.fresh);
        self.fresh += 1;
        self.systems.insert(name.clone(), sys);
        name
    }

    fn compile(&mut self, f: &Formula) -> Result<Inner, LogicError> {
        match f {
            Formula::Compare(a, op, b) => self.compare(a, *op, b),
            Formula::Call(name, args) => self.apply(name, args),
            Formula::Not(a) => {
                let inner = self.compile(a)?;
                self.negate(inner)
            }
            Formula::And(a, b) => {
                let a = self.compile(a)?;
                let b = self.compile(b)?;
                self.combine(a, b, BoolOp::And)
            }
            Formula::Or(a, b) => {
                let a = self.compile(a)?;
                let b = self.compile(b)?;
                self.combine(a, b, BoolOp::Or)
            }
            Formula::Implies(a, b) => {
                let a = self.compile(a)?;
                let b = self.compile(b)?;
                let na = self.negate(a)?;
                self.combine(na, b, BoolOp::Or)
            }
            Formula::Iff(a, b) => {
                let ca = self.compile(a)?;
                let cb = self.compile(b)?;
                let fwd = {
                    let na = self.negate(ca.clone())?;
                    self.combine(na, cb.clone(), BoolOp::Or)?
                };
                let bwd = {
                    let nb = self.negate(cb)?;
                    self.combine(nb, ca, BoolOp::Or)?
                };
                self.combine(fwd, bwd, BoolOp::And)
            }
            Formula::Exists(vars, body) => {
                let mut inner = self.compile(body)?;
                for v in vars {
                    inner = self.project(inner, v)?;
                }
                Ok(inner)
            }
            Formula::Forall(vars, body) => {
                let inner = self.compile(body)?;
                let mut neg = self.negate(inner)?;
                for v in vars {
                    neg = self.project(neg, v)?;
                }
                self.negate(neg)
            }
        }
    }

    /// Relation `sum coeffs*x = -constant` over the term's variables in
    /// ascending name order, plus optionally a slack variable on the last
    /// track.
    fn linear(&mut self, diff: &LinearTerm, slack: Option<i64>) -> Result<Inner, LogicError> {
        let mut vars: Vec<String> = diff.coeffs.keys().cloned().collect();
        let mut coeffs: Vec<i64> = vars.iter().map(|v| diff.coeffs[v]).collect();
        let mut systems: Vec<NumSys> = vars.iter().map(|v| self.sys_of(v)).collect();
        let mut constant = -diff.constant;
        let with_slack = slack.is_some();
        if let Some(k) = slack {
            // diff + d + k = 0 for a fresh d
            vars.push(self.fresh_var(NumSys::Zeck));
            coeffs.push(1);
            systems.push(NumSys::Zeck);
            constant -= k;
        }
        let dfa = linear_eq(&LinearRelation::new(coeffs, constant, systems.clone()))?;
        let rel = FormulaAutomaton {
            dfa,
            vars: vars.clone(),
            systems,
        };
        if with_slack {
            self.project(Inner::Auto(rel), vars.last().unwrap())
        } else {
            Ok(Inner::Auto(rel))
        }
    }

    fn compare(&mut self, a: &LinearTerm, op: CmpOp, b: &LinearTerm) -> Result<Inner, LogicError> {
        let diff = a.clone() - b;
        if diff.coeffs.is_empty() {
            let d = diff.constant;
            let truth = match op {
                CmpOp::Eq => d == 0,
                CmpOp::Ne => d != 0,
                CmpOp::Lt => d < 0,
                CmpOp::Le => d <= 0,
                CmpOp::Gt => d > 0,
                CmpOp::Ge => d >= 0,
            };
            return Ok(Inner::Truth(truth));
        }
        match op {
            CmpOp::Eq => self.linear(&diff, None),
            CmpOp::Ne => {
                let eq = self.linear(&diff, None)?;
                self.negate(eq)
            }
            // a < b iff a + d + 1 = b for some natural d
            CmpOp::Lt => self.linear(&diff, Some(1)),
            CmpOp::Le => self.linear(&diff, Some(0)),
            CmpOp::Gt => {
                let flipped = b.clone() - a;
                self.linear(&flipped, Some(1))
            }
            CmpOp::Ge => {
                let flipped = b.clone() - a;
                self.linear(&flipped, Some(0))
            }
        }
    }

    fn apply(&mut self, name: &str, args: &[LinearTerm]) -> Result<Inner, LogicError> {
        let named = self
            .env
            .get(name)
            .ok_or_else(|| LogicError::UnknownAutomaton(name.to_string()))?
            .clone();
        // bind each argument position to a variable, adding defining
        // equations for compound terms
        let mut arg_vars: Vec<String> = Vec::with_capacity(args.len());
        let mut equations: Vec<(String, LinearTerm)> = Vec::new();
        for (arg, &sys) in args.iter().zip(&named.systems) {
            if let Some(v) = arg.as_plain_var() {
                arg_vars.push(v.to_string());
            } else {
                let w = self.fresh_var(sys);
                equations.push((w.clone(), arg.clone()));
                arg_vars.push(w);
            }
        }
        let mut vars: Vec<String> = arg_vars.clone();
        vars.sort_unstable();
        vars.dedup();
        let systems: Vec<NumSys> = vars.iter().map(|v| self.sys_of(v)).collect();
        let alphabet = Alphabet::new(systems.iter().map(|s| s.max_digit()).collect());
        let track_map: Vec<usize> = arg_vars
            .iter()
            .map(|v| vars.iter().position(|u| u == v).unwrap())
            .collect();
        let mut rel = Inner::Auto(FormulaAutomaton {
            dfa: named.dfa.lift(alphabet, &track_map),
            vars,
            systems,
        });
        for (w, term) in &equations {
            let diff = LinearTerm::var(w, 1) - term;
            let eq = self.linear(&diff, None)?;
            rel = self.combine(rel, eq, BoolOp::And)?;
            rel = self.project(rel, w)?;
        }
        Ok(rel)
    }

    fn negate(&mut self, inner: Inner) -> Result<Inner, LogicError> {
        match inner {
            Inner::Truth(b) => Ok(Inner::Truth(!b)),
            Inner::Auto(rel) => {
                // complement within the universe of padded canonical words
                let mut dfa = rel.dfa.complement();
                for (t, &sys) in rel.systems.iter().enumerate() {
                    let v = validity(sys).lift(dfa.alphabet().clone(), &[t]);
                    dfa = dfa.product(&v, BoolOp::And)?;
                }
                Ok(Inner::Auto(FormulaAutomaton {
                    dfa: dfa.pad_close().minimize(),
                    vars: rel.vars,
                    systems: rel.systems,
                }))
            }
        }
    }

    fn combine(&mut self, a: Inner, b: Inner, op: BoolOp) -> Result<Inner, LogicError> {
        match (a, b, op) {
            (Inner::Truth(x), Inner::Truth(y), BoolOp::And) => Ok(Inner::Truth(x && y)),
            (Inner::Truth(x), Inner::Truth(y), BoolOp::Or) => Ok(Inner::Truth(x || y)),
            (Inner::Truth(true), rel, BoolOp::And) | (Inner::Truth(false), rel, BoolOp::Or) => {
                Ok(rel)
            }
            (rel, Inner::Truth(true), BoolOp::And) | (rel, Inner::Truth(false), BoolOp::Or) => {
                Ok(rel)
            }
            (Inner::Truth(false), _, BoolOp::And) | (_, Inner::Truth(false), BoolOp::And) => {
                Ok(Inner::Truth(false))
            }
            (Inner::Truth(true), _, BoolOp::Or) | (_, Inner::Truth(true), BoolOp::Or) => {
                Ok(Inner::Truth(true))
            }
            (Inner::Auto(a), Inner::Auto(b), op) => {
                let (da, db, vars, systems) = align(&a, &b)?;
                let dfa = da.product(&db, op)?.minimize();
                Ok(Inner::Auto(FormulaAutomaton { dfa, vars, systems }))
            }
        }
    }

    fn project(&mut self, inner: Inner, var: &str) -> Result<Inner, LogicError> {
        match inner {
            Inner::Truth(b) => Ok(Inner::Truth(b)),
            Inner::Auto(mut rel) => {
                let Some(idx) = rel.vars.iter().position(|v| v == var) else {
                    // quantifying a variable the body never uses is a no-op
                    return Ok(Inner::Auto(rel));
                };
                if rel.vars.len() == 1 {
                    return Ok(Inner::Truth(!rel.dfa.is_empty()));
                }
                rel.dfa = rel.dfa.project(idx)?;
                rel.vars.remove(idx);
                rel.systems.remove(idx);
                Ok(Inner::Auto(rel))
            }
        }
    }
}

/// Lift two relations onto the union of their variables.
fn align(
    a: &FormulaAutomaton,
    b: &FormulaAutomaton,
) -> Result<(Dfa, Dfa, Vec<String>, Vec<NumSys>), LogicError> {
    let mut vars: Vec<String> = a.vars.iter().chain(&b.vars).cloned().collect();
    vars.sort_unstable();
    vars.dedup();
    let mut systems: Vec<NumSys> = Vec::with_capacity(vars.len());
    for v in &vars {
        let sa = a.vars.iter().position(|u| u == v).map(|i| a.systems[i]);
        let sb = b.vars.iter().position(|u| u == v).map(|i| b.systems[i]);
        let sys = match (sa, sb) {
            (Some(x), Some(y)) if x != y => return Err(LogicError::SystemClash(v.clone())),
            (Some(x), _) | (_, Some(x)) => x,
            (None, None) => unreachable!(),
        };
        systems.push(sys);
    }
    let alphabet = Alphabet::new(systems.iter().map(|s| s.max_digit()).collect());
    let map_a: Vec<usize> = a
        .vars
        .iter()
        .map(|v| vars.iter().position(|u| u == v).unwrap())
        .collect();
    let map_b: Vec<usize> = b
        .vars
        .iter()
        .map(|v| vars.iter().position(|u| u == v).unwrap())
        .collect();
    Ok((
        a.dfa.lift(alphabet.clone(), &map_a),
        b.dfa.lift(alphabet, &map_b),
        vars,
        systems,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::{floor_phi, parity_class, Parity};
    use crate::relations::builtin;

    fn env() -> Environment {
        let mut e = Environment::new();
        for name in ["fibshift", "fibeven", "fibodd", "phinlsd", "fibcg", "sc"] {
            e.define(name, builtin(name).unwrap());
        }
        e
    }

    fn rel(src: &str) -> FormulaAutomaton {
        match compile_formula(src, &env()).unwrap() {
            Compiled::Rel(r) => r,
            Compiled::Truth(b) => panic!("expected relation, got {b}"),
        }
    }

    #[test]
    fn closed_truths() {
        let e = env();
        assert_eq!(eval_closed("1+1 = 2", &e).unwrap(), true);
        assert_eq!(eval_closed("Ex x = 5", &e).unwrap(), true);
        assert_eq!(eval_closed("Ax x >= 0", &e).unwrap(), true);
        assert_eq!(eval_closed("Ax x >= 1", &e).unwrap(), false);
        assert_eq!(eval_closed("Ex x+3 = 2", &e).unwrap(), false);
        assert_eq!(eval_closed("Ax Ey y = x+1", &e).unwrap(), true);
        assert_eq!(eval_closed("Ex Ay y <= x", &e).unwrap(), false);
    }

    #[test]
    fn inequalities_match_arithmetic() {
        let r = rel("x < y");
        for x in 0..40u64 {
            for y in 0..40u64 {
                assert_eq!(r.dfa.member_int(&[x, y], &r.systems), x < y);
            }
        }
        let r = rel("2*x >= y+3");
        for x in 0..60u64 {
            for y in 0..60u64 {
                assert_eq!(r.dfa.member_int(&[x, y], &r.systems), 2 * x >= y + 3);
            }
        }
    }

    #[test]
    fn negation_and_implication() {
        let r = rel("~(x = y)");
        for x in 0..30u64 {
            for y in 0..30u64 {
                assert_eq!(r.dfa.member_int(&[x, y], &r.systems), x != y);
            }
        }
        let e = env();
        assert_eq!(
            eval_closed("Ax,y x < y => Ez x+z = y", &e).unwrap(),
            true
        );
    }

    #[test]
    fn quantifiers_project_tracks() {
        let r = rel("Ey $fibshift(x, y) & $fibeven(y)");
        assert_eq!(r.vars, vec!["x"]);
        // shifting moves the least nonzero position up by one
        for n in 1..500u64 {
            let expected = parity_class(crate::numeration::shift_f(n)).unwrap() == Parity::Even;
            assert_eq!(r.dfa.member_int(&[n], &r.systems), expected);
        }
    }

    #[test]
    fn call_with_compound_argument() {
        let r = rel("Ey $phinlsd(x-1, y) & z = y+1");
        assert_eq!(r.vars, vec!["x", "z"]);
        for x in 1..300u64 {
            let z = floor_phi(x - 1) + 1;
            assert!(r.dfa.member_int(&[x, z], &r.systems));
            assert!(!r.dfa.member_int(&[x, z + 1], &r.systems));
        }
    }

    #[test]
    fn mixed_systems_align() {
        let r = rel("$fibcg(x, y)");
        assert_eq!(r.systems, vec![NumSys::Zeck, NumSys::Cg]);
        for n in 0..200u64 {
            assert!(r.dfa.member_int(&[n, n], &r.systems));
        }
    }

    #[test]
    fn partition_sentences() {
        let e = env();
        // every positive integer has exactly one parity class
        assert_eq!(
            eval_closed("Ax x >= 1 => ($fibeven(x) | $fibodd(x))", &e).unwrap(),
            true
        );
        assert_eq!(
            eval_closed("Ex $fibeven(x) & $fibodd(x)", &e).unwrap(),
            false
        );
    }

    #[test]
    fn error_cases() {
        let e = env();
        assert!(matches!(
            compile_formula("$missing(x)", &e),
            Err(LogicError::UnknownAutomaton(_))
        ));
        assert!(matches!(
            compile_formula("$fibshift(x)", &e),
            Err(LogicError::Arity { .. })
        ));
        assert!(matches!(
            compile_formula("Ex Ex x = 1", &e),
            Err(LogicError::Rebound(_))
        ));
        // a tag at the start sets the default, so use an inline tag here
        assert!(matches!(
            compile_formula("y = ?lsd_cg x & $fibeven(x)", &e),
            Err(LogicError::SystemClash(_))
        ));
        assert!(matches!(
            eval_closed("x = 1", &e),
            Err(LogicError::NotClosed(_))
        ));
    }
}
