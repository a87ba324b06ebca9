use std::fmt::Write as _;

use super::{Alphabet, AutomataError, Dfa};

/// Line-oriented text form:
///
/// ```text
/// tracks 2 1 2
/// states 4
/// initial 0
/// accepting 0 2
/// 0 0,0 1
/// ...
/// ```
///
/// `#` starts a comment; one line per `(state, tuple)` transition, and the
/// transition function must be total.
pub fn serialize(dfa: &Dfa) -> String {
    let mut out = String::new();
    let alphabet = dfa.alphabet();
    write!(out, "tracks {}", alphabet.tracks()).unwrap();
    for t in 0..alphabet.tracks() {
        write!(out, " {}", alphabet.max_digit(t)).unwrap();
    }
    out.push('\n');
    writeln!(out, "states {}", dfa.states()).unwrap();
    writeln!(out, "initial {}", dfa.initial()).unwrap();
    out.push_str("accepting");
    for s in 0..dfa.states() {
        if dfa.is_accepting(s as u32) {
            write!(out, " {s}").unwrap();
        }
    }
    out.push('\n');
    for s in 0..dfa.states() as u32 {
        for sym in 0..alphabet.symbol_count() {
            let digits = alphabet.unpack(sym);
            let label: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
            writeln!(out, "{s} {} {}", label.join(","), dfa.next(s, sym)).unwrap();
        }
    }
    out
}

fn fmt_err(line: usize, msg: impl Into<String>) -> AutomataError {
    AutomataError::Format {
        line,
        msg: msg.into(),
    }
}

pub fn deserialize(text: &str) -> Result<Dfa, AutomataError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or_else(|| fmt_err(0, "empty input"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("tracks") {
        return Err(fmt_err(line_no, "expected 'tracks k max1 ... maxk'"));
    }
    let k: usize = parse_field(line_no, parts.next(), "track count")?;
    let mut max_digits = Vec::with_capacity(k);
    for _ in 0..k {
        max_digits.push(parse_field(line_no, parts.next(), "per-track max digit")?);
    }
    if parts.next().is_some() {
        return Err(fmt_err(line_no, "trailing tokens after track bounds"));
    }
    let alphabet = Alphabet::new(max_digits);

    let (line_no, l) = lines.next().ok_or_else(|| fmt_err(line_no, "missing 'states'"))?;
    let states: usize = parse_keyed(line_no, l, "states")?;
    let (line_no, l) = lines.next().ok_or_else(|| fmt_err(line_no, "missing 'initial'"))?;
    let initial: u32 = parse_keyed(line_no, l, "initial")?;
    if initial as usize >= states {
        return Err(fmt_err(line_no, "initial state out of range"));
    }

    let (line_no, l) = lines
        .next()
        .ok_or_else(|| fmt_err(line_no, "missing 'accepting'"))?;
    let mut parts = l.split_whitespace();
    if parts.next() != Some("accepting") {
        return Err(fmt_err(line_no, "expected 'accepting i1 i2 ...'"));
    }
    let mut accepting = vec![false; states];
    for tok in parts {
        let s: usize = tok
            .parse()
            .map_err(|_| fmt_err(line_no, format!("bad accepting state '{tok}'")))?;
        if s >= states {
            return Err(fmt_err(line_no, "accepting state out of range"));
        }
        accepting[s] = true;
    }

    let syms = alphabet.symbol_count();
    let mut delta = vec![u32::MAX; states * syms];
    let mut last_line = line_no;
    for (line_no, l) in lines {
        last_line = line_no;
        let mut parts = l.split_whitespace();
        let src: usize = parse_field(line_no, parts.next(), "source state")?;
        let tuple = parts
            .next()
            .ok_or_else(|| fmt_err(line_no, "missing digit tuple"))?;
        let dst: u32 = parse_field(line_no, parts.next(), "destination state")?;
        if parts.next().is_some() {
            return Err(fmt_err(line_no, "trailing tokens after transition"));
        }
        let digits: Vec<u8> = tuple
            .split(',')
            .map(|d| d.parse::<u8>().map_err(|_| fmt_err(line_no, format!("bad digit '{d}'"))))
            .collect::<Result<_, _>>()?;
        if digits.len() != alphabet.tracks() {
            return Err(fmt_err(line_no, "tuple arity does not match track count"));
        }
        for (t, &d) in digits.iter().enumerate() {
            if d > alphabet.max_digit(t) {
                return Err(fmt_err(line_no, format!("digit {d} exceeds track {t} bound")));
            }
        }
        if src >= states || dst as usize >= states {
            return Err(fmt_err(line_no, "transition state out of range"));
        }
        let slot = src * syms + alphabet.pack(&digits);
        if delta[slot] != u32::MAX {
            return Err(fmt_err(line_no, "duplicate transition"));
        }
        delta[slot] = dst;
    }
    if let Some(slot) = delta.iter().position(|&d| d == u32::MAX) {
        return Err(fmt_err(
            last_line,
            format!(
                "transition function not total: state {} has no edge on {:?}",
                slot / syms,
                alphabet.unpack(slot % syms)
            ),
        ));
    }
    Ok(Dfa::new(alphabet, initial, accepting, delta))
}

fn parse_field<T: std::str::FromStr>(
    line: usize,
    tok: Option<&str>,
    what: &str,
) -> Result<T, AutomataError> {
    tok.ok_or_else(|| fmt_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| fmt_err(line, format!("bad {what}")))
}

fn parse_keyed<T: std::str::FromStr>(line: usize, l: &str, key: &str) -> Result<T, AutomataError> {
    let mut parts = l.split_whitespace();
    if parts.next() != Some(key) {
        return Err(fmt_err(line, format!("expected '{key} n'")));
    }
    let v = parse_field(line, parts.next(), key)?;
    if parts.next().is_some() {
        return Err(fmt_err(line, format!("trailing tokens after '{key}'")));
    }
    Ok(v)
}

/// GraphViz export: doubled circles for accepting states, edge labels
/// `d1,...,dk`.
pub fn to_dot(dfa: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n");
    for s in 0..dfa.states() {
        let shape = if dfa.is_accepting(s as u32) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "  {s} [shape={shape}];").unwrap();
    }
    writeln!(out, "  start -> {};", dfa.initial()).unwrap();
    let alphabet = dfa.alphabet();
    for s in 0..dfa.states() as u32 {
        for sym in 0..alphabet.symbol_count() {
            let digits = alphabet.unpack(sym);
            let label: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
            writeln!(out, "  {s} -> {} [label=\"{}\"];", dfa.next(s, sym), label.join(",")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
