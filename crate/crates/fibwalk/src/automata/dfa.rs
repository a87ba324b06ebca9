use std::collections::HashMap;

use super::{check_budget, Alphabet, AutomataError, NumSys};
use crate::numeration::{cg_encode, zeck_encode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
}

/// Total deterministic multi-track automaton. `delta` is a dense
/// `states × symbol_count` table; every state has a successor on every
/// flattened tuple symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: u32,
    accepting: Vec<bool>,
    delta: Vec<u32>,
}

impl Dfa {
    pub fn new(alphabet: Alphabet, initial: u32, accepting: Vec<bool>, delta: Vec<u32>) -> Self {
        let n = accepting.len();
        assert_eq!(delta.len(), n * alphabet.symbol_count());
        assert!((initial as usize) < n);
        assert!(delta.iter().all(|&d| (d as usize) < n));
        Dfa {
            alphabet,
            initial,
            accepting,
            delta,
        }
    }

    /// Single-state automaton accepting everything or nothing.
    pub fn constant(alphabet: Alphabet, accept: bool) -> Self {
        let syms = alphabet.symbol_count();
        Dfa {
            alphabet,
            initial: 0,
            accepting: vec![accept],
            delta: vec![0; syms],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn is_accepting(&self, state: u32) -> bool {
        self.accepting[state as usize]
    }

    pub fn next(&self, state: u32, sym: usize) -> u32 {
        self.delta[state as usize * self.alphabet.symbol_count() + sym]
    }

    /// Run the automaton on a word of flattened symbols.
    pub fn accepts_symbols(&self, word: &[usize]) -> bool {
        let mut s = self.initial;
        for &sym in word {
            s = self.next(s, sym);
        }
        self.accepting[s as usize]
    }

    /// Run on a word of digit tuples (one row per position).
    pub fn accepts_tuples(&self, word: &[Vec<u8>]) -> bool {
        let syms: Vec<usize> = word.iter().map(|t| self.alphabet.pack(t)).collect();
        self.accepts_symbols(&syms)
    }

    /// Encode each value in its numeration system, pad all words with
    /// trailing zeros to a common length and run the automaton.
    pub fn member_int(&self, values: &[u64], systems: &[NumSys]) -> bool {
        assert_eq!(values.len(), self.alphabet.tracks());
        assert_eq!(systems.len(), self.alphabet.tracks());
        let words: Vec<Vec<u8>> = values
            .iter()
            .zip(systems)
            .map(|(&v, &sys)| encode_digits(v, sys))
            .collect();
        let len = words.iter().map(Vec::len).max().unwrap_or(0);
        let mut s = self.initial;
        for i in 0..len {
            let digits: Vec<u8> = words.iter().map(|w| w.get(i).copied().unwrap_or(0)).collect();
            s = self.next(s, self.alphabet.pack(&digits));
        }
        self.accepting[s as usize]
    }

    /// Ascending integers accepted on a single-track automaton, scanning
    /// from 0 upward. Gives up after `scan_cap` consecutive candidates.
    pub fn enumerate(&self, system: NumSys, limit: usize) -> Result<Vec<u64>, AutomataError> {
        if self.alphabet.tracks() != 1 {
            return Err(AutomataError::SingleTrack);
        }
        let mut out = Vec::with_capacity(limit);
        if limit == 0 || self.is_empty() {
            return Ok(out);
        }
        const SCAN_CAP: u64 = 10_000_000;
        let mut n = 0u64;
        while out.len() < limit && n < SCAN_CAP {
            if self.member_int(&[n], &[system]) {
                out.push(n);
            }
            n += 1;
        }
        Ok(out)
    }

    /// Language intersection or union of two automata over one alphabet.
    pub fn product(&self, other: &Dfa, op: BoolOp) -> Result<Dfa, AutomataError> {
        if self.alphabet != other.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        let syms = self.alphabet.symbol_count();
        let mut map: HashMap<(u32, u32), u32> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        map.insert((self.initial, other.initial), 0);
        let mut delta: Vec<u32> = Vec::new();
        let mut accepting: Vec<bool> = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (a, b) = pairs[i];
            accepting.push(match op {
                BoolOp::And => self.accepting[a as usize] && other.accepting[b as usize],
                BoolOp::Or => self.accepting[a as usize] || other.accepting[b as usize],
            });
            for sym in 0..syms {
                let next = (self.next(a, sym), other.next(b, sym));
                let id = *map.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    (pairs.len() - 1) as u32
                });
                delta.push(id);
            }
            check_budget(pairs.len())?;
            i += 1;
        }
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            accepting,
            delta,
        })
    }

    /// Language complement. Sound because the transition function is total.
    pub fn complement(&self) -> Dfa {
        let mut out = self.clone();
        for a in &mut out.accepting {
            *a = !*a;
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        let mut seen = vec![false; self.states()];
        let mut stack = vec![self.initial];
        seen[self.initial as usize] = true;
        while let Some(s) = stack.pop() {
            if self.accepting[s as usize] {
                return false;
            }
            for sym in 0..self.alphabet.symbol_count() {
                let t = self.next(s, sym);
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    stack.push(t);
                }
            }
        }
        true
    }

    /// Close acceptance under trailing all-zero padding: a state becomes
    /// accepting when some all-zero path from it reaches an accepting state.
    pub fn pad_close(&self) -> Dfa {
        let mut out = self.clone();
        loop {
            let mut changed = false;
            for s in 0..out.states() {
                if !out.accepting[s] && out.accepting[out.next(s as u32, 0) as usize] {
                    out.accepting[s] = true;
                    changed = true;
                }
            }
            if !changed {
                return out;
            }
        }
    }

    /// Moore partition refinement over the reachable part, renumbered into
    /// canonical BFS order. Two minimal automata for the same language are
    /// structurally equal after this.
    pub fn minimize(&self) -> Dfa {
        let syms = self.alphabet.symbol_count();
        // reachable trim
        let mut order: Vec<u32> = vec![self.initial];
        let mut index: HashMap<u32, usize> = HashMap::from([(self.initial, 0)]);
        let mut i = 0;
        while i < order.len() {
            let s = order[i];
            for sym in 0..syms {
                let t = self.next(s, sym);
                if !index.contains_key(&t) {
                    index.insert(t, order.len());
                    order.push(t);
                }
            }
            i += 1;
        }
        let n = order.len();
        let mut trimmed_delta: Vec<usize> = Vec::with_capacity(n * syms);
        for &s in &order {
            for sym in 0..syms {
                trimmed_delta.push(index[&self.next(s, sym)]);
            }
        }
        let trimmed_accepting: Vec<bool> = order.iter().map(|&s| self.accepting[s as usize]).collect();

        // refinement
        let mut class: Vec<usize> = trimmed_accepting.iter().map(|&a| a as usize).collect();
        let mut class_count = 2;
        loop {
            let mut sig_map: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next_class = vec![0usize; n];
            for s in 0..n {
                let sig: Vec<usize> = (0..syms).map(|sym| class[trimmed_delta[s * syms + sym]]).collect();
                let key = (class[s], sig);
                let id = sig_map.len();
                let id = *sig_map.entry(key).or_insert(id);
                next_class[s] = id;
            }
            if sig_map.len() == class_count {
                break;
            }
            class_count = sig_map.len();
            class = next_class;
        }

        // build quotient, then canonical BFS renumber
        let mut repr: Vec<Option<usize>> = vec![None; class_count];
        for s in 0..n {
            if repr[class[s]].is_none() {
                repr[class[s]] = Some(s);
            }
        }
        let quot_next = |c: usize, sym: usize| class[trimmed_delta[repr[c].unwrap() * syms + sym]];
        let start = class[0];
        let mut bfs: Vec<usize> = vec![start];
        let mut bfs_index: HashMap<usize, u32> = HashMap::from([(start, 0)]);
        let mut i = 0;
        while i < bfs.len() {
            let c = bfs[i];
            for sym in 0..syms {
                let t = quot_next(c, sym);
                if !bfs_index.contains_key(&t) {
                    bfs_index.insert(t, bfs.len() as u32);
                    bfs.push(t);
                }
            }
            i += 1;
        }
        let mut delta = Vec::with_capacity(bfs.len() * syms);
        let mut accepting = Vec::with_capacity(bfs.len());
        for &c in &bfs {
            accepting.push(trimmed_accepting[repr[c].unwrap()]);
            for sym in 0..syms {
                delta.push(bfs_index[&quot_next(c, sym)]);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            accepting,
            delta,
        }
    }

    /// Structural equivalence of the canonical minimal forms.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool, AutomataError> {
        if self.alphabet != other.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        Ok(self.minimize() == other.minimize())
    }

    /// Re-embed into a wider alphabet. `track_map[t]` gives the target
    /// track carrying old track `t`; several old tracks may share a target
    /// (a diagonal binding). Unmapped target tracks are ignored.
    pub fn lift(&self, alphabet: Alphabet, track_map: &[usize]) -> Dfa {
        assert_eq!(track_map.len(), self.alphabet.tracks());
        for (t, &nt) in track_map.iter().enumerate() {
            assert_eq!(
                self.alphabet.max_digit(t),
                alphabet.max_digit(nt),
                "digit bound mismatch when lifting track {t}"
            );
        }
        let syms = alphabet.symbol_count();
        let mut delta = Vec::with_capacity(self.states() * syms);
        for s in 0..self.states() as u32 {
            for sym in 0..syms {
                let digits = alphabet.unpack(sym);
                let old_digits: Vec<u8> = track_map.iter().map(|&nt| digits[nt]).collect();
                delta.push(self.next(s, self.alphabet.pack(&old_digits)));
            }
        }
        Dfa {
            alphabet,
            initial: self.initial,
            accepting: self.accepting.clone(),
            delta,
        }
    }

    /// Existentially quantify one track: drop it from every tuple symbol,
    /// determinize the resulting NFA, close under trailing all-zero padding
    /// (a shorter witness must not be lost when the remaining tracks are
    /// longer) and minimize.
    pub fn project(&self, track: usize) -> Result<Dfa, AutomataError> {
        if self.alphabet.tracks() < 2 {
            return Err(AutomataError::SingleTrack);
        }
        if track >= self.alphabet.tracks() {
            return Err(AutomataError::BadTrack(track));
        }
        let new_alphabet = self.alphabet.drop_track(track);
        let nfa = super::Nfa::project_of(self, track, new_alphabet);
        Ok(nfa.determinize()?.pad_close().minimize())
    }
}

pub(crate) fn encode_digits(n: u64, sys: NumSys) -> Vec<u8> {
    match sys {
        NumSys::Zeck => zeck_encode(n).digits().to_vec(),
        NumSys::Cg => cg_encode(n).digits().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn evens() -> Dfa {
        // one-track {0,1}: words with an even number of 1s
        let alphabet = Alphabet::new(vec![1]);
        Dfa::new(alphabet, 0, vec![true, false], vec![0, 1, 1, 0])
    }

    #[test]
    fn product_and_complement_algebra() {
        let a = evens();
        let empty = a.product(&a.complement(), BoolOp::And).unwrap();
        assert!(empty.is_empty());
        let same = a.product(&a, BoolOp::Or).unwrap();
        assert!(same.equivalent(&a).unwrap());
        let universal = a.product(&a.complement(), BoolOp::Or).unwrap();
        assert!(universal.complement().is_empty());
    }

    #[test]
    fn minimize_is_idempotent_and_preserves_language() {
        let a = evens();
        let m = a.minimize();
        assert!(m.equivalent(&a).unwrap());
        assert_eq!(m.minimize().states(), m.states());
    }

    #[test]
    fn lift_and_project_roundtrip() {
        // identity relation x=y over two {0,1} tracks via a direct table
        let alphabet = Alphabet::new(vec![1, 1]);
        // state 0 ok, state 1 dead; symbols: 00,01,10,11
        let eq = Dfa::new(alphabet, 0, vec![true, false], vec![0, 1, 1, 0, 1, 1, 1, 1]);
        let all = eq.project(1).unwrap();
        // every single-track word has a matching witness
        assert!(all.complement().is_empty());
    }

    #[test]
    fn project_of_empty_is_empty() {
        let alphabet = Alphabet::new(vec![1, 1]);
        let none = Dfa::constant(alphabet, false);
        assert!(none.project(0).unwrap().is_empty());
    }
}
