use std::collections::{BTreeSet, HashMap};

use super::{check_budget, Alphabet, AutomataError, Dfa};

/// Nondeterministic automaton with epsilon edges. Intermediate form for
/// regex compilation and projection; never exposed as a final artifact.
#[derive(Debug, Clone)]
pub struct Nfa {
    pub alphabet: Alphabet,
    pub states: usize,
    pub initial: usize,
    pub accepting: Vec<bool>,
    /// transitions[state] maps symbol -> successor set
    pub transitions: Vec<HashMap<usize, Vec<usize>>>,
    pub epsilon: Vec<Vec<usize>>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, states: usize, initial: usize) -> Self {
        Nfa {
            alphabet,
            states,
            initial,
            accepting: vec![false; states],
            transitions: vec![HashMap::new(); states],
            epsilon: vec![Vec::new(); states],
        }
    }

    pub fn add_edge(&mut self, from: usize, sym: usize, to: usize) {
        self.transitions[from].entry(sym).or_default().push(to);
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        self.epsilon[from].push(to);
    }

    /// NFA obtained from a DFA by erasing one track from every symbol.
    pub fn project_of(dfa: &Dfa, track: usize, new_alphabet: Alphabet) -> Nfa {
        let mut nfa = Nfa::new(new_alphabet.clone(), dfa.states(), dfa.initial() as usize);
        for s in 0..dfa.states() {
            nfa.accepting[s] = dfa.is_accepting(s as u32);
            for sym in 0..dfa.alphabet().symbol_count() {
                let digits = dfa.alphabet().unpack(sym);
                let mut reduced = digits.clone();
                reduced.remove(track);
                let new_sym = new_alphabet.pack(&reduced);
                nfa.add_edge(s, new_sym, dfa.next(s as u32, sym) as usize);
            }
        }
        nfa
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.epsilon[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    /// Subset construction. The empty successor set becomes an explicit
    /// dead state, keeping the result total.
    pub fn determinize(&self) -> Result<Dfa, AutomataError> {
        let syms = self.alphabet.symbol_count();
        let mut start: BTreeSet<usize> = BTreeSet::from([self.initial]);
        self.closure(&mut start);
        let mut index: HashMap<BTreeSet<usize>, u32> = HashMap::from([(start.clone(), 0)]);
        let mut subsets = vec![start];
        let mut delta: Vec<u32> = Vec::new();
        let mut accepting: Vec<bool> = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let current = subsets[i].clone();
            accepting.push(current.iter().any(|&s| self.accepting[s]));
            for sym in 0..syms {
                let mut next: BTreeSet<usize> = BTreeSet::new();
                for &s in &current {
                    if let Some(ts) = self.transitions[s].get(&sym) {
                        next.extend(ts.iter().copied());
                    }
                }
                self.closure(&mut next);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len() as u32;
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                delta.push(id);
            }
            check_budget(subsets.len())?;
            i += 1;
        }
        Ok(Dfa::new(self.alphabet.clone(), 0, accepting, delta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinize_single_symbol_language() {
        // accepts exactly the word "1"
        let alphabet = Alphabet::new(vec![1]);
        let mut nfa = Nfa::new(alphabet, 2, 0);
        nfa.accepting[1] = true;
        nfa.add_edge(0, 1, 1);
        let dfa = nfa.determinize().unwrap();
        assert!(dfa.accepts_symbols(&[1]));
        assert!(!dfa.accepts_symbols(&[0]));
        assert!(!dfa.accepts_symbols(&[1, 1]));
        assert!(!dfa.accepts_symbols(&[]));
    }

    #[test]
    fn epsilon_closure_reaches_acceptance() {
        let alphabet = Alphabet::new(vec![1]);
        let mut nfa = Nfa::new(alphabet, 3, 0);
        nfa.add_epsilon(0, 1);
        nfa.add_edge(1, 0, 2);
        nfa.accepting[2] = true;
        let dfa = nfa.determinize().unwrap();
        assert!(dfa.accepts_symbols(&[0]));
        assert!(!dfa.accepts_symbols(&[1]));
    }
}
