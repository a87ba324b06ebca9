use crate::automata::{Alphabet, Dfa, NumSys};

/// Single-track automaton accepting exactly the canonical digit words of a
/// numeration system, together with any amount of trailing zero padding.
pub fn validity(sys: NumSys) -> Dfa {
    match sys {
        NumSys::Zeck => zeck_valid(),
        NumSys::Cg => cg_valid(),
    }
}

/// Words over {0,1} with no two adjacent 1s.
pub fn zeck_valid() -> Dfa {
    let alphabet = Alphabet::new(vec![1]);
    // 0: last digit was 0, 1: last digit was 1, 2: dead
    let delta = vec![
        0, 1, // from 0
        0, 2, // from 1
        2, 2, // dead
    ];
    Dfa::new(alphabet, 0, vec![true, true, false], delta).minimize()
}

/// Words over {0,1,2}, least significant digit first, with every
/// odd-position digit 0 and an even-position 0 between any two 2s.
pub fn cg_valid() -> Dfa {
    let alphabet = Alphabet::new(vec![2]);
    // states: (position parity, whether a 2 is pending an even-position 0)
    // 0: even/free, 1: odd/free, 2: even/pending, 3: odd/pending, 4: dead
    let delta = vec![
        1, 1, 3, // from 0: digit 0, 1, 2
        0, 4, 4, // from 1
        1, 3, 4, // from 2
        2, 4, 4, // from 3
        4, 4, 4, // dead
    ];
    Dfa::new(alphabet, 0, vec![true, true, true, true, false], delta).minimize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::{cg_encode, zeck_encode};

    fn word_syms(digits: &[u8]) -> Vec<usize> {
        digits.iter().map(|&d| d as usize).collect()
    }

    #[test]
    fn zeck_accepts_canonical_words() {
        let v = zeck_valid();
        for n in 0..5_000u64 {
            let w = zeck_encode(n);
            assert!(v.accepts_symbols(&word_syms(w.digits())), "rejected zeck({n})");
        }
        assert!(v.accepts_symbols(&[1, 0, 1, 0, 0, 1, 0]));
        assert!(!v.accepts_symbols(&[1, 1]));
        assert!(!v.accepts_symbols(&[0, 1, 1, 0]));
    }

    #[test]
    fn cg_accepts_canonical_words() {
        let v = cg_valid();
        for n in 0..5_000u64 {
            let w = cg_encode(n);
            assert!(v.accepts_symbols(&word_syms(w.digits())), "rejected cg({n})");
        }
        // padding is allowed
        assert!(v.accepts_symbols(&[2, 0, 1, 0, 0]));
        // nonzero digit at an odd position
        assert!(!v.accepts_symbols(&[0, 1]));
        assert!(!v.accepts_symbols(&[1, 2]));
        // two 2s without an even-position 0 between them
        assert!(!v.accepts_symbols(&[2, 0, 2]));
        assert!(v.accepts_symbols(&[2, 0, 0, 0, 2]));
    }

    #[test]
    fn cg_word_count_matches_encoder() {
        // every accepted word of each padded length decodes from a unique n
        let v = cg_valid();
        let mut words = vec![Vec::<u8>::new()];
        let mut accepted = 0u64;
        for _ in 0..10 {
            let mut next = Vec::new();
            for w in &words {
                for d in 0u8..=2 {
                    let mut w2 = w.clone();
                    w2.push(d);
                    if v.accepts_symbols(&word_syms(&w2)) && *w2.last().unwrap() != 0 {
                        accepted += 1;
                    }
                    next.push(w2);
                }
            }
            words = next;
        }
        // canonical words of length 1..=10 are exactly the encodings of the
        // n >= 1 whose encoding fits in 10 digits; all such n are below 233
        let count = (1..233u64).filter(|&n| cg_encode(n).digits().len() <= 10).count() as u64;
        assert_eq!(accepted, count);
    }
}
