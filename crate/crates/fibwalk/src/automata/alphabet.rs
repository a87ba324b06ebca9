/// Per-track digit bounds. Track `t` carries digits `0..=max_digits[t]`;
/// a tuple symbol is flattened to `Σ d_t · stride_t` (mixed radix), so the
/// all-zero tuple is always symbol 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    max_digits: Vec<u8>,
}

impl Alphabet {
    pub fn new(max_digits: Vec<u8>) -> Self {
        assert!(!max_digits.is_empty(), "alphabet needs at least one track");
        Alphabet { max_digits }
    }

    pub fn tracks(&self) -> usize {
        self.max_digits.len()
    }

    pub fn max_digit(&self, track: usize) -> u8 {
        self.max_digits[track]
    }

    pub fn max_digits(&self) -> &[u8] {
        &self.max_digits
    }

    pub fn symbol_count(&self) -> usize {
        self.max_digits.iter().map(|&m| m as usize + 1).product()
    }

    /// Flatten a digit tuple to its symbol index.
    pub fn pack(&self, digits: &[u8]) -> usize {
        debug_assert_eq!(digits.len(), self.tracks());
        let mut sym = 0usize;
        for (t, &d) in digits.iter().enumerate() {
            debug_assert!(d <= self.max_digits[t]);
            sym = sym * (self.max_digits[t] as usize + 1) + d as usize;
        }
        sym
    }

    /// Inverse of [`pack`](Self::pack).
    pub fn unpack(&self, mut sym: usize) -> Vec<u8> {
        let mut digits = vec![0u8; self.tracks()];
        for t in (0..self.tracks()).rev() {
            let radix = self.max_digits[t] as usize + 1;
            digits[t] = (sym % radix) as u8;
            sym /= radix;
        }
        digits
    }

    /// Digit carried by `track` within a flattened symbol.
    pub fn digit_of(&self, sym: usize, track: usize) -> u8 {
        let mut rest = sym;
        let mut digit = 0u8;
        for t in (0..self.tracks()).rev() {
            let radix = self.max_digits[t] as usize + 1;
            if t == track {
                digit = (rest % radix) as u8;
                break;
            }
            rest /= radix;
        }
        digit
    }

    /// Alphabet with one track removed.
    pub fn drop_track(&self, track: usize) -> Alphabet {
        let mut max_digits = self.max_digits.clone();
        max_digits.remove(track);
        Alphabet::new(max_digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_unpack_roundtrip() {
        let a = Alphabet::new(vec![1, 2, 1]);
        assert_eq!(a.symbol_count(), 12);
        for sym in 0..a.symbol_count() {
            let digits = a.unpack(sym);
            assert_eq!(a.pack(&digits), sym);
            for t in 0..3 {
                assert_eq!(a.digit_of(sym, t), digits[t]);
            }
        }
        assert_eq!(a.pack(&[0, 0, 0]), 0);
    }
}
