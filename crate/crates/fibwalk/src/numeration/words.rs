use std::fmt;

use thiserror::Error;

use super::fib::fib_u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("digit '{0}' out of range for this numeration system")]
    BadDigit(char),
    #[error("adjacent 1s at position {0}")]
    AdjacentOnes(usize),
    #[error("nonzero digit at odd position {0}")]
    NonzeroOddPosition(usize),
    #[error("two 2s with no intervening even-position 0 (positions {0} and {1})")]
    UnseparatedTwos(usize, usize),
    #[error("word value does not fit in 64 bits")]
    Overflow,
}

/// Zeckendorf digit word, LSD-first: digit `i` weighs `F_{i+2}`.
///
/// Stored in canonical form (no trailing zeros; the empty word encodes 0).
/// The constructors accept non-canonical input with trailing zeros and strip
/// it, but reject words containing adjacent 1s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeckWord(Vec<u8>);

impl ZeckWord {
    pub fn from_digits(mut digits: Vec<u8>) -> Result<Self, WordError> {
        for (i, &d) in digits.iter().enumerate() {
            if d > 1 {
                return Err(WordError::BadDigit((b'0' + d) as char));
            }
            if d == 1 && i + 1 < digits.len() && digits[i + 1] == 1 {
                return Err(WordError::AdjacentOnes(i));
            }
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        Ok(ZeckWord(digits))
    }

    pub fn parse(s: &str) -> Result<Self, WordError> {
        Self::from_digits(digits_of(s)?)
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ZeckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Chung-Graham digit word, LSD-first: digit `i` weighs `F_{i+2}`.
///
/// Digits range over {0,1,2}; odd positions carry 0; between any two even
/// positions carrying 2 there is an even position carrying 0. Canonical form
/// has no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CgWord(Vec<u8>);

impl CgWord {
    pub fn from_digits(mut digits: Vec<u8>) -> Result<Self, WordError> {
        let mut last_two: Option<usize> = None;
        for (i, &d) in digits.iter().enumerate() {
            if d > 2 {
                return Err(WordError::BadDigit((b'0' + d) as char));
            }
            if i % 2 == 1 {
                if d != 0 {
                    return Err(WordError::NonzeroOddPosition(i));
                }
                continue;
            }
            match d {
                0 => last_two = None,
                2 => {
                    if let Some(j) = last_two {
                        return Err(WordError::UnseparatedTwos(j, i));
                    }
                    last_two = Some(i);
                }
                _ => {}
            }
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        Ok(CgWord(digits))
    }

    pub fn parse(s: &str) -> Result<Self, WordError> {
        Self::from_digits(digits_of(s)?)
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

fn digits_of(s: &str) -> Result<Vec<u8>, WordError> {
    s.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) if d <= 9 => Ok(d as u8),
            _ => Err(WordError::BadDigit(c)),
        })
        .collect()
}

/// Value of an LSD-first digit slice: `Σ d_i · F_{i+2}`.
///
/// Shared by both systems; the weight of position `i` is `F_{i+2}` in each.
pub(crate) fn digit_value(digits: &[u8]) -> Result<u64, WordError> {
    let mut total: u64 = 0;
    for (i, &d) in digits.iter().enumerate() {
        if d == 0 {
            continue;
        }
        if i + 2 > 92 {
            return Err(WordError::Overflow);
        }
        let term = (d as u64)
            .checked_mul(fib_u64(i + 2))
            .ok_or(WordError::Overflow)?;
        total = total.checked_add(term).ok_or(WordError::Overflow)?;
    }
    Ok(total)
}

/// Greedy largest-Fibonacci-first Zeckendorf encoding.
pub fn zeck_encode(n: u64) -> ZeckWord {
    if n == 0 {
        return ZeckWord(Vec::new());
    }
    let mut m = 2;
    while fib_u64(m + 1) <= n {
        m += 1;
    }
    let mut digits = vec![0u8; m - 1];
    let mut rest = n;
    let mut i = m;
    while rest > 0 {
        if fib_u64(i) <= rest {
            digits[i - 2] = 1;
            rest -= fib_u64(i);
        }
        i -= 1;
    }
    ZeckWord(digits)
}

pub fn zeck_decode(w: &ZeckWord) -> u64 {
    digit_value(w.digits()).expect("canonical ZeckWord overflows u64")
}

/// Largest value representable by a valid CG word using even positions
/// `0..=p`, given whether a digit 2 sits just above with no even-position 0
/// in between yet.
fn cg_max_value(p: isize, pending: bool) -> u64 {
    if p < 0 {
        return 0;
    }
    // DP table over (even position / 2, pending flag), MSD side downward.
    static TABLE: std::sync::OnceLock<Vec<[u64; 2]>> = std::sync::OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let slots = 45; // even positions 0, 2, .., 88: F_90 still fits u64
        let mut t = vec![[0u64; 2]; slots];
        for j in 0..slots {
            let w = fib_u64(2 * j + 2);
            let [b0, b1] = if j > 0 { t[j - 1] } else { [0, 0] };
            // pending=0: digits 0, 1, 2 allowed; pending=1: only 0, 1.
            t[j][0] = (2 * w + b1).max(w + b0).max(b0);
            t[j][1] = (w + b1).max(b0);
        }
        t
    });
    let j = (p / 2) as usize;
    table[j.min(table.len() - 1)][pending as usize]
}

/// Chung-Graham encoding via MSD-first exhaustive search with feasibility
/// pruning. Asserts that exactly one valid digit string (up to trailing
/// zeros) has the requested value.
pub fn cg_encode(n: u64) -> CgWord {
    if n == 0 {
        return CgWord(Vec::new());
    }
    // Highest even position that can be needed.
    let mut top = 0usize;
    while cg_max_value(top as isize, false) < n {
        top += 2;
    }
    let mut digits = vec![0u8; top + 1];
    let mut solution: Option<Vec<u8>> = None;
    search(n, top as isize, false, &mut digits, &mut solution);
    let digits = solution.expect("every natural number has a CG representation");
    CgWord::from_digits(digits).expect("search produced an invalid CG word")
}

/// DFS over digit choices from position `pos` down. `pending` is true when a
/// digit 2 sits above `pos` with no even-position 0 in between.
fn search(
    target: u64,
    pos: isize,
    pending: bool,
    digits: &mut Vec<u8>,
    solution: &mut Option<Vec<u8>>,
) {
    if pos < 0 {
        if target == 0 {
            assert!(
                solution.is_none(),
                "CG representation is not unique: {digits:?}"
            );
            *solution = Some(digits.clone());
        }
        return;
    }
    if pos % 2 == 1 {
        search(target, pos - 1, pending, digits, solution);
        return;
    }
    let w = fib_u64(pos as usize + 2);
    for d in 0u8..=2 {
        if d == 2 && pending {
            continue;
        }
        let next_pending = match d {
            0 => false,
            2 => true,
            _ => pending,
        };
        let used = d as u64 * w;
        // Remaining target must be attainable by the lower positions.
        if used > target || target - used > cg_max_value(pos - 2, next_pending) {
            continue;
        }
        digits[pos as usize] = d;
        search(target - used, pos - 2, next_pending, digits, solution);
        digits[pos as usize] = 0;
    }
}

pub fn cg_decode(w: &CgWord) -> u64 {
    digit_value(w.digits()).expect("canonical CgWord overflows u64")
}
