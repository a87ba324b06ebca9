use super::words::{cg_decode, cg_encode, zeck_decode, zeck_encode, CgWord, ZeckWord};
use super::NumerationError;

/// Which union of Eq-style index classes an integer's least Fibonacci index
/// falls in: EVEN when the smallest index in the Zeckendorf sum is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Single Zeckendorf shift: prepend one 0 to the LSD-first word.
pub fn shift_f(n: u64) -> u64 {
    let w = zeck_encode(n);
    let mut digits = Vec::with_capacity(w.len() + 1);
    digits.push(0);
    digits.extend_from_slice(w.digits());
    zeck_decode(&ZeckWord::from_digits(digits).expect("shift preserves validity"))
}

/// Double Zeckendorf shift.
pub fn shift_f2(n: u64) -> u64 {
    let w = zeck_encode(n);
    let mut digits = Vec::with_capacity(w.len() + 2);
    digits.extend_from_slice(&[0, 0]);
    digits.extend_from_slice(w.digits());
    zeck_decode(&ZeckWord::from_digits(digits).expect("shift preserves validity"))
}

/// Double Chung-Graham shift: prepend two 0s to the LSD-first CG word.
/// (A single CG shift would land nonzero digits on odd positions.)
pub fn shift_cg2(n: u64) -> u64 {
    let w = cg_encode(n);
    let mut digits = Vec::with_capacity(w.len() + 2);
    digits.extend_from_slice(&[0, 0]);
    digits.extend_from_slice(w.digits());
    cg_decode(&CgWord::from_digits(digits).expect("double shift preserves CG validity"))
}

/// Least-Fibonacci-index parity of `n ≥ 1`; 0 belongs to neither class.
pub fn parity_class(n: u64) -> Result<Parity, NumerationError> {
    let w = zeck_encode(n);
    let i = w
        .digits()
        .iter()
        .position(|&d| d == 1)
        .ok_or(NumerationError::ZeroHasNoParity)?;
    // Digit position i weighs F_{i+2}, so the least index is i + 2.
    Ok(if i % 2 == 0 { Parity::Even } else { Parity::Odd })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::{floor_phi, floor_phi2};

    #[test]
    fn shift_examples() {
        // 10 = [01001]_F becomes 16 = [001001]_F under a shift.
        assert_eq!(shift_f(10), 16);
        assert_eq!(shift_f(0), 0);
        assert_eq!(shift_f(0), floor_phi(1) - 1);
        // "2" -> "002" = 2 F_4.
        assert_eq!(shift_cg2(2), 6);
    }

    #[test]
    fn shift_closed_forms() {
        for n in 0..30_000 {
            assert_eq!(shift_f(n), floor_phi(n + 1) - 1);
            assert_eq!(shift_f2(n), floor_phi2(n + 1) - 2);
        }
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_class(1), Ok(Parity::Even)); // 1 = F_2
        assert_eq!(parity_class(2), Ok(Parity::Odd)); // 2 = F_3
        assert_eq!(parity_class(17), Ok(Parity::Even)); // (17)_F starts with F_2
        assert_eq!(parity_class(0), Err(NumerationError::ZeroHasNoParity));
    }

    #[test]
    fn cg_shift_tracks_parity() {
        for n in 1..5_000 {
            let expect = match parity_class(n).unwrap() {
                Parity::Even => shift_f2(n),
                Parity::Odd => shift_f2(n) + 1,
            };
            assert_eq!(shift_cg2(n), expect, "fibcgsh fails at n={n}");
        }
    }
}
