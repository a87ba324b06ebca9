use super::fib::fib_i64;
use super::NumerationError;

/// The constant `γ_b` of a prefix set, evaluated two independent ways,
/// together with the auxiliary sums `X_b` and `Y_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaForms {
    /// Case-split form: `Σ_{i<=m-2} b_i F_{i+2} - F_{m+1}` when the last
    /// digit is 0, `Σ_{i<=m-1} b_i F_{i+2} - F_{m+2}` when it is 1.
    pub dekking_form: i64,
    /// `-1 - Σ_{k in T00} F_k` where `T00 = {0 < k < m : b_{k-1} b_k = 00}`.
    pub t00_form: i64,
    /// `X_b = Σ_{k in T00} F_k`.
    pub x_b: i64,
    /// `Y_b = Σ_i b_i F_{i+2}`.
    pub y_b: i64,
}

/// Evaluate both defining sums for `γ_b` by direct summation.
pub fn gamma_b(b: &[u8]) -> Result<GammaForms, NumerationError> {
    if b.iter().any(|&d| d > 1) {
        return Err(NumerationError::BadSetIndex(
            "prefix word digits must be 0 or 1".into(),
        ));
    }
    if b.windows(2).any(|w| w == [1, 1]) {
        return Err(NumerationError::AdjacentOnes);
    }
    let m = b.len();
    let y_b: i64 = b
        .iter()
        .enumerate()
        .map(|(i, &d)| d as i64 * fib_i64(i + 2))
        .sum();
    let x_b: i64 = (1..m)
        .filter(|&k| b[k - 1] == 0 && b[k] == 0)
        .map(fib_i64)
        .sum();
    let dekking_form = if m == 0 {
        // Empty prefix: both sums are empty; the theorem's m >= 1 cases do
        // not apply, so fall back to the T00 value (-1).
        -1
    } else if b[m - 1] == 0 {
        // b_{m-1} = 0, so Y_b already equals the truncated sum.
        y_b - fib_i64(m + 1)
    } else {
        y_b - fib_i64(m + 2)
    };
    let t00_form = -1 - x_b;
    Ok(GammaForms {
        dekking_form,
        t00_form,
        x_b,
        y_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_words_by_direct_summation() {
        // b = "0": m=1, empty digit sum minus F_2; T00 empty.
        let g = gamma_b(&[0]).unwrap();
        assert_eq!((g.dekking_form, g.t00_form), (-1, -1));
        // b = "1": Y_b = F_2, minus F_3.
        let g = gamma_b(&[1]).unwrap();
        assert_eq!((g.dekking_form, g.t00_form), (-1, -1));
        // b = "00": T00 = {1}.
        let g = gamma_b(&[0, 0]).unwrap();
        assert_eq!((g.dekking_form, g.t00_form), (-2, -2));
    }

    #[test]
    fn forms_agree_up_to_length_12() {
        let mut words = vec![vec![]];
        for _ in 0..12 {
            let mut next = Vec::new();
            for w in &words {
                for d in 0..=1u8 {
                    if d == 1 && w.last() == Some(&1) {
                        continue;
                    }
                    let mut w2 = w.clone();
                    w2.push(d);
                    next.push(w2);
                }
            }
            for w in &next {
                let g = gamma_b(w).unwrap();
                assert_eq!(g.dekking_form, g.t00_form, "mismatch for {w:?}");
                assert_eq!(g.t00_form, -1 - g.x_b);
            }
            words = next;
        }
    }
}
