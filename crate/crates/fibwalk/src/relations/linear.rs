use std::collections::HashMap;

use crate::automata::{check_budget, Alphabet, BoolOp, Dfa, NumSys};

use super::{validity, RelationsError};

/// The relation `sum_t coeffs[t] * x_t = constant`, with each variable read
/// in its own numeration system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRelation {
    pub coeffs: Vec<i64>,
    pub constant: i64,
    pub systems: Vec<NumSys>,
}

impl LinearRelation {
    pub fn new(coeffs: Vec<i64>, constant: i64, systems: Vec<NumSys>) -> Self {
        assert_eq!(coeffs.len(), systems.len());
        LinearRelation {
            coeffs,
            constant,
            systems,
        }
    }
}

/// Synchronized automaton for a linear relation over canonical
/// representations.
///
/// The builder tracks the still-uncancelled value exactly for the first few
/// digit positions, then switches to an index-free residue pair `(p, q)`
/// meaning `p*F(j+2) + q*F(j+3)` at position `j`. Pairs with a component
/// beyond the bound `B` cannot be both reachable and cancellable any more
/// and collapse to a dead state; see `bounds` for how `B` and the switch
/// position are chosen.
pub fn linear_eq(rel: &LinearRelation) -> Result<Dfa, RelationsError> {
    linear_eq_with_margin(rel, 0)
}

/// Same construction with the residue bound enlarged by `margin`. The bound
/// is already safe, so any margin must give an equivalent automaton; the
/// test suite checks that.
pub fn linear_eq_with_margin(rel: &LinearRelation, margin: i64) -> Result<Dfa, RelationsError> {
    if rel.coeffs.is_empty() || rel.coeffs.iter().all(|&c| c == 0) {
        return Err(RelationsError::NoCoefficients);
    }
    assert_eq!(rel.coeffs.len(), rel.systems.len());
    let alphabet = Alphabet::new(rel.systems.iter().map(|s| s.max_digit()).collect());
    let (bound, cut, fibs) = bounds(rel, margin);
    let raw = build_raw(rel, &alphabet, bound, cut, &fibs)?;

    let mut dfa = raw;
    for (t, &sys) in rel.systems.iter().enumerate() {
        let v = validity(sys).lift(alphabet.clone(), &[t]);
        dfa = dfa.product(&v, BoolOp::And)?;
    }
    Ok(dfa.pad_close().minimize())
}

/// Digit-column sums are bounded by `s_max = sum |c_t| * maxdigit_t`. A
/// residue pair that is still cancellable satisfies `|q - p*phi| <= 4.3 *
/// s_max`, and one that is also reachable satisfies `|p + q*phi| <= 6.3 *
/// s_max + 2` once the position weight exceeds the constant term. Solving
/// the two gives `|p| <= 3.7*s_max + 1` and `|q| <= 4.2*s_max + 1`, so
/// `B = 5*s_max + 8` never cuts off a useful pair. The exact phase runs
/// until `F(cut+2)` dominates both the constant term and the bound, which
/// also makes the bounded residue pair of a value unique.
fn bounds(rel: &LinearRelation, margin: i64) -> (i128, u32, Vec<i128>) {
    let s_max: i128 = rel
        .coeffs
        .iter()
        .zip(&rel.systems)
        .map(|(&c, &sys)| (c as i128).abs() * sys.max_digit() as i128)
        .sum();
    let bound = 5 * s_max + 8 + margin as i128;
    let threshold = 3 * (rel.constant as i128).abs() + 4 * bound + 8 * s_max + 16;
    let mut fibs: Vec<i128> = vec![0, 1];
    let mut cut = 1u32;
    loop {
        while fibs.len() < (cut + 6) as usize {
            let k = fibs.len();
            fibs.push(fibs[k - 1] + fibs[k - 2]);
        }
        if fibs[(cut + 2) as usize] > threshold {
            break;
        }
        cut += 1;
    }
    (bound, cut, fibs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    /// Exact uncancelled value after reading `j` positions.
    Exact(u32, i128),
    /// Residue pair once positions look alike.
    Pair(i64, i64),
    Dead,
}

fn build_raw(
    rel: &LinearRelation,
    alphabet: &Alphabet,
    bound: i128,
    cut: u32,
    fibs: &[i128],
) -> Result<Dfa, RelationsError> {
    let syms = alphabet.symbol_count();
    let col_sum: Vec<i128> = (0..syms)
        .map(|sym| {
            let digits = alphabet.unpack(sym);
            rel.coeffs
                .iter()
                .zip(&digits)
                .map(|(&c, &d)| c as i128 * d as i128)
                .sum()
        })
        .collect();

    let step = |key: Key, s: i128| -> Key {
        match key {
            Key::Dead => Key::Dead,
            Key::Exact(j, t) => {
                let t2 = t - s * fibs[(j + 2) as usize];
                if j + 1 == cut {
                    match bounded_pair(t2, j + 1, bound, fibs) {
                        Some((p, q)) => Key::Pair(p, q),
                        None => Key::Dead,
                    }
                } else {
                    Key::Exact(j + 1, t2)
                }
            }
            Key::Pair(p, q) => {
                let (p2, q2) = (q as i128 - p as i128 + s, p as i128 - s);
                if p2.abs() > bound || q2.abs() > bound {
                    Key::Dead
                } else {
                    Key::Pair(p2 as i64, q2 as i64)
                }
            }
        }
    };

    let initial = Key::Exact(0, rel.constant as i128);
    let mut index: HashMap<Key, u32> = HashMap::from([(initial, 0)]);
    let mut order = vec![initial];
    let mut delta: Vec<u32> = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let key = order[i];
        for sym in 0..syms {
            let next = step(key, col_sum[sym]);
            let id = *index.entry(next).or_insert_with(|| {
                order.push(next);
                (order.len() - 1) as u32
            });
            delta.push(id);
        }
        check_budget(order.len())?;
        i += 1;
    }
    let accepting = order
        .iter()
        .map(|k| matches!(k, Key::Exact(_, 0) | Key::Pair(0, 0)))
        .collect();
    Ok(Dfa::new(alphabet.clone(), 0, accepting, delta))
}

/// Unique representation `t = p*F(j+2) + q*F(j+3)` with both components in
/// `[-bound, bound]`, if one exists.
fn bounded_pair(t: i128, j: u32, bound: i128, fibs: &[i128]) -> Option<(i64, i64)> {
    let (f2, f3) = (fibs[(j + 2) as usize], fibs[(j + 3) as usize]);
    let mut q = -bound;
    while q <= bound {
        let r = t - q * f3;
        if r.rem_euclid(f2) == 0 {
            let p = r / f2;
            if p.abs() <= bound {
                return Some((p as i64, q as i64));
            }
            // the next representation on this line is f2 away in q
            q += f2.max(1);
        } else {
            q += 1;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeck(n: usize) -> Vec<NumSys> {
        vec![NumSys::Zeck; n]
    }

    #[test]
    fn addition_matches_arithmetic() {
        let rel = LinearRelation::new(vec![1, 1, -1], 0, zeck(3));
        let dfa = linear_eq(&rel).unwrap();
        for x in 0..60u64 {
            for y in 0..60u64 {
                for z in 0..130u64 {
                    assert_eq!(
                        dfa.member_int(&[x, y, z], &rel.systems),
                        x + y == z,
                        "x={x} y={y} z={z}"
                    );
                }
            }
        }
    }

    #[test]
    fn short_witness_is_kept() {
        // 1 + 1 = 2 is decided in the exact phase; the padded words are
        // ("10", "10", "01")
        let rel = LinearRelation::new(vec![1, 1, -1], 0, zeck(3));
        let dfa = linear_eq(&rel).unwrap();
        assert!(dfa.member_int(&[1, 1, 2], &rel.systems));
        assert!(dfa.accepts_tuples(&[vec![1, 1, 0], vec![0, 0, 1]]));
    }

    #[test]
    fn doubling_and_offsets() {
        let rel = LinearRelation::new(vec![2, -1], 0, zeck(2));
        let dfa = linear_eq(&rel).unwrap();
        for x in 0..300u64 {
            for y in 0..600u64 {
                assert_eq!(dfa.member_int(&[x, y], &rel.systems), 2 * x == y);
            }
        }
        let rel = LinearRelation::new(vec![1, -1], 1, zeck(2));
        let dfa = linear_eq(&rel).unwrap();
        for x in 0..400u64 {
            for y in 0..400u64 {
                assert_eq!(dfa.member_int(&[x, y], &rel.systems), x == y + 1);
            }
        }
    }

    #[test]
    fn constant_singleton() {
        let rel = LinearRelation::new(vec![1], 4, zeck(1));
        let dfa = linear_eq(&rel).unwrap();
        assert_eq!(dfa.enumerate(NumSys::Zeck, 3).unwrap(), vec![4]);
    }

    #[test]
    fn cg_tracks() {
        let sys = vec![NumSys::Cg, NumSys::Cg, NumSys::Cg];
        let rel = LinearRelation::new(vec![1, 1, -1], 0, sys.clone());
        let dfa = linear_eq(&rel).unwrap();
        for x in 0..50u64 {
            for y in 0..50u64 {
                assert_eq!(dfa.member_int(&[x, y, x + y], &sys), true);
                assert_eq!(dfa.member_int(&[x, y, x + y + 1], &sys), false);
            }
        }
    }

    #[test]
    fn enlarging_the_bound_changes_nothing() {
        for rel in [
            LinearRelation::new(vec![1, 1, -1], 0, zeck(3)),
            LinearRelation::new(vec![2, 1, -1], 1, zeck(3)),
            LinearRelation::new(vec![3, -2], 5, zeck(2)),
            LinearRelation::new(vec![1, -1], 0, vec![NumSys::Zeck, NumSys::Cg]),
        ] {
            let base = linear_eq(&rel).unwrap();
            let wide = linear_eq_with_margin(&rel, 4).unwrap();
            assert!(base.equivalent(&wide).unwrap(), "bound too tight for {rel:?}");
        }
    }

    #[test]
    fn degenerate_relations_rejected() {
        assert_eq!(
            linear_eq(&LinearRelation::new(vec![0, 0], 1, zeck(2))),
            Err(RelationsError::NoCoefficients)
        );
    }
}
