//! Brute-force verification of the closed-form set descriptions against
//! the representation-based membership oracles.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use crate::logic::eval_closed;
use crate::numeration::{
    cg_encode, fib_i64, fib_u64, floor_inv_phi, floor_phi, floor_phi2, gamma_b, parity_class,
    shift_cg2, shift_f, shift_f2, zeck_decode, zeck_encode, Parity, ZeckWord,
};
use crate::relations::builtin_env;

use super::{CheckReport, Mode};

fn zeck_digit(n: u64, pos: usize) -> u8 {
    zeck_encode(n).digits().get(pos).copied().unwrap_or(0)
}

fn cg_digit(n: u64, pos: usize) -> u8 {
    cg_encode(n).digits().get(pos).copied().unwrap_or(0)
}

/// Position of the least nonzero Zeckendorf digit; `None` for 0.
fn least_zeck_pos(n: u64) -> Option<usize> {
    zeck_encode(n).digits().iter().position(|&d| d != 0)
}

/// Position and value of the least nonzero Chung-Graham digit.
fn least_cg_pos(n: u64) -> Option<(usize, u8)> {
    let w = cg_encode(n);
    w.digits()
        .iter()
        .position(|&d| d != 0)
        .map(|i| (i, w.digits()[i]))
}

/// `ℕ \ A_2 = {⌊nφ⌋ − 1 : n ≥ 2}` on positive integers, checked by oracle
/// scan and by the decision engine.
pub fn check_complement(max_n: u64) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    if max_n >= 1 {
        let mut marked = vec![false; max_n as usize + 1];
        let mut n = 2u64;
        loop {
            let v = floor_phi(n) - 1;
            if v > max_n {
                break;
            }
            marked[v as usize] = true;
            n += 1;
        }
        for x in 1..=max_n {
            scanned += 1;
            let outside = zeck_digit(x, 0) == 0;
            if outside != marked[x as usize] {
                cex = Some(format!("x={x}"));
                break;
            }
        }
        if cex.is_none() {
            let sentence = "?lsd_fib Ax (x>0) => \
                (~$a2(x) <=> (En (n>=2) & Ey $phinlsd(n,y) & x+1=y))";
            match builtin_env().map_err(|e| e.to_string()).and_then(|env| {
                eval_closed(sentence, &env).map_err(|e| e.to_string())
            }) {
                Ok(true) => {}
                Ok(false) => cex = Some("decision procedure returned FALSE".to_string()),
                Err(e) => cex = Some(format!("decision procedure error: {e}")),
            }
        }
    }
    CheckReport::finish(
        "least_term_complement",
        Mode::Both,
        format!("x in 1..={max_n}"),
        start,
        scanned,
        cex,
    )
}

/// Same scan as [`check_complement`] but with the offset deliberately
/// dropped from the closed form. Exists as a harness self-test: it must
/// FAIL and report the smallest mismatch.
pub fn perturbed_fixture(max_n: u64) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    if max_n >= 1 {
        let mut marked = vec![false; max_n as usize + 1];
        let mut n = 2u64;
        loop {
            // wrong on purpose: the true closed form subtracts 1
            let v = floor_phi(n);
            if v > max_n {
                break;
            }
            marked[v as usize] = true;
            n += 1;
        }
        for x in 1..=max_n {
            scanned += 1;
            let outside = zeck_digit(x, 0) == 0;
            if outside != marked[x as usize] {
                cex = Some(format!("x={x}"));
                break;
            }
        }
    }
    CheckReport::finish(
        "perturbed_fixture",
        Mode::Oracle,
        format!("x in 1..={max_n}"),
        start,
        scanned,
        cex,
    )
}

/// `A_k = {⌊(n+φ²)/φ⌋ F_k + n F_{k+1} : n ≥ 0}` for `2 ≤ k ≤ max_k`.
pub fn check_least_term_sets(max_k: u32, max_n: u64) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    'outer: for k in 2..=max_k as usize {
        if max_n < 1 {
            break;
        }
        let (fk, fk1) = (fib_u64(k), fib_u64(k + 1));
        let mut marked = vec![false; max_n as usize + 1];
        let mut n = 0u64;
        loop {
            // ⌊(n+φ²)/φ⌋ = ⌊(n+1)/φ⌋ + 1
            let v = (floor_inv_phi(n + 1) + 1) * fk + n * fk1;
            if v > max_n {
                break;
            }
            marked[v as usize] = true;
            n += 1;
        }
        for x in 1..=max_n {
            scanned += 1;
            let in_set = least_zeck_pos(x) == Some(k - 2);
            if in_set != marked[x as usize] {
                cex = Some(format!("k={k}, x={x}"));
                break 'outer;
            }
        }
    }
    CheckReport::finish(
        "least_term_sets",
        Mode::Oracle,
        format!("k in 2..={max_k}, x in 1..={max_n}"),
        start,
        scanned,
        cex,
    )
}

/// `U_k = {⌊nφ⌋ F_k + n F_{k−1} − F_{k+1} : n ≥ 1}` for `1 ≤ k ≤ max_k`.
/// The scan includes 0 on both sides: the formula produces it at n = 1 and
/// the all-zero word matches any zero prefix.
pub fn check_zero_prefix_sets(max_k: u32, max_n: u64) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    'outer: for k in 1..=max_k as usize {
        let (fk, fkm1, fkp1) = (fib_i64(k), fib_i64(k - 1), fib_i64(k + 1));
        let mut marked = vec![false; max_n as usize + 1];
        let mut n = 1i64;
        loop {
            let v = floor_phi(n as u64) as i64 * fk + n * fkm1 - fkp1;
            if v > max_n as i64 {
                break;
            }
            if v >= 0 {
                marked[v as usize] = true;
            }
            n += 1;
        }
        for x in 0..=max_n {
            scanned += 1;
            let in_set = match least_zeck_pos(x) {
                None => true,
                Some(p) => p >= k,
            };
            if in_set != marked[x as usize] {
                cex = Some(format!("k={k}, x={x}"));
                break 'outer;
            }
        }
    }
    CheckReport::finish(
        "zero_prefix_sets",
        Mode::Oracle,
        format!("k in 1..={max_k}, x in 0..={max_n} (0 included on both sides)"),
        start,
        scanned,
        cex,
    )
}

/// The integers avoiding `F_k` are
/// `{j + ⌊nφ⌋ F_{k−1} + n F_{k−2} − F_k : 0 ≤ j < F_k, n ≥ 1}`.
pub fn check_avoid_sets(max_k: u32, max_n: u64) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    'outer: for k in 2..=max_k as usize {
        let (fk, fkm1, fkm2) = (fib_i64(k), fib_i64(k - 1), fib_i64(k - 2));
        let mut marked = vec![false; max_n as usize + 1];
        let mut n = 1i64;
        'gen: loop {
            let base = floor_phi(n as u64) as i64 * fkm1 + n * fkm2 - fk;
            if base > max_n as i64 {
                break 'gen;
            }
            for j in 0..fk {
                let v = base + j;
                if v > max_n as i64 {
                    break;
                }
                if v >= 0 {
                    marked[v as usize] = true;
                }
            }
            n += 1;
        }
        for x in 0..=max_n {
            scanned += 1;
            let avoids = zeck_digit(x, k - 2) == 0;
            if avoids != marked[x as usize] {
                cex = Some(format!("k={k}, x={x}"));
                break 'outer;
            }
        }
    }
    CheckReport::finish(
        "avoid_term_sets",
        Mode::Oracle,
        format!("k in 2..={max_k}, x in 0..={max_n}"),
        start,
        scanned,
        cex,
    )
}

/// Valid prefix words (digits 0/1, no adjacent 1s) of each length from
/// `min_len` to `max_len`.
fn prefix_words(min_len: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for d in 0..=1u8 {
                if d == 1 && w.last() == Some(&1) {
                    continue;
                }
                let mut w2 = w.clone();
                w2.push(d);
                next.push(w2);
            }
        }
        layer = next;
        for w in &layer {
            if w.len() >= min_len {
                out.push(w.clone());
            }
        }
    }
    out
}

/// `R_b` equals the generalized Beatty sequence with slope pair
/// `(F_m, F_{m−1})` or `(F_{m+1}, F_m)` depending on the last prefix digit,
/// offset by `γ_b`. Checked in both directions for every prefix word.
pub fn check_prefix_sets(max_len: usize, max_n: u64) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    let mut sets: HashMap<Vec<u8>, HashSet<u64>> = HashMap::new();
    'outer: {
        if max_n < 1 || max_len == 0 {
            break 'outer;
        }
        for b in prefix_words(1, max_len) {
            let m = b.len();
            let gamma = gamma_b(&b).expect("generated words are valid").dekking_form;
            let (slope_a, slope_b) = if b[m - 1] == 0 {
                (fib_i64(m), fib_i64(m - 1))
            } else {
                (fib_i64(m + 1), fib_i64(m))
            };
            let mut members = HashSet::new();
            let mut n = 1i64;
            loop {
                let v = slope_a * floor_phi(n as u64) as i64 + slope_b * n + gamma;
                if v > max_n as i64 {
                    break;
                }
                if v >= 0 {
                    let v = v as u64;
                    // formula ⊆ oracle: the value's word must start with b
                    let w = zeck_encode(v);
                    let ok = b
                        .iter()
                        .enumerate()
                        .all(|(i, &d)| w.digits().get(i).copied().unwrap_or(0) == d);
                    if !ok {
                        cex = Some(format!("b={b:?}, formula value {v} lacks the prefix"));
                        break 'outer;
                    }
                    scanned += 1;
                    members.insert(v);
                }
                n += 1;
            }
            sets.insert(b, members);
        }
        // oracle ⊆ formula: each integer's prefixes must all be produced
        let mut key = Vec::with_capacity(max_len);
        for x in 0..=max_n {
            let w = zeck_encode(x);
            key.clear();
            for m in 1..=max_len {
                key.push(w.digits().get(m - 1).copied().unwrap_or(0));
                scanned += 1;
                if !sets[&key].contains(&x) {
                    cex = Some(format!("b={key:?}, x={x} has the prefix but no formula witness"));
                    break 'outer;
                }
            }
        }
    }
    CheckReport::finish(
        "prefix_sets",
        Mode::Oracle,
        format!("|b| in 1..={max_len}, x in 0..={max_n}"),
        start,
        scanned,
        cex,
    )
}

/// The two closed forms of the prefix offset `γ_b` agree for every valid
/// word up to `max_len`.
pub fn check_offset_forms(max_len: usize) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    for b in prefix_words(1, max_len) {
        scanned += 1;
        let g = gamma_b(&b).expect("generated words are valid");
        if g.dekking_form != g.t00_form || g.t00_form != -1 - g.x_b {
            cex = Some(format!("b={b:?}: {} vs {}", g.dekking_form, g.t00_form));
            break;
        }
    }
    CheckReport::finish(
        "prefix_offset_forms",
        Mode::Oracle,
        format!("|b| in 1..={max_len}"),
        start,
        scanned,
        cex,
    )
}

/// The four shift identities on generalized Beatty forms, the closed forms
/// of the single and double shift, the least-term advance law, and the
/// parity law tying the two double shifts together.
pub fn check_shift_identities(max_m: usize, shift_n: u64) -> Vec<CheckReport> {
    let mut reports = Vec::new();

    // x = (n+1) F_m + ⌊n/φ⌋ F_{m−1}, m > 3
    reports.push(scan_shift_form("shift_form_a", 4, max_m, shift_n, |m, n| {
        (
            (n + 1) * fib_u64(m) + floor_inv_phi(n) * fib_u64(m - 1),
            (n + 1) * fib_u64(m + 1) + floor_inv_phi(n) * fib_u64(m),
        )
    }));
    // x = ⌊(n+φ²)/φ⌋ F_m + n F_{m+1}, m ≥ 2
    reports.push(scan_shift_form("shift_form_b", 2, max_m, shift_n, |m, n| {
        let s = floor_inv_phi(n + 1) + 1;
        (
            s * fib_u64(m) + n * fib_u64(m + 1),
            s * fib_u64(m + 1) + n * fib_u64(m + 2),
        )
    }));
    // x = ⌊nφ⌋ F_m + n F_{m−1} − F_{m+1}, m ≥ 1, n ≥ 1
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        'outer: for m in 1..=max_m {
            for n in 1..=shift_n {
                scanned += 1;
                let x = floor_phi(n) as i64 * fib_i64(m) + n as i64 * fib_i64(m - 1)
                    - fib_i64(m + 1);
                let want = floor_phi(n) as i64 * fib_i64(m + 1) + n as i64 * fib_i64(m)
                    - fib_i64(m + 2);
                if x < 0 || want < 0 || shift_f(x as u64) != want as u64 {
                    cex = Some(format!("m={m}, n={n}"));
                    break 'outer;
                }
            }
        }
        reports.push(CheckReport::finish(
            "shift_form_c",
            Mode::Oracle,
            format!("m in 1..={max_m}, n in 1..={shift_n}"),
            start,
            scanned,
            cex,
        ));
    }
    // x = (n+1) F_m + ⌊nφ⌋ F_{m+1}, m ≥ 2
    reports.push(scan_shift_form("shift_form_d", 2, max_m, shift_n, |m, n| {
        (
            (n + 1) * fib_u64(m) + floor_phi(n) * fib_u64(m + 1),
            (n + 1) * fib_u64(m + 1) + floor_phi(n) * fib_u64(m + 2),
        )
    }));

    // shift advances the least term: sh_F(A_k) = A_{k+1}
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        for x in 1..=shift_n {
            scanned += 1;
            let p = least_zeck_pos(x).expect("positive");
            if least_zeck_pos(shift_f(x)) != Some(p + 1) {
                cex = Some(format!("x={x}"));
                break;
            }
            // converse: anything starting with a 0 is a shift
            if p >= 1 {
                let w = zeck_encode(x);
                let pre = zeck_decode(
                    &ZeckWord::from_digits(w.digits()[1..].to_vec()).expect("suffix stays valid"),
                );
                if shift_f(pre) != x || least_zeck_pos(pre) != Some(p - 1) {
                    cex = Some(format!("x={x} (preimage)"));
                    break;
                }
            }
        }
        reports.push(CheckReport::finish(
            "shift_advances_least_term",
            Mode::Oracle,
            format!("x in 1..={shift_n}"),
            start,
            scanned,
            cex,
        ));
    }

    // sh_F(n) = ⌊(n+1)φ⌋ − 1
    reports.push(scan_single("shift_closed_form", shift_n, |n| {
        shift_f(n) == floor_phi(n + 1) - 1
    }));
    // sh_F²(n) = ⌊(n+1)φ²⌋ − 2
    reports.push(scan_single("double_shift_closed_form", shift_n, |n| {
        shift_f2(n) == floor_phi2(n + 1) - 2
    }));
    // sh_CG²(n) = sh_F²(n) + [least index odd]
    reports.push(scan_single("double_shift_parity", shift_n, |n| {
        let bump = match parity_class(n) {
            Ok(Parity::Even) => 0,
            Ok(Parity::Odd) => 1,
            Err(_) => 0, // n = 0 shifts to 0 in both systems
        };
        shift_cg2(n) == shift_f2(n) + bump
    }));

    reports
}

fn scan_shift_form(
    id: &str,
    min_m: usize,
    max_m: usize,
    shift_n: u64,
    form: impl Fn(usize, u64) -> (u64, u64),
) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    'outer: for m in min_m..=max_m {
        for n in 0..=shift_n {
            scanned += 1;
            let (x, want) = form(m, n);
            if shift_f(x) != want {
                cex = Some(format!("m={m}, n={n}"));
                break 'outer;
            }
        }
    }
    CheckReport::finish(
        id,
        Mode::Oracle,
        format!("m in {min_m}..={max_m}, n in 0..={shift_n}"),
        start,
        scanned,
        cex,
    )
}

fn scan_single(id: &str, shift_n: u64, ok: impl Fn(u64) -> bool) -> CheckReport {
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut cex = None;
    for n in 0..=shift_n {
        scanned += 1;
        if !ok(n) {
            cex = Some(format!("n={n}"));
            break;
        }
    }
    CheckReport::finish(
        id,
        Mode::Oracle,
        format!("n in 0..={shift_n}"),
        start,
        scanned,
        cex,
    )
}

/// The Chung-Graham side of the suite: the even-split of the least-index
/// classes, the tail bound on integers starting with a CG zero, the closed
/// forms for the `B` sets and their avoid/split/gap/intersection laws.
pub fn check_cg_suite(max_k: u32, max_n: u64, pair_n: u64) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let max_k = max_k as usize;

    let sc_set: HashSet<u64> = {
        let mut s = HashSet::new();
        let mut m = 0u64;
        loop {
            let v = 2 * floor_phi(m) + m + 1;
            if v > max_n {
                break;
            }
            s.insert(v);
            m += 1;
        }
        s
    };
    let starts_with_zero = |x: u64| matches!(least_cg_pos(x), Some((p, _)) if p >= 1);

    // disjointness probe: the sums-complement sequence never starts with a
    // CG zero, so this scan is expected to find nothing
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        for x in 1..=max_n {
            scanned += 1;
            if sc_set.contains(&x) && starts_with_zero(x) {
                cex = Some(format!("x={x}"));
                break;
            }
        }
        reports.push(CheckReport::finish(
            "even_split_disjoint",
            Mode::Oracle,
            format!("x in 1..={max_n} (probe expected to find no overlap)"),
            start,
            scanned,
            cex,
        ));
    }

    // F_even = sc ∪ (positives starting with a CG zero)
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        for x in 1..=max_n {
            scanned += 1;
            let even = parity_class(x) == Ok(Parity::Even);
            if even != (sc_set.contains(&x) || starts_with_zero(x)) {
                cex = Some(format!("x={x}"));
                break;
            }
        }
        reports.push(CheckReport::finish(
            "even_split_union",
            Mode::Oracle,
            format!("x in 1..={max_n}"),
            start,
            scanned,
            cex,
        ));
    }

    // positives starting with a CG zero ⊆ {⌊n/φ⌋ + n : n ≥ 1}
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        let mut rhs = vec![false; max_n as usize + 1];
        let mut n = 1u64;
        loop {
            let v = floor_inv_phi(n) + n;
            if v > max_n {
                break;
            }
            rhs[v as usize] = true;
            n += 1;
        }
        let mut extra = None;
        for x in 1..=max_n {
            scanned += 1;
            let lhs = starts_with_zero(x);
            if lhs && !rhs[x as usize] {
                cex = Some(format!("x={x}"));
                break;
            }
            if rhs[x as usize] && !lhs && extra.is_none() {
                extra = Some(x);
            }
        }
        let properness = match extra {
            Some(e) => format!("; proper, smallest extra element {e}"),
            None => "; not proper in range".to_string(),
        };
        reports.push(CheckReport::finish(
            "cg_zero_start_bound",
            Mode::Oracle,
            format!("x in 1..={max_n}{properness}"),
            start,
            scanned,
            cex,
        ));
    }

    // B_{2k} = {(n+1) F_{2k} + ⌊n/φ⌋ F_{2k−1} : n ≥ 0}
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        'outer: for k in 1..=max_k {
            let (f2k, f2km1) = (fib_u64(2 * k), fib_u64(2 * k - 1));
            let mut marked = vec![false; max_n as usize + 1];
            let mut n = 0u64;
            loop {
                let v = (n + 1) * f2k + floor_inv_phi(n) * f2km1;
                if v > max_n {
                    break;
                }
                marked[v as usize] = true;
                n += 1;
            }
            for x in 1..=max_n {
                scanned += 1;
                let in_set = matches!(least_cg_pos(x), Some((p, _)) if p == 2 * k - 2);
                if in_set != marked[x as usize] {
                    cex = Some(format!("k={k}, x={x}"));
                    break 'outer;
                }
            }
        }
        reports.push(CheckReport::finish(
            "cg_least_sets",
            Mode::Oracle,
            format!("k in 1..={max_k}, x in 1..={max_n}"),
            start,
            scanned,
            cex,
        ));
    }

    // avoiding both F_{2k} and 2F_{2k}:
    // {1..F_{2k}−1} ∪ {j + (n+1) F_{2m} + ⌊n/φ⌋ F_{2m−1} : j < F_{2k}, m > k}
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        'outer: for k in 1..=max_k {
            let f2k = fib_u64(2 * k);
            let mut marked = vec![false; max_n as usize + 1];
            for j in 1..f2k.min(max_n + 1) {
                marked[j as usize] = true;
            }
            let mut m = k + 1;
            while fib_u64(2 * m) <= max_n {
                let (f2m, f2mm1) = (fib_u64(2 * m), fib_u64(2 * m - 1));
                let mut n = 0u64;
                'gen: loop {
                    let base = (n + 1) * f2m + floor_inv_phi(n) * f2mm1;
                    if base > max_n {
                        break 'gen;
                    }
                    for j in 0..f2k {
                        let v = base + j;
                        if v > max_n {
                            break;
                        }
                        marked[v as usize] = true;
                    }
                    n += 1;
                }
                m += 1;
            }
            for x in 1..=max_n {
                scanned += 1;
                let avoids = cg_digit(x, 2 * k - 2) == 0;
                if avoids != marked[x as usize] {
                    cex = Some(format!("k={k}, x={x}"));
                    break 'outer;
                }
            }
        }
        reports.push(CheckReport::finish(
            "cg_avoid_sets",
            Mode::Oracle,
            format!("k in 1..={max_k}, x in 1..={max_n}"),
            start,
            scanned,
            cex,
        ));
    }

    // which n in the B_{2k} formula land in the least-digit-1 and
    // least-digit-2 subclasses; the digit-2 case is checked directly rather
    // than through complementarity of the two index sequences
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        let bound = max_n as usize + 2;
        let mut lower1 = vec![false; bound];
        let mut upper1 = vec![false; bound];
        let mut m = 1u64;
        while (floor_phi(m) + 1) < bound as u64 {
            lower1[floor_phi(m) as usize + 1] = true;
            m += 1;
        }
        let mut m = 0u64;
        while (floor_phi2(m) + 1) < bound as u64 {
            upper1[floor_phi2(m) as usize + 1] = true;
            m += 1;
        }
        'outer: for k in 1..=max_k {
            let (f2k, f2km1) = (fib_u64(2 * k), fib_u64(2 * k - 1));
            let mut n = 0u64;
            loop {
                let v = (n + 1) * f2k + floor_inv_phi(n) * f2km1;
                if v > max_n {
                    break;
                }
                scanned += 1;
                let digit = match least_cg_pos(v) {
                    Some((p, d)) if p == 2 * k - 2 => d,
                    other => {
                        cex = Some(format!("k={k}, n={n}: least position {other:?}"));
                        break 'outer;
                    }
                };
                let want1 = n == 0 || lower1[n as usize];
                let want2 = upper1[n as usize];
                if (digit == 1) != want1 || (digit == 2) != want2 {
                    cex = Some(format!("k={k}, n={n}"));
                    break 'outer;
                }
                n += 1;
            }
        }
        reports.push(CheckReport::finish(
            "cg_least_split",
            Mode::Oracle,
            format!("k in 1..={max_k}, values up to {max_n}; digit-2 case checked directly"),
            start,
            scanned,
            cex,
        ));
    }

    // x ∈ A_{2k}, y ∈ B^{(1)}_{2k} forces x = y or |x − y| ≥ F_{2k}
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        'outer: for k in 1..=max_k {
            let f2k = fib_u64(2 * k);
            let list_a: Vec<u64> = (1..=pair_n)
                .filter(|&x| least_zeck_pos(x) == Some(2 * k - 2))
                .collect();
            let list_b: Vec<u64> = (1..=pair_n)
                .filter(|&y| least_cg_pos(y) == Some((2 * k - 2, 1)))
                .collect();
            for &x in &list_a {
                for &y in &list_b {
                    scanned += 1;
                    if x != y && x.abs_diff(y) < f2k {
                        cex = Some(format!("k={k}, x={x}, y={y}"));
                        break 'outer;
                    }
                }
            }
        }
        reports.push(CheckReport::finish(
            "gap_lemma",
            Mode::Oracle,
            format!("k in 1..={max_k}, pairs in 1..={pair_n}"),
            start,
            scanned,
            cex,
        ));
    }

    // A_{2k} ∩ B^{(1)}_{2k} = {n F_{2k} + ⌊(n−1)φ⌋ F_{2k+1} : n > 0}
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        'outer: for k in 1..=max_k {
            let (f2k, f2kp1) = (fib_u64(2 * k), fib_u64(2 * k + 1));
            let mut marked = vec![false; max_n as usize + 1];
            let mut n = 1u64;
            loop {
                let v = n * f2k + floor_phi(n - 1) * f2kp1;
                if v > max_n {
                    break;
                }
                marked[v as usize] = true;
                n += 1;
            }
            for x in 1..=max_n {
                scanned += 1;
                let in_set = least_zeck_pos(x) == Some(2 * k - 2)
                    && least_cg_pos(x) == Some((2 * k - 2, 1));
                if in_set != marked[x as usize] {
                    cex = Some(format!("k={k}, x={x}"));
                    break 'outer;
                }
            }
        }
        reports.push(CheckReport::finish(
            "shared_term_core",
            Mode::Oracle,
            format!("k in 1..={max_k}, x in 1..={max_n}"),
            start,
            scanned,
            cex,
        ));
    }

    // integers with the part F_{2k} in both representations:
    // {j + n F_{2k} + ⌊(n−1)φ⌋ F_{2k+1} : 0 ≤ j < F_{2k−1}, n > 0}
    {
        let start = Instant::now();
        let mut scanned = 0u64;
        let mut cex = None;
        'outer: for k in 1..=max_k {
            let (f2k, f2km1, f2kp1) = (fib_u64(2 * k), fib_u64(2 * k - 1), fib_u64(2 * k + 1));
            let mut marked = vec![false; max_n as usize + 1];
            let mut n = 1u64;
            'gen: loop {
                let base = n * f2k + floor_phi(n - 1) * f2kp1;
                if base > max_n {
                    break 'gen;
                }
                for j in 0..f2km1 {
                    let v = base + j;
                    if v > max_n {
                        break;
                    }
                    marked[v as usize] = true;
                }
                n += 1;
            }
            for x in 1..=max_n {
                scanned += 1;
                let in_set = zeck_digit(x, 2 * k - 2) == 1 && cg_digit(x, 2 * k - 2) == 1;
                if in_set != marked[x as usize] {
                    cex = Some(format!("k={k}, x={x}"));
                    break 'outer;
                }
            }
        }
        reports.push(CheckReport::finish(
            "shared_term_sets",
            Mode::Oracle,
            format!("k in 1..={max_k}, x in 1..={max_n}"),
            start,
            scanned,
            cex,
        ));
    }

    reports
}
