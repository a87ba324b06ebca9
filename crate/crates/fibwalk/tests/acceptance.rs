//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`, and on any failure).

use std::time::{Duration, Instant};

use fibwalk::automata::{deserialize, serialize, to_dot, BoolOp, Dfa, NumSys};
use fibwalk::numeration::{
    cg_decode, cg_encode, fib_u64, floor_inv_phi, floor_phi, zeck_decode, zeck_encode, CgWord,
    QuadExact, ZeckWord,
};
use fibwalk::paperlab::{
    check_avoid_sets, check_cg_suite, check_complement, check_least_term_sets,
    check_offset_forms, check_prefix_sets, check_propositions, check_shift_identities,
    check_zero_prefix_sets, Verdict,
};
use fibwalk::relations::{builtin, builtin_names, linear_eq, LinearRelation};

fn conclude(criterion: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("acceptance {criterion}: pass"),
        Err(msg) => {
            println!("acceptance {criterion}: FAIL ({msg})");
            panic!("acceptance {criterion} failed: {msg}");
        }
    }
}

#[test]
fn criterion_1_codec_soundness() {
    conclude("1 (codec soundness)", (|| {
        let start = Instant::now();
        for n in 0..=1_000_000u64 {
            if zeck_decode(&zeck_encode(n)) != n {
                return Err(format!("zeck roundtrip fails at {n}"));
            }
            if cg_decode(&cg_encode(n)) != n {
                return Err(format!("cg roundtrip fails at {n}"));
            }
        }
        // uniqueness: every canonical word (no trailing zero) of bounded
        // length decodes to a distinct value, covering each n <= 10^4 once
        let limit = 10_000u64;
        let mut zeck_count = vec![0u32; limit as usize + 1];
        let mut cg_count = vec![0u32; limit as usize + 1];
        let mut layer: Vec<Vec<u8>> = vec![vec![]];
        zeck_count[0] += 1; // the empty word is the canonical form of 0
        for _ in 0..20 {
            let mut next = Vec::new();
            for w in &layer {
                for d in 0..=1u8 {
                    if d == 1 && w.last() == Some(&1) {
                        continue;
                    }
                    let mut w2 = w.clone();
                    w2.push(d);
                    if *w2.last().unwrap() != 0 {
                        let v = zeck_decode(&ZeckWord::from_digits(w2.clone()).unwrap());
                        if v <= limit {
                            zeck_count[v as usize] += 1;
                        }
                    }
                    next.push(w2);
                }
            }
            layer = next;
        }
        let cg_ok = |w: &[u8]| {
            w.iter().enumerate().all(|(i, &d)| i % 2 == 0 || d == 0) && {
                let twos: Vec<usize> =
                    w.iter().enumerate().filter(|&(_, &d)| d == 2).map(|(i, _)| i).collect();
                twos.windows(2).all(|p| {
                    (p[0] + 2..p[1]).step_by(2).any(|i| w[i] == 0)
                })
            }
        };
        let mut layer: Vec<Vec<u8>> = vec![vec![]];
        cg_count[0] += 1;
        for _ in 0..20 {
            let mut next = Vec::new();
            for w in &layer {
                for d in 0..=2u8 {
                    let mut w2 = w.clone();
                    w2.push(d);
                    if !cg_ok(&w2) {
                        continue;
                    }
                    if *w2.last().unwrap() != 0 {
                        let v = cg_decode(&CgWord::from_digits(w2.clone()).unwrap());
                        if v <= limit {
                            cg_count[v as usize] += 1;
                        }
                    }
                    next.push(w2);
                }
            }
            layer = next;
        }
        for n in 0..=limit as usize {
            if zeck_count[n] != 1 {
                return Err(format!("{n} has {} Zeckendorf words", zeck_count[n]));
            }
            if cg_count[n] != 1 {
                return Err(format!("{n} has {} Chung-Graham words", cg_count[n]));
            }
        }
        if start.elapsed() > Duration::from_secs(60) {
            return Err(format!("took {:?}, budget 60s", start.elapsed()));
        }
        Ok(())
    })());
}

#[test]
fn criterion_2_propositions() {
    conclude("2 (15 propositions, 14 TRUE + 1 FALSE)", (|| {
        let reports = check_propositions();
        if reports.len() != 15 {
            return Err(format!("expected 15 reports, got {}", reports.len()));
        }
        for r in &reports {
            if r.verdict != Verdict::Pass {
                return Err(format!("{}: {:?}", r.id, r.counterexample));
            }
            if r.elapsed > Duration::from_secs(10) {
                return Err(format!("{} took {:?}, budget 10s", r.id, r.elapsed));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_3_oracle_theorem_suite() {
    conclude("3 (oracle theorem suite)", (|| {
        let start = Instant::now();
        let (max_n, max_k, pair_n) = (50_000, 12, 2_000);
        let mut reports = vec![
            check_complement(max_n),
            check_least_term_sets(max_k, max_n),
            check_zero_prefix_sets(max_k, max_n),
            check_avoid_sets(max_k, max_n),
            check_prefix_sets(14, max_n),
        ];
        reports.extend(check_cg_suite(max_k, max_n, pair_n));
        for r in &reports {
            if r.verdict != Verdict::Pass {
                return Err(format!("{}: {:?}", r.id, r.counterexample));
            }
        }
        if start.elapsed() > Duration::from_secs(300) {
            return Err(format!("took {:?}, budget 5min", start.elapsed()));
        }
        Ok(())
    })());
}

#[test]
fn criterion_4_shift_identities() {
    conclude("4 (shift identities)", (|| {
        for r in check_shift_identities(25, 10_000) {
            if r.verdict != Verdict::Pass {
                return Err(format!("{}: {:?}", r.id, r.counterexample));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_5_offset_forms() {
    conclude("5 (prefix offset forms, |b| <= 18)", (|| {
        let r = check_offset_forms(18);
        if r.verdict != Verdict::Pass {
            return Err(format!("{:?}", r.counterexample));
        }
        Ok(())
    })());
}

#[test]
fn criterion_6_relation_synthesis() {
    conclude("6 (relation synthesis vs oracle)", (|| {
        let zz = vec![NumSys::Zeck; 3];
        let add = linear_eq(&LinearRelation::new(vec![1, 1, -1], 0, zz)).map_err(|e| e.to_string())?;
        let sys3 = [NumSys::Zeck; 3];
        for x in 0..=2_000u64 {
            for y in 0..=2_000u64 {
                if !add.member_int(&[x, y, x + y], &sys3) {
                    return Err(format!("addition rejects {x}+{y}"));
                }
                if add.member_int(&[x, y, x + y + 1], &sys3) {
                    return Err(format!("addition accepts {x}+{y}+1"));
                }
            }
        }
        let fibcg = builtin("fibcg").map_err(|e| e.to_string())?;
        for n in 0..=100_000u64 {
            if !fibcg.dfa.member_int(&[n, n], &fibcg.systems) {
                return Err(format!("fibcg rejects ({n},{n})"));
            }
        }
        for a in 0..=300u64 {
            for b in 0..=300u64 {
                if a != b && fibcg.dfa.member_int(&[a, b], &fibcg.systems) {
                    return Err(format!("fibcg accepts ({a},{b})"));
                }
            }
        }
        for (name, f) in [
            ("phinlsd", floor_phi as fn(u64) -> u64),
            ("noverphilsd", floor_inv_phi as fn(u64) -> u64),
        ] {
            let auto = builtin(name).map_err(|e| e.to_string())?;
            for n in 0..=10_000u64 {
                let v = f(n);
                if !auto.dfa.member_int(&[n, v], &auto.systems) {
                    return Err(format!("{name} rejects ({n},{v})"));
                }
                if auto.dfa.member_int(&[n, v + 1], &auto.systems) {
                    return Err(format!("{name} accepts ({n},{})", v + 1));
                }
                if v > 0 && auto.dfa.member_int(&[n, v - 1], &auto.systems) {
                    return Err(format!("{name} accepts ({n},{})", v - 1));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_7_engine_algebra() {
    conclude("7 (engine algebra on every builtin)", (|| {
        for name in builtin_names() {
            let auto = builtin(name).map_err(|e| e.to_string())?;
            let a: &Dfa = &auto.dfa;
            let err = |what: &str| format!("{name}: {what}");

            let once = a.minimize();
            if once.minimize() != once {
                return Err(err("minimization is not idempotent"));
            }
            if !a.equivalent(&a.pad_close()).map_err(|e| e.to_string())? {
                return Err(err("padding closure changes the language"));
            }
            let b = a.complement();
            let c = a.product(&b, BoolOp::Or).map_err(|e| e.to_string())?;
            let lhs = a.product(&c, BoolOp::And).map_err(|e| e.to_string())?.complement();
            let rhs = a
                .complement()
                .product(&c.complement(), BoolOp::Or)
                .map_err(|e| e.to_string())?;
            if !lhs.equivalent(&rhs).map_err(|e| e.to_string())? {
                return Err(err("De Morgan (and) fails"));
            }
            let lhs = a.product(&c, BoolOp::Or).map_err(|e| e.to_string())?.complement();
            let rhs = a
                .complement()
                .product(&c.complement(), BoolOp::And)
                .map_err(|e| e.to_string())?;
            if !lhs.equivalent(&rhs).map_err(|e| e.to_string())? {
                return Err(err("De Morgan (or) fails"));
            }

            // the single-place CG shift maps canonical words to shifted
            // words that encode no integer, so integer witnesses cannot
            // probe its projection
            if auto.systems.len() == 2 && name != "cgshift" {
                let proj = a.project(1).map_err(|e| e.to_string())?;
                let sys0 = [auto.systems[0]];
                let sys = [auto.systems[0], auto.systems[1]];
                for x in 0..=300u64 {
                    let witness = (0..=5_000u64).any(|y| a.member_int(&[x, y], &sys));
                    let accepted = proj.member_int(&[x], &sys0);
                    if witness && !accepted {
                        return Err(err(&format!("projection drops x={x}")));
                    }
                    if accepted && !witness {
                        return Err(err(&format!("projection invents x={x}")));
                    }
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_8_quadratic_identities() {
    conclude("8 (exact golden-ratio identities, m <= 40)", (|| {
        let phi = QuadExact::phi();
        let psi = QuadExact::psi();
        let phi2 = &phi * &phi;
        for m in 1..=40u32 {
            let fm = QuadExact::from_int(fib_u64(m as usize) as i64);
            let fm1 = QuadExact::from_int(fib_u64(m as usize + 1) as i64);
            let fm2 = QuadExact::from_int(fib_u64(m as usize + 2) as i64);
            // psi = -1/phi, so (-phi)^(-m) = psi^m
            let tail = psi.pow(m);
            if &fm * &phi != &fm1 - &tail {
                return Err(format!("F_m*phi identity fails at m={m}"));
            }
            if &fm * &phi2 != &fm2 - &tail {
                return Err(format!("F_m*phi^2 identity fails at m={m}"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_9_serialization() {
    conclude("9 (serialization of every builtin)", (|| {
        for name in builtin_names() {
            let auto = builtin(name).map_err(|e| e.to_string())?;
            let text = serialize(&auto.dfa);
            let back = deserialize(&text).map_err(|e| format!("{name}: {e}"))?;
            if back != auto.dfa {
                return Err(format!("{name}: deserialized automaton differs"));
            }
            let dot = to_dot(&auto.dfa);
            if !dot.starts_with("digraph") || !dot.trim_end().ends_with('}') {
                return Err(format!("{name}: DOT output is not a graph"));
            }
            let opens = dot.matches('{').count();
            if opens == 0 || opens != dot.matches('}').count() {
                return Err(format!("{name}: DOT braces unbalanced"));
            }
            for line in dot.lines().filter(|l| l.contains("->")) {
                if !line.trim_end().ends_with(';') {
                    return Err(format!("{name}: malformed DOT edge line '{line}'"));
                }
            }
        }
        Ok(())
    })());
}
