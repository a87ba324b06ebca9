//! The transcribed decision-procedure propositions, each with its expected
//! truth value, run through the logic engine.

use std::time::Instant;

use crate::logic::{LineOutcome, Session};
use crate::relations::builtin_env;

use super::{CheckReport, Mode};

/// One sentence for the decision engine together with the truth value it
/// is expected to produce.
#[derive(Debug, Clone, Copy)]
pub struct Proposition {
    pub name: &'static str,
    pub source: &'static str,
    pub expected: bool,
}

/// Auxiliary relations the propositions refer to, defined in order.
pub fn definitions() -> &'static [(&'static str, &'static str)] {
    &[
        // z measures how far the two double shifts disagree at m
        (
            "shdiff",
            "?lsd_fib En,r,w,x $fibcg(m,?lsd_cg w) & $fibsh2(m,n) & \
             $cgsh2(?lsd_cg w,?lsd_cg x) & $fibcg(r, ?lsd_cg x) & r = n + z",
        ),
        // n values of the B_2 formula landing in the least-digit-1 subclass
        (
            "thm161",
            "?lsd_fib Ex,y,z $noverphilsd(n,y) & x = (n+1) + y \
             & $fibcg(x, ?lsd_cg z) & $b21(?lsd_cg z)",
        ),
        // same for the B_4 formula
        (
            "thm162",
            "?lsd_fib Ex,y,z $noverphilsd(n,y) & x = (3*n+3) + 2*y \
             & $fibcg(x, ?lsd_cg z) & $b41(?lsd_cg z)",
        ),
    ]
}

/// The full proposition list: 14 TRUE sentences and one deliberately FALSE
/// disjointness probe.
pub fn propositions() -> &'static [Proposition] {
    &[
        // guarded at m > 0: zero is in neither parity class but both double
        // shifts fix it, so the unguarded sentence fails only there
        Proposition {
            name: "shift_even",
            source: "?lsd_fib Am (m>0) => ($fibeven(m) <=> $shdiff(m,0))",
            expected: true,
        },
        Proposition {
            name: "shift_odd",
            source: "?lsd_fib Am ($fibodd(m) <=> $shdiff(m,1))",
            expected: true,
        },
        Proposition {
            name: "least_term_base",
            source: "?lsd_fib Ay $a2(y) <=> (En,x $noverphilsd(n+1,x) & y=x+1+2*n)",
            expected: true,
        },
        Proposition {
            name: "zero_run_base",
            source: "?lsd_fib Ax (En,y $phinlsd(n,y) & x = y+n-2) <=> $u2(x)",
            expected: true,
        },
        Proposition {
            name: "even_split_disjoint",
            source: "?lsd_fib Ex,y $sc(x) & $fibcg(x, ?lsd_cg y) & $cg0(?lsd_cg y)",
            expected: false,
        },
        Proposition {
            name: "even_split_union",
            source: "?lsd_fib Ax (x>0 & $fibeven(x)) <=> \
                     (x>0 & ($sc(x)|(Ey $fibcg(x, ?lsd_cg y) & $cg0(?lsd_cg y))))",
            expected: true,
        },
        Proposition {
            name: "cg_tail_bound",
            source: "?lsd_fib Ax (Ey $fibcg(x, ?lsd_cg y) & $cg0(?lsd_cg y)) \
                     => (Em,n $noverphilsd(m,n) & (x=n+m))",
            expected: true,
        },
        Proposition {
            name: "cg_least_base1",
            source: "?lsd_fib Ax (En,y $noverphilsd(n,y) & x = n+1+y) \
                     <=> (Ez $fibcg(x, ?lsd_cg z) & $b2(?lsd_cg z))",
            expected: true,
        },
        Proposition {
            name: "cg_least_base2",
            source: "?lsd_fib Ax (En,y $noverphilsd(n,y) & x = 3*n+3+2*y) \
                     <=> (Ez $fibcg(x, ?lsd_cg z) & $b4(?lsd_cg z))",
            expected: true,
        },
        Proposition {
            name: "cg_split_base1",
            source: "?lsd_fib An $thm161(n) <=> (n=0|(Em (m>0) & $phinlsd(m,n-1)))",
            expected: true,
        },
        Proposition {
            name: "cg_split_base2",
            source: "?lsd_fib An $thm162(n) <=> (n=0|(Em (m>0) & $phinlsd(m,n-1)))",
            expected: true,
        },
        Proposition {
            name: "gap_above",
            source: "?lsd_fib Aw,x,y,z ($a2k(x) & $b2k(?lsd_cg y) & \
                     $samek(x, ?lsd_cg y) & $mk(w,x) & $fibcg(z, ?lsd_cg y) & x<z) \
                     => z>=w+x",
            expected: true,
        },
        Proposition {
            name: "gap_below",
            source: "?lsd_fib Aw,x,y,z ($a2k(x) & $b2k(?lsd_cg y) & \
                     $samek(x, ?lsd_cg y) & $mk(w,x) & $fibcg(z, ?lsd_cg y) & x>z) \
                     => x>z+w",
            expected: true,
        },
        Proposition {
            name: "shared_term_base",
            source: "?lsd_fib Ax (Ey $a2(x) & $fibcg(x,?lsd_cg y) & \
                     $b21(?lsd_cg y)) <=> (En,z n>0 & $phinlsd(n-1,z) & x=n+2*z)",
            expected: true,
        },
        Proposition {
            name: "no_least_term",
            source: "?lsd_fib Ax (x>0) => \
                     (~$a2(x) <=> (En (n>=2) & Ey $phinlsd(n,y) & x+1=y))",
            expected: true,
        },
    ]
}

/// Run every proposition through a fresh session and report whether each
/// verdict matches its expected truth value.
pub fn check_propositions() -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let setup = Instant::now();
    let mut session = match builtin_env() {
        Ok(env) => Session::new(env),
        Err(e) => {
            return vec![CheckReport::finish(
                "prop_setup",
                Mode::Automata,
                "builtin construction".to_string(),
                setup,
                1,
                Some(format!("failed to build the environment: {e}")),
            )];
        }
    };
    for (name, body) in definitions() {
        let line = format!("def {name} \"{body}\"");
        if let Err(e) = session.run_line(&line) {
            return vec![CheckReport::finish(
                "prop_setup",
                Mode::Automata,
                "auxiliary definitions".to_string(),
                setup,
                1,
                Some(format!("def {name} failed: {e}")),
            )];
        }
    }
    for prop in propositions() {
        let start = Instant::now();
        let line = format!("eval {} \"{}\"", prop.name, prop.source);
        let cex = match session.run_line(&line) {
            Ok(LineOutcome::Evaluated { truth, .. }) if truth == prop.expected => None,
            Ok(LineOutcome::Evaluated { truth, .. }) => {
                Some(format!("evaluated to {truth}, expected {}", prop.expected))
            }
            Ok(other) => Some(format!("unexpected outcome {other:?}")),
            Err(e) => Some(format!("evaluation error: {e}")),
        };
        reports.push(CheckReport::finish(
            &format!("prop_{}", prop.name),
            Mode::Automata,
            format!("expected {}", if prop.expected { "TRUE" } else { "FALSE" }),
            start,
            1,
            cex,
        ));
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paperlab::Verdict;

    #[test]
    fn proposition_count_and_expectations() {
        let props = propositions();
        assert_eq!(props.len(), 15);
        assert_eq!(props.iter().filter(|p| !p.expected).count(), 1);
    }

    #[test]
    fn all_propositions_match_expected_truth() {
        for r in check_propositions() {
            assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", r.id, r.counterexample);
        }
    }
}
