use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact element of the ring Q(√5), stored as `p + q·√5` with rational
/// coefficients. Equality is coefficient equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExact {
    pub p: BigRational,
    pub q: BigRational,
}

impl QuadExact {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        QuadExact { p, q }
    }

    pub fn from_int(n: i64) -> Self {
        QuadExact {
            p: BigRational::from(BigInt::from(n)),
            q: BigRational::zero(),
        }
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn phi() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        QuadExact {
            p: half.clone(),
            q: half,
        }
    }

    /// ψ = −1/φ = (1 − √5)/2.
    pub fn psi() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        QuadExact {
            p: half.clone(),
            q: -half,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QuadExact::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl Add for &QuadExact {
    type Output = QuadExact;
    fn add(self, rhs: &QuadExact) -> QuadExact {
        QuadExact {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
}

impl Sub for &QuadExact {
    type Output = QuadExact;
    fn sub(self, rhs: &QuadExact) -> QuadExact {
        QuadExact {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
        }
    }
}

impl Mul for &QuadExact {
    type Output = QuadExact;
    fn mul(self, rhs: &QuadExact) -> QuadExact {
        // (p1 + q1√5)(p2 + q2√5) = p1p2 + 5q1q2 + (p1q2 + q1p2)√5
        let five = BigRational::from(BigInt::from(5));
        QuadExact {
            p: &self.p * &rhs.p + &five * &self.q * &rhs.q,
            q: &self.p * &rhs.q + &self.q * &rhs.p,
        }
    }
}

impl Neg for &QuadExact {
    type Output = QuadExact;
    fn neg(self) -> QuadExact {
        QuadExact {
            p: -self.p.clone(),
            q: -self.q.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::fib;
    use num_bigint::BigInt;

    fn big(n: &num_bigint::BigUint) -> QuadExact {
        QuadExact {
            p: BigRational::from(BigInt::from(n.clone())),
            q: BigRational::zero(),
        }
    }

    #[test]
    fn phi_satisfies_its_quadratic() {
        let phi = QuadExact::phi();
        let lhs = &phi * &phi;
        let rhs = &phi + &QuadExact::from_int(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn psi_is_minus_inverse_phi() {
        let prod = &QuadExact::phi() * &QuadExact::psi();
        assert_eq!(prod, QuadExact::from_int(-1));
    }

    #[test]
    fn binet_via_phi_powers() {
        // φ^m − ψ^m = F_m · √5
        for m in 0..60u32 {
            let diff = &QuadExact::phi().pow(m) - &QuadExact::psi().pow(m);
            let expected = QuadExact {
                p: BigRational::zero(),
                q: BigRational::from(BigInt::from(fib(m as usize))),
            };
            assert_eq!(diff, expected);
        }
    }

    #[test]
    fn fibonacci_phi_identities() {
        // F_m·φ = F_{m+1} − (−φ)^{−m} and F_m·φ² = F_{m+2} − (−φ)^{−m},
        // cleared of negative powers by multiplying through by φ^m:
        // F_m·φ^{m+1} = F_{m+1}·φ^m − (−1)^m and
        // F_m·φ^{m+2} = F_{m+2}·φ^m − (−1)^m.
        let phi = QuadExact::phi();
        for m in 1..=40u32 {
            let sign = QuadExact::from_int(if m % 2 == 0 { 1 } else { -1 });
            let fm = big(&fib(m as usize));
            let lhs1 = &fm * &phi.pow(m + 1);
            let rhs1 = &(&big(&fib(m as usize + 1)) * &phi.pow(m)) - &sign;
            assert_eq!(lhs1, rhs1, "first identity fails at m={m}");
            let lhs2 = &fm * &phi.pow(m + 2);
            let rhs2 = &(&big(&fib(m as usize + 2)) * &phi.pow(m)) - &sign;
            assert_eq!(lhs2, rhs2, "second identity fails at m={m}");
        }
    }
}
