use super::beatty::floor_phi;
use super::shift::{parity_class, Parity};
use super::words::{cg_encode, zeck_encode};
use super::NumerationError;

/// Which least-digit value selects the subclass of a `B_{2k}` set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subclass {
    Any,
    One,
    Two,
}

/// Identifier of one of the integer sets named throughout the suite.
///
/// Membership is decided purely from the digit representation (the formula
/// for `SC`); the closed forms the theorems assert are what gets *checked
/// against* these oracles, never used by them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetId {
    /// `A_k`: least Zeckendorf index exactly `k` (`k >= 2`).
    A(u32),
    /// `U_k`: Zeckendorf representation starts with `0^k` (`k >= 0`).
    U(u32),
    /// `B_{2k}` with optional least-digit subclass (`index` even, `>= 2`).
    B { index: u32, subclass: Subclass },
    /// `R_b`: Zeckendorf representation starts with the word `b`.
    R(Vec<u8>),
    /// Integers whose least Zeckendorf index is even.
    FEven,
    /// Integers whose least Zeckendorf index is odd.
    FOdd,
    /// The sums-complement sequence `sc`.
    Sc,
}

impl SetId {
    pub fn a(k: u32) -> Result<Self, NumerationError> {
        if k < 2 {
            return Err(NumerationError::BadSetIndex(format!("A_{k} needs k >= 2")));
        }
        Ok(SetId::A(k))
    }

    pub fn u(k: u32) -> Self {
        SetId::U(k)
    }

    pub fn b(index: u32, subclass: Subclass) -> Result<Self, NumerationError> {
        if index < 2 || index % 2 != 0 {
            return Err(NumerationError::BadSetIndex(format!(
                "B_{index} needs an even index >= 2"
            )));
        }
        Ok(SetId::B { index, subclass })
    }

    /// Prefix-set constructor; rejects words containing `11`.
    pub fn prefix(b: Vec<u8>) -> Result<Self, NumerationError> {
        if b.iter().any(|&d| d > 1) {
            return Err(NumerationError::BadSetIndex(
                "prefix word digits must be 0 or 1".into(),
            ));
        }
        if b.windows(2).any(|w| w == [1, 1]) {
            return Err(NumerationError::AdjacentOnes);
        }
        Ok(SetId::R(b))
    }
}

/// `sc(n) = 2⌊nφ⌋ + n + 1`, the sums-complement sequence of the upper
/// Wythoff sequence (OEIS A276885).
pub fn sc(n: u64) -> u64 {
    2 * floor_phi(n) + n + 1
}

/// Representation-based membership oracle.
pub fn member(set: &SetId, n: u64) -> bool {
    match set {
        SetId::A(k) => {
            let w = zeck_encode(n);
            w.digits().iter().position(|&d| d == 1) == Some(*k as usize - 2)
        }
        // 0 is a member of every U_k: its all-zero word matches any 0^k.
        SetId::U(k) => {
            let w = zeck_encode(n);
            match w.digits().iter().position(|&d| d == 1) {
                None => true,
                Some(i) => i >= *k as usize,
            }
        }
        SetId::B { index, subclass } => {
            let w = cg_encode(n);
            match w.digits().iter().position(|&d| d != 0) {
                None => false,
                Some(i) => {
                    i == *index as usize - 2
                        && match subclass {
                            Subclass::Any => true,
                            Subclass::One => w.digits()[i] == 1,
                            Subclass::Two => w.digits()[i] == 2,
                        }
                }
            }
        }
        SetId::R(b) => {
            let w = zeck_encode(n);
            b.iter()
                .enumerate()
                .all(|(i, &d)| w.digits().get(i).copied().unwrap_or(0) == d)
        }
        SetId::FEven => parity_class(n) == Ok(Parity::Even),
        SetId::FOdd => parity_class(n) == Ok(Parity::Odd),
        SetId::Sc => {
            // sc is strictly increasing, so scan until it passes n.
            let mut m = 0;
            loop {
                let v = sc(m);
                if v == n {
                    return true;
                }
                if v > n {
                    return false;
                }
                m += 1;
            }
        }
    }
}

/// First `count` members of a set, in increasing order.
pub fn enumerate_members(set: &SetId, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = 0u64;
    while out.len() < count {
        if member(set, n) {
            out.push(n);
        }
        n += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        assert!(member(&SetId::a(2).unwrap(), 4)); // (4)_F = 101
        assert!(!member(&SetId::u(2), 1)); // 1 = F_2
        assert!(member(&SetId::b(2, Subclass::Two).unwrap(), 5)); // (5)_CG = 201
    }

    #[test]
    fn set_constructors_validate() {
        assert!(SetId::a(1).is_err());
        assert!(SetId::b(3, Subclass::Any).is_err());
        assert!(SetId::prefix(vec![1, 1]).is_err());
        assert!(SetId::prefix(vec![1, 0, 1]).is_ok());
    }

    #[test]
    fn a_sets_partition_positive_integers() {
        for n in 1..20_000u64 {
            let hits = (2..40)
                .filter(|&k| member(&SetId::A(k), n))
                .collect::<Vec<_>>();
            assert_eq!(hits.len(), 1, "A_k partition fails at {n}");
        }
    }

    #[test]
    fn b_sets_partition_positive_integers() {
        for n in 1..20_000u64 {
            let hits = (1..20)
                .filter(|&k| {
                    member(
                        &SetId::B {
                            index: 2 * k,
                            subclass: Subclass::Any,
                        },
                        n,
                    )
                })
                .collect::<Vec<_>>();
            assert_eq!(hits.len(), 1, "B_2k partition fails at {n}");
        }
    }

    #[test]
    fn sc_first_values() {
        assert_eq!(enumerate_members(&SetId::Sc, 4), vec![1, 4, 9, 12]);
    }

    #[test]
    fn prefix_sets() {
        // R_"1" = A_2.
        for n in 0..2_000u64 {
            assert_eq!(
                member(&SetId::prefix(vec![1]).unwrap(), n),
                member(&SetId::a(2).unwrap(), n)
            );
        }
        // 0 matches any all-zero prefix.
        assert!(member(&SetId::prefix(vec![0, 0, 0]).unwrap(), 0));
    }
}
