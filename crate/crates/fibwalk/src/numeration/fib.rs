use std::sync::RwLock;

use num_bigint::BigUint;

/// Extend-only cache of Fibonacci numbers at arbitrary precision.
///
/// `values[0] = 0`, `values[1] = 1`, `values[m+1] = values[m] + values[m-1]`.
/// Growth takes a write lock; lookups of already-computed entries only take
/// the read lock, so concurrent readers never block each other.
pub struct FibCache {
    values: RwLock<Vec<BigUint>>,
}

impl FibCache {
    pub fn new() -> Self {
        FibCache {
            values: RwLock::new(vec![BigUint::from(0u32), BigUint::from(1u32)]),
        }
    }

    pub fn get(&self, m: usize) -> BigUint {
        {
            let values = self.values.read().unwrap();
            if m < values.len() {
                return values[m].clone();
            }
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= m {
            let next = &values[values.len() - 1] + &values[values.len() - 2];
            values.push(next);
        }
        values[m].clone()
    }
}

impl Default for FibCache {
    fn default() -> Self {
        Self::new()
    }
}

fn global_cache() -> &'static FibCache {
    static CACHE: std::sync::OnceLock<FibCache> = std::sync::OnceLock::new();
    CACHE.get_or_init(FibCache::new)
}

/// `F_m` at arbitrary precision.
pub fn fib(m: usize) -> BigUint {
    global_cache().get(m)
}

const FIB_U64_MAX_INDEX: usize = 92;

fn fib_u64_table() -> &'static [u64; FIB_U64_MAX_INDEX + 1] {
    static TABLE: std::sync::OnceLock<[u64; FIB_U64_MAX_INDEX + 1]> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0u64; FIB_U64_MAX_INDEX + 1];
        t[1] = 1;
        for m in 2..=FIB_U64_MAX_INDEX {
            t[m] = t[m - 1] + t[m - 2];
        }
        t
    })
}

/// `F_m` as a `u64`. Panics if `m > 92` (the largest index that fits).
pub fn fib_u64(m: usize) -> u64 {
    fib_u64_table()[m]
}

/// `F_m` as an `i64`. Panics if `m > 91`.
pub fn fib_i64(m: usize) -> i64 {
    i64::try_from(fib_u64(m)).expect("F_m out of i64 range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases_and_recurrence() {
        assert_eq!(fib(0), BigUint::from(0u32));
        assert_eq!(fib(1), BigUint::from(1u32));
        assert_eq!(fib(2), BigUint::from(1u32));
        assert_eq!(fib(7), BigUint::from(13u32));
        for m in 2..200 {
            assert_eq!(fib(m), fib(m - 1) + fib(m - 2));
        }
    }

    #[test]
    fn u64_table_matches_bigint() {
        for m in 0..=92 {
            assert_eq!(BigUint::from(fib_u64(m)), fib(m));
        }
    }

    #[test]
    fn concurrent_growth() {
        let cache = std::sync::Arc::new(FibCache::new());
        let handles: Vec<_> = (0..8)
            .map(|i| {
                let cache = cache.clone();
                std::thread::spawn(move || cache.get(500 + i * 37))
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        assert_eq!(cache.get(500), fib(500));
    }
}
