//! Stirling numbers of both kinds and Bell polynomials.
//!
//! Tables are filled once per process up to [`MAX_STIRLING`] with the
//! standard recurrences and shared read-only afterwards.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ZPoly;

pub const MAX_STIRLING: usize = 64;

type Table = Vec<Vec<BigInt>>;

fn table(next: impl Fn(&Table, usize, usize) -> BigInt) -> Table {
    let mut t: Table = vec![vec![BigInt::zero(); MAX_STIRLING + 1]; MAX_STIRLING + 1];
    t[0][0] = BigInt::from(1);
    for p in 1..=MAX_STIRLING {
        for k in 1..=p {
            t[p][k] = next(&t, p, k);
        }
    }
    t
}

fn second_kind() -> &'static Table {
    static CELL: OnceLock<Table> = OnceLock::new();
    CELL.get_or_init(|| table(|t, p, k| BigInt::from(k) * &t[p - 1][k] + &t[p - 1][k - 1]))
}

fn first_kind() -> &'static Table {
    static CELL: OnceLock<Table> = OnceLock::new();
    CELL.get_or_init(|| table(|t, p, k| BigInt::from(p - 1) * &t[p - 1][k] + &t[p - 1][k - 1]))
}

fn lookup(t: &Table, p: usize, k: usize) -> BigInt {
    assert!(p <= MAX_STIRLING, "Stirling table supports p <= {MAX_STIRLING}");
    if k > p {
        BigInt::zero()
    } else {
        t[p][k].clone()
    }
}

/// Number of partitions of a `p`-set into `k` blocks.
pub fn stirling2(p: usize, k: usize) -> BigInt {
    lookup(second_kind(), p, k)
}

/// Unsigned Stirling numbers of the first kind: permutations of `p` with `k` cycles.
pub fn stirling1_unsigned(p: usize, k: usize) -> BigInt {
    lookup(first_kind(), p, k)
}

/// `B_p(x) = sum_k S(p,k) x^k`.
pub fn bell_poly(p: usize) -> ZPoly {
    ZPoly::new((0..=p).map(|k| stirling2(p, k)).collect())
}

pub fn bell_number(p: usize) -> BigInt {
    (0..=p).map(|k| stirling2(p, k)).sum()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    // Generalized upper index so negative `n` follows the usual reflection.
    let mut num = BigInt::from(1);
    for j in 0..k {
        num *= BigInt::from(n - j);
    }
    num / factorial(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::Poly;

    fn partitions_into_blocks(p: usize, k: usize) -> u64 {
        // Restricted growth strings of length p using exactly k labels.
        fn go(pos: usize, p: usize, used: usize, k: usize) -> u64 {
            if pos == p {
                return u64::from(used == k);
            }
            (0..=used.min(k.saturating_sub(1)))
                .map(|lab| go(pos + 1, p, used.max(lab + 1), k))
                .sum()
        }
        if p == 0 {
            return u64::from(k == 0);
        }
        go(1, p, 1, k)
    }

    #[test]
    fn second_kind_matches_enumeration() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        for p in 0..=7 {
            for k in 0..=p {
                assert_eq!(stirling2(p, k), BigInt::from(partitions_into_blocks(p, k)), "S({p},{k})");
            }
        }
    }

    #[test]
    fn first_kind_expands_rising_factorial() {
        assert_eq!(stirling1_unsigned(3, 2), BigInt::from(3));
        for p in 0..=10 {
            let rising: ZPoly = Poly::rising_factorial(p);
            let from_table = ZPoly::new((0..=p).map(|k| stirling1_unsigned(p, k)).collect());
            assert_eq!(rising, from_table);
        }
    }

    #[test]
    fn second_kind_expands_power_in_falling_factorials() {
        for p in 0..=10 {
            let sum = (0..=p).fold(ZPoly::zero(), |acc, k| {
                acc + ZPoly::falling_factorial(k).scale(&stirling2(p, k))
            });
            assert_eq!(sum, ZPoly::monomial(BigInt::from(1), p));
        }
    }

    #[test]
    fn bell_values() {
        assert_eq!(bell_poly(2), ZPoly::from_ints(&[0, 1, 1]));
        assert_eq!(bell_number(5), BigInt::from(52));
        assert_eq!(stirling2(3, 5), BigInt::zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }
}
