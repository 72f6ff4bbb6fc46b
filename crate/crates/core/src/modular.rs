//! Index, period and order of a residue in the multiplicative monoid `Z_m`.
//!
//! The powers `x, x^2, ...` eventually cycle: the index is the least `c` with
//! `x^c = x^(c+k)` for some `k > 0`, and the period is the least such `k`.

use serde::{Deserialize, Serialize};

use crate::{gcd, residue, GroupParams, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitProfile {
    pub x: u64,
    pub m: u64,
    pub index: u64,
    pub period: u64,
    /// Multiplicative order; present iff `x` is a unit mod `m`.
    pub order: Option<u64>,
}

/// Panics if `m == 0`.
pub fn orbit_profile(x: i64, m: u64) -> OrbitProfile {
    assert!(m > 0, "modulus must be positive");
    let x = residue(x, m);
    // first_seen[r] = exponent at which r first appeared, 0 if never
    let mut first_seen = vec![0u64; m as usize];
    let mut power = x;
    let mut exponent = 1u64;
    loop {
        let seen = first_seen[power as usize];
        if seen != 0 {
            let index = seen;
            let period = exponent - seen;
            let order = (index == 1 && gcd(x, m) == 1).then_some(period);
            return OrbitProfile {
                x,
                m,
                index,
                period,
                order,
            };
        }
        first_seen[power as usize] = exponent;
        power = (power as u128 * x as u128 % m as u128) as u64;
        exponent += 1;
    }
}

/// Orbit profile of `-2` (right) or `2` (left) modulo `m`.
pub fn multiplier_profile(side: Side, g: &GroupParams) -> OrbitProfile {
    orbit_profile(side.multiplier(), g.m())
}

/// Whether the profile of `±2` has the shape forced by the 2-adic valuation
/// of `m`: index 1 and period equal to the order for odd `m`; index `ell`
/// for even `m`; additionally period 1 when `m` is a power of two.
pub fn multiplier_profile_matches(g: &GroupParams, side: Side) -> bool {
    let p = multiplier_profile(side, g);
    if g.ell() == 0 {
        p.index == 1 && p.order == Some(p.period)
    } else if !g.is_two_power() {
        p.index == g.ell() as u64
    } else {
        p.index == g.ell() as u64 && p.period == 1
    }
}

/// `x u ≡ x v (mod x y)`. Equivalent to `u ≡ v (mod y)` for positive `x`, `y`.
pub fn cancel_congruence(x: u64, u: i64, v: i64, y: u64) -> bool {
    let modulus = x as i128 * y as i128;
    (x as i128 * (u as i128 - v as i128)).rem_euclid(modulus) == 0
}

/// Trial division; desk scale only.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_examples() {
        let p = orbit_profile(2, 7);
        assert_eq!((p.index, p.period, p.order), (1, 3, Some(3)));
        let p = orbit_profile(-2, 8);
        assert_eq!((p.x, p.index, p.period, p.order), (6, 3, 1, None));
        let p = orbit_profile(2, 12);
        assert_eq!((p.index, p.period, p.order), (2, 2, None));
    }

    #[test]
    fn degenerate_residues() {
        let p = orbit_profile(0, 6);
        assert_eq!((p.index, p.period, p.order), (1, 1, None));
        let p = orbit_profile(1, 6);
        assert_eq!((p.index, p.period, p.order), (1, 1, Some(1)));
        // idempotent non-unit
        let p = orbit_profile(4, 6);
        assert_eq!((p.index, p.period, p.order), (1, 1, None));
        let p = orbit_profile(5, 1);
        assert_eq!((p.index, p.period), (1, 1));
    }

    #[test]
    fn multiplier_profile_examples() {
        let g = GroupParams::new(15).unwrap();
        assert!(multiplier_profile_matches(&g, Side::Right));
        assert_eq!(multiplier_profile(Side::Right, &g).index, 1);
        let g = GroupParams::new(16).unwrap();
        assert!(multiplier_profile_matches(&g, Side::Left));
        let p = multiplier_profile(Side::Left, &g);
        assert_eq!((p.index, p.period), (4, 1));
        let g = GroupParams::new(20).unwrap();
        assert!(multiplier_profile_matches(&g, Side::Right));
        assert_eq!(multiplier_profile(Side::Right, &g).index, 2);
    }

    #[test]
    fn cancel_examples() {
        assert!(cancel_congruence(2, 3, 8, 5));
        assert!(!cancel_congruence(3, 1, 2, 4));
        for u in -5..5 {
            for v in -5..5 {
                assert_eq!(cancel_congruence(1, u, v, 3), (u - v).rem_euclid(3) == 0);
            }
        }
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(prime_factors(97), vec![97]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
    }
}
