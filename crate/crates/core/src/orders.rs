//! Closed-form orders of `P(D_m)` and `Λ(D_m)`.
//!
//! Three independent routes are provided and must agree:
//!
//! * [`order_by_central_series`]: `m (1/|Z_1| + Σ_{i=1}^{t-1} 1/|Z_i|)`,
//! * [`order_simplified`]: the same sum evaluated in closed form per case,
//! * [`order_historical`]: the older case-by-case formulas, with their own
//!   literal definitions of the exponents involved.

use serde::{Deserialize, Serialize};

use crate::central::center_order;
use crate::modular::{is_prime, multiplier_profile, orbit_profile, prime_factors};
use crate::{residue, Error, GroupParams, Result, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderFormula {
    CentralSeries,
    Simplified,
    /// `m (k + 1)` with `k` the least positive `k` with `(±2)^k ≡ 1`; odd `m`.
    OddClosedForm,
    /// `2^ell + 2^(ell-1) - 2`; `m = 2^ell`.
    TwoPowerClosedForm,
    /// `n (2^ell + 2^(ell-1) - 2 + k - ell)` with `k` the least `k > ell`
    /// with `(±2)^k ≡ (±2)^ell`; even `m` with `n > 1`.
    EvenClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoStatus {
    Isomorphic,
    NotIsomorphic,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub m: u64,
    pub p_order: u64,
    pub lambda_order: u64,
    /// Upper limit `t` of the central-series sum (which runs to `t - 1`).
    pub t_right: u64,
    pub t_left: u64,
    pub formula_used: OrderFormula,
    /// Cross-check formula that also applies to this `m`.
    pub cross_check: OrderFormula,
    /// `P(D_m) ≅ Λ(D_m)` according to the odd-prime criterion.
    pub iso: IsoStatus,
    /// The central-series formula is established for `m > 3` only; the
    /// values for `m = 3` are confirmed by the closure oracles instead.
    pub oracle_only: bool,
}

/// `t` in `m (1/|Z_1| + Σ_{i=1}^{t-1} 1/|Z_i|)`: `1 + ord_m(x)` for odd `m`,
/// `ell + per_m(x)` for even `m` with `n > 1`, and `ell` for `m = 2^ell`.
pub fn formula_length(side: Side, g: &GroupParams) -> u64 {
    let profile = multiplier_profile(side, g);
    let ell = g.ell() as u64;
    if ell == 0 {
        1 + profile.order.expect("±2 is a unit modulo odd m")
    } else if !g.is_two_power() {
        ell + profile.period
    } else {
        ell
    }
}

pub fn order_by_central_series(side: Side, g: &GroupParams) -> Result<u64> {
    let m = g.m();
    let term = |i: usize| -> Result<u64> {
        let z = center_order(i, g);
        if !m.is_multiple_of(z) {
            return Err(Error::Consistency(format!(
                "|Z_{i}(D_{m})| = {z} does not divide m"
            )));
        }
        Ok(m / z)
    };
    let t = formula_length(side, g);
    let mut total = term(1)?;
    for i in 1..t as usize {
        total += term(i)?;
    }
    Ok(total)
}

pub fn order_simplified(side: Side, g: &GroupParams) -> u64 {
    let profile = multiplier_profile(side, g);
    let two = g.two_part();
    if g.ell() == 0 {
        g.m() * (profile.order.expect("unit") + 1)
    } else if !g.is_two_power() {
        g.odd_part() * (two + two / 2 - 2 + profile.period)
    } else {
        two + two / 2 - 2
    }
}

fn pow_mod(x: u64, mut e: u64, m: u64) -> u64 {
    let (mut base, mut acc) = (x % m, 1 % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Which case-by-case formula covers `m`.
pub fn historical_formula(g: &GroupParams) -> OrderFormula {
    if g.ell() == 0 {
        OrderFormula::OddClosedForm
    } else if g.is_two_power() {
        OrderFormula::TwoPowerClosedForm
    } else {
        OrderFormula::EvenClosedForm
    }
}

/// The case-by-case formulas, each exponent found by a literal search.
pub fn order_historical(side: Side, g: &GroupParams) -> u64 {
    let m = g.m();
    let x = residue(side.multiplier(), m);
    let ell = g.ell() as u64;
    let two = g.two_part();
    match historical_formula(g) {
        OrderFormula::OddClosedForm => {
            let k = (1..=m)
                .find(|&k| pow_mod(x, k, m) == 1 % m)
                .expect("±2 is a unit modulo odd m");
            m * (k + 1)
        }
        OrderFormula::TwoPowerClosedForm => two + two / 2 - 2,
        _ => {
            let target = pow_mod(x, ell, m);
            let k = (ell + 1..=ell + m)
                .find(|&k| pow_mod(x, k, m) == target)
                .expect("powers of ±2 cycle within m steps");
            g.odd_part() * (two + two / 2 - 2 + k - ell)
        }
    }
}

/// `ord_p(2) ≡ 0 (mod 4)` for every odd prime `p | m`; vacuous for `m = 2^ell`.
pub fn iso_criterion_holds(g: &GroupParams) -> bool {
    prime_factors(g.m())
        .into_iter()
        .filter(|&p| p != 2)
        .all(|p| orbit_profile(2, p).order.expect("2 is a unit mod odd p").is_multiple_of(4))
}

fn check_odd_prime(p: u64) -> Result<GroupParams> {
    if p == 2 || !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not an odd prime")));
    }
    GroupParams::new(p)
}

/// Whether `|P(D_p)| = |P(D_2p)|` and `|Λ(D_p)| = |Λ(D_2p)|`.
pub fn prime_doubling_preserves_orders(p: u64) -> Result<bool> {
    let g = check_odd_prime(p)?;
    let g2 = GroupParams::new(2 * p)?;
    for side in Side::BOTH {
        if order_by_central_series(side, &g)? != order_by_central_series(side, &g2)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the `side` semigroups of `D_p` and `D_q` have the same order.
/// For odd primes this happens only when `p = q`.
pub fn prime_orders_coincide(side: Side, p: u64, q: u64) -> Result<bool> {
    let gp = check_odd_prime(p)?;
    let gq = check_odd_prime(q)?;
    Ok(order_by_central_series(side, &gp)? == order_by_central_series(side, &gq)?)
}

/// All routes for one `m`; fails if any two disagree.
pub fn order_report(g: &GroupParams) -> Result<OrderReport> {
    let mut orders = [0u64; 2];
    for (slot, side) in orders.iter_mut().zip(Side::BOTH) {
        let primary = order_by_central_series(side, g)?;
        let simplified = order_simplified(side, g);
        let historical = order_historical(side, g);
        if primary != simplified || primary != historical {
            return Err(Error::Consistency(format!(
                "m = {}, {side}: central series {primary}, simplified {simplified}, \
                 case formula {historical}",
                g.m()
            )));
        }
        *slot = primary;
    }
    Ok(OrderReport {
        m: g.m(),
        p_order: orders[0],
        lambda_order: orders[1],
        t_right: formula_length(Side::Right, g),
        t_left: formula_length(Side::Left, g),
        formula_used: OrderFormula::CentralSeries,
        cross_check: historical_formula(g),
        iso: if iso_criterion_holds(g) {
            IsoStatus::Isomorphic
        } else {
            IsoStatus::NotIsomorphic
        },
        oracle_only: g.m() <= 3,
    })
}
