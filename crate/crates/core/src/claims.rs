//! Reproducible checks of the published counterexamples and prime sweeps.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::closure::{close_pairs, close_raw, search_isomorphism, verify_iso_map, IsoOutcome, DEFAULT_BUDGET};
use crate::modular::is_prime;
use crate::orders::{iso_criterion_holds, order_by_central_series, prime_doubling_preserves_orders};
use crate::{GroupParams, MuCanonical, Result, Side};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn claim(name: &'static str, passed: bool, detail: String) -> Claim {
    Claim { name, passed, detail }
}

fn pairs(side: Side, m: u64) -> Result<BTreeSet<MuCanonical>> {
    let g = GroupParams::new(m)?;
    Ok(close_pairs(side, &g)?.canonical_set().expect("pair summary"))
}

fn search(m1: u64, side1: Side, m2: u64, side2: Side) -> Result<IsoOutcome> {
    let s1 = close_pairs(side1, &GroupParams::new(m1)?)?;
    let s2 = close_pairs(side2, &GroupParams::new(m2)?)?;
    search_isomorphism(&s1, &s2, DEFAULT_BUDGET)
}

fn odd_primes_below(n: u64) -> impl Iterator<Item = u64> {
    (3..n).filter(|&p| is_prime(p))
}

pub fn d3_anchor() -> Result<Claim> {
    let g = GroupParams::new(3)?;
    let (p, l) = (close_raw(Side::Right, &g)?.size, close_raw(Side::Left, &g)?.size);
    Ok(claim("D_3 anchor orders (raw tables)", (p, l) == (6, 9), format!("|P| = {p}, |Λ| = {l}")))
}

pub fn d8_equal_orders() -> Result<Claim> {
    let (p, l) = (pairs(Side::Right, 8)?, pairs(Side::Left, 8)?);
    Ok(claim(
        "D_8 equal orders",
        p.len() == 10 && l.len() == 10,
        format!("{} = {}", p.len(), l.len()),
    ))
}

pub fn d8_distinct_sets() -> Result<Claim> {
    let (p, l) = (pairs(Side::Right, 8)?, pairs(Side::Left, 8)?);
    let neither = !p.is_subset(&l) && !l.is_subset(&p);
    Ok(claim(
        "D_8 P ≠ Λ and neither contains the other",
        p != l && neither,
        format!(
            "P \\ Λ has {}, Λ \\ P has {} elements",
            p.difference(&l).count(),
            l.difference(&p).count()
        ),
    ))
}

pub fn d8_explicit_isomorphism() -> Result<Claim> {
    let g = GroupParams::new(8)?;
    let check = verify_iso_map(&g, Side::Right, Side::Left, |x, y| (3 * x as i64, y as i64))?;
    Ok(claim("D_8 μ(x, y) ↦ μ(3x, y) is an isomorphism P → Λ", check.holds(), format!("{check:?}")))
}

pub fn d8_search() -> Result<Claim> {
    let outcome = search(8, Side::Right, 8, Side::Left)?;
    Ok(claim(
        "D_8 P ≅ Λ found by search",
        matches!(outcome, IsoOutcome::Isomorphic { .. }),
        outcome.label().to_string(),
    ))
}

pub fn d15_not_isomorphic() -> Result<Claim> {
    let g = GroupParams::new(15)?;
    let (p, l) = (close_pairs(Side::Right, &g)?, close_pairs(Side::Left, &g)?);
    let outcome = search_isomorphism(&p, &l, DEFAULT_BUDGET)?;
    let criterion = iso_criterion_holds(&g);
    Ok(claim(
        "D_15 equal orders but P ≇ Λ",
        p.size == 75 && l.size == 75 && matches!(outcome, IsoOutcome::NotIsomorphic { .. }) && !criterion,
        format!(
            "|P| = {}, |Λ| = {}, search: {}, criterion: {criterion}",
            p.size,
            l.size,
            outcome.label()
        ),
    ))
}

pub fn doubling_isomorphisms() -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for (side, name) in [
        (Side::Right, "P(D_10) ≅ P(D_5) found by search"),
        (Side::Left, "Λ(D_10) ≅ Λ(D_5) found by search"),
    ] {
        let outcome = search(10, side, 5, side)?;
        out.push(claim(
            name,
            matches!(outcome, IsoOutcome::Isomorphic { .. }),
            outcome.label().to_string(),
        ));
    }
    Ok(out)
}

pub fn prime_doubling_sweep() -> Result<Claim> {
    let mut failures = Vec::new();
    for p in odd_primes_below(500) {
        if !prime_doubling_preserves_orders(p)? {
            failures.push(p);
        }
    }
    Ok(claim(
        "|P|, |Λ| agree for D_p and D_2p, odd p < 500",
        failures.is_empty(),
        format!("failures: {failures:?}"),
    ))
}

pub fn prime_order_separation() -> Result<Claim> {
    let primes: Vec<u64> = odd_primes_below(200).collect();
    let mut repeats = Vec::new();
    for side in Side::BOTH {
        let mut seen = BTreeSet::new();
        for &p in &primes {
            if !seen.insert(order_by_central_series(side, &GroupParams::new(p)?)?) {
                repeats.push((side, p));
            }
        }
    }
    Ok(claim(
        "|P(D_p)| and |Λ(D_p)| each pairwise distinct, odd p < 200",
        repeats.is_empty(),
        format!("{} primes, repeats at {repeats:?}", primes.len()),
    ))
}

/// Every claim, in a fixed order.
pub fn verify_claims() -> Result<Vec<Claim>> {
    let mut claims = vec![
        d3_anchor()?,
        d8_equal_orders()?,
        d8_distinct_sets()?,
        d8_explicit_isomorphism()?,
        d8_search()?,
        d15_not_isomorphic()?,
    ];
    claims.extend(doubling_isomorphisms()?);
    claims.push(prime_doubling_sweep()?);
    claims.push(prime_order_separation()?);
    Ok(claims)
}
