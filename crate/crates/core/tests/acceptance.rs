//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! The property suites are compiled in from their own test files, each of
//! which brings its own copy of `common`.
#![allow(clippy::duplicate_mod)]

#[allow(unused_imports, dead_code)]
#[path = "central_series.rs"]
mod central_series;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use dihedral_commutation::claims;
use dihedral_commutation::closure::{
    close_pairs, close_raw, search_isomorphism, IsoOutcome, DEFAULT_BUDGET, MAX_SEARCH_SIZE,
};
use dihedral_commutation::modular::is_prime;
use dihedral_commutation::orders::{
    iso_criterion_holds, order_by_central_series, order_historical, order_simplified,
};
use dihedral_commutation::table::parse_csv;
use dihedral_commutation::{GroupParams, Side};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(m: u64) -> GroupParams {
    GroupParams::new(m).unwrap()
}

fn ensure(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn table_reproduction() -> Outcome {
    let output = Command::new(env!("CARGO_BIN_EXE_dihedral-commutation"))
        .args(["table", "--from", "3", "--to", "101", "--verify", "pairs", "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    if !output.status.success() {
        return Err(format!("exit status {:?}", output.status.code()));
    }
    let rows = parse_csv(output.stdout.as_slice()).map_err(|e| e.to_string())?;
    let expected: Vec<(u64, u64, u64)> = include_str!("data/orders_3_101.csv")
        .lines()
        .skip(1)
        .map(|l| {
            let v: Vec<u64> = l.split(',').map(|c| c.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect();
    let got: Vec<(u64, u64, u64)> = rows.iter().map(|r| (r.m, r.p_order, r.lambda_order)).collect();
    let mismatches: Vec<u64> = expected
        .iter()
        .zip(&got)
        .filter(|(a, b)| a != b)
        .map(|(a, _)| a.0)
        .collect();
    ensure(
        got.len() == 99 && expected.len() == 99 && mismatches.is_empty(),
        format!("{} rows equal to the published table", got.len()),
        format!("{} rows, mismatches at m = {mismatches:?}", got.len()),
    )
}

fn oracle_independence() -> Outcome {
    let mut bad = Vec::new();
    for m in 3..=64 {
        let g = params(m);
        for side in Side::BOTH {
            let raw = close_raw(side, &g).map_err(|e| e.to_string())?;
            let pairs = close_pairs(side, &g).map_err(|e| e.to_string())?;
            if raw.size != pairs.size || raw.canonical_set() != pairs.canonical_set() {
                bad.push((m, side));
            }
        }
    }
    ensure(
        bad.is_empty(),
        "raw tables and μ-pairs give identical sets for m = 3..64".into(),
        format!("disagreement at {bad:?}"),
    )
}

fn formula_agreement() -> Outcome {
    let mut bad = Vec::new();
    for m in 3..=4096 {
        let g = params(m);
        for side in Side::BOTH {
            let a = order_by_central_series(side, &g).map_err(|e| e.to_string())?;
            if a != order_simplified(side, &g) || a != order_historical(side, &g) {
                bad.push((m, side));
            }
        }
    }
    ensure(
        bad.is_empty(),
        "three order formulas agree for m = 3..4096".into(),
        format!("disagreement at {bad:?}"),
    )
}

fn claim_outcome(claims: Vec<claims::Claim>) -> Outcome {
    let failed: Vec<String> = claims
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{} ({})", c.name, c.detail))
        .collect();
    ensure(
        failed.is_empty(),
        claims.iter().map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join("; "),
        failed.join("; "),
    )
}

fn anchor_values() -> Outcome {
    claim_outcome(vec![claims::d3_anchor().map_err(|e| e.to_string())?])
}

fn counterexample_suite() -> Outcome {
    let run = || -> dihedral_commutation::Result<Vec<claims::Claim>> {
        let mut v = vec![
            claims::d8_equal_orders()?,
            claims::d8_distinct_sets()?,
            claims::d8_explicit_isomorphism()?,
            claims::d15_not_isomorphic()?,
        ];
        v.extend(claims::doubling_isomorphisms()?);
        Ok(v)
    };
    claim_outcome(run().map_err(|e| e.to_string())?)
}

fn prime_doubling() -> Outcome {
    let mut bad = Vec::new();
    let primes: Vec<u64> = (3..500).filter(|&p| is_prime(p)).collect();
    for &p in &primes {
        for side in Side::BOTH {
            // closure oracle on both groups, not the formula
            let a = close_pairs(side, &params(p)).map_err(|e| e.to_string())?.size;
            let b = close_pairs(side, &params(2 * p)).map_err(|e| e.to_string())?.size;
            if a != b {
                bad.push((p, side));
            }
        }
    }
    let formula = claims::prime_doubling_sweep().map_err(|e| e.to_string())?;
    ensure(
        bad.is_empty() && formula.passed,
        format!("{} odd primes, closure sizes and formulas agree", primes.len()),
        format!("mismatches {bad:?}; formula claim: {}", formula.detail),
    )
}

fn prime_separation() -> Outcome {
    let primes: Vec<u64> = (3..200).filter(|&p| is_prime(p)).collect();
    let mut orders = BTreeSet::new();
    for &p in &primes {
        orders.insert(close_pairs(Side::Left, &params(p)).map_err(|e| e.to_string())?.size);
    }
    ensure(
        orders.len() == primes.len(),
        format!("{} odd primes, {} distinct |Λ(D_p)|", primes.len(), orders.len()),
        format!("only {} distinct orders for {} primes", orders.len(), primes.len()),
    )
}

fn property_suites() -> Outcome {
    let suites = [
        ("group_identities", group_identities::CHECKS),
        ("mu_maps", mu_maps::CHECKS),
        ("containers", containers::CHECKS),
        ("central_series", central_series::CHECKS),
        ("modular", modular::CHECKS),
    ];
    let mut failed = Vec::new();
    let mut count = 0;
    for (suite, checks) in suites {
        for (name, check) in checks {
            count += 1;
            if catch_unwind(AssertUnwindSafe(check)).is_err() {
                failed.push(format!("{suite}::{name}"));
            }
        }
    }
    ensure(
        failed.is_empty(),
        format!("{count} exhaustive checks passed"),
        format!("failed: {}", failed.join(", ")),
    )
}

fn criterion_consistency() -> Outcome {
    let (mut refuted, mut witnessed, mut too_large, mut bad) = (0, 0, Vec::new(), Vec::new());
    for m in 3..=101 {
        let g = params(m);
        let p = close_pairs(Side::Right, &g).map_err(|e| e.to_string())?;
        let l = close_pairs(Side::Left, &g).map_err(|e| e.to_string())?;
        if p.size != l.size {
            continue;
        }
        let holds = iso_criterion_holds(&g);
        if !holds && p.size <= MAX_SEARCH_SIZE {
            match search_isomorphism(&p, &l, DEFAULT_BUDGET).map_err(|e| e.to_string())? {
                IsoOutcome::Isomorphic { .. } => bad.push(m),
                _ => refuted += 1,
            }
        } else if !holds {
            too_large.push(m);
        } else if p.size <= 200 {
            match search_isomorphism(&p, &l, DEFAULT_BUDGET).map_err(|e| e.to_string())? {
                IsoOutcome::Isomorphic { .. } => witnessed += 1,
                _ => bad.push(m),
            }
        }
    }
    ensure(
        bad.is_empty(),
        format!(
            "{witnessed} witnesses found, {refuted} searches without witness, \
             beyond the {MAX_SEARCH_SIZE}-element table bound: {too_large:?}"
        ),
        format!("inconsistent at m = {bad:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table reproduction, m = 3..101", table_reproduction),
        ("oracle independence, m = 3..64", oracle_independence),
        ("formula agreement, m = 3..4096", formula_agreement),
        ("D_3 anchor values", anchor_values),
        ("counterexample suite", counterexample_suite),
        ("prime doubling, p < 500", prime_doubling),
        ("prime order separation, p < 200", prime_separation),
        ("property suites", property_suites),
        ("isomorphism criterion consistency, m = 3..101", criterion_consistency),
    ];
    let mut all_passed = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} [{secs:.1}s] {detail}", k + 1),
            Err(detail) => {
                all_passed = false;
                println!("criterion {}: FAIL  {name} [{secs:.1}s] {detail}", k + 1);
            }
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
