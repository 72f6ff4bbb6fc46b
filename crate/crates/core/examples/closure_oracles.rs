//! The two brute-force closures and their agreement with the order formula.

use dihedral_commutation::closure::{close_pairs, close_raw};
use dihedral_commutation::orders::order_by_central_series;
use dihedral_commutation::{GroupParams, Side};

fn main() -> dihedral_commutation::Result<()> {
    for m in [3, 8, 15, 36] {
        let g = GroupParams::new(m)?;
        for side in Side::BOTH {
            let raw = close_raw(side, &g)?;
            let pairs = close_pairs(side, &g)?;
            println!(
                "{}(D_{m}): raw {} from {} generators, pairs {}, formula {}, same set: {}",
                side.symbol(),
                raw.size,
                raw.generator_count,
                pairs.size,
                order_by_central_series(side, &g)?,
                raw.canonical_set() == pairs.canonical_set()
            );
        }
    }
    Ok(())
}
