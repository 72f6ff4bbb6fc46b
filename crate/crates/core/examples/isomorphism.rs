//! Isomorphism between commutation semigroups: an explicit map and search.

use dihedral_commutation::closure::{close_pairs, search_isomorphism, verify_iso_map, DEFAULT_BUDGET};
use dihedral_commutation::orders::iso_criterion_holds;
use dihedral_commutation::{GroupParams, Side};

fn main() -> dihedral_commutation::Result<()> {
    let g8 = GroupParams::new(8)?;
    let check = verify_iso_map(&g8, Side::Right, Side::Left, |x, y| (3 * x as i64, y as i64))?;
    println!("D_8: μ(x, y) -> μ(3x, y) from P to Λ: {check:?}");

    for (m1, m2, side) in [(15, 15, None), (10, 5, Some(Side::Right)), (10, 5, Some(Side::Left))] {
        let (s1, s2) = match side {
            Some(side) => (close_pairs(side, &GroupParams::new(m1)?)?, close_pairs(side, &GroupParams::new(m2)?)?),
            None => {
                let g = GroupParams::new(m1)?;
                (close_pairs(Side::Right, &g)?, close_pairs(Side::Left, &g)?)
            }
        };
        let outcome = search_isomorphism(&s1, &s2, DEFAULT_BUDGET)?;
        println!(
            "{}(D_{m1}) vs {}(D_{m2}): {}",
            s1.side.symbol(),
            s2.side.symbol(),
            outcome.label()
        );
    }
    println!("criterion at m = 15: {}", iso_criterion_holds(&GroupParams::new(15)?));
    Ok(())
}
