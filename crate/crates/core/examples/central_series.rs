//! Upper central series of D_m, closed form against the definition.

use dihedral_commutation::central::{center_members, central_series_profile, nth_center_bruteforce};
use dihedral_commutation::GroupParams;

fn main() -> dihedral_commutation::Result<()> {
    for m in [9, 12, 16, 40] {
        let g = GroupParams::new(m)?;
        let profile = central_series_profile(&g);
        println!(
            "D_{m}: |Z_u| = {:?}, stable from u = {}, nilpotent: {}",
            profile.orders, profile.stabilization_index, profile.nilpotent
        );
        for u in 0..=profile.stabilization_index + 1 {
            assert_eq!(center_members(u, &g), nth_center_bruteforce(u, &g)?);
        }
    }
    let g = GroupParams::new(12)?;
    let z2: Vec<String> = center_members(2, &g).iter().map(|x| x.to_string()).collect();
    println!("Z_2(D_12) = {{{}}}", z2.join(", "));
    Ok(())
}
