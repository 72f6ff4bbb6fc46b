//! Index, period and order of ±2 modulo m.

use dihedral_commutation::modular::orbit_profile;

fn main() {
    println!("{:>5} {:>12} {:>12}", "m", "-2 (ind/per)", "2 (ind/per)");
    for m in [5, 7, 12, 15, 24, 36, 64, 96] {
        let r = orbit_profile(-2, m);
        let l = orbit_profile(2, m);
        println!(
            "{m:>5} {:>12} {:>12}",
            format!("{}/{}", r.index, r.period),
            format!("{}/{}", l.index, l.period)
        );
    }
}
