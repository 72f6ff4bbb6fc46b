//! Commutation maps as μ-maps: identification, composition, canonical form.

use dihedral_commutation::mu::{lambda_of, rho_of};
use dihedral_commutation::{GroupParams, MuMap};

fn main() -> dihedral_commutation::Result<()> {
    let g = GroupParams::new(8)?;

    let rho = rho_of(3, 1, &g);
    let lambda = lambda_of(3, 1, &g);
    println!("ρ(a^3 b) = μ({}, {})", rho.a(), rho.b());
    println!("λ(a^3 b) = μ({}, {})", lambda.a(), lambda.b());

    let y = g.element(3, 1);
    for x in [g.rotation(1), g.reflection(2)] {
        println!("{x} ρ = {}   [{x}, {y}] = {}", rho.apply(x)?, x.commutator(y));
    }

    let f = MuMap::new(6, 1, &g);
    let h = MuMap::new(6, 3, &g);
    let fh = f.compose(&h)?;
    println!("μ(6,1) then μ(6,3) = μ({}, {})", fh.a(), fh.b());

    // B only matters modulo m/2 for even m
    let (p, q) = (MuMap::new(4, 2, &g), MuMap::new(4, 6, &g));
    println!(
        "μ(4,2) ~ {}, μ(4,6) ~ {}, same function: {}",
        p.canonicalize(),
        q.canonicalize(),
        p.table() == q.table()
    );
    Ok(())
}
