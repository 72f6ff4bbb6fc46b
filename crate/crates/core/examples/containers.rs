//! Containers, their products, and the decomposition of P(D_m) and Λ(D_m).

use dihedral_commutation::container::{decompose, Container};
use dihedral_commutation::{GroupParams, Side};

fn main() -> dihedral_commutation::Result<()> {
    let g = GroupParams::new(8)?;
    let c = Container::new(-2, 1, &g);
    println!("{c} has {} distinct functions", c.members().len());
    println!("{c} ∘ {c} = {}", c.product(&c)?);
    println!("{c} and C(2, 1) disjoint: {}", c.disjoint(&Container::new(2, 1, &g))?);

    for m in [8, 12, 15] {
        let g = GroupParams::new(m)?;
        for side in Side::BOTH {
            let d = decompose(side, &g);
            let parts: Vec<String> = d
                .parts
                .iter()
                .map(|p| format!("{}:{}", p.container, p.cardinality))
                .collect();
            println!("{}(D_{m}) = {}  total {}", side.symbol(), parts.join(" + "), d.order());
        }
    }
    Ok(())
}
