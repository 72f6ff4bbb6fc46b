//! Multiplication, inverses and commutators in D_m.
//!
//!     cargo run --example dihedral_arithmetic -- 8

use dihedral_commutation::GroupParams;

fn main() -> dihedral_commutation::Result<()> {
    let m = std::env::args().nth(1).map_or(Ok(8), |s| s.parse()).expect("m must be an integer");
    let g = GroupParams::new(m)?;
    let (a, b) = (g.rotation(1), g.reflection(0));

    println!("D_{m} has {} elements, m = 2^{} * {}", g.order(), g.ell(), g.odd_part());
    println!("a * b = {}, b * a = {}", a * b, b * a);
    println!("(a^3 b)^-1 = {}", g.element(3, 1).inverse());
    println!("[a, b] = {}", a.commutator(b));
    println!("[a^2, b] = {}", g.rotation(2).commutator(b));

    // [a, b, b, ..., b] = a^((-2)^w)
    for w in 1..=4 {
        let c = a.left_normed_commutator(&vec![b; w]);
        println!("[a, {w} x b] = {c}");
    }
    Ok(())
}
