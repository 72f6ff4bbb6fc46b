//! Order table with oracle verification, written as CSV to stdout.
//!
//!     cargo run --example order_table -- 3 30

use dihedral_commutation::table::{build_table, write_csv, VerifyLevel};

fn main() -> dihedral_commutation::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer bound"));
    let from = args.next().unwrap_or(3);
    let to = args.next().unwrap_or(30);
    let rows = build_table(from, to, Some(VerifyLevel::Pairs))?;
    write_csv(&rows, None, std::io::stdout().lock())
}
