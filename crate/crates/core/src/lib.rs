//! Exact computations with the right and left commutation semigroups of the
//! dihedral groups `D_m = <a, b; a^m = 1, b^2 = 1, a^b = a^-1>`.
//!
//! The right commutation semigroup `P(D_m)` is generated under composition by
//! the maps `x -> [x, g]`, the left one `Λ(D_m)` by `x -> [g, x]`. Every such
//! map is a μ-map `μ(A, B)`, and the semigroups split into disjoint
//! *containers* `C(A, B) = {μ(A, xB)}` whose sizes are read off the upper
//! central series of `D_m`. This crate implements that calculus together with
//! two independent closure oracles that check it:
//!
//! * [`group`]: arithmetic in `D_m`, commutators, iterated commutators.
//! * [`mu`]: μ-maps, the ρ/λ identification, composition, functional equality.
//! * [`container`]: containers, their products, cardinalities, decompositions.
//! * [`central`]: upper central series, closed form and brute force.
//! * [`modular`]: index, period and order of residues under multiplication.
//! * [`orders`]: closed-form orders of `P(D_m)` and `Λ(D_m)`.
//! * [`closure`]: brute-force semigroup closure and isomorphism search.
//! * [`table`]: table rows, report rendering, CSV/JSON export.
//! * [`claims`]: the counterexample checks and prime sweeps run by `verify-claims`.
//!
//! Maps act on the right: `f.compose(h)` means "apply `f`, then `h`".

#![forbid(unsafe_code)]

pub mod central;
pub mod claims;
pub mod closure;
pub mod container;
mod error;
pub mod group;
pub mod modular;
pub mod mu;
pub mod orders;
pub mod table;

pub use error::{Error, Result};
pub use group::{DihedralElement, GroupParams};
pub use mu::{MuCanonical, MuMap};

use serde::{Deserialize, Serialize};

/// Which commutation semigroup: `P` (right, `x -> [x, g]`) or `Λ` (left, `x -> [g, x]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Right, Side::Left];

    /// The residue whose powers drive the decomposition: `-2` for the right
    /// semigroup, `2` for the left one.
    pub fn multiplier(self) -> i64 {
        match self {
            Side::Right => -2,
            Side::Left => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Side::Right => "P",
            Side::Left => "Λ",
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

/// Reduce `x` into `[0, m)`.
#[inline]
pub(crate) fn residue(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
