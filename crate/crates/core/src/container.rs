//! Containers `C(A, B) = {μ(A, xB) : x ∈ Z_m}`.
//!
//! The formal set `C(A, B)` depends on `B` only through `d = gcd(B, m)`, so a
//! container is keyed by `(A, d)`. Containers multiply by
//! `C(A, B) ∘ C(A', B') = C(AA', BA')`, meet iff `A ≡ A'`, and the commutation
//! semigroups are disjoint unions of `C(0, 1)` and the powers of `C(∓2, 1)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::central::center_order;
use crate::modular::multiplier_profile;
use crate::mu::canonical_b_modulus;
use crate::{gcd, residue, Error, GroupParams, MuCanonical, MuMap, Result, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Container {
    a: u64,
    d: u64,
    m: u64,
}

impl Container {
    pub fn new(a: i64, b: i64, g: &GroupParams) -> Self {
        let m = g.m();
        let b = residue(b, m);
        Container {
            a: residue(a, m),
            d: gcd(b, m),
            m,
        }
    }

    #[inline]
    pub fn a(&self) -> u64 {
        self.a
    }

    /// `gcd(B, m)`; equals `m` for `B ≡ 0`.
    #[inline]
    pub fn divisor(&self) -> u64 {
        self.d
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// The formal pairs `μ(A, y)`, `y ∈ dZ_m`.
    pub fn formal_members(&self) -> impl Iterator<Item = MuMap> + '_ {
        let g = GroupParams::new(self.m).expect("validated modulus");
        (0..self.m / self.d).map(move |k| MuMap::new(self.a as i64, (k * self.d) as i64, &g))
    }

    /// The distinct functions in the container.
    pub fn members(&self) -> BTreeSet<MuCanonical> {
        self.formal_members().map(|f| f.canonicalize()).collect()
    }

    fn check(&self, other: &Container) -> Result<()> {
        if self.m != other.m {
            return Err(Error::Parameter(format!(
                "containers over Z_{} and Z_{}",
                self.m, other.m
            )));
        }
        Ok(())
    }

    /// `C(A, B) ∘ C(A', B') = C(AA', BA')`.
    pub fn product(&self, next: &Container) -> Result<Container> {
        self.check(next)?;
        let m = self.m as u128;
        let a = (self.a as u128 * next.a as u128 % m) as u64;
        let b = (self.d as u128 * next.a as u128 % m) as u64;
        Ok(Container {
            a,
            d: gcd(b, self.m),
            m: self.m,
        })
    }

    /// Containers share a function iff their first coordinates agree.
    pub fn disjoint(&self, other: &Container) -> Result<bool> {
        self.check(other)?;
        Ok(self.a != other.a)
    }
}

impl fmt::Display for Container {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({}, {})", self.a, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CardinalityMethod {
    /// `m / |Z_1|` for `C(0, 1)` and `m / |Z_u|` for `C((±2)^u, (±2)^(u-1))`.
    Formula,
    /// Count canonical forms.
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CardinalityProvenance {
    /// Central-series formula; `exponent` is `u`, with `0` for `C(0, 1)`.
    Formula { exponent: u64 },
    Direct,
    /// The formula was requested, but the container is not of the required
    /// shape or `Z_u` is not inside `<a>`; the value was counted instead.
    FormulaOutsideHypothesis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cardinality {
    pub value: u64,
    pub provenance: CardinalityProvenance,
}

/// `m / |Z_u|`, the size of the `u`-th container of a decomposition
/// (`u = 0` denotes `C(0, 1)`, sized like `u = 1`).
fn formula_cardinality(exponent: u64, g: &GroupParams) -> u64 {
    let z = center_order(exponent.max(1) as usize, g);
    debug_assert_eq!(g.m() % z, 0, "|Z_u| divides m when Z_u <= <a>");
    g.m() / z
}

/// `Z_u <= <a>` fails only for 2-power `m` and `u >= ell`.
fn center_inside_rotations(exponent: u64, g: &GroupParams) -> bool {
    !(g.is_two_power() && exponent.max(1) >= g.ell() as u64)
}

/// Smallest `u >= 1` with `x^u ≡ A` and `gcd(x^(u-1), m) = d` for `x = ±2`.
fn power_exponent(c: &Container) -> Option<u64> {
    let m = c.m;
    Side::BOTH.iter().find_map(|side| {
        let x = residue(side.multiplier(), m);
        let mut prev = 1 % m;
        // index + period <= m, so u <= m + 1 reaches every power
        for u in 1..=m + 1 {
            let cur = (prev as u128 * x as u128 % m as u128) as u64;
            if cur == c.a && gcd(prev, m) == c.d {
                return Some(u);
            }
            prev = cur;
        }
        None
    })
}

pub fn container_cardinality(c: &Container, method: CardinalityMethod) -> Cardinality {
    let direct = || c.members().len() as u64;
    if method == CardinalityMethod::Direct {
        return Cardinality {
            value: direct(),
            provenance: CardinalityProvenance::Direct,
        };
    }
    let g = GroupParams::new(c.m).expect("validated modulus");
    let exponent = if c.a == 0 && c.d == 1 {
        Some(0)
    } else {
        power_exponent(c)
    };
    match exponent {
        Some(u) if center_inside_rotations(u, &g) => Cardinality {
            value: formula_cardinality(u, &g),
            provenance: CardinalityProvenance::Formula { exponent: u },
        },
        _ => Cardinality {
            value: direct(),
            provenance: CardinalityProvenance::FormulaOutsideHypothesis,
        },
    }
}

/// Number of distinct functions in `C(A, d)` computed arithmetically:
/// `dZ_m` reduced modulo `m'` has `m' / gcd(d, m')` elements.
pub fn counted_cardinality(c: &Container) -> u64 {
    let bm = canonical_b_modulus(c.m);
    bm / gcd(c.d % bm, bm)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionPart {
    pub container: Container,
    /// `0` for `C(0, 1)`, otherwise `u` in `C(x^u, x^(u-1))`.
    pub exponent: u64,
    pub cardinality: u64,
}

/// `C(0, 1)` followed by `C(x^u, x^(u-1))` for `u = 1..=t`, with `x = -2`
/// (right) or `2` (left). The parts are pairwise disjoint.
///
/// `t` is the upper index of the union. The central-series order formula
/// sums to `t_formula - 1`, so `t_formula = t + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub side: Side,
    pub m: u64,
    pub t: u64,
    pub parts: Vec<DecompositionPart>,
}

impl Decomposition {
    /// Sum of the part cardinalities.
    pub fn order(&self) -> u64 {
        self.parts.iter().map(|p| p.cardinality).sum()
    }

    pub fn members(&self) -> BTreeSet<MuCanonical> {
        self.parts
            .iter()
            .flat_map(|p| p.container.members())
            .collect()
    }
}

/// Union length for the container decomposition.
pub fn union_length(side: Side, g: &GroupParams) -> u64 {
    let profile = multiplier_profile(side, g);
    let ell = g.ell() as u64;
    if ell == 0 {
        profile.order.expect("±2 is a unit modulo odd m")
    } else if !g.is_two_power() {
        ell + profile.period - 1
    } else {
        ell - 1
    }
}

pub fn decompose(side: Side, g: &GroupParams) -> Decomposition {
    let m = g.m();
    let t = union_length(side, g);
    let x = residue(side.multiplier(), m);
    let mut parts = vec![DecompositionPart {
        container: Container::new(0, 1, g),
        exponent: 0,
        cardinality: formula_cardinality(0, g),
    }];
    let mut prev = 1 % m;
    for u in 1..=t {
        let cur = (prev as u128 * x as u128 % m as u128) as u64;
        debug_assert!(center_inside_rotations(u, g));
        parts.push(DecompositionPart {
            container: Container::new(cur as i64, prev as i64, g),
            exponent: u,
            cardinality: formula_cardinality(u, g),
        });
        prev = cur;
    }
    Decomposition {
        side,
        m,
        t,
        parts,
    }
}
