//! μ-maps `μ(A, B): a^i b^j -> a^(A i α_j - B β_j)` where `α_j = (-1)^j` and
//! `β_j = (-1)^j - 1`.
//!
//! Every right and left commutation map of `D_m` is a μ-map, and μ-maps are
//! closed under composition: `μ(A, B) ∘ μ(A', B') = μ(AA', BA')`, with maps
//! applied left to right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{residue, DihedralElement, Error, GroupParams, Result, Side};

/// `α_j = (-1)^j`.
#[inline]
pub fn alpha(j: u8) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `β_j = (-1)^j - 1`, i.e. `0` or `-2`.
#[inline]
pub fn beta(j: u8) -> i64 {
    alpha(j) - 1
}

/// Modulus of the second coordinate of a [`MuCanonical`]: `m` for odd `m`,
/// `m/2` for even `m`. On reflections μ(A, B) only sees `2B mod m`.
#[inline]
pub fn canonical_b_modulus(m: u64) -> u64 {
    if m.is_multiple_of(2) {
        m / 2
    } else {
        m
    }
}

/// A formal pair `(A, B) ∈ Z_m × Z_m`. Distinct pairs can denote the same
/// function; compare through [`MuMap::canonicalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MuMap {
    a: u64,
    b: u64,
    m: u64,
}

impl MuMap {
    pub fn new(a: i64, b: i64, g: &GroupParams) -> Self {
        MuMap {
            a: residue(a, g.m()),
            b: residue(b, g.m()),
            m: g.m(),
        }
    }

    #[inline]
    pub fn a(&self) -> u64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> u64 {
        self.b
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// Exponent of `a` in the image of `a^i b^j`.
    fn image_exponent(&self, i: u64, j: u8) -> u64 {
        let m = self.m as u128;
        let ai = self.a as u128 * i as u128 % m;
        let first = if j == 0 { ai } else { (m - ai) % m };
        // -B β_j is 0 on rotations and 2B on reflections
        let second = if j == 0 { 0 } else { 2 * self.b as u128 % m };
        ((first + second) % m) as u64
    }

    /// The image of `x`; always a rotation.
    pub fn apply(&self, x: DihedralElement) -> Result<DihedralElement> {
        if x.modulus() != self.m {
            return Err(Error::Parameter(format!(
                "μ-map over Z_{} applied to an element of D_{}",
                self.m,
                x.modulus()
            )));
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: DihedralElement) -> DihedralElement {
        DihedralElement::rotation_in(self.image_exponent(x.i(), x.j()), self.m)
    }

    /// `self` followed by `next`: `μ(A, B) ∘ μ(A', B') = μ(AA', BA')`.
    pub fn compose(&self, next: &MuMap) -> Result<MuMap> {
        if self.m != next.m {
            return Err(Error::Parameter(format!(
                "cannot compose μ-maps over Z_{} and Z_{}",
                self.m, next.m
            )));
        }
        let m = self.m as u128;
        Ok(MuMap {
            a: (self.a as u128 * next.a as u128 % m) as u64,
            b: (self.b as u128 * next.a as u128 % m) as u64,
            m: self.m,
        })
    }

    /// Functional-equality representative: `A` is the image exponent of `a`,
    /// and the reflections only see `2B mod m`.
    pub fn canonicalize(&self) -> MuCanonical {
        MuCanonical {
            a: self.a as u32,
            b: (self.b % canonical_b_modulus(self.m)) as u32,
        }
    }

    /// Image exponents of all `2m` elements in enumeration order.
    pub fn table(&self) -> Vec<u64> {
        (0..2 * self.m)
            .map(|k| self.image_exponent(k % self.m, (k / self.m) as u8))
            .collect()
    }
}

impl fmt::Display for MuMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "μ({}, {})", self.a, self.b)
    }
}

/// A μ-function of `D_m` for a fixed, implicit `m`: `a ∈ [0, m)` and
/// `b ∈ [0, m)` (odd `m`) or `[0, m/2)` (even `m`). Two μ-maps are the same
/// function exactly when their canonical forms are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MuCanonical {
    pub a: u32,
    pub b: u32,
}

impl MuCanonical {
    /// `self` followed by `next` over `Z_m`. The second coordinate is well
    /// defined modulo `m/2` because `b ≡ b' (mod m/2)` implies
    /// `b A ≡ b' A (mod m/2)`.
    #[inline]
    pub fn compose(self, next: MuCanonical, m: u64) -> MuCanonical {
        let bm = canonical_b_modulus(m);
        MuCanonical {
            a: (self.a as u64 * next.a as u64 % m) as u32,
            b: (self.b as u64 * next.a as u64 % bm) as u32,
        }
    }

    pub fn to_map(self, g: &GroupParams) -> MuMap {
        MuMap::new(self.a as i64, self.b as i64, g)
    }

    /// Dense index in `[0, m * canonical_b_modulus(m))`.
    #[inline]
    pub fn dense_index(self, m: u64) -> usize {
        (self.a as u64 * canonical_b_modulus(m) + self.b as u64) as usize
    }

    #[inline]
    pub fn from_dense_index(index: usize, m: u64) -> MuCanonical {
        let bm = canonical_b_modulus(m) as usize;
        MuCanonical {
            a: (index / bm) as u32,
            b: (index % bm) as u32,
        }
    }
}

impl fmt::Display for MuCanonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "μ({}, {})", self.a, self.b)
    }
}

/// `ρ(a^r b^s) = μ(β_s, r α_s)`, the map `x -> [x, a^r b^s]`.
pub fn rho_of(r: i64, s: u8, g: &GroupParams) -> MuMap {
    MuMap::new(beta(s), r * alpha(s), g)
}

/// `λ(a^r b^s) = μ(-β_s, -r α_s)`, the map `x -> [a^r b^s, x]`.
pub fn lambda_of(r: i64, s: u8, g: &GroupParams) -> MuMap {
    MuMap::new(-beta(s), -r * alpha(s), g)
}

/// [`rho_of`] or [`lambda_of`] according to `side`.
pub fn commutation_map(side: Side, r: i64, s: u8, g: &GroupParams) -> MuMap {
    match side {
        Side::Right => rho_of(r, s, g),
        Side::Left => lambda_of(r, s, g),
    }
}
