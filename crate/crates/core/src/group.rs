//! The dihedral group `D_m` of order `2m`.
//!
//! Elements are stored as `a^i b^j` with `0 <= i < m`, `j ∈ {0, 1}`. The
//! defining relation `a^b = a^-1` gives
//! `(a^i b^j)(a^r b^s) = a^(i + (-1)^j r) b^(j + s)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::{residue, Error, Result};

/// Largest supported modulus. Products of two residues stay inside `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The modulus `m = 2^ell * n` of `D_m` with `n` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    m: u64,
    ell: u32,
    n: u64,
}

impl GroupParams {
    /// `D_1` and `D_2` are abelian and rejected.
    pub fn new(m: u64) -> Result<Self> {
        if m < 3 {
            return Err(Error::Parameter(format!(
                "m = {m}: the dihedral group must be non-abelian (m >= 3)"
            )));
        }
        if m > MAX_MODULUS {
            return Err(Error::Parameter(format!("m = {m} exceeds {MAX_MODULUS}")));
        }
        let ell = m.trailing_zeros();
        Ok(GroupParams { m, ell, n: m >> ell })
    }

    #[inline]
    pub fn m(&self) -> u64 {
        self.m
    }

    /// 2-adic valuation of `m`.
    #[inline]
    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Odd part `n` of `m`.
    #[inline]
    pub fn odd_part(&self) -> u64 {
        self.n
    }

    #[inline]
    pub fn two_part(&self) -> u64 {
        1 << self.ell
    }

    /// `m` is a power of two, i.e. `D_m` is a 2-group.
    #[inline]
    pub fn is_two_power(&self) -> bool {
        self.n == 1
    }

    /// Group order `2m`.
    #[inline]
    pub fn order(&self) -> usize {
        2 * self.m as usize
    }

    pub fn identity(&self) -> DihedralElement {
        DihedralElement { i: 0, j: 0, m: self.m }
    }

    /// `a^i b^j` for arbitrary integer exponents.
    pub fn element(&self, i: i64, j: i64) -> DihedralElement {
        DihedralElement {
            i: residue(i, self.m),
            j: j.rem_euclid(2) as u8,
            m: self.m,
        }
    }

    /// `a^i`.
    pub fn rotation(&self, i: i64) -> DihedralElement {
        self.element(i, 0)
    }

    /// `a^i b`.
    pub fn reflection(&self, i: i64) -> DihedralElement {
        self.element(i, 1)
    }

    /// All `2m` elements: rotations `a^0 .. a^(m-1)` first, then the
    /// reflections `a^0 b .. a^(m-1) b`. Position `k` holds the element with
    /// [`DihedralElement::index`] `k`.
    pub fn elements(&self) -> Vec<DihedralElement> {
        (0..self.order()).map(|k| self.element_at(k)).collect()
    }

    pub fn element_at(&self, index: usize) -> DihedralElement {
        let index = index as u64;
        DihedralElement {
            i: index % self.m,
            j: (index / self.m) as u8,
            m: self.m,
        }
    }

    fn check(&self, x: &DihedralElement) -> Result<()> {
        if x.m != self.m {
            return Err(Error::Parameter(format!(
                "element of D_{} used in D_{}",
                x.m, self.m
            )));
        }
        Ok(())
    }

    /// Checked product: both operands must belong to this group.
    pub fn multiply(&self, x: DihedralElement, y: DihedralElement) -> Result<DihedralElement> {
        self.check(&x)?;
        self.check(&y)?;
        Ok(x * y)
    }

    pub fn inverse(&self, x: DihedralElement) -> Result<DihedralElement> {
        self.check(&x)?;
        Ok(x.inverse())
    }

    pub fn commutator(&self, x: DihedralElement, y: DihedralElement) -> Result<DihedralElement> {
        self.check(&x)?;
        self.check(&y)?;
        Ok(x.commutator(y))
    }

    /// `[x, e_1, ..., e_w]`, associating to the left. Fails on an empty
    /// entry list.
    pub fn left_normed_commutator(
        &self,
        x: DihedralElement,
        entries: &[DihedralElement],
    ) -> Result<DihedralElement> {
        if entries.is_empty() {
            return Err(Error::Parameter(
                "a left-normed commutator needs at least one entry".into(),
            ));
        }
        self.check(&x)?;
        for e in entries {
            self.check(e)?;
        }
        Ok(x.left_normed_commutator(entries))
    }
}

/// `a^i b^j` in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralElement {
    i: u64,
    j: u8,
    m: u64,
}

impl DihedralElement {
    /// `a^i` in `D_m` for an already reduced `i`.
    #[inline]
    pub(crate) fn rotation_in(i: u64, m: u64) -> Self {
        debug_assert!(i < m);
        DihedralElement { i, j: 0, m }
    }

    /// Exponent of `a`, in `[0, m)`.
    #[inline]
    pub fn i(&self) -> u64 {
        self.i
    }

    /// Exponent of `b`, `0` or `1`.
    #[inline]
    pub fn j(&self) -> u8 {
        self.j
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.m
    }

    #[inline]
    pub fn is_rotation(&self) -> bool {
        self.j == 0
    }

    #[inline]
    pub fn is_identity(&self) -> bool {
        self.i == 0 && self.j == 0
    }

    /// Position in [`GroupParams::elements`].
    #[inline]
    pub fn index(&self) -> usize {
        (self.j as u64 * self.m + self.i) as usize
    }

    pub fn inverse(self) -> Self {
        if self.j == 1 {
            // reflections are involutions
            self
        } else {
            DihedralElement {
                i: (self.m - self.i) % self.m,
                ..self
            }
        }
    }

    /// `x^-1 y^-1 x y`. Always a rotation.
    pub fn commutator(self, y: Self) -> Self {
        self.inverse() * y.inverse() * self * y
    }

    /// `[... [[self, e_1], e_2], ..., e_w]`. With no entries this is `self`.
    pub fn left_normed_commutator(self, entries: &[Self]) -> Self {
        entries.iter().fold(self, |acc, &e| acc.commutator(e))
    }

    /// Conjugate `y^-1 self y`.
    pub fn conjugate(self, y: Self) -> Self {
        y.inverse() * self * y
    }
}

impl Mul for DihedralElement {
    type Output = DihedralElement;

    /// Panics when the operands come from different groups; use
    /// [`GroupParams::multiply`] for a checked product.
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.m, rhs.m, "operands from different dihedral groups");
        let m = self.m;
        let i = if self.j == 0 {
            (self.i + rhs.i) % m
        } else {
            (self.i + m - rhs.i) % m
        };
        DihedralElement {
            i,
            j: self.j ^ rhs.j,
            m,
        }
    }
}

impl Ord for DihedralElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.m, self.j, self.i).cmp(&(other.m, other.j, other.i))
    }
}

impl PartialOrd for DihedralElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (D_{})", self.m)
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (0, _) => write!(f, "b"),
            (i, 0) => write!(f, "a^{i}"),
            (i, _) => write!(f, "a^{i}b"),
        }
    }
}
