//! Upper central series `1 = Z_0 <= Z_1 <= ...` of `D_m`.
//!
//! For `m = 2^ell n` with `n` odd: every `Z_u` is trivial when `m` is odd;
//! otherwise `Z_u = <a^(m / 2^u)>` for `u < ell`, after which the series
//! stops at `<a^n>` (`n > 1`) or reaches the whole group (`n = 1`).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{DihedralElement, Error, GroupParams, Result};

/// Bounds for [`nth_center_bruteforce`].
pub const BRUTEFORCE_MAX_M: u64 = 64;
pub const BRUTEFORCE_MAX_U: usize = 8;

/// Bounds for [`congruent_mod_center`].
pub const CONGRUENCE_MAX_M: u64 = 24;
pub const CONGRUENCE_MAX_U: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralSeriesProfile {
    /// `orders[u] = |Z_u|` for `u = 0 ..= stabilization_index`.
    pub orders: Vec<u64>,
    /// Least `c` with `Z_c = Z_(c+1)`.
    pub stabilization_index: usize,
    pub nilpotent: bool,
}

/// `|Z_u(D_m)|`.
pub fn center_order(u: usize, g: &GroupParams) -> u64 {
    let ell = g.ell() as usize;
    if ell == 0 {
        1
    } else if u < ell {
        1 << u
    } else if g.is_two_power() {
        2 * g.m()
    } else {
        g.two_part()
    }
}

/// The elements of `Z_u(D_m)`.
pub fn center_members(u: usize, g: &GroupParams) -> BTreeSet<DihedralElement> {
    let ell = g.ell() as usize;
    if ell == 0 {
        return BTreeSet::from([g.identity()]);
    }
    if u >= ell && g.is_two_power() {
        return g.elements().into_iter().collect();
    }
    let generated_by = g.m() / center_order(u, g);
    (0..center_order(u, g))
        .map(|x| g.rotation((generated_by * x) as i64))
        .collect()
}

pub fn central_series_profile(g: &GroupParams) -> CentralSeriesProfile {
    // the series grows at every step below ell and is constant from ell on
    let c = g.ell() as usize;
    CentralSeriesProfile {
        orders: (0..=c).map(|u| center_order(u, g)).collect(),
        stabilization_index: c,
        nilpotent: g.is_two_power(),
    }
}

/// `Z_u` from the definition: `Z_0 = {1}`, and `Z_(k+1)` collects the `x`
/// with `[x, y] ∈ Z_k` for every `y`. Limited to `m <= 64`, `u <= 8`.
pub fn nth_center_bruteforce(u: usize, g: &GroupParams) -> Result<BTreeSet<DihedralElement>> {
    if g.m() > BRUTEFORCE_MAX_M || u > BRUTEFORCE_MAX_U {
        return Err(Error::Resource(format!(
            "brute-force centre limited to m <= {BRUTEFORCE_MAX_M}, u <= {BRUTEFORCE_MAX_U} \
             (got m = {}, u = {u})",
            g.m()
        )));
    }
    Ok(bruteforce_centers(u, g).pop().expect("Z_0 always present"))
}

/// `[Z_0, Z_1, ..., Z_u]` from the definition.
fn bruteforce_centers(u: usize, g: &GroupParams) -> Vec<BTreeSet<DihedralElement>> {
    let elements = g.elements();
    let mut inside = vec![false; g.order()];
    inside[g.identity().index()] = true;
    let mut out = vec![BTreeSet::from([g.identity()])];
    for _ in 0..u {
        let next: Vec<bool> = elements
            .iter()
            .map(|&x| elements.iter().all(|&y| inside[x.commutator(y).index()]))
            .collect();
        inside = next;
        out.push(
            elements
                .iter()
                .copied()
                .filter(|x| inside[x.index()])
                .collect(),
        );
    }
    out
}

/// Whether `g1^-1 g2 ∈ Z_u`, with `Z_u` computed from the definition. In a
/// metabelian group this holds iff `[g1, x_1, ..., x_u] = [g2, x_1, ..., x_u]`
/// for all `x_1, ..., x_u`. Limited to `m <= 24`, `1 <= u <= 4`.
pub fn congruent_mod_center(
    g1: DihedralElement,
    g2: DihedralElement,
    u: usize,
    g: &GroupParams,
) -> Result<bool> {
    if u == 0 {
        return Err(Error::Parameter("u must be positive".into()));
    }
    if g.m() > CONGRUENCE_MAX_M || u > CONGRUENCE_MAX_U {
        return Err(Error::Resource(format!(
            "limited to m <= {CONGRUENCE_MAX_M}, u <= {CONGRUENCE_MAX_U} (got m = {}, u = {u})",
            g.m()
        )));
    }
    let quotient = g.inverse(g1)? * g2;
    Ok(nth_center_bruteforce(u, g)?.contains(&quotient))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u64) -> GroupParams {
        GroupParams::new(m).unwrap()
    }

    #[test]
    fn order_examples() {
        assert_eq!(center_order(3, &params(15)), 1);
        assert_eq!(center_order(2, &params(8)), 4);
        assert_eq!(center_order(5, &params(24)), 8);
        assert_eq!(center_order(3, &params(8)), 16);
    }

    #[test]
    fn member_examples() {
        let g = params(9);
        assert_eq!(center_members(1, &g), BTreeSet::from([g.identity()]));
        let g = params(8);
        assert_eq!(center_members(1, &g), BTreeSet::from([g.identity(), g.rotation(4)]));
        let g = params(12);
        let expected: BTreeSet<_> = [0, 3, 6, 9].into_iter().map(|i| g.rotation(i)).collect();
        assert_eq!(center_members(2, &g), expected);
    }

    #[test]
    fn bruteforce_examples() {
        let g = params(5);
        assert_eq!(nth_center_bruteforce(4, &g).unwrap(), BTreeSet::from([g.identity()]));
        let g = params(8);
        assert_eq!(nth_center_bruteforce(3, &g).unwrap().len(), 16);
        let g = params(12);
        assert_eq!(
            nth_center_bruteforce(1, &g).unwrap(),
            BTreeSet::from([g.identity(), g.rotation(6)])
        );
        assert_eq!(center_order(5, &params(24)), nth_center_bruteforce(5, &params(24)).unwrap().len() as u64);
    }

    #[test]
    fn bruteforce_bounds() {
        assert!(matches!(nth_center_bruteforce(1, &params(65)), Err(Error::Resource(_))));
        assert!(matches!(nth_center_bruteforce(9, &params(8)), Err(Error::Resource(_))));
    }

    #[test]
    fn profiles() {
        let p = central_series_profile(&params(15));
        assert_eq!((p.orders, p.stabilization_index, p.nilpotent), (vec![1], 0, false));
        let p = central_series_profile(&params(16));
        assert_eq!((p.orders, p.stabilization_index, p.nilpotent), (vec![1, 2, 4, 8, 32], 4, true));
        let p = central_series_profile(&params(24));
        assert_eq!((p.orders, p.stabilization_index, p.nilpotent), (vec![1, 2, 4, 8], 3, false));
    }

    #[test]
    fn congruence_examples() {
        let g = params(8);
        let a = g.rotation(1);
        assert!(congruent_mod_center(a, a, 1, &g).unwrap());
        assert!(congruent_mod_center(a, g.rotation(5), 1, &g).unwrap());
        assert!(!congruent_mod_center(a, g.rotation(2), 1, &g).unwrap());
        // a witness separating a and a^2 at weight one
        let b = g.reflection(0);
        assert_ne!(a.commutator(b), g.rotation(2).commutator(b));
        assert!(matches!(congruent_mod_center(a, a, 0, &g), Err(Error::Parameter(_))));
        assert!(matches!(
            congruent_mod_center(a, a, 5, &g),
            Err(Error::Resource(_))
        ));
    }
}
