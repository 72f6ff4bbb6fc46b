#[macro_use]
mod common;

use std::collections::{BTreeSet, HashMap};

use dihedral_commutation::central::{center_members, congruent_mod_center, nth_center_bruteforce};
use dihedral_commutation::{DihedralElement, GroupParams, MuMap};

fn params(m: u64) -> GroupParams {
    GroupParams::new(m).unwrap()
}

/// `classes[u][h]` identifies the function `(x_1..x_u) -> [h, x_1, ..., x_u]`.
fn commutator_classes(g: &GroupParams, max_u: usize) -> Vec<Vec<usize>> {
    let els = g.elements();
    let mut classes = vec![(0..els.len()).collect::<Vec<_>>()];
    for _ in 0..max_u {
        let prev = classes.last().unwrap();
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let next = els
            .iter()
            .map(|&h| {
                let key: Vec<usize> = els.iter().map(|&x| prev[h.commutator(x).index()]).collect();
                let n = ids.len();
                *ids.entry(key).or_insert(n)
            })
            .collect();
        classes.push(next);
    }
    classes
}

/// Table of `x -> [x, y]`.
fn rho_table(g: &GroupParams, y: DihedralElement) -> Vec<usize> {
    g.elements().into_iter().map(|x| x.commutator(y).index()).collect()
}

fn lambda_table(g: &GroupParams, y: DihedralElement) -> Vec<usize> {
    g.elements().into_iter().map(|x| y.commutator(x).index()).collect()
}

fn then(f: &[usize], h: &[usize]) -> Vec<usize> {
    f.iter().map(|&k| h[k]).collect()
}

/// `first` followed by `u - 1` copies of `repeat`.
fn chain(first: Vec<usize>, repeat: &[usize], u: u32) -> Vec<usize> {
    (1..u).fold(first, |acc, _| then(&acc, repeat))
}

checks! {
    fn closed_form_matches_definition() {
        for m in 3..=40 {
            let g = params(m);
            for u in 0..=6 {
                assert_eq!(center_members(u, &g), nth_center_bruteforce(u, &g).unwrap(), "m = {m}, u = {u}");
            }
        }
    }

    fn centres_are_normal_subgroups() {
        for m in 3..=40 {
            let g = params(m);
            for u in 0..=6 {
                let z = nth_center_bruteforce(u, &g).unwrap();
                assert!(z.contains(&g.identity()));
                for &x in &z {
                    assert!(z.contains(&x.inverse()));
                    for &y in &z {
                        assert!(z.contains(&(x * y)));
                    }
                    for y in g.elements() {
                        assert!(z.contains(&x.conjugate(y)));
                    }
                }
            }
        }
    }

    fn equal_iterated_commutators_iff_same_coset() {
        for m in 3..=24 {
            let g = params(m);
            let classes = commutator_classes(&g, 4);
            let els = g.elements();
            for (u, class) in classes.iter().enumerate().skip(1) {
                let z = center_members(u, &g);
                for &g1 in &els {
                    for &g2 in &els {
                        let same = class[g1.index()] == class[g2.index()];
                        assert_eq!(same, z.contains(&(g1.inverse() * g2)), "m = {m}, u = {u}");
                        assert_eq!(same, congruent_mod_center(g1, g2, u, &g).unwrap());
                    }
                }
            }
        }
    }

    fn translated_reflection_chains_match_cosets() {
        for m in 3..=24 {
            let g = params(m);
            let rho_b = rho_table(&g, g.reflection(0));
            for u in 1..=6u32 {
                if g.is_two_power() && u >= g.ell() {
                    continue;
                }
                let z: BTreeSet<_> = center_members(u as usize, &g);
                let chains: Vec<Vec<usize>> = (0..m as i64)
                    .map(|x| chain(rho_table(&g, g.reflection(x)), &rho_b, u))
                    .collect();
                for x in 0..m as i64 {
                    for y in 0..m as i64 {
                        assert_eq!(
                            chains[x as usize] == chains[y as usize],
                            z.contains(&g.rotation(y - x)),
                            "m = {m}, u = {u}, x = {x}, y = {y}"
                        );
                    }
                }
            }
        }
    }

    fn reflection_chains_are_mu_maps() {
        for m in 3..=16 {
            let g = params(m);
            let table = |f: MuMap| -> Vec<usize> {
                g.elements().into_iter().map(|x| f.apply(x).unwrap().index()).collect()
            };
            let rho_b = rho_table(&g, g.reflection(0));
            let lambda_b = lambda_table(&g, g.reflection(0));
            for u in 1..=4u32 {
                for x in 0..m as i64 {
                    let right = chain(rho_table(&g, g.reflection(-x)), &rho_b, u);
                    let mu = MuMap::new((-2i64).pow(u), x * (-2i64).pow(u - 1), &g);
                    assert_eq!(table(mu), right, "m = {m}, u = {u}, x = {x}");
                    let left = chain(lambda_table(&g, g.reflection(x)), &lambda_b, u);
                    let mu = MuMap::new(2i64.pow(u), x * 2i64.pow(u - 1), &g);
                    assert_eq!(table(mu), left, "m = {m}, u = {u}, x = {x}");
                }
            }
        }
    }
}
