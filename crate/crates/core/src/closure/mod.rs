//! Brute-force generation of the commutation semigroups.
//!
//! Two oracles build `P(D_m)` and `Λ(D_m)` by closing the set of commutation
//! maps under composition:
//!
//! * [`close_raw`] works on explicit function tables built from commutators
//!   and never consults μ-map formulas.
//! * [`close_pairs`] works on canonical μ-pairs and is fast enough for
//!   `m` in the thousands.
//!
//! Both close by composing every known element with every generator until no
//! new element appears: every product of generators associates left to right,
//! so this reaches the whole generated subsemigroup.

mod iso;

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::container::Container;
use crate::mu::{canonical_b_modulus, commutation_map};
use crate::{residue, DihedralElement, Error, GroupParams, MuCanonical, Result, Side};

pub use iso::{search_isomorphism, CayleyTable, IsoOutcome, DEFAULT_BUDGET, MAX_SEARCH_SIZE};

pub const RAW_MAX_M: u64 = 128;
pub const PAIRS_MAX_M: u64 = 4096;
pub const CONTAINER_POWERS_MAX_M: u64 = 256;

/// A self-map of `D_m`: `images[k]` is the enumeration index of the image of
/// the element with index `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FunctionTable {
    pub images: Vec<u32>,
}

impl FunctionTable {
    pub fn from_fn(g: &GroupParams, f: impl Fn(DihedralElement) -> DihedralElement) -> Self {
        FunctionTable {
            images: g.elements().into_iter().map(|x| f(x).index() as u32).collect(),
        }
    }

    /// `self`, then `next`.
    pub fn compose(&self, next: &FunctionTable) -> FunctionTable {
        FunctionTable {
            images: self
                .images
                .iter()
                .map(|&k| next.images[k as usize])
                .collect(),
        }
    }

    pub fn apply(&self, x: DihedralElement) -> usize {
        self.images[x.index()] as usize
    }

    /// Every image is a rotation.
    pub fn lands_in_rotations(&self, g: &GroupParams) -> bool {
        self.images.iter().all(|&k| (k as u64) < g.m())
    }

    /// The μ-function with this table, if there is one. `A` is read off the
    /// image of `a` and `2B` off the image of `b`; the whole table is then
    /// compared against that μ-map.
    pub fn decode_mu(&self, g: &GroupParams) -> Option<MuCanonical> {
        let m = g.m();
        if self.images.len() != g.order() || !self.lands_in_rotations(g) {
            return None;
        }
        let a = self.apply(g.rotation(1)) as u64;
        let two_b = self.apply(g.reflection(0)) as u64;
        let b = if m.is_multiple_of(2) {
            if !two_b.is_multiple_of(2) {
                return None;
            }
            two_b / 2
        } else {
            // 2^-1 = (m + 1) / 2
            (two_b as u128 * m.div_ceil(2) as u128 % m as u128) as u64
        };
        let candidate = MuCanonical {
            a: a as u32,
            b: (b % canonical_b_modulus(m)) as u32,
        };
        let map = candidate.to_map(g);
        g.elements()
            .into_iter()
            .all(|x| map.apply_unchecked(x).index() == self.apply(x))
            .then_some(candidate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Oracle {
    RawTables,
    MuPairs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ElementSet {
    /// Sorted canonical μ-pairs.
    Pairs(Vec<MuCanonical>),
    /// Sorted distinct function tables.
    Tables(Vec<FunctionTable>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub m: u64,
    pub side: Side,
    pub size: usize,
    /// Number of distinct generating maps.
    pub generator_count: usize,
    pub oracle: Oracle,
    pub elements: ElementSet,
}

impl SemigroupSummary {
    /// The elements as canonical μ-pairs. For table summaries each table is
    /// decoded; `None` if some table is not a μ-map.
    pub fn canonical_set(&self) -> Option<BTreeSet<MuCanonical>> {
        match &self.elements {
            ElementSet::Pairs(v) => Some(v.iter().copied().collect()),
            ElementSet::Tables(v) => {
                let g = GroupParams::new(self.m).ok()?;
                v.iter().map(|t| t.decode_mu(&g)).collect()
            }
        }
    }
}

/// Close the commutation maps of `D_m` as explicit tables. `m <= 128`.
pub fn close_raw(side: Side, g: &GroupParams) -> Result<SemigroupSummary> {
    if g.m() > RAW_MAX_M {
        return Err(Error::Resource(format!(
            "raw table closure limited to m <= {RAW_MAX_M} (got {})",
            g.m()
        )));
    }
    let mut index: HashMap<FunctionTable, usize> = HashMap::new();
    let mut elements: Vec<FunctionTable> = Vec::new();
    for y in g.elements() {
        let table = match side {
            Side::Right => FunctionTable::from_fn(g, |x| x.commutator(y)),
            Side::Left => FunctionTable::from_fn(g, |x| y.commutator(x)),
        };
        if !index.contains_key(&table) {
            index.insert(table.clone(), elements.len());
            elements.push(table);
        }
    }
    let generators = elements.clone();
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        next += 1;
        for generator in &generators {
            let product = current.compose(generator);
            if !index.contains_key(&product) {
                index.insert(product.clone(), elements.len());
                elements.push(product);
            }
        }
    }
    elements.sort();
    Ok(SemigroupSummary {
        m: g.m(),
        side,
        size: elements.len(),
        generator_count: generators.len(),
        oracle: Oracle::RawTables,
        elements: ElementSet::Tables(elements),
    })
}

/// Canonical forms of the `2m` commutation maps, deduplicated.
pub fn generator_pairs(side: Side, g: &GroupParams) -> Vec<MuCanonical> {
    let set: BTreeSet<MuCanonical> = (0..g.m() as i64)
        .flat_map(|r| (0..2).map(move |s| (r, s)))
        .map(|(r, s)| commutation_map(side, r, s, g).canonicalize())
        .collect();
    set.into_iter().collect()
}

/// Membership bitmap over the dense index of canonical pairs.
struct PairSet {
    words: Vec<u64>,
}

impl PairSet {
    fn new(capacity: usize) -> Self {
        PairSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    /// True if `k` was not present.
    fn insert(&mut self, k: usize) -> bool {
        let (w, bit) = (k / 64, 1u64 << (k % 64));
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

/// Close the commutation maps of `D_m` as canonical μ-pairs. `m <= 4096`.
pub fn close_pairs(side: Side, g: &GroupParams) -> Result<SemigroupSummary> {
    if g.m() > PAIRS_MAX_M {
        return Err(Error::Resource(format!(
            "pair closure limited to m <= {PAIRS_MAX_M} (got {})",
            g.m()
        )));
    }
    let m = g.m();
    let generators = generator_pairs(side, g);
    let elements = close_canonical(&generators, m);
    Ok(SemigroupSummary {
        m,
        side,
        size: elements.len(),
        generator_count: generators.len(),
        oracle: Oracle::MuPairs,
        elements: ElementSet::Pairs(elements),
    })
}

/// Subsemigroup generated by `generators`, sorted.
fn close_canonical(generators: &[MuCanonical], m: u64) -> Vec<MuCanonical> {
    let capacity = (m * canonical_b_modulus(m)) as usize;
    let mut seen = PairSet::new(capacity);
    let mut stack: Vec<MuCanonical> = Vec::new();
    for &f in generators {
        if seen.insert(f.dense_index(m)) {
            stack.push(f);
        }
    }
    // Composing on the right with μ(A', B') depends on A' alone, so one
    // generator per first coordinate is enough as a right factor.
    let mut right_factors: Vec<MuCanonical> = Vec::new();
    for &f in generators {
        if !right_factors.iter().any(|h| h.a == f.a) {
            right_factors.push(f);
        }
    }
    while let Some(f) = stack.pop() {
        for &h in &right_factors {
            let product = f.compose(h, m);
            if seen.insert(product.dense_index(m)) {
                stack.push(product);
            }
        }
    }
    seen.iter()
        .map(|k| MuCanonical::from_dense_index(k, m))
        .collect()
}

/// Whether `C(0, 1)` together with the container powers `C(x, 1)^k`
/// (`x = ∓2`) already accounts for the whole semigroup produced by
/// [`close_pairs`]. `m <= 256`.
pub fn generator_container_powers_suffice(side: Side, g: &GroupParams) -> Result<bool> {
    if g.m() > CONTAINER_POWERS_MAX_M {
        return Err(Error::Resource(format!(
            "container power check limited to m <= {CONTAINER_POWERS_MAX_M} (got {})",
            g.m()
        )));
    }
    let base = Container::new(side.multiplier(), 1, g);
    let mut powers: Vec<Container> = vec![base];
    loop {
        let next = powers.last().expect("non-empty").product(&base)?;
        if powers.contains(&next) {
            break;
        }
        powers.push(next);
    }
    let mut union: BTreeSet<MuCanonical> = Container::new(0, 1, g).members();
    for c in &powers {
        union.extend(c.members());
    }
    let closed = close_pairs(side, g)?;
    Ok(closed.canonical_set() == Some(union))
}

/// Result of checking a candidate isomorphism between two semigroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapCheck {
    Isomorphism,
    /// `source` is sent outside the target semigroup.
    OutsideTarget { source: MuCanonical, image: MuCanonical },
    /// Two elements share an image.
    NotInjective { first: MuCanonical, second: MuCanonical },
    /// Sizes differ, so no bijection exists.
    SizeMismatch { source: usize, target: usize },
    /// `φ(xy) ≠ φ(x) φ(y)`.
    NotHomomorphic { x: MuCanonical, y: MuCanonical },
}

impl MapCheck {
    pub fn holds(&self) -> bool {
        matches!(self, MapCheck::Isomorphism)
    }
}

/// Check that `rule`, applied to canonical pairs `(A, B)`, is an isomorphism
/// from the `from` semigroup of `D_m` onto the `to` semigroup.
pub fn verify_iso_map(
    g: &GroupParams,
    from: Side,
    to: Side,
    rule: impl Fn(u64, u64) -> (i64, i64),
) -> Result<MapCheck> {
    let m = g.m();
    let source = close_pairs(from, g)?.canonical_set().expect("pair summary");
    let target = close_pairs(to, g)?.canonical_set().expect("pair summary");
    if source.len() != target.len() {
        return Ok(MapCheck::SizeMismatch {
            source: source.len(),
            target: target.len(),
        });
    }
    let bm = canonical_b_modulus(m);
    let phi = |x: MuCanonical| {
        let (a, b) = rule(x.a as u64, x.b as u64);
        MuCanonical {
            a: residue(a, m) as u32,
            b: residue(b, bm) as u32,
        }
    };
    let mut images: HashMap<MuCanonical, MuCanonical> = HashMap::new();
    for &x in &source {
        let y = phi(x);
        if !target.contains(&y) {
            return Ok(MapCheck::OutsideTarget { source: x, image: y });
        }
        if let Some((&first, _)) = images.iter().find(|(_, &v)| v == y) {
            return Ok(MapCheck::NotInjective { first, second: x });
        }
        images.insert(x, y);
    }
    for &x in &source {
        for &y in &source {
            if phi(x.compose(y, m)) != images[&x].compose(images[&y], m) {
                return Ok(MapCheck::NotHomomorphic { x, y });
            }
        }
    }
    Ok(MapCheck::Isomorphism)
}
