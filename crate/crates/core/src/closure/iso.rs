//! Isomorphism search between finite semigroups given by Cayley tables.
//!
//! Elements are first split into classes by isomorphism-invariant data and
//! the classes are refined against the multiplication until stable. The
//! search then repeatedly picks the unmapped element whose image forces the
//! most further images and tries each unused element of the matching class.
//! Each choice is extended to all products of mapped elements and followed by
//! another refinement in which every mapped pair gets a color of its own.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};

use serde::Serialize;

use super::{ElementSet, SemigroupSummary};
use crate::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
/// Cayley tables above this size are not built.
pub const MAX_SEARCH_SIZE: usize = 4096;

const UNSET: u32 = u32::MAX;

/// Multiplication table of a finite semigroup on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    size: usize,
    products: Vec<u32>,
}

impl CayleyTable {
    pub fn new(size: usize, product: impl Fn(usize, usize) -> usize) -> Self {
        let mut products = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                products.push(product(x, y) as u32);
            }
        }
        CayleyTable { size, products }
    }

    /// Table over the sorted elements of `summary`.
    pub fn from_summary(summary: &SemigroupSummary) -> Result<Self> {
        if summary.size > MAX_SEARCH_SIZE {
            return Err(Error::Resource(format!(
                "Cayley table limited to {MAX_SEARCH_SIZE} elements (got {})",
                summary.size
            )));
        }
        let m = summary.m;
        Ok(match &summary.elements {
            ElementSet::Pairs(v) => {
                let position: HashMap<_, _> = v.iter().enumerate().map(|(k, &f)| (f, k)).collect();
                CayleyTable::new(v.len(), |x, y| position[&v[x].compose(v[y], m)])
            }
            ElementSet::Tables(v) => {
                let position: HashMap<_, _> = v.iter().enumerate().map(|(k, f)| (f, k)).collect();
                CayleyTable::new(v.len(), |x, y| position[&v[x].compose(&v[y])])
            }
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn product(&self, x: usize, y: usize) -> usize {
        self.products[x * self.size + y] as usize
    }

    pub fn is_associative(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.product(x, y);
                (0..n).all(|z| self.product(xy, z) == self.product(x, self.product(y, z)))
            })
        })
    }

    /// `map` is a bijective homomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &CayleyTable, map: &[usize]) -> bool {
        let n = self.size;
        if other.size != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in map {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        (0..n).all(|x| {
            (0..n).all(|y| map[self.product(x, y)] == other.product(map[x], map[y]))
        })
    }

    /// Invariant fingerprint of each element.
    fn initial_colors(&self) -> Vec<u64> {
        let n = self.size;
        let mut stamp = vec![usize::MAX; n];
        let mut step = vec![0usize; n];
        (0..n)
            .map(|x| {
                // index and period of the monogenic subsemigroup
                let (mut power, mut k) = (x, 1usize);
                while stamp[power] != x {
                    stamp[power] = x;
                    step[power] = k;
                    power = self.product(power, x);
                    k += 1;
                }
                let index = step[power];
                let period = k - step[power];
                let mut row_seen = vec![false; n];
                let mut col_seen = vec![false; n];
                let (mut row, mut col, mut commuting) = (0, 0, 0);
                let (mut fixes_left, mut fixes_right, mut absorbs_left, mut absorbs_right) = (0, 0, 0, 0);
                for y in 0..n {
                    let (xy, yx) = (self.product(x, y), self.product(y, x));
                    row += !std::mem::replace(&mut row_seen[xy], true) as usize;
                    col += !std::mem::replace(&mut col_seen[yx], true) as usize;
                    commuting += (xy == yx) as usize;
                    fixes_left += (xy == x) as usize;
                    fixes_right += (yx == x) as usize;
                    absorbs_left += (xy == y) as usize;
                    absorbs_right += (yx == y) as usize;
                }
                hash(&(
                    self.product(x, x) == x,
                    index,
                    period,
                    row,
                    col,
                    commuting,
                    (fixes_left, fixes_right, absorbs_left, absorbs_right),
                ))
            })
            .collect()
    }

    fn refine(&self, colors: &[u32]) -> Vec<u64> {
        (0..self.size)
            .map(|x| {
                let mut around: Vec<(u32, u32, u32)> = (0..self.size)
                    .map(|y| {
                        (
                            colors[y],
                            colors[self.product(x, y)],
                            colors[self.product(y, x)],
                        )
                    })
                    .collect();
                around.sort_unstable();
                hash(&(colors[x], around))
            })
            .collect()
    }
}

fn hash<T: Hash>(value: &T) -> u64 {
    let mut h = DefaultHasher::new();
    value.hash(&mut h);
    h.finish()
}

/// Renumber two fingerprint vectors with a shared class numbering.
fn joint_classes(a: &[u64], b: &[u64]) -> (Vec<u32>, Vec<u32>, usize) {
    let mut ids: BTreeMap<u64, u32> = BTreeMap::new();
    for &c in a.iter().chain(b) {
        let next = ids.len() as u32;
        ids.entry(c).or_insert(next);
    }
    let relabel = |v: &[u64]| v.iter().map(|c| ids[c]).collect::<Vec<_>>();
    (relabel(a), relabel(b), ids.len())
}

fn histogram(colors: &[u32], classes: usize) -> Vec<usize> {
    let mut h = vec![0; classes];
    for &c in colors {
        h[c as usize] += 1;
    }
    h
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum IsoOutcome {
    /// `witness[x]` is the image of element `x`.
    Isomorphic { witness: Vec<usize>, nodes: u64 },
    NotIsomorphic { nodes: u64 },
    /// The search gave up; nothing is claimed.
    BudgetExhausted { nodes: u64 },
}

impl IsoOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            IsoOutcome::Isomorphic { .. } => "isomorphic",
            IsoOutcome::NotIsomorphic { .. } => "not isomorphic",
            IsoOutcome::BudgetExhausted { .. } => "inconclusive (budget exhausted)",
        }
    }
}

/// Search for an isomorphism between two semigroup summaries. Any witness
/// returned has been checked against both full Cayley tables.
pub fn search_isomorphism(
    s1: &SemigroupSummary,
    s2: &SemigroupSummary,
    budget: u64,
) -> Result<IsoOutcome> {
    if s1.size != s2.size {
        return Ok(IsoOutcome::NotIsomorphic { nodes: 0 });
    }
    let t1 = CayleyTable::from_summary(s1)?;
    let t2 = CayleyTable::from_summary(s2)?;
    Ok(search_tables(&t1, &t2, budget))
}

/// Refine two colorings jointly until the number of classes stops growing.
/// `None` if the class sizes of the two tables differ at some stage.
fn stable_colors(
    t1: &CayleyTable,
    t2: &CayleyTable,
    start1: &[u64],
    start2: &[u64],
) -> Option<(Vec<u32>, Vec<u32>, usize)> {
    let (mut c1, mut c2, mut classes) = joint_classes(start1, start2);
    loop {
        if histogram(&c1, classes) != histogram(&c2, classes) {
            return None;
        }
        let (r1, r2, refined) = joint_classes(&t1.refine(&c1), &t2.refine(&c2));
        if refined == classes {
            return Some((c1, c2, classes));
        }
        (c1, c2, classes) = (r1, r2, refined);
    }
}

/// [`search_isomorphism`] on bare tables.
pub fn search_tables(t1: &CayleyTable, t2: &CayleyTable, budget: u64) -> IsoOutcome {
    let n = t1.size;
    if t2.size != n {
        return IsoOutcome::NotIsomorphic { nodes: 0 };
    }
    if n == 0 {
        return IsoOutcome::Isomorphic { witness: Vec::new(), nodes: 0 };
    }
    let Some((c1, c2, _)) = stable_colors(t1, t2, &t1.initial_colors(), &t2.initial_colors())
    else {
        return IsoOutcome::NotIsomorphic { nodes: 0 };
    };
    let mut search = Search {
        t1,
        t2,
        nodes: 0,
        budget,
    };
    let state = Partial {
        map: vec![UNSET; n],
        used: vec![false; n],
        mapped: Vec::new(),
    };
    match search.extend(state, c1, c2) {
        Step::Found(witness) => IsoOutcome::Isomorphic { witness, nodes: search.nodes },
        Step::Exhausted => IsoOutcome::BudgetExhausted { nodes: search.nodes },
        Step::Failed => IsoOutcome::NotIsomorphic { nodes: search.nodes },
    }
}

enum Step {
    Found(Vec<usize>),
    Failed,
    Exhausted,
}

/// An injective partial map closed under products of mapped elements.
#[derive(Clone)]
struct Partial {
    map: Vec<u32>,
    used: Vec<bool>,
    mapped: Vec<usize>,
}

impl Partial {
    /// False if `x` or `y` is already paired differently.
    fn assign(&mut self, x: usize, y: usize, queue: &mut Vec<usize>) -> bool {
        if self.map[x] != UNSET {
            return self.map[x] as usize == y;
        }
        if self.used[y] {
            return false;
        }
        self.map[x] = y as u32;
        self.used[y] = true;
        self.mapped.push(x);
        queue.push(x);
        true
    }
}

struct Search<'a> {
    t1: &'a CayleyTable,
    t2: &'a CayleyTable,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `c1`, `c2` form a stable joint coloring of the two tables.
    fn extend(&mut self, mut state: Partial, mut c1: Vec<u32>, mut c2: Vec<u32>) -> Step {
        // classes with one element each must correspond
        loop {
            let classes = c1.iter().chain(&c2).max().map_or(0, |&c| c as usize + 1);
            let (mut only1, mut only2) = (vec![UNSET; classes], vec![UNSET; classes]);
            for (x, &c) in c1.iter().enumerate() {
                only1[c as usize] = if only1[c as usize] == UNSET { x as u32 } else { UNSET - 1 };
            }
            for (y, &c) in c2.iter().enumerate() {
                only2[c as usize] = if only2[c as usize] == UNSET { y as u32 } else { UNSET - 1 };
            }
            let mut queue = Vec::new();
            for (&x, &y) in only1.iter().zip(&only2) {
                if x < UNSET - 1 && state.map[x as usize] == UNSET
                    && (y >= UNSET - 1 || !state.assign(x as usize, y as usize, &mut queue)) {
                        return Step::Failed;
                    }
            }
            if queue.is_empty() {
                break;
            }
            if !self.close(&mut state, queue) {
                return Step::Failed;
            }
            match self.individualize(&c1, &c2, &state.map) {
                Some((n1, n2)) => (c1, c2) = (n1, n2),
                None => return Step::Failed,
            }
        }
        if state.mapped.len() == self.t1.size {
            let witness: Vec<usize> = state.map.iter().map(|&y| y as usize).collect();
            return if self.t1.is_isomorphism(self.t2, &witness) {
                Step::Found(witness)
            } else {
                Step::Failed
            };
        }
        let x = self.branch_element(&state, &c1);
        let candidates: Vec<usize> = (0..self.t2.size)
            .filter(|&y| c2[y] == c1[x] && !state.used[y])
            .collect();
        for y in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::Exhausted;
            }
            let mut next = state.clone();
            let mut queue = Vec::new();
            if !next.assign(x, y, &mut queue) || !self.close(&mut next, queue) {
                continue;
            }
            let Some((n1, n2)) = self.individualize(&c1, &c2, &next.map) else {
                continue;
            };
            match self.extend(next, n1, n2) {
                Step::Failed => {}
                done => return done,
            }
        }
        Step::Failed
    }

    /// The unmapped element whose image would force the most further
    /// images, from its powers and its products with mapped elements; ties
    /// go to the smaller class. One element per class is examined.
    fn branch_element(&self, state: &Partial, c1: &[u32]) -> usize {
        let n = self.t1.size;
        let mut sizes = vec![0usize; n];
        let mut representative = vec![UNSET; n];
        for x in 0..n {
            sizes[c1[x] as usize] += 1;
            if state.map[x] == UNSET && representative[c1[x] as usize] == UNSET {
                representative[c1[x] as usize] = x as u32;
            }
        }
        let mut stamp = vec![usize::MAX; n];
        let mut best = (0usize, usize::MAX, usize::MAX);
        for &r in representative.iter().filter(|&&r| r != UNSET) {
            let x = r as usize;
            let mut forced = 0;
            let mut mark = |e: usize, forced: &mut usize| {
                if state.map[e] == UNSET && stamp[e] != x {
                    stamp[e] = x;
                    *forced += 1;
                }
            };
            let mut power = x;
            loop {
                let before = forced;
                mark(power, &mut forced);
                if forced == before && power != x {
                    break;
                }
                power = self.t1.product(power, x);
                if power == x {
                    break;
                }
            }
            for &q in &state.mapped {
                mark(self.t1.product(x, q), &mut forced);
                mark(self.t1.product(q, x), &mut forced);
            }
            let key = (forced, usize::MAX - sizes[c1[x] as usize], usize::MAX - x);
            if key > best {
                best = key;
            }
        }
        usize::MAX - best.2
    }

    /// Extend the map to every product of mapped elements. False on a clash
    /// with multiplication or injectivity.
    fn close(&self, state: &mut Partial, mut queue: Vec<usize>) -> bool {
        while let Some(p) = queue.pop() {
            let mut k = 0;
            while k < state.mapped.len() {
                let q = state.mapped[k];
                k += 1;
                for (u, v) in [(p, q), (q, p)] {
                    let image = self.t2.product(state.map[u] as usize, state.map[v] as usize);
                    if !state.assign(self.t1.product(u, v), image, &mut queue) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Give each mapped pair a fresh shared color and refine again.
    fn individualize(&self, c1: &[u32], c2: &[u32], map: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
        const FIXED: u64 = 1 << 63;
        let mut s1: Vec<u64> = c1.iter().map(|&c| c as u64).collect();
        let mut s2: Vec<u64> = c2.iter().map(|&c| c as u64).collect();
        for (x, &y) in map.iter().enumerate() {
            if y != UNSET {
                s1[x] = FIXED | x as u64;
                s2[y as usize] = FIXED | x as u64;
            }
        }
        stable_colors(self.t1, self.t2, &s1, &s2).map(|(a, b, _)| (a, b))
    }
}
