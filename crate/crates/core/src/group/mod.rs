//! Finite groups as validated Cayley tables.
//!
//! Elements are opaque indices `0..n` and `0` is always the identity; tables
//! whose identity sits elsewhere are relabelled at ingestion by swapping it
//! with `0`.

mod aut;
pub mod catalog;
mod subgroup;

use std::sync::Arc;

pub use aut::{compute_aut, AutomorphismGroup};
pub use subgroup::{coset_space, CosetSpace, Subgroup};

use crate::error::{Error, Result};
use crate::exec::{self, Settings};

/// A finite group stored as a flat `n x n` multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub const IDENTITY: usize = 0;

    /// Validates `rows` as a group table. See [`FiniteGroup::from_table_with_labels`].
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_with_labels(rows).map(|(g, _)| g)
    }

    /// Validates `rows` as a group table and returns the group together with the
    /// relabelling `input label -> internal label` (the identity when the input
    /// identity already sits at `0`).
    pub fn from_table_with_labels(rows: &[Vec<usize>]) -> Result<(Self, Vec<usize>)> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row, len: r.len(), expected: n });
            }
            if let Some(col) = r.iter().position(|&v| v >= n) {
                return Err(Error::NotClosed { row, col, value: r[col], order: n });
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(Error::NoIdentity)?;

        let mut labels: Vec<usize> = (0..n).collect();
        labels.swap(0, e);
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[labels[a] * n + labels[b]] = labels[rows[a][b]];
            }
        }

        let mut inverses = vec![usize::MAX; n];
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x * n + y] == 0 && table[y * n + x] == 0)
                .ok_or_else(|| Error::MissingInverse { element: original(&labels, x) })?;
            inverses[x] = inv;
        }

        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::NotAssociative {
                            a: original(&labels, a),
                            b: original(&labels, b),
                            c: original(&labels, c),
                        });
                    }
                }
            }
        }
        Ok((FiniteGroup { n, table, inverses }, labels))
    }

    pub fn trivial() -> Self {
        FiniteGroup { n: 1, table: vec![0], inverses: vec![0] }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `h * g * h^-1`
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Sorted subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.n).filter(|&x| seen[x]).collect()
    }

    /// Greedy small generating set: repeatedly add the element that enlarges
    /// the current span the most, lowest index on ties.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0];
        while span.len() < self.n {
            let mut best: Option<(usize, usize)> = None;
            for g in 0..self.n {
                if span.binary_search(&g).is_ok() {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(g);
                let size = self.closure(&trial).len();
                if best.is_none_or(|(_, s)| size > s) {
                    best = Some((g, size));
                }
            }
            let (g, _) = best.expect("span is proper, so some element lies outside it");
            gens.push(g);
            span = self.closure(&gens);
        }
        gens
    }

    /// Breadth-first words over `gens`: every element other than the identity
    /// is reached as `parent * gens[i]`.
    pub fn word_tree(&self, gens: &[usize]) -> WordTree {
        let mut parent = vec![None; self.n];
        let mut order = vec![0];
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (i, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, i));
                    order.push(y);
                }
            }
        }
        WordTree { order, parent }
    }
}

fn original(labels: &[usize], internal: usize) -> usize {
    labels.iter().position(|&l| l == internal).unwrap_or(internal)
}

/// Spanning tree of a Cayley graph, see [`FiniteGroup::word_tree`].
#[derive(Debug, Clone)]
pub struct WordTree {
    /// Reached elements in BFS order, starting with the identity.
    pub order: Vec<usize>,
    /// `parent[x] = Some((p, i))` with `x = p * gens[i]`.
    pub parent: Vec<Option<(usize, usize)>>,
}

impl WordTree {
    pub fn spans(&self, n: usize) -> bool {
        self.order.len() == n
    }
}

/// A validated group homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    image: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, image: Vec<usize>) -> Result<Self> {
        check_map(&source, &target, &image)?;
        Ok(Homomorphism { source, target, image })
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let image = g.elements().collect();
        Homomorphism { source: g.clone(), target: g, image }
    }

    /// Sends everything to the identity.
    pub fn trivial(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Self {
        let image = vec![0; source.order()];
        Homomorphism { source, target, image }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_bijective(&self) -> bool {
        is_permutation(&self.image, self.target.order())
    }
}

/// Checks that `image` is a homomorphism `source -> target`.
pub fn check_map(source: &FiniteGroup, target: &FiniteGroup, image: &[usize]) -> Result<()> {
    if image.len() != source.order() {
        return Err(Error::WrongLength { len: image.len(), expected: source.order() });
    }
    if let Some(&v) = image.iter().find(|&&v| v >= target.order()) {
        return Err(Error::OutOfRange { value: v, order: target.order() });
    }
    for x in source.elements() {
        for y in source.elements() {
            if image[source.mul(x, y)] != target.mul(image[x], image[y]) {
                return Err(Error::NotAHomomorphism { x, y });
            }
        }
    }
    Ok(())
}

pub(crate) fn is_permutation(map: &[usize], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub(crate) fn invert_permutation(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// `(f . g)(x) = f(g(x))`
pub(crate) fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// All homomorphisms `source -> target`, as image arrays sorted
/// lexicographically.
pub fn enumerate_homomorphisms(
    source: &FiniteGroup,
    target: &FiniteGroup,
    settings: &Settings,
) -> Result<Vec<Vec<usize>>> {
    search_maps(source, target, settings, "homomorphism search", false)
}

/// Generator-image search shared by homomorphism and automorphism
/// enumeration. Candidates for a generator of order `k` are target elements
/// whose order divides `k` (equals `k` when `bijective`).
pub(crate) fn search_maps(
    source: &FiniteGroup,
    target: &FiniteGroup,
    settings: &Settings,
    what: &'static str,
    bijective: bool,
) -> Result<Vec<Vec<usize>>> {
    let gens = source.generators();
    let tree = source.word_tree(&gens);
    let target_orders: Vec<usize> = target.elements().map(|x| target.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = source.element_order(g);
            target
                .elements()
                .filter(|&t| if bijective { target_orders[t] == k } else { k.is_multiple_of(target_orders[t]) })
                .collect()
        })
        .collect();
    let total: u128 = candidates.iter().map(|c| c.len() as u128).product();
    settings.check_budget(what, total)?;

    let mut all = exec::search_product(settings.exec, &candidates, |images| {
        let map = extend_along(source, target, &tree, images);
        let ok = (!bijective || is_permutation(&map, target.order())) && check_map(source, target, &map).is_ok();
        ok.then_some(map)
    });
    all.sort();
    all.dedup();
    Ok(all)
}

fn extend_along(source: &FiniteGroup, target: &FiniteGroup, tree: &WordTree, gen_images: &[usize]) -> Vec<usize> {
    let mut map = vec![0; source.order()];
    for &x in &tree.order[1..] {
        let (p, i) = tree.parent[x].expect("non-identity elements have parents");
        map[x] = target.mul(map[p], gen_images[i]);
    }
    map
}
