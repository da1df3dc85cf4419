use std::collections::HashMap;
use std::sync::Arc;

use super::{compose, invert_permutation, search_maps, FiniteGroup};
use crate::error::{Error, Result};
use crate::exec::Settings;

/// `Aut(G)` with its elements listed lexicographically; element `0` is the
/// identity map and the group law is composition (`i * j` applies `j` first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    base: Arc<FiniteGroup>,
    maps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    group: Arc<FiniteGroup>,
}

/// All automorphisms of `g`, found by trying every image tuple for a greedy
/// generating set.
pub fn compute_aut(g: &Arc<FiniteGroup>, settings: &Settings) -> Result<AutomorphismGroup> {
    if g.order() > settings.max_aut_order {
        return Err(Error::SizeLimitExceeded {
            what: "automorphism search",
            needed: g.order() as u128,
            limit: settings.max_aut_order as u128,
        });
    }
    let maps = search_maps(g, g, settings, "automorphism search", true)?;
    AutomorphismGroup::from_maps(g.clone(), maps)
}

impl AutomorphismGroup {
    fn from_maps(base: Arc<FiniteGroup>, maps: Vec<Vec<usize>>) -> Result<Self> {
        let index: HashMap<Vec<usize>, usize> = maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let rows: Vec<Vec<usize>> = maps
            .iter()
            .map(|a| maps.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let group = Arc::new(FiniteGroup::from_table(&rows)?);
        Ok(AutomorphismGroup { base, maps, index, group })
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &[usize] {
        &self.maps[i]
    }

    #[inline]
    pub fn apply(&self, i: usize, x: usize) -> usize {
        self.maps[i][x]
    }

    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).copied()
    }

    /// Index of `x -> h x h^-1`.
    pub fn inner(&self, h: usize) -> usize {
        let m: Vec<usize> = self.base.elements().map(|x| self.base.conj(h, x)).collect();
        self.index[&m]
    }

    pub fn inverse_map(&self, i: usize) -> Vec<usize> {
        invert_permutation(&self.maps[i])
    }
}
