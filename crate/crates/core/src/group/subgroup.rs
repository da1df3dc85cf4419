use std::collections::BTreeSet;
use std::sync::Arc;

use super::{FiniteGroup, Homomorphism};
use crate::error::{Error, Result};

/// A validated subgroup, members sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    ambient: Arc<FiniteGroup>,
    members: Vec<usize>,
    normal: bool,
}

impl Subgroup {
    pub fn new(ambient: Arc<FiniteGroup>, members: &[usize]) -> Result<Self> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= ambient.order()) {
            return Err(Error::OutOfRange { value: v, order: ambient.order() });
        }
        if members.first() != Some(&0) {
            return Err(Error::NotASubgroup { reason: "does not contain the identity".into() });
        }
        for &a in &members {
            if members.binary_search(&ambient.inv(a)).is_err() {
                return Err(Error::NotASubgroup { reason: format!("inverse of {a} missing") });
            }
            for &b in &members {
                if members.binary_search(&ambient.mul(a, b)).is_err() {
                    return Err(Error::NotASubgroup { reason: format!("{a}*{b} missing") });
                }
            }
        }
        let normal = normality_witness(&ambient, &members).is_none();
        Ok(Subgroup { ambient, members, normal })
    }

    pub fn generated(ambient: Arc<FiniteGroup>, gens: &[usize]) -> Result<Self> {
        if let Some(&v) = gens.iter().find(|&&v| v >= ambient.order()) {
            return Err(Error::OutOfRange { value: v, order: ambient.order() });
        }
        let members = ambient.closure(gens);
        Self::new(ambient, &members)
    }

    pub fn trivial(ambient: Arc<FiniteGroup>) -> Self {
        Self::new(ambient, &[0]).unwrap()
    }

    pub fn whole(ambient: Arc<FiniteGroup>) -> Self {
        let all: Vec<usize> = ambient.elements().collect();
        Self::new(ambient, &all).unwrap()
    }

    /// Every subgroup of `ambient`, ordered by size then members.
    pub fn all(ambient: &Arc<FiniteGroup>) -> Vec<Subgroup> {
        let mut found: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        let mut queue = vec![vec![0usize]];
        found.insert((1, vec![0]));
        while let Some(h) = queue.pop() {
            for g in ambient.elements() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let k = ambient.closure(&gens);
                if found.insert((k.len(), k.clone())) {
                    queue.push(k);
                }
            }
        }
        found.into_iter().map(|(_, m)| Self::new(ambient.clone(), &m).unwrap()).collect()
    }

    pub fn ambient(&self) -> &Arc<FiniteGroup> {
        &self.ambient
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Position of ambient element `x` in `members`, i.e. its label in
    /// [`Subgroup::as_group`].
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn require_normal(&self) -> Result<()> {
        match normality_witness(&self.ambient, &self.members) {
            None => Ok(()),
            Some((g, n)) => Err(Error::NotNormal { g, n }),
        }
    }

    /// The subgroup as a group in its own right, labelled by position in
    /// `members`, with the inclusion into the ambient group.
    pub fn as_group(&self) -> (Arc<FiniteGroup>, Homomorphism) {
        let rows: Vec<Vec<usize>> = self
            .members
            .iter()
            .map(|&a| self.members.iter().map(|&b| self.position(self.ambient.mul(a, b)).unwrap()).collect())
            .collect();
        let g = Arc::new(FiniteGroup::from_table(&rows).expect("subgroup of a group"));
        let incl = Homomorphism::new(g.clone(), self.ambient.clone(), self.members.clone()).unwrap();
        (g, incl)
    }
}

fn normality_witness(g: &FiniteGroup, members: &[usize]) -> Option<(usize, usize)> {
    for x in g.elements() {
        for &n in members {
            if members.binary_search(&g.conj(x, n)).is_err() {
                return Some((x, n));
            }
        }
    }
    None
}

/// Left cosets `gN`; coset `0` is `N` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    subgroup: Subgroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
    quotient: Option<Arc<FiniteGroup>>,
}

/// Enumerates `G/N`; the quotient group is present iff `N` is normal.
pub fn coset_space(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<CosetSpace> {
    if **n.ambient() != **g {
        return Err(Error::NotASubgroup { reason: "subgroup of a different group".into() });
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut cosets = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut c: Vec<usize> = n.members().iter().map(|&m| g.mul(x, m)).collect();
        c.sort_unstable();
        for &y in &c {
            coset_of[y] = cosets.len();
        }
        cosets.push(c);
    }
    let quotient = n.is_normal().then(|| {
        let rows: Vec<Vec<usize>> = cosets
            .iter()
            .map(|a| cosets.iter().map(|b| coset_of[g.mul(a[0], b[0])]).collect())
            .collect();
        Arc::new(FiniteGroup::from_table(&rows).expect("quotient by a normal subgroup"))
    });
    Ok(CosetSpace { subgroup: n.clone(), cosets, coset_of, quotient })
}

impl CosetSpace {
    pub const BASEPOINT: usize = 0;

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    #[inline]
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// Smallest element of coset `c`.
    pub fn representative(&self, c: usize) -> usize {
        self.cosets[c][0]
    }

    /// Left multiplication `g . (xN) = (gx)N`.
    pub fn act(&self, g: usize, c: usize) -> usize {
        self.coset_of[self.subgroup.ambient().mul(g, self.cosets[c][0])]
    }

    pub fn quotient(&self) -> Option<&Arc<FiniteGroup>> {
        self.quotient.as_ref()
    }

    /// `pi : G -> G/N` as a group homomorphism, when `N` is normal.
    pub fn projection(&self) -> Option<Homomorphism> {
        self.quotient
            .as_ref()
            .map(|q| Homomorphism::new(self.subgroup.ambient().clone(), q.clone(), self.coset_of.clone()).unwrap())
    }
}
