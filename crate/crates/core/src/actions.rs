//! Actions of a finite acting group on groups and pointed sets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{
    coset_space, compose, invert_permutation, is_permutation, AutomorphismGroup, CosetSpace, FiniteGroup,
    Homomorphism, Subgroup,
};

/// Anything an acting group permutes: lets [`is_equivariant`] treat group and
/// pointed-set actions alike.
pub trait Action {
    fn acting(&self) -> &Arc<FiniteGroup>;
    fn carrier_size(&self) -> usize;
    fn act(&self, sigma: usize, x: usize) -> usize;
}

/// A homomorphism from the acting group into `Aut(target)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    acting: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Validates a fully specified action (`images[sigma]` for every sigma).
    pub fn new(acting: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<Vec<usize>>) -> Result<Self> {
        if images.len() != acting.order() {
            return Err(Error::WrongLength { len: images.len(), expected: acting.order() });
        }
        for (sigma, img) in images.iter().enumerate() {
            check_automorphism(&target, sigma, img)?;
        }
        check_homomorphic(&acting, &images)?;
        Ok(GroupAction { acting, target, images })
    }

    /// Builds an action from images of some acting elements, extending along
    /// products and checking every relation.
    pub fn from_generators(
        acting: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        given: &[(usize, Vec<usize>)],
    ) -> Result<Self> {
        for (sigma, img) in given {
            if *sigma >= acting.order() {
                return Err(Error::OutOfRange { value: *sigma, order: acting.order() });
            }
            check_automorphism(&target, *sigma, img)?;
        }
        let gens: Vec<usize> = given.iter().map(|(s, _)| *s).collect();
        let tree = acting.word_tree(&gens);
        if !tree.spans(acting.order()) {
            return Err(Error::Underdetermined);
        }
        let mut images = vec![Vec::new(); acting.order()];
        images[0] = target.elements().collect();
        for &x in &tree.order[1..] {
            let (p, i) = tree.parent[x].unwrap();
            images[x] = compose(&images[p], &given[i].1);
        }
        for (sigma, img) in given {
            if images[*sigma] != *img {
                return Err(Error::InconsistentGeneratorExtension { sigma: *sigma });
            }
        }
        match check_homomorphic(&acting, &images) {
            Ok(()) => Ok(GroupAction { acting, target, images }),
            Err(Error::ActionNotHomomorphic { sigma, .. }) => Err(Error::InconsistentGeneratorExtension { sigma }),
            Err(e) => Err(e),
        }
    }

    pub fn trivial(acting: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Self {
        let id: Vec<usize> = target.elements().collect();
        let images = vec![id; acting.order()];
        GroupAction { acting, target, images }
    }

    /// Action through a homomorphism `acting -> Aut(target)` given as indices
    /// into `aut`.
    pub fn from_aut_homomorphism(acting: Arc<FiniteGroup>, aut: &AutomorphismGroup, hom: &[usize]) -> Result<Self> {
        let images = hom.iter().map(|&i| aut.map(i).to_vec()).collect();
        Self::new(acting, aut.base().clone(), images)
    }

    pub fn acting(&self) -> &Arc<FiniteGroup> {
        &self.acting
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    pub fn image(&self, sigma: usize) -> &[usize] {
        &self.images[sigma]
    }

    /// `sigma(g)`
    #[inline]
    pub fn apply(&self, sigma: usize, g: usize) -> usize {
        self.images[sigma][g]
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|m| m.iter().enumerate().all(|(i, &v)| i == v))
    }

    pub fn require_same_acting(&self, other: &Arc<FiniteGroup>) -> Result<()> {
        if *self.acting != **other {
            return Err(Error::MismatchedActingGroup);
        }
        Ok(())
    }

    /// Index of `sigma`'s automorphism in `aut`.
    pub fn as_aut_homomorphism(&self, aut: &AutomorphismGroup) -> Vec<usize> {
        self.images.iter().map(|m| aut.index_of(m).expect("images are automorphisms")).collect()
    }

    /// Fails with a witness unless every `sigma` maps `n` into itself.
    pub fn require_invariant(&self, n: &Subgroup) -> Result<()> {
        for sigma in self.acting.elements() {
            for &x in n.members() {
                if !n.contains(self.apply(sigma, x)) {
                    return Err(Error::NotInvariant { sigma, n: x });
                }
            }
        }
        Ok(())
    }
}

impl Action for GroupAction {
    fn acting(&self) -> &Arc<FiniteGroup> {
        &self.acting
    }
    fn carrier_size(&self) -> usize {
        self.target.order()
    }
    fn act(&self, sigma: usize, x: usize) -> usize {
        self.apply(sigma, x)
    }
}

fn check_automorphism(target: &FiniteGroup, sigma: usize, img: &[usize]) -> Result<()> {
    if !is_permutation(img, target.order()) {
        return Err(Error::NotAnAutomorphism { sigma, reason: "not a bijection".into() });
    }
    crate::group::check_map(target, target, img)
        .map_err(|e| Error::NotAnAutomorphism { sigma, reason: e.to_string() })
}

fn check_homomorphic(acting: &FiniteGroup, images: &[Vec<usize>]) -> Result<()> {
    if images[0].iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::ActionNotHomomorphic { sigma: 0, tau: 0 });
    }
    for sigma in acting.elements() {
        for tau in acting.elements() {
            let st = &images[acting.mul(sigma, tau)];
            if images[tau].iter().enumerate().any(|(x, &y)| st[x] != images[sigma][y]) {
                return Err(Error::ActionNotHomomorphic { sigma, tau });
            }
        }
    }
    Ok(())
}

/// An action on a finite set `0..size` fixing a basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedSetAction {
    acting: Arc<FiniteGroup>,
    basepoint: usize,
    images: Vec<Vec<usize>>,
}

impl PointedSetAction {
    pub fn new(acting: Arc<FiniteGroup>, size: usize, basepoint: usize, images: Vec<Vec<usize>>) -> Result<Self> {
        if images.len() != acting.order() {
            return Err(Error::WrongLength { len: images.len(), expected: acting.order() });
        }
        if basepoint >= size {
            return Err(Error::OutOfRange { value: basepoint, order: size });
        }
        for (sigma, img) in images.iter().enumerate() {
            if !is_permutation(img, size) {
                return Err(Error::NotAnAutomorphism { sigma, reason: "not a permutation".into() });
            }
            if img[basepoint] != basepoint {
                return Err(Error::BasepointMoved { sigma, point: basepoint });
            }
        }
        check_homomorphic(&acting, &images)?;
        Ok(PointedSetAction { acting, basepoint, images })
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn size(&self) -> usize {
        self.images.first().map_or(0, |m| m.len())
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }
}

impl Action for PointedSetAction {
    fn acting(&self) -> &Arc<FiniteGroup> {
        &self.acting
    }
    fn carrier_size(&self) -> usize {
        self.size()
    }
    fn act(&self, sigma: usize, x: usize) -> usize {
        self.images[sigma][x]
    }
}

/// Fixed points of a group action, as a subgroup of the target.
pub fn h0(action: &GroupAction) -> Subgroup {
    let fixed: Vec<usize> = fixed_points(action);
    Subgroup::new(action.target().clone(), &fixed).expect("fixed points of automorphisms form a subgroup")
}

/// Fixed points of any action, ascending.
pub fn fixed_points<A: Action>(action: &A) -> Vec<usize> {
    (0..action.carrier_size())
        .filter(|&x| action.acting().elements().all(|s| action.act(s, x) == x))
        .collect()
}

/// Outcome of an equivariance test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivariance {
    Holds,
    FailsAt { sigma: usize, x: usize },
}

impl Equivariance {
    pub fn holds(self) -> bool {
        self == Equivariance::Holds
    }
}

/// Tests `f(sigma . x) = sigma . f(x)` for every `sigma` and `x`.
pub fn is_equivariant<A: Action, B: Action>(f: &[usize], src: &A, tgt: &B) -> Result<Equivariance> {
    if **src.acting() != **tgt.acting() {
        return Err(Error::MismatchedActingGroup);
    }
    if f.len() != src.carrier_size() {
        return Err(Error::WrongLength { len: f.len(), expected: src.carrier_size() });
    }
    if let Some(&v) = f.iter().find(|&&v| v >= tgt.carrier_size()) {
        return Err(Error::OutOfRange { value: v, order: tgt.carrier_size() });
    }
    for sigma in src.acting().elements() {
        for x in 0..src.carrier_size() {
            if f[src.act(sigma, x)] != tgt.act(sigma, f[x]) {
                return Ok(Equivariance::FailsAt { sigma, x });
            }
        }
    }
    Ok(Equivariance::Holds)
}

/// The pieces of `1 -> N -> G -> G/N -> 1` with their induced actions.
#[derive(Debug, Clone)]
pub struct Projection {
    pub subgroup: Subgroup,
    /// Action on `N`, labelled by position in `subgroup.members()`.
    pub restricted: GroupAction,
    /// `iota : N -> G`
    pub inclusion: Homomorphism,
    pub cosets: CosetSpace,
    /// Action on `G/N` as a pointed set, basepoint the coset `N`.
    pub coset_action: PointedSetAction,
    /// Action on the quotient group, when `N` is normal.
    pub quotient: Option<GroupAction>,
}

impl Projection {
    /// `pi` as a set map `G -> G/N`.
    pub fn projection_map(&self) -> Vec<usize> {
        self.inclusion.target().elements().map(|g| self.cosets.coset_of(g)).collect()
    }
}

/// Restricts to an invariant subgroup and pushes the action down to `G/N`.
pub fn restrict_and_project(action: &GroupAction, n: &Subgroup) -> Result<Projection> {
    if **n.ambient() != **action.target() {
        return Err(Error::NotASubgroup { reason: "subgroup of a different group".into() });
    }
    action.require_invariant(n)?;
    let (ngroup, inclusion) = n.as_group();
    let restricted_images: Vec<Vec<usize>> = action
        .images()
        .iter()
        .map(|m| n.members().iter().map(|&x| n.position(m[x]).unwrap()).collect())
        .collect();
    let restricted = GroupAction::new(action.acting().clone(), ngroup, restricted_images)?;

    let cosets = coset_space(action.target(), n)?;
    let coset_images: Vec<Vec<usize>> = action
        .images()
        .iter()
        .map(|m| (0..cosets.len()).map(|c| cosets.coset_of(m[cosets.representative(c)])).collect())
        .collect();
    let coset_action =
        PointedSetAction::new(action.acting().clone(), cosets.len(), CosetSpace::BASEPOINT, coset_images.clone())?;
    let quotient = match cosets.quotient() {
        Some(q) => Some(GroupAction::new(action.acting().clone(), q.clone(), coset_images)?),
        None => None,
    };
    Ok(Projection { subgroup: n.clone(), restricted, inclusion, cosets, coset_action, quotient })
}

/// Every subgroup of the target mapped into itself by the action.
pub fn invariant_subgroups(action: &GroupAction) -> Vec<Subgroup> {
    Subgroup::all(action.target()).into_iter().filter(|n| action.require_invariant(n).is_ok()).collect()
}

/// The induced action on `Aut(G)`: `sigma(phi) = sigma . phi . sigma^-1`.
#[derive(Debug, Clone)]
pub struct AutAction {
    pub base: GroupAction,
    pub aut: Arc<AutomorphismGroup>,
    /// The same action viewed as a [`GroupAction`] on the group `Aut(G)`.
    pub action: GroupAction,
}

impl AutAction {
    pub fn new(base: &GroupAction, aut: Arc<AutomorphismGroup>) -> Result<Self> {
        if **aut.base() != **base.target() {
            return Err(Error::ActionMismatch { reason: "automorphism group of a different group".into() });
        }
        let images: Vec<Vec<usize>> = base
            .images()
            .iter()
            .map(|rho| {
                let rho_inv = invert_permutation(rho);
                aut.maps()
                    .iter()
                    .map(|phi| {
                        let conj = compose(rho, &compose(phi, &rho_inv));
                        aut.index_of(&conj).expect("conjugate of an automorphism is one")
                    })
                    .collect()
            })
            .collect();
        // validating as a GroupAction on Aut(G) checks sigma(phi1 phi2) = sigma(phi1) sigma(phi2)
        let action = GroupAction::new(base.acting().clone(), aut.group().clone(), images)?;
        Ok(AutAction { base: base.clone(), aut, action })
    }

    /// `sigma(phi)` as an index into `aut`.
    #[inline]
    pub fn apply(&self, sigma: usize, phi: usize) -> usize {
        self.action.apply(sigma, phi)
    }
}
