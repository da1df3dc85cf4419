//! Cocycles, the pointed set `H^1`, induced maps, the connecting map and the
//! six-term exact sequence.
//!
//! A cocycle is a map `Phi` from the acting group to the target with
//! `Phi(st) = Phi(s) * s(Phi(t))`; `Phi` and `Psi` are cohomologous when
//! `Psi(s) = b^-1 * Phi(s) * s(b)` for some `b`.

use std::collections::HashMap;

use serde::Serialize;

use crate::actions::{fixed_points, is_equivariant, restrict_and_project, Equivariance, GroupAction, Projection};
use crate::error::{Error, Result};
use crate::exec::{self, Settings};
use crate::group::{FiniteGroup, Homomorphism, Subgroup};

/// Values of a cocycle, indexed by acting element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cocycle(Vec<usize>);

impl Cocycle {
    pub fn new(action: &GroupAction, values: Vec<usize>) -> Result<Self> {
        check_cocycle(action, &values)?;
        Ok(Cocycle(values))
    }

    pub fn trivial(action: &GroupAction) -> Self {
        Cocycle(vec![0; action.acting().order()])
    }

    /// `sigma -> b^-1 * sigma(b)`
    pub fn coboundary(action: &GroupAction, b: usize) -> Self {
        let g = action.target();
        Cocycle(action.acting().elements().map(|s| g.mul(g.inv(b), action.apply(s, b))).collect())
    }

    #[cfg(test)]
    pub(crate) fn from_values(values: Vec<usize>) -> Self {
        Cocycle(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn at(&self, sigma: usize) -> usize {
        self.0[sigma]
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// `sigma -> b^-1 * Phi(sigma) * sigma(b)`, the cocycle `b` relates this one to.
    pub fn shifted(&self, action: &GroupAction, b: usize) -> Cocycle {
        Cocycle(shift(action, &self.0, b))
    }

    /// Pointwise image under a set map on the target.
    pub fn map_values(&self, f: &[usize]) -> Cocycle {
        Cocycle(self.0.iter().map(|&v| f[v]).collect())
    }
}

pub(crate) fn shift(action: &GroupAction, values: &[usize], b: usize) -> Vec<usize> {
    let g = action.target();
    let binv = g.inv(b);
    values.iter().enumerate().map(|(s, &v)| g.mul(g.mul(binv, v), action.apply(s, b))).collect()
}

/// Checks the crossed-homomorphism identity on every pair.
pub fn check_cocycle(action: &GroupAction, values: &[usize]) -> Result<()> {
    let gg = action.acting();
    let g = action.target();
    if values.len() != gg.order() {
        return Err(Error::ActionMismatch {
            reason: format!("cocycle has {} values, acting group has {} elements", values.len(), gg.order()),
        });
    }
    if let Some(&v) = values.iter().find(|&&v| v >= g.order()) {
        return Err(Error::OutOfRange { value: v, order: g.order() });
    }
    for s in gg.elements() {
        for t in gg.elements() {
            if values[gg.mul(s, t)] != g.mul(values[s], action.apply(s, values[t])) {
                return Err(Error::NotACocycle { sigma1: s, sigma2: t });
            }
        }
    }
    Ok(())
}

/// The full set `Z^1`, sorted lexicographically (so the trivial cocycle is
/// first).
///
/// Values are chosen on a generating set and propagated along a spanning tree
/// of the Cayley graph; each generator `g` of order `m` is only offered values
/// `c` with `c * g(c) * ... * g^(m-1)(c) = 1`, which every cocycle satisfies.
pub fn enumerate_cocycles(action: &GroupAction, settings: &Settings) -> Result<Vec<Cocycle>> {
    let gg = action.acting();
    let g = action.target();
    let gens = gg.generators();
    let raw: u128 = (g.order() as u128).saturating_pow(gens.len() as u32);
    settings.check_budget("cocycle enumeration", raw)?;
    let tree = gg.word_tree(&gens);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&gen| {
            let m = gg.element_order(gen);
            g.elements()
                .filter(|&c| {
                    let mut v = 0;
                    for _ in 0..m {
                        v = g.mul(c, action.apply(gen, v));
                    }
                    v == 0
                })
                .collect()
        })
        .collect();

    let mut out = exec::search_product(settings.exec, &candidates, |gen_values| {
        let mut values = vec![0; gg.order()];
        for &x in &tree.order[1..] {
            let (p, i) = tree.parent[x].unwrap();
            values[x] = g.mul(values[p], action.apply(p, gen_values[i]));
        }
        check_cocycle(action, &values).is_ok().then_some(Cocycle(values))
    });
    out.sort();
    Ok(out)
}

/// Some `b` with `Psi(s) = b^-1 * Phi(s) * s(b)` for all `s`, smallest first.
pub fn cohomologous_witness(action: &GroupAction, phi: &Cocycle, psi: &Cocycle) -> Result<Option<usize>> {
    check_cocycle(action, phi.values())?;
    check_cocycle(action, psi.values())?;
    Ok(action.target().elements().find(|&b| shift(action, phi.values(), b) == psi.values()))
}

/// One cohomology class: a canonical (lexicographically least) representative
/// and the indices of its members in [`CohomologySet::cocycles`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// `H^1` as a partition of `Z^1`. Class `0` holds the trivial cocycle.
#[derive(Debug, Clone)]
pub struct CohomologySet {
    action: GroupAction,
    cocycles: Vec<Cocycle>,
    index: HashMap<Vec<usize>, usize>,
    class_of: Vec<usize>,
    classes: Vec<CohomologyClass>,
    witness: Vec<usize>,
}

/// Enumerates `Z^1` and partitions it into cohomology classes.
pub fn h1(action: &GroupAction, settings: &Settings) -> Result<CohomologySet> {
    let cocycles = enumerate_cocycles(action, settings)?;
    CohomologySet::from_cocycles(action, cocycles, settings)
}

impl CohomologySet {
    /// Partitions a complete, sorted `Z^1`. Each cocycle's class representative
    /// is the least cocycle in its orbit under `b`, found independently per
    /// cocycle so the work splits across threads.
    pub fn from_cocycles(action: &GroupAction, cocycles: Vec<Cocycle>, settings: &Settings) -> Result<Self> {
        let index: HashMap<Vec<usize>, usize> =
            cocycles.iter().enumerate().map(|(i, c)| (c.0.clone(), i)).collect();
        let g = action.target();
        let least = exec::try_map(settings.exec, &cocycles, |phi| {
            let (b, rep) = g
                .elements()
                .map(|b| (b, shift(action, phi.values(), b)))
                .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
                .unwrap();
            let rep = *index.get(&rep).ok_or_else(|| Error::NotWellDefined {
                reason: "cocycle list is not closed under the cohomologous relation".into(),
            })?;
            // rep = b^-1 phi s(b), so phi = b rep s(b^-1)
            Ok((rep, g.inv(b)))
        })?;

        let mut class_by_rep: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<CohomologyClass> = Vec::new();
        let mut class_of = vec![0; cocycles.len()];
        let mut witness = vec![0; cocycles.len()];
        for (i, &(rep, w)) in least.iter().enumerate() {
            let c = *class_by_rep.entry(rep).or_insert_with(|| {
                classes.push(CohomologyClass { representative: rep, members: Vec::new() });
                classes.len() - 1
            });
            classes[c].members.push(i);
            class_of[i] = c;
            witness[i] = w;
        }
        let set = CohomologySet { action: action.clone(), cocycles, index, class_of, classes, witness };
        set.validate()?;
        Ok(set)
    }

    fn validate(&self) -> Result<()> {
        if let Some(first) = self.cocycles.first() {
            if !first.is_trivial() {
                return Err(Error::NotWellDefined { reason: "trivial cocycle missing from Z^1".into() });
            }
        }
        for (i, phi) in self.cocycles.iter().enumerate() {
            let rep = &self.cocycles[self.classes[self.class_of[i]].representative];
            if shift(&self.action, rep.values(), self.witness[i]) != phi.values() {
                return Err(Error::NotAWitness { b: self.witness[i], sigma: 0 });
            }
        }
        Ok(())
    }

    pub const BASEPOINT: usize = 0;

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn z1_size(&self) -> usize {
        self.cocycles.len()
    }

    pub fn cocycles(&self) -> &[Cocycle] {
        &self.cocycles
    }

    pub fn classes(&self) -> &[CohomologyClass] {
        &self.classes
    }

    pub fn representative(&self, class: usize) -> &Cocycle {
        &self.cocycles[self.classes[class].representative]
    }

    pub fn class_of(&self, cocycle: usize) -> usize {
        self.class_of[cocycle]
    }

    pub fn index_of(&self, values: &[usize]) -> Option<usize> {
        self.index.get(values).copied()
    }

    /// Class of an arbitrary cocycle given by its values.
    pub fn class_of_values(&self, values: &[usize]) -> Option<usize> {
        self.index_of(values).map(|i| self.class_of[i])
    }

    /// The stored `b` with `cocycle = b^-1 * rep * s(b)`.
    pub fn witness(&self, cocycle: usize) -> usize {
        self.witness[cocycle]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    /// Pointed map induced by a value map `f` on the targets, checked to be
    /// constant on classes.
    pub fn induced_by_values(&self, f: &[usize], target: &CohomologySet) -> Result<PointedMap> {
        let mut class_map = Vec::with_capacity(self.len());
        for (ci, class) in self.classes.iter().enumerate() {
            let mut image = None;
            for &m in &class.members {
                let v: Vec<usize> = self.cocycles[m].values().iter().map(|&x| f[x]).collect();
                let c = target.class_of_values(&v).ok_or_else(|| Error::NotWellDefined {
                    reason: format!("image of cocycle {m} is not a cocycle of the target"),
                })?;
                match image {
                    None => image = Some(c),
                    Some(prev) if prev != c => {
                        return Err(Error::NotWellDefined { reason: format!("class {ci} splits under the map") })
                    }
                    _ => {}
                }
            }
            class_map.push(image.unwrap());
        }
        Ok(PointedMap { class_map, target_size: target.len() })
    }

    /// JSON-ready summary.
    pub fn report(&self) -> H1Report {
        H1Report {
            z1_size: self.z1_size(),
            classes: self
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| ClassEntry {
                    rep: self.cocycles[c.representative].values().to_vec(),
                    size: c.members.len(),
                    basepoint: i == Self::BASEPOINT,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub rep: Vec<usize>,
    pub size: usize,
    pub basepoint: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Report {
    pub z1_size: usize,
    pub classes: Vec<ClassEntry>,
}

/// Group law on `H^1` for an abelian target: `[Phi][Psi] = [Phi * Psi]`.
pub fn h1_group_structure(h: &CohomologySet) -> Result<FiniteGroup> {
    let g = h.action().target();
    if !g.is_abelian() {
        return Err(Error::TargetNotAbelian);
    }
    let product = |a: &Cocycle, b: &Cocycle| -> Vec<usize> {
        a.values().iter().zip(b.values()).map(|(&x, &y)| g.mul(x, y)).collect()
    };
    let mut rows = vec![vec![0; h.len()]; h.len()];
    for (ci, c) in h.classes().iter().enumerate() {
        for (di, d) in h.classes().iter().enumerate() {
            let mut entry = None;
            for &x in &c.members {
                for &y in &d.members {
                    let k = h.class_of_values(&product(&h.cocycles()[x], &h.cocycles()[y])).ok_or_else(|| {
                        Error::NotWellDefined { reason: "pointwise product left Z^1".into() }
                    })?;
                    if *entry.get_or_insert(k) != k {
                        return Err(Error::NotWellDefined { reason: format!("product of classes {ci}, {di}") });
                    }
                }
            }
            rows[ci][di] = entry.unwrap();
        }
    }
    FiniteGroup::from_table(&rows)
}

/// A basepoint-preserving map between pointed sets labelled `0..n`, with `0`
/// the basepoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointedMap {
    pub class_map: Vec<usize>,
    pub target_size: usize,
}

impl PointedMap {
    pub fn identity(n: usize) -> Self {
        PointedMap { class_map: (0..n).collect(), target_size: n }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.class_map[x]
    }

    pub fn preserves_basepoint(&self) -> bool {
        self.class_map.first().is_none_or(|&b| b == 0)
    }

    /// Sorted preimage of `y`.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.class_map.len()).filter(|&x| self.class_map[x] == y).collect()
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.fiber(0)
    }

    /// Sorted, deduplicated image.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.class_map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.class_map.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target_size
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// `f^1 : H^1(G) -> H^1(G')` for an equivariant homomorphism `f`.
pub fn induced_map_h1(f: &Homomorphism, source: &CohomologySet, target: &CohomologySet) -> Result<PointedMap> {
    if **f.source() != **source.action().target() || **f.target() != **target.action().target() {
        return Err(Error::ActionMismatch { reason: "homomorphism does not match the cohomology targets".into() });
    }
    if let Equivariance::FailsAt { sigma, x } = is_equivariant(f.image(), source.action(), target.action())? {
        return Err(Error::NotEquivariant { sigma, x });
    }
    source.induced_by_values(f.image(), target)
}

/// `f^0 : H^0(G) -> H^0(G')`, both sides as sorted element lists.
pub fn induced_map_h0(f: &[usize], fixed_source: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = fixed_source.iter().map(|&x| f[x]).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// `delta : H^0(G/N) -> H^1(N)` on the fixed cosets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectingMap {
    /// Fixed cosets, ascending (the basepoint coset first).
    pub fixed_cosets: Vec<usize>,
    /// Class in `H^1(N)` of each fixed coset.
    pub classes: Vec<usize>,
}

impl ConnectingMap {
    pub fn class_of_coset(&self, coset: usize) -> Option<usize> {
        self.fixed_cosets.iter().position(|&c| c == coset).map(|i| self.classes[i])
    }
}

/// Computes `delta`, recomputing with every preimage `b` of each fixed coset
/// and failing if the class depends on the choice.
pub fn connecting_map(action: &GroupAction, n: &Subgroup, settings: &Settings) -> Result<ConnectingMap> {
    let proj = restrict_and_project(action, n)?;
    let h1n = h1(&proj.restricted, settings)?;
    connecting_map_from(action, &proj, &h1n)
}

pub(crate) fn connecting_map_from(action: &GroupAction, proj: &Projection, h1n: &CohomologySet) -> Result<ConnectingMap> {
    let g = action.target();
    let fixed_cosets = fixed_points(&proj.coset_action);
    let mut classes = Vec::with_capacity(fixed_cosets.len());
    for &a in &fixed_cosets {
        let mut class = None;
        for &b in &proj.cosets.cosets()[a] {
            let values: Vec<usize> = action
                .acting()
                .elements()
                .map(|s| {
                    let v = g.mul(g.inv(b), action.apply(s, b));
                    proj.subgroup.position(v).ok_or_else(|| Error::NotWellDefined {
                        reason: format!("b^-1 s(b) = {v} is outside N for b = {b}"),
                    })
                })
                .collect::<Result<_>>()?;
            let c = h1n.class_of_values(&values).ok_or_else(|| Error::NotWellDefined {
                reason: format!("delta cocycle for b = {b} is not a cocycle"),
            })?;
            if *class.get_or_insert(c) != c {
                return Err(Error::NotWellDefined { reason: format!("delta of coset {a} depends on the lift") });
            }
        }
        classes.push(class.unwrap());
    }
    Ok(ConnectingMap { fixed_cosets, classes })
}

/// Exactness check at one node: preimage of the basepoint against the image of
/// the incoming map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactnessNode {
    pub node: String,
    pub pass: bool,
    /// An element in exactly one of kernel and image, when the check fails.
    pub witness: Option<usize>,
    pub kernel: Vec<usize>,
    pub image: Vec<usize>,
}

impl ExactnessNode {
    fn compare(node: &str, mut kernel: Vec<usize>, mut image: Vec<usize>) -> Self {
        kernel.sort_unstable();
        kernel.dedup();
        image.sort_unstable();
        image.dedup();
        let witness = kernel
            .iter()
            .find(|x| image.binary_search(x).is_err())
            .or_else(|| image.iter().find(|x| kernel.binary_search(x).is_err()))
            .copied();
        ExactnessNode { node: node.to_string(), pass: witness.is_none(), witness, kernel, image }
    }
}

pub const POINTED_EXACTNESS_NOTE: &str =
    "pointed-set exactness: at each node the preimage of the basepoint equals the image of the incoming map; \
     this is weaker than exactness of groups";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermSize {
    pub term: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub normal: bool,
    pub terms: Vec<TermSize>,
    pub exactness: Vec<ExactnessNode>,
    pub note: &'static str,
}

impl ExactnessReport {
    pub fn all_pass(&self) -> bool {
        self.exactness.iter().all(|n| n.pass)
    }
}

/// Builds `1 -> H0(N) -> H0(G) -> H0(G/N) -> H1(N) -> H1(G)` (and `-> H1(G/N)`
/// when `N` is normal) and checks every node.
pub fn verify_exact_sequence(action: &GroupAction, n: &Subgroup, settings: &Settings) -> Result<ExactnessReport> {
    let proj = restrict_and_project(action, n)?;
    let h0n = fixed_points(&proj.restricted);
    let h0g = fixed_points(action);
    let h0q = fixed_points(&proj.coset_action);
    let h1n = h1(&proj.restricted, settings)?;
    let h1g = h1(action, settings)?;
    let iota1 = induced_map_h1(&proj.inclusion, &h1n, &h1g)?;
    let delta = connecting_map_from(action, &proj, &h1n)?;
    let incl = proj.inclusion.image();
    let pi = proj.projection_map();

    let mut nodes = vec![
        ExactnessNode::compare("H0(N)", h0n.iter().copied().filter(|&x| incl[x] == 0).collect(), vec![0]),
        ExactnessNode::compare(
            "H0(G)",
            h0g.iter().copied().filter(|&g| pi[g] == 0).collect(),
            induced_map_h0(incl, &h0n),
        ),
        ExactnessNode::compare(
            "H0(G/N)",
            delta.fixed_cosets.iter().zip(&delta.classes).filter(|(_, &c)| c == 0).map(|(&a, _)| a).collect(),
            induced_map_h0(&pi, &h0g),
        ),
        ExactnessNode::compare("H1(N)", iota1.kernel(), delta.classes.clone()),
    ];
    let mut terms = vec![
        TermSize { term: "H0(N)".into(), size: h0n.len() },
        TermSize { term: "H0(G)".into(), size: h0g.len() },
        TermSize { term: "H0(G/N)".into(), size: h0q.len() },
        TermSize { term: "H1(N)".into(), size: h1n.len() },
        TermSize { term: "H1(G)".into(), size: h1g.len() },
    ];
    if let (Some(qa), Some(pi_hom)) = (&proj.quotient, proj.cosets.projection()) {
        let h1q = h1(qa, settings)?;
        let pi1 = induced_map_h1(&pi_hom, &h1g, &h1q)?;
        nodes.push(ExactnessNode::compare("H1(G)", pi1.kernel(), iota1.image()));
        terms.push(TermSize { term: "H1(G/N)".into(), size: h1q.len() });
    }
    Ok(ExactnessReport { normal: n.is_normal(), terms, exactness: nodes, note: POINTED_EXACTNESS_NOTE })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;
    use std::sync::Arc;

    fn z2_inv_on(n: usize) -> GroupAction {
        let g = Arc::new(catalog::cyclic(n));
        let inv: Vec<usize> = g.elements().map(|x| g.inv(x)).collect();
        GroupAction::from_generators(Arc::new(catalog::cyclic(2)), g, &[(1, inv)]).unwrap()
    }

    fn settings() -> Settings {
        Settings::default()
    }

    #[test]
    fn trivial_acting_group_has_one_cocycle() {
        let a = GroupAction::trivial(Arc::new(FiniteGroup::trivial()), Arc::new(catalog::symmetric3()));
        let z = enumerate_cocycles(&a, &settings()).unwrap();
        assert_eq!(z, vec![Cocycle::trivial(&a)]);
        assert_eq!(h1(&a, &settings()).unwrap().len(), 1);
    }

    #[test]
    fn inversion_on_z4() {
        let a = z2_inv_on(4);
        let z = enumerate_cocycles(&a, &settings()).unwrap();
        assert_eq!(z.len(), 4);
        let h = h1(&a, &settings()).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h.class_sizes(), vec![2, 2]);
        assert_eq!(h.representative(1).values(), &[0, 1]);
    }

    #[test]
    fn inversion_on_z3_is_all_coboundaries() {
        let h = h1(&z2_inv_on(3), &settings()).unwrap();
        assert_eq!(h.z1_size(), 3);
        assert_eq!(h.len(), 1);
    }

    #[test]
    fn trivial_action_cocycles_are_homomorphisms() {
        let a = GroupAction::trivial(Arc::new(catalog::cyclic(2)), Arc::new(catalog::cyclic(2)));
        let h = h1(&a, &settings()).unwrap();
        assert_eq!(h.z1_size(), 2);
        assert_eq!(h.len(), 2);
        let s3 = GroupAction::trivial(Arc::new(catalog::cyclic(3)), Arc::new(catalog::symmetric3()));
        let z = enumerate_cocycles(&s3, &settings()).unwrap();
        let homs = crate::group::enumerate_homomorphisms(s3.acting(), s3.target(), &settings()).unwrap();
        assert_eq!(z.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>(), homs);
        // conjugacy classes of Hom(Z3, S3): trivial and the 3-cycles
        assert_eq!(h1(&s3, &settings()).unwrap().len(), 2);
    }

    #[test]
    fn witness_examples() {
        let a = z2_inv_on(4);
        let z = enumerate_cocycles(&a, &settings()).unwrap();
        for phi in &z {
            assert_eq!(cohomologous_witness(&a, phi, phi).unwrap(), Some(0));
        }
        let triv = Cocycle::trivial(&a);
        for b in 0..4 {
            let cb = Cocycle::coboundary(&a, b);
            let w = cohomologous_witness(&a, &triv, &cb).unwrap().unwrap();
            assert_eq!(cb, triv.shifted(&a, w));
        }
        let t = GroupAction::trivial(Arc::new(catalog::cyclic(2)), Arc::new(catalog::cyclic(2)));
        let z = enumerate_cocycles(&t, &settings()).unwrap();
        assert_eq!(cohomologous_witness(&t, &z[0], &z[1]).unwrap(), None);
        assert!(matches!(
            cohomologous_witness(&t, &z[0], &Cocycle::from_values(vec![0])),
            Err(Error::ActionMismatch { .. })
        ));
    }

    #[test]
    fn cocycle_validation() {
        let a = z2_inv_on(4);
        assert!(Cocycle::new(&a, vec![0, 3]).is_ok());
        assert_eq!(Cocycle::new(&a, vec![1, 0]).unwrap_err(), Error::NotACocycle { sigma1: 0, sigma2: 0 });
    }

    #[test]
    fn group_structure() {
        let t = GroupAction::trivial(Arc::new(catalog::cyclic(2)), Arc::new(catalog::cyclic(2)));
        let g = h1_group_structure(&h1(&t, &settings()).unwrap()).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
        let g = h1_group_structure(&h1(&z2_inv_on(4), &settings()).unwrap()).unwrap();
        assert_eq!(g, catalog::cyclic(2));
        let s = GroupAction::trivial(Arc::new(catalog::cyclic(2)), Arc::new(catalog::symmetric3()));
        assert_eq!(h1_group_structure(&h1(&s, &settings()).unwrap()).unwrap_err(), Error::TargetNotAbelian);
    }

    #[test]
    fn induced_maps() {
        let a = z2_inv_on(4);
        let h = h1(&a, &settings()).unwrap();
        let id = Homomorphism::identity(a.target().clone());
        assert_eq!(induced_map_h1(&id, &h, &h).unwrap(), PointedMap::identity(2));
        let n = Subgroup::new(a.target().clone(), &[0, 2]).unwrap();
        let p = restrict_and_project(&a, &n).unwrap();
        let hn = h1(&p.restricted, &settings()).unwrap();
        let zero = Homomorphism::trivial(p.restricted.target().clone(), a.target().clone());
        assert_eq!(induced_map_h1(&zero, &hn, &h).unwrap().class_map, vec![0, 0]);
        // iota^1 kills the class of s -> 2, which is the coboundary of 1
        let iota = induced_map_h1(&p.inclusion, &hn, &h).unwrap();
        assert_eq!(iota.class_map, vec![0, 0]);
    }

    #[test]
    fn non_equivariant_map_is_rejected() {
        let inv = z2_inv_on(3);
        let triv = GroupAction::trivial(inv.acting().clone(), inv.target().clone());
        let hi = h1(&inv, &settings()).unwrap();
        let ht = h1(&triv, &settings()).unwrap();
        let id = Homomorphism::identity(inv.target().clone());
        assert!(matches!(induced_map_h1(&id, &ht, &hi), Err(Error::NotEquivariant { .. })));
    }

    #[test]
    fn connecting_map_on_z4() {
        let a = z2_inv_on(4);
        let n = Subgroup::new(a.target().clone(), &[0, 2]).unwrap();
        let d = connecting_map(&a, &n, &settings()).unwrap();
        assert_eq!(d.fixed_cosets, vec![0, 1]);
        assert_eq!(d.classes, vec![0, 1]);
    }

    #[test]
    fn connecting_map_with_trivial_acting_group() {
        let a = GroupAction::trivial(Arc::new(FiniteGroup::trivial()), Arc::new(catalog::dihedral(4)));
        for n in Subgroup::all(a.target()) {
            let d = connecting_map(&a, &n, &settings()).unwrap();
            assert!(d.classes.iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn exact_sequence_on_z4() {
        let a = z2_inv_on(4);
        for members in [vec![0], vec![0, 2], vec![0, 1, 2, 3]] {
            let n = Subgroup::new(a.target().clone(), &members).unwrap();
            let r = verify_exact_sequence(&a, &n, &settings()).unwrap();
            assert!(r.all_pass(), "{r:?}");
            assert_eq!(r.exactness.len(), 5);
        }
    }

    #[test]
    fn exact_sequence_with_non_normal_subgroup() {
        // S3 acting on itself by conjugation with a transposition, N the
        // transposition's own subgroup (invariant, not normal)
        let s3 = Arc::new(catalog::symmetric3());
        let rho: Vec<usize> = s3.elements().map(|x| s3.conj(1, x)).collect();
        let a = GroupAction::from_generators(Arc::new(catalog::cyclic(2)), s3.clone(), &[(1, rho)]).unwrap();
        let n = Subgroup::generated(s3, &[1]).unwrap();
        let r = verify_exact_sequence(&a, &n, &settings()).unwrap();
        assert!(!r.normal);
        assert_eq!(r.exactness.len(), 4);
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn report_shape() {
        let r = h1(&z2_inv_on(4), &settings()).unwrap().report();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["z1_size"], 4);
        assert_eq!(v["classes"][0]["basepoint"], true);
        assert_eq!(v["classes"][1]["rep"], serde_json::json!([0, 1]));
    }
}
