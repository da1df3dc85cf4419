//! Brute-force cross-checks and the seeded instance generator.
//!
//! Nothing here calls into the cocycle search or the class partition of
//! [`crate::cohomology`]; only group-level helpers are shared.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::actions::{invariant_subgroups, GroupAction};
use crate::error::{Error, Result};
use crate::exec::{self, Settings};
use crate::group::{catalog, compute_aut, enumerate_homomorphisms, AutomorphismGroup, FiniteGroup, Subgroup};

fn is_crossed(action: &GroupAction, values: &[usize]) -> bool {
    let gg = action.acting();
    let g = action.target();
    gg.elements()
        .all(|s| gg.elements().all(|t| values[gg.mul(s, t)] == g.mul(values[s], action.apply(s, values[t]))))
}

/// Every map `GG -> G` passing the cocycle identity, in lexicographic order.
pub fn brute_z1(action: &GroupAction, settings: &Settings) -> Result<Vec<Vec<usize>>> {
    let n = action.acting().order();
    let m = action.target().order();
    settings.check_budget("brute-force cocycle filter", (m as u128).saturating_pow(n as u32))?;
    if n == 1 {
        return Ok(if is_crossed(action, &[0]) { vec![vec![0]] } else { Vec::new() });
    }
    // split on the value at the identity, then count through the rest
    let chunks = exec::map_range(settings.exec, m, |first| {
        let mut out = Vec::new();
        let mut values = vec![0; n];
        values[0] = first;
        loop {
            if is_crossed(action, &values) {
                out.push(values.clone());
            }
            let mut i = n - 1;
            loop {
                values[i] += 1;
                if values[i] < m {
                    break;
                }
                values[i] = 0;
                i -= 1;
                if i == 0 {
                    return out;
                }
            }
        }
    });
    Ok(chunks.into_iter().flatten().collect())
}

/// `Z^1 / B^1` for an abelian target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianH1 {
    pub z1: Vec<Vec<usize>>,
    pub b1: Vec<Vec<usize>>,
    /// Coset index of each entry of `z1`; cosets numbered by first appearance.
    pub class_of: Vec<usize>,
    pub classes: usize,
}

/// Classes as `B^1`-cosets of `Z^1` under pointwise multiplication.
pub fn abelian_h1_oracle(action: &GroupAction, settings: &Settings) -> Result<AbelianH1> {
    let g = action.target();
    if !g.is_abelian() {
        return Err(Error::TargetNotAbelian);
    }
    let z1 = brute_z1(action, settings)?;
    let mut b1: Vec<Vec<usize>> = g
        .elements()
        .map(|b| action.acting().elements().map(|s| g.mul(g.inv(b), action.apply(s, b))).collect())
        .collect();
    b1.sort();
    b1.dedup();
    let index: HashMap<&Vec<usize>, usize> = z1.iter().enumerate().map(|(i, z)| (z, i)).collect();
    let mut class_of = vec![usize::MAX; z1.len()];
    let mut classes = 0;
    for i in 0..z1.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        for b in &b1 {
            let v: Vec<usize> = z1[i].iter().zip(b).map(|(&x, &y)| g.mul(x, y)).collect();
            class_of[index[&v]] = classes;
        }
        classes += 1;
    }
    Ok(AbelianH1 { z1, b1, class_of, classes })
}

/// Cohomology classes of an arbitrary action by union-find over all pairs
/// `(Phi, b)`; returns the class count and a class label per brute cocycle.
pub fn brute_h1(action: &GroupAction, settings: &Settings) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
    let z1 = brute_z1(action, settings)?;
    let g = action.target();
    let index: HashMap<&Vec<usize>, usize> = z1.iter().enumerate().map(|(i, z)| (z, i)).collect();
    let mut parent: Vec<usize> = (0..z1.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, phi) in z1.iter().enumerate() {
        for b in g.elements() {
            let psi: Vec<usize> =
                phi.iter().enumerate().map(|(s, &v)| g.mul(g.mul(g.inv(b), v), action.apply(s, b))).collect();
            let (x, y) = (find(&mut parent, i), find(&mut parent, index[&psi]));
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut label = HashMap::new();
    let labels = (0..z1.len())
        .map(|i| {
            let r = find(&mut parent, i);
            let next = label.len();
            *label.entry(r).or_insert(next)
        })
        .collect();
    Ok((z1, labels))
}

/// Homomorphisms `GG -> Aut(G)` (as automorphism indices) up to pointwise
/// conjugation, one least representative per class, ascending.
pub fn form_census_oracle(acting: &FiniteGroup, aut: &AutomorphismGroup) -> Vec<Vec<usize>> {
    let a = aut.group();
    let n = acting.order();
    let mut homs = Vec::new();
    let mut values = vec![0usize; n];
    // assign images in element order, rejecting as soon as a product of
    // assigned elements disagrees
    fn extend(k: usize, acting: &FiniteGroup, a: &FiniteGroup, values: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == values.len() {
            out.push(values.clone());
            return;
        }
        for v in a.elements() {
            values[k] = v;
            let ok = (0..=k).all(|x| {
                (0..=k).all(|y| {
                    let xy = acting.mul(x, y);
                    xy > k || values[xy] == a.mul(values[x], values[y])
                })
            });
            if ok {
                extend(k + 1, acting, a, values, out);
            }
        }
    }
    extend(1, acting, a, &mut values, &mut homs);
    let mut reps: Vec<Vec<usize>> = homs
        .iter()
        .map(|beta| {
            a.elements()
                .map(|psi| beta.iter().map(|&x| a.conj(psi, x)).collect::<Vec<_>>())
                .min()
                .unwrap()
        })
        .collect();
    reps.sort();
    reps.dedup();
    reps
}

/// One generated test case.
#[derive(Debug, Clone)]
pub struct Instance {
    pub acting_name: &'static str,
    pub target_name: &'static str,
    /// Index of the action among the sorted homomorphisms `GG -> Aut(G)`.
    pub hom_index: usize,
    pub action: GroupAction,
    /// Every invariant subgroup, ordered by size then members.
    pub subgroups: Vec<Subgroup>,
}

impl Instance {
    pub fn label(&self) -> String {
        format!("{} on {} (action #{})", self.acting_name, self.target_name, self.hom_index)
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter().filter(|n| n.is_normal())
    }

    /// Size used to pick the smallest failing instance.
    pub fn weight(&self) -> (usize, usize, usize) {
        (self.action.target().order(), self.action.acting().order(), self.hom_index)
    }
}

/// Acting groups available to the generator: the trivial group plus the
/// catalog.
fn acting_pool(max: usize) -> Vec<(&'static str, FiniteGroup)> {
    let mut v = vec![("1", FiniteGroup::trivial())];
    v.extend(catalog::all().into_iter().filter(|(_, g)| g.order() <= max));
    v
}

/// Deterministic instances: acting group and target drawn uniformly from the
/// catalog within the bounds, then an action drawn uniformly from
/// `Hom(GG, Aut G)`.
pub fn instance_generator(
    seed: u64,
    max_acting: usize,
    max_target: usize,
    count: usize,
    settings: &Settings,
) -> Result<Vec<Instance>> {
    let acting = acting_pool(max_acting);
    let targets: Vec<(&'static str, FiniteGroup)> =
        catalog::all().into_iter().filter(|(_, g)| g.order() <= max_target).collect();
    if targets.is_empty() {
        return Err(Error::Format(format!("no catalog group has order <= {max_target}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut auts: HashMap<&str, Arc<AutomorphismGroup>> = HashMap::new();
    let mut homs: HashMap<(&str, &str), Vec<Vec<usize>>> = HashMap::new();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (gg_name, gg) = acting.choose(&mut rng).unwrap();
        let (g_name, g) = targets.choose(&mut rng).unwrap();
        let g = Arc::new(g.clone());
        let gg = Arc::new(gg.clone());
        let aut = match auts.get(g_name) {
            Some(a) => a.clone(),
            None => {
                let a = Arc::new(compute_aut(&g, settings)?);
                auts.insert(g_name, a.clone());
                a
            }
        };
        let list = match homs.get(&(*gg_name, *g_name)) {
            Some(l) => l,
            None => {
                let l = enumerate_homomorphisms(&gg, aut.group(), settings)?;
                homs.entry((gg_name, g_name)).or_insert(l)
            }
        };
        let hom_index = rand::Rng::gen_range(&mut rng, 0..list.len());
        let action = GroupAction::from_aut_homomorphism(gg, &aut, &list[hom_index])?;
        let subgroups = invariant_subgroups(&action);
        out.push(Instance { acting_name: gg_name, target_name: g_name, hom_index, action, subgroups });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_inv_on(n: usize) -> GroupAction {
        let g = Arc::new(catalog::cyclic(n));
        let inv: Vec<usize> = g.elements().map(|x| g.inv(x)).collect();
        GroupAction::from_generators(Arc::new(catalog::cyclic(2)), g, &[(1, inv)]).unwrap()
    }

    fn s() -> Settings {
        Settings::default()
    }

    #[test]
    fn baseline_abelian_counts() {
        let triv = GroupAction::trivial(Arc::new(catalog::cyclic(2)), Arc::new(catalog::cyclic(2)));
        for (a, z, b, h) in [(z2_inv_on(3), 3, 3, 1), (z2_inv_on(4), 4, 2, 2), (triv, 2, 1, 2)] {
            let o = abelian_h1_oracle(&a, &s()).unwrap();
            assert_eq!((o.z1.len(), o.b1.len(), o.classes), (z, b, h));
            let (bz, labels) = brute_h1(&a, &s()).unwrap();
            assert_eq!(bz, o.z1);
            assert_eq!(labels, o.class_of);
        }
    }

    #[test]
    fn brute_z1_small_cases() {
        let t = GroupAction::trivial(Arc::new(FiniteGroup::trivial()), Arc::new(catalog::symmetric3()));
        assert_eq!(brute_z1(&t, &s()).unwrap(), vec![vec![0]]);
        let t = GroupAction::trivial(Arc::new(catalog::cyclic(3)), Arc::new(catalog::symmetric3()));
        let homs = enumerate_homomorphisms(t.acting(), t.target(), &s()).unwrap();
        assert_eq!(brute_z1(&t, &s()).unwrap(), homs);
        let small = Settings { max_candidates: 10, ..s() };
        assert!(matches!(brute_z1(&t, &small), Err(Error::SizeLimitExceeded { .. })));
        assert_eq!(abelian_h1_oracle(&t, &s()).unwrap_err(), Error::TargetNotAbelian);
    }

    #[test]
    fn census_counts() {
        let z4 = Arc::new(catalog::cyclic(4));
        let v4 = Arc::new(catalog::product(&catalog::cyclic(2), &catalog::cyclic(2)));
        let a4 = compute_aut(&z4, &s()).unwrap();
        let av = compute_aut(&v4, &s()).unwrap();
        assert_eq!(form_census_oracle(&FiniteGroup::trivial(), &a4).len(), 1);
        assert_eq!(form_census_oracle(&catalog::cyclic(2), &a4).len(), 2);
        assert_eq!(form_census_oracle(&catalog::cyclic(3), &av).len(), 2);
        // Z/2 into S3: trivial and the transpositions
        assert_eq!(form_census_oracle(&catalog::cyclic(2), &av).len(), 2);
    }

    #[test]
    fn generator_is_deterministic_and_valid() {
        let a = instance_generator(0, 4, 8, 10, &s()).unwrap();
        let b = instance_generator(0, 4, 8, 10, &Settings::sequential()).unwrap();
        assert_eq!(a.len(), 10);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.label(), y.label());
            assert_eq!(x.action, y.action);
            assert_eq!(x.subgroups, y.subgroups);
            let again = GroupAction::new(x.action.acting().clone(), x.action.target().clone(), x.action.images().to_vec());
            assert!(again.is_ok());
            assert!(x.action.acting().order() <= 4 && x.action.target().order() <= 8);
            assert!(x.subgroups.iter().all(|n| x.action.require_invariant(n).is_ok()));
        }
        let c = instance_generator(1, 4, 8, 10, &s()).unwrap();
        assert!(a.iter().zip(&c).any(|(x, y)| x.label() != y.label()));
    }
}
