//! Right `G`-torsors with a compatible action of the acting group.

use serde::Serialize;

use crate::actions::GroupAction;
use crate::cohomology::{h1, Cocycle, CohomologySet};
use crate::error::{Error, Result};
use crate::exec::{self, Settings};
use crate::group::{is_permutation, FiniteGroup};

/// A finite set with a free transitive right `G`-action and a compatible
/// left action of the acting group: `s(x g) = s(x) s(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Torsor {
    action: GroupAction,
    /// `right[x][g] = x . g`
    right: Vec<Vec<usize>>,
    /// `left[s][x] = s(x)`
    left: Vec<Vec<usize>>,
}

impl Torsor {
    pub fn new(action: &GroupAction, right: Vec<Vec<usize>>, left: Vec<Vec<usize>>) -> Result<Self> {
        let g = action.target();
        let gg = action.acting();
        let size = right.len();
        if size == 0 {
            return Err(Error::NotRegular { reason: "empty carrier".into() });
        }
        for (x, row) in right.iter().enumerate() {
            if row.len() != g.order() || row.iter().any(|&y| y >= size) {
                return Err(Error::NotRegular { reason: format!("right action row {x} malformed") });
            }
            if row[FiniteGroup::IDENTITY] != x {
                return Err(Error::NotRegular { reason: format!("{x} . 1 != {x}") });
            }
            if !is_permutation(row, size) {
                return Err(Error::NotRegular { reason: format!("g -> {x} . g is not a bijection onto the carrier") });
            }
            for a in g.elements() {
                for b in g.elements() {
                    if right[row[a]][b] != row[g.mul(a, b)] {
                        return Err(Error::NotRegular { reason: format!("({x} . {a}) . {b} != {x} . ({a} {b})") });
                    }
                }
            }
        }
        if left.len() != gg.order() || left.iter().any(|p| !is_permutation(p, size)) {
            return Err(Error::NotATorsor { reason: "acting elements must permute the carrier".into() });
        }
        if left[0].iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::NotATorsor { reason: "identity acts nontrivially".into() });
        }
        for s in gg.elements() {
            for t in gg.elements() {
                if (0..size).any(|x| left[gg.mul(s, t)][x] != left[s][left[t][x]]) {
                    return Err(Error::NotATorsor { reason: format!("action not homomorphic at ({s}, {t})") });
                }
            }
            for x in 0..size {
                for h in g.elements() {
                    if left[s][right[x][h]] != right[left[s][x]][action.apply(s, h)] {
                        return Err(Error::NotATorsor { reason: format!("s({x} . {h}) != s({x}) . s({h}) for s = {s}") });
                    }
                }
            }
        }
        Ok(Torsor { action: action.clone(), right, left })
    }

    pub fn size(&self) -> usize {
        self.right.len()
    }

    pub fn right(&self, x: usize, g: usize) -> usize {
        self.right[x][g]
    }

    pub fn act(&self, sigma: usize, x: usize) -> usize {
        self.left[sigma][x]
    }

    pub fn left(&self) -> &[Vec<usize>] {
        &self.left
    }

    /// Points fixed by every acting element.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.left.iter().all(|p| p[x] == x)).collect()
    }

    /// The unique `g` with `x . g = y`.
    pub fn divide(&self, x: usize, y: usize) -> usize {
        self.right[x].iter().position(|&z| z == y).expect("regular")
    }
}

fn regular_right(g: &FiniteGroup) -> Vec<Vec<usize>> {
    g.rows()
}

/// `G` with right multiplication and `s . x = Phi(s) s(x)`.
pub fn torsor_from_cocycle(action: &GroupAction, phi: &Cocycle) -> Result<Torsor> {
    crate::cohomology::check_cocycle(action, phi.values())?;
    let g = action.target();
    let left = action
        .acting()
        .elements()
        .map(|s| g.elements().map(|x| g.mul(phi.at(s), action.apply(s, x))).collect())
        .collect();
    Torsor::new(action, regular_right(g), left)
}

/// `Phi(s)` is the `g` with `s(x0) = x0 . g`. Every other basepoint
/// `x1 = x0 . c` is checked to give `c^-1 Phi s(c)`.
pub fn cocycle_from_torsor(t: &Torsor, x0: usize) -> Result<Cocycle> {
    if x0 >= t.size() {
        return Err(Error::OutOfRange { value: x0, order: t.size() });
    }
    let at = |x: usize| -> Vec<usize> { (0..t.left.len()).map(|s| t.divide(x, t.act(s, x))).collect() };
    let phi = Cocycle::new(&t.action, at(x0))?;
    for x1 in 0..t.size() {
        let c = t.divide(x0, x1);
        if at(x1) != phi.shifted(&t.action, c).values() {
            return Err(Error::NotWellDefined { reason: format!("basepoint {x1} gives an unrelated cocycle") });
        }
    }
    Ok(phi)
}

/// An equivariant isomorphism of right `G`-sets `t1 -> t2`, if any. The image
/// `y` of point `0` determines the map `0 . g -> y . g`.
pub fn torsor_iso(t1: &Torsor, t2: &Torsor) -> Option<Vec<usize>> {
    if t1.size() != t2.size() || t1.action != t2.action {
        return None;
    }
    let n = t1.size();
    (0..n).find_map(|y| {
        let mut map = vec![usize::MAX; n];
        for g in t1.action.target().elements() {
            map[t1.right(0, g)] = t2.right(y, g);
        }
        let eq = (0..t1.left.len()).all(|s| (0..n).all(|x| map[t1.act(s, x)] == t2.act(s, map[x])));
        eq.then_some(map)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsorCensus {
    pub torsor_classes: usize,
    pub h1_size: usize,
    #[serde(rename = "match")]
    pub matches: bool,
    /// Torsor structures found before identifying isomorphic ones.
    pub structures: usize,
    /// For each torsor class, its cocycle at point `0` and that cocycle's class.
    pub classes: Vec<TorsorClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsorClass {
    pub cocycle: Vec<usize>,
    pub h1_class: usize,
    pub has_fixed_point: bool,
}

/// Compatible actions on the regular right `G`-set for one acting element:
/// permutations `p` with `p(x g) = p(x) s(g)`, built point by point.
fn compatible_permutations(action: &GroupAction, sigma: usize) -> Vec<Vec<usize>> {
    let g = action.target();
    let n = g.order();
    let mut out = Vec::new();
    let mut p = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        g: &FiniteGroup,
        action: &GroupAction,
        sigma: usize,
        p: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = p.len();
        if k == n {
            out.push(p.clone());
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            p[k] = v;
            let consistent = (0..=k).all(|x| {
                g.elements().all(|h| {
                    let xh = g.mul(x, h);
                    xh > k || p[xh] == g.mul(p[x], action.apply(sigma, h))
                })
            });
            if consistent {
                used[v] = true;
                go(k + 1, g, action, sigma, p, used, out);
                used[v] = false;
            }
        }
        p[k] = usize::MAX;
    }
    go(0, g, action, sigma, &mut p, &mut used, &mut out);
    out
}

/// Every torsor structure on a set of size `|G|` up to isomorphism, matched
/// against `H^1`. The right action is taken to be right multiplication, which
/// every torsor is isomorphic to as a right `G`-set.
pub fn classify_torsors(action: &GroupAction, settings: &Settings) -> Result<TorsorCensus> {
    let gg = action.acting();
    let g = action.target();
    let n = g.order() as u128;
    let factorial: u128 = (1..=n).product();
    let gens = gg.generators();
    settings.check_budget("torsor permutation search", factorial.saturating_mul(gens.len().max(1) as u128))?;
    let candidates: Vec<Vec<Vec<usize>>> = gens.iter().map(|&s| compatible_permutations(action, s)).collect();
    let product: u128 = candidates.iter().map(|c| c.len() as u128).product();
    settings.check_budget("torsor structure search", product)?;

    let tree = gg.word_tree(&gens);
    let right = regular_right(g);
    let choice_lists: Vec<Vec<usize>> = candidates.iter().map(|c| (0..c.len()).collect()).collect();
    let torsors: Vec<Torsor> = exec::search_product(settings.exec, &choice_lists, |choice| {
        let mut left = vec![Vec::new(); gg.order()];
        left[0] = g.elements().collect();
        for &x in &tree.order[1..] {
            let (p, i) = tree.parent[x].unwrap();
            let gen = &candidates[i][choice[i]];
            left[x] = gen.iter().map(|&y| left[p][y]).collect();
        }
        Torsor::new(action, right.clone(), left).ok()
    });

    let mut reps: Vec<Torsor> = Vec::new();
    for t in &torsors {
        if !reps.iter().any(|r| torsor_iso(r, t).is_some()) {
            reps.push(t.clone());
        }
    }
    let h = h1(action, settings)?;
    let classes = reps
        .iter()
        .map(|t| {
            let phi = cocycle_from_torsor(t, 0)?;
            Ok(TorsorClass {
                h1_class: h.class_of_values(phi.values()).expect("cocycle of a torsor"),
                cocycle: phi.values().to_vec(),
                has_fixed_point: !t.fixed_points().is_empty(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seen: Vec<usize> = classes.iter().map(|c| c.h1_class).collect();
    seen.sort_unstable();
    seen.dedup();
    let fixed_ok = classes.iter().all(|c| c.has_fixed_point == (c.h1_class == CohomologySet::BASEPOINT));
    let matches = reps.len() == h.len() && seen.len() == reps.len() && fixed_ok;
    Ok(TorsorCensus { torsor_classes: reps.len(), h1_size: h.len(), matches, structures: torsors.len(), classes })
}

/// `G` as a torsor over itself.
pub fn trivial_torsor(action: &GroupAction) -> Torsor {
    torsor_from_cocycle(action, &Cocycle::trivial(action)).expect("G over itself is a torsor")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::enumerate_cocycles;
    use crate::group::catalog;
    use std::sync::Arc;

    fn z2_inv_on(n: usize) -> GroupAction {
        let g = Arc::new(catalog::cyclic(n));
        let inv: Vec<usize> = g.elements().map(|x| g.inv(x)).collect();
        GroupAction::from_generators(Arc::new(catalog::cyclic(2)), g, &[(1, inv)]).unwrap()
    }

    fn s() -> Settings {
        Settings::default()
    }

    #[test]
    fn trivial_cocycle_gives_g_over_itself() {
        let a = z2_inv_on(4);
        let t = trivial_torsor(&a);
        assert_eq!(t.left(), a.images());
        assert!(cocycle_from_torsor(&t, 0).unwrap().is_trivial());
    }

    #[test]
    fn round_trip_and_basepoints() {
        let s3 = Arc::new(catalog::symmetric3());
        let rho: Vec<usize> = s3.elements().map(|x| s3.conj(1, x)).collect();
        let a = GroupAction::from_generators(Arc::new(catalog::cyclic(2)), s3, &[(1, rho)]).unwrap();
        for phi in enumerate_cocycles(&a, &s()).unwrap() {
            let t = torsor_from_cocycle(&a, &phi).unwrap();
            assert_eq!(cocycle_from_torsor(&t, 0).unwrap(), phi);
            for x1 in 0..t.size() {
                let psi = cocycle_from_torsor(&t, x1).unwrap();
                assert!(crate::cohomology::cohomologous_witness(&a, &phi, &psi).unwrap().is_some());
            }
        }
    }

    #[test]
    fn cohomologous_cocycles_give_isomorphic_torsors() {
        let a = z2_inv_on(4);
        let z = enumerate_cocycles(&a, &s()).unwrap();
        for phi in &z {
            for b in a.target().elements() {
                let psi = phi.shifted(&a, b);
                let t1 = torsor_from_cocycle(&a, phi).unwrap();
                let t2 = torsor_from_cocycle(&a, &psi).unwrap();
                // x -> b^-1 x
                let g = a.target();
                let map: Vec<usize> = g.elements().map(|x| g.mul(g.inv(b), x)).collect();
                assert!((0..2).all(|s| (0..4).all(|x| map[t1.act(s, x)] == t2.act(s, map[x]))));
                assert!(torsor_iso(&t1, &t2).is_some());
            }
        }
    }

    #[test]
    fn nontrivial_class_has_no_fixed_point() {
        let a = z2_inv_on(4);
        let t = torsor_from_cocycle(&a, &Cocycle::new(&a, vec![0, 1]).unwrap()).unwrap();
        assert!(t.fixed_points().is_empty());
        assert!(!trivial_torsor(&a).fixed_points().is_empty());
    }

    #[test]
    fn census_examples() {
        let cases = [
            (GroupAction::trivial(Arc::new(FiniteGroup::trivial()), Arc::new(catalog::symmetric3())), 1),
            (z2_inv_on(4), 2),
            (GroupAction::trivial(Arc::new(catalog::cyclic(2)), Arc::new(catalog::cyclic(2))), 2),
        ];
        for (a, k) in cases {
            let c = classify_torsors(&a, &s()).unwrap();
            assert_eq!(c.torsor_classes, k);
            assert!(c.matches, "{c:?}");
        }
        let c = classify_torsors(&z2_inv_on(4), &s()).unwrap();
        assert_eq!(c.structures, 4);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["match"], true);
    }

    #[test]
    fn invalid_torsors() {
        let a = z2_inv_on(3);
        let right = a.target().rows();
        assert!(matches!(Torsor::new(&a, vec![vec![0, 0, 0]; 3], a.images().to_vec()), Err(Error::NotRegular { .. })));
        let triv = GroupAction::trivial(a.acting().clone(), a.target().clone());
        assert!(matches!(Torsor::new(&a, right, triv.images().to_vec()), Err(Error::NotATorsor { .. })));
    }
}
