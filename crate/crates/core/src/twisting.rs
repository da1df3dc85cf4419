//! Twisting an action by a cocycle and the bijections it induces.
//!
//! For a cocycle `Phi` the twisted action is `sigma * g = Phi(sigma) sigma(g) Phi(sigma)^-1`.
//! Right multiplication by `Phi` identifies cocycles of the twisted action
//! with cocycles of the original one, moving the basepoint of `H^1` to `[Phi]`.

use serde::Serialize;

use crate::actions::{fixed_points, restrict_and_project, GroupAction};
use crate::cohomology::{check_cocycle, h1, induced_map_h1, Cocycle, CohomologySet, PointedMap};
use crate::error::{Error, Result};
use crate::exec::{self, Settings};
use crate::group::{FiniteGroup, Homomorphism, Subgroup};

/// The acting group acting on the same target, twisted by a cocycle.
#[derive(Debug, Clone)]
pub struct TwistedAction {
    base: GroupAction,
    twist_by: Cocycle,
    action: GroupAction,
}

impl TwistedAction {
    pub fn base(&self) -> &GroupAction {
        &self.base
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.twist_by
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }
}

/// Builds and validates the twisted action.
pub fn twist_action(action: &GroupAction, phi: &Cocycle) -> Result<TwistedAction> {
    check_cocycle(action, phi.values()).map_err(|e| match e {
        Error::NotACocycle { .. } => e,
        other => Error::ActionMismatch { reason: other.to_string() },
    })?;
    let g = action.target();
    let images: Vec<Vec<usize>> = action
        .acting()
        .elements()
        .map(|s| g.elements().map(|x| g.conj(phi.at(s), action.apply(s, x))).collect())
        .collect();
    let twisted = GroupAction::new(action.acting().clone(), g.clone(), images)?;
    Ok(TwistedAction { base: action.clone(), twist_by: phi.clone(), action: twisted })
}

/// `f_Phi : Z^1(twisted) -> Z^1(base)`, `Psi -> Psi * Phi`, and its inverse
/// `Lambda -> Lambda * Phi^-1`.
#[derive(Debug, Clone)]
pub struct TwistBijection {
    twisted: TwistedAction,
}

pub fn twist_bijection(action: &GroupAction, phi: &Cocycle) -> Result<TwistBijection> {
    Ok(TwistBijection { twisted: twist_action(action, phi)? })
}

impl TwistBijection {
    pub fn twisted(&self) -> &TwistedAction {
        &self.twisted
    }

    fn target(&self) -> &FiniteGroup {
        self.twisted.base.target()
    }

    /// `f_Phi(psi)`, validated as a cocycle of the base action.
    pub fn forward(&self, psi: &Cocycle) -> Result<Cocycle> {
        check_cocycle(&self.twisted.action, psi.values())?;
        let g = self.target();
        let phi = &self.twisted.twist_by;
        let values = psi.values().iter().enumerate().map(|(s, &v)| g.mul(v, phi.at(s))).collect();
        Cocycle::new(&self.twisted.base, values)
    }

    /// `f_Phi^-1(lambda)`, validated as a cocycle of the twisted action.
    pub fn backward(&self, lambda: &Cocycle) -> Result<Cocycle> {
        check_cocycle(&self.twisted.base, lambda.values())?;
        let g = self.target();
        let phi = &self.twisted.twist_by;
        let values = lambda.values().iter().enumerate().map(|(s, &v)| g.mul(v, g.inv(phi.at(s)))).collect();
        Cocycle::new(&self.twisted.action, values)
    }

    /// Indices of `f_Phi` applied to each twisted cocycle, checking both
    /// round trips.
    pub fn cocycle_map(&self, twisted_h1: &CohomologySet, base_h1: &CohomologySet) -> Result<Vec<usize>> {
        let mut map = Vec::with_capacity(twisted_h1.z1_size());
        for psi in twisted_h1.cocycles() {
            let lambda = self.forward(psi)?;
            if self.backward(&lambda)? != *psi {
                return Err(Error::NotWellDefined { reason: "f_Phi^-1 f_Phi is not the identity".into() });
            }
            map.push(base_h1.index_of(lambda.values()).ok_or_else(|| Error::NotWellDefined {
                reason: "f_Phi left the enumerated Z^1".into(),
            })?);
        }
        for lambda in base_h1.cocycles() {
            if self.forward(&self.backward(lambda)?)? != *lambda {
                return Err(Error::NotWellDefined { reason: "f_Phi f_Phi^-1 is not the identity".into() });
            }
        }
        Ok(map)
    }
}

/// `F_Phi : H^1(twisted) -> H^1(base)`. Checks it is a well-defined bijection
/// sending the twisted basepoint to `[Phi]`.
pub fn induced_f_big(bij: &TwistBijection, twisted_h1: &CohomologySet, base_h1: &CohomologySet) -> Result<PointedMap> {
    let cmap = bij.cocycle_map(twisted_h1, base_h1)?;
    let mut class_map = vec![usize::MAX; twisted_h1.len()];
    for (i, &j) in cmap.iter().enumerate() {
        let (c, d) = (twisted_h1.class_of(i), base_h1.class_of(j));
        if class_map[c] == usize::MAX {
            class_map[c] = d;
        } else if class_map[c] != d {
            return Err(Error::NotWellDefined { reason: format!("twisted class {c} splits under F_Phi") });
        }
    }
    let map = PointedMap { class_map, target_size: base_h1.len() };
    if !map.is_bijective() {
        return Err(Error::NotWellDefined { reason: "F_Phi is not a bijection".into() });
    }
    let phi_class = base_h1.class_of_values(bij.twisted.twist_by.values());
    if Some(map.apply(CohomologySet::BASEPOINT)) != phi_class {
        return Err(Error::NotWellDefined { reason: "F_Phi does not send the basepoint to [Phi]".into() });
    }
    Ok(map)
}

/// One class `mu` of `H^1(G)` and its fiber under `pi^1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberEntry {
    /// Canonical representative of `mu`.
    pub mu: Vec<usize>,
    /// `pi^-1(pi(mu))`, ascending class indices.
    pub fiber: Vec<usize>,
    pub twisted_kernel_size: usize,
    /// `F_Phi` on each class of the twisted kernel, in kernel order.
    pub bijection: Vec<usize>,
    pub bijection_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub projection: PointedMap,
    pub classes: Vec<FiberEntry>,
}

impl FiberReport {
    pub fn all_ok(&self) -> bool {
        self.classes.iter().all(|c| c.bijection_ok) && self.partitions()
    }

    /// Fibers are the level sets of the projection, so every class lies in
    /// exactly one distinct fiber.
    pub fn partitions(&self) -> bool {
        let mut fibers: Vec<&Vec<usize>> = self.classes.iter().map(|c| &c.fiber).collect();
        fibers.sort();
        fibers.dedup();
        let mut all: Vec<usize> = fibers.iter().flat_map(|f| f.iter().copied()).collect();
        all.sort_unstable();
        all == (0..self.classes.len()).collect::<Vec<_>>()
    }
}

/// The map `pi^1 : H^1(G) -> H^1(G/N)` together with `H^1(G)`.
pub(crate) fn pi1(action: &GroupAction, n: &Subgroup, settings: &Settings) -> Result<(CohomologySet, PointedMap)> {
    let proj = restrict_and_project(action, n)?;
    let quotient = proj.quotient.as_ref().ok_or(Error::NotNormal { g: 0, n: 0 })?;
    let h = h1(action, settings)?;
    let hq = h1(quotient, settings)?;
    let map = induced_map_h1(&proj.cosets.projection().unwrap(), &h, &hq)?;
    Ok((h, map))
}

/// Size of `ker(pi^1)` for the action twisted by `phi`.
pub fn twisted_kernel_size(action: &GroupAction, n: &Subgroup, phi: &Cocycle, settings: &Settings) -> Result<usize> {
    let tw = twist_action(action, phi)?;
    Ok(pi1(tw.action(), n, settings)?.1.kernel().len())
}

/// For each class `mu` of `H^1(G)`: twist by its representative, take the
/// kernel of the twisted `pi^1`, and check `F_Phi` maps it onto the fiber of
/// `mu`.
pub fn fiber_analysis(action: &GroupAction, n: &Subgroup, settings: &Settings) -> Result<FiberReport> {
    n.require_normal()?;
    action.require_invariant(n)?;
    let (h, projection) = pi1(action, n, settings)?;
    let classes = exec::try_map(settings.exec, h.classes(), |class| {
        let phi = &h.cocycles()[class.representative];
        let bij = twist_bijection(action, phi)?;
        let (th, tpi) = pi1(bij.twisted().action(), n, settings)?;
        let f_big = induced_f_big(&bij, &th, &h)?;
        let mu = h.class_of(class.representative);
        let fiber = projection.fiber(projection.apply(mu));
        let kernel = tpi.kernel();
        let bijection: Vec<usize> = kernel.iter().map(|&k| f_big.apply(k)).collect();
        let mut sorted = bijection.clone();
        sorted.sort_unstable();
        let bijection_ok = sorted == fiber && f_big.apply(CohomologySet::BASEPOINT) == mu;
        Ok(FiberEntry { mu: phi.values().to_vec(), fiber, twisted_kernel_size: kernel.len(), bijection, bijection_ok })
    })?;
    Ok(FiberReport { projection, classes })
}

/// Conjugation by `b` carrying the `Phi`-twist to the `Psi`-twist, where
/// `Phi(s) = b^-1 Psi(s) s(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transport {
    /// `C_b` as a map on the target.
    pub conjugation: Vec<usize>,
    /// `C_b` on the twisted fixed points, ascending source order.
    pub h0_map: Vec<usize>,
    /// Index map `Z^1(Phi-twist) -> Z^1(Psi-twist)`.
    pub z1_map: Vec<usize>,
    pub h1_map: PointedMap,
}

impl Transport {
    pub fn is_isomorphism(&self) -> bool {
        let mut z = self.z1_map.clone();
        z.sort_unstable();
        z.dedup();
        z.len() == self.z1_map.len() && self.h1_map.is_bijective()
    }
}

pub fn transport_twist(
    action: &GroupAction,
    phi: &Cocycle,
    psi: &Cocycle,
    b: usize,
    settings: &Settings,
) -> Result<Transport> {
    check_cocycle(action, phi.values())?;
    check_cocycle(action, psi.values())?;
    let g = action.target();
    if b >= g.order() {
        return Err(Error::OutOfRange { value: b, order: g.order() });
    }
    let shifted = psi.shifted(action, b);
    if let Some(sigma) = (0..phi.values().len()).find(|&s| shifted.at(s) != phi.at(s)) {
        return Err(Error::NotAWitness { b, sigma });
    }
    let tphi = twist_action(action, phi)?;
    let tpsi = twist_action(action, psi)?;
    let conjugation: Vec<usize> = g.elements().map(|x| g.conj(b, x)).collect();
    let cb = Homomorphism::new(g.clone(), g.clone(), conjugation.clone())?;

    let fixed_phi = fixed_points(tphi.action());
    let h0_map: Vec<usize> = fixed_phi.iter().map(|&x| conjugation[x]).collect();
    let mut image = h0_map.clone();
    image.sort_unstable();
    if image != fixed_points(tpsi.action()) {
        return Err(Error::NotWellDefined { reason: "C_b does not carry twisted H^0 onto twisted H^0".into() });
    }

    let hphi = h1(tphi.action(), settings)?;
    let hpsi = h1(tpsi.action(), settings)?;
    // fails with NotEquivariant if C_b does not intertwine the twists
    let h1_map = induced_map_h1(&cb, &hphi, &hpsi)?;
    let z1_map = hphi
        .cocycles()
        .iter()
        .map(|c| {
            hpsi.index_of(c.map_values(&conjugation).values())
                .ok_or_else(|| Error::NotWellDefined { reason: "C_b left the twisted Z^1".into() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Transport { conjugation, h0_map, z1_map, h1_map })
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

    /// Z/2 acting on S3 by conjugation with the transposition 1.
    fn s3_conj() -> GroupAction {
        let s3 = Arc::new(catalog::symmetric3());
        let rho: Vec<usize> = s3.elements().map(|x| s3.conj(1, x)).collect();
        GroupAction::from_generators(Arc::new(catalog::cyclic(2)), s3, &[(1, rho)]).unwrap()
    }

    fn s() -> Settings {
        Settings::default()
    }

    #[test]
    fn trivial_twist_is_base() {
        let a = s3_conj();
        let t = twist_action(&a, &Cocycle::trivial(&a)).unwrap();
        assert_eq!(*t.action(), a);
    }

    #[test]
    fn abelian_twist_is_base() {
        let a = z2_inv_on(4);
        for phi in enumerate_cocycles(&a, &s()).unwrap() {
            assert_eq!(*twist_action(&a, &phi).unwrap().action(), a);
        }
    }

    #[test]
    fn s3_twist_by_each_cocycle() {
        let a = s3_conj();
        let s3 = a.target();
        let z = enumerate_cocycles(&a, &s()).unwrap();
        // sigma -> x is a cocycle iff x * t x t = 1, i.e. x in {1, transpositions other than... }
        // computed independently below
        let expected: Vec<Vec<usize>> = s3
            .elements()
            .filter(|&x| s3.mul(x, a.apply(1, x)) == 0)
            .map(|x| vec![0, x])
            .collect();
        assert_eq!(z.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>(), expected);
        for phi in &z {
            let t = twist_action(&a, phi).unwrap();
            // the twisted involution is conjugation by Phi(sigma) * t
            let h = s3.mul(phi.at(1), 1);
            let img: Vec<usize> = s3.elements().map(|x| s3.conj(h, x)).collect();
            assert_eq!(t.action().image(1), img.as_slice());
        }
    }

    #[test]
    fn twist_of_non_cocycle_is_rejected() {
        let a = z2_inv_on(4);
        let bad = Cocycle::trivial(&a).map_values(&[1, 1, 1, 1]);
        assert!(matches!(twist_action(&a, &bad), Err(Error::NotACocycle { .. })));
    }

    #[test]
    fn f_phi_examples() {
        let a = s3_conj();
        let z = enumerate_cocycles(&a, &s()).unwrap();
        let phi = z.last().unwrap().clone();
        let bij = twist_bijection(&a, &phi).unwrap();
        assert_eq!(bij.forward(&Cocycle::trivial(&a)).unwrap(), phi);
        let id = twist_bijection(&a, &Cocycle::trivial(&a)).unwrap();
        for c in &z {
            assert_eq!(id.forward(c).unwrap(), *c);
        }
        let hz = enumerate_cocycles(bij.twisted().action(), &s()).unwrap();
        assert_eq!(hz.len(), z.len());
    }

    #[test]
    fn f_big_is_bijection_sending_basepoint_to_phi() {
        for a in [s3_conj(), z2_inv_on(4)] {
            let h = h1(&a, &s()).unwrap();
            for phi in h.cocycles() {
                let bij = twist_bijection(&a, phi).unwrap();
                let th = h1(bij.twisted().action(), &s()).unwrap();
                assert_eq!(th.len(), h.len());
                let f = induced_f_big(&bij, &th, &h).unwrap();
                assert_eq!(Some(f.apply(0)), h.class_of_values(phi.values()));
                let cmap = bij.cocycle_map(&th, &h).unwrap();
                for (c, class) in th.classes().iter().enumerate() {
                    let d = f.apply(c);
                    assert_eq!(class.members.len(), h.classes()[d].members.len());
                    assert!(class.members.iter().all(|&m| h.class_of(cmap[m]) == d));
                }
            }
        }
    }

    #[test]
    fn fibers_on_z4() {
        let a = z2_inv_on(4);
        let n = Subgroup::new(a.target().clone(), &[0, 2]).unwrap();
        let r = fiber_analysis(&a, &n, &s()).unwrap();
        assert!(r.all_ok(), "{r:?}");
        // pi^1 separates the two classes: [s -> 1] maps to [s -> 1 + N]
        assert_eq!(r.projection.class_map, vec![0, 1]);
        assert_eq!(r.classes.iter().map(|c| c.fiber.clone()).collect::<Vec<_>>(), vec![vec![0], vec![1]]);
        assert_eq!(r.classes.iter().map(|c| c.twisted_kernel_size).sum::<usize>(), 2);
    }

    #[test]
    fn fibers_for_whole_and_trivial_subgroup() {
        let a = s3_conj();
        let h = h1(&a, &s()).unwrap();
        let whole = fiber_analysis(&a, &Subgroup::whole(a.target().clone()), &s()).unwrap();
        assert!(whole.all_ok());
        assert!(whole.classes.iter().all(|c| c.fiber == (0..h.len()).collect::<Vec<_>>()));
        let triv = fiber_analysis(&a, &Subgroup::trivial(a.target().clone()), &s()).unwrap();
        assert!(triv.all_ok());
        assert!(triv.classes.iter().enumerate().all(|(i, c)| c.fiber == vec![i]));
    }

    #[test]
    fn fibers_need_normal_subgroup() {
        let a = s3_conj();
        let n = Subgroup::generated(a.target().clone(), &[1]).unwrap();
        assert!(matches!(fiber_analysis(&a, &n, &s()), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn transport_identity_and_exhaustive() {
        let a = s3_conj();
        let z = enumerate_cocycles(&a, &s()).unwrap();
        let t = transport_twist(&a, &z[1], &z[1], 0, &s()).unwrap();
        assert_eq!(t.z1_map, (0..t.z1_map.len()).collect::<Vec<_>>());
        assert_eq!(t.h1_map, PointedMap::identity(t.h1_map.class_map.len()));
        for psi in &z {
            for b in a.target().elements() {
                let phi = psi.shifted(&a, b);
                let t = transport_twist(&a, &phi, psi, b, &s()).unwrap();
                assert!(t.is_isomorphism());
                let tphi = twist_action(&a, &phi).unwrap();
                let tpsi = twist_action(&a, psi).unwrap();
                let hp = h1(tphi.action(), &s()).unwrap();
                let hq = h1(tpsi.action(), &s()).unwrap();
                let mut x = hp.class_sizes();
                let mut y = hq.class_sizes();
                x.sort();
                y.sort();
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn transport_rejects_bad_witness() {
        let a = s3_conj();
        let z = enumerate_cocycles(&a, &s()).unwrap();
        let psi = &z[0];
        let phi = psi.shifted(&a, 2);
        let bad = a.target().elements().find(|&b| psi.shifted(&a, b) != phi).unwrap();
        assert!(matches!(transport_twist(&a, &phi, psi, bad, &s()), Err(Error::NotAWitness { .. })));
    }
}
