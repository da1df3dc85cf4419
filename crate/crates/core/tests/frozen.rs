//! Values computed once by an independent brute-force script (plain
//! permutation arithmetic, no shared code) and frozen here.

use std::sync::Arc;

use cocycle::actions::GroupAction;
use cocycle::cohomology::h1;
use cocycle::forms::{cardinality_bound_check, classify_forms};
use cocycle::group::{catalog, FiniteGroup, Subgroup};
use cocycle::torsors::classify_torsors;
use cocycle::twisting::twist_action;
use cocycle::Settings;

/// `Z2` acting on `g` by conjugation with the involution `t`.
fn z2_conj(g: FiniteGroup, t: usize) -> GroupAction {
    let g = Arc::new(g);
    let img: Vec<usize> = g.elements().map(|x| g.mul(g.mul(t, x), t)).collect();
    GroupAction::from_generators(Arc::new(catalog::cyclic(2)), g, &[(1, img)]).unwrap()
}

fn reps(action: &GroupAction) -> Vec<Vec<usize>> {
    let h = h1(action, &Settings::default()).unwrap();
    (0..h.len()).map(|c| h.representative(c).values().to_vec()).collect()
}

#[test]
fn s3_under_transposition() {
    let a = z2_conj(catalog::symmetric3(), 1);
    let s = Settings::default();
    let h = h1(&a, &s).unwrap();
    assert_eq!(h.z1_size(), 4);
    // the class of the trivial cocycle holds the three coboundaries
    assert_eq!(h.class_sizes(), vec![3, 1]);
    assert_eq!(reps(&a), vec![vec![0, 0], vec![0, 1]]);

    let last = h.cocycles().last().unwrap().clone();
    let tw = twist_action(&a, &last).unwrap();
    assert_eq!(tw.action().image(1), &[0, 2, 1, 4, 3, 5]);

    let census = classify_torsors(&a, &s).unwrap();
    assert_eq!((census.structures, census.torsor_classes), (4, 2));
    assert!(census.matches);

    let forms = classify_forms(&a, &s).unwrap();
    assert_eq!(forms.report().aut_order, 6);
    assert_eq!(forms.forms.len(), 2);

    let a3 = Subgroup::new(a.target().clone(), &[0, 3, 4]).unwrap();
    let card = cardinality_bound_check(&a, &a3, &s).unwrap();
    assert_eq!(card.n_mu_sizes, vec![1, 1]);
    assert!(card.pass());
}

#[test]
fn d4_under_reflection() {
    let a = z2_conj(catalog::dihedral(4), 4);
    let s = Settings::default();
    let h = h1(&a, &s).unwrap();
    assert_eq!((h.z1_size(), h.len()), (6, 4));
    assert_eq!(reps(&a), vec![vec![0, 0], vec![0, 1], vec![0, 4], vec![0, 6]]);

    let rot = Subgroup::new(a.target().clone(), &[0, 1, 2, 3]).unwrap();
    let card = cardinality_bound_check(&a, &rot, &s).unwrap();
    assert_eq!(card.h1_size, 4);
    assert_eq!(card.quotient_h1_size, 2);
    assert_eq!(card.n_mu_sizes, vec![2, 2, 2, 2]);
    assert!(card.pass());

    let forms = classify_forms(&a, &s).unwrap();
    assert_eq!((forms.report().aut_order, forms.forms.len()), (8, 4));
}

#[test]
fn q8_under_cyclic_units() {
    let q8 = Arc::new(catalog::quaternion());
    let a = GroupAction::from_generators(
        Arc::new(catalog::cyclic(3)),
        q8,
        &[(1, vec![0, 2, 3, 1, 4, 6, 7, 5])],
    )
    .unwrap();
    let s = Settings::default();
    let h = h1(&a, &s).unwrap();
    assert_eq!((h.z1_size(), h.len()), (4, 1));
    let forms = classify_forms(&a, &s).unwrap();
    assert_eq!((forms.report().aut_order, forms.forms.len()), (24, 2));
}

#[test]
fn klein_four_trivial_on_s3() {
    let v4 = Arc::new(catalog::by_name("Z2xZ2").unwrap());
    let a = GroupAction::trivial(v4, Arc::new(catalog::symmetric3()));
    let h = h1(&a, &Settings::default()).unwrap();
    assert_eq!((h.z1_size(), h.len()), (10, 4));
}

#[test]
fn forms_under_trivial_z2() {
    let expect = [("S3", 2, 6), ("Q8", 3, 24), ("D4", 4, 8), ("Z8", 4, 4), ("Z2xZ4", 4, 8), ("D6", 4, 12)];
    for (name, classes, aut) in expect {
        let a = GroupAction::trivial(Arc::new(catalog::cyclic(2)), Arc::new(catalog::by_name(name).unwrap()));
        let f = classify_forms(&a, &Settings::default()).unwrap();
        let r = f.report();
        assert_eq!((r.forms.len(), r.aut_order), (classes, aut), "{name}");
        assert!(r.matching_ok, "{name}");
    }
}

#[test]
fn small_baselines() {
    let s = Settings::default();
    let z4 = Arc::new(catalog::cyclic(4));
    let inv: Vec<usize> = z4.elements().map(|x| z4.inv(x)).collect();
    let a = GroupAction::from_generators(Arc::new(catalog::cyclic(2)), z4, &[(1, inv)]).unwrap();
    assert_eq!(classify_torsors(&a, &s).unwrap().torsor_classes, 2);

    let z4_forms = GroupAction::trivial(Arc::new(catalog::cyclic(2)), Arc::new(catalog::cyclic(4)));
    assert_eq!(classify_forms(&z4_forms, &s).unwrap().forms.len(), 2);
    let v4_forms = GroupAction::trivial(Arc::new(catalog::cyclic(3)), Arc::new(catalog::by_name("Z2xZ2").unwrap()));
    assert_eq!(classify_forms(&v4_forms, &s).unwrap().forms.len(), 2);
}
