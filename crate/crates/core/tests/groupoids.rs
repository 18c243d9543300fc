use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use proptest::prelude::*;
use xmodkit::actionsys::whitehead::{
    boundaries, enumerate_crossed_modules, whitehead_from_h, xmod_check, xmod_to_whitehead, CrossedModule,
};
use xmodkit::actionsys::{enumerate_actions, enumerate_morphisms, realize_point, test_action_objects, ActionInstance, ActionObject};
use xmodkit::fingroup::{automorphism_group, catalog, enumerate_homs, FiniteGroup};
use xmodkit::gpd::{
    enumerate_internal_categories, is_groupoid, is_internal_category, protomodular_diagram_check, wstar_check,
    InternalCategory,
};

/// Least `(act, h)` under relabelling by `Aut(X) × Aut(B)`.
fn xmod_class(cm: &CrossedModule) -> Vec<usize> {
    let (x, b) = (cm.x(), cm.b());
    let (ax, ab) = (automorphism_group(x).maps, automorphism_group(b).maps);
    let inverse = |m: &Vec<usize>| {
        let mut inv = vec![0; m.len()];
        for (i, &v) in m.iter().enumerate() {
            inv[v] = i;
        }
        inv
    };
    let mut best: Option<Vec<usize>> = None;
    for al in &ax {
        let ali = inverse(al);
        for be in &ab {
            let bei = inverse(be);
            let mut key = Vec::new();
            for g in b.elements() {
                key.extend(x.elements().map(|y| al[cm.action().act(bei[g], ali[y])]));
            }
            key.extend(x.elements().map(|y| be[cm.h().apply(ali[y])]));
            if best.as_ref().map_or(true, |k| key < *k) {
                best = Some(key);
            }
        }
    }
    best.unwrap()
}

/// Isomorphism classes of groupoids with `|C1| = n` and of crossed modules
/// with `|X|·|B| = n` are equinumerous.
#[test]
fn groupoid_classes_match_crossed_module_classes() {
    let mut by_c1: BTreeMap<usize, usize> = BTreeMap::new();
    for cat in enumerate_internal_categories(8).unwrap() {
        *by_c1.entry(cat.c1().order()).or_default() += 1;
    }
    let gs = catalog::groups_up_to(8);
    let mut by_size: BTreeMap<usize, BTreeSet<(usize, usize, Vec<usize>)>> = BTreeMap::new();
    for (xi, (_, x)) in gs.iter().enumerate() {
        for (bi, (_, b)) in gs.iter().enumerate().filter(|(_, (_, b))| b.order() * x.order() <= 8) {
            for cm in enumerate_crossed_modules(x, b).unwrap() {
                by_size.entry(x.order() * b.order()).or_default().insert((xi, bi, xmod_class(&cm)));
            }
        }
    }
    let xmods: BTreeMap<usize, usize> = by_size.into_iter().map(|(k, v)| (k, v.len())).collect();
    assert_eq!(by_c1, xmods);
}

#[test]
fn pullback_squares_hold_in_group_instances() {
    let gs = catalog::groups_up_to(4);
    for (_, x) in &gs {
        for (_, b) in &gs {
            for cm in enumerate_crossed_modules(x, b).unwrap() {
                assert!(wstar_check(&xmod_to_whitehead(&cm).unwrap(), 3).unwrap());
            }
        }
    }
    for a in test_action_objects(ActionInstance::AbPairs, 4) {
        for h in boundaries(&a) {
            assert!(wstar_check(&whitehead_from_h(&a, &h).unwrap(), 3).unwrap());
        }
    }
}

#[test]
fn protomodular_diagram_characterizes_crossed_modules() {
    let gs = catalog::groups_up_to(5);
    let mut agree = 0;
    for (_, b) in &gs {
        for (_, x) in &gs {
            for act in enumerate_actions(b, x) {
                let ext = realize_point(&ActionObject::GrpAct(act.clone())).unwrap();
                for h in enumerate_homs(x, b) {
                    assert_eq!(protomodular_diagram_check(&ext, &h), xmod_check(&act, &h).is_ok());
                    agree += 1;
                }
            }
        }
    }
    assert!(agree > 100);
}

/// A morphism with invertible components is invertible.
#[test]
fn components_reflect_isomorphisms() {
    for (inst, bound) in [(ActionInstance::GrpAct, 6), (ActionInstance::AbPairs, 6), (ActionInstance::PSetPairs, 4)] {
        let objs = test_action_objects(inst, bound);
        for a in &objs {
            for b in objs.iter().filter(|b| xmodkit::actionsys::functor_i(b).size() == xmodkit::actionsys::functor_i(a).size()) {
                for f in enumerate_morphisms(a, b) {
                    let bijective = f.j_component().is_injective()
                        && f.i_component().is_injective()
                        && f.j_map().len() == xmodkit::actionsys::functor_j(b).size();
                    if bijective {
                        let inv = f.inverse().expect("invertible components");
                        assert!(inv.violation().is_none());
                        assert!(f.is_iso());
                    }
                }
            }
        }
    }
}

fn small_groupoids() -> Vec<InternalCategory> {
    enumerate_internal_categories(6).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn mutated_composition_is_never_a_groupoid(i in 0usize..1000, u in 0usize..10_000, shift in 1usize..1000) {
        let cats = small_groupoids();
        let cat = &cats[i % cats.len()];
        let n1 = cat.c1().order();
        prop_assume!(n1 > 1);
        let mut m = cat.m().to_vec();
        let u = u % m.len();
        m[u] = (m[u] + 1 + shift % (n1 - 1)) % n1;
        let bad = cat.with_composition(m).unwrap();
        prop_assert!(!is_internal_category(&bad).all_passed());
        prop_assert!(is_groupoid(&bad).map_or(true, |g| g.violation().is_some()));
    }
}

#[test]
fn one_object_groupoids_are_abelian() {
    let one = Arc::new(FiniteGroup::trivial());
    let cats = enumerate_internal_categories(8).unwrap();
    for cat in cats.iter().filter(|c| c.c0().order() == 1) {
        assert!(cat.c1().is_abelian());
    }
    let abelian = catalog::abelian_groups_up_to(8).len() - 1;
    let one_object = cats.iter().filter(|c| c.c0().order() == 1 && c.c1().order() > 1).count();
    assert_eq!(one_object, abelian);
    drop(one);
}
