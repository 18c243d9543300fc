use proptest::prelude::*;
use xmodkit::actionsys::whitehead::{
    boundaries, l_condition_instance, whitehead_from_h, whitehead_sequences_by_search, xmod_check, LConditionConfig,
};
use xmodkit::actionsys::{
    cartesian_lifting, enumerate_actions, enumerate_morphisms, eta, functor_f, functor_g, functor_g_map, functor_i,
    functor_j, is_cartesian, is_cartesian_exhaustive, is_organic, test_action_objects, ActionInstance, ActionObject,
};
use xmodkit::fingroup::{catalog, enumerate_homs};
use xmodkit::pointedcat::{all_pointed_maps, Instance, PointedMap, PointedObject};

const INSTANCES: [ActionInstance; 3] = [ActionInstance::GrpAct, ActionInstance::AbPairs, ActionInstance::PSetPairs];

#[test]
fn eta_is_organic_up_to_order_eight() {
    for inst in INSTANCES {
        for a in test_action_objects(inst, 8) {
            assert!(is_organic(&eta(&a)), "{a:?}");
        }
    }
}

fn targets(inst: ActionInstance, max: usize) -> Vec<PointedObject> {
    match inst {
        ActionInstance::GrpAct => catalog::groups_up_to(max).into_iter().map(|(_, g)| PointedObject::Grp(g)).collect(),
        ActionInstance::AbPairs => {
            catalog::abelian_groups_up_to(max).into_iter().map(|(_, g)| PointedObject::Ab(g)).collect()
        }
        ActionInstance::PSetPairs => (1..=max).map(PointedObject::PSet).collect(),
    }
}

/// Each `g: A → G(Y)` is `G(f)η_A` for exactly one `f: FA → Y`.
#[test]
fn eta_is_universal() {
    for inst in INSTANCES {
        for a in test_action_objects(inst, 4) {
            let fa = functor_f(&a);
            for y in targets(inst, 3) {
                let fs: Vec<PointedMap> = match (fa.group(), y.group()) {
                    (Some(f), Some(g)) => enumerate_homs(f, g).iter().map(|h| PointedMap::from_hom(fa.instance(), h)).collect(),
                    _ => all_pointed_maps(&fa, &y),
                };
                for g in enumerate_morphisms(&a, &functor_g(&y)) {
                    let n = fs.iter().filter(|f| functor_g_map(f).compose(&eta(&a)).unwrap().same_maps(&g)).count();
                    assert_eq!(n, 1);
                }
            }
        }
    }
}

#[test]
fn liftings_are_cartesian_with_bijective_j() {
    for inst in INSTANCES {
        for a in test_action_objects(inst, 3) {
            let ia = functor_i(&a);
            for src in targets(inst, 3) {
                let gs: Vec<PointedMap> = match (src.group(), ia.group()) {
                    (Some(s), Some(t)) => enumerate_homs(s, t).iter().map(|h| PointedMap::from_hom(src.instance(), h)).collect(),
                    _ => all_pointed_maps(&src, &ia),
                };
                for g in gs {
                    let (_, alpha) = cartesian_lifting(&g, &a).unwrap();
                    assert!(is_cartesian(&alpha));
                    assert!(alpha.j_component().is_injective() && alpha.j_map().len() == functor_j(&a).size());
                    if src.size() <= 2 {
                        assert!(is_cartesian_exhaustive(&alpha, 2).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn cartesian_morphisms_have_bijective_j() {
    for inst in INSTANCES {
        let objs = test_action_objects(inst, 3);
        for a in &objs {
            for b in &objs {
                for f in enumerate_morphisms(a, b).into_iter().filter(is_cartesian) {
                    assert!(f.j_component().is_injective());
                    assert_eq!(functor_j(a).size(), functor_j(b).size());
                }
            }
        }
    }
}

#[test]
fn crossed_module_laws_match_whitehead_construction() {
    let gs = catalog::groups_up_to(4);
    for (_, b) in &gs {
        for (_, x) in &gs {
            for act in enumerate_actions(b, x) {
                let a = ActionObject::GrpAct(act.clone());
                for h in enumerate_homs(x, b) {
                    let w = whitehead_from_h(&a, &PointedMap::from_hom(Instance::Grp, &h));
                    assert_eq!(xmod_check(&act, &h).is_ok(), w.is_ok());
                }
            }
        }
    }
}

#[test]
fn abelian_sequences_are_homomorphisms() {
    let ab = catalog::abelian_groups_up_to(6);
    for (_, x) in &ab {
        for (_, b) in &ab {
            let a = ActionObject::ab_pair(x.clone(), b.clone()).unwrap();
            let homs = enumerate_homs(x, b).len();
            assert_eq!(boundaries(&a).len(), homs);
            assert_eq!(whitehead_sequences_by_search(&a).len(), homs);
        }
    }
}

#[test]
fn l_condition_is_unique_in_other_instances() {
    for inst in [ActionInstance::AbPairs, ActionInstance::PSetPairs] {
        for a in test_action_objects(inst, 3) {
            for h in boundaries(&a) {
                let cfg = LConditionConfig::from_whitehead(&whitehead_from_h(&a, &h).unwrap()).unwrap();
                assert!(l_condition_instance(&cfg).unwrap().is_some());
            }
        }
    }
}

fn grp_object() -> impl Strategy<Value = ActionObject> {
    let objs = test_action_objects(ActionInstance::GrpAct, 4);
    (0..objs.len()).prop_map(move |i| objs[i].clone())
}

proptest! {
    #[test]
    fn morphism_composition_is_associative(a in grp_object(), b in grp_object(), c in grp_object(), d in grp_object(), i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let (fs, gs, hs) = (enumerate_morphisms(&a, &b), enumerate_morphisms(&b, &c), enumerate_morphisms(&c, &d));
        let (f, g, h) = (&fs[i % fs.len()], &gs[j % gs.len()], &hs[k % hs.len()]);
        let left = h.compose(&g.compose(f).unwrap()).unwrap();
        let right = h.compose(g).unwrap().compose(f).unwrap();
        prop_assert!(left.same_maps(&right));
        prop_assert!(left.violation().is_none());
    }

    #[test]
    fn f_of_composite_is_composite_of_f(a in grp_object(), b in grp_object(), c in grp_object(), i in 0usize..1000, j in 0usize..1000) {
        use xmodkit::actionsys::functor_f_map;
        let (fs, gs) = (enumerate_morphisms(&a, &b), enumerate_morphisms(&b, &c));
        let (f, g) = (&fs[i % fs.len()], &gs[j % gs.len()]);
        let lhs = functor_f_map(&g.compose(f).unwrap());
        let rhs = functor_f_map(g).compose(&functor_f_map(f)).unwrap();
        prop_assert_eq!(lhs.map(), rhs.map());
    }
}
