use std::sync::Arc;

use xmodkit::actionsys::whitehead::{enumerate_crossed_modules, whitehead_from_h, xmod_to_whitehead};
use xmodkit::actionsys::{functor_i, functor_j, ActionObject};
use xmodkit::fingroup::{catalog, direct_product, enumerate_homs, FiniteGroup};
use xmodkit::pointedcat::{Instance, PointedMap};
use xmodkit::simplicial::{build_tower, build_truncation, derived_face, verify_identities};

#[test]
fn grp_levels_have_expected_orders() {
    let gs = catalog::groups_up_to(4);
    for (_, x) in &gs {
        for (_, b) in &gs {
            for cm in enumerate_crossed_modules(x, b).unwrap() {
                let t = build_tower(&xmod_to_whitehead(&cm).unwrap(), 3).unwrap();
                for n in 0..=3 {
                    let expected = x.order().pow(n as u32 + 1) * b.order();
                    assert_eq!(t.realization(n).fa.size(), expected);
                }
            }
        }
    }
}

/// Multiset of element orders; a complete invariant for finite abelian groups.
fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut counts = vec![0; g.order() + 1];
    for a in g.elements() {
        let (mut k, mut p) = (1, a);
        while p != 0 {
            p = g.mul(p, a);
            k += 1;
        }
        counts[k] += 1;
    }
    counts
}

/// `A_n = (X, nX ⊕ B)`.
#[test]
fn abelian_levels_match_closed_form() {
    let ab = catalog::abelian_groups_up_to(4);
    for (_, x) in &ab {
        for (_, b) in &ab {
            let a = ActionObject::ab_pair(x.clone(), b.clone()).unwrap();
            for h in enumerate_homs(x, b) {
                let t = build_tower(&whitehead_from_h(&a, &PointedMap::from_hom(Instance::Ab, &h)).unwrap(), 3).unwrap();
                let mut expected: Arc<FiniteGroup> = b.clone();
                for n in 0..=3 {
                    let level = t.level(n);
                    assert_eq!(functor_j(level).size(), x.order());
                    let ia = functor_i(level);
                    let g = ia.group().unwrap();
                    assert!(g.is_abelian());
                    assert_eq!(order_profile(g), order_profile(&expected), "level {n}");
                    expected = direct_product(x, &expected);
                }
            }
        }
    }
}

#[test]
fn identities_hold_with_all_structural_rows() {
    let gs = catalog::groups_up_to(4);
    let mut towers = 0;
    for (_, x) in &gs {
        for (_, b) in &gs {
            for cm in enumerate_crossed_modules(x, b).unwrap() {
                let t = build_tower(&xmod_to_whitehead(&cm).unwrap(), 3).unwrap();
                let rep = verify_identities(&build_truncation(&t).unwrap());
                assert!(rep.all_passed(), "{:?}", rep.failures().next());
                assert_eq!(rep.table_rows().count(), 12);
                let mut rows: Vec<u8> = rep.table_rows().filter_map(|r| r.table_row).collect();
                rows.sort_unstable();
                assert_eq!(rows, (1..=12).collect::<Vec<u8>>());
                assert!(rep.rows.iter().all(|r| r.table_row.is_none() || r.reason.is_some()));
                towers += 1;
            }
        }
    }
    assert!(towers > 50);
}

#[test]
fn derived_faces_need_depth() {
    let z2 = Arc::new(catalog::cyclic(2));
    let cm = enumerate_crossed_modules(&z2, &z2).unwrap().pop().unwrap();
    let w = xmod_to_whitehead(&cm).unwrap();
    let shallow = build_tower(&w, 1).unwrap();
    assert!(derived_face(&shallow, 1).is_err());
    assert!(build_truncation(&shallow).is_err());
    let deep = build_tower(&w, 2).unwrap();
    assert!(derived_face(&deep, 1).is_ok());
}
