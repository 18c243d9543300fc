use std::sync::Arc;

use super::homs::for_each_hom;
use super::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};

pub const DEFAULT_ISO_BOUND: usize = 24;

/// An isomorphism `g → h` if one exists, searched up to the default bound.
pub fn find_isomorphism(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Result<Option<GroupHom>> {
    find_isomorphism_bounded(g, h, DEFAULT_ISO_BOUND)
}

/// Generator-image backtracking; images are restricted to elements of the
/// same order and the first bijective extension in index order is returned.
pub fn find_isomorphism_bounded(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>, bound: usize) -> Result<Option<GroupHom>> {
    for order in [g.order(), h.order()] {
        if order > bound {
            return Err(Error::OrderTooLarge { order, bound });
        }
    }
    if g.order() != h.order() || g.order_profile() != h.order_profile() {
        return Ok(None);
    }
    let h_orders: Vec<usize> = h.elements().map(|a| h.element_order(a)).collect();
    let candidates: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .map(|&x| {
            let n = g.element_order(x);
            h.elements().filter(|&t| h_orders[t] == n).collect()
        })
        .collect();
    let mut found = None;
    for_each_hom(g, h, &candidates, |m| {
        let mut seen = vec![false; m.len()];
        if m.iter().all(|&v| !std::mem::replace(&mut seen[v], true)) {
            found = Some(m);
            false
        } else {
            true
        }
    });
    Ok(found.map(|m| GroupHom::from_parts_unchecked(g.clone(), h.clone(), m)))
}

#[cfg(test)]
mod tests {
    use super::super::catalog::{cyclic, dihedral, klein4, quaternion, symmetric3};
    use super::super::semidirect_product;
    use super::*;
    use crate::actionsys::GroupAction;

    #[test]
    fn z2_self_iso_is_identity() {
        let z2 = Arc::new(cyclic(2));
        let iso = find_isomorphism(&z2, &z2).unwrap().unwrap();
        assert_eq!(iso.map(), &[0, 1]);
    }

    #[test]
    fn z4_and_klein_are_not_isomorphic() {
        let r = find_isomorphism(&Arc::new(cyclic(4)), &Arc::new(klein4())).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn inversion_semidirect_is_s3() {
        let z3 = Arc::new(cyclic(3));
        let z2 = Arc::new(cyclic(2));
        let act = GroupAction::new(z2, z3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let sd = semidirect_product(&act).group;
        let s3 = Arc::new(symmetric3());
        let iso = find_isomorphism(&sd, &s3).unwrap().unwrap();
        assert!(iso.is_homomorphism() && iso.is_bijective());
    }

    #[test]
    fn d4_and_q8_share_order_but_differ() {
        let d4 = Arc::new(dihedral(4));
        let q8 = Arc::new(quaternion());
        assert!(find_isomorphism(&d4, &q8).unwrap().is_none());
    }

    #[test]
    fn bound_is_enforced() {
        let big = Arc::new(cyclic(25));
        let err = find_isomorphism(&big, &big).unwrap_err();
        assert_eq!(err, Error::OrderTooLarge { order: 25, bound: 24 });
    }
}
