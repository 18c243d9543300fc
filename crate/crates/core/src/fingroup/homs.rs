use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::{FiniteGroup, GroupHom};

/// Extends generator images to a full map, or `None` if they do not define
/// a homomorphism. Every edge `a → a·g` of the Cayley graph is checked.
pub(crate) fn extend_from_generators(dom: &FiniteGroup, cod: &FiniteGroup, images: &[usize]) -> Option<Vec<usize>> {
    let gens = dom.generators();
    debug_assert_eq!(gens.len(), images.len());
    let mut map = vec![usize::MAX; dom.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        let fa = map[a];
        for (&g, &t) in gens.iter().zip(images) {
            let b = dom.mul(a, g);
            let fb = cod.mul(fa, t);
            if map[b] == usize::MAX {
                map[b] = fb;
                queue.push_back(b);
            } else if map[b] != fb {
                return None;
            }
        }
    }
    Some(map)
}

/// Calls `visit` on every homomorphism whose generator images are drawn
/// from `candidates[i]` for the i-th generator of `dom`. Stops early when
/// `visit` returns `false`.
pub(crate) fn for_each_hom(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    candidates: &[Vec<usize>],
    mut visit: impl FnMut(Vec<usize>) -> bool,
) {
    let k = candidates.len();
    if candidates.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; k];
    loop {
        let images: Vec<usize> = (0..k).map(|i| candidates[i][idx[i]]).collect();
        if let Some(map) = extend_from_generators(dom, cod, &images) {
            if !visit(map) {
                return;
            }
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < candidates[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Images allowed for each generator: element order must divide.
fn order_candidates(dom: &FiniteGroup, cod: &FiniteGroup) -> Vec<Vec<usize>> {
    let cod_orders: Vec<usize> = cod.elements().map(|a| cod.element_order(a)).collect();
    dom.generators()
        .iter()
        .map(|&g| {
            let n = dom.element_order(g);
            cod.elements().filter(|&t| n % cod_orders[t] == 0).collect()
        })
        .collect()
}

/// All homomorphisms `dom → cod`, sorted lexicographically by map.
pub fn enumerate_homs(dom: &Arc<FiniteGroup>, cod: &Arc<FiniteGroup>) -> Vec<GroupHom> {
    enumerate_homs_filtered(dom, cod, |_, _| true)
}

/// Homomorphisms whose image of the i-th generator `g` satisfies
/// `allowed(g, image)`, sorted lexicographically by map.
pub fn enumerate_homs_filtered(
    dom: &Arc<FiniteGroup>,
    cod: &Arc<FiniteGroup>,
    allowed: impl Fn(usize, usize) -> bool,
) -> Vec<GroupHom> {
    let mut candidates = order_candidates(dom, cod);
    for (c, &g) in candidates.iter_mut().zip(dom.generators()) {
        c.retain(|&t| allowed(g, t));
    }
    let mut maps = Vec::new();
    for_each_hom(dom, cod, &candidates, |m| {
        maps.push(m);
        true
    });
    maps.sort();
    maps.dedup();
    maps.into_iter()
        .map(|m| GroupHom::from_parts_unchecked(dom.clone(), cod.clone(), m))
        .collect()
}

/// `Aut(G)` with its elements listed as maps; index 0 is the identity and
/// the product `i * j` is `maps[i] ∘ maps[j]`.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub group: Arc<FiniteGroup>,
    pub maps: Vec<Vec<usize>>,
}

pub fn automorphism_group(g: &Arc<FiniteGroup>) -> AutomorphismGroup {
    let n = g.order();
    let profile: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
    let candidates: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .map(|&x| g.elements().filter(|&t| profile[t] == profile[x]).collect())
        .collect();
    let mut maps = Vec::new();
    for_each_hom(g, g, &candidates, |m| {
        let mut seen = vec![false; n];
        if m.iter().all(|&v| !std::mem::replace(&mut seen[v], true)) {
            maps.push(m);
        }
        true
    });
    maps.sort();
    maps.dedup();
    let index: HashMap<&[usize], usize> = maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let k = maps.len();
    let mut table = Vec::with_capacity(k * k);
    for a in &maps {
        for b in &maps {
            let c: Vec<usize> = b.iter().map(|&x| a[x]).collect();
            table.push(index[c.as_slice()] as u32);
        }
    }
    let group = Arc::new(FiniteGroup::from_flat_table(k, table.into()));
    AutomorphismGroup { group, maps }
}

#[cfg(test)]
mod tests {
    use super::super::catalog::{cyclic, klein4, symmetric3};
    use super::*;

    /// Brute force over all maps, keeping those satisfying the full law.
    fn brute_homs(dom: &FiniteGroup, cod: &FiniteGroup) -> Vec<Vec<usize>> {
        let (n, m) = (dom.order(), cod.order());
        let mut out = Vec::new();
        let total = m.pow(n as u32);
        for code in 0..total {
            let mut map = vec![0; n];
            let mut c = code;
            for v in map.iter_mut().rev() {
                *v = c % m;
                c /= m;
            }
            let ok = (0..n).all(|a| (0..n).all(|b| map[dom.mul(a, b)] == cod.mul(map[a], map[b])));
            if ok {
                out.push(map);
            }
        }
        out
    }

    #[test]
    fn homs_match_brute_force() {
        let groups = [cyclic(2), cyclic(3), cyclic(4), klein4(), symmetric3()];
        for d in &groups {
            for c in &groups {
                if c.order().pow(d.order() as u32) > 2_000_000 {
                    continue;
                }
                let (da, ca) = (Arc::new(d.clone()), Arc::new(c.clone()));
                let fast: Vec<Vec<usize>> = enumerate_homs(&da, &ca).into_iter().map(|h| h.into_map()).collect();
                assert_eq!(fast, brute_homs(d, c), "|dom|={} |cod|={}", d.order(), c.order());
            }
        }
    }

    #[test]
    fn z2_to_z2_has_two_homs() {
        let z2 = Arc::new(cyclic(2));
        let homs = enumerate_homs(&z2, &z2);
        assert_eq!(homs.len(), 2);
        assert_eq!(homs[0].map(), &[0, 0]);
        assert_eq!(homs[1].map(), &[0, 1]);
    }

    #[test]
    fn automorphism_orders() {
        // Brute force over bijections gives |Aut Z3| = 2, |Aut V4| = 6, |Aut S3| = 6.
        let count_bijective = |g: &FiniteGroup| brute_homs(g, g).into_iter().filter(|m| {
            let mut s = m.clone();
            s.sort();
            s.dedup();
            s.len() == m.len()
        }).count();
        for g in [cyclic(2), cyclic(3), cyclic(5), klein4(), symmetric3()] {
            let aut = automorphism_group(&Arc::new(g.clone()));
            assert_eq!(aut.group.order(), count_bijective(&g));
            assert_eq!(aut.maps[0], g.elements().collect::<Vec<_>>());
        }
        assert_eq!(automorphism_group(&Arc::new(cyclic(2))).group.order(), 1);
        assert_eq!(automorphism_group(&Arc::new(cyclic(3))).group.order(), 2);
    }
}
