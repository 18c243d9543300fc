//! Named small groups, one representative per isomorphism class for every
//! order up to 15.

use std::collections::HashMap;
use std::sync::Arc;

use super::{direct_product, FiniteGroup};

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table: Vec<u32> = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
    FiniteGroup::from_flat_table(n, table.into())
}

/// `Z_n ⋊ Z_2` with the nontrivial element acting by inversion.
pub fn dihedral(n: usize) -> FiniteGroup {
    inverting_semidirect(n, 2)
}

/// `Z_n ⋊ Z_m` where odd elements of `Z_m` invert `Z_n`.
fn inverting_semidirect(n: usize, m: usize) -> FiniteGroup {
    let act: Vec<u32> = (0..m)
        .flat_map(|b| (0..n).map(move |x| if b % 2 == 0 { x as u32 } else { ((n - x) % n) as u32 }))
        .collect();
    FiniteGroup::semidirect_raw(Arc::new(cyclic(n)), Arc::new(cyclic(m)), act.into())
}

/// The group generated by permutations of `0..degree`, composed as
/// `(pq)(i) = p(q(i))`. The identity is element 0; others follow in
/// breadth-first order from the generators.
pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p: Vec<usize> = (0..degree).map(|k| elems[i][g[k]]).collect();
            if !index.contains_key(&p) {
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            let c: Vec<usize> = (0..degree).map(|k| a[b[k]]).collect();
            table.push(index[&c] as u32);
        }
    }
    FiniteGroup::from_flat_table(n, table.into())
}

pub fn symmetric3() -> FiniteGroup {
    from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

pub fn alternating4() -> FiniteGroup {
    from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

pub fn klein4() -> FiniteGroup {
    let z2 = Arc::new(cyclic(2));
    direct_product(&z2, &z2).as_ref().clone()
}

/// The quaternion group as left multiplications on `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> FiniteGroup {
    // Unit u in 0..4 = 1, i, j, k; element s*4 + u means (-1)^s u.
    fn mul(a: usize, b: usize) -> usize {
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let (s, u) = UNIT[a % 4][b % 4];
        ((s + a / 4 + b / 4) % 2) * 4 + u
    }
    let gi: Vec<usize> = (0..8).map(|x| mul(1, x)).collect();
    let gj: Vec<usize> = (0..8).map(|x| mul(2, x)).collect();
    from_permutations(8, &[gi, gj])
}

/// The dicyclic group of order 12, `Z_3 ⋊ Z_4`.
pub fn dicyclic3() -> FiniteGroup {
    inverting_semidirect(3, 4)
}

fn product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup {
    direct_product(&Arc::new(a), &Arc::new(b)).as_ref().clone()
}

/// Every group of order at most 15 up to isomorphism, by order then name.
pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("1", cyclic(1)),
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z2xZ2", klein4()),
        ("Z5", cyclic(5)),
        ("Z6", cyclic(6)),
        ("S3", symmetric3()),
        ("Z7", cyclic(7)),
        ("Z8", cyclic(8)),
        ("Z4xZ2", product(cyclic(4), cyclic(2))),
        ("Z2xZ2xZ2", product(klein4(), cyclic(2))),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
        ("Z9", cyclic(9)),
        ("Z3xZ3", product(cyclic(3), cyclic(3))),
        ("Z10", cyclic(10)),
        ("D5", dihedral(5)),
        ("Z11", cyclic(11)),
        ("Z12", cyclic(12)),
        ("Z6xZ2", product(cyclic(6), cyclic(2))),
        ("A4", alternating4()),
        ("D6", dihedral(6)),
        ("Dic3", dicyclic3()),
        ("Z13", cyclic(13)),
        ("Z14", cyclic(14)),
        ("D7", dihedral(7)),
        ("Z15", cyclic(15)),
    ]
}

/// Groups of order at most `max_order`, shared.
pub fn groups_up_to(max_order: usize) -> Vec<(&'static str, Arc<FiniteGroup>)> {
    small_groups()
        .into_iter()
        .filter(|(_, g)| g.order() <= max_order)
        .map(|(n, g)| (n, Arc::new(g)))
        .collect()
}

/// Abelian groups of order at most `max_order`.
pub fn abelian_groups_up_to(max_order: usize) -> Vec<(&'static str, Arc<FiniteGroup>)> {
    groups_up_to(max_order).into_iter().filter(|(_, g)| g.is_abelian()).collect()
}

pub fn by_name(name: &str) -> Option<FiniteGroup> {
    small_groups().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}
