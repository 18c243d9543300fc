//! Exact finite-group arithmetic on dense element indices.
//!
//! Every group has elements `0..order` with the identity pinned at index 0.
//! Small groups carry an explicit multiplication table; larger groups that
//! arise from constructions (semidirect and direct products, pullbacks)
//! multiply structurally through their factors, which keeps towers of
//! iterated semidirect products affordable.
//!
//! Pairs are always encoded as `first * |second| + second`, so the natural
//! index order of a product or pullback is the lexicographic order on pairs.

pub mod catalog;
mod homs;
mod iso;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::actionsys::GroupAction;
use crate::error::{Error, Result};

pub use homs::{automorphism_group, enumerate_homs, enumerate_homs_filtered, AutomorphismGroup};
pub use iso::{find_isomorphism, find_isomorphism_bounded, DEFAULT_ISO_BOUND};

/// Groups up to this order get an explicit multiplication table when built
/// from a construction.
const MATERIALIZE_LIMIT: usize = 128;

#[derive(Clone)]
enum Repr {
    Table(Arc<[u32]>),
    Semidirect {
        normal: Arc<FiniteGroup>,
        base: Arc<FiniteGroup>,
        act: Arc<[u32]>,
    },
    Direct {
        left: Arc<FiniteGroup>,
        right: Arc<FiniteGroup>,
    },
    Sub {
        parent: Arc<FiniteGroup>,
        elems: Arc<[usize]>,
    },
}

/// A finite group given by exact arithmetic on the indices `0..order`.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    repr: Repr,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.repr {
            Repr::Table(_) => "table",
            Repr::Semidirect { .. } => "semidirect",
            Repr::Direct { .. } => "direct",
            Repr::Sub { .. } => "subgroup",
        };
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("repr", &kind)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        if self.order != other.order {
            return false;
        }
        match (&self.repr, &other.repr) {
            (Repr::Table(a), Repr::Table(b)) => a == b,
            (
                Repr::Semidirect { normal: n1, base: b1, act: a1 },
                Repr::Semidirect { normal: n2, base: b2, act: a2 },
            ) => same_group(n1, n2) && same_group(b1, b2) && a1 == a2,
            (Repr::Direct { left: l1, right: r1 }, Repr::Direct { left: l2, right: r2 }) => {
                same_group(l1, l2) && same_group(r1, r2)
            }
            (Repr::Sub { parent: p1, elems: e1 }, Repr::Sub { parent: p2, elems: e2 }) => {
                same_group(p1, p2) && e1 == e2
            }
            _ => {
                self.order <= 4 * MATERIALIZE_LIMIT
                    && (0..self.order).all(|a| {
                        (0..self.order).all(|b| self.mul(a, b) == other.mul(a, b))
                    })
            }
        }
    }
}

impl Eq for FiniteGroup {}

/// Pointer equality with a structural fallback.
pub fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Validates a multiplication table and builds the group.
///
/// Checks run in order: shape, entry range, identity at index 0, Latin
/// square, associativity. Associativity uses Light's test against a
/// generating set, which decides the property exactly.
pub fn make_group(table: &[Vec<usize>]) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare { row, len: r.len(), expected: n });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= n {
                return Err(Error::EntryOutOfRange { row, col, value, order: n });
            }
        }
    }
    for a in 0..n {
        if table[0][a] != a || table[a][0] != a {
            return Err(Error::NoIdentityAtZero { element: a });
        }
    }
    let mut seen = vec![usize::MAX; n];
    for (i, r) in table.iter().enumerate() {
        for &v in r {
            if seen[v] == i {
                return Err(Error::NotLatinSquare { line: "row", index: i, value: v });
            }
            seen[v] = i;
        }
    }
    let mut seen = vec![usize::MAX; n];
    for j in 0..n {
        for r in table {
            let v = r[j];
            if seen[v] == j {
                return Err(Error::NotLatinSquare { line: "column", index: j, value: v });
            }
            seen[v] = j;
        }
    }
    let flat: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
    let group = FiniteGroup::from_flat_table(n, flat.into());
    // Light's test: the elements g with (ab)g = a(bg) for all a, b form a
    // submagma, so checking a generating set decides associativity.
    for &g in &group.generators {
        for a in 0..n {
            for b in 0..n {
                if group.mul(group.mul(a, b), g) != group.mul(a, group.mul(b, g)) {
                    return Err(Error::NotAssociative { a, b, c: g });
                }
            }
        }
    }
    Ok(group)
}

impl FiniteGroup {
    fn from_flat_table(order: usize, table: Arc<[u32]>) -> FiniteGroup {
        let mut inverses = vec![0; order];
        for (a, inv) in inverses.iter_mut().enumerate() {
            let row = &table[a * order..(a + 1) * order];
            *inv = row.iter().position(|&v| v == 0).expect("Latin row contains identity");
        }
        let mut g = FiniteGroup {
            order,
            repr: Repr::Table(table),
            inverses,
            generators: Vec::new(),
            names: None,
        };
        g.generators = g.compute_generators();
        g
    }

    fn from_repr(order: usize, repr: Repr, generators: Option<Vec<usize>>) -> FiniteGroup {
        let mut g = FiniteGroup {
            order,
            repr,
            inverses: Vec::new(),
            generators: Vec::new(),
            names: None,
        };
        g.inverses = (0..order).map(|a| g.structural_inverse(a)).collect();
        if order <= MATERIALIZE_LIMIT {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    table.push(g.mul(a, b) as u32);
                }
            }
            g.repr = Repr::Table(table.into());
            g.generators = g.compute_generators();
        } else {
            g.generators = match generators {
                Some(gens) => gens,
                None => g.compute_generators(),
            };
        }
        g
    }

    fn structural_inverse(&self, a: usize) -> usize {
        match &self.repr {
            Repr::Table(t) => {
                let row = &t[a * self.order..(a + 1) * self.order];
                row.iter().position(|&v| v == 0).unwrap()
            }
            Repr::Semidirect { normal, base, act } => {
                let nb = base.order;
                let (x, b) = (a / nb, a % nb);
                let binv = base.inv(b);
                let y = act[binv * normal.order + normal.inv(x)] as usize;
                y * nb + binv
            }
            Repr::Direct { left, right } => {
                let nr = right.order;
                left.inv(a / nr) * nr + right.inv(a % nr)
            }
            Repr::Sub { parent, elems } => {
                let p = parent.inv(elems[a]);
                elems.binary_search(&p).expect("subgroup closed under inverses")
            }
        }
    }

    /// The trivial group.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_flat_table(1, vec![0u32].into())
    }

    /// Builds the semidirect product `normal ⋊ base` for a left action
    /// `act[b * |normal| + x] = b·x`, with multiplication
    /// `(x, b)(x', b') = (x·(b·x'), bb')`. The caller guarantees that `act`
    /// is an action by automorphisms.
    pub(crate) fn semidirect_raw(
        normal: Arc<FiniteGroup>,
        base: Arc<FiniteGroup>,
        act: Arc<[u32]>,
    ) -> FiniteGroup {
        let order = normal.order * base.order;
        let nb = base.order;
        let mut gens: Vec<usize> = normal.generators.iter().map(|&x| x * nb).collect();
        gens.extend(base.generators.iter().copied());
        FiniteGroup::from_repr(order, Repr::Semidirect { normal, base, act }, Some(gens))
    }

    /// The subgroup on the sorted element list `elems` of `parent`.
    pub(crate) fn subgroup_raw(parent: Arc<FiniteGroup>, elems: Vec<usize>) -> FiniteGroup {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elems.first(), Some(&0));
        let order = elems.len();
        FiniteGroup::from_repr(order, Repr::Sub { parent, elems: elems.into() }, None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Table(t) => t[a * self.order + b] as usize,
            Repr::Semidirect { normal, base, act } => {
                let nb = base.order;
                let (x1, b1) = (a / nb, a % nb);
                let (x2, b2) = (b / nb, b % nb);
                let moved = act[b1 * normal.order + x2] as usize;
                normal.mul(x1, moved) * nb + base.mul(b1, b2)
            }
            Repr::Direct { left, right } => {
                let nr = right.order;
                left.mul(a / nr, b / nr) * nr + right.mul(a % nr, b % nr)
            }
            Repr::Sub { parent, elems } => {
                let p = parent.mul(elems[a], elems[b]);
                elems.binary_search(&p).expect("subgroup closed under multiplication")
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a b a⁻¹`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// A generating set, fixed at construction.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn with_names(mut self, names: Vec<String>) -> FiniteGroup {
        assert_eq!(names.len(), self.order);
        self.names = Some(names);
        self
    }

    /// The multiplication table as rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Elements of the subgroup generated by `gens`, as a membership mask.
    pub fn closure_mask(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if !mask[b] {
                    mask[b] = true;
                    queue.push_back(b);
                }
            }
        }
        mask
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mask = self.closure_mask(gens);
        (0..self.order).filter(|&a| mask[a]).collect()
    }

    fn compute_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut covered = 1;
        while covered < self.order {
            let pick = if self.order <= 64 {
                // Greedy: the element that enlarges the subgroup the most.
                let mut best = (0, usize::MAX);
                for a in 0..self.order {
                    if mask[a] {
                        continue;
                    }
                    let mut trial = gens.clone();
                    trial.push(a);
                    let size = self.closure_mask(&trial).iter().filter(|&&m| m).count();
                    if size > best.0 {
                        best = (size, a);
                    }
                }
                best.1
            } else {
                (0..self.order).find(|&a| !mask[a]).unwrap()
            };
            gens.push(pick);
            mask = self.closure_mask(&gens);
            covered = mask.iter().filter(|&&m| m).count();
        }
        gens
    }

    /// A copy with an explicit multiplication table.
    pub fn materialize(&self) -> FiniteGroup {
        let mut flat = Vec::with_capacity(self.order * self.order);
        for a in 0..self.order {
            for b in 0..self.order {
                flat.push(self.mul(a, b) as u32);
            }
        }
        let mut g = FiniteGroup::from_flat_table(self.order, flat.into());
        g.names = self.names.clone();
        g
    }

    /// Multiset of element orders, sorted.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }
}

/// A homomorphism between finite groups, stored as the image array.
///
/// `GroupHom::new` validates; `GroupHom::from_raw` does not and is used for
/// data that is verified afterwards (loaded documents, injected faults).
#[derive(Clone, Debug)]
pub struct GroupHom {
    dom: Arc<FiniteGroup>,
    cod: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && same_group(&self.dom, &other.dom) && same_group(&self.cod, &other.cod)
    }
}

impl Eq for GroupHom {}

impl GroupHom {
    pub fn new(dom: Arc<FiniteGroup>, cod: Arc<FiniteGroup>, map: Vec<usize>) -> Result<GroupHom> {
        let h = GroupHom::from_raw(dom, cod, map)?;
        if let Some(w) = h.hom_violation() {
            return Err(Error::NotAHomomorphism(w));
        }
        Ok(h)
    }

    /// Checks only lengths and ranges.
    pub fn from_raw(dom: Arc<FiniteGroup>, cod: Arc<FiniteGroup>, map: Vec<usize>) -> Result<GroupHom> {
        if map.len() != dom.order() {
            return Err(Error::NotAHomomorphism(format!(
                "map has length {}, domain has order {}",
                map.len(),
                dom.order()
            )));
        }
        if let Some((a, &v)) = map.iter().enumerate().find(|(_, &v)| v >= cod.order()) {
            return Err(Error::NotAHomomorphism(format!(
                "image {v} of element {a} is out of range for codomain of order {}",
                cod.order()
            )));
        }
        Ok(GroupHom { dom, cod, map })
    }

    pub(crate) fn from_parts_unchecked(dom: Arc<FiniteGroup>, cod: Arc<FiniteGroup>, map: Vec<usize>) -> GroupHom {
        debug_assert_eq!(map.len(), dom.order());
        GroupHom { dom, cod, map }
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom { dom: g.clone(), cod: g.clone(), map: g.elements().collect() }
    }

    pub fn zero(dom: &Arc<FiniteGroup>, cod: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom { dom: dom.clone(), cod: cod.clone(), map: vec![0; dom.order()] }
    }

    pub fn dom(&self) -> &Arc<FiniteGroup> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FiniteGroup> {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// A description of the first failure of the homomorphism law, if any.
    ///
    /// It suffices to test `f(ag) = f(a)f(g)` for generators `g`.
    pub fn hom_violation(&self) -> Option<String> {
        if self.map[0] != 0 {
            return Some(format!("identity maps to {}", self.map[0]));
        }
        for &g in self.dom.generators() {
            for a in self.dom.elements() {
                let lhs = self.map[self.dom.mul(a, g)];
                let rhs = self.cod.mul(self.map[a], self.map[g]);
                if lhs != rhs {
                    return Some(format!("f({a}*{g}) = {lhs} but f({a})*f({g}) = {rhs}"));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.hom_violation().is_none()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if !same_group(other.cod(), self.dom()) {
            return Err(Error::CodomainMismatch("composition of incompatible homomorphisms".into()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            map: other.map.iter().map(|&a| self.map[a]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.order() == self.cod.order() && self.is_injective()
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        Some(GroupHom { dom: self.cod.clone(), cod: self.dom.clone(), map: inv })
    }

    /// Sorted image elements.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Replaces the codomain by an equal group (used when two constructions
    /// produce the same group under different handles).
    pub fn with_cod(&self, cod: Arc<FiniteGroup>) -> GroupHom {
        debug_assert!(same_group(&self.cod, &cod));
        GroupHom { dom: self.dom.clone(), cod, map: self.map.clone() }
    }

    pub fn with_dom(&self, dom: Arc<FiniteGroup>) -> GroupHom {
        debug_assert!(same_group(&self.dom, &dom));
        GroupHom { dom, cod: self.cod.clone(), map: self.map.clone() }
    }
}

/// A subgroup together with its inclusion homomorphism.
#[derive(Clone, Debug)]
pub struct SubgroupWitness {
    pub parent: Arc<FiniteGroup>,
    pub elements: Vec<usize>,
    pub inclusion: GroupHom,
}

impl SubgroupWitness {
    /// Builds the witness for a subset that is already known to be a subgroup.
    pub fn from_elements(parent: &Arc<FiniteGroup>, elements: Vec<usize>) -> SubgroupWitness {
        let group = Arc::new(FiniteGroup::subgroup_raw(parent.clone(), elements.clone()));
        let inclusion = GroupHom::from_parts_unchecked(group, parent.clone(), elements.clone());
        SubgroupWitness { parent: parent.clone(), elements, inclusion }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.inclusion.dom()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// Position of a parent element inside the subgroup.
    pub fn index_of(&self, a: usize) -> Option<usize> {
        self.elements.binary_search(&a).ok()
    }

    pub fn is_normal(&self) -> bool {
        self.parent
            .generators()
            .iter()
            .all(|&g| self.elements.iter().all(|&s| self.contains(self.parent.conjugate(g, s))))
    }
}

/// `{a : f(a) = 0}` with its inclusion.
pub fn kernel(f: &GroupHom) -> SubgroupWitness {
    let elems: Vec<usize> = f.dom().elements().filter(|&a| f.apply(a) == 0).collect();
    SubgroupWitness::from_elements(f.dom(), elems)
}

/// The direct product `left × right`, pairs encoded as `a * |right| + b`.
pub fn direct_product(left: &Arc<FiniteGroup>, right: &Arc<FiniteGroup>) -> Arc<FiniteGroup> {
    let nr = right.order();
    let mut gens: Vec<usize> = left.generators().iter().map(|&a| a * nr).collect();
    gens.extend(right.generators().iter().copied());
    Arc::new(FiniteGroup::from_repr(
        left.order() * nr,
        Repr::Direct { left: left.clone(), right: right.clone() },
        Some(gens),
    ))
}

/// The canonical maps attached to a binary product.
pub struct ProductMaps {
    pub group: Arc<FiniteGroup>,
    pub inj_left: GroupHom,
    pub inj_right: GroupHom,
    pub proj_left: GroupHom,
    pub proj_right: GroupHom,
}

pub fn direct_product_maps(left: &Arc<FiniteGroup>, right: &Arc<FiniteGroup>) -> ProductMaps {
    let group = direct_product(left, right);
    let nr = right.order();
    ProductMaps {
        inj_left: GroupHom::from_parts_unchecked(left.clone(), group.clone(), left.elements().map(|a| a * nr).collect()),
        inj_right: GroupHom::from_parts_unchecked(right.clone(), group.clone(), right.elements().collect()),
        proj_left: GroupHom::from_parts_unchecked(group.clone(), left.clone(), group.elements().map(|p| p / nr).collect()),
        proj_right: GroupHom::from_parts_unchecked(group.clone(), right.clone(), group.elements().map(|p| p % nr).collect()),
        group,
    }
}

/// The pullback `{(a, b) : f(a) = g(b)}` of a cospan of homomorphisms with
/// its two projections. Elements are ordered lexicographically by pair.
pub fn pullback(f: &GroupHom, g: &GroupHom) -> Result<(Arc<FiniteGroup>, GroupHom, GroupHom)> {
    if !same_group(f.cod(), g.cod()) {
        return Err(Error::CodomainMismatch(format!(
            "pullback legs have codomains of order {} and {}",
            f.cod().order(),
            g.cod().order()
        )));
    }
    let product = direct_product(f.dom(), g.dom());
    let nb = g.dom().order();
    let mut fibers = vec![Vec::new(); g.cod().order()];
    for b in g.dom().elements() {
        fibers[g.apply(b)].push(b);
    }
    let mut elems = Vec::new();
    for a in f.dom().elements() {
        for &b in &fibers[f.apply(a)] {
            elems.push(a * nb + b);
        }
    }
    let p1: Vec<usize> = elems.iter().map(|&e| e / nb).collect();
    let p2: Vec<usize> = elems.iter().map(|&e| e % nb).collect();
    let group = Arc::new(FiniteGroup::subgroup_raw(product, elems));
    Ok((
        group.clone(),
        GroupHom::from_parts_unchecked(group.clone(), f.dom().clone(), p1),
        GroupHom::from_parts_unchecked(group, g.dom().clone(), p2),
    ))
}

/// Index of the pair `(a, b)` in a pullback built by [`pullback`].
pub fn pullback_index(p1: &GroupHom, p2: &GroupHom, a: usize, b: usize) -> Option<usize> {
    let nb = p2.cod().order();
    let key = a * nb + b;
    let n = p1.dom().order();
    // Elements are sorted by encoded pair.
    let (mut lo, mut hi) = (0, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        let k = p1.apply(mid) * nb + p2.apply(mid);
        match k.cmp(&key) {
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid,
            std::cmp::Ordering::Equal => return Some(mid),
        }
    }
    None
}

/// The semidirect product `X ⋊ B` of an action with its canonical maps.
#[derive(Clone, Debug)]
pub struct Semidirect {
    pub group: Arc<FiniteGroup>,
    /// `x ↦ (x, 1)`
    pub k: GroupHom,
    /// `b ↦ (0, b)`
    pub s: GroupHom,
    /// `(x, b) ↦ b`
    pub p: GroupHom,
}

/// `X ⋊ B` on pairs `(x, b)` with `(x, b)(x', b') = (x·(b·x'), bb')`.
pub fn semidirect_product(action: &GroupAction) -> Semidirect {
    let x = action.fiber().clone();
    let b = action.base().clone();
    let group = Arc::new(FiniteGroup::semidirect_raw(x.clone(), b.clone(), action.act_table().clone()));
    let nb = b.order();
    let k = GroupHom::from_parts_unchecked(x.clone(), group.clone(), x.elements().map(|e| e * nb).collect());
    let s = GroupHom::from_parts_unchecked(b.clone(), group.clone(), b.elements().collect());
    let p = GroupHom::from_parts_unchecked(group.clone(), b.clone(), group.elements().map(|e| e % nb).collect());
    Semidirect { group, k, s, p }
}

#[cfg(test)]
mod tests {
    use super::catalog::{cyclic, symmetric3};
    use super::*;

    fn z2() -> Arc<FiniteGroup> {
        Arc::new(cyclic(2))
    }

    #[test]
    fn trivial_table() {
        let g = make_group(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn z2_table() {
        let g = make_group(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn repeated_row_entry_is_not_latin() {
        let err = make_group(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NotLatinSquare { line: "row", index: 1, value: 1 });
    }

    #[test]
    fn identity_must_sit_at_zero() {
        let err = make_group(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NoIdentityAtZero { element: 0 }));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // The smallest loop that is not a group has order 5.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(make_group(&t), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn shape_and_range_errors() {
        assert!(matches!(make_group(&[vec![0, 1], vec![1]]), Err(Error::NotSquare { row: 1, .. })));
        assert!(matches!(make_group(&[vec![0, 2], vec![1, 0]]), Err(Error::EntryOutOfRange { .. })));
        assert_eq!(make_group(&[]).unwrap_err(), Error::EmptyTable);
    }

    #[test]
    fn kernel_examples() {
        let g = z2();
        assert_eq!(kernel(&GroupHom::identity(&g)).elements, vec![0]);
        assert_eq!(kernel(&GroupHom::zero(&g, &g)).elements, vec![0, 1]);
        // Second-coordinate projection Z2⊕Z2 → Z2: fiber over 0 enumerated by hand.
        let pm = direct_product_maps(&g, &g);
        let ker = kernel(&pm.proj_right);
        let fiber: Vec<usize> = (0..4).filter(|&e| e % 2 == 0).collect();
        assert_eq!(ker.elements, fiber);
        assert_eq!(ker.order(), 2);
        assert!(ker.is_normal());
    }

    #[test]
    fn pullback_examples() {
        let g = z2();
        let id = GroupHom::identity(&g);
        let (p, p1, p2) = pullback(&id, &id).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(p1.map(), p2.map());
        let one = Arc::new(FiniteGroup::trivial());
        let s3 = Arc::new(symmetric3());
        let (full, _, _) = pullback(&GroupHom::zero(&g, &one), &GroupHom::zero(&s3, &one)).unwrap();
        assert_eq!(full.order(), 12);
        let err = pullback(&id, &GroupHom::zero(&s3, &one)).unwrap_err();
        assert!(matches!(err, Error::CodomainMismatch(_)));
        assert_eq!(pullback_index(&p1, &p2, 1, 1), Some(1));
        assert_eq!(pullback_index(&p1, &p2, 1, 0), None);
    }

    #[test]
    fn semidirect_with_inversion_is_nonabelian() {
        let z3 = Arc::new(cyclic(3));
        let z2 = z2();
        let act = GroupAction::new(z2, z3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let sd = semidirect_product(&act);
        assert_eq!(sd.group.order(), 6);
        assert!(!sd.group.is_abelian());
        assert!(sd.k.is_homomorphism() && sd.s.is_homomorphism() && sd.p.is_homomorphism());
        assert_eq!(kernel(&sd.p).elements, sd.k.image());
    }

    #[test]
    fn structural_and_table_multiplication_agree() {
        let s3 = Arc::new(symmetric3());
        let z2 = z2();
        let d = direct_product(&s3, &z2);
        let t = d.materialize();
        assert_eq!(*d, t);
        for a in d.elements() {
            assert_eq!(d.mul(a, d.inv(a)), 0);
        }
    }
}
