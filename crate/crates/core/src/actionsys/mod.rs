//! Action-systems over finite groups, abelian groups and pointed sets.
//!
//! Actions are left actions: `act[b][x] = b·x` with `(bb')·x = b·(b'·x)`.
//! In the pair instances an object is `(X, B)` with `J` and `I` the first
//! and second projections and `G` the diagonal.

pub mod whitehead;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{
    automorphism_group, catalog, enumerate_homs, find_isomorphism_bounded, same_group, semidirect_product, FiniteGroup,
    GroupHom,
};
use crate::pointedcat::{
    self, all_pointed_maps, is_exact_patch, patch_retraction, Cospan, Instance, PatchWitness, Point, PointedMap,
    PointedObject, SplitExtension,
};

pub use whitehead::{
    enumerate_crossed_modules, l_condition_instance, whitehead_from_h, whitehead_to_xmod, xmod_check, xmod_to_whitehead,
    CrossedModule, LConditionConfig, WhiteheadSequence, XmodViolation,
};

/// An action of `base` on `fiber` by automorphisms.
#[derive(Clone, Debug)]
pub struct GroupAction {
    base: Arc<FiniteGroup>,
    fiber: Arc<FiniteGroup>,
    /// Row-major `|base| × |fiber|`.
    act: Arc<[u32]>,
}

impl PartialEq for GroupAction {
    fn eq(&self, other: &Self) -> bool {
        self.act == other.act && same_group(&self.base, &other.base) && same_group(&self.fiber, &other.fiber)
    }
}

impl Eq for GroupAction {}

impl GroupAction {
    pub fn new(base: Arc<FiniteGroup>, fiber: Arc<FiniteGroup>, rows: Vec<Vec<usize>>) -> Result<GroupAction> {
        if rows.len() != base.order() || rows.iter().any(|r| r.len() != fiber.order()) {
            return Err(Error::InvalidAction(format!(
                "action table must be {} × {}",
                base.order(),
                fiber.order()
            )));
        }
        if rows.iter().flatten().any(|&v| v >= fiber.order()) {
            return Err(Error::InvalidAction("action entry out of range".into()));
        }
        let act: Vec<u32> = rows.into_iter().flatten().map(|v| v as u32).collect();
        GroupAction::from_flat(base, fiber, act)
    }

    pub fn from_flat(base: Arc<FiniteGroup>, fiber: Arc<FiniteGroup>, act: Vec<u32>) -> Result<GroupAction> {
        let a = GroupAction { base, fiber, act: act.into() };
        if let Some(w) = a.violation() {
            return Err(Error::InvalidAction(w));
        }
        Ok(a)
    }

    pub(crate) fn from_flat_unchecked(base: Arc<FiniteGroup>, fiber: Arc<FiniteGroup>, act: Arc<[u32]>) -> GroupAction {
        debug_assert_eq!(act.len(), base.order() * fiber.order());
        GroupAction { base, fiber, act }
    }

    pub fn trivial(base: Arc<FiniteGroup>, fiber: Arc<FiniteGroup>) -> GroupAction {
        let n = fiber.order();
        let act: Vec<u32> = (0..base.order()).flat_map(|_| 0..n as u32).collect();
        GroupAction { base, fiber, act: act.into() }
    }

    /// `b·x = bxb⁻¹` on `g` itself.
    pub fn conjugation(g: &Arc<FiniteGroup>) -> GroupAction {
        let act: Vec<u32> = g.elements().flat_map(|b| g.elements().map(move |x| (b, x))).map(|(b, x)| g.conjugate(b, x) as u32).collect();
        GroupAction { base: g.clone(), fiber: g.clone(), act: act.into() }
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn fiber(&self) -> &Arc<FiniteGroup> {
        &self.fiber
    }

    #[inline]
    pub fn act(&self, b: usize, x: usize) -> usize {
        self.act[b * self.fiber.order() + x] as usize
    }

    pub fn act_table(&self) -> &Arc<[u32]> {
        &self.act
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.fiber.order();
        self.act.chunks(n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        let n = self.fiber.order();
        self.act.chunks(n).all(|r| r.iter().enumerate().all(|(x, &v)| v as usize == x))
    }

    /// The first failing action axiom, if any.
    pub fn violation(&self) -> Option<String> {
        let (nb, nx) = (self.base.order(), self.fiber.order());
        if self.act.len() != nb * nx {
            return Some("action table has the wrong size".into());
        }
        if let Some((i, _)) = self.act.iter().enumerate().find(|(_, &v)| v as usize >= nx) {
            return Some(format!("entry ({}, {}) out of range", i / nx, i % nx));
        }
        if let Some(x) = (0..nx).find(|&x| self.act(0, x) != x) {
            return Some(format!("identity moves {x}"));
        }
        let x = &self.fiber;
        for b in 0..nb {
            let mut seen = vec![false; nx];
            for y in 0..nx {
                if std::mem::replace(&mut seen[self.act(b, y)], true) {
                    return Some(format!("b = {b} does not act bijectively"));
                }
            }
            for &g in x.generators() {
                for y in 0..nx {
                    if self.act(b, x.mul(y, g)) != x.mul(self.act(b, y), self.act(b, g)) {
                        return Some(format!("b = {b} does not respect {y}*{g}"));
                    }
                }
            }
        }
        for &g in self.base.generators() {
            for b in 0..nb {
                let bg = self.base.mul(b, g);
                for y in 0..nx {
                    if self.act(bg, y) != self.act(b, self.act(g, y)) {
                        return Some(format!("({b}*{g})·{y} differs from {b}·({g}·{y})"));
                    }
                }
            }
        }
        None
    }
}

/// Every action of `base` on `fiber`, sorted by action table.
pub fn enumerate_actions(base: &Arc<FiniteGroup>, fiber: &Arc<FiniteGroup>) -> Vec<GroupAction> {
    let aut = automorphism_group(fiber);
    let mut out: Vec<GroupAction> = enumerate_homs(base, &aut.group)
        .into_iter()
        .map(|phi| {
            let act: Vec<u32> = phi.map().iter().flat_map(|&a| aut.maps[a].iter().map(|&v| v as u32)).collect();
            GroupAction::from_flat_unchecked(base.clone(), fiber.clone(), act.into())
        })
        .collect();
    out.sort_by(|a, b| a.act.cmp(&b.act));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionInstance {
    GrpAct,
    AbPairs,
    PSetPairs,
}

impl ActionInstance {
    pub fn base_instance(self) -> Instance {
        match self {
            ActionInstance::GrpAct => Instance::Grp,
            ActionInstance::AbPairs => Instance::Ab,
            ActionInstance::PSetPairs => Instance::PSet,
        }
    }
}

/// An object of the action category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionObject {
    GrpAct(GroupAction),
    AbPairs { x: Arc<FiniteGroup>, b: Arc<FiniteGroup> },
    PSetPairs { x: usize, b: usize },
}

impl ActionObject {
    pub fn ab_pair(x: Arc<FiniteGroup>, b: Arc<FiniteGroup>) -> Result<ActionObject> {
        if !x.is_abelian() || !b.is_abelian() {
            return Err(Error::InstanceMismatch("abelian pair with a non-abelian component".into()));
        }
        Ok(ActionObject::AbPairs { x, b })
    }

    pub fn pset_pair(x: usize, b: usize) -> Result<ActionObject> {
        if x == 0 || b == 0 {
            return Err(Error::InstanceMismatch("pointed sets must be nonempty".into()));
        }
        Ok(ActionObject::PSetPairs { x, b })
    }

    /// Builds an object from its two components.
    pub fn from_components(j: &PointedObject, i: &PointedObject) -> Result<ActionObject> {
        match (j, i) {
            (PointedObject::Ab(x), PointedObject::Ab(b)) => Ok(ActionObject::AbPairs { x: x.clone(), b: b.clone() }),
            (PointedObject::PSet(x), PointedObject::PSet(b)) => Ok(ActionObject::PSetPairs { x: *x, b: *b }),
            _ => Err(Error::InstanceMismatch("group actions need action data, not just components".into())),
        }
    }

    pub fn instance(&self) -> ActionInstance {
        match self {
            ActionObject::GrpAct(_) => ActionInstance::GrpAct,
            ActionObject::AbPairs { .. } => ActionInstance::AbPairs,
            ActionObject::PSetPairs { .. } => ActionInstance::PSetPairs,
        }
    }

    pub fn action(&self) -> Option<&GroupAction> {
        match self {
            ActionObject::GrpAct(a) => Some(a),
            _ => None,
        }
    }
}

/// `I(A)`.
pub fn functor_i(a: &ActionObject) -> PointedObject {
    match a {
        ActionObject::GrpAct(act) => PointedObject::Grp(act.base.clone()),
        ActionObject::AbPairs { b, .. } => PointedObject::Ab(b.clone()),
        ActionObject::PSetPairs { b, .. } => PointedObject::PSet(*b),
    }
}

/// `J(A)`.
pub fn functor_j(a: &ActionObject) -> PointedObject {
    match a {
        ActionObject::GrpAct(act) => PointedObject::Grp(act.fiber.clone()),
        ActionObject::AbPairs { x, .. } => PointedObject::Ab(x.clone()),
        ActionObject::PSetPairs { x, .. } => PointedObject::PSet(*x),
    }
}

/// `G(B)`: conjugation for groups, the diagonal pair otherwise.
pub fn functor_g(b: &PointedObject) -> ActionObject {
    match b {
        PointedObject::Grp(g) => ActionObject::GrpAct(GroupAction::conjugation(g)),
        PointedObject::Ab(g) => ActionObject::AbPairs { x: g.clone(), b: g.clone() },
        PointedObject::PSet(n) => ActionObject::PSetPairs { x: *n, b: *n },
    }
}

/// `G(f) = (f, f)`.
pub fn functor_g_map(f: &PointedMap) -> ActionMorphism {
    ActionMorphism {
        dom: functor_g(f.dom()),
        cod: functor_g(f.cod()),
        j_map: f.map().to_vec(),
        i_map: f.map().to_vec(),
    }
}

/// The split extension `JA → FA ⇄ IA` attached to an object.
#[derive(Clone, Debug)]
pub struct Realization {
    /// `F(A)`.
    pub fa: PointedObject,
    /// `J(η_A)`.
    pub k: PointedMap,
    /// `I(η_A)`, also written `ι_A`.
    pub s: PointedMap,
    /// `ε_{IA} F(π_A)`.
    pub p: PointedMap,
}

/// `F(A)` with its canonical maps: the semidirect product for group actions,
/// the biproduct for abelian pairs, the wedge for pointed-set pairs.
pub fn realize(a: &ActionObject) -> Realization {
    match a {
        ActionObject::GrpAct(act) => {
            let sd = semidirect_product(act);
            Realization {
                fa: PointedObject::Grp(sd.group.clone()),
                k: PointedMap::from_hom(Instance::Grp, &sd.k),
                s: PointedMap::from_hom(Instance::Grp, &sd.s),
                p: PointedMap::from_hom(Instance::Grp, &sd.p),
            }
        }
        _ => {
            let w = pointedcat::coproduct_patch(&functor_j(a), &functor_i(a)).expect("pair instances have coproducts");
            Realization { fa: w.cospan.y, k: w.cospan.k, s: w.cospan.s, p: w.p }
        }
    }
}

/// `F(A)`.
pub fn functor_f(a: &ActionObject) -> PointedObject {
    realize(a).fa
}

/// `F(f)`: `(x, b) ↦ (f₁x, f₂b)`, or the induced wedge map.
pub fn functor_f_map(f: &ActionMorphism) -> PointedMap {
    functor_f_map_with(f, &realize(&f.dom), &realize(&f.cod))
}

/// `F(f)` against precomputed realizations of its domain and codomain.
pub fn functor_f_map_with(f: &ActionMorphism, rd: &Realization, rc: &Realization) -> PointedMap {
    let map = match f.dom.instance() {
        ActionInstance::PSetPairs => {
            let nx = functor_j(&f.dom).size();
            (0..rd.fa.size())
                .map(|w| if w < nx { rc.k.apply(f.j_map[w]) } else { rc.s.apply(f.i_map[w + 1 - nx]) })
                .collect()
        }
        _ => {
            let nb = functor_i(&f.dom).size();
            let nb2 = functor_i(&f.cod).size();
            (0..rd.fa.size()).map(|w| f.j_map[w / nb] * nb2 + f.i_map[w % nb]).collect()
        }
    };
    PointedMap::new_unchecked(rd.fa.clone(), rc.fa.clone(), map)
}

/// The unit `η_A: A → GF(A)`.
pub fn eta(a: &ActionObject) -> ActionMorphism {
    eta_with(a, &realize(a))
}

pub fn eta_with(a: &ActionObject, r: &Realization) -> ActionMorphism {
    ActionMorphism { dom: a.clone(), cod: functor_g(&r.fa), j_map: r.k.map().to_vec(), i_map: r.s.map().to_vec() }
}

/// `π_A = (0, 1): A → GI(A)`.
pub fn pi(a: &ActionObject) -> ActionMorphism {
    let ia = functor_i(a);
    ActionMorphism { dom: a.clone(), cod: functor_g(&ia), j_map: vec![0; functor_j(a).size()], i_map: (0..ia.size()).collect() }
}

/// `ε_Y F(g)` for `g: A → G(Y)`: the unique `ḡ: FA → Y` with `G(ḡ)η_A = g`.
pub fn transpose(g: &ActionMorphism) -> Result<PointedMap> {
    transpose_with(g, &realize(&g.dom))
}

pub fn transpose_with(g: &ActionMorphism, r: &Realization) -> Result<PointedMap> {
    let y = functor_i(&g.cod);
    if g.cod != functor_g(&y) {
        return Err(Error::CodomainMismatch("transpose needs a morphism into a G-image".into()));
    }
    let map: Vec<usize> = match (&g.dom, y.group()) {
        (ActionObject::PSetPairs { x, .. }, _) => {
            (0..r.fa.size()).map(|w| if w < *x { g.j_map[w] } else { g.i_map[w + 1 - *x] }).collect()
        }
        (_, Some(yg)) => {
            let nb = functor_i(&g.dom).size();
            (0..r.fa.size()).map(|w| yg.mul(g.j_map[w / nb], g.i_map[w % nb])).collect()
        }
        _ => unreachable!("group instances have group codomains"),
    };
    Ok(PointedMap::new_unchecked(r.fa.clone(), y, map))
}

/// `π` viewed as the retraction `FA → IA`.
pub fn pi_point(a: &ActionObject) -> PointedMap {
    realize(a).p
}

/// The split extension `J(η_A): JA → FA ⇄ IA`.
pub fn realize_point(a: &ActionObject) -> Result<SplitExtension> {
    let r = realize(a);
    let point = Point::new(r.p, r.s)?;
    SplitExtension::new(point, r.k)
}

/// A morphism `(f₁, f₂): A → A'` with `f₁ = J(f)` and `f₂ = I(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMorphism {
    dom: ActionObject,
    cod: ActionObject,
    j_map: Vec<usize>,
    i_map: Vec<usize>,
}

impl ActionMorphism {
    pub fn new(dom: ActionObject, cod: ActionObject, j_map: Vec<usize>, i_map: Vec<usize>) -> Result<ActionMorphism> {
        let m = ActionMorphism { dom, cod, j_map, i_map };
        if let Some(w) = m.violation() {
            return Err(Error::InvalidMorphism(w));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(dom: ActionObject, cod: ActionObject, j_map: Vec<usize>, i_map: Vec<usize>) -> ActionMorphism {
        ActionMorphism { dom, cod, j_map, i_map }
    }

    pub fn identity(a: &ActionObject) -> ActionMorphism {
        ActionMorphism {
            dom: a.clone(),
            cod: a.clone(),
            j_map: (0..functor_j(a).size()).collect(),
            i_map: (0..functor_i(a).size()).collect(),
        }
    }

    pub fn dom(&self) -> &ActionObject {
        &self.dom
    }

    pub fn cod(&self) -> &ActionObject {
        &self.cod
    }

    pub fn j_map(&self) -> &[usize] {
        &self.j_map
    }

    pub fn i_map(&self) -> &[usize] {
        &self.i_map
    }

    /// `J(f)`.
    pub fn j_component(&self) -> PointedMap {
        PointedMap::new_unchecked(functor_j(&self.dom), functor_j(&self.cod), self.j_map.clone())
    }

    /// `I(f)`.
    pub fn i_component(&self) -> PointedMap {
        PointedMap::new_unchecked(functor_i(&self.dom), functor_i(&self.cod), self.i_map.clone())
    }

    /// The first failing morphism axiom, if any.
    pub fn violation(&self) -> Option<String> {
        if self.dom.instance() != self.cod.instance() {
            return Some("objects of different instances".into());
        }
        let (jd, jc, id, ic) = (functor_j(&self.dom), functor_j(&self.cod), functor_i(&self.dom), functor_i(&self.cod));
        for (name, m, d, c) in [("J", &self.j_map, &jd, &jc), ("I", &self.i_map, &id, &ic)] {
            if m.len() != d.size() || m.iter().any(|&v| v >= c.size()) {
                return Some(format!("{name}-component does not fit"));
            }
            if m[0] != 0 {
                return Some(format!("{name}-component moves the basepoint"));
            }
            if let (Some(dg), Some(cg)) = (d.group(), c.group()) {
                let h = GroupHom::from_parts_unchecked(dg.clone(), cg.clone(), m.clone());
                if let Some(w) = h.hom_violation() {
                    return Some(format!("{name}-component is not a homomorphism: {w}"));
                }
            }
        }
        if let (ActionObject::GrpAct(a), ActionObject::GrpAct(a2)) = (&self.dom, &self.cod) {
            // Both sides are homomorphic in x and multiplicative in b, so
            // generators suffice.
            for &b in a.base.generators() {
                for &x in a.fiber.generators() {
                    let lhs = self.j_map[a.act(b, x)];
                    let rhs = a2.act(self.i_map[b], self.j_map[x]);
                    if lhs != rhs {
                        return Some(format!("equivariance fails at b = {b}, x = {x}: {lhs} != {rhs}"));
                    }
                }
            }
        }
        None
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ActionMorphism) -> Result<ActionMorphism> {
        if other.cod != self.dom {
            return Err(Error::CodomainMismatch("composition of incompatible action morphisms".into()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &ActionMorphism) -> ActionMorphism {
        ActionMorphism {
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            j_map: other.j_map.iter().map(|&a| self.j_map[a]).collect(),
            i_map: other.i_map.iter().map(|&a| self.i_map[a]).collect(),
        }
    }

    /// Componentwise equality of maps, ignoring object identity.
    pub fn same_maps(&self, other: &ActionMorphism) -> bool {
        self.j_map == other.j_map && self.i_map == other.i_map
    }

    /// Both components bijective; the inverse pair is then a morphism too.
    pub fn is_iso(&self) -> bool {
        self.j_component().is_injective()
            && self.i_component().is_injective()
            && self.j_map.len() == functor_j(&self.cod).size()
            && self.i_map.len() == functor_i(&self.cod).size()
    }

    /// The inverse of an isomorphism.
    pub fn inverse(&self) -> Option<ActionMorphism> {
        if !self.is_iso() {
            return None;
        }
        let invert = |m: &[usize]| {
            let mut v = vec![0; m.len()];
            for (a, &b) in m.iter().enumerate() {
                v[b] = a;
            }
            v
        };
        Some(ActionMorphism {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            j_map: invert(&self.j_map),
            i_map: invert(&self.i_map),
        })
    }
}

/// Every morphism `dom → cod`, sorted by `(J, I)` maps.
pub fn enumerate_morphisms(dom: &ActionObject, cod: &ActionObject) -> Vec<ActionMorphism> {
    enumerate_morphisms_where(dom, cod, |_| true, |_| true)
}

/// Morphisms whose components pass the given filters.
pub fn enumerate_morphisms_where(
    dom: &ActionObject,
    cod: &ActionObject,
    keep_j: impl Fn(&[usize]) -> bool,
    keep_i: impl Fn(&[usize]) -> bool,
) -> Vec<ActionMorphism> {
    let js: Vec<PointedMap> = all_pointed_maps(&functor_j(dom), &functor_j(cod)).into_iter().filter(|m| keep_j(m.map())).collect();
    let is: Vec<PointedMap> = all_pointed_maps(&functor_i(dom), &functor_i(cod)).into_iter().filter(|m| keep_i(m.map())).collect();
    let mut out = Vec::new();
    for j in &js {
        for i in &is {
            let m = ActionMorphism::new_unchecked(dom.clone(), cod.clone(), j.map().to_vec(), i.map().to_vec());
            if m.violation().is_none() {
                out.push(m);
            }
        }
    }
    out
}

/// Test objects with both components of size at most `bound`.
pub fn test_action_objects(instance: ActionInstance, bound: usize) -> Vec<ActionObject> {
    match instance {
        ActionInstance::GrpAct => {
            let gs = catalog::groups_up_to(bound);
            let mut out = Vec::new();
            for (_, b) in &gs {
                for (_, x) in &gs {
                    out.extend(enumerate_actions(b, x).into_iter().map(ActionObject::GrpAct));
                }
            }
            out
        }
        ActionInstance::AbPairs => {
            let gs = catalog::abelian_groups_up_to(bound);
            gs.iter()
                .flat_map(|(_, x)| gs.iter().map(move |(_, b)| ActionObject::AbPairs { x: x.clone(), b: b.clone() }))
                .collect()
        }
        ActionInstance::PSetPairs => {
            (1..=bound).flat_map(|x| (1..=bound).map(move |b| ActionObject::PSetPairs { x, b })).collect()
        }
    }
}

/// Cartesian lifting of `g: B' → IA` along `A`: the object `E` with
/// `JE = JA`, `IE = B'` (action pulled back along `g`) and `α = (1, g)`.
pub fn cartesian_lifting(g: &PointedMap, a: &ActionObject) -> Result<(ActionObject, ActionMorphism)> {
    if g.cod() != &functor_i(a) {
        return Err(Error::CodomainMismatch("lifted map must land in I(A)".into()));
    }
    let e = match (a, g.dom()) {
        (ActionObject::GrpAct(act), PointedObject::Grp(b2)) => {
            let nx = act.fiber.order();
            let table: Vec<u32> = (0..b2.order())
                .flat_map(|b| {
                    let row = g.apply(b) * nx;
                    act.act[row..row + nx].iter().copied()
                })
                .collect();
            ActionObject::GrpAct(GroupAction::from_flat_unchecked(b2.clone(), act.fiber.clone(), table.into()))
        }
        (ActionObject::AbPairs { x, .. }, PointedObject::Ab(b2)) => ActionObject::AbPairs { x: x.clone(), b: b2.clone() },
        (ActionObject::PSetPairs { x, .. }, PointedObject::PSet(b2)) => ActionObject::PSetPairs { x: *x, b: *b2 },
        _ => return Err(Error::InstanceMismatch("lifted map is in the wrong instance".into())),
    };
    let alpha = ActionMorphism {
        dom: e.clone(),
        cod: a.clone(),
        j_map: (0..functor_j(a).size()).collect(),
        i_map: g.map().to_vec(),
    };
    Ok((e, alpha))
}

/// Closed-form test: `J(α)` bijective and, for group actions, the domain
/// action is the one pulled back along `I(α)`.
pub fn is_cartesian(alpha: &ActionMorphism) -> bool {
    let j = alpha.j_component();
    if !(j.is_injective() && j.dom().size() == j.cod().size()) {
        return false;
    }
    match (&alpha.dom, &alpha.cod) {
        (ActionObject::GrpAct(e), ActionObject::GrpAct(a)) => {
            let mut jinv = vec![0; j.dom().size()];
            for (x, &y) in alpha.j_map.iter().enumerate() {
                jinv[y] = x;
            }
            (0..e.base.order())
                .all(|b| (0..e.fiber.order()).all(|x| e.act(b, x) == jinv[a.act(alpha.i_map[b], alpha.j_map[x])]))
        }
        _ => true,
    }
}

/// Largest component size accepted by [`is_cartesian_exhaustive`].
pub const MAX_LIFTING_BOUND: usize = 6;

/// The lifting property itself: for every `g: W → A` with `|IW|, |JW| ≤
/// bound` and every `h: IW → IE` with `I(α)h = I(g)` there is exactly one
/// `u: W → E` with `αu = g` and `I(u) = h`.
pub fn is_cartesian_exhaustive(alpha: &ActionMorphism, bound: usize) -> Result<bool> {
    Ok(cartesian_counterexample(alpha, bound)?.is_none())
}

/// A description of the first failure of the lifting property.
pub fn cartesian_counterexample(alpha: &ActionMorphism, bound: usize) -> Result<Option<String>> {
    if bound > MAX_LIFTING_BOUND {
        return Err(Error::BoundExceeded(format!("lifting search bound {bound} exceeds {MAX_LIFTING_BOUND}")));
    }
    let (e, a) = (&alpha.dom, &alpha.cod);
    let (ie, je) = (functor_i(e), functor_j(e));
    for w in test_action_objects(e.instance(), bound) {
        let (iw, jw) = (functor_i(&w), functor_j(&w));
        let hs = all_pointed_maps(&iw, &ie);
        let us_j = all_pointed_maps(&jw, &je);
        for g in enumerate_morphisms(&w, a) {
            for h in &hs {
                if h.map().iter().map(|&v| alpha.i_map[v]).ne(g.i_map.iter().copied()) {
                    continue;
                }
                let count = us_j
                    .iter()
                    .filter(|u1| u1.map().iter().map(|&v| alpha.j_map[v]).eq(g.j_map.iter().copied()))
                    .filter(|u1| {
                        ActionMorphism::new_unchecked(w.clone(), e.clone(), u1.map().to_vec(), h.map().to_vec())
                            .violation()
                            .is_none()
                    })
                    .count();
                if count != 1 {
                    return Ok(Some(format!(
                        "W = {:?}/{:?}: {count} factorizations for g = {:?}, h = {:?}",
                        jw.size(),
                        iw.size(),
                        g.j_map,
                        h.map()
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// The factorization `u = (J(α)⁻¹J(g), h)` of `g` through a cartesian `α`.
pub fn cartesian_factor(alpha: &ActionMorphism, g: &ActionMorphism, h: &PointedMap) -> Result<ActionMorphism> {
    if g.cod != alpha.cod {
        return Err(Error::CodomainMismatch("g and α must share a codomain".into()));
    }
    if h.map().iter().map(|&v| alpha.i_map[v]).ne(g.i_map.iter().copied()) {
        return Err(Error::PreconditionFailed("I(α)h differs from I(g)".into()));
    }
    let n = functor_j(&alpha.dom).size();
    let mut jinv = vec![usize::MAX; functor_j(&alpha.cod).size()];
    for x in 0..n {
        jinv[alpha.j_map[x]] = x;
    }
    if jinv.iter().any(|&v| v == usize::MAX) || alpha.j_map.len() != jinv.len() {
        return Err(Error::FactorizationFailure("J(α) is not invertible".into()));
    }
    let u = ActionMorphism::new_unchecked(
        g.dom.clone(),
        alpha.dom.clone(),
        g.j_map.iter().map(|&v| jinv[v]).collect(),
        h.map().to_vec(),
    );
    if let Some(w) = u.violation() {
        return Err(Error::FactorizationFailure(w));
    }
    Ok(u)
}

/// Identifications `JE ≅ IE` tried by [`is_organic`]: the identity when the
/// components coincide, otherwise every isomorphism.
fn component_isomorphisms(e: &ActionObject) -> Vec<Vec<usize>> {
    let (je, ie) = (functor_j(e), functor_i(e));
    if je == ie {
        return vec![(0..je.size()).collect()];
    }
    match (je.group(), ie.group()) {
        (Some(jg), Some(ig)) => match find_isomorphism_bounded(jg, ig, usize::MAX) {
            Ok(Some(iso)) => automorphism_group(ig)
                .maps
                .iter()
                .map(|aut| iso.map().iter().map(|&v| aut[v]).collect())
                .collect(),
            _ => Vec::new(),
        },
        _ if je.size() == ie.size() => {
            // Pointed sets: any basepoint-preserving bijection; exactness of
            // the patch does not depend on which one is used.
            vec![(0..je.size()).collect()]
        }
        _ => Vec::new(),
    }
}

/// `JE ≅ IE` and `(J(f), I(f))` is an exact patch under some identification.
pub fn is_organic(f: &ActionMorphism) -> bool {
    let ie = functor_i(&f.cod);
    component_isomorphisms(&f.cod).into_iter().any(|theta| {
        let k = PointedMap::new_unchecked(functor_j(&f.dom), ie.clone(), f.j_map.iter().map(|&v| theta[v]).collect());
        let s = f.i_component();
        let Ok(c) = Cospan::new(k, s) else { return false };
        match patch_retraction(&c) {
            Some(p) => is_exact_patch(&PatchWitness { cospan: c, p }),
            None => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::catalog::{cyclic, symmetric3};

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(cyclic(n))
    }

    fn inversion() -> GroupAction {
        GroupAction::new(z(2), z(3), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn action_validation_rejects_non_automorphisms() {
        assert!(GroupAction::new(z(2), z(3), vec![vec![0, 1, 2], vec![0, 0, 1]]).is_err());
        assert!(GroupAction::new(z(2), z(3), vec![vec![0, 2, 1], vec![0, 2, 1]]).is_err());
        // Z3 cannot act on Z3 nontrivially; an order-2 automorphism fails functoriality.
        assert!(GroupAction::new(z(3), z(3), vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]]).is_err());
    }

    #[test]
    fn functor_components() {
        let a = ActionObject::GrpAct(inversion());
        assert_eq!(functor_i(&a).size(), 2);
        assert_eq!(functor_j(&a).size(), 3);
        let ab = ActionObject::ab_pair(z(3), z(4)).unwrap();
        assert_eq!(functor_i(&ab), PointedObject::Ab(z(4)));
        let ps = ActionObject::pset_pair(3, 2).unwrap();
        assert_eq!(functor_j(&ps), PointedObject::PSet(3));
    }

    #[test]
    fn g_of_abelian_group_is_trivial_action() {
        let ActionObject::GrpAct(a) = functor_g(&PointedObject::Grp(z(2))) else { panic!() };
        assert!(a.is_trivial());
    }

    #[test]
    fn g_of_s3_is_inner() {
        let s3 = Arc::new(symmetric3());
        let ActionObject::GrpAct(a) = functor_g(&PointedObject::Grp(s3.clone())) else { panic!() };
        for b in s3.elements() {
            for x in s3.elements() {
                assert_eq!(a.act(b, x), s3.mul(s3.mul(b, x), s3.inv(b)));
            }
        }
        assert!(a.violation().is_none());
        assert!(!a.is_trivial());
    }

    #[test]
    fn f_values() {
        let f = functor_f(&ActionObject::GrpAct(inversion()));
        assert_eq!(f.size(), 6);
        assert!(!f.group().unwrap().is_abelian());
        let ab = functor_f(&ActionObject::ab_pair(z(2), z(3)).unwrap());
        assert_eq!(ab.size(), 6);
        let x = z(4);
        let triv = functor_f(&ActionObject::GrpAct(GroupAction::trivial(z(1), x)));
        assert_eq!(triv.size(), 4);
    }

    #[test]
    fn eta_is_organic_and_pi_is_not() {
        let a = ActionObject::GrpAct(inversion());
        assert!(is_organic(&eta(&a)));
        assert!(!is_organic(&pi(&a)));
        let ab = ActionObject::ab_pair(z(2), z(2)).unwrap();
        assert!(is_organic(&eta(&ab)));
        let one = ActionObject::GrpAct(GroupAction::trivial(z(1), z(1)));
        let e = eta(&one);
        assert!(e.violation().is_none() && is_organic(&e));
    }

    #[test]
    fn realized_points() {
        let se = realize_point(&ActionObject::GrpAct(inversion())).unwrap();
        assert_eq!(se.point.y.size(), 6);
        let se = realize_point(&ActionObject::GrpAct(GroupAction::trivial(z(3), z(1)))).unwrap();
        assert_eq!(se.point.p.map(), &[0, 1, 2]);
        let se = realize_point(&ActionObject::ab_pair(z(2), z(3)).unwrap()).unwrap();
        assert_eq!(se.x.size(), 2);
    }

    #[test]
    fn liftings() {
        let a = ActionObject::GrpAct(inversion());
        let id = PointedMap::identity(&functor_i(&a));
        let (e, alpha) = cartesian_lifting(&id, &a).unwrap();
        assert_eq!(e, a);
        assert_eq!(alpha, ActionMorphism::identity(&a));
        let one = PointedObject::Grp(z(1));
        let (e, _) = cartesian_lifting(&PointedMap::zero(&one, &functor_i(&a)), &a).unwrap();
        assert!(e.action().unwrap().is_trivial());
        let zero = PointedMap::zero(&functor_i(&a), &functor_i(&a));
        let (e, alpha) = cartesian_lifting(&zero, &a).unwrap();
        assert!(e.action().unwrap().is_trivial());
        assert!(is_cartesian(&alpha));
        assert!(is_cartesian_exhaustive(&alpha, 3).unwrap());
    }

    #[test]
    fn zero_first_component_is_not_cartesian() {
        let ab = ActionObject::ab_pair(z(2), z(2)).unwrap();
        let m = ActionMorphism::new(ab.clone(), ab, vec![0, 0], vec![0, 1]).unwrap();
        assert!(!is_cartesian(&m));
        assert!(!is_cartesian_exhaustive(&m, 2).unwrap());
        assert!(is_cartesian_exhaustive(&m, 7).is_err());
    }

    #[test]
    fn enumerate_actions_of_z2_on_z3() {
        let acts = enumerate_actions(&z(2), &z(3));
        assert_eq!(acts.len(), 2);
        assert!(acts[0].is_trivial());
        assert_eq!(acts[1], inversion());
    }
}
