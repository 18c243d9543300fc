//! Whitehead sequences, crossed modules and the L-condition.

use std::sync::Arc;

use super::{
    cartesian_factor, cartesian_lifting, enumerate_actions, eta_with, functor_g, functor_i, functor_j, is_cartesian,
    is_organic, realize, transpose_with, ActionMorphism, Realization, ActionObject, GroupAction,
};
use crate::error::{Error, Result};
use crate::fingroup::{enumerate_homs, enumerate_homs_filtered, same_group, FiniteGroup, GroupHom};
use crate::pointedcat::{all_pointed_maps, PointedMap};

/// `(A, u, v)` with `u: A → GIA`, `v: GJA → A`, `I(u) = 1`, `J(v) = 1` and
/// `I(v) = J(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteheadSequence {
    a: ActionObject,
    u: ActionMorphism,
    v: ActionMorphism,
}

impl WhiteheadSequence {
    pub fn new(a: ActionObject, u: ActionMorphism, v: ActionMorphism) -> Result<WhiteheadSequence> {
        let w = WhiteheadSequence { a, u, v };
        if let Some(msg) = w.violation() {
            return Err(Error::NotAWhiteheadSequence(msg));
        }
        Ok(w)
    }

    pub(crate) fn new_unchecked(a: ActionObject, u: ActionMorphism, v: ActionMorphism) -> WhiteheadSequence {
        WhiteheadSequence { a, u, v }
    }

    pub fn violation(&self) -> Option<String> {
        let (ia, ja) = (functor_i(&self.a), functor_j(&self.a));
        if self.u.dom() != &self.a || self.u.cod() != &functor_g(&ia) {
            return Some("u must map A to GI(A)".into());
        }
        if self.v.dom() != &functor_g(&ja) || self.v.cod() != &self.a {
            return Some("v must map GJ(A) to A".into());
        }
        if let Some(w) = self.u.violation() {
            return Some(format!("u: {w}"));
        }
        if let Some(w) = self.v.violation() {
            return Some(format!("v: {w}"));
        }
        if self.u.i_map().iter().enumerate().any(|(b, &v)| b != v) {
            return Some("I(u) is not the identity".into());
        }
        if self.v.j_map().iter().enumerate().any(|(x, &v)| x != v) {
            return Some("J(v) is not the identity".into());
        }
        if self.v.i_map() != self.u.j_map() {
            return Some("I(v) differs from J(u)".into());
        }
        None
    }

    pub fn object(&self) -> &ActionObject {
        &self.a
    }

    pub fn u(&self) -> &ActionMorphism {
        &self.u
    }

    pub fn v(&self) -> &ActionMorphism {
        &self.v
    }

    /// `h = J(u) = I(v)`.
    pub fn h(&self) -> PointedMap {
        self.u.j_component()
    }
}

/// An action with a boundary `h: X → B` satisfying both crossed-module laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    action: GroupAction,
    h: GroupHom,
}

impl CrossedModule {
    pub fn new(action: GroupAction, h: GroupHom) -> Result<CrossedModule> {
        if !same_group(h.dom(), action.fiber()) || !same_group(h.cod(), action.base()) {
            return Err(Error::CodomainMismatch("h must map the acted-on group to the acting group".into()));
        }
        if let Some(w) = h.hom_violation() {
            return Err(Error::NotAHomomorphism(w));
        }
        if let Err(v) = xmod_check(&action, &h) {
            return Err(Error::NotACrossedModule { equation: v.equation, witness: v.witness });
        }
        Ok(CrossedModule { action, h })
    }

    pub(crate) fn new_unchecked(action: GroupAction, h: GroupHom) -> CrossedModule {
        CrossedModule { action, h }
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn h(&self) -> &GroupHom {
        &self.h
    }

    pub fn x(&self) -> &Arc<FiniteGroup> {
        self.action.fiber()
    }

    pub fn b(&self) -> &Arc<FiniteGroup> {
        self.action.base()
    }
}

/// The first failing crossed-module law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XmodViolation {
    /// `"equivariance"` for `h(b·x) = b h(x) b⁻¹`, `"peiffer"` for
    /// `h(x)·x' = x x' x⁻¹`.
    pub equation: &'static str,
    pub witness: String,
}

/// Checks both laws elementwise; the witness is the lexicographically first
/// failing tuple.
pub fn xmod_check(action: &GroupAction, h: &GroupHom) -> std::result::Result<(), XmodViolation> {
    let (x, b) = (action.fiber(), action.base());
    for bb in b.elements() {
        for xx in x.elements() {
            let lhs = h.apply(action.act(bb, xx));
            let rhs = b.conjugate(bb, h.apply(xx));
            if lhs != rhs {
                return Err(XmodViolation {
                    equation: "equivariance",
                    witness: format!("b = {bb}, x = {xx}: h(b·x) = {lhs}, b h(x) b⁻¹ = {rhs}"),
                });
            }
        }
    }
    for x1 in x.elements() {
        for x2 in x.elements() {
            let lhs = action.act(h.apply(x1), x2);
            let rhs = x.conjugate(x1, x2);
            if lhs != rhs {
                return Err(XmodViolation {
                    equation: "peiffer",
                    witness: format!("x = {x1}, x' = {x2}: h(x)·x' = {lhs}, x x' x⁻¹ = {rhs}"),
                });
            }
        }
    }
    Ok(())
}

/// `u = (h, 1)` and `v = (1, h)` for a boundary `h: JA → IA`.
pub fn whitehead_from_h(a: &ActionObject, h: &PointedMap) -> Result<WhiteheadSequence> {
    let (ia, ja) = (functor_i(a), functor_j(a));
    if h.dom() != &ja || h.cod() != &ia {
        return Err(Error::CodomainMismatch("h must map J(A) to I(A)".into()));
    }
    if let (ActionObject::GrpAct(act), Some(hh)) = (a, h.as_hom()) {
        if let Some(w) = hh.hom_violation() {
            return Err(Error::NotAHomomorphism(w));
        }
        if let Err(v) = xmod_check(act, &hh) {
            return Err(Error::NotACrossedModule { equation: v.equation, witness: v.witness });
        }
    }
    let u = ActionMorphism::new(a.clone(), functor_g(&ia), h.map().to_vec(), (0..ia.size()).collect())
        .map_err(|e| Error::NotAWhiteheadSequence(format!("u: {e}")))?;
    let v = ActionMorphism::new(functor_g(&ja), a.clone(), (0..ja.size()).collect(), h.map().to_vec())
        .map_err(|e| Error::NotAWhiteheadSequence(format!("v: {e}")))?;
    WhiteheadSequence::new(a.clone(), u, v)
}

pub fn xmod_to_whitehead(cm: &CrossedModule) -> Result<WhiteheadSequence> {
    let a = ActionObject::GrpAct(cm.action.clone());
    whitehead_from_h(&a, &PointedMap::from_hom(crate::pointedcat::Instance::Grp, &cm.h))
}

pub fn whitehead_to_xmod(w: &WhiteheadSequence) -> Result<CrossedModule> {
    let ActionObject::GrpAct(action) = &w.a else {
        return Err(Error::InstanceMismatch("crossed modules live in the group-action instance".into()));
    };
    let h = GroupHom::new(action.fiber().clone(), action.base().clone(), w.u.j_map().to_vec())?;
    CrossedModule::new(action.clone(), h)
}

/// Largest `|X|·|B|` accepted by [`enumerate_crossed_modules`].
pub const XMOD_ENUM_BOUND: usize = 256;

/// All crossed modules on `(X, B)`, ordered by action table then by `h`.
pub fn enumerate_crossed_modules(x: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<Vec<CrossedModule>> {
    let size = x.order() * b.order();
    if size > XMOD_ENUM_BOUND {
        return Err(Error::BoundExceeded(format!("|X|·|B| = {size} exceeds {XMOD_ENUM_BOUND}")));
    }
    let homs = enumerate_homs(x, b);
    let mut out = Vec::new();
    for action in enumerate_actions(b, x) {
        for h in &homs {
            if xmod_check(&action, h).is_ok() {
                out.push(CrossedModule::new_unchecked(action.clone(), h.clone()));
            }
        }
    }
    Ok(out)
}

/// The solid part of an L-condition diagram: `α: E → A` with section
/// `β`, `f: A → GIE` and `g: GJE → A`.
#[derive(Clone, Debug)]
pub struct LConditionConfig {
    pub alpha: ActionMorphism,
    pub beta: ActionMorphism,
    pub f: ActionMorphism,
    pub g: ActionMorphism,
}

impl LConditionConfig {
    /// The configuration induced by a Whitehead sequence: `α` the cartesian
    /// lifting of `ε F(u)`, `β` its section over `I(η_A)`, `f = η_A` and
    /// `g = v`.
    pub fn from_whitehead(w: &WhiteheadSequence) -> Result<LConditionConfig> {
        Self::from_whitehead_with(w, &realize(w.object()))
    }

    /// As [`LConditionConfig::from_whitehead`], reusing a realization of
    /// `A` so that `I(E)` is the very same object as `F(A)`.
    pub fn from_whitehead_with(w: &WhiteheadSequence, r: &Realization) -> Result<LConditionConfig> {
        let a = w.object();
        let ubar = transpose_with(w.u(), r)?;
        let (_, alpha) = cartesian_lifting(&ubar, a)?;
        let beta = cartesian_factor(&alpha, &ActionMorphism::identity(a), &r.s)?;
        let f = eta_with(a, r);
        Ok(LConditionConfig { alpha, beta, f, g: w.v().clone() })
    }

    /// The first violated hypothesis, if any.
    pub fn precondition_violation(&self) -> Option<String> {
        let (alpha, beta, f, g) = (&self.alpha, &self.beta, &self.f, &self.g);
        let e = alpha.dom();
        let a = alpha.cod();
        if beta.dom() != a || beta.cod() != e || f.dom() != a || g.cod() != a {
            return Some("objects of α, β, f, g do not match".into());
        }
        if f.cod() != &functor_g(&functor_i(e)) {
            return Some("f must land in GI(E)".into());
        }
        if g.dom() != &functor_g(&functor_j(e)) {
            return Some("g must start at GJ(E)".into());
        }
        if beta.i_map() != f.i_map() {
            return Some("I(β) differs from I(f)".into());
        }
        if alpha.j_map() != g.j_map() {
            return Some("J(α) differs from J(g)".into());
        }
        let lhs: Vec<usize> = f.j_map().iter().map(|&y| alpha.i_map()[y]).collect();
        let rhs: Vec<usize> = beta.j_map().iter().map(|&x| g.i_map()[x]).collect();
        if lhs != rhs {
            return Some("I(α)J(f) differs from I(g)J(β)".into());
        }
        let ab = alpha.compose_unchecked(beta);
        if !ab.same_maps(&ActionMorphism::identity(a)) {
            return Some("αβ is not the identity".into());
        }
        if !is_cartesian(alpha) {
            return Some("α is not cartesian".into());
        }
        if !is_organic(f) {
            return Some("f is not organic".into());
        }
        None
    }
}

/// Every Whitehead sequence `(E, f', g')` with `αg' = g` and `f'β = f`.
///
/// `f' = (φ, 1)` and `g' = (1, φ)` for some `φ: JE → IE`; candidates for
/// the image of each generator are pruned by the necessary condition
/// `I(α)φ = I(g)`.
pub fn l_condition_solutions(cfg: &LConditionConfig) -> Result<Vec<(ActionMorphism, ActionMorphism)>> {
    if let Some(msg) = cfg.precondition_violation() {
        return Err(Error::PreconditionFailed(msg));
    }
    let e = cfg.alpha.dom().clone();
    let (ie, je) = (functor_i(&e), functor_j(&e));
    let (ia_of, ig) = (cfg.alpha.i_map(), cfg.g.i_map());
    let phis: Vec<Vec<usize>> = match (je.group(), ie.group()) {
        (Some(jg), Some(igp)) => enumerate_homs_filtered(jg, igp, |gen, img| ia_of[img] == ig[gen])
            .into_iter()
            .map(GroupHom::into_map)
            .collect(),
        _ => all_pointed_maps(&je, &ie)
            .into_iter()
            .map(|m| m.map().to_vec())
            .filter(|m| m.iter().enumerate().all(|(x, &y)| ia_of[y] == ig[x]))
            .collect(),
    };
    let gie = functor_g(&ie);
    let gje = functor_g(&je);
    let mut out = Vec::new();
    for phi in phis {
        let f2 = ActionMorphism::new_unchecked(e.clone(), gie.clone(), phi.clone(), (0..ie.size()).collect());
        let g2 = ActionMorphism::new_unchecked(gje.clone(), e.clone(), (0..je.size()).collect(), phi);
        if f2.violation().is_some() || g2.violation().is_some() {
            continue;
        }
        if !cfg.alpha.compose_unchecked(&g2).same_maps(&cfg.g) {
            continue;
        }
        if !f2.compose_unchecked(&cfg.beta).same_maps(&cfg.f) {
            continue;
        }
        out.push((f2, g2));
    }
    Ok(out)
}

/// The unique completion, `None` if there is none; more than one
/// completion is an error.
pub fn l_condition_instance(cfg: &LConditionConfig) -> Result<Option<(ActionMorphism, ActionMorphism)>> {
    let mut sols = l_condition_solutions(cfg)?;
    match sols.len() {
        0 => Ok(None),
        1 => Ok(sols.pop()),
        n => Err(Error::LConditionFailure(format!("{n} completions found"))),
    }
}

/// Whitehead sequences of the given action object, found by enumerating all
/// `u: A → GIA` with `I(u) = 1` and all `v: GJA → A` with `J(v) = 1`.
pub fn whitehead_sequences_by_search(a: &ActionObject) -> Vec<WhiteheadSequence> {
    let (ia, ja) = (functor_i(a), functor_j(a));
    let (gia, gja) = (functor_g(&ia), functor_g(&ja));
    let us = super::enumerate_morphisms_where(a, &gia, |_| true, |m| m.iter().enumerate().all(|(i, &v)| i == v));
    let vs = super::enumerate_morphisms_where(&gja, a, |m| m.iter().enumerate().all(|(i, &v)| i == v), |_| true);
    let mut out = Vec::new();
    for u in &us {
        for v in &vs {
            if v.i_map() == u.j_map() {
                out.push(WhiteheadSequence::new_unchecked(a.clone(), u.clone(), v.clone()));
            }
        }
    }
    out
}

/// Boundaries `h` for which `(A, h)` is a Whitehead sequence, by formula.
pub fn boundaries(a: &ActionObject) -> Vec<PointedMap> {
    all_pointed_maps(&functor_j(a), &functor_i(a))
        .into_iter()
        .filter(|h| whitehead_from_h(a, h).is_ok())
        .collect()
}
