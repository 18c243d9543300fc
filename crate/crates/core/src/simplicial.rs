//! The tower of cartesian split epimorphisms generated by a Whitehead
//! sequence and the simplicial object it induces, truncated at level 3.
//!
//! Level `n` of the simplicial object is `B_0 = IA_0` and `B_n = FA_{n-1}`.
//! The lifting that produces `A_{n+1}` reuses the realization of `A_n`, so
//! `IA_{n+1}` is literally the object `FA_n` and no identifying isomorphism
//! has to be carried around.

use crate::actionsys::{
    cartesian_factor, cartesian_lifting, eta_with, functor_f_map_with, functor_i, realize, transpose_with,
    whitehead::{l_condition_instance, LConditionConfig, WhiteheadSequence},
    ActionMorphism, ActionObject, Realization,
};
use crate::error::{Error, Result};
use crate::pointedcat::{PointedMap, PointedObject};
use crate::report::{Check, Report};

/// `A_0 ← A_1 ← … ← A_depth`, each `α_i` cartesian and split by `β_i`.
#[derive(Clone, Debug)]
pub struct CartesianTower {
    levels: Vec<ActionObject>,
    realizations: Vec<Realization>,
    alphas: Vec<ActionMorphism>,
    betas: Vec<ActionMorphism>,
    whiteheads: Vec<WhiteheadSequence>,
}

/// `α: E → A` lifting `ε F(u)` and its section `β` with `I(β) = I(η_A)`.
fn lift_level(w: &WhiteheadSequence, r: &Realization) -> Result<(ActionObject, ActionMorphism, ActionMorphism)> {
    let a = w.object();
    let ubar = transpose_with(w.u(), r)?;
    let (e, alpha) = cartesian_lifting(&ubar, a)?;
    let beta = cartesian_factor(&alpha, &ActionMorphism::identity(a), &r.s)?;
    Ok((e, alpha, beta))
}

/// Builds `A_0, …, A_depth`. The Whitehead sequence on `A_{i+1}` is the
/// unique completion of the L-condition configuration at level `i`; it is
/// computed for every level below `depth`.
pub fn build_tower(w: &WhiteheadSequence, depth: usize) -> Result<CartesianTower> {
    if depth == 0 {
        return Err(Error::PreconditionFailed("tower depth must be at least 1".into()));
    }
    if let Some(msg) = w.violation() {
        return Err(Error::NotAWhiteheadSequence(msg));
    }
    let mut t = CartesianTower {
        levels: vec![w.object().clone()],
        realizations: vec![realize(w.object())],
        alphas: Vec::new(),
        betas: Vec::new(),
        whiteheads: vec![w.clone()],
    };
    for i in 0..depth {
        let (e, alpha, beta) = lift_level(&t.whiteheads[i], &t.realizations[i])?;
        if i + 1 < depth {
            let cfg = LConditionConfig {
                alpha: alpha.clone(),
                beta: beta.clone(),
                f: eta_with(&t.levels[i], &t.realizations[i]),
                g: t.whiteheads[i].v().clone(),
            };
            let (mu, nu) = l_condition_instance(&cfg)?
                .ok_or_else(|| Error::LConditionFailure(format!("no completion at level {}", i + 1)))?;
            t.whiteheads.push(WhiteheadSequence::new_unchecked(e.clone(), mu, nu));
        }
        t.realizations.push(realize(&e));
        t.levels.push(e);
        t.alphas.push(alpha);
        t.betas.push(beta);
    }
    Ok(t)
}

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&v| outer[v]).collect()
}

fn first_difference(a: &[usize], b: &[usize]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| x != y)
}

impl CartesianTower {
    pub fn depth(&self) -> usize {
        self.alphas.len()
    }

    /// `A_n`.
    pub fn level(&self, n: usize) -> &ActionObject {
        &self.levels[n]
    }

    pub fn realization(&self, n: usize) -> &Realization {
        &self.realizations[n]
    }

    /// `α_n: A_n → A_{n-1}` for `1 ≤ n ≤ depth`.
    pub fn alpha(&self, n: usize) -> &ActionMorphism {
        &self.alphas[n - 1]
    }

    /// `β_n: A_{n-1} → A_n` for `1 ≤ n ≤ depth`.
    pub fn beta(&self, n: usize) -> &ActionMorphism {
        &self.betas[n - 1]
    }

    /// The Whitehead sequence `(A_n, μ_n, ν_n)`, present for `n < depth`.
    pub fn whitehead(&self, n: usize) -> Option<&WhiteheadSequence> {
        self.whiteheads.get(n)
    }

    /// `F(α_n): FA_n → FA_{n-1}`.
    pub fn f_alpha(&self, n: usize) -> PointedMap {
        functor_f_map_with(self.alpha(n), &self.realizations[n], &self.realizations[n - 1])
    }

    /// `F(β_n): FA_{n-1} → FA_n`.
    pub fn f_beta(&self, n: usize) -> PointedMap {
        functor_f_map_with(self.beta(n), &self.realizations[n - 1], &self.realizations[n])
    }

    /// The split-epi and determining equations at every level.
    pub fn determining_report(&self) -> Report {
        let mut rep = Report::new();
        for n in 1..=self.depth() {
            let (alpha, beta) = (self.alpha(n), self.beta(n));
            let ab = alpha.compose_unchecked(beta);
            rep.push(Check::from_witness(
                format!("α{n}β{n}=1"),
                (!ab.same_maps(&ActionMorphism::identity(&self.levels[n - 1]))).then(|| "maps differ".to_string()),
            ));
            rep.push(Check::from_witness(
                format!("α{n} cartesian"),
                (!crate::actionsys::is_cartesian(alpha)).then(|| "closed-form test fails".to_string()),
            ));
            let s_prev = self.realizations[n - 1].s.map();
            rep.push(Check::from_witness(
                format!("I(β{n})=I(η_A{})", n - 1),
                first_difference(beta.i_map(), s_prev).map(|e| format!("at {e}")),
            ));
            if n < self.depth() {
                // G I(α_{n+1}) η_{A_n} β_n = η_{A_{n-1}}, componentwise.
                let ia_next = self.alpha(n + 1).i_map();
                let r = &self.realizations[n];
                let j_lhs = compose(ia_next, &compose(r.k.map(), beta.j_map()));
                let i_lhs = compose(ia_next, &compose(r.s.map(), beta.i_map()));
                let rp = &self.realizations[n - 1];
                let witness = first_difference(&j_lhs, rp.k.map())
                    .map(|e| format!("J-component at {e}"))
                    .or_else(|| first_difference(&i_lhs, rp.s.map()).map(|e| format!("I-component at {e}")));
                rep.push(Check::from_witness(format!("GI(α{})η_A{n}β{n}=η_A{}", n + 1, n - 1), witness));
                let id: Vec<usize> = (0..r.s.dom().size()).collect();
                rep.push(Check::from_witness(
                    format!("I(α{})I(η_A{n})=1", n + 1),
                    first_difference(&compose(ia_next, r.s.map()), &id).map(|e| format!("at {e}")),
                ));
            }
        }
        rep
    }
}

fn factorization_failure(e: Error) -> Error {
    match e {
        Error::PreconditionFailed(m) | Error::FactorizationFailure(m) | Error::InvalidMorphism(m) => {
            Error::FactorizationFailure(m)
        }
        other => other,
    }
}

/// `F²(α_n) = F(F(α_n)*): FA_{n+1} → FA_n`, where `F(α_n)*: A_{n+1} → A_n`
/// is the factorization of `α_nα_{n+1}` through `α_n` over `F(α_n)`.
pub fn derived_face(tower: &CartesianTower, n: usize) -> Result<PointedMap> {
    if n == 0 || tower.depth() < n + 1 {
        return Err(Error::PreconditionFailed(format!("F²(α{n}) needs a tower of depth ≥ {}", n + 1)));
    }
    let g = tower.alpha(n).compose_unchecked(tower.alpha(n + 1));
    let star = cartesian_factor(tower.alpha(n), &g, &tower.f_alpha(n)).map_err(factorization_failure)?;
    Ok(functor_f_map_with(&star, &tower.realizations[n + 1], &tower.realizations[n]))
}

/// `F²(β_n) = F(F(β_n)*): FA_n → FA_{n+1}`, where `F(β_n)*: A_n → A_{n+1}`
/// is the factorization of `1_{A_n}` through `α_{n+1}` over `F(β_n)`.
pub fn derived_degeneracy(tower: &CartesianTower, n: usize) -> Result<PointedMap> {
    if n == 0 || tower.depth() < n + 1 {
        return Err(Error::PreconditionFailed(format!("F²(β{n}) needs a tower of depth ≥ {}", n + 1)));
    }
    let id = ActionMorphism::identity(tower.level(n));
    let star = cartesian_factor(tower.alpha(n + 1), &id, &tower.f_beta(n)).map_err(factorization_failure)?;
    Ok(functor_f_map_with(&star, &tower.realizations[n], &tower.realizations[n + 1]))
}

/// A face or degeneracy together with its name in the construction.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    pub label: String,
    pub map: PointedMap,
}

/// Levels 0 to 3 with all faces and degeneracies.
#[derive(Clone, Debug)]
pub struct SimplicialTruncation {
    /// `B_0 = IA_0`, `B_n = FA_{n-1}`.
    pub objects: Vec<PointedObject>,
    /// `faces[n - 1][i] = d_i: B_n → B_{n-1}` for `n = 1, 2, 3`, with
    /// `d_0 = π_{n-1}`, `d_1 = I(α_n)` and `d_n = F^{n-1}(α_1)`.
    pub faces: Vec<Vec<SimplicialMap>>,
    /// `degeneracies[n][j] = s_j: B_n → B_{n+1}` for `n = 0, 1, 2`, with
    /// `s_0 = ι_n` and `s_n = F^n(β_1)`.
    pub degeneracies: Vec<Vec<SimplicialMap>>,
}

fn named(label: &str, map: PointedMap) -> SimplicialMap {
    SimplicialMap { label: label.to_string(), map }
}

/// The truncated simplicial object of a tower of depth at least 3.
pub fn build_truncation(tower: &CartesianTower) -> Result<SimplicialTruncation> {
    if tower.depth() < 3 {
        return Err(Error::PreconditionFailed("truncation needs a tower of depth ≥ 3".into()));
    }
    let r = &tower.realizations;
    let objects = vec![functor_i(tower.level(0)), r[0].fa.clone(), r[1].fa.clone(), r[2].fa.clone()];
    let ia = |n: usize| tower.alpha(n).i_component();
    let faces = vec![
        vec![named("π0", r[0].p.clone()), named("I(α1)", ia(1))],
        vec![named("π1", r[1].p.clone()), named("I(α2)", ia(2)), named("F(α1)", tower.f_alpha(1))],
        vec![
            named("π2", r[2].p.clone()),
            named("I(α3)", ia(3)),
            named("F(α2)", tower.f_alpha(2)),
            named("F²(α1)", derived_face(tower, 1)?),
        ],
    ];
    let degeneracies = vec![
        vec![named("ι0", r[0].s.clone())],
        vec![named("ι1", r[1].s.clone()), named("F(β1)", tower.f_beta(1))],
        vec![named("ι2", r[2].s.clone()), named("F(β2)", tower.f_beta(2)), named("F²(β1)", derived_degeneracy(tower, 1)?)],
    ];
    Ok(SimplicialTruncation { objects, faces, degeneracies })
}

/// A map symbol in the truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sym {
    /// `d_i` out of level `n`.
    D(usize, usize),
    /// `s_j` out of level `n`.
    S(usize, usize),
}

impl SimplicialTruncation {
    fn get(&self, s: Sym) -> &SimplicialMap {
        match s {
            Sym::D(n, i) => &self.faces[n - 1][i],
            Sym::S(n, j) => &self.degeneracies[n][j],
        }
    }

    fn source(s: Sym) -> usize {
        match s {
            Sym::D(n, _) | Sym::S(n, _) => n,
        }
    }

    /// `syms[0] ∘ syms[1] ∘ …`; the empty word is the identity on `level`.
    fn eval(&self, syms: &[Sym], level: usize) -> (String, Vec<usize>) {
        let mut map: Vec<usize> = (0..self.objects[level].size()).collect();
        for &s in syms.iter().rev() {
            map = compose(self.get(s).map.map(), &map);
        }
        let label = if syms.is_empty() {
            "1".to_string()
        } else {
            syms.iter().map(|&s| self.get(s).label.as_str()).collect::<Vec<_>>().join("·")
        };
        (label, map)
    }
}

/// One verified equation between composites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRow {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
    /// The first element of the common domain where the sides differ.
    pub witness: Option<usize>,
    /// Row number in the translation table between internal-category and
    /// simplicial equations.
    pub table_row: Option<u8>,
    /// Why the equation holds.
    pub reason: Option<&'static str>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub rows: Vec<IdentityRow>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRow> {
        self.rows.iter().filter(|r| !r.passed)
    }

    pub fn table_rows(&self) -> impl Iterator<Item = &IdentityRow> {
        self.rows.iter().filter(|r| r.table_row.is_some())
    }

    pub fn to_report(&self) -> Report {
        let mut rep = Report::new();
        for r in &self.rows {
            let name = match r.table_row {
                Some(k) => format!("translation row {k}: {}", r.name),
                None => r.name.clone(),
            };
            rep.push(Check::from_witness(
                name,
                r.witness.map(|e| format!("{} and {} differ at element {e}", r.lhs, r.rhs)),
            ));
        }
        rep
    }
}

/// `(row, name, lhs, rhs, reason)`; the level of the common domain is that
/// of the innermost map of the left side.
type TableRow = (u8, &'static str, &'static [Sym], &'static [Sym], &'static str);

const TRANSLATION: [TableRow; 12] = {
    use Sym::{D, S};
    [
        (1, "de=1", &[D(1, 0), S(0, 0)], &[], "definition"),
        (2, "ce=1", &[D(1, 1), S(0, 0)], &[], "definition"),
        (3, "p2e2=1", &[D(2, 0), S(1, 0)], &[], "definition"),
        (4, "me2=1", &[D(2, 1), S(1, 0)], &[], "definition"),
        (5, "me1=1", &[D(2, 1), S(1, 1)], &[], "definition"),
        (6, "p1e1=1", &[D(2, 2), S(1, 1)], &[], "definition"),
        (7, "cp2=dp1", &[D(1, 1), D(2, 0)], &[D(1, 0), D(2, 2)], "naturality"),
        (8, "dp2=dm", &[D(1, 0), D(2, 0)], &[D(1, 0), D(2, 1)], "η organic"),
        (9, "cp1=cm", &[D(1, 1), D(2, 2)], &[D(1, 1), D(2, 1)], "associativity equation"),
        (10, "p2e1=ed", &[D(2, 0), S(1, 1)], &[S(0, 0), D(1, 0)], "naturality"),
        (11, "p1e2=ec", &[D(2, 2), S(1, 0)], &[S(0, 0), D(1, 1)], "naturality"),
        (12, "mm1=mm2", &[D(2, 1), D(3, 2)], &[D(2, 1), D(3, 1)], "associativity equation"),
    ]
};

fn check_row(
    t: &SimplicialTruncation,
    name: String,
    lhs: &[Sym],
    rhs: &[Sym],
    table_row: Option<u8>,
    reason: Option<&'static str>,
) -> IdentityRow {
    let level = SimplicialTruncation::source(*lhs.last().expect("nonempty left side"));
    let (ll, lm) = t.eval(lhs, level);
    let (rl, rm) = t.eval(rhs, level);
    let witness = first_difference(&lm, &rm);
    IdentityRow { name, lhs: ll, rhs: rl, passed: witness.is_none(), witness, table_row, reason }
}

fn word(syms: &[Sym]) -> String {
    if syms.is_empty() {
        return "1".into();
    }
    syms.iter()
        .map(|s| match s {
            Sym::D(_, i) => format!("d{i}"),
            Sym::S(_, j) => format!("s{j}"),
        })
        .collect()
}

/// Every simplicial identity expressible in levels 0 to 3, the table of
/// internal-category equations, and the structural equations used by the
/// construction. Failures are rows, never errors.
pub fn verify_identities(t: &SimplicialTruncation) -> IdentityReport {
    use Sym::{D, S};
    let mut rows = Vec::new();
    let push = |lhs: Vec<Sym>, rhs: Vec<Sym>, level: usize, rows: &mut Vec<IdentityRow>| {
        let name = format!("{}={} on B{level}", word(&lhs), word(&rhs));
        rows.push(check_row(t, name, &lhs, &rhs, None, None));
    };
    // d_i d_j = d_{j-1} d_i for i < j, out of level n.
    for n in 2..=3 {
        for j in 1..=n {
            for i in 0..j {
                push(vec![D(n - 1, i), D(n, j)], vec![D(n - 1, j - 1), D(n, i)], n, &mut rows);
            }
        }
    }
    // Face-degeneracy relations, s_j out of level n.
    for n in 0..=2 {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = vec![D(n + 1, i), S(n, j)];
                let rhs = if i < j {
                    vec![S(n - 1, j - 1), D(n, i)]
                } else if i == j || i == j + 1 {
                    vec![]
                } else {
                    vec![S(n - 1, j), D(n, i - 1)]
                };
                push(lhs, rhs, n, &mut rows);
            }
        }
    }
    // s_i s_j = s_{j+1} s_i for i ≤ j, out of level n.
    for n in 0..=1 {
        for j in 0..=n {
            for i in 0..=j {
                push(vec![S(n + 1, i), S(n, j)], vec![S(n + 1, j + 1), S(n, i)], n, &mut rows);
            }
        }
    }
    for (k, name, lhs, rhs, reason) in TRANSLATION {
        rows.push(check_row(t, name.to_string(), lhs, rhs, Some(k), Some(reason)));
    }
    // The equations the construction rests on: I(α_n)ι_{n-1} = 1,
    // I(α_{n+1})F(β_n) = 1, and the associativity equation
    // I(α_n)F(α_n) = I(α_n)I(α_{n+1}) together with its two legs, the
    // precompositions with the jointly epimorphic pair (F(β_n), ι_n).
    let structural: [(&str, Vec<Sym>, Vec<Sym>); 11] = [
        ("I(α1)ι0=1", vec![D(1, 1), S(0, 0)], vec![]),
        ("I(α2)ι1=1", vec![D(2, 1), S(1, 0)], vec![]),
        ("I(α3)ι2=1", vec![D(3, 1), S(2, 0)], vec![]),
        ("I(α2)F(β1)=1", vec![D(2, 1), S(1, 1)], vec![]),
        ("I(α3)F(β2)=1", vec![D(3, 1), S(2, 1)], vec![]),
        ("associativity n=1", vec![D(1, 1), D(2, 2)], vec![D(1, 1), D(2, 1)]),
        ("associativity n=1 via F(β1)", vec![D(1, 1), D(2, 2), S(1, 1)], vec![D(1, 1), D(2, 1), S(1, 1)]),
        ("associativity n=1 via ι1", vec![D(1, 1), D(2, 2), S(1, 0)], vec![D(1, 1), D(2, 1), S(1, 0)]),
        ("associativity n=2", vec![D(2, 1), D(3, 2)], vec![D(2, 1), D(3, 1)]),
        ("associativity n=2 via F(β2)", vec![D(2, 1), D(3, 2), S(2, 1)], vec![D(2, 1), D(3, 1), S(2, 1)]),
        ("associativity n=2 via ι2", vec![D(2, 1), D(3, 2), S(2, 0)], vec![D(2, 1), D(3, 1), S(2, 0)]),
    ];
    for (name, lhs, rhs) in structural {
        rows.push(check_row(t, name.to_string(), &lhs, &rhs, None, Some("construction")));
    }
    // IA_n = FA_{n-1}: each face and degeneracy runs between the stated levels.
    for (n, fs) in t.faces.iter().enumerate() {
        for f in fs {
            let ok = f.map.dom() == &t.objects[n + 1] && f.map.cod() == &t.objects[n];
            rows.push(IdentityRow {
                name: format!("{}: B{} → B{n}", f.label, n + 1),
                lhs: f.label.clone(),
                rhs: f.label.clone(),
                passed: ok,
                witness: (!ok).then_some(0),
                table_row: None,
                reason: Some("construction"),
            });
        }
    }
    IdentityReport { rows }
}
