//! JSON documents for every domain type and for verification reports.
//!
//! Every document starts with `"kind"` and `"version"`. Index arrays are
//! explicit; a group field is either an inline group document or a path
//! relative to the referencing file. Serialization always inlines groups
//! and is byte-deterministic: keys keep declaration order and arrays of
//! scalars stay on one line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::actionsys::whitehead::{xmod_check, CrossedModule, WhiteheadSequence};
use crate::actionsys::{functor_g, functor_i, functor_j, ActionMorphism, ActionObject, GroupAction};
use crate::error::{Error, Result};
use crate::fingroup::{make_group, FiniteGroup, GroupHom};
use crate::gpd::{is_groupoid, is_internal_category, InternalCategory};
use crate::pointedcat::{Cospan, Instance, PatchWitness, PointedMap, PointedObject};
use crate::report::{Check, Report};
use crate::simplicial::{IdentityReport, SimplicialTruncation};

pub const FORMAT_VERSION: &str = "1";

/// A loaded and validated document.
#[derive(Clone, Debug)]
pub enum Document {
    Group(Arc<FiniteGroup>),
    Hom(GroupHom),
    Action(GroupAction),
    Xmod(CrossedModule),
    Whitehead(WhiteheadSequence),
    Groupoid(InternalCategory),
    Report(ReportDocument),
    Cospan(CospanDocument),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Hom(_) => "hom",
            Document::Action(_) => "action",
            Document::Xmod(_) => "xmod",
            Document::Whitehead(_) => "whitehead",
            Document::Groupoid(_) => "groupoid",
            Document::Report(_) => "report",
            Document::Cospan(_) => "cospan",
        }
    }
}

/// One report row. `table_row` is set for rows of the internal-category
/// translation table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntry {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_row: Option<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Checks plus free-form, insertion-ordered summary data.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ReportDocument {
    pub checks: Vec<ReportEntry>,
    pub summary: Map<String, Value>,
}

impl ReportDocument {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn push_report(&mut self, report: &Report) {
        self.checks.extend(report.checks.iter().map(|c| ReportEntry {
            name: c.name.clone(),
            status: if c.passed { Status::Pass } else { Status::Fail },
            witness: c.witness.clone(),
            table_row: None,
        }));
    }

    pub fn push_identities(&mut self, report: &IdentityReport) {
        self.checks.extend(report.rows.iter().map(|r| ReportEntry {
            name: match r.table_row {
                Some(k) => format!("translation row {k}: {}", r.name),
                None => r.name.clone(),
            },
            status: if r.passed { Status::Pass } else { Status::Fail },
            witness: r.witness.map(|w| format!("{} != {} at {w}", r.lhs, r.rhs)),
            table_row: r.table_row,
        }));
    }

    pub fn to_report(&self) -> Report {
        Report {
            checks: self
                .checks
                .iter()
                .map(|c| Check { name: c.name.clone(), passed: c.status == Status::Pass, witness: c.witness.clone() })
                .collect(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.summary.insert(key.to_string(), serde_json::to_value(value).expect("plain data serializes"));
    }
}

impl From<&Report> for ReportDocument {
    fn from(r: &Report) -> ReportDocument {
        let mut d = ReportDocument::default();
        d.push_report(r);
        d
    }
}

/// A cospan `X → Y ← B` with an optional retraction `p: Y → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CospanDocument {
    pub cospan: Cospan,
    pub p: Option<PointedMap>,
}

impl CospanDocument {
    /// The patch witness, when `p` is present and valid.
    pub fn patch(&self) -> Option<Result<PatchWitness>> {
        self.p.as_ref().map(|p| PatchWitness::new(self.cospan.clone(), p.clone()))
    }
}

// Wire formats. Field order is the serialized key order.

#[derive(Deserialize)]
struct HeaderLoose {
    kind: Option<Value>,
    version: Option<Value>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupWire {
    kind: String,
    version: String,
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum GroupRef {
    Inline(GroupWire),
    Path(String),
}

/// A component object: a group, or the size of a pointed set.
#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum ObjectRef {
    Size(usize),
    Group(GroupRef),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomWire {
    kind: String,
    version: String,
    dom: GroupRef,
    cod: GroupRef,
    map: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionWire {
    kind: String,
    version: String,
    #[serde(rename = "B")]
    b: GroupRef,
    #[serde(rename = "X")]
    x: GroupRef,
    act: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismWire {
    j: Vec<usize>,
    i: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WhiteheadWire {
    kind: String,
    version: String,
    instance: String,
    #[serde(rename = "B")]
    b: ObjectRef,
    #[serde(rename = "X")]
    x: ObjectRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    act: Option<Vec<Vec<usize>>>,
    u: MorphismWire,
    v: MorphismWire,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidWire {
    kind: String,
    version: String,
    #[serde(rename = "C0")]
    c0: GroupRef,
    #[serde(rename = "C1")]
    c1: GroupRef,
    d: Vec<usize>,
    c: Vec<usize>,
    e: Vec<usize>,
    m: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportWire {
    kind: String,
    version: String,
    checks: Vec<ReportEntry>,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    summary: Map<String, Value>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CospanWire {
    kind: String,
    version: String,
    instance: String,
    #[serde(rename = "X")]
    x: ObjectRef,
    #[serde(rename = "Y")]
    y: ObjectRef,
    #[serde(rename = "B")]
    b: ObjectRef,
    k: Vec<usize>,
    s: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<Vec<usize>>,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::ParseError { line: e.line(), column: e.column(), message: e.to_string() }
}

/// Construction failures become invariant violations named by the failing
/// invariant.
fn invariant(e: Error) -> Error {
    match e {
        Error::ParseError { .. } | Error::VersionMismatch { .. } | Error::Io(_) | Error::InvariantViolation(_) => e,
        other => Error::InvariantViolation(format!("{}: {other}", other.name())),
    }
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(parse_error)
}

fn check_header(kind: &str, version: &str, expected: &str) -> Result<()> {
    if version != FORMAT_VERSION {
        return Err(Error::VersionMismatch { found: version.to_string(), expected: FORMAT_VERSION.to_string() });
    }
    if kind != expected {
        return Err(Error::ParseError { line: 1, column: 1, message: format!("expected a {expected} document, found {kind}") });
    }
    Ok(())
}

struct Loader {
    base: Option<PathBuf>,
}

impl Loader {
    fn group_wire(&self, w: &GroupWire) -> Result<Arc<FiniteGroup>> {
        check_header(&w.kind, &w.version, "group")?;
        if w.order != w.table.len() {
            return Err(Error::InvariantViolation(format!("order {} differs from table size {}", w.order, w.table.len())));
        }
        let mut g = make_group(&w.table).map_err(invariant)?;
        if let Some(names) = &w.names {
            if names.len() != w.order {
                return Err(Error::InvariantViolation(format!("{} names for {} elements", names.len(), w.order)));
            }
            g = g.with_names(names.clone());
        }
        Ok(Arc::new(g))
    }

    fn group(&self, r: &GroupRef) -> Result<Arc<FiniteGroup>> {
        match r {
            GroupRef::Inline(w) => self.group_wire(w),
            GroupRef::Path(p) => {
                let path = match &self.base {
                    Some(b) => b.join(p),
                    None => PathBuf::from(p),
                };
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let w: GroupWire = parse(&text)?;
                self.group_wire(&w)
            }
        }
    }

    fn object(&self, instance: Instance, r: &ObjectRef) -> Result<PointedObject> {
        match (instance, r) {
            (Instance::PSet, ObjectRef::Size(n)) => PointedObject::pset(*n).map_err(invariant),
            (Instance::PSet, ObjectRef::Group(_)) => {
                Err(Error::InvariantViolation("InstanceMismatch: pointed-set components are sizes".into()))
            }
            (_, ObjectRef::Size(_)) => Err(Error::InvariantViolation("InstanceMismatch: group components are groups".into())),
            (inst, ObjectRef::Group(g)) => PointedObject::of_instance(inst, self.group(g)?).map_err(invariant),
        }
    }

    fn document(&self, text: &str) -> Result<Document> {
        let loose: HeaderLoose = parse(text)?;
        let (kind, version) = match (loose.kind, loose.version) {
            (Some(Value::String(k)), Some(Value::String(v))) => (k, v),
            _ => {
                return Err(Error::ParseError {
                    line: 1,
                    column: 1,
                    message: "document needs string fields \"kind\" and \"version\"".into(),
                })
            }
        };
        if version != FORMAT_VERSION {
            return Err(Error::VersionMismatch { found: version, expected: FORMAT_VERSION.to_string() });
        }
        match kind.as_str() {
            "group" => Ok(Document::Group(self.group_wire(&parse(text)?)?)),
            "hom" => {
                let w: HomWire = parse(text)?;
                let f = GroupHom::new(self.group(&w.dom)?, self.group(&w.cod)?, w.map).map_err(invariant)?;
                Ok(Document::Hom(f))
            }
            "action" | "xmod" => {
                let w: ActionWire = parse(text)?;
                let action = GroupAction::new(self.group(&w.b)?, self.group(&w.x)?, w.act).map_err(invariant)?;
                match (kind.as_str(), w.h) {
                    ("action", None) => Ok(Document::Action(action)),
                    ("xmod", Some(h)) => {
                        let h = GroupHom::new(action.fiber().clone(), action.base().clone(), h).map_err(invariant)?;
                        Ok(Document::Xmod(CrossedModule::new(action, h).map_err(invariant)?))
                    }
                    ("action", Some(_)) => Err(Error::ParseError { line: 1, column: 1, message: "an action has no field h".into() }),
                    _ => Err(Error::ParseError { line: 1, column: 1, message: "a crossed module needs field h".into() }),
                }
            }
            "whitehead" => self.whitehead(parse(text)?),
            "groupoid" => {
                let w: GroupoidWire = parse(text)?;
                let (c0, c1) = (self.group(&w.c0)?, self.group(&w.c1)?);
                let d = GroupHom::new(c1.clone(), c0.clone(), w.d).map_err(invariant)?;
                let c = GroupHom::new(c1.clone(), c0.clone(), w.c).map_err(invariant)?;
                let e = GroupHom::new(c0, c1, w.e).map_err(invariant)?;
                let cat = InternalCategory::new(d, c, e, w.m).map_err(invariant)?;
                let rep = is_internal_category(&cat);
                if let Some(f) = rep.failures().next() {
                    return Err(Error::InvariantViolation(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
                }
                if is_groupoid(&cat).is_none() {
                    return Err(Error::InvariantViolation("NotAGroupoid: an element has no inverse".into()));
                }
                Ok(Document::Groupoid(cat))
            }
            "report" => {
                let w: ReportWire = parse(text)?;
                Ok(Document::Report(ReportDocument { checks: w.checks, summary: w.summary }))
            }
            "cospan" => {
                let w: CospanWire = parse(text)?;
                let inst = instance_tag(&w.instance)?;
                let (x, y, b) = (self.object(inst, &w.x)?, self.object(inst, &w.y)?, self.object(inst, &w.b)?);
                let k = PointedMap::new(x, y.clone(), w.k).map_err(invariant)?;
                let s = PointedMap::new(b.clone(), y.clone(), w.s).map_err(invariant)?;
                let p = w.p.map(|p| PointedMap::new(y, b, p)).transpose().map_err(invariant)?;
                Ok(Document::Cospan(CospanDocument { cospan: Cospan::new(k, s).map_err(invariant)?, p }))
            }
            other => Err(Error::ParseError { line: 1, column: 1, message: format!("unknown document kind {other:?}") }),
        }
    }

    fn whitehead(&self, w: WhiteheadWire) -> Result<Document> {
        let inst = instance_tag(&w.instance)?;
        let a = match (inst, w.act) {
            (Instance::Grp, Some(act)) => {
                let (ObjectRef::Group(b), ObjectRef::Group(x)) = (&w.b, &w.x) else {
                    return Err(Error::InvariantViolation("InstanceMismatch: group components are groups".into()));
                };
                ActionObject::GrpAct(GroupAction::new(self.group(b)?, self.group(x)?, act).map_err(invariant)?)
            }
            (Instance::Grp, None) => {
                return Err(Error::ParseError { line: 1, column: 1, message: "a group-action object needs field act".into() })
            }
            (_, Some(_)) => {
                return Err(Error::ParseError { line: 1, column: 1, message: "only group actions carry field act".into() })
            }
            (inst, None) => {
                ActionObject::from_components(&self.object(inst, &w.x)?, &self.object(inst, &w.b)?).map_err(invariant)?
            }
        };
        let u = ActionMorphism::new(a.clone(), functor_g(&functor_i(&a)), w.u.j, w.u.i).map_err(invariant)?;
        let v = ActionMorphism::new(functor_g(&functor_j(&a)), a.clone(), w.v.j, w.v.i).map_err(invariant)?;
        Ok(Document::Whitehead(WhiteheadSequence::new(a, u, v).map_err(invariant)?))
    }
}

fn instance_tag(tag: &str) -> Result<Instance> {
    match tag {
        "grp" => Ok(Instance::Grp),
        "ab" => Ok(Instance::Ab),
        "pset" => Ok(Instance::PSet),
        other => Err(Error::ParseError { line: 1, column: 1, message: format!("unknown instance {other:?}") }),
    }
}

fn instance_name(i: Instance) -> &'static str {
    match i {
        Instance::Grp => "grp",
        Instance::Ab => "ab",
        Instance::PSet => "pset",
    }
}

/// Parses a document; group paths resolve against `base`.
pub fn read(text: &str, base: Option<&Path>) -> Result<Document> {
    Loader { base: base.map(Path::to_path_buf) }.document(text)
}

pub fn load(path: impl AsRef<Path>) -> Result<Document> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read(&text, path.parent())
}

pub fn save(doc: &Document, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_json(doc)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn header(kind: &str) -> (String, String) {
    (kind.to_string(), FORMAT_VERSION.to_string())
}

fn group_wire(g: &FiniteGroup) -> GroupWire {
    let (kind, version) = header("group");
    GroupWire { kind, version, order: g.order(), table: g.table(), names: g.names().map(<[String]>::to_vec) }
}

fn group_ref(g: &FiniteGroup) -> GroupRef {
    GroupRef::Inline(group_wire(g))
}

fn object_ref(o: &PointedObject) -> ObjectRef {
    match o {
        PointedObject::PSet(n) => ObjectRef::Size(*n),
        PointedObject::Grp(g) | PointedObject::Ab(g) => ObjectRef::Group(group_ref(g)),
    }
}

/// The canonical JSON value of a document.
pub fn to_value(doc: &Document) -> Value {
    let (kind, version) = header(doc.kind());
    let v = match doc {
        Document::Group(g) => serde_json::to_value(group_wire(g)),
        Document::Hom(f) => serde_json::to_value(HomWire {
            kind,
            version,
            dom: group_ref(f.dom()),
            cod: group_ref(f.cod()),
            map: f.map().to_vec(),
        }),
        Document::Action(a) => serde_json::to_value(ActionWire {
            kind,
            version,
            b: group_ref(a.base()),
            x: group_ref(a.fiber()),
            act: a.rows(),
            h: None,
        }),
        Document::Xmod(cm) => serde_json::to_value(ActionWire {
            kind,
            version,
            b: group_ref(cm.b()),
            x: group_ref(cm.x()),
            act: cm.action().rows(),
            h: Some(cm.h().map().to_vec()),
        }),
        Document::Whitehead(w) => {
            let a = w.object();
            let inst = a.instance().base_instance();
            serde_json::to_value(WhiteheadWire {
                kind,
                version,
                instance: instance_name(inst).to_string(),
                b: object_ref(&functor_i(a)),
                x: object_ref(&functor_j(a)),
                act: a.action().map(GroupAction::rows),
                u: MorphismWire { j: w.u().j_map().to_vec(), i: w.u().i_map().to_vec() },
                v: MorphismWire { j: w.v().j_map().to_vec(), i: w.v().i_map().to_vec() },
            })
        }
        Document::Groupoid(cat) => serde_json::to_value(GroupoidWire {
            kind,
            version,
            c0: group_ref(cat.c0()),
            c1: group_ref(cat.c1()),
            d: cat.d().map().to_vec(),
            c: cat.c().map().to_vec(),
            e: cat.e().map().to_vec(),
            m: cat.m().to_vec(),
        }),
        Document::Report(r) => {
            serde_json::to_value(ReportWire { kind, version, checks: r.checks.clone(), summary: r.summary.clone() })
        }
        Document::Cospan(c) => serde_json::to_value(CospanWire {
            kind,
            version,
            instance: instance_name(c.cospan.y.instance()).to_string(),
            x: object_ref(&c.cospan.x),
            y: object_ref(&c.cospan.y),
            b: object_ref(&c.cospan.b),
            k: c.cospan.k.map().to_vec(),
            s: c.cospan.s.map().to_vec(),
            p: c.p.as_ref().map(|p| p.map().to_vec()),
        }),
    };
    v.expect("wire types serialize")
}

/// Canonical text of a document.
pub fn to_json(doc: &Document) -> String {
    let mut out = String::new();
    write_value(&mut out, &to_value(doc), 0);
    out.push('\n');
    out
}

/// Pretty-prints with two-space indentation; arrays without nested
/// arrays or objects are written on one line.
pub fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |out: &mut String, n: usize| out.extend(std::iter::repeat(' ').take(n));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(out, indent + 2);
                write_value(out, x, indent + 2);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(out, indent + 2);
                let _ = write!(out, "{}: ", Value::String(k.clone()));
                write_value(out, x, indent + 2);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Re-runs the invariant suite owning the document's type.
pub fn validate(doc: &Document) -> Report {
    let mut rep = Report::new();
    match doc {
        Document::Group(g) => {
            rep.push(Check::from_witness("group axioms", make_group(&g.table()).err().map(|e| e.to_string())));
        }
        Document::Hom(f) => rep.push(Check::from_witness("homomorphism", f.hom_violation())),
        Document::Action(a) => rep.push(Check::from_witness("action by automorphisms", a.violation())),
        Document::Xmod(cm) => {
            rep.push(Check::from_witness("action by automorphisms", cm.action().violation()));
            rep.push(Check::from_witness("h homomorphism", cm.h().hom_violation()));
            let v = xmod_check(cm.action(), cm.h()).err();
            rep.push(Check::from_witness("equivariance and Peiffer", v.map(|v| format!("{}: {}", v.equation, v.witness))));
        }
        Document::Whitehead(w) => {
            rep.push(Check::from_witness("u morphism", w.u().violation()));
            rep.push(Check::from_witness("v morphism", w.v().violation()));
            rep.push(Check::from_witness("Whitehead sequence", w.violation()));
        }
        Document::Groupoid(cat) => {
            rep.extend(is_internal_category(cat));
            let inv = is_groupoid(cat);
            rep.push(Check::from_witness(
                "groupoid",
                match &inv {
                    Some(g) => g.violation(),
                    None => Some("an element has no inverse".into()),
                },
            ));
        }
        Document::Report(r) => {
            rep.push(Check::from_witness(
                "report status",
                r.checks.iter().find(|c| c.status == Status::Fail).map(|c| format!("{} failed", c.name)),
            ));
            rep.push(Check::from_witness(
                "failures carry witnesses",
                r.checks.iter().find(|c| c.status == Status::Fail && c.witness.is_none()).map(|c| c.name.clone()),
            ));
        }
        Document::Cospan(c) => {
            let legs = Cospan::new(c.cospan.k.clone(), c.cospan.s.clone()).err().map(|e| e.to_string());
            rep.push(Check::from_witness("legs share codomain", legs));
            if let Some(w) = c.patch() {
                rep.push(Check::from_witness("retraction", w.err().map(|e| e.to_string())));
            }
        }
    }
    rep
}

/// The truncation as summary data: object sizes and every face and
/// degeneracy as an index array.
pub fn truncation_value(t: &SimplicialTruncation) -> Value {
    let maps = |rows: &[Vec<crate::simplicial::SimplicialMap>]| -> Value {
        Value::Array(
            rows.iter()
                .flatten()
                .map(|m| {
                    let mut o = Map::new();
                    o.insert("label".into(), Value::String(m.label.clone()));
                    o.insert("map".into(), serde_json::to_value(m.map.map()).expect("indices serialize"));
                    Value::Object(o)
                })
                .collect(),
        )
    };
    let mut o = Map::new();
    o.insert("orders".into(), serde_json::to_value(t.objects.iter().map(PointedObject::size).collect::<Vec<_>>()).unwrap());
    o.insert("faces".into(), maps(&t.faces));
    o.insert("degeneracies".into(), maps(&t.degeneracies));
    Value::Object(o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::catalog::cyclic;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(cyclic(n))
    }

    #[test]
    fn group_round_trip_is_identical() {
        let doc = Document::Group(z(2));
        let text = to_json(&doc);
        assert!(text.starts_with("{\n  \"kind\": \"group\",\n  \"version\": \"1\""));
        let back = read(&text, None).unwrap();
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn non_latin_table_is_named_violation() {
        let text = r#"{"kind":"group","version":"1","order":2,"table":[[0,1],[1,1]]}"#;
        match read(text, None) {
            Err(Error::InvariantViolation(m)) => assert!(m.starts_with("NotLatinSquare"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn version_and_syntax_errors() {
        let text = r#"{"kind":"group","version":"2","order":1,"table":[[0]]}"#;
        assert!(matches!(read(text, None), Err(Error::VersionMismatch { .. })));
        match read("{\n  \"kind\": \"group\",\n  \"version\": \"1\",\n  \"order\": 1,\n  \"table\": [[0]\n}", None) {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inversion_xmod_loads_and_validates() {
        let text = r#"{"kind":"xmod","version":"1",
            "B":{"kind":"group","version":"1","order":2,"table":[[0,1],[1,0]]},
            "X":{"kind":"group","version":"1","order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]},
            "act":[[0,1,2],[0,2,1]],"h":[0,0,0]}"#;
        let doc = read(text, None).unwrap();
        assert!(validate(&doc).all_passed());
        assert_eq!(to_json(&read(&to_json(&doc), None).unwrap()), to_json(&doc));
    }

    #[test]
    fn referenced_groups_resolve_relative_to_document() {
        let dir = tempfile::tempdir().unwrap();
        save(&Document::Group(z(4)), dir.path().join("z4.json")).unwrap();
        std::fs::write(
            dir.path().join("f.json"),
            r#"{"kind":"hom","version":"1","dom":"z4.json","cod":"z4.json","map":[0,2,0,2]}"#,
        )
        .unwrap();
        let Document::Hom(f) = load(dir.path().join("f.json")).unwrap() else { panic!() };
        assert_eq!(f.map(), &[0, 2, 0, 2]);
    }
}
