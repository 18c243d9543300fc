use std::sync::Arc;

use proptest::prelude::*;
use xmodkit::actionsys::whitehead::{boundaries, enumerate_crossed_modules, whitehead_from_h, xmod_to_whitehead};
use xmodkit::actionsys::{enumerate_actions, test_action_objects, ActionInstance};
use xmodkit::fingroup::{catalog, enumerate_homs};
use xmodkit::gpd::{enumerate_internal_categories, is_internal_category};
use xmodkit::io::{load, read, save, to_json, CospanDocument, Document, ReportDocument};
use xmodkit::pointedcat::{all_pointed_maps, coproduct_patch, point_pullback, PointedObject};
use xmodkit::simplicial::{build_tower, build_truncation, verify_identities};
use xmodkit::Error;

/// At least one small document of every kind.
fn corpus() -> Vec<Document> {
    let gs = catalog::groups_up_to(4);
    let mut docs: Vec<Document> = catalog::groups_up_to(8).into_iter().map(|(_, g)| Document::Group(g)).collect();
    for (_, x) in &gs {
        for (_, b) in &gs {
            docs.extend(enumerate_homs(x, b).into_iter().take(2).map(Document::Hom));
            docs.extend(enumerate_actions(b, x).into_iter().take(2).map(Document::Action));
            for cm in enumerate_crossed_modules(x, b).unwrap().into_iter().take(2) {
                docs.push(Document::Whitehead(xmod_to_whitehead(&cm).unwrap()));
                docs.push(Document::Xmod(cm));
            }
        }
    }
    for inst in [ActionInstance::AbPairs, ActionInstance::PSetPairs] {
        for a in test_action_objects(inst, 3) {
            for h in boundaries(&a).into_iter().take(2) {
                docs.push(Document::Whitehead(whitehead_from_h(&a, &h).unwrap()));
            }
        }
    }
    docs.extend(enumerate_internal_categories(6).unwrap().into_iter().map(Document::Groupoid));
    for x in 1..=3 {
        for b in 1..=3 {
            for obj in [PointedObject::PSet, |n| PointedObject::Ab(Arc::new(catalog::cyclic(n)))] {
                let w = coproduct_patch(&obj(x), &obj(b)).unwrap();
                docs.push(Document::Cospan(CospanDocument { cospan: w.cospan.clone(), p: Some(w.p.clone()) }));
            }
            let w = coproduct_patch(&PointedObject::PSet(x), &PointedObject::PSet(b)).unwrap();
            for h in all_pointed_maps(&PointedObject::PSet(2), &PointedObject::PSet(b)) {
                let (_, c) = point_pullback(&w, &h).unwrap();
                docs.push(Document::Cospan(CospanDocument { cospan: c, p: None }));
            }
        }
    }
    let z2 = Arc::new(catalog::cyclic(2));
    for cm in enumerate_crossed_modules(&z2, &z2).unwrap() {
        let t = build_tower(&xmod_to_whitehead(&cm).unwrap(), 3).unwrap();
        let mut rep = ReportDocument::default();
        rep.push_identities(&verify_identities(&build_truncation(&t).unwrap()));
        rep.set("depth", 3);
        rep.set("level_orders", [2, 4, 8, 16]);
        docs.push(Document::Report(rep));
    }
    docs
}

#[test]
fn corpus_covers_every_kind() {
    let mut kinds: Vec<&str> = corpus().iter().map(Document::kind).collect();
    kinds.sort_unstable();
    kinds.dedup();
    assert_eq!(kinds, ["action", "cospan", "group", "groupoid", "hom", "report", "whitehead", "xmod"]);
}

fn document() -> impl Strategy<Value = Document> {
    let docs = corpus();
    (0..docs.len()).prop_map(move |i| docs[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]
    #[test]
    fn save_then_load_is_byte_identical(doc in document()) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("doc.json");
        save(&doc, &path).unwrap();
        let first = std::fs::read(&path).unwrap();
        let back = load(&path).unwrap();
        prop_assert_eq!(back.kind(), doc.kind());
        save(&back, &path).unwrap();
        prop_assert_eq!(std::fs::read(&path).unwrap(), first);
    }
}

#[test]
fn equal_values_serialize_identically() {
    let a = to_json(&Document::Group(Arc::new(catalog::cyclic(6))));
    let b = to_json(&Document::Group(Arc::new(catalog::cyclic(6))));
    assert_eq!(a, b);
    let s3 = || Arc::new(catalog::symmetric3());
    let z2 = || Arc::new(catalog::cyclic(2));
    let first: Vec<String> =
        enumerate_crossed_modules(&z2(), &s3()).unwrap().into_iter().map(|c| to_json(&Document::Xmod(c))).collect();
    let second: Vec<String> =
        enumerate_crossed_modules(&z2(), &s3()).unwrap().into_iter().map(|c| to_json(&Document::Xmod(c))).collect();
    assert_eq!(first, second);
}

#[test]
fn syntax_errors_report_position() {
    let text = "{\n  \"kind\": \"group\",\n  \"version\": \"1\"\n  \"order\": 1,\n  \"table\": [[0]]\n}\n";
    match read(text, None) {
        Err(Error::ParseError { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    let text = "{\n  \"kind\": \"group\",\n  \"version\": \"1\",\n  \"order\": 1,\n  \"colour\": 3,\n  \"table\": [[0]]\n}\n";
    match read(text, None) {
        Err(Error::ParseError { line, message, .. }) => assert!(line >= 5 && message.contains("colour"), "{line} {message}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn header_errors() {
    let cases = [
        (r#"{"kind":"group","version":"7","order":1,"table":[[0]]}"#, "VersionMismatch"),
        (r#"{"kind":"group","order":1,"table":[[0]]}"#, "ParseError"),
        (r#"{"kind":"monoid","version":"1","order":1,"table":[[0]]}"#, "ParseError"),
        (r#"{"version":"1","order":1,"table":[[0]]}"#, "ParseError"),
        (r#"[1, 2]"#, "ParseError"),
    ];
    for (text, name) in cases {
        assert_eq!(read(text, None).unwrap_err().name(), name, "{text}");
    }
}

#[test]
fn missing_group_reference_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{"kind":"hom","version":"1","dom":"nowhere.json","cod":"nowhere.json","map":[0]}"#;
    assert_eq!(read(text, Some(dir.path())).unwrap_err().name(), "Io");
}

#[test]
fn invalid_structure_is_rejected_with_a_name() {
    let text = r#"{"kind":"hom","version":"1",
        "dom":{"kind":"group","version":"1","order":2,"table":[[0,1],[1,0]]},
        "cod":{"kind":"group","version":"1","order":2,"table":[[0,1],[1,0]]},
        "map":[1,0]}"#;
    match read(text, None) {
        Err(Error::InvariantViolation(msg)) => assert!(msg.contains(':'), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn corrupted_groupoid_names_the_failing_row() {
    let cat = enumerate_internal_categories(4).unwrap().into_iter().find(|c| c.c1().order() == 4).unwrap();
    let mut m = cat.m().to_vec();
    let last = m.len() - 1;
    m[last] = (m[last] + 1) % 4;
    let bad = cat.with_composition(m).unwrap();
    assert!(!is_internal_category(&bad).all_passed());
    let text = to_json(&Document::Groupoid(bad));
    match read(&text, None) {
        Err(Error::InvariantViolation(msg)) => assert!(msg.starts_with("translation row") || msg.starts_with("m "), "{msg}"),
        other => panic!("{other:?}"),
    }
}
