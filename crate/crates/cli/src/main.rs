//! Batch driver: enumeration, verification suites, round trips and
//! simplicial reports. Exit status is 0 iff every check passes, 1 if a
//! check fails or an input is rejected, 2 on usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use xmodkit::actionsys::whitehead::{
    boundaries, enumerate_crossed_modules, whitehead_to_xmod, xmod_to_whitehead, WhiteheadSequence,
};
use xmodkit::actionsys::ActionObject;
use xmodkit::fingroup::{catalog, FiniteGroup};
use xmodkit::gpd::{is_groupoid, roundtrip_check, roundtrip_check_gpd, wstar_check_tower, RoundTripCertificate};
use xmodkit::io::{self, Document, ReportDocument};
use xmodkit::pointedcat::{is_exact_patch, is_stable_patch, patch_retraction, stability_counterexample, PatchWitness};
use xmodkit::report::{Check, Report};
use xmodkit::simplicial::{build_tower, build_truncation, verify_identities};
use xmodkit::Error;

const MAX_FACTOR_ORDER: usize = 16;
const MAX_DEPTH: usize = 4;
const MAX_BOUND: usize = 8;
/// Pointed-set boundary searches visit `|B|^(|X|-1)` maps.
const MAX_PSET_SEARCH: usize = 1 << 20;

#[derive(Parser)]
#[command(name = "xmodkit", version, about = "Crossed modules, Whitehead sequences and internal groupoids")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Allow limits above the hard caps.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InstanceTag {
    Grp,
    Ab,
    Pset,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate Whitehead sequences (crossed modules in `grp`) for every
    /// pair of catalog objects within the limits.
    Enumerate {
        #[arg(long, value_enum, default_value_t = InstanceTag::Grp)]
        instance: InstanceTag,
        #[arg(long, default_value_t = 4)]
        max_x: usize,
        #[arg(long, default_value_t = 4)]
        max_b: usize,
    },
    /// Load a document and run its invariant suite.
    Verify { doc: PathBuf },
    /// Round-trip a crossed module or groupoid and certify the result.
    Roundtrip { doc: PathBuf },
    /// Build the cartesian tower of a crossed module or Whitehead sequence,
    /// its level-3 truncation and the identity report.
    Simplicial {
        doc: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Patch, exact-patch and (with --stable) stable-patch predicates.
    Patch {
        doc: PathBuf,
        #[arg(long)]
        stable: bool,
        #[arg(long, default_value_t = MAX_BOUND)]
        bound: usize,
    },
    /// Merge report documents into one.
    Report {
        #[arg(required = true)]
        docs: Vec<PathBuf>,
    },
}

fn cap(name: &str, value: usize, limit: usize, force: bool) -> Result<(), String> {
    if value <= limit {
        return Ok(());
    }
    if force {
        eprintln!("warning: {name} = {value} exceeds the cap {limit}; continuing because of --force");
        Ok(())
    } else {
        Err(format!("{name} = {value} exceeds the cap {limit}; pass --force to override"))
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("XMODKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let limits = match &cli.command {
        Command::Enumerate { max_x, max_b, .. } => cap("--max-x", *max_x, MAX_FACTOR_ORDER, cli.force)
            .and_then(|_| cap("--max-b", *max_b, MAX_FACTOR_ORDER, cli.force)),
        Command::Simplicial { depth, .. } => cap("--depth", *depth, MAX_DEPTH, cli.force),
        Command::Patch { bound, .. } => cap("--bound", *bound, MAX_BOUND, cli.force),
        _ => Ok(()),
    };
    if let Err(msg) = limits {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let doc = match &cli.command {
        Command::Enumerate { instance, max_x, max_b } => enumerate(*instance, *max_x, *max_b),
        Command::Verify { doc } => verify(doc),
        Command::Roundtrip { doc } => roundtrip(doc),
        Command::Simplicial { doc, depth } => simplicial(doc, *depth),
        Command::Patch { doc, stable, bound } => patch(doc, *stable, *bound),
        Command::Report { docs } => merge(docs),
    };
    let passed = doc.all_passed();
    let text = match cli.format {
        Format::Json => io::to_json(&Document::Report(doc)),
        Format::Text => render_text(&doc),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn render_text(doc: &ReportDocument) -> String {
    let mut out = doc.to_report().to_string();
    for (k, v) in &doc.summary {
        out.push_str(&format!("{k}: {v}\n"));
    }
    out.push_str(if doc.all_passed() { "status: pass\n" } else { "status: FAIL\n" });
    out
}

fn failure(name: &str, e: &Error) -> ReportDocument {
    let mut doc = ReportDocument::default();
    doc.push_report(&Report { checks: vec![Check::fail(name, e.to_string())] });
    doc
}

fn load_doc(path: &Path) -> Result<Document, ReportDocument> {
    io::load(path).map_err(|e| failure("load", &e))
}

fn instance_name(i: InstanceTag) -> &'static str {
    match i {
        InstanceTag::Grp => "grp",
        InstanceTag::Ab => "ab",
        InstanceTag::Pset => "pset",
    }
}

struct PairResult {
    x: String,
    b: String,
    count: usize,
    check: Check,
}

fn enumerate(instance: InstanceTag, max_x: usize, max_b: usize) -> ReportDocument {
    let pairs: Vec<(String, String, ActionPair)> = match instance {
        InstanceTag::Grp | InstanceTag::Ab => {
            let groups = |n| match instance {
                InstanceTag::Ab => catalog::abelian_groups_up_to(n),
                _ => catalog::groups_up_to(n),
            };
            let (xs, bs) = (groups(max_x), groups(max_b));
            xs.iter()
                .flat_map(|(xn, x)| {
                    bs.iter().map(move |(bn, b)| (xn.to_string(), bn.to_string(), ActionPair::Groups(x.clone(), b.clone())))
                })
                .collect()
        }
        InstanceTag::Pset => (1..=max_x)
            .flat_map(|x| (1..=max_b).map(move |b| (x.to_string(), b.to_string(), ActionPair::Sets(x, b))))
            .collect(),
    };
    let results: Vec<PairResult> =
        pairs.par_iter().map(|(xn, bn, pair)| enumerate_pair(instance, xn, bn, pair)).collect();
    let mut doc = ReportDocument::default();
    let mut rows = Vec::with_capacity(results.len());
    let mut total = 0;
    for r in &results {
        total += r.count;
        rows.push(json!({ "X": r.x, "B": r.b, "count": r.count }));
    }
    doc.push_report(&Report { checks: results.into_iter().map(|r| r.check).collect() });
    doc.set("instance", instance_name(instance));
    doc.set("max_x", max_x);
    doc.set("max_b", max_b);
    doc.set("pairs", rows);
    doc.set("total", total);
    doc
}

enum ActionPair {
    Groups(Arc<FiniteGroup>, Arc<FiniteGroup>),
    Sets(usize, usize),
}

/// Counts the Whitehead sequences of one pair; every sequence found must
/// survive conversion to its boundary and back.
fn enumerate_pair(instance: InstanceTag, xn: &str, bn: &str, pair: &ActionPair) -> PairResult {
    let name = format!("{xn} x {bn}");
    let outcome: Result<usize, String> = match (instance, pair) {
        (InstanceTag::Grp, ActionPair::Groups(x, b)) => enumerate_crossed_modules(x, b)
            .map_err(|e| e.to_string())
            .and_then(|cms| {
                for cm in &cms {
                    let back = xmod_to_whitehead(cm).and_then(|w| whitehead_to_xmod(&w));
                    if back.as_ref() != Ok(cm) {
                        return Err(format!("crossed module does not survive the Whitehead round trip: {back:?}"));
                    }
                }
                Ok(cms.len())
            }),
        (InstanceTag::Ab, ActionPair::Groups(x, b)) => ActionObject::ab_pair(x.clone(), b.clone())
            .map_err(|e| e.to_string())
            .map(|a| boundaries(&a).len()),
        (_, ActionPair::Sets(x, b)) => {
            let space = b.checked_pow((*x - 1) as u32).unwrap_or(usize::MAX);
            if space > MAX_PSET_SEARCH {
                Err(format!("{space} candidate boundaries exceed {MAX_PSET_SEARCH}"))
            } else {
                ActionObject::pset_pair(*x, *b).map_err(|e| e.to_string()).map(|a| boundaries(&a).len())
            }
        }
        _ => Err("instance does not match the pair".into()),
    };
    match outcome {
        Ok(count) => PairResult { x: xn.into(), b: bn.into(), count, check: Check::pass(name) },
        Err(w) => PairResult { x: xn.into(), b: bn.into(), count: 0, check: Check::fail(name, w) },
    }
}

fn verify(path: &Path) -> ReportDocument {
    match load_doc(path) {
        Ok(doc) => {
            let mut out = ReportDocument::from(&io::validate(&doc).scoped(doc.kind()));
            out.set("kind", doc.kind());
            out
        }
        Err(r) => r,
    }
}

fn roundtrip(path: &Path) -> ReportDocument {
    let doc = match load_doc(path) {
        Ok(d) => d,
        Err(r) => return r,
    };
    let cert = match &doc {
        Document::Xmod(cm) => roundtrip_check(cm),
        Document::Groupoid(cat) => match is_groupoid(cat) {
            Some(g) => roundtrip_check_gpd(&g),
            None => Err(Error::NotAGroupoid("an element has no inverse".into())),
        },
        other => Err(Error::InstanceMismatch(format!("cannot round-trip a {} document", other.kind()))),
    };
    let cert = match cert {
        Ok(c) => c,
        Err(e) => return failure("roundtrip", &e),
    };
    let mut out = ReportDocument::from(&cert.verify());
    match &cert {
        RoundTripCertificate::Xmod(c) => {
            out.set("direction", "xmod-groupoid-xmod");
            out.set("phi_x", c.phi_x.map());
            out.set("phi_b", c.phi_b.map());
            out.set("identity", c.phi_x.map().iter().enumerate().all(|(i, &v)| i == v)
                && c.phi_b.map().iter().enumerate().all(|(i, &v)| i == v));
            out.set("groupoid", io::to_value(&Document::Groupoid(c.groupoid.cat.clone())));
        }
        RoundTripCertificate::Groupoid(c) => {
            out.set("direction", "groupoid-xmod-groupoid");
            out.set("phi_0", c.phi0.map());
            out.set("phi_1", c.phi1.map());
            out.set("xmod", io::to_value(&Document::Xmod(c.xmod.clone())));
        }
    }
    out
}

fn simplicial(path: &Path, depth: usize) -> ReportDocument {
    let w: WhiteheadSequence = match load_doc(path) {
        Ok(Document::Whitehead(w)) => w,
        Ok(Document::Xmod(cm)) => match xmod_to_whitehead(&cm) {
            Ok(w) => w,
            Err(e) => return failure("whitehead", &e),
        },
        Ok(other) => {
            return failure("input", &Error::InstanceMismatch(format!("expected xmod or whitehead, found {}", other.kind())))
        }
        Err(r) => return r,
    };
    let tower = match build_tower(&w, depth) {
        Ok(t) => t,
        Err(e) => return failure("tower", &e),
    };
    let mut out = ReportDocument::from(&tower.determining_report().scoped("tower"));
    match wstar_check_tower(&tower) {
        Ok(ok) => out.push_report(&Report {
            checks: vec![Check::from_witness("tower/pullback squares", (!ok).then(|| "a square is not a pullback".into()))],
        }),
        Err(e) => out.push_report(&Report { checks: vec![Check::fail("tower/pullback squares", e.to_string())] }),
    }
    out.set("depth", depth);
    out.set("level_orders", (0..=depth).map(|n| tower.realization(n).fa.size()).collect::<Vec<_>>());
    if depth >= 3 {
        match build_truncation(&tower) {
            Ok(t) => {
                out.push_identities(&verify_identities(&t));
                out.set("truncation", io::truncation_value(&t));
            }
            Err(e) => out.push_report(&Report { checks: vec![Check::fail("truncation", e.to_string())] }),
        }
    } else {
        out.set("truncation", Value::Null);
    }
    out
}

fn patch(path: &Path, stable: bool, bound: usize) -> ReportDocument {
    let doc = match load_doc(path) {
        Ok(Document::Cospan(c)) => c,
        Ok(other) => return failure("input", &Error::InstanceMismatch(format!("expected cospan, found {}", other.kind()))),
        Err(r) => return r,
    };
    let mut rep = Report::new();
    let p = patch_retraction(&doc.cospan);
    rep.push(Check::from_witness("patch", p.is_none().then(|| "no retraction p with ps = 1, pk = 0".to_string())));
    if let (Some(given), Some(found)) = (&doc.p, &p) {
        rep.push(Check::from_witness(
            "given retraction",
            (given != found).then(|| format!("given p {:?} differs from {:?}", given.map(), found.map())),
        ));
    }
    let witness = p.and_then(|p| PatchWitness::new(doc.cospan.clone(), p).ok());
    match &witness {
        Some(w) => rep.push(Check::from_witness("exact patch", (!is_exact_patch(w)).then(|| "k is not the kernel of p".to_string()))),
        None => rep.push(Check::fail("exact patch", "not a patch")),
    }
    if stable {
        let name = format!("stable patch (bound {bound})");
        let row = match &witness {
            None => Check::fail(name, "not a patch"),
            Some(w) => match (is_stable_patch(w, bound), stability_counterexample(w, bound)) {
                (Ok(true), _) => Check::pass(name),
                (Ok(false), Ok(Some(h))) => Check::fail(name, format!("pullback along {:?} is not a patch", h.map())),
                (Ok(false), _) => Check::fail(name, "unstable"),
                (Err(e), _) => Check::fail(name, e.to_string()),
            },
        };
        rep.push(row);
    }
    ReportDocument::from(&rep)
}

fn merge(paths: &[PathBuf]) -> ReportDocument {
    let mut out = ReportDocument::default();
    for path in paths {
        let label = path.display().to_string();
        match load_doc(path) {
            Ok(Document::Report(r)) => out.push_report(&r.to_report().scoped(&label)),
            Ok(other) => out.push_report(&Report { checks: vec![Check::fail(label, format!("not a report: {}", other.kind()))] }),
            Err(r) => out.push_report(&r.to_report().scoped(&label)),
        }
    }
    out.set("documents", paths.len());
    out
}
