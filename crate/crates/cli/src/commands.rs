use std::path::Path;

use serde_json::{json, Value};

use forcing_lab::catalog::catalog as entries;
use forcing_lab::certificate_io::{self, to_canonical_json, CertificateDocument};
use forcing_lab::classify::{is_nilpotent, sylow_decomposition, PGroupProfile};
use forcing_lab::exponent::{delta_for_nilpotent, delta_for_p_group, DeltaReport, TraceRecord};
use forcing_lab::forcing::{build_forcing_sequence, verify_certificate};
use forcing_lab::group::{FiniteGroup, GroupSpec};

use crate::{ConstArgs, Failure};

pub struct Output {
    pub json: bool,
}

impl Output {
    pub fn json_value(&self, v: &Value) {
        println!("{}", to_canonical_json(v));
    }
}

type CmdResult = Result<(), Failure>;

fn build(text: &str, cap: usize) -> forcing_lab::Result<(GroupSpec, FiniteGroup)> {
    let spec = GroupSpec::parse(text)?;
    let g = spec.build(cap)?;
    Ok((spec, g))
}

pub fn catalog(out: &Output, cap: usize) -> CmdResult {
    let mut rows = Vec::new();
    for e in entries() {
        let g = e.spec.build(cap)?;
        let profile = PGroupProfile::of(&g).ok();
        rows.push(json!({
            "name": e.name,
            "order": g.order(),
            "prime": profile.as_ref().map(|p| p.p),
            "rank": profile.as_ref().map(|p| p.rank),
            "p_class": profile.as_ref().map(|p| p.p_class),
            "notes": e.notes,
        }));
    }
    if out.json {
        out.json_value(&Value::Array(rows));
        return Ok(());
    }
    println!(
        "{:<80} {:>5} {:>3} {:>4} {:>5}  notes",
        "group", "order", "p", "rank", "class"
    );
    let dash = |v: &Value| match v {
        Value::Null => "-".to_string(),
        other => other.to_string(),
    };
    for r in &rows {
        println!(
            "{:<80} {:>5} {:>3} {:>4} {:>5}  {}",
            r["name"].as_str().unwrap(),
            r["order"],
            dash(&r["prime"]),
            dash(&r["rank"]),
            dash(&r["p_class"]),
            r["notes"].as_str().unwrap()
        );
    }
    Ok(())
}

pub fn analyze(out: &Output, text: &str, cap: usize) -> CmdResult {
    let (spec, g) = build(text, cap)?;
    let mut classes: Vec<(usize, usize)> = g
        .conjugacy_classes()
        .iter()
        .map(|c| (c.size(), c.order))
        .collect();
    classes.sort();
    let mut v = json!({
        "group": spec.to_string(),
        "order": g.order(),
        "center_order": g.center().order(),
        "class_count": classes.len(),
        "class_sizes": classes.iter().map(|c| c.0).collect::<Vec<_>>(),
        "nilpotent": is_nilpotent(&g),
    });
    match PGroupProfile::of(&g) {
        Ok(p) => {
            let series: Vec<usize> = g
                .lower_exponent_p_series()?
                .iter()
                .map(|s| s.order())
                .collect();
            v["p_group"] = json!({
                "prime": p.p,
                "n": p.n,
                "rank": p.rank,
                "p_class": p.p_class,
                "cyclic": p.is_cyclic,
                "quaternion_index": p.quaternion_index,
                "series_orders": series,
            });
        }
        Err(_) => {
            if let Ok(d) = sylow_decomposition(&g) {
                let sylow: serde_json::Map<String, Value> = d
                    .factors
                    .iter()
                    .map(|(p, h)| (p.to_string(), json!(h.order())))
                    .collect();
                v["sylow_orders"] = Value::Object(sylow);
            }
        }
    }
    if out.json {
        out.json_value(&v);
        return Ok(());
    }
    println!("group: {}", v["group"].as_str().unwrap());
    println!("order: {}", g.order());
    if let Some(p) = v.get("p_group") {
        println!("p-group: p = {}, n = {}", p["prime"], p["n"]);
        println!("generator rank: {}", p["rank"]);
        println!("p-class: {}", p["p_class"]);
        println!("cyclic: {}", p["cyclic"]);
        match p["quaternion_index"].as_u64() {
            Some(n) => println!("generalized quaternion: Q({n})"),
            None => println!("generalized quaternion: no"),
        }
        println!(
            "lower exponent-p series orders: {}",
            join(&p["series_orders"])
        );
    } else {
        println!("p-group: no");
        println!("nilpotent: {}", v["nilpotent"]);
        if let Some(Value::Object(s)) = v.get("sylow_orders") {
            let parts: Vec<String> = s.iter().map(|(p, n)| format!("{p}: {n}")).collect();
            println!("Sylow orders: {}", parts.join(", "));
        }
    }
    println!("center order: {}", g.center().order());
    println!("conjugacy classes: {}", classes.len());
    println!("class sizes: {}", join(&v["class_sizes"]));
    Ok(())
}

fn join(v: &Value) -> String {
    v.as_array()
        .map(|a| {
            a.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

pub fn forcing_seq(
    out: &Output,
    text: &str,
    path: &Path,
    ell: Option<u64>,
    consts: &ConstArgs,
    cap: usize,
) -> CmdResult {
    let (spec, g) = build(text, cap)?;
    let canonical = spec.to_string();
    let cert = build_forcing_sequence(&g, &canonical)?;
    let report = verify_certificate(&g, &cert)?;
    if !report.all_passed() {
        for f in report.failures() {
            eprintln!("FAIL {} at {:?}: {}", f.condition, f.position, f.detail);
        }
        return Err(Failure::Check);
    }
    let delta = match ell {
        Some(ell) => Some(delta_for_p_group(
            &g,
            &cert,
            ell,
            &consts.constants()?,
            &consts.overrides()?,
        )?),
        None => None,
    };
    let doc = CertificateDocument::new(cert, delta);
    certificate_io::write_file(path, &doc)
        .map_err(|e| forcing_lab::Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    if out.json {
        println!("{}", String::from_utf8(certificate_io::emit(&doc)).unwrap());
        return Ok(());
    }
    let cert = &doc.certificate;
    let orders: Vec<String> = cert.chain.iter().map(|c| c.len().to_string()).collect();
    println!("group: {canonical}");
    println!("chain orders: {}", orders.join(" > "));
    println!("steps: {}", cert.steps.len());
    for s in &cert.steps {
        println!(
            "  step {}: index {}, witness class {} of order {}, quotient order {}",
            s.index_in_chain,
            s.kernel_order,
            s.witness.class_rep,
            s.witness.class_order,
            s.quotient_order
        );
    }
    println!("verified: {} conditions pass", report.results.len());
    if let Some(d) = &doc.delta_report {
        println!("delta (ell = {}): {}", d.ell, d.delta);
    }
    println!("digest: {}", doc.digest);
    println!("wrote: {}", path.display());
    Ok(())
}

pub fn delta(out: &Output, text: &str, ell: u64, consts: &ConstArgs, cap: usize) -> CmdResult {
    let c = consts.constants()?;
    let overrides = consts.overrides()?;
    let (spec, g) = build(text, cap)?;
    let report = delta_for_nilpotent(&g, &spec.to_string(), ell, &c, &overrides)?;
    if out.json {
        println!("{}", to_canonical_json(&report));
        return Ok(());
    }
    print_delta(&report);
    Ok(())
}

fn print_delta(report: &DeltaReport) {
    println!("group: {}", report.group_spec);
    println!("ell: {}", report.ell);
    println!("delta: {}", report.delta);
    println!("trace:");
    for rec in &report.trace {
        match rec {
            TraceRecord::Base {
                prime,
                rank,
                source,
                delta,
            } => {
                println!("  base      p = {prime}, rank {rank} ({source:?}): {delta}")
            }
            TraceRecord::Extension {
                step,
                kernel_order,
                witness_order,
                eta0,
                delta_after,
                ..
            } => {
                println!(
                    "  extension step {step}, m = {kernel_order}, r = {witness_order}, eta0 = {eta0}: {delta_after}"
                )
            }
            TraceRecord::Compositum {
                left_degree,
                right_degree,
                delta,
                ..
            } => {
                println!("  compositum degrees {left_degree} and {right_degree}: {delta}")
            }
        }
    }
    if let Some(c) = &report.closed_form_check {
        println!(
            "closed form: {} ({})",
            c.predicted,
            if c.matched { "matched" } else { "MISMATCH" }
        );
    }
}

pub fn verify(out: &Output, path: &Path, cap: usize) -> CmdResult {
    let doc = certificate_io::read_file(path)?;
    let (_, g) = build(&doc.group_spec, cap)?;
    let report = verify_certificate(&g, &doc.certificate)?;
    if out.json {
        println!("{}", to_canonical_json(&report));
    } else {
        println!("group: {}", doc.group_spec);
        for r in report.failures() {
            let at = r
                .position
                .map(|p| format!(" at chain position {p}"))
                .unwrap_or_default();
            println!("FAIL {}{at}: {}", r.condition, r.detail);
        }
        let failed = report.failures().count();
        println!(
            "{} of {} conditions pass",
            report.results.len() - failed,
            report.results.len()
        );
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
