//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use forcing_lab::catalog::catalog;
use forcing_lab::certificate_io::{emit, parse, CertificateDocument};
use forcing_lab::classify::{
    count_order_p_subgroups, generator_rank, is_cyclic, is_generalized_quaternion, p_class,
};
use forcing_lab::exponent::AnalyticConstants;
use forcing_lab::exponent::{
    base_delta_elementary_abelian, closed_form_lower_bound, compositum_fold, crossover_report,
    delta_for_nilpotent, delta_for_p_group, eta0, BaseOverrides, Rational,
};
use forcing_lab::forcing::{build_forcing_sequence, is_forcing, verify_certificate, Condition};
use forcing_lab::group::{FiniteGroup, GroupSpec, DEFAULT_ORDER_CAP};
use forcing_lab::Error;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(spec: &str) -> FiniteGroup {
    GroupSpec::parse(spec)
        .unwrap()
        .build(DEFAULT_ORDER_CAP)
        .unwrap()
}

/// Catalog p-groups, with their spec text, up to the given order.
fn catalog_p_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    catalog()
        .into_iter()
        .filter(|e| {
            e.spec
                .expected_order()
                .is_some_and(|n| n as usize <= max_order)
        })
        .map(|e| (e.name.clone(), e.spec.build(DEFAULT_ORDER_CAP).unwrap()))
        .filter(|(_, g)| g.p_group_prime().is_ok())
        .collect()
}

fn corpus() -> Vec<(String, FiniteGroup)> {
    catalog_p_groups(256)
        .into_iter()
        .filter(|(_, g)| !is_cyclic(g) && is_generalized_quaternion(g).is_none())
        .collect()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn quaternion_sweep() -> Outcome {
    for n in 1..=4u32 {
        let g = build(&format!("preset:GenQuaternion({n})"));
        ensure(is_generalized_quaternion(&g) == Some(n), || {
            format!("Q({n}) not detected")
        })?;
        ensure(g.order() == 1 << (n + 2), || {
            format!("Q({n}) has order {}", g.order())
        })?;
        let c = p_class(&g).unwrap();
        ensure(c == n as usize + 1, || format!("Q({n}) has p-class {c}"))?;
        ensure(g.center().order() == 2, || {
            format!("Q({n}) center has order {}", g.center().order())
        })?;
    }
    Ok("Q(1)..Q(4)".into())
}

fn hall_sweep() -> Outcome {
    let groups: Vec<_> = catalog_p_groups(64)
        .into_iter()
        .filter(|(_, g)| g.p_group_prime() == Ok(2))
        .collect();
    for (name, g) in &groups {
        let unique = count_order_p_subgroups(g, 2).unwrap() == 1;
        let expected = is_cyclic(g) || is_generalized_quaternion(g).is_some();
        ensure(unique == expected, || {
            format!("{name}: unique involution = {unique}")
        })?;
    }
    Ok(format!("{} 2-groups", groups.len()))
}

fn forcing_corpus() -> Outcome {
    let corpus = corpus();
    for (name, g) in &corpus {
        let cert = build_forcing_sequence(g, name).map_err(|e| format!("{name}: {e}"))?;
        let (_, n) = forcing_lab::arith::prime_power(g.order() as u64).unwrap();
        let r = generator_rank(g).unwrap();
        ensure(cert.length() == (n - r) as usize, || {
            format!(
                "{name}: chain length {} but n - r = {}",
                cert.length(),
                n - r
            )
        })?;
        let report = verify_certificate(g, &cert).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.all_passed(), || {
            format!("{name}: failed {:?}", report.failed_conditions())
        })?;
    }
    Ok(format!("{} groups", corpus.len()))
}

fn negative_controls() -> Outcome {
    for k in 1..=6 {
        let g = build(&format!("preset:Cyclic({})", 1u64 << k));
        let got = build_forcing_sequence(&g, "").unwrap_err();
        ensure(got == Error::CyclicGroup { order: 1 << k }, || {
            format!("C_2^{k}: {got:?}")
        })?;
    }
    for n in 1..=4 {
        let g = build(&format!("preset:GenQuaternion({n})"));
        let got = build_forcing_sequence(&g, "").unwrap_err();
        ensure(got == Error::QuaternionGroup { n }, || {
            format!("Q({n}): {got:?}")
        })?;
    }
    let c6 = build("preset:Cyclic(6)");
    let two = c6.subgroup_closure((0..6).filter(|&x| c6.element_order(x) == 2));
    let qm = c6.quotient(&two).unwrap();
    ensure(
        qm.target().order() == 3 && is_forcing(&qm).is_none(),
        || "C6 -> C3 reported forcing".into(),
    )?;
    let q8 = build("preset:GenQuaternion(1)");
    let qm = q8.quotient(&q8.center()).unwrap();
    ensure(
        qm.target().order() == 4 && is_forcing(&qm).is_none(),
        || "Q8 -> V4 reported forcing".into(),
    )?;
    Ok("cyclic, quaternion, C6->C3, Q8->V4".into())
}

fn exponent_exactness() -> Outcome {
    let c = AnalyticConstants::default();
    let d0 = base_delta_elementary_abelian(3, 2, 5, &c).unwrap();
    ensure(d0 == q(1, 1860), || format!("delta0(3,5) = {d0}"))?;
    let e = eta0(5, 3, 3, &c).unwrap();
    ensure(e == q(1, 2103), || format!("eta0(5,3,3) = {e}"))?;
    let g = build("preset:Heisenberg(3)");
    let cert = build_forcing_sequence(&g, "preset:Heisenberg(3)").unwrap();
    let rep = delta_for_p_group(&g, &cert, 5, &c, &BaseOverrides::new()).unwrap();
    ensure(rep.delta == q(1, 3911580), || {
        format!("delta(Heis27, 5) = {}", rep.delta)
    })?;
    let matched = rep.closed_form_check.as_ref().is_some_and(|k| k.matched);
    ensure(matched, || "closed form not matched".into())?;
    Ok("1/1860, 1/2103, 1/3911580".into())
}

struct GridPoint {
    p: u64,
    ell: u64,
    r: u32,
    n: u32,
}

fn grid() -> impl Iterator<Item = GridPoint> {
    [3u64, 5, 7].into_iter().flat_map(|p| {
        [2u64, 3, 5, 7, 11].into_iter().flat_map(move |ell| {
            [2u32, 3]
                .into_iter()
                .flat_map(move |r| (r..=r + 3).map(move |n| GridPoint { p, ell, r, n }))
        })
    })
}

fn inequality_grid() -> Outcome {
    let c = AnalyticConstants::default();
    let mut count = 0;
    for GridPoint { p, ell, r, n } in grid() {
        let e = eta0(ell, p, p, &c).unwrap();
        let floor = Rational::from(72 * p * p * ell).recip();
        ensure(e >= floor, || {
            format!("eta0 < 1/(72 p^2 l) at p={p}, l={ell}")
        })?;
        let d = base_delta_elementary_abelian(p, r, ell, &c).unwrap() * e.pow(n - r);
        let bound = closed_form_lower_bound(p, n, r, ell).unwrap();
        ensure(d >= bound, || {
            format!("closed form fails at p={p}, l={ell}, r={r}, n={n}")
        })?;
        count += 1;
    }
    Ok(format!("{count} points"))
}

fn crossover_grid() -> Outcome {
    let c = AnalyticConstants::default();
    let mut count = 0;
    for GridPoint { p, ell, r, n } in grid() {
        let d = base_delta_elementary_abelian(p, r, ell, &c).unwrap()
            * eta0(ell, p, p, &c).unwrap().pow(n - r);
        let rep = crossover_report(&d, ell, p, p, &c).unwrap();
        ensure(rep.consistent, || {
            format!("inconsistent at p={p}, l={ell}, r={r}, n={n}")
        })?;
        let premise = c.big_m() - c.gamma.clone() >= d;
        ensure(!premise || rep.consistent, || "implication failed".into())?;
        count += 1;
    }
    Ok(format!("{count} points"))
}

fn fold_order() -> Outcome {
    let c = AnalyticConstants::default();
    let mut overrides = BaseOverrides::new();
    overrides.insert(2, q(1, 100));
    let factors: Vec<(Rational, u64)> = [
        "preset:ElemAbelian(2,2)",
        "preset:Heisenberg(3)",
        "preset:ElemAbelian(5,2)",
    ]
    .iter()
    .map(|s| {
        let g = build(s);
        let cert = build_forcing_sequence(&g, s).unwrap();
        (
            delta_for_p_group(&g, &cert, 7, &c, &overrides)
                .unwrap()
                .delta,
            g.order() as u64,
        )
    })
    .collect();
    let orders = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let results: Vec<Rational> = orders
        .iter()
        .map(|o| compositum_fold(&o.map(|i| factors[i].clone())).unwrap().0)
        .collect();
    ensure(results.iter().all(|d| *d == results[0]), || {
        format!("fold orders differ: {results:?}")
    })?;

    let spec = "product:preset:ElemAbelian(2,2)|preset:ElemAbelian(3,2)|preset:ElemAbelian(5,2)";
    let three = delta_for_nilpotent(&build(spec), spec, 7, &c, &overrides).unwrap();
    let parts: Vec<(Rational, u64)> = [
        "preset:ElemAbelian(2,2)",
        "preset:ElemAbelian(3,2)",
        "preset:ElemAbelian(5,2)",
    ]
    .iter()
    .map(|s| {
        let g = build(s);
        let cert = build_forcing_sequence(&g, s).unwrap();
        (
            delta_for_p_group(&g, &cert, 7, &c, &overrides)
                .unwrap()
                .delta,
            g.order() as u64,
        )
    })
    .collect();
    for o in orders {
        let d = compositum_fold(&o.map(|i| parts[i].clone())).unwrap().0;
        ensure(d == three.delta, || {
            format!("nilpotent product {} vs fold {d}", three.delta)
        })?;
    }
    Ok(format!("6 orders agree on {}", results[0]))
}

fn series_compatibility() -> Outcome {
    let groups: Vec<_> = catalog_p_groups(256)
        .into_iter()
        .filter(|(_, g)| p_class(g).unwrap() >= 2)
        .take(20)
        .collect();
    ensure(groups.len() == 20, || {
        format!("only {} groups of class >= 2", groups.len())
    })?;
    let mut checked = 0;
    for (name, g) in &groups {
        let series = g.lower_exponent_p_series().unwrap();
        for qm in g.ancestor_quotients().unwrap() {
            let own = qm.target().lower_exponent_p_series().unwrap();
            for (j, term) in series.iter().enumerate() {
                let image = qm.image(term);
                let expected = own
                    .get(j)
                    .cloned()
                    .unwrap_or_else(|| qm.target().trivial_subgroup());
                ensure(image == expected, || {
                    format!(
                        "{name}: image of G_{j} differs in G/{}",
                        qm.kernel().order()
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("20 groups, {checked} terms"))
}

/// `(spec, digest)` pairs recorded when the schema was fixed.
const GOLDEN: &str = include_str!("data/golden_digests.txt");

fn serialization() -> Outcome {
    let golden: std::collections::BTreeMap<&str, &str> = GOLDEN
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_once(' ').expect("`digest spec` lines"))
        .map(|(d, s)| (s, d))
        .collect();
    let corpus = corpus();
    let mut tampered = 0;
    for (name, g) in &corpus {
        let cert = build_forcing_sequence(g, name).unwrap();
        let doc = CertificateDocument::new(cert.clone(), None);
        let bytes = emit(&doc);
        let back = parse(&bytes).map_err(|e| format!("{name}: {e}"))?;
        ensure(back == doc && emit(&back) == bytes, || {
            format!("{name}: round trip differs")
        })?;
        match golden.get(name.as_str()) {
            Some(d) => ensure(*d == doc.digest, || {
                format!("{name}: digest {} != golden {d}", doc.digest)
            })?,
            None => return Err(format!("{name}: no golden digest")),
        }

        let mut flipped: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        let x = flipped["certificate"]["chain"][1][0].as_u64().unwrap();
        flipped["certificate"]["chain"][1][0] = (x + 1).into();
        let res = parse(&serde_json::to_vec(&flipped).unwrap());
        ensure(matches!(res, Err(Error::DigestMismatch { .. })), || {
            format!("{name}: flipped index accepted")
        })?;

        if !cert.steps.is_empty() {
            let mut bad = cert.clone();
            bad.steps[0].witness.class_order += 1;
            let rep = verify_certificate(g, &bad).unwrap();
            ensure(
                rep.failed_conditions().contains(&Condition::Forcing),
                || format!("{name}: forged witness passed"),
            )?;

            let mut bad = cert.clone();
            let last = bad.chain.len() - 2;
            let non_normal = (0..g.order())
                .map(|x| g.subgroup_closure([x]))
                .find(|h| !g.is_normal(h));
            if let Some(h) = non_normal {
                bad.chain[last] = h.members().to_vec();
                let rep = verify_certificate(g, &bad).unwrap();
                ensure(
                    rep.failed_conditions().contains(&Condition::Normality),
                    || format!("{name}: non-normal entry passed"),
                )?;
            }
            tampered += 1;
        }
    }
    Ok(format!(
        "{} documents, {tampered} tamper probes",
        corpus.len()
    ))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        (
            "generalized quaternion sweep",
            Duration::from_secs(1),
            quaternion_sweep,
        ),
        (
            "Hall characterization sweep",
            Duration::from_secs(10),
            hall_sweep,
        ),
        (
            "forcing sequence corpus",
            Duration::from_secs(60),
            forcing_corpus,
        ),
        (
            "negative controls",
            Duration::from_secs(1),
            negative_controls,
        ),
        (
            "exponent exactness",
            Duration::from_secs(1),
            exponent_exactness,
        ),
        ("inequality grid", Duration::from_secs(1), inequality_grid),
        (
            "crossover consistency",
            Duration::from_secs(1),
            crossover_grid,
        ),
        ("compositum fold order", Duration::from_secs(1), fold_order),
        (
            "series compatibility",
            Duration::from_secs(30),
            series_compatibility,
        ),
        ("serialization", Duration::from_secs(10), serialization),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = match result {
            Ok(_) if took > *limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
