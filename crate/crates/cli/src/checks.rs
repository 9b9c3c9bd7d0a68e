//! The `paper-checks` grids: exponent inequalities, crossover consistency
//! and the structural sweeps over the catalog.

use serde_json::json;

use forcing_lab::catalog::catalog;
use forcing_lab::classify::{
    count_order_p_subgroups, is_cyclic, is_generalized_quaternion, p_class,
};
use forcing_lab::exponent::{
    base_delta_elementary_abelian, closed_form_lower_bound, crossover_report, eta0,
    AnalyticConstants, Rational,
};
use forcing_lab::group::{GroupSpec, DEFAULT_ORDER_CAP};

use crate::commands::Output;
use crate::{ConstArgs, Failure};

struct Check {
    name: &'static str,
    points: usize,
    /// First few failing points.
    failures: Vec<String>,
    failed: usize,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            points: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn point(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.points += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 3 {
                self.failures.push(what());
            }
        }
    }
}

const PRIMES: [u64; 3] = [3, 5, 7];
const ELLS: [u64; 5] = [2, 3, 5, 7, 11];
const RANKS: [u32; 2] = [2, 3];

fn grid() -> impl Iterator<Item = (u64, u64, u32, u32)> {
    PRIMES.into_iter().flat_map(|p| {
        ELLS.into_iter().flat_map(move |ell| {
            RANKS
                .into_iter()
                .flat_map(move |r| (r..=r + 3).map(move |n| (p, ell, r, n)))
        })
    })
}

fn exponent_checks(c: &AnalyticConstants) -> forcing_lab::Result<Vec<Check>> {
    let mut floor = Check::new("eta0 >= 1/(72 p^2 l)");
    let mut closed = Check::new("delta0 eta0^(n-r) >= closed-form bound");
    let mut cross = Check::new("delta_s(eta0) >= delta_b(eta0)");
    let mut implication = Check::new("max(beta,gamma) - gamma >= delta => consistent");
    for (p, ell, r, n) in grid() {
        let e = eta0(ell, p, p, c)?;
        if r == 2 && n == 2 {
            let bound = Rational::from(72 * p * p * ell).recip();
            floor.point(e >= bound, || format!("p={p} l={ell}: eta0 = {e}"));
        }
        let d = base_delta_elementary_abelian(p, r, ell, c)? * e.pow(n - r);
        let bound = closed_form_lower_bound(p, n, r, ell)?;
        closed.point(d >= bound, || {
            format!("p={p} l={ell} r={r} n={n}: {d} < {bound}")
        });
        let rep = crossover_report(&d, ell, p, p, c)?;
        cross.point(rep.consistent, || format!("p={p} l={ell} r={r} n={n}"));
        let premise = c.big_m() - c.gamma.clone() >= d;
        implication.point(!premise || rep.consistent, || {
            format!("p={p} l={ell} r={r} n={n}")
        });
    }
    Ok(vec![floor, closed, cross, implication])
}

fn structural_checks() -> forcing_lab::Result<Vec<Check>> {
    let mut hall = Check::new("unique involution <=> cyclic or quaternion (2-groups <= 64)");
    for e in catalog() {
        if !e.spec.expected_order().is_some_and(|n| n <= 64) {
            continue;
        }
        let g = e.spec.build(DEFAULT_ORDER_CAP)?;
        if g.p_group_prime() != Ok(2) {
            continue;
        }
        let unique = count_order_p_subgroups(&g, 2)? == 1;
        let expected = is_cyclic(&g) || is_generalized_quaternion(&g).is_some();
        hall.point(unique == expected, || e.name.clone());
    }
    let mut quat = Check::new("Q(n): order 2^(n+2), class n+1, center 2 (n = 1..4)");
    for n in 1..=4u32 {
        let g =
            GroupSpec::parse(&format!("preset:GenQuaternion({n})"))?.build(DEFAULT_ORDER_CAP)?;
        let ok = is_generalized_quaternion(&g) == Some(n)
            && g.order() == 1 << (n + 2)
            && p_class(&g)? == n as usize + 1
            && g.center().order() == 2;
        quat.point(ok, || format!("Q({n})"));
    }
    Ok(vec![hall, quat])
}

pub fn run(out: &Output, consts: &ConstArgs) -> Result<(), Failure> {
    let c = consts.constants()?;
    let mut checks = exponent_checks(&c)?;
    checks.extend(structural_checks()?);
    let all_ok = checks.iter().all(|k| k.failed == 0);

    if out.json {
        let rows: Vec<_> = checks
            .iter()
            .map(|k| {
                json!({
                    "check": k.name,
                    "points": k.points,
                    "failed": k.failed,
                    "examples": k.failures,
                })
            })
            .collect();
        out.json_value(&json!({
            "beta": c.beta.to_string(),
            "gamma": c.gamma.to_string(),
            "epsilon_delta": c.epsilon_delta.to_string(),
            "checks": rows,
            "passed": all_ok,
        }));
    } else {
        println!(
            "constants: beta = {}, gamma = {}, eps_delta = {}",
            c.beta, c.gamma, c.epsilon_delta
        );
        for k in &checks {
            let status = if k.failed == 0 { "PASS" } else { "FAIL" };
            println!(
                "{status}  {:<62} {:>4} points, {} failed",
                k.name, k.points, k.failed
            );
            for f in &k.failures {
                println!("        e.g. {f}");
            }
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
