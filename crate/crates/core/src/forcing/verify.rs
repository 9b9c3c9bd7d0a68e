//! Independent re-check of a forcing certificate.
//!
//! Everything here works on raw element-index sets and a few table
//! primitives (`mul`, `inv`, element orders); no quotient or closure code
//! from the builder is reused for the step conditions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::forcing::builder::ForcingCertificate;
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    PGroup,
    Hypotheses,
    ChainEndpoints,
    Subgroup,
    Normality,
    IndexP,
    Centrality,
    Refinement,
    StepRecord,
    Forcing,
    NonQuaternion,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::PGroup => "p_group",
            Condition::Hypotheses => "hypotheses",
            Condition::ChainEndpoints => "chain_endpoints",
            Condition::Subgroup => "subgroup",
            Condition::Normality => "normality",
            Condition::IndexP => "index_p",
            Condition::Centrality => "centrality",
            Condition::Refinement => "refinement",
            Condition::StepRecord => "step_record",
            Condition::Forcing => "forcing",
            Condition::NonQuaternion => "non_quaternion",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub condition: Condition,
    /// Chain position the check is about; `None` for whole-group checks.
    pub position: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub results: Vec<ConditionResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn failed_conditions(&self) -> BTreeSet<Condition> {
        self.failures().map(|r| r.condition).collect()
    }

    fn record(
        &mut self,
        condition: Condition,
        position: Option<usize>,
        outcome: std::result::Result<(), String>,
    ) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, String::new()),
            Err(d) => (false, d),
        };
        self.results.push(ConditionResult {
            condition,
            position,
            passed,
            detail,
        });
    }
}

/// A chain entry as a membership mask.
struct Entry {
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl Entry {
    fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }
}

/// Cosets `xN` of a normal subset, numbered by increasing least element.
struct Cosets {
    /// Coset number of each element.
    index_of: Vec<usize>,
    /// Least element of each coset.
    reps: Vec<usize>,
}

impl Cosets {
    fn new(g: &FiniteGroup, n: &Entry) -> Self {
        let mut index_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if index_of[x] != usize::MAX {
                continue;
            }
            for &k in &n.members {
                index_of[g.mul(x, k)] = reps.len();
            }
            reps.push(x);
        }
        Cosets { index_of, reps }
    }

    fn count(&self) -> usize {
        self.reps.len()
    }

    fn members(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.index_of
            .iter()
            .enumerate()
            .filter(move |(_, &i)| i == c)
            .map(|(x, _)| x)
    }
}

/// Order of `xN` in `G/N`.
fn order_mod(g: &FiniteGroup, n: &Entry, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while !n.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

fn check_subgroup(g: &FiniteGroup, e: &Entry) -> std::result::Result<(), String> {
    if !e.contains(0) {
        return Err("identity missing".into());
    }
    for &a in &e.members {
        if !e.contains(g.inv(a)) {
            return Err(format!("not closed under inverses at element {a}"));
        }
        for &b in &e.members {
            if !e.contains(g.mul(a, b)) {
                return Err(format!("not closed: {a}*{b}"));
            }
        }
    }
    Ok(())
}

fn check_normal(g: &FiniteGroup, e: &Entry) -> std::result::Result<(), String> {
    for x in 0..g.order() {
        let xi = g.inv(x);
        for &k in &e.members {
            if !e.contains(g.mul(g.mul(x, k), xi)) {
                return Err(format!("conjugate of {k} by {x} leaves the subgroup"));
            }
        }
    }
    Ok(())
}

/// `Some(n)` when `G/N` is generalized quaternion of order `2^(n+2)`.
fn quotient_quaternion(g: &FiniteGroup, n: &Entry) -> Option<u32> {
    let cosets = Cosets::new(g, n);
    let index = cosets.count();
    let (p, k) = prime_power(index as u64)?;
    if p != 2 || k < 3 {
        return None;
    }
    let orders: Vec<usize> = cosets.reps.iter().map(|&x| order_mod(g, n, x)).collect();
    if orders.contains(&index) {
        return None;
    }
    (orders.iter().filter(|&&o| o == 2).count() == 1).then(|| k - 2)
}

pub fn verify_certificate(
    g: &FiniteGroup,
    cert: &ForcingCertificate,
) -> Result<VerificationReport> {
    let order = g.order();
    if cert.chain.len() < 2 {
        return Err(Error::MalformedCertificate(
            "chain must contain G and Phi(G)".into(),
        ));
    }
    if cert.steps.len() != cert.chain.len() - 2 {
        return Err(Error::MalformedCertificate(format!(
            "{} chain entries need {} step records, found {}",
            cert.chain.len(),
            cert.chain.len() - 2,
            cert.steps.len()
        )));
    }
    let mut entries = Vec::with_capacity(cert.chain.len());
    for (i, set) in cert.chain.iter().enumerate() {
        let mut mask = vec![false; order];
        for &x in set {
            if x >= order {
                return Err(Error::MalformedCertificate(format!(
                    "chain entry {i} references element {x}, group has order {order}"
                )));
            }
            if mask[x] {
                return Err(Error::MalformedCertificate(format!(
                    "chain entry {i} repeats element {x}"
                )));
            }
            mask[x] = true;
        }
        entries.push(Entry {
            mask,
            members: set.clone(),
        });
    }

    let mut report = VerificationReport::default();

    let p = prime_power(order as u64).map(|(p, _)| p);
    report.record(
        Condition::PGroup,
        None,
        p.map(|_| ())
            .ok_or_else(|| format!("order {order} is not a prime power")),
    );

    let trivial = Entry {
        mask: (0..order).map(|x| x == 0).collect(),
        members: vec![0],
    };
    let cyclic = (0..order).any(|x| g.element_order(x) == order);
    let quaternion = quotient_quaternion(g, &trivial);
    report.record(
        Condition::Hypotheses,
        None,
        if cyclic {
            Err("group is cyclic".into())
        } else if let Some(n) = quaternion {
            Err(format!("group is generalized quaternion Q({n})"))
        } else {
            Ok(())
        },
    );

    let last = entries.len() - 1;
    let endpoints = if entries[0].members.len() != order {
        Err("chain does not start at G".to_string())
    } else if entries[last].members != [0] {
        Err("chain does not end at the trivial subgroup".to_string())
    } else {
        match p.map(|p| g.frattini_p(p)) {
            Some(Ok(phi)) if phi.members() == entries[1].members.as_slice() => Ok(()),
            Some(Ok(_)) => Err("second chain entry is not the Frattini subgroup".to_string()),
            _ => Err("Frattini subgroup unavailable".to_string()),
        }
    };
    report.record(Condition::ChainEndpoints, None, endpoints);

    let mut sound = Vec::with_capacity(entries.len());
    for (i, e) in entries.iter().enumerate() {
        let sub = check_subgroup(g, e);
        let ok_sub = sub.is_ok();
        report.record(Condition::Subgroup, Some(i), sub);
        let normal = if ok_sub {
            check_normal(g, e)
        } else {
            Err("not a subgroup".into())
        };
        sound.push(normal.is_ok());
        report.record(Condition::Normality, Some(i), normal);
    }

    if p.is_some() {
        match g.lower_exponent_p_series() {
            Ok(series) => {
                let missing: Vec<usize> = series
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !cert.chain.iter().any(|c| c.as_slice() == s.members()))
                    .map(|(j, _)| j)
                    .collect();
                report.record(
                    Condition::Refinement,
                    None,
                    if missing.is_empty() {
                        Ok(())
                    } else {
                        Err(format!("series terms {missing:?} absent from the chain"))
                    },
                );
            }
            Err(e) => report.record(Condition::Refinement, None, Err(e.to_string())),
        }
    }

    // Step checks still run for a non-p-group, against the recorded kernel
    // order, so a forged step is reported at the condition it breaks.
    for (s, step) in cert.steps.iter().enumerate() {
        let i = s + 1;
        let p = p.unwrap_or(step.kernel_order);
        {
            let (upper, lower) = (&entries[i], &entries[i + 1]);

            let index = if !lower.members.iter().all(|&x| upper.contains(x)) {
                Err(format!("entry {} is not contained in entry {i}", i + 1))
            } else if upper.members.len() != p as usize * lower.members.len() {
                Err(format!(
                    "index {} / {} is not {p}",
                    upper.members.len(),
                    lower.members.len()
                ))
            } else {
                Ok(())
            };
            report.record(Condition::IndexP, Some(i), index);

            let both_sound = sound[i] && sound[i + 1];
            let central = if !both_sound {
                Err("chain entries are not normal subgroups".into())
            } else {
                upper
                    .members
                    .iter()
                    .find_map(|&x| {
                        (0..order)
                            .find(|&y| !lower.contains(g.commutator(x, y)))
                            .map(|y| format!("[{x},{y}] is not in entry {}", i + 1))
                    })
                    .map_or(Ok(()), Err)
            };
            report.record(Condition::Centrality, Some(i), central);

            let record = if step.index_in_chain != i {
                Err(format!(
                    "index_in_chain is {}, expected {i}",
                    step.index_in_chain
                ))
            } else if step.kernel_order != p {
                Err(format!(
                    "kernel_order is {}, expected {p}",
                    step.kernel_order
                ))
            } else if step.quotient_order * lower.members.len() != order {
                Err(format!(
                    "quotient_order {} does not match",
                    step.quotient_order
                ))
            } else if step.quotient_is_quaternion {
                Err("step is flagged as quaternion".into())
            } else {
                Ok(())
            };
            report.record(Condition::StepRecord, Some(i), record);

            let forcing = if both_sound {
                check_forcing(g, upper, lower, step)
            } else {
                Err("chain entries are not normal subgroups".into())
            };
            report.record(Condition::Forcing, Some(i), forcing);
        }
    }

    for (i, e) in entries.iter().enumerate().skip(1) {
        let outcome = if !sound[i] {
            Err("not a normal subgroup".to_string())
        } else {
            match quotient_quaternion(g, e) {
                Some(n) => Err(format!("quotient by entry {i} is Q({n})")),
                None => Ok(()),
            }
        };
        report.record(Condition::NonQuaternion, Some(i), outcome);
    }

    Ok(report)
}

/// Brute-force forcing check of `G/lower -> G/upper` over every member of
/// the witness class and every element of every fiber.
fn check_forcing(
    g: &FiniteGroup,
    upper: &Entry,
    lower: &Entry,
    step: &crate::forcing::builder::ForcingStep,
) -> std::result::Result<(), String> {
    let w = &step.witness;
    let cosets = Cosets::new(g, upper);
    if w.class_rep >= cosets.count() {
        return Err(format!(
            "witness {} out of range for {} cosets",
            w.class_rep,
            cosets.count()
        ));
    }
    if w.class_rep == 0 {
        return Err("witness is the identity class".into());
    }
    let rep = cosets.reps[w.class_rep];
    let class: BTreeSet<usize> = (0..g.order())
        .map(|x| cosets.index_of[g.mul(g.mul(x, rep), g.inv(x))])
        .collect();
    if *class.iter().next().unwrap() != w.class_rep {
        return Err(format!(
            "witness {} is not the least member of its class",
            w.class_rep
        ));
    }
    if class.len() != w.checked_fiber_sizes.len() {
        return Err(format!(
            "class has {} members, witness lists {}",
            class.len(),
            w.checked_fiber_sizes.len()
        ));
    }
    let fiber_size = upper.members.len() / lower.members.len();
    for (&c, &listed) in class.iter().zip(&w.checked_fiber_sizes) {
        let c_order = order_mod(g, upper, cosets.reps[c]);
        if c_order != w.class_order {
            return Err(format!(
                "class member {c} has order {c_order}, witness says {}",
                w.class_order
            ));
        }
        if listed != fiber_size {
            return Err(format!(
                "fiber over {c} has {fiber_size} elements, witness lists {listed}"
            ));
        }
        if let Some(x) = cosets
            .members(c)
            .find(|&x| order_mod(g, lower, x) != c_order)
        {
            return Err(format!(
                "element {x} over class member {c} has order {} modulo entry below, expected {c_order}",
                order_mod(g, lower, x)
            ));
        }
    }
    Ok(())
}
