use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{is_cyclic, is_generalized_quaternion, sylow_decomposition, PGroupProfile};
use crate::error::{Error, Result};
use crate::exponent::formulas::{
    base_delta_elementary_abelian, compositum_delta, eta0, extend_delta, AnalyticConstants,
};
use crate::exponent::Rational;
use crate::forcing::{build_forcing_sequence, verify_certificate, ForcingCertificate};
use crate::group::FiniteGroup;

/// Base exponents supplied by hand, keyed by prime.
pub type BaseOverrides = BTreeMap<u64, Rational>;

/// Reads `{"2": "1/100", ...}`.
pub fn parse_base_overrides(json: &str) -> Result<BaseOverrides> {
    let raw: BTreeMap<String, Rational> = serde_json::from_str(json)
        .map_err(|e| Error::InvalidArgument(format!("base override file: {e}")))?;
    let mut out = BaseOverrides::new();
    for (k, v) in raw {
        let p: u64 = k
            .parse()
            .ok()
            .filter(|&p| crate::arith::is_prime(p))
            .ok_or_else(|| Error::InvalidArgument(format!("override key `{k}` is not a prime")))?;
        if !v.is_positive() || v >= Rational::new(1, 2) {
            return Err(Error::InvalidArgument(format!(
                "override for {p} must lie in (0, 1/2), got {v}"
            )));
        }
        out.insert(p, v);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseSource {
    Formula,
    Override,
}

/// One applied rule. Read as a stack program: `base` pushes, `extension`
/// rewrites the top, `compositum` pops two and pushes their merge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum TraceRecord {
    Base {
        prime: u64,
        rank: u32,
        source: BaseSource,
        delta: Rational,
    },
    Extension {
        step: usize,
        kernel_order: u64,
        witness_order: u64,
        eta0: Rational,
        delta_before: Rational,
        delta_after: Rational,
    },
    Compositum {
        left_degree: u64,
        right_degree: u64,
        left: Rational,
        right: Rational,
        delta: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    pub predicted: Rational,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub group_spec: String,
    pub ell: u64,
    pub delta: Rational,
    pub trace: Vec<TraceRecord>,
    pub closed_form_check: Option<ClosedFormCheck>,
}

/// Exponent of a p-group along a verified forcing certificate.
pub fn delta_for_p_group(
    g: &FiniteGroup,
    cert: &ForcingCertificate,
    ell: u64,
    consts: &AnalyticConstants,
    overrides: &BaseOverrides,
) -> Result<DeltaReport> {
    let profile = PGroupProfile::of(g)?;
    let report = verify_certificate(g, cert)?;
    if !report.all_passed() {
        let failed: Vec<String> = report
            .failed_conditions()
            .iter()
            .map(|c| c.to_string())
            .collect();
        return Err(Error::UnverifiedCertificate(failed.join(", ")));
    }
    let p = profile.p;
    let (base, source) = match overrides.get(&p) {
        Some(d) => (d.clone(), BaseSource::Override),
        None => (
            base_delta_elementary_abelian(p, profile.rank, ell, consts)?,
            BaseSource::Formula,
        ),
    };
    let mut trace = vec![TraceRecord::Base {
        prime: p,
        rank: profile.rank,
        source,
        delta: base.clone(),
    }];
    let mut delta = base.clone();
    for step in &cert.steps {
        let r = step.witness.class_order as u64;
        let eta = eta0(ell, step.kernel_order, r, consts)?;
        let next = extend_delta(&delta, &eta);
        trace.push(TraceRecord::Extension {
            step: step.index_in_chain,
            kernel_order: step.kernel_order,
            witness_order: r,
            eta0: eta,
            delta_before: delta,
            delta_after: next.clone(),
        });
        delta = next;
    }

    let closed_form_check = if cert.steps.iter().all(|s| s.witness.class_order as u64 == p) {
        let predicted = &base * &eta0(ell, p, p, consts)?.pow(profile.n - profile.rank);
        Some(ClosedFormCheck {
            matched: predicted == delta,
            predicted,
        })
    } else {
        None
    };

    Ok(DeltaReport {
        group_spec: cert.group_spec.clone(),
        ell,
        delta,
        trace,
        closed_form_check,
    })
}

/// Exponent of a nilpotent group: per-Sylow reports merged left to right
/// (increasing prime) with regular degrees `|G_p|`.
pub fn delta_for_nilpotent(
    g: &FiniteGroup,
    group_spec: &str,
    ell: u64,
    consts: &AnalyticConstants,
    overrides: &BaseOverrides,
) -> Result<DeltaReport> {
    if g.order() == 1 {
        return Err(Error::InvalidArgument(
            "trivial group has no exponent".into(),
        ));
    }
    let decomposition = sylow_decomposition(g)?;
    // every factor is checked before any exponent is computed, so the
    // hypothesis error wins over per-factor errors such as EvenPrimeBase
    let mut sylows = Vec::new();
    for (&p, h) in &decomposition.factors {
        let sylow = if h.order() == g.order() {
            None
        } else {
            Some(g.subgroup_as_group(h))
        };
        let s = sylow.as_ref().unwrap_or(g);
        if is_cyclic(s) {
            return Err(Error::SylowHypothesisViolated {
                p,
                reason: format!("Sylow subgroup of order {} is cyclic", s.order()),
            });
        }
        if let Some(n) = is_generalized_quaternion(s) {
            return Err(Error::SylowHypothesisViolated {
                p,
                reason: format!("Sylow subgroup is Q({n})"),
            });
        }
        sylows.push(sylow);
    }
    let mut parts = Vec::new();
    for sylow in &sylows {
        let s = sylow.as_ref().unwrap_or(g);
        let cert = build_forcing_sequence(s, group_spec)?;
        parts.push((
            delta_for_p_group(s, &cert, ell, consts, overrides)?,
            s.order() as u64,
        ));
    }

    if parts.len() == 1 {
        let (mut report, _) = parts.pop().unwrap();
        report.group_spec = group_spec.to_string();
        return Ok(report);
    }

    let mut iter = parts.into_iter();
    let (first, mut degree) = iter.next().unwrap();
    let mut trace = first.trace;
    let mut delta = first.delta;
    for (part, m) in iter {
        trace.extend(part.trace);
        let merged = compositum_delta(&delta, degree, &part.delta, m);
        trace.push(TraceRecord::Compositum {
            left_degree: degree,
            right_degree: m,
            left: delta,
            right: part.delta,
            delta: merged.clone(),
        });
        delta = merged;
        degree *= m;
    }
    Ok(DeltaReport {
        group_spec: group_spec.to_string(),
        ell,
        delta,
        trace,
        closed_form_check: None,
    })
}

/// Recomputes every record from its inputs and returns the final exponent,
/// which must equal `report.delta`. Override bases are taken as recorded.
pub fn replay(report: &DeltaReport, consts: &AnalyticConstants) -> Result<Rational> {
    let mismatch = |i: usize, what: &str| Error::TraceMismatch(format!("record {i}: {what}"));
    let mut stack: Vec<Rational> = Vec::new();
    for (i, rec) in report.trace.iter().enumerate() {
        match rec {
            TraceRecord::Base {
                prime,
                rank,
                source,
                delta,
            } => {
                if *source == BaseSource::Formula
                    && base_delta_elementary_abelian(*prime, *rank, report.ell, consts)? != *delta
                {
                    return Err(mismatch(i, "base value"));
                }
                stack.push(delta.clone());
            }
            TraceRecord::Extension {
                kernel_order,
                witness_order,
                eta0: eta,
                delta_before,
                delta_after,
                ..
            } => {
                let top = stack.pop().ok_or_else(|| mismatch(i, "empty stack"))?;
                if top != *delta_before {
                    return Err(mismatch(i, "input does not match the previous value"));
                }
                if eta0(report.ell, *kernel_order, *witness_order, consts)? != *eta {
                    return Err(mismatch(i, "eta0"));
                }
                let next = extend_delta(&top, eta);
                if next != *delta_after {
                    return Err(mismatch(i, "extension product"));
                }
                stack.push(next);
            }
            TraceRecord::Compositum {
                left_degree,
                right_degree,
                left,
                right,
                delta,
            } => {
                let b = stack.pop().ok_or_else(|| mismatch(i, "empty stack"))?;
                let a = stack.pop().ok_or_else(|| mismatch(i, "empty stack"))?;
                if a != *left || b != *right {
                    return Err(mismatch(i, "inputs do not match the stack"));
                }
                let merged = compositum_delta(&a, *left_degree, &b, *right_degree);
                if merged != *delta {
                    return Err(mismatch(i, "compositum value"));
                }
                stack.push(merged);
            }
        }
    }
    match (stack.pop(), stack.is_empty()) {
        (Some(d), true) if d == report.delta => Ok(d),
        (Some(_), true) => Err(Error::TraceMismatch(
            "final value differs from the reported delta".into(),
        )),
        _ => Err(Error::TraceMismatch(
            "trace does not reduce to a single value".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn build(spec: &str) -> FiniteGroup {
        GroupSpec::parse(spec).unwrap().build(4096).unwrap()
    }

    fn p_report(spec: &str, ell: u64) -> Result<DeltaReport> {
        let g = build(spec);
        let cert = build_forcing_sequence(&g, spec)?;
        delta_for_p_group(
            &g,
            &cert,
            ell,
            &AnalyticConstants::default(),
            &BaseOverrides::new(),
        )
    }

    #[test]
    fn heisenberg_27() {
        let rep = p_report("preset:Heisenberg(3)", 5).unwrap();
        assert_eq!(rep.delta, Rational::new(1, 3911580));
        assert!(rep.closed_form_check.as_ref().unwrap().matched);
        assert_eq!(
            replay(&rep, &AnalyticConstants::default()).unwrap(),
            rep.delta
        );
    }

    #[test]
    fn elementary_abelian_is_base_only() {
        let rep = p_report("preset:ElemAbelian(3,2)", 5).unwrap();
        assert_eq!(rep.delta, Rational::new(1, 1860));
        assert_eq!(rep.trace.len(), 1);
    }

    #[test]
    fn even_prime_needs_override() {
        assert_eq!(
            p_report("preset:Dihedral(8)", 3).unwrap_err(),
            Error::EvenPrimeBase
        );
        let g = build("preset:Dihedral(8)");
        let cert = build_forcing_sequence(&g, "").unwrap();
        let ov = parse_base_overrides(r#"{"2": "1/100"}"#).unwrap();
        let c = AnalyticConstants::default();
        let rep = delta_for_p_group(&g, &cert, 3, &c, &ov).unwrap();
        assert_eq!(
            rep.delta,
            Rational::new(1, 100) * eta0(3, 2, 2, &c).unwrap()
        );
        assert_eq!(replay(&rep, &c).unwrap(), rep.delta);
    }

    #[test]
    fn tampered_certificate_is_refused() {
        let g = build("preset:Heisenberg(3)");
        let mut cert = build_forcing_sequence(&g, "").unwrap();
        cert.steps[0].witness.class_order = 9;
        assert!(matches!(
            delta_for_p_group(
                &g,
                &cert,
                5,
                &AnalyticConstants::default(),
                &BaseOverrides::new()
            ),
            Err(Error::UnverifiedCertificate(_))
        ));
    }

    #[test]
    fn nilpotent_merge() {
        let spec = "product:preset:Heisenberg(3)|preset:ElemAbelian(5,2)";
        let c = AnalyticConstants::default();
        let rep = delta_for_nilpotent(&build(spec), spec, 7, &c, &BaseOverrides::new()).unwrap();
        assert_eq!(rep.delta, Rational::new(1, 265936860));
        assert_eq!(replay(&rep, &c).unwrap(), rep.delta);

        let single = delta_for_nilpotent(
            &build("preset:Heisenberg(3)"),
            "preset:Heisenberg(3)",
            5,
            &c,
            &BaseOverrides::new(),
        )
        .unwrap();
        assert_eq!(single, p_report("preset:Heisenberg(3)", 5).unwrap());
    }

    #[test]
    fn sylow_hypotheses() {
        // Sylow-2 of C2 x C6 is the Klein four group; the cyclic factor is C3
        let spec = "product:preset:Cyclic(2)|preset:Cyclic(6)";
        let err = delta_for_nilpotent(
            &build(spec),
            spec,
            5,
            &AnalyticConstants::default(),
            &BaseOverrides::new(),
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::SylowHypothesisViolated { p: 3, .. }),
            "{err:?}"
        );
        let spec = "product:preset:Cyclic(2)|preset:ElemAbelian(3,2)";
        let err = delta_for_nilpotent(
            &build(spec),
            spec,
            5,
            &AnalyticConstants::default(),
            &BaseOverrides::new(),
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::SylowHypothesisViolated { p: 2, .. }),
            "{err:?}"
        );
        let spec = "preset:Symmetric(3)";
        assert!(matches!(
            delta_for_nilpotent(
                &build(spec),
                spec,
                5,
                &AnalyticConstants::default(),
                &BaseOverrides::new()
            ),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn replay_detects_edits() {
        let c = AnalyticConstants::default();
        let mut rep = p_report("preset:Heisenberg(3)", 5).unwrap();
        rep.delta = Rational::new(1, 3911581);
        assert!(matches!(replay(&rep, &c), Err(Error::TraceMismatch(_))));
    }

    #[test]
    fn override_parsing() {
        assert!(parse_base_overrides(r#"{"4": "1/100"}"#).is_err());
        assert!(parse_base_overrides(r#"{"2": "1/2"}"#).is_err());
        assert!(parse_base_overrides("not json").is_err());
        assert_eq!(parse_base_overrides("{}").unwrap(), BaseOverrides::new());
    }
}
