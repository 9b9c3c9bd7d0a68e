use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::exponent::Rational;

/// Constants of the unconditional Chebotarev-type input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyticConstants {
    pub beta: Rational,
    pub gamma: Rational,
    /// Carried for the record only; it never enters a formula.
    pub d0_note: Option<String>,
    /// Relative slack of `Delta(l, d)` below its supremum.
    pub epsilon_delta: Rational,
}

impl AnalyticConstants {
    pub fn new(beta: Rational, gamma: Rational, epsilon_delta: Rational) -> Result<Self> {
        if beta <= &gamma + &Rational::new(1, 2) {
            return Err(Error::InvalidConstants(format!(
                "need beta > gamma + 1/2, got beta = {beta}, gamma = {gamma}"
            )));
        }
        if epsilon_delta < Rational::zero() || epsilon_delta >= Rational::one() {
            return Err(Error::InvalidConstants(format!(
                "epsilon_delta must lie in [0, 1), got {epsilon_delta}"
            )));
        }
        Ok(Self {
            beta,
            gamma,
            d0_note: None,
            epsilon_delta,
        })
    }

    /// `max(beta, gamma)`.
    pub fn big_m(&self) -> Rational {
        self.beta.clone().max(self.gamma.clone())
    }
}

impl Default for AnalyticConstants {
    fn default() -> Self {
        Self {
            beta: Rational::integer(35),
            gamma: Rational::integer(19),
            d0_note: None,
            epsilon_delta: Rational::zero(),
        }
    }
}

fn check_ell(ell: u64) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidArgument(format!(
            "ell must be at least 2, got {ell}"
        )));
    }
    Ok(())
}

/// `Delta(l, d) = (1 - eps) / (2 l (d - 1))`.
pub fn delta_cap(ell: u64, d: u64, consts: &AnalyticConstants) -> Result<Rational> {
    if d < 2 {
        return Err(Error::DegenerateDegree { d });
    }
    check_ell(ell)?;
    Ok((Rational::one() - consts.epsilon_delta.clone()) / Rational::from(2 * ell * (d - 1)))
}

/// `t0 = 1 / ((p-1) Delta(l,p) (1 - 2/p))`.
pub fn t0(p: u64, ell: u64, consts: &AnalyticConstants) -> Result<Rational> {
    if p == 2 {
        return Err(Error::EvenPrimeBase);
    }
    let cap = delta_cap(ell, p, consts)?;
    let factor = Rational::one() - Rational::new(2, p as i64);
    Ok((Rational::from(p - 1) * cap * factor).recip())
}

/// `delta_0 = Delta(l,p) / (p (1 + t0))` for `G/Phi(G) = (Z/p)^r`.
pub fn base_delta_elementary_abelian(
    p: u64,
    r: u32,
    ell: u64,
    consts: &AnalyticConstants,
) -> Result<Rational> {
    if r <= 1 {
        return Err(Error::RankOne { r });
    }
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let t = t0(p, ell, consts)?;
    let cap = delta_cap(ell, p, consts)?;
    Ok(cap / (Rational::from(p) * (Rational::one() + t)))
}

/// `eta0 = Delta(l,m) / (m Delta(l,m) + r max(beta, gamma))`.
pub fn eta0(ell: u64, m: u64, r: u64, consts: &AnalyticConstants) -> Result<Rational> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "witness order must be at least 2, got {r}"
        )));
    }
    let cap = delta_cap(ell, m, consts)?;
    let denom = &Rational::from(m) * &cap + Rational::from(r) * consts.big_m();
    Ok(cap / denom)
}

/// `delta * eta`; both are expected in `(0, 1)`.
pub fn extend_delta(delta: &Rational, eta: &Rational) -> Rational {
    delta * eta
}

/// `delta1 delta2 / (m delta2 + n delta1)` for degrees `n` and `m`.
pub fn compositum_delta(d1: &Rational, n: u64, d2: &Rational, m: u64) -> Rational {
    let denom = Rational::from(m) * d2.clone() + Rational::from(n) * d1.clone();
    d1 * d2 / denom
}

/// Left fold of [`compositum_delta`] over `(delta, degree)` factors.
/// Returns the merged exponent and the product degree.
pub fn compositum_fold(factors: &[(Rational, u64)]) -> Option<(Rational, u64)> {
    let (first, rest) = factors.split_first()?;
    Some(rest.iter().fold(first.clone(), |(acc, n), (d, m)| {
        (compositum_delta(&acc, n, d, *m), n * m)
    }))
}

/// `delta_s(eta) = (1 - m eta) Delta(l,m) / r - eta gamma`.
pub fn delta_s(
    eta: &Rational,
    ell: u64,
    m: u64,
    r: u64,
    consts: &AnalyticConstants,
) -> Result<Rational> {
    let cap = delta_cap(ell, m, consts)?;
    let lead = (Rational::one() - Rational::from(m) * eta.clone()) * cap / Rational::from(r);
    Ok(lead - eta * &consts.gamma)
}

/// `delta_b(eta) = delta eta`.
pub fn delta_b(delta: &Rational, eta: &Rational) -> Rational {
    delta * eta
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossoverReport {
    pub eta0: Rational,
    pub delta_b_at_eta0: Rational,
    pub delta_s_at_eta0: Rational,
    /// `delta_s(eta0) >= delta_b(eta0)`.
    pub consistent: bool,
}

pub fn crossover_report(
    delta: &Rational,
    ell: u64,
    m: u64,
    r: u64,
    consts: &AnalyticConstants,
) -> Result<CrossoverReport> {
    let eta = eta0(ell, m, r, consts)?;
    let b = delta_b(delta, &eta);
    let s = delta_s(&eta, ell, m, r, consts)?;
    Ok(CrossoverReport {
        consistent: s >= b,
        eta0: eta,
        delta_b_at_eta0: b,
        delta_s_at_eta0: s,
    })
}

/// `1 / (18 * 72^(n-r) * p^(2n+2-r) * l^(n+2-r))`.
pub fn closed_form_lower_bound(p: u64, n: u32, r: u32, ell: u64) -> Result<Rational> {
    if r < 2 || n < r {
        return Err(Error::InvalidArgument(format!(
            "need n >= r >= 2, got n = {n}, r = {r}"
        )));
    }
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "p must be an odd prime, got {p}"
        )));
    }
    check_ell(ell)?;
    let k = n - r;
    let denom = Rational::integer(18)
        * Rational::integer(72).pow(k)
        * Rational::from(p).pow(2 * n + 2 - r)
        * Rational::from(ell).pow(n + 2 - r);
    Ok(denom.recip())
}
