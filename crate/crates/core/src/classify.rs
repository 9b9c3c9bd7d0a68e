//! Structural predicates: p-group tests, p-class, generator rank, cyclic,
//! elementary abelian and generalized quaternion detection, Sylow
//! decomposition.

use std::collections::BTreeMap;

use crate::arith::{factorize, prime_power};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGroupProfile {
    pub p: u64,
    /// `|G| = p^n`
    pub n: u32,
    pub p_class: usize,
    pub rank: u32,
    pub is_cyclic: bool,
    /// `Some(k)` when `G` is `Q(k)`.
    pub quaternion_index: Option<u32>,
}

impl PGroupProfile {
    pub fn of(g: &FiniteGroup) -> Result<Self> {
        let (p, n) = prime_power(g.order() as u64).ok_or(Error::NotAPGroup { order: g.order() })?;
        Ok(Self {
            p,
            n,
            p_class: p_class(g)?,
            rank: generator_rank(g)?,
            is_cyclic: is_cyclic(g),
            quaternion_index: is_generalized_quaternion(g),
        })
    }
}

/// Sylow subgroups of a nilpotent group, keyed by prime.
#[derive(Clone, Debug)]
pub struct SylowDecomposition {
    pub factors: BTreeMap<u64, Subgroup>,
}

pub fn is_p_group(g: &FiniteGroup) -> Option<u64> {
    prime_power(g.order() as u64).map(|(p, _)| p)
}

pub fn p_class(g: &FiniteGroup) -> Result<usize> {
    Ok(g.lower_exponent_p_series()?.len() - 1)
}

pub fn generator_rank(g: &FiniteGroup) -> Result<u32> {
    let p = g.p_group_prime()?;
    let phi = g.frattini_p(p)?;
    let (_, r) =
        prime_power((g.order() / phi.order()) as u64).expect("G/Phi is a nontrivial p-group");
    Ok(r)
}

pub fn is_cyclic(g: &FiniteGroup) -> bool {
    (0..g.order()).any(|x| g.element_order(x) == g.order())
}

/// `Some((p, r))` when `G` is abelian of exponent `p` and order `p^r`.
pub fn is_elementary_abelian(g: &FiniteGroup) -> Option<(u64, u32)> {
    let (p, r) = prime_power(g.order() as u64)?;
    let exponent_p = (1..g.order()).all(|x| g.element_order(x) as u64 == p);
    (exponent_p && g.is_abelian()).then_some((p, r))
}

/// `Some(n)` when `G` is `Q(n)`: a non-cyclic 2-group with exactly one
/// involution.
pub fn is_generalized_quaternion(g: &FiniteGroup) -> Option<u32> {
    let (p, k) = prime_power(g.order() as u64)?;
    if p != 2 || k < 3 || is_cyclic(g) {
        return None;
    }
    let involutions = (1..g.order()).filter(|&x| g.element_order(x) == 2).count();
    (involutions == 1).then(|| k - 2)
}

/// Number of subgroups of order `p`.
pub fn count_order_p_subgroups(g: &FiniteGroup, p: u64) -> Result<usize> {
    if p < 2 || g.order() as u64 % p != 0 {
        return Err(Error::PNotDividing {
            p,
            order: g.order(),
        });
    }
    let elements = (1..g.order())
        .filter(|&x| g.element_order(x) as u64 == p)
        .count();
    Ok(elements / (p as usize - 1))
}

pub fn sylow_decomposition(g: &FiniteGroup) -> Result<SylowDecomposition> {
    let mut factors = BTreeMap::new();
    for (p, k) in factorize(g.order() as u64) {
        let p_part = p.pow(k) as usize;
        let is_p_element =
            |x: usize| prime_power(g.element_order(x) as u64).map_or(x == 0, |(q, _)| q == p);
        let h = g.subgroup_closure((0..g.order()).filter(|&x| is_p_element(x)));
        if h.order() != p_part {
            return Err(Error::NotNilpotent(format!(
                "{p}-elements generate a subgroup of order {}, expected {p_part}",
                h.order()
            )));
        }
        if !g.is_normal(&h) {
            return Err(Error::NotNilpotent(format!(
                "Sylow-{p} subgroup is not normal"
            )));
        }
        factors.insert(p, h);
    }
    Ok(SylowDecomposition { factors })
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    sylow_decomposition(g).is_ok()
}
