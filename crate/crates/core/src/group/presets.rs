//! Named constructions realized as permutation groups.

use std::fmt;

use crate::arith::{gcd, is_prime, pow_mod, prime_power};
use crate::error::{Error, Result};
use crate::group::permutation::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Cyclic group of order `k`.
    Cyclic(u64),
    /// `(Z/p)^r`.
    ElemAbelian(u64, u32),
    /// `Z/k_1 x ... x Z/k_t`.
    Abelian(Vec<u64>),
    /// Dihedral group of the given order `2k`.
    Dihedral(u64),
    /// `Q(n) = <x, y | x^(2^(n+1)) = y^4 = 1, x^(2^n) = y^2, y^-1 x y = x^-1>`, order `2^(n+2)`.
    GenQuaternion(u32),
    /// Semidihedral group of the given order `2^k`, `k >= 4`.
    SemiDihedral(u64),
    /// `M(2^k) = <x, y | x^(2^(k-1)) = y^2 = 1, y x y = x^(1 + 2^(k-2))>`, `k >= 4`.
    ModularMaximalCyclic(u64),
    /// Unitriangular 3x3 matrices over `F_p`.
    Heisenberg(u64),
    /// Extraspecial group of order `p^3` and exponent `p` or `p^2`, `p` odd.
    Extraspecial(u64, u64),
    /// Split metacyclic `Z/m x| Z/n` with `y x y^-1 = x^u`.
    Metacyclic(u64, u64, u64),
    Symmetric(u64),
}

impl Preset {
    pub fn from_name(name: &str, args: &[u64]) -> Result<Self> {
        let bad = |reason: String| Error::InvalidArgument(format!("{name}: {reason}"));
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(format!("expected {k} argument(s), got {}", args.len())))
            }
        };
        let preset = match name {
            "Cyclic" => {
                arity(1)?;
                Preset::Cyclic(args[0])
            }
            "ElemAbelian" => {
                arity(2)?;
                let r = u32::try_from(args[1]).map_err(|_| bad("rank too large".into()))?;
                Preset::ElemAbelian(args[0], r)
            }
            "Abelian" => Preset::Abelian(args.to_vec()),
            "Dihedral" => {
                arity(1)?;
                Preset::Dihedral(args[0])
            }
            "GenQuaternion" => {
                arity(1)?;
                let n = u32::try_from(args[0]).map_err(|_| bad("index too large".into()))?;
                Preset::GenQuaternion(n)
            }
            "SemiDihedral" => {
                arity(1)?;
                Preset::SemiDihedral(args[0])
            }
            "ModularMaximalCyclic" => {
                arity(1)?;
                Preset::ModularMaximalCyclic(args[0])
            }
            "Heisenberg" => {
                arity(1)?;
                Preset::Heisenberg(args[0])
            }
            "Extraspecial" => {
                arity(2)?;
                Preset::Extraspecial(args[0], args[1])
            }
            "Metacyclic" => {
                arity(3)?;
                Preset::Metacyclic(args[0], args[1], args[2])
            }
            "Symmetric" => {
                arity(1)?;
                Preset::Symmetric(args[0])
            }
            other => return Err(Error::InvalidArgument(format!("unknown preset `{other}`"))),
        };
        preset.validate()?;
        Ok(preset)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Cyclic(_) => "Cyclic",
            Preset::ElemAbelian(..) => "ElemAbelian",
            Preset::Abelian(_) => "Abelian",
            Preset::Dihedral(_) => "Dihedral",
            Preset::GenQuaternion(_) => "GenQuaternion",
            Preset::SemiDihedral(_) => "SemiDihedral",
            Preset::ModularMaximalCyclic(_) => "ModularMaximalCyclic",
            Preset::Heisenberg(_) => "Heisenberg",
            Preset::Extraspecial(..) => "Extraspecial",
            Preset::Metacyclic(..) => "Metacyclic",
            Preset::Symmetric(_) => "Symmetric",
        }
    }

    pub fn args(&self) -> Vec<u64> {
        match self {
            Preset::Cyclic(k)
            | Preset::Dihedral(k)
            | Preset::SemiDihedral(k)
            | Preset::ModularMaximalCyclic(k)
            | Preset::Heisenberg(k)
            | Preset::Symmetric(k) => vec![*k],
            Preset::ElemAbelian(p, r) => vec![*p, *r as u64],
            Preset::Abelian(ks) => ks.clone(),
            Preset::GenQuaternion(n) => vec![*n as u64],
            Preset::Extraspecial(p, e) => vec![*p, *e],
            Preset::Metacyclic(m, n, u) => vec![*m, *n, *u],
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Err(Error::InvalidArgument(format!("{}: {reason}", self.name())));
        let two_power_at_least_16 = |k: u64| matches!(prime_power(k), Some((2, e)) if e >= 4);
        match self {
            Preset::Cyclic(k) if *k == 0 => bad("order must be positive"),
            Preset::ElemAbelian(p, r) if !is_prime(*p) || *r == 0 => {
                bad("need a prime and a positive rank")
            }
            Preset::Abelian(ks) if ks.is_empty() || ks.contains(&0) => {
                bad("need at least one positive factor")
            }
            Preset::Dihedral(k) if *k < 4 || k % 2 == 1 => bad("order must be even and >= 4"),
            Preset::GenQuaternion(0) => bad("index must be >= 1"),
            Preset::SemiDihedral(k) if !two_power_at_least_16(*k) => {
                bad("order must be a power of two >= 16")
            }
            Preset::ModularMaximalCyclic(k) if !two_power_at_least_16(*k) => {
                bad("order must be a power of two >= 16")
            }
            Preset::Heisenberg(p) if !is_prime(*p) => bad("need a prime"),
            Preset::Extraspecial(p, e) if !is_prime(*p) || *p == 2 || (*e != *p && *e != p * p) => {
                bad("need an odd prime p and exponent p or p^2")
            }
            Preset::Metacyclic(m, n, u) if *m == 0 || *n == 0 => bad("orders must be positive"),
            Preset::Metacyclic(m, n, u)
                if gcd(*u % *m, *m) != 1 || pow_mod(*u, *n, *m) != 1 % *m =>
            {
                bad("need gcd(u, m) = 1 and u^n = 1 mod m")
            }
            Preset::Symmetric(0) => bad("degree must be positive"),
            _ => Ok(()),
        }
    }

    /// Exact group order, `None` on overflow.
    pub fn expected_order(&self) -> Option<u64> {
        match self {
            Preset::Cyclic(k) => Some(*k),
            Preset::ElemAbelian(p, r) => p.checked_pow(*r),
            Preset::Abelian(ks) => ks.iter().try_fold(1u64, |acc, k| acc.checked_mul(*k)),
            Preset::Dihedral(k) | Preset::SemiDihedral(k) | Preset::ModularMaximalCyclic(k) => {
                Some(*k)
            }
            Preset::GenQuaternion(n) => 2u64.checked_pow(n.checked_add(2)?),
            Preset::Heisenberg(p) | Preset::Extraspecial(p, _) => p.checked_pow(3),
            Preset::Metacyclic(m, n, _) => m.checked_mul(*n),
            Preset::Symmetric(n) => (1..=*n).try_fold(1u64, |acc, k| acc.checked_mul(k)),
        }
    }

    /// Degree and generators of a faithful action.
    pub fn realize(&self) -> Result<(usize, Vec<Permutation>)> {
        match self {
            Preset::Cyclic(k) => Ok(disjoint_cycles(&[*k])),
            Preset::ElemAbelian(p, r) => Ok(disjoint_cycles(&vec![*p; *r as usize])),
            Preset::Abelian(ks) => Ok(disjoint_cycles(ks)),
            Preset::Dihedral(order) => {
                let k = (order / 2) as usize;
                if k == 2 {
                    return Ok(disjoint_cycles(&[2, 2]));
                }
                affine_pair(k, k - 1)
            }
            Preset::SemiDihedral(order) => {
                let k = (order / 2) as usize;
                affine_pair(k, k / 2 - 1)
            }
            Preset::ModularMaximalCyclic(order) => {
                let k = (order / 2) as usize;
                affine_pair(k, k / 2 + 1)
            }
            Preset::GenQuaternion(n) => generalized_quaternion(*n),
            Preset::Heisenberg(p) => heisenberg(*p as usize),
            Preset::Extraspecial(p, e) if e == p => heisenberg(*p as usize),
            Preset::Extraspecial(p, _) => {
                let p = *p as usize;
                affine_pair(p * p, p + 1)
            }
            Preset::Metacyclic(m, n, u) => metacyclic(*m as usize, *n as usize, *u as usize),
            Preset::Symmetric(n) => {
                let n = *n as usize;
                if n == 1 {
                    return Ok((1, vec![]));
                }
                let cycle = Permutation::from_cycles(n, &[(0..n).collect()])?;
                let swap = Permutation::from_cycles(n, &[vec![0, 1]])?;
                Ok((n, vec![cycle, swap]))
            }
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args().iter().map(|a| a.to_string()).collect();
        write!(f, "{}({})", self.name(), args.join(","))
    }
}

/// One cycle per factor on consecutive point blocks; trivial factors add
/// no points.
fn disjoint_cycles(lengths: &[u64]) -> (usize, Vec<Permutation>) {
    let degree: usize = lengths
        .iter()
        .filter(|&&k| k > 1)
        .map(|&k| k as usize)
        .sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for &k in lengths.iter().filter(|&&k| k > 1) {
        let k = k as usize;
        let cycle: Vec<usize> = (offset..offset + k).collect();
        gens.push(Permutation::from_cycles(degree, &[cycle]).expect("disjoint block"));
        offset += k;
    }
    (degree, gens)
}

/// `<i -> i + 1, i -> u i>` acting on `Z/k`.
fn affine_pair(k: usize, u: usize) -> Result<(usize, Vec<Permutation>)> {
    let x = Permutation::from_fn(k, |i| (i + 1) % k)?;
    let y = Permutation::from_fn(k, |i| (u * i) % k)?;
    Ok((k, vec![x, y]))
}

/// `(i, j) -> (i + 1, j)` and `(i, j) -> (i, j + i)` on `F_p^2`; together
/// they generate the maps `(i, j) -> (i + a, j + b i + c)`.
fn heisenberg(p: usize) -> Result<(usize, Vec<Permutation>)> {
    let pt = |i: usize, j: usize| (i % p) * p + (j % p);
    let x = Permutation::from_fn(p * p, |v| pt(v / p + 1, v % p))?;
    let y = Permutation::from_fn(p * p, |v| pt(v / p, v % p + v / p))?;
    Ok((p * p, vec![x, y]))
}

/// Right-regular action on normal forms `x^a y^b`, `0 <= a < 2^(n+1)`,
/// `b in {0, 1}`, using `y x = x^-1 y` and `y^2 = x^(2^n)`.
fn generalized_quaternion(n: u32) -> Result<(usize, Vec<Permutation>)> {
    let m = 1usize << (n + 1);
    let half = m / 2;
    let idx = |a: usize, b: usize| b * m + a % m;
    let degree = 2 * m;
    let right_x = Permutation::from_fn(degree, |v| {
        let (a, b) = (v % m, v / m);
        if b == 0 {
            idx(a + 1, 0)
        } else {
            idx(a + m - 1, 1)
        }
    })?;
    let right_y = Permutation::from_fn(degree, |v| {
        let (a, b) = (v % m, v / m);
        if b == 0 {
            idx(a, 1)
        } else {
            idx(a + half, 0)
        }
    })?;
    Ok((degree, vec![right_x, right_y]))
}

/// Right-regular action on `x^a y^b` with `y^b x = x^(u^b) y^b`.
fn metacyclic(m: usize, n: usize, u: usize) -> Result<(usize, Vec<Permutation>)> {
    let degree = m * n;
    let mut upow = vec![1 % m; n];
    for b in 1..n {
        upow[b] = upow[b - 1] * u % m;
    }
    let right_x = Permutation::from_fn(degree, |v| {
        let (a, b) = (v % m, v / m);
        b * m + (a + upow[b]) % m
    })?;
    let right_y = Permutation::from_fn(degree, |v| {
        let (a, b) = (v % m, v / m);
        ((b + 1) % n) * m + a
    })?;
    Ok((degree, vec![right_x, right_y]))
}
