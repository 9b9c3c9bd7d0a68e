//! The group-spec mini-language.
//!
//! ```text
//! perm:<degree>:<cycles>[,<cycles>...]     e.g. perm:4:(0 1 2 3),(0 2)
//! preset:<Name>(<args>)                    e.g. preset:GenQuaternion(2)
//! product:<spec>|<spec>[|<spec>...]        direct product on disjoint points
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::finite_group::FiniteGroup;
use crate::group::permutation::Permutation;
use crate::group::presets::Preset;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Perm {
        degree: usize,
        generators: Vec<Permutation>,
    },
    Preset(Preset),
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: String| Error::SpecParse {
            spec: text.to_string(),
            reason,
        };
        let text_trim = text.trim();
        if let Some(rest) = text_trim.strip_prefix("product:") {
            let factors = rest
                .split('|')
                .map(|part| {
                    // `|` binds loosest, so an inner `product:` just contributes factors
                    let part = part.trim();
                    GroupSpec::parse(part.strip_prefix("product:").unwrap_or(part))
                })
                .collect::<Result<Vec<_>>>()?;
            if factors.len() < 2 {
                return Err(err("a product needs at least two factors".into()));
            }
            return Ok(GroupSpec::Product(factors));
        }
        if let Some(rest) = text_trim.strip_prefix("preset:") {
            let open = rest
                .find('(')
                .ok_or_else(|| err("expected `Name(args)`".into()))?;
            let body = rest[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| err("missing closing parenthesis".into()))?;
            let name = rest[..open].trim();
            let args = if body.trim().is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|a| {
                        a.trim()
                            .parse::<u64>()
                            .map_err(|_| err(format!("bad integer argument `{}`", a.trim())))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let preset = Preset::from_name(name, &args).map_err(|e| err(e.to_string()))?;
            return Ok(GroupSpec::Preset(preset));
        }
        if let Some(rest) = text_trim.strip_prefix("perm:") {
            let (deg, gens) = rest
                .split_once(':')
                .ok_or_else(|| err("expected `perm:<degree>:<cycles>`".into()))?;
            let degree: usize = deg
                .trim()
                .parse()
                .map_err(|_| err(format!("bad degree `{}`", deg.trim())))?;
            let generators = if gens.trim().is_empty() {
                Vec::new()
            } else {
                gens.split(',')
                    .map(|g| parse_cycles(g.trim(), degree).map_err(|e| err(e.to_string())))
                    .collect::<Result<Vec<_>>>()?
            };
            return Ok(GroupSpec::Perm { degree, generators });
        }
        Err(err(
            "expected a `perm:`, `preset:` or `product:` prefix".into()
        ))
    }

    /// Degree and generators of the faithful action this spec denotes.
    pub fn action(&self) -> Result<(usize, Vec<Permutation>)> {
        match self {
            GroupSpec::Perm { degree, generators } => Ok((*degree, generators.clone())),
            GroupSpec::Preset(p) => p.realize(),
            GroupSpec::Product(factors) => {
                let actions = factors
                    .iter()
                    .map(|f| f.action())
                    .collect::<Result<Vec<_>>>()?;
                let degree = actions.iter().map(|(d, _)| d).sum();
                let mut gens = Vec::new();
                let mut offset = 0;
                for (d, fgens) in actions {
                    gens.extend(fgens.iter().map(|g| g.embed(offset, degree)));
                    offset += d;
                }
                Ok((degree, gens))
            }
        }
    }

    /// Exact order when it is known without enumeration.
    pub fn expected_order(&self) -> Option<u64> {
        match self {
            GroupSpec::Perm { .. } => None,
            GroupSpec::Preset(p) => p.expected_order(),
            GroupSpec::Product(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.expected_order()?)),
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        if let Some(order) = self.expected_order() {
            if order > cap as u64 {
                return Err(Error::OrderCapExceeded { cap });
            }
        }
        let (degree, gens) = self.action()?;
        FiniteGroup::from_generators(&gens, degree, cap)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

/// Canonical text; parsing it yields an equal spec.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Perm { degree, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
                write!(f, "perm:{degree}:{}", gens.join(","))
            }
            GroupSpec::Preset(p) => write!(f, "preset:{p}"),
            GroupSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "product:{}", parts.join("|"))
            }
        }
    }
}

fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let bad = |reason: String| Error::InvalidPermutation(format!("`{text}`: {reason}"));
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(bad("empty generator".into()));
    }
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| bad("expected `(`".into()))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| bad("unclosed cycle".into()))?;
        let body = &body_start[..close];
        let points = body
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| bad(format!("bad point `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body_start[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}
