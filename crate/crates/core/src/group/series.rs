use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::group::finite_group::FiniteGroup;
use crate::group::quotient::QuotientMap;
use crate::group::subgroup::Subgroup;

impl FiniteGroup {
    /// The prime `p` with `|G| = p^n`, `n >= 1`.
    pub fn p_group_prime(&self) -> Result<u64> {
        prime_power(self.order() as u64)
            .map(|(p, _)| p)
            .ok_or(Error::NotAPGroup {
                order: self.order(),
            })
    }

    /// `G^p [G, G]`.
    pub fn frattini_p(&self, p: u64) -> Result<Subgroup> {
        if self.p_group_prime()? != p {
            return Err(Error::NotAPGroup {
                order: self.order(),
            });
        }
        let whole = self.whole();
        let powers = self.agemo(&whole, p);
        let comms = self.commutator_subgroup(&whole, &whole);
        Ok(self.join(&powers, &comms))
    }

    /// `G = G_0 > G_1 > ... > G_c = 1` with `G_j = G_{j-1}^p [G_{j-1}, G]`.
    pub fn lower_exponent_p_series(&self) -> Result<Vec<Subgroup>> {
        let p = self.p_group_prime()?;
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        while !series.last().unwrap().is_trivial() {
            let prev = series.last().unwrap();
            let next = self.join(
                &self.agemo(prev, p),
                &self.commutator_subgroup(prev, &whole),
            );
            debug_assert!(next.order() < prev.order());
            series.push(next);
        }
        Ok(series)
    }

    /// Every `S` with `lower <= S < upper` and `[upper : S] = p`, sorted by
    /// member list. Requires `upper/lower` to be central and elementary
    /// abelian in `G/lower`; each returned `S` is then normal in `G`.
    pub fn intermediate_index_p_subgroups(
        &self,
        upper: &Subgroup,
        lower: &Subgroup,
        p: u64,
    ) -> Result<Vec<Subgroup>> {
        let violated = |why: &str| Err(Error::PreconditionViolated(why.to_string()));
        if !lower.is_subset_of(upper) || lower == upper {
            return violated("lower subgroup must be properly contained in upper");
        }
        if !self.is_normal(upper) || !self.is_normal(lower) {
            return violated("both subgroups must be normal");
        }
        let index = upper.order() / lower.order();
        let rank = match prime_power(index as u64) {
            Some((q, k)) if q == p => k as usize,
            _ => return violated("index is not a power of p"),
        };
        for &a in upper.members() {
            if !lower.contains(self.pow(a, p)) {
                return violated("layer is not of exponent p");
            }
            if self
                .generators()
                .iter()
                .any(|&g| !lower.contains(self.commutator(a, g)))
            {
                return violated("layer is not central");
            }
        }

        // basis of upper/lower, chosen greedily by least element index
        let mut basis = Vec::with_capacity(rank);
        let mut span = lower.clone();
        for &a in upper.members() {
            if !span.contains(a) {
                basis.push(a);
                span = self.subgroup_closure(lower.members().iter().chain(&basis).copied());
            }
        }
        debug_assert_eq!(basis.len(), rank);

        let p = p as usize;
        let mut coords: Vec<Option<Vec<usize>>> = vec![None; self.order()];
        let mut v = vec![0usize; rank];
        loop {
            let w = v
                .iter()
                .zip(&basis)
                .fold(0, |acc, (&c, &e)| self.mul(acc, self.pow(e, c as u64)));
            for &b in lower.members() {
                coords[self.mul(w, b)] = Some(v.clone());
            }
            if !increment(&mut v, p) {
                break;
            }
        }

        let mut out = Vec::new();
        let mut f = vec![0usize; rank];
        while increment(&mut f, p) {
            // one functional per hyperplane: leading nonzero coordinate is 1
            if f.iter().find(|&&c| c != 0) != Some(&1) {
                continue;
            }
            let members: Vec<usize> = upper
                .members()
                .iter()
                .copied()
                .filter(|&a| {
                    let c = coords[a].as_ref().expect("coordinates cover upper");
                    c.iter().zip(&f).map(|(x, y)| x * y).sum::<usize>() % p == 0
                })
                .collect();
            out.push(Subgroup::from_sorted_unchecked(self.order(), members));
        }
        out.sort();
        Ok(out)
    }

    /// The quotients `G/G_j` for `0 < j < c(G)`, in order of `j`.
    pub fn ancestor_quotients(&self) -> Result<Vec<QuotientMap<'_>>> {
        let series = self.lower_exponent_p_series()?;
        let c = series.len() - 1;
        (1..c).map(|j| self.quotient(&series[j])).collect()
    }
}

/// Little-endian odometer over `0..base`; false once it wraps to zero.
fn increment(v: &mut [usize], base: usize) -> bool {
    for digit in v.iter_mut() {
        *digit += 1;
        if *digit < base {
            return true;
        }
        *digit = 0;
    }
    false
}
