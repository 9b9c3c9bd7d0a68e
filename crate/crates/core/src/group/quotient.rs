use crate::error::{Error, Result};
use crate::group::finite_group::FiniteGroup;
use crate::group::subgroup::Subgroup;

/// The canonical surjection `G -> G/N`.
///
/// Target element `t` is the coset whose least source index is
/// `representatives()[t]`; cosets are numbered in increasing order of that
/// least index, so the identity coset is target element 0.
#[derive(Clone, Debug)]
pub struct QuotientMap<'a> {
    source: &'a FiniteGroup,
    kernel: Subgroup,
    target: FiniteGroup,
    project: Vec<usize>,
    fibers: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientMap<'_>> {
        assert_eq!(n.parent_order(), self.order());
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let size = self.order();
        let mut project = vec![usize::MAX; size];
        let mut fibers: Vec<Vec<usize>> = Vec::with_capacity(size / n.order());
        for x in 0..size {
            if project[x] != usize::MAX {
                continue;
            }
            let t = fibers.len();
            let mut fiber: Vec<usize> = n.members().iter().map(|&k| self.mul(x, k)).collect();
            fiber.sort_unstable();
            for &y in &fiber {
                project[y] = t;
            }
            fibers.push(fiber);
        }

        let q = fibers.len();
        let mut table = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                table[a * q + b] = project[self.mul(fibers[a][0], fibers[b][0])] as u32;
            }
        }
        let gens = self.generators().iter().map(|&g| project[g]).collect();
        let target = FiniteGroup::from_cayley_table(q, table, gens);
        Ok(QuotientMap {
            source: self,
            kernel: n.clone(),
            target,
            project,
            fibers,
        })
    }
}

impl<'a> QuotientMap<'a> {
    pub fn source(&self) -> &'a FiniteGroup {
        self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn project(&self, x: usize) -> usize {
        self.project[x]
    }

    pub fn fiber(&self, t: usize) -> &[usize] {
        &self.fibers[t]
    }

    /// Least source index of each coset, indexed by target element.
    pub fn representatives(&self) -> Vec<usize> {
        self.fibers.iter().map(|f| f[0]).collect()
    }

    /// Image of a source subgroup, as a subgroup of the target.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let mut mask = vec![false; self.target.order()];
        for &x in h.members() {
            mask[self.project[x]] = true;
        }
        Subgroup::from_mask(mask)
    }

    /// Full preimage of a target subgroup.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let mask = (0..self.source.order())
            .map(|x| h.contains(self.project[x]))
            .collect();
        Subgroup::from_mask(mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;

    fn cyclic(k: usize) -> FiniteGroup {
        let c: Vec<usize> = (0..k).collect();
        FiniteGroup::from_generators(&[Permutation::from_cycles(k, &[c]).unwrap()], k, 100).unwrap()
    }

    #[test]
    fn trivial_kernel_gives_isomorphic_copy() {
        let g = cyclic(6);
        let q = g.quotient(&g.trivial_subgroup()).unwrap();
        assert_eq!(q.target().order(), 6);
        for x in 0..6 {
            assert_eq!(q.fiber(q.project(x)), &[x]);
            assert_eq!(q.target().element_order(q.project(x)), g.element_order(x));
        }
    }

    #[test]
    fn c4_mod_square() {
        let g = cyclic(4);
        let gen = g.generators()[0];
        let sq = g.subgroup_closure([g.mul(gen, gen)]);
        let q = g.quotient(&sq).unwrap();
        assert_eq!(q.target().order(), 2);
        assert_eq!(q.fiber(1).len(), 2);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let g = cyclic(12);
        let n = g.subgroup_closure([g.pow(g.generators()[0], 4)]);
        let q = g.quotient(&n).unwrap();
        let t = q.target();
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(q.project(g.mul(a, b)), t.mul(q.project(a), q.project(b)));
            }
            assert_eq!(q.project(a) == 0, n.contains(a));
        }
        assert_eq!(q.preimage(&t.trivial_subgroup()), n);
        assert_eq!(q.image(&g.whole()), t.whole());
    }

    #[test]
    fn non_normal_kernel_is_rejected() {
        let s3 = FiniteGroup::from_generators(
            &[
                Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
                Permutation::from_cycles(3, &[vec![0, 1]]).unwrap(),
            ],
            3,
            10,
        )
        .unwrap();
        let t = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.subgroup_closure([t]);
        assert_eq!(s3.quotient(&h).unwrap_err(), Error::NotNormal);
    }
}
