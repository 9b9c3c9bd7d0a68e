use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::group::permutation::Permutation;
use crate::group::subgroup::Subgroup;

/// Order cap applied when the caller does not pick one.
pub const DEFAULT_ORDER_CAP: usize = 2048;

/// A fully enumerated finite group.
///
/// Elements are addressed by index; index 0 is always the identity. The
/// multiplication table is stored densely, so every operation is a lookup.
/// Groups built with [`FiniteGroup::from_generators`] list their elements
/// in lexicographic order of permutation images. Quotient targets list
/// cosets by their least source index and carry their right-regular
/// permutation action.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Closes `gens` under composition.
    pub fn from_generators(gens: &[Permutation], degree: usize, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InvalidArgument(
                "order cap must be at least 1".into(),
            ));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }

        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let mut elements = vec![identity.clone()];
        seen.insert(identity, ());
        let mut cursor = 0;
        while cursor < elements.len() {
            let x = elements[cursor].clone();
            for g in gens {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    seen.insert(y.clone(), ());
                    elements.push(y);
                }
            }
            cursor += 1;
        }
        elements.sort();
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();

        let n = elements.len();
        // right multiplication by each generator, in sorted indices
        let right: Vec<Vec<u32>> = elements
            .iter()
            .map(|x| gens.iter().map(|g| index[&x.then(g)] as u32).collect())
            .collect();

        // spanning tree: every b != e is parent(b) * gens[via(b)]
        let mut parent = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut bfs = Vec::with_capacity(n);
        let mut queue = VecDeque::from([0usize]);
        parent[0] = 0;
        while let Some(c) = queue.pop_front() {
            bfs.push(c);
            for (gi, &b) in right[c].iter().enumerate() {
                let b = b as usize;
                if parent[b] == usize::MAX {
                    parent[b] = c;
                    via[b] = gi;
                    queue.push_back(b);
                }
            }
        }
        debug_assert_eq!(bfs.len(), n);

        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = a * n;
            table[row] = a as u32;
            for &b in &bfs[1..] {
                let ac = table[row + parent[b]] as usize;
                table[row + b] = right[ac][via[b]];
            }
        }

        let inverses = elements
            .iter()
            .map(|x| index[&x.inverse()] as u32)
            .collect();

        let mut generators: Vec<usize> =
            gens.iter().map(|g| index[g]).filter(|&i| i != 0).collect();
        dedup_in_order(&mut generators);

        Ok(Self::assemble(
            degree, elements, table, inverses, generators,
        ))
    }

    /// Builds a group from a Cayley table whose row/column 0 is the identity.
    /// Elements are realized by the right-regular action `x -> x * t`.
    pub(crate) fn from_cayley_table(n: usize, table: Vec<u32>, mut generators: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverses[a] = b as u32;
                    break;
                }
            }
        }
        let elements = (0..n)
            .map(|t| {
                Permutation::from_fn(n, |s| table[s * n + t] as usize)
                    .expect("row of a Cayley table is a bijection")
            })
            .collect();
        generators.retain(|&g| g != 0);
        dedup_in_order(&mut generators);
        Self::assemble(n, elements, table, inverses, generators)
    }

    /// Realizes a subgroup as a group in its own right, keeping the
    /// parent's permutation action.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for &x in h.members() {
            if !span.contains(x) {
                gens.push(x);
                span = self.subgroup_closure(gens.iter().copied());
            }
        }
        let perms: Vec<Permutation> = gens.iter().map(|&g| self.elements[g].clone()).collect();
        FiniteGroup::from_generators(&perms, self.degree, h.order())
            .expect("subgroup closure stays within its own order")
    }

    fn assemble(
        degree: usize,
        elements: Vec<Permutation>,
        table: Vec<u32>,
        inverses: Vec<u32>,
        generators: Vec<usize>,
    ) -> Self {
        let n = elements.len();
        let mut orders = vec![1u32; n];
        for (x, slot) in orders.iter_mut().enumerate().skip(1) {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = table[y * n + x] as usize;
                k += 1;
            }
            *slot = k;
        }
        Self {
            degree,
            elements,
            table,
            inverses,
            orders,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &Permutation {
        &self.elements[x]
    }

    /// Indices of the defining generators (identity and repeats removed).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.orders[a] as u64;
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Least `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x] as usize
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `g h g^-1`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.order(), (0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.order(), vec![0])
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        let n = self.order();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut members = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for s in seed {
            assert!(s < n, "element index {s} out of range");
            if mask[s] {
                continue;
            }
            gens.push(s);
            let mut cursor = 0;
            while cursor < members.len() {
                let x = members[cursor];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !mask[y] {
                        mask[y] = true;
                        members.push(y);
                    }
                }
                cursor += 1;
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Accepts `members` as a subgroup only if it contains the identity
    /// and is closed under multiplication.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Option<Subgroup> {
        let n = self.order();
        if members.iter().any(|&x| x >= n) {
            return None;
        }
        let mut mask = vec![false; n];
        for &x in members {
            mask[x] = true;
        }
        if !mask[0] {
            return None;
        }
        let ms: Vec<usize> = (0..n).filter(|&x| mask[x]).collect();
        let closed = ms.iter().all(|&a| ms.iter().all(|&b| mask[self.mul(a, b)]));
        closed.then(|| Subgroup::from_mask(mask))
    }

    /// Conjugation invariance, checked against the generators only.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators.iter().all(|&g| {
            h.members()
                .iter()
                .all(|&x| h.contains(self.conjugate(g, x)))
        })
    }

    pub fn center(&self) -> Subgroup {
        let n = self.order();
        let mask = (0..n)
            .map(|z| {
                self.generators
                    .iter()
                    .all(|&g| self.mul(z, g) == self.mul(g, z))
            })
            .collect();
        Subgroup::from_mask(mask)
    }

    /// The subgroup generated by all `[a, b]` with `a` in `a_sub`, `b` in `b_sub`.
    pub fn commutator_subgroup(&self, a_sub: &Subgroup, b_sub: &Subgroup) -> Subgroup {
        let mut comms: Vec<bool> = vec![false; self.order()];
        for &a in a_sub.members() {
            for &b in b_sub.members() {
                comms[self.commutator(a, b)] = true;
            }
        }
        self.subgroup_closure((0..self.order()).filter(|&x| comms[x]))
    }

    /// The subgroup generated by the `p`-th powers of `a_sub`.
    pub fn agemo(&self, a_sub: &Subgroup, p: u64) -> Subgroup {
        let mut powers = vec![false; self.order()];
        for &a in a_sub.members() {
            powers[self.pow(a, p)] = true;
        }
        self.subgroup_closure((0..self.order()).filter(|&x| powers[x]))
    }

    /// The subgroup generated by the union of two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.subgroup_closure(a.members().iter().chain(b.members()).copied())
    }
}

fn dedup_in_order(v: &mut Vec<usize>) {
    let mut seen = std::collections::HashSet::new();
    v.retain(|x| seen.insert(*x));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn dihedral8() -> FiniteGroup {
        FiniteGroup::from_generators(
            &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])],
            4,
            DEFAULT_ORDER_CAP,
        )
        .unwrap()
    }

    #[test]
    fn single_involution_has_order_two() {
        let g = FiniteGroup::from_generators(&[cyc(2, &[&[0, 1]])], 2, 10).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn dihedral8_closure() {
        let g = dihedral8();
        assert_eq!(g.order(), 8);
        assert!(g.element(0).is_identity());
        for w in g.elements().windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn table_agrees_with_composition() {
        let g = dihedral8();
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).then(g.element(b)));
            }
            assert!(g.element(g.mul(a, g.inv(a))).is_identity());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err =
            FiniteGroup::from_generators(&[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])], 4, 10)
                .unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded { cap: 10 });
        assert!(FiniteGroup::from_generators(&[], 3, 0).is_err());
    }

    #[test]
    fn degree_mismatch_is_invalid() {
        let err = FiniteGroup::from_generators(&[cyc(3, &[&[0, 1]])], 4, 10).unwrap_err();
        assert!(matches!(err, Error::InvalidPermutation(_)));
    }

    #[test]
    fn closure_and_normality_in_dihedral8() {
        let g = dihedral8();
        let z = g.center();
        let reflections: Vec<usize> = (1..8)
            .filter(|&x| g.element_order(x) == 2 && !z.contains(x))
            .collect();
        assert_eq!(reflections.len(), 4);
        // every non-central involution is a reflection; pairs generate V4 or the whole group
        let mut sizes = std::collections::BTreeSet::new();
        for &a in &reflections {
            for &b in &reflections {
                if a < b {
                    sizes.insert(g.subgroup_closure([a, b]).order());
                }
            }
        }
        assert_eq!(sizes.into_iter().collect::<Vec<_>>(), vec![4, 8]);

        let s = reflections[0];
        let h = g.subgroup_closure([s]);
        assert_eq!(h.order(), 2);
        assert!(!g.is_normal(&h));
        assert!(g.is_normal(&g.center()));
        assert_eq!(g.center().order(), 2);
    }

    #[test]
    fn closure_is_idempotent() {
        let g = dihedral8();
        let h = g.subgroup_closure([3]);
        assert_eq!(g.subgroup_closure(h.members().iter().copied()), h);
        assert_eq!(g.subgroup_closure([0]).order(), 1);
    }

    #[test]
    fn membership_check_rejects_non_subgroups() {
        let g = dihedral8();
        let inv = (1..8).find(|&x| g.element_order(x) == 2).unwrap();
        let rot = (1..8).find(|&x| g.element_order(x) == 4).unwrap();
        assert!(g.subgroup_from_members(&[0, inv]).is_some());
        assert!(g.subgroup_from_members(&[0, rot]).is_none());
        assert!(g.subgroup_from_members(&[1]).is_none());
        assert!(g
            .subgroup_from_members(&(0..8).collect::<Vec<_>>())
            .is_some());
    }
}
