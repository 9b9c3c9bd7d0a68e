use crate::group::finite_group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least element index in the class.
    pub representative: usize,
    pub members: Vec<usize>,
    /// Common order of the members.
    pub order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl FiniteGroup {
    /// Orbit of `x` under conjugation.
    pub fn conjugacy_class_of(&self, x: usize) -> ConjugacyClass {
        let mut seen = vec![false; self.order()];
        seen[x] = true;
        let mut members = vec![x];
        let mut cursor = 0;
        while cursor < members.len() {
            let y = members[cursor];
            for &g in self.generators() {
                let z = self.conjugate(g, y);
                if !seen[z] {
                    seen[z] = true;
                    members.push(z);
                }
            }
            cursor += 1;
        }
        members.sort_unstable();
        ConjugacyClass {
            representative: members[0],
            order: self.element_order(x),
            members,
        }
    }

    /// All classes, ordered by representative (so the identity class is first).
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let mut assigned = vec![false; self.order()];
        let mut out = Vec::new();
        for x in 0..self.order() {
            if assigned[x] {
                continue;
            }
            let class = self.conjugacy_class_of(x);
            for &y in &class.members {
                assigned[y] = true;
            }
            out.push(class);
        }
        out
    }
}
