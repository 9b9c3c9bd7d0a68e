use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

/// A set of element indices of some parent group that is closed under the
/// group operation. Members are kept sorted; a membership mask gives O(1)
/// lookups.
///
/// Subgroups do not borrow their parent. They remember its order, and
/// every operation taking a `(group, subgroup)` pair asserts that it matches.
#[derive(Clone, Debug)]
pub struct Subgroup {
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let members = (0..mask.len()).filter(|&x| mask[x]).collect();
        Self { mask, members }
    }

    pub(crate) fn from_sorted_unchecked(parent_order: usize, members: Vec<usize>) -> Self {
        let mut mask = vec![false; parent_order];
        for &x in &members {
            mask[x] = true;
        }
        Self { mask, members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn index_in(&self, other: &Subgroup) -> Option<usize> {
        (self.is_subset_of(other) && other.order() % self.order() == 0)
            .then(|| other.order() / self.order())
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(a, b)| *a && *b)
            .collect();
        Subgroup::from_mask(mask)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask.len() == other.mask.len() && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.len().hash(state);
        self.members.hash(state);
    }
}

/// Lexicographic on the sorted member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .cmp(&other.members)
            .then(self.mask.len().cmp(&other.mask.len()))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
