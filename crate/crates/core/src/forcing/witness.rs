use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, QuotientMap};

/// A conjugacy class of a quotient target whose fibers preserve order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingWitness {
    /// Least target element index in the class.
    pub class_rep: usize,
    /// Common order of the class members.
    pub class_order: usize,
    /// Fiber size over each class member, in member order.
    pub checked_fiber_sizes: Vec<usize>,
}

fn fiber_preserves_order(q: &QuotientMap<'_>, t: usize) -> bool {
    let want = q.target().element_order(t);
    q.fiber(t)
        .iter()
        .all(|&x| q.source().element_order(x) == want)
}

/// Checks every member of `class`; `None` if any fiber element differs
/// in order from its image.
fn full_check(q: &QuotientMap<'_>, class: &ConjugacyClass) -> Option<ForcingWitness> {
    let mut sizes = Vec::with_capacity(class.size());
    for &c in &class.members {
        if !fiber_preserves_order(q, c) {
            return None;
        }
        sizes.push(q.fiber(c).len());
    }
    Some(ForcingWitness {
        class_rep: class.representative,
        class_order: class.order,
        checked_fiber_sizes: sizes,
    })
}

/// Searches the non-identity classes of the target for one whose fibers
/// keep the order of every member. Among qualifying classes the least
/// order wins, then the least representative.
///
/// Fibers over conjugate elements are conjugate, so the search decides on
/// representatives and runs the full per-member check only on the winner.
pub fn is_forcing(q: &QuotientMap<'_>) -> Option<ForcingWitness> {
    let mut classes: Vec<ConjugacyClass> = q
        .target()
        .conjugacy_classes()
        .into_iter()
        .filter(|c| c.representative != 0)
        .filter(|c| fiber_preserves_order(q, c.representative))
        .collect();
    classes.sort_by_key(|c| (c.order, c.representative));
    classes.iter().find_map(|c| full_check(q, c))
}

/// Witness for a central extension with kernel of prime order `p`: the
/// class of `project(y)` for an element `y` of order `p` outside the kernel.
/// `Ok(None)` exactly when the source has a single subgroup of order `p`.
pub fn central_step_witness(q: &QuotientMap<'_>) -> Result<Option<ForcingWitness>> {
    let source = q.source();
    let kernel = q.kernel();
    let p = kernel.order();
    if p < 2 || !crate::arith::is_prime(p as u64) {
        return Err(Error::PreconditionViolated(format!(
            "kernel has order {p}, which is not prime"
        )));
    }
    let central = kernel.members().iter().all(|&k| {
        source
            .generators()
            .iter()
            .all(|&g| source.mul(k, g) == source.mul(g, k))
    });
    if !central {
        return Err(Error::PreconditionViolated("kernel is not central".into()));
    }

    let target = q.target();
    let best = (0..source.order())
        .filter(|&y| source.element_order(y) == p && !kernel.contains(y))
        .map(|y| target.conjugacy_class_of(q.project(y)))
        .min_by_key(|c| c.representative);
    Ok(best.and_then(|class| full_check(q, &class)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, GroupSpec};

    fn build(spec: &str) -> FiniteGroup {
        GroupSpec::parse(spec).unwrap().build(4096).unwrap()
    }

    #[test]
    fn c6_onto_c3_is_not_forcing() {
        let g = build("preset:Cyclic(6)");
        let two = g.subgroup_closure((0..6).filter(|&x| g.element_order(x) == 2));
        let q = g.quotient(&two).unwrap();
        assert_eq!(q.target().order(), 3);
        assert_eq!(is_forcing(&q), None);
    }

    #[test]
    fn q8_onto_klein_four_is_not_forcing() {
        let g = build("preset:GenQuaternion(1)");
        let q = g.quotient(&g.center()).unwrap();
        assert_eq!(q.target().order(), 4);
        for t in 1..4 {
            assert_eq!(q.target().element_order(t), 2);
            assert!(q.fiber(t).iter().all(|&x| g.element_order(x) == 4));
        }
        assert_eq!(is_forcing(&q), None);
        assert_eq!(central_step_witness(&q).unwrap(), None);
    }

    #[test]
    fn dihedral_onto_klein_four_is_forcing() {
        let g = build("preset:Dihedral(8)");
        let q = g.quotient(&g.center()).unwrap();
        let w = is_forcing(&q).unwrap();
        assert_eq!(w.class_order, 2);
        assert!(w.checked_fiber_sizes.iter().all(|&s| s == 2));
        assert_eq!(central_step_witness(&q).unwrap().unwrap().class_order, 2);
    }

    #[test]
    fn exponent_three_source_is_forcing() {
        let g = build("preset:ElemAbelian(3,2)");
        let k = g.subgroup_closure([1]);
        let q = g.quotient(&k).unwrap();
        assert_eq!(is_forcing(&q).unwrap().class_order, 3);
    }

    #[test]
    fn central_witness_cases() {
        let v4 = build("preset:ElemAbelian(2,2)");
        for k in 1..4 {
            let q = v4.quotient(&v4.subgroup_closure([k])).unwrap();
            assert_eq!(central_step_witness(&q).unwrap().unwrap().class_order, 2);
        }
        let h = build("preset:Heisenberg(3)");
        let q = h.quotient(&h.center()).unwrap();
        assert_eq!(central_step_witness(&q).unwrap().unwrap().class_order, 3);
    }

    #[test]
    fn central_witness_preconditions() {
        let d8 = build("preset:Dihedral(8)");
        let noncentral = (1..8)
            .find(|&x| d8.element_order(x) == 2 && !d8.center().contains(x))
            .unwrap();
        // V4 containing a reflection is normal, but of order 4
        let v = d8.subgroup_closure([noncentral, d8.center().members()[1]]);
        let q = d8.quotient(&v).unwrap();
        assert!(matches!(
            central_step_witness(&q),
            Err(Error::PreconditionViolated(_))
        ));

        let s3 = build("preset:Symmetric(3)");
        let a3 = s3.subgroup_closure((0..6).filter(|&x| s3.element_order(x) == 3));
        let q = s3.quotient(&a3).unwrap();
        assert!(matches!(
            central_step_witness(&q),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
