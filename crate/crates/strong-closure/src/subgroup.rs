//! Subgroups: a group together with its ambient parent.
//!
//! Set identity is by canonical key — the lex-sorted element list — so two
//! subgroups compare equal exactly when they are the same subset of the
//! parent, regardless of the generators that produced them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{reduce_generators, span_elements, Group};
use crate::perm::Perm;

#[derive(Clone)]
pub struct Subgroup {
    group: Group,
    parent: Group,
}

impl Subgroup {
    /// Wraps `group` as a subgroup of `parent`, verifying containment of the
    /// generators (hence of the whole subgroup).
    pub fn new(group: Group, parent: Group) -> Result<Self> {
        if group.degree() != parent.degree() {
            return Err(Error::DegreeMismatch(parent.degree(), group.degree()));
        }
        for g in group.generators() {
            if !parent.contains(g) {
                return Err(Error::NotContained);
            }
        }
        Ok(Subgroup { group, parent })
    }

    /// Subgroup generated by `gens` inside `parent`.
    pub fn generated(parent: &Group, gens: Vec<Perm>) -> Result<Self> {
        let group = Group::from_generators(parent.degree(), gens)?;
        Subgroup::new(group, parent.clone())
    }

    /// Subgroup from a complete, closed element set (not re-verified).
    pub(crate) fn from_member_set(parent: &Group, elems: Vec<Perm>) -> Self {
        let degree = parent.degree();
        let mut sorted = elems;
        sorted.sort_unstable();
        sorted.dedup();
        let gens = reduce_generators(degree, &sorted);
        Subgroup {
            group: Group::from_elements(degree, gens, sorted),
            parent: parent.clone(),
        }
    }

    pub fn trivial(parent: &Group) -> Self {
        Subgroup {
            group: Group::trivial(parent.degree()),
            parent: parent.clone(),
        }
    }

    /// The whole parent viewed as a subgroup of itself.
    pub fn whole(parent: &Group) -> Self {
        Subgroup {
            group: parent.clone(),
            parent: parent.clone(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn index(&self) -> u64 {
        self.parent.order() / self.group.order()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.group.contains(p)
    }

    pub fn is_whole(&self) -> bool {
        self.group.order() == self.parent.order()
    }

    /// Canonical key: the subgroup's elements in lex order.
    pub fn canonical_key(&self) -> Result<&[Perm]> {
        self.group.elements()
    }

    /// Whether `self ≤ other` as subsets (both must share the parent's degree).
    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        self.group
            .generators()
            .iter()
            .all(|g| other.group.contains(g))
    }

    /// The same subgroup re-attached to a larger ambient group. Fails if some
    /// generator falls outside `new_parent`.
    pub fn reparent(&self, new_parent: &Group) -> Result<Subgroup> {
        Subgroup::new(self.group.clone(), new_parent.clone())
    }

    /// Conjugate subgroup `self^g` (same parent).
    pub fn conjugate(&self, g: &Perm) -> Subgroup {
        match self.group.elements() {
            Ok(elems) => {
                let conj: Vec<Perm> = elems.iter().map(|x| x.conjugate(g)).collect();
                Subgroup::from_member_set(&self.parent, conj)
            }
            Err(_) => {
                let gens: Vec<Perm> = self
                    .group
                    .generators()
                    .iter()
                    .map(|x| x.conjugate(g))
                    .collect();
                let group = Group::from_generators(self.parent.degree(), gens)
                    .expect("conjugate preserves degree");
                Subgroup {
                    group,
                    parent: self.parent.clone(),
                }
            }
        }
    }

    /// Join `⟨self ∪ other⟩` inside the shared parent.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens: Vec<Perm> = self.group.generators().to_vec();
        gens.extend_from_slice(other.group.generators());
        let elems = span_elements(self.parent.degree(), &gens);
        Subgroup::from_member_set(&self.parent, elems)
    }

    /// Intersection as subgroups of the shared parent. Both sides must be
    /// enumerable.
    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let members: Vec<Perm> = small
            .group
            .elements()?
            .iter()
            .filter(|x| large.contains(x))
            .cloned()
            .collect();
        Ok(Subgroup::from_member_set(&self.parent, members))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        if self.group.degree() != other.group.degree() || self.order() != other.order() {
            return false;
        }
        match (self.canonical_key(), other.canonical_key()) {
            (Ok(a), Ok(b)) => a == b,
            // Above the enumeration bound, fall back to mutual containment.
            _ => self.is_contained_in(other) && other.is_contained_in(self),
        }
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for deterministic tie-breaking: order first, then the
/// canonical key lexicographically.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| {
            match (self.canonical_key(), other.canonical_key()) {
                (Ok(a), Ok(b)) => a.cmp(b),
                _ => Ordering::Equal,
            }
        })
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {:?})", self.group.order(), self.parent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Perm {
        Perm::parse(degree, s).unwrap()
    }

    fn s4() -> Group {
        Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 2)")]).unwrap()
    }

    #[test]
    fn containment_is_checked() {
        let g = s4();
        let a4 = Group::from_generators(4, vec![p(4, "(1 2 3)"), p(4, "(2 3 4)")]).unwrap();
        assert!(Subgroup::new(a4, g.clone()).is_ok());
        let c5 = Group::from_generators(4, vec![p(4, "(1 2 3)")]).unwrap();
        assert!(Subgroup::new(c5, g).is_ok());
    }

    #[test]
    fn equality_is_by_element_set() {
        let g = s4();
        let v1 = Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        let v2 = Subgroup::generated(&g, vec![p(4, "(1 4)(2 3)"), p(4, "(1 3)(2 4)")]).unwrap();
        assert_eq!(v1, v2);
        let c2 = Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)")]).unwrap();
        assert_ne!(v1, c2);
    }

    #[test]
    fn join_and_intersection() {
        let g = s4();
        let a = Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)")]).unwrap();
        let b = Subgroup::generated(&g, vec![p(4, "(1 3)(2 4)")]).unwrap();
        let v4 = a.join(&b);
        assert_eq!(v4.order(), 4);
        assert_eq!(a.intersection(&b).unwrap().order(), 1);
        assert_eq!(v4.intersection(&a).unwrap(), a);
    }

    #[test]
    fn conjugate_moves_the_subgroup() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)")]).unwrap();
        let hc = h.conjugate(&p(4, "(2 3)"));
        assert!(hc.contains(&p(4, "(1 3)")));
        assert_eq!(hc.order(), 2);
    }
}
