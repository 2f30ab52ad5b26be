//! Sylow subgroup computation.
//!
//! A Sylow p-subgroup is grown rather than searched for: start from a
//! p-element of maximal order, then repeatedly pick the first p-element of
//! N_G(Q) outside Q (in lex order) and extend. Since any p-element
//! normalizing a p-group generates a larger p-group with it, every step
//! multiplies the order by at least p, and a non-Sylow p-subgroup always has
//! p-elements outside itself in its normalizer. The element scan order is
//! deterministic, so repeated runs produce the identical subgroup.

use crate::arith::{is_prime, p_part};
use crate::error::{Error, Result};
use crate::group::{span_elements, Group};
use crate::ops;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

fn is_p_element(x: &Perm, p: u64) -> bool {
    let mut o = x.order();
    while o % p == 0 {
        o /= p;
    }
    o == 1
}

/// A Sylow p-subgroup of G (the trivial subgroup when p ∤ |G|).
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(Subgroup::trivial(g));
    }

    // Seed: first p-element of maximal order.
    let elems = g.elements()?;
    let mut seed: Option<&Perm> = None;
    for x in elems {
        if !x.is_identity() && is_p_element(x, p) {
            match seed {
                Some(s) if s.order() >= x.order() => {}
                _ => seed = Some(x),
            }
        }
    }
    let seed = seed.expect("p divides |G|, so a p-element exists");
    let mut sub_gens = vec![seed.clone()];
    let mut sub_elems = span_elements(g.degree(), &sub_gens);

    while (sub_elems.len() as u64) < target {
        let q = Subgroup::from_member_set(g, sub_elems.clone());
        let n = ops::normalizer(g, &q)?;
        let extender = n
            .canonical_key()?
            .iter()
            .find(|x| !x.is_identity() && is_p_element(x, p) && sub_elems.binary_search(x).is_err())
            .expect("a p-subgroup below the Sylow order has a p-element beyond it in its normalizer")
            .clone();
        sub_gens.push(extender);
        sub_elems = span_elements(g.degree(), &sub_gens);
    }
    debug_assert_eq!(sub_elems.len() as u64, target);
    Ok(Subgroup::from_member_set(g, sub_elems))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Perm {
        Perm::parse(degree, s).unwrap()
    }

    #[test]
    fn sylow_2_of_s4_is_dihedral_of_order_8() {
        let g = Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 2)")]).unwrap();
        let s = sylow_subgroup(&g, 2).unwrap();
        assert_eq!(s.order(), 8);
        // order statistics of D8: 1 identity, 5 involutions, 2 of order 4
        let orders: Vec<u64> = s.canonical_key().unwrap().iter().map(|x| x.order()).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 5);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 2);
    }

    #[test]
    fn sylow_3_of_c6_is_the_unique_order_3_subgroup() {
        let g = Group::from_generators(6, vec![p(6, "(1 2 3 4 5 6)")]).unwrap();
        let s = sylow_subgroup(&g, 3).unwrap();
        assert_eq!(s.order(), 3);
        assert!(s.contains(&p(6, "(1 3 5)(2 4 6)")));
    }

    #[test]
    fn sylow_for_non_divisor_is_trivial() {
        let g = Group::from_generators(3, vec![p(3, "(1 2 3)"), p(3, "(1 2)")]).unwrap();
        assert_eq!(sylow_subgroup(&g, 5).unwrap().order(), 1);
    }

    #[test]
    fn composite_p_is_rejected() {
        let g = Group::trivial(2);
        assert!(matches!(sylow_subgroup(&g, 6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn repeated_runs_agree() {
        let g = Group::from_generators(5, vec![p(5, "(1 2 3 4 5)"), p(5, "(1 2)")]).unwrap();
        let a = sylow_subgroup(&g, 2).unwrap();
        let b = sylow_subgroup(&g, 2).unwrap();
        assert_eq!(a, b);
    }
}
