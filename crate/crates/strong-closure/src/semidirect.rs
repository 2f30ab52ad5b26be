//! Semidirect products P ⋊ A realized on the |P| points of the regular
//! representation of P, and the coprime-action instances built on them.
//!
//! The action is specified by explicit images of P's generators under each
//! generator of A. Each generator map is extended over P's Cayley graph and
//! rejected unless it is a well-defined bijective endomorphism; the map from
//! A into those automorphisms is extended over A's Cayley graph the same way
//! and rejected unless it is a homomorphism. Kernels are allowed: the
//! constructed group is P ⋊ im(A) of order |P|·|A/ker|, acting faithfully.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::ops;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// A semidirect product with its distinguished pieces.
pub struct Semidirect {
    /// The full group on |P| points.
    pub group: Group,
    /// The regular-representation copy of P (normal in `group`).
    pub normal_part: Subgroup,
    /// Images of A's generators as automorphism permutations of the points.
    pub complement_gens: Vec<Perm>,
    /// |im(A → Aut P)|.
    pub action_image_order: u64,
}

/// Builds P ⋊ A. `action[j]` lists, for the j-th generator of A, the images
/// of P's generators (as elements of P).
pub fn semidirect_product(p: &Group, a: &Group, action: &[Vec<Perm>]) -> Result<Semidirect> {
    if action.len() != a.generators().len() {
        return Err(Error::Construction(format!(
            "action specifies {} automorphisms but A has {} generators",
            action.len(),
            a.generators().len()
        )));
    }
    let p_elems = p.elements()?.to_vec();
    let index: HashMap<Perm, u32> = p_elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i as u32))
        .collect();
    let n = p_elems.len();

    // Right-regular representation of P.
    let regular = |x: &Perm| -> Perm {
        let images: Vec<u32> = p_elems.iter().map(|e| index[&e.compose(x)] + 1).collect();
        Perm::from_images(&images).expect("right multiplication is a bijection")
    };
    let regular_gens: Vec<Perm> = p.generators().iter().map(regular).collect();

    // Each A-generator's map extends to an automorphism of P, or is rejected.
    let auto_perms: Vec<Perm> = action
        .iter()
        .map(|imgs| automorphism_perm(p, &p_elems, &index, imgs))
        .collect::<Result<_>>()?;

    // The assignment A-gens -> automorphisms must respect A's relations.
    let image_order = verify_action_homomorphism(a, &auto_perms, n)?;

    let mut gens = regular_gens.clone();
    gens.extend(auto_perms.iter().cloned());
    let group = Group::from_generators(n, gens)?;
    let normal_part = Subgroup::generated(&group, regular_gens)?;
    debug_assert_eq!(group.order(), normal_part.order() * image_order);
    debug_assert!(ops::is_normal(&group, &normal_part).expect("containment holds"));
    Ok(Semidirect {
        group,
        normal_part,
        complement_gens: auto_perms,
        action_image_order: image_order,
    })
}

/// Extends generator images to a map on all of P by walking the Cayley
/// graph, requiring consistency at every revisit, then bijectivity.
fn automorphism_perm(
    p: &Group,
    p_elems: &[Perm],
    index: &HashMap<Perm, u32>,
    gen_images: &[Perm],
) -> Result<Perm> {
    let gens = p.generators();
    if gen_images.len() != gens.len() {
        return Err(Error::Construction(format!(
            "automorphism lists {} images but P has {} generators",
            gen_images.len(),
            gens.len()
        )));
    }
    for img in gen_images {
        if !p.contains(img) {
            return Err(Error::Construction(
                "automorphism image lies outside P".into(),
            ));
        }
    }
    let n = p_elems.len();
    let id_idx = index[&Perm::identity(p.degree())] as usize;
    let mut phi: Vec<Option<u32>> = vec![None; n];
    phi[id_idx] = Some(id_idx as u32);
    let mut queue = vec![id_idx];
    while let Some(e_idx) = queue.pop() {
        let e = &p_elems[e_idx];
        let fe = &p_elems[phi[e_idx].expect("visited") as usize];
        for (g, h) in gens.iter().zip(gen_images) {
            let eg = index[&e.compose(g)] as usize;
            let feh = index[&fe.compose(h)];
            match phi[eg] {
                None => {
                    phi[eg] = Some(feh);
                    queue.push(eg);
                }
                Some(existing) if existing != feh => {
                    return Err(Error::Construction(
                        "generator images do not define a homomorphism of P".into(),
                    ));
                }
                Some(_) => {}
            }
        }
    }
    let mut seen = vec![false; n];
    let mut images = Vec::with_capacity(n);
    for slot in &phi {
        let v = slot.expect("P is generated by its generators");
        if seen[v as usize] {
            return Err(Error::Construction(
                "generator images define a non-bijective endomorphism of P".into(),
            ));
        }
        seen[v as usize] = true;
        images.push(v + 1);
    }
    Perm::from_images(&images)
}

/// Checks that A-generator ↦ automorphism extends to a homomorphism from A,
/// returning the image order.
fn verify_action_homomorphism(a: &Group, autos: &[Perm], degree: usize) -> Result<u64> {
    let a_elems = a.elements()?;
    let a_index: HashMap<&Perm, usize> = a_elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut psi: Vec<Option<Perm>> = vec![None; a_elems.len()];
    let id_idx = a_index[&Perm::identity(a.degree())];
    psi[id_idx] = Some(Perm::identity(degree));
    let mut queue = vec![id_idx];
    while let Some(i) = queue.pop() {
        let e = &a_elems[i];
        let fe = psi[i].clone().expect("visited");
        for (g, h) in a.generators().iter().zip(autos) {
            let j = a_index[&e.compose(g)];
            let feh = fe.compose(h);
            match &psi[j] {
                None => {
                    psi[j] = Some(feh);
                    queue.push(j);
                }
                Some(existing) if *existing != feh => {
                    return Err(Error::Construction(
                        "assignment does not define a homomorphism from A".into(),
                    ));
                }
                Some(_) => {}
            }
        }
    }
    let mut distinct: Vec<Perm> = psi.into_iter().map(|x| x.expect("A is connected")).collect();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(distinct.len() as u64)
}

// ---------------------------------------------------------------------------
// Coprime-action instances
// ---------------------------------------------------------------------------

/// An odd-order group acting on a 2-group, packaged with the semidirect
/// product the lemma checks run inside.
pub struct CoprimeActionInstance {
    pub id: String,
    pub semidirect: Semidirect,
    /// |A| of the acting group (before any kernel collapses).
    pub acting_order: u64,
}

impl CoprimeActionInstance {
    pub fn build(id: &str, p: &Group, a: &Group, action: &[Vec<Perm>]) -> Result<Self> {
        if a.order() % 2 == 0 {
            return Err(Error::Construction(format!(
                "instance {id}: acting group must have odd order, got {}",
                a.order()
            )));
        }
        let p_order = p.order();
        if crate::arith::p_part(p_order, 2) != p_order {
            return Err(Error::Construction(format!(
                "instance {id}: acted-on group must be a 2-group, got order {p_order}"
            )));
        }
        let semidirect = semidirect_product(p, a, action)?;
        Ok(CoprimeActionInstance {
            id: id.to_string(),
            semidirect,
            acting_order: a.order(),
        })
    }

    pub fn group(&self) -> &Group {
        &self.semidirect.group
    }

    pub fn normal_part(&self) -> &Subgroup {
        &self.semidirect.normal_part
    }

    /// Whether every complement generator fixes `x` under conjugation, i.e.
    /// the acting group centralizes the element x of P.
    pub fn action_fixes(&self, x: &Perm) -> bool {
        self.semidirect
            .complement_gens
            .iter()
            .all(|a| x.conjugate(a) == *x)
    }

    /// Whether a subgroup of P is invariant under the action.
    pub fn action_preserves(&self, h: &Subgroup) -> bool {
        self.semidirect.complement_gens.iter().all(|a| {
            h.group()
                .generators()
                .iter()
                .all(|x| h.contains(&x.conjugate(a)))
        })
    }

    /// Whether the action is trivial: the complement centralizes P.
    pub fn action_is_trivial(&self) -> bool {
        self.normal_part()
            .group()
            .generators()
            .iter()
            .all(|x| self.action_fixes(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Perm {
        Perm::parse(degree, s).unwrap()
    }

    fn v4() -> Group {
        Group::from_generators(4, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap()
    }

    #[test]
    fn v4_rotated_by_c3_gives_a4_shape() {
        // C3 cycles the three involutions: g1 -> g2 -> g1*g2 -> g1
        let a = Group::from_generators(3, vec![p(3, "(1 2 3)")]).unwrap();
        let g1 = p(4, "(1 2)(3 4)");
        let g2 = p(4, "(1 3)(2 4)");
        let sd = semidirect_product(&v4(), &a, &[vec![g2.clone(), g1.compose(&g2)]]).unwrap();
        assert_eq!(sd.group.order(), 12);
        assert_eq!(sd.action_image_order, 3);
        assert_eq!(sd.normal_part.order(), 4);
        assert!(!crate::structure::is_supersolvable(&sd.group).unwrap());
    }

    #[test]
    fn kernel_is_factored_out() {
        // C9 acting through its C3 quotient
        let a = Group::from_generators(9, vec![p(9, "(1 2 3 4 5 6 7 8 9)")]).unwrap();
        let g1 = p(4, "(1 2)(3 4)");
        let g2 = p(4, "(1 3)(2 4)");
        let sd = semidirect_product(&v4(), &a, &[vec![g2.clone(), g1.compose(&g2)]]).unwrap();
        assert_eq!(sd.action_image_order, 3);
        assert_eq!(sd.group.order(), 12);
    }

    #[test]
    fn trivial_action_collapses_to_the_normal_part() {
        // faithful construction: order = |P| · |A/ker|, and ker = A here
        let a = Group::from_generators(3, vec![p(3, "(1 2 3)")]).unwrap();
        let g1 = p(4, "(1 2)(3 4)");
        let g2 = p(4, "(1 3)(2 4)");
        let sd = semidirect_product(&v4(), &a, &[vec![g1, g2]]).unwrap();
        assert_eq!(sd.action_image_order, 1);
        assert_eq!(sd.group.order(), 4);
        assert!(sd.complement_gens.iter().all(|a| a.is_identity()));
        assert!(crate::shape::is_abelian(&sd.group));
    }

    #[test]
    fn non_bijective_endomorphisms_are_rejected() {
        // sending both V4 generators to the same involution is not injective
        let a = Group::from_generators(3, vec![p(3, "(1 2 3)")]).unwrap();
        let g1 = p(4, "(1 2)(3 4)");
        assert!(semidirect_product(&v4(), &a, &[vec![g1.clone(), g1]]).is_err());
    }

    #[test]
    fn order_mismatch_in_action_is_rejected() {
        // C2 cannot act with order 3... the assignment g1 -> g2 under an
        // involution generator squares to g1 -> g1*g2, not the identity map
        let a = Group::from_generators(2, vec![p(2, "(1 2)")]).unwrap();
        let g1 = p(4, "(1 2)(3 4)");
        let g2 = p(4, "(1 3)(2 4)");
        let r = semidirect_product(&v4(), &a, &[vec![g2, g1.compose(&p(4, "(1 3)(2 4)"))]]);
        assert!(r.is_err());
    }

    #[test]
    fn coprime_instance_rejects_even_actors() {
        let a = Group::from_generators(2, vec![p(2, "(1 2)")]).unwrap();
        let g1 = p(4, "(1 2)(3 4)");
        let g2 = p(4, "(1 3)(2 4)");
        assert!(CoprimeActionInstance::build("bad", &v4(), &a, &[vec![g2, g1]]).is_err());
    }
}
