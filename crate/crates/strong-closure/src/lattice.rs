//! Exhaustive subgroup enumeration for small groups.
//!
//! The full lattice is computed as the join-closure of the cyclic subgroups:
//! every subgroup is the join of the cyclic subgroups it contains, and every
//! intermediate join is itself a subgroup, so a worklist of joins against the
//! cyclic seeds reaches the whole lattice. (Extending only by prime-order
//! cyclics would miss perfect subgroups such as A₅ inside S₅, which this
//! corpus needs.) Deduplication is by canonical key; results are cached on
//! the group and sorted by (order, key) so enumeration order is reproducible.
//!
//! Inside a p-group, subgroups of one fixed order are enumerated layer by
//! layer instead: each subgroup of order p^(k+1) is ⟨M, x⟩ for a subgroup M
//! of order p^k and an element x normalizing M, which is exactly the cyclic
//! extension step and is complete for p-groups.

use std::collections::{HashMap, HashSet};

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::group::{span_elements, Group, LATTICE_BOUND, PGROUP_LAYER_BOUND};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// A conjugacy class of subgroups of the parent group.
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub conjugates: Vec<Subgroup>,
}

impl SubgroupClass {
    pub fn class_size(&self) -> usize {
        self.conjugates.len()
    }
}

fn lattice_groups<'g>(g: &'g Group, bound: u64) -> Result<&'g [Group]> {
    if let Some(l) = g.lattice_cache().get() {
        return Ok(l);
    }
    let order = g.order();
    if order > bound {
        return Err(Error::BoundExceeded { order, bound });
    }
    let elems = g.elements()?.to_vec();
    let degree = g.degree();

    // Seed with every cyclic subgroup (composite orders included; a subgroup
    // need not be generated by its prime-order elements).
    let mut cyclic_gens: Vec<Perm> = Vec::new();
    let mut seen_keys: HashSet<Vec<Perm>> = HashSet::new();
    let trivial_key = vec![Perm::identity(degree)];
    seen_keys.insert(trivial_key.clone());
    let mut subgroups: Vec<(Vec<Perm>, Vec<Perm>)> = vec![(trivial_key, vec![])]; // (sorted elems, gens)
    for x in &elems {
        if x.is_identity() {
            continue;
        }
        let key = span_elements(degree, std::slice::from_ref(x));
        if seen_keys.insert(key.clone()) {
            subgroups.push((key, vec![x.clone()]));
        }
        cyclic_gens.push(x.clone());
    }
    // Keep one generator per distinct cyclic subgroup to cut join count.
    let mut cyclic_reps: Vec<Perm> = Vec::new();
    {
        let mut keys: HashSet<Vec<Perm>> = HashSet::new();
        for x in &cyclic_gens {
            let key = span_elements(degree, std::slice::from_ref(x));
            if keys.insert(key) {
                cyclic_reps.push(x.clone());
            }
        }
    }

    let mut i = 0;
    while i < subgroups.len() {
        let (key, gens) = subgroups[i].clone();
        for c in &cyclic_reps {
            if key.binary_search(c).is_ok() {
                continue;
            }
            let mut join_gens = gens.clone();
            join_gens.push(c.clone());
            let join = span_elements(degree, &join_gens);
            if seen_keys.insert(join.clone()) {
                subgroups.push((join, join_gens));
            }
        }
        i += 1;
    }

    let mut groups: Vec<Group> = subgroups
        .into_iter()
        .map(|(key, gens)| Group::from_elements(degree, gens, key))
        .collect();
    groups.sort_by(|a, b| {
        a.order().cmp(&b.order()).then_with(|| {
            a.elements()
                .expect("pre-seeded")
                .cmp(b.elements().expect("pre-seeded"))
        })
    });
    let _ = g.lattice_cache().set(groups);
    Ok(g.lattice_cache().get().expect("just set"))
}

/// Every subgroup of G, grouped into conjugacy classes. Classes are ordered
/// by their representative (smallest order, then smallest canonical key).
pub fn all_subgroups(g: &Group) -> Result<Vec<SubgroupClass>> {
    let groups = lattice_groups(g, LATTICE_BOUND)?;
    let key_index: HashMap<&[Perm], usize> = groups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.elements().expect("pre-seeded"), i))
        .collect();
    let mut assigned = vec![false; groups.len()];
    let mut classes = Vec::new();
    for (i, rep) in groups.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let mut member_idx = vec![i];
        let mut frontier = vec![i];
        while let Some(j) = frontier.pop() {
            let elems = groups[j].elements().expect("pre-seeded");
            for cg in g.generators() {
                let mut conj: Vec<Perm> = elems.iter().map(|x| x.conjugate(cg)).collect();
                conj.sort_unstable();
                let k = key_index[&conj[..]];
                if !assigned[k] {
                    assigned[k] = true;
                    member_idx.push(k);
                    frontier.push(k);
                }
            }
        }
        member_idx.sort_unstable();
        let conjugates: Vec<Subgroup> = member_idx
            .iter()
            .map(|&k| Subgroup::new(groups[k].clone(), g.clone()).expect("lattice member"))
            .collect();
        classes.push(SubgroupClass {
            representative: Subgroup::new(rep.clone(), g.clone()).expect("lattice member"),
            conjugates,
        });
    }
    Ok(classes)
}

/// Every individual subgroup of G, in canonical order.
pub fn all_subgroups_flat(g: &Group) -> Result<Vec<Subgroup>> {
    Ok(lattice_groups(g, LATTICE_BOUND)?
        .iter()
        .map(|s| Subgroup::new(s.clone(), g.clone()).expect("lattice member"))
        .collect())
}

/// Whether |G| is a prime power.
pub fn is_p_group(g: &Group) -> bool {
    let f = factorize(g.order());
    f.len() <= 1
}

/// All subgroups of G of order n, deduplicated, in canonical order.
///
/// For p-groups this walks the lattice layer by layer up to n without
/// materializing the full lattice; otherwise it filters the lattice.
pub fn subgroups_of_order(g: &Group, n: u64) -> Result<Vec<Subgroup>> {
    let order = g.order();
    if n == 0 || order % n != 0 {
        return Err(Error::NotADivisor(n, order));
    }
    if n == 1 {
        return Ok(vec![Subgroup::trivial(g)]);
    }
    if n == order {
        return Ok(vec![Subgroup::whole(g)]);
    }
    let factors = factorize(order);
    if factors.len() == 1 {
        let p = factors[0].0;
        if order > PGROUP_LAYER_BOUND {
            return Err(Error::BoundExceeded {
                order,
                bound: PGROUP_LAYER_BOUND,
            });
        }
        return p_group_layer(g, p, n);
    }
    let mut out: Vec<Subgroup> = all_subgroups_flat(g)?
        .into_iter()
        .filter(|s| s.order() == n)
        .collect();
    out.sort();
    Ok(out)
}

/// Subgroups of order n = p^k inside a p-group, by iterated cyclic extension.
fn p_group_layer(g: &Group, p: u64, n: u64) -> Result<Vec<Subgroup>> {
    let degree = g.degree();
    let elems = g.elements()?;
    // layer 1: cyclic subgroups of order p
    let mut layer: Vec<(Vec<Perm>, Vec<Perm>)> = Vec::new();
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    for x in elems {
        if x.order() == p {
            let key = span_elements(degree, std::slice::from_ref(x));
            if seen.insert(key.clone()) {
                layer.push((key, vec![x.clone()]));
            }
        }
    }
    let mut size = p;
    while size < n {
        let mut next: Vec<(Vec<Perm>, Vec<Perm>)> = Vec::new();
        let mut next_seen: HashSet<Vec<Perm>> = HashSet::new();
        for (key, gens) in &layer {
            for x in elems {
                if key.binary_search(x).is_ok() {
                    continue;
                }
                // x must normalize the current subgroup for ⟨M, x⟩ to be
                // an extension of order p·|M|; other x's are skipped.
                if !gens_normalized_by(key, x) {
                    continue;
                }
                let mut ext_gens = gens.clone();
                ext_gens.push(x.clone());
                let ext = span_elements(degree, &ext_gens);
                if ext.len() as u64 == size * p && next_seen.insert(ext.clone()) {
                    next.push((ext, ext_gens));
                }
            }
        }
        layer = next;
        size *= p;
    }
    let mut out: Vec<Subgroup> = layer
        .into_iter()
        .map(|(key, gens)| {
            Subgroup::new(Group::from_elements(degree, gens, key), g.clone())
                .expect("layer member")
        })
        .collect();
    out.sort();
    Ok(out)
}

fn gens_normalized_by(sub_elems: &[Perm], x: &Perm) -> bool {
    sub_elems
        .iter()
        .all(|s| sub_elems.binary_search(&s.conjugate(x)).is_ok())
}

/// Maximal subgroups of a p-group: exactly the subgroups of index p.
pub fn maximal_subgroups(p_group: &Group) -> Result<Vec<Subgroup>> {
    let factors = factorize(p_group.order());
    if factors.len() != 1 {
        return Err(Error::NotAPGroup(p_group.order()));
    }
    let p = factors[0].0;
    subgroups_of_order(p_group, p_group.order() / p)
}

/// Φ(P): the intersection of all maximal subgroups of the p-group P.
pub fn frattini_subgroup(p_group: &Group) -> Result<Subgroup> {
    let maximals = maximal_subgroups(p_group)?;
    if maximals.is_empty() {
        // trivial p-group
        return Ok(Subgroup::trivial(p_group));
    }
    let mut members: Vec<Perm> = maximals[0].canonical_key()?.to_vec();
    for m in &maximals[1..] {
        members.retain(|x| m.contains(x));
    }
    Ok(Subgroup::from_member_set(p_group, members))
}
