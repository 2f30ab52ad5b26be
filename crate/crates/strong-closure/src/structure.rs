//! Structural conclusions the theorem checks assert: p-nilpotence, p-cores,
//! Fitting and generalized Fitting subgroups, components, chief series,
//! supersolvability, Sylow towers, and the order-2/4 centrality condition.

use std::collections::{BTreeMap, HashSet};

use crate::arith::{is_prime, p_part, primes_dividing};
use crate::error::{Error, Result};
use crate::group::{incremental_span, span_elements, Group};
use crate::ops;
use crate::perm::Perm;
use crate::subgroup::Subgroup;
use crate::sylow::sylow_subgroup;

// ---------------------------------------------------------------------------
// Normal subgroup lattice
// ---------------------------------------------------------------------------

/// Every normal subgroup of G, in canonical order (order, then key).
///
/// Normal subgroups are exactly the joins of normal closures of single
/// conjugacy classes, so the lattice is the join-closure of the class
/// closures. No full subgroup lattice is needed; this stays feasible for
/// the distinguished large catalog entries.
pub fn normal_subgroups(g: &Group) -> Result<&[Group]> {
    if let Some(n) = g.normals_cache().get() {
        return Ok(n);
    }
    let degree = g.degree();
    let classes = g.conjugacy_classes()?;
    // closure of each nontrivial class, generated incrementally so the spans
    // never run with hundreds of class members as generators
    let mut class_closures: Vec<(Vec<Perm>, Vec<Perm>)> = Vec::new(); // (elems, gens)
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    for c in classes {
        if c.rep().is_identity() {
            continue;
        }
        let (elems, gens) = incremental_span(degree, &[], &c.members);
        if seen.insert(elems.clone()) {
            class_closures.push((elems, gens));
        }
    }
    let trivial = vec![Perm::identity(degree)];
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    seen.insert(trivial.clone());
    let mut normals: Vec<(Vec<Perm>, Vec<Perm>)> = vec![(trivial, vec![])];
    let mut i = 0;
    while i < normals.len() {
        let (elems, gens) = normals[i].clone();
        for (c_elems, c_gens) in &class_closures {
            if c_elems.len() > elems.len()
                || c_elems.iter().any(|x| elems.binary_search(x).is_err())
            {
                let mut join_gens = gens.clone();
                join_gens.extend_from_slice(c_gens);
                let join = span_elements(degree, &join_gens);
                if seen.insert(join.clone()) {
                    normals.push((join, join_gens));
                }
            }
        }
        i += 1;
    }
    let mut groups: Vec<Group> = normals
        .into_iter()
        .map(|(elems, _)| {
            let gens = crate::group::reduce_generators(degree, &elems);
            Group::from_elements(degree, gens, elems)
        })
        .collect();
    groups.sort_by(|a, b| {
        a.order().cmp(&b.order()).then_with(|| {
            a.elements()
                .expect("pre-seeded")
                .cmp(b.elements().expect("pre-seeded"))
        })
    });
    let _ = g.normals_cache().set(groups);
    Ok(g.normals_cache().get().expect("just set"))
}

/// Minimal normal subgroups of G lying strictly above `floor` (a normal
/// subgroup of G). Candidates are the closures ⟨floor ∪ class(x)⟩ for class
/// representatives x outside floor; the minimal-order candidates are exactly
/// the chief factors over floor. Ties are broken by canonical key.
fn minimal_normal_over(g: &Group, floor_gens: &[Perm], floor: &[Perm]) -> Result<Vec<Perm>> {
    let degree = g.degree();
    let classes = g.conjugacy_classes()?;
    let mut best: Option<Vec<Perm>> = None;
    for c in classes {
        if floor.binary_search(c.rep()).is_ok() {
            continue;
        }
        let (candidate, _) = incremental_span(degree, floor_gens, &c.members);
        match &best {
            Some(b) if (b.len(), b) <= (candidate.len(), &candidate) => {}
            _ => best = Some(candidate),
        }
    }
    Ok(best.expect("floor is proper, so a class lies outside it"))
}

// ---------------------------------------------------------------------------
// Derived series, solvability, nilpotence
// ---------------------------------------------------------------------------

/// [G, G] as a subgroup of G: the normal closure of the generator
/// commutators.
pub fn derived_subgroup(g: &Group) -> Result<Subgroup> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    let h = Subgroup::generated(g, comms)?;
    ops::normal_closure(g, &h)
}

/// Terminal member of the derived series (the perfect residual).
pub fn perfect_residual(g: &Group) -> Result<Group> {
    let mut current = g.clone();
    loop {
        let d = derived_subgroup(&current)?;
        if d.order() == current.order() {
            return Ok(current);
        }
        current = d.group().clone();
    }
}

pub fn is_perfect(g: &Group) -> Result<bool> {
    Ok(derived_subgroup(g)?.order() == g.order())
}

pub fn is_solvable(g: &Group) -> Result<bool> {
    Ok(perfect_residual(g)?.order() == 1)
}

/// Nilpotent iff every Sylow subgroup is normal.
pub fn is_nilpotent(g: &Group) -> Result<bool> {
    for p in primes_dividing(g.order()) {
        let s = sylow_subgroup(g, p)?;
        if !ops::is_normal(g, &s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Simple iff nontrivial and the normal closure of every nontrivial
/// conjugacy class is the whole group.
pub fn is_simple(g: &Group) -> Result<bool> {
    if g.order() == 1 {
        return Ok(false);
    }
    let degree = g.degree();
    for c in g.conjugacy_classes()? {
        if c.rep().is_identity() {
            continue;
        }
        let (closure, _) = incremental_span(degree, &[], &c.members);
        if closure.len() as u64 != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// p-nilpotence and cores
// ---------------------------------------------------------------------------

/// p-nilpotence: G has a normal Hall p′-subgroup. Let K be generated by all
/// elements of order coprime to p. Every p′-element lies in any normal
/// p-complement, and G/K is always a p-group, so G is p-nilpotent iff
/// p ∤ |K| — and then K itself is the complement.
pub fn is_p_nilpotent(g: &Group, p: u64) -> Result<(bool, Option<Subgroup>)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let degree = g.degree();
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: Vec<Perm> = vec![Perm::identity(degree)];
    for x in g.elements()? {
        if x.order() % p != 0 && !x.is_identity() && span.binary_search(x).is_err() {
            gens.push(x.clone());
            span = span_elements(degree, &gens);
        }
    }
    if span.len() as u64 % p == 0 {
        return Ok((false, None));
    }
    debug_assert_eq!(span.len() as u64, g.order() / p_part(g.order(), p));
    Ok((true, Some(Subgroup::from_member_set(g, span))))
}

/// O_p(G): the largest normal p-subgroup, as the join of all normal
/// p-subgroups in the normal lattice.
pub fn p_core(g: &Group, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    core_by(g, |order| order == p_part(order, p))
}

/// O_{p′}(G): the largest normal p′-subgroup.
pub fn p_prime_core(g: &Group, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    core_by(g, |order| order % p != 0)
}

fn core_by(g: &Group, keep: impl Fn(u64) -> bool) -> Result<Subgroup> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut best_order = 1;
    for n in normal_subgroups(g)? {
        if keep(n.order()) && n.order() > 1 {
            gens.extend_from_slice(n.generators());
            best_order = best_order.max(n.order());
        }
    }
    let elems = span_elements(g.degree(), &gens);
    debug_assert!(keep(elems.len() as u64), "product of kept normals stays kept");
    debug_assert!(elems.len() as u64 >= best_order);
    Ok(Subgroup::from_member_set(g, elems))
}

// ---------------------------------------------------------------------------
// Fitting structure
// ---------------------------------------------------------------------------

pub struct FittingData {
    /// F(G), the largest nilpotent normal subgroup.
    pub fitting: Subgroup,
    /// O_p(G) for every prime p dividing |G|.
    pub p_cores: BTreeMap<u64, Subgroup>,
    /// Subnormal quasisimple subgroups.
    pub components: Vec<Subgroup>,
    /// E(G), the join of the components.
    pub layer: Subgroup,
    /// F*(G) = F(G)·E(G).
    pub generalized_fitting: Subgroup,
}

/// Quasisimple: perfect with simple central quotient.
pub fn is_quasisimple(g: &Group) -> Result<bool> {
    if g.order() == 1 || !is_perfect(g)? {
        return Ok(false);
    }
    let z = ops::center(g)?;
    let q = ops::quotient_group(g, &z)?;
    is_simple(q.quotient())
}

/// Components of G: quasisimple subnormal subgroups. All of them lie in the
/// perfect residual L; if L is quasisimple it is the only one, otherwise each
/// is subnormal inside some proper nontrivial normal subgroup of L, so the
/// search recurses through the normal lattice with memoization.
pub fn components(g: &Group) -> Result<Vec<Subgroup>> {
    let mut memo: BTreeMap<(u64, Vec<Perm>), Vec<Group>> = BTreeMap::new();
    let comps = components_of(g, &mut memo)?;
    let mut out: Vec<Subgroup> = comps
        .into_iter()
        .map(|c| Subgroup::new(c, g.clone()))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn components_of(
    g: &Group,
    memo: &mut BTreeMap<(u64, Vec<Perm>), Vec<Group>>,
) -> Result<Vec<Group>> {
    let residual = perfect_residual(g)?;
    if residual.order() == 1 {
        return Ok(vec![]);
    }
    let key = (residual.order(), residual.elements()?.to_vec());
    if let Some(cached) = memo.get(&key) {
        return Ok(cached.clone());
    }
    let mut found: Vec<Group> = Vec::new();
    if is_quasisimple(&residual)? {
        found.push(residual.clone());
    } else {
        for n in normal_subgroups(&residual)? {
            if n.order() == 1 || n.order() == residual.order() {
                continue;
            }
            for c in components_of(n, memo)? {
                if !found.iter().any(|f| f.elements().ok() == c.elements().ok()) {
                    found.push(c);
                }
            }
        }
    }
    memo.insert(key, found.clone());
    Ok(found)
}

/// Computes F(G), the p-cores, the components, E(G) and F*(G).
pub fn fitting_data(g: &Group) -> Result<FittingData> {
    let mut p_cores = BTreeMap::new();
    let mut fitting_gens: Vec<Perm> = Vec::new();
    for p in primes_dividing(g.order()) {
        let core = p_core(g, p)?;
        fitting_gens.extend_from_slice(core.group().generators());
        p_cores.insert(p, core);
    }
    let fitting = Subgroup::from_member_set(g, span_elements(g.degree(), &fitting_gens));
    let comps = components(g)?;
    let mut layer_gens: Vec<Perm> = Vec::new();
    for c in &comps {
        layer_gens.extend_from_slice(c.group().generators());
    }
    let layer = Subgroup::from_member_set(g, span_elements(g.degree(), &layer_gens));
    let generalized_fitting = fitting.join(&layer);
    Ok(FittingData {
        fitting,
        p_cores,
        components: comps,
        layer,
        generalized_fitting,
    })
}

// ---------------------------------------------------------------------------
// Chief series and supersolvability
// ---------------------------------------------------------------------------

pub struct ChiefSeries {
    /// Ascending from the trivial subgroup to G; every term is normal in G
    /// and consecutive terms have no normal subgroup of G strictly between.
    pub terms: Vec<Subgroup>,
    pub factor_orders: Vec<u64>,
}

pub fn chief_series(g: &Group) -> Result<ChiefSeries> {
    let mut terms = vec![Subgroup::trivial(g)];
    let mut factor_orders = Vec::new();
    let mut floor: Vec<Perm> = vec![Perm::identity(g.degree())];
    let mut floor_gens: Vec<Perm> = vec![];
    while (floor.len() as u64) < g.order() {
        let next = minimal_normal_over(g, &floor_gens, &floor)?;
        factor_orders.push(next.len() as u64 / floor.len() as u64);
        let term = Subgroup::from_member_set(g, next.clone());
        floor_gens = term.group().generators().to_vec();
        terms.push(term);
        floor = next;
    }
    Ok(ChiefSeries {
        terms,
        factor_orders,
    })
}

/// Supersolvable iff some (equivalently, every) chief series has all factors
/// of prime order. Solvability is checked first so large simple groups fail
/// fast without building a series.
pub fn is_supersolvable(g: &Group) -> Result<bool> {
    if !is_solvable(g)? {
        return Ok(false);
    }
    Ok(chief_series(g)?.factor_orders.iter().all(|&o| is_prime(o)))
}

/// Sylow tower of supersolvable type: peeling primes from largest to
/// smallest, the Sylow subgroup for the current largest prime must be normal
/// in the current quotient at every step.
pub fn has_supersolvable_sylow_tower(g: &Group) -> Result<bool> {
    let mut current = g.clone();
    loop {
        let order = current.order();
        if order == 1 {
            return Ok(true);
        }
        let &p = primes_dividing(order).last().expect("order > 1");
        let s = sylow_subgroup(&current, p)?;
        if !ops::is_normal(&current, &s)? {
            return Ok(false);
        }
        current = ops::quotient_group(&current, &s)?.quotient().clone();
    }
}

/// Whether every element of order 2 or 4 lies in the center.
pub fn small_orders_central(g: &Group) -> Result<bool> {
    let z = ops::center(g)?;
    Ok(g.elements()?
        .iter()
        .filter(|x| x.order() == 2 || x.order() == 4)
        .all(|x| z.contains(x)))
}

/// A Hall 2′-subgroup when the Sylow 2-subgroup is normal; refuses otherwise.
///
/// Under the hypothesis G = P⋊A with P a 2-group and G/P of odd order, G is
/// solvable, so every odd-order subgroup extends to a Hall 2′-subgroup;
/// greedy extension by odd-order elements therefore terminates exactly at the
/// full odd part.
pub fn hall_2prime_complement(g: &Group) -> Result<Subgroup> {
    let sylow2 = sylow_subgroup(g, 2)?;
    if !ops::is_normal(g, &sylow2)? {
        return Err(Error::SylowTwoNotNormal);
    }
    let odd_part = g.order() / sylow2.order();
    let degree = g.degree();
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: Vec<Perm> = vec![Perm::identity(degree)];
    while (span.len() as u64) < odd_part {
        let extender = g
            .elements()?
            .iter()
            .find(|x| {
                if x.is_identity() || x.order() % 2 == 0 || span.binary_search(x).is_ok() {
                    return false;
                }
                let mut candidate = gens.clone();
                candidate.push((*x).clone());
                span_elements(degree, &candidate).len() % 2 == 1
            })
            .expect("a Hall 2'-subgroup exists above any odd subgroup here")
            .clone();
        gens.push(extender);
        span = span_elements(degree, &gens);
    }
    Ok(Subgroup::from_member_set(g, span))
}

/// Reports which primes divide the order of each chief factor; used by the
/// structural dump in the CLI.
pub fn chief_factor_summary(g: &Group) -> Result<Vec<u64>> {
    Ok(chief_series(g)?.factor_orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{shape, Shape};

    fn p(degree: usize, s: &str) -> Perm {
        Perm::parse(degree, s).unwrap()
    }

    fn s4() -> Group {
        Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 2)")]).unwrap()
    }

    fn s3() -> Group {
        Group::from_generators(3, vec![p(3, "(1 2 3)"), p(3, "(1 2)")]).unwrap()
    }

    fn a4() -> Group {
        Group::from_generators(4, vec![p(4, "(1 2 3)"), p(4, "(2 3 4)")]).unwrap()
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let g = s4();
        let orders: Vec<u64> = normal_subgroups(&g).unwrap().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn s3_is_2_nilpotent_with_witness_a3() {
        let (ok, witness) = is_p_nilpotent(&s3(), 2).unwrap();
        assert!(ok);
        let k = witness.unwrap();
        assert_eq!(k.order(), 3);
        assert!(k.contains(&p(3, "(1 2 3)")));
    }

    #[test]
    fn p_groups_are_p_nilpotent_with_trivial_witness() {
        let d8 = Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        let (ok, witness) = is_p_nilpotent(&d8, 2).unwrap();
        assert!(ok);
        assert_eq!(witness.unwrap().order(), 1);
    }

    #[test]
    fn s4_is_not_2_nilpotent() {
        assert!(!is_p_nilpotent(&s4(), 2).unwrap().0);
    }

    #[test]
    fn cores_of_s4() {
        let g = s4();
        let o2 = p_core(&g, 2).unwrap();
        assert_eq!(o2.order(), 4);
        assert_eq!(shape(o2.group()).unwrap(), Shape::ElementaryAbelian);
        assert_eq!(p_prime_core(&g, 2).unwrap().order(), 1);
        // a p-group is its own p-core
        let d8 = Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        assert_eq!(p_core(&d8, 2).unwrap().order(), 8);
    }

    #[test]
    fn fitting_of_s4_is_the_klein_four() {
        let data = fitting_data(&s4()).unwrap();
        assert_eq!(data.fitting.order(), 4);
        assert!(data.components.is_empty());
        assert_eq!(data.layer.order(), 1);
        assert_eq!(data.generalized_fitting.order(), 4);
    }

    #[test]
    fn fitting_of_nilpotent_group_is_everything() {
        let d8 = Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        let data = fitting_data(&d8).unwrap();
        assert_eq!(data.fitting.order(), 8);
        assert_eq!(data.generalized_fitting.order(), 8);
    }

    #[test]
    fn a5_is_its_own_single_component() {
        let a5 = Group::from_generators(5, vec![p(5, "(1 2 3)"), p(5, "(1 2 3 4 5)")]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(is_simple(&a5).unwrap());
        let comps = components(&a5).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].order(), 60);
    }

    #[test]
    fn s5_has_component_a5() {
        let s5 = Group::from_generators(5, vec![p(5, "(1 2 3 4 5)"), p(5, "(1 2)")]).unwrap();
        let comps = components(&s5).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].order(), 60);
        let data = fitting_data(&s5).unwrap();
        assert_eq!(data.fitting.order(), 1);
        assert_eq!(data.generalized_fitting.order(), 60);
    }

    #[test]
    fn chief_series_of_s4() {
        let series = chief_series(&s4()).unwrap();
        assert_eq!(series.factor_orders, vec![4, 3, 2]);
        let product: u64 = series.factor_orders.iter().product();
        assert_eq!(product, 24);
        for t in &series.terms {
            assert!(ops::is_normal(&s4(), t).unwrap());
        }
    }

    #[test]
    fn supersolvability_judgements() {
        assert!(is_supersolvable(&s3()).unwrap());
        assert!(!is_supersolvable(&a4()).unwrap()); // chief factor of order 4
        assert!(!is_supersolvable(&s4()).unwrap());
        let d8 = Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        assert!(is_supersolvable(&d8).unwrap());
    }

    #[test]
    fn sylow_tower_judgements() {
        assert!(has_supersolvable_sylow_tower(&s3()).unwrap());
        assert!(!has_supersolvable_sylow_tower(&a4()).unwrap());
        let c12 = Group::from_generators(12, vec![p(12, "(1 2 3 4 5 6 7 8 9 10 11 12)")]).unwrap();
        assert!(has_supersolvable_sylow_tower(&c12).unwrap());
    }

    #[test]
    fn small_orders_central_judgements() {
        let c4 = Group::from_generators(4, vec![p(4, "(1 2 3 4)")]).unwrap();
        assert!(small_orders_central(&c4).unwrap());
        let q8 = Group::from_generators(
            8,
            vec![p(8, "(1 2 3 4)(5 8 7 6)"), p(8, "(1 5 3 7)(2 6 4 8)")],
        )
        .unwrap();
        assert!(!small_orders_central(&q8).unwrap());
    }

    #[test]
    fn hall_complement_for_normal_sylow_2() {
        // D8 × C3 on 7 points
        let g = Group::from_generators(
            7,
            vec![p(7, "(1 2 3 4)"), p(7, "(1 3)"), p(7, "(5 6 7)")],
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        let a = hall_2prime_complement(&g).unwrap();
        assert_eq!(a.order(), 3);
        assert!(a.contains(&p(7, "(5 6 7)")));
    }

    #[test]
    fn hall_complement_for_a_2_group_is_trivial() {
        let d8 = Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        assert_eq!(hall_2prime_complement(&d8).unwrap().order(), 1);
    }

    #[test]
    fn hall_complement_refuses_non_normal_sylow_2() {
        // D14: Sylow 2 is not normal
        let d14 = Group::from_generators(7, vec![p(7, "(1 2 3 4 5 6 7)"), p(7, "(2 7)(3 6)(4 5)")])
            .unwrap();
        assert!(matches!(
            hall_2prime_complement(&d14),
            Err(Error::SylowTwoNotNormal)
        ));
    }

    #[test]
    fn derived_series_detects_solvability() {
        assert!(is_solvable(&s4()).unwrap());
        let a5 = Group::from_generators(5, vec![p(5, "(1 2 3)"), p(5, "(1 2 3 4 5)")]).unwrap();
        assert!(!is_solvable(&a5).unwrap());
        assert!(is_perfect(&a5).unwrap());
        assert!(is_nilpotent(&Group::from_generators(4, vec![p(4, "(1 2 3 4)")]).unwrap()).unwrap());
        assert!(!is_nilpotent(&s3()).unwrap());
    }
}
