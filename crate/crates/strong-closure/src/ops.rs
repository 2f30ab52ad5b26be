//! Structural operations on groups and subgroups: normalizers, centralizers,
//! normal closures, coset actions, quotients, subnormality and maximality.
//!
//! Normalizer and centralizer filter the elements of the ambient group, so
//! they require the ambient order to stay within the enumeration bound; above
//! it they refuse rather than approximate.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{span_elements, Group};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

fn check_ambient(g: &Group, h: &Subgroup) -> Result<()> {
    if h.parent().degree() != g.degree() {
        return Err(Error::DegreeMismatch(g.degree(), h.parent().degree()));
    }
    for x in h.group().generators() {
        if !g.contains(x) {
            return Err(Error::NotContained);
        }
    }
    Ok(())
}

/// N_G(H): all g with H^g = H.
pub fn normalizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    check_ambient(g, h)?;
    let members: Vec<Perm> = g
        .elements()?
        .iter()
        .filter(|x| {
            h.group()
                .generators()
                .iter()
                .all(|k| h.contains(&k.conjugate(x)))
        })
        .cloned()
        .collect();
    Ok(Subgroup::from_member_set(g, members))
}

/// C_G(H): all g commuting with every element of H.
pub fn centralizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    check_ambient(g, h)?;
    let members: Vec<Perm> = g
        .elements()?
        .iter()
        .filter(|x| {
            h.group()
                .generators()
                .iter()
                .all(|k| k.compose(x) == x.compose(k))
        })
        .cloned()
        .collect();
    Ok(Subgroup::from_member_set(g, members))
}

/// Z(G) = C_G(G).
pub fn center(g: &Group) -> Result<Subgroup> {
    centralizer(g, &Subgroup::whole(g))
}

/// ⟨H^G⟩: the smallest normal subgroup of G containing H, built by closing
/// H's generators under conjugation by G's generators.
pub fn normal_closure(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    check_ambient(g, h)?;
    let mut closure_gens: Vec<Perm> = h.group().generators().to_vec();
    let mut elems = span_elements(g.degree(), &closure_gens);
    loop {
        let mut grew = false;
        'outer: for cg in closure_gens.clone() {
            for gg in g.generators() {
                let c = cg.conjugate(gg);
                if elems.binary_search(&c).is_err() {
                    closure_gens.push(c);
                    elems = span_elements(g.degree(), &closure_gens);
                    grew = true;
                    continue 'outer;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(Subgroup::from_member_set(g, elems))
}

/// Whether H ⊴ G. Checks conjugates of H's generators by G's generators.
pub fn is_normal(g: &Group, h: &Subgroup) -> Result<bool> {
    check_ambient(g, h)?;
    Ok(h.group()
        .generators()
        .iter()
        .all(|k| g.generators().iter().all(|x| h.contains(&k.conjugate(x)))))
}

/// Whether H is subnormal in G, via the descending normal-closure chain
/// G ⊵ ⟨H^G⟩ ⊵ ⟨H^⟨H^G⟩⟩ ⊵ …; subnormal iff the chain reaches H.
pub fn is_subnormal(g: &Group, h: &Subgroup) -> Result<bool> {
    check_ambient(g, h)?;
    let mut current = Subgroup::whole(g);
    loop {
        if current.order() == h.order() {
            return Ok(true);
        }
        let inside = h.reparent(current.group())?;
        let next = normal_closure(current.group(), &inside)?;
        if next.order() == current.order() {
            return Ok(false);
        }
        current = Subgroup::new(next.group().clone(), g.clone())?;
    }
}

// ---------------------------------------------------------------------------
// Coset actions and quotients
// ---------------------------------------------------------------------------

/// The action of G on the right cosets of H, with one canonical (lex-minimal)
/// representative per coset. The image is G/core(H); for normal H it is the
/// quotient group G/H acting faithfully.
pub struct CosetAction {
    source: Group,
    /// Canonical representative of coset i.
    reps: Vec<Perm>,
    index: HashMap<Perm, u32>,
    sub_elems: Vec<Perm>,
    image: Group,
}

/// Degree cap for coset actions and quotients.
pub const COSET_DEGREE_BOUND: u64 = 10_000;

impl CosetAction {
    pub fn build(g: &Group, h: &Subgroup) -> Result<CosetAction> {
        check_ambient(g, h)?;
        let n_cosets = g.order() / h.order();
        if n_cosets > COSET_DEGREE_BOUND {
            return Err(Error::BoundExceeded {
                order: n_cosets,
                bound: COSET_DEGREE_BOUND,
            });
        }
        let sub_elems: Vec<Perm> = h.canonical_key()?.to_vec();
        let min_rep = |x: &Perm| -> Perm {
            sub_elems
                .iter()
                .map(|n| n.compose(x))
                .min()
                .expect("nonempty subgroup")
        };
        // BFS over cosets in discovery order; coset 0 is H itself.
        let mut reps: Vec<Perm> = vec![min_rep(&g.identity())];
        let mut index: HashMap<Perm, u32> = HashMap::new();
        index.insert(reps[0].clone(), 0);
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i].clone();
            for s in g.generators() {
                let t = min_rep(&r.compose(s));
                if !index.contains_key(&t) {
                    index.insert(t.clone(), reps.len() as u32);
                    reps.push(t);
                }
            }
            i += 1;
        }
        debug_assert_eq!(reps.len() as u64, n_cosets);

        let mut action = CosetAction {
            source: g.clone(),
            reps,
            index,
            sub_elems,
            image: Group::trivial(1), // replaced below
        };
        let image_gens: Vec<Perm> = g.generators().iter().map(|s| action.permute(s)).collect();
        action.image = Group::from_generators(action.reps.len(), image_gens)?;
        Ok(action)
    }

    fn min_rep(&self, x: &Perm) -> Perm {
        self.sub_elems
            .iter()
            .map(|n| n.compose(x))
            .min()
            .expect("nonempty subgroup")
    }

    fn permute(&self, g: &Perm) -> Perm {
        let images: Vec<u32> = self
            .reps
            .iter()
            .map(|r| self.index[&self.min_rep(&r.compose(g))] + 1)
            .collect();
        Perm::from_images(&images).expect("coset action is a bijection")
    }

    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    /// The permutation group induced on the cosets.
    pub fn image(&self) -> &Group {
        &self.image
    }

    /// Image of a single element of G.
    pub fn map_element(&self, g: &Perm) -> Result<Perm> {
        if !self.source.contains(g) {
            return Err(Error::NotContained);
        }
        Ok(self.permute(g))
    }

    /// Image of a subgroup of G, as a subgroup of the image group.
    pub fn map_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        let gens: Vec<Perm> = h
            .group()
            .generators()
            .iter()
            .map(|x| self.map_element(x))
            .collect::<Result<_>>()?;
        Subgroup::generated(&self.image, gens)
    }
}

/// The quotient G/N together with the natural projection. N must be normal;
/// the coset action is then faithful on G/N and serves as the quotient group.
pub struct QuotientMap {
    action: CosetAction,
}

impl QuotientMap {
    pub fn quotient(&self) -> &Group {
        self.action.image()
    }

    pub fn map_element(&self, g: &Perm) -> Result<Perm> {
        self.action.map_element(g)
    }

    pub fn map_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        self.action.map_subgroup(h)
    }
}

/// Builds G/N via the coset action. Errors if N is not normal in G.
pub fn quotient_group(g: &Group, n: &Subgroup) -> Result<QuotientMap> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let action = CosetAction::build(g, n)?;
    debug_assert_eq!(action.image().order(), g.order() / n.order());
    Ok(QuotientMap { action })
}

/// Whether H is a maximal subgroup of G, tested as primitivity of the coset
/// action (H maximal iff G acts primitively on G/H).
pub fn is_maximal_subgroup(g: &Group, h: &Subgroup) -> Result<bool> {
    check_ambient(g, h)?;
    if h.is_whole() {
        return Ok(false);
    }
    let action = CosetAction::build(g, h)?;
    let n = action.degree();
    if n == 1 {
        return Ok(false);
    }
    let gens: Vec<Perm> = action.image().generators().to_vec();
    // Atkinson's block test: the minimal block containing {0, other} must be
    // everything, for every other point.
    for other in 1..n as u32 {
        if minimal_block_size(n, &gens, 0, other) < n {
            return Ok(false);
        }
    }
    Ok(true)
}

fn minimal_block_size(n: usize, gens: &[Perm], a: u32, b: u32) -> usize {
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
        let mut r = x;
        while parent[r as usize] != r {
            r = parent[r as usize];
        }
        let mut c = x;
        while parent[c as usize] != r {
            let next = parent[c as usize];
            parent[c as usize] = r;
            c = next;
        }
        r
    }
    let mut queue = vec![(a, b)];
    let ra = find(&mut parent, a);
    let rb = find(&mut parent, b);
    parent[ra as usize] = rb;
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let gx = g.apply0(x);
            let gy = g.apply0(y);
            let rx = find(&mut parent, gx);
            let ry = find(&mut parent, gy);
            if rx != ry {
                parent[rx as usize] = ry;
                queue.push((gx, gy));
            }
        }
    }
    let root = find(&mut parent, a);
    (0..n as u32)
        .filter(|&x| find(&mut parent, x) == root)
        .count()
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
    fn center_of_s4_is_trivial() {
        assert_eq!(center(&s4()).unwrap().order(), 1);
    }

    #[test]
    fn center_of_d8_has_order_two() {
        let d8 = Group::from_generators(4, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        let z = center(&d8).unwrap();
        assert_eq!(z.order(), 2);
        assert!(z.contains(&p(4, "(1 3)(2 4)")));
    }

    #[test]
    fn normalizer_of_transposition_in_s4() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)")]).unwrap();
        let n = normalizer(&g, &h).unwrap();
        // ⟨(1 2)⟩ is normalized exactly by ⟨(1 2), (3 4)⟩
        assert_eq!(n.order(), 4);
        assert!(n.contains(&p(4, "(3 4)")));
    }

    #[test]
    fn centralizer_sits_inside_normalizer() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2 3)")]).unwrap();
        let n = normalizer(&g, &h).unwrap();
        let c = centralizer(&g, &h).unwrap();
        assert!(c.is_contained_in(&n));
        assert_eq!(n.order(), 6);
        assert_eq!(c.order(), 3);
    }

    #[test]
    fn normal_closure_of_a_transposition_is_s4() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)")]).unwrap();
        assert_eq!(normal_closure(&g, &h).unwrap().order(), 24);
    }

    #[test]
    fn normal_closure_of_double_transposition_is_klein_four() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)")]).unwrap();
        let nc = normal_closure(&g, &h).unwrap();
        assert_eq!(nc.order(), 4);
        assert!(is_normal(&g, &nc).unwrap());
    }

    #[test]
    fn normal_subgroup_is_its_own_closure() {
        let g = s4();
        let a4 = Subgroup::generated(&g, vec![p(4, "(1 2 3)"), p(4, "(2 3 4)")]).unwrap();
        assert_eq!(normal_closure(&g, &a4).unwrap(), a4);
    }

    #[test]
    fn subnormality_in_s4() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)")]).unwrap();
        assert!(is_subnormal(&g, &h).unwrap()); // H ⊴ V4 ⊴ S4
        let t = Subgroup::generated(&g, vec![p(4, "(1 2)")]).unwrap();
        assert!(!is_subnormal(&g, &t).unwrap()); // closure chain sticks at S4
        let a4 = Subgroup::generated(&g, vec![p(4, "(1 2 3)"), p(4, "(2 3 4)")]).unwrap();
        assert!(is_subnormal(&g, &a4).unwrap()); // normal
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = s4();
        let q = quotient_group(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.quotient().order(), 1);
    }

    #[test]
    fn quotient_of_s4_by_klein_four_has_order_six() {
        let g = s4();
        let v4 =
            Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        let q = quotient_group(&g, &v4).unwrap();
        assert_eq!(q.quotient().order(), 6);
        assert_eq!(q.quotient().degree(), 6);
        // projection is multiplicative
        let a = p(4, "(1 2 3 4)");
        let b = p(4, "(1 2)");
        let qa = q.map_element(&a).unwrap();
        let qb = q.map_element(&b).unwrap();
        assert_eq!(q.map_element(&a.compose(&b)).unwrap(), qa.compose(&qb));
    }

    #[test]
    fn quotient_requires_normality() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)")]).unwrap();
        assert!(matches!(quotient_group(&g, &h), Err(Error::NotNormal)));
    }

    #[test]
    fn a4_is_maximal_in_s4_but_v4_is_not() {
        let g = s4();
        let a4 = Subgroup::generated(&g, vec![p(4, "(1 2 3)"), p(4, "(2 3 4)")]).unwrap();
        assert!(is_maximal_subgroup(&g, &a4).unwrap());
        let v4 =
            Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        assert!(!is_maximal_subgroup(&g, &v4).unwrap());
        let d8 = Subgroup::generated(&g, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        assert!(is_maximal_subgroup(&g, &d8).unwrap());
    }
}
