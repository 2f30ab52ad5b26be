//! Strong-closure predicates and the hypothesis assemblies of the theorem
//! checks.
//!
//! H ≤ K ≤ G is *strongly closed in K with respect to G* when every
//! G-conjugate of an element of H that lands in K already lies in H. H is
//! *strongly closed in G* when it is strongly closed in N_G(H) with respect
//! to G. The H-subgroup condition — H^g ∩ N_G(H) ≤ H for all g — is
//! equivalent, but is evaluated here by the book as a separate route
//! (conjugating H wholesale over coset representatives of the normalizer),
//! so the equivalence can be tested rather than assumed.

use std::collections::HashSet;

use crate::arith::{p_part, primes_dividing};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::subgroups_of_order;
use crate::ops;
use crate::perm::Perm;
use crate::shape::{shape, Shape};
use crate::subgroup::Subgroup;
use crate::sylow::sylow_subgroup;

/// Which subgroup plays K when a theorem hypothesis says "strongly closed
/// in G": the normalizer form from the definition, or the ambient Sylow
/// subgroup. Results can be compared under both readings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosureReading {
    Normalizer,
    AmbientSylow,
}

impl std::fmt::Display for ClosureReading {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClosureReading::Normalizer => write!(f, "normalizer"),
            ClosureReading::AmbientSylow => write!(f, "ambient-sylow"),
        }
    }
}

/// A witness that strong closure fails: `element ∈ H`, and
/// `element^conjugator = image` lies in K but not in H.
#[derive(Clone, Debug)]
pub struct Breach {
    pub element: Perm,
    pub conjugator: Perm,
    pub image: Perm,
}

fn check_tower(h: &Subgroup, k: &Subgroup, g: &Group) -> Result<()> {
    if !h.is_contained_in(k) {
        return Err(Error::NotContained);
    }
    for x in k.group().generators() {
        if !g.contains(x) {
            return Err(Error::NotContained);
        }
    }
    Ok(())
}

/// First breach of "H strongly closed in K with respect to G", or None if
/// closed. Walks the G-conjugacy class of each element of H in canonical
/// order, carrying conjugating witnesses; class members already inside H are
/// marked covered so each class is walked once.
pub fn strong_closure_breach(
    h: &Subgroup,
    k: &Subgroup,
    g: &Group,
) -> Result<Option<Breach>> {
    check_tower(h, k, g)?;
    let mut covered: HashSet<Perm> = HashSet::new();
    for a in h.canonical_key()? {
        if a.is_identity() || covered.contains(a) {
            continue;
        }
        for (c, w) in g.class_with_witnesses(a) {
            if h.contains(&c) {
                covered.insert(c);
                continue;
            }
            if k.contains(&c) {
                return Ok(Some(Breach {
                    element: a.clone(),
                    conjugator: w,
                    image: c,
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_strongly_closed(h: &Subgroup, k: &Subgroup, g: &Group) -> Result<bool> {
    Ok(strong_closure_breach(h, k, g)?.is_none())
}

/// H strongly closed in G: strongly closed in N_G(H) with respect to G.
pub fn strongly_closed_in_group_breach(h: &Subgroup, g: &Group) -> Result<Option<Breach>> {
    let n = ops::normalizer(g, h)?;
    strong_closure_breach(h, &n, g)
}

pub fn is_strongly_closed_in_group(h: &Subgroup, g: &Group) -> Result<bool> {
    Ok(strongly_closed_in_group_breach(h, g)?.is_none())
}

/// Literal evaluation of the H-subgroup condition H^g ∩ N_G(H) ≤ H, one
/// representative per right coset of N_G(H). Returns the first violating
/// pair (g, a) with a ∈ H and a^g ∈ N_G(H) ∖ H.
pub fn h_subgroup_breach(h: &Subgroup, g: &Group) -> Result<Option<Breach>> {
    let n = ops::normalizer(g, h)?;
    let n_elems: Vec<Perm> = n.canonical_key()?.to_vec();
    let h_elems: Vec<Perm> = h.canonical_key()?.to_vec();
    let mut coset_covered: HashSet<Perm> = HashSet::new();
    for x in g.elements()? {
        if coset_covered.contains(x) {
            continue;
        }
        for nn in &n_elems {
            coset_covered.insert(nn.compose(x));
        }
        for a in &h_elems {
            if a.is_identity() {
                continue;
            }
            let c = a.conjugate(x);
            if n.contains(&c) && !h.contains(&c) {
                return Ok(Some(Breach {
                    element: a.clone(),
                    conjugator: x.clone(),
                    image: c,
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_h_subgroup(h: &Subgroup, g: &Group) -> Result<bool> {
    Ok(h_subgroup_breach(h, g)?.is_none())
}

// ---------------------------------------------------------------------------
// Theorem hypotheses
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    P31,
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TheoremId::T1 => write!(f, "T1"),
            TheoremId::T2 => write!(f, "T2"),
            TheoremId::T3 => write!(f, "T3"),
            TheoremId::T4 => write!(f, "T4"),
            TheoremId::P31 => write!(f, "P31"),
        }
    }
}

/// Assembled hypothesis of one theorem check.
///
/// `target_order` is |D| and is required for T1/T2/P31 whenever the Sylow
/// subgroup is non-cyclic; T3/T4 quantify existentially over all valid
/// orders. `include_order4_clause` toggles the "(and 4 if |D| = 2)" clause
/// and defaults to on; switching it off is the necessity experiment.
#[derive(Clone)]
pub struct HypothesisSpec {
    pub theorem: TheoremId,
    pub target_order: Option<u64>,
    pub include_order4_clause: bool,
    pub normal_subgroup: Option<Subgroup>,
}

impl HypothesisSpec {
    pub fn new(theorem: TheoremId) -> Self {
        HypothesisSpec {
            theorem,
            target_order: None,
            include_order4_clause: true,
            normal_subgroup: None,
        }
    }

    pub fn with_target_order(mut self, d: u64) -> Self {
        self.target_order = Some(d);
        self
    }

    pub fn without_order4_clause(mut self) -> Self {
        self.include_order4_clause = false;
        self
    }

    pub fn with_normal_subgroup(mut self, e: Subgroup) -> Self {
        self.normal_subgroup = Some(e);
        self
    }
}

/// Why a hypothesis failed, when it did.
#[derive(Clone, Debug)]
pub enum HypothesisWitness {
    /// A subgroup of the Sylow subgroup of the stated order is not strongly
    /// closed; the breach pins down the escaping conjugate, and
    /// `ambient_gens` generate the K the conjugate landed in.
    SubgroupNotClosed {
        prime: u64,
        target_order: u64,
        subgroup_gens: Vec<Perm>,
        ambient_gens: Vec<Perm>,
        breach: Breach,
    },
    /// T3/T4: a non-cyclic Sylow subgroup admits no valid target order.
    NoValidTargetOrder { prime: u64, sylow_order: u64 },
}

/// Evaluates the hypothesis of `spec.theorem` on G. Returns whether it holds
/// and, when it does not, a witness.
pub fn theorem_hypothesis(
    g: &Group,
    spec: &HypothesisSpec,
    reading: ClosureReading,
) -> Result<(bool, Option<HypothesisWitness>)> {
    match spec.theorem {
        TheoremId::T1 => fixed_prime_hypothesis(g, 2, spec, reading, 1),
        TheoremId::P31 => fixed_prime_hypothesis(g, 2, spec, reading, 2),
        TheoremId::T2 => {
            let order = g.order();
            let Some(&p) = primes_dividing(order).first() else {
                return Ok((true, None)); // trivial group
            };
            fixed_prime_hypothesis(g, p, spec, reading, 1)
        }
        TheoremId::T3 => sylow_family_hypothesis(g, &Subgroup::whole(g), spec, reading),
        TheoremId::T4 => {
            let e = spec
                .normal_subgroup
                .clone()
                .ok_or_else(|| Error::Construction("T4 requires a normal subgroup E".into()))?;
            if !ops::is_normal(g, &e)? {
                return Err(Error::NotNormal);
            }
            sylow_family_hypothesis(g, &e, spec, reading)
        }
    }
}

/// T1/T2/P31: the Sylow p-subgroup is cyclic, or every subgroup of it of
/// order |D| (and 4 if |D| = 2, when the clause is on) is strongly closed in
/// G. `min_d` is 1 for the theorems and 2 for P31's strict 2 < |D| bound.
fn fixed_prime_hypothesis(
    g: &Group,
    p: u64,
    spec: &HypothesisSpec,
    reading: ClosureReading,
    min_d: u64,
) -> Result<(bool, Option<HypothesisWitness>)> {
    let sylow = sylow_subgroup(g, p)?;
    if shape(sylow.group())? == Shape::Cyclic {
        return Ok((true, None));
    }
    let d = spec.target_order.ok_or(Error::InvalidTargetOrder {
        order: 0,
        sylow_order: sylow.order(),
    })?;
    validate_target_order(d, sylow.order(), p, min_d)?;
    Ok(order_condition(g, &sylow, p, d, spec.include_order4_clause, reading)?)
}

fn validate_target_order(d: u64, sylow_order: u64, p: u64, min_d: u64) -> Result<()> {
    let valid = d > min_d && d < sylow_order && sylow_order % d == 0 && d == p_part(d, p);
    if !valid {
        return Err(Error::InvalidTargetOrder {
            order: d,
            sylow_order,
        });
    }
    Ok(())
}

/// All valid target orders for a non-cyclic Sylow subgroup of order p^e:
/// the proper powers p, p², …, p^(e-1).
pub fn valid_target_orders(sylow_order: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = p;
    while d < sylow_order {
        out.push(d);
        d *= p;
    }
    out
}

/// Core quantifier: every subgroup of `sylow` of order `d` (and of order 4
/// when d = 2 and the clause is on) is strongly closed in G under `reading`.
fn order_condition(
    g: &Group,
    sylow: &Subgroup,
    p: u64,
    d: u64,
    order4_clause: bool,
    reading: ClosureReading,
) -> Result<(bool, Option<HypothesisWitness>)> {
    let mut orders = vec![d];
    if d == 2 && p == 2 && order4_clause {
        orders.push(4);
    }
    for target in orders {
        for inner in subgroups_of_order(sylow.group(), target)? {
            let h = inner.reparent(g)?;
            let k = match reading {
                ClosureReading::Normalizer => ops::normalizer(g, &h)?,
                ClosureReading::AmbientSylow => sylow.clone(),
            };
            if let Some(breach) = strong_closure_breach(&h, &k, g)? {
                return Ok((
                    false,
                    Some(HypothesisWitness::SubgroupNotClosed {
                        prime: p,
                        target_order: target,
                        subgroup_gens: h.group().generators().to_vec(),
                        ambient_gens: k.group().generators().to_vec(),
                        breach,
                    }),
                ));
            }
        }
    }
    Ok((true, None))
}

/// T3/T4: every non-cyclic Sylow subgroup of `scope` must admit *some* valid
/// |D| whose order condition holds (strong closure taken with respect to G).
fn sylow_family_hypothesis(
    g: &Group,
    scope: &Subgroup,
    spec: &HypothesisSpec,
    reading: ClosureReading,
) -> Result<(bool, Option<HypothesisWitness>)> {
    for p in primes_dividing(scope.order()) {
        let sylow_in_scope = sylow_subgroup(scope.group(), p)?;
        if shape(sylow_in_scope.group())? == Shape::Cyclic {
            continue;
        }
        let sylow = sylow_in_scope.reparent(g)?;
        let mut satisfied = false;
        for d in valid_target_orders(sylow.order(), p) {
            let (ok, _) = order_condition(g, &sylow, p, d, spec.include_order4_clause, reading)?;
            if ok {
                satisfied = true;
                break;
            }
        }
        if !satisfied {
            return Ok((
                false,
                Some(HypothesisWitness::NoValidTargetOrder {
                    prime: p,
                    sylow_order: sylow.order(),
                }),
            ));
        }
    }
    Ok((true, None))
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

    fn s3() -> Group {
        Group::from_generators(3, vec![p(3, "(1 2 3)"), p(3, "(1 2)")]).unwrap()
    }

    #[test]
    fn normal_subgroups_are_strongly_closed_everywhere() {
        let g = s4();
        let v4 = Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        assert!(is_strongly_closed(&v4, &Subgroup::whole(&g), &g).unwrap());
        assert!(is_strongly_closed_in_group(&v4, &g).unwrap());
        assert!(is_h_subgroup(&v4, &g).unwrap());
    }

    #[test]
    fn double_transposition_in_d8_breaches() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)")]).unwrap();
        let d8 = Subgroup::generated(&g, vec![p(4, "(1 2 3 4)"), p(4, "(1 3)")]).unwrap();
        let breach = strong_closure_breach(&h, &d8, &g).unwrap().unwrap();
        assert_eq!(breach.element, p(4, "(1 2)(3 4)"));
        assert_eq!(breach.element.conjugate(&breach.conjugator), breach.image);
        assert!(d8.contains(&breach.image));
        assert!(!h.contains(&breach.image));
        // the escaping conjugate is one of the other double transpositions
        assert!(breach.image == p(4, "(1 3)(2 4)") || breach.image == p(4, "(1 4)(2 3)"));
    }

    #[test]
    fn transposition_in_s3_is_strongly_closed() {
        let g = s3();
        let h = Subgroup::generated(&g, vec![p(3, "(1 2)")]).unwrap();
        assert!(is_strongly_closed_in_group(&h, &g).unwrap());
        assert!(is_h_subgroup(&h, &g).unwrap());
    }

    #[test]
    fn double_transposition_in_s4_is_not_an_h_subgroup() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)(3 4)")]).unwrap();
        assert!(!is_strongly_closed_in_group(&h, &g).unwrap());
        let breach = h_subgroup_breach(&h, &g).unwrap().unwrap();
        assert_eq!(breach.element.conjugate(&breach.conjugator), breach.image);
        assert!(!h.contains(&breach.image));
    }

    #[test]
    fn closure_with_k_equal_h_is_vacuous() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)")]).unwrap();
        assert!(is_strongly_closed(&h, &h, &g).unwrap());
    }

    #[test]
    fn containment_violations_are_rejected() {
        let g = s4();
        let h = Subgroup::generated(&g, vec![p(4, "(1 2)")]).unwrap();
        let k = Subgroup::generated(&g, vec![p(4, "(1 2 3)")]).unwrap();
        assert!(matches!(
            strong_closure_breach(&h, &k, &g),
            Err(Error::NotContained)
        ));
    }

    #[test]
    fn cyclic_sylow_satisfies_t1_trivially() {
        // C12: Sylow 2-subgroup is cyclic of order 4
        let c12 = Group::from_generators(12, vec![p(12, "(1 2 3 4 5 6 7 8 9 10 11 12)")]).unwrap();
        let spec = HypothesisSpec::new(TheoremId::T1).with_target_order(2);
        let (ok, w) = theorem_hypothesis(&c12, &spec, ClosureReading::Normalizer).unwrap();
        assert!(ok);
        assert!(w.is_none());
    }

    #[test]
    fn s4_fails_t1_at_order_2() {
        let g = s4();
        let spec = HypothesisSpec::new(TheoremId::T1).with_target_order(2);
        let (ok, w) = theorem_hypothesis(&g, &spec, ClosureReading::Normalizer).unwrap();
        assert!(!ok);
        match w.unwrap() {
            HypothesisWitness::SubgroupNotClosed { prime, target_order, breach, .. } => {
                assert_eq!(prime, 2);
                assert!(target_order == 2 || target_order == 4);
                assert_eq!(breach.element.conjugate(&breach.conjugator), breach.image);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn invalid_target_orders_are_rejected() {
        let g = s4();
        for bad in [1, 3, 8, 16] {
            let spec = HypothesisSpec::new(TheoremId::T1).with_target_order(bad);
            assert!(
                theorem_hypothesis(&g, &spec, ClosureReading::Normalizer).is_err(),
                "order {bad} should be rejected"
            );
        }
        // P31 additionally rejects |D| = 2
        let spec = HypothesisSpec::new(TheoremId::P31).with_target_order(2);
        assert!(theorem_hypothesis(&g, &spec, ClosureReading::Normalizer).is_err());
    }

    #[test]
    fn t3_on_supersolvable_and_not() {
        // S3: Sylow 3 cyclic, Sylow 2 cyclic -> hypothesis holds vacuously
        let (ok, _) =
            theorem_hypothesis(&s3(), &HypothesisSpec::new(TheoremId::T3), ClosureReading::Normalizer)
                .unwrap();
        assert!(ok);
        // A4: Sylow 2 is the Klein four-group; D=2 requires the order-4 clause
        // subgroup V4 itself to be strongly closed, which it is (normal), and
        // the three C2s are permuted by the 3-cycles into each other but stay
        // outside their normalizers' intersection pattern — computed, not assumed.
        let a4 = Group::from_generators(4, vec![p(4, "(1 2 3)"), p(4, "(2 3 4)")]).unwrap();
        let (ok, _) =
            theorem_hypothesis(&a4, &HypothesisSpec::new(TheoremId::T3), ClosureReading::Normalizer)
                .unwrap();
        // A4 is not supersolvable, so the proved implication forces this false
        assert!(!ok);
    }

    #[test]
    fn valid_orders_enumeration() {
        assert_eq!(valid_target_orders(32, 2), vec![2, 4, 8, 16]);
        assert_eq!(valid_target_orders(4, 2), vec![2]);
        assert_eq!(valid_target_orders(2, 2), Vec::<u64>::new());
    }
}
