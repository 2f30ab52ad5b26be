//! One-group/one-check verdicts: the theorem implications T1–T4 and P31,
//! the supporting lemma battery L21–L211, and the definition-equivalence
//! property EQV.
//!
//! Every check is an implication evaluated on a concrete group: the
//! hypothesis and conclusion are computed independently and the verdict is
//! consistent when ¬hypothesis ∨ conclusion. Bound-exceeded checks are
//! reported as skipped, never silently passed. Whenever a flag is false and
//! a witness exists, the verdict carries it in replayable form.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, p_part, primes_dividing};
use crate::closure::{
    is_h_subgroup, is_strongly_closed_in_group, strong_closure_breach,
    strongly_closed_in_group_breach, theorem_hypothesis, Breach, ClosureReading, HypothesisSpec,
    HypothesisWitness, TheoremId,
};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::{all_subgroups_flat, subgroups_of_order};
use crate::ops;
use crate::perm::Perm;
use crate::semidirect::CoprimeActionInstance;
use crate::shape::{shape, Shape};
use crate::structure;
use crate::subgroup::Subgroup;
use crate::sylow::sylow_subgroup;

// ---------------------------------------------------------------------------
// Check identifiers
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CheckId {
    T1,
    T2,
    T3,
    T4,
    P31,
    L21,
    L22,
    L23F,
    L23R,
    L24A,
    L24B,
    L24C,
    L25,
    L26,
    L28,
    L29,
    L210,
    L211,
    Eqv,
}

pub const GROUP_CHECKS: &[CheckId] = &[
    CheckId::T1,
    CheckId::T2,
    CheckId::T3,
    CheckId::T4,
    CheckId::P31,
    CheckId::L21,
    CheckId::L22,
    CheckId::L23F,
    CheckId::L23R,
    CheckId::L24A,
    CheckId::L24B,
    CheckId::L24C,
    CheckId::L25,
    CheckId::L26,
    CheckId::L28,
    CheckId::Eqv,
];

pub const INSTANCE_CHECKS: &[CheckId] = &[CheckId::L29, CheckId::L210, CheckId::L211];

impl CheckId {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::T1 => "T1",
            CheckId::T2 => "T2",
            CheckId::T3 => "T3",
            CheckId::T4 => "T4",
            CheckId::P31 => "P31",
            CheckId::L21 => "L21",
            CheckId::L22 => "L22",
            CheckId::L23F => "L23F",
            CheckId::L23R => "L23R",
            CheckId::L24A => "L24A",
            CheckId::L24B => "L24B",
            CheckId::L24C => "L24C",
            CheckId::L25 => "L25",
            CheckId::L26 => "L26",
            CheckId::L28 => "L28",
            CheckId::L29 => "L29",
            CheckId::L210 => "L210",
            CheckId::L211 => "L211",
            CheckId::Eqv => "EQV",
        }
    }

    pub fn is_instance_check(&self) -> bool {
        INSTANCE_CHECKS.contains(self)
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl std::str::FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = GROUP_CHECKS.iter().chain(INSTANCE_CHECKS);
        for c in all {
            if c.as_str().eq_ignore_ascii_case(s) {
                return Ok(*c);
            }
        }
        Err(Error::UnknownCheck(s.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Witnesses and verdicts
// ---------------------------------------------------------------------------

/// Replayable evidence attached to a false flag. Permutations are recorded
/// in cycle notation at the degree of the group under check.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `element` of ⟨subgroup⟩ has `element^conjugator = image` inside
    /// ⟨ambient⟩ but outside ⟨subgroup⟩.
    ClosureBreach {
        subgroup: Vec<String>,
        ambient: Vec<String>,
        element: String,
        conjugator: String,
        image: String,
    },
    /// T3/T4: this Sylow subgroup admits no valid target order.
    NoValidTargetOrder { prime: u64, sylow_order: u64 },
    /// The subgroup generated by all p′-elements has order divisible by p.
    NotPNilpotent { prime: u64, odd_generated_order: u64 },
    NotSupersolvable { chief_factor_orders: Vec<u64> },
    /// The two strong-closure routes disagree on this subgroup.
    EquivalenceMismatch {
        subgroup: Vec<String>,
        h_subgroup: bool,
        strongly_closed: bool,
    },
    /// Generic named subgroup evidence.
    SubgroupWitness {
        label: String,
        order: u64,
        generators: Vec<String>,
    },
    Note { text: String },
}

fn perm_strings(perms: &[Perm]) -> Vec<String> {
    perms.iter().map(|p| p.to_string()).collect()
}

fn closure_breach_witness(h: &Subgroup, ambient_gens: &[Perm], breach: &Breach) -> Witness {
    Witness::ClosureBreach {
        subgroup: perm_strings(h.group().generators()),
        ambient: perm_strings(ambient_gens),
        element: breach.element.to_string(),
        conjugator: breach.conjugator.to_string(),
        image: breach.image.to_string(),
    }
}

/// Re-evaluates a witness against the group it was produced on. True when
/// the recorded failure reproduces.
pub fn witness_replays(g: &Group, w: &Witness) -> Result<bool> {
    let degree = g.degree();
    let parse_all = |ss: &[String]| -> Result<Vec<Perm>> {
        ss.iter().map(|s| Perm::parse(degree, s)).collect()
    };
    match w {
        Witness::ClosureBreach {
            subgroup,
            ambient,
            element,
            conjugator,
            image,
        } => {
            let h = Subgroup::generated(g, parse_all(subgroup)?)?;
            let k = Subgroup::generated(g, parse_all(ambient)?)?;
            let a = Perm::parse(degree, element)?;
            let c = Perm::parse(degree, conjugator)?;
            let im = Perm::parse(degree, image)?;
            Ok(a.conjugate(&c) == im
                && h.contains(&a)
                && g.contains(&c)
                && k.contains(&im)
                && !h.contains(&im))
        }
        Witness::NotPNilpotent { prime, .. } => {
            Ok(!structure::is_p_nilpotent(g, *prime)?.0)
        }
        Witness::NotSupersolvable { .. } => Ok(!structure::is_supersolvable(g)?),
        Witness::EquivalenceMismatch { subgroup, .. } => {
            let h = Subgroup::generated(g, parse_all(subgroup)?)?;
            Ok(is_h_subgroup(&h, g)? != is_strongly_closed_in_group(&h, g)?)
        }
        Witness::NoValidTargetOrder { .. }
        | Witness::SubgroupWitness { .. }
        | Witness::Note { .. } => Ok(true),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub group_id: String,
    pub check_id: String,
    pub params: String,
    pub hypothesis_holds: Option<bool>,
    pub conclusion_holds: Option<bool>,
    pub consistent: Option<bool>,
    pub skipped: bool,
    pub witnesses: Vec<Witness>,
    pub runtime_ms: u64,
}

impl Verdict {
    fn evaluated(
        group_id: &str,
        check: CheckId,
        params: String,
        hypothesis: bool,
        conclusion: Option<bool>,
        witnesses: Vec<Witness>,
        started: Instant,
    ) -> Verdict {
        let consistent = if hypothesis {
            conclusion.expect("a true hypothesis must come with an evaluated conclusion")
        } else {
            true
        };
        Verdict {
            group_id: group_id.to_string(),
            check_id: check.as_str().to_string(),
            params,
            hypothesis_holds: Some(hypothesis),
            conclusion_holds: conclusion,
            consistent: Some(consistent),
            skipped: false,
            witnesses,
            runtime_ms: started.elapsed().as_millis() as u64,
        }
    }

    fn skipped(group_id: &str, check: CheckId, params: String, reason: String) -> Verdict {
        Verdict {
            group_id: group_id.to_string(),
            check_id: check.as_str().to_string(),
            params,
            hypothesis_holds: None,
            conclusion_holds: None,
            consistent: None,
            skipped: true,
            witnesses: vec![Witness::Note { text: reason }],
            runtime_ms: 0,
        }
    }

    pub fn is_inconsistent(&self) -> bool {
        self.consistent == Some(false)
    }
}

// ---------------------------------------------------------------------------
// Check context
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Bounds {
    /// Theorem checks (Sylow machinery on the whole group).
    pub theorem: u64,
    /// Checks quantifying over the full subgroup lattice (L24*, EQV).
    pub lattice_quantified: u64,
    pub l25: u64,
    pub l28: u64,
    /// Cheap structural lemma checks (L21, L22, L23, L26).
    pub basic: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            theorem: 5_000,
            lattice_quantified: 200,
            l25: 500,
            l28: 500,
            basic: 2_000,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckContext {
    pub reading: ClosureReading,
    pub include_order4_clause: bool,
    /// Cap on the number of normal subgroups E tried for T4.
    pub t4_candidate_cap: usize,
    pub bounds: Bounds,
}

impl Default for CheckContext {
    fn default() -> Self {
        CheckContext {
            reading: ClosureReading::Normalizer,
            include_order4_clause: true,
            t4_candidate_cap: 50,
            bounds: Bounds::default(),
        }
    }
}

// ---------------------------------------------------------------------------
// Theorem checks
// ---------------------------------------------------------------------------

fn hypothesis_witnesses(w: Option<HypothesisWitness>) -> Vec<Witness> {
    match w {
        None => vec![],
        Some(HypothesisWitness::SubgroupNotClosed {
            target_order,
            subgroup_gens,
            ambient_gens,
            breach,
            ..
        }) => vec![
            Witness::SubgroupWitness {
                label: "subgroup_not_strongly_closed".into(),
                order: target_order,
                generators: perm_strings(&subgroup_gens),
            },
            Witness::ClosureBreach {
                subgroup: perm_strings(&subgroup_gens),
                ambient: perm_strings(&ambient_gens),
                element: breach.element.to_string(),
                conjugator: breach.conjugator.to_string(),
                image: breach.image.to_string(),
            },
        ],
        Some(HypothesisWitness::NoValidTargetOrder { prime, sylow_order }) => {
            vec![Witness::NoValidTargetOrder { prime, sylow_order }]
        }
    }
}

fn p_nilpotent_conclusion(g: &Group, p: u64) -> Result<(bool, Vec<Witness>)> {
    let (ok, _) = structure::is_p_nilpotent(g, p)?;
    if ok {
        return Ok((true, vec![]));
    }
    // the p′-generated subgroup kept even order: record its size
    let degree = g.degree();
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: Vec<Perm> = vec![Perm::identity(degree)];
    for x in g.elements()? {
        if x.order() % p != 0 && !x.is_identity() && span.binary_search(x).is_err() {
            gens.push(x.clone());
            span = crate::group::span_elements(degree, &gens);
        }
    }
    Ok((
        false,
        vec![Witness::NotPNilpotent {
            prime: p,
            odd_generated_order: span.len() as u64,
        }],
    ))
}

fn supersolvable_conclusion(g: &Group) -> Result<(bool, Vec<Witness>)> {
    if structure::is_supersolvable(g)? {
        return Ok((true, vec![]));
    }
    let orders = if structure::is_solvable(g)? {
        structure::chief_series(g)?.factor_orders
    } else {
        vec![]
    };
    Ok((
        false,
        vec![Witness::NotSupersolvable {
            chief_factor_orders: orders,
        }],
    ))
}

/// Evaluates one fully specified theorem check; `spec.target_order` must be
/// set for T1/T2/P31 on groups with non-cyclic Sylow subgroup.
pub fn check_theorem(
    group_id: &str,
    g: &Group,
    spec: &HypothesisSpec,
    ctx: &CheckContext,
) -> Result<Verdict> {
    let started = Instant::now();
    let check = match spec.theorem {
        TheoremId::T1 => CheckId::T1,
        TheoremId::T2 => CheckId::T2,
        TheoremId::T3 => CheckId::T3,
        TheoremId::T4 => CheckId::T4,
        TheoremId::P31 => CheckId::P31,
    };
    let params = theorem_params(spec);
    let (hyp, hyp_witness) = theorem_hypothesis(g, spec, ctx.reading)?;
    let mut witnesses = hypothesis_witnesses(hyp_witness);
    let conclusion = if hyp {
        let (ok, mut w) = match spec.theorem {
            TheoremId::T1 | TheoremId::P31 => p_nilpotent_conclusion(g, 2)?,
            TheoremId::T2 => {
                let p = primes_dividing(g.order()).first().copied().unwrap_or(2);
                p_nilpotent_conclusion(g, p)?
            }
            TheoremId::T3 | TheoremId::T4 => supersolvable_conclusion(g)?,
        };
        witnesses.append(&mut w);
        Some(ok)
    } else {
        None
    };
    Ok(Verdict::evaluated(
        group_id, check, params, hyp, conclusion, witnesses, started,
    ))
}

fn theorem_params(spec: &HypothesisSpec) -> String {
    let mut parts = Vec::new();
    if let Some(d) = spec.target_order {
        parts.push(format!("D={d}"));
    }
    match spec.theorem {
        TheoremId::T1 | TheoremId::T2 | TheoremId::P31 => {
            parts.push(format!(
                "order4_clause={}",
                if spec.include_order4_clause { "on" } else { "off" }
            ));
        }
        _ => {}
    }
    if let Some(e) = &spec.normal_subgroup {
        parts.push(format!("E_order={}", e.order()));
    }
    parts.join(",")
}

/// Expands a theorem check over its valid parameterizations: one verdict per
/// target order |D| for T1/T2/P31 (a single verdict when the Sylow subgroup
/// is cyclic), one per candidate normal subgroup E for T4.
pub fn run_theorem_check(
    group_id: &str,
    g: &Group,
    check: CheckId,
    ctx: &CheckContext,
) -> Result<Vec<Verdict>> {
    if g.order() > ctx.bounds.theorem {
        return Ok(vec![Verdict::skipped(
            group_id,
            check,
            String::new(),
            format!("order {} exceeds theorem bound {}", g.order(), ctx.bounds.theorem),
        )]);
    }
    let theorem = match check {
        CheckId::T1 => TheoremId::T1,
        CheckId::T2 => TheoremId::T2,
        CheckId::T3 => TheoremId::T3,
        CheckId::T4 => TheoremId::T4,
        CheckId::P31 => TheoremId::P31,
        _ => unreachable!("not a theorem check"),
    };
    let base = HypothesisSpec {
        theorem,
        target_order: None,
        include_order4_clause: ctx.include_order4_clause,
        normal_subgroup: None,
    };
    match theorem {
        TheoremId::T1 | TheoremId::T2 | TheoremId::P31 => {
            let p = match theorem {
                TheoremId::T2 => primes_dividing(g.order()).first().copied().unwrap_or(2),
                _ => 2,
            };
            let sylow = sylow_subgroup(g, p)?;
            if shape(sylow.group())? == Shape::Cyclic {
                return Ok(vec![check_theorem(group_id, g, &base, ctx)?]);
            }
            let min_d = if theorem == TheoremId::P31 { 2 } else { 1 };
            let mut verdicts = Vec::new();
            for d in crate::closure::valid_target_orders(sylow.order(), p) {
                if d <= min_d {
                    continue;
                }
                let spec = base.clone().with_target_order(d);
                verdicts.push(check_theorem(group_id, g, &spec, ctx)?);
            }
            if verdicts.is_empty() {
                // e.g. P31 on a Sylow subgroup of order 4: no valid |D|
                verdicts.push(Verdict::skipped(
                    group_id,
                    check,
                    String::new(),
                    "no valid target order".into(),
                ));
            }
            Ok(verdicts)
        }
        TheoremId::T3 => Ok(vec![check_theorem(group_id, g, &base, ctx)?]),
        TheoremId::T4 => {
            let mut verdicts = Vec::new();
            let normals = structure::normal_subgroups(g)?;
            let mut tried = 0;
            for n in normals {
                if tried >= ctx.t4_candidate_cap {
                    break;
                }
                let e = Subgroup::new(n.clone(), g.clone())?;
                // G/1 ≅ G and G/G is trivial; skip the coset action there
                let quotient_supersolvable = if n.order() == 1 {
                    structure::is_supersolvable(g)?
                } else if n.order() == g.order() {
                    true
                } else {
                    let q = ops::quotient_group(g, &e)?;
                    structure::is_supersolvable(q.quotient())?
                };
                if !quotient_supersolvable {
                    continue;
                }
                tried += 1;
                let spec = base.clone().with_normal_subgroup(e);
                verdicts.push(check_theorem(group_id, g, &spec, ctx)?);
            }
            if verdicts.is_empty() {
                verdicts.push(Verdict::skipped(
                    group_id,
                    check,
                    String::new(),
                    "no normal subgroup with supersolvable quotient".into(),
                ));
            }
            Ok(verdicts)
        }
    }
}

// ---------------------------------------------------------------------------
// Lemma checks on groups
// ---------------------------------------------------------------------------

fn bound_skip(group_id: &str, g: &Group, check: CheckId, bound: u64) -> Option<Verdict> {
    if g.order() > bound {
        Some(Verdict::skipped(
            group_id,
            check,
            String::new(),
            format!("order {} exceeds bound {bound}", g.order()),
        ))
    } else {
        None
    }
}

fn check_l21(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let sylow2 = sylow_subgroup(g, 2)?;
    let hyp = ops::is_normal(g, &sylow2)?;
    let (conclusion, witnesses) = if hyp {
        match structure::hall_2prime_complement(g) {
            Ok(a) => {
                let odd_part = g.order() / p_part(g.order(), 2);
                let ok = a.order() == odd_part && a.order() % 2 == 1;
                let w = vec![Witness::SubgroupWitness {
                    label: "hall_2prime_complement".into(),
                    order: a.order(),
                    generators: perm_strings(a.group().generators()),
                }];
                (Some(ok), w)
            }
            Err(e) => (
                Some(false),
                vec![Witness::Note {
                    text: format!("complement search failed under a true hypothesis: {e}"),
                }],
            ),
        }
    } else {
        (None, vec![])
    };
    Ok(Verdict::evaluated(
        group_id,
        CheckId::L21,
        String::new(),
        hyp,
        conclusion,
        witnesses,
        started,
    ))
}

fn check_l22(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let sylow2 = sylow_subgroup(g, 2)?;
    let hyp = shape(sylow2.group())? == Shape::Cyclic;
    let (conclusion, witnesses) = if hyp {
        let (ok, w) = p_nilpotent_conclusion(g, 2)?;
        (Some(ok), w)
    } else {
        (None, vec![])
    };
    Ok(Verdict::evaluated(
        group_id,
        CheckId::L22,
        String::new(),
        hyp,
        conclusion,
        witnesses,
        started,
    ))
}

/// Every maximal subgroup of the Sylow 2-subgroup is strongly closed in G.
fn maximals_strongly_closed(g: &Group, reading: ClosureReading) -> Result<(bool, Vec<Witness>)> {
    let sylow = sylow_subgroup(g, 2)?;
    if sylow.order() == 1 {
        return Ok((true, vec![]));
    }
    for inner in crate::lattice::maximal_subgroups(sylow.group())? {
        let h = inner.reparent(g)?;
        let breach = match reading {
            ClosureReading::Normalizer => strongly_closed_in_group_breach(&h, g)?,
            ClosureReading::AmbientSylow => strong_closure_breach(&h, &sylow, g)?,
        };
        if let Some(b) = breach {
            let ambient = match reading {
                ClosureReading::Normalizer => ops::normalizer(g, &h)?.group().generators().to_vec(),
                ClosureReading::AmbientSylow => sylow.group().generators().to_vec(),
            };
            return Ok((false, vec![closure_breach_witness(&h, &ambient, &b)]));
        }
    }
    Ok((true, vec![]))
}

fn check_l23(group_id: &str, g: &Group, forward: bool, ctx: &CheckContext) -> Result<Verdict> {
    let started = Instant::now();
    let check = if forward { CheckId::L23F } else { CheckId::L23R };
    if forward {
        let (hyp, mut witnesses) = maximals_strongly_closed(g, ctx.reading)?;
        let conclusion = if hyp {
            let (ok, mut w) = p_nilpotent_conclusion(g, 2)?;
            witnesses.append(&mut w);
            Some(ok)
        } else {
            witnesses.clear(); // hypothesis false is not a failure here
            None
        };
        Ok(Verdict::evaluated(
            group_id,
            check,
            String::new(),
            hyp,
            conclusion,
            witnesses,
            started,
        ))
    } else {
        let hyp = structure::is_p_nilpotent(g, 2)?.0;
        let (conclusion, witnesses) = if hyp {
            let (ok, w) = maximals_strongly_closed(g, ctx.reading)?;
            (Some(ok), w)
        } else {
            (None, vec![])
        };
        Ok(Verdict::evaluated(
            group_id,
            check,
            String::new(),
            hyp,
            conclusion,
            witnesses,
            started,
        ))
    }
}

/// Subgroups of prime-power order that are strongly closed in G — the
/// quantification domain of the L24 family and L25.
fn strongly_closed_p_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    for h in all_subgroups_flat(g)? {
        let ord = h.order();
        if ord == 1 || factorize(ord).len() != 1 {
            continue;
        }
        if is_strongly_closed_in_group(&h, g)? {
            out.push(h);
        }
    }
    Ok(out)
}

fn check_l24a(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let mut witnesses = Vec::new();
    let mut ok = true;
    let all = all_subgroups_flat(g)?;
    'outer: for h in strongly_closed_p_subgroups(g)? {
        for l in &all {
            if l.order() <= h.order() || !h.is_contained_in(l) {
                continue;
            }
            let h_in_l = h.reparent(l.group())?;
            if let Some(b) = strongly_closed_in_group_breach(&h_in_l, l.group())? {
                ok = false;
                witnesses.push(closure_breach_witness(
                    &h,
                    l.group().generators(),
                    &b,
                ));
                break 'outer;
            }
        }
    }
    Ok(Verdict::evaluated(
        group_id,
        CheckId::L24A,
        String::new(),
        true,
        Some(ok),
        witnesses,
        started,
    ))
}

fn check_l24b(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let closed = strongly_closed_p_subgroups(g)?;
    let mut ok = true;
    let mut witnesses = Vec::new();
    'outer: for n in structure::normal_subgroups(g)? {
        let n_sub = Subgroup::new(n.clone(), g.clone())?;
        let q = ops::quotient_group(g, &n_sub)?;
        for h in &closed {
            let h_bar = q.map_subgroup(h)?;
            if !is_strongly_closed_in_group(&h_bar, q.quotient())? {
                ok = false;
                witnesses.push(Witness::Note {
                    text: format!(
                        "image of a strongly closed subgroup of order {} fails closure in the quotient by N of order {}",
                        h.order(),
                        n.order()
                    ),
                });
                break 'outer;
            }
            let n_of_h = ops::normalizer(g, h)?;
            let image_of_normalizer = q.map_subgroup(&n_of_h)?;
            let normalizer_of_image = ops::normalizer(q.quotient(), &h_bar)?;
            if image_of_normalizer != normalizer_of_image {
                ok = false;
                witnesses.push(Witness::Note {
                    text: format!(
                        "normalizer image mismatch: |im N_G(H)| = {}, |N_quotient(im H)| = {} (H order {}, N order {})",
                        image_of_normalizer.order(),
                        normalizer_of_image.order(),
                        h.order(),
                        n.order()
                    ),
                });
                break 'outer;
            }
        }
    }
    Ok(Verdict::evaluated(
        group_id,
        CheckId::L24B,
        String::new(),
        true,
        Some(ok),
        witnesses,
        started,
    ))
}

fn check_l24c(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let mut ok = true;
    let mut witnesses = Vec::new();
    for h in strongly_closed_p_subgroups(g)? {
        if ops::is_subnormal(g, &h)? && !ops::is_normal(g, &h)? {
            ok = false;
            witnesses.push(Witness::SubgroupWitness {
                label: "subnormal_strongly_closed_but_not_normal".into(),
                order: h.order(),
                generators: perm_strings(h.group().generators()),
            });
            break;
        }
    }
    Ok(Verdict::evaluated(
        group_id,
        CheckId::L24C,
        String::new(),
        true,
        Some(ok),
        witnesses,
        started,
    ))
}

fn check_l25(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let mut ok = true;
    let mut witnesses = Vec::new();
    for h in all_subgroups_flat(g)? {
        let ord = h.order();
        if ord == 1 || ord != p_part(ord, 2) {
            continue;
        }
        if !is_strongly_closed_in_group(&h, g)? {
            continue;
        }
        let n = ops::normalizer(g, &h)?;
        let c = ops::centralizer(g, &h)?;
        let ratio = n.order() / c.order();
        if ratio != p_part(ratio, 2) {
            continue; // N/C is not a 2-group; hypothesis of the lemma fails
        }
        let closure = ops::normal_closure(g, &h)?;
        if h.order() != p_part(closure.order(), 2) {
            ok = false;
            witnesses.push(Witness::SubgroupWitness {
                label: format!(
                    "not_sylow_in_normal_closure(|H|={}, |⟨H^G⟩|={})",
                    h.order(),
                    closure.order()
                ),
                order: h.order(),
                generators: perm_strings(h.group().generators()),
            });
            break;
        }
    }
    Ok(Verdict::evaluated(
        group_id,
        CheckId::L25,
        String::new(),
        true,
        Some(ok),
        witnesses,
        started,
    ))
}

fn check_l26(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let hyp = structure::small_orders_central(g)?;
    let (conclusion, witnesses) = if hyp {
        let (ok, w) = p_nilpotent_conclusion(g, 2)?;
        (Some(ok), w)
    } else {
        (None, vec![])
    };
    Ok(Verdict::evaluated(
        group_id,
        CheckId::L26,
        String::new(),
        hyp,
        conclusion,
        witnesses,
        started,
    ))
}

fn check_l28(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let data = structure::fitting_data(g)?;
    let c = ops::centralizer(g, &data.generalized_fitting)?;
    let ok = c.is_contained_in(&data.generalized_fitting);
    let witnesses = if ok {
        vec![]
    } else {
        vec![Witness::SubgroupWitness {
            label: format!(
                "centralizer_escapes_generalized_fitting(|F*|={}, |C|={})",
                data.generalized_fitting.order(),
                c.order()
            ),
            order: c.order(),
            generators: perm_strings(c.group().generators()),
        }]
    };
    Ok(Verdict::evaluated(
        group_id,
        CheckId::L28,
        String::new(),
        true,
        Some(ok),
        witnesses,
        started,
    ))
}

fn check_eqv(group_id: &str, g: &Group) -> Result<Verdict> {
    let started = Instant::now();
    let mut ok = true;
    let mut witnesses = Vec::new();
    for h in all_subgroups_flat(g)? {
        let via_h_subgroup = is_h_subgroup(&h, g)?;
        let via_closure = is_strongly_closed_in_group(&h, g)?;
        if via_h_subgroup != via_closure {
            ok = false;
            witnesses.push(Witness::EquivalenceMismatch {
                subgroup: perm_strings(h.group().generators()),
                h_subgroup: via_h_subgroup,
                strongly_closed: via_closure,
            });
            break;
        }
    }
    Ok(Verdict::evaluated(
        group_id,
        CheckId::Eqv,
        String::new(),
        true,
        Some(ok),
        witnesses,
        started,
    ))
}

/// Runs one check id on a group, expanding parameterizations. Returns one or
/// more verdicts; bound-exceeded checks come back as a single skipped
/// verdict.
pub fn run_group_check(
    group_id: &str,
    g: &Group,
    check: CheckId,
    ctx: &CheckContext,
) -> Result<Vec<Verdict>> {
    match check {
        CheckId::T1 | CheckId::T2 | CheckId::T3 | CheckId::T4 | CheckId::P31 => {
            run_theorem_check(group_id, g, check, ctx)
        }
        CheckId::L21 => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.basic)
            .map_or_else(|| check_l21(group_id, g), Ok)?]),
        CheckId::L22 => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.basic)
            .map_or_else(|| check_l22(group_id, g), Ok)?]),
        CheckId::L23F => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.basic)
            .map_or_else(|| check_l23(group_id, g, true, ctx), Ok)?]),
        CheckId::L23R => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.basic)
            .map_or_else(|| check_l23(group_id, g, false, ctx), Ok)?]),
        CheckId::L24A => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.lattice_quantified)
            .map_or_else(|| check_l24a(group_id, g), Ok)?]),
        CheckId::L24B => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.lattice_quantified)
            .map_or_else(|| check_l24b(group_id, g), Ok)?]),
        CheckId::L24C => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.lattice_quantified)
            .map_or_else(|| check_l24c(group_id, g), Ok)?]),
        CheckId::L25 => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.l25)
            .map_or_else(|| check_l25(group_id, g), Ok)?]),
        CheckId::L26 => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.basic)
            .map_or_else(|| check_l26(group_id, g), Ok)?]),
        CheckId::L28 => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.l28)
            .map_or_else(|| check_l28(group_id, g), Ok)?]),
        CheckId::Eqv => Ok(vec![bound_skip(group_id, g, check, ctx.bounds.lattice_quantified)
            .map_or_else(|| check_eqv(group_id, g), Ok)?]),
        CheckId::L29 | CheckId::L210 | CheckId::L211 => Err(Error::UnknownCheck(format!(
            "{check} runs on coprime-action instances, not plain groups"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Coprime-action lemma checks
// ---------------------------------------------------------------------------

pub fn check_l29(inst: &CoprimeActionInstance) -> Result<Verdict> {
    let started = Instant::now();
    let p = inst.normal_part();
    let hyp = p
        .canonical_key()?
        .iter()
        .filter(|x| x.order() == 2 || x.order() == 4)
        .all(|x| inst.action_fixes(x));
    let conclusion = if hyp {
        Some(inst.action_is_trivial())
    } else {
        None
    };
    Ok(Verdict::evaluated(
        &inst.id,
        CheckId::L29,
        String::new(),
        hyp,
        conclusion,
        vec![],
        started,
    ))
}

pub fn check_l210(inst: &CoprimeActionInstance, target_order: u64) -> Result<Verdict> {
    let started = Instant::now();
    let g = inst.group();
    let p = inst.normal_part();
    let params = format!("D={target_order}");
    let elementary = shape(p.group())? == Shape::ElementaryAbelian;
    let hyp = elementary && {
        let mut all_normal = true;
        for inner in subgroups_of_order(p.group(), target_order)? {
            let h = inner.reparent(g)?;
            if !ops::is_normal(g, &h)? {
                all_normal = false;
                break;
            }
        }
        all_normal
    };
    let conclusion = if hyp {
        let z = ops::center(g)?;
        let mut central = true;
        for inner in subgroups_of_order(p.group(), 2)? {
            let h = inner.reparent(g)?;
            if !h.is_contained_in(&z) {
                central = false;
                break;
            }
        }
        Some(central)
    } else {
        None
    };
    Ok(Verdict::evaluated(
        &inst.id,
        CheckId::L210,
        params,
        hyp,
        conclusion,
        vec![],
        started,
    ))
}

pub fn check_l211(inst: &CoprimeActionInstance, target_order: u64) -> Result<Verdict> {
    let started = Instant::now();
    let p = inst.normal_part();
    let params = format!("D={target_order}");
    let mut orders = vec![target_order];
    if target_order == 2 && p.order() >= 4 {
        orders.push(4);
    }
    let mut hyp = true;
    'outer: for ord in orders {
        for inner in subgroups_of_order(p.group(), ord)? {
            let h = inner.reparent(inst.group())?;
            if !inst.action_preserves(&h) {
                hyp = false;
                break 'outer;
            }
        }
    }
    let conclusion = if hyp {
        Some(inst.action_is_trivial())
    } else {
        None
    };
    Ok(Verdict::evaluated(
        &inst.id,
        CheckId::L211,
        params,
        hyp,
        conclusion,
        vec![],
        started,
    ))
}

/// Runs an instance check, expanding over valid target orders for L210/L211.
pub fn run_instance_check(inst: &CoprimeActionInstance, check: CheckId) -> Result<Vec<Verdict>> {
    match check {
        CheckId::L29 => Ok(vec![check_l29(inst)?]),
        CheckId::L210 | CheckId::L211 => {
            let p_order = inst.normal_part().order();
            let mut verdicts = Vec::new();
            for d in crate::closure::valid_target_orders(p_order, 2) {
                verdicts.push(match check {
                    CheckId::L210 => check_l210(inst, d)?,
                    _ => check_l211(inst, d)?,
                });
            }
            if verdicts.is_empty() {
                verdicts.push(Verdict::skipped(
                    &inst.id,
                    check,
                    String::new(),
                    "no valid target order for this normal part".into(),
                ));
            }
            Ok(verdicts)
        }
        other => Err(Error::UnknownCheck(format!(
            "{other} runs on plain groups, not coprime-action instances"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ctx() -> CheckContext {
        CheckContext::default()
    }

    #[test]
    fn t1_on_cyclic_sylow_is_one_consistent_verdict() {
        let g = catalog::construct("cyclic(12)").unwrap();
        let verdicts = run_group_check("C12", &g, CheckId::T1, &ctx()).unwrap();
        assert_eq!(verdicts.len(), 1);
        assert_eq!(verdicts[0].hypothesis_holds, Some(true));
        assert_eq!(verdicts[0].conclusion_holds, Some(true));
        assert_eq!(verdicts[0].consistent, Some(true));
    }

    #[test]
    fn t1_on_s4_expands_over_orders_and_stays_consistent() {
        let g = catalog::construct("symmetric(4)").unwrap();
        let verdicts = run_group_check("S4", &g, CheckId::T1, &ctx()).unwrap();
        assert_eq!(verdicts.len(), 2); // D ∈ {2, 4}
        for v in &verdicts {
            assert_eq!(v.consistent, Some(true));
            assert_eq!(v.hypothesis_holds, Some(false));
        }
    }

    #[test]
    fn l22_on_c12_is_consistent_with_true_hypothesis() {
        let g = catalog::construct("cyclic(12)").unwrap();
        let v = &run_group_check("C12", &g, CheckId::L22, &ctx()).unwrap()[0];
        assert_eq!(v.hypothesis_holds, Some(true));
        assert_eq!(v.conclusion_holds, Some(true));
    }

    #[test]
    fn l21_on_d8xc3_finds_the_complement() {
        let g = catalog::construct("direct_product(dihedral(8), cyclic(3))").unwrap();
        let v = &run_group_check("D8xC3", &g, CheckId::L21, &ctx()).unwrap()[0];
        assert_eq!(v.hypothesis_holds, Some(true));
        assert_eq!(v.conclusion_holds, Some(true));
        assert!(matches!(
            &v.witnesses[0],
            Witness::SubgroupWitness { order: 3, .. }
        ));
    }

    #[test]
    fn eqv_holds_on_s4() {
        let g = catalog::construct("symmetric(4)").unwrap();
        let v = &run_group_check("S4", &g, CheckId::Eqv, &ctx()).unwrap()[0];
        assert_eq!(v.conclusion_holds, Some(true));
    }

    #[test]
    fn oversized_groups_are_skipped_not_passed() {
        let g = catalog::construct("special_linear_2(17)").unwrap();
        let v = &run_group_check("SL2_17", &g, CheckId::Eqv, &ctx()).unwrap()[0];
        assert!(v.skipped);
        assert_eq!(v.consistent, None);
    }

    #[test]
    fn q8_c3_instance_l211_matches_the_designed_outcome() {
        let inst = catalog::instance("CA_Q8_C3").unwrap();
        let verdicts = run_instance_check(&inst, CheckId::L211).unwrap();
        // valid orders for Q8: D ∈ {2, 4}
        assert_eq!(verdicts.len(), 2);
        for v in &verdicts {
            assert_eq!(v.consistent, Some(true));
        }
        let d4 = verdicts.iter().find(|v| v.params == "D=4").unwrap();
        assert_eq!(d4.hypothesis_holds, Some(false)); // the three C4s are permuted
    }

    #[test]
    fn trivial_action_instance_is_true_true() {
        let inst = catalog::instance("CA_V4_C3_TRIV").unwrap();
        let v = &run_instance_check(&inst, CheckId::L29).unwrap()[0];
        assert_eq!(v.hypothesis_holds, Some(true));
        assert_eq!(v.conclusion_holds, Some(true));
    }

    #[test]
    fn frobenius_instance_has_false_hypothesis_everywhere() {
        let inst = catalog::instance("CA_F56").unwrap();
        for v in run_instance_check(&inst, CheckId::L211).unwrap() {
            assert_eq!(v.hypothesis_holds, Some(false));
            assert_eq!(v.consistent, Some(true));
        }
        let v29 = &run_instance_check(&inst, CheckId::L29).unwrap()[0];
        assert_eq!(v29.hypothesis_holds, Some(false));
    }

    #[test]
    fn witnesses_replay() {
        let g = catalog::construct("symmetric(4)").unwrap();
        let verdicts = run_group_check("S4", &g, CheckId::T1, &ctx()).unwrap();
        let mut saw_breach = false;
        for v in verdicts {
            for w in &v.witnesses {
                if matches!(w, Witness::ClosureBreach { .. }) {
                    saw_breach = true;
                }
                assert!(witness_replays(&g, w).unwrap());
            }
        }
        assert!(saw_breach);
    }
}
