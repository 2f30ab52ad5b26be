//! Acceptance suite. Each test evaluates one criterion end to end at its
//! stated tolerance (all are exact) and prints a single pass/fail line; run
//! with `cargo test --test acceptance -- --nocapture` to see them.

mod common;

use std::time::Instant;

use strong_closure::campaign::{run_campaign, CampaignConfig};
use strong_closure::catalog::{self, builtin_catalog};
use strong_closure::checks::{
    check_theorem, run_group_check, run_instance_check, witness_replays, CheckContext, CheckId,
};
use strong_closure::closure::{
    is_h_subgroup, is_strongly_closed_in_group, HypothesisSpec, TheoremId,
};
use strong_closure::group::Group;
use strong_closure::lattice::{all_subgroups_flat, subgroups_of_order};
use strong_closure::shape::{shape, Shape};
use strong_closure::{ops, structure, sylow};

fn report(criterion: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance {criterion}: {status}");
    assert!(failures.is_empty(), "{criterion} failures: {failures:#?}");
}

fn catalog_groups_up_to(max: u64) -> Vec<(String, Group)> {
    builtin_catalog(400, true)
        .unwrap()
        .into_iter()
        .filter(|e| e.order().unwrap() <= max)
        .map(|e| (e.id.clone(), e.group().unwrap().clone()))
        .collect()
}

/// Criterion 1: the SL₂(17) battery, exact booleans, under 60 seconds.
#[test]
fn criterion_1_sl2_17_battery() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let g = catalog::construct("special_linear_2(17)").unwrap();

    if g.order() != 4896 {
        failures.push(format!("order {} != 4896", g.order()));
    }
    let p = sylow::sylow_subgroup(&g, 2).unwrap();
    if p.order() != 32 {
        failures.push(format!("Sylow 2-subgroup order {} != 32", p.order()));
    }
    match shape(p.group()).unwrap() {
        Shape::GeneralizedQuaternion => {}
        other => failures.push(format!("Sylow 2-subgroup shape {other}, not generalized_quaternion")),
    }
    if !ops::is_maximal_subgroup(&g, &p).unwrap() {
        failures.push("Sylow 2-subgroup is not maximal".into());
    }
    let n = ops::normalizer(&g, &p).unwrap();
    if n != p {
        failures.push(format!("N_G(P) has order {}, expected P itself", n.order()));
    }
    let z = ops::center(&g).unwrap();
    if z.order() != 2 {
        failures.push(format!("center order {} != 2", z.order()));
    }
    let order_2_subs = subgroups_of_order(p.group(), 2).unwrap();
    if order_2_subs.len() != 1 {
        failures.push(format!("{} order-2 subgroups of P, expected 1", order_2_subs.len()));
    } else if order_2_subs[0].canonical_key().unwrap() != z.canonical_key().unwrap() {
        failures.push("unique order-2 subgroup of P differs from Z(G)".into());
    }
    if !is_strongly_closed_in_group(&z, &g).unwrap() {
        failures.push("Z(G) is not strongly closed in G".into());
    }
    if structure::is_p_nilpotent(&g, 2).unwrap().0 {
        failures.push("G reported 2-nilpotent".into());
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 60 {
        failures.push(format!("battery took {elapsed:?}, target < 60s"));
    }
    report("criterion 1 (SL2(17) battery)", &failures);
}

/// Criterion 2: the necessity experiment at |D| = 2, exact.
#[test]
fn criterion_2_order4_clause_necessity() {
    let mut failures = Vec::new();
    let g = catalog::construct("special_linear_2(17)").unwrap();
    let ctx = CheckContext::default();

    let weakened = HypothesisSpec::new(TheoremId::T1)
        .with_target_order(2)
        .without_order4_clause();
    let v = check_theorem("SL2_17", &g, &weakened, &ctx).unwrap();
    if v.hypothesis_holds != Some(true) {
        failures.push(format!("weakened hypothesis {:?}, expected true", v.hypothesis_holds));
    }
    if v.conclusion_holds != Some(false) {
        failures.push(format!("weakened conclusion {:?}, expected false", v.conclusion_holds));
    }
    if v.consistent != Some(false) {
        failures.push("weakened verdict should be the one permitted inconsistency".into());
    }
    // the inconsistent verdict must carry a machine-checkable witness
    if v.witnesses.is_empty() {
        failures.push("weakened verdict carries no witness".into());
    }
    for w in &v.witnesses {
        if !witness_replays(&g, w).unwrap() {
            failures.push(format!("witness does not replay: {w:?}"));
        }
    }

    let full = HypothesisSpec::new(TheoremId::T1).with_target_order(2);
    let v = check_theorem("SL2_17", &g, &full, &ctx).unwrap();
    if v.consistent != Some(true) {
        failures.push("clause-on verdict should be consistent".into());
    }
    if v.hypothesis_holds != Some(false) {
        failures.push(format!(
            "clause-on hypothesis {:?}, expected false",
            v.hypothesis_holds
        ));
    }
    report("criterion 2 (order-4 clause necessity)", &failures);
}

/// Criterion 3: T1/T2/P31 campaign over the catalog (≤ 400 plus SL2_17 and
/// PSL2_17), zero inconsistencies, clause on, under 10 minutes at 4 workers.
#[test]
fn criterion_3_t1_t2_p31_campaign() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let config = CampaignConfig {
        max_order: 400,
        include_distinguished: true,
        checks: vec!["T1".into(), "T2".into(), "P31".into()],
        ..CampaignConfig::default()
    };
    let report_data = run_campaign(&config, 4).unwrap();
    if report_data.summary.inconsistent != 0 {
        for v in report_data.verdicts.iter().filter(|v| v.is_inconsistent()) {
            failures.push(format!("inconsistent: {} {} {}", v.group_id, v.check_id, v.params));
        }
    }
    if report_data.summary.checked == 0 {
        failures.push("campaign produced no verdicts".into());
    }
    if !report_data.catalog.iter().any(|c| c.id == "SL2_17") {
        failures.push("SL2_17 missing from the campaign catalog".into());
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 600 {
        failures.push(format!("campaign took {elapsed:?}, target < 10 min"));
    }
    report("criterion 3 (T1/T2/P31 campaign)", &failures);
}

/// Criterion 4: T3/T4 campaign over the same corpus, zero inconsistencies.
#[test]
fn criterion_4_t3_t4_campaign() {
    let mut failures = Vec::new();
    let config = CampaignConfig {
        max_order: 400,
        include_distinguished: true,
        checks: vec!["T3".into(), "T4".into()],
        ..CampaignConfig::default()
    };
    let report_data = run_campaign(&config, 4).unwrap();
    for v in report_data.verdicts.iter().filter(|v| v.is_inconsistent()) {
        failures.push(format!("inconsistent: {} {} {}", v.group_id, v.check_id, v.params));
    }
    if report_data.summary.checked == 0 {
        failures.push("campaign produced no verdicts".into());
    }
    report("criterion 4 (T3/T4 campaign)", &failures);
}

/// Criterion 5: for every subgroup of every catalog group of order ≤ 200,
/// the H-subgroup route and the strong-closure route agree. Zero mismatches.
#[test]
fn criterion_5_definition_equivalence() {
    let mut failures = Vec::new();
    let mut subgroups_checked = 0usize;
    for (id, g) in catalog_groups_up_to(200) {
        for h in all_subgroups_flat(&g).unwrap() {
            let via_h = is_h_subgroup(&h, &g).unwrap();
            let via_closure = is_strongly_closed_in_group(&h, &g).unwrap();
            subgroups_checked += 1;
            if via_h != via_closure {
                failures.push(format!(
                    "{id}: subgroup of order {} has h_subgroup={via_h}, strongly_closed={via_closure}",
                    h.order()
                ));
            }
        }
    }
    if subgroups_checked < 1000 {
        failures.push(format!(
            "only {subgroups_checked} subgroups quantified; corpus looks wrong"
        ));
    }
    report("criterion 5 (definition equivalence)", &failures);
}

/// Criterion 6: the lemma suite. L21/L22/L24a-c/L26 over groups ≤ 200,
/// L25/L28 over groups ≤ 500, L29–L211 over the full instance list
/// (≥ 20 instances, including Frobenius-56 and Q8⋊C3). Zero violations.
#[test]
fn criterion_6_lemma_suite() {
    let mut failures = Vec::new();
    let ctx = CheckContext::default();

    let small = catalog_groups_up_to(200);
    for (id, g) in &small {
        for check in [CheckId::L21, CheckId::L22, CheckId::L24A, CheckId::L24B, CheckId::L24C, CheckId::L26] {
            for v in run_group_check(id, g, check, &ctx).unwrap() {
                if v.skipped {
                    failures.push(format!("{id} {check} skipped inside its bound"));
                } else if v.is_inconsistent() {
                    failures.push(format!("{id} {check} violated"));
                }
            }
        }
    }
    for (id, g) in catalog_groups_up_to(500) {
        for check in [CheckId::L25, CheckId::L28] {
            for v in run_group_check(&id, &g, check, &ctx).unwrap() {
                if v.skipped {
                    failures.push(format!("{id} {check} skipped inside its bound"));
                } else if v.is_inconsistent() {
                    failures.push(format!("{id} {check} violated"));
                }
            }
        }
    }

    let instances = catalog::all_instances().unwrap();
    if instances.len() < 20 {
        failures.push(format!("only {} coprime-action instances", instances.len()));
    }
    for required in ["CA_F56", "CA_Q8_C3"] {
        if !instances.iter().any(|i| i.id == required) {
            failures.push(format!("required instance {required} missing"));
        }
    }
    for inst in &instances {
        for check in [CheckId::L29, CheckId::L210, CheckId::L211] {
            for v in run_instance_check(inst, check).unwrap() {
                if v.is_inconsistent() {
                    failures.push(format!("{} {check}({}) violated", inst.id, v.params));
                }
            }
        }
    }
    report("criterion 6 (lemma suite)", &failures);
}

/// Criterion 7: engine vs brute force on every catalog group of order ≤ 200:
/// stabilizer-chain order, membership, normalizer, centralizer, and normal
/// closure. Zero discrepancies.
#[test]
fn criterion_7_engine_oracle_equivalence() {
    let mut failures = Vec::new();
    for (id, g) in catalog_groups_up_to(200) {
        // rebuild from generators so the stabilizer-chain path is exercised
        let fresh = Group::from_generators(g.degree(), g.generators().to_vec()).unwrap();
        let brute = common::brute_elements(g.degree(), g.generators());
        if fresh.order() != brute.len() as u64 {
            failures.push(format!(
                "{id}: chain order {} vs brute {}",
                fresh.order(),
                brute.len()
            ));
            continue;
        }
        for x in &brute {
            if !fresh.contains(x) {
                failures.push(format!("{id}: member rejected: {x}"));
            }
        }
        // deterministic non-members: degree-preserving shifts of the points
        let degree = g.degree() as u32;
        for shift in 1..degree.min(6) {
            let images: Vec<u32> = (1..=degree).map(|i| (i - 1 + shift) % degree + 1).collect();
            let probe = strong_closure::Perm::from_images(&images).unwrap();
            if fresh.contains(&probe) != common::brute_contains(&brute, &probe) {
                failures.push(format!("{id}: membership disagrees on {probe}"));
            }
        }
        for class in strong_closure::all_subgroups(&g).unwrap() {
            let h = class.representative;
            let h_elems = h.canonical_key().unwrap();
            let normalizer = ops::normalizer(&g, &h).unwrap();
            if normalizer.canonical_key().unwrap() != common::brute_normalizer(&brute, h_elems) {
                failures.push(format!("{id}: normalizer mismatch at |H| = {}", h.order()));
            }
            let centralizer = ops::centralizer(&g, &h).unwrap();
            if centralizer.canonical_key().unwrap() != common::brute_centralizer(&brute, h_elems) {
                failures.push(format!("{id}: centralizer mismatch at |H| = {}", h.order()));
            }
            let closure = ops::normal_closure(&g, &h).unwrap();
            if closure.canonical_key().unwrap()
                != common::brute_normal_closure(g.degree(), &brute, h_elems)
            {
                failures.push(format!("{id}: normal closure mismatch at |H| = {}", h.order()));
            }
        }
    }
    report("criterion 7 (engine oracle equivalence)", &failures);
}

/// Criterion 8: identical campaign configs produce identical reports up to
/// runtime_ms, for any worker count.
#[test]
fn criterion_8_campaign_determinism() {
    let mut failures = Vec::new();
    let config = CampaignConfig {
        max_order: 100,
        include_distinguished: false,
        checks: vec!["T1".into(), "T2".into(), "L22".into(), "EQV".into(), "L211".into()],
        ..CampaignConfig::default()
    };
    let runs: Vec<String> = [1usize, 2, 4]
        .iter()
        .map(|&jobs| {
            let r = run_campaign(&config, jobs).unwrap().with_zeroed_runtimes();
            serde_json::to_string_pretty(&r).unwrap()
        })
        .collect();
    if runs[0] != runs[1] || runs[1] != runs[2] {
        failures.push("reports differ across --jobs values".into());
    }
    report("criterion 8 (campaign determinism)", &failures);
}
