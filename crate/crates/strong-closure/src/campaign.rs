//! Verification campaigns: every enabled check against every catalog entry,
//! fanned out across worker threads, merged into a deterministic report.
//!
//! Determinism contract: two runs with the same config produce byte-identical
//! JSON reports apart from the runtime_ms fields, for any worker count.
//! Verdicts are sorted by (group_id, check_id, params) after the parallel
//! phase, and the worker count is deliberately not part of the serialized
//! config.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{all_instances, builtin_catalog, CatalogEntry};
use crate::checks::{
    run_group_check, run_instance_check, Bounds, CheckContext, CheckId, Verdict, Witness,
    GROUP_CHECKS, INSTANCE_CHECKS,
};
use crate::closure::{ClosureReading, HypothesisSpec, TheoremId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignConfig {
    /// Family entries above this order are dropped from the catalog.
    pub max_order: u64,
    /// Keep the distinguished large entries (SL2_17, PSL2_17) regardless of
    /// `max_order`.
    pub include_distinguished: bool,
    /// Check ids to run, e.g. ["T1", "L22", "EQV"].
    pub checks: Vec<String>,
    /// Additionally run T1 at |D| = 2 with the order-4 clause disabled.
    pub weakened: bool,
    /// "normalizer" or "ambient-sylow".
    pub reading: String,
    pub t4_candidate_cap: usize,
    pub bounds: Bounds,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            max_order: 400,
            include_distinguished: true,
            checks: vec!["all".into()],
            weakened: false,
            reading: "normalizer".into(),
            t4_candidate_cap: 50,
            bounds: Bounds::default(),
        }
    }
}

impl CampaignConfig {
    pub fn parsed_checks(&self) -> Result<Vec<CheckId>> {
        let mut out = Vec::new();
        for s in &self.checks {
            if s.eq_ignore_ascii_case("all") {
                out.extend_from_slice(GROUP_CHECKS);
                out.extend_from_slice(INSTANCE_CHECKS);
            } else {
                out.push(s.parse()?);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn closure_reading(&self) -> Result<ClosureReading> {
        match self.reading.as_str() {
            "normalizer" => Ok(ClosureReading::Normalizer),
            "ambient-sylow" => Ok(ClosureReading::AmbientSylow),
            other => Err(Error::Construction(format!(
                "unknown closure reading {other:?} (expected normalizer or ambient-sylow)"
            ))),
        }
    }

    fn context(&self) -> Result<CheckContext> {
        Ok(CheckContext {
            reading: self.closure_reading()?,
            include_order4_clause: true,
            t4_candidate_cap: self.t4_candidate_cap,
            bounds: self.bounds,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub order: u64,
    pub construction: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub checked: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub catalog: Vec<CatalogRecord>,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

impl CampaignReport {
    pub fn inconsistent_group_ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self
            .verdicts
            .iter()
            .filter(|v| v.is_inconsistent())
            .map(|v| v.group_id.clone())
            .collect();
        ids.sort();
        ids.dedup();
        ids
    }

    /// The report with runtime fields zeroed, for byte-level comparisons.
    pub fn with_zeroed_runtimes(&self) -> CampaignReport {
        let mut r = self.clone();
        for v in &mut r.verdicts {
            v.runtime_ms = 0;
        }
        r
    }
}

enum WorkItem {
    Entry(CatalogEntry),
    Instance(&'static crate::catalog::InstanceSpec),
}

/// Runs the campaign over the built-in catalog with `jobs` worker threads
/// (1 is fully supported and produces the identical report).
pub fn run_campaign(config: &CampaignConfig, jobs: usize) -> Result<CampaignReport> {
    let checks = config.parsed_checks()?;
    let ctx = config.context()?;
    let group_checks: Vec<CheckId> = checks
        .iter()
        .copied()
        .filter(|c| !c.is_instance_check())
        .collect();
    let instance_checks: Vec<CheckId> = checks
        .iter()
        .copied()
        .filter(|c| c.is_instance_check())
        .collect();

    let mut items: Vec<WorkItem> = builtin_catalog(config.max_order, config.include_distinguished)?
        .into_iter()
        .map(WorkItem::Entry)
        .collect();
    if !instance_checks.is_empty() {
        for spec in crate::catalog::INSTANCES {
            items.push(WorkItem::Instance(spec));
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Construction(format!("worker pool: {e}")))?;

    let per_item: Vec<(CatalogRecord, Vec<Verdict>)> = pool.install(|| {
        items
            .par_iter()
            .map(|item| process_item(item, config, &ctx, &group_checks, &instance_checks))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut catalog = Vec::new();
    let mut verdicts = Vec::new();
    for (record, mut vs) in per_item {
        catalog.push(record);
        verdicts.append(&mut vs);
    }
    verdicts.sort_by(|a, b| {
        (&a.group_id, &a.check_id, &a.params).cmp(&(&b.group_id, &b.check_id, &b.params))
    });

    let summary = Summary {
        checked: verdicts.len(),
        consistent: verdicts.iter().filter(|v| v.consistent == Some(true)).count(),
        inconsistent: verdicts.iter().filter(|v| v.is_inconsistent()).count(),
        skipped: verdicts.iter().filter(|v| v.skipped).count(),
    };
    Ok(CampaignReport {
        config: config.clone(),
        catalog,
        verdicts,
        summary,
    })
}

fn process_item(
    item: &WorkItem,
    config: &CampaignConfig,
    ctx: &CheckContext,
    group_checks: &[CheckId],
    instance_checks: &[CheckId],
) -> Result<(CatalogRecord, Vec<Verdict>)> {
    match item {
        WorkItem::Entry(entry) => {
            let group = entry.group()?;
            let record = CatalogRecord {
                id: entry.id.clone(),
                order: group.order(),
                construction: entry.construction.clone(),
            };
            let mut verdicts = Vec::new();
            for &check in group_checks {
                match run_group_check(&entry.id, group, check, ctx) {
                    Ok(mut vs) => verdicts.append(&mut vs),
                    Err(e) => verdicts.push(error_verdict(&entry.id, check, e)),
                }
            }
            if config.weakened && group.order() <= ctx.bounds.theorem {
                let spec = HypothesisSpec::new(TheoremId::T1)
                    .with_target_order(2)
                    .without_order4_clause();
                match crate::checks::check_theorem(&entry.id, group, &spec, ctx) {
                    Ok(v) => verdicts.push(v),
                    Err(e) => verdicts.push(error_verdict(&entry.id, CheckId::T1, e)),
                }
            }
            Ok((record, verdicts))
        }
        WorkItem::Instance(spec) => {
            let inst = crate::catalog::build_instance(spec)?;
            let record = CatalogRecord {
                id: spec.id.to_string(),
                order: inst.group().order(),
                construction: spec.construction(),
            };
            let mut verdicts = Vec::new();
            if inst.group().order() <= config.max_order {
                for &check in instance_checks {
                    match run_instance_check(&inst, check) {
                        Ok(mut vs) => verdicts.append(&mut vs),
                        Err(e) => verdicts.push(error_verdict(spec.id, check, e)),
                    }
                }
            }
            Ok((record, verdicts))
        }
    }
}

fn error_verdict(group_id: &str, check: CheckId, e: Error) -> Verdict {
    Verdict {
        group_id: group_id.to_string(),
        check_id: check.as_str().to_string(),
        params: String::new(),
        hypothesis_holds: None,
        conclusion_holds: None,
        consistent: None,
        skipped: true,
        witnesses: vec![Witness::Note {
            text: format!("check errored: {e}"),
        }],
        runtime_ms: 0,
    }
}

pub fn write_report(report: &CampaignReport, path: &Path) -> Result<()> {
    let mut json = serde_json::to_string_pretty(report)?;
    json.push('\n');
    std::fs::write(path, json)?;
    Ok(())
}

pub fn read_report(path: &Path) -> Result<CampaignReport> {
    let data = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&data)?)
}

/// Instance verdicts for one lemma id across the whole built-in instance
/// list; convenience for the lemma CLI and the acceptance suite.
pub fn run_all_instances(check: CheckId) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for inst in all_instances()? {
        out.extend(run_instance_check(&inst, check)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config(checks: &[&str]) -> CampaignConfig {
        CampaignConfig {
            max_order: 30,
            include_distinguished: false,
            checks: checks.iter().map(|s| s.to_string()).collect(),
            ..CampaignConfig::default()
        }
    }

    #[test]
    fn small_campaign_is_consistent() {
        let report = run_campaign(&small_config(&["T1", "L22"]), 1).unwrap();
        assert!(report.summary.checked > 0);
        assert_eq!(report.summary.inconsistent, 0);
        assert_eq!(
            report.summary.consistent + report.summary.skipped,
            report.summary.checked
        );
    }

    #[test]
    fn jobs_do_not_change_the_report() {
        let config = small_config(&["T1", "L26", "L29"]);
        let a = run_campaign(&config, 1).unwrap();
        let b = run_campaign(&config, 4).unwrap();
        let ja = serde_json::to_string(&a.with_zeroed_runtimes()).unwrap();
        let jb = serde_json::to_string(&b.with_zeroed_runtimes()).unwrap();
        assert_eq!(ja, jb);
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = run_campaign(&small_config(&["L22"]), 2).unwrap();
        let dir = std::env::temp_dir().join("strong-closure-test-report.json");
        write_report(&report, &dir).unwrap();
        let back = read_report(&dir).unwrap();
        assert_eq!(back.summary.checked, report.summary.checked);
        assert_eq!(back.verdicts.len(), report.verdicts.len());
        std::fs::remove_file(dir).ok();
    }

    #[test]
    fn trivial_catalog_yields_valid_empty_report() {
        let config = CampaignConfig {
            max_order: 1,
            include_distinguished: false,
            checks: vec!["EQV".into()],
            ..CampaignConfig::default()
        };
        let report = run_campaign(&config, 1).unwrap();
        assert_eq!(report.catalog.len(), 1); // just C1
        assert_eq!(report.summary.inconsistent, 0);
    }
}
