//! A small verification campaign: several checks over the catalog capped at
//! order 100, fanned out over two workers, written to a JSON report.
//!
//! ```bash
//! cargo run --example campaign_report
//! ```

use strong_closure::campaign::{run_campaign, write_report, CampaignConfig};
use strong_closure::Result;

fn main() -> Result<()> {
    let config = CampaignConfig {
        max_order: 100,
        include_distinguished: false,
        checks: vec!["T1".into(), "T3".into(), "L22".into(), "L26".into(), "EQV".into()],
        ..CampaignConfig::default()
    };
    let report = run_campaign(&config, 2)?;

    println!(
        "{} catalog entries, {} verdicts: {} consistent, {} inconsistent, {} skipped",
        report.catalog.len(),
        report.summary.checked,
        report.summary.consistent,
        report.summary.inconsistent,
        report.summary.skipped
    );
    for v in report.verdicts.iter().take(8) {
        println!(
            "  {:<8} {:<4} {:<24} consistent={:?}",
            v.group_id, v.check_id, v.params, v.consistent
        );
    }
    println!("  ...");

    let out = std::env::temp_dir().join("strong-closure-campaign.json");
    write_report(&report, &out)?;
    println!("report written to {}", out.display());
    Ok(())
}
