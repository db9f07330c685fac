//! Full criticality run on a family member: the canonical upper certificate,
//! one witness drawing per bundle below the target, and the lower-bound
//! evidence, summarized per edge.
//!
//! Run with: cargo run --release --example verify_criticality [ks]

use crosscrit::solver::SolverBudget;
use crosscrit::verify::verify_criticality;
use crosscrit::FamilyParams;
use std::time::{Duration, Instant};

fn main() {
    let ks = std::env::args().nth(1).unwrap_or_else(|| "1,1".to_string());
    let params = FamilyParams::parse(&ks).expect("valid half-integer list");
    let budget = SolverBudget {
        restarts: 4000,
        time_limit: Duration::from_secs(120),
        ..Default::default()
    };
    let started = Instant::now();
    let report = verify_criticality(&params, 13, &budget).expect("valid parameters");
    println!(
        "params {params}: upper certificate {} (ok: {})",
        report.upper_certificate_count, report.upper_certificate_ok
    );
    for edge in &report.per_edge {
        println!(
            "  bundle {:>2} ({:?}, weight {}): {:?} via {:?} -> count {:?}",
            edge.edge, edge.color, edge.weight, edge.deletion, edge.method, edge.witness_count
        );
    }
    println!(
        "lower-bound evidence: table golden {}, min {}, case bounds {}, paths {}",
        report.lower_bound_evidence.table1_matches_golden,
        report.lower_bound_evidence.table1_min_total,
        report.lower_bound_evidence.lemma3_min_ok,
        report.lower_bound_evidence.path_catalog_ok
    );
    println!(
        "criticality verified at desk scale: {} ({:?})",
        report.criticality_verified_at_desk_scale,
        started.elapsed()
    );
    if !report.criticality_verified_at_desk_scale {
        std::process::exit(1);
    }
}
