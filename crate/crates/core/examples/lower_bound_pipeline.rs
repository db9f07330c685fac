//! Runs the four executable stages of the lower-bound argument in order:
//! the two-embedding enumeration, the per-embedding case bounds, the
//! 20-row case table against its golden copy, and the path catalog.
//!
//! Run with: cargo run --release --example lower_bound_pipeline

use crosscrit::verify::verify_g13_lowerbound_pipeline;

fn main() {
    let report = verify_g13_lowerbound_pipeline(100_000_000);
    println!(
        "stage 1  embedding classes of the red+gray subgraph: {:?} (want 2)",
        report.embedding_classes
    );
    println!(
        "stage 2  case bounds: min stated total {}, exhaustive minima {} / {} (want >= 13)",
        report.lemma3.min_total(),
        report.lemma3.exhaustive_min_a,
        report.lemma3.exhaustive_min_b
    );
    println!(
        "stage 3  case table: golden match {}, min total {} (want 12)",
        report.table1_matches_golden, report.table1_min_total
    );
    println!(
        "stage 4  path catalog: valid {}, six disjoint {}, P1/P2 lengths {}/{}",
        report.path_catalog.all_paths_valid,
        report.path_catalog.six_disjoint,
        report.path_catalog.p1_len,
        report.path_catalog.p2_len
    );
    println!("note: {}", report.note);
    println!("pipeline: {}", if report.passes() { "PASS" } else { "FAIL" });
    if !report.passes() {
        std::process::exit(1);
    }
}
