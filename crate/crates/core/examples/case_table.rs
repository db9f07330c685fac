//! Reproduces the complete 20-row refined-crossing case table and diffs it
//! against the frozen golden copy.
//!
//! Run with: cargo run --example case_table

use crosscrit::proofcheck::{diff_against_golden, enumerate_table1, table1_text};

fn main() {
    let rows = enumerate_table1();
    print!("{}", table1_text(&rows));
    let min = rows.iter().map(|r| r.total).min().unwrap();
    println!("\nrows: {}, minimum total: {min}", rows.len());
    let problems = diff_against_golden(&rows);
    if problems.is_empty() {
        println!("golden copy: match");
    } else {
        println!("golden copy: MISMATCH");
        for p in problems {
            println!("  {p}");
        }
        std::process::exit(1);
    }
}
