//! Runs the exact crossing-number solver over the calibration corpus:
//! the classical small graphs, the smallest belt member and a weighted
//! instance.
//!
//! Run with: cargo run --release --example exact_solver

use crosscrit::graphcore::{EdgeColor, WeightedMultigraph};
use crosscrit::solver::{exact_cr, SolverBudget};
use std::time::Instant;

fn complete(n: usize, weight: u32) -> WeightedMultigraph {
    let mut g = WeightedMultigraph::new();
    let vs: Vec<_> = (0..n).map(|i| g.add_labeled(&format!("v{i}"))).collect();
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(vs[i], vs[j], weight, EdgeColor::Uncolored).unwrap();
        }
    }
    g
}

fn petersen() -> WeightedMultigraph {
    let mut g = WeightedMultigraph::new();
    let vs: Vec<_> = (0..10).map(|i| g.add_labeled(&format!("p{i}"))).collect();
    for i in 0..5 {
        g.add_edge(vs[i], vs[(i + 1) % 5], 1, EdgeColor::Uncolored).unwrap();
        g.add_edge(vs[i], vs[i + 5], 1, EdgeColor::Uncolored).unwrap();
        g.add_edge(vs[i + 5], vs[5 + (i + 2) % 5], 1, EdgeColor::Uncolored).unwrap();
    }
    g
}

fn main() {
    let budget = SolverBudget::default();
    let cases: Vec<(&str, WeightedMultigraph)> = vec![
        ("K5", complete(5, 1)),
        ("K33", crosscrit::build_k33()),
        ("K6", complete(6, 1)),
        ("Petersen", petersen()),
        ("Kochol belt (4 tiles)", crosscrit::build_kochol(4).unwrap()),
        ("K5 with all weights 2", complete(5, 2)),
    ];
    for (name, graph) in cases {
        let started = Instant::now();
        let result = exact_cr(&graph, &budget);
        let witness_ok = result
            .witness
            .as_ref()
            .map(|w| w.is_certificate())
            .unwrap_or(false);
        println!(
            "{name:>22}: cr = {:?} ({:?}, {} nodes, witness certified: {witness_ok}, {:?})",
            result.exact_value(),
            result.status,
            result.nodes,
            started.elapsed()
        );
    }
}
