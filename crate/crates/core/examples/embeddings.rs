//! Enumerates the planar embeddings of the red+gray subgraph of the base
//! graph up to reflection and weight-respecting automorphism: exactly two
//! classes, matching the two drawings the case analysis branches on.
//!
//! Run with: cargo run --release --example embeddings

use crosscrit::planarity::suppress_degree_two;
use crosscrit::{build_g0, enumerate_small_embeddings};

fn main() {
    let g0 = build_g0();
    println!(
        "red+gray subgraph: {} vertices, {} bundles",
        g0.vertex_count(),
        g0.bundle_count()
    );
    let reduced = suppress_degree_two(&g0);
    println!(
        "reduced (degree-2 suppressed): {} vertices, {} bundles",
        reduced.vertex_count(),
        reduced.bundle_count()
    );
    let classes = enumerate_small_embeddings(&g0, 100_000_000).unwrap();
    println!("embedding classes: {}", classes.len());
    for (i, embedding) in classes.iter().enumerate() {
        println!("\nclass {}: {} faces", i + 1, embedding.face_count());
        for (v, nbrs) in &embedding.rotation {
            let label = reduced.label(*v).unwrap_or("?");
            let names: Vec<&str> = nbrs
                .iter()
                .map(|w| reduced.label(*w).unwrap_or("?"))
                .collect();
            println!("  {label}: {names:?}");
        }
    }
}
