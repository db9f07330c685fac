//! Builds the 17-vertex base graph and a few generalized family members,
//! prints their vital statistics and shows the JSON/DOT exporters.
//!
//! Run with: cargo run --example generate_family

use crosscrit::{build_g13, build_g13_family, build_kochol, FamilyParams};

fn main() {
    let g13 = build_g13();
    println!(
        "base graph: {} vertices, {} bundles, total weight {}",
        g13.vertex_count(),
        g13.bundle_count(),
        g13.total_weight()
    );
    println!("degree profile: {:?}", g13.degree_profile().0);

    for ks in ["1,1", "0.5,0.5,1", "1,0.5,0.5,1", "1,2,1"] {
        let params = FamilyParams::parse(ks).unwrap();
        let member = build_g13_family(&params).unwrap();
        println!(
            "member {params}: {} vertices (3k+m+9 = {}), {} bundles",
            member.graph.vertex_count(),
            3 * params.k() + params.m() as u32 + 9,
            member.graph.bundle_count()
        );
    }

    let kochol = build_kochol(4).unwrap();
    println!(
        "kochol belt (4 tiles): {} vertices, {} edges, profile {:?}",
        kochol.vertex_count(),
        kochol.bundle_count(),
        kochol.degree_profile().0
    );

    let member = build_g13_family(&FamilyParams::parse("1,1").unwrap()).unwrap();
    println!("\nJSON of the base member (first lines):");
    for line in member.graph.to_json().lines().take(6) {
        println!("  {line}");
    }
    println!("DOT (first lines):");
    for line in member.graph.to_dot().lines().take(4) {
        println!("  {line}");
    }
}
