//! The degree-transforming operations: wedge shrink on the parameter tuple,
//! the degree-3 split on an interior wedge, the degree-(2b+a) spine split,
//! and the zip product with a bipartite copy.
//!
//! Run with: cargo run --example transforms

use crosscrit::graphcore::zip_product;
use crosscrit::{
    build_g13_family, build_k33, shrink_wedge, transform_degree3, transform_degree_split,
    FamilyParams,
};

fn main() {
    let params = FamilyParams::parse("1,2,1").unwrap();
    let out = shrink_wedge(&params, 2).unwrap();
    println!(
        "shrink wedge 2 of {params}: -> {} (outside stated range: {})",
        out.params, out.outside_stated_range
    );

    let member = build_g13_family(&FamilyParams::parse("1,1,1").unwrap()).unwrap();
    let wedge = &member.wedges[1];
    let t3 = member.spine[wedge.e_anchor];
    let (split3, s_prime) =
        transform_degree3(&member.graph, wedge.junction_left, wedge.w1, wedge.w4, t3, 1).unwrap();
    println!(
        "degree-3 split on an interior wedge: new vertex of degree {}, tip degree {} -> {}",
        split3.weighted_degree(s_prime),
        member.graph.weighted_degree(wedge.w1),
        split3.weighted_degree(wedge.w1)
    );

    let (t1, s, t2) = (member.spine[0], member.spine[1], member.spine[2]);
    for b in 3..=6 {
        let split = transform_degree_split(&member.graph, t1, s, t2, 7, 2, b).unwrap();
        println!(
            "spine split with b={b}: interior block degree {} -> {}",
            member.graph.weighted_degree(s),
            split.weighted_degree(s)
        );
    }

    // zip two bipartite copies at degree-3 anchors
    let a = build_k33();
    let b = build_k33();
    let v1 = a.vertices().next().unwrap();
    let v2 = b.vertices().next().unwrap();
    let s1: Vec<_> = a.incident_bundles(v1).iter().map(|e| e.id).collect();
    let s2: Vec<_> = b.incident_bundles(v2).iter().map(|e| e.id).collect();
    let zipped = zip_product(&a, v1, &b, v2, &[(s1[0], s2[0]), (s1[1], s2[1]), (s1[2], s2[2])]).unwrap();
    println!(
        "zip of two bipartite copies: {} vertices, profile {:?}",
        zipped.vertex_count(),
        zipped.degree_profile().0
    );
}
