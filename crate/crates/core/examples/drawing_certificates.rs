//! Drawing certificates end to end: the canonical 13-crossing drawing of a
//! family member, witness templates for a deleted bundle, and the
//! realizability check that separates certificates from wishful crossing
//! lists.
//!
//! Run with: cargo run --example drawing_certificates

use crosscrit::drawing::{witness_drawing_template, Drawing};
use crosscrit::{build_g13_family, canonical_family_drawing, FamilyParams};

fn main() {
    let params = FamilyParams::parse("1,1").unwrap();
    let member = build_g13_family(&params).unwrap();

    let canonical = canonical_family_drawing(&member);
    let (good, _) = canonical.is_good_drawing();
    let (_, planar) = canonical.realize().unwrap();
    println!(
        "canonical drawing: {} crossings, weighted count {}, good {}, realizable {}",
        canonical.crossings.len(),
        canonical.weighted_crossing_count(),
        good,
        planar
    );

    // a wishful claim: the base graph drawn with no crossings at all
    let wishful = Drawing::planar(member.graph.clone());
    let (_, ok) = wishful.realize().unwrap();
    println!("zero-crossing claim accepted: {ok} (the planarization is nonplanar)");

    // witness templates for deleting one parallel edge of a spine bundle
    let spine_bundle = member.interior_spine_bundles()[0];
    println!("\nwitness candidates for one deleted spine parallel:");
    for candidate in witness_drawing_template(&member, spine_bundle) {
        let certified = candidate.is_certificate();
        println!(
            "  count {} certified {certified}",
            candidate.weighted_crossing_count()
        );
    }

    let json = canonical.to_json();
    let back = Drawing::from_json(&json).unwrap();
    println!(
        "\nJSON round trip: {} bytes, counts match: {}",
        json.len(),
        back.weighted_crossing_count() == canonical.weighted_crossing_count()
    );
}
