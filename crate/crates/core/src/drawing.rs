//! Combinatorial drawings: per-edge ordered crossing lists over a weighted
//! multigraph. A drawing is accepted as a certificate exactly when its
//! planarization (each crossing replaced by a degree-4 dummy vertex splitting
//! both edges per the recorded orders) is planar, so certificates are
//! coordinate-free and machine-checkable.

use crate::families::FamilyMember;
use crate::graphcore::{EdgeColor, EdgeId, VertexId, WeightedMultigraph};
use crate::planarity;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DrawingError {
    #[error("crossing {0:?} references unknown edge {1:?}")]
    UnknownEdge(CrossId, EdgeId),
    #[error("crossing {0:?} is degenerate (both sides are the same bundle)")]
    Degenerate(CrossId),
    #[error("edge {0:?} order is inconsistent with the crossing list")]
    BadOrder(EdgeId),
    #[error("unsupported export format {0}")]
    UnsupportedFormat(String),
    #[error("malformed drawing json: {0}")]
    BadJson(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingPoint {
    pub id: CrossId,
    pub a: EdgeId,
    pub b: EdgeId,
}

impl CrossingPoint {
    pub fn involves(&self, e: EdgeId) -> bool {
        self.a == e || self.b == e
    }

    pub fn other(&self, e: EdgeId) -> EdgeId {
        if self.a == e {
            self.b
        } else {
            self.a
        }
    }
}

/// Violations of the good-drawing conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoodnessViolation {
    /// the same unordered pair of bundles crosses more than once
    DoubleCross(EdgeId, EdgeId),
    /// two bundles sharing an endpoint cross
    AdjacentCross(EdgeId, EdgeId),
}

#[derive(Debug, Clone)]
pub struct Drawing {
    pub graph: WeightedMultigraph,
    pub crossings: Vec<CrossingPoint>,
    /// for each edge, the crossing ids along it from its u end to its v end
    pub orders: BTreeMap<EdgeId, Vec<CrossId>>,
}

/// The planarized graph of a drawing plus the dummy vertex of each crossing.
#[derive(Debug, Clone)]
pub struct Planarization {
    pub graph: WeightedMultigraph,
    pub dummies: BTreeMap<CrossId, VertexId>,
}

impl Drawing {
    pub fn planar(graph: WeightedMultigraph) -> Self {
        Drawing {
            graph,
            crossings: Vec::new(),
            orders: BTreeMap::new(),
        }
    }

    /// Appends a crossing at the end of both edges' orders.
    pub fn push_crossing(&mut self, a: EdgeId, b: EdgeId) -> CrossId {
        let id = CrossId(self.crossings.len() as u32);
        self.crossings.push(CrossingPoint { id, a, b });
        self.orders.entry(a).or_default().push(id);
        self.orders.entry(b).or_default().push(id);
        id
    }

    pub fn order_of(&self, e: EdgeId) -> &[CrossId] {
        self.orders.get(&e).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Total weighted crossing count: a crossing of bundles with weights p
    /// and q contributes p*q. Independent of the per-edge orders.
    pub fn weighted_crossing_count(&self) -> u64 {
        self.crossings
            .iter()
            .map(|c| {
                let wa = self.graph.bundle(c.a).map(|e| e.weight).unwrap_or(0) as u64;
                let wb = self.graph.bundle(c.b).map(|e| e.weight).unwrap_or(0) as u64;
                wa * wb
            })
            .sum()
    }

    /// Good-drawing check: no pair of bundles crosses twice and no two
    /// adjacent bundles cross.
    pub fn is_good_drawing(&self) -> (bool, Vec<GoodnessViolation>) {
        let mut seen = BTreeMap::new();
        let mut violations = Vec::new();
        for c in &self.crossings {
            let key = if c.a <= c.b { (c.a, c.b) } else { (c.b, c.a) };
            if *seen.entry(key).and_modify(|n| *n += 1).or_insert(1u32) == 2 {
                violations.push(GoodnessViolation::DoubleCross(key.0, key.1));
            }
            if let (Ok(ea), Ok(eb)) = (self.graph.bundle(c.a), self.graph.bundle(c.b)) {
                let shared = ea.is_incident(eb.u) || ea.is_incident(eb.v);
                if shared {
                    violations.push(GoodnessViolation::AdjacentCross(c.a, c.b));
                }
            }
        }
        (violations.is_empty(), violations)
    }

    /// Structural validation: every crossing references two distinct existing
    /// bundles and appears exactly once in each of its edges' orders.
    pub fn validate(&self) -> Result<(), DrawingError> {
        let mut expected: BTreeMap<EdgeId, Vec<CrossId>> = BTreeMap::new();
        for c in &self.crossings {
            if c.a == c.b {
                return Err(DrawingError::Degenerate(c.id));
            }
            for e in [c.a, c.b] {
                if self.graph.bundle(e).is_err() {
                    return Err(DrawingError::UnknownEdge(c.id, e));
                }
                expected.entry(e).or_default().push(c.id);
            }
        }
        for (e, ids) in &expected {
            let order = self.order_of(*e);
            let mut sorted_order: Vec<CrossId> = order.to_vec();
            sorted_order.sort();
            let mut sorted_expected = ids.clone();
            sorted_expected.sort();
            if sorted_order != sorted_expected {
                return Err(DrawingError::BadOrder(*e));
            }
        }
        for e in self.orders.keys() {
            let listed = self.order_of(*e).len();
            let present = expected.get(e).map(Vec::len).unwrap_or(0);
            if listed != present {
                return Err(DrawingError::BadOrder(*e));
            }
        }
        Ok(())
    }

    /// Builds the planarization: each crossing becomes a degree-4 dummy
    /// vertex splitting both of its edges per the recorded orders.
    pub fn planarize(&self) -> Result<Planarization, DrawingError> {
        self.validate()?;
        let mut graph = WeightedMultigraph::new();
        let mut vmap = BTreeMap::new();
        for v in self.graph.vertices() {
            vmap.insert(
                v,
                graph.add_vertex(self.graph.label(v).map(str::to_string)),
            );
        }
        let mut dummies = BTreeMap::new();
        for c in &self.crossings {
            dummies.insert(c.id, graph.add_vertex(Some(format!("x{}", c.id.0))));
        }
        for bundle in self.graph.bundles() {
            let chain = self.order_of(bundle.id);
            let mut prev = vmap[&bundle.u];
            for cid in chain {
                let d = dummies[cid];
                graph.add_edge(prev, d, bundle.weight, bundle.color).expect("segment");
                prev = d;
            }
            graph
                .add_edge(prev, vmap[&bundle.v], bundle.weight, bundle.color)
                .expect("segment");
        }
        Ok(Planarization { graph, dummies })
    }

    /// Realizability: the planarization must be planar. A drawing certifies
    /// an upper bound on the crossing number only when this accepts.
    pub fn realize(&self) -> Result<(Planarization, bool), DrawingError> {
        let planarization = self.planarize()?;
        let ok = planarity::is_planar(&planarization.graph);
        Ok((planarization, ok))
    }

    /// A certificate is a structurally valid, good, realizable drawing.
    pub fn is_certificate(&self) -> bool {
        if self.validate().is_err() {
            return false;
        }
        let (good, _) = self.is_good_drawing();
        good && matches!(self.realize(), Ok((_, true)))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let orders: BTreeMap<String, Vec<u32>> = self
            .orders
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(e, v)| (e.0.to_string(), v.iter().map(|c| c.0).collect()))
            .collect();
        serde_json::json!({
            "graph": self.graph.to_json_value(),
            "crossings": self
                .crossings
                .iter()
                .map(|c| serde_json::json!({"id": c.id.0, "a": c.a.0, "b": c.b.0}))
                .collect::<Vec<_>>(),
            "orders": orders,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serialization")
    }

    pub fn from_json(text: &str) -> Result<Self, DrawingError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| DrawingError::BadJson(e.to_string()))?;
        Self::from_json_value(&value)
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, DrawingError> {
        let graph = WeightedMultigraph::from_json_value(
            value
                .get("graph")
                .ok_or_else(|| DrawingError::BadJson("missing graph".into()))?,
        )
        .map_err(|e| DrawingError::BadJson(e.to_string()))?;
        let mut crossings = Vec::new();
        for c in value
            .get("crossings")
            .and_then(|c| c.as_array())
            .ok_or_else(|| DrawingError::BadJson("missing crossings".into()))?
        {
            let get = |k: &str| -> Result<u32, DrawingError> {
                c.get(k)
                    .and_then(|x| x.as_u64())
                    .map(|x| x as u32)
                    .ok_or_else(|| DrawingError::BadJson(format!("crossing missing {k}")))
            };
            crossings.push(CrossingPoint {
                id: CrossId(get("id")?),
                a: EdgeId(get("a")?),
                b: EdgeId(get("b")?),
            });
        }
        let mut orders = BTreeMap::new();
        if let Some(map) = value.get("orders").and_then(|o| o.as_object()) {
            for (k, v) in map {
                let edge = EdgeId(
                    k.parse::<u32>()
                        .map_err(|_| DrawingError::BadJson(format!("bad edge id {k}")))?,
                );
                let ids = v
                    .as_array()
                    .ok_or_else(|| DrawingError::BadJson("order must be a list".into()))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|x| CrossId(x as u32))
                            .ok_or_else(|| DrawingError::BadJson("bad crossing id".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                orders.insert(edge, ids);
            }
        }
        let drawing = Drawing {
            graph,
            crossings,
            orders,
        };
        drawing.validate()?;
        Ok(drawing)
    }

    /// Exports the drawing; `dot` renders the planarization with the dummy
    /// crossing vertices flagged, `json` the crossing list and orders.
    pub fn export(&self, format: &str) -> Result<Vec<u8>, DrawingError> {
        match format {
            "json" => Ok(self.to_json().into_bytes()),
            "dot" => {
                let planarization = self.planarize()?;
                let mut out = String::from("graph drawing {\n");
                let dummy_ids: std::collections::BTreeSet<VertexId> =
                    planarization.dummies.values().copied().collect();
                for v in planarization.graph.vertices() {
                    let label = planarization.graph.label(v).unwrap_or("");
                    if dummy_ids.contains(&v) {
                        out.push_str(&format!(
                            "  n{} [label=\"{}\", shape=point, crossing=true];\n",
                            v.0, label
                        ));
                    } else {
                        out.push_str(&format!("  n{} [label=\"{}\"];\n", v.0, label));
                    }
                }
                for e in planarization.graph.bundles() {
                    out.push_str(&format!(
                        "  n{} -- n{} [label=\"{}\", color={}];\n",
                        e.u.0,
                        e.v.0,
                        e.weight,
                        e.color.dot_color()
                    ));
                }
                out.push_str("}\n");
                Ok(out.into_bytes())
            }
            other => Err(DrawingError::UnsupportedFormat(other.to_string())),
        }
    }
}

// ---------------------------------------------------------------------------
// Canonical and witness drawings of family members.
// ---------------------------------------------------------------------------

/// The canonical drawing of a family member: the four blue bundles run below
/// the red path and cross pairwise, everything else is crossing-free. Along
/// each blue bundle (from its u-side end) the crossings appear in the fixed
/// order u4v1, u3v2, u2v3, u1v4 of the partners.
pub fn canonical_family_drawing(member: &FamilyMember) -> Drawing {
    canonical_on_graph(member, member.graph.clone(), None)
}

/// Canonical drawing restricted to `graph` (the member graph, possibly with
/// one bundle deleted or decremented); `skip` drops all crossings on that
/// bundle.
fn canonical_on_graph(
    member: &FamilyMember,
    graph: WeightedMultigraph,
    skip: Option<EdgeId>,
) -> Drawing {
    let mut drawing = Drawing::planar(graph);
    let mut cross = BTreeMap::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let (a, b) = (member.blues[i], member.blues[j]);
            if skip == Some(a) || skip == Some(b) {
                continue;
            }
            let id = CrossId(drawing.crossings.len() as u32);
            drawing.crossings.push(CrossingPoint { id, a, b });
            cross.insert((i, j), id);
        }
    }
    for i in 0..4 {
        if skip == Some(member.blues[i]) {
            continue;
        }
        let mut order = Vec::new();
        for j in 0..4 {
            if j == i {
                continue;
            }
            let key = if i < j { (i, j) } else { (j, i) };
            if let Some(&id) = cross.get(&key) {
                order.push(id);
            }
        }
        drawing.orders.insert(member.blues[i], order);
    }
    drawing
}

/// How a bundle is weakened for a criticality check: unit bundles are
/// removed, heavier bundles lose one parallel edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeletionKind {
    Removed,
    Decremented,
}

/// The member graph with one parallel edge of `target` deleted.
pub fn apply_deletion(
    member: &FamilyMember,
    target: EdgeId,
) -> (WeightedMultigraph, DeletionKind) {
    let weight = member.graph.bundle(target).expect("bundle exists").weight;
    if weight == 1 {
        (
            member.graph.delete_edge(target).expect("bundle exists"),
            DeletionKind::Removed,
        )
    } else {
        let mut g = member.graph.clone();
        g.set_weight(target, weight - 1).expect("bundle exists");
        (g, DeletionKind::Decremented)
    }
}

/// Candidate witness drawings of the member with one parallel edge of
/// `deleted` removed. Every candidate is built from one of the template
/// shapes (canonical-minus for blue bundles, the wedge-dive shape for spine
/// and wedge-interior bundles, single-blue over-the-top reroutes near the
/// ends); the caller keeps whichever candidate verifies as a certificate
/// below the target. Returns an empty list for bundles outside all template
/// classes.
pub fn witness_drawing_template(member: &FamilyMember, deleted: EdgeId) -> Vec<Drawing> {
    let Ok(bundle) = member.graph.bundle(deleted) else {
        return Vec::new();
    };
    let color = bundle.color;
    let (graph, kind) = apply_deletion(member, deleted);
    let mut candidates = Vec::new();

    if color == EdgeColor::Blue {
        let skip = if kind == DeletionKind::Removed {
            Some(deleted)
        } else {
            None
        };
        candidates.push(canonical_on_graph(member, graph.clone(), skip));
        return candidates;
    }

    // wedge-dive shapes: one unit wedge edge crosses a spine bundle while the
    // sky edge of the same wedge collects one crossing per blue bundle
    candidates.extend(dive_candidates(member, &graph, deleted, kind));
    // over-the-top single-blue reroutes at the two ends
    candidates.extend(over_top_candidates(member, &graph, deleted, kind));
    candidates
}

fn dive_candidates(
    member: &FamilyMember,
    graph: &WeightedMultigraph,
    deleted: EdgeId,
    kind: DeletionKind,
) -> Vec<Drawing> {
    let mut out = Vec::new();
    let interior = member.interior_spine_bundles();
    let mut spine_reds = vec![member.reds[4]]; // u1 - z1
    spine_reds.extend(interior.iter().copied());
    spine_reds.push(member.reds[4 + member.spine.len()]); // zm - v1

    for (w_idx, wedge) in member.wedges.iter().enumerate() {
        // spine bundles this wedge can dive across: between its anchors when
        // it straddles a block boundary, else the bundles adjacent to its
        // block
        let mut fs = Vec::new();
        if wedge.e_anchor != wedge.f_anchor {
            fs.push(interior[wedge.e_anchor]);
        } else {
            let j = wedge.e_anchor;
            if j == 0 {
                fs.push(member.reds[4]);
            } else {
                fs.push(interior[j - 1]);
            }
            if j + 1 < member.spine.len() {
                fs.push(interior[j]);
            } else {
                fs.push(member.reds[4 + member.spine.len()]);
            }
        }
        for f in fs {
            let relevant = deleted == wedge.b || deleted == wedge.d || deleted == f;
            if !relevant {
                continue;
            }
            if deleted == f && kind == DeletionKind::Removed {
                continue; // a whole spine bundle never goes away here
            }
            let b_alive = !(deleted == wedge.b && kind == DeletionKind::Removed);
            let d_alive = !(deleted == wedge.d && kind == DeletionKind::Removed);
            for blue_order_reversed in [false, true] {
                let mut drawing = Drawing::planar(graph.clone());
                if b_alive {
                    drawing.push_crossing(wedge.b, f);
                }
                if d_alive {
                    let mut blues: Vec<EdgeId> = member.blues.to_vec();
                    if blue_order_reversed {
                        blues.reverse();
                    }
                    for blue in blues {
                        drawing.push_crossing(wedge.d, blue);
                    }
                }
                out.push(drawing);
            }
        }
        let _ = w_idx;
    }
    out
}

fn over_top_candidates(
    member: &FamilyMember,
    graph: &WeightedMultigraph,
    deleted: EdgeId,
    kind: DeletionKind,
) -> Vec<Drawing> {
    let mut out = Vec::new();
    let first = &member.wedges[0];
    let last = member.wedges.last().expect("at least two wedges");

    // exit routes through the faces at the u5 end; each route is the ordered
    // list of bundles the rerouted blue crosses on its way to the outer face
    let u_routes: Vec<Vec<EdgeId>> = vec![
        vec![member.greens[0], first.e, first.b, first.d],
        vec![member.greens[0], first.a, first.d],
        vec![member.greens[0], first.e, first.b, first.a],
    ];
    let v_routes: Vec<Vec<EdgeId>> = vec![
        vec![member.greens[1], last.f, last.b, last.d],
        vec![member.greens[1], last.c, last.d],
        vec![member.greens[1], last.f, last.b, last.c],
    ];

    let build = |route: &[EdgeId], u_side: bool| -> Option<Drawing> {
        let route: Vec<EdgeId> = route
            .iter()
            .copied()
            .filter(|&e| !(e == deleted && kind == DeletionKind::Removed))
            .collect();
        let mover_idx = if u_side { 3 } else { 0 };
        let mover = member.blues[mover_idx];
        let below: Vec<usize> = (0..4).filter(|&i| i != mover_idx).collect();
        let mut drawing = Drawing::planar(graph.clone());
        // pairwise crossings of the three blues staying below
        let mut cross = BTreeMap::new();
        for (ai, &i) in below.iter().enumerate() {
            for &j in below.iter().skip(ai + 1) {
                let id = drawing.push_crossing(member.blues[i], member.blues[j]);
                cross.insert((i, j), id);
            }
        }
        for &i in &below {
            let mut order = Vec::new();
            for &j in &below {
                if i == j {
                    continue;
                }
                let key = if i < j { (i, j) } else { (j, i) };
                order.push(cross[&key]);
            }
            drawing.orders.insert(member.blues[i], order);
        }
        // the mover crosses the route edges in sequence; from the mover's
        // u end the route is walked forward on the u side and backward on
        // the v side
        let mut ids = Vec::new();
        for &e in &route {
            let id = CrossId(drawing.crossings.len() as u32);
            drawing.crossings.push(CrossingPoint {
                id,
                a: mover,
                b: e,
            });
            drawing.orders.entry(e).or_default().push(id);
            ids.push(id);
        }
        if !u_side {
            ids.reverse();
        }
        drawing.orders.insert(mover, ids);
        Some(drawing)
    };

    let on_u_side = [first.a, first.b, first.d, first.e, member.greens[0]].contains(&deleted);
    let on_v_side = [last.b, last.c, last.d, last.f, member.greens[1]].contains(&deleted);
    if on_u_side {
        for route in &u_routes {
            out.extend(build(route, true));
        }
    }
    if on_v_side {
        for route in &v_routes {
            out.extend(build(route, false));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_g13_family, FamilyParams};
    use crate::graphcore::EdgeColor;

    fn member_11() -> FamilyMember {
        build_g13_family(&FamilyParams::new(vec![2, 2]).unwrap()).unwrap()
    }

    #[test]
    fn canonical_drawing_counts_thirteen() {
        let member = member_11();
        let drawing = canonical_family_drawing(&member);
        assert_eq!(drawing.weighted_crossing_count(), 13);
        assert_eq!(drawing.crossings.len(), 6);
        let (good, _) = drawing.is_good_drawing();
        assert!(good);
        let (_, planar) = drawing.realize().unwrap();
        assert!(planar, "canonical certificate must planarize");
    }

    #[test]
    fn canonical_drawing_general_params() {
        for doubled in [vec![1, 1, 2], vec![2, 1, 1, 2], vec![2, 2, 2, 2]] {
            let member = build_g13_family(&FamilyParams::new(doubled).unwrap()).unwrap();
            let drawing = canonical_family_drawing(&member);
            assert_eq!(drawing.weighted_crossing_count(), 13);
            assert!(drawing.is_certificate());
        }
    }

    #[test]
    fn count_is_order_independent() {
        let member = member_11();
        let mut drawing = canonical_family_drawing(&member);
        for order in drawing.orders.values_mut() {
            order.reverse();
        }
        assert_eq!(drawing.weighted_crossing_count(), 13);
    }

    #[test]
    fn empty_crossing_list_counts_zero() {
        let member = member_11();
        let drawing = Drawing::planar(member.graph.clone());
        assert_eq!(drawing.weighted_crossing_count(), 0);
    }

    #[test]
    fn single_crossing_of_two_weight2_bundles_counts_four() {
        let member = member_11();
        let mut drawing = Drawing::planar(member.graph.clone());
        // u4v1 and u1v4 both have weight 2 and share no endpoint
        drawing.push_crossing(member.blues[0], member.blues[3]);
        assert_eq!(drawing.weighted_crossing_count(), 4);
    }

    #[test]
    fn double_cross_detected() {
        let member = member_11();
        let mut drawing = Drawing::planar(member.graph.clone());
        drawing.push_crossing(member.blues[0], member.blues[3]);
        drawing.push_crossing(member.blues[3], member.blues[0]);
        let (good, violations) = drawing.is_good_drawing();
        assert!(!good);
        assert!(matches!(violations[0], GoodnessViolation::DoubleCross(_, _)));
    }

    #[test]
    fn adjacent_cross_detected() {
        let member = member_11();
        let g = &member.graph;
        // two gray bundles sharing u5
        let wedge = &member.wedges[0];
        let mut drawing = Drawing::planar(g.clone());
        drawing.push_crossing(wedge.a, wedge.d);
        let (good, violations) = drawing.is_good_drawing();
        assert!(!good);
        assert!(matches!(violations[0], GoodnessViolation::AdjacentCross(_, _)));
    }

    #[test]
    fn k5_zero_crossings_rejected_one_crossing_accepted() {
        let mut g = WeightedMultigraph::new();
        let vs: Vec<_> = (0..5).map(|i| g.add_labeled(&format!("k{i}"))).collect();
        for i in 0..5 {
            for j in i + 1..5 {
                g.add_edge(vs[i], vs[j], 1, EdgeColor::Uncolored).unwrap();
            }
        }
        let planar_claim = Drawing::planar(g.clone());
        let (_, ok) = planar_claim.realize().unwrap();
        assert!(!ok, "a zero-crossing drawing of K5 must be rejected");

        let e1 = g.bundle_between(vs[0], vs[1]).unwrap().id;
        let e2 = g.bundle_between(vs[2], vs[3]).unwrap().id;
        let mut one = Drawing::planar(g.clone());
        one.push_crossing(e1, e2);
        let (_, ok) = one.realize().unwrap();
        assert!(ok, "one independent crossing realizes K5");
    }

    #[test]
    fn blue_template_counts() {
        let member = member_11();
        // removing the unit blue u2v3 leaves the pairs among {2,2,1}
        let candidates = witness_drawing_template(&member, member.blues[2]);
        assert_eq!(candidates.len(), 1);
        let d = &candidates[0];
        assert_eq!(d.weighted_crossing_count(), 8);
        assert!(d.is_certificate());
        // decrementing a weight-2 blue keeps all six pairs at reduced weight
        let candidates = witness_drawing_template(&member, member.blues[0]);
        let d = &candidates[0];
        assert_eq!(d.weighted_crossing_count(), 9);
        assert!(d.is_certificate());
    }

    #[test]
    fn drawing_json_round_trip() {
        let member = member_11();
        let drawing = canonical_family_drawing(&member);
        let back = Drawing::from_json(&drawing.to_json()).unwrap();
        assert_eq!(back.weighted_crossing_count(), 13);
        assert_eq!(drawing.to_json(), back.to_json());
    }

    #[test]
    fn dot_export_has_dummy_vertices() {
        let member = member_11();
        let drawing = canonical_family_drawing(&member);
        let dot = String::from_utf8(drawing.export("dot").unwrap()).unwrap();
        assert_eq!(dot.matches("crossing=true").count(), 6);
        assert!(drawing.export("svg").is_err());
    }
}
