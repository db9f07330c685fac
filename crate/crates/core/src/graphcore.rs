//! Weighted multigraph representation and the generic operations every other
//! module builds on: edge deletion, contraction, subdivision to a simple
//! graph, the zip product and weighted degree profiles.
//!
//! Parallel edges between the same vertex pair are always merged into one
//! weighted bundle on construction, so the bundle graph is simple; a bundle of
//! weight `w` stands for `w` parallel edges. Self-loops are rejected (and
//! silently dropped when a contraction would create one).

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("no such vertex: {0:?}")]
    VertexNotFound(VertexId),
    #[error("no such edge: {0:?}")]
    NotFound(EdgeId),
    #[error("self-loops are not allowed ({0:?})")]
    SelfLoop(VertexId),
    #[error("edge weights must be at least 1")]
    ZeroWeight,
    #[error("invalid anchor for this operation: {0}")]
    InvalidAnchor(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

/// Edge classes of the base construction. Colors are metadata only; no
/// structural constraint depends on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
    Green,
    Gray,
    #[serde(rename = "none")]
    Uncolored,
}

impl EdgeColor {
    pub fn dot_color(self) -> &'static str {
        match self {
            EdgeColor::Red => "red",
            EdgeColor::Blue => "blue",
            EdgeColor::Green => "green",
            EdgeColor::Gray => "gray",
            EdgeColor::Uncolored => "black",
        }
    }
}

/// A bundle of `weight` parallel edges between `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBundle {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub weight: u32,
    pub color: EdgeColor,
}

impl EdgeBundle {
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn other_end(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_incident(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// Unordered endpoint pair in canonical order.
    pub fn key(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// Map from weighted degree to the number of vertices of that degree.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeProfile(pub BTreeMap<u32, u32>);

impl DegreeProfile {
    pub fn count_at(&self, degree: u32) -> u32 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_vertices(&self) -> u32 {
        self.0.values().sum()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedMultigraph {
    vertices: BTreeMap<VertexId, Option<String>>,
    edges: BTreeMap<EdgeId, EdgeBundle>,
    /// Canonical endpoint pair -> bundle, kept to enforce the merge invariant.
    by_pair: BTreeMap<(VertexId, VertexId), EdgeId>,
    next_vertex: u32,
    next_edge: u32,
}

impl WeightedMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<Option<String>>) -> VertexId {
        let id = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.vertices.insert(id, label.into());
        id
    }

    pub fn add_labeled(&mut self, label: &str) -> VertexId {
        self.add_vertex(Some(label.to_string()))
    }

    /// Inserts a bundle, merging into an existing parallel bundle if one is
    /// present (weights add, the existing bundle keeps its id and color).
    pub fn add_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        weight: u32,
        color: EdgeColor,
    ) -> Result<EdgeId, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if weight == 0 {
            return Err(GraphError::ZeroWeight);
        }
        if !self.vertices.contains_key(&u) {
            return Err(GraphError::VertexNotFound(u));
        }
        if !self.vertices.contains_key(&v) {
            return Err(GraphError::VertexNotFound(v));
        }
        let key = if u <= v { (u, v) } else { (v, u) };
        if let Some(&id) = self.by_pair.get(&key) {
            self.edges.get_mut(&id).unwrap().weight += weight;
            return Ok(id);
        }
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(
            id,
            EdgeBundle {
                id,
                u,
                v,
                weight,
                color,
            },
        );
        self.by_pair.insert(key, id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn bundle_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> u32 {
        self.edges.values().map(|e| e.weight).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn bundles(&self) -> impl Iterator<Item = &EdgeBundle> {
        self.edges.values()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.vertices.get(&v).and_then(|l| l.as_deref())
    }

    pub fn set_label(&mut self, v: VertexId, label: &str) {
        if let Some(slot) = self.vertices.get_mut(&v) {
            *slot = Some(label.to_string());
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices
            .iter()
            .find(|(_, l)| l.as_deref() == Some(label))
            .map(|(&v, _)| v)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn bundle(&self, e: EdgeId) -> Result<&EdgeBundle, GraphError> {
        self.edges.get(&e).ok_or(GraphError::NotFound(e))
    }

    pub fn bundle_between(&self, u: VertexId, v: VertexId) -> Option<&EdgeBundle> {
        let key = if u <= v { (u, v) } else { (v, u) };
        self.by_pair.get(&key).map(|id| &self.edges[id])
    }

    pub fn incident_bundles(&self, v: VertexId) -> Vec<&EdgeBundle> {
        self.edges.values().filter(|e| e.is_incident(v)).collect()
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.edges
            .values()
            .filter(|e| e.is_incident(v))
            .map(|e| e.other_end(v))
            .collect()
    }

    pub fn weighted_degree(&self, v: VertexId) -> u32 {
        self.edges
            .values()
            .filter(|e| e.is_incident(v))
            .map(|e| e.weight)
            .sum()
    }

    /// Replaces the weight of an existing bundle. `new_weight` must be >= 1;
    /// dropping a bundle entirely goes through [`delete_edge`].
    pub fn set_weight(&mut self, e: EdgeId, new_weight: u32) -> Result<(), GraphError> {
        if new_weight == 0 {
            return Err(GraphError::ZeroWeight);
        }
        match self.edges.get_mut(&e) {
            Some(b) => {
                b.weight = new_weight;
                Ok(())
            }
            None => Err(GraphError::NotFound(e)),
        }
    }

    /// Removes the whole bundle `e`; vertices are unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Result<WeightedMultigraph, GraphError> {
        let bundle = self.bundle(e)?;
        let mut out = self.clone();
        out.by_pair.remove(&bundle.key());
        out.edges.remove(&e);
        Ok(out)
    }

    /// Contracts bundle `e`: its endpoints merge into one vertex (the
    /// smaller id survives), parallel bundles arising from the merge are
    /// combined with summed weights and self-loops are discarded.
    pub fn contract_edge(&self, e: EdgeId) -> Result<WeightedMultigraph, GraphError> {
        let bundle = self.bundle(e)?;
        let (keep, gone) = {
            let (u, v) = bundle.key();
            (u, v)
        };
        let mut out = WeightedMultigraph::new();
        out.next_vertex = self.next_vertex;
        out.next_edge = self.next_edge;
        for (&v, label) in &self.vertices {
            if v != gone {
                out.vertices.insert(v, label.clone());
            }
        }
        for b in self.edges.values() {
            if b.id == e {
                continue;
            }
            let u = if b.u == gone { keep } else { b.u };
            let v = if b.v == gone { keep } else { b.v };
            if u == v {
                // loop created by the contraction: dropped
                continue;
            }
            let key = if u <= v { (u, v) } else { (v, u) };
            if let Some(&existing) = out.by_pair.get(&key) {
                out.edges.get_mut(&existing).unwrap().weight += b.weight;
            } else {
                out.edges.insert(
                    b.id,
                    EdgeBundle {
                        id: b.id,
                        u,
                        v,
                        weight: b.weight,
                        color: b.color,
                    },
                );
                out.by_pair.insert(key, b.id);
            }
        }
        Ok(out)
    }

    /// Expands every bundle of weight `w` into `w` parallel unit edges and
    /// subdivides each parallel edge beyond the first once, producing a
    /// simple graph with the same crossing number.
    pub fn subdivide_to_simple(&self) -> WeightedMultigraph {
        let mut out = WeightedMultigraph::new();
        let mut map = BTreeMap::new();
        for (&v, label) in &self.vertices {
            map.insert(v, out.add_vertex(label.clone()));
        }
        for b in self.edges.values() {
            let u = map[&b.u];
            let v = map[&b.v];
            out.add_edge(u, v, 1, b.color).unwrap();
            for _ in 1..b.weight {
                let mid = out.add_vertex(None);
                out.add_edge(u, mid, 1, b.color).unwrap();
                out.add_edge(mid, v, 1, b.color).unwrap();
            }
        }
        out
    }

    /// Weighted degree counts over all vertices.
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut profile = BTreeMap::new();
        for v in self.vertices.keys() {
            *profile.entry(self.weighted_degree(*v)).or_insert(0) += 1;
        }
        DegreeProfile(profile)
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.keys().next() else {
            return true;
        };
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

/// Glues `g1` and `g2` at two degree-3 vertices: both anchors are deleted and
/// the three stub pairs given by `pairing` are joined by unit edges.
///
/// Each anchor must have weighted degree 3 realized by three unit bundles and
/// `pairing` must match the stubs of `v1` bijectively to the stubs of `v2`.
pub fn zip_product(
    g1: &WeightedMultigraph,
    v1: VertexId,
    g2: &WeightedMultigraph,
    v2: VertexId,
    pairing: &[(EdgeId, EdgeId); 3],
) -> Result<WeightedMultigraph, GraphError> {
    let check_anchor = |g: &WeightedMultigraph, v: VertexId| -> Result<Vec<EdgeId>, GraphError> {
        if !g.contains_vertex(v) {
            return Err(GraphError::VertexNotFound(v));
        }
        let inc = g.incident_bundles(v);
        if inc.len() != 3 || inc.iter().any(|b| b.weight != 1) {
            return Err(GraphError::InvalidAnchor(format!(
                "zip anchor must have three unit bundles, found weighted degree {}",
                g.weighted_degree(v)
            )));
        }
        Ok(inc.iter().map(|b| b.id).collect())
    };
    let stubs1: BTreeSet<EdgeId> = check_anchor(g1, v1)?.into_iter().collect();
    let stubs2: BTreeSet<EdgeId> = check_anchor(g2, v2)?.into_iter().collect();
    let p1: BTreeSet<EdgeId> = pairing.iter().map(|&(a, _)| a).collect();
    let p2: BTreeSet<EdgeId> = pairing.iter().map(|&(_, b)| b).collect();
    if p1 != stubs1 || p2 != stubs2 {
        return Err(GraphError::InvalidAnchor(
            "pairing must be a bijection between the two stub sets".into(),
        ));
    }

    let mut out = WeightedMultigraph::new();
    let mut map1 = BTreeMap::new();
    for (&v, label) in &g1.vertices {
        if v != v1 {
            map1.insert(v, out.add_vertex(label.clone()));
        }
    }
    let mut map2 = BTreeMap::new();
    for (&v, label) in &g2.vertices {
        if v != v2 {
            map2.insert(v, out.add_vertex(label.clone()));
        }
    }
    for b in g1.edges.values() {
        if b.is_incident(v1) {
            continue;
        }
        out.add_edge(map1[&b.u], map1[&b.v], b.weight, b.color)?;
    }
    for b in g2.edges.values() {
        if b.is_incident(v2) {
            continue;
        }
        out.add_edge(map2[&b.u], map2[&b.v], b.weight, b.color)?;
    }
    for &(e1, e2) in pairing {
        let a = g1.bundle(e1)?.other_end(v1);
        let b = g2.bundle(e2)?.other_end(v2);
        out.add_edge(map1[&a], map2[&b], 1, EdgeColor::Uncolored)?;
    }
    Ok(out)
}

/// Backtracking isomorphism test respecting weights; with `use_colors` the
/// bundle colors must match as well. Intended for the small graphs of this
/// crate (pruned by degree/weight signatures).
pub fn are_isomorphic(
    a: &WeightedMultigraph,
    b: &WeightedMultigraph,
    use_colors: bool,
) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.bundle_count() != b.bundle_count()
        || a.total_weight() != b.total_weight()
    {
        return false;
    }

    type Sig = Vec<(u32, u32, u32)>;
    let signature = |g: &WeightedMultigraph, v: VertexId| -> Sig {
        let mut sig: Sig = g
            .incident_bundles(v)
            .iter()
            .map(|e| {
                (
                    e.weight,
                    if use_colors { e.color as u32 } else { 0 },
                    g.weighted_degree(e.other_end(v)),
                )
            })
            .collect();
        sig.sort_unstable();
        sig
    };

    let va: Vec<VertexId> = a.vertices().collect();
    let vb: Vec<VertexId> = b.vertices().collect();
    let sig_a: Vec<Sig> = va.iter().map(|&v| signature(a, v)).collect();
    let sig_b: Vec<Sig> = vb.iter().map(|&v| signature(b, v)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
    }

    // Order a's vertices most-constrained first.
    let mut order: Vec<usize> = (0..va.len()).collect();
    order.sort_by_key(|&i| {
        let count = sig_b.iter().filter(|s| **s == sig_a[i]).count();
        (count, i)
    });

    let index_b: BTreeMap<VertexId, usize> =
        vb.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    fn compatible(
        a: &WeightedMultigraph,
        b: &WeightedMultigraph,
        use_colors: bool,
        mapping: &BTreeMap<VertexId, VertexId>,
        cand_a: VertexId,
        cand_b: VertexId,
    ) -> bool {
        for (&ma, &mb) in mapping {
            let ea = a.bundle_between(cand_a, ma);
            let eb = b.bundle_between(cand_b, mb);
            match (ea, eb) {
                (None, None) => {}
                (Some(x), Some(y)) => {
                    if x.weight != y.weight || (use_colors && x.color != y.color) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }

    fn search(
        a: &WeightedMultigraph,
        b: &WeightedMultigraph,
        use_colors: bool,
        order: &[usize],
        va: &[VertexId],
        vb: &[VertexId],
        sig_a: &[Sig],
        sig_b: &[Sig],
        index_b: &BTreeMap<VertexId, usize>,
        pos: usize,
        mapping: &mut BTreeMap<VertexId, VertexId>,
        used: &mut BTreeSet<VertexId>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let i = order[pos];
        let cand_a = va[i];
        for &cand_b in vb {
            if used.contains(&cand_b) || sig_b[index_b[&cand_b]] != sig_a[i] {
                continue;
            }
            if !compatible(a, b, use_colors, mapping, cand_a, cand_b) {
                continue;
            }
            mapping.insert(cand_a, cand_b);
            used.insert(cand_b);
            if search(
                a, b, use_colors, order, va, vb, sig_a, sig_b, index_b, pos + 1, mapping, used,
            ) {
                return true;
            }
            mapping.remove(&cand_a);
            used.remove(&cand_b);
        }
        false
    }

    let mut mapping = BTreeMap::new();
    let mut used = BTreeSet::new();
    search(
        a, b, use_colors, &order, &va, &vb, &sig_a, &sig_b, &index_b, 0, &mut mapping, &mut used,
    )
}

// ---------------------------------------------------------------------------
// Serialization: JSON graph schema, DOT export, expanded edge list.
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct JsonVertex {
    id: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonEdge {
    id: u32,
    u: u32,
    v: u32,
    weight: u32,
    color: EdgeColor,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

impl WeightedMultigraph {
    pub fn to_json_value(&self) -> serde_json::Value {
        let g = JsonGraph {
            vertices: self
                .vertices
                .iter()
                .map(|(&v, label)| JsonVertex {
                    id: v.0,
                    label: label.clone(),
                })
                .collect(),
            edges: self
                .edges
                .values()
                .map(|e| JsonEdge {
                    id: e.id.0,
                    u: e.u.0,
                    v: e.v.0,
                    weight: e.weight,
                    color: e.color,
                })
                .collect(),
        };
        serde_json::to_value(g).expect("graph serialization cannot fail")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serialization")
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, GraphError> {
        let parsed: JsonGraph = serde_json::from_value(value.clone())
            .map_err(|e| GraphError::InvalidParams(format!("bad graph json: {e}")))?;
        let mut g = WeightedMultigraph::new();
        for v in &parsed.vertices {
            let id = VertexId(v.id);
            if g.vertices.contains_key(&id) {
                return Err(GraphError::InvalidParams(format!(
                    "duplicate vertex id {}",
                    v.id
                )));
            }
            g.vertices.insert(id, v.label.clone());
            g.next_vertex = g.next_vertex.max(v.id + 1);
        }
        for e in &parsed.edges {
            let (u, v) = (VertexId(e.u), VertexId(e.v));
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if e.weight == 0 {
                return Err(GraphError::ZeroWeight);
            }
            if !g.vertices.contains_key(&u) {
                return Err(GraphError::VertexNotFound(u));
            }
            if !g.vertices.contains_key(&v) {
                return Err(GraphError::VertexNotFound(v));
            }
            let key = if u <= v { (u, v) } else { (v, u) };
            if g.by_pair.contains_key(&key) {
                // merge per the bundle invariant
                let id = g.by_pair[&key];
                g.edges.get_mut(&id).unwrap().weight += e.weight;
            } else {
                let id = EdgeId(e.id);
                if g.edges.contains_key(&id) {
                    return Err(GraphError::InvalidParams(format!(
                        "duplicate edge id {}",
                        e.id
                    )));
                }
                g.edges.insert(
                    id,
                    EdgeBundle {
                        id,
                        u,
                        v,
                        weight: e.weight,
                        color: e.color,
                    },
                );
                g.by_pair.insert(key, id);
                g.next_edge = g.next_edge.max(e.id + 1);
            }
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| GraphError::InvalidParams(format!("bad json: {e}")))?;
        Self::from_json_value(&value)
    }

    /// DOT rendering; weight becomes the edge label, color the edge color.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for (&v, label) in &self.vertices {
            match label {
                Some(l) => out.push_str(&format!("  n{} [label=\"{}\"];\n", v.0, l)),
                None => out.push_str(&format!("  n{};\n", v.0)),
            }
        }
        for e in self.edges.values() {
            out.push_str(&format!(
                "  n{} -- n{} [label=\"{}\", color={}];\n",
                e.u.0,
                e.v.0,
                e.weight,
                e.color.dot_color()
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Plain edge list with weights expanded to parallel copies.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in self.edges.values() {
            for _ in 0..e.weight {
                out.push_str(&format!("{} {}\n", e.u.0, e.v.0));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> (WeightedMultigraph, [VertexId; 3]) {
        let mut g = WeightedMultigraph::new();
        let a = g.add_labeled("a");
        let b = g.add_labeled("b");
        let c = g.add_labeled("c");
        g.add_edge(a, b, 1, EdgeColor::Uncolored).unwrap();
        g.add_edge(b, c, 1, EdgeColor::Uncolored).unwrap();
        g.add_edge(a, c, 1, EdgeColor::Uncolored).unwrap();
        (g, [a, b, c])
    }

    #[test]
    fn parallel_bundles_merge_on_construction() {
        let mut g = WeightedMultigraph::new();
        let a = g.add_labeled("a");
        let b = g.add_labeled("b");
        let e1 = g.add_edge(a, b, 2, EdgeColor::Red).unwrap();
        let e2 = g.add_edge(b, a, 3, EdgeColor::Blue).unwrap();
        assert_eq!(e1, e2);
        assert_eq!(g.bundle_count(), 1);
        assert_eq!(g.bundle(e1).unwrap().weight, 5);
        assert_eq!(g.bundle(e1).unwrap().color, EdgeColor::Red);
    }

    #[test]
    fn self_loops_rejected() {
        let mut g = WeightedMultigraph::new();
        let a = g.add_labeled("a");
        assert_eq!(
            g.add_edge(a, a, 1, EdgeColor::Uncolored),
            Err(GraphError::SelfLoop(a))
        );
    }

    #[test]
    fn delete_then_readd_is_identity_up_to_ids() {
        let (g, [a, b, _]) = triangle();
        let e = g.bundle_between(a, b).unwrap().id;
        let mut reduced = g.delete_edge(e).unwrap();
        assert_eq!(reduced.bundle_count(), 2);
        reduced.add_edge(a, b, 1, EdgeColor::Uncolored).unwrap();
        assert!(are_isomorphic(&g, &reduced, false));
    }

    #[test]
    fn delete_missing_edge_is_not_found() {
        let (g, _) = triangle();
        assert_eq!(
            g.delete_edge(EdgeId(999)).unwrap_err(),
            GraphError::NotFound(EdgeId(999))
        );
    }

    #[test]
    fn contracting_triangle_edge_doubles_the_opposite_bundle() {
        let (g, [a, b, c]) = triangle();
        let e = g.bundle_between(a, b).unwrap().id;
        let h = g.contract_edge(e).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.bundle_count(), 1);
        let merged = h.bundle_between(a, c).unwrap();
        assert_eq!(merged.weight, 2);
        assert_eq!(g.vertex_count() - 1, h.vertex_count());
    }

    #[test]
    fn contraction_conserves_weight_minus_contracted() {
        let (g, [a, b, _]) = triangle();
        let e = g.bundle_between(a, b).unwrap().id;
        let w = g.bundle(e).unwrap().weight;
        let h = g.contract_edge(e).unwrap();
        assert_eq!(h.total_weight(), g.total_weight() - w);
        assert!(h.vertex_count() + h.bundle_count() <= g.vertex_count() + g.bundle_count());
    }

    #[test]
    fn subdivide_weight_three_bundle() {
        let mut g = WeightedMultigraph::new();
        let a = g.add_labeled("a");
        let b = g.add_labeled("b");
        g.add_edge(a, b, 3, EdgeColor::Uncolored).unwrap();
        let s = g.subdivide_to_simple();
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(s.bundle_count(), 5);
        assert!(s.bundles().all(|e| e.weight == 1));
        // weighted degree preserved at original vertices
        let profile = s.degree_profile();
        assert_eq!(profile.count_at(3), 2);
        assert_eq!(profile.count_at(2), 2);
    }

    #[test]
    fn subdivide_simple_graph_is_isomorphic() {
        let (g, _) = triangle();
        let s = g.subdivide_to_simple();
        assert!(are_isomorphic(&g, &s, false));
    }

    #[test]
    fn zip_of_two_k33_gives_ten_vertex_cubic_graph() {
        let g = crate::families::build_k33();
        let v1 = g.vertices().next().unwrap();
        let stubs1: Vec<EdgeId> = g.incident_bundles(v1).iter().map(|e| e.id).collect();
        let v2 = g.vertices().next().unwrap();
        let stubs2 = stubs1.clone();
        let pairing = [
            (stubs1[0], stubs2[0]),
            (stubs1[1], stubs2[1]),
            (stubs1[2], stubs2[2]),
        ];
        let z = zip_product(&g, v1, &g, v2, &pairing).unwrap();
        assert_eq!(z.vertex_count(), 10);
        let profile = z.degree_profile();
        assert_eq!(profile.count_at(3), 10);
    }

    #[test]
    fn zip_rejects_degree_four_anchor() {
        let mut g = WeightedMultigraph::new();
        let hub = g.add_labeled("hub");
        let mut stubs = Vec::new();
        for i in 0..4 {
            let v = g.add_labeled(&format!("s{i}"));
            stubs.push(g.add_edge(hub, v, 1, EdgeColor::Uncolored).unwrap());
        }
        let other = crate::families::build_k33();
        let v2 = other.vertices().next().unwrap();
        let s2: Vec<EdgeId> = other.incident_bundles(v2).iter().map(|e| e.id).collect();
        let pairing = [(stubs[0], s2[0]), (stubs[1], s2[1]), (stubs[2], s2[2])];
        let err = zip_product(&g, hub, &other, v2, &pairing).unwrap_err();
        assert!(matches!(err, GraphError::InvalidAnchor(_)));
    }

    #[test]
    fn json_round_trip() {
        let (g, _) = triangle();
        let back = WeightedMultigraph::from_json(&g.to_json()).unwrap();
        assert!(are_isomorphic(&g, &back, true));
        assert_eq!(g.to_json(), back.to_json());
    }

    #[test]
    fn edge_list_expands_weights() {
        let mut g = WeightedMultigraph::new();
        let a = g.add_labeled("a");
        let b = g.add_labeled("b");
        g.add_edge(a, b, 4, EdgeColor::Uncolored).unwrap();
        assert_eq!(g.to_edge_list().lines().count(), 4);
    }
}
