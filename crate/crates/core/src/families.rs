//! Constructors for the crossing-critical graph families and their
//! degree-transforming operations: the 17-vertex base graph, the spine/wedge
//! generalizations over half-integer parameter tuples, the Kochol belt, the
//! local degree-3 and degree-(2b+a) splits, the wedge shrink and the full
//! schedule that realizes every degree from 3 up to a requested bound.

use crate::graphcore::{
    zip_product, EdgeColor, EdgeId, GraphError, VertexId, WeightedMultigraph,
};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Half-integer parameter tuple (k_1, ..., k_m), stored doubled so that all
/// arithmetic stays integral: `doubled[i] = 2 * k_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub doubled: Vec<u32>,
}

impl FamilyParams {
    pub fn new(doubled: Vec<u32>) -> Result<Self, GraphError> {
        let params = FamilyParams { doubled };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.doubled.is_empty() {
            return Err(GraphError::InvalidParams("empty parameter tuple".into()));
        }
        if self.doubled.iter().any(|&d| d == 0) {
            return Err(GraphError::InvalidParams(
                "every parameter must be a positive half-integer".into(),
            ));
        }
        if self.doubled.iter().sum::<u32>() % 2 != 0 {
            return Err(GraphError::InvalidParams(
                "the parameter sum k_1 + ... + k_m must be an integer".into(),
            ));
        }
        if self.k() < 2 {
            return Err(GraphError::InvalidParams(
                "the total k = k_1 + ... + k_m must be at least 2".into(),
            ));
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.doubled.len()
    }

    /// k = sum of the parameters (an integer by the validity invariant).
    pub fn k(&self) -> u32 {
        self.doubled.iter().sum::<u32>() / 2
    }

    /// Shape required for the criticality and lower-bound claims: m >= 3 with
    /// integral first and last entries of size at least 1.
    pub fn is_critical_shape(&self) -> bool {
        (self.m() >= 3 && self.doubled[0] >= 2 && self.doubled[self.m() - 1] >= 2)
            || self.doubled == [2, 2]
    }

    /// Parses a comma-separated list accepting halves as decimals, e.g.
    /// `1,0.5,0.5,1`.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut doubled = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let value: f64 = part
                .parse()
                .map_err(|_| GraphError::InvalidParams(format!("bad parameter `{part}`")))?;
            let twice = value * 2.0;
            if twice.fract() != 0.0 || twice < 1.0 {
                return Err(GraphError::InvalidParams(format!(
                    "parameter `{part}` is not a positive half-integer"
                )));
            }
            doubled.push(twice as u32);
        }
        FamilyParams::new(doubled)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .doubled
            .iter()
            .map(|&d| {
                if d % 2 == 0 {
                    format!("{}", d / 2)
                } else {
                    format!("{}/2", d)
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Identifies the i-th wedge of a family member, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeIndex(pub usize);

/// Role map of one wedge: the four gadget edges, the two spine attachments
/// and the junction vertices it shares with its neighbors.
#[derive(Debug, Clone)]
pub struct WedgeInfo {
    pub w1: VertexId,
    pub w4: VertexId,
    /// w2^i; equals u5 for the first wedge, otherwise w3^{i-1}.
    pub junction_left: VertexId,
    /// w3^i; equals v5 for the last wedge.
    pub junction_right: VertexId,
    /// junction_left - w1, weight 2
    pub a: EdgeId,
    /// w1 - w4, weight 1
    pub b: EdgeId,
    /// w4 - junction_right, weight 2
    pub c: EdgeId,
    /// junction_left - junction_right, weight 1 (the sky edge)
    pub d: EdgeId,
    /// x^i attachment, weight 1
    pub e: EdgeId,
    /// y^i attachment, weight 1
    pub f: EdgeId,
    /// spine block (0-based) that absorbed x^i
    pub e_anchor: usize,
    /// spine block (0-based) that absorbed y^i
    pub f_anchor: usize,
}

/// A generated family member together with the role map used by drawing
/// templates and the verification harness.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub params: FamilyParams,
    pub graph: WeightedMultigraph,
    /// u1..u5
    pub u_path: [VertexId; 5],
    /// v1..v5
    pub v_path: [VertexId; 5],
    /// z_1..z_m, the contracted spine blocks in order
    pub spine: Vec<VertexId>,
    /// blue bundles in the fixed order [u4v1, u3v2, u2v3, u1v4]
    pub blues: [EdgeId; 4],
    /// [u5-z1, zm-v5]
    pub greens: [EdgeId; 2],
    /// the red multipath u5u4, ..., u1z1, z1z2, ..., zmv1, ..., v4v5 in order
    pub reds: Vec<EdgeId>,
    pub wedges: Vec<WedgeInfo>,
}

impl FamilyMember {
    /// Red bundles strictly between z_1 and z_m (the contracted spine).
    pub fn interior_spine_bundles(&self) -> Vec<EdgeId> {
        (0..self.spine.len() - 1)
            .map(|j| {
                self.graph
                    .bundle_between(self.spine[j], self.spine[j + 1])
                    .expect("consecutive spine blocks are adjacent")
                    .id
            })
            .collect()
    }

    pub fn blue_weights(&self) -> [u32; 4] {
        [
            self.graph.bundle(self.blues[0]).unwrap().weight,
            self.graph.bundle(self.blues[1]).unwrap().weight,
            self.graph.bundle(self.blues[2]).unwrap().weight,
            self.graph.bundle(self.blues[3]).unwrap().weight,
        ]
    }
}

/// The 17-vertex base graph, transcribed edge by edge from its drawing with
/// the classical vertex names. Independent of the family machinery so the
/// two can be checked against each other.
pub fn build_g13() -> WeightedMultigraph {
    let mut g = WeightedMultigraph::new();
    let u1 = g.add_labeled("u1");
    let u2 = g.add_labeled("u2");
    let u3 = g.add_labeled("u3");
    let u4 = g.add_labeled("u4");
    let u5 = g.add_labeled("u5");
    let v1 = g.add_labeled("v1");
    let v2 = g.add_labeled("v2");
    let v3 = g.add_labeled("v3");
    let v4 = g.add_labeled("v4");
    let v5 = g.add_labeled("v5");
    let x1 = g.add_labeled("x1");
    let x2 = g.add_labeled("x2");
    let w1_1 = g.add_labeled("w1_1");
    let w4_1 = g.add_labeled("w4_1");
    let w2_2 = g.add_labeled("w2_2");
    let w1_2 = g.add_labeled("w1_2");
    let w4_2 = g.add_labeled("w4_2");

    let red = |g: &mut WeightedMultigraph, a, b, w| {
        g.add_edge(a, b, w, EdgeColor::Red).unwrap();
    };
    red(&mut g, u5, u4, 4);
    red(&mut g, u4, u3, 3);
    red(&mut g, u3, u2, 4);
    red(&mut g, u2, u1, 5);
    red(&mut g, u1, x1, 7);
    red(&mut g, x1, x2, 7);
    red(&mut g, x2, v1, 7);
    red(&mut g, v1, v2, 5);
    red(&mut g, v2, v3, 4);
    red(&mut g, v3, v4, 3);
    red(&mut g, v4, v5, 4);

    g.add_edge(u4, v1, 2, EdgeColor::Blue).unwrap();
    g.add_edge(u3, v2, 1, EdgeColor::Blue).unwrap();
    g.add_edge(u2, v3, 1, EdgeColor::Blue).unwrap();
    g.add_edge(u1, v4, 2, EdgeColor::Blue).unwrap();

    g.add_edge(u5, x1, 1, EdgeColor::Green).unwrap();
    g.add_edge(x2, v5, 1, EdgeColor::Green).unwrap();

    let gray = |g: &mut WeightedMultigraph, a, b, w| {
        g.add_edge(a, b, w, EdgeColor::Gray).unwrap();
    };
    gray(&mut g, u5, w1_1, 2);
    gray(&mut g, w1_1, w4_1, 1);
    gray(&mut g, w4_1, w2_2, 2);
    gray(&mut g, w2_2, u5, 1);
    gray(&mut g, w2_2, w1_2, 2);
    gray(&mut g, w1_2, w4_2, 1);
    gray(&mut g, w4_2, v5, 2);
    gray(&mut g, v5, w2_2, 1);
    gray(&mut g, w1_1, x1, 1);
    gray(&mut g, x1, w4_1, 1);
    gray(&mut g, w1_2, x2, 1);
    gray(&mut g, x2, w4_2, 1);

    g
}

/// The red+gray subgraph of the base graph, the piece whose two planar
/// embeddings drive the case analysis.
pub fn build_g0() -> WeightedMultigraph {
    let g13 = build_g13();
    let mut g = g13.clone();
    for e in g13.bundles() {
        if e.color == EdgeColor::Blue || e.color == EdgeColor::Green {
            g = g.delete_edge(e.id).unwrap();
        }
    }
    g
}

struct SpineScaffold {
    graph: WeightedMultigraph,
    u_path: [VertexId; 5],
    v_path: [VertexId; 5],
    /// x^1, y^1, x^2, y^2, ...
    spine_vertices: Vec<VertexId>,
    blues: [EdgeId; 4],
    greens: [EdgeId; 2],
    wedges: Vec<WedgeInfo>,
}

/// The uncontracted graph on 9 + 5k vertices: the core minus its middle
/// bundle, a weight-7 path on 2k vertices spliced in, and k wedge gadgets
/// chained along the top.
fn build_scaffold(k: u32) -> Result<SpineScaffold, GraphError> {
    if k < 2 {
        return Err(GraphError::InvalidParams("k must be at least 2".into()));
    }
    let k = k as usize;
    let mut g = WeightedMultigraph::new();
    let u1 = g.add_labeled("u1");
    let u2 = g.add_labeled("u2");
    let u3 = g.add_labeled("u3");
    let u4 = g.add_labeled("u4");
    let u5 = g.add_labeled("u5");
    let v1 = g.add_labeled("v1");
    let v2 = g.add_labeled("v2");
    let v3 = g.add_labeled("v3");
    let v4 = g.add_labeled("v4");
    let v5 = g.add_labeled("v5");

    // spine x^1, y^1, ..., x^k, y^k with weight-7 bundles
    let mut spine_vertices = Vec::with_capacity(2 * k);
    for i in 1..=k {
        spine_vertices.push(g.add_labeled(&format!("x{i}")));
        spine_vertices.push(g.add_labeled(&format!("y{i}")));
    }
    for pair in spine_vertices.windows(2) {
        g.add_edge(pair[0], pair[1], 7, EdgeColor::Red).unwrap();
    }

    let x_first = spine_vertices[0];
    let y_last = spine_vertices[2 * k - 1];

    g.add_edge(u5, u4, 4, EdgeColor::Red).unwrap();
    g.add_edge(u4, u3, 3, EdgeColor::Red).unwrap();
    g.add_edge(u3, u2, 4, EdgeColor::Red).unwrap();
    g.add_edge(u2, u1, 5, EdgeColor::Red).unwrap();
    g.add_edge(u1, x_first, 7, EdgeColor::Red).unwrap();
    g.add_edge(y_last, v1, 7, EdgeColor::Red).unwrap();
    g.add_edge(v1, v2, 5, EdgeColor::Red).unwrap();
    g.add_edge(v2, v3, 4, EdgeColor::Red).unwrap();
    g.add_edge(v3, v4, 3, EdgeColor::Red).unwrap();
    g.add_edge(v4, v5, 4, EdgeColor::Red).unwrap();

    let blues = [
        g.add_edge(u4, v1, 2, EdgeColor::Blue).unwrap(),
        g.add_edge(u3, v2, 1, EdgeColor::Blue).unwrap(),
        g.add_edge(u2, v3, 1, EdgeColor::Blue).unwrap(),
        g.add_edge(u1, v4, 2, EdgeColor::Blue).unwrap(),
    ];
    let greens = [
        g.add_edge(u5, x_first, 1, EdgeColor::Green).unwrap(),
        g.add_edge(y_last, v5, 1, EdgeColor::Green).unwrap(),
    ];

    // wedges D_1..D_k; u5 = w2^1, w3^k = v5, w3^{i-1} = w2^i
    let mut wedges = Vec::with_capacity(k);
    let mut junction_left = u5;
    for i in 1..=k {
        let x_i = spine_vertices[2 * (i - 1)];
        let y_i = spine_vertices[2 * (i - 1) + 1];
        let w1 = g.add_labeled(&format!("w1_{i}"));
        let w4 = g.add_labeled(&format!("w4_{i}"));
        let junction_right = if i == k {
            v5
        } else {
            g.add_labeled(&format!("w3_{i}"))
        };
        let e = g.add_edge(x_i, w1, 1, EdgeColor::Gray).unwrap();
        let f = g.add_edge(y_i, w4, 1, EdgeColor::Gray).unwrap();
        let b = g.add_edge(w1, w4, 1, EdgeColor::Gray).unwrap();
        let d = g.add_edge(junction_left, junction_right, 1, EdgeColor::Gray).unwrap();
        let a = g.add_edge(w1, junction_left, 2, EdgeColor::Gray).unwrap();
        let c = g.add_edge(w4, junction_right, 2, EdgeColor::Gray).unwrap();
        wedges.push(WedgeInfo {
            w1,
            w4,
            junction_left,
            junction_right,
            a,
            b,
            c,
            d,
            e,
            f,
            e_anchor: 0,
            f_anchor: 0,
        });
        junction_left = junction_right;
    }

    Ok(SpineScaffold {
        graph: g,
        u_path: [u1, u2, u3, u4, u5],
        v_path: [v1, v2, v3, v4, v5],
        spine_vertices,
        blues,
        greens,
        wedges,
    })
}

/// The graph with an uncontracted spine of 2k vertices and k wedges.
pub fn build_g13_k(k: u32) -> Result<WeightedMultigraph, GraphError> {
    Ok(build_scaffold(k)?.graph)
}

/// A family member: the scaffold with the consecutive spine blocks
/// Q_1, ..., Q_m (|V(Q_i)| = 2 k_i) each contracted to a single vertex z_i.
pub fn build_g13_family(params: &FamilyParams) -> Result<FamilyMember, GraphError> {
    params.validate()?;
    let k = params.k();
    let mut scaffold = build_scaffold(k)?;

    // block index of every spine position
    let mut block_of = Vec::with_capacity(2 * k as usize);
    for (j, &d) in params.doubled.iter().enumerate() {
        block_of.extend(std::iter::repeat(j).take(d as usize));
    }

    for w in &mut scaffold.wedges {
        let pos_x = scaffold
            .spine_vertices
            .iter()
            .position(|&v| v == scaffold.graph.bundle(w.e).unwrap().other_end(w.w1))
            .unwrap();
        let pos_y = scaffold
            .spine_vertices
            .iter()
            .position(|&v| v == scaffold.graph.bundle(w.f).unwrap().other_end(w.w4))
            .unwrap();
        w.e_anchor = block_of[pos_x];
        w.f_anchor = block_of[pos_y];
    }

    // contract the spine bundles internal to each block; the smallest vertex
    // id of a block survives, which is the block's leftmost spine vertex
    let mut graph = scaffold.graph;
    for pos in 1..scaffold.spine_vertices.len() {
        if block_of[pos] == block_of[pos - 1] {
            let head_pos = (0..pos).rev().find(|&p| block_of[p] != block_of[pos]);
            let head = scaffold.spine_vertices[head_pos.map(|p| p + 1).unwrap_or(0)];
            let b = scaffold.spine_vertices[pos];
            let bundle = graph
                .bundle_between(head, b)
                .map(|e| e.id)
                .ok_or(GraphError::InvalidParams("missing spine bundle".into()))?;
            graph = graph.contract_edge(bundle)?;
        }
    }
    // Contraction keeps the smaller endpoint, and spine vertices were created
    // in left-to-right order, so each block survives as its first vertex.
    let mut spine = Vec::with_capacity(params.m());
    let mut offset = 0usize;
    for (j, &d) in params.doubled.iter().enumerate() {
        let z = scaffold.spine_vertices[offset];
        graph.set_label(z, &format!("z{}", j + 1));
        spine.push(z);
        offset += d as usize;
    }

    let mut reds = Vec::new();
    let [u1, u2, u3, u4, u5] = scaffold.u_path;
    let [v1, v2, v3, v4, v5] = scaffold.v_path;
    let path = |g: &WeightedMultigraph, a: VertexId, b: VertexId| -> EdgeId {
        g.bundle_between(a, b).expect("red path bundle").id
    };
    reds.push(path(&graph, u5, u4));
    reds.push(path(&graph, u4, u3));
    reds.push(path(&graph, u3, u2));
    reds.push(path(&graph, u2, u1));
    reds.push(path(&graph, u1, spine[0]));
    for j in 0..spine.len() - 1 {
        reds.push(path(&graph, spine[j], spine[j + 1]));
    }
    reds.push(path(&graph, spine[spine.len() - 1], v1));
    reds.push(path(&graph, v1, v2));
    reds.push(path(&graph, v2, v3));
    reds.push(path(&graph, v3, v4));
    reds.push(path(&graph, v4, v5));

    Ok(FamilyMember {
        params: params.clone(),
        graph,
        u_path: scaffold.u_path,
        v_path: scaffold.v_path,
        spine,
        blues: scaffold.blues,
        greens: scaffold.greens,
        reds,
        wedges: scaffold.wedges,
    })
}

/// Complete bipartite graph on 3+3 vertices, unit weights.
pub fn build_k33() -> WeightedMultigraph {
    let mut g = WeightedMultigraph::new();
    let a: Vec<_> = (0..3).map(|i| g.add_labeled(&format!("a{i}"))).collect();
    let b: Vec<_> = (0..3).map(|i| g.add_labeled(&format!("b{i}"))).collect();
    for &x in &a {
        for &y in &b {
            g.add_edge(x, y, 1, EdgeColor::Uncolored).unwrap();
        }
    }
    g
}

/// The twisted-belt family. `tiles` counts the repeated gadget pairs; the
/// belt is assembled from `2 * tiles - 1` alternating half-gadgets so the
/// up/down pattern stays consistent across the twisted seam. The 4-tile
/// member is the classical picture.
pub fn build_kochol(tiles: u32) -> Result<WeightedMultigraph, GraphError> {
    if tiles < 1 {
        return Err(GraphError::InvalidParams("tiles must be at least 1".into()));
    }
    let n = (2 * tiles - 1) as usize;
    let mut g = WeightedMultigraph::new();

    let mut m0 = Vec::with_capacity(n); // middle vertex at tile start
    let mut m2 = Vec::with_capacity(n); // middle vertex at tile end
    let mut apex = Vec::with_capacity(n); // zigzag vertex on the opposite rail
    let mut r0 = Vec::with_capacity(n); // home-rail vertex at tile start
    let mut r2 = Vec::with_capacity(n); // home-rail vertex at tile end
    for h in 0..n {
        m0.push(g.add_labeled(&format!("m0_{h}")));
        m2.push(g.add_labeled(&format!("m2_{h}")));
        apex.push(g.add_labeled(&format!("ap_{h}")));
        r0.push(g.add_labeled(&format!("r0_{h}")));
        r2.push(g.add_labeled(&format!("r2_{h}")));
    }
    let e = |g: &mut WeightedMultigraph, a, b| {
        g.add_edge(a, b, 1, EdgeColor::Uncolored).unwrap();
    };
    for h in 0..n {
        e(&mut g, r0[h], m0[h]);
        e(&mut g, m0[h], apex[h]);
        e(&mut g, apex[h], m2[h]);
        e(&mut g, m2[h], r2[h]);
        e(&mut g, m2[h], m0[(h + 1) % n]); // middle rail, closes plainly
    }
    // The two outer rails: even half-gadgets sit on the bottom rail with
    // their apex on the top rail, odd ones the other way round. The seam is
    // twisted: bottom continues into top and vice versa.
    let mut bottom = Vec::new();
    let mut top = Vec::new();
    for h in 0..n {
        if h % 2 == 0 {
            bottom.push(r0[h]);
            bottom.push(r2[h]);
            top.push(apex[h]);
        } else {
            top.push(r0[h]);
            top.push(r2[h]);
            bottom.push(apex[h]);
        }
    }
    for pair in bottom.windows(2) {
        e(&mut g, pair[0], pair[1]);
    }
    for pair in top.windows(2) {
        e(&mut g, pair[0], pair[1]);
    }
    e(&mut g, *bottom.last().unwrap(), top[0]);
    e(&mut g, *top.last().unwrap(), bottom[0]);
    Ok(g)
}

/// Outcome of a wedge shrink on the parameter tuple. The graph is rebuilt by
/// the caller; the crossing number can only go down, which is the guarantee
/// this transformation inherits and does not recheck.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrinkOutcome {
    pub params: FamilyParams,
    /// The supporting lemma is stated for k_j >= 2; invocations with
    /// k_j = 3/2 are permitted but flagged for reports.
    pub outside_stated_range: bool,
}

/// Shrinks two wedges into one at position `j` (1-based): k_j decreases by 1.
pub fn shrink_wedge(params: &FamilyParams, j: usize) -> Result<ShrinkOutcome, GraphError> {
    params.validate()?;
    if j == 0 || j > params.m() {
        return Err(GraphError::InvalidParams(format!("no parameter index {j}")));
    }
    let d = params.doubled[j - 1];
    if d < 3 {
        return Err(GraphError::InvalidParams(format!(
            "k_{j} - 1 must stay a positive half-integer (doubled value {d})"
        )));
    }
    let mut doubled = params.doubled.clone();
    doubled[j - 1] -= 2;
    Ok(ShrinkOutcome {
        outside_stated_range: d < 4,
        params: FamilyParams::new(doubled)?,
    })
}

/// Local split introducing a degree-3 vertex `s'` adjacent to t1, t3 and s:
/// the (h+1)-bundle t1-s drops to weight h and the unit bundle t3-s is
/// replaced by the path through `s'`.
pub fn transform_degree3(
    g: &WeightedMultigraph,
    t1: VertexId,
    s: VertexId,
    t2: VertexId,
    t3: VertexId,
    h: u32,
) -> Result<(WeightedMultigraph, VertexId), GraphError> {
    let anchor_err = |msg: &str| GraphError::InvalidAnchor(msg.to_string());
    let t1s = g
        .bundle_between(t1, s)
        .ok_or_else(|| anchor_err("t1 and s must be adjacent"))?;
    if t1s.weight != h + 1 {
        return Err(anchor_err("bundle t1-s must have weight h+1"));
    }
    let t2s = g
        .bundle_between(t2, s)
        .ok_or_else(|| anchor_err("t2 and s must be adjacent"))?;
    if t2s.weight != h {
        return Err(anchor_err("bundle t2-s must have weight h"));
    }
    let t3s = g
        .bundle_between(t3, s)
        .ok_or_else(|| anchor_err("t3 and s must be adjacent"))?;
    if t3s.weight != 1 {
        return Err(anchor_err("bundle t3-s must have weight 1"));
    }
    let mut nbrs = g.neighbors(s);
    nbrs.sort();
    nbrs.dedup();
    let mut expected = vec![t1, t2, t3];
    expected.sort();
    if nbrs != expected {
        return Err(anchor_err("s must have no neighbors besides t1, t2, t3"));
    }
    if g.weighted_degree(t1) > h + 5 {
        return Err(anchor_err("t1 must have weighted degree at most h+5"));
    }

    let t1s_id = t1s.id;
    let t3s_id = t3s.id;
    let mut out = g.clone();
    out.set_weight(t1s_id, h)?;
    out = out.delete_edge(t3s_id)?;
    let s_prime = out.add_vertex(None);
    out.add_edge(s_prime, t1, 1, EdgeColor::Uncolored)?;
    out.add_edge(s_prime, t3, 1, EdgeColor::Uncolored)?;
    out.add_edge(s_prime, s, 1, EdgeColor::Uncolored)?;
    Ok((out, s_prime))
}

/// Local split turning a spine vertex of weighted degree 2h+a into one of
/// degree 2b+a: the two h-bundles at s drop to weight b and a new bundle
/// t1-t2 of weight h-b takes up the difference.
pub fn transform_degree_split(
    g: &WeightedMultigraph,
    t1: VertexId,
    s: VertexId,
    t2: VertexId,
    h: u32,
    a: u32,
    b: u32,
) -> Result<WeightedMultigraph, GraphError> {
    let anchor_err = |msg: String| GraphError::InvalidAnchor(msg);
    if !(a == 1 || a == 2) {
        return Err(anchor_err(format!("a must be 1 or 2, got {a}")));
    }
    if !(a + 1 <= b && b <= h.saturating_sub(1)) {
        return Err(anchor_err(format!("b must satisfy a+1 <= b <= h-1, got {b}")));
    }
    let t1s = g
        .bundle_between(t1, s)
        .ok_or_else(|| anchor_err("t1 and s must be adjacent".into()))?;
    let t2s = g
        .bundle_between(s, t2)
        .ok_or_else(|| anchor_err("s and t2 must be adjacent".into()))?;
    if t1s.weight != h || t2s.weight != h {
        return Err(anchor_err("bundles t1-s and s-t2 must both have weight h".into()));
    }
    let extras: Vec<_> = g
        .incident_bundles(s)
        .into_iter()
        .filter(|e| e.id != t1s.id && e.id != t2s.id)
        .map(|e| e.weight)
        .collect();
    if extras.len() != a as usize || extras.iter().any(|&w| w != 1) {
        return Err(anchor_err(format!(
            "s must carry exactly {a} additional unit edges"
        )));
    }

    let (t1s_id, t2s_id) = (t1s.id, t2s.id);
    let mut out = g.clone();
    out.set_weight(t1s_id, b)?;
    out.set_weight(t2s_id, b)?;
    out.add_edge(t1, t2, h - b, EdgeColor::Red)?;
    Ok(out)
}

/// One record of the schedule: which spine vertex received which local split.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TransformRecord {
    pub target_degree: u32,
    /// 1-based spine position of s
    pub spine_position: usize,
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct Theorem3Manifest {
    pub q: u32,
    pub d: u32,
    pub c: u32,
    pub m: usize,
    pub doubled_ks: Vec<u32>,
    pub splits: Vec<TransformRecord>,
    /// labels of the degree-3 vertices introduced by the wedge splits
    pub degree3_labels: Vec<String>,
    pub zipped_copies: u32,
}

/// The full construction: a family member over the proof's parameter
/// schedule, local splits realizing every degree from 5 to d except 6, wedge
/// splits for degree 3, and c-13 zipped complete-bipartite copies.
pub fn theorem3_construct(
    q: u32,
    d: u32,
    c: u32,
) -> Result<(WeightedMultigraph, Theorem3Manifest), GraphError> {
    if q < 1 || d < 8 || c < 13 {
        return Err(GraphError::InvalidParams(
            "require q >= 1, d >= 8, c >= 13".into(),
        ));
    }
    let m = (1 + 3 * q * (d - 5)) as usize;

    // Pair slots sit at 1-based positions i = 2 (mod 3); each target degree
    // claims q consecutive slots. Targets: even degrees 8..=min(d,14) via
    // (a=2, b), odd degrees 5..=min(d,13) via (a=1, b), then 15..=d directly
    // through the wedge count of the block.
    #[derive(Clone, Copy)]
    enum Slot {
        Split { target: u32, a: u32, b: u32 },
        High { target: u32 },
    }
    let mut slots = Vec::new();
    let mut even = 8;
    while even <= d.min(14) {
        for _ in 0..q {
            slots.push(Slot::Split {
                target: even,
                a: 2,
                b: (even - 2) / 2,
            });
        }
        even += 2;
    }
    let mut odd = 5;
    while odd <= d.min(13) {
        for _ in 0..q {
            slots.push(Slot::Split {
                target: odd,
                a: 1,
                b: (odd - 1) / 2,
            });
        }
        odd += 2;
    }
    for high in 15..=d.max(14) {
        if high < 15 {
            continue;
        }
        for _ in 0..q {
            slots.push(Slot::High { target: high });
        }
    }
    debug_assert_eq!(slots.len(), (q * (d - 5)) as usize);

    let mut doubled = vec![0u32; m];
    for (idx, item) in doubled.iter_mut().enumerate() {
        if idx % 3 == 0 {
            *item = 2; // anchors at positions 1, 4, ..., m
        }
    }
    let mut slot_iter = slots.iter();
    let mut split_positions = Vec::new();
    for pos in (1..m).step_by(3) {
        // pos is 0-based; 1-based position pos+1 = 2 (mod 3)
        let slot = slot_iter.next().expect("slot count matches pair count");
        match *slot {
            Slot::Split { target, a, b } => {
                doubled[pos] = if a == 2 { 2 } else { 1 };
                doubled[pos + 1] = if a == 2 { 2 } else { 1 };
                split_positions.push((pos, target, a, b));
            }
            Slot::High { target } => {
                doubled[pos] = target - 14;
                doubled[pos + 1] = if target % 2 == 0 { 2 } else { 1 };
            }
        }
    }

    let params = FamilyParams::new(doubled.clone())?;
    let member = build_g13_family(&params)?;
    let mut graph = member.graph.clone();
    let mut manifest = Theorem3Manifest {
        q,
        d,
        c,
        m,
        doubled_ks: doubled,
        ..Default::default()
    };

    for &(pos, target, a, b) in &split_positions {
        let s = member.spine[pos];
        let t1 = member.spine[pos - 1];
        let t2 = member.spine[pos + 1];
        graph = transform_degree_split(&graph, t1, s, t2, 7, a, b)?;
        manifest.splits.push(TransformRecord {
            target_degree: target,
            spine_position: pos + 1,
            a,
            b,
        });
    }

    // degree-3 vertices: split q interior wedges (the left junction of wedge
    // i >= 2 is an interior identification of degree 6)
    for i in 0..q as usize {
        let wedge = &member.wedges[1 + i];
        let t3 = member.spine[wedge.e_anchor];
        let (next, s_prime) =
            transform_degree3(&graph, wedge.junction_left, wedge.w1, wedge.w4, t3, 1)?;
        graph = next;
        let label = format!("s3_{}", i + 1);
        graph.set_label(s_prime, &label);
        manifest.degree3_labels.push(label);
    }

    // zip in c - 13 copies of the 1-crossing-critical bipartite graph at
    // degree-3 vertices; labels survive the rebuild, ids do not
    for copy in 0..(c - 13) {
        let is_anchor = |v: &VertexId| {
            graph.weighted_degree(*v) == 3 && {
                let inc = graph.incident_bundles(*v);
                inc.len() == 3 && inc.iter().all(|e| e.weight == 1)
            }
        };
        // anchors inside previously zipped copies are a last resort: keeping
        // the copies intact lets the upper-bound drawing treat each one as a
        // unit
        let fresh = |v: &VertexId| {
            !graph
                .label(*v)
                .map(|l| l.starts_with("zip"))
                .unwrap_or(false)
        };
        let anchor = graph
            .vertices()
            .find(|v| is_anchor(v) && fresh(v))
            .or_else(|| graph.vertices().find(is_anchor))
            .ok_or_else(|| GraphError::InvalidParams("no degree-3 zip anchor".into()))?;
        let mut k33 = build_k33();
        for v in k33.vertices().collect::<Vec<_>>() {
            let label = k33.label(v).unwrap().to_string();
            k33.set_label(v, &format!("zip{copy}_{label}"));
        }
        let v2 = k33.vertex_by_label(&format!("zip{copy}_a0")).unwrap();
        let stubs1: Vec<EdgeId> = graph.incident_bundles(anchor).iter().map(|e| e.id).collect();
        let stubs2: Vec<EdgeId> = k33.incident_bundles(v2).iter().map(|e| e.id).collect();
        let pairing = [
            (stubs1[0], stubs2[0]),
            (stubs1[1], stubs2[1]),
            (stubs1[2], stubs2[2]),
        ];
        graph = zip_product(&graph, anchor, &k33, v2, &pairing)?;
        manifest.zipped_copies += 1;
    }

    Ok((graph, manifest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::are_isomorphic;

    #[test]
    fn g13_has_expected_counts() {
        let g = build_g13();
        assert_eq!(g.vertex_count(), 17);
        assert_eq!(g.bundle_count(), 29);
        assert_eq!(g.total_weight(), 77);
    }

    #[test]
    fn g13_degrees_match_figure() {
        let g = build_g13();
        let x1 = g.vertex_by_label("x1").unwrap();
        let x2 = g.vertex_by_label("x2").unwrap();
        assert_eq!(g.weighted_degree(x1), 17);
        assert_eq!(g.weighted_degree(x2), 17);
        let profile = g.degree_profile();
        // wedge tips have degree 4, the interior junction degree 6
        assert_eq!(profile.count_at(4), 4);
        assert_eq!(profile.count_at(6), 1);
    }

    #[test]
    fn g13_minus_blue_bundle_has_28_bundles() {
        let g = build_g13();
        let u2 = g.vertex_by_label("u2").unwrap();
        let v3 = g.vertex_by_label("v3").unwrap();
        let e = g.bundle_between(u2, v3).unwrap().id;
        assert_eq!(g.delete_edge(e).unwrap().bundle_count(), 28);
    }

    #[test]
    fn scaffold_vertex_count_formula() {
        for k in 2..=6u32 {
            let g = build_g13_k(k).unwrap();
            assert_eq!(g.vertex_count() as u32, 9 + 5 * k);
        }
    }

    #[test]
    fn scaffold_wedge_weights() {
        let s = build_scaffold(3).unwrap();
        for w in &s.wedges {
            let g = &s.graph;
            assert_eq!(g.bundle(w.a).unwrap().weight, 2);
            assert_eq!(g.bundle(w.b).unwrap().weight, 1);
            assert_eq!(g.bundle(w.c).unwrap().weight, 2);
            assert_eq!(g.bundle(w.d).unwrap().weight, 1);
            assert_eq!(g.bundle(w.e).unwrap().weight, 1);
            assert_eq!(g.bundle(w.f).unwrap().weight, 1);
        }
    }

    #[test]
    fn family_11_is_isomorphic_to_base_graph() {
        let params = FamilyParams::new(vec![2, 2]).unwrap();
        let member = build_g13_family(&params).unwrap();
        assert!(are_isomorphic(&member.graph, &build_g13(), true));
    }

    #[test]
    fn family_vertex_count_formula() {
        for doubled in [vec![2, 2], vec![1, 1, 2], vec![2, 1, 1, 2], vec![2, 4, 2], vec![6, 2]] {
            let params = FamilyParams::new(doubled).unwrap();
            let member = build_g13_family(&params).unwrap();
            let expected = 3 * params.k() + params.m() as u32 + 9;
            assert_eq!(member.graph.vertex_count() as u32, expected);
        }
    }

    #[test]
    fn half_half_one_member_has_18_vertices() {
        let params = FamilyParams::new(vec![1, 1, 2]).unwrap();
        let member = build_g13_family(&params).unwrap();
        assert_eq!(member.graph.vertex_count(), 18);
    }

    #[test]
    fn interior_spine_degree_is_14_plus_doubled() {
        let params = FamilyParams::new(vec![2, 2, 4, 2, 2]).unwrap();
        let member = build_g13_family(&params).unwrap();
        for j in 1..member.spine.len() - 1 {
            let expected = 14 + params.doubled[j];
            assert_eq!(member.graph.weighted_degree(member.spine[j]), expected);
        }
        // the first and last block carry the extra green unit
        assert_eq!(
            member.graph.weighted_degree(member.spine[0]),
            14 + params.doubled[0] + 1
        );
    }

    #[test]
    fn contracting_interior_spine_bundle_merges_blocks() {
        let member = build_g13_family(&FamilyParams::new(vec![2, 2, 2]).unwrap()).unwrap();
        let e = member
            .graph
            .bundle_between(member.spine[0], member.spine[1])
            .unwrap()
            .id;
        let contracted = member.graph.contract_edge(e).unwrap();
        let target = build_g13_family(&FamilyParams::new(vec![2, 4]).unwrap()).unwrap();
        assert!(are_isomorphic(&contracted, &target.graph, true));
    }

    #[test]
    fn family_color_classes_are_fixed() {
        let member = build_g13_family(&FamilyParams::new(vec![2, 1, 1, 2]).unwrap()).unwrap();
        let g = &member.graph;
        let blue_weights: Vec<u32> = member
            .blues
            .iter()
            .map(|&e| g.bundle(e).unwrap().weight)
            .collect();
        assert_eq!(blue_weights, vec![2, 1, 1, 2]);
        for &e in &member.greens {
            assert_eq!(g.bundle(e).unwrap().weight, 1);
        }
        for &e in &member.interior_spine_bundles() {
            assert_eq!(g.bundle(e).unwrap().weight, 7);
        }
    }

    #[test]
    fn shrink_wedge_steps_down() {
        let params = FamilyParams::new(vec![2, 4, 2]).unwrap();
        let out = shrink_wedge(&params, 2).unwrap();
        assert_eq!(out.params.doubled, vec![2, 2, 2]);
        assert!(!out.outside_stated_range);
        // one wedge disappears: three w-vertices in the scaffold, of which
        // the contracted member keeps only the 3k term
        let before = build_g13_family(&params).unwrap().graph.vertex_count();
        let after = build_g13_family(&out.params).unwrap().graph.vertex_count();
        assert_eq!(before - after, 3);
        let scaffold_before = build_g13_k(params.k()).unwrap().vertex_count();
        let scaffold_after = build_g13_k(out.params.k()).unwrap().vertex_count();
        assert_eq!(scaffold_before - scaffold_after, 5);
    }

    #[test]
    fn shrink_at_minimum_is_rejected() {
        let params = FamilyParams::new(vec![2, 4, 2]).unwrap();
        assert!(shrink_wedge(&params, 1).is_err());
    }

    #[test]
    fn shrink_flagged_below_lemma_range() {
        let params = FamilyParams::new(vec![2, 3, 3]).unwrap();
        let out = shrink_wedge(&params, 2).unwrap();
        assert!(out.outside_stated_range);
        assert_eq!(out.params.doubled, vec![2, 1, 3]);
    }

    #[test]
    fn k33_counts() {
        let g = build_k33();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.bundle_count(), 9);
        assert!(!crate::planarity::is_planar(&g));
    }

    #[test]
    fn kochol_profile_and_nonplanarity() {
        let g = build_kochol(4).unwrap();
        let n = 2 * 4 - 1;
        assert_eq!(g.vertex_count(), 5 * n);
        assert_eq!(g.bundle_count(), 8 * n);
        let profile = g.degree_profile();
        assert_eq!(profile.count_at(3) as usize, 4 * n);
        assert_eq!(profile.count_at(4) as usize, n);
        assert!(!crate::planarity::is_planar(&g));
    }

    #[test]
    fn degree3_transform_on_interior_wedge() {
        let member = build_g13_family(&FamilyParams::new(vec![2, 2, 2]).unwrap()).unwrap();
        let wedge = &member.wedges[1];
        let t3 = member.spine[wedge.e_anchor];
        let before_deg_t1 = member.graph.weighted_degree(wedge.junction_left);
        let (out, s_prime) =
            transform_degree3(&member.graph, wedge.junction_left, wedge.w1, wedge.w4, t3, 1)
                .unwrap();
        assert_eq!(out.weighted_degree(s_prime), 3);
        assert_eq!(out.weighted_degree(wedge.junction_left), before_deg_t1);
        assert_eq!(out.vertex_count(), member.graph.vertex_count() + 1);
        assert_eq!(out.total_weight(), member.graph.total_weight() + 1);
    }

    #[test]
    fn degree3_transform_rejects_heavy_t1() {
        // first wedge: junction_left is u5 with degree 8 > h+5 = 6
        let member = build_g13_family(&FamilyParams::new(vec![2, 2]).unwrap()).unwrap();
        let wedge = &member.wedges[0];
        let t3 = member.spine[wedge.e_anchor];
        let err = transform_degree3(&member.graph, wedge.junction_left, wedge.w1, wedge.w4, t3, 1)
            .unwrap_err();
        assert!(matches!(err, GraphError::InvalidAnchor(_)));
    }

    #[test]
    fn degree_split_gives_2b_plus_a() {
        // doubled [2,1,1,2]: z2 has k=1/2, one wedge unit edge (a=1)
        let member = build_g13_family(&FamilyParams::new(vec![2, 1, 1, 2]).unwrap()).unwrap();
        let s = member.spine[1];
        let t1 = member.spine[0];
        let t2 = member.spine[2];
        let out = transform_degree_split(&member.graph, t1, s, t2, 7, 1, 2).unwrap();
        assert_eq!(out.weighted_degree(s), 5);
        assert_eq!(out.weighted_degree(t1), member.graph.weighted_degree(t1));
        // a=2 at an integral interior block gives degree 8
        let member2 = build_g13_family(&FamilyParams::new(vec![2, 2, 2]).unwrap()).unwrap();
        let out2 = transform_degree_split(
            &member2.graph,
            member2.spine[0],
            member2.spine[1],
            member2.spine[2],
            7,
            2,
            3,
        )
        .unwrap();
        assert_eq!(out2.weighted_degree(member2.spine[1]), 8);
    }

    #[test]
    fn degree_split_rejects_b_equal_h() {
        let member = build_g13_family(&FamilyParams::new(vec![2, 2, 2]).unwrap()).unwrap();
        let err = transform_degree_split(
            &member.graph,
            member.spine[0],
            member.spine[1],
            member.spine[2],
            7,
            2,
            7,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::InvalidAnchor(_)));
    }

    #[test]
    fn degree_split_conserves_star_weight() {
        let member = build_g13_family(&FamilyParams::new(vec![2, 2, 2]).unwrap()).unwrap();
        let (t1, s, t2) = (member.spine[0], member.spine[1], member.spine[2]);
        let out = transform_degree_split(&member.graph, t1, s, t2, 7, 2, 4).unwrap();
        let star: u32 = out.weighted_degree(s) + out.bundle_between(t1, t2).unwrap().weight * 2;
        assert_eq!(star, 2 * 7 + 2);
    }

    #[test]
    fn theorem3_smallest_schedule() {
        let (graph, manifest) = theorem3_construct(1, 8, 13).unwrap();
        assert_eq!(manifest.m, 10);
        let profile = graph.degree_profile();
        for degree in 3..=8 {
            assert!(profile.count_at(degree) >= 1, "degree {degree} missing");
        }
        assert_eq!(manifest.zipped_copies, 0);
    }

    #[test]
    fn theorem3_high_degree_sample() {
        // beyond the acceptance grid: a tall schedule still delivers
        let (graph, manifest) = theorem3_construct(2, 20, 14).unwrap();
        assert_eq!(manifest.m as u32, 1 + 3 * 2 * 15);
        let profile = graph.degree_profile();
        for degree in 3..=20 {
            assert!(profile.count_at(degree) >= 2, "degree {degree}");
        }
    }

    #[test]
    fn shrink_composes_down_to_minimal_params() {
        // repeatedly shrinking a heavy wedge walks down until the entry
        // reaches its floor
        let mut params = FamilyParams::new(vec![2, 10, 2]).unwrap();
        let mut steps = 0;
        while params.doubled[1] >= 3 {
            params = shrink_wedge(&params, 2).unwrap().params;
            steps += 1;
        }
        assert_eq!(params.doubled, vec![2, 2, 2]);
        assert_eq!(steps, 4);
        assert!(shrink_wedge(&params, 2).is_err());
    }

    #[test]
    fn theorem3_zip_grows_vertex_count_by_four_per_copy() {
        let (g13, _) = theorem3_construct(1, 8, 13).unwrap();
        let (g15, _) = theorem3_construct(1, 8, 15).unwrap();
        assert_eq!(g15.vertex_count(), g13.vertex_count() + 8);
    }

    #[test]
    fn params_parse_and_validate() {
        assert_eq!(FamilyParams::parse("1,0.5,0.5,1").unwrap().doubled, vec![2, 1, 1, 2]);
        assert!(FamilyParams::parse("0.5,1").is_err()); // sum not integral
        assert!(FamilyParams::new(vec![1, 2]).is_err()); // sum 3/2 not integral
        assert!(FamilyParams::new(vec![]).is_err());
        assert!(FamilyParams::new(vec![2]).is_err()); // k = 1
    }
}
