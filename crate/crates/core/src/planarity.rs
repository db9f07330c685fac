//! Planarity testing (left-right criterion), combinatorial embeddings as
//! rotation systems with face tracing, Kuratowski subdivision extraction and
//! exhaustive embedding enumeration for small reduced graphs.
//!
//! Weights are ignored throughout: planarity of a bundle graph does not
//! depend on multiplicities.

use crate::graphcore::{EdgeColor, VertexId, WeightedMultigraph};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlanarityError {
    #[error("embedding enumeration budget exceeded: {0} rotation systems")]
    BudgetExceeded(u128),
}

// ---------------------------------------------------------------------------
// Left-right planarity test on an indexed simple graph.
// ---------------------------------------------------------------------------

const NONE: usize = usize::MAX;

/// Left-right planarity state. Edges are indexed; after orientation each
/// undirected edge is traversed in exactly one direction (tree edges point
/// away from the root, back edges towards the ancestor).
struct LrState {
    n: usize,
    /// adjacency: (neighbor, edge index)
    adj: Vec<Vec<(usize, usize)>>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    refer: Vec<usize>,
    side: Vec<i8>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    roots: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };
    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

impl ConflictPair {
    const EMPTY: ConflictPair = ConflictPair {
        l: Interval::EMPTY,
        r: Interval::EMPTY,
    };
    fn swap(&mut self) {
        std::mem::swap(&mut self.l, &mut self.r);
    }
}

impl LrState {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        let mut src = Vec::with_capacity(m);
        let mut dst = Vec::with_capacity(m);
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
            src.push(u);
            dst.push(v);
        }
        LrState {
            n,
            adj,
            src,
            dst,
            oriented: vec![false; m],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![NONE; m],
            lowpt2: vec![NONE; m],
            nesting_depth: vec![0; m],
            refer: vec![NONE; m],
            side: vec![1; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
            roots: Vec::new(),
        }
    }

    fn orient(&mut self, e: usize, from: usize) {
        if self.src[e] != from {
            let (s, d) = (self.src[e], self.dst[e]);
            self.src[e] = d;
            self.dst[e] = s;
        }
        self.oriented[e] = true;
    }

    fn dfs_orientation(&mut self, root: usize) {
        // iterative DFS: (vertex, adjacency position)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some((v, idx)) = stack.pop() {
            if idx < self.adj[v].len() {
                stack.push((v, idx + 1));
                let (w, e) = self.adj[v][idx];
                if self.oriented[e] {
                    continue;
                }
                self.orient(e, v);
                self.lowpt[e] = self.height[v];
                self.lowpt2[e] = self.height[v];
                if self.height[w] == NONE {
                    // tree edge
                    self.parent_edge[w] = e;
                    self.height[w] = self.height[v] + 1;
                    stack.push((w, 0));
                    continue;
                } else {
                    // back edge
                    self.lowpt[e] = self.height[w];
                    self.finish_edge(v, e);
                }
            } else if self.parent_edge[v] != NONE {
                let e = self.parent_edge[v];
                let u = self.src[e];
                self.finish_edge(u, e);
            }
        }
    }

    /// Nesting depth of a finished edge plus the lowpoint update of its
    /// parent edge.
    fn finish_edge(&mut self, v: usize, e: usize) {
        self.nesting_depth[e] = 2 * self.lowpt[e] as i64;
        if self.lowpt2[e] < self.height[v] {
            self.nesting_depth[e] += 1; // chordal adjustment
        }
        let pe = self.parent_edge[v];
        if pe != NONE {
            if self.lowpt[e] < self.lowpt[pe] {
                self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                self.lowpt[pe] = self.lowpt[e];
            } else if self.lowpt[e] > self.lowpt[pe] {
                self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
            } else {
                self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
            }
        }
    }

    fn ordered_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut ordered: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for (v, list) in self.adj.iter().enumerate() {
            let mut out: Vec<(usize, usize)> = list
                .iter()
                .filter(|&&(_, e)| self.src[e] == v)
                .copied()
                .collect();
            out.sort_by_key(|&(_, e)| self.nesting_depth[e]);
            ordered[v] = out;
        }
        ordered
    }

    fn conflicting(&self, i: Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.l.is_empty() {
            self.lowpt[p.r.low]
        } else if p.r.is_empty() {
            self.lowpt[p.l.low]
        } else {
            self.lowpt[p.l.low].min(self.lowpt[p.r.low])
        }
    }

    fn dfs_testing(&mut self, root: usize, ordered: &[Vec<(usize, usize)>]) -> bool {
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some((v, idx)) = stack.pop() {
            let e = self.parent_edge[v];
            if idx < ordered[v].len() {
                stack.push((v, idx + 1));
                let (w, ei) = ordered[v][idx];
                self.stack_bottom[ei] = self.stack.len();
                if ei == self.parent_edge[w] {
                    // descend the tree edge; constraints integrate on return
                    stack.push((w, 0));
                    continue;
                } else {
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        l: Interval::EMPTY,
                        r: Interval { low: ei, high: ei },
                    });
                }
                if !self.integrate_edge(v, idx, ordered) {
                    return false;
                }
            } else {
                if e != NONE {
                    let u = self.src[e];
                    self.trim_back_edges(u);
                    if self.lowpt[e] < self.height[u] {
                        let top = *self.stack.last().expect("return edge implies stack");
                        let hl = top.l.high;
                        let hr = top.r.high;
                        if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                            self.refer[e] = hl;
                        } else {
                            self.refer[e] = hr;
                        }
                    }
                    // after finishing subtree of a tree edge: integrate its
                    // constraints at the parent
                    let parent = self.src[e];
                    let pos = ordered[parent]
                        .iter()
                        .position(|&(_, pe)| pe == e)
                        .expect("edge in parent's ordered adjacency");
                    if !self.integrate_edge(parent, pos, ordered) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// After the outgoing edge at `ordered[v][idx]` is fully processed, fold
    /// its return-edge constraints into the parent edge of `v`.
    fn integrate_edge(&mut self, v: usize, idx: usize, ordered: &[Vec<(usize, usize)>]) -> bool {
        let (_, ei) = ordered[v][idx];
        let e = self.parent_edge[v];
        if self.lowpt[ei] < self.height[v] {
            if idx == 0 {
                if e != NONE {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                }
            } else if !self.add_constraints(ei, e) {
                return false;
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::EMPTY;
        // merge return edges of ei into p.r
        loop {
            let mut q = self.stack.pop().expect("constraints imply stack content");
            if !q.l.is_empty() {
                q.swap();
            }
            if !q.l.is_empty() {
                return false; // not planar
            }
            if e != NONE && self.lowpt[q.r.low] > self.lowpt[e] {
                if p.r.is_empty() {
                    p.r.high = q.r.high;
                } else {
                    self.refer[p.r.low] = q.r.high;
                }
                p.r.low = q.r.low;
            } else {
                // align
                let anchor = if e == NONE { NONE } else { self.lowpt_edge[e] };
                self.refer[q.r.low] = anchor;
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of previous siblings into p.l
        while {
            let top = self.stack.last().copied().unwrap_or(ConflictPair::EMPTY);
            !self.stack.is_empty()
                && (self.conflicting(top.l, ei) || self.conflicting(top.r, ei))
        } {
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(q.r, ei) {
                q.swap();
            }
            if self.conflicting(q.r, ei) {
                return false; // not planar
            }
            // merge interval below lowpt(ei) into p.r
            if p.r.low != NONE {
                self.refer[p.r.low] = q.r.high;
            }
            if q.r.low != NONE {
                p.r.low = q.r.low;
            }
            if p.l.is_empty() {
                p.l.high = q.l.high;
            } else {
                self.refer[p.l.low] = q.l.high;
            }
            p.l.low = q.l.low;
        }
        if !(p.l.is_empty() && p.r.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn trim_back_edges(&mut self, u: usize) {
        // drop entire conflict pairs
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == self.height[u] {
                let p = self.stack.pop().unwrap();
                if p.l.low != NONE {
                    self.side[p.l.low] = -1;
                }
            } else {
                break;
            }
        }
        // trim one more conflict pair
        if let Some(mut p) = self.stack.pop() {
            while p.l.high != NONE && self.dst[p.l.high] == u {
                p.l.high = self.refer[p.l.high];
            }
            if p.l.high == NONE && p.l.low != NONE {
                self.refer[p.l.low] = p.r.low;
                self.side[p.l.low] = -1;
                p.l.low = NONE;
            }
            while p.r.high != NONE && self.dst[p.r.high] == u {
                p.r.high = self.refer[p.r.high];
            }
            if p.r.high == NONE && p.r.low != NONE {
                self.refer[p.r.low] = p.l.low;
                self.side[p.r.low] = -1;
                p.r.low = NONE;
            }
            self.stack.push(p);
        }
    }

    fn sign(&mut self, e: usize) -> i8 {
        // iterative resolution of the side references
        let mut chain = Vec::new();
        let mut cur = e;
        while self.refer[cur] != NONE {
            chain.push(cur);
            cur = self.refer[cur];
        }
        let mut sign = self.side[cur];
        for &x in chain.iter().rev() {
            self.side[x] *= sign;
            self.refer[x] = NONE;
            sign = self.side[x];
        }
        sign
    }

    fn run(&mut self) -> bool {
        for v in 0..self.n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.dfs_orientation(v);
            }
        }
        let ordered = self.ordered_adjacency();
        for root in self.roots.clone() {
            if !self.dfs_testing(root, &ordered) {
                return false;
            }
        }
        true
    }

    /// Rotation system of a planar embedding, as neighbor lists in clockwise
    /// order. Must only be called after a successful `run`.
    fn embedding(&mut self) -> Vec<Vec<usize>> {
        let m = self.src.len();
        for e in 0..m {
            let s = self.sign(e) as i64;
            self.nesting_depth[e] *= s;
        }
        let ordered = self.ordered_adjacency();

        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            for &(w, _) in &ordered[v] {
                rotation[v].push(w);
            }
        }
        let mut left_ref = vec![NONE; self.n];
        let mut right_ref = vec![NONE; self.n];

        for root in self.roots.clone() {
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            while let Some((v, idx)) = stack.pop() {
                if idx >= ordered[v].len() {
                    continue;
                }
                stack.push((v, idx + 1));
                let (w, ei) = ordered[v][idx];
                if ei == self.parent_edge[w] {
                    // tree edge: the parent becomes w's first neighbor
                    rotation[w].insert(0, v);
                    left_ref[v] = w;
                    right_ref[v] = w;
                    stack.push((w, 0));
                } else {
                    // back edge landing at w
                    if self.side[ei] == 1 {
                        let pos = rotation[w]
                            .iter()
                            .position(|&x| x == right_ref[w])
                            .expect("right ref present");
                        rotation[w].insert(pos + 1, v);
                    } else {
                        let pos = rotation[w]
                            .iter()
                            .position(|&x| x == left_ref[w])
                            .expect("left ref present");
                        rotation[w].insert(pos, v);
                        left_ref[w] = v;
                    }
                }
            }
        }
        rotation
    }
}

/// Planarity of an indexed simple graph given as an edge list.
pub fn is_planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    if n >= 3 && edges.len() > 3 * n - 6 {
        return false;
    }
    LrState::new(n, edges).run()
}

/// Rotation system (clockwise neighbor lists) for a planar indexed graph.
pub fn planar_embedding_edges(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if n >= 3 && edges.len() > 3 * n - 6 {
        return None;
    }
    let mut state = LrState::new(n, edges);
    if !state.run() {
        return None;
    }
    Some(state.embedding())
}

// ---------------------------------------------------------------------------
// Bundle-graph front end.
// ---------------------------------------------------------------------------

fn indexed_edges(g: &WeightedMultigraph) -> (Vec<VertexId>, Vec<(usize, usize)>) {
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges = g
        .bundles()
        .map(|e| (index[&e.u], index[&e.v]))
        .collect();
    (verts, edges)
}

/// True iff the underlying multigraph is planar. Deterministic; weights are
/// irrelevant.
pub fn is_planar(g: &WeightedMultigraph) -> bool {
    let (verts, edges) = indexed_edges(g);
    is_planar_edges(verts.len(), &edges)
}

/// A combinatorial embedding: for every vertex the cyclic order of its
/// incident edge ends, given as neighbor lists (bundle graphs are simple).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub rotation: BTreeMap<VertexId, Vec<VertexId>>,
}

impl Embedding {
    pub fn edge_count(&self) -> usize {
        self.rotation.values().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Number of faces obtained by tracing the rotation system.
    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Traces all faces; each face is a cyclic list of directed edges.
    pub fn faces(&self) -> Vec<Vec<(VertexId, VertexId)>> {
        let mut visited: BTreeMap<(VertexId, VertexId), bool> = BTreeMap::new();
        for (&v, nbrs) in &self.rotation {
            for &w in nbrs {
                visited.insert((v, w), false);
            }
        }
        let mut faces = Vec::new();
        let darts: Vec<(VertexId, VertexId)> = visited.keys().copied().collect();
        for start in darts {
            if visited[&start] {
                continue;
            }
            let mut face = Vec::new();
            let mut dart = start;
            loop {
                visited.insert(dart, true);
                face.push(dart);
                let (v, w) = dart;
                let rot = &self.rotation[&w];
                let pos = rot.iter().position(|&x| x == v).expect("dart endpoint");
                let next = rot[(pos + 1) % rot.len()];
                dart = (w, next);
                if dart == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    /// Euler check `|V| - |E| + |F| = 2` for a connected genus-0 embedding.
    pub fn euler_ok(&self) -> bool {
        let v = self.rotation.len();
        let e = self.edge_count();
        let f = self.face_count();
        v + f == e + 2
    }
}

/// Some genus-0 rotation system of `g`, or `None` if nonplanar.
pub fn planar_embedding(g: &WeightedMultigraph) -> Option<Embedding> {
    let (verts, edges) = indexed_edges(g);
    let rotation = planar_embedding_edges(verts.len(), &edges)?;
    Some(Embedding {
        rotation: rotation
            .into_iter()
            .enumerate()
            .map(|(i, nbrs)| (verts[i], nbrs.into_iter().map(|j| verts[j]).collect()))
            .collect(),
    })
}

// ---------------------------------------------------------------------------
// Kuratowski subdivision extraction.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Extracts a Kuratowski subdivision from a nonplanar graph by greedy edge
/// deletion: every edge whose removal keeps the graph nonplanar is dropped,
/// leaving (after suppressing degree-2 vertices) exactly a K5 or K33. The
/// final structural check is independent of the planarity tester, so a broken
/// rejection would be caught here.
pub fn kuratowski_subdivision(g: &WeightedMultigraph) -> Option<(WeightedMultigraph, KuratowskiKind)> {
    if is_planar(g) {
        return None;
    }
    let mut current = g.clone();
    loop {
        let mut changed = false;
        let ids: Vec<_> = current.bundles().map(|e| e.id).collect();
        for e in ids {
            if current.bundle(e).is_err() {
                continue;
            }
            let candidate = current.delete_edge(e).expect("edge exists");
            if !is_planar(&candidate) {
                current = candidate;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // strip isolated vertices, then classify the suppressed skeleton
    let mut skeleton = WeightedMultigraph::new();
    let mut map = BTreeMap::new();
    for v in current.vertices() {
        if current.weighted_degree(v) > 0 {
            map.insert(v, skeleton.add_vertex(current.label(v).map(str::to_string)));
        }
    }
    for e in current.bundles() {
        skeleton
            .add_edge(map[&e.u], map[&e.v], 1, EdgeColor::Uncolored)
            .expect("valid edge");
    }
    let reduced = suppress_degree_two(&skeleton);
    let kind = classify_kuratowski(&reduced)?;
    Some((current, kind))
}

fn classify_kuratowski(g: &WeightedMultigraph) -> Option<KuratowskiKind> {
    let n = g.vertex_count();
    let m = g.bundle_count();
    let degrees: Vec<u32> = g.vertices().map(|v| g.weighted_degree(v)).collect();
    if n == 5 && m == 10 && degrees.iter().all(|&d| d == 4) {
        return Some(KuratowskiKind::K5);
    }
    if n == 6 && m == 9 && degrees.iter().all(|&d| d == 3) {
        // bipartite 3-regular on 6 vertices with 9 edges is K33
        return Some(KuratowskiKind::K33);
    }
    None
}

/// Suppresses degree-2 vertices (both neighbors distinct) and collapses the
/// parallels that arise, until none remain or only a trivial graph is left.
/// A suppressed path is replaced by an edge carrying the bottleneck weight of
/// its two sides, so the weight structure keeps distinguishing heavy rails
/// from unit edges.
pub fn suppress_degree_two(g: &WeightedMultigraph) -> WeightedMultigraph {
    let mut current = g.clone();
    loop {
        let candidate = current.vertices().find(|&v| {
            let inc = current.incident_bundles(v);
            inc.len() == 2 && current.vertex_count() > 3
        });
        let Some(v) = candidate else {
            return current;
        };
        let inc = current.incident_bundles(v);
        let (a, b) = (inc[0].other_end(v), inc[1].other_end(v));
        let weight = inc[0].weight.min(inc[1].weight);
        let color = if inc[0].color == inc[1].color {
            inc[0].color
        } else {
            EdgeColor::Uncolored
        };
        let (e0, e1) = (inc[0].id, inc[1].id);
        let next = current.delete_edge(e0).unwrap().delete_edge(e1).unwrap();
        // remove v itself by rebuilding without it
        let mut rebuilt = WeightedMultigraph::new();
        let mut map = BTreeMap::new();
        for w in next.vertices() {
            if w != v {
                map.insert(w, rebuilt.add_vertex(next.label(w).map(str::to_string)));
            }
        }
        for e in next.bundles() {
            rebuilt
                .add_edge(map[&e.u], map[&e.v], e.weight, e.color)
                .unwrap();
        }
        if a != b {
            rebuilt.add_edge(map[&a], map[&b], weight, color).unwrap();
        }
        current = rebuilt;
    }
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of embeddings of small graphs.
// ---------------------------------------------------------------------------

/// All genus-0 rotation systems of the reduced graph (degree-2 vertices
/// suppressed, parallels collapsed), deduplicated under reflection and
/// weight-respecting graph automorphism. Returns one representative per
/// class. Connected inputs only; the face-trace genus test assumes a single
/// component.
///
/// The automorphisms must respect the reduced weights: the bottleneck
/// weights of suppressed paths keep heavy rails distinct from unit edges,
/// which is what makes the count match the drawing-level notion.
pub fn enumerate_small_embeddings(
    g: &WeightedMultigraph,
    budget: u128,
) -> Result<Vec<Embedding>, PlanarityError> {
    let reduced = suppress_degree_two(g);
    let verts: Vec<VertexId> = reduced.vertices().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut weight = vec![vec![0u32; n]; n];
    for e in reduced.bundles() {
        let (u, v) = (index[&e.u], index[&e.v]);
        nbrs[u].push(v);
        nbrs[v].push(u);
        weight[u][v] = e.weight;
        weight[v][u] = e.weight;
    }
    for l in &mut nbrs {
        l.sort_unstable();
    }

    let mut total: u128 = 1;
    for l in &nbrs {
        let d = l.len().max(1);
        total = total.saturating_mul((1..d as u128).product::<u128>().max(1));
        if total > budget {
            return Err(PlanarityError::BudgetExceeded(total));
        }
    }

    let autos = automorphisms(n, &nbrs, &weight);

    // odometer over per-vertex permutations of all-but-first neighbor
    let mut perm_state: Vec<Vec<usize>> = nbrs
        .iter()
        .map(|l| (0..l.len().saturating_sub(1)).collect())
        .collect();
    let mut classes: BTreeMap<Vec<Vec<usize>>, Vec<Vec<usize>>> = BTreeMap::new();

    loop {
        // materialize the rotation system
        let rotation: Vec<Vec<usize>> = nbrs
            .iter()
            .zip(&perm_state)
            .map(|(l, p)| {
                if l.is_empty() {
                    Vec::new()
                } else {
                    let mut rot = vec![l[0]];
                    rot.extend(p.iter().map(|&i| l[1 + i]));
                    rot
                }
            })
            .collect();
        if genus_zero(&rotation) {
            let key = canonical_rotation_key(&rotation, &autos);
            classes.entry(key).or_insert(rotation);
        }
        if !advance(&mut perm_state) {
            break;
        }
    }

    Ok(classes
        .into_values()
        .map(|rotation| Embedding {
            rotation: rotation
                .into_iter()
                .enumerate()
                .map(|(i, l)| (verts[i], l.into_iter().map(|j| verts[j]).collect()))
                .collect(),
        })
        .collect())
}

/// Advances a vector of permutations in lexicographic order; false when done.
fn advance(state: &mut [Vec<usize>]) -> bool {
    for perm in state.iter_mut() {
        if next_permutation(perm) {
            return true;
        }
        // wrapped: reset and carry
        perm.sort_unstable();
    }
    false
}

fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

fn genus_zero(rotation: &[Vec<usize>]) -> bool {
    let v = rotation.len();
    let e: usize = rotation.iter().map(|l| l.len()).sum::<usize>() / 2;
    // trace faces
    let mut visited: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for (a, l) in rotation.iter().enumerate() {
        for &b in l {
            visited.insert((a, b), false);
        }
    }
    let mut f = 0;
    let darts: Vec<(usize, usize)> = visited.keys().copied().collect();
    for start in darts {
        if visited[&start] {
            continue;
        }
        f += 1;
        let mut dart = start;
        loop {
            visited.insert(dart, true);
            let (a, b) = dart;
            let rot = &rotation[b];
            let pos = rot.iter().position(|&x| x == a).unwrap();
            dart = (b, rot[(pos + 1) % rot.len()]);
            if dart == start {
                break;
            }
        }
    }
    // connected inputs only: sphere iff V - E + F == 2
    v + f == e + 2
}

/// Brute-force automorphism group of a small weighted simple graph. The
/// weight matrix must be preserved entrywise.
fn automorphisms(n: usize, nbrs: &[Vec<usize>], weight: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let degree: Vec<usize> = nbrs.iter().map(|l| l.len()).collect();
    let mut result = Vec::new();
    let mut mapping = vec![NONE; n];
    let mut used = vec![false; n];

    fn search(
        pos: usize,
        n: usize,
        degree: &[usize],
        weight: &[Vec<u32>],
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
        result: &mut Vec<Vec<usize>>,
    ) {
        if pos == n {
            result.push(mapping.clone());
            return;
        }
        for cand in 0..n {
            if used[cand] || degree[cand] != degree[pos] {
                continue;
            }
            let ok = (0..pos).all(|prev| weight[pos][prev] == weight[cand][mapping[prev]]);
            if !ok {
                continue;
            }
            mapping[pos] = cand;
            used[cand] = true;
            search(pos + 1, n, degree, weight, mapping, used, result);
            used[cand] = false;
            mapping[pos] = NONE;
        }
    }

    search(0, n, &degree, weight, &mut mapping, &mut used, &mut result);
    result
}

/// Canonical key of a rotation system under automorphism and reflection.
fn canonical_rotation_key(rotation: &[Vec<usize>], autos: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let normalize = |rot: &[Vec<usize>]| -> Vec<Vec<usize>> {
        rot.iter()
            .map(|l| {
                if l.is_empty() {
                    return Vec::new();
                }
                let min_pos = l
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &x)| x)
                    .map(|(i, _)| i)
                    .unwrap();
                let mut out = Vec::with_capacity(l.len());
                for k in 0..l.len() {
                    out.push(l[(min_pos + k) % l.len()]);
                }
                out
            })
            .collect()
    };
    let mut best: Option<Vec<Vec<usize>>> = None;
    for auto in autos {
        for reflect in [false, true] {
            let mut mapped: Vec<Vec<usize>> = vec![Vec::new(); rotation.len()];
            for (v, l) in rotation.iter().enumerate() {
                let mut new_list: Vec<usize> = l.iter().map(|&w| auto[w]).collect();
                if reflect {
                    new_list.reverse();
                }
                mapped[auto[v]] = new_list;
            }
            let candidate = normalize(&mapped);
            if best.as_ref().map(|b| candidate < *b).unwrap_or(true) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::EdgeColor;

    fn complete(n: usize) -> WeightedMultigraph {
        let mut g = WeightedMultigraph::new();
        let vs: Vec<_> = (0..n).map(|i| g.add_labeled(&format!("v{i}"))).collect();
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(vs[i], vs[j], 1, EdgeColor::Uncolored).unwrap();
            }
        }
        g
    }

    fn cycle(n: usize) -> WeightedMultigraph {
        let mut g = WeightedMultigraph::new();
        let vs: Vec<_> = (0..n).map(|i| g.add_labeled(&format!("c{i}"))).collect();
        for i in 0..n {
            g.add_edge(vs[i], vs[(i + 1) % n], 1, EdgeColor::Uncolored)
                .unwrap();
        }
        g
    }

    #[test]
    fn k4_planar_k5_k33_not() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&crate::families::build_k33()));
    }

    #[test]
    fn petersen_is_nonplanar() {
        let mut g = WeightedMultigraph::new();
        let vs: Vec<_> = (0..10).map(|i| g.add_labeled(&format!("p{i}"))).collect();
        for i in 0..5 {
            g.add_edge(vs[i], vs[(i + 1) % 5], 1, EdgeColor::Uncolored).unwrap();
            g.add_edge(vs[i], vs[i + 5], 1, EdgeColor::Uncolored).unwrap();
            g.add_edge(vs[i + 5], vs[5 + (i + 2) % 5], 1, EdgeColor::Uncolored)
                .unwrap();
        }
        assert!(!is_planar(&g));
        let (_, kind) = kuratowski_subdivision(&g).unwrap();
        // Petersen has no K5 subdivision (max degree 3)
        assert_eq!(kind, KuratowskiKind::K33);
    }

    #[test]
    fn embeddings_pass_euler_check() {
        for g in [complete(4), cycle(4), crate::families::build_g13()] {
            if let Some(embedding) = planar_embedding(&g) {
                assert!(embedding.euler_ok(), "euler check failed");
            }
        }
        let c4 = cycle(4);
        let e = planar_embedding(&c4).unwrap();
        assert_eq!(e.face_count(), 2);
    }

    #[test]
    fn k5_has_no_embedding() {
        assert!(planar_embedding(&complete(5)).is_none());
    }

    #[test]
    fn planarity_brute_force_cross_check() {
        // every rotation-system method and the LR test must agree on small graphs
        let cases: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]),
            (5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect()),
            (6, vec![(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
            (6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
        ];
        for (n, edges) in cases {
            let lr = is_planar_edges(n, &edges);
            let brute = brute_force_planar(n, &edges);
            assert_eq!(lr, brute, "disagreement on n={n} edges={edges:?}");
        }
    }

    fn brute_force_planar(n: usize, edges: &[(usize, usize)]) -> bool {
        let mut g = WeightedMultigraph::new();
        let vs: Vec<_> = (0..n).map(|_| g.add_vertex(None)).collect();
        for &(u, v) in edges {
            g.add_edge(vs[u], vs[v], 1, EdgeColor::Uncolored).unwrap();
        }
        match enumerate_small_embeddings(&g, 10_000_000) {
            Ok(classes) => !classes.is_empty(),
            Err(_) => panic!("budget"),
        }
    }

    #[test]
    fn cycle_has_one_embedding_class() {
        let g = cycle(4);
        let classes = enumerate_small_embeddings(&g, 1_000_000).unwrap();
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn k4_has_one_embedding_class() {
        let g = complete(4);
        let classes = enumerate_small_embeddings(&g, 1_000_000).unwrap();
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn budget_exceeded_reported() {
        let g = complete(6);
        assert!(matches!(
            enumerate_small_embeddings(&g, 10),
            Err(PlanarityError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn planarity_invariant_under_subdivision() {
        let k5 = complete(5);
        assert_eq!(is_planar(&k5), is_planar(&k5.subdivide_to_simple()));
        let k4 = complete(4);
        assert_eq!(is_planar(&k4), is_planar(&k4.subdivide_to_simple()));
    }
}
