//! Exact crossing-number computation for small weighted multigraphs plus a
//! planarization-based insertion heuristic used to find witness drawings.
//!
//! The exact search runs a ladder over the weighted crossing budget: for each
//! value it branches over sets of non-adjacent bundle pairs (every pair at
//! most once, per the good-drawing restriction) with per-edge order
//! enumeration, accepting as soon as some planarization is planar. Lower
//! bounds come from the Euler density of the simplified graph and from exact
//! weighted skewness.

use crate::drawing::{CrossId, CrossingPoint, Drawing};
use crate::graphcore::{EdgeId, VertexId, WeightedMultigraph};
use crate::planarity::{self, kuratowski_subdivision};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BinaryHeap};
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolverBudget {
    /// cap on the weighted crossing count explored by the exact ladder
    pub max_crossings: u64,
    /// cap on branch-and-bound nodes
    pub node_limit: u64,
    pub time_limit: Duration,
    /// insertion-heuristic restarts
    pub restarts: u64,
    pub seed: u64,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_crossings: 6,
            node_limit: 20_000_000,
            time_limit: Duration::from_secs(120),
            restarts: 48,
            seed: 0xc0ffee,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveStatus {
    Exact,
    BoundsOnly,
    Timeout,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub lower_bound: u64,
    pub upper_bound: u64,
    pub witness: Option<Drawing>,
    pub status: SolveStatus,
    pub nodes: u64,
}

impl SolveResult {
    pub fn exact_value(&self) -> Option<u64> {
        (self.status == SolveStatus::Exact).then_some(self.upper_bound)
    }
}

// ---------------------------------------------------------------------------
// Indexed instance.
// ---------------------------------------------------------------------------

struct Inst {
    eids: Vec<EdgeId>,
    n: usize,
    ends: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl Inst {
    fn of(g: &WeightedMultigraph) -> Inst {
        let verts: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut eids = Vec::new();
        let mut ends = Vec::new();
        let mut weights = Vec::new();
        for e in g.bundles() {
            eids.push(e.id);
            ends.push((index[&e.u], index[&e.v]));
            weights.push(e.weight);
        }
        Inst {
            n: verts.len(),
            eids,
            ends,
            weights,
        }
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        let (au, av) = self.ends[a];
        let (bu, bv) = self.ends[b];
        au == bu || au == bv || av == bu || av == bv
    }
}

// ---------------------------------------------------------------------------
// Lower bounds.
// ---------------------------------------------------------------------------

/// Euler density bound on the simplified (weight-collapsed) graph:
/// cr >= m - 3n + 6 when n >= 3.
pub fn euler_lb(g: &WeightedMultigraph) -> u64 {
    let n = g.vertex_count();
    let m = g.bundle_count();
    if n >= 3 && m > 3 * n - 6 {
        (m - (3 * n - 6)) as u64
    } else {
        0
    }
}

/// Exact weighted skewness: the minimum total weight of bundles whose
/// removal leaves a planar graph. Always a lower bound on the weighted
/// crossing number. Branches over the edges of an extracted Kuratowski
/// subdivision.
pub fn skewness_lb(g: &WeightedMultigraph, budget: &SolverBudget) -> u64 {
    // greedy upper bound: repeatedly delete the lightest Kuratowski edge
    let mut greedy = 0u64;
    let mut current = g.clone();
    while let Some((witness, _)) = kuratowski_subdivision(&current) {
        let lightest = witness
            .bundles()
            .min_by_key(|e| (e.weight, e.id))
            .expect("nonplanar graph has edges");
        greedy += current.bundle(lightest.id).unwrap().weight as u64;
        current = current.delete_edge(lightest.id).unwrap();
    }
    if greedy == 0 {
        return 0;
    }

    let mut best = greedy;
    let mut nodes = 0u64;
    let start = Instant::now();
    fn dfs(
        g: &WeightedMultigraph,
        spent: u64,
        best: &mut u64,
        nodes: &mut u64,
        budget: &SolverBudget,
        start: Instant,
    ) {
        *nodes += 1;
        if spent >= *best
            || *nodes > budget.node_limit
            || start.elapsed() > budget.time_limit
        {
            return;
        }
        match kuratowski_subdivision(g) {
            None => *best = spent.min(*best),
            Some((witness, _)) => {
                let mut branch_edges: Vec<_> = witness.bundles().map(|e| e.id).collect();
                branch_edges.sort();
                for e in branch_edges {
                    let w = g.bundle(e).unwrap().weight as u64;
                    if spent + w >= *best {
                        continue;
                    }
                    let child = g.delete_edge(e).unwrap();
                    dfs(&child, spent + w, best, nodes, budget, start);
                }
            }
        }
    }
    dfs(g, 0, &mut best, &mut nodes, budget, start);
    best
}

// ---------------------------------------------------------------------------
// Partial drawings over the indexed instance plus dual-graph edge insertion.
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct PartialDrawing {
    present: Vec<bool>,
    /// crossing i pairs bundles (a, b)
    crossings: Vec<(usize, usize)>,
    /// per bundle, the crossing ids along it from its first endpoint
    orders: Vec<Vec<usize>>,
}

impl PartialDrawing {
    fn empty(m: usize) -> PartialDrawing {
        PartialDrawing {
            present: vec![false; m],
            crossings: Vec::new(),
            orders: vec![Vec::new(); m],
        }
    }

    /// planarization nodes: originals then one per crossing; returns the
    /// segment list with each segment's owner bundle and position.
    fn planarization(&self, inst: &Inst) -> (usize, Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let n_total = inst.n + self.crossings.len();
        let mut edges = Vec::new();
        let mut owners = Vec::new();
        for b in 0..inst.ends.len() {
            if !self.present[b] {
                continue;
            }
            let chain = &self.orders[b];
            let mut prev = inst.ends[b].0;
            for (pos, &c) in chain.iter().enumerate() {
                edges.push((prev, inst.n + c));
                owners.push((b, pos));
                prev = inst.n + c;
            }
            edges.push((prev, inst.ends[b].1));
            owners.push((b, chain.len()));
        }
        (n_total, edges, owners)
    }

    fn is_planar(&self, inst: &Inst) -> bool {
        let (n, edges, _) = self.planarization(inst);
        planarity::is_planar_edges(n, &edges)
    }

    fn to_drawing(&self, g: &WeightedMultigraph, inst: &Inst) -> Drawing {
        let mut drawing = Drawing::planar(g.clone());
        for (i, &(a, b)) in self.crossings.iter().enumerate() {
            drawing.crossings.push(CrossingPoint {
                id: CrossId(i as u32),
                a: inst.eids[a],
                b: inst.eids[b],
            });
        }
        for (b, order) in self.orders.iter().enumerate() {
            if !order.is_empty() {
                drawing.orders.insert(
                    inst.eids[b],
                    order.iter().map(|&c| CrossId(c as u32)).collect(),
                );
            }
        }
        drawing
    }

    /// Inserts bundle `b` along a cheapest dual path of the current
    /// (planar) partial drawing. Returns the added weighted cost, or `None`
    /// when no admissible route exists.
    fn insert_edge(&mut self, inst: &Inst, b: usize, rng: &mut ChaCha8Rng) -> Option<u64> {
        let (n_total, edges, owners) = self.planarization(inst);
        // randomized relabeling diversifies the embedding choice
        let mut perm: Vec<usize> = (0..n_total).collect();
        perm.shuffle(rng);
        let mut inv = vec![0usize; n_total];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mapped: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let rotation = planarity::planar_embedding_edges(n_total, &mapped)?;
        let rotation: Vec<Vec<usize>> = (0..n_total)
            .map(|old| rotation[perm[old]].iter().map(|&x| inv[x]).collect())
            .collect();

        // face ids per dart
        let mut face_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut n_faces = 0usize;
        for (u, nbrs) in rotation.iter().enumerate() {
            for &v in nbrs {
                if face_of.contains_key(&(u, v)) {
                    continue;
                }
                let mut dart = (u, v);
                loop {
                    face_of.insert(dart, n_faces);
                    let (a, bb) = dart;
                    let rot = &rotation[bb];
                    let pos = rot.iter().position(|&x| x == a).expect("dart endpoint");
                    dart = (bb, rot[(pos + 1) % rot.len()]);
                    if dart == (u, v) {
                        break;
                    }
                }
                n_faces += 1;
            }
        }

        let (s, t) = inst.ends[b];
        // dual arcs: crossing a segment of bundle o costs weight(o); segments
        // of bundles adjacent to the inserted one are not crossable
        let mut arcs: Vec<Vec<(usize, u64, usize)>> = vec![Vec::new(); n_faces];
        for (seg, &(u, v)) in edges.iter().enumerate() {
            let (owner, _) = owners[seg];
            if inst.adjacent(owner, b) {
                continue;
            }
            let f1 = face_of[&(u, v)];
            let f2 = face_of[&(v, u)];
            let cost = inst.weights[owner] as u64;
            arcs[f1].push((f2, cost, seg));
            arcs[f2].push((f1, cost, seg));
        }

        let source_faces: Vec<usize> = rotation[s].iter().map(|&v| face_of[&(s, v)]).collect();
        let target_faces: std::collections::BTreeSet<usize> =
            rotation[t].iter().map(|&v| face_of[&(t, v)]).collect();
        if rotation[s].is_empty() || rotation[t].is_empty() {
            // isolated endpoint: route through any face without crossings
            self.present[b] = true;
            self.orders[b].clear();
            return Some(0);
        }

        let mut dist = vec![u64::MAX; n_faces];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n_faces];
        let mut heap = BinaryHeap::new();
        for &f in &source_faces {
            dist[f] = 0;
            heap.push(std::cmp::Reverse((0u64, f)));
        }
        let mut reached = None;
        while let Some(std::cmp::Reverse((d, f))) = heap.pop() {
            if d > dist[f] {
                continue;
            }
            if target_faces.contains(&f) {
                reached = Some(f);
                break;
            }
            for &(g2, cost, seg) in &arcs[f] {
                let nd = d + cost;
                if nd < dist[g2] {
                    dist[g2] = nd;
                    prev[g2] = Some((f, seg));
                    heap.push(std::cmp::Reverse((nd, g2)));
                }
            }
        }
        let reached = reached?;
        // reconstruct crossed segments from s to t
        let mut crossed = Vec::new();
        let mut cur = reached;
        while let Some((pf, seg)) = prev[cur] {
            crossed.push(seg);
            cur = pf;
        }
        crossed.reverse();

        // commit: one new crossing per crossed segment
        let mut inserted_order = Vec::new();
        let mut per_owner: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        let mut cost = 0u64;
        for &seg in &crossed {
            let (owner, pos) = owners[seg];
            let id = self.crossings.len();
            self.crossings.push((b, owner));
            inserted_order.push(id);
            per_owner.entry(owner).or_default().push((pos, id));
            cost += inst.weights[owner] as u64;
        }
        for (owner, mut hits) in per_owner {
            hits.sort();
            let old = std::mem::take(&mut self.orders[owner]);
            let mut rebuilt = Vec::with_capacity(old.len() + hits.len());
            let mut hit_iter = hits.into_iter().peekable();
            for (pos, &c) in old.iter().enumerate() {
                while hit_iter.peek().map(|&(p, _)| p == pos).unwrap_or(false) {
                    rebuilt.push(hit_iter.next().unwrap().1);
                }
                rebuilt.push(c);
            }
            for (_, id) in hit_iter {
                rebuilt.push(id);
            }
            self.orders[owner] = rebuilt;
        }
        self.present[b] = true;
        self.orders[b] = inserted_order;
        Some(cost * inst.weights[b] as u64)
    }
}

// ---------------------------------------------------------------------------
// Insertion heuristic.
// ---------------------------------------------------------------------------

/// One randomized planar-subgraph + edge-insertion pass.
fn insertion_pass(
    g: &WeightedMultigraph,
    inst: &Inst,
    rng: &mut ChaCha8Rng,
    shuffle_all: bool,
) -> Option<Drawing> {
    let m = inst.ends.len();
    let mut order: Vec<usize> = (0..m).collect();
    if shuffle_all {
        order.shuffle(rng);
    } else {
        // keep heavy bundles in the skeleton, break ties randomly
        let jitter: Vec<u64> = (0..m).map(|_| rng.random()).collect();
        order.sort_by_key(|&e| (std::cmp::Reverse(inst.weights[e]), jitter[e]));
    }

    let mut partial = PartialDrawing::empty(m);
    let mut skeleton_edges: Vec<(usize, usize)> = Vec::new();
    let mut pending = Vec::new();
    for &e in &order {
        skeleton_edges.push(inst.ends[e]);
        if planarity::is_planar_edges(inst.n, &skeleton_edges) {
            partial.present[e] = true;
        } else {
            skeleton_edges.pop();
            pending.push(e);
        }
    }
    pending.shuffle(rng);
    for e in pending {
        partial.insert_edge(inst, e, rng)?;
    }
    Some(partial.to_drawing(g, inst))
}

/// A realizable good drawing whose weighted count upper-bounds the crossing
/// number. Deterministic given the budget seed.
pub fn heuristic_upper(g: &WeightedMultigraph, budget: &SolverBudget) -> Drawing {
    let inst = Inst::of(g);
    let start = Instant::now();
    let mut best: Option<Drawing> = None;
    for r in 0..budget.restarts.max(1) {
        if start.elapsed() > budget.time_limit && best.is_some() {
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed.wrapping_add(r));
        let Some(candidate) = insertion_pass(g, &inst, &mut rng, r % 2 == 1) else {
            continue;
        };
        if !candidate.is_certificate() {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => candidate.weighted_crossing_count() < b.weighted_crossing_count(),
        };
        if better {
            best = Some(candidate);
        }
    }
    best.unwrap_or_else(|| {
        // every graph admits some drawing; fall back to crossing everything
        // pairwise along an arbitrary order, which realize() then vets
        brute_force_any_drawing(g, &inst)
    })
}

/// Last-resort drawing: insert edges one at a time over the trivial planar
/// skeleton of a spanning forest, never failing on connected inputs.
fn brute_force_any_drawing(g: &WeightedMultigraph, inst: &Inst) -> Drawing {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let m = inst.ends.len();
    let mut partial = PartialDrawing::empty(m);
    for e in 0..m {
        if partial.insert_edge(inst, e, &mut rng).is_none() {
            partial.present[e] = true;
        }
    }
    partial.to_drawing(g, inst)
}

// ---------------------------------------------------------------------------
// Exact branch and bound.
// ---------------------------------------------------------------------------

struct ExactSearch<'a> {
    inst: &'a Inst,
    pairs: Vec<(usize, usize, u64)>,
    nodes: u64,
    budget: &'a SolverBudget,
    start: Instant,
    aborted: bool,
}

impl<'a> ExactSearch<'a> {
    fn new(inst: &'a Inst, budget: &'a SolverBudget) -> Self {
        let m = inst.ends.len();
        let mut pairs = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if !inst.adjacent(a, b) {
                    pairs.push((a, b, inst.weights[a] as u64 * inst.weights[b] as u64));
                }
            }
        }
        pairs.sort_by_key(|&(a, b, w)| (w, a, b));
        ExactSearch {
            inst,
            pairs,
            nodes: 0,
            budget,
            start: Instant::now(),
            aborted: false,
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes > self.budget.node_limit || self.start.elapsed() > self.budget.time_limit {
            self.aborted = true;
        }
        self.aborted
    }

    /// Tests one pair set under every admissible per-edge crossing order.
    fn feasible_with_orders(&mut self, chosen: &[usize]) -> Option<PartialDrawing> {
        let m = self.inst.ends.len();
        let mut partial = PartialDrawing::empty(m);
        partial.present = vec![true; m];
        let mut per_edge: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (ci, &p) in chosen.iter().enumerate() {
            let (a, b, _) = self.pairs[p];
            partial.crossings.push((a, b));
            per_edge.entry(a).or_default().push(ci);
            per_edge.entry(b).or_default().push(ci);
        }
        // enumerate order permutations only for edges with several crossings
        let multi: Vec<usize> = per_edge
            .iter()
            .filter(|(_, v)| v.len() > 1)
            .map(|(&e, _)| e)
            .collect();
        for (&e, list) in &per_edge {
            partial.orders[e] = list.clone();
        }
        if multi.is_empty() {
            self.nodes += 1;
            return partial.is_planar(self.inst).then_some(partial);
        }
        let mut perms: Vec<Vec<usize>> = multi
            .iter()
            .map(|e| (0..per_edge[e].len()).collect())
            .collect();
        loop {
            for (mi, &e) in multi.iter().enumerate() {
                partial.orders[e] = perms[mi].iter().map(|&i| per_edge[&e][i]).collect();
            }
            self.nodes += 1;
            if partial.is_planar(self.inst) {
                return Some(partial);
            }
            if self.out_of_budget() {
                return None;
            }
            if !advance_perms(&mut perms) {
                return None;
            }
        }
    }

    /// Is there a drawing with weighted count at most `c`? DFS over pair
    /// sets in canonical order.
    fn decide(&mut self, c: u64) -> Option<PartialDrawing> {
        let mut chosen = Vec::new();
        self.dfs(0, 0, c, &mut chosen)
    }

    fn dfs(
        &mut self,
        next: usize,
        used: u64,
        c: u64,
        chosen: &mut Vec<usize>,
    ) -> Option<PartialDrawing> {
        if self.out_of_budget() {
            return None;
        }
        if let Some(found) = self.feasible_with_orders(chosen) {
            return Some(found);
        }
        for p in next..self.pairs.len() {
            let w = self.pairs[p].2;
            if used + w > c {
                continue;
            }
            chosen.push(p);
            if let Some(found) = self.dfs(p + 1, used + w, c, chosen) {
                return Some(found);
            }
            chosen.pop();
            if self.aborted {
                return None;
            }
        }
        None
    }
}

fn advance_perms(perms: &mut [Vec<usize>]) -> bool {
    for perm in perms.iter_mut() {
        if next_perm(perm) {
            return true;
        }
        perm.sort_unstable();
    }
    false
}

fn next_perm(perm: &mut [usize]) -> bool {
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

/// Exact weighted crossing number of a small instance: lower bounds from
/// Euler density and exact skewness, an insertion-heuristic upper bound,
/// then the branch-and-bound ladder until the bounds meet.
pub fn exact_cr(g: &WeightedMultigraph, budget: &SolverBudget) -> SolveResult {
    let inst = Inst::of(g);
    let mut nodes = 0u64;

    if planarity::is_planar(g) {
        return SolveResult {
            lower_bound: 0,
            upper_bound: 0,
            witness: Some(Drawing::planar(g.clone())),
            status: SolveStatus::Exact,
            nodes,
        };
    }

    let mut lower = euler_lb(g).max(1);
    lower = lower.max(skewness_lb(g, budget));

    let heuristic = heuristic_upper(g, budget);
    let mut upper = heuristic.weighted_crossing_count();
    let mut witness = heuristic;

    let mut search = ExactSearch::new(&inst, budget);
    loop {
        if lower >= upper {
            nodes += search.nodes;
            return SolveResult {
                lower_bound: upper,
                upper_bound: upper,
                witness: Some(witness),
                status: SolveStatus::Exact,
                nodes,
            };
        }
        if lower > budget.max_crossings {
            nodes += search.nodes;
            return SolveResult {
                lower_bound: lower,
                upper_bound: upper,
                witness: Some(witness),
                status: SolveStatus::BoundsOnly,
                nodes,
            };
        }
        match search.decide(lower) {
            Some(found) => {
                let drawing = found.to_drawing(g, &inst);
                let count = drawing.weighted_crossing_count();
                nodes += search.nodes;
                return SolveResult {
                    lower_bound: count,
                    upper_bound: count,
                    witness: Some(drawing),
                    status: SolveStatus::Exact,
                    nodes,
                };
            }
            None if search.aborted => {
                nodes += search.nodes;
                return SolveResult {
                    lower_bound: lower,
                    upper_bound: upper,
                    witness: Some(witness),
                    status: SolveStatus::Timeout,
                    nodes,
                };
            }
            None => {
                lower += 1;
                // tighten the upper bound opportunistically as the ladder
                // climbs; the heuristic may find the optimum earlier
                if lower == upper {
                    continue;
                }
                if upper > lower {
                    let again = heuristic_upper(
                        g,
                        &SolverBudget {
                            restarts: 8,
                            seed: budget.seed.wrapping_add(lower),
                            ..budget.clone()
                        },
                    );
                    if again.weighted_crossing_count() < upper {
                        upper = again.weighted_crossing_count();
                        witness = again;
                    }
                }
            }
        }
    }
}

/// How a witness drawing was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessMethod {
    Template,
    Heuristic,
    Exact,
}

/// Searches for a realizable good drawing of `g` with weighted count
/// strictly below `c`. Template candidates (from the family shapes) are
/// checked first, then insertion restarts, then a bounded exact search on
/// small instances. `None` when the budget is exhausted.
pub fn improve_below(
    g: &WeightedMultigraph,
    c: u64,
    budget: &SolverBudget,
    templates: &[Drawing],
) -> Option<(Drawing, WitnessMethod)> {
    if c == 0 {
        return None;
    }
    for t in templates {
        if t.weighted_crossing_count() < c && t.is_certificate() {
            return Some((t.clone(), WitnessMethod::Template));
        }
    }
    if planarity::is_planar(g) {
        return Some((Drawing::planar(g.clone()), WitnessMethod::Heuristic));
    }

    let inst = Inst::of(g);
    let start = Instant::now();
    for r in 0..budget.restarts.max(1) {
        if start.elapsed() > budget.time_limit {
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed.wrapping_add(r.wrapping_mul(0x9e37)));
        let Some(candidate) = insertion_pass(g, &inst, &mut rng, r % 2 == 1) else {
            continue;
        };
        if candidate.weighted_crossing_count() < c && candidate.is_certificate() {
            return Some((candidate, WitnessMethod::Heuristic));
        }
    }

    // bounded exact search only on small instances and small targets
    let m = inst.ends.len();
    if c <= 6 && m <= 40 {
        let mut search = ExactSearch::new(&inst, budget);
        if let Some(found) = search.decide(c - 1) {
            let drawing = found.to_drawing(g, &inst);
            if drawing.weighted_crossing_count() < c && drawing.is_certificate() {
                return Some((drawing, WitnessMethod::Exact));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::EdgeColor;

    pub fn complete(n: usize, weight: u32) -> WeightedMultigraph {
        let mut g = WeightedMultigraph::new();
        let vs: Vec<_> = (0..n).map(|i| g.add_labeled(&format!("v{i}"))).collect();
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(vs[i], vs[j], weight, EdgeColor::Uncolored).unwrap();
            }
        }
        g
    }

    pub fn petersen() -> WeightedMultigraph {
        let mut g = WeightedMultigraph::new();
        let vs: Vec<_> = (0..10).map(|i| g.add_labeled(&format!("p{i}"))).collect();
        for i in 0..5 {
            g.add_edge(vs[i], vs[(i + 1) % 5], 1, EdgeColor::Uncolored).unwrap();
            g.add_edge(vs[i], vs[i + 5], 1, EdgeColor::Uncolored).unwrap();
            g.add_edge(vs[i + 5], vs[5 + (i + 2) % 5], 1, EdgeColor::Uncolored).unwrap();
        }
        g
    }

    fn quick_budget() -> SolverBudget {
        SolverBudget {
            restarts: 12,
            ..Default::default()
        }
    }

    #[test]
    fn skewness_examples() {
        let budget = quick_budget();
        assert_eq!(skewness_lb(&complete(5, 1), &budget), 1);
        assert_eq!(skewness_lb(&complete(6, 1), &budget), 3);
        assert_eq!(skewness_lb(&complete(4, 1), &budget), 0);
        assert_eq!(skewness_lb(&petersen(), &budget), 2);
    }

    #[test]
    fn exact_small_classics() {
        let budget = quick_budget();
        let k5 = exact_cr(&complete(5, 1), &budget);
        assert_eq!(k5.exact_value(), Some(1));
        assert!(k5.witness.unwrap().is_certificate());

        let k33 = exact_cr(&crate::families::build_k33(), &budget);
        assert_eq!(k33.exact_value(), Some(1));

        let pet = exact_cr(&petersen(), &budget);
        assert_eq!(pet.exact_value(), Some(2));
    }

    #[test]
    fn exact_weighted_k5() {
        let budget = quick_budget();
        let result = exact_cr(&complete(5, 2), &budget);
        assert_eq!(result.exact_value(), Some(4));
        let witness = result.witness.unwrap();
        assert_eq!(witness.weighted_crossing_count(), 4);
        assert!(witness.is_certificate());
    }

    #[test]
    fn heuristic_on_planar_graph_is_zero() {
        let budget = quick_budget();
        let g = complete(4, 1);
        let drawing = heuristic_upper(&g, &budget);
        assert_eq!(drawing.weighted_crossing_count(), 0);
    }

    #[test]
    fn heuristic_k33_reaches_one() {
        let budget = quick_budget();
        let drawing = heuristic_upper(&crate::families::build_k33(), &budget);
        assert_eq!(drawing.weighted_crossing_count(), 1);
        assert!(drawing.is_certificate());
    }

    #[test]
    fn improve_below_planar_case() {
        let budget = quick_budget();
        let g = complete(4, 1);
        let (drawing, _) = improve_below(&g, 1, &budget, &[]).unwrap();
        assert_eq!(drawing.weighted_crossing_count(), 0);
    }

    #[test]
    fn exact_monotone_under_deletion() {
        let budget = quick_budget();
        let g = complete(5, 1);
        let full = exact_cr(&g, &budget).exact_value().unwrap();
        for e in g.bundles().map(|e| e.id).collect::<Vec<_>>() {
            let smaller = exact_cr(&g.delete_edge(e).unwrap(), &budget)
                .exact_value()
                .unwrap();
            assert!(smaller <= full);
        }
    }
}
