//! Edge connectivity via unit-capacity maximum flow, pairwise
//! k-edge-connectivity of vertex sets, and constrained edge-disjoint
//! path bundles (including the four-path augmentation with three
//! prescribed terminals used by the rooted-wall growth step).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::multigraph::{EdgeId, MultiGraph, Vertex, Walk};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConnError {
    UnknownVertex(Vertex),
    SameVertex(Vertex),
    SourceInTargets(Vertex),
    EmptyTargets,
    PrescribedNotInTargets(Vertex),
    PrescribedNotDistinct(Vertex),
    BadSeed { index: usize, reason: SeedDefect },
    /// Post-check failure: a prescribed terminal lost its path during
    /// augmentation. Augmenting paths terminate on first arrival at the
    /// sink, so this cannot happen; it is checked, not trusted.
    PrescribedEndsLost(Vertex),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeedDefect {
    NotAWalk,
    NotAPath,
    WrongSource,
    WrongTarget,
    InteriorMeetsTargets(Vertex),
    SharesEdge(EdgeId),
}

impl fmt::Display for ConnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnError::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            ConnError::SameVertex(v) => write!(f, "connectivity of {v} to itself is undefined"),
            ConnError::SourceInTargets(v) => write!(f, "source {v} lies in the target set"),
            ConnError::EmptyTargets => write!(f, "target set is empty"),
            ConnError::PrescribedNotInTargets(v) => {
                write!(f, "prescribed terminal {v} is not in the target set")
            }
            ConnError::PrescribedNotDistinct(v) => {
                write!(f, "prescribed terminal {v} repeats")
            }
            ConnError::BadSeed { index, reason } => write!(f, "seed path {index} invalid: {reason:?}"),
            ConnError::PrescribedEndsLost(v) => {
                write!(f, "augmentation stranded prescribed terminal {v}")
            }
        }
    }
}

impl core::error::Error for ConnError {}

/// Pairwise edge-disjoint paths out of one source vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeDisjointBundle {
    pub source: Vertex,
    pub paths: Vec<Walk>,
}

impl EdgeDisjointBundle {
    pub fn targets(&self) -> Vec<Vertex> {
        self.paths.iter().map(|p| p.last()).collect()
    }

    /// Replays the bundle invariants against the host graph: every walk
    /// is a path from the common source, valid in `g`, and no host edge
    /// appears in two walks.
    pub fn validate(&self, g: &MultiGraph) -> bool {
        let mut seen = BTreeSet::new();
        for p in &self.paths {
            if Walk::new(g, p.first(), p.steps().to_vec()).is_err() {
                return false;
            }
            if !p.is_path() || p.first() != self.source || p.is_empty() {
                return false;
            }
            for e in p.edges() {
                if !seen.insert(e) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DisjointPathsOutcome {
    Found(EdgeDisjointBundle),
    /// Fewer than the requested number of paths exist; `cut` is a set of
    /// edges separating the source from the targets in the restricted
    /// graph, certifying infeasibility.
    Infeasible { flow: u32, cut: BTreeSet<EdgeId> },
}

// Unit-capacity flow network. Arcs are stored in reverse pairs (index
// i and i^1); an undirected graph edge becomes one pair with capacity 1
// in each direction, which keeps net usage across the pair at most one
// edge traversal. Adjacency lists follow insertion order, and edges are
// inserted in id order, so augmentation is lowest-edge-id-first and the
// whole computation is deterministic.
struct FlowNet {
    sink: usize,
    arcs: Vec<FlowArc>,
    adj: Vec<Vec<usize>>,
    node_of: BTreeMap<Vertex, usize>,
    vertex_of: Vec<Option<Vertex>>,
}

#[derive(Clone, Debug)]
struct FlowArc {
    to: usize,
    cap: i32,
    initial: i32,
    edge: EdgeId,
    terminal: Option<Vertex>,
}

impl FlowNet {
    fn new() -> FlowNet {
        FlowNet {
            sink: usize::MAX,
            arcs: Vec::new(),
            adj: Vec::new(),
            node_of: BTreeMap::new(),
            vertex_of: Vec::new(),
        }
    }

    fn node(&mut self, v: Vertex) -> usize {
        if let Some(&i) = self.node_of.get(&v) {
            return i;
        }
        let i = self.adj.len();
        self.adj.push(Vec::new());
        self.vertex_of.push(Some(v));
        self.node_of.insert(v, i);
        i
    }

    fn add_sink(&mut self) -> usize {
        let i = self.adj.len();
        self.adj.push(Vec::new());
        self.vertex_of.push(None);
        self.sink = i;
        i
    }

    fn push_pair(&mut self, from: usize, to: usize, cap_fwd: i32, cap_rev: i32, edge: EdgeId, terminal: Option<Vertex>) {
        let i = self.arcs.len();
        self.arcs.push(FlowArc { to, cap: cap_fwd, initial: cap_fwd, edge, terminal });
        self.arcs.push(FlowArc { to: from, cap: cap_rev, initial: cap_rev, edge, terminal });
        self.adj[from].push(i);
        self.adj[to].push(i + 1);
    }

    fn add_undirected(&mut self, u: usize, v: usize, edge: EdgeId) {
        self.push_pair(u, v, 1, 1, edge, None);
    }

    fn add_terminal(&mut self, u: usize, edge: EdgeId, t: Vertex) {
        let sink = self.sink;
        self.push_pair(u, sink, 1, 0, edge, Some(t));
    }

    /// One BFS augmentation from `s` to `t`; returns whether a unit was
    /// pushed. The search stops at its first arrival at `t`, so arcs out
    /// of `t` are never traversed.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let n = self.adj.len();
        let mut parent_arc: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = vec![s];
        let mut head = 0;
        'bfs: while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &a in &self.adj[u] {
                if self.arcs[a].cap <= 0 {
                    continue;
                }
                let w = self.arcs[a].to;
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                parent_arc[w] = Some(a);
                if w == t {
                    break 'bfs;
                }
                queue.push(w);
            }
        }
        if !seen[t] {
            return false;
        }
        let mut at = t;
        while at != s {
            let a = parent_arc[at].expect("path recorded");
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            // The tail of arc a is the head of its reverse.
            at = self.arcs[a ^ 1].to;
        }
        true
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: Option<u32>) -> u32 {
        let mut flow = 0;
        while limit.is_none_or(|l| flow < l) {
            if !self.augment(s, t) {
                break;
            }
            flow += 1;
        }
        flow
    }

    /// Residual-reachable node set from `s`.
    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                if self.arcs[a].cap > 0 && !seen[self.arcs[a].to] {
                    seen[self.arcs[a].to] = true;
                    stack.push(self.arcs[a].to);
                }
            }
        }
        seen
    }

    /// Saturated original-direction arcs crossing the residual cut, as
    /// original edge ids.
    fn cut_edges(&self, s: usize) -> BTreeSet<EdgeId> {
        let seen = self.reachable(s);
        let mut cut = BTreeSet::new();
        for (i, arc) in self.arcs.iter().enumerate() {
            let from = self.arcs[i ^ 1].to;
            if arc.initial > 0 && arc.cap < arc.initial && seen[from] && !seen[arc.to] {
                cut.insert(arc.edge);
            }
        }
        cut
    }

    /// Consumes net flow into arc-disjoint source-to-sink walks; each
    /// walk is returned as (edge ids, terminal vertex).
    fn decompose(&mut self, s: usize, flow: u32) -> Vec<(Vec<EdgeId>, Vertex)> {
        // Net usage per arc: forward pair member used iff cap < initial.
        let mut used: Vec<bool> = self
            .arcs
            .iter()
            .map(|a| a.initial > 0 && a.cap < a.initial)
            .collect();
        // Cancel opposite usage within a pair (possible for undirected pairs).
        for i in (0..self.arcs.len()).step_by(2) {
            if used[i] && used[i + 1] {
                used[i] = false;
                used[i + 1] = false;
            }
        }
        let mut out = Vec::new();
        for _ in 0..flow {
            let mut edges = Vec::new();
            let mut at = s;
            let terminal;
            loop {
                let a = *self.adj[at]
                    .iter()
                    .find(|&&a| used[a])
                    .expect("flow conservation");
                used[a] = false;
                let arc = &self.arcs[a];
                if arc.to == self.sink {
                    edges.push(arc.edge);
                    terminal = arc.terminal.expect("terminal arc");
                    break;
                }
                edges.push(arc.edge);
                at = arc.to;
            }
            out.push((edges, terminal));
        }
        out
    }
}

/// Maximum number of pairwise edge-disjoint `u`–`v` paths, equal to the
/// minimum edge cut by max-flow/min-cut.
pub fn edge_connectivity(g: &MultiGraph, u: Vertex, v: Vertex) -> Result<u32, ConnError> {
    for w in [u, v] {
        if !g.contains_vertex(w) {
            return Err(ConnError::UnknownVertex(w));
        }
    }
    if u == v {
        return Err(ConnError::SameVertex(u));
    }
    let mut net = FlowNet::new();
    let su = net.node(u);
    let sv = net.node(v);
    for (e, a, b) in g.edges() {
        if a == b {
            continue; // loops never separate u from v
        }
        let na = net.node(a);
        let nb = net.node(b);
        net.push_pair(na, nb, 1, 1, e, None);
    }
    let _ = su;
    Ok(net.max_flow(net.node_of[&u], sv, None))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairwiseVerdict {
    Ok,
    /// First failing pair in sorted order, with its connectivity.
    Failing { u: Vertex, v: Vertex, connectivity: u32 },
}

impl PairwiseVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, PairwiseVerdict::Ok)
    }
}

/// True iff every pair of `s` is joined by at least `k` edge-disjoint
/// paths. `k = 0` holds vacuously.
pub fn pairwise_k_connected(
    g: &MultiGraph,
    s: &BTreeSet<Vertex>,
    k: u32,
) -> Result<PairwiseVerdict, ConnError> {
    if k == 0 {
        return Ok(PairwiseVerdict::Ok);
    }
    let verts: Vec<Vertex> = s.iter().copied().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            let c = edge_connectivity(g, u, v)?;
            if c < k {
                return Ok(PairwiseVerdict::Failing { u, v, connectivity: c });
            }
        }
    }
    Ok(PairwiseVerdict::Ok)
}

/// Builds the contracted-target network: targets become a super-sink
/// (paths may meet `targets` only at their final vertex), vertices in
/// `forbidden_interior` that are not targets are removed, and edges
/// inside the target set are unusable.
fn target_network(
    g: &MultiGraph,
    s: Vertex,
    targets: &BTreeSet<Vertex>,
    forbidden_interior: &BTreeSet<Vertex>,
) -> FlowNet {
    let mut net = FlowNet::new();
    net.node(s);
    net.add_sink();
    let blocked = |v: Vertex| v != s && forbidden_interior.contains(&v) && !targets.contains(&v);
    for (e, a, b) in g.edges() {
        if a == b {
            continue;
        }
        match (targets.contains(&a), targets.contains(&b)) {
            (true, true) => continue,
            (false, true) => {
                if !blocked(a) {
                    let na = net.node(a);
                    net.add_terminal(na, e, b);
                }
            }
            (true, false) => {
                if !blocked(b) {
                    let nb = net.node(b);
                    net.add_terminal(nb, e, a);
                }
            }
            (false, false) => {
                if !blocked(a) && !blocked(b) {
                    let na = net.node(a);
                    let nb = net.node(b);
                    net.add_undirected(na, nb, e);
                }
            }
        }
    }
    net
}

fn bundle_from_decomposition(
    g: &MultiGraph,
    s: Vertex,
    pieces: Vec<(Vec<EdgeId>, Vertex)>,
) -> EdgeDisjointBundle {
    let paths = pieces
        .into_iter()
        .map(|(edges, _)| {
            Walk::from_edges(g, s, &edges)
                .expect("flow walk is a host walk")
                .spliced_to_path()
        })
        .collect();
    EdgeDisjointBundle { source: s, paths }
}

/// Searches for `k` pairwise edge-disjoint paths from `s` into `targets`,
/// each meeting the target set only at its final vertex and avoiding
/// `forbidden_interior` internally. Infeasibility is certified by a cut.
pub fn disjoint_paths_to_set(
    g: &MultiGraph,
    s: Vertex,
    targets: &BTreeSet<Vertex>,
    k: u32,
    forbidden_interior: &BTreeSet<Vertex>,
) -> Result<DisjointPathsOutcome, ConnError> {
    if !g.contains_vertex(s) {
        return Err(ConnError::UnknownVertex(s));
    }
    if targets.is_empty() {
        return Err(ConnError::EmptyTargets);
    }
    if targets.contains(&s) {
        return Err(ConnError::SourceInTargets(s));
    }
    let mut net = target_network(g, s, targets, forbidden_interior);
    let src = net.node_of[&s];
    let sink = net.sink;
    let flow = net.max_flow(src, sink, Some(k));
    if flow < k {
        // Drain to true max flow so the residual cut certifies.
        let extra = net.max_flow(src, sink, None);
        let total = flow + extra;
        if total < k {
            return Ok(DisjointPathsOutcome::Infeasible {
                flow: total,
                cut: net.cut_edges(src),
            });
        }
        let pieces = net.decompose(src, k);
        let bundle = bundle_from_decomposition(g, s, pieces);
        debug_assert!(bundle.validate(g));
        return Ok(DisjointPathsOutcome::Found(bundle));
    }
    let pieces = net.decompose(src, flow);
    let bundle = bundle_from_decomposition(g, s, pieces);
    debug_assert!(bundle.validate(g));
    Ok(DisjointPathsOutcome::Found(bundle))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AugmentOutcome {
    /// Four paths: the first three end at the prescribed terminals in
    /// order, the fourth anywhere in the target set.
    Found(EdgeDisjointBundle),
    Infeasible { flow: u32, cut: BTreeSet<EdgeId> },
}

/// Given three edge-disjoint seed paths from `s` to the three prescribed
/// target vertices, finds four pairwise edge-disjoint paths from `s` to
/// `targets` such that the first three still terminate exactly at the
/// prescribed vertices. The seeds are installed as the initial flow and
/// one augmentation is attempted; since an augmenting search never
/// leaves the sink, terminal arcs of the seeds stay saturated, and the
/// prescribed-ends contract is post-checked rather than trusted.
pub fn augment_with_prescribed_ends(
    g: &MultiGraph,
    s: Vertex,
    targets: &BTreeSet<Vertex>,
    prescribed: [Vertex; 3],
    seeds: &[Walk; 3],
) -> Result<AugmentOutcome, ConnError> {
    if !g.contains_vertex(s) {
        return Err(ConnError::UnknownVertex(s));
    }
    if targets.contains(&s) {
        return Err(ConnError::SourceInTargets(s));
    }
    if targets.is_empty() {
        return Err(ConnError::EmptyTargets);
    }
    let mut distinct = BTreeSet::new();
    for t in prescribed {
        if !targets.contains(&t) {
            return Err(ConnError::PrescribedNotInTargets(t));
        }
        if !distinct.insert(t) {
            return Err(ConnError::PrescribedNotDistinct(t));
        }
    }
    let mut seed_edges: BTreeSet<EdgeId> = BTreeSet::new();
    for (index, (seed, want)) in seeds.iter().zip(prescribed).enumerate() {
        let fail = |reason| ConnError::BadSeed { index, reason };
        if Walk::new(g, seed.first(), seed.steps().to_vec()).is_err() {
            return Err(fail(SeedDefect::NotAWalk));
        }
        if !seed.is_path() || seed.is_empty() {
            return Err(fail(SeedDefect::NotAPath));
        }
        if seed.first() != s {
            return Err(fail(SeedDefect::WrongSource));
        }
        if seed.last() != want {
            return Err(fail(SeedDefect::WrongTarget));
        }
        for v in seed.internal_vertices() {
            if targets.contains(&v) {
                return Err(fail(SeedDefect::InteriorMeetsTargets(v)));
            }
        }
        for e in seed.edges() {
            if !seed_edges.insert(e) {
                return Err(fail(SeedDefect::SharesEdge(e)));
            }
        }
    }

    let mut net = target_network(g, s, targets, &BTreeSet::new());
    let src = net.node_of[&s];
    let sink = net.sink;

    // Install the seeds as initial flow, pushing one unit along each.
    for seed in seeds {
        let mut at = s;
        for &(e, next) in seed.steps() {
            let u = net.node_of[&at];
            let target_arc = next == seed.last() && targets.contains(&next);
            let a = *net.adj[u]
                .iter()
                .find(|&&a| {
                    let arc = &net.arcs[a];
                    arc.edge == e
                        && arc.cap > 0
                        && if target_arc {
                            arc.to == sink && arc.terminal == Some(next)
                        } else {
                            arc.to != sink && net.vertex_of[arc.to] == Some(next)
                        }
                })
                .expect("seed edge present in network");
            net.arcs[a].cap -= 1;
            net.arcs[a ^ 1].cap += 1;
            at = next;
        }
    }

    let pushed = net.max_flow(src, sink, Some(1));
    if pushed == 0 {
        return Ok(AugmentOutcome::Infeasible {
            flow: 3,
            cut: net.cut_edges(src),
        });
    }

    let pieces = net.decompose(src, 4);
    let mut by_terminal: Vec<Option<usize>> = vec![None; 3];
    let mut fourth: Option<usize> = None;
    for (i, (_, t)) in pieces.iter().enumerate() {
        match prescribed.iter().position(|&p| p == *t) {
            Some(slot) if by_terminal[slot].is_none() => by_terminal[slot] = Some(i),
            _ => fourth = Some(i),
        }
    }
    let (Some(p0), Some(p1), Some(p2), Some(p3)) =
        (by_terminal[0], by_terminal[1], by_terminal[2], fourth)
    else {
        let lost = prescribed
            .iter()
            .enumerate()
            .find(|(slot, _)| by_terminal[*slot].is_none())
            .map(|(_, &t)| t)
            .unwrap_or(prescribed[0]);
        return Err(ConnError::PrescribedEndsLost(lost));
    };
    let ordered: Vec<(Vec<EdgeId>, Vertex)> = [p0, p1, p2, p3]
        .iter()
        .map(|&i| pieces[i].clone())
        .collect();
    let bundle = bundle_from_decomposition(g, s, ordered);
    debug_assert!(bundle.validate(g));
    Ok(AugmentOutcome::Found(bundle))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad_star(leaves: u32) -> MultiGraph {
        let mut edges = Vec::new();
        for leaf in 1..=leaves {
            for _ in 0..4 {
                edges.push((0, leaf));
            }
        }
        MultiGraph::build(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn parallel_edges_count() {
        let g = MultiGraph::build(2, &[(0, 1), (0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(edge_connectivity(&g, Vertex(0), Vertex(1)).unwrap(), 4);
    }

    #[test]
    fn quad_star_leaves_are_four_connected() {
        let g = quad_star(4);
        assert_eq!(edge_connectivity(&g, Vertex(1), Vertex(2)).unwrap(), 4);
        let leaves: BTreeSet<Vertex> = (1..=4).map(Vertex).collect();
        assert!(pairwise_k_connected(&g, &leaves, 4).unwrap().is_ok());
    }

    #[test]
    fn path_endpoints_have_connectivity_one() {
        let g = MultiGraph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&g, Vertex(0), Vertex(3)).unwrap(), 1);
        let ends = BTreeSet::from([Vertex(0), Vertex(3)]);
        assert_eq!(
            pairwise_k_connected(&g, &ends, 2).unwrap(),
            PairwiseVerdict::Failing { u: Vertex(0), v: Vertex(3), connectivity: 1 }
        );
        assert!(pairwise_k_connected(&g, &ends, 0).unwrap().is_ok());
    }

    #[test]
    fn same_vertex_is_parameter_error() {
        let g = quad_star(1);
        assert_eq!(
            edge_connectivity(&g, Vertex(0), Vertex(0)),
            Err(ConnError::SameVertex(Vertex(0)))
        );
    }

    #[test]
    fn star_center_reaches_all_leaves() {
        let g = MultiGraph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let targets: BTreeSet<Vertex> = (1..=4).map(Vertex).collect();
        match disjoint_paths_to_set(&g, Vertex(0), &targets, 4, &BTreeSet::new()).unwrap() {
            DisjointPathsOutcome::Found(b) => {
                assert!(b.validate(&g));
                let ts: BTreeSet<Vertex> = b.targets().into_iter().collect();
                assert_eq!(ts, targets);
            }
            other => panic!("expected bundle, got {other:?}"),
        }
    }

    #[test]
    fn too_many_paths_certified_by_degree_cut() {
        let g = MultiGraph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let targets = BTreeSet::from([Vertex(1)]);
        match disjoint_paths_to_set(&g, Vertex(0), &targets, 2, &BTreeSet::new()).unwrap() {
            DisjointPathsOutcome::Infeasible { flow, cut } => {
                assert_eq!(flow, 1);
                assert_eq!(cut, BTreeSet::from([EdgeId(0)]));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn forbidden_interior_blocks_routes() {
        // 0-1-2 and 0-3-2: forbidding vertex 1 internally leaves one path.
        let g = MultiGraph::build(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        let targets = BTreeSet::from([Vertex(2)]);
        let forbidden = BTreeSet::from([Vertex(1)]);
        match disjoint_paths_to_set(&g, Vertex(0), &targets, 2, &forbidden).unwrap() {
            DisjointPathsOutcome::Infeasible { flow, .. } => assert_eq!(flow, 1),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn paths_meet_targets_only_at_end() {
        // Chain 0-1-2 with both 1 and 2 targets: only one path can exist,
        // and it must stop at 1.
        let g = MultiGraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let targets = BTreeSet::from([Vertex(1), Vertex(2)]);
        match disjoint_paths_to_set(&g, Vertex(0), &targets, 1, &BTreeSet::new()).unwrap() {
            DisjointPathsOutcome::Found(b) => {
                assert_eq!(b.paths[0].last(), Vertex(1));
                assert_eq!(b.paths[0].len(), 1);
            }
            other => panic!("expected bundle, got {other:?}"),
        }
    }

    #[test]
    fn augment_preserves_seeds_when_optimal() {
        let g = quad_star(4);
        // Seeds: three parallel edges from leaf 1's perspective? Use the
        // hub as source instead: paths 0->1, 0->2, 0->3 by single edges.
        let targets: BTreeSet<Vertex> = (1..=4).map(Vertex).collect();
        let seeds = [
            Walk::from_edges(&g, Vertex(0), &[EdgeId(0)]).unwrap(),
            Walk::from_edges(&g, Vertex(0), &[EdgeId(4)]).unwrap(),
            Walk::from_edges(&g, Vertex(0), &[EdgeId(8)]).unwrap(),
        ];
        let out = augment_with_prescribed_ends(
            &g,
            Vertex(0),
            &targets,
            [Vertex(1), Vertex(2), Vertex(3)],
            &seeds,
        )
        .unwrap();
        match out {
            AugmentOutcome::Found(b) => {
                assert!(b.validate(&g));
                assert_eq!(b.paths[0].last(), Vertex(1));
                assert_eq!(b.paths[1].last(), Vertex(2));
                assert_eq!(b.paths[2].last(), Vertex(3));
                // Seeds preserved verbatim.
                assert_eq!(b.paths[0], seeds[0]);
                assert_eq!(b.paths[1], seeds[1]);
                assert_eq!(b.paths[2], seeds[2]);
            }
            other => panic!("expected bundle, got {other:?}"),
        }
    }

    #[test]
    fn degree_three_source_is_infeasible_with_cut_of_three() {
        let g = MultiGraph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let targets: BTreeSet<Vertex> = (1..=3).map(Vertex).collect();
        let seeds = [
            Walk::from_edges(&g, Vertex(0), &[EdgeId(0)]).unwrap(),
            Walk::from_edges(&g, Vertex(0), &[EdgeId(1)]).unwrap(),
            Walk::from_edges(&g, Vertex(0), &[EdgeId(2)]).unwrap(),
        ];
        let out = augment_with_prescribed_ends(
            &g,
            Vertex(0),
            &targets,
            [Vertex(1), Vertex(2), Vertex(3)],
            &seeds,
        )
        .unwrap();
        match out {
            AugmentOutcome::Infeasible { flow, cut } => {
                assert_eq!(flow, 3);
                assert_eq!(cut.len(), 3);
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn augmentation_reroutes_through_longer_detour() {
        // Triangle-ish: s=0 with 4 channels to targets {4,5,6}, where the
        // fourth unit must take a detour through vertex 3.
        let g = MultiGraph::build(
            7,
            &[
                (0, 4), // seed 1
                (0, 5), // seed 2
                (0, 6), // seed 3
                (0, 3),
                (3, 6), // fourth path 0-3-6
            ],
        )
        .unwrap();
        let targets: BTreeSet<Vertex> = (4..=6).map(Vertex).collect();
        let seeds = [
            Walk::from_edges(&g, Vertex(0), &[EdgeId(0)]).unwrap(),
            Walk::from_edges(&g, Vertex(0), &[EdgeId(1)]).unwrap(),
            Walk::from_edges(&g, Vertex(0), &[EdgeId(2)]).unwrap(),
        ];
        let out = augment_with_prescribed_ends(
            &g,
            Vertex(0),
            &targets,
            [Vertex(4), Vertex(5), Vertex(6)],
            &seeds,
        )
        .unwrap();
        match out {
            AugmentOutcome::Found(b) => {
                assert!(b.validate(&g));
                assert_eq!(b.paths[3].last(), Vertex(6));
                assert_eq!(b.paths[3].len(), 2);
            }
            other => panic!("expected bundle, got {other:?}"),
        }
    }

    // Brute-force min-cut: minimum size of an edge set whose removal
    // separates u from v.
    fn brute_min_cut(g: &MultiGraph, u: Vertex, v: Vertex) -> u32 {
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        let m = ids.len();
        let mut best = m as u32;
        for mask in 0..(1u32 << m) {
            let removed: BTreeSet<EdgeId> = ids
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            if removed.len() as u32 >= best {
                continue;
            }
            // Reachability without removed edges.
            let mut seen = BTreeSet::from([u]);
            let mut stack = vec![u];
            while let Some(x) = stack.pop() {
                for &e in g.incident_edges(x).unwrap() {
                    if removed.contains(&e) {
                        continue;
                    }
                    let y = g.other_end(e, x).unwrap();
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            if !seen.contains(&v) {
                best = removed.len() as u32;
            }
        }
        best
    }

    #[test]
    fn flow_matches_brute_force_cut_on_small_graphs() {
        let fixtures = [
            MultiGraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap(),
            MultiGraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
            MultiGraph::build(5, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4), (2, 2)]).unwrap(),
            MultiGraph::build(3, &[(0, 1), (1, 2)]).unwrap(),
        ];
        for g in &fixtures {
            let verts: Vec<Vertex> = g.vertices().collect();
            for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    assert_eq!(
                        edge_connectivity(g, u, v).unwrap(),
                        brute_min_cut(g, u, v),
                        "disagreement on {u}-{v}"
                    );
                }
            }
        }
    }
}
