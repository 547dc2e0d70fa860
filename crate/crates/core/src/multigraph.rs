//! Core multigraph representation: loops and parallel edges are allowed,
//! and every edge carries a stable identifier that is never reused within
//! one graph lineage, so rewrites can be tracked edge by edge.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

/// Vertex identifier (small dense nonnegative integer).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex(pub u32);

/// Edge identifier. Ids are assigned from a monotone counter and never
/// reused after deletion, so parallel edges stay distinguishable and
/// provenance maps across rewrites stay unambiguous.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    UnknownVertex(Vertex),
    UnknownEdge(EdgeId),
    /// An endpoint in a `build` edge list referenced a vertex outside
    /// `0..vertex_count`; `index` names the offending list entry.
    EndpointOutOfRange {
        index: usize,
        endpoint: u32,
        vertex_count: u32,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            GraphError::UnknownEdge(e) => write!(f, "unknown edge {e}"),
            GraphError::EndpointOutOfRange {
                index,
                endpoint,
                vertex_count,
            } => write!(
                f,
                "edge entry {index} has endpoint {endpoint} but the graph has {vertex_count} vertices"
            ),
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite multigraph. Values are immutable: every mutation returns a
/// new graph, which keeps all intermediate versions of a rewrite
/// sequence alive and comparable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiGraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeMap<EdgeId, (Vertex, Vertex)>,
    incidence: BTreeMap<Vertex, Vec<EdgeId>>,
    next_edge_id: u32,
}

impl MultiGraph {
    /// Builds a graph on vertices `0..vertex_count` with edges taken from
    /// `edge_list` in order; edge ids are assigned 0, 1, … in list order.
    pub fn build(vertex_count: u32, edge_list: &[(u32, u32)]) -> Result<MultiGraph, GraphError> {
        let mut g = MultiGraph::empty(vertex_count);
        for (index, &(u, v)) in edge_list.iter().enumerate() {
            for endpoint in [u, v] {
                if endpoint >= vertex_count {
                    return Err(GraphError::EndpointOutOfRange {
                        index,
                        endpoint,
                        vertex_count,
                    });
                }
            }
            g.push_edge(Vertex(u), Vertex(v));
        }
        Ok(g)
    }

    /// Graph with vertices `0..vertex_count` and no edges.
    pub fn empty(vertex_count: u32) -> MultiGraph {
        let vertices: BTreeSet<Vertex> = (0..vertex_count).map(Vertex).collect();
        let incidence = vertices.iter().map(|&v| (v, Vec::new())).collect();
        MultiGraph {
            vertices,
            edges: BTreeMap::new(),
            incidence,
            next_edge_id: 0,
        }
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> EdgeId {
        let id = EdgeId(self.next_edge_id);
        self.next_edge_id += 1;
        self.edges.insert(id, (u, v));
        self.incidence.get_mut(&u).expect("endpoint exists").push(id);
        if u != v {
            self.incidence.get_mut(&v).expect("endpoint exists").push(id);
        }
        id
    }

    /// Returns a new graph with one extra edge between `u` and `v`
    /// (`u == v` makes a loop), together with the fresh edge id.
    pub fn add_edge(&self, u: Vertex, v: Vertex) -> Result<(MultiGraph, EdgeId), GraphError> {
        for w in [u, v] {
            if !self.vertices.contains(&w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        let mut g = self.clone();
        let id = g.push_edge(u, v);
        Ok((g, id))
    }

    /// Returns a new graph with one extra isolated vertex and its id.
    pub fn add_vertex(&self) -> (MultiGraph, Vertex) {
        let next = self.vertices.iter().next_back().map_or(0, |v| v.0 + 1);
        let v = Vertex(next);
        let mut g = self.clone();
        g.vertices.insert(v);
        g.incidence.insert(v, Vec::new());
        (g, v)
    }

    /// Deletes a set of edges. The vertex set and all surviving edge ids
    /// are unchanged, and the id counter does not rewind.
    pub fn delete_edges(&self, ids: &BTreeSet<EdgeId>) -> Result<MultiGraph, GraphError> {
        for id in ids {
            if !self.edges.contains_key(id) {
                return Err(GraphError::UnknownEdge(*id));
            }
        }
        let mut g = self.clone();
        for id in ids {
            let (u, v) = g.edges.remove(id).expect("checked above");
            g.incidence.get_mut(&u).expect("endpoint exists").retain(|e| e != id);
            if u != v {
                g.incidence.get_mut(&v).expect("endpoint exists").retain(|e| e != id);
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    /// Edges with their endpoint pairs, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Vertex, Vertex)> + '_ {
        self.edges.iter().map(|(&e, &(u, v))| (e, u, v))
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(Vertex, Vertex), GraphError> {
        self.edges.get(&e).copied().ok_or(GraphError::UnknownEdge(e))
    }

    pub fn is_loop(&self, e: EdgeId) -> Result<bool, GraphError> {
        let (u, v) = self.endpoints(e)?;
        Ok(u == v)
    }

    /// The endpoint of `e` other than `v`; for a loop at `v` this is `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Result<Vertex, GraphError> {
        let (a, b) = self.endpoints(e)?;
        if a == v {
            Ok(b)
        } else if b == v {
            Ok(a)
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Number of edge incidences at `v`; a loop contributes 2.
    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        let inc = self
            .incidence
            .get(&v)
            .ok_or(GraphError::UnknownVertex(v))?;
        let loops = inc
            .iter()
            .filter(|&&e| self.edges[&e].0 == self.edges[&e].1)
            .count();
        Ok(inc.len() + loops)
    }

    /// Edge ids incident with `v`, each listed once (loops included once),
    /// in increasing id order.
    pub fn incident_edges(&self, v: Vertex) -> Result<&[EdgeId], GraphError> {
        self.incidence
            .get(&v)
            .map(Vec::as_slice)
            .ok_or(GraphError::UnknownVertex(v))
    }

    /// Distinct neighbors of `v` (via any parallel edge; `v` itself if a
    /// loop is present), sorted.
    pub fn neighbors(&self, v: Vertex) -> Result<BTreeSet<Vertex>, GraphError> {
        let inc = self.incident_edges(v)?;
        Ok(inc
            .iter()
            .map(|&e| self.other_end(e, v).expect("incident"))
            .collect())
    }

    /// Simple adjacency view: loops dropped, parallel edges collapsed.
    pub fn simple_adjacency(&self) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            self.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for (_, u, v) in self.edges() {
            if u != v {
                adj.get_mut(&u).expect("vertex").insert(v);
                adj.get_mut(&v).expect("vertex").insert(u);
            }
        }
        adj
    }

    /// True if every vertex of `within` is reachable from every other
    /// using only edges from `edge_set`.
    pub fn is_connected_over(&self, edge_set: &BTreeSet<EdgeId>) -> bool {
        let mut touched: BTreeSet<Vertex> = BTreeSet::new();
        for e in edge_set {
            if let Ok((u, v)) = self.endpoints(*e) {
                touched.insert(u);
                touched.insert(v);
            }
        }
        let Some(&start) = touched.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = Vec::from([start]);
        while let Some(v) = stack.pop() {
            for &e in self.incident_edges(v).expect("vertex") {
                if !edge_set.contains(&e) {
                    continue;
                }
                let w = self.other_end(e, v).expect("incident");
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen == touched
    }
}

/// An alternating sequence `v0, e1, v1, …, ek, vk` where each `ei` joins
/// `v(i-1)` and `vi` in the owning graph. A walk of length zero is a
/// single vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Walk {
    start: Vertex,
    steps: Vec<(EdgeId, Vertex)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WalkError {
    UnknownVertex(Vertex),
    UnknownEdge(EdgeId),
    /// Step `position` uses an edge that does not join the walk's current
    /// vertex to the claimed next vertex.
    BadIncidence { position: usize },
}

impl fmt::Display for WalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkError::UnknownVertex(v) => write!(f, "walk references unknown vertex {v}"),
            WalkError::UnknownEdge(e) => write!(f, "walk references unknown edge {e}"),
            WalkError::BadIncidence { position } => {
                write!(f, "walk step {position} is not a valid incidence")
            }
        }
    }
}

impl core::error::Error for WalkError {}

impl Walk {
    /// Validates the alternating sequence against `g`.
    pub fn new(g: &MultiGraph, start: Vertex, steps: Vec<(EdgeId, Vertex)>) -> Result<Walk, WalkError> {
        if !g.contains_vertex(start) {
            return Err(WalkError::UnknownVertex(start));
        }
        let mut at = start;
        for (position, &(e, v)) in steps.iter().enumerate() {
            let (a, b) = g.endpoints(e).map_err(|_| WalkError::UnknownEdge(e))?;
            if !g.contains_vertex(v) {
                return Err(WalkError::UnknownVertex(v));
            }
            let joins = (a == at && b == v) || (b == at && a == v);
            if !joins {
                return Err(WalkError::BadIncidence { position });
            }
            at = v;
        }
        Ok(Walk { start, steps })
    }

    /// Builds the walk along `edges` starting at `start`, inferring the
    /// intermediate vertices.
    pub fn from_edges(g: &MultiGraph, start: Vertex, edges: &[EdgeId]) -> Result<Walk, WalkError> {
        let mut at = start;
        let mut steps = Vec::with_capacity(edges.len());
        for (position, &e) in edges.iter().enumerate() {
            let (a, b) = g.endpoints(e).map_err(|_| WalkError::UnknownEdge(e))?;
            let next = if a == at {
                b
            } else if b == at {
                a
            } else {
                return Err(WalkError::BadIncidence { position });
            };
            steps.push((e, next));
            at = next;
        }
        Ok(Walk { start, steps })
    }

    pub fn single_vertex(v: Vertex) -> Walk {
        Walk {
            start: v,
            steps: Vec::new(),
        }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.start
    }

    pub fn last(&self) -> Vertex {
        self.steps.last().map_or(self.start, |&(_, v)| v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        core::iter::once(self.start).chain(self.steps.iter().map(|&(_, v)| v))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.steps.iter().map(|&(e, _)| e)
    }

    pub fn steps(&self) -> &[(EdgeId, Vertex)] {
        &self.steps
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges().collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices().collect()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices().any(|w| w == v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges().any(|f| f == e)
    }

    /// Vertices other than the two ends. For a cycle this is every vertex
    /// except the base vertex.
    pub fn internal_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let n = self.steps.len();
        self.steps
            .iter()
            .enumerate()
            .filter(move |&(i, _)| i + 1 < n)
            .map(|(_, &(_, v))| v)
    }

    /// All vertices distinct.
    pub fn is_path(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.vertices().all(|v| seen.insert(v))
    }

    /// Closed, at least one edge, all edges distinct, and no vertex other
    /// than the base visited twice.
    pub fn is_cycle(&self) -> bool {
        if self.steps.is_empty() || self.first() != self.last() {
            return false;
        }
        let mut seen_e = BTreeSet::new();
        if !self.edges().all(|e| seen_e.insert(e)) {
            return false;
        }
        let mut seen_v = BTreeSet::new();
        let k = self.steps.len();
        for (i, v) in self.vertices().enumerate() {
            if i == k {
                break;
            }
            if !seen_v.insert(v) {
                return false;
            }
        }
        true
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices: Vec<Vertex> = self.vertices().collect();
        vertices.reverse();
        let mut edges: Vec<EdgeId> = self.edges().collect();
        edges.reverse();
        let steps = edges
            .into_iter()
            .zip(vertices.into_iter().skip(1))
            .collect();
        Walk {
            start: self.last(),
            steps,
        }
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn concat(&self, other: &Walk) -> Option<Walk> {
        if self.last() != other.first() {
            return None;
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Some(Walk {
            start: self.start,
            steps,
        })
    }

    /// Removes every repeated-vertex excursion: whenever a vertex occurs
    /// twice, the segment between the two occurrences is spliced out. The
    /// ends are preserved, the edge set of the result is a subset of the
    /// original's, and the result is a path.
    pub fn spliced_to_path(&self) -> Walk {
        let mut vertices: Vec<Vertex> = self.vertices().collect();
        let mut edges: Vec<EdgeId> = self.edges().collect();
        loop {
            let mut first_at: BTreeMap<Vertex, usize> = BTreeMap::new();
            let mut splice: Option<(usize, usize)> = None;
            for (i, &v) in vertices.iter().enumerate() {
                if let Some(&j) = first_at.get(&v) {
                    splice = Some((j, i));
                    break;
                }
                first_at.insert(v, i);
            }
            match splice {
                None => break,
                Some((j, i)) => {
                    vertices.drain(j + 1..=i);
                    edges.drain(j..i);
                }
            }
        }
        let steps = edges
            .into_iter()
            .zip(vertices.iter().copied().skip(1))
            .collect();
        Walk {
            start: vertices[0],
            steps,
        }
    }

    /// Truncates the walk at the first position (strictly after the
    /// start) whose vertex satisfies `stop`; returns `None` if no such
    /// position exists.
    pub fn truncate_at_first<F: Fn(Vertex) -> bool>(&self, stop: F) -> Option<Walk> {
        for (i, v) in self.vertices().enumerate().skip(1) {
            if stop(v) {
                return Some(Walk {
                    start: self.start,
                    steps: self.steps[..i].to_vec(),
                });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad_star_list() -> Vec<(u32, u32)> {
        let mut edges = Vec::new();
        for leaf in 1..=4 {
            for _ in 0..4 {
                edges.push((0, leaf));
            }
        }
        edges
    }

    #[test]
    fn build_parallel_edges() {
        let g = MultiGraph::build(2, &[(0, 1), (0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(Vertex(0)).unwrap(), 4);
        assert_eq!(g.degree(Vertex(1)).unwrap(), 4);
    }

    #[test]
    fn build_loop_counts_twice() {
        let g = MultiGraph::build(1, &[(0, 0)]).unwrap();
        assert_eq!(g.degree(Vertex(0)).unwrap(), 2);
    }

    #[test]
    fn build_quad_star() {
        let g = MultiGraph::build(5, &quad_star_list()).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.degree(Vertex(0)).unwrap(), 16);
    }

    #[test]
    fn build_rejects_bad_endpoint() {
        let err = MultiGraph::build(2, &[(0, 1), (0, 2)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::EndpointOutOfRange {
                index: 1,
                endpoint: 2,
                vertex_count: 2
            }
        );
    }

    #[test]
    fn degree_unknown_vertex() {
        let g = MultiGraph::build(2, &[(0, 1)]).unwrap();
        assert!(matches!(g.degree(Vertex(7)), Err(GraphError::UnknownVertex(_))));
    }

    #[test]
    fn delete_edges_cases() {
        let path = MultiGraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let all: BTreeSet<EdgeId> = path.edge_ids().collect();
        let g = path.delete_edges(&all).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);

        let same = path.delete_edges(&BTreeSet::new()).unwrap();
        assert_eq!(same, path);

        let quad = MultiGraph::build(2, &[(0, 1), (0, 1), (0, 1), (0, 1)]).unwrap();
        let g = quad.delete_edges(&BTreeSet::from([EdgeId(0)])).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(!g.contains_edge(EdgeId(0)));
        assert!(g.contains_edge(EdgeId(3)));
    }

    #[test]
    fn edge_ids_not_reused_after_delete() {
        let g = MultiGraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        let g = g.delete_edges(&BTreeSet::from([EdgeId(1)])).unwrap();
        let (g, id) = g.add_edge(Vertex(0), Vertex(1)).unwrap();
        assert_eq!(id, EdgeId(2));
        assert!(g.contains_edge(EdgeId(0)));
        assert!(!g.contains_edge(EdgeId(1)));
    }

    #[test]
    fn walk_validation() {
        let g = MultiGraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let w = Walk::from_edges(&g, Vertex(0), &[EdgeId(0), EdgeId(1)]).unwrap();
        assert_eq!(w.first(), Vertex(0));
        assert_eq!(w.last(), Vertex(2));
        assert!(w.is_path());
        assert!(!w.is_cycle());

        let c = Walk::from_edges(&g, Vertex(0), &[EdgeId(0), EdgeId(1), EdgeId(2)]).unwrap();
        assert!(c.is_cycle());
        assert!(!c.is_path());

        let err = Walk::from_edges(&g, Vertex(0), &[EdgeId(1)]).unwrap_err();
        assert_eq!(err, WalkError::BadIncidence { position: 0 });
    }

    #[test]
    fn loop_walk_is_cycle() {
        let g = MultiGraph::build(1, &[(0, 0)]).unwrap();
        let c = Walk::from_edges(&g, Vertex(0), &[EdgeId(0)]).unwrap();
        assert!(c.is_cycle());
    }

    #[test]
    fn splice_keeps_ends_and_subsets_edges() {
        // 0-1-2-1-3 style walk: revisits vertex 1.
        let g = MultiGraph::build(4, &[(0, 1), (1, 2), (2, 1), (1, 3)]).unwrap();
        let w = Walk::from_edges(&g, Vertex(0), &[EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)]).unwrap();
        assert!(!w.is_path());
        let p = w.spliced_to_path();
        assert!(p.is_path());
        assert_eq!(p.first(), Vertex(0));
        assert_eq!(p.last(), Vertex(3));
        assert!(p.edge_set().is_subset(&w.edge_set()));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = MultiGraph> {
            (1u32..7, proptest::collection::vec((0u32..6, 0u32..6), 0..12)).prop_map(|(n, raw)| {
                let edges: Vec<(u32, u32)> =
                    raw.into_iter().map(|(u, v)| (u % n, v % n)).collect();
                MultiGraph::build(n, &edges).expect("endpoints reduced mod n")
            })
        }

        proptest! {
            #[test]
            fn degree_sum_is_twice_edge_count(g in arb_graph()) {
                let sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
                prop_assert_eq!(sum, 2 * g.edge_count());
            }

            #[test]
            fn delete_preserves_nonincident_degrees(g in arb_graph(), pick in proptest::collection::vec(any::<u32>(), 0..4)) {
                let ids: Vec<EdgeId> = g.edge_ids().collect();
                if ids.is_empty() {
                    return Ok(());
                }
                let chosen: BTreeSet<EdgeId> =
                    pick.iter().map(|&i| ids[(i as usize) % ids.len()]).collect();
                let touched: BTreeSet<Vertex> = chosen
                    .iter()
                    .flat_map(|&e| {
                        let (u, v) = g.endpoints(e).unwrap();
                        [u, v]
                    })
                    .collect();
                let h = g.delete_edges(&chosen).unwrap();
                for v in g.vertices() {
                    if !touched.contains(&v) {
                        prop_assert_eq!(g.degree(v).unwrap(), h.degree(v).unwrap());
                    }
                }
            }
        }
    }
}
