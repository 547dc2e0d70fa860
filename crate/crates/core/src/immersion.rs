//! Immersion maps and their verifier, plus an exhaustive backtracking
//! finder used as the repository-wide oracle.
//!
//! An immersion of a pattern `H` in a host `G` maps vertices of `H` to
//! distinct vertices of `G` and edges of `H` to paths (cycles for loops)
//! of `G` that are pairwise edge-disjoint, such that the image of a
//! vertex never lies on the image of a non-incident edge.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::multigraph::{EdgeId, MultiGraph, Vertex, Walk, WalkError};

/// A candidate immersion of `pattern` in `host`. The maps are not
/// validated at construction; run [`ImmersionMap::verify`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ImmersionMap {
    pub(crate) pattern: MultiGraph,
    pub(crate) host: MultiGraph,
    pub(crate) vertex_map: BTreeMap<Vertex, Vertex>,
    pub(crate) edge_map: BTreeMap<EdgeId, Walk>,
}

/// A defect in the shape of the maps, as opposed to a violated immersion
/// condition: partial maps, references to missing vertices or edges, or
/// an edge image that is not a walk of the host at all.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InputError {
    MissingVertexImage(Vertex),
    MissingEdgeImage(EdgeId),
    UnknownPatternVertex(Vertex),
    UnknownPatternEdge(EdgeId),
    ImageNotInHost { pattern_vertex: Vertex, image: Vertex },
    InvalidWalk { pattern_edge: EdgeId, error: WalkError },
    /// An operation requiring a verified immersion was handed a map with
    /// violations.
    NotAnImmersion,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::MissingVertexImage(v) => write!(f, "no image for pattern vertex {v}"),
            InputError::MissingEdgeImage(e) => write!(f, "no image for pattern edge {e}"),
            InputError::UnknownPatternVertex(v) => write!(f, "map names {v}, not a pattern vertex"),
            InputError::UnknownPatternEdge(e) => write!(f, "map names {e}, not a pattern edge"),
            InputError::ImageNotInHost { pattern_vertex, image } => {
                write!(f, "image {image} of {pattern_vertex} is not a host vertex")
            }
            InputError::InvalidWalk { pattern_edge, error } => {
                write!(f, "image of {pattern_edge} is not a walk of the host: {error}")
            }
            InputError::NotAnImmersion => write!(f, "map does not satisfy the immersion conditions"),
        }
    }
}

impl core::error::Error for InputError {}

/// A violated condition of the immersion definition, with witnesses.
/// [`Violation::condition`] gives the number of the violated bullet
/// (1: injectivity, 2: non-loop path ends, 3: loop cycles,
/// 4: vertex images avoid non-incident edge images, 5: edge-disjointness).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    ImagesCoincide { u: Vertex, v: Vertex, image: Vertex },
    EdgeImageNotPath { edge: EdgeId },
    EdgeImageWrongEnds { edge: EdgeId, want: (Vertex, Vertex), got: (Vertex, Vertex) },
    LoopImageNotCycle { edge: EdgeId },
    LoopImageMissesBase { edge: EdgeId, base: Vertex },
    VertexOnNonIncidentEdge { vertex: Vertex, image: Vertex, edge: EdgeId },
    EdgeImagesShareEdge { first: EdgeId, second: EdgeId, shared: EdgeId },
}

impl Violation {
    pub fn condition(&self) -> u8 {
        match self {
            Violation::ImagesCoincide { .. } => 1,
            Violation::EdgeImageNotPath { .. } | Violation::EdgeImageWrongEnds { .. } => 2,
            Violation::LoopImageNotCycle { .. } | Violation::LoopImageMissesBase { .. } => 3,
            Violation::VertexOnNonIncidentEdge { .. } => 4,
            Violation::EdgeImagesShareEdge { .. } => 5,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ImagesCoincide { u, v, image } => {
                write!(f, "condition 1: {u} and {v} both map to {image}")
            }
            Violation::EdgeImageNotPath { edge } => {
                write!(f, "condition 2: image of {edge} is not a path")
            }
            Violation::EdgeImageWrongEnds { edge, want, got } => write!(
                f,
                "condition 2: image of {edge} has ends {},{} but must join {},{}",
                got.0, got.1, want.0, want.1
            ),
            Violation::LoopImageNotCycle { edge } => {
                write!(f, "condition 3: image of loop {edge} is not a cycle")
            }
            Violation::LoopImageMissesBase { edge, base } => {
                write!(f, "condition 3: cycle for loop {edge} avoids base image {base}")
            }
            Violation::VertexOnNonIncidentEdge { vertex, image, edge } => write!(
                f,
                "condition 4: image {image} of {vertex} lies on the image of non-incident {edge}"
            ),
            Violation::EdgeImagesShareEdge { first, second, shared } => write!(
                f,
                "condition 5: images of {first} and {second} share host edge {shared}"
            ),
        }
    }
}

/// Verifier outcome: either every condition holds or a list of violations
/// with concrete witnesses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Ok,
    Violations(Vec<Violation>),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

impl ImmersionMap {
    pub fn new(
        pattern: MultiGraph,
        host: MultiGraph,
        vertex_map: BTreeMap<Vertex, Vertex>,
        edge_map: BTreeMap<EdgeId, Walk>,
    ) -> ImmersionMap {
        ImmersionMap {
            pattern,
            host,
            vertex_map,
            edge_map,
        }
    }

    /// The identity immersion of `g` in itself: each edge maps to its own
    /// one-edge path (loops to one-edge cycles).
    pub fn identity(g: &MultiGraph) -> ImmersionMap {
        let vertex_map = g.vertices().map(|v| (v, v)).collect();
        let edge_map = g
            .edges()
            .map(|(e, u, _)| {
                let walk = Walk::from_edges(g, u, &[e]).expect("edge of g");
                (e, walk)
            })
            .collect();
        ImmersionMap::new(g.clone(), g.clone(), vertex_map, edge_map)
    }

    /// Converts a subgraph inclusion into an immersion: the pattern is a
    /// fresh graph isomorphic to the chosen subgraph, each pattern edge
    /// mapping to its own one-edge path.
    pub fn from_subgraph(host: &MultiGraph, edge_set: &BTreeSet<EdgeId>) -> ImmersionMap {
        let mut verts: BTreeSet<Vertex> = BTreeSet::new();
        for &e in edge_set {
            let (u, v) = host.endpoints(e).expect("subgraph edge");
            verts.insert(u);
            verts.insert(v);
        }
        let ordered: Vec<Vertex> = verts.into_iter().collect();
        let index: BTreeMap<Vertex, u32> = ordered
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        let edge_list: Vec<(u32, u32)> = edge_set
            .iter()
            .map(|&e| {
                let (u, v) = host.endpoints(e).expect("subgraph edge");
                (index[&u], index[&v])
            })
            .collect();
        let pattern = MultiGraph::build(ordered.len() as u32, &edge_list).expect("valid indices");
        let vertex_map = ordered
            .iter()
            .enumerate()
            .map(|(i, &v)| (Vertex(i as u32), v))
            .collect();
        let edge_map = edge_set
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let (u, _) = host.endpoints(e).expect("subgraph edge");
                (EdgeId(i as u32), Walk::from_edges(host, u, &[e]).expect("edge"))
            })
            .collect();
        ImmersionMap::new(pattern, host.clone(), vertex_map, edge_map)
    }

    pub fn pattern(&self) -> &MultiGraph {
        &self.pattern
    }

    pub fn host(&self) -> &MultiGraph {
        &self.host
    }

    pub fn vertex_image(&self, v: Vertex) -> Option<Vertex> {
        self.vertex_map.get(&v).copied()
    }

    pub fn edge_image(&self, e: EdgeId) -> Option<&Walk> {
        self.edge_map.get(&e)
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    pub fn edge_map(&self) -> &BTreeMap<EdgeId, Walk> {
        &self.edge_map
    }

    /// All host vertices used as vertex images.
    pub fn vertex_images(&self) -> BTreeSet<Vertex> {
        self.vertex_map.values().copied().collect()
    }

    /// All host edges used by edge images.
    pub fn used_host_edges(&self) -> BTreeSet<EdgeId> {
        self.edge_map.values().flat_map(|w| w.edges()).collect()
    }

    /// Checks the five conditions of the immersion definition. Input
    /// defects (partial or dangling maps, non-walk images) are reported
    /// separately from violations.
    pub fn verify(&self) -> Result<Verdict, InputError> {
        // Totality and well-formedness first.
        for v in self.vertex_map.keys() {
            if !self.pattern.contains_vertex(*v) {
                return Err(InputError::UnknownPatternVertex(*v));
            }
        }
        for e in self.edge_map.keys() {
            if !self.pattern.contains_edge(*e) {
                return Err(InputError::UnknownPatternEdge(*e));
            }
        }
        for v in self.pattern.vertices() {
            match self.vertex_map.get(&v) {
                None => return Err(InputError::MissingVertexImage(v)),
                Some(&img) => {
                    if !self.host.contains_vertex(img) {
                        return Err(InputError::ImageNotInHost {
                            pattern_vertex: v,
                            image: img,
                        });
                    }
                }
            }
        }
        for (e, _, _) in self.pattern.edges() {
            match self.edge_map.get(&e) {
                None => return Err(InputError::MissingEdgeImage(e)),
                Some(walk) => {
                    let revalidated = Walk::new(&self.host, walk.first(), walk.steps().to_vec());
                    if let Err(error) = revalidated {
                        return Err(InputError::InvalidWalk {
                            pattern_edge: e,
                            error,
                        });
                    }
                }
            }
        }

        let mut violations = Vec::new();

        // Condition 1: injectivity.
        let mut by_image: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for (&v, &img) in &self.vertex_map {
            if let Some(&u) = by_image.get(&img) {
                violations.push(Violation::ImagesCoincide { u, v, image: img });
            } else {
                by_image.insert(img, v);
            }
        }

        // Conditions 2 and 3: path/cycle shape and ends.
        for (e, u, v) in self.pattern.edges() {
            let walk = &self.edge_map[&e];
            if u != v {
                if !walk.is_path() {
                    violations.push(Violation::EdgeImageNotPath { edge: e });
                    continue;
                }
                let want = (self.vertex_map[&u], self.vertex_map[&v]);
                let got = (walk.first(), walk.last());
                if (got.0, got.1) != want && (got.1, got.0) != want {
                    violations.push(Violation::EdgeImageWrongEnds { edge: e, want, got });
                }
            } else {
                if !walk.is_cycle() {
                    violations.push(Violation::LoopImageNotCycle { edge: e });
                    continue;
                }
                let base = self.vertex_map[&u];
                if !walk.contains_vertex(base) {
                    violations.push(Violation::LoopImageMissesBase { edge: e, base });
                }
            }
        }

        // Condition 4: vertex images avoid images of non-incident edges.
        for (&v, &img) in &self.vertex_map {
            for (e, a, b) in self.pattern.edges() {
                if v == a || v == b {
                    continue;
                }
                if self.edge_map[&e].contains_vertex(img) {
                    violations.push(Violation::VertexOnNonIncidentEdge {
                        vertex: v,
                        image: img,
                        edge: e,
                    });
                }
            }
        }

        // Condition 5: pairwise edge-disjoint images.
        let mut edge_user: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        for (&e, walk) in &self.edge_map {
            for host_edge in walk.edges() {
                if let Some(&first) = edge_user.get(&host_edge) {
                    violations.push(Violation::EdgeImagesShareEdge {
                        first,
                        second: e,
                        shared: host_edge,
                    });
                } else {
                    edge_user.insert(host_edge, e);
                }
            }
        }

        if violations.is_empty() {
            Ok(Verdict::Ok)
        } else {
            Ok(Verdict::Violations(violations))
        }
    }

    /// True iff every shared vertex of two edge images is the image of a
    /// pattern vertex incident with both edges. Requires a verified map.
    pub fn is_subdivision_map(&self) -> Result<bool, InputError> {
        if !self.verify()?.is_ok() {
            return Err(InputError::NotAnImmersion);
        }
        let edges: Vec<(EdgeId, Vertex, Vertex)> = self.pattern.edges().collect();
        for (i, &(e, eu, ev)) in edges.iter().enumerate() {
            let ve = self.edge_map[&e].vertex_set();
            for &(f, fu, fv) in &edges[i + 1..] {
                let vf = self.edge_map[&f].vertex_set();
                for shared in ve.intersection(&vf) {
                    let witnessed = [eu, ev]
                        .iter()
                        .any(|&x| (x == fu || x == fv) && self.vertex_map[&x] == *shared);
                    if !witnessed {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// True iff every vertex image lies in `s`.
    pub fn is_rooted(&self, s: &BTreeSet<Vertex>) -> bool {
        self.vertex_map.values().all(|img| s.contains(img))
    }
}

/// Outcome of [`find_immersion`]: `NotFound` certifies exhaustion of the
/// whole search space, while `BudgetExhausted` means the node-expansion
/// limit was hit first. The two are never conflated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FindOutcome {
    Found(ImmersionMap),
    NotFound,
    BudgetExhausted,
}

impl FindOutcome {
    pub fn found(&self) -> Option<&ImmersionMap> {
        match self {
            FindOutcome::Found(m) => Some(m),
            _ => None,
        }
    }
}

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Exhaustive search for an immersion of `pattern` in `host`, optionally
/// rooted at `roots` (all vertex images constrained to lie in that set).
///
/// Pattern vertices are mapped first (in id order, candidates in host id
/// order, pruned by degree), then edges are routed one at a time by a
/// path search ordered shortest-first, with full backtracking across
/// both phases. `budget` bounds the number of node expansions, making
/// the cutoff deterministic and machine-independent.
pub fn find_immersion(
    host: &MultiGraph,
    pattern: &MultiGraph,
    roots: Option<&BTreeSet<Vertex>>,
    budget: u64,
) -> FindOutcome {
    let mut search = Search {
        host,
        pattern,
        roots,
        remaining: budget,
        out_of_budget: false,
        pattern_vertices: pattern.vertices().collect(),
        pattern_edges: pattern.edges().collect(),
        vmap: BTreeMap::new(),
        used_images: BTreeSet::new(),
        used_edges: BTreeSet::new(),
        emap: BTreeMap::new(),
    };
    if search.assign_vertex(0) {
        let map = ImmersionMap::new(
            pattern.clone(),
            host.clone(),
            search.vmap.clone(),
            search.emap.clone(),
        );
        debug_assert!(matches!(map.verify(), Ok(Verdict::Ok)));
        FindOutcome::Found(map)
    } else if search.out_of_budget {
        FindOutcome::BudgetExhausted
    } else {
        FindOutcome::NotFound
    }
}

struct Search<'a> {
    host: &'a MultiGraph,
    pattern: &'a MultiGraph,
    roots: Option<&'a BTreeSet<Vertex>>,
    remaining: u64,
    out_of_budget: bool,
    pattern_vertices: Vec<Vertex>,
    pattern_edges: Vec<(EdgeId, Vertex, Vertex)>,
    vmap: BTreeMap<Vertex, Vertex>,
    used_images: BTreeSet<Vertex>,
    used_edges: BTreeSet<EdgeId>,
    emap: BTreeMap<EdgeId, Walk>,
}

impl<'a> Search<'a> {
    fn spend(&mut self) -> bool {
        if self.out_of_budget {
            return false;
        }
        if self.remaining == 0 {
            self.out_of_budget = true;
            return false;
        }
        self.remaining -= 1;
        true
    }

    fn assign_vertex(&mut self, i: usize) -> bool {
        if i == self.pattern_vertices.len() {
            return self.route_edge(0);
        }
        let pv = self.pattern_vertices[i];
        let want_degree = self.pattern.degree(pv).expect("pattern vertex");
        let candidates: Vec<Vertex> = self
            .host
            .vertices()
            .filter(|hv| !self.used_images.contains(hv))
            .filter(|hv| self.roots.is_none_or(|r| r.contains(hv)))
            .filter(|&hv| self.host.degree(hv).expect("host vertex") >= want_degree)
            .collect();
        for hv in candidates {
            if !self.spend() {
                return false;
            }
            self.vmap.insert(pv, hv);
            self.used_images.insert(hv);
            if self.assign_vertex(i + 1) {
                return true;
            }
            self.vmap.remove(&pv);
            self.used_images.remove(&hv);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }

    fn route_edge(&mut self, j: usize) -> bool {
        if j == self.pattern_edges.len() {
            return true;
        }
        let (pe, u, v) = self.pattern_edges[j];
        let a = self.vmap[&u];
        let b = self.vmap[&v];
        if u != v {
            let dist = self.heuristic_distances(b, a);
            let mut visited = BTreeSet::from([a]);
            let mut walk_edges = Vec::new();
            let mut walk_vertices = Vec::from([a]);
            self.extend_path(j, pe, b, &dist, &mut visited, &mut walk_edges, &mut walk_vertices)
        } else {
            // Loop: a cycle through `a`, realized as a first edge plus a
            // path from its far end back to `a`.
            let incident: Vec<EdgeId> = self
                .host
                .incident_edges(a)
                .expect("image vertex")
                .iter()
                .copied()
                .filter(|e| !self.used_edges.contains(e))
                .collect();
            for e0 in incident {
                if !self.spend() {
                    return false;
                }
                let w = self.host.other_end(e0, a).expect("incident");
                if w == a {
                    // A host loop is a cycle of length one.
                    let cycle = Walk::from_edges(self.host, a, &[e0]).expect("host loop");
                    if self.try_walk(j, pe, cycle) {
                        return true;
                    }
                    if self.out_of_budget {
                        return false;
                    }
                    continue;
                }
                let dist = self.heuristic_distances(a, w);
                let mut visited = BTreeSet::from([w]);
                let mut walk_edges = Vec::from([e0]);
                let mut walk_vertices = Vec::from([a, w]);
                if self.extend_path(j, pe, a, &dist, &mut visited, &mut walk_edges, &mut walk_vertices)
                {
                    return true;
                }
                if self.out_of_budget {
                    return false;
                }
            }
            false
        }
    }

    /// DFS extension of the current partial walk toward `target`.
    /// Internal vertices must avoid every vertex image; arrival at
    /// `target` completes a candidate and recurses into the next edge.
    #[allow(clippy::too_many_arguments)]
    fn extend_path(
        &mut self,
        j: usize,
        pe: EdgeId,
        target: Vertex,
        dist: &BTreeMap<Vertex, usize>,
        visited: &mut BTreeSet<Vertex>,
        walk_edges: &mut Vec<EdgeId>,
        walk_vertices: &mut Vec<Vertex>,
    ) -> bool {
        let at = *walk_vertices.last().expect("nonempty");
        if at == target {
            let start = walk_vertices[0];
            let walk = Walk::from_edges(self.host, start, walk_edges).expect("built stepwise");
            return self.try_walk(j, pe, walk);
        }
        let mut extensions: Vec<(usize, EdgeId, Vertex)> = Vec::new();
        for &e in self.host.incident_edges(at).expect("walk vertex") {
            if self.used_edges.contains(&e) || walk_edges.contains(&e) {
                continue;
            }
            let w = self.host.other_end(e, at).expect("incident");
            if w == target {
                extensions.push((0, e, w));
                continue;
            }
            if visited.contains(&w) || self.used_images.contains(&w) {
                continue;
            }
            match dist.get(&w) {
                Some(&d) => extensions.push((d, e, w)),
                None => continue, // unreachable even ignoring edge usage
            }
        }
        extensions.sort();
        for (_, e, w) in extensions {
            if !self.spend() {
                return false;
            }
            visited.insert(w);
            walk_edges.push(e);
            walk_vertices.push(w);
            if self.extend_path(j, pe, target, dist, visited, walk_edges, walk_vertices) {
                return true;
            }
            walk_vertices.pop();
            walk_edges.pop();
            visited.remove(&w);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }

    fn try_walk(&mut self, j: usize, pe: EdgeId, walk: Walk) -> bool {
        let edges: Vec<EdgeId> = walk.edges().collect();
        for &e in &edges {
            self.used_edges.insert(e);
        }
        self.emap.insert(pe, walk);
        if self.route_edge(j + 1) {
            return true;
        }
        self.emap.remove(&pe);
        for &e in &edges {
            self.used_edges.remove(&e);
        }
        false
    }

    /// BFS distances to `target` over the whole host, blocking every
    /// vertex image other than `target` and `source`. Used only to order
    /// the search shortest-first; reachability here is a relaxation of
    /// the real constraints.
    fn heuristic_distances(&self, target: Vertex, source: Vertex) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::from([(target, 0usize)]);
        let mut frontier = Vec::from([target]);
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for &e in self.host.incident_edges(v).expect("host vertex") {
                    let w = self.host.other_end(e, v).expect("incident");
                    if dist.contains_key(&w) {
                        continue;
                    }
                    if self.used_images.contains(&w) && w != source {
                        continue;
                    }
                    dist.insert(w, d);
                    next.push(w);
                }
            }
            frontier = next;
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn quad_star(leaves: u32) -> MultiGraph {
        let mut edges = Vec::new();
        for leaf in 1..=leaves {
            for _ in 0..4 {
                edges.push((0, leaf));
            }
        }
        MultiGraph::build(leaves + 1, &edges).unwrap()
    }

    fn c4() -> MultiGraph {
        MultiGraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn single_vertex_pattern_verifies() {
        let host = MultiGraph::build(3, &[(0, 1)]).unwrap();
        let pattern = MultiGraph::build(1, &[]).unwrap();
        let m = ImmersionMap::new(
            pattern,
            host,
            BTreeMap::from([(Vertex(0), Vertex(2))]),
            BTreeMap::new(),
        );
        assert_eq!(m.verify().unwrap(), Verdict::Ok);
    }

    #[test]
    fn identity_map_verifies_and_is_subdivision() {
        let g = c4();
        let m = ImmersionMap::identity(&g);
        assert_eq!(m.verify().unwrap(), Verdict::Ok);
        assert_eq!(m.is_subdivision_map().unwrap(), true);
    }

    #[test]
    fn shared_host_edge_is_condition_five() {
        // Pattern: two parallel edges; both images use host edge 0.
        let host = MultiGraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        let pattern = MultiGraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        let walk = Walk::from_edges(&host, Vertex(0), &[EdgeId(0)]).unwrap();
        let m = ImmersionMap::new(
            pattern,
            host,
            BTreeMap::from([(Vertex(0), Vertex(0)), (Vertex(1), Vertex(1))]),
            BTreeMap::from([(EdgeId(0), walk.clone()), (EdgeId(1), walk)]),
        );
        match m.verify().unwrap() {
            Verdict::Violations(vs) => {
                assert!(vs.iter().any(|v| matches!(
                    v,
                    Violation::EdgeImagesShareEdge { shared: EdgeId(0), .. }
                )));
                assert!(vs.iter().all(|v| v.condition() == 5));
            }
            Verdict::Ok => panic!("expected condition 5 violation"),
        }
    }

    #[test]
    fn partial_map_is_input_error_not_violation() {
        let g = c4();
        let mut m = ImmersionMap::identity(&g);
        m.vertex_map.remove(&Vertex(3));
        assert_eq!(m.verify(), Err(InputError::MissingVertexImage(Vertex(3))));
    }

    #[test]
    fn quad_star_immerses_j2_rooted_at_leaves() {
        let host = quad_star(4);
        let leaves: BTreeSet<Vertex> = (1..=4).map(Vertex).collect();
        let outcome = find_immersion(&host, &c4(), Some(&leaves), DEFAULT_BUDGET);
        let m = outcome.found().expect("quad star immerses J_2");
        assert_eq!(m.verify().unwrap(), Verdict::Ok);
        assert!(m.is_rooted(&leaves));
        // Edge images cross at the hub, so this is not a subdivision map.
        assert_eq!(m.is_subdivision_map().unwrap(), false);
    }

    #[test]
    fn two_vertex_multigraph_lacks_j2() {
        let host = MultiGraph::build(2, &vec![(0, 1); 10]).unwrap();
        let outcome = find_immersion(&host, &c4(), None, DEFAULT_BUDGET);
        assert_eq!(outcome, FindOutcome::NotFound);
    }

    #[test]
    fn c4_immerses_itself() {
        let g = c4();
        let outcome = find_immersion(&g, &g, None, DEFAULT_BUDGET);
        let m = outcome.found().expect("identity exists");
        assert_eq!(m.verify().unwrap(), Verdict::Ok);
    }

    #[test]
    fn rootedness_checks() {
        let g = c4();
        let m = ImmersionMap::identity(&g);
        let all: BTreeSet<Vertex> = g.vertices().collect();
        assert!(m.is_rooted(&all));
        assert!(!m.is_rooted(&BTreeSet::new()));
    }

    #[test]
    fn loop_pattern_maps_to_cycle() {
        let host = c4();
        let pattern = MultiGraph::build(1, &[(0, 0)]).unwrap();
        let m = find_immersion(&host, &pattern, None, DEFAULT_BUDGET);
        let m = m.found().expect("C4 hosts a cycle");
        assert!(m.edge_image(EdgeId(0)).unwrap().is_cycle());
        assert_eq!(m.verify().unwrap(), Verdict::Ok);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let host = quad_star(4);
        let outcome = find_immersion(&host, &c4(), None, 3);
        assert_eq!(outcome, FindOutcome::BudgetExhausted);
    }

    #[test]
    fn subgraph_inclusion_is_immersion() {
        let g = quad_star(2);
        let edge_set: BTreeSet<EdgeId> = [EdgeId(0), EdgeId(5)].into();
        let m = ImmersionMap::from_subgraph(&g, &edge_set);
        assert_eq!(m.verify().unwrap(), Verdict::Ok);
        assert_eq!(m.is_subdivision_map().unwrap(), true);
    }
}
