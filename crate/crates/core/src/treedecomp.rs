//! Tree decompositions: the five-axiom verifier, width, and exact
//! tree-width for small graphs via dynamic programming over elimination
//! orders.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::multigraph::{EdgeId, MultiGraph, Vertex};

/// A tree plus one bag of graph vertices per tree node.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeDecomposition {
    tree: MultiGraph,
    bags: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecompInputError {
    /// A bag is keyed by a node that is not a vertex of the tree.
    UnknownTreeNode(Vertex),
    /// A tree node has no bag at all.
    MissingBag(Vertex),
}

impl fmt::Display for DecompInputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompInputError::UnknownTreeNode(t) => write!(f, "bag on unknown tree node {t}"),
            DecompInputError::MissingBag(t) => write!(f, "tree node {t} has no bag"),
        }
    }
}

impl core::error::Error for DecompInputError {}

/// A violated decomposition axiom with a witness. [`DecompViolation::axiom`]
/// numbers the bullets of the definition: 1 tree shape, 2 bags are vertex
/// subsets, 3 vertex coverage, 4 edge coverage, 5 interpolation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecompViolation {
    NotATree,
    BagElementNotInGraph { node: Vertex, element: Vertex },
    VertexNotCovered { vertex: Vertex },
    EdgeNotCovered { edge: EdgeId },
    Interpolation { vertex: Vertex, endpoint_a: Vertex, missing: Vertex, endpoint_b: Vertex },
}

impl DecompViolation {
    pub fn axiom(&self) -> u8 {
        match self {
            DecompViolation::NotATree => 1,
            DecompViolation::BagElementNotInGraph { .. } => 2,
            DecompViolation::VertexNotCovered { .. } => 3,
            DecompViolation::EdgeNotCovered { .. } => 4,
            DecompViolation::Interpolation { .. } => 5,
        }
    }
}

impl fmt::Display for DecompViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompViolation::NotATree => write!(f, "axiom 1: decomposition tree is not a tree"),
            DecompViolation::BagElementNotInGraph { node, element } => {
                write!(f, "axiom 2: bag of {node} contains {element}, not a graph vertex")
            }
            DecompViolation::VertexNotCovered { vertex } => {
                write!(f, "axiom 3: {vertex} lies in no bag")
            }
            DecompViolation::EdgeNotCovered { edge } => {
                write!(f, "axiom 4: no bag contains both ends of {edge}")
            }
            DecompViolation::Interpolation { vertex, endpoint_a, missing, endpoint_b } => write!(
                f,
                "axiom 5: {vertex} is in the bags of {endpoint_a} and {endpoint_b} but not of {missing} between them"
            ),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecompVerdict {
    Ok,
    Violations(Vec<DecompViolation>),
}

impl DecompVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, DecompVerdict::Ok)
    }
}

impl TreeDecomposition {
    pub fn new(tree: MultiGraph, bags: BTreeMap<Vertex, BTreeSet<Vertex>>) -> TreeDecomposition {
        TreeDecomposition { tree, bags }
    }

    /// Trivial decomposition: one node whose bag is the whole vertex set.
    pub fn single_bag(g: &MultiGraph) -> TreeDecomposition {
        let tree = MultiGraph::build(1, &[]).expect("one node");
        let bags = BTreeMap::from([(Vertex(0), g.vertices().collect())]);
        TreeDecomposition { tree, bags }
    }

    pub fn tree(&self) -> &MultiGraph {
        &self.tree
    }

    pub fn bags(&self) -> &BTreeMap<Vertex, BTreeSet<Vertex>> {
        &self.bags
    }

    /// Max bag size minus one. Errors on a decomposition with no nodes.
    pub fn width(&self) -> Result<i32, DecompInputError> {
        if self.tree.vertex_count() == 0 || self.bags.is_empty() {
            let missing = self.tree.vertices().next().unwrap_or(Vertex(0));
            return Err(DecompInputError::MissingBag(missing));
        }
        Ok(self
            .bags
            .values()
            .map(|b| b.len() as i32 - 1)
            .max()
            .expect("nonempty"))
    }
}

fn is_tree(g: &MultiGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    if g.edge_count() != n - 1 {
        return false;
    }
    if g.edges().any(|(_, u, v)| u == v) {
        return false;
    }
    if n == 1 {
        return true;
    }
    let start = g.vertices().next().expect("nonempty");
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &e in g.incident_edges(v).expect("vertex") {
            let w = g.other_end(e, v).expect("incident");
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == n
}

/// Unique path between two nodes of a tree, as a vertex sequence.
fn tree_path(tree: &MultiGraph, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut stack = vec![from];
    let mut seen = BTreeSet::from([from]);
    while let Some(v) = stack.pop() {
        if v == to {
            break;
        }
        for &e in tree.incident_edges(v).expect("node") {
            let w = tree.other_end(e, v).expect("incident");
            if seen.insert(w) {
                parent.insert(w, v);
                stack.push(w);
            }
        }
    }
    if !seen.contains(&to) {
        return None;
    }
    let mut path = vec![to];
    let mut at = to;
    while at != from {
        at = parent[&at];
        path.push(at);
    }
    path.reverse();
    Some(path)
}

/// Checks the five axioms of the tree-decomposition definition against
/// `g`, reporting every violated axiom with a witness.
pub fn verify_decomposition(
    g: &MultiGraph,
    d: &TreeDecomposition,
) -> Result<DecompVerdict, DecompInputError> {
    for t in d.bags.keys() {
        if !d.tree.contains_vertex(*t) {
            return Err(DecompInputError::UnknownTreeNode(*t));
        }
    }
    for t in d.tree.vertices() {
        if !d.bags.contains_key(&t) {
            return Err(DecompInputError::MissingBag(t));
        }
    }

    let mut violations = Vec::new();

    if !is_tree(&d.tree) {
        violations.push(DecompViolation::NotATree);
    }

    for (&t, bag) in &d.bags {
        for &x in bag {
            if !g.contains_vertex(x) {
                violations.push(DecompViolation::BagElementNotInGraph { node: t, element: x });
            }
        }
    }

    for v in g.vertices() {
        if !d.bags.values().any(|b| b.contains(&v)) {
            violations.push(DecompViolation::VertexNotCovered { vertex: v });
        }
    }

    for (e, u, v) in g.edges() {
        if !d.bags.values().any(|b| b.contains(&u) && b.contains(&v)) {
            violations.push(DecompViolation::EdgeNotCovered { edge: e });
        }
    }

    // Interpolation: for each graph vertex, the nodes whose bags contain
    // it must induce a connected subtree. Only meaningful on a tree.
    if is_tree(&d.tree) {
        for v in g.vertices() {
            let holders: Vec<Vertex> = d
                .bags
                .iter()
                .filter(|(_, b)| b.contains(&v))
                .map(|(&t, _)| t)
                .collect();
            if holders.len() < 2 {
                continue;
            }
            let base = holders[0];
            'outer: for &other in &holders[1..] {
                let path = tree_path(&d.tree, base, other).expect("tree is connected");
                for &mid in &path {
                    if !d.bags[&mid].contains(&v) {
                        violations.push(DecompViolation::Interpolation {
                            vertex: v,
                            endpoint_a: base,
                            missing: mid,
                            endpoint_b: other,
                        });
                        break 'outer;
                    }
                }
            }
        }
    }

    if violations.is_empty() {
        Ok(DecompVerdict::Ok)
    } else {
        Ok(DecompVerdict::Violations(violations))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TreewidthError {
    EmptyGraph,
    /// Exact search refused; the graph exceeds the vertex limit (heuristic
    /// tree-width is out of scope here).
    TooLarge { vertices: usize, limit: usize },
}

impl fmt::Display for TreewidthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreewidthError::EmptyGraph => write!(f, "tree-width of the empty graph is undefined"),
            TreewidthError::TooLarge { vertices, limit } => write!(
                f,
                "exact tree-width refused for {vertices} vertices (limit {limit}); heuristics are a non-goal"
            ),
        }
    }
}

impl core::error::Error for TreewidthError {}

pub const DEFAULT_EXACT_LIMIT: usize = 12;

/// Number of vertices outside `s | {v}` reachable from `v` through `s`:
/// the degree `v` would have if eliminated right after the set `s`.
fn elimination_degree(adj: &[u64], s: u64, v: usize) -> u32 {
    let mut visited: u64 = 1 << v;
    let mut stack = vec![v];
    let mut boundary: u64 = 0;
    while let Some(u) = stack.pop() {
        let mut nbrs = adj[u];
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let bit = 1u64 << w;
            if visited & bit != 0 {
                continue;
            }
            if s & bit != 0 {
                visited |= bit;
                stack.push(w);
            } else if w != v {
                boundary |= bit;
            }
        }
    }
    boundary.count_ones()
}

/// Exact tree-width with a witness decomposition, by Held–Karp-style
/// dynamic programming over elimination orders. Loops and parallel edges
/// are collapsed before the search; they cannot change tree-width.
pub fn exact_treewidth(
    g: &MultiGraph,
    limit: usize,
) -> Result<(i32, TreeDecomposition), TreewidthError> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let n = verts.len();
    if n == 0 {
        return Err(TreewidthError::EmptyGraph);
    }
    if n > limit || n > 63 {
        return Err(TreewidthError::TooLarge { vertices: n, limit });
    }
    let index: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![0u64; n];
    for (_, u, v) in g.edges() {
        if u != v {
            adj[index[&u]] |= 1 << index[&v];
            adj[index[&v]] |= 1 << index[&u];
        }
    }

    let full: usize = (1usize << n) - 1;
    let mut dp = vec![i32::MAX; full + 1];
    let mut choice = vec![usize::MAX; full + 1];
    dp[0] = -1;
    for s in 1..=full {
        let mut best = i32::MAX;
        let mut best_v = usize::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let q = elimination_degree(&adj, rest as u64, v) as i32;
            let cost = dp[rest].max(q);
            if cost < best {
                best = cost;
                best_v = v;
            }
        }
        dp[s] = best;
        choice[s] = best_v;
    }
    let width = dp[full];

    // Reconstruct an optimal elimination order (choice[s] is eliminated
    // last within s).
    let mut order = vec![usize::MAX; n];
    let mut s = full;
    for k in (0..n).rev() {
        let v = choice[s];
        order[k] = v;
        s &= !(1 << v);
    }

    // Build the decomposition from the order: eliminate in sequence,
    // filling in, and bag each vertex with its higher fill-neighbors.
    let mut position = vec![usize::MAX; n];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    let mut fill: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| {
            let mut s = BTreeSet::new();
            let mut bits = adj[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                s.insert(w);
            }
            s
        })
        .collect();
    let mut bags: Vec<BTreeSet<usize>> = Vec::with_capacity(n);
    let mut parent_of: Vec<Option<usize>> = vec![None; n];
    for (k, &v) in order.iter().enumerate() {
        let higher: Vec<usize> = fill[v]
            .iter()
            .copied()
            .filter(|&w| position[w] > k)
            .collect();
        let mut bag: BTreeSet<usize> = higher.iter().copied().collect();
        bag.insert(v);
        bags.push(bag);
        for (a_i, &a) in higher.iter().enumerate() {
            for &b in &higher[a_i + 1..] {
                fill[a].insert(b);
                fill[b].insert(a);
            }
        }
        match higher.iter().map(|&w| position[w]).min() {
            Some(p) => parent_of[k] = Some(p),
            None => {
                if k + 1 < n {
                    parent_of[k] = Some(k + 1);
                }
            }
        }
    }
    let tree_edges: Vec<(u32, u32)> = parent_of
        .iter()
        .enumerate()
        .filter_map(|(k, p)| p.map(|p| (k as u32, p as u32)))
        .collect();
    let tree = MultiGraph::build(n as u32, &tree_edges).expect("indices in range");
    let bag_map: BTreeMap<Vertex, BTreeSet<Vertex>> = bags
        .into_iter()
        .enumerate()
        .map(|(k, bag)| (Vertex(k as u32), bag.into_iter().map(|i| verts[i]).collect()))
        .collect();
    let decomposition = TreeDecomposition::new(tree, bag_map);
    debug_assert!(verify_decomposition(g, &decomposition)
        .map(|v| v.is_ok())
        .unwrap_or(false));
    debug_assert_eq!(decomposition.width().ok(), Some(width));
    Ok((width, decomposition))
}
