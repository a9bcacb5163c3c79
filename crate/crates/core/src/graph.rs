//! Simple undirected graphs and exact distance / matching invariants.
//!
//! Everything here works on small graphs with exact integer arithmetic. The
//! matching routines cover forests and graphs with a single independent cycle,
//! which is all the unicyclic machinery needs.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertex identifier; always in `0..order`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected: vertex {unreachable} is unreachable from {from}")]
    Disconnected { from: Vertex, unreachable: Vertex },
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not unicyclic: order {order}, size {size}")]
    NotUnicyclic { order: usize, size: usize },
    #[error("unsupported graph class: cyclomatic number {0} (forests and unicyclic graphs only)")]
    TooManyCycles(usize),
}

/// Immutable simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and bad ids.
    pub fn from_edges(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Self::from_edges(order, &edges).expect("path edges are valid")
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        edges.push((0, order - 1));
        Self::from_edges(order, &edges).expect("cycle edges are valid")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Graph induced on the vertices with `keep[v]`, renumbered in increasing id order.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<Vertex>) {
        let kept: Vec<Vertex> = (0..self.order()).filter(|&v| keep[v]).collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        let g = Graph::from_edges(kept.len(), &edges).expect("induced subgraph is simple");
        (g, kept)
    }

    pub fn without_vertices(&self, removed: &[Vertex]) -> Graph {
        let mut keep = vec![true; self.order()];
        for &v in removed {
            keep[v] = false;
        }
        self.induced(&keep).0
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.component_count() == 1
    }

    /// `|E| - |V| + c`: the number of independent cycles.
    pub fn cyclomatic_number(&self) -> usize {
        self.size() + self.component_count() - self.order()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.order()
    }

    /// Vertices of the 2-core (what survives iterated leaf deletion).
    pub fn two_core(&self) -> Vec<bool> {
        let n = self.order();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut alive = vec![true; n];
        let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = queue.pop_front() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        queue.push_back(w);
                    }
                }
            }
        }
        alive
    }
}

/// Breadth-first hop counts from `source`; fails if some vertex is unreachable.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<u64>, GraphError> {
    g.check_vertex(source)?;
    let dist = bfs_raw(g, source);
    match dist.iter().position(|&d| d == u64::MAX) {
        Some(unreachable) => Err(GraphError::Disconnected {
            from: source,
            unreachable,
        }),
        None => Ok(dist),
    }
}

fn bfs_raw(g: &Graph, source: Vertex) -> Vec<u64> {
    let mut dist = vec![u64::MAX; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == u64::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Sum of distances from `v` to every other vertex.
pub fn vertex_transmission(g: &Graph, v: Vertex) -> Result<u64, GraphError> {
    Ok(bfs_distances(g, v)?.iter().sum())
}

/// Sum of distances over all unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::Empty);
    }
    let mut total = 0;
    for u in 0..g.order() {
        let dist = bfs_distances(g, u)?;
        total += dist[u + 1..].iter().sum::<u64>();
    }
    Ok(total)
}

/// Length of the shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<u64> = None;
    let mut dist = vec![u64::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = u64::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == u64::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best.map(|b| b as usize)
}

/// A set of vertex-disjoint edges, each stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    fn from_pairs(mut edges: Vec<(Vertex, Vertex)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True when every edge is in `g` and no vertex is covered twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }
}

/// Leaf-greedy maximum matching on the forest left after deleting `removed`
/// vertices and the optional `skip` edge. Exact whenever that remainder is acyclic.
fn forest_matching(g: &Graph, removed: &[bool], skip: Option<(Vertex, Vertex)>) -> Vec<(Vertex, Vertex)> {
    let n = g.order();
    let skipped = |u: Vertex, v: Vertex| matches!(skip, Some((a, b)) if (a == u && b == v) || (a == v && b == u));
    let mut alive: Vec<bool> = removed.iter().map(|&r| !r).collect();
    let mut deg = vec![0usize; n];
    for u in 0..n {
        if alive[u] {
            deg[u] = g.neighbors(u).iter().filter(|&&w| alive[w] && !skipped(u, w)).count();
        }
    }
    let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| alive[v] && deg[v] == 1).collect();
    let mut pairs = Vec::new();
    while let Some(leaf) = queue.pop_front() {
        if !alive[leaf] || deg[leaf] != 1 {
            continue;
        }
        let partner = *g
            .neighbors(leaf)
            .iter()
            .find(|&&w| alive[w] && !skipped(leaf, w))
            .expect("leaf has one live neighbor");
        pairs.push((leaf, partner));
        alive[leaf] = false;
        alive[partner] = false;
        for &w in g.neighbors(partner) {
            if alive[w] && !skipped(partner, w) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    pairs
}

/// Exact maximum matching for forests and unicyclic graphs.
///
/// Forests use repeated leaf matching. With one cycle edge `e = uv` the answer
/// is the better of a matching of `G - e` and `uv` plus a matching of `G - u - v`,
/// both forests.
pub fn matching_number(g: &Graph) -> Result<(usize, Matching), GraphError> {
    let n = g.order();
    let cyclomatic = g.cyclomatic_number();
    let none = vec![false; n];
    match cyclomatic {
        0 => {
            let m = Matching::from_pairs(forest_matching(g, &none, None));
            Ok((m.len(), m))
        }
        1 => {
            let core = g.two_core();
            let (u, v) = g
                .edges()
                .find(|&(u, v)| core[u] && core[v])
                .expect("cyclomatic number 1 implies a cycle edge");
            let without_edge = forest_matching(g, &none, Some((u, v)));
            let mut removed = none;
            removed[u] = true;
            removed[v] = true;
            let mut with_edge = forest_matching(g, &removed, None);
            with_edge.push((u, v));
            let best = if with_edge.len() > without_edge.len() {
                with_edge
            } else {
                without_edge
            };
            let m = Matching::from_pairs(best);
            Ok((m.len(), m))
        }
        k => Err(GraphError::TooManyCycles(k)),
    }
}

/// A tree with a distinguished root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub tree: Graph,
    pub root: Vertex,
}

impl RootedTree {
    pub fn single() -> Self {
        RootedTree {
            tree: Graph::empty(1),
            root: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    /// Vertices in breadth-first order from the root (neighbors by ascending id)
    /// together with each vertex's parent.
    pub fn bfs_order(&self) -> (Vec<Vertex>, Vec<Option<Vertex>>) {
        let n = self.order();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[self.root] = true;
        let mut queue = VecDeque::from([self.root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in self.tree.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }

    pub fn root_transmission(&self) -> u64 {
        vertex_transmission(&self.tree, self.root).expect("rooted tree is connected")
    }

    pub fn wiener(&self) -> u64 {
        wiener_index(&self.tree).expect("rooted tree is connected")
    }
}

/// One branch of a unicyclic graph: the tree hanging from cycle vertex `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub root: Vertex,
    /// Vertex ids in the host graph, breadth-first from the root.
    pub vertices: Vec<Vertex>,
    /// Tree edges in host ids, `(parent, child)`.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Branch {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// The branch as a standalone tree; vertex `i` is `self.vertices[i]`, root 0.
    pub fn to_rooted_tree(&self) -> RootedTree {
        let local = |v: Vertex| self.vertices.iter().position(|&w| w == v).expect("edge inside branch");
        let edges: Vec<_> = self.edges.iter().map(|&(p, c)| (local(p), local(c))).collect();
        RootedTree {
            tree: Graph::from_edges(self.order(), &edges).expect("branch edges are simple"),
            root: 0,
        }
    }
}

/// The unique cycle `u_1 .. u_g` of a unicyclic graph and the branch at each cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycle: Vec<Vertex>,
    pub branches: Vec<Branch>,
}

impl CycleDecomposition {
    pub fn girth(&self) -> usize {
        self.cycle.len()
    }

    pub fn branch_orders(&self) -> Vec<usize> {
        self.branches.iter().map(Branch::order).collect()
    }

    /// Hop distance between cycle positions `i` and `j` along the cycle.
    pub fn cycle_distance(&self, i: usize, j: usize) -> usize {
        let d = i.abs_diff(j);
        d.min(self.girth() - d)
    }

    /// Index of the branch containing `v`.
    pub fn branch_of(&self, v: Vertex) -> Option<usize> {
        self.branches.iter().position(|b| b.vertices.contains(&v))
    }
}

/// Splits a unicyclic graph into its cycle and branches.
///
/// The cycle starts at its smallest vertex id and heads toward the smaller of
/// that vertex's two cycle neighbors.
pub fn decompose_unicyclic(g: &Graph) -> Result<CycleDecomposition, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        let dist = bfs_raw(g, 0);
        let unreachable = dist.iter().position(|&d| d == u64::MAX).unwrap_or(0);
        return Err(GraphError::Disconnected { from: 0, unreachable });
    }
    if g.size() != g.order() {
        return Err(GraphError::NotUnicyclic {
            order: g.order(),
            size: g.size(),
        });
    }
    let on_cycle = g.two_core();
    let start = on_cycle.iter().position(|&c| c).expect("unicyclic graph has a cycle");
    let cycle_nbrs = |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().copied().filter(|&w| on_cycle[w]).collect() };
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = cycle_nbrs(start)[0];
    while cur != start {
        cycle.push(cur);
        let next = cycle_nbrs(cur)
            .into_iter()
            .find(|&w| w != prev)
            .expect("cycle vertex has two cycle neighbors");
        prev = cur;
        cur = next;
    }

    let branches = cycle
        .iter()
        .map(|&root| {
            let mut vertices = vec![root];
            let mut edges = Vec::new();
            let mut head = 0;
            while head < vertices.len() {
                let u = vertices[head];
                head += 1;
                for &w in g.neighbors(u) {
                    if on_cycle[w] || vertices.contains(&w) {
                        continue;
                    }
                    vertices.push(w);
                    edges.push((u, w));
                }
            }
            Branch { root, vertices, edges }
        })
        .collect();

    Ok(CycleDecomposition { cycle, branches })
}

/// Glues `g1` and `g2` by identifying `x` in `g1` with `y` in `g2`.
///
/// Vertices of `g1` keep their ids; the remaining vertices of `g2` follow in
/// increasing id order.
pub fn identify_vertices(g1: &Graph, x: Vertex, g2: &Graph, y: Vertex) -> Result<Graph, GraphError> {
    g1.check_vertex(x)?;
    g2.check_vertex(y)?;
    let n1 = g1.order();
    let map = |v: Vertex| -> Vertex {
        match v.cmp(&y) {
            std::cmp::Ordering::Equal => x,
            std::cmp::Ordering::Less => n1 + v,
            std::cmp::Ordering::Greater => n1 + v - 1,
        }
    };
    let mut edges: Vec<_> = g1.edges().collect();
    edges.extend(g2.edges().map(|(u, v)| (map(u), map(v))));
    Graph::from_edges(n1 + g2.order() - 1, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_with_pendant_at(pos: usize) -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (pos, 3)]).unwrap()
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&Graph::cycle(5), 0).unwrap(), vec![0, 1, 2, 2, 1]);
        assert_eq!(bfs_distances(&Graph::path(4), 0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(bfs_distances(&Graph::star(4), 0).unwrap(), vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn bfs_errors() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            bfs_distances(&g, 0),
            Err(GraphError::Disconnected {
                from: 0,
                unreachable: 2
            })
        );
        assert!(matches!(
            bfs_distances(&g, 7),
            Err(GraphError::VertexOutOfRange { vertex: 7, order: 3 })
        ));
        assert!(wiener_index(&g).is_err());
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener_index(&Graph::path(2)).unwrap(), 1);
        assert_eq!(wiener_index(&Graph::cycle(3)).unwrap(), 3);
        assert_eq!(wiener_index(&Graph::cycle(4)).unwrap(), 8);
        assert_eq!(wiener_index(&Graph::path(4)).unwrap(), 10);
        assert_eq!(wiener_index(&Graph::empty(1)).unwrap(), 0);
    }

    #[test]
    fn transmission_examples() {
        let star = Graph::star(4);
        assert_eq!(vertex_transmission(&star, 0).unwrap(), 4);
        assert_eq!(vertex_transmission(&star, 3).unwrap(), 7);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(7)), Some(7));
        assert_eq!(girth(&triangle_with_pendant_at(1)), Some(3));
        assert_eq!(girth(&Graph::path(6)), None);
        assert_eq!(girth(&Graph::star(5)), None);
        // two cycles sharing an edge: 4-cycle with a chord
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(girth(&g), Some(3));
    }

    #[test]
    fn matching_examples() {
        let (b, m) = matching_number(&Graph::cycle(5)).unwrap();
        assert_eq!(b, 2);
        assert!(m.is_valid_in(&Graph::cycle(5)));
        assert_eq!(matching_number(&Graph::cycle(6)).unwrap().0, 3);
        assert_eq!(matching_number(&Graph::star(4)).unwrap().0, 1);
        assert_eq!(matching_number(&Graph::path(7)).unwrap().0, 3);
        assert_eq!(matching_number(&Graph::empty(3)).unwrap().0, 0);
    }

    #[test]
    fn matching_rejects_multicyclic() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(matching_number(&g), Err(GraphError::TooManyCycles(2)));
    }

    #[test]
    fn decompose_cycle() {
        let d = decompose_unicyclic(&Graph::cycle(6)).unwrap();
        assert_eq!(d.cycle, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(d.branch_orders(), vec![1; 6]);
    }

    #[test]
    fn decompose_orientation_follows_smaller_neighbor() {
        // cycle 2-5-3-7-2 embedded among other ids
        let g = Graph::from_edges(8, &[(2, 5), (5, 3), (3, 7), (7, 2), (0, 2), (1, 0), (4, 3), (6, 4)]).unwrap();
        let d = decompose_unicyclic(&g).unwrap();
        assert_eq!(d.cycle, vec![2, 5, 3, 7]);
        assert_eq!(d.branch_orders(), vec![3, 1, 3, 1]);
        assert_eq!(d.branches[0].vertices, vec![2, 0, 1]);
        assert_eq!(d.branches[2].edges, vec![(3, 4), (4, 6)]);
    }

    #[test]
    fn decompose_pendant_at_u2() {
        let d = decompose_unicyclic(&triangle_with_pendant_at(1)).unwrap();
        assert_eq!(d.branch_orders(), vec![1, 2, 1]);
    }

    #[test]
    fn decompose_rejects_other_classes() {
        assert!(matches!(
            decompose_unicyclic(&Graph::path(5)),
            Err(GraphError::NotUnicyclic { .. })
        ));
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(matches!(decompose_unicyclic(&g), Err(GraphError::NotUnicyclic { .. })));
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(decompose_unicyclic(&g), Err(GraphError::Disconnected { .. })));
    }

    #[test]
    fn identify_examples() {
        let e = Graph::path(2);
        let p3 = identify_vertices(&e, 1, &e, 0).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(wiener_index(&p3).unwrap(), 4);

        let k12 = Graph::star(2);
        let k14 = identify_vertices(&k12, 0, &k12, 0).unwrap();
        assert_eq!(k14, Graph::star(4));
        assert_eq!(wiener_index(&k14).unwrap(), 16);

        assert!(identify_vertices(&e, 2, &e, 0).is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }
}
