//! Star-like rooted trees, cycle assemblies, the extremal graphs `G*(n, g, beta)`
//! and the closed-form Wiener expressions that go with them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{girth, matching_number, wiener_index, CycleDecomposition, Graph, GraphError, RootedTree, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("cycle length {0} is below 3")]
    GirthTooSmall(usize),
    #[error("expected {expected} branches for a cycle of length {girth}, got {got}")]
    BranchCount { girth: usize, expected: usize, got: usize },
    #[error("branch {0} is not a tree")]
    BranchNotTree(usize),
    #[error("infeasible parameters (n={n}, g={g}, beta={beta}): {violated}")]
    InvalidParams {
        n: usize,
        g: usize,
        beta: usize,
        violated: &'static str,
    },
    #[error("formula for {expected} girth called with g={g}")]
    ParityMismatch { expected: &'static str, g: usize },
    #[error("star-tree formula needs 0 <= beta <= (n-1)/2, got n={n}, beta={beta}")]
    StarRange { n: usize, beta: usize },
    #[error("inconsistent branch statistics: {0}")]
    InconsistentStats(&'static str),
    #[error("constructed graph fails its postcondition: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parameters of `T*_{a,b}`: a root with `a` two-edge paths and `b` pendant edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StarlikeParams {
    pub a: usize,
    pub b: usize,
}

impl StarlikeParams {
    pub fn new(a: usize, b: usize) -> Self {
        StarlikeParams { a, b }
    }

    pub fn order(&self) -> usize {
        2 * self.a + self.b + 1
    }

    pub fn matching_number(&self) -> usize {
        if self.b >= 1 {
            self.a + 1
        } else {
            self.a
        }
    }

    pub fn root_transmission(&self) -> u64 {
        (3 * self.a + self.b) as u64
    }
}

/// `T*_{a,b}` rooted at vertex 0. Children of the root come next (the `a` path
/// middles first, then the `b` pendants), then the `a` path ends.
pub fn build_star_like(p: StarlikeParams) -> RootedTree {
    let StarlikeParams { a, b } = p;
    let mut edges = Vec::with_capacity(2 * a + b);
    for c in 1..=a + b {
        edges.push((0, c));
    }
    for i in 0..a {
        edges.push((1 + i, 1 + a + b + i));
    }
    RootedTree {
        tree: Graph::from_edges(p.order(), &edges).expect("star-like edges are valid"),
        root: 0,
    }
}

/// `U(T_1, .., T_g)`: a `g`-cycle whose `i`-th vertex carries the root of `T_i`.
///
/// Numbering is the cycle first, then the non-root vertices of each branch in
/// breadth-first order.
pub fn build_cycle_assembly(g: usize, branches: &[RootedTree]) -> Result<Graph, ConstructionError> {
    if g < 3 {
        return Err(ConstructionError::GirthTooSmall(g));
    }
    if branches.len() != g {
        return Err(ConstructionError::BranchCount {
            girth: g,
            expected: g,
            got: branches.len(),
        });
    }
    let mut edges: Vec<(Vertex, Vertex)> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut next = g;
    for (i, branch) in branches.iter().enumerate() {
        let t = &branch.tree;
        if t.order() == 0 || t.size() + 1 != t.order() || !t.is_connected() {
            return Err(ConstructionError::BranchNotTree(i));
        }
        let (order, parent) = branch.bfs_order();
        let mut host = vec![usize::MAX; t.order()];
        host[branch.root] = i;
        for &v in order.iter().skip(1) {
            host[v] = next;
            next += 1;
            edges.push((host[parent[v].expect("non-root has a parent")], host[v]));
        }
    }
    Ok(Graph::from_edges(next, &edges)?)
}

/// Order, girth and matching number of an extremal graph `G*`.
///
/// Construction requires `n >= 2*beta >= 3*g` and `g >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtremalParams {
    n: usize,
    g: usize,
    beta: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, g: usize, beta: usize) -> Result<Self, ConstructionError> {
        let fail = |violated| Err(ConstructionError::InvalidParams { n, g, beta, violated });
        if g < 3 {
            return fail("g >= 3");
        }
        if n < g {
            return fail("n >= g");
        }
        if n < 2 * beta {
            return fail("n >= 2*beta");
        }
        if 2 * beta < 3 * g {
            return fail("2*beta >= 3*g");
        }
        Ok(ExtremalParams { n, g, beta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Shape of the large branch at `u_1`.
    pub fn big_branch(&self) -> StarlikeParams {
        let (n, g, beta) = (self.n, self.g, self.beta);
        if g % 2 == 1 {
            StarlikeParams::new(beta - g.div_ceil(2), n - 2 * beta + 1)
        } else {
            StarlikeParams::new(beta - g / 2 - 1, n - 2 * beta + 1)
        }
    }

    /// Branch shapes around the cycle, starting at `u_1`.
    pub fn branch_shapes(&self) -> Vec<StarlikeParams> {
        let mut shapes = vec![StarlikeParams::new(0, 0); self.g];
        shapes[0] = self.big_branch();
        if self.g.is_multiple_of(2) {
            shapes[1] = StarlikeParams::new(0, 1);
        }
        shapes
    }
}

/// Builds `G*(n, g, beta)` and checks its order, girth and matching number.
pub fn construct_gstar(p: ExtremalParams) -> Result<Graph, ConstructionError> {
    let branches: Vec<RootedTree> = p.branch_shapes().into_iter().map(build_star_like).collect();
    let graph = build_cycle_assembly(p.g, &branches)?;
    if graph.order() != p.n {
        return Err(ConstructionError::Postcondition(format!(
            "order {} != {}",
            graph.order(),
            p.n
        )));
    }
    if girth(&graph) != Some(p.g) {
        return Err(ConstructionError::Postcondition(format!(
            "girth {:?} != {}",
            girth(&graph),
            p.g
        )));
    }
    let (beta, _) = matching_number(&graph)?;
    if beta != p.beta {
        return Err(ConstructionError::Postcondition(format!(
            "matching number {} != {}",
            beta, p.beta
        )));
    }
    Ok(graph)
}

/// A member of the canonical family `U(T*_{a1,b1}, T*_{0,b_2}, .., T*_{0,b_g})`
/// with every `b_j` in `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalFamilyParams {
    pub big: StarlikeParams,
    /// `b_2 .. b_g`, read around the cycle from `u_2`.
    pub pendant_flags: Vec<bool>,
}

impl CanonicalFamilyParams {
    pub fn girth(&self) -> usize {
        self.pendant_flags.len() + 1
    }

    /// `t`: number of cycle vertices other than `u_1` carrying a pendant.
    pub fn pendant_count(&self) -> usize {
        self.pendant_flags.iter().filter(|&&f| f).count()
    }

    pub fn order(&self) -> usize {
        self.big.order() + self.girth() - 1 + self.pendant_count()
    }

    pub fn branch_shapes(&self) -> Vec<StarlikeParams> {
        std::iter::once(self.big)
            .chain(
                self.pendant_flags
                    .iter()
                    .map(|&f| StarlikeParams::new(0, usize::from(f))),
            )
            .collect()
    }

    pub fn build(&self) -> Result<Graph, ConstructionError> {
        let trees: Vec<RootedTree> = self.branch_shapes().into_iter().map(build_star_like).collect();
        build_cycle_assembly(self.girth(), &trees)
    }
}

/// Per-branch numbers that determine the Wiener index of a unicyclic graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionStats {
    pub girth: usize,
    pub branch_orders: Vec<u64>,
    pub branch_wiener: Vec<u64>,
    pub root_transmissions: Vec<u64>,
}

impl DecompositionStats {
    pub fn from_decomposition(d: &CycleDecomposition) -> Self {
        let trees: Vec<RootedTree> = d.branches.iter().map(|b| b.to_rooted_tree()).collect();
        DecompositionStats {
            girth: d.girth(),
            branch_orders: trees.iter().map(|t| t.order() as u64).collect(),
            branch_wiener: trees.iter().map(RootedTree::wiener).collect(),
            root_transmissions: trees.iter().map(RootedTree::root_transmission).collect(),
        }
    }

    pub fn order(&self) -> u64 {
        self.branch_orders.iter().sum()
    }
}

/// Wiener index of `U(T_1, .., T_g)` from per-branch statistics: the cycle term
/// `(n - g/2) * floor(g^2/4)`, the root transmissions weighted by `g - 1`, the
/// branch Wiener indices and the cross-branch terms.
pub fn eval_decomposition(s: &DecompositionStats) -> Result<i64, ConstructionError> {
    let g = s.girth;
    if g < 3 {
        return Err(ConstructionError::InconsistentStats("girth below 3"));
    }
    if s.branch_orders.len() != g || s.branch_wiener.len() != g || s.root_transmissions.len() != g {
        return Err(ConstructionError::InconsistentStats(
            "per-branch lists must have length g",
        ));
    }
    if s.branch_orders.contains(&0) {
        return Err(ConstructionError::InconsistentStats("branch of order 0"));
    }
    let n = s.order() as i64;
    let gi = g as i64;
    let quarter = gi * gi / 4;
    // (n - g/2) * floor(g^2/4), computed doubled
    let twice_cycle_term = (2 * n - gi) * quarter;
    if twice_cycle_term % 2 != 0 {
        return Err(ConstructionError::InconsistentStats("non-integral cycle term"));
    }
    let order: Vec<i64> = s.branch_orders.iter().map(|&x| x as i64).collect();
    let trans: Vec<i64> = s.root_transmissions.iter().map(|&x| x as i64).collect();
    let mut total = twice_cycle_term / 2;
    total += (gi - 1) * trans.iter().sum::<i64>();
    total += s.branch_wiener.iter().map(|&x| x as i64).sum::<i64>();
    for i in 0..g {
        for j in i + 1..g {
            let d = (j - i).min(g - (j - i)) as i64;
            total += (order[i] - 1) * trans[j] + (order[j] - 1) * trans[i] + (order[i] - 1) * (order[j] - 1) * d;
        }
    }
    Ok(total)
}

/// `n^2 + (beta - 2) n - 3 beta + 1`, the Wiener index of `T*_{beta, n-2beta-1}`.
pub fn eval_star_tree_formula(n: usize, beta: usize) -> Result<i64, ConstructionError> {
    if n == 0 || 2 * beta > n - 1 {
        return Err(ConstructionError::StarRange { n, beta });
    }
    let (n, beta) = (n as i64, beta as i64);
    Ok(n * n + (beta - 2) * n - 3 * beta + 1)
}

/// The printed closed form for odd girth, evaluated exactly as written:
/// `n^2 + (beta - (3g+1)/2 + q) n + (1 - g/2) q + g^2 + (1 - 2 beta) g - 2 beta + 1`
/// with `q = floor(g^2/4)`.
pub fn eval_gstar_formula_odd(p: ExtremalParams) -> Result<i64, ConstructionError> {
    if p.g.is_multiple_of(2) {
        return Err(ConstructionError::ParityMismatch {
            expected: "odd",
            g: p.g,
        });
    }
    let (n, g, beta) = (p.n as i64, p.g as i64, p.beta as i64);
    let q = g * g / 4;
    // everything doubled so the (1 - g/2) factor stays integral
    let twice = 2 * n * n + (2 * beta - (3 * g + 1) + 2 * q) * n + (2 - g) * q + 2 * g * g + 2 * (1 - 2 * beta) * g
        - 4 * beta
        + 2;
    if twice % 2 != 0 {
        return Err(ConstructionError::Postcondition(format!(
            "odd formula is not an integer: {}/2",
            twice
        )));
    }
    Ok(twice / 2)
}

/// The printed closed form for even girth:
/// `n^2 + (beta - 3g/2 - 1 + q) n - (g/2) q + 3g/2 - 3 beta + 2` with `q = floor(g^2/4)`.
pub fn eval_gstar_formula_even(p: ExtremalParams) -> Result<i64, ConstructionError> {
    if p.g % 2 == 1 {
        return Err(ConstructionError::ParityMismatch {
            expected: "even",
            g: p.g,
        });
    }
    let (n, g, beta) = (p.n as i64, p.g as i64, p.beta as i64);
    let q = g * g / 4;
    let h = g / 2;
    Ok(n * n + (beta - 3 * h - 1 + q) * n - h * q + 3 * h - 3 * beta + 2)
}

/// Dispatches on the parity of `g`.
pub fn eval_gstar_formula(p: ExtremalParams) -> i64 {
    if p.g % 2 == 1 {
        eval_gstar_formula_odd(p)
    } else {
        eval_gstar_formula_even(p)
    }
    .expect("parity matches by construction")
}

/// Direct Wiener index of the constructed `G*`.
pub fn gstar_wiener_direct(p: ExtremalParams) -> Result<u64, ConstructionError> {
    Ok(wiener_index(&construct_gstar(p)?)?)
}
