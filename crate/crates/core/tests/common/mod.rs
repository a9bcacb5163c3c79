//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use petgraph::graph::UnGraph;
use rayon::prelude::*;
use uniwiener_core::constructions::StarlikeParams;
use uniwiener_core::enumeration::RootedTreeCode;
use uniwiener_core::graph::RootedTree;
use uniwiener_core::transforms::{self, starlike_shape, Rule, TransformError, TransformOutcome};
use uniwiener_core::{decompose_unicyclic, gen_unicyclic, girth, matching_number, wiener_index, Graph};

pub fn all_unicyclic(n: usize) -> Vec<Graph> {
    (3..=n)
        .flat_map(|g| gen_unicyclic(n, g).unwrap().map(|c| c.graph))
        .collect()
}

/// Sum of BFS-free Floyd–Warshall distances over unordered pairs.
pub fn wiener_floyd(g: &Graph) -> u64 {
    let n = g.order();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| d[i][j])
        .sum()
}

/// Maximum matching by exhaustive search over vertex subsets (memoized).
pub fn matching_oracle(g: &Graph) -> usize {
    fn best(g: &Graph, mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&m) = memo.get(&mask) {
            return m;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut m = best(g, rest, memo);
        for &w in g.neighbors(v) {
            if rest >> w & 1 == 1 {
                m = m.max(1 + best(g, rest & !(1 << w), memo));
            }
        }
        memo.insert(mask, m);
        m
    }
    assert!(g.order() <= 64);
    let full = if g.order() == 64 {
        u64::MAX
    } else {
        (1u64 << g.order()) - 1
    };
    best(g, full, &mut HashMap::new())
}

/// Number of unlabeled rooted trees of each order `0..=max` via the classical
/// recurrence `a(n+1) = (1/n) * sum_k (sum_{d | k} d a(d)) a(n-k+1)`.
pub fn rooted_tree_counts(max: usize) -> Vec<u64> {
    let mut a = vec![0u64; max + 1];
    if max >= 1 {
        a[1] = 1;
    }
    for n in 1..max {
        let mut s = 0u64;
        for k in 1..=n {
            let c: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * a[d]).sum();
            s += c * a[n - k + 1];
        }
        a[n + 1] = s / n as u64;
    }
    a
}

fn prufer_tree(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Parenthesis code of a free tree, rooted at its center(s).
fn free_tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu(&adj, c, usize::MAX)).min().unwrap()
}

fn petgraph_of(g: &Graph) -> UnGraph<(), ()> {
    let mut pg = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.order()).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    pg
}

/// Counts unlabeled unicyclic graphs of order `n` from labeled data only:
/// every labeled tree (Prüfer decoding), deduplicated by free-tree code, plus
/// every missing edge, deduplicated with VF2 isomorphism.
pub fn unicyclic_count_from_labeled_trees(n: usize) -> usize {
    let total = n.pow(n as u32 - 2);
    let trees: HashMap<String, Vec<(usize, usize)>> = (0..total)
        .into_par_iter()
        .fold(
            HashMap::new,
            |mut acc: HashMap<String, Vec<(usize, usize)>>, mut idx| {
                let mut seq = vec![0; n - 2];
                for s in seq.iter_mut() {
                    *s = idx % n;
                    idx /= n;
                }
                let edges = prufer_tree(&seq, n);
                acc.entry(free_tree_code(n, &edges)).or_insert(edges);
                acc
            },
        )
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });

    let mut buckets: HashMap<(Vec<usize>, u64, usize), Vec<UnGraph<(), ()>>> = HashMap::new();
    let mut classes = 0;
    for edges in trees.values() {
        let present: HashSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        for u in 0..n {
            for v in u + 1..n {
                if present.contains(&(u, v)) {
                    continue;
                }
                let mut all = edges.clone();
                all.push((u, v));
                let g = Graph::from_edges(n, &all).unwrap();
                let mut degrees: Vec<usize> = (0..n).map(|x| g.degree(x)).collect();
                degrees.sort_unstable();
                let key = (degrees, wiener_floyd(&g), girth(&g).unwrap());
                let pg = petgraph_of(&g);
                let bucket = buckets.entry(key).or_default();
                if !bucket.iter().any(|h| petgraph::algo::is_isomorphic(h, &pg)) {
                    bucket.push(pg);
                    classes += 1;
                }
            }
        }
    }
    classes
}

/// `W(C_g) = (g/2) * floor(g^2/4)`, computed as `g * floor(g^2/4) / 2`.
pub fn cycle_wiener_closed(g: u64) -> u64 {
    g * (g * g / 4) / 2
}

#[derive(Debug, Default)]
pub struct RuleAudit {
    pub hits: BTreeMap<Rule, usize>,
    pub violations: Vec<String>,
}

impl RuleAudit {
    pub fn merge(mut self, other: RuleAudit) -> RuleAudit {
        for (k, v) in other.hits {
            *self.hits.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        self
    }
}

fn not_applicable<T>(r: &Result<T, TransformError>) -> bool {
    matches!(r, Err(TransformError::NotApplicable { .. }))
}

fn branch_code(g: &Graph, i: usize) -> RootedTreeCode {
    RootedTreeCode::of(&decompose_unicyclic(g).unwrap().branches[i].to_rooted_tree())
}

fn target_code(p: StarlikeParams) -> RootedTreeCode {
    RootedTreeCode::of(&uniwiener_core::build_star_like(p))
}

/// Applies every rule at every admissible position of `g` and checks each
/// stated conclusion with direct recomputation.
pub fn audit_rules(g: &Graph) -> RuleAudit {
    let mut hits: BTreeMap<Rule, usize> = BTreeMap::new();
    let mut violations = Vec::new();
    let d = decompose_unicyclic(g).unwrap();
    let w = wiener_floyd(g);
    let beta = matching_oracle(g);
    let gir = d.girth();
    let tag = uniwiener_core::emit_graph6(g);
    let mut fail = |msg: String| violations.push(format!("{tag}: {msg}"));

    let check_output = |o: &TransformOutcome, fail: &mut dyn FnMut(String)| {
        if o.result.order() != g.order() || girth(&o.result) != Some(gir) || !o.result.is_unicyclic() {
            fail(format!("{} produced a graph of different shape", o.rule));
        }
        if o.wiener_before != w || o.wiener_after != wiener_floyd(&o.result) {
            fail(format!("{} misreports Wiener values", o.rule));
        }
        if o.beta_before != beta || o.beta_after != matching_oracle(&o.result) {
            fail(format!("{} misreports matching numbers", o.rule));
        }
    };

    let trees: Vec<RootedTree> = d.branches.iter().map(|b| b.to_rooted_tree()).collect();
    for i in 0..gir {
        let t = &trees[i];
        let bt = matching_oracle(&t.tree);
        let matched = transforms::has_matched_root_edge(g, &d, i).unwrap();
        if let Some(x) = matched {
            if matching_oracle(&g.without_vertices(&[d.branches[i].root, x])) + 1 != beta {
                fail(format!(
                    "branch {i}: reported matched root edge is not in a maximum matching"
                ));
            }
        }
        let m = transforms::branch_collapse_matched(g, &d, i);
        if matched.is_some() || bt == 0 {
            let o = m.unwrap();
            *hits.entry(Rule::BranchCollapseMatched).or_default() += 1;
            check_output(&o, &mut fail);
            let target = if bt == 0 {
                StarlikeParams::new(0, 0)
            } else {
                StarlikeParams::new(bt - 1, t.order() + 1 - 2 * bt)
            };
            if branch_code(&o.result, i) != target_code(target) {
                fail(format!("branch {i}: matched collapse did not produce the target shape"));
            }
            if o.wiener_after > w || o.beta_after != beta {
                fail(format!("branch {i}: matched collapse raised W or changed beta"));
            }
            if (o.wiener_after == w) != (RootedTreeCode::of(t) == target_code(target)) {
                fail(format!("branch {i}: matched collapse equality case mismatch"));
            }
        } else if !not_applicable(&m) {
            fail(format!("branch {i}: matched collapse should be refused"));
        }

        let u = transforms::branch_collapse_unmatched(g, &d, i);
        if matched.is_none() && t.order() >= 2 {
            let o = u.unwrap();
            *hits.entry(Rule::BranchCollapseUnmatched).or_default() += 1;
            check_output(&o, &mut fail);
            let inner = matching_oracle(&t.tree.without_vertices(&[t.root]));
            let target = StarlikeParams::new(inner, t.order() - 2 * inner - 1);
            if branch_code(&o.result, i) != target_code(target) {
                fail(format!(
                    "branch {i}: unmatched collapse did not produce the target shape"
                ));
            }
            if o.wiener_after > w || o.beta_after != beta {
                fail(format!("branch {i}: unmatched collapse raised W or changed beta"));
            }
            if (o.wiener_after == w) != (RootedTreeCode::of(t) == target_code(target)) {
                fail(format!("branch {i}: unmatched collapse equality case mismatch"));
            }
        } else if !not_applicable(&u) {
            fail(format!("branch {i}: unmatched collapse should be refused"));
        }
    }

    let has_root_pendant = |t: &RootedTree| t.tree.neighbors(t.root).iter().any(|&v| t.tree.degree(v) == 1);
    for p in 0..gir {
        for q in 0..gir {
            if p == q {
                continue;
            }
            let (tp, tq) = (&trees[p], &trees[q]);
            let big = tp.order() >= 3 && tq.order() >= 3;

            let r = transforms::pendant_switch(g, &d, p, q);
            if big && has_root_pendant(tp) && has_root_pendant(tq) {
                let pair = r.unwrap();
                *hits.entry(Rule::PendantSwitch).or_default() += 1;
                check_output(&pair.first, &mut fail);
                check_output(&pair.second, &mut fail);
                if pair.first.wiener_after.min(pair.second.wiener_after) >= w {
                    fail(format!("pendant_switch({p},{q}): no strict decrease"));
                }
                if pair.first.beta_after != beta || pair.second.beta_after != beta {
                    fail(format!("pendant_switch({p},{q}): matching number changed"));
                }
            } else if !not_applicable(&r) {
                fail(format!("pendant_switch({p},{q}) should be refused"));
            }

            let r = transforms::pendant_absorb(g, &d, p, q);
            if big && !has_root_pendant(tp) && has_root_pendant(tq) {
                let pair = r.unwrap();
                *hits.entry(Rule::PendantAbsorb).or_default() += 1;
                check_output(&pair.first, &mut fail);
                check_output(&pair.second, &mut fail);
                if pair.first.wiener_after.min(pair.second.wiener_after) >= w {
                    fail(format!("pendant_absorb({p},{q}): no strict decrease"));
                }
            } else if !not_applicable(&r) {
                fail(format!("pendant_absorb({p},{q}) should be refused"));
            }

            let r = transforms::star_branch_fix(g, &d, p, q);
            let sp = starlike_shape(tp).filter(|s| s.b == 0 && s.a >= 1);
            let sq = starlike_shape(tq).filter(|s| s.b > 0 && 2 * s.a + s.b >= 2);
            if sp.is_some() && sq.is_some() {
                let o = r.unwrap();
                *hits.entry(Rule::StarBranchFix).or_default() += 1;
                check_output(&o, &mut fail);
                if o.wiener_after >= w || o.beta_after != beta {
                    fail(format!("star_branch_fix({p},{q}): no strict decrease with equal beta"));
                }
            } else if !not_applicable(&r) {
                fail(format!("star_branch_fix({p},{q}) should be refused"));
            }

            let pair = transforms::branch_merge(g, &d, p, q).unwrap();
            *hits.entry(Rule::BranchMerge).or_default() += 1;
            check_output(&pair.first, &mut fail);
            check_output(&pair.second, &mut fail);
            if tp.order() >= 2 && tq.order() >= 2 && pair.first.wiener_after.min(pair.second.wiener_after) >= w {
                fail(format!("branch_merge({p},{q}): no strict decrease"));
            }
            let paths = |t: &RootedTree| starlike_shape(t).is_some_and(|s| s.b == 0 && s.a >= 1);
            if paths(tp) && paths(tq) && (pair.first.beta_after != beta || pair.second.beta_after != beta) {
                fail(format!(
                    "branch_merge({p},{q}): matching number changed for T*_(a,0) branches"
                ));
            }
        }
        if transforms::branch_merge(g, &d, p, p) != Err(TransformError::SameBranch(p)) {
            fail(format!("branch_merge({p},{p}) should be an input error"));
        }
    }
    RuleAudit { hits, violations }
}

pub fn audit_rules_up_to(max_n: usize) -> RuleAudit {
    (3..=max_n)
        .flat_map(all_unicyclic)
        .collect::<Vec<_>>()
        .par_iter()
        .map(audit_rules)
        .reduce(RuleAudit::default, RuleAudit::merge)
}

/// Runs the reduction on `g` and checks every stated property; returns the
/// problems found.
pub fn audit_reduction(g: &Graph) -> Vec<String> {
    let tag = uniwiener_core::emit_graph6(g);
    let beta = matching_oracle(g);
    let trace = match transforms::reduce_to_canonical(g) {
        Ok(t) => t,
        Err(e) => return vec![format!("{tag}: {e}")],
    };
    let mut problems = Vec::new();
    let cap = g.order() * girth(g).unwrap();
    if trace.steps.len() > cap {
        problems.push(format!("{tag}: {} steps exceed cap {cap}", trace.steps.len()));
    }
    let mut prev = wiener_floyd(g);
    for s in &trace.steps {
        let w = wiener_floyd(&s.result);
        if w > prev || w != s.wiener_after {
            problems.push(format!("{tag}: Wiener index rose or misreported at {}", s.rule));
        }
        prev = w;
    }
    if matching_oracle(&trace.final_graph) != beta {
        problems.push(format!("{tag}: matching number not preserved"));
    }
    let d = decompose_unicyclic(&trace.final_graph).unwrap();
    let orders = d.branch_orders();
    if orders.iter().filter(|&&k| k >= 3).count() > 1 {
        problems.push(format!("{tag}: more than one branch of order >= 3 at the end"));
    }
    let rebuilt = trace.final_params.build().unwrap();
    if uniwiener_core::NecklaceCode::of(&rebuilt).unwrap()
        != uniwiener_core::NecklaceCode::of(&trace.final_graph).unwrap()
    {
        problems.push(format!("{tag}: final parameters do not describe the final graph"));
    }
    if trace.final_params.pendant_flags.len() + 1 != girth(g).unwrap() {
        problems.push(format!("{tag}: final girth differs"));
    }
    problems
}

pub fn wiener(g: &Graph) -> u64 {
    wiener_index(g).unwrap()
}

pub fn beta(g: &Graph) -> usize {
    matching_number(g).unwrap().0
}
