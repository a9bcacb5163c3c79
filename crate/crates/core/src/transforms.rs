//! Wiener-reducing switching operations on the branches of a unicyclic graph,
//! and a pipeline that drives any unicyclic graph into the canonical family
//! `U(T*_{a1,b1}, T*_{0,b_2}, .., T*_{0,b_g})` with every `b_j <= 1`.
//!
//! Every rule works at branch level: the graph is split into its cycle and
//! rooted branches, some branches are replaced, and the graph is reassembled
//! with the cycle on vertices `0..g` in the original cycle order. The
//! reassembled graph decomposes with the same branch indexing.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::constructions::{
    build_cycle_assembly, build_star_like, CanonicalFamilyParams, ConstructionError, StarlikeParams,
};
use crate::enumeration::{NecklaceCode, RootedTreeCode};
use crate::graph::{
    decompose_unicyclic, identify_vertices, matching_number, wiener_index, CycleDecomposition, Graph, GraphError,
    RootedTree, Vertex,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    BranchCollapseMatched,
    BranchCollapseUnmatched,
    PendantSwitch,
    PendantAbsorb,
    StarBranchFix,
    BranchMerge,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Rule::BranchCollapseMatched => "branch_collapse_matched",
            Rule::BranchCollapseUnmatched => "branch_collapse_unmatched",
            Rule::PendantSwitch => "pendant_switch",
            Rule::PendantAbsorb => "pendant_absorb",
            Rule::StarBranchFix => "star_branch_fix",
            Rule::BranchMerge => "branch_merge",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("{rule} not applicable: {reason}")]
    NotApplicable { rule: Rule, reason: String },
    #[error("branch index {index} out of range for girth {girth}")]
    BranchIndex { index: usize, girth: usize },
    #[error("branch indices must differ (got {0} twice)")]
    SameBranch(usize),
    #[error("matching number changed from {before} to {after} during reduction")]
    MatchingDrift { before: usize, after: usize },
    #[error("reduction did not reach the canonical family within {cap} steps")]
    IterationCap { cap: usize, partial: Vec<TransformOutcome> },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// What a rule guarantees about the Wiener index of its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WienerClaim {
    /// `W(after) <= W(before)`.
    NonIncreasing,
    /// `W(after) < W(before)`.
    Strict,
    /// One of two candidates; only the smaller of the pair is claimed below `W(before)`.
    MinOfPair,
    /// Nothing is claimed (degenerate input).
    Unclaimed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformOutcome {
    pub rule: Rule,
    pub result: Graph,
    pub wiener_before: u64,
    pub wiener_after: u64,
    pub beta_before: usize,
    pub beta_after: usize,
    pub claim: WienerClaim,
    /// Whether the rule claims the matching number is unchanged.
    pub preserves_matching: bool,
}

impl TransformOutcome {
    pub fn strict(&self) -> bool {
        self.claim == WienerClaim::Strict
    }

    /// Checks the outcome's own claims (pair claims are checked on the pair).
    pub fn holds(&self) -> bool {
        let wiener_ok = match self.claim {
            WienerClaim::NonIncreasing => self.wiener_after <= self.wiener_before,
            WienerClaim::Strict => self.wiener_after < self.wiener_before,
            WienerClaim::MinOfPair | WienerClaim::Unclaimed => true,
        };
        wiener_ok && (!self.preserves_matching || self.beta_after == self.beta_before)
    }
}

/// The two candidates `G_1`, `G_2` of a pairwise rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePair {
    pub first: TransformOutcome,
    pub second: TransformOutcome,
}

impl CandidatePair {
    pub fn min_wiener(&self) -> u64 {
        self.first.wiener_after.min(self.second.wiener_after)
    }

    /// Checks `W(G) > min(W(G_1), W(G_2))` when claimed, and matching preservation
    /// for both candidates when claimed.
    pub fn holds(&self) -> bool {
        let claimed = self.first.claim == WienerClaim::MinOfPair;
        let wiener_ok = !claimed || self.min_wiener() < self.first.wiener_before;
        wiener_ok && self.first.holds() && self.second.holds()
    }

    /// The smaller candidate among those keeping the matching number, ties broken
    /// by canonical code.
    pub fn best_matching_preserving(&self) -> Option<&TransformOutcome> {
        [&self.first, &self.second]
            .into_iter()
            .filter(|o| o.beta_after == o.beta_before)
            .min_by_key(|o| (o.wiener_after, NecklaceCode::of(&o.result).ok()))
    }
}

/// Ordered record of a reduction together with where it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: Graph,
    pub steps: Vec<TransformOutcome>,
    pub final_graph: Graph,
    pub final_params: CanonicalFamilyParams,
}

impl ReductionTrace {
    pub fn wiener_sequence(&self) -> Vec<u64> {
        let mut seq = vec![wiener_index(&self.initial).expect("connected")];
        seq.extend(self.steps.iter().map(|s| s.wiener_after));
        seq
    }
}

/// A unicyclic graph as an ordered list of rooted branches around its cycle.
#[derive(Debug, Clone)]
struct Branches {
    trees: Vec<RootedTree>,
}

impl Branches {
    fn of(d: &CycleDecomposition) -> Self {
        Branches {
            trees: d.branches.iter().map(|b| b.to_rooted_tree()).collect(),
        }
    }

    fn assemble(&self) -> Graph {
        build_cycle_assembly(self.trees.len(), &self.trees).expect("branches are trees and g >= 3")
    }
}

/// Identifies the roots of two rooted trees; the root of `a` stays the root.
fn merge_roots(a: &RootedTree, b: &RootedTree) -> RootedTree {
    RootedTree {
        tree: identify_vertices(&a.tree, a.root, &b.tree, b.root).expect("roots are valid"),
        root: a.root,
    }
}

fn without_vertex(t: &RootedTree, v: Vertex) -> RootedTree {
    debug_assert_ne!(v, t.root);
    let mut keep = vec![true; t.order()];
    keep[v] = false;
    let (tree, kept) = t.tree.induced(&keep);
    let root = kept.iter().position(|&w| w == t.root).expect("root kept");
    RootedTree { tree, root }
}

/// Leaves adjacent to the root.
fn root_pendants(t: &RootedTree) -> Vec<Vertex> {
    t.tree
        .neighbors(t.root)
        .iter()
        .copied()
        .filter(|&v| t.tree.degree(v) == 1)
        .collect()
}

/// Recognizes `T*_{a,b}`: every child of the root is a leaf or has exactly one
/// child, which is a leaf.
pub fn starlike_shape(t: &RootedTree) -> Option<StarlikeParams> {
    let (mut a, mut b) = (0, 0);
    for &c in t.tree.neighbors(t.root) {
        match t.tree.degree(c) {
            1 => b += 1,
            2 => {
                let grand = *t.tree.neighbors(c).iter().find(|&&w| w != t.root)?;
                if t.tree.degree(grand) != 1 {
                    return None;
                }
                a += 1;
            }
            _ => return None,
        }
    }
    Some(StarlikeParams::new(a, b))
}

fn same_rooted_shape(t: &RootedTree, target: StarlikeParams) -> bool {
    RootedTreeCode::of(t) == RootedTreeCode::of(&build_star_like(target))
}

fn check_index(d: &CycleDecomposition, i: usize) -> Result<(), TransformError> {
    if i < d.girth() {
        Ok(())
    } else {
        Err(TransformError::BranchIndex {
            index: i,
            girth: d.girth(),
        })
    }
}

fn check_pair(d: &CycleDecomposition, p: usize, q: usize) -> Result<(), TransformError> {
    check_index(d, p)?;
    check_index(d, q)?;
    if p == q {
        return Err(TransformError::SameBranch(p));
    }
    Ok(())
}

fn not_applicable(rule: Rule, reason: impl Into<String>) -> TransformError {
    TransformError::NotApplicable {
        rule,
        reason: reason.into(),
    }
}

struct Before {
    wiener: u64,
    beta: usize,
}

impl Before {
    fn of(g: &Graph) -> Result<Self, TransformError> {
        Ok(Before {
            wiener: wiener_index(g)?,
            beta: matching_number(g)?.0,
        })
    }

    fn outcome(&self, rule: Rule, result: Graph, claim: WienerClaim, preserves_matching: bool) -> TransformOutcome {
        TransformOutcome {
            rule,
            wiener_before: self.wiener,
            wiener_after: wiener_index(&result).expect("assembled graph is connected"),
            beta_before: self.beta,
            beta_after: matching_number(&result).expect("assembled graph is unicyclic").0,
            result,
            claim,
            preserves_matching,
        }
    }
}

/// Some `x` in branch `i` adjacent to `u_i` such that a maximum matching of `G`
/// uses the edge `u_i x`, i.e. `beta(G - u_i - x) = beta(G) - 1`.
pub fn has_matched_root_edge(g: &Graph, d: &CycleDecomposition, i: usize) -> Result<Option<Vertex>, TransformError> {
    check_index(d, i)?;
    let beta = matching_number(g)?.0;
    let branch = &d.branches[i];
    let root = branch.root;
    for &x in g.neighbors(root) {
        if !branch.vertices.contains(&x) {
            continue;
        }
        let rest = g.without_vertices(&[root, x]);
        if matching_number(&rest)?.0 + 1 == beta {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Replaces branch `i` by `T*_{beta_i - 1, n_i - 2 beta_i + 1}` (or a single
/// vertex when the branch has no edges), provided some maximum matching of `G`
/// matches `u_i` into its own branch.
pub fn branch_collapse_matched(
    g: &Graph,
    d: &CycleDecomposition,
    i: usize,
) -> Result<TransformOutcome, TransformError> {
    let rule = Rule::BranchCollapseMatched;
    check_index(d, i)?;
    let mut branches = Branches::of(d);
    let tree = &branches.trees[i];
    let (branch_beta, _) = matching_number(&tree.tree)?;
    if branch_beta > 0 && has_matched_root_edge(g, d, i)?.is_none() {
        return Err(not_applicable(
            rule,
            "no maximum matching uses an edge from the root into its branch",
        ));
    }
    let target = if branch_beta == 0 {
        StarlikeParams::new(0, 0)
    } else {
        StarlikeParams::new(branch_beta - 1, tree.order() + 1 - 2 * branch_beta)
    };
    branches.trees[i] = build_star_like(target);
    Before::of(g).map(|b| b.outcome(rule, branches.assemble(), WienerClaim::NonIncreasing, true))
}

/// Replaces branch `i` by `T*_{b, n_i - 2b - 1}` with `b = beta(T_i - u_i)`,
/// provided no maximum matching of `G` matches `u_i` into its own branch.
pub fn branch_collapse_unmatched(
    g: &Graph,
    d: &CycleDecomposition,
    i: usize,
) -> Result<TransformOutcome, TransformError> {
    let rule = Rule::BranchCollapseUnmatched;
    check_index(d, i)?;
    let mut branches = Branches::of(d);
    let tree = &branches.trees[i];
    if tree.order() < 2 {
        return Err(not_applicable(rule, "branch has a single vertex"));
    }
    if let Some(x) = has_matched_root_edge(g, d, i)? {
        return Err(not_applicable(
            rule,
            format!("a maximum matching uses root edge {}-{}", d.branches[i].root, x),
        ));
    }
    let (inner_beta, _) = matching_number(&without_vertex_root(tree))?;
    let target = StarlikeParams::new(inner_beta, tree.order() - 2 * inner_beta - 1);
    branches.trees[i] = build_star_like(target);
    Before::of(g).map(|b| b.outcome(rule, branches.assemble(), WienerClaim::NonIncreasing, true))
}

/// The forest left after deleting the root.
fn without_vertex_root(t: &RootedTree) -> Graph {
    t.tree.without_vertices(&[t.root])
}

fn single_edge() -> RootedTree {
    build_star_like(StarlikeParams::new(0, 1))
}

/// Moves the mass of one branch onto the other, leaving a single pendant
/// behind: `G_1` keeps `u_q y` at `u_q` and grafts the rest of `T_q` onto `u_p`;
/// `G_2` is the mirror image. Both branches need order at least 3 and a
/// pendant at their root.
pub fn pendant_switch(g: &Graph, d: &CycleDecomposition, p: usize, q: usize) -> Result<CandidatePair, TransformError> {
    let rule = Rule::PendantSwitch;
    check_pair(d, p, q)?;
    let branches = Branches::of(d);
    let (tp, tq) = (&branches.trees[p], &branches.trees[q]);
    if tp.order() < 3 || tq.order() < 3 {
        return Err(not_applicable(rule, "both branches need order at least 3"));
    }
    let (Some(&x), Some(&y)) = (root_pendants(tp).first(), root_pendants(tq).first()) else {
        return Err(not_applicable(rule, "both roots need a pendant neighbor"));
    };
    let before = Before::of(g)?;

    let mut first = branches.clone();
    first.trees[p] = merge_roots(tp, &without_vertex(tq, y));
    first.trees[q] = single_edge();

    let mut second = branches.clone();
    second.trees[p] = single_edge();
    second.trees[q] = merge_roots(tq, &without_vertex(tp, x));

    Ok(CandidatePair {
        first: before.outcome(rule, first.assemble(), WienerClaim::MinOfPair, true),
        second: before.outcome(rule, second.assemble(), WienerClaim::MinOfPair, true),
    })
}

/// Branch `p` (order >= 3) has no pendant at its root, branch `q` (order >= 3)
/// does. `G_1` grafts `T_q` minus its root pendant onto `u_p`; `G_2` grafts all
/// of `T_p` onto `u_q`. No claim about the matching number.
pub fn pendant_absorb(g: &Graph, d: &CycleDecomposition, p: usize, q: usize) -> Result<CandidatePair, TransformError> {
    let rule = Rule::PendantAbsorb;
    check_pair(d, p, q)?;
    let branches = Branches::of(d);
    let (tp, tq) = (&branches.trees[p], &branches.trees[q]);
    if tp.order() < 3 || tq.order() < 3 {
        return Err(not_applicable(rule, "both branches need order at least 3"));
    }
    if !root_pendants(tp).is_empty() {
        return Err(not_applicable(rule, "first branch has a pendant at its root"));
    }
    let Some(&y) = root_pendants(tq).first() else {
        return Err(not_applicable(rule, "second branch has no pendant at its root"));
    };
    let before = Before::of(g)?;

    let mut first = branches.clone();
    first.trees[p] = merge_roots(tp, &without_vertex(tq, y));
    first.trees[q] = single_edge();

    let mut second = branches.clone();
    second.trees[p] = RootedTree::single();
    second.trees[q] = merge_roots(tq, tp);

    Ok(CandidatePair {
        first: before.outcome(rule, first.assemble(), WienerClaim::MinOfPair, false),
        second: before.outcome(rule, second.assemble(), WienerClaim::MinOfPair, false),
    })
}

/// Star-like branches `p = T*_{a_p,0}` (`a_p >= 1`) and `q = T*_{a_q,b_q}`
/// (`b_q > 0`, `2a_q + b_q >= 2`): returns a graph with the same matching number
/// and strictly smaller Wiener index.
///
/// Candidates are the two graphs of [`pendant_absorb`]; when the first one gains
/// a matching edge it is replaced by `T*_{a_p+a_q-1, b_q+1}` at `u_p` with a
/// single pendant at `u_q`.
pub fn star_branch_fix(
    g: &Graph,
    d: &CycleDecomposition,
    p: usize,
    q: usize,
) -> Result<TransformOutcome, TransformError> {
    let rule = Rule::StarBranchFix;
    check_pair(d, p, q)?;
    let branches = Branches::of(d);
    let sp = starlike_shape(&branches.trees[p]).filter(|s| s.b == 0 && s.a >= 1);
    let sq = starlike_shape(&branches.trees[q]).filter(|s| s.b > 0 && 2 * s.a + s.b >= 2);
    let (Some(sp), Some(sq)) = (sp, sq) else {
        return Err(not_applicable(
            rule,
            "needs T*_{a,0} with a >= 1 and T*_{a',b'} with b' > 0, 2a'+b' >= 2",
        ));
    };
    let pair = pendant_absorb(g, d, p, q)?;
    let before = Before::of(g)?;
    let first = if pair.first.beta_after == before.beta {
        pair.first
    } else {
        let mut repaired = branches.clone();
        repaired.trees[p] = build_star_like(StarlikeParams::new(sp.a + sq.a - 1, sq.b + 1));
        repaired.trees[q] = single_edge();
        before.outcome(rule, repaired.assemble(), WienerClaim::Strict, true)
    };
    let best = CandidatePair {
        first,
        second: pair.second,
    }
    .best_matching_preserving()
    .cloned()
    .ok_or_else(|| not_applicable(rule, "no candidate keeps the matching number"))?;
    Ok(TransformOutcome {
        rule,
        claim: WienerClaim::Strict,
        preserves_matching: true,
        ..best
    })
}

/// `G_1` grafts all of `T_q` onto `u_p` (leaving `u_q` bare); `G_2` grafts `T_p`
/// onto `u_q`. The decrease is claimed when both branches have an edge; the
/// matching number is claimed unchanged when both are `T*_{a,0}` with `a >= 1`.
pub fn branch_merge(g: &Graph, d: &CycleDecomposition, p: usize, q: usize) -> Result<CandidatePair, TransformError> {
    let rule = Rule::BranchMerge;
    check_pair(d, p, q)?;
    let branches = Branches::of(d);
    let (tp, tq) = (&branches.trees[p], &branches.trees[q]);
    let claim = if tp.order() >= 2 && tq.order() >= 2 {
        WienerClaim::MinOfPair
    } else {
        WienerClaim::Unclaimed
    };
    let paths_only = |t: &RootedTree| starlike_shape(t).is_some_and(|s| s.b == 0 && s.a >= 1);
    let preserves = paths_only(tp) && paths_only(tq);
    let before = Before::of(g)?;

    let mut first = branches.clone();
    first.trees[p] = merge_roots(tp, tq);
    first.trees[q] = RootedTree::single();

    let mut second = branches.clone();
    second.trees[p] = RootedTree::single();
    second.trees[q] = merge_roots(tq, tp);

    Ok(CandidatePair {
        first: before.outcome(rule, first.assemble(), claim, preserves),
        second: before.outcome(rule, second.assemble(), claim, preserves),
    })
}

/// True when at most one branch has order 3 or more and that branch is star-like.
pub fn is_canonical(d: &CycleDecomposition) -> bool {
    let trees = Branches::of(d).trees;
    let big: Vec<&RootedTree> = trees.iter().filter(|t| t.order() >= 3).collect();
    match big.as_slice() {
        [] => true,
        [t] => starlike_shape(t).is_some(),
        _ => false,
    }
}

/// Reads off the canonical-family parameters of a graph already in the family.
/// Among rotations and reflections the largest parameters win, so pendants sit
/// as close to `u_2` as possible.
pub fn canonical_params(d: &CycleDecomposition) -> Option<CanonicalFamilyParams> {
    if !is_canonical(d) {
        return None;
    }
    let trees = Branches::of(d).trees;
    let g = trees.len();
    let max_order = trees.iter().map(RootedTree::order).max().unwrap_or(1);
    let mut best: Option<CanonicalFamilyParams> = None;
    for start in (0..g).filter(|&i| trees[i].order() == max_order) {
        for reversed in [false, true] {
            let at = |k: usize| if reversed { (start + g - k) % g } else { (start + k) % g };
            let cand = CanonicalFamilyParams {
                big: starlike_shape(&trees[start])?,
                pendant_flags: (1..g).map(|k| trees[at(k)].order() == 2).collect(),
            };
            if best.as_ref().is_none_or(|b| cand > *b) {
                best = Some(cand);
            }
        }
    }
    best
}

/// Applies branch collapses until every branch is star-like, then pairwise
/// rules until at most one branch has order 3 or more.
pub fn reduce_to_canonical(g: &Graph) -> Result<ReductionTrace, TransformError> {
    let initial_beta = matching_number(g)?.0;
    let d = decompose_unicyclic(g)?;
    let girth = d.girth();
    let cap = g.order() * girth;
    let mut steps: Vec<TransformOutcome> = Vec::new();
    let mut current = g.clone();

    let push = |steps: &mut Vec<TransformOutcome>, current: &mut Graph, o: TransformOutcome| {
        if o.beta_after != initial_beta {
            return Err(TransformError::MatchingDrift {
                before: initial_beta,
                after: o.beta_after,
            });
        }
        *current = o.result.clone();
        steps.push(o);
        if steps.len() > cap {
            return Err(TransformError::IterationCap {
                cap,
                partial: steps.clone(),
            });
        }
        Ok(())
    };

    for i in 0..girth {
        let d = decompose_unicyclic(&current)?;
        let tree = d.branches[i].to_rooted_tree();
        if tree.order() < 2 {
            continue;
        }
        let outcome = if has_matched_root_edge(&current, &d, i)?.is_some() {
            branch_collapse_matched(&current, &d, i)?
        } else {
            branch_collapse_unmatched(&current, &d, i)?
        };
        if !same_rooted_shape(&tree, starlike_shape_of_result(&outcome.result, i)) {
            push(&mut steps, &mut current, outcome)?;
        }
    }

    loop {
        let d = decompose_unicyclic(&current)?;
        if is_canonical(&d) {
            let final_params = canonical_params(&d).expect("canonical graph has parameters");
            return Ok(ReductionTrace {
                initial: g.clone(),
                steps,
                final_graph: current,
                final_params,
            });
        }
        let trees = Branches::of(&d).trees;
        let big: Vec<usize> = (0..girth).filter(|&i| trees[i].order() >= 3).collect();
        let (p, q) = (big[0], big[1]);
        let sp = starlike_shape(&trees[p]).expect("collapsed branches are star-like");
        let sq = starlike_shape(&trees[q]).expect("collapsed branches are star-like");
        let outcome = match (sp.b > 0, sq.b > 0) {
            (true, true) => choose(pendant_switch(&current, &d, p, q)?)?,
            (false, true) => star_branch_fix(&current, &d, p, q)?,
            (true, false) => star_branch_fix(&current, &d, q, p)?,
            (false, false) => choose(branch_merge(&current, &d, p, q)?)?,
        };
        push(&mut steps, &mut current, outcome)?;
    }
}

/// Shape of branch `i` in an assembled rule output.
fn starlike_shape_of_result(g: &Graph, i: usize) -> StarlikeParams {
    let d = decompose_unicyclic(g).expect("rule output is unicyclic");
    starlike_shape(&d.branches[i].to_rooted_tree()).expect("collapse output is star-like")
}

fn choose(pair: CandidatePair) -> Result<TransformOutcome, TransformError> {
    let rule = pair.first.rule;
    let best = pair
        .best_matching_preserving()
        .cloned()
        .ok_or_else(|| not_applicable(rule, "no candidate keeps the matching number"))?;
    Ok(TransformOutcome {
        claim: WienerClaim::Strict,
        preserves_matching: true,
        ..best
    })
}
