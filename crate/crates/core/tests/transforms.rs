mod common;

use common::{audit_reduction, audit_rules_up_to, wiener};
use uniwiener_core::constructions::{build_cycle_assembly, construct_gstar, ExtremalParams};
use uniwiener_core::enumeration::gen_rooted_trees;
use uniwiener_core::graph::RootedTree;
use uniwiener_core::transforms::{reduce_to_canonical, Rule};
use uniwiener_core::Graph;

#[test]
fn every_rule_instance_up_to_order_7() {
    let audit = audit_rules_up_to(7);
    assert!(
        audit.violations.is_empty(),
        "{:#?}",
        &audit.violations[..audit.violations.len().min(10)]
    );
    for rule in [
        Rule::BranchCollapseMatched,
        Rule::BranchCollapseUnmatched,
        Rule::PendantSwitch,
        Rule::PendantAbsorb,
        Rule::StarBranchFix,
        Rule::BranchMerge,
    ] {
        assert!(audit.hits.get(&rule).copied().unwrap_or(0) > 0, "{rule} never applied");
    }
}

#[test]
fn reduction_up_to_order_8() {
    for n in 3..=8 {
        for g in common::all_unicyclic(n) {
            let problems = audit_reduction(&g);
            assert!(problems.is_empty(), "{problems:?}");
        }
    }
}

#[test]
fn cycles_and_extremal_graphs_are_fixed_points() {
    for g in 3..=9 {
        assert!(reduce_to_canonical(&Graph::cycle(g)).unwrap().steps.is_empty());
    }
    for (n, g, beta) in [(10, 3, 5), (12, 4, 6), (16, 5, 8), (20, 6, 9), (14, 3, 7)] {
        let gstar = construct_gstar(ExtremalParams::new(n, g, beta).unwrap()).unwrap();
        let trace = reduce_to_canonical(&gstar).unwrap();
        assert!(trace.steps.is_empty(), "({n},{g},{beta})");
        assert_eq!(trace.final_graph, gstar);
    }
}

/// Replacing one branch by a tree of the same order whose Wiener index and root
/// transmission are both no larger never increases the Wiener index.
#[test]
fn smaller_branch_statistics_never_increase_wiener() {
    let rest = [
        RootedTree::single(),
        gen_rooted_trees(3).nth(1).unwrap().to_rooted_tree(),
        RootedTree::single(),
    ];
    for order in 1..=7 {
        let trees: Vec<RootedTree> = gen_rooted_trees(order).map(|c| c.to_rooted_tree()).collect();
        for a in &trees {
            for b in &trees {
                if b.wiener() > a.wiener() || b.root_transmission() > a.root_transmission() {
                    continue;
                }
                let with = |t: &RootedTree| {
                    let mut branches = vec![t.clone()];
                    branches.extend(rest.iter().cloned());
                    wiener(&build_cycle_assembly(4, &branches).unwrap())
                };
                assert!(with(b) <= with(a));
            }
        }
    }
}
