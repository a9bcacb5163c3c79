//! Isomorphism-free generation of unicyclic graphs and brute-force checks of
//! the extremal lower bound.
//!
//! A unicyclic graph is a cycle with a rooted tree hanging from every cycle
//! vertex, so its isomorphism classes are exactly the dihedral classes of
//! branch sequences. Generation walks every composition of `n` into `g` branch
//! orders, every choice of canonical rooted tree per branch, and keeps the
//! sequences that are already dihedrally minimal.

mod codes;
mod trees;
mod verify;

use std::collections::BTreeMap;

use thiserror::Error;

pub use codes::{NecklaceCode, RootedTreeCode};
pub use trees::{gen_rooted_trees, RootedTrees};
pub use verify::{in_hypothesis, min_wiener, verify_sweep, ClassSurvey, SweepConfig, SweepOutcome, VerificationReport};

use crate::constructions::{build_cycle_assembly, CanonicalFamilyParams, StarlikeParams};
use crate::graph::{matching_number, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("need 3 <= g <= n, got n={n}, g={g}")]
    Range { n: usize, g: usize },
}

/// One isomorphism class: its canonical code and a representative graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicClass {
    pub code: NecklaceCode,
    pub graph: Graph,
}

/// Canonical rooted trees for every order `1..=max_order`; index 0 is empty.
#[derive(Debug, Clone)]
pub struct TreeTable {
    by_order: Vec<Vec<RootedTreeCode>>,
}

impl TreeTable {
    pub fn new(max_order: usize) -> Self {
        let mut by_order = vec![Vec::new()];
        by_order.extend((1..=max_order).map(|k| gen_rooted_trees(k).collect()));
        TreeTable { by_order }
    }

    pub fn trees(&self, order: usize) -> &[RootedTreeCode] {
        &self.by_order[order]
    }
}

/// All compositions of `n` into `g` positive parts, in lexicographic order.
/// Each one is an independent unit of generation work.
pub fn compositions(n: usize, g: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=rest.saturating_sub(parts - 1) {
            cur.push(first);
            rec(rest - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if g >= 1 && n >= g {
        rec(n, g, &mut Vec::with_capacity(g), &mut out);
    }
    out
}

/// Canonical classes whose branch orders are exactly `composition`.
pub fn gen_unicyclic_unit(composition: &[usize], table: &TreeTable) -> Vec<UnicyclicClass> {
    let g = composition.len();
    let pools: Vec<&[RootedTreeCode]> = composition.iter().map(|&k| table.trees(k)).collect();
    let mut index = vec![0usize; g];
    let mut out = Vec::new();
    loop {
        let seq: Vec<&RootedTreeCode> = (0..g).map(|i| &pools[i][index[i]]).collect();
        if codes::is_dihedral_minimal(&seq) {
            let branches: Vec<RootedTreeCode> = seq.into_iter().cloned().collect();
            let trees: Vec<_> = branches.iter().map(RootedTreeCode::to_rooted_tree).collect();
            let graph = build_cycle_assembly(g, &trees).expect("generated branches are trees");
            out.push(UnicyclicClass {
                code: NecklaceCode::from_branches(branches),
                graph,
            });
        }
        // odometer over the per-branch tree choices
        let mut pos = g;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < pools[pos].len() {
                break;
            }
            index[pos] = 0;
        }
    }
}

/// One representative per isomorphism class of unicyclic graphs of order `n`
/// and girth `g`.
pub fn gen_unicyclic(n: usize, g: usize) -> Result<impl Iterator<Item = UnicyclicClass>, EnumerationError> {
    if g < 3 || g > n {
        return Err(EnumerationError::Range { n, g });
    }
    let table = TreeTable::new(n - g + 1);
    Ok(compositions(n, g)
        .into_iter()
        .flat_map(move |c| gen_unicyclic_unit(&c, &table)))
}

/// A canonical-family member together with its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalMember {
    pub params: CanonicalFamilyParams,
    pub code: NecklaceCode,
    pub graph: Graph,
}

/// Members of `U(T*_{a1,b1}, T*_{0,b_2}, .., T*_{0,b_g})` (each `b_j` in `{0,1}`)
/// with the given order, girth and matching number, one per isomorphism class.
pub fn enumerate_canonical_family(n: usize, g: usize, beta: usize) -> Vec<CanonicalMember> {
    if g < 3 || g > n || 2 * beta > n {
        return Vec::new();
    }
    let mut seen: BTreeMap<NecklaceCode, CanonicalMember> = BTreeMap::new();
    for mask in 0u64..(1u64 << (g - 1)) {
        let pendant_flags: Vec<bool> = (0..g - 1).map(|j| mask >> j & 1 == 1).collect();
        let t = pendant_flags.iter().filter(|&&f| f).count();
        // the big branch has order n - (g - 1) - t = 2*a1 + b1 + 1
        let Some(big_order) = n.checked_sub(g - 1 + t) else {
            continue;
        };
        if big_order == 0 {
            continue;
        }
        for a1 in 0..=(big_order - 1) / 2 {
            let params = CanonicalFamilyParams {
                big: StarlikeParams::new(a1, big_order - 1 - 2 * a1),
                pendant_flags: pendant_flags.clone(),
            };
            let graph = params.build().expect("canonical family members are valid");
            if matching_number(&graph).expect("unicyclic").0 != beta {
                continue;
            }
            let code = NecklaceCode::of(&graph).expect("unicyclic");
            seen.entry(code.clone())
                .or_insert(CanonicalMember { params, code, graph });
        }
    }
    seen.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_gstar, ExtremalParams};
    use crate::graph::{girth, wiener_index};

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(5, 3).len(), 6);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
    }

    #[test]
    fn tiny_classes() {
        let c5: Vec<_> = gen_unicyclic(5, 5).unwrap().collect();
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].graph, Graph::cycle(5));
        let total: usize = (3..=5).map(|g| gen_unicyclic(5, g).unwrap().count()).sum();
        assert_eq!(total, 5);
        assert!(gen_unicyclic(4, 5).is_err());
        assert!(gen_unicyclic(4, 2).is_err());
    }

    #[test]
    fn emitted_graphs_match_their_codes() {
        for n in 3..=8 {
            for g in 3..=n {
                for class in gen_unicyclic(n, g).unwrap() {
                    assert_eq!(class.graph.order(), n);
                    assert_eq!(girth(&class.graph), Some(g));
                    assert_eq!(NecklaceCode::of(&class.graph).unwrap(), class.code);
                }
            }
        }
    }

    #[test]
    fn canonical_family_contains_gstar() {
        let fam = enumerate_canonical_family(10, 3, 5);
        let gstar = construct_gstar(ExtremalParams::new(10, 3, 5).unwrap()).unwrap();
        let gcode = NecklaceCode::of(&gstar).unwrap();
        assert!(fam.iter().any(|m| m.code == gcode));
        let best = fam.iter().min_by_key(|m| wiener_index(&m.graph).unwrap()).unwrap();
        assert_eq!(best.code, gcode);

        let fam = enumerate_canonical_family(12, 4, 6);
        let min = fam.iter().map(|m| wiener_index(&m.graph).unwrap()).min().unwrap();
        assert_eq!(min, 162);

        assert!(enumerate_canonical_family(7, 3, 10).is_empty());
    }
}
