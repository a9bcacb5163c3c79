//! Canonical codes for rooted trees and for unicyclic graphs.
//!
//! A rooted tree is encoded by its canonical level sequence: the preorder list
//! of depths with every vertex's child subtrees sorted so the whole sequence is
//! lexicographically maximal. A unicyclic graph is then the cycle length plus
//! the dihedrally minimal sequence of its branch codes.

use std::fmt;

use crate::graph::{decompose_unicyclic, Graph, GraphError, RootedTree, Vertex};

/// Canonical level sequence of a rooted tree (root at depth 0).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTreeCode(Vec<u8>);

impl RootedTreeCode {
    /// Wraps a level sequence that is already canonical.
    pub(crate) fn from_canonical_levels(levels: Vec<u8>) -> Self {
        RootedTreeCode(levels)
    }

    pub fn of(tree: &RootedTree) -> Self {
        let (_, parent) = tree.bfs_order();
        let mut children = vec![Vec::new(); tree.order()];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(v);
            }
        }
        RootedTreeCode(subtree_code(&children, tree.root, 0))
    }

    pub fn levels(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// Builds the tree; vertex `i` is the `i`-th entry of the level sequence.
    pub fn to_rooted_tree(&self) -> RootedTree {
        let mut edges = Vec::with_capacity(self.0.len().saturating_sub(1));
        let mut last_at_level: Vec<Vertex> = Vec::new();
        for (v, &level) in self.0.iter().enumerate() {
            let level = level as usize;
            last_at_level.truncate(level);
            if let Some(&p) = last_at_level.last() {
                edges.push((p, v));
            }
            last_at_level.push(v);
        }
        RootedTree {
            tree: Graph::from_edges(self.0.len(), &edges).expect("level sequence is a tree"),
            root: 0,
        }
    }
}

impl fmt::Debug for RootedTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RootedTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            write!(f, "{}", char::from_digit(u32::from(l), 36).unwrap_or('?'))?;
        }
        Ok(())
    }
}

fn subtree_code(children: &[Vec<Vertex>], v: Vertex, depth: u8) -> Vec<u8> {
    let mut parts: Vec<Vec<u8>> = children[v]
        .iter()
        .map(|&c| subtree_code(children, c, depth + 1))
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut code = Vec::with_capacity(1 + parts.iter().map(Vec::len).sum::<usize>());
    code.push(depth);
    for p in parts {
        code.extend(p);
    }
    code
}

/// Dihedrally minimal branch sequence; a complete isomorphism invariant for
/// unicyclic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecklaceCode {
    girth: usize,
    branches: Vec<RootedTreeCode>,
}

impl NecklaceCode {
    pub fn of(g: &Graph) -> Result<Self, GraphError> {
        let d = decompose_unicyclic(g)?;
        let codes = d
            .branches
            .iter()
            .map(|b| RootedTreeCode::of(&b.to_rooted_tree()))
            .collect();
        Ok(Self::from_branches(codes))
    }

    /// Canonicalizes a branch sequence read around the cycle.
    pub fn from_branches(branches: Vec<RootedTreeCode>) -> Self {
        let girth = branches.len();
        let start = min_dihedral_image(&branches);
        NecklaceCode {
            girth,
            branches: apply_image(&branches, start),
        }
    }

    pub fn girth(&self) -> usize {
        self.girth
    }

    pub fn branches(&self) -> &[RootedTreeCode] {
        &self.branches
    }

    pub fn order(&self) -> usize {
        self.branches.iter().map(RootedTreeCode::order).sum()
    }
}

impl fmt::Debug for NecklaceCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for NecklaceCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}[", self.girth)?;
        for (i, b) in self.branches.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", b)?;
        }
        f.write_str("]")
    }
}

/// A rotation start plus a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct DihedralImage {
    pub start: usize,
    pub reversed: bool,
}

pub(crate) fn image_at<T>(items: &[T], image: DihedralImage, k: usize) -> &T {
    let g = items.len();
    if image.reversed {
        &items[(image.start + g - k % g) % g]
    } else {
        &items[(image.start + k) % g]
    }
}

fn apply_image<T: Clone>(items: &[T], image: DihedralImage) -> Vec<T> {
    (0..items.len()).map(|k| image_at(items, image, k).clone()).collect()
}

fn compare_images<T: Ord>(items: &[T], a: DihedralImage, b: DihedralImage) -> std::cmp::Ordering {
    for k in 0..items.len() {
        let ord = image_at(items, a, k).cmp(image_at(items, b, k));
        if ord.is_ne() {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

/// The lexicographically least of the `2g` rotations and reflections.
pub(crate) fn min_dihedral_image<T: Ord>(items: &[T]) -> DihedralImage {
    let mut best = DihedralImage {
        start: 0,
        reversed: false,
    };
    for start in 0..items.len() {
        for reversed in [false, true] {
            let cand = DihedralImage { start, reversed };
            if compare_images(items, cand, best).is_lt() {
                best = cand;
            }
        }
    }
    best
}

/// True when `items` is already its own minimal dihedral image.
pub(crate) fn is_dihedral_minimal<T: Ord>(items: &[T]) -> bool {
    let identity = DihedralImage {
        start: 0,
        reversed: false,
    };
    (0..items.len()).all(|start| {
        [false, true]
            .into_iter()
            .all(|reversed| compare_images(items, DihedralImage { start, reversed }, identity).is_ge())
    })
}
