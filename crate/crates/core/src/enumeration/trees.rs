//! Rooted trees by canonical level-sequence successor iteration.

use super::codes::RootedTreeCode;

/// Streams one canonical level sequence per rooted tree of the given order,
/// from the path (largest sequence) down to the star.
#[derive(Debug, Clone)]
pub struct RootedTrees {
    current: Option<Vec<u8>>,
}

pub fn gen_rooted_trees(order: usize) -> RootedTrees {
    assert!(order >= 1, "rooted trees need at least one vertex");
    assert!(order <= u8::MAX as usize, "order too large for level sequences");
    RootedTrees {
        current: Some((0..order as u8).collect()),
    }
}

impl Iterator for RootedTrees {
    type Item = RootedTreeCode;

    fn next(&mut self) -> Option<RootedTreeCode> {
        let levels = self.current.take()?;
        self.current = successor(&levels);
        Some(RootedTreeCode::from_canonical_levels(levels))
    }
}

/// Next canonical sequence: take the last position `p` deeper than level 1,
/// find its parent position `q`, and refill from `p` onwards by repeating the
/// block `q..p`.
fn successor(levels: &[u8]) -> Option<Vec<u8>> {
    let p = levels.iter().rposition(|&l| l > 1)?;
    let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1)?;
    let mut next = levels.to_vec();
    let period = p - q;
    for i in p..next.len() {
        next[i] = next[i - period];
    }
    Some(next)
}
