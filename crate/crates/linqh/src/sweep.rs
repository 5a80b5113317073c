//! Enumeration of the configurations the verification suites run over.

use linqh_core::treeorder::enumerate_trees;
use linqh_core::{BinaryTree, Direction, LinearQuiver};

/// Every orientation of the linear quiver with `n` vertices.
pub fn orientations(n: usize) -> Vec<LinearQuiver> {
    let edges = n.saturating_sub(1);
    (0..1usize << edges)
        .map(|mask| {
            LinearQuiver::from_edges(
                (0..edges).map(|k| if mask >> k & 1 == 0 { Direction::Right } else { Direction::Left }).collect(),
            )
        })
        .collect()
}

/// Orientations with `1..=max_n` vertices and at most `max_cuts` cuts.
pub fn orientations_up_to(max_n: usize, max_cuts: usize) -> Vec<LinearQuiver> {
    (1..=max_n).flat_map(orientations).filter(|q| q.deconcatenate().cuts.len() <= max_cuts).collect()
}

/// Every choice of one tree per segment of `q`.
pub fn tree_choices(q: &LinearQuiver) -> Vec<Vec<BinaryTree>> {
    let mut combos = vec![Vec::new()];
    for seg in q.deconcatenate().segments {
        let trees = enumerate_trees(seg.len());
        combos = combos
            .into_iter()
            .flat_map(|c| {
                trees.iter().map(move |t| {
                    let mut c = c.clone();
                    c.push(t.clone());
                    c
                })
            })
            .collect();
    }
    combos
}

pub fn tree_string(trees: &[BinaryTree]) -> String {
    trees.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}
