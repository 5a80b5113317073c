//! Binary trees with in-order labels and the partial orders they induce.

mod order;
mod tree;

pub use order::{combine_orders, tree_order, PartialOrder};
pub use tree::{enumerate_trees, parse_tree, BinaryTree, LabeledTree};
