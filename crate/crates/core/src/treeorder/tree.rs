use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::Vertex;

/// Shape of a binary tree. Serialized by the grammar
/// `node := "(" node node ")" | "."`, where `.` is the empty tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn leaf() -> Self {
        Self::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Reflection swapping every left and right child.
    pub fn mirror(&self) -> Self {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Node(l, r) => Self::node(r.mirror(), l.mirror()),
        }
    }

    /// Every node has an empty left child.
    pub fn right_chain(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| Self::node(BinaryTree::Empty, acc))
    }

    /// Every node has an empty right child.
    pub fn left_chain(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| Self::node(acc, BinaryTree::Empty))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

pub fn parse_tree(s: &str) -> Result<BinaryTree> {
    fn node(bytes: &[u8], pos: &mut usize) -> Result<BinaryTree> {
        match bytes.get(*pos) {
            Some(b'.') => {
                *pos += 1;
                Ok(BinaryTree::Empty)
            }
            Some(b'(') => {
                *pos += 1;
                let l = node(bytes, pos)?;
                let r = node(bytes, pos)?;
                if bytes.get(*pos) != Some(&b')') {
                    return Err(Error::MalformedTree { position: *pos, reason: "expected ')'" });
                }
                *pos += 1;
                Ok(BinaryTree::node(l, r))
            }
            Some(_) => Err(Error::MalformedTree { position: *pos, reason: "expected '(' or '.'" }),
            None => Err(Error::MalformedTree { position: *pos, reason: "unexpected end of input" }),
        }
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let tree = node(bytes, &mut pos)?;
    if pos != bytes.len() {
        return Err(Error::MalformedTree { position: pos, reason: "trailing characters" });
    }
    Ok(tree)
}

/// All trees with `n` nodes, ordered by left-subtree size, then recursively.
pub fn enumerate_trees(n: usize) -> Vec<BinaryTree> {
    let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Empty]];
    for size in 1..=n {
        let mut trees = Vec::new();
        for left in 0..size {
            for l in &table[left] {
                for r in &table[size - 1 - left] {
                    trees.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(trees);
    }
    table.swap_remove(n)
}

/// A tree whose nodes carry the in-order labels `offset+1 ..= offset+size`.
///
/// Since the labels are in-order, the subtree of any node is a contiguous
/// range of labels, recorded as `subtree_min ..= subtree_max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    shape: BinaryTree,
    offset: usize,
    root: Option<Vertex>,
    left: Vec<Option<Vertex>>,
    right: Vec<Option<Vertex>>,
    parent: Vec<Option<Vertex>>,
    min: Vec<Vertex>,
    max: Vec<Vertex>,
}

impl LabeledTree {
    pub fn new(shape: BinaryTree, offset: usize) -> Self {
        let n = shape.size();
        let mut t = LabeledTree {
            shape: BinaryTree::Empty,
            offset,
            root: None,
            left: vec![None; n],
            right: vec![None; n],
            parent: vec![None; n],
            min: vec![0; n],
            max: vec![0; n],
        };
        let mut next = offset + 1;
        t.root = t.label(&shape, &mut next);
        t.shape = shape;
        t
    }

    /// Labels the subtree in order starting at `*next`, returns its root label.
    fn label(&mut self, tree: &BinaryTree, next: &mut Vertex) -> Option<Vertex> {
        let BinaryTree::Node(l, r) = tree else {
            return None;
        };
        let lo = *next;
        let left = self.label(l, next);
        let v = *next;
        *next += 1;
        let right = self.label(r, next);
        let k = v - self.offset - 1;
        self.left[k] = left;
        self.right[k] = right;
        self.min[k] = lo;
        self.max[k] = *next - 1;
        for child in [left, right].into_iter().flatten() {
            self.parent[child - self.offset - 1] = Some(v);
        }
        Some(v)
    }

    fn idx(&self, v: Vertex) -> usize {
        assert!(self.contains(v), "label {v} not in tree");
        v - self.offset - 1
    }

    pub fn shape(&self) -> &BinaryTree {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.left.len()
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn labels(&self) -> core::ops::RangeInclusive<Vertex> {
        self.offset + 1..=self.offset + self.size()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.labels().contains(&v)
    }

    pub fn root(&self) -> Option<Vertex> {
        self.root
    }

    pub fn left(&self, v: Vertex) -> Option<Vertex> {
        self.left[self.idx(v)]
    }

    pub fn right(&self, v: Vertex) -> Option<Vertex> {
        self.right[self.idx(v)]
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[self.idx(v)]
    }

    pub fn subtree_min(&self, v: Vertex) -> Vertex {
        self.min[self.idx(v)]
    }

    pub fn subtree_max(&self, v: Vertex) -> Vertex {
        self.max[self.idx(v)]
    }

    /// Whether `i` lies in the subtree rooted at `j` (including `j` itself).
    pub fn in_subtree(&self, i: Vertex, j: Vertex) -> bool {
        self.contains(i) && (self.subtree_min(j)..=self.subtree_max(j)).contains(&i)
    }

    /// The mirror image, relabeled in order on the same label range. The node
    /// labeled `i` here is labeled `lo + hi − i` in the mirror.
    pub fn mirrored(&self) -> Self {
        LabeledTree::new(self.shape.mirror(), self.offset)
    }
}
