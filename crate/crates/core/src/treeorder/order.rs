use alloc::vec;
use alloc::vec::Vec;

use super::LabeledTree;
use crate::error::{Error, Result};
use crate::linquiver::Deconcatenation;
use crate::Vertex;

/// A relation `i ⊴ j` on the carrier `offset+1 ..= offset+n`, stored densely.
///
/// Constructors close the relation reflexively and transitively; whether it
/// is antisymmetric is checked separately ([`PartialOrder::is_partial_order`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialOrder {
    offset: usize,
    n: usize,
    rel: Vec<bool>,
}

impl PartialOrder {
    /// The discrete order on `offset+1 ..= offset+n`.
    pub fn discrete(offset: usize, n: usize) -> Self {
        let mut rel = vec![false; n * n];
        for k in 0..n {
            rel[k * n + k] = true;
        }
        PartialOrder { offset, n, rel }
    }

    /// Reflexive-transitive closure of the given pairs `(i, j)` meaning `i ⊴ j`.
    pub fn from_pairs(offset: usize, n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut p = Self::discrete(offset, n);
        for (i, j) in pairs {
            let (a, b) = (p.idx(i), p.idx(j));
            p.rel[a * n + b] = true;
        }
        p.close();
        p
    }

    fn idx(&self, v: Vertex) -> usize {
        assert!(self.contains(v), "vertex {v} not in carrier");
        v - self.offset - 1
    }

    /// Warshall's transitive closure.
    fn close(&mut self) {
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if self.rel[i * n + k] {
                    for j in 0..n {
                        if self.rel[k * n + j] {
                            self.rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn carrier(&self) -> core::ops::RangeInclusive<Vertex> {
        self.offset + 1..=self.offset + self.n
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.carrier().contains(&v)
    }

    pub fn le(&self, i: Vertex, j: Vertex) -> bool {
        self.rel[self.idx(i) * self.n + self.idx(j)]
    }

    pub fn lt(&self, i: Vertex, j: Vertex) -> bool {
        i != j && self.le(i, j)
    }

    pub fn comparable(&self, i: Vertex, j: Vertex) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    /// All `(i, j)` with `i ◁ j`, sorted.
    pub fn strict_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for i in self.carrier() {
            for j in self.carrier() {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Pairs `i ◁ j` with nothing strictly between them, sorted.
    pub fn covering_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(i, j)| !self.carrier().any(|k| self.lt(i, k) && self.lt(k, j)))
            .collect()
    }

    pub fn is_minimal(&self, v: Vertex) -> bool {
        !self.carrier().any(|k| self.lt(k, v))
    }

    pub fn is_maximal(&self, v: Vertex) -> bool {
        !self.carrier().any(|k| self.lt(v, k))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|k| self.rel[k * self.n + k])
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|k| !self.rel[i * n + k] || (0..n).all(|j| !self.rel[k * n + j] || self.rel[i * n + j]))
        })
    }

    /// Two distinct elements related both ways, if any.
    pub fn antisymmetry_witness(&self) -> Option<(Vertex, Vertex)> {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                if self.rel[i * n + j] && self.rel[j * n + i] {
                    return Some((i + self.offset + 1, j + self.offset + 1));
                }
            }
        }
        None
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_transitive() && self.antisymmetry_witness().is_none()
    }

    /// The induced order on `lo ..= hi`.
    pub fn restrict(&self, lo: Vertex, hi: Vertex) -> PartialOrder {
        let pairs: Vec<_> =
            self.strict_pairs().into_iter().filter(|&(i, j)| i >= lo && j <= hi && i <= hi && j >= lo).collect();
        PartialOrder::from_pairs(lo - 1, hi + 1 - lo, pairs)
    }
}

/// `i ⊴ j` iff `i` lies in the subtree of `j`.
pub fn tree_order(t: &LabeledTree) -> PartialOrder {
    let mut p = PartialOrder::discrete(t.offset(), t.size());
    for j in t.labels() {
        for i in t.subtree_min(j)..=t.subtree_max(j) {
            let (a, b) = (p.idx(i), p.idx(j));
            p.rel[a * p.n + b] = true;
        }
    }
    p
}

/// The smallest order on the whole quiver containing every segment order.
/// Relations through a cut vertex arise from transitivity.
pub fn combine_orders(orders: &[PartialOrder], decon: &Deconcatenation) -> Result<PartialOrder> {
    if orders.len() != decon.segments.len() {
        return Err(Error::SizeMismatch {
            expected: decon.segments.len(),
            found: orders.len(),
            what: "one order per segment",
        });
    }
    for (o, s) in orders.iter().zip(&decon.segments) {
        if o.offset + 1 != s.lo || o.n != s.len() {
            return Err(Error::SizeMismatch { expected: s.len(), found: o.n, what: "order carrier vs segment" });
        }
    }
    let pairs = orders.iter().flat_map(PartialOrder::strict_pairs);
    let combined = PartialOrder::from_pairs(0, decon.n(), pairs);
    if let Some((i, j)) = combined.antisymmetry_witness() {
        return Err(Error::LogicOrderCycle { witness: vec![i, j, i] });
    }
    Ok(combined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linquiver::parse_orientation;
    use crate::treeorder::{enumerate_trees, parse_tree};

    fn labeled(s: &str, offset: usize) -> LabeledTree {
        LabeledTree::new(parse_tree(s).unwrap(), offset)
    }

    #[test]
    fn root4_tree_order() {
        let o = tree_order(&labeled("(((..)(..))(.(..)))", 0));
        assert_eq!(o.strict_pairs(), [(1, 2), (1, 4), (2, 4), (3, 2), (3, 4), (5, 4), (6, 4), (6, 5)]);
        assert_eq!(o.covering_pairs(), [(1, 2), (2, 4), (3, 2), (5, 4), (6, 5)]);
        assert!(o.is_partial_order());
    }

    #[test]
    fn small_orders() {
        assert!(tree_order(&labeled("(..)", 0)).strict_pairs().is_empty());
        let chain = tree_order(&labeled("(.(.(..)))", 0));
        assert_eq!(chain.strict_pairs(), [(2, 1), (3, 1), (3, 2)]);
        assert!(chain.is_maximal(1) && chain.is_minimal(3));
    }

    #[test]
    fn combine_llrr() {
        let d = parse_orientation("LLRR").unwrap().deconcatenate();
        let o1 = PartialOrder::from_pairs(0, 3, [(1, 2), (2, 3)]);
        let o2 = PartialOrder::from_pairs(2, 3, [(3, 4), (4, 5)]);
        let c = combine_orders(&[o1, o2], &d).unwrap();
        for i in 1..=5 {
            for j in i..=5 {
                assert!(c.le(i, j));
            }
        }
        assert_eq!(c.covering_pairs(), [(1, 2), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn combine_incomparable_cut() {
        let d = parse_orientation("RL").unwrap().deconcatenate();
        let o1 = PartialOrder::from_pairs(0, 2, []);
        let o2 = PartialOrder::from_pairs(1, 2, []);
        let c = combine_orders(&[o1, o2], &d).unwrap();
        assert!(c.strict_pairs().is_empty());
    }

    #[test]
    fn combine_rrllrr() {
        let d = parse_orientation("RRLLRR").unwrap().deconcatenate();
        let orders = [
            tree_order(&labeled("(((..).).)", 0)),
            tree_order(&labeled("(.((..).))", 2)),
            tree_order(&labeled("((.(..)).)", 4)),
        ];
        let c = combine_orders(&orders, &d).unwrap();
        for i in [1, 2, 4, 5] {
            assert!(c.lt(i, 3));
        }
        assert!(c.lt(5, 7) && c.lt(6, 7));
        assert!(c.is_maximal(3) && c.is_partial_order());
    }

    #[test]
    fn combine_rejects_cycles_and_shapes() {
        let d = parse_orientation("RL").unwrap().deconcatenate();
        let o1 = PartialOrder::from_pairs(0, 2, [(1, 2)]);
        let o2 = PartialOrder::from_pairs(1, 2, [(3, 2)]);
        assert!(combine_orders(&[o1.clone(), o2], &d).is_ok());
        assert!(matches!(combine_orders(&[o1], &d), Err(Error::SizeMismatch { .. })));
        // a cycle can only come from orders that disagree on the cut vertex
        let a = PartialOrder::from_pairs(0, 3, [(1, 2), (2, 3)]);
        let b = PartialOrder::from_pairs(0, 3, [(3, 1)]);
        let whole = parse_orientation("RR").unwrap().deconcatenate();
        let mixed = PartialOrder::from_pairs(0, 3, a.strict_pairs().into_iter().chain(b.strict_pairs()));
        assert!(mixed.antisymmetry_witness().is_some());
        assert!(combine_orders(&[mixed], &whole).is_err());
    }

    #[test]
    fn tree_orders_are_partial_orders_and_distinct() {
        for n in 0..=6 {
            let orders: Vec<_> = enumerate_trees(n).into_iter().map(|t| tree_order(&LabeledTree::new(t, 0))).collect();
            for o in &orders {
                assert!(o.is_partial_order());
            }
            for (a, x) in orders.iter().enumerate() {
                for y in &orders[a + 1..] {
                    assert_ne!(x, y);
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn combined_restricts_to_segments(bits in proptest::collection::vec(proptest::bool::ANY, 1..7), seed in 0usize..10_000) {
            let q = crate::LinearQuiver::from_edges(bits.iter().map(|&b| if b { crate::Direction::Right } else { crate::Direction::Left }).collect());
            let d = q.deconcatenate();
            let mut orders = Vec::new();
            let mut k = seed;
            for s in &d.segments {
                let trees = enumerate_trees(s.len());
                let t = trees[k % trees.len()].clone();
                k /= 3;
                orders.push(tree_order(&LabeledTree::new(t, s.lo - 1)));
            }
            let c = combine_orders(&orders, &d).unwrap();
            proptest::prop_assert!(c.is_partial_order());
            for (o, s) in orders.iter().zip(&d.segments) {
                proptest::prop_assert_eq!(&c.restrict(s.lo, s.hi), o);
            }
        }
    }
}
