//! Interval modules over a uniform segment and the closed forms a labeled tree
//! determines: standard, costandard, tilting, projective and injective
//! intervals, Hom and Ext¹ dimensions, and filtration data.
//!
//! Everything is computed for the A-oriented copy of a segment (arrows
//! `lo → … → hi`, so `M(a,b)` has top `a` and socle `b`). A B segment is
//! handled by reflecting labels `i ↦ lo+hi−i` and mirroring the tree.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linquiver::{Direction, LinearQuiver, Segment, SegmentDirection};
use crate::treeorder::{LabeledTree, PartialOrder};
use crate::Vertex;

/// The interval module `M(a,b)` supported on `a ..= b`. Any `a > b` denotes
/// the zero module; [`Interval::EMPTY`] is its canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub a: Vertex,
    pub b: Vertex,
}

impl Interval {
    pub const EMPTY: Interval = Interval { a: 1, b: 0 };

    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a > b {
            Self::EMPTY
        } else {
            Interval { a, b }
        }
    }

    pub fn simple(v: Vertex) -> Self {
        Interval { a: v, b: v }
    }

    pub fn is_empty(&self) -> bool {
        self.a > self.b
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.b - self.a + 1
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.a <= v && v <= self.b
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<Vertex> {
        self.a..=self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("0")
        } else {
            write!(f, "M({},{})", self.a, self.b)
        }
    }
}

fn local_pair(seg: &Segment, x: Interval, y: Interval) -> Result<(Interval, Interval)> {
    if !seg.contains_interval(x) || !seg.contains_interval(y) {
        return Err(Error::CrossSegment);
    }
    Ok((seg.interval_to_local(x), seg.interval_to_local(y)))
}

/// `dim Hom(X, Y)` for intervals inside one uniform segment.
pub fn hom_dim(seg: &Segment, x: Interval, y: Interval) -> Result<usize> {
    let (x, y) = local_pair(seg, x, y)?;
    if x.is_empty() || y.is_empty() {
        return Ok(0);
    }
    Ok(usize::from(y.a <= x.a && x.a <= y.b && y.b <= x.b))
}

/// `dim Ext¹(X, Y)` for intervals inside one uniform segment.
pub fn ext1_dim(seg: &Segment, x: Interval, y: Interval) -> Result<usize> {
    let (x, y) = local_pair(seg, x, y)?;
    if x.is_empty() || y.is_empty() {
        return Ok(0);
    }
    Ok(usize::from(x.a < y.a && y.a <= x.b + 1 && x.b < y.b))
}

/// The intervals a labeled tree attaches to the vertices of one segment.
///
/// The tree is labeled with the segment's own vertex ids. For a B segment
/// the roles of left and right subtrees are exchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    segment: Segment,
    tree: LabeledTree,
    normalized: LabeledTree,
    /// `s[x − lo]`: far end of `Δ(x)` in local labels.
    s: Vec<Vertex>,
    /// `t[x − lo]`: far end of `∇(x)` in local labels.
    t: Vec<Vertex>,
}

impl StructureTable {
    pub fn new(tree: &LabeledTree, segment: Segment) -> Result<Self> {
        if tree.size() != segment.len() {
            return Err(Error::SizeMismatch {
                expected: segment.len(),
                found: tree.size(),
                what: "tree size vs segment",
            });
        }
        if tree.offset() + 1 != segment.lo {
            return Err(Error::SizeMismatch {
                expected: segment.lo,
                found: tree.offset() + 1,
                what: "least tree label vs segment start",
            });
        }
        let normalized = match segment.direction {
            SegmentDirection::A => tree.clone(),
            SegmentDirection::B => tree.mirrored(),
        };
        let s = normalized.labels().map(|x| normalized.subtree_max(x)).collect();
        let t = normalized.labels().map(|x| normalized.subtree_min(x)).collect();
        Ok(StructureTable { segment, tree: tree.clone(), normalized, s, t })
    }

    pub fn segment(&self) -> &Segment {
        &self.segment
    }

    pub fn tree(&self) -> &LabeledTree {
        &self.tree
    }

    /// The tree as seen on the A-oriented copy of the segment.
    pub fn normalized_tree(&self) -> &LabeledTree {
        &self.normalized
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<Vertex> {
        self.segment.lo..=self.segment.hi
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.segment.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.segment.hi })
        }
    }

    /// `s_x` for a local label `x`.
    pub fn local_s(&self, x: Vertex) -> Vertex {
        self.s[x - self.segment.lo]
    }

    /// `t_x` for a local label `x`.
    pub fn local_t(&self, x: Vertex) -> Vertex {
        self.t[x - self.segment.lo]
    }

    fn global(&self, local: Interval) -> Interval {
        self.segment.interval_from_local(local)
    }

    pub fn standard(&self, i: Vertex) -> Interval {
        let x = self.segment.to_local(i);
        self.global(Interval::new(x, self.local_s(x)))
    }

    pub fn costandard(&self, i: Vertex) -> Interval {
        let x = self.segment.to_local(i);
        self.global(Interval::new(self.local_t(x), x))
    }

    pub fn tilting(&self, i: Vertex) -> Interval {
        let x = self.segment.to_local(i);
        self.global(Interval::new(self.local_t(x), self.local_s(x)))
    }

    pub fn projective(&self, i: Vertex) -> Interval {
        let x = self.segment.to_local(i);
        self.global(Interval::new(x, self.segment.hi))
    }

    pub fn injective(&self, i: Vertex) -> Interval {
        let x = self.segment.to_local(i);
        self.global(Interval::new(self.segment.lo, x))
    }

    /// `rad Δ(i)`: the standard module with its top removed.
    pub fn standard_radical(&self, i: Vertex) -> Interval {
        let x = self.segment.to_local(i);
        self.global(Interval::new(x + 1, self.local_s(x)))
    }

    pub fn hom_dim(&self, x: Interval, y: Interval) -> Result<usize> {
        hom_dim(&self.segment, x, y)
    }

    pub fn ext1_dim(&self, x: Interval, y: Interval) -> Result<usize> {
        ext1_dim(&self.segment, x, y)
    }

    /// `(P(i) : Δ(j))`, read off the chain `i, s_i+1, s_{s_i+1}+1, …`.
    pub fn std_mult_in_proj(&self, i: Vertex, j: Vertex) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        let target = self.segment.to_local(j);
        let mut x = self.segment.to_local(i);
        while x <= self.segment.hi {
            if x == target {
                return Ok(1);
            }
            x = self.local_s(x) + 1;
        }
        Ok(0)
    }

    /// Generated by `i ⊴ j` whenever `L(i)` is a factor of `Δ(j)` or `Δ(j)`
    /// occurs in a standard filtration of `P(i)`.
    pub fn essential_order(&self) -> PartialOrder {
        let mut pairs = Vec::new();
        for j in self.vertices() {
            for i in self.vertices() {
                let factor = self.standard(j).contains(i);
                if factor || self.std_mult_in_proj(i, j) == Ok(1) {
                    pairs.push((i, j));
                }
            }
        }
        PartialOrder::from_pairs(self.segment.lo - 1, self.segment.len(), pairs)
    }

    /// Peels costandard modules off the socle end of `x`. Returns the
    /// subquotients bottom first, or `None` if `x` has no ∇-filtration.
    pub fn nabla_filtration(&self, x: Interval) -> Result<Option<Vec<Interval>>> {
        if !self.segment.contains_interval(x) {
            return Err(Error::CrossSegment);
        }
        let local = self.segment.interval_to_local(x);
        let mut layers = Vec::new();
        let (a, mut b) = (local.a, local.b);
        while a <= b {
            let t = self.local_t(b);
            if t < a {
                return Ok(None);
            }
            layers.push(self.global(Interval::new(t, b)));
            b = t - 1;
        }
        Ok(Some(layers))
    }

    pub fn has_nabla_filtration(&self, x: Interval) -> Result<bool> {
        Ok(self.nabla_filtration(x)?.is_some())
    }

    /// Peels standard modules off the top end of `x`, top first.
    pub fn delta_filtration(&self, x: Interval) -> Result<Option<Vec<Interval>>> {
        if !self.segment.contains_interval(x) {
            return Err(Error::CrossSegment);
        }
        let local = self.segment.interval_to_local(x);
        let mut layers = Vec::new();
        let (mut a, b) = (local.a, local.b);
        while a <= b {
            let s = self.local_s(a);
            if s > b {
                return Ok(None);
            }
            layers.push(self.global(Interval::new(a, s)));
            a = s + 1;
        }
        Ok(Some(layers))
    }
}

/// `Δ(i)` on a whole linear quiver: the largest quotient of `P(i)` whose
/// other composition factors are all below `i`.
pub fn standard_in_quiver(q: &LinearQuiver, order: &PartialOrder, i: Vertex) -> Interval {
    let edges = q.edges();
    let mut a = i;
    while a > 1 && edges[a - 2] == Direction::Left && order.lt(a - 1, i) {
        a -= 1;
    }
    let mut b = i;
    while b < q.n() && edges[b - 1] == Direction::Right && order.lt(b + 1, i) {
        b += 1;
    }
    Interval::new(a, b)
}

/// `∇(i)` on a whole linear quiver: the largest submodule of `I(i)` whose
/// other composition factors are all below `i`.
pub fn costandard_in_quiver(q: &LinearQuiver, order: &PartialOrder, i: Vertex) -> Interval {
    let edges = q.edges();
    let mut a = i;
    while a > 1 && edges[a - 2] == Direction::Right && order.lt(a - 1, i) {
        a -= 1;
    }
    let mut b = i;
    while b < q.n() && edges[b - 1] == Direction::Left && order.lt(b + 1, i) {
        b += 1;
    }
    Interval::new(a, b)
}

/// `rad Δ(i)` as up to two intervals, one on each side of `i`.
pub fn radical_pieces(standard: Interval, i: Vertex) -> Vec<Interval> {
    [Interval::new(standard.a, i - 1), Interval::new(i + 1, standard.b)].into_iter().filter(|x| !x.is_empty()).collect()
}
