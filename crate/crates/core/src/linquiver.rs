//! Linear quivers of arbitrary orientation and their decomposition into
//! uniformly oriented segments.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::intervals::Interval;
use crate::Vertex;

/// Orientation of the edge between `k` and `k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `k → k+1`
    Right,
    /// `k ← k+1`
    Left,
}

impl Direction {
    pub fn as_char(self) -> char {
        match self {
            Direction::Right => 'R',
            Direction::Left => 'L',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearQuiver {
    n: usize,
    edges: Vec<Direction>,
}

impl LinearQuiver {
    /// The quiver with one vertex and no arrows.
    pub fn single() -> Self {
        LinearQuiver { n: 1, edges: Vec::new() }
    }

    pub fn from_edges(edges: Vec<Direction>) -> Self {
        LinearQuiver { n: edges.len() + 1, edges }
    }

    /// Uniformly oriented quiver `1 → 2 → … → n`.
    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1, "a quiver needs at least one vertex");
        Self::from_edges(alloc::vec![Direction::Right; n - 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Direction] {
        &self.edges
    }

    pub fn orientation(&self) -> String {
        self.edges.iter().map(|d| d.as_char()).collect()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (1..=self.n).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Arrows as `(source, target)` pairs, one per edge, left to right.
    pub fn arrows(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().enumerate().map(|(k, d)| match d {
            Direction::Right => (k + 1, k + 2),
            Direction::Left => (k + 2, k + 1),
        })
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        let left_in = v == 1 || self.edges[v - 2] == Direction::Right;
        let right_in = v == self.n || self.edges[v - 1] == Direction::Left;
        left_in && right_in
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        let left_out = v == 1 || self.edges[v - 2] == Direction::Left;
        let right_out = v == self.n || self.edges[v - 1] == Direction::Right;
        left_out && right_out
    }

    /// Vertices reachable from `v` by a directed path; the support of `P(v)`.
    pub fn reachable(&self, v: Vertex) -> Interval {
        let mut a = v;
        while a > 1 && self.edges[a - 2] == Direction::Left {
            a -= 1;
        }
        let mut b = v;
        while b < self.n && self.edges[b - 1] == Direction::Right {
            b += 1;
        }
        Interval::new(a, b)
    }

    /// Vertices with a directed path to `v`; the support of `I(v)`.
    pub fn coreachable(&self, v: Vertex) -> Interval {
        let mut a = v;
        while a > 1 && self.edges[a - 2] == Direction::Right {
            a -= 1;
        }
        let mut b = v;
        while b < self.n && self.edges[b - 1] == Direction::Left {
            b += 1;
        }
        Interval::new(a, b)
    }

    /// Edge indices (0-based) traversed by the directed path `i ⇝ j`, in
    /// traversal order, or `None` when there is no such path.
    pub fn path_edges(&self, i: Vertex, j: Vertex) -> Option<Vec<usize>> {
        if i <= j {
            let ok = (i..j).all(|k| self.edges[k - 1] == Direction::Right);
            ok.then(|| (i - 1..j - 1).collect())
        } else {
            let ok = (j..i).all(|k| self.edges[k - 1] == Direction::Left);
            ok.then(|| (j - 1..i - 1).rev().collect())
        }
    }

    pub fn deconcatenate(&self) -> Deconcatenation {
        let mut segments = Vec::new();
        let mut cuts = Vec::new();
        if self.edges.is_empty() {
            segments.push(Segment::new(1, 1, SegmentDirection::A));
            return Deconcatenation { segments, cuts };
        }
        let mut lo = 1;
        for k in 1..=self.edges.len() {
            let last = k == self.edges.len();
            if last || self.edges[k] != self.edges[k - 1] {
                let dir = match self.edges[k - 1] {
                    Direction::Right => SegmentDirection::A,
                    Direction::Left => SegmentDirection::B,
                };
                segments.push(Segment::new(lo, k + 1, dir));
                if !last {
                    let kind = match self.edges[k - 1] {
                        Direction::Right => CutKind::Sink,
                        Direction::Left => CutKind::Source,
                    };
                    cuts.push((k + 1, kind));
                }
                lo = k + 1;
            }
        }
        Deconcatenation { segments, cuts }
    }

    /// The directed path `i ⇝ j`, or `None` when some edge in between points
    /// the other way.
    pub fn path_between(&self, i: Vertex, j: Vertex) -> Result<Option<Path>> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if self.path_edges(i, j).is_none() {
            return Ok(None);
        }
        let (a, b) = (i.min(j), i.max(j));
        let segment = self
            .deconcatenate()
            .segments
            .into_iter()
            .find(|s| s.lo <= a && b <= s.hi)
            .expect("a directed path lies in one uniform segment");
        Ok(Some(Path { segment, from: i, to: j }))
    }
}

/// Parses an orientation string over `{R, L}`. The empty string is rejected
/// because it cannot say how many vertices there are; use
/// [`LinearQuiver::single`] for the one-vertex quiver.
pub fn parse_orientation(s: &str) -> Result<LinearQuiver> {
    if s.is_empty() {
        return Err(Error::EmptyOrientation);
    }
    let edges = s
        .chars()
        .enumerate()
        .map(|(position, c)| match c {
            'R' => Ok(Direction::Right),
            'L' => Ok(Direction::Left),
            found => Err(Error::InvalidOrientation { position, found }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearQuiver::from_edges(edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SegmentDirection {
    /// Arrows `lo → … → hi`.
    A,
    /// Arrows `hi → … → lo`.
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub lo: Vertex,
    pub hi: Vertex,
    pub direction: SegmentDirection,
}

impl Segment {
    pub fn new(lo: Vertex, hi: Vertex, direction: SegmentDirection) -> Self {
        assert!(lo <= hi, "segment bounds out of order");
        Segment { lo, hi, direction }
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (self.lo..=self.hi).contains(&v)
    }

    pub fn contains_interval(&self, x: Interval) -> bool {
        x.is_empty() || (self.contains(x.a) && self.contains(x.b))
    }

    /// Label in the A-oriented copy of this segment. Reflection `i ↦ lo+hi−i`
    /// on B segments, identity on A segments; it is its own inverse.
    pub fn to_local(&self, v: Vertex) -> Vertex {
        match self.direction {
            SegmentDirection::A => v,
            SegmentDirection::B => self.lo + self.hi - v,
        }
    }

    pub fn from_local(&self, v: Vertex) -> Vertex {
        self.to_local(v)
    }

    pub fn interval_to_local(&self, x: Interval) -> Interval {
        if x.is_empty() {
            return x;
        }
        let (a, b) = (self.to_local(x.a), self.to_local(x.b));
        Interval::new(a.min(b), a.max(b))
    }

    pub fn interval_from_local(&self, x: Interval) -> Interval {
        self.interval_to_local(x)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.direction {
            SegmentDirection::A => 'A',
            SegmentDirection::B => 'B',
        };
        write!(f, "[{}..{} {}]", self.lo, self.hi, d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutKind {
    Sink,
    Source,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deconcatenation {
    pub segments: Vec<Segment>,
    pub cuts: Vec<(Vertex, CutKind)>,
}

impl Deconcatenation {
    pub fn n(&self) -> usize {
        self.segments.last().map_or(0, |s| s.hi)
    }

    pub fn segment_of(&self, v: Vertex) -> impl Iterator<Item = (usize, &Segment)> {
        self.segments.iter().enumerate().filter(move |(_, s)| s.contains(v))
    }
}

/// A directed path inside one uniform segment, stored by its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub segment: Segment,
    pub from: Vertex,
    pub to: Vertex,
}

impl Path {
    pub fn is_trivial(&self) -> bool {
        self.from == self.to
    }

    pub fn len(&self) -> usize {
        self.from.abs_diff(self.to)
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// Global edge indices (1-based, edge `k` joins `k` and `k+1`) in
    /// composition order, outermost first.
    pub fn arrow_indices(&self) -> Vec<usize> {
        if self.from <= self.to {
            (self.from..self.to).rev().collect()
        } else {
            (self.to..self.from).collect()
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "e_{}", self.from);
        }
        let mut s = String::new();
        for k in self.arrow_indices() {
            write!(s, "α_{k}")?;
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let q = parse_orientation("RRRRR").unwrap();
        assert_eq!(q.n(), 6);
        assert_eq!(q.arrows().collect::<Vec<_>>(), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]);

        let q = parse_orientation("RRLLRR").unwrap();
        assert_eq!(q.arrows().collect::<Vec<_>>(), [(1, 2), (2, 3), (4, 3), (5, 4), (5, 6), (6, 7)]);

        assert_eq!(parse_orientation("RX"), Err(Error::InvalidOrientation { position: 1, found: 'X' }));
        assert_eq!(parse_orientation(""), Err(Error::EmptyOrientation));
    }

    #[test]
    fn deconcatenation_examples() {
        use SegmentDirection::{A, B};
        let d = parse_orientation("RRLLRR").unwrap().deconcatenate();
        assert_eq!(d.segments, [Segment::new(1, 3, A), Segment::new(3, 5, B), Segment::new(5, 7, A)]);
        assert_eq!(d.cuts, [(3, CutKind::Sink), (5, CutKind::Source)]);

        let d = parse_orientation("LLRR").unwrap().deconcatenate();
        assert_eq!(d.segments, [Segment::new(1, 3, B), Segment::new(3, 5, A)]);
        assert_eq!(d.cuts, [(3, CutKind::Source)]);

        let d = parse_orientation("RRR").unwrap().deconcatenate();
        assert_eq!(d.segments, [Segment::new(1, 4, A)]);
        assert!(d.cuts.is_empty());

        let d = LinearQuiver::single().deconcatenate();
        assert_eq!(d.segments.len(), 1);
        assert_eq!(d.n(), 1);
    }

    #[test]
    fn paths() {
        let a6 = LinearQuiver::uniform(6);
        let p = a6.path_between(2, 4).unwrap().unwrap();
        assert_eq!(p.to_string(), "α_3α_2");
        assert_eq!(a6.path_between(3, 3).unwrap().unwrap().to_string(), "e_3");
        assert_eq!(a6.path_between(4, 2).unwrap(), None);

        let q = parse_orientation("RRLLRR").unwrap();
        let p = q.path_between(5, 3).unwrap().unwrap();
        assert_eq!(p.segment, Segment::new(3, 5, SegmentDirection::B));
        assert_eq!(p.to_string(), "α_3α_4");
        assert_eq!(q.path_between(3, 5).unwrap(), None);
        assert_eq!(q.path_between(0, 5), Err(Error::VertexOutOfRange { vertex: 0, n: 7 }));
    }

    #[test]
    fn sinks_sources_and_reach() {
        let q = parse_orientation("RRLLRR").unwrap();
        assert!(q.is_sink(3) && q.is_source(5) && q.is_source(1) && q.is_sink(7));
        assert_eq!(q.reachable(5), Interval::new(3, 7));
        assert_eq!(q.coreachable(3), Interval::new(1, 5));
        assert_eq!(q.reachable(3), Interval::new(3, 3));
    }

    fn orientation() -> impl Strategy<Value = LinearQuiver> {
        proptest::collection::vec(prop_oneof![Just(Direction::Right), Just(Direction::Left)], 0..10)
            .prop_map(LinearQuiver::from_edges)
    }

    proptest! {
        #[test]
        fn segments_tile_the_quiver(q in orientation()) {
            let d = q.deconcatenate();
            prop_assert_eq!(d.segments[0].lo, 1);
            prop_assert_eq!(d.n(), q.n());
            for w in d.segments.windows(2) {
                prop_assert_eq!(w[0].hi, w[1].lo);
                prop_assert_ne!(w[0].direction, w[1].direction);
            }
            let mut rebuilt = String::new();
            for s in &d.segments {
                let c = if s.direction == SegmentDirection::A { 'R' } else { 'L' };
                for _ in s.lo..s.hi { rebuilt.push(c); }
            }
            prop_assert_eq!(rebuilt, q.orientation());
            let cut_vertices: Vec<_> = d.cuts.iter().map(|c| c.0).collect();
            let shared: Vec<_> = d.segments.windows(2).map(|w| w[0].hi).collect();
            prop_assert_eq!(cut_vertices, shared);
            for &(v, kind) in &d.cuts {
                match kind {
                    CutKind::Sink => prop_assert!(q.is_sink(v)),
                    CutKind::Source => prop_assert!(q.is_source(v)),
                }
            }
        }

        #[test]
        fn paths_match_reachability(q in orientation()) {
            for i in 1..=q.n() {
                for j in 1..=q.n() {
                    let p = q.path_between(i, j).unwrap();
                    prop_assert_eq!(p.is_some(), q.reachable(i).contains(j));
                    if let Some(p) = p {
                        prop_assert_eq!(p.len(), i.abs_diff(j));
                        prop_assert!(p.segment.contains(i) && p.segment.contains(j));
                    }
                }
            }
        }
    }
}
