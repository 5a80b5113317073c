//! Graded quivers with quadratic monomial relations.
//!
//! Every relation that occurs here forbids one composite of two arrows, so a
//! basis of the algebra is the set of paths avoiding the forbidden factors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::intervals::StructureTable;
use crate::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    /// `ε`, an extension between standard modules.
    Epsilon,
    /// `f`, a morphism.
    F,
    /// `g`, the second family of morphisms in the Ringel dual.
    G,
}

impl ArrowKind {
    pub fn symbol(self) -> &'static str {
        match self {
            ArrowKind::Epsilon => "ε",
            ArrowKind::F => "f",
            ArrowKind::G => "g",
        }
    }
}

/// An arrow `src → tgt`, named `kind_src^tgt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub src: Vertex,
    pub tgt: Vertex,
    pub kind: ArrowKind,
    pub degree: u32,
}

impl Arrow {
    pub fn new(kind: ArrowKind, src: Vertex, tgt: Vertex, degree: u32) -> Self {
        Arrow { src, tgt, kind, degree }
    }

    pub fn name(&self) -> String {
        format!("{}_{}^{}", self.kind.symbol(), self.src, self.tgt)
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A path avoiding every forbidden factor. Arrows are listed in the order
/// they are traversed; a path with no arrows is the idempotent `e_src`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedPath {
    pub src: Vertex,
    pub tgt: Vertex,
    pub degree: u32,
    pub arrows: Vec<Arrow>,
}

impl ReducedPath {
    pub fn trivial(v: Vertex) -> Self {
        ReducedPath { src: v, tgt: v, degree: 0, arrows: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

impl fmt::Display for ReducedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "e_{}", self.src);
        }
        for a in self.arrows.iter().rev() {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Reduced paths bucketed by `(source, target, degree)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraBasis {
    cells: BTreeMap<(Vertex, Vertex, u32), Vec<ReducedPath>>,
}

impl AlgebraBasis {
    pub fn dim(&self, src: Vertex, tgt: Vertex, degree: u32) -> usize {
        self.cells.get(&(src, tgt, degree)).map_or(0, Vec::len)
    }

    pub fn cell(&self, src: Vertex, tgt: Vertex, degree: u32) -> &[ReducedPath] {
        self.cells.get(&(src, tgt, degree)).map_or(&[], Vec::as_slice)
    }

    pub fn total_dim(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn cells(&self) -> impl Iterator<Item = (&(Vertex, Vertex, u32), &Vec<ReducedPath>)> {
        self.cells.iter()
    }

    pub fn elements(&self) -> impl Iterator<Item = &ReducedPath> {
        self.cells.values().flatten()
    }
}

/// Outcome of the degree bookkeeping behind intrinsic formality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalityReport {
    pub chains_checked: usize,
    pub witnesses: Vec<FormalityWitness>,
}

impl FormalityReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// A chain whose higher product could land in a nonzero cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalityWitness {
    pub chain: Vec<ReducedPath>,
    pub cell: (Vertex, Vertex, u32),
}

/// A graded quiver with forbidden composites `outer ∘ inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPresentation {
    vertices: BTreeSet<Vertex>,
    arrows: BTreeSet<Arrow>,
    /// `(inner, outer)`.
    forbidden: BTreeSet<(Arrow, Arrow)>,
}

impl MonomialPresentation {
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        arrows: impl IntoIterator<Item = Arrow>,
        forbidden: impl IntoIterator<Item = (Arrow, Arrow)>,
    ) -> Result<Self> {
        let p = MonomialPresentation {
            vertices: vertices.into_iter().collect(),
            arrows: arrows.into_iter().collect(),
            forbidden: forbidden.into_iter().collect(),
        };
        for a in &p.arrows {
            for v in [a.src, a.tgt] {
                if !p.vertices.contains(&v) {
                    return Err(Error::VertexOutOfRange { vertex: v, n: p.vertices.len() });
                }
            }
        }
        for (inner, outer) in &p.forbidden {
            if inner.tgt != outer.src || !p.arrows.contains(inner) || !p.arrows.contains(outer) {
                return Err(Error::ShapeMismatch);
            }
        }
        Ok(p)
    }

    fn forbid_composable(
        vertices: impl IntoIterator<Item = Vertex>,
        arrows: Vec<Arrow>,
        rule: impl Fn(&Arrow, &Arrow) -> bool,
    ) -> Self {
        let mut forbidden = BTreeSet::new();
        for inner in &arrows {
            for outer in &arrows {
                if inner.tgt == outer.src && rule(inner, outer) {
                    forbidden.insert((*inner, *outer));
                }
            }
        }
        MonomialPresentation {
            vertices: vertices.into_iter().collect(),
            arrows: arrows.into_iter().collect(),
            forbidden,
        }
    }

    /// The Ext-algebra of the standard modules of one segment.
    ///
    /// On the A-oriented copy: `ε: ℓ(v) → v` of degree 1 and `f: r(v) → v` of
    /// degree 0, with `ε∘ε` and `f∘ε` forbidden.
    pub fn ext_algebra(tbl: &StructureTable) -> Self {
        let (seg, t) = (tbl.segment(), tbl.normalized_tree());
        let mut arrows = Vec::new();
        for v in t.labels() {
            let gv = seg.from_local(v);
            if let Some(l) = t.left(v) {
                arrows.push(Arrow::new(ArrowKind::Epsilon, seg.from_local(l), gv, 1));
            }
            if let Some(r) = t.right(v) {
                arrows.push(Arrow::new(ArrowKind::F, seg.from_local(r), gv, 0));
            }
        }
        Self::forbid_composable(tbl.vertices(), arrows, |inner, _| inner.kind == ArrowKind::Epsilon)
    }

    /// The Ringel dual `End(T)^op` of one segment.
    ///
    /// On the A-oriented copy: `f: v → ℓ(v)` and `g: r(v) → v`, all of degree
    /// 0, with `f∘g` forbidden.
    pub fn ringel_dual(tbl: &StructureTable) -> Self {
        let (seg, t) = (tbl.segment(), tbl.normalized_tree());
        let mut arrows = Vec::new();
        for v in t.labels() {
            let gv = seg.from_local(v);
            if let Some(l) = t.left(v) {
                arrows.push(Arrow::new(ArrowKind::F, gv, seg.from_local(l), 0));
            }
            if let Some(r) = t.right(v) {
                arrows.push(Arrow::new(ArrowKind::G, seg.from_local(r), gv, 0));
            }
        }
        Self::forbid_composable(tbl.vertices(), arrows, |inner, outer| {
            inner.kind == ArrowKind::G && outer.kind == ArrowKind::F
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn arrows(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter()
    }

    /// Forbidden pairs as `(inner, outer)`.
    pub fn forbidden(&self) -> impl Iterator<Item = &(Arrow, Arrow)> {
        self.forbidden.iter()
    }

    pub fn is_forbidden(&self, inner: &Arrow, outer: &Arrow) -> bool {
        self.forbidden.contains(&(*inner, *outer))
    }

    /// Relations rendered as `outer inner`, e.g. `ε_2^4ε_1^2`.
    pub fn relations(&self) -> Vec<String> {
        self.forbidden.iter().map(|(inner, outer)| format!("{outer}{inner}")).collect()
    }

    /// Returns a copy with one forbidden pair removed or added. Used to check
    /// that verification catches a wrong presentation.
    pub fn with_toggled_relation(&self, inner: Arrow, outer: Arrow) -> Self {
        let mut p = self.clone();
        if !p.forbidden.remove(&(inner, outer)) {
            p.forbidden.insert((inner, outer));
        }
        p
    }

    /// Amalgamates two presentations sharing exactly the vertex `v`. Every
    /// composite of an arrow of one part with an arrow of the other is
    /// forbidden.
    pub fn glue(&self, other: &Self, v: Vertex) -> Result<Self> {
        let shared: Vec<Vertex> = self.vertices.intersection(&other.vertices).copied().collect();
        if shared != [v] {
            return Err(Error::GlueOverlap { shared });
        }
        let mut glued = self.clone();
        glued.vertices.extend(other.vertices.iter().copied());
        glued.arrows.extend(other.arrows.iter().copied());
        glued.forbidden.extend(other.forbidden.iter().copied());
        for a in &self.arrows {
            for b in &other.arrows {
                if a.tgt == v && b.src == v {
                    glued.forbidden.insert((*a, *b));
                }
                if b.tgt == v && a.src == v {
                    glued.forbidden.insert((*b, *a));
                }
            }
        }
        Ok(glued)
    }

    fn check_acyclic(&self) -> Result<()> {
        let mut indegree: BTreeMap<Vertex, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for a in &self.arrows {
            *indegree.get_mut(&a.tgt).expect("arrow target is a vertex") += 1;
        }
        let mut ready: Vec<Vertex> = indegree.iter().filter(|e| *e.1 == 0).map(|e| *e.0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.src == v) {
                let d = indegree.get_mut(&a.tgt).expect("arrow target is a vertex");
                *d -= 1;
                if *d == 0 {
                    ready.push(a.tgt);
                }
            }
        }
        if seen == self.vertices.len() {
            return Ok(());
        }
        let vertex = indegree.into_iter().find(|e| e.1 > 0).map_or(0, |e| e.0);
        Err(Error::LogicCyclicPresentation { vertex })
    }

    pub fn basis(&self) -> Result<AlgebraBasis> {
        self.check_acyclic()?;
        let mut basis = AlgebraBasis::default();
        let mut stack: Vec<ReducedPath> = self.vertices.iter().map(|&v| ReducedPath::trivial(v)).collect();
        while let Some(p) = stack.pop() {
            for a in self.arrows.iter().filter(|a| a.src == p.tgt) {
                if p.arrows.last().is_some_and(|last| self.is_forbidden(last, a)) {
                    continue;
                }
                let mut next = p.clone();
                next.arrows.push(*a);
                next.tgt = a.tgt;
                next.degree += a.degree;
                stack.push(next);
            }
            basis.cells.entry((p.src, p.tgt, p.degree)).or_default().push(p);
        }
        for cell in basis.cells.values_mut() {
            cell.sort();
        }
        Ok(basis)
    }

    pub fn dimension(&self) -> Result<usize> {
        Ok(self.basis()?.total_dim())
    }

    /// The product `p · q`: first `q`, then `p`. `None` is zero.
    pub fn multiply(&self, p: &ReducedPath, q: &ReducedPath) -> Option<ReducedPath> {
        if q.tgt != p.src {
            return None;
        }
        if let (Some(inner), Some(outer)) = (q.arrows.last(), p.arrows.first()) {
            if self.is_forbidden(inner, outer) {
                return None;
            }
        }
        let mut arrows = q.arrows.clone();
        arrows.extend_from_slice(&p.arrows);
        Some(ReducedPath { src: q.src, tgt: p.tgt, degree: p.degree + q.degree, arrows })
    }

    /// Checks that no higher product `m_ℓ` (`ℓ ≥ 3`) can be nonzero for
    /// degree reasons: `m_ℓ` has degree `2 − ℓ`, so on a chain of total degree
    /// `i` it lands in degree `2 − ℓ + i`, which must be an empty cell.
    pub fn formality_check(&self) -> Result<FormalityReport> {
        let basis = self.basis()?;
        let mut by_src: BTreeMap<Vertex, Vec<&ReducedPath>> = BTreeMap::new();
        for e in basis.elements().filter(|e| !e.is_trivial()) {
            by_src.entry(e.src).or_default().push(e);
        }
        let mut report = FormalityReport { chains_checked: 0, witnesses: Vec::new() };
        let mut chain: Vec<&ReducedPath> = Vec::new();
        for start in by_src.values().flatten() {
            chain.push(start);
            extend_chains(&basis, &by_src, &mut chain, &mut report);
            chain.pop();
        }
        Ok(report)
    }
}

fn extend_chains<'a>(
    basis: &AlgebraBasis,
    by_src: &BTreeMap<Vertex, Vec<&'a ReducedPath>>,
    chain: &mut Vec<&'a ReducedPath>,
    report: &mut FormalityReport,
) {
    let len = chain.len() as i64;
    let degree: i64 = chain.iter().map(|e| i64::from(e.degree)).sum();
    let target = 2 - len + degree;
    if len >= 3 && (0..=1).contains(&target) {
        report.chains_checked += 1;
        let cell = (chain[0].src, chain[chain.len() - 1].tgt, target as u32);
        if basis.dim(cell.0, cell.1, cell.2) != 0 {
            report.witnesses.push(FormalityWitness { chain: chain.iter().map(|e| (*e).clone()).collect(), cell });
        }
    }
    // every element has degree at most 1, so the target degree never grows;
    // once it is negative no extension can bring it back
    if target < 0 {
        return;
    }
    let Some(next) = by_src.get(&chain[chain.len() - 1].tgt) else {
        return;
    };
    for e in next {
        chain.push(e);
        extend_chains(basis, by_src, chain, report);
        chain.pop();
    }
}
