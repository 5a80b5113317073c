//! Verification suites: closed forms and presentations against the
//! representation oracle, over exhaustive sweeps.

use std::collections::BTreeSet;
use std::fmt;

use linqh_core::intervals::{ext1_dim, hom_dim};
use linqh_core::linquiver::Segment;
use linqh_core::presentations::{Arrow, ReducedPath};
use linqh_core::rep_oracle::{rep_of_interval, Element, IntervalOracle, ModuleFamily};
use linqh_core::treeorder::enumerate_trees;
use linqh_core::{
    Direction, Interval, LabeledTree, LinearQh, LinearQuiver, MonomialPresentation, Result, StructureTable,
};
use rayon::prelude::*;

use crate::sweep::{orientations_up_to, tree_choices, tree_string};

const MAX_SHOWN: usize = 20;

#[derive(Debug, Clone, Default)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    fn record(&mut self, r: Result<()>, context: impl FnOnce() -> String) {
        if let Err(e) = r {
            self.checks += 1;
            self.failures.push(format!("{}: {e}", context()));
        }
    }

    fn merge(mut self, other: SuiteResult) -> Self {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} checks, {} failures", self.name, self.checks, self.failures.len())?;
        for w in self.failures.iter().take(MAX_SHOWN) {
            write!(f, "\n  {w}")?;
        }
        if self.failures.len() > MAX_SHOWN {
            write!(f, "\n  ... {} more", self.failures.len() - MAX_SHOWN)?;
        }
        Ok(())
    }
}

/// What the suites sweep over.
#[derive(Debug, Clone)]
pub struct Scope {
    /// Every quiver for the whole-quiver suites.
    pub quivers: Vec<LinearQuiver>,
    /// Quivers restricted to at most two cuts, for gluing and Borel suites.
    pub glued: Vec<LinearQuiver>,
    /// Single segments of a quiver, for the per-tree suites.
    pub segments: Vec<(LinearQuiver, Segment)>,
    /// Bound on segment length for the composition suite.
    pub compose_max: usize,
    pub inject_fault: bool,
}

impl Scope {
    pub fn up_to(max_n: usize) -> Self {
        let mut segments = Vec::new();
        for n in 1..=max_n {
            for dir in [Direction::Right, Direction::Left] {
                let q = LinearQuiver::from_edges(vec![dir; n - 1]);
                segments.push((q.clone(), q.deconcatenate().segments[0]));
                if n == 1 {
                    break;
                }
            }
        }
        Scope {
            quivers: orientations_up_to(max_n, usize::MAX),
            glued: orientations_up_to(max_n, 2),
            segments,
            compose_max: max_n.min(6),
            inject_fault: false,
        }
    }

    pub fn single(q: LinearQuiver) -> Self {
        let segments = q.deconcatenate().segments.into_iter().map(|s| (q.clone(), s)).collect();
        let compose_max = q.n().min(6);
        Scope { quivers: vec![q.clone()], glued: vec![q], segments, compose_max, inject_fault: false }
    }
}

fn segment_intervals(seg: &Segment) -> Vec<Interval> {
    let mut out = Vec::new();
    for a in seg.lo..=seg.hi {
        for b in a..=seg.hi {
            out.push(Interval::new(a, b));
        }
    }
    out
}

fn segment_tables(seg: &Segment) -> Vec<StructureTable> {
    enumerate_trees(seg.len())
        .into_iter()
        .map(|t| StructureTable::new(&LabeledTree::new(t, seg.lo - 1), *seg).expect("tree fits its segment"))
        .collect()
}

fn table_name(q: &LinearQuiver, t: &StructureTable) -> String {
    format!("{} {} {}", q.orientation(), t.segment(), t.tree().shape())
}

/// Closed-form Hom and Ext¹ between interval modules of each segment, and
/// the Δ/∇ duality of every tree, against the oracle.
pub fn closed_form_suite(scope: &Scope) -> SuiteResult {
    let by_quiver = scope
        .quivers
        .par_iter()
        .map(|q| {
            let mut r = SuiteResult::new("closed-form");
            let oracle = IntervalOracle::new(q);
            for seg in q.deconcatenate().segments {
                let xs = segment_intervals(&seg);
                for &x in &xs {
                    for &y in &xs {
                        let res = (|| {
                            let (h, e) = oracle.dims(x, y)?;
                            let (hc, ec) = (hom_dim(&seg, x, y)?, ext1_dim(&seg, x, y)?);
                            r.check(h == hc && e == ec, || {
                                format!("{} {x} {y}: closed form ({hc},{ec}) oracle ({h},{e})", q.orientation())
                            });
                            Ok(())
                        })();
                        r.record(res, || format!("{} {x} {y}", q.orientation()));
                    }
                }
            }
            r
        })
        .reduce(|| SuiteResult::new("closed-form"), SuiteResult::merge);
    let by_tree = scope
        .segments
        .par_iter()
        .flat_map_iter(|(q, seg)| segment_tables(seg).into_iter().map(move |t| (q, t)))
        .map_init(
            || None::<(LinearQuiver, IntervalOracle)>,
            |cache, (q, t)| {
                if cache.as_ref().is_none_or(|(cq, _)| cq != q) {
                    *cache = Some((q.clone(), IntervalOracle::new(q)));
                }
                let oracle = &cache.as_ref().unwrap().1;
                let mut r = SuiteResult::new("closed-form");
                let res = duality_checks(&mut r, oracle, q, &t);
                r.record(res, || table_name(q, &t));
                r
            },
        )
        .reduce(|| SuiteResult::new("closed-form"), SuiteResult::merge);
    by_quiver.merge(by_tree)
}

fn duality_checks(r: &mut SuiteResult, oracle: &IntervalOracle, q: &LinearQuiver, t: &StructureTable) -> Result<()> {
    for i in t.vertices() {
        for j in t.vertices() {
            let (di, nj) = (t.standard(i), t.costandard(j));
            let (h, e) = oracle.dims(di, nj)?;
            r.check(h == usize::from(i == j) && e == 0, || {
                format!("{}: Hom/Ext¹(Δ({i}), ∇({j})) = ({h},{e})", table_name(q, t))
            });
            let (dj, (hs, es)) = (t.standard(j), oracle.dims(di, t.standard(j))?);
            let (hc, ec) = (t.hom_dim(di, dj)?, t.ext1_dim(di, dj)?);
            r.check(hs == hc && es == ec, || {
                format!("{}: Δ({i}), Δ({j}) closed form ({hc},{ec}) oracle ({hs},{es})", table_name(q, t))
            });
        }
    }
    Ok(())
}

/// The fault injected by `--inject-fault`: the first forbidden pair is
/// dropped, or the first composable pair forbidden when there is none.
fn inject_fault(p: &MonomialPresentation) -> MonomialPresentation {
    if let Some(&(inner, outer)) = p.forbidden().next() {
        return p.with_toggled_relation(inner, outer);
    }
    for inner in p.arrows() {
        if let Some(outer) = p.arrows().find(|a| a.src == inner.tgt) {
            return p.with_toggled_relation(*inner, *outer);
        }
    }
    p.clone()
}

/// Cell dimensions of `p` against `Hom`/`Ext¹` between standard modules,
/// as computed by `dims`. Cells above degree 1 must be empty.
fn cell_checks(
    r: &mut SuiteResult,
    p: &MonomialPresentation,
    vertices: &[usize],
    mut dims: impl FnMut(usize, usize) -> Result<(usize, usize)>,
    context: &dyn Fn() -> String,
) -> Result<()> {
    let basis = p.basis()?;
    for (&(i, j, d), cell) in basis.cells() {
        r.check(d <= 1, || format!("{}: nonzero degree {d} cell {i}->{j} ({} paths)", context(), cell.len()));
    }
    for &i in vertices {
        for &j in vertices {
            let (h, e) = dims(i, j)?;
            let (h0, e1) = (basis.dim(i, j, 0), basis.dim(i, j, 1));
            r.check(h == h0 && e == e1, || {
                format!("{}: cell {i}->{j} presentation ({h0},{e1}) expected ({h},{e})", context())
            });
        }
    }
    Ok(())
}

/// Ext-algebra presentations of single trees against closed forms and the
/// oracle.
pub fn presentation_suite(scope: &Scope) -> SuiteResult {
    scope
        .segments
        .par_iter()
        .map(|(q, seg)| {
            let mut r = SuiteResult::new("presentations");
            let oracle = IntervalOracle::new(q);
            for t in segment_tables(seg) {
                let mut p = MonomialPresentation::ext_algebra(&t);
                if scope.inject_fault {
                    p = inject_fault(&p);
                }
                let vertices: Vec<_> = t.vertices().collect();
                let context = || table_name(q, &t);
                let res = cell_checks(
                    &mut r,
                    &p,
                    &vertices,
                    |i, j| {
                        let (x, y) = (t.standard(i), t.standard(j));
                        let (h, e) = (t.hom_dim(x, y)?, t.ext1_dim(x, y)?);
                        Ok((h, e))
                    },
                    &context,
                );
                r.record(res, context);
                let res =
                    cell_checks(&mut r, &p, &vertices, |i, j| oracle.dims(t.standard(i), t.standard(j)), &context);
                r.record(res, context);
            }
            r
        })
        .reduce(|| SuiteResult::new("presentations"), SuiteResult::merge)
}

struct Realization<'a> {
    fam: &'a ModuleFamily,
    lo: usize,
    arrows: Vec<(Arrow, Element)>,
}

impl Realization<'_> {
    fn path(&self, p: &ReducedPath) -> Result<Element> {
        let mut acc = self.fam.identity(p.src - self.lo);
        for a in &p.arrows {
            let img = &self.arrows.iter().find(|(b, _)| b == a).expect("arrow realized").1;
            acc = self.fam.compose(img, &acc)?;
        }
        Ok(acc)
    }
}

/// Yoneda products of the oracle against the presentation's multiplication
/// on every pair of basis elements, with arrows realized as oracle basis
/// elements.
pub fn composition_suite(scope: &Scope) -> SuiteResult {
    scope
        .segments
        .iter()
        .filter(|(_, seg)| seg.len() <= scope.compose_max)
        .flat_map(|(q, seg)| segment_tables(seg).into_iter().map(move |t| (q, t)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(q, t)| {
            let mut r = SuiteResult::new("composition");
            let res = composition_checks(&mut r, q, t);
            r.record(res, || table_name(q, t));
            r
        })
        .reduce(|| SuiteResult::new("composition"), SuiteResult::merge)
}

fn composition_checks(r: &mut SuiteResult, q: &LinearQuiver, t: &StructureTable) -> Result<()> {
    let lo = t.segment().lo;
    let reps = t.vertices().map(|i| rep_of_interval(q, t.standard(i))).collect::<Result<Vec<_>>>()?;
    let fam = ModuleFamily::new(q, reps)?;
    let p = MonomialPresentation::ext_algebra(t);
    let mut arrows = Vec::new();
    for a in p.arrows() {
        let basis = fam.basis(a.src - lo, a.tgt - lo, a.degree)?;
        r.check(basis.len() == 1, || {
            format!("{}: arrow {} has oracle space of dim {}", table_name(q, t), a.name(), basis.len())
        });
        if let Some(e) = basis.into_iter().next() {
            arrows.push((*a, e));
        }
    }
    if arrows.len() != p.arrows().count() {
        return Ok(());
    }
    let real = Realization { fam: &fam, lo, arrows };

    // two-arrow composites: nonzero exactly when the pair is not forbidden
    for (inner, ei) in &real.arrows {
        for (outer, eo) in &real.arrows {
            if inner.tgt != outer.src || inner.degree + outer.degree > 1 {
                continue;
            }
            let zero = fam.is_zero(&fam.compose(eo, ei)?);
            r.check(zero == p.is_forbidden(inner, outer), || {
                format!("{}: {}{} oracle zero = {zero}", table_name(q, t), outer.name(), inner.name())
            });
        }
    }

    let basis = p.basis()?;
    let elements: Vec<_> = basis.elements().cloned().collect();
    let images = elements.iter().map(|e| real.path(e)).collect::<Result<Vec<_>>>()?;
    for (e, img) in elements.iter().zip(&images) {
        r.check(!fam.is_zero(img), || format!("{}: basis element {e} realizes to zero", table_name(q, t)));
    }
    for (a, ea) in elements.iter().zip(&images) {
        for (b, eb) in elements.iter().zip(&images) {
            if b.tgt != a.src || a.degree + b.degree > 1 {
                continue;
            }
            let oracle_zero = fam.is_zero(&fam.compose(ea, eb)?);
            let product = p.multiply(a, b);
            r.check(oracle_zero == product.is_none(), || {
                format!("{}: {a} · {b} oracle zero = {oracle_zero}, presentation {product:?}", table_name(q, t))
            });
        }
    }
    Ok(())
}

/// Higher products vanish for degree reasons on single trees and on glued
/// presentations.
pub fn formality_suite(scope: &Scope) -> SuiteResult {
    let trees = scope
        .segments
        .par_iter()
        .map(|(q, seg)| {
            let mut r = SuiteResult::new("formality");
            for t in segment_tables(seg) {
                formality_check(&mut r, &MonomialPresentation::ext_algebra(&t), || table_name(q, &t));
            }
            r
        })
        .reduce(|| SuiteResult::new("formality"), SuiteResult::merge);
    let glued = scope
        .glued
        .par_iter()
        .filter(|q| !q.deconcatenate().cuts.is_empty())
        .map(|q| {
            let mut r = SuiteResult::new("formality");
            for trees in tree_choices(q) {
                let context = || format!("{} {}", q.orientation(), tree_string(&trees));
                match LinearQh::new(q.clone(), trees.clone()).and_then(|qh| qh.ext_algebra()) {
                    Ok(p) => formality_check(&mut r, &p, context),
                    Err(e) => r.record(Err(e), context),
                }
            }
            r
        })
        .reduce(|| SuiteResult::new("formality"), SuiteResult::merge);
    trees.merge(glued)
}

fn formality_check(r: &mut SuiteResult, p: &MonomialPresentation, context: impl Fn() -> String) {
    match p.formality_check() {
        Ok(report) => {
            r.checks += report.chains_checked;
            r.check(report.passed(), || {
                let w = &report.witnesses[0];
                let chain: Vec<_> = w.chain.iter().map(ToString::to_string).collect();
                format!("{}: chain [{}] lands in nonzero cell {:?}", context(), chain.join(", "), w.cell)
            });
        }
        Err(e) => r.record(Err(e), context),
    }
}

/// Borel existence decisions, glued Borel subalgebras and glued Ext-algebra
/// presentations on whole quivers.
pub fn borel_suite(scope: &Scope) -> SuiteResult {
    scope
        .glued
        .par_iter()
        .map(|q| {
            let mut r = SuiteResult::new("borel");
            let oracle = IntervalOracle::new(q);
            let uniform = q.deconcatenate().cuts.is_empty();
            for trees in tree_choices(q) {
                let context = || format!("{} {}", q.orientation(), tree_string(&trees));
                let res = LinearQh::new(q.clone(), trees.clone())
                    .and_then(|qh| borel_checks(&mut r, &oracle, &qh, uniform, &context));
                r.record(res, context);
            }
            r
        })
        .reduce(|| SuiteResult::new("borel"), SuiteResult::merge)
}

fn borel_checks(
    r: &mut SuiteResult,
    oracle: &IntervalOracle,
    qh: &LinearQh,
    uniform: bool,
    context: &dyn Fn() -> String,
) -> Result<()> {
    let n = qh.n();
    // the decision is cross-checked against the radical criterion inside
    let report = qh.borel_report(oracle)?;
    r.check(report.verdict || !uniform, || format!("{}: uniform quiver without Borel subalgebra", context()));
    if report.verdict {
        let b = qh.borel(&report)?;
        let arrows: BTreeSet<_> = b.arrows().collect();
        let mut ext = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if oracle.ext1(qh.standard(i), qh.standard(j))? != 0 {
                    ext.insert((i, j));
                }
            }
        }
        r.check(arrows == ext, || {
            format!("{}: Borel arrows {arrows:?} but Ext¹ between standards at {ext:?}", context())
        });
        r.check(b.has_no_relations(), || format!("{}: Borel paths not unique", context()));
    } else {
        r.check(qh.borel(&report).is_err(), || format!("{}: gluing not refused", context()));
    }
    Ok(())
}

/// Glued Ext-algebra presentations against the oracle on whole quivers.
/// The gluing is only claimed when every cut sink is minimal or maximal in
/// the essential order, the same condition as Borel existence.
pub fn gluing_suite(scope: &Scope) -> SuiteResult {
    scope
        .glued
        .par_iter()
        .map(|q| {
            let mut r = SuiteResult::new("gluing");
            let oracle = IntervalOracle::new(q);
            for trees in tree_choices(q) {
                let context = || format!("{} {}", q.orientation(), tree_string(&trees));
                let res = LinearQh::new(q.clone(), trees.clone()).and_then(|qh| {
                    if !qh.borel_report(&oracle)?.verdict {
                        return Ok(());
                    }
                    let vertices: Vec<_> = (1..=qh.n()).collect();
                    let p = qh.ext_algebra()?;
                    cell_checks(&mut r, &p, &vertices, |i, j| oracle.dims(qh.standard(i), qh.standard(j)), &context)
                });
                r.record(res, context);
            }
            r
        })
        .reduce(|| SuiteResult::new("gluing"), SuiteResult::merge)
}

pub fn run_all(scope: &Scope) -> Vec<SuiteResult> {
    vec![
        closed_form_suite(scope),
        presentation_suite(scope),
        composition_suite(scope),
        gluing_suite(scope),
        formality_suite(scope),
        borel_suite(scope),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_sweep_passes() {
        for s in run_all(&Scope::up_to(3)) {
            assert!(s.passed(), "{s}");
            assert!(s.checks > 0, "{s}");
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let mut scope = Scope::up_to(3);
        scope.inject_fault = true;
        let s = presentation_suite(&scope);
        assert!(!s.passed());
        assert!(s.to_string().starts_with("FAIL presentations"));
    }

    #[test]
    fn single_orientation() {
        let q = linqh_core::linquiver::parse_orientation("RRLLRR").unwrap();
        let scope = Scope::single(q);
        assert_eq!(scope.segments.len(), 3);
        assert!(borel_suite(&scope).passed());
    }
}
