//! The quasi-hereditary structure on a whole linear quiver, assembled from
//! one tree per uniform segment.

use alloc::format;
use alloc::vec::Vec;

use crate::borel::{borel_generators, decide_regular_borel, glue_borels, BorelPresentation, ExistenceReport};
use crate::error::{Error, Result};
use crate::intervals::{costandard_in_quiver, standard_in_quiver, Interval, StructureTable};
use crate::linquiver::{parse_orientation, Deconcatenation, LinearQuiver};
use crate::presentations::MonomialPresentation;
use crate::rep_oracle::{rep_of_interval, IntervalOracle, ModuleFamily};
use crate::treeorder::{combine_orders, parse_tree, tree_order, BinaryTree, LabeledTree, PartialOrder};
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQh {
    quiver: LinearQuiver,
    decon: Deconcatenation,
    tables: Vec<StructureTable>,
    order: PartialOrder,
    standard: Vec<Interval>,
    costandard: Vec<Interval>,
}

impl LinearQh {
    /// One tree per segment of the deconcatenation, left to right.
    pub fn new(quiver: LinearQuiver, trees: Vec<BinaryTree>) -> Result<Self> {
        let decon = quiver.deconcatenate();
        if trees.len() != decon.segments.len() {
            return Err(Error::SizeMismatch {
                expected: decon.segments.len(),
                found: trees.len(),
                what: "number of trees vs segments",
            });
        }
        let tables = decon
            .segments
            .iter()
            .zip(trees)
            .map(|(s, t)| StructureTable::new(&LabeledTree::new(t, s.lo - 1), *s))
            .collect::<Result<Vec<_>>>()?;
        let orders: Vec<_> = tables.iter().map(|t| tree_order(t.tree())).collect();
        let order = combine_orders(&orders, &decon)?;
        let standard = (1..=quiver.n()).map(|i| standard_in_quiver(&quiver, &order, i)).collect();
        let costandard = (1..=quiver.n()).map(|i| costandard_in_quiver(&quiver, &order, i)).collect();
        Ok(LinearQh { quiver, decon, tables, order, standard, costandard })
    }

    /// Orientation over `{R, L}` (empty for one vertex) and semicolon
    /// separated tree strings.
    pub fn parse(orientation: &str, trees: &str) -> Result<Self> {
        let q = if orientation.is_empty() { LinearQuiver::single() } else { parse_orientation(orientation)? };
        let trees = trees.split(';').map(|s| parse_tree(s.trim())).collect::<Result<Vec<_>>>()?;
        Self::new(q, trees)
    }

    pub fn quiver(&self) -> &LinearQuiver {
        &self.quiver
    }

    pub fn deconcatenation(&self) -> &Deconcatenation {
        &self.decon
    }

    pub fn tables(&self) -> &[StructureTable] {
        &self.tables
    }

    pub fn order(&self) -> &PartialOrder {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn standard(&self, i: Vertex) -> Interval {
        self.standard[i - 1]
    }

    pub fn costandard(&self, i: Vertex) -> Interval {
        self.costandard[i - 1]
    }

    /// Generated by `i ⊴ j` when `L(i)` is a factor of `Δ(j)` or `∇(j)`; the
    /// second condition is `(P(i) : Δ(j)) > 0` by reciprocity.
    pub fn essential_order(&self) -> PartialOrder {
        let mut pairs = Vec::new();
        for j in 1..=self.n() {
            for i in self.standard(j).vertices().chain(self.costandard(j).vertices()) {
                pairs.push((i, j));
            }
        }
        PartialOrder::from_pairs(0, self.n(), pairs)
    }

    /// The Ext-algebra of standard modules: per-segment presentations glued
    /// at every cut vertex.
    pub fn ext_algebra(&self) -> Result<MonomialPresentation> {
        self.glue_segments(MonomialPresentation::ext_algebra)
    }

    pub fn ext_algebra_parts(&self) -> Vec<MonomialPresentation> {
        self.tables.iter().map(MonomialPresentation::ext_algebra).collect()
    }

    pub fn ringel_duals(&self) -> Vec<MonomialPresentation> {
        self.tables.iter().map(MonomialPresentation::ringel_dual).collect()
    }

    fn glue_segments(&self, part: impl Fn(&StructureTable) -> MonomialPresentation) -> Result<MonomialPresentation> {
        let mut glued = part(&self.tables[0]);
        for (t, &(v, _)) in self.tables[1..].iter().zip(&self.decon.cuts) {
            glued = glued.glue(&part(t), v)?;
        }
        Ok(glued)
    }

    pub fn borel_report(&self, oracle: &IntervalOracle) -> Result<ExistenceReport> {
        decide_regular_borel(&self.decon, &self.tables, &self.order, oracle)
    }

    pub fn borel_parts(&self) -> Result<Vec<BorelPresentation>> {
        self.tables.iter().map(|t| borel_generators(t, &self.quiver)).collect()
    }

    /// The glued Borel subalgebra; refused when `report` says none exists.
    pub fn borel(&self, report: &ExistenceReport) -> Result<BorelPresentation> {
        let parts = self.borel_parts()?;
        let mut glued = parts[0].clone();
        for (b, &(v, _)) in parts[1..].iter().zip(&self.decon.cuts) {
            glued = glue_borels(&glued, b, v, report)?;
        }
        Ok(glued)
    }

    /// Indecomposable summands `T(i)` of the characteristic tilting module,
    /// found among interval modules as the unique one with highest factor
    /// `i` lying in both `F(Δ)` and `F(∇)`.
    pub fn tilting(&self, oracle: &IntervalOracle) -> Result<Vec<Interval>> {
        let n = self.n();
        let mut out = Vec::with_capacity(n);
        for i in 1..=n {
            let mut found = Vec::new();
            for a in 1..=i {
                for b in i..=n {
                    let x = Interval::new(a, b);
                    if !x.vertices().all(|k| self.order.le(k, i)) {
                        continue;
                    }
                    let mut ok = true;
                    for j in 1..=n {
                        if oracle.ext1(self.standard(j), x)? != 0 || oracle.ext1(x, self.costandard(j))? != 0 {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        found.push(x);
                    }
                }
            }
            match found.as_slice() {
                [t] => out.push(*t),
                _ => {
                    return Err(Error::LogicOracleDisagreement {
                        detail: format!("tilting candidates for vertex {i}: {found:?}"),
                    })
                }
            }
        }
        Ok(out)
    }

    /// The standard modules as explicit representations, `Δ(i)` at index `i − 1`.
    pub fn standard_family(&self) -> Result<ModuleFamily> {
        let reps = self.standard.iter().map(|&x| rep_of_interval(&self.quiver, x)).collect::<Result<Vec<_>>>()?;
        ModuleFamily::new(&self.quiver, reps)
    }
}
