use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::rep::{euler_form, hom_basis, rep_of_interval, QuiverRep, RepMap};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::linquiver::LinearQuiver;
use crate::Vertex;

/// A direct sum of indecomposable projectives `⊕ P(top_g)`.
///
/// `P(x)` at `y` is spanned by the path `x ⇝ y`, so the summands present at
/// `y` give a basis of the sum there, in summand order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveSum {
    tops: Vec<Vertex>,
    rep: QuiverRep,
    at: Vec<Vec<usize>>,
}

impl ProjectiveSum {
    pub fn new(q: &LinearQuiver, tops: Vec<Vertex>) -> Self {
        let parts: Vec<_> =
            tops.iter().map(|&x| rep_of_interval(q, q.reachable(x)).expect("projective support in range")).collect();
        let rep = QuiverRep::direct_sum(q, &parts);
        let at = (1..=q.n()).map(|y| (0..tops.len()).filter(|&g| q.reachable(tops[g]).contains(y)).collect()).collect();
        ProjectiveSum { tops, rep, at }
    }

    pub fn tops(&self) -> &[Vertex] {
        &self.tops
    }

    pub fn rep(&self) -> &QuiverRep {
        &self.rep
    }

    /// The morphism to `target` sending the generator of summand `g` to
    /// `images[g] ∈ target_{top_g}`.
    pub fn map_to(&self, q: &LinearQuiver, target: &QuiverRep, images: &[Vec<Scalar>]) -> RepMap {
        let comps = (1..=q.n())
            .map(|y| {
                let cols: Vec<Vec<Scalar>> = self.at[y - 1]
                    .iter()
                    .map(|&g| {
                        let path = target.path_matrix(q, self.tops[g], y).expect("summand reaches y");
                        path.apply(&images[g])
                    })
                    .collect();
                Matrix::from_columns(target.dim(y), &cols)
            })
            .collect();
        RepMap::new(comps)
    }

    /// The basis of `Hom(self, target)` given by sending one generator to a
    /// unit vector and the others to zero.
    pub fn hom_basis_to(&self, q: &LinearQuiver, target: &QuiverRep) -> Vec<RepMap> {
        let zero_images: Vec<Vec<Scalar>> =
            self.tops.iter().map(|&x| alloc::vec![Scalar::zero(); target.dim(x)]).collect();
        let mut out = Vec::new();
        for (g, &x) in self.tops.iter().enumerate() {
            for k in 0..target.dim(x) {
                let mut images = zero_images.clone();
                images[g][k] = Scalar::from_integer(1);
                out.push(self.map_to(q, target, &images));
            }
        }
        out
    }
}

/// `0 → P1 → P0 → M → 0` with `P0 → M` a projective cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermResolution {
    pub p0: ProjectiveSum,
    pub p1: ProjectiveSum,
    /// `P0 → M`.
    pub cover: RepMap,
    /// `P1 → P0`.
    pub d: RepMap,
    /// Image in `M` of each generator of `P0`.
    pub cover_generators: Vec<Vec<Scalar>>,
    /// Image in `P0` of each generator of `P1`.
    pub kernel_generators: Vec<Vec<Scalar>>,
}

/// Vectors in `candidates` completing `radical` to a spanning set, chosen
/// greedily in order.
fn complement(dim: usize, radical: &[Vec<Scalar>], candidates: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut span: Vec<Vec<Scalar>> = radical.to_vec();
    let mut rank = Matrix::from_columns(dim, &span).rank();
    let mut chosen = Vec::new();
    for c in candidates {
        span.push(c.clone());
        let r = Matrix::from_columns(dim, &span).rank();
        if r > rank {
            rank = r;
            chosen.push(c.clone());
        } else {
            span.pop();
        }
    }
    chosen
}

/// Top generators `(vertex, vector)` of the subrepresentation of `rep`
/// spanned at each vertex `y` by the columns of `spaces[y-1]`.
fn top_generators(q: &LinearQuiver, rep: &QuiverRep, spaces: &[Vec<Vec<Scalar>>]) -> Vec<(Vertex, Vec<Scalar>)> {
    let mut gens = Vec::new();
    for y in 1..=q.n() {
        let mut radical = Vec::new();
        for (k, (s, t)) in q.arrows().enumerate() {
            if t == y {
                for v in &spaces[s - 1] {
                    radical.push(rep.map(k).apply(v));
                }
            }
        }
        for v in complement(rep.dim(y), &radical, &spaces[y - 1]) {
            gens.push((y, v));
        }
    }
    gens
}

fn unit_vectors(dim: usize) -> Vec<Vec<Scalar>> {
    (0..dim).map(|k| (0..dim).map(|j| Scalar::from_integer(i64::from(j == k))).collect()).collect()
}

/// Minimal projective resolution; it has length at most one because path
/// algebras are hereditary.
pub fn std_resolution(q: &LinearQuiver, m: &QuiverRep) -> Result<TwoTermResolution> {
    let spaces: Vec<_> = (1..=q.n()).map(|y| unit_vectors(m.dim(y))).collect();
    let gens = top_generators(q, m, &spaces);
    let p0 = ProjectiveSum::new(q, gens.iter().map(|g| g.0).collect());
    let cover_generators: Vec<_> = gens.into_iter().map(|g| g.1).collect();
    let cover = p0.map_to(q, m, &cover_generators);

    let mut kernel = Vec::new();
    for y in 1..=q.n() {
        let c = cover.at(y);
        if c.rank() != m.dim(y) {
            return Err(Error::LogicOracleDisagreement { detail: format!("projective cover not onto at vertex {y}") });
        }
        kernel.push(c.nullspace());
    }
    let kgens = top_generators(q, p0.rep(), &kernel);
    let p1 = ProjectiveSum::new(q, kgens.iter().map(|g| g.0).collect());
    let kernel_generators: Vec<_> = kgens.into_iter().map(|g| g.1).collect();
    let d = p1.map_to(q, p0.rep(), &kernel_generators);

    let kernel_dim: usize = kernel.iter().map(Vec::len).sum();
    if p1.rep().total_dim() != kernel_dim || (1..=q.n()).any(|y| d.at(y).rank() != p1.rep().dim(y)) {
        return Err(Error::LogicOracleDisagreement {
            detail: format!("kernel of the projective cover is not the projective sum over {:?}", p1.tops()),
        });
    }
    Ok(TwoTermResolution { p0, p1, cover, d, cover_generators, kernel_generators })
}

/// `Ext¹(m, n)` computed twice: from the Euler form, and as the cokernel of
/// `Hom(P0, n) → Hom(P1, n)`. A mismatch is reported as a logic error.
pub fn ext1_dim_oracle(q: &LinearQuiver, m: &QuiverRep, n: &QuiverRep) -> Result<usize> {
    let hom = hom_basis(q, m, n)?.len() as i64;
    let by_euler = hom - euler_form(q, m.dims(), n.dims());
    let by_resolution = ext1_by_resolution(q, &std_resolution(q, m)?, n);
    if by_euler != by_resolution as i64 {
        return Err(Error::LogicOracleDisagreement {
            detail: format!("Ext¹ via Euler form is {by_euler}, via resolution {by_resolution}"),
        });
    }
    Ok(by_resolution)
}

/// Vectors `h ∘ d` for `h` running over a basis of `Hom(P0, n)`.
pub(crate) fn boundary_vectors(q: &LinearQuiver, res: &TwoTermResolution, n: &QuiverRep) -> Vec<Vec<Scalar>> {
    res.p0.hom_basis_to(q, n).iter().map(|h| h.compose(&res.d).flatten()).collect()
}

fn ext1_by_resolution(q: &LinearQuiver, res: &TwoTermResolution, n: &QuiverRep) -> usize {
    let hom_p1: usize = res.p1.tops().iter().map(|&x| n.dim(x)).sum();
    let image = boundary_vectors(q, res, n);
    let len = image.first().map_or(0, Vec::len);
    hom_p1 - Matrix::from_columns(len, &image).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::{Interval, StructureTable};
    use crate::linquiver::parse_orientation;
    use crate::treeorder::{parse_tree, LabeledTree};
    use crate::Segment;

    fn m(a: Vertex, b: Vertex) -> Interval {
        Interval::new(a, b)
    }

    #[test]
    fn standard_resolutions_on_a6() {
        let q = LinearQuiver::uniform(6);
        let seg = Segment::new(1, 6, crate::linquiver::SegmentDirection::A);
        let t = StructureTable::new(&LabeledTree::new(parse_tree("(((..)(..))(.(..)))").unwrap(), 0), seg).unwrap();
        for i in 1..=6 {
            let delta = t.standard(i);
            let res = std_resolution(&q, &rep_of_interval(&q, delta).unwrap()).unwrap();
            assert_eq!(res.p0.tops(), [i]);
            let expected: Vec<Vertex> = if delta.b < 6 { alloc::vec![delta.b + 1] } else { Vec::new() };
            assert_eq!(res.p1.tops(), expected.as_slice());
            assert!(res.d.compose(&RepMap::identity(res.p1.rep())).is_morphism(&q, res.p1.rep(), res.p0.rep()));
            assert!(res.cover.compose(&res.d).is_zero());
        }
    }

    #[test]
    fn valley_resolution() {
        let q = parse_orientation("RRLLRR").unwrap();
        let res = std_resolution(&q, &rep_of_interval(&q, m(4, 6)).unwrap()).unwrap();
        assert_eq!(res.p0.tops(), [5]);
        let mut kernel = res.p1.tops().to_vec();
        kernel.sort();
        assert_eq!(kernel, [3, 7]);
    }

    #[test]
    fn projective_has_zero_kernel() {
        let q = parse_orientation("RLLR").unwrap();
        for v in 1..=q.n() {
            let res = std_resolution(&q, &rep_of_interval(&q, q.reachable(v)).unwrap()).unwrap();
            assert!(res.p1.tops().is_empty());
        }
    }

    #[test]
    fn ext_examples() {
        let q = LinearQuiver::uniform(6);
        let rep = |x| rep_of_interval(&q, x).unwrap();
        assert_eq!(ext1_dim_oracle(&q, &rep(m(1, 1)), &rep(m(2, 3))), Ok(1));
        assert_eq!(ext1_dim_oracle(&q, &rep(m(2, 3)), &rep(m(4, 6))), Ok(1));
        assert_eq!(ext1_dim_oracle(&q, &rep(m(2, 5)), &rep(m(2, 5))), Ok(0));
    }

    #[test]
    fn ext_of_decomposable_modules() {
        let q = parse_orientation("RLR").unwrap();
        let x =
            QuiverRep::direct_sum(&q, &[rep_of_interval(&q, m(1, 2)).unwrap(), rep_of_interval(&q, m(3, 4)).unwrap()]);
        let y = rep_of_interval(&q, m(2, 3)).unwrap();
        let a = ext1_dim_oracle(&q, &rep_of_interval(&q, m(1, 2)).unwrap(), &y).unwrap();
        let b = ext1_dim_oracle(&q, &rep_of_interval(&q, m(3, 4)).unwrap(), &y).unwrap();
        assert_eq!(ext1_dim_oracle(&q, &x, &y), Ok(a + b));
    }
}
