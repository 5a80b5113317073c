use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intervals::Interval;
use crate::linalg::{Matrix, Scalar};
use crate::linquiver::LinearQuiver;
use crate::Vertex;

/// A representation: a vector space per vertex and a matrix per arrow.
///
/// `maps[k]` belongs to edge `k` (0-based, joining vertices `k+1` and `k+2`)
/// and has shape `dims[target] × dims[source]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl QuiverRep {
    pub fn new(q: &LinearQuiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != q.n() || maps.len() != q.edges().len() {
            return Err(Error::ShapeMismatch);
        }
        for ((s, t), m) in q.arrows().zip(&maps) {
            if m.rows() != dims[t - 1] || m.cols() != dims[s - 1] {
                return Err(Error::ShapeMismatch);
            }
        }
        Ok(QuiverRep { dims, maps })
    }

    pub fn zero(q: &LinearQuiver) -> Self {
        let dims = vec![0; q.n()];
        let maps = q.arrows().map(|_| Matrix::zeros(0, 0)).collect();
        QuiverRep { dims, maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: Vertex) -> usize {
        self.dims[v - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, edge: usize) -> &Matrix {
        &self.maps[edge]
    }

    /// The linear map along the directed path `i ⇝ j`, if the path exists.
    pub fn path_matrix(&self, q: &LinearQuiver, i: Vertex, j: Vertex) -> Option<Matrix> {
        let edges = q.path_edges(i, j)?;
        let mut m = Matrix::identity(self.dim(i));
        for k in edges {
            m = self.maps[k].mul(&m);
        }
        Some(m)
    }

    /// Block diagonal sum, summands in order.
    pub fn direct_sum(q: &LinearQuiver, parts: &[QuiverRep]) -> QuiverRep {
        let dims: Vec<usize> = (0..q.n()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = q
            .arrows()
            .enumerate()
            .map(|(k, (s, t))| {
                let mut m = Matrix::zeros(dims[t - 1], dims[s - 1]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    let block = &p.maps[k];
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m.set(r0 + r, c0 + c, block.get(r, c));
                        }
                    }
                    r0 += block.rows();
                    c0 += block.cols();
                }
                m
            })
            .collect();
        QuiverRep { dims, maps }
    }
}

/// The interval module: `K` on `x.a ..= x.b`, identities on inner arrows.
pub fn rep_of_interval(q: &LinearQuiver, x: Interval) -> Result<QuiverRep> {
    if x.is_empty() {
        return Ok(QuiverRep::zero(q));
    }
    q.check_vertex(x.a)?;
    q.check_vertex(x.b)?;
    let dims: Vec<usize> = (1..=q.n()).map(|v| usize::from(x.contains(v))).collect();
    let maps = q
        .arrows()
        .map(|(s, t)| {
            let mut m = Matrix::zeros(dims[t - 1], dims[s - 1]);
            if dims[t - 1] == 1 && dims[s - 1] == 1 {
                m.set(0, 0, Scalar::one());
            }
            m
        })
        .collect();
    QuiverRep::new(q, dims, maps)
}

/// A morphism of representations: one matrix per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMap {
    comps: Vec<Matrix>,
}

impl RepMap {
    pub fn new(comps: Vec<Matrix>) -> Self {
        RepMap { comps }
    }

    pub fn zero(source: &QuiverRep, target: &QuiverRep) -> Self {
        RepMap { comps: source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect() }
    }

    pub fn identity(m: &QuiverRep) -> Self {
        RepMap { comps: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn at(&self, v: Vertex) -> &Matrix {
        &self.comps[v - 1]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RepMap) -> RepMap {
        RepMap { comps: self.comps.iter().zip(&inner.comps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    /// All entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for m in &self.comps {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    out.push(m.get(r, c));
                }
            }
        }
        out
    }

    pub fn is_morphism(&self, q: &LinearQuiver, source: &QuiverRep, target: &QuiverRep) -> bool {
        q.arrows()
            .enumerate()
            .all(|(k, (s, t))| target.maps[k].mul(&self.comps[s - 1]) == self.comps[t - 1].mul(&source.maps[k]))
    }
}

/// A basis of `Hom(m, n)`: the kernel of `φ ↦ (n_α φ_s − φ_t m_α)_α`.
pub fn hom_basis(q: &LinearQuiver, m: &QuiverRep, n: &QuiverRep) -> Result<Vec<RepMap>> {
    if m.dims.len() != q.n() || n.dims.len() != q.n() {
        return Err(Error::ShapeMismatch);
    }
    let mut offsets = Vec::with_capacity(q.n() + 1);
    offsets.push(0);
    for v in 0..q.n() {
        offsets.push(offsets[v] + n.dims[v] * m.dims[v]);
    }
    let unknowns = offsets[q.n()];
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (k, (s, t)) in q.arrows().enumerate() {
        let (s, t) = (s - 1, t - 1);
        let (na, ma) = (&n.maps[k], &m.maps[k]);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![Scalar::zero(); unknowns];
                for j in 0..n.dims[s] {
                    row[var(s, j, c)] += na.get(r, j);
                }
                for j in 0..m.dims[t] {
                    row[var(t, r, j)] -= ma.get(j, c);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c]);
    let basis = system
        .nullspace()
        .into_iter()
        .map(|x| {
            let comps = (0..q.n()).map(|v| Matrix::from_fn(n.dims[v], m.dims[v], |r, c| x[var(v, r, c)])).collect();
            RepMap { comps }
        })
        .collect();
    Ok(basis)
}

pub fn hom_dim_oracle(q: &LinearQuiver, m: &QuiverRep, n: &QuiverRep) -> Result<usize> {
    Ok(hom_basis(q, m, n)?.len())
}

/// `⟨d, e⟩ = Σ d_i e_i − Σ_{α: s→t} d_s e_t`.
pub fn euler_form(q: &LinearQuiver, d: &[usize], e: &[usize]) -> i64 {
    let diag: i64 = d.iter().zip(e).map(|(&x, &y)| (x * y) as i64).sum();
    let arrows: i64 = q.arrows().map(|(s, t)| (d[s - 1] * e[t - 1]) as i64).sum();
    diag - arrows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linquiver::parse_orientation;

    fn m(a: Vertex, b: Vertex) -> Interval {
        Interval::new(a, b)
    }

    #[test]
    fn interval_reps() {
        let q = LinearQuiver::uniform(6);
        let r = rep_of_interval(&q, m(2, 3)).unwrap();
        assert_eq!(r.dims(), [0, 1, 1, 0, 0, 0]);
        assert_eq!(r.map(1).get(0, 0), Scalar::one());
        assert_eq!(rep_of_interval(&q, m(1, 1)).unwrap().dims(), [1, 0, 0, 0, 0, 0]);
        assert!(rep_of_interval(&q, m(5, 7)).is_err());

        let q = parse_orientation("RRLLRR").unwrap();
        let valley = rep_of_interval(&q, m(4, 6)).unwrap();
        assert_eq!(valley.dims(), [0, 0, 0, 1, 1, 1, 0]);
        assert_eq!(valley.map(3).get(0, 0), Scalar::one());
        assert_eq!(valley.map(4).get(0, 0), Scalar::one());
    }

    #[test]
    fn hom_examples() {
        let q = LinearQuiver::uniform(6);
        let rep = |x| rep_of_interval(&q, x).unwrap();
        assert_eq!(hom_dim_oracle(&q, &rep(m(2, 3)), &rep(m(1, 2))), Ok(1));
        assert_eq!(hom_dim_oracle(&q, &rep(m(2, 5)), &rep(m(2, 5))), Ok(1));
        let a2 = LinearQuiver::uniform(2);
        let s1 = rep_of_interval(&a2, m(1, 1)).unwrap();
        let s2 = rep_of_interval(&a2, m(2, 2)).unwrap();
        assert_eq!(hom_dim_oracle(&a2, &s1, &s2), Ok(0));
        for f in hom_basis(&q, &rep(m(2, 4)), &rep(m(1, 3))).unwrap() {
            assert!(f.is_morphism(&q, &rep(m(2, 4)), &rep(m(1, 3))));
        }
    }

    #[test]
    fn euler_examples() {
        let q = LinearQuiver::uniform(6);
        let d = rep_of_interval(&q, m(1, 1)).unwrap();
        let e = rep_of_interval(&q, m(2, 3)).unwrap();
        assert_eq!(euler_form(&q, d.dims(), e.dims()), -1);
        for (a, b) in [(1, 1), (2, 5), (1, 6)] {
            let x = rep_of_interval(&q, m(a, b)).unwrap();
            assert_eq!(euler_form(&q, x.dims(), x.dims()), 1);
        }
        assert_eq!(euler_form(&q, &[0; 6], e.dims()), 0);
    }

    #[test]
    fn direct_sums_and_paths() {
        let q = parse_orientation("RL").unwrap();
        let a = rep_of_interval(&q, m(1, 2)).unwrap();
        let b = rep_of_interval(&q, m(2, 3)).unwrap();
        let s = QuiverRep::direct_sum(&q, &[a.clone(), b.clone()]);
        assert_eq!(s.dims(), [1, 2, 1]);
        assert_eq!(
            hom_dim_oracle(&q, &s, &s),
            Ok(2 + hom_dim_oracle(&q, &a, &b).unwrap() + hom_dim_oracle(&q, &b, &a).unwrap())
        );
        assert!(s.path_matrix(&q, 1, 3).is_none());
        assert_eq!(s.path_matrix(&q, 3, 2).unwrap().rank(), 1);
    }

    proptest::proptest! {
        #[test]
        fn projectives_represent_evaluation(bits in proptest::collection::vec(proptest::bool::ANY, 0..6), a in 1usize..8, len in 0usize..7) {
            let q = LinearQuiver::from_edges(bits.iter().map(|&b| if b { crate::Direction::Right } else { crate::Direction::Left }).collect());
            let a = a.min(q.n());
            let b = (a + len).min(q.n());
            let x = rep_of_interval(&q, m(a, b)).unwrap();
            for v in 1..=q.n() {
                let p = rep_of_interval(&q, q.reachable(v)).unwrap();
                proptest::prop_assert_eq!(hom_dim_oracle(&q, &p, &x).unwrap(), x.dim(v));
            }
        }
    }
}
