use alloc::vec::Vec;

use super::rep::{hom_basis, QuiverRep, RepMap};
use super::resolution::{boundary_vectors, std_resolution, TwoTermResolution};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::linquiver::LinearQuiver;

/// A homogeneous morphism between two members of a [`ModuleFamily`].
///
/// Degree 0 is a module map `M_src → M_tgt`. Degree 1 is an extension class,
/// represented by a map `u: P1(M_src) → M_tgt` out of the first syzygy; two
/// such maps give the same class when they differ by some `h ∘ d` with
/// `h: P0(M_src) → M_tgt`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub src: usize,
    pub tgt: usize,
    pub degree: u32,
    pub map: RepMap,
}

/// A fixed list of modules with their minimal projective resolutions, in
/// which Hom and Ext¹ bases and Yoneda products are computed.
#[derive(Debug, Clone)]
pub struct ModuleFamily {
    q: LinearQuiver,
    modules: Vec<QuiverRep>,
    resolutions: Vec<TwoTermResolution>,
}

impl ModuleFamily {
    pub fn new(q: &LinearQuiver, modules: Vec<QuiverRep>) -> Result<Self> {
        let resolutions = modules.iter().map(|m| std_resolution(q, m)).collect::<Result<_>>()?;
        Ok(ModuleFamily { q: q.clone(), modules, resolutions })
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn module(&self, i: usize) -> &QuiverRep {
        &self.modules[i]
    }

    pub fn resolution(&self, i: usize) -> &TwoTermResolution {
        &self.resolutions[i]
    }

    pub fn identity(&self, i: usize) -> Element {
        Element { src: i, tgt: i, degree: 0, map: RepMap::identity(&self.modules[i]) }
    }

    pub fn hom_basis(&self, src: usize, tgt: usize) -> Result<Vec<Element>> {
        Ok(hom_basis(&self.q, &self.modules[src], &self.modules[tgt])?
            .into_iter()
            .map(|map| Element { src, tgt, degree: 0, map })
            .collect())
    }

    /// Representatives of a basis of `Ext¹(M_src, M_tgt)`.
    pub fn ext_basis(&self, src: usize, tgt: usize) -> Result<Vec<Element>> {
        let res = &self.resolutions[src];
        let target = &self.modules[tgt];
        let mut span = boundary_vectors(&self.q, res, target);
        let candidates = res.p1.hom_basis_to(&self.q, target);
        let len = candidates.first().map_or(0, |c| c.flatten().len());
        let mut rank = Matrix::from_columns(len, &span).rank();
        let mut out = Vec::new();
        for map in candidates {
            span.push(map.flatten());
            let r = Matrix::from_columns(len, &span).rank();
            if r > rank {
                rank = r;
                out.push(Element { src, tgt, degree: 1, map });
            } else {
                span.pop();
            }
        }
        Ok(out)
    }

    pub fn basis(&self, src: usize, tgt: usize, degree: u32) -> Result<Vec<Element>> {
        match degree {
            0 => self.hom_basis(src, tgt),
            1 => self.ext_basis(src, tgt),
            degree => Err(Error::DegreeTooHigh { degree }),
        }
    }

    pub fn is_zero(&self, e: &Element) -> bool {
        if e.degree == 0 || e.map.is_zero() {
            return e.map.is_zero();
        }
        let span = boundary_vectors(&self.q, &self.resolutions[e.src], &self.modules[e.tgt]);
        let v = e.map.flatten();
        Matrix::from_columns(v.len(), &span).spans(&v)
    }

    /// Lifts `φ: M_a → M_b` to the syzygies, `φ1: P1(M_a) → P1(M_b)`.
    fn lift_to_syzygy(&self, phi: &Element) -> Result<RepMap> {
        let q = &self.q;
        let (ra, rb) = (&self.resolutions[phi.src], &self.resolutions[phi.tgt]);
        let solve = |m: &Matrix, v: &[Scalar]| {
            m.solve(v).ok_or_else(|| Error::LogicOracleDisagreement {
                detail: alloc::string::String::from("module map does not lift through a projective cover"),
            })
        };
        let mut images0 = Vec::new();
        for (g, &x) in ra.p0.tops().iter().enumerate() {
            let target = phi.map.at(x).apply(&ra.cover_generators[g]);
            images0.push(solve(rb.cover.at(x), &target)?);
        }
        let phi0 = ra.p0.map_to(q, rb.p0.rep(), &images0);
        let mut images1 = Vec::new();
        for (h, &y) in ra.p1.tops().iter().enumerate() {
            let target = phi0.at(y).apply(&ra.kernel_generators[h]);
            images1.push(solve(rb.d.at(y), &target)?);
        }
        Ok(ra.p1.map_to(q, rb.p1.rep(), &images1))
    }

    /// The Yoneda product `outer ∘ inner`, first `inner`, then `outer`.
    pub fn compose(&self, outer: &Element, inner: &Element) -> Result<Element> {
        if inner.tgt != outer.src {
            return Err(Error::ShapeMismatch);
        }
        let (src, tgt) = (inner.src, outer.tgt);
        let degree = outer.degree + inner.degree;
        let map = match (outer.degree, inner.degree) {
            (0, 0) | (0, 1) => outer.map.compose(&inner.map),
            (1, 0) => outer.map.compose(&self.lift_to_syzygy(inner)?),
            _ => return Err(Error::DegreeTooHigh { degree }),
        };
        Ok(Element { src, tgt, degree, map })
    }
}
