//! The adjoint ring `Adj(∘) = {(X, Y) : X·M_l = M_l·Y}` and its involution.

use crate::algebra::{BlockDiag, MatAlgebra};
use crate::bimap::Bimap;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Gf};
use crate::matlin::{nullspace, Mat};
use serde_json::{json, Value};

/// A subalgebra of `M_a × M_b` with componentwise product, given by a basis of pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPair {
    field: Gf,
    a: usize,
    b: usize,
    pairs: Vec<(Mat, Mat)>,
    star: Option<Involution>,
}

/// A linear map on an algebra's basis coordinates: row `i` holds the coordinates of `basis_i*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    pub matrix: Mat,
}

impl AlgebraPair {
    pub fn new(field: &Gf, a: usize, b: usize, pairs: Vec<(Mat, Mat)>) -> Result<AlgebraPair> {
        for (x, y) in &pairs {
            if (x.rows(), x.cols(), y.rows(), y.cols()) != (a, a, b, b) {
                return Err(Error::DimensionMismatch("pair shape".into()));
            }
        }
        Ok(AlgebraPair { field: field.clone(), a, b, pairs, star: None })
    }

    /// Canonical form: the RREF basis of the span.
    pub fn from_algebra(alg: &MatAlgebra) -> AlgebraPair {
        let d = alg.dims();
        assert_eq!(d.len(), 2, "pair algebra has two blocks");
        let pairs = alg.basis().into_iter().map(|x| (x.0[0].clone(), x.0[1].clone())).collect();
        AlgebraPair { field: alg.field().clone(), a: d[0], b: d[1], pairs, star: None }
    }

    /// Unital closure of the given pairs.
    pub fn envelope(field: &Gf, a: usize, b: usize, gens: &[(Mat, Mat)]) -> AlgebraPair {
        let g: Vec<BlockDiag> = gens.iter().map(|(x, y)| BlockDiag(vec![x.clone(), y.clone()])).collect();
        AlgebraPair::from_algebra(&MatAlgebra::envelope(field, &[a, b], &g))
    }

    pub fn to_algebra(&self) -> MatAlgebra {
        let els: Vec<BlockDiag> = self.pairs.iter().map(|(x, y)| BlockDiag(vec![x.clone(), y.clone()])).collect();
        MatAlgebra::span(&self.field, &[self.a, self.b], &els)
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }
    pub fn a(&self) -> usize {
        self.a
    }
    pub fn b(&self) -> usize {
        self.b
    }
    pub fn dim(&self) -> usize {
        self.pairs.len()
    }
    pub fn pairs(&self) -> &[(Mat, Mat)] {
        &self.pairs
    }
    pub fn star(&self) -> Option<&Involution> {
        self.star.as_ref()
    }

    pub fn with_star(mut self, star: Involution) -> AlgebraPair {
        self.star = Some(star);
        self
    }

    pub fn is_unital(&self) -> bool {
        self.to_algebra().is_unital()
    }

    /// Subspace containment of spans.
    pub fn is_subalgebra_of(&self, o: &AlgebraPair) -> bool {
        o.to_algebra().space().contains_space(self.to_algebra().space())
    }

    /// Same span.
    pub fn same_span(&self, o: &AlgebraPair) -> bool {
        self.to_algebra().space() == o.to_algebra().space()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "field": serde_json::to_value(self.field.spec()).unwrap(),
            "a": self.a,
            "b": self.b,
            "pairs": self.pairs.iter().map(|(x, y)| json!({"X": x.to_json(), "Y": y.to_json()})).collect::<Vec<_>>(),
        });
        if let Some(s) = &self.star {
            v["star"] = s.matrix.to_json();
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<AlgebraPair> {
        let spec: FieldSpec =
            serde_json::from_value(v["field"].clone()).map_err(|e| Error::Input(format!("field: {e}")))?;
        let f = Gf::from_spec(&spec)?;
        let dim = |k: &str| v[k].as_u64().map(|x| x as usize).ok_or_else(|| Error::Input(k.into()));
        let (a, b) = (dim("a")?, dim("b")?);
        let mut pairs = Vec::new();
        for p in v["pairs"].as_array().ok_or_else(|| Error::Input("pairs".into()))? {
            pairs.push((Mat::from_json(&f, &p["X"])?, Mat::from_json(&f, &p["Y"])?));
        }
        let mut alg = AlgebraPair::new(&f, a, b, pairs)?;
        if !v["star"].is_null() {
            alg.star = Some(Involution { matrix: Mat::from_json(&f, &v["star"])? });
        }
        Ok(alg)
    }
}

/// `{(X, Y) : X·M_l = M_l·Y for all l}`, as the RREF basis of the solution space
/// (unknowns ordered `vec X` then `vec Y`).
pub fn adjoint_algebra(bm: &Bimap) -> AlgebraPair {
    let f = bm.field();
    let (a, b) = (bm.a(), bm.b());
    let w = bm.w();
    let mut sys = Mat::zero(f, a * a + b * b, a * b * w);
    for (l, m) in bm.slices().iter().enumerate() {
        for i in 0..a {
            for j in 0..b {
                let col = l * a * b + i * b + j;
                // (X·M)_{ij} = Σ_k X_{ik} M_{kj}
                for k in 0..a {
                    sys.set(i * a + k, col, m.get(k, j));
                }
                // −(M·Y)_{ij} = −Σ_k M_{ik} Y_{kj}
                for k in 0..b {
                    let r = a * a + k * b + j;
                    sys.set(r, col, f.neg_e(m.get(i, k)));
                }
            }
        }
    }
    let ns = nullspace(&sys);
    let pairs = ns
        .basis_vecs()
        .into_iter()
        .map(|v| (Mat::from_vec(f, a, a, v[..a * a].to_vec()), Mat::from_vec(f, b, b, v[a * a..].to_vec())))
        .collect();
    AlgebraPair { field: f.clone(), a, b, pairs, star: None }
}

/// The involution `(X, Y) ↦ (Yᵀ, Xᵀ)` on `Adj(∘)` for a nondegenerate symmetric or
/// alternating bimap, as a matrix on basis coordinates.
pub fn star_involution(bm: &Bimap) -> Result<AlgebraPair> {
    if bm.a() != bm.b() {
        return Err(Error::NotSquare);
    }
    if !bm.is_symmetric() && !bm.is_alternating() {
        return Err(Error::NotSymmetricOrAlternating);
    }
    if !bm.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let adj = adjoint_algebra(bm);
    let alg = adj.to_algebra();
    let f = bm.field();
    let d = adj.dim();
    let mut m = Mat::zero(f, d, d);
    for (i, (x, y)) in adj.pairs.iter().enumerate() {
        let img = BlockDiag(vec![y.transpose(), x.transpose()]).flatten();
        let c = alg.space().coords(&img).ok_or(Error::NotAdjoint)?;
        m.row_mut(i).copy_from_slice(&c);
    }
    Ok(adj.with_star(Involution { matrix: m }))
}

impl Involution {
    /// Apply to an element given by basis coordinates.
    pub fn apply_coords(&self, c: &[u32]) -> Vec<u32> {
        self.matrix.vec_mul(c)
    }
}

/// An algebra on a single space with an involution, as used by the `*` machinery.
#[derive(Clone, Debug)]
pub struct StarAlgebra {
    pub alg: MatAlgebra,
    /// Row `i`: coordinates of `basis_i*` in the canonical basis of `alg`.
    pub star: Mat,
}

impl StarAlgebra {
    /// From a pair algebra with involution, via the faithful projection onto the first coordinate.
    pub fn from_pair(p: &AlgebraPair) -> Result<StarAlgebra> {
        let inv = p.star().ok_or(Error::Input("algebra has no involution".into()))?;
        let f = p.field();
        let xs: Vec<BlockDiag> = p.pairs().iter().map(|(x, _)| BlockDiag(vec![x.clone()])).collect();
        let alg = MatAlgebra::span(f, &[p.a()], &xs);
        if alg.dim() != p.dim() {
            return Err(Error::Degenerate);
        }
        // Transport the involution from pair coordinates to the canonical basis of `alg`.
        let to_canon = Mat::from_rows(
            f,
            &xs.iter().map(|x| alg.space().coords(&x.flatten()).unwrap()).collect::<Vec<_>>(),
        );
        let from_canon = to_canon.inverse().ok_or(Error::Degenerate)?;
        let star = &(&from_canon * &inv.matrix) * &to_canon;
        Ok(StarAlgebra { alg, star })
    }

    /// From an anti-automorphism given pointwise; `None` when `h` leaves the algebra.
    pub fn from_fn(alg: &MatAlgebra, h: impl Fn(&BlockDiag) -> BlockDiag) -> Option<StarAlgebra> {
        let rows = alg.basis().iter().map(|x| alg.space().coords(&h(x).flatten())).collect::<Option<Vec<_>>>()?;
        Some(StarAlgebra { alg: alg.clone(), star: Mat::from_rows(alg.field(), &rows) })
    }

    pub fn coords(&self, x: &BlockDiag) -> Option<Vec<u32>> {
        self.alg.space().coords(&x.flatten())
    }

    pub fn from_coords(&self, c: &[u32]) -> BlockDiag {
        let v = self.alg.space().basis().vec_mul(c);
        self.alg.unflatten(&v)
    }

    /// `x*` for `x ∈ alg`.
    pub fn apply(&self, x: &BlockDiag) -> BlockDiag {
        let c = self.coords(x).expect("element of the algebra");
        self.from_coords(&self.star.vec_mul(&c))
    }
}

#[cfg(test)]
mod tests;
