//! Tensor and exterior products over a subring `S ≤ End(U) × End(V)`, and the
//! Galois connection between subrings and bimaps.

use crate::adjoint::{adjoint_algebra, AlgebraPair};
use crate::bimap::Bimap;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::matlin::{Mat, Subspace};
use serde_json::{json, Value};

/// `U ⊗_S V = k^{ab} / R_S` with its quotient bimap `⊗_S`.
#[derive(Clone, Debug)]
pub struct TensorPresentation {
    pub s: AlgebraPair,
    pub relations: Subspace,
    pub bimap: Bimap,
}

impl TensorPresentation {
    pub fn dim(&self) -> usize {
        self.bimap.w()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim(),
            "relations_dim": self.relations.dim(),
            "bimap": self.bimap.to_json(),
        })
    }
}

/// `(e_i X)⊗e_j − e_i⊗(e_j Yᵀ)` for every basis pair `(X, Y)` and every `i, j`.
fn relation_rows(s: &AlgebraPair) -> Vec<Vec<u32>> {
    let f = s.field();
    let (a, b) = (s.a(), s.b());
    let mut rows = Vec::with_capacity(s.dim() * a * b);
    for (x, y) in s.pairs() {
        for i in 0..a {
            for j in 0..b {
                let mut v = vec![0u32; a * b];
                for k in 0..a {
                    v[k * b + j] = f.add_e(v[k * b + j], x.get(i, k));
                }
                for k in 0..b {
                    v[i * b + k] = f.sub_e(v[i * b + k], y.get(k, j));
                }
                rows.push(v);
            }
        }
    }
    rows
}

pub fn tensor_over(s: &AlgebraPair) -> TensorPresentation {
    let f = s.field();
    let relations = Subspace::from_rows(f, s.a() * s.b(), &relation_rows(s));
    let bimap = Bimap::regular_mod(f, s.a(), s.b(), &relations);
    TensorPresentation { s: s.clone(), relations, bimap }
}

/// `U ∧^-_A U` (quotient by `v⊗v`) or `U ∧^+_A U` (quotient by `u⊗v − v⊗u`).
pub fn exterior_over(s: &AlgebraPair, alternating: bool) -> Result<Bimap> {
    let f = s.field();
    if s.a() != s.b() {
        return Err(Error::NotSquare);
    }
    if !alternating && f.characteristic() == 2 {
        return Err(Error::CharTwo);
    }
    let n = s.a();
    let mut rows = relation_rows(s);
    for i in 0..n {
        for j in i..n {
            let mut v = vec![0u32; n * n];
            if alternating {
                v[i * n + j] = 1;
                v[j * n + i] = f.add_e(v[j * n + i], if i == j { 0 } else { 1 });
            } else if i != j {
                v[i * n + j] = 1;
                v[j * n + i] = f.neg_e(1);
            }
            rows.push(v);
        }
    }
    let rel = Subspace::from_rows(f, n * n, &rows);
    Ok(Bimap::regular_mod(f, n, n, &rel))
}

fn is_adjoint(bm: &Bimap, s: &AlgebraPair) -> bool {
    s.pairs().iter().all(|(x, y)| bm.slices().iter().all(|m| &(x * m) == &(m * y)))
}

/// `ĉirc: U⊗_S V → W` on the quotient basis of `tensor_over(s)`, and its kernel.
pub fn induced_map(bm: &Bimap, s: &AlgebraPair) -> Result<(Mat, Subspace)> {
    if s.field() != bm.field() || s.a() != bm.a() || s.b() != bm.b() {
        return Err(Error::DimensionMismatch("subring does not act on the bimap's spaces".into()));
    }
    if !is_adjoint(bm, s) {
        return Err(Error::NotAdjoint);
    }
    let t = tensor_over(s);
    let hat = bm.circ_hat();
    let free = t.relations.free_columns();
    let rows: Vec<Vec<u32>> = free.iter().map(|&c| hat.row(c).to_vec()).collect();
    let m = if rows.is_empty() { Mat::zero(bm.field(), 0, bm.w()) } else { Mat::from_rows(bm.field(), &rows) };
    let ker = crate::matlin::nullspace(&m);
    Ok((m, ker))
}

/// Whether `U⊗_{Adj(∘)} V → W` is an isomorphism.
pub fn is_tensor_product(bm: &Bimap) -> bool {
    let adj = adjoint_algebra(bm);
    match induced_map(bm, &adj) {
        Ok((m, _)) => m.rows() == m.cols() && (m.rows() == 0 || m.is_invertible()),
        Err(_) => false,
    }
}

/// `Adj(⊗_S)`.
pub fn galois_closure(s: &AlgebraPair) -> AlgebraPair {
    adjoint_algebra(&tensor_over(s).bimap)
}

#[cfg(test)]
mod tests;
