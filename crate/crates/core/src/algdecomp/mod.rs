//! Structure theory of matrix algebras: radical, Wedderburn complement, simple
//! factors and the layers of the radical series.

mod complement;
mod fieldiso;
mod idempotents;
mod layers;
mod radical;
mod simple;

pub use complement::wedderburn_complement;
pub use fieldiso::{field_isomorphism, FieldIso};
pub use idempotents::{central_primitive_idempotents, primitive_idempotent};
pub use layers::{radical_series_layers, AdaptedVec, LayerData};
pub use radical::radical;
pub use simple::{simple_params, SimpleFactor};

use crate::algebra::{BlockDiag, MatAlgebra};
use crate::error::{Error, Result};
use crate::matlin::{elem_to_json, Mat, Subspace};
use rand::Rng;
use serde_json::{json, Value};

/// `A = J ⊕ S` together with the simple factors of `S`.
#[derive(Clone, Debug)]
pub struct Wedderburn {
    pub alg: MatAlgebra,
    pub j: Subspace,
    pub s: Subspace,
    /// `J^1, …, J^c` (all nonzero).
    pub jpow: Vec<Subspace>,
    pub factors: Vec<SimpleFactor>,
}

pub type StarFn<'a> = &'a dyn Fn(&BlockDiag) -> BlockDiag;

impl Wedderburn {
    pub fn decompose<R: Rng + ?Sized>(alg: &MatAlgebra, star: Option<StarFn>, rng: &mut R) -> Result<Wedderburn> {
        let j = radical(alg);
        let jpow = alg.powers(&j).ok_or(Error::Input("radical is not nilpotent".into()))?;
        let s = wedderburn_complement(alg, &j, star)?;
        let idem = central_primitive_idempotents(alg, &s, rng)?;
        let factors = idem.iter().map(|e| simple_params(alg, &s, e, rng)).collect::<Result<Vec<_>>>()?;
        Ok(Wedderburn { alg: alg.clone(), j, s, jpow, factors })
    }

    pub fn c(&self) -> usize {
        self.jpow.len()
    }

    pub fn idempotents(&self) -> Vec<BlockDiag> {
        self.factors.iter().map(|x| x.e.clone()).collect()
    }

    pub fn layers(&self) -> LayerData {
        radical_series_layers(&self.alg, &self.jpow, &self.factors)
    }

    /// Violations of the decomposition invariants (empty when all hold).
    pub fn check(&self) -> Vec<String> {
        let alg = &self.alg;
        let f = alg.field();
        let mut bad = Vec::new();
        if self.j.dim() + self.s.dim() != alg.dim() || !self.j.sum(&self.s).contains_space(alg.space()) {
            bad.push("A ≠ J ⊕ S".to_string());
        }
        let sa = MatAlgebra::from_space(f, alg.dims(), self.s.clone());
        if !sa.is_closed() || !sa.contains(&alg.one()) {
            bad.push("S is not a unital subalgebra".into());
        }
        if radical(&sa).dim() != 0 {
            bad.push("S is not semisimple".into());
        }
        if let Some(last) = self.jpow.last() {
            if alg.product(last, &self.j).dim() != 0 {
                bad.push("J^{c+1} ≠ 0".into());
            }
        }
        let es = self.idempotents();
        let mut total = alg.zero();
        let sb = alg.elements_of(&self.s);
        for (i, e) in es.iter().enumerate() {
            total = total.add(e);
            for (k, e2) in es.iter().enumerate() {
                let want = if i == k { e.clone() } else { alg.zero() };
                if e.mul(e2) != want {
                    bad.push(format!("idempotents {i},{k} not orthogonal"));
                }
            }
            if sb.iter().any(|x| x.mul(e) != e.mul(x)) {
                bad.push(format!("idempotent {i} not central"));
            }
        }
        if total != alg.one() {
            bad.push("idempotents do not sum to 1".into());
        }
        let sum: usize = self.factors.iter().map(|x| x.d * x.d * x.m).sum();
        if sum != self.s.dim() {
            bad.push("Σ d²m ≠ dim S".into());
        }
        for (i, fac) in self.factors.iter().enumerate() {
            for x in alg.elements_of(&idempotents::sandwich(alg, &fac.e, &self.s, &fac.e)) {
                if fac.from_matrix(alg, &fac.to_matrix(&x)) != x {
                    bad.push(format!("factor {i}: matrix-unit round trip fails"));
                    break;
                }
            }
        }
        let lay = self.layers();
        for (b, &n) in alg.dims().iter().enumerate() {
            let tot: usize = lay.x[b].iter().map(|x| x.dim()).sum();
            if tot != n {
                bad.push(format!("block {b}: layers do not fill the module"));
            }
        }
        bad
    }

    pub fn to_json(&self) -> Value {
        let f = self.alg.field();
        let vecs = |s: &Subspace| -> Value {
            Value::Array(s.basis_vecs().iter().map(|v| Value::Array(v.iter().map(|x| elem_to_json(f, *x)).collect())).collect())
        };
        let bd = |x: &BlockDiag| -> Value { Value::Array(x.0.iter().map(Mat::to_json).collect()) };
        json!({
            "dims": self.alg.dims(),
            "dim": self.alg.dim(),
            "radical": vecs(&self.j),
            "complement": vecs(&self.s),
            "c": self.c(),
            "factors": self.factors.iter().map(|x| json!({
                "d": x.d,
                "m": x.m,
                "idempotent": bd(&x.e),
                "rho": bd(&x.rho),
            })).collect::<Vec<_>>(),
        })
    }
}

/// An invertible `g` with `g⁻¹·e·g = e'` that normalizes `S`, preserves every `MJ^i`
/// and fixes the other factors; `None` when the factors are not equivalent.
pub fn idempotent_equivalent<R: Rng + ?Sized>(
    w: &Wedderburn,
    lay: &LayerData,
    e: usize,
    e2: usize,
    rng: &mut R,
) -> Result<Option<BlockDiag>> {
    let alg = &w.alg;
    let f = alg.field();
    if e == e2 {
        return Ok(Some(alg.one()));
    }
    let (a, b) = (&w.factors[e], &w.factors[e2]);
    if a.d != b.d || a.m != b.m || lay.mult[e] != lay.mult[e2] {
        return Ok(None);
    }
    let da = alg.span_of(&a.rho_powers);
    let db = alg.span_of(&b.rho_powers);
    let iso = field_isomorphism(alg, &da, &db, Some(&a.rho), rng)?;
    let mut blocks = Vec::with_capacity(lay.dims.len());
    for (bi, &n) in lay.dims.iter().enumerate() {
        let mut src = Vec::with_capacity(n);
        let mut dst = Vec::with_capacity(n);
        for av in &lay.adapted[bi] {
            src.push(av.v.clone());
            let img = if av.factor == e {
                let c = &lay.gens[e2][bi][av.layer][av.t];
                let d = iso.apply(&a.rho_powers[av.l])?;
                b.units[0][av.j].0[bi].vec_mul(&d.0[bi].vec_mul(c))
            } else if av.factor == e2 {
                let c = &lay.gens[e][bi][av.layer][av.t];
                let d = iso.apply_inverse(&b.rho_powers[av.l])?;
                a.units[0][av.j].0[bi].vec_mul(&d.0[bi].vec_mul(c))
            } else {
                av.v.clone()
            };
            dst.push(img);
        }
        let bm = Mat::from_rows(f, &src);
        let g = &bm.inverse().ok_or(Error::Singular)? * &Mat::from_rows(f, &dst);
        blocks.push(g);
    }
    Ok(Some(BlockDiag(blocks)))
}

#[cfg(test)]
mod tests;
