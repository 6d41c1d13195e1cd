//! Isomorphisms between finite fields presented as matrix algebras.

use crate::algebra::{BlockDiag, MatAlgebra};
use crate::error::{Error, Result};
use crate::field::{Elem, Poly};
use crate::matlin::{algebra_unit, field_generator, root_in_algebra, solve_vec, Mat, Subspace};
use rand::Rng;

/// The isomorphism `ρ ↦ τ` extended linearly over the base field.
#[derive(Clone, Debug)]
pub struct FieldIso {
    /// `ρ^0, …, ρ^{m-1}` in the source.
    pub src_powers: Vec<BlockDiag>,
    /// `τ^0, …, τ^{m-1}` in the target.
    pub dst_powers: Vec<BlockDiag>,
    pub minpoly: Poly<Elem>,
}

impl FieldIso {
    pub fn degree(&self) -> usize {
        self.src_powers.len()
    }

    pub fn rho(&self) -> &BlockDiag {
        self.src_powers.get(1).unwrap_or(&self.src_powers[0])
    }

    pub fn tau(&self) -> &BlockDiag {
        self.dst_powers.get(1).unwrap_or(&self.dst_powers[0])
    }

    pub fn apply(&self, x: &BlockDiag) -> Result<BlockDiag> {
        transport(&self.src_powers, &self.dst_powers, x)
    }

    pub fn apply_inverse(&self, y: &BlockDiag) -> Result<BlockDiag> {
        transport(&self.dst_powers, &self.src_powers, y)
    }
}

fn transport(from: &[BlockDiag], to: &[BlockDiag], x: &BlockDiag) -> Result<BlockDiag> {
    let f = x.field();
    let rows: Vec<Vec<Elem>> = from.iter().map(|p| p.flatten()).collect();
    let c = solve_vec(&Mat::from_rows(f, &rows), &x.flatten()).ok_or(Error::Input("element outside field".into()))?;
    let mut acc = BlockDiag::zero(f, &x.dims());
    for (ci, p) in c.iter().zip(to) {
        acc = acc.add(&p.scale(*ci));
    }
    Ok(acc)
}

fn powers(x: &BlockDiag, unit: &BlockDiag, m: usize) -> Vec<BlockDiag> {
    let mut out = vec![unit.clone()];
    for _ in 1..m {
        let nxt = out.last().unwrap().mul(x);
        out.push(nxt);
    }
    out
}

/// An explicit isomorphism between two subalgebras of `alg` that are fields.
/// `rho`, when given, fixes the source generator.
pub fn field_isomorphism<R: Rng + ?Sized>(
    alg: &MatAlgebra,
    src: &Subspace,
    dst: &Subspace,
    rho: Option<&BlockDiag>,
    rng: &mut R,
) -> Result<FieldIso> {
    if src.dim() != dst.dim() {
        return Err(Error::DegreeMismatch(src.dim(), dst.dim()));
    }
    let dims = alg.dims().to_vec();
    let sb: Vec<Mat> = alg.elements_of(src).iter().map(|x| x.to_mat()).collect();
    let db: Vec<Mat> = alg.elements_of(dst).iter().map(|x| x.to_mat()).collect();
    let su = algebra_unit(&sb).ok_or(Error::Input("source is not unital".into()))?;
    let du = algebra_unit(&db).ok_or(Error::Input("target is not unital".into()))?;
    let (rho, g) = match rho {
        Some(r) => (r.clone(), alg.minpoly_rel(r, &BlockDiag::from_mat(&su, &dims))),
        None => {
            let (r, g) = field_generator(&sb, &su, rng)?;
            (BlockDiag::from_mat(&r, &dims), g)
        }
    };
    let m = src.dim();
    if g.degree() != Some(m) {
        return Err(Error::Input("source element does not generate".into()));
    }
    let tau = BlockDiag::from_mat(&root_in_algebra(&g, &db, rng)?, &dims);
    Ok(FieldIso {
        src_powers: powers(&rho, &BlockDiag::from_mat(&su, &dims), m),
        dst_powers: powers(&tau, &BlockDiag::from_mat(&du, &dims), m),
        minpoly: g,
    })
}
