//! Generators and order of `N(S;J)`: the normalizer of `S` that preserves every
//! layer `MJ^i` of the radical series.

use super::{gl_order, GeneratorSet, Tag};
use crate::algdecomp::{idempotent_equivalent, LayerData, SimpleFactor, Wedderburn};
use crate::algebra::{flat_len, BlockDiag, MatAlgebra};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::matlin::{nullspace, right_kernel, Mat, Subspace};
use num_bigint::BigUint;
use rand::Rng;

/// `GL_d(Δ)` inside `eSe`, embedded as units `x + (1 − e)`: a scalar `diag(ω, 1, …)`,
/// and for `d ≥ 2` the transvection `1 + ε_12` and the cyclic permutation.
pub fn simple_unit_generators(alg: &MatAlgebra, fac: &SimpleFactor) -> Vec<BlockDiag> {
    let rest = alg.one().sub(&fac.e);
    let mut diag = fac.omega.clone();
    for i in 1..fac.d {
        diag = diag.add(fac.eps(i));
    }
    let mut out = vec![diag.add(&rest)];
    if fac.d >= 2 {
        out.push(alg.one().add(&fac.units[0][1]));
        let mut cyc = alg.zero();
        for i in 0..fac.d {
            cyc = cyc.add(&fac.units[i][(i + 1) % fac.d]);
        }
        out.push(cyc.add(&rest));
    }
    out.retain(|g| !g.is_identity());
    out
}

/// `1 + z` for `z` running over a `GF(p)`-basis of `J` adapted to `J ⊇ J² ⊇ …`.
pub fn unipotent_elements(alg: &MatAlgebra, jpow: &[Subspace]) -> Vec<BlockDiag> {
    let f = alg.field();
    let k = f.degree();
    let gen = if k == 1 { 1 } else { f.p() };
    let mut out = Vec::new();
    for (i, ji) in jpow.iter().enumerate().rev() {
        let mut ech = crate::matlin::Echelon::new(f, ji.ambient());
        if let Some(next) = jpow.get(i + 1) {
            for v in next.basis_vecs() {
                ech.insert(v);
            }
        }
        for z in alg.elements_of(ji) {
            if !ech.insert(z.flatten()) {
                continue;
            }
            let mut w = 1u32;
            for _ in 0..k {
                out.push(alg.one().add(&z.scale(w)));
                w = f.mul_e(w, gen);
            }
        }
    }
    out
}

/// `|A^×| = q^{dim J} · Π |GL_d(q^m)|`.
pub fn units_order(w: &Wedderburn) -> BigUint {
    let q = BigUint::from(w.alg.field().q());
    let mut o = q.pow(w.j.dim() as u32);
    for fac in &w.factors {
        o *= gl_order(fac.d, &q.pow(fac.m as u32));
    }
    o
}

/// `B = {φ : φs = sφ for s ∈ S, and MJ^i·φ ⊆ MJ^i}`, the `S`-endomorphisms of the layered module.
pub fn layered_centralizer(w: &Wedderburn, lay: &LayerData) -> MatAlgebra {
    let alg = &w.alg;
    let f = alg.field();
    let dims = alg.dims().to_vec();
    let len = flat_len(&dims);
    let offs: Vec<usize> = dims.iter().scan(0, |acc, n| {
        let o = *acc;
        *acc += n * n;
        Some(o)
    }).collect();
    let mut cols: Vec<Vec<(usize, Elem)>> = Vec::new();
    for s in alg.elements_of(&w.s) {
        for (b, &n) in dims.iter().enumerate() {
            let sb = &s.0[b];
            for r in 0..n {
                for c in 0..n {
                    // (φs − sφ)[r][c]
                    let mut eq = Vec::new();
                    for t in 0..n {
                        let x = sb.get(t, c);
                        if x != 0 {
                            eq.push((offs[b] + r * n + t, x));
                        }
                        let y = sb.get(r, t);
                        if y != 0 {
                            eq.push((offs[b] + t * n + c, f.neg_e(y)));
                        }
                    }
                    cols.push(eq);
                }
            }
        }
    }
    for (b, &n) in dims.iter().enumerate() {
        for l in lay.series[b].iter().skip(1) {
            if l.dim() == 0 || l.dim() == n {
                continue;
            }
            let ann = right_kernel(l.basis());
            for v in l.basis_vecs() {
                for y in &ann {
                    // Σ_{r,c} v_r φ[r][c] y_c = 0
                    let mut eq = Vec::new();
                    for r in 0..n {
                        for c in 0..n {
                            let x = f.mul_e(v[r], y[c]);
                            if x != 0 {
                                eq.push((offs[b] + r * n + c, x));
                            }
                        }
                    }
                    cols.push(eq);
                }
            }
        }
    }
    let mut sys = Mat::zero(f, len, cols.len());
    for (j, eq) in cols.iter().enumerate() {
        for &(i, x) in eq {
            let old = sys.get(i, j);
            sys.set(i, j, f.add_e(old, x));
        }
    }
    MatAlgebra::from_space(f, &dims, nullspace(&sys))
}

/// The `q`-power Frobenius of `Δ_e` realized on the adapted basis (identity off `e`).
fn frobenius_map(w: &Wedderburn, lay: &LayerData, e: usize) -> Result<BlockDiag> {
    let f = w.alg.field();
    let fac = &w.factors[e];
    let q = f.q() as u64;
    let frob: Vec<BlockDiag> = fac.rho_powers.iter().map(|x| x.pow(q)).collect();
    let mut blocks = Vec::new();
    for (b, adapted) in lay.adapted.iter().enumerate() {
        let mut src = Vec::new();
        let mut dst = Vec::new();
        for av in adapted {
            src.push(av.v.clone());
            if av.factor == e {
                let c = &lay.gens[e][b][av.layer][av.t];
                let y = frob[av.l].0[b].vec_mul(c);
                dst.push(fac.units[0][av.j].0[b].vec_mul(&y));
            } else {
                dst.push(av.v.clone());
            }
        }
        let bm = Mat::from_rows(f, &src);
        blocks.push(&bm.inverse().ok_or(Error::Singular)? * &Mat::from_rows(f, &dst));
    }
    Ok(BlockDiag(blocks))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i))
}

/// Generators of `N(S;J)` with its order `|S^×|·|B^×|/|Z(S)^×|·Π m_e·Π r_f!`.
pub fn nsj_generators<R: Rng + ?Sized>(w: &Wedderburn, lay: &LayerData, rng: &mut R) -> Result<GeneratorSet> {
    let alg = &w.alg;
    let f = alg.field();
    let q = BigUint::from(f.q());
    let mut gs = GeneratorSet::new(alg.dims());

    let mut s_units = BigUint::from(1u32);
    let mut z_units = BigUint::from(1u32);
    let mut galois = BigUint::from(1u32);
    for fac in &w.factors {
        let qm = q.pow(fac.m as u32);
        s_units *= gl_order(fac.d, &qm);
        z_units *= &qm - 1u32;
        galois *= BigUint::from(fac.m);
        for g in simple_unit_generators(alg, fac) {
            gs.push(g, Tag::Torus);
        }
    }

    let bal = layered_centralizer(w, lay);
    let bw = Wedderburn::decompose(&bal, None, rng)?;
    for g in unipotent_elements(&bal, &bw.jpow) {
        gs.push(g, Tag::Unipotent);
    }
    for fac in &bw.factors {
        for g in simple_unit_generators(&bal, fac) {
            gs.push(g, Tag::TensorFactor);
        }
    }
    let b_units = units_order(&bw);

    for (e, fac) in w.factors.iter().enumerate() {
        if fac.m > 1 {
            gs.push(frobenius_map(w, lay, e)?, Tag::Semilinear);
        }
    }

    // Equivalence classes of factors: same (d, m) and the same layer multiplicities.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (e, fac) in w.factors.iter().enumerate() {
        let key = |i: usize| (w.factors[i].d, w.factors[i].m, &lay.mult[i]);
        match classes.iter_mut().find(|c| key(c[0]) == (fac.d, fac.m, &lay.mult[e])) {
            Some(c) => c.push(e),
            None => classes.push(vec![e]),
        }
    }
    let mut perms = BigUint::from(1u32);
    for c in &classes {
        perms *= factorial(c.len());
        for pair in c.windows(2) {
            let g = idempotent_equivalent(w, lay, pair[0], pair[1], rng)?.ok_or(Error::Input("equivalent factors without a swap".into()))?;
            gs.push(g, Tag::Swap);
        }
    }
    gs.order = Some(s_units * b_units * galois * perms / z_units);
    Ok(gs)
}
