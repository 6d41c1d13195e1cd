use crate::algebra::{BlockDiag, MatAlgebra};
use crate::error::{Error, Result};
use crate::field::{poly_factor, Elem, Poly};
use crate::matlin::Subspace;
use rand::Rng;

pub(crate) const BUDGET: usize = 64;

/// `span{l·b·r : b ∈ basis of s}`.
pub(crate) fn sandwich(alg: &MatAlgebra, l: &BlockDiag, s: &Subspace, r: &BlockDiag) -> Subspace {
    let xs: Vec<BlockDiag> = alg.elements_of(s).iter().map(|b| l.mul(b).mul(r)).collect();
    alg.span_of(&xs)
}

/// Idempotents `u_j(x)` (unit `e`) for the coprime factorization `g = Π g_j`.
fn crt_idempotents(alg: &MatAlgebra, x: &BlockDiag, e: &BlockDiag, g: &Poly<Elem>, parts: &[Poly<Elem>]) -> Vec<BlockDiag> {
    let f = alg.field();
    parts
        .iter()
        .map(|pj| {
            let h = g.divrem(f, pj).0;
            let (_, s, _) = h.rem(f, pj).xgcd(f, pj);
            let u = h.mul(f, &s).rem(f, g);
            alg.eval_rel(&u, x, e)
        })
        .collect()
}

/// Factor `g` into coprime prime-power parts.
fn primary_parts<R: Rng + ?Sized>(alg: &MatAlgebra, g: &Poly<Elem>, rng: &mut R) -> Vec<Poly<Elem>> {
    let f = alg.field();
    poly_factor(f, g, rng)
        .into_iter()
        .map(|(p, k)| {
            let mut acc = Poly::one(f);
            for _ in 0..k {
                acc = acc.mul(f, &p);
            }
            acc
        })
        .collect()
}

/// Central primitive idempotents of a semisimple subalgebra `s`, sorted canonically.
pub fn central_primitive_idempotents<R: Rng + ?Sized>(
    alg: &MatAlgebra,
    s: &Subspace,
    rng: &mut R,
) -> Result<Vec<BlockDiag>> {
    let sb = alg.elements_of(s);
    let z = alg.centralizer_in(s, &sb);
    let mut work = vec![alg.one()];
    let mut done = Vec::new();
    while let Some(e) = work.pop() {
        let ze = sandwich(alg, &e, &z, &alg.one());
        if ze.dim() <= 1 {
            done.push(e);
            continue;
        }
        let mut split = false;
        for _ in 0..BUDGET {
            let x = alg.random_element(&ze, rng);
            let g = alg.minpoly_rel(&x, &e);
            if g.degree() == Some(ze.dim()) && crate::field::is_irreducible(alg.field(), &g) {
                done.push(e.clone());
                split = true;
                break;
            }
            let parts = primary_parts(alg, &g, rng);
            if parts.len() > 1 {
                work.extend(crt_idempotents(alg, &x, &e, &g, &parts));
                split = true;
                break;
            }
        }
        if !split {
            return Err(Error::RandomnessExhausted("central idempotent splitting"));
        }
    }
    done.sort();
    Ok(done)
}

/// A primitive idempotent `ε ≤ e` of the simple algebra `eSe`, given the degree `m` of its center.
pub fn primitive_idempotent<R: Rng + ?Sized>(
    alg: &MatAlgebra,
    s: &Subspace,
    e: &BlockDiag,
    m: usize,
    rng: &mut R,
) -> Result<BlockDiag> {
    let mut eps = e.clone();
    let mut fails = 0;
    loop {
        let local = sandwich(alg, &eps, s, &eps);
        if local.dim() <= m {
            return Ok(eps);
        }
        let x = alg.random_element(&local, rng);
        let g = alg.minpoly_rel(&x, &eps);
        let parts = primary_parts(alg, &g, rng);
        if parts.len() > 1 {
            eps = crt_idempotents(alg, &x, &eps, &g, &parts).swap_remove(0);
            fails = 0;
        } else {
            fails += 1;
            if fails >= BUDGET {
                return Err(Error::RandomnessExhausted("primitive idempotent"));
            }
        }
    }
}
