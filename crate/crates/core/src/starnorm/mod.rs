//! Normalizers of algebras with involution: `N*(A) = ⟨z + √(1+z²) : z ∈ J⁻, N*(S) ∩ N*(A)⟩`.
//! Odd characteristic only.

use crate::adjoint::StarAlgebra;
use crate::algdecomp::{central_primitive_idempotents, wedderburn_complement, Wedderburn};
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::error::{Error, Result};
use crate::group::{closure, generators_of, orbit_stabilizer, Caps};
use crate::matlin::{Mat, Subspace};
use crate::normalizer::{nsj_generators, stabilize_subspace, GeneratorSet, Tag};
use num_bigint::BigUint;
use rand::Rng;
use std::collections::HashSet;

fn require_odd(sa: &StarAlgebra) -> Result<()> {
    if sa.alg.field().p() == 2 {
        Err(Error::CharTwo)
    } else {
        Ok(())
    }
}

/// A complement `S` with `A = J ⊕ S` and `S* = S`.
pub fn star_invariant_complement(sa: &StarAlgebra, j: &Subspace) -> Result<Subspace> {
    require_odd(sa)?;
    let st = |x: &BlockDiag| sa.apply(x);
    wedderburn_complement(&sa.alg, j, Some(&st))
}

/// `(J⁺, J⁻)`, the `±1` eigenspaces of `*` on `J`.
pub fn eigen_split(sa: &StarAlgebra, j: &Subspace) -> (Subspace, Subspace) {
    let alg = &sa.alg;
    let f = alg.field();
    let half = f.inv_e(f.int(2)).expect("odd characteristic");
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for z in alg.elements_of(j) {
        let zs = sa.apply(&z);
        plus.push(z.add(&zs).scale(half));
        minus.push(z.sub(&zs).scale(half));
    }
    (alg.span_of(&plus), alg.span_of(&minus))
}

/// `I₀ ∪ {e + e* : e* ≠ e}` for the central-primitive idempotents of a `*`-invariant `S`.
pub fn star_idempotents<R: Rng + ?Sized>(sa: &StarAlgebra, s: &Subspace, rng: &mut R) -> Result<Vec<BlockDiag>> {
    let es = central_primitive_idempotents(&sa.alg, s, rng)?;
    let mut out: Vec<BlockDiag> = Vec::new();
    for e in &es {
        let es_ = sa.apply(e);
        let x = if es_ == *e { e.clone() } else { e.add(&es_) };
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out.sort();
    Ok(out)
}

/// The unique unipotent square root of a unipotent `u`: `u^{(p^t+1)/2}` with `u^{p^t} = 1`.
fn unipotent_sqrt(u: &BlockDiag, p: u64) -> BlockDiag {
    let mut m = 1u64;
    let mut x = u.clone();
    while !x.is_identity() {
        x = x.pow(p);
        m *= p;
    }
    u.pow((m + 1) / 2)
}

/// `z + √(1 + z²)` for each basis element `z` of `J⁻` (prime-field multiples included).
pub fn jminus_unipotents(sa: &StarAlgebra, jminus: &Subspace) -> Result<Vec<BlockDiag>> {
    require_odd(sa)?;
    let alg = &sa.alg;
    let f = alg.field();
    let p = f.p() as u64;
    let gen = if f.degree() == 1 { 1 } else { f.p() };
    let one = alg.one();
    let mut out = Vec::new();
    for z0 in alg.elements_of(jminus) {
        let mut w = 1u32;
        for _ in 0..f.degree() {
            let z = z0.scale(w);
            out.push(z.add(&unipotent_sqrt(&one.add(&z.mul(&z)), p)));
            w = f.mul_e(w, gen);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarType {
    Orthogonal,
    Symplectic,
    Unitary,
    Exchange,
}

impl StarType {
    pub fn name(self) -> &'static str {
        match self {
            StarType::Orthogonal => "orthogonal",
            StarType::Symplectic => "symplectic",
            StarType::Unitary => "unitary",
            StarType::Exchange => "exchange",
        }
    }
}

/// A `*`-simple factor `eSe` with its isometry and similitude groups.
#[derive(Clone, Debug)]
pub struct StarSimple {
    pub kind: StarType,
    pub d: usize,
    pub m: usize,
    /// `{g ∈ eSe : g·g* = e}`.
    pub isom_order: usize,
    pub isom_gens: Vec<BlockDiag>,
    /// `{g ∈ eSe : g·g* = λ, λ central and *-fixed, invertible}`.
    pub pseudo_order: usize,
    pub pseudo_gens: Vec<BlockDiag>,
}

/// Classify `eSe` for a `*`-fixed `e ∈ E*` and enumerate its isometry groups.
pub fn star_simple_type<R: Rng + ?Sized>(
    sa: &StarAlgebra,
    s: &Subspace,
    e: &BlockDiag,
    rng: &mut R,
    caps: Caps,
) -> Result<StarSimple> {
    require_odd(sa)?;
    let alg = &sa.alg;
    let f = alg.field();
    let ese_space = {
        let xs: Vec<BlockDiag> = alg.elements_of(s).iter().map(|x| e.mul(x).mul(e)).collect();
        alg.span_of(&xs)
    };
    let ese = MatAlgebra::from_space(f, alg.dims(), ese_space.clone());
    let idem = central_primitive_idempotents(alg, &ese_space, rng)?;
    let first = crate::algdecomp::simple_params(alg, &ese_space, &idem[0], rng)?;
    let (d, m) = (first.d, first.m);
    let kind = if idem.len() == 2 {
        StarType::Exchange
    } else {
        let centre = ese.center();
        let fixed_centre = alg.elements_of(&centre).iter().all(|z| sa.apply(z) == *z);
        let sym: Vec<BlockDiag> = ese.basis().iter().map(|x| x.add(&sa.apply(x))).collect();
        let sym_dim = alg.span_of(&sym).dim();
        if !fixed_centre {
            StarType::Unitary
        } else if sym_dim == m * d * (d + 1) / 2 {
            StarType::Orthogonal
        } else {
            StarType::Symplectic
        }
    };
    // Enumerate eSe (desk scale only).
    let q = f.q() as usize;
    let dim = ese_space.dim();
    let total = q.checked_pow(dim as u32).filter(|t| *t <= caps.filter).ok_or(Error::CapExceeded(caps.filter))?;
    let basis = ese.basis();
    let rest = alg.one().sub(e);
    let centre_fixed: HashSet<BlockDiag> = {
        let c = ese.center();
        let cb = alg.elements_of(&c);
        let mut out = HashSet::new();
        let qc = q.pow(cb.len() as u32);
        for code in 1..qc {
            let mut x = alg.zero();
            let mut cc = code;
            for b in &cb {
                x = x.add(&b.scale((cc % q) as u32));
                cc /= q;
            }
            if sa.apply(&x) == x && x.add(&rest).inverse().is_some() {
                out.insert(x);
            }
        }
        out
    };
    let mut isom = Vec::new();
    let mut pseudo = Vec::new();
    for code in 0..total {
        let mut x = alg.zero();
        let mut c = code;
        for b in &basis {
            x = x.add(&b.scale((c % q) as u32));
            c /= q;
        }
        let n = x.mul(&sa.apply(&x));
        if n == *e {
            isom.push(x.add(&rest));
            pseudo.push(x.add(&rest));
        } else if centre_fixed.contains(&n) {
            pseudo.push(x.add(&rest));
        }
    }
    let one = alg.one();
    Ok(StarSimple {
        kind,
        d,
        m,
        isom_order: isom.len(),
        isom_gens: generators_of(&one, &isom, caps.closure)?,
        pseudo_order: pseudo.len(),
        pseudo_gens: generators_of(&one, &pseudo, caps.closure)?,
    })
}

/// Matrix of `s ↦ g·s·g⁻¹` on the canonical coordinates of `S`.
fn conj_on(alg: &MatAlgebra, s: &Subspace, g: &BlockDiag) -> Mat {
    let gi = g.inverse().expect("invertible");
    let rows: Vec<Vec<u32>> = alg.elements_of(s).iter().map(|x| s.coords(&g.conj(x, &gi).flatten()).expect("normalizes S")).collect();
    Mat::from_rows(alg.field(), &rows)
}

/// Generators and order of `N*(A)`.
pub fn star_normalizer<R: Rng + ?Sized>(sa: &StarAlgebra, rng: &mut R, caps: Caps) -> Result<GeneratorSet> {
    require_odd(sa)?;
    let alg = &sa.alg;
    let f = alg.field();
    let st = |x: &BlockDiag| sa.apply(x);
    let w = Wedderburn::decompose(alg, Some(&st), rng)?;
    let lay = w.layers();
    let nsj = nsj_generators(&w, &lay, rng)?;

    // Stabilizer of * restricted to S: τ ↦ C_g·τ·C_g⁻¹ with C_g the conjugation matrix.
    let sb = alg.elements_of(&w.s);
    let tau_rows: Vec<Vec<u32>> = sb.iter().map(|x| w.s.coords(&sa.apply(x).flatten()).unwrap()).collect();
    let tau = Mat::from_rows(f, &tau_rows);
    let act = |g: &BlockDiag, t: &Mat| -> Mat {
        let c = conj_on(alg, &w.s, g);
        let ci = c.inverse().unwrap();
        &(&ci * t) * &c
    };
    let os = orbit_stabilizer(&alg.one(), &nsj.gens, tau, act, nsj.order.as_ref(), caps)?;
    let mut g1 = GeneratorSet::new(alg.dims());
    for g in os.stabilizer {
        g1.push(g, Tag::Isometry);
    }
    g1.order = nsj.order.as_ref().map(|o| o / BigUint::from(os.orbit));

    let (jp, jm) = eigen_split(sa, &w.j);
    let g2 = stabilize_subspace(alg, &g1, &jp, g1.order.as_ref(), caps)?;
    let g3 = stabilize_subspace(alg, &g2, &jm, g2.order.as_ref(), caps)?;

    // U = (1+J) ∩ N*(A), enumerated.
    let q = f.q() as usize;
    let total = q.checked_pow(w.j.dim() as u32).filter(|t| *t <= caps.filter);
    let mut out = GeneratorSet::new(alg.dims());
    let jm_gens = jminus_unipotents(sa, &jm)?;
    for g in &jm_gens {
        out.push(g.clone(), Tag::Unipotent);
    }
    let mut u_order = None;
    if let Some(total) = total {
        let jb = alg.elements_of(&w.j);
        let basis = alg.basis();
        let stars: Vec<BlockDiag> = basis.iter().map(|x| sa.apply(x)).collect();
        let mut u = Vec::new();
        let mut u_s = 0usize;
        for code in 0..total {
            let mut z = alg.zero();
            let mut c = code;
            for b in &jb {
                z = z.add(&b.scale((c % q) as u32));
                c /= q;
            }
            let g = alg.one().add(&z);
            let gi = g.inverse().ok_or(Error::Singular)?;
            let ok = basis.iter().zip(&stars).all(|(x, xs)| {
                let y = g.conj(x, &gi);
                alg.contains(&y) && sa.apply(&y) == g.conj(xs, &gi)
            });
            if ok {
                if sb.iter().all(|x| w.s.contains(&g.conj(x, &gi).flatten())) {
                    u_s += 1;
                }
                u.push(g);
            }
        }
        // Fill in anything the J⁻ unipotents miss.
        let have = closure(&alg.one(), &out.gens, caps.closure)?;
        if have.len() < u.len() {
            let extra: Vec<BlockDiag> = u.iter().filter(|g| !have.contains(*g)).cloned().collect();
            let mut gens = out.gens.clone();
            for g in extra {
                let cl = closure(&alg.one(), &gens, caps.closure)?;
                if cl.len() == u.len() {
                    break;
                }
                if !cl.contains(&g) {
                    gens.push(g.clone());
                    out.push(g, Tag::Unipotent);
                }
            }
        }
        u_order = Some((u.len(), u_s));
    }
    out.extend(&g3);
    out.nsj_order = nsj.order.clone();
    out.orbit = g3.orbit;
    out.order = match (u_order, &g3.order) {
        (Some((u, us)), Some(so)) => Some(BigUint::from(u) * so / BigUint::from(us)),
        _ => None,
    };
    Ok(out)
}

/// Whether `g` normalizes `A` and commutes with `*`.
pub fn commutes_with_star(sa: &StarAlgebra, g: &BlockDiag) -> bool {
    let Some(gi) = g.inverse() else { return false };
    sa.alg.basis().iter().all(|x| {
        let y = g.conj(x, &gi);
        sa.alg.contains(&y) && sa.apply(&y) == g.conj(&sa.apply(x), &gi)
    })
}

#[cfg(test)]
mod tests;
