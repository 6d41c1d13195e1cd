//! Jacobson radical of a matrix algebra by the characteristic-p trace chain.
//!
//! Over `GF(p^k)` the algebra is first written over `GF(p)` (each entry becomes its
//! `k×k` regular representation). With integer lifts `â`,
//! `g_i(a) = (Tr(â^{p^i}) mod p^{i+1}) / p^i`, `I_{-1} = A` and
//! `I_i = {a ∈ I_{i-1} : g_i(ab) = 0 for all b ∈ A}`; the radical is `I_l`, `l = ⌊log_p n⌋`.

use crate::algebra::{flat_len, MatAlgebra};
use crate::field::{Elem, Gf};
use crate::matlin::{nullspace, Mat, Subspace};

/// A block of a matrix over the prime field, lifted to integers in `[0, p)`.
type IntBlock = (usize, Vec<u64>);

/// Regular representation of a field element: row `i` is `x^i · c`.
fn regular(f: &Gf, c: Elem) -> Vec<Vec<u32>> {
    let k = f.degree() as usize;
    let gen = if k == 1 { 1 } else { f.p() };
    let mut basis_el = 1u32;
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        rows.push(f.coeffs(f.mul_e(basis_el, c)));
        basis_el = f.mul_e(basis_el, gen);
    }
    rows
}

/// Restriction of scalars of one block-diagonal element to `GF(p)` integer blocks.
fn restrict(f: &Gf, blocks: &[Mat]) -> Vec<IntBlock> {
    let k = f.degree() as usize;
    blocks
        .iter()
        .map(|m| {
            let n = m.rows();
            let nk = n * k;
            let mut out = vec![0u64; nk * nk];
            for r in 0..n {
                for c in 0..n {
                    let reg = regular(f, m.get(r, c));
                    for (i, row) in reg.iter().enumerate() {
                        for (j, x) in row.iter().enumerate() {
                            out[(r * k + i) * nk + c * k + j] = *x as u64;
                        }
                    }
                }
            }
            (nk, out)
        })
        .collect()
}

fn int_mul(n: usize, a: &[u64], b: &[u64], modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % modulus;
            }
        }
    }
    out
}

fn int_add_scaled(acc: &mut [IntBlock], c: u64, x: &[IntBlock], p: u64) {
    for ((_, a), (_, b)) in acc.iter_mut().zip(x) {
        for (u, v) in a.iter_mut().zip(b) {
            *u = (*u + c * v) % p;
        }
    }
}

/// `g_i(a)` for an element in integer-lifted block form (entries in `[0, p)`).
fn g_value(blocks: &[IntBlock], p: u64, i: u32) -> u64 {
    let pi = p.pow(i);
    let modulus = pi * p;
    let mut tr = 0u64;
    for (n, data) in blocks {
        let mut pow = data.clone();
        let mut base = data.clone();
        let mut e = pi;
        let mut acc: Option<Vec<u64>> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => int_mul(*n, &a, &base, modulus),
                });
            }
            e >>= 1;
            if e > 0 {
                base = int_mul(*n, &base, &base, modulus);
            }
        }
        pow = acc.unwrap_or(pow);
        for d in 0..*n {
            tr = (tr + pow[d * n + d]) % modulus;
        }
    }
    debug_assert_eq!(tr % pi, 0, "trace chain divisibility");
    tr / pi
}

/// The Jacobson radical, as a subspace of the algebra's flattened ambient space.
pub fn radical(alg: &MatAlgebra) -> Subspace {
    let f = alg.field().clone();
    let p = f.p() as u64;
    let k = f.degree() as usize;
    let prime = Gf::prime(p).unwrap();
    let gen = if k == 1 { 1 } else { f.p() };

    // GF(p)-basis of A: ω^j·b_i.
    let qbasis = alg.basis();
    let mut pbasis_q = Vec::with_capacity(qbasis.len() * k);
    for b in &qbasis {
        let mut w = 1u32;
        for _ in 0..k {
            pbasis_q.push(b.scale(w));
            w = f.mul_e(w, gen);
        }
    }
    let pbasis: Vec<Vec<IntBlock>> = pbasis_q.iter().map(|x| restrict(&f, &x.0)).collect();
    let dp = pbasis.len();
    if dp == 0 {
        return Subspace::zero(&f, flat_len(alg.dims()));
    }
    let n_total: usize = alg.degree() * k;
    let mut l = 0u32;
    while (p as usize).pow(l + 1) <= n_total {
        l += 1;
    }

    // Current ideal as GF(p)-coefficient vectors over pbasis.
    let mut ideal: Vec<Vec<u64>> = (0..dp)
        .map(|i| {
            let mut v = vec![0u64; dp];
            v[i] = 1;
            v
        })
        .collect();
    let combine = |coeffs: &[u64]| -> Vec<IntBlock> {
        let mut acc: Vec<IntBlock> = pbasis[0].iter().map(|(n, d)| (*n, vec![0u64; d.len()])).collect();
        for (c, x) in coeffs.iter().zip(&pbasis) {
            if *c != 0 {
                int_add_scaled(&mut acc, *c, x, p);
            }
        }
        acc
    };
    for i in 0..=l {
        if ideal.is_empty() {
            break;
        }
        let elems: Vec<Vec<IntBlock>> = ideal.iter().map(|c| combine(c)).collect();
        let mut g = Mat::zero(&prime, ideal.len(), dp);
        for (t, x) in elems.iter().enumerate() {
            for (j, b) in pbasis.iter().enumerate() {
                let prod: Vec<IntBlock> = x
                    .iter()
                    .zip(b)
                    .map(|((n, u), (_, v))| (*n, int_mul(*n, u, v, p)))
                    .collect();
                g.set(t, j, g_value(&prod, p, i) as u32);
            }
        }
        let ker = nullspace(&g);
        ideal = ker
            .basis_vecs()
            .iter()
            .map(|y| {
                let mut v = vec![0u64; dp];
                for (yt, c) in y.iter().zip(&ideal) {
                    for (a, b) in v.iter_mut().zip(c) {
                        *a = (*a + *yt as u64 * b) % p;
                    }
                }
                v
            })
            .collect();
    }

    // Back to GF(q): Σ c_j · (ω^j b_i) with c_j ∈ GF(p).
    let rows: Vec<Vec<Elem>> = ideal
        .iter()
        .map(|c| {
            let mut acc = alg.zero();
            for (cj, x) in c.iter().zip(&pbasis_q) {
                if *cj != 0 {
                    acc = acc.add(&x.scale(*cj as u32));
                }
            }
            acc.flatten()
        })
        .collect();
    Subspace::from_rows(&f, flat_len(alg.dims()), &rows)
}
