//! Exhaustive enumeration at desk scale: the ground truth for every structural
//! group construction.

use crate::adjoint::StarAlgebra;
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::bimap::Bimap;
use crate::error::{Error, Result};
use crate::field::{Elem, Gf};
use crate::matlin::{Echelon, Mat};
use rand::Rng;
use std::collections::HashSet;

/// An explicit finite group of block-diagonal elements.
#[derive(Clone, Debug)]
pub struct ElementTable {
    pub dims: Vec<usize>,
    elems: Vec<BlockDiag>,
    set: HashSet<BlockDiag>,
}

impl ElementTable {
    pub fn new(dims: &[usize], mut elems: Vec<BlockDiag>) -> ElementTable {
        elems.sort();
        let set = elems.iter().cloned().collect();
        ElementTable { dims: dims.to_vec(), elems, set }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[BlockDiag] {
        &self.elems
    }

    pub fn contains(&self, g: &BlockDiag) -> bool {
        self.set.contains(g)
    }

    /// Closure spot check: products and inverses of `samples` random elements stay inside.
    pub fn is_closed_sample<R: Rng + ?Sized>(&self, samples: usize, rng: &mut R) -> bool {
        if self.elems.is_empty() {
            return false;
        }
        (0..samples).all(|_| {
            let x = &self.elems[rng.gen_range(0..self.elems.len())];
            let y = &self.elems[rng.gen_range(0..self.elems.len())];
            self.contains(&x.mul(y)) && x.inverse().map_or(false, |xi| self.contains(&xi))
        })
    }
}

/// All of `GL_n(q)`, built row by row from vectors outside the span of earlier rows.
pub fn general_linear(f: &Gf, n: usize, cap: usize) -> Result<Vec<Mat>> {
    let q = f.q() as usize;
    let total: u128 = (0..n).map(|i| (q as u128).pow(n as u32) - (q as u128).pow(i as u32)).product();
    if total > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let vectors: Vec<Vec<Elem>> = (0..q.pow(n as u32))
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let d = (c % q) as Elem;
                    c /= q;
                    d
                })
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(total as usize);
    fn rec(f: &Gf, n: usize, vectors: &[Vec<Elem>], ech: &Echelon, rows: &mut Vec<Vec<Elem>>, out: &mut Vec<Mat>) {
        if rows.len() == n {
            out.push(Mat::from_rows(f, rows));
            return;
        }
        for v in vectors {
            if ech.contains(v) {
                continue;
            }
            let mut e2 = ech.clone();
            e2.insert(v.clone());
            rows.push(v.clone());
            rec(f, n, vectors, &e2, rows, out);
            rows.pop();
        }
    }
    rec(f, n, &vectors, &Echelon::new(f, n), &mut Vec::new(), &mut out);
    Ok(out)
}

fn gl_size(f: &Gf, n: usize) -> u128 {
    let q = f.q() as u128;
    (0..n).map(|i| q.pow(n as u32) - q.pow(i as u32)).product()
}

/// `{(x, y) : x·W·yᵗ = W}` for `W ≤ M_{a×b}` spanned by `w`, stored as `diag(x, y)`.
pub fn brute_subspace_stabilizer(f: &Gf, a: usize, b: usize, w: &[Mat], cap: usize) -> Result<ElementTable> {
    if gl_size(f, a) * gl_size(f, b) > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let mut span = Echelon::new(f, a * b);
    for m in w {
        span.insert(m.flatten());
    }
    let gla = general_linear(f, a, cap)?;
    let glb = general_linear(f, b, cap)?;
    let mut out = Vec::new();
    for x in &gla {
        let xw: Vec<Mat> = w.iter().map(|m| x * m).collect();
        for y in &glb {
            let yt = y.transpose();
            if xw.iter().all(|m| span.contains(&(m * &yt).flatten())) {
                out.push(BlockDiag(vec![x.clone(), y.clone()]));
            }
        }
    }
    Ok(ElementTable::new(&[a, b], out))
}

/// `ker ĉirc` by enumerating all of `U⊗V`.
pub fn brute_kernel(bm: &Bimap, cap: usize) -> Result<Vec<Vec<Elem>>> {
    let f = bm.field();
    let n = bm.a() * bm.b();
    let q = f.q() as usize;
    let total = q.checked_pow(n as u32).filter(|t| *t <= cap).ok_or(Error::CapExceeded(cap))?;
    let mut out = Vec::new();
    for code in 0..total {
        let mut v = vec![0u32; n];
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % q) as u32;
            c /= q;
        }
        let killed = bm
            .slices()
            .iter()
            .all(|m| m.data().iter().zip(&v).fold(0, |acc, (a, b)| f.add_e(acc, f.mul_e(*a, *b))) == 0);
        if killed {
            out.push(v);
        }
    }
    Ok(out)
}

/// All `(F, G)` with `F·W^∘·Gᵀ = W^∘`, stored as `diag(F, G)`.
pub fn brute_autotopisms(bm: &Bimap, cap: usize) -> Result<ElementTable> {
    let f = bm.field();
    if gl_size(f, bm.a()) * gl_size(f, bm.b()) > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let gla = general_linear(f, bm.a(), cap)?;
    let glb: Vec<(Mat, Mat)> = general_linear(f, bm.b(), cap)?.into_iter().map(|g| { let t = g.transpose(); (g, t) }).collect();
    let w = bm.gram_space();
    let mut out = Vec::new();
    for x in &gla {
        let fm: Vec<Mat> = bm.slices().iter().map(|m| x * m).collect();
        for (g, gt) in &glb {
            if fm.iter().all(|m| w.contains((m * gt).data())) {
                out.push(BlockDiag(vec![x.clone(), g.clone()]));
            }
        }
    }
    Ok(ElementTable::new(&[bm.a(), bm.b()], out))
}

fn square_filter(bm: &Bimap, cap: usize, keep: impl Fn(&[Mat]) -> bool) -> Result<ElementTable> {
    if bm.a() != bm.b() {
        return Err(Error::NotSquare);
    }
    let out = general_linear(bm.field(), bm.a(), cap)?
        .into_iter()
        .filter(|x| keep(&bm.act(x, x)))
        .map(|x| BlockDiag(vec![x]))
        .collect();
    Ok(ElementTable::new(&[bm.a()], out))
}

/// All `F` with `F·W^∘·Fᵀ = W^∘`.
pub fn brute_pseudo_isometries(bm: &Bimap, cap: usize) -> Result<ElementTable> {
    let w = bm.gram_space();
    square_filter(bm, cap, |img| img.iter().all(|m| w.contains(m.data())))
}

/// All `F` with `F·M_l·Fᵀ = M_l` for every slice.
pub fn brute_isometries(bm: &Bimap, cap: usize) -> Result<ElementTable> {
    square_filter(bm, cap, |img| img.iter().zip(bm.slices()).all(|(x, m)| x == m))
}

/// Elements of `GL_n` normalizing the projection of `alg` onto block `b`.
fn block_candidates(alg: &MatAlgebra, b: usize, cap: usize) -> Result<Vec<Mat>> {
    let f = alg.field();
    let n = alg.dims()[b];
    let proj: Vec<BlockDiag> = alg.basis().iter().map(|x| BlockDiag(vec![x.0[b].clone()])).collect();
    let palg = MatAlgebra::span(f, &[n], &proj);
    let pb: Vec<Mat> = palg.basis().into_iter().map(|x| x.0.into_iter().next().unwrap()).collect();
    Ok(general_linear(f, n, cap)?
        .into_iter()
        .filter(|g| {
            let gi = g.inverse().unwrap();
            pb.iter().all(|x| palg.contains(&BlockDiag(vec![&(g * x) * &gi])))
        })
        .collect())
}

/// All invertible block-diagonal `g` with `g·A·g⁻¹ = A` (and, with `star`, `(gxg⁻¹)* = g·x*·g⁻¹`).
/// Each block is first filtered against the projection of `A`, then the product is filtered.
pub fn brute_normalizer(alg: &MatAlgebra, star: Option<&StarAlgebra>, cap: usize) -> Result<ElementTable> {
    let f = alg.field();
    let dims = alg.dims().to_vec();
    let scan: u128 = dims.iter().map(|&n| gl_size(f, n)).sum();
    if scan > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let cands: Vec<Vec<Mat>> = (0..dims.len()).map(|b| block_candidates(alg, b, cap)).collect::<Result<_>>()?;
    let total: u128 = cands.iter().map(|c| c.len() as u128).product();
    if total > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let basis = alg.basis();
    let stars: Option<Vec<BlockDiag>> = star.map(|s| basis.iter().map(|x| s.apply(x)).collect());
    let mut out = Vec::new();
    let mut idx = vec![0usize; dims.len()];
    loop {
        let g = BlockDiag(idx.iter().enumerate().map(|(b, &i)| cands[b][i].clone()).collect());
        let gi = g.inverse().unwrap();
        let conj: Vec<BlockDiag> = basis.iter().map(|x| g.conj(x, &gi)).collect();
        let ok = conj.iter().all(|y| alg.contains(y))
            && match (&stars, star) {
                (Some(xs), Some(s)) => conj.iter().zip(xs).all(|(y, xst)| s.apply(y) == g.conj(xst, &gi)),
                _ => true,
            };
        if ok {
            out.push(g);
        }
        // Odometer over the candidate lists.
        let mut b = 0;
        loop {
            if b == dims.len() {
                return Ok(ElementTable::new(&dims, out));
            }
            idx[b] += 1;
            if idx[b] < cands[b].len() {
                break;
            }
            idx[b] = 0;
            b += 1;
        }
    }
}
