//! Radical series `M ⊇ MJ ⊇ … ⊇ MJ^c ⊇ 0` of the natural row module, with
//! `S`-invariant layer complements `X_i` built from matrix units.

use super::simple::SimpleFactor;
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::field::Elem;
use crate::matlin::{Echelon, Mat, Subspace};

/// One adapted basis vector `c_t·ρ^l·ε_1j` of block `block`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedVec {
    pub factor: usize,
    pub layer: usize,
    pub t: usize,
    pub l: usize,
    pub j: usize,
    pub v: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct LayerData {
    pub c: usize,
    pub dims: Vec<usize>,
    /// `series[b][i]`: block `b` of `MJ^i`, for `i = 0..=c+1`.
    pub series: Vec<Vec<Subspace>>,
    /// `x[b][i]`: the layer complement in block `b`.
    pub x: Vec<Vec<Subspace>>,
    /// `mult[e][b][i]`: multiplicity of the simple module of factor `e` in layer `i` of block `b`.
    pub mult: Vec<Vec<Vec<usize>>>,
    /// `gens[e][b][i]`: the chosen `c_t ∈ X_i ε_11`.
    pub gens: Vec<Vec<Vec<Vec<Vec<Elem>>>>>,
    /// `adapted[b]`: a basis of block `b` running over all `(e, i, t, l, j)`.
    pub adapted: Vec<Vec<AdaptedVec>>,
}

impl LayerData {
    /// `m_i(e)` on the first block (`U`).
    pub fn m(&self, i: usize, e: usize) -> usize {
        self.mult[e][0][i]
    }

    /// `n_i(e)` on the second block (`V`), or 0 for a single-block algebra.
    pub fn n(&self, i: usize, e: usize) -> usize {
        self.mult[e].get(1).map_or(0, |v| v[i])
    }

    /// The adapted basis of block `b` as an invertible matrix (one row per vector).
    pub fn adapted_matrix(&self, f: &crate::field::Gf, b: usize) -> Mat {
        let rows: Vec<Vec<Elem>> = self.adapted[b].iter().map(|a| a.v.clone()).collect();
        Mat::from_rows(f, &rows)
    }
}

fn row_space(f: &crate::field::Gf, n: usize, mats: &[&Mat]) -> Subspace {
    let rows: Vec<Vec<Elem>> = mats.iter().flat_map(|m| m.row_vecs()).collect();
    Subspace::from_rows(f, n, &rows)
}

/// Layers of the radical series for `A = J ⊕ S` with `S`'s factors given.
pub fn radical_series_layers(alg: &MatAlgebra, jpow: &[Subspace], factors: &[SimpleFactor]) -> LayerData {
    let f = alg.field().clone();
    let dims = alg.dims().to_vec();
    let c = jpow.len();
    let nb = dims.len();
    let mut series = vec![Vec::with_capacity(c + 2); nb];
    for (b, &n) in dims.iter().enumerate() {
        series[b].push(Subspace::full(&f, n));
        for jp in jpow {
            let els = alg.elements_of(jp);
            let blocks: Vec<&Mat> = els.iter().map(|x| &x.0[b]).collect();
            series[b].push(row_space(&f, n, &blocks));
        }
        series[b].push(Subspace::zero(&f, n));
    }

    let mut mult = vec![vec![vec![0; c + 1]; nb]; factors.len()];
    let mut gens = vec![vec![vec![Vec::new(); c + 1]; nb]; factors.len()];
    let mut adapted = vec![Vec::new(); nb];
    let mut xrows: Vec<Vec<Vec<Vec<Elem>>>> = vec![vec![Vec::new(); c + 1]; nb];
    for (ei, fac) in factors.iter().enumerate() {
        let e11: &BlockDiag = &fac.units[0][0];
        for b in 0..nb {
            let n = dims[b];
            let proj = |sp: &Subspace| -> Vec<Vec<Elem>> { sp.basis_vecs().iter().map(|v| e11.0[b].vec_mul(v)).collect() };
            for i in 0..=c {
                let mut ech = Echelon::new(&f, n);
                for v in proj(&series[b][i + 1]) {
                    ech.insert(v);
                }
                let mut cs = Vec::new();
                for v in proj(&series[b][i]) {
                    if ech.contains(&v) {
                        continue;
                    }
                    for p in &fac.rho_powers {
                        ech.insert(p.0[b].vec_mul(&v));
                    }
                    cs.push(v);
                }
                for (t, ct) in cs.iter().enumerate() {
                    for (l, p) in fac.rho_powers.iter().enumerate() {
                        let w = p.0[b].vec_mul(ct);
                        for j in 0..fac.d {
                            let v = fac.units[0][j].0[b].vec_mul(&w);
                            xrows[b][i].push(v.clone());
                            adapted[b].push(AdaptedVec { factor: ei, layer: i, t, l, j, v });
                        }
                    }
                }
                mult[ei][b][i] = cs.len();
                gens[ei][b][i] = cs;
            }
        }
    }
    let x = xrows
        .iter()
        .enumerate()
        .map(|(b, per)| per.iter().map(|rows| Subspace::from_rows(&f, dims[b], rows)).collect())
        .collect();
    LayerData { c, dims, series, x, mult, gens, adapted }
}
