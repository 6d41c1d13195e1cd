//! Bimaps `U × V → W` given by Gram slices, and the factor lattice on them.

mod fixtures;

pub use fixtures::fixture;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Gf};
use crate::matlin::{nullspace, solve_right, Mat, Subspace};
use serde_json::{json, Value};

/// `u∘v` has `l`-th coordinate `u·M_l·vᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimap {
    field: Gf,
    a: usize,
    b: usize,
    slices: Vec<Mat>,
}

/// Triple `(f, g; h)` with `f·M_l·gᵀ = Σ_m h_{lm} M_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopism {
    pub f: Mat,
    pub g: Mat,
    pub h: Mat,
}

impl Bimap {
    /// Slices as given; callers are responsible for fullness (see [`Bimap::make_full`]).
    pub fn from_slices(field: &Gf, a: usize, b: usize, slices: Vec<Mat>) -> Result<Bimap> {
        for s in &slices {
            if s.rows() != a || s.cols() != b {
                return Err(Error::DimensionMismatch(format!(
                    "slice is {}x{}, expected {a}x{b}",
                    s.rows(),
                    s.cols()
                )));
            }
        }
        Ok(Bimap { field: field.clone(), a, b, slices })
    }

    /// Re-express against a basis of `U∘V`. Returns the bimap and the `w_old × w_new`
    /// matrix `π` with new coordinates = old coordinates · π.
    pub fn make_full(field: &Gf, a: usize, b: usize, raw: &[Mat]) -> Result<(Bimap, Mat)> {
        let tmp = Bimap::from_slices(field, a, b, raw.to_vec())?;
        let flat = tmp.flat_slices();
        let (r, rank, _) = flat.rref();
        let slices: Vec<Mat> =
            (0..rank).map(|i| Mat::from_vec(field, a, b, r.row(i).to_vec())).collect();
        // N = Q·M_flat; new coordinate m is Σ_l Q_ml x_l.
        let pi = if rank == 0 {
            Mat::zero(field, raw.len(), 0)
        } else {
            solve_right(&flat.transpose(), &r.transpose()).expect("rows lie in the row space")
        };
        Ok((Bimap { field: field.clone(), a, b, slices }, pi))
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
    pub fn w(&self) -> usize {
        self.slices.len()
    }
    pub fn slices(&self) -> &[Mat] {
        &self.slices
    }

    /// `w × ab` matrix whose rows are the flattened slices.
    pub fn flat_slices(&self) -> Mat {
        let ab = self.a * self.b;
        let data: Vec<u32> = self.slices.iter().flat_map(|s| s.data().iter().copied()).collect();
        Mat::from_vec(&self.field, self.slices.len(), ab, data)
    }

    /// The linear map `U⊗V → W` as an `ab × w` matrix (row `i·b+j` is `e_i∘e_j`).
    pub fn circ_hat(&self) -> Mat {
        self.flat_slices().transpose()
    }

    /// `ker ĉirc ≤ U⊗V`.
    pub fn kernel(&self) -> Subspace {
        nullspace(&self.circ_hat())
    }

    /// The Gram span `W^∘` as a subspace of flattened `a×b` matrices.
    pub fn gram_space(&self) -> Subspace {
        Subspace::from_mat(&self.flat_slices())
    }

    pub fn is_full(&self) -> bool {
        self.flat_slices().rank() == self.w()
    }

    pub fn eval(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        self.slices
            .iter()
            .map(|m| {
                let um = m.vec_mul(u);
                um.iter().zip(v).fold(0, |acc, (x, y)| f.add_e(acc, f.mul_e(*x, *y)))
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.a == self.b && self.slices.iter().all(|m| m.transpose() == *m)
    }

    pub fn is_alternating(&self) -> bool {
        self.a == self.b
            && self.slices.iter().all(|m| {
                (0..self.a).all(|i| m.get(i, i) == 0) && m.transpose() == -m
            })
    }

    /// `(left, right)` radicals: `{u : u∘V = 0}` and `{v : U∘v = 0}`.
    pub fn radicals(&self) -> (Subspace, Subspace) {
        let f = &self.field;
        let mut left = Mat::zero(f, self.a, self.b * self.w());
        let mut right = Mat::zero(f, self.b, self.a * self.w());
        for (l, m) in self.slices.iter().enumerate() {
            left.set_block(0, l * self.b, m);
            right.set_block(0, l * self.a, &m.transpose());
        }
        (nullspace(&left), nullspace(&right))
    }

    pub fn is_nondegenerate(&self) -> bool {
        let (l, r) = self.radicals();
        l.dim() == 0 && r.dim() == 0
    }

    fn check_compatible(&self, o: &Bimap) -> Result<()> {
        if self.field != o.field || self.a != o.a || self.b != o.b {
            return Err(Error::DimensionMismatch(format!(
                "({},{}) vs ({},{})",
                self.a, self.b, o.a, o.b
            )));
        }
        Ok(())
    }

    /// `u(∘∩⋄)v = (u∘v, u⋄v)`, made full.
    pub fn meet(&self, o: &Bimap) -> Result<Bimap> {
        self.check_compatible(o)?;
        let mut s = self.slices.clone();
        s.extend(o.slices.iter().cloned());
        Ok(Bimap::make_full(&self.field, self.a, self.b, &s)?.0)
    }

    /// The regular bimap modulo `ker ĉirc + ker ⋄̂`.
    pub fn join(&self, o: &Bimap) -> Result<Bimap> {
        self.check_compatible(o)?;
        Ok(Bimap::regular_mod(&self.field, self.a, self.b, &self.kernel().sum(&o.kernel())))
    }

    /// `u•v = u⊗v + K` in `k^{ab}/K`, coordinates at the non-pivot columns of `K`.
    pub fn regular_mod(field: &Gf, a: usize, b: usize, k: &Subspace) -> Bimap {
        let free = k.free_columns();
        let mut slices = vec![Mat::zero(field, a, b); free.len()];
        for t in 0..a * b {
            let mut e = vec![0; a * b];
            e[t] = 1;
            let r = k.reduce(&e);
            for (m, &c) in free.iter().enumerate() {
                slices[m].set(t / b, t % b, r[c]);
            }
        }
        Bimap { field: field.clone(), a, b, slices }
    }

    /// The tensor bimap `U×V → U⊗V`.
    pub fn tensor(field: &Gf, a: usize, b: usize) -> Bimap {
        Bimap::regular_mod(field, a, b, &Subspace::zero(field, a * b))
    }

    /// `τ` with `u⋄v = (u∘v)·τ`, when `ker ĉirc ⊆ ker ⋄̂`.
    pub fn factors_through(&self, o: &Bimap) -> Option<Mat> {
        if self.check_compatible(o).is_err() {
            return None;
        }
        let (c, d) = (self.circ_hat(), o.circ_hat());
        if self.w() == 0 {
            return if o.w() == 0 { Some(Mat::zero(&self.field, 0, 0)) } else { None };
        }
        if o.w() == 0 {
            return Some(Mat::zero(&self.field, self.w(), 0));
        }
        solve_right(&c, &d)
    }

    /// Same kernel (factor equivalence).
    pub fn equivalent(&self, o: &Bimap) -> bool {
        self.check_compatible(o).is_ok() && self.kernel() == o.kernel()
    }

    /// Image of the slices under `M ↦ f·M·gᵀ`.
    pub fn act(&self, f: &Mat, g: &Mat) -> Vec<Mat> {
        let gt = g.transpose();
        self.slices.iter().map(|m| &(f * m) * &gt).collect()
    }

    /// `h` with `f·M_l·gᵀ = Σ_m h_lm M_m`, if it exists.
    pub fn homotopism_h(&self, f: &Mat, g: &Mat) -> Option<Mat> {
        let img = self.act(f, g);
        let flat = self.flat_slices();
        let data: Vec<u32> = img.iter().flat_map(|m| m.data().iter().copied()).collect();
        let target = Mat::from_vec(&self.field, self.w(), self.a * self.b, data);
        crate::matlin::solve_left(&flat, &target)
    }

    /// Whether `(f, g)` is an autotopism: both invertible and `f·W^∘·gᵀ = W^∘`.
    pub fn is_autotopism(&self, f: &Mat, g: &Mat) -> bool {
        if !f.is_invertible() || !g.is_invertible() {
            return false;
        }
        let w = self.gram_space();
        self.act(f, g).iter().all(|m| w.contains(m.data()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": serde_json::to_value(self.field.spec()).unwrap(),
            "dims": {"a": self.a, "b": self.b, "w": self.w()},
            "slices": self.slices.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Bimap> {
        let spec: FieldSpec = serde_json::from_value(v["field"].clone())
            .map_err(|e| Error::Input(format!("field: {e}")))?;
        let f = Gf::from_spec(&spec)?;
        let dim = |k: &str| {
            v["dims"][k].as_u64().map(|x| x as usize).ok_or_else(|| Error::Input(format!("dims.{k}")))
        };
        let (a, b) = (dim("a")?, dim("b")?);
        let slices = v["slices"]
            .as_array()
            .ok_or_else(|| Error::Input("slices".into()))?
            .iter()
            .map(|s| Mat::from_json(&f, s).map(|m| if m.rows() == 0 { Mat::zero(&f, a, b) } else { m }))
            .collect::<Result<Vec<_>>>()?;
        if let Ok(w) = dim("w") {
            if w != slices.len() {
                return Err(Error::DimensionMismatch(format!("w = {w} but {} slices", slices.len())));
            }
        }
        Bimap::from_slices(&f, a, b, slices)
    }
}
