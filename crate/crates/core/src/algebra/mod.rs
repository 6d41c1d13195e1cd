//! Subalgebras of block-diagonal matrix algebras `M_{n_1} × … × M_{n_r}`.
//! A pair algebra on `U × V` is the case `[a, b]`; an algebra on one space is `[n]`.

mod blockdiag;

pub use blockdiag::{flat_len, BlockDiag};

use crate::field::{Elem, FiniteField, Gf};
use crate::matlin::{nullspace, Echelon, Mat, Subspace};
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatAlgebra {
    f: Gf,
    dims: Vec<usize>,
    space: Subspace,
}

impl MatAlgebra {
    /// The span of `elements` (no closure is taken).
    pub fn span(f: &Gf, dims: &[usize], elements: &[BlockDiag]) -> MatAlgebra {
        MatAlgebra { f: f.clone(), dims: dims.to_vec(), space: span_of(f, dims, elements) }
    }

    pub fn from_space(f: &Gf, dims: &[usize], space: Subspace) -> MatAlgebra {
        assert_eq!(space.ambient(), flat_len(dims));
        MatAlgebra { f: f.clone(), dims: dims.to_vec(), space }
    }

    /// Least unital subalgebra containing `gens`.
    pub fn envelope(f: &Gf, dims: &[usize], gens: &[BlockDiag]) -> MatAlgebra {
        let one = BlockDiag::identity(f, dims);
        let mut ech = Echelon::new(f, flat_len(dims));
        let mut queue = Vec::new();
        if ech.insert(one.flatten()) {
            queue.push(one);
        }
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = x.mul(g);
                if ech.insert(y.flatten()) {
                    queue.push(y);
                }
            }
        }
        MatAlgebra { f: f.clone(), dims: dims.to_vec(), space: ech.to_subspace() }
    }

    pub fn field(&self) -> &Gf {
        &self.f
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn degree(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn one(&self) -> BlockDiag {
        BlockDiag::identity(&self.f, &self.dims)
    }

    pub fn zero(&self) -> BlockDiag {
        BlockDiag::zero(&self.f, &self.dims)
    }

    pub fn unflatten(&self, v: &[Elem]) -> BlockDiag {
        BlockDiag::unflatten(&self.f, &self.dims, v)
    }

    /// Canonical (RREF) basis.
    pub fn basis(&self) -> Vec<BlockDiag> {
        self.elements_of(&self.space)
    }

    pub fn elements_of(&self, s: &Subspace) -> Vec<BlockDiag> {
        s.basis_vecs().iter().map(|v| self.unflatten(v)).collect()
    }

    pub fn span_of(&self, xs: &[BlockDiag]) -> Subspace {
        span_of(&self.f, &self.dims, xs)
    }

    pub fn contains(&self, x: &BlockDiag) -> bool {
        self.space.contains(&x.flatten())
    }

    pub fn is_unital(&self) -> bool {
        self.contains(&self.one())
    }

    /// Whether the span is closed under multiplication.
    pub fn is_closed(&self) -> bool {
        let b = self.basis();
        b.iter().all(|x| b.iter().all(|y| self.contains(&x.mul(y))))
    }

    /// Span of `{x·y : x ∈ s, y ∈ t}`.
    pub fn product(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let (xs, ys) = (self.elements_of(s), self.elements_of(t));
        let mut ech = Echelon::new(&self.f, flat_len(&self.dims));
        for x in &xs {
            for y in &ys {
                ech.insert(x.mul(y).flatten());
            }
        }
        ech.to_subspace()
    }

    /// `[s, s², …, s^c]` with `s^{c+1} = 0` (the list stops at the first zero power,
    /// or errors out if powers stabilize at a nonzero space).
    pub fn powers(&self, s: &Subspace) -> Option<Vec<Subspace>> {
        let mut out = Vec::new();
        let mut cur = s.clone();
        while cur.dim() > 0 {
            out.push(cur.clone());
            let next = self.product(&cur, s);
            if next == cur {
                return None;
            }
            cur = next;
        }
        Some(out)
    }

    pub fn random_element<R: Rng + ?Sized>(&self, s: &Subspace, rng: &mut R) -> BlockDiag {
        let mut v = vec![0; s.ambient()];
        for b in s.basis_vecs() {
            let c = self.f.random(rng);
            for (x, y) in v.iter_mut().zip(&b) {
                *x = self.f.add_e(*x, self.f.mul_e(c, *y));
            }
        }
        self.unflatten(&v)
    }

    /// `{z ∈ s : z·x = x·z for all x ∈ others}`.
    pub fn centralizer_in(&self, s: &Subspace, others: &[BlockDiag]) -> Subspace {
        let basis = self.elements_of(s);
        let len = flat_len(&self.dims);
        if basis.is_empty() {
            return s.clone();
        }
        let mut m = Mat::zero(&self.f, basis.len(), len * others.len());
        for (i, z) in basis.iter().enumerate() {
            let mut row = Vec::with_capacity(len * others.len());
            for x in others {
                row.extend(z.mul(x).sub(&x.mul(z)).flatten());
            }
            m.row_mut(i).copy_from_slice(&row);
        }
        combine(&self.f, len, &nullspace(&m), &s.basis_vecs())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer_in(&self.space, &self.basis())
    }

    /// Minimal polynomial of `x` relative to the unit `e` (`x^0 = e`).
    pub fn minpoly_rel(&self, x: &BlockDiag, e: &BlockDiag) -> crate::field::Poly<Elem> {
        crate::matlin::minpoly_in(&x.to_mat(), &e.to_mat())
    }

    /// `g(x)` with `x^0 = e`.
    pub fn eval_rel(&self, g: &crate::field::Poly<Elem>, x: &BlockDiag, e: &BlockDiag) -> BlockDiag {
        let mut acc = self.zero();
        for c in g.coeffs().iter().rev() {
            acc = acc.mul(x).add(&e.scale(*c));
        }
        acc
    }
}

/// Row-space of flattened elements.
pub fn span_of(f: &Gf, dims: &[usize], xs: &[BlockDiag]) -> Subspace {
    let rows: Vec<Vec<Elem>> = xs.iter().map(|x| x.flatten()).collect();
    Subspace::from_rows(f, flat_len(dims), &rows)
}

/// The subspace spanned by `Σ_i c_i basis_i` for coefficient vectors `c` in `coeffs`.
pub fn combine(f: &Gf, len: usize, coeffs: &Subspace, basis: &[Vec<Elem>]) -> Subspace {
    let rows: Vec<Vec<Elem>> = coeffs
        .basis_vecs()
        .iter()
        .map(|c| {
            let mut v = vec![0; len];
            for (ci, b) in c.iter().zip(basis) {
                if *ci != 0 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = f.add_e(*x, f.mul_e(*ci, *y));
                    }
                }
            }
            v
        })
        .collect();
    Subspace::from_rows(f, len, &rows)
}
