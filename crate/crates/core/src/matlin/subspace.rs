use super::mat::axpy;
use super::Mat;
use crate::field::{Elem, Gf};
use std::hash::{Hash, Hasher};

/// A subspace of `k^n`, stored as its RREF basis. Equal subspaces have identical bases.
#[derive(Clone)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, o: &Self) -> bool {
        self.basis == o.basis
    }
}
impl Eq for Subspace {}
impl Hash for Subspace {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.basis.hash(h);
    }
}
impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(n={}, {:?})", self.ambient(), self.basis)
    }
}

/// Incremental echelon basis: rows normalized at their pivot and reduced against earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    f: Gf,
    n: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(f: &Gf, n: usize) -> Echelon {
        Echelon { f: f.clone(), n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Reduce `v` against the stored rows; returns the residue.
    pub fn reduce(&self, v: &mut [Elem]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                axpy(&self.f, v, self.f.neg_e(c), r);
            }
        }
    }

    /// Insert `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Elem>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| *x != 0) else { return false };
        let inv = self.f.inv_e(v[p]).unwrap();
        for x in v.iter_mut() {
            *x = self.f.mul_e(*x, inv);
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| *x == 0)
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_rows(&self.f, self.n, &self.rows)
    }
}

impl Subspace {
    pub fn from_rows(f: &Gf, n: usize, rows: &[Vec<Elem>]) -> Subspace {
        let m = if rows.is_empty() { Mat::zero(f, 0, n) } else { Mat::from_vec(f, rows.len(), n, rows.concat()) };
        Subspace::from_mat(&m)
    }

    /// Row space of a matrix.
    pub fn from_mat(m: &Mat) -> Subspace {
        let (basis, _, pivots) = m.rref();
        Subspace { basis, pivots }
    }

    pub fn zero(f: &Gf, n: usize) -> Subspace {
        Subspace { basis: Mat::zero(f, 0, n), pivots: Vec::new() }
    }

    pub fn full(f: &Gf, n: usize) -> Subspace {
        Subspace { basis: Mat::identity(f, n), pivots: (0..n).collect() }
    }

    pub fn field(&self) -> &Gf {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<Elem>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots: coordinates on the quotient `k^n / self`.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.ambient()).filter(|c| !is_piv[*c]).collect()
    }

    /// Normal form of `v` modulo the subspace (zero at every pivot).
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c != 0 {
                axpy(f, &mut w, f.neg_e(c), self.basis.row(i));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|x| *x == 0)
    }

    /// Coordinates of `v` in the RREF basis, if it lies in the subspace.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p]).collect())
        } else {
            None
        }
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        (0..o.dim()).all(|i| self.contains(o.basis.row(i)))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let n = self.ambient();
        Subspace::from_mat(&Mat::vstack(self.field(), n, &[&self.basis, &o.basis]))
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        // x·[B1; B2] = 0 with x = (y, z) gives y·B1 = -z·B2 ∈ both.
        let f = self.field();
        let n = self.ambient();
        let stacked = Mat::vstack(f, n, &[&self.basis, &o.basis]);
        let ker = super::nullspace(&stacked);
        let d1 = self.dim();
        let rows: Vec<Vec<Elem>> = ker
            .basis_vecs()
            .iter()
            .map(|x| Mat::from_vec(f, 1, d1, x[..d1].to_vec()).checked_mul(&self.basis).unwrap().into_data())
            .collect();
        Subspace::from_rows(f, n, &rows)
    }

    /// Image under `v ↦ v·m`.
    pub fn image(&self, m: &Mat) -> Subspace {
        Subspace::from_mat(&(&self.basis * m))
    }

    /// Standard basis vectors spanning a complement (at the free columns).
    pub fn complement_basis(&self) -> Vec<Vec<Elem>> {
        let n = self.ambient();
        self.free_columns()
            .into_iter()
            .map(|c| {
                let mut v = vec![0; n];
                v[c] = 1;
                v
            })
            .collect()
    }

    /// Least subspace containing `self` and closed under right multiplication by the actors.
    pub fn spin(&self, actors: &[Mat]) -> Subspace {
        let mut ech = Echelon::new(self.field(), self.ambient());
        let mut queue: Vec<Vec<Elem>> = Vec::new();
        for v in self.basis_vecs() {
            if ech.insert(v.clone()) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for a in actors {
                let w = a.vec_mul(&v);
                if ech.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        ech.to_subspace()
    }

    /// Canonical key for hashing orbits.
    pub fn key(&self) -> Vec<Elem> {
        let mut k = vec![self.dim() as u32];
        k.extend_from_slice(self.basis.data());
        k
    }
}
