//! Dense exact linear algebra over table fields. Vectors are rows; matrices act
//! on the right.

mod mat;
mod subspace;

pub use mat::{elem_from_json, elem_to_json, Mat};
pub use subspace::{Echelon, Subspace};

use crate::error::{Error, Result};
use crate::field::{poly_factor, Elem, ExtField, FiniteField, Gf, Poly};
use rand::Rng;

/// `{x : x·M = 0}`.
pub fn nullspace(m: &Mat) -> Subspace {
    let f = m.field();
    Subspace::from_rows(f, m.rows(), &right_kernel(&m.transpose()))
}

/// Basis of `{y : M·yᵀ = 0}` (one vector per free column of the RREF).
pub fn right_kernel(m: &Mat) -> Vec<Vec<Elem>> {
    let f = m.field();
    let (r, _, piv) = m.rref();
    let n = m.cols();
    let mut is_piv = vec![false; n];
    for &p in &piv {
        is_piv[p] = true;
    }
    (0..n)
        .filter(|c| !is_piv[*c])
        .map(|c| {
            let mut v = vec![0; n];
            v[c] = 1;
            for (i, &p) in piv.iter().enumerate() {
                v[p] = f.neg_e(r.get(i, c));
            }
            v
        })
        .collect()
}

/// Some `Y` with `M·Y = B`, if the system is consistent.
pub fn solve_right(m: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(m.rows(), b.rows());
    let f = m.field();
    let n = m.cols();
    let mut aug = m.hstack(b);
    let piv = aug.rref_in_place();
    if piv.iter().any(|&p| p >= n) {
        return None;
    }
    let mut y = Mat::zero(f, n, b.cols());
    for (i, &p) in piv.iter().enumerate() {
        for j in 0..b.cols() {
            y.set(p, j, aug.get(i, n + j));
        }
    }
    Some(y)
}

/// Some `X` with `X·A = B`, if the system is consistent.
pub fn solve_left(a: &Mat, b: &Mat) -> Option<Mat> {
    solve_right(&a.transpose(), &b.transpose()).map(|y| y.transpose())
}

/// Some row vector `x` with `x·A = v`.
pub fn solve_vec(a: &Mat, v: &[Elem]) -> Option<Vec<Elem>> {
    let f = a.field();
    solve_left(a, &Mat::from_vec(f, 1, v.len(), v.to_vec())).map(|x| x.into_data())
}

/// Minimal polynomial of `m` relative to the unit `unit` of an algebra containing it:
/// least monic `g` with `g(m) = 0` where `m^0 = unit`.
pub fn minpoly_in(m: &Mat, unit: &Mat) -> Poly<Elem> {
    let f = m.field();
    let nn = m.rows() * m.cols();
    let maxd = nn + 1;
    let width = nn + maxd + 1;
    let mut ech: Vec<(Vec<Elem>, usize)> = Vec::new();
    let mut power = unit.clone();
    for d in 0..=maxd {
        let mut v = vec![0; width];
        v[..nn].copy_from_slice(power.data());
        v[nn + d] = 1;
        for (row, p) in &ech {
            let c = v[*p];
            if c != 0 {
                mat_axpy(f, &mut v, f.neg_e(c), row);
            }
        }
        match v[..nn].iter().position(|x| *x != 0) {
            None => return Poly::new(f, v[nn..nn + d + 1].to_vec()),
            Some(p) => {
                let inv = f.inv_e(v[p]).unwrap();
                v.iter_mut().for_each(|x| *x = f.mul_e(*x, inv));
                ech.push((v, p));
            }
        }
        power = &power * m;
    }
    unreachable!("Cayley-Hamilton bounds the degree")
}

fn mat_axpy(f: &Gf, dst: &mut [Elem], c: Elem, src: &[Elem]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if *s != 0 {
            *d = f.add_e(*d, f.mul_e(c, *s));
        }
    }
}

/// Least-degree monic `g` with `g(M) = 0`.
pub fn minimal_polynomial(m: &Mat) -> Poly<Elem> {
    minpoly_in(m, &Mat::identity(m.field(), m.rows()))
}

/// Evaluate `g(m)` with `m^0 = unit`.
pub fn eval_poly_in(g: &Poly<Elem>, m: &Mat, unit: &Mat) -> Mat {
    let f = m.field();
    let mut acc = Mat::zero(f, m.rows(), m.cols());
    for c in g.coeffs().iter().rev() {
        acc = &(&acc * m) + &unit.scale(*c);
    }
    acc
}

/// Characteristic polynomial `det(xI - M)` via Hessenberg reduction.
pub fn charpoly(m: &Mat) -> Poly<Elem> {
    let f = m.field().clone();
    let n = m.rows();
    let mut h = m.clone();
    for c in 0..n.saturating_sub(2) {
        let m1 = c + 1;
        let Some(piv) = (m1..n).find(|&i| h.get(i, c) != 0) else { continue };
        if piv != m1 {
            for j in 0..n {
                let (a, b) = (h.get(piv, j), h.get(m1, j));
                h.set(piv, j, b);
                h.set(m1, j, a);
            }
            for i in 0..n {
                let (a, b) = (h.get(i, piv), h.get(i, m1));
                h.set(i, piv, b);
                h.set(i, m1, a);
            }
        }
        let inv = f.inv_e(h.get(m1, c)).unwrap();
        for i in m1 + 1..n {
            let u = f.mul_e(h.get(i, c), inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = f.sub_e(h.get(i, j), f.mul_e(u, h.get(m1, j)));
                h.set(i, j, v);
            }
            for r in 0..n {
                let v = f.add_e(h.get(r, m1), f.mul_e(u, h.get(r, i)));
                h.set(r, m1, v);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}, 0-indexed.
    let mut ps: Vec<Poly<Elem>> = vec![Poly::one(&f)];
    for k in 0..n {
        let lin = Poly::new(&f, vec![f.neg_e(h.get(k, k)), 1]);
        let mut pk = lin.mul(&f, &ps[k]);
        let mut prod = 1;
        for i in (0..k).rev() {
            prod = f.mul_e(prod, h.get(i + 1, i));
            let coef = f.mul_e(h.get(i, k), prod);
            if coef != 0 {
                pk = pk.sub(&f, &ps[i].scale(&f, &coef));
            }
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

/// The multiplicative identity of the algebra spanned by `basis`, if it has one.
pub fn algebra_unit(basis: &[Mat]) -> Option<Mat> {
    let first = basis.first()?;
    let f = first.field();
    let (r, c) = (first.rows(), first.cols());
    let d = basis.len();
    // Unknown coefficients x with (Σ x_i b_i)·b_j = b_j for all j.
    let mut a = Mat::zero(f, d, r * c * d);
    let mut rhs = Vec::with_capacity(r * c * d);
    for j in 0..d {
        rhs.extend_from_slice(basis[j].data());
    }
    for i in 0..d {
        let mut row = Vec::with_capacity(r * c * d);
        for bj in basis {
            row.extend_from_slice((&basis[i] * bj).data());
        }
        a.row_mut(i).copy_from_slice(&row);
    }
    let x = solve_vec(&a, &rhs)?;
    let mut e = Mat::zero(f, r, c);
    for (xi, bi) in x.iter().zip(basis) {
        e = &e + &bi.scale(*xi);
    }
    Some(e)
}

/// A generator of a field presented as a matrix algebra, with its minimal polynomial.
pub fn field_generator<R: Rng + ?Sized>(basis: &[Mat], unit: &Mat, rng: &mut R) -> Result<(Mat, Poly<Elem>)> {
    let f = unit.field();
    let d = basis.len();
    if d == 1 {
        return Ok((unit.clone(), Poly::x(f)));
    }
    for _ in 0..64 {
        let mut a = Mat::zero(f, unit.rows(), unit.cols());
        for b in basis {
            a = &a + &b.scale(f.random(rng));
        }
        let g = minpoly_in(&a, unit);
        if g.degree() == Some(d) {
            return Ok((a, g));
        }
    }
    Err(Error::RandomnessExhausted("field generator"))
}

/// Some `τ` in the algebra spanned by `basis` with `g(τ) = 0`.
pub fn root_in_algebra<R: Rng + ?Sized>(g: &Poly<Elem>, basis: &[Mat], rng: &mut R) -> Result<Mat> {
    let unit = algebra_unit(basis).ok_or(Error::NoRoot)?;
    let f = unit.field().clone();
    let (a, mg) = field_generator(basis, &unit, rng).map_err(|_| Error::NoRoot)?;
    if !crate::field::is_irreducible(&f, &mg) {
        return Err(Error::NoRoot);
    }
    let ext = ExtField::new(&f, &mg);
    let gl = g.map(&ext, |c| ext.embed(*c));
    let mut found: Vec<Vec<Elem>> = poly_factor(&ext, &gl, rng)
        .into_iter()
        .filter(|(p, _)| p.degree() == Some(1))
        .map(|(p, _)| ext.neg(&p.coeffs()[0]))
        .collect();
    found.sort();
    let r = found.into_iter().next().ok_or(Error::NoRoot)?;
    let tau = eval_poly_in(&Poly::new(&f, r), &a, &unit);
    debug_assert!(eval_poly_in(g, &tau, &unit).is_zero());
    Ok(tau)
}
