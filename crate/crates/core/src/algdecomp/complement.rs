//! Wedderburn–Malcev complements by quadratic lifting modulo `J^{2^t}`.

use crate::algebra::{flat_len, BlockDiag, MatAlgebra};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::matlin::{solve_vec, Echelon, Mat, Subspace};

/// Coordinates with respect to a basis of a subspace, via its pivot columns.
pub(crate) struct Coords {
    cols: Vec<usize>,
    inv: Mat,
}

impl Coords {
    pub(crate) fn new(alg: &MatAlgebra, basis: &[BlockDiag]) -> Coords {
        let f = alg.field();
        let rows: Vec<Vec<Elem>> = basis.iter().map(|x| x.flatten()).collect();
        let space = Subspace::from_rows(f, flat_len(alg.dims()), &rows);
        assert_eq!(space.dim(), basis.len(), "basis must be independent");
        let cols = space.pivots().to_vec();
        let sq: Vec<Vec<Elem>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        let inv = Mat::from_rows(f, &sq).inverse().expect("pivot minor is invertible");
        Coords { cols, inv }
    }

    /// Coordinates of an element assumed to lie in the span.
    pub(crate) fn of(&self, x: &BlockDiag) -> Vec<Elem> {
        let v = x.flatten();
        let sel: Vec<Elem> = self.cols.iter().map(|&c| v[c]).collect();
        self.inv.vec_mul(&sel)
    }
}

/// Quotient coordinates modulo a subspace (values at its free columns after reduction).
fn quotient(sub: &Subspace, free: &[usize], x: &BlockDiag) -> Vec<Elem> {
    let r = sub.reduce(&x.flatten());
    free.iter().map(|&c| r[c]).collect()
}

/// A complement subalgebra `S` with `A = J ⊕ S`. With `star`, the complement is also
/// required to satisfy `S* = S` (the involution must preserve `J`; odd characteristic).
pub fn wedderburn_complement(
    alg: &MatAlgebra,
    j: &Subspace,
    star: Option<&dyn Fn(&BlockDiag) -> BlockDiag>,
) -> Result<Subspace> {
    let f = alg.field().clone();
    if j.dim() == 0 {
        return Ok(alg.space().clone());
    }
    let jpow = alg.powers(j).ok_or(Error::Input("radical is not nilpotent".into()))?;
    let c = jpow.len();
    let len = flat_len(alg.dims());

    // Initial vector-space complement, preferring the identity.
    let mut ech = Echelon::new(&f, len);
    for v in j.basis_vecs() {
        ech.insert(v);
    }
    let mut s: Vec<BlockDiag> = Vec::new();
    for x in std::iter::once(alg.one()).chain(alg.basis()) {
        if ech.insert(x.flatten()) {
            s.push(x);
        }
    }
    let m = s.len();
    let jb = alg.elements_of(j);
    let mut full = s.clone();
    full.extend(jb.iter().cloned());
    let coords = Coords::new(alg, &full);
    // Structure constants of A/J and of the induced involution.
    let mut gamma = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for k in 0..m {
            gamma[i][k] = coords.of(&s[i].mul(&s[k]))[..m].to_vec();
        }
    }
    let beta: Option<Vec<Vec<Elem>>> = star.map(|st| (0..m).map(|i| coords.of(&st(&s[i]))[..m].to_vec()).collect());

    let combo = |coef: &[Elem], xs: &[BlockDiag]| -> BlockDiag {
        let mut acc = alg.zero();
        for (c, x) in coef.iter().zip(xs) {
            if *c != 0 {
                acc = acc.add(&x.scale(*c));
            }
        }
        acc
    };

    let mut r = 1;
    while r <= c {
        let jr = &jpow[r - 1];
        let j2r = if 2 * r <= c { jpow[2 * r - 1].clone() } else { Subspace::zero(&f, len) };
        let free = j2r.free_columns();
        let nf = free.len();
        // Unknowns: z_i ∈ J^r modulo J^{2r}, on a basis of a complement of J^{2r} in J^r.
        let mut e2 = Echelon::new(&f, len);
        for v in j2r.basis_vecs() {
            e2.insert(v);
        }
        let zb: Vec<BlockDiag> =
            alg.elements_of(jr).into_iter().filter(|x| e2.insert(x.flatten())).collect();
        let t = zb.len();
        let n_eq = m * m + if beta.is_some() { m } else { 0 };
        let mut sys = Mat::zero(&f, m * t, n_eq * nf);
        let mut rhs = vec![0; n_eq * nf];
        let add_to = |sys: &mut Mat, row: usize, eq: usize, v: &[Elem], coef: Elem| {
            for (q, x) in v.iter().enumerate() {
                if *x != 0 {
                    let col = eq * nf + q;
                    let old = sys.get(row, col);
                    sys.set(row, col, f.add_e(old, f.mul_e(coef, *x)));
                }
            }
        };
        let qz: Vec<Vec<Elem>> = zb.iter().map(|z| quotient(&j2r, &free, z)).collect();
        for i in 0..m {
            for k in 0..m {
                let eq = i * m + k;
                let err = s[i].mul(&s[k]).sub(&combo(&gamma[i][k], &s));
                for (qq, x) in quotient(&j2r, &free, &err).iter().enumerate() {
                    rhs[eq * nf + qq] = f.neg_e(*x);
                }
                for tt in 0..t {
                    // s_i·z_k
                    add_to(&mut sys, k * t + tt, eq, &quotient(&j2r, &free, &s[i].mul(&zb[tt])), 1);
                    // z_i·s_k
                    add_to(&mut sys, i * t + tt, eq, &quotient(&j2r, &free, &zb[tt].mul(&s[k])), 1);
                    // −Σ_l γ_ikl z_l
                    for l in 0..m {
                        let g = gamma[i][k][l];
                        if g != 0 {
                            add_to(&mut sys, l * t + tt, eq, &qz[tt], f.neg_e(g));
                        }
                    }
                }
            }
        }
        if let (Some(st), Some(beta)) = (star, &beta) {
            for i in 0..m {
                let eq = m * m + i;
                let err = st(&s[i]).sub(&combo(&beta[i], &s));
                for (qq, x) in quotient(&j2r, &free, &err).iter().enumerate() {
                    rhs[eq * nf + qq] = f.neg_e(*x);
                }
                for tt in 0..t {
                    add_to(&mut sys, i * t + tt, eq, &quotient(&j2r, &free, &st(&zb[tt])), 1);
                    for l in 0..m {
                        let b = beta[i][l];
                        if b != 0 {
                            add_to(&mut sys, l * t + tt, eq, &qz[tt], f.neg_e(b));
                        }
                    }
                }
            }
        }
        if rhs.iter().any(|x| *x != 0) {
            let x = solve_vec(&sys, &rhs).ok_or(Error::Input("complement lifting system is inconsistent".into()))?;
            for i in 0..m {
                let z = combo(&x[i * t..(i + 1) * t], &zb);
                s[i] = s[i].add(&z);
            }
        }
        r *= 2;
    }
    let sp = alg.span_of(&s);
    debug_assert!(MatAlgebra::from_space(&f, alg.dims(), sp.clone()).is_closed());
    Ok(sp)
}
