//! Matrix units and the division ring of one simple factor `eSe ≅ M_d(Δ)`.

use super::idempotents::{primitive_idempotent, sandwich, BUDGET};
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField, Poly};
use crate::matlin::{solve_vec, Mat, Subspace};
use rand::Rng;

/// A simple factor `eSe` with explicit matrix units `ε_ij` and `Δ = ε_11·S·ε_11 = k[ρ]`.
#[derive(Clone, Debug)]
pub struct SimpleFactor {
    pub e: BlockDiag,
    pub d: usize,
    pub m: usize,
    /// `units[i][j] = ε_ij`.
    pub units: Vec<Vec<BlockDiag>>,
    /// Generator of `Δ` over the base field.
    pub rho: BlockDiag,
    pub rho_minpoly: Poly<Elem>,
    /// A generator of `Δ^×`.
    pub omega: BlockDiag,
    /// `ρ^0 = ε_11, ρ, …, ρ^{m-1}`.
    pub rho_powers: Vec<BlockDiag>,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `x^n` inside a corner algebra with unit `e` (`x^0 = e`).
pub(crate) fn pow_rel(x: &BlockDiag, e: &BlockDiag, n: u64) -> BlockDiag {
    if n == 0 {
        e.clone()
    } else {
        x.pow(n)
    }
}

impl SimpleFactor {
    /// `q^m`, the order of `Δ`.
    pub fn delta_order(&self) -> u64 {
        (self.e.field().q() as u64).pow(self.m as u32)
    }

    pub fn eps(&self, i: usize) -> &BlockDiag {
        &self.units[i][i]
    }

    /// Coefficients of `δ ∈ Δ` in the basis `ρ^0, …, ρ^{m-1}`.
    pub fn delta_coords(&self, alg: &MatAlgebra, delta: &BlockDiag) -> Vec<Elem> {
        let f = alg.field();
        let rows: Vec<Vec<Elem>> = self.rho_powers.iter().map(|x| x.flatten()).collect();
        let b = Mat::from_rows(f, &rows);
        solve_vec(&b, &delta.flatten()).expect("element of Δ")
    }

    pub fn delta_from_coords(&self, alg: &MatAlgebra, c: &[Elem]) -> BlockDiag {
        let mut acc = alg.zero();
        for (ci, x) in c.iter().zip(&self.rho_powers) {
            acc = acc.add(&x.scale(*ci));
        }
        acc
    }

    /// `eSe → M_d(Δ)`: entries `ε_1i·b·ε_j1`.
    pub fn to_matrix(&self, b: &BlockDiag) -> Vec<Vec<BlockDiag>> {
        (0..self.d)
            .map(|i| (0..self.d).map(|j| self.units[0][i].mul(b).mul(&self.units[j][0])).collect())
            .collect()
    }

    /// `M_d(Δ) → eSe`: `Σ ε_i1·δ_ij·ε_1j`.
    pub fn from_matrix(&self, alg: &MatAlgebra, m: &[Vec<BlockDiag>]) -> BlockDiag {
        let mut acc = alg.zero();
        for i in 0..self.d {
            for j in 0..self.d {
                acc = acc.add(&self.units[i][0].mul(&m[i][j]).mul(&self.units[0][j]));
            }
        }
        acc
    }
}

/// Parameters `(d, m)` and matrix units for the simple factor `eSe`.
pub fn simple_params<R: Rng + ?Sized>(
    alg: &MatAlgebra,
    s: &Subspace,
    e: &BlockDiag,
    rng: &mut R,
) -> Result<SimpleFactor> {
    let f = alg.field().clone();
    let b = sandwich(alg, e, s, e);
    let bb = alg.elements_of(&b);
    let m = alg.centralizer_in(&b, &bb).dim();
    let dim = b.dim();
    let d = (1..=dim).find(|d| d * d * m == dim).ok_or(Error::Input("factor is not simple".into()))?;

    let mut eps: Vec<BlockDiag> = Vec::with_capacity(d);
    let mut rest = e.clone();
    for _ in 0..d {
        let x = primitive_idempotent(alg, s, &rest, m, rng)?;
        rest = rest.sub(&x);
        eps.push(x);
    }
    debug_assert!(rest.is_zero());

    let mut row0 = vec![eps[0].clone()];
    let mut col0 = vec![eps[0].clone()];
    for j in 1..d {
        let u_space = sandwich(alg, &eps[0], s, &eps[j]);
        let u = alg.elements_of(&u_space).into_iter().next().ok_or(Error::Input("missing matrix unit".into()))?;
        let w = alg.elements_of(&sandwich(alg, &eps[j], s, &eps[0]));
        let rows: Vec<Vec<Elem>> = w.iter().map(|x| u.mul(x).flatten()).collect();
        let c = solve_vec(&Mat::from_rows(&f, &rows), &eps[0].flatten())
            .ok_or(Error::Input("matrix unit has no inverse".into()))?;
        let mut v = alg.zero();
        for (ci, x) in c.iter().zip(&w) {
            v = v.add(&x.scale(*ci));
        }
        row0.push(u);
        col0.push(v);
    }
    let units: Vec<Vec<BlockDiag>> =
        (0..d).map(|i| (0..d).map(|j| col0[i].mul(&row0[j])).collect()).collect();

    // Δ = ε_11·S·ε_11, a field of degree m.
    let e11 = units[0][0].clone();
    let delta = sandwich(alg, &e11, s, &e11);
    let dbasis = alg.elements_of(&delta);
    let mut gen = None;
    for x in dbasis.iter().cloned().chain((0..BUDGET).map(|_| alg.random_element(&delta, rng))) {
        let g = alg.minpoly_rel(&x, &e11);
        if g.degree() == Some(m) {
            gen = Some((x, g));
            break;
        }
    }
    let (rho, rho_minpoly) = gen.ok_or(Error::RandomnessExhausted("field generator"))?;
    let mut rho_powers = vec![e11.clone()];
    for _ in 1..m {
        let nxt = rho_powers.last().unwrap().mul(&rho);
        rho_powers.push(nxt);
    }

    // Primitive element of Δ^×: enumerate coefficient vectors in ρ-powers.
    let order = (f.q() as u64).pow(m as u32);
    let primes = prime_factors(order - 1);
    let q = f.q() as u64;
    let mut omega = None;
    for code in 1..order {
        let mut c = code;
        let mut x = alg.zero();
        for p in &rho_powers {
            x = x.add(&p.scale((c % q) as u32));
            c /= q;
        }
        if primes.iter().all(|r| pow_rel(&x, &e11, (order - 1) / r) != e11) {
            omega = Some(x);
            break;
        }
    }
    let omega = omega.ok_or(Error::Input("no primitive element".into()))?;
    let _ = f.order();
    Ok(SimpleFactor { e: e.clone(), d, m, units, rho, rho_minpoly, omega, rho_powers })
}
