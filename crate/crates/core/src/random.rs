//! Seeded random instances for the verification suites and the CLI.

use crate::adjoint::AlgebraPair;
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::bimap::Bimap;
use crate::field::{FiniteField, Gf, Poly};
use crate::matlin::Mat;
use rand::Rng;

pub fn random_mat<R: Rng + ?Sized>(f: &Gf, rows: usize, cols: usize, rng: &mut R) -> Mat {
    Mat::from_vec(f, rows, cols, (0..rows * cols).map(|_| f.random(rng)).collect())
}

/// A full bimap from `w` random slices (fewer when they are dependent).
pub fn random_bimap<R: Rng + ?Sized>(f: &Gf, a: usize, b: usize, w: usize, rng: &mut R) -> Bimap {
    let raw: Vec<Mat> = (0..w).map(|_| random_mat(f, a, b, rng)).collect();
    Bimap::make_full(f, a, b, &raw).expect("shapes agree").0
}

/// The envelope of `ngens` random pairs in `M_a × M_b`.
pub fn random_subring<R: Rng + ?Sized>(f: &Gf, a: usize, b: usize, ngens: usize, rng: &mut R) -> AlgebraPair {
    let gens: Vec<(Mat, Mat)> = (0..ngens).map(|_| (random_mat(f, a, a, rng), random_mat(f, b, b, rng))).collect();
    AlgebraPair::envelope(f, a, b, &gens)
}

/// The envelope of random sparse, mostly upper-triangular block matrices (so that
/// radicals are common).
pub fn random_envelope<R: Rng + ?Sized>(f: &Gf, dims: &[usize], ngens: usize, rng: &mut R) -> MatAlgebra {
    let gens: Vec<BlockDiag> = (0..ngens)
        .map(|_| {
            BlockDiag(
                dims.iter()
                    .map(|&n| {
                        let mut m = Mat::zero(f, n, n);
                        for i in 0..n {
                            for j in i..n {
                                if rng.gen_bool(0.5) {
                                    m.set(i, j, f.random(rng));
                                }
                            }
                        }
                        if n > 1 && rng.gen_bool(0.3) {
                            m.set(n - 1, 0, 1);
                        }
                        m
                    })
                    .collect(),
            )
        })
        .collect();
    MatAlgebra::envelope(f, dims, &gens)
}

/// A random subspace of `M_{a×b}` given by up to `max_dim` random spanning matrices.
pub fn random_matrix_space<R: Rng + ?Sized>(f: &Gf, a: usize, b: usize, max_dim: usize, rng: &mut R) -> Vec<Mat> {
    let d = rng.gen_range(1..=max_dim);
    let raw: Vec<Mat> = (0..d).map(|_| random_mat(f, a, b, rng)).collect();
    Bimap::make_full(f, a, b, &raw).expect("shapes agree").0.slices().to_vec()
}

/// A random polynomial of degree exactly `deg`.
pub fn random_poly<R: Rng + ?Sized>(f: &Gf, deg: usize, rng: &mut R) -> Poly<u32> {
    let mut c: Vec<u32> = (0..deg).map(|_| f.random(rng)).collect();
    c.push(rng.gen_range(1..f.q()));
    Poly::new(f, c)
}
