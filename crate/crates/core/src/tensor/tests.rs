use super::*;
use crate::bimap::fixture;
use crate::field::Gf;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn scalars(f: &Gf, a: usize, b: usize) -> AlgebraPair {
    AlgebraPair::envelope(f, a, b, &[])
}

fn random_mat<R: Rng>(f: &Gf, n: usize, rng: &mut R) -> Mat {
    Mat::from_vec(f, n, n, (0..n * n).map(|_| f.random(rng)).collect())
}

#[test]
fn tensor_examples() {
    let f2 = Gf::new(2, 1).unwrap();
    assert_eq!(tensor_over(&scalars(&f2, 2, 2)).dim(), 4);
    let adj = adjoint_algebra(&fixture("sympl2-3").unwrap());
    let t = tensor_over(&adj);
    assert_eq!(t.dim(), 1);
    assert_eq!(t.relations.dim(), 3);
    let f3 = Gf::new(3, 1).unwrap();
    let e = |i| Mat::unit(&f3, 2, 2, i, i);
    let diag = AlgebraPair::new(&f3, 2, 2, vec![(e(0), e(0)), (e(1), e(1))]).unwrap();
    assert_eq!(tensor_over(&diag).dim(), 2);
}

#[test]
fn tensor_is_mid_linear() {
    let adj = adjoint_algebra(&fixture("sym2-3").unwrap());
    let t = tensor_over(&adj);
    let f = adj.field();
    let basis = |n: usize, i: usize| {
        let mut v = vec![0u32; n];
        v[i] = 1;
        v
    };
    for (x, y) in adj.pairs() {
        for i in 0..2 {
            for j in 0..2 {
                let ux = x.vec_mul(&basis(2, i));
                let vy = y.transpose().vec_mul(&basis(2, j));
                assert_eq!(t.bimap.eval(&ux, &basis(2, j)), t.bimap.eval(&basis(2, i), &vy));
            }
        }
    }
    assert_eq!(f.q(), 3);
}

#[test]
fn exterior_examples() {
    let f3 = Gf::new(3, 1).unwrap();
    assert_eq!(exterior_over(&scalars(&f3, 2, 2), true).unwrap().w(), 1);
    assert_eq!(exterior_over(&scalars(&f3, 3, 3), true).unwrap().w(), 3);
    assert_eq!(exterior_over(&scalars(&f3, 3, 3), false).unwrap().w(), 6);
    let adj = adjoint_algebra(&fixture("sympl2-3").unwrap());
    let ext = exterior_over(&adj, true).unwrap();
    assert_eq!(ext.w(), 1);
    assert!(ext.is_alternating());
    let f2 = Gf::new(2, 1).unwrap();
    assert_eq!(exterior_over(&scalars(&f2, 2, 2), false).unwrap_err(), Error::CharTwo);
    assert_eq!(exterior_over(&scalars(&f2, 2, 3), true).unwrap_err(), Error::NotSquare);
    // Alternating, not merely antisymmetric, in characteristic 2.
    let ext2 = exterior_over(&scalars(&f2, 3, 3), true).unwrap();
    assert_eq!(ext2.w(), 3);
    for i in 0..3 {
        let mut v = vec![0u32; 3];
        v[i] = 1;
        assert!(ext2.eval(&v, &v).iter().all(|x| *x == 0));
    }
}

#[test]
fn induced_map_examples() {
    let bm = fixture("heis-3").unwrap();
    let sc = scalars(bm.field(), bm.a(), bm.b());
    let (m, _) = induced_map(&bm, &sc).unwrap();
    assert_eq!(m, bm.circ_hat());
    let s = fixture("sympl2-3").unwrap();
    let (m, ker) = induced_map(&s, &adjoint_algebra(&s)).unwrap();
    assert_eq!((m.rows(), m.cols()), (1, 1));
    assert!(m.is_invertible());
    assert_eq!(ker.dim(), 0);
    // ⊗_S itself induces an isomorphism.
    let t = tensor_over(&adjoint_algebra(&fixture("sym2-3").unwrap()));
    let (m, _) = induced_map(&t.bimap, &t.s).unwrap();
    assert!(m.is_invertible());
    let f = s.field();
    let bad = AlgebraPair::new(f, 2, 2, vec![(Mat::unit(f, 2, 2, 0, 0), Mat::zero(f, 2, 2))]).unwrap();
    assert_eq!(induced_map(&s, &bad).unwrap_err(), Error::NotAdjoint);
}

#[test]
fn tensor_product_recognition() {
    for q in [2, 3, 4] {
        assert!(is_tensor_product(&fixture(&format!("mult-{q}")).unwrap()));
        assert!(is_tensor_product(&fixture(&format!("sympl2-{q}")).unwrap()));
    }
    // k²⊗k² modulo u⊗v − v⊗u: Adj is scalars, 4 ≠ 3.
    let f = Gf::new(3, 1).unwrap();
    let rel = Subspace::from_rows(&f, 4, &[vec![0, 1, 2, 0]]);
    let sym = Bimap::regular_mod(&f, 2, 2, &rel);
    assert_eq!(sym.w(), 3);
    assert_eq!(adjoint_algebra(&sym).dim(), 1);
    assert!(!is_tensor_product(&sym));
}

#[test]
fn closure_examples() {
    let f2 = Gf::new(2, 1).unwrap();
    let sc = scalars(&f2, 2, 2);
    assert!(galois_closure(&sc).same_span(&sc));
    for name in ["sympl2-3", "mult-4", "heis-3", "tensor-22-2", "sym2-5"] {
        let adj = adjoint_algebra(&fixture(name).unwrap());
        assert!(galois_closure(&adj).same_span(&adj), "{name}");
    }
}

fn random_subring<R: Rng>(f: &Gf, a: usize, b: usize, rng: &mut R) -> AlgebraPair {
    let n = rng.gen_range(0..=2);
    let gens: Vec<(Mat, Mat)> = (0..n).map(|_| (random_mat(f, a, rng), random_mat(f, b, rng))).collect();
    AlgebraPair::envelope(f, a, b, &gens)
}

#[test]
fn closure_is_idempotent_and_antitone() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [2, 3] {
        let f = Gf::new(q, 1).unwrap();
        for _ in 0..10 {
            let s = random_subring(&f, 2, 3, &mut rng);
            let c = galois_closure(&s);
            assert!(s.is_subalgebra_of(&c));
            assert!(galois_closure(&c).same_span(&c));
            assert!(tensor_over(&s).dim() >= tensor_over(&c).dim());
            // S ⊆ S' with S' = envelope(S ∪ {g}).
            let mut gens: Vec<(Mat, Mat)> = s.pairs().to_vec();
            gens.push((random_mat(&f, 2, &mut rng), random_mat(&f, 3, &mut rng)));
            let bigger = AlgebraPair::envelope(&f, 2, 3, &gens);
            assert!(tensor_over(&s).dim() >= tensor_over(&bigger).dim());
        }
    }
}

#[test]
fn galois_biconditional() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut hits = [0usize; 2];
    for q in [2, 3] {
        let f = Gf::new(q, 1).unwrap();
        for trial in 0..30 {
            let s = random_subring(&f, 2, 2, &mut rng);
            let t = tensor_over(&s);
            let bm = if trial % 2 == 0 && t.dim() > 0 {
                // A random quotient of ⊗_S.
                let extra: Vec<Vec<u32>> = (0..rng.gen_range(0..t.dim()))
                    .map(|_| (0..4).map(|_| f.random(&mut rng)).collect())
                    .collect();
                let k = t.relations.sum(&Subspace::from_rows(&f, 4, &extra));
                Bimap::regular_mod(&f, 2, 2, &k)
            } else {
                let raw: Vec<Mat> = (0..rng.gen_range(1..=3)).map(|_| random_mat(&f, 2, &mut rng)).collect();
                Bimap::make_full(&f, 2, 2, &raw).unwrap().0
            };
            let through = t.bimap.factors_through(&bm).is_some();
            let inside = s.is_subalgebra_of(&adjoint_algebra(&bm));
            assert_eq!(through, inside);
            hits[through as usize] += 1;
        }
    }
    assert!(hits[0] > 0 && hits[1] > 0);
}
