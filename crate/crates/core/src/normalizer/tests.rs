use super::*;
use crate::algdecomp::Wedderburn;
use crate::field::Gf;
use crate::oracle::brute_normalizer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: usize = 1_000_000;

fn mat(f: &Gf, rows: &[&[u32]]) -> Mat {
    Mat::from_rows(f, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn pair_env(f: &Gf, n: usize, gens: &[Mat]) -> MatAlgebra {
    let g: Vec<BlockDiag> = gens.iter().map(|m| BlockDiag(vec![m.clone(), m.clone()])).collect();
    MatAlgebra::envelope(f, &[n, n], &g)
}

/// `{(X, X) : X = [[α, Z], [0, β]], Z ∈ W}`.
fn block_algebra(f: &Gf, a: usize, b: usize, w: &[Mat]) -> MatAlgebra {
    let n = a + b;
    let mut gens = Vec::new();
    let mut e = Mat::zero(f, n, n);
    e.set_block(0, 0, &Mat::identity(f, a));
    gens.push(BlockDiag(vec![e.clone(), e]));
    for z in w {
        let mut x = Mat::zero(f, n, n);
        x.set_block(0, a, z);
        gens.push(BlockDiag(vec![x.clone(), x]));
    }
    MatAlgebra::envelope(f, &[n, n], &gens)
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(5)
}

#[test]
fn normalizes_examples() {
    let f = Gf::new(3, 1).unwrap();
    let ut = crate::adjoint::AlgebraPair::envelope(&f, 2, 2, &[(mat(&f, &[&[0, 1], &[0, 0]]), mat(&f, &[&[0, 1], &[0, 0]]))]);
    let i = Mat::identity(&f, 2);
    let swap = mat(&f, &[&[0, 1], &[1, 0]]);
    assert!(normalizes(&i, &i, &ut).unwrap());
    assert!(!normalizes(&swap, &i, &ut).unwrap());
    let sc = crate::adjoint::AlgebraPair::envelope(&f, 2, 2, &[]);
    assert!(normalizes(&swap, &mat(&f, &[&[1, 1], &[0, 1]]), &sc).unwrap());
    assert_eq!(normalizes(&Mat::zero(&f, 2, 2), &i, &sc).unwrap_err(), Error::Singular);
}

#[test]
fn unipotent_examples() {
    let f = Gf::new(3, 1).unwrap();
    let mut r = rng();
    let sc = pair_env(&f, 2, &[]);
    let w = Wedderburn::decompose(&sc, None, &mut r).unwrap();
    assert!(unipotent_generators(&sc, &w.jpow).is_empty());
    let ut = pair_env(&f, 2, &[mat(&f, &[&[0, 1], &[0, 0]])]);
    let w = Wedderburn::decompose(&ut, None, &mut r).unwrap();
    let u = unipotent_generators(&ut, &w.jpow);
    assert_eq!(u.len(), 1);
    let e12 = mat(&f, &[&[1, 1], &[0, 1]]);
    assert_eq!(u.gens[0], BlockDiag(vec![e12.clone(), e12]));
    // GF(4): a GF(2)-basis of J is needed to generate 1 + J.
    let f4 = Gf::new(2, 2).unwrap();
    let ut4 = pair_env(&f4, 2, &[mat(&f4, &[&[0, 1], &[0, 0]])]);
    let w = Wedderburn::decompose(&ut4, None, &mut r).unwrap();
    let u = unipotent_generators(&ut4, &w.jpow);
    assert_eq!(u.closure_order(&f4, CAP).unwrap(), 4);
}

fn check_nsj(alg: &MatAlgebra) -> usize {
    let mut r = rng();
    let f = alg.field().clone();
    let w = Wedderburn::decompose(alg, None, &mut r).unwrap();
    let lay = w.layers();
    let g = nsj_generators(&w, &lay, &mut r).unwrap();
    let order = g.order.clone().unwrap();
    let closed = g.closure_order(&f, CAP).unwrap();
    assert_eq!(BigUint::from(closed), order, "formula vs closure");
    // Every generator normalizes S and preserves the layers.
    for x in &g.gens {
        let xi = x.inverse().unwrap();
        assert_eq!(conjugate_space(alg, x, &xi, &w.s), w.s);
        for (b, ls) in lay.series.iter().enumerate() {
            for l in ls {
                assert_eq!(l.image(&x.0[b]), *l);
            }
        }
    }
    closed
}

#[test]
fn nsj_examples() {
    let f2 = Gf::new(2, 1).unwrap();
    assert_eq!(check_nsj(&pair_env(&f2, 2, &[])), 36);
    let c = mat(&f2, &[&[0, 1], &[1, 1]]);
    let gf4 = pair_env(&f2, 2, &[c]);
    assert_eq!(check_nsj(&gf4), 18);
    let f3 = Gf::new(3, 1).unwrap();
    check_nsj(&pair_env(&f3, 2, &[mat(&f3, &[&[0, 1], &[0, 0]])]));
    check_nsj(&pair_env(&f3, 2, &[mat(&f3, &[&[1, 0], &[0, 0]])]));
    // Two isomorphic factors on a single block: the swap is needed.
    let single = MatAlgebra::envelope(&f3, &[2], &[BlockDiag(vec![mat(&f3, &[&[1, 0], &[0, 0]])])]);
    assert_eq!(check_nsj(&single), 8);
    // M_2(GF(4)) over GF(2) on k^4.
    let z = Mat::zero(&f2, 2, 2);
    let i2 = Mat::identity(&f2, 2);
    let blk = |a: &Mat, b: &Mat, cc: &Mat, d: &Mat| {
        let mut m = Mat::zero(&f2, 4, 4);
        m.set_block(0, 0, a);
        m.set_block(0, 2, b);
        m.set_block(2, 0, cc);
        m.set_block(2, 2, d);
        m
    };
    let c = mat(&f2, &[&[0, 1], &[1, 1]]);
    let m2f4 = MatAlgebra::envelope(
        &f2,
        &[4],
        &[BlockDiag(vec![blk(&c, &z, &z, &c)]), BlockDiag(vec![blk(&z, &i2, &z, &z)]), BlockDiag(vec![blk(&z, &z, &i2, &z)])],
    );
    // ΓL_2(4) modulo nothing: |GL_2(4)|·|GF(4)^×|/|GF(4)^×|·2 = 360.
    assert_eq!(check_nsj(&m2f4), 360);
}

fn check_normalizer(alg: &MatAlgebra) -> usize {
    let mut r = rng();
    let f = alg.field().clone();
    let g = normalizer_of(alg, &mut r, Caps::default()).unwrap();
    for x in &g.gens {
        assert!(normalizes_internal(alg, x).unwrap());
    }
    let closed = g.closure_order(&f, CAP).unwrap();
    assert_eq!(g.order, Some(BigUint::from(closed)));
    let brute = brute_normalizer(alg, None, CAP).unwrap().order();
    assert_eq!(closed, brute);
    closed
}

#[test]
fn normalizer_examples() {
    let f2 = Gf::new(2, 1).unwrap();
    assert_eq!(check_normalizer(&pair_env(&f2, 2, &[])), 36);
    let z = Mat::zero(&f2, 2, 2);
    let (e12, e21) = (mat(&f2, &[&[0, 1], &[0, 0]]), mat(&f2, &[&[0, 0], &[1, 0]]));
    let full = MatAlgebra::envelope(
        &f2,
        &[2, 2],
        &[
            BlockDiag(vec![e12.clone(), z.clone()]),
            BlockDiag(vec![e21.clone(), z.clone()]),
            BlockDiag(vec![z.clone(), e12.clone()]),
            BlockDiag(vec![z, e21.clone()]),
        ],
    );
    assert_eq!(full.dim(), 8);
    assert_eq!(check_normalizer(&full), 36);
    // The diagonal copy of M_2: Q is tied to P up to scalars.
    assert_eq!(check_normalizer(&pair_env(&f2, 2, &[e12, e21])), 6);
    check_normalizer(&pair_env(&f2, 2, &[mat(&f2, &[&[0, 1], &[1, 1]])]));
    let f3 = Gf::new(3, 1).unwrap();
    check_normalizer(&pair_env(&f3, 2, &[mat(&f3, &[&[0, 1], &[0, 0]])]));
    check_normalizer(&MatAlgebra::envelope(&f2, &[3], &[BlockDiag(vec![mat(&f2, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])])]));
}

#[test]
fn block_algebra_sympl2_2() {
    let f = Gf::new(2, 1).unwrap();
    let alg = block_algebra(&f, 2, 2, &[mat(&f, &[&[0, 1], &[1, 0]])]);
    assert_eq!(alg.dim(), 3);
    let mut r = rng();
    let w = Wedderburn::decompose(&alg, None, &mut r).unwrap();
    assert_eq!(w.j.dim(), 1);
    assert_eq!(w.s.dim(), 2);
    check_normalizer(&alg);
}
