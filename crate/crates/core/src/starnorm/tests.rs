use super::*;
use crate::adjoint::star_involution;
use crate::bimap::fixture;
use crate::field::Gf;
use crate::oracle::brute_normalizer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(11)
}

fn mat(f: &Gf, rows: &[&[u32]]) -> Mat {
    Mat::from_rows(f, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

const CAP: usize = 1_000_000;

fn single(f: &Gf, n: usize, gens: &[Mat]) -> MatAlgebra {
    let g: Vec<BlockDiag> = gens.iter().map(|m| BlockDiag(vec![m.clone()])).collect();
    MatAlgebra::envelope(f, &[n], &g)
}

/// `x ↦ P·xᵀ·P` with `P` the anti-diagonal permutation.
fn flip(x: &BlockDiag) -> BlockDiag {
    x.map(|m| {
        let n = m.rows();
        let mut out = Mat::zero(m.field(), n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, m.get(n - 1 - j, n - 1 - i));
            }
        }
        out
    })
}

fn upper_triangular(f: &Gf, n: usize) -> MatAlgebra {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut m = Mat::zero(f, n, n);
            m.set(i, j, 1);
            gens.push(m);
        }
    }
    single(f, n, &gens)
}

fn check(sa: &StarAlgebra, want: usize) {
    let mut r = rng();
    let g = star_normalizer(sa, &mut r, Caps::default()).unwrap();
    for x in &g.gens {
        assert!(commutes_with_star(sa, x));
    }
    let brute = brute_normalizer(&sa.alg, Some(sa), CAP).unwrap().order();
    assert_eq!(brute, want, "brute");
    assert_eq!(g.order, Some(BigUint::from(want)));
    assert_eq!(g.closure_order(sa.alg.field(), CAP).unwrap(), want);
}

#[test]
fn star_normalizer_matches_brute() {
    let p = star_involution(&fixture("sympl2-3").unwrap()).unwrap();
    check(&StarAlgebra::from_pair(&p).unwrap(), 48);
    let f = Gf::new(3, 1).unwrap();
    let sc = single(&f, 2, &[]);
    check(&StarAlgebra::from_fn(&sc, |x| x.clone()).unwrap(), 48);
    let diag = single(&f, 2, &[mat(&f, &[&[1, 0], &[0, 0]])]);
    check(&StarAlgebra::from_fn(&diag, flip).unwrap(), 8);
    check(&StarAlgebra::from_fn(&upper_triangular(&f, 2), flip).unwrap(), 4);
}

#[test]
fn star_normalizer_with_skew_radical() {
    let f = Gf::new(3, 1).unwrap();
    let ut = upper_triangular(&f, 3);
    let sa = StarAlgebra::from_fn(&ut, flip).unwrap();
    let mut r = rng();
    let w = Wedderburn::decompose(&ut, Some(&|x: &BlockDiag| sa.apply(x)), &mut r).unwrap();
    let (_, jm) = eigen_split(&sa, &w.j);
    assert!(jm.dim() > 0);
    for g in jminus_unipotents(&sa, &jm).unwrap() {
        assert!(g.mul(&sa.apply(&g)).is_identity());
    }
    let want = brute_normalizer(&ut, Some(&sa), CAP).unwrap().order();
    let g = star_normalizer(&sa, &mut r, Caps::default()).unwrap();
    assert_eq!(g.order, Some(BigUint::from(want)));
    assert_eq!(g.closure_order(&f, CAP).unwrap(), want);
}

#[test]
fn unipotent_square_root() {
    // z² ≠ 0 = z³ over GF(5): z + √(1+z²) = 1 + z + 3z².
    let f = Gf::new(5, 1).unwrap();
    let z = BlockDiag(vec![mat(&f, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])]);
    let one = BlockDiag::identity(&f, &[3]);
    let z2 = z.mul(&z);
    let g = z.add(&unipotent_sqrt(&one.add(&z2), 5));
    assert_eq!(g, one.add(&z).add(&z2.scale(3)));
}

#[test]
fn invariant_complement_and_idempotents() {
    let f = Gf::new(3, 1).unwrap();
    let ut = upper_triangular(&f, 3);
    let sa = StarAlgebra::from_fn(&ut, flip).unwrap();
    let j = crate::algdecomp::radical(&ut);
    let s = star_invariant_complement(&sa, &j).unwrap();
    for x in ut.elements_of(&s) {
        assert!(s.contains(&sa.apply(&x).flatten()));
    }
    let mut r = rng();
    // E11 and E33 are exchanged; E22 is fixed.
    let es = star_idempotents(&sa, &s, &mut r).unwrap();
    assert_eq!(es.len(), 2);
    let f2 = Gf::new(2, 1).unwrap();
    let k = single(&f2, 1, &[]);
    let sk = StarAlgebra::from_fn(&k, |x| x.clone()).unwrap();
    assert_eq!(star_normalizer(&sk, &mut r, Caps::default()).unwrap_err(), Error::CharTwo);
}

#[test]
fn simple_types() {
    let mut r = rng();
    let caps = Caps::default();
    let p = star_involution(&fixture("sympl2-3").unwrap()).unwrap();
    let sa = StarAlgebra::from_pair(&p).unwrap();
    let t = star_simple_type(&sa, sa.alg.space(), &sa.alg.one(), &mut r, caps).unwrap();
    assert_eq!((t.kind, t.d, t.m, t.isom_order), (StarType::Symplectic, 2, 1, 24));
    assert_eq!(t.pseudo_order, 48);
    let f = Gf::new(3, 1).unwrap();
    let k = single(&f, 1, &[]);
    let sk = StarAlgebra::from_fn(&k, |x| x.clone()).unwrap();
    let t = star_simple_type(&sk, k.space(), &k.one(), &mut r, caps).unwrap();
    assert_eq!((t.kind, t.isom_order), (StarType::Orthogonal, 2));
    let diag = single(&f, 2, &[mat(&f, &[&[1, 0], &[0, 0]])]);
    let sd = StarAlgebra::from_fn(&diag, flip).unwrap();
    let t = star_simple_type(&sd, diag.space(), &diag.one(), &mut r, caps).unwrap();
    assert_eq!((t.kind, t.isom_order), (StarType::Exchange, 2));
}
