use super::*;
use crate::field::Gf;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mat(f: &Gf, rows: &[&[u32]]) -> Mat {
    Mat::from_rows(f, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn single(f: &Gf, gens: &[Mat]) -> MatAlgebra {
    let n = gens.first().map_or(2, |g| g.rows());
    let g: Vec<BlockDiag> = gens.iter().map(|m| BlockDiag(vec![m.clone()])).collect();
    MatAlgebra::envelope(f, &[n], &g)
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(7)
}

fn upper_triangular(f: &Gf) -> MatAlgebra {
    single(f, &[mat(f, &[&[1, 0], &[0, 0]]), mat(f, &[&[0, 1], &[0, 0]])])
}

/// `GF(4)` as the 2×2 companion algebra over `GF(2)`.
fn gf4(f: &Gf) -> MatAlgebra {
    single(f, &[mat(f, &[&[0, 1], &[1, 1]])])
}

#[test]
fn radical_examples() {
    let f = Gf::new(3, 1).unwrap();
    let m2 = single(&f, &[mat(&f, &[&[0, 1], &[0, 0]]), mat(&f, &[&[0, 0], &[1, 0]])]);
    assert_eq!(m2.dim(), 4);
    assert_eq!(radical(&m2).dim(), 0);
    let ut = upper_triangular(&f);
    let j = radical(&ut);
    assert_eq!(j.dim(), 1);
    assert!(j.contains(&BlockDiag(vec![mat(&f, &[&[0, 1], &[0, 0]])]).flatten()));
    // Over GF(4) the restriction of scalars is exercised.
    let f4 = Gf::new(2, 2).unwrap();
    let ut4 = upper_triangular(&f4);
    assert_eq!(radical(&ut4).dim(), 1);
    let m24 = single(&f4, &[mat(&f4, &[&[0, 1], &[0, 0]]), mat(&f4, &[&[0, 0], &[1, 0]])]);
    assert_eq!(radical(&m24).dim(), 0);
}

#[test]
fn envelope_examples() {
    let f = Gf::new(2, 1).unwrap();
    let e = MatAlgebra::envelope(&f, &[2, 1], &[BlockDiag(vec![mat(&f, &[&[0, 1], &[0, 0]]), mat(&f, &[&[0]])])]);
    assert_eq!(e.dim(), 2);
    let f3 = Gf::new(3, 1).unwrap();
    assert_eq!(single(&f3, &[mat(&f3, &[&[0, 1], &[1, 0]])]).dim(), 2);
    assert_eq!(MatAlgebra::envelope(&f3, &[2], &[]).dim(), 1);
}

#[test]
fn complement_examples() {
    let f = Gf::new(3, 1).unwrap();
    let ut = upper_triangular(&f);
    let j = radical(&ut);
    let s = wedderburn_complement(&ut, &j, None).unwrap();
    assert_eq!(s.dim(), 2);
    let sa = MatAlgebra::from_space(&f, &[2], s);
    assert!(sa.is_closed());
    assert!(sa.contains(&sa.one()));
    assert_eq!(radical(&sa).dim(), 0);
}

#[test]
fn idempotent_examples() {
    let f = Gf::new(2, 1).unwrap();
    let mut r = rng();
    let diag = single(&f, &[mat(&f, &[&[1, 0], &[0, 0]])]);
    let es = central_primitive_idempotents(&diag, diag.space(), &mut r).unwrap();
    assert_eq!(es.len(), 2);
    let scal = single(&f, &[]);
    assert_eq!(central_primitive_idempotents(&scal, scal.space(), &mut r).unwrap(), vec![scal.one()]);
    let g4 = gf4(&f);
    assert_eq!(central_primitive_idempotents(&g4, g4.space(), &mut r).unwrap(), vec![g4.one()]);
}

#[test]
fn simple_param_examples() {
    let mut r = rng();
    let f2 = Gf::new(2, 1).unwrap();
    let k = single(&f2, &[]);
    let p = simple_params(&k, k.space(), &k.one(), &mut r).unwrap();
    assert_eq!((p.d, p.m), (1, 1));
    let g4 = gf4(&f2);
    let p = simple_params(&g4, g4.space(), &g4.one(), &mut r).unwrap();
    assert_eq!((p.d, p.m), (1, 2));
    let f3 = Gf::new(3, 1).unwrap();
    let m2 = single(&f3, &[mat(&f3, &[&[0, 1], &[0, 0]]), mat(&f3, &[&[0, 0], &[1, 0]])]);
    let p = simple_params(&m2, m2.space(), &m2.one(), &mut r).unwrap();
    assert_eq!((p.d, p.m), (2, 1));
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let want = if j == k { p.units[i][l].clone() } else { m2.zero() };
                    assert_eq!(p.units[i][j].mul(&p.units[k][l]), want);
                }
            }
        }
    }
    // M_2(GF(4)) over GF(2) as 4×4 matrices: d = 2, m = 2.
    let c = mat(&f2, &[&[0, 1], &[1, 1]]);
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
    let m2f4 = single(&f2, &[blk(&c, &z, &z, &c), blk(&z, &i2, &z, &z), blk(&z, &z, &i2, &z)]);
    assert_eq!(m2f4.dim(), 8);
    let p = simple_params(&m2f4, m2f4.space(), &m2f4.one(), &mut r).unwrap();
    assert_eq!((p.d, p.m), (2, 2));
    // ω generates Δ^× (order 3).
    assert_ne!(p.omega, p.units[0][0]);
    assert_eq!(p.omega.pow(3), p.units[0][0]);
}

#[test]
fn layers_upper_triangular() {
    let f = Gf::new(3, 1).unwrap();
    let mut r = rng();
    let w = Wedderburn::decompose(&upper_triangular(&f), None, &mut r).unwrap();
    assert!(w.check().is_empty(), "{:?}", w.check());
    assert_eq!(w.c(), 1);
    let lay = w.layers();
    assert_eq!(lay.series[0][1].dim(), 1);
    assert!(lay.series[0][1].contains(&[0, 1]));
    assert_eq!(lay.x[0][0].dim() + lay.x[0][1].dim(), 2);
    // J = 0: one layer.
    let k = single(&f, &[]);
    let w = Wedderburn::decompose(&k, None, &mut r).unwrap();
    let lay = w.layers();
    assert_eq!(lay.c, 0);
    assert_eq!(lay.x[0][0].dim(), 2);
}

#[test]
fn field_isomorphism_examples() {
    let mut r = rng();
    // GF(9) twice: companion matrices of x²+1 and x²+x+2 on two blocks.
    let f = Gf::new(3, 1).unwrap();
    let c1 = mat(&f, &[&[0, 1], &[2, 0]]);
    let c2 = mat(&f, &[&[0, 1], &[1, 2]]);
    let z = Mat::zero(&f, 2, 2);
    let i = Mat::identity(&f, 2);
    let alg = MatAlgebra::envelope(&f, &[2, 2], &[BlockDiag(vec![c1.clone(), z.clone()]), BlockDiag(vec![z.clone(), c2.clone()])]);
    let src = alg.span_of(&[BlockDiag(vec![i.clone(), z.clone()]), BlockDiag(vec![c1, z.clone()])]);
    let dst = alg.span_of(&[BlockDiag(vec![z.clone(), i]), BlockDiag(vec![z.clone(), c2])]);
    let iso = field_isomorphism(&alg, &src, &dst, None, &mut r).unwrap();
    let es = alg.elements_of(&src);
    // Exhaustive homomorphism check over all 9 source elements.
    let all: Vec<BlockDiag> = (0..9u32).map(|c| es[0].scale(c % 3).add(&es[1].scale(c / 3))).collect();
    for x in &all {
        for y in &all {
            assert_eq!(iso.apply(&x.add(y)).unwrap(), iso.apply(x).unwrap().add(&iso.apply(y).unwrap()));
            assert_eq!(iso.apply(&x.mul(y)).unwrap(), iso.apply(x).unwrap().mul(&iso.apply(y).unwrap()));
        }
    }
    let f2 = Gf::new(2, 1).unwrap();
    let k = MatAlgebra::envelope(&f2, &[1, 2], &[BlockDiag(vec![mat(&f2, &[&[1]]), Mat::zero(&f2, 2, 2)])]);
    let a = k.span_of(&[BlockDiag(vec![mat(&f2, &[&[1]]), Mat::zero(&f2, 2, 2)])]);
    let g4 = k.span_of(&[BlockDiag(vec![mat(&f2, &[&[0]]), Mat::identity(&f2, 2)]), BlockDiag(vec![mat(&f2, &[&[0]]), mat(&f2, &[&[0, 1], &[1, 1]])])]);
    assert_eq!(field_isomorphism(&k, &a, &g4, None, &mut r).unwrap_err(), Error::DegreeMismatch(1, 2));
}

#[test]
fn idempotent_swap() {
    let f = Gf::new(3, 1).unwrap();
    let mut r = rng();
    let diag = single(&f, &[mat(&f, &[&[1, 0], &[0, 0]])]);
    let w = Wedderburn::decompose(&diag, None, &mut r).unwrap();
    let lay = w.layers();
    assert_eq!(idempotent_equivalent(&w, &lay, 0, 0, &mut r).unwrap(), Some(diag.one()));
    let g = idempotent_equivalent(&w, &lay, 0, 1, &mut r).unwrap().unwrap();
    let gi = g.inverse().unwrap();
    assert_eq!(gi.mul(&w.factors[0].e).mul(&g), w.factors[1].e);
    // k × GF(4): degrees differ.
    let f2 = Gf::new(2, 1).unwrap();
    let mut m = Mat::zero(&f2, 3, 3);
    m.set_block(1, 1, &mat(&f2, &[&[0, 1], &[1, 1]]));
    let alg = single(&f2, &[m]);
    let w = Wedderburn::decompose(&alg, None, &mut r).unwrap();
    assert_eq!(w.factors.len(), 2);
    let lay = w.layers();
    assert_eq!(idempotent_equivalent(&w, &lay, 0, 1, &mut r).unwrap(), None);
}

#[test]
fn random_envelopes_satisfy_invariants() {
    use rand::Rng;
    let mut r = rng();
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let f = Gf::new(p, k).unwrap();
        for trial in 0..6 {
            let dims: Vec<usize> = if trial % 2 == 0 { vec![3] } else { vec![2, 2] };
            let ngens = r.gen_range(1..=2);
            let gens: Vec<BlockDiag> = (0..ngens)
                .map(|_| {
                    BlockDiag(
                        dims.iter()
                            .map(|&n| {
                                // Sparse upper-triangular-ish generators keep a radical around.
                                let mut m = Mat::zero(&f, n, n);
                                for i in 0..n {
                                    for j in i..n {
                                        if r.gen_bool(0.5) {
                                            m.set(i, j, r.gen_range(0..f.q()));
                                        }
                                    }
                                }
                                if r.gen_bool(0.3) {
                                    m.set(n - 1, 0, 1);
                                }
                                m
                            })
                            .collect(),
                    )
                })
                .collect();
            let alg = MatAlgebra::envelope(&f, &dims, &gens);
            let w = Wedderburn::decompose(&alg, None, &mut r).unwrap();
            let bad = w.check();
            assert!(bad.is_empty(), "GF({p}^{k}) trial {trial}: {bad:?}");
        }
    }
}
