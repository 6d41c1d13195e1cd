use super::{named_algebras, star_instances, Tally};
use crate::adjoint::{adjoint_algebra, star_involution, StarAlgebra};
use crate::algdecomp::{field_isomorphism, radical, Wedderburn};
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::bimap::{fixture, Bimap};
use crate::field::{is_irreducible, poly_factor, FiniteField, Gf, Poly};
use crate::group::{closure, Caps};
use crate::matlin::{Mat, Subspace};
use crate::normalizer::{normalizer_of, normalizes};
use crate::oracle::{
    brute_autotopisms, brute_kernel, brute_normalizer, brute_pseudo_isometries, brute_subspace_stabilizer,
};
use crate::pgroup::{baer_bimap, pseudo_isometry_group, quadstab_solve, stabilizes, PGroupData, StabilizerProblem};
use crate::random::{random_bimap, random_envelope, random_mat, random_matrix_space, random_poly, random_subring};
use crate::starnorm::{eigen_split, jminus_unipotents, star_invariant_complement, star_normalizer};
use crate::tensor::{exterior_over, galois_closure, tensor_over};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
}

fn field(q: u64) -> Gf {
    Gf::of_order(q).expect("small prime power")
}

/// Factors re-multiply to the input; every factor is monic irreducible.
pub fn poly_factor_check(seed: u64, n: usize) -> Tally {
    Tally::timed("poly-factor", |t| {
        let mut r = rng(seed, 11);
        let qs = [2, 3, 4, 5, 7, 8, 9];
        for i in 0..n {
            let f = field(qs[i % qs.len()]);
            let g = random_poly(&f, r.gen_range(1..=8), &mut r);
            let fs = poly_factor(&f, &g, &mut r);
            let mut prod = Poly::constant(&f, *g.lead().unwrap());
            let mut irreducible = true;
            for (p, m) in &fs {
                irreducible &= is_irreducible(&f, p) && p.lead() == Some(&1);
                for _ in 0..*m {
                    prod = prod.mul(&f, p);
                }
            }
            t.record(prod == g && irreducible, || format!("GF({}): {:?}", f.q(), g.coeffs()));
        }
    })
}

fn companion(f: &Gf, g: &Poly<u32>) -> Mat {
    let m = g.degree().unwrap();
    let mut c = Mat::zero(f, m, m);
    for i in 0..m - 1 {
        c.set(i, i + 1, 1);
    }
    for j in 0..m {
        c.set(m - 1, j, f.neg_e(g.coeff(f, j)));
    }
    c
}

fn random_irreducible<R: Rng>(f: &Gf, m: usize, r: &mut R) -> Poly<u32> {
    loop {
        let g = random_poly(f, m, r).monic(f);
        if is_irreducible(f, &g) {
            return g;
        }
    }
}

/// Two presentations of `GF(q^m)` on separate blocks; the computed isomorphism is
/// checked on every pair of elements.
pub fn field_isomorphism_check(seed: u64, limit: Option<usize>) -> Tally {
    Tally::timed("field-isomorphism", |t| {
        let mut r = rng(seed, 12);
        let mut cases = Vec::new();
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for m in 2..=6u32 {
                if q.pow(m) <= 81 {
                    cases.push((q, m as usize));
                }
            }
        }
        cases.truncate(limit.unwrap_or(cases.len()));
        for (q, m) in cases {
            let f = field(q);
            let g1 = random_irreducible(&f, m, &mut r);
            let g2 = loop {
                let g = random_irreducible(&f, m, &mut r);
                if g != g1 || f.q().pow(m as u32) <= 4 {
                    break g;
                }
            };
            let (c1, c2) = (companion(&f, &g1), companion(&f, &g2));
            let z = Mat::zero(&f, m, m);
            let alg = MatAlgebra::envelope(&f, &[m, m], &[BlockDiag(vec![c1.clone(), z.clone()]), BlockDiag(vec![z.clone(), c2.clone()])]);
            let pw = |c: &Mat, left: bool| -> Vec<BlockDiag> {
                (0..m).map(|k| if left { BlockDiag(vec![c.pow(k as u64), z.clone()]) } else { BlockDiag(vec![z.clone(), c.pow(k as u64)]) }).collect()
            };
            let src = alg.span_of(&pw(&c1, true));
            let dst = alg.span_of(&pw(&c2, false));
            let ok = (|| -> crate::Result<bool> {
                let iso = field_isomorphism(&alg, &src, &dst, None, &mut r)?;
                let basis = alg.elements_of(&src);
                let qn = f.q() as usize;
                let elems: Vec<BlockDiag> = (0..qn.pow(m as u32))
                    .map(|code| {
                        let mut x = alg.zero();
                        let mut c = code;
                        for b in &basis {
                            x = x.add(&b.scale((c % qn) as u32));
                            c /= qn;
                        }
                        x
                    })
                    .collect();
                let mut img = HashMap::new();
                for x in &elems {
                    let y = iso.apply(x)?;
                    if !dst.contains(&y.flatten()) || (y.is_zero() != x.is_zero()) {
                        return Ok(false);
                    }
                    img.insert(x.clone(), y);
                }
                for x in &elems {
                    for y in &elems {
                        if img[&x.add(y)] != img[x].add(&img[y]) || img[&x.mul(y)] != img[x].mul(&img[y]) {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            })();
            t.record_result(ok, || format!("GF({q}^{m})"));
        }
    })
}

/// Kernels of meet and join against enumeration.
pub fn lattice_check(seed: u64, n: usize, caps: Caps) -> Tally {
    Tally::timed("lattice", |t| {
        let mut r = rng(seed, 4);
        for i in 0..n {
            let (q, a, b) = [(2, 2, 2), (2, 2, 3), (3, 2, 2)][i % 3];
            let f = field(q);
            let p = random_bimap(&f, a, b, r.gen_range(1..=3), &mut r);
            let o = random_bimap(&f, a, b, r.gen_range(1..=3), &mut r);
            let ok = (|| -> crate::Result<bool> {
                let meet = p.meet(&o)?;
                let join = p.join(&o)?;
                let cap = p.kernel().intersect(&o.kernel());
                let sum = p.kernel().sum(&o.kernel());
                let bm = Subspace::from_rows(&f, a * b, &brute_kernel(&meet, caps.filter)?);
                let bj = Subspace::from_rows(&f, a * b, &brute_kernel(&join, caps.filter)?);
                Ok(meet.kernel() == cap && bm == cap && join.kernel() == sum && bj == sum)
            })();
            t.record_result(ok, || format!("trial {i} over GF({q}), {a}×{b}"));
        }
    })
}

/// `Adj(⊗_{Adj(∘)}) = Adj(∘)`, idempotence of the closure, and
/// `S ⊆ Adj(∘) ⇔ ∘ factors through ⊗_S`.
pub fn galois_check(seed: u64, n: usize) -> Tally {
    Tally::timed("galois", |t| {
        let mut r = rng(seed, 3);
        let mut through = [0usize; 2];
        for i in 0..n {
            let q = [2, 3][i % 2];
            let f = field(q);
            let (a, b) = [(2, 2), (2, 3), (3, 2)][(i / 2) % 3];
            let bm = random_bimap(&f, a, b, r.gen_range(1..=3), &mut r);
            let adj = adjoint_algebra(&bm);
            t.record(galois_closure(&adj).same_span(&adj), || format!("closure of Adj, trial {i}"));
            let s = random_subring(&f, a, b, r.gen_range(0..=2), &mut r);
            let c = galois_closure(&s);
            t.record(s.is_subalgebra_of(&c) && galois_closure(&c).same_span(&c), || format!("idempotence, trial {i}"));
            // Biconditional on 2×2: half the targets are quotients of ⊗_S.
            let s = random_subring(&f, 2, 2, r.gen_range(0..=2), &mut r);
            let ts = tensor_over(&s);
            let target = if i % 2 == 0 && ts.dim() > 0 {
                let extra: Vec<Vec<u32>> =
                    (0..r.gen_range(0..ts.dim())).map(|_| (0..4).map(|_| f.random(&mut r)).collect()).collect();
                Bimap::regular_mod(&f, 2, 2, &ts.relations.sum(&Subspace::from_rows(&f, 4, &extra)))
            } else {
                random_bimap(&f, 2, 2, r.gen_range(1..=3), &mut r)
            };
            let thr = ts.bimap.factors_through(&target).is_some();
            let inside = s.is_subalgebra_of(&adjoint_algebra(&target));
            through[thr as usize] += 1;
            t.record(thr == inside, || format!("biconditional, trial {i}: factors={thr}, inside={inside}"));
        }
    })
}

/// Every brute-force autotopism normalizes `Adj(∘)`.
pub fn autotopism_containment_check(seed: u64, n: usize, caps: Caps) -> Tally {
    Tally::timed("autotopisms-normalize-adj", |t| {
        let mut r = rng(seed, 1);
        for i in 0..n {
            let (q, a, b) = [(2, 2, 2), (2, 2, 3), (3, 2, 2)][i % 3];
            let f = field(q);
            let bm = random_bimap(&f, a, b, r.gen_range(1..=3), &mut r);
            let adj = adjoint_algebra(&bm);
            let ok = (|| -> crate::Result<bool> {
                for g in brute_autotopisms(&bm, caps.filter)?.elements() {
                    if !normalizes(&g.0[0], &g.0[1], &adj)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            t.record_result(ok, || format!("trial {i} over GF({q}), {a}×{b}"));
        }
    })
}

/// `|Aut(⊗_S)| = |N(Adj(⊗_S))|` for random `S ⊆ M₂(GF(2)) × M₂(GF(2))`.
pub fn tensor_equality_check(seed: u64, n: usize, caps: Caps) -> Tally {
    Tally::timed("tensor-autotopisms-equal-normalizer", |t| {
        let mut r = rng(seed, 2);
        let f = field(2);
        for i in 0..n {
            let s = random_subring(&f, 2, 2, r.gen_range(0..=2), &mut r);
            let bm = tensor_over(&s).bimap;
            let ok = (|| -> crate::Result<bool> {
                let aut = brute_autotopisms(&bm, caps.filter)?.order();
                let norm = brute_normalizer(&adjoint_algebra(&bm).to_algebra(), None, caps.filter)?.order();
                Ok(aut == norm)
            })();
            t.record_result(ok, || format!("trial {i}: dim S = {}", s.dim()));
        }
    })
}

/// Decomposition invariants on random envelopes in `M₃(GF(2))` and `M₂(GF(3))²`.
pub fn wedderburn_check(seed: u64, n: usize) -> Tally {
    Tally::timed("wedderburn", |t| {
        let mut r = rng(seed, 5);
        for i in 0..n {
            let (q, dims): (u64, &[usize]) = if i % 2 == 0 { (2, &[3]) } else { (3, &[2, 2]) };
            let f = field(q);
            let alg = random_envelope(&f, dims, r.gen_range(1..=3), &mut r);
            match Wedderburn::decompose(&alg, None, &mut r) {
                Ok(w) => {
                    let bad = w.check();
                    t.record(bad.is_empty(), || format!("trial {i}: {bad:?}"));
                }
                Err(e) => t.record(false, || format!("trial {i}: {e}")),
            }
        }
    })
}

/// Closure order and formula order of `normalizer_of` against enumeration.
pub fn normalizer_check(seed: u64, n: usize, caps: Caps) -> Tally {
    Tally::timed("normalizer", |t| {
        let mut r = rng(seed, 6);
        let mut algs = named_algebras();
        let shapes: [(u64, &[usize]); 6] = [(3, &[2]), (2, &[3]), (2, &[2, 2]), (3, &[2, 2]), (3, &[3]), (3, &[2, 1])];
        let mut k = 0;
        while algs.len() < n {
            let (q, dims) = shapes[k % shapes.len()];
            let f = field(q);
            algs.push((format!("random-{k}-GF({q})-{dims:?}"), random_envelope(&f, dims, r.gen_range(1..=2), &mut r)));
            k += 1;
        }
        algs.truncate(n);
        for (name, alg) in &algs {
            let ok = (|| -> crate::Result<bool> {
                let g = normalizer_of(alg, &mut r, caps)?;
                let closed = g.closure_order(alg.field(), caps.closure)?;
                let brute = brute_normalizer(alg, None, caps.filter)?.order();
                Ok(closed == brute && g.order == Some(BigUint::from(brute)))
            })();
            t.record_result(ok, || name.clone());
        }
    })
}

/// A random nondegenerate symmetric or alternating bimap on `GF(q)^n`.
fn random_form<R: Rng>(f: &Gf, n: usize, alternating: bool, r: &mut R) -> Bimap {
    loop {
        let raw: Vec<Mat> = (0..r.gen_range(1..=2))
            .map(|_| {
                let m = random_mat(f, n, n, r);
                let mt = m.transpose();
                if alternating {
                    &m - &mt
                } else {
                    &m + &mt
                }
            })
            .collect();
        let bm = Bimap::make_full(f, n, n, &raw).unwrap().0;
        if bm.w() > 0 && bm.is_nondegenerate() {
            return bm;
        }
    }
}

/// Every brute-force pseudo-isometry lies in the group generated by `N*(Adj(∘))`.
pub fn pseudo_containment_check(seed: u64, n: usize, caps: Caps) -> Tally {
    Tally::timed("pseudo-isometries-in-star-normalizer", |t| {
        let mut r = rng(seed, 8);
        for i in 0..n {
            let (q, dim) = [(3, 2), (3, 3), (5, 2)][i % 3];
            let f = field(q);
            let bm = random_form(&f, dim, i % 2 == 0, &mut r);
            let ok = (|| -> crate::Result<bool> {
                let sa = StarAlgebra::from_pair(&star_involution(&bm)?)?;
                let g = star_normalizer(&sa, &mut r, caps)?;
                let h = closure(&sa.alg.one(), &g.gens, caps.closure)?;
                Ok(brute_pseudo_isometries(&bm, caps.filter)?.elements().iter().all(|x| h.contains(x)))
            })();
            t.record_result(ok, || format!("trial {i} over GF({q}), dim {dim}"));
        }
    })
}

/// `S* = S`, `g·g* = 1` on `J⁻` unipotents, and `|N*(A)|` against enumeration.
pub fn star_check(seed: u64, caps: Caps) -> Tally {
    Tally::timed("star-normalizer", |t| {
        let mut r = rng(seed, 9);
        for (name, sa) in star_instances() {
            let ok = (|| -> crate::Result<bool> {
                let alg = &sa.alg;
                let j = radical(alg);
                let s = star_invariant_complement(&sa, &j)?;
                let invariant = alg.elements_of(&s).iter().all(|x| s.contains(&sa.apply(x).flatten()));
                let (_, jm) = eigen_split(&sa, &j);
                let unitary = jminus_unipotents(&sa, &jm)?.iter().all(|g| g.mul(&sa.apply(g)).is_identity());
                let g = star_normalizer(&sa, &mut r, caps)?;
                let closed = g.closure_order(alg.field(), caps.closure)?;
                let brute = brute_normalizer(alg, Some(&sa), caps.filter)?.order();
                Ok(invariant && unitary && closed == brute && g.order == Some(BigUint::from(brute)))
            })();
            t.record_result(ok, || name.clone());
        }
    })
}

/// Commutator bimaps of Heisenberg and abelian groups.
pub fn baer_check() -> Tally {
    Tally::timed("baer", |t| {
        for p in [3u64, 5, 7] {
            let g = PGroupData { p, n: 2, m: 1, c: BTreeMap::from([((1, 2), vec![1])]) };
            let ok = baer_bimap(&g).ok().map(|b| b.slices().to_vec()) == fixture(&format!("sympl2-{p}")).ok().map(|b| b.slices().to_vec());
            t.record(ok, || format!("heisenberg p = {p}"));
        }
        let ab = PGroupData { p: 3, n: 3, m: 2, c: BTreeMap::new() };
        t.record(baer_bimap(&ab).map(|b| b.w() == 0).unwrap_or(false), || "abelian".into());
    })
}

/// `|Pseudo(heis-p)| = (p²−1)(p²−p)`, matching enumeration; the exterior square over
/// `Adj(sympl2-3)` has orbit 1.
pub fn pseudo_order_check(seed: u64, caps: Caps) -> Tally {
    Tally::timed("pseudo-isometry-orders", |t| {
        let mut r = rng(seed, 10);
        for p in [3u64, 5] {
            let ok = (|| -> crate::Result<bool> {
                let bm = fixture(&format!("heis-{p}"))?;
                let res = pseudo_isometry_group(&bm, &mut r, caps)?;
                let want = (p * p - 1) * (p * p - p);
                let brute = brute_pseudo_isometries(&bm, caps.filter)?.order() as u64;
                Ok(res.group.order == Some(BigUint::from(want)) && brute == want)
            })();
            t.record_result(ok, || format!("heis-{p}"));
        }
        let ok = (|| -> crate::Result<bool> {
            let adj = star_involution(&fixture("sympl2-3")?)?;
            let ext = exterior_over(&adj, true)?;
            let res = pseudo_isometry_group(&ext, &mut r, caps)?;
            Ok(res.orbit == 1 && res.group.order.is_some() && res.group.order == res.star_order)
        })();
        t.record_result(ok, || "exterior square over Adj(sympl2-3)".into());
    })
}

fn problem_of(bm: &Bimap) -> crate::Result<StabilizerProblem> {
    StabilizerProblem::new(bm.field(), bm.a(), bm.b(), bm.slices().to_vec(), None)
}

/// The stabilizer step on the block algebra recovers `|Aut(∘)|`.
pub fn autotope_correspondence_check(seed: u64, n: usize, caps: Caps) -> Tally {
    Tally::timed("block-algebra-autotopisms", |t| {
        let mut r = rng(seed, 7);
        let mut bms: Vec<(String, Bimap)> =
            ["sympl2-3", "sympl2-2"].iter().map(|s| (s.to_string(), fixture(s).unwrap())).collect();
        let mut k = 0;
        while bms.len() < n {
            let (q, a, b) = [(2, 2, 2), (2, 2, 3), (3, 2, 2)][k % 3];
            let f = field(q);
            bms.push((format!("random-{k}-GF({q})-{a}x{b}"), random_bimap(&f, a, b, r.gen_range(1..=3), &mut r)));
            k += 1;
        }
        bms.truncate(n);
        for (name, bm) in &bms {
            let ok = (|| -> crate::Result<bool> {
                let res = quadstab_solve(&problem_of(bm)?, &mut r, caps)?;
                Ok(res.order == brute_autotopisms(bm, caps.filter)?.order())
            })();
            t.record_result(ok, || name.clone());
        }
    })
}

/// `quadstab_solve` against the exhaustive filter `x·W·yᵗ = W`.
pub fn quadstab_check(seed: u64, n: usize, caps: Caps) -> Tally {
    Tally::timed("quadstab", |t| {
        let mut r = rng(seed, 13);
        for i in 0..n {
            let q = [2, 3][i % 2];
            let f = field(q);
            let w = random_matrix_space(&f, 2, 2, 3, &mut r);
            let ok = (|| -> crate::Result<bool> {
                let p = StabilizerProblem::new(&f, 2, 2, w.clone(), None)?;
                let res = quadstab_solve(&p, &mut r, caps)?;
                let brute = brute_subspace_stabilizer(&f, 2, 2, &w, caps.filter)?.order();
                Ok(res.order == brute && res.gens.iter().all(|(x, y)| stabilizes(&p, x, y)))
            })();
            t.record_result(ok, || format!("trial {i} over GF({q}), dim W = {}", w.len()));
        }
    })
}
