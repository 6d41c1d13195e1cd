use super::*;
use crate::bimap::fixture;

/// Count pairs `(X, Y)` with `X·M = M·Y` for every slice, by enumeration.
fn brute_adjoint_count(bm: &Bimap) -> usize {
    let f = bm.field();
    let (a, b) = (bm.a(), bm.b());
    let q = f.q() as usize;
    let n = a * a + b * b;
    let mut count = 0;
    for code in 0..q.pow(n as u32) {
        let mut v = vec![0u32; n];
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % q) as u32;
            c /= q;
        }
        let x = Mat::from_vec(f, a, a, v[..a * a].to_vec());
        let y = Mat::from_vec(f, b, b, v[a * a..].to_vec());
        if bm.slices().iter().all(|m| &x * m == m * &y) {
            count += 1;
        }
    }
    count
}

#[test]
fn adjoint_examples() {
    for q in [2, 3, 4] {
        let adj = adjoint_algebra(&fixture(&format!("mult-{q}")).unwrap());
        assert_eq!(adj.dim(), 1);
    }
    let s = fixture("sympl2-3").unwrap();
    let adj = adjoint_algebra(&s);
    assert_eq!(adj.dim(), 4);
    assert_eq!(brute_adjoint_count(&s), 81);
    let m = &s.slices()[0];
    let minv = m.inverse().unwrap();
    for (x, y) in adj.pairs() {
        assert_eq!(*y, &(&minv * x) * m);
    }
    let t = fixture("tensor-22-2").unwrap();
    let adj = adjoint_algebra(&t);
    assert_eq!(adj.dim(), 1);
    assert_eq!(brute_adjoint_count(&t), 2);
    assert!(adj.to_algebra().contains(&BlockDiag::identity(t.field(), &[2, 2])));
}

#[test]
fn adjoint_is_unital_algebra() {
    for name in ["sympl2-3", "sym2-5", "tensor-23-2", "mult-4"] {
        let alg = adjoint_algebra(&fixture(name).unwrap()).to_algebra();
        assert!(alg.is_unital());
        assert!(alg.is_closed());
    }
}

fn check_star(name: &str) -> StarAlgebra {
    let bm = fixture(name).unwrap();
    let p = star_involution(&bm).unwrap();
    let alg = p.to_algebra();
    let inv = &p.star().unwrap().matrix;
    // Order two, fixes the identity, reverses products.
    assert!((inv * inv).is_identity());
    let basis = alg.basis();
    let star = |x: &BlockDiag| {
        let c = alg.space().coords(&x.flatten()).unwrap();
        alg.unflatten(&alg.space().basis().vec_mul(&inv.vec_mul(&c)))
    };
    assert_eq!(star(&alg.one()), alg.one());
    for x in &basis {
        for y in &basis {
            assert_eq!(star(&x.mul(y)), star(y).mul(&star(x)));
        }
    }
    StarAlgebra::from_pair(&p).unwrap()
}

#[test]
fn star_examples() {
    let s = check_star("mult-3");
    assert!(s.star.is_identity());
    let s = check_star("sympl2-3");
    let f = s.alg.field().clone();
    let m = fixture("sympl2-3").unwrap().slices()[0].clone();
    let minv = m.inverse().unwrap();
    for x in s.alg.basis() {
        let xs = s.apply(&x);
        assert_eq!(xs.0[0], &(&minv * &x.0[0].transpose()) * &m);
    }
    let s = check_star("sym2-3");
    for x in s.alg.basis() {
        assert_eq!(s.apply(&x).0[0], x.0[0].transpose());
    }
    assert_eq!(f.q(), 3);
}

#[test]
fn star_errors() {
    let f = Gf::new(3, 1).unwrap();
    let degenerate = Bimap::from_slices(&f, 2, 2, vec![Mat::from_rows(&f, &[vec![1, 0], vec![0, 0]])]).unwrap();
    assert_eq!(star_involution(&degenerate).unwrap_err(), Error::Degenerate);
    let neither = Bimap::from_slices(&f, 2, 2, vec![Mat::from_rows(&f, &[vec![1, 1], vec![0, 1]])]).unwrap();
    assert_eq!(star_involution(&neither).unwrap_err(), Error::NotSymmetricOrAlternating);
}

#[test]
fn json_roundtrip() {
    let p = star_involution(&fixture("sympl2-3").unwrap()).unwrap();
    assert_eq!(AlgebraPair::from_json(&p.to_json()).unwrap(), p);
}
