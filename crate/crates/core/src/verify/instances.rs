//! Fixed instances mixed into the randomized checks.

use crate::adjoint::{adjoint_algebra, star_involution, StarAlgebra};
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::bimap::fixture;
use crate::field::Gf;
use crate::matlin::Mat;
use crate::pgroup::{quadstab_embed, StabilizerProblem};

fn mat(f: &Gf, rows: &[&[u32]]) -> Mat {
    Mat::from_rows(f, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn pair_env(f: &Gf, n: usize, gens: &[Mat]) -> MatAlgebra {
    let g: Vec<BlockDiag> = gens.iter().map(|m| BlockDiag(vec![m.clone(), m.clone()])).collect();
    MatAlgebra::envelope(f, &[n, n], &g)
}

fn single(f: &Gf, n: usize, gens: &[Mat]) -> MatAlgebra {
    let g: Vec<BlockDiag> = gens.iter().map(|m| BlockDiag(vec![m.clone()])).collect();
    MatAlgebra::envelope(f, &[n], &g)
}

fn upper_triangular(f: &Gf, n: usize) -> MatAlgebra {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i..n {
            gens.push(Mat::unit(f, n, n, i, j));
        }
    }
    single(f, n, &gens)
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

/// Algebras with known normalizers, all within brute range.
pub fn named_algebras() -> Vec<(String, MatAlgebra)> {
    let f2 = Gf::new(2, 1).unwrap();
    let f3 = Gf::new(3, 1).unwrap();
    let (e12, e21) = (mat(&f2, &[&[0, 1], &[0, 0]]), mat(&f2, &[&[0, 0], &[1, 0]]));
    let z = Mat::zero(&f2, 2, 2);
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
    let sympl22 = StabilizerProblem::new(&f2, 2, 2, vec![mat(&f2, &[&[0, 1], &[1, 0]])], None).unwrap();
    let mut out = vec![
        ("scalars-2".to_string(), pair_env(&f2, 2, &[])),
        ("gf4-scalars".into(), pair_env(&f2, 2, &[mat(&f2, &[&[0, 1], &[1, 1]])])),
        ("upper-triangular-3".into(), upper_triangular(&f3, 2)),
        ("upper-triangular-pair-3".into(), pair_env(&f3, 2, &[mat(&f3, &[&[0, 1], &[0, 0]])])),
        ("block-sympl2-2".into(), quadstab_embed(&sympl22).to_algebra()),
        ("full-m2xm2-2".into(), full),
        ("diagonal-m2-2".into(), pair_env(&f2, 2, &[e12, e21])),
        ("nilpotent-3x3-2".into(), single(&f2, 3, &[mat(&f2, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])])),
    ];
    for name in ["sympl2-3", "sym2-3", "tensor-22-2"] {
        out.push((format!("adj-{name}"), adjoint_algebra(&fixture(name).unwrap()).to_algebra()));
    }
    out
}

/// Ten algebras with involution over odd fields.
pub fn star_instances() -> Vec<(String, StarAlgebra)> {
    let f3 = Gf::new(3, 1).unwrap();
    let mut out = Vec::new();
    for name in ["sympl2-3", "sym2-3", "sympl2-5", "sym2-5"] {
        let p = star_involution(&fixture(name).unwrap()).unwrap();
        out.push((format!("adj-{name}"), StarAlgebra::from_pair(&p).unwrap()));
    }
    let sc = single(&f3, 2, &[]);
    out.push(("scalars-trivial-3".into(), StarAlgebra::from_fn(&sc, |x| x.clone()).unwrap()));
    let diag = single(&f3, 2, &[mat(&f3, &[&[1, 0], &[0, 0]])]);
    out.push(("exchange-3".into(), StarAlgebra::from_fn(&diag, flip).unwrap()));
    out.push(("upper-triangular-2-flip".into(), StarAlgebra::from_fn(&upper_triangular(&f3, 2), flip).unwrap()));
    out.push(("upper-triangular-3-flip".into(), StarAlgebra::from_fn(&upper_triangular(&f3, 3), flip).unwrap()));
    let gf9 = single(&f3, 2, &[mat(&f3, &[&[0, 1], &[2, 0]])]);
    out.push(("gf9-frobenius".into(), StarAlgebra::from_fn(&gf9, |x| x.pow(3)).unwrap()));
    let m2 = single(&f3, 2, &[Mat::unit(&f3, 2, 2, 0, 1), Mat::unit(&f3, 2, 2, 1, 0)]);
    out.push(("m2-transpose-3".into(), StarAlgebra::from_fn(&m2, |x| x.map(|m| m.transpose())).unwrap()));
    out
}
