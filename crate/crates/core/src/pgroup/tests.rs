use super::*;
use crate::bimap::fixture;
use crate::oracle::{brute_autotopisms, brute_pseudo_isometries};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: usize = 1_000_000;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(5)
}

fn heis(p: u64) -> PGroupData {
    PGroupData { p, n: 2, m: 1, c: BTreeMap::from([((1, 2), vec![1])]) }
}

#[test]
fn baer_examples() {
    for p in [3, 5] {
        assert_eq!(baer_bimap(&heis(p)).unwrap().slices(), fixture(&format!("sympl2-{p}")).unwrap().slices());
    }
    let ab = PGroupData { p: 3, n: 3, m: 2, c: BTreeMap::new() };
    assert_eq!(baer_bimap(&ab).unwrap().w(), 0);
    let bad = PGroupData { p: 3, n: 2, m: 1, c: BTreeMap::from([((1, 1), vec![1])]) };
    assert_eq!(baer_bimap(&bad).unwrap_err(), Error::NotAlternating);
    let bad = PGroupData { p: 3, n: 2, m: 1, c: BTreeMap::from([((1, 2), vec![1]), ((2, 1), vec![1])]) };
    assert_eq!(baer_bimap(&bad).unwrap_err(), Error::NotAlternating);
    let g = PGroupData { p: 3, n: 4, m: 2, c: BTreeMap::from([((1, 2), vec![1, 0]), ((3, 4), vec![1, 0]), ((1, 3), vec![0, 1]), ((2, 4), vec![0, 2])]) };
    let bm = baer_bimap(&g).unwrap();
    assert_eq!((bm.a(), bm.w()), (4, 2));
    assert!(bm.is_alternating() && bm.is_full());
    let back = PGroupData::from_json(&g.to_json()).unwrap();
    assert_eq!(back, g);
}

#[test]
fn pseudo_isometries_match_brute() {
    let mut r = rng();
    for (p, want) in [(3u64, 48usize), (5, 480)] {
        let bm = baer_bimap(&heis(p)).unwrap();
        let res = pseudo_isometry_group(&bm, &mut r, Caps::default()).unwrap();
        assert_eq!(res.group.order, Some(BigUint::from(want)));
        assert_eq!(brute_pseudo_isometries(&bm, CAP).unwrap().order(), want);
    }
    // Symmetric forms: sym2-3, the identity form on GF(3)^3, and a 2-slice system.
    let f3 = Gf::new(3, 1).unwrap();
    let id3 = Bimap::from_slices(&f3, 3, 3, vec![Mat::identity(&f3, 3)]).unwrap();
    let two = Bimap::from_slices(
        &f3,
        3,
        3,
        vec![Mat::identity(&f3, 3), Mat::from_rows(&f3, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 2]])],
    )
    .unwrap();
    for bm in [fixture("sym2-3").unwrap(), id3, two] {
        let res = pseudo_isometry_group(&bm, &mut r, Caps::default()).unwrap();
        let brute = brute_pseudo_isometries(&bm, CAP).unwrap();
        assert_eq!(res.group.order, Some(BigUint::from(brute.order())));
        for x in &res.group.gens {
            assert!(brute.contains(x));
        }
    }
    let f2 = Gf::new(2, 1).unwrap();
    let b2 = Bimap::from_slices(&f2, 2, 2, vec![Mat::from_rows(&f2, &[vec![0, 1], vec![1, 0]])]).unwrap();
    assert_eq!(pseudo_isometry_group(&b2, &mut r, Caps::default()).unwrap_err(), Error::CharTwo);
}

#[test]
fn exterior_square_has_trivial_orbit() {
    let mut r = rng();
    let adj = star_involution(&fixture("sympl2-3").unwrap()).unwrap();
    let ext = exterior_over(&adj, true).unwrap();
    let res = pseudo_isometry_group(&ext, &mut r, Caps::default()).unwrap();
    assert_eq!(res.orbit, 1);
    assert_eq!(res.group.order, res.star_order);
}

fn problem(q: u64, a: usize, b: usize, w: &[Vec<u32>]) -> StabilizerProblem {
    let f = Gf::of_order(q).unwrap();
    StabilizerProblem::new(&f, a, b, w.iter().map(|v| Mat::from_vec(&f, a, b, v.clone())).collect(), None).unwrap()
}

fn brute_order(p: &StabilizerProblem) -> usize {
    brute_autotopisms(&p.bimap().unwrap(), CAP).unwrap().order()
}

#[test]
fn quadstab_examples() {
    let mut r = rng();
    let caps = Caps::default();
    let cases = [
        problem(2, 2, 2, &[vec![1, 0, 0, 1]]),
        problem(2, 2, 2, &[]),
        problem(2, 2, 2, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]),
        problem(3, 2, 2, &[vec![0, 1, 2, 0]]),
        problem(3, 2, 2, &[vec![1, 0, 0, 0], vec![0, 0, 0, 1]]),
        problem(2, 2, 3, &[vec![1, 0, 0, 0, 1, 0]]),
    ];
    let want = [6, 36, 36, 96, 0, 0];
    for (i, p) in cases.iter().enumerate() {
        let alg = quadstab_embed(p);
        let wdim = Subspace::from_rows(&p.field, p.a * p.b, &p.w.iter().map(|m| m.flatten()).collect::<Vec<_>>()).dim();
        assert_eq!(alg.dim(), 2 + wdim);
        let res = quadstab_solve(p, &mut r, caps).unwrap();
        let brute = brute_order(p);
        if want[i] > 0 {
            assert_eq!(brute, want[i], "case {i}");
        }
        assert_eq!(res.order, brute, "case {i}");
        for (x, y) in &res.gens {
            assert!(stabilizes(p, x, y));
        }
    }
}

#[test]
fn hermitian_problem() {
    let mut r = rng();
    let f = Gf::new(3, 1).unwrap();
    let p = StabilizerProblem::new(&f, 2, 2, vec![Mat::from_rows(&f, &[vec![0, 1], vec![2, 0]])], Some(-1)).unwrap();
    assert_eq!(quadstab_solve(&p, &mut r, Caps::default()).unwrap().order, 48);
    assert!(StabilizerProblem::new(&f, 2, 2, vec![Mat::identity(&f, 2)], Some(-1)).is_err());
}
