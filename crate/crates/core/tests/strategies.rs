use adjnorm::adjoint::{adjoint_algebra, star_involution, StarAlgebra};
use adjnorm::bimap::fixture;
use adjnorm::group::Caps;
use adjnorm::registry::{Named, Registry};
use adjnorm::strategy::group_strategies;
use adjnorm::verify::{suites, VerifyConfig};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn structural_and_brute_agree_on_fixtures() {
    let reg = group_strategies();
    assert_eq!(reg.names(), vec!["structural", "brute"]);
    let caps = Caps::default();
    let (s, b) = (reg.get("structural").unwrap(), reg.get("brute").unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in ["sympl2-3", "sym2-3", "sympl2-2", "tensor-22-2", "mult-3"] {
        let bm = fixture(name).unwrap();
        let alg = adjoint_algebra(&bm).to_algebra();
        let x = s.normalizer(&alg, &mut rng, caps).unwrap();
        let y = b.normalizer(&alg, &mut rng, caps).unwrap();
        assert_eq!(x.order, y.order, "normalizer {name}");
        let x = s.autotopisms(&bm, &mut rng, caps).unwrap();
        let y = b.autotopisms(&bm, &mut rng, caps).unwrap();
        assert_eq!(x.order, y.order, "autotopisms {name}");
    }
    for name in ["sympl2-3", "sym2-3", "heis-5"] {
        let bm = fixture(name).unwrap();
        let sa = StarAlgebra::from_pair(&star_involution(&bm).unwrap()).unwrap();
        let x = s.star_normalizer(&sa, &mut rng, caps).unwrap();
        let y = b.star_normalizer(&sa, &mut rng, caps).unwrap();
        assert_eq!(x.order, y.order, "star normalizer {name}");
        let x = s.pseudo_isometries(&bm, &mut rng, caps).unwrap();
        let y = b.pseudo_isometries(&bm, &mut rng, caps).unwrap();
        assert_eq!(x.order, y.order, "pseudo {name}");
    }
    let heis = fixture("heis-3").unwrap();
    assert_eq!(s.pseudo_isometries(&heis, &mut rng, caps).unwrap().order, Some(BigUint::from(48u32)));
}

#[test]
fn suite_registry_covers_every_area() {
    let reg = suites();
    for name in ["galois", "lattice", "main1", "main2", "norm", "starnorm", "pgroup", "quadstab", "field", "wedderburn"] {
        assert!(reg.get(name).is_some(), "{name}");
    }
    let cfg = VerifyConfig { seed: 5, trials: Some(4), caps: Caps::default() };
    for name in ["lattice", "main2", "pgroup"] {
        let tallies = reg.get(name).unwrap().run(&cfg);
        assert!(tallies.iter().all(|t| t.passed()), "{name}: {:?}", tallies);
    }
}

struct Dummy(&'static str);

impl Named for Dummy {
    fn name(&self) -> &'static str {
        self.0
    }
    fn summary(&self) -> &'static str {
        "test entry"
    }
}

#[test]
fn registry_replaces_by_name() {
    let mut reg: Registry<dyn Named> = Registry::default();
    assert!(reg.is_empty());
    reg.register(Box::new(Dummy("a")));
    reg.register(Box::new(Dummy("b")));
    reg.register(Box::new(Dummy("a")));
    assert_eq!(reg.names(), vec!["b", "a"]);
    assert_eq!(reg.len(), 2);
    assert!(reg.get("c").is_none());
}
