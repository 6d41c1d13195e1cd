//! Randomized invariant suites checked against exhaustive oracles. Each check takes a
//! seed and a trial count and reports every failing instance.

mod checks;
mod instances;

pub use checks::*;
pub use instances::{named_algebras, star_instances};

use crate::group::Caps;
use crate::registry::{Named, Registry};
use serde_json::{json, Value};
use std::time::{Duration, Instant};

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct Tally {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl Tally {
    pub fn new(name: &'static str) -> Tally {
        Tally { name, checked: 0, failures: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Count an instance whose computation errored as a failure.
    pub fn record_result(&mut self, r: crate::Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, what),
            Err(e) => {
                let msg = what();
                self.record(false, || format!("{msg}: {e}"));
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.name,
            "passed": self.passed(),
            "checked": self.checked,
            "failures": self.failures,
            "seconds": self.elapsed.as_secs_f64(),
        })
    }

    pub(crate) fn timed(name: &'static str, body: impl FnOnce(&mut Tally)) -> Tally {
        let start = Instant::now();
        let mut t = Tally::new(name);
        body(&mut t);
        t.elapsed = start.elapsed();
        t
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides each check's default trial count.
    pub trials: Option<usize>,
    pub caps: Caps,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 1, trials: None, caps: Caps::default() }
    }
}

impl VerifyConfig {
    fn n(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

pub trait Suite: Named {
    fn run(&self, cfg: &VerifyConfig) -> Vec<Tally>;
}

macro_rules! suite {
    ($ty:ident, $name:literal, $summary:literal, |$cfg:ident| $body:expr) => {
        pub struct $ty;
        impl Named for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn summary(&self) -> &'static str {
                $summary
            }
        }
        impl Suite for $ty {
            fn run(&self, $cfg: &VerifyConfig) -> Vec<Tally> {
                $body
            }
        }
    };
}

suite!(FieldSuite, "field", "polynomial factoring and field isomorphisms", |c| vec![
    poly_factor_check(c.seed, c.n(500)),
    field_isomorphism_check(c.seed, c.trials),
]);
suite!(LatticeSuite, "lattice", "kernels of meets and joins", |c| vec![lattice_check(c.seed, c.n(200), c.caps)]);
suite!(GaloisSuite, "galois", "closure of adjoint rings and the tensor biconditional", |c| vec![
    galois_check(c.seed, c.n(200))
]);
suite!(Main1Suite, "main1", "autotopisms normalize Adj, with equality for tensor products", |c| vec![
    autotopism_containment_check(c.seed, c.n(200), c.caps),
    tensor_equality_check(c.seed, c.n(200) / 4, c.caps),
]);
suite!(WedderburnSuite, "wedderburn", "decomposition invariants on random envelopes", |c| vec![
    wedderburn_check(c.seed, c.n(100))
]);
suite!(NormSuite, "norm", "structural normalizers against enumeration", |c| vec![normalizer_check(c.seed, c.n(20), c.caps)]);
suite!(Main2Suite, "main2", "pseudo-isometries lie in N*(Adj)", |c| vec![pseudo_containment_check(c.seed, c.n(20), c.caps)]);
suite!(StarSuite, "starnorm", "star-invariant decompositions and N*(A)", |c| vec![star_check(c.seed, c.caps)]);
suite!(PGroupSuite, "pgroup", "Baer bimaps and pseudo-isometry orders", |c| vec![
    baer_check(),
    pseudo_order_check(c.seed, c.caps),
]);
suite!(QuadStabSuite, "quadstab", "subspace stabilizers through the block algebra", |c| vec![
    autotope_correspondence_check(c.seed, c.n(20), c.caps),
    quadstab_check(c.seed, c.n(10), c.caps),
]);

pub fn suites() -> Registry<dyn Suite> {
    let mut r: Registry<dyn Suite> = Registry::default();
    r.register(Box::new(FieldSuite));
    r.register(Box::new(LatticeSuite));
    r.register(Box::new(GaloisSuite));
    r.register(Box::new(Main1Suite));
    r.register(Box::new(WedderburnSuite));
    r.register(Box::new(NormSuite));
    r.register(Box::new(Main2Suite));
    r.register(Box::new(StarSuite));
    r.register(Box::new(PGroupSuite));
    r.register(Box::new(QuadStabSuite));
    r
}
