//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

use adjnorm::group::Caps;
use adjnorm::verify::*;
use std::process::ExitCode;
use std::time::Instant;

const SEED: u64 = 2024;

fn main() -> ExitCode {
    let caps = Caps::default();
    let criteria: Vec<(&str, Box<dyn Fn() -> Vec<Tally>>)> = vec![
        ("autotopisms normalize the adjoint ring (200 bimaps)", Box::new(move || vec![autotopism_containment_check(SEED, 200, caps)])),
        ("equality for tensor products (50 subrings)", Box::new(move || vec![tensor_equality_check(SEED, 50, caps)])),
        ("Galois connection (200 bimaps, 200 pairs)", Box::new(|| vec![galois_check(SEED, 200)])),
        ("meet/join kernels (200 pairs)", Box::new(move || vec![lattice_check(SEED, 200, caps)])),
        ("Wedderburn invariants (100 envelopes)", Box::new(|| vec![wedderburn_check(SEED, 100)])),
        ("normalizer orders vs enumeration (20 algebras)", Box::new(move || vec![normalizer_check(SEED, 20, caps)])),
        ("block algebra recovers autotopisms (20 bimaps)", Box::new(move || vec![autotope_correspondence_check(SEED, 20, caps)])),
        ("pseudo-isometry orders and exterior orbit", Box::new(move || vec![pseudo_order_check(SEED, caps)])),
        ("star suite (10 algebras with involution)", Box::new(move || vec![star_check(SEED, caps)])),
        ("subspace stabilizers (10 random W)", Box::new(move || vec![quadstab_check(SEED, 10, caps)])),
        ("field layer (500 polynomials, isomorphisms)", Box::new(|| vec![poly_factor_check(SEED, 500), field_isomorphism_check(SEED, None)])),
    ];
    let mut all = true;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let tallies = run();
        let ok = tallies.iter().all(Tally::passed);
        all &= ok;
        let checked: usize = tallies.iter().map(|t| t.checked).sum();
        println!(
            "criterion {:>2}: {} [{} instances, {:.1}s] {label}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            checked,
            start.elapsed().as_secs_f64()
        );
        for t in &tallies {
            for f in t.failures.iter().take(5) {
                println!("    {}: {f}", t.name);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
