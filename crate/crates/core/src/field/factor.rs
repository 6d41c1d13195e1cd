//! Squarefree, distinct-degree and equal-degree factorization over finite fields.

use super::{FiniteField, Poly};
use rand::Rng;

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `x^(Q^e) mod m` by repeated Q-th powering.
fn x_qpow<F: FiniteField>(f: &F, e: usize, m: &Poly<F::Elem>) -> Poly<F::Elem> {
    let q = f.order() as u128;
    let mut h = Poly::x(f).rem(f, m);
    for _ in 0..e {
        h = h.powmod(f, q, m);
    }
    h
}

/// Rabin's irreducibility test.
pub fn is_irreducible<F: FiniteField>(f: &F, g: &Poly<F::Elem>) -> bool {
    let n = match g.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let g = g.monic(f);
    let x = Poly::x(f);
    if x_qpow(f, n, &g) != x.rem(f, &g) {
        return false;
    }
    prime_divisors(n).into_iter().all(|r| {
        let h = x_qpow(f, n / r, &g).sub(f, &x);
        h.gcd(f, &g).is_one(f)
    })
}

/// Squarefree decomposition of a monic polynomial: list of (squarefree factor, multiplicity).
fn squarefree<F: FiniteField>(f: &F, g: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let p = f.characteristic() as usize;
    let mut out = Vec::new();
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = g.derivative(f);
    if d.is_zero() {
        // g(x) = h(x^p); take p-th roots of coefficients.
        let c: Vec<_> = g.coeffs().iter().step_by(p).map(|a| f.pth_root(a)).collect();
        let h = Poly::new(f, c);
        for (fac, m) in squarefree(f, &h) {
            out.push((fac, m * p));
        }
        return out;
    }
    let mut c = g.gcd(f, &d);
    let mut w = g.divrem(f, &c).0;
    let mut i = 1;
    while !w.is_one(f) {
        let y = w.gcd(f, &c);
        let z = w.divrem(f, &y).0;
        if !z.is_one(f) {
            out.push((z.monic(f), i));
        }
        w = y;
        c = c.divrem(f, &w).0;
        i += 1;
    }
    if !c.is_one(f) {
        let cp: Vec<_> = c.coeffs().iter().step_by(p).map(|a| f.pth_root(a)).collect();
        for (fac, m) in squarefree(f, &Poly::new(f, cp)) {
            out.push((fac, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial: (product, degree).
fn ddf<F: FiniteField>(f: &F, g: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let q = f.order() as u128;
    let x = Poly::x(f);
    let mut rest = g.clone();
    let mut h = x.rem(f, &rest);
    let mut out = Vec::new();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(f, q, &rest);
        let gd = h.sub(f, &x).gcd(f, &rest);
        if !gd.is_one(f) {
            rest = rest.divrem(f, &gd).0;
            h = h.rem(f, &rest);
            out.push((gd, d));
        }
    }
    if let Some(n) = rest.degree() {
        if n > 0 {
            out.push((rest, n));
        }
    }
    out
}

fn random_poly<F: FiniteField, R: Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> Poly<F::Elem> {
    Poly::new(f, (0..n).map(|_| f.random(rng)).collect())
}

/// A candidate splitting polynomial for equal-degree factorization of `g` (degree-d factors).
fn splitter<F: FiniteField, R: Rng + ?Sized>(
    f: &F,
    g: &Poly<F::Elem>,
    d: usize,
    rng: &mut R,
) -> Poly<F::Elem> {
    let n = g.degree().unwrap();
    let a = random_poly(f, n, rng);
    let q = f.order() as u128;
    let p = f.characteristic();
    if p == 2 {
        // Absolute trace to GF(2): Σ a^(2^i), i < d·log2(Q).
        let s = (f.order() as f64).log2().round() as usize;
        let mut t = a.clone();
        let mut acc = a;
        for _ in 1..d * s {
            t = t.mulmod(f, &t, g);
            acc = acc.add(f, &t);
        }
        acc
    } else {
        // a^((Q^d-1)/2) = (a·a^Q·…·a^(Q^(d-1)))^((Q-1)/2).
        let mut t = a.clone();
        let mut norm = a;
        for _ in 1..d {
            t = t.powmod(f, q, g);
            norm = norm.mulmod(f, &t, g);
        }
        norm.powmod(f, (q - 1) / 2, g).sub(f, &Poly::one(f))
    }
}

/// Equal-degree factorization of a monic squarefree product of degree-d irreducibles.
fn edf<F: FiniteField, R: Rng + ?Sized>(
    f: &F,
    g: &Poly<F::Elem>,
    d: usize,
    rng: &mut R,
    out: &mut Vec<Poly<F::Elem>>,
) {
    let n = g.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(g.clone());
        return;
    }
    loop {
        let h = splitter(f, g, d, rng).gcd(f, g);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let other = g.divrem(f, &h).0;
            edf(f, &h, d, rng, out);
            edf(f, &other.monic(f), d, rng, out);
            return;
        }
    }
}

/// Factor into monic irreducibles with multiplicities, sorted by (degree, coefficients).
/// The leading coefficient is dropped; the zero polynomial and constants give an empty list.
pub fn poly_factor<F: FiniteField, R: Rng + ?Sized>(
    f: &F,
    g: &Poly<F::Elem>,
    rng: &mut R,
) -> Vec<(Poly<F::Elem>, usize)>
where
    F::Elem: Ord,
{
    let mut out = Vec::new();
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    for (sq, m) in squarefree(f, &g.monic(f)) {
        for (part, d) in ddf(f, &sq) {
            let mut pieces = Vec::new();
            edf(f, &part, d, rng, &mut pieces);
            out.extend(pieces.into_iter().map(|p| (p, m)));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    // Merge equal factors that arose from different squarefree layers.
    let mut merged: Vec<(Poly<F::Elem>, usize)> = Vec::new();
    for (p, m) in out {
        match merged.last_mut() {
            Some((lp, lm)) if *lp == p => *lm += m,
            _ => merged.push((p, m)),
        }
    }
    merged
}

/// Distinct roots in the coefficient field.
pub fn roots<F: FiniteField, R: Rng + ?Sized>(
    f: &F,
    g: &Poly<F::Elem>,
    rng: &mut R,
) -> Vec<F::Elem>
where
    F::Elem: Ord,
{
    poly_factor(f, g, rng)
        .into_iter()
        .filter(|(p, _)| p.degree() == Some(1))
        .map(|(p, _)| f.neg(&p.coeffs()[0]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_factorization(f: &Gf, g: &Poly<u32>, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let facs = poly_factor(f, g, &mut rng);
        let mut prod = Poly::constant(f, *g.lead().unwrap());
        for (p, m) in &facs {
            assert!(is_irreducible(f, p), "{p:?} not irreducible");
            for _ in 0..*m {
                prod = prod.mul(f, p);
            }
        }
        assert_eq!(&prod, g);
    }

    #[test]
    fn small_cases() {
        let f2 = Gf::new(2, 1).unwrap();
        assert!(is_irreducible(&f2, &Poly::new(&f2, vec![1, 1, 1])));
        assert!(!is_irreducible(&f2, &Poly::new(&f2, vec![1, 0, 1])));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let facs = poly_factor(&f2, &Poly::new(&f2, vec![1, 0, 1]), &mut rng);
        assert_eq!(facs, vec![(Poly::new(&f2, vec![1, 1]), 2)]);
    }

    #[test]
    fn random_factorizations_remultiply() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for (p, k) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1), (7, 1), (2, 3)] {
            let f = Gf::new(p, k).unwrap();
            for t in 0..40 {
                let deg = rng.gen_range(1..=10);
                let mut c: Vec<u32> = (0..=deg).map(|_| f.random(&mut rng)).collect();
                if c[deg] == 0 {
                    c[deg] = 1;
                }
                // Force repeated factors sometimes.
                let mut g = Poly::new(&f, c);
                if t % 3 == 0 {
                    g = g.mul(&f, &g);
                }
                check_factorization(&f, &g, t);
            }
        }
    }

    #[test]
    fn pth_power_input() {
        let f = Gf::new(3, 1).unwrap();
        // (x^2+1)^3 · (x+2)^6 has zero derivative.
        let a = Poly::new(&f, vec![1, 0, 1]);
        let b = Poly::new(&f, vec![2, 1]);
        let mut g = Poly::one(&f);
        for _ in 0..3 {
            g = g.mul(&f, &a);
        }
        for _ in 0..6 {
            g = g.mul(&f, &b);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let facs = poly_factor(&f, &g, &mut rng);
        assert_eq!(facs, vec![(b, 6), (a, 3)]);
    }
}
