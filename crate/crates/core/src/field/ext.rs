use super::{FiniteField, Gf, Poly};
use rand::Rng;
use std::sync::Arc;

/// The field `k[y]/(g)` for an irreducible `g` over a table field `k`.
/// Elements are coefficient vectors of length `deg g`, low degree first.
#[derive(Clone, Debug)]
pub struct ExtField {
    base: Gf,
    modulus: Arc<Poly<u32>>,
    d: usize,
}

impl ExtField {
    /// Caller guarantees `g` is irreducible over `base`.
    pub fn new(base: &Gf, g: &Poly<u32>) -> ExtField {
        let m = g.monic(base);
        let d = m.degree().expect("nonzero modulus");
        ExtField { base: base.clone(), modulus: Arc::new(m), d }
    }

    pub fn base(&self) -> &Gf {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn modulus(&self) -> &Poly<u32> {
        &self.modulus
    }

    fn pad(&self, p: Poly<u32>) -> Vec<u32> {
        let mut c = p.into_coeffs();
        c.resize(self.d, 0);
        c
    }

    fn as_poly(&self, a: &[u32]) -> Poly<u32> {
        Poly::new(&self.base, a.to_vec())
    }

    /// Embed a base-field scalar.
    pub fn embed(&self, a: u32) -> Vec<u32> {
        let mut v = vec![0; self.d];
        if self.d > 0 {
            v[0] = a;
        }
        v
    }

    /// The class of `y`.
    pub fn gen(&self) -> Vec<u32> {
        self.pad(Poly::x(&self.base).rem(&self.base, &self.modulus))
    }
}

impl FiniteField for ExtField {
    type Elem = Vec<u32>;

    fn order(&self) -> u64 {
        self.base.order().pow(self.d as u32)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn zero(&self) -> Vec<u32> {
        vec![0; self.d]
    }
    fn one(&self) -> Vec<u32> {
        self.embed(1)
    }
    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.base.add_e(*x, *y)).collect()
    }
    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|x| self.base.neg_e(*x)).collect()
    }
    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let f = &self.base;
        self.pad(self.as_poly(a).mulmod(f, &self.as_poly(b), &self.modulus))
    }
    fn inv(&self, a: &Vec<u32>) -> Option<Vec<u32>> {
        let pa = self.as_poly(a);
        if pa.is_zero() {
            return None;
        }
        let (_, s, _) = pa.xgcd(&self.base, &self.modulus);
        Some(self.pad(s.rem(&self.base, &self.modulus)))
    }
    fn is_zero(&self, a: &Vec<u32>) -> bool {
        a.iter().all(|x| *x == 0)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        (0..self.d).map(|_| self.base.random(rng)).collect()
    }
    fn from_u64(&self, n: u64) -> Vec<u32> {
        self.embed(self.base.from_u64(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{poly_factor, roots};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn quadratic_extension_of_gf4() {
        let k = Gf::new(2, 2).unwrap();
        // y^2 + y + w is irreducible over GF(4) when w is a generator.
        let g = Poly::new(&k, vec![k.gen(), 1, 1]);
        assert!(crate::field::is_irreducible(&k, &g));
        let e = ExtField::new(&k, &g);
        assert_eq!(e.order(), 16);
        let y = e.gen();
        let mut x = e.one();
        let mut seen = std::collections::HashSet::new();
        for _ in 0..15 {
            seen.insert(x.clone());
            let inv = e.inv(&x).unwrap();
            assert_eq!(e.mul(&x, &inv), e.one());
            x = e.mul(&x, &y);
        }
        // Frobenius-style check: every element satisfies a^16 = a.
        for a in &seen {
            assert_eq!(&e.pow(a, 16), a);
        }
    }

    #[test]
    fn factor_over_extension() {
        let k = Gf::new(3, 1).unwrap();
        let e = ExtField::new(&k, &Poly::new(&k, vec![1, 0, 1]));
        // x^2 + 1 splits over GF(9).
        let g = Poly::new(&e, vec![e.one(), e.zero(), e.one()]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = roots(&e, &g, &mut rng);
        assert_eq!(r.len(), 2);
        for x in &r {
            assert!(e.is_zero(&g.eval(&e, x)));
        }
        let f = poly_factor(&e, &g, &mut rng);
        assert_eq!(f.len(), 2);
    }
}
