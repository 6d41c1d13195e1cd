use super::{is_irreducible, FiniteField, Poly};
use crate::error::{Error, Result};
use once_cell::sync::Lazy;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// A field element: the coefficient vector over GF(p), packed as base-p digits
/// (coefficient of `x^i` is digit `i`). Always fully reduced.
pub type Elem = u32;

/// Largest order for extension fields; their multiplication runs through log tables.
const MAX_EXT_ORDER: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u32 = 256;

/// Serialized form of a field: `{"p":…, "k":…, "modulus":[…]}` (low degree first).
/// An empty or missing modulus selects the default one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    #[serde(default = "one")]
    pub k: u32,
    #[serde(default)]
    pub modulus: Vec<u32>,
}

fn one() -> u32 {
    1
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Vec<u32>,
}

/// Handle to GF(p^k). Cheap to clone; equal fields share one table set.
#[derive(Clone)]
pub struct Gf(Arc<Inner>);

static CACHE: Lazy<Mutex<HashMap<(u32, u32, Vec<u32>), Gf>>> = Lazy::new(Default::default);

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Gf {
    /// GF(p^k) with the lexicographically least monic irreducible modulus
    /// (coefficients compared from the constant term upward).
    pub fn new(p: u64, k: u32) -> Result<Gf> {
        if !is_prime(p) || p > u32::MAX as u64 / 2 {
            return Err(Error::NonPrime(p));
        }
        if k == 0 {
            return Err(Error::ReducibleModulus);
        }
        if k == 1 {
            return Gf::with_modulus(p, 1, &[0, 1]);
        }
        if (p as u128).pow(k) > MAX_EXT_ORDER as u128 {
            return Err(Error::FieldTooLarge((p as u128).pow(k).min(u64::MAX as u128) as u64));
        }
        let prime = Gf::prime(p)?;
        let total = (p as u64).pow(k);
        for idx in 0..total {
            let mut coeffs = vec![0u32; k as usize + 1];
            let mut rest = idx;
            for j in (0..k as usize).rev() {
                coeffs[j] = (rest % p) as u32;
                rest /= p;
            }
            coeffs[k as usize] = 1;
            if coeffs[0] == 0 {
                continue;
            }
            if is_irreducible(&prime, &Poly::new(&prime, coeffs.clone())) {
                return Gf::with_modulus(p, k, &coeffs);
            }
        }
        Err(Error::ReducibleModulus)
    }

    /// GF(q) for a prime power q, with the default modulus.
    pub fn of_order(q: u64) -> Result<Gf> {
        if q < 2 {
            return Err(Error::NonPrime(q));
        }
        let p = (2..=q).find(|d| q % d == 0).unwrap();
        let (mut r, mut k) = (q, 0);
        while r % p == 0 {
            r /= p;
            k += 1;
        }
        if r != 1 {
            return Err(Error::NonPrime(q));
        }
        Gf::new(p, k)
    }

    pub fn prime(p: u64) -> Result<Gf> {
        Gf::with_modulus(p, 1, &[0, 1])
    }

    /// GF(p^k) = GF(p)[x]/(modulus); the modulus must be monic irreducible of degree k.
    pub fn with_modulus(p: u64, k: u32, modulus: &[u32]) -> Result<Gf> {
        if !is_prime(p) || p > u32::MAX as u64 / 2 {
            return Err(Error::NonPrime(p));
        }
        let p32 = p as u32;
        let mut modulus: Vec<u32> = modulus.iter().map(|c| c % p32).collect();
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        if modulus.len() != k as usize + 1 || modulus[k as usize] != 1 {
            return Err(Error::ReducibleModulus);
        }
        if k == 1 {
            // Any monic linear modulus gives the prime field; normalise to x.
            modulus = vec![0, 1];
        }
        let key = (p32, k, modulus.clone());
        if let Some(f) = CACHE.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let field = if k == 1 {
            Gf(Arc::new(Inner {
                p: p32,
                k: 1,
                q: p32,
                modulus,
                exp: Vec::new(),
                log: Vec::new(),
                add_table: Vec::new(),
            }))
        } else {
            let q = (p as u128).pow(k);
            if q > MAX_EXT_ORDER as u128 {
                return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
            }
            let prime = Gf::prime(p)?;
            if !is_irreducible(&prime, &Poly::new(&prime, modulus.clone())) {
                return Err(Error::ReducibleModulus);
            }
            build_tables(p32, k, q as u32, modulus)?
        };
        CACHE.lock().unwrap().insert(key, field.clone());
        Ok(field)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Gf> {
        if spec.modulus.is_empty() {
            return Gf::new(spec.p, spec.k);
        }
        Gf::with_modulus(spec.p, spec.k, &spec.modulus)
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.0.p as u64, k: self.0.k, modulus: self.0.modulus.clone() }
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Coefficient vector (length k, low degree first).
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.k as usize);
        let mut r = a;
        for _ in 0..self.0.k {
            out.push(r % self.0.p);
            r /= self.0.p;
        }
        out
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Elem {
        // Reduce modulo the modulus first when given too many coefficients.
        let k = self.0.k as usize;
        if c.len() > k {
            let prime = Gf::prime(self.0.p as u64).expect("prime");
            let r = Poly::new(&prime, c.to_vec()).rem(&prime, &Poly::new(&prime, self.0.modulus.clone()));
            return self.from_coeffs(r.coeffs());
        }
        let mut acc = 0u32;
        for &ci in c.iter().rev() {
            acc = acc * self.0.p + ci % self.0.p;
        }
        acc
    }

    /// The class of `x` (a generator of the field over GF(p)).
    pub fn gen(&self) -> Elem {
        if self.0.k == 1 {
            // x ≡ 0 modulo the modulus x; use a primitive root instead for k = 1.
            return self.primitive_element();
        }
        self.0.p
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        if self.0.k > 1 {
            return self.0.exp[1];
        }
        let p = self.0.p as u64;
        if p == 2 {
            return 1;
        }
        let n = p - 1;
        let mut factors = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                factors.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..p)
            .find(|&g| factors.iter().all(|&r| self.pow(&(g as u32), n / r) != 1))
            .unwrap() as u32
    }

    /// Frobenius x ↦ x^p.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(&a, self.0.p as u64)
    }

    /// Iterate over all elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    #[inline]
    pub fn add_e(&self, a: Elem, b: Elem) -> Elem {
        let i = &*self.0;
        if i.k == 1 {
            let s = a + b;
            if s >= i.p { s - i.p } else { s }
        } else if !i.add_table.is_empty() {
            i.add_table[(a * i.q + b) as usize]
        } else {
            digit_add(i.p, i.k, a, b)
        }
    }

    #[inline]
    pub fn neg_e(&self, a: Elem) -> Elem {
        let i = &*self.0;
        if i.k == 1 {
            if a == 0 { 0 } else { i.p - a }
        } else {
            let mut out = 0;
            let mut pw = 1;
            let mut r = a;
            for _ in 0..i.k {
                let d = r % i.p;
                r /= i.p;
                out += ((i.p - d) % i.p) * pw;
                pw *= i.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub_e(&self, a: Elem, b: Elem) -> Elem {
        self.add_e(a, self.neg_e(b))
    }

    #[inline]
    pub fn mul_e(&self, a: Elem, b: Elem) -> Elem {
        let i = &*self.0;
        if i.k == 1 {
            ((a as u64 * b as u64) % i.p as u64) as u32
        } else if a == 0 || b == 0 {
            0
        } else {
            let s = i.log[a as usize] + i.log[b as usize];
            let m = i.q - 1;
            i.exp[(if s >= m { s - m } else { s }) as usize]
        }
    }

    pub fn inv_e(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let i = &*self.0;
        if i.k == 1 {
            // Extended Euclid.
            let (mut r0, mut r1) = (i.p as i64, a as i64);
            let (mut t0, mut t1) = (0i64, 1i64);
            while r1 != 0 {
                let qt = r0 / r1;
                (r0, r1) = (r1, r0 - qt * r1);
                (t0, t1) = (t1, t0 - qt * t1);
            }
            Some(t0.rem_euclid(i.p as i64) as u32)
        } else {
            let m = i.q - 1;
            Some(i.exp[((m - i.log[a as usize]) % m) as usize])
        }
    }

    /// Image of an integer under Z → GF(p).
    pub fn int(&self, n: i64) -> Elem {
        n.rem_euclid(self.0.p as i64) as u32
    }
}

fn digit_add(p: u32, k: u32, a: u32, b: u32) -> u32 {
    let (mut x, mut y, mut out, mut pw) = (a, b, 0, 1);
    for _ in 0..k {
        let d = (x % p + y % p) % p;
        x /= p;
        y /= p;
        out += d * pw;
        pw *= p;
    }
    out
}

fn build_tables(p: u32, k: u32, q: u32, modulus: Vec<u32>) -> Result<Gf> {
    // Multiplication by x on coefficient vectors, reduced by the monic modulus.
    let times_x = |a: u32| -> u32 {
        let mut c: Vec<u32> = Vec::with_capacity(k as usize);
        let mut r = a;
        for _ in 0..k {
            c.push(r % p);
            r /= p;
        }
        let top = c[k as usize - 1];
        let mut shifted = vec![0u32; k as usize];
        for j in (1..k as usize).rev() {
            shifted[j] = c[j - 1];
        }
        for j in 0..k as usize {
            shifted[j] = (shifted[j] + (p - top) * modulus[j] % p) % p;
        }
        shifted.iter().rev().fold(0, |acc, &d| acc * p + d)
    };
    let mul_slow = |a: u32, b: u32| -> u32 {
        // Horner in b's digits: a*b = Σ b_j x^j a.
        let mut digits = Vec::new();
        let mut r = b;
        for _ in 0..k {
            digits.push(r % p);
            r /= p;
        }
        let mut acc = 0;
        for &d in digits.iter().rev() {
            acc = times_x(acc);
            for _ in 0..d {
                acc = digit_add(p, k, acc, a);
            }
        }
        acc
    };
    let order = q - 1;
    let mut exp = Vec::new();
    'cand: for g in 2..q {
        exp.clear();
        let mut cur = 1u32;
        for _ in 0..order {
            exp.push(cur);
            cur = mul_slow(cur, g);
            if cur == 1 && (exp.len() as u32) < order {
                continue 'cand;
            }
        }
        if cur == 1 {
            break;
        }
    }
    if exp.len() as u32 != order {
        return Err(Error::ReducibleModulus);
    }
    let mut log = vec![0u32; q as usize];
    for (i, &e) in exp.iter().enumerate() {
        log[e as usize] = i as u32;
    }
    let add_table = if q <= ADD_TABLE_LIMIT {
        let mut t = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                t[(a * q + b) as usize] = digit_add(p, k, a, b);
            }
        }
        t
    } else {
        Vec::new()
    };
    Ok(Gf(Arc::new(Inner { p, k, q, modulus, exp, log, add_table })))
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.0.p, self.0.k, self.0.modulus)
    }
}

impl FiniteField for Gf {
    type Elem = Elem;

    fn order(&self) -> u64 {
        self.0.q as u64
    }
    fn characteristic(&self) -> u64 {
        self.0.p as u64
    }
    fn zero(&self) -> Elem {
        0
    }
    fn one(&self) -> Elem {
        1
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.add_e(*a, *b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        self.neg_e(*a)
    }
    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.sub_e(*a, *b)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul_e(*a, *b)
    }
    fn inv(&self, a: &Elem) -> Option<Elem> {
        self.inv_e(*a)
    }
    fn is_zero(&self, a: &Elem) -> bool {
        *a == 0
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(0..self.0.q)
    }
    fn from_u64(&self, n: u64) -> Elem {
        (n % self.0.p as u64) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        assert_eq!(Gf::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(Gf::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Gf::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Gf::new(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Gf::new(4, 1).unwrap_err(), Error::NonPrime(4));
        assert_eq!(Gf::with_modulus(3, 2, &[2, 0, 1]).unwrap_err(), Error::ReducibleModulus);
        assert!(Gf::with_modulus(3, 2, &[1, 0, 1]).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1), (2, 3), (3, 3), (3, 4)] {
            let f = Gf::new(p, k).unwrap();
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add_e(a, f.neg_e(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul_e(a, f.inv_e(a).unwrap()), 1);
                }
                // Sampled triples keep q = 81 cheap.
                for b in (0..q).step_by(((q / 9) as usize).max(1)) {
                    assert_eq!(f.add_e(a, b), f.add_e(b, a));
                    assert_eq!(f.mul_e(a, b), f.mul_e(b, a));
                    for c in (0..q).step_by(((q / 7) as usize).max(1)) {
                        assert_eq!(
                            f.mul_e(a, f.add_e(b, c)),
                            f.add_e(f.mul_e(a, b), f.mul_e(a, c))
                        );
                        assert_eq!(f.mul_e(f.mul_e(a, b), c), f.mul_e(a, f.mul_e(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism_of_order_k() {
        for (p, k) in [(2, 2), (3, 2), (2, 3), (5, 2)] {
            let f = Gf::new(p, k).unwrap();
            for a in f.elements() {
                let mut x = a;
                for _ in 0..k {
                    x = f.frobenius(x);
                }
                assert_eq!(x, a);
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add_e(a, b)), f.add_e(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.frobenius(f.mul_e(a, b)), f.mul_e(f.frobenius(a), f.frobenius(b)));
                }
            }
            // Order exactly k: some element is moved by every proper power.
            let g = f.gen();
            let mut x = g;
            for _ in 1..k {
                x = f.frobenius(x);
                assert_ne!(x, g);
            }
        }
    }
}
