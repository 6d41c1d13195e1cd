use super::FiniteField;

/// Dense univariate polynomial, coefficients low degree first, no trailing zeros.
/// Arithmetic takes the coefficient field explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    c: Vec<E>,
}

impl<E: Clone + Eq> Poly<E> {
    pub fn new<F: FiniteField<Elem = E>>(f: &F, mut c: Vec<E>) -> Self {
        while c.last().map_or(false, |x| f.is_zero(x)) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one<F: FiniteField<Elem = E>>(f: &F) -> Self {
        Poly { c: vec![f.one()] }
    }

    pub fn constant<F: FiniteField<Elem = E>>(f: &F, a: E) -> Self {
        Poly::new(f, vec![a])
    }

    /// The monomial `x`.
    pub fn x<F: FiniteField<Elem = E>>(f: &F) -> Self {
        Poly { c: vec![f.zero(), f.one()] }
    }

    pub fn monomial<F: FiniteField<Elem = E>>(f: &F, a: E, d: usize) -> Self {
        let mut c = vec![f.zero(); d + 1];
        c[d] = a;
        Poly::new(f, c)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.c.last()
    }

    pub fn coeff<F: FiniteField<Elem = E>>(&self, f: &F, i: usize) -> E {
        self.c.get(i).cloned().unwrap_or_else(|| f.zero())
    }

    pub fn is_one<F: FiniteField<Elem = E>>(&self, f: &F) -> bool {
        self.c.len() == 1 && self.c[0] == f.one()
    }

    pub fn add<F: FiniteField<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| f.add(&self.coeff(f, i), &o.coeff(f, i))).collect();
        Poly::new(f, c)
    }

    pub fn sub<F: FiniteField<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| f.sub(&self.coeff(f, i), &o.coeff(f, i))).collect();
        Poly::new(f, c)
    }

    pub fn neg<F: FiniteField<Elem = E>>(&self, f: &F) -> Self {
        Poly { c: self.c.iter().map(|a| f.neg(a)).collect() }
    }

    pub fn scale<F: FiniteField<Elem = E>>(&self, f: &F, a: &E) -> Self {
        Poly::new(f, self.c.iter().map(|x| f.mul(x, a)).collect())
    }

    pub fn mul<F: FiniteField<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![f.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, c)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem<F: FiniteField<Elem = E>>(&self, f: &F, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.lead().unwrap()).unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = f.mul(&r[i + dd], &inv);
            if f.is_zero(&t) {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[i + j] = f.sub(&r[i + j], &f.mul(&t, b));
            }
            q[i] = t;
        }
        r.truncate(dd);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem<F: FiniteField<Elem = E>>(&self, f: &F, d: &Self) -> Self {
        self.divrem(f, d).1
    }

    pub fn monic<F: FiniteField<Elem = E>>(&self, f: &F) -> Self {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => self.scale(f, &f.inv(l).unwrap()),
        }
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd<F: FiniteField<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Extended gcd: returns (g, s, t) with s·self + t·o = g, g monic.
    pub fn xgcd<F: FiniteField<Elem = E>>(&self, f: &F, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1);
            let s2 = s0.sub(f, &q.mul(f, &s1));
            let t2 = t0.sub(f, &q.mul(f, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = f.inv(&l).unwrap();
                (r0.scale(f, &inv), s0.scale(f, &inv), t0.scale(f, &inv))
            }
        }
    }

    pub fn mulmod<F: FiniteField<Elem = E>>(&self, f: &F, o: &Self, m: &Self) -> Self {
        self.mul(f, o).rem(f, m)
    }

    /// `self^e mod m`.
    pub fn powmod<F: FiniteField<Elem = E>>(&self, f: &F, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(f, m);
        let mut acc = Poly::one(f).rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(f, &base, m);
            }
            base = base.mulmod(f, &base, m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative<F: FiniteField<Elem = E>>(&self, f: &F) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| f.mul(a, &f.from_u64(i as u64)))
            .collect();
        Poly::new(f, c)
    }

    pub fn eval<F: FiniteField<Elem = E>>(&self, f: &F, x: &E) -> E {
        self.c.iter().rev().fold(f.zero(), |acc, a| f.add(&f.mul(&acc, x), a))
    }

    /// Composition `self(g) mod m`.
    pub fn compose_mod<F: FiniteField<Elem = E>>(&self, f: &F, g: &Self, m: &Self) -> Self {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = acc.mulmod(f, g, m).add(f, &Poly::constant(f, a.clone()));
        }
        acc.rem(f, m)
    }

    /// Apply a coefficient map (e.g. Frobenius or an embedding).
    pub fn map<G: FiniteField>(&self, g: &G, h: impl Fn(&E) -> G::Elem) -> Poly<G::Elem> {
        Poly::new(g, self.c.iter().map(h).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;

    fn p(f: &Gf, c: &[u32]) -> Poly<u32> {
        Poly::new(f, c.to_vec())
    }

    #[test]
    fn divrem_reconstructs() {
        let f = Gf::new(5, 1).unwrap();
        let a = p(&f, &[1, 2, 3, 4, 1, 3]);
        let b = p(&f, &[2, 0, 1]);
        let (q, r) = a.divrem(&f, &b);
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn xgcd_bezout() {
        let f = Gf::new(7, 1).unwrap();
        let a = p(&f, &[1, 0, 1]).mul(&f, &p(&f, &[3, 1]));
        let b = p(&f, &[3, 1]).mul(&f, &p(&f, &[1, 1, 1]));
        let (g, s, t) = a.xgcd(&f, &b);
        assert_eq!(g, p(&f, &[3, 1]));
        assert_eq!(s.mul(&f, &a).add(&f, &t.mul(&f, &b)), g);
    }

    #[test]
    fn powmod_matches_repeated_mul() {
        let f = Gf::new(3, 2).unwrap();
        let m = p(&f, &[1, 2, 0, 1]);
        let a = p(&f, &[f.gen(), 1]);
        let mut acc = Poly::one(&f);
        for e in 0..20u128 {
            assert_eq!(a.powmod(&f, e, &m), acc);
            acc = acc.mulmod(&f, &a, &m);
        }
    }
}
