//! Finite fields GF(p^k), polynomials over them, and factorization.

mod ext;
mod factor;
mod gf;
mod poly;

pub use ext::ExtField;
pub use factor::{is_irreducible, poly_factor, roots};
pub use gf::{Elem, FieldSpec, Gf};
pub use poly::Poly;

use rand::Rng;
use std::fmt::Debug;
use std::hash::Hash;

/// Arithmetic shared by the base fields and their abstract extensions.
pub trait FiniteField: Clone {
    type Elem: Clone + Eq + Hash + Debug;

    fn order(&self) -> u64;
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn from_u64(&self, n: u64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The unique p-th root (Frobenius is bijective on a finite field).
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.order() / self.characteristic())
    }
}
