//! Normalizers `N(A)` of matrix (pair) algebras: `N(A) = ⟨1+J, Stab_{N(S;J)}(J)⟩`.

mod nsj;

pub use nsj::{layered_centralizer, nsj_generators, simple_unit_generators, unipotent_elements, units_order};

use crate::adjoint::AlgebraPair;
use crate::algdecomp::Wedderburn;
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::error::{Error, Result};
use crate::group::{closure_order, orbit_stabilizer, Caps};
use crate::matlin::{Mat, Subspace};
use num_bigint::BigUint;
use rand::Rng;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Unipotent,
    Torus,
    Semilinear,
    TensorFactor,
    Swap,
    Stabilizer,
    Isometry,
    Similitude,
    Exchange,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Unipotent => "unipotent",
            Tag::Torus => "torus",
            Tag::Semilinear => "semilinear",
            Tag::TensorFactor => "tensor-factor",
            Tag::Swap => "swap",
            Tag::Stabilizer => "stabilizer",
            Tag::Isometry => "isometry",
            Tag::Similitude => "similitude",
            Tag::Exchange => "exchange",
        }
    }
}

/// Invertible block-diagonal elements `g`, acting on an algebra by `x ↦ g·x·g⁻¹`.
/// For a pair algebra on `U × V`, `g = diag(F, G^{-t})` for the pair `(F, G)`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub dims: Vec<usize>,
    pub gens: Vec<BlockDiag>,
    pub tags: Vec<Tag>,
    pub order: Option<BigUint>,
    /// `|N(S;J)|` from the structural formula, when known.
    pub nsj_order: Option<BigUint>,
    pub orbit: Option<usize>,
}

impl GeneratorSet {
    pub fn new(dims: &[usize]) -> GeneratorSet {
        GeneratorSet { dims: dims.to_vec(), gens: Vec::new(), tags: Vec::new(), order: None, nsj_order: None, orbit: None }
    }

    pub fn push(&mut self, g: BlockDiag, tag: Tag) {
        if !g.is_identity() && !self.gens.contains(&g) {
            self.gens.push(g);
            self.tags.push(tag);
        }
    }

    pub fn extend(&mut self, o: &GeneratorSet) {
        for (g, t) in o.gens.iter().zip(&o.tags) {
            self.push(g.clone(), *t);
        }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn closure_order(&self, f: &crate::field::Gf, cap: usize) -> Result<usize> {
        closure_order(&BlockDiag::identity(f, &self.dims), &self.gens, cap)
    }

    /// The autotopism-convention pair `(F, G)` of an internal element `diag(F, G^{-t})`.
    pub fn to_pair(g: &BlockDiag) -> (Mat, Mat) {
        (g.0[0].clone(), g.0[1].inverse().expect("invertible").transpose())
    }

    pub fn from_pair(f: &Mat, g: &Mat) -> Result<BlockDiag> {
        Ok(BlockDiag(vec![f.clone(), g.inverse().ok_or(Error::Singular)?.transpose()]))
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .gens
            .iter()
            .zip(&self.tags)
            .map(|(g, t)| {
                if self.dims.len() == 2 {
                    let (a, b) = GeneratorSet::to_pair(g);
                    json!({"F": a.to_json(), "G": b.to_json(), "tag": t.name()})
                } else {
                    json!({"blocks": g.0.iter().map(Mat::to_json).collect::<Vec<_>>(), "tag": t.name()})
                }
            })
            .collect();
        json!({
            "dims": self.dims,
            "generators": gens,
            "order": self.order.as_ref().map(|o| o.to_string()),
            "nsj_order": self.nsj_order.as_ref().map(|o| o.to_string()),
            "orbit": self.orbit,
        })
    }
}

pub fn gl_order(n: usize, q: &BigUint) -> BigUint {
    let qn = q.pow(n as u32);
    let mut o = BigUint::from(1u32);
    let mut qi = BigUint::from(1u32);
    for _ in 0..n {
        o *= &qn - &qi;
        qi *= q;
    }
    o
}

/// `g·x·g⁻¹` for each basis element.
pub fn conjugate_space(alg: &MatAlgebra, g: &BlockDiag, ginv: &BlockDiag, s: &Subspace) -> Subspace {
    let xs: Vec<BlockDiag> = alg.elements_of(s).iter().map(|x| g.conj(x, ginv)).collect();
    alg.span_of(&xs)
}

/// Whether `g·A·g⁻¹ = A` for an internal element `g`.
pub fn normalizes_internal(alg: &MatAlgebra, g: &BlockDiag) -> Result<bool> {
    let ginv = g.inverse().ok_or(Error::Singular)?;
    Ok(alg.basis().iter().all(|x| alg.contains(&g.conj(x, &ginv))))
}

/// Whether `(F·X·F⁻¹, G^{-t}·Y·G^t) ∈ A` for every basis pair `(X, Y)`.
pub fn normalizes(f: &Mat, g: &Mat, a: &AlgebraPair) -> Result<bool> {
    if !f.is_invertible() || !g.is_invertible() {
        return Err(Error::Singular);
    }
    normalizes_internal(&a.to_algebra(), &GeneratorSet::from_pair(f, g)?)
}

/// `1 + z` for a filtration-adapted prime-field basis of `J`.
pub fn unipotent_generators(alg: &MatAlgebra, jpow: &[Subspace]) -> GeneratorSet {
    let mut gs = GeneratorSet::new(alg.dims());
    for g in unipotent_elements(alg, jpow) {
        gs.push(g, Tag::Unipotent);
    }
    gs
}

/// Stabilizer in `⟨G⟩` of a subspace of the algebra's flattened space under conjugation.
/// `group_order`, when known, lets the Schreier loop stop as soon as the stabilizer is complete.
pub fn stabilize_subspace(
    alg: &MatAlgebra,
    g: &GeneratorSet,
    target: &Subspace,
    group_order: Option<&BigUint>,
    caps: Caps,
) -> Result<GeneratorSet> {
    let one = alg.one();
    let act = |x: &BlockDiag, s: &Subspace| -> Subspace {
        let xi = x.inverse().expect("invertible");
        conjugate_space(alg, x, &xi, s)
    };
    let os = orbit_stabilizer(&one, &g.gens, target.clone(), act, group_order, caps)?;
    let mut out = GeneratorSet::new(alg.dims());
    for s in os.stabilizer {
        out.push(s, Tag::Stabilizer);
    }
    out.orbit = Some(os.orbit);
    out.order = match (group_order, os.order) {
        (Some(o), _) => Some(o / BigUint::from(os.orbit)),
        (None, Some(n)) => Some(BigUint::from(n)),
        _ => None,
    };
    Ok(out)
}

/// Generators (and, under caps, the order) of `N(A)`.
pub fn normalizer_of<R: Rng + ?Sized>(alg: &MatAlgebra, rng: &mut R, caps: Caps) -> Result<GeneratorSet> {
    let w = Wedderburn::decompose(alg, None, rng)?;
    normalizer_from(&w, rng, caps)
}

pub fn normalizer_from<R: Rng + ?Sized>(w: &Wedderburn, rng: &mut R, caps: Caps) -> Result<GeneratorSet> {
    let alg = &w.alg;
    let lay = w.layers();
    let nsj = nsj_generators(w, &lay, rng)?;
    let stab = stabilize_subspace(alg, &nsj, &w.j, nsj.order.as_ref(), caps)?;
    let uni = unipotent_generators(alg, &w.jpow);
    let mut out = GeneratorSet::new(alg.dims());
    out.extend(&uni);
    out.extend(&stab);
    out.nsj_order = nsj.order.clone();
    out.orbit = stab.orbit;
    // |N(A)| = |1+J|·|Stab| / |(1+J) ∩ N(S)|.
    let q = BigUint::from(alg.field().q());
    let jsize = q.pow(w.j.dim() as u32);
    out.order = match (&stab.order, usize::try_from(&jsize)) {
        (Some(so), Ok(n)) if n <= caps.filter => {
            let inter = unipotent_in_normalizer(w, n)?;
            Some(jsize * so / BigUint::from(inter))
        }
        _ => None,
    };
    for g in &out.gens {
        debug_assert!(normalizes_internal(alg, g)?, "emitted generator fails to normalize");
    }
    Ok(out)
}

/// `|(1+J) ∩ N(S)|` by enumeration of `1 + J`.
fn unipotent_in_normalizer(w: &Wedderburn, total: usize) -> Result<usize> {
    let alg = &w.alg;
    let f = alg.field();
    let q = f.q() as usize;
    let jb = alg.elements_of(&w.j);
    let sb = alg.elements_of(&w.s);
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let mut z = alg.zero();
        for b in &jb {
            z = z.add(&b.scale((c % q) as u32));
            c /= q;
        }
        let g = alg.one().add(&z);
        let gi = g.inverse().ok_or(Error::Singular)?;
        if sb.iter().all(|s| w.s.contains(&g.conj(s, &gi).flatten())) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests;
