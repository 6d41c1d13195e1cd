//! Class-2 exponent-`p` groups through their commutator bimap, pseudo-isometry groups
//! as stabilizers in `N*(Adj)`, and the subspace stabilizer problem `x·W·yᵗ = W`.

use crate::adjoint::{star_involution, AlgebraPair, StarAlgebra};
use crate::algdecomp::Wedderburn;
use crate::algebra::BlockDiag;
use crate::bimap::Bimap;
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::group::{closure, orbit_stabilizer, Caps};
use crate::matlin::{Mat, Subspace};
use crate::normalizer::{nsj_generators, normalizer_of, stabilize_subspace, GeneratorSet, Tag};
use crate::starnorm::star_normalizer;
use crate::tensor::exterior_over;
use num_bigint::BigUint;
use rand::Rng;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

/// Commutator structure constants of a class-2 group: `[x_i, x_j] = Σ_k c_ij[k]·z_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGroupData {
    pub p: u64,
    pub n: usize,
    pub m: usize,
    /// Keyed by 1-based `(i, j)`.
    pub c: BTreeMap<(usize, usize), Vec<u32>>,
}

impl PGroupData {
    pub fn from_json(v: &Value) -> Result<PGroupData> {
        let bad = |s: &str| Error::Input(format!("p-group JSON: {s}"));
        let num = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| bad(&format!("missing \"{k}\"")));
        let (p, n, m) = (num("p")?, num("n")? as usize, num("m")? as usize);
        let mut c = BTreeMap::new();
        if let Some(obj) = v.get("c") {
            let obj = obj.as_object().ok_or_else(|| bad("\"c\" must be an object"))?;
            for (key, val) in obj {
                let inner = key.trim().strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(|| bad(key))?;
                let (i, j) = inner.split_once(',').ok_or_else(|| bad(key))?;
                let i: usize = i.trim().parse().map_err(|_| bad(key))?;
                let j: usize = j.trim().parse().map_err(|_| bad(key))?;
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(bad(&format!("index out of range in {key}")));
                }
                let vals: Vec<u32> = val
                    .as_array()
                    .ok_or_else(|| bad(key))?
                    .iter()
                    .map(|x| x.as_i64().map(|x| x.rem_euclid(p as i64) as u32))
                    .collect::<Option<_>>()
                    .ok_or_else(|| bad(key))?;
                if vals.len() != m {
                    return Err(bad(&format!("{key} needs {m} entries")));
                }
                c.insert((i, j), vals);
            }
        }
        Ok(PGroupData { p, n, m, c })
    }

    pub fn to_json(&self) -> Value {
        let c: Map<String, Value> = self.c.iter().map(|((i, j), v)| (format!("({i},{j})"), json!(v))).collect();
        json!({"p": self.p, "n": self.n, "m": self.m, "c": c})
    }

    /// `|Hom(V, W)| = p^{n·m}`.
    pub fn hom_count(&self) -> BigUint {
        BigUint::from(self.p).pow((self.n * self.m) as u32)
    }
}

/// The commutator bimap `V × V → W`, made full.
pub fn baer_bimap(g: &PGroupData) -> Result<Bimap> {
    let f = Gf::prime(g.p)?;
    let n = g.n;
    let mut slices = vec![Mat::zero(&f, n, n); g.m];
    let mut seen = vec![vec![false; n]; n];
    for (&(i, j), vals) in &g.c {
        let (i, j) = (i - 1, j - 1);
        if i == j {
            if vals.iter().any(|x| *x != 0) {
                return Err(Error::NotAlternating);
            }
            continue;
        }
        for (k, &x) in vals.iter().enumerate() {
            let s = &mut slices[k];
            if seen[i][j] && (s.get(i, j) != x || s.get(j, i) != f.neg_e(x)) {
                return Err(Error::NotAlternating);
            }
            s.set(i, j, x);
            s.set(j, i, f.neg_e(x));
        }
        seen[i][j] = true;
        seen[j][i] = true;
    }
    Ok(Bimap::make_full(&f, n, n, &slices)?.0)
}

/// `Pseudo(∘)` with the data of its computation.
#[derive(Clone, Debug)]
pub struct PseudoResult {
    pub group: GeneratorSet,
    /// `|N*(Adj(∘))|`.
    pub star_order: Option<BigUint>,
    /// Orbit of the kernel of `∘` on the exterior square over `Adj(∘)`.
    pub orbit: usize,
}

/// Pseudo-isometries of a nondegenerate symmetric or alternating bimap, as the
/// stabilizer in `N*(Adj(∘))` of the kernel of `V ∧_A V → W`.
pub fn pseudo_isometry_group<R: Rng + ?Sized>(bm: &Bimap, rng: &mut R, caps: Caps) -> Result<PseudoResult> {
    let f = bm.field();
    if f.p() == 2 {
        return Err(Error::CharTwo);
    }
    if !bm.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let alternating = bm.is_alternating();
    let adj = star_involution(bm)?;
    let sa = StarAlgebra::from_pair(&adj)?;
    let nstar = star_normalizer(&sa, rng, caps)?;
    let ext = exterior_over(&adj, alternating)?;
    let rel = ext.kernel();
    let free = rel.free_columns();
    // Kernel of ĉirc in quotient coordinates.
    let quot = |v: &[u32]| -> Vec<u32> {
        let r = rel.reduce(v);
        free.iter().map(|&c| r[c]).collect()
    };
    let rows: Vec<Vec<u32>> = bm.kernel().basis_vecs().iter().map(|v| quot(v)).collect();
    let ker = Subspace::from_rows(f, free.len(), &rows);
    let induced = |g: &BlockDiag| -> Mat {
        let k = g.0[0].kronecker(&g.0[0]);
        let rows: Vec<Vec<u32>> = free.iter().map(|&c| quot(k.row(c))).collect();
        if rows.is_empty() {
            Mat::zero(f, 0, 0)
        } else {
            Mat::from_rows(f, &rows)
        }
    };
    let act = |g: &BlockDiag, s: &Subspace| s.image(&induced(g));
    let os = orbit_stabilizer(&sa.alg.one(), &nstar.gens, ker, act, nstar.order.as_ref(), caps)?;
    let mut group = GeneratorSet::new(sa.alg.dims());
    for g in os.stabilizer {
        group.push(g, Tag::Similitude);
    }
    group.orbit = Some(os.orbit);
    group.nsj_order = nstar.nsj_order.clone();
    group.order = match (&nstar.order, os.order) {
        (Some(o), _) => Some(o / BigUint::from(os.orbit)),
        (None, Some(x)) => Some(BigUint::from(x)),
        _ => None,
    };
    Ok(PseudoResult { group, star_order: nstar.order, orbit: os.orbit })
}

/// `{(x, y) : x·W·yᵗ = W}` for `W ≤ M_{a×b}`, or `{x : x·W·xᵗ = W}` when `hermitian`.
#[derive(Clone, Debug)]
pub struct StabilizerProblem {
    pub field: Gf,
    pub a: usize,
    pub b: usize,
    pub w: Vec<Mat>,
    /// `Some(ε)`: every basis element satisfies `w = ε·wᵗ`.
    pub hermitian: Option<i8>,
}

impl StabilizerProblem {
    pub fn new(field: &Gf, a: usize, b: usize, w: Vec<Mat>, hermitian: Option<i8>) -> Result<StabilizerProblem> {
        if w.iter().any(|m| m.rows() != a || m.cols() != b) {
            return Err(Error::DimensionMismatch(format!("W must consist of {a}×{b} matrices")));
        }
        if let Some(eps) = hermitian {
            if a != b {
                return Err(Error::NotSquare);
            }
            let e = field.int(eps as i64);
            if w.iter().any(|m| m.transpose().scale(e) != *m) {
                return Err(Error::Input(format!("W is not {eps}-symmetric")));
            }
        }
        Ok(StabilizerProblem { field: field.clone(), a, b, w, hermitian })
    }

    /// The bimap whose Gram space is `W`.
    pub fn bimap(&self) -> Result<Bimap> {
        Ok(Bimap::make_full(&self.field, self.a, self.b, &self.w)?.0)
    }

    pub fn from_json(v: &Value) -> Result<StabilizerProblem> {
        let bm = Bimap::from_json(v)?;
        let herm = match v.get("hermitian").and_then(Value::as_i64) {
            Some(e) => Some(e as i8),
            None => None,
        };
        StabilizerProblem::new(bm.field(), bm.a(), bm.b(), bm.slices().to_vec(), herm)
    }
}

/// Pairs `(X, X)` with `X = [[α·I_a, Z], [0, β·I_b]]`, `Z ∈ W`. Its radical is the `Z` block.
pub fn quadstab_embed(p: &StabilizerProblem) -> AlgebraPair {
    let f = &p.field;
    let (a, b) = (p.a, p.b);
    let n = a + b;
    let mut gens = Vec::new();
    let mut ea = Mat::zero(f, n, n);
    ea.set_block(0, 0, &Mat::identity(f, a));
    let mut eb = Mat::zero(f, n, n);
    eb.set_block(a, a, &Mat::identity(f, b));
    gens.push((ea.clone(), ea));
    gens.push((eb.clone(), eb));
    for z in &p.w {
        let mut x = Mat::zero(f, n, n);
        x.set_block(0, a, z);
        gens.push((x.clone(), x));
    }
    AlgebraPair::envelope(f, n, n, &gens)
}

/// Solution of a stabilizer problem: generators `(x, y)` and the group order.
#[derive(Clone, Debug)]
pub struct QuadStabResult {
    pub gens: Vec<(Mat, Mat)>,
    pub order: usize,
}

/// Solve through the normalizer of the block algebra: the stabilizer step yields
/// `diag(x, y⁻ᵗ)` on the first block.
pub fn quadstab_solve<R: Rng + ?Sized>(p: &StabilizerProblem, rng: &mut R, caps: Caps) -> Result<QuadStabResult> {
    let f = &p.field;
    let (a, b) = (p.a, p.b);
    if p.hermitian.is_some() {
        let res = pseudo_isometry_group(&p.bimap()?, rng, caps)?;
        let gens: Vec<(Mat, Mat)> = res.group.gens.iter().map(|g| (g.0[0].clone(), g.0[0].clone())).collect();
        let order = match res.group.order {
            Some(o) => usize::try_from(o).map_err(|_| Error::CapExceeded(caps.closure))?,
            None => res.group.closure_order(f, caps.closure)?,
        };
        return Ok(QuadStabResult { gens, order });
    }
    let wspace = Subspace::from_rows(f, a * b, &p.w.iter().map(|m| m.flatten()).collect::<Vec<_>>());
    if wspace.dim() == 0 {
        // Every pair stabilizes the zero space.
        let trivial = AlgebraPair::envelope(f, a, b, &[]).to_algebra();
        let g = normalizer_of(&trivial, rng, caps)?;
        let gens = g.gens.iter().map(|x| (x.0[0].clone(), x.0[1].inverse().expect("unit").transpose())).collect();
        let order = g.order.and_then(|o| usize::try_from(o).ok()).ok_or(Error::CapExceeded(caps.closure))?;
        return Ok(QuadStabResult { gens, order });
    }
    let alg = quadstab_embed(p).to_algebra();
    let w = Wedderburn::decompose(&alg, None, rng)?;
    let lay = w.layers();
    let nsj = nsj_generators(&w, &lay, rng)?;
    let stab = stabilize_subspace(&alg, &nsj, &w.j, nsj.order.as_ref(), caps)?;
    let mut gens = Vec::new();
    let mut proj = Vec::new();
    for g in &stab.gens {
        let pm = &g.0[0];
        let x = pm.submatrix(0, 0, a, a);
        let yi = pm.submatrix(a, a, b, b);
        if !pm.submatrix(0, a, a, b).is_zero() || !pm.submatrix(a, 0, b, a).is_zero() {
            return Err(Error::Input("stabilizer element is not block diagonal".into()));
        }
        let y = yi.inverse().ok_or(Error::Singular)?.transpose();
        proj.push(BlockDiag(vec![x.clone(), y.clone()]));
        gens.push((x, y));
    }
    let one = BlockDiag::identity(f, &[a, b]);
    let order = closure(&one, &proj, caps.closure)?.len();
    Ok(QuadStabResult { gens, order })
}

/// Whether `x·W·yᵗ = W`.
pub fn stabilizes(p: &StabilizerProblem, x: &Mat, y: &Mat) -> bool {
    let f = &p.field;
    let w = Subspace::from_rows(f, p.a * p.b, &p.w.iter().map(|m| m.flatten()).collect::<Vec<_>>());
    let yt = y.transpose();
    p.w.iter().all(|m| w.contains(&(&(x * m) * &yt).flatten()))
}

#[cfg(test)]
mod tests;
