//! Group computations behind a common interface: the structural algorithms and
//! exhaustive enumeration.

use crate::adjoint::StarAlgebra;
use crate::algebra::{BlockDiag, MatAlgebra};
use crate::bimap::Bimap;
use crate::error::Result;
use crate::group::{generators_of, Caps};
use crate::normalizer::normalizer_of;
use crate::oracle::{brute_autotopisms, brute_normalizer, brute_pseudo_isometries, ElementTable};
use crate::pgroup::{pseudo_isometry_group, quadstab_solve, StabilizerProblem};
use crate::registry::{Named, Registry};
use crate::starnorm::star_normalizer;
use num_bigint::BigUint;
use rand::RngCore;
use serde_json::{json, Value};

/// A group by generators, with its order when known.
#[derive(Clone, Debug)]
pub struct GroupSummary {
    pub dims: Vec<usize>,
    pub gens: Vec<BlockDiag>,
    pub order: Option<BigUint>,
}

impl GroupSummary {
    pub fn to_json(&self) -> Value {
        json!({
            "dims": self.dims,
            "order": self.order.as_ref().map(|o| o.to_string()),
            "generators": self.gens.iter().map(|g| g.0.iter().map(|m| m.to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Autotopisms are reported as `diag(F, G)` with `M ↦ F·M·Gᵀ`; normalizer elements
/// in the internal form `diag(F, G⁻ᵀ)`.
pub trait GroupStrategy: Named {
    fn normalizer(&self, alg: &MatAlgebra, rng: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary>;
    fn star_normalizer(&self, sa: &StarAlgebra, rng: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary>;
    fn autotopisms(&self, bm: &Bimap, rng: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary>;
    fn pseudo_isometries(&self, bm: &Bimap, rng: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary>;
}

pub struct Structural;
pub struct Brute;

impl Named for Structural {
    fn name(&self) -> &'static str {
        "structural"
    }
    fn summary(&self) -> &'static str {
        "Wedderburn decomposition, N(S;J) generators and orbit-stabilizer"
    }
}

impl GroupStrategy for Structural {
    fn normalizer(&self, alg: &MatAlgebra, rng: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary> {
        let g = normalizer_of(alg, rng, caps)?;
        Ok(GroupSummary { dims: alg.dims().to_vec(), gens: g.gens, order: g.order })
    }

    fn star_normalizer(&self, sa: &StarAlgebra, rng: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary> {
        let g = star_normalizer(sa, rng, caps)?;
        Ok(GroupSummary { dims: sa.alg.dims().to_vec(), gens: g.gens, order: g.order })
    }

    fn autotopisms(&self, bm: &Bimap, rng: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary> {
        let p = StabilizerProblem::new(bm.field(), bm.a(), bm.b(), bm.slices().to_vec(), None)?;
        let r = quadstab_solve(&p, rng, caps)?;
        let gens = r.gens.into_iter().map(|(x, y)| BlockDiag(vec![x, y])).collect();
        Ok(GroupSummary { dims: vec![bm.a(), bm.b()], gens, order: Some(BigUint::from(r.order)) })
    }

    fn pseudo_isometries(&self, bm: &Bimap, rng: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary> {
        let r = pseudo_isometry_group(bm, rng, caps)?;
        Ok(GroupSummary { dims: vec![bm.a()], gens: r.group.gens, order: r.group.order })
    }
}

fn from_table(t: ElementTable, caps: Caps) -> Result<GroupSummary> {
    let one = BlockDiag::identity(t.elements()[0].field(), &t.dims);
    let gens = generators_of(&one, t.elements(), caps.closure)?;
    Ok(GroupSummary { dims: t.dims.clone(), gens, order: Some(BigUint::from(t.order())) })
}

impl Named for Brute {
    fn name(&self) -> &'static str {
        "brute"
    }
    fn summary(&self) -> &'static str {
        "exhaustive enumeration of GL (desk scale only)"
    }
}

impl GroupStrategy for Brute {
    fn normalizer(&self, alg: &MatAlgebra, _: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary> {
        from_table(brute_normalizer(alg, None, caps.filter)?, caps)
    }

    fn star_normalizer(&self, sa: &StarAlgebra, _: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary> {
        from_table(brute_normalizer(&sa.alg, Some(sa), caps.filter)?, caps)
    }

    fn autotopisms(&self, bm: &Bimap, _: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary> {
        from_table(brute_autotopisms(bm, caps.filter)?, caps)
    }

    fn pseudo_isometries(&self, bm: &Bimap, _: &mut dyn RngCore, caps: Caps) -> Result<GroupSummary> {
        from_table(brute_pseudo_isometries(bm, caps.filter)?, caps)
    }
}

pub fn group_strategies() -> Registry<dyn GroupStrategy> {
    let mut r: Registry<dyn GroupStrategy> = Registry::default();
    r.register(Box::new(Structural));
    r.register(Box::new(Brute));
    r
}
