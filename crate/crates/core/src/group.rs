//! Matrix groups given by generators: closure enumeration and orbit-stabilizer.

use crate::algebra::BlockDiag;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;

/// Enumeration limits shared by the group algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub orbit: usize,
    pub closure: usize,
    pub filter: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { orbit: 1_000_000, closure: 1_000_000, filter: 1_000_000 }
    }
}

/// All elements of `⟨gens⟩` (the identity is `one`), by breadth-first search.
pub fn closure(one: &BlockDiag, gens: &[BlockDiag], cap: usize) -> Result<HashSet<BlockDiag>> {
    let mut seen = HashSet::new();
    seen.insert(one.clone());
    let mut queue = VecDeque::from([one.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

pub fn closure_order(one: &BlockDiag, gens: &[BlockDiag], cap: usize) -> Result<usize> {
    closure(one, gens, cap).map(|s| s.len())
}

/// Result of an orbit-stabilizer computation.
#[derive(Clone, Debug)]
pub struct OrbitStab {
    pub orbit: usize,
    pub stabilizer: Vec<BlockDiag>,
    /// `|Stab|`, when its closure stayed under the cap.
    pub order: Option<usize>,
}

/// Orbit of `point` under `⟨gens⟩` for a left action, and generators of its stabilizer.
/// Schreier generators are filtered through an incrementally grown closure; the loop
/// stops early once the closure reaches `|G| / |orbit|` (when `|G|` is known).
pub fn orbit_stabilizer<P, A>(
    one: &BlockDiag,
    gens: &[BlockDiag],
    point: P,
    act: A,
    group_order: Option<&BigUint>,
    caps: Caps,
) -> Result<OrbitStab>
where
    P: Clone + Eq + Hash,
    A: Fn(&BlockDiag, &P) -> P,
{
    let mut index: HashMap<P, usize> = HashMap::new();
    let mut points = vec![point.clone()];
    let mut trans = vec![one.clone()];
    index.insert(point, 0);
    let mut i = 0;
    while i < points.len() {
        for g in gens {
            let q = act(g, &points[i]);
            if !index.contains_key(&q) {
                if points.len() >= caps.orbit {
                    return Err(Error::OrbitCapExceeded(caps.orbit));
                }
                index.insert(q.clone(), points.len());
                trans.push(g.mul(&trans[i]));
                points.push(q);
            }
        }
        i += 1;
    }
    let target = group_order.and_then(|o| usize::try_from(o / BigUint::from(points.len())).ok());
    let inv: Vec<BlockDiag> = trans.iter().map(|t| t.inverse().expect("group element")).collect();

    let mut stab: Vec<BlockDiag> = Vec::new();
    let mut elems: Option<HashSet<BlockDiag>> = Some(HashSet::from([one.clone()]));
    let mut seen_gens: HashSet<BlockDiag> = HashSet::new();
    'outer: for (pi, p) in points.iter().enumerate() {
        for g in gens {
            if let (Some(t), Some(e)) = (target, &elems) {
                if e.len() >= t {
                    break 'outer;
                }
            }
            let j = index[&act(g, p)];
            let s = inv[j].mul(g).mul(&trans[pi]);
            match &elems {
                Some(e) if e.contains(&s) => {}
                Some(_) => {
                    stab.push(s);
                    elems = closure(one, &stab, caps.closure).ok();
                }
                None => {
                    if !s.is_identity() && seen_gens.insert(s.clone()) {
                        stab.push(s);
                    }
                }
            }
        }
    }
    let order = elems.map(|e| e.len());
    Ok(OrbitStab { orbit: points.len(), stabilizer: stab, order })
}

/// Generators of an explicitly listed group: keep each element not yet generated.
pub fn generators_of(one: &BlockDiag, elems: &[BlockDiag], cap: usize) -> Result<Vec<BlockDiag>> {
    let mut gens = Vec::new();
    let mut have: HashSet<BlockDiag> = HashSet::from([one.clone()]);
    for x in elems {
        if have.len() >= elems.len() {
            break;
        }
        if !have.contains(x) {
            gens.push(x.clone());
            have = closure(one, &gens, cap)?;
        }
    }
    Ok(gens)
}
