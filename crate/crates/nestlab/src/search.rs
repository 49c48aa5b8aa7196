//! Exhaustive search for nest decompositions of a finite topology: the
//! minimal number of nests of open sets whose union is a T₁-separating
//! subbasis.
//!
//! Enlarging a candidate nest to a maximal chain of opens never breaks
//! T₁-separation and never changes the generated topology (everything
//! stays inside the opens), so it suffices to search over maximal chains
//! in the inclusion order of the opens.

use serde::Serialize;

use crate::family::{Mask, NestError, SetFamily};
use crate::topology::{subbasis_closure, FiniteTopology};

pub const DEFAULT_BOUND: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct NeightWitness {
    pub neight: usize,
    pub nests: Vec<Vec<Vec<String>>>,
}

/// Every chain in the powerset of an n-point ground, as a strictly
/// increasing mask sequence. Includes the empty chain. Grounds above the
/// supported width are refused by the callers.
pub fn all_chains(n: usize) -> Vec<Vec<Mask>> {
    let total: Mask = 1 << n;
    let mut out = vec![Vec::new()];
    let mut stack: Vec<Mask> = Vec::new();
    for start in 0..total {
        stack.push(start);
        grow_chain(total, &mut stack, &mut out);
        stack.pop();
    }
    out
}

fn grow_chain(total: Mask, stack: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
    out.push(stack.clone());
    let top = *stack.last().unwrap();
    for next in (top + 1)..total {
        if next & top == top {
            stack.push(next);
            grow_chain(total, stack, out);
            stack.pop();
        }
    }
}

/// All maximal chains of the inclusion order on `opens`.
pub fn maximal_chains(opens: &[Mask]) -> Vec<Vec<Mask>> {
    let minimal: Vec<Mask> = opens
        .iter()
        .copied()
        .filter(|&m| !opens.iter().any(|&n| n != m && n & m == n))
        .collect();
    let mut chains = Vec::new();
    let mut stack: Vec<Mask> = Vec::new();
    for &m in &minimal {
        stack.push(m);
        extend_chain(opens, &mut stack, &mut chains);
        stack.pop();
    }
    chains
}

fn extend_chain(opens: &[Mask], stack: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
    let top = *stack.last().unwrap();
    // covers of top: minimal strict supersets among the opens
    let supersets: Vec<Mask> = opens
        .iter()
        .copied()
        .filter(|&n| n != top && n & top == top)
        .collect();
    let covers: Vec<Mask> = supersets
        .iter()
        .copied()
        .filter(|&n| !supersets.iter().any(|&k| k != n && n & k == k))
        .collect();
    if covers.is_empty() {
        out.push(stack.clone());
        return;
    }
    for c in covers {
        stack.push(c);
        extend_chain(opens, stack, out);
        stack.pop();
    }
}

fn family_t1(n: usize, sets: &[Mask]) -> bool {
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if !sets
                .iter()
                .any(|&m| m & (1 << x) != 0 && m & (1 << y) == 0)
            {
                return false;
            }
        }
    }
    true
}

/// Minimal number of nests of opens whose union is a T₁-separating
/// subbasis for the topology, together with a witness decomposition.
/// `None` when no decomposition exists at any size (the opens themselves
/// fail to T₁-separate or to generate).
pub fn neight(t: &FiniteTopology, bound: usize) -> Result<Option<NeightWitness>, NestError> {
    let n = t.ground().len();
    if n > bound {
        return Err(NestError::BoundExceeded { size: n, bound });
    }
    // the union of all maximal chains is the whole collection of opens;
    // if that fails, no chain family can succeed
    if !family_t1(n, t.opens()) {
        return Ok(None);
    }
    let all_closure = subbasis_closure(n, t.opens());
    if !all_closure.iter().copied().eq(t.opens().iter().copied()) {
        return Ok(None);
    }
    let chains = maximal_chains(t.opens());
    for k in 1..=chains.len() {
        let mut chosen: Vec<usize> = Vec::new();
        if let Some(witness) = pick(t, &chains, k, 0, &mut chosen) {
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

fn pick(
    t: &FiniteTopology,
    chains: &[Vec<Mask>],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<NeightWitness> {
    if chosen.len() == k {
        let n = t.ground().len();
        let union: Vec<Mask> = chosen
            .iter()
            .flat_map(|&i| chains[i].iter().copied())
            .collect();
        if !family_t1(n, &union) {
            return None;
        }
        let gen = subbasis_closure(n, &union);
        if !gen.iter().copied().eq(t.opens().iter().copied()) {
            return None;
        }
        let nests = chosen
            .iter()
            .map(|&i| {
                SetFamily::from_masks_with_ground(t.ground().to_vec(), chains[i].iter().copied())
                    .member_labels()
            })
            .collect();
        return Some(NeightWitness { neight: k, nests });
    }
    for i in start..chains.len() {
        chosen.push(i);
        if let Some(w) = pick(t, chains, k, i + 1, chosen) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

/// The two-nest witness, when one exists within the bound.
pub fn search_nest_pair(
    t: &FiniteTopology,
    bound: usize,
) -> Result<Option<(SetFamily, SetFamily)>, NestError> {
    let n = t.ground().len();
    if n > bound {
        return Err(NestError::BoundExceeded { size: n, bound });
    }
    let chains = maximal_chains(t.opens());
    for i in 0..chains.len() {
        for j in i..chains.len() {
            let union: Vec<Mask> = chains[i]
                .iter()
                .chain(chains[j].iter())
                .copied()
                .collect();
            if !family_t1(n, &union) {
                continue;
            }
            let gen = subbasis_closure(n, &union);
            if gen.iter().copied().eq(t.opens().iter().copied()) {
                let l =
                    SetFamily::from_masks_with_ground(t.ground().to_vec(), chains[i].iter().copied());
                let r =
                    SetFamily::from_masks_with_ground(t.ground().to_vec(), chains[j].iter().copied());
                return Ok(Some((l, r)));
            }
        }
    }
    Ok(None)
}
