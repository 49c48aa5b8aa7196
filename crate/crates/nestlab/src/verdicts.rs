//! Theorem checkers: both sides of each finite-instance equivalence are
//! evaluated independently and reported, together with counterexamples
//! when a side fails.

use serde::Serialize;

use crate::family::{labels_of, NestError, SetFamily};
use crate::topology::{order_open_sets, subbasis_closure, FiniteTopology};

/// Two nests T₁-separate jointly iff both T₀-separate and their induced
/// orders are mirror images.
#[derive(Debug, Clone, Serialize)]
pub struct Thm21Verdict {
    pub union_t1: bool,
    pub t0_left: bool,
    pub t0_right: bool,
    pub orders_mirror: bool,
    pub right_side: bool,
    pub agree: bool,
    pub counterexample: Option<(String, String)>,
}

pub fn theorem21_check(l: &SetFamily, r: &SetFamily) -> Result<Thm21Verdict, NestError> {
    if !l.same_ground(r) {
        return Err(NestError::GroundMismatch);
    }
    if !l.is_nest() || !r.is_nest() {
        return Err(NestError::Precondition("both families must be nests".into()));
    }
    let union_t1 = l.union(r)?.t1_separates();
    let t0_left = l.t0_separates();
    let t0_right = r.t0_separates();
    let ol = l.induced_order();
    let or_rev = r.induced_order().reverse();
    let orders_mirror = ol == or_rev;
    let right_side = t0_left && t0_right && orders_mirror;
    let agree = union_t1 == right_side;

    let mut counterexample = None;
    if !agree {
        let ground = l.ground();
        'outer: for x in 0..ground.len() {
            for y in 0..ground.len() {
                if x != y && ol.lt(x, y) != or_rev.lt(x, y) {
                    counterexample = Some((ground[x].clone(), ground[y].clone()));
                    break 'outer;
                }
            }
        }
    }
    Ok(Thm21Verdict {
        union_t1,
        t0_left,
        t0_right,
        orders_mirror,
        right_side,
        agree,
        counterexample,
    })
}

/// Interlocking iff every member with a maximal element leaves a minimal
/// element in its complement.
#[derive(Debug, Clone, Serialize)]
pub struct Thm22Verdict {
    pub interlocking: bool,
    pub endpoint_condition: bool,
    pub agree: bool,
    pub counterexample_member: Option<Vec<String>>,
}

pub fn theorem22_check(f: &SetFamily) -> Result<Thm22Verdict, NestError> {
    if !f.is_nest() {
        return Err(NestError::NotANest);
    }
    if !f.t0_separates() {
        return Err(NestError::Precondition(
            "family must be a T0-separating nest".into(),
        ));
    }
    let interlocking = f.is_interlocking()?;
    let order = f.induced_order();
    let n = f.ground_size();
    let full = f.full_mask();

    let has_max = |m: u32| -> bool {
        (0..n).any(|x| m & (1 << x) != 0 && (0..n).all(|y| m & (1 << y) == 0 || !order.lt(x, y)))
    };
    let has_min = |m: u32| -> bool {
        (0..n).any(|x| m & (1 << x) != 0 && (0..n).all(|y| m & (1 << y) == 0 || !order.lt(y, x)))
    };

    let mut endpoint_condition = true;
    let mut counterexample_member = None;
    for &l in f.members() {
        if has_max(l) && !has_min(full & !l) {
            endpoint_condition = false;
            counterexample_member = Some(labels_of(f.ground(), l));
            break;
        }
    }
    Ok(Thm22Verdict {
        interlocking,
        endpoint_condition,
        agree: interlocking == endpoint_condition,
        counterexample_member,
    })
}

/// Full van Dalen–Wattel style verdict for a pair of candidate nests
/// against a target collection of opens.
#[derive(Debug, Clone, Serialize)]
pub struct VdwVerdict {
    pub nest_left: bool,
    pub nest_right: bool,
    pub members_open: bool,
    pub not_open: Vec<Vec<String>>,
    pub union_t1: bool,
    pub subbasis_generates: bool,
    pub order_opens_in_topology: bool,
    pub interlocking_left: bool,
    pub interlocking_right: bool,
    pub go_space: bool,
    pub lots: bool,
}

pub fn vdw_check(
    t: &FiniteTopology,
    l: &SetFamily,
    r: &SetFamily,
) -> Result<VdwVerdict, NestError> {
    if t.ground() != l.ground() || !l.same_ground(r) {
        return Err(NestError::GroundMismatch);
    }
    let nest_left = l.is_nest();
    let nest_right = r.is_nest();
    let mut not_open: Vec<Vec<String>> = Vec::new();
    for &m in l.members().iter().chain(r.members()) {
        if !t.is_open(m) {
            let lbl = labels_of(t.ground(), m);
            if !not_open.contains(&lbl) {
                not_open.push(lbl);
            }
        }
    }
    let members_open = not_open.is_empty();
    let union = l.union(r)?;
    let union_t1 = union.t1_separates();

    let n = t.ground().len();
    let mut subbasis: Vec<u32> = Vec::new();
    subbasis.extend_from_slice(l.members());
    subbasis.extend_from_slice(r.members());
    let generated = subbasis_closure(n, &subbasis);
    let subbasis_generates = generated.iter().copied().eq(t.opens().iter().copied());

    let order_topology = order_open_sets(&union.induced_order(), t.ground().to_vec());
    let order_opens_in_topology = order_topology.opens().iter().all(|&m| t.is_open(m));

    let interlocking_left = nest_left && l.is_interlocking()?;
    let interlocking_right = nest_right && r.is_interlocking()?;

    let go_space = nest_left && nest_right && members_open && union_t1 && subbasis_generates;
    let lots = go_space && interlocking_left && interlocking_right;
    Ok(VdwVerdict {
        nest_left,
        nest_right,
        members_open,
        not_open,
        union_t1,
        subbasis_generates,
        order_opens_in_topology,
        interlocking_left,
        interlocking_right,
        go_space,
        lots,
    })
}
