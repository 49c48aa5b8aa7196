//! Finite topologies and subbasis closure.

use std::collections::BTreeSet;

use crate::family::{check_ground, labels_of, mask_of, InducedOrder, Mask, NestError, SetFamily};

/// A finite topology: opens closed under intersection and union,
/// containing the empty set and the ground.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    ground: Vec<String>,
    opens: Vec<Mask>,
}

impl FiniteTopology {
    /// Validated constructor; closure properties are checked, never
    /// inferred.
    pub fn new(ground: Vec<String>, opens: &[Vec<String>]) -> Result<Self, NestError> {
        check_ground(&ground)?;
        let mut masks = BTreeSet::new();
        for o in opens {
            masks.insert(mask_of(&ground, o)?);
        }
        let t = FiniteTopology {
            ground,
            opens: masks.into_iter().collect(),
        };
        t.validate()?;
        Ok(t)
    }

    /// Constructor without closure validation, for probing mutilated
    /// collections of opens.
    pub fn new_unchecked(ground: Vec<String>, opens: impl IntoIterator<Item = Mask>) -> Self {
        let masks: BTreeSet<Mask> = opens.into_iter().collect();
        FiniteTopology {
            ground,
            opens: masks.into_iter().collect(),
        }
    }

    pub fn from_masks(n: usize, opens: impl IntoIterator<Item = Mask>) -> Self {
        Self::new_unchecked(crate::family::default_labels(n), opens)
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_masks(n, 0..(1u32 << n))
    }

    pub fn indiscrete(n: usize) -> Self {
        let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
        Self::from_masks(n, [0, full])
    }

    pub fn validate(&self) -> Result<(), NestError> {
        let full = self.full_mask();
        let has = |m: Mask| self.opens.binary_search(&m).is_ok();
        if !has(0) {
            return Err(NestError::NotATopology("empty set is not open".into()));
        }
        if !has(full) {
            return Err(NestError::NotATopology("ground set is not open".into()));
        }
        for &a in &self.opens {
            for &b in &self.opens {
                if !has(a & b) {
                    return Err(NestError::NotATopology(format!(
                        "not closed under intersection: {:?} ∩ {:?}",
                        labels_of(&self.ground, a),
                        labels_of(&self.ground, b)
                    )));
                }
                if !has(a | b) {
                    return Err(NestError::NotATopology(format!(
                        "not closed under union: {:?} ∪ {:?}",
                        labels_of(&self.ground, a),
                        labels_of(&self.ground, b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn full_mask(&self) -> Mask {
        if self.ground.is_empty() {
            0
        } else {
            (1 << self.ground.len()) - 1
        }
    }

    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    pub fn is_open(&self, m: Mask) -> bool {
        self.opens.binary_search(&m).is_ok()
    }

    pub fn open_labels(&self) -> Vec<Vec<String>> {
        self.opens
            .iter()
            .map(|&m| labels_of(&self.ground, m))
            .collect()
    }

    pub fn opens_as_family(&self) -> SetFamily {
        SetFamily::from_masks_with_ground(self.ground.clone(), self.opens.iter().copied())
    }
}

/// Close a collection of sets under finite intersections and then
/// arbitrary unions. The empty intersection contributes the ground, the
/// empty union contributes ∅.
pub fn subbasis_closure(n: usize, sets: &[Mask]) -> BTreeSet<Mask> {
    let full: Mask = if n == 0 { 0 } else { (1 << n) - 1 };
    let mut inters: BTreeSet<Mask> = BTreeSet::new();
    inters.insert(full);
    for &s in sets {
        let new: Vec<Mask> = inters.iter().map(|&b| b & s).collect();
        inters.insert(s);
        inters.extend(new);
        // fixpoint: intersections of intersections already covered by
        // folding each subbasis element in turn
    }
    // now close under unions
    let mut opens = inters;
    opens.insert(0);
    loop {
        let mut fresh: Vec<Mask> = Vec::new();
        for &a in &opens {
            for &b in &opens {
                let u = a | b;
                if !opens.contains(&u) {
                    fresh.push(u);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        opens.extend(fresh);
    }
    opens
}

/// The order topology of a strict relation: generated by the strict
/// down-sets and up-sets of all points.
pub fn order_open_sets(o: &InducedOrder, ground: Vec<String>) -> FiniteTopology {
    let n = o.size();
    let mut subbasis: Vec<Mask> = Vec::new();
    for b in 0..n {
        subbasis.push(o.down_set(b));
        subbasis.push(o.up_set(b));
    }
    FiniteTopology::new_unchecked(ground, subbasis_closure(n, &subbasis))
}
