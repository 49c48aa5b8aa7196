//! Finite set families over a labeled ground set, with the separation
//! and nest predicates. Subsets are bitmasks over the ground ordering.

use std::collections::BTreeSet;

pub type Mask = u32;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum NestError {
    #[error("unknown label '{0}'")]
    UnknownLabel(String),
    #[error("duplicate label '{0}'")]
    DuplicateLabel(String),
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("family is not a nest")]
    NotANest,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("ground size {size} exceeds search bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("ground set larger than {0} points is not supported")]
    GroundTooLarge(usize),
}

pub(crate) const MAX_GROUND: usize = 16;

pub(crate) fn check_ground(labels: &[String]) -> Result<(), NestError> {
    if labels.len() > MAX_GROUND {
        return Err(NestError::GroundTooLarge(MAX_GROUND));
    }
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(NestError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

pub(crate) fn mask_of(labels: &[String], subset: &[String]) -> Result<Mask, NestError> {
    let mut m: Mask = 0;
    for s in subset {
        let i = labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| NestError::UnknownLabel(s.clone()))?;
        if m & (1 << i) != 0 {
            return Err(NestError::DuplicateLabel(s.clone()));
        }
        m |= 1 << i;
    }
    Ok(m)
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

pub(crate) fn labels_of(labels: &[String], mask: Mask) -> Vec<String> {
    labels
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, l)| l.clone())
        .collect()
}

/// A finite ground set together with a family of subsets. Duplicate
/// members collapse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: Vec<String>,
    members: Vec<Mask>,
}

impl SetFamily {
    pub fn new(ground: Vec<String>, members: &[Vec<String>]) -> Result<Self, NestError> {
        check_ground(&ground)?;
        let mut masks = BTreeSet::new();
        for m in members {
            masks.insert(mask_of(&ground, m)?);
        }
        Ok(SetFamily {
            ground,
            members: masks.into_iter().collect(),
        })
    }

    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = Mask>) -> Self {
        let set: BTreeSet<Mask> = masks.into_iter().collect();
        SetFamily {
            ground: default_labels(n),
            members: set.into_iter().collect(),
        }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn full_mask(&self) -> Mask {
        if self.ground.is_empty() {
            0
        } else {
            (1 << self.ground.len()) - 1
        }
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn member_labels(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|&m| labels_of(&self.ground, m))
            .collect()
    }

    pub fn same_ground(&self, other: &SetFamily) -> bool {
        self.ground == other.ground
    }

    /// Union of two families on the same ground.
    pub fn union(&self, other: &SetFamily) -> Result<SetFamily, NestError> {
        if !self.same_ground(other) {
            return Err(NestError::GroundMismatch);
        }
        Ok(SetFamily::from_masks_with_ground(
            self.ground.clone(),
            self.members.iter().chain(other.members.iter()).copied(),
        ))
    }

    pub(crate) fn from_masks_with_ground(
        ground: Vec<String>,
        masks: impl IntoIterator<Item = Mask>,
    ) -> SetFamily {
        let set: BTreeSet<Mask> = masks.into_iter().collect();
        SetFamily {
            ground,
            members: set.into_iter().collect(),
        }
    }

    /// Members pairwise comparable under inclusion.
    pub fn is_nest(&self) -> bool {
        for (i, &m) in self.members.iter().enumerate() {
            for &n in &self.members[i + 1..] {
                if m & n != m && m & n != n {
                    return false;
                }
            }
        }
        true
    }

    /// Some member contains exactly one of each pair of distinct points.
    pub fn t0_separates(&self) -> bool {
        let n = self.ground.len();
        for x in 0..n {
            for y in (x + 1)..n {
                let ok = self.members.iter().any(|&m| {
                    let hx = m & (1 << x) != 0;
                    let hy = m & (1 << y) != 0;
                    hx != hy
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Each ordered pair of distinct points is separated in both
    /// directions.
    pub fn t1_separates(&self) -> bool {
        let n = self.ground.len();
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let ok = self
                    .members
                    .iter()
                    .any(|&m| m & (1 << x) != 0 && m & (1 << y) == 0);
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// The strict induced relation: x before y when some member contains
    /// x but not y.
    pub fn induced_order(&self) -> InducedOrder {
        let n = self.ground.len();
        let mut above = vec![0 as Mask; n];
        for x in 0..n {
            for &m in &self.members {
                if m & (1 << x) != 0 {
                    above[x] |= !m & self.full_mask();
                }
            }
        }
        InducedOrder { n, above }
    }

    /// Interlocking, with the conventions ⋂∅ = ground and ⋃∅ = ∅:
    /// whenever a member equals the intersection of its strict supersets
    /// it must also equal the union of its strict subsets.
    pub fn is_interlocking(&self) -> Result<bool, NestError> {
        if !self.is_nest() {
            return Err(NestError::NotANest);
        }
        let full = self.full_mask();
        for &l in &self.members {
            let mut inter = full;
            let mut union: Mask = 0;
            for &n in &self.members {
                if n != l && l & n == l {
                    inter &= n;
                }
                if n != l && l & n == n {
                    union |= n;
                }
            }
            if inter == l && union != l {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A strict relation on the ground set, stored as successor masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedOrder {
    n: usize,
    /// above[x] = mask of y with x before y
    above: Vec<Mask>,
}

impl InducedOrder {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x] & (1 << y) != 0
    }

    pub fn reverse(&self) -> InducedOrder {
        let mut above = vec![0 as Mask; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                if self.lt(y, x) {
                    above[x] |= 1 << y;
                }
            }
        }
        InducedOrder { n: self.n, above }
    }

    /// Irreflexive, transitive and trichotomous.
    pub fn is_strict_linear_order(&self) -> bool {
        for x in 0..self.n {
            if self.lt(x, x) {
                return false;
            }
            for y in 0..self.n {
                if x != y && self.lt(x, y) == self.lt(y, x) {
                    return false;
                }
                for z in 0..self.n {
                    if self.lt(x, y) && self.lt(y, z) && !self.lt(x, z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Points sorted by the relation; meaningful when it is linear.
    pub fn sorted_points(&self) -> Vec<usize> {
        let mut pts: Vec<usize> = (0..self.n).collect();
        pts.sort_by_key(|&x| self.above[x].count_ones());
        pts.reverse();
        pts
    }

    /// Construct from an explicit linear arrangement of 0..n.
    pub fn from_linear(arrangement: &[usize]) -> InducedOrder {
        let n = arrangement.len();
        let mut above = vec![0 as Mask; n];
        for (i, &x) in arrangement.iter().enumerate() {
            for &y in &arrangement[i + 1..] {
                above[x] |= 1 << y;
            }
        }
        InducedOrder { n, above }
    }

    /// Strict down-set {x : x before b} of a point.
    pub fn down_set(&self, b: usize) -> Mask {
        let mut m: Mask = 0;
        for x in 0..self.n {
            if self.lt(x, b) {
                m |= 1 << x;
            }
        }
        m
    }

    /// Strict up-set {x : b before x}.
    pub fn up_set(&self, b: usize) -> Mask {
        self.above[b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, masks: &[Mask]) -> SetFamily {
        SetFamily::from_masks(n, masks.iter().copied())
    }

    #[test]
    fn nest_detection() {
        assert!(fam(3, &[0b001, 0b011]).is_nest());
        assert!(!fam(2, &[0b01, 0b10]).is_nest());
        assert!(fam(2, &[]).is_nest());
    }

    #[test]
    fn separation() {
        // {{a},{a,b}} on {a,b,c}: T0 but not T1
        let f = fam(3, &[0b001, 0b011]);
        assert!(f.t0_separates());
        assert!(!f.t1_separates());
        assert!(fam(2, &[0b01, 0b10]).t1_separates());
        assert!(!fam(2, &[]).t0_separates());
    }

    #[test]
    fn induced_order_of_chain() {
        let f = fam(3, &[0b001, 0b011]);
        let o = f.induced_order();
        assert!(o.lt(0, 1) && o.lt(1, 2) && o.lt(0, 2));
        assert!(!o.lt(1, 0) && !o.lt(2, 0) && !o.lt(2, 1));
        assert!(o.is_strict_linear_order());
        assert_eq!(o.sorted_points(), vec![0, 1, 2]);
    }

    #[test]
    fn induced_order_of_empty_and_non_nest() {
        let empty = fam(2, &[]).induced_order();
        assert!(!empty.lt(0, 1) && !empty.lt(1, 0));
        // {{a},{b}}: a before b and b before a, not antisymmetric
        let o = fam(2, &[0b01, 0b10]).induced_order();
        assert!(o.lt(0, 1) && o.lt(1, 0));
        assert!(!o.is_strict_linear_order());
    }

    #[test]
    fn interlocking_conventions() {
        // on {a,b,c}: both antecedents fail
        assert_eq!(fam(3, &[0b001, 0b011]).is_interlocking(), Ok(true));
        // on {a,b}: {a,b} = ground = empty intersection, union {{a}} ≠ {a,b}
        assert_eq!(fam(2, &[0b01, 0b11]).is_interlocking(), Ok(false));
        assert_eq!(fam(2, &[]).is_interlocking(), Ok(true));
        assert_eq!(
            fam(2, &[0b01, 0b10]).is_interlocking(),
            Err(NestError::NotANest)
        );
    }

    #[test]
    fn label_validation() {
        let g = vec!["a".to_string(), "b".to_string()];
        assert!(SetFamily::new(g.clone(), &[vec!["c".to_string()]]).is_err());
        assert!(SetFamily::new(vec!["a".to_string(), "a".to_string()], &[]).is_err());
        let f = SetFamily::new(g, &[vec!["a".to_string()], vec!["a".to_string()]]).unwrap();
        assert_eq!(f.members().len(), 1);
    }
}
