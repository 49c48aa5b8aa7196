//! Decision procedures for the order on Fermat reals and for the
//! split-point linear order on tagged points.
//!
//! The order on canonical forms is decided symbolically: the sign of a
//! nonzero element is the sign of its standard part, or of the leading
//! infinitesimal coefficient when the standard part vanishes. No o(t)
//! remainder can compensate a surviving term `α t^a` with `a ≤ 1`, so
//! this agrees with the representative-wise definition.

use std::cmp::Ordering;
use std::fmt;

use crate::real::FermatReal;
use num_traits::{Signed, Zero};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("operation requires a down ray, got an up ray")]
    NotADownRay,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

pub fn sign(x: &FermatReal) -> Sign {
    let s = x.standard_part();
    if !s.is_zero() {
        return if s.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        };
    }
    match x.leading_term() {
        None => Sign::Zero,
        Some((_, c)) if c.is_positive() => Sign::Positive,
        Some(_) => Sign::Negative,
    }
}

/// Total order on Fermat reals; restricted to constants it is the
/// rational order.
pub fn compare(x: &FermatReal, y: &FermatReal) -> Ordering {
    match sign(&(y - x)) {
        Sign::Positive => Ordering::Less,
        Sign::Zero => Ordering::Equal,
        Sign::Negative => Ordering::Greater,
    }
}

/// Position of a point relative to the Fermat real it projects to:
/// `Minus` realizes the adjoined predecessor, `Plus` the adjoined
/// successor, `Base` the real itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Minus,
    Base,
    Plus,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Minus => "minus",
            Tag::Base => "base",
            Tag::Plus => "plus",
        })
    }
}

/// A point of the split-point line: a Fermat real with a tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FermatPoint {
    pub value: FermatReal,
    pub tag: Tag,
}

impl FermatPoint {
    pub fn base(value: FermatReal) -> Self {
        FermatPoint {
            value,
            tag: Tag::Base,
        }
    }

    pub fn new(value: FermatReal, tag: Tag) -> Self {
        FermatPoint { value, tag }
    }

    /// Projection back onto the Fermat reals: tags are forgotten.
    pub fn p_map(&self) -> &FermatReal {
        &self.value
    }

    /// Immediate successor in the split order, when one exists
    /// (minus → base → plus; a plus point has none).
    pub fn successor(&self) -> Option<FermatPoint> {
        match self.tag {
            Tag::Minus => Some(FermatPoint::new(self.value.clone(), Tag::Base)),
            Tag::Base => Some(FermatPoint::new(self.value.clone(), Tag::Plus)),
            Tag::Plus => None,
        }
    }

    pub fn predecessor(&self) -> Option<FermatPoint> {
        match self.tag {
            Tag::Plus => Some(FermatPoint::new(self.value.clone(), Tag::Base)),
            Tag::Base => Some(FermatPoint::new(self.value.clone(), Tag::Minus)),
            Tag::Minus => None,
        }
    }
}

impl fmt::Display for FermatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            Tag::Base => write!(f, "{}", self.value),
            tag => write!(f, "({}, {tag})", self.value),
        }
    }
}

/// The split-point linear order: compare projected values first, break
/// ties by tag (minus < base < plus). Restricted to base points this is
/// exactly `compare`.
pub fn compare_f(p: &FermatPoint, q: &FermatPoint) -> Ordering {
    compare(&p.value, &q.value).then(p.tag.cmp(&q.tag))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RaySense {
    DownStrict,
    DownClosed,
    UpStrict,
    UpClosed,
}

impl RaySense {
    pub fn is_down(self) -> bool {
        matches!(self, RaySense::DownStrict | RaySense::DownClosed)
    }
}

/// A symbolic order ray on the split line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    pub bound: FermatPoint,
    pub sense: RaySense,
}

impl Ray {
    pub fn new(bound: FermatPoint, sense: RaySense) -> Self {
        Ray { bound, sense }
    }

    pub fn contains(&self, p: &FermatPoint) -> bool {
        let ord = compare_f(p, &self.bound);
        match self.sense {
            RaySense::DownStrict => ord == Ordering::Less,
            RaySense::DownClosed => ord != Ordering::Greater,
            RaySense::UpStrict => ord == Ordering::Greater,
            RaySense::UpClosed => ord != Ordering::Less,
        }
    }
}

/// Maximum of a down ray, when one exists. A down-strict ray has a
/// maximum exactly when its bound has a predecessor; a down-closed ray
/// always has its bound as maximum.
pub fn ray_has_max(r: &Ray) -> Result<Option<FermatPoint>, OrderError> {
    match r.sense {
        RaySense::DownStrict => Ok(r.bound.predecessor()),
        RaySense::DownClosed => Ok(Some(r.bound.clone())),
        _ => Err(OrderError::NotADownRay),
    }
}

/// Minimum of the complement of a down ray, when one exists.
pub fn complement_min(r: &Ray) -> Result<Option<FermatPoint>, OrderError> {
    match r.sense {
        RaySense::DownStrict => Ok(Some(r.bound.clone())),
        RaySense::DownClosed => Ok(r.bound.successor()),
        _ => Err(OrderError::NotADownRay),
    }
}
