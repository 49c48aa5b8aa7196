//! Order-topological layer over the split line: monads, interval and box
//! membership, the closed-ray/strict-ray identity, and convergence of
//! eventually-constant sequences.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use crate::order::{compare_f, FermatPoint, Ray, RaySense, Tag};
use crate::real::{FermatReal, Rational};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("malformed interval: lower bound is not strictly below upper bound")]
    MalformedInterval,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Membership in the monad μ(r): standard part equal to r.
pub fn monad_contains(r: &Rational, x: &FermatReal) -> bool {
    x.standard_part() == r
}

/// Open-interval membership on the split line, by two order comparisons.
pub fn interval_contains(
    lo: &FermatPoint,
    hi: &FermatPoint,
    p: &FermatPoint,
) -> Result<bool, TopologyError> {
    if compare_f(lo, hi) != Ordering::Less {
        return Err(TopologyError::MalformedInterval);
    }
    Ok(compare_f(lo, p) == Ordering::Less && compare_f(p, hi) == Ordering::Less)
}

/// Default probe offsets around a center: 0, ± small rationals, ± ε(a)
/// for a on a quarter grid, and mixed rational-plus-infinitesimal shifts.
pub fn default_probe_offsets() -> Vec<FermatReal> {
    let mut offsets = vec![FermatReal::zero()];
    for q in [
        Rational::one(),
        Rational::new(BigInt::from(1), BigInt::from(2)),
        Rational::from_integer(BigInt::from(2)),
    ] {
        offsets.push(FermatReal::from_rational(q.clone()));
        offsets.push(FermatReal::from_rational(-q));
    }
    for num in 1..=4i64 {
        let e = FermatReal::eps(Rational::new(BigInt::from(num), BigInt::from(4))).unwrap();
        offsets.push(e.clone());
        offsets.push(-&e);
        offsets.push(&FermatReal::from_int(1) + &e);
        offsets.push(&FermatReal::from_int(-1) - &e);
    }
    offsets
}

/// Check, pointwise over a probe set, that membership in the down-closed
/// ray at (l, base) coincides with membership in the down-strict ray at
/// (l, plus). Points of all three tags are probed; a falsification
/// harness for the subbasis identity, not a proof.
pub fn ray_identity_check(l: &FermatReal, probe_offsets: &[FermatReal]) -> bool {
    let closed = Ray::new(FermatPoint::base(l.clone()), RaySense::DownClosed);
    let strict = Ray::new(
        FermatPoint::new(l.clone(), Tag::Plus),
        RaySense::DownStrict,
    );
    probe_offsets.iter().all(|off| {
        [Tag::Minus, Tag::Base, Tag::Plus].into_iter().all(|tag| {
            let p = FermatPoint::new(l + off, tag);
            closed.contains(&p) == strict.contains(&p)
        })
    })
}

/// A product of open order-intervals, one (lo, hi) pair per coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderBox {
    factors: Vec<(FermatPoint, FermatPoint)>,
}

impl OrderBox {
    pub fn new(factors: Vec<(FermatPoint, FermatPoint)>) -> Result<Self, TopologyError> {
        for (lo, hi) in &factors {
            if compare_f(lo, hi) != Ordering::Less {
                return Err(TopologyError::MalformedInterval);
            }
        }
        Ok(OrderBox { factors })
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn contains(&self, point: &[FermatPoint]) -> Result<bool, TopologyError> {
        if point.len() != self.factors.len() {
            return Err(TopologyError::DimensionMismatch {
                expected: self.factors.len(),
                got: point.len(),
            });
        }
        for ((lo, hi), p) in self.factors.iter().zip(point) {
            if !interval_contains(lo, hi, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A sequence given by a finite prefix and a constant tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    pub prefix: Vec<FermatPoint>,
    pub tail: FermatPoint,
}

impl SequenceSpec {
    /// Every base point is isolated in the closed-ray topology, so an
    /// eventually-constant sequence converges exactly to its tail value.
    pub fn converges_to(&self, limit: &FermatPoint) -> bool {
        self.tail == *limit
    }
}

/// Coordinatewise convergence in a finite product.
pub fn product_converges(
    coords: &[SequenceSpec],
    limits: &[FermatPoint],
) -> Result<bool, TopologyError> {
    if coords.len() != limits.len() {
        return Err(TopologyError::DimensionMismatch {
            expected: coords.len(),
            got: limits.len(),
        });
    }
    Ok(coords
        .iter()
        .zip(limits)
        .all(|(s, l)| s.converges_to(l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn eps(n: i64, d: i64) -> FermatReal {
        FermatReal::eps(rat(n, d)).unwrap()
    }

    fn int(n: i64) -> FermatReal {
        FermatReal::from_int(n)
    }

    #[test]
    fn monad_membership() {
        let x = &int(5) + &(&FermatReal::from_int(3) * &eps(1, 2));
        assert!(monad_contains(&rat(5, 1), &x));
        assert!(monad_contains(&rat(0, 1), &eps(1, 1)));
        assert!(monad_contains(&rat(0, 1), &eps(1, 2)));
        assert!(!monad_contains(&rat(1, 1), &eps(1, 2)));
    }

    #[test]
    fn monads_partition() {
        let x = &int(2) + &eps(1, 3);
        assert!(monad_contains(&rat(2, 1), &x));
        assert!(!monad_contains(&rat(3, 1), &x));
    }

    #[test]
    fn base_plus_interval_is_empty() {
        // ((5,base),(5,plus)) is an empty open interval: adjacency
        let lo = FermatPoint::base(int(5));
        let hi = FermatPoint::new(int(5), Tag::Plus);
        for off in default_probe_offsets() {
            for tag in [Tag::Minus, Tag::Base, Tag::Plus] {
                let p = FermatPoint::new(&int(5) + &off, tag);
                assert!(!interval_contains(&lo, &hi, &p).unwrap());
            }
        }
    }

    #[test]
    fn interval_contains_infinitesimal() {
        let lo = FermatPoint::new(int(0), Tag::Minus);
        let hi = FermatPoint::new(int(1), Tag::Plus);
        let p = FermatPoint::base(eps(1, 2));
        assert!(interval_contains(&lo, &hi, &p).unwrap());
    }

    #[test]
    fn malformed_interval_rejected() {
        let lo = FermatPoint::base(int(1));
        let hi = FermatPoint::base(int(0));
        assert_eq!(
            interval_contains(&lo, &hi, &lo),
            Err(TopologyError::MalformedInterval)
        );
    }

    #[test]
    fn ray_identity_at_zero() {
        assert!(ray_identity_check(&int(0), &default_probe_offsets()));
    }

    #[test]
    fn eventually_constant_convergence() {
        let one = FermatPoint::base(int(1));
        let bumped = FermatPoint::base(&int(1) + &eps(1, 1));
        let s = SequenceSpec {
            prefix: vec![one.clone(), bumped.clone(), one.clone()],
            tail: one.clone(),
        };
        assert!(s.converges_to(&one));
        let s2 = SequenceSpec {
            prefix: vec![],
            tail: bumped.clone(),
        };
        assert!(!s2.converges_to(&one));
    }

    #[test]
    fn product_convergence_is_coordinatewise() {
        let one = FermatPoint::base(int(1));
        let two = FermatPoint::base(int(2));
        let good = SequenceSpec {
            prefix: vec![two.clone()],
            tail: one.clone(),
        };
        let bad = SequenceSpec {
            prefix: vec![],
            tail: two.clone(),
        };
        assert!(product_converges(
            &[good.clone(), good.clone()],
            &[one.clone(), one.clone()]
        )
        .unwrap());
        assert!(!product_converges(&[good.clone(), bad], &[one.clone(), one.clone()]).unwrap());
        assert!(matches!(
            product_converges(&[good], &[one.clone(), one]),
            Err(TopologyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn box_membership() {
        let lo0 = FermatPoint::new(int(0), Tag::Minus);
        let hi0 = FermatPoint::new(int(1), Tag::Plus);
        let lo1 = FermatPoint::new(int(-1), Tag::Minus);
        let hi1 = FermatPoint::new(int(0), Tag::Plus);
        let b = OrderBox::new(vec![(lo0, hi0), (lo1, hi1)]).unwrap();
        let p = [FermatPoint::base(eps(1, 2)), FermatPoint::base(-&eps(1, 2))];
        assert!(b.contains(&p).unwrap());
        let q = [FermatPoint::base(int(2)), FermatPoint::base(int(0))];
        assert!(!b.contains(&q).unwrap());
        assert!(matches!(
            b.contains(&q[..1]),
            Err(TopologyError::DimensionMismatch { .. })
        ));
    }
}
