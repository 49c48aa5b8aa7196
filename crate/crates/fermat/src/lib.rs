//! Exact arithmetic and decidable order structure for the ring of Fermat
//! reals: canonical little-oh polynomials, the Giordano order, the
//! split-point linear order on tagged points, and the order-topological
//! layer (monads, intervals, boxes, eventually-constant convergence).

pub mod expr;
pub mod order;
pub mod real;
pub mod topology;

pub use order::{
    compare, compare_f, complement_min, ray_has_max, sign, FermatPoint, Ray, RaySense, Sign, Tag,
};
pub use real::{FermatReal, Rational};
