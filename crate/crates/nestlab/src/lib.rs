//! Finite-instance laboratory for nests: separation properties, induced
//! orders, interlocking, van Dalen–Wattel style GO/LOTS verdicts, and
//! exhaustive nest-decomposition search on small topologies.

pub mod family;
pub mod json;
pub mod search;
pub mod topology;
pub mod verdicts;

pub use family::{InducedOrder, Mask, NestError, SetFamily};
pub use json::Instance;
pub use search::{maximal_chains, neight, search_nest_pair, NeightWitness, DEFAULT_BOUND};
pub use topology::{order_open_sets, subbasis_closure, FiniteTopology};
pub use verdicts::{theorem21_check, theorem22_check, vdw_check, Thm21Verdict, Thm22Verdict, VdwVerdict};
