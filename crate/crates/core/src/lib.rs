//! Finite permutation groups, G-conjugacy class sizes of a normal subgroup N,
//! the common-divisor graph Γ_G(N) on those sizes, and a harness that checks
//! structural statements about Γ_G(N) across a catalog of small groups.
//!
//! ```
//! use ccsgraph::{catalog::Family, ClassData, Subgroup, DEFAULT_ORDER_CAP};
//!
//! let g = Family::Symmetric(4).build(DEFAULT_ORDER_CAP).unwrap();
//! let a4 = g.normal_subgroups().into_iter().find(|n| n.order() == 12).unwrap();
//! let cd = ClassData::compute(&g, &a4).unwrap();
//! assert_eq!(cd.cs_values(), &[1, 3, 8]);
//! assert_eq!(cd.graph().component_count(), 2);
//! ```

pub mod arith;
pub mod catalog;
pub mod classes;
pub mod cli;
mod error;
pub mod graph;
pub mod group;
pub mod groupfile;
pub mod perm;
pub mod report;
mod subgroup;
pub mod sweep;
pub mod theorems;

pub use classes::{ClassData, ConjClass};
pub use error::{Error, Result};
pub use graph::CDGraph;
pub use group::{FiniteGroup, DEFAULT_ORDER_CAP};
pub use perm::Permutation;
pub use subgroup::Subgroup;
