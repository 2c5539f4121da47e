//! Exact rational geometry of spherical polyhedra.
//!
//! A [`SphSet`] is a finite union of closed polyhedral cones punctured at the
//! origin, i.e. a rationally defined spherical polyhedron. Sigma-invariant
//! complements are always stored in this closed form; strict inequalities
//! appear only transiently inside [`FeasibilitySystem`] while deciding
//! containment queries.

mod dd;
mod feasibility;
mod halfspace;
mod set_ops;
mod sum;

pub use dd::{h_to_v, v_to_h, ConeV};
pub use feasibility::{feasible, FeasibilitySystem};
pub use halfspace::{normalize_ray, Cell, HalfSpace, RayPoint, Relation, SphSet};
pub use set_ops::DEFAULT_BRANCH_CAP;
