//! Matrices and subgroups of GL₂(ℤ/mℤ): closure, reduction, scalar content,
//! orbits on cyclic subgroups and points, and conjugacy.

pub mod conj;
pub mod group;
pub mod mat;
pub mod orbits;
pub mod spec;
pub mod standard;

pub use conj::{conjugate_into, is_conjugate};
pub use group::{group_closure, Fingerprint, MatrixGroup};
pub use mat::Mat;
pub use orbits::{cyclic_subgroup_orbits, point_orbits, psi, CyclicSubgroupRep, OrbitReport};
pub use spec::GroupSpec;
pub use standard::{standard_group, StandardName};
