//! Integer linear algebra, cohomology computation and identity verification.

pub mod cohomology;
pub mod smith;
pub mod verify;
