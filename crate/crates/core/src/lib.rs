//! Group cohomology over the bar resolution: chains, explicit homotopies,
//! cochain operations and exact verification.

pub mod cochain;
pub mod error;
pub mod group;
pub mod homotopies;
pub mod io;
pub mod lab;
pub mod module;
pub mod oracle;
pub mod resolution;

pub use error::{Error, Result};
