//! Degree-two differential characters on finite action groupoids.
//!
//! The crate models circle bundles with connection over a simplicial surface
//! carrying a finite group action, the exact cochain model of their
//! differential characters, and the semi-analytic circle and SU(2) examples
//! on the sphere. Every discrete computation is exact over the rationals.

pub mod cli;
pub mod complex;
pub mod cycles;
pub mod diffchar;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod groupoid;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod prequantize;
pub mod quadrature;
pub mod rational;
pub mod reduction;
pub mod report;

pub use error::Error;
