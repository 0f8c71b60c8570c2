//! Rigorous lower bounds for the Lebesgue measure of parameters of an
//! analytic circle-map family that are conjugated to rigid rotations.

pub mod dd;
pub mod diophantine;
pub mod fourier;
pub mod taylor;
pub mod error;
pub mod interval;

pub use error::Error;
pub use interval::{ComplexInterval, Interval};
