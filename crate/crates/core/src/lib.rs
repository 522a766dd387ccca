pub mod algebra;
pub mod check;
pub mod cohomology;
pub mod courant;
pub mod crossed_module;
pub mod dirac;
pub mod error;
pub mod exec;
pub mod exterior;
pub mod generate;
pub mod omni;
pub mod report;
pub mod sh_leibniz;

pub use error::{Error, Result};
