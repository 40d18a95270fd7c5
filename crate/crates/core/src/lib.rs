//! Exact arithmetic for Hermitian lattices over the Hurwitz integers, and the
//! reflection group of the quaternionic Lorentzian Leech lattice.

pub mod certify;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod heightred;
pub mod heisen;
pub mod hlattice;
pub mod hquat;
pub mod isosearch;
pub mod linalg;
pub mod reflect;

pub use error::{Error, Result};
pub use hlattice::{make_lattice, HLattice, LVec, LatticeName};
pub use hquat::{Hq, Qq, R2Quat, Rational, F4, R2};
pub use linalg::Mat;
