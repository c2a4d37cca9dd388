//! Exact symbolic machinery for Takiff (truncated current) Lie algebras.
//!
//! Everything here works over the rationals with arbitrary-precision
//! integers: sparse polynomials on the dual space, Lie algebras given by
//! structure constants, the Takiff and multi-current constructions, the
//! ε-expansion producing symmetric invariants of `q<m>`, and the
//! verification and null-fibre diagnostics built on top of them.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing and
//! the command-line front end live in the companion `takiff` crate.
#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod catalog;
pub mod error;
pub mod family;
pub mod lie;
pub mod linalg;
pub mod nilfiber;
pub mod poly;
pub mod report;
pub mod sample;
pub mod takiff;
pub mod verify;

pub use error::{Error, Result};
pub use family::InvariantFamily;
pub use lie::{DualPoint, InvariantSet, LieAlgebra};
pub use poly::{Jet, Polynomial, Rational, VarSet};
pub use report::{Check, Report, Status};
pub use takiff::{TakiffDualPoint, TakiffGrading};
