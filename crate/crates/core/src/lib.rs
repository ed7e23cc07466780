//! Exact computations in Iwahori-Hecke algebras of finite and affine
//! Coxeter groups with arbitrary weight functions: Kazhdan-Lusztig bases,
//! structure constants, the `a`-function, the asymptotic ring `J`, and the
//! trace positivity of conjugacy classes.
//!
//! The crate is `no_std` and needs only `alloc`. Long scans take an
//! [`Executor`] so a caller with threads can parallelize them; results
//! never depend on the schedule.

#![no_std]

extern crate alloc;

pub mod coxeter;
pub mod exec;
pub mod hecke;
pub mod klbasis;
pub mod laurent;
pub mod positivity;

pub use coxeter::{
    Bond, ConjugacyClass, CoxeterError, CoxeterSystem, ElemId, Element, GroupTable, TypeLabel,
};
pub use exec::{Executor, Sequential};
pub use hecke::{HeckeAlgebra, HeckeElement, HeckeError, WeightFunction};
pub use klbasis::{AFunction, CheckMode, JRing, KlBasis, KlElement, KlError};
pub use laurent::{Cone, Degree, LaurentPoly};
pub use positivity::{Fixture, PositivityError, TraceChecks, TraceReport};

pub use dashu_int::IBig;
pub use dashu_ratio::RBig;
