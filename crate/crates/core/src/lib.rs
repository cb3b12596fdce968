//! Gauss periods over small finite fields and weight distributions of the
//! trace cyclic codes `{ (Tr(a_1 g_1^t + ... + a_u g_u^t))_t }` whose
//! generators `g_i` have pairwise coprime orders.
//!
//! Closed-form tables are cross-checked against an exhaustive enumeration
//! of every coefficient tuple.

pub mod arith;
pub mod closed_form;
pub mod cyclotomy;
pub mod distribution;
pub mod error;
pub mod field;
mod poly;
pub mod trace_code;

pub use distribution::{Level, WeightDistribution};
pub use trace_code::CodeSpec;
pub use cyclotomy::{CycInt, GaussPeriodTable, PeriodSource};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, TraceTarget};
