//! Poset-metric additive codes and quantum stabilizer codes over finite fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`gf`]: prime fields, extensions and towers, traces, the basis {1, γ} of GF(q²).
//! - [`poset`]: partial orders on a ground set of at most 64 points and their order ideals.
//! - [`code`]: additive codes with poset weights, I-balls, I-perfectness and MDS tests.
//! - [`symplectic`]: symplectic weights, trace forms, duals and the MacWilliams identity.
//! - [`stabilizer`]: error operators, stabilizer parameters and theorem verifiers.
//! - [`qsim`]: dense matrix realisation used as an independent oracle.
//! - [`cli`]: the JSON-driven batch front end behind the `qposet` binary.

pub mod cli;
pub mod code;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod poset;
pub mod qsim;
pub mod stabilizer;
pub mod symplectic;

pub use code::{AdditiveCode, Alphabet, Linearity, Metric};
pub use error::{Error, Result};
pub use gf::{Elem, Field, QuadExt};
pub use poset::{Ideal, Poset};
pub use stabilizer::{ErrorOperator, StabCodeParams, StabilizerGroup};
pub use symplectic::{Form, SympVector};
