//! Exact symbolic computation in the Cuntz algebra O_n and its UHF core F_n.
//!
//! Elements of the dense *-subalgebra spanned by `S_mu S_nu^*` are stored
//! graded by gauge degree, so the gauge action, the conditional expectation
//! and Fourier coefficients are all exact component operations over the
//! rationals. On top of that sit finite-level matrix models, an exact
//! null-space solver, relative commutants of corner-sum subalgebras and
//! verification routines for normalizers.

pub mod element;
pub mod error;
pub mod intertwiner;
pub mod json;
pub mod level;
pub mod linalg;
pub mod normalizer;
pub mod scalar;
pub mod subalgebra;
pub mod word;

pub use element::Element;
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use word::{Monomial, Word};
