//! Exact symbolic computation for parastatistics algebras.
//!
//! The crate realizes parabosonic and parafermionic algebras as quotients of
//! free algebras over the rationals, computes canonical normal forms at a
//! bounded filtration degree, and machine-checks the (super-)Hopf structure of
//! these algebras together with their two ordinary-Hopf extensions: the
//! group-like involution `g` (bosonisation by the group algebra of Z2) and the
//! invertible pair `K+`, `K-`.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere and every check is an exact identity.
//!
//! # Quick tour
//!
//! ```
//! use parastat::presets;
//! use parastat::quotient;
//!
//! // The parabosonic algebra on one pair of generators b1+, b1-.
//! let pb = presets::parabosonic(1).unwrap();
//!
//! // [{b1+,b1-}, b1-] reduces to -2*b1- in the quotient.
//! let bp = pb.generator_element("b1+").unwrap();
//! let bm = pb.generator_element("b1-").unwrap();
//! let x = bp.anticommutator(&bm).unwrap().commutator(&bm).unwrap();
//! let nf = quotient::normal_form(&x, &pb, 3).unwrap();
//! assert_eq!(pb.render(&nf), "-2*b1-");
//! ```
//!
//! The narrative guide under `book/` walks through the same material chapter
//! by chapter; its code snippets are kept in sync with the doc-tests here.

pub mod bosonisation;
pub mod error;
pub mod kernel;
pub mod linalg;
pub mod presets;
pub mod quotient;
pub mod report;
pub mod scalar;
pub mod superhopf;

pub use error::AlgebraError;
pub use kernel::{Alphabet, Element, Generator, Parity, Sign, TensorElement, Word};
pub use quotient::Presentation;
pub use report::{CheckReport, CheckResult, CheckStatus};
pub use scalar::Scalar;
