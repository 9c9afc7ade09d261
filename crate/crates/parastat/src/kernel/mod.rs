//! Free-algebra arithmetic with Z2-grading.
//!
//! The kernel knows nothing about ideals or quotients: it provides exact
//! linear combinations of words over a fixed generator alphabet, the
//! concatenation product, plain and Koszul-signed tensor products, and the
//! symmetric braiding.  Everything downstream (normal forms, Hopf checks,
//! bosonisation) is built on these operations.
//!
//! ```
//! use parastat::kernel::braiding;
//! use parastat::presets;
//!
//! let pb = presets::parabosonic(2).unwrap();
//! let a = pb.alphabet();
//! assert_eq!(a.len(), 4);                      // b1+, b1-, b2+, b2-
//! assert_eq!(a.word_count(2), 21);             // 1 + 4 + 16 words of degree <= 2
//! assert!(a.generator(0).parity().is_odd());   // parabosons are odd
//!
//! let bp = pb.generator_element("b1+").unwrap();
//! let bm = pb.generator_element("b1-").unwrap();
//! assert_eq!(pb.render(&bp.commutator(&bm).unwrap()), "b1+*b1- - b1-*b1+");
//! assert_eq!(pb.render(&bp.anticommutator(&bm).unwrap()), "b1+*b1- + b1-*b1+");
//!
//! // the braiding is the Koszul-signed flip; two odd factors pick up a sign
//! assert_eq!(braiding(&bp, &bm).unwrap().render(), "-b1- ox b1+");
//! ```

mod alphabet;
mod element;
mod generator;
mod tensor;
mod word;

pub use alphabet::Alphabet;
pub use element::Element;
pub use generator::{Family, Generator, Parity, Sign};
pub use tensor::{braiding, TensorElement};
pub use word::Word;
