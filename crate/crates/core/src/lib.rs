//! Exact supertropical linear algebra: max-plus arithmetic over `i64`
//! rationals with ghost elements that remember ties.
//!
//! ```
//! use supertrop::Matrix;
//!
//! let a = Matrix::parse_rows(&[&["1", "0"], &["3", "4"]]).unwrap();
//! assert_eq!(a.nabla().unwrap().to_string(), "[[-1, -5], [-2, -4]]");
//! ```
//!
//! The guide in `book/` walks through each module; its snippets run as
//! doctests of this crate.

pub mod error;
pub mod lawcheck;
pub mod maxpoly;
pub mod semiring;
pub mod spectral;
pub mod tropmat;

pub use error::{Error, Result};
pub use maxpoly::Polynomial;
pub use semiring::Element;
pub use tropmat::Matrix;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/semiring.md")]
    mod semiring {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/pseudo-inverse.md")]
    mod pseudo_inverse {}
    #[doc = include_str!("../../../book/src/spectral.md")]
    mod spectral {}
    #[doc = include_str!("../../../book/src/checking.md")]
    mod checking {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
