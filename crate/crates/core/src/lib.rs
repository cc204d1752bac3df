//! Shi-Catalan deformations of Weyl arrangements over exact rationals.
//!
//! The crate builds root systems and their W-equivariant deformations
//! `A^[-a,b]`, computes intersection posets, characteristic polynomials and
//! chamber counts, solves rank-2 multiarrangements for their exponents, and
//! certifies freeness of coned rank-2 deformations by chains of additions.
//!
//! ```
//! use arrlab::deform::{deform, EquivMult};
//! use arrlab::freecert::predict_cone_exponents;
//! use arrlab::poset::chambers;
//! use arrlab::rootsys::build_root_system;
//!
//! let g2 = build_root_system("G2".parse()?)?;
//! let b = EquivMult::new(vec![1, 0]);
//! assert_eq!(predict_cone_exponents(&g2, &b, &b)?, vec![1, 5, 7]);
//! assert_eq!(chambers(&deform(&g2, &b, &b)?)?, 48);
//! # Ok::<(), arrlab::Error>(())
//! ```

pub mod arrangement;
pub mod deform;
pub mod error;
pub mod flat;
pub mod freecert;
pub mod linalg;
pub mod multi2d;
pub mod poly;
pub mod poset;
pub mod render;
pub mod rootsys;

pub use arrangement::{Arrangement, Hyperplane, MultiArrangement};
pub use deform::EquivMult;
pub use error::{Error, Result};
pub use rootsys::{build_root_system, RootSystem, TypeLabel};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/deformations.md")]
    mod deformations {}
    #[doc = include_str!("../../../book/src/chambers.md")]
    mod chambers {}
    #[doc = include_str!("../../../book/src/multi2d.md")]
    mod multi2d {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
