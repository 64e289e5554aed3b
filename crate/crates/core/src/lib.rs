//! Exact word problems for Baumslag's group `B`, the HNN extensions
//! `G` and `E` built over `<h> x B`, and computations in the space of
//! marked groups and the Chabauty space of subgroups.
//!
//! ```
//! use condensed::groups::{builtin_marked, OracleConfig};
//! use condensed::word::parse_word;
//!
//! let e = builtin_marked("E", OracleConfig::default()).unwrap();
//! let w = parse_word(e.alphabet(), "(h^2)^t h^-2").unwrap();
//! assert!(e.is_trivial(&w).unwrap());
//! ```

pub mod baumslag;
pub mod error;
pub mod experiments;
pub mod groups;
pub mod hnn;
pub mod marked;
pub mod oracle;
pub mod presentation;
pub mod word;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/baumslag.md")]
    mod baumslag {}
    #[doc = include_str!("../../../book/src/britton.md")]
    mod britton {}
    #[doc = include_str!("../../../book/src/marked-groups.md")]
    mod marked_groups {}
    #[doc = include_str!("../../../book/src/chabauty.md")]
    mod chabauty {}
    #[doc = include_str!("../../../book/src/endomorphisms.md")]
    mod endomorphisms {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
