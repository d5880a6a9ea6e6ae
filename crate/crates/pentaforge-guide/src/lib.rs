//! The chapters under `book/src` included as rustdoc modules, so every
//! fenced code block in the book is compiled and run by `cargo test --doc`
//! and cannot drift from the library.
//!
//! Render the human version with `mdbook build book` from the repository
//! root; this crate only exists to keep the snippets honest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/designs.md")]
pub mod designs {}

#[doc = include_str!("../../../book/src/development.md")]
pub mod development {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/catalog.md")]
pub mod catalog {}

#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}

#[doc = include_str!("../../../book/src/spectrum.md")]
pub mod spectrum {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
