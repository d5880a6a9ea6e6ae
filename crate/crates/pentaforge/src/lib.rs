//! Pentagonal geometries: construction, development and verification.

pub mod autogen;
pub mod catalog;
pub mod construct;
pub mod spectrum;
pub mod design;
pub mod error;
pub mod io;
pub mod verify;

pub use design::{Block, Design, Gdd, GddType, PentParams, Rgdd};
pub use error::{Error, Result};
