//! Exact computation of Boolean product polynomials and the symmetric
//! function identities around them.

pub mod boolprod;
pub mod chern;
pub mod combinat;
pub mod error;
pub mod frobmod;
pub mod lascoux;
pub mod polyring;
pub mod schurbasis;
pub mod symexpand;
pub mod verify;

pub use error::{Error, Result};
