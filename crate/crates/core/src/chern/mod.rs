//! Vector bundle expressions, their Chern roots, and symmetric functions
//! evaluated at those roots.

mod bundle;
mod parse;
mod pleth;

pub use bundle::{chern_roots, chern_roots_bounded, count_ssyt, BundleExpr, RootMultiset, DEFAULT_RANK_BOUND};
pub use parse::parse_bundle;
pub use pleth::{chern_plethysm, pragacz_check, total_chern, Pragacz, PragaczExpansion, SymFn};
