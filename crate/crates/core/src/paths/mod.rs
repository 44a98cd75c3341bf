//! Decorated labelled Dyck and square paths, their statistics and enumerators.

mod decorated;
mod enumerate;
mod enumerator;
mod path;
mod pushing;

pub use decorated::{
    contractible_valleys, dinv_breakdown, is_partial_labelling, reading_order, DecoratedPath, DinvBreakdown, PathRecord,
};
pub use enumerate::{contains, enumerate, for_each, for_each_with_content, is_peak_shuffle, Family, Params};
pub use enumerator::{
    monomial_expansion, monomial_expansion_refined, qt_enumerator, symmetry_check, touches, Enumerator, LabelledSum,
};
pub use path::{SquarePath, Step};
pub use pushing::{push, Pushed};
