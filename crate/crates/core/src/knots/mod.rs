//! Knot presentations: braid words, long-knot event lists, singular
//! braids and formal knot combinations.

mod braid;
mod combination;
mod diagram;
mod table;

pub use braid::{BraidWord, SingularBraidWord};
pub use combination::{resolutions, resolve_singular, KnotCombination};
pub use diagram::{closure_to_long, normalize_writhe, open_closure, Event, LongKnotDiagram, Orientation};
pub use table::{knot_table, KNOT_NAMES};
