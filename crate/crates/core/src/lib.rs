//! Recognition and certification of cover-incomparability graphs.

pub mod chordal;
pub mod cograph;
pub mod exact;
pub mod format;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod poset;
pub mod report;
