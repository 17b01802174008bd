//! Strong and weak cluster magnification, and base change.

mod basechange;
mod strong;
mod weak;

pub use basechange::{base_change_verify, BaseChangeReport, EXHAUSTIVE_INDEX};
pub use strong::{
    detect_strong_magnification, magnify, strong_chain_correspondence, to_galois_pair, DecompositionReport, Magnified,
    StrongChainReport,
};
pub use weak::{is_weak_magnification, WeakMagnification};
