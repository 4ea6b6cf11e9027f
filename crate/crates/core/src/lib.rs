//! Rectangle (intercalate) analysis for latin squares and quasigroups.
//!
//! A rectangle is a 2x2 latin subsquare: cells at rows `x, z` and columns
//! `y, u` with `xy = zu = a` and `xu = zy = b`. This crate finds all
//! rectangles of a square via left-translation products `L_x L_z^-1`,
//! switches them to produce distance-4 neighbour squares, enumerates
//! autotopisms, partitions rectangles into equivalence classes, and decides
//! isotopy of small-order squares.
//!
//! The `parallel` feature (on by default) runs the data-parallel inner
//! loops on rayon; without it everything falls back to sequential code with
//! identical output.

pub mod error;
pub mod fixtures;
pub mod perm;
pub mod rect;
pub mod square;
pub mod symmetry;
pub mod transform;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use rect::{
    boolean_rectangle, find_rectangles, find_rectangles_oracle, group_has_rectangle,
    rectangle_from_cycle, two_cycles, Rectangle,
};
pub use square::{GroupCheck, LatinSquare};
pub use symmetry::{
    apply_isotopy, are_isotopic, autotopisms, autotopisms_bounded, equivalence_classes,
    is_autotopism, is_isotopy, isotopy_witness, rectangle_image, IsotopyTriple, IsotopyVerdict,
    DEFAULT_SEARCH_BOUND,
};
pub use transform::{rectangle_transform, transformed_rectangle};
