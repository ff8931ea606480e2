//! Downset codes over finite grids and their unique decoding.
//!
//! A downset code `C(S, D)` evaluates every polynomial supported on a downset
//! `D` of exponent vectors at the points of a product grid
//! `S = S_1 × … × S_m ⊆ F_p^m`. The main entry point is
//! [`weighted_downset_decode`], which recovers the unique codeword within
//! weighted distance `μ/2` of a received word, with `μ` the minimum distance.

pub mod cli;
pub mod code;
pub mod decoder;
pub mod downset;
pub mod error;
pub mod field;
pub mod fuzz;
pub mod grid;
pub mod interp;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod rs;
pub mod weighted;

pub use code::CodeSpec;
pub use decoder::{
    decode_verified, decoding_radius, unique_decode, weighted_downset_decode,
    weighted_downset_decode_traced, DecodeCall, Decoded,
};
pub use downset::Downset;
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use grid::Grid;
pub use interp::{eval_on_grid, grid_interpolate, reduce_individual_degrees};
pub use poly::{ExponentVector, MonomialOrder, MultivariatePoly, UnivariatePoly};
pub use rs::{errors_erasures_decode, weighted_rs_decode};
pub use weighted::{weighted_distance, ExactDistance, WeightedWord};
