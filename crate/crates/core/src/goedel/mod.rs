//! Gödel encoding of dotted sequences, cylinder rectangles, and the
//! compilation of generalized shifts into piecewise affine-linear maps on
//! the unit square.

pub mod coding;
pub mod export;
pub mod geometry;
pub mod nda;

pub use coding::{CodingError, GoedelCoding};
pub use export::{BranchFile, NdaFile, NdaFileError, RectFile};
pub use geometry::{Point, Rect, RectError};
pub use nda::{AffineBranch, BranchReport, CompileError, NdaMachine};
