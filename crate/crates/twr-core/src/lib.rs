// index-heavy matrix and blade arithmetic reads better with plain loops
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

//! Lorentzian geometric algebra kernels in dimensions 3 and 4:
//! the mostly-plus Minkowski metric, a dense Clifford algebra, reflections
//! and boosts as versors and as matrices, and the closed-form angle of the
//! rotation left over after a closed cycle of three boosts, cross-checked
//! against straight matrix composition.

pub mod clifford;
pub mod error;
pub mod gamma_rep;
pub mod lorentz;
pub mod minkowski;
pub mod sweep;
pub mod thomas_wigner;

pub use error::{Error, Result};
