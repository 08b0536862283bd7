//! Exact scalars and univariate polynomials.

mod binary;
mod factor;
mod field;
mod numfield;
mod rat;
mod upoly;

pub use binary::{binary_form_sqrt, BinaryForm};
pub use factor::{upoly_factor, MAX_FACTOR_DEGREE};
pub use field::Field;
pub use numfield::{generated_degree, NFElem, NumberField};
pub use rat::{height, int, parse_rat, rat, rat_sqrt, ratio, Rat};
pub use upoly::UPoly;
