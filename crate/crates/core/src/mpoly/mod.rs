//! Homogeneous forms on P^2/P^3, bihomogeneous forms on P^1 x P^1, the text
//! grammar, and projective points over number fields.

mod biform;
mod form;
mod parse;
mod point;

pub use biform::BiForm;
pub use form::{monomial_basis, plane_vars, space_vars, Form};
pub use parse::{parse_form, parse_poly, parse_upoly, SparsePoly};
pub use point::{eval_form, ProjPoint};
