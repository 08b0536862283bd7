//! Exact splitting-type analysis of nodal plane curves with respect to
//! contact conics, and the correspondence with nodal quartic surfaces.
//!
//! Everything is computed over the rationals or over explicit number fields
//! `Q[a]/(p)`; there is no floating point anywhere.

pub mod arith;
pub mod conic;
pub mod cover;
pub mod curve;
pub mod error;
pub mod linalg;
pub mod linsys;
pub mod mpoly;
pub mod nodefile;
pub mod quartic;
pub mod registry;
pub mod report;
pub mod split;

pub use arith::{Field, NFElem, NumberField, Rat, UPoly};
pub use error::{Error, Result};
pub use arith::BinaryForm;
pub use mpoly::{BiForm, Form, ProjPoint};
