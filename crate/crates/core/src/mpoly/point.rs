use std::fmt;
use std::sync::Arc;

use super::Form;
use crate::arith::{generated_degree, Field, NFElem, NumberField, Rat, UPoly};
use crate::error::{Error, Result};

/// Point of P^2 or P^3 with coordinates in one number field. A point over a
/// proper extension stands for its whole orbit of conjugates.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    field: Arc<NumberField>,
    coords: Vec<NFElem>,
}

impl ProjPoint {
    pub fn new(coords: Vec<NFElem>) -> Result<Self> {
        let field = coords.first().ok_or(Error::InvalidInput("empty point".into()))?.field().clone();
        for c in &coords {
            c.checked_same_field(&coords[0])?;
        }
        if !(3..=4).contains(&coords.len()) {
            return Err(Error::DimensionMismatch { expected: 3, got: coords.len() });
        }
        if coords.iter().all(NFElem::is_zero) {
            return Err(Error::InvalidInput("all coordinates are zero".into()));
        }
        Ok(ProjPoint { field, coords })
    }

    pub fn rational(coords: &[Rat]) -> Result<Self> {
        let q = NumberField::rationals();
        Self::new(coords.iter().map(|c| q.from_rat(c)).collect())
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::rational(&coords.iter().map(|&c| crate::arith::rat(c)).collect::<Vec<_>>()).expect("valid point")
    }

    /// Coordinates given as polynomials in the field generator.
    pub fn over(field: &Arc<NumberField>, coords: &[UPoly<Rat>]) -> Result<Self> {
        Self::new(coords.iter().map(|p| field.elem(p)).collect())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[NFElem] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.rational_coords().is_some()
    }

    /// Rational coordinates (after scaling), when the point is Q-rational.
    pub fn rational_coords(&self) -> Option<Vec<Rat>> {
        let n = self.normalized();
        n.coords.iter().map(NFElem::to_rat).collect()
    }

    /// Scaled so the last nonzero coordinate is one.
    pub fn normalized(&self) -> ProjPoint {
        let k = self.last_nonzero();
        let inv = self.coords[k].inverse().unwrap();
        ProjPoint { field: self.field.clone(), coords: self.coords.iter().map(|c| c.clone() * inv.clone()).collect() }
    }

    pub fn last_nonzero(&self) -> usize {
        self.coords.iter().rposition(|c| !c.is_zero()).unwrap()
    }

    /// Number of conjugates: degree of the field generated by coordinate ratios.
    pub fn orbit_size(&self) -> usize {
        generated_degree(self.normalized().coords())
    }

    /// Equality up to a nonzero scalar (same field required).
    pub fn same_point(&self, o: &ProjPoint) -> Result<bool> {
        if self.coords.len() != o.coords.len() {
            return Ok(false);
        }
        if !Arc::ptr_eq(&self.field, &o.field) && self.field.minpoly() != o.field.minpoly() {
            return Err(Error::FieldMismatch);
        }
        let n = self.coords.len();
        for i in 0..n {
            for j in i + 1..n {
                let m = self.coords[i].clone() * o.coords[j].clone() - self.coords[j].clone() * o.coords[i].clone();
                if !m.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn eval(&self, f: &Form) -> Result<NFElem> {
        f.eval(&self.coords)
    }

    pub fn vanishes(&self, f: &Form) -> Result<bool> {
        Ok(self.eval(f)?.is_zero())
    }

    /// `M * P`.
    pub fn transform(&self, m: &[Vec<Rat>]) -> ProjPoint {
        let coords = crate::linalg::mat_vec(m, &self.coords);
        ProjPoint { field: self.field.clone(), coords }
    }

    /// Drops the last coordinate (projection from (0:...:0:1)).
    pub fn project_last(&self) -> Result<ProjPoint> {
        Self::new(self.coords[..self.coords.len() - 1].to_vec())
    }
}

/// Value of `f` at `P` (coordinates as given, not rescaled).
pub fn eval_form(f: &Form, p: &ProjPoint) -> Result<NFElem> {
    p.eval(f)
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))?;
        if !self.field.is_rationals() {
            write!(f, " over a root of {}", self.field.minpoly())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{parse_form, plane_vars};

    #[test]
    fn sextic_orbit_lies_on_conic_and_cubic() {
        let k = NumberField::new(&UPoly::from_ints(&[1, 3, 3, 1, 3, 3, 1])).unwrap();
        let p = ProjPoint::over(&k, &[UPoly::from_ints(&[0, 1]), UPoly::from_ints(&[-1, -3, 0, -1, -2, -1]), UPoly::from_ints(&[1])]).unwrap();
        for s in ["x*y+y*z+z*x", "x^3+y^3+z^3"] {
            assert!(p.vanishes(&parse_form(s, &plane_vars()).unwrap()).unwrap());
        }
        assert_eq!(p.orbit_size(), 6);
        assert!(!p.is_rational());
    }

    #[test]
    fn equality_up_to_scalar() {
        let a = ProjPoint::from_ints(&[1, 2, 3]);
        let b = ProjPoint::from_ints(&[-2, -4, -6]);
        assert!(a.same_point(&b).unwrap());
        assert!(!a.same_point(&ProjPoint::from_ints(&[1, 2, 4])).unwrap());
        assert_eq!(b.rational_coords().unwrap(), ProjPoint::from_ints(&[1, 2, 3]).normalized().rational_coords().unwrap());
        assert!(ProjPoint::rational(&[crate::arith::rat(0), crate::arith::rat(0), crate::arith::rat(0)]).is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let k = NumberField::new(&UPoly::from_ints(&[-1, -1, 1])).unwrap();
        let q = NumberField::rationals();
        let e = ProjPoint::new(vec![k.generator(), q.from_rat(&crate::arith::rat(0)), k.one()]);
        assert_eq!(e.unwrap_err(), Error::FieldMismatch);
    }
}
