use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use super::{upoly_factor, Field, Rat, UPoly};
use crate::error::{Error, Result};
use crate::linalg;

/// `Q[a]/(p)` for a monic irreducible `p`. The rationals are the degree-1
/// field `Q[a]/(a)`.
#[derive(Debug, PartialEq)]
pub struct NumberField {
    minpoly: UPoly<Rat>,
}

impl NumberField {
    /// Builds the field, rejecting reducible polynomials.
    pub fn new(p: &UPoly<Rat>) -> Result<Arc<Self>> {
        let deg = p.degree().unwrap_or(0);
        if deg == 0 {
            return Err(Error::InvalidInput("minimal polynomial must have positive degree".into()));
        }
        let factors = upoly_factor(p)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::ReducibleMinimalPolynomial(p.to_string()));
        }
        if deg == 1 {
            return Ok(Self::rationals());
        }
        Ok(Arc::new(NumberField { minpoly: p.monic() }))
    }

    /// A field containing a root of the irreducible `p`, with that root.
    /// Linear `p` gives the rationals and the rational root.
    pub fn root_field(p: &UPoly<Rat>) -> Result<(Arc<Self>, NFElem)> {
        if p.degree() == Some(1) {
            let q = Self::rationals();
            let root = -(p.coeffs()[0].clone() / p.coeffs()[1].clone());
            return Ok((q.clone(), q.from_rat(&root)));
        }
        let k = Self::new(p)?;
        let a = k.generator();
        Ok((k, a))
    }

    pub fn rationals() -> Arc<Self> {
        static Q: OnceLock<Arc<NumberField>> = OnceLock::new();
        Q.get_or_init(|| Arc::new(NumberField { minpoly: UPoly::x() })).clone()
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn minpoly(&self) -> &UPoly<Rat> {
        &self.minpoly
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    pub fn elem(self: &Arc<Self>, p: &UPoly<Rat>) -> NFElem {
        let mut coords = p.rem(&self.minpoly).into_coeffs();
        coords.resize(self.degree(), Rat::zero());
        NFElem { field: self.clone(), coords }
    }

    pub fn from_rat(self: &Arc<Self>, r: &Rat) -> NFElem {
        let mut coords = vec![Rat::zero(); self.degree()];
        coords[0] = r.clone();
        NFElem { field: self.clone(), coords }
    }

    pub fn generator(self: &Arc<Self>) -> NFElem {
        self.elem(&UPoly::x())
    }

    pub fn zero(self: &Arc<Self>) -> NFElem {
        self.from_rat(&Rat::zero())
    }

    pub fn one(self: &Arc<Self>) -> NFElem {
        self.from_rat(&Rat::one())
    }
}

pub(crate) fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || a.minpoly == b.minpoly
}

/// Residue of degree < [K:Q] in the power basis of the generator.
#[derive(Clone, Debug)]
pub struct NFElem {
    field: Arc<NumberField>,
    coords: Vec<Rat>,
}

impl PartialEq for NFElem {
    fn eq(&self, o: &Self) -> bool {
        same_field(&self.field, &o.field) && self.coords == o.coords
    }
}

impl NFElem {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn as_poly(&self) -> UPoly<Rat> {
        UPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The value, when it lies in Q.
    pub fn to_rat(&self) -> Option<Rat> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    pub fn checked_same_field(&self, o: &Self) -> Result<()> {
        if same_field(&self.field, &o.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn assert_same(&self, o: &Self) {
        assert!(same_field(&self.field, &o.field), "number field mismatch");
    }

    /// Minimal polynomial over Q (monic): first linear dependence among powers.
    pub fn minimal_polynomial(&self) -> UPoly<Rat> {
        let n = self.field.degree();
        let mut powers = vec![self.field.one()];
        for _ in 0..n {
            powers.push(powers.last().unwrap().clone() * self.clone());
            // columns = powers, rows = coordinates
            let rows: Vec<Vec<Rat>> = (0..n)
                .map(|i| powers.iter().map(|p| p.coords[i].clone()).collect())
                .collect();
            let ker = linalg::kernel(&rows, powers.len());
            if let Some(v) = ker.first() {
                return UPoly::new(v.clone()).monic();
            }
        }
        unreachable!("powers up to the field degree are dependent")
    }
}

/// Degree over Q of the subfield generated by `elems` (all in one field).
pub fn generated_degree(elems: &[NFElem]) -> usize {
    let Some(first) = elems.first() else { return 1 };
    let field = first.field.clone();
    let n = field.degree();
    let mut basis = vec![field.one()];
    loop {
        let mut cand = basis.clone();
        for b in &basis {
            for e in elems {
                cand.push(b.clone() * e.clone());
            }
        }
        let rows: Vec<Vec<Rat>> = cand.iter().map(|c| c.coords.clone()).collect();
        let rank = linalg::rank(&rows, n);
        if rank == basis.len() {
            return rank;
        }
        // keep an independent subset, in order
        let mut kept: Vec<NFElem> = Vec::new();
        for c in cand {
            let mut rows: Vec<Vec<Rat>> = kept.iter().map(|k| k.coords.clone()).collect();
            rows.push(c.coords.clone());
            if linalg::rank(&rows, n) > kept.len() {
                kept.push(c);
            }
        }
        basis = kept;
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_poly().to_string_in("a"))
    }
}

impl Add for NFElem {
    type Output = NFElem;
    fn add(self, o: NFElem) -> NFElem {
        self.assert_same(&o);
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        NFElem { field: self.field, coords }
    }
}

impl Sub for NFElem {
    type Output = NFElem;
    fn sub(self, o: NFElem) -> NFElem {
        self.assert_same(&o);
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect();
        NFElem { field: self.field, coords }
    }
}

impl Neg for NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        let coords = self.coords.iter().map(|a| -a).collect();
        NFElem { field: self.field, coords }
    }
}

impl Mul for NFElem {
    type Output = NFElem;
    fn mul(self, o: NFElem) -> NFElem {
        self.assert_same(&o);
        let n = self.coords.len();
        if n == 1 {
            let coords = vec![&self.coords[0] * &o.coords[0]];
            return NFElem { field: self.field, coords };
        }
        let mut prod = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        // reduce with a^n = -(m_0 + ... + m_{n-1} a^{n-1})
        let m = self.field.minpoly.coeffs();
        for k in (n..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[k], Rat::zero());
            if c.is_zero() {
                continue;
            }
            for (i, mi) in m[..n].iter().enumerate() {
                if !mi.is_zero() {
                    prod[k - n + i] -= &c * mi;
                }
            }
        }
        prod.truncate(n);
        NFElem { field: self.field, coords: prod }
    }
}

impl Field for NFElem {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.field.is_rationals() {
            return Some(self.field.from_rat(&self.coords[0].recip()));
        }
        let (g, u, _) = self.as_poly().ext_gcd(&self.field.minpoly);
        debug_assert_eq!(g.degree(), Some(0));
        Some(self.field.elem(&u))
    }
    fn embed(&self, r: &Rat) -> Self {
        self.field.from_rat(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use proptest::prelude::*;

    fn sextic_field() -> Arc<NumberField> {
        NumberField::new(&UPoly::from_ints(&[1, 3, 3, 1, 3, 3, 1])).unwrap()
    }

    #[test]
    fn generator_is_root() {
        let k = sextic_field();
        let a = k.generator();
        let v = k.minpoly().coeffs().iter().rev().fold(k.zero(), |acc, c| acc * a.clone() + k.from_rat(c));
        assert!(v.is_zero());
    }

    #[test]
    fn reducible_rejected() {
        let e = NumberField::new(&UPoly::from_ints(&[-1, 0, 1])).unwrap_err();
        assert!(matches!(e, Error::ReducibleMinimalPolynomial(_)));
    }

    #[test]
    fn inverse_and_minpoly() {
        let k = NumberField::new(&UPoly::from_ints(&[-1, -1, 1])).unwrap();
        let b = k.generator();
        let inv = b.inverse().unwrap();
        assert_eq!(inv.clone() * b.clone(), k.one());
        // 1/b = b - 1 when b^2 = b + 1
        assert_eq!(inv, b.clone() - k.one());
        let sq = b.clone() * b.clone();
        assert_eq!(sq.minimal_polynomial(), UPoly::from_ints(&[1, -3, 1]));
        assert_eq!(k.from_rat(&ratio(3, 2)).minimal_polynomial(), UPoly::new(vec![ratio(-3, 2), rat(1)]));
    }

    #[test]
    fn subfield_degree() {
        // a^4 + a^2/2 - 1/4: a^2 generates a quadratic subfield
        let k = NumberField::new(&UPoly::new(vec![ratio(-1, 4), rat(0), ratio(1, 2), rat(0), rat(1)])).unwrap();
        let a = k.generator();
        assert_eq!(generated_degree(&[a.clone() * a.clone()]), 2);
        assert_eq!(generated_degree(&[a]), 4);
        assert_eq!(generated_degree(&[k.from_rat(&rat(3))]), 1);
    }

    fn elem(k: &Arc<NumberField>, c: &[i64]) -> NFElem {
        k.elem(&UPoly::from_ints(c))
    }

    proptest! {
        #[test]
        fn mul_associative(a in prop::collection::vec(-5i64..5, 6), b in prop::collection::vec(-5i64..5, 6), c in prop::collection::vec(-5i64..5, 6)) {
            let k = sextic_field();
            let (a, b, c) = (elem(&k, &a), elem(&k, &b), elem(&k, &c));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a * c);
        }

        #[test]
        fn inverse_roundtrip(a in prop::collection::vec(-5i64..5, 6)) {
            let k = sextic_field();
            let a = elem(&k, &a);
            prop_assume!(!a.is_zero());
            prop_assert_eq!(a.inverse().unwrap() * a, k.one());
        }
    }
}
