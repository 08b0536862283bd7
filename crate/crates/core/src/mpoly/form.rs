use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::BiForm;
use crate::arith::{rat, BinaryForm, Field, Rat};
use crate::error::{Error, Result};

pub fn plane_vars() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

pub fn space_vars() -> Vec<String> {
    ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect()
}

/// Exponent vector ordered so that `BTreeMap` iteration is graded-lex
/// descending (x^3 before x^2*y before ...).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        let da: u32 = self.0.iter().sum();
        let db: u32 = o.0.iter().sum();
        db.cmp(&da).then_with(|| o.0.cmp(&self.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// All exponent vectors of a given degree, in graded-lex descending order.
pub fn monomial_basis(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == nvars {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Homogeneous polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    vars: Vec<String>,
    degree: u32,
    terms: BTreeMap<Mono, Rat>,
}

impl Form {
    pub fn zero(vars: &[String], degree: u32) -> Self {
        Form { vars: vars.to_vec(), degree, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: Rat) -> Self {
        let mut f = Self::zero(vars, 0);
        if !c.is_zero() {
            f.terms.insert(Mono(vec![0; vars.len()]), c);
        }
        f
    }

    /// The coordinate function `vars[i]`.
    pub fn var(vars: &[String], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::from_terms(vars, 1, [(e, Rat::one())]).unwrap()
    }

    /// Builds a form, dropping zero coefficients and summing repeats.
    pub fn from_terms(
        vars: &[String],
        degree: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, Rat)>,
    ) -> Result<Self> {
        let mut f = Self::zero(vars, degree);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch { expected: vars.len(), got: e.len() });
            }
            if e.iter().sum::<u32>() != degree {
                return Err(Error::DegreeMismatch(format!("monomial of degree {} in a form of degree {degree}", e.iter().sum::<u32>())));
            }
            f.add_term(Mono(e), c);
        }
        Ok(f)
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(&Mono(e.to_vec())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut f = Self::zero(&self.vars, self.degree);
        if !c.is_zero() {
            for (m, a) in &self.terms {
                f.terms.insert(m.clone(), a * c);
            }
        }
        f
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.vars, Rat::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients in the order of [`monomial_basis`].
    pub fn to_coeff_vec(&self) -> Vec<Rat> {
        monomial_basis(self.nvars(), self.degree).iter().map(|e| self.coeff(e)).collect()
    }

    pub fn from_coeff_vec(vars: &[String], degree: u32, v: &[Rat]) -> Self {
        let basis = monomial_basis(vars.len(), degree);
        assert_eq!(basis.len(), v.len(), "coefficient vector length");
        Self::from_terms(vars, degree, basis.into_iter().zip(v.iter().cloned())).unwrap()
    }

    /// Value at a coordinate vector over any field.
    pub fn eval<F: Field>(&self, pt: &[F]) -> Result<F> {
        if pt.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: pt.len() });
        }
        let d = self.degree as usize;
        let powers: Vec<Vec<F>> = pt
            .iter()
            .map(|x| {
                let mut v = vec![x.one_like()];
                for _ in 0..d {
                    v.push(v.last().unwrap().clone() * x.clone());
                }
                v
            })
            .collect();
        let mut acc = pt[0].zero_like();
        for (m, c) in &self.terms {
            let mut term = pt[0].embed(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term * powers[i][e as usize].clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut f = Self::zero(&self.vars, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut n = m.0.clone();
                n[i] -= 1;
                f.add_term(Mono(n), c * rat(e as i64));
            }
        }
        f
    }

    pub fn partials(&self) -> Vec<Self> {
        (0..self.nvars()).map(|i| self.partial(i)).collect()
    }

    fn check_images<T>(&self, images: &[T]) -> Result<()> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: images.len() });
        }
        Ok(())
    }

    /// `self(images)` for forms of a common degree in a common ring.
    pub fn compose(&self, images: &[Form]) -> Result<Form> {
        self.check_images(images)?;
        let e = images[0].degree;
        if images.iter().any(|g| g.degree != e || g.vars != images[0].vars) {
            return Err(Error::InhomogeneousImage);
        }
        let vars = images[0].vars.clone();
        let one = Form::constant(&vars, Rat::one());
        let zero = Form::zero(&vars, self.degree * e);
        Ok(self.substitute_generic(images, one, zero, |a, b| a + b, |a, b| a * b, |a, c| a.scale(c)))
    }

    /// `self(images)` for biforms of a common bidegree.
    pub fn compose_bi(&self, images: &[BiForm]) -> Result<BiForm> {
        self.check_images(images)?;
        let (a, b) = images[0].bidegree();
        if images.iter().any(|g| g.bidegree() != (a, b)) {
            return Err(Error::InhomogeneousImage);
        }
        let d = self.degree;
        let one = BiForm::one();
        let zero = BiForm::zero((d * a, d * b));
        Ok(self.substitute_generic(images, one, zero, |x, y| x + y, |x, y| x * y, |x, c| x.scale(c)))
    }

    /// `self(images)` for binary forms of a common degree.
    pub fn restrict_binary(&self, images: &[BinaryForm]) -> Result<BinaryForm> {
        self.check_images(images)?;
        let e = images[0].degree();
        if images.iter().any(|g| g.degree() != e) {
            return Err(Error::InhomogeneousImage);
        }
        let one = BinaryForm::from_ints(&[1]);
        let zero = BinaryForm::zero(self.degree as usize * e);
        Ok(self.substitute_generic(images, one, zero, |x, y| x.add(y), |x, y| x.mul(y), |x, c| x.scale(c)))
    }

    fn substitute_generic<T: Clone>(
        &self,
        images: &[T],
        one: T,
        zero: T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
        scale: impl Fn(&T, &Rat) -> T,
    ) -> T {
        let d = self.degree as usize;
        let powers: Vec<Vec<T>> = images
            .iter()
            .map(|g| {
                let mut v = vec![one.clone()];
                for _ in 0..d {
                    v.push(mul(v.last().unwrap(), g));
                }
                v
            })
            .collect();
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut term = scale(&one, c);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = mul(&term, &powers[i][e as usize]);
                }
            }
            acc = add(&acc, &term);
        }
        acc
    }

    /// `self(M X)`: variable `i` is replaced by `sum_j M[i][j] X_j`.
    pub fn linear_change(&self, m: &[Vec<Rat>]) -> Form {
        let n = self.nvars();
        let images: Vec<Form> = (0..n)
            .map(|i| {
                let terms = (0..n).map(|j| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    (e, m[i][j].clone())
                });
                Form::from_terms(&self.vars, 1, terms).unwrap()
            })
            .collect();
        self.compose(&images).unwrap()
    }

    /// Exact quotient by `d` (multivariate division with a single divisor
    /// under a monomial order: exact iff the remainder vanishes).
    pub fn div_exact(&self, d: &Form) -> Option<Form> {
        assert_eq!(self.vars, d.vars, "variable lists differ");
        let (lead_m, lead_c) = d.terms.iter().next()?;
        if self.is_zero() {
            return Some(Form::zero(&self.vars, self.degree.checked_sub(d.degree)?));
        }
        let qdeg = self.degree.checked_sub(d.degree)?;
        let mut r = self.clone();
        let mut q = Form::zero(&self.vars, qdeg);
        while let Some((m, c)) = r.terms.iter().next().map(|(m, c)| (m.clone(), c.clone())) {
            let e: Option<Vec<u32>> = m.0.iter().zip(&lead_m.0).map(|(a, b)| a.checked_sub(*b)).collect();
            let e = e?;
            let coef = c / lead_c;
            let mono = Form::from_terms(&self.vars, qdeg, [(e, coef)]).unwrap();
            r = &r - &(&mono * d);
            q = &q + &mono;
        }
        Some(q)
    }

    /// Same polynomial with renamed variables (same count).
    pub fn with_vars(&self, vars: &[String]) -> Form {
        assert_eq!(vars.len(), self.nvars());
        Form { vars: vars.to_vec(), degree: self.degree, terms: self.terms.clone() }
    }

    /// Scalar `c` with `self = c * other`, if the forms are proportional.
    pub fn proportional_to(&self, other: &Form) -> Option<Rat> {
        let (m, c) = other.terms.iter().next()?;
        let a = self.terms.get(m)?;
        let ratio = a / c;
        (*self == other.scale(&ratio)).then_some(ratio)
    }

    fn check_compatible(&self, o: &Form) {
        assert_eq!(self.vars, o.vars, "variable lists differ");
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, o: &Form) -> Form {
        self.check_compatible(o);
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        assert_eq!(self.degree, o.degree, "adding forms of different degrees");
        let mut f = self.clone();
        for (m, c) in &o.terms {
            f.add_term(m.clone(), c.clone());
        }
        f
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&-Rat::one())
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, o: &Form) -> Form {
        self + &(-o)
    }
}

impl Mul for &Form {
    type Output = Form;
    fn mul(self, o: &Form) -> Form {
        self.check_compatible(o);
        let mut f = Form::zero(&self.vars, self.degree + o.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                f.add_term(Mono(e), c1 * c2);
            }
        }
        f
    }
}

pub(crate) fn write_term(
    out: &mut String,
    c: &Rat,
    factors: &[(String, u32)],
) {
    let neg = *c < Rat::zero();
    let a = if neg { -c.clone() } else { c.clone() };
    if neg {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let mut parts: Vec<String> = factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() || !a.is_one() {
        parts.insert(0, a.to_string());
    }
    out.push_str(&parts.join("*"));
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (m, c) in &self.terms {
            let factors: Vec<(String, u32)> = self.vars.iter().cloned().zip(m.0.iter().copied()).collect();
            write_term(&mut s, c, &factors);
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse_form;
    use proptest::prelude::*;

    fn pf(s: &str) -> Form {
        parse_form(s, &plane_vars()).unwrap()
    }

    #[test]
    fn ordering_and_printing() {
        let f = pf("z^3 + y^3 + x^3");
        assert_eq!(f.to_string(), "x^3+y^3+z^3");
        assert_eq!(pf("z^2-4xy").to_string(), "-4*x*y+z^2");
        assert_eq!(monomial_basis(3, 2), vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]);
    }

    #[test]
    fn partials() {
        assert_eq!(pf("x^3+y^3+z^3").partial(0), pf("3x^2"));
        let d = pf("z^2-4*x*y").partials();
        assert_eq!(d, vec![pf("-4y"), pf("-4x"), pf("2z")]);
    }

    #[test]
    fn compose_identity() {
        let f = pf("x^3 - 2*x*y*z + 7/3*z^3");
        let id: Vec<Form> = (0..3).map(|i| Form::var(&plane_vars(), i)).collect();
        assert_eq!(f.compose(&id).unwrap(), f);
    }

    #[test]
    fn exact_division() {
        let a = pf("x^2 - y*z + 3z^2");
        let b = pf("x + 2y - z");
        let p = &a * &b;
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&a), Some(b));
        assert_eq!((&p + &pf("x^3")).div_exact(&a), None);
    }

    #[test]
    fn evaluation() {
        let d = pf("z^2-4*x*y");
        assert_eq!(d.eval(&[rat(1), rat(0), rat(0)]).unwrap(), rat(0));
        assert!(matches!(d.eval(&[rat(1)]), Err(Error::DimensionMismatch { .. })));
    }

    fn arb_cubic() -> impl Strategy<Value = Form> {
        prop::collection::vec(-5i64..5, 10).prop_map(|c| {
            Form::from_coeff_vec(&plane_vars(), 3, &c.iter().map(|&v| rat(v)).collect::<Vec<_>>())
        })
    }

    proptest! {
        #[test]
        fn mixed_partials_commute(f in arb_cubic()) {
            prop_assert_eq!(f.partial(0).partial(1), f.partial(1).partial(0));
            prop_assert_eq!(f.partial(1).partial(2), f.partial(2).partial(1));
        }

        #[test]
        fn euler(f in arb_cubic()) {
            let vars = plane_vars();
            let mut sum = Form::zero(&vars, 3);
            for i in 0..3 {
                sum = &sum + &(&Form::var(&vars, i) * &f.partial(i));
            }
            prop_assert_eq!(sum, f.scale(&rat(3)));
        }

        #[test]
        fn print_parse_roundtrip(f in arb_cubic()) {
            prop_assert_eq!(parse_form(&f.to_string(), &plane_vars()).unwrap(), f);
        }

        #[test]
        fn homogeneous_scaling(f in arb_cubic(), pt in prop::collection::vec(-4i64..4, 3), l in 1i64..5) {
            let p: Vec<Rat> = pt.iter().map(|&v| rat(v)).collect();
            let lp: Vec<Rat> = pt.iter().map(|&v| rat(v * l)).collect();
            prop_assert_eq!(f.eval(&lp).unwrap(), f.eval(&p).unwrap() * rat(l.pow(3)));
        }
    }
}
