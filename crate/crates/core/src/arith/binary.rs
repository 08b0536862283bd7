use std::fmt;

use num_traits::{One, Zero};

use super::{rat_sqrt, upoly_factor, Field, Rat, UPoly};
use crate::error::Result;

/// Binary form of fixed degree `d`; `coeffs[i]` multiplies `s^i t^(d-i)`,
/// so setting `t = 1` reads off a univariate polynomial in `s` directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs a degree");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![Rat::zero(); degree + 1] }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| super::rat(v)).collect())
    }

    /// The linear form `a*s + b*t`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![b, a])
    }

    pub fn s() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn t() -> Self {
        Self::from_ints(&[1, 0])
    }

    /// Homogenizes `p(s)` to degree `degree >= deg p`.
    pub fn homogenize(p: &UPoly<Rat>, degree: usize) -> Self {
        let mut c = p.coeffs().to_vec();
        assert!(c.len() <= degree + 1, "degree too small to homogenize");
        c.resize(degree + 1, Rat::zero());
        Self::new(c)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `self(s, 1)`
    pub fn dehomogenize(&self) -> UPoly<Rat> {
        UPoly::new(self.coeffs.clone())
    }

    /// Multiplicity of the root `(1:0)`, i.e. the power of `t` dividing it.
    pub fn infinity_multiplicity(&self) -> usize {
        match self.dehomogenize().degree() {
            None => self.degree(),
            Some(k) => self.degree() - k,
        }
    }

    pub fn eval<F: Field>(&self, s: &F, t: &F) -> F {
        let mut acc = s.zero_like();
        let d = self.degree();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = s.embed(c);
            for _ in 0..i {
                term = term * s.clone();
            }
            for _ in 0..d - i {
                term = term * t.clone();
            }
            acc = acc + term;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree(), o.degree(), "binary form degrees differ");
        Self::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut c = vec![Rat::zero(); self.degree() + o.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::from_ints(&[1]), |acc, _| acc.mul(self))
    }

    /// Leading coefficient in the `t = 1` chart, or of the lowest `t` power.
    pub fn lead(&self) -> Option<&Rat> {
        self.coeffs.iter().rev().find(|c| !c.is_zero())
    }

    /// Exact quotient as binary forms.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || d.degree() > self.degree() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.degree() - d.degree()));
        }
        if self.infinity_multiplicity() < d.infinity_multiplicity() {
            return None;
        }
        let q = self.dehomogenize().div_exact(&d.dehomogenize())?;
        Some(Self::homogenize(&q, self.degree() - d.degree()))
    }

    /// No repeated root on P^1 (including at infinity). Zero is not squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.infinity_multiplicity() <= 1 && self.dehomogenize().is_squarefree()
    }

    /// Irreducible factors with multiplicity; `t` appears for roots at infinity.
    /// The product equals `self` up to a rational unit.
    pub fn factor(&self) -> Result<Vec<(BinaryForm, usize)>> {
        let a = self.infinity_multiplicity();
        let mut out = Vec::new();
        if a > 0 {
            out.push((Self::t(), a));
        }
        let p = self.dehomogenize();
        if p.degree().unwrap_or(0) > 0 {
            for (f, m) in upoly_factor(&p)? {
                let d = f.degree().unwrap();
                out.push((Self::homogenize(&f, d), m));
            }
        }
        Ok(out)
    }

    /// Scales so the leading coefficient (see [`lead`](Self::lead)) is one.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }
}

/// `G` with `G^2 = F`, if `F` is the square of a binary form over Q.
pub fn binary_form_sqrt(f: &BinaryForm) -> Option<BinaryForm> {
    let d = f.degree();
    if d % 2 == 1 {
        return None;
    }
    if f.is_zero() {
        return Some(BinaryForm::zero(d / 2));
    }
    if f.infinity_multiplicity() % 2 == 1 {
        return None;
    }
    let p = f.dehomogenize();
    let k = p.degree().unwrap();
    let h = k / 2;
    let c = p.coeffs();
    let mut g = vec![Rat::zero(); h + 1];
    g[h] = rat_sqrt(&c[k])?;
    let two_lead = &g[h] * Rat::from_integer(2.into());
    for i in (0..h).rev() {
        let mut acc = c[h + i].clone();
        for j in (i + 1)..h {
            let l = h + i - j;
            if l > i && l < h + 1 {
                acc -= &g[j] * &g[l];
            }
        }
        g[i] = acc / &two_lead;
    }
    let gp = UPoly::new(g);
    if &gp * &gp != p {
        return None;
    }
    Some(BinaryForm::homogenize(&gp, d / 2))
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rat::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            s.push_str(match (s.is_empty(), neg) {
                (true, true) | (false, true) => "-",
                (true, false) => "",
                (false, false) => "+",
            });
            let mut parts = Vec::new();
            match i {
                0 => {}
                1 => parts.push("s".to_string()),
                _ => parts.push(format!("s^{i}")),
            }
            match d - i {
                0 => {}
                1 => parts.push("t".to_string()),
                e => parts.push(format!("t^{e}")),
            }
            if parts.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    parts.insert(0, a.to_string());
                }
                s.push_str(&parts.join("*"));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    #[test]
    fn perfect_squares() {
        // s^2 + 2st + t^2
        let f = BinaryForm::from_ints(&[1, 2, 1]);
        assert_eq!(binary_form_sqrt(&f), Some(BinaryForm::from_ints(&[1, 1])));
        // s^2 t^2
        let f = BinaryForm::from_ints(&[0, 0, 1, 0, 0]);
        assert_eq!(binary_form_sqrt(&f), Some(BinaryForm::from_ints(&[0, 1, 0])));
        // t^2 alone
        assert_eq!(binary_form_sqrt(&BinaryForm::from_ints(&[1, 0, 0])), Some(BinaryForm::from_ints(&[1, 0])));
    }

    #[test]
    fn non_squares() {
        assert_eq!(binary_form_sqrt(&BinaryForm::from_ints(&[0, 0, 2])), None);
        assert_eq!(binary_form_sqrt(&BinaryForm::from_ints(&[1, 0, 1])), None);
        assert_eq!(binary_form_sqrt(&BinaryForm::from_ints(&[0, 1, 0])), None);
    }

    #[test]
    fn factor_with_infinity() {
        // t^2 * s * (s - t)
        let f = BinaryForm::from_ints(&[0, 0, -1, 1]).mul(&BinaryForm::t());
        let facs = f.factor().unwrap();
        assert_eq!(facs[0], (BinaryForm::t(), 1));
        assert!(facs.contains(&(BinaryForm::s(), 2)));
        assert_eq!(facs.len(), 3);
        assert!(!f.is_squarefree());
        assert!(BinaryForm::from_ints(&[0, -1, 1]).is_squarefree());
    }

    #[test]
    fn exact_division() {
        let a = BinaryForm::from_ints(&[1, 1]);
        let b = BinaryForm::t();
        let f = a.mul(&b);
        assert_eq!(f.div_exact(&b), Some(a.clone()));
        assert_eq!(f.div_exact(&BinaryForm::s()), None);
        assert_eq!(rat(3), f.eval(&rat(1), &rat(3)) / rat(4));
    }

    proptest! {
        #[test]
        fn sqrt_of_square(c in prop::collection::vec(-20i64..20, 1..6)) {
            let g = BinaryForm::from_ints(&c);
            let sq = g.mul(&g);
            let r = binary_form_sqrt(&sq).expect("square");
            prop_assert!(r == g || r == g.scale(&rat(-1)));
        }
    }
}
