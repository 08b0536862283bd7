use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::form::write_term;
use crate::arith::{BinaryForm, Rat};

/// Bihomogeneous form in `(s,t) x (u,v)`; exponents `[s, t, u, v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiForm {
    bidegree: (u32, u32),
    terms: BTreeMap<[u32; 4], Rat>,
}

impl BiForm {
    pub fn zero(bidegree: (u32, u32)) -> Self {
        BiForm { bidegree, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial([0, 0, 0, 0], Rat::one())
    }

    pub fn monomial(e: [u32; 4], c: Rat) -> Self {
        let mut f = Self::zero((e[0] + e[1], e[2] + e[3]));
        f.add_term(e, c);
        f
    }

    pub fn s() -> Self {
        Self::monomial([1, 0, 0, 0], Rat::one())
    }
    pub fn t() -> Self {
        Self::monomial([0, 1, 0, 0], Rat::one())
    }
    pub fn u() -> Self {
        Self::monomial([0, 0, 1, 0], Rat::one())
    }
    pub fn v() -> Self {
        Self::monomial([0, 0, 0, 1], Rat::one())
    }

    fn add_term(&mut self, e: [u32; 4], c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.bidegree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: [u32; 4]) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut f = Self::zero(self.bidegree);
        if !c.is_zero() {
            for (e, a) in &self.terms {
                f.terms.insert(*e, a * c);
            }
        }
        f
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Swap `(s,t) <-> (u,v)`: the deck involution.
    pub fn involution(&self) -> Self {
        let mut f = Self::zero((self.bidegree.1, self.bidegree.0));
        for (e, c) in &self.terms {
            f.terms.insert([e[2], e[3], e[0], e[1]], c.clone());
        }
        f
    }

    /// Basis exponents `s^i t^(d1-i) u^k v^(d2-k)` ordered by (i, k).
    pub fn basis(bidegree: (u32, u32)) -> Vec<[u32; 4]> {
        let (a, b) = bidegree;
        let mut out = Vec::new();
        for i in 0..=a {
            for k in 0..=b {
                out.push([i, a - i, k, b - k]);
            }
        }
        out
    }

    pub fn to_coeff_vec(&self) -> Vec<Rat> {
        Self::basis(self.bidegree).into_iter().map(|e| self.coeff(e)).collect()
    }

    pub fn from_coeff_vec(bidegree: (u32, u32), v: &[Rat]) -> Self {
        let mut f = Self::zero(bidegree);
        for (e, c) in Self::basis(bidegree).into_iter().zip(v) {
            f.add_term(e, c.clone());
        }
        f
    }

    /// Binary form in `(s,t)` obtained by fixing `(u,v)`.
    pub fn specialize_uv(&self, u0: &Rat, v0: &Rat) -> BinaryForm {
        let mut c = vec![Rat::zero(); self.bidegree.0 as usize + 1];
        for (e, a) in &self.terms {
            c[e[0] as usize] += a * pow(u0, e[2]) * pow(v0, e[3]);
        }
        BinaryForm::new(c)
    }

    /// Binary form in `(u,v)` obtained by fixing `(s,t)`.
    pub fn specialize_st(&self, s0: &Rat, t0: &Rat) -> BinaryForm {
        self.involution().specialize_uv(s0, t0)
    }

    /// Exact quotient (single-divisor division under lex order).
    pub fn div_exact(&self, d: &BiForm) -> Option<BiForm> {
        let (lm, lc) = d.terms.iter().next_back()?;
        let bd = (self.bidegree.0.checked_sub(d.bidegree.0)?, self.bidegree.1.checked_sub(d.bidegree.1)?);
        let mut r = self.clone();
        let mut q = BiForm::zero(bd);
        while let Some((m, c)) = r.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let mut e = [0u32; 4];
            for i in 0..4 {
                e[i] = m[i].checked_sub(lm[i])?;
            }
            let mono = BiForm::monomial(e, c / lc);
            r = &r - &(&mono * d);
            q = &q + &mono;
        }
        Some(q)
    }

    /// Scalar `c` with `self = c * other`, if proportional.
    pub fn proportional_to(&self, other: &BiForm) -> Option<Rat> {
        let (m, c) = other.terms.iter().next()?;
        let a = self.terms.get(m)?;
        let ratio = a / c;
        (*self == other.scale(&ratio)).then_some(ratio)
    }
}

fn pow(x: &Rat, e: u32) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * x)
}

impl Add for &BiForm {
    type Output = BiForm;
    fn add(self, o: &BiForm) -> BiForm {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        assert_eq!(self.bidegree, o.bidegree, "adding biforms of different bidegrees");
        let mut f = self.clone();
        for (e, c) in &o.terms {
            f.add_term(*e, c.clone());
        }
        f
    }
}

impl Neg for &BiForm {
    type Output = BiForm;
    fn neg(self) -> BiForm {
        self.scale(&-Rat::one())
    }
}

impl Sub for &BiForm {
    type Output = BiForm;
    fn sub(self, o: &BiForm) -> BiForm {
        self + &(-o)
    }
}

impl Mul for &BiForm {
    type Output = BiForm;
    fn mul(self, o: &BiForm) -> BiForm {
        let mut f = BiForm::zero((self.bidegree.0 + o.bidegree.0, self.bidegree.1 + o.bidegree.1));
        for (a, c1) in &self.terms {
            for (b, c2) in &o.terms {
                f.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], c1 * c2);
            }
        }
        f
    }
}

impl fmt::Display for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (e, c) in self.terms.iter().rev() {
            let factors: Vec<(String, u32)> =
                ["s", "t", "u", "v"].iter().map(|v| v.to_string()).zip(e.iter().copied()).collect();
            write_term(&mut s, c, &factors);
        }
        f.write_str(&s)
    }
}
