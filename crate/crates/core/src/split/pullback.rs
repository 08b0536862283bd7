//! Factoring an involution-invariant biform `F` of bidegree `(d,d)` as
//! `c * A * sigma(A)` with `A` of bidegree `(m,n)`.
//!
//! The search specializes one ruling at a few points `p_j`, factors the
//! resulting binary forms, and for each choice of degree-`m` factor groups
//! solves the linear system `A(., p_j) = lambda_j G_j`, `A(p_j, .) = mu_j H_j`
//! for the coefficients of `A`. Every candidate is verified by exact
//! expansion, so a returned factor is always correct.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{rat, rat_sqrt, upoly_factor, Field, NFElem, NumberField, Rat, UPoly};
use crate::error::{Error, Result};
use crate::linalg;
use crate::mpoly::BiForm;

pub const DEFAULT_GROUPING_CAP: usize = 2000;

/// Squarefree `e` with `|e| <= 10`, by increasing `|e|`.
pub fn default_extensions() -> Vec<i64> {
    vec![-1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10]
}

#[derive(Debug, Clone, PartialEq)]
pub struct PullbackOptions {
    pub grouping_cap: usize,
    pub extensions: Vec<i64>,
}

impl Default for PullbackOptions {
    fn default() -> Self {
        PullbackOptions { grouping_cap: DEFAULT_GROUPING_CAP, extensions: default_extensions() }
    }
}

/// `A = rational_part + sqrt(e) * irrational_part` with
/// `F = (scale.0 + scale.1 * sqrt(e)) * A * sigma(A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PullbackFactor {
    pub extension: Option<i64>,
    pub rational_part: BiForm,
    pub irrational_part: BiForm,
    pub scale: (Rat, Rat),
}

impl PullbackFactor {
    pub fn bidegree(&self) -> (u32, u32) {
        self.rational_part.bidegree()
    }

    /// Independent exact re-check of `F = c * A * sigma(A)`.
    pub fn verify(&self, f: &BiForm) -> bool {
        let e = rat(self.extension.unwrap_or(0));
        let (a0, a1) = (&self.rational_part, &self.irrational_part);
        let (s0, s1) = (a0.involution(), a1.involution());
        let p0 = &(a0 * &s0) + &(a1 * &s1).scale(&e);
        let p1 = &(a0 * &s1) + &(a1 * &s0);
        let (c0, c1) = &self.scale;
        // (c0 + c1 w)(p0 + p1 w) with w^2 = e
        let rat_part = &p0.scale(c0) + &p1.scale(&(c1 * &e));
        let irr_part = &p0.scale(c1) + &p1.scale(c0);
        rat_part == *f && irr_part.is_zero()
    }
}

/// One specialization point `(a : 1)` with the irreducible factors over the
/// field of the specialized binary form, as coefficient vectors
/// (`c[i]` multiplies `s^i t^(deg-i)`).
struct Slice {
    a: Rat,
    factors: Vec<Vec<NFElem>>,
    groupings: Vec<Vec<usize>>,
}

fn binary_mul(a: &[NFElem], b: &[NFElem]) -> Vec<NFElem> {
    let mut out = vec![a[0].zero_like(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn product(factors: &[Vec<NFElem>], pick: impl Iterator<Item = usize>, one: &NFElem) -> Vec<NFElem> {
    pick.fold(vec![one.clone()], |acc, i| binary_mul(&acc, &factors[i]))
}

fn lift(p: &UPoly<Rat>, k: &Arc<NumberField>) -> UPoly<NFElem> {
    UPoly::new(p.coeffs().iter().map(|c| k.from_rat(c)).collect())
}

fn rational_coeffs(p: &UPoly<NFElem>) -> Option<UPoly<Rat>> {
    p.coeffs().iter().map(NFElem::to_rat).collect::<Option<Vec<_>>>().map(UPoly::new)
}

/// Monic irreducible factors over `k` (rationals or a quadratic field) of a
/// squarefree rational polynomial.
fn factor_over(f: &UPoly<Rat>, k: &Arc<NumberField>) -> Result<Vec<UPoly<NFElem>>> {
    let mut out = Vec::new();
    for (g, _) in upoly_factor(f)? {
        if k.is_rationals() || g.degree() == Some(1) {
            out.push(lift(&g, k));
            continue;
        }
        out.extend(split_quadratic(&g, k)?);
    }
    Ok(out)
}

/// Splits an irreducible rational `g` over `k = Q(a)`, `[k:Q] = 2`, via the
/// norm of a shifted copy.
fn split_quadratic(g: &UPoly<Rat>, k: &Arc<NumberField>) -> Result<Vec<UPoly<NFElem>>> {
    let a = k.generator();
    let gk = lift(g, k);
    for c in 1..50i64 {
        let shift = a.clone() * k.from_rat(&rat(c));
        let plus = gk.compose(&UPoly::new(vec![shift.clone(), k.one()]));
        let minus = gk.compose(&UPoly::new(vec![-shift.clone(), k.one()]));
        let norm = rational_coeffs(&(&plus * &minus)).expect("norm is rational");
        if !norm.is_squarefree() {
            continue;
        }
        let parts = upoly_factor(&norm)?;
        if parts.len() == 1 {
            return Ok(vec![gk]);
        }
        let back = UPoly::new(vec![-shift, k.one()]);
        return Ok(parts.iter().map(|(n, _)| gk.gcd(&lift(n, k).compose(&back))).collect());
    }
    Err(Error::InvalidInput("no squarefree norm shift".into()))
}

fn groupings(factors: &[Vec<NFElem>], m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = factors.len();
    for mask in 0u32..(1 << n) {
        let deg: usize = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| factors[i].len() - 1).sum();
        if deg == m {
            out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

fn candidate_points() -> impl Iterator<Item = Rat> {
    (0..).map(|i: i64| if i % 2 == 0 { rat(i / 2) } else { rat(-(i + 1) / 2) })
}

fn slices(f: &BiForm, m: usize, count: usize, k: &Arc<NumberField>) -> Result<Vec<Slice>> {
    let mut found = Vec::new();
    for a in candidate_points().take(6 * count + 10) {
        let b = f.specialize_uv(&a, &Rat::one());
        if b.is_zero() || !b.is_squarefree() {
            continue;
        }
        let mut factors: Vec<Vec<NFElem>> =
            factor_over(&b.dehomogenize(), k)?.into_iter().map(UPoly::into_coeffs).collect();
        if b.infinity_multiplicity() == 1 {
            factors.push(vec![k.one(), k.zero()]);
        }
        let groupings = groupings(&factors, m);
        found.push(Slice { a, factors, groupings });
        if found.len() == 3 * count {
            break;
        }
    }
    if found.len() < count {
        return Err(Error::InvalidInput("the pullback is not reduced: too few squarefree specializations".into()));
    }
    // fewest groupings first, stable in the candidate order
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by_key(|&i| found[i].groupings.len());
    order.truncate(count);
    order.sort();
    let mut keep = Vec::new();
    for (i, s) in found.into_iter().enumerate() {
        if order.contains(&i) {
            keep.push(s);
        }
    }
    Ok(keep)
}

fn powers(x: &Rat, n: usize) -> Vec<Rat> {
    let mut v = vec![Rat::one()];
    for _ in 0..n {
        let next = v.last().unwrap() * x;
        v.push(next);
    }
    v
}

/// Search over one field: the rationals (`ext = None`) or `Q(sqrt e)`.
pub fn factor_pullback_over(
    f: &BiForm,
    m: u32,
    n: u32,
    ext: Option<i64>,
    cap: usize,
) -> Result<Option<PullbackFactor>> {
    check_shape(f, m, n)?;
    let k = match ext {
        None => NumberField::rationals(),
        Some(e) => NumberField::new(&UPoly::new(vec![rat(-e), Rat::zero(), Rat::one()]))?,
    };
    let (mu, nu) = (m as usize, n as usize);
    let count = nu + 2;
    let sl = slices(f, mu, count, &k)?;
    if sl.iter().any(|s| s.groupings.is_empty()) {
        return Ok(None);
    }
    // when m = n a grouping and its complement give A and sigma(A)
    let first: Vec<usize> = if m == n {
        let g = &sl[0].groupings;
        (0..g.len())
            .filter(|&i| {
                let comp: Vec<usize> = (0..sl[0].factors.len()).filter(|x| !g[i].contains(x)).collect();
                g.iter().position(|h| *h == comp).is_none_or(|j| j >= i)
            })
            .collect()
    } else {
        (0..sl[0].groupings.len()).collect()
    };
    let mut total: usize = first.len();
    for s in &sl[1..] {
        total = total.saturating_mul(s.groupings.len());
    }
    if total > cap {
        return Err(Error::SearchBudgetExceeded(cap));
    }
    let na = (mu + 1) * (nu + 1);
    let ncols = na + 2 * count;
    let zero = k.zero();
    let mut choice = vec![0usize; count];
    loop {
        let picks: Vec<usize> =
            (0..count).map(|j| if j == 0 { first[choice[0]] } else { choice[j] }).collect();
        let mut rows: Vec<Vec<NFElem>> = Vec::new();
        for (j, s) in sl.iter().enumerate() {
            let chosen = &s.groupings[picks[j]];
            let g = product(&s.factors, chosen.iter().copied(), &k.one());
            let h = product(&s.factors, (0..s.factors.len()).filter(|i| !chosen.contains(i)), &k.one());
            let pw = powers(&s.a, mu.max(nu));
            // A(s,t; a,1) = lambda_j g
            for i in 0..=mu {
                let mut row = vec![zero.clone(); ncols];
                for kk in 0..=nu {
                    row[i * (nu + 1) + kk] = k.from_rat(&pw[kk]);
                }
                row[na + j] = -g[i].clone();
                rows.push(row);
            }
            // A(a,1; u,v) = mu_j h
            for kk in 0..=nu {
                let mut row = vec![zero.clone(); ncols];
                for i in 0..=mu {
                    row[i * (nu + 1) + kk] = k.from_rat(&pw[i]);
                }
                row[na + count + j] = -h[kk].clone();
                rows.push(row);
            }
        }
        for v in linalg::kernel_field(&rows, ncols, &zero) {
            if let Some(found) = check_candidate(f, &v[..na], (m, n), ext) {
                return Ok(Some(found));
            }
        }
        // advance the odometer
        let mut j = 0;
        loop {
            if j == count {
                return Ok(None);
            }
            choice[j] += 1;
            let limit = if j == 0 { first.len() } else { sl[j].groupings.len() };
            if choice[j] < limit {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

fn check_shape(f: &BiForm, m: u32, n: u32) -> Result<()> {
    let (d1, d2) = f.bidegree();
    if d1 != d2 || m + n != d1 || m == 0 || m > n {
        return Err(Error::DegreeMismatch(format!("type ({m},{n}) for a biform of bidegree ({d1},{d2})")));
    }
    if f.involution() != *f {
        return Err(Error::InvalidInput("biform is not invariant under the involution".into()));
    }
    Ok(())
}

fn check_candidate(f: &BiForm, coeffs: &[NFElem], bidegree: (u32, u32), ext: Option<i64>) -> Option<PullbackFactor> {
    let lead = coeffs.iter().find(|c| !c.is_zero())?.inverse()?;
    let coeffs: Vec<NFElem> = coeffs.iter().map(|c| c.clone() * lead.clone()).collect();
    let part = |i: usize| -> Vec<Rat> {
        coeffs.iter().map(|c| c.coords().get(i).cloned().unwrap_or_else(Rat::zero)).collect()
    };
    let a0 = BiForm::from_coeff_vec(bidegree, &part(0));
    let a1 = BiForm::from_coeff_vec(bidegree, &part(1));
    let e = rat(ext.unwrap_or(0));
    let (s0, s1) = (a0.involution(), a1.involution());
    let p0 = &(&a0 * &s0) + &(&a1 * &s1).scale(&e);
    let p1 = &(&a0 * &s1) + &(&a1 * &s0);
    // p0 + w p1 = F / c: both parts proportional to F
    let r0 = if p0.is_zero() { Rat::zero() } else { p0.proportional_to(f)? };
    let r1 = if p1.is_zero() { Rat::zero() } else { p1.proportional_to(f)? };
    let norm = &r0 * &r0 - &e * &r1 * &r1;
    if norm.is_zero() {
        return None;
    }
    // c = 1 / (r0 + w r1) = (r0 - w r1) / norm
    let mut scale = (&r0 / &norm, -(&r1 / &norm));
    let (mut a0, mut a1) = (a0, a1);
    if scale.1.is_zero() {
        if let Some(q) = rat_sqrt(&scale.0) {
            a0 = a0.scale(&q);
            a1 = a1.scale(&q);
            scale.0 = Rat::one();
        }
    }
    let out = PullbackFactor {
        extension: if a1.is_zero() { None } else { ext },
        rational_part: a0,
        irrational_part: if a1.is_zero() { BiForm::zero(bidegree) } else { a1 },
        scale,
    };
    out.verify(f).then_some(out)
}

/// Rational search first, then each configured quadratic extension.
pub fn factor_pullback(f: &BiForm, m: u32, n: u32, opts: &PullbackOptions) -> Result<Option<PullbackFactor>> {
    if let Some(a) = factor_pullback_over(f, m, n, None, opts.grouping_cap)? {
        return Ok(Some(a));
    }
    for &e in &opts.extensions {
        if let Some(a) = factor_pullback_over(f, m, n, Some(e), opts.grouping_cap)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{pullback_curve, ramification_form};
    use crate::mpoly::{parse_form, plane_vars};

    #[test]
    fn product_of_lines() {
        let f = pullback_curve(&parse_form("x*y", &plane_vars()).unwrap()).unwrap();
        let a = factor_pullback(&f, 1, 1, &PullbackOptions::default()).unwrap().unwrap();
        assert!(a.verify(&f));
        assert_eq!(a.extension, None);
        let sv = &BiForm::s() * &BiForm::v();
        let ut = &BiForm::u() * &BiForm::t();
        assert!(a.rational_part.proportional_to(&sv).is_some() || a.rational_part.proportional_to(&ut).is_some());
    }

    #[test]
    fn sextic_three_three() {
        let g = parse_form("(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2", &plane_vars()).unwrap();
        let f = pullback_curve(&g).unwrap();
        let a = factor_pullback_over(&f, 3, 3, None, DEFAULT_GROUPING_CAP).unwrap().unwrap();
        assert!(a.verify(&f));
        let c3 = pullback_curve(&parse_form("x^3+y^3+z^3", &plane_vars()).unwrap()).unwrap();
        let c2 = pullback_curve(&parse_form("x*y+y*z+z*x", &plane_vars()).unwrap()).unwrap();
        let r = ramification_form();
        let plus = &c3 + &(&r * &c2);
        let minus = &c3 - &(&r * &c2);
        assert!(a.rational_part.proportional_to(&plus).is_some() || a.rational_part.proportional_to(&minus).is_some());
    }

    #[test]
    fn conjugate_factor_over_quadratic_field() {
        let su_tv = &(&BiForm::s() * &BiForm::u()) + &(&BiForm::t() * &BiForm::v());
        let r = ramification_form();
        let f = &(&su_tv * &su_tv) - &(&r * &r).scale(&rat(2));
        assert_eq!(factor_pullback_over(&f, 1, 1, None, DEFAULT_GROUPING_CAP).unwrap(), None);
        let a = factor_pullback(&f, 1, 1, &PullbackOptions::default()).unwrap().unwrap();
        assert_eq!(a.extension, Some(2));
        assert!(a.verify(&f));
    }

    #[test]
    fn irreducible_pullback_has_no_factor() {
        let g = parse_form("x^2+y^2+z^2+x*y", &plane_vars()).unwrap();
        let f = pullback_curve(&g).unwrap();
        let opts = PullbackOptions { extensions: vec![], ..Default::default() };
        assert_eq!(factor_pullback(&f, 1, 1, &opts).unwrap(), None);
    }

    #[test]
    fn shape_errors() {
        let f = pullback_curve(&parse_form("x*y", &plane_vars()).unwrap()).unwrap();
        assert!(matches!(factor_pullback_over(&f, 0, 2, None, 10), Err(Error::DegreeMismatch(_))));
        let skew = &BiForm::s() * &BiForm::v();
        assert!(matches!(factor_pullback_over(&skew, 1, 0, None, 10), Err(Error::DegreeMismatch(_))));
    }
}
