//! Smooth conics: classification, rational parametrization, restriction of
//! curves, contact analysis and normalization to `z^2 - 4xy`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{binary_form_sqrt, rat, rat_sqrt, BinaryForm, Field, NFElem, NumberField, Rat};
use crate::error::{Error, Result};
use crate::linalg;
use crate::mpoly::{parse_form, plane_vars, Form, ProjPoint};

pub const DEFAULT_HEIGHT: u64 = 50;

/// The normalized branch conic `z^2 - 4xy`.
pub fn delta2() -> Form {
    parse_form("z^2-4*x*y", &plane_vars()).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConicKind {
    Smooth,
    RankTwo,
    RankOne,
}

/// Symmetric Gram matrix `A` with `q(X) = X^T A X`.
pub fn quadric_matrix(q: &Form) -> Vec<Vec<Rat>> {
    let n = q.nvars();
    let half = Rat::new(1.into(), 2.into());
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = vec![0; n];
                    e[i] += 1;
                    e[j] += 1;
                    let c = q.coeff(&e);
                    if i == j {
                        c
                    } else {
                        c * &half
                    }
                })
                .collect()
        })
        .collect()
}

pub fn classify_conic(q: &Form) -> Result<ConicKind> {
    if q.degree() != 2 || q.nvars() != 3 || q.is_zero() {
        return Err(Error::InvalidInput("expected a nonzero ternary quadratic form".into()));
    }
    Ok(match linalg::rank(&quadric_matrix(q), 3) {
        3 => ConicKind::Smooth,
        2 => ConicKind::RankTwo,
        _ => ConicKind::RankOne,
    })
}

/// `(p0, p1, p2)`: binary quadratics with `q(p0,p1,p2) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicParam {
    pub p: [BinaryForm; 3],
}

impl ConicParam {
    /// `(s^2, t^2, 2st)` for `z^2 - 4xy`.
    pub fn standard() -> Self {
        ConicParam {
            p: [BinaryForm::from_ints(&[0, 0, 1]), BinaryForm::from_ints(&[1, 0, 0]), BinaryForm::from_ints(&[0, 2, 0])],
        }
    }

    pub fn point_at<F: Field>(&self, s: &F, t: &F) -> Vec<F> {
        self.p.iter().map(|f| f.eval(s, t)).collect()
    }

    /// Columns indexed by `s^2, st, t^2`.
    fn coefficient_matrix(&self) -> Vec<Vec<Rat>> {
        self.p.iter().map(|f| vec![f.coeffs()[2].clone(), f.coeffs()[1].clone(), f.coeffs()[0].clone()]).collect()
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

fn gradient_at(q: &Form, p: &[Rat]) -> Vec<Rat> {
    q.partials().iter().map(|d| d.eval(p).unwrap()).collect()
}

/// Stereographic projection from a rational base point; `p(1:0)` is the base.
pub fn parametrize_conic(q: &Form, base: &ProjPoint) -> Result<ConicParam> {
    if classify_conic(q)? != ConicKind::Smooth {
        return Err(Error::ConicNotSmooth);
    }
    let pt = base.rational_coords().ok_or(Error::NonRationalPoint(base.field().degree()))?;
    if !q.eval(&pt)?.is_zero() {
        return Err(Error::PointNotOnConic);
    }
    let grad = gradient_at(q, &pt);
    // R1: on the tangent line at the base, not the base itself
    let r1 = linalg::kernel(std::slice::from_ref(&grad), 3)
        .into_iter()
        .find(|k| linalg::rank(&[pt.clone(), k.clone()], 3) == 2)
        .expect("tangent line has a second point");
    let r2 = (0..3)
        .map(|i| (0..3).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect::<Vec<Rat>>())
        .find(|e| linalg::rank(&[pt.clone(), r1.clone(), e.clone()], 3) == 3)
        .unwrap();
    // W = s*R1 + t*R2; X = -q(W)*P + (grad . W)*W
    let w: Vec<BinaryForm> = (0..3).map(|i| BinaryForm::linear(r1[i].clone(), r2[i].clone())).collect();
    let qw = q.restrict_binary(&w)?;
    let gw = BinaryForm::linear(dot(&grad, &r1), dot(&grad, &r2));
    let p: Vec<BinaryForm> = (0..3).map(|i| qw.scale(&-pt[i].clone()).add(&gw.mul(&w[i]))).collect();
    let param = ConicParam { p: [p[0].clone(), p[1].clone(), p[2].clone()] };
    debug_assert!(q.restrict_binary(&param.p)?.is_zero());
    if linalg::rank(&param.coefficient_matrix(), 3) != 3 {
        return Err(Error::ConicNotSmooth);
    }
    Ok(param)
}

pub fn restrict_to_conic(f: &Form, param: &ConicParam) -> Result<BinaryForm> {
    f.restrict_binary(&param.p)
}

/// Line restriction: a parametrization `s*K1 + t*K2` of the line `l = 0`.
pub fn parametrize_line(l: &Form) -> [BinaryForm; 3] {
    assert_eq!(l.degree(), 1);
    let row = l.to_coeff_vec();
    let k = linalg::kernel(&[row], 3);
    let (k1, k2) = (&k[0], &k[1]);
    [0, 1, 2].map(|i| BinaryForm::linear(k1[i].clone(), k2[i].clone()))
}

pub fn restrict_to_line(f: &Form, l: &Form) -> Result<BinaryForm> {
    f.restrict_binary(&parametrize_line(l))
}

/// First rational point found by increasing height (ties: lexicographic).
pub fn find_rational_point(q: &Form, height: u64) -> Result<ProjPoint> {
    let a2 = q.coeff(&[0, 0, 2]);
    if a2.is_zero() {
        return Ok(ProjPoint::from_ints(&[0, 0, 1]));
    }
    let h = height as i64;
    for m in 1..=h {
        for a in -m..=m {
            for b in -m..=m {
                if a.abs().max(b.abs()) != m || (a < 0 || (a == 0 && b < 0)) {
                    continue;
                }
                // q(a, b, z) = a2 z^2 + a1 z + a0
                let (ra, rb) = (rat(a), rat(b));
                let a1 = q.coeff(&[1, 0, 1]) * &ra + q.coeff(&[0, 1, 1]) * &rb;
                let a0 = q.coeff(&[2, 0, 0]) * &ra * &ra + q.coeff(&[1, 1, 0]) * &ra * &rb + q.coeff(&[0, 2, 0]) * &rb * &rb;
                let disc = &a1 * &a1 - rat(4) * &a2 * &a0;
                if let Some(r) = rat_sqrt(&disc) {
                    let z = (-a1 + r) / (rat(2) * &a2);
                    let v = linalg::content_normalize(&[ra, rb, z]);
                    return ProjPoint::rational(&v);
                }
            }
        }
    }
    Err(Error::NoRationalPoint(height))
}

/// `M` with `q o M^{-1} = lambda * (z^2 - 4xy)`.
pub fn normalize_conic(q: &Form, base: &ProjPoint) -> Result<Vec<Vec<Rat>>> {
    let param = parametrize_conic(q, base)?;
    let cq = param.coefficient_matrix();
    let cd = ConicParam::standard().coefficient_matrix();
    let m = linalg::mat_mul(&cd, &linalg::inverse(&cq).ok_or(Error::ConicNotSmooth)?);
    let minv = linalg::inverse(&m).ok_or(Error::ConicNotSmooth)?;
    let moved = q.linear_change(&minv);
    if moved.proportional_to(&delta2()).is_none() {
        return Err(Error::ConicNotSmooth);
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ContactKind {
    NotContact,
    Contact,
    EvenContact,
    SimpleContact,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContactProfile {
    pub kind: ContactKind,
    /// Roots are the contact parameters (the square root of the restriction
    /// for even contact, its radical otherwise).
    pub contact_form: BinaryForm,
    pub tangent_count: usize,
    /// `restriction = scale * contact_form^2` in the even case.
    pub scale: Rat,
}

fn radical(f: &BinaryForm) -> Result<BinaryForm> {
    Ok(f.factor()?.into_iter().fold(BinaryForm::from_ints(&[1]), |acc, (g, _)| acc.mul(&g)))
}

/// Is `gamma` smooth at every root of the irreducible binary form `g` on the conic?
fn smooth_along(gamma: &Form, param: &ConicParam, g: &BinaryForm) -> Result<bool> {
    let partials = gamma.partials();
    let coords: Vec<NFElem> = if g.dehomogenize().degree() == Some(0) {
        // g = t: the parameter (1:0)
        let q = NumberField::rationals();
        param.point_at(&q.one(), &q.zero())
    } else {
        let (k, a) = NumberField::root_field(&g.dehomogenize())?;
        param.point_at(&a, &k.one())
    };
    for d in &partials {
        if !d.eval(&coords)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn contact_profile(gamma: &Form, q: &Form, param: &ConicParam) -> Result<ContactProfile> {
    if classify_conic(q)? != ConicKind::Smooth {
        return Err(Error::ConicNotSmooth);
    }
    let r = restrict_to_conic(gamma, param)?;
    if r.is_zero() {
        return Err(Error::CommonComponent);
    }
    let lead = r.lead().unwrap().clone();
    if let Some(t) = binary_form_sqrt(&r.scale(&lead.recip())) {
        let squarefree = t.is_squarefree();
        let mut smooth = squarefree;
        if squarefree {
            for (g, _) in t.factor()? {
                if !smooth_along(gamma, param, &g)? {
                    smooth = false;
                    break;
                }
            }
        }
        let kind = if smooth && t.degree() == gamma.degree() as usize {
            ContactKind::SimpleContact
        } else {
            ContactKind::EvenContact
        };
        let tangent_count = radical(&t)?.degree();
        return Ok(ContactProfile { kind, contact_form: t, tangent_count, scale: lead });
    }
    let facs = r.factor()?;
    let kind = if facs.iter().all(|(_, m)| *m >= 2) { ContactKind::Contact } else { ContactKind::NotContact };
    let rad = radical(&r)?;
    Ok(ContactProfile { kind, tangent_count: rad.degree(), contact_form: rad, scale: lead })
}
