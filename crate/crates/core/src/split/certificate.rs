//! Certificates `scale * gamma * l^k = c_n^2 - conic_scale * delta * c_{n-1}^2`
//! of splitting type `(m,n)`, `k = n - m`.

use num_traits::{One, Zero};

use crate::arith::{rat, Rat};
use crate::conic::{delta2, restrict_to_line};
use crate::cover::{cover_map, pullback_curve, ramification_form, tangent_line_at};
use crate::error::{Error, Result};
use crate::linalg;
use crate::mpoly::{monomial_basis, plane_vars, BiForm, Form};

/// Tangent lines are tried at conic parameters `(1:j)` for `j` up to this.
pub const TANGENT_SEARCH: i64 = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct SplitCertificate {
    pub m: u32,
    pub n: u32,
    /// Tangent line to the conic; absent when `m = n`.
    pub line: Option<Form>,
    pub c_n: Form,
    pub c_n1: Form,
    pub scale: Rat,
    pub conic_scale: Rat,
}

impl SplitCertificate {
    pub fn k(&self) -> u32 {
        self.n - self.m
    }
}

/// Checks the identity exactly, plus the side conditions: the line is
/// tangent to `delta`, transversal to `gamma`, and meets neither `c_n` nor
/// `c_{n-1}` identically.
pub fn verify_certificate(gamma: &Form, delta: &Form, cert: &SplitCertificate) -> Result<bool> {
    let d = gamma.degree();
    let (m, n) = (cert.m, cert.n);
    let mismatch = |what: &str| Err(Error::DegreeMismatch(what.to_string()));
    if m + n != d || m > n || m == 0 {
        return mismatch(&format!("type ({m},{n}) for a curve of degree {d}"));
    }
    if delta.degree() != 2 || cert.c_n.degree() != n || cert.c_n1.degree() != n - 1 {
        return mismatch("certificate forms have the wrong degrees");
    }
    let k = n - m;
    if (k > 0) != cert.line.is_some() {
        return mismatch("a tangent line is required exactly when m < n");
    }
    if cert.c_n1.is_zero() || cert.scale.is_zero() || cert.conic_scale.is_zero() {
        return Ok(false);
    }
    let mut lhs = gamma.scale(&cert.scale);
    if let Some(l) = &cert.line {
        if l.degree() != 1 {
            return mismatch("the line must be linear");
        }
        let on_conic = restrict_to_line(delta, l)?;
        let c = on_conic.coeffs();
        if on_conic.is_zero() || &c[1] * &c[1] != rat(4) * &c[0] * &c[2] {
            return Err(Error::NotTangentLine);
        }
        if !restrict_to_line(gamma, l)?.is_squarefree() {
            return Ok(false);
        }
        if restrict_to_line(&cert.c_n, l)?.is_zero() || restrict_to_line(&cert.c_n1, l)?.is_zero() {
            return Ok(false);
        }
        lhs = &lhs * &l.pow(k);
    }
    let rhs = &cert.c_n.pow(2) - &(&delta.scale(&cert.conic_scale) * &cert.c_n1.pow(2));
    Ok(lhs == rhs)
}

/// The plane form of degree `deg` whose pullback is `b`, if any.
pub fn descend(b: &BiForm, deg: u32) -> Option<Form> {
    let vars = plane_vars();
    if b.bidegree() != (deg, deg) {
        return None;
    }
    let cover = cover_map();
    let basis = monomial_basis(3, deg);
    let images: Vec<Vec<Rat>> = basis
        .iter()
        .map(|e| {
            let mono = Form::from_terms(&vars, deg, [(e.clone(), Rat::one())]).unwrap();
            mono.compose_bi(&cover).unwrap().to_coeff_vec()
        })
        .collect();
    let target = b.to_coeff_vec();
    let rows: Vec<Vec<Rat>> = (0..target.len()).map(|i| images.iter().map(|col| col[i].clone()).collect()).collect();
    let x = linalg::solve(&rows, &target)?;
    let f = Form::from_coeff_vec(&vars, deg, &x);
    (pullback_curve(&f).ok()? == *b).then_some(f)
}

/// Builds a certificate for `gamma` (with respect to `z^2 - 4xy`) from a
/// rational factor `F = c * A * sigma(A)` of its pullback.
pub fn extract_certificate(gamma: &Form, a: &BiForm, c: &Rat) -> Result<Option<SplitCertificate>> {
    let (m, n) = a.bidegree();
    let k = n - m;
    let r = ramification_form();
    let half = Rat::new(1.into(), 2.into());
    let js: Vec<i64> = if k == 0 { vec![0] } else { (0..=TANGENT_SEARCH).collect() };
    for j in js {
        let (l, lplus) = tangent_line_at(j);
        if k > 0 && !restrict_to_line(gamma, &l)?.is_squarefree() {
            continue;
        }
        let dplus = a * &lplus.pow(k);
        let dminus = dplus.involution();
        let Some(c_n) = descend(&(&dplus + &dminus), n) else { continue };
        let Some(quot) = (&dplus - &dminus).div_exact(&r) else { continue };
        let Some(c_n1) = descend(&quot, n - 1) else { continue };
        let cert = SplitCertificate {
            m,
            n,
            line: (k > 0).then_some(l),
            c_n: c_n.scale(&half),
            c_n1: c_n1.scale(&half),
            scale: c.recip(),
            conic_scale: Rat::one(),
        };
        if verify_certificate(gamma, &delta2(), &cert)? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Moves a certificate for `gamma o M^{-1}` and `z^2 - 4xy` to one for
/// `gamma` and the conic `q` with `(z^2 - 4xy) o M = lambda * q`.
pub fn pull_back_certificate(cert: &SplitCertificate, m: &[Vec<Rat>], q: &Form) -> Result<SplitCertificate> {
    let lambda = delta2()
        .linear_change(m)
        .proportional_to(q)
        .ok_or_else(|| Error::InvalidInput("transformation does not carry the conic to the standard one".into()))?;
    Ok(SplitCertificate {
        m: cert.m,
        n: cert.n,
        line: cert.line.as_ref().map(|l| l.linear_change(m)),
        c_n: cert.c_n.linear_change(m),
        c_n1: cert.c_n1.linear_change(m),
        scale: cert.scale.clone(),
        conic_scale: &cert.conic_scale * &lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse_form;

    fn pf(s: &str) -> Form {
        parse_form(s, &plane_vars()).unwrap()
    }

    fn cert33(c3: &str, c2: &str) -> SplitCertificate {
        SplitCertificate { m: 3, n: 3, line: None, c_n: pf(c3), c_n1: pf(c2), scale: Rat::one(), conic_scale: Rat::one() }
    }

    #[test]
    fn sextic_certificates() {
        let g = pf("(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2");
        assert!(verify_certificate(&g, &delta2(), &cert33("x^3+y^3+z^3", "x*y+y*z+z*x")).unwrap());
        assert!(!verify_certificate(&g, &delta2(), &cert33("x^3+y^3+z^3", "x*y+y*z")).unwrap());
        let c3 = "y^2*z-3*x*y*z+z^3-x^2*z";
        let c2 = "z^2-x*y-y^2+x^2";
        let g7 = pf(&format!("({c3})^2-(z^2-4*x*y)*({c2})^2"));
        assert!(verify_certificate(&g7, &delta2(), &cert33(c3, c2)).unwrap());
    }

    #[test]
    fn degenerate_certificate_rejected() {
        let g = pf("(x^3+y^3+z^3)^2");
        let mut c = cert33("x^3+y^3+z^3", "x*y");
        c.c_n1 = Form::zero(&plane_vars(), 2);
        assert!(!verify_certificate(&g, &delta2(), &c).unwrap());
    }

    #[test]
    fn line_checks() {
        let g = pf("(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2");
        let mut c = cert33("x^3+y^3+z^3", "x*y+y*z+z*x");
        c.m = 2;
        c.n = 4;
        assert!(matches!(verify_certificate(&g, &delta2(), &c), Err(Error::DegreeMismatch(_))));
        let c = SplitCertificate {
            m: 2,
            n: 4,
            line: Some(pf("x+2*y+3*z")),
            c_n: pf("x^4"),
            c_n1: pf("y^3"),
            scale: Rat::one(),
            conic_scale: Rat::one(),
        };
        assert_eq!(verify_certificate(&g, &delta2(), &c).unwrap_err(), Error::NotTangentLine);
    }

    #[test]
    fn descent_round_trip() {
        let f = pf("x^2 - 3*y*z + 5*z^2");
        assert_eq!(descend(&pullback_curve(&f).unwrap(), 2), Some(f));
        assert_eq!(descend(&(&BiForm::s() * &BiForm::v()), 1), None);
    }

    #[test]
    fn extraction_from_factor() {
        let g = pf("(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2");
        let c3 = pullback_curve(&pf("x^3+y^3+z^3")).unwrap();
        let c2 = pullback_curve(&pf("x*y+y*z+z*x")).unwrap();
        let a = &c3 + &(&ramification_form() * &c2);
        let cert = extract_certificate(&g, &a, &Rat::one()).unwrap().unwrap();
        assert_eq!(cert.c_n, pf("x^3+y^3+z^3"));
        assert_eq!(cert.c_n1.proportional_to(&pf("x*y+y*z+z*x")).map(|r| &r * &r), Some(Rat::one()));
    }
}
