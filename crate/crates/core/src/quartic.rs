//! Quartic surfaces with a node at `P0 = (0:0:0:1)`, written
//! `g2 w^2 + 2 g3 w + g4`, and their projection from the node: the branch
//! sextic `g3^2 - g2 g4` with the contact conic `g2`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{BinaryForm, Rat};
use crate::conic::{
    contact_profile, find_rational_point, parametrize_conic, quadric_matrix, restrict_to_conic, ContactKind,
    ConicParam,
};
use crate::curve::{singular_locus_complete_with, verify_node, NodeReport};
use crate::error::{Error, Result};
use crate::linalg;
use crate::linsys::{cond_point, subsets, system_solve, LinSysReport, Space};
use crate::mpoly::{monomial_basis, plane_vars, space_vars, Form, ProjPoint};

#[derive(Debug, Clone, PartialEq)]
pub struct QuarticSurface {
    pub g2: Form,
    pub g3: Form,
    pub g4: Form,
}

/// `f(x,y,z) * w^k` as a form in `x, y, z, w`.
fn lift(f: &Form, k: u32) -> Form {
    let terms = f.terms().map(|(e, c)| (vec![e[0], e[1], e[2], k], c.clone())).collect::<Vec<_>>();
    Form::from_terms(&space_vars(), f.degree() + k, terms).unwrap()
}

impl QuarticSurface {
    pub fn new(g2: Form, g3: Form, g4: Form) -> Result<Self> {
        for (f, d) in [(&g2, 2), (&g3, 3), (&g4, 4)] {
            if f.nvars() != 3 {
                return Err(Error::DimensionMismatch { expected: 3, got: f.nvars() });
            }
            if f.degree() != d && !f.is_zero() {
                return Err(Error::DegreeMismatch(format!("expected degree {d}, got {}", f.degree())));
            }
        }
        let fix = |f: Form, d| if f.is_zero() { Form::zero(&plane_vars(), d) } else { f };
        Ok(QuarticSurface { g2: fix(g2, 2), g3: fix(g3, 3), g4: fix(g4, 4) })
    }

    /// `g2 w^2 + 2 g3 w + g4`.
    pub fn to_form(&self) -> Form {
        let two = Rat::from_integer(2.into());
        &(&lift(&self.g2, 2) + &lift(&self.g3, 1).scale(&two)) + &lift(&self.g4, 0)
    }

    /// Splits a quartic in `x, y, z, w` singular at `P0` by powers of `w`.
    pub fn from_form(f: &Form) -> Result<Self> {
        if f.nvars() != 4 || f.degree() != 4 {
            return Err(Error::DegreeMismatch("expected a quartic in x, y, z, w".into()));
        }
        let mut parts: Vec<Vec<(Vec<u32>, Rat)>> = vec![Vec::new(); 5];
        for (e, c) in f.terms() {
            parts[e[3] as usize].push((e[..3].to_vec(), c.clone()));
        }
        if !parts[3].is_empty() || !parts[4].is_empty() {
            return Err(Error::NotANode);
        }
        let vars = plane_vars();
        let half = Rat::new(1.into(), 2.into());
        let g2 = Form::from_terms(&vars, 2, parts[2].clone())?;
        let g3 = Form::from_terms(&vars, 3, parts[1].clone())?.scale(&half);
        let g4 = Form::from_terms(&vars, 4, parts[0].clone())?;
        Self::new(g2, g3, g4)
    }

    /// Moves the rational node `p` to `P0`; returns the surface and `M`
    /// with `M p = P0` (the new equation is `f o M^{-1}`).
    pub fn from_raw(f: &Form, p: &ProjPoint) -> Result<(Self, Vec<Vec<Rat>>)> {
        let coords = p.rational_coords().ok_or(Error::NonRationalPoint(0))?;
        if !verify_node(f, p)?.is_node {
            return Err(Error::NotANode);
        }
        let k = p.last_nonzero();
        let mut minv = vec![vec![Rat::zero(); 4]; 4];
        for (col, i) in (0..4).filter(|&i| i != k).enumerate() {
            minv[i][col] = Rat::one();
        }
        for i in 0..4 {
            minv[i][3] = coords[i].clone();
        }
        let m = linalg::inverse(&minv).unwrap();
        Ok((Self::from_form(&f.linear_change(&minv))?, m))
    }
}

/// `(z w + c2)^2 - 4 (x w + a2)(y w + b2)` for quadrics `a2, b2, c2` in `x, y, z`.
pub fn syzygetic_build(a2: &Form, b2: &Form, c2: &Form) -> Result<QuarticSurface> {
    let vars = plane_vars();
    let (x, y, z) = (Form::var(&vars, 0), Form::var(&vars, 1), Form::var(&vars, 2));
    let two = Rat::from_integer(2.into());
    let four = Rat::from_integer(4.into());
    let g2 = &(&z * &z) - &(&x * &y).scale(&four);
    let g3 = &(&(&z * c2) - &(&x * b2).scale(&two)) - &(&y * a2).scale(&two);
    let g4 = &(c2 * c2) - &(a2 * b2).scale(&four);
    QuarticSurface::new(g2, g3, g4)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    pub gamma: Form,
    pub delta: Form,
    /// False when the branch sextic has a repeated component; the remaining
    /// checks are then skipped.
    pub reduced: bool,
    pub contact: Option<ContactKind>,
    pub param: Option<ConicParam>,
}

/// Squarefree on some line of a fixed family: then the form is reduced.
/// Failure on all of them is taken as non-reducedness.
fn looks_reduced(f: &Form) -> Result<bool> {
    if f.is_zero() {
        return Ok(false);
    }
    let r = |v: i64| Rat::from_integer(v.into());
    for j in 1..=12i64 {
        // the line through (1 : j : j^2 + 1) and (j + 2 : -1 : 3j)
        let (a, b) = ([r(1), r(j), r(j * j + 1)], [r(j + 2), r(-1), r(3 * j)]);
        let images: Vec<BinaryForm> = (0..3).map(|i| BinaryForm::new(vec![b[i].clone(), a[i].clone()])).collect();
        let res = f.restrict_binary(&images)?;
        if !res.is_zero() && res.is_squarefree() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn share_root(a: &BinaryForm, b: &BinaryForm) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.degree() > 0 || b.degree() > 0;
    }
    if a.infinity_multiplicity() > 0 && b.infinity_multiplicity() > 0 {
        return true;
    }
    a.dehomogenize().gcd_q(&b.dehomogenize()).degree().unwrap_or(0) > 0
}

/// `Gamma_X = g3^2 - g2 g4` and `Delta_X = g2`.
pub fn project_quartic(x: &QuarticSurface, height: u64) -> Result<Projection> {
    if linalg::rank(&quadric_matrix(&x.g2), 3) < 3 {
        return Err(Error::NodeDegenerate);
    }
    let gamma = &(&x.g3 * &x.g3) - &(&x.g2 * &x.g4);
    let delta = x.g2.clone();
    if !looks_reduced(&gamma)? {
        return Ok(Projection { gamma, delta, reduced: false, contact: None, param: None });
    }
    let base = find_rational_point(&x.g2, height)?;
    let param = parametrize_conic(&x.g2, &base)?;
    let r3 = restrict_to_conic(&x.g3, &param)?;
    let r4 = restrict_to_conic(&x.g4, &param)?;
    if share_root(&r3, &r4) {
        return Err(Error::LineThroughNode);
    }
    let contact = contact_profile(&gamma, &delta, &param)?.kind;
    Ok(Projection { gamma, delta, reduced: true, contact: Some(contact), param: Some(param) })
}

/// Splits a hyperplane `c w + l(x,y,z)` into `l / c`.
fn hyperplane_part(h: &Form) -> Result<Form> {
    if h.nvars() != 4 || h.degree() != 1 {
        return Err(Error::DegreeMismatch("expected a linear form in x, y, z, w".into()));
    }
    let c = h.coeff(&[0, 0, 0, 1]);
    if c.is_zero() {
        return Err(Error::HyperplaneThroughNode);
    }
    let rest = h.terms().filter(|(e, _)| e[3] == 0).map(|(e, v)| (e[..3].to_vec(), v / &c)).collect::<Vec<_>>();
    Form::from_terms(&plane_vars(), 1, rest)
}

/// Image of the hyperplane `w + l = 0` (given as a linear form in four
/// variables): the cubic `g2 l - g3`.
pub fn alpha1_map(x: &QuarticSurface, h: &Form) -> Result<Form> {
    let l = hyperplane_part(h)?;
    Ok(&(&x.g2 * &l) - &x.g3)
}

/// Image of the quadric `a1 w + a2 = 0` through `P0`: the quartic
/// `a1 g3 - a2 g2`.
pub fn alpha2_map(x: &QuarticSurface, quadric: &Form) -> Result<Form> {
    if quadric.nvars() != 4 || quadric.degree() != 2 {
        return Err(Error::DegreeMismatch("expected a quadric in x, y, z, w".into()));
    }
    if !quadric.coeff(&[0, 0, 0, 2]).is_zero() {
        return Err(Error::InvalidInput("the quadric does not pass through the node".into()));
    }
    let vars = plane_vars();
    let a1 = quadric.terms().filter(|(e, _)| e[3] == 1).map(|(e, v)| (e[..3].to_vec(), v.clone())).collect::<Vec<_>>();
    let a2 = quadric.terms().filter(|(e, _)| e[3] == 0).map(|(e, v)| (e[..3].to_vec(), v.clone())).collect::<Vec<_>>();
    let a1 = Form::from_terms(&vars, 1, a1)?;
    let a2 = Form::from_terms(&vars, 2, a2)?;
    if a1.is_zero() {
        return Err(Error::QuadricSingularAtNode);
    }
    Ok(&(&a1 * &x.g3) - &(&a2 * &x.g2))
}

/// Does `f` vanish at every contact point of the projection (its
/// restriction to the conic divisible by the contact form)?
pub fn passes_contact_points(f: &Form, proj: &Projection) -> Result<bool> {
    let param = proj.param.as_ref().ok_or_else(|| Error::InvalidInput("projection is not reduced".into()))?;
    let t = contact_profile(&proj.gamma, &proj.delta, param)?.contact_form;
    let r = restrict_to_conic(f, param)?;
    Ok(r.is_zero() || r.div_exact(&t).is_some())
}

/// Node test on a surface in `P^3` (rank-3 quadratic part).
pub fn verify_surface_node(f: &Form, p: &ProjPoint) -> Result<NodeReport> {
    if f.nvars() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: f.nvars() });
    }
    verify_node(f, p)
}

/// The singular points other than `P0` are exactly the given nodes: they
/// project to distinct points forming the whole singular locus of the
/// branch sextic (a line through `P0` carries at most one further
/// singular point unless it lies on the surface).
pub fn surface_nodes_complete(x: &QuarticSurface, others: &[ProjPoint], height: u64, seed_shear: usize) -> Result<bool> {
    let proj = project_quartic(x, height)?;
    if !proj.reduced {
        return Ok(false);
    }
    let f = x.to_form();
    let mut images = Vec::new();
    for p in others {
        if !verify_node(&f, p)?.is_node {
            return Ok(false);
        }
        let q = p.project_last().map_err(|_| Error::InvalidInput("P0 listed among the other nodes".into()))?;
        images.push(q);
    }
    singular_locus_complete_with(&proj.gamma, &images, seed_shear)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GeneralPosition {
    General,
    CollinearTriple(usize, usize, usize),
    CoplanarFive(Vec<usize>),
}

fn rational_rows(points: &[ProjPoint]) -> Result<Vec<Vec<Rat>>> {
    points.iter().enumerate().map(|(i, p)| p.rational_coords().ok_or(Error::NonRationalPoint(i))).collect()
}

/// No three points collinear and no five on a plane.
pub fn general_position_p3(points: &[ProjPoint]) -> Result<GeneralPosition> {
    let rows = rational_rows(points)?;
    for t in subsets(points.len(), 3) {
        let m: Vec<Vec<Rat>> = t.iter().map(|&i| rows[i].clone()).collect();
        if linalg::rank(&m, 4) < 3 {
            return Ok(GeneralPosition::CollinearTriple(t[0], t[1], t[2]));
        }
    }
    for s in subsets(points.len(), 5) {
        let m: Vec<Vec<Rat>> = s.iter().map(|&i| rows[i].clone()).collect();
        if linalg::rank(&m, 4) < 4 {
            return Ok(GeneralPosition::CoplanarFive(s));
        }
    }
    Ok(GeneralPosition::General)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Syzygetic {
    Found {
        subset: Vec<usize>,
        system: LinSysReport,
        /// Coefficients `c` of `sum_{i<=j} c_ij q_i q_j` (order 11,12,13,22,23,33)
        /// reproducing the surface from the kernel quadrics, when they do.
        ternary: Option<Vec<Rat>>,
    },
    NotDetected,
}

fn ternary_form(f: &Form, quadrics: &[Form]) -> Option<Vec<Rat>> {
    let mut cols = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            cols.push((&quadrics[i] * &quadrics[j]).to_coeff_vec());
        }
    }
    let target = f.to_coeff_vec();
    let rows: Vec<Vec<Rat>> = (0..target.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    linalg::solve(&rows, &target)
}

/// Some eight nodes in general position imposing only seven conditions on
/// quadrics (a 2-dimensional system through them).
pub fn syzygetic_test(f: &Form, nodes: &[ProjPoint]) -> Result<Syzygetic> {
    if nodes.len() < 8 {
        return Ok(Syzygetic::NotDetected);
    }
    rational_rows(nodes)?;
    for s in subsets(nodes.len(), 8) {
        let pts: Vec<ProjPoint> = s.iter().map(|&i| nodes[i].clone()).collect();
        if general_position_p3(&pts)? != GeneralPosition::General {
            continue;
        }
        let conds: Vec<_> = pts.iter().flat_map(|p| cond_point(2, p)).collect();
        let system = system_solve(Space::Forms { nvars: 4, degree: 2 }, &conds)?;
        if system.dim == 2 {
            let ternary = ternary_form(f, &system.kernel_forms(&space_vars()));
            return Ok(Syzygetic::Found { subset: s, system, ternary });
        }
    }
    Ok(Syzygetic::NotDetected)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config33 {
    pub subset: Vec<usize>,
    pub hyperplane: Form,
    /// A quadric cutting the conic out of the hyperplane.
    pub quadric: Form,
}

/// Six nodes (other than `P0`) on a conic in a plane, no four collinear.
pub fn detect_33_configuration(nodes: &[ProjPoint], p0: usize) -> Result<Option<Config33>> {
    let rows = rational_rows(nodes)?;
    let others: Vec<usize> = (0..nodes.len()).filter(|&i| i != p0).collect();
    'subsets: for s in subsets(others.len(), 6) {
        let idx: Vec<usize> = s.iter().map(|&i| others[i]).collect();
        let m: Vec<Vec<Rat>> = idx.iter().map(|&i| rows[i].clone()).collect();
        let planes = linalg::kernel(&m, 4);
        if planes.len() != 1 {
            continue;
        }
        for four in subsets(6, 4) {
            let q: Vec<Vec<Rat>> = four.iter().map(|&i| m[i].clone()).collect();
            if linalg::rank(&q, 4) < 3 {
                continue 'subsets;
            }
        }
        // plane coordinates: X = B c with B a basis of the plane (as columns)
        let h = &planes[0];
        let basis = linalg::kernel(std::slice::from_ref(h), 4);
        let bt: Vec<Vec<Rat>> = (0..4).map(|r| basis.iter().map(|b| b[r].clone()).collect()).collect();
        let plane_pts: Vec<ProjPoint> = m
            .iter()
            .map(|x| ProjPoint::rational(&linalg::solve(&bt, x).unwrap()))
            .collect::<Result<_>>()?;
        let conds: Vec<_> = plane_pts.iter().flat_map(|p| cond_point(2, p)).collect();
        let sys = system_solve(Space::plane(2), &conds)?;
        if sys.is_empty() {
            continue;
        }
        // a left inverse L of B gives the quadric c(L X)
        let left = left_inverse(&basis);
        let conic = sys.kernel_forms(&plane_vars()).remove(0);
        let quadric = conic.with_vars(&plane_vars()).compose(&left_forms(&left))?;
        let hyperplane = Form::from_coeff_vec(&space_vars(), 1, h);
        return Ok(Some(Config33 { subset: idx, hyperplane, quadric }));
    }
    Ok(None)
}

/// `L` (3 x 4) with `L B = I` for the 4 x 3 matrix with columns `basis`.
fn left_inverse(basis: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    // complete B to an invertible 4 x 4 matrix, invert, keep three rows
    let mut cols: Vec<Vec<Rat>> = basis.to_vec();
    for i in 0..4 {
        let mut e = vec![Rat::zero(); 4];
        e[i] = Rat::one();
        let mut trial = cols.clone();
        trial.push(e);
        if linalg::rank(&trial, 4) == 4 {
            cols = trial;
            break;
        }
    }
    let full: Vec<Vec<Rat>> = (0..4).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    linalg::inverse(&full).unwrap().into_iter().take(3).collect()
}

fn left_forms(l: &[Vec<Rat>]) -> Vec<Form> {
    l.iter().map(|row| Form::from_coeff_vec(&space_vars(), 1, row)).collect()
}

/// A node-centered quartic projecting to `(gamma, q)` for a sextic with
/// even contact to the conic `q`: `g2 = q`, `g3` any cubic restricting to
/// `c T` on the conic, `g4 = (g3^2 - c gamma) / q`, so the branch curve is
/// `c * gamma`. Not claimed to be unique.
pub fn inverse_construct(gamma: &Form, q: &Form, height: u64) -> Result<QuarticSurface> {
    if gamma.degree() != 6 {
        return Err(Error::DegreeMismatch(format!("expected a sextic, got degree {}", gamma.degree())));
    }
    let base = find_rational_point(q, height)?;
    let param = parametrize_conic(q, &base)?;
    let profile = contact_profile(gamma, q, &param)?;
    if !matches!(profile.kind, ContactKind::EvenContact | ContactKind::SimpleContact) {
        return Err(Error::NotSimpleContact);
    }
    let c = profile.scale.clone();
    let target = profile.contact_form.scale(&c);
    let vars = plane_vars();
    let images: Vec<Vec<Rat>> = monomial_basis(3, 3)
        .iter()
        .map(|e| {
            let m = Form::from_terms(&vars, 3, [(e.clone(), Rat::one())]).unwrap();
            restrict_to_conic(&m, &param).map(|b| b.coeffs().to_vec())
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<Rat>> = (0..target.coeffs().len()).map(|i| images.iter().map(|col| col[i].clone()).collect()).collect();
    let coeffs = linalg::solve(&rows, target.coeffs()).ok_or(Error::DegreeMismatch("contact form is not a cubic restriction".into()))?;
    let g3 = Form::from_coeff_vec(&vars, 3, &coeffs);
    let num = &(&g3 * &g3) - &gamma.scale(&c);
    let g4 = num.div_exact(q).ok_or(Error::CommonComponent)?;
    QuarticSurface::new(q.clone(), g3, g4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{delta2, DEFAULT_HEIGHT};
    use crate::mpoly::parse_form;

    fn pf(s: &str) -> Form {
        parse_form(s, &plane_vars()).unwrap()
    }

    fn sf(s: &str) -> Form {
        parse_form(s, &space_vars()).unwrap()
    }

    fn example_surface() -> QuarticSurface {
        syzygetic_build(&pf("-y^2+z^2"), &pf("-x^2+z^2"), &pf("-x^2+y^2")).unwrap()
    }

    fn example_nodes() -> Vec<ProjPoint> {
        [[0, 0, 0, 1], [0, 1, 1, -1], [-1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0], [-1, 1, 1, 0], [1, -1, 1, 0], [1, 1, -1, 0]]
            .iter()
            .map(|c| ProjPoint::from_ints(c))
            .collect()
    }

    #[test]
    fn expansion_matches_product() {
        let x = example_surface();
        let direct = sf("(z*w-x^2+y^2)^2 - 4*(x*w-y^2+z^2)*(y*w-x^2+z^2)");
        assert_eq!(x.to_form(), direct);
        assert_eq!(QuarticSurface::from_form(&direct).unwrap(), x);
        assert_eq!(x.g2, delta2());
        assert_eq!(x.g3, pf("z*(-x^2+y^2) - 2*x*(-x^2+z^2) - 2*y*(-y^2+z^2)"));
    }

    #[test]
    fn surface_nodes() {
        let f = example_surface().to_form();
        for p in example_nodes() {
            assert!(verify_surface_node(&f, &p).unwrap().is_node, "{p}");
        }
        let r = verify_surface_node(&sf("x^2*w^2+y^4+z^4"), &ProjPoint::from_ints(&[0, 0, 0, 1])).unwrap();
        assert!(r.singular && !r.is_node);
        assert_eq!(general_position_p3(&example_nodes()).unwrap(), GeneralPosition::General);
    }

    #[test]
    fn projection_and_maps() {
        let x = example_surface();
        let proj = project_quartic(&x, DEFAULT_HEIGHT).unwrap();
        assert!(proj.reduced);
        assert_eq!(proj.delta, delta2());
        assert_eq!(proj.contact, Some(ContactKind::SimpleContact));
        let a1 = alpha1_map(&x, &sf("w")).unwrap();
        assert_eq!(a1, -&x.g3);
        assert!(passes_contact_points(&a1, &proj).unwrap());
        let a1x = alpha1_map(&x, &sf("w + x")).unwrap();
        assert!(passes_contact_points(&a1x, &proj).unwrap());
        assert!(a1x.div_exact(&x.g2).is_none());
        let a2 = alpha2_map(&x, &sf("z*w") ).unwrap();
        assert!(passes_contact_points(&a2, &proj).unwrap());
        assert_eq!(alpha1_map(&x, &sf("x+y")).unwrap_err(), Error::HyperplaneThroughNode);
        assert_eq!(alpha2_map(&x, &sf("x^2+y*z")).unwrap_err(), Error::QuadricSingularAtNode);
        // a hyperplane through the node (0:1:1:-1) maps to a cubic through its image
        let h = sf("w + y");
        assert!(ProjPoint::from_ints(&[0, 1, 1]).vanishes(&alpha1_map(&x, &h).unwrap()).unwrap());
        let others: Vec<ProjPoint> = example_nodes()[1..].to_vec();
        assert!(surface_nodes_complete(&x, &others, DEFAULT_HEIGHT, 0).unwrap());
        assert!(!surface_nodes_complete(&x, &others[1..], DEFAULT_HEIGHT, 0).unwrap());
    }

    #[test]
    fn degenerate_projections() {
        let x = QuarticSurface::new(delta2(), Form::zero(&plane_vars(), 3), -&pf("x^2+y^2+z^2").pow(2)).unwrap();
        let p = project_quartic(&x, DEFAULT_HEIGHT).unwrap();
        assert!(!p.reduced);
        assert_eq!(p.delta, delta2());
        let flat = QuarticSurface::new(pf("x*y"), pf("z^3"), pf("x^4+y^4")).unwrap();
        assert_eq!(project_quartic(&flat, DEFAULT_HEIGHT).unwrap_err(), Error::NodeDegenerate);
        // g3 and g4 both vanish at the conic point (0:1:0): a line through P0
        let lined = QuarticSurface::new(delta2(), pf("x^3+z^3"), pf("x^4+x*z^3+z^4+x*y^3")).unwrap();
        assert_eq!(project_quartic(&lined, DEFAULT_HEIGHT).unwrap_err(), Error::LineThroughNode);
    }

    #[test]
    fn syzygetic_detection() {
        let x = example_surface();
        let Syzygetic::Found { subset, system, ternary } = syzygetic_test(&x.to_form(), &example_nodes()).unwrap() else {
            panic!("not detected")
        };
        assert_eq!(subset, (0..8).collect::<Vec<_>>());
        assert_eq!(system.dim, 2);
        assert_eq!(system.rank, 7);
        assert!(ternary.is_some());
        assert_eq!(syzygetic_test(&x.to_form(), &example_nodes()[..7]).unwrap(), Syzygetic::NotDetected);
    }

    #[test]
    fn position_failures() {
        let mut pts: Vec<ProjPoint> =
            [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1]].iter().map(|c| ProjPoint::from_ints(c)).collect();
        assert_eq!(general_position_p3(&pts).unwrap(), GeneralPosition::CollinearTriple(0, 1, 2));
        pts = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0], [1, 2, 3, 0]].iter().map(|c| ProjPoint::from_ints(c)).collect();
        assert_eq!(general_position_p3(&pts).unwrap(), GeneralPosition::CoplanarFive(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn three_three_configuration() {
        // g4 = f2^2 with f2 = xy - z^2 and g3 three lines: six nodes on the
        // conic f2 = 0 inside w = 0
        let x = QuarticSurface::new(pf("x^2+y^2+z^2"), pf("(x-y)*(x-4y)*(x-9y)"), pf("(x*y-z^2)^2")).unwrap();
        let f = x.to_form();
        let mut nodes = vec![ProjPoint::from_ints(&[0, 0, 0, 1])];
        for (a, b) in [(1, 1), (4, 2), (9, 3)] {
            for sign in [1, -1] {
                nodes.push(ProjPoint::from_ints(&[a, 1, sign * b, 0]));
            }
        }
        for p in &nodes[1..] {
            assert!(verify_surface_node(&f, p).unwrap().singular);
        }
        let c = detect_33_configuration(&nodes, 0).unwrap().unwrap();
        assert_eq!(c.subset, vec![1, 2, 3, 4, 5, 6]);
        assert!(c.hyperplane.proportional_to(&sf("w")).is_some());
        for p in &nodes[1..] {
            assert!(p.vanishes(&c.quadric).unwrap());
        }
        assert_eq!(detect_33_configuration(&nodes[..6], 0).unwrap(), None);
    }

    #[test]
    fn inverse_round_trip() {
        let g = pf("(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2");
        let x = inverse_construct(&g, &delta2(), DEFAULT_HEIGHT).unwrap();
        let proj = project_quartic(&x, DEFAULT_HEIGHT).unwrap();
        assert!(proj.gamma.proportional_to(&g).is_some());
        assert_eq!(proj.delta, delta2());
    }

    #[test]
    fn raw_conversion() {
        let f = example_surface().to_form();
        let (x, m) = QuarticSurface::from_raw(&f, &ProjPoint::from_ints(&[1, 1, 1, 0])).unwrap();
        let moved = ProjPoint::from_ints(&[1, 1, 1, 0]).transform(&m);
        assert!(moved.same_point(&ProjPoint::from_ints(&[0, 0, 0, 1])).unwrap());
        assert_eq!(linalg::rank(&quadric_matrix(&x.g2), 3), 3);
    }
}
