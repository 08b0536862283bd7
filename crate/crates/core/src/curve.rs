//! Singular points of plane curves: node tests and a complete enumeration of
//! the singular locus over the algebraic closure, grouped into Galois orbits.

use std::sync::Arc;

use crate::arith::{upoly_factor, Field, NFElem, NumberField, Rat, UPoly};
use crate::error::{Error, Result};
use crate::linalg;
use crate::linsys::{cond_point, subsets};
use crate::mpoly::{Form, ProjPoint};

/// Number of shears tried before giving up.
pub const SHEAR_ATTEMPTS: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct NodeReport {
    pub on_curve: bool,
    pub singular: bool,
    /// Determinant of the Hessian in the affine chart of the largest-index
    /// nonzero coordinate. For curves the sign is flipped, giving the
    /// discriminant `h_xy^2 - h_xx h_yy` of the tangent cone.
    pub hessian_invariant: NFElem,
    pub is_node: bool,
}

/// Node test for hypersurfaces (plane curves and surfaces).
pub fn verify_node(f: &Form, p: &ProjPoint) -> Result<NodeReport> {
    if f.nvars() != p.coords().len() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), got: p.coords().len() });
    }
    let p = p.normalized();
    let k = p.last_nonzero();
    let on_curve = p.vanishes(f)?;
    let partials = f.partials();
    let mut singular = on_curve;
    for d in &partials {
        if !p.vanishes(d)? {
            singular = false;
        }
    }
    let chart: Vec<usize> = (0..f.nvars()).filter(|&i| i != k).collect();
    let hess: Vec<Vec<NFElem>> = chart
        .iter()
        .map(|&i| chart.iter().map(|&j| p.eval(&partials[i].partial(j))).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut inv = linalg::det_field(&hess, &p.field().one());
    if chart.len() == 2 {
        inv = -inv;
    }
    let is_node = singular && !inv.is_zero();
    Ok(NodeReport { on_curve, singular, hessian_invariant: inv, is_node })
}

/// Where, in sheared coordinates, an orbit of singular points sits.
#[derive(Debug, Clone)]
enum Chart {
    /// `(a : beta(a) : 1)` for the roots `a` of `p`.
    Affine { p: UPoly<Rat>, beta: UPoly<Rat> },
    /// `(a : 1 : 0)` for the roots of `p`.
    Infinite { p: UPoly<Rat> },
    /// `(1 : 0 : 0)`.
    Corner,
}

#[derive(Debug, Clone)]
pub struct SingularLocus {
    pub shear_index: usize,
    /// One representative per Galois orbit, in the original coordinates.
    pub orbits: Vec<ProjPoint>,
    charts: Vec<Chart>,
    shear: Vec<Vec<Rat>>,
}

impl SingularLocus {
    pub fn point_count(&self) -> usize {
        self.charts.iter().map(Chart::size).sum()
    }

    /// Index of the orbit containing `P`, if any.
    pub fn locate(&self, p: &ProjPoint) -> Result<Option<usize>> {
        if p.coords().len() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: p.coords().len() });
        }
        let q = p.transform(&self.shear);
        let c = q.coords();
        for (i, chart) in self.charts.iter().enumerate() {
            let hit = match chart {
                Chart::Affine { p, beta } if !c[2].is_zero() => {
                    let zi = c[2].inverse().unwrap();
                    let xi = c[0].clone() * zi.clone();
                    let eta = c[1].clone() * zi;
                    eval_at(p, &xi).is_zero() && eval_at(beta, &xi) == eta
                }
                Chart::Infinite { p } if c[2].is_zero() && !c[1].is_zero() => {
                    eval_at(p, &(c[0].clone() * c[1].inverse().unwrap())).is_zero()
                }
                Chart::Corner => c[2].is_zero() && c[1].is_zero(),
                _ => false,
            };
            if hit {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Do the claimed points (one representative per orbit) account for the
    /// whole singular locus, each orbit exactly once?
    pub fn matches(&self, claimed: &[ProjPoint]) -> Result<bool> {
        let mut used = vec![false; self.charts.len()];
        for p in claimed {
            match self.locate(p)? {
                Some(i) if !used[i] && p.orbit_size() == self.charts[i].size() => used[i] = true,
                _ => return Ok(false),
            }
        }
        Ok(used.iter().all(|&u| u))
    }
}

impl Chart {
    fn size(&self) -> usize {
        match self {
            Chart::Affine { p, .. } | Chart::Infinite { p } => p.degree().unwrap(),
            Chart::Corner => 1,
        }
    }
}

fn eval_at(p: &UPoly<Rat>, x: &NFElem) -> NFElem {
    p.coeffs().iter().rev().fold(x.zero_like(), |acc, c| acc * x.clone() + x.embed(c))
}

/// Unipotent integer shear number `k`.
fn shear(k: usize) -> Vec<Vec<Rat>> {
    let k = k as i64;
    let r = |v: i64| Rat::from_integer(v.into());
    vec![vec![r(1), r(k + 2), r(0)], vec![r(0), r(1), r(0)], vec![r(k + 1), r(2 * k + 1), r(1)]]
}

/// `f(x, y, 1)` as a polynomial in `y` with coefficients in `Q[x]`.
fn chart_z(f: &Form) -> Vec<UPoly<Rat>> {
    let ny = f.terms().map(|(e, _)| e[1] as usize).max().unwrap_or(0);
    let mut out = vec![Vec::<Rat>::new(); ny + 1];
    for (e, c) in f.terms() {
        let col = &mut out[e[1] as usize];
        if col.len() <= e[0] as usize {
            col.resize(e[0] as usize + 1, Rat::from_integer(0.into()));
        }
        col[e[0] as usize] += c;
    }
    out.into_iter().map(UPoly::new).collect()
}

fn sylvester_det(a: &[Rat], b: &[Rat]) -> Rat {
    // a, b: coefficient lists, index = power of y, formal degrees len-1
    let (n1, n2) = (a.len() - 1, b.len() - 1);
    let n = n1 + n2;
    let zero = Rat::from_integer(0.into());
    let mut m = vec![vec![zero.clone(); n]; n];
    for i in 0..n2 {
        for (j, c) in a.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..n1 {
        for (j, c) in b.iter().rev().enumerate() {
            m[n2 + i][i + j] = c.clone();
        }
    }
    linalg::det(&m)
}

/// Newton interpolation through `(0, v0), (1, v1), ...`.
fn interpolate(values: &[Rat]) -> UPoly<Rat> {
    let n = values.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / Rat::from_integer((level as i64).into());
        }
    }
    let mut out = UPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let node = UPoly::new(vec![Rat::from_integer((-(i as i64)).into()), Rat::from_integer(1.into())]);
        out = &(&out * &node) + &UPoly::constant(dd[i].clone());
    }
    out
}

/// `Res_y(a, b)` as a polynomial in `x`, with formal leading coefficients.
fn resultant_y(a: &[UPoly<Rat>], b: &[UPoly<Rat>]) -> UPoly<Rat> {
    let deg = |p: &[UPoly<Rat>]| p.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let bound = (b.len() - 1) * deg(a) + (a.len() - 1) * deg(b);
    let values: Vec<Rat> = (0..=bound)
        .map(|x| {
            let x = Rat::from_integer((x as i64).into());
            let av: Vec<Rat> = a.iter().map(|c| c.eval(&x)).collect();
            let bv: Vec<Rat> = b.iter().map(|c| c.eval(&x)).collect();
            sylvester_det(&av, &bv)
        })
        .collect();
    interpolate(&values)
}

enum Attempt {
    Done(Vec<Chart>),
    Degenerate,
}

fn squarefree_part_field(h: &UPoly<NFElem>) -> UPoly<NFElem> {
    let g = h.gcd(&h.derivative());
    h.div_exact(&g).unwrap().monic()
}

fn attempt(f: &Form) -> Result<Attempt> {
    let partials = f.partials();
    let mut charts = Vec::new();

    // the line z = 0
    let q = NumberField::rationals();
    let corner = [q.one(), q.zero(), q.zero()];
    if partials.iter().map(|d| d.eval(&corner)).collect::<Result<Vec<_>>>()?.iter().all(NFElem::is_zero) {
        charts.push(Chart::Corner);
    }
    let on_line: Vec<UPoly<Rat>> = partials
        .iter()
        .map(|d| {
            let mut c = vec![Rat::from_integer(0.into()); d.degree() as usize + 1];
            for (e, v) in d.terms().filter(|(e, _)| e[2] == 0) {
                c[e[0] as usize] += v;
            }
            UPoly::new(c)
        })
        .collect();
    if on_line.iter().all(UPoly::is_zero) {
        return Ok(Attempt::Degenerate);
    }
    let g = on_line.iter().fold(UPoly::zero(), |acc, p| acc.gcd_q(p));
    if g.degree().unwrap_or(0) > 0 {
        let Ok(facs) = upoly_factor(&g) else { return Ok(Attempt::Degenerate) };
        for (p, _) in facs {
            charts.push(Chart::Infinite { p });
        }
    }

    // the chart z = 1
    let polys: Vec<Vec<UPoly<Rat>>> = partials.iter().map(chart_z).collect();
    let mut g = UPoly::zero();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let r = resultant_y(&polys[i], &polys[j]);
        if !r.is_zero() {
            g = g.gcd_q(&r);
        }
    }
    if g.is_zero() {
        return Ok(Attempt::Degenerate);
    }
    if g.degree().unwrap() > 0 {
        let Ok(facs) = upoly_factor(&g) else { return Ok(Attempt::Degenerate) };
        for (p, _) in facs {
            let (k, a) = NumberField::root_field(&p)?;
            let h = polys.iter().fold(UPoly::<NFElem>::zero(), |acc, col| {
                let col: Vec<NFElem> = col.iter().map(|c| eval_at(c, &a)).collect();
                acc.gcd(&UPoly::new(col))
            });
            if h.is_zero() {
                return Ok(Attempt::Degenerate);
            }
            let h = squarefree_part_field(&h);
            match h.degree().unwrap() {
                0 => {}
                1 => {
                    let beta = -h.coeffs()[0].clone();
                    let beta = if Arc::ptr_eq(&k, &NumberField::rationals()) {
                        UPoly::constant(beta.to_rat().unwrap())
                    } else {
                        beta.as_poly()
                    };
                    charts.push(Chart::Affine { p, beta });
                }
                _ => return Ok(Attempt::Degenerate),
            }
        }
    }
    Ok(Attempt::Done(charts))
}

/// All singular points of the plane curve `f = 0`, as Galois orbits.
/// Shears are tried from `seed` on until one puts the locus in general
/// position with respect to the projection to the first coordinate.
pub fn singular_locus(f: &Form, seed: usize) -> Result<SingularLocus> {
    if f.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: f.nvars() });
    }
    if f.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    for k in seed..seed + SHEAR_ATTEMPTS {
        let m = shear(k);
        let minv = linalg::inverse(&m).unwrap();
        let sheared = f.linear_change(&minv);
        if let Attempt::Done(charts) = attempt(&sheared)? {
            let orbits = charts.iter().map(|c| representative(c, &minv)).collect::<Result<_>>()?;
            return Ok(SingularLocus { shear_index: k, orbits, charts, shear: m });
        }
    }
    Err(Error::ShearExhausted(SHEAR_ATTEMPTS))
}

fn representative(c: &Chart, minv: &[Vec<Rat>]) -> Result<ProjPoint> {
    let q = NumberField::rationals();
    let pt = match c {
        Chart::Corner => ProjPoint::new(vec![q.one(), q.zero(), q.zero()])?,
        Chart::Infinite { p } => {
            let (k, a) = NumberField::root_field(p)?;
            ProjPoint::new(vec![a, k.one(), k.zero()])?
        }
        Chart::Affine { p, beta } => {
            let (k, a) = NumberField::root_field(p)?;
            let b = eval_at(beta, &a);
            ProjPoint::new(vec![a, b, k.one()])?
        }
    };
    Ok(pt.transform(minv))
}

pub fn singular_locus_complete(f: &Form, claimed: &[ProjPoint]) -> Result<bool> {
    singular_locus_complete_with(f, claimed, 0)
}

pub fn singular_locus_complete_with(f: &Form, claimed: &[ProjPoint], seed: usize) -> Result<bool> {
    singular_locus(f, seed)?.matches(claimed)
}

/// For a sextic with at most seven nodes (given one point per orbit): it is
/// irreducible iff no five nodes are collinear. A line carrying five of at
/// most seven nodes is unique, hence rational, so only Galois-stable sets
/// (unions of orbits) need checking.
pub fn irreducibility_sextic(f: &Form, nodes: &[ProjPoint]) -> Result<bool> {
    if f.degree() != 6 {
        return Err(Error::DegreeMismatch(format!("expected a sextic, got degree {}", f.degree())));
    }
    let sizes: Vec<usize> = nodes.iter().map(ProjPoint::orbit_size).collect();
    let total: usize = sizes.iter().sum();
    if total > 7 {
        return Err(Error::TooManyNodes(total));
    }
    for k in 1..=nodes.len() {
        for s in subsets(nodes.len(), k) {
            if s.iter().map(|&i| sizes[i]).sum::<usize>() < 5 {
                continue;
            }
            let rows: Vec<Vec<Rat>> =
                s.iter().flat_map(|&i| cond_point(1, &nodes[i])).map(|c| c.row).collect();
            if linalg::rank(&rows, 3) < 3 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
