//! Linear systems of plane/space forms and of biforms on P^1 x P^1, cut out
//! by incidence, singularity and conic-divisibility conditions.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{BinaryForm, NFElem, Rat, UPoly};
use crate::conic::ConicParam;
use crate::error::{Error, Result};
use crate::linalg;
use crate::mpoly::{monomial_basis, BiForm, Form, ProjPoint};

#[derive(Debug, Clone, PartialEq)]
pub struct LinCondition {
    pub row: Vec<Rat>,
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Space {
    Forms { nvars: usize, degree: u32 },
    BiForms { bidegree: (u32, u32) },
}

impl Space {
    pub fn plane(degree: u32) -> Self {
        Space::Forms { nvars: 3, degree }
    }

    pub fn size(&self) -> usize {
        match *self {
            Space::Forms { nvars, degree } => monomial_basis(nvars, degree).len(),
            Space::BiForms { bidegree: (a, b) } => ((a + 1) * (b + 1)) as usize,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinSysReport {
    pub space: Space,
    pub condition_count: usize,
    pub rank: usize,
    /// Projective dimension; -1 for the empty system.
    pub dim: i64,
    /// Content-normalized coefficient vectors.
    pub kernel: Vec<Vec<Rat>>,
}

impl LinSysReport {
    pub fn kernel_forms(&self, vars: &[String]) -> Vec<Form> {
        let Space::Forms { degree, .. } = self.space else { panic!("not a space of forms") };
        self.kernel.iter().map(|v| Form::from_coeff_vec(vars, degree, v)).collect()
    }

    pub fn kernel_biforms(&self) -> Vec<BiForm> {
        let Space::BiForms { bidegree } = self.space else { panic!("not a space of biforms") };
        self.kernel.iter().map(|v| BiForm::from_coeff_vec(bidegree, v)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }
}

fn monomial_values(basis: &[Vec<u32>], coords: &[NFElem]) -> Vec<NFElem> {
    let maxe = basis.iter().flatten().copied().max().unwrap_or(0) as usize;
    let powers: Vec<Vec<NFElem>> = coords
        .iter()
        .map(|c| {
            let mut v = vec![c.field().one()];
            for _ in 0..maxe {
                v.push(v.last().unwrap().clone() * c.clone());
            }
            v
        })
        .collect();
    basis
        .iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .fold(coords[0].field().one(), |acc, (i, &k)| acc * powers[i][k as usize].clone())
        })
        .collect()
}

/// Rows from an `NFElem`-valued functional: one per power-basis coordinate.
fn split_rows(values: &[NFElem], label: &str) -> Vec<LinCondition> {
    let e = values.first().map_or(1, |v| v.field().degree());
    (0..e)
        .map(|j| LinCondition {
            row: values.iter().map(|v| v.coords()[j].clone()).collect(),
            label: if e == 1 { label.to_string() } else { format!("{label} [a^{j}]") },
        })
        .collect()
}

/// Vanishing at `P` (at its whole conjugate orbit when `P` is algebraic).
pub fn cond_point(d: u32, p: &ProjPoint) -> Vec<LinCondition> {
    let basis = monomial_basis(p.coords().len(), d);
    split_rows(&monomial_values(&basis, p.coords()), &format!("through {p}"))
}

/// Vanishing of all partial derivatives at `P`.
pub fn cond_singular(d: u32, p: &ProjPoint) -> Vec<LinCondition> {
    let n = p.coords().len();
    let basis = monomial_basis(n, d);
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    let lower = monomial_basis(n, d - 1);
    let vals = monomial_values(&lower, p.coords());
    let zero = p.field().zero();
    for i in 0..n {
        let row: Vec<NFElem> = basis
            .iter()
            .map(|e| {
                if e[i] == 0 {
                    return zero.clone();
                }
                let mut m = e.clone();
                m[i] -= 1;
                let k = lower.iter().position(|x| *x == m).unwrap();
                p.field().from_rat(&Rat::from_integer(e[i].into())) * vals[k].clone()
            })
            .collect();
        out.extend(split_rows(&row, &format!("d/dx{i} at {p}")));
    }
    out
}

/// Restriction to the conic divisible by `T`: `deg T` rows.
pub fn cond_divisible_on_conic(d: u32, param: &ConicParam, t: &BinaryForm) -> Result<Vec<LinCondition>> {
    let n = 2 * d as usize;
    if t.degree() > n {
        return Err(Error::DegreeMismatch(format!("contact form of degree {} on forms of degree {d}", t.degree())));
    }
    if t.degree() == 0 {
        return Ok(Vec::new());
    }
    let restrictions: Vec<BinaryForm> = monomial_basis(3, d)
        .iter()
        .map(|e| {
            let m = Form::from_terms(&crate::mpoly::plane_vars(), d, [(e.clone(), Rat::from_integer(1.into()))]).unwrap();
            m.restrict_binary(&param.p)
        })
        .collect::<Result<_>>()?;
    let a = t.infinity_multiplicity();
    let tt = t.dehomogenize();
    let k = tt.degree().unwrap();
    let mut rows = Vec::new();
    // t^a divides: the top a coefficients vanish
    for i in 0..a {
        rows.push(LinCondition {
            row: restrictions.iter().map(|r| r.coeffs()[n - i].clone()).collect(),
            label: format!("contact divisibility at infinity #{i}"),
        });
    }
    // remainder of F(s,1) mod T(s,1), linear in the coefficients of F
    let reductions: Vec<UPoly<Rat>> =
        (0..=n).map(|i| UPoly::monomial(Rat::from_integer(1.into()), i).rem(&tt)).collect();
    for j in 0..k {
        let row = restrictions
            .iter()
            .map(|r| {
                r.coeffs()
                    .iter()
                    .enumerate()
                    .fold(Rat::zero(), |acc, (i, c)| match reductions[i].coeff(j) {
                        Some(v) if !c.is_zero() => acc + c * v,
                        _ => acc,
                    })
            })
            .collect();
        rows.push(LinCondition { row, label: format!("contact divisibility remainder #{j}") });
    }
    Ok(rows)
}

/// Vanishing of a biform at a rational point of P^1 x P^1.
pub fn cond_point_bi(bidegree: (u32, u32), st: &[Rat; 2], uv: &[Rat; 2]) -> LinCondition {
    let row = BiForm::basis(bidegree)
        .iter()
        .map(|e| pow(&st[0], e[0]) * pow(&st[1], e[1]) * pow(&uv[0], e[2]) * pow(&uv[1], e[3]))
        .collect();
    LinCondition { row, label: format!("through ({}:{}),({}:{})", st[0], st[1], uv[0], uv[1]) }
}

fn pow(x: &Rat, e: u32) -> Rat {
    (0..e).fold(Rat::from_integer(1.into()), |acc, _| acc * x)
}

pub fn system_solve(space: Space, conditions: &[LinCondition]) -> Result<LinSysReport> {
    let n = space.size();
    for c in conditions {
        if c.row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: c.row.len() });
        }
    }
    let rows: Vec<Vec<Rat>> = conditions.iter().map(|c| c.row.clone()).collect();
    let kernel = linalg::kernel(&rows, n);
    let rank = n - kernel.len();
    Ok(LinSysReport { space, condition_count: conditions.len(), rank, dim: kernel.len() as i64 - 1, kernel })
}

fn same_p1(a: &[Rat; 2], b: &[Rat; 2]) -> bool {
    &a[0] * &b[1] == &a[1] * &b[0]
}

/// At most two points per ruling fiber, and no five on a (1,1)-curve.
pub fn general_position_p1xp1(points: &[([Rat; 2], [Rat; 2])]) -> bool {
    for (i, p) in points.iter().enumerate() {
        let first = points.iter().filter(|q| same_p1(&q.0, &p.0)).count();
        let second = points.iter().filter(|q| same_p1(&q.1, &p.1)).count();
        if first > 2 || second > 2 {
            return false;
        }
        let _ = i;
    }
    let rows: Vec<Vec<Rat>> = points.iter().map(|(a, b)| cond_point_bi((1, 1), a, b).row).collect();
    subsets(points.len(), 5).iter().all(|s| {
        let m: Vec<Vec<Rat>> = s.iter().map(|&i| rows[i].clone()).collect();
        linalg::rank(&m, 4) == 4
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
