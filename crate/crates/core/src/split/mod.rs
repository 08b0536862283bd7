//! Deciding the splitting type of a curve with respect to a contact conic.
//!
//! Positive answers come only from exactly verified factorizations or
//! certificates; negative answers only from necessary conditions (the node
//! bound and dimensions of linear systems through the nodes). Anything else
//! is reported as undetermined.

mod certificate;
mod pullback;

pub use certificate::{
    descend, extract_certificate, pull_back_certificate, verify_certificate, SplitCertificate, TANGENT_SEARCH,
};
pub use pullback::{
    default_extensions, factor_pullback, factor_pullback_over, PullbackFactor, PullbackOptions,
    DEFAULT_GROUPING_CAP,
};

use num_traits::One;

use crate::arith::{BinaryForm, Rat};
use crate::conic::{
    contact_profile, delta2, find_rational_point, normalize_conic, ContactKind, ConicParam, DEFAULT_HEIGHT,
};
use crate::cover::pullback_curve;
use crate::curve::{singular_locus_complete_with, verify_node};
use crate::error::{Error, Result};
use crate::linalg;
use crate::linsys::{cond_divisible_on_conic, cond_point, subsets, system_solve, LinCondition, Space};
use crate::mpoly::{Form, ProjPoint};

/// `(m^2 + n^2 - m - n) / 2`: the number of nodes a splitting of type
/// `(m,n)` forces on the intersection of the two components.
pub fn alpha_of(m: u32, n: u32) -> u32 {
    (m * m + n * n - m - n) / 2
}

/// `2r >= m^2 + n^2 - d`; false rules the type out.
pub fn node_bound_filter(r: usize, m: u32, n: u32, d: u32) -> bool {
    2 * r as i64 >= (m * m + n * n) as i64 - d as i64
}

#[derive(Debug, Clone, PartialEq)]
pub enum DimCheck {
    /// Node subsets (as lists of orbit indices) satisfying both conditions.
    Passes(Vec<Vec<usize>>),
    Fails(String),
    /// Only non-Galois-stable subsets remain unexamined.
    Inconclusive(String),
}

fn curve_name(deg: u32) -> String {
    match deg {
        0 => "constant".into(),
        1 => "line".into(),
        2 => "conic".into(),
        3 => "cubic".into(),
        4 => "quartic".into(),
        5 => "quintic".into(),
        d => format!("curve of degree {d}"),
    }
}

fn point_rows(deg: u32, nodes: &[ProjPoint], subset: &[usize]) -> Vec<LinCondition> {
    subset.iter().flat_map(|&i| cond_point(deg, &nodes[i])).collect()
}

/// Unions of orbits with exactly `size` points, in lexicographic order of
/// orbit-index masks.
fn orbit_unions(sizes: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..=sizes.len() {
        for s in subsets(sizes.len(), k) {
            if s.iter().map(|&i| sizes[i]).sum::<usize>() == size {
                out.push(s);
            }
        }
    }
    out
}

/// For each `alpha`-subset `S` of the nodes: `dim |nL - S - T| >= n - m`
/// (curves of degree `n` through `S` whose restriction to the conic is
/// divisible by the contact form `T`) and `dim |(n-1)L - S| >= 0`.
pub fn necessary_dim_check(
    nodes: &[ProjPoint],
    param: &ConicParam,
    contact: &BinaryForm,
    m: u32,
    n: u32,
) -> Result<DimCheck> {
    let alpha = alpha_of(m, n) as usize;
    let sizes: Vec<usize> = nodes.iter().map(ProjPoint::orbit_size).collect();
    let r: usize = sizes.iter().sum();
    if alpha > r {
        return Ok(DimCheck::Fails(format!("({m},{n}): {alpha} nodes needed, {r} present")));
    }
    let divisible = cond_divisible_on_conic(n, param, contact)?;
    let need = (n - m) as i64;
    let mut witnesses = Vec::new();
    let mut best_dim: Option<i64> = None;
    for s in orbit_unions(&sizes, alpha) {
        let lower = system_solve(Space::plane(n - 1), &point_rows(n - 1, nodes, &s))?;
        if lower.is_empty() {
            continue;
        }
        let mut rows = point_rows(n, nodes, &s);
        rows.extend(divisible.iter().cloned());
        let dim = system_solve(Space::plane(n), &rows)?.dim;
        best_dim = Some(best_dim.map_or(dim, |b| b.max(dim)));
        if dim >= need {
            witnesses.push(s);
        }
    }
    if !witnesses.is_empty() {
        return Ok(DimCheck::Passes(witnesses));
    }
    if r > alpha && sizes.iter().any(|&s| s > 1) {
        return Ok(DimCheck::Inconclusive(format!(
            "({m},{n}): no Galois-stable node subset qualifies; other subsets not examined"
        )));
    }
    Ok(DimCheck::Fails(match best_dim {
        None => format!("({m},{n}): no {}", curve_name(n - 1)),
        Some(b) => format!("({m},{n}): dim {b} < {need}"),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Criterion24Condition {
    /// No conic through the seven nodes.
    IiiA,
    /// The quartic system through the nodes and tangent points has dimension at least 2.
    IiiB,
    /// Cubics through a collinear node triple and the tangent points contain the conic.
    IiiC,
    /// No cubic through five nodes and the tangent points.
    IiiD,
}

impl Criterion24Condition {
    pub fn label(&self) -> &'static str {
        match self {
            Self::IiiA => "iii-a",
            Self::IiiB => "iii-b",
            Self::IiiC => "iii-c",
            Self::IiiD => "iii-d",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Criterion24 {
    Holds { quartic_dim: i64, collinear_triples: usize },
    FailsWith { condition: Criterion24Condition, detail: String },
}

/// The four-part criterion for type (2,4) of a 7-nodal sextic with rational
/// nodes, relative to the conic `delta` with parametrization `param`.
pub fn criterion_24_7nodal(
    nodes: &[ProjPoint],
    delta: &Form,
    param: &ConicParam,
    contact: &BinaryForm,
) -> Result<Criterion24> {
    let total: usize = nodes.iter().map(ProjPoint::orbit_size).sum();
    if total != 7 || nodes.len() != 7 {
        return Err(Error::WrongNodeCount { expected: 7, got: total });
    }
    if let Some(i) = nodes.iter().position(|p| !p.is_rational()) {
        return Err(Error::NonRationalPoint(i));
    }
    if contact.degree() != 6 {
        return Err(Error::NotSimpleContact);
    }
    let all: Vec<usize> = (0..7).collect();
    let fail = |condition, detail: String| Ok(Criterion24::FailsWith { condition, detail });

    let conics = system_solve(Space::plane(2), &point_rows(2, nodes, &all))?;
    if !conics.is_empty() {
        return fail(Criterion24Condition::IiiA, "a conic passes through the seven nodes".into());
    }

    let mut rows = point_rows(4, nodes, &all);
    rows.extend(cond_divisible_on_conic(4, param, contact)?);
    let quartic_dim = system_solve(Space::plane(4), &rows)?.dim;
    if quartic_dim < 2 {
        return fail(Criterion24Condition::IiiB, format!("dim {quartic_dim} < 2"));
    }

    let cubic_div = cond_divisible_on_conic(3, param, contact)?;
    let vars = delta.vars().to_vec();
    let mut collinear = 0;
    for t in subsets(7, 3) {
        let line_rows: Vec<Vec<Rat>> = point_rows(1, nodes, &t).into_iter().map(|c| c.row).collect();
        if linalg::rank(&line_rows, 3) == 3 {
            continue;
        }
        collinear += 1;
        let mut rows = point_rows(3, nodes, &t);
        rows.extend(cubic_div.iter().cloned());
        let sys = system_solve(Space::plane(3), &rows)?;
        if sys.kernel_forms(&vars).iter().any(|c| c.div_exact(delta).is_none()) {
            let idx: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
            return fail(
                Criterion24Condition::IiiC,
                format!("a cubic through nodes {} and the tangent points omits the conic", idx.join(",")),
            );
        }
    }

    for s in subsets(7, 5) {
        let mut rows = point_rows(3, nodes, &s);
        rows.extend(cubic_div.iter().cloned());
        if !system_solve(Space::plane(3), &rows)?.is_empty() {
            let idx: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
            return fail(
                Criterion24Condition::IiiD,
                format!("a cubic passes through nodes {} and the tangent points", idx.join(",")),
            );
        }
    }
    Ok(Criterion24::Holds { quartic_dim, collinear_triples: collinear })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitOptions {
    pub height: u64,
    pub seed_shear: usize,
    /// Verify that the nodes are nodes and that they are all the singularities.
    pub check_nodes: bool,
    pub pullback: PullbackOptions,
}

impl Default for SplitOptions {
    fn default() -> Self {
        SplitOptions { height: DEFAULT_HEIGHT, seed_shear: 0, check_nodes: true, pullback: PullbackOptions::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SplitOutcome {
    /// The factor lives on the cover of the normalized conic; the
    /// certificate (rational factors only) is in the input coordinates.
    Split { m: u32, n: u32, factor: PullbackFactor, certificate: Option<SplitCertificate> },
    NonSplitting { evidence: Vec<String> },
    Undetermined { reasons: Vec<String> },
}

impl SplitOutcome {
    pub fn label(&self) -> String {
        match self {
            SplitOutcome::Split { m, n, .. } => format!("Split({m},{n})"),
            SplitOutcome::NonSplitting { .. } => "NonSplitting".into(),
            SplitOutcome::Undetermined { .. } => "Undetermined".into(),
        }
    }

    pub fn split_type(&self) -> Option<(u32, u32)> {
        match self {
            SplitOutcome::Split { m, n, .. } => Some((*m, *n)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplittingReport {
    pub degree: u32,
    pub node_count: usize,
    /// `M` moving the conic to `z^2 - 4xy` (`gamma o M^{-1}` is analysed).
    pub normalization: Vec<Vec<Rat>>,
    /// One line per candidate type.
    pub log: Vec<String>,
    pub outcome: SplitOutcome,
}

/// Everything needed to work relative to the standard conic.
#[derive(Debug, Clone)]
pub struct Normalized {
    pub matrix: Vec<Vec<Rat>>,
    pub gamma: Form,
    pub nodes: Vec<ProjPoint>,
    pub contact: BinaryForm,
}

fn identity3() -> Vec<Vec<Rat>> {
    (0..3).map(|i| (0..3).map(|j| if i == j { Rat::one() } else { Rat::from_integer(0.into()) }).collect()).collect()
}

/// Moves `(gamma, q, nodes)` so that the conic becomes `z^2 - 4xy` and
/// checks simple contact.
pub fn normalize(gamma: &Form, q: &Form, nodes: &[ProjPoint], height: u64) -> Result<Normalized> {
    let matrix = if q.proportional_to(&delta2()).is_some() {
        identity3()
    } else {
        let base = find_rational_point(q, height)?;
        normalize_conic(q, &base)?
    };
    let inv = linalg::inverse(&matrix).ok_or(Error::ConicNotSmooth)?;
    let gamma = gamma.linear_change(&inv);
    let nodes: Vec<ProjPoint> = nodes.iter().map(|p| p.transform(&matrix)).collect();
    let profile = contact_profile(&gamma, &delta2(), &ConicParam::standard())?;
    if profile.kind != ContactKind::SimpleContact {
        return Err(Error::NotSimpleContact);
    }
    Ok(Normalized { matrix, gamma, nodes, contact: profile.contact_form })
}

pub fn check_nodes(gamma: &Form, nodes: &[ProjPoint], seed_shear: usize) -> Result<()> {
    for p in nodes {
        if !verify_node(gamma, p)?.is_node {
            return Err(Error::NotANode);
        }
    }
    if !singular_locus_complete_with(gamma, nodes, seed_shear)? {
        return Err(Error::InvalidInput("the node list is not the complete singular locus".into()));
    }
    Ok(())
}

/// Splitting type of `gamma` with respect to the conic `q`, given one
/// representative per Galois orbit of nodes.
pub fn splitting_type(gamma: &Form, q: &Form, nodes: &[ProjPoint], opts: &SplitOptions) -> Result<SplittingReport> {
    if gamma.nvars() != 3 || q.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: gamma.nvars().max(q.nvars()) });
    }
    let d = gamma.degree();
    if d < 2 || q.degree() != 2 {
        return Err(Error::DegreeMismatch(format!("curve degree {d}, conic degree {}", q.degree())));
    }
    if opts.check_nodes {
        check_nodes(gamma, nodes, opts.seed_shear)?;
    }
    let norm = normalize(gamma, q, nodes, opts.height)?;
    let param = ConicParam::standard();
    let r: usize = norm.nodes.iter().map(ProjPoint::orbit_size).sum();
    let mut log = Vec::new();
    let mut evidence = Vec::new();
    let mut reasons = Vec::new();
    let mut candidates = Vec::new();
    for m in (1..=d / 2).rev() {
        let n = d - m;
        if !node_bound_filter(r, m, n, d) {
            let line = format!("({m},{n}): bound {} < {}", 2 * r, m * m + n * n - d);
            log.push(line.clone());
            evidence.push(line);
            continue;
        }
        let criterion = (m, n) == (2, 4) && r == 7 && norm.nodes.len() == 7 && norm.nodes.iter().all(ProjPoint::is_rational);
        if criterion {
            match criterion_24_7nodal(&norm.nodes, &delta2(), &param, &norm.contact)? {
                Criterion24::Holds { quartic_dim, .. } => {
                    log.push(format!("(2,4): criterion holds (quartic system dim {quartic_dim})"));
                    candidates.push((m, n));
                }
                Criterion24::FailsWith { condition, detail } => {
                    let line = format!("(2,4): criterion fails ({}): {detail}", condition.label());
                    log.push(line.clone());
                    evidence.push(line);
                }
            }
            continue;
        }
        match necessary_dim_check(&norm.nodes, &param, &norm.contact, m, n)? {
            DimCheck::Passes(w) => {
                log.push(format!("({m},{n}): necessary conditions hold ({} witness subsets)", w.len()));
                candidates.push((m, n));
            }
            DimCheck::Fails(why) => {
                log.push(why.clone());
                evidence.push(why);
            }
            DimCheck::Inconclusive(why) => {
                log.push(why.clone());
                reasons.push(why);
                candidates.push((m, n));
            }
        }
    }
    if candidates.is_empty() {
        let outcome = SplitOutcome::NonSplitting { evidence };
        return Ok(SplittingReport { degree: d, node_count: r, normalization: norm.matrix, log, outcome });
    }
    let f = pullback_curve(&norm.gamma)?;
    let done = |log, outcome| Ok(SplittingReport { degree: d, node_count: r, normalization: norm.matrix.clone(), log, outcome });
    for &(m, n) in &candidates {
        match factor_pullback_over(&f, m, n, None, opts.pullback.grouping_cap) {
            Ok(Some(factor)) => {
                let certificate = extract_certificate(&norm.gamma, &factor.rational_part, &factor.scale.0)?
                    .map(|c| pull_back_certificate(&c, &norm.matrix, q))
                    .transpose()?;
                if let Some(c) = &certificate {
                    debug_assert!(verify_certificate(gamma, q, c)?);
                }
                log.push(format!("({m},{n}): rational factorization of the pullback verified"));
                return done(log, SplitOutcome::Split { m, n, factor, certificate });
            }
            Ok(None) => {}
            Err(Error::SearchBudgetExceeded(cap)) => reasons.push(format!("({m},{n}): more than {cap} factor groupings")),
            Err(e) => return Err(e),
        }
    }
    for &(m, n) in &candidates {
        for &e in &opts.pullback.extensions {
            match factor_pullback_over(&f, m, n, Some(e), opts.pullback.grouping_cap) {
                Ok(Some(factor)) => {
                    log.push(format!("({m},{n}): factorization over Q(sqrt({e})) verified"));
                    return done(log, SplitOutcome::Split { m, n, factor, certificate: None });
                }
                Ok(None) => {}
                Err(Error::SearchBudgetExceeded(cap)) => {
                    reasons.push(format!("({m},{n}): more than {cap} factor groupings over Q(sqrt({e}))"))
                }
                Err(err) => return Err(err),
            }
        }
        reasons.push(format!("({m},{n}): necessary conditions hold but no factorization was found"));
    }
    reasons.extend(evidence);
    done(log, SplitOutcome::Undetermined { reasons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{NumberField, UPoly};
    use crate::mpoly::{parse_form, plane_vars};

    fn pf(s: &str) -> Form {
        parse_form(s, &plane_vars()).unwrap()
    }

    fn rational_nodes(pts: &[[i64; 3]]) -> Vec<ProjPoint> {
        pts.iter().map(|c| ProjPoint::from_ints(c)).collect()
    }

    #[test]
    fn alpha_and_bound() {
        assert_eq!(alpha_of(3, 3), 6);
        assert_eq!(alpha_of(2, 4), 7);
        assert_eq!(alpha_of(1, 5), 10);
        assert!(!node_bound_filter(6, 2, 4, 6));
        assert!(node_bound_filter(7, 2, 4, 6));
        assert!(node_bound_filter(6, 3, 3, 6));
    }

    #[test]
    fn split_sextic() {
        let g = pf("(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2");
        let k = NumberField::new(&UPoly::from_ints(&[1, 3, 3, 1, 3, 3, 1])).unwrap();
        let p = ProjPoint::over(&k, &[UPoly::from_ints(&[0, 1]), UPoly::from_ints(&[-1, -3, 0, -1, -2, -1]), UPoly::from_ints(&[1])])
            .unwrap();
        let check = necessary_dim_check(std::slice::from_ref(&p), &ConicParam::standard(), &normalize(&g, &delta2(), &[], 10).unwrap().contact, 3, 3).unwrap();
        assert_eq!(check, DimCheck::Passes(vec![vec![0]]));
        let rep = splitting_type(&g, &delta2(), &[p], &SplitOptions::default()).unwrap();
        assert_eq!(rep.outcome.label(), "Split(3,3)");
        let SplitOutcome::Split { certificate: Some(c), .. } = &rep.outcome else { panic!() };
        assert!(verify_certificate(&g, &delta2(), c).unwrap());
    }

    #[test]
    fn nonsplit_sextic() {
        let g = pf("(2x^3-x^2y+3x^2z-2xy^2-4xz^2+y^3+yz^2)^2 - z*(x-y)*(2x-y)*(x+y-2z)*(z^2-4xy)");
        let nodes = rational_nodes(&[[1, 1, 0], [1, 2, 0], [1, -1, 0], [0, 0, 1], [1, 1, 1], [2, 4, 3]]);
        let rep = splitting_type(&g, &delta2(), &nodes, &SplitOptions::default()).unwrap();
        let SplitOutcome::NonSplitting { evidence } = &rep.outcome else { panic!("{:?}", rep.outcome) };
        assert_eq!(evidence, &["(3,3): no conic", "(2,4): bound 12 < 14", "(1,5): bound 12 < 20"]);
    }

    #[test]
    fn missing_nodes_rejected() {
        let g = pf("(2x^3-x^2y+3x^2z-2xy^2-4xz^2+y^3+yz^2)^2 - z*(x-y)*(2x-y)*(x+y-2z)*(z^2-4xy)");
        let nodes = rational_nodes(&[[1, 1, 0], [1, 2, 0]]);
        assert!(matches!(splitting_type(&g, &delta2(), &nodes, &SplitOptions::default()), Err(Error::InvalidInput(_))));
        assert_eq!(
            splitting_type(&g, &delta2(), &rational_nodes(&[[1, 0, 0]]), &SplitOptions::default()).unwrap_err(),
            Error::NotANode
        );
    }

    #[test]
    fn criterion_needs_seven() {
        let c = criterion_24_7nodal(&rational_nodes(&[[1, 0, 0]]), &delta2(), &ConicParam::standard(), &BinaryForm::from_ints(&[1]));
        assert_eq!(c.unwrap_err(), Error::WrongNodeCount { expected: 7, got: 1 });
    }
}
