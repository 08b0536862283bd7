//! End-to-end reports: built-in example verification and the ad hoc
//! analyses behind the command-line front end. Reports carry no timing or
//! other run-dependent data, so repeated runs render byte-identically.

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::Rat;
use crate::conic::{
    contact_profile, delta2, find_rational_point, parametrize_conic, ConicParam, ContactKind, DEFAULT_HEIGHT,
};
use crate::cover::pullback_curve;
use crate::curve::{irreducibility_sextic, singular_locus, singular_locus_complete_with, verify_node};
use crate::error::{Error, Result};
use crate::linsys::{cond_divisible_on_conic, cond_point, subsets, system_solve, Space};
use crate::mpoly::{BiForm, Form, ProjPoint};
use crate::nodefile::point_json;
use crate::quartic::{
    general_position_p3, project_quartic, surface_nodes_complete, syzygetic_test, verify_surface_node, GeneralPosition,
    QuarticSurface, Syzygetic,
};
use crate::registry::{example, surface_from_quadrics, Claim, ExampleRecord};
use crate::split::{
    criterion_24_7nodal, factor_pullback, normalize, splitting_type, verify_certificate, Criterion24,
    Criterion24Condition, PullbackOptions, SplitCertificate, SplitOptions, SplitOutcome, SplittingReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Contradiction,
    Undetermined,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Contradiction => 1,
            Status::Undetermined => 2,
        }
    }
}

/// Exit code for an error that aborted a command: computations that ran out
/// of their search budget count as undetermined, everything else as bad input.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::ShearExhausted(_) | Error::SearchBudgetExceeded(_) => 2,
        _ => 3,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub title: String,
    pub claimed: String,
    pub checks: Vec<Check>,
    pub outcome: String,
    pub evidence: Vec<String>,
    pub log: Vec<String>,
    pub factor: Option<String>,
    pub passed: bool,
    pub undetermined: bool,
}

impl VerificationReport {
    pub fn status(&self) -> Status {
        if self.passed {
            Status::Pass
        } else if self.checks.iter().any(|c| !c.passed && !self.undetermined) {
            Status::Contradiction
        } else {
            Status::Undetermined
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("example {}: {}\nclaimed: {}\n", self.id, self.title, self.claimed);
        for c in &self.checks {
            out += &format!("[{}] {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        out += &format!("outcome: {}\n", self.outcome);
        for e in &self.evidence {
            out += &format!("  evidence: {e}\n");
        }
        if let Some(f) = &self.factor {
            out += &format!("  factor: {f}\n");
        }
        out += &format!(
            "result: {}\n",
            match self.status() {
                Status::Pass => "PASS",
                Status::Contradiction => "FAIL",
                Status::Undetermined => "UNDETERMINED",
            }
        );
        out
    }
}

struct Checks(Vec<Check>);

impl Checks {
    /// Runs one check; an error counts as a failure with the error as detail.
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> bool {
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.0.push(Check { name: name.to_string(), passed, detail });
        passed
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub height: u64,
    pub seed_shear: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { height: DEFAULT_HEIGHT, seed_shear: 0 }
    }
}

fn conic_param(q: &Form, height: u64) -> Result<ConicParam> {
    if q.proportional_to(&delta2()).is_some() {
        return Ok(ConicParam::standard());
    }
    parametrize_conic(q, &find_rational_point(q, height)?)
}

fn node_checks(c: &mut Checks, e: &ExampleRecord, opts: &VerifyOptions) {
    let total: usize = e.nodes.iter().map(ProjPoint::orbit_size).sum();
    c.run("nodes", || {
        for p in &e.nodes {
            if !verify_node(&e.curve, p)?.is_node {
                return Ok((false, format!("{p} is not a node")));
            }
        }
        Ok((true, format!("{total} nodes in {} orbits", e.nodes.len())))
    });
    c.run("completeness", || {
        let ok = singular_locus_complete_with(&e.curve, &e.nodes, opts.seed_shear)?;
        Ok((ok, if ok { "no further singular points" } else { "singular locus differs from the node list" }.into()))
    });
    c.run("contact", || {
        let param = conic_param(&e.conic, opts.height)?;
        let p = contact_profile(&e.curve, &e.conic, &param)?;
        let ok = p.kind == ContactKind::SimpleContact && p.tangent_count == 6;
        Ok((ok, format!("{:?} with {} tangent points", p.kind, p.tangent_count)))
    });
    c.run("irreducible", || {
        let ok = irreducibility_sextic(&e.curve, &e.nodes)?;
        Ok((ok, if ok { "no five nodes on a line" } else { "five nodes on a line" }.into()))
    });
}

fn certificate_checks(c: &mut Checks, e: &ExampleRecord) {
    let Claim::Split { m, n, certificate: Some((cn, cn1)) } = &e.claim else { return };
    c.run("curve-identity", || {
        let rebuilt = &(cn * cn) - &(&e.conic * &(cn1 * cn1));
        let ok = rebuilt == e.curve;
        Ok((ok, format!("({cn})^2 - ({})*({cn1})^2 {} the curve", e.conic, if ok { "equals" } else { "differs from" })))
    });
    c.run("certificate", || {
        let cert = SplitCertificate {
            m: *m,
            n: *n,
            line: None,
            c_n: cn.clone(),
            c_n1: cn1.clone(),
            scale: Rat::from_integer(1.into()),
            conic_scale: Rat::from_integer(1.into()),
        };
        let ok = verify_certificate(&e.curve, &e.conic, &cert)?;
        Ok((ok, format!("type ({m},{n}) certificate {}", if ok { "verified" } else { "rejected" })))
    });
}

fn conic_system_dim(nodes: &[ProjPoint], subset: &[usize]) -> Result<i64> {
    let rows: Vec<_> = subset.iter().flat_map(|&i| cond_point(2, &nodes[i])).collect();
    Ok(system_solve(Space::plane(2), &rows)?.dim)
}

fn six_node_checks(c: &mut Checks, e: &ExampleRecord) {
    c.run("conic-system", || {
        let all: Vec<usize> = (0..e.nodes.len()).collect();
        let dim = conic_system_dim(&e.nodes, &all)?;
        Ok((dim == -1, format!("conics through the 6 nodes: dim {dim}")))
    });
}

fn node_conic_check(c: &mut Checks, e: &ExampleRecord) {
    let Some(q) = &e.node_conic else { return };
    c.run("node-conic", || {
        let mut on = 0;
        for p in &e.nodes {
            if p.vanishes(q)? {
                on += p.orbit_size();
            }
        }
        Ok((on == 6, format!("{on} nodes on {q}")))
    });
}

fn seven_nodal_nonsplit_checks(c: &mut Checks, e: &ExampleRecord, opts: &VerifyOptions) {
    c.run("six-node-conics", || {
        let mut dims = Vec::new();
        for s in subsets(7, 6) {
            dims.push(conic_system_dim(&e.nodes, &s)?);
        }
        let ok = dims.len() == 7 && dims.iter().all(|&d| d == -1);
        Ok((ok, format!("dims {dims:?}")))
    });
    let norm = match normalize(&e.curve, &e.conic, &e.nodes, opts.height) {
        Ok(n) => n,
        Err(err) => {
            c.run("quartic-system", || Err(err));
            return;
        }
    };
    let param = ConicParam::standard();
    c.run("quartic-system", || {
        let mut rows: Vec<_> = norm.nodes.iter().flat_map(|p| cond_point(4, p)).collect();
        rows.extend(cond_divisible_on_conic(4, &param, &norm.contact)?);
        let dim = system_solve(Space::plane(4), &rows)?.dim;
        Ok((dim == 1, format!("quartics through the nodes and the tangent points: dim {dim}")))
    });
    c.run("criterion-24", || {
        Ok(match criterion_24_7nodal(&norm.nodes, &delta2(), &param, &norm.contact)? {
            Criterion24::FailsWith { condition, detail } => {
                (condition == Criterion24Condition::IiiB, format!("fails ({}): {detail}", condition.label()))
            }
            Criterion24::Holds { quartic_dim, .. } => (false, format!("holds (quartic dim {quartic_dim})")),
        })
    });
}

/// `u^2 pi*b2 - uv pi*c2 + v^2 pi*a2`.
fn expected_24_factor(q: &[Form; 3]) -> Result<BiForm> {
    let (u, v) = (BiForm::u(), BiForm::v());
    let [a2, b2, c2] = q.each_ref().map(pullback_curve);
    Ok(&(&(&(&u * &u) * &b2?) - &(&(&u * &v) * &c2?)) + &(&(&v * &v) * &a2?))
}

fn surface_checks(c: &mut Checks, e: &ExampleRecord, opts: &VerifyOptions) {
    let Some(s) = &e.surface else { return };
    let f = s.surface.to_form();
    c.run("surface-equation", || {
        let ok = surface_from_quadrics(&s.quadrics) == f;
        Ok((ok, format!("f3^2 - 4 f1 f2 = {f}")))
    });
    c.run("surface-nodes", || {
        for p in &s.nodes {
            if !verify_surface_node(&f, p)?.is_node {
                return Ok((false, format!("{p} is not a node")));
            }
        }
        Ok((true, format!("{} nodes", s.nodes.len())))
    });
    c.run("surface-completeness", || {
        let ok = surface_nodes_complete(&s.surface, &s.nodes[1..], opts.height, opts.seed_shear)?;
        Ok((ok, if ok { "no further singular points" } else { "node list incomplete or wrong" }.into()))
    });
    c.run("general-position", || {
        let g = general_position_p3(&s.nodes)?;
        Ok((g == GeneralPosition::General, format!("{g:?}")))
    });
    c.run("syzygetic", || {
        Ok(match syzygetic_test(&f, &s.nodes)? {
            Syzygetic::Found { system, ternary, .. } => {
                let ok = system.dim == 2 && ternary.is_some();
                (ok, format!("quadrics through the 8 nodes: dim {}; ternary form found: {}", system.dim, ternary.is_some()))
            }
            Syzygetic::NotDetected => (false, "no 2-dimensional quadric system".into()),
        })
    });
    c.run("projection", || {
        let p = project_quartic(&s.surface, opts.height)?;
        let ok = p.delta == delta2() && p.gamma == e.curve && p.reduced && p.contact == Some(ContactKind::SimpleContact);
        let contact = p.contact.map_or("none".to_string(), |k| format!("{k:?}"));
        Ok((ok, format!("conic {}, contact {contact}", p.delta)))
    });
    c.run("pullback-factor", || {
        let pulled = pullback_curve(&e.curve)?;
        let Some(found) = factor_pullback(&pulled, 2, 4, &PullbackOptions::default())? else {
            return Ok((false, "no (2,4) factor of the pullback".into()));
        };
        let expected = expected_24_factor(&s.quadrics)?;
        let matches = found.extension.is_none() && found.rational_part.proportional_to(&expected).is_some();
        // with a1 = x in place of a2 the last summand has bidegree (1,3)
        let alt = &BiForm::v().pow(2) * &pullback_curve(&crate::mpoly::parse_form("x", &crate::mpoly::plane_vars())?)?;
        let alt_rejected = alt.bidegree() != expected.bidegree();
        Ok((
            matches && alt_rejected && found.verify(&pulled),
            format!(
                "factor proportional to u^2 pi*b2 - uv pi*c2 + v^2 pi*a2: {matches}; reading with a1 is not bihomogeneous of bidegree (2,4): {alt_rejected}"
            ),
        ))
    });
    c.run("criterion-24", || {
        let norm = normalize(&e.curve, &e.conic, &e.nodes, opts.height)?;
        Ok(match criterion_24_7nodal(&norm.nodes, &delta2(), &ConicParam::standard(), &norm.contact)? {
            Criterion24::Holds { quartic_dim, collinear_triples } => {
                (true, format!("holds (quartic dim {quartic_dim}, {collinear_triples} collinear triples)"))
            }
            Criterion24::FailsWith { condition, detail } => (false, format!("fails ({}): {detail}", condition.label())),
        })
    });
}

fn factor_string(o: &SplitOutcome) -> Option<String> {
    match o {
        SplitOutcome::Split { factor, .. } => Some(match factor.extension {
            None => factor.rational_part.to_string(),
            Some(e) => format!("({}) + sqrt({e})*({})", factor.rational_part, factor.irrational_part),
        }),
        _ => None,
    }
}

pub fn run_verify_example(id: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    let e = example(id)?;
    let mut c = Checks(Vec::new());
    node_checks(&mut c, &e, opts);
    certificate_checks(&mut c, &e);
    node_conic_check(&mut c, &e);
    match e.id {
        "nonsplit6a" | "nonsplit6b" => six_node_checks(&mut c, &e),
        "nonsplit7" => seven_nodal_nonsplit_checks(&mut c, &e, opts),
        _ => {}
    }
    surface_checks(&mut c, &e, opts);

    let split_opts = SplitOptions { height: opts.height, seed_shear: opts.seed_shear, check_nodes: false, ..Default::default() };
    let claimed = e.claim.label();
    let (outcome, evidence, log, factor, undetermined) = match splitting_type(&e.curve, &e.conic, &e.nodes, &split_opts) {
        Ok(r) => {
            let undetermined = matches!(r.outcome, SplitOutcome::Undetermined { .. });
            let evidence = match &r.outcome {
                SplitOutcome::NonSplitting { evidence } => evidence.clone(),
                SplitOutcome::Undetermined { reasons } => reasons.clone(),
                SplitOutcome::Split { .. } => Vec::new(),
            };
            let label = r.outcome.label();
            let ok = label == claimed
                && match &e.claim {
                    Claim::NonSplitting { evidence: want } => sorted(want) == sorted(&evidence),
                    Claim::Split { .. } => true,
                };
            c.0.push(Check {
                name: "splitting-type".into(),
                passed: ok,
                detail: format!("{label} (claimed {claimed})"),
            });
            (label, evidence, r.log, factor_string(&r.outcome), undetermined)
        }
        Err(err) => {
            let undetermined = error_exit_code(&err) == 2;
            c.0.push(Check { name: "splitting-type".into(), passed: false, detail: format!("error: {err}") });
            ("Undetermined".into(), vec![err.to_string()], Vec::new(), None, undetermined)
        }
    };
    let passed = c.0.iter().all(|x| x.passed);
    let undetermined = undetermined && c.0.iter().filter(|x| !x.passed).all(|x| x.name == "splitting-type");
    Ok(VerificationReport {
        id: e.id.to_string(),
        title: e.title.to_string(),
        claimed,
        checks: c.0,
        outcome,
        evidence,
        log,
        factor,
        passed,
        undetermined,
    })
}

fn sorted(v: &[String]) -> Vec<String> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Result of one of the ad hoc commands: ordered key/value pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub entries: Vec<(String, Value)>,
    pub status: Status,
}

impl CommandReport {
    fn new(command: &str) -> Self {
        CommandReport { command: command.to_string(), entries: Vec::new(), status: Status::Pass }
    }

    fn put(&mut self, key: &str, v: Value) {
        self.entries.push((key.to_string(), v));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> String {
        let mut m = serde_json::Map::new();
        m.insert("command".into(), json!(self.command));
        for (k, v) in &self.entries {
            m.insert(k.clone(), v.clone());
        }
        m.insert("status".into(), json!(self.status));
        serde_json::to_string_pretty(&Value::Object(m)).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (k, v) in &self.entries {
            match v {
                Value::String(s) => out += &format!("{k}: {s}\n"),
                Value::Array(items) if items.iter().all(Value::is_string) && !items.is_empty() => {
                    out += &format!("{k}:\n");
                    for i in items {
                        out += &format!("  {}\n", i.as_str().map(str::to_string).unwrap_or_else(|| i.to_string()));
                    }
                }
                other => out += &format!("{k}: {other}\n"),
            }
        }
        out += &format!("status: {:?}\n", self.status).to_lowercase();
        out
    }
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|x| Value::String(x.to_string())).collect())
}

fn put_splitting(r: &mut CommandReport, s: &SplittingReport) {
    r.put("outcome", json!(s.outcome.label()));
    match &s.outcome {
        SplitOutcome::Split { factor, certificate, .. } => {
            r.put("factor", json!(factor_string(&s.outcome)));
            r.put("factor_scale", strings([&factor.scale.0, &factor.scale.1]));
            if let Some(c) = certificate {
                let line = c.line.as_ref().map(|l| l.to_string());
                r.put(
                    "certificate",
                    json!({
                        "identity": "scale * curve * line^k = c_n^2 - conic_scale * conic * c_(n-1)^2",
                        "line": line,
                        "c_n": c.c_n.to_string(),
                        "c_n1": c.c_n1.to_string(),
                        "scale": c.scale.to_string(),
                        "conic_scale": c.conic_scale.to_string(),
                    }),
                );
            }
        }
        SplitOutcome::NonSplitting { evidence } => r.put("evidence", strings(evidence)),
        SplitOutcome::Undetermined { reasons } => {
            r.put("reasons", strings(reasons));
            r.status = Status::Undetermined;
        }
    }
    r.put("log", strings(&s.log));
}

/// Contact profile, singular locus (found or checked against `nodes`) and,
/// for nodal curves, the splitting type.
pub fn analyze(curve: &Form, conic: &Form, nodes: Option<&[ProjPoint]>, opts: &VerifyOptions) -> Result<CommandReport> {
    let mut r = CommandReport::new("analyze");
    r.put("curve", json!(curve.to_string()));
    r.put("conic", json!(conic.to_string()));
    r.put("degree", json!(curve.degree()));
    let param = conic_param(conic, opts.height)?;
    let profile = contact_profile(curve, conic, &param)?;
    r.put("contact", json!(format!("{:?}", profile.kind)));
    r.put("tangent_points", json!(profile.tangent_count));
    let nodes: Vec<ProjPoint> = match nodes {
        Some(n) => {
            let complete = singular_locus_complete_with(curve, n, opts.seed_shear)?;
            r.put("nodes_complete", json!(complete));
            if !complete {
                r.status = Status::Contradiction;
            }
            n.to_vec()
        }
        None => singular_locus(curve, opts.seed_shear)?.orbits,
    };
    let mut all_nodes = true;
    for p in &nodes {
        all_nodes &= verify_node(curve, p)?.is_node;
    }
    r.put("singular_points", Value::Array(nodes.iter().map(point_json).collect()));
    r.put("singular_count", json!(nodes.iter().map(ProjPoint::orbit_size).sum::<usize>()));
    r.put("all_nodes", json!(all_nodes));
    if !all_nodes {
        if r.get("nodes_complete").is_some() {
            r.status = Status::Contradiction;
        }
        return Ok(r);
    }
    if curve.degree() == 6 && nodes.iter().map(ProjPoint::orbit_size).sum::<usize>() <= 7 {
        r.put("irreducible", json!(irreducibility_sextic(curve, &nodes)?));
    }
    if profile.kind == ContactKind::SimpleContact && r.status == Status::Pass {
        let s = splitting_type(curve, conic, &nodes, &split_options(opts, false))?;
        put_splitting(&mut r, &s);
    }
    Ok(r)
}

fn split_options(opts: &VerifyOptions, check_nodes: bool) -> SplitOptions {
    SplitOptions { height: opts.height, seed_shear: opts.seed_shear, check_nodes, ..Default::default() }
}

pub fn split_type(curve: &Form, conic: &Form, nodes: &[ProjPoint], opts: &VerifyOptions) -> Result<CommandReport> {
    let mut r = CommandReport::new("split-type");
    let mut not_nodes = Vec::new();
    for (i, p) in nodes.iter().enumerate() {
        if !verify_node(curve, p)?.is_node {
            not_nodes.push(i);
        }
    }
    let complete = not_nodes.is_empty() && singular_locus_complete_with(curve, nodes, opts.seed_shear)?;
    r.put("nodes_verified", json!(not_nodes.is_empty()));
    r.put("nodes_complete", json!(complete));
    if !complete {
        if !not_nodes.is_empty() {
            r.put("not_nodes", json!(not_nodes));
        }
        r.status = Status::Contradiction;
        return Ok(r);
    }
    let s = splitting_type(curve, conic, nodes, &split_options(opts, false))?;
    r.put("node_count", json!(s.node_count));
    put_splitting(&mut r, &s);
    Ok(r)
}

/// Pullback along the cover branched over `z^2 - 4xy` and the first
/// factorization `F = c A sigma(A)` found, types tried from `(d/2, d/2)` down.
pub fn pullback(curve: &Form) -> Result<CommandReport> {
    let mut r = CommandReport::new("pullback");
    let f = pullback_curve(curve)?;
    r.put("pullback", json!(f.to_string()));
    r.put("bidegree", json!(f.bidegree()));
    let d = curve.degree();
    let opts = PullbackOptions::default();
    for m in (1..=d / 2).rev() {
        if let Some(found) = factor_pullback(&f, m, d - m, &opts)? {
            let outcome = SplitOutcome::Split { m, n: d - m, factor: found.clone(), certificate: None };
            r.put("factor_type", json!([m, d - m]));
            r.put("factor", json!(factor_string(&outcome)));
            r.put("factor_scale", strings([&found.scale.0, &found.scale.1]));
            r.put("verified", json!(found.verify(&f)));
            return Ok(r);
        }
    }
    r.put("factor", Value::Null);
    Ok(r)
}

pub fn project(g2: &Form, g3: &Form, g4: &Form, opts: &VerifyOptions) -> Result<CommandReport> {
    let mut r = CommandReport::new("project-quartic");
    let x = QuarticSurface::new(g2.clone(), g3.clone(), g4.clone())?;
    r.put("surface", json!(x.to_form().to_string()));
    let p = project_quartic(&x, opts.height)?;
    r.put("branch_curve", json!(p.gamma.to_string()));
    r.put("branch_conic", json!(p.delta.to_string()));
    r.put("reduced", json!(p.reduced));
    r.put("contact", json!(p.contact.map(|k| format!("{k:?}"))));
    Ok(r)
}

pub fn syzygetic(surface: &Form, nodes: &[ProjPoint]) -> Result<CommandReport> {
    let mut r = CommandReport::new("syzygetic");
    for (i, p) in nodes.iter().enumerate() {
        if !verify_surface_node(surface, p)?.is_node {
            r.put("not_a_node", json!(i));
            r.status = Status::Contradiction;
            return Ok(r);
        }
    }
    if nodes.len() >= 8 {
        let g = general_position_p3(&nodes[..8])?;
        r.put("first_eight_general", json!(g == GeneralPosition::General));
    }
    match syzygetic_test(surface, nodes)? {
        Syzygetic::Found { subset, system, ternary } => {
            r.put("syzygetic", json!(true));
            r.put("assigned_nodes", json!(subset));
            r.put("quadric_system_dim", json!(system.dim));
            r.put("quadrics", strings(system.kernel_forms(&crate::mpoly::space_vars())));
            r.put("ternary_form", json!(ternary.map(|t| t.iter().map(Rat::to_string).collect::<Vec<_>>())));
        }
        Syzygetic::NotDetected => r.put("syzygetic", json!(false)),
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split6_report_passes() {
        let r = run_verify_example("split6", &VerifyOptions::default()).unwrap();
        assert!(r.passed, "{}", r.to_text());
        assert_eq!(r.outcome, "Split(3,3)");
        assert_eq!(r.status().exit_code(), 0);
        let again = run_verify_example("split6", &VerifyOptions::default()).unwrap();
        assert_eq!(r.to_json(), again.to_json());
    }

    #[test]
    fn unknown_example() {
        assert_eq!(run_verify_example("x", &VerifyOptions::default()).unwrap_err(), Error::UnknownExample("x".into()));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(error_exit_code(&Error::ShearExhausted(20)), 2);
        assert_eq!(error_exit_code(&Error::Syntax { pos: 0, msg: "x".into() }), 3);
    }
}
