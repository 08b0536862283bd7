//! Built-in worked examples: sextics with a contact conic, their nodes
//! (rational points or Galois orbits) and the claimed splitting behaviour.

use crate::arith::{NumberField, UPoly};
use crate::error::{Error, Result};
use crate::mpoly::{parse_form, parse_upoly, plane_vars, space_vars, Form, ProjPoint};
use crate::quartic::{syzygetic_build, QuarticSurface};

pub const EXAMPLE_IDS: [&str; 6] = ["split6", "nonsplit6a", "nonsplit6b", "split7-33", "split7-24", "nonsplit7"];

#[derive(Debug, Clone, PartialEq)]
pub enum Claim {
    /// Split of type `(m,n)`; for `m = n` with the certificate pair `(c_n, c_{n-1})`.
    Split { m: u32, n: u32, certificate: Option<(Form, Form)> },
    /// Not splitting; the expected evidence lines.
    NonSplitting { evidence: Vec<String> },
}

impl Claim {
    pub fn label(&self) -> String {
        match self {
            Claim::Split { m, n, .. } => format!("Split({m},{n})"),
            Claim::NonSplitting { .. } => "NonSplitting".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SurfaceData {
    pub surface: QuarticSurface,
    /// All nodes, the distinguished one `(0:0:0:1)` first.
    pub nodes: Vec<ProjPoint>,
    /// The quadrics `(a2, b2, c2)` of the syzygetic build.
    pub quadrics: [Form; 3],
}

#[derive(Debug, Clone)]
pub struct ExampleRecord {
    pub id: &'static str,
    pub title: &'static str,
    pub curve: Form,
    pub conic: Form,
    /// One point per Galois orbit.
    pub nodes: Vec<ProjPoint>,
    pub claim: Claim,
    /// A conic claimed to pass through six of the nodes (split7-33).
    pub node_conic: Option<Form>,
    pub surface: Option<SurfaceData>,
}

fn pf(s: &str) -> Form {
    parse_form(s, &plane_vars()).expect("registry form parses")
}

fn rational(points: &[[i64; 3]]) -> Vec<ProjPoint> {
    points.iter().map(|c| ProjPoint::from_ints(c)).collect()
}

fn orbit(minpoly: &str, coords: &[&str]) -> ProjPoint {
    let k = NumberField::new(&parse_upoly(minpoly, "a").unwrap()).unwrap();
    let cs: Vec<UPoly<_>> = coords.iter().map(|c| parse_upoly(c, "a").unwrap()).collect();
    ProjPoint::over(&k, &cs).unwrap()
}

fn no_split_evidence(lines: &[&str]) -> Claim {
    Claim::NonSplitting { evidence: lines.iter().map(|s| s.to_string()).collect() }
}

pub fn example(id: &str) -> Result<ExampleRecord> {
    let delta = pf("z^2-4*x*y");
    Ok(match id {
        "split6" => ExampleRecord {
            id: "split6",
            title: "6-nodal sextic of type (3,3)",
            curve: pf("(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2"),
            conic: delta,
            nodes: vec![orbit("a^6+3*a^5+3*a^4+a^3+3*a^2+3*a+1", &["a", "-a^5-2*a^4-a^3-3*a-1", "1"])],
            claim: Claim::Split { m: 3, n: 3, certificate: Some((pf("x^3+y^3+z^3"), pf("x*y+y*z+z*x"))) },
            node_conic: None,
            surface: None,
        },
        "nonsplit6a" => {
            let c3 = "2*x^3-x^2*y+3*x^2*z-2*x*y^2-4*x*z^2+y^3+y*z^2";
            ExampleRecord {
                id: "nonsplit6a",
                title: "6-nodal sextic, non-splitting (first)",
                curve: pf(&format!("({c3})^2-z*(x-y)*(2*x-y)*(x+y-2*z)*(z^2-4*x*y)")),
                conic: delta,
                nodes: rational(&[[1, 1, 0], [1, 2, 0], [1, -1, 0], [0, 0, 1], [1, 1, 1], [2, 4, 3]]),
                claim: no_split_evidence(&["(3,3): no conic", "(2,4): bound 12 < 14", "(1,5): bound 12 < 20"]),
                node_conic: None,
                surface: None,
            }
        }
        "nonsplit6b" => {
            let c3 = "3328*x^3+1392*x^2*y-672*x^2*z+180*x*y^2-516*x*y*z-180*x*z^2+10*y^3-33*y^2*z-45*y*z^2";
            let c4 = "10496*x^4+6272*x^3*y-2528*x^3*z+1200*x^2*y^2-912*x^2*y*z+1176*x^2*z^2+80*x*y^3\
                      -90*x*y^2*z+246*x*y*z^2+2*y^4-5*y^3*z+15*y^2*z^2";
            ExampleRecord {
                id: "nonsplit6b",
                title: "6-nodal sextic, non-splitting (second)",
                curve: pf(&format!("({c3})^2-432*(z^2-4*x*y)*({c4})")),
                conic: delta,
                nodes: rational(&[[0, 0, 1], [0, 3, 2], [-1, 4, 0], [-1, 10, 6], [-1, 16, 8], [-3, 36, 28]]),
                claim: no_split_evidence(&["(3,3): no conic", "(2,4): bound 12 < 14", "(1,5): bound 12 < 20"]),
                node_conic: None,
                surface: None,
            }
        }
        "split7-33" => {
            let c3 = "y^2*z-3*x*y*z+z^3-x^2*z";
            let c2 = "z^2-x*y-y^2+x^2";
            ExampleRecord {
                id: "split7-33",
                title: "7-nodal sextic of type (3,3)",
                curve: pf(&format!("({c3})^2-(z^2-4*x*y)*({c2})^2")),
                conic: delta,
                nodes: vec![
                    ProjPoint::from_ints(&[0, 0, 1]),
                    orbit("4*a^4+2*a^2-1", &["a", "2*a^3+a", "1"]),
                    orbit("a^2-a-1", &["a", "1", "0"]),
                ],
                claim: Claim::Split { m: 3, n: 3, certificate: Some((pf(c3), pf(c2))) },
                node_conic: Some(pf(c2)),
                surface: None,
            }
        }
        "split7-24" => {
            let quadrics = [pf("-y^2+z^2"), pf("-x^2+z^2"), pf("-x^2+y^2")];
            let surface = syzygetic_build(&quadrics[0], &quadrics[1], &quadrics[2])?;
            let g = &surface;
            let curve = &(&g.g3 * &g.g3) - &(&g.g2 * &g.g4);
            let all: Vec<[i64; 4]> =
                vec![[0, 0, 0, 1], [0, 1, 1, -1], [-1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0], [-1, 1, 1, 0], [1, -1, 1, 0], [1, 1, -1, 0]];
            let nodes4: Vec<ProjPoint> = all.iter().map(|c| ProjPoint::from_ints(c)).collect();
            let nodes = nodes4[1..].iter().map(|p| p.project_last().unwrap()).collect();
            ExampleRecord {
                id: "split7-24",
                title: "7-nodal sextic of type (2,4), branch curve of a syzygetic quartic",
                curve,
                conic: delta,
                nodes,
                claim: Claim::Split { m: 2, n: 4, certificate: None },
                node_conic: None,
                surface: Some(SurfaceData { surface: surface.clone(), nodes: nodes4, quadrics }),
            }
        }
        "nonsplit7" => {
            let c2 = "-61*x^2+20*x*y+4*x*z+4*y^2-4*y*z+z^2";
            let c3 = "-13*x^2*y+168*x^2*z-74*x*y*z-8*x*z^2-8*y^2*z+7*y*z^2";
            let c4 = "x^2*y^2+16*x^2*y*z-112*x^2*z^2-4*x*y^2*z+64*x*y*z^2-y^2*z^2";
            ExampleRecord {
                id: "nonsplit7",
                title: "7-nodal sextic, non-splitting",
                curve: pf(&format!("({c3})^2-4*({c2})*({c4})")),
                conic: pf(c2),
                nodes: rational(&[[0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 1], [1, -2, 1], [-1, 6, 3], [1, 2, -3]]),
                claim: no_split_evidence(&[
                    "(3,3): no conic",
                    "(2,4): criterion fails (iii-b): dim 1 < 2",
                    "(1,5): bound 14 < 20",
                ]),
                node_conic: None,
                surface: None,
            }
        }
        other => return Err(Error::UnknownExample(other.to_string())),
    })
}

/// The surface form `f3^2 - 4 f1 f2` written directly from
/// `f1 = xw + a2`, `f2 = yw + b2`, `f3 = zw + c2`.
pub fn surface_from_quadrics(q: &[Form; 3]) -> Form {
    let v = space_vars();
    let lift = |f: &Form| parse_form(&f.to_string(), &v).unwrap();
    let f1 = &parse_form("x*w", &v).unwrap() + &lift(&q[0]);
    let f2 = &parse_form("y*w", &v).unwrap() + &lift(&q[1]);
    let f3 = &parse_form("z*w", &v).unwrap() + &lift(&q[2]);
    &(&f3 * &f3) - &(&f1 * &f2).scale(&crate::arith::rat(4))
}
