//! The double cover `P^1 x P^1 -> P^2`, `(s:t, u:v) -> (su : tv : sv+tu)`,
//! branched along `z^2 - 4xy`.

use crate::arith::rat;
use crate::error::Result;
use crate::mpoly::{plane_vars, BiForm, Form};

/// Images of `x, y, z` under the cover map.
pub fn cover_map() -> [BiForm; 3] {
    let (s, t, u, v) = (BiForm::s(), BiForm::t(), BiForm::u(), BiForm::v());
    [&s * &u, &t * &v, &(&s * &v) + &(&t * &u)]
}

/// `r = sv - tu`; its square is the pullback of the branch conic.
pub fn ramification_form() -> BiForm {
    &(&BiForm::s() * &BiForm::v()) - &(&BiForm::t() * &BiForm::u())
}

pub fn pullback_curve(gamma: &Form) -> Result<BiForm> {
    gamma.compose_bi(&cover_map())
}

pub fn involution_biform(f: &BiForm) -> BiForm {
    f.involution()
}

/// Pullback of a linear form `a x + b y + c z` splits as `l+ * l-` when the
/// line is tangent to the branch conic; for the tangent line at the conic
/// parameter `(1:j)`, `l = j^2 x + y - j z` and `l+ = j s - t`.
pub fn tangent_line_at(j: i64) -> (Form, BiForm) {
    let terms = [(vec![1, 0, 0], rat(j * j)), (vec![0, 1, 0], rat(1)), (vec![0, 0, 1], rat(-j))];
    let l = Form::from_terms(&plane_vars(), 1, terms).unwrap();
    let lplus = &BiForm::s().scale(&rat(j)) - &BiForm::t();
    (l, lplus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::delta2;
    use crate::mpoly::parse_form;

    #[test]
    fn branch_conic_pulls_back_to_square() {
        let r = ramification_form();
        assert_eq!(pullback_curve(&delta2()).unwrap(), &r * &r);
        assert_eq!(involution_biform(&r), -&r);
    }

    #[test]
    fn x_pulls_back_to_su() {
        let x = parse_form("x", &plane_vars()).unwrap();
        assert_eq!(pullback_curve(&x).unwrap(), &BiForm::s() * &BiForm::u());
    }

    #[test]
    fn tangent_lines_split() {
        for j in -3..=3 {
            let (l, lp) = tangent_line_at(j);
            let lm = lp.involution();
            assert_eq!(pullback_curve(&l).unwrap(), &lp * &lm);
        }
    }

    #[test]
    fn sextic_pullback_factors() {
        let c3 = parse_form("x^3+y^3+z^3", &plane_vars()).unwrap();
        let c2 = parse_form("x*y+y*z+z*x", &plane_vars()).unwrap();
        let g = &(&c3 * &c3) - &(&delta2() * &(&c2 * &c2));
        let (p3, p2) = (pullback_curve(&c3).unwrap(), pullback_curve(&c2).unwrap());
        let r = ramification_form();
        let a = &p3 + &(&r * &p2);
        let b = &p3 - &(&r * &p2);
        assert_eq!(pullback_curve(&g).unwrap(), &a * &b);
        assert_eq!(a.involution(), b);
    }
}
