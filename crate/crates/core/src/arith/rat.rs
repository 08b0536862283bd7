use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// max(|num|, den)
pub fn height(r: &Rat) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

/// Exact square root, if `r` is the square of a rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_zero() {
        return Some(Rat::zero());
    }
    Some(Rat::new(int_sqrt(r.numer())?, int_sqrt(r.denom())?))
}

/// Parses `n` or `n/d`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(ratio(2, 4), ratio(-3, -6));
        assert_eq!(ratio(2, -4).denom(), &BigInt::from(2));
        assert_eq!(ratio(0, 7), rat(0));
        assert_eq!(ratio(0, 7).denom(), &BigInt::from(1));
    }

    #[test]
    fn sqrt() {
        assert_eq!(rat_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rat_sqrt(&ratio(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-4)), None);
    }

    #[test]
    fn parse() {
        assert_eq!(parse_rat("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(height(&ratio(-7, 3)), BigInt::from(7));
    }
}
