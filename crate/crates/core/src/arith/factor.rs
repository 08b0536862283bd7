//! Factorization over Q: squarefree decomposition, then Zassenhaus
//! (modular factorization at one good prime, Hensel lifting, recombination).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{int, Rat, UPoly};
use crate::error::{Error, Result};

pub const MAX_FACTOR_DEGREE: usize = 24;

/// Irreducible monic factors with multiplicities; their product equals `p`
/// up to a rational unit. Deterministic order: by degree, then coefficients.
pub fn upoly_factor(p: &UPoly<Rat>) -> Result<Vec<(UPoly<Rat>, usize)>> {
    let deg = match p.degree() {
        None => return Err(Error::InvalidInput("cannot factor the zero polynomial".into())),
        Some(d) => d,
    };
    if deg > MAX_FACTOR_DEGREE {
        return Err(Error::DegreeTooLarge { degree: deg, bound: MAX_FACTOR_DEGREE });
    }
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_parts() {
        for f in zassenhaus(primitive_int(&part)) {
            let q = UPoly::new(f.iter().map(int).collect()).monic();
            out.push((q, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(out)
}

/// Primitive integer multiple with positive leading coefficient.
fn primitive_int(p: &UPoly<Rat>) -> Vec<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let v: Vec<BigInt> = p.coeffs().iter().map(|c| (c * int(&den)).to_integer()).collect();
    primitive(v)
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return v;
    }
    let sign = if v.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let g = g * sign;
    v.into_iter().map(|c| c / &g).collect()
}

fn zassenhaus(f: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    if f[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(zassenhaus(f[1..].to_vec()));
        return out;
    }
    let lc = f[n].clone();
    // a few good primes; keep the one with the fewest modular factors
    let mut best: Option<(u64, Vec<Zp>)> = None;
    let mut good = 0;
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15);
    for p in (3u64..).step_by(2).filter(|&q| is_prime(q)) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = zp_monic(&zp_from(&f, p), p);
        if zp_gcd(&fp, &zp_deriv(&fp, p), p).len() != 1 {
            continue;
        }
        let facs = zp_factor(&fp, p, &mut rng);
        if facs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        good += 1;
        if good == 3 {
            break;
        }
    }
    let (p, facs) = best.unwrap();

    // coefficient bound for lc * (any factor)
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = lc.abs() * (BigInt::one() << n) * (norm2.sqrt() + 1u32);
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    let mut k = 1u32;
    while pk <= &bound * 2u32 {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_multi(&f, &facs, p, k, &pk);

    let mut remaining = lifted;
    let mut f_cur = f;
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = None;
        for combo in combinations(remaining.len(), s) {
            let lc_cur = f_cur.last().unwrap().clone();
            let mut cand = vec![lc_cur];
            for &i in &combo {
                cand = mod_reduce(&poly_mul(&cand, &remaining[i]), &pk);
            }
            let cand: Vec<BigInt> = cand.into_iter().map(|c| symmetric(c, &pk)).collect();
            let cand = primitive(trim_int(cand));
            if let Some(q) = int_div_exact(&f_cur, &cand) {
                found = Some((combo, cand, q));
                break;
            }
        }
        match found {
            Some((combo, cand, q)) => {
                out.push(cand);
                f_cur = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => s += 1,
        }
    }
    if f_cur.len() > 1 {
        out.push(primitive(f_cur));
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn trim_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn symmetric(c: BigInt, m: &BigInt) -> BigInt {
    let c = c.mod_floor(m);
    if &c * 2u32 > *m {
        c - m
    } else {
        c
    }
}

fn mod_reduce(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    v.iter().map(|c| c.mod_floor(m)).collect()
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn int_div_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    if g.len() > f.len() {
        return None;
    }
    let gl = g.last().unwrap();
    if !(f[0].is_zero() || (!g[0].is_zero() && (&f[0] % &g[0]).is_zero())) {
        return None;
    }
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - g.len() + 1];
    for i in (0..q.len()).rev() {
        let top = &r[i + g.len() - 1];
        let (qi, rem) = top.div_rem(gl);
        if !rem.is_zero() {
            return None;
        }
        for (j, gj) in g.iter().enumerate() {
            r[i + j] -= &qi * gj;
        }
        q[i] = qi;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

// ---- dense polynomials over Z/p, constant term first, trimmed ----

type Zp = Vec<u64>;

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

fn zp_trim(mut v: Zp) -> Zp {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn zp_from(f: &[BigInt], p: u64) -> Zp {
    let pb = BigInt::from(p);
    zp_trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn zp_sub(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    zp_trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p).collect())
}

fn zp_mul(a: &Zp, b: &Zp, p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + x * y) % p;
        }
    }
    zp_trim(v)
}

fn zp_divrem(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.clone());
    }
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for i in (db..a.len()).rev() {
        let c = r[i] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let k = i - db + j;
            r[k] = (r[k] + p - c * bj % p) % p;
        }
        q[i - db] = c;
    }
    r.truncate(db);
    (zp_trim(q), zp_trim(r))
}

fn zp_monic(a: &Zp, p: u64) -> Zp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|c| c * inv % p).collect()
        }
    }
}

fn zp_gcd(a: &Zp, b: &Zp, p: u64) -> Zp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = zp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    zp_monic(&a, p)
}

/// (s, t) with s*a + t*b = 1 for coprime a, b.
fn zp_bezout(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(r0[0], p);
    let sc = |v: Zp| zp_trim(v.iter().map(|c| c * inv % p).collect());
    (sc(s0), sc(t0))
}

fn zp_deriv(a: &Zp, p: u64) -> Zp {
    zp_trim(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
}

fn zp_powmod(base: &Zp, e: &BigUint, m: &Zp, p: u64) -> Zp {
    let mut r = vec![1u64];
    let b = zp_divrem(base, m, p).1;
    for i in (0..e.bits()).rev() {
        r = zp_divrem(&zp_mul(&r, &r, p), m, p).1;
        if e.bit(i) {
            r = zp_divrem(&zp_mul(&r, &b, p), m, p).1;
        }
    }
    r
}

/// Complete factorization of a monic squarefree polynomial mod p.
fn zp_factor(f: &Zp, p: u64, rng: &mut XorShift) -> Vec<Zp> {
    let x: Zp = vec![0, 1];
    let pe = BigUint::from(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 0;
    while rest.len() > 2 * (d + 1) {
        d += 1;
        h = zp_powmod(&h, &pe, &rest, p);
        let g = zp_gcd(&zp_sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            rest = zp_divrem(&rest, &g, p).0;
            h = zp_divrem(&h, &rest, p).1;
            out.extend(equal_degree(&g, d, p, rng));
        }
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out.sort();
    out
}

fn equal_degree(g: &Zp, d: usize, p: u64, rng: &mut XorShift) -> Vec<Zp> {
    let n = g.len() - 1;
    if n == d {
        return vec![g.clone()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = zp_trim((0..n).map(|_| rng.next() % p).collect());
        if a.len() < 2 {
            continue;
        }
        let b = zp_sub(&zp_powmod(&a, &e, g, p), &vec![1], p);
        let h = zp_gcd(&b, g, p);
        if h.len() > 1 && h.len() < g.len() {
            let q = zp_divrem(g, &h, p).0;
            let mut out = equal_degree(&h, d, p, rng);
            out.extend(equal_degree(&zp_monic(&q, p), d, p, rng));
            return out;
        }
    }
}

// ---- Hensel lifting ----

fn to_int(a: &Zp) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn int_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn int_add_scaled(a: &[BigInt], b: &Zp, s: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + s * BigInt::from(*b.get(i).unwrap_or(&0)))
        .collect()
}

/// Lifts `F = g*h (mod p)` (F monic mod p^k, g, h monic) to mod p^k.
fn hensel2(f: &[BigInt], g: &Zp, h: &Zp, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (s, _) = zp_bezout(g, h, p);
    let (mut gg, mut hh) = (to_int(g), to_int(h));
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let err = int_sub(f, &poly_mul(&gg, &hh));
        let e = zp_trim(
            err.iter()
                .map(|c| {
                    debug_assert!((c % &pj).is_zero());
                    (c / &pj).mod_floor(&pb).to_u64().unwrap()
                })
                .collect(),
        );
        // a*h + b*g = e with deg b < deg h
        let b = zp_divrem(&zp_mul(&s, &e, p), h, p).1;
        let a = zp_divrem(&zp_sub(&e, &zp_mul(&b, g, p), p), h, p).0;
        gg = int_add_scaled(&gg, &a, &pj);
        hh = int_add_scaled(&hh, &b, &pj);
        pj *= &pb;
    }
    (trim_int(gg), trim_int(hh))
}

fn hensel_multi(f: &[BigInt], facs: &[Zp], p: u64, k: u32, pk: &BigInt) -> Vec<Vec<BigInt>> {
    let lc_inv = f.last().unwrap().modinv(pk).expect("p does not divide lc");
    let mut cur: Vec<BigInt> = f.iter().map(|c| (c * &lc_inv).mod_floor(pk)).collect();
    let mut out = Vec::new();
    for i in 0..facs.len() - 1 {
        let rest = facs[i + 1..].iter().fold(vec![1u64], |acc, g| zp_mul(&acc, g, p));
        let (g, h) = hensel2(&cur, &facs[i], &rest, p, k);
        out.push(mod_reduce(&g, pk));
        cur = mod_reduce(&h, pk);
    }
    out.push(cur);
    out
}
