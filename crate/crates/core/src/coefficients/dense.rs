//! Dense polynomials over `Z[q]` and `Z[q][z]` used for gcd and exact division.

use super::int::Int;
use super::laurent::{LaurentPoly, Mono};

/// Polynomial in `q`, coefficient of `q^i` at index `i`, no trailing zeros.
pub(crate) type UPoly = Vec<Int>;

/// Polynomial in `z` with coefficients in `Z[q]`, no trailing zero coefficients.
pub(crate) type BPoly = Vec<UPoly>;

fn trim(p: &mut UPoly) {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
}

fn u_is_one(p: &UPoly) -> bool {
    p.len() == 1 && p[0].is_one()
}

fn u_content(p: &UPoly) -> Int {
    let mut g = Int::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_scale(p: &UPoly, k: &Int) -> UPoly {
    let mut r: UPoly = p.iter().map(|c| c * k).collect();
    trim(&mut r);
    r
}

fn u_div_int(p: &UPoly, k: &Int) -> UPoly {
    p.iter().map(|c| c.div_exact(k)).collect()
}

fn u_primitive(p: &UPoly) -> UPoly {
    let c = u_content(p);
    let mut r = if c.is_one() || c.is_zero() { p.clone() } else { u_div_int(p, &c) };
    if matches!(r.last(), Some(l) if l.is_negative()) {
        r = r.iter().map(|x| -x).collect();
    }
    r
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = &r[i + j] + &(x * y);
        }
    }
    trim(&mut r);
    r
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let zero = Int::zero();
    let mut r: UPoly = (0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect();
    trim(&mut r);
    r
}

/// Exact division in `Z[q]`; `None` if `b` does not divide `a`.
pub(crate) fn u_div(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let lb = b.last().unwrap();
    let mut quot = vec![Int::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        if !lb.divides(top) {
            return None;
        }
        let c = top.div_exact(lb);
        for (j, y) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &(&c * y);
        }
        quot[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        r = u_scale(&r, &lb);
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&lr * y);
        }
        trim(&mut r);
    }
    r
}

/// Gcd in `Z[q]` with positive leading coefficient.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return u_normalize_sign(a.clone());
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![c];
        }
        let r = u_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { u_primitive(&r) };
    }
    let mut g = u_scale(&u_primitive(&x), &c);
    g = u_normalize_sign(g);
    g
}

fn u_normalize_sign(p: UPoly) -> UPoly {
    if matches!(p.last(), Some(l) if l.is_negative()) {
        p.iter().map(|x| -x).collect()
    } else {
        p
    }
}

fn b_trim(p: &mut BPoly) {
    while matches!(p.last(), Some(c) if c.is_empty()) {
        p.pop();
    }
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if u_is_one(&g) {
            break;
        }
    }
    g
}

fn b_div_u(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter().map(|x| u_div(x, c).expect("content divides")).collect()
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        r = r.iter().map(|x| u_mul(x, &lb)).collect();
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = u_sub(&r[shift + j], &u_mul(&lr, y));
        }
        b_trim(&mut r);
    }
    r
}

fn b_primitive(p: &BPoly) -> BPoly {
    let c = b_content(p);
    if u_is_one(&c) {
        p.clone()
    } else {
        b_div_u(p, &c)
    }
}

/// Gcd in `Z[q][z]`, normalized so that the leading coefficient of the
/// leading `z` coefficient is positive.
pub(crate) fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() {
        return b_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return b_normalize_sign(a.clone());
    }
    let c = u_gcd(&b_content(a), &b_content(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let (mut x, mut y) = (b_primitive(a), b_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![c];
        }
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { b_primitive(&r) };
    }
    let g: BPoly = b_primitive(&x).iter().map(|u| u_mul(u, &c)).collect();
    b_normalize_sign(g)
}

fn b_normalize_sign(p: BPoly) -> BPoly {
    let neg = matches!(p.last().and_then(|u| u.last()), Some(l) if l.is_negative());
    if neg {
        p.iter().map(|u| u.iter().map(|x| -x).collect()).collect()
    } else {
        p
    }
}

pub(crate) fn b_is_one(p: &BPoly) -> bool {
    p.len() == 1 && u_is_one(&p[0])
}

/// Exact division in `Z[q][z]`; `None` if not exact.
pub(crate) fn b_div(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let lb = b.last().unwrap();
    let mut quot: BPoly = vec![Vec::new(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = r[k + b.len() - 1].clone();
        if top.is_empty() {
            continue;
        }
        let c = u_div(&top, lb)?;
        for (j, y) in b.iter().enumerate() {
            r[k + j] = u_sub(&r[k + j], &u_mul(&c, y));
        }
        quot[k] = c;
    }
    if r.iter().any(|c| !c.is_empty()) {
        return None;
    }
    b_trim(&mut quot);
    Some(quot)
}

/// Converts a Laurent polynomial to dense form after dividing by `q^m.q z^m.z`.
pub(crate) fn to_dense(p: &LaurentPoly, m: Mono) -> BPoly {
    let Some(top) = p.max_exponents() else { return Vec::new() };
    let zl = (top.z - m.z + 1) as usize;
    let mut out: BPoly = vec![Vec::new(); zl];
    for (mono, c) in p.terms() {
        let zi = (mono.z - m.z) as usize;
        let qi = (mono.q - m.q) as usize;
        let row = &mut out[zi];
        if row.len() <= qi {
            row.resize(qi + 1, Int::zero());
        }
        row[qi] = c.clone();
    }
    out
}

pub(crate) fn from_dense(p: &BPoly, m: Mono) -> LaurentPoly {
    LaurentPoly::from_terms(p.iter().enumerate().flat_map(|(zi, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(qi, c)| (Mono::new(m.q + qi as i32, m.z + zi as i32), c.clone()))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse_terms(s).unwrap()
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        // (q z + 1)(q^2 - z) and (q z + 1)(3 q + 2 z^2)
        let f = lp("1*q^0*z^0+1*q^1*z^1");
        let a = f.mul(&lp("1*q^2*z^0+-1*q^0*z^1"));
        let b = f.mul(&lp("3*q^1*z^0+2*q^0*z^2"));
        let g = b_gcd(&to_dense(&a, Mono::ONE), &to_dense(&b, Mono::ONE));
        assert_eq!(from_dense(&g, Mono::ONE), f);
    }

    #[test]
    fn integer_content_enters_gcd() {
        let a = lp("6*q^1*z^0+4*q^0*z^0");
        let b = lp("9*q^1*z^0+6*q^0*z^0");
        let g = b_gcd(&to_dense(&a, Mono::ONE), &to_dense(&b, Mono::ONE));
        assert_eq!(from_dense(&g, Mono::ONE), lp("2*q^0*z^0+3*q^1*z^0"));
    }

    #[test]
    fn exact_division() {
        let a = lp("1*q^2*z^2+-1*q^0*z^0");
        let b = lp("1*q^1*z^1+-1*q^0*z^0");
        let d = b_div(&to_dense(&a, Mono::ONE), &to_dense(&b, Mono::ONE)).unwrap();
        assert_eq!(from_dense(&d, Mono::ONE), lp("1*q^0*z^0+1*q^1*z^1"));
        assert!(b_div(&to_dense(&b, Mono::ONE), &to_dense(&a, Mono::ONE)).is_none());
    }
}
