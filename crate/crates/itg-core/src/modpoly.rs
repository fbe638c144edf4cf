//! Polynomials over Z/m with arbitrary (BigUint) modulus.
//!
//! Two uses: factorization over F_p (m prime) via distinct-degree plus
//! Cantor–Zassenhaus splitting, and Hensel lifting with m = p^k. Division
//! requires a monic divisor, which is all the factor machinery needs.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, XorShift64};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyModM {
    pub modulus: BigUint,
    coeffs: Vec<BigUint>,
}

fn red(c: &Int, m: &BigUint) -> BigUint {
    let mm: BigInt = BigInt::from(m.clone());
    let mut r = c % &mm;
    if r.is_negative() {
        r += &mm;
    }
    r.to_biguint().unwrap()
}

/// Inverse of a mod m, if it exists.
pub fn inv_mod(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let (mut t, mut new_t) = (BigInt::zero(), BigInt::one());
    let (mut r, mut new_r) = (BigInt::from(m.clone()), BigInt::from(a % m));
    while !new_r.is_zero() {
        let q = &r / &new_r;
        let tmp = &t - &q * &new_t;
        t = core::mem::replace(&mut new_t, tmp);
        let tmp = &r - &q * &new_r;
        r = core::mem::replace(&mut new_r, tmp);
    }
    if !r.is_one() {
        return None;
    }
    let mm = BigInt::from(m.clone());
    let mut t = t % &mm;
    if t.is_negative() {
        t += &mm;
    }
    Some(t.to_biguint().unwrap())
}

impl PolyModM {
    pub fn new(modulus: BigUint, coeffs: Vec<BigUint>) -> Self {
        let mut p = PolyModM { modulus, coeffs };
        p.reduce();
        p
    }

    pub fn from_int_coeffs(modulus: &BigUint, coeffs: &[Int]) -> Self {
        let c = coeffs.iter().map(|c| red(c, modulus)).collect();
        PolyModM::new(modulus.clone(), c)
    }

    pub fn zero(m: &BigUint) -> Self {
        PolyModM {
            modulus: m.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(m: &BigUint) -> Self {
        PolyModM::new(m.clone(), vec![BigUint::one()])
    }

    pub fn x(m: &BigUint) -> Self {
        PolyModM::new(m.clone(), vec![BigUint::zero(), BigUint::one()])
    }

    fn reduce(&mut self) {
        for c in &mut self.coeffs {
            if *c >= self.modulus {
                *c = &*c % &self.modulus;
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigUint {
        self.coeffs.last().cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + rhs.coeff(i)) % &self.modulus);
        }
        PolyModM::new(self.modulus.clone(), out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff(i);
            let b = rhs.coeff(i);
            let v = if a >= b {
                a - b
            } else {
                &self.modulus - ((b - a) % &self.modulus)
            };
            out.push(v % &self.modulus);
        }
        PolyModM::new(self.modulus.clone(), out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return PolyModM::zero(&self.modulus);
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        for c in &mut out {
            *c = &*c % &self.modulus;
        }
        PolyModM::new(self.modulus.clone(), out)
    }

    pub fn scale(&self, s: &BigUint) -> Self {
        let out = self.coeffs.iter().map(|c| (c * s) % &self.modulus).collect();
        PolyModM::new(self.modulus.clone(), out)
    }

    /// Make monic; requires an invertible leading coefficient.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(&self.leading(), &self.modulus).expect("leading coeff not invertible");
        self.scale(&inv)
    }

    /// Division with remainder by a monic divisor.
    pub fn divrem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (PolyModM::zero(&self.modulus), self.clone());
        }
        let m = &self.modulus;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigUint::zero(); self.deg() - dd + 1];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].clone();
            quo[i - dd] = q.clone();
            for j in 0..=dd {
                let sub = (&d.coeffs[j] * &q) % m;
                let cur = &rem[i - dd + j];
                rem[i - dd + j] = if *cur >= sub {
                    cur - &sub
                } else {
                    m - ((sub - cur) % m)
                } % m;
            }
        }
        (
            PolyModM::new(m.clone(), quo),
            PolyModM::new(m.clone(), rem),
        )
    }

    pub fn rem_monic(&self, d: &Self) -> Self {
        self.divrem_monic(d).1
    }

    pub fn mul_mod(&self, rhs: &Self, modp: &Self) -> Self {
        self.mul(rhs).rem_monic(modp)
    }

    /// self^e mod f (f monic), square-and-multiply.
    pub fn pow_mod(&self, e: &BigUint, f: &Self) -> Self {
        let mut result = PolyModM::one(&self.modulus);
        let mut base = self.rem_monic(f);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mul_mod(&base, f);
            }
            if i + 1 < bits {
                base = base.mul_mod(&base, f);
            }
        }
        result
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyModM::zero(&self.modulus);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push((c * BigUint::from(i)) % &self.modulus);
        }
        PolyModM::new(self.modulus.clone(), out)
    }

    /// Monic gcd; valid for prime modulus.
    pub fn gcd_prime(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let bm = b.monic();
            let r = a.rem_monic(&bm);
            a = bm;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Symmetric (balanced) integer lift: coefficients in (-m/2, m/2].
    pub fn lift_symmetric(&self) -> Vec<Int> {
        let half = &self.modulus >> 1;
        self.coeffs
            .iter()
            .map(|c| {
                if c > &half {
                    BigInt::from(c.clone()) - BigInt::from(self.modulus.clone())
                } else {
                    BigInt::from(c.clone())
                }
            })
            .collect()
    }
}

/// Factor a monic squarefree polynomial over F_p (p an odd prime) into monic
/// irreducibles, via distinct-degree factorization and Cantor–Zassenhaus
/// equal-degree splitting. Deterministically seeded.
pub fn factor_squarefree_mod_p(f: &PolyModM, p: u64) -> Vec<PolyModM> {
    assert!(f.is_monic());
    let m = &f.modulus;
    let pb = BigUint::from(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = PolyModM::x(m);
    let mut d = 0usize;
    while !rest.is_zero() && rest.deg() > 0 {
        d += 1;
        if rest.deg() < 2 * d {
            // remainder is irreducible
            out.push(rest.clone());
            break;
        }
        h = h.pow_mod(&pb, &rest);
        let hx = h.sub(&PolyModM::x(m));
        let g = hx.gcd_prime(&rest);
        if !g.is_zero() && g.deg() > 0 {
            let mut rng = XorShift64::new(0xC0FFEE ^ (p.wrapping_mul(d as u64 + 1)));
            split_equal_degree(&g, d, p, &mut rng, &mut out);
            rest = rest.divrem_monic(&g).0;
            h = h.rem_monic(&rest.monic());
        }
    }
    out.sort_by(|a, b| (a.deg(), a.coeffs()).cmp(&(b.deg(), b.coeffs())));
    out
}

fn split_equal_degree(
    f: &PolyModM,
    d: usize,
    p: u64,
    rng: &mut XorShift64,
    out: &mut Vec<PolyModM>,
) {
    if f.deg() == d {
        out.push(f.clone());
        return;
    }
    let m = &f.modulus;
    // exponent (p^d - 1)/2
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let mut coeffs = Vec::with_capacity(2 * d);
        for _ in 0..2 * d {
            coeffs.push(BigUint::from(rng.below(p)));
        }
        let r = PolyModM::new(m.clone(), coeffs);
        if r.is_zero() {
            continue;
        }
        let s = r.pow_mod(&e, f).sub(&PolyModM::one(m));
        let g = s.gcd_prime(f);
        if !g.is_zero() && g.deg() > 0 && g.deg() < f.deg() {
            let h = f.divrem_monic(&g).0;
            split_equal_degree(&g, d, p, rng, out);
            split_equal_degree(&h, d, p, rng, out);
            return;
        }
    }
}

/// One quadratic Hensel step: given monic f with f ≡ g·h (mod m),
/// s·g + t·h ≡ 1 (mod m), deg s < deg h, deg t < deg g, all monic g, h,
/// returns (g*, h*, s*, t*) with the same relations mod m².
fn hensel_step(
    m: &BigUint,
    f: &[Int],
    g: &PolyModM,
    h: &PolyModM,
    s: &PolyModM,
    t: &PolyModM,
) -> (PolyModM, PolyModM, PolyModM, PolyModM) {
    let m2 = m * m;
    let up = |q: &PolyModM| PolyModM::new(m2.clone(), q.coeffs().to_vec());
    let fm = PolyModM::from_int_coeffs(&m2, f);
    let (g, h, s, t) = (up(g), up(h), up(s), up(t));
    let e = fm.sub(&g.mul(&h));
    let (q, r) = s.mul(&e).divrem_monic(&h);
    let g_star = g.add(&t.mul(&e)).add(&q.mul(&g));
    let h_star = h.add(&r);
    let b = s.mul(&g_star).add(&t.mul(&h_star)).sub(&PolyModM::one(&m2));
    let (c, d) = s.mul(&b).divrem_monic(&h_star);
    let s_star = s.sub(&d);
    let t_star = t.sub(&t.mul(&b)).sub(&c.mul(&g_star));
    (g_star, h_star, s_star, t_star)
}

/// Extended gcd for coprime monic polynomials over F_p: s·a + t·b = 1.
fn bezout_prime(a: &PolyModM, b: &PolyModM) -> (PolyModM, PolyModM) {
    let m = &a.modulus;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (PolyModM::one(m), PolyModM::zero(m));
    let (mut t0, mut t1) = (PolyModM::zero(m), PolyModM::one(m));
    while !r1.is_zero() {
        let lead_inv = inv_mod(&r1.leading(), m).expect("non-invertible leading in bezout");
        let r1m = r1.scale(&lead_inv);
        let (q, r) = r0.divrem_monic(&r1m);
        let q = q.scale(&lead_inv);
        let new_s = s0.sub(&q.mul(&s1));
        let new_t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = core::mem::replace(&mut s1, new_s);
        t0 = core::mem::replace(&mut t1, new_t);
    }
    let lead_inv = inv_mod(&r0.leading(), m).expect("gcd not a unit");
    (s0.scale(&lead_inv), t0.scale(&lead_inv))
}

/// Hensel-lift a factorization of a monic integer polynomial
/// f ≡ prod(factors) (mod p) to modulus p^(2^k) ≥ target. The factors must
/// be monic, squarefree and pairwise coprime mod p. Returns the lifted
/// monic factors together with the final modulus.
pub fn hensel_lift_factors(
    f: &[Int],
    factors: &[PolyModM],
    p: u64,
    target: &BigUint,
) -> (Vec<PolyModM>, BigUint) {
    assert!(f.last().is_some_and(|c| c.is_one()), "f must be monic");
    if factors.len() == 1 {
        let mut m = BigUint::from(p);
        while &m < target {
            m = &m * &m;
        }
        return (vec![PolyModM::from_int_coeffs(&m, f)], m);
    }
    // split factors into two halves, recurse as a product tree
    let mid = factors.len() / 2;
    let m0 = BigUint::from(p);
    let mut g = PolyModM::one(&m0);
    for fi in &factors[..mid] {
        g = g.mul(fi);
    }
    let mut h = PolyModM::one(&m0);
    for fi in &factors[mid..] {
        h = h.mul(fi);
    }
    let (mut s, mut t) = bezout_prime(&g, &h);
    let mut m = m0.clone();
    let (mut g, mut h) = (g, h);
    while &m < target {
        let (g2, h2, s2, t2) = hensel_step(&m, f, &g, &h, &s, &t);
        m = &m * &m;
        g = g2;
        h = h2;
        s = s2;
        t = t2;
    }
    let g_int = g.lift_symmetric();
    let h_int = h.lift_symmetric();
    let (mut left, ml) = hensel_lift_factors(&g_int, &factors[..mid], p, target);
    let (right, _mr) = hensel_lift_factors(&h_int, &factors[mid..], p, target);
    // all recursion levels reach the same modulus chain; re-reduce to m
    let m_final = m.clone();
    for q in left.iter_mut() {
        *q = PolyModM::from_int_coeffs(&m_final, &q.lift_symmetric());
    }
    let mut all = left;
    for q in right {
        all.push(PolyModM::from_int_coeffs(&m_final, &q.lift_symmetric()));
    }
    debug_assert!(ml >= m_final || ml == m_final);
    (all, m_final)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(m: u64, c: &[i64]) -> PolyModM {
        PolyModM::from_int_coeffs(
            &BigUint::from(m),
            &c.iter().map(|&x| Int::from(x)).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn factor_mod_p_splits() {
        // x^2 + 1 mod 5 = (x+2)(x+3)
        let f = poly(5, &[1, 0, 1]);
        let fs = factor_squarefree_mod_p(&f, 5);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].mul(&fs[1]), f);
    }

    #[test]
    fn factor_mod_p_irreducible() {
        // x^2 + 1 mod 7 is irreducible
        let f = poly(7, &[1, 0, 1]);
        let fs = factor_squarefree_mod_p(&f, 7);
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn hensel_lift_two_factors() {
        // f = x^2 - 1 = (x-1)(x+1); lift mod 7 -> mod 7^4
        let f: Vec<Int> = [-1i64, 0, 1].iter().map(|&x| Int::from(x)).collect();
        let g = poly(7, &[-1, 1]);
        let h = poly(7, &[1, 1]);
        let target = BigUint::from(7u64).pow(4);
        let (lifted, m) = hensel_lift_factors(&f, &[g, h], 7, &target);
        assert!(m >= target);
        let prod = lifted[0].mul(&lifted[1]);
        assert_eq!(prod, PolyModM::from_int_coeffs(&m, &f));
    }

    #[test]
    fn hensel_lift_nontrivial() {
        // f = (x-1)(x+2)(x^2+1), squarefree mod 7 with three modular factors
        let f: Vec<Int> = [-2i64, 1, -1, 1, 1].iter().map(|&x| Int::from(x)).collect();
        let fm = poly(7, &[-2, 1, -1, 1, 1]);
        let fs = factor_squarefree_mod_p(&fm, 7);
        assert_eq!(fs.len(), 3);
        let target = BigUint::from(7u64).pow(8);
        let (lifted, m) = hensel_lift_factors(&f, &fs, 7, &target);
        let mut prod = PolyModM::one(&m);
        for q in &lifted {
            prod = prod.mul(q);
        }
        assert_eq!(prod, PolyModM::from_int_coeffs(&m, &f));
    }
}
