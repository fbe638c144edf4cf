//! Dense univariate polynomials over Q.
//!
//! Coefficients are stored lowest degree first; the vector is empty for the
//! zero polynomial and its last entry is nonzero otherwise.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl core::fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = PolyQ { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn x() -> Self {
        PolyQ::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// Build from coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = PolyQ { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyQ::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyQ::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        PolyQ::from_coeffs(out)
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
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
        PolyQ::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> PolyQ {
        let mut base = self.clone();
        let mut acc = PolyQ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg rhs.
    pub fn divrem(&self, rhs: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.deg() < rhs.deg() {
            return (PolyQ::zero(), self.clone());
        }
        let dl = rhs.deg();
        let lead_inv = Rat::one() / rhs.leading();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); self.deg() - dl + 1];
        for i in (dl..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lead_inv;
            quo[i - dl] = q.clone();
            for j in 0..=dl {
                let t = &rhs.coeffs[j] * &q;
                rem[i - dl + j] -= t;
            }
        }
        (PolyQ::from_coeffs(quo), PolyQ::from_coeffs(rem))
    }

    pub fn rem(&self, rhs: &PolyQ) -> PolyQ {
        self.divrem(rhs).1
    }

    /// Exact division; panics on nonzero remainder.
    pub fn div_exact(&self, rhs: &PolyQ) -> PolyQ {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &PolyQ) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.divrem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let inv = Rat::one() / self.leading();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> PolyQ {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * Rat::from_integer(Int::from(i as u64)));
        }
        PolyQ::from_coeffs(out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute x -> a*x + b.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> PolyQ {
        let lin = PolyQ::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = PolyQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&PolyQ::constant(c.clone()));
        }
        acc
    }

    /// Primitive integer form: (content, coefficients) with the returned
    /// integer coefficients coprime, positive leading coefficient, and
    /// self = content * (integer polynomial).
    pub fn primitive_int(&self) -> (Rat, Vec<Int>) {
        use num_integer::Integer as _;
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let mut den = Int::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let scaled: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = Int::zero();
        for c in &scaled {
            g = g.gcd(c);
        }
        if g.is_zero() {
            g = Int::one();
        }
        let mut ints: Vec<Int> = scaled.iter().map(|c| c / &g).collect();
        let mut content = Rat::new(g, den);
        if ints.last().is_some_and(|c| c.is_negative()) {
            for c in &mut ints {
                *c = -c.clone();
            }
            content = -content;
        }
        (content, ints)
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> PolyQ {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_exact(&g).monic()
    }

    /// Yun's squarefree decomposition: returns [(g_i, i)] with
    /// self = lc * prod g_i^i, each g_i monic squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(PolyQ, u32)> {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.deg() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_exact(&a);
        let mut c = df.div_exact(&a);
        let mut out = Vec::new();
        let mut i = 1u32;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.deg() > 0 {
                    out.push((b.monic(), i));
                }
                break;
            }
            a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            i += 1;
            if b.degree() == Some(0) {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_i};

    fn p(v: &[i64]) -> PolyQ {
        PolyQ::from_ints(v)
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[1, 0, -3, 0, 1]);
        let b = p(&[2, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.deg() < b.deg() || r.is_zero());
    }

    #[test]
    fn gcd_of_product() {
        let a = p(&[-1, 1]).mul(&p(&[1, 1]));
        let b = p(&[-1, 1]).mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn squarefree_decomposition_cube() {
        // (x-1)^3 (x+2)
        let f = p(&[-1, 1]).pow(3).mul(&p(&[2, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert!(dec.contains(&(p(&[2, 1]), 1)));
        assert!(dec.contains(&(p(&[-1, 1]), 3)));
    }

    #[test]
    fn primitive_int_form() {
        let f = PolyQ::from_coeffs(vec![rat(1, 6), rat_i(0), rat(-2, 3)]);
        let (content, ints) = f.primitive_int();
        // 1/6 - (2/3)x^2 = -(1/6)(4x^2 - 1)
        assert_eq!(content, rat(-1, 6));
        assert_eq!(ints, vec![Int::from(-1), Int::from(0), Int::from(4)]);
    }

    #[test]
    fn compose_linear_eval() {
        let f = p(&[1, 2, 3]);
        let g = f.compose_linear(&rat_i(2), &rat_i(-1));
        // g(x) = f(2x - 1)
        assert_eq!(g.eval(&rat_i(3)), f.eval(&rat_i(5)));
    }
}
