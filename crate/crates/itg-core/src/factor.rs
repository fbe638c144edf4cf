//! Factorization of univariate polynomials over Q.
//!
//! Route: squarefree decomposition, monicization, factorization modulo a
//! good small prime (trying several and keeping the sparsest pattern),
//! Hensel lifting to a Mignotte-style coefficient bound, and Zassenhaus
//! subset recombination. Degree sets from several primes prune both
//! irreducibility proofs and the bounded-degree factor search used by the
//! isogeny kernel machinery.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{divisors, nth_root_floor, Int, Rat};
use crate::modpoly::{factor_squarefree_mod_p, hensel_lift_factors, PolyModM};
use crate::poly::PolyQ;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorError {
    ZeroPolynomial,
}

impl core::fmt::Display for FactorError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FactorError::ZeroPolynomial => write!(f, "zero polynomial rejected"),
        }
    }
}

/// Exactly the rational roots of p, via integral rescaling and
/// rational-root-theorem candidate testing.
pub fn rational_roots(p: &PolyQ) -> Result<Vec<Rat>, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let (_, mut ints) = p.primitive_int();
    // strip powers of x
    let mut k = 0;
    while ints.first().is_some_and(|c| c.is_zero()) {
        ints.remove(0);
        k += 1;
    }
    if k > 0 {
        roots.push(Rat::zero());
    }
    if ints.len() <= 1 {
        roots.sort();
        return Ok(roots);
    }
    let c0 = ints[0].clone();
    let lc = ints.last().unwrap().clone();
    let f = PolyQ::from_coeffs(ints.iter().map(|c| Rat::from_integer(c.clone())).collect());
    for num in divisors(&c0) {
        for den in divisors(&lc) {
            for sign in [1i64, -1] {
                let cand = Rat::new(&num * Int::from(sign), den.clone());
                if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// Rational roots through the modular factor machinery (squarefree part,
/// then a linear-factor search by reduction mod p and Hensel lifting).
/// Same answer set as `rational_roots`, but immune to the divisor-count
/// blowup of the rational-root theorem on large constant terms; this is the
/// path the curve machinery uses internally.
pub fn rational_roots_fast(p: &PolyQ) -> Vec<Rat> {
    if p.is_zero() || p.deg() == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut f = p.squarefree_part();
    // strip the root at zero so the constant term is nonzero
    if f.coeff(0).is_zero() {
        roots.push(Rat::zero());
        let (_, ints) = f.primitive_int();
        let k = ints.iter().position(|c| !c.is_zero()).unwrap();
        f = PolyQ::from_coeffs(
            ints[k..].iter().map(|c| Rat::from_integer(c.clone())).collect(),
        );
    }
    if f.deg() >= 1 {
        for g in monic_factors_of_degree(&f, 1) {
            roots.push(-g.coeff(0));
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Factor p over Q into monic irreducible factors with multiplicities.
/// The product of the factors (to their multiplicities) times a rational
/// constant equals p.
pub fn factor_over_q(p: &PolyQ) -> Result<Vec<(PolyQ, u32)>, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(Vec::new());
    }
    let mut out: Vec<(PolyQ, u32)> = Vec::new();
    for (g, mult) in p.squarefree_decomposition() {
        for f in factor_squarefree(&g) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.deg(), a.0.coeffs(), a.1).cmp(&(b.0.deg(), b.0.coeffs(), b.1))
    });
    Ok(out)
}

/// All monic rational factors of f of degree exactly d (f squarefree).
/// This is the bounded search behind kernel-polynomial detection: only
/// subsets of the modular factorization with degree sum d are lifted and
/// trial-divided, and degree sets over several primes give an early exit.
pub fn monic_factors_of_degree(f: &PolyQ, d: usize) -> Vec<PolyQ> {
    if f.is_zero() || f.deg() < d {
        return Vec::new();
    }
    if d == 0 {
        return vec![PolyQ::one()];
    }
    if f.deg() == d {
        return vec![f.monic()];
    }
    let (_, ints) = f.primitive_int();
    let mon = Monicized::new(&ints);
    let Some(plan) = ModularPlan::build(&mon.coeffs, &[d]) else {
        return Vec::new();
    };
    let lifted = plan.lift(&mon.coeffs, d);
    let mut found = Vec::new();
    subsets_of_degree(&lifted.factors, d, &lifted.modulus, &mon.coeffs, &mut |g| {
        found.push(mon.demonicize(g));
    });
    found.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    found.dedup();
    found
}

// ---- internals ----

/// Transform a primitive integer polynomial with leading coefficient lc into
/// the monic integer polynomial lc^(n-1) f(x/lc), remembering how to map
/// monic factors back.
struct Monicized {
    coeffs: Vec<Int>,
    lc: Int,
}

impl Monicized {
    fn new(ints: &[Int]) -> Self {
        let n = ints.len() - 1;
        let lc = ints[n].clone();
        let mut coeffs = Vec::with_capacity(ints.len());
        // coefficient of x^i in lc^(n-1) f(x/lc) is f_i * lc^(n-1-i)
        for (i, c) in ints.iter().enumerate() {
            if i == n {
                coeffs.push(Int::one());
            } else {
                coeffs.push(c * lc.pow((n - 1 - i) as u32));
            }
        }
        Monicized { coeffs, lc }
    }

    /// Map a monic factor g~ of the monicized polynomial back to the monic
    /// rational factor g~(lc x) / lc^deg of f.
    fn demonicize(&self, g: &[Int]) -> PolyQ {
        let d = g.len() - 1;
        let mut coeffs = Vec::with_capacity(g.len());
        for (i, c) in g.iter().enumerate() {
            // coefficient of x^i: g_i * lc^i / lc^d = g_i / lc^(d-i)
            coeffs.push(Rat::new(c.clone(), self.lc.pow((d - i) as u32)));
        }
        PolyQ::from_coeffs(coeffs)
    }
}

/// Degree bitset: bit i set iff a rational factor of degree i is possible.
fn degree_set(degrees: &[usize]) -> u128 {
    let mut set: u128 = 1;
    for &d in degrees {
        set |= set << d;
    }
    set
}

struct ModularPlan {
    p: u64,
    factors: Vec<PolyModM>,
    degree_mask: u128,
}

impl ModularPlan {
    /// Factor the monic squarefree integer polynomial modulo several primes;
    /// keep the sparsest factorization and the intersected degree set.
    /// Returns None when no rational factor of any wanted degree can exist.
    fn build(f: &[Int], wanted: &[usize]) -> Option<ModularPlan> {
        let n = f.len() - 1;
        let mut best: Option<(u64, Vec<PolyModM>)> = None;
        let mut mask: u128 = !0;
        let mut tried = 0;
        let mut p = 2u64;
        while tried < 4 {
            p = next_usable_prime(p, f);
            let m = BigUint::from(p);
            let fp = PolyModM::from_int_coeffs(&m, f);
            let facs = factor_squarefree_mod_p(&fp, p);
            let degs: Vec<usize> = facs.iter().map(|g| g.deg()).collect();
            mask &= degree_set(&degs);
            let better = match &best {
                None => true,
                Some((_, old)) => facs.len() < old.len(),
            };
            if better {
                best = Some((p, facs));
            }
            tried += 1;
            if mask == (1u128 | (1u128 << n)) {
                break; // irreducible over Q
            }
        }
        let (p, factors) = best.unwrap();
        if !wanted.iter().any(|&d| d <= 127 && mask & (1u128 << d) != 0) {
            return None;
        }
        Some(ModularPlan {
            p,
            factors,
            degree_mask: mask,
        })
    }

    fn lift(&self, f: &[Int], max_factor_degree: usize) -> Lifted {
        let target = lift_target(f, max_factor_degree, self.p);
        let (factors, modulus) = hensel_lift_factors(f, &self.factors, self.p, &target);
        Lifted { factors, modulus }
    }
}

struct Lifted {
    factors: Vec<PolyModM>,
    modulus: BigUint,
}

fn next_usable_prime(after: u64, f: &[Int]) -> u64 {
    use crate::arith::{int_mod_p, is_prime_u64};
    let mut p = after;
    'outer: loop {
        p += 1;
        while !is_prime_u64(p) || p == 2 {
            p += 1;
        }
        // need f squarefree mod p (f monic so lc fine)
        let m = BigUint::from(p);
        if int_mod_p(f.last().unwrap(), p) == 0 {
            continue 'outer;
        }
        let fp = PolyModM::from_int_coeffs(&m, f);
        if fp.degree() != Some(f.len() - 1) {
            continue 'outer;
        }
        let g = fp.gcd_prime(&fp.derivative());
        if g.degree() != Some(0) {
            continue 'outer;
        }
        return p;
    }
}

/// Modulus bound: lift until p^k > 2 * binom(d, d/2) * (||f||_2 + 1),
/// which covers every coefficient of a monic degree-<=d factor of f.
fn lift_target(f: &[Int], d: usize, _p: u64) -> BigUint {
    let mut norm2 = Int::zero();
    for c in f {
        norm2 += c * c;
    }
    let norm = nth_root_floor(&norm2, 2) + Int::one();
    let mut binom = Int::one();
    let k = d / 2;
    for i in 0..k {
        binom = binom * Int::from((d - i) as u64) / Int::from((i + 1) as u64);
    }
    let bound: Int = Int::from(4u32) * binom * norm + Int::one();
    bound.to_biguint().unwrap()
}

/// Enumerate subsets of the lifted modular factors whose degrees sum to d;
/// for each, test whether the symmetric lift of the product divides f over
/// Z, and report it via `sink`.
fn subsets_of_degree(
    pool: &[PolyModM],
    d: usize,
    modulus: &BigUint,
    f: &[Int],
    sink: &mut dyn FnMut(&[Int]),
) {
    let mut idx = Vec::new();
    rec_subsets(pool, 0, d, modulus, f, &mut idx, sink);
}

fn rec_subsets(
    pool: &[PolyModM],
    start: usize,
    remaining: usize,
    modulus: &BigUint,
    f: &[Int],
    idx: &mut Vec<usize>,
    sink: &mut dyn FnMut(&[Int]),
) {
    if remaining == 0 {
        let mut prod = PolyModM::one(modulus);
        for &i in idx.iter() {
            prod = prod.mul(&pool[i]);
        }
        let cand = prod.lift_symmetric();
        if divides_int(&cand, f) {
            sink(&cand);
        }
        return;
    }
    for i in start..pool.len() {
        let deg = pool[i].deg();
        if deg > remaining {
            continue;
        }
        // degree-sum feasibility of the tail
        let tail: usize = pool[i + 1..].iter().map(|g| g.deg()).sum();
        if deg + tail < remaining {
            break;
        }
        idx.push(i);
        rec_subsets(pool, i + 1, remaining - deg, modulus, f, idx, sink);
        idx.pop();
    }
}

/// Does the monic integer polynomial g divide the monic integer polynomial f?
fn divides_int(g: &[Int], f: &[Int]) -> bool {
    if g.len() < 2 {
        return g.len() == 1 && g[0].is_one();
    }
    if !g.last().unwrap().is_one() {
        return false;
    }
    let mut rem: Vec<Int> = f.to_vec();
    let dg = g.len() - 1;
    while rem.len() >= g.len() {
        let q = rem.last().unwrap().clone();
        if !q.is_zero() {
            let off = rem.len() - 1 - dg;
            for j in 0..=dg {
                let t = &g[j] * &q;
                rem[off + j] -= t;
            }
        }
        rem.pop();
    }
    rem.iter().all(|c| c.is_zero())
}

/// Factor a monic-after-normalization squarefree polynomial of degree >= 1
/// into monic irreducibles over Q.
fn factor_squarefree(g: &PolyQ) -> Vec<PolyQ> {
    let g = g.monic();
    if g.deg() == 1 {
        return vec![g];
    }
    let (_, ints) = g.primitive_int();
    let mon = Monicized::new(&ints);
    let n = mon.coeffs.len() - 1;
    let wanted: Vec<usize> = (1..=n / 2).collect();
    let Some(plan) = ModularPlan::build(&mon.coeffs, &wanted) else {
        return vec![g]; // no proper factor degree possible: irreducible
    };
    if plan.degree_mask & !(1u128 | (1u128 << n)) == 0 {
        return vec![g];
    }
    let lifted = plan.lift(&mon.coeffs, n - 1);
    // Zassenhaus search: grow subset size, extract factors as found.
    let mut pool: Vec<PolyModM> = lifted.factors;
    let mut rest: Vec<Int> = mon.coeffs.clone();
    let mut out: Vec<PolyQ> = Vec::new();
    let mut size = 1usize;
    'outer: while !pool.is_empty() && size <= pool.len() / 2 {
        let combos = combinations(pool.len(), size);
        for combo in combos {
            let deg: usize = combo.iter().map(|&i| pool[i].deg()).sum();
            if deg > 127 || plan.degree_mask & (1u128 << deg) == 0 {
                continue;
            }
            if deg >= rest.len() {
                continue;
            }
            let mut prod = PolyModM::one(&lifted.modulus);
            for &i in &combo {
                prod = prod.mul(&pool[i]);
            }
            let cand = prod.lift_symmetric();
            if divides_int(&cand, &rest) {
                out.push(mon.demonicize(&cand));
                rest = quotient_int(&rest, &cand);
                let keep: Vec<PolyModM> = pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                pool = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        out.push(mon.demonicize(&rest));
    }
    out
}

fn quotient_int(f: &[Int], g: &[Int]) -> Vec<Int> {
    let dg = g.len() - 1;
    let mut rem: Vec<Int> = f.to_vec();
    let mut quo = vec![Int::zero(); f.len() - dg];
    while rem.len() >= g.len() {
        let q = rem.last().unwrap().clone();
        let off = rem.len() - 1 - dg;
        quo[off] = q.clone();
        if !q.is_zero() {
            for j in 0..=dg {
                let t = &g[j] * &q;
                rem[off + j] -= t;
            }
        }
        rem.pop();
    }
    quo
}

/// All size-k index subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
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
    fn roots_examples() {
        // x^3 - x
        let r = rational_roots(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(r, vec![rat_i(-1), rat_i(0), rat_i(1)]);
        // x^2 + 1
        assert!(rational_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        assert!(rational_roots(&PolyQ::zero()).is_err());
    }

    #[test]
    fn roots_candidate_scan_oracle() {
        // 3x^4 + 6x^2 - 1: brute-force scan over divisors of 1 and 3 finds
        // no roots; frozen expectation: empty.
        let f = p(&[-1, 0, 6, 0, 3]);
        let mut brute = Vec::new();
        for num in [1i64, -1] {
            for den in [1i64, 3] {
                let c = rat(num, den);
                if f.eval(&c).is_zero() {
                    brute.push(c);
                }
            }
        }
        assert!(brute.is_empty());
        assert_eq!(rational_roots(&f).unwrap(), brute);
    }

    #[test]
    fn roots_fractional() {
        // (2x-1)(3x+5) = 6x^2 + 7x - 5
        let r = rational_roots(&p(&[-5, 7, 6])).unwrap();
        assert_eq!(r, vec![rat(-5, 3), rat(1, 2)]);
    }

    #[test]
    fn factor_trivial_split() {
        let f = p(&[-1, 0, 1]); // x^2 - 1
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(fs, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn factor_x4_plus_1_irreducible() {
        let fs = factor_over_q(&p(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(fs, vec![(p(&[1, 0, 0, 0, 1]), 1)]);
    }

    #[test]
    fn factor_x5_minus_x() {
        // x^5 - x = x (x-1)(x+1)(x^2+1); cross-check by expanding product
        let f = p(&[0, -1, 0, 0, 0, 1]);
        let fs = factor_over_q(&f).unwrap();
        let expected = vec![
            (p(&[0, 1]), 1),
            (p(&[-1, 1]), 1),
            (p(&[1, 1]), 1),
            (p(&[1, 0, 1]), 1),
        ];
        for e in &expected {
            assert!(fs.contains(e), "missing {:?}", e.0);
        }
        assert_eq!(fs.len(), 4);
        let mut prod = PolyQ::one();
        for (g, m) in &fs {
            prod = prod.mul(&g.pow(*m));
        }
        assert_eq!(prod, f.monic());
    }

    #[test]
    fn factor_with_multiplicity_and_content() {
        // 6 (x-1)^2 (x^2+x+1)
        let f = p(&[-1, 1]).pow(2).mul(&p(&[1, 1, 1])).scale(&rat_i(6));
        let fs = factor_over_q(&f).unwrap();
        assert!(fs.contains(&(p(&[-1, 1]), 2)));
        assert!(fs.contains(&(p(&[1, 1, 1]), 1)));
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn factor_nonmonic_with_fractional_roots() {
        // (2x-1)(2x+1)(x^2+3) * (1/5)
        let f = p(&[-1, 0, 4]).mul(&p(&[3, 0, 1])).scale(&rat(1, 5));
        let fs = factor_over_q(&f).unwrap();
        assert!(fs.contains(&(PolyQ::from_coeffs(vec![rat(-1, 2), rat_i(1)]), 1)));
        assert!(fs.contains(&(PolyQ::from_coeffs(vec![rat(1, 2), rat_i(1)]), 1)));
        assert!(fs.contains(&(p(&[3, 0, 1]), 1)));
    }

    #[test]
    fn factors_of_degree_search() {
        // f = (x^2+1)(x^2+2)(x-3): monic degree-2 factors are exactly the two
        // quadratics; degree-3 factors are their products with (x-3).
        let f = p(&[1, 0, 1]).mul(&p(&[2, 0, 1])).mul(&p(&[-3, 1]));
        let d2 = monic_factors_of_degree(&f, 2);
        assert_eq!(d2.len(), 2);
        assert!(d2.contains(&p(&[1, 0, 1])));
        assert!(d2.contains(&p(&[2, 0, 1])));
        let d3 = monic_factors_of_degree(&f, 3);
        assert_eq!(d3.len(), 2);
    }

    #[test]
    fn every_nonlinear_factor_has_no_rational_roots() {
        let f = p(&[2, 3, 0, 1]).mul(&p(&[-7, 0, 2, 5])).mul(&p(&[1, 1]));
        for (g, _) in factor_over_q(&f).unwrap() {
            if g.deg() > 1 {
                assert!(rational_roots(&g).unwrap().is_empty(), "{:?}", g);
            }
        }
    }
}
