//! Integer and rational arithmetic utilities.
//!
//! `Int`/`Rat` are arbitrary precision; `Rat` is always stored in lowest
//! terms with positive denominator (num-rational maintains this invariant on
//! construction). Integer factorization uses trial division plus Pollard rho
//! with a deterministic Miller–Rabin primality test.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// Errors from arithmetic-level operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    ZeroArgument,
}

impl core::fmt::Display for ArithError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ArithError::ZeroArgument => write!(f, "argument must be nonzero"),
        }
    }
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Deterministic xorshift64* generator; used wherever randomized algorithms
/// need a source of bits, so all outputs of the crate are reproducible.
#[derive(Clone, Debug)]
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        XorShift64 {
            state: seed | 1,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

fn mul_mod_u128(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u128(acc, b, m);
        }
        b = mul_mod_u128(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64 (valid for all n < 2^64 with these
/// witnesses).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho_u64(n: u64, rng: &mut XorShift64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    loop {
        let c = 1 + rng.below(n - 1);
        let f = |x: u64| (mul_mod_u128(x, x, n) + c) % n;
        let mut x = rng.below(n);
        let mut y = x;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>, rng: &mut XorShift64) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho_u64(n, rng);
    factor_u64_into(d, out, rng);
    factor_u64_into(n / d, out, rng);
}

/// Prime factorization of |n| as sorted (prime, exponent) pairs.
///
/// Numbers are first stripped of small prime factors by trial division; the
/// cofactor goes through Pollard rho. Inputs whose prime factors do not fit
/// in u64 are outside this crate's intended range and will loop in rho; the
/// integers reached here (discriminants, division-polynomial content, twist
/// parameters) are far smaller.
pub fn factor_int(n: &Int) -> Vec<(Int, u32)> {
    assert!(!n.is_zero(), "factor_int(0)");
    let mut m: BigUint = n.magnitude().clone();
    let mut primes: Vec<(Int, u32)> = Vec::new();
    let push = |p: Int, primes: &mut Vec<(Int, u32)>| {
        if let Some(last) = primes.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        primes.push((p, 1));
    };
    for p in SMALL_PRIMES {
        let pb = BigUint::from(*p);
        while (&m % &pb).is_zero() {
            m /= &pb;
            push(Int::from(*p), &mut primes);
        }
        if m.is_one() {
            break;
        }
    }
    if !m.is_one() {
        let mut rng = XorShift64::new(0x9E3779B97F4A7C15);
        let mut stack = vec![m];
        let mut big: Vec<u64> = Vec::new();
        while let Some(t) = stack.pop() {
            if let Some(t64) = t.to_u64() {
                factor_u64_into(t64, &mut big, &mut rng);
            } else {
                // beyond u64: peel factors by rho over BigUint
                let d = pollard_rho_big(&t, &mut rng);
                stack.push(&t / &d);
                stack.push(d);
            }
        }
        big.sort_unstable();
        for p in big {
            push(Int::from(p), &mut primes);
        }
    }
    primes.sort();
    // merge duplicates after sorting (small/rho paths may interleave)
    let mut merged: Vec<(Int, u32)> = Vec::new();
    for (p, e) in primes {
        if let Some(last) = merged.last_mut() {
            if last.0 == p {
                last.1 += e;
                continue;
            }
        }
        merged.push((p, e));
    }
    merged
}

fn pollard_rho_big(n: &BigUint, rng: &mut XorShift64) -> BigUint {
    use num_integer::Integer as _;
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    loop {
        let c = BigUint::from(1 + rng.below(1 << 31));
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(rng.below(1 << 31));
        let mut y = x.clone();
        loop {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            let d = diff.gcd(n);
            if !d.is_one() {
                if &d == n {
                    break;
                }
                return d;
            }
        }
    }
}

const SMALL_PRIMES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
    307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419,
    421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
];

/// The unique squarefree integer d with n/d a positive rational square.
/// Sign is preserved. Errors on n = 0.
pub fn squarefree_part(n: &Int) -> Result<Int, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroArgument);
    }
    let mut d = Int::one();
    for (p, e) in factor_int(n) {
        if e % 2 == 1 {
            d *= p;
        }
    }
    if n.is_negative() {
        d = -d;
    }
    Ok(d)
}

/// All positive divisors of |n|.
pub fn divisors(n: &Int) -> Vec<Int> {
    let facs = factor_int(n);
    let mut divs = vec![Int::one()];
    for (p, e) in facs {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pe = Int::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

/// Floor of the k-th root of a nonnegative integer.
pub fn nth_root_floor(n: &Int, k: u32) -> Int {
    assert!(!n.is_negative());
    if n.is_zero() || n.is_one() || k == 1 {
        return n.clone();
    }
    let bits = n.bits();
    let mut hi = Int::one() << ((bits / k as u64) + 2) as usize;
    let mut lo = Int::zero();
    while lo < (&hi - 1) {
        let mid: Int = (&lo + &hi) >> 1;
        if mid.pow(k) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Exact k-th root of an integer if it exists (handles negative n for odd k).
pub fn nth_root_exact(n: &Int, k: u32) -> Option<Int> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return nth_root_exact(&-n, k).map(|r| -r);
    }
    let r = nth_root_floor(n, k);
    if r.pow(k) == *n {
        Some(r)
    } else {
        None
    }
}

/// Is q the k-th power of a rational? Requires q in lowest terms (invariant
/// of `Rat`). For even k, q must be nonnegative.
pub fn rat_nth_root(q: &Rat, k: u32) -> Option<Rat> {
    let n = nth_root_exact(q.numer(), k)?;
    let d = nth_root_exact(q.denom(), k)?;
    Some(Rat::new(n, d))
}

/// Modular inverse of a mod m (m ≥ 2), if gcd(a, m) = 1.
pub fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(((t % m as i128 + m as i128) % m as i128) as u64)
}

/// Reduce a rational mod a u64 prime p (denominator must be invertible).
pub fn rat_mod_p(q: &Rat, p: u64) -> Option<u64> {
    let n = int_mod_p(q.numer(), p);
    let d = int_mod_p(q.denom(), p);
    let dinv = inv_mod_u64(d, p)?;
    Some(mul_mod_u128(n, dinv, p))
}

pub fn int_mod_p(n: &Int, p: u64) -> u64 {
    let m = n.magnitude() % BigUint::from(p);
    let m = m.to_u64().unwrap();
    if n.is_negative() && m != 0 {
        p - m
    } else {
        m
    }
}

/// Compare rationals by height (max of |num|, den), tie-broken structurally;
/// used for deterministic orderings.
pub fn rat_height_cmp(a: &Rat, b: &Rat) -> Ordering {
    let ha = a.numer().magnitude().max(a.denom().magnitude());
    let hb = b.numer().magnitude().max(b.denom().magnitude());
    ha.cmp(hb)
        .then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&int(12)).unwrap(), int(3));
        assert_eq!(squarefree_part(&int(-18)).unwrap(), int(-2));
        assert_eq!(squarefree_part(&int(-7)).unwrap(), int(-7));
        assert!(squarefree_part(&int(0)).is_err());
    }

    #[test]
    fn squarefree_square_multiple_invariant() {
        for d in [2i64, -3, 5, 12, -35] {
            for m in [1i64, -1, 6, 50, -108] {
                let lhs = squarefree_part(&(int(d) * int(d) * int(m))).unwrap();
                let rhs = squarefree_part(&int(m)).unwrap();
                assert_eq!(lhs, rhs, "d={d} m={m}");
            }
        }
    }

    #[test]
    fn factor_composite() {
        let n = int(2 * 2 * 3 * 7 * 7 * 13);
        let f = factor_int(&n);
        assert_eq!(f, vec![(int(2), 2), (int(3), 1), (int(7), 2), (int(13), 1)]);
    }

    #[test]
    fn factor_large_semiprime() {
        // 1000003 * 1000033
        let n = Int::from(1000003u64) * Int::from(1000033u64);
        let f = factor_int(&n);
        assert_eq!(f, vec![(Int::from(1000003u64), 1), (Int::from(1000033u64), 1)]);
    }

    #[test]
    fn roots_and_powers() {
        assert_eq!(nth_root_exact(&int(729), 6), Some(int(3)));
        assert_eq!(nth_root_exact(&int(-27), 3), Some(int(-3)));
        assert_eq!(nth_root_exact(&int(730), 6), None);
        assert_eq!(rat_nth_root(&rat(16, 81), 4), Some(rat(2, 3)));
        assert_eq!(rat_nth_root(&rat(16, 80), 4), None);
    }

    #[test]
    fn primality_u64() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn divisors_small() {
        assert_eq!(
            divisors(&int(12)),
            vec![int(1), int(2), int(3), int(4), int(6), int(12)]
        );
    }
}
