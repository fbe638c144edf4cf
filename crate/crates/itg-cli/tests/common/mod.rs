//! Test-side oracles, independent of the implementation paths they check.

use itg_core::arith::{factor_int, Int, Rat};
use itg_core::ec::WeierstrassCurve;
use num_traits::{Signed, Zero};

/// An independent exact group law on y^2 = x^3 + Ax + B (used only by the
/// oracle, so torsion results do not flow through the library's point
/// arithmetic).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pt {
    Inf,
    At(Rat, Rat),
}

fn add(a: &Rat, b: &Rat, p: &Pt, q: &Pt) -> Pt {
    let _ = b;
    match (p, q) {
        (Pt::Inf, _) => q.clone(),
        (_, Pt::Inf) => p.clone(),
        (Pt::At(x1, y1), Pt::At(x2, y2)) => {
            if x1 == x2 && (y1.clone() + y2).is_zero() {
                return Pt::Inf;
            }
            let lam = if p == q {
                (Rat::from_integer(Int::from(3)) * x1 * x1 + a)
                    / (Rat::from_integer(Int::from(2)) * y1)
            } else {
                (y2.clone() - y1) / (x2.clone() - x1)
            };
            let x3 = lam.clone() * &lam - x1 - x2;
            let y3 = lam * (x1.clone() - &x3) - y1;
            Pt::At(x3, y3)
        }
    }
}

fn order_at_most(a: &Rat, b: &Rat, p: &Pt, cap: u32) -> Option<u32> {
    let mut acc = p.clone();
    for n in 1..=cap {
        if acc == Pt::Inf {
            return Some(n);
        }
        acc = add(a, b, &acc, p);
    }
    if acc == Pt::Inf {
        Some(cap + 1)
    } else {
        None
    }
}

/// Integer roots of the monic cubic x^3 + Ax + C via divisor testing of the
/// constant term.
fn integer_cubic_roots(a: &Int, c: &Int) -> Vec<Int> {
    let mut roots = Vec::new();
    if c.is_zero() {
        roots.push(Int::from(0));
        // remaining quadratic x^2 + A = 0
        if a.is_negative() {
            if let Some(r) = itg_core::arith::nth_root_exact(&-a.clone(), 2) {
                roots.push(r.clone());
                roots.push(-r);
            }
        }
        return roots;
    }
    for d in itg_core::arith::divisors(c) {
        for x in [d.clone(), -d] {
            if (&x * &x * &x + a * &x + c).is_zero() && !roots.contains(&x) {
                roots.push(x);
            }
        }
    }
    roots
}

/// Lutz-Nagell brute force: on an integral model y^2 = x^3 + Ax + B every
/// torsion point has integer coordinates with y = 0 or y^2 | 4A^3 + 27B^2.
/// Candidates are screened by checking the point order directly (Mazur caps
/// orders at 12). Returns the invariant factors of the torsion subgroup.
pub fn nagell_lutz_torsion(e: &WeierstrassCurve) -> (u32, u32) {
    let canon = e.canonical_model();
    let a = canon.a4.to_integer();
    let b = canon.a6.to_integer();
    // the safe superset: y = 0 or y^2 | 16 (4A^3 + 27B^2), which contains
    // the classical divisor criterion whichever discriminant normalization
    // one states it with
    let d = Int::from(64) * &a * &a * &a + Int::from(432) * &b * &b;
    assert!(!d.is_zero());
    let mut ys = vec![Int::from(0)];
    let mut square_root_part = Int::from(1);
    for (p, e) in factor_int(&d) {
        square_root_part *= p.pow(e / 2);
    }
    for y in itg_core::arith::divisors(&square_root_part) {
        ys.push(y);
    }
    let ar = Rat::from_integer(a.clone());
    let br = Rat::from_integer(b.clone());
    let mut points = vec![Pt::Inf];
    for y in ys {
        let c = &b - &y * &y;
        for x in integer_cubic_roots(&a, &c) {
            for yy in [y.clone(), -y.clone()] {
                let p = Pt::At(Rat::from_integer(x.clone()), Rat::from_integer(yy));
                if points.contains(&p) {
                    continue;
                }
                if order_at_most(&ar, &br, &p, 16).is_some() {
                    points.push(p);
                }
            }
        }
    }
    let order = points.len() as u32;
    let exponent = points
        .iter()
        .map(|p| order_at_most(&ar, &br, p, 16).unwrap())
        .max()
        .unwrap_or(1);
    (order / exponent, exponent)
}

/// Deterministic linear congruential generator for reproducible samples.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    pub fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % ((hi - lo + 1) as u64)) as i64
    }
}

/// Random nonsingular curves with long-Weierstrass coefficients bounded by
/// `height`.
pub fn random_curves(seed: u64, count: usize, height: i64) -> Vec<WeierstrassCurve> {
    let mut rng = Lcg::new(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let a = [
            rng.in_range(-height, height),
            rng.in_range(-height, height),
            rng.in_range(-height, height),
            rng.in_range(-height, height),
            rng.in_range(-height, height),
        ];
        if let Ok(e) = WeierstrassCurve::from_ai(a) {
            out.push(e);
        }
    }
    out
}
