//! Exact elliptic curve arithmetic over Q.
//!
//! Curves are long Weierstrass models with rational coefficients and eagerly
//! computed b/c-invariants, discriminant and j-invariant. Heavy computations
//! (division polynomials, torsion, isogenies) run on the attached short
//! model Y^2 = X^3 - 27 c4 X - 54 c6, reached by the substitution
//! X = 36x + 3 b2, Y = 216y + 108(a1 x + a3); points transform back exactly.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{
    factor_int, int_mod_p, rat_i, rat_nth_root, squarefree_part, Int, Rat,
};
use crate::factor::rational_roots_fast;
use crate::galois::TorsionShape;
use crate::poly::PolyQ;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EcError {
    Singular,
    OffCurve,
    ZeroTwist,
    MixedCurves,
}

impl core::fmt::Display for EcError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EcError::Singular => write!(f, "singular model (discriminant zero)"),
            EcError::OffCurve => write!(f, "point does not satisfy the curve equation"),
            EcError::ZeroTwist => write!(f, "twist parameter must be nonzero"),
            EcError::MixedCurves => write!(f, "points lie on different curves"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub a6: Rat,
    pub b2: Rat,
    pub b4: Rat,
    pub b6: Rat,
    pub b8: Rat,
    pub c4: Rat,
    pub c6: Rat,
    pub disc: Rat,
    pub j: Rat,
}

impl core::fmt::Debug for WeierstrassCurve {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "[{},{},{},{},{}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine(Rat, Rat),
}

impl core::fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine(x, y) => write!(f, "({}, {})", x, y),
        }
    }
}

/// Exact rational torsion subgroup with generators realizing the shape.
#[derive(Clone, Debug)]
pub struct RationalTorsion {
    pub shape: TorsionShape,
    pub generators: Vec<CurvePoint>,
}

impl WeierstrassCurve {
    pub fn new(a1: Rat, a2: Rat, a3: Rat, a4: Rat, a6: Rat) -> Result<Self, EcError> {
        let b2 = &a1 * &a1 + rat_i(4) * &a2;
        let b4 = rat_i(2) * &a4 + &a1 * &a3;
        let b6 = &a3 * &a3 + rat_i(4) * &a6;
        let b8 = &a1 * &a1 * &a6 + rat_i(4) * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3
            - &a4 * &a4;
        let c4 = &b2 * &b2 - rat_i(24) * &b4;
        let c6 = -(&b2 * &b2 * &b2) + rat_i(36) * &b2 * &b4 - rat_i(216) * &b6;
        let disc = -(&b2 * &b2) * &b8 - rat_i(8) * &b4 * &b4 * &b4 - rat_i(27) * &b6 * &b6
            + rat_i(9) * &b2 * &b4 * &b6;
        if disc.is_zero() {
            return Err(EcError::Singular);
        }
        let j = &c4 * &c4 * &c4 / &disc;
        Ok(WeierstrassCurve {
            a1,
            a2,
            a3,
            a4,
            a6,
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
            j,
        })
    }

    pub fn from_ai(a: [i64; 5]) -> Result<Self, EcError> {
        WeierstrassCurve::new(rat_i(a[0]), rat_i(a[1]), rat_i(a[2]), rat_i(a[3]), rat_i(a[4]))
    }

    /// Short model y^2 = x^3 + Ax + B.
    pub fn short(a: Rat, b: Rat) -> Result<Self, EcError> {
        WeierstrassCurve::new(Rat::zero(), Rat::zero(), Rat::zero(), a, b)
    }

    /// The standard section of the j-line. j = 0 returns y^2 = x^3 + 16
    /// (the member of the degree-27 chain family at t = 1) and j = 1728
    /// returns y^2 = x^3 - x; otherwise y^2 = x^3 + 3j(1728-j) x
    /// + 2j(1728-j)^2, which is nonsingular for every remaining j.
    pub fn from_j(j: &Rat) -> WeierstrassCurve {
        if j.is_zero() {
            return WeierstrassCurve::from_ai([0, 0, 0, 0, 16]).unwrap();
        }
        if *j == rat_i(1728) {
            return WeierstrassCurve::from_ai([0, 0, 0, -1, 0]).unwrap();
        }
        let k = rat_i(1728) - j;
        let a = rat_i(3) * j * &k;
        let b = rat_i(2) * j * &k * &k;
        WeierstrassCurve::short(a, b).expect("j-line section nonsingular")
    }

    pub fn ai(&self) -> [Rat; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    pub fn is_short(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero() && self.a3.is_zero()
    }

    /// Attached short model Y^2 = X^3 - 27 c4 X - 54 c6 (integral whenever
    /// c4, c6 are).
    pub fn short_model(&self) -> WeierstrassCurve {
        WeierstrassCurve::short(rat_i(-27) * &self.c4, rat_i(-54) * &self.c6)
            .expect("short model of nonsingular curve")
    }

    /// Map a point to the attached short model.
    pub fn to_short(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let xx = rat_i(36) * x + rat_i(3) * &self.b2;
                let yy = rat_i(216) * y + rat_i(108) * (&self.a1 * x + &self.a3);
                CurvePoint::Affine(xx, yy)
            }
        }
    }

    /// Inverse of `to_short`.
    pub fn from_short(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(xx, yy) => {
                let x = (xx - rat_i(3) * &self.b2) / rat_i(36);
                let y = (yy - rat_i(108) * (&self.a1 * &x + &self.a3)) / rat_i(216);
                CurvePoint::Affine(x, y)
            }
        }
    }

    /// x-coordinate transform to the attached short model.
    pub fn x_to_short(&self, x: &Rat) -> Rat {
        rat_i(36) * x + rat_i(3) * &self.b2
    }

    pub fn x_from_short(&self, xx: &Rat) -> Rat {
        (xx - rat_i(3) * &self.b2) / rat_i(36)
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
                let rhs = x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6;
                lhs == rhs
            }
        }
    }

    pub fn point(&self, x: Rat, y: Rat) -> Result<CurvePoint, EcError> {
        let p = CurvePoint::Affine(x, y);
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(EcError::OffCurve)
        }
    }

    pub fn neg_point(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let ny = -y.clone() - &self.a1 * x - &self.a3;
                CurvePoint::Affine(x.clone(), ny)
            }
        }
    }

    /// Chord-tangent addition. Inputs must lie on the curve.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, EcError> {
        if !self.contains(p) || !self.contains(q) {
            return Err(EcError::OffCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    pub fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1) = match p {
            CurvePoint::Infinity => return q.clone(),
            CurvePoint::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Infinity => return p.clone(),
            CurvePoint::Affine(x, y) => (x, y),
        };
        if x1 == x2 && (y1 + y2 + &self.a1 * x2 + &self.a3).is_zero() {
            return CurvePoint::Infinity;
        }
        let lam = if p == q {
            let num = rat_i(3) * x1 * x1 + rat_i(2) * &self.a2 * x1 + &self.a4 - &self.a1 * y1;
            let den = rat_i(2) * y1 + &self.a1 * x1 + &self.a3;
            num / den
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let nu = y1 - &lam * x1;
        let x3 = &lam * &lam + &self.a1 * &lam - &self.a2 - x1 - x2;
        let y3 = -(&lam + &self.a1) * &x3 - &nu - &self.a3;
        CurvePoint::Affine(x3, y3)
    }

    pub fn mul(&self, n: i64, p: &CurvePoint) -> Result<CurvePoint, EcError> {
        if !self.contains(p) {
            return Err(EcError::OffCurve);
        }
        let mut k = n;
        let mut base = p.clone();
        if k < 0 {
            base = self.neg_point(&base);
            k = -k;
        }
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Order of a point if at most `cap`, else None.
    pub fn point_order(&self, p: &CurvePoint, cap: u32) -> Option<u32> {
        let mut acc = p.clone();
        for n in 1..=cap {
            if acc == CurvePoint::Infinity {
                return Some(n);
            }
            acc = self.add_unchecked(&acc, p);
        }
        if acc == CurvePoint::Infinity {
            return Some(cap + 1);
        }
        None
    }

    // ---- division polynomials ----

    /// The squared 2-division polynomial 4x^3 + b2 x^2 + 2 b4 x + b6.
    pub fn two_division_poly(&self) -> PolyQ {
        PolyQ::from_coeffs(vec![
            self.b6.clone(),
            rat_i(2) * &self.b4,
            self.b2.clone(),
            rat_i(4),
        ])
    }

    /// The x-parts f_0..f_n of the division polynomials: psi_n = f_n for odd
    /// n and psi_n = f_n * psi_2 for even n, as polynomials in x.
    pub fn division_poly_parts(&self, n: u32) -> Vec<PolyQ> {
        let n = n.max(4) as usize;
        let ff = self.two_division_poly();
        let f2sq = ff.mul(&ff);
        let mut f: Vec<PolyQ> = Vec::with_capacity(n + 1);
        f.push(PolyQ::zero());
        f.push(PolyQ::one());
        f.push(PolyQ::one());
        // psi_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8
        f.push(PolyQ::from_coeffs(vec![
            self.b8.clone(),
            rat_i(3) * &self.b6,
            rat_i(3) * &self.b4,
            self.b2.clone(),
            rat_i(3),
        ]));
        // psi_4 / psi_2 = 2x^6 + b2 x^5 + 5 b4 x^4 + 10 b6 x^3 + 10 b8 x^2
        //                + (b2 b8 - b4 b6) x + (b4 b8 - b6^2)
        f.push(PolyQ::from_coeffs(vec![
            &self.b4 * &self.b8 - &self.b6 * &self.b6,
            &self.b2 * &self.b8 - &self.b4 * &self.b6,
            rat_i(10) * &self.b8,
            rat_i(10) * &self.b6,
            rat_i(5) * &self.b4,
            self.b2.clone(),
            rat_i(2),
        ]));
        for k in 5..=n {
            let m = k / 2;
            let next = if k % 2 == 1 {
                if m % 2 == 0 {
                    f[m + 2]
                        .mul(&f[m].pow(3))
                        .mul(&f2sq)
                        .sub(&f[m - 1].mul(&f[m + 1].pow(3)))
                } else {
                    f[m + 2]
                        .mul(&f[m].pow(3))
                        .sub(&f[m - 1].mul(&f[m + 1].pow(3)).mul(&f2sq))
                }
            } else {
                f[m].mul(
                    &f[m + 2]
                        .mul(&f[m - 1].pow(2))
                        .sub(&f[m - 2].mul(&f[m + 1].pow(2))),
                )
            };
            f.push(next);
        }
        f
    }

    /// Division polynomial in x: for odd n the x-part of psi_n; for even n
    /// the polynomial (psi_n / psi_2) * psi_2^2, whose roots are the
    /// x-coordinates of all nonzero points of order dividing n.
    pub fn division_polynomial(&self, n: u32) -> PolyQ {
        assert!(n >= 1);
        if n == 1 {
            return PolyQ::one();
        }
        let parts = self.division_poly_parts(n);
        if n % 2 == 1 {
            parts[n as usize].clone()
        } else {
            parts[n as usize].mul(&self.two_division_poly())
        }
    }

    // ---- reductions and point counts ----

    /// Integral short model (A, B) with Y^2 = X^3 + AX + B isomorphic to
    /// self over Q.
    pub fn integral_short_ab(&self) -> (Int, Int) {
        let a = rat_i(-27) * &self.c4;
        let b = rat_i(-54) * &self.c6;
        let den = a.denom().lcm(b.denom());
        // scale by w^4, w^6 with w = den: both become integral
        let w4 = Rat::from_integer(den.pow(4));
        let w6 = Rat::from_integer(den.pow(6));
        let ai = a * w4;
        let bi = b * w6;
        debug_assert!(ai.denom().is_one() && bi.denom().is_one());
        (ai.to_integer(), bi.to_integer())
    }

    /// Count points over F_p (p an odd prime of good reduction for the
    /// integral short model).
    pub fn count_points_mod_p(&self, p: u64) -> Option<u64> {
        let (a, b) = self.integral_short_ab();
        let disc = -Int::from(16) * (Int::from(4) * &a * &a * &a + Int::from(27) * &b * &b);
        if p < 3 || int_mod_p(&disc, p) == 0 {
            return None;
        }
        let ap = int_mod_p(&a, p);
        let bp = int_mod_p(&b, p);
        let mut sq_count = vec![0u32; p as usize];
        for i in 0..p {
            sq_count[(i * i % p) as usize] += 1;
        }
        let mut n = 1u64;
        for x in 0..p {
            let rhs = ((x * x % p) * x % p + ap * x % p + bp) % p;
            n += sq_count[rhs as usize] as u64;
        }
        Some(n)
    }

    /// Trace of Frobenius a_p = p + 1 - #E(F_p) at a good odd prime.
    pub fn ap(&self, p: u64) -> Option<i64> {
        self.count_points_mod_p(p)
            .map(|n| p as i64 + 1 - n as i64)
    }

    /// The first k odd primes of good reduction.
    pub fn good_odd_primes(&self, k: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(k);
        let mut p = 3u64;
        while out.len() < k {
            if self.count_points_mod_p(p).is_some() {
                out.push(p);
            }
            p += 2;
            while !crate::arith::is_prime_u64(p) {
                p += 2;
            }
        }
        out
    }

    /// Necessary condition for a rational l-isogeny (odd l): the Frobenius
    /// characteristic polynomial x^2 - a_q x + q must have a root mod l at
    /// every good prime q != l. Returns false only when an isogeny is
    /// impossible.
    pub fn l_isogeny_possible(&self, l: u32) -> bool {
        if l == 2 {
            return true;
        }
        let mut tested = 0;
        let mut p = 3u64;
        while tested < 8 {
            if p != l as u64 {
                if let Some(ap) = self.ap(p) {
                    if !frobenius_splits_mod_l(ap, p, l) {
                        return false;
                    }
                    tested += 1;
                }
            }
            p += 2;
            while !crate::arith::is_prime_u64(p) {
                p += 2;
            }
            if p > 500 {
                break;
            }
        }
        true
    }

    // ---- torsion ----

    /// Exact rational torsion subgroup. Point counts over the first five
    /// good odd primes bound the order; candidate orders are then realized
    /// through rational roots of division polynomials on the short model.
    pub fn torsion_subgroup(&self) -> RationalTorsion {
        let bound = {
            let mut g = 0u64;
            for p in self.good_odd_primes(5) {
                g = g.gcd(&self.count_points_mod_p(p).unwrap());
            }
            g
        };
        let short = self.short_model();
        let mut points: Vec<CurvePoint> = vec![CurvePoint::Infinity];
        let parts_needed = if bound % 8 == 0 { 9 } else { 4 };
        let parts = short.division_poly_parts(parts_needed);
        // layer-by-layer per prime: skip higher prime powers as soon as a
        // layer contributes nothing
        let collect = |poly: &PolyQ, points: &mut Vec<CurvePoint>| -> bool {
            let mut any = false;
            for x in rational_roots_fast(poly) {
                let rhs = &x * &x * &x + &short.a4 * &x + &short.a6;
                if let Some(y) = rat_nth_root(&rhs, 2) {
                    for yy in [y.clone(), -y] {
                        let p = CurvePoint::Affine(x.clone(), yy);
                        if short.point_order(&p, 16).is_some() && !points.contains(&p) {
                            points.push(p.clone());
                            any = true;
                        }
                        if rhs.is_zero() {
                            break;
                        }
                    }
                }
            }
            any
        };
        let v = |q: u64| {
            let mut v = 0u32;
            let mut b = bound;
            while b % q == 0 {
                b /= q;
                v += 1;
            }
            v
        };
        if v(2) >= 1 {
            let have2 = collect(&short.two_division_poly(), &mut points);
            if have2 && v(2) >= 2 && collect(&parts[4], &mut points) && v(2) >= 3 {
                collect(&parts[8], &mut points);
            }
        }
        if v(3) >= 1 && collect(&parts[3], &mut points) && v(3) >= 2 {
            collect(&short.division_poly_parts(9)[9], &mut points);
        }
        if v(5) >= 1 {
            collect(&short.division_poly_parts(5)[5], &mut points);
        }
        if v(7) >= 1 {
            collect(&short.division_poly_parts(7)[7], &mut points);
        }
        // close under addition (combines the prime-power parts)
        loop {
            let mut added = false;
            let snapshot = points.clone();
            for p in &snapshot {
                for q in &snapshot {
                    let s = short.add_unchecked(p, q);
                    if !points.contains(&s) {
                        points.push(s);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let order = points.len() as u32;
        let exponent = points
            .iter()
            .map(|p| short.point_order(p, 16).unwrap())
            .max()
            .unwrap_or(1);
        let shape = TorsionShape::new(order / exponent, exponent)
            .expect("computed torsion is Mazur-admissible");
        let mut generators = Vec::new();
        if exponent > 1 {
            let gen_b = points
                .iter()
                .find(|p| short.point_order(p, 16) == Some(exponent))
                .unwrap()
                .clone();
            if order / exponent > 1 {
                // a second generator of order 2 outside <gen_b>
                let span: Vec<CurvePoint> = (0..exponent)
                    .scan(CurvePoint::Infinity, |acc, _| {
                        let out = acc.clone();
                        *acc = short.add_unchecked(acc, &gen_b);
                        Some(out)
                    })
                    .collect();
                let gen_a = points
                    .iter()
                    .find(|p| short.point_order(p, 16) == Some(2) && !span.contains(p))
                    .unwrap()
                    .clone();
                generators.push(self.from_short(&gen_a));
            }
            generators.push(self.from_short(&gen_b));
        }
        RationalTorsion { shape, generators }
    }

    // ---- twists and isomorphism ----

    /// Quadratic twist by a nonzero integer d (normalized to its squarefree
    /// part): y^2 = x^3 + A d^2 x + B d^3 on the attached short model.
    pub fn quadratic_twist(&self, d: &Int) -> Result<WeierstrassCurve, EcError> {
        if d.is_zero() {
            return Err(EcError::ZeroTwist);
        }
        let d = squarefree_part(d).unwrap();
        let dr = Rat::from_integer(d);
        let a = rat_i(-27) * &self.c4 * &dr * &dr;
        let b = rat_i(-54) * &self.c6 * &dr * &dr * &dr;
        WeierstrassCurve::short(a, b)
    }

    /// A curve with the same j-invariant but minimized quadratic-twist
    /// content: every prime with p^2 | C4 and p^3 | C6 is stripped from the
    /// canonical pair. Changes the isomorphism class (it twists!), so this
    /// serves only computations that are twist-equivariant, like the
    /// offline sporadic-isogeny derivation. Curves with c4 c6 = 0 are
    /// returned canonically instead.
    pub fn twist_minimal_model(&self) -> WeierstrassCurve {
        let (mut c4, mut c6) = self.canonical_c4c6();
        if c4.is_zero() || c6.is_zero() {
            return self.canonical_model();
        }
        for (p, _) in factor_int(&c4.gcd(&c6)) {
            let p2 = p.pow(2);
            let p3 = p.pow(3);
            while (&c4 % &p2).is_zero() && (&c6 % &p3).is_zero() {
                c4 /= &p2;
                c6 /= &p3;
            }
        }
        WeierstrassCurve::short(
            Rat::from_integer(Int::from(-27) * c4),
            Rat::from_integer(Int::from(-54) * c6),
        )
        .expect("twist-minimal model nonsingular")
    }

    /// Canonical integral (C4, C6) pair of the Q-isomorphism class: cleared
    /// of denominators and reduced by every p with p^4 | C4 and p^6 | C6
    /// (for j = 0 or 1728, sixth- resp. fourth-power-free). Two curves are
    /// Q-isomorphic iff these pairs coincide.
    pub fn canonical_c4c6(&self) -> (Int, Int) {
        let den = self.c4.denom().lcm(self.c6.denom());
        let mut c4 = (self.c4.clone() * Rat::from_integer(den.pow(4))).to_integer();
        let mut c6 = (self.c6.clone() * Rat::from_integer(den.pow(6))).to_integer();
        let primes: Vec<Int> = if c4.is_zero() {
            factor_int(&c6).into_iter().map(|(p, _)| p).collect()
        } else if c6.is_zero() {
            factor_int(&c4).into_iter().map(|(p, _)| p).collect()
        } else {
            factor_int(&c4.gcd(&c6)).into_iter().map(|(p, _)| p).collect()
        };
        for p in primes {
            loop {
                let p4 = p.pow(4);
                let p6 = p.pow(6);
                let ok4 = c4.is_zero() || (&c4 % &p4).is_zero();
                let ok6 = c6.is_zero() || (&c6 % &p6).is_zero();
                if ok4 && ok6 {
                    if !c4.is_zero() {
                        c4 /= &p4;
                    }
                    if !c6.is_zero() {
                        c6 /= &p6;
                    }
                } else {
                    break;
                }
            }
        }
        (c4, c6)
    }

    /// Q-isomorphism test via u^4/u^6 scaling of (c4, c6), with the sextic
    /// (j = 0) and quartic (j = 1728) twist cases covered by the canonical
    /// power-free reduction.
    pub fn is_isomorphic(&self, other: &WeierstrassCurve) -> bool {
        self.canonical_c4c6() == other.canonical_c4c6()
    }

    /// Integral curve attached to the canonical (C4, C6) pair:
    /// y^2 = x^3 - 27 C4 x - 54 C6. The representative used for
    /// deduplication, caching and all isogeny computations.
    pub fn canonical_model(&self) -> WeierstrassCurve {
        let (c4, c6) = self.canonical_c4c6();
        WeierstrassCurve::short(
            Rat::from_integer(Int::from(-27) * c4),
            Rat::from_integer(Int::from(-54) * c6),
        )
        .expect("canonical model nonsingular")
    }

    pub fn display_ai(&self) -> String {
        use alloc::format;
        format!(
            "[{},{},{},{},{}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

fn frobenius_splits_mod_l(ap: i64, q: u64, l: u32) -> bool {
    let l64 = l as u64;
    let a = ((ap % l as i64 + l as i64) % l as i64) as u64;
    let qq = q % l64;
    // does x^2 - a x + q have a root mod l?
    for x in 0..l64 {
        if (x * x % l64 + qq) % l64 == a * x % l64 {
            return true;
        }
    }
    false
}

/// Twist factor: the squarefree d with rhs = ref^(d), for two curves with
/// the same j-invariant (not 0 or 1728).
pub fn twist_between(reference: &WeierstrassCurve, other: &WeierstrassCurve) -> Option<Int> {
    if reference.j != other.j || reference.j.is_zero() || reference.j == rat_i(1728) {
        return None;
    }
    // c4' = u^4 d^2 c4, c6' = u^6 d^3 c6 => (c6'/c6)/(c4'/c4) = u^2 d
    let r = (&other.c6 / &reference.c6) / (&other.c4 / &reference.c4);
    let d = squarefree_part(&(r.numer() * r.denom())).ok()?;
    Some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn curve(a: [i64; 5]) -> WeierstrassCurve {
        WeierstrassCurve::from_ai(a).unwrap()
    }

    #[test]
    fn j_invariants() {
        assert_eq!(curve([0, 0, 0, 0, 16]).j, rat_i(0));
        assert_eq!(curve([0, 0, 0, -1, 0]).j, rat_i(1728));
        // c4^3 - c6^2 = 1728 disc
        let e = curve([1, -1, 1, -1, -14]);
        let lhs = &e.c4 * &e.c4 * &e.c4 - &e.c6 * &e.c6;
        assert_eq!(lhs, rat_i(1728) * &e.disc);
    }

    #[test]
    fn from_j_round_trip() {
        for j in [rat_i(0), rat_i(1728), rat_i(-121), rat(-25, 2), rat_i(287496)] {
            assert_eq!(WeierstrassCurve::from_j(&j).j, j);
        }
    }

    #[test]
    fn singular_rejected() {
        assert!(WeierstrassCurve::from_ai([0, 0, 0, 0, 0]).is_err());
        assert!(WeierstrassCurve::from_ai([0, 0, 0, -3, 2]).is_err());
    }

    #[test]
    fn add_identity_and_doubling() {
        let e = curve([0, 0, 0, 4, 0]); // y^2 = x^3 + 4x
        let p = e.point(rat_i(2), rat_i(4)).unwrap();
        assert_eq!(e.add(&p, &CurvePoint::Infinity).unwrap(), p);
        let two_p = e.mul(2, &p).unwrap();
        assert_eq!(two_p, CurvePoint::Affine(rat_i(0), rat_i(0)));
    }

    #[test]
    fn order_five_point() {
        // (0,0) on y^2 + y = x^3 - x^2 has order 5
        let e = curve([0, -1, 1, 0, 0]);
        let p = e.point(rat_i(0), rat_i(0)).unwrap();
        assert_eq!(e.mul(5, &p).unwrap(), CurvePoint::Infinity);
        assert_eq!(e.point_order(&p, 10), Some(5));
    }

    #[test]
    fn off_curve_rejected() {
        let e = curve([0, 0, 0, 4, 0]);
        assert!(e.point(rat_i(1), rat_i(1)).is_err());
        let bogus = CurvePoint::Affine(rat_i(1), rat_i(1));
        assert!(e.add(&bogus, &CurvePoint::Infinity).is_err());
    }

    #[test]
    fn division_poly_small() {
        // y^2 = x^3 + Ax + B: psi_2^2 = 4x^3 + 4Ax + 4B
        let e = curve([0, 0, 0, 1, 0]); // y^2 = x^3 + x
        assert_eq!(
            e.division_polynomial(2),
            PolyQ::from_ints(&[0, 4, 0, 4])
        );
        // n=3: 3x^4 + 6x^2 - 1
        assert_eq!(
            e.division_polynomial(3),
            PolyQ::from_ints(&[-1, 0, 6, 0, 3])
        );
    }

    #[test]
    fn division_poly_degrees() {
        let e = curve([1, -1, 1, -1, -14]);
        for n in [3u32, 5, 7, 9, 11, 13] {
            assert_eq!(
                e.division_polynomial(n).deg(),
                ((n * n - 1) / 2) as usize,
                "n={n}"
            );
        }
    }

    #[test]
    fn division_poly_roots_are_torsion_x() {
        // points of small order have x-coordinates among the roots
        let e = curve([0, -1, 1, 0, 0]); // 5-torsion (0,0)
        let p = e.point(rat_i(0), rat_i(0)).unwrap();
        let ps = e.short_model();
        let f5 = ps.division_polynomial(5);
        let x_short = e.x_to_short(&rat_i(0));
        assert!(f5.eval(&x_short).is_zero());
        let _ = p;
    }

    #[test]
    fn torsion_examples() {
        // y^2 + y = x^3 - x^2 -> Z/5
        let t = curve([0, -1, 1, 0, 0]).torsion_subgroup();
        assert_eq!(t.shape.invariants(), (1, 5));
        // y^2 = x^3 - x -> Z/2 x Z/2
        let t = curve([0, 0, 0, -1, 0]).torsion_subgroup();
        assert_eq!(t.shape.invariants(), (2, 2));
        // y^2 = x^3 + 4x -> Z/4
        let t = curve([0, 0, 0, 4, 0]).torsion_subgroup();
        assert_eq!(t.shape.invariants(), (1, 4));
        // 17.a fixture curve -> Z/4 (a member of the T4 class)
        let t = curve([1, -1, 1, -1, -14]).torsion_subgroup();
        assert_eq!(t.shape.order(), 4);
    }

    #[test]
    fn torsion_generators_orders() {
        let e = curve([0, 0, 0, -1, 0]);
        let t = e.torsion_subgroup();
        assert_eq!(t.generators.len(), 2);
        for g in &t.generators {
            assert!(e.contains(g));
            assert_eq!(e.point_order(g, 4), Some(2));
        }
    }

    #[test]
    fn twist_preserves_j() {
        let e = curve([1, 0, 1, 4, -6]);
        for d in [-1i64, 2, -3, 5, 12] {
            let t = e.quadratic_twist(&int(d)).unwrap();
            assert_eq!(t.j, e.j, "d={d}");
        }
    }

    #[test]
    fn twist_involution_and_identity() {
        let e = curve([0, 0, 0, -2, 3]);
        let t = e.quadratic_twist(&int(5)).unwrap();
        let back = t.quadratic_twist(&int(5)).unwrap();
        assert!(back.is_isomorphic(&e));
        assert!(e.quadratic_twist(&int(1)).unwrap().is_isomorphic(&e));
        assert!(e.quadratic_twist(&int(0)).is_err());
        // generic curve: twist by 5 is not isomorphic
        assert!(!t.is_isomorphic(&e));
    }

    #[test]
    fn j1728_minus_one_twist_selfiso() {
        // (y^2 = x^3 - x)^(-1) is isomorphic to itself
        let e = curve([0, 0, 0, -1, 0]);
        let t = e.quadratic_twist(&int(-1)).unwrap();
        assert!(t.is_isomorphic(&e));
    }

    #[test]
    fn isomorphism_rescaling() {
        // (x, y) -> (4x, 8y) rescaling of y^2 = x^3 - 2x + 1
        let e = curve([0, 0, 0, -2, 1]);
        let e2 = WeierstrassCurve::short(rat(-2, 16), rat(1, 64)).unwrap();
        assert!(e.is_isomorphic(&e2));
    }

    #[test]
    fn sextic_twist_not_isomorphic() {
        let e1 = curve([0, 0, 0, 0, 1]);
        let e2 = curve([0, 0, 0, 0, 2]);
        assert!(!e1.is_isomorphic(&e2));
        let e64 = curve([0, 0, 0, 0, 64]);
        assert!(e1.is_isomorphic(&e64)); // 64 = 2^6
    }

    #[test]
    fn point_counts_and_ap() {
        // y^2 = x^3 + x over F_5: N = 4? count: x=0:y^2=0:1; x=1:2:0? squares
        let e = curve([0, 0, 0, 1, 0]);
        let n5 = e.count_points_mod_p(5).unwrap();
        assert_eq!(n5 % 4, 0); // full 2-torsion forces 4 | N
        let ap = e.ap(5).unwrap();
        assert_eq!(ap, 5 + 1 - n5 as i64);
        assert!(ap.abs() * ap.abs() <= 4 * 5);
    }

    #[test]
    fn isogeny_prefilter_sanity() {
        // curve with a rational 5-torsion point admits a 5-isogeny
        let e = curve([0, -1, 1, 0, 0]);
        assert!(e.l_isogeny_possible(5));
        // random-ish curve should fail the mod-13 filter
        let e = curve([1, 2, 3, 4, 5]);
        assert!(!e.l_isogeny_possible(13));
    }

    #[test]
    fn twist_between_curves() {
        let e = curve([0, 0, 0, -2, 3]);
        let t = e.quadratic_twist(&int(7)).unwrap();
        assert_eq!(twist_between(&e, &t), Some(int(7)));
        assert_eq!(twist_between(&e, &e.canonical_model()), Some(int(1)));
    }

    #[test]
    fn short_point_round_trip() {
        let e = curve([1, -1, 1, -1, -14]);
        let s = e.short_model();
        // find a rational point via torsion machinery
        let t = e.torsion_subgroup();
        let g = &t.generators[0];
        let gs = e.to_short(g);
        assert!(s.contains(&gs));
        assert_eq!(&e.from_short(&gs), g);
    }
}
