//! Rational isogenies and isogeny-class enumeration.
//!
//! Prime degrees 2, 3, 5, 7, 13 are found from kernel polynomials: monic
//! degree-(l-1)/2 rational factors of the l-division polynomial whose root
//! set is closed under the x-action of scalar multiplication. The sporadic
//! degrees 11, 17, 19, 37, 43, 67, 163 occur only for the finitely many
//! j-invariants shipped in `data/sporadic.txt` (see `tools` in the cli crate
//! for the generating run). Classes are closed breadth-first with
//! Q-isomorphism deduplication.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{int, rat_i, squarefree_part, Int, Rat};
use crate::ec::{twist_between, EcError, RationalTorsion, WeierstrassCurve};
use crate::factor::{monic_factors_of_degree, rational_roots_fast};
use crate::poly::PolyQ;

pub const KERNEL_DEGREES: &[u32] = &[2, 3, 5, 7, 13];
pub const SPORADIC_DEGREES: &[u32] = &[11, 17, 19, 37, 43, 67, 163];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsogenyError {
    UnsupportedDegree(u32),
    KernelNotStable,
    KenkuExceeded(usize),
    Curve(EcError),
}

impl core::fmt::Display for IsogenyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            IsogenyError::UnsupportedDegree(l) => write!(f, "unsupported kernel degree {l}"),
            IsogenyError::KernelNotStable => {
                write!(f, "kernel polynomial is not Galois-stable")
            }
            IsogenyError::KenkuExceeded(n) => {
                write!(f, "isogeny class grew to {n} curves; Kenku bound is 8 (internal bug)")
            }
            IsogenyError::Curve(e) => write!(f, "{e}"),
        }
    }
}

impl From<EcError> for IsogenyError {
    fn from(e: EcError) -> Self {
        IsogenyError::Curve(e)
    }
}

/// A rational cyclic kernel of prime order on a short-model curve, given by
/// its monic kernel polynomial (degree (l-1)/2 for odd l, degree 1 for 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelPoly {
    pub degree: u32,
    pub poly: PolyQ,
}

/// The x-coordinate multiplication-by-m map on y^2 = x^3 + Ax + B as a
/// rational function (numerator, denominator) built from division-polynomial
/// parts: x([m]P) = x - f_{m-1} f_{m+1} psi_2^2 / f_m^2 for odd m and
/// x - f_{m-1} f_{m+1} / (f_m^2 psi_2^2) for even m.
fn x_multiplication_map(e: &WeierstrassCurve, m: u32) -> (PolyQ, PolyQ) {
    let parts = e.division_poly_parts(m + 1);
    let ff = e.two_division_poly();
    let x = PolyQ::x();
    let (num, den);
    if m.is_multiple_of(2) {
        den = parts[m as usize].pow(2).mul(&ff);
        num = x.mul(&den).sub(&parts[(m - 1) as usize].mul(&parts[(m + 1) as usize]));
    } else {
        den = parts[m as usize].pow(2);
        num = x
            .mul(&den)
            .sub(&parts[(m - 1) as usize].mul(&parts[(m + 1) as usize]).mul(&ff));
    }
    (num, den)
}

fn primitive_root_mod(l: u32) -> u32 {
    crate::gl2::unit_group_generators(l)[0]
}

/// Is the root set of the monic candidate g (a divisor of the l-division
/// x-part) closed under x([m].)? Checked as sum_i g_i Num^i Den^(d-i) = 0
/// mod g. With m generating (Z/l)^x / {+-1}, closure makes the root set the
/// full x-set of a single cyclic l-kernel.
fn kernel_stable(e: &WeierstrassCurve, g: &PolyQ, l: u32) -> bool {
    let d = g.deg();
    if d == 0 {
        return false;
    }
    let m = primitive_root_mod(l);
    let (num, den) = x_multiplication_map(e, m);
    let num = num.rem(g);
    let den = den.rem(g);
    // Horner in Num/Den: value = sum g_i Num^i Den^(d-i)
    let mut acc = PolyQ::zero();
    for i in (0..=d).rev() {
        acc = acc.mul(&num).rem(g);
        let gi = g.coeff(i);
        if !gi.is_zero() {
            // add g_i * Den^(d-i)
            let mut term = PolyQ::constant(gi);
            for _ in 0..(d - i) {
                term = term.mul(&den).rem(g);
            }
            acc = acc.add(&term);
        }
    }
    acc.rem(g).is_zero()
}

/// All rational cyclic l-kernels of E for l in {2, 3, 5, 7, 13}, on the
/// canonical short model of E.
pub fn rational_kernels(e: &WeierstrassCurve, l: u32) -> Result<Vec<KernelPoly>, IsogenyError> {
    if !KERNEL_DEGREES.contains(&l) {
        return Err(IsogenyError::UnsupportedDegree(l));
    }
    let e = e.canonical_model();
    if l == 2 {
        let cubic = e.two_division_poly();
        let mut out = Vec::new();
        for r in rational_roots_fast(&cubic) {
            out.push(KernelPoly {
                degree: 2,
                poly: PolyQ::from_coeffs(vec![-r, Rat::one()]),
            });
        }
        out.sort_by(|a, b| a.poly.coeffs().cmp(b.poly.coeffs()));
        return Ok(out);
    }
    if !e.l_isogeny_possible(l) {
        return Ok(Vec::new());
    }
    let parts = e.division_poly_parts(l);
    let fl = &parts[l as usize];
    let d = ((l - 1) / 2) as usize;
    let mut out = Vec::new();
    for g in monic_factors_of_degree(fl, d) {
        if kernel_stable(&e, &g, l) {
            out.push(KernelPoly { degree: l, poly: g });
        }
    }
    out.sort_by(|a, b| a.poly.coeffs().cmp(b.poly.coeffs()));
    Ok(out)
}

/// Kernel search for an arbitrary odd prime degree, without the supported-
/// degree gate or the Frobenius prefilter. This is the slow path used by the
/// offline sporadic-table derivation; class enumeration never calls it.
pub fn kernels_any_odd_prime(e: &WeierstrassCurve, l: u32) -> Vec<KernelPoly> {
    let e = e.canonical_model();
    let parts = e.division_poly_parts(l);
    let fl = &parts[l as usize];
    let d = ((l - 1) / 2) as usize;
    let mut out = Vec::new();
    for g in monic_factors_of_degree(fl, d) {
        if kernel_stable(&e, &g, l) {
            out.push(KernelPoly { degree: l, poly: g });
        }
    }
    out.sort_by(|a, b| a.poly.coeffs().cmp(b.poly.coeffs()));
    out
}

/// Velu quotient: the codomain of the isogeny with the given kernel, on the
/// canonical short model of E. Re-verifies kernel stability.
pub fn velu(e: &WeierstrassCurve, k: &KernelPoly) -> Result<WeierstrassCurve, IsogenyError> {
    let e = e.canonical_model();
    let a = e.a4.clone();
    let b = e.a6.clone();
    let g = &k.poly;
    if k.degree == 2 {
        if g.deg() != 1 || !g.is_monic() {
            return Err(IsogenyError::KernelNotStable);
        }
        let x0 = -g.coeff(0);
        // must be a 2-torsion x-coordinate
        if !(&x0 * &x0 * &x0 + &a * &x0 + &b).is_zero() {
            return Err(IsogenyError::KernelNotStable);
        }
        let t = rat_i(3) * &x0 * &x0 + &a;
        let w = &x0 * &t;
        let a2 = &a - rat_i(5) * &t;
        let b2 = &b - rat_i(7) * &w;
        return WeierstrassCurve::short(a2, b2).map_err(IsogenyError::from);
    }
    let d = ((k.degree - 1) / 2) as usize;
    if g.deg() != d
        || !g.is_monic()
        || !g.divides(&e.division_poly_parts(k.degree)[k.degree as usize])
        || !kernel_stable(&e, g, k.degree)
    {
        return Err(IsogenyError::KernelNotStable);
    }
    // power sums of the kernel x-coordinates from the monic coefficients
    let e1 = -g.coeff(d - 1);
    let e2 = if d >= 2 { g.coeff(d - 2) } else { Rat::zero() };
    let e3 = if d >= 3 { -g.coeff(d - 3) } else { Rat::zero() };
    let p1 = e1.clone();
    let p2 = &e1 * &p1 - rat_i(2) * &e2;
    let p3 = &e1 * &p2 - &e2 * &p1 + rat_i(3) * &e3;
    let dn = rat_i(d as i64);
    let t = rat_i(6) * &p2 + rat_i(2) * &dn * &a;
    let w = rat_i(10) * &p3 + rat_i(6) * &a * &p1 + rat_i(4) * &dn * &b;
    let a2 = &a - rat_i(5) * &t;
    let b2 = &b - rat_i(7) * &w;
    WeierstrassCurve::short(a2, b2).map_err(IsogenyError::from)
}

/// One row of the sporadic-isogeny table: curves with j-invariant `j_from`
/// admit an l-isogeny to the `twist`-twist of the standard model with
/// j-invariant `j_to`.
#[derive(Clone, Debug)]
pub struct SporadicRow {
    pub l: u32,
    pub j_from: Rat,
    pub j_to: Rat,
    pub twist: Int,
}

pub(crate) fn parse_rat(s: &str) -> Rat {
    match s.split_once('/') {
        Some((n, d)) => Rat::new(
            n.parse::<i128>().map(Int::from).unwrap_or_else(|_| parse_big(n)),
            d.parse::<i128>().map(Int::from).unwrap_or_else(|_| parse_big(d)),
        ),
        None => Rat::from_integer(
            s.parse::<i128>().map(Int::from).unwrap_or_else(|_| parse_big(s)),
        ),
    }
}

fn parse_big(s: &str) -> Int {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mut n = Int::zero();
    for c in digits.bytes() {
        n = n * Int::from(10) + Int::from((c - b'0') as u32);
    }
    if neg {
        -n
    } else {
        n
    }
}

/// The versioned sporadic-j table shipped with the crate.
pub fn sporadic_table() -> Vec<SporadicRow> {
    let data = include_str!("../data/sporadic.txt");
    let mut out = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let l: u32 = it.next().unwrap().parse().unwrap();
        let j_from = parse_rat(it.next().unwrap());
        let j_to = parse_rat(it.next().unwrap());
        let twist = parse_rat(it.next().unwrap()).to_integer();
        out.push(SporadicRow {
            l,
            j_from,
            j_to,
            twist,
        });
    }
    out
}

/// Sporadic isogenies from E: degrees l in {11, 17, 19, 37, 43, 67, 163}
/// occur only for the j-invariants in the table; matches return the exact
/// codomain curve.
pub fn sporadic_isogenies(e: &WeierstrassCurve) -> Vec<(u32, WeierstrassCurve)> {
    let mut out = Vec::new();
    for row in sporadic_table() {
        if e.j != row.j_from {
            continue;
        }
        let reference = WeierstrassCurve::from_j(&row.j_from);
        let Some(t) = twist_between(&reference, e) else {
            continue;
        };
        let d = squarefree_part(&(&row.twist * &t)).unwrap_or_else(|_| int(1));
        let codomain = WeierstrassCurve::from_j(&row.j_to)
            .quadratic_twist(&d)
            .expect("twist of table curve");
        out.push((row.l, codomain));
    }
    out.sort_by_key(|(l, _)| *l);
    out
}

/// A Q-isogeny class: curves in discovery order (canonical short models),
/// prime-degree edges stored in both directions, and per-curve torsion.
#[derive(Clone, Debug)]
pub struct IsogenyClass {
    pub curves: Vec<WeierstrassCurve>,
    pub edges: Vec<(usize, usize, u32)>,
    pub torsion: Vec<RationalTorsion>,
}

impl IsogenyClass {
    /// Undirected edge list (i < j), deduplicated.
    pub fn undirected_edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out: Vec<(usize, usize, u32)> = self
            .edges
            .iter()
            .map(|&(i, j, l)| (i.min(j), i.max(j), l))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// C_p for each prime appearing in the class: the number of connected
    /// components after deleting all p-edges equals prod_{q != p} C_q, so
    /// C_p = |vertices| / that count; computed directly as the number of
    /// classes under "connected by p-edges only" projected the other way.
    pub fn cp_count(&self, p: u32) -> usize {
        // union-find over non-p edges; C_p = number of components
        let n = self.curves.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(i, j, l) in &self.edges {
            if l != p {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    pub fn edge_primes(&self) -> Vec<u32> {
        let mut ps: Vec<u32> = self.edges.iter().map(|&(_, _, l)| l).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    pub fn is_connected(&self) -> bool {
        let n = self.curves.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &(a, b, _) in &self.edges {
                let other = if a == i {
                    b
                } else if b == i {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn torsion_displays(&self) -> Vec<String> {
        self.torsion.iter().map(|t| t.shape.display()).collect()
    }
}

/// Breadth-first closure of the Q-isogeny class of E: kernels of degree
/// 2, 3, 5, 7, 13 plus sporadic table degrees, with curves deduplicated by
/// Q-isomorphism (canonical (C4, C6) pairs, never by j alone).
pub fn isogeny_class(e: &WeierstrassCurve) -> Result<IsogenyClass, IsogenyError> {
    let start = e.canonical_model();
    let mut curves = vec![start];
    let mut keys = vec![curves[0].canonical_c4c6()];
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    let mut undirected = BTreeMap::<(usize, usize, u32), ()>::new();
    let mut idx = 0usize;
    while idx < curves.len() {
        let current = curves[idx].clone();
        let mut targets: Vec<(u32, WeierstrassCurve)> = Vec::new();
        for &l in KERNEL_DEGREES {
            for k in rational_kernels(&current, l)? {
                targets.push((l, velu(&current, &k)?));
            }
        }
        for (l, codomain) in sporadic_isogenies(&current) {
            targets.push((l, codomain));
        }
        for (l, codomain) in targets {
            let canon = codomain.canonical_model();
            let key = canon.canonical_c4c6();
            let j = match keys.iter().position(|k| *k == key) {
                Some(j) => j,
                None => {
                    curves.push(canon);
                    keys.push(key);
                    if curves.len() > 8 {
                        return Err(IsogenyError::KenkuExceeded(curves.len()));
                    }
                    curves.len() - 1
                }
            };
            if j != idx {
                undirected.insert((idx.min(j), idx.max(j), l), ());
            }
        }
        idx += 1;
    }
    for &(i, j, l) in undirected.keys() {
        edges.push((i, j, l));
        edges.push((j, i, l));
    }
    edges.sort_unstable();
    let torsion = curves.iter().map(|c| c.torsion_subgroup()).collect();
    Ok(IsogenyClass {
        curves,
        edges,
        torsion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_i;
    use crate::ec::CurvePoint;

    fn curve(a: [i64; 5]) -> WeierstrassCurve {
        WeierstrassCurve::from_ai(a).unwrap()
    }

    #[test]
    fn two_kernels_counts() {
        // y^2 = x^3 + x: one rational 2-torsion point
        assert_eq!(rational_kernels(&curve([0, 0, 0, 1, 0]), 2).unwrap().len(), 1);
        // y^2 = x^3 - x: full 2-torsion
        assert_eq!(rational_kernels(&curve([0, 0, 0, -1, 0]), 2).unwrap().len(), 3);
        assert!(rational_kernels(&curve([0, 0, 0, 1, 0]), 11).is_err());
    }

    #[test]
    fn five_kernel_exists() {
        // y^2 + y = x^3 - x^2 has a rational 5-torsion point, hence a
        // rational 5-kernel (brute-force oracle: its x-coordinate, on the
        // canonical model, is a root of the kernel polynomial)
        let e = curve([0, -1, 1, 0, 0]);
        let kernels = rational_kernels(&e, 5).unwrap();
        assert!(!kernels.is_empty());
        let canon = e.canonical_model();
        let t = canon.torsion_subgroup();
        assert_eq!(t.shape.invariants(), (1, 5));
        let CurvePoint::Affine(x5, _) = &t.generators[0] else {
            panic!()
        };
        assert!(kernels.iter().any(|k| k.poly.eval(x5).is_zero()));
    }

    #[test]
    fn velu_two_isogeny_formula() {
        // classical: y^2 = x^3 + ax^2 + bx with kernel (0,0) maps to
        // y^2 = x^3 - 2ax^2 + (a^2 - 4b)x
        let (a, b) = (3i64, 2i64);
        let e = curve([0, a, 0, b, 0]);
        let canon = e.canonical_model();
        let kernels = rational_kernels(&canon, 2).unwrap();
        let target = curve([0, -2 * a, 0, a * a - 4 * b, 0]);
        let found = kernels
            .iter()
            .map(|k| velu(&canon, k).unwrap())
            .any(|c| c.is_isomorphic(&target));
        assert!(found);
    }

    #[test]
    fn velu_dual_composition() {
        // quotient twice along the dual returns to the start
        let e = curve([0, 0, 0, -1, 0]).canonical_model();
        for k in rational_kernels(&e, 2).unwrap() {
            let e2 = velu(&e, &k).unwrap();
            let back: Vec<WeierstrassCurve> = rational_kernels(&e2, 2)
                .unwrap()
                .iter()
                .map(|k2| velu(&e2, k2).unwrap())
                .collect();
            assert!(back.iter().any(|c| c.is_isomorphic(&e)));
        }
    }

    #[test]
    fn velu_rejects_unstable_kernel() {
        let e = curve([0, 0, 0, 1, 0]).canonical_model();
        let bogus = KernelPoly {
            degree: 3,
            poly: PolyQ::from_ints(&[5, 1]),
        };
        assert!(velu(&e, &bogus).is_err());
    }

    #[test]
    fn modular_polynomial_level2_relation() {
        // classical Phi_2(j, j') = 0 for 2-isogenous curves
        let e = curve([0, 0, 0, -11, 14]).canonical_model();
        for k in rational_kernels(&e, 2).unwrap() {
            let e2 = velu(&e, &k).unwrap();
            assert!(phi2(&e.j, &e2.j).is_zero());
        }
    }

    fn phi2(x: &Rat, y: &Rat) -> Rat {
        let (x2, y2) = (x * x, y * y);
        let (x3, y3) = (&x2 * x, &y2 * y);
        &x3 + &y3 - &x2 * &y2
            + rat_i(1488) * (&x2 * y + x * &y2)
            - rat_i(162000) * (&x2 + &y2)
            + rat_i(40773375) * (x * y)
            + rat_i(8748000000) * (x + y)
            - rat_i(157464000000000)
    }

    #[test]
    fn class_17a() {
        // conductor 17: four curves, all 2-isogenies, torsion orders
        // {4, 4, 4, 2} with one (2,2)
        let cls = isogeny_class(&curve([1, -1, 1, -1, -14])).unwrap();
        assert_eq!(cls.curves.len(), 4);
        let und = cls.undirected_edges();
        assert_eq!(und.len(), 3);
        assert!(und.iter().all(|&(_, _, l)| l == 2));
        let mut shapes: Vec<(u32, u32)> =
            cls.torsion.iter().map(|t| t.shape.invariants()).collect();
        shapes.sort_unstable();
        assert_eq!(shapes, vec![(1, 2), (1, 4), (1, 4), (2, 2)]);
        assert!(cls.is_connected());
        assert_eq!(cls.cp_count(2), 4);
    }

    #[test]
    fn class_five_chain() {
        // y^2 + y = x^3 - x^2: 3 curves in a 5-isogeny chain, torsion
        // ([5],[5],[1])
        let cls = isogeny_class(&curve([0, -1, 1, 0, 0])).unwrap();
        assert_eq!(cls.curves.len(), 3);
        let und = cls.undirected_edges();
        assert_eq!(und.len(), 2);
        assert!(und.iter().all(|&(_, _, l)| l == 5));
        let mut orders: Vec<u32> = cls.torsion.iter().map(|t| t.shape.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 5, 5]);
        assert_eq!(cls.cp_count(5), 3);
    }

    #[test]
    fn class_27_chain() {
        // y^2 = x^3 + 16: four curves containing a 27-chain, j-multiset
        // {0, 0, -12288000, -12288000}
        let cls = isogeny_class(&curve([0, 0, 0, 0, 16])).unwrap();
        assert_eq!(cls.curves.len(), 4);
        let mut js: Vec<Rat> = cls.curves.iter().map(|c| c.j.clone()).collect();
        js.sort();
        assert_eq!(
            js,
            vec![rat_i(-12288000), rat_i(-12288000), rat_i(0), rat_i(0)]
        );
        let und = cls.undirected_edges();
        assert_eq!(und.len(), 3);
        assert!(und.iter().all(|&(_, _, l)| l == 3));
    }

    #[test]
    fn class_independent_of_representative() {
        let cls = isogeny_class(&curve([1, -1, 1, -1, -14])).unwrap();
        for c in &cls.curves {
            let other = isogeny_class(c).unwrap();
            assert_eq!(other.curves.len(), cls.curves.len());
            let mut k1: Vec<_> = cls.curves.iter().map(|c| c.canonical_c4c6()).collect();
            let mut k2: Vec<_> = other.curves.iter().map(|c| c.canonical_c4c6()).collect();
            k1.sort();
            k2.sort();
            assert_eq!(k1, k2);
        }
    }

    #[test]
    fn every_edge_mirrored() {
        let cls = isogeny_class(&curve([0, -1, 1, 0, 0])).unwrap();
        for &(i, j, l) in &cls.edges {
            assert!(cls.edges.contains(&(j, i, l)));
        }
    }
}
