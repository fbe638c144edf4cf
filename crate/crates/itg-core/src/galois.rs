//! Symbolic torsion from mod-N Galois images.
//!
//! Everything here works with a subgroup G of GL(2, Z/N) standing for the
//! image of a mod-N Galois representation. Rational points of the curve are
//! G-fixed vectors of (Z/N)^2; Q-rational cyclic subgroups are G-stable
//! cyclic submodules; and the torsion of the quotient by a stable submodule
//! C is the group {v : g v - v in C for all g} / C, the point-rationality
//! criterion applied symbolically.
//!
//! Images may be used at their own level or lifted to a higher prime-power
//! level as the *full preimage* of the reduction map. Lifts are never
//! materialized: the kernel of reduction acts on v by v -> v + n0*M*v, so
//! its conditions reduce to four explicit vector memberships.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::gl2::{GroupModN, MatModN};

/// Invariant-factor form (a, b), a | b, of a rational torsion subgroup,
/// constrained to Mazur's list: (1, 1..=10 or 12) or (2, 2|4|6|8).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionShape {
    a: u32,
    b: u32,
}

impl core::fmt::Debug for TorsionShape {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl TorsionShape {
    pub fn new(a: u32, b: u32) -> Result<Self, GaloisError> {
        let ok = match (a, b) {
            (1, m) => (1..=10).contains(&m) || m == 12,
            (2, n) => matches!(n, 2 | 4 | 6 | 8),
            _ => false,
        };
        if ok {
            Ok(TorsionShape { a, b })
        } else {
            Err(GaloisError::NonMazurTorsion { a, b })
        }
    }

    pub fn trivial() -> Self {
        TorsionShape { a: 1, b: 1 }
    }

    pub fn invariants(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn order(&self) -> u32 {
        self.a * self.b
    }

    /// The paper's tuple notation: `[b]` when cyclic, `[a,b]` otherwise.
    pub fn display(&self) -> String {
        if self.a == 1 {
            format!("[{}]", self.b)
        } else {
            format!("[{},{}]", self.a, self.b)
        }
    }
}

/// A G-stable cyclic submodule of (Z/level)^2: the symbolic counterpart of
/// a Q-rational cyclic subgroup (an isogeny kernel).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclicSubmodule {
    pub level: u32,
    pub generator: (u32, u32),
    pub order: u32,
    elements: Vec<(u32, u32)>,
}

impl core::fmt::Debug for CyclicSubmodule {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "<({},{})> order {} mod {}",
            self.generator.0, self.generator.1, self.order, self.level
        )
    }
}

pub fn vector_order(level: u32, v: (u32, u32)) -> u32 {
    level / level.gcd(&v.0.gcd(&v.1))
}

impl CyclicSubmodule {
    pub fn new(level: u32, generator: (u32, u32)) -> Self {
        let generator = (generator.0 % level, generator.1 % level);
        let order = vector_order(level, generator);
        let mut elements = Vec::with_capacity(order as usize);
        let mut w = (0u32, 0u32);
        for _ in 0..order {
            elements.push(w);
            w = ((w.0 + generator.0) % level, (w.1 + generator.1) % level);
        }
        elements.sort_unstable();
        CyclicSubmodule {
            level,
            generator,
            order,
            elements,
        }
    }

    pub fn trivial(level: u32) -> Self {
        CyclicSubmodule::new(level, (0, 0))
    }

    pub fn contains(&self, v: (u32, u32)) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    pub fn elements(&self) -> &[(u32, u32)] {
        &self.elements
    }

    /// Is self a subgroup of other of index exactly `index`?
    pub fn contained_with_index(&self, other: &CyclicSubmodule, index: u32) -> bool {
        other.order == self.order * index && self.elements.iter().all(|&v| other.contains(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaloisError {
    NonMazurTorsion { a: u32, b: u32 },
    LevelInadequate { supplied: u32, required: u32 },
    SubmoduleNotStable,
    NotPrimePower { level: u32, prime: u32 },
    NotFullDeterminant { prime: u32 },
    UnsupportedPrime { prime: u32 },
    KenkuViolated(String),
}

impl core::fmt::Display for GaloisError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GaloisError::NonMazurTorsion { a, b } => {
                write!(f, "torsion shape ({a},{b}) is not Mazur-admissible")
            }
            GaloisError::LevelInadequate { supplied, required } => write!(
                f,
                "image level {supplied} inadequate; lift the image to level {required}"
            ),
            GaloisError::SubmoduleNotStable => write!(f, "submodule is not stable under the image"),
            GaloisError::NotPrimePower { level, prime } => {
                write!(f, "level {level} is not a power of {prime}")
            }
            GaloisError::NotFullDeterminant { prime } => write!(
                f,
                "mod-{prime} image does not have full determinant, so it is not a Galois image"
            ),
            GaloisError::UnsupportedPrime { prime } => {
                write!(f, "prime {prime} outside the supported set {{2,3,5,7,11,13}}")
            }
            GaloisError::KenkuViolated(msg) => write!(f, "Kenku bound violated: {msg}"),
        }
    }
}

/// Mazur exponent cap e_p: rational torsion p-parts are cyclic of order at
/// most p^e_p (times a second factor of 2 when p = 2).
pub fn mazur_exponent_cap(p: u32) -> u32 {
    match p {
        2 => 3,
        3 => 2,
        5 | 7 => 1,
        _ => 0,
    }
}

/// Level required to compute the quotient torsion by a kernel of order h at
/// prime p: p^(v_p(h) + e_p).
pub fn required_level(p: u32, kernel_order: u32) -> u32 {
    let mut v = 0u32;
    let mut h = kernel_order;
    while h.is_multiple_of(p) {
        h /= p;
        v += 1;
    }
    p.pow(v + mazur_exponent_cap(p))
}

/// A mod-N image, possibly regarded at a higher level as the full preimage
/// of its materialized base group.
#[derive(Clone, Debug)]
pub struct GaloisImage {
    pub base: GroupModN,
    pub level: u32,
}

impl GaloisImage {
    pub fn at_own_level(base: GroupModN) -> Self {
        let level = base.level;
        GaloisImage { base, level }
    }

    /// Regard the image at `level` >= base level as the full preimage of the
    /// base under reduction. Sound exactly when the true image at `level`
    /// is that full preimage (the caller's contract).
    pub fn lifted(base: GroupModN, level: u32) -> Result<Self, GaloisError> {
        if !level.is_multiple_of(base.level) {
            return Err(GaloisError::NotPrimePower {
                level,
                prime: base.level,
            });
        }
        Ok(GaloisImage { base, level })
    }

    fn base_elements_at_level(&self) -> Vec<MatModN> {
        self.base
            .elements()
            .map(|e| MatModN::from_key(self.level, e.m))
            .collect()
    }

    fn has_kernel(&self) -> bool {
        self.level != self.base.level
    }

    /// Kernel action condition: for v = (a, b), every kernel element moves v
    /// by n0 * M * v, whose possible values span the four listed vectors.
    fn kernel_moves(&self, v: (u32, u32)) -> [(u32, u32); 4] {
        let n0 = self.base.level;
        let m = self.level;
        let a = (n0 as u64 * v.0 as u64 % m as u64) as u32;
        let b = (n0 as u64 * v.1 as u64 % m as u64) as u32;
        [(a, 0), (b, 0), (0, a), (0, b)]
    }

    /// The fixed subgroup {v : g v = v for all g in the image}, as invariant
    /// factors (d1, d2) with d1 | d2.
    pub fn fixed_points(&self) -> (u32, u32) {
        let elems = self.base_elements_at_level();
        let m = self.level;
        let mut fixed = Vec::new();
        for a in 0..m {
            for b in 0..m {
                let v = (a, b);
                let mut ok = elems.iter().all(|g| g.apply(v) == v);
                if ok && self.has_kernel() {
                    ok = self.kernel_moves(v).iter().all(|&w| w == (0, 0));
                }
                if ok {
                    fixed.push(v);
                }
            }
        }
        subgroup_invariants(m, &fixed, &CyclicSubmodule::trivial(m))
    }

    /// Is the cyclic submodule stable under the image?
    pub fn is_stable(&self, c: &CyclicSubmodule) -> bool {
        if c.level != self.level {
            return false;
        }
        if self.has_kernel() && c.order > self.base.level {
            return false;
        }
        let v = c.generator;
        let elems = self.base_elements_at_level();
        if !elems.iter().all(|g| c.contains(g.apply(v))) {
            return false;
        }
        if self.has_kernel() {
            // kernel stability: n0 * M * v must stay in <v>
            if !self.kernel_moves(v).iter().all(|&w| c.contains(w)) {
                return false;
            }
        }
        true
    }

    /// All stable cyclic submodules (including the trivial one), sorted by
    /// (order, elements) for deterministic output.
    pub fn stable_cyclic_submodules(&self) -> Vec<CyclicSubmodule> {
        let m = self.level;
        let mut seen: BTreeMap<Vec<(u32, u32)>, CyclicSubmodule> = BTreeMap::new();
        for a in 0..m {
            for b in 0..m {
                let v = (a, b);
                if self.has_kernel() && vector_order(m, v) > self.base.level {
                    continue;
                }
                let c = CyclicSubmodule::new(m, v);
                let key = c.elements.clone();
                if seen.contains_key(&key) {
                    continue;
                }
                if self.is_stable(&c) {
                    seen.insert(key, c);
                }
            }
        }
        let mut out: Vec<CyclicSubmodule> = seen.into_values().collect();
        out.sort_by(|x, y| (x.order, x.elements()).cmp(&(y.order, y.elements())));
        // prefer the minimal generator as the canonical one
        for c in &mut out {
            let order = c.order;
            let min_gen = c
                .elements
                .iter()
                .copied()
                .filter(|&w| vector_order(c.level, w) == order)
                .min()
                .unwrap_or((0, 0));
            c.generator = min_gen;
        }
        out
    }

    /// Raw quotient torsion {v : g v - v in C} / C as invariant factors,
    /// before the Mazur cap. Errors if C is not stable or the level cannot
    /// see any quotient p-torsion (level < |C| * p).
    pub fn quotient_torsion_raw(
        &self,
        c: &CyclicSubmodule,
        p: u32,
    ) -> Result<(u32, u32), GaloisError> {
        if !self.is_stable(c) {
            return Err(GaloisError::SubmoduleNotStable);
        }
        if c.order > 1 && self.level < c.order.saturating_mul(p) {
            return Err(GaloisError::LevelInadequate {
                supplied: self.level,
                required: required_level(p, c.order),
            });
        }
        let m = self.level;
        let elems = self.base_elements_at_level();
        let mut v_group = Vec::new();
        for a in 0..m {
            for b in 0..m {
                let v = (a, b);
                let mut ok = elems.iter().all(|g| {
                    let w = g.apply(v);
                    let d = ((w.0 + m - v.0) % m, (w.1 + m - v.1) % m);
                    c.contains(d)
                });
                if ok && self.has_kernel() {
                    ok = self.kernel_moves(v).iter().all(|&w| c.contains(w));
                }
                if ok {
                    v_group.push(v);
                }
            }
        }
        Ok(subgroup_invariants(m, &v_group, c))
    }

    /// Quotient torsion intersected with the Mazur-admissible shapes for
    /// prime p (cyclic cap p^e_p, second factor only at p = 2).
    pub fn quotient_rational_torsion(
        &self,
        c: &CyclicSubmodule,
        p: u32,
    ) -> Result<(u32, u32), GaloisError> {
        let (d1, d2) = self.quotient_torsion_raw(c, p)?;
        Ok(mazur_truncate(p, d1, d2))
    }
}

fn mazur_truncate(p: u32, d1: u32, d2: u32) -> (u32, u32) {
    let cap2 = p.pow(mazur_exponent_cap(p));
    let cap1 = if p == 2 { 2 } else { 1 };
    (gcd_pow(d1, cap1), gcd_pow(d2, cap2))
}

fn gcd_pow(d: u32, cap: u32) -> u32 {
    d.gcd(&cap).max(1).min(d)
}

/// Invariant factors (d1, d2) of V / C for V a subgroup of (Z/m)^2 given by
/// its element list, containing the cyclic C.
fn subgroup_invariants(m: u32, v_elements: &[(u32, u32)], c: &CyclicSubmodule) -> (u32, u32) {
    let order = (v_elements.len() / c.order as usize) as u32;
    if order == 1 {
        return (1, 1);
    }
    let mut exponent = 1u32;
    for &v in v_elements {
        // order of v + C in V/C
        let mut w = v;
        let mut t = 1u32;
        while !c.contains(w) {
            w = ((w.0 + v.0) % m, (w.1 + v.1) % m);
            t += 1;
        }
        if t > exponent {
            exponent = t;
        }
    }
    (order / exponent, exponent)
}

/// One vertex of a predicted isogeny-torsion graph: a choice of stable
/// cyclic submodule at each prime, with the CRT-combined quotient torsion.
#[derive(Clone, Debug)]
pub struct PredictedVertex {
    pub kernels: BTreeMap<u32, CyclicSubmodule>,
    pub torsion: TorsionShape,
}

impl PredictedVertex {
    /// Total kernel order (the degree of the isogeny from the base vertex).
    pub fn kernel_order(&self) -> u32 {
        self.kernels.values().map(|c| c.order).product()
    }
}

/// A predicted isogeny-torsion graph: vertices indexed consecutively,
/// edges (i, j, p) for prime-degree isogenies.
#[derive(Clone, Debug)]
pub struct PredictedGraph {
    pub vertices: Vec<PredictedVertex>,
    pub edges: Vec<(usize, usize, u32)>,
    /// Informational flags per prime: (minus_id_present, cc_present).
    pub image_flags: BTreeMap<u32, (bool, bool)>,
}

const KENKU_CP_BOUND: &[(u32, u32)] = &[
    (2, 8),
    (3, 4),
    (5, 3),
    (7, 2),
    (11, 2),
    (13, 2),
    (17, 2),
    (19, 2),
    (37, 2),
    (43, 2),
    (67, 2),
    (163, 2),
];

pub fn kenku_cp_bound(p: u32) -> u32 {
    KENKU_CP_BOUND
        .iter()
        .find(|(q, _)| *q == p)
        .map(|(_, b)| *b)
        .unwrap_or(1)
}

/// Predict the full isogeny-torsion graph from per-prime mod-p^k images.
///
/// Each image must be supplied at a prime-power level with full determinant.
/// Images are lifted (as full preimages) to the adequate level for the
/// largest kernel found at that prime; across primes, trivial entanglement
/// is assumed (the composite-level image is the product of the per-prime
/// images).
pub fn predicted_graph(
    images: &BTreeMap<u32, GroupModN>,
) -> Result<PredictedGraph, GaloisError> {
    let mut per_prime: Vec<(u32, Vec<(CyclicSubmodule, (u32, u32))>)> = Vec::new();
    let mut image_flags = BTreeMap::new();
    for (&p, g) in images {
        if ![2u32, 3, 5, 7, 11, 13].contains(&p) {
            return Err(GaloisError::UnsupportedPrime { prime: p });
        }
        let mut l = g.level;
        while l % p == 0 {
            l /= p;
        }
        if l != 1 {
            return Err(GaloisError::NotPrimePower { level: g.level, prime: p });
        }
        let preds = g.predicates();
        if !preds.full_determinant {
            return Err(GaloisError::NotFullDeterminant { prime: p });
        }
        image_flags.insert(p, (preds.contains_minus_id, preds.has_cc_representative));
        // step 1: kernels at the supplied level
        let at_level = GaloisImage::at_own_level(g.clone());
        let subs0 = at_level.stable_cyclic_submodules();
        let max_h = subs0.iter().map(|c| c.order).max().unwrap_or(1);
        let adequate = required_level(p, max_h).max(g.level);
        let image = if adequate == g.level {
            at_level
        } else {
            GaloisImage::lifted(g.clone(), adequate)?
        };
        // step 2: kernels and quotient torsion at the working level
        let subs = image.stable_cyclic_submodules();
        if subs.len() as u32 > kenku_cp_bound(p) {
            return Err(GaloisError::KenkuViolated(format!(
                "C_{} = {} exceeds {}",
                p,
                subs.len(),
                kenku_cp_bound(p)
            )));
        }
        let mut rows = Vec::new();
        for c in subs {
            let t = image.quotient_rational_torsion(&c, p)?;
            rows.push((c, t));
        }
        per_prime.push((p, rows));
    }
    // drop primes with only the trivial submodule and trivial fixed part?
    // No: they still contribute the torsion of the fixed vertex factor.
    let total: usize = per_prime.iter().map(|(_, rows)| rows.len()).product();
    if total > 8 {
        return Err(GaloisError::KenkuViolated(format!(
            "C = {} exceeds 8",
            total
        )));
    }
    // vertices: cartesian product over primes, lexicographic in prime order
    let mut vertices: Vec<PredictedVertex> = vec![PredictedVertex {
        kernels: BTreeMap::new(),
        torsion: TorsionShape::trivial(),
    }];
    let mut shapes: Vec<BTreeMap<u32, (u32, u32)>> = vec![BTreeMap::new()];
    for (p, rows) in &per_prime {
        let mut next_v = Vec::with_capacity(vertices.len() * rows.len());
        let mut next_s = Vec::with_capacity(vertices.len() * rows.len());
        for (v, s) in vertices.iter().zip(&shapes) {
            for (c, t) in rows {
                let mut kernels = v.kernels.clone();
                kernels.insert(*p, c.clone());
                let mut sh = s.clone();
                sh.insert(*p, *t);
                next_v.push(PredictedVertex {
                    kernels,
                    torsion: TorsionShape::trivial(),
                });
                next_s.push(sh);
            }
        }
        vertices = next_v;
        shapes = next_s;
    }
    for (v, s) in vertices.iter_mut().zip(&shapes) {
        let mut a = 1u32;
        let mut b = 1u32;
        for (d1, d2) in s.values() {
            a *= d1;
            b *= d2;
        }
        v.torsion = TorsionShape::new(a, b)?;
    }
    // edges: vertices equal at all primes except one, where the submodules
    // are nested with prime index
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if let Some(p) = edge_prime(&vertices[i], &vertices[j]) {
                edges.push((i, j, p));
            }
        }
    }
    Ok(PredictedGraph {
        vertices,
        edges,
        image_flags,
    })
}

fn edge_prime(u: &PredictedVertex, v: &PredictedVertex) -> Option<u32> {
    let mut differing = None;
    for (p, cu) in &u.kernels {
        let cv = &v.kernels[p];
        if cu.elements() == cv.elements() {
            continue;
        }
        if differing.is_some() {
            return None;
        }
        if cu.contained_with_index(cv, *p) || cv.contained_with_index(cu, *p) {
            differing = Some(*p);
        } else {
            return None;
        }
    }
    differing
}
