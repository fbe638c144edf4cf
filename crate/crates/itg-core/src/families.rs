//! One-parameter families with known isogeny-torsion graph types.
//!
//! The Tate normal form families put a torsion point at (0, 0); the two
//! short-model families realize split mod-3 and mod-5 images; the last one
//! parametrizes j-invariants of the curves sitting at the center of a T4
//! graph. Admissibility of a parameter is decided by direct discriminant
//! evaluation (and pole checks), not by precomputed exceptional sets.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{rat_i, Rat};
use crate::classify::{GraphShapeLabel, IsogenyTorsionLabel};
use crate::ec::{EcError, WeierstrassCurve};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyId {
    Z7,
    Z9,
    Z10,
    Z12,
    Sz5L325,
    R6Split,
    X24eJ,
}

impl FamilyId {
    pub fn all() -> Vec<FamilyId> {
        vec![
            FamilyId::Z7,
            FamilyId::Z9,
            FamilyId::Z10,
            FamilyId::Z12,
            FamilyId::Sz5L325,
            FamilyId::R6Split,
            FamilyId::X24eJ,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Z7 => "Z7",
            FamilyId::Z9 => "Z9",
            FamilyId::Z10 => "Z10",
            FamilyId::Z12 => "Z12",
            FamilyId::Sz5L325 => "SZ5_L3_25",
            FamilyId::R6Split => "R6_split",
            FamilyId::X24eJ => "X24e_j",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyId> {
        FamilyId::all().into_iter().find(|f| f.name() == s)
    }
}

/// The type the family is expected to produce at every admissible
/// parameter; shape-only where quadratic twisting moves inside the shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedLabel {
    Exact(IsogenyTorsionLabel),
    ShapeOnly(GraphShapeLabel),
}

impl ExpectedLabel {
    pub fn display(&self) -> String {
        match self {
            ExpectedLabel::Exact(l) => l.display(),
            ExpectedLabel::ShapeOnly(s) => s.display(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    InadmissibleParameter(String),
}

impl core::fmt::Display for FamilyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FamilyError::InadmissibleParameter(s) => write!(f, "inadmissible parameter: {s}"),
        }
    }
}

/// Tate normal form E(a, b): y^2 + (1-a)xy - by = x^3 - bx^2, with (0, 0)
/// a torsion point.
pub fn tate_normal(a: &Rat, b: &Rat) -> Result<WeierstrassCurve, EcError> {
    WeierstrassCurve::new(
        Rat::one() - a,
        -b.clone(),
        -b.clone(),
        Rat::zero(),
        Rat::zero(),
    )
}

/// The j-invariant family of T4-center curves:
/// J(t) = 2^8 (t^2+t+1)^3 (t^2-t+1)^3 / (t^4 (t^2+1)^2).
pub fn x24e_j(t: &Rat) -> Result<Rat, FamilyError> {
    if t.is_zero() {
        return Err(FamilyError::InadmissibleParameter("t = 0 is a pole".into()));
    }
    let t2 = t * t;
    let num = rat_i(256) * (&t2 + t + rat_i(1)).pow(3) * (&t2 - t + rat_i(1)).pow(3);
    let den = t2.pow(2) * (&t2 + rat_i(1)).pow(2);
    Ok(num / den)
}

trait RatPow {
    fn pow(&self, e: u32) -> Rat;
}

impl RatPow for Rat {
    fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc *= self;
        }
        acc
    }
}

/// Evaluate the family at a parameter. Poles and singular fibers are
/// rejected as inadmissible.
pub fn family_curve(id: FamilyId, t: &Rat) -> Result<WeierstrassCurve, FamilyError> {
    let bad = |what: &str| FamilyError::InadmissibleParameter(what.into());
    let singular = |_| bad("singular fiber");
    match id {
        FamilyId::Z7 => {
            let a = t * t - t;
            let b = t * t * t - t * t;
            tate_normal(&a, &b).map_err(singular)
        }
        FamilyId::Z9 => {
            let a = t * t * (t - rat_i(1));
            let b = &a * (t * t - t + rat_i(1));
            tate_normal(&a, &b).map_err(singular)
        }
        FamilyId::Z10 => {
            let den = t * t - rat_i(3) * t + rat_i(1);
            if den.is_zero() {
                return Err(bad("pole of the Z10 parametrization"));
            }
            let num = t * (t - rat_i(1)) * (rat_i(2) * t - rat_i(1));
            let a = -&num / &den;
            let b = t * t * t * (t - rat_i(1)) * (rat_i(2) * t - rat_i(1)) / (&den * &den);
            tate_normal(&a, &b).map_err(singular)
        }
        FamilyId::Z12 => {
            if *t == rat_i(1) {
                return Err(bad("pole of the Z12 parametrization"));
            }
            let tm1 = t - rat_i(1);
            let a = t * (rat_i(1) - rat_i(2) * t) * (rat_i(3) * t * t - rat_i(3) * t + rat_i(1))
                / (&tm1 * &tm1 * &tm1);
            let b = -&a * (rat_i(2) * t * t - rat_i(2) * t + rat_i(1)) / &tm1;
            tate_normal(&a, &b).map_err(singular)
        }
        FamilyId::Sz5L325 => {
            let t5 = RatPow::pow(t, 5);
            let t10 = RatPow::pow(t, 10);
            let t15 = RatPow::pow(t, 15);
            let t20 = RatPow::pow(t, 20);
            let t25 = RatPow::pow(t, 25);
            let t30 = RatPow::pow(t, 30);
            let a = -(t20 - rat_i(228) * &t15 + rat_i(494) * &t10 + rat_i(228) * &t5
                + rat_i(1))
                / rat_i(48);
            let b = (t30 + rat_i(522) * &t25 - rat_i(10005) * RatPow::pow(t, 20)
                - rat_i(10005) * &t10
                - rat_i(522) * &t5
                + rat_i(1))
                / rat_i(864);
            let _ = t20;
            WeierstrassCurve::short(a, b).map_err(singular)
        }
        FamilyId::R6Split => {
            let t3 = RatPow::pow(t, 3);
            let t6 = RatPow::pow(t, 6);
            let t9 = RatPow::pow(t, 9);
            let t12 = RatPow::pow(t, 12);
            let t15 = RatPow::pow(t, 15);
            let t18 = RatPow::pow(t, 18);
            let a = rat_i(-27) * &t12 + rat_i(216) * &t9 - rat_i(6480) * &t6
                + rat_i(12528) * &t3
                - rat_i(432);
            let b = rat_i(54) * &t18 - rat_i(648) * &t15 - rat_i(25920) * &t12
                + rat_i(166320) * &t9
                - rat_i(651888) * &t6
                + rat_i(222912) * &t3
                + rat_i(3456);
            WeierstrassCurve::short(a, b).map_err(singular)
        }
        FamilyId::X24eJ => {
            let j = x24e_j(t)?;
            Ok(WeierstrassCurve::from_j(&j))
        }
    }
}

/// The type asserted for the family (shape-only for the j-line family,
/// whose twist class moves within T4).
pub fn expected_label(id: FamilyId) -> ExpectedLabel {
    let exact = |s: &str| {
        ExpectedLabel::Exact(IsogenyTorsionLabel::parse(s).expect("family label in templates"))
    };
    match id {
        FamilyId::Z7 => exact("L2^1(7)"),
        FamilyId::Z9 => exact("L3^1(9)"),
        FamilyId::Z10 => exact("R4^1(10)"),
        FamilyId::Z12 => exact("S^1"),
        FamilyId::Sz5L325 => exact("L3^1(25)"),
        FamilyId::R6Split => exact("R6^1"),
        FamilyId::X24eJ => ExpectedLabel::ShapeOnly(GraphShapeLabel::T4),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn tate_torsion_orders() {
        // Z7 at t = 2 has a rational point of order 7 at (0, 0)
        let e = family_curve(FamilyId::Z7, &rat_i(2)).unwrap();
        let p = e.point(rat_i(0), rat_i(0)).unwrap();
        assert_eq!(e.point_order(&p, 12), Some(7));
        assert_eq!(e.torsion_subgroup().shape.invariants(), (1, 7));
        // Z9 at t = 2
        let e = family_curve(FamilyId::Z9, &rat_i(2)).unwrap();
        let p = e.point(rat_i(0), rat_i(0)).unwrap();
        assert_eq!(e.point_order(&p, 12), Some(9));
        // Z10 at t = 2
        let e = family_curve(FamilyId::Z10, &rat_i(2)).unwrap();
        let p = e.point(rat_i(0), rat_i(0)).unwrap();
        assert_eq!(e.point_order(&p, 12), Some(10));
        // Z12 at t = 1/3
        let e = family_curve(FamilyId::Z12, &rat(1, 3)).unwrap();
        let p = e.point(rat_i(0), rat_i(0)).unwrap();
        assert_eq!(e.point_order(&p, 14), Some(12));
    }

    #[test]
    fn degenerate_parameters_rejected() {
        // Z7 at t = 0 collapses the model (b = 0)
        assert!(family_curve(FamilyId::Z7, &rat_i(0)).is_err());
        assert!(family_curve(FamilyId::Z7, &rat_i(1)).is_err());
        assert!(family_curve(FamilyId::Z12, &rat_i(1)).is_err());
        assert!(family_curve(FamilyId::X24eJ, &rat_i(0)).is_err());
        // R6 has singular fibers at t = 2 and t = -1
        assert!(family_curve(FamilyId::R6Split, &rat_i(2)).is_err());
        assert!(family_curve(FamilyId::R6Split, &rat_i(-1)).is_err());
    }

    #[test]
    fn x24e_j_at_one_is_1728() {
        assert_eq!(x24e_j(&rat_i(1)).unwrap(), rat_i(1728));
        let e = family_curve(FamilyId::X24eJ, &rat_i(1)).unwrap();
        assert_eq!(e.j, rat_i(1728));
    }

    #[test]
    fn sz5_has_five_torsion() {
        let e = family_curve(FamilyId::Sz5L325, &rat_i(2)).unwrap();
        assert_eq!(e.torsion_subgroup().shape.invariants(), (1, 5));
    }

    #[test]
    fn r6_has_six_torsion_and_two_3_kernels() {
        let e = family_curve(FamilyId::R6Split, &rat_i(3)).unwrap();
        assert_eq!(e.torsion_subgroup().shape.invariants(), (1, 6));
        assert_eq!(crate::isogeny::rational_kernels(&e, 3).unwrap().len(), 2);
    }

    #[test]
    fn z7_family_end_to_end() {
        let e = family_curve(FamilyId::Z7, &rat_i(2)).unwrap();
        let cls = crate::isogeny::isogeny_class(&e).unwrap();
        let g = crate::classify::LabeledGraph::from_class(&cls);
        let (label, _) = crate::classify::itg_label(&g).unwrap();
        assert_eq!(ExpectedLabel::Exact(label), expected_label(FamilyId::Z7));
    }

    #[test]
    fn family_names_round_trip() {
        for id in FamilyId::all() {
            assert_eq!(FamilyId::parse(id.name()), Some(id));
        }
        assert_eq!(FamilyId::parse("nope"), None);
    }
}
