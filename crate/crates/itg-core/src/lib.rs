//! Exact computation of Q-isogeny classes of elliptic curves and their
//! isogeny-torsion graphs.
//!
//! The crate is organized as layers:
//!
//! * [`arith`] — arbitrary-precision integers/rationals, integer
//!   factorization, squarefree parts, perfect-power tests.
//! * [`poly`] / [`modpoly`] / [`factor`] — univariate polynomials over Q and
//!   Z/m, with factorization over Q by reduction mod p, Hensel lifting and
//!   subset recombination.
//! * [`gl2`] — finite subgroups of GL(2, Z/N): generation, predicates,
//!   subgroup enumeration, conjugacy, and the standard Borel/split-Cartan
//!   subgroups.
//! * [`galois`] — symbolic torsion predictions from a mod-N image: fixed
//!   points, stable cyclic submodules, quotient torsion and full predicted
//!   isogeny-torsion graphs.
//! * [`ec`] — exact elliptic curve arithmetic over Q: models, group law,
//!   division polynomials, rational torsion, twists and isomorphism testing.
//! * [`isogeny`] — kernel polynomials, Vélu quotients, sporadic large-degree
//!   isogenies, and breadth-first isogeny class enumeration.
//! * [`classify`] — the 26 graph shapes and 52 isogeny-torsion graph types,
//!   finiteness of j-invariant families, and Kenku audits.
//! * [`families`] — one-parameter curve families with known graph types.
//!
//! Everything is deterministic and exact; no floating point anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod classify;
pub mod ec;
pub mod factor;
pub mod families;
pub mod galois;
pub mod gl2;
pub mod isogeny;
pub mod modpoly;
pub mod poly;

pub use arith::{Int, Rat};
pub use classify::{GraphShapeLabel, IsogenyTorsionLabel};
pub use ec::{CurvePoint, RationalTorsion, WeierstrassCurve};
pub use galois::{CyclicSubmodule, TorsionShape};
pub use gl2::{GroupModN, MatModN};
pub use isogeny::{IsogenyClass, KernelPoly};
pub use poly::PolyQ;
