//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::time::Instant;

use itg_core::classify::{itg_label, shape_label, GraphShapeLabel, LabeledGraph};
use itg_core::ec::WeierstrassCurve;
use itg_core::isogeny::isogeny_class;
use itg_cli::suites::{global_audit, suite_census, suite_families, suite_lemmas, suite_table1, SuiteOutcome};

fn report(criterion: &str, outcome: &SuiteOutcome, budget_s: u64, elapsed: std::time::Duration) {
    for item in &outcome.items {
        let status = if item.pass { "PASS" } else { "FAIL" };
        println!("  {status} {}: {}", item.name, item.detail);
    }
    let ok = outcome.pass();
    println!(
        "{} criterion {criterion}: {}/{} items in {:.1}s (budget {budget_s}s)",
        if ok { "PASS" } else { "FAIL" },
        outcome.items.iter().filter(|i| i.pass).count(),
        outcome.items.len(),
        elapsed.as_secs_f64()
    );
    assert!(ok, "criterion {criterion} failed");
    assert!(
        elapsed.as_secs() < budget_s,
        "criterion {criterion} exceeded its {budget_s}s budget"
    );
}

#[test]
fn criterion_1_lemma_suite() {
    let started = Instant::now();
    let outcome = suite_lemmas();
    report("1 (lemma suite)", &outcome, 60, started.elapsed());
}

#[test]
fn criterion_2_census() {
    let started = Instant::now();
    let outcome = suite_census();
    report("2 (mod-2^k census)", &outcome, 300, started.elapsed());
}

#[test]
fn criterion_3_table1() {
    let started = Instant::now();
    let outcome = suite_table1();
    report("3 (finite j-invariants)", &outcome, 600, started.elapsed());
}

#[test]
fn criterion_4_example_fixture() {
    // the pinned conductor-17 curve: four curves, three 2-edges from one
    // hub, torsion multiset {(2,2),(1,4),(1,4),(1,2)}, label T4^1
    let e = WeierstrassCurve::from_ai([1, -1, 1, -1, -14]).unwrap();
    let cls = isogeny_class(&e).unwrap();
    assert_eq!(cls.curves.len(), 4);
    let und = cls.undirected_edges();
    assert_eq!(und.len(), 3);
    assert!(und.iter().all(|&(_, _, l)| l == 2));
    // all three edges share a hub
    let mut degree = [0usize; 4];
    for &(i, j, _) in &und {
        degree[i] += 1;
        degree[j] += 1;
    }
    assert!(degree.contains(&3));
    let mut shapes: Vec<(u32, u32)> = cls.torsion.iter().map(|t| t.shape.invariants()).collect();
    shapes.sort_unstable();
    assert_eq!(shapes, vec![(1, 2), (1, 4), (1, 4), (2, 2)]);
    let (label, _) = itg_label(&LabeledGraph::from_class(&cls)).unwrap();
    assert_eq!(label.display(), "T4^1");
    println!("PASS criterion 4: conductor-17 fixture is T4^1 with the stated multiset");
}

#[test]
fn criterion_5_and_6_families_and_twists() {
    let started = Instant::now();
    let outcome = suite_families();
    report(
        "5 and 6 (families end-to-end, twist toggling)",
        &outcome,
        300,
        started.elapsed(),
    );
}

#[test]
fn criterion_7_oracle_equivalence() {
    // torsion against the Lutz-Nagell oracle on 50 random curves
    let curves = common::random_curves(0x5eed, 50, 20);
    for e in &curves {
        let fast = e.torsion_subgroup().shape.invariants();
        let oracle = common::nagell_lutz_torsion(e);
        assert_eq!(fast, oracle, "torsion mismatch on {}", e.display_ai());
    }
    println!("PASS criterion 7a: torsion matches the Lutz-Nagell oracle on 50 random curves");
    // class invariance under representative choice and twisting (shape)
    let curves = common::random_curves(0xc0de, 20, 12);
    let twists: [i64; 6] = [-1, 2, -2, 3, -3, 5];
    for (k, e) in curves.iter().enumerate() {
        let cls = isogeny_class(e).unwrap();
        let keys = |c: &itg_core::isogeny::IsogenyClass| {
            let mut v: Vec<_> = c.curves.iter().map(|x| x.canonical_c4c6()).collect();
            v.sort();
            v
        };
        let base_keys = keys(&cls);
        let base_shape = shape_label(&LabeledGraph::from_class(&cls)).unwrap();
        for member in &cls.curves {
            let other = isogeny_class(member).unwrap();
            assert_eq!(keys(&other), base_keys, "vertex set depends on representative");
            let mut e1 = cls.undirected_edges();
            let mut e2 = other.undirected_edges();
            let norm = |es: &mut Vec<(usize, usize, u32)>| {
                let mut degs: Vec<u32> = es.iter().map(|&(_, _, l)| l).collect();
                degs.sort_unstable();
                degs
            };
            assert_eq!(norm(&mut e1), norm(&mut e2));
        }
        let d = twists[k % twists.len()];
        let tw = e.quadratic_twist(&itg_core::arith::int(d)).unwrap();
        let tcls = isogeny_class(&tw).unwrap();
        let tshape = shape_label(&LabeledGraph::from_class(&tcls)).unwrap();
        assert_eq!(tshape, base_shape, "shape changed under twist by {d}");
    }
    println!("PASS criterion 7b: classes invariant under representative and twist (shape)");
}

#[test]
fn criterion_8_global_census() {
    // every class computed by the table, family and fixture suites passes
    // the Kenku audit, stays within 8 vertices, has Mazur-admissible
    // torsion everywhere (enforced by the torsion type), and matches one of
    // the 52 templates; finiteness marks exactly the 15 finite types
    let mut classes = Vec::new();
    classes.extend(suite_table1().classes);
    classes.extend(suite_families().classes);
    classes.push(isogeny_class(&WeierstrassCurve::from_ai([1, -1, 1, -1, -14]).unwrap()).unwrap());
    let outcome = global_audit(&classes);
    for item in &outcome.items {
        let status = if item.pass { "PASS" } else { "FAIL" };
        println!("  {status} {}: {}", item.name, item.detail);
    }
    assert!(outcome.pass(), "global census audit failed");
    // no class may ever present a non-T4 shape for the X24e family either
    let e = itg_core::families::family_curve(itg_core::families::FamilyId::X24eJ, &itg_core::arith::rat_i(2)).unwrap();
    let cls = isogeny_class(&e).unwrap();
    assert_eq!(
        shape_label(&LabeledGraph::from_class(&cls)).unwrap(),
        GraphShapeLabel::T4
    );
    println!("PASS criterion 8: global audit over all computed classes");
}
