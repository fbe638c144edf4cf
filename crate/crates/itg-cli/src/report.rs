//! Machine-readable reports: canonical JSON (stable field order, exact
//! rationals as strings) and DOT graph output.

use itg_core::arith::Rat;
use itg_core::classify::{
    finiteness, itg_label, shape_label, Finiteness, LabeledGraph,
};
use itg_core::ec::WeierstrassCurve;
use itg_core::galois::PredictedGraph;
use itg_core::isogeny::IsogenyClass;
use serde::{Deserialize, Serialize};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CurveReport {
    pub a: [String; 5],
    pub c4: String,
    pub c6: String,
    pub j: String,
    pub torsion: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FinitenessReport {
    pub kind: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub j_invariants: Vec<String>,
}

/// The full classification report. The `input` field echoes the canonical
/// model the computation ran on, so that reports are byte-identical across
/// representatives of the same class (the raw user input is echoed on
/// stderr in text mode instead).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassReport {
    pub version: String,
    pub input: String,
    pub curves: Vec<CurveReport>,
    pub edges: Vec<(usize, usize, u32)>,
    pub shape: String,
    pub label: String,
    pub configuration: String,
    pub canonical_order: Vec<usize>,
    pub finiteness: FinitenessReport,
}

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

pub fn class_report(class: &IsogenyClass) -> anyhow::Result<ClassReport> {
    let g = LabeledGraph::from_class(class);
    let shape = shape_label(&g).map_err(|e| anyhow::anyhow!("{e}"))?;
    let (label, perm) = itg_label(&g).map_err(|e| anyhow::anyhow!("{e}"))?;
    let template = itg_core::classify::templates()
        .into_iter()
        .find(|t| t.label == label)
        .expect("matched label has template");
    let fin = match finiteness(&label) {
        Finiteness::Infinite => FinitenessReport {
            kind: "infinite".into(),
            j_invariants: Vec::new(),
        },
        Finiteness::Finite(js) => FinitenessReport {
            kind: "finite".into(),
            j_invariants: js.iter().map(rat_str).collect(),
        },
    };
    let curves = class
        .curves
        .iter()
        .zip(&class.torsion)
        .map(|(c, t)| CurveReport {
            a: [
                rat_str(&c.a1),
                rat_str(&c.a2),
                rat_str(&c.a3),
                rat_str(&c.a4),
                rat_str(&c.a6),
            ],
            c4: rat_str(&c.c4),
            c6: rat_str(&c.c6),
            j: rat_str(&c.j),
            torsion: t.shape.display(),
        })
        .collect();
    Ok(ClassReport {
        version: ARTIFACT_VERSION.into(),
        input: class.curves[0].display_ai(),
        curves,
        edges: class.undirected_edges(),
        shape: shape.display(),
        label: label.display(),
        configuration: template.configuration(),
        canonical_order: perm,
        finiteness: fin,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PredictVertexReport {
    pub kernels: Vec<(u32, String, u32)>,
    pub torsion: String,
}

/// A mod-N image in the wire schema: level plus generators as integer
/// 4-tuples [a, b, c, d] for [[a, b], [c, d]].
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ImageReport {
    pub prime: u32,
    pub level: u32,
    pub generators: Vec<[u32; 4]>,
}

pub fn image_report(prime: u32, g: &itg_core::gl2::GroupModN) -> ImageReport {
    ImageReport {
        prime,
        level: g.level,
        generators: g.generators.iter().map(|m| m.m).collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PredictReport {
    pub version: String,
    pub images: Vec<ImageReport>,
    pub vertices: Vec<PredictVertexReport>,
    pub edges: Vec<(usize, usize, u32)>,
    pub shape: String,
    pub label: String,
    pub configuration: String,
    pub canonical_order: Vec<usize>,
}

pub fn predict_report(
    images_desc: Vec<ImageReport>,
    graph: &PredictedGraph,
) -> anyhow::Result<PredictReport> {
    let g = LabeledGraph::from_predicted(graph);
    let shape = shape_label(&g).map_err(|e| anyhow::anyhow!("{e}"))?;
    let (label, perm) = itg_label(&g).map_err(|e| anyhow::anyhow!("{e}"))?;
    let template = itg_core::classify::templates()
        .into_iter()
        .find(|t| t.label == label)
        .expect("matched label has template");
    let vertices = graph
        .vertices
        .iter()
        .map(|v| PredictVertexReport {
            kernels: v
                .kernels
                .iter()
                .map(|(p, c)| {
                    (
                        *p,
                        format!("({},{})", c.generator.0, c.generator.1),
                        c.order,
                    )
                })
                .collect(),
            torsion: v.torsion.display(),
        })
        .collect();
    let mut edges: Vec<(usize, usize, u32)> = graph
        .edges
        .iter()
        .map(|&(i, j, l)| (i.min(j), i.max(j), l))
        .collect();
    edges.sort_unstable();
    Ok(PredictReport {
        version: ARTIFACT_VERSION.into(),
        images: images_desc,
        vertices,
        edges,
        shape: shape.display(),
        label: label.display(),
        configuration: template.configuration(),
        canonical_order: perm,
    })
}

/// DOT rendering: vertices carry their torsion groups, edges their degrees.
pub fn class_dot(report: &ClassReport) -> String {
    let mut out = String::from("graph isogeny_torsion {\n");
    for (i, c) in report.curves.iter().enumerate() {
        out.push_str(&format!(
            "  v{} [label=\"{}\"];\n",
            i,
            torsion_dot_label(&c.torsion)
        ));
    }
    for (i, j, l) in &report.edges {
        out.push_str(&format!("  v{} -- v{} [label=\"{}\"];\n", i, j, l));
    }
    out.push_str("}\n");
    out
}

fn torsion_dot_label(t: &str) -> String {
    // "[a,b]" -> "Z/aZ × Z/bZ", "[n]" -> "Z/nZ", "[1]" -> "0"
    let body = t.trim_start_matches('[').trim_end_matches(']');
    match body.split_once(',') {
        Some((a, b)) => format!("Z/{a}Z × Z/{b}Z"),
        None => {
            if body == "1" {
                "0".into()
            } else {
                format!("Z/{body}Z")
            }
        }
    }
}

pub fn curve_summary(e: &WeierstrassCurve) -> String {
    format!("{} (j = {})", e.display_ai(), e.j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itg_core::isogeny::isogeny_class;

    #[test]
    fn report_roundtrip_and_dot() {
        let e = WeierstrassCurve::from_ai([1, -1, 1, -1, -14]).unwrap();
        let cls = isogeny_class(&e).unwrap();
        let rep = class_report(&cls).unwrap();
        assert_eq!(rep.label, "T4^1");
        assert_eq!(rep.configuration, "([2,2],[4],[4],[2])");
        // JSON round-trips
        let json = serde_json::to_string_pretty(&rep).unwrap();
        let back: ClassReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        // DOT has one degree-3 vertex and three 2-edges
        let dot = class_dot(&rep);
        assert_eq!(dot.matches("-- ").count(), 3);
        assert_eq!(dot.matches("label=\"2\"").count(), 3);
        assert!(dot.contains("Z/2Z × Z/2Z"));
    }

    #[test]
    fn deterministic_json() {
        let e = WeierstrassCurve::from_ai([0, -1, 1, 0, 0]).unwrap();
        let r1 = serde_json::to_string(&class_report(&isogeny_class(&e).unwrap()).unwrap()).unwrap();
        let r2 = serde_json::to_string(&class_report(&isogeny_class(&e).unwrap()).unwrap()).unwrap();
        assert_eq!(r1, r2);
        // the class label is representative-independent even though the
        // discovery order is not
        let cls = isogeny_class(&e).unwrap();
        let other = class_report(&isogeny_class(&cls.curves[1]).unwrap()).unwrap();
        let first: ClassReport = serde_json::from_str(&r1).unwrap();
        assert_eq!(other.label, first.label);
        assert_eq!(other.configuration, first.configuration);
    }
}
