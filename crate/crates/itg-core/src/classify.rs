//! Classification into the 26 graph shapes and 52 isogeny-torsion types.
//!
//! The 52 types live in `data/templates.txt` as transcribed data (torsion
//! tuple plus edge list); labeling is labeled-graph isomorphism against the
//! templates by backtracking over at most 8 vertices. Finiteness of the
//! j-invariant family per type comes from `data/table1.txt`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Rat;
use crate::galois::{PredictedGraph, TorsionShape};
use crate::isogeny::IsogenyClass;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    Unclassifiable(String),
    NoTemplateMatch(String),
}

impl core::fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ClassifyError::Unclassifiable(s) => write!(f, "unclassifiable graph shape: {s}"),
            ClassifyError::NoTemplateMatch(s) => {
                write!(f, "no isogeny-torsion template matches: {s}")
            }
        }
    }
}

/// One of the 26 isogeny graph shapes. The degree parameter is present
/// exactly for L2 (the prime), L3 (9 or 25) and R4 (the maximal cyclic
/// degree pq).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphShapeLabel {
    L1,
    L2(u32),
    L3(u32),
    L4,
    T4,
    T6,
    T8,
    R4(u32),
    R6,
    S,
}

impl GraphShapeLabel {
    pub fn display(&self) -> String {
        match self {
            GraphShapeLabel::L1 => "L1".into(),
            GraphShapeLabel::L2(p) => format!("L2({p})"),
            GraphShapeLabel::L3(n) => format!("L3({n})"),
            GraphShapeLabel::L4 => "L4".into(),
            GraphShapeLabel::T4 => "T4".into(),
            GraphShapeLabel::T6 => "T6".into(),
            GraphShapeLabel::T8 => "T8".into(),
            GraphShapeLabel::R4(n) => format!("R4({n})"),
            GraphShapeLabel::R6 => "R6".into(),
            GraphShapeLabel::S => "S".into(),
        }
    }
}

/// One of the 52 isogeny-torsion graph types: a shape plus the table
/// superscript (0 when the shape has a single torsion configuration).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsogenyTorsionLabel {
    pub shape: GraphShapeLabel,
    pub index: u8,
}

impl IsogenyTorsionLabel {
    pub fn display(&self) -> String {
        let (head, param) = match self.shape {
            GraphShapeLabel::L2(p) => ("L2".into(), Some(p)),
            GraphShapeLabel::L3(n) => ("L3".into(), Some(n)),
            GraphShapeLabel::R4(n) => ("R4".into(), Some(n)),
            ref s => (s.display(), None),
        };
        let sup = if self.index == 0 {
            String::new()
        } else {
            format!("^{}", self.index)
        };
        match param {
            Some(p) => format!("{head}{sup}({p})"),
            None => format!("{head}{sup}"),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        for t in templates() {
            if t.label.display() == s {
                return Some(t.label);
            }
        }
        None
    }
}

/// A template row: label, vertex torsions, undirected edges.
#[derive(Debug, Clone)]
pub struct Template {
    pub label: IsogenyTorsionLabel,
    pub torsions: Vec<TorsionShape>,
    pub edges: Vec<(usize, usize, u32)>,
}

impl Template {
    /// The paper's tuple notation for the torsion configuration.
    pub fn configuration(&self) -> String {
        let mut out = String::from("(");
        for (i, t) in self.torsions.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&t.display());
        }
        out.push(')');
        out
    }

    pub fn shape(&self) -> GraphShapeLabel {
        self.label.shape
    }
}

fn parse_label(s: &str) -> IsogenyTorsionLabel {
    // forms: "T4^1", "L2^1(7)", "L2(13)", "R4^3(15)", "S^2", "L1", "R4(14)"
    let (body, param) = match s.find('(') {
        Some(i) => {
            let p: u32 = s[i + 1..s.len() - 1].parse().unwrap();
            (&s[..i], Some(p))
        }
        None => (s, None),
    };
    let (family, index) = match body.find('^') {
        Some(i) => (&body[..i], body[i + 1..].parse::<u8>().unwrap()),
        None => (body, 0u8),
    };
    let shape = match (family, param) {
        ("L1", None) => GraphShapeLabel::L1,
        ("L2", Some(p)) => GraphShapeLabel::L2(p),
        ("L3", Some(n)) => GraphShapeLabel::L3(n),
        ("L4", None) => GraphShapeLabel::L4,
        ("T4", None) => GraphShapeLabel::T4,
        ("T6", None) => GraphShapeLabel::T6,
        ("T8", None) => GraphShapeLabel::T8,
        ("R4", Some(n)) => GraphShapeLabel::R4(n),
        ("R6", None) => GraphShapeLabel::R6,
        ("S", None) => GraphShapeLabel::S,
        _ => panic!("bad template label"),
    };
    IsogenyTorsionLabel { shape, index }
}

/// The 52 templates, parsed from the fixture file.
pub fn templates() -> Vec<Template> {
    let data = include_str!("../data/templates.txt");
    let mut out = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split('|');
        let label = parse_label(parts.next().unwrap());
        let torsions: Vec<TorsionShape> = parts
            .next()
            .unwrap()
            .split(',')
            .map(|t| {
                let (a, b) = t.split_once(':').unwrap();
                TorsionShape::new(a.parse().unwrap(), b.parse().unwrap()).unwrap()
            })
            .collect();
        let edges: Vec<(usize, usize, u32)> = parts
            .next()
            .unwrap()
            .split(',')
            .filter(|e| !e.is_empty())
            .map(|e| {
                let (pair, l) = e.split_once(':').unwrap();
                let (i, j) = pair.split_once('-').unwrap();
                (i.parse().unwrap(), j.parse().unwrap(), l.parse().unwrap())
            })
            .collect();
        out.push(Template {
            label,
            torsions,
            edges,
        });
    }
    out
}

/// A graph to classify: per-vertex torsion plus undirected edges. Both
/// computed classes and predicted graphs convert into this.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub torsions: Vec<TorsionShape>,
    pub edges: Vec<(usize, usize, u32)>,
}

impl LabeledGraph {
    pub fn from_class(class: &IsogenyClass) -> Self {
        LabeledGraph {
            torsions: class.torsion.iter().map(|t| t.shape).collect(),
            edges: class.undirected_edges(),
        }
    }

    pub fn from_predicted(g: &PredictedGraph) -> Self {
        let mut edges: Vec<(usize, usize, u32)> = g
            .edges
            .iter()
            .map(|&(i, j, l)| (i.min(j), i.max(j), l))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        LabeledGraph {
            torsions: g.vertices.iter().map(|v| v.torsion).collect(),
            edges,
        }
    }

    fn degree_of(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j, _)| i == v || j == v)
            .count()
    }

    fn edge_degree_multiset(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.edges.iter().map(|&(_, _, l)| l).collect();
        d.sort_unstable();
        d
    }
}

/// Determine the graph shape from vertex count and edge structure.
pub fn shape_label(g: &LabeledGraph) -> Result<GraphShapeLabel, ClassifyError> {
    let n = g.torsions.len();
    let degs = g.edge_degree_multiset();
    let fail = |msg: &str| Err(ClassifyError::Unclassifiable(msg.into()));
    match (n, g.edges.len()) {
        (1, 0) => Ok(GraphShapeLabel::L1),
        (2, 1) => Ok(GraphShapeLabel::L2(degs[0])),
        (3, 2) => {
            let p = degs[0];
            if degs[1] != p || !matches!(p, 3 | 5) {
                return fail("3-vertex graph is not a p-p chain with p in {3,5}");
            }
            // must be a path
            if (0..3).any(|v| g.degree_of(v) > 2) {
                return fail("3-vertex graph is not a path");
            }
            Ok(GraphShapeLabel::L3(p * p))
        }
        (4, 3) => {
            let star = (0..4).any(|v| g.degree_of(v) == 3);
            if degs == vec![2, 2, 2] && star {
                Ok(GraphShapeLabel::T4)
            } else if degs == vec![3, 3, 3] && !star {
                Ok(GraphShapeLabel::L4)
            } else {
                fail("4-vertex tree is neither a 2-star nor a 3-chain")
            }
        }
        (4, 4) => {
            // rectangle: a 4-cycle with opposite edges of equal prime degree
            if (0..4).any(|v| g.degree_of(v) != 2) {
                return fail("4-vertex, 4-edge graph is not a cycle");
            }
            let mut primes: Vec<u32> = degs.clone();
            primes.dedup();
            if primes.len() != 2 || degs[0] != degs[1] || degs[2] != degs[3] {
                return fail("rectangle edges do not pair into two primes");
            }
            let pq = primes[0] * primes[1];
            if !matches!(pq, 6 | 10 | 14 | 15 | 21) {
                return fail("rectangle degree product outside {6,10,14,15,21}");
            }
            Ok(GraphShapeLabel::R4(pq))
        }
        (6, 5) => {
            if degs.iter().all(|&l| l == 2)
                && (0..6).filter(|&v| g.degree_of(v) == 3).count() == 2
            {
                Ok(GraphShapeLabel::T6)
            } else {
                fail("6-vertex tree is not the two-hub 2-tree")
            }
        }
        (6, 7) => {
            let twos = degs.iter().filter(|&&l| l == 2).count();
            let threes = degs.iter().filter(|&&l| l == 3).count();
            if twos == 3 && threes == 4 {
                Ok(GraphShapeLabel::R6)
            } else {
                fail("6-vertex, 7-edge graph is not the R6 grid")
            }
        }
        (8, 7) => {
            if degs.iter().all(|&l| l == 2)
                && (0..8).filter(|&v| g.degree_of(v) == 3).count() == 3
            {
                Ok(GraphShapeLabel::T8)
            } else {
                fail("8-vertex tree is not the three-hub 2-tree")
            }
        }
        (8, 10) => {
            let twos = degs.iter().filter(|&&l| l == 2).count();
            let threes = degs.iter().filter(|&&l| l == 3).count();
            if twos == 6 && threes == 4 {
                Ok(GraphShapeLabel::S)
            } else {
                fail("8-vertex, 10-edge graph is not the S prism")
            }
        }
        _ => fail("vertex/edge count outside the 26 shapes"),
    }
}

/// Match against the 52 stored templates. On success returns the label and
/// the permutation `perm` with `perm[template_vertex] = input_vertex`.
pub fn itg_label(g: &LabeledGraph) -> Result<(IsogenyTorsionLabel, Vec<usize>), ClassifyError> {
    let shape = shape_label(g)?;
    let mut sorted_torsion: Vec<TorsionShape> = g.torsions.clone();
    sorted_torsion.sort();
    for t in templates() {
        if t.label.shape != shape || t.torsions.len() != g.torsions.len() {
            continue;
        }
        let mut tt = t.torsions.clone();
        tt.sort();
        if tt != sorted_torsion {
            continue;
        }
        if let Some(perm) = match_graphs(&t, g) {
            return Ok((t.label, perm));
        }
    }
    Err(ClassifyError::NoTemplateMatch(format!(
        "shape {} with torsions {:?}",
        shape.display(),
        g.torsions
    )))
}

/// Backtracking labeled-graph isomorphism: assign template vertices to
/// input vertices preserving torsion labels and the exact edge multiset.
fn match_graphs(t: &Template, g: &LabeledGraph) -> Option<Vec<usize>> {
    let n = t.torsions.len();
    let mut perm: Vec<usize> = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let t_edges: Vec<(usize, usize, u32)> = t
        .edges
        .iter()
        .map(|&(i, j, l)| (i.min(j), i.max(j), l))
        .collect();
    fn ok_so_far(
        t_edges: &[(usize, usize, u32)],
        g: &LabeledGraph,
        perm: &[usize],
        placed: usize,
    ) -> bool {
        // every template edge among placed vertices must exist with the
        // same degree, and no extra input edges may appear among them
        let mut count = 0usize;
        for &(i, j, l) in t_edges {
            if i < placed && j < placed {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                if !g.edges.contains(&(a, b, l)) {
                    return false;
                }
                count += 1;
            }
        }
        let placed_set: &[usize] = &perm[..placed];
        let g_count = g
            .edges
            .iter()
            .filter(|&&(a, b, _)| placed_set.contains(&a) && placed_set.contains(&b))
            .count();
        count == g_count
    }
    fn rec(
        t: &Template,
        t_edges: &[(usize, usize, u32)],
        g: &LabeledGraph,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = t.torsions.len();
        if v == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || g.torsions[cand] != t.torsions[v] {
                continue;
            }
            perm[v] = cand;
            used[cand] = true;
            if ok_so_far(t_edges, g, perm, v + 1)
                && rec(t, t_edges, g, perm, used, v + 1)
            {
                return true;
            }
            used[cand] = false;
            perm[v] = usize::MAX;
        }
        false
    }
    if rec(t, &t_edges, g, &mut perm, &mut used, 0) {
        Some(perm)
    } else {
        None
    }
}

/// Finiteness of the set of j-invariants attached to a type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finiteness {
    Infinite,
    Finite(Vec<Rat>),
}

fn parse_rat(s: &str) -> Rat {
    crate::isogeny::parse_rat(s)
}

/// The finite types with their exact j-lists.
pub fn finite_type_table() -> Vec<(IsogenyTorsionLabel, Vec<Rat>)> {
    let data = include_str!("../data/table1.txt");
    let mut out = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (label, js) = line.split_once('|').unwrap();
        let label = parse_label(label);
        let js: Vec<Rat> = js.split(',').map(parse_rat).collect();
        out.push((label, js));
    }
    out
}

/// Finite exactly for the 15 table types; finite answers carry the exact
/// j-invariant list.
pub fn finiteness(label: &IsogenyTorsionLabel) -> Finiteness {
    for (l, js) in finite_type_table() {
        if l == *label {
            return Finiteness::Finite(js);
        }
    }
    Finiteness::Infinite
}

/// Kenku audit: every numbered condition of the classification bound,
/// checked against a computed class.
#[derive(Debug, Clone)]
pub struct KenkuReport {
    pub conditions: Vec<(String, bool)>,
}

impl KenkuReport {
    pub fn pass(&self) -> bool {
        self.conditions.iter().all(|(_, ok)| *ok)
    }
}

pub fn kenku_audit(class: &IsogenyClass) -> KenkuReport {
    let c = class.curves.len();
    let cp = |p: u32| class.cp_count(p);
    let mut conds: Vec<(String, bool)> = Vec::new();
    let primes = [2u32, 3, 5, 7, 11, 13, 17, 19, 37, 43, 67, 163];
    let mut product = 1usize;
    for &p in &primes {
        let n = cp(p);
        product *= n;
        let bound = crate::galois::kenku_cp_bound(p) as usize;
        conds.push((format!("C_{p} = {n} <= {bound}"), n <= bound));
    }
    conds.push((format!("C = {c} = prod C_p = {product}"), c == product));
    conds.push((format!("C = {c} <= 8"), c <= 8));
    for &p in &[11u32, 13, 17, 19, 37, 43, 67, 163] {
        if cp(p) == 2 {
            let others = primes.iter().all(|&q| q == p || cp(q) == 1);
            conds.push((format!("C_{p} = 2 forces C_q = 1 for q != {p}"), others));
        }
    }
    if cp(7) == 2 {
        let ok = c <= 4 && (cp(3) == 2 || cp(2) == 2 || c == 2);
        conds.push(("C_7 = 2 forces C <= 4 and (C_3 = 2 or C_2 = 2 or C = 2)".into(), ok));
    }
    conds.push((format!("C_5 = {} <= 3", cp(5)), cp(5) <= 3));
    if cp(5) == 3 {
        conds.push(("C_5 = 3 forces C = 3".into(), c == 3));
    }
    if cp(5) == 2 {
        let ok = c <= 4 && (cp(3) == 2 || cp(2) == 2 || c == 2);
        conds.push(("C_5 = 2 forces C <= 4 and (C_3 = 2 or C_2 = 2 or C = 2)".into(), ok));
    }
    conds.push((format!("C_3 = {} <= 4", cp(3)), cp(3) <= 4));
    if cp(3) == 4 {
        conds.push(("C_3 = 4 forces C = 4".into(), c == 4));
    }
    if cp(3) == 3 {
        let ok = c <= 6 && (cp(2) == 2 || c == 3);
        conds.push(("C_3 = 3 forces C <= 6 and (C_2 = 2 or C = 3)".into(), ok));
    }
    if cp(3) == 2 {
        conds.push((format!("C_3 = 2 forces C_2 = {} <= 4", cp(2)), cp(2) <= 4));
    }
    KenkuReport { conditions: conds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ec::WeierstrassCurve;
    use crate::isogeny::isogeny_class;

    #[test]
    fn fifty_two_templates_with_distribution() {
        let ts = templates();
        assert_eq!(ts.len(), 52);
        let count = |f: fn(&GraphShapeLabel) -> bool| {
            ts.iter().filter(|t| f(&t.label.shape)).count()
        };
        let l = count(|s| {
            matches!(
                s,
                GraphShapeLabel::L1
                    | GraphShapeLabel::L2(_)
                    | GraphShapeLabel::L3(_)
                    | GraphShapeLabel::L4
            )
        });
        let t = count(|s| {
            matches!(
                s,
                GraphShapeLabel::T4 | GraphShapeLabel::T6 | GraphShapeLabel::T8
            )
        });
        let r = count(|s| matches!(s, GraphShapeLabel::R4(_) | GraphShapeLabel::R6));
        let s = count(|s| matches!(s, GraphShapeLabel::S));
        assert_eq!((l, t, r, s), (23, 13, 12, 4));
    }

    #[test]
    fn twenty_six_shapes() {
        let mut shapes: Vec<GraphShapeLabel> =
            templates().iter().map(|t| t.label.shape).collect();
        shapes.sort();
        shapes.dedup();
        assert_eq!(shapes.len(), 26);
    }

    #[test]
    fn finite_table_shape() {
        let table = finite_type_table();
        assert_eq!(table.len(), 15);
        let total: usize = table.iter().map(|(_, js)| js.len()).sum();
        assert_eq!(total, 23);
        // every finite label is among the 52
        for (l, _) in &table {
            assert!(templates().iter().any(|t| t.label == *l), "{}", l.display());
        }
        // exactly 15 of the 52 labels are finite
        let finite = templates()
            .iter()
            .filter(|t| matches!(finiteness(&t.label), Finiteness::Finite(_)))
            .count();
        assert_eq!(finite, 15);
    }

    #[test]
    fn table1_exact_products() {
        use crate::arith::{int, Int};
        // spot-check stored j-values against their prime factorizations
        let pow = |b: i64, e: u32| Int::from(b).pow(e);
        let known: Vec<(Int, &str)> = vec![
            (-(Int::from(11) * pow(131, 3)), "-24729001"),
            (-pow(2, 15), "-32768"),
            (-pow(11, 2), "-121"),
            (-(pow(2, 15) * pow(3, 3)), "-884736"),
            (-(pow(2, 18) * pow(3, 3) * pow(5, 3)), "-884736000"),
            (
                -(pow(2, 15) * pow(3, 3) * pow(5, 3) * pow(11, 3)),
                "-147197952000",
            ),
            (
                -(pow(2, 18) * pow(3, 3) * pow(5, 3) * pow(23, 3) * pow(29, 3)),
                "-262537412640768000",
            ),
            (-(pow(2, 15) * int(3) * pow(5, 3)), "-12288000"),
            (-(Int::from(7) * pow(11, 3)), "-9317"),
            (
                -(Int::from(7) * pow(137, 3) * pow(2083, 3)),
                "-162677523113838677",
            ),
            (-(pow(3, 3) * pow(5, 3)), "-3375"),
            (pow(3, 3) * pow(5, 3) * pow(17, 3), "16581375"),
        ];
        for (value, text) in known {
            assert_eq!(value.to_string(), text);
        }
    }

    #[test]
    fn label_display_forms() {
        let t = templates();
        let find = |s: &str| t.iter().find(|t| t.label.display() == s).is_some();
        for s in [
            "L1", "L2(2)", "L2^1(7)", "L2(13)", "L3^1(9)", "L4^2", "T4^1", "T6^4", "T8^3",
            "R4(14)", "R4^1(10)", "R6^1", "S^1",
        ] {
            assert!(find(s), "missing label {s}");
        }
        assert_eq!(IsogenyTorsionLabel::parse("T8^5").unwrap().display(), "T8^5");
    }

    #[test]
    fn classify_17a_t4_1() {
        let cls =
            isogeny_class(&WeierstrassCurve::from_ai([1, -1, 1, -1, -14]).unwrap()).unwrap();
        let g = LabeledGraph::from_class(&cls);
        assert_eq!(shape_label(&g).unwrap(), GraphShapeLabel::T4);
        let (label, perm) = itg_label(&g).unwrap();
        assert_eq!(label.display(), "T4^1");
        // permutation maps template positions to input vertices compatibly
        let t = templates()
            .into_iter()
            .find(|t| t.label == label)
            .unwrap();
        for (i, &v) in perm.iter().enumerate() {
            assert_eq!(g.torsions[v], t.torsions[i]);
        }
    }

    #[test]
    fn classify_five_chain_l3_25() {
        let cls = isogeny_class(&WeierstrassCurve::from_ai([0, -1, 1, 0, 0]).unwrap()).unwrap();
        let g = LabeledGraph::from_class(&cls);
        assert_eq!(shape_label(&g).unwrap(), GraphShapeLabel::L3(25));
        let (label, _) = itg_label(&g).unwrap();
        assert_eq!(label.display(), "L3^1(25)");
    }

    #[test]
    fn classify_27_chain_l4() {
        let cls = isogeny_class(&WeierstrassCurve::from_ai([0, 0, 0, 0, 16]).unwrap()).unwrap();
        let g = LabeledGraph::from_class(&cls);
        assert_eq!(shape_label(&g).unwrap(), GraphShapeLabel::L4);
        let (label, _) = itg_label(&g).unwrap();
        assert_eq!(label.display(), "L4^1");
        match finiteness(&label) {
            Finiteness::Finite(js) => {
                assert_eq!(js, vec![crate::arith::rat_i(-12288000)]);
            }
            _ => panic!("L4^1 must be finite"),
        }
    }

    #[test]
    fn itg_label_permutation_invariant() {
        // relabeling input vertices never changes the label
        let cls =
            isogeny_class(&WeierstrassCurve::from_ai([1, -1, 1, -1, -14]).unwrap()).unwrap();
        let g = LabeledGraph::from_class(&cls);
        let (base, _) = itg_label(&g).unwrap();
        let n = g.torsions.len();
        // a rotation permutation
        let sigma: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut torsions = vec![g.torsions[0]; n];
        for i in 0..n {
            torsions[sigma[i]] = g.torsions[i];
        }
        let edges: Vec<(usize, usize, u32)> = g
            .edges
            .iter()
            .map(|&(i, j, l)| {
                let (a, b) = (sigma[i], sigma[j]);
                (a.min(b), a.max(b), l)
            })
            .collect();
        let g2 = LabeledGraph { torsions, edges };
        let (relabeled, _) = itg_label(&g2).unwrap();
        assert_eq!(base, relabeled);
    }

    #[test]
    fn kenku_audit_17a() {
        let cls =
            isogeny_class(&WeierstrassCurve::from_ai([1, -1, 1, -1, -14]).unwrap()).unwrap();
        let report = kenku_audit(&cls);
        assert!(report.pass(), "{:?}", report.conditions);
        assert_eq!(cls.cp_count(2), 4);
    }

    #[test]
    fn templates_are_internally_consistent() {
        // each template's own graph must classify to its own label
        for t in templates() {
            let g = LabeledGraph {
                torsions: t.torsions.clone(),
                edges: t
                    .edges
                    .iter()
                    .map(|&(i, j, l)| (i.min(j), i.max(j), l))
                    .collect(),
            };
            let (label, _) = itg_label(&g).unwrap_or_else(|e| {
                panic!("template {} does not classify: {e}", t.label.display())
            });
            assert_eq!(label, t.label, "template {}", t.label.display());
        }
    }
}
