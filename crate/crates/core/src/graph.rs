//! Class-level and element-level graphs of a group, triangle search and
//! export.
//!
//! The cyclic conjugacy-class graph joins distinct nontrivial classes `C`,
//! `D` when some `x ∈ C`, `y ∈ D` generate a cyclic subgroup; the commuting
//! variant asks for an abelian subgroup instead. The enhanced power graph is
//! the element-level version of the cyclic condition.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, IDENTITY};

/// Format tag of the structured graph document.
pub const GRAPH_FORMAT: &str = "ccg-graph/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    CyclicCcc,
    CommutingCcc,
    EnhancedPower,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::CyclicCcc => "cyclic_ccc",
            GraphKind::CommutingCcc => "commuting_ccc",
            GraphKind::EnhancedPower => "enhanced_power",
        }
    }

    pub fn is_class_level(self) -> bool {
        self != GraphKind::EnhancedPower
    }
}

/// A vertex: a nontrivial class (or, for the enhanced power graph, a single
/// nonidentity element).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    /// Class id, or element index for element graphs.
    pub id: usize,
    /// Element order of the members.
    pub order: u64,
    /// Number of group elements the vertex stands for.
    pub size: usize,
    /// Representative in 1-based cycle notation.
    pub representative: String,
}

/// Symmetric, irreflexive adjacency stored as bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Adjacency {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Adjacency {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Adjacency {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }
}

/// A labelled simple graph of one of the [`GraphKind`]s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub name: String,
    pub kind: GraphKind,
    pub vertices: Vec<Vertex>,
    adjacency: Adjacency,
}

/// Δ(G) and its commuting sibling.
pub type ClassGraph = LabeledGraph;
/// The enhanced power graph.
pub type ElementGraph = LabeledGraph;

impl LabeledGraph {
    pub fn new(name: impl Into<String>, kind: GraphKind, vertices: Vec<Vertex>) -> Self {
        let n = vertices.len();
        LabeledGraph {
            name: name.into(),
            kind,
            vertices,
            adjacency: Adjacency::new(n),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert_ne!(i, j, "graphs are irreflexive");
        self.adjacency.set(i, j);
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency.get(i, j)
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (i + 1..n).filter(move |&j| self.adjacent(i, j)).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&j| self.adjacent(i, j)).collect()
    }

    /// Position of the vertex with the given class or element id.
    pub fn position_of(&self, id: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

fn class_vertices(g: &FiniteGroup) -> Vec<Vertex> {
    let cc = g.conjugacy_classes();
    (1..cc.len())
        .map(|c| {
            let rep = cc.representative(c);
            Vertex {
                id: c,
                order: g.element_order(rep),
                size: cc.class(c).len(),
                representative: g.element(rep).to_cycle_string(),
            }
        })
        .collect()
}

fn pair_condition(g: &FiniteGroup, kind: GraphKind) -> impl Fn(usize, usize) -> bool + Sync + '_ {
    move |x, y| match kind {
        GraphKind::CommutingCcc => g.commute(x, y),
        _ => g.cyclic_span(x, y),
    }
}

/// Builds Δ(G) (`CyclicCcc`) or the commuting class graph.
///
/// The edge condition is invariant under simultaneous conjugation, so one
/// endpoint is fixed at the class representative and only the other class
/// is scanned.
pub fn build_class_graph(g: &FiniteGroup, kind: GraphKind) -> ClassGraph {
    let cc = g.conjugacy_classes();
    let reps: Vec<usize> = (0..cc.len()).map(|c| cc.representative(c)).collect();
    build_class_graph_with_representatives(g, kind, &reps)
}

/// As [`build_class_graph`], with caller-chosen representatives
/// (`reps[c]` must lie in class `c`; entry 0 is ignored).
pub fn build_class_graph_with_representatives(
    g: &FiniteGroup,
    kind: GraphKind,
    reps: &[usize],
) -> ClassGraph {
    assert!(kind.is_class_level(), "use build_enhanced_power_graph for element graphs");
    let cc = g.conjugacy_classes();
    for (c, &r) in reps.iter().enumerate() {
        assert_eq!(cc.class_of(r), c, "representative outside its class");
    }
    let k = cc.len();
    let cond = pair_condition(g, kind);
    let pairs: Vec<(usize, usize)> = (1..k)
        .flat_map(|c| (c + 1..k).map(move |d| (c, d)))
        .collect();
    let edges: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .filter(|&(c, d)| {
            let x = reps[c];
            cc.class(d).iter().any(|&y| cond(x, y))
        })
        .collect();
    let mut graph = LabeledGraph::new("", kind, class_vertices(g));
    for (c, d) in edges {
        graph.add_edge(c - 1, d - 1);
    }
    graph
}

/// Element-level graph on `G \ {1}` with edges when `<x, y>` is cyclic.
pub fn build_enhanced_power_graph(g: &FiniteGroup) -> ElementGraph {
    let n = g.order();
    let vertices = (1..n)
        .map(|x| Vertex {
            id: x,
            order: g.element_order(x),
            size: 1,
            representative: g.element(x).to_cycle_string(),
        })
        .collect();
    let rows: Vec<Vec<usize>> = (1..n)
        .into_par_iter()
        .map(|x| (x + 1..n).filter(|&y| g.cyclic_span(x, y)).collect())
        .collect();
    let mut graph = LabeledGraph::new("", GraphKind::EnhancedPower, vertices);
    for (i, row) in rows.into_iter().enumerate() {
        for y in row {
            graph.add_edge(i, y - 1);
        }
    }
    debug_assert_eq!(graph.vertices.iter().filter(|v| v.id == IDENTITY).count(), 0);
    graph
}

/// The lexicographically least triangle `(i, j, k)`, `i < j < k`, if any.
pub fn find_triangle(graph: &LabeledGraph) -> Option<(usize, usize, usize)> {
    let adj = &graph.adjacency;
    for i in 0..adj.n {
        for j in i + 1..adj.n {
            if !adj.get(i, j) {
                continue;
            }
            let (ri, rj) = (adj.row(i), adj.row(j));
            for (w, (a, b)) in ri.iter().zip(rj).enumerate() {
                let mut common = a & b;
                // Only k > j.
                if w * 64 + 63 <= j {
                    continue;
                }
                if w == j / 64 {
                    common &= !((2u64 << (j % 64)) - 1);
                }
                if common != 0 {
                    return Some((i, j, w * 64 + common.trailing_zeros() as usize));
                }
            }
        }
    }
    None
}

pub fn is_triangle_free(graph: &LabeledGraph) -> bool {
    find_triangle(graph).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Structured,
}

/// Serializes a graph; both formats are byte-deterministic.
pub fn export_graph(graph: &LabeledGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(graph),
        ExportFormat::Structured => to_structured(graph),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn to_dot(graph: &LabeledGraph) -> String {
    let mut out = format!(
        "graph \"{}\" {{\n  // kind: {}\n",
        escape(&graph.name),
        graph.kind.as_str()
    );
    for (i, v) in graph.vertices.iter().enumerate() {
        out.push_str(&format!(
            "  v{i} [label=\"{}|{}|{}\"];\n",
            v.order,
            v.size,
            escape(&v.representative)
        ));
    }
    for (i, j) in graph.edges() {
        out.push_str(&format!("  v{i} -- v{j};\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct GraphDocument {
    format: String,
    group: String,
    kind: GraphKind,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

fn to_structured(graph: &LabeledGraph) -> String {
    let doc = GraphDocument {
        format: GRAPH_FORMAT.to_string(),
        group: graph.name.clone(),
        kind: graph.kind,
        vertices: graph.vertices.clone(),
        edges: graph.edges(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph documents serialize");
    s.push('\n');
    s
}

/// Parses a `ccg-graph/1` document.
pub fn parse_structured(text: &str) -> Result<LabeledGraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::GraphParse(e.to_string()))?;
    if doc.format != GRAPH_FORMAT {
        return Err(Error::GraphParse(format!("unknown format {:?}", doc.format)));
    }
    let n = doc.vertices.len();
    let mut graph = LabeledGraph::new(doc.group, doc.kind, doc.vertices);
    for (i, j) in doc.edges {
        if i >= n || j >= n || i == j {
            return Err(Error::GraphParse(format!("bad edge ({i}, {j})")));
        }
        graph.add_edge(i, j);
    }
    Ok(graph)
}

/// Independent reference implementations used to cross-check the
/// production builders.
pub mod oracle {
    use super::*;

    /// Δ(G) or its commuting sibling by scanning every pair
    /// `x' ∈ C`, `y' ∈ D`.
    pub fn class_graph_full_scan(g: &FiniteGroup, kind: GraphKind) -> ClassGraph {
        let cc = g.conjugacy_classes();
        let cond = pair_condition(g, kind);
        let mut graph = LabeledGraph::new("", kind, class_vertices(g));
        for c in 1..cc.len() {
            for d in c + 1..cc.len() {
                let hit = cc
                    .class(c)
                    .iter()
                    .any(|&x| cc.class(d).iter().any(|&y| cond(x, y)));
                if hit {
                    graph.add_edge(c - 1, d - 1);
                }
            }
        }
        graph
    }

    /// Δ(G) as the quotient of the enhanced power graph by conjugacy.
    pub fn class_graph_from_element_graph(g: &FiniteGroup, epg: &ElementGraph) -> ClassGraph {
        let cc = g.conjugacy_classes();
        let mut graph = LabeledGraph::new("", GraphKind::CyclicCcc, class_vertices(g));
        for (i, j) in epg.edges() {
            let c = cc.class_of(epg.vertices[i].id);
            let d = cc.class_of(epg.vertices[j].id);
            if c != d {
                graph.add_edge(c - 1, d - 1);
            }
        }
        graph
    }

    /// `trace(A^3) / 6`.
    pub fn triangle_count(graph: &LabeledGraph) -> u64 {
        let n = graph.vertex_count();
        let a: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(graph.adjacent(i, j))).collect())
            .collect();
        let mut trace = 0;
        for i in 0..n {
            for j in 0..n {
                if a[i][j] == 0 {
                    continue;
                }
                for k in 0..n {
                    trace += a[j][k] * a[k][i];
                }
            }
        }
        trace / 6
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_group, GroupSpec};
    use crate::perm::Permutation;

    fn build(s: GroupSpec) -> FiniteGroup {
        build_group(&s).unwrap()
    }

    fn q8() -> FiniteGroup {
        build(GroupSpec::GeneralizedQuaternion { order: 8 })
    }

    fn complete(n: usize) -> LabeledGraph {
        let vs = (0..n)
            .map(|i| Vertex { id: i + 1, order: 1, size: 1, representative: "()".into() })
            .collect();
        let mut g = LabeledGraph::new("k", GraphKind::CyclicCcc, vs);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    #[test]
    fn q8_class_graph_is_a_star() {
        let g = q8();
        let d = build_class_graph(&g, GraphKind::CyclicCcc);
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.edge_count(), 3);
        let centre = d.vertices.iter().position(|v| v.order == 2).unwrap();
        assert_eq!(d.neighbors(centre).len(), 3);
        assert!(is_triangle_free(&d));
        assert_eq!(d, oracle::class_graph_full_scan(&g, GraphKind::CyclicCcc));
    }

    #[test]
    fn z8_has_the_power_triangle() {
        let g = build(GroupSpec::Cyclic { n: 8 });
        let d = build_class_graph(&g, GraphKind::CyclicCcc);
        assert_eq!(d.vertex_count(), 7);
        let (i, j, k) = find_triangle(&d).unwrap();
        assert_eq!((i, j, k), (0, 1, 2));
        // The least triangle is some g, g^2, g^4 pattern: orders 8, 4, 2 in some order.
        let gen = g.index_of(&Permutation::parse_cycles("(1 2 3 4 5 6 7 8)", 8).unwrap()).unwrap();
        let cc = g.conjugacy_classes();
        let pos = |x: usize| d.position_of(cc.class_of(x)).unwrap();
        let witness = [pos(gen), pos(g.pow(gen, 2)), pos(g.pow(gen, 4))];
        assert!(d.adjacent(witness[0], witness[1]));
        assert!(d.adjacent(witness[1], witness[2]));
        assert!(d.adjacent(witness[0], witness[2]));
    }

    #[test]
    fn elementary_abelian_two_group_has_no_edges() {
        let g = build(GroupSpec::Abelian { invariants: vec![2, 2, 2] });
        let d = build_class_graph(&g, GraphKind::CyclicCcc);
        assert_eq!(d.vertex_count(), 7);
        assert_eq!(d.edge_count(), 0);
    }

    #[test]
    fn enhanced_power_graph_cases() {
        let z = build(GroupSpec::Cyclic { n: 6 });
        let e = build_enhanced_power_graph(&z);
        assert_eq!(e.vertex_count(), 5);
        assert_eq!(e.edge_count(), 10);
        let v = build(GroupSpec::Abelian { invariants: vec![2, 2] });
        assert_eq!(build_enhanced_power_graph(&v).edge_count(), 0);
        let g = q8();
        let e = build_enhanced_power_graph(&g);
        let central = (1..8).find(|&x| g.element_order(x) == 2).unwrap();
        let c = e.position_of(central).unwrap();
        assert_eq!(e.neighbors(c).len(), 6);
        for x in 1..8 {
            if x == central {
                continue;
            }
            let nbrs: Vec<usize> = e.neighbors(e.position_of(x).unwrap()).iter().map(|&p| e.vertices[p].id).collect();
            let mut expected = vec![central, g.inv(x)];
            expected.sort();
            assert_eq!(nbrs, expected);
        }
    }

    #[test]
    fn triangle_search_basics() {
        let vs: Vec<Vertex> = (0..4)
            .map(|i| Vertex { id: i + 1, order: 2, size: 1, representative: "()".into() })
            .collect();
        let mut star = LabeledGraph::new("s", GraphKind::CyclicCcc, vs);
        for j in 1..4 {
            star.add_edge(0, j);
        }
        assert_eq!(find_triangle(&star), None);
        assert_eq!(find_triangle(&complete(3)), Some((0, 1, 2)));
        assert_eq!(oracle::triangle_count(&complete(5)), 10);
    }

    #[test]
    fn triangle_search_across_word_boundaries() {
        let vs: Vec<Vertex> = (0..200)
            .map(|i| Vertex { id: i, order: 1, size: 1, representative: "()".into() })
            .collect();
        let mut g = LabeledGraph::new("w", GraphKind::EnhancedPower, vs);
        g.add_edge(3, 70);
        g.add_edge(3, 150);
        g.add_edge(70, 150);
        g.add_edge(3, 64);
        assert_eq!(find_triangle(&g), Some((3, 70, 150)));
        assert_eq!(oracle::triangle_count(&g), 1);
    }

    #[test]
    fn dot_export() {
        let vs = vec![Vertex { id: 1, order: 2, size: 1, representative: "(1 2)".into() }];
        let g = LabeledGraph::new("empty", GraphKind::CyclicCcc, vs);
        let dot = export_graph(&g, ExportFormat::Dot);
        assert!(dot.contains("v0 [label=\"2|1|(1 2)\"]"));
        assert!(!dot.contains("--"));
        let d = build_class_graph(&q8(), GraphKind::CyclicCcc).with_name("Q8");
        let dot = export_graph(&d, ExportFormat::Dot);
        assert_eq!(dot.matches("[label=").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot, export_graph(&d, ExportFormat::Dot));
    }

    #[test]
    fn structured_round_trip() {
        let g = build(GroupSpec::Symmetric { n: 4 });
        for kind in [GraphKind::CyclicCcc, GraphKind::CommutingCcc] {
            let d = build_class_graph(&g, kind).with_name("S4");
            let text = export_graph(&d, ExportFormat::Structured);
            assert!(text.contains(GRAPH_FORMAT));
            let back = parse_structured(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(export_graph(&back, ExportFormat::Structured), text);
        }
        assert!(parse_structured("{}").is_err());
        let bad = export_graph(&complete(2), ExportFormat::Structured).replace("ccg-graph/1", "x");
        assert!(parse_structured(&bad).is_err());
    }

    #[test]
    fn graph_laws_on_small_groups() {
        let specs = vec![
            GroupSpec::Symmetric { n: 4 },
            GroupSpec::Dihedral { n: 6 },
            GroupSpec::GeneralizedQuaternion { order: 16 },
            GroupSpec::Alternating { n: 5 },
            GroupSpec::Abelian { invariants: vec![4, 2] },
        ];
        for s in specs {
            let g = build(s);
            let d = build_class_graph(&g, GraphKind::CyclicCcc);
            let c = build_class_graph(&g, GraphKind::CommutingCcc);
            for (i, j) in d.edges() {
                assert!(c.adjacent(i, j));
            }
            let epg = build_enhanced_power_graph(&g);
            assert_eq!(d, oracle::class_graph_from_element_graph(&g, &epg));
            assert_eq!(d, oracle::class_graph_full_scan(&g, GraphKind::CyclicCcc));
            assert_eq!(c, oracle::class_graph_full_scan(&g, GraphKind::CommutingCcc));
            assert_eq!(find_triangle(&d).is_none(), oracle::triangle_count(&d) == 0);
            assert_eq!(find_triangle(&c).is_none(), oracle::triangle_count(&c) == 0);
        }
    }

    #[test]
    fn representative_choice_is_irrelevant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for s in [GroupSpec::Symmetric { n: 5 }, GroupSpec::Psl2 { q: 7 }] {
            let g = build(s);
            let cc = g.conjugacy_classes();
            let base = build_class_graph(&g, GraphKind::CyclicCcc);
            for _ in 0..3 {
                let reps: Vec<usize> = (0..cc.len())
                    .map(|c| cc.class(c)[rng.gen_range(0..cc.class(c).len())])
                    .collect();
                assert_eq!(build_class_graph_with_representatives(&g, GraphKind::CyclicCcc, &reps), base);
            }
        }
    }
}
