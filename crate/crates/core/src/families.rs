//! Graph constructors: the base graph and its two cubic completions,
//! textbook graphs, truncation, and the registry of sporadic examples.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::canon::{are_isomorphic, canonical_graph6};
use crate::decomp::girth6_pipeline;
use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::graph6::{parse_graph6, to_graph6};
use crate::spectra::char_poly;
use crate::transforms::{bipartite_double, incidence_graph, line_graph, Geometry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family parameter k = {0} must be at least 2")]
    KTooSmall(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} has degree {degree}, truncation needs degree 3")]
    NotDegreeThree { vertex: usize, degree: usize },
    #[error("sporadic id {0} is outside 1..=14")]
    SporadicId(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyTag {
    Base(usize),
    KollarSarnak(usize),
    GuoMohar(usize),
    Sporadic(usize),
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Base(k) => write!(f, "B({k})"),
            FamilyTag::KollarSarnak(k) => write!(f, "KS({k})"),
            FamilyTag::GuoMohar(k) => write!(f, "GM({k})"),
            FamilyTag::Sporadic(id) => write!(f, "sporadic #{id}"),
        }
    }
}

/// Labels in the base graph: `w_i = 4i`, `w'_i = 4i+1`, `b_i = 4i+2`,
/// `b'_i = 4i+3`.
pub mod label {
    pub fn w(i: usize) -> usize {
        4 * i
    }
    pub fn w_(i: usize) -> usize {
        4 * i + 1
    }
    pub fn b(i: usize) -> usize {
        4 * i + 2
    }
    pub fn b_(i: usize) -> usize {
        4 * i + 3
    }
}

fn check_k(k: usize) -> Result<(), FamilyError> {
    if k < 2 {
        return Err(FamilyError::KTooSmall(k));
    }
    if 4 * k > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(4 * k).into());
    }
    Ok(())
}

/// `k` induced 4-cycles joined in a path.
fn base_edges(k: usize) -> Vec<(usize, usize)> {
    use label::*;
    let mut e = Vec::with_capacity(6 * k);
    for i in 0..k {
        e.extend([(w(i), b(i)), (w_(i), b_(i)), (w(i), b_(i)), (w_(i), b(i))]);
        if i + 1 < k {
            e.extend([(b(i), w(i + 1)), (b_(i), w_(i + 1))]);
        }
    }
    e
}

pub fn base_graph(k: usize) -> Result<Graph, FamilyError> {
    check_k(k)?;
    Ok(Graph::from_edges(4 * k, base_edges(k))?)
}

pub fn kollar_sarnak(k: usize) -> Result<Graph, FamilyError> {
    use label::*;
    let mut g = base_graph(k)?;
    g.add_edge(w(0), w_(0))?;
    g.add_edge(b(k - 1), b_(k - 1))?;
    Ok(g)
}

pub fn guo_mohar(k: usize) -> Result<Graph, FamilyError> {
    use label::*;
    let mut g = base_graph(k)?;
    g.add_edge(w(0), b(k - 1))?;
    g.add_edge(w_(0), b_(k - 1))?;
    Ok(g)
}

pub fn family_graph(tag: FamilyTag) -> Result<Graph, FamilyError> {
    match tag {
        FamilyTag::Base(k) => base_graph(k),
        FamilyTag::KollarSarnak(k) => kollar_sarnak(k),
        FamilyTag::GuoMohar(k) => guo_mohar(k),
        FamilyTag::Sporadic(id) => Ok(sporadic(id)?.graph.clone()),
    }
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    Ok(Graph::complete(n)?)
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Ok(Graph::from_edges(a + b, edges)?)
}

/// Outer cycle `0..n`, spokes `i -- n+i`, inner edges `n+i -- n+(i+k)`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(FamilyError::InvalidParameter(format!(
            "G({n},{k}) needs 1 <= k < n/2"
        )));
    }
    let mut g = Graph::empty(2 * n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
        g.add_edge(i, n + i)?;
        g.add_edge(n + i, n + (i + k) % n)?;
    }
    Ok(g)
}

/// `Cay(Z_n, S ∪ -S)`.
pub fn circulant(n: usize, s: &[usize]) -> Result<Graph, FamilyError> {
    if s.iter().any(|&d| d % n.max(1) == 0) {
        return Err(FamilyError::InvalidParameter(
            "connection set contains 0".into(),
        ));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for &d in s {
            let j = (i + d) % n;
            if !g.has_edge(i, j) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// 3-cube on `0..8`, adjacent when labels differ in one bit.
pub fn cube() -> Graph {
    let edges = (0..8usize)
        .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
        .filter(|(u, v)| u < v);
    Graph::from_edges(8, edges).expect("8 vertices")
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2).expect("valid parameters")
}

/// LCF `[5, -5]^7`.
pub fn heawood() -> Graph {
    let mut g = Graph::empty(14).expect("14 vertices");
    for i in 0..14 {
        g.add_edge(i, (i + 1) % 14).expect("in range");
        if i % 2 == 0 {
            g.add_edge(i, (i + 5) % 14).expect("in range");
        }
    }
    g
}

pub fn moebius_kantor() -> Graph {
    generalized_petersen(8, 3).expect("valid parameters")
}

pub fn desargues() -> Graph {
    generalized_petersen(10, 3).expect("valid parameters")
}

/// `Cay(Z4 x Z4, {±(1,0), ±(0,1), ±(1,1)})`, vertex `(a, b)` at `4a + b`.
pub fn shrikhande() -> Graph {
    let mut g = Graph::empty(16).expect("16 vertices");
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                g.add_edge(4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4)
                    .expect("in range");
            }
        }
    }
    g
}

/// Triangle decomposition of the Shrikhande graph on vertices `0..16`.
pub fn shrikhande_figure_triangles() -> Vec<[usize; 3]> {
    vec![
        [0, 1, 2],
        [2, 3, 4],
        [4, 5, 6],
        [6, 7, 0],
        [0, 9, 15],
        [6, 13, 15],
        [2, 9, 11],
        [4, 11, 13],
        [1, 7, 8],
        [1, 3, 10],
        [3, 5, 12],
        [5, 7, 14],
        [8, 10, 13],
        [9, 12, 14],
        [8, 11, 14],
        [10, 12, 15],
    ]
}

/// `K3 □ K3` on `(x, y) -> 3x + y`, plus `v01 = 9`, `v02 = 10`, `v12 = 11`,
/// where `v_ij` is adjacent to every grid vertex with `x ∈ {i, j}`.
pub fn k3_box_k3_plus() -> Graph {
    let mut g = Graph::empty(12).expect("12 vertices");
    for u in 0..9 {
        for v in u + 1..9 {
            if u / 3 == v / 3 || u % 3 == v % 3 {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    for (extra, (i, j)) in [(9, (0, 1)), (10, (0, 2)), (11, (1, 2))] {
        for v in 0..9 {
            if v / 3 == i || v / 3 == j {
                g.add_edge(extra, v).expect("in range");
            }
        }
    }
    g
}

/// Replace each vertex of `s` by a triangle. Corner `i` of the triangle
/// for `v` keeps the edge to the `i`-th neighbour of `v` in ascending
/// order; corner 0 keeps the label `v`, corners 1 and 2 are appended.
pub fn truncate(g: &Graph, s: &[usize]) -> Result<Graph, FamilyError> {
    let n = g.order();
    let mut set: Vec<usize> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    for &v in &set {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
        }
        if g.degree(v) != 3 {
            return Err(FamilyError::NotDegreeThree {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    let mut corners: Vec<Option<[usize; 3]>> = vec![None; n];
    for (idx, &v) in set.iter().enumerate() {
        corners[v] = Some([v, n + 2 * idx, n + 2 * idx + 1]);
    }
    let end = |v: usize, u: usize| -> usize {
        match corners[v] {
            None => v,
            Some(c) => c[g.neighbors(v).position(|x| x == u).expect("neighbour")],
        }
    };
    let mut h = Graph::empty(n + 2 * set.len())?;
    for (u, v) in g.edges() {
        h.add_edge(end(u, v), end(v, u))?;
    }
    for c in corners.iter().flatten() {
        h.add_edge(c[0], c[1])?;
        h.add_edge(c[0], c[2])?;
        h.add_edge(c[1], c[2])?;
    }
    Ok(h)
}

/// One row of the sporadic table.
#[derive(Debug, Clone, Serialize)]
pub struct SporadicEntry {
    pub id: usize,
    pub n: usize,
    pub bipartite: bool,
    pub description: &'static str,
    pub recipe: &'static str,
    #[serde(rename = "graph6")]
    pub canonical_graph6: String,
    #[serde(skip)]
    pub graph: Graph,
}

struct Row {
    n: usize,
    bipartite: bool,
    description: &'static str,
    recipe: &'static str,
    build: fn() -> Graph,
}

fn k33_white() -> (Graph, Vec<usize>) {
    (complete_bipartite(3, 3).expect("6 vertices"), vec![0, 1, 2])
}

fn cube_white_truncated() -> Graph {
    let c = cube();
    let white = c.bipartition().expect("cube is bipartite").class(0);
    truncate(&c, &white).expect("cubic")
}

fn petersen_truncated() -> Graph {
    truncate(&petersen(), &[0]).expect("cubic")
}

fn desargues_mate() -> Graph {
    let lk5 = line_graph(&complete(5).expect("K5")).expect("10 edges");
    let target = char_poly(&desargues());
    let d = desargues();
    girth6_pipeline(&lk5)
        .into_iter()
        .find(|h| !are_isomorphic(h, &d) && char_poly(h) == target)
        .expect("L(K5) has a decomposition giving a cospectral mate")
}

/// Triangles `{a, a+1, a+3}` over `Z_12`.
pub fn circulant12_geometry() -> Geometry {
    let lines = (0..12).map(|a| [a, (a + 1) % 12, (a + 3) % 12]).collect();
    Geometry::new(12, lines).expect("partial linear space")
}

pub fn shrikhande_geometry() -> Geometry {
    Geometry::new(16, shrikhande_figure_triangles()).expect("partial linear space")
}

pub const EXCEPTIONAL_HOST16_GRAPH6: &str = "Otrkq@@PXBEDJBCsBOwFq";

/// 6-regular graph on 16 vertices with least eigenvalue -2, automorphism
/// group of order 6, and a unique triangle decomposition up to automorphism.
/// Found by a search over E8 root configurations.
pub fn exceptional_host16() -> Graph {
    parse_graph6(EXCEPTIONAL_HOST16_GRAPH6).expect("valid graph6")
}

fn exceptional_incidence() -> Graph {
    let mut hs = girth6_pipeline(&exceptional_host16());
    assert_eq!(hs.len(), 1, "host has a unique decomposition");
    hs.pop().expect("one graph")
}

/// Canonical graph6 of each row, derived once and checked by the tests.
pub const PINNED_GRAPH6: [&str; 14] = [
    "C~",
    "I?LRCecq?",
    "I?LRCegp?",
    "K?Ca?\\odDOWO",
    "K?Ca?\\oeDGWO",
    "M????[qTBOR?h?o_?",
    "O?????RBRACoU?a_U?EG?",
    "O?GQ??@?WKbCWOd?T?EC?",
    "S????????B_qAgBOEAA`?WOAQ?DG?EO??",
    "S????????D_iAWKCICBA?B_AQ?DG?EO??",
    "W????????????F?h?d?P_CP?`GAA_?[?@o??c_?DG??X???",
    "W????????????J?T?b?EOAK?QC@H?Aa?@g??b??EC??U???",
    "_??????????????????????w?Co?Q_?k?@g??_c?O`??cG?CS??DA??CO_?AQ???WG??AW???EC???DG????",
    "_?????????????????????@K?BO?R?B_?Aa?@D?@?c?@D??CP??OQ??@_C??c?_?W?O?AI???DG???E_????",
];

const ROWS: [Row; 14] = [
    Row { n: 4, bipartite: false, description: "Complete graph K4", recipe: "complete(4)", build: || complete(4).expect("K4") },
    Row { n: 10, bipartite: false, description: "Petersen graph", recipe: "petersen()", build: petersen },
    Row {
        n: 10,
        bipartite: false,
        description: "K3,3 with two white vertices truncated",
        recipe: "truncate(complete_bipartite(3,3), [0,1])",
        build: || {
            let (g, w) = k33_white();
            truncate(&g, &w[..2]).expect("cubic")
        },
    },
    Row {
        n: 12,
        bipartite: false,
        description: "Petersen with one vertex truncated",
        recipe: "truncate(petersen(), [0])",
        build: petersen_truncated,
    },
    Row {
        n: 12,
        bipartite: false,
        description: "K3,3 with three white vertices truncated",
        recipe: "truncate(complete_bipartite(3,3), [0,1,2])",
        build: || {
            let (g, w) = k33_white();
            truncate(&g, &w).expect("cubic")
        },
    },
    Row { n: 14, bipartite: true, description: "Heawood graph", recipe: "heawood()", build: heawood },
    Row {
        n: 16,
        bipartite: true,
        description: "Moebius-Kantor graph, generalized Petersen G(8,3)",
        recipe: "generalized_petersen(8,3)",
        build: moebius_kantor,
    },
    Row {
        n: 16,
        bipartite: false,
        description: "Cube with four white vertices truncated",
        recipe: "truncate(cube(), colour class 0)",
        build: cube_white_truncated,
    },
    Row {
        n: 20,
        bipartite: true,
        description: "Desargues graph, generalized Petersen G(10,3)",
        recipe: "generalized_petersen(10,3)",
        build: desargues,
    },
    Row {
        n: 20,
        bipartite: true,
        description: "Cospectral mate of the Desargues graph",
        recipe: "girth6_pipeline(line_graph(K5)), the member not isomorphic to Desargues",
        build: desargues_mate,
    },
    Row {
        n: 24,
        bipartite: true,
        description: "Bipartite double of either 12-vertex example",
        recipe: "bipartite_double(truncate(petersen(), [0]))",
        build: || bipartite_double(&petersen_truncated()).expect("24 vertices"),
    },
    Row {
        n: 24,
        bipartite: true,
        description: "Bicirculant: incidence graph of {a,a+1,a+3} in circulant(12,{1,2,3})",
        recipe: "incidence_graph(circulant12_geometry())",
        build: || incidence_graph(&circulant12_geometry()).expect("24 vertices"),
    },
    Row {
        n: 32,
        bipartite: true,
        description: "Incidence graph of the triangle decomposition of a 16-vertex host with automorphism group of order 6",
        recipe: "girth6_pipeline(exceptional_host16())",
        build: exceptional_incidence,
    },
    Row {
        n: 32,
        bipartite: true,
        description: "Bipartite double of the cube with four vertices truncated",
        recipe: "bipartite_double(truncate(cube(), colour class 0))",
        build: || bipartite_double(&cube_white_truncated()).expect("32 vertices"),
    },
];

fn registry() -> &'static [SporadicEntry] {
    static REG: OnceLock<Vec<SporadicEntry>> = OnceLock::new();
    REG.get_or_init(|| {
        ROWS.iter()
            .enumerate()
            .map(|(i, r)| {
                let graph = (r.build)();
                SporadicEntry {
                    id: i + 1,
                    n: r.n,
                    bipartite: r.bipartite,
                    description: r.description,
                    recipe: r.recipe,
                    canonical_graph6: canonical_graph6(&graph),
                    graph,
                }
            })
            .collect()
    })
}

pub fn sporadic(id: usize) -> Result<&'static SporadicEntry, FamilyError> {
    registry()
        .get(id.wrapping_sub(1))
        .ok_or(FamilyError::SporadicId(id))
}

pub fn sporadic_all() -> &'static [SporadicEntry] {
    registry()
}

/// The registry as a JSON array (id, n, bipartite, description, graph6).
pub fn sporadic_manifest_json() -> serde_json::Value {
    serde_json::Value::Array(
        registry()
            .iter()
            .map(|e| {
                serde_json::json!({
                    "id": e.id,
                    "n": e.n,
                    "bipartite": e.bipartite,
                    "description": e.description,
                    "graph6": e.canonical_graph6,
                })
            })
            .collect(),
    )
}

/// Identify `g` among KS(k), GM(k) and the sporadic registry.
pub fn identify(g: &Graph) -> Option<FamilyTag> {
    let n = g.order();
    if n.is_multiple_of(4) && n >= 8 && g.is_cubic() {
        let k = n / 4;
        if are_isomorphic(g, &guo_mohar(k).ok()?) {
            return Some(FamilyTag::GuoMohar(k));
        }
        if are_isomorphic(g, &kollar_sarnak(k).ok()?) {
            return Some(FamilyTag::KollarSarnak(k));
        }
    }
    let c = canonical_graph6(g);
    registry()
        .iter()
        .find(|e| e.n == n && e.canonical_graph6 == c)
        .map(|e| FamilyTag::Sporadic(e.id))
}

/// graph6 under the constructor's own labelling.
pub fn graph6_of(tag: FamilyTag) -> Result<String, FamilyError> {
    Ok(to_graph6(&family_graph(tag)?))
}
